//! Randomness accounting, audit invariants and code-file round trips.

use num_rational::Ratio;
use pseudocodes::audit::{audit_report, default_grid, lower_bound_bits, nominal_bits};
use pseudocodes::code::{dual_code, EnsembleKind};
use pseudocodes::ensembles::{pclp_dual, sample_pclp, EnsembleSpec};
use pseudocodes::io::{code_from_json, code_to_json};
use pseudocodes::tape::RandomnessTape;

fn grid() -> Vec<(u64, usize, usize, usize)> {
    (0..50)
        .map(|i| {
            let k = 1 + i % 5;
            ([2u64, 4, 8][i % 3], k, 2 + (i / 3) % 3, 1 + i % 4)
        })
        .collect()
}

#[test]
fn measured_bits_equal_nominal() {
    for (i, (q, k, r, ell)) in grid().into_iter().enumerate() {
        let n = r * k;
        for spec in [
            EnsembleSpec::pclp(q, n, k, ell),
            EnsembleSpec::pcrcp(q, n, k, ell),
            EnsembleSpec::wozencraft(q, k, r, ell),
            EnsembleSpec::rlc(q, n, k),
        ] {
            let code = spec.sample_trial(77, i as u64).unwrap();
            assert_eq!(Some(code.provenance().bits_consumed), spec.nominal_bits().ok(), "{spec:?}");
        }
    }
}

#[test]
fn lower_bound_below_nominal() {
    for (q, k, r, ell) in grid() {
        let n = r * k;
        let lb = lower_bound_bits(q, n, ell, Ratio::new(k as u64, n as u64)).unwrap();
        assert!(lb <= nominal_bits(EnsembleKind::Pclp, q, n, k, ell).unwrap());
        assert!(lb <= nominal_bits(EnsembleKind::Pcrcp, q, n, k, ell).unwrap());
        // Tight for the Wozencraft ensemble at R = 1/r.
        assert_eq!(lb, nominal_bits(EnsembleKind::Wozencraft, q, n, k, ell).unwrap());
    }
}

#[test]
fn audit_rows_measure_their_nominal_bits() {
    let rows = audit_report(&default_grid(), 3).unwrap();
    assert_eq!(rows.len(), 16);
    for row in rows.iter().filter(|r| !r.literature) {
        if row.ensemble.is_some() {
            assert_eq!(row.measured_bits, row.nominal_bits, "{row:?}");
        }
    }
}

#[test]
fn code_files_are_lossless() {
    for (i, (q, k, r, ell)) in grid().into_iter().enumerate().take(20) {
        let n = r * k;
        for spec in [
            EnsembleSpec::pclp(q, n, k, ell),
            EnsembleSpec::pcrcp(q, n, k, ell),
            EnsembleSpec::wozencraft(q, k, r, ell),
            EnsembleSpec::rlc(q, n, k),
        ] {
            let code = spec.sample_trial(5, i as u64).unwrap();
            let json = code_to_json(&code);
            let back = code_from_json(&json).unwrap();
            assert_eq!(back, code);
            assert_eq!(code_to_json(&back), json);
        }
    }
}

#[test]
fn algebraic_duals_over_larger_fields() {
    let mut agreed = 0;
    for seed in 0..40 {
        for (q, n, k, ell) in [(3u64, 6usize, 2usize, 2usize), (4, 5, 3, 2), (2, 10, 5, 4)] {
            let pc = sample_pclp(q, n, k, ell, &mut RandomnessTape::seeded(seed)).unwrap();
            if let Ok(d) = pclp_dual(&pc) {
                let code = pc.code();
                assert!(d.generator().same_row_space(code.base(), dual_code(code).generator()));
                agreed += 1;
            }
        }
    }
    assert!(agreed > 100);
}
