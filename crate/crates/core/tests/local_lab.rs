//! Exact checks of the containment and similarity estimators against
//! closed forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use pseudocodes::ensembles::EnsembleSpec;
use pseudocodes::field::BaseField;
use pseudocodes::linalg::Matrix;
use pseudocodes::local::{
    estimate_containment, estimate_containment_many, similarity_expectation, vector_at, BoundVerdict, EstimateMode,
    TypeDistribution,
};

fn all_full_rank(q: u64, n: usize, b: usize) -> Vec<Matrix> {
    let f = BaseField::get(q).unwrap();
    let total = q.pow((n * b) as u32);
    (0..total)
        .map(|i| Matrix::from_rows(q as usize, vector_at(q, n * b, i).chunks(b).map(<[u8]>::to_vec).collect()).unwrap())
        .filter(|m| m.rank(&f) == b)
        .collect()
}

fn frac(a: u64, b: u64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

// A uniform parity-check matrix puts a full-rank A in its kernel with
// probability exactly q^{-(n-k)b}.
#[test]
fn random_linear_codes_meet_the_bound_with_equality() {
    let spec = EnsembleSpec::rlc(2, 4, 2);
    for b in 1..=2 {
        let mats = all_full_rank(2, 4, b);
        for e in estimate_containment_many(&spec, &mats, EstimateMode::Exhaustive, false).unwrap() {
            assert_eq!(e.probability(), frac(1, 1 << (2 * b)));
            assert_eq!(e.verdict, BoundVerdict::Holds);
        }
    }
}

#[test]
fn pclp_primal_bound_over_every_tape() {
    let spec = EnsembleSpec::pclp(2, 5, 2, 2);
    for b in 1..=2 {
        let mats = all_full_rank(2, 5, b);
        for e in estimate_containment_many(&spec, &mats, EstimateMode::Exhaustive, false).unwrap() {
            assert!(e.probability() <= frac(1, 1 << (3 * b)), "{e:?}");
        }
    }
}

#[test]
fn pcrcp_dual_equality_at_two_columns() {
    let spec = EnsembleSpec::pcrcp(2, 3, 1, 2);
    for e in estimate_containment_many(&spec, &all_full_rank(2, 3, 2), EstimateMode::Exhaustive, true).unwrap() {
        assert_eq!(e.probability(), frac(1, 4));
    }
}

#[test]
fn similarity_for_point_masses_is_containment() {
    let spec = EnsembleSpec::pclp(2, 5, 2, 2);
    let ones = TypeDistribution::point_mass(2, vec![1]).unwrap();
    let sim = similarity_expectation(&spec, &ones, EstimateMode::Exhaustive, 1 << 20).unwrap();
    let col = Matrix::from_rows(2, vec![vec![1]; 5]).unwrap();
    let direct = estimate_containment(&spec, &col, EstimateMode::Exhaustive, false).unwrap();
    assert_eq!(sim.expectation_exact(), direct.probability());
    assert!(sim.context_ratio > 0.0);
}

#[test]
fn monte_carlo_brackets_the_exact_value() {
    let spec = EnsembleSpec::pclp(2, 6, 3, 2);
    let x = Matrix::from_rows(2, vector_at(2, 6, 37).into_iter().map(|s| vec![s]).collect()).unwrap();
    let exact = estimate_containment(&spec, &x, EstimateMode::Exhaustive, false).unwrap();
    let mc = estimate_containment(&spec, &x, EstimateMode::MonteCarlo { trials: 20_000, seed: 11 }, false).unwrap();
    let (lo, hi) = mc.interval.unwrap();
    assert!(lo <= exact.estimate && exact.estimate <= hi, "{exact:?} vs {mc:?}");
}
