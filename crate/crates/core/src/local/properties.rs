//! Brute-force checkers for list-decoding, list-recovery and general local
//! properties of small codes.

use num_rational::Ratio;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::types::{vector_at, TypeDistribution};
use crate::code::{distance, enumerate_codewords, LinearCode};
use crate::error::{Error, Result};
use crate::tape::trial_seed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PropertyKind {
    ListDecoding,
    ListRecovery,
    LocalProperty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Satisfied,
    Violated,
    /// Sampled search found nothing; this is not a proof of the property.
    NoViolationFound,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyParams {
    /// Normalized radius as `"num/den"`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<String>,
    /// Absolute radius `⌊ρn⌋`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<usize>,
    #[serde(rename = "L", skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forbidden_types: Option<usize>,
}

/// Everything needed to re-check a violation by hand.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center: Option<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lists: Option<Vec<Vec<u8>>>,
    /// Index into the forbidden list of the matched type.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub type_index: Option<usize>,
    pub codewords: Vec<Vec<u8>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub kind: PropertyKind,
    pub params: PropertyParams,
    pub verdict: Verdict,
    pub mode: SearchMode,
    /// Centers, list tuples or codeword tuples examined.
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl PropertyReport {
    pub fn violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Exhaustive,
    Sampled,
}

/// How list-decoding centers are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CenterMode {
    /// Every `z ∈ F_q^n`; needs `q^n` within budget.
    Exhaustive,
    /// Even trials draw a uniform center, odd trials perturb a random
    /// codeword in exactly `⌊ρn⌋` random positions.
    Sampled { trials: u64, seed: u64 },
}

/// Radius `⌊ρn⌋` for a normalized `ρ ∈ [0, 1]`.
fn radius(rho: Ratio<usize>, n: usize) -> Result<usize> {
    if rho > Ratio::from_integer(1) {
        return Err(Error::DomainError(format!("radius {rho} exceeds 1")));
    }
    Ok((rho * n).to_integer())
}

fn check_l(l: usize) -> Result<()> {
    if l == 0 {
        return Err(Error::DomainError("list size L must be at least 1".into()));
    }
    Ok(())
}

fn codeword_list(code: &LinearCode, budget: u128) -> Result<Vec<Vec<u8>>> {
    Ok(enumerate_codewords(code, budget)?.collect())
}

fn pow_checked(base: u128, e: usize) -> u128 {
    base.checked_pow(e as u32).unwrap_or(u128::MAX)
}

/// Whether every Hamming ball of radius `⌊ρn⌋` holds fewer than `L`
/// codewords (strict, so `L = 2` asks for unique decoding).
pub fn check_list_decodable(
    code: &LinearCode,
    rho: Ratio<usize>,
    l: usize,
    mode: CenterMode,
    budget: u128,
) -> Result<PropertyReport> {
    check_l(l)?;
    let (n, q) = (code.n(), code.q());
    let r = radius(rho, n)?;
    let words = codeword_list(code, budget)?;
    let params = PropertyParams {
        rho: Some(rho.to_string()),
        radius: Some(r),
        l: Some(l),
        ..Default::default()
    };
    let witness_at = |z: Vec<u8>| Witness {
        codewords: words.iter().filter(|c| distance(c, &z) <= r).cloned().collect(),
        center: Some(z),
        ..Default::default()
    };
    match mode {
        CenterMode::Exhaustive => {
            let space = pow_checked(q as u128, n);
            if space > budget {
                return Err(Error::BudgetExceeded { needed: space, budget });
            }
            let mut counts = vec![0u32; space as usize];
            let weights: Vec<usize> = (0..n).map(|i| q.pow((n - 1 - i) as u32)).collect();
            for c in &words {
                let base: usize = c.iter().zip(&weights).map(|(&s, &w)| s as usize * w).sum();
                ball(c, q, &weights, r, 0, base, &mut counts);
            }
            let verdict_at = counts.iter().position(|&c| c as usize >= l);
            Ok(PropertyReport {
                kind: PropertyKind::ListDecoding,
                params,
                verdict: if verdict_at.is_some() { Verdict::Violated } else { Verdict::Satisfied },
                mode: SearchMode::Exhaustive,
                checked: space as u64,
                witness: verdict_at.map(|z| witness_at(vector_at(q as u64, n, z as u64))),
            })
        }
        CenterMode::Sampled { trials, seed } => {
            let hit = (0..trials).into_par_iter().find_map_first(|t| {
                let z = sampled_center(code, &words, r, seed, t);
                let inside = words.iter().filter(|c| distance(c, &z) <= r).count();
                (inside >= l).then_some(z)
            });
            Ok(PropertyReport {
                kind: PropertyKind::ListDecoding,
                params,
                verdict: if hit.is_some() { Verdict::Violated } else { Verdict::NoViolationFound },
                mode: SearchMode::Sampled,
                checked: trials,
                witness: hit.map(witness_at),
            })
        }
    }
}

/// Adds one to every center within distance `left` of `c`, changing only
/// positions `≥ from`.
fn ball(c: &[u8], q: usize, weights: &[usize], left: usize, from: usize, index: usize, counts: &mut [u32]) {
    counts[index] += 1;
    if left == 0 {
        return;
    }
    for i in from..c.len() {
        let here = index - c[i] as usize * weights[i];
        for s in 0..q {
            if s != c[i] as usize {
                ball(c, q, weights, left - 1, i + 1, here + s * weights[i], counts);
            }
        }
    }
}

fn sampled_center(code: &LinearCode, words: &[Vec<u8>], r: usize, seed: u64, t: u64) -> Vec<u8> {
    let mut rng = ChaCha20Rng::seed_from_u64(trial_seed(seed, t));
    let (n, q) = (code.n(), code.q() as u8);
    if t % 2 == 0 {
        return (0..n).map(|_| rng.random_range(0..q)).collect();
    }
    let mut z = words[rng.random_range(0..words.len())].clone();
    for i in sample(&mut rng, n, r.min(n)) {
        z[i] = (z[i] + rng.random_range(1..q)) % q;
    }
    z
}

/// How list-recovery input lists are supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ListMode {
    /// Every tuple of `min(λ, q)`-subsets; smaller lists only shrink the count.
    Exhaustive,
    /// Explicit tuples `(S_1, …, S_n)`.
    Explicit(Vec<Vec<Vec<u8>>>),
}

fn subsets(q: usize, size: usize) -> Vec<Vec<u8>> {
    fn rec(q: usize, size: usize, start: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for s in start..q {
            cur.push(s as u8);
            rec(q, size, s + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(q, size, 0, &mut Vec::new(), &mut out);
    out
}

/// Whether every tuple of input lists with `|S_i| ≤ λ` has fewer than `L`
/// codewords disagreeing with it in at most `⌊ρn⌋` positions.
pub fn check_list_recoverable(
    code: &LinearCode,
    rho: Ratio<usize>,
    lambda: usize,
    l: usize,
    lists: ListMode,
    budget: u128,
) -> Result<PropertyReport> {
    check_l(l)?;
    let (n, q) = (code.n(), code.q());
    let r = radius(rho, n)?;
    let words = codeword_list(code, budget)?;
    let params = PropertyParams {
        rho: Some(rho.to_string()),
        radius: Some(r),
        l: Some(l),
        lambda: Some(lambda),
        ..Default::default()
    };
    let members = |tuple: &[Vec<u8>]| -> Vec<Vec<bool>> {
        tuple
            .iter()
            .map(|s| (0..q).map(|v| s.contains(&(v as u8))).collect())
            .collect()
    };
    let close = |mask: &[Vec<bool>]| -> Vec<Vec<u8>> {
        words
            .iter()
            .filter(|c| c.iter().zip(mask).filter(|(&s, m)| !m[s as usize]).count() <= r)
            .cloned()
            .collect()
    };
    let mut checked = 0u64;
    let mut found = None;
    match lists {
        ListMode::Explicit(tuples) => {
            for tuple in &tuples {
                if tuple.len() != n {
                    return Err(Error::LengthMismatch { expected: n, got: tuple.len() });
                }
                for (position, s) in tuple.iter().enumerate() {
                    if s.len() > lambda {
                        return Err(Error::BadListSize { position, size: s.len(), lambda });
                    }
                    if s.iter().any(|&v| v as usize >= q) {
                        return Err(Error::DomainError(format!("list {position} has a symbol outside F_{q}")));
                    }
                }
            }
            for tuple in tuples {
                checked += 1;
                let hits = close(&members(&tuple));
                if hits.len() >= l {
                    found = Some((tuple, hits));
                    break;
                }
            }
        }
        ListMode::Exhaustive => {
            let choices = subsets(q, lambda.min(q));
            let total = pow_checked(choices.len() as u128, n);
            if total > budget {
                return Err(Error::BudgetExceeded { needed: total, budget });
            }
            let mut digits = vec![0usize; n];
            loop {
                checked += 1;
                let tuple: Vec<Vec<u8>> = digits.iter().map(|&d| choices[d].clone()).collect();
                let hits = close(&members(&tuple));
                if hits.len() >= l {
                    found = Some((tuple, hits));
                    break;
                }
                let Some(i) = (0..n).rev().find(|&i| digits[i] + 1 < choices.len()) else {
                    break;
                };
                digits[i] += 1;
                digits[i + 1..].fill(0);
            }
        }
    }
    Ok(PropertyReport {
        kind: PropertyKind::ListRecovery,
        params,
        verdict: if found.is_some() { Verdict::Violated } else { Verdict::Satisfied },
        mode: SearchMode::Exhaustive,
        checked,
        witness: found.map(|(lists, codewords)| Witness {
            lists: Some(lists),
            codewords,
            ..Default::default()
        }),
    })
}

/// Row-cell multiplicities `n·τ(v)` indexed lexicographically over `F_q^b`.
pub(crate) fn cell_counts(tau: &TypeDistribution, n: usize) -> Option<Vec<usize>> {
    let q = tau.q() as usize;
    let mut cells = vec![0usize; q.pow(tau.b() as u32)];
    for (v, c) in tau.counts(n)? {
        let idx = v.iter().fold(0usize, |acc, &s| acc * q + s as usize);
        cells[idx] = c;
    }
    Some(cells)
}

/// Calls `hit` for every ordered `b`-tuple of words whose `n × b` matrix
/// (words as columns) has row counts `target`; returns the number of hits.
pub(crate) fn matching_tuples(
    words: &[Vec<u8>],
    q: usize,
    b: usize,
    target: &[usize],
    hit: &mut dyn FnMut(&[usize]) -> bool,
) -> u64 {
    let n = words.first().map_or(0, Vec::len);
    let mut picks = vec![0usize; b];
    let mut cells = vec![vec![0usize; n]; b + 1];
    let mut found = 0u64;
    let mut counts = vec![0usize; target.len()];
    fn rec(
        depth: usize,
        words: &[Vec<u8>],
        q: usize,
        target: &[usize],
        picks: &mut [usize],
        cells: &mut [Vec<usize>],
        counts: &mut [usize],
        found: &mut u64,
        hit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if depth == picks.len() {
            counts.fill(0);
            for &c in &cells[depth] {
                counts[c] += 1;
            }
            if counts == target {
                *found += 1;
                return hit(picks);
            }
            return true;
        }
        for (j, w) in words.iter().enumerate() {
            picks[depth] = j;
            let (prev, next) = cells.split_at_mut(depth + 1);
            for ((dst, &src), &s) in next[0].iter_mut().zip(&prev[depth]).zip(w) {
                *dst = src * q + s as usize;
            }
            if !rec(depth + 1, words, q, target, picks, cells, counts, found, hit) {
                return false;
            }
        }
        true
    }
    rec(0, words, q, target, &mut picks, &mut cells, &mut counts, &mut found, hit);
    found
}

/// Whether no ordered tuple of codewords has any of the `forbidden` row
/// distributions. Types with fractional `n·τ(v)` are skipped as vacuous.
pub fn check_local_property(code: &LinearCode, forbidden: &[TypeDistribution], budget: u128) -> Result<PropertyReport> {
    let (n, q) = (code.n(), code.q());
    let words = codeword_list(code, budget)?;
    let mut checked = 0u64;
    let mut found = None;
    for (t, tau) in forbidden.iter().enumerate() {
        if tau.q() as usize != q {
            return Err(Error::DimensionMismatch(format!("type over F_{} for a code over F_{q}", tau.q())));
        }
        let Some(target) = cell_counts(tau, n) else {
            continue;
        };
        let needed = pow_checked(words.len() as u128, tau.b());
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        checked += needed as u64;
        let mut witness = None;
        matching_tuples(&words, q, tau.b(), &target, &mut |picks| {
            witness = Some(picks.iter().map(|&j| words[j].clone()).collect::<Vec<_>>());
            false
        });
        if let Some(codewords) = witness {
            found = Some(Witness {
                type_index: Some(t),
                codewords,
                ..Default::default()
            });
            break;
        }
    }
    Ok(PropertyReport {
        kind: PropertyKind::LocalProperty,
        params: PropertyParams {
            forbidden_types: Some(forbidden.len()),
            ..Default::default()
        },
        verdict: if found.is_some() { Verdict::Violated } else { Verdict::Satisfied },
        mode: SearchMode::Exhaustive,
        checked,
        witness: found,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{min_distance, DEFAULT_BUDGET};
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn r(a: usize, b: usize) -> Ratio<usize> {
        Ratio::new(a, b)
    }

    fn ld(code: &LinearCode, rho: Ratio<usize>, l: usize) -> PropertyReport {
        check_list_decodable(code, rho, l, CenterMode::Exhaustive, DEFAULT_BUDGET).unwrap()
    }

    /// Direct definition: scan every center and every codeword.
    fn ld_oracle(code: &LinearCode, rho: Ratio<usize>, l: usize) -> bool {
        let words: Vec<Vec<u8>> = enumerate_codewords(code, DEFAULT_BUDGET).unwrap().collect();
        let rad = (rho * code.n()).to_integer();
        let total = (code.q() as u64).pow(code.n() as u32);
        (0..total).all(|i| {
            let z = vector_at(code.q() as u64, code.n(), i);
            words.iter().filter(|c| distance(c, &z) <= rad).count() < l
        })
    }

    #[test]
    fn list_decoding_examples() {
        let zero = LinearCode::from_generator(2, 4, vec![]).unwrap();
        assert_eq!(ld(&zero, r(3, 4), 2).verdict, Verdict::Satisfied);
        let rep = LinearCode::from_generator(2, 3, vec![vec![1, 1, 1]]).unwrap();
        assert_eq!(ld(&rep, r(1, 3), 2).verdict, Verdict::Satisfied);
        let full = LinearCode::from_generator(2, 2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let rep2 = ld(&full, r(1, 2), 2);
        assert_eq!(rep2.verdict, Verdict::Violated);
        let w = rep2.witness.unwrap();
        assert_eq!(w.center, Some(vec![0, 0]));
        assert_eq!(w.codewords, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        assert!(check_list_decodable(&full, r(1, 2), 0, CenterMode::Exhaustive, DEFAULT_BUDGET).is_err());
        assert!(matches!(
            check_list_decodable(&full, r(1, 2), 2, CenterMode::Exhaustive, 2),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn sampled_centers_find_dense_balls() {
        let full = LinearCode::from_generator(2, 6, (0..6).map(|i| (0..6).map(|j| u8::from(i == j)).collect()).collect()).unwrap();
        let mode = CenterMode::Sampled { trials: 10, seed: 9 };
        let rep = check_list_decodable(&full, r(1, 6), 3, mode, DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.verdict, Verdict::Violated);
        let w = rep.witness.unwrap();
        assert!(w.codewords.len() >= 3);
        assert!(w.codewords.iter().all(|c| distance(c, w.center.as_ref().unwrap()) <= 1));
        let rep5 = LinearCode::from_generator(2, 5, vec![vec![1; 5]]).unwrap();
        let ok = check_list_decodable(&rep5, r(1, 5), 2, mode, DEFAULT_BUDGET).unwrap();
        assert_eq!(ok.verdict, Verdict::NoViolationFound);
        assert_eq!(ok, check_list_decodable(&rep5, r(1, 5), 2, mode, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn list_recovery_examples() {
        let even = LinearCode::from_generator(2, 4, vec![vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![0, 0, 1, 1]]).unwrap();
        // All-symbol lists at ρ = 0: violated iff |C| ≥ L.
        for l in [7, 8, 9] {
            let rep = check_list_recoverable(&even, r(0, 1), 2, l, ListMode::Exhaustive, DEFAULT_BUDGET).unwrap();
            assert_eq!(rep.violated(), 8 >= l, "L={l}");
        }
        let zero = LinearCode::from_generator(2, 4, vec![]).unwrap();
        let rep = check_list_recoverable(&zero, r(1, 1), 2, 2, ListMode::Exhaustive, DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.verdict, Verdict::Satisfied);
        let bad = ListMode::Explicit(vec![vec![vec![0, 1], vec![0], vec![0], vec![0]]]);
        assert!(matches!(
            check_list_recoverable(&even, r(1, 4), 1, 2, bad, DEFAULT_BUDGET),
            Err(Error::BadListSize { position: 0, size: 2, lambda: 1 })
        ));
        let explicit = ListMode::Explicit(vec![vec![vec![0], vec![0], vec![0], vec![1]]]);
        let rep = check_list_recoverable(&even, r(1, 4), 1, 3, explicit, DEFAULT_BUDGET).unwrap();
        assert!(rep.violated());
        assert_eq!(rep.witness.unwrap().codewords.len(), 4);
    }

    fn point(q: u64, v: Vec<u8>) -> TypeDistribution {
        TypeDistribution::point_mass(q, v).unwrap()
    }

    fn weight_type(n: usize, w: usize) -> TypeDistribution {
        TypeDistribution::from_counts(2, 1, [(vec![0], n - w), (vec![1], w)]).unwrap()
    }

    #[test]
    fn local_property_examples() {
        let even = LinearCode::from_generator(2, 4, vec![vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![0, 0, 1, 1]]).unwrap();
        assert!(check_local_property(&even, &[point(2, vec![0])], DEFAULT_BUDGET).unwrap().violated());
        let half = TypeDistribution::new(
            2,
            1,
            [(vec![0], BigRational::new(BigInt::from(1), BigInt::from(3))), (vec![1], BigRational::new(BigInt::from(2), BigInt::from(3)))],
            None,
        )
        .unwrap();
        let vacuous = check_local_property(&even, &[half], DEFAULT_BUDGET).unwrap();
        assert_eq!(vacuous.verdict, Verdict::Satisfied);
        assert_eq!(vacuous.checked, 0);
        // Forbidding nonzero weights up to 2 encodes "distance > 2".
        for code in [
            even.clone(),
            LinearCode::from_generator(2, 4, vec![vec![1, 1, 1, 1]]).unwrap(),
            LinearCode::from_generator(2, 4, vec![vec![1, 1, 1, 0], vec![0, 1, 1, 1]]).unwrap(),
        ] {
            let forbidden = [weight_type(4, 1), weight_type(4, 2)];
            let rep = check_local_property(&code, &forbidden, DEFAULT_BUDGET).unwrap();
            let d = min_distance(&code, DEFAULT_BUDGET).unwrap().distance;
            assert_eq!(rep.verdict == Verdict::Satisfied, d > 2, "{code:?}");
        }
    }

    #[test]
    fn tuple_counting_matches_definition() {
        let code = LinearCode::from_generator(2, 4, vec![vec![1, 1, 0, 0], vec![0, 1, 1, 1]]).unwrap();
        let words: Vec<Vec<u8>> = enumerate_codewords(&code, DEFAULT_BUDGET).unwrap().collect();
        for tau in super::super::types::enumerate_types(2, 2, 4).unwrap() {
            let target = cell_counts(&tau, 4).unwrap();
            let fast = matching_tuples(&words, 2, 2, &target, &mut |_| true);
            let mut slow = 0;
            for a in &words {
                for b in &words {
                    let m = crate::linalg::Matrix::from_rows(2, vec![a.clone(), b.clone()]).unwrap().transpose();
                    if super::super::types::empirical_row_distribution(2, &m).unwrap() == tau {
                        slow += 1;
                    }
                }
            }
            assert_eq!(fast, slow);
        }
    }

    fn small_code() -> impl Strategy<Value = LinearCode> {
        (prop::sample::select(vec![2u64, 3]), 1usize..=3, 2usize..=6).prop_flat_map(|(q, k, n)| {
            prop::collection::vec(prop::collection::vec(0..q as u8, n), k)
                .prop_map(move |rows| LinearCode::from_generator(q, n, rows).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        // Satisfied at L stays satisfied at L + 1; violated at ρ stays
        // violated at any larger ρ; both agree with the direct definition.
        #[test]
        fn list_decoding_monotone(code in small_code(), num in 0usize..=4, l in 1usize..=4) {
            let rho = r(num, 4);
            let here = ld(&code, rho, l);
            prop_assert_eq!(here.verdict == Verdict::Satisfied, ld_oracle(&code, rho, l));
            if here.verdict == Verdict::Satisfied {
                prop_assert_eq!(ld(&code, rho, l + 1).verdict, Verdict::Satisfied);
            } else {
                let w = here.witness.unwrap();
                prop_assert!(w.codewords.len() >= l);
                if num < 4 {
                    prop_assert!(ld(&code, r(num + 1, 4), l).violated());
                }
            }
        }

        // Singleton lists are list-decoding centers.
        #[test]
        fn singleton_lists_match_centers(rows in prop::collection::vec(prop::collection::vec(0u8..2, 4), 1..=3), num in 0usize..=2, l in 1usize..=4) {
            let code = LinearCode::from_generator(2, 4, rows).unwrap();
            let rec = check_list_recoverable(&code, r(num, 4), 1, l, ListMode::Exhaustive, DEFAULT_BUDGET).unwrap();
            prop_assert_eq!(rec.verdict, ld(&code, r(num, 4), l).verdict);
        }
    }
}
