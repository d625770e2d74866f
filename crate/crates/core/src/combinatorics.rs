//! Exact combinatorics: Stirling numbers of the second kind, ordered
//! compositions, multinomials and the Durfee coefficient `C(n, r)`.
//!
//! Everything here is integer or rational arithmetic; no floating point.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::check::Check;
use crate::error::{Error, Result};

/// An ordered composition `(k_1, ..., k_r)` of `n = k_1 + ... + k_r` into
/// non-negative parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn r(&self) -> usize {
        self.parts.len()
    }

    pub fn all_positive(&self) -> bool {
        self.parts.iter().all(|&k| k > 0)
    }

    /// The composition with every part increased by one.
    pub fn shifted(&self) -> Composition {
        Composition::new(self.parts.iter().map(|k| k + 1).collect())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
            first = false;
        }
        Ok(())
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `p (p-1) ... (p-len+1)`; zero as soon as a factor vanishes.
pub fn falling_factorial(p: i64, len: u32) -> BigInt {
    (0..len as i64).fold(BigInt::one(), |acc, i| acc * (p - i))
}

/// Stirling number of the second kind `S(m, r)`: partitions of an `m`-set
/// into `r` non-empty blocks. `S(0, 0) = 1` and `S(m, r) = 0` for `r > m`.
pub fn stirling2(m: u32, r: u32) -> BigInt {
    if r > m {
        return BigInt::zero();
    }
    // row[j] = S(i, j) for the current i
    let mut row = vec![BigInt::zero(); r as usize + 1];
    row[0] = BigInt::one();
    for _ in 0..m {
        for j in (1..=r as usize).rev() {
            row[j] = &row[j] * j + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[r as usize].clone()
}

/// `S(m, r)` through the explicit alternating sum
/// `(1/r!) Σ_j (-1)^j C(r, j) (r-j)^m`.
pub fn stirling2_explicit(m: u32, r: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 0..=r {
        let term = binomial(r as i64, j as i64) * num_traits::pow(BigInt::from(r - j), m as usize);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc / factorial(r)
}

/// All ordered compositions of `n` into `r` non-negative parts, in
/// lexicographically descending order (largest `k_1` first). Empty when
/// `r <= 0` or `n < 0`.
pub fn compositions(n: i64, r: i64) -> Vec<Composition> {
    if r <= 0 || n < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(r as usize);
    fill_compositions(n as u32, r as usize, &mut current, &mut out);
    out
}

fn fill_compositions(remaining: u32, slots: usize, current: &mut Vec<u32>, out: &mut Vec<Composition>) {
    if slots == 1 {
        current.push(remaining);
        out.push(Composition::new(current.clone()));
        current.pop();
        return;
    }
    for k in (0..=remaining).rev() {
        current.push(k);
        fill_compositions(remaining - k, slots - 1, current, out);
        current.pop();
    }
}

/// Compositions of `n` into `r` strictly positive parts.
pub fn positive_compositions(n: i64, r: i64) -> Vec<Composition> {
    compositions(n, r).into_iter().filter(Composition::all_positive).collect()
}

/// All `j`-element subsets of `{0, …, n−1}` as sorted index lists, in
/// lexicographic order.
pub fn subsets(n: usize, j: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, j: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == j {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < j - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, j, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if j <= n {
        go(0, n, j, &mut Vec::with_capacity(j), &mut out);
    }
    out
}

/// `total! / Π parts!`.
pub fn multinomial(total: i64, parts: &[i64]) -> Result<BigInt> {
    if parts.iter().any(|&k| k < 0) || total < 0 {
        return Err(Error::Precondition(format!("multinomial parts must be non-negative: {parts:?}")));
    }
    let sum: i64 = parts.iter().sum();
    if sum != total {
        return Err(Error::Precondition(format!("multinomial parts {parts:?} sum to {sum}, not {total}")));
    }
    let denom = parts.iter().fold(BigInt::one(), |acc, &k| acc * factorial(k as u32));
    Ok(factorial(total as u32) / denom)
}

pub(crate) fn multinomial_of(total: u32, parts: &[u32]) -> BigInt {
    let denom = parts.iter().fold(BigInt::one(), |acc, &k| acc * factorial(k));
    factorial(total) / denom
}

/// The Durfee coefficient
/// `C(n, r) = C(n+r-1, n) (n+r)! / (S(n+r, r) r!)`,
/// cross-checked against `|K(n,r)| / Σ_{k ∈ K(n,r)} Π 1/(k_i+1)!`.
pub fn cnr(n: u32, r: u32) -> Result<BigRational> {
    if r == 0 {
        return Err(Error::Precondition("C(n, r) needs r >= 1".into()));
    }
    let stirling_form = cnr_stirling_form(n, r);
    let composition_form = cnr_composition_form(n, r);
    if stirling_form != composition_form {
        return Err(Error::Inconsistent(format!(
            "C({n},{r}): Stirling form {stirling_form} differs from composition form {composition_form}"
        )));
    }
    Ok(stirling_form)
}

fn cnr_stirling_form(n: u32, r: u32) -> BigRational {
    let num = binomial((n + r - 1) as i64, n as i64) * factorial(n + r);
    let den = stirling2(n + r, r) * factorial(r);
    BigRational::new(num, den)
}

fn cnr_composition_form(n: u32, r: u32) -> BigRational {
    let comps = compositions(n as i64, r as i64);
    let count = BigRational::from_integer(BigInt::from(comps.len()));
    let sum = comps.iter().fold(BigRational::zero(), |acc, k| {
        let denom = k.parts().iter().fold(BigInt::one(), |d, &ki| d * factorial(ki + 1));
        acc + BigRational::new(BigInt::one(), denom)
    });
    count / sum
}

/// Evaluates the inclusion-exclusion side of
/// `Σ_k A_k − Σ_i Σ_{k_i=0} A_k + Σ_{i<j} Σ_{k_i=k_j=0} A_k − ...`,
/// which equals the sum of `A_k` over compositions with all parts positive.
pub fn inclusion_exclusion_sum(n: i64, r: i64, weight: impl Fn(&Composition) -> BigInt) -> BigInt {
    let comps = compositions(n, r);
    if comps.is_empty() {
        return BigInt::zero();
    }
    let r = r as usize;
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << r) {
        let restricted: BigInt =
            comps.iter().filter(|k| (0..r).all(|i| mask & (1 << i) == 0 || k.parts()[i] == 0)).map(&weight).sum();
        if mask.count_ones() % 2 == 0 {
            total += restricted;
        } else {
            total -= restricted;
        }
    }
    total
}

/// Property report for `C(n, r)` over `1 <= n <= n_max`, `1 <= r <= r_max`.
#[derive(Debug, Clone, Serialize)]
pub struct CnrPropertyReport {
    pub n_max: u32,
    pub r_max: u32,
    pub checks: Vec<Check>,
}

impl CnrPropertyReport {
    pub fn all_passed(&self) -> bool {
        crate::check::all_passed(&self.checks)
    }
}

pub fn verify_cnr_properties(n_max: u32, r_max: u32) -> CnrPropertyReport {
    let grid: Vec<(u32, u32)> = (1..=n_max).flat_map(|n| (1..=r_max).map(move |r| (n, r))).collect();
    let mut checks = Vec::new();

    checks.push(Check::run("two forms of C(n,r) agree", grid.iter().copied(), |(n, r)| {
        cnr(n, r).map(|_| ()).map_err(|e| e.to_string())
    }));

    // C(1, r) = 2 for every r, so the strict comparisons start at n = 2
    let strict: Vec<(u32, u32)> = grid.iter().copied().filter(|&(n, _)| n >= 2).collect();
    checks.push(Check::run("C(1,r) = 2", (1..=r_max).filter(|_| n_max >= 1), |r| {
        let c = cnr_stirling_form(1, r);
        if c == BigRational::from_integer(BigInt::from(2)) {
            Ok(())
        } else {
            Err(format!("C(1,{r}) = {c}"))
        }
    }));

    checks.push(Check::run("C(n,r) > C(n,r+1)", strict.iter().copied(), |(n, r)| {
        let (a, b) = (cnr_stirling_form(n, r), cnr_stirling_form(n, r + 1));
        if a > b {
            Ok(())
        } else {
            Err(format!("C({n},{r}) = {a} <= C({n},{}) = {b}", r + 1))
        }
    }));

    checks.push(Check::run("C(n,r) > 2^n", strict.iter().copied(), |(n, r)| {
        let c = cnr_stirling_form(n, r);
        let bound = BigRational::from_integer(BigInt::one() << n);
        if c > bound {
            Ok(())
        } else {
            Err(format!("C({n},{r}) = {c} <= 2^{n}"))
        }
    }));

    checks.push(Check::run("Σ_k [(n+r)! − C(n,r)·multinomial(n+r; k+1)] = 0", grid.iter().copied(), |(n, r)| {
        let c = cnr_stirling_form(n, r);
        let full = BigRational::from_integer(factorial(n + r));
        let sum = compositions(n as i64, r as i64).iter().fold(BigRational::zero(), |acc, k| {
            let m = BigRational::from_integer(multinomial_of(n + r, k.shifted().parts()));
            acc + &full - &c * m
        });
        if sum.is_zero() {
            Ok(())
        } else {
            Err(format!("(n,r)=({n},{r}): sum = {sum}"))
        }
    }));

    checks.push(Check::run(
        "C(r,j) S(n+r,r) = Σ_i C(n+r,i) S(n+r−i,j) S(i,r−j)",
        grid.iter().flat_map(|&(n, r)| (0..=r).map(move |j| (n, r, j))),
        |(n, r, j)| {
            let m = n + r;
            let lhs = binomial(r as i64, j as i64) * stirling2(m, r);
            let rhs: BigInt =
                (0..=m).map(|i| binomial(m as i64, i as i64) * stirling2(m - i, j) * stirling2(i, r - j)).sum();
            if lhs == rhs {
                Ok(())
            } else {
                Err(format!("(n,r,j)=({n},{r},{j}): {lhs} != {rhs}"))
            }
        },
    ));

    CnrPropertyReport { n_max, r_max, checks }
}

/// `S(n+r-1, r) / S(n+r, r)`.
pub fn stirling_ratio(n: u32, r: u32) -> BigRational {
    BigRational::new(stirling2(n + r - 1, r), stirling2(n + r, r))
}

/// `2n / (n+r-1)^2`.
pub fn stirling_ratio_bound(n: u32, r: u32) -> BigRational {
    let base = BigInt::from(n + r - 1);
    BigRational::new(BigInt::from(2 * n), &base * &base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    /// Restricted-growth-string enumeration of set partitions.
    fn partitions_by_block_count(m: usize) -> Vec<u64> {
        let mut counts = vec![0u64; m + 1];
        if m == 0 {
            counts[0] = 1;
            return counts;
        }
        let mut rgs = vec![0usize; m];
        loop {
            let blocks = rgs.iter().max().unwrap() + 1;
            counts[blocks] += 1;
            // next restricted growth string
            let mut i = m - 1;
            loop {
                let prefix_max = rgs[..i].iter().max().copied().unwrap_or(0);
                if i > 0 && rgs[i] <= prefix_max {
                    rgs[i] += 1;
                    for x in rgs.iter_mut().skip(i + 1) {
                        *x = 0;
                    }
                    break;
                }
                if i == 0 {
                    return counts;
                }
                i -= 1;
            }
        }
    }

    #[test]
    fn stirling_matches_set_partition_enumeration() {
        for m in 0..=10usize {
            let counts = partitions_by_block_count(m);
            for (r, &count) in counts.iter().enumerate().take(m + 1) {
                assert_eq!(stirling2(m as u32, r as u32), BigInt::from(count), "S({m},{r})");
                assert_eq!(stirling2_explicit(m as u32, r as u32), BigInt::from(count));
            }
        }
    }

    #[test]
    fn stirling_known_values() {
        for m in 1..12 {
            assert_eq!(stirling2(m, 1), BigInt::one());
            assert_eq!(stirling2(m, m), BigInt::one());
        }
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(5, 2), BigInt::from(15));
        assert_eq!(stirling2(2, 5), BigInt::zero());
    }

    #[test]
    fn stirling_recurrence() {
        for m in 1..15u32 {
            for r in 1..=m {
                assert_eq!(stirling2(m + 1, r), stirling2(m, r) * r + stirling2(m, r - 1));
            }
        }
    }

    #[test]
    fn compositions_small_cases() {
        assert_eq!(compositions(0, 3), vec![Composition::new(vec![0, 0, 0])]);
        let two = compositions(2, 2);
        assert_eq!(two, vec![Composition::new(vec![2, 0]), Composition::new(vec![1, 1]), Composition::new(vec![0, 2])]);
        assert!(compositions(2, 0).is_empty());
        assert!(compositions(-1, 2).is_empty());
    }

    #[test]
    fn composition_counts_are_binomial() {
        for n in 0..7 {
            for r in 1..5 {
                let comps = compositions(n, r);
                assert_eq!(BigInt::from(comps.len()), binomial(n + r - 1, n));
                let mut sorted = comps.clone();
                sorted.dedup();
                assert_eq!(sorted.len(), comps.len());
                assert!(comps.iter().all(|k| k.n() as i64 == n && k.r() as i64 == r));
                assert!(comps.windows(2).all(|w| w[0] > w[1]));
            }
        }
    }

    #[test]
    fn subsets_are_lexicographic_and_counted() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(4, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
        for n in 0..7 {
            for j in 0..=n {
                assert_eq!(BigInt::from(subsets(n, j).len()), binomial(n as i64, j as i64));
            }
        }
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(4, &[4]).unwrap(), BigInt::from(1));
        assert_eq!(multinomial(4, &[2, 2]).unwrap(), BigInt::from(6));
        assert_eq!(multinomial(5, &[1, 2, 2]).unwrap(), BigInt::from(30));
        assert!(multinomial(5, &[1, 2]).is_err());
    }

    #[test]
    fn cnr_values() {
        assert_eq!(cnr(2, 1).unwrap(), rat(6, 1));
        assert_eq!(cnr(3, 1).unwrap(), rat(24, 1));
        assert_eq!(cnr(3, 2).unwrap(), rat(16, 1));
        assert_eq!(cnr(3, 3).unwrap(), rat(40, 3));
        assert_eq!(cnr(2, 2).unwrap(), rat(36, 7));
        for n in 0..8u32 {
            assert_eq!(cnr(n, 1).unwrap(), BigRational::from_integer(factorial(n + 1)));
        }
    }

    #[test]
    fn cnr_closed_forms_for_two_and_three_parts() {
        for n in 1..9u32 {
            let two = BigRational::new(factorial(n + 2) * (n + 1), (BigInt::one() << (n + 2)) - 2);
            assert_eq!(cnr(n, 2).unwrap(), two);
            let three_den = num_traits::pow(BigInt::from(3), (n + 3) as usize)
                - num_traits::pow(BigInt::from(2), (n + 3) as usize) * 3
                + 3;
            let three = BigRational::new(binomial((n + 2) as i64, 2) * factorial(n + 3), three_den);
            assert_eq!(cnr(n, 3).unwrap(), three);
        }
    }

    #[test]
    fn cnr_property_suite_passes() {
        let report = verify_cnr_properties(1, 1);
        assert!(report.all_passed());
        let report = verify_cnr_properties(8, 6);
        assert!(report.all_passed(), "{:#?}", report.checks);
    }

    #[test]
    fn property_four_identity_at_two_two() {
        // 24 − (36/7)·{4!/(3!1!), 4!/(2!2!), 4!/(1!3!)} summed
        let c = cnr(2, 2).unwrap();
        let sum = [4i64, 6, 4].iter().fold(BigRational::zero(), |acc, &m| acc + rat(24, 1) - &c * rat(m, 1));
        assert!(sum.is_zero());
    }

    #[test]
    fn stirling_ratio_corner_case() {
        assert_eq!(stirling_ratio(3, 2), rat(7, 15));
        assert_eq!(stirling_ratio_bound(3, 2), rat(3, 8));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn inclusion_exclusion_matches_positive_sum(
                n in 0i64..7,
                r in 1i64..5,
                seed in proptest::collection::vec(-50i64..50, 1..40),
            ) {
                let weight = |k: &Composition| {
                    let idx = k.parts().iter().enumerate().map(|(i, &v)| (i + 1) * (v as usize + 3)).sum::<usize>();
                    BigInt::from(seed[idx % seed.len()])
                };
                let direct: BigInt = positive_compositions(n, r).iter().map(weight).sum();
                prop_assert_eq!(inclusion_exclusion_sum(n, r, weight), direct);
            }

            #[test]
            fn stirling_recurrence_and_explicit_agree(m in 0u32..25, r in 0u32..12) {
                prop_assert_eq!(stirling2(m, r), stirling2_explicit(m, r));
            }
        }
    }
}
