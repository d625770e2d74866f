use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use super::{durfee_check, input_hash, Corpus, Metadata, Options};
use crate::check::Check;
use crate::combinatorics::{
    binomial, cnr, compositions, factorial, multinomial_of, stirling2, stirling_ratio, stirling_ratio_bound,
    verify_cnr_properties,
};
use crate::covolume::mixed_covolumes;
use crate::error::{Error, Result};
use crate::invariants::IcisInput;
use crate::lattice::convex_hull;
use crate::Rational;

fn q(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

/// Invariants of the region `Conv((−1,−1,−1), m e_1, m e_2, m e_3)` read as
/// `Γ⁻`, all measured directly on the polytope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleRow {
    pub m: i64,
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub vol3: Rational,
    /// Induced-lattice areas of the three facets through the apex.
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub vol2: Rational,
    /// Induced-lattice lengths of the three edges through the apex.
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub vol1: Rational,
    #[serde(serialize_with = "crate::scalar::serialize_integer")]
    pub interior_points: BigInt,
    /// Relative-interior points of the facet `Conv(m e_1, m e_2, m e_3)`.
    #[serde(serialize_with = "crate::scalar::serialize_integer")]
    pub face_interior_points: BigInt,
    /// `3!·Vol_3 − 2!·Vol_2 + Vol_1 − 1`.
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub mu: Rational,
    #[serde(serialize_with = "crate::scalar::serialize_integer")]
    pub pg: BigInt,
    /// `μ − 6·p_g`.
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub margin: Rational,
    pub closed_forms_match: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub rows: Vec<CounterexampleRow>,
    pub checks: Vec<Check>,
    pub metadata: Metadata,
}

impl CounterexampleReport {
    pub fn passed(&self) -> bool {
        crate::check::all_passed(&self.checks)
    }
}

fn counterexample_row(m: i64, opts: &Options) -> Result<CounterexampleRow> {
    let apex = vec![q(-1); 3];
    let mut pts = vec![apex.clone()];
    for i in 0..3 {
        pts.push((0..3).map(|j| if i == j { q(m) } else { q(0) }).collect());
    }
    let tetra = convex_hull(&pts)?;
    let a = tetra.vertices().iter().position(|v| *v == apex).ok_or(Error::Inconsistent("apex lost".into()))?;
    let lattice = tetra.face_lattice();
    let through_apex = |dim: usize| -> Result<Rational> {
        let mut total = Rational::from_integer(BigInt::from(0));
        for (_, f) in lattice.faces_of_dim(dim) {
            if f.vertices.contains(&a) {
                total += tetra.sub_polytope(&f.vertices)?.relative_lattice_volume()?;
            }
        }
        Ok(total)
    };
    let vol3 = tetra.normalized_volume()?;
    let vol2 = through_apex(2)?;
    let vol1 = through_apex(1)?;
    let interior = tetra.count_lattice_points(1, true, opts.budget)?;
    let far: Vec<usize> = (0..4).filter(|&v| v != a).collect();
    let face_interior = tetra.sub_polytope(&far)?.count_lattice_points(1, true, opts.budget)?;
    let mu = q(6) * &vol3 - q(2) * &vol2 + &vol1 - Rational::one();
    let pg = &interior + &face_interior;
    let margin = &mu - q(6) * BigRational::from_integer(pg.clone());

    let closed_forms_match = vol3 == BigRational::new(BigInt::from(m * m * m + 3 * m * m), BigInt::from(6))
        && vol2 == BigRational::new(BigInt::from(3 * m), BigInt::from(2))
        && vol1 == q(3)
        && interior == binomial(m + 2, 3)
        && face_interior == binomial(m - 1, 2)
        && mu == q(m * m * m + 3 * m * m - 3 * m + 2)
        && margin == q(-3 * m * m + 4 * m - 4);
    Ok(CounterexampleRow {
        m,
        vol3,
        vol2,
        vol1,
        interior_points: interior,
        face_interior_points: face_interior,
        mu,
        pg,
        margin,
        closed_forms_match,
    })
}

/// The tetrahedral region for each `m` in `range`, with every volume and
/// count compared to its closed form.
pub fn counterexample(range: std::ops::RangeInclusive<i64>, opts: &Options) -> Result<CounterexampleReport> {
    if *range.start() < 2 || range.is_empty() {
        return Err(Error::Precondition(format!("m range {range:?} must be non-empty and start at 2 or above")));
    }
    let rows = range.map(|m| counterexample_row(m, opts)).collect::<Result<Vec<_>>>()?;
    let checks = vec![
        Check::run("closed forms for volumes, counts and μ", &rows, |row| {
            if row.closed_forms_match {
                Ok(())
            } else {
                Err(format!("m = {}: {row:?}", row.m))
            }
        }),
        Check::run("μ − 6·p_g < 0", &rows, |row| {
            if row.margin.is_negative() {
                Ok(())
            } else {
                Err(format!("m = {}: μ − 6 p_g = {}", row.m, row.margin))
            }
        }),
    ];
    Ok(CounterexampleReport { rows, checks, metadata: Metadata::new(None) })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaSuiteReport {
    pub n_max: u32,
    pub r_max: u32,
    pub corpus_size: usize,
    pub checks: Vec<Check>,
    pub metadata: Metadata,
}

impl LemmaSuiteReport {
    pub fn passed(&self) -> bool {
        crate::check::all_passed(&self.checks)
    }
}

fn compare(name: &str, ok: bool, detail: String) -> Check {
    if ok {
        Check::pass(name, 1, detail)
    } else {
        Check::fail(name, 1, detail)
    }
}

/// Number of random diagrams used for the facet-volume bound.
pub const LEMMA_CORPUS_SIZE: usize = 60;

/// Stirling and `C(n,r)` identities over `n ≤ n_max`, `r ≤ r_max`, and the
/// facet-volume bound `Vol_{N−1}(Γ) ≤ Vol_{N−1}(Γ⁻)/N` on a seeded corpus.
pub fn lemma_suite(n_max: u32, r_max: u32, opts: &Options) -> Result<LemmaSuiteReport> {
    let mut checks = verify_cnr_properties(n_max, r_max).checks;
    checks.push(compare(
        "S(4,2) = 7, S(5,2) = 15",
        stirling2(4, 2) == BigInt::from(7) && stirling2(5, 2) == BigInt::from(15),
        format!("S(4,2) = {}, S(5,2) = {}", stirling2(4, 2), stirling2(5, 2)),
    ));
    checks.push(Check::run("C(n,1) = (n+1)!", 1..=n_max, |n| {
        let c = cnr(n, 1).map_err(|e| e.to_string())?;
        if c == BigRational::from_integer(factorial(n + 1)) {
            Ok(())
        } else {
            Err(format!("C({n},1) = {c}"))
        }
    }));
    let grid: Vec<(u32, u32)> = (2..=r_max).flat_map(|r| (3..=n_max).map(move |n| (n, r))).collect();
    checks.push(Check::run("S(n+r−1,r)/S(n+r,r) > 2n/(n+r−1)²", grid, |(n, r)| {
        let (lhs, rhs) = (stirling_ratio(n, r), stirling_ratio_bound(n, r));
        if lhs > rhs {
            Ok(())
        } else {
            Err(format!("(n,r)=({n},{r}): {lhs} <= {rhs}"))
        }
    }));
    let (lhs, rhs) = (stirling_ratio(3, 2), stirling_ratio_bound(3, 2));
    checks.push(compare(
        "boundary case (r,n) = (2,3): 7/15 > 3/8",
        lhs == BigRational::new(7.into(), 15.into()) && rhs == BigRational::new(3.into(), 8.into()) && lhs > rhs,
        format!("{lhs} > {rhs}"),
    ));
    let pairs: Vec<(u32, u32)> = (0..=n_max).flat_map(|n| (1..=r_max).map(move |r| (n, r))).collect();
    checks.push(Check::run("S(n+r,r) ≥ S(n+r−1,r−1), equal only at n = 0", pairs, |(n, r)| {
        let (a, b) = (stirling2(n + r, r), stirling2(n + r - 1, r - 1));
        match (n == 0, a.cmp(&b)) {
            (true, std::cmp::Ordering::Equal) | (false, std::cmp::Ordering::Greater) => Ok(()),
            _ => Err(format!("(n,r)=({n},{r}): S = {a}, {b}")),
        }
    }));

    let mut corpus = Corpus::new(opts.seed);
    let mut diagrams = Vec::with_capacity(LEMMA_CORPUS_SIZE);
    for _ in 0..LEMMA_CORPUS_SIZE {
        let dim = corpus.pick(2..=4);
        diagrams.push(corpus.diagram(dim, 6)?);
    }
    checks.push(Check::run("Vol_{N−1}(Γ) ≤ Vol_{N−1}(Γ⁻)/N", &diagrams, |g| {
        let n = g.ambient_dim();
        let top = g.facet_total_volume().map_err(|e| e.to_string())?;
        let below = g.vol_j_sum(n - 1).map_err(|e| e.to_string())? / q(n as i64);
        if top <= below {
            Ok(())
        } else {
            Err(format!("{g}: {top} > {below}"))
        }
    }));
    Ok(LemmaSuiteReport {
        n_max,
        r_max,
        corpus_size: LEMMA_CORPUS_SIZE,
        checks,
        metadata: Metadata::new(Some(opts.seed)),
    })
}

/// Both sides of the conjectured strengthening
/// `μ − C(n,r)·p_g > Σ_{k∈K(n,r)} coVol_{k+1}·((n+r)! − C(n,r)·(n+r)!/Π(k_i+1)!)`,
/// evaluated with the covolume normalization. Reported, never asserted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub input_hash: String,
    pub n: usize,
    pub r: usize,
    pub status: &'static str,
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub rhs: Rational,
    pub lhs_exceeds_rhs: bool,
    pub metadata: Metadata,
}

pub fn conjecture_report(input: &IcisInput, opts: &Options) -> Result<ConjectureReport> {
    let tuple = &input.tuple;
    let (n, r) = (tuple.n(), tuple.r());
    let total = (n + r) as u32;
    let report = durfee_check(input, opts)?;
    let table = mixed_covolumes(tuple)?;
    let c = &report.cnr;
    let full = BigRational::from_integer(factorial(total));
    let mut rhs = Rational::from_integer(BigInt::from(0));
    for k in compositions(n as i64, r as i64) {
        let shifted = k.shifted();
        let entry =
            table.get(shifted.parts()).ok_or(Error::Inconsistent(format!("missing table entry ({shifted})")))?;
        let m = BigRational::from_integer(multinomial_of(total, shifted.parts()));
        rhs += entry * (&full - c * m);
    }
    Ok(ConjectureReport {
        input_hash: input_hash(tuple),
        n,
        r,
        status: "conjectural",
        lhs_exceeds_rhs: report.margin > rhs,
        lhs: report.margin,
        rhs,
        metadata: Metadata::new(None),
    })
}
