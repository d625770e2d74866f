use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{durfee_check_scaled, input_hash, InvariantReport, Metadata, Options};
use crate::check::Check;
use crate::combinatorics::{cnr, factorial, multinomial_of, subsets};
use crate::covolume::{covol_of_sum, mixed_covolumes};
use crate::error::{Error, Result};
use crate::invariants::{tangent_cone_data, theorem2_point, thm2_leading_margin, IcisInput, Theorem2Point};
use crate::newton::{DiagramTuple, NewtonDiagram};
use crate::poly::UniPoly;
use crate::Rational;

fn q(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

/// Leading coefficients in `d` of `μ(dΓ)` and `p_g(dΓ)` from the mixed
/// covolume table: `(n+r)!·Σ_{k>0} coVol_k` and `Σ_{k>0} (n+r)!/Π k_i!·coVol_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeadingQuotient {
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub mu: Rational,
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub pg: Rational,
    /// `mu / pg`.
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub quotient: Rational,
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub cnr: Rational,
}

/// Degree-`N` coefficients of the exact polynomial fits of `μ(d)`, `p_g(d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FittedLeading {
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub mu: Rational,
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub pg: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanSeries {
    pub input_hash: String,
    pub n: usize,
    pub r: usize,
    pub all_diagrams_equal: bool,
    pub points: Vec<InvariantReport>,
    pub leading: LeadingQuotient,
    /// Present when the range holds at least `N + 2` scales.
    pub fitted: Option<FittedLeading>,
    /// First scanned `d` from which the margin stays positive.
    pub d0: Option<i64>,
    /// `μ/p_g` is strictly decreasing over the scales with `p_g > 0`.
    pub ratio_decreasing: bool,
    pub checks: Vec<Check>,
    pub metadata: Metadata,
}

impl ScanSeries {
    pub fn passed(&self) -> bool {
        crate::check::all_passed(&self.checks)
    }
}

pub(crate) fn leading_quotient(tuple: &DiagramTuple) -> Result<LeadingQuotient> {
    let (n, r) = (tuple.n(), tuple.r());
    let total = (n + r) as u32;
    let table = mixed_covolumes(tuple)?;
    let plain: Rational = table.positive_entries().map(|(_, v)| v.clone()).sum();
    let weighted: Rational =
        table.positive_entries().map(|(k, v)| BigRational::from_integer(multinomial_of(total, k.parts())) * v).sum();
    let mu = BigRational::from_integer(factorial(total)) * plain;
    if weighted.is_zero() {
        return Err(Error::Inconsistent("vanishing leading coefficient of p_g".into()));
    }
    Ok(LeadingQuotient { quotient: &mu / &weighted, mu, pg: weighted, cnr: cnr(n as u32, r as u32)? })
}

/// `Σ_{∅≠S} (−1)^{r−|S|} CoVol(Σ_{i∈S} Γ_i)`.
fn pg_leading_by_inclusion_exclusion(tuple: &DiagramTuple) -> Result<Rational> {
    let r = tuple.r();
    let mut total = Rational::zero();
    for j in 1..=r {
        for s in subsets(r, j) {
            let parts: Vec<&NewtonDiagram> = s.iter().map(|&i| &tuple.diagrams()[i]).collect();
            let v = covol_of_sum(&parts, &vec![Rational::one(); j])?;
            if (r - j).is_multiple_of(2) {
                total += v;
            } else {
                total -= v;
            }
        }
    }
    Ok(total)
}

fn first_stable<T>(points: &[T], key: impl Fn(&T) -> i64, good: impl Fn(&T) -> bool) -> Option<i64> {
    let mut start = None;
    for p in points {
        if good(p) {
            start.get_or_insert(key(p));
        } else {
            start = None;
        }
    }
    start
}

fn fit_leading(xs: &[i64], ys: &[Rational], degree: usize) -> Result<UniPoly<Rational>> {
    let samples: Vec<(Rational, Rational)> = xs.iter().map(|&x| q(x)).zip(ys.iter().cloned()).collect();
    UniPoly::fit_and_verify(&samples, degree)
}

/// Invariant reports of `dΓ` for `d` in `range`, with the leading-term
/// comparison against `C(n,r)`.
pub fn scaling_scan(input: &IcisInput, range: std::ops::RangeInclusive<i64>, opts: &Options) -> Result<ScanSeries> {
    if *range.start() < 1 || range.is_empty() {
        return Err(Error::Precondition(format!("scale range {range:?} must be non-empty and start at 1 or above")));
    }
    let tuple = &input.tuple;
    let (n, r) = (tuple.n(), tuple.r());
    let big_n = n + r;
    let ds: Vec<i64> = range.collect();
    let points = ds.par_iter().map(|&d| durfee_check_scaled(input, d, opts)).collect::<Result<Vec<_>>>()?;
    let leading = leading_quotient(tuple)?;
    let all_equal = tuple.all_equal();

    let mut checks = Vec::new();
    // Distinct diagrams can still give equality, e.g. coordinate simplices
    // differing in one intercept, so only `≥` is asserted for them.
    let cmp_name = if all_equal { "leading quotient = C(n,r)" } else { "leading quotient ≥ C(n,r)" };
    let ok = if all_equal { leading.quotient == leading.cnr } else { leading.quotient >= leading.cnr };
    let detail = format!("quotient {} vs C(n,r) = {}", leading.quotient, leading.cnr);
    checks.push(if ok { Check::pass(cmp_name, 1, detail) } else { Check::fail(cmp_name, 1, detail) });

    let ie = pg_leading_by_inclusion_exclusion(tuple)?;
    let name = "p_g leading coefficient by inclusion-exclusion of covolumes";
    checks.push(if ie == leading.pg {
        Check::pass(name, 1, format!("{ie}"))
    } else {
        Check::fail(name, 1, format!("{ie} vs table {}", leading.pg))
    });

    let fitted = if ds.len() >= big_n + 2 {
        let mus: Vec<Rational> = points.iter().map(|p| BigRational::from_integer(p.mu.clone())).collect();
        let pgs: Vec<Rational> = points.iter().map(|p| BigRational::from_integer(p.pg.clone())).collect();
        let mu_fit = fit_leading(&ds, &mus, big_n)?;
        let pg_fit = fit_leading(&ds, &pgs, big_n)?;
        let f = FittedLeading { mu: mu_fit.coeff(big_n), pg: pg_fit.coeff(big_n) };
        let name = "fitted leading coefficients match the covolume table";
        let detail = format!("μ {} vs {}, p_g {} vs {}", f.mu, leading.mu, f.pg, leading.pg);
        checks.push(if f.mu == leading.mu && f.pg == leading.pg {
            Check::pass(name, 2, detail)
        } else {
            Check::fail(name, 2, detail)
        });
        Some(f)
    } else {
        None
    };

    let d0 = first_stable(
        &points,
        |p| num_traits::ToPrimitive::to_i64(&p.input.d.to_integer()).unwrap_or(0),
        |p| p.margin.is_positive(),
    );
    let ratios: Vec<&Rational> = points.iter().filter_map(|p| p.ratio.as_ref()).collect();
    let ratio_decreasing = ratios.windows(2).all(|w| w[1] < w[0]);
    Ok(ScanSeries {
        input_hash: input_hash(tuple),
        n,
        r,
        all_diagrams_equal: all_equal,
        points,
        leading,
        fitted,
        d0,
        ratio_decreasing,
        checks,
        metadata: Metadata::new(None),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem2Series {
    pub input_hash: String,
    pub n: usize,
    pub multiplicity: i64,
    pub homogeneous: bool,
    pub meets_all_edges: bool,
    pub top_dimensional: bool,
    /// Whether `μ(ℙT)` enters the margin.
    pub tangent_cone_term: bool,
    #[serde(serialize_with = "crate::scalar::serialize_opt_rational")]
    pub leading_margin: Option<Rational>,
    pub points: Vec<Theorem2Point>,
    /// First scanned `k` from which `margin ≥ 0`.
    pub k0: Option<i64>,
    pub checks: Vec<Check>,
    pub metadata: Metadata,
}

impl Theorem2Series {
    pub fn passed(&self) -> bool {
        crate::check::all_passed(&self.checks)
    }
}

/// `μ(kΓ) − μ(ℙT) − correction` against `(n+1)!·p_g(kΓ)` for `k` in `range`.
pub fn theorem2_check(
    g: &NewtonDiagram,
    range: std::ops::RangeInclusive<i64>,
    opts: &Options,
) -> Result<Theorem2Series> {
    if *range.start() < 1 || range.is_empty() {
        return Err(Error::Precondition(format!("scale range {range:?} must be non-empty and start at 1 or above")));
    }
    let big_n = g.ambient_dim();
    if big_n < 2 {
        return Err(Error::Precondition("the second inequality needs ambient dimension at least 2".into()));
    }
    let n = big_n - 1;
    let tc = tangent_cone_data(g)?;
    let homogeneous = g.is_homogeneous();
    let tangent_cone_term = tc.meets_all_edges && tc.top_dimensional;
    let ks: Vec<i64> = range.collect();
    let points = ks.par_iter().map(|&k| theorem2_point(g, k, opts.budget)).collect::<Result<Vec<_>>>()?;
    let leading_margin = if homogeneous || n <= 2 { None } else { Some(thm2_leading_margin(g)?) };

    let mut checks = Vec::new();
    if homogeneous {
        checks.push(Check::run("margin vanishes for homogeneous diagrams", &points, |p| {
            if p.margin.is_zero() {
                Ok(())
            } else {
                Err(format!("k = {}: margin {}", p.k, p.margin))
            }
        }));
    }
    if let Some(m) = &leading_margin {
        let name = "leading margin positive";
        checks.push(if m.is_positive() {
            Check::pass(name, 1, m.to_string())
        } else {
            Check::fail(name, 1, m.to_string())
        });
    }
    if ks.len() >= n + 3 {
        let margins: Vec<Rational> = points.iter().map(|p| BigRational::from_integer(p.margin.clone())).collect();
        let fit = fit_leading(&ks, &margins, n + 1)?;
        let name = "margin has degree ≤ n in k";
        let top = fit.coeff(n + 1);
        checks.push(if top.is_zero() {
            Check::pass(name, 1, "ok")
        } else {
            Check::fail(name, 1, format!("k^{} coefficient {top}", n + 1))
        });
        if let Some(m) = &leading_margin {
            // k^n coefficient is n!(n+1)/2 times the leading margin, plus
            // n!·(Vol_n(Δ) − Vol_n(σ_p)) when μ(ℙT) is left out.
            let nf = BigRational::from_integer(factorial(n as u32));
            let mut expected = &nf * q(n as i64 + 1) / q(2) * m;
            if !tangent_cone_term {
                let delta = BigRational::new(BigInt::from(tc.p).pow(n as u32), factorial(n as u32));
                let sigma = if tc.top_dimensional { tc.delta0.relative_lattice_volume()? } else { Rational::zero() };
                expected += nf * (delta - sigma);
            }
            let got = fit.coeff(n);
            let name = "k^n coefficient of the margin matches the leading margin";
            let detail = format!("{got} vs {expected}");
            checks.push(if got == expected { Check::pass(name, 1, detail) } else { Check::fail(name, 1, detail) });
        }
    }
    let k0 = first_stable(&points, |p| p.k, |p| !p.margin.is_negative());
    Ok(Theorem2Series {
        input_hash: input_hash(&DiagramTuple::single(g.clone())),
        n,
        multiplicity: tc.p,
        homogeneous,
        meets_all_edges: tc.meets_all_edges,
        top_dimensional: tc.top_dimensional,
        tangent_cone_term,
        leading_margin,
        points,
        k0,
        checks,
        metadata: Metadata::new(None),
    })
}
