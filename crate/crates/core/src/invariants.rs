//! Milnor numbers and geometric genera of Newton-non-degenerate hypersurfaces
//! and complete intersections, computed from their diagrams.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{compositions, factorial, falling_factorial, subsets};
use crate::covolume::mixed_covolumes;
use crate::error::{Error, Result};
use crate::lattice::{convex_hull, DEFAULT_CELL_CAP};
use crate::newton::{DiagramTuple, NewtonDiagram};
use crate::{Polytope, Rational};

/// A complete intersection `{f_1 = … = f_r = 0} ⊂ (ℂ^{n+r}, 0)`, described by
/// the diagrams of its equations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IcisInput {
    pub tuple: DiagramTuple,
}

impl IcisInput {
    pub fn new(tuple: DiagramTuple) -> Self {
        Self { tuple }
    }

    pub fn hypersurface(g: NewtonDiagram) -> Self {
        Self { tuple: DiagramTuple::single(g) }
    }

    pub fn n(&self) -> usize {
        self.tuple.n()
    }

    pub fn r(&self) -> usize {
        self.tuple.r()
    }

    /// Whether the Durfee-type bound `μ > C(n,r)·p_g` is claimed for large
    /// diagrams: `r = 1, n ≥ 2` or `r > 1, n > 2`.
    pub fn in_hypothesis(&self) -> bool {
        let (n, r) = (self.n(), self.r());
        (r == 1 && n >= 2) || (r > 1 && n > 2)
    }

    pub fn scale(&self, d: &Rational) -> Result<Self> {
        Ok(Self { tuple: self.tuple.scale(d)? })
    }
}

fn require_integral_tuple(tuple: &DiagramTuple) -> Result<()> {
    if !tuple.all_convenient() {
        return Err(Error::NotConvenient);
    }
    if let Some(g) = tuple.diagrams().iter().find(|g| !g.is_integral()) {
        return Err(Error::NonIntegral(format!("diagram {g}")));
    }
    Ok(())
}

fn to_count(name: &'static str, v: Rational) -> Result<BigInt> {
    if !v.is_integer() || v.is_negative() {
        return Err(Error::InvalidInvariant { name, value: v.to_string() });
    }
    Ok(v.to_integer())
}

fn signed(sign_exp: usize, v: Rational) -> Rational {
    if sign_exp.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

fn fact_q(n: usize) -> Rational {
    BigRational::from_integer(factorial(n as u32))
}

/// `μ = Σ_{i=0}^N (−1)^{N−i} i!·Vol_i(Γ⁻)`.
pub fn milnor_hypersurface(g: &NewtonDiagram) -> Result<BigInt> {
    require_integral_tuple(&DiagramTuple::single(g.clone()))?;
    let n = g.ambient_dim();
    let terms =
        (0..=n).into_par_iter().map(|i| Ok(signed(n - i, fact_q(i) * g.vol_j_sum(i)?))).collect::<Result<Vec<_>>>()?;
    to_count("Milnor number", terms.into_iter().sum())
}

/// `μ = Σ_{j=r}^{n+r} (−1)^{n+r−j} Σ_{|I|=j} j!·a_j(I) + (−1)^{n+1}`, where
/// `a_j(I)` sums the mixed covolumes of the tuple restricted to `L_I` over
/// compositions with every part positive.
pub fn milnor_icis(input: &IcisInput) -> Result<BigInt> {
    let tuple = &input.tuple;
    require_integral_tuple(tuple)?;
    let (n, r) = (tuple.n(), tuple.r());
    let total_dim = n + r;
    let jobs: Vec<(usize, Vec<usize>)> =
        (r..=total_dim).flat_map(|j| subsets(total_dim, j).into_iter().map(move |s| (j, s))).collect();
    let terms = jobs
        .par_iter()
        .map(|(j, subset)| {
            let table = mixed_covolumes(&tuple.restrict(subset)?)?;
            let a: Rational = table.positive_entries().map(|(_, v)| v.clone()).sum();
            Ok(signed(total_dim - j, fact_q(*j) * a))
        })
        .collect::<Result<Vec<_>>>()?;
    let constant = signed(n + 1, Rational::one());
    to_count("Milnor number", terms.into_iter().sum::<Rational>() + constant)
}

/// `Θ_j(d) = Π d_i · Σ_{k∈K(j−r, r)} Π d_i^{k_i}`.
pub fn theta(j: usize, d: &[Rational]) -> Rational {
    let r = d.len();
    if j < r {
        return Rational::zero();
    }
    let prod: Rational = d.iter().product();
    let sum: Rational = compositions((j - r) as i64, r as i64)
        .iter()
        .map(|k| k.parts().iter().zip(d).map(|(&e, di)| num_traits::pow(di.clone(), e as usize)).product::<Rational>())
        .sum();
    prod * sum
}

/// Milnor number of the complete intersection with diagrams `d_1Γ, …, d_rΓ`:
/// `Σ_{j=r}^{N} (−1)^{N−j} Θ_j(d)·j!·Vol_j(Γ⁻) + (−1)^{n+1}`.
pub fn milnor_proportional(g: &NewtonDiagram, d: &[Rational]) -> Result<Rational> {
    let r = d.len();
    let total_dim = g.ambient_dim();
    if r == 0 {
        return Err(Error::EmptyInput("scale factors"));
    }
    if r > total_dim {
        return Err(Error::Precondition(format!("{r} equations in ambient dimension {total_dim}")));
    }
    if d.iter().any(|x| !x.is_positive()) {
        return Err(Error::Precondition("scale factors must be positive".into()));
    }
    let n = total_dim - r;
    let mut total = signed(n + 1, Rational::one());
    for j in r..=total_dim {
        total += signed(total_dim - j, theta(j, d) * fact_q(j) * g.vol_j_sum(j)?);
    }
    Ok(total)
}

/// `p_g = |Γ⁻ ∩ ℤ^N_{>0}|`.
pub fn pg_hypersurface(g: &NewtonDiagram) -> Result<BigInt> {
    pg_hypersurface_capped(g, DEFAULT_CELL_CAP)
}

pub fn pg_hypersurface_capped(g: &NewtonDiagram, cap: u128) -> Result<BigInt> {
    g.count_positive_points_capped(cap)
}

/// `p_g = Σ_{∅≠S⊆[r]} (−1)^{r−|S|} p_g(Σ_{i∈S} Γ_i)`.
pub fn pg_icis(input: &IcisInput) -> Result<BigInt> {
    pg_icis_capped(input, DEFAULT_CELL_CAP)
}

pub fn pg_icis_capped(input: &IcisInput, cap: u128) -> Result<BigInt> {
    let tuple = &input.tuple;
    require_integral_tuple(tuple)?;
    let r = tuple.r();
    let jobs: Vec<Vec<usize>> = (1..=r).flat_map(|j| subsets(r, j)).collect();
    let terms = jobs
        .par_iter()
        .map(|s| {
            let parts: Vec<&NewtonDiagram> = s.iter().map(|&i| &tuple.diagrams()[i]).collect();
            let sum = NewtonDiagram::weighted_sum(&parts, &vec![Rational::one(); parts.len()])?;
            let count = pg_hypersurface_capped(&sum, cap)?;
            Ok(if (r - s.len()).is_multiple_of(2) { count } else { -count })
        })
        .collect::<Result<Vec<BigInt>>>()?;
    let total: BigInt = terms.into_iter().sum();
    if total.is_negative() {
        return Err(Error::InvalidInvariant { name: "geometric genus", value: total.to_string() });
    }
    Ok(total)
}

/// `(p−1)^{n+1} − p(p−1)⋯(p−n)`; the falling factorial vanishes for `p ≤ n`.
pub fn theorem2_correction(p: i64, n: u32) -> BigInt {
    BigInt::from(p - 1).pow(n + 1) - falling_factorial(p, n + 1)
}

/// The simplex `Δ = conv(p·e_1, …, p·e_{n+1})` and the face `Δ_0 = σ_p` of
/// the diagram lying on `Σ x_i = p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentConeData {
    pub p: i64,
    pub n: usize,
    pub delta: Polytope,
    pub delta0: Polytope,
    /// `Δ_0` meets every edge of `Δ`.
    pub meets_all_edges: bool,
    /// `dim Δ_0 = n`.
    pub top_dimensional: bool,
}

impl TangentConeData {
    /// The data of `kΓ`.
    pub fn scaled(&self, k: i64) -> Result<Self> {
        let kq = BigRational::from_integer(BigInt::from(k));
        Ok(Self { p: self.p * k, delta: self.delta.scaled(&kq)?, delta0: self.delta0.scaled(&kq)?, ..self.clone() })
    }

    /// Vertices of `Δ_0` supported in the coordinates `t`.
    fn delta0_on(&self, t: &[usize]) -> Vec<usize> {
        (0..self.delta0.vertices().len())
            .filter(|&v| self.delta0.vertices()[v].iter().enumerate().all(|(i, x)| x.is_zero() || t.contains(&i)))
            .collect()
    }

    /// `Vol_j(Δ ∖ Δ_0)`: over the `j`-faces `F` of `Δ`, the induced-lattice
    /// volume of `F` minus that of `Δ_0 ∩ F` when the latter is also
    /// `j`-dimensional.
    pub fn difference_volume(&self, j: usize) -> Result<Rational> {
        let big_n = self.n + 1;
        let face_vol = BigRational::new(BigInt::from(self.p).pow(j as u32), factorial(j as u32));
        let mut total = Rational::zero();
        for t in subsets(big_n, j + 1) {
            let on = self.delta0_on(&t);
            let cut = if on.is_empty() {
                Rational::zero()
            } else {
                let part = self.delta0.sub_polytope(&on)?;
                if part.dim() == j {
                    part.relative_lattice_volume()?
                } else {
                    Rational::zero()
                }
            };
            total += &face_vol - cut;
        }
        Ok(total)
    }
}

/// `Δ`, `Δ_0` and the edge-meeting flag of a diagram in `ℝ^{n+1}`.
pub fn tangent_cone_data(g: &NewtonDiagram) -> Result<TangentConeData> {
    if !g.is_integral() {
        return Err(Error::NonIntegral(format!("diagram {g}")));
    }
    let tc = g.tangent_cone_face()?;
    let big_n = g.ambient_dim();
    let p = tc.multiplicity;
    let pq = BigRational::from_integer(BigInt::from(p));
    let corners: Vec<Vec<Rational>> =
        (0..big_n).map(|i| (0..big_n).map(|j| if i == j { pq.clone() } else { Rational::zero() }).collect()).collect();
    let delta = convex_hull(&corners)?;
    let mut data = TangentConeData {
        p,
        n: big_n - 1,
        delta,
        delta0: tc.face,
        meets_all_edges: false,
        top_dimensional: tc.top_dimensional,
    };
    data.meets_all_edges =
        (0..big_n).flat_map(|i| (i + 1..big_n).map(move |j| [i, j])).all(|pair| !data.delta0_on(&pair).is_empty());
    Ok(data)
}

/// Milnor number of the projectivized tangent cone,
/// `Σ_{j=0}^{n} (−1)^{n−j} j!·Vol_j(Δ ∖ Δ_0)`.
///
/// The `j = 0` term counts the vertices of `Δ` missing from `Δ_0`.
pub fn mu_tangent_cone(tc: &TangentConeData) -> Result<BigInt> {
    if !tc.meets_all_edges {
        return Err(Error::Precondition("Δ_0 misses an edge of Δ; tangent cone singularities are not isolated".into()));
    }
    if !tc.top_dimensional {
        return Err(Error::Precondition("Δ_0 is not top-dimensional".into()));
    }
    let n = tc.n;
    let mut total = Rational::zero();
    for j in 0..=n {
        total += signed(n - j, fact_q(j) * tc.difference_volume(j)?);
    }
    if !total.is_integer() {
        return Err(Error::InvalidInvariant { name: "tangent cone Milnor number", value: total.to_string() });
    }
    Ok(total.to_integer())
}

/// Leading coefficient in `k` of `μ(kΓ) − μ(ℙT) − correction − (n+1)!·p_g(kΓ)`,
/// divided by `n!`:
/// `(n−1)/(n+1)·Vol_n(Γ⁻) − Vol_n(Γ) + 2/(n+1)·Vol_n(σ_p) − (n−2+2/(n+1))·Vol_n(Δ)`.
pub fn thm2_leading_margin(g: &NewtonDiagram) -> Result<Rational> {
    if g.is_homogeneous() {
        return Err(Error::Precondition("leading margin is defined for non-homogeneous diagrams".into()));
    }
    let tc = tangent_cone_data(g)?;
    let n = tc.n;
    if n <= 2 {
        return Err(Error::Precondition(format!("leading margin needs n > 2, got n = {n}")));
    }
    let nq = BigRational::from_integer(BigInt::from(n as i64));
    let one = Rational::one();
    let two = &one + &one;
    let np1 = &nq + &one;
    let sigma = if tc.top_dimensional { tc.delta0.relative_lattice_volume()? } else { Rational::zero() };
    let delta = BigRational::new(BigInt::from(tc.p).pow(n as u32), factorial(n as u32));
    Ok((&nq - &one) / &np1 * g.vol_j_sum(n)? - g.facet_total_volume()? + &two / &np1 * sigma
        - (&nq - &two + &two / &np1) * delta)
}

/// `μ(kΓ) − (μ(ℙT) | 0) − correction(kp, n)` against `(n+1)!·p_g(kΓ)` at one
/// scale `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem2Point {
    pub k: i64,
    #[serde(serialize_with = "crate::scalar::serialize_integer")]
    pub mu: BigInt,
    #[serde(serialize_with = "crate::scalar::serialize_integer")]
    pub pg: BigInt,
    #[serde(serialize_with = "crate::scalar::serialize_integer")]
    pub mu_tangent_cone: BigInt,
    #[serde(serialize_with = "crate::scalar::serialize_integer")]
    pub correction: BigInt,
    /// `μ − μ(ℙT) − correction − (n+1)!·p_g`.
    #[serde(serialize_with = "crate::scalar::serialize_integer")]
    pub margin: BigInt,
}

pub fn theorem2_point(g: &NewtonDiagram, k: i64, cap: u128) -> Result<Theorem2Point> {
    let scaled = g.scale(&BigRational::from_integer(BigInt::from(k)))?;
    let n = g.ambient_dim() - 1;
    let mu = milnor_hypersurface(&scaled)?;
    let pg = pg_hypersurface_capped(&scaled, cap)?;
    let tc = tangent_cone_data(&scaled)?;
    let mu_tc = if tc.meets_all_edges && tc.top_dimensional { mu_tangent_cone(&tc)? } else { BigInt::zero() };
    let correction = theorem2_correction(tc.p, n as u32);
    let margin = &mu - &mu_tc - &correction - factorial(n as u32 + 1) * &pg;
    Ok(Theorem2Point { k, mu, pg, mu_tangent_cone: mu_tc, correction, margin })
}
