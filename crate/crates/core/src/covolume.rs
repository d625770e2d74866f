//! Covolumes of Newton polyhedra and mixed covolumes.
//!
//! `CoVol(λ_1Γ_1⁺ + … + λ_rΓ_r⁺)` is a homogeneous polynomial of degree `N`
//! in `λ`; its coefficients, divided by the multinomials `N!/Π k_i!`, are the
//! mixed covolumes. They are recovered here by exact interpolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::combinatorics::{binomial, compositions, factorial, multinomial_of, subsets, Composition};
use crate::error::{Error, Result};
use crate::linalg;
use crate::newton::{DiagramTuple, NewtonDiagram};
use crate::poly::MultivariatePolynomial;
use crate::Rational;

/// `CoVol(Γ⁺) = Vol_N(Γ⁻)`.
pub fn covol(g: &NewtonDiagram) -> Result<Rational> {
    g.vol_under()
}

/// How the interpolation nodes were chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InterpolationGrid {
    /// The first points of `{1..N+1}^r` in lexicographic order.
    Lexicographic,
    /// `λ = k + 1` for every composition `k` of `N` into `r` parts.
    PrincipalLattice,
}

impl InterpolationGrid {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Lexicographic => "lexicographic",
            Self::PrincipalLattice => "principal-lattice",
        }
    }
}

/// Mixed covolumes `coVol((Γ_1⁺)^{k_1}, …, (Γ_r⁺)^{k_r})` for all
/// compositions `k` of `N` into `r` parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedCovolumeTable {
    pub ambient_dim: usize,
    pub r: usize,
    entries: Vec<(Composition, Rational)>,
    pub grid: InterpolationGrid,
    /// `CoVol(Σ λ_iΓ_i⁺)` as a polynomial in `λ`.
    pub polynomial: MultivariatePolynomial,
}

impl MixedCovolumeTable {
    /// Entries in composition order (largest `k_1` first).
    pub fn entries(&self) -> &[(Composition, Rational)] {
        &self.entries
    }

    pub fn get(&self, parts: &[u32]) -> Option<&Rational> {
        self.entries.iter().find(|(k, _)| k.parts() == parts).map(|(_, v)| v)
    }

    /// Entries whose compositions have every part positive.
    pub fn positive_entries(&self) -> impl Iterator<Item = &(Composition, Rational)> {
        self.entries.iter().filter(|(k, _)| k.all_positive())
    }
}

impl Serialize for MixedCovolumeTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.entries.len()))?;
        for (k, v) in &self.entries {
            map.serialize_entry(&k.to_string(), &v.to_string())?;
        }
        map.end()
    }
}

fn int_q(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

fn monomial_value(k: &Composition, lambda: &[Rational]) -> Rational {
    k.parts().iter().zip(lambda).fold(Rational::one(), |acc, (&e, l)| acc * num_traits::pow(l.clone(), e as usize))
}

/// The first `count` points of `{1..=side}^r` in lexicographic order.
fn lexicographic_grid(r: usize, side: i64, count: usize) -> Vec<Vec<Rational>> {
    let mut out = Vec::with_capacity(count);
    let mut x = vec![1i64; r];
    while out.len() < count {
        out.push(x.iter().map(|&v| int_q(v)).collect());
        let mut i = r;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if x[i] < side {
                x[i] += 1;
                break;
            }
            x[i] = 1;
        }
    }
    out
}

/// `CoVol(Σ λ_iΓ_i⁺)`.
pub fn covol_of_sum(diagrams: &[&NewtonDiagram], lambda: &[Rational]) -> Result<Rational> {
    NewtonDiagram::weighted_sum(diagrams, lambda)?.vol_under()
}

/// Mixed covolume table of a tuple of convenient diagrams.
pub fn mixed_covolumes(tuple: &DiagramTuple) -> Result<MixedCovolumeTable> {
    if !tuple.all_convenient() {
        return Err(Error::NotConvenient);
    }
    let n = tuple.ambient_dim();
    let r = tuple.r();
    let diagrams: Vec<&NewtonDiagram> = tuple.diagrams().iter().collect();
    let comps = compositions(n as i64, r as i64);
    let monomials: Vec<Vec<u32>> = comps.iter().map(|k| k.parts().to_vec()).collect();
    let size = comps.len();

    let vandermonde = |pts: &[Vec<Rational>]| -> Vec<Vec<Rational>> {
        pts.iter().map(|l| comps.iter().map(|k| monomial_value(k, l)).collect()).collect()
    };
    let lex = lexicographic_grid(r, n as i64 + 1, size + 2);
    let (grid, nodes, held_out) = if lex.len() == size + 2 && !linalg::determinant(&vandermonde(&lex[..size])).is_zero()
    {
        (InterpolationGrid::Lexicographic, lex[..size].to_vec(), lex[size..].to_vec())
    } else {
        let nodes: Vec<Vec<Rational>> =
            comps.iter().map(|k| k.parts().iter().map(|&p| int_q(p as i64 + 1)).collect()).collect();
        // coordinate sums r and r + 1 never meet the principal lattice (sum N + r)
        let mut extra = vec![int_q(1); r];
        let ones = extra.clone();
        extra[r - 1] = int_q(2);
        (InterpolationGrid::PrincipalLattice, nodes, vec![ones, extra])
    };

    let values: Vec<Rational> =
        nodes.par_iter().chain(held_out.par_iter()).map(|l| covol_of_sum(&diagrams, l)).collect::<Result<Vec<_>>>()?;
    let samples: Vec<(Vec<Rational>, Rational)> = nodes.iter().cloned().zip(values.iter().cloned()).collect();
    let polynomial = MultivariatePolynomial::interpolate(&monomials, &samples)?;
    for (l, v) in held_out.iter().zip(&values[size..]) {
        let fitted = polynomial.eval(l);
        if fitted != *v {
            return Err(Error::FitMismatch(format!("covolume polynomial gives {fitted} at {l:?}, direct value {v}")));
        }
    }

    let entries: Vec<(Composition, Rational)> = comps
        .into_iter()
        .map(|k| {
            let m = BigRational::from_integer(multinomial_of(n as u32, k.parts()));
            let v = polynomial.coeff(k.parts()) / m;
            (k, v)
        })
        .collect();
    if let Some((k, v)) = entries.iter().find(|(_, v)| v.is_negative()) {
        return Err(Error::Inconsistent(format!("negative mixed covolume {v} at ({k})")));
    }
    Ok(MixedCovolumeTable { ambient_dim: n, r, entries, grid, polynomial })
}

/// `coVol(P_1, …, P_N)` by polarization:
/// `(1/N!) Σ_{∅≠S} (−1)^{N−|S|} CoVol(Σ_{i∈S} P_i)`.
pub fn mixed_covolume(args: &[&NewtonDiagram]) -> Result<Rational> {
    let n = args.first().ok_or(Error::EmptyInput("mixed covolume arguments"))?.ambient_dim();
    if args.len() != n {
        return Err(Error::Precondition(format!(
            "mixed covolume in dimension {n} takes {n} arguments, got {}",
            args.len()
        )));
    }
    if args.iter().any(|g| g.ambient_dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: args.iter().map(|g| g.ambient_dim()).find(|&d| d != n).unwrap_or(n),
        });
    }
    if !args.iter().all(|g| g.is_convenient()) {
        return Err(Error::NotConvenient);
    }
    let terms: Vec<(usize, Vec<usize>)> =
        (1..=n).flat_map(|j| subsets(n, j).into_iter().map(move |s| (j, s))).collect();
    let values: Vec<Rational> = terms
        .par_iter()
        .map(|(_, s)| {
            let parts: Vec<&NewtonDiagram> = s.iter().map(|&i| args[i]).collect();
            covol_of_sum(&parts, &vec![Rational::one(); parts.len()])
        })
        .collect::<Result<Vec<_>>>()?;
    let total = terms.iter().zip(values).fold(
        Rational::zero(),
        |acc, ((j, _), v)| {
            if (n - j) % 2 == 0 {
                acc + v
            } else {
                acc - v
            }
        },
    );
    Ok(total / BigRational::from_integer(factorial(n as u32)))
}

/// Both sides of an exact identity or inequality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub rhs: Rational,
    pub holds: bool,
    pub equality: bool,
}

/// `coVol(Γ_11⁺ + Γ_12⁺, rest) = coVol(Γ_11⁺, rest) + coVol(Γ_12⁺, rest)`.
pub fn verify_multilinearity(g11: &NewtonDiagram, g12: &NewtonDiagram, fixed: &[&NewtonDiagram]) -> Result<Comparison> {
    let sum = g11.minkowski_sum(g12)?;
    let with = |first: &NewtonDiagram| -> Result<Rational> {
        let mut args = vec![first];
        args.extend_from_slice(fixed);
        mixed_covolume(&args)
    };
    let lhs = with(&sum)?;
    let rhs = with(g11)? + with(g12)?;
    let equality = lhs == rhs;
    Ok(Comparison { lhs, rhs, holds: equality, equality })
}

/// `coVol(Γ_1, Γ_2, rest)² ≤ coVol(Γ_1, Γ_1, rest)·coVol(Γ_2, Γ_2, rest)`.
pub fn verify_convexity(g1: &NewtonDiagram, g2: &NewtonDiagram, fixed: &[&NewtonDiagram]) -> Result<Comparison> {
    let with = |a: &NewtonDiagram, b: &NewtonDiagram| -> Result<Rational> {
        let mut args = vec![a, b];
        args.extend_from_slice(fixed);
        mixed_covolume(&args)
    };
    let mixed = with(g1, g2)?;
    let lhs = &mixed * &mixed;
    let rhs = with(g1, g1)? * with(g2, g2)?;
    Ok(Comparison { holds: lhs <= rhs, equality: lhs == rhs, lhs, rhs })
}

/// Both sides of the averaged mixed-covolume inequality
/// `(Σ_{k∈K(n,r)} (n+r)!/Π(k_i+1)!) · Σ_{k>0} coVol_k
///   ≥ C(n+r−1, n) · Σ_{k>0} (n+r)!/Π k_i! · coVol_k`,
/// sums over compositions of `n + r` with all parts positive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneralizedInequalityReport {
    pub n: usize,
    pub r: usize,
    #[serde(flatten)]
    pub comparison: Comparison,
    pub all_diagrams_equal: bool,
}

pub fn generalized_inequality_check(tuple: &DiagramTuple) -> Result<GeneralizedInequalityReport> {
    let table = mixed_covolumes(tuple)?;
    Ok(generalized_inequality_from_table(tuple, &table))
}

pub fn generalized_inequality_from_table(
    tuple: &DiagramTuple,
    table: &MixedCovolumeTable,
) -> GeneralizedInequalityReport {
    let (n, r) = (tuple.n(), tuple.r());
    let total = (n + r) as u32;
    let weight: BigInt =
        compositions(n as i64, r as i64).iter().map(|k| multinomial_of(total, k.shifted().parts())).sum();
    let plain: Rational = table.positive_entries().map(|(_, v)| v.clone()).sum();
    let weighted: Rational =
        table.positive_entries().map(|(k, v)| BigRational::from_integer(multinomial_of(total, k.parts())) * v).sum();
    let lhs = BigRational::from_integer(weight) * plain;
    let rhs = BigRational::from_integer(binomial((n + r) as i64 - 1, n as i64)) * weighted;
    GeneralizedInequalityReport {
        n,
        r,
        comparison: Comparison { holds: lhs >= rhs, equality: lhs == rhs, lhs, rhs },
        all_diagrams_equal: tuple.all_equal(),
    }
}
