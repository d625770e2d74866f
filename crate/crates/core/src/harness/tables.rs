use num_bigint::BigInt;
use serde::Serialize;

use super::{input_hash, Metadata};
use crate::check::Check;
use crate::covolume::{
    generalized_inequality_from_table, GeneralizedInequalityReport, InterpolationGrid, MixedCovolumeTable,
};
use crate::ehrhart::{boundary_volume, ehrhart_polynomial, pg_by_box_difference, pg_scaling_fit};
use crate::error::Result;
use crate::newton::{DiagramTuple, NewtonDiagram};
use crate::{Polytope, Rational};

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MixedCovolumeReport {
    pub input_hash: String,
    pub n: usize,
    pub r: usize,
    pub grid: InterpolationGrid,
    pub table: MixedCovolumeTable,
    pub generalized_inequality: GeneralizedInequalityReport,
    pub checks: Vec<Check>,
    pub metadata: Metadata,
}

impl MixedCovolumeReport {
    pub fn passed(&self) -> bool {
        crate::check::all_passed(&self.checks)
    }
}

pub fn mixed_covolume_report(tuple: &DiagramTuple) -> Result<MixedCovolumeReport> {
    let table = crate::covolume::mixed_covolumes(tuple)?;
    let generalized = generalized_inequality_from_table(tuple, &table);
    let mut checks = Vec::new();
    let ok = generalized.comparison.holds;
    let detail = format!("{} ≥ {}", generalized.comparison.lhs, generalized.comparison.rhs);
    let name = "averaged mixed-covolume inequality";
    checks.push(if ok { Check::pass(name, 1, detail) } else { Check::fail(name, 1, detail) });
    if generalized.all_diagrams_equal {
        let name = "equality for equal diagrams";
        checks.push(if generalized.comparison.equality {
            Check::pass(name, 1, "ok")
        } else {
            Check::fail(name, 1, "strict inequality")
        });
    }
    Ok(MixedCovolumeReport {
        input_hash: input_hash(tuple),
        n: tuple.n(),
        r: tuple.r(),
        grid: table.grid,
        table,
        generalized_inequality: generalized,
        checks,
        metadata: Metadata::new(None),
    })
}

/// Ehrhart data of a lattice polytope, or the lattice-point expansion of
/// `k ↦ p_g(kΓ)` for a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum EhrhartReport {
    Polytope {
        dim: usize,
        /// `c_0, …, c_N`.
        coefficients: Vec<String>,
        #[serde(serialize_with = "crate::scalar::serialize_rational")]
        volume: Rational,
        #[serde(serialize_with = "crate::scalar::serialize_rational")]
        boundary_volume: Rational,
        metadata: Metadata,
    },
    Diagram {
        input_hash: String,
        dim: usize,
        /// `(Vol_N(Γ⁻), (Vol_{N−1}(Γ) − Vol_{N−1}(Γ⁻))/2)`.
        leading: [String; 2],
        /// Coefficients of the exact fit of `p_g(kΓ)`, constant term first.
        fitted: Vec<String>,
        samples: Vec<(i64, String)>,
        #[serde(serialize_with = "crate::scalar::serialize_integer")]
        pg_box_difference: BigInt,
        checks: Vec<Check>,
        metadata: Metadata,
    },
}

impl EhrhartReport {
    pub fn passed(&self) -> bool {
        match self {
            Self::Polytope { .. } => true,
            Self::Diagram { checks, .. } => crate::check::all_passed(checks),
        }
    }
}

pub fn polytope_ehrhart_report(p: &Polytope) -> Result<EhrhartReport> {
    let ep = ehrhart_polynomial(p)?;
    Ok(EhrhartReport::Polytope {
        dim: ep.dim(),
        coefficients: strings(&ep.coefficients()),
        volume: p.normalized_volume()?,
        boundary_volume: boundary_volume(p)?,
        metadata: Metadata::new(None),
    })
}

pub fn diagram_ehrhart_report(g: &NewtonDiagram) -> Result<EhrhartReport> {
    let fit = pg_scaling_fit(g)?;
    let box_pg = pg_by_box_difference(g)?;
    let direct = g.count_positive_points()?;
    let mut checks = Vec::new();
    let name = "fitted leading coefficients match the volume formula";
    checks.push(if fit.leading_terms_match() { Check::pass(name, 1, "ok") } else { Check::fail(name, 1, "mismatch") });
    let name = "remainder has degree ≤ N − 2";
    let detail = format!("{:?}", fit.remainder_degree);
    checks.push(if fit.remainder_degree_ok() { Check::pass(name, 1, detail) } else { Check::fail(name, 1, detail) });
    let name = "box-difference p_g equals direct count";
    let detail = format!("{box_pg} vs {direct}");
    checks.push(if box_pg == direct { Check::pass(name, 1, detail) } else { Check::fail(name, 1, detail) });
    Ok(EhrhartReport::Diagram {
        input_hash: input_hash(&DiagramTuple::single(g.clone())),
        dim: g.ambient_dim(),
        leading: [fit.leading.0.to_string(), fit.leading.1.to_string()],
        fitted: strings(&(0..=g.ambient_dim()).map(|i| fit.polynomial.coeff(i)).collect::<Vec<_>>()),
        samples: fit.samples.iter().map(|(k, c)| (*k, c.to_string())).collect(),
        pg_box_difference: box_pg,
        checks,
        metadata: Metadata::new(None),
    })
}

/// Invariant report plus the per-dimension volumes of a hypersurface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantsSummary {
    #[serde(flatten)]
    pub report: super::InvariantReport,
    /// `Vol_0(Γ⁻), …, Vol_N(Γ⁻)` for a single diagram.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub volumes: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<i64>,
    /// Mixed covolumes of the tuple when `r > 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mixed_covolumes: Option<MixedCovolumeTable>,
}

pub fn invariants_summary(input: &crate::invariants::IcisInput, opts: &super::Options) -> Result<InvariantsSummary> {
    let report = super::durfee_check(input, opts)?;
    let (volumes, multiplicity, mixed) = if input.r() == 1 {
        let g = &input.tuple.diagrams()[0];
        let vols = (0..=g.ambient_dim()).map(|j| g.vol_j_sum(j).map(|v| v.to_string())).collect::<Result<Vec<_>>>()?;
        (Some(vols), Some(g.multiplicity()?), None)
    } else {
        (None, None, Some(crate::covolume::mixed_covolumes(&input.tuple)?))
    };
    Ok(InvariantsSummary { report, volumes, multiplicity, mixed_covolumes: mixed })
}
