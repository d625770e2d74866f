//! Experiment drivers: Durfee verdicts, scaling scans, the second-inequality
//! scan, the explicit tetrahedron counterexample and the combinatorial lemma
//! suite, each producing a serializable report.

mod corpus;
mod experiments;
mod render;
mod scan;
mod tables;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::combinatorics::cnr;
use crate::error::Result;
use crate::invariants::{milnor_icis, pg_icis_capped, IcisInput};
use crate::lattice::DEFAULT_CELL_CAP;
use crate::newton::DiagramTuple;
use crate::Rational;

pub use corpus::{random_convenient_diagram, random_tuple, Corpus};
pub use experiments::{
    conjecture_report, counterexample, lemma_suite, ConjectureReport, CounterexampleReport, CounterexampleRow,
    LemmaSuiteReport, LEMMA_CORPUS_SIZE,
};
pub use render::{render, CsvRow, Format, Report, CSV_HEADER};
pub use scan::{scaling_scan, theorem2_check, FittedLeading, LeadingQuotient, ScanSeries, Theorem2Series};
pub use tables::{
    diagram_ehrhart_report, invariants_summary, mixed_covolume_report, polytope_ehrhart_report, EhrhartReport,
    InvariantsSummary, MixedCovolumeReport,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Conventions that affect reported numbers.
pub const CONVENTIONS: &[&str] = &[
    "Vol_j(Γ⁻) sums j-dimensional volumes of Γ⁻ ∩ L_I over coordinate subspaces with |I| = j; Vol_0 = 1",
    "p_g counts strictly positive lattice points of Γ⁻; for complete intersections by inclusion-exclusion over Minkowski sums",
    "μ(ℙT) sums j = 0..n, the j = 0 term counting vertices of Δ outside Δ_0; used only when Δ_0 meets every edge of Δ and is top-dimensional",
    "falling factorial p(p−1)⋯(p−n) is 0 for p ≤ n",
    "verdicts are out-of-hypothesis unless r = 1, n ≥ 2 or r > 1, n > 2",
];

/// Run-wide settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    /// Cap on visited cells in any single lattice count.
    pub budget: u128,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Self { budget: DEFAULT_CELL_CAP, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Metadata {
    pub version: &'static str,
    pub conventions: &'static [&'static str],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Metadata {
    pub fn new(seed: Option<u64>) -> Self {
        Self { version: VERSION, conventions: CONVENTIONS, seed }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Violated,
    OutOfHypothesis,
    PgZero,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Holds => "holds",
            Self::Violated => "violated",
            Self::OutOfHypothesis => "out-of-hypothesis",
            Self::PgZero => "pg-zero",
        }
    }
}

/// SHA-256 over a canonical rendering of the tuple's vertex lists.
pub fn input_hash(tuple: &DiagramTuple) -> String {
    let mut h = Sha256::new();
    h.update(format!("n={};r={}", tuple.n(), tuple.r()));
    for g in tuple.diagrams() {
        h.update(b"|");
        let verts: Vec<String> = g.vertex_strings().iter().map(|v| v.join(",")).collect();
        h.update(verts.join(";"));
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputDescriptor {
    pub hash: String,
    pub n: usize,
    pub r: usize,
    /// Scale applied to every diagram.
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub d: Rational,
}

/// `μ`, `p_g` and `C(n,r)` of one input, with the verdict on
/// `μ > C(n,r)·p_g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub input: InputDescriptor,
    #[serde(serialize_with = "crate::scalar::serialize_integer")]
    pub mu: BigInt,
    #[serde(serialize_with = "crate::scalar::serialize_integer")]
    pub pg: BigInt,
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub cnr: Rational,
    /// `μ − C(n,r)·p_g`.
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub margin: Rational,
    /// `μ / p_g`, when `p_g > 0`.
    #[serde(serialize_with = "crate::scalar::serialize_opt_rational")]
    pub ratio: Option<Rational>,
    pub verdict: Verdict,
    pub metadata: Metadata,
}

impl InvariantReport {
    pub fn from_values(input: InputDescriptor, mu: BigInt, pg: BigInt, in_hypothesis: bool) -> Result<Self> {
        let cnr = cnr(input.n as u32, input.r as u32)?;
        let mu_q = BigRational::from_integer(mu.clone());
        let pg_q = BigRational::from_integer(pg.clone());
        let margin = &mu_q - &cnr * &pg_q;
        let ratio = (!pg.is_zero()).then(|| &mu_q / &pg_q);
        let verdict = if !in_hypothesis {
            Verdict::OutOfHypothesis
        } else if pg.is_zero() {
            Verdict::PgZero
        } else if margin.is_positive() {
            Verdict::Holds
        } else {
            Verdict::Violated
        };
        Ok(Self { input, mu, pg, cnr, margin, ratio, verdict, metadata: Metadata::new(None) })
    }
}

/// `μ`, `p_g`, margin and verdict of `input` scaled by `d`.
pub fn durfee_check_scaled(input: &IcisInput, d: i64, opts: &Options) -> Result<InvariantReport> {
    let dq = BigRational::from_integer(BigInt::from(d));
    let scaled = input.scale(&dq)?;
    let mu = milnor_icis(&scaled)?;
    let pg = pg_icis_capped(&scaled, opts.budget)?;
    let descriptor = InputDescriptor { hash: input_hash(&input.tuple), n: input.n(), r: input.r(), d: dq };
    InvariantReport::from_values(descriptor, mu, pg, input.in_hypothesis())
}

pub fn durfee_check(input: &IcisInput, opts: &Options) -> Result<InvariantReport> {
    durfee_check_scaled(input, 1, opts)
}
