use std::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::{
    ConjectureReport, CounterexampleReport, EhrhartReport, InvariantReport, InvariantsSummary, LemmaSuiteReport,
    MixedCovolumeReport, ScanSeries, Theorem2Series,
};
use crate::check::Check;
use crate::error::{Error, Result};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

pub const CSV_HEADER: &str = "input_hash,n,r,d,mu,pg,cnr_num,cnr_den,margin_num,margin_den,verdict";

/// One line of the fixed CSV layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsvRow {
    pub input_hash: String,
    pub n: usize,
    pub r: usize,
    pub d: String,
    pub mu: String,
    pub pg: String,
    pub cnr: Rational,
    pub margin: Rational,
    pub verdict: String,
}

impl CsvRow {
    fn line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.input_hash,
            self.n,
            self.r,
            self.d,
            self.mu,
            self.pg,
            self.cnr.numer(),
            self.cnr.denom(),
            self.margin.numer(),
            self.margin.denom(),
            self.verdict
        )
    }
}

/// A report the command line can print.
pub trait Report: Serialize {
    /// Whether every asserted check passed.
    fn passed(&self) -> bool;
    fn text(&self) -> String;
    /// Rows in the fixed CSV layout; `None` when the report has no such rows.
    fn csv_rows(&self) -> Option<Vec<CsvRow>> {
        None
    }
}

pub fn render<R: Report>(report: &R, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(report.text()),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).map_err(|e| Error::Inconsistent(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let rows = report.csv_rows().ok_or_else(|| Error::Input("this command has no CSV form".into()))?;
            let mut s = String::from(CSV_HEADER);
            s.push('\n');
            for row in rows {
                s.push_str(&row.line());
                s.push('\n');
            }
            Ok(s)
        }
    }
}

fn checks_text(out: &mut String, checks: &[Check]) {
    for c in checks {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "  [{mark}] {} ({} cases): {}", c.name, c.cases, c.detail);
    }
}

fn short(hash: &str) -> &str {
    &hash[..hash.len().min(12)]
}

fn int_q(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

impl InvariantReport {
    fn csv_row(&self) -> CsvRow {
        CsvRow {
            input_hash: self.input.hash.clone(),
            n: self.input.n,
            r: self.input.r,
            d: self.input.d.to_string(),
            mu: self.mu.to_string(),
            pg: self.pg.to_string(),
            cnr: self.cnr.clone(),
            margin: self.margin.clone(),
            verdict: self.verdict.as_str().into(),
        }
    }

    fn line(&self) -> String {
        let ratio = self.ratio.as_ref().map_or_else(|| "-".to_string(), ToString::to_string);
        format!(
            "d={} μ={} p_g={} C={} margin={} ratio={} verdict={}",
            self.input.d,
            self.mu,
            self.pg,
            self.cnr,
            self.margin,
            ratio,
            self.verdict.as_str()
        )
    }
}

impl Report for InvariantReport {
    fn passed(&self) -> bool {
        self.verdict != super::Verdict::Violated
    }

    fn text(&self) -> String {
        format!("input {} (n={}, r={})\n{}\n", short(&self.input.hash), self.input.n, self.input.r, self.line())
    }

    fn csv_rows(&self) -> Option<Vec<CsvRow>> {
        Some(vec![self.csv_row()])
    }
}

impl Report for ScanSeries {
    fn passed(&self) -> bool {
        ScanSeries::passed(self)
    }

    fn text(&self) -> String {
        let mut out = format!("scaling scan of {} (n={}, r={})\n", short(&self.input_hash), self.n, self.r);
        for p in &self.points {
            let _ = writeln!(out, "  {}", p.line());
        }
        let l = &self.leading;
        let _ = writeln!(
            out,
            "leading terms: μ ~ {} d^N, p_g ~ {} d^N, quotient {} vs C(n,r) = {}",
            l.mu, l.pg, l.quotient, l.cnr
        );
        if let Some(f) = &self.fitted {
            let _ = writeln!(out, "fitted leading terms: μ {} p_g {}", f.mu, f.pg);
        }
        let d0 = self.d0.map_or_else(|| "none in range".to_string(), |d| d.to_string());
        let _ = writeln!(out, "d0 = {d0}; ratio strictly decreasing: {}", self.ratio_decreasing);
        checks_text(&mut out, &self.checks);
        out
    }

    fn csv_rows(&self) -> Option<Vec<CsvRow>> {
        Some(self.points.iter().map(InvariantReport::csv_row).collect())
    }
}

impl Report for Theorem2Series {
    fn passed(&self) -> bool {
        Theorem2Series::passed(self)
    }

    fn text(&self) -> String {
        let mut out = format!(
            "second inequality scan of {} (n={}, p={}, homogeneous={}, meets all edges={}, μ(ℙT) term={})\n",
            short(&self.input_hash),
            self.n,
            self.multiplicity,
            self.homogeneous,
            self.meets_all_edges,
            self.tangent_cone_term
        );
        for p in &self.points {
            let _ = writeln!(
                out,
                "  k={} μ={} p_g={} μ(ℙT)={} correction={} margin={}",
                p.k, p.mu, p.pg, p.mu_tangent_cone, p.correction, p.margin
            );
        }
        if let Some(m) = &self.leading_margin {
            let _ = writeln!(out, "leading margin: {m}");
        }
        let k0 = self.k0.map_or_else(|| "none in range".to_string(), |k| k.to_string());
        let _ = writeln!(out, "k0 = {k0}");
        checks_text(&mut out, &self.checks);
        out
    }

    fn csv_rows(&self) -> Option<Vec<CsvRow>> {
        let factorial = crate::combinatorics::factorial(self.n as u32 + 1);
        Some(
            self.points
                .iter()
                .map(|p| CsvRow {
                    input_hash: self.input_hash.clone(),
                    n: self.n,
                    r: 1,
                    d: p.k.to_string(),
                    mu: p.mu.to_string(),
                    pg: p.pg.to_string(),
                    cnr: BigRational::from_integer(factorial.clone()),
                    margin: BigRational::from_integer(p.margin.clone()),
                    verdict: if p.margin >= BigInt::from(0) { "holds" } else { "violated" }.into(),
                })
                .collect(),
        )
    }
}

impl Report for CounterexampleReport {
    fn passed(&self) -> bool {
        CounterexampleReport::passed(self)
    }

    fn text(&self) -> String {
        let mut out = String::from("tetrahedral region Conv((−1,−1,−1), m e_1, m e_2, m e_3)\n");
        for row in &self.rows {
            let _ = writeln!(
                out,
                "  m={} Vol3={} Vol2={} Vol1={} interior={} face interior={} μ={} p_g={} μ−6p_g={}",
                row.m,
                row.vol3,
                row.vol2,
                row.vol1,
                row.interior_points,
                row.face_interior_points,
                row.mu,
                row.pg,
                row.margin
            );
        }
        checks_text(&mut out, &self.checks);
        out
    }

    fn csv_rows(&self) -> Option<Vec<CsvRow>> {
        Some(
            self.rows
                .iter()
                .map(|row| CsvRow {
                    input_hash: format!("tetrahedron-m{}", row.m),
                    n: 2,
                    r: 1,
                    d: "1".into(),
                    mu: row.mu.to_string(),
                    pg: row.pg.to_string(),
                    cnr: int_q(6),
                    margin: row.margin.clone(),
                    verdict: if row.margin > int_q(0) { "holds" } else { "violated" }.into(),
                })
                .collect(),
        )
    }
}

impl Report for LemmaSuiteReport {
    fn passed(&self) -> bool {
        LemmaSuiteReport::passed(self)
    }

    fn text(&self) -> String {
        let mut out = format!(
            "lemma suite: n ≤ {}, r ≤ {}, {} random diagrams (seed {})\n",
            self.n_max,
            self.r_max,
            self.corpus_size,
            self.metadata.seed.unwrap_or_default()
        );
        checks_text(&mut out, &self.checks);
        out
    }
}

impl Report for ConjectureReport {
    fn passed(&self) -> bool {
        true
    }

    fn text(&self) -> String {
        format!(
            "{} (n={}, r={}) [{}]: μ − C·p_g = {}, covolume side = {}, exceeds: {}\n",
            short(&self.input_hash),
            self.n,
            self.r,
            self.status,
            self.lhs,
            self.rhs,
            self.lhs_exceeds_rhs
        )
    }
}

impl Report for MixedCovolumeReport {
    fn passed(&self) -> bool {
        MixedCovolumeReport::passed(self)
    }

    fn text(&self) -> String {
        let mut out = format!(
            "mixed covolumes of {} (n={}, r={}, grid {})\n",
            short(&self.input_hash),
            self.n,
            self.r,
            self.grid.as_str()
        );
        for (k, v) in self.table.entries() {
            let _ = writeln!(out, "  ({k}) {v}");
        }
        let g = &self.generalized_inequality.comparison;
        let _ = writeln!(out, "averaged inequality: {} ≥ {} (equality {})", g.lhs, g.rhs, g.equality);
        checks_text(&mut out, &self.checks);
        out
    }
}

impl Report for EhrhartReport {
    fn passed(&self) -> bool {
        EhrhartReport::passed(self)
    }

    fn text(&self) -> String {
        match self {
            Self::Polytope { dim, coefficients, volume, boundary_volume, .. } => format!(
                "Ehrhart polynomial (dim {dim}), c_0..c_N: {}\nvolume {volume}, boundary volume {boundary_volume}\n",
                coefficients.join(", ")
            ),
            Self::Diagram { input_hash, dim, leading, fitted, samples, pg_box_difference, checks, .. } => {
                let mut out = format!("p_g(kΓ) for {} in dimension {dim}\n", short(input_hash));
                for (k, c) in samples {
                    let _ = writeln!(out, "  k={k} p_g={c}");
                }
                let _ = writeln!(out, "fit, constant term first: {}", fitted.join(", "));
                let _ = writeln!(out, "leading terms from volumes: {}, {}", leading[0], leading[1]);
                let _ = writeln!(out, "p_g by box difference: {pg_box_difference}");
                checks_text(&mut out, checks);
                out
            }
        }
    }
}

impl Report for InvariantsSummary {
    fn passed(&self) -> bool {
        true
    }

    fn text(&self) -> String {
        let mut out = self.report.text();
        if let Some(v) = &self.volumes {
            let _ = writeln!(out, "Vol_0..Vol_N of Γ⁻: {}", v.join(", "));
        }
        if let Some(p) = self.multiplicity {
            let _ = writeln!(out, "multiplicity {p}");
        }
        if let Some(t) = &self.mixed_covolumes {
            for (k, v) in t.entries() {
                let _ = writeln!(out, "  coVol({k}) = {v}");
            }
        }
        out
    }

    fn csv_rows(&self) -> Option<Vec<CsvRow>> {
        self.report.csv_rows()
    }
}
