use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::Polytope;
use crate::error::{Error, Result};
use crate::scalar::ExactField;

/// Default cap on the number of cells a single enumeration may visit.
pub const DEFAULT_CELL_CAP: u128 = 100_000_000;

/// Closed integer box `Π [lower_i, upper_i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundingBox {
    pub lower: Vec<i64>,
    pub upper: Vec<i64>,
}

impl BoundingBox {
    pub fn new(lower: Vec<i64>, upper: Vec<i64>) -> Self {
        Self { lower, upper }
    }

    /// `[lo, hi]^n`.
    pub fn cube(n: usize, lo: i64, hi: i64) -> Self {
        Self { lower: vec![lo; n], upper: vec![hi; n] }
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    /// Number of integer cells; zero if any side is empty.
    pub fn cells(&self) -> u128 {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(l, u)| if u < l { 0 } else { (u - l + 1) as u128 })
            .fold(1u128, |acc, s| acc.saturating_mul(s))
    }
}

/// Lattice points of `bbox` satisfying `membership`, in lexicographic
/// order, with the default cell cap.
pub fn enumerate_lattice_points(
    membership: impl Fn(&[i64]) -> bool + Sync,
    bbox: &BoundingBox,
) -> Result<Vec<Vec<i64>>> {
    enumerate_lattice_points_capped(membership, bbox, DEFAULT_CELL_CAP)
}

pub fn enumerate_lattice_points_capped(
    membership: impl Fn(&[i64]) -> bool + Sync,
    bbox: &BoundingBox,
    cap: u128,
) -> Result<Vec<Vec<i64>>> {
    let cells = bbox.cells();
    if cells > cap {
        return Err(Error::BudgetExceeded { requested: cells, cap });
    }
    if cells == 0 {
        return Ok(Vec::new());
    }
    let n = bbox.dim();
    if n == 0 {
        return Ok(if membership(&[]) { vec![Vec::new()] } else { Vec::new() });
    }
    // slabs of the first coordinate run in parallel; concatenation keeps the order
    let slabs: Vec<Vec<Vec<i64>>> = (bbox.lower[0]..=bbox.upper[0])
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut x = bbox.lower.clone();
            x[0] = first;
            loop {
                if membership(&x) {
                    out.push(x.clone());
                }
                let mut i = n - 1;
                loop {
                    if i == 0 {
                        return out;
                    }
                    if x[i] < bbox.upper[i] {
                        x[i] += 1;
                        break;
                    }
                    x[i] = bbox.lower[i];
                    i -= 1;
                }
            }
        })
        .collect();
    Ok(slabs.into_iter().flatten().collect())
}

/// Integer form of a polytope's constraints for lattice-point tests:
/// `⟨a, x⟩ ≥ bound` per facet and `⟨e, x⟩ = value` per equation.
pub(crate) struct IntegerConstraints {
    pub(crate) inequalities: Vec<(Vec<i64>, i128)>,
    pub(crate) equations: Vec<(Vec<i64>, i128)>,
    pub(crate) infeasible: bool,
}

impl IntegerConstraints {
    fn satisfied(&self, x: &[i64]) -> bool {
        let dot = |a: &[i64]| a.iter().zip(x).map(|(p, q)| *p as i128 * *q as i128).sum::<i128>();
        self.equations.iter().all(|(e, v)| dot(e) == *v) && self.inequalities.iter().all(|(a, b)| dot(a) >= *b)
    }
}

impl<F: ExactField> Polytope<F> {
    /// Constraints for the lattice points of `k·P` (relative interior when
    /// `interior`).
    pub(crate) fn integer_constraints(&self, k: i64, interior: bool) -> Result<IntegerConstraints> {
        let kq = BigInt::from(k);
        let to_i128 = |v: BigInt| v.to_i128().ok_or(Error::Overflow("lattice constraint"));
        let mut inequalities = Vec::with_capacity(self.facets.len());
        for f in &self.facets {
            let c = f.offset.to_rational() * num_rational::BigRational::from_integer(kq.clone());
            // integer x: ⟨a,x⟩ ≥ c ⇔ ⟨a,x⟩ ≥ ⌈c⌉; strict ⇔ ⟨a,x⟩ ≥ ⌊c⌋ + 1
            let bound = if interior { c.floor().to_integer() + 1 } else { c.ceil().to_integer() };
            inequalities.push((f.normal.clone(), to_i128(bound)?));
        }
        let mut equations = Vec::with_capacity(self.equations.len());
        let mut infeasible = false;
        for e in &self.equations {
            let c = e.offset.to_rational() * num_rational::BigRational::from_integer(kq.clone());
            if c.is_integer() {
                equations.push((e.normal.clone(), to_i128(c.to_integer())?));
            } else {
                infeasible = true;
            }
        }
        Ok(IntegerConstraints { inequalities, equations, infeasible })
    }

    fn dilated_box(&self, k: i64) -> Result<super::BoundingBox> {
        let b = self.bounding_box()?;
        let scale = |v: i64| v.checked_mul(k).ok_or(Error::Overflow("bounding box"));
        Ok(super::BoundingBox {
            lower: b.lower.iter().map(|&v| scale(v)).collect::<Result<_>>()?,
            upper: b.upper.iter().map(|&v| scale(v)).collect::<Result<_>>()?,
        })
    }

    /// Lattice points of `k·P` (relative interior when `interior`), listed
    /// lexicographically.
    pub fn lattice_points(&self, k: i64, interior: bool) -> Result<Vec<Vec<i64>>> {
        let cons = self.integer_constraints(k, interior)?;
        if cons.infeasible {
            return Ok(Vec::new());
        }
        enumerate_lattice_points(|x| cons.satisfied(x), &self.dilated_box(k)?)
    }

    /// `|k·P ∩ ℤ^N|`, or the relative-interior count when `interior`.
    ///
    /// Sweeps all but the last coordinate over the bounding box and solves
    /// the last coordinate's range from the constraints directly.
    pub fn count_lattice_points(&self, k: i64, interior: bool, cap: u128) -> Result<BigInt> {
        if k < 0 {
            return Err(Error::Precondition("dilation factor must be non-negative".into()));
        }
        let cons = self.integer_constraints(k, interior)?;
        if cons.infeasible {
            return Ok(BigInt::zero());
        }
        let bbox = self.dilated_box(k)?;
        let n = self.ambient_dim;
        if n == 0 {
            return Ok(BigInt::from(u8::from(cons.satisfied(&[]))));
        }
        let head = BoundingBox::new(bbox.lower[..n - 1].to_vec(), bbox.upper[..n - 1].to_vec());
        let cells = head.cells();
        if cells > cap {
            return Err(Error::BudgetExceeded { requested: cells, cap });
        }
        let (lo_box, hi_box) = (bbox.lower[n - 1] as i128, bbox.upper[n - 1] as i128);
        let fiber = |prefix: &[i64]| -> i128 {
            let partial = |a: &[i64]| a[..n - 1].iter().zip(prefix).map(|(p, q)| *p as i128 * *q as i128).sum::<i128>();
            let (mut lo, mut hi) = (lo_box, hi_box);
            for (e, v) in &cons.equations {
                let rest = v - partial(e);
                let last = e[n - 1] as i128;
                if last == 0 {
                    if rest != 0 {
                        return 0;
                    }
                } else if rest % last != 0 {
                    return 0;
                } else {
                    lo = lo.max(rest / last);
                    hi = hi.min(rest / last);
                }
            }
            for (a, b) in &cons.inequalities {
                let rest = b - partial(a);
                let last = a[n - 1] as i128;
                if last > 0 {
                    lo = lo.max(Integer::div_ceil(&rest, &last));
                } else if last < 0 {
                    hi = hi.min(Integer::div_floor(&rest, &last));
                } else if rest > 0 {
                    return 0;
                }
            }
            (hi - lo + 1).max(0)
        };
        let total: i128 = if n == 1 { fiber(&[]) } else { sweep(&head, &fiber) };
        Ok(BigInt::from(total))
    }
}

/// Sum of `f` over all points of the box.
fn sweep(bbox: &BoundingBox, f: &(impl Fn(&[i64]) -> i128 + Sync)) -> i128 {
    let n = bbox.dim();
    (bbox.lower[0]..=bbox.upper[0])
        .into_par_iter()
        .map(|first| {
            let mut x = bbox.lower.clone();
            x[0] = first;
            let mut acc = 0i128;
            loop {
                acc += f(&x);
                let mut i = n - 1;
                loop {
                    if i == 0 {
                        return acc;
                    }
                    if x[i] < bbox.upper[i] {
                        x[i] += 1;
                        break;
                    }
                    x[i] = bbox.lower[i];
                    i -= 1;
                }
            }
        })
        .sum()
}
