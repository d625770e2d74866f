use crate::error::{Error, Result};
use crate::Rational;

use super::NewtonDiagram;

/// An ordered list `(Γ_1, …, Γ_r)` of diagrams in a common `ℝ^{n+r}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramTuple {
    n: usize,
    r: usize,
    diagrams: Vec<NewtonDiagram>,
}

impl DiagramTuple {
    /// Requires `r ≥ 1` and a common ambient dimension `N ≥ r`; `n = N − r`.
    pub fn new(diagrams: Vec<NewtonDiagram>) -> Result<Self> {
        let first = diagrams.first().ok_or(Error::EmptyInput("diagram tuple"))?;
        let dim = first.ambient_dim();
        if let Some(bad) = diagrams.iter().find(|g| g.ambient_dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.ambient_dim() });
        }
        let r = diagrams.len();
        if dim < r {
            return Err(Error::Precondition(format!("{r} diagrams in ambient dimension {dim}")));
        }
        Ok(Self { n: dim - r, r, diagrams })
    }

    /// A single-diagram tuple.
    pub fn single(diagram: NewtonDiagram) -> Self {
        Self { n: diagram.ambient_dim() - 1, r: 1, diagrams: vec![diagram] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn ambient_dim(&self) -> usize {
        self.n + self.r
    }

    pub fn diagrams(&self) -> &[NewtonDiagram] {
        &self.diagrams
    }

    pub fn all_convenient(&self) -> bool {
        self.diagrams.iter().all(NewtonDiagram::is_convenient)
    }

    pub fn all_equal(&self) -> bool {
        self.diagrams.windows(2).all(|w| w[0] == w[1])
    }

    /// Every diagram scaled by `d`.
    pub fn scale(&self, d: &Rational) -> Result<Self> {
        let diagrams = self.diagrams.iter().map(|g| g.scale(d)).collect::<Result<Vec<_>>>()?;
        Ok(Self { diagrams, ..*self })
    }

    /// Every diagram restricted to the coordinate subspace `L_I`; needs
    /// `|I| ≥ r`.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        let diagrams = self.diagrams.iter().map(|g| g.restrict(subset)).collect::<Result<Vec<_>>>()?;
        Self::new(diagrams)
    }

    /// The same diagrams in another order.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        if order.len() != self.r {
            return Err(Error::Precondition("permutation length differs from r".into()));
        }
        Self::new(order.iter().map(|&i| self.diagrams[i].clone()).collect())
    }
}
