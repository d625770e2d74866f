use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::newton::{DiagramTuple, NewtonDiagram, SupportSet};

/// A convenient diagram in `ℝ^n`: one random point on each axis (coordinate
/// `1..=max`) plus up to three random support points with coordinates
/// `0..=max`.
pub fn random_convenient_diagram<R: Rng>(rng: &mut R, n: usize, max: i64) -> Result<NewtonDiagram> {
    let mut points: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let a = rng.gen_range(1..=max);
            (0..n).map(|j| if i == j { a } else { 0 }).collect()
        })
        .collect();
    for _ in 0..rng.gen_range(0..=3) {
        let p: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=max)).collect();
        if p.iter().any(|&x| x > 0) {
            points.push(p);
        }
    }
    NewtonDiagram::from_support(&SupportSet::new(n, points)?)
}

/// `r` independent random convenient diagrams in `ℝ^{n+r}`.
pub fn random_tuple<R: Rng>(rng: &mut R, n: usize, r: usize, max: i64) -> Result<DiagramTuple> {
    let diagrams = (0..r).map(|_| random_convenient_diagram(rng, n + r, max)).collect::<Result<Vec<_>>>()?;
    DiagramTuple::new(diagrams)
}

/// A reproducible stream of random inputs.
#[derive(Debug, Clone)]
pub struct Corpus {
    rng: ChaCha8Rng,
}

impl Corpus {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn diagram(&mut self, n: usize, max: i64) -> Result<NewtonDiagram> {
        random_convenient_diagram(&mut self.rng, n, max)
    }

    pub fn tuple(&mut self, n: usize, r: usize, max: i64) -> Result<DiagramTuple> {
        random_tuple(&mut self.rng, n, r, max)
    }

    /// Uniform integer in `range`.
    pub fn pick(&mut self, range: std::ops::RangeInclusive<usize>) -> usize {
        self.rng.gen_range(range)
    }

    /// A random diagram that is not homogeneous.
    pub fn non_homogeneous(&mut self, n: usize, max: i64) -> Result<NewtonDiagram> {
        loop {
            let g = self.diagram(n, max)?;
            if !g.is_homogeneous() {
                return Ok(g);
            }
        }
    }
}
