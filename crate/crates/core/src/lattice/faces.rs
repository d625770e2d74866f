use std::collections::BTreeSet;

use num_rational::BigRational;
use serde::Serialize;

use super::Polytope;
use crate::linalg;
use crate::scalar::ExactField;

/// A non-empty face, identified by its sorted vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Face {
    pub dim: usize,
    pub vertices: Vec<usize>,
}

/// All non-empty faces of a polytope, sorted by `(dim, vertex list)`, with
/// the polytope itself as the last entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceLattice {
    pub faces: Vec<Face>,
    /// `covers[i]`: faces of dimension `dim(i) − 1` contained in face `i`.
    pub covers: Vec<Vec<usize>>,
}

impl FaceLattice {
    pub fn faces_of_dim(&self, d: usize) -> impl Iterator<Item = (usize, &Face)> {
        self.faces.iter().enumerate().filter(move |(_, f)| f.dim == d)
    }

    /// `f_i` for `i = 0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.faces.last().map_or(0, |f| f.dim);
        (0..=top).map(|d| self.faces_of_dim(d).count()).collect()
    }

    /// Euler relation for the boundary complex of a polytope of dimension
    /// `d ≥ 1`: `Σ_{i<d} (−1)^i f_i = 1 − (−1)^d`.
    pub fn satisfies_euler_relation(&self) -> bool {
        let f = self.f_vector();
        let d = f.len() - 1;
        if d == 0 {
            return f[0] == 1;
        }
        let lhs: i64 = f[..d].iter().enumerate().map(|(i, &n)| if i % 2 == 0 { n as i64 } else { -(n as i64) }).sum();
        let rhs = if d.is_multiple_of(2) { 0 } else { 2 };
        lhs == rhs
    }
}

pub(crate) fn affine_rank<F: ExactField>(points: &[&Vec<F>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let diffs: Vec<Vec<BigRational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(points[0].iter()).map(|(a, b)| a.to_rational() - b.to_rational()).collect())
        .collect();
    linalg::rank(&diffs)
}

/// Closes a family of vertex sets under pairwise intersection with the
/// generators.
pub(crate) fn intersection_closure(generators: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let mut all: BTreeSet<Vec<usize>> = generators.iter().cloned().collect();
    let mut frontier: Vec<Vec<usize>> = generators.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for b in generators {
                let c: Vec<usize> = a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect();
                if !c.is_empty() && all.insert(c.clone()) {
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    all
}

pub(crate) fn build_lattice<F: ExactField>(
    vertices: &[Vec<F>],
    sets: impl IntoIterator<Item = Vec<usize>>,
) -> FaceLattice {
    let mut faces: Vec<Face> = sets
        .into_iter()
        .map(|vs| {
            let pts: Vec<&Vec<F>> = vs.iter().map(|&i| &vertices[i]).collect();
            Face { dim: affine_rank(&pts), vertices: vs }
        })
        .collect();
    faces.sort();
    faces.dedup();
    let covers = faces
        .iter()
        .map(|f| {
            faces
                .iter()
                .enumerate()
                .filter(|(_, g)| g.dim + 1 == f.dim && g.vertices.iter().all(|v| f.vertices.binary_search(v).is_ok()))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    FaceLattice { faces, covers }
}

impl<F: ExactField> Polytope<F> {
    pub fn face_lattice(&self) -> FaceLattice {
        let mut sets = intersection_closure(&self.facet_vertices);
        for i in 0..self.vertices.len() {
            sets.insert(vec![i]);
        }
        sets.insert((0..self.vertices.len()).collect());
        build_lattice(&self.vertices, sets)
    }
}
