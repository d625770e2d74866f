use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::faces::FaceLattice;
use super::{convex_hull, rational_point, Polytope};
use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{common_denominator, ExactField};

/// Pulling triangulation of `face`: every simplex is the lowest-index vertex
/// joined to a simplex of a subface not containing it.
pub(crate) fn pulling_triangulation(lattice: &FaceLattice, face: usize) -> Vec<Vec<usize>> {
    fn go(lattice: &FaceLattice, face: usize, memo: &mut HashMap<usize, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
        if let Some(t) = memo.get(&face) {
            return t.clone();
        }
        let f = &lattice.faces[face];
        let out = if f.dim == 0 {
            vec![f.vertices.clone()]
        } else {
            let apex = f.vertices[0];
            let mut out = Vec::new();
            for &g in &lattice.covers[face] {
                if lattice.faces[g].vertices.contains(&apex) {
                    continue;
                }
                for s in go(lattice, g, memo) {
                    let mut simplex = Vec::with_capacity(s.len() + 1);
                    simplex.push(apex);
                    simplex.extend(s);
                    out.push(simplex);
                }
            }
            out
        };
        memo.insert(face, out.clone());
        out
    }
    go(lattice, face, &mut HashMap::new())
}

/// Integer coordinates `scale · v` with `scale` the common denominator.
pub(crate) fn integer_coordinates<F: ExactField>(points: &[Vec<F>]) -> (BigInt, Vec<Vec<BigInt>>) {
    let scale = common_denominator(points.iter().flatten());
    let q = BigRational::from_integer(scale.clone());
    let ints = points.iter().map(|p| p.iter().map(|x| (x.to_rational() * &q).to_integer()).collect()).collect();
    (scale, ints)
}

/// `|det(w_1 − w_0, …, w_N − w_0)|` for integer points.
pub(crate) fn simplex_det(points: &[&Vec<BigInt>]) -> BigInt {
    let base = points[0];
    let m: Vec<Vec<BigInt>> = points[1..].iter().map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect()).collect();
    linalg::determinant_int(&m).abs()
}

fn into_field<F: ExactField>(q: BigRational) -> Result<F> {
    F::from_rational(&q).ok_or(Error::Overflow("scalar conversion"))
}

impl<F: ExactField> Polytope<F> {
    fn require_full_dimensional(&self) -> Result<()> {
        if self.is_full_dimensional() {
            Ok(())
        } else {
            Err(Error::NotFullDimensional { dim: self.dim, ambient: self.ambient_dim })
        }
    }

    /// Euclidean volume (unit cube = 1), by coning the vertex centroid over
    /// pulling triangulations of the facets.
    pub fn normalized_volume(&self) -> Result<F> {
        self.require_full_dimensional()?;
        let n = self.ambient_dim;
        if n == 0 {
            return Ok(F::one());
        }
        let m = BigInt::from(self.vertices.len());
        let (scale, ints) = integer_coordinates(&self.vertices);
        let lifted: Vec<Vec<BigInt>> = ints.iter().map(|p| p.iter().map(|x| x * &m).collect()).collect();
        let centroid: Vec<BigInt> = (0..n).map(|i| ints.iter().map(|p| &p[i]).sum()).collect();
        let lattice = self.face_lattice();
        let mut total = BigInt::zero();
        for (id, _) in lattice.faces_of_dim(n - 1) {
            for s in pulling_triangulation(&lattice, id) {
                let mut pts = vec![&centroid];
                pts.extend(s.iter().map(|&v| &lifted[v]));
                total += simplex_det(&pts);
            }
        }
        let denom = factorial(n as u32) * num_traits::pow(scale * m, n);
        into_field(BigRational::new(total, denom))
    }

    /// Volume through a pulling triangulation of the whole polytope; an
    /// independent route to [`Polytope::normalized_volume`].
    pub fn pulling_volume(&self) -> Result<F> {
        self.require_full_dimensional()?;
        let n = self.ambient_dim;
        let (scale, ints) = integer_coordinates(&self.vertices);
        let lattice = self.face_lattice();
        let top = lattice.faces.len() - 1;
        let total: BigInt = pulling_triangulation(&lattice, top)
            .iter()
            .map(|s| simplex_det(&s.iter().map(|&v| &ints[v]).collect::<Vec<_>>()))
            .sum();
        let denom = factorial(n as u32) * num_traits::pow(scale, n);
        into_field(BigRational::new(total, denom))
    }

    /// Simplices (vertex index lists) of the pulling triangulation.
    pub fn triangulation(&self) -> Vec<Vec<usize>> {
        let lattice = self.face_lattice();
        let top = lattice.faces.len() - 1;
        pulling_triangulation(&lattice, top)
    }

    /// Volume measured in the lattice `aff(P) ∩ ℤ^N`, normalized so that a
    /// fundamental domain of that lattice has volume 1.
    pub fn relative_lattice_volume(&self) -> Result<F> {
        if self.dim == 0 {
            return Ok(F::one());
        }
        let n = self.ambient_dim;
        let (scale, ints) = integer_coordinates(&self.vertices);
        let diffs: Vec<Vec<BigInt>> =
            ints[1..].iter().map(|p| p.iter().zip(&ints[0]).map(|(a, b)| a - b).collect()).collect();

        if !self.equations.is_empty() {
            let rows: Vec<Vec<BigInt>> =
                self.equations.iter().map(|e| e.normal.iter().map(|&a| BigInt::from(a)).collect()).collect();
            let mut rhs = Vec::with_capacity(rows.len());
            for e in &self.equations {
                let c = e.offset.to_rational();
                if !c.is_integer() {
                    return Err(Error::NoLatticePoint);
                }
                rhs.push(c.to_integer());
            }
            if linalg::solve_integer(&rows, &rhs, n).is_none() {
                return Err(Error::NoLatticePoint);
            }
        }

        let basis = linalg::saturated_basis(&diffs, n);
        let basis_q = linalg::to_rational_matrix(&basis);
        let (_, pivots) = linalg::rref(basis_q.clone());
        // B_R^T c = (v − v_0)_R
        let system: Vec<Vec<BigRational>> =
            pivots.iter().map(|&c| basis_q.iter().map(|row| row[c].clone()).collect()).collect();
        let scale_q = BigRational::from_integer(scale);
        let mut coords: Vec<Vec<BigRational>> = Vec::with_capacity(ints.len());
        for p in &ints {
            let rhs: Vec<BigRational> =
                pivots.iter().map(|&c| BigRational::new(&p[c] - &ints[0][c], BigInt::from(1)) / &scale_q).collect();
            coords.push(linalg::solve(&system, &rhs)?);
        }
        let reduced = convex_hull(&coords)?;
        if !reduced.is_full_dimensional() {
            return Err(Error::Inconsistent("lattice coordinates lost dimension".into()));
        }
        into_field(reduced.normalized_volume()?)
    }

    /// Rational vertex list, independent of `F`.
    pub fn rational_vertices(&self) -> Vec<Vec<BigRational>> {
        self.vertices.iter().map(|v| rational_point(v)).collect()
    }
}
