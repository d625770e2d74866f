//! Exact convex geometry over `ℚ^N` with the lattice `ℤ^N`.
//!
//! A [`Polytope`] stores both representations: lexicographically sorted
//! vertices and primitive integer facet normals with rational offsets. The
//! hull is built by double description on the homogenized point set after
//! projecting onto the affine hull.

mod enumerate;
pub(crate) mod faces;
pub(crate) mod volume;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub use enumerate::{enumerate_lattice_points, enumerate_lattice_points_capped, BoundingBox, DEFAULT_CELL_CAP};
pub use faces::{Face, FaceLattice};

use crate::dd;
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{common_denominator, ExactField};

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 7;

/// The inequality `⟨normal, x⟩ ≥ offset` (or equality, for affine-hull
/// equations). Normals are primitive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Halfspace<F> {
    pub normal: Vec<i64>,
    pub offset: F,
}

impl<F: ExactField> Halfspace<F> {
    /// `⟨normal, x⟩ − offset`.
    pub fn slack(&self, x: &[F]) -> F {
        let mut acc = -self.offset.clone();
        for (a, v) in self.normal.iter().zip(x) {
            if *a != 0 {
                acc = acc + F::from_int(*a) * v.clone();
            }
        }
        acc
    }

    pub fn contains(&self, x: &[F]) -> bool {
        !self.slack(x).is_negative()
    }
}

/// A convex polytope with rational vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope<F> {
    ambient_dim: usize,
    dim: usize,
    vertices: Vec<Vec<F>>,
    facets: Vec<Halfspace<F>>,
    equations: Vec<Halfspace<F>>,
    facet_vertices: Vec<Vec<usize>>,
}

impl<F: ExactField> Polytope<F> {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Intrinsic dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_dim
    }

    /// Extreme points in lexicographic order.
    pub fn vertices(&self) -> &[Vec<F>] {
        &self.vertices
    }

    /// Facet inequalities `⟨a, x⟩ ≥ c`, relative to the affine hull.
    pub fn facets(&self) -> &[Halfspace<F>] {
        &self.facets
    }

    /// Equations `⟨a, x⟩ = c` cutting out the affine hull.
    pub fn equations(&self) -> &[Halfspace<F>] {
        &self.equations
    }

    /// Sorted vertex indices on each facet.
    pub fn facet_vertices(&self) -> &[Vec<usize>] {
        &self.facet_vertices
    }

    pub fn contains(&self, x: &[F]) -> bool {
        x.len() == self.ambient_dim
            && self.equations.iter().all(|e| e.slack(x).is_zero())
            && self.facets.iter().all(|f| f.contains(x))
    }

    /// Membership in the relative interior.
    pub fn relative_interior_contains(&self, x: &[F]) -> bool {
        x.len() == self.ambient_dim
            && self.equations.iter().all(|e| e.slack(x).is_zero())
            && self.facets.iter().all(|f| f.slack(x).is_positive())
    }

    pub fn is_lattice_polytope(&self) -> bool {
        self.vertices.iter().flatten().all(ExactField::is_integral)
    }

    /// `k · P` for `k ≥ 0`.
    pub fn scaled(&self, k: &F) -> Result<Self> {
        if k.is_negative() {
            return Err(Error::Precondition("scale factor must be non-negative".into()));
        }
        let pts: Vec<Vec<F>> =
            self.vertices.iter().map(|v| v.iter().map(|x| x.clone() * k.clone()).collect()).collect();
        convex_hull(&pts)
    }

    /// Translate by an integer vector.
    pub fn translated(&self, t: &[i64]) -> Result<Self> {
        let pts: Vec<Vec<F>> =
            self.vertices.iter().map(|v| v.iter().zip(t).map(|(x, s)| x.clone() + F::from_int(*s)).collect()).collect();
        convex_hull(&pts)
    }

    /// The polytope spanned by a subset of the vertices.
    pub fn sub_polytope(&self, vertex_ids: &[usize]) -> Result<Self> {
        let pts: Vec<Vec<F>> = vertex_ids.iter().map(|&i| self.vertices[i].clone()).collect();
        convex_hull(&pts)
    }

    /// Smallest integer box containing the polytope.
    pub fn bounding_box(&self) -> Result<BoundingBox> {
        let mut lower = Vec::with_capacity(self.ambient_dim);
        let mut upper = Vec::with_capacity(self.ambient_dim);
        for i in 0..self.ambient_dim {
            let col = self.vertices.iter().map(|v| v[i].to_rational());
            let lo = col.clone().min().expect("non-empty").floor().to_integer();
            let hi = col.max().expect("non-empty").ceil().to_integer();
            lower.push(lo.to_i64().ok_or(Error::Overflow("bounding box"))?);
            upper.push(hi.to_i64().ok_or(Error::Overflow("bounding box"))?);
        }
        Ok(BoundingBox { lower, upper })
    }
}

fn to_i64_vec(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter().map(|x| x.to_i64().ok_or(Error::Overflow("facet normal"))).collect()
}

fn check_points<F: ExactField>(points: &[Vec<F>]) -> Result<usize> {
    let first = points.first().ok_or(Error::EmptyInput("point list"))?;
    let n = first.len();
    if let Some(bad) = points.iter().find(|p| p.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
    }
    if n > MAX_DIM {
        return Err(Error::DimensionTooLarge(n));
    }
    Ok(n)
}

/// Convex hull of a non-empty point set, with irredundant vertex and facet
/// lists. Lower-dimensional inputs get their affine hull recorded as
/// equations.
pub fn convex_hull<F: ExactField>(points: &[Vec<F>]) -> Result<Polytope<F>> {
    let n = check_points(points)?;
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();

    let rational: Vec<Vec<BigRational>> = pts.iter().map(|p| p.iter().map(ExactField::to_rational).collect()).collect();
    let scale = common_denominator(rational.iter().flatten());
    let scale_q = BigRational::from_integer(scale.clone());
    let ints: Vec<Vec<BigInt>> =
        rational.iter().map(|p| p.iter().map(|x| (x * &scale_q).to_integer()).collect()).collect();

    let diffs: Vec<Vec<BigRational>> = ints[1..]
        .iter()
        .map(|p| p.iter().zip(&ints[0]).map(|(a, b)| BigRational::from_integer(a - b)).collect())
        .collect();
    let (_, pivots) = linalg::rref(diffs.clone());
    let dim = pivots.len();

    let from_q = |q: BigRational| F::from_rational(&q).ok_or(Error::Overflow("scalar conversion"));

    let mut equations = Vec::new();
    for e in linalg::kernel(&diffs, n) {
        let normal = linalg::primitive_integer_vector(&e);
        let value: BigInt = normal.iter().zip(&ints[0]).map(|(a, b)| a * b).sum();
        equations
            .push(Halfspace { normal: to_i64_vec(&normal)?, offset: from_q(BigRational::new(value, scale.clone()))? });
    }

    if dim == 0 {
        return Ok(Polytope {
            ambient_dim: n,
            dim,
            vertices: vec![pts[0].clone()],
            facets: Vec::new(),
            equations,
            facet_vertices: Vec::new(),
        });
    }

    let projected: Vec<Vec<BigInt>> = ints.iter().map(|p| pivots.iter().map(|&c| p[c].clone()).collect()).collect();
    let rows: Vec<Vec<BigInt>> =
        projected.iter().map(|p| std::iter::once(BigInt::one()).chain(p.iter().cloned()).collect()).collect();
    let rays: Vec<Vec<BigInt>> =
        dd::extreme_rays(&rows)?.into_iter().filter(|r| r[1..].iter().any(|x| !x.is_zero())).collect();

    // tight[i][f]: point i lies on facet f
    let tight: Vec<Vec<bool>> = rows
        .iter()
        .map(|row| rays.iter().map(|r| row.iter().zip(r).map(|(a, b)| a * b).sum::<BigInt>().is_zero()).collect())
        .collect();
    let mut vertex_ids = Vec::new();
    for (i, t) in tight.iter().enumerate() {
        let normals: Vec<Vec<BigRational>> = rays
            .iter()
            .zip(t)
            .filter(|(_, &on)| on)
            .map(|(r, _)| r[1..].iter().map(|x| BigRational::from_integer(x.clone())).collect())
            .collect();
        if linalg::rank(&normals) == dim {
            vertex_ids.push(i);
        }
    }

    let mut facets: Vec<(Vec<usize>, Halfspace<F>)> = Vec::with_capacity(rays.len());
    for (f, ray) in rays.iter().enumerate() {
        let mut b: Vec<BigInt> = ray[1..].to_vec();
        let g = b.iter().fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
        for x in b.iter_mut() {
            *x = &*x / &g;
        }
        let mut normal = vec![BigInt::zero(); n];
        for (k, &c) in pivots.iter().enumerate() {
            normal[c] = b[k].clone();
        }
        let offset = BigRational::new(-ray[0].clone(), &scale * &g);
        let on: Vec<usize> = vertex_ids.iter().enumerate().filter(|(_, &i)| tight[i][f]).map(|(k, _)| k).collect();
        facets.push((on, Halfspace { normal: to_i64_vec(&normal)?, offset: from_q(offset)? }));
    }
    facets.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.normal.cmp(&b.1.normal)));

    let vertices: Vec<Vec<F>> = vertex_ids.iter().map(|&i| pts[i].clone()).collect();
    let (facet_vertices, facets): (Vec<_>, Vec<_>) = facets.into_iter().unzip();
    let poly = Polytope { ambient_dim: n, dim, vertices, facets, equations, facet_vertices };

    if let Some(bad) = pts.iter().find(|p| !poly.contains(p)) {
        return Err(Error::Inconsistent(format!("hull does not contain input point {bad:?}")));
    }
    Ok(poly)
}

/// `P + Q`: hull of all pairwise vertex sums.
pub fn minkowski_sum<F: ExactField>(p: &Polytope<F>, q: &Polytope<F>) -> Result<Polytope<F>> {
    if p.ambient_dim != q.ambient_dim {
        return Err(Error::DimensionMismatch { expected: p.ambient_dim, found: q.ambient_dim });
    }
    let mut sums = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for a in &p.vertices {
        for b in &q.vertices {
            sums.push(a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect());
        }
    }
    convex_hull(&sums)
}

/// The polytope with the given integer vertices, converted into `F`.
pub fn polytope_from_integer_points<F: ExactField>(points: &[Vec<i64>]) -> Result<Polytope<F>> {
    let pts: Vec<Vec<F>> = points.iter().map(|p| p.iter().map(|&x| F::from_int(x)).collect()).collect();
    convex_hull(&pts)
}

/// The standard simplex `conv(0, e_1, …, e_N)`.
pub fn standard_simplex<F: ExactField>(n: usize) -> Result<Polytope<F>> {
    let mut pts = vec![vec![0i64; n]];
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        pts.push(e);
    }
    polytope_from_integer_points(&pts)
}

/// The cube `[0, k]^N`.
pub fn cube<F: ExactField>(n: usize, k: i64) -> Result<Polytope<F>> {
    let pts: Vec<Vec<i64>> =
        (0..1u32 << n).map(|mask| (0..n).map(|i| if mask & (1 << i) != 0 { k } else { 0 }).collect()).collect();
    polytope_from_integer_points(&pts)
}

pub(crate) fn rational_point<F: ExactField>(p: &[F]) -> Vec<BigRational> {
    p.iter().map(ExactField::to_rational).collect()
}
