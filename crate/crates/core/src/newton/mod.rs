//! Newton polyhedra `Γ⁺`, their diagrams `Γ` (the compact faces), the
//! region `Γ⁻` under the diagram, and the volume aggregates built on them.

mod tuple;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

pub use tuple::DiagramTuple;

use crate::combinatorics::{factorial, subsets};
use crate::dd;
use crate::error::{Error, Result};
use crate::lattice::faces::{build_lattice, intersection_closure};
use crate::lattice::volume::{integer_coordinates, pulling_triangulation, simplex_det};
use crate::lattice::{self, BoundingBox, FaceLattice, Halfspace, MAX_DIM};
use crate::linalg;
use crate::scalar::common_denominator;
use crate::{Polytope, Rational};

/// Box size up to which [`NewtonDiagram::from_support`] cross-checks the
/// facet membership test against an independent hull.
const VALIDATION_CELLS: u128 = 20_000;

/// Exponents of the monomials of a power series: non-negative integer
/// vectors in a common dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportSet {
    ambient_dim: usize,
    points: Vec<Vec<i64>>,
}

impl SupportSet {
    pub fn new(ambient_dim: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput("support set"));
        }
        if ambient_dim == 0 {
            return Err(Error::Precondition("ambient dimension must be positive".into()));
        }
        if ambient_dim > MAX_DIM {
            return Err(Error::DimensionTooLarge(ambient_dim));
        }
        for p in &points {
            if p.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: p.len() });
            }
            if let Some((index, v)) = p.iter().enumerate().find(|(_, v)| **v < 0) {
                return Err(Error::NegativeCoordinate { index, value: v.to_string() });
            }
        }
        Ok(Self { ambient_dim, points })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }
}

/// `Γ⁺` in both representations: its vertices and every facet
/// `⟨a, x⟩ ≥ c` (coordinate facets included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    ambient_dim: usize,
    vertices: Vec<Vec<Rational>>,
    facets: Vec<Halfspace<Rational>>,
    facet_vertices: Vec<Vec<usize>>,
}

impl NewtonPolyhedron {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Halfspace<Rational>] {
        &self.facets
    }

    /// Facets with strictly positive normals: the top-dimensional faces of
    /// the diagram.
    pub fn compact_facets(&self) -> impl Iterator<Item = &Halfspace<Rational>> {
        self.facets.iter().filter(|f| f.normal.iter().all(|&a| a > 0))
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.iter().all(|v| !v.is_negative()) && self.facets.iter().all(|f| f.contains(x))
    }
}

/// A Newton diagram: the complex of compact faces of `Γ⁺`, together with
/// `Γ⁺` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonDiagram {
    polyhedron: NewtonPolyhedron,
    faces: FaceLattice,
    intercepts: Vec<Option<Rational>>,
}

/// `σ_p = Γ ∩ {Σ x_i = p}` for the multiplicity `p`.
#[derive(Debug, Clone)]
pub struct TangentConeFace {
    pub multiplicity: i64,
    pub face: Polytope,
    /// Whether `σ_p` has dimension `N − 1`.
    pub top_dimensional: bool,
}

fn minimal_points(points: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let dominated = |p: &Vec<Rational>| pts.iter().any(|q| q != p && q.iter().zip(p).all(|(a, b)| a <= b));
    pts.iter().filter(|p| !dominated(p)).cloned().collect()
}

fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64().ok_or(Error::Overflow("facet normal"))
}

impl NewtonDiagram {
    /// The Newton polyhedron of a support set, with the facet membership
    /// test validated against an independent hull on small boxes.
    pub fn from_support(s: &SupportSet) -> Result<Self> {
        if s.points.iter().any(|p| p.iter().all(|&v| v == 0)) {
            return Err(Error::Input("support contains the origin; the germ is not singular".into()));
        }
        let pts: Vec<Vec<Rational>> =
            s.points.iter().map(|p| p.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect();
        let diagram = Self::from_points(s.ambient_dim, &pts)?;
        diagram.validate_membership()?;
        Ok(diagram)
    }

    /// Convenience constructor from integer exponent vectors.
    pub fn from_exponents(ambient_dim: usize, points: &[&[i64]]) -> Result<Self> {
        Self::from_support(&SupportSet::new(ambient_dim, points.iter().map(|p| p.to_vec()).collect())?)
    }

    /// The diagram of `Σ x_i^d` in `ℝ^N`.
    pub fn homogeneous(ambient_dim: usize, degree: i64) -> Result<Self> {
        let pts: Vec<Vec<i64>> =
            (0..ambient_dim).map(|i| (0..ambient_dim).map(|j| if i == j { degree } else { 0 }).collect()).collect();
        Self::from_support(&SupportSet::new(ambient_dim, pts)?)
    }

    /// `conv(points) + ℝ^N_{≥0}` for non-negative rational points.
    pub fn from_points(ambient_dim: usize, points: &[Vec<Rational>]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput("point set"));
        }
        if ambient_dim > MAX_DIM {
            return Err(Error::DimensionTooLarge(ambient_dim));
        }
        for p in points {
            if p.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: p.len() });
            }
            if let Some((index, v)) = p.iter().enumerate().find(|(_, v)| v.is_negative()) {
                return Err(Error::NegativeCoordinate { index, value: v.to_string() });
            }
        }
        let n = ambient_dim;
        let minimal = minimal_points(points);
        let scale = common_denominator(minimal.iter().flatten());
        let scale_q = BigRational::from_integer(scale.clone());
        let ints: Vec<Vec<BigInt>> =
            minimal.iter().map(|p| p.iter().map(|x| (x * &scale_q).to_integer()).collect()).collect();

        let mut rows: Vec<Vec<BigInt>> =
            ints.iter().map(|p| std::iter::once(BigInt::one()).chain(p.iter().cloned()).collect()).collect();
        for i in 0..n {
            let mut e = vec![BigInt::zero(); n + 1];
            e[i + 1] = BigInt::one();
            rows.push(e);
        }
        let rays: Vec<Vec<BigInt>> =
            dd::extreme_rays(&rows)?.into_iter().filter(|r| r[1..].iter().any(|x| !x.is_zero())).collect();

        let tight: Vec<Vec<bool>> = ints
            .iter()
            .map(|p| {
                rays.iter()
                    .map(|r| (&r[0] + r[1..].iter().zip(p).map(|(a, b)| a * b).sum::<BigInt>()).is_zero())
                    .collect()
            })
            .collect();
        let vertex_ids: Vec<usize> = (0..minimal.len())
            .filter(|&i| {
                let normals: Vec<Vec<BigRational>> = rays
                    .iter()
                    .zip(&tight[i])
                    .filter(|(_, &t)| t)
                    .map(|(r, _)| r[1..].iter().map(|x| BigRational::from_integer(x.clone())).collect())
                    .collect();
                linalg::rank(&normals) == n
            })
            .collect();
        let vertices: Vec<Vec<Rational>> = vertex_ids.iter().map(|&i| minimal[i].clone()).collect();

        let mut facets: Vec<(Halfspace<Rational>, Vec<usize>)> = Vec::with_capacity(rays.len());
        for (f, r) in rays.iter().enumerate() {
            let g = r[1..].iter().fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
            let normal = r[1..].iter().map(|x| to_i64(&(x / &g))).collect::<Result<Vec<_>>>()?;
            let offset = BigRational::new(-r[0].clone(), &scale * &g);
            let on: Vec<usize> = vertex_ids.iter().enumerate().filter(|(_, &i)| tight[i][f]).map(|(k, _)| k).collect();
            facets.push((Halfspace { normal, offset }, on));
        }
        facets.sort_by(|a, b| a.0.normal.cmp(&b.0.normal));
        let (facets, facet_vertices): (Vec<_>, Vec<_>) = facets.into_iter().unzip();
        let polyhedron = NewtonPolyhedron { ambient_dim: n, vertices, facets, facet_vertices };
        Ok(Self::from_polyhedron(polyhedron))
    }

    fn from_polyhedron(polyhedron: NewtonPolyhedron) -> Self {
        let n = polyhedron.ambient_dim;
        let mut candidates = intersection_closure(&polyhedron.facet_vertices);
        for i in 0..polyhedron.vertices.len() {
            candidates.insert(vec![i]);
        }
        let compact = candidates.into_iter().filter(|set| {
            let mut sum = vec![0i64; n];
            for (f, on) in polyhedron.facets.iter().zip(&polyhedron.facet_vertices) {
                if set.iter().all(|v| on.binary_search(v).is_ok()) {
                    for (s, a) in sum.iter_mut().zip(&f.normal) {
                        *s += a;
                    }
                }
            }
            sum.iter().all(|&s| s > 0)
        });
        let faces = build_lattice(&polyhedron.vertices, compact);
        let intercepts = (0..n)
            .map(|i| {
                polyhedron
                    .vertices
                    .iter()
                    .find(|v| v.iter().enumerate().all(|(j, x)| j == i || x.is_zero()))
                    .map(|v| v[i].clone())
            })
            .collect();
        Self { polyhedron, faces, intercepts }
    }

    pub fn ambient_dim(&self) -> usize {
        self.polyhedron.ambient_dim
    }

    /// `Γ⁺` with its full facet list.
    pub fn polyhedron(&self) -> &NewtonPolyhedron {
        &self.polyhedron
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.polyhedron.vertices
    }

    /// Compact faces sorted by `(dim, vertex list)`.
    pub fn faces(&self) -> &FaceLattice {
        &self.faces
    }

    /// Compact faces of dimension `N − 1`, each with its facet inequality.
    pub fn top_faces(&self) -> Vec<(usize, &Halfspace<Rational>)> {
        let n = self.ambient_dim();
        self.faces
            .faces_of_dim(n - 1)
            .map(|(id, face)| {
                let facet = self
                    .polyhedron
                    .facets
                    .iter()
                    .zip(&self.polyhedron.facet_vertices)
                    .find(|(f, on)| f.normal.iter().all(|&a| a > 0) && face.vertices.iter().all(|v| on.contains(v)))
                    .map(|(f, _)| f)
                    .expect("every top compact face lies on a compact facet");
                (id, facet)
            })
            .collect()
    }

    /// Axis intercepts `d_i` with `Γ ∩ Span(e_i) = d_i e_i`.
    pub fn intercepts(&self) -> &[Option<Rational>] {
        &self.intercepts
    }

    pub fn is_convenient(&self) -> bool {
        self.intercepts.iter().all(|d| d.as_ref().is_some_and(|d| d.is_positive()))
    }

    fn require_convenient(&self) -> Result<()> {
        if self.is_convenient() {
            Ok(())
        } else {
            Err(Error::NotConvenient)
        }
    }

    pub fn is_integral(&self) -> bool {
        self.vertices().iter().flatten().all(BigRational::is_integer)
    }

    fn require_integral(&self) -> Result<()> {
        if self.is_integral() {
            Ok(())
        } else {
            Err(Error::NonIntegral(format!("diagram with vertices {self}")))
        }
    }

    /// Largest axis intercept (zero when there is none).
    pub fn max_intercept(&self) -> Rational {
        self.intercepts.iter().flatten().max().cloned().unwrap_or_else(Rational::zero)
    }

    /// `Γ` is homogeneous when it is a single face on `Σ x_i = c`.
    pub fn is_homogeneous(&self) -> bool {
        let top = self.top_faces();
        top.len() == 1 && top[0].1.normal.iter().all(|&a| a == 1) && self.is_convenient()
    }

    /// `d · Γ` for rational `d > 0`.
    pub fn scale(&self, d: &Rational) -> Result<Self> {
        if !d.is_positive() {
            return Err(Error::Precondition(format!("scale factor must be positive, got {d}")));
        }
        let mut out = self.clone();
        for v in out.polyhedron.vertices.iter_mut().flatten() {
            *v = &*v * d;
        }
        for f in out.polyhedron.facets.iter_mut() {
            f.offset = &f.offset * d;
        }
        for c in out.intercepts.iter_mut().flatten() {
            *c = &*c * d;
        }
        Ok(out)
    }

    /// `Γ ∩ L_I` re-indexed to `ℝ^{|I|}`, for sorted non-empty `I`.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        self.require_convenient()?;
        let n = self.ambient_dim();
        if subset.is_empty() || subset.windows(2).any(|w| w[0] >= w[1]) || subset.iter().any(|&i| i >= n) {
            return Err(Error::Precondition(format!("invalid coordinate subset {subset:?} of 0..{n}")));
        }
        if subset.len() == n {
            return Ok(self.clone());
        }
        let pts: Vec<Vec<Rational>> = self
            .vertices()
            .iter()
            .filter(|v| v.iter().enumerate().all(|(j, x)| subset.contains(&j) || x.is_zero()))
            .map(|v| subset.iter().map(|&j| v[j].clone()).collect())
            .collect();
        Self::from_points(subset.len(), &pts)
    }

    /// `Γ⁺ + Δ⁺`.
    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim(), found: other.ambient_dim() });
        }
        let mut sums = Vec::with_capacity(self.vertices().len() * other.vertices().len());
        for a in self.vertices() {
            for b in other.vertices() {
                sums.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        Self::from_points(self.ambient_dim(), &sums)
    }

    /// `Σ λ_i Γ_i⁺` for non-negative weights, not all zero.
    pub fn weighted_sum(diagrams: &[&Self], weights: &[Rational]) -> Result<Self> {
        let mut acc: Option<Self> = None;
        for (g, w) in diagrams.iter().zip(weights) {
            if w.is_zero() {
                continue;
            }
            let term = if w.is_one() { (*g).clone() } else { g.scale(w)? };
            acc = Some(match acc {
                None => term,
                Some(a) => a.minkowski_sum(&term)?,
            });
        }
        acc.ok_or_else(|| Error::Precondition("weighted sum needs a positive weight".into()))
    }

    /// `x ∈ Γ⁻`: `x` is not in `Γ⁺`, or lies on a compact face. `x` must be
    /// in the non-negative orthant.
    pub fn gamma_minus_contains(&self, x: &[Rational]) -> bool {
        let n = self.ambient_dim();
        let mut tight_sum = vec![0i64; n];
        for f in &self.polyhedron.facets {
            let s = f.slack(x);
            if s.is_negative() {
                return true;
            }
            if s.is_zero() {
                for (t, a) in tight_sum.iter_mut().zip(&f.normal) {
                    *t += a;
                }
            }
        }
        tight_sum.iter().all(|&t| t > 0)
    }

    /// Compact-facet form of the test, valid for convenient diagrams:
    /// `min_F (⟨a_F, x⟩ − c_F) ≤ 0`.
    pub fn gamma_minus_contains_by_facets(&self, x: &[Rational]) -> bool {
        self.polyhedron.compact_facets().any(|f| !f.slack(x).is_positive())
    }

    /// Checks both membership tests against `conv(S + {0, M}^N)` on every
    /// lattice point of `[0, B]^N`, `B` the largest vertex coordinate.
    fn validate_membership(&self) -> Result<()> {
        let n = self.ambient_dim();
        let top = self.vertices().iter().flatten().max().expect("non-empty").ceil().to_integer();
        let Some(b) = top.to_i64() else { return Ok(()) };
        let bbox = BoundingBox::cube(n, 0, b);
        if n > 5 || bbox.cells() > VALIDATION_CELLS {
            return Ok(());
        }
        let m = BigRational::from_integer(BigInt::from(b + 1));
        let mut corners = Vec::new();
        for v in self.vertices() {
            for mask in 0u32..1 << n {
                corners.push(
                    v.iter()
                        .enumerate()
                        .map(|(i, x)| if mask & (1 << i) != 0 { x + &m } else { x.clone() })
                        .collect::<Vec<_>>(),
                );
            }
        }
        let clipped: Polytope = lattice::convex_hull(&corners)?;
        let convenient = self.is_convenient();
        let points = lattice::enumerate_lattice_points(|_| true, &bbox)?;
        for p in points {
            let x: Vec<Rational> = p.iter().map(|&v| BigRational::from_integer(v.into())).collect();
            let oracle = !clipped.contains(&x)
                || (0..n).all(|i| {
                    x[i].is_zero() || clipped.facets().iter().any(|f| f.normal[i] > 0 && f.slack(&x).is_zero())
                });
            if self.gamma_minus_contains(&x) != oracle
                || (convenient && self.gamma_minus_contains_by_facets(&x) != oracle)
            {
                return Err(Error::Inconsistent(format!("Γ⁻ membership disagrees with the hull oracle at {p:?}")));
            }
        }
        Ok(())
    }

    /// `Vol_N(Γ⁻)`, by coning every top face of `Γ` to the origin.
    pub fn vol_under(&self) -> Result<Rational> {
        self.require_convenient()?;
        let n = self.ambient_dim();
        let (scale, ints) = integer_coordinates(self.vertices());
        let origin = vec![BigInt::zero(); n];
        let mut total = BigInt::zero();
        for (id, _) in self.faces.faces_of_dim(n - 1) {
            for s in pulling_triangulation(&self.faces, id) {
                let mut pts = vec![&origin];
                pts.extend(s.iter().map(|&v| &ints[v]));
                total += simplex_det(&pts);
            }
        }
        Ok(BigRational::new(total, factorial(n as u32) * num_traits::pow(scale, n)))
    }

    /// `Vol_j(Γ⁻) = Σ_{|I|=j} Vol_j(Γ⁻ ∩ L_I)`, with `Vol_0 = 1`.
    pub fn vol_j_sum(&self, j: usize) -> Result<Rational> {
        self.require_convenient()?;
        let n = self.ambient_dim();
        if j > n {
            return Err(Error::Precondition(format!("Vol_{j} requested in dimension {n}")));
        }
        if j == 0 {
            return Ok(Rational::one());
        }
        let mut total = Rational::zero();
        for subset in subsets(n, j) {
            total += self.restrict(&subset)?.vol_under()?;
        }
        Ok(total)
    }

    /// `Vol_{N−1}(Γ)`: total induced-lattice volume of the top faces.
    ///
    /// Each face is projected along a coordinate axis `e_i`; the projection
    /// maps the face's lattice onto a sublattice of index `a_i`.
    pub fn facet_total_volume(&self) -> Result<Rational> {
        self.require_convenient()?;
        let n = self.ambient_dim();
        if n == 1 {
            return Ok(Rational::from_integer(BigInt::from(self.faces.faces_of_dim(0).count())));
        }
        let (scale, ints) = integer_coordinates(self.vertices());
        let mut total = Rational::zero();
        for (id, facet) in self.top_faces() {
            let (axis, a) = facet.normal.iter().enumerate().min_by_key(|(_, a)| **a).expect("n ≥ 1");
            let mut dets = BigInt::zero();
            for s in pulling_triangulation(&self.faces, id) {
                let proj: Vec<Vec<BigInt>> = s
                    .iter()
                    .map(|&v| ints[v].iter().enumerate().filter(|(i, _)| *i != axis).map(|(_, x)| x.clone()).collect())
                    .collect();
                dets += simplex_det(&proj.iter().collect::<Vec<_>>());
            }
            total += BigRational::new(dets, BigInt::from(*a));
        }
        Ok(total / BigRational::from_integer(factorial(n as u32 - 1) * num_traits::pow(scale, n - 1)))
    }

    /// The compact face as a polytope.
    pub fn face_polytope(&self, face: usize) -> Result<Polytope> {
        let pts: Vec<Vec<Rational>> =
            self.faces.faces[face].vertices.iter().map(|&v| self.vertices()[v].clone()).collect();
        lattice::convex_hull(&pts)
    }

    fn integer_compact_facets(&self) -> Result<Vec<(Vec<i128>, i128)>> {
        self.polyhedron
            .compact_facets()
            .map(|f| {
                let c = f.offset.to_integer().to_i128().ok_or(Error::Overflow("facet offset"))?;
                Ok((f.normal.iter().map(|&a| a as i128).collect(), c))
            })
            .collect()
    }

    /// `|Γ⁻ ∩ ℤ^N_{>0}|` with the default visit budget.
    pub fn count_positive_points(&self) -> Result<BigInt> {
        self.count_positive_points_capped(lattice::DEFAULT_CELL_CAP)
    }

    /// `|Γ⁻ ∩ ℤ^N_{>0}|`.
    ///
    /// `Γ⁻` is closed downwards inside the orthant, so each coordinate is
    /// swept upwards from 1 until the point with all later coordinates at 1
    /// leaves `Γ⁻`; the last coordinate is counted in closed form.
    pub fn count_positive_points_capped(&self, cap: u128) -> Result<BigInt> {
        self.require_convenient()?;
        self.require_integral()?;
        let facets = self.integer_compact_facets()?;
        let n = self.ambient_dim();
        let mut visited: u128 = 0;
        let mut x = vec![1i128; n];
        let total = count_rec(&facets, &mut x, 0, &mut visited, cap)?;
        Ok(BigInt::from(total))
    }

    /// `p`: the least coordinate sum over the vertices of `Γ`.
    pub fn multiplicity(&self) -> Result<i64> {
        self.require_integral()?;
        let best = self.vertices().iter().map(|v| v.iter().sum::<Rational>()).min().expect("non-empty");
        best.to_integer().to_i64().ok_or(Error::Overflow("multiplicity"))
    }

    /// `σ_p = Γ ∩ {Σ x_i = p}`.
    pub fn tangent_cone_face(&self) -> Result<TangentConeFace> {
        self.require_convenient()?;
        let p = self.multiplicity()?;
        let target = BigRational::from_integer(BigInt::from(p));
        let pts: Vec<Vec<Rational>> =
            self.vertices().iter().filter(|v| v.iter().sum::<Rational>() == target).cloned().collect();
        let face = lattice::convex_hull(&pts)?;
        let top_dimensional = face.dim() + 1 == self.ambient_dim();
        Ok(TangentConeFace { multiplicity: p, face, top_dimensional })
    }

    /// Vertex list as exact strings, used for hashing and display.
    pub fn vertex_strings(&self) -> Vec<Vec<String>> {
        self.vertices().iter().map(|v| v.iter().map(ToString::to_string).collect()).collect()
    }
}

fn count_rec(
    facets: &[(Vec<i128>, i128)],
    x: &mut [i128],
    depth: usize,
    visited: &mut u128,
    cap: u128,
) -> Result<i128> {
    *visited += 1;
    if *visited > cap {
        return Err(Error::BudgetExceeded { requested: *visited, cap });
    }
    let n = x.len();
    if depth == n - 1 {
        let mut best: i128 = 0;
        for (a, c) in facets {
            let partial: i128 = a[..n - 1].iter().zip(&x[..n - 1]).map(|(p, q)| p * q).sum();
            best = best.max(num_integer::Integer::div_floor(&(c - partial), &a[n - 1]));
        }
        return Ok(best);
    }
    let mut total = 0;
    x[depth] = 1;
    loop {
        for v in x[depth + 1..].iter_mut() {
            *v = 1;
        }
        let inside = facets.iter().any(|(a, c)| a.iter().zip(x.iter()).map(|(p, q)| p * q).sum::<i128>() <= *c);
        if !inside {
            break;
        }
        total += count_rec(facets, x, depth + 1, visited, cap)?;
        x[depth] += 1;
    }
    x[depth] = 1;
    Ok(total)
}

impl fmt::Display for NewtonDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Γ[")?;
        for (k, v) in self.vertices().iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            f.write_str("(")?;
            for (i, x) in v.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
pub(crate) mod tests;
