//! Ehrhart polynomials of lattice polytopes and the lattice-point expansion
//! of the geometric genus of scaled diagrams.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{convex_hull, Polytope, DEFAULT_CELL_CAP};
use crate::newton::NewtonDiagram;
use crate::poly::UniPoly;
use crate::scalar::ExactField;
use crate::Rational;

/// Largest dimension for which [`ehrhart_polynomial`] enumerates.
pub const MAX_EHRHART_DIM: usize = 5;

/// `L(k) = |kΔ ∩ ℤ^N| = Σ c_i k^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhrhartPolynomial<F> {
    dim: usize,
    poly: UniPoly<F>,
}

impl<F: ExactField> EhrhartPolynomial<F> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `c_0, …, c_N`.
    pub fn coefficients(&self) -> Vec<F> {
        (0..=self.dim).map(|i| self.poly.coeff(i)).collect()
    }

    pub fn coeff(&self, i: usize) -> F {
        self.poly.coeff(i)
    }

    pub fn polynomial(&self) -> &UniPoly<F> {
        &self.poly
    }

    pub fn eval(&self, k: i64) -> F {
        self.poly.eval_int(k)
    }

    /// Interior count of `kΔ` predicted by reciprocity, `(−1)^N L(−k)`.
    pub fn interior(&self, k: i64) -> F {
        let v = self.eval(-k);
        if self.dim.is_multiple_of(2) {
            v
        } else {
            -v
        }
    }
}

/// `|kΔ ∩ ℤ^N|`, or the interior count when `interior`.
pub fn count_points<F: ExactField>(delta: &Polytope<F>, k: i64, interior: bool) -> Result<BigInt> {
    if !delta.is_full_dimensional() {
        return Err(Error::NotFullDimensional { dim: delta.dim(), ambient: delta.ambient_dim() });
    }
    if !delta.is_lattice_polytope() {
        return Err(Error::NonIntegral("polytope vertices".into()));
    }
    delta.count_lattice_points(k, interior, DEFAULT_CELL_CAP)
}

fn big_to_field<F: ExactField>(v: &BigInt) -> Result<F> {
    F::from_rational(&BigRational::from_integer(v.clone())).ok_or(Error::Overflow("lattice point count"))
}

/// `Vol_{N−1}(Δ)`: facet volumes in their induced lattices, summed.
pub fn boundary_volume<F: ExactField>(delta: &Polytope<F>) -> Result<F> {
    let mut total = F::zero();
    for on in delta.facet_vertices() {
        total = total + delta.sub_polytope(on)?.relative_lattice_volume()?;
    }
    Ok(total)
}

/// The Ehrhart polynomial, interpolated through `L(0), …, L(N)`.
///
/// The fit is checked against three further dilates, the volume and
/// boundary-volume coefficients, and reciprocity for `k = 1..N`.
pub fn ehrhart_polynomial<F: ExactField>(delta: &Polytope<F>) -> Result<EhrhartPolynomial<F>> {
    let n = delta.ambient_dim();
    if n > MAX_EHRHART_DIM {
        return Err(Error::DimensionTooLarge(n));
    }
    let closed_ks: Vec<i64> = (0..=n as i64 + 3).collect();
    let closed = closed_ks.par_iter().map(|&k| count_points(delta, k, false)).collect::<Result<Vec<_>>>()?;
    let samples: Vec<(F, F)> =
        closed_ks.iter().zip(&closed).map(|(&k, c)| Ok((F::from_int(k), big_to_field(c)?))).collect::<Result<_>>()?;
    let poly = UniPoly::fit_and_verify(&samples, n)?;
    let ep = EhrhartPolynomial { dim: n, poly };

    if !ep.coeff(0).is_one() {
        return Err(Error::Inconsistent(format!("Ehrhart constant term {}", ep.coeff(0))));
    }
    let vol = delta.normalized_volume()?;
    if ep.coeff(n) != vol {
        return Err(Error::Inconsistent(format!("leading Ehrhart coefficient {} but volume {vol}", ep.coeff(n))));
    }
    if n >= 1 {
        let half = boundary_volume(delta)? / F::from_int(2);
        if ep.coeff(n - 1) != half {
            return Err(Error::Inconsistent(format!(
                "Ehrhart c_(N-1) = {} but half boundary volume {half}",
                ep.coeff(n - 1)
            )));
        }
    }
    for k in 1..=n as i64 {
        let inner = big_to_field::<F>(&count_points(delta, k, true)?)?;
        if ep.interior(k) != inner {
            return Err(Error::Inconsistent(format!("reciprocity fails at k = {k}: {} vs {inner}", ep.interior(k))));
        }
    }
    Ok(ep)
}

/// Outcome of a lattice-polygon Pick check at dilation `k`:
/// `L(k) = k²A + (k/2)B + 1` and `L°(k) = k²A − (k/2)B + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PickCheck {
    pub k: i64,
    pub closed: bool,
    pub interior: bool,
}

pub fn pick_check<F: ExactField>(polygon: &Polytope<F>, k: i64) -> Result<PickCheck> {
    if polygon.ambient_dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: polygon.ambient_dim() });
    }
    let area = polygon.normalized_volume()?.to_rational();
    let boundary = boundary_volume(polygon)?.to_rational();
    let kq = BigRational::from_integer(BigInt::from(k));
    let main = &kq * &kq * area;
    let edge = kq * boundary / BigRational::from_integer(BigInt::from(2));
    let closed = BigRational::from_integer(count_points(polygon, k, false)?);
    let interior = BigRational::from_integer(count_points(polygon, k, true)?);
    Ok(PickCheck {
        k,
        closed: closed == &main + &edge + Rational::one(),
        interior: interior == main - edge + Rational::one(),
    })
}

/// The two leading coefficients of `k ↦ p_g(kΓ)`:
/// `(Vol_N(Γ⁻), (Vol_{N−1}(Γ) − Vol_{N−1}(Γ⁻))/2)`.
pub fn pg_leading_terms(g: &NewtonDiagram) -> Result<(Rational, Rational)> {
    if !g.is_convenient() {
        return Err(Error::NotConvenient);
    }
    if !g.is_integral() {
        return Err(Error::NonIntegral("diagram vertices".into()));
    }
    let n = g.ambient_dim();
    let top = g.vol_under()?;
    let second = (g.facet_total_volume()? - g.vol_j_sum(n - 1)?) / BigRational::from_integer(BigInt::from(2));
    Ok((top, second))
}

/// `Γ⁺ ∩ [0, M]^N` for `M` at least every vertex coordinate.
///
/// Equals the hull of the vertices with any set of coordinates raised to `M`.
pub fn clipped_polyhedron(g: &NewtonDiagram, m: i64) -> Result<Polytope<Rational>> {
    let n = g.ambient_dim();
    let mq = BigRational::from_integer(BigInt::from(m));
    if g.vertices().iter().flatten().any(|x| *x > mq) {
        return Err(Error::Precondition(format!("box side {m} below a vertex coordinate")));
    }
    let mut pts = Vec::with_capacity(g.vertices().len() << n);
    for v in g.vertices() {
        for mask in 0u32..(1 << n) {
            pts.push(
                v.iter().enumerate().map(|(i, x)| if mask >> i & 1 == 1 { mq.clone() } else { x.clone() }).collect(),
            );
        }
    }
    convex_hull(&pts)
}

/// `p_g` as `|int Δ ∩ ℤ^N| − |int(Γ⁺ ∩ Δ) ∩ ℤ^N|` with `Δ = [0, M]^N`,
/// `M = max intercept + 1`.
pub fn pg_by_box_difference(g: &NewtonDiagram) -> Result<BigInt> {
    if !g.is_convenient() {
        return Err(Error::NotConvenient);
    }
    if !g.is_integral() {
        return Err(Error::NonIntegral("diagram vertices".into()));
    }
    let m = g.max_intercept().to_integer() + BigInt::one();
    let m: i64 = num_traits::ToPrimitive::to_i64(&m).ok_or(Error::Overflow("box side"))?;
    let n = g.ambient_dim() as u32;
    let inner_box = BigInt::from(m - 1).pow(n);
    let clipped = clipped_polyhedron(g, m)?;
    Ok(inner_box - clipped.count_lattice_points(1, true, DEFAULT_CELL_CAP)?)
}

/// `k ↦ p_g(kΓ)` fitted exactly on `k = 1..N+1` and confirmed at `N+2`, `N+3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PgScalingFit {
    pub samples: Vec<(i64, BigInt)>,
    pub polynomial: UniPoly<Rational>,
    pub leading: (Rational, Rational),
    /// `p_g(kΓ) − a k^N − b k^{N−1}`; `None` when identically zero.
    pub remainder_degree: Option<usize>,
}

impl PgScalingFit {
    pub fn leading_terms_match(&self) -> bool {
        let n = self.samples.len().saturating_sub(3);
        self.polynomial.coeff(n) == self.leading.0 && n >= 1 && self.polynomial.coeff(n - 1) == self.leading.1
    }

    pub fn remainder_degree_ok(&self) -> bool {
        let n = self.samples.len().saturating_sub(3);
        self.remainder_degree.is_none_or(|d| d + 2 <= n)
    }
}

pub fn pg_scaling_fit(g: &NewtonDiagram) -> Result<PgScalingFit> {
    let n = g.ambient_dim();
    let leading = pg_leading_terms(g)?;
    let ks: Vec<i64> = (1..=n as i64 + 3).collect();
    let counts = ks
        .par_iter()
        .map(|&k| g.scale(&BigRational::from_integer(BigInt::from(k)))?.count_positive_points())
        .collect::<Result<Vec<_>>>()?;
    let samples: Vec<(i64, BigInt)> = ks.iter().copied().zip(counts).collect();
    let points: Vec<(Rational, Rational)> = samples
        .iter()
        .map(|(k, c)| (BigRational::from_integer(BigInt::from(*k)), BigRational::from_integer(c.clone())))
        .collect();
    let polynomial = UniPoly::fit_and_verify(&points, n)?;
    let mut rest = polynomial.coeffs().to_vec();
    rest.resize(n + 1, Rational::zero());
    rest[n] -= &leading.0;
    if n >= 1 {
        rest[n - 1] -= &leading.1;
    }
    let remainder_degree = UniPoly::new(rest).degree();
    Ok(PgScalingFit { samples, polynomial, leading, remainder_degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;
    use crate::lattice::{cube, polytope_from_integer_points, standard_simplex};
    use crate::scalar::{int, rat};
    use num_rational::Ratio;
    use proptest::prelude::*;

    type Q = Rational;

    fn poly(points: &[Vec<i64>]) -> Polytope<Q> {
        polytope_from_integer_points(points).unwrap()
    }

    #[test]
    fn count_examples() {
        let sq = cube::<Q>(2, 1).unwrap();
        assert_eq!(count_points(&sq, 1, false).unwrap(), BigInt::from(4));
        assert_eq!(count_points(&sq, 1, true).unwrap(), BigInt::from(0));
        let tri = poly(&[vec![0, 0], vec![2, 0], vec![0, 2]]);
        assert_eq!(count_points(&tri, 1, false).unwrap(), BigInt::from(6));
        assert_eq!(count_points(&tri, 0, false).unwrap(), BigInt::from(1));
        let flat = poly(&[vec![0, 0], vec![1, 1]]);
        assert!(matches!(count_points(&flat, 1, false), Err(Error::NotFullDimensional { .. })));
    }

    #[test]
    fn cubes_and_simplices() {
        for n in 1..=3 {
            let ep = ehrhart_polynomial(&cube::<Q>(n, 1).unwrap()).unwrap();
            for k in 0..6i64 {
                assert_eq!(ep.eval(k), int((k + 1).pow(n as u32)));
            }
        }
        let ep = ehrhart_polynomial(&standard_simplex::<Q>(2).unwrap()).unwrap();
        assert_eq!(ep.coefficients(), vec![int(1), rat(3, 2), rat(1, 2)]);
        let ep3 = ehrhart_polynomial(&standard_simplex::<Q>(3).unwrap()).unwrap();
        for k in 0..6 {
            assert_eq!(ep3.eval(k), BigRational::from_integer(binomial(k + 3, 3)));
        }
    }

    #[test]
    fn small_ratio_scalar() {
        let p = polytope_from_integer_points::<Ratio<i64>>(&[vec![0, 0], vec![3, 0], vec![1, 2]]).unwrap();
        let ep = ehrhart_polynomial(&p).unwrap();
        assert_eq!(ep.coeff(2), Ratio::new(3, 1));
    }

    #[test]
    fn reeve_tetrahedron_has_negative_linear_term() {
        // conv(0, e1, e2, (1,1,r)): L(k) = r/6 k³ + k² + (2 − r/6) k + 1
        let p = poly(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 13]]);
        let ep = ehrhart_polynomial(&p).unwrap();
        assert_eq!(ep.coefficients(), vec![int(1), rat(-1, 6), int(1), rat(13, 6)]);
    }

    #[test]
    fn pick_examples() {
        let p = poly(&[vec![0, 0], vec![4, 1], vec![1, 3], vec![-1, 2]]);
        for k in 1..4 {
            let c = pick_check(&p, k).unwrap();
            assert!(c.closed && c.interior);
        }
    }

    #[test]
    fn homogeneous_leading_terms() {
        for d in 1..6 {
            let g = NewtonDiagram::homogeneous(3, d).unwrap();
            assert_eq!(pg_leading_terms(&g).unwrap(), (rat(d.pow(3), 6), rat(-d * d, 2)));
        }
    }

    #[test]
    fn leading_terms_scale() {
        let g = NewtonDiagram::from_exponents(3, &[&[3, 0, 0], &[0, 2, 0], &[0, 0, 4], &[1, 1, 1]]).unwrap();
        let (a, b) = pg_leading_terms(&g).unwrap();
        let (a3, b3) = pg_leading_terms(&g.scale(&int(3)).unwrap()).unwrap();
        assert_eq!((a3, b3), (a * int(27), b * int(9)));
    }

    #[test]
    fn box_difference_matches_direct_count() {
        let gs = [
            NewtonDiagram::homogeneous(3, 4).unwrap(),
            NewtonDiagram::from_exponents(3, &[&[5, 0, 0], &[0, 3, 0], &[0, 0, 4], &[1, 1, 1]]).unwrap(),
            NewtonDiagram::from_exponents(2, &[&[7, 0], &[0, 5], &[2, 2]]).unwrap(),
        ];
        for g in &gs {
            assert_eq!(pg_by_box_difference(g).unwrap(), g.count_positive_points().unwrap(), "{g}");
        }
        assert_eq!(pg_by_box_difference(&gs[0]).unwrap(), BigInt::from(4));
    }

    #[test]
    fn scaling_fit_homogeneous() {
        let fit = pg_scaling_fit(&NewtonDiagram::homogeneous(3, 2).unwrap()).unwrap();
        // p_g(k·Γ_2) = C(2k, 3)
        for (k, c) in &fit.samples {
            assert_eq!(*c, binomial(2 * k, 3));
        }
        assert!(fit.leading_terms_match() && fit.remainder_degree_ok());
        assert_eq!(fit.remainder_degree, Some(1));
    }

    fn arb_polytope(n: usize, max: i64) -> impl Strategy<Value = Polytope<Q>> {
        prop::collection::vec(prop::collection::vec(0..=max, n), n + 1..n + 5)
            .prop_filter_map("full-dimensional", |pts| {
                polytope_from_integer_points::<Q>(&pts).ok().filter(|p| p.is_full_dimensional())
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn reciprocity_on_random_polytopes(p in (1usize..=3).prop_flat_map(|n| arb_polytope(n, 4))) {
            prop_assert!(ehrhart_polynomial(&p).is_ok());
        }

        #[test]
        fn pick_on_random_polygons(p in arb_polytope(2, 6), k in 1i64..4) {
            let c = pick_check(&p, k).unwrap();
            prop_assert!(c.closed && c.interior);
        }

        #[test]
        fn box_difference_on_random_diagrams(g in crate::newton::tests::arb_convenient(3, 5)) {
            prop_assert_eq!(pg_by_box_difference(&g).unwrap(), g.count_positive_points().unwrap());
        }

        #[test]
        fn fitted_leading_terms(g in crate::newton::tests::arb_convenient(3, 4)) {
            let fit = pg_scaling_fit(&g).unwrap();
            prop_assert!(fit.leading_terms_match());
            prop_assert!(fit.remainder_degree_ok());
        }
    }
}
