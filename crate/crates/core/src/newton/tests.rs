use super::*;
use crate::combinatorics::binomial;
use crate::scalar::{int, rat};
use proptest::prelude::*;

fn diag(n: usize, pts: &[&[i64]]) -> NewtonDiagram {
    NewtonDiagram::from_exponents(n, pts).unwrap()
}

fn q(p: &[i64]) -> Vec<Rational> {
    p.iter().map(|&x| int(x)).collect()
}

/// Positive lattice points of `Γ⁻` by brute-force enumeration.
fn enumerate_positive(g: &NewtonDiagram) -> usize {
    let m = g.max_intercept().to_integer().to_i64().unwrap();
    let bbox = BoundingBox::cube(g.ambient_dim(), 1, m.max(1));
    lattice::enumerate_lattice_points(|x| g.gamma_minus_contains(&q(x)), &bbox).unwrap().len()
}

#[test]
fn segment_diagram() {
    let g = diag(2, &[&[2, 0], &[0, 2]]);
    assert!(g.is_convenient());
    assert_eq!(g.vertices(), &[q(&[0, 2]), q(&[2, 0])]);
    assert_eq!(g.faces().f_vector(), vec![2, 1]);
    assert_eq!(g.top_faces().len(), 1);
    assert_eq!(g.vol_under().unwrap(), int(2));
    assert_eq!(g.facet_total_volume().unwrap(), int(2));
}

#[test]
fn convenience_tests() {
    assert!(!diag(2, &[&[3, 0], &[1, 1]]).is_convenient());
    assert!(diag(2, &[&[2, 0], &[0, 2], &[1, 1]]).is_convenient());
    assert!(NewtonDiagram::homogeneous(3, 4).unwrap().is_convenient());
    let g = diag(2, &[&[3, 0], &[1, 1]]);
    assert_eq!(g.vol_under(), Err(Error::NotConvenient));
    assert_eq!(g.restrict(&[0]).err(), Some(Error::NotConvenient));
}

#[test]
fn non_convenient_membership_uses_compact_faces_only() {
    // Γ⁺ of {(3,0),(1,1)}: compact faces are the edge between them and its ends
    let g = diag(2, &[&[3, 0], &[1, 1]]);
    assert_eq!(g.faces().f_vector(), vec![2, 1]);
    assert!(g.gamma_minus_contains(&q(&[1, 1])));
    assert!(g.gamma_minus_contains(&q(&[2, 0])));
    assert!(!g.gamma_minus_contains(&q(&[1, 5])));
    assert!(g.gamma_minus_contains(&q(&[0, 5])));
}

#[test]
fn support_validation() {
    assert!(matches!(SupportSet::new(2, vec![vec![1, -1]]), Err(Error::NegativeCoordinate { index: 1, .. })));
    assert!(matches!(SupportSet::new(2, vec![vec![1, 1, 1]]), Err(Error::DimensionMismatch { .. })));
    assert!(matches!(SupportSet::new(2, vec![]), Err(Error::EmptyInput(_))));
    assert!(NewtonDiagram::from_exponents(2, &[&[0, 0], &[1, 2]]).is_err());
}

#[test]
fn scaling_examples() {
    let g = diag(2, &[&[2, 0], &[0, 2]]);
    assert_eq!(g.scale(&int(1)).unwrap(), g);
    assert_eq!(g.scale(&rat(3, 2)).unwrap(), diag(2, &[&[3, 0], &[0, 3]]));
    assert_eq!(
        NewtonDiagram::homogeneous(3, 2).unwrap().scale(&int(3)).unwrap(),
        NewtonDiagram::homogeneous(3, 6).unwrap()
    );
    assert!(g.scale(&int(0)).is_err());
}

#[test]
fn restriction_examples() {
    let g = NewtonDiagram::homogeneous(3, 5).unwrap();
    assert_eq!(g.restrict(&[0, 1, 2]).unwrap(), g);
    assert_eq!(g.restrict(&[0, 1]).unwrap(), NewtonDiagram::homogeneous(2, 5).unwrap());
    let axis = g.restrict(&[2]).unwrap();
    assert_eq!(axis.vertices(), &[q(&[5])]);
    assert_eq!(axis.vol_under().unwrap(), int(5));
    assert!(g.restrict(&[1, 0]).is_err());
    assert!(g.restrict(&[]).is_err());
}

#[test]
fn membership_examples() {
    let g = diag(3, &[&[3, 0, 0], &[0, 4, 0], &[0, 0, 2], &[1, 1, 1]]);
    assert!(g.gamma_minus_contains(&q(&[0, 0, 0])));
    for v in g.vertices() {
        assert!(g.gamma_minus_contains(v));
        let above: Vec<Rational> = v.iter().map(|x| x + int(1)).collect();
        assert!(!g.gamma_minus_contains(&above));
    }
    let seg = diag(2, &[&[2, 0], &[0, 2]]);
    assert!(!seg.gamma_minus_contains(&q(&[0, 5])));
    assert!(seg.gamma_minus_contains(&q(&[1, 1])));
    assert!(!seg.gamma_minus_contains(&q(&[3, 0])));
}

#[test]
fn homogeneous_volumes() {
    for d in 1..=6i64 {
        let g = NewtonDiagram::homogeneous(3, d).unwrap();
        assert_eq!(g.vol_under().unwrap(), rat(d.pow(3), 6));
        assert_eq!(g.vol_j_sum(0).unwrap(), int(1));
        assert_eq!(g.vol_j_sum(1).unwrap(), int(3 * d));
        assert_eq!(g.vol_j_sum(2).unwrap(), rat(3 * d * d, 2));
        assert_eq!(g.vol_j_sum(3).unwrap(), g.vol_under().unwrap());
        assert_eq!(g.facet_total_volume().unwrap(), rat(d * d, 2));
        assert!(g.is_homogeneous());
    }
    assert!(NewtonDiagram::homogeneous(3, 2).unwrap().vol_j_sum(4).is_err());
}

#[test]
fn facet_volume_three_routes() {
    let g = diag(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 0]]);
    let mut by_relative = Rational::zero();
    let mut by_cones = Rational::zero();
    for (id, facet) in g.top_faces() {
        let face = g.face_polytope(id).unwrap();
        by_relative += face.relative_lattice_volume().unwrap();
        let mut pts = face.vertices().to_vec();
        pts.push(q(&[0, 0, 0]));
        let cone = lattice::convex_hull(&pts).unwrap();
        by_cones += cone.normalized_volume().unwrap() * int(3) / facet.offset.clone();
    }
    let direct = g.facet_total_volume().unwrap();
    assert_eq!(direct, by_relative);
    assert_eq!(direct, by_cones);
}

#[test]
fn positive_point_counts() {
    assert_eq!(NewtonDiagram::homogeneous(3, 2).unwrap().count_positive_points().unwrap(), 0.into());
    assert_eq!(NewtonDiagram::homogeneous(3, 3).unwrap().count_positive_points().unwrap(), 1.into());
    for d in 1..=8 {
        let g = NewtonDiagram::homogeneous(3, d).unwrap();
        assert_eq!(g.count_positive_points().unwrap(), binomial(d, 3));
        assert_eq!(g.count_positive_points().unwrap(), BigInt::from(enumerate_positive(&g)));
    }
    let g = NewtonDiagram::homogeneous(4, 8).unwrap();
    assert!(matches!(g.count_positive_points_capped(10), Err(Error::BudgetExceeded { .. })));
    assert!(matches!(
        diag(2, &[&[2, 0], &[0, 2]]).scale(&rat(5, 4)).unwrap().count_positive_points(),
        Err(Error::NonIntegral(_))
    ));
}

#[test]
fn multiplicity_and_tangent_face() {
    assert_eq!(NewtonDiagram::homogeneous(4, 5).unwrap().multiplicity().unwrap(), 5);
    let g = diag(4, &[&[2, 0, 0, 0], &[0, 3, 0, 0], &[0, 0, 3, 0], &[0, 0, 0, 5]]);
    assert_eq!(g.multiplicity().unwrap(), 2);
    assert_eq!(g.scale(&int(3)).unwrap().multiplicity().unwrap(), 6);

    let h = NewtonDiagram::homogeneous(3, 4).unwrap();
    let t = h.tangent_cone_face().unwrap();
    assert!(t.top_dimensional);
    assert_eq!(t.face.vertices().len(), 3);

    let g = diag(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
    let t = g.tangent_cone_face().unwrap();
    assert_eq!(t.multiplicity, 2);
    assert_eq!(t.face.dim(), 1);
    assert_eq!(t.face.vertices(), &[q(&[0, 2, 0]), q(&[2, 0, 0])]);
    assert!(!t.top_dimensional);

    let g = diag(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
    let t = g.tangent_cone_face().unwrap();
    assert_eq!(t.face.dim(), 0);
    assert_eq!(t.face.vertices(), &[q(&[2, 0, 0])]);
}

#[test]
fn minkowski_sum_of_homogeneous() {
    let a = NewtonDiagram::homogeneous(3, 2).unwrap();
    let b = NewtonDiagram::homogeneous(3, 3).unwrap();
    assert_eq!(a.minkowski_sum(&b).unwrap(), NewtonDiagram::homogeneous(3, 5).unwrap());
    let w = NewtonDiagram::weighted_sum(&[&a, &b], &[int(2), int(0)]).unwrap();
    assert_eq!(w, NewtonDiagram::homogeneous(3, 4).unwrap());
}

#[test]
fn tuple_construction() {
    let a = NewtonDiagram::homogeneous(4, 2).unwrap();
    let t = DiagramTuple::new(vec![a.clone(), a.clone()]).unwrap();
    assert_eq!((t.n(), t.r()), (2, 2));
    assert!(t.all_equal() && t.all_convenient());
    let r = t.restrict(&[0, 2]).unwrap();
    assert_eq!((r.n(), r.r()), (0, 2));
    assert!(t.restrict(&[1]).is_err());
    let b = NewtonDiagram::homogeneous(3, 2).unwrap();
    assert!(matches!(DiagramTuple::new(vec![a, b]), Err(Error::DimensionMismatch { .. })));
}

/// Convenient supports: one pure power per axis plus a few mixed monomials.
pub(crate) fn arb_convenient(n: usize, max: i64) -> impl Strategy<Value = NewtonDiagram> {
    (proptest::collection::vec(1..=max, n), proptest::collection::vec(proptest::collection::vec(0..=max, n), 0..4))
        .prop_map(move |(axes, extra)| {
            let mut pts: Vec<Vec<i64>> =
                (0..n).map(|i| (0..n).map(|j| if i == j { axes[i] } else { 0 }).collect()).collect();
            pts.extend(extra.into_iter().filter(|p| p.iter().any(|&v| v > 0)));
            NewtonDiagram::from_support(&SupportSet::new(n, pts).unwrap()).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn restrictions_stay_convenient(g in (2usize..=4).prop_flat_map(|n| arb_convenient(n, 5))) {
        let n = g.ambient_dim();
        for j in 1..=n {
            for s in subsets(n, j) {
                prop_assert!(g.restrict(&s).unwrap().is_convenient());
            }
        }
    }

    #[test]
    fn volume_is_homogeneous(g in (2usize..=4).prop_flat_map(|n| arb_convenient(n, 5)), num in 1i64..5, den in 1i64..4) {
        let d = rat(num, den);
        let n = g.ambient_dim();
        let scaled = g.scale(&d).unwrap();
        prop_assert_eq!(scaled.vol_under().unwrap(), g.vol_under().unwrap() * num_traits::pow(d.clone(), n));
        prop_assert_eq!(
            scaled.facet_total_volume().unwrap(),
            g.facet_total_volume().unwrap() * num_traits::pow(d, n - 1)
        );
    }

    #[test]
    fn vol_under_matches_cones_over_faces(g in (2usize..=4).prop_flat_map(|n| arb_convenient(n, 5))) {
        let n = g.ambient_dim();
        let mut total = Rational::zero();
        for (id, _) in g.top_faces() {
            let mut pts = g.face_polytope(id).unwrap().vertices().to_vec();
            pts.push(vec![Rational::zero(); n]);
            total += lattice::convex_hull(&pts).unwrap().normalized_volume().unwrap();
        }
        prop_assert_eq!(g.vol_under().unwrap(), total);
    }

    #[test]
    fn facet_volume_matches_relative_lattice_volume(g in (2usize..=4).prop_flat_map(|n| arb_convenient(n, 5))) {
        let mut total = Rational::zero();
        for (id, _) in g.top_faces() {
            total += g.face_polytope(id).unwrap().relative_lattice_volume().unwrap();
        }
        prop_assert_eq!(g.facet_total_volume().unwrap(), total);
    }

    #[test]
    fn facet_volume_bounded_by_coordinate_volumes(g in (2usize..=5).prop_flat_map(|n| arb_convenient(n, 4))) {
        let n = g.ambient_dim();
        let lhs = g.facet_total_volume().unwrap();
        let rhs = g.vol_j_sum(n - 1).unwrap() / int(n as i64);
        prop_assert!(lhs <= rhs, "{} > {}", lhs, rhs);
    }

    #[test]
    fn positive_count_matches_enumeration(g in (1usize..=4).prop_flat_map(|n| arb_convenient(n, 6))) {
        prop_assert_eq!(g.count_positive_points().unwrap(), BigInt::from(enumerate_positive(&g)));
    }

    #[test]
    fn facet_and_general_membership_agree(g in (2usize..=3).prop_flat_map(|n| arb_convenient(n, 6)), x in proptest::collection::vec(0i64..9, 3)) {
        let p = q(&x[..g.ambient_dim()]);
        prop_assert_eq!(g.gamma_minus_contains(&p), g.gamma_minus_contains_by_facets(&p));
    }

    #[test]
    fn minkowski_sum_commutes(
        a in arb_convenient(3, 4),
        b in arb_convenient(3, 4),
    ) {
        prop_assert_eq!(a.minkowski_sum(&b).unwrap(), b.minkowski_sum(&a).unwrap());
    }
}
