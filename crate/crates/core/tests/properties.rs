use fano_core::barycentric::{bary_transform, type_bk, StrictType};
use fano_core::edges::{directed_sc, edge_data, edge_metrics, ConeHNF, EdgeRef};
use fano_core::ehrhart::dual_dilation_count;
use fano_core::mutation::{enumerate_mutations, explore_class, is_minimal, mutate, ClassCaps};
use fano_core::report::analyze;
use fano_core::symmetry::{automorphism_group, is_ke, is_symmetric, lattice_index};
use fano_core::{det, LatticePoint, LatticePolygon, Orientation, RationalPolygon, UnimodularMap};
use proptest::prelude::*;

fn point(r: i64) -> impl Strategy<Value = LatticePoint> {
    (-r..=r, -r..=r).prop_map(|(x, y)| LatticePoint::new(x, y))
}

fn any_polygon() -> impl Strategy<Value = LatticePolygon> {
    prop::collection::vec(point(8), 3..9).prop_filter_map("degenerate", |pts| LatticePolygon::conv(&pts).ok())
}

fn fano_polygon() -> impl Strategy<Value = LatticePolygon> {
    prop::collection::vec(point(6).prop_filter("primitive", |p| p.is_primitive()), 3..8)
        .prop_filter_map("not Fano", |pts| LatticePolygon::conv(&pts).ok().filter(|p| p.is_fano()))
}

fn unimodular() -> impl Strategy<Value = UnimodularMap> {
    (prop::collection::vec((any::<bool>(), -2i64..=2), 0..5), any::<bool>()).prop_map(|(shears, flip)| {
        let mut m = UnimodularMap::from_rows([[1, 0], [0, 1]]).unwrap();
        for (upper, t) in shears {
            let e = if upper { [[1, t], [0, 1]] } else { [[1, 0], [t, 1]] };
            m = m.compose(&UnimodularMap::from_rows(e).unwrap());
        }
        if flip {
            m = m.compose(&UnimodularMap::from_rows([[0, 1], [1, 0]]).unwrap());
        }
        m
    })
}

fn shoelace_twice(p: &LatticePolygon) -> i128 {
    let v = p.vertices();
    (0..v.len()).map(|i| det(v[i], v[(i + 1) % v.len()])).sum()
}

fn brute_dual_count(p: &LatticePolygon, k: i64) -> u64 {
    let r = 40;
    let mut n = 0;
    for x in -r..=r {
        for y in -r..=r {
            if p.vertices().iter().all(|v| v.x * x + v.y * y >= -k) {
                n += 1;
            }
        }
    }
    n
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn hull_is_normalized(p in any_polygon()) {
        let v = p.vertices();
        let n = v.len();
        prop_assert!(v.iter().all(|w| (v[0].x, v[0].y) <= (w.x, w.y)));
        for i in 0..n {
            let (a, b, c) = (v[i], v[(i + 1) % n], v[(i + 2) % n]);
            prop_assert!(det(b - a, c - b) > 0);
        }
        prop_assert_eq!(p.normalized_volume(), shoelace_twice(&p));
    }

    #[test]
    fn text_and_json_round_trip(p in any_polygon()) {
        let back: LatticePolygon = p.to_string().parse().unwrap();
        prop_assert_eq!(&back, &p);
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<LatticePolygon>(&json).unwrap(), p.clone());
        if p.is_fano() {
            let d = p.dual().unwrap();
            prop_assert_eq!(d.to_string().parse::<RationalPolygon>().unwrap(), d.clone());
            let json = serde_json::to_string(&d).unwrap();
            prop_assert_eq!(serde_json::from_str::<RationalPolygon>(&json).unwrap(), d);
        }
    }

    #[test]
    fn pick_formula(p in any_polygon()) {
        let interior = p.lattice_points(1).iter().filter(|&&x| !p.on_boundary(x)).count() as i128;
        let boundary = p.boundary_lattice_point_count() as i128;
        prop_assert_eq!(p.normalized_volume(), 2 * interior + boundary - 2);
    }

    #[test]
    fn transform_preserves_invariants(p in fano_polygon(), g in unimodular()) {
        let q = p.transform(&g);
        prop_assert!(q.is_fano());
        prop_assert_eq!(q.normalized_volume(), p.normalized_volume());
        prop_assert_eq!(q.canonical_key(Orientation::Gl), p.canonical_key(Orientation::Gl));
        prop_assert!(q.is_isomorphic(&p, Orientation::Gl));
        prop_assert_eq!(automorphism_group(&q).order(), automorphism_group(&p).order());
        prop_assert_eq!(is_symmetric(&q), is_symmetric(&p));
        prop_assert_eq!(is_ke(&q), is_ke(&p));
        prop_assert_eq!(lattice_index(&q), lattice_index(&p));
        if g.det() == 1 {
            prop_assert_eq!(directed_sc(&q), directed_sc(&p));
            prop_assert_eq!(edge_data(&q), edge_data(&p));
            prop_assert!(q.is_isomorphic(&p, Orientation::Sl));
        } else {
            prop_assert_eq!(directed_sc(&q), directed_sc(&p).reflected());
        }
    }

    #[test]
    fn dual_counts_match_brute_force(p in fano_polygon(), k in 0i64..4) {
        prop_assert_eq!(dual_dilation_count(&p, k).unwrap(), brute_dual_count(&p, k));
    }

    #[test]
    fn edge_metrics_agree_with_geometry(p in fano_polygon()) {
        let mut total_length = 0;
        for i in 0..p.vertex_count() {
            let m = edge_metrics(EdgeRef::new(&p, i));
            let (a, b) = p.edge(i);
            prop_assert_eq!(m.inner_normal.pair(a), m.inner_normal.pair(b));
            prop_assert_eq!(m.inner_normal.pair(a), -(m.height as i128));
            prop_assert_eq!(det(a, b), (m.length * m.height) as i128);
            prop_assert_eq!(ConeHNF::of_cone(a, b).r, m.length * m.height);
            total_length += m.length;
        }
        prop_assert_eq!(total_length, p.boundary_lattice_point_count());
    }

    #[test]
    fn mutations_round_trip(p in fano_polygon()) {
        let sc = directed_sc(&p);
        for (spec, q) in enumerate_mutations(&p) {
            prop_assert!(q.is_fano());
            prop_assert_eq!(&directed_sc(&q), &sc);
            prop_assert_eq!(mutate(&q, &spec.inverse()).unwrap(), p.clone());
            prop_assert_eq!(q.dual().unwrap().normalized_volume(), p.dual().unwrap().normalized_volume());
        }
    }

    #[test]
    fn minimality_matches_one_step_boundary(p in fano_polygon()) {
        let b = p.boundary_lattice_point_count();
        let one_step_min = enumerate_mutations(&p).iter().all(|(_, q)| b <= q.boundary_lattice_point_count());
        prop_assert_eq!(is_minimal(&p), one_step_min);
    }

    #[test]
    fn every_long_edge_admits_a_mutation(p in fano_polygon()) {
        let long = (0..p.vertex_count()).filter(|&i| edge_metrics(EdgeRef::new(&p, i)).is_long()).count();
        prop_assert_eq!(enumerate_mutations(&p).len(), long);
    }

    #[test]
    fn small_classes_are_consistent(p in fano_polygon()) {
        let class = explore_class(&p, ClassCaps { max_polygons: 8, max_boundary_points: 50 });
        prop_assert!(class.invariants_consistent());
        prop_assert!(class.len() <= 8);
        prop_assert_eq!(class.find(&p), Some(0));
        for (i, node) in class.nodes.iter().enumerate() {
            let mut q = p.clone();
            for spec in class.path_to(i) {
                q = mutate(&q, &spec).unwrap();
            }
            prop_assert!(q.is_isomorphic(&node.polygon, Orientation::Gl));
        }
    }

    #[test]
    fn barycentric_report_is_coherent(p in fano_polygon()) {
        let r = type_bk(&p, 6).unwrap();
        let n = r.iterates.len();
        prop_assert!(r.iterates[..n - 1].iter().all(|q| q.is_fano()));
        match r.strict_type {
            StrictType::Exact(k) => prop_assert_eq!(n, k + 2 - usize::from(r.degenerate_sum)),
            StrictType::AtLeast(c) => {
                prop_assert_eq!(c, 6);
                prop_assert_eq!(n, 7);
            }
        }
        for w in r.iterates.windows(2) {
            prop_assert_eq!(bary_transform(&w[0]).unwrap(), w[1].clone());
        }
        if let Some(i) = r.symmetric_certificate_at {
            prop_assert!(is_symmetric(&r.iterates[i]));
            prop_assert!(matches!(r.strict_type, StrictType::AtLeast(_)));
        }
    }

    #[test]
    fn report_is_internally_consistent(p in fano_polygon()) {
        let r = analyze(&p, 4);
        prop_assert!(r.fano);
        prop_assert!(!r.symmetric || r.ke);
        prop_assert!(!r.centrally_symmetric || r.symmetric);
        prop_assert!(!r.three_symmetric || r.symmetric);
        prop_assert!(!r.symmetric || r.minimal == Some(true));
        prop_assert_eq!(r.ke, r.dual_barycentre.as_ref().is_some_and(|b| b.is_zero()));
        let json = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<fano_core::report::AnalysisReport>(&json).unwrap(), r);
    }
}
