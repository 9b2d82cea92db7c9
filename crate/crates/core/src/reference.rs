//! Reference polygons and the known values attached to them, packaged as
//! runnable checks.

use crate::barycentric::{bary_transform, type_bk, StrictType};
use crate::constructions::{
    make_phk, params_to_weight_matrix, refine_lattice, search_ke_quads, weight_matrix_to_polygon, QuadParams,
    SearchConfig,
};
use crate::edges::{directed_sc, edge_data, edge_metrics, rotation_equal, ConeHNF, EdgeRef};
use crate::ehrhart::{dual_dilation_counts, heights_from_series};
use crate::lattice::{LatticePoint, Orientation};
use crate::mutation::{count_distinguished, enumerate_mutations, explore_class, is_minimal, ClassCaps};
use crate::polygon::{LatticePolygon, RationalPolygon};
use crate::rational::{rat, RationalPoint};
use crate::symmetry::{
    automorphism_group, dual_barycentre, dual_fan_parts, is_3_symmetric, is_centrally_symmetric, is_ke, is_symmetric,
    lattice_index, weights, WeightMatrix,
};

fn poly(c: &[(i64, i64)]) -> LatticePolygon {
    LatticePolygon::from_coords(c).expect("reference polygon")
}

fn hull(c: &[(i64, i64)]) -> LatticePolygon {
    let pts: Vec<LatticePoint> = c.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect();
    LatticePolygon::conv(&pts).expect("reference polygon")
}

fn plus_minus(half: &[(i64, i64)]) -> LatticePolygon {
    let mut pts: Vec<LatticePoint> = half.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect();
    pts.extend(half.iter().map(|&(x, y)| LatticePoint::new(-x, -y)));
    LatticePolygon::conv(&pts).expect("reference polygon")
}

/// Non-symmetric Kähler–Einstein quadrilateral.
pub fn ke_quadrilateral() -> LatticePolygon {
    poly(&[(-9, -190), (19, 27), (15, 113), (-13, 112)])
}

/// Centrally symmetric decagon with long edges of heights 5 and 7.
pub fn decagon() -> LatticePolygon {
    plus_minus(&[(5, 1), (5, 6), (4, 7), (-3, 7), (-4, 5)])
}

/// Triangle with weights `(3, 7, 13)`.
pub fn weighted_triangle() -> LatticePolygon {
    poly(&[(2, -3), (1, 5), (-1, -2)])
}

/// Centrally symmetric hexagon whose edges are all `1/3(1,1)` cones.
pub fn one_third_hexagon() -> LatticePolygon {
    plus_minus(&[(1, -2), (2, -1), (1, 1)])
}

pub fn projective_plane() -> LatticePolygon {
    poly(&[(1, 0), (0, 1), (-1, -1)])
}

/// The index 9 quotient of the projective plane triangle.
pub fn index_nine_triangle() -> LatticePolygon {
    poly(&[(-5, 1), (1, -2), (4, 1)])
}

/// The six symmetric Fano polygons with empty basket, paired with `n`.
pub fn symmetric_census() -> Vec<(LatticePolygon, i64)> {
    vec![
        (poly(&[(0, 1), (1, 0), (-1, -1)]), 3),
        (poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)]), 4),
        (poly(&[(0, 1), (1, 1), (1, 0), (0, -1), (-1, -1), (-1, 0)]), 6),
        (poly(&[(-1, -1), (1, -1), (1, 1), (-1, 1)]), 8),
        (poly(&[(-1, -1), (2, -1), (-1, 2)]), 9),
        (poly(&[(2, 1), (-2, 1), (-2, -1), (2, -1)]), 10),
    ]
}

/// Parameters producing the quadrilateral weight matrix.
pub const QUAD_PARAMS: QuadParams = QuadParams { a: 48, b: 19, c: 17, d: 36, l: 1, m: -1, r: 1, s: 5 };

pub fn quad_weight_matrix() -> WeightMatrix {
    WeightMatrix::new(vec![vec![48, 67, 0, 65], vec![0, 47, -48, 37]])
}

/// Valid `(h, k)` for the hexagon family with `2 <= h <= 5`, `2 <= k <= 9`.
pub fn phk_parameters() -> Vec<(i64, i64)> {
    (2..=5).flat_map(|h| (2..=9).map(move |k| (h, k))).filter(|&(h, k)| make_phk(h, k).is_ok()).collect()
}

pub type CheckResult = std::result::Result<(), String>;

pub struct Fixture {
    pub name: &'static str,
    pub check: fn() -> CheckResult,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> CheckResult {
    ensure(got == want, || format!("{what}: expected {want:?}, got {got:?}"))
}

fn rp(x: i64, y: i64, d: i64) -> RationalPoint {
    RationalPoint::new(rat(x, d), rat(y, d))
}

fn quad_dual_vertices() -> CheckResult {
    let want = RationalPolygon::new(vec![rp(1, -28, 3149), rp(151, 2, 1739), rp(-31, 4, 481), rp(-43, -2, 871)])
        .map_err(|e| e.to_string())?;
    let got = ke_quadrilateral().dual().map_err(|e| e.to_string())?;
    expect_eq("dual", got.to_string(), want.to_string())
}

fn quad_fan() -> CheckResult {
    let mut got: Vec<(String, String)> = dual_fan_parts(&ke_quadrilateral())
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|(v, b)| (crate::rational::format_rational(&v), b.to_string()))
        .collect();
    got.sort();
    let mut want = vec![
        ("3240/1514669".to_string(), rp(11461, 290, 1514669).to_string()),
        ("648/1514669".to_string(), rp(-57305, -1450, 1514669).to_string()),
    ];
    want.sort();
    expect_eq("fan triangles", got, want)?;
    let b = dual_barycentre(&ke_quadrilateral()).map_err(|e| e.to_string())?;
    ensure(b.is_zero(), || format!("dual barycentre {b} is not the origin"))
}

fn quad_symmetry() -> CheckResult {
    let p = ke_quadrilateral();
    ensure(p.is_fano(), || "not Fano".into())?;
    ensure(is_ke(&p), || "not KE".into())?;
    expect_eq("automorphism group order", automorphism_group(&p).order(), 1)?;
    ensure(!is_symmetric(&p), || "reported symmetric".into())
}

fn quad_edges() -> CheckResult {
    let p = ke_quadrilateral();
    let got: Vec<(i64, i64)> = (0..4)
        .map(|i| {
            let m = edge_metrics(EdgeRef::new(&p, i));
            (m.length, m.height)
        })
        .collect();
    // Listed clockwise from the length-one edge.
    let want = [(1, 3149), (2, 871), (7, 481), (2, 1739)];
    let clockwise: Vec<(i64, i64)> = got.iter().rev().copied().collect();
    ensure(rotation_equal(&clockwise, &want), || {
        format!("(length, height) per edge clockwise: expected a rotation of {want:?}, got {clockwise:?}")
    })?;
    expect_eq("boundary points", p.boundary_lattice_point_count(), 12)?;
    ensure(enumerate_mutations(&p).is_empty(), || "found a long edge".into())
}

fn quad_biduality() -> CheckResult {
    let p = ke_quadrilateral();
    let back = p.dual().and_then(|d| d.dual()).map_err(|e| e.to_string())?;
    expect_eq("double dual", back, p.to_rational())
}

fn quad_barycentric_chain() -> CheckResult {
    let p = ke_quadrilateral();
    let b1 = bary_transform(&p).map_err(|e| e.to_string())?;
    let b2 = bary_transform(&b1).map_err(|e| e.to_string())?;
    let b3 = bary_transform(&b2).map_err(|e| e.to_string())?;
    expect_eq("B(P)", b1.clone(), hull(&[(10, -163), (17, 70), (2, 225), (-11, -39)]))?;
    expect_eq("B^2(P)", b2, hull(&[(9, -31), (19, 295), (-3, 62), (-1, -202)]))?;
    expect_eq("B^3(P)", b3.clone(), hull(&[(7, 66), (16, 357), (-1, -35), (8, -233)]))?;
    ensure(!b3.is_fano(), || "B^3(P) is Fano".into())?;
    ensure(b1.is_fano() && !is_ke(&b1), || "B(P) should be Fano and not KE".into())?;
    let r = type_bk(&p, 10).map_err(|e| e.to_string())?;
    expect_eq("strict type", r.strict_type, StrictType::Exact(2))
}

fn decagon_edge_data() -> CheckResult {
    let half = [(6, 25), (3, 11), (36, 49), (10, 13), (23, 29)];
    let want: Vec<ConeHNF> = half.iter().chain(half.iter()).map(|&(a, r)| ConeHNF { a, r }).collect();
    let got = edge_data(&decagon());
    ensure(rotation_equal(&got.forms, &want), || format!("edge data {:?}", got.forms))?;
    expect_eq("multiplicity", got.multiplicity(), 2)
}

fn decagon_series() -> CheckResult {
    let s = dual_dilation_counts(&decagon(), 7).map_err(|e| e.to_string())?;
    expect_eq("counts", s.counts, vec![1, 1, 1, 1, 1, 3, 3, 5])?;
    expect_eq("heights", heights_from_series(&decagon()).map_err(|e| e.to_string())?, vec![5, 7])
}

fn triangle_fixture() -> CheckResult {
    let t = weighted_triangle();
    let mut w = weights(&t).map_err(|e| e.to_string())?.entries;
    w.sort();
    expect_eq("weights", w, vec![3, 7, 13])?;
    ensure(!is_ke(&t), || "reported KE".into())?;
    let mut hs: Vec<i64> = (0..3).map(|i| edge_metrics(EdgeRef::new(&t, i)).height).collect();
    hs.sort();
    expect_eq("heights", hs, vec![3, 7, 13])?;
    let class = explore_class(&t, ClassCaps::default());
    expect_eq("class size", class.len(), 1)?;
    ensure(class.exhausted, || "class not exhausted".into())?;
    expect_eq("distinguished", count_distinguished(&class), (0, 0))
}

fn hexagon_fixture() -> CheckResult {
    let h = one_third_hexagon();
    ensure(is_centrally_symmetric(&h) && is_symmetric(&h), || "not centrally symmetric".into())?;
    let sc = directed_sc(&h);
    expect_eq("n", sc.n, 0)?;
    ensure(sc.basket.len() == 6 && sc.basket.iter().all(|c| c.r == 3), || format!("basket {:?}", sc.basket))?;
    ensure(enumerate_mutations(&h).is_empty(), || "found a long edge".into())?;
    let class = explore_class(&h, ClassCaps::default());
    expect_eq("class size", class.len(), 1)?;
    ensure(class.exhausted, || "class not exhausted".into())?;
    expect_eq("distinguished", count_distinguished(&class), (1, 0))
}

fn census_fixture() -> CheckResult {
    let mut ns = Vec::new();
    for (p, n) in symmetric_census() {
        ensure(p.is_fano() && is_symmetric(&p), || format!("{p} is not a symmetric Fano polygon"))?;
        let sc = directed_sc(&p);
        ensure(sc.basket.is_empty(), || format!("{p} has basket {:?}", sc.basket))?;
        expect_eq(&format!("n of {p}"), sc.n, n)?;
        ns.push(sc.n);
    }
    ns.dedup();
    expect_eq("distinct n", ns.len(), 6)
}

fn phk_fixture() -> CheckResult {
    for (h, k) in phk_parameters() {
        let p = make_phk(h, k).map_err(|e| e.to_string())?;
        let tag = format!("P({h},{k})");
        ensure(p.is_fano() && is_ke(&p) && !is_symmetric(&p), || format!("{tag}: Fano, KE, not symmetric"))?;
        let lengths: Vec<i64> = (0..6).map(|i| p.edge_length(i)).collect();
        expect_eq(&format!("{tag} edge lengths"), lengths, vec![1, (3 * h - 2) * k, 1, 3 * h - 2, k, 3 * h - 2])?;
        let b = bary_transform(&p).map_err(|e| e.to_string())?;
        expect_eq(&format!("{tag} B(P)"), b, plus_minus(&[(k, -2), (2 * k, -1), (k, 1)]))?;
        if k >= 2 * h - 1 {
            ensure(!is_minimal(&p), || format!("{tag} reported minimal"))?;
        }
        let r = type_bk(&p, 10).map_err(|e| e.to_string())?;
        expect_eq(&format!("{tag} strict type"), r.strict_type, StrictType::AtLeast(10))?;
        expect_eq(&format!("{tag} certificate"), r.symmetric_certificate_at, Some(1))?;
    }
    Ok(())
}

fn phk_refinement_fixture() -> CheckResult {
    for h in 2..=5 {
        ensure(is_3_symmetric(&make_phk(h, 1).map_err(|e| e.to_string())?), || format!("P({h},1) not 3-symmetric"))?;
    }
    for (h, k) in phk_parameters() {
        let base = make_phk(h, 1).map_err(|e| e.to_string())?;
        let r = refine_lattice(&base, k, LatticePoint::new(1, 0)).map_err(|e| e.to_string())?;
        let want = make_phk(h, k).map_err(|e| e.to_string())?;
        ensure(r.polygon.is_isomorphic(&want, Orientation::Gl), || format!("refined P({h},1) is not P({h},{k})"))?;
    }
    Ok(())
}

fn refinement_fixture() -> CheckResult {
    let r = refine_lattice(&projective_plane(), 9, LatticePoint::new(1, 2)).map_err(|e| e.to_string())?;
    let t = index_nine_triangle();
    ensure(r.polygon.is_isomorphic(&t, Orientation::Gl), || format!("refinement gave {}", r.polygon))?;
    ensure(is_ke(&t), || "not KE".into())?;
    expect_eq("index", lattice_index(&t), 9)?;
    expect_eq("automorphism group order", automorphism_group(&t).order(), 2)?;
    ensure(!is_symmetric(&t), || "reported symmetric".into())
}

fn weight_pipeline_fixture() -> CheckResult {
    let w = params_to_weight_matrix(&QUAD_PARAMS).map_err(|e| e.to_string())?;
    expect_eq("weight matrix", w.clone(), quad_weight_matrix())?;
    let p = weight_matrix_to_polygon(&w).map_err(|e| e.to_string())?.ok_or("no Fano polygon")?;
    ensure(p.is_isomorphic(&ke_quadrilateral(), Orientation::Gl), || format!("reconstructed {p}"))
}

fn search_fixture() -> CheckResult {
    let cfg = SearchConfig {
        a: (48, 48),
        b: (15, 21),
        c: (15, 21),
        d: (36, 36),
        l: (1, 1),
        m: (-1, -1),
        r: (1, 1),
        s: (5, 5),
        max_results: None,
        output: None,
    };
    let hits = search_ke_quads(&cfg);
    ensure(hits.iter().all(|h| is_ke(&h.polygon)), || "non-KE search output".into())?;
    ensure(hits.iter().any(|h| h.polygon.is_isomorphic(&ke_quadrilateral(), Orientation::Gl)), || {
        format!("{} hits, none isomorphic to the quadrilateral", hits.len())
    })
}

fn small_examples_fixture() -> CheckResult {
    expect_eq("square automorphisms", automorphism_group(&poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)])).order(), 8)?;
    expect_eq("index of the 3-fold quotient", lattice_index(&poly(&[(-1, -1), (2, -1), (-1, 2)])), 3)?;
    let sq = poly(&[(1, 1), (-1, 1), (-1, -1), (1, -1)]);
    ensure(is_minimal(&sq) && is_ke(&sq), || "reflexive square should be minimal and KE".into())?;
    ensure(!is_minimal(&make_phk(2, 5).map_err(|e| e.to_string())?), || "P(2,5) reported minimal".into())
}

/// Every reference check, in a fixed order.
pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture { name: "quadrilateral/dual_vertices", check: quad_dual_vertices },
        Fixture { name: "quadrilateral/biduality", check: quad_biduality },
        Fixture { name: "quadrilateral/fan_barycentre", check: quad_fan },
        Fixture { name: "quadrilateral/symmetry", check: quad_symmetry },
        Fixture { name: "quadrilateral/edges", check: quad_edges },
        Fixture { name: "quadrilateral/barycentric_chain", check: quad_barycentric_chain },
        Fixture { name: "decagon/edge_data", check: decagon_edge_data },
        Fixture { name: "decagon/dual_series", check: decagon_series },
        Fixture { name: "triangle_3_7_13/class", check: triangle_fixture },
        Fixture { name: "hexagon_one_third/class", check: hexagon_fixture },
        Fixture { name: "symmetric_census", check: census_fixture },
        Fixture { name: "phk/family", check: phk_fixture },
        Fixture { name: "phk/refinement", check: phk_refinement_fixture },
        Fixture { name: "index_nine_triangle/refinement", check: refinement_fixture },
        Fixture { name: "weights/pipeline", check: weight_pipeline_fixture },
        Fixture { name: "weights/search", check: search_fixture },
        Fixture { name: "small_examples", check: small_examples_fixture },
    ]
}
