//! Explicit constructions: the `P_{h,k}` hexagons, lattice refinements and
//! Kähler–Einstein quadrilaterals from weight-matrix parameters.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{FanoError, Result};
use crate::lattice::{LatticePoint, Orientation};
use crate::polygon::{integer_column_basis, LatticePolygon, RationalPolygon};
use crate::rational::{rat, RationalPoint};
use crate::symmetry::{is_ke, is_symmetric, WeightMatrix};

/// The hexagon `P_{h,k}`. Requires `h >= 2`, `k >= 1` and `k` coprime to
/// `h`, `h - 1` and `2h - 1`, which makes every vertex primitive.
pub fn make_phk(h: i64, k: i64) -> Result<LatticePolygon> {
    for q in [h, h - 1, 2 * h - 1] {
        if k.gcd(&q) != 1 {
            return Err(FanoError::InvalidParameters(format!("k = {k} is not coprime to {q}")));
        }
    }
    phk_vertices(h, k)
}

/// The `P_{h,k}` vertex matrix without the coprimality check. The result
/// need not be Fano.
pub fn phk_vertices(h: i64, k: i64) -> Result<LatticePolygon> {
    if h < 2 || k < 1 {
        return Err(FanoError::InvalidParameters(format!("need h >= 2 and k >= 1, got h = {h}, k = {k}")));
    }
    LatticePolygon::from_coords(&[
        (-h * k, 1 - h),
        ((1 - h) * k, -h),
        ((2 * h - 1) * k, -h),
        ((2 * h - 1) * k, 1 - h),
        ((1 - h) * k, 2 * h - 1),
        (-h * k, 2 * h - 1),
    ])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refinement {
    /// `P` in coordinates of the finer lattice.
    pub polygon: LatticePolygon,
    pub fano: bool,
}

/// Re-expresses `P` in a basis of `N + (1/k) v Z`.
pub fn refine_lattice(p: &LatticePolygon, k: i64, v: LatticePoint) -> Result<Refinement> {
    if k < 1 {
        return Err(FanoError::InvalidParameters(format!("refinement index must be positive, got {k}")));
    }
    // k N' is generated by k e1, k e2 and v.
    let gens = [(k, 0), (0, k), (v.x, v.y)].map(|(x, y)| (BigInt::from(x), BigInt::from(y)));
    let (b1, b2) = integer_column_basis(&gens);
    let dt = &b1.0 * &b2.1 - &b1.1 * &b2.0;
    let coords = p
        .vertices()
        .iter()
        .map(|x| {
            let (sx, sy) = (BigInt::from(x.x) * k, BigInt::from(x.y) * k);
            let c1 = (&sx * &b2.1 - &sy * &b2.0) / &dt;
            let c2 = (&b1.0 * &sy - &b1.1 * &sx) / &dt;
            LatticePoint::new(
                i64::try_from(&c1).expect("coordinate range"),
                i64::try_from(&c2).expect("coordinate range"),
            )
        })
        .collect();
    let polygon = LatticePolygon::new(coords)?;
    Ok(Refinement { fano: polygon.is_fano(), polygon })
}

/// Checks the shape `(l1, l2, 0, l4; 0, m2, m3, m4)` with `l_i, m2, m4 > 0`
/// and `m3 < 0`.
fn check_shape(w: &WeightMatrix) -> Result<()> {
    let ok = w.rows.len() == 2
        && w.rows.iter().all(|r| r.len() == 4)
        && w.rows[0][2] == 0
        && w.rows[1][0] == 0
        && [w.rows[0][0], w.rows[0][1], w.rows[0][3], w.rows[1][1], w.rows[1][3]].iter().all(|&x| x > 0)
        && w.rows[1][2] < 0;
    if ok {
        Ok(())
    } else {
        Err(FanoError::InvalidParameters(format!("weight matrix {:?} has the wrong shape", w.rows)))
    }
}

/// The two barycentre identities for a quadrilateral weight matrix.
pub fn quad_constraints_hold(w: &WeightMatrix) -> Result<bool> {
    check_shape(w)?;
    let r = |i: usize, j: usize| BigInt::from(w.rows[i][j]);
    let (l1, l2, l4) = (r(0, 0), r(0, 1), r(0, 3));
    let (m2, m3, m4) = (r(1, 1), r(1, 2), r(1, 3));
    let f = &l1 + &l2 + &l4;
    let g = &m2 + &m3 + &m4;
    let lhs1 = (&l1 - &l2) * &f * &m3 * &m3;
    let rhs1 = (&m3 - &m2) * &g * &l1 * &l1;
    let lhs2 = (&l1 - &l4) * &f * &m3 * &m3;
    let rhs2 = (&m3 - &m4) * &g * &l1 * &l1;
    Ok(lhs1 == rhs1 && lhs2 == rhs2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadParams {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub l: i64,
    pub m: i64,
    pub r: i64,
    pub s: i64,
}

impl QuadParams {
    pub fn identities_hold(&self) -> bool {
        let QuadParams { a, b, c, d, l, m, r, s } = *self;
        b + c == -d * l * m && 3 * a == d * (m * r + l * s) && l.gcd(&m) == 1 && r.gcd(&s) == 1
    }
}

/// `(al, al + br, 0, al + cr; 0, am + bs, am, am + cs)`.
pub fn params_to_weight_matrix(p: &QuadParams) -> Result<WeightMatrix> {
    if !p.identities_hold() {
        return Err(FanoError::InvalidParameters(format!("{p:?} violates the parameter identities")));
    }
    let QuadParams { a, b, c, l, m, r, s, .. } = *p;
    let w = WeightMatrix::new(vec![
        vec![a * l, a * l + b * r, 0, a * l + c * r],
        vec![0, a * m + b * s, a * m, a * m + c * s],
    ]);
    check_shape(&w)?;
    assert!(quad_constraints_hold(&w)?, "parametrized weight matrices satisfy both identities");
    Ok(w)
}

/// Builds four points with the relations of `w`, dualizes, and expresses the
/// dual in a basis of the lattice spanned by its vertices. Returns `None` if
/// the result is not a Fano quadrilateral.
pub fn weight_matrix_to_polygon(w: &WeightMatrix) -> Result<Option<LatticePolygon>> {
    if !quad_constraints_hold(w)? {
        return Err(FanoError::InvalidParameters("weight matrix fails the barycentre identities".into()));
    }
    let r = &w.rows;
    let (l1, m3) = (r[0][0], r[1][2]);
    // Kernel basis with free coordinates 2 and 4.
    let pts = vec![
        RationalPoint::new(rat(-r[0][1], l1), rat(-r[0][3], l1)),
        RationalPoint::from_ints(1, 0),
        RationalPoint::new(rat(-r[1][1], m3), rat(-r[1][3], m3)),
        RationalPoint::from_ints(0, 1),
    ];
    let q = match RationalPolygon::new(pts) {
        Ok(q) if q.vertex_count() == 4 => q,
        _ => return Ok(None),
    };
    let dual = q.dual()?;
    let (_, _, coords) = dual.restrict_to_vertex_lattice();
    let p = LatticePolygon::new(coords)?;
    Ok(p.is_fano().then_some(p))
}

/// Inclusive integer ranges for the search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub a: (i64, i64),
    pub b: (i64, i64),
    pub c: (i64, i64),
    pub d: (i64, i64),
    pub l: (i64, i64),
    pub m: (i64, i64),
    pub r: (i64, i64),
    pub s: (i64, i64),
    /// Stop after this many distinct polygons.
    #[serde(default)]
    pub max_results: Option<usize>,
    /// Where the command-line tool writes results; unused by the library.
    #[serde(default)]
    pub output: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    /// `GL_2(Z)` canonical representative.
    pub polygon: LatticePolygon,
    pub params: QuadParams,
    pub weight_matrix: WeightMatrix,
    pub symmetric: bool,
}

fn in_range(x: i64, r: (i64, i64)) -> bool {
    r.0 <= x && x <= r.1
}

fn reduce_rows(w: &WeightMatrix) -> Vec<Vec<i64>> {
    w.rows
        .iter()
        .map(|row| {
            let g = row.iter().fold(0i64, |acc, &x| acc.gcd(&x));
            row.iter().map(|&x| x / g).collect()
        })
        .collect()
}

/// Enumerates parameters satisfying both identities, builds the polygons and
/// keeps the Fano ones, deduplicated up to `GL_2(Z)` and sorted by canonical
/// key.
pub fn search_ke_quads(cfg: &SearchConfig) -> Vec<SearchHit> {
    let mut seen_w: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    let mut hits: BTreeMap<Vec<LatticePoint>, SearchHit> = BTreeMap::new();
    let full = |hits: &BTreeMap<_, _>| cfg.max_results.is_some_and(|n| hits.len() >= n);
    for a in cfg.a.0..=cfg.a.1 {
        for d in cfg.d.0..=cfg.d.1 {
            if d == 0 || (3 * a) % d != 0 {
                continue;
            }
            for l in cfg.l.0..=cfg.l.1 {
                if l == 0 {
                    continue;
                }
                for m in cfg.m.0..=cfg.m.1 {
                    if l.gcd(&m) != 1 {
                        continue;
                    }
                    for r in cfg.r.0..=cfg.r.1 {
                        let num = 3 * a / d - m * r;
                        if num % l != 0 {
                            continue;
                        }
                        let s = num / l;
                        if !in_range(s, cfg.s) || r.gcd(&s) != 1 {
                            continue;
                        }
                        for b in cfg.b.0..=cfg.b.1 {
                            let c = -d * l * m - b;
                            if !in_range(c, cfg.c) {
                                continue;
                            }
                            let params = QuadParams { a, b, c, d, l, m, r, s };
                            let Ok(w) = params_to_weight_matrix(&params) else { continue };
                            if !seen_w.insert(reduce_rows(&w)) {
                                continue;
                            }
                            let Ok(Some(p)) = weight_matrix_to_polygon(&w) else { continue };
                            assert!(is_ke(&p), "search output must have dual barycentre zero");
                            let key = p.canonical_key(Orientation::Gl);
                            if hits.contains_key(&key) {
                                continue;
                            }
                            if full(&hits) {
                                return hits.into_values().collect();
                            }
                            let symmetric = is_symmetric(&p);
                            hits.insert(
                                key,
                                SearchHit {
                                    polygon: p.canonical_form(Orientation::Gl),
                                    params,
                                    weight_matrix: w,
                                    symmetric,
                                },
                            );
                        }
                    }
                }
            }
        }
    }
    hits.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[(i64, i64)]) -> LatticePolygon {
        LatticePolygon::from_coords(c).unwrap()
    }

    #[test]
    fn phk_vertex_matrix() {
        let raw = phk_vertices(2, 3).unwrap();
        assert_eq!(raw, poly(&[(-6, -1), (-3, -2), (9, -2), (9, -1), (-3, 3), (-6, 3)]));
        assert!(!raw.is_fano());
        let bottom = crate::edges::edge_metrics(crate::edges::EdgeRef::new(&raw, 1));
        assert_eq!((bottom.length, bottom.height), (12, 2));
        assert!(bottom.is_long() && bottom.is_pure());
        assert!(make_phk(2, 3).is_err());
        assert!(make_phk(2, 5).unwrap().is_fano());
        assert!(make_phk(2, 9).is_err());
        assert!(make_phk(1, 3).is_err());
        assert!(make_phk(3, 2).is_err());
    }

    #[test]
    fn trivial_refinement() {
        let p = poly(&[(1, 0), (0, 1), (-1, -1)]);
        let r = refine_lattice(&p, 1, LatticePoint::new(3, 7)).unwrap();
        assert!(r.polygon.is_isomorphic(&p, Orientation::Gl));
        assert!(r.fano);
    }

    #[test]
    fn refinement_of_p2() {
        let p = poly(&[(1, 0), (0, 1), (-1, -1)]);
        let r = refine_lattice(&p, 9, LatticePoint::new(1, 2)).unwrap();
        assert!(r.polygon.is_isomorphic(&poly(&[(-5, 1), (1, -2), (4, 1)]), Orientation::Gl));
    }

    #[test]
    fn constraint_checks() {
        assert!(quad_constraints_hold(&WeightMatrix::new(vec![vec![48, 67, 0, 65], vec![0, 47, -48, 37]])).unwrap());
        assert!(!quad_constraints_hold(&WeightMatrix::new(vec![vec![1, 1, 0, 1], vec![0, 1, -1, 1]])).unwrap());
        assert!(quad_constraints_hold(&WeightMatrix::new(vec![vec![1, 1, 1, 1], vec![0, 1, -1, 1]])).is_err());
    }

    #[test]
    fn params_example() {
        let p = QuadParams { a: 48, b: 19, c: 17, d: 36, l: 1, m: -1, r: 1, s: 5 };
        assert_eq!(params_to_weight_matrix(&p).unwrap().rows, vec![vec![48, 67, 0, 65], vec![0, 47, -48, 37]]);
        let bad = QuadParams { d: 72, ..p };
        assert!(params_to_weight_matrix(&bad).is_err());
    }

    #[test]
    fn empty_search() {
        let cfg = SearchConfig {
            a: (1, 0),
            b: (0, 0),
            c: (0, 0),
            d: (1, 1),
            l: (1, 1),
            m: (1, 1),
            r: (1, 1),
            s: (1, 1),
            max_results: None,
            output: None,
        };
        assert!(search_ke_quads(&cfg).is_empty());
    }
}
