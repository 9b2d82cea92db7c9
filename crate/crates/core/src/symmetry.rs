//! Automorphisms, symmetry predicates, dual barycentres, weights and lattice
//! index.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{FanoError, Result};
use crate::lattice::{det, LatticePoint, Mat2, UnimodularMap};
use crate::polygon::LatticePolygon;
use crate::rational::{int, rcross, rdet, Rational, RationalPoint};

/// The finite group `{U in GL_2(Z) : UP = P}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutGroup {
    pub elements: Vec<UnimodularMap>,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, u: &UnimodularMap) -> bool {
        self.elements.contains(u)
    }
}

/// Solves `U a = a'`, `U b = b'` over `Q` and returns `U` if it is integral
/// and unimodular.
fn map_pair(a: LatticePoint, b: LatticePoint, a2: LatticePoint, b2: LatticePoint) -> Option<UnimodularMap> {
    let d = det(a, b);
    if d == 0 {
        return None;
    }
    // U = [a2 b2] adj([a b]) / d
    let adj = [[b.y as i128, -(b.x as i128)], [-(a.y as i128), a.x as i128]];
    let tgt = [[a2.x as i128, b2.x as i128], [a2.y as i128, b2.y as i128]];
    let mut m = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let num = tgt[i][0] * adj[0][j] + tgt[i][1] * adj[1][j];
            if num % d != 0 {
                return None;
            }
            m[i][j] = i64::try_from(num / d).ok()?;
        }
    }
    UnimodularMap::new(Mat2(m))
}

pub fn automorphism_group(p: &LatticePolygon) -> AutGroup {
    let m = p.vertex_count();
    let verts = p.vertices();
    let (v0, v1) = (p.vertex(0), p.vertex(1));
    let mut elements: Vec<UnimodularMap> = Vec::new();
    for i in 0..m {
        for j in [(i + 1) % m, (i + m - 1) % m] {
            if let Some(u) = map_pair(v0, v1, p.vertex(i), p.vertex(j)) {
                let permutes = verts.iter().all(|&v| verts.contains(&u.apply(v)));
                if permutes && !elements.contains(&u) {
                    elements.push(u);
                }
            }
        }
    }
    elements.sort();
    AutGroup { elements }
}

/// The common fixed space of `Aut(P)` is the origin.
pub fn is_symmetric(p: &LatticePolygon) -> bool {
    let rows: Vec<[i64; 2]> = automorphism_group(p)
        .elements
        .iter()
        .flat_map(|u| {
            let m = u.matrix().0;
            [[m[0][0] - 1, m[0][1]], [m[1][0], m[1][1] - 1]]
        })
        .collect();
    rows.iter()
        .enumerate()
        .any(|(i, r)| rows[i + 1..].iter().any(|s| r[0] as i128 * s[1] as i128 - r[1] as i128 * s[0] as i128 != 0))
}

pub fn is_centrally_symmetric(p: &LatticePolygon) -> bool {
    p.vertices().iter().all(|&v| p.vertices().contains(&-v))
}

pub fn is_3_symmetric(p: &LatticePolygon) -> bool {
    automorphism_group(p).elements.iter().any(|u| u.order() == Some(3))
}

/// Fan triangles of the dual from its first vertex: `(normalized volume,
/// vertex average)` for each.
pub fn dual_fan_parts(p: &LatticePolygon) -> Result<Vec<(Rational, RationalPoint)>> {
    let q = p.dual()?;
    let v = q.vertices();
    let three = int(3);
    Ok((1..v.len() - 1)
        .map(|i| {
            let vol = rcross(&v[0], &v[i], &v[i + 1]);
            let b = v[0].add(&v[i]).add(&v[i + 1]);
            let b = RationalPoint::new(b.x / &three, b.y / &three);
            (vol, b)
        })
        .collect())
}

/// Exact barycentre of the dual polygon.
pub fn dual_barycentre(p: &LatticePolygon) -> Result<RationalPoint> {
    let parts = dual_fan_parts(p)?;
    let total = parts.iter().fold(Rational::zero(), |acc, (v, _)| acc + v);
    let sum = parts.iter().fold(RationalPoint::zero(), |acc, (v, b)| acc.add(&b.scale(v)));
    Ok(RationalPoint::new(sum.x / &total, sum.y / &total))
}

/// The dual barycentre is the origin.
pub fn is_ke(p: &LatticePolygon) -> bool {
    p.is_fano() && dual_barycentre(p).map(|b| b.is_zero()).unwrap_or(false)
}

/// An integer relation `sum q_i v_i = 0` among vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector {
    pub entries: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightMatrix {
    pub rows: Vec<Vec<i64>>,
}

impl WeightMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Self {
        WeightMatrix { rows }
    }
}

/// Relation `det(b,c) a + det(c,a) b + det(a,b) c = 0`, scaled to coprime
/// integers with first nonzero entry positive.
fn three_term_relation(a: &RationalPoint, b: &RationalPoint, c: &RationalPoint) -> [BigInt; 3] {
    let coeffs = [rdet(b, c), rdet(c, a), rdet(a, b)];
    let l = coeffs.iter().fold(BigInt::from(1), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|r| (r * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let mut out: Vec<BigInt> = ints.iter().map(|x| x / &g).collect();
    if out.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        out.iter_mut().for_each(|x| *x = -x.clone());
    }
    [out[0].clone(), out[1].clone(), out[2].clone()]
}

fn to_i64(x: &BigInt) -> i64 {
    i64::try_from(x).expect("weight fits in i64")
}

/// Weights of a triangle: the positive primitive kernel vector of its vertex
/// matrix.
pub fn weights(p: &LatticePolygon) -> Result<WeightVector> {
    if p.vertex_count() != 3 {
        return Err(FanoError::VertexCount { expected: 3, got: p.vertex_count() });
    }
    let v: Vec<RationalPoint> = p.vertices().iter().map(|&x| x.into()).collect();
    let r = three_term_relation(&v[0], &v[1], &v[2]);
    Ok(WeightVector { entries: r.iter().map(to_i64).collect() })
}

/// Weight matrix of four points `v1..v4`: row one vanishes at `v3`, row two
/// at `v1`.
pub fn weight_matrix_of(points: &[RationalPoint]) -> Result<WeightMatrix> {
    if points.len() != 4 {
        return Err(FanoError::VertexCount { expected: 4, got: points.len() });
    }
    let r1 = three_term_relation(&points[0], &points[1], &points[3]);
    let r2 = three_term_relation(&points[1], &points[2], &points[3]);
    Ok(WeightMatrix {
        rows: vec![
            vec![to_i64(&r1[0]), to_i64(&r1[1]), 0, to_i64(&r1[2])],
            vec![0, to_i64(&r2[0]), to_i64(&r2[1]), to_i64(&r2[2])],
        ],
    })
}

/// Weight matrix of a quadrilateral in its stored vertex order.
pub fn weight_matrix(p: &LatticePolygon) -> Result<WeightMatrix> {
    let v: Vec<RationalPoint> = p.vertices().iter().map(|&x| x.into()).collect();
    weight_matrix_of(&v)
}

/// Index of the sublattice spanned by the vertices: the gcd of all `2 x 2`
/// minors of the vertex matrix.
pub fn lattice_index(p: &LatticePolygon) -> i64 {
    let v = p.vertices();
    let mut g: i128 = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            g = g.gcd(&det(v[i], v[j]));
        }
    }
    i64::try_from(g).expect("index fits in i64")
}

/// For a triangle with weights `(1,1,1)`, the pair `(k, a)` with `1 <= a <= k`
/// such that the triangle is isomorphic to `conv{(0,1), (k,-a), (-k,a-1)}`,
/// minimal in `a` over all such presentations.
pub fn ke_triangle_normal_form(p: &LatticePolygon) -> Option<(i64, i64)> {
    if weights(p).ok()?.entries != [1, 1, 1] {
        return None;
    }
    let mut best: Option<(i64, i64)> = None;
    for i in 0..3 {
        let v = p.vertex(i);
        let e = i64::extended_gcd(&v.x, &v.y);
        let (s, t) = (e.x * e.gcd.signum(), e.y * e.gcd.signum());
        let u = UnimodularMap::from_rows([[v.y, -v.x], [s, t]]).expect("primitive vertex");
        debug_assert_eq!(u.apply(v), LatticePoint::new(0, 1));
        for j in [i + 1, i + 2] {
            let w = u.apply(p.vertex(j));
            // Reflecting in the y-axis brings the other vertex to positive x.
            for (kx, ay) in [(w.x, -w.y), (-w.x, w.y + 1)] {
                if kx > 0 {
                    let k = kx;
                    let a = (ay - 1).rem_euclid(k) + 1;
                    if best.is_none_or(|b| (k, a) < b) {
                        best = Some((k, a));
                    }
                }
            }
        }
    }
    let (k, _) = best?;
    assert!(k % 2 == 1, "a KE triangle has odd index");
    best
}
