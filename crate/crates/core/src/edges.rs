//! Edge cones: lengths, heights, oriented Hermite normal forms, residues and
//! directed singularity content.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lattice::{mod_inverse, row_hnf, DualVector, LatticePoint, Orientation};
use crate::polygon::LatticePolygon;

/// An edge of a polygon: from vertex `index` to vertex `index + 1`.
#[derive(Debug, Clone, Copy)]
pub struct EdgeRef<'a> {
    pub polygon: &'a LatticePolygon,
    pub index: usize,
}

impl<'a> EdgeRef<'a> {
    pub fn new(polygon: &'a LatticePolygon, index: usize) -> Self {
        assert!(index < polygon.vertex_count(), "edge index out of range");
        EdgeRef { polygon, index }
    }

    pub fn endpoints(&self) -> (LatticePoint, LatticePoint) {
        self.polygon.edge(self.index)
    }

    pub fn metrics(&self) -> EdgeMetrics {
        edge_metrics(*self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeMetrics {
    pub length: i64,
    pub height: i64,
    pub inner_normal: DualVector,
    pub direction: LatticePoint,
}

impl EdgeMetrics {
    pub fn is_long(&self) -> bool {
        self.length >= self.height
    }

    pub fn is_pure(&self) -> bool {
        self.length % self.height == 0
    }
}

pub fn edge_metrics(e: EdgeRef<'_>) -> EdgeMetrics {
    let (v0, v1) = e.endpoints();
    let diff = v1 - v0;
    let length = diff.content();
    let direction = diff.primitive();
    let inner_normal = DualVector::new(-direction.y, direction.x);
    let height = -inner_normal.pair(v0);
    EdgeMetrics { length, height: i64::try_from(height).expect("edge height fits in i64"), inner_normal, direction }
}

/// The normal form `(1 a; 0 r)` of a two-dimensional cone, `0 <= a < r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConeHNF {
    pub a: i64,
    pub r: i64,
}

impl ConeHNF {
    pub const SMOOTH: ConeHNF = ConeHNF { a: 0, r: 1 };

    /// Validates `0 <= a < r` and `gcd(a, r) = 1`.
    pub fn new(a: i64, r: i64) -> Option<ConeHNF> {
        use num_integer::Integer;
        (r >= 1 && (0..r).contains(&a) && a.gcd(&r) == 1).then_some(ConeHNF { a, r })
    }

    /// Normal form of the cone spanned by `v0`, `v1` (anticlockwise). The
    /// rays are scaled to primitive first.
    pub fn of_cone(v0: LatticePoint, v1: LatticePoint) -> ConeHNF {
        let (p0, p1) = (v0.primitive(), v1.primitive());
        let h = row_hnf(&[p0.x, p1.x], &[p0.y, p1.y], Orientation::Sl).expect("cone rays are independent");
        debug_assert_eq!((h.rows[0][0], h.rows[1][0]), (1, 0));
        let (a, r) = (h.rows[0][1], h.rows[1][1]);
        assert!(r > 0, "cone rays must be in anticlockwise order");
        ConeHNF { a, r }
    }

    /// The form after a determinant `-1` change of basis: `a` goes to its
    /// inverse modulo `r`.
    pub fn conjugate(&self) -> ConeHNF {
        ConeHNF { a: mod_inverse(self.a, self.r).expect("a is a unit mod r"), r: self.r }
    }

    /// `(r, (-a) mod r)`, the cyclic quotient singularity `1/r(1, -a)`.
    pub fn singularity_type(&self) -> (i64, i64) {
        (self.r, (-self.a).rem_euclid(self.r))
    }

    pub fn is_smooth(&self) -> bool {
        self.r == 1
    }
}

impl fmt::Display for ConeHNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.r)
    }
}

impl Serialize for ConeHNF {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.a, self.r].serialize(s)
    }
}

impl<'de> Deserialize<'de> for ConeHNF {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [a, r] = <[i64; 2]>::deserialize(d)?;
        ConeHNF::new(a, r).ok_or_else(|| serde::de::Error::custom(format!("invalid cone form [{a},{r}]")))
    }
}

pub fn cone_hnf(e: EdgeRef<'_>) -> ConeHNF {
    let (v0, v1) = e.endpoints();
    ConeHNF::of_cone(v0, v1)
}

pub fn hnf_conjugate(h: ConeHNF) -> ConeHNF {
    h.conjugate()
}

pub fn singularity_type(h: ConeHNF) -> (i64, i64) {
    h.singularity_type()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeLength {
    Long,
    Short,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Purity {
    Pure,
    Residual,
}

pub fn classify_edge(e: EdgeRef<'_>) -> (EdgeLength, Purity) {
    let m = edge_metrics(e);
    (
        if m.is_long() { EdgeLength::Long } else { EdgeLength::Short },
        if m.is_pure() { Purity::Pure } else { Purity::Residual },
    )
}

/// Which end of the edge holds the residual segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResiduePlacement {
    Anticlockwise,
    Clockwise,
}

/// Residual segment of an edge, as a pair of (not necessarily primitive)
/// lattice points, or `None` for pure edges.
pub fn residual_segment(e: EdgeRef<'_>, placement: ResiduePlacement) -> Option<(LatticePoint, LatticePoint)> {
    let m = edge_metrics(e);
    let rem = m.length % m.height;
    if rem == 0 {
        return None;
    }
    let (v0, v1) = e.endpoints();
    Some(match placement {
        ResiduePlacement::Anticlockwise => (v1 - m.direction.scale(rem), v1),
        ResiduePlacement::Clockwise => (v0, v0 + m.direction.scale(rem)),
    })
}

/// `(n_E, residue)` with the residue at the anticlockwise end.
pub fn edge_sc(e: EdgeRef<'_>) -> (i64, Option<ConeHNF>) {
    edge_sc_with(e, ResiduePlacement::Anticlockwise)
}

pub fn edge_sc_with(e: EdgeRef<'_>, placement: ResiduePlacement) -> (i64, Option<ConeHNF>) {
    let m = edge_metrics(e);
    let n = m.length / m.height;
    let residue = residual_segment(e, placement).map(|(a, b)| ConeHNF::of_cone(a, b));
    (n, residue)
}

/// `true` if `b` is a cyclic rotation of `a`.
pub fn rotation_equal<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|s| (0..a.len()).all(|i| a[(s + i) % a.len()] == b[i]))
}

/// Smallest `p` dividing `len` such that the list is `p`-periodic.
pub fn cyclic_period<T: PartialEq>(a: &[T]) -> usize {
    let m = a.len();
    (1..=m).find(|&p| m.is_multiple_of(p) && (0..m).all(|i| a[i] == a[(i + p) % m])).unwrap_or(m.max(1))
}

/// Directed singularity content: `n` and the anticlockwise cyclic basket.
/// Equality is up to rotation of the basket.
#[derive(Debug, Clone, Eq, Serialize, Deserialize)]
pub struct DirectedSC {
    pub n: i64,
    pub basket: Vec<ConeHNF>,
}

impl PartialEq for DirectedSC {
    fn eq(&self, o: &Self) -> bool {
        self.n == o.n && rotation_equal(&self.basket, &o.basket)
    }
}

impl DirectedSC {
    /// The content of the mirror image: reversed basket of conjugates.
    pub fn reflected(&self) -> DirectedSC {
        DirectedSC { n: self.n, basket: self.basket.iter().rev().map(|h| h.conjugate()).collect() }
    }

    pub fn equal_up_to_reflection(&self, o: &Self) -> bool {
        self == o || *self == o.reflected()
    }

    /// Lexicographically smallest rotation of the basket, for hashing.
    pub fn normalized(&self) -> DirectedSC {
        let m = self.basket.len();
        let basket = (0..m.max(1))
            .filter(|_| m > 0)
            .map(|s| (0..m).map(|i| self.basket[(s + i) % m]).collect::<Vec<_>>())
            .min()
            .unwrap_or_default();
        DirectedSC { n: self.n, basket }
    }
}

impl std::hash::Hash for DirectedSC {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        let norm = self.normalized();
        norm.n.hash(state);
        norm.basket.hash(state);
    }
}

pub fn directed_sc(p: &LatticePolygon) -> DirectedSC {
    let mut n = 0;
    let mut basket = Vec::new();
    for i in 0..p.vertex_count() {
        let (ne, res) = edge_sc(EdgeRef::new(p, i));
        n += ne;
        basket.extend(res);
    }
    DirectedSC { n, basket }
}

/// The anticlockwise cyclic list of edge cone forms.
#[derive(Debug, Clone, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeData {
    pub forms: Vec<ConeHNF>,
}

impl PartialEq for EdgeData {
    fn eq(&self, o: &Self) -> bool {
        rotation_equal(&self.forms, &o.forms)
    }
}

impl EdgeData {
    /// Number of repetitions `g` such that the list is `C x g`.
    pub fn multiplicity(&self) -> usize {
        self.forms.len() / cyclic_period(&self.forms)
    }

    pub fn reflected(&self) -> EdgeData {
        EdgeData { forms: self.forms.iter().rev().map(|h| h.conjugate()).collect() }
    }
}

pub fn edge_data(p: &LatticePolygon) -> EdgeData {
    EdgeData { forms: (0..p.vertex_count()).map(|i| cone_hnf(EdgeRef::new(p, i))).collect() }
}

/// One row of a per-edge summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRow {
    pub from: LatticePoint,
    pub to: LatticePoint,
    pub length: i64,
    pub height: i64,
    pub inner_normal: DualVector,
    pub hnf: ConeHNF,
    pub long: bool,
    pub pure: bool,
    pub n: i64,
    pub residue: Option<ConeHNF>,
}

pub fn edge_table(p: &LatticePolygon) -> Vec<EdgeRow> {
    (0..p.vertex_count())
        .map(|i| {
            let e = EdgeRef::new(p, i);
            let m = edge_metrics(e);
            let (from, to) = e.endpoints();
            let (n, residue) = edge_sc(e);
            EdgeRow {
                from,
                to,
                length: m.length,
                height: m.height,
                inner_normal: m.inner_normal,
                hnf: cone_hnf(e),
                long: m.is_long(),
                pure: m.is_pure(),
                n,
                residue,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::UnimodularMap;

    fn poly(c: &[(i64, i64)]) -> LatticePolygon {
        LatticePolygon::from_coords(c).unwrap()
    }

    fn symmetric(half: &[(i64, i64)]) -> LatticePolygon {
        let mut pts: Vec<(i64, i64)> = half.to_vec();
        pts.extend(half.iter().map(|&(x, y)| (-x, -y)));
        LatticePolygon::conv(&pts.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn p2_edges_are_smooth() {
        let p = poly(&[(1, 0), (0, 1), (-1, -1)]);
        let i = (0..3).find(|&i| p.edge(i) == (LatticePoint::new(1, 0), LatticePoint::new(0, 1))).unwrap();
        let m = EdgeRef::new(&p, i).metrics();
        assert_eq!((m.length, m.height, m.inner_normal), (1, 1, DualVector::new(-1, -1)));
        assert_eq!(edge_data(&p).forms, vec![ConeHNF::SMOOTH; 3]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(ConeHNF::new(3, 11).unwrap().conjugate(), ConeHNF::new(4, 11).unwrap());
        assert_eq!(ConeHNF::new(6, 25).unwrap().conjugate(), ConeHNF::new(21, 25).unwrap());
        assert_eq!(ConeHNF::SMOOTH.conjugate(), ConeHNF::SMOOTH);
        assert!(ConeHNF::new(2, 4).is_none());
    }

    #[test]
    fn conjugate_matches_reflection() {
        // (1 3; 0 11) is the cone over (1,0), (3,11); reflecting it swaps the ray order.
        let h = ConeHNF::of_cone(LatticePoint::new(1, 0), LatticePoint::new(3, 11));
        assert_eq!(h, ConeHNF::new(3, 11).unwrap());
        let refl = UnimodularMap::from_rows([[1, 0], [0, -1]]).unwrap();
        let g = ConeHNF::of_cone(refl.apply(LatticePoint::new(3, 11)), refl.apply(LatticePoint::new(1, 0)));
        assert_eq!(g, h.conjugate());
    }

    #[test]
    fn singularity_types() {
        assert_eq!(ConeHNF::new(6, 25).unwrap().singularity_type(), (25, 19));
        assert_eq!(ConeHNF::SMOOTH.singularity_type(), (1, 0));
        assert_eq!(ConeHNF::new(2, 3).unwrap().singularity_type(), (3, 1));
    }

    #[test]
    fn square_content() {
        let sq = poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
        assert_eq!(directed_sc(&sq), DirectedSC { n: 4, basket: vec![] });
        let big = poly(&[(1, 1), (-1, 1), (-1, -1), (1, -1)]);
        for i in 0..4 {
            assert_eq!(edge_sc(EdgeRef::new(&big, i)), (2, None));
        }
    }

    #[test]
    fn hexagon_basket() {
        let hex = symmetric(&[(1, -2), (2, -1), (1, 1)]);
        let sc = directed_sc(&hex);
        assert_eq!(sc.n, 0);
        assert_eq!(sc.basket.len(), 6);
        assert!(sc.basket.iter().all(|h| h.r == 3));
    }

    #[test]
    fn residue_placements_agree() {
        let p = poly(&[(-1, -1), (5, -1), (-1, 2)]);
        for i in 0..3 {
            let e = EdgeRef::new(&p, i);
            assert_eq!(edge_sc_with(e, ResiduePlacement::Anticlockwise), edge_sc_with(e, ResiduePlacement::Clockwise));
        }
    }

    #[test]
    fn rotation_and_period() {
        assert!(rotation_equal(&[1, 2, 3], &[3, 1, 2]));
        assert!(!rotation_equal(&[1, 2, 3], &[3, 2, 1]));
        assert_eq!(cyclic_period(&[1, 2, 1, 2]), 2);
        assert_eq!(cyclic_period(&[1, 2, 3]), 3);
        let sc = DirectedSC { n: 1, basket: vec![ConeHNF::new(1, 2).unwrap(), ConeHNF::new(2, 3).unwrap()] };
        let rot = DirectedSC { n: 1, basket: vec![ConeHNF::new(2, 3).unwrap(), ConeHNF::new(1, 2).unwrap()] };
        assert_eq!(sc, rot);
        assert_eq!(sc.normalized().basket, rot.normalized().basket);
    }

    #[test]
    fn serde_formats() {
        let sc = DirectedSC { n: 2, basket: vec![ConeHNF::new(6, 25).unwrap()] };
        assert_eq!(serde_json::to_string(&sc).unwrap(), r#"{"n":2,"basket":[[6,25]]}"#);
        let back: DirectedSC = serde_json::from_str(r#"{"n":2,"basket":[[6,25]]}"#).unwrap();
        assert_eq!(back, sc);
        assert!(serde_json::from_str::<ConeHNF>("[5,25]").is_err());
    }
}
