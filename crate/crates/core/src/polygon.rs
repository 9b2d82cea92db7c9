//! Lattice and rational polygons: construction, duality, volumes, lattice
//! point enumeration and `GL_2(Z)` / `SL_2(Z)` canonical forms.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Num, Signed, Zero};

use crate::error::{FanoError, Result};
use crate::lattice::{det, row_hnf, DualVector, LatticePoint, Orientation, UnimodularMap};
use crate::rational::{format_rational, parse_rational, rcross, Rational, RationalPoint};

/// Strictly convex hull of a point set, anticlockwise, starting at the
/// lexicographically smallest vertex. Collinear boundary points are dropped.
pub fn convex_hull<T: Clone + Ord + Num>(points: &[(T, T)]) -> Vec<(T, T)> {
    let mut pts: Vec<(T, T)> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: &(T, T), a: &(T, T), b: &(T, T)| -> T {
        (a.0.clone() - o.0.clone()) * (b.1.clone() - o.1.clone())
            - (a.1.clone() - o.1.clone()) * (b.0.clone() - o.0.clone())
    };
    let mut lower: Vec<(T, T)> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= T::zero() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<(T, T)> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= T::zero() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// What the constructor had to change to obtain the in-memory form.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstructionReport {
    /// The input was listed clockwise.
    pub reversed: bool,
    /// Input points dropped because they were collinear with their neighbours.
    pub dropped: usize,
}

/// Matches a cyclic input list against its hull. Returns the report, or
/// `NotConvex` if some input point is not on the hull boundary or the hull
/// vertices are listed out of cyclic order.
fn match_against_hull<P: PartialEq + Clone>(
    input: &[P],
    hull: &[P],
    on_boundary: impl Fn(&P) -> bool,
) -> Result<ConstructionReport> {
    let kept: Vec<P> = input.iter().filter(|p| hull.contains(p)).cloned().collect();
    let dropped = input.len() - kept.len();
    if input.iter().any(|p| !hull.contains(p) && !on_boundary(p)) {
        return Err(FanoError::NotConvex);
    }
    let mut dedup = kept.clone();
    dedup.dedup();
    if dedup.len() > 1 && dedup.first() == dedup.last() {
        dedup.pop();
    }
    if dedup.len() != hull.len() {
        return Err(FanoError::NotConvex);
    }
    let m = hull.len();
    let start = dedup.iter().position(|p| *p == hull[0]).ok_or(FanoError::NotConvex)?;
    let forward = (0..m).all(|i| dedup[(start + i) % m] == hull[i]);
    if forward {
        return Ok(ConstructionReport { reversed: false, dropped: input.len() - m });
    }
    let backward = (0..m).all(|i| dedup[(start + m - i) % m] == hull[i]);
    if backward {
        return Ok(ConstructionReport { reversed: true, dropped: input.len() - m });
    }
    let _ = dropped;
    Err(FanoError::NotConvex)
}

/// A convex lattice polygon with anticlockwise, strictly convex vertices,
/// rotated to start at the lexicographically smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

impl LatticePolygon {
    /// Builds a polygon from its vertices listed cyclically in either
    /// direction. Points collinear with their neighbours are dropped.
    pub fn new(vertices: Vec<LatticePoint>) -> Result<Self> {
        Self::new_with_report(vertices).map(|(p, _)| p)
    }

    pub fn new_with_report(vertices: Vec<LatticePoint>) -> Result<(Self, ConstructionReport)> {
        let poly = Self::conv(&vertices)?;
        let report = match_against_hull(&vertices, &poly.vertices, |p| poly.on_boundary(*p))?;
        Ok((poly, report))
    }

    /// Convex hull of an arbitrary point set.
    pub fn conv(points: &[LatticePoint]) -> Result<Self> {
        let pts: Vec<(i128, i128)> = points.iter().map(|p| (p.x as i128, p.y as i128)).collect();
        let hull = convex_hull(&pts);
        if hull.len() < 3 {
            return Err(FanoError::Degenerate(hull.len()));
        }
        let vertices = hull.into_iter().map(|(x, y)| LatticePoint::new(x as i64, y as i64)).collect();
        Ok(LatticePolygon { vertices })
    }

    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect())
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, i: usize) -> LatticePoint {
        self.vertices[i % self.vertices.len()]
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1`, anticlockwise.
    pub fn edge(&self, i: usize) -> (LatticePoint, LatticePoint) {
        (self.vertex(i), self.vertex(i + 1))
    }

    pub fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        (0..self.vertices.len()).map(move |i| self.edge(i))
    }

    /// Inner normal of edge `i` (not necessarily primitive) and the value it
    /// takes on the edge.
    pub(crate) fn edge_inequality(&self, i: usize) -> ((i128, i128), i128) {
        let (a, b) = self.edge(i);
        let n = (-(b.y as i128 - a.y as i128), b.x as i128 - a.x as i128);
        (n, n.0 * a.x as i128 + n.1 * a.y as i128)
    }

    /// Primitive inner normal of edge `i`.
    pub fn inner_normal(&self, i: usize) -> DualVector {
        let (a, b) = self.edge(i);
        let d = (b - a).primitive();
        DualVector::new(-d.y, d.x)
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        (0..self.vertices.len()).all(|i| {
            let (n, c) = self.edge_inequality(i);
            n.0 * p.x as i128 + n.1 * p.y as i128 >= c
        })
    }

    pub fn on_boundary(&self, p: LatticePoint) -> bool {
        self.contains(p)
            && (0..self.vertices.len()).any(|i| {
                let (n, c) = self.edge_inequality(i);
                n.0 * p.x as i128 + n.1 * p.y as i128 == c
            })
    }

    pub fn contains_origin_strictly(&self) -> bool {
        (0..self.vertices.len()).all(|i| self.edge_inequality(i).1 < 0)
    }

    /// Origin strictly interior and every vertex primitive.
    pub fn is_fano(&self) -> bool {
        self.contains_origin_strictly() && self.vertices.iter().all(|v| v.is_primitive())
    }

    pub fn transform(&self, u: &UnimodularMap) -> LatticePolygon {
        let pts: Vec<LatticePoint> = self.vertices.iter().map(|&v| u.apply(v)).collect();
        LatticePolygon::conv(&pts).expect("unimodular image of a polygon is a polygon")
    }

    pub fn negate(&self) -> LatticePolygon {
        self.transform(&UnimodularMap::from_rows([[-1, 0], [0, -1]]).unwrap())
    }

    /// Polar dual `{u : u(v) >= -1 for all v in P}`, one vertex per edge.
    pub fn dual(&self) -> Result<RationalPolygon> {
        if !self.contains_origin_strictly() {
            return Err(FanoError::UnboundedDual);
        }
        let vertices = (0..self.vertices.len())
            .map(|i| {
                let (a, b) = self.edge(i);
                let u = self.inner_normal(i);
                let h = -u.pair(a);
                debug_assert_eq!(h, -u.pair(b));
                let h = h as i64;
                RationalPoint::over(u.x, u.y, h)
            })
            .collect();
        Ok(RationalPolygon::from_ordered(vertices))
    }

    /// Twice the Euclidean area.
    pub fn normalized_volume(&self) -> i128 {
        self.edges().map(|(a, b)| det(a, b)).sum()
    }

    /// All lattice points of the dilation `kP`.
    pub fn lattice_points(&self, k: u64) -> Vec<LatticePoint> {
        let k = k as i64;
        let (xmin, xmax, ymin, ymax) = self.bounding_box();
        let mut out = Vec::new();
        let ineqs: Vec<_> = (0..self.vertices.len()).map(|i| self.edge_inequality(i)).collect();
        for x in k * xmin..=k * xmax {
            for y in k * ymin..=k * ymax {
                let inside = ineqs.iter().all(|(n, c)| n.0 * x as i128 + n.1 * y as i128 >= *c * k as i128);
                if inside {
                    out.push(LatticePoint::new(x, y));
                }
            }
        }
        out
    }

    pub fn bounding_box(&self) -> (i64, i64, i64, i64) {
        let xs = self.vertices.iter().map(|v| v.x);
        let ys = self.vertices.iter().map(|v| v.y);
        (xs.clone().min().unwrap(), xs.max().unwrap(), ys.clone().min().unwrap(), ys.max().unwrap())
    }

    /// Lattice length of edge `i`.
    pub fn edge_length(&self, i: usize) -> i64 {
        let (a, b) = self.edge(i);
        (b - a).content()
    }

    pub fn boundary_lattice_point_count(&self) -> i64 {
        (0..self.vertices.len()).map(|i| self.edge_length(i)).sum()
    }

    /// The lexicographically smallest Hermite-normal-form vertex list over all
    /// cyclic relabelings (and, for `GL`, both traversal directions).
    pub fn canonical_key(&self, orientation: Orientation) -> Vec<LatticePoint> {
        let m = self.vertices.len();
        let mut best: Option<Vec<LatticePoint>> = None;
        let reversals: &[bool] = match orientation {
            Orientation::Gl => &[false, true],
            Orientation::Sl => &[false],
        };
        for &rev in reversals {
            for start in 0..m {
                let seq: Vec<LatticePoint> =
                    (0..m).map(|i| if rev { self.vertex(start + m - i) } else { self.vertex(start + i) }).collect();
                let xs: Vec<i64> = seq.iter().map(|v| v.x).collect();
                let ys: Vec<i64> = seq.iter().map(|v| v.y).collect();
                let h = row_hnf(&xs, &ys, orientation).expect("polygon vertex matrix has rank 2");
                let key: Vec<LatticePoint> = (0..m).map(|j| LatticePoint::new(h.rows[0][j], h.rows[1][j])).collect();
                if best.as_ref().is_none_or(|b| key < *b) {
                    best = Some(key);
                }
            }
        }
        best.expect("non-empty polygon")
    }

    /// Distinguished representative of the orbit under `GL_2(Z)` or `SL_2(Z)`.
    pub fn canonical_form(&self, orientation: Orientation) -> LatticePolygon {
        LatticePolygon::conv(&self.canonical_key(orientation)).expect("orbit representative")
    }

    pub fn is_isomorphic(&self, other: &LatticePolygon, orientation: Orientation) -> bool {
        self.vertices.len() == other.vertices.len()
            && self.canonical_key(orientation) == other.canonical_key(orientation)
    }

    pub fn to_rational(&self) -> RationalPolygon {
        RationalPolygon::from_ordered(self.vertices.iter().map(|&v| v.into()).collect())
    }

    pub fn vertex_sum(&self) -> LatticePoint {
        self.vertices.iter().fold(LatticePoint::ORIGIN, |acc, &v| acc + v)
    }
}

impl serde::Serialize for LatticePolygon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for LatticePolygon {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pts = Vec::<LatticePoint>::deserialize(d)?;
        LatticePolygon::new(pts).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Splits `[[a,b],[c,d],...]` into coordinate string pairs.
fn split_pairs(s: &str) -> Result<Vec<(String, String)>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| FanoError::Parse(format!("expected [[x,y],...], got {s:?}")))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    let body = inner
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| FanoError::Parse(format!("expected [[x,y],...], got {s:?}")))?;
    body.split("],[")
        .map(|pair| {
            let mut parts = pair.split(',');
            match (parts.next(), parts.next(), parts.next()) {
                (Some(a), Some(b), None) if !a.is_empty() && !b.is_empty() => Ok((a.to_string(), b.to_string())),
                _ => Err(FanoError::Parse(format!("bad coordinate pair {pair:?}"))),
            }
        })
        .collect()
}

impl FromStr for LatticePolygon {
    type Err = FanoError;
    fn from_str(s: &str) -> Result<Self> {
        let pts = split_pairs(s)?
            .into_iter()
            .map(|(a, b)| {
                let x = a.parse().map_err(|_| FanoError::Parse(format!("bad integer {a:?}")))?;
                let y = b.parse().map_err(|_| FanoError::Parse(format!("bad integer {b:?}")))?;
                Ok(LatticePoint::new(x, y))
            })
            .collect::<Result<Vec<_>>>()?;
        LatticePolygon::new(pts)
    }
}

/// A convex polygon with exact rational vertices, same conventions as
/// [`LatticePolygon`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPolygon {
    vertices: Vec<RationalPoint>,
}

impl RationalPolygon {
    pub fn new(vertices: Vec<RationalPoint>) -> Result<Self> {
        let poly = Self::conv(&vertices)?;
        match_against_hull(&vertices, &poly.vertices, |p| poly.on_boundary(p))?;
        Ok(poly)
    }

    pub fn conv(points: &[RationalPoint]) -> Result<Self> {
        let pts: Vec<(Rational, Rational)> = points.iter().map(|p| (p.x.clone(), p.y.clone())).collect();
        let hull = convex_hull(&pts);
        if hull.len() < 3 {
            return Err(FanoError::Degenerate(hull.len()));
        }
        Ok(RationalPolygon { vertices: hull.into_iter().map(|(x, y)| RationalPoint::new(x, y)).collect() })
    }

    /// For vertex lists already known to be anticlockwise and strictly convex;
    /// only rotates to the lexicographically smallest vertex.
    pub(crate) fn from_ordered(mut vertices: Vec<RationalPoint>) -> Self {
        let start = (0..vertices.len()).min_by(|&i, &j| vertices[i].cmp(&vertices[j])).unwrap_or(0);
        vertices.rotate_left(start);
        let poly = RationalPolygon { vertices };
        debug_assert!(poly.is_strictly_convex_ccw());
        poly
    }

    fn is_strictly_convex_ccw(&self) -> bool {
        let m = self.vertices.len();
        (0..m)
            .all(|i| rcross(&self.vertices[i], &self.vertices[(i + 1) % m], &self.vertices[(i + 2) % m]).is_positive())
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, i: usize) -> &RationalPoint {
        &self.vertices[i % self.vertices.len()]
    }

    fn edge_inequality(&self, i: usize) -> (RationalPoint, Rational) {
        let a = self.vertex(i);
        let b = self.vertex(i + 1);
        let d = b.sub(a);
        let n = RationalPoint::new(-d.y, d.x);
        let c = n.pair(a);
        (n, c)
    }

    pub fn contains(&self, p: &RationalPoint) -> bool {
        (0..self.vertices.len()).all(|i| {
            let (n, c) = self.edge_inequality(i);
            n.pair(p) >= c
        })
    }

    pub fn on_boundary(&self, p: &RationalPoint) -> bool {
        self.contains(p)
            && (0..self.vertices.len()).any(|i| {
                let (n, c) = self.edge_inequality(i);
                n.pair(p) == c
            })
    }

    pub fn contains_origin_strictly(&self) -> bool {
        (0..self.vertices.len()).all(|i| self.edge_inequality(i).1.is_negative())
    }

    /// Polar dual; requires the origin in the strict interior.
    pub fn dual(&self) -> Result<RationalPolygon> {
        if !self.contains_origin_strictly() {
            return Err(FanoError::UnboundedDual);
        }
        let vertices = (0..self.vertices.len())
            .map(|i| {
                let (n, c) = self.edge_inequality(i);
                // n(x) = c < 0 on the edge, so n / (-c) pairs to -1 with it.
                let s = -(Rational::from_integer(1.into()) / c);
                n.scale(&s)
            })
            .collect();
        Ok(RationalPolygon::from_ordered(vertices))
    }

    /// Twice the Euclidean area.
    pub fn normalized_volume(&self) -> Rational {
        let m = self.vertices.len();
        let zero = RationalPoint::zero();
        (0..m).fold(Rational::zero(), |acc, i| acc + rcross(&zero, &self.vertices[i], &self.vertices[(i + 1) % m]))
    }

    /// The polygon as a lattice polygon, if every vertex is integral.
    pub fn to_lattice(&self) -> Option<LatticePolygon> {
        let pts: Option<Vec<LatticePoint>> = self.vertices.iter().map(|v| v.to_lattice()).collect();
        LatticePolygon::new(pts?).ok()
    }

    pub fn scale(&self, k: &Rational) -> RationalPolygon {
        assert!(k.is_positive());
        RationalPolygon::from_ordered(self.vertices.iter().map(|v| v.scale(k)).collect())
    }

    /// Lattice points inside, by bounding-box scan.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        let floor = |r: &Rational| -> i64 { i64::try_from(r.floor().to_integer()).expect("coordinate range") };
        let ceil = |r: &Rational| -> i64 { i64::try_from(r.ceil().to_integer()).expect("coordinate range") };
        let xmin = self.vertices.iter().map(|v| ceil(&v.x)).min().unwrap();
        let xmax = self.vertices.iter().map(|v| floor(&v.x)).max().unwrap();
        let ymin = self.vertices.iter().map(|v| ceil(&v.y)).min().unwrap();
        let ymax = self.vertices.iter().map(|v| floor(&v.y)).max().unwrap();
        let ineqs: Vec<_> = (0..self.vertices.len()).map(|i| self.edge_inequality(i)).collect();
        let mut out = Vec::new();
        for x in xmin..=xmax {
            for y in ymin..=ymax {
                let p = RationalPoint::from_ints(x, y);
                if ineqs.iter().all(|(n, c)| n.pair(&p) >= *c) {
                    out.push(LatticePoint::new(x, y));
                }
            }
        }
        out
    }

    /// The lattice generated by the vertices: returns `(basis, coordinates)`
    /// where `basis` has rational columns `b1, b2` spanning that lattice and
    /// `coordinates` are the vertices written in that basis.
    pub fn restrict_to_vertex_lattice(&self) -> (RationalPoint, RationalPoint, Vec<LatticePoint>) {
        use num_bigint::BigInt;
        let l = self.vertices.iter().fold(BigInt::from(1), |acc, v| num_integer::lcm(acc, v.denominator()));
        let lr = Rational::from_integer(l.clone());
        let scaled: Vec<(BigInt, BigInt)> =
            self.vertices.iter().map(|v| ((&v.x * &lr).to_integer(), (&v.y * &lr).to_integer())).collect();
        let basis = integer_column_basis(&scaled);
        let (b1, b2) = basis;
        let dt = &b1.0 * &b2.1 - &b1.1 * &b2.0;
        let coords = scaled
            .iter()
            .map(|(x, y)| {
                // Solve [b1 b2] (c1, c2) = (x, y) by Cramer's rule.
                let c1 = (x * &b2.1 - y * &b2.0) / &dt;
                let c2 = (&b1.0 * y - &b1.1 * x) / &dt;
                LatticePoint::new(
                    i64::try_from(&c1).expect("coordinate range"),
                    i64::try_from(&c2).expect("coordinate range"),
                )
            })
            .collect();
        let to_r =
            |p: (BigInt, BigInt)| RationalPoint::new(Rational::new(p.0, l.clone()), Rational::new(p.1, l.clone()));
        (to_r(b1), to_r(b2), coords)
    }
}

/// A basis (two columns) of the lattice generated by integer vectors of rank 2,
/// via column-style Hermite reduction. The basis is positively oriented.
pub(crate) fn integer_column_basis(
    vectors: &[(num_bigint::BigInt, num_bigint::BigInt)],
) -> ((num_bigint::BigInt, num_bigint::BigInt), (num_bigint::BigInt, num_bigint::BigInt)) {
    use num_bigint::BigInt;
    // Lattice generated by columns: {(x, y)}. Reduce on the second coordinate
    // first: gcd of y's gives one generator, the remaining x's with y = 0
    // give the other.
    let mut cols: Vec<(BigInt, BigInt)> = vectors.to_vec();
    let mut pivot: Option<(BigInt, BigInt)> = None;
    let mut rest: Vec<(BigInt, BigInt)> = Vec::new();
    for c in cols.drain(..) {
        match pivot.take() {
            None => {
                if c.1.is_zero() {
                    rest.push(c);
                } else {
                    pivot = Some(c);
                }
            }
            Some(p) => {
                if c.1.is_zero() {
                    rest.push(c);
                    pivot = Some(p);
                } else {
                    let e = p.1.extended_gcd(&c.1);
                    let g = e.gcd.clone();
                    let new_p = (&e.x * &p.0 + &e.y * &c.0, g.clone());
                    // The complementary combination has zero second coordinate.
                    let k = (&c.1 / &g) * &p.0 - (&p.1 / &g) * &c.0;
                    rest.push((k, BigInt::zero()));
                    pivot = Some(new_p);
                }
            }
        }
    }
    let mut pivot = pivot.expect("rank 2");
    let gx = rest.iter().fold(BigInt::zero(), |acc, c| acc.gcd(&c.0));
    assert!(!gx.is_zero(), "rank 2");
    if pivot.1.is_negative() {
        pivot = (-pivot.0, -pivot.1);
    }
    pivot.0 = pivot.0.mod_floor(&gx);
    ((gx, BigInt::zero()), pivot)
}

impl serde::Serialize for RationalPolygon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for RationalPolygon {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pts = Vec::<RationalPoint>::deserialize(d)?;
        RationalPolygon::new(pts).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for RationalPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{},{}]", format_rational(&v.x), format_rational(&v.y))?;
        }
        write!(f, "]")
    }
}

impl FromStr for RationalPolygon {
    type Err = FanoError;
    fn from_str(s: &str) -> Result<Self> {
        let pts = split_pairs(s)?
            .into_iter()
            .map(|(a, b)| {
                let x = parse_rational(&a).ok_or_else(|| FanoError::Parse(format!("bad rational {a:?}")))?;
                let y = parse_rational(&b).ok_or_else(|| FanoError::Parse(format!("bad rational {b:?}")))?;
                Ok(RationalPoint::new(x, y))
            })
            .collect::<Result<Vec<_>>>()?;
        RationalPolygon::new(pts)
    }
}
