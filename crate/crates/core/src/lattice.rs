//! Integer lattice primitives: points of `N`, dual vectors in `M`, unimodular
//! maps and the row-style Hermite normal form of `2 x m` integer matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// A point of the lattice `N = Z^2`. Serialized as `[x, y]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

/// An element of the dual lattice `M = Hom(N, Z)`. Serialized as `[x, y]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct DualVector {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// `gcd(|x|, |y|)`; zero only for the origin.
    pub fn content(&self) -> i64 {
        self.x.gcd(&self.y)
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    /// The primitive vector on the same ray. Panics on the origin.
    pub fn primitive(&self) -> LatticePoint {
        let g = self.content();
        assert!(g != 0, "the origin has no primitive representative");
        LatticePoint::new(self.x / g, self.y / g)
    }

    pub fn is_origin(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn scale(&self, k: i64) -> LatticePoint {
        LatticePoint::new(self.x * k, self.y * k)
    }
}

impl DualVector {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// The natural pairing `u(v)`.
    pub fn pair(&self, v: LatticePoint) -> i128 {
        self.x as i128 * v.x as i128 + self.y as i128 * v.y as i128
    }

    pub fn content(&self) -> i64 {
        self.x.gcd(&self.y)
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    /// A primitive direction `d` with `self(d) = 0`, oriented so that
    /// `det(p, d) = 1` for any `p` with `self(p) = 1`.
    pub fn kernel_direction(&self) -> LatticePoint {
        LatticePoint::new(-self.y, self.x)
    }

    /// Some lattice point `p` with `self(p) = 1`. Requires a primitive form.
    pub fn unit_preimage(&self) -> LatticePoint {
        let e = i64::extended_gcd(&self.x, &self.y);
        debug_assert_eq!(e.gcd.abs(), 1);
        let s = e.gcd.signum();
        LatticePoint::new(e.x * s, e.y * s)
    }
}

impl From<[i64; 2]> for LatticePoint {
    fn from([x, y]: [i64; 2]) -> Self {
        LatticePoint::new(x, y)
    }
}

impl From<LatticePoint> for [i64; 2] {
    fn from(p: LatticePoint) -> Self {
        [p.x, p.y]
    }
}

impl From<[i64; 2]> for DualVector {
    fn from([x, y]: [i64; 2]) -> Self {
        DualVector::new(x, y)
    }
}

impl From<DualVector> for [i64; 2] {
    fn from(u: DualVector) -> Self {
        [u.x, u.y]
    }
}

impl Neg for DualVector {
    type Output = DualVector;
    fn neg(self) -> DualVector {
        DualVector::new(-self.x, -self.y)
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint::new(-self.x, -self.y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.x, self.y)
    }
}

impl fmt::Display for DualVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.x, self.y)
    }
}

/// `det(a, b)` with `a`, `b` as columns.
pub fn det(a: LatticePoint, b: LatticePoint) -> i128 {
    a.x as i128 * b.y as i128 - a.y as i128 * b.x as i128
}

/// A 2x2 integer matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mat2(pub [[i64; 2]; 2]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[1, 0], [0, 1]]);
    pub const NEG_IDENTITY: Mat2 = Mat2([[-1, 0], [0, -1]]);

    pub fn det(&self) -> i128 {
        let m = &self.0;
        m[0][0] as i128 * m[1][1] as i128 - m[0][1] as i128 * m[1][0] as i128
    }

    /// Matrix with the given columns.
    pub fn from_columns(a: LatticePoint, b: LatticePoint) -> Mat2 {
        Mat2([[a.x, b.x], [a.y, b.y]])
    }

    pub fn apply(&self, v: LatticePoint) -> LatticePoint {
        let m = &self.0;
        LatticePoint::new(m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y)
    }

    /// Dual action `u -> u . self^{-1}` for unimodular `self`, so that
    /// `(dual_apply u)(self v) = u(v)`.
    pub fn dual_apply(&self, u: DualVector) -> DualVector {
        let inv = self.inverse_unimodular().expect("dual action needs a unimodular map");
        let m = &inv.0;
        DualVector::new(u.x * m[0][0] + u.y * m[1][0], u.x * m[0][1] + u.y * m[1][1])
    }

    pub fn inverse_unimodular(&self) -> Option<Mat2> {
        let d = self.det();
        if d != 1 && d != -1 {
            return None;
        }
        let d = d as i64;
        let m = &self.0;
        Some(Mat2([[m[1][1] * d, -m[0][1] * d], [-m[1][0] * d, m[0][0] * d]]))
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        let a = &self.0;
        let b = &o.0;
        let mut c = [[0i64; 2]; 2];
        for (i, row) in c.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Mat2(c)
    }
}

/// An element of `GL_2(Z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Mat2", into = "Mat2")]
pub struct UnimodularMap(Mat2);

impl UnimodularMap {
    pub const IDENTITY: UnimodularMap = UnimodularMap(Mat2::IDENTITY);

    pub fn new(m: Mat2) -> Option<Self> {
        matches!(m.det(), 1 | -1).then_some(UnimodularMap(m))
    }

    pub fn from_rows(rows: [[i64; 2]; 2]) -> Option<Self> {
        Self::new(Mat2(rows))
    }

    pub fn matrix(&self) -> Mat2 {
        self.0
    }

    pub fn det(&self) -> i64 {
        self.0.det() as i64
    }

    pub fn apply(&self, v: LatticePoint) -> LatticePoint {
        self.0.apply(v)
    }

    pub fn dual_apply(&self, u: DualVector) -> DualVector {
        self.0.dual_apply(u)
    }

    pub fn inverse(&self) -> UnimodularMap {
        UnimodularMap(self.0.inverse_unimodular().expect("unimodular"))
    }

    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        UnimodularMap(self.0 * other.0)
    }

    /// Smallest `n >= 1` with `self^n = I`, if at most 12.
    pub fn order(&self) -> Option<u32> {
        let mut acc = *self;
        for n in 1..=12 {
            if acc == Self::IDENTITY {
                return Some(n);
            }
            acc = acc.compose(self);
        }
        None
    }
}

impl TryFrom<Mat2> for UnimodularMap {
    type Error = String;
    fn try_from(m: Mat2) -> Result<Self, String> {
        UnimodularMap::new(m).ok_or_else(|| format!("determinant {} is not +-1", m.det()))
    }
}

impl From<UnimodularMap> for Mat2 {
    fn from(u: UnimodularMap) -> Mat2 {
        u.0
    }
}

/// Result of reducing a rank-2 `2 x m` matrix `A` by row operations: the
/// echelon form `H = U A` together with `det U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowHnf {
    pub rows: [Vec<i64>; 2],
    /// Pivot columns of the two rows.
    pub pivots: (usize, usize),
    pub transform_det: i64,
}

/// Which group the row operations are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    /// `GL_2(Z)`: pivots positive, the form is unique on `GL_2(Z)`-orbits.
    #[serde(rename = "GL")]
    Gl,
    /// `SL_2(Z)`: the second pivot keeps the sign forced by `det U = 1`.
    #[serde(rename = "SL")]
    Sl,
}

/// Row-style Hermite normal form of a `2 x m` integer matrix of rank 2, given
/// as its rows. Returns `None` when the rank is below 2.
///
/// For `Orientation::Gl` both pivots are positive and the entry of the first
/// row above the second pivot lies in `[0, p2)`. For `Orientation::Sl` the
/// same reduction is carried out, then the second row is negated when the
/// accumulated transform has determinant `-1`; the result is the unique
/// representative of the `SL_2(Z)`-orbit.
pub fn row_hnf(top: &[i64], bottom: &[i64], orientation: Orientation) -> Option<RowHnf> {
    let m = top.len();
    assert_eq!(m, bottom.len());
    let mut r0: Vec<i128> = top.iter().map(|&v| v as i128).collect();
    let mut r1: Vec<i128> = bottom.iter().map(|&v| v as i128).collect();
    let mut det_u: i64 = 1;

    let p1 = (0..m).find(|&j| r0[j] != 0 || r1[j] != 0)?;
    let (a, b) = (r0[p1], r1[p1]);
    let e = i128::extended_gcd(&a, &b);
    let (g, x, y) = if e.gcd < 0 { (-e.gcd, -e.x, -e.y) } else { (e.gcd, e.x, e.y) };
    // [[x, y], [-b/g, a/g]] has determinant (xa + yb)/g = 1.
    let (bg, ag) = (b / g, a / g);
    for j in 0..m {
        let (s, t) = (r0[j], r1[j]);
        r0[j] = x * s + y * t;
        r1[j] = -bg * s + ag * t;
    }
    debug_assert_eq!(r1[p1], 0);

    let p2 = (p1 + 1..m).find(|&j| r1[j] != 0)?;
    if r1[p2] < 0 {
        r1.iter_mut().for_each(|v| *v = -*v);
        det_u = -det_u;
    }
    let piv = r1[p2];
    let q = Integer::div_floor(&r0[p2], &piv);
    for j in 0..m {
        r0[j] -= q * r1[j];
    }
    if orientation == Orientation::Sl && det_u == -1 {
        r1.iter_mut().for_each(|v| *v = -*v);
        det_u = 1;
    }
    let narrow = |v: Vec<i128>| -> Vec<i64> {
        v.into_iter().map(|x| i64::try_from(x).expect("Hermite normal form entry exceeds i64")).collect()
    };
    Some(RowHnf { rows: [narrow(r0), narrow(r1)], pivots: (p1, p2), transform_det: det_u })
}

/// `a^{-1} mod r` in `[0, r)`, for `gcd(a, r) = 1`. Returns 0 when `r = 1`.
pub fn mod_inverse(a: i64, r: i64) -> Option<i64> {
    if r == 1 {
        return Some(0);
    }
    let e = i64::extended_gcd(&a.rem_euclid(r), &r);
    (e.gcd == 1).then(|| e.x.rem_euclid(r))
}
