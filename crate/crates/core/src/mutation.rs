//! Combinatorial mutation: graded slices, factors, remainders, single
//! mutations, minimality and capped exploration of mutation classes.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::edges::{directed_sc, edge_metrics, DirectedSC, EdgeRef};
use crate::error::{FanoError, Result};
use crate::lattice::{det, DualVector, LatticePoint, Orientation};
use crate::polygon::LatticePolygon;
use crate::rational::Rational;

/// Grading `w`, factor `F = conv{0, k d}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MutationSpec {
    pub w: DualVector,
    pub factor_direction: LatticePoint,
    pub factor_multiplicity: i64,
}

impl MutationSpec {
    pub fn new(w: DualVector, factor_direction: LatticePoint, factor_multiplicity: i64) -> Result<Self> {
        let spec = MutationSpec { w, factor_direction, factor_multiplicity };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.w.is_primitive() {
            return Err(FanoError::NotPrimitive(self.w.to_string()));
        }
        if !self.factor_direction.is_primitive() {
            return Err(FanoError::NotPrimitive(self.factor_direction.to_string()));
        }
        if self.w.pair(self.factor_direction) != 0 {
            return Err(FanoError::InvalidMutation("the factor direction must lie in the kernel of w".into()));
        }
        if self.factor_multiplicity < 1 {
            return Err(FanoError::InvalidMutation("factor multiplicity must be positive".into()));
        }
        Ok(())
    }

    /// The mutation data undoing this one.
    pub fn inverse(&self) -> MutationSpec {
        MutationSpec { w: -self.w, ..*self }
    }
}

/// Coordinates `x = h p0 + t d0` adapted to a grading, with `w(p0) = 1`,
/// `w(d0) = 0` and `det(p0, d0) = 1`.
#[derive(Debug, Clone, Copy)]
struct GradedFrame {
    p0: LatticePoint,
    d0: LatticePoint,
}

impl GradedFrame {
    fn new(w: DualVector) -> Self {
        GradedFrame { p0: w.unit_preimage(), d0: w.kernel_direction() }
    }

    fn t(&self, x: LatticePoint) -> i64 {
        det(self.p0, x) as i64
    }

    fn point(&self, h: i64, t: i64) -> LatticePoint {
        self.p0.scale(h) + self.d0.scale(t)
    }
}

/// The lattice slice `conv(P ∩ {w = h})` in frame coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedSlice {
    pub height: i64,
    /// Endpoints of the slice, or `None` when it holds no lattice point.
    pub points: Option<(LatticePoint, LatticePoint)>,
}

fn slice_bounds(p: &LatticePolygon, frame: &GradedFrame, h: i64) -> Option<(i64, i64)> {
    let mut lo = i128::MIN;
    let mut hi = i128::MAX;
    for i in 0..p.vertex_count() {
        let (n, c) = p.edge_inequality(i);
        let a = n.0 * frame.d0.x as i128 + n.1 * frame.d0.y as i128;
        let b = c - h as i128 * (n.0 * frame.p0.x as i128 + n.1 * frame.p0.y as i128);
        match a.signum() {
            1 => lo = lo.max(Integer::div_ceil(&b, &a)),
            -1 => hi = hi.min(Integer::div_floor(&b, &a)),
            _ => {
                if b > 0 {
                    return None;
                }
            }
        }
    }
    (lo <= hi).then_some((lo as i64, hi as i64))
}

/// Lattice slices of `P` at every height between `min w` and `max w`.
pub fn graded_slices(p: &LatticePolygon, w: DualVector) -> Vec<GradedSlice> {
    let frame = GradedFrame::new(w);
    let (hmin, hmax) = height_range(p, w);
    (hmin..=hmax)
        .map(|h| GradedSlice {
            height: h,
            points: slice_bounds(p, &frame, h).map(|(lo, hi)| (frame.point(h, lo), frame.point(h, hi))),
        })
        .collect()
}

/// `(min_P w, max_P w)`.
pub fn height_range(p: &LatticePolygon, w: DualVector) -> (i64, i64) {
    let hs = p.vertices().iter().map(|&v| w.pair(v) as i64);
    (hs.clone().min().unwrap(), hs.max().unwrap())
}

/// The admissible remainders at one negative height, in frame coordinates.
/// A remainder `[alpha, beta]` is admissible when
/// `V(P)_h ⊆ [alpha + f_lo, beta + f_hi] ⊆ [lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RemainderRange {
    pub height: i64,
    /// Lattice slice bounds, `None` if the slice is empty.
    pub slice: Option<(i64, i64)>,
    /// Extent of `|h| F` in frame coordinates.
    pub f_lo: i64,
    pub f_hi: i64,
    /// Extreme frame coordinates of the vertices at this height.
    pub vertices: Option<(i64, i64)>,
}

impl RemainderRange {
    pub fn admissible(&self, choice: Option<(i64, i64)>) -> bool {
        match (choice, self.slice) {
            (None, _) => self.vertices.is_none(),
            (Some(_), None) => false,
            (Some((alpha, beta)), Some((lo, hi))) => {
                let (s, e) = (alpha + self.f_lo, beta + self.f_hi);
                alpha <= beta && lo <= s && e <= hi && self.vertices.is_none_or(|(vmin, vmax)| s <= vmin && vmax <= e)
            }
        }
    }

    /// The largest admissible remainder, or the empty one if none exists.
    pub fn default_choice(&self) -> Option<(i64, i64)> {
        let (lo, hi) = self.slice?;
        let (alpha, beta) = (lo - self.f_lo, hi - self.f_hi);
        (alpha <= beta).then_some((alpha, beta))
    }

    /// Bounds `(alpha_min, alpha_max, beta_min, beta_max)` of admissible
    /// nonempty remainders (subject also to `alpha <= beta`).
    pub fn nonempty_bounds(&self) -> Option<(i64, i64, i64, i64)> {
        let (lo, hi) = self.slice?;
        let alpha_min = lo - self.f_lo;
        let beta_max = hi - self.f_hi;
        let (alpha_max, beta_min) = match self.vertices {
            Some((vmin, vmax)) => (vmin - self.f_lo, vmax - self.f_hi),
            None => (beta_max, alpha_min),
        };
        (alpha_min <= alpha_max.min(beta_max) && beta_min.max(alpha_min) <= beta_max)
            .then_some((alpha_min, alpha_max, beta_min, beta_max))
    }
}

struct Analysis {
    frame: GradedFrame,
    hmin: i64,
    hmax: i64,
    /// Extent of `F` itself in frame coordinates.
    f: (i64, i64),
}

fn analyse(p: &LatticePolygon, spec: &MutationSpec) -> Result<Analysis> {
    spec.validate()?;
    let frame = GradedFrame::new(spec.w);
    let k = spec.factor_multiplicity;
    let step = frame.t(spec.factor_direction) * k;
    let (hmin, hmax) = height_range(p, spec.w);
    Ok(Analysis { frame, hmin, hmax, f: (step.min(0), step.max(0)) })
}

/// Remainder ranges for every negative height of `P`.
pub fn remainder_ranges(p: &LatticePolygon, spec: &MutationSpec) -> Result<Vec<RemainderRange>> {
    let an = analyse(p, spec)?;
    let mut vert: BTreeMap<i64, (i64, i64)> = BTreeMap::new();
    for &v in p.vertices() {
        let h = spec.w.pair(v) as i64;
        let t = an.frame.t(v);
        vert.entry(h).and_modify(|e| *e = (e.0.min(t), e.1.max(t))).or_insert((t, t));
    }
    Ok((an.hmin..0)
        .map(|h| RemainderRange {
            height: h,
            slice: slice_bounds(p, &an.frame, h),
            f_lo: an.f.0 * -h,
            f_hi: an.f.1 * -h,
            vertices: vert.get(&h).copied(),
        })
        .collect())
}

pub fn factor_exists(p: &LatticePolygon, spec: &MutationSpec) -> Result<bool> {
    Ok(remainder_ranges(p, spec)?.iter().all(|r| r.admissible(r.default_choice())))
}

/// Mutation with the default (largest) remainders.
pub fn mutate(p: &LatticePolygon, spec: &MutationSpec) -> Result<LatticePolygon> {
    mutate_with(p, spec, |r| r.default_choice())
}

/// Mutation with caller-chosen remainders. `choose` receives each negative
/// height's range and returns a remainder in frame coordinates (or `None`
/// for the empty remainder).
pub fn mutate_with(
    p: &LatticePolygon,
    spec: &MutationSpec,
    mut choose: impl FnMut(&RemainderRange) -> Option<(i64, i64)>,
) -> Result<LatticePolygon> {
    let ranges = remainder_ranges(p, spec)?;
    if !ranges.iter().all(|r| r.admissible(r.default_choice())) {
        return Err(FanoError::NoFactor);
    }
    let an = analyse(p, spec)?;
    let mut points = Vec::new();
    for r in &ranges {
        let choice = choose(r);
        if !r.admissible(choice) {
            return Err(FanoError::InadmissibleRemainder(r.height));
        }
        if let Some((alpha, beta)) = choice {
            points.push(an.frame.point(r.height, alpha));
            points.push(an.frame.point(r.height, beta));
        }
    }
    for h in 0..=an.hmax {
        if let Some((lo, hi)) = slice_bounds(p, &an.frame, h) {
            points.push(an.frame.point(h, lo + h * an.f.0));
            points.push(an.frame.point(h, hi + h * an.f.1));
        }
    }
    LatticePolygon::conv(&points)
}

/// One mutation per long edge: grading by the inner normal, factor along the
/// edge direction with multiplicity one.
pub fn enumerate_mutations(p: &LatticePolygon) -> Vec<(MutationSpec, LatticePolygon)> {
    (0..p.vertex_count())
        .filter_map(|i| {
            let m = edge_metrics(EdgeRef::new(p, i));
            if !m.is_long() {
                return None;
            }
            let spec = MutationSpec { w: m.inner_normal, factor_direction: m.direction, factor_multiplicity: 1 };
            let q = mutate(p, &spec).expect("long edges always admit a factor");
            Some((spec, q))
        })
        .collect()
}

/// `|min u_E| <= max u_E` for every long edge `E`.
pub fn is_minimal(p: &LatticePolygon) -> bool {
    (0..p.vertex_count()).all(|i| {
        let m = edge_metrics(EdgeRef::new(p, i));
        if !m.is_long() {
            return true;
        }
        let (hmin, hmax) = height_range(p, m.inner_normal);
        -hmin <= hmax
    })
}

/// Exploration limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCaps {
    pub max_polygons: usize,
    pub max_boundary_points: i64,
}

impl Default for ClassCaps {
    fn default() -> Self {
        ClassCaps { max_polygons: 10_000, max_boundary_points: 200 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassNode {
    /// `GL_2(Z)` canonical vertex list.
    pub key: Vec<LatticePoint>,
    /// The polygon exactly as produced from its parent.
    pub polygon: LatticePolygon,
    pub parent: Option<usize>,
    pub spec: Option<MutationSpec>,
    pub depth: usize,
    pub directed_sc: DirectedSC,
    pub minimal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEdge {
    pub from: usize,
    pub to: usize,
    pub spec: MutationSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationClass {
    pub nodes: Vec<ClassNode>,
    pub edges: Vec<ClassEdge>,
    pub caps: ClassCaps,
    pub exhausted: bool,
}

impl MutationClass {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn find(&self, p: &LatticePolygon) -> Option<usize> {
        let key = p.canonical_key(Orientation::Gl);
        self.nodes.iter().position(|n| n.key == key)
    }

    /// Mutation specs leading from the root to node `i`.
    pub fn path_to(&self, mut i: usize) -> Vec<MutationSpec> {
        let mut path = Vec::new();
        while let (Some(parent), Some(spec)) = (self.nodes[i].parent, self.nodes[i].spec) {
            path.push(spec);
            i = parent;
        }
        path.reverse();
        path
    }

    /// Whether every stored polygon shares the root's directed content and
    /// dual volume.
    pub fn invariants_consistent(&self) -> bool {
        let Some(root) = self.nodes.first() else { return true };
        let vol = |p: &LatticePolygon| -> Option<Rational> { p.dual().ok().map(|d| d.normalized_volume()) };
        let v0 = vol(&root.polygon);
        self.nodes.iter().all(|n| n.directed_sc == root.directed_sc && vol(&n.polygon) == v0 && n.polygon.is_fano())
    }
}

/// Breadth-first closure under [`enumerate_mutations`], deduplicated by
/// `GL_2(Z)` canonical form. Each level is expanded in canonical-key order so
/// the first discoverer of a polygon (its recorded parent) is deterministic.
pub fn explore_class(p: &LatticePolygon, caps: ClassCaps) -> MutationClass {
    let mut index: BTreeMap<Vec<LatticePoint>, usize> = BTreeMap::new();
    let mut class = MutationClass { nodes: Vec::new(), edges: Vec::new(), caps, exhausted: true };
    let node = |poly: LatticePolygon, key, parent, spec, depth| ClassNode {
        key,
        directed_sc: directed_sc(&poly),
        minimal: is_minimal(&poly),
        polygon: poly,
        parent,
        spec,
        depth,
    };
    let root_key = p.canonical_key(Orientation::Gl);
    index.insert(root_key.clone(), 0);
    class.nodes.push(node(p.clone(), root_key, None, None, 0));
    if p.boundary_lattice_point_count() > caps.max_boundary_points || caps.max_polygons == 0 {
        class.exhausted = false;
        return class;
    }
    let mut frontier = vec![0usize];
    let mut depth = 0;
    'outer: while !frontier.is_empty() {
        depth += 1;
        frontier.sort_by(|&a, &b| class.nodes[a].key.cmp(&class.nodes[b].key));
        let mut next = Vec::new();
        for &i in &frontier {
            let current = class.nodes[i].polygon.clone();
            for (spec, q) in enumerate_mutations(&current) {
                if q.boundary_lattice_point_count() > caps.max_boundary_points {
                    class.exhausted = false;
                    continue;
                }
                let key = q.canonical_key(Orientation::Gl);
                let j = match index.get(&key) {
                    Some(&j) => j,
                    None => {
                        if class.nodes.len() >= caps.max_polygons {
                            class.exhausted = false;
                            break 'outer;
                        }
                        let j = class.nodes.len();
                        index.insert(key.clone(), j);
                        class.nodes.push(node(q, key, Some(i), Some(spec), depth));
                        next.push(j);
                        j
                    }
                };
                class.edges.push(ClassEdge { from: i, to: j, spec });
            }
        }
        frontier = next;
    }
    class
}

/// `(symmetric members, non-symmetric KE triangles)` of a class, counted up
/// to `GL_2(Z)`. A symmetric KE triangle counts once, as symmetric.
pub fn count_distinguished(class: &MutationClass) -> (usize, usize) {
    let (mut sym, mut ke_tri) = (0, 0);
    for n in &class.nodes {
        if crate::symmetry::is_symmetric(&n.polygon) {
            sym += 1;
        } else if n.polygon.vertex_count() == 3 && crate::symmetry::is_ke(&n.polygon) {
            ke_tri += 1;
        }
    }
    (sym, ke_tri)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[(i64, i64)]) -> LatticePolygon {
        LatticePolygon::from_coords(c).unwrap()
    }

    fn p2() -> LatticePolygon {
        poly(&[(1, 0), (0, 1), (-1, -1)])
    }

    #[test]
    fn spec_validation() {
        assert!(MutationSpec::new(DualVector::new(2, 0), LatticePoint::new(0, 1), 1).is_err());
        assert!(MutationSpec::new(DualVector::new(1, 0), LatticePoint::new(0, 2), 1).is_err());
        assert!(MutationSpec::new(DualVector::new(1, 0), LatticePoint::new(1, 1), 1).is_err());
        assert!(MutationSpec::new(DualVector::new(1, 0), LatticePoint::new(0, 1), 0).is_err());
        assert!(MutationSpec::new(DualVector::new(1, 0), LatticePoint::new(0, -1), 2).is_ok());
    }

    #[test]
    fn p2_worked_mutation() {
        let spec = MutationSpec::new(DualVector::new(-1, 2), LatticePoint::new(2, 1), 1).unwrap();
        assert!(factor_exists(&p2(), &spec).unwrap());
        let q = mutate(&p2(), &spec).unwrap();
        assert_eq!(q, poly(&[(-1, -1), (0, 1), (4, 3)]));
        assert_eq!(mutate(&q, &spec.inverse()).unwrap(), p2());
    }

    #[test]
    fn slices_of_p2() {
        let s = graded_slices(&p2(), DualVector::new(-1, 2));
        assert_eq!(s.len(), 4);
        assert_eq!(s[0].points, Some((LatticePoint::new(1, 0), LatticePoint::new(-1, -1))));
        assert_eq!(s[1].points, Some((LatticePoint::ORIGIN, LatticePoint::ORIGIN)));
        assert_eq!(s[2].points, None);
    }

    #[test]
    fn short_edges_have_no_factor() {
        let t = poly(&[(2, -3), (1, 5), (-1, -2)]);
        for i in 0..3 {
            let m = edge_metrics(EdgeRef::new(&t, i));
            let spec = MutationSpec::new(m.inner_normal, m.direction, 1).unwrap();
            assert!(!factor_exists(&t, &spec).unwrap());
            assert_eq!(mutate(&t, &spec), Err(FanoError::NoFactor));
        }
        assert!(enumerate_mutations(&t).is_empty());
    }

    #[test]
    fn inadmissible_remainder_rejected() {
        let spec = MutationSpec::new(DualVector::new(-1, 2), LatticePoint::new(2, 1), 1).unwrap();
        assert_eq!(mutate_with(&p2(), &spec, |_| None), Err(FanoError::InadmissibleRemainder(-1)));
    }

    #[test]
    fn p2_neighbours() {
        let target = poly(&[(-1, -1), (0, 1), (4, 3)]).canonical_key(Orientation::Gl);
        let muts = enumerate_mutations(&p2());
        assert_eq!(muts.len(), 3);
        for (_, q) in muts {
            assert_eq!(q.canonical_key(Orientation::Gl), target);
        }
    }

    #[test]
    fn minimality() {
        assert!(is_minimal(&p2()));
        assert!(!is_minimal(&poly(&[(-1, -1), (0, 1), (4, 3)])));
    }

    #[test]
    fn capped_p2_class() {
        let class = explore_class(&p2(), ClassCaps { max_polygons: 10, max_boundary_points: 60 });
        assert!(!class.exhausted);
        assert!(class.find(&poly(&[(-1, -1), (0, 1), (4, 3)])).is_some());
        assert!(class.invariants_consistent());
        for i in 0..class.len() {
            let mut q = class.nodes[0].polygon.clone();
            for spec in class.path_to(i) {
                q = mutate(&q, &spec).unwrap();
            }
            assert_eq!(q, class.nodes[i].polygon);
        }
    }
}
