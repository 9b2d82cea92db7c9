//! Lattice point counts of dilations of the dual polygon.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::edges::{directed_sc, edge_metrics, EdgeRef};
use crate::error::{FanoError, Result};
use crate::polygon::LatticePolygon;
use crate::symmetry::{is_3_symmetric, is_centrally_symmetric};

/// `counts[k] = |k P* ∩ M|` for `k = 0..=K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualDilationSeries {
    #[serde(rename = "K")]
    pub k_max: usize,
    pub counts: Vec<u64>,
}

/// Number of `u` in `M` with `u(v) >= -k` for every vertex `v`.
pub fn dual_dilation_count(p: &LatticePolygon, k: i64) -> Result<u64> {
    let dual = p.dual()?;
    let kr = crate::rational::int(k);
    let xs: Vec<i64> = dual
        .vertices()
        .iter()
        .map(|v| i64::try_from((&v.x * &kr).floor().to_integer()).expect("coordinate range"))
        .collect();
    let (xmin, xmax) = (*xs.iter().min().unwrap(), xs.iter().max().unwrap() + 1);
    let k = k as i128;
    let mut total = 0u64;
    for ux in xmin..=xmax {
        let ux = ux as i128;
        let mut lo = i128::MIN;
        let mut hi = i128::MAX;
        let mut feasible = true;
        for v in p.vertices() {
            // v.x ux + v.y uy >= -k
            let (vx, vy) = (v.x as i128, v.y as i128);
            let rhs = -k - vx * ux;
            match vy.signum() {
                1 => lo = lo.max(Integer::div_ceil(&rhs, &vy)),
                -1 => hi = hi.min(Integer::div_floor(&rhs, &vy)),
                _ => feasible &= rhs <= 0,
            }
        }
        if feasible && lo <= hi {
            total += (hi - lo + 1) as u64;
        }
    }
    Ok(total)
}

pub fn dual_dilation_counts(p: &LatticePolygon, k_max: usize) -> Result<DualDilationSeries> {
    let counts = (0..=k_max as i64).map(|k| dual_dilation_count(p, k)).collect::<Result<Vec<_>>>()?;
    Ok(DualDilationSeries { k_max, counts })
}

/// Long-edge heights read off the jumps of the dual dilation series, for a
/// centrally symmetric or 3-symmetric polygon with non-empty basket. The
/// result is checked against the heights of the long edges themselves.
pub fn heights_from_series(p: &LatticePolygon) -> Result<Vec<i64>> {
    let na = |msg: &str| FanoError::NotApplicable(msg.to_string());
    if !p.is_fano() {
        return Err(na("polygon is not Fano"));
    }
    if directed_sc(p).basket.is_empty() {
        return Err(na("the basket is empty"));
    }
    // Minimal long-edge height per edge direction up to sign.
    let mut long: Vec<((i64, i64), i64)> = Vec::new();
    for i in 0..p.vertex_count() {
        let m = edge_metrics(EdgeRef::new(p, i));
        if !m.is_long() {
            continue;
        }
        let n = m.inner_normal;
        let key = if (n.x, n.y) > (0, 0) { (n.x, n.y) } else { (-n.x, -n.y) };
        match long.iter_mut().find(|(k, _)| *k == key) {
            Some(e) => e.1 = e.1.min(m.height),
            None => long.push((key, m.height)),
        }
    }
    let mut heights: Vec<i64> = long.iter().map(|e| e.1).collect();
    heights.sort();
    let first_reaching = |counts: &[u64], target: u64| counts.iter().position(|&c| c >= target).map(|k| k as i64);

    if is_centrally_symmetric(p) {
        if heights.len() < 2 {
            return Err(na("needs two non-parallel long edges"));
        }
        let series = dual_dilation_counts(p, heights[1] as usize)?;
        let c = &series.counts;
        let h1 = first_reaching(c, 2).ok_or_else(|| na("series has no first jump"))?;
        let h2 = first_reaching(c, 4).ok_or_else(|| na("series has no second jump"))?;
        let expect_first = if h1 == h2 { 5 } else { 3 };
        if c[h1 as usize] != expect_first || c[h2 as usize] != 5 || (h1, h2) != (heights[0], heights[1]) {
            return Err(na("series jumps disagree with the long-edge heights"));
        }
        Ok(vec![h1, h2])
    } else if is_3_symmetric(p) {
        let Some(&h) = heights.first() else { return Err(na("no long edge")) };
        let series = dual_dilation_counts(p, h as usize)?;
        let c = &series.counts;
        let j = first_reaching(c, 2).ok_or_else(|| na("series has no jump"))?;
        if j != h || c[j as usize] != 4 {
            return Err(na("series jump disagrees with the long-edge height"));
        }
        Ok(vec![h])
    } else {
        Err(na("polygon is neither centrally symmetric nor 3-symmetric"))
    }
}
