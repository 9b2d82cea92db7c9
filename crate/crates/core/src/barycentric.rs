//! Barycentric transformation and iteration type.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{FanoError, Result};
use crate::polygon::LatticePolygon;
use crate::symmetry::is_symmetric;

/// Hull of the primitive vectors along `v_i + v_{i+1}`.
pub fn bary_transform(p: &LatticePolygon) -> Result<LatticePolygon> {
    let pts = (0..p.vertex_count())
        .map(|i| {
            let (a, b) = p.edge(i);
            let s = a + b;
            if s.is_origin() {
                Err(FanoError::DegenerateSum(i))
            } else {
                Ok(s.primitive())
            }
        })
        .collect::<Result<Vec<_>>>()?;
    LatticePolygon::conv(&pts)
}

/// Default iteration cap for [`type_bk`].
pub const DEFAULT_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrictType {
    /// `B^k(P)` is Fano and `B^{k+1}(P)` is not.
    Exact(usize),
    /// Every iterate up to the cap is Fano.
    AtLeast(usize),
}

impl fmt::Display for StrictType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrictType::Exact(k) => write!(f, "{k}"),
            StrictType::AtLeast(c) => write!(f, ">={c}"),
        }
    }
}

impl Serialize for StrictType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            StrictType::Exact(k) => s.serialize_u64(*k as u64),
            StrictType::AtLeast(c) => s.serialize_str(&format!(">={c}")),
        }
    }
}

impl<'de> Deserialize<'de> for StrictType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Number(n) => n
                .as_u64()
                .map(|k| StrictType::Exact(k as usize))
                .ok_or_else(|| serde::de::Error::custom("strict type must be a nonnegative integer")),
            serde_json::Value::String(s) => s
                .strip_prefix(">=")
                .and_then(|c| c.parse().ok())
                .map(StrictType::AtLeast)
                .ok_or_else(|| serde::de::Error::custom(format!("bad strict type {s:?}"))),
            other => Err(serde::de::Error::custom(format!("bad strict type {other}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BkReport {
    /// `P, B(P), B^2(P), ...`; all but possibly the last are Fano.
    pub iterates: Vec<LatticePolygon>,
    pub strict_type: StrictType,
    /// First iterate that is symmetric. From there on every iterate is Fano.
    pub symmetric_certificate_at: Option<usize>,
    /// Iteration stopped on a zero adjacent sum.
    #[serde(default)]
    pub degenerate_sum: bool,
}

/// Iterates [`bary_transform`] until an iterate fails to be Fano or `cap`
/// transforms have been applied.
pub fn type_bk(p: &LatticePolygon, cap: usize) -> Result<BkReport> {
    if !p.is_fano() {
        return Err(FanoError::NotApplicable("input polygon is not Fano".into()));
    }
    let mut iterates = vec![p.clone()];
    let mut certificate = is_symmetric(p).then_some(0);
    let mut degenerate_sum = false;
    let strict_type = loop {
        let k = iterates.len() - 1;
        if k >= cap {
            break StrictType::AtLeast(cap);
        }
        match bary_transform(&iterates[k]) {
            Err(_) => {
                degenerate_sum = true;
                break StrictType::Exact(k);
            }
            Ok(next) => {
                let fano = next.is_fano();
                if fano && certificate.is_none() && is_symmetric(&next) {
                    certificate = Some(k + 1);
                }
                iterates.push(next);
                if !fano {
                    break StrictType::Exact(k);
                }
            }
        }
    };
    Ok(BkReport { iterates, strict_type, symmetric_certificate_at: certificate, degenerate_sum })
}
