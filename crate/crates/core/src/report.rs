//! A one-stop summary of a polygon.

use serde::{Deserialize, Serialize};

use crate::barycentric::{type_bk, StrictType};
use crate::edges::{directed_sc, edge_table, DirectedSC, EdgeRow};
use crate::mutation::is_minimal;
use crate::polygon::LatticePolygon;
use crate::rational::RationalPoint;
use crate::symmetry::{
    automorphism_group, dual_barycentre, is_3_symmetric, is_centrally_symmetric, is_ke, is_symmetric, lattice_index,
    weight_matrix, weights, WeightMatrix,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BkSummary {
    pub strict_type: StrictType,
    pub symmetric_certificate_at: Option<usize>,
}

/// Fields that need the origin in the interior are `None` for non-Fano
/// input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub polygon: LatticePolygon,
    pub fano: bool,
    pub symmetric: bool,
    pub centrally_symmetric: bool,
    pub three_symmetric: bool,
    pub ke: bool,
    pub minimal: Option<bool>,
    pub aut_order: usize,
    pub index: i64,
    pub normalized_volume: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight_matrix: Option<WeightMatrix>,
    pub dual_barycentre: Option<RationalPoint>,
    pub directed_sc: Option<DirectedSC>,
    pub edge_table: Option<Vec<EdgeRow>>,
    pub bk: Option<BkSummary>,
}

pub fn analyze(p: &LatticePolygon, bk_cap: usize) -> AnalysisReport {
    let fano = p.is_fano();
    let m = p.vertex_count();
    AnalysisReport {
        polygon: p.clone(),
        fano,
        symmetric: is_symmetric(p),
        centrally_symmetric: is_centrally_symmetric(p),
        three_symmetric: is_3_symmetric(p),
        ke: is_ke(p),
        minimal: fano.then(|| is_minimal(p)),
        aut_order: automorphism_group(p).order(),
        index: lattice_index(p),
        normalized_volume: p.normalized_volume().to_string(),
        weights: (m == 3).then(|| weights(p).ok()).flatten().map(|w| w.entries),
        weight_matrix: (m == 4).then(|| weight_matrix(p).ok()).flatten(),
        dual_barycentre: fano.then(|| dual_barycentre(p).ok()).flatten(),
        directed_sc: fano.then(|| directed_sc(p)),
        edge_table: fano.then(|| edge_table(p)),
        bk: fano
            .then(|| type_bk(p, bk_cap).ok())
            .flatten()
            .map(|r| BkSummary { strict_type: r.strict_type, symmetric_certificate_at: r.symmetric_certificate_at }),
    }
}
