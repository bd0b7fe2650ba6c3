//! Vertex-degree-based topological indices.
//!
//! Every index here is a sum over edges `uv` of a term in the endpoint
//! degrees `d_u`, `d_v`:
//!
//! | tag    | edge term                          |
//! |--------|------------------------------------|
//! | BSO    | sqrt(1/d_u^2 + 1/d_v^2)            |
//! | SO     | sqrt(d_u^2 + d_v^2)                |
//! | R      | 1 / sqrt(d_u d_v)                  |
//! | M2STAR | 1 / (d_u d_v)                      |
//! | H      | 2 / (d_u + d_v)                    |
//! | ID     | 1/d_u^2 + 1/d_v^2                  |
//! | SDD    | (d_u^2 + d_v^2) / (2 d_u d_v)      |
//! | ISI    | d_u d_v / (d_u + d_v)              |
//! | GA     | 2 sqrt(d_u d_v) / (d_u + d_v)      |
//! | F      | d_u^2 + d_v^2                      |
//!
//! The public entry points require a connected graph with minimum degree at
//! least 1; terms accumulate in stored-edge order, so results are
//! deterministic for a given construction order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{degree_summary, EdgeTypeCounts, Graph};

/// Domain violations for index evaluation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum IndexError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has a vertex of degree zero")]
    ZeroDegree,
}

/// The ten supported index kinds, in canonical output order.
/// Serializes as its stable tag (`"BSO"`, `"SO"`, ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexKind {
    Bso,
    Sombor,
    Randic,
    ModifiedSecondZagreb,
    Harmonic,
    InverseDegree,
    SymmetricDivisionDeg,
    InverseSumIndeg,
    GeometricArithmetic,
    Forgotten,
}

impl IndexKind {
    pub const ALL: [IndexKind; 10] = [
        IndexKind::Bso,
        IndexKind::Sombor,
        IndexKind::Randic,
        IndexKind::ModifiedSecondZagreb,
        IndexKind::Harmonic,
        IndexKind::InverseDegree,
        IndexKind::SymmetricDivisionDeg,
        IndexKind::InverseSumIndeg,
        IndexKind::GeometricArithmetic,
        IndexKind::Forgotten,
    ];

    /// Stable tag used in every serialized output.
    pub fn tag(self) -> &'static str {
        match self {
            IndexKind::Bso => "BSO",
            IndexKind::Sombor => "SO",
            IndexKind::Randic => "R",
            IndexKind::ModifiedSecondZagreb => "M2STAR",
            IndexKind::Harmonic => "H",
            IndexKind::InverseDegree => "ID",
            IndexKind::SymmetricDivisionDeg => "SDD",
            IndexKind::InverseSumIndeg => "ISI",
            IndexKind::GeometricArithmetic => "GA",
            IndexKind::Forgotten => "F",
        }
    }

    /// The summand for an edge with endpoint degrees `du`, `dv`.
    pub fn edge_term(self, du: f64, dv: f64) -> f64 {
        match self {
            IndexKind::Bso => (1.0 / (du * du) + 1.0 / (dv * dv)).sqrt(),
            IndexKind::Sombor => (du * du + dv * dv).sqrt(),
            IndexKind::Randic => 1.0 / (du * dv).sqrt(),
            IndexKind::ModifiedSecondZagreb => 1.0 / (du * dv),
            IndexKind::Harmonic => 2.0 / (du + dv),
            IndexKind::InverseDegree => 1.0 / (du * du) + 1.0 / (dv * dv),
            IndexKind::SymmetricDivisionDeg => (du * du + dv * dv) / (2.0 * du * dv),
            IndexKind::InverseSumIndeg => du * dv / (du + dv),
            IndexKind::GeometricArithmetic => 2.0 * (du * dv).sqrt() / (du + dv),
            IndexKind::Forgotten => du * du + dv * dv,
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for IndexKind {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

impl FromStr for IndexKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IndexKind::ALL
            .iter()
            .copied()
            .find(|k| k.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown index kind {s:?} (expected one of BSO, SO, R, M2STAR, H, ID, SDD, ISI, GA, F)"))
    }
}

/// A computed index value together with its kind.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IndexValue {
    pub kind: IndexKind,
    pub value: f64,
}

fn require_domain(g: &Graph) -> Result<(), IndexError> {
    let s = degree_summary(g);
    if !s.is_connected {
        return Err(IndexError::Disconnected);
    }
    if s.min_degree == 0 {
        return Err(IndexError::ZeroDegree);
    }
    Ok(())
}

/// Edge sum without domain checks. Callers guarantee minimum degree >= 1
/// (vertices of degree zero never contribute, but the identities the
/// callers rely on assume none exist).
pub(crate) fn edge_sum_unchecked(g: &Graph, kind: IndexKind) -> f64 {
    g.edges()
        .iter()
        .map(|&(u, v)| kind.edge_term(f64::from(g.degree(u)), f64::from(g.degree(v))))
        .sum()
}

/// The first Banhatti-Sombor index: sum over edges of
/// `sqrt(1/d_u^2 + 1/d_v^2)`.
pub fn bso(g: &Graph) -> Result<f64, IndexError> {
    require_domain(g)?;
    Ok(edge_sum_unchecked(g, IndexKind::Bso))
}

/// The Sombor index: sum over edges of `sqrt(d_u^2 + d_v^2)`.
pub fn sombor(g: &Graph) -> Result<f64, IndexError> {
    require_domain(g)?;
    Ok(edge_sum_unchecked(g, IndexKind::Sombor))
}

/// Any of the ten indices, selected by kind.
pub fn classical_index(g: &Graph, kind: IndexKind) -> Result<IndexValue, IndexError> {
    require_domain(g)?;
    Ok(IndexValue {
        kind,
        value: edge_sum_unchecked(g, kind),
    })
}

/// All ten indices in canonical order, sharing one domain check.
pub fn all_indices(g: &Graph) -> Result<[IndexValue; 10], IndexError> {
    require_domain(g)?;
    Ok(IndexKind::ALL.map(|kind| IndexValue {
        kind,
        value: edge_sum_unchecked(g, kind),
    }))
}

/// The BSO index recomputed from edge-type counts:
/// `sum over degree pairs i <= j of m_{i,j} * sqrt(1/i^2 + 1/j^2)`.
///
/// Agrees with [`bso`] to within summation rounding; the cross-check is a
/// tested invariant.
pub fn bso_from_edge_types(counts: &EdgeTypeCounts) -> f64 {
    counts
        .edge_types()
        .map(|((i, j), c)| c as f64 * IndexKind::Bso.edge_term(f64::from(i), f64::from(j)))
        .sum()
}
