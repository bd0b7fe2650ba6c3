//! Simple undirected graphs and the degree bookkeeping shared by every
//! index and bound computation.
//!
//! Graphs are immutable after construction. Vertices are `0..n`, edges are
//! stored as normalized `(min, max)` pairs in first-insertion order (index
//! values are accumulated in that order, so results are reproducible), and
//! the structural predicates are computed in one traversal by
//! [`degree_summary`].

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Errors from graph construction and the connectivity-requiring predicates.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: u32, n: usize },
    #[error("graph is not connected")]
    Disconnected,
}

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    degrees: Vec<u32>,
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge iterator.
    ///
    /// Edge endpoints are normalized to `(min, max)` and duplicates are
    /// collapsed (first occurrence kept). Self-loops and out-of-range
    /// endpoints are rejected.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        let mut degrees = vec![0u32; n];
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for v in [a, b] {
                if v as usize >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            let e = (a.min(b), a.max(b));
            if seen.insert(e) {
                list.push(e);
                degrees[e.0 as usize] += 1;
                degrees[e.1 as usize] += 1;
                adj[e.0 as usize].push(e.1);
                adj[e.1 as usize].push(e.0);
            }
        }
        Ok(Graph {
            n,
            edges: list,
            degrees,
            adj,
        })
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as normalized `(min, max)` pairs in insertion order.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn degree(&self, v: u32) -> u32 {
        self.degrees[v as usize]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].contains(&v)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.m(),
            self.edges
        )
    }
}

/// Degree extremes and structural predicates, all from one traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeSummary {
    pub n: usize,
    pub m: usize,
    pub max_degree: u32,
    pub min_degree: u32,
    pub is_connected: bool,
    pub is_bipartite: bool,
    pub is_regular: bool,
    /// Every edge joins a vertex of degree `max_degree` to one of degree
    /// `min_degree`, with `max_degree != min_degree`, and the graph is
    /// bipartite. Mutually exclusive with `is_regular`.
    pub is_semiregular_bipartite: bool,
}

/// Computes the [`DegreeSummary`] of `g`.
///
/// Connectivity and bipartiteness come from a single BFS 2-coloring over all
/// components; the remaining flags are degree comparisons.
pub fn degree_summary(g: &Graph) -> DegreeSummary {
    let n = g.n();
    let dmax = g.max_degree();
    let dmin = g.min_degree();

    // BFS over every component, 2-coloring as we go.
    let mut color = vec![u8::MAX; n];
    let mut bipartite = true;
    let mut components = 0usize;
    let mut queue = std::collections::VecDeque::new();
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        components += 1;
        color[start] = 0;
        queue.push_back(start as u32);
        while let Some(v) = queue.pop_front() {
            let cv = color[v as usize];
            for &w in g.neighbors(v) {
                if color[w as usize] == u8::MAX {
                    color[w as usize] = 1 - cv;
                    queue.push_back(w);
                } else if color[w as usize] == cv {
                    bipartite = false;
                }
            }
        }
    }

    let semiregular = dmax != dmin
        && bipartite
        && g.edges().iter().all(|&(u, v)| {
            let (a, b) = (g.degree(u).min(g.degree(v)), g.degree(u).max(g.degree(v)));
            (a, b) == (dmin, dmax)
        });

    DegreeSummary {
        n,
        m: g.m(),
        max_degree: dmax,
        min_degree: dmin,
        is_connected: components == 1,
        is_bipartite: bipartite,
        is_regular: dmax == dmin,
        is_semiregular_bipartite: semiregular,
    }
}

/// Whether every edge of the connected graph `g` joins a maximum-degree
/// vertex to a minimum-degree vertex with distinct extremes (and `g` is
/// bipartite, which that edge pattern forces).
pub fn is_semiregular_bipartite(g: &Graph) -> Result<bool, GraphError> {
    let summary = degree_summary(g);
    if !summary.is_connected {
        return Err(GraphError::Disconnected);
    }
    Ok(summary.is_semiregular_bipartite)
}

/// The complement graph on the same vertex set: `{u,v}` is an edge iff it is
/// not one in `g`. Edges are emitted in lexicographic order.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let present: HashSet<(u32, u32)> = g.edges().iter().copied().collect();
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if !present.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("complement of a valid graph is valid")
}

/// Degree histogram and edge-type counts.
///
/// `n_count(i)` is the number of vertices of degree `i` (degree 0 included,
/// so the counts always total `n`); `m_count(i, j)` is the number of edges
/// whose endpoint degrees are `{i, j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeTypeCounts {
    vertex_counts: Vec<u64>,
    edge_counts: BTreeMap<(u32, u32), u64>,
}

impl EdgeTypeCounts {
    /// Largest degree present (0 for an edgeless graph).
    pub fn max_degree(&self) -> u32 {
        self.vertex_counts.len() as u32 - 1
    }

    /// Number of vertices of degree `i`.
    pub fn n_count(&self, i: u32) -> u64 {
        self.vertex_counts.get(i as usize).copied().unwrap_or(0)
    }

    /// Number of edges whose endpoint degrees are `{i, j}` (order ignored).
    pub fn m_count(&self, i: u32, j: u32) -> u64 {
        let key = (i.min(j), i.max(j));
        self.edge_counts.get(&key).copied().unwrap_or(0)
    }

    /// Nonzero edge types `((i, j), count)` with `i <= j`, ascending.
    pub fn edge_types(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        self.edge_counts.iter().map(|(&k, &v)| (k, v))
    }

    /// Nonzero degree counts `(i, n_i)`, ascending by degree.
    pub fn degree_counts(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.vertex_counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i as u32, c))
    }
}

/// Tallies the degree histogram `n_i` and edge-type counts `m_{i,j}` of `g`.
pub fn edge_type_counts(g: &Graph) -> EdgeTypeCounts {
    let dmax = g.max_degree() as usize;
    let mut vertex_counts = vec![0u64; dmax + 1];
    for &d in g.degrees() {
        vertex_counts[d as usize] += 1;
    }
    let mut edge_counts = BTreeMap::new();
    for &(u, v) in g.edges() {
        let (a, b) = (g.degree(u), g.degree(v));
        let key = (a.min(b), a.max(b));
        *edge_counts.entry(key).or_insert(0u64) += 1;
    }
    EdgeTypeCounts {
        vertex_counts,
        edge_counts,
    }
}
