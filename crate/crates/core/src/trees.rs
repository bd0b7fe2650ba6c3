//! Exhaustive enumeration of non-isomorphic trees and extremal search.
//!
//! Trees are generated as canonical rooted level sequences: `seq[i]` is the
//! depth of the `i`-th vertex in a depth-first order whose sibling subtrees
//! appear in non-increasing lexicographic order of their sequence blocks.
//! The classic successor operation walks all canonical sequences of a given
//! length in decreasing lexicographic order; a center filter then keeps
//! exactly one rooted representative per *free* isomorphism class:
//!
//! * in a canonical sequence the first root subtree is a deepest one, so
//!   with `d1` the height and `d2` the maximum depth over the remaining
//!   subtrees, the root is a center iff `d2 >= d1 - 1`;
//! * `d2 == d1` means the root is the unique center (even diameter):
//!   accept;
//! * `d2 == d1 - 1` means the tree is bicentral with the other center at
//!   the first child: accept only if the current sequence is
//!   lexicographically at least the canonical sequence re-rooted there,
//!   so of the (at most) two rooted occurrences exactly one survives;
//! * `d2 < d1 - 1` means the root is not a center: reject.
//!
//! Starting from `[0, 1, ..., H, H, ..., H]` with `H = ceil((n-1)/2)` is
//! exhaustive because a center-rooted tree has height at most `H`.
//!
//! The chemical variant (maximum degree at most 4) prunes during
//! generation: at the first position whose placement forces a vertex
//! degree of 5, the successor is taken within that prefix, skipping every
//! sequence that shares it.

use serde::Serialize;
use thiserror::Error;

use crate::codec::to_graph6;
use crate::graph::Graph;
use crate::indices::{edge_sum_unchecked, IndexKind};

/// Largest supported tree order for enumeration.
pub const MAX_TREE_ORDER: usize = 18;

/// Relative tolerance used to collect all extremum-attaining trees.
const ATTAIN_TOL: f64 = 1e-9;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Errors from enumeration, closed forms, and proof-auxiliary functions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("tree order {n} outside supported range 1..={max}", max = MAX_TREE_ORDER)]
    OrderOutOfRange { n: usize },
    #[error("closed form for the path requires n >= 3, got {n}")]
    PathFormRange { n: usize },
    #[error("closed form for the star requires n >= 2, got {n}")]
    StarFormRange { n: usize },
    #[error(
        "the chemical-tree upper bound is certified only for n >= 5 with n - 2 divisible by 3, got {n}"
    )]
    ChemicalFormRange { n: usize },
    #[error("proof function domain violation: {0}")]
    ProofDomain(&'static str),
}

/// A family of trees to enumerate: all trees of order `n`, optionally
/// restricted to chemical trees (maximum degree at most 4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TreeFamily {
    pub n: usize,
    pub chemical: bool,
}

/// Deterministic stream of one tree per isomorphism class.
#[derive(Debug)]
pub struct TreeStream {
    seq: Vec<u32>,
    exhausted: bool,
    chemical: bool,
}

/// All non-isomorphic trees on `n` vertices, one representative each,
/// in a deterministic order. `1 <= n <= MAX_TREE_ORDER`.
pub fn enumerate_trees(n: usize) -> Result<TreeStream, TreeError> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(TreeError::OrderOutOfRange { n });
    }
    Ok(TreeStream {
        seq: start_sequence(n),
        exhausted: false,
        chemical: false,
    })
}

/// The subset of [`enumerate_trees`] with maximum degree at most 4, in the
/// same relative order, produced with prefix pruning.
pub fn enumerate_chemical_trees(n: usize) -> Result<TreeStream, TreeError> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(TreeError::OrderOutOfRange { n });
    }
    Ok(TreeStream {
        seq: start_sequence(n),
        exhausted: false,
        chemical: true,
    })
}

impl Iterator for TreeStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while !self.exhausted {
            if self.chemical {
                if let Some(v) = first_degree_five_position(&self.seq) {
                    if !advance(&mut self.seq, v) {
                        self.exhausted = true;
                    }
                    continue;
                }
            }
            let accepted =
                is_free_representative(&self.seq).then(|| graph_from_level_sequence(&self.seq));
            let last = self.seq.len() - 1;
            if !advance(&mut self.seq, last) {
                self.exhausted = true;
            }
            if let Some(g) = accepted {
                if self.chemical {
                    assert!(
                        g.max_degree() <= 4,
                        "chemical pruning admitted a large degree"
                    );
                }
                return Some(g);
            }
        }
        None
    }
}

/// Lexicographically greatest canonical sequence of height at most
/// `ceil((n-1)/2)`: `[0, 1, ..., H, H, ..., H]`.
fn start_sequence(n: usize) -> Vec<u32> {
    let h = n / 2;
    (0..n).map(|i| i.min(h) as u32).collect()
}

/// In-place successor restricted to changes at positions `<= pmax`:
/// decrement the last decrementable position `p <= pmax` and refill the
/// suffix with the lexicographically greatest canonical completion (copies
/// of the window between `p`'s parent and `p`). Returns false when no
/// canonical sequence below the current prefix remains.
fn advance(seq: &mut [u32], pmax: usize) -> bool {
    let Some(p) = (0..=pmax).rev().find(|&i| seq[i] >= 2) else {
        return false;
    };
    let q = (0..p)
        .rev()
        .find(|&i| seq[i] == seq[p] - 1)
        .expect("parent level exists");
    let w = p - q;
    for i in p..seq.len() {
        seq[i] = seq[i - w];
    }
    true
}

/// First position whose placement forces some vertex degree to 5, if any.
/// A non-root vertex reaching 4 children (or the root reaching 5) can
/// never drop back below degree 5 in any completion of the prefix.
fn first_degree_five_position(seq: &[u32]) -> Option<usize> {
    let n = seq.len();
    let mut children = vec![0u32; n];
    let mut current_at_level = vec![0usize; n + 1];
    for (i, &entry) in seq.iter().enumerate().skip(1) {
        let level = entry as usize;
        let parent = current_at_level[level - 1];
        children[parent] += 1;
        let limit = if parent == 0 { 5 } else { 4 };
        if children[parent] >= limit {
            return Some(i);
        }
        current_at_level[level] = i;
    }
    None
}

/// Whether this canonical rooted sequence is the chosen representative of
/// its free isomorphism class (see module docs).
fn is_free_representative(seq: &[u32]) -> bool {
    let n = seq.len();
    if n <= 2 {
        return true;
    }
    let k = (2..n).find(|&i| seq[i] == 1).unwrap_or(n);
    let d1 = *seq[1..k].iter().max().expect("first subtree is nonempty");
    let d2 = seq[k..].iter().max().copied().unwrap_or(0);
    if d2 == d1 {
        true
    } else if d2 + 1 == d1 {
        let adj = adjacency_from_level_sequence(seq);
        let rerooted = canonical_rooted_sequence(&adj, 1);
        seq >= rerooted.as_slice()
    } else {
        false
    }
}

/// Parent of position `i` is the most recent position at level `seq[i]-1`.
fn adjacency_from_level_sequence(seq: &[u32]) -> Vec<Vec<usize>> {
    let n = seq.len();
    let mut adj = vec![Vec::new(); n];
    let mut current_at_level = vec![0usize; n + 1];
    for i in 1..n {
        let level = seq[i] as usize;
        let parent = current_at_level[level - 1];
        adj[parent].push(i);
        adj[i].push(parent);
        current_at_level[level] = i;
    }
    adj
}

fn graph_from_level_sequence(seq: &[u32]) -> Graph {
    let n = seq.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut current_at_level = vec![0usize; n + 1];
    for (i, &entry) in seq.iter().enumerate().skip(1) {
        let level = entry as usize;
        let parent = current_at_level[level - 1];
        edges.push((parent as u32, i as u32));
        current_at_level[level] = i;
    }
    Graph::from_edges(n, edges).expect("level sequence encodes a valid tree")
}

/// Canonical level sequence of the tree `adj` rooted at `root`: every
/// node's child blocks are emitted in non-increasing lexicographic order.
fn canonical_rooted_sequence(adj: &[Vec<usize>], root: usize) -> Vec<u32> {
    fn block(adj: &[Vec<usize>], v: usize, parent: usize, level: u32, out: &mut Vec<u32>) {
        out.push(level);
        let mut child_blocks: Vec<Vec<u32>> = adj[v]
            .iter()
            .filter(|&&c| c != parent)
            .map(|&c| {
                let mut b = Vec::new();
                block(adj, c, v, level + 1, &mut b);
                b
            })
            .collect();
        child_blocks.sort_unstable_by(|a, b| b.cmp(a));
        for b in child_blocks {
            out.extend_from_slice(&b);
        }
    }
    let mut out = Vec::with_capacity(adj.len());
    block(adj, root, usize::MAX, 0, &mut out);
    out
}

/// Exhaustive extremal result for one index over one tree family.
#[derive(Debug, Clone)]
pub struct ExtremalResult {
    pub family: TreeFamily,
    pub index: IndexKind,
    pub min_value: f64,
    pub max_value: f64,
    /// Every tree attaining the minimum, to relative tolerance 1e-9.
    pub min_trees: Vec<Graph>,
    /// Every tree attaining the maximum, to relative tolerance 1e-9.
    pub max_trees: Vec<Graph>,
    pub closed_form_min: Option<f64>,
    pub closed_form_max: Option<f64>,
    pub tree_count: u64,
}

/// Serializable form of [`ExtremalResult`] with trees as graph6 strings.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalRecord {
    pub n: usize,
    pub chemical: bool,
    pub index: IndexKind,
    pub min_value: f64,
    pub max_value: f64,
    pub closed_form_min: Option<f64>,
    pub closed_form_max: Option<f64>,
    pub min_trees: Vec<String>,
    pub max_trees: Vec<String>,
    pub tree_count: u64,
}

impl ExtremalResult {
    pub fn record(&self) -> ExtremalRecord {
        ExtremalRecord {
            n: self.family.n,
            chemical: self.family.chemical,
            index: self.index,
            min_value: self.min_value,
            max_value: self.max_value,
            closed_form_min: self.closed_form_min,
            closed_form_max: self.closed_form_max,
            min_trees: self.min_trees.iter().map(to_graph6).collect(),
            max_trees: self.max_trees.iter().map(to_graph6).collect(),
            tree_count: self.tree_count,
        }
    }
}

/// Exhaustive minimum and maximum of `index` over the family, with every
/// attaining tree. For the BSO index the applicable closed forms are
/// attached: path and star values for free families with `n >= 3`, and the
/// certified chemical upper bound when the family is chemical and the
/// order is in the certified class.
pub fn extremal_search(family: TreeFamily, index: IndexKind) -> Result<ExtremalResult, TreeError> {
    let stream = || {
        if family.chemical {
            enumerate_chemical_trees(family.n)
        } else {
            enumerate_trees(family.n)
        }
    };

    let mut tree_count = 0u64;
    let mut min_value = f64::INFINITY;
    let mut max_value = f64::NEG_INFINITY;
    for t in stream()? {
        let v = edge_sum_unchecked(&t, index);
        tree_count += 1;
        min_value = min_value.min(v);
        max_value = max_value.max(v);
    }

    let mut min_trees = Vec::new();
    let mut max_trees = Vec::new();
    let attains = |v: f64, target: f64| (v - target).abs() <= ATTAIN_TOL * target.abs().max(1.0);
    for t in stream()? {
        let v = edge_sum_unchecked(&t, index);
        if attains(v, min_value) {
            min_trees.push(t.clone());
        }
        if attains(v, max_value) {
            max_trees.push(t);
        }
    }

    let (closed_form_min, closed_form_max) = match (index, family.chemical) {
        (IndexKind::Bso, false) if family.n >= 3 => (
            Some(path_bso_closed_form(family.n)?),
            Some(star_bso_closed_form(family.n)?),
        ),
        (IndexKind::Bso, true) => (None, chemical_bso_upper_bound(family.n).ok()),
        _ => (None, None),
    };

    Ok(ExtremalResult {
        family,
        index,
        min_value,
        max_value,
        min_trees,
        max_trees,
        closed_form_min,
        closed_form_max,
        tree_count,
    })
}

/// BSO value of the path P_n for `n >= 3`: `sqrt(2)*(n-3)/2 + sqrt(5)`.
pub fn path_bso_closed_form(n: usize) -> Result<f64, TreeError> {
    if n < 3 {
        return Err(TreeError::PathFormRange { n });
    }
    Ok(SQRT_2 * (n as f64 - 3.0) / 2.0 + 5f64.sqrt())
}

/// BSO value of the star K_{1,n-1} for `n >= 2`: `sqrt(1 + (n-1)^2)`.
pub fn star_bso_closed_form(n: usize) -> Result<f64, TreeError> {
    if n < 2 {
        return Err(TreeError::StarFormRange { n });
    }
    let t = n as f64 - 1.0;
    Ok((1.0 + t * t).sqrt())
}

/// Certified upper bound for the BSO index over chemical trees of order
/// `n`, available exactly when `n >= 5` and `n - 2` is divisible by 3:
/// `(2*sqrt(17)*(n+1) + sqrt(2)*(n-5)) / 12`.
pub fn chemical_bso_upper_bound(n: usize) -> Result<f64, TreeError> {
    if n < 5 || n % 3 != 2 {
        return Err(TreeError::ChemicalFormRange { n });
    }
    let nf = n as f64;
    Ok((2.0 * 17f64.sqrt() * (nf + 1.0) + SQRT_2 * (nf - 5.0)) / 12.0)
}

/// Auxiliary function for the path/star extremal argument on degree pairs:
/// `f(x,y) = sqrt(1/x^2 + 1/y^2) + (sqrt2 - sqrt5)(x+y)/(xy) + sqrt5 - 3*sqrt2/2`.
/// Zero at (1,2) and (2,2); positive on the rest of the tested lattice
/// except (1,1).
pub fn proof_fn_f(x: u32, y: u32) -> Result<f64, TreeError> {
    if x < 1 || y < x {
        return Err(TreeError::ProofDomain("f requires integers 1 <= x <= y"));
    }
    let (xf, yf) = (f64::from(x), f64::from(y));
    Ok((1.0 / (xf * xf) + 1.0 / (yf * yf)).sqrt()
        + (SQRT_2 - 5f64.sqrt()) * (xf + yf) / (xf * yf)
        + 5f64.sqrt()
        - 1.5 * SQRT_2)
}

/// Degree-pair auxiliary function parameterized by a maximum degree:
/// zero at (1,dmax) and (dmax,dmax), negative on the rest of the tested
/// lattice except (1,1).
pub fn proof_fn_g(x: u32, y: u32, dmax: u32) -> Result<f64, TreeError> {
    if dmax < 2 {
        return Err(TreeError::ProofDomain("g requires dmax >= 2"));
    }
    if x < 1 || y < x || dmax < y {
        return Err(TreeError::ProofDomain(
            "g requires integers 1 <= x <= y <= dmax",
        ));
    }
    let (xf, yf, df) = (f64::from(x), f64::from(y), f64::from(dmax));
    let root = (df * df + 1.0).sqrt();
    Ok((1.0 / (xf * xf) + 1.0 / (yf * yf)).sqrt()
        + (SQRT_2 - root) / (df - 1.0) * (xf + yf) / (xf * yf)
        + (2.0 * root - SQRT_2 * (df + 1.0)) / (df * (df - 1.0)))
}

/// Interpolating function between the path value at `x = 2` and the star
/// value at `x = n-1`; strictly increasing in `x` on `[2, n-1]`.
pub fn proof_fn_h(x: f64, n: usize) -> Result<f64, TreeError> {
    if x.is_nan() || x < 2.0 {
        return Err(TreeError::ProofDomain("h requires x >= 2"));
    }
    if n < 3 {
        return Err(TreeError::ProofDomain("h requires n >= 3"));
    }
    let nf = n as f64;
    let root = (x * x + 1.0).sqrt();
    Ok(((x - 2.0) * nf * root + SQRT_2 * (nf - x - 1.0) + 2.0 * root) / (x * (x - 1.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{path, star};
    use crate::graph::degree_summary;
    use crate::indices::bso;

    fn degree_multiset(g: &Graph) -> Vec<u32> {
        let mut d = g.degrees().to_vec();
        d.sort_unstable();
        d
    }

    /// Free-tree canonical form: the lexicographically greatest canonical
    /// rooted sequence over the center vertices (found by leaf stripping).
    fn free_canonical_form(g: &Graph) -> Vec<u32> {
        let n = g.n();
        if n == 1 {
            return vec![0];
        }
        let mut degree: Vec<usize> = g.degrees().iter().map(|&d| d as usize).collect();
        let mut removed = vec![false; n];
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            let mut next = Vec::new();
            for &v in &layer {
                removed[v] = true;
                remaining -= 1;
                for &u in g.neighbors(v as u32) {
                    let u = u as usize;
                    if !removed[u] {
                        degree[u] -= 1;
                        if degree[u] == 1 {
                            next.push(u);
                        }
                    }
                }
            }
            layer = next;
        }
        let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|v| g.neighbors(v as u32).iter().map(|&u| u as usize).collect())
            .collect();
        centers
            .into_iter()
            .map(|c| canonical_rooted_sequence(&adj, c))
            .max()
            .expect("tree has a center")
    }

    #[test]
    fn smallest_orders() {
        let n1: Vec<Graph> = enumerate_trees(1).unwrap().collect();
        assert_eq!(n1.len(), 1);
        assert_eq!((n1[0].n(), n1[0].m()), (1, 0));

        let n2: Vec<Graph> = enumerate_trees(2).unwrap().collect();
        assert_eq!(n2.len(), 1);
        assert_eq!(n2[0].edges(), &[(0, 1)]);

        let n3: Vec<Graph> = enumerate_trees(3).unwrap().collect();
        assert_eq!(n3.len(), 1);
        assert_eq!(degree_multiset(&n3[0]), vec![1, 1, 2]);

        let n4: Vec<Graph> = enumerate_trees(4).unwrap().collect();
        assert_eq!(n4.len(), 2);
        let mut multisets: Vec<Vec<u32>> = n4.iter().map(degree_multiset).collect();
        multisets.sort();
        assert_eq!(multisets, vec![vec![1, 1, 1, 3], vec![1, 1, 2, 2]]);
    }

    #[test]
    fn order_bounds_are_enforced() {
        assert_eq!(
            enumerate_trees(0).unwrap_err(),
            TreeError::OrderOutOfRange { n: 0 }
        );
        assert_eq!(
            enumerate_trees(19).unwrap_err(),
            TreeError::OrderOutOfRange { n: 19 }
        );
        assert!(enumerate_trees(MAX_TREE_ORDER).is_ok());
        assert_eq!(
            enumerate_chemical_trees(0).unwrap_err(),
            TreeError::OrderOutOfRange { n: 0 }
        );
    }

    #[test]
    fn enumerated_trees_are_valid_and_pairwise_nonisomorphic() {
        for n in 1..=11 {
            let trees: Vec<Graph> = enumerate_trees(n).unwrap().collect();
            let mut forms = Vec::with_capacity(trees.len());
            for t in &trees {
                assert_eq!(t.n(), n);
                assert_eq!(t.m(), n - 1);
                assert!(degree_summary(t).is_connected, "n={n}");
                forms.push(free_canonical_form(t));
            }
            forms.sort();
            let before = forms.len();
            forms.dedup();
            assert_eq!(forms.len(), before, "duplicate isomorphism class at n={n}");
        }
    }

    #[test]
    fn spec_counts_for_small_orders() {
        let count = |n: usize| enumerate_trees(n).unwrap().count();
        assert_eq!(count(1), 1);
        assert_eq!(count(4), 2);
        assert_eq!(count(7), 11);
        let chem = |n: usize| enumerate_chemical_trees(n).unwrap().count();
        assert_eq!(chem(4), 2);
        assert_eq!(chem(5), 3);
        assert_eq!(chem(6), 5);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a: Vec<Vec<(u32, u32)>> = enumerate_trees(8)
            .unwrap()
            .map(|t| t.edges().to_vec())
            .collect();
        let b: Vec<Vec<(u32, u32)>> = enumerate_trees(8)
            .unwrap()
            .map(|t| t.edges().to_vec())
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn chemical_pruning_matches_post_filter() {
        for n in 1..=13 {
            let pruned: Vec<Vec<(u32, u32)>> = enumerate_chemical_trees(n)
                .unwrap()
                .map(|t| t.edges().to_vec())
                .collect();
            let filtered: Vec<Vec<(u32, u32)>> = enumerate_trees(n)
                .unwrap()
                .filter(|t| t.max_degree() <= 4)
                .map(|t| t.edges().to_vec())
                .collect();
            assert_eq!(pruned, filtered, "n={n}");
        }
    }

    #[test]
    fn chemical_enumeration_scales_to_large_orders() {
        let mut count = 0usize;
        for t in enumerate_chemical_trees(16).unwrap() {
            assert!(t.max_degree() <= 4);
            assert_eq!(t.m(), 15);
            count += 1;
        }
        assert!(
            count > 1000,
            "implausibly few chemical trees at n=16: {count}"
        );
    }

    #[test]
    fn closed_forms_match_direct_evaluation() {
        for n in 3..=15 {
            let expected = bso(&path(n)).unwrap();
            let form = path_bso_closed_form(n).unwrap();
            assert!((form - expected).abs() <= 1e-12 * expected, "path n={n}");
        }
        for n in 2..=15 {
            let expected = bso(&star(n)).unwrap();
            let form = star_bso_closed_form(n).unwrap();
            assert!((form - expected).abs() <= 1e-12 * expected, "star n={n}");
        }
        assert_eq!(
            path_bso_closed_form(2).unwrap_err(),
            TreeError::PathFormRange { n: 2 }
        );
        assert_eq!(
            star_bso_closed_form(1).unwrap_err(),
            TreeError::StarFormRange { n: 1 }
        );
    }

    #[test]
    fn chemical_bound_values_and_domain() {
        assert!((chemical_bso_upper_bound(5).unwrap() - 17f64.sqrt()).abs() < 1e-12);
        let b8 = chemical_bso_upper_bound(8).unwrap();
        assert!((b8 - (18.0 * 17f64.sqrt() + 3.0 * SQRT_2) / 12.0).abs() < 1e-12);
        assert!((b8 - 6.538_21).abs() < 1e-4);
        for n in [1, 3, 4, 6, 7, 9, 12] {
            assert_eq!(
                chemical_bso_upper_bound(n).unwrap_err(),
                TreeError::ChemicalFormRange { n },
                "n={n}"
            );
        }
        assert!(chemical_bso_upper_bound(11).is_ok());
        assert!(chemical_bso_upper_bound(14).is_ok());
    }

    #[test]
    fn proof_fn_f_zeros_and_signs() {
        assert!(proof_fn_f(1, 2).unwrap().abs() <= 1e-12);
        assert!(proof_fn_f(2, 2).unwrap().abs() <= 1e-12);
        assert!(proof_fn_f(1, 1).unwrap() < 0.0);
        assert!((proof_fn_f(1, 3).unwrap() - 0.0731).abs() < 1e-4);
        for x in 1..=12u32 {
            for y in x..=12u32 {
                if [(1, 1), (1, 2), (2, 2)].contains(&(x, y)) {
                    continue;
                }
                assert!(proof_fn_f(x, y).unwrap() > 0.0, "f({x},{y})");
            }
        }
        assert!(proof_fn_f(3, 2).is_err());
        assert!(proof_fn_f(0, 1).is_err());
    }

    #[test]
    fn proof_fn_g_zeros_and_signs() {
        for dmax in 2..=12u32 {
            let at = |x, y| proof_fn_g(x, y, dmax).unwrap();
            assert!(at(1, dmax).abs() <= 1e-12, "g(1,{dmax},{dmax})");
            assert!(at(dmax, dmax).abs() <= 1e-12, "g({dmax},{dmax},{dmax})");
            for x in 1..=dmax {
                for y in x..=dmax {
                    if (x, y) == (1, 1) || (x, y) == (1, dmax) || (x, y) == (dmax, dmax) {
                        continue;
                    }
                    assert!(at(x, y) < 0.0, "g({x},{y},{dmax})");
                }
            }
        }
        assert!(proof_fn_g(2, 2, 3).unwrap() < 0.0);
        assert!(proof_fn_g(1, 2, 1).is_err());
        assert!(proof_fn_g(2, 1, 3).is_err());
        assert!(proof_fn_g(1, 4, 3).is_err());
    }

    #[test]
    fn proof_fn_h_interpolates_and_increases() {
        for n in 4..=12 {
            let at_path = proof_fn_h(2.0, n).unwrap();
            assert!((at_path - path_bso_closed_form(n).unwrap()).abs() <= 1e-12);
            let at_star = proof_fn_h(n as f64 - 1.0, n).unwrap();
            assert!((at_star - star_bso_closed_form(n).unwrap()).abs() <= 1e-9);
        }
        assert!(proof_fn_h(3.0, 5).unwrap() < proof_fn_h(4.0, 5).unwrap());
        let mut prev = proof_fn_h(2.0, 6).unwrap();
        let mut x = 2.01;
        while x <= 5.0 {
            let cur = proof_fn_h(x, 6).unwrap();
            assert!(cur > prev, "h not increasing at x={x}");
            prev = cur;
            x += 0.01;
        }
        assert!(proof_fn_h(1.5, 5).is_err());
        assert!(proof_fn_h(2.0, 2).is_err());
        assert!(proof_fn_h(f64::NAN, 5).is_err());
    }

    #[test]
    fn extremal_order_5_free() {
        let r = extremal_search(
            TreeFamily {
                n: 5,
                chemical: false,
            },
            IndexKind::Bso,
        )
        .unwrap();
        assert_eq!(r.tree_count, 3);
        assert!((r.min_value - (SQRT_2 + 5f64.sqrt())).abs() <= 1e-12);
        assert!((r.max_value - 17f64.sqrt()).abs() <= 1e-12);
        assert_eq!(r.min_trees.len(), 1);
        assert_eq!(degree_multiset(&r.min_trees[0]), vec![1, 1, 2, 2, 2]);
        assert_eq!(r.max_trees.len(), 1);
        assert_eq!(degree_multiset(&r.max_trees[0]), vec![1, 1, 1, 1, 4]);
        assert!((r.closed_form_min.unwrap() - r.min_value).abs() <= 1e-12);
        assert!((r.closed_form_max.unwrap() - r.max_value).abs() <= 1e-12);
    }

    #[test]
    fn extremal_order_3_degenerate() {
        let r = extremal_search(
            TreeFamily {
                n: 3,
                chemical: false,
            },
            IndexKind::Bso,
        )
        .unwrap();
        assert_eq!(r.tree_count, 1);
        assert!((r.min_value - 5f64.sqrt()).abs() <= 1e-12);
        assert_eq!(r.min_value, r.max_value);
        assert_eq!(r.closed_form_min, r.closed_form_max);
    }

    #[test]
    fn extremal_order_7_count_matches() {
        let r = extremal_search(
            TreeFamily {
                n: 7,
                chemical: false,
            },
            IndexKind::Bso,
        )
        .unwrap();
        assert_eq!(r.tree_count, 11);
        assert!(!r.min_trees.is_empty() && !r.max_trees.is_empty());
        for t in r.min_trees.iter().chain(&r.max_trees) {
            let v = edge_sum_unchecked(t, IndexKind::Bso);
            assert!(
                (v - r.min_value).abs() <= 1e-9 * r.min_value.max(1.0)
                    || (v - r.max_value).abs() <= 1e-9 * r.max_value.max(1.0)
            );
        }
    }

    #[test]
    fn extremal_order_8_chemical_attains_bound() {
        let r = extremal_search(
            TreeFamily {
                n: 8,
                chemical: true,
            },
            IndexKind::Bso,
        )
        .unwrap();
        let bound = chemical_bso_upper_bound(8).unwrap();
        assert!(r.max_value <= bound + 1e-9);
        assert!(
            (r.max_value - bound).abs() <= 1e-9 * bound,
            "bound should be attained at n=8"
        );
        assert_eq!(r.closed_form_max, Some(bound));
        assert_eq!(r.closed_form_min, None);
        for t in &r.max_trees {
            let n2 = t.degrees().iter().filter(|&&d| d == 2).count();
            let n3 = t.degrees().iter().filter(|&&d| d == 3).count();
            assert_eq!((n2, n3), (0, 0));
        }
    }

    #[test]
    fn extremal_nonbso_index_has_no_closed_forms() {
        let r = extremal_search(
            TreeFamily {
                n: 6,
                chemical: false,
            },
            IndexKind::Sombor,
        )
        .unwrap();
        assert_eq!(r.closed_form_min, None);
        assert_eq!(r.closed_form_max, None);
        assert!(r.min_value <= r.max_value);
        // The star maximizes and the path minimizes the Sombor index over
        // trees as well.
        assert_eq!(degree_multiset(&r.max_trees[0]), vec![1, 1, 1, 1, 1, 5]);
        assert_eq!(degree_multiset(&r.min_trees[0]), vec![1, 1, 2, 2, 2, 2]);
    }

    #[test]
    fn extremal_record_round_trips_as_json() {
        let r = extremal_search(
            TreeFamily {
                n: 4,
                chemical: false,
            },
            IndexKind::Bso,
        )
        .unwrap();
        let rec = r.record();
        assert_eq!(rec.min_trees, vec!["Ck".to_owned()]);
        assert_eq!(rec.max_trees, vec!["Cs".to_owned()]);
        let json = serde_json::to_string(&rec).unwrap();
        assert!(json.starts_with(r#"{"n":4,"chemical":false,"index":"BSO","min_value":"#));
        assert!(json.contains(r#""min_trees":["Ck"],"max_trees":["Cs"],"tree_count":2}"#));
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["n"], 4);
        assert_eq!(value["index"], "BSO");
        assert!(value["closed_form_min"].is_f64());
    }
}
