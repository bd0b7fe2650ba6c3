//! Test-only tree oracle, independent of the library's enumerator.
//!
//! Counts isomorphism classes of trees on `n` labeled vertices by brute
//! force: decode every one of the n^(n-2) Prüfer sequences, canonicalize
//! the resulting tree with a center-rooted AHU code, and deduplicate.
//! Nothing here is shared with `banso::trees`; the two implementations
//! agree only if both enumerate exactly the unlabeled trees.

use std::collections::HashSet;

/// Counts of unlabeled trees on `n` vertices: `(all, max_degree <= 4)`.
pub struct TreeCounts {
    pub free: usize,
    pub chemical: usize,
}

/// Enumerates every Prüfer sequence of length `n - 2` and counts the
/// distinct unlabeled trees they decode to. Supports `1 <= n <= 10`
/// (10^8 sequences at the top end).
pub fn prufer_tree_counts(n: usize) -> TreeCounts {
    assert!((1..=10).contains(&n), "oracle supports 1..=10, got {n}");
    if n == 1 {
        return TreeCounts {
            free: 1,
            chemical: 1,
        };
    }

    let mut free = HashSet::new();
    let mut chemical = HashSet::new();
    let mut seq = vec![0usize; n - 2];
    let mut deg = vec![0u32; n];
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n - 1);
    let mut adj: Vec<Vec<usize>> = vec![Vec::with_capacity(n - 1); n];

    loop {
        let max_degree = decode(n, &seq, &mut deg, &mut edges);
        for a in adj.iter_mut() {
            a.clear();
        }
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let code = canonical_code(&adj);
        free.insert(code);
        if max_degree <= 4 {
            chemical.insert(code);
        }

        // Odometer step over the alphabet 0..n.
        let mut k = seq.len();
        loop {
            if k == 0 {
                return TreeCounts {
                    free: free.len(),
                    chemical: chemical.len(),
                };
            }
            k -= 1;
            seq[k] += 1;
            if seq[k] < n {
                break;
            }
            seq[k] = 0;
        }
    }
}

/// Linear Prüfer decode; fills `edges` and returns the maximum degree.
fn decode(n: usize, seq: &[usize], deg: &mut [u32], edges: &mut Vec<(usize, usize)>) -> u32 {
    edges.clear();
    for d in deg.iter_mut() {
        *d = 1;
    }
    for &x in seq {
        deg[x] += 1;
    }
    let max_degree = deg.iter().copied().max().unwrap();

    let mut ptr = 0;
    while deg[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf, v));
        deg[v] -= 1;
        if deg[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while deg[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    max_degree
}

/// Canonical identifier of the unlabeled tree: the smaller AHU code over
/// its one or two centers. Codes of an n-vertex tree are 2n-bit strings,
/// so a `u64` holds any tree up to n = 32.
fn canonical_code(adj: &[Vec<usize>]) -> u64 {
    let centers = centers(adj);
    centers
        .iter()
        .map(|&c| ahu_code(c, usize::MAX, adj))
        .map(|(bits, _)| bits)
        .min()
        .unwrap()
}

/// Tree centers by repeated leaf stripping (one or two vertices).
fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            deg[v] = 0;
            for &u in &adj[v] {
                if deg[u] > 0 {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer
}

/// Rooted AHU code as `(bits, bit_length)`: a leaf is `10`; an internal
/// vertex concatenates its children's codes in sorted order between a
/// leading 1 and trailing 0. Equal codes <=> isomorphic rooted trees.
fn ahu_code(v: usize, parent: usize, adj: &[Vec<usize>]) -> (u64, u32) {
    let mut kids = [(0u64, 0u32); 16];
    let mut k = 0;
    for &u in &adj[v] {
        if u != parent {
            kids[k] = ahu_code(u, v, adj);
            k += 1;
        }
    }
    kids[..k].sort_unstable();
    let mut bits = 1u64;
    let mut len = 1u32;
    for &(cb, cl) in &kids[..k] {
        bits = (bits << cl) | cb;
        len += cl;
    }
    (bits << 1, len + 1)
}
