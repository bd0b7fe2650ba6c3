//! Structured graph families and the seeded verification corpus.
//!
//! The family constructors (paths, cycles, stars, complete and complete
//! bipartite graphs) use fixed vertex labelings so that edge order — and
//! therefore every floating-point accumulation downstream — is stable
//! across runs. [`verification_corpus`] bundles the families with a
//! seeded stream of random connected graphs into one labeled list.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{degree_summary, Graph};
use crate::trees::enumerate_trees;

/// Path P_n on vertices 0..n, edges (i, i+1). `n >= 1`.
pub fn path(n: usize) -> Graph {
    assert!(n >= 1, "path requires n >= 1");
    let edges = (0..n.saturating_sub(1)).map(|i| (i as u32, i as u32 + 1));
    Graph::from_edges(n, edges).expect("path construction is valid")
}

/// Cycle C_n on vertices 0..n, edges (i, (i+1) mod n). `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle requires n >= 3");
    let edges = (0..n).map(|i| (i as u32, ((i + 1) % n) as u32));
    Graph::from_edges(n, edges).expect("cycle construction is valid")
}

/// Star K_{1,n-1} on vertices 0..n with hub 0. `n >= 2`.
pub fn star(n: usize) -> Graph {
    assert!(n >= 2, "star requires n >= 2");
    let edges = (1..n).map(|i| (0, i as u32));
    Graph::from_edges(n, edges).expect("star construction is valid")
}

/// Complete graph K_n on vertices 0..n. `n >= 1`.
pub fn complete(n: usize) -> Graph {
    assert!(n >= 1, "complete requires n >= 1");
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u as u32, v as u32));
        }
    }
    Graph::from_edges(n, edges).expect("complete construction is valid")
}

/// Complete bipartite graph K_{a,b}, parts 0..a and a..a+b. `a, b >= 1`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    assert!(a >= 1 && b >= 1, "complete_bipartite requires a, b >= 1");
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in 0..b {
            edges.push((u as u32, (a + v) as u32));
        }
    }
    Graph::from_edges(a + b, edges).expect("complete_bipartite construction is valid")
}

/// One G(n, p) draw, resampled until connected. Consumes a deterministic
/// amount of randomness per attempt, so a fixed seed yields a fixed graph.
pub fn random_connected(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    assert!(n >= 1, "random_connected requires n >= 1");
    assert!((0.0..=1.0).contains(&p), "probability out of range");
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen::<f64>() < p {
                    edges.push((u as u32, v as u32));
                }
            }
        }
        let g = Graph::from_edges(n, edges).expect("sampled edges are valid");
        if degree_summary(&g).is_connected {
            return g;
        }
    }
}

/// Parameters for [`verification_corpus`].
#[derive(Debug, Clone)]
pub struct CorpusOptions {
    /// Enumerate all trees with up to this many vertices.
    pub tree_max_n: usize,
    /// Cycles C_3 ..= C_{cycle_max_n}.
    pub cycle_max_n: usize,
    /// Complete graphs K_3 ..= K_{complete_max_n}.
    pub complete_max_n: usize,
    /// Complete bipartite K_{a,b} for 1 <= a <= b <= bipartite_max_part.
    pub bipartite_max_part: usize,
    /// Number of random connected graphs.
    pub random_count: usize,
    /// Random graph orders cycle through random_min_n ..= random_max_n.
    pub random_min_n: usize,
    pub random_max_n: usize,
    /// Seed for the random stream.
    pub seed: u64,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions {
            tree_max_n: 10,
            cycle_max_n: 20,
            complete_max_n: 8,
            bipartite_max_part: 6,
            random_count: 1000,
            random_min_n: 3,
            random_max_n: 12,
            seed: 42,
        }
    }
}

/// The standard verification corpus: all trees up to `tree_max_n` vertices,
/// cycles, complete graphs, complete bipartite graphs, and a seeded stream
/// of random connected graphs. Labels are unique and the whole list is
/// deterministic for fixed options.
pub fn verification_corpus(opts: &CorpusOptions) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=opts.tree_max_n {
        let stream = enumerate_trees(n).expect("corpus tree order within limits");
        for (i, t) in stream.enumerate() {
            out.push((format!("tree-n{n}-{i}"), t));
        }
    }
    for n in 3..=opts.cycle_max_n {
        out.push((format!("cycle-n{n}"), cycle(n)));
    }
    for n in 3..=opts.complete_max_n {
        out.push((format!("complete-n{n}"), complete(n)));
    }
    for a in 1..=opts.bipartite_max_part {
        for b in a..=opts.bipartite_max_part {
            out.push((format!("bipartite-{a}-{b}"), complete_bipartite(a, b)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let span = opts.random_max_n - opts.random_min_n + 1;
    let ps = [0.2, 0.5, 0.8];
    for i in 0..opts.random_count {
        let n = opts.random_min_n + i % span;
        let p = ps[i % ps.len()];
        let g = random_connected(n, p, &mut rng);
        out.push((format!("random-{i}-n{n}-p{p}"), g));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        let p = path(5);
        assert_eq!((p.n(), p.m()), (5, 4));
        assert_eq!(p.degrees(), &[1, 2, 2, 2, 1]);

        let c = cycle(6);
        assert_eq!((c.n(), c.m()), (6, 6));
        assert!(c.degrees().iter().all(|&d| d == 2));

        let s = star(5);
        assert_eq!((s.n(), s.m()), (5, 4));
        assert_eq!(s.degree(0), 4);
        assert!((1..5).all(|v| s.degree(v as u32) == 1));

        let k = complete(5);
        assert_eq!((k.n(), k.m()), (5, 10));
        assert!(k.degrees().iter().all(|&d| d == 4));

        let kb = complete_bipartite(2, 3);
        assert_eq!((kb.n(), kb.m()), (5, 6));
        assert_eq!(kb.degrees(), &[3, 3, 2, 2, 2]);

        assert_eq!(path(1).n(), 1);
        assert_eq!(path(1).m(), 0);
    }

    #[test]
    fn random_graphs_are_connected_and_deterministic() {
        let mut rng1 = ChaCha8Rng::seed_from_u64(7);
        let mut rng2 = ChaCha8Rng::seed_from_u64(7);
        for n in [3usize, 6, 9, 12] {
            for p in [0.2, 0.5, 0.8] {
                let a = random_connected(n, p, &mut rng1);
                let b = random_connected(n, p, &mut rng2);
                assert!(degree_summary(&a).is_connected);
                assert_eq!(a.edges(), b.edges(), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn corpus_is_deterministic_and_labeled_uniquely() {
        let opts = CorpusOptions {
            random_count: 30,
            tree_max_n: 6,
            ..CorpusOptions::default()
        };
        let a = verification_corpus(&opts);
        let b = verification_corpus(&opts);
        assert_eq!(a.len(), b.len());
        for ((la, ga), (lb, gb)) in a.iter().zip(&b) {
            assert_eq!(la, lb);
            assert_eq!(ga.edges(), gb.edges());
        }
        let mut labels: Vec<&str> = a.iter().map(|(l, _)| l.as_str()).collect();
        labels.sort_unstable();
        labels.dedup();
        assert_eq!(labels.len(), a.len(), "duplicate corpus labels");
    }

    #[test]
    fn corpus_default_size() {
        // trees n<=6: 1+1+1+2+3+6 = 14; cycles 3..=20: 18; complete 3..=8: 6;
        // bipartite pairs a<=b<=6: 21; random: 5.
        let opts = CorpusOptions {
            random_count: 5,
            tree_max_n: 6,
            ..CorpusOptions::default()
        };
        let corpus = verification_corpus(&opts);
        assert_eq!(corpus.len(), 14 + 18 + 6 + 21 + 5);
        assert!(corpus.iter().all(|(_, g)| degree_summary(g).is_connected));
    }
}
