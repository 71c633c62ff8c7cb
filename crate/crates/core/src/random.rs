//! Seeded random connected graphs for test instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Number of independent `G(n, p)` draws tried before falling back to a
/// spanning-tree construction.
pub const REJECTION_BUDGET: usize = 64;

fn check_params(n: usize, p: f64) -> Result<()> {
    if n < 2 {
        return Err(Error::BadParam(format!(
            "random graph needs n >= 2, got {n}"
        )));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::BadParam(format!(
            "edge probability must lie in (0, 1], got {p}"
        )));
    }
    Ok(())
}

fn sample_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("each pair visited once");
            }
        }
    }
    g
}

/// Draws `G(n, p)` until a connected sample appears, at most `budget` times.
pub fn sample_connected_by_rejection<R: Rng>(
    n: usize,
    p: f64,
    rng: &mut R,
    budget: usize,
) -> Result<Graph> {
    check_params(n, p)?;
    (0..budget)
        .map(|_| sample_gnp(n, p, rng))
        .find(Graph::is_connected)
        .ok_or(Error::GenerationFailure(budget))
}

/// Uniform labelled spanning tree of `K_n` via a random Prüfer sequence.
fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    if n == 2 {
        g.add_edge(0, 1).expect("single edge");
        return g;
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut remaining = vec![1usize; n];
    for &s in &seq {
        remaining[s] += 1;
    }
    for &s in &seq {
        let leaf = (0..n)
            .find(|&v| remaining[v] == 1)
            .expect("a leaf always exists");
        g.add_edge(leaf, s).expect("Prüfer decoding yields a tree");
        remaining[leaf] -= 1;
        remaining[s] -= 1;
    }
    let mut last = (0..n).filter(|&v| remaining[v] == 1);
    let (a, b) = (last.next().unwrap(), last.next().unwrap());
    g.add_edge(a, b).expect("final tree edge");
    g
}

/// Connected simple graph on `n` vertices, deterministic in `(n, p, seed)`.
///
/// Tries rejection sampling from `G(n, p)` first; if that exhausts
/// [`REJECTION_BUDGET`], returns a uniform spanning tree with every other
/// pair added independently with probability `p`.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_params(n, p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match sample_connected_by_rejection(n, p, &mut rng, REJECTION_BUDGET) {
        Ok(g) => Ok(g),
        Err(Error::GenerationFailure(_)) => {
            let mut g = random_tree(n, &mut rng);
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) && rng.gen_bool(p) {
                        g.add_edge(u, v).expect("absent pair");
                    }
                }
            }
            Ok(g)
        }
        Err(e) => Err(e),
    }
}

/// Random non-empty subset of `0..n`, as sorted ids.
pub fn random_nonempty_subset<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    assert!(n > 0, "cannot pick a non-empty subset of nothing");
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    let k = rng.gen_range(1..=n);
    let mut picked = ids[..k].to_vec();
    picked.sort_unstable();
    picked
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec};

    #[test]
    fn forced_cases() {
        for seed in 0..10 {
            assert_eq!(
                random_connected_graph(2, 1.0, seed).unwrap(),
                build_family(&FamilySpec::Path(2)).unwrap()
            );
            assert_eq!(
                random_connected_graph(5, 1.0, seed).unwrap(),
                build_family(&FamilySpec::Complete(5)).unwrap()
            );
        }
    }

    #[test]
    fn deterministic_per_seed() {
        for seed in 0..20 {
            assert_eq!(
                random_connected_graph(8, 0.3, seed).unwrap(),
                random_connected_graph(8, 0.3, seed).unwrap()
            );
        }
    }

    #[test]
    fn sparse_requests_fall_back_to_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(
            sample_connected_by_rejection(30, 0.01, &mut rng, 5),
            Err(Error::GenerationFailure(5))
        );
        for seed in 0..20 {
            let g = random_connected_graph(30, 0.01, seed).unwrap();
            assert!(g.is_connected());
            assert!(g.edge_count() >= 29);
        }
    }

    #[test]
    fn prufer_trees_are_spanning_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 2..15 {
            let t = random_tree(n, &mut rng);
            assert_eq!(t.edge_count(), n - 1);
            assert!(t.is_connected());
        }
    }

    #[test]
    fn bad_params() {
        assert!(random_connected_graph(1, 0.5, 0).is_err());
        assert!(random_connected_graph(4, 0.0, 0).is_err());
        assert!(random_connected_graph(4, 1.5, 0).is_err());
        assert!(random_connected_graph(4, f64::NAN, 0).is_err());
    }

    #[test]
    fn subsets_are_nonempty_and_in_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 1..10 {
            let s = random_nonempty_subset(n, &mut rng);
            assert!(!s.is_empty() && s.iter().all(|&v| v < n));
            assert!(s.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
