use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RandomModel {
    /// Triangle-free process run to a maximal graph.
    Process,
    /// Random balanced bipartition with each cross pair kept w.p. 1/2.
    Bipartite,
}

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Visiting the pairs in uniformly random order and keeping each one that
/// closes no triangle is the triangle-free process: a rejected pair can
/// never become admissible again, so the result is edge-maximal.
pub(crate) fn triangle_free_process<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    pairs.shuffle(rng);
    let mut g = Graph::empty(n);
    for (u, v) in pairs {
        if !g.neighbors(u).intersects(g.neighbors(v)) {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn random_triangle_free(n: usize, seed: u64, model: RandomModel) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Domain("random graph needs n >= 1".into()));
    }
    let mut rng = rng(seed);
    Ok(match model {
        RandomModel::Process => triangle_free_process(n, &mut rng),
        RandomModel::Bipartite => {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            let mut side = vec![false; n];
            for &v in &order[..n / 2] {
                side[v] = true;
            }
            Graph::from_fn(n, |u, v| side[u] != side[v] && rng.gen_bool(0.5))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_edge_maximal(g: &Graph) -> bool {
        (1..g.n()).all(|v| (0..v).all(|u| g.has_edge(u, v) || g.neighbors(u).intersects(g.neighbors(v))))
    }

    #[test]
    fn single_vertex() {
        for model in [RandomModel::Process, RandomModel::Bipartite] {
            let g = random_triangle_free(1, 99, model).unwrap();
            assert_eq!((g.n(), g.edge_count()), (1, 0));
        }
        assert!(random_triangle_free(0, 1, RandomModel::Process).is_err());
    }

    #[test]
    fn process_is_maximal_triangle_free() {
        let g = random_triangle_free(30, 7, RandomModel::Process).unwrap();
        assert!(g.is_triangle_free());
        assert!(is_edge_maximal(&g));
        assert!(g.edge_count() > 0);
    }

    #[test]
    fn bipartite_model() {
        let g = random_triangle_free(20, 3, RandomModel::Bipartite).unwrap();
        assert!(g.is_bipartite());
        assert!(g.is_triangle_free());
    }

    #[test]
    fn reproducible() {
        for model in [RandomModel::Process, RandomModel::Bipartite] {
            assert_eq!(
                random_triangle_free(25, 11, model).unwrap(),
                random_triangle_free(25, 11, model).unwrap()
            );
        }
        assert_ne!(
            random_triangle_free(25, 11, RandomModel::Process).unwrap(),
            random_triangle_free(25, 12, RandomModel::Process).unwrap()
        );
    }
}
