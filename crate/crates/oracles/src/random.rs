use partree_core::{Graph, Vertex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{OracleError, Result};

/// A random biconnected graph on `n` vertices, fixed by `seed`.
///
/// Starts from a cycle of random length and grows by open ears (paths of
/// one to three new vertices between two distinct existing vertices) until
/// all `n` vertices are in; then every missing edge is added with
/// probability `density`, and the labels are shuffled.
pub fn random_biconnected(n: usize, density: f64, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(OracleError::Precondition(format!("need n >= 3, got {n}")));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(OracleError::Precondition(format!(
            "density {density} is not in [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj = vec![vec![false; n]; n];
    fn link(adj: &mut [Vec<bool>], u: usize, v: usize) {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let start = rng.random_range(3..=n);
    for i in 0..start {
        link(&mut adj, i, (i + 1) % start);
    }
    let mut next = start;
    while next < n {
        let a = rng.random_range(0..next);
        let b = (a + rng.random_range(1..next)) % next;
        let len = rng.random_range(1..=(n - next).min(3));
        let mut prev = a;
        for v in next..next + len {
            link(&mut adj, prev, v);
            prev = v;
        }
        link(&mut adj, prev, b);
        next += len;
    }
    for u in 0..n {
        for v in u + 1..n {
            if !adj[u][v] && rng.random_bool(density) {
                link(&mut adj, u, v);
            }
        }
    }
    let mut label: Vec<Vertex> = (0..n as Vertex).collect();
    label.shuffle(&mut rng);
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<(Vertex, Vertex)> = edges
        .filter(|&(u, v)| adj[u][v])
        .map(|(u, v)| (label[u], label[v]))
        .collect();
    Ok(Graph::new(0..n as Vertex, edges).expect("generated edges are simple"))
}
