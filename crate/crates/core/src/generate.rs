//! Named graph families and seeded random instance generators.
//!
//! All generators take an explicit RNG so the same seed reproduces the same
//! instance byte for byte.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

fn from_pairs(n: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Graph {
    Graph::from_parts(
        (0..n).map(VertexId),
        edges.into_iter().map(|(a, b)| (VertexId(a), VertexId(b))),
    )
    .expect("generated edges are loop free")
}

pub fn path(n: u32) -> Graph {
    from_pairs(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: u32) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    from_pairs(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: u32) -> Graph {
    from_pairs(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: u32) -> Graph {
    from_pairs(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// Outer 5-cycle 0..5, spokes i–(i+5), inner pentagram.
pub fn petersen() -> Graph {
    from_pairs(
        10,
        (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]),
    )
}

/// Uniform random labelled tree via a random Prüfer sequence.
pub fn random_tree<R: Rng>(n: u32, rng: &mut R) -> Graph {
    if n <= 1 {
        return from_pairs(n, []);
    }
    if n == 2 {
        return from_pairs(2, [(0, 1)]);
    }
    let seq: Vec<u32> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1u32; n as usize];
    for &s in &seq {
        degree[s as usize] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<u32>> = (0..n)
        .filter(|&v| degree[v as usize] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n as usize - 1);
    for &s in &seq {
        let std::cmp::Reverse(leaf) = leaves.pop().unwrap();
        edges.push((leaf, s));
        degree[s as usize] -= 1;
        if degree[s as usize] == 1 {
            leaves.push(std::cmp::Reverse(s));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().unwrap();
    let std::cmp::Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    from_pairs(n, edges)
}

/// Random cubic graph from the pairing (configuration) model. Pairings that
/// produce a loop or a repeated edge are thrown away and redrawn.
pub fn random_cubic<R: Rng>(n: u32, rng: &mut R) -> Result<Graph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::Contract(format!(
            "cubic graphs need an even vertex count of at least 4, got {n}"
        )));
    }
    const MAX_ATTEMPTS: usize = 100_000;
    let mut points: Vec<u32> = (0..n).flat_map(|v| [v, v, v]).collect();
    'attempt: for _ in 0..MAX_ATTEMPTS {
        points.shuffle(rng);
        let mut edges: Vec<(u32, u32)> = Vec::with_capacity(points.len() / 2);
        for pair in points.chunks_exact(2) {
            let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if a == b {
                continue 'attempt;
            }
            edges.push((a, b));
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        return Ok(from_pairs(n, edges));
    }
    Err(Error::ResourceLimit(format!(
        "no simple pairing found for n = {n} after {MAX_ATTEMPTS} attempts"
    )))
}

/// Random graph with maximum degree `max_degree`: `proposals` uniformly
/// random vertex pairs are proposed in turn and accepted unless the edge
/// exists or an endpoint is already saturated. Not uniform over the class,
/// but reproducible.
pub fn random_bounded_degree<R: Rng>(
    n: u32,
    max_degree: usize,
    proposals: usize,
    rng: &mut R,
) -> Graph {
    let mut g = from_pairs(n, []);
    if n < 2 {
        return g;
    }
    for _ in 0..proposals {
        let a = VertexId(rng.gen_range(0..n));
        let b = VertexId(rng.gen_range(0..n));
        if a == b || g.degree(a) >= max_degree || g.degree(b) >= max_degree {
            continue;
        }
        g.add_edge(a, b).unwrap();
    }
    g
}

/// The `maxdeg3` model: bounded-degree proposals with an average target
/// degree, `ceil(avg_degree * n / 2)` proposals in total.
pub fn random_maxdeg3<R: Rng>(n: u32, avg_degree: f64, rng: &mut R) -> Graph {
    let proposals = (avg_degree * f64::from(n) / 2.0).ceil() as usize;
    random_bounded_degree(n, 3, proposals, rng)
}

/// Erdős–Rényi G(n, p).
pub fn random_gnp<R: Rng>(n: u32, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    from_pairs(n, edges)
}
