//! Exact minimum vertex cover on forests in near-linear time.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Minimum vertex cover of a forest by leaf stripping: take the neighbor of
/// the smallest-id leaf, delete it, repeat.
pub fn min_vc_forest(g: &Graph) -> Result<(usize, VertexSet)> {
    if !g.is_forest() {
        return Err(Error::Contract("graph has a cycle".into()));
    }
    let ids: Vec<_> = g.vertices().collect();
    let pos = |v| ids.binary_search(&v).unwrap();
    let nbrs: Vec<Vec<usize>> = ids
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|&w| pos(w)).collect())
        .collect();
    let mut degree: Vec<usize> = nbrs.iter().map(Vec::len).collect();
    let mut removed = vec![false; ids.len()];
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..ids.len())
        .filter(|&i| degree[i] == 1)
        .map(Reverse)
        .collect();
    let mut cover = VertexSet::new();

    while let Some(Reverse(leaf)) = leaves.pop() {
        if removed[leaf] || degree[leaf] != 1 {
            continue;
        }
        let parent = *nbrs[leaf].iter().find(|&&p| !removed[p]).unwrap();
        cover.insert(ids[parent]);
        removed[parent] = true;
        for &w in &nbrs[parent] {
            if !removed[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    leaves.push(Reverse(w));
                }
            }
        }
    }
    Ok((cover.len(), cover))
}

/// Maximum independent set size of a forest by the in/out dynamic program.
/// Kept separate from the greedy so the two can check each other.
pub fn max_independent_set_forest(g: &Graph) -> Result<usize> {
    if !g.is_forest() {
        return Err(Error::Contract("graph has a cycle".into()));
    }
    let ids: Vec<_> = g.vertices().collect();
    let pos = |v| ids.binary_search(&v).unwrap();
    let n = ids.len();
    let mut parent = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in g.neighbors(ids[v]) {
                let w = pos(w);
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
    }
    // best set in v's subtree with v taken / with v free
    let mut taken = vec![1usize; n];
    let mut free = vec![0usize; n];
    let mut total = 0;
    for &v in order.iter().rev() {
        let best = taken[v].max(free[v]);
        match parent[v] {
            usize::MAX => total += best,
            p => {
                taken[p] += free[v];
                free[p] += best;
            }
        }
    }
    Ok(total)
}
