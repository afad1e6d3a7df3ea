use std::collections::BTreeSet;

use crate::graph::Graph;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut reached = 1u32;
    loop {
        let grown = edges.iter().fold(reached, |acc, &(u, v)| {
            if acc >> u & 1 == 1 || acc >> v & 1 == 1 {
                acc | 1 << u | 1 << v
            } else {
                acc
            }
        });
        if grown == reached {
            return reached == (1u32 << n) - 1;
        }
        reached = grown;
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative of every connected graph on `n` vertices up to
/// isomorphism (the lexicographically least edge mask), for `1 <= n <= 7`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "catalog supports 1 <= n <= 7");
    let all = pairs(n);
    let index = |u: usize, v: usize| all.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    let perms = permutations(n);
    let image: Vec<Vec<usize>> =
        perms.iter().map(|p| all.iter().map(|&(u, v)| index(p[u], p[v])).collect()).collect();
    let mut seen = BTreeSet::new();
    for mask in 0u32..1 << all.len() {
        let edges: Vec<(usize, usize)> = (0..all.len()).filter(|&e| mask >> e & 1 == 1).map(|e| all[e]).collect();
        if !connected(n, &edges) {
            continue;
        }
        let canon = image
            .iter()
            .map(|img| (0..all.len()).filter(|&e| mask >> e & 1 == 1).fold(0u32, |acc, e| acc | 1 << img[e]))
            .min()
            .unwrap();
        seen.insert(canon);
    }
    seen.into_iter()
        .map(|mask| {
            let edges = (0..all.len()).filter(|&e| mask >> e & 1 == 1).map(|e| all[e]);
            Graph::from_edges(n, edges).expect("catalog graphs are connected")
        })
        .collect()
}

/// All connected graphs with `1..=max_n` vertices, up to isomorphism.
pub fn small_catalog(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_known_sequence() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }
}
