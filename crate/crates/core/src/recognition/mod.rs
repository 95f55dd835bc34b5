//! Interval and unit interval graph recognition.
//!
//! [`recognize_interval`] runs maximum cardinality search, checks the
//! resulting perfect elimination ordering, reads off the maximal cliques and
//! orders them with a PQ-tree so that the cliques of every vertex are
//! consecutive. Vertex `v` then gets `[first, last]` over the indices
//! (1-based) of its cliques. The cost is `O(n * k)` for `k` maximal cliques.
//!
//! [`recognize_proper_order`] lives in [`lexbfs`].

pub mod lexbfs;
pub mod pqtree;

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};
use crate::interval::{DIntervalRep, Interval};

pub use lexbfs::{is_proper_order, recognize_proper_order, ProperOrder};
pub use pqtree::PqTree;

/// Maximum cardinality search: visit order and, for each visited vertex, the
/// number of already visited neighbours at the time of its visit.
pub fn mcs(g: &Graph) -> (Vec<Vertex>, Vec<usize>) {
    let n = g.n();
    let mut weight = vec![0usize; n + 1];
    let mut done = vec![false; n + 1];
    let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); n + 1];
    buckets[0] = (1..=n).rev().collect();
    let mut top = 0;
    let mut order = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    while order.len() < n {
        let v = loop {
            match buckets[top].pop() {
                Some(v) if !done[v] && weight[v] == top => break v,
                Some(_) => {}
                None => top -= 1,
            }
        };
        done[v] = true;
        order.push(v);
        labels.push(weight[v]);
        for &w in g.neighbors(v) {
            if !done[w] {
                weight[w] += 1;
                buckets[weight[w]].push(w);
                top = top.max(weight[w]);
            }
        }
    }
    (order, labels)
}

/// Whether the reverse of `order` is a perfect elimination ordering, that
/// is, the earlier neighbours of every vertex form a clique.
pub fn is_reverse_peo(g: &Graph, order: &[Vertex]) -> bool {
    let n = g.n();
    let mut pos = vec![0usize; n + 1];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let earlier: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] < pos[v])
            .collect();
        match earlier.iter().copied().max_by_key(|&w| pos[w]) {
            None => true,
            Some(p) => earlier.iter().all(|&w| w == p || g.has_edge(w, p)),
        }
    })
}

pub fn is_chordal(g: &Graph) -> bool {
    is_reverse_peo(g, &mcs(g).0)
}

/// Maximal cliques of a chordal graph from its MCS order: the clique of a
/// vertex is itself plus its earlier neighbours, and it is maximal exactly
/// when the next vertex's label does not grow. Returns `None` if the graph
/// is not chordal. Cliques are sorted vertex lists.
pub fn maximal_cliques(g: &Graph) -> Option<Vec<Vec<Vertex>>> {
    let (order, labels) = mcs(g);
    if !is_reverse_peo(g, &order) {
        return None;
    }
    let n = g.n();
    let mut pos = vec![0usize; n + 1];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut cliques = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let closes = i + 1 == order.len() || labels[i + 1] <= labels[i];
        if closes {
            let mut c: Vec<Vertex> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| pos[w] < i)
                .collect();
            c.push(v);
            c.sort_unstable();
            cliques.push(c);
        }
    }
    Some(cliques)
}

/// An interval representation of `g` with integer endpoints (clique
/// indices, starting at 1), or `None` if `g` is not an interval graph.
pub fn recognize_interval(g: &Graph) -> Option<DIntervalRep> {
    let cliques = maximal_cliques(g)?;
    let k = cliques.len();
    let mut member: Vec<Vec<usize>> = vec![Vec::new(); g.n() + 1];
    for (ci, c) in cliques.iter().enumerate() {
        for &v in c {
            member[v].push(ci);
        }
    }
    let mut tree = PqTree::new(k);
    for set in member.iter().filter(|s| s.len() > 1) {
        if !tree.reduce(set) {
            return None;
        }
    }
    let mut place = vec![0i64; k];
    for (i, c) in tree.frontier().into_iter().enumerate() {
        place[c] = i as i64 + 1;
    }
    let rep = DIntervalRep::from_intervals(g.vertices().map(|v| {
        let lo = member[v].iter().map(|&c| place[c]).min().unwrap();
        let hi = member[v].iter().map(|&c| place[c]).max().unwrap();
        (v, Interval::ints(lo, hi))
    }));
    debug_assert_eq!(crate::interval::d_intersection_graph(&rep), *g);
    Some(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_bipartite, counterexample_graph, random_graph};
    use crate::interval::d_intersection_graph;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (1..=n).map(|i| (i, i % n + 1))).unwrap()
    }

    fn brute_cliques(g: &Graph) -> Vec<Vec<Vertex>> {
        let n = g.n();
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            let vs: Vec<Vertex> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| i + 1)
                .collect();
            let clique = vs
                .iter()
                .all(|&a| vs.iter().all(|&b| a == b || g.has_edge(a, b)));
            let maximal = clique
                && g.vertices()
                    .filter(|v| !vs.contains(v))
                    .all(|v| vs.iter().any(|&a| !g.has_edge(a, v)));
            if maximal {
                out.push(vs);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn cliques_match_brute_force() {
        for seed in 0..200 {
            let g = random_graph(8, 2, 5, seed);
            match maximal_cliques(&g) {
                Some(mut cs) => {
                    cs.sort();
                    assert_eq!(cs, brute_cliques(&g));
                }
                None => assert!(!is_chordal(&g)),
            }
        }
    }

    #[test]
    fn recognizes_examples() {
        let g = counterexample_graph(0).unwrap();
        let rep = recognize_interval(&g).unwrap();
        assert_eq!(d_intersection_graph(&rep), g);
        assert_eq!(recognize_interval(&cycle(4)), None);
        let claw = Graph::from_edges(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(
            d_intersection_graph(&recognize_interval(&claw).unwrap()),
            claw
        );
        // Chordal but not interval: the tripod of three subdivided claws.
        let tripod =
            Graph::from_edges(7, [(1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (4, 7)]).unwrap();
        assert!(is_chordal(&tripod));
        assert_eq!(recognize_interval(&tripod), None);
        assert_eq!(recognize_interval(&complete_bipartite(2, 2)), None);
        let empty = recognize_interval(&Graph::empty(3)).unwrap();
        assert_eq!(d_intersection_graph(&empty), Graph::empty(3));
    }
}
