//! Unit coordinates for a family of intervals whose intersection graph is a
//! claw-free interval graph.
//!
//! The family's intersection graph `H` is a unit interval graph, so it has a
//! proper order (every closed neighbourhood consecutive). Along that order,
//! let `R(i)` be the last neighbour of item `i`. Cutting the order greedily
//! into blocks `[a_0, a_1), [a_1, a_2), ...` with `a_{s+1} = R(a_s) + 1`
//! makes every block a clique and leaves edges only between consecutive
//! blocks. Item `i` in block `s` gets `l_i = s + f_i` with `0 <= f_i < 1`,
//! so items of consecutive blocks `i` (block `s`) and `j` (block `s+1`)
//! intersect iff `f_j <= f_i`. Those requirements are a system of `<=` and
//! `<` constraints between the `f` values, solved exactly by longest paths
//! in its (acyclic) constraint graph. Every result is checked pairwise
//! against the input before it is returned.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::interval::{greedy_disjoint, neighbor_lists, overlapping_pairs, Interval};
use crate::rational::Rational;
use crate::recognition::recognize_proper_order;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UnitizeError {
    /// Item `center` meets the three pairwise disjoint `leaves` (indices
    /// into the input family).
    #[error("item {center} meets three pairwise disjoint items {leaves:?}")]
    ClawPresent { center: usize, leaves: [usize; 3] },
    #[error("no unit coordinates found for the proper order (internal error)")]
    InfeasibleOrder,
}

/// Unit intervals with the same pairwise intersection pattern as `items`.
/// Labels are carried along unchanged.
pub fn unitize<L: Clone>(items: &[(L, Interval)]) -> Result<Vec<(L, Interval)>, UnitizeError> {
    let ivs: Vec<Interval> = items.iter().map(|(_, iv)| iv.clone()).collect();
    let unit = unitize_intervals(&ivs)?;
    Ok(items
        .iter()
        .zip(unit)
        .map(|((lab, _), iv)| (lab.clone(), iv))
        .collect())
}

/// Unlabelled form of [`unitize`]; output index `i` corresponds to input `i`.
pub fn unitize_intervals(items: &[Interval]) -> Result<Vec<Interval>, UnitizeError> {
    let k = items.len();
    let nb = neighbor_lists(items);
    for (c, list) in nb.iter().enumerate() {
        let chain = greedy_disjoint(items, list, |i| i);
        if chain.len() >= 3 {
            return Err(UnitizeError::ClawPresent {
                center: c,
                leaves: [chain[0], chain[1], chain[2]],
            });
        }
    }
    let h = Graph::from_edges_dedup(
        k,
        nb.iter().enumerate().flat_map(|(i, l)| {
            l.iter()
                .filter(move |&&j| j > i)
                .map(move |&j| (i + 1, j + 1))
        }),
    );
    let order = recognize_proper_order(&h).ok_or(UnitizeError::InfeasibleOrder)?;
    let order: Vec<usize> = order.order.iter().map(|&v| v - 1).collect();
    let lefts = solve_order(&h, &order)?;
    let out: Vec<Interval> = lefts.into_iter().map(Interval::unit).collect();
    if !same_pattern(items, &out) {
        return Err(UnitizeError::InfeasibleOrder);
    }
    Ok(out)
}

/// Whether both families have identical intersecting pairs.
pub fn same_pattern(a: &[Interval], b: &[Interval]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut pa = overlapping_pairs(a);
    let mut pb = overlapping_pairs(b);
    pa.sort_unstable();
    pb.sort_unstable();
    pa == pb
}

/// Left endpoints (indexed by item) from a proper order of `h`, whose
/// vertex `i + 1` is item `i`.
fn solve_order(h: &Graph, order: &[usize]) -> Result<Vec<Rational>, UnitizeError> {
    let k = order.len();
    let mut pos = vec![0usize; k];
    for (p, &i) in order.iter().enumerate() {
        pos[i] = p;
    }
    // First and last neighbour positions in the closed neighbourhood.
    let mut lo = vec![0usize; k];
    let mut hi = vec![0usize; k];
    for (p, &i) in order.iter().enumerate() {
        lo[p] = p;
        hi[p] = p;
        for &w in h.neighbors(i + 1) {
            lo[p] = lo[p].min(pos[w - 1]);
            hi[p] = hi[p].max(pos[w - 1]);
        }
    }
    // Blocks, by position.
    let mut block = vec![0usize; k];
    let mut start = vec![0usize; k];
    let mut a = 0;
    let mut s = 0;
    while a < k {
        let end = hi[a] + 1;
        for p in a..end {
            block[p] = s;
            start[p] = a;
        }
        s += 1;
        // A gap in the order (next component) gets an empty block between.
        if end < k && lo[end] == end && hi[end - 1] < end {
            s += 1;
        }
        a = end;
    }

    // Constraint edges u -> v with weight w: f_v >= f_u + w (w in {0, 1}).
    let mut edges: Vec<Vec<(usize, u8)>> = vec![Vec::new(); k];
    for p in 0..k {
        if p + 1 < k && block[p + 1] == block[p] {
            edges[p].push((p + 1, 0));
        }
        if block[p] == 0 || start[p] == 0 {
            continue;
        }
        let prev_start = start[start[p] - 1];
        if block[prev_start] + 1 != block[p] {
            continue;
        }
        // Neighbours of p in the previous block are positions lo[p]..start[p].
        let l = lo[p].max(prev_start).min(start[p]);
        if l < start[p] {
            edges[p].push((l, 0));
        }
        if l > prev_start {
            edges[l - 1].push((p, 1));
        }
    }
    // Longest paths by Kahn's algorithm; a cycle means the order is unusable.
    let mut indeg = vec![0usize; k];
    for list in &edges {
        for &(v, _) in list {
            indeg[v] += 1;
        }
    }
    let mut queue: VecDeque<usize> = (0..k).filter(|&p| indeg[p] == 0).collect();
    let mut level = vec![0u64; k];
    let mut seen = 0;
    while let Some(u) = queue.pop_front() {
        seen += 1;
        for &(v, w) in &edges[u] {
            level[v] = level[v].max(level[u] + w as u64);
            indeg[v] -= 1;
            if indeg[v] == 0 {
                queue.push_back(v);
            }
        }
    }
    if seen != k {
        return Err(UnitizeError::InfeasibleOrder);
    }
    let denom = level.iter().copied().max().unwrap_or(0) as i64 + 1;
    let mut lefts = vec![Rational::zero(); k];
    for p in 0..k {
        let f = Rational::new(level[p] as i64, denom);
        lefts[order[p]] = Rational::from(block[p] as i64) + f;
    }
    Ok(lefts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn check(items: &[Interval]) {
        let out = unitize_intervals(items).unwrap();
        assert!(out.iter().all(|iv| iv.len() == Rational::one()));
        for i in 0..items.len() {
            for j in 0..items.len() {
                assert_eq!(
                    items[i].intersects(&items[j]),
                    out[i].intersects(&out[j]),
                    "{} {} in {:?} -> {:?}",
                    i,
                    j,
                    items,
                    out
                );
            }
        }
    }

    #[test]
    fn small_families() {
        check(&[Interval::ints(5, 9)]);
        check(&[
            Interval::ints(0, 10),
            Interval::ints(1, 2),
            Interval::ints(3, 4),
        ]);
        // a-b, b-c, b-d, c-d: a naive left-to-right greedy places d too far.
        check(&[
            Interval::ints(0, 2),
            Interval::ints(2, 6),
            Interval::ints(3, 4),
            Interval::ints(4, 8),
        ]);
        check(&[
            Interval::ints(0, 1),
            Interval::ints(0, 1),
            Interval::ints(5, 5),
        ]);
        check(&[
            Interval::new(r(-9, 2), r(1, 1)),
            Interval::ints(-3, 1),
            Interval::ints(-1, 3),
            Interval::ints(2, 6),
            Interval::ints(4, 6),
        ]);
        check(&[]);
    }

    #[test]
    fn labels_survive() {
        let out = unitize(&[("x", Interval::ints(0, 3)), ("y", Interval::ints(3, 3))]).unwrap();
        assert_eq!(out[0].0, "x");
        assert!(out[0].1.intersects(&out[1].1));
    }

    #[test]
    fn claw_is_rejected() {
        let items = [
            Interval::ints(0, 10),
            Interval::ints(1, 2),
            Interval::ints(3, 4),
            Interval::ints(5, 6),
        ];
        assert_eq!(
            unitize_intervals(&items),
            Err(UnitizeError::ClawPresent {
                center: 0,
                leaves: [1, 2, 3]
            })
        );
    }
}
