//! PQ-trees for the consecutive-ones property.
//!
//! A tree over the universe `0..n` represents every permutation of the
//! universe obtainable by permuting the children of P-nodes arbitrarily and
//! reversing the children of Q-nodes. [`PqTree::reduce`] restricts the set to
//! the permutations in which a given subset is consecutive.
//!
//! Reduction is recursive and rebuilds the pertinent part of the tree:
//! `O(size of tree)` per call rather than the amortized linear bound of the
//! bottom-up formulation, which is ample at the sizes used here.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Node {
    Leaf(usize),
    P(Vec<Node>),
    Q(Vec<Node>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Empty,
    Full,
    Partial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqTree {
    root: Option<Node>,
    n: usize,
}

/// Counts `(leaves, marked leaves)` below a node.
fn stats(t: &Node, mark: &[bool]) -> (usize, usize) {
    match t {
        Node::Leaf(x) => (1, mark[*x] as usize),
        Node::P(cs) | Node::Q(cs) => cs.iter().fold((0, 0), |(a, b), c| {
            let (x, y) = stats(c, mark);
            (a + x, b + y)
        }),
    }
}

fn status(t: &Node, mark: &[bool]) -> Status {
    let (size, cnt) = stats(t, mark);
    if cnt == 0 {
        Status::Empty
    } else if cnt == size {
        Status::Full
    } else {
        Status::Partial
    }
}

/// A P-node over `cs`, collapsed when it has a single child.
fn p_node(mut cs: Vec<Node>) -> Node {
    if cs.len() == 1 {
        cs.pop().unwrap()
    } else {
        Node::P(cs)
    }
}

/// A Q-node over `cs`; with two or fewer children it is a P-node.
fn q_node(mut cs: Vec<Node>) -> Node {
    match cs.len() {
        1 => cs.pop().unwrap(),
        2 => Node::P(cs),
        _ => Node::Q(cs),
    }
}

/// Rearranges a partial non-root node as a sequence of homogeneous nodes,
/// empty ones first and full ones last, to be spliced into a Q-node.
fn partial_seq(t: Node, mark: &[bool]) -> Option<Vec<Node>> {
    match t {
        Node::Leaf(_) => unreachable!("leaves are never partial"),
        Node::P(cs) => {
            let mut empty = Vec::new();
            let mut full = Vec::new();
            let mut partial = Vec::new();
            for c in cs {
                match status(&c, mark) {
                    Status::Empty => empty.push(c),
                    Status::Full => full.push(c),
                    Status::Partial => partial.push(c),
                }
            }
            if partial.len() > 1 {
                return None;
            }
            let mut seq = Vec::new();
            if !empty.is_empty() {
                seq.push(p_node(empty));
            }
            if let Some(c) = partial.pop() {
                seq.extend(partial_seq(c, mark)?);
            }
            if !full.is_empty() {
                seq.push(p_node(full));
            }
            Some(seq)
        }
        Node::Q(mut cs) => {
            let st: Vec<Status> = cs.iter().map(|c| status(c, mark)).collect();
            if !q_is_singly_partial(&st) {
                let rev: Vec<Status> = st.iter().rev().copied().collect();
                if !q_is_singly_partial(&rev) {
                    return None;
                }
                cs.reverse();
            }
            let mut seq = Vec::new();
            for c in cs {
                if status(&c, mark) == Status::Partial {
                    seq.extend(partial_seq(c, mark)?);
                } else {
                    seq.push(c);
                }
            }
            Some(seq)
        }
    }
}

/// `Empty* Partial? Full*`.
fn q_is_singly_partial(st: &[Status]) -> bool {
    let mut seen_non_empty = false;
    for &s in st {
        match s {
            Status::Empty if seen_non_empty => return false,
            Status::Empty => {}
            Status::Partial if seen_non_empty => return false,
            _ => seen_non_empty = true,
        }
    }
    true
}

/// Applies the root templates at the pertinent root `t`.
fn reduce_root(t: Node, mark: &[bool]) -> Option<Node> {
    match t {
        Node::Leaf(_) => Some(t),
        Node::P(cs) => {
            let mut empty = Vec::new();
            let mut full = Vec::new();
            let mut partial = Vec::new();
            for c in cs {
                match status(&c, mark) {
                    Status::Empty => empty.push(c),
                    Status::Full => full.push(c),
                    Status::Partial => partial.push(c),
                }
            }
            if partial.is_empty() {
                if empty.is_empty() {
                    return Some(Node::P(full));
                }
                empty.push(p_node(full));
                return Some(p_node(empty));
            }
            if partial.len() > 2 {
                return None;
            }
            let mut seq = partial_seq(partial.remove(0), mark)?;
            if !full.is_empty() {
                seq.push(p_node(full));
            }
            if let Some(c) = partial.pop() {
                let mut tail = partial_seq(c, mark)?;
                tail.reverse();
                seq.extend(tail);
            }
            let q = q_node(seq);
            if empty.is_empty() {
                Some(q)
            } else {
                empty.push(q);
                Some(Node::P(empty))
            }
        }
        Node::Q(cs) => {
            let st: Vec<Status> = cs.iter().map(|c| status(c, mark)).collect();
            let first = st.iter().position(|&s| s != Status::Empty)?;
            let last = st.iter().rposition(|&s| s != Status::Empty)?;
            if st[first + 1..last].iter().any(|&s| s != Status::Full) {
                return None;
            }
            let mut out = Vec::new();
            for (i, c) in cs.into_iter().enumerate() {
                if st[i] != Status::Partial {
                    out.push(c);
                } else if i == first && i != last {
                    out.extend(partial_seq(c, mark)?);
                } else if i == last && i != first {
                    let mut s = partial_seq(c, mark)?;
                    s.reverse();
                    out.extend(s);
                } else {
                    return None;
                }
            }
            Some(Node::Q(out))
        }
    }
}

/// Descends to the deepest node containing every marked leaf and applies
/// the root templates there.
fn reduce_tree(t: Node, mark: &[bool], total: usize) -> Option<Node> {
    let (is_q, mut cs) = match t {
        Node::Leaf(_) => return Some(t),
        Node::P(cs) => (false, cs),
        Node::Q(cs) => (true, cs),
    };
    match cs.iter().position(|c| stats(c, mark).1 == total) {
        Some(i) => {
            let c = core::mem::replace(&mut cs[i], Node::Leaf(usize::MAX));
            cs[i] = reduce_tree(c, mark, total)?;
            Some(if is_q { Node::Q(cs) } else { Node::P(cs) })
        }
        None => reduce_root(if is_q { Node::Q(cs) } else { Node::P(cs) }, mark),
    }
}

impl PqTree {
    /// The universal tree over `0..n`.
    pub fn new(n: usize) -> PqTree {
        let root = match n {
            0 => None,
            1 => Some(Node::Leaf(0)),
            _ => Some(Node::P((0..n).map(Node::Leaf).collect())),
        };
        PqTree { root, n }
    }

    /// Restricts to permutations where `set` is consecutive. Returns `false`
    /// (leaving the tree unchanged) when no represented permutation
    /// qualifies.
    pub fn reduce(&mut self, set: &[usize]) -> bool {
        let mut mark = vec![false; self.n];
        let mut total = 0;
        for &x in set {
            assert!(x < self.n, "element {} outside the universe", x);
            if !mark[x] {
                mark[x] = true;
                total += 1;
            }
        }
        if total <= 1 {
            return true;
        }
        let root = self.root.take().expect("nonempty universe");
        match reduce_tree(root.clone(), &mark, total) {
            Some(t) => {
                self.root = Some(t);
                true
            }
            None => {
                self.root = Some(root);
                false
            }
        }
    }

    /// One permutation represented by the tree (the left-to-right leaves).
    pub fn frontier(&self) -> Vec<usize> {
        fn walk(t: &Node, out: &mut Vec<usize>) {
            match t {
                Node::Leaf(x) => out.push(*x),
                Node::P(cs) | Node::Q(cs) => cs.iter().for_each(|c| walk(c, out)),
            }
        }
        let mut out = Vec::with_capacity(self.n);
        if let Some(r) = &self.root {
            walk(r, &mut out);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
            if cur.len() == used.len() {
                out.push(cur.clone());
                return;
            }
            for x in 0..used.len() {
                if !used[x] {
                    used[x] = true;
                    cur.push(x);
                    go(cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    /// Every frontier the tree can produce.
    fn represented(t: &Node) -> BTreeSet<Vec<usize>> {
        match t {
            Node::Leaf(x) => [vec![*x]].into_iter().collect(),
            Node::P(cs) => {
                let subs: Vec<BTreeSet<Vec<usize>>> = cs.iter().map(represented).collect();
                let mut out = BTreeSet::new();
                for p in all_perms(cs.len()) {
                    let mut acc: BTreeSet<Vec<usize>> = [Vec::new()].into_iter().collect();
                    for &i in &p {
                        acc = acc
                            .iter()
                            .flat_map(|a| {
                                subs[i].iter().map(move |s| {
                                    let mut v = a.clone();
                                    v.extend(s);
                                    v
                                })
                            })
                            .collect();
                    }
                    out.extend(acc);
                }
                out
            }
            Node::Q(cs) => {
                let subs: Vec<BTreeSet<Vec<usize>>> = cs.iter().map(represented).collect();
                let mut out = BTreeSet::new();
                for rev in [false, true] {
                    let mut idx: Vec<usize> = (0..cs.len()).collect();
                    if rev {
                        idx.reverse();
                    }
                    let mut acc: BTreeSet<Vec<usize>> = [Vec::new()].into_iter().collect();
                    for &i in &idx {
                        acc = acc
                            .iter()
                            .flat_map(|a| {
                                subs[i].iter().map(move |s| {
                                    let mut v = a.clone();
                                    v.extend(s);
                                    v
                                })
                            })
                            .collect();
                    }
                    out.extend(acc);
                }
                out
            }
        }
    }

    fn consecutive(p: &[usize], set: &[usize]) -> bool {
        let pos: Vec<usize> = set
            .iter()
            .map(|&x| p.iter().position(|&y| y == x).unwrap())
            .collect();
        let lo = *pos.iter().min().unwrap();
        let hi = *pos.iter().max().unwrap();
        hi - lo + 1 == set.len()
    }

    #[test]
    fn matches_brute_force_on_random_constraints() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for round in 0..400 {
            let n = 2 + round % 5;
            let mut tree = PqTree::new(n);
            let mut alive: Vec<Vec<usize>> = all_perms(n);
            for _ in 0..rng.gen_range(1..5) {
                let set: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.45)).collect();
                if set.is_empty() {
                    continue;
                }
                let next: Vec<Vec<usize>> = alive
                    .iter()
                    .filter(|p| consecutive(p, &set))
                    .cloned()
                    .collect();
                let ok = tree.reduce(&set);
                assert_eq!(ok, !next.is_empty(), "set {:?} on {:?}", set, tree);
                if ok {
                    alive = next;
                }
                let got = represented(tree.root.as_ref().unwrap());
                let want: BTreeSet<Vec<usize>> = alive.iter().cloned().collect();
                assert_eq!(got, want, "after {:?}", set);
            }
        }
    }

    #[test]
    fn frontier_respects_constraints() {
        let mut t = PqTree::new(6);
        for s in [[0, 3].as_slice(), &[3, 5], &[1, 2, 4], &[2, 4]] {
            assert!(t.reduce(s));
        }
        let f = t.frontier();
        for s in [[0, 3].as_slice(), &[3, 5], &[1, 2, 4], &[2, 4]] {
            assert!(consecutive(&f, s));
        }
        assert!(!t.reduce(&[0, 5]));
        assert_eq!(t.frontier(), f);
    }
}
