//! Lexicographic breadth-first search by partition refinement, and the
//! three-sweep proper interval ordering.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};

/// Ordered partition of the unvisited vertices. Cells form a doubly linked
/// list; members of a cell are unordered.
struct Partition {
    members: Vec<Vec<Vertex>>,
    prev: Vec<usize>,
    next: Vec<usize>,
    head: usize,
    cell_of: Vec<usize>,
    slot: Vec<usize>,
}

const NIL: usize = usize::MAX;

impl Partition {
    fn new(n: usize, groups: &[Vec<Vertex>]) -> Partition {
        let mut p = Partition {
            members: Vec::new(),
            prev: Vec::new(),
            next: Vec::new(),
            head: NIL,
            cell_of: vec![NIL; n + 1],
            slot: vec![0; n + 1],
        };
        let mut last = NIL;
        for g in groups {
            let c = p.members.len();
            for (i, &v) in g.iter().enumerate() {
                p.cell_of[v] = c;
                p.slot[v] = i;
            }
            p.members.push(g.clone());
            p.prev.push(last);
            p.next.push(NIL);
            if last == NIL {
                p.head = c;
            } else {
                p.next[last] = c;
            }
            last = c;
        }
        p
    }

    fn remove(&mut self, v: Vertex) {
        let c = self.cell_of[v];
        let i = self.slot[v];
        self.members[c].swap_remove(i);
        if let Some(&w) = self.members[c].get(i) {
            self.slot[w] = i;
        }
        self.cell_of[v] = NIL;
        if self.members[c].is_empty() {
            self.unlink(c);
        }
    }

    fn unlink(&mut self, c: usize) {
        let (p, n) = (self.prev[c], self.next[c]);
        if p == NIL {
            self.head = n;
        } else {
            self.next[p] = n;
        }
        if n != NIL {
            self.prev[n] = p;
        }
    }

    /// New empty cell just before `c`.
    fn insert_before(&mut self, c: usize) -> usize {
        let id = self.members.len();
        self.members.push(Vec::new());
        let p = self.prev[c];
        self.prev.push(p);
        self.next.push(c);
        self.prev[c] = id;
        if p == NIL {
            self.head = id;
        } else {
            self.next[p] = id;
        }
        id
    }
}

/// LexBFS order of all vertices. Components are searched one after the
/// other in order of their smallest vertex. Ties inside the first cell go
/// to the vertex with the largest `priority`.
pub fn lexbfs_by(g: &Graph, priority: &[usize]) -> Vec<Vertex> {
    let n = g.n();
    let mut groups = g.components();
    for grp in groups.iter_mut() {
        grp.sort_unstable_by_key(|&v| core::cmp::Reverse(priority[v]));
    }
    let mut part = Partition::new(n, &groups);
    let mut order = Vec::with_capacity(n);
    let mut split_into: Vec<usize> = vec![NIL; 0];
    while part.head != NIL {
        let c = part.head;
        let v = *part.members[c]
            .iter()
            .max_by_key(|&&u| priority[u])
            .expect("cells in the list are nonempty");
        part.remove(v);
        order.push(v);
        // Move unvisited neighbours of v to a fresh cell ahead of their cell.
        let mut touched: Vec<(usize, usize)> = Vec::new();
        for &w in g.neighbors(v) {
            let cw = part.cell_of[w];
            if cw == NIL {
                continue;
            }
            if split_into.len() < part.members.len() {
                split_into.resize(part.members.len(), NIL);
            }
            let target = match split_into[cw] {
                NIL => {
                    let t = part.insert_before(cw);
                    split_into.resize(part.members.len(), NIL);
                    split_into[cw] = t;
                    touched.push((cw, t));
                    t
                }
                t => t,
            };
            part.remove(w);
            part.cell_of[w] = target;
            part.slot[w] = part.members[target].len();
            part.members[target].push(w);
        }
        for (cw, _) in touched {
            split_into[cw] = NIL;
        }
    }
    order
}

/// Plain LexBFS, ties broken towards smaller ids.
pub fn lexbfs(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let priority: Vec<usize> = (0..=n).map(|v| n + 1 - v).collect();
    lexbfs_by(g, &priority)
}

/// LexBFS+: ties go to the vertex appearing last in `prev`.
pub fn lexbfs_plus(g: &Graph, prev: &[Vertex]) -> Vec<Vertex> {
    let mut priority = vec![0; g.n() + 1];
    for (i, &v) in prev.iter().enumerate() {
        priority[v] = i + 1;
    }
    lexbfs_by(g, &priority)
}

/// A vertex order in which every closed neighbourhood is a contiguous block.
/// Such an order exists exactly for proper (unit) interval graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperOrder {
    pub order: Vec<Vertex>,
}

impl ProperOrder {
    /// Position of every vertex, indexed by vertex id.
    pub fn positions(&self) -> Vec<usize> {
        let n = self.order.len();
        let mut pos = vec![usize::MAX; n + 1];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Whether every closed neighbourhood is consecutive in `order`.
pub fn is_proper_order(g: &Graph, order: &[Vertex]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n + 1];
    for (i, &v) in order.iter().enumerate() {
        if v == 0 || v > n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    g.vertices().all(|v| {
        let (mut lo, mut hi) = (pos[v], pos[v]);
        for &w in g.neighbors(v) {
            lo = lo.min(pos[w]);
            hi = hi.max(pos[w]);
        }
        hi - lo == g.degree(v)
    })
}

/// Proper ordering of a unit interval graph by three LexBFS sweeps (LexBFS,
/// then LexBFS+ twice), checked directly. `None` when the graph is not a
/// unit interval graph.
pub fn recognize_proper_order(g: &Graph) -> Option<ProperOrder> {
    let s1 = lexbfs(g);
    let s2 = lexbfs_plus(g, &s1);
    let s3 = lexbfs_plus(g, &s2);
    is_proper_order(g, &s3).then_some(ProperOrder { order: s3 })
}
