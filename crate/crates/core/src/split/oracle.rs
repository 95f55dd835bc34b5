//! Reference decision procedure, sharing nothing with the search but the
//! graph type.
//!
//! A graph is unit interval iff its vertices have an order in which the
//! earlier neighbours of every vertex form a contiguous block ending right
//! before it, with block starts nondecreasing. The oracle builds such an
//! order of representatives directly: each step appends the next
//! representative of some vertex and picks where its block starts. Every
//! vertex gets one or two representatives. It answers yes once every vertex
//! is present and every edge of the graph is realized.

use alloc::vec;
use alloc::vec::Vec;

use super::Mode;
use crate::graph::Graph;

/// Exhaustive answer for small graphs (intended for `n <= 8`).
pub fn brute_force_oracle(g: &Graph, mode: Mode) -> bool {
    let n = g.n();
    let mut st = State {
        g,
        mode,
        n,
        seq: Vec::new(),
        start: Vec::new(),
        comp_head: Vec::new(),
        count: vec![0; n],
        cover: vec![vec![0; n]; n],
        uncovered: g.edge_count(),
        absent: n,
    };
    st.extend()
}

struct State<'a> {
    g: &'a Graph,
    mode: Mode,
    n: usize,
    /// Representatives in order, as (vertex, index).
    seq: Vec<(usize, u8)>,
    /// Block start of each position.
    start: Vec<usize>,
    /// First representative of the current run of components, per position.
    comp_head: Vec<(usize, u8)>,
    count: Vec<u8>,
    cover: Vec<Vec<u32>>,
    uncovered: usize,
    absent: usize,
}

impl State<'_> {
    fn allowed(&self, v: usize, w: usize) -> bool {
        if v == w {
            self.mode == Mode::NonDisjoint
        } else {
            self.g.has_edge(v + 1, w + 1)
        }
    }

    fn extend(&mut self) -> bool {
        if self.absent == 0 && self.uncovered == 0 {
            return true;
        }
        if self.dead() {
            return false;
        }
        let j = self.seq.len();
        let lo = self.start.last().copied().unwrap_or(0);
        for v in 0..self.n {
            if self.count[v] == 2 {
                continue;
            }
            let r = (v, self.count[v] + 1);
            // Block [l, j): shrink l while the block stays admissible.
            let mut l = j;
            loop {
                // Components may come in any order: a new component must
                // start with a representative above the previous one's.
                let fresh = l == j;
                let ok = !fresh || self.comp_head.last().is_none_or(|&h| r > h);
                if ok {
                    self.push(r, l);
                    if self.extend() {
                        return true;
                    }
                    self.pop();
                }
                if l == lo || !self.allowed(v, self.seq[l - 1].0) {
                    break;
                }
                l -= 1;
            }
        }
        false
    }

    /// Some uncovered edge can no longer be realized: one endpoint has both
    /// representatives placed and none of them can gain a neighbour.
    fn dead(&self) -> bool {
        let j = self.seq.len();
        let lo = self.start.last().copied().unwrap_or(0);
        let mut open = vec![false; self.n];
        for &(w, _) in &self.seq[lo.min(j)..] {
            open[w] = true;
        }
        for (u, v) in self.g.edges() {
            let (u, v) = (u - 1, v - 1);
            if self.cover[u][v] == 0 {
                let closed = |x: usize| self.count[x] == 2 && !open[x];
                if closed(u) || closed(v) {
                    return true;
                }
            }
        }
        false
    }

    fn push(&mut self, r: (usize, u8), l: usize) {
        let j = self.seq.len();
        let v = r.0;
        if r.1 == 1 {
            self.absent -= 1;
        }
        self.count[v] += 1;
        for p in l..j {
            let w = self.seq[p].0;
            if w != v {
                if self.cover[v][w] == 0 {
                    self.uncovered -= 1;
                }
                self.cover[v][w] += 1;
                self.cover[w][v] += 1;
            }
        }
        self.seq.push(r);
        self.start.push(l);
        if l == j {
            self.comp_head.push(r);
        }
    }

    fn pop(&mut self) {
        let r = self.seq.pop().unwrap();
        let l = self.start.pop().unwrap();
        let j = self.seq.len();
        if l == j {
            self.comp_head.pop();
        }
        let v = r.0;
        for p in l..j {
            let w = self.seq[p].0;
            if w != v {
                self.cover[v][w] -= 1;
                self.cover[w][v] -= 1;
                if self.cover[v][w] == 0 {
                    self.uncovered += 1;
                }
            }
        }
        self.count[v] -= 1;
        if r.1 == 1 {
            self.absent += 1;
        }
    }
}
