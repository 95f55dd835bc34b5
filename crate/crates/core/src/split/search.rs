//! Backtracking over split decisions and representative pairs.
//!
//! Vertices are placed one at a time in [`branch_order`]. Placing `v` first
//! decides whether it splits (and, in non-disjoint mode, whether its two
//! representatives touch), then chooses the representative pairs of every
//! edge from `v` to an earlier vertex. After each edge choice the part of
//! `G'` whose adjacencies are all decided is tested for unit interval
//! membership; since that class is hereditary, a failure refutes the whole
//! branch.

use alloc::vec;
use alloc::vec::Vec;

use super::bits::{is_unit_interval, Mask, MAX_BITS};
use super::{
    Clock, Decision, Mode, NoClock, Observer, PruneRule, Pruning, SearchLimits, SearchOptions,
    SearchOutcome, SearchResult, SearchStats, Silent, SplitError, SplitSolution,
};
use crate::graph::{has_induced_star, maximal_claws, Graph, Vertex};

const MAX_VERTICES: usize = MAX_BITS / 2;

/// Edge pair masks, fewest pairs first.
const OPTIONS: [u8; 15] = [1, 2, 4, 8, 3, 5, 6, 9, 10, 12, 7, 11, 13, 14, 15];

/// Placement order: most maximal 3-claws centered at the vertex first, then
/// most already placed neighbours, then degree, then smallest id.
pub fn branch_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut claws = vec![0usize; n + 1];
    for w in maximal_claws(g, 3) {
        claws[w.center] += 1;
    }
    let mut placed = vec![false; n + 1];
    let mut seen = vec![0usize; n + 1];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = g
            .vertices()
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (claws[v], seen[v], g.degree(v), core::cmp::Reverse(v)))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            seen[w] += 1;
        }
    }
    order
}

/// Decides membership with default plumbing: no clock, no log, one worker.
pub fn search_split(
    g: &Graph,
    mode: Mode,
    limits: SearchLimits,
) -> Result<SearchResult, SplitError> {
    search_split_with(
        g,
        mode,
        limits,
        &NoClock,
        &mut Silent,
        SearchOptions::default(),
    )
}

pub fn search_split_with(
    g: &Graph,
    mode: Mode,
    limits: SearchLimits,
    clock: &dyn Clock,
    observer: &mut dyn Observer,
    options: SearchOptions,
) -> Result<SearchResult, SplitError> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(SplitError::TooLarge {
            n,
            max: MAX_VERTICES,
        });
    }
    let mut stats = SearchStats::default();
    if options.pruning.stars && has_induced_star(g, 5).is_some() {
        stats.prunes[PruneRule::StarFive as usize] += 1;
        if observer.enabled() {
            observer.record(0, &Decision::Root, PruneRule::StarFive);
        }
        return Ok(SearchResult {
            outcome: SearchOutcome::No,
            stats,
        });
    }
    let mut engine = Engine::new(g, mode, limits, clock, observer, options);
    engine.stats = stats;
    let outcome = match engine.dfs(0) {
        Flow::Found => SearchOutcome::Yes(engine.found.take().unwrap()),
        Flow::Fail => SearchOutcome::No,
        Flow::Stop => SearchOutcome::Exhausted,
    };
    if let SearchOutcome::Yes(s) = &outcome {
        debug_assert!(super::verify_split(g, s, mode).ok());
    }
    Ok(SearchResult {
        outcome,
        stats: engine.stats,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Flow {
    Found,
    Fail,
    Stop,
}

#[derive(Debug, Clone, Copy)]
enum Step {
    Vertex(usize),
    /// Edge index.
    Edge(usize),
}

fn rep(v: usize, i: usize) -> usize {
    2 * v + i
}

/// Which representatives of the edge's endpoint `a` (resp. `b`) a pair
/// mask uses, as a 2-bit set.
fn side_a(mask: u8) -> u8 {
    (mask & 3 != 0) as u8 | ((mask & 12 != 0) as u8) << 1
}

fn side_b(mask: u8) -> u8 {
    (mask & 5 != 0) as u8 | ((mask & 10 != 0) as u8) << 1
}

fn swap_a(mask: u8) -> u8 {
    (mask & 3) << 2 | (mask & 12) >> 2
}

fn swap_b(mask: u8) -> u8 {
    (mask & 5) << 1 | (mask & 10) >> 1
}

struct Engine<'a> {
    g: &'a Graph,
    mode: Mode,
    limits: SearchLimits,
    clock: &'a dyn Clock,
    observer: &'a mut dyn Observer,
    partition: super::Partition,
    pruning: Pruning,
    part_depth: usize,
    part_counter: u64,
    stats: SearchStats,

    steps: Vec<Step>,
    /// Endpoints (0-based, `a < b`).
    edges: Vec<(usize, usize)>,
    /// Largest number of pairs an edge may take.
    cap: Vec<(u32, PruneRule)>,
    forced_split: Vec<bool>,
    never_split: Vec<bool>,
    incident: Vec<Vec<usize>>,
    /// Representatives left out of the unit interval test at each step.
    exclude: Vec<Mask>,
    /// Vertices whose last incident edge is decided at each step.
    complete_at: Vec<Vec<usize>>,
    /// Vertices whose first incident edge is decided at each step.
    first_at: Vec<Vec<usize>>,

    adj: Vec<Mask>,
    active: Mask,
    split: Vec<bool>,
    internal: Vec<bool>,
    choice: Vec<u8>,
    found: Option<SplitSolution>,
    /// Graph adjacency as bitmasks, 0-based.
    nbm: Vec<u64>,
    /// Vertices attached to each representative by decided edges.
    att: Vec<[u64; 2]>,
    /// Neighbours whose edge is decided.
    decided: Vec<u64>,
}

impl<'a> Engine<'a> {
    fn new(
        g: &'a Graph,
        mode: Mode,
        limits: SearchLimits,
        clock: &'a dyn Clock,
        observer: &'a mut dyn Observer,
        options: SearchOptions,
    ) -> Engine<'a> {
        let n = g.n();
        let (partition, pruning) = (options.partition, options.pruning);
        let nbm: Vec<u64> = (1..=n)
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << (w - 1)))
            .collect();
        let mut edges = Vec::new();
        let mut edge_id = vec![vec![usize::MAX; n]; n];
        for (u, v) in g.edges() {
            edge_id[u - 1][v - 1] = edges.len();
            edge_id[v - 1][u - 1] = edges.len();
            edges.push((u - 1, v - 1));
        }
        let mut cap = vec![(4u32, PruneRule::FourPairs); edges.len()];
        let mut forced_split = vec![false; n];
        for c in 0..n {
            let nb: Vec<usize> = (0..n).filter(|&w| nbm[c] >> w & 1 == 1).collect();
            let stars = |size: usize, f: &mut dyn FnMut(&[usize])| {
                independent_sets(&nb, &nbm, size, f);
            };
            stars(3, &mut |ls| {
                forced_split[c] = pruning.stars;
                if mode == Mode::Disjoint && pruning.pair_caps {
                    for &l in ls {
                        let e = edge_id[c][l];
                        if cap[e].0 > 2 {
                            cap[e] = (2, PruneRule::StarThreeEdge);
                        }
                    }
                }
            });
            if mode == Mode::Disjoint && pruning.pair_caps {
                stars(4, &mut |ls| {
                    for &l in ls {
                        cap[edge_id[c][l]] = (1, PruneRule::StarFourEdge);
                    }
                });
            }
        }
        if mode == Mode::Disjoint && pruning.pair_caps {
            for c in cap.iter_mut().filter(|c| c.0 == 4) {
                *c = (3, PruneRule::FourPairs);
            }
        }
        let never_split: Vec<bool> = (1..=n).map(|v| pruning.stars && g.degree(v) < 2).collect();

        let order: Vec<usize> = branch_order(g).into_iter().map(|v| v - 1).collect();
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut steps = Vec::new();
        let mut exclude = Vec::new();
        let mut incident = vec![Vec::new(); n];
        for &v in &order {
            steps.push(Step::Vertex(v));
            exclude.push(0);
            let mut earlier: Vec<usize> = (0..n)
                .filter(|&u| nbm[v] >> u & 1 == 1 && pos[u] < pos[v])
                .collect();
            earlier.sort_by_key(|&u| pos[u]);
            for (k, &u) in earlier.iter().enumerate() {
                let e = edge_id[u][v];
                steps.push(Step::Edge(e));
                incident[u].push(e);
                incident[v].push(e);
                exclude.push(
                    earlier[k + 1..]
                        .iter()
                        .fold(0 as Mask, |m, &w| m | 3 << rep(w, 0)),
                );
            }
        }
        let mut complete_at = vec![Vec::new(); steps.len()];
        let mut first_at = vec![Vec::new(); steps.len()];
        let mut first = vec![usize::MAX; n];
        let mut last = vec![usize::MAX; n];
        for (s, step) in steps.iter().enumerate() {
            if let Step::Edge(e) = *step {
                let (a, b) = edges[e];
                for x in [a, b] {
                    if first[x] == usize::MAX {
                        first[x] = s;
                    }
                    last[x] = s;
                }
            }
        }
        for x in 0..n {
            if first[x] != usize::MAX {
                first_at[first[x]].push(x);
                complete_at[last[x]].push(x);
            }
        }

        // Partition at the first step whose static fan-out reaches the
        // worker count a few times over.
        let mut part_depth = steps.len();
        if partition.count > 1 {
            let mut width = 1u64;
            for (s, step) in steps.iter().enumerate() {
                width = width.saturating_mul(match *step {
                    Step::Vertex(v) if never_split[v] => 1,
                    Step::Vertex(_) => 2,
                    Step::Edge(e) => cap[e].0 as u64 + 1,
                });
                if width >= 8 * partition.count as u64 {
                    part_depth = s + 1;
                    break;
                }
            }
        }

        Engine {
            g,
            mode,
            limits,
            clock,
            observer,
            partition,
            pruning,
            part_depth,
            part_counter: 0,
            stats: SearchStats::default(),
            steps,
            edges,
            cap,
            forced_split,
            never_split,
            incident,
            exclude,
            complete_at,
            first_at,
            adj: vec![0; 2 * n],
            active: 0,
            split: vec![false; n],
            internal: vec![false; n],
            choice: vec![0; g.edge_count()],
            found: None,
            nbm,
            att: vec![[0; 2]; n],
            decided: vec![0; n],
        }
    }

    fn prune(&mut self, depth: usize, d: Decision, rule: PruneRule) {
        self.stats.prunes[rule as usize] += 1;
        if self.observer.enabled() {
            self.observer.record(depth, &d, rule);
        }
    }

    fn tick(&mut self) -> bool {
        self.stats.nodes += 1;
        if self.stats.nodes > self.limits.node_budget {
            return false;
        }
        if self.stats.nodes & 1023 == 0 {
            if self.clock.cancelled() {
                return false;
            }
            if let Some(t) = self.limits.time_budget_ms {
                if self.clock.elapsed_ms() > t {
                    return false;
                }
            }
        }
        true
    }

    fn dfs(&mut self, s: usize) -> Flow {
        if s == self.part_depth {
            self.part_counter += 1;
            if (self.part_counter - 1) % self.partition.count as u64 != self.partition.index as u64
            {
                return Flow::Fail;
            }
        }
        if s == self.steps.len() {
            return if is_unit_interval(&self.adj, self.active) {
                self.found = Some(self.solution());
                Flow::Found
            } else {
                Flow::Fail
            };
        }
        match self.steps[s] {
            Step::Vertex(v) => self.place_vertex(s, v),
            Step::Edge(e) => self.place_edge(s, e),
        }
    }

    fn place_vertex(&mut self, s: usize, v: usize) -> Flow {
        let id = v + 1;
        let choices: &[(bool, bool)] = match self.mode {
            Mode::Disjoint => &[(false, false), (true, false)],
            Mode::NonDisjoint => &[(false, false), (true, false), (true, true)],
        };
        for &(split, internal) in choices {
            let d = Decision::Vertex {
                v: id,
                split,
                internal,
            };
            if !split && self.forced_split[v] {
                self.prune(s, d, PruneRule::ClawCenter);
                continue;
            }
            if split && self.never_split[v] {
                self.prune(s, d, PruneRule::LowDegree);
                continue;
            }
            if !self.tick() {
                return Flow::Stop;
            }
            self.split[v] = split;
            self.internal[v] = internal;
            self.active |= 1 << rep(v, 0);
            if split {
                self.active |= 1 << rep(v, 1);
            }
            if internal {
                self.adj[rep(v, 0)] |= 1 << rep(v, 1);
                self.adj[rep(v, 1)] |= 1 << rep(v, 0);
            }
            let flow = self.dfs(s + 1);
            self.active &= !(3 << rep(v, 0));
            self.adj[rep(v, 0)] = 0;
            self.adj[rep(v, 1)] = 0;
            self.split[v] = false;
            self.internal[v] = false;
            if flow != Flow::Fail {
                return flow;
            }
        }
        Flow::Fail
    }

    fn place_edge(&mut self, s: usize, e: usize) -> Flow {
        let (a, b) = self.edges[e];
        let avail_a: u8 = if self.split[a] { 3 } else { 1 };
        let avail_b: u8 = if self.split[b] { 3 } else { 1 };
        let sym_a = self.pruning.symmetry && self.split[a] && self.first_at[s].contains(&a);
        let sym_b = self.pruning.symmetry && self.split[b] && self.first_at[s].contains(&b);
        for &mask in &OPTIONS {
            if side_a(mask) & !avail_a != 0 || side_b(mask) & !avail_b != 0 {
                continue;
            }
            let d = Decision::Edge {
                u: a + 1,
                v: b + 1,
                pairs: mask,
            };
            let (cap, rule) = self.cap[e];
            if mask.count_ones() > cap {
                self.prune(s, d, rule);
                continue;
            }
            if sym_a || sym_b {
                let mut least = mask;
                if sym_a {
                    least = least.min(swap_a(mask));
                }
                if sym_b {
                    least = least.min(swap_b(mask));
                }
                if sym_a && sym_b {
                    least = least.min(swap_a(swap_b(mask)));
                }
                if least != mask {
                    self.prune(s, d, PruneRule::Symmetry);
                    continue;
                }
            }
            if !self.tick() {
                return Flow::Stop;
            }
            self.choice[e] = mask;
            self.toggle(a, b, mask);
            self.attach(a, b, mask, true);
            let flow = if self.pruning.lookahead && (!self.lookahead(a) || !self.lookahead(b)) {
                self.prune(s, d, PruneRule::ClawLookahead);
                Flow::Fail
            } else if !is_unit_interval(&self.adj, self.active & !self.exclude[s]) {
                self.prune(s, d, PruneRule::NotUnitInterval);
                Flow::Fail
            } else if self.pruning.canonical
                && !self.complete_at[s].iter().all(|&x| self.essential(x))
            {
                self.prune(s, d, PruneRule::Canonical);
                Flow::Fail
            } else {
                self.dfs(s + 1)
            };
            self.attach(a, b, mask, false);
            self.toggle(a, b, mask);
            self.choice[e] = 0;
            if flow != Flow::Fail {
                return flow;
            }
        }
        Flow::Fail
    }

    fn toggle(&mut self, a: usize, b: usize, mask: u8) {
        for bit in 0..4 {
            if mask >> bit & 1 == 1 {
                let (ra, rb) = (rep(a, bit / 2), rep(b, bit % 2));
                self.adj[ra] ^= 1 << rb;
                self.adj[rb] ^= 1 << ra;
            }
        }
    }

    fn attach(&mut self, a: usize, b: usize, mask: u8, on: bool) {
        let (sa, sb) = (side_a(mask), side_b(mask));
        for i in 0..2 {
            if sa >> i & 1 == 1 {
                self.att[a][i] ^= 1 << b;
            }
            if sb >> i & 1 == 1 {
                self.att[b][i] ^= 1 << a;
            }
        }
        if on {
            self.decided[a] |= 1 << b;
            self.decided[b] |= 1 << a;
        } else {
            self.decided[a] &= !(1 << b);
            self.decided[b] &= !(1 << a);
        }
    }

    /// Claw lookahead at a split vertex `x`. A representative attached to
    /// two non-adjacent vertices cannot take a further neighbour adjacent to
    /// neither, so that neighbour is pushed to the sibling. Fails when some
    /// neighbour fits neither representative, or a representative is forced
    /// to three pairwise non-adjacent vertices.
    fn lookahead(&self, x: usize) -> bool {
        if !self.split[x] {
            return true;
        }
        let open = self.nbm[x] & !self.decided[x];
        let mut set = self.att[x];
        loop {
            let b0 = self.blocked(set[0], open);
            let b1 = self.blocked(set[1], open);
            if b0 & b1 != 0 {
                return false;
            }
            let next = [set[0] | b1, set[1] | b0];
            if self.has_independent_triple(next[0]) || self.has_independent_triple(next[1]) {
                return false;
            }
            if next == set {
                return self.colorable(set, open & !set[0] & !set[1]);
            }
            set = next;
        }
    }

    /// Whether the `rest` can be distributed over the two representatives
    /// without an independent triple on either side.
    fn colorable(&self, set: [u64; 2], rest: u64) -> bool {
        if rest == 0 {
            return true;
        }
        let w = rest.trailing_zeros() as u64;
        let rest = rest & (rest - 1);
        (0..2).any(|i| {
            let mut next = set;
            next[i] |= 1 << w;
            !self.has_independent_triple(next[i]) && self.colorable(next, rest)
        })
    }

    /// Members of `cands` non-adjacent to two non-adjacent members of `s`.
    fn blocked(&self, s: u64, cands: u64) -> u64 {
        let mut out = 0;
        let mut c = cands & !s;
        while c != 0 {
            let w = c.trailing_zeros() as usize;
            c &= c - 1;
            if self.has_independent_pair(s & !self.nbm[w]) {
                out |= 1 << w;
            }
        }
        out
    }

    fn has_independent_pair(&self, s: u64) -> bool {
        let mut c = s;
        while c != 0 {
            let a = c.trailing_zeros() as usize;
            c &= c - 1;
            if c & !self.nbm[a] != 0 {
                return true;
            }
        }
        false
    }

    fn has_independent_triple(&self, s: u64) -> bool {
        let mut c = s;
        while c != 0 {
            let a = c.trailing_zeros() as usize;
            c &= c - 1;
            if self.has_independent_pair(c & !self.nbm[a]) {
                return true;
            }
        }
        false
    }

    /// Whether each representative of `x` realizes some edge on its own.
    fn essential(&self, x: usize) -> bool {
        if !self.split[x] {
            return true;
        }
        let mut alone = 0u8;
        for &e in &self.incident[x] {
            let (a, _) = self.edges[e];
            let used = if a == x {
                side_a(self.choice[e])
            } else {
                side_b(self.choice[e])
            };
            if used != 3 {
                alone |= used;
            }
        }
        alone == 3
    }

    fn solution(&self) -> SplitSolution {
        let mut s = SplitSolution::default();
        for v in 0..self.g.n() {
            if self.split[v] {
                s.split.insert(v + 1);
            }
            if self.internal[v] {
                s.internal_edges.insert(v + 1);
            }
        }
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            let pairs = (0..4u8)
                .filter(|bit| self.choice[e] >> bit & 1 == 1)
                .map(|bit| (bit / 2 + 1, bit % 2 + 1))
                .collect();
            s.rep_edges.insert((a + 1, b + 1), pairs);
        }
        s
    }
}

/// Calls `f` on every independent `size`-subset of `cands` (0-based ids,
/// adjacency as bitmasks).
fn independent_sets(cands: &[usize], nbm: &[u64], size: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(
        cands: &[usize],
        nbm: &[u64],
        from: usize,
        chosen: &mut Vec<usize>,
        size: usize,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if chosen.len() == size {
            f(chosen);
            return;
        }
        for i in from..cands.len() {
            let c = cands[i];
            if chosen.iter().all(|&x| nbm[x] >> c & 1 == 0) {
                chosen.push(c);
                go(cands, nbm, i + 1, chosen, size, f);
                chosen.pop();
            }
        }
    }
    go(cands, nbm, 0, &mut Vec::with_capacity(size), size, f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::counterexample_graph;

    #[test]
    fn order_starts_with_claw_centers() {
        let g = counterexample_graph(0).unwrap();
        let order = branch_order(&g);
        let mut head = order[..5].to_vec();
        head.sort_unstable();
        assert_eq!(head, vec![1, 3, 7, 8, 10]);
    }

    #[test]
    fn mask_helpers() {
        assert_eq!(side_a(0b0110), 3);
        assert_eq!(side_b(0b0100), 1);
        assert_eq!(swap_a(0b0001), 0b0100);
        assert_eq!(swap_b(0b0001), 0b0010);
    }
}
