//! Disjoint and non-disjoint unit 2-interval membership by vertex splitting.
//!
//! A graph `G` is a (disjoint) unit 2-interval graph iff some vertices can be
//! replaced by two representatives `v_1, v_2` such that the resulting graph
//! `G'` on representatives is a unit interval graph, every edge `uv` of `G`
//! is realized by at least one representative pair, non-edges by none, and
//! (disjoint mode) siblings are never adjacent. [`search_split`] decides this
//! by backtracking over split decisions and representative assignments;
//! [`brute_force_oracle`] decides it by an unrelated enumeration of proper
//! orders and serves as ground truth in tests.

mod bits;
mod oracle;
mod search;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, Vertex};
use crate::recognition::recognize_proper_order;

pub use oracle::brute_force_oracle;
pub use search::{branch_order, search_split, search_split_with};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Siblings must not be adjacent.
    Disjoint,
    /// Siblings may be adjacent (the internal edge).
    NonDisjoint,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Disjoint => "disjoint",
            Mode::NonDisjoint => "nondisjoint",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl core::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Mode, String> {
        match s {
            "disjoint" => Ok(Mode::Disjoint),
            "nondisjoint" | "non-disjoint" => Ok(Mode::NonDisjoint),
            _ => Err(format!("unknown mode `{}`", s)),
        }
    }
}

/// A split certificate. Representatives are numbered 1 and 2; an unsplit
/// vertex only has representative 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SplitSolution {
    pub split: BTreeSet<Vertex>,
    /// For each edge `(u, v)` with `u < v`: pairs `(i, j)` meaning `u_i v_j`.
    pub rep_edges: BTreeMap<(Vertex, Vertex), Vec<(u8, u8)>>,
    /// Split vertices whose two representatives are adjacent.
    pub internal_edges: BTreeSet<Vertex>,
}

impl SplitSolution {
    pub fn is_split(&self, v: Vertex) -> bool {
        self.split.contains(&v)
    }

    pub fn reps(&self, v: Vertex) -> u8 {
        if self.is_split(v) {
            2
        } else {
            1
        }
    }

    /// Representatives `(v, i)` of the `n` vertices, in vertex order.
    pub fn representatives(&self, n: usize) -> Vec<(Vertex, u8)> {
        (1..=n)
            .flat_map(|v| (1..=self.reps(v)).map(move |i| (v, i)))
            .collect()
    }

    /// Neighbours in `G'` of representative `(v, i)`.
    pub fn rep_neighbors(&self, v: Vertex, i: u8) -> Vec<(Vertex, u8)> {
        let mut out = Vec::new();
        for (&(a, b), pairs) in &self.rep_edges {
            for &(x, y) in pairs {
                if a == v && x == i {
                    out.push((b, y));
                }
                if b == v && y == i {
                    out.push((a, x));
                }
            }
        }
        if self.internal_edges.contains(&v) {
            out.push((v, 3 - i));
        }
        out.sort_unstable();
        out
    }

    /// The graph `G'` on representatives of the first `n` vertices together
    /// with the label of each of its vertices (index `k` is vertex `k + 1`).
    /// Out-of-range references are skipped.
    pub fn rep_graph(&self, n: usize) -> (Graph, Vec<(Vertex, u8)>) {
        let labels = self.representatives(n);
        let index: BTreeMap<(Vertex, u8), usize> = labels
            .iter()
            .enumerate()
            .map(|(k, &l)| (l, k + 1))
            .collect();
        let mut edges = Vec::new();
        for (&(a, b), pairs) in &self.rep_edges {
            for &(x, y) in pairs {
                if let (Some(&p), Some(&q)) = (index.get(&(a, x)), index.get(&(b, y))) {
                    if p != q {
                        edges.push((p, q));
                    }
                }
            }
        }
        for &v in &self.internal_edges {
            if let (Some(&p), Some(&q)) = (index.get(&(v, 1)), index.get(&(v, 2))) {
                edges.push((p, q));
            }
        }
        (Graph::from_edges_dedup(labels.len(), edges), labels)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SplitViolationKind {
    UnknownVertex,
    BadRepresentative,
    MissingEdge,
    ExtraEdge,
    SiblingsAdjacent,
    NotUnitInterval,
}

impl SplitViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SplitViolationKind::UnknownVertex => "unknown-vertex",
            SplitViolationKind::BadRepresentative => "bad-representative",
            SplitViolationKind::MissingEdge => "graph-mismatch-missing-edge",
            SplitViolationKind::ExtraEdge => "graph-mismatch-extra-edge",
            SplitViolationKind::SiblingsAdjacent => "siblings-adjacent",
            SplitViolationKind::NotUnitInterval => "not-unit-interval",
        }
    }
}

impl fmt::Display for SplitViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitViolation {
    pub kind: SplitViolationKind,
    pub vertices: Vec<Vertex>,
    pub detail: String,
}

/// Outcome of [`verify_split`]; first violation of each kind only.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SplitReport {
    pub violations: Vec<SplitViolation>,
}

impl SplitReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self, kind: SplitViolationKind) -> Option<&SplitViolation> {
        self.violations.iter().find(|v| v.kind == kind)
    }

    fn push(&mut self, kind: SplitViolationKind, vertices: Vec<Vertex>, detail: String) {
        if self.first(kind).is_none() {
            self.violations.push(SplitViolation {
                kind,
                vertices,
                detail,
            });
        }
    }
}

/// Rebuilds `G'` from `s` and checks every certificate condition, including
/// unit interval membership of `G'` by proper-order recognition.
pub fn verify_split(g: &Graph, s: &SplitSolution, mode: Mode) -> SplitReport {
    use SplitViolationKind as K;
    let n = g.n();
    let mut report = SplitReport::default();
    let known = |v: Vertex| v >= 1 && v <= n;
    for &v in s.split.iter().chain(&s.internal_edges) {
        if !known(v) {
            report.push(
                K::UnknownVertex,
                vec![v],
                format!("vertex {} not in graph", v),
            );
        }
    }
    for &v in &s.internal_edges {
        if !s.is_split(v) {
            report.push(
                K::BadRepresentative,
                vec![v],
                format!("internal edge on unsplit vertex {}", v),
            );
        }
        if mode == Mode::Disjoint {
            report.push(
                K::SiblingsAdjacent,
                vec![v],
                format!("{}_1 and {}_2 adjacent in disjoint mode", v, v),
            );
        }
    }
    for (&(a, b), pairs) in &s.rep_edges {
        if !known(a) || !known(b) || a >= b {
            report.push(
                K::UnknownVertex,
                vec![a, b],
                format!("bad edge key ({}, {})", a, b),
            );
            continue;
        }
        for &(x, y) in pairs {
            if x < 1 || x > s.reps(a) || y < 1 || y > s.reps(b) {
                report.push(
                    K::BadRepresentative,
                    vec![a, b],
                    format!(
                        "pair {}_{} {}_{} names a missing representative",
                        a, x, b, y
                    ),
                );
            }
        }
        if !g.has_edge(a, b) && !pairs.is_empty() {
            report.push(
                K::ExtraEdge,
                vec![a, b],
                format!(
                    "representatives of non-adjacent {} and {} are adjacent",
                    a, b
                ),
            );
        }
    }
    for (a, b) in g.edges() {
        let realized = s.rep_edges.get(&(a, b)).is_some_and(|p| {
            p.iter()
                .any(|&(x, y)| x >= 1 && x <= s.reps(a) && y >= 1 && y <= s.reps(b))
        });
        if !realized {
            report.push(
                K::MissingEdge,
                vec![a, b],
                format!("edge {}-{} has no representative pair", a, b),
            );
        }
    }
    let (h, labels) = s.rep_graph(n);
    if recognize_proper_order(&h).is_none() {
        let shown: Vec<String> = labels.iter().map(|(v, i)| format!("{}_{}", v, i)).collect();
        report.push(
            K::NotUnitInterval,
            Vec::new(),
            format!("G' on [{}] is not a unit interval graph", shown.join(", ")),
        );
    }
    report
}

/// Budgets for [`search_split`]; the search stops with
/// [`SearchOutcome::Exhausted`] when either trips.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub node_budget: u64,
    /// Milliseconds, measured by the [`Clock`] given to the search.
    pub time_budget_ms: Option<u64>,
}

impl Default for SearchLimits {
    fn default() -> SearchLimits {
        SearchLimits {
            node_budget: 1_000_000_000,
            time_budget_ms: Some(30 * 60 * 1000),
        }
    }
}

impl SearchLimits {
    pub fn unlimited() -> SearchLimits {
        SearchLimits {
            node_budget: u64::MAX,
            time_budget_ms: None,
        }
    }
}

/// Time source for the search. The core crate has none of its own.
pub trait Clock {
    fn elapsed_ms(&self) -> u64;

    /// Checked together with the time budget; a cancelled search reports
    /// [`SearchOutcome::Exhausted`].
    fn cancelled(&self) -> bool {
        false
    }
}

/// A clock that never advances.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn elapsed_ms(&self) -> u64 {
        0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Yes(SplitSolution),
    No,
    Exhausted,
}

impl SearchOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, SearchOutcome::Yes(_))
    }

    /// Verdict of a search whose branches were divided among workers: any
    /// Yes wins, otherwise No only if every part says No.
    pub fn merge<I: IntoIterator<Item = SearchOutcome>>(parts: I) -> SearchOutcome {
        let mut out = SearchOutcome::No;
        for p in parts {
            match p {
                SearchOutcome::Yes(_) => return p,
                SearchOutcome::Exhausted => out = SearchOutcome::Exhausted,
                SearchOutcome::No => {}
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PruneRule {
    /// The graph has an induced `K_{1,5}`.
    StarFive,
    /// A claw center must be split.
    ClawCenter,
    /// A vertex of degree below 2 is never split.
    LowDegree,
    /// (i) An edge never has four representative pairs (disjoint mode).
    FourPairs,
    /// (ii) Edges of an induced `K_{1,4}` get exactly one pair (disjoint mode).
    StarFourEdge,
    /// (iii) Edges of an induced `K_{1,3}` get at most two pairs (disjoint mode).
    StarThreeEdge,
    /// (iv) Every representative of a split vertex realizes some edge alone.
    Canonical,
    /// Sibling relabeling.
    Symmetry,
    /// (v) The decided part of `G'` is not a unit interval graph.
    NotUnitInterval,
    /// (v) Some representative is bound to end up at the center of a claw.
    ClawLookahead,
}

impl PruneRule {
    /// Every rule, in the order of [`SearchStats::prunes`].
    pub const ALL: [PruneRule; 10] = [
        PruneRule::StarFive,
        PruneRule::ClawCenter,
        PruneRule::LowDegree,
        PruneRule::FourPairs,
        PruneRule::StarFourEdge,
        PruneRule::StarThreeEdge,
        PruneRule::Canonical,
        PruneRule::Symmetry,
        PruneRule::NotUnitInterval,
        PruneRule::ClawLookahead,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PruneRule::StarFive => "k15",
            PruneRule::ClawCenter => "claw-center",
            PruneRule::LowDegree => "low-degree",
            PruneRule::FourPairs => "i-four-pairs",
            PruneRule::StarFourEdge => "ii-k14-edge",
            PruneRule::StarThreeEdge => "iii-k13-edge",
            PruneRule::Canonical => "iv-canonical",
            PruneRule::Symmetry => "symmetry",
            PruneRule::NotUnitInterval => "v-not-unit-interval",
            PruneRule::ClawLookahead => "v-claw-lookahead",
        }
    }
}

impl fmt::Display for PruneRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One search decision, as reported to an [`Observer`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    /// The whole graph, before any branching.
    Root,
    Vertex {
        v: Vertex,
        split: bool,
        internal: bool,
    },
    /// Pairs of edge `u < v`: bit `2 * i + j` stands for `u_{i+1} v_{j+1}`.
    Edge { u: Vertex, v: Vertex, pairs: u8 },
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Decision::Root => f.write_str("root"),
            Decision::Vertex { v, split, internal } => match (split, internal) {
                (false, _) => write!(f, "{} unsplit", v),
                (true, false) => write!(f, "{} split", v),
                (true, true) => write!(f, "{} split+internal", v),
            },
            Decision::Edge { u, v, pairs } => {
                write!(f, "{}-{} {{", u, v)?;
                let mut first = true;
                for b in 0..4 {
                    if pairs >> b & 1 == 1 {
                        if !first {
                            f.write_str(",")?;
                        }
                        first = false;
                        write!(f, "{}_{} {}_{}", u, b / 2 + 1, v, b % 2 + 1)?;
                    }
                }
                f.write_str("}")
            }
        }
    }
}

/// Receives every pruned decision: the refutation log.
pub trait Observer {
    fn enabled(&self) -> bool {
        true
    }

    fn record(&mut self, depth: usize, decision: &Decision, rule: PruneRule);
}

/// Discards everything.
#[derive(Debug, Clone, Copy, Default)]
pub struct Silent;

impl Observer for Silent {
    fn enabled(&self) -> bool {
        false
    }

    fn record(&mut self, _: usize, _: &Decision, _: PruneRule) {}
}

/// Collects `(depth, decision, rule)` triples.
#[derive(Debug, Clone, Default)]
pub struct RecordingObserver {
    pub entries: Vec<(usize, Decision, PruneRule)>,
}

impl Observer for RecordingObserver {
    fn record(&mut self, depth: usize, decision: &Decision, rule: PruneRule) {
        self.entries.push((depth, *decision, rule));
    }
}

/// Worker `index` of `count` explores its share of the branches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Partition {
    pub index: usize,
    pub count: usize,
}

impl Default for Partition {
    fn default() -> Partition {
        Partition { index: 0, count: 1 }
    }
}

/// Switches for the optional reductions. The unit interval test of the
/// decided part of `G'` is always on; everything here only shrinks the tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pruning {
    /// `K_{1,5}` rejection, forced splits of claw centers, no split below
    /// degree 2.
    pub stars: bool,
    /// Rules (i) to (iii), disjoint mode only.
    pub pair_caps: bool,
    /// Rule (iv).
    pub canonical: bool,
    pub symmetry: bool,
    pub lookahead: bool,
}

impl Pruning {
    pub const ALL: Pruning = Pruning {
        stars: true,
        pair_caps: true,
        canonical: true,
        symmetry: true,
        lookahead: true,
    };

    pub const NONE: Pruning = Pruning {
        stars: false,
        pair_caps: false,
        canonical: false,
        symmetry: false,
        lookahead: false,
    };
}

impl Default for Pruning {
    fn default() -> Pruning {
        Pruning::ALL
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchOptions {
    pub partition: Partition,
    pub pruning: Pruning,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    /// Prune counts, indexed like the [`PruneRule`] variants.
    pub prunes: [u64; 10],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SplitError {
    #[error("graph has {n} vertices; the split search handles at most {max}")]
    TooLarge { n: usize, max: usize },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_bipartite, counterexample_graph};

    #[test]
    fn rule_table_matches_stats_index() {
        for (i, r) in PruneRule::ALL.iter().enumerate() {
            assert_eq!(*r as usize, i);
        }
    }

    fn star(t: usize) -> Graph {
        Graph::from_edges(t + 1, (2..=t + 1).map(|l| (1, l))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (1..=n).map(|i| (i, i % n + 1))).unwrap()
    }

    fn yes(g: &Graph, mode: Mode) -> SplitSolution {
        match search_split(g, mode, SearchLimits::unlimited())
            .unwrap()
            .outcome
        {
            SearchOutcome::Yes(s) => {
                let rep = verify_split(g, &s, mode);
                assert!(rep.ok(), "{:?}", rep);
                s
            }
            other => panic!("expected yes, got {:?}", other),
        }
    }

    fn no(g: &Graph, mode: Mode) {
        let r = search_split(g, mode, SearchLimits::unlimited()).unwrap();
        assert_eq!(r.outcome, SearchOutcome::No);
    }

    #[test]
    fn small_cases() {
        let s = yes(&star(3), Mode::Disjoint);
        assert_eq!(s.split.iter().copied().collect::<Vec<_>>(), vec![1]);
        yes(&star(4), Mode::Disjoint);
        no(&star(5), Mode::NonDisjoint);
        let p3 = Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(yes(&p3, Mode::Disjoint), {
            let mut s = SplitSolution::default();
            s.rep_edges.insert((1, 2), vec![(1, 1)]);
            s.rep_edges.insert((2, 3), vec![(1, 1)]);
            s
        });
        yes(&cycle(4), Mode::Disjoint);
        yes(&Graph::empty(1), Mode::Disjoint);
        no(&complete_bipartite(5, 3), Mode::NonDisjoint);
    }

    #[test]
    fn verify_rejects_bad_certificates() {
        let p3 = Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
        let mut s = SplitSolution::default();
        s.rep_edges.insert((1, 2), vec![(1, 1)]);
        s.rep_edges.insert((2, 3), vec![(1, 1)]);
        assert!(verify_split(&p3, &s, Mode::Disjoint).ok());
        let mut missing = s.clone();
        missing.rep_edges.remove(&(2, 3));
        assert!(verify_split(&p3, &missing, Mode::Disjoint)
            .first(SplitViolationKind::MissingEdge)
            .is_some());
        let mut extra = s.clone();
        extra.rep_edges.insert((1, 3), vec![(1, 1)]);
        assert!(verify_split(&p3, &extra, Mode::Disjoint)
            .first(SplitViolationKind::ExtraEdge)
            .is_some());
        let mut bad = s.clone();
        bad.rep_edges.insert((1, 2), vec![(2, 1)]);
        assert!(verify_split(&p3, &bad, Mode::Disjoint)
            .first(SplitViolationKind::BadRepresentative)
            .is_some());
        // Unsplit claw is not unit interval.
        let mut claw = SplitSolution::default();
        for l in 2..=4 {
            claw.rep_edges.insert((1, l), vec![(1, 1)]);
        }
        assert!(verify_split(&star(3), &claw, Mode::Disjoint)
            .first(SplitViolationKind::NotUnitInterval)
            .is_some());
    }

    #[test]
    fn counterexample_nondisjoint() {
        let g = counterexample_graph(0).unwrap();
        let s = yes(&g, Mode::NonDisjoint);
        assert_eq!(
            s.split.iter().copied().collect::<Vec<_>>(),
            vec![1, 3, 7, 8, 10]
        );
        if !s.internal_edges.is_empty() {
            assert!(verify_split(&g, &s, Mode::Disjoint)
                .first(SplitViolationKind::SiblingsAdjacent)
                .is_some());
        }
    }

    #[test]
    fn refutation_log() {
        let mut obs = RecordingObserver::default();
        let r = search_split_with(
            &star(5),
            Mode::Disjoint,
            SearchLimits::unlimited(),
            &NoClock,
            &mut obs,
            SearchOptions::default(),
        )
        .unwrap();
        assert_eq!(r.outcome, SearchOutcome::No);
        assert_eq!(obs.entries, vec![(0, Decision::Root, PruneRule::StarFive)]);
        let mut obs = RecordingObserver::default();
        search_split_with(
            &cycle(5),
            Mode::Disjoint,
            SearchLimits::unlimited(),
            &NoClock,
            &mut obs,
            SearchOptions::default(),
        )
        .unwrap();
        assert!(obs
            .entries
            .iter()
            .any(|e| e.2 == PruneRule::NotUnitInterval));
    }

    #[test]
    fn budget_exhaustion() {
        let g = counterexample_graph(0).unwrap();
        let limits = SearchLimits {
            node_budget: 50,
            time_budget_ms: None,
        };
        let r = search_split(&g, Mode::Disjoint, limits).unwrap();
        assert_eq!(r.outcome, SearchOutcome::Exhausted);
    }

    #[test]
    fn partitions_merge_to_same_verdict() {
        let cases = [
            (cycle(5), Mode::NonDisjoint),
            (star(4), Mode::Disjoint),
            (complete_bipartite(3, 3), Mode::Disjoint),
            (complete_bipartite(3, 3), Mode::NonDisjoint),
            (counterexample_graph(0).unwrap(), Mode::Disjoint),
        ];
        for (g, mode) in cases {
            {
                let whole = search_split(&g, mode, SearchLimits::unlimited()).unwrap();
                let parts = (0..3).map(|index| {
                    search_split_with(
                        &g,
                        mode,
                        SearchLimits::unlimited(),
                        &NoClock,
                        &mut Silent,
                        SearchOptions {
                            partition: Partition { index, count: 3 },
                            ..Default::default()
                        },
                    )
                    .unwrap()
                    .outcome
                });
                assert_eq!(
                    SearchOutcome::merge(parts).is_yes(),
                    whole.outcome.is_yes(),
                    "{:?} {}",
                    g,
                    mode
                );
            }
        }
    }

    #[test]
    fn reductions_keep_verdicts() {
        let graphs = [
            cycle(5),
            star(4),
            complete_bipartite(3, 3),
            complete_bipartite(2, 4),
            Graph::from_edges(7, [(1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (4, 7)]).unwrap(),
        ];
        for g in graphs {
            for mode in [Mode::Disjoint, Mode::NonDisjoint] {
                let run = |pruning| {
                    search_split_with(
                        &g,
                        mode,
                        SearchLimits::unlimited(),
                        &NoClock,
                        &mut Silent,
                        SearchOptions {
                            pruning,
                            ..Default::default()
                        },
                    )
                    .unwrap()
                    .outcome
                    .is_yes()
                };
                assert_eq!(run(Pruning::ALL), run(Pruning::NONE), "{:?} {}", g, mode);
            }
        }
    }

    #[test]
    fn oracle_small_values() {
        assert!(brute_force_oracle(&star(3), Mode::Disjoint));
        assert!(brute_force_oracle(&Graph::empty(1), Mode::Disjoint));
        assert!(brute_force_oracle(&Graph::empty(1), Mode::NonDisjoint));
        assert!(!brute_force_oracle(&star(5), Mode::NonDisjoint));
        assert!(brute_force_oracle(&star(4), Mode::Disjoint));
    }
}
