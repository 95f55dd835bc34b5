//! Closed intervals with rational endpoints, d-interval representations and
//! the operations on them: intersection graphs, verification, merging
//! overlapping parts, and the balanced midpoint split.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, Vertex};
use crate::rational::Rational;

/// Closed interval `[l, r]` with `l <= r`. Points are allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub l: Rational,
    pub r: Rational,
}

impl Interval {
    /// Panics if `l > r`.
    pub fn new(l: Rational, r: Rational) -> Interval {
        assert!(l <= r, "interval with l > r: [{}, {}]", l, r);
        Interval { l, r }
    }

    pub fn try_new(l: Rational, r: Rational) -> Option<Interval> {
        (l <= r).then_some(Interval { l, r })
    }

    pub fn ints(l: i64, r: i64) -> Interval {
        Interval::new(Rational::from(l), Rational::from(r))
    }

    /// Unit interval starting at `l`.
    pub fn unit(l: Rational) -> Interval {
        let r = &l + &Rational::one();
        Interval { l, r }
    }

    pub fn len(&self) -> Rational {
        &self.r - &self.l
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        intersects(self, other)
    }

    /// `self` lies entirely to the left of `other`.
    pub fn precedes(&self, other: &Interval) -> bool {
        self.r < other.l
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.l <= other.l && other.r <= self.r
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.l, self.r)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Closed-interval intersection: shared endpoints count.
pub fn intersects(a: &Interval, b: &Interval) -> bool {
    a.l.max_ref(&b.l) <= a.r.min_ref(&b.r)
}

/// All index pairs `(i, j)`, `i < j`, of intersecting intervals. Sweep over
/// left endpoints; runs in `O(k log k + output)`.
pub fn overlapping_pairs(items: &[Interval]) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by(|&a, &b| items[a].l.cmp(&items[b].l).then(a.cmp(&b)));
    let mut active: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    for &i in &order {
        let li = &items[i].l;
        active.retain(|&j| items[j].r >= *li);
        for &j in &active {
            out.push((i.min(j), i.max(j)));
        }
        active.push(i);
    }
    out
}

/// Sorted neighbour index lists of the intersection graph of `items`.
pub fn neighbor_lists(items: &[Interval]) -> Vec<Vec<usize>> {
    let mut nb = vec![Vec::new(); items.len()];
    for (i, j) in overlapping_pairs(items) {
        nb[i].push(j);
        nb[j].push(i);
    }
    for list in nb.iter_mut() {
        list.sort_unstable();
    }
    nb
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("d must be positive")]
    ZeroD,
    #[error("vertex {0} has no intervals")]
    EmptyParts(Vertex),
    #[error("vertex {vertex} has {count} intervals, more than d = {d}")]
    TooManyParts {
        vertex: Vertex,
        count: usize,
        d: usize,
    },
    #[error("vertex 0 is not a valid id")]
    ZeroVertex,
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("vertex {0} is not represented by a single interval")]
    NotSingleInterval(Vertex),
}

/// A d-interval representation: each vertex owns between 1 and `d`
/// intervals. The multiset of all intervals is the underlying family.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DIntervalRep {
    d: usize,
    parts: BTreeMap<Vertex, Vec<Interval>>,
}

impl DIntervalRep {
    pub fn new(d: usize) -> Result<DIntervalRep, RepError> {
        if d == 0 {
            return Err(RepError::ZeroD);
        }
        Ok(DIntervalRep {
            d,
            parts: BTreeMap::new(),
        })
    }

    /// Plain interval representation, one interval per vertex.
    pub fn from_intervals<I>(items: I) -> DIntervalRep
    where
        I: IntoIterator<Item = (Vertex, Interval)>,
    {
        let mut rep = DIntervalRep::new(1).unwrap();
        for (v, iv) in items {
            rep.insert(v, vec![iv]).expect("one interval per vertex");
        }
        rep
    }

    /// Sets the intervals of `v`, enforcing `1 <= len <= d`.
    pub fn insert(&mut self, v: Vertex, parts: Vec<Interval>) -> Result<(), RepError> {
        if parts.len() > self.d {
            return Err(RepError::TooManyParts {
                vertex: v,
                count: parts.len(),
                d: self.d,
            });
        }
        self.insert_unchecked(v, parts)
    }

    /// Sets the intervals of `v` without the upper bound on the part count,
    /// so that files violating it can still be loaded and reported by
    /// [`verify_representation`].
    pub fn insert_unchecked(&mut self, v: Vertex, parts: Vec<Interval>) -> Result<(), RepError> {
        if v == 0 {
            return Err(RepError::ZeroVertex);
        }
        if parts.is_empty() {
            return Err(RepError::EmptyParts(v));
        }
        self.parts.insert(v, parts);
        Ok(())
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &BTreeMap<Vertex, Vec<Interval>> {
        &self.parts
    }

    pub fn get(&self, v: Vertex) -> Option<&[Interval]> {
        self.parts.get(&v).map(Vec::as_slice)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.parts.keys().copied()
    }

    /// Largest vertex id, 0 when empty.
    pub fn max_vertex(&self) -> Vertex {
        self.parts.keys().next_back().copied().unwrap_or(0)
    }

    /// Underlying family as `(owner, interval)` pairs in vertex order.
    pub fn underlying(&self) -> impl Iterator<Item = (Vertex, &Interval)> + '_ {
        self.parts
            .iter()
            .flat_map(|(&v, ps)| ps.iter().map(move |iv| (v, iv)))
    }

    pub fn interval_count(&self) -> usize {
        self.parts.values().map(Vec::len).sum()
    }

    /// Largest right endpoint of the underlying family.
    pub fn max_right(&self) -> Option<Rational> {
        self.underlying().map(|(_, iv)| &iv.r).max().cloned()
    }

    /// The single interval of `v` in a one-interval-per-vertex representation.
    pub fn single(&self, v: Vertex) -> Result<&Interval, RepError> {
        match self.parts.get(&v) {
            None => Err(RepError::UnknownVertex(v)),
            Some(ps) if ps.len() == 1 => Ok(&ps[0]),
            Some(_) => Err(RepError::NotSingleInterval(v)),
        }
    }

    /// Whether every vertex has exactly one interval.
    pub fn is_single(&self) -> bool {
        self.parts.values().all(|ps| ps.len() == 1)
    }

    /// Appends dummy unit intervals so every vertex owns exactly `d` parts.
    /// Dummies sit at `max_r + 2 + 3k` and meet nothing.
    pub fn pad_with_dummies(&mut self) {
        let Some(max_r) = self.max_right() else {
            return;
        };
        let mut k: i64 = 0;
        let d = self.d;
        for ps in self.parts.values_mut() {
            while ps.len() < d {
                ps.push(dummy_interval(&max_r, k));
                k += 1;
            }
        }
    }
}

/// The `k`-th dummy past `max_r`.
pub fn dummy_interval(max_r: &Rational, k: i64) -> Interval {
    Interval::unit(max_r + &Rational::from(2 + 3 * k))
}

impl fmt::Debug for DIntervalRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DIntervalRep(d={}) ", self.d)?;
        f.debug_map().entries(self.parts.iter()).finish()
    }
}

/// Intersection graph of a d-interval representation on vertices
/// `1..=max_vertex`; ids absent from the representation are isolated.
pub fn d_intersection_graph(rep: &DIntervalRep) -> Graph {
    intersection_graph_on(rep, rep.max_vertex())
}

fn intersection_graph_on(rep: &DIntervalRep, n: usize) -> Graph {
    let (owners, items): (Vec<Vertex>, Vec<Interval>) =
        rep.underlying().map(|(v, iv)| (v, iv.clone())).unzip();
    let edges = overlapping_pairs(&items)
        .into_iter()
        .map(|(i, j)| (owners[i], owners[j]))
        .filter(|(u, v)| u != v);
    Graph::from_edges_dedup(n, edges)
}

/// Greedy maximum set of pairwise disjoint intervals among `cands`
/// (indices into `items`): earliest right endpoint first, ties by `key`.
pub(crate) fn greedy_disjoint<K: Ord>(
    items: &[Interval],
    cands: &[usize],
    key: impl Fn(usize) -> K,
) -> Vec<usize> {
    let mut sorted: Vec<usize> = cands.to_vec();
    sorted.sort_by(|&a, &b| {
        items[a]
            .r
            .cmp(&items[b].r)
            .then_with(|| key(a).cmp(&key(b)))
    });
    let mut chain: Vec<usize> = Vec::new();
    for i in sorted {
        if chain.last().is_none_or(|&p| items[p].r < items[i].l) {
            chain.push(i);
        }
    }
    chain
}

/// Maximum number `m` of pairwise disjoint intervals meeting the interval of
/// `v`, with a witness (vertex ids in left-to-right order).
pub fn max_disjoint_intersecting(
    rep: &DIntervalRep,
    v: Vertex,
) -> Result<(usize, Vec<Vertex>), RepError> {
    let iv = rep.single(v)?;
    let mut ids = Vec::new();
    let mut items = Vec::new();
    for (&u, ps) in rep.parts() {
        if ps.len() != 1 {
            return Err(RepError::NotSingleInterval(u));
        }
        if u != v && intersects(iv, &ps[0]) {
            ids.push(u);
            items.push(ps[0].clone());
        }
    }
    let all: Vec<usize> = (0..items.len()).collect();
    let chain = greedy_disjoint(&items, &all, |i| ids[i]);
    Ok((chain.len(), chain.into_iter().map(|i| ids[i]).collect()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    MissingEdge,
    ExtraEdge,
    NonUnitLength,
    SameVertexOverlap,
    NotBalanced,
    TooManyParts,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::MissingEdge => "graph-mismatch-missing-edge",
            ViolationKind::ExtraEdge => "graph-mismatch-extra-edge",
            ViolationKind::NonUnitLength => "non-unit-length",
            ViolationKind::SameVertexOverlap => "same-vertex-overlap",
            ViolationKind::NotBalanced => "not-balanced",
            ViolationKind::TooManyParts => "too-many-parts",
        }
    }
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One failed check: the offending vertices and, where relevant, intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub vertices: Vec<Vertex>,
    pub intervals: Vec<Interval>,
    pub detail: String,
}

/// Outcome of a verification; `ok` iff there are no violations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self, kind: ViolationKind) -> Option<&Violation> {
        self.violations.iter().find(|v| v.kind == kind)
    }

    pub fn push(&mut self, v: Violation) {
        if self.first(v.kind).is_none() {
            self.violations.push(v);
        }
    }
}

/// Which properties [`verify_representation`] demands beyond the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Requirements {
    pub unit: bool,
    pub disjoint: bool,
    pub balanced: bool,
}

/// Checks `rep` against `g`: equal intersection graph, part counts within
/// `d`, and the optional unit, disjoint and balanced properties. Only the
/// first violation of each kind is recorded.
pub fn verify_representation(rep: &DIntervalRep, g: &Graph, req: Requirements) -> VerifyReport {
    use alloc::format;
    let mut report = VerifyReport::default();
    let n = g.n().max(rep.max_vertex());
    let h = intersection_graph_on(rep, n);
    for (u, v) in g.edges() {
        if !h.has_edge(u, v) {
            report.push(Violation {
                kind: ViolationKind::MissingEdge,
                vertices: vec![u, v],
                intervals: Vec::new(),
                detail: format!("edge {}-{} not realised", u, v),
            });
            break;
        }
    }
    for (u, v) in h.edges() {
        if !g.has_edge(u, v) {
            report.push(Violation {
                kind: ViolationKind::ExtraEdge,
                vertices: vec![u, v],
                intervals: Vec::new(),
                detail: format!("{} and {} intersect but are not adjacent", u, v),
            });
            break;
        }
    }
    for (&v, ps) in rep.parts() {
        if ps.len() > rep.d() {
            report.push(Violation {
                kind: ViolationKind::TooManyParts,
                vertices: vec![v],
                intervals: ps.clone(),
                detail: format!("{} intervals, d = {}", ps.len(), rep.d()),
            });
        }
        if req.unit {
            if let Some(iv) = ps.iter().find(|iv| iv.len() != Rational::one()) {
                report.push(Violation {
                    kind: ViolationKind::NonUnitLength,
                    vertices: vec![v],
                    intervals: vec![iv.clone()],
                    detail: format!("length {}", iv.len()),
                });
            }
        }
        if req.disjoint {
            'outer: for i in 0..ps.len() {
                for j in i + 1..ps.len() {
                    if intersects(&ps[i], &ps[j]) {
                        report.push(Violation {
                            kind: ViolationKind::SameVertexOverlap,
                            vertices: vec![v],
                            intervals: vec![ps[i].clone(), ps[j].clone()],
                            detail: format!("parts {} and {} intersect", i + 1, j + 1),
                        });
                        break 'outer;
                    }
                }
            }
        }
        if req.balanced {
            let len0 = ps[0].len();
            if let Some(iv) = ps.iter().find(|iv| iv.len() != len0) {
                report.push(Violation {
                    kind: ViolationKind::NotBalanced,
                    vertices: vec![v],
                    intervals: vec![ps[0].clone(), iv.clone()],
                    detail: format!("lengths {} and {}", len0, iv.len()),
                });
            }
        }
    }
    report
}

/// Merges overlapping intervals of each vertex into their union. With `pad`,
/// dummy unit intervals restore each vertex's original part count.
pub fn normalize_to_disjoint(rep: &DIntervalRep, pad: bool) -> DIntervalRep {
    let max_r = rep.max_right();
    let mut out = DIntervalRep::new(rep.d()).unwrap();
    let mut k = 0;
    for (&v, ps) in rep.parts() {
        let mut sorted = ps.clone();
        sorted.sort();
        let mut merged: Vec<Interval> = Vec::with_capacity(sorted.len());
        for iv in sorted {
            match merged.last_mut() {
                Some(last) if iv.l <= last.r => {
                    if iv.r > last.r {
                        last.r = iv.r;
                    }
                }
                _ => merged.push(iv),
            }
        }
        if pad {
            let max_r = max_r.as_ref().unwrap();
            while merged.len() < ps.len() {
                merged.push(dummy_interval(max_r, k));
                k += 1;
            }
        }
        out.insert_unchecked(v, merged).unwrap();
    }
    out
}

/// Separation used by [`balanced_split`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Epsilon {
    Auto,
    Fixed(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BalancedSplitError {
    #[error("vertex {0} is not balanced")]
    NotBalanced(Vertex),
    #[error("vertex {0} has more than one overlapping pair")]
    SeveralOverlaps(Vertex),
    #[error(
        "epsilon too large: splitting vertex {0} changes the intersection graph or empties a part"
    )]
    EpsilonTooLarge(Vertex),
}

/// Replaces each overlapping pair `[a,b]`, `[c,d]` of a vertex (`a <= c`,
/// equal lengths) by `[a, m - eps]` and `[m + eps, d]` where `m = (b+c)/2`
/// is the midpoint of their intersection. Both halves keep equal length.
pub fn balanced_split(
    rep: &DIntervalRep,
    eps: &Epsilon,
) -> Result<DIntervalRep, BalancedSplitError> {
    let eps = match eps {
        Epsilon::Fixed(e) => e.clone(),
        Epsilon::Auto => auto_epsilon(rep),
    };
    let mut out = DIntervalRep::new(rep.d()).unwrap();
    for (&v, ps) in rep.parts() {
        let len0 = ps[0].len();
        if ps.iter().any(|iv| iv.len() != len0) {
            return Err(BalancedSplitError::NotBalanced(v));
        }
        let mut pair = None;
        for i in 0..ps.len() {
            for j in i + 1..ps.len() {
                if intersects(&ps[i], &ps[j]) {
                    if pair.is_some() {
                        return Err(BalancedSplitError::SeveralOverlaps(v));
                    }
                    pair = Some((i, j));
                }
            }
        }
        let mut new_parts = ps.clone();
        if let Some((i, j)) = pair {
            let (first, second) = if ps[i] <= ps[j] { (i, j) } else { (j, i) };
            let (a, b) = (&ps[first].l, &ps[first].r);
            let (c, d) = (&ps[second].l, &ps[second].r);
            let mid = b.midpoint(c);
            let left = Interval::try_new(a.clone(), &mid - &eps);
            let right = Interval::try_new(&mid + &eps, d.clone());
            match (left, right) {
                (Some(x), Some(y)) => {
                    new_parts[first] = x;
                    new_parts[second] = y;
                }
                _ => return Err(BalancedSplitError::EpsilonTooLarge(v)),
            }
        }
        out.insert_unchecked(v, new_parts).unwrap();
    }
    if d_intersection_graph(&out) != d_intersection_graph(rep) {
        let culprit = rep
            .parts()
            .keys()
            .copied()
            .find(|&v| out.get(v) != rep.get(v))
            .unwrap_or(0);
        return Err(BalancedSplitError::EpsilonTooLarge(culprit));
    }
    Ok(out)
}

/// A quarter of the smallest positive gap between endpoints.
fn auto_epsilon(rep: &DIntervalRep) -> Rational {
    let mut pts: Vec<&Rational> = rep
        .underlying()
        .flat_map(|(_, iv)| [&iv.l, &iv.r])
        .collect();
    pts.sort();
    pts.dedup();
    let gap = pts
        .windows(2)
        .map(|w| w[1] - w[0])
        .min()
        .unwrap_or_else(Rational::one);
    gap / Rational::from(4)
}
