//! Named graphs and seeded random instances.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};
use crate::interval::{greedy_disjoint, DIntervalRep, Interval};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("unknown counterexample variant {0} (expected 0..=5)")]
    InvalidVariant(usize),
    #[error("parameter d = {got} below the minimum {min}")]
    DTooSmall { got: usize, min: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}

/// The 14-vertex base graph: interval, free of induced `K_{1,5}`, and not a
/// disjoint unit 2-interval graph.
const BASE_EDGES: [(Vertex, Vertex); 30] = [
    (8, 1),
    (8, 3),
    (8, 7),
    (8, 9),
    (8, 10),
    (9, 3),
    (9, 7),
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (1, 7),
    (10, 3),
    (10, 7),
    (10, 11),
    (10, 12),
    (10, 13),
    (10, 14),
    (3, 4),
    (3, 5),
    (3, 6),
    (3, 7),
    (3, 11),
    (5, 6),
    (5, 7),
    (7, 11),
    (7, 12),
    (7, 13),
    (11, 12),
];

/// Extra edges of variants 1..=5.
const VARIANT_EXTRAS: [&[(Vertex, Vertex)]; 5] = [
    &[(11, 13), (11, 14), (5, 4), (5, 2)],
    &[(11, 13), (5, 4), (5, 2)],
    &[(5, 4), (5, 2)],
    &[(11, 13), (5, 4)],
    &[(5, 4)],
];

/// Variant 0 is the base graph; variants 1..=5 add edge subsets of
/// `{11-13, 11-14, 5-4, 5-2}`.
pub fn counterexample_graph(variant: usize) -> Result<Graph, GenError> {
    if variant > 5 {
        return Err(GenError::InvalidVariant(variant));
    }
    let extra: &[(Vertex, Vertex)] = if variant == 0 {
        &[]
    } else {
        VARIANT_EXTRAS[variant - 1]
    };
    Ok(Graph::from_edges(14, BASE_EDGES.iter().chain(extra).copied()).expect("static edge list"))
}

fn iv(l: (i64, i64), r: (i64, i64)) -> Interval {
    Interval::new(Rational::new(l.0, l.1), Rational::new(r.0, r.1))
}

fn int(l: i64, r: i64) -> Interval {
    Interval::ints(l, r)
}

/// An interval representation of [`counterexample_graph`]`(0)`.
pub fn counterexample_interval_rep() -> DIntervalRep {
    DIntervalRep::from_intervals([
        (1, int(-10, -2)),
        (2, int(-10, -9)),
        (3, iv((-8, 1), (9, 2))),
        (4, int(-8, -7)),
        (5, int(-6, -4)),
        (6, int(-6, -5)),
        (7, iv((-9, 2), (8, 1))),
        (8, int(-3, 3)),
        (9, int(-1, 1)),
        (10, int(2, 10)),
        (11, int(4, 6)),
        (12, int(5, 6)),
        (13, int(7, 8)),
        (14, int(9, 10)),
    ])
}

/// A 2-interval representation of [`counterexample_graph`]`(0)` in which
/// the vertices 1, 3, 7, 8 and 10 are split. Vertex 8's two intervals
/// overlap; every other vertex is disjoint. No interval meets three
/// pairwise disjoint intervals, so the family can be made unit.
pub fn counterexample_two_interval_rep() -> DIntervalRep {
    let mut rep = DIntervalRep::new(2).unwrap();
    let parts: [(Vertex, Vec<Interval>); 14] = [
        (1, vec![int(-10, -7), int(-6, -2)]),
        (2, vec![int(-10, -9)]),
        (3, vec![int(-8, -5), iv((-1, 1), (9, 2))]),
        (4, vec![int(-8, -7)]),
        (5, vec![int(-6, -4)]),
        (6, vec![int(-6, -5)]),
        (7, vec![iv((-9, 2), (1, 1)), int(5, 8)]),
        (8, vec![int(-3, 1), int(-1, 3)]),
        (9, vec![int(-1, 1)]),
        (10, vec![int(2, 6), int(7, 10)]),
        (11, vec![int(4, 6)]),
        (12, vec![int(5, 6)]),
        (13, vec![int(7, 8)]),
        (14, vec![int(9, 10)]),
    ];
    for (v, ps) in parts {
        rep.insert(v, ps).unwrap();
    }
    rep
}

/// An interval meeting eight pairwise disjoint intervals. Vertex 1 is the
/// long interval `[-10, 18]`, vertices 2..=9 are the disjoint family
/// `A_1..A_8` and 10..=15 are further intervals, 12 being `[-1, 2]`.
pub fn eight_claw_rep() -> DIntervalRep {
    DIntervalRep::from_intervals([
        (1, int(-10, 18)),
        (2, int(-11, -8)),
        (3, int(-7, -4)),
        (4, int(-3, 0)),
        (5, int(1, 3)),
        (6, int(4, 7)),
        (7, int(8, 11)),
        (8, int(12, 15)),
        (9, int(16, 19)),
        (10, int(-9, -6)),
        (11, int(-5, -2)),
        (12, int(-1, 2)),
        (13, iv((5, 2), (6, 1))),
        (14, int(11, 14)),
        (15, int(15, 18)),
    ])
}

/// The base graph plus `2d - 4` vertices adjacent exactly to `{1, 3}` and
/// `2d - 4` adjacent exactly to `{7, 10}`.
pub fn counterexample_d(d: usize) -> Result<Graph, GenError> {
    if d < 2 {
        return Err(GenError::DTooSmall { got: d, min: 2 });
    }
    let k = 2 * d - 4;
    let base = counterexample_graph(0)?;
    let mut edges: Vec<(Vertex, Vertex)> = base.edges().collect();
    for i in 0..k {
        let a = 15 + i;
        let b = 15 + k + i;
        edges.extend([(a, 1), (a, 3), (b, 7), (b, 10)]);
    }
    Ok(Graph::from_edges(14 + 2 * k, edges).expect("fresh vertices"))
}

/// `K_{a,b}`: vertices `1..=a` on one side, `a+1..=a+b` on the other.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (1..=a).flat_map(|u| (a + 1..=a + b).map(move |v| (u, v)));
    Graph::from_edges(a + b, edges).unwrap()
}

/// Vertex numbering of [`balanced_gadget`].
///
/// Five blocks `C_1..C_5`, each a `K_{F,T}` with `F = d^2 + d - 1` vertices
/// `f_i^1..f_i^F` and `T = d + 1` vertices `t_i^1..t_i^T`, numbered block
/// by block. Then `v_1..v_6`, then the pendant neighbours: `d - 2` of `v_1`
/// followed by `d - 3` of `v_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetLayout {
    pub d: usize,
}

impl GadgetLayout {
    pub fn f_count(&self) -> usize {
        self.d * self.d + self.d - 1
    }

    pub fn t_count(&self) -> usize {
        self.d + 1
    }

    fn block(&self) -> usize {
        self.f_count() + self.t_count()
    }

    pub fn f(&self, i: usize, j: usize) -> Vertex {
        debug_assert!((1..=5).contains(&i) && (1..=self.f_count()).contains(&j));
        (i - 1) * self.block() + j
    }

    pub fn t(&self, i: usize, k: usize) -> Vertex {
        debug_assert!((1..=5).contains(&i) && (1..=self.t_count()).contains(&k));
        (i - 1) * self.block() + self.f_count() + k
    }

    pub fn v(&self, k: usize) -> Vertex {
        debug_assert!((1..=6).contains(&k));
        5 * self.block() + k
    }

    pub fn v1_pendants(&self) -> impl Iterator<Item = Vertex> {
        let start = 5 * self.block() + 7;
        start..start + self.d - 2
    }

    pub fn v2_pendants(&self) -> impl Iterator<Item = Vertex> {
        let start = 5 * self.block() + 7 + self.d - 2;
        start..start + self.d - 3
    }

    pub fn n(&self) -> usize {
        5 * self.block() + 6 + (self.d - 2) + (self.d - 3)
    }

    fn block_vertices(&self, i: usize) -> impl Iterator<Item = Vertex> {
        let start = (i - 1) * self.block() + 1;
        start..start + self.block()
    }
}

/// A balanced 3-interval graph that is not disjoint balanced 3-interval
/// (`d = 3`), and its generalization to `d > 3`: a chain of five
/// `K_{d^2+d-1, d+1}` blocks plus six attached vertices.
///
/// The `f_4` ranges of `v_3` and `v_4` both have `d^2 - d + 3` members so
/// that `d = 3` gives `{1..9}` and `{3..11}`. `v_5` and `v_6` follow the
/// detailed adjacency lists (`f_2^{1..7}` and `f_2^{5..11}`, each plus
/// `f_4^8` and `f_4^9`), generalized to `f_2^{1..d^2-d+1}`,
/// `f_2^{2d-1..F}` and `f_4^{d^2-d+2}`, `f_4^{d^2-d+3}`; an earlier
/// drawing of the construction showed `f_2^{1..9}` instead.
pub fn balanced_gadget(d: usize) -> Result<Graph, GenError> {
    if d < 3 {
        return Err(GenError::DTooSmall { got: d, min: 3 });
    }
    let lay = GadgetLayout { d };
    let fc = lay.f_count();
    let tc = lay.t_count();
    let mut e: Vec<(Vertex, Vertex)> = Vec::new();
    for i in 1..=5 {
        for j in 1..=fc {
            for k in 1..=tc {
                e.push((lay.f(i, j), lay.t(i, k)));
            }
        }
        if i < 5 {
            e.push((lay.f(i, fc), lay.f(i + 1, 1)));
        }
    }
    let (v1, v2, v3, v4, v5, v6) = (lay.v(1), lay.v(2), lay.v(3), lay.v(4), lay.v(5), lay.v(6));
    for u in lay.block_vertices(2).chain(lay.block_vertices(4)) {
        e.push((v1, u));
        e.push((v2, u));
    }
    e.extend([(v1, lay.f(3, fc)), (v1, lay.f(5, 1)), (v1, v2)]);
    e.extend([(v2, lay.f(1, fc)), (v2, lay.f(3, 1))]);
    for p in lay.v1_pendants() {
        e.push((v1, p));
    }
    for p in lay.v2_pendants() {
        e.push((v2, p));
    }

    let span = d * d - d + 3;
    e.extend([(v3, lay.f(3, fc)), (v3, lay.t(3, tc)), (v3, lay.t(4, 1))]);
    e.extend((1..=span).map(|j| (v3, lay.f(4, j))));
    e.extend([(v4, lay.f(5, 1)), (v4, lay.t(4, tc)), (v4, lay.t(5, 1))]);
    e.extend((2 * d - 3..=fc).map(|j| (v4, lay.f(4, j))));

    let short = d * d - d + 1;
    let extra = [lay.f(4, short + 1), lay.f(4, short + 2)];
    e.extend([
        (v5, lay.f(1, fc)),
        (v5, lay.t(1, tc - 1)),
        (v5, lay.t(2, 1)),
    ]);
    e.extend((1..=short).map(|j| (v5, lay.f(2, j))));
    e.extend(extra.iter().map(|&x| (v5, x)));
    e.extend([(v6, lay.f(3, 1)), (v6, lay.t(2, tc)), (v6, lay.t(3, 1))]);
    e.extend((2 * d - 1..=fc).map(|j| (v6, lay.f(2, j))));
    e.extend(extra.iter().map(|&x| (v6, x)));

    for v in [v3, v4, v5, v6] {
        e.push((v1, v));
        e.push((v2, v));
    }
    Graph::from_edges(lay.n(), e).map_err(|_| GenError::InvalidParameter("gadget edge collision"))
}

/// Erdős–Rényi `G(n, p)` with `p = num / den`, deterministic per seed.
pub fn random_graph(n: usize, num: u32, den: u32, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_ratio(num.min(den), den.max(1)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random interval representation on vertices `1..=n` with integer
/// endpoints, in which no interval meets more than `max_m` pairwise
/// disjoint intervals. Intervals are drawn one at a time; a draw that would
/// push some `m` above `max_m` is rejected and redrawn, and after repeated
/// rejections the interval is placed isolated to the right of everything.
/// Deterministic per seed.
pub fn random_interval_rep(n: usize, max_m: usize, seed: u64) -> DIntervalRep {
    random_interval_rep_with(n, max_m, seed, RandomShape::default())
}

/// Tuning knobs of [`random_interval_rep_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomShape {
    /// Line length per interval.
    pub density: u32,
    /// Typical length of a short interval.
    pub short_len: u32,
    /// Length cap of the occasional long interval.
    pub long_len: u32,
    /// Probability, in percent, that an interval is long.
    pub long_percent: u32,
}

impl Default for RandomShape {
    fn default() -> RandomShape {
        RandomShape {
            density: 3,
            short_len: 3,
            long_len: 16,
            long_percent: 25,
        }
    }
}

pub fn random_interval_rep_with(
    n: usize,
    max_m: usize,
    seed: u64,
    shape: RandomShape,
) -> DIntervalRep {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = (shape.density as i64 * n as i64).max(4);
    let max_len = shape.long_len.max(shape.short_len) as i64;
    // Live intervals keyed by (left, id).
    let mut by_left: BTreeMap<(i64, usize), i64> = BTreeMap::new();
    let mut placed: Vec<(i64, i64)> = Vec::with_capacity(n);
    let mut far_right = span + max_len + 2;

    let neighbours =
        |by_left: &BTreeMap<(i64, usize), i64>, l: i64, r: i64| -> Vec<(usize, i64, i64)> {
            by_left
                .range((l - max_len, 0)..=(r, usize::MAX))
                .filter(|(&(_, _), &rr)| rr >= l)
                .map(|(&(ll, id), &rr)| (id, ll, rr))
                .collect()
        };
    let m_of = |nb: &[(usize, i64, i64)]| -> usize {
        let items: Vec<Interval> = nb.iter().map(|&(_, l, r)| Interval::ints(l, r)).collect();
        let all: Vec<usize> = (0..items.len()).collect();
        greedy_disjoint(&items, &all, |i| nb[i].0).len()
    };

    for id in 0..n {
        let mut accepted = None;
        for _ in 0..32 {
            let l = rng.gen_range(0..span);
            let len = if rng.gen_range(0..100) < shape.long_percent {
                rng.gen_range(0..=shape.long_len as i64)
            } else {
                rng.gen_range(0..=shape.short_len as i64)
            };
            let r = l + len;
            let nb = neighbours(&by_left, l, r);
            if m_of(&nb) > max_m {
                continue;
            }
            let ok = nb.iter().all(|&(u, ul, ur)| {
                let mut unb = neighbours(&by_left, ul, ur);
                unb.retain(|&(w, _, _)| w != u);
                unb.push((usize::MAX, l, r));
                m_of(&unb) <= max_m
            });
            if ok {
                accepted = Some((l, r));
                break;
            }
        }
        let (l, r) = accepted.unwrap_or_else(|| {
            let x = far_right;
            far_right += 2;
            (x, x)
        });
        by_left.insert((l, id), r);
        placed.push((l, r));
    }
    DIntervalRep::from_intervals(
        placed
            .into_iter()
            .enumerate()
            .map(|(i, (l, r))| (i + 1, Interval::ints(l, r))),
    )
}
