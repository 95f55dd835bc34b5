//! Splitting claw centres: from an interval representation of a
//! `K_{1,2d+1}`-free graph to a unit d-interval representation.
//!
//! Every interval `I` meeting at most two pairwise disjoint intervals is kept.
//! An interval meeting `m >= 3` of them becomes `t = ceil(m / 2)` pieces
//! inside `I`, each meeting at most two disjoint intervals of the new
//! family, while the union keeps all intersections of `I`. The resulting
//! family is claw-free, so [`unitize`](crate::unitizer::unitize) can make
//! it unit. The disjoint variant first clips one side interval of every
//! `m = 3` centre into the centre so that its two pieces can be disjoint.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{find_e_claw, EClawWitness, Graph, Vertex};
use crate::interval::{
    d_intersection_graph, greedy_disjoint, neighbor_lists, verify_representation, DIntervalRep,
    Interval, RepError, Requirements, VerifyReport,
};
use crate::recognition::recognize_interval;
use crate::unitizer::{unitize, UnitizeError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("d must be positive")]
    ZeroD,
    #[error("the graph is not an interval graph")]
    NotInterval,
    #[error(
        "vertex {vertex} meets {m} pairwise disjoint intervals {witness:?}, more than 2d = {bound}"
    )]
    ClawBoundExceeded {
        vertex: Vertex,
        m: usize,
        bound: usize,
        witness: Vec<Vertex>,
    },
    #[error("the graph contains the E-claw {:?}", .0.0)]
    NotEClawFree(EClawWitness),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Unitize(#[from] UnitizeError),
    #[error("no side interval of vertex {0} can be moved inside it")]
    SideNotClippable(Vertex),
    #[error("constructed representation failed verification: {0:?}")]
    Verification(VerifyReport),
}

/// How argmin/argmax ties between equal endpoints are resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    SmallerId,
    LargerId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    /// Pad every vertex to exactly `d` intervals with dummies.
    pub pad: bool,
    pub tie_break: TieBreak,
}

impl Default for BuildOptions {
    fn default() -> BuildOptions {
        BuildOptions {
            pad: true,
            tie_break: TieBreak::SmallerId,
        }
    }
}

/// What the transform does to one interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformPlan {
    pub vertex: Vertex,
    pub m: usize,
    pub t: usize,
    /// `A_1..A_m` (a maximum disjoint witness when `m <= 2`).
    pub a: Vec<Vertex>,
    /// `B_1..B_m`; empty unless `m >= 4`.
    pub b: Vec<Vertex>,
    pub pieces: Vec<Interval>,
}

/// A one-interval-per-vertex family with its intersection structure.
#[derive(Debug, Clone)]
pub struct Family {
    /// Items are stored in order of left endpoint, so that neighbours are
    /// close in memory.
    ids: Vec<Vertex>,
    items: Vec<Interval>,
    nb: Vec<Vec<usize>>,
    /// `(vertex, index)` sorted by vertex.
    by_id: Vec<(Vertex, usize)>,
}

impl Family {
    pub fn from_rep(rep: &DIntervalRep) -> Result<Family, RepError> {
        let mut order: Vec<(Vertex, &Interval)> = Vec::with_capacity(rep.len());
        for (&v, ps) in rep.parts() {
            if ps.len() != 1 {
                return Err(RepError::NotSingleInterval(v));
            }
            order.push((v, &ps[0]));
        }
        order.sort_by(|a, b| {
            a.1.l
                .cmp(&b.1.l)
                .then_with(|| a.1.r.cmp(&b.1.r))
                .then(a.0.cmp(&b.0))
        });
        let ids: Vec<Vertex> = order.iter().map(|&(v, _)| v).collect();
        let items: Vec<Interval> = order.iter().map(|&(_, iv)| iv.clone()).collect();
        let mut by_id: Vec<(Vertex, usize)> =
            ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        by_id.sort_unstable();
        let nb = neighbor_lists(&items);
        Ok(Family {
            ids,
            items,
            nb,
            by_id,
        })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn vertex(&self, i: usize) -> Vertex {
        self.ids[i]
    }

    pub fn interval(&self, i: usize) -> &Interval {
        &self.items[i]
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.by_id
            .binary_search_by_key(&v, |&(u, _)| u)
            .ok()
            .map(|k| self.by_id[k].1)
    }

    /// Sorts ascending: the preferred index comes first.
    fn key(&self, i: usize, tie: TieBreak) -> usize {
        match tie {
            TieBreak::SmallerId => self.ids[i],
            TieBreak::LargerId => usize::MAX - self.ids[i],
        }
    }

    fn argmin_r(&self, cands: impl Iterator<Item = usize>, tie: TieBreak) -> Option<usize> {
        cands.min_by(|&a, &b| {
            self.items[a]
                .r
                .cmp(&self.items[b].r)
                .then_with(|| self.key(a, tie).cmp(&self.key(b, tie)))
        })
    }

    fn argmax_l(&self, cands: impl Iterator<Item = usize>, tie: TieBreak) -> Option<usize> {
        cands.min_by(|&a, &b| {
            self.items[b]
                .l
                .cmp(&self.items[a].l)
                .then_with(|| self.key(a, tie).cmp(&self.key(b, tie)))
        })
    }

    /// Maximum number of pairwise disjoint neighbours of item `i`, with a
    /// witness of item indices.
    pub fn max_disjoint(&self, i: usize, tie: TieBreak) -> Vec<usize> {
        greedy_disjoint(&self.items, &self.nb[i], |j| self.key(j, tie))
    }

    /// `A_1`, `A_2` (earliest finishing) and `A_3`, `A_4` (latest starting).
    fn side_four(&self, i: usize, tie: TieBreak) -> [usize; 4] {
        let nb = &self.nb[i];
        let a1 = self.argmin_r(nb.iter().copied(), tie).unwrap();
        let a2 = self
            .argmin_r(
                nb.iter()
                    .copied()
                    .filter(|&j| self.items[a1].r < self.items[j].l),
                tie,
            )
            .unwrap();
        let a4 = self.argmax_l(nb.iter().copied(), tie).unwrap();
        let a3 = self
            .argmax_l(
                nb.iter()
                    .copied()
                    .filter(|&j| self.items[j].r < self.items[a4].l),
                tie,
            )
            .unwrap();
        [a1, a2, a3, a4]
    }

    /// The transform of item `i`. With `disjoint`, an `m = 3` item whose
    /// `A_1` (or else `A_4`) lies inside it uses that interval as a piece.
    pub fn plan(&self, i: usize, tie: TieBreak, disjoint: bool) -> TransformPlan {
        let me = &self.items[i];
        let witness = self.max_disjoint(i, tie);
        let m = witness.len();
        let ids = |xs: &[usize]| xs.iter().map(|&j| self.ids[j]).collect::<Vec<_>>();
        if m <= 2 {
            return TransformPlan {
                vertex: self.ids[i],
                m,
                t: 1,
                a: ids(&witness),
                b: Vec::new(),
                pieces: vec![me.clone()],
            };
        }
        if m == 3 {
            let [a1, a2, a3, a4] = self.side_four(i, tie);
            let (x1, x2, x3, x4) = (
                &self.items[a1],
                &self.items[a2],
                &self.items[a3],
                &self.items[a4],
            );
            let pieces = if disjoint && me.contains(x1) {
                vec![x1.clone(), Interval::new(x3.l.clone(), me.r.clone())]
            } else if disjoint && me.contains(x4) {
                vec![Interval::new(me.l.clone(), x2.r.clone()), x4.clone()]
            } else {
                vec![
                    Interval::new(me.l.clone(), x2.r.clone()),
                    Interval::new(x3.l.clone(), me.r.clone()),
                ]
            };
            return TransformPlan {
                vertex: self.ids[i],
                m,
                t: 2,
                a: ids(&[a1, a2, a3, a4]),
                b: Vec::new(),
                pieces,
            };
        }
        // m >= 4: A_1..A_{m-2} forward, A_m and A_{m-1} backward.
        let nb = &self.nb[i];
        let mut a: Vec<usize> = Vec::with_capacity(m);
        for _ in 0..m - 2 {
            let next = match a.last() {
                None => self.argmin_r(nb.iter().copied(), tie),
                Some(&p) => self.argmin_r(
                    nb.iter()
                        .copied()
                        .filter(|&j| self.items[p].r < self.items[j].l),
                    tie,
                ),
            };
            a.push(next.expect("greedy chain has length m"));
        }
        let am = self.argmax_l(nb.iter().copied(), tie).unwrap();
        let am1 = self
            .argmax_l(
                nb.iter()
                    .copied()
                    .filter(|&j| self.items[j].r < self.items[am].l),
                tie,
            )
            .unwrap();
        a.push(am1);
        a.push(am);
        let b: Vec<usize> = a
            .iter()
            .map(|&x| {
                self.argmax_l(core::iter::once(x).chain(self.nb[x].iter().copied()), tie)
                    .unwrap()
            })
            .collect();
        // 1-based accessors.
        let ai = |k: usize| &self.items[a[k - 1]];
        let bi = |k: usize| &self.items[b[k - 1]];
        let t = m.div_ceil(2);
        let mut pieces = Vec::with_capacity(t);
        pieces.push(Interval::new(me.l.clone(), ai(2).r.clone()));
        if m.is_multiple_of(2) {
            for k in 2..t {
                pieces.push(Interval::new(bi(2 * k - 1).l.clone(), ai(2 * k).r.clone()));
            }
            pieces.push(Interval::new(ai(2 * t - 1).l.clone(), me.r.clone()));
        } else {
            for k in 2..t - 1 {
                pieces.push(Interval::new(bi(2 * k - 1).l.clone(), ai(2 * k).r.clone()));
            }
            pieces.push(ai(2 * t - 3).clone());
            pieces.push(Interval::new(ai(2 * t - 2).l.clone(), me.r.clone()));
        }
        TransformPlan {
            vertex: self.ids[i],
            m,
            t,
            a: ids(&a),
            b: ids(&b),
            pieces,
        }
    }

    /// Fails on the first item meeting more than `2d` disjoint intervals.
    pub fn check_claw_bound(&self, d: usize, tie: TieBreak) -> Result<(), ConstructionError> {
        // Memory order, reporting the smallest offending vertex.
        let worst = (0..self.len())
            .filter(|&i| self.max_disjoint(i, tie).len() > 2 * d)
            .min_by_key(|&i| self.ids[i]);
        match worst {
            None => Ok(()),
            Some(i) => {
                let w = self.max_disjoint(i, tie);
                Err(ConstructionError::ClawBoundExceeded {
                    vertex: self.ids[i],
                    m: w.len(),
                    bound: 2 * d,
                    witness: w.iter().map(|&j| self.ids[j]).collect(),
                })
            }
        }
    }

    /// Moves, for every `m = 3` item, its `A_1` (or else `A_4`) inside it by
    /// cutting off the part outside. Allowed when every neighbour of that
    /// side interval meets the item: three pairwise intersecting intervals
    /// share a point, so no intersection is lost. Repeats until stable.
    fn clip_sides(&mut self, tie: TieBreak) -> Result<(), ConstructionError> {
        let threes: Vec<usize> = self
            .by_id
            .iter()
            .map(|&(_, i)| i)
            .filter(|&i| self.max_disjoint(i, tie).len() == 3)
            .collect();
        loop {
            let mut changed = false;
            for &i in &threes {
                let [a1, _, _, a4] = self.side_four(i, tie);
                let me = self.items[i].clone();
                if me.contains(&self.items[a1]) || me.contains(&self.items[a4]) {
                    continue;
                }
                let inner = |s: usize| {
                    self.nb[s]
                        .iter()
                        .all(|&j| j == i || self.items[j].intersects(&me))
                };
                let side = if inner(a1) {
                    a1
                } else if inner(a4) {
                    a4
                } else {
                    return Err(ConstructionError::SideNotClippable(self.ids[i]));
                };
                let s = &self.items[side];
                let l = s.l.max_ref(&me.l).clone();
                let r = s.r.min_ref(&me.r).clone();
                self.items[side] = Interval::new(l, r);
                changed = true;
            }
            if !changed {
                return Ok(());
            }
        }
    }

    fn as_rep(&self) -> DIntervalRep {
        DIntervalRep::from_intervals(self.ids.iter().copied().zip(self.items.iter().cloned()))
    }
}

/// [`Family::plan`] for vertex `v` of a one-interval-per-vertex
/// representation.
pub fn transform_interval(rep: &DIntervalRep, v: Vertex) -> Result<TransformPlan, RepError> {
    let fam = Family::from_rep(rep)?;
    let i = fam.index_of(v).ok_or(RepError::UnknownVertex(v))?;
    Ok(fam.plan(i, TieBreak::SmallerId, false))
}

/// `max(1, ceil(max m / 2))`: the smallest `d` the transform needs.
pub fn required_d(rep: &DIntervalRep) -> Result<usize, RepError> {
    let fam = Family::from_rep(rep)?;
    let m = (0..fam.len())
        .map(|i| fam.max_disjoint(i, TieBreak::SmallerId).len())
        .max()
        .unwrap_or(0);
    Ok(m.div_ceil(2).max(1))
}

/// The transformed family before unitization: every vertex owns its pieces.
/// This is the linear-time phase of the construction.
pub fn transform_family(
    rep: &DIntervalRep,
    d: usize,
    tie: TieBreak,
) -> Result<DIntervalRep, ConstructionError> {
    if d == 0 {
        return Err(ConstructionError::ZeroD);
    }
    let fam = Family::from_rep(rep)?;
    fam.check_claw_bound(d, tie)?;
    Ok(collect_plans(&fam, d, tie, false))
}

fn collect_plans(fam: &Family, d: usize, tie: TieBreak, disjoint: bool) -> DIntervalRep {
    let mut out = DIntervalRep::new(d).unwrap();
    let mut plans: Vec<(Vertex, Vec<Interval>)> = (0..fam.len())
        .map(|i| {
            let plan = fam.plan(i, tie, disjoint);
            (plan.vertex, plan.pieces)
        })
        .collect();
    plans.sort_unstable_by_key(|p| p.0);
    for (v, pieces) in plans {
        out.insert(v, pieces).expect("t <= d");
    }
    out
}

/// Unitizes a transformed family, pads it and checks it against `g`.
fn finish(
    pieces: DIntervalRep,
    g: &Graph,
    opts: BuildOptions,
    disjoint: bool,
) -> Result<DIntervalRep, ConstructionError> {
    let labelled: Vec<((Vertex, usize), Interval)> = pieces
        .parts()
        .iter()
        .flat_map(|(&v, ps)| {
            ps.iter()
                .enumerate()
                .map(move |(k, iv)| ((v, k), iv.clone()))
        })
        .collect();
    let unit = unitize(&labelled)?;
    let mut out = DIntervalRep::new(pieces.d()).unwrap();
    let mut cur: Vec<Interval> = Vec::new();
    let mut owner = None;
    for ((v, _), iv) in unit {
        if owner != Some(v) {
            if let Some(u) = owner {
                out.insert(u, core::mem::take(&mut cur))?;
            }
            owner = Some(v);
        }
        cur.push(iv);
    }
    if let Some(u) = owner {
        out.insert(u, cur)?;
    }
    if opts.pad {
        out.pad_with_dummies();
    }
    let report = verify_representation(
        &out,
        g,
        Requirements {
            unit: true,
            disjoint,
            balanced: false,
        },
    );
    if !report.ok() {
        return Err(ConstructionError::Verification(report));
    }
    Ok(out)
}

/// A unit d-interval representation with the same intersection graph as
/// `rep` (one interval per vertex). Fails if some interval meets more than
/// `2d` pairwise disjoint intervals.
pub fn build_unit_d_rep(
    rep: &DIntervalRep,
    d: usize,
    opts: BuildOptions,
) -> Result<DIntervalRep, ConstructionError> {
    let pieces = transform_family(rep, d, opts.tie_break)?;
    finish(pieces, &d_intersection_graph(rep), opts, false)
}

/// [`build_unit_d_rep`] for a graph, computing an interval representation
/// first. Vertices absent from every edge still get an interval.
pub fn build_unit_d_rep_for_graph(
    g: &Graph,
    d: usize,
    opts: BuildOptions,
) -> Result<DIntervalRep, ConstructionError> {
    let rep = recognize_interval(g).ok_or(ConstructionError::NotInterval)?;
    build_unit_d_rep(&rep, d, opts)
}

/// A disjoint unit d-interval representation for an E-claw-free graph: as
/// [`build_unit_d_rep`], with the pieces of every `m = 3` interval made
/// disjoint by first clipping a side interval into it.
pub fn build_disjoint_unit_d_rep_eclaw_free(
    rep: &DIntervalRep,
    d: usize,
    opts: BuildOptions,
) -> Result<DIntervalRep, ConstructionError> {
    if d == 0 {
        return Err(ConstructionError::ZeroD);
    }
    let g = d_intersection_graph(rep);
    if let Some(w) = find_e_claw(&g) {
        return Err(ConstructionError::NotEClawFree(w));
    }
    let mut fam = Family::from_rep(rep)?;
    fam.check_claw_bound(d, opts.tie_break)?;
    fam.clip_sides(opts.tie_break)?;
    debug_assert_eq!(d_intersection_graph(&fam.as_rep()), g);
    let pieces = collect_plans(&fam, d, opts.tie_break, true);
    finish(pieces, &g, opts, true)
}

/// [`build_disjoint_unit_d_rep_eclaw_free`] for a graph.
pub fn build_disjoint_unit_d_rep_for_graph(
    g: &Graph,
    d: usize,
    opts: BuildOptions,
) -> Result<DIntervalRep, ConstructionError> {
    let rep = recognize_interval(g).ok_or(ConstructionError::NotInterval)?;
    build_disjoint_unit_d_rep_eclaw_free(&rep, d, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        counterexample_graph, counterexample_interval_rep, counterexample_two_interval_rep,
        eight_claw_rep,
    };
    use crate::rational::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn eight_claw_pieces() {
        let plan = transform_interval(&eight_claw_rep(), 1).unwrap();
        assert_eq!((plan.m, plan.t), (8, 4));
        assert_eq!(plan.a, vec![2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(plan.b[2], 12);
        assert_eq!(
            plan.pieces,
            vec![
                Interval::ints(-10, -4),
                Interval::ints(-1, 3),
                Interval::ints(4, 11),
                Interval::ints(12, 18)
            ]
        );
        assert_eq!(required_d(&eight_claw_rep()), Ok(4));
    }

    #[test]
    fn counterexample_pieces() {
        let rep = counterexample_interval_rep();
        let plan = transform_interval(&rep, 8).unwrap();
        assert_eq!(plan.m, 3);
        assert_eq!(
            plan.pieces,
            vec![Interval::ints(-3, 1), Interval::ints(-1, 3)]
        );
        let plan = transform_interval(&rep, 2).unwrap();
        assert_eq!(
            (plan.m, plan.pieces.clone()),
            (1, vec![Interval::ints(-10, -9)])
        );
        assert_eq!(required_d(&rep), Ok(2));
        // The whole transformed family is the two-interval figure.
        let fam = transform_family(&rep, 2, TieBreak::SmallerId).unwrap();
        assert_eq!(fam, counterexample_two_interval_rep());
        let plan = transform_interval(&rep, 3).unwrap();
        assert_eq!(
            plan.pieces,
            vec![Interval::ints(-8, -5), Interval::new(r(-1, 1), r(9, 2))]
        );
    }

    #[test]
    fn counterexample_builds() {
        let g = counterexample_graph(0).unwrap();
        let out = build_unit_d_rep_for_graph(&g, 2, BuildOptions::default()).unwrap();
        assert!(out.parts().values().all(|ps| ps.len() == 2));
        assert!(matches!(
            build_unit_d_rep_for_graph(&g, 1, BuildOptions::default()),
            Err(ConstructionError::ClawBoundExceeded { m: 4, .. })
        ));
        match build_unit_d_rep(&counterexample_interval_rep(), 1, BuildOptions::default()) {
            Err(ConstructionError::ClawBoundExceeded {
                vertex, witness, ..
            }) => {
                assert_eq!((vertex, witness), (1, vec![2, 4, 6, 8]));
            }
            other => panic!("{:?}", other),
        }
        match build_disjoint_unit_d_rep_eclaw_free(
            &counterexample_interval_rep(),
            2,
            BuildOptions::default(),
        ) {
            Err(ConstructionError::NotEClawFree(w)) => {
                assert!(crate::graph::is_induced_e(&g, &w))
            }
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn path_gets_dummies() {
        let p4 = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        let out = build_unit_d_rep_for_graph(&p4, 2, BuildOptions::default()).unwrap();
        assert!(out.parts().values().all(|ps| ps.len() == 2));
        let bare = build_unit_d_rep_for_graph(
            &p4,
            2,
            BuildOptions {
                pad: false,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(bare.is_single());
        let disjoint =
            build_disjoint_unit_d_rep_for_graph(&p4, 3, BuildOptions::default()).unwrap();
        assert!(disjoint.parts().values().all(|ps| ps.len() == 3));
    }

    #[test]
    fn four_claw_disjoint() {
        // A centre meeting four disjoint intervals with overlapping helpers.
        let rep = DIntervalRep::from_intervals([
            (1, Interval::ints(0, 20)),
            (2, Interval::ints(-1, 1)),
            (3, Interval::ints(3, 5)),
            (4, Interval::ints(7, 9)),
            (5, Interval::ints(11, 13)),
            (6, Interval::ints(4, 8)),
        ]);
        let out = build_disjoint_unit_d_rep_eclaw_free(&rep, 2, BuildOptions::default()).unwrap();
        assert_eq!(out.get(1).unwrap().len(), 2);
    }
}
