//! Simple undirected graphs on vertices `1..=n` and the induced-subgraph
//! queries used throughout the crate: induced stars (claws), maximal claws
//! and E-claws.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Vertex identifier. Vertices are numbered from 1, as in the figures the
/// named instances are taken from.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("not an induced star: {0}")]
    InvalidWitness(&'static str),
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph, rejecting self-loops, repeated edges and vertices
    /// outside `1..=n`. Edge orientation is irrelevant.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u - 1].push(v);
            adj[v - 1].push(u);
            m += 1;
        }
        for (i, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (i + 1, w[0]);
                return Err(GraphError::DuplicateEdge(a.min(b), a.max(b)));
            }
        }
        Ok(Graph { adj, m })
    }

    /// Like [`Graph::from_edges`] but silently merges repeated pairs and
    /// drops loops. Used for derived graphs where multiplicity is noise.
    pub fn from_edges_dedup<I>(n: usize, edges: I) -> Graph
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u >= 1 && u <= n && v >= 1 && v <= n, "vertex out of range");
            if u != v {
                adj[u - 1].push(v);
                adj[v - 1].push(u);
            }
        }
        let mut m = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Graph { adj, m: m / 2 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> core::ops::RangeInclusive<Vertex> {
        1..=self.adj.len()
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        if u == 0 || v == 0 || u > self.n() || v > self.n() {
            return false;
        }
        let (a, b) = if self.adj[u - 1].len() <= self.adj[v - 1].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a - 1].binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, list)| {
            let u = i + 1;
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for s in 1..=n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `vs`; vertex `vs[i]` becomes `i + 1`.
    pub fn induced_subgraph(&self, vs: &[Vertex]) -> Graph {
        let mut index = vec![0usize; self.n() + 1];
        for (i, &v) in vs.iter().enumerate() {
            index[v] = i + 1;
        }
        let mut edges = Vec::new();
        for (i, &v) in vs.iter().enumerate() {
            for &w in self.neighbors(v) {
                if index[w] > i + 1 {
                    edges.push((i + 1, index[w]));
                }
            }
        }
        Graph::from_edges_dedup(vs.len(), edges)
    }

    /// Graph on `n + extra` vertices with the same edges.
    pub fn with_extra_vertices(&self, extra: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj.resize(self.n() + extra, Vec::new());
        Graph { adj, m: self.m }
    }

    /// Returns a copy with the edges in `add` inserted (existing ones ignored).
    pub fn with_edges<I>(&self, add: I) -> Graph
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Graph::from_edges_dedup(self.n(), self.edges().chain(add))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", u, v)?;
        }
        write!(f, "])")
    }
}

/// An induced `K_{1,t}`: `center` is adjacent to every leaf and the leaves
/// are pairwise non-adjacent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarWitness {
    pub center: Vertex,
    pub leaves: Vec<Vertex>,
}

impl StarWitness {
    pub fn new(center: Vertex, leaves: &[Vertex]) -> StarWitness {
        StarWitness {
            center,
            leaves: leaves.to_vec(),
        }
    }

    pub fn t(&self) -> usize {
        self.leaves.len()
    }
}

impl fmt::Display for StarWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};", self.center)?;
        for (i, l) in self.leaves.iter().enumerate() {
            write!(f, "{}{}", if i == 0 { " " } else { "," }, l)?;
        }
        write!(f, "]")
    }
}

/// Checks that `w` is an induced star of `g`.
pub fn is_induced_star(g: &Graph, w: &StarWitness) -> bool {
    validate_star(g, w).is_ok()
}

fn validate_star(g: &Graph, w: &StarWitness) -> Result<(), GraphError> {
    let n = g.n();
    let in_range = |v: Vertex| v >= 1 && v <= n;
    if !in_range(w.center) || !w.leaves.iter().all(|&l| in_range(l)) {
        return Err(GraphError::InvalidWitness("vertex out of range"));
    }
    for (i, &a) in w.leaves.iter().enumerate() {
        if a == w.center || !g.has_edge(w.center, a) {
            return Err(GraphError::InvalidWitness("leaf not adjacent to center"));
        }
        for &b in &w.leaves[i + 1..] {
            if a == b || g.has_edge(a, b) {
                return Err(GraphError::InvalidWitness("leaves not independent"));
            }
        }
    }
    Ok(())
}

/// Extends `chosen` to an independent set of size `t` using candidates from
/// `cands[from..]`. Lexicographically first completion.
fn independent_extension(
    g: &Graph,
    cands: &[Vertex],
    from: usize,
    chosen: &mut Vec<Vertex>,
    t: usize,
) -> bool {
    if chosen.len() == t {
        return true;
    }
    let need = t - chosen.len();
    let mut i = from;
    while i + need <= cands.len() {
        let c = cands[i];
        if chosen.iter().all(|&x| !g.has_edge(x, c)) {
            chosen.push(c);
            if independent_extension(g, cands, i + 1, chosen, t) {
                return true;
            }
            chosen.pop();
        }
        i += 1;
    }
    false
}

/// Searches for an induced `K_{1,t}`, trying centers in increasing order and
/// the lexicographically first leaf set for each center.
pub fn has_induced_star(g: &Graph, t: usize) -> Option<StarWitness> {
    assert!(t >= 1, "t must be positive");
    for c in g.vertices() {
        let nb = g.neighbors(c);
        if nb.len() < t {
            continue;
        }
        let mut chosen = Vec::with_capacity(t);
        if independent_extension(g, nb, 0, &mut chosen, t) {
            return Some(StarWitness {
                center: c,
                leaves: chosen,
            });
        }
    }
    None
}

/// Smallest vertex that extends `w` to an induced `K_{1,t+1}` with the same
/// center, if any.
pub fn claw_extension(g: &Graph, w: &StarWitness) -> Result<Option<Vertex>, GraphError> {
    validate_star(g, w)?;
    Ok(g.neighbors(w.center)
        .iter()
        .copied()
        .find(|&x| !w.leaves.contains(&x) && w.leaves.iter().all(|&l| !g.has_edge(l, x))))
}

/// True iff no vertex extends the star to a larger induced star with the same
/// center.
pub fn is_maximal_claw(g: &Graph, w: &StarWitness) -> Result<bool, GraphError> {
    Ok(claw_extension(g, w)?.is_none())
}

/// All maximal induced `K_{1,t}` (leaves sorted, centers ascending).
pub fn maximal_claws(g: &Graph, t: usize) -> Vec<StarWitness> {
    let mut out = Vec::new();
    let mut leaves = Vec::with_capacity(t);
    for c in g.vertices() {
        let nb = g.neighbors(c);
        enumerate_independent(g, nb, 0, &mut leaves, t, &mut |ls| {
            let ext = nb
                .iter()
                .any(|&x| !ls.contains(&x) && ls.iter().all(|&l| !g.has_edge(l, x)));
            if !ext {
                out.push(StarWitness::new(c, ls));
            }
        });
    }
    out
}

fn enumerate_independent(
    g: &Graph,
    cands: &[Vertex],
    from: usize,
    chosen: &mut Vec<Vertex>,
    t: usize,
    f: &mut dyn FnMut(&[Vertex]),
) {
    if chosen.len() == t {
        f(chosen);
        return;
    }
    let need = t - chosen.len();
    let mut i = from;
    while i + need <= cands.len() {
        let c = cands[i];
        if chosen.iter().all(|&x| !g.has_edge(x, c)) {
            chosen.push(c);
            enumerate_independent(g, cands, i + 1, chosen, t, f);
            chosen.pop();
        }
        i += 1;
    }
}

/// Six vertices `[v1, .., v6]` inducing the E graph: the path
/// `v1 v2 v3 v4 v5` plus the edge `v3 v6`. The claw `[v3; v2, v4, v6]` is
/// the E-claw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EClawWitness(pub [Vertex; 6]);

impl EClawWitness {
    pub fn claw(&self) -> StarWitness {
        let v = self.0;
        let mut leaves = [v[1], v[3], v[5]];
        leaves.sort_unstable();
        StarWitness::new(v[2], &leaves)
    }
}

/// Checks that `w` induces exactly the E graph in `g`.
pub fn is_induced_e(g: &Graph, w: &EClawWitness) -> bool {
    let v = w.0;
    for i in 0..6 {
        if v[i] == 0 || v[i] > g.n() || v[..i].contains(&v[i]) {
            return false;
        }
    }
    const E: [(usize, usize); 5] = [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)];
    for i in 0..6 {
        for j in i + 1..6 {
            let want = E.contains(&(i, j));
            if g.has_edge(v[i], v[j]) != want {
                return false;
            }
        }
    }
    true
}

/// First E-claw found: a maximal induced 3-claw contained in an induced E
/// graph. Claws are visited in [`maximal_claws`] order; for each, the third
/// leaf (`v6`) is tried in leaf order and pendants in increasing order.
pub fn find_e_claw(g: &Graph) -> Option<EClawWitness> {
    for claw in maximal_claws(g, 3) {
        let c = claw.center;
        let ls = &claw.leaves;
        for xi in 0..3 {
            let x = ls[xi];
            let (a, b) = match xi {
                0 => (ls[1], ls[2]),
                1 => (ls[0], ls[2]),
                _ => (ls[0], ls[1]),
            };
            let pendant_of = |leaf: Vertex, other: Vertex| {
                g.neighbors(leaf).iter().copied().filter(move |&p| {
                    p != c && !g.has_edge(p, c) && !g.has_edge(p, other) && !g.has_edge(p, x)
                })
            };
            for p in pendant_of(a, b) {
                if let Some(q) = pendant_of(b, a).find(|&q| q != p && !g.has_edge(p, q)) {
                    return Some(EClawWitness([p, a, c, b, q, x]));
                }
            }
        }
    }
    None
}

pub fn is_e_claw_free(g: &Graph) -> bool {
    find_e_claw(g).is_none()
}
