//! Unit interval test for graphs of at most 128 vertices stored as `u128`
//! adjacency rows: three LexBFS sweeps by bitset partition refinement, then
//! a consecutiveness check of every closed neighbourhood.

pub(crate) type Mask = u128;

pub(crate) const MAX_BITS: usize = 128;

fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

struct Sweep {
    order: [u8; MAX_BITS],
    len: usize,
}

/// One LexBFS over `verts`; ties go to the largest `prev_pos` when given,
/// otherwise to the lowest index.
fn lexbfs(adj: &[Mask], verts: Mask, prev_pos: Option<&[u8; MAX_BITS]>) -> Sweep {
    let mut classes = [0 as Mask; MAX_BITS];
    let mut scratch = [0 as Mask; MAX_BITS];
    let mut nc = 0;
    if verts != 0 {
        classes[0] = verts;
        nc = 1;
    }
    let mut out = Sweep {
        order: [0; MAX_BITS],
        len: 0,
    };
    let mut head = 0;
    while head < nc {
        let c = classes[head];
        let v = match prev_pos {
            None => c.trailing_zeros() as usize,
            Some(pp) => bits(c).max_by_key(|&u| pp[u]).unwrap(),
        };
        classes[head] &= !(1 << v);
        out.order[out.len] = v as u8;
        out.len += 1;
        let nb = adj[v];
        let mut k = 0;
        for &x in &classes[head..nc] {
            let a = x & nb;
            let b = x & !nb;
            if a != 0 {
                scratch[k] = a;
                k += 1;
            }
            if b != 0 {
                scratch[k] = b;
                k += 1;
            }
        }
        classes[..k].copy_from_slice(&scratch[..k]);
        head = 0;
        nc = k;
    }
    out
}

/// Whether the graph induced on `verts` is a unit interval graph.
pub(crate) fn is_unit_interval(adj: &[Mask], verts: Mask) -> bool {
    if verts.count_ones() <= 3 {
        return true;
    }
    let mut pos = [0u8; MAX_BITS];
    let mut sweep = lexbfs(adj, verts, None);
    for _ in 0..2 {
        for (i, &v) in sweep.order[..sweep.len].iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        sweep = lexbfs(adj, verts, Some(&pos));
    }
    for (i, &v) in sweep.order[..sweep.len].iter().enumerate() {
        pos[v as usize] = i as u8;
    }
    bits(verts).all(|v| {
        let nb = adj[v] & verts;
        let (mut lo, mut hi) = (pos[v], pos[v]);
        for u in bits(nb) {
            lo = lo.min(pos[u]);
            hi = hi.max(pos[u]);
        }
        (hi - lo) as u32 == nb.count_ones()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::random_graph;
    use crate::graph::Graph;
    use crate::recognition::recognize_proper_order;
    use alloc::vec::Vec;

    fn rows(g: &Graph) -> Vec<Mask> {
        let mut adj = alloc::vec![0 as Mask; g.n()];
        for (u, v) in g.edges() {
            adj[u - 1] |= 1 << (v - 1);
            adj[v - 1] |= 1 << (u - 1);
        }
        adj
    }

    #[test]
    fn agrees_with_graph_recognition() {
        for seed in 0..600 {
            let n = 4 + (seed % 6) as usize;
            let g = random_graph(n, 1 + (seed % 3) as u32, 4, seed);
            let all: Mask = (1 << n) - 1;
            assert_eq!(
                is_unit_interval(&rows(&g), all),
                recognize_proper_order(&g).is_some(),
                "{:?}",
                g
            );
        }
    }

    #[test]
    fn induced_subsets() {
        // Claw on 0..4 plus a pendant 4 at leaf 1.
        let g = Graph::from_edges(5, [(1, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        let adj = rows(&g);
        assert!(!is_unit_interval(&adj, 0b01111));
        assert!(is_unit_interval(&adj, 0b10111));
    }
}
