use alloc::vec::Vec;

use super::{low_mask, Graph, VertexSet};

/// All cliques with `1..=max_size` vertices, ordered by size and then
/// lexicographically. Each level extends the previous one by a vertex larger
/// than the clique's maximum that is adjacent to all of it.
pub fn enumerate_cliques(g: &Graph, max_size: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if max_size == 0 {
        return out;
    }
    let mut level: Vec<VertexSet> = g.vertices().iter().map(VertexSet::singleton).collect();
    let mut size = 1;
    loop {
        out.extend_from_slice(&level);
        if size == max_size || level.is_empty() {
            break;
        }
        let mut next = Vec::new();
        for c in &level {
            let top = c.max().unwrap_or(0);
            let mut common = g.vertices().bits() & !low_mask(top + 1);
            for v in c.iter() {
                common &= g.row(v);
            }
            for v in VertexSet::from_bits(common) {
                next.push(c.with(v));
            }
        }
        level = next;
        size += 1;
    }
    out
}

/// Size of a largest clique (0 for the empty graph).
pub fn clique_number(g: &Graph) -> usize {
    fn grow(g: &Graph, size: usize, cands: u64, best: &mut usize) {
        if cands == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cands.count_ones() as usize <= *best {
            return;
        }
        let mut rest = cands;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            grow(g, size + 1, rest & g.row(v), best);
            if size + rest.count_ones() as usize <= *best {
                return;
            }
        }
        *best = (*best).max(size);
    }
    let mut best = 0;
    grow(g, 0, g.vertices().bits(), &mut best);
    best
}
