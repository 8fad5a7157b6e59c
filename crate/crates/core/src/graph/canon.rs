//! Canonical labeling for small graphs.
//!
//! Vertices are first colored by iterated degree refinement, which depends
//! only on the isomorphism type. The canonical labeling is the
//! color-respecting ordering whose adjacency bit string, read in colex pair
//! order `(0,1), (0,2), (1,2), (0,3), ..`, is lexicographically smallest.
//! Reading pairs column by column means a partial ordering already fixes a
//! prefix of the string, which lets the search prune early.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::Graph;

/// Isomorphism-class key: the order plus the minimal adjacency bit string.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    order: usize,
    bits: Vec<bool>,
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    let (bits, _) = search(g);
    CanonicalKey {
        order: g.order(),
        bits,
    }
}

/// The canonically labeled copy of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    let (_, perm) = search(g);
    let mut inverse = vec![0usize; g.order()];
    for (pos, &v) in perm.iter().enumerate() {
        inverse[v] = pos;
    }
    g.relabel(&inverse).expect("canonical permutation is valid")
}

fn refine_colors(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut colors: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut classes = {
        let mut c = colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut around: Vec<u32> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colors = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present") as u32)
            .collect();
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    g: &'a Graph,
    colors: Vec<u32>,
    slot_color: Vec<u32>,
    perm: Vec<usize>,
    used: u64,
    key: Vec<bool>,
    best: Option<(Vec<bool>, Vec<usize>)>,
}

impl Search<'_> {
    fn place(&mut self, pos: usize, better: bool) {
        let n = self.g.order();
        if pos == n {
            if better || self.best.is_none() {
                self.best = Some((self.key.clone(), self.perm.clone()));
            }
            return;
        }
        for v in 0..n {
            if self.used >> v & 1 == 1 || self.colors[v] != self.slot_color[pos] {
                continue;
            }
            let start = self.key.len();
            for i in 0..pos {
                let bit = self.g.has_edge(self.perm[i], v);
                self.key.push(bit);
            }
            let mut now_better = better;
            let mut prune = false;
            if !better {
                if let Some((best, _)) = &self.best {
                    match self.key[start..].cmp(&best[start..self.key.len()]) {
                        Ordering::Less => now_better = true,
                        Ordering::Greater => prune = true,
                        Ordering::Equal => {}
                    }
                }
            }
            if !prune {
                self.perm.push(v);
                self.used |= 1 << v;
                self.place(pos + 1, now_better);
                self.used &= !(1 << v);
                self.perm.pop();
            }
            self.key.truncate(start);
        }
    }
}

/// Returns the minimal key and the ordering (position -> vertex) achieving it.
fn search(g: &Graph) -> (Vec<bool>, Vec<usize>) {
    let colors = refine_colors(g);
    let mut slot_color = colors.clone();
    slot_color.sort_unstable();
    let mut s = Search {
        g,
        colors,
        slot_color,
        perm: Vec::with_capacity(g.order()),
        used: 0,
        key: Vec::new(),
        best: None,
    };
    s.place(0, false);
    let (key, perm) = s.best.expect("at least one ordering");
    (key, perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gen_cycle, gen_path};
    use crate::graph::is_isomorphic;

    #[test]
    fn canonical_form_is_invariant() {
        let p = gen_path(5).unwrap();
        let q = p.relabel(&[3, 0, 4, 1, 2]).unwrap();
        assert_eq!(canonical_form(&p), canonical_form(&q));
        assert_eq!(canonical_key(&p), canonical_key(&q));
        assert!(is_isomorphic(&canonical_form(&p), &p));
        assert_ne!(canonical_key(&p), canonical_key(&gen_cycle(5).unwrap()));
        assert_eq!(canonical_form(&Graph::empty()), Graph::empty());
    }
}
