//! Graphs with undecided pairs, and sound tests on every completion.
//!
//! A test here answers "every completion fails" only when that is certain;
//! otherwise it answers no and the search goes on.

use alloc::vec;
use alloc::vec::Vec;

use crate::class::ClassSpec;
use crate::graph::{Graph, VertexSet};
use crate::relations::{rel_component, SubmodelRelation};

#[derive(Clone, Debug)]
pub(crate) struct PartialGraph {
    order: usize,
    edge: Vec<u64>,
    known: Vec<u64>,
}

impl PartialGraph {
    pub fn new(order: usize) -> Self {
        PartialGraph {
            order,
            edge: vec![0; order],
            known: vec![0; order],
        }
    }

    pub fn decide(&mut self, u: usize, v: usize, present: bool) {
        self.known[u] |= 1 << v;
        self.known[v] |= 1 << u;
        if present {
            self.edge[u] |= 1 << v;
            self.edge[v] |= 1 << u;
        } else {
            self.edge[u] &= !(1 << v);
            self.edge[v] &= !(1 << u);
        }
    }

    pub fn forget(&mut self, u: usize, v: usize) {
        self.known[u] &= !(1 << v);
        self.known[v] &= !(1 << u);
        self.edge[u] &= !(1 << v);
        self.edge[v] &= !(1 << u);
    }

    pub fn is_known(&self, u: usize, v: usize) -> bool {
        self.known[u] >> v & 1 == 1
    }

    fn to_graph(&self, rows: impl Fn(usize) -> u64) -> Graph {
        let mut g = Graph::edgeless(self.order).expect("order already checked");
        for u in 0..self.order {
            let row = rows(u);
            for v in u + 1..self.order {
                if row >> v & 1 == 1 {
                    g.set_edge(u, v, true);
                }
            }
        }
        g
    }

    /// Known edges only.
    pub fn definite(&self) -> Graph {
        self.to_graph(|u| self.edge[u])
    }

    /// Known edges plus every undecided pair.
    pub fn possible(&self) -> Graph {
        self.to_graph(|u| self.edge[u] | !self.known[u] & !(1 << u))
    }

    /// `h` embeds using decided pairs only, so it embeds in every completion.
    pub fn definitely_embeds(&self, h: &Graph) -> bool {
        self.find(h, true, &mut |_| true)
    }

    /// `h` embeds in some completion.
    pub fn possibly_embeds(&self, h: &Graph) -> bool {
        self.find(h, false, &mut |_| true)
    }

    /// Backtracking over maps of `h`; with `strict` every pair used must be
    /// decided. Stops at the first map `accept` takes.
    fn find(&self, h: &Graph, strict: bool, accept: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if h.order() > self.order {
            return false;
        }
        let mut map = vec![0usize; h.order()];
        self.extend(h, strict, 0, 0, &mut map, accept)
    }

    fn extend(
        &self,
        h: &Graph,
        strict: bool,
        u: usize,
        used: u64,
        map: &mut [usize],
        accept: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if u == h.order() {
            return accept(map);
        }
        let mut placed = 0u64;
        let mut want = 0u64;
        for (w, &mw) in map.iter().enumerate().take(u) {
            placed |= 1 << mw;
            if h.has_edge(u, w) {
                want |= 1 << mw;
            }
        }
        for c in 0..self.order {
            if used >> c & 1 == 1 {
                continue;
            }
            let known = self.known[c] & placed;
            let ok = if strict {
                known == placed && self.edge[c] & placed == want
            } else {
                (self.edge[c] ^ want) & known == 0
            };
            if ok {
                map[u] = c;
                if self.extend(h, strict, u + 1, used | 1 << c, map, accept) {
                    return true;
                }
            }
        }
        false
    }

    /// A definite copy of `base` with two distinct outside vertices whose
    /// decided adjacencies to it are exactly `p` and `q`.
    fn definitely_realizes_both(&self, base: &Graph, p: &[bool], q: &[bool]) -> bool {
        self.find(base, true, &mut |map| {
            let image: u64 = map.iter().fold(0, |acc, &v| acc | 1 << v);
            let matches = |z: usize, pat: &[bool]| {
                self.known[z] & image == image
                    && map.iter().zip(pat).all(|(&b, &want)| (self.edge[z] >> b & 1 == 1) == want)
            };
            let mut has_p = false;
            let mut has_q = false;
            for z in (0..self.order).filter(|z| image >> z & 1 == 0) {
                if matches(z, p) {
                    has_p = true;
                } else if matches(z, q) {
                    has_q = true;
                }
            }
            has_p && has_q
        })
    }
}

/// Every completion lies outside `class`.
pub(crate) fn forced_nonmember(class: &ClassSpec, pg: &PartialGraph) -> bool {
    match class {
        ClassSpec::Forb { family } => family.iter().any(|f| pg.definitely_embeds(f)),
        ClassSpec::ForbCon { .. } => false,
        ClassSpec::CompMax { n } => pg.definite().components().blocks().iter().any(|c| c.len() > *n),
        ClassSpec::CompCond { k, n } => {
            pg.definite().components().blocks().iter().any(|c| c.len() > *n)
                && pg.possible().components().len() >= *k
        }
        ClassSpec::NotAllEmbed { family } => family.iter().all(|f| pg.definitely_embeds(f)),
        ClassSpec::NotBothTypes { base, p, q } => pg.definitely_realizes_both(base, p, q),
        ClassSpec::Sentence { expr, env } => {
            let value = expr.eval_kleene(&mut |i| {
                if pg.definitely_embeds(&env[i]) {
                    Some(true)
                } else if !pg.possibly_embeds(&env[i]) {
                    Some(false)
                } else {
                    None
                }
            });
            value == Some(false)
        }
    }
}

/// Every completion breaks `image ⪯ completion`. Only the no-merging part of
/// the component relation is monotone in added edges.
pub(crate) fn forced_violation(rel: &SubmodelRelation, pg: &PartialGraph, image: VertexSet) -> bool {
    match rel {
        SubmodelRelation::Component { .. } => !rel_component(image, &pg.definite(), false),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gen_complete, gen_path};
    use crate::graph::embeds;

    #[test]
    fn three_valued_embedding() {
        let mut pg = PartialGraph::new(3);
        pg.decide(0, 1, true);
        pg.decide(1, 2, true);
        let k3 = gen_complete(3).unwrap();
        let p3 = gen_path(3).unwrap();
        assert!(!pg.definitely_embeds(&k3));
        assert!(pg.possibly_embeds(&k3));
        assert!(!pg.definitely_embeds(&p3));
        assert!(pg.definitely_embeds(&gen_path(2).unwrap()));
        pg.decide(0, 2, false);
        assert!(pg.definitely_embeds(&p3));
        assert!(!pg.possibly_embeds(&k3));
        assert!(embeds(&p3, &pg.definite()));
        pg.forget(0, 2);
        assert!(!pg.is_known(0, 2));
        assert_eq!(pg.possible().edge_count(), 3);
    }

    #[test]
    fn forced_tests_are_sound_on_small_partials() {
        // Every completion of every partial graph on 4 vertices with pairs
        // decided or not: a forced answer must hold for all completions.
        let classes = [
            ClassSpec::CompMax { n: 2 },
            ClassSpec::CompCond { k: 2, n: 2 },
            ClassSpec::Forb {
                family: vec![gen_path(3).unwrap()],
            },
            ClassSpec::NotAllEmbed {
                family: vec![gen_path(3).unwrap(), gen_complete(3).unwrap()],
            },
            ClassSpec::NotBothTypes {
                base: gen_complete(1).unwrap(),
                p: vec![true],
                q: vec![false],
            },
        ];
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        for state in 0..3u32.pow(pairs.len() as u32) {
            let mut pg = PartialGraph::new(4);
            let mut s = state;
            let mut free = Vec::new();
            for &(u, v) in &pairs {
                match s % 3 {
                    0 => pg.decide(u, v, false),
                    1 => pg.decide(u, v, true),
                    _ => free.push((u, v)),
                }
                s /= 3;
            }
            for class in &classes {
                if !forced_nonmember(class, &pg) {
                    continue;
                }
                for fill in 0..1u32 << free.len() {
                    let mut full = pg.clone();
                    for (i, &(u, v)) in free.iter().enumerate() {
                        full.decide(u, v, fill >> i & 1 == 1);
                    }
                    assert!(!class.member(&full.definite()), "{:?}", class);
                }
            }
        }
    }
}
