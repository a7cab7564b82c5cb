//! Independent sets and matchings.
//!
//! Maximal independent sets are the maximal cliques of the complement, so
//! they are enumerated with pivoting Bron–Kerbosch run directly on the
//! complement's neighbourhoods (`V ∖ N[v]`). Matchings use exact
//! branch-and-bound; instances here are small.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::vset::VertexSet;

/// Combinatorial statistics of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphStats {
    /// Largest maximal independent set.
    pub d: usize,
    /// Smallest maximal independent set.
    pub p: usize,
    /// Matching number.
    pub m: usize,
    /// Induced matching number.
    pub im: usize,
}

impl GraphStats {
    pub fn of(g: &Graph) -> Self {
        let (p, d) = independence_bounds(g);
        GraphStats {
            d,
            p,
            m: matching_number(g),
            im: induced_matching_number(g),
        }
    }
}

struct Frame {
    r: VertexSet,
    p: VertexSet,
    x: VertexSet,
    todo: VertexSet,
}

/// Iterator over the inclusion-maximal independent sets of a graph.
pub struct MaximalIndependentSets<'g> {
    g: &'g Graph,
    stack: Vec<Frame>,
    pending_empty: bool,
}

impl<'g> MaximalIndependentSets<'g> {
    fn new(g: &'g Graph) -> Self {
        let mut it = MaximalIndependentSets {
            g,
            stack: Vec::new(),
            pending_empty: g.n() == 0,
        };
        if g.n() > 0 {
            let p = g.vertices();
            let todo = it.branch_set(p, VertexSet::EMPTY);
            it.stack.push(Frame {
                r: VertexSet::EMPTY,
                p,
                x: VertexSet::EMPTY,
                todo,
            });
        }
        it
    }

    /// Candidates to branch on: `P ∩ N[u]` for the pivot `u ∈ P ∪ X` that
    /// minimises that set (equivalently maximises its complement-neighbours
    /// inside `P`).
    fn branch_set(&self, p: VertexSet, x: VertexSet) -> VertexSet {
        let mut best = p;
        for u in p.union(x) {
            let cand = p.intersection(self.g.closed_neighbors(u));
            if cand.len() < best.len() {
                best = cand;
                if best.len() <= 1 {
                    break;
                }
            }
        }
        best
    }
}

impl Iterator for MaximalIndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.pending_empty {
            self.pending_empty = false;
            return Some(VertexSet::EMPTY);
        }
        loop {
            let top = self.stack.last_mut()?;
            let Some(v) = top.todo.pop_first() else {
                self.stack.pop();
                continue;
            };
            let blocked = self.g.closed_neighbors(v);
            let r = top.r.with(v);
            let p = top.p.difference(blocked);
            let x = top.x.difference(blocked);
            top.p.remove(v);
            top.x.insert(v);
            if p.is_empty() {
                if x.is_empty() {
                    return Some(r);
                }
                continue;
            }
            let todo = self.branch_set(p, x);
            self.stack.push(Frame { r, p, x, todo });
        }
    }
}

/// Every inclusion-maximal independent set exactly once.
pub fn maximal_independent_sets(g: &Graph) -> MaximalIndependentSets<'_> {
    MaximalIndependentSets::new(g)
}

/// `(p(G), d(G))`: the smallest and largest maximal independent set sizes.
pub fn independence_bounds(g: &Graph) -> (usize, usize) {
    maximal_independent_sets(g)
        .map(|s| s.len())
        .fold((usize::MAX, 0), |(lo, hi), k| (lo.min(k), hi.max(k)))
}

/// d(G), the independence number.
pub fn max_independent(g: &Graph) -> usize {
    independence_bounds(g).1
}

/// p(G), the minimum size of an inclusion-maximal independent set.
pub fn min_maximal_independent(g: &Graph) -> usize {
    independence_bounds(g).0
}

/// m(G).
pub fn matching_number(g: &Graph) -> usize {
    fn go(g: &Graph, avail: VertexSet, cur: usize, best: &mut usize) {
        if cur + avail.len() / 2 <= *best {
            return;
        }
        // Lowest vertex that still has an available neighbour.
        let mut rest = avail;
        let u = loop {
            match rest.pop_first() {
                None => {
                    *best = (*best).max(cur);
                    return;
                }
                Some(u) if !g.neighbors(u).is_disjoint(avail) => break u,
                Some(_) => {}
            }
        };
        for w in g.neighbors(u).intersection(avail) {
            go(g, avail.without(u).without(w), cur + 1, best);
        }
        go(g, avail.without(u), cur, best);
    }
    let mut best = 0;
    go(g, g.vertices(), 0, &mut best);
    best
}

/// im(G): the largest set of edges inducing a matching.
pub fn induced_matching_number(g: &Graph) -> usize {
    fn go(g: &Graph, avail: VertexSet, cur: usize, best: &mut usize) {
        if cur + avail.len() / 2 <= *best {
            return;
        }
        let mut rest = avail;
        let u = loop {
            match rest.pop_first() {
                None => {
                    *best = (*best).max(cur);
                    return;
                }
                Some(u) if !g.neighbors(u).is_disjoint(avail) => break u,
                Some(_) => {}
            }
        };
        let nu = g.closed_neighbors(u);
        for w in g.neighbors(u).intersection(avail) {
            let taken = nu.union(g.closed_neighbors(w));
            go(g, avail.difference(taken), cur + 1, best);
        }
        go(g, avail.without(u), cur, best);
    }
    let mut best = 0;
    go(g, g.vertices(), 0, &mut best);
    best
}
