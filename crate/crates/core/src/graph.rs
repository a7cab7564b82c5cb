//! Simple undirected graphs on at most 64 vertices and the graph operations
//! used by the regularity and depth arguments: vertex deletion, S-suspension
//! and twin duplication.

use crate::error::{Error, Result};
use crate::vset::VertexSet;

pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph; `adj[v]` is the open neighbourhood of `v`.
///
/// Graphs are immutable once built. The graph on zero vertices is allowed
/// since deleting a closed neighbourhood can exhaust the vertex set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood masks, checking symmetry.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let all = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if let Some(w) = nb.difference(all).first() {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            if nb.contains(v) {
                return Err(Error::LoopEdge(v));
            }
            for w in nb {
                if !adj[w].contains(v) {
                    return Err(Error::Inconsistent(format!(
                        "adjacency not symmetric at ({v}, {w})"
                    )));
                }
            }
        }
        Ok(Graph { adj })
    }

    /// Graph whose edges are the set bits of `mask`, with pair `(a, b)`,
    /// `a < b`, stored at bit `b(b−1)/2 + a`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n <= 11);
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut bit = 0;
        for b in 1..n {
            for a in 0..b {
                if mask >> bit & 1 == 1 {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
                bit += 1;
            }
        }
        Graph { adj }
    }

    /// Inverse of [`from_edge_mask`](Self::from_edge_mask).
    pub fn edge_mask(&self) -> u64 {
        let n = self.n();
        assert!(n <= 11, "edge mask needs n ≤ 11");
        let mut mask = 0u64;
        let mut bit = 0;
        for b in 1..n {
            for a in 0..b {
                if self.adj[b].contains(a) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Open neighbourhood N(v).
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood N[v].
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while let Some(v) = frontier.pop_first() {
            let fresh = self.adj[v].intersection(within).difference(seen);
            seen = seen.union(fresh);
            frontier = frontier.union(fresh);
        }
        seen
    }

    /// True iff the graph has exactly one connected component. The graph on
    /// zero vertices is not connected.
    pub fn is_connected(&self) -> bool {
        match self.n() {
            0 => false,
            n => self.component_within(0, self.vertices()).len() == n,
        }
    }

    /// Induced subgraph on `keep`, re-indexed in increasing order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let keep = keep.intersection(self.vertices());
        let adj = keep.iter().map(|v| self.adj[v].compress(keep)).collect();
        Graph { adj }
    }

    /// `G − S`: the induced subgraph on `V ∖ S`. Also returns the old index
    /// of each surviving vertex.
    pub fn delete_vertices(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let keep = self.vertices().difference(s);
        (self.induced(keep), keep.iter().collect())
    }

    /// `G − v`.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.delete_vertices(VertexSet::singleton(v)).0
    }

    /// `G − N[v]`.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Graph {
        self.delete_vertices(self.closed_neighbors(v)).0
    }

    /// S-suspension `G^S`: one new vertex (index `n`) adjacent to exactly
    /// `V ∖ S`. `S` must be independent.
    pub fn s_suspension(&self, s: VertexSet) -> Result<Graph> {
        let n = self.n();
        if let Some(v) = s.difference(self.vertices()).first() {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if !self.is_independent(s) {
            return Err(Error::NotIndependent);
        }
        if n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: n + 1,
                max: MAX_VERTICES,
            });
        }
        let apex_nb = self.vertices().difference(s);
        let mut adj = self.adj.clone();
        for w in apex_nb {
            adj[w].insert(n);
        }
        adj.push(apex_nb);
        Ok(Graph { adj })
    }

    /// Adds a twin `v′` (index `n`) of `v` with `N(v′) = N(v)`; `v` and `v′`
    /// are not adjacent.
    pub fn duplicate_vertex(&self, v: usize) -> Result<Graph> {
        let n = self.n();
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: n + 1,
                max: MAX_VERTICES,
            });
        }
        let nb = self.adj[v];
        let mut adj = self.adj.clone();
        for w in nb {
            adj[w].insert(n);
        }
        adj.push(nb);
        Ok(Graph { adj })
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n();
        if n + other.n() > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: n + other.n(),
                max: MAX_VERTICES,
            });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|s| VertexSet(s.0 << n)));
        Ok(Graph { adj })
    }

    /// True for `K_{1,n−1}` (including `K_1` and `K_2`).
    pub fn is_star(&self) -> bool {
        let n = self.n();
        if n == 0 || self.edge_count() != n - 1 {
            return false;
        }
        n == 1 || (0..n).any(|v| self.degree(v) == n - 1)
    }

    pub fn star(n: usize) -> Result<Graph> {
        Graph::from_edges(n, (1..n).map(|v| (0, v)))
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Inconsistent(format!("cycle needs n ≥ 3, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn check_simple(g: &Graph) {
        for v in 0..g.n() {
            assert!(!g.neighbors(v).contains(v));
            for w in g.neighbors(v) {
                assert!(w < g.n());
                assert!(g.neighbors(w).contains(v));
            }
        }
    }

    #[test]
    fn from_edges_basics() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(k2.edges(), vec![(0, 1)]);
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5, Graph::cycle(5).unwrap());
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(Error::LoopEdge(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        let dup = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::complete(2).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        assert!(Graph::cycle(5).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(!Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn deletion() {
        let c5 = Graph::cycle(5).unwrap();
        let (p4, map) = c5.delete_vertices(set(&[0]));
        assert_eq!(p4, Graph::path(4).unwrap().induced(VertexSet::full(4)));
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(map, vec![1, 2, 3, 4]);
        let rest = c5.delete_closed_neighborhood(0);
        assert_eq!(rest, Graph::complete(2).unwrap());
        let (same, _) = c5.delete_vertices(VertexSet::EMPTY);
        assert_eq!(same, c5);
        let star = Graph::star(4).unwrap();
        assert_eq!(star.delete_closed_neighborhood(0).n(), 0);
    }

    #[test]
    fn suspension() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(
            k2.s_suspension(VertexSet::EMPTY).unwrap(),
            Graph::complete(3).unwrap()
        );
        let c4 = Graph::cycle(4).unwrap();
        let s = c4.s_suspension(set(&[0, 2])).unwrap();
        assert_eq!(s.neighbors(4), set(&[1, 3]));
        check_simple(&s);
        assert_eq!(c4.s_suspension(set(&[0, 1])), Err(Error::NotIndependent));
        let e3 = Graph::empty(3).unwrap();
        let apex = e3.s_suspension(VertexSet::full(3)).unwrap();
        assert!(apex.neighbors(3).is_empty());
        assert!(!apex.is_connected());
    }

    #[test]
    fn duplication() {
        let k2 = Graph::complete(2).unwrap();
        let p3 = k2.duplicate_vertex(0).unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        let k12 = Graph::star(3).unwrap();
        let k22 = k12.duplicate_vertex(0).unwrap();
        assert!((0..4).all(|v| k22.degree(v) == 2));
        assert!(!k22.has_edge(0, 3));
        check_simple(&k22);
        let e = Graph::empty(3).unwrap().duplicate_vertex(1).unwrap();
        assert_eq!((e.n(), e.edge_count()), (4, 0));
    }

    #[test]
    fn generators() {
        let s = Graph::star(4).unwrap();
        assert_eq!(s.edges(), vec![(0, 1), (0, 2), (0, 3)]);
        assert!(s.is_star());
        assert_eq!(Graph::complete(3).unwrap().edge_count(), 3);
        assert!(Graph::cycle(2).is_err());
        assert!(!Graph::cycle(4).unwrap().is_star());
        assert!(Graph::complete(2).unwrap().is_star());
        assert!(Graph::empty(1).unwrap().is_star());
    }

    #[test]
    fn edge_mask_roundtrip() {
        for mask in 0..(1u64 << 10) {
            let g = Graph::from_edge_mask(5, mask);
            assert_eq!(g.edge_mask(), mask);
            check_simple(&g);
        }
    }
}
