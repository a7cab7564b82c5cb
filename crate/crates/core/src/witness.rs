//! Explicit connected graphs realizing each tuple of `C**(n)`.
//!
//! Regularity-one graphs come from split graphs: an independent part `A`
//! of size `d` (vertices `0..d`) and a clique `B` (vertices `d..n`) whose
//! members cover `A` with at most `d − p + 1` neighbours each. Higher
//! regularity is reached by adding `r − 1` disjoint edges to a regularity-one
//! base and suspending the result over a new apex.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::invariants::invariant_tuple;
use crate::linalg::FieldSpec;
use crate::region::{in_cstar, in_cstarstar, Tuple2, Tuple3};
use crate::vset::VertexSet;

/// Connected split graph on `n` vertices with `dim = d`, `depth = p`,
/// `reg = 1`. Requires `(d, p) ∈ C*(n)`.
pub fn split_witness(n: usize, d: usize, p: usize) -> Result<Graph> {
    if !in_cstar(n, Tuple2::new(d, p)) {
        return Err(Error::OutsideRegion(format!(
            "(d, p) = ({d}, {p}) for C*({n})"
        )));
    }
    let cap = d - p + 1;
    let mut edges = Vec::new();
    for b in d..n {
        for b2 in b + 1..n {
            edges.push((b, b2));
        }
    }
    // b₀ = d takes A-vertices 0..cap; the rest are dealt out in blocks of cap.
    let mut next_b = d;
    for (k, a) in (0..d).enumerate() {
        if k > 0 && k % cap == 0 {
            next_b += 1;
        }
        edges.push((a, next_b));
    }
    for b in next_b + 1..n {
        edges.push((0, b));
    }
    Graph::from_edges(n, edges)
}

/// Regularity-one graph on `n` vertices with `dim = d`, `depth = p`, under
/// the weaker bound `d ≤ (n − d + 1)(d − p + 1)`: a split witness padded
/// with `z` isolated vertices (indices `n − z..n`), where `z` is the least
/// padding that puts the split part inside `C*`. Also returns `z`.
pub fn padded_split_witness(n: usize, d: usize, p: usize) -> Result<(Graph, usize)> {
    let fits = 1 <= p && p <= d && d < n && {
        let k = d - p + 1;
        d <= (n - d + 1) * k
    };
    if !fits {
        return Err(Error::OutsideRegion(format!(
            "(d, p) = ({d}, {p}) for a padded split witness on {n} vertices"
        )));
    }
    let z = d.saturating_sub((n - d) * (d - p + 1));
    let core = split_witness(n - z, d - z, p - z)?;
    Ok((core.disjoint_union(&Graph::empty(z)?)?, z))
}

/// Lexicographically least independent set with exactly `a` vertices.
pub fn independent_set_of_size(g: &Graph, a: usize) -> Result<VertexSet> {
    fn go(
        g: &Graph,
        from: usize,
        chosen: VertexSet,
        allowed: VertexSet,
        left: usize,
    ) -> Option<VertexSet> {
        if left == 0 {
            return Some(chosen);
        }
        for v in allowed.iter().filter(|&v| v >= from) {
            if let Some(s) = go(
                g,
                v + 1,
                chosen.with(v),
                allowed.difference(g.closed_neighbors(v)),
                left - 1,
            ) {
                return Some(s);
            }
        }
        None
    }
    go(g, 0, VertexSet::EMPTY, g.vertices(), a).ok_or(Error::NoIndependentSet(a))
}

/// `r` copies of `K₂` appended to `base`; returns the graph and the pairs.
fn with_pendant_edges(base: &Graph, pairs: usize) -> Result<(Graph, Vec<(usize, usize)>)> {
    let n = base.n();
    let matching = Graph::from_edges(2 * pairs, (0..pairs).map(|i| (2 * i, 2 * i + 1)))?;
    let g = base.disjoint_union(&matching)?;
    Ok((g, (0..pairs).map(|i| (n + 2 * i, n + 2 * i + 1)).collect()))
}

fn build(n: usize, d: usize, p: usize, r: usize) -> Result<Graph> {
    let t = Tuple3::new(d, p, r);
    if !in_cstarstar(n, t) {
        return Err(Error::OutsideRegion(format!("{t} for C**({n})")));
    }
    if t == Tuple3::new(n - 1, 1, 1) {
        return Graph::star(n);
    }
    if r == 1 {
        return split_witness(n, d, p);
    }
    let extra = r - 1;
    let base_n = n - 2 * extra - 1;
    if r <= p {
        let a = p - extra - 1;
        let b = d - p;
        let (base, pad) = padded_split_witness(base_n, 1 + a + b, 1 + a)?;
        let s = independent_set_of_size(&base, a)?;
        debug_assert!(
            s.is_disjoint(base.isolated_vertices()),
            "S must avoid the padding (z = {pad})"
        );
        let (h, pairs) = with_pendant_edges(&base, extra)?;
        let s_all = pairs.iter().fold(s, |acc, &(_, y)| acc.with(y));
        h.s_suspension(s_all)
    } else {
        let a = p - 1;
        let b = d - extra - 1;
        let base = split_witness(base_n, 1 + b, 1)?;
        let (h, pairs) = with_pendant_edges(&base, extra)?;
        // the apex misses exactly the last a of the y_i
        let s_all: VertexSet = pairs[extra - a..].iter().map(|&(_, y)| y).collect();
        h.s_suspension(s_all)
    }
}

/// Checks that `g` is connected, has `n` vertices and realizes `(d, p, r)`.
pub fn verify_witness(g: &Graph, n: usize, t: Tuple3, field: FieldSpec) -> Result<()> {
    let inv = invariant_tuple(g, field)?;
    let got = Tuple3::new(inv.dim, inv.depth, inv.reg);
    if g.n() != n || !g.is_connected() || got != t {
        return Err(Error::WitnessMismatch {
            n,
            d: t.d,
            p: t.p,
            r: t.r,
            computed: format!(
                "n={} connected={} (dim, depth, reg)={got}",
                g.n(),
                g.is_connected()
            ),
            graph6: to_graph6(g),
        });
    }
    Ok(())
}

/// Connected graph on `n` vertices with `(dim, depth, reg) = (d, p, r)`,
/// for any tuple of `C**(n)`. Debug builds verify the result with the
/// Betti engine and panic with the graph6 dump on mismatch.
pub fn witness(n: usize, d: usize, p: usize, r: usize) -> Result<Graph> {
    let g = build(n, d, p, r)?;
    if cfg!(debug_assertions) {
        if let Err(e) = verify_witness(&g, n, Tuple3::new(d, p, r), FieldSpec::Rationals) {
            panic!("witness construction failed: {e}");
        }
    }
    Ok(g)
}

/// [`witness`] followed by engine verification over `field`.
pub fn checked_witness(n: usize, d: usize, p: usize, r: usize, field: FieldSpec) -> Result<Graph> {
    let g = build(n, d, p, r)?;
    verify_witness(&g, n, Tuple3::new(d, p, r), field)?;
    Ok(g)
}
