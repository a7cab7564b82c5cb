//! Ring-theoretic invariants of `R/I(G)`.

use serde::{Deserialize, Serialize};

use crate::betti::{graph_betti_table, BettiTable};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{max_independent, GraphStats};
use crate::linalg::FieldSpec;

/// Numerator `h(t)` of the Hilbert series `h(t) / (1 − t)^{dim}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPolynomial {
    /// `h_0, …, h_s`, trailing zeros removed.
    pub coefficients: Vec<i64>,
}

impl HPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * t + c)
    }
}

impl std::fmt::Display for HPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, &c) in self.coefficients.iter().enumerate() {
            if c == 0 && !(first && k + 1 == self.coefficients.len()) {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            let body = match (k, mag) {
                (0, _) => mag.to_string(),
                (1, 1) => "t".to_string(),
                (1, _) => format!("{mag}t"),
                (_, 1) => format!("t^{k}"),
                _ => format!("{mag}t^{k}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `(n, dim, depth, reg, pd, deg h)` of `R/I(G)` together with the graph's
/// combinatorial statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantTuple {
    pub n: usize,
    pub dim: usize,
    pub depth: usize,
    pub reg: usize,
    pub pd: usize,
    pub degh: usize,
    pub stats: GraphStats,
}

impl InvariantTuple {
    /// Checks the relations every edge ideal satisfies.
    pub fn check(&self) -> Result<()> {
        let s = &self.stats;
        let rules: [(&str, bool); 8] = [
            ("depth ≤ dim", self.depth <= self.dim),
            ("pd + depth = n", self.pd + self.depth == self.n),
            ("dim = d(G)", self.dim == s.d),
            (
                "degh − reg ≤ dim − depth",
                self.degh + self.depth <= self.dim + self.reg,
            ),
            ("dim + reg ≤ n", self.dim + self.reg <= self.n),
            ("degh + reg ≤ n", self.degh + self.reg <= self.n),
            ("im ≤ reg ≤ m", s.im <= self.reg && self.reg <= s.m),
            ("depth ≤ p(G)", self.depth <= s.p),
        ];
        match rules.iter().find(|(_, ok)| !ok) {
            None => Ok(()),
            Some((name, _)) => Err(Error::Inconsistent(format!("{name} fails for {self:?}"))),
        }
    }
}

/// Krull dimension of `R/I(G)`, the independence number.
pub fn krull_dim(g: &Graph) -> usize {
    max_independent(g)
}

/// `n − pd`, via the Betti table.
pub fn depth(g: &Graph, field: FieldSpec) -> Result<usize> {
    Ok(g.n() - graph_betti_table(g, field)?.projdim())
}

pub fn regularity(g: &Graph, field: FieldSpec) -> Result<usize> {
    Ok(graph_betti_table(g, field)?.regularity())
}

/// `h(t) = Σ_i f_{i−1} tⁱ (1 − t)^{d − i}` with `d` the largest face size.
pub fn h_polynomial_of(cx: &SimplicialComplex) -> Result<HPolynomial> {
    let f = cx.f_vector()?;
    if f.is_empty() {
        return Ok(HPolynomial {
            coefficients: vec![],
        });
    }
    let d = f.len() - 1;
    let mut h = vec![0i64; d + 1];
    for (i, &fi) in f.iter().enumerate() {
        // fi · tⁱ · (1 − t)^{d − i}
        let e = d - i;
        let mut binom = 1i64;
        for k in 0..=e {
            let term = if k % 2 == 0 { binom } else { -binom };
            h[i + k] += fi as i64 * term;
            binom = binom * (e - k) as i64 / (k + 1) as i64;
        }
    }
    while h.len() > 1 && *h.last().unwrap() == 0 {
        h.pop();
    }
    Ok(HPolynomial { coefficients: h })
}

pub fn h_polynomial(g: &Graph) -> Result<HPolynomial> {
    h_polynomial_of(&SimplicialComplex::independence_complex(g))
}

/// All invariants of `g`, checked against [`InvariantTuple::check`].
pub fn invariant_tuple(g: &Graph, field: FieldSpec) -> Result<InvariantTuple> {
    let table = graph_betti_table(g, field)?;
    let t = tuple_from_table(g, &table)?;
    t.check()?;
    Ok(t)
}

/// Assembles the invariants from an already computed Betti table, without
/// checking them.
pub fn tuple_from_table(g: &Graph, table: &BettiTable) -> Result<InvariantTuple> {
    let n = g.n();
    let pd = table.projdim();
    Ok(InvariantTuple {
        n,
        dim: krull_dim(g),
        depth: n - pd,
        reg: table.regularity(),
        pd,
        degh: h_polynomial(g)?.degree(),
        stats: GraphStats::of(g),
    })
}
