//! Squarefree monomial ideals, stored by the supports of their minimal
//! generators.

use crate::complex::minimalize;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    n: usize,
    gens: Vec<VertexSet>,
}

impl SquarefreeIdeal {
    /// Ideal in `n` variables generated by the given supports; non-minimal
    /// generators are dropped.
    pub fn new<I>(n: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if n > 64 {
            return Err(Error::TooManyVertices { n, max: 64 });
        }
        let all = VertexSet::full(n);
        let gens: Vec<VertexSet> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| !g.is_subset(all)) {
            return Err(Error::VertexOutOfRange {
                vertex: bad.difference(all).first().unwrap(),
                n,
            });
        }
        Ok(SquarefreeIdeal {
            n,
            gens: minimalize(gens),
        })
    }

    pub fn zero(n: usize) -> Self {
        SquarefreeIdeal {
            n,
            gens: Vec::new(),
        }
    }

    /// I(G), generated by `x_u x_v` over the edges of `g`.
    pub fn edge_ideal(g: &Graph) -> Self {
        SquarefreeIdeal {
            n: g.n(),
            gens: {
                let mut v: Vec<VertexSet> = g
                    .edges()
                    .into_iter()
                    .map(|(a, b)| VertexSet::singleton(a).with(b))
                    .collect();
                v.sort();
                v
            },
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimal generators, sorted.
    pub fn generators(&self) -> &[VertexSet] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// True iff the monomial with this support lies in the ideal.
    pub fn contains_support(&self, support: VertexSet) -> bool {
        self.gens.iter().any(|g| g.is_subset(support))
    }

    /// Common degree of all generators, if they share one.
    pub fn generator_degree(&self) -> Option<usize> {
        let d = self.gens.first()?.len();
        self.gens.iter().all(|g| g.len() == d).then_some(d)
    }

    /// `I ∩ J`, generated by the pairwise least common multiples.
    pub fn intersection(&self, other: &SquarefreeIdeal) -> SquarefreeIdeal {
        assert_eq!(self.n, other.n, "ambient rings differ");
        let lcms = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.union(*b)))
            .collect();
        SquarefreeIdeal {
            n: self.n,
            gens: minimalize(lcms),
        }
    }

    /// `I + J`.
    pub fn sum(&self, other: &SquarefreeIdeal) -> SquarefreeIdeal {
        assert_eq!(self.n, other.n, "ambient rings differ");
        let all = self.gens.iter().chain(&other.gens).copied().collect();
        SquarefreeIdeal {
            n: self.n,
            gens: minimalize(all),
        }
    }

    /// `x_var`-partition: `(I′, I″)` with `I′` generated by the minimal
    /// generators divisible by `x_var` and `I″` by the rest.
    pub fn partition(&self, var: usize) -> (SquarefreeIdeal, SquarefreeIdeal) {
        let (with, without): (Vec<_>, Vec<_>) = self.gens.iter().partition(|g| g.contains(var));
        (
            SquarefreeIdeal {
                n: self.n,
                gens: with,
            },
            SquarefreeIdeal {
                n: self.n,
                gens: without,
            },
        )
    }
}
