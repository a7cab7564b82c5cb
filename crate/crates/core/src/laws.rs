//! Structural laws relating a graph's invariants to those of its vertex
//! deletions, twins and suspensions, checked one graph at a time.

use rayon::prelude::*;
use serde::Serialize;

use crate::betti::graph_betti_table;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::independence::{max_independent, min_maximal_independent};
use crate::invariants::{tuple_from_table, InvariantTuple};
use crate::linalg::FieldSpec;
use crate::vset::VertexSet;

/// Law identifiers, in report order.
pub const LAWS: [&str; 13] = [
    "depth-at-most-p",
    "p-vertex-deletion",
    "p-neighborhood-deletion",
    "suspension-dim",
    "suspension-depth",
    "cone-depth",
    "twin-reg",
    "deletion-reg",
    "matching-bounds",
    "dim-reg-bound",
    "degh-reg-bound",
    "degh-gap",
    "star-boundary",
];

/// Largest independent set size tried in the suspension laws.
pub const DEFAULT_SUBSET_CAP: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset: Option<Vec<usize>>,
    pub values: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawOutcome {
    pub law: &'static str,
    /// Instances whose hypothesis held.
    pub checked: usize,
    pub failures: Vec<Counterexample>,
}

impl LawOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub graph6: String,
    pub invariants: InvariantTuple,
    pub laws: Vec<LawOutcome>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(LawOutcome::passed)
    }

    pub fn law(&self, name: &str) -> Option<&LawOutcome> {
        self.laws.iter().find(|l| l.law == name)
    }
}

struct Recorder {
    graph6: String,
    laws: Vec<LawOutcome>,
}

impl Recorder {
    fn check(
        &mut self,
        law: usize,
        holds: bool,
        vertex: Option<usize>,
        subset: Option<VertexSet>,
        values: impl FnOnce() -> String,
    ) {
        let out = &mut self.laws[law];
        out.checked += 1;
        if !holds {
            out.failures.push(Counterexample {
                graph6: self.graph6.clone(),
                vertex,
                subset: subset.map(|s| s.iter().collect()),
                values: values(),
            });
        }
    }
}

fn reg_depth(g: &Graph, field: FieldSpec) -> Result<(usize, usize)> {
    let t = graph_betti_table(g, field)?;
    Ok((t.regularity(), g.n() - t.projdim()))
}

/// Independent sets of `g` with at most `cap` vertices, by size then
/// lexicographically.
fn small_independent_sets(g: &Graph, cap: usize) -> Vec<VertexSet> {
    let mut layer = vec![VertexSet::EMPTY];
    let mut out = layer.clone();
    for _ in 0..cap {
        let mut next = Vec::new();
        for s in &layer {
            let from = s.last().map_or(0, |v| v + 1);
            for v in from..g.n() {
                if g.neighbors(v).is_disjoint(*s) {
                    next.push(s.with(v));
                }
            }
        }
        out.extend_from_slice(&next);
        layer = next;
    }
    out
}

/// Runs every law on `g`, trying suspensions over independent sets of at
/// most [`DEFAULT_SUBSET_CAP`] vertices.
pub fn property_suite(g: &Graph, field: FieldSpec) -> Result<PropertyReport> {
    property_suite_with_cap(g, field, DEFAULT_SUBSET_CAP)
}

pub fn property_suite_with_cap(g: &Graph, field: FieldSpec, cap: usize) -> Result<PropertyReport> {
    if g.n() == 0 {
        return Err(Error::Domain(
            "property suite needs at least one vertex".into(),
        ));
    }
    let inv = tuple_from_table(g, &graph_betti_table(g, field)?)?;
    let mut rec = Recorder {
        graph6: to_graph6(g),
        laws: LAWS
            .iter()
            .map(|&law| LawOutcome {
                law,
                checked: 0,
                failures: vec![],
            })
            .collect(),
    };
    let n = g.n();
    let s = inv.stats;
    let (dim, depth, reg, degh) = (inv.dim, inv.depth, inv.reg, inv.degh);

    rec.check(0, depth <= s.p, None, None, || {
        format!("depth={depth} p={}", s.p)
    });

    for v in 0..n {
        let minus = g.delete_vertex(v);
        let closed = g.delete_closed_neighborhood(v);
        let p_minus = min_maximal_independent(&minus);
        let p_closed = min_maximal_independent(&closed);
        rec.check(1, s.p <= p_minus + 1, Some(v), None, || {
            format!("p(G)={} p(G-v)={p_minus}", s.p)
        });
        rec.check(2, s.p <= p_closed + 1, Some(v), None, || {
            format!("p(G)={} p(G-N[v])={p_closed}", s.p)
        });

        let (reg_minus, _) = reg_depth(&minus, field)?;
        let (reg_closed, _) = reg_depth(&closed, field)?;
        rec.check(
            7,
            reg == reg_minus || reg == reg_closed + 1,
            Some(v),
            None,
            || format!("reg(G)={reg} reg(G-v)={reg_minus} reg(G-N[v])={reg_closed}"),
        );

        let (reg_twin, _) = reg_depth(&g.duplicate_vertex(v)?, field)?;
        rec.check(6, reg_twin == reg, Some(v), None, || {
            format!("reg(G)={reg} reg(twin)={reg_twin}")
        });
    }

    for set in small_independent_sets(g, cap) {
        let k = set.len();
        let wants_dim = k < dim;
        let wants_depth = k + 1 == depth;
        let is_cone = set.is_empty();
        if !(wants_dim || wants_depth || is_cone) {
            continue;
        }
        let sus = g.s_suspension(set)?;
        if wants_dim {
            let sus_dim = max_independent(&sus);
            rec.check(3, sus_dim == dim, None, Some(set), || {
                format!("dim(G)={dim} dim(G^S)={sus_dim}")
            });
        }
        if wants_depth || is_cone {
            let (_, sus_depth) = reg_depth(&sus, field)?;
            if wants_depth {
                rec.check(4, sus_depth == depth, None, Some(set), || {
                    format!("depth(G)={depth} depth(G^S)={sus_depth}")
                });
            }
            if is_cone {
                rec.check(5, sus_depth == 1, None, Some(set), || {
                    format!("depth(G^S)={sus_depth}")
                });
            }
        }
    }

    rec.check(8, s.im <= reg && reg <= s.m, None, None, || {
        format!("im={} reg={reg} m={}", s.im, s.m)
    });
    rec.check(9, dim + reg <= n, None, None, || {
        format!("dim={dim} reg={reg} n={n}")
    });
    rec.check(10, degh + reg <= n, None, None, || {
        format!("degh={degh} reg={reg} n={n}")
    });
    rec.check(11, degh + depth <= dim + reg, None, None, || {
        format!("degh={degh} reg={reg} dim={dim} depth={depth}")
    });
    if g.is_connected() && dim + reg == n {
        rec.check(12, g.is_star(), None, None, || {
            format!("dim={dim} reg={reg} n={n}, not a star")
        });
    }

    Ok(PropertyReport {
        graph6: rec.graph6,
        invariants: inv,
        laws: rec.laws,
    })
}

/// Totals for one law over many graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawSummary {
    pub law: &'static str,
    pub checked: u64,
    pub failures: u64,
    /// The first few counterexamples in input order.
    pub examples: Vec<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub graphs: u64,
    pub laws: Vec<LawSummary>,
}

impl SuiteSummary {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.failures == 0)
    }
}

/// Counterexamples kept per law in a [`SuiteSummary`].
pub const KEPT_EXAMPLES: usize = 5;

/// [`property_suite`] over `graphs` in parallel; `jobs = None` uses every core.
pub fn run_suite(graphs: &[Graph], field: FieldSpec, jobs: Option<usize>) -> Result<SuiteSummary> {
    let run = || {
        graphs
            .par_iter()
            .map(|g| property_suite(g, field))
            .collect::<Result<Vec<_>>>()
    };
    let reports = match jobs {
        None => run()?,
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::Domain(format!("thread pool: {e}")))?
            .install(run)?,
    };
    let mut laws: Vec<LawSummary> = LAWS
        .iter()
        .map(|&law| LawSummary {
            law,
            checked: 0,
            failures: 0,
            examples: vec![],
        })
        .collect();
    for report in &reports {
        for (sum, out) in laws.iter_mut().zip(&report.laws) {
            sum.checked += out.checked as u64;
            sum.failures += out.failures.len() as u64;
            let room = KEPT_EXAMPLES.saturating_sub(sum.examples.len());
            sum.examples.extend(out.failures.iter().take(room).cloned());
        }
    }
    Ok(SuiteSummary {
        graphs: reports.len() as u64,
        laws,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn pentagon_passes() {
        let r = property_suite(&Graph::cycle(5).unwrap(), Q).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.law("star-boundary").unwrap().checked, 0);
        assert_eq!(r.law("twin-reg").unwrap().checked, 5);
    }

    #[test]
    fn star_triggers_boundary() {
        let r = property_suite(&Graph::star(6).unwrap(), Q).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.law("star-boundary").unwrap().checked, 1);
    }

    #[test]
    fn complete_graphs_pass() {
        for n in 1..=7 {
            let r = property_suite(&Graph::complete(n).unwrap(), Q).unwrap();
            assert!(r.passed(), "K{n}: {r:?}");
        }
    }

    #[test]
    fn path_on_five_breaks_boundary() {
        let r = property_suite(&Graph::path(5).unwrap(), Q).unwrap();
        let law = r.law("star-boundary").unwrap();
        assert_eq!(law.failures.len(), 1);
        assert_eq!(law.failures[0].values, "dim=3 reg=2 n=5, not a star");
        assert!(r
            .laws
            .iter()
            .filter(|l| l.law != "star-boundary")
            .all(LawOutcome::passed));
    }

    #[test]
    fn independent_set_listing() {
        let sets = small_independent_sets(&Graph::path(4).unwrap(), 2);
        // ∅, four singletons, {0,2} {0,3} {1,3}
        assert_eq!(sets.len(), 8);
        assert!(sets
            .iter()
            .all(|s| Graph::path(4).unwrap().is_independent(*s)));
    }

    #[test]
    fn suite_summary_counts() {
        let graphs = vec![
            Graph::cycle(5).unwrap(),
            Graph::path(5).unwrap(),
            Graph::star(5).unwrap(),
        ];
        let s = run_suite(&graphs, Q, Some(1)).unwrap();
        assert_eq!(s.graphs, 3);
        let b = s.laws.iter().find(|l| l.law == "star-boundary").unwrap();
        assert_eq!((b.checked, b.failures), (2, 1));
        assert!(!s.passed());
    }
}
