//! Graded Betti tables of Stanley–Reisner rings via Hochster's formula
//!
//! ```text
//! β_{i,j}(K[Δ]) = Σ_{|W| = j} dim H̃_{j−i−1}(Δ|_W; K)
//! ```
//!
//! For independence complexes `Δ|_W` is the independence complex of the
//! induced subgraph `G[W]`, so [`graph_betti_table`] memoizes the reduced
//! homology of every labeled graph on at most [`CACHED_VERTICES`] vertices
//! and looks the small restrictions up instead of recomputing them.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::FieldSpec;
use crate::vset::VertexSet;

/// Largest vertex count accepted by the Hochster sum (2ⁿ restrictions).
pub const MAX_HOCHSTER_VERTICES: usize = 16;

/// Induced subgraphs up to this size are served from the homology cache.
pub const CACHED_VERTICES: usize = 6;

/// Bigraded Betti numbers `β_{i,j}` of a quotient `R/I`; zero entries are
/// not stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(n: usize) -> Self {
        BettiTable {
            n,
            entries: BTreeMap::new(),
        }
    }

    /// Table of the polynomial ring itself (`I = 0`).
    pub fn polynomial_ring(n: usize) -> Self {
        let mut t = BettiTable::new(n);
        t.add(0, 0, 1);
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, i: usize, j: usize, beta: u64) {
        if beta > 0 {
            *self.entries.entry((i, j)).or_insert(0) += beta;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), β)` sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max{j − i : β_{i,j} ≠ 0}`; 0 for an empty table.
    pub fn regularity(&self) -> usize {
        self.entries
            .keys()
            .map(|&(i, j)| j.saturating_sub(i))
            .max()
            .unwrap_or(0)
    }

    /// `max{i : β_{i,j} ≠ 0}`; 0 for an empty table.
    pub fn projdim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Betti numbers of the ideal: `β_{i,j}(I) = β_{i+1,j}(R/I)`.
    pub fn ideal_entries(&self) -> BTreeMap<(usize, usize), u64> {
        self.entries
            .iter()
            .filter(|(&(i, _), _)| i >= 1)
            .map(|(&(i, j), &b)| ((i - 1, j), b))
            .collect()
    }

    /// Sum of all Betti numbers.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("Betti tables serialize")
    }
}

#[derive(Serialize, Deserialize)]
struct BettiTableJson {
    n: usize,
    entries: Vec<[u64; 3]>,
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BettiTableJson {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &b)| [i as u64, j as u64, b])
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BettiTableJson::deserialize(d)?;
        let mut t = BettiTable::new(raw.n);
        for [i, j, b] in raw.entries {
            if b == 0 {
                return Err(D::Error::custom("zero entries are not stored"));
            }
            t.add(i as usize, j as usize, b);
        }
        Ok(t)
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_HOCHSTER_VERTICES {
        return Err(Error::SizeLimit {
            what: "Hochster's formula",
            n,
            max: MAX_HOCHSTER_VERTICES,
        });
    }
    Ok(())
}

/// `homology[k] = dim H̃_{k−1}(Δ_W)` contributes to `β_{j−k, j}`.
fn accumulate(table: &mut [u64], width: usize, j: usize, homology: &[usize]) {
    for (k, &h) in homology.iter().enumerate() {
        if h > 0 {
            table[(j - k) * width + j] += h as u64;
        }
    }
}

fn finish(n: usize, table: &[u64], width: usize) -> BettiTable {
    let mut out = BettiTable::new(n);
    for (idx, &b) in table.iter().enumerate() {
        out.add(idx / width, idx % width, b);
    }
    out
}

/// Betti table of `K[Δ]` by summing reduced homology over all `2ⁿ`
/// restrictions.
pub fn betti_table_hochster(cx: &SimplicialComplex, field: FieldSpec) -> Result<BettiTable> {
    let n = cx.n();
    check_size(n)?;
    let width = n + 1;
    let mut table = vec![0u64; width * width];
    for w in 0..1u64 << n {
        let w = VertexSet(w);
        let h = cx.restrict(w).reduced_homology(field)?;
        accumulate(&mut table, width, w.len(), &h);
    }
    Ok(finish(n, &table, width))
}

/// Reduced homology of `Ind(G)` for every labeled graph on `k ≤
/// CACHED_VERTICES` vertices, indexed by [`Graph::edge_mask`].
struct SmallGraphHomology {
    by_size: Vec<Vec<[u8; 8]>>,
}

impl SmallGraphHomology {
    fn build(field: FieldSpec) -> Self {
        let by_size = (0..=CACHED_VERTICES)
            .map(|k| {
                let pairs = k * k.saturating_sub(1) / 2;
                (0..1u64 << pairs)
                    .map(|mask| {
                        let g = Graph::from_edge_mask(k, mask);
                        let h = SimplicialComplex::independence_complex(&g)
                            .reduced_homology(field)
                            .expect("small complex");
                        let mut packed = [0u8; 8];
                        for (slot, &x) in packed.iter_mut().zip(&h) {
                            *slot =
                                u8::try_from(x).expect("homology of a 6-vertex complex fits in u8");
                        }
                        packed
                    })
                    .collect()
            })
            .collect();
        SmallGraphHomology { by_size }
    }

    fn for_field(field: FieldSpec) -> Arc<SmallGraphHomology> {
        static CACHES: OnceLock<Mutex<HashMap<FieldSpec, Arc<SmallGraphHomology>>>> =
            OnceLock::new();
        let lock = CACHES.get_or_init(Default::default);
        if let Some(c) = lock.lock().unwrap().get(&field) {
            return Arc::clone(c);
        }
        // Built outside the lock; a racing duplicate build is harmless.
        let built = Arc::new(SmallGraphHomology::build(field));
        Arc::clone(lock.lock().unwrap().entry(field).or_insert(built))
    }
}

/// Reduced homology of `Ind(g)`; all zero when `g` has an isolated vertex,
/// since the complex is then a cone.
pub fn independence_homology(g: &Graph, field: FieldSpec) -> Result<Vec<usize>> {
    if g.n() > 0 && !g.isolated_vertices().is_empty() {
        return Ok(vec![0]);
    }
    SimplicialComplex::independence_complex(g).reduced_homology(field)
}

struct GraphWalk<'a> {
    g: &'a Graph,
    field: FieldSpec,
    cache: &'a SmallGraphHomology,
    width: usize,
    table: Vec<u64>,
    error: Option<Error>,
}

impl GraphWalk<'_> {
    /// Visits every subset of `{v, …, n−1}` added to `chosen`. While
    /// `|chosen| ≤ CACHED_VERTICES`, `key` is the edge mask of `G[chosen]`.
    fn walk(&mut self, v: usize, chosen: VertexSet, key: u64) {
        if self.error.is_some() {
            return;
        }
        if v == self.g.n() {
            let k = chosen.len();
            if k <= CACHED_VERTICES {
                let h = self.cache.by_size[k][key as usize];
                for (idx, &x) in h.iter().enumerate().take(k + 1) {
                    if x > 0 {
                        self.table[(k - idx) * self.width + k] += x as u64;
                    }
                }
            } else {
                match independence_homology(&self.g.induced(chosen), self.field) {
                    Ok(h) => accumulate(&mut self.table, self.width, k, &h),
                    Err(e) => self.error = Some(e),
                }
            }
            return;
        }
        self.walk(v + 1, chosen, key);
        let k = chosen.len();
        let key = if k < CACHED_VERTICES {
            let low = self.g.neighbors(v).intersection(chosen).compress(chosen);
            key | low.bits() << (k * k.saturating_sub(1) / 2)
        } else {
            0
        };
        self.walk(v + 1, chosen.with(v), key);
    }
}

/// Betti table of `R/I(G)`, i.e. Hochster's formula on the independence
/// complex of `g`, with small restrictions served from the cache.
pub fn graph_betti_table(g: &Graph, field: FieldSpec) -> Result<BettiTable> {
    let n = g.n();
    check_size(n)?;
    let cache = SmallGraphHomology::for_field(field);
    let width = n + 1;
    let mut walk = GraphWalk {
        g,
        field,
        cache: &cache,
        width,
        table: vec![0; width * width],
        error: None,
    };
    walk.walk(0, VertexSet::EMPTY, 0);
    if let Some(e) = walk.error {
        return Err(e);
    }
    Ok(finish(n, &walk.table, width))
}
