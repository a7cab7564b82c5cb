//! Simplicial complexes given by their minimal non-faces, face enumeration
//! and reduced homology over a field.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::SquarefreeIdeal;
use crate::linalg::{self, FieldSpec, Matrix};
use crate::vset::VertexSet;

/// Face enumeration refuses complexes on more vertices than this.
pub const MAX_COMPLEX_VERTICES: usize = 24;

/// A simplicial complex on vertex set `{0, …, n−1}`.
///
/// Membership is decided by the minimal non-faces: a set is a face iff it
/// contains none of them. Non-faces of size two are kept as per-vertex
/// conflict masks so flag complexes (independence complexes) test in a few
/// word operations. A complex whose minimal non-face is `∅` is the void
/// complex, which has no faces at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    void: bool,
    /// Vertices `{v}` that are non-faces.
    dead: VertexSet,
    /// `conflicts[v]`: the `w` with `{v, w}` a minimal non-face.
    conflicts: Vec<VertexSet>,
    /// Minimal non-faces of size ≥ 3.
    higher: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// The complex whose faces are the subsets of `{0, …, n−1}` containing
    /// none of `nonfaces`.
    pub fn from_nonfaces<I>(n: usize, nonfaces: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if n > 64 {
            return Err(Error::TooManyVertices { n, max: 64 });
        }
        let all = VertexSet::full(n);
        let mut list: Vec<VertexSet> = Vec::new();
        for s in nonfaces {
            if let Some(v) = s.difference(all).first() {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            list.push(s);
        }
        let minimal = minimalize(list);
        let mut cx = SimplicialComplex {
            n,
            void: false,
            dead: VertexSet::EMPTY,
            conflicts: vec![VertexSet::EMPTY; n],
            higher: Vec::new(),
        };
        for s in minimal {
            match s.len() {
                0 => cx.void = true,
                1 => cx.dead = cx.dead.union(s),
                2 => {
                    let (a, b) = (s.first().unwrap(), s.last().unwrap());
                    cx.conflicts[a].insert(b);
                    cx.conflicts[b].insert(a);
                }
                _ => cx.higher.push(s),
            }
        }
        Ok(cx)
    }

    /// Full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::from_nonfaces(n, [])
    }

    /// The complex with no faces, on `n` vertices.
    pub fn void(n: usize) -> Result<Self> {
        Self::from_nonfaces(n, [VertexSet::EMPTY])
    }

    /// Faces are the independent sets of `g`.
    pub fn independence_complex(g: &Graph) -> Self {
        SimplicialComplex {
            n: g.n(),
            void: false,
            dead: VertexSet::EMPTY,
            conflicts: g.adjacency().to_vec(),
            higher: Vec::new(),
        }
    }

    /// Faces are the supports of monomials outside `ideal`.
    pub fn stanley_reisner(ideal: &SquarefreeIdeal) -> Self {
        Self::from_nonfaces(ideal.n(), ideal.generators().iter().copied())
            .expect("ideal generators are in range")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    pub fn is_face(&self, s: VertexSet) -> bool {
        !self.void
            && s.is_subset(VertexSet::full(self.n))
            && s.is_disjoint(self.dead)
            && s.iter().all(|v| self.conflicts[v].is_disjoint(s))
            && !self.higher.iter().any(|h| h.is_subset(s))
    }

    /// True iff `face ∪ {v}` is a face, given that `face` is one and
    /// `v ∉ face`.
    #[inline]
    fn extends(&self, face: VertexSet, v: usize) -> bool {
        if self.dead.contains(v) || !self.conflicts[v].is_disjoint(face) {
            return false;
        }
        let grown = face.with(v);
        !self
            .higher
            .iter()
            .any(|h| h.contains(v) && h.is_subset(grown))
    }

    /// Minimal non-faces, sorted.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        if self.void {
            out.push(VertexSet::EMPTY);
        }
        out.extend(self.dead.iter().map(VertexSet::singleton));
        for a in 0..self.n {
            for b in self.conflicts[a].iter().filter(|&b| b > a) {
                out.push(VertexSet::singleton(a).with(b));
            }
        }
        out.extend(self.higher.iter().copied());
        out.sort();
        out
    }

    /// Δ|_W, re-indexed so the k-th smallest element of `W` becomes `k`.
    pub fn restrict(&self, w: VertexSet) -> SimplicialComplex {
        let w = w.intersection(VertexSet::full(self.n));
        let conflicts = w.iter().map(|v| self.conflicts[v].compress(w)).collect();
        SimplicialComplex {
            n: w.len(),
            void: self.void,
            dead: self.dead.compress(w),
            conflicts,
            higher: self
                .higher
                .iter()
                .filter(|h| h.is_subset(w))
                .map(|h| h.compress(w))
                .collect(),
        }
    }

    /// Faces grouped by cardinality: entry `k` holds the faces with `k`
    /// vertices, as numerically sorted bit masks. Empty for the void complex.
    pub fn faces_by_size(&self) -> Result<Vec<Vec<u64>>> {
        if self.n > MAX_COMPLEX_VERTICES {
            return Err(Error::SizeLimit {
                what: "face enumeration",
                n: self.n,
                max: MAX_COMPLEX_VERTICES,
            });
        }
        if self.void {
            return Ok(Vec::new());
        }
        let mut levels: Vec<Vec<u64>> = vec![vec![0]];
        loop {
            let prev = levels.last().unwrap();
            let mut next = Vec::new();
            for &f in prev {
                let face = VertexSet(f);
                let start = face.last().map_or(0, |v| v + 1);
                for v in start..self.n {
                    if self.extends(face, v) {
                        next.push(f | 1 << v);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_unstable();
            levels.push(next);
        }
        Ok(levels)
    }

    /// `(f_{−1}, f_0, …, f_{dim})`; empty for the void complex.
    pub fn f_vector(&self) -> Result<Vec<u64>> {
        Ok(self
            .faces_by_size()?
            .iter()
            .map(|l| l.len() as u64)
            .collect())
    }

    /// Reduced homology dimensions; entry `k` is `dim H̃_{k−1}(Δ; F)`,
    /// for `k − 1 = −1, …, dim Δ`.
    ///
    /// The complex `{∅}` has `H̃_{−1} = 1`; the void complex has no homology
    /// and yields `[0]`.
    pub fn reduced_homology(&self, field: FieldSpec) -> Result<Vec<usize>> {
        let levels = self.faces_by_size()?;
        if levels.is_empty() {
            return Ok(vec![0]);
        }
        Ok(homology_from_levels(&levels, field))
    }

    /// Σ_{k ≥ −1} (−1)^k f_k.
    pub fn reduced_euler_characteristic(&self) -> Result<i64> {
        Ok(self
            .f_vector()?
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { -(f as i64) } else { f as i64 })
            .sum())
    }
}

/// Removes every set that has a proper subset in the list, and duplicates.
pub(crate) fn minimalize(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (s.len(), s.0));
    sets.dedup();
    let mut out: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|m| m.is_subset(s)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// `rank ∂_k`, where `∂_k` maps faces with `k` vertices to faces with
/// `k − 1` vertices (`k = 1` is the augmentation to `∅`).
pub(crate) fn boundary_rank(upper: &[u64], lower: &[u64], field: FieldSpec) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let index = |f: u64| lower.binary_search(&f).expect("boundary face present");
    if field == FieldSpec::GF2 {
        let words = lower.len().div_ceil(64);
        let mut rows: Vec<Vec<u64>> = upper
            .iter()
            .map(|&f| {
                let mut row = vec![0u64; words];
                for v in VertexSet(f) {
                    let c = index(f & !(1 << v));
                    row[c / 64] |= 1 << (c % 64);
                }
                row
            })
            .collect();
        return linalg::rank_gf2_rows(&mut rows, lower.len());
    }
    let mut m = Matrix::zeros(upper.len(), lower.len());
    for (r, &f) in upper.iter().enumerate() {
        for (i, v) in VertexSet(f).iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            m.set(r, index(f & !(1 << v)), sign);
        }
    }
    linalg::rank(&m, field)
}

pub(crate) fn homology_from_levels(levels: &[Vec<u64>], field: FieldSpec) -> Vec<usize> {
    let top = levels.len();
    // ranks[k] = rank of the boundary out of level k; ranks[0] = ranks[top] = 0
    let mut ranks = vec![0usize; top + 1];
    for k in 1..top {
        ranks[k] = boundary_rank(&levels[k], &levels[k - 1], field);
    }
    (0..top)
        .map(|k| levels[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}
