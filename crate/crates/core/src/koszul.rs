//! Independent Betti-number oracle: `Tor_i(R/I, K)_j` computed as the
//! homology of the Koszul complex on `x_1, …, x_n` tensored with `R/I`.
//!
//! The degree-`j` strand is split further by multidegree `α ∈ ℕⁿ`, `|α| = j`
//! (the differential preserves it). In multidegree `α` the basis of the
//! `i`-th module is `e_T ⊗ x^{α − e_T}` for `T ⊆ supp α`, `|T| = i`, with
//! the monomial outside `I`; the differential is
//! `e_T ⊗ m ↦ Σ_{t ∈ T} ± e_{T∖t} ⊗ x_t m`. Exponential, test-only sizes.

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::linalg::{rank, FieldSpec, Matrix};
use crate::vset::VertexSet;

pub const MAX_KOSZUL_VARIABLES: usize = 6;

/// Betti table of `R/I`, scanning internal degrees `0 ≤ j ≤ n + 1`.
pub fn betti_table_koszul(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<BettiTable> {
    let n = ideal.n();
    if n > MAX_KOSZUL_VARIABLES {
        return Err(Error::SizeLimit {
            what: "Koszul oracle",
            n,
            max: MAX_KOSZUL_VARIABLES,
        });
    }
    let mut table = BettiTable::new(n);
    let mut alpha = vec![0u32; n];
    for j in 0..=n + 1 {
        compositions(&mut alpha, 0, j as u32, &mut |a| {
            for (i, b) in multidegree_tor(ideal, a, field).into_iter().enumerate() {
                table.add(i, j, b as u64);
            }
        });
    }
    Ok(table)
}

fn compositions(alpha: &mut [u32], pos: usize, left: u32, f: &mut impl FnMut(&[u32])) {
    if pos + 1 == alpha.len() {
        alpha[pos] = left;
        f(alpha);
        return;
    }
    if alpha.is_empty() {
        if left == 0 {
            f(alpha);
        }
        return;
    }
    for x in 0..=left {
        alpha[pos] = x;
        compositions(alpha, pos + 1, left - x, f);
    }
}

/// `dim Tor_i(R/I, K)_α` for `i = 0 … |supp α|`.
fn multidegree_tor(ideal: &SquarefreeIdeal, alpha: &[u32], field: FieldSpec) -> Vec<usize> {
    let support: VertexSet = (0..alpha.len()).filter(|&t| alpha[t] > 0).collect();
    let ones: VertexSet = (0..alpha.len()).filter(|&t| alpha[t] == 1).collect();
    // x^{α − e_T} has support supp α minus the coordinates where α_t = 1 and t ∈ T.
    let survives =
        |t_set: VertexSet| !ideal.contains_support(support.difference(ones.intersection(t_set)));
    let s = support.len();
    let mut bases: Vec<Vec<VertexSet>> = vec![Vec::new(); s + 1];
    for sub in 0..1u64 << s {
        let t_set = VertexSet(sub).expand(support);
        if survives(t_set) {
            bases[t_set.len()].push(t_set);
        }
    }
    // ranks[i] = rank of d_i : K_i → K_{i−1}
    let mut ranks = vec![0usize; s + 2];
    for i in 1..=s {
        let (src, dst) = (&bases[i], &bases[i - 1]);
        if src.is_empty() || dst.is_empty() {
            continue;
        }
        let mut m = Matrix::zeros(src.len(), dst.len());
        for (r, &t_set) in src.iter().enumerate() {
            for (pos, t) in t_set.iter().enumerate() {
                if let Ok(c) = dst.binary_search(&t_set.without(t)) {
                    m.set(r, c, if pos % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        ranks[i] = rank(&m, field);
    }
    (0..=s)
        .map(|i| bases[i].len() - ranks[i] - ranks[i + 1])
        .collect()
}
