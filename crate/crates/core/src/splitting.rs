//! Betti splittings `I = I′ + I″` along a variable.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::betti::{betti_table_hochster, BettiTable};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::linalg::FieldSpec;

type IdealBetti = BTreeMap<(usize, usize), u64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingReport {
    pub var: usize,
    /// `I′` is nonzero (some generator is divisible by the variable).
    pub star_nonzero: bool,
    /// `I″` is nonzero.
    pub rest_nonzero: bool,
    /// `I′` is generated in one degree `t` and has regularity `t`.
    pub star_linear: bool,
    /// `β_{i,j}(I) = β_{i,j}(I′) + β_{i,j}(I″) + β_{i−1,j}(I′ ∩ I″)` for all `(i, j)`.
    pub identity_holds: bool,
    /// `reg I = max{reg I′, reg I″, reg(I′ ∩ I″) − 1}`.
    pub reg_formula_holds: bool,
    /// `pd I = max{pd I′, pd I″, pd(I′ ∩ I″) + 1}`.
    pub pd_formula_holds: bool,
}

fn ideal_betti(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<IdealBetti> {
    if ideal.is_zero() {
        return Ok(IdealBetti::new());
    }
    let quotient: BettiTable =
        betti_table_hochster(&SimplicialComplex::stanley_reisner(ideal), field)?;
    Ok(quotient.ideal_entries())
}

/// Regularity of a nonzero ideal: `max{j − i}`; `None` for the zero ideal.
fn reg(b: &IdealBetti) -> Option<i64> {
    b.keys().map(|&(i, j)| j as i64 - i as i64).max()
}

fn pd(b: &IdealBetti) -> Option<i64> {
    b.keys().map(|&(i, _)| i as i64).max()
}

/// Forms the `x_var`-partition of `ideal` and compares the Betti numbers of
/// `I` with those predicted by a Betti splitting.
pub fn betti_splitting_check(
    ideal: &SquarefreeIdeal,
    var: usize,
    field: FieldSpec,
) -> Result<SplittingReport> {
    if ideal.is_zero() {
        return Err(Error::Inconsistent(
            "splitting needs a nonzero ideal".into(),
        ));
    }
    if var >= ideal.n() {
        return Err(Error::VertexOutOfRange {
            vertex: var,
            n: ideal.n(),
        });
    }
    let (star, rest) = ideal.partition(var);
    let meet = star.intersection(&rest);

    let b_all = ideal_betti(ideal, field)?;
    let b_star = ideal_betti(&star, field)?;
    let b_rest = ideal_betti(&rest, field)?;
    let b_meet = ideal_betti(&meet, field)?;

    let mut predicted = IdealBetti::new();
    for (&k, &b) in b_star.iter().chain(&b_rest) {
        *predicted.entry(k).or_insert(0) += b;
    }
    for (&(i, j), &b) in &b_meet {
        *predicted.entry((i + 1, j)).or_insert(0) += b;
    }

    let reg_pred = [reg(&b_star), reg(&b_rest), reg(&b_meet).map(|r| r - 1)]
        .into_iter()
        .flatten()
        .max();
    let pd_pred = [pd(&b_star), pd(&b_rest), pd(&b_meet).map(|p| p + 1)]
        .into_iter()
        .flatten()
        .max();

    let star_linear = match star.generator_degree() {
        Some(t) => reg(&b_star) == Some(t as i64),
        None => false,
    };

    Ok(SplittingReport {
        var,
        star_nonzero: !star.is_zero(),
        rest_nonzero: !rest.is_zero(),
        star_linear,
        identity_holds: predicted == b_all,
        reg_formula_holds: reg_pred == reg(&b_all),
        pd_formula_holds: pd_pred == pd(&b_all),
    })
}
