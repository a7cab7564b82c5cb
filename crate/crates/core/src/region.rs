//! The feasible regions for `(dim, depth)` and `(dim, depth, reg)` of edge
//! ideals of connected graphs on `n` vertices.
//!
//! ```text
//! C*(n)     = {(d, p) : 1 ≤ p ≤ d ≤ n−1, d ≤ (n−d)(d−p+1)}
//! C**(n,c)  = {(d, p) : 1 ≤ p ≤ d ≤ n−1, d ≤ (n−d−(c−1))(d−p+1) + (c−1)}
//! C**(n)    = {(n−1, 1, 1)} ∪ {(d, p, r) : 1 ≤ p ≤ d ≤ n−2, 2 ≤ r+d ≤ n−1,
//!                                1 ≤ r ≤ d ≤ (n−d−(r−1))(d−p+1) + (r−1)}
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tuple2 {
    pub d: usize,
    pub p: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tuple3 {
    pub d: usize,
    pub p: usize,
    pub r: usize,
}

impl Tuple2 {
    pub fn new(d: usize, p: usize) -> Self {
        Tuple2 { d, p }
    }
}

impl Tuple3 {
    pub fn new(d: usize, p: usize, r: usize) -> Self {
        Tuple3 { d, p, r }
    }

    pub fn project(self) -> Tuple2 {
        Tuple2 {
            d: self.d,
            p: self.p,
        }
    }
}

impl fmt::Display for Tuple2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.d, self.p)
    }
}

impl fmt::Display for Tuple3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.d, self.p, self.r)
    }
}

/// `d ≤ (n − d − (c − 1))(d − p + 1) + (c − 1)` in overflow-checked signed
/// arithmetic.
fn cover_bound_holds(n: usize, d: usize, p: usize, c: usize) -> bool {
    let (n, d, p, c) = (n as i64, d as i64, p as i64, c as i64);
    let slack = n - d - (c - 1);
    let rhs = slack
        .checked_mul(d - p + 1)
        .and_then(|x| x.checked_add(c - 1))
        .expect("region arithmetic overflow");
    d <= rhs
}

pub fn in_cstar(n: usize, t: Tuple2) -> bool {
    let Tuple2 { d, p } = t;
    n >= 2 && 1 <= p && p <= d && d < n && cover_bound_holds(n, d, p, 1)
}

pub fn in_cstarstar(n: usize, t: Tuple3) -> bool {
    let Tuple3 { d, p, r } = t;
    if n < 3 {
        return false;
    }
    if t == Tuple3::new(n - 1, 1, 1) {
        return true;
    }
    1 <= p
        && p <= d
        && d + 2 <= n
        && 2 <= r + d
        && r + d < n
        && 1 <= r
        && r <= d
        && cover_bound_holds(n, d, p, r)
}

pub fn in_cc(n: usize, c: usize, t: Tuple2) -> bool {
    let Tuple2 { d, p } = t;
    n >= 3 && c >= 1 && 1 <= p && p <= d && d < n && cover_bound_holds(n, d, p, c)
}

fn require(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::Domain(format!("region needs n ≥ {min}, got {n}")));
    }
    Ok(())
}

/// `C**(n)` in lexicographic order.
pub fn enumerate_cstarstar(n: usize) -> Result<Vec<Tuple3>> {
    require(n, 3)?;
    let mut out = Vec::new();
    for d in 1..=n {
        for p in 1..=n {
            for r in 1..=n {
                let t = Tuple3::new(d, p, r);
                if in_cstarstar(n, t) {
                    out.push(t);
                }
            }
        }
    }
    Ok(out)
}

/// `C*(n)` in lexicographic order.
pub fn enumerate_cstar(n: usize) -> Result<Vec<Tuple2>> {
    require(n, 2)?;
    Ok(box2(n).filter(|&t| in_cstar(n, t)).collect())
}

/// `C**(n, c)` in lexicographic order.
pub fn enumerate_cc(n: usize, c: usize) -> Result<Vec<Tuple2>> {
    require(n, 3)?;
    if c == 0 {
        return Err(Error::Domain("c must be at least 1".into()));
    }
    Ok(box2(n).filter(|&t| in_cc(n, c, t)).collect())
}

fn box2(n: usize) -> impl Iterator<Item = Tuple2> {
    (1..=n).flat_map(move |d| (1..=n).map(move |p| Tuple2::new(d, p)))
}
