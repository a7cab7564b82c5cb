//! Exact rank of small integer matrices over ℚ or GF(p).
//!
//! Over ℚ, elimination is fraction-free on machine integers with each row
//! divided by its content after every update; if a product would overflow
//! the computation restarts on big integers. GF(2) packs rows into words.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Coefficient field for homology and Betti numbers.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default,
)]
pub enum FieldSpec {
    #[default]
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::Prime(2);

    pub fn prime(p: u32) -> Result<Self, Error> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::InvalidField(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d: &u32| (*d as u64) * (*d as u64) <= p as u64)
            .all(|d| !p.is_multiple_of(d))
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

/// Accepts `q` (or `0`) for the rationals and `gf:p` for a prime field.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" || t == "0" || t == "qq" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .strip_prefix("gf:")
            .or_else(|| t.strip_prefix("gf"))
            .ok_or_else(|| Error::InvalidField(s.to_string()))?;
        let p: u32 = digits
            .parse()
            .map_err(|_| Error::InvalidField(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
}

pub fn rank(m: &Matrix, field: FieldSpec) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    match field {
        FieldSpec::Prime(2) => rank_gf2(m),
        FieldSpec::Prime(p) => rank_mod_p(m, p as u64),
        FieldSpec::Rationals => rank_rational(m),
    }
}

fn rank_gf2(m: &Matrix) -> usize {
    let words = m.cols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = (0..m.rows)
        .map(|r| {
            let mut w = vec![0u64; words];
            for (c, &x) in m.row(r).iter().enumerate() {
                if x & 1 != 0 {
                    w[c / 64] |= 1 << (c % 64);
                }
            }
            w
        })
        .collect();
    rank_gf2_rows(&mut rows, m.cols)
}

/// Rank over GF(2) of bit-packed rows; the rows are destroyed.
pub fn rank_gf2_rows(rows: &mut [Vec<u64>], cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let (w, bit) = (c / 64, 1u64 << (c % 64));
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            if row[w] & bit != 0 {
                for (a, b) in row[w..].iter_mut().zip(&prow[w..]) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn rank_mod_p(m: &Matrix, p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = (0..m.rows)
        .map(|r| {
            m.row(r)
                .iter()
                .map(|&x| x.rem_euclid(p as i64) as u64)
                .collect()
        })
        .collect();
    let mut rank = 0;
    for c in 0..m.cols {
        let Some(pivot) = (rank..m.rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = pow_mod(a[rank][c], p - 2, p);
        let (head, tail) = a.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            if row[c] != 0 {
                let f = row[c] * inv % p;
                for k in c..m.cols {
                    row[k] = (row[k] + (p - f) * prow[k] % p) % p;
                }
            }
        }
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn rank_rational(m: &Matrix) -> usize {
    let rows: Vec<Vec<i64>> = (0..m.rows).map(|r| m.row(r).to_vec()).collect();
    match rank_integer_i64(rows.clone(), m.cols) {
        Some(r) => r,
        None => rank_integer_big(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
            m.cols,
        ),
    }
}

/// Fraction-free elimination; `None` on overflow.
fn rank_integer_i64(mut a: Vec<Vec<i64>>, cols: usize) -> Option<usize> {
    let nrows = a.len();
    let mut rank = 0;
    for c in 0..cols {
        // Prefer a unit pivot: the update is then a plain subtraction.
        let mut pivot = None;
        for (r, row) in a.iter().enumerate().skip(rank) {
            let x = row[c];
            if x != 0 {
                if x.abs() == 1 {
                    pivot = Some(r);
                    break;
                }
                if pivot.is_none() {
                    pivot = Some(r);
                }
            }
        }
        let Some(pivot) = pivot else { continue };
        a.swap(rank, pivot);
        let (head, tail) = a.split_at_mut(rank + 1);
        let prow = &head[rank];
        let pv = prow[c];
        for row in tail.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            let g = pv.gcd(&f);
            let (mp, mf) = (pv / g, f / g);
            let mut content = 0i64;
            for k in c..cols {
                let v = row[k]
                    .checked_mul(mp)?
                    .checked_sub(prow[k].checked_mul(mf)?)?;
                row[k] = v;
                content = content.gcd(&v);
            }
            if content > 1 {
                for x in row[c..].iter_mut() {
                    *x /= content;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    Some(rank)
}

fn rank_integer_big(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let nrows = a.len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..nrows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let (head, tail) = a.split_at_mut(rank + 1);
        let prow = &head[rank];
        let pv = prow[c].clone();
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let g = pv.gcd(&row[c]);
            let mp = &pv / &g;
            let mf = &row[c] / &g;
            let mut content = BigInt::zero();
            for k in c..cols {
                row[k] = &row[k] * &mp - &prow[k] * &mf;
                content = content.gcd(&row[k]);
            }
            if content.abs() > BigInt::from(1) {
                for x in row[c..].iter_mut() {
                    *x = &*x / &content;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIELDS: [FieldSpec; 3] = [
        FieldSpec::Rationals,
        FieldSpec::Prime(2),
        FieldSpec::Prime(3),
    ];

    #[test]
    fn identity_and_zero() {
        for f in FIELDS {
            assert_eq!(rank(&Matrix::identity(3), f), 3);
            assert_eq!(rank(&Matrix::zeros(3, 4), f), 0);
            assert_eq!(rank(&Matrix::zeros(0, 4), f), 0);
        }
    }

    #[test]
    fn triangle_boundary_gf2() {
        // rows: edges 01, 02, 12; cols: vertices 0, 1, 2
        let d1 = Matrix::from_rows(&[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(rank(&d1, FieldSpec::GF2), 2);
        let signed = Matrix::from_rows(&[vec![-1, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]]);
        assert_eq!(rank(&signed, FieldSpec::Rationals), 2);
    }

    #[test]
    fn characteristic_dependence() {
        let m = Matrix::from_rows(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(rank(&m, FieldSpec::Rationals), 2);
        assert_eq!(rank(&m, FieldSpec::GF2), 1);
        assert_eq!(rank(&m, FieldSpec::Prime(3)), 2);
        let six = Matrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(rank(&six, FieldSpec::Prime(3)), 1);
        assert_eq!(rank(&six, FieldSpec::Prime(5)), 2);
    }

    #[test]
    fn big_integer_fallback_agrees() {
        // Hilbert-like integer matrix whose elimination overflows i64 quickly.
        let n = 14;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| ((i * 7 + j * 13) as i64 % 97 + 1) * 1_000_003)
                    .collect()
            })
            .collect();
        let big = rank_integer_big(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            n,
        );
        assert_eq!(rank(&Matrix::from_rows(&rows), FieldSpec::Rationals), big);
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("gf:2".parse::<FieldSpec>().unwrap(), FieldSpec::GF2);
        assert_eq!("GF:7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert!("gf:4".parse::<FieldSpec>().is_err());
        assert!("r".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::Prime(5).to_string(), "gf:5");
    }
}
