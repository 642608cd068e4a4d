//! Dense exact linear algebra over the rationals.
//!
//! Echelon forms are computed with fraction-free (Bareiss) elimination on an
//! integer copy of the matrix: every intermediate entry is a minor of the
//! input, so division by the previous pivot is always exact and coefficient
//! growth stays polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always reduced, denominator positive.
pub type Rational = BigRational;

/// Shorthand for building small rationals in code and tests.
pub fn q(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn qi(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::new(n, cols, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`. With no columns
    /// the row count is taken from `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Shape(format!("columns must have length {rows}")));
        }
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, column) in columns.iter().enumerate() {
            for (i, x) in column.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| dot(self.row(i), v))
            .collect())
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        Echelon::of(self).pivots.len()
    }

    /// Basis of the right null space. Each vector has a 1 in one free
    /// column, zeros in the other free columns, and pivot entries solved by
    /// back substitution, i.e. the basis read off the reduced echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let ech = Echelon::of(self);
        let free: Vec<usize> = (0..self.cols)
            .filter(|c| !ech.pivots.contains(c))
            .collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rational::zero(); self.cols];
                x[f] = Rational::one();
                ech.back_substitute(&mut x, self.cols);
                x
            })
            .collect()
    }

    /// Solves `self * x = b`. Returns `None` when the system is inconsistent;
    /// otherwise the particular solution with all free variables zero.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::Shape(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let ech = Echelon::of(&aug);
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols + 1];
        x[self.cols] = -Rational::one();
        ech.back_substitute(&mut x, self.cols + 1);
        x.truncate(self.cols);
        Ok(Some(x))
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Integer row-echelon form produced by fraction-free elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn of(m: &RationalMatrix) -> Echelon {
        let cols = m.cols;
        let mut a: Vec<Vec<BigInt>> = (0..m.rows)
            .map(|i| clear_denominators(m.row(i)))
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..cols {
            if r == a.len() {
                break;
            }
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let (top, bottom) = a.split_at_mut(r + 1);
            let pivot_row = &top[r];
            let pivot = &pivot_row[c];
            for row in bottom.iter_mut() {
                let lead = std::mem::take(&mut row[c]);
                for j in c + 1..cols {
                    let num = pivot * &row[j] - &lead * &pivot_row[j];
                    let (quot, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "inexact Bareiss division");
                    row[j] = quot;
                }
            }
            prev = a[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        a.truncate(r);
        Echelon { rows: a, pivots }
    }

    /// Fills the pivot entries of `x` (free entries already set) so that
    /// every echelon row annihilates `x`.
    fn back_substitute(&self, x: &mut [Rational], cols: usize) {
        for (row, &p) in self.rows.iter().zip(&self.pivots).rev() {
            let mut acc = Rational::zero();
            for j in p + 1..cols {
                if !row[j].is_zero() && !x[j].is_zero() {
                    acc += Rational::from_integer(row[j].clone()) * &x[j];
                }
            }
            x[p] = -acc / Rational::from_integer(row[p].clone());
        }
    }
}

fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

pub fn rank(m: &RationalMatrix) -> usize {
    m.rank()
}

pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    m.kernel_basis()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// Scales `v` so that its first nonzero entry is 1. The zero vector is
/// returned unchanged.
pub fn normalize_leading(v: &[Rational]) -> Vec<Rational> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let lead = lead.clone();
            v.iter().map(|x| x / &lead).collect()
        }
        None => v.to_vec(),
    }
}

/// Projection of `v` onto `span(basis)`, orthogonal with respect to `inner`.
/// Solves the normal equations exactly.
pub fn orthogonal_project<F>(v: &[Rational], basis: &[Vec<Rational>], inner: F) -> Result<Vec<Rational>>
where
    F: Fn(&[Rational], &[Rational]) -> Rational,
{
    if let Some(b) = basis.iter().find(|b| b.len() != v.len()) {
        return Err(Error::Shape(format!(
            "basis vector of length {} against vector of length {}",
            b.len(),
            v.len()
        )));
    }
    let k = basis.len();
    let mut gram = RationalMatrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let g = inner(&basis[i], &basis[j]);
            gram.set(j, i, g.clone());
            gram.set(i, j, g);
        }
    }
    if gram.rank() < k {
        return Err(Error::DegenerateGram);
    }
    let rhs: Vec<Rational> = basis.iter().map(|b| inner(b, v)).collect();
    let coeffs = gram
        .solve(&rhs)?
        .expect("nonsingular Gram system is consistent");
    let mut out = vec![Rational::zero(); v.len()];
    for (c, b) in coeffs.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            *o += c * x;
        }
    }
    Ok(out)
}

/// Lowest-terms check used by tests and debug assertions.
pub fn is_canonical(x: &Rational) -> bool {
    x.denom().is_positive() && x.numer().gcd(x.denom()).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| qi(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_and_zero_rank() {
        assert_eq!(RationalMatrix::identity(2).rank(), 2);
        assert_eq!(RationalMatrix::zeros(3, 3).rank(), 0);
        assert!(RationalMatrix::identity(2).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_single_row() {
        let k = m(&[&[1, -1]]).kernel_basis();
        assert_eq!(k, vec![vec![qi(1), qi(1)]]);
    }

    #[test]
    fn kernel_with_skipped_pivot_column() {
        // second column is zero, so it is free before the pivot in column 2
        let a = m(&[&[1, 0, 2], &[2, 0, 4], &[0, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel_basis();
        assert_eq!(k, vec![vec![qi(0), qi(1), qi(0)]]);
    }

    #[test]
    fn rational_entries() {
        let a = RationalMatrix::from_rows(vec![
            vec![q(1, 2), q(1, 3)],
            vec![q(3, 4), q(1, 2)],
        ])
        .unwrap();
        assert_eq!(a.rank(), 1);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(a.mul_vec(&k[0]).unwrap(), vec![qi(0), qi(0)]);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1], &[2, 0]]);
        let x = a.solve(&[qi(3), qi(1), qi(4)]).unwrap().unwrap();
        assert_eq!(x, vec![qi(2), qi(1)]);
        assert!(a.solve(&[qi(3), qi(1), qi(5)]).unwrap().is_none());
    }

    #[test]
    fn solve_underdetermined_sets_free_to_zero() {
        let a = m(&[&[1, 2, 3]]);
        let x = a.solve(&[qi(6)]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), vec![qi(6)]);
        assert_eq!(x, vec![qi(6), qi(0), qi(0)]);
    }

    #[test]
    fn project_onto_axis() {
        let p = orthogonal_project(&[qi(1), qi(1)], &[vec![qi(1), qi(0)]], dot).unwrap();
        assert_eq!(p, vec![qi(1), qi(0)]);
    }

    #[test]
    fn project_member_is_fixed() {
        let basis = vec![vec![qi(1), qi(2), qi(0)], vec![qi(0), qi(1), qi(1)]];
        let v = vec![qi(2), qi(5), qi(1)];
        assert_eq!(orthogonal_project(&v, &basis, dot).unwrap(), v);
    }

    #[test]
    fn project_rejects_dependent_basis() {
        let basis = vec![vec![qi(1), qi(2)], vec![qi(2), qi(4)]];
        assert_eq!(
            orthogonal_project(&[qi(1), qi(0)], &basis, dot),
            Err(Error::DegenerateGram)
        );
    }

    #[test]
    fn shape_errors() {
        assert!(RationalMatrix::new(2, 2, vec![qi(1)]).is_err());
        assert!(RationalMatrix::identity(2).mul_vec(&[qi(1)]).is_err());
        assert!(RationalMatrix::identity(2).solve(&[qi(1)]).is_err());
    }

    #[test]
    fn normalization() {
        assert_eq!(
            normalize_leading(&[qi(0), qi(-3), qi(6)]),
            vec![qi(0), qi(1), qi(-2)]
        );
        assert!(is_canonical(&q(6, -4)));
    }
}
