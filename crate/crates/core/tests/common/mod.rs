//! Slow, obviously-correct reference implementations used as test oracles.
#![allow(dead_code)]

use std::collections::BTreeMap;

use ckforms::linalg::{Rational, RationalMatrix};
use ckforms::multivector::{Blade, Form};
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Sorts `v` by adjacent swaps and returns the permutation sign, or `None`
/// if an index repeats.
pub fn bubble_sign(v: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

/// A form as a map from sorted position lists to coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Naive {
    pub n: usize,
    pub terms: BTreeMap<Vec<usize>, Rational>,
}

impl Naive {
    pub fn of(f: &Form) -> Naive {
        Naive {
            n: f.dim(),
            terms: f
                .terms()
                .map(|(b, c)| (b.positions().collect(), c.clone()))
                .collect(),
        }
    }

    fn push(&mut self, key: Vec<usize>, c: Rational) {
        let e = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn wedge(&self, other: &Naive) -> Naive {
        let mut out = Naive {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut idx: Vec<usize> = a.iter().chain(b).copied().collect();
                if let Some(s) = bubble_sign(&mut idx) {
                    out.push(idx, x * y * Rational::from_integer(s.into()));
                }
            }
        }
        out
    }

    /// Contraction with the basis vector at `position`.
    pub fn interior(&self, position: usize) -> Naive {
        let mut out = Naive {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (a, x) in &self.terms {
            if let Some(k) = a.iter().position(|&i| i == position) {
                let mut rest = a.clone();
                rest.remove(k);
                let s = if k % 2 == 0 { 1 } else { -1 };
                out.push(rest, x * Rational::from_integer(s.into()));
            }
        }
        out
    }

    /// `*e^I = sign(I, I^c) e^{I^c}`, so that `e^I ∧ *e^I = vol`.
    pub fn hodge(&self) -> Naive {
        let mut out = Naive {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (a, x) in &self.terms {
            let comp: Vec<usize> = (0..self.n).filter(|i| !a.contains(i)).collect();
            let mut perm: Vec<usize> = a.iter().chain(&comp).copied().collect();
            let s = bubble_sign(&mut perm).unwrap();
            out.push(comp, x * Rational::from_integer(s.into()));
        }
        out
    }

    pub fn inner(&self, other: &Naive) -> Rational {
        self.terms
            .iter()
            .filter_map(|(k, v)| other.terms.get(k).map(|w| v * w))
            .fold(Rational::zero(), |a, b| a + b)
    }
}

pub fn blade_form(dim: usize, positions: &[usize]) -> Form {
    Form::monomial(dim, Blade::from_positions(positions), Rational::one()).unwrap()
}

/// Cofactor expansion determinant.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut acc = Rational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Largest k with a non-zero k×k minor.
pub fn minor_rank(m: &RationalMatrix) -> usize {
    let (r, c) = (m.rows(), m.cols());
    for k in (1..=r.min(c)).rev() {
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                let sub: Vec<Vec<Rational>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect())
                    .collect();
                if !det(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

/// Small matrices with many zeros so that rank deficiency is common.
pub fn matrix(max: usize) -> impl Strategy<Value = RationalMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(prop_oneof![3 => Just(Rational::zero()), 2 => rational()], r * c)
            .prop_map(move |entries| RationalMatrix::new(r, c, entries).unwrap())
    })
}

pub fn form_in(dim: usize, degree: usize) -> impl Strategy<Value = Form> {
    let len = ckforms::multivector::basis_blades(dim, degree).len();
    proptest::collection::vec(prop_oneof![2 => Just(Rational::zero()), 1 => rational()], len)
        .prop_map(move |coords| Form::from_vector(dim, degree, &coords).unwrap())
}

pub fn form() -> impl Strategy<Value = Form> {
    (7usize..=8)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, p)| form_in(n, p))
}

/// Two forms on the same space.
pub fn form_pair() -> impl Strategy<Value = (Form, Form)> {
    (7usize..=8)
        .prop_flat_map(|n| (Just(n), 0..=n, 0..=n))
        .prop_flat_map(|(n, p, q)| (form_in(n, p), form_in(n, q)))
}
