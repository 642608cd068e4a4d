//! Exterior algebra over ℝⁿ (n ≤ 8) with the standard orthonormal metric
//! and orientation.
//!
//! Basis covectors are labelled the way the model spaces write them:
//! `e1..e7` in dimension 7 and `e0..e7` in dimension 8. Every other
//! dimension uses 1-based labels. Internally a blade is a bitset over
//! positions `0..n`, and `label = position + index_base(n)`.
//!
//! The evaluation convention is `(a∧b)(X,Y) = a(X)b(Y) − a(Y)b(X)`, so the
//! blade `e^{i₁…i_k}` takes the value 1 on `(e_{i₁},…,e_{i_k})`.

mod blade;
pub(crate) mod display;

use std::collections::BTreeMap;

use num_traits::{One, Zero};

pub use blade::Blade;
pub(crate) use blade::sort_sign;

use crate::error::{Error, Result};
use crate::linalg::Rational;

pub const MAX_DIM: usize = 8;

/// First basis label in dimension `dim`.
pub const fn index_base(dim: usize) -> usize {
    if dim == 8 {
        0
    } else {
        1
    }
}

fn check_dim(dim: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(dim))
    }
}

fn check_same_dim(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left: a, right: b })
    }
}

/// All blades of the given grade in canonical order.
pub fn basis_blades(dim: usize, degree: usize) -> Vec<Blade> {
    let mut out: Vec<Blade> = (0u16..(1 << dim))
        .map(Blade::from_mask)
        .filter(|b| b.grade() == degree)
        .collect();
    out.sort();
    out
}

/// A degree-homogeneous exterior form with exact coefficients.
///
/// Zero coefficients are never stored, so structural equality is exact
/// equality of forms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Form {
    dim: usize,
    degree: usize,
    terms: BTreeMap<Blade, Rational>,
}

impl Form {
    pub fn zero(dim: usize, degree: usize) -> Result<Form> {
        check_dim(dim)?;
        if degree > dim {
            return Err(Error::DegreeOutOfRange {
                degree,
                context: "a form",
            });
        }
        Ok(Form {
            dim,
            degree,
            terms: BTreeMap::new(),
        })
    }

    pub fn scalar(dim: usize, value: Rational) -> Result<Form> {
        let mut f = Form::zero(dim, 0)?;
        f.accumulate(Blade::EMPTY, value);
        Ok(f)
    }

    /// `coeff · blade`, with the blade given by its positions.
    pub fn monomial(dim: usize, blade: Blade, coeff: Rational) -> Result<Form> {
        check_dim(dim)?;
        if blade.mask() >> dim != 0 {
            return Err(Error::BadIndex {
                index: blade.positions().last().unwrap_or(0) + index_base(dim),
                dim,
            });
        }
        let mut f = Form::zero(dim, blade.grade())?;
        f.accumulate(blade, coeff);
        Ok(f)
    }

    /// The wedge `e^{l₁} ∧ … ∧ e^{l_k}` of basis covectors given by label, in
    /// the written order (the sign of the sorting permutation is applied).
    pub fn blade(dim: usize, labels: &[usize]) -> Result<Form> {
        check_dim(dim)?;
        let base = index_base(dim);
        let mut positions = Vec::with_capacity(labels.len());
        for &label in labels {
            if label < base || label - base >= dim {
                return Err(Error::BadIndex { index: label, dim });
            }
            let p = label - base;
            if positions.contains(&p) {
                return Err(Error::RepeatedIndex(label));
            }
            positions.push(p);
        }
        let sign = sort_sign(&positions);
        Form::monomial(
            dim,
            Blade::from_positions(&positions),
            Rational::from_integer(sign.into()),
        )
    }

    /// Basis covector `e^label`.
    pub fn covector(dim: usize, label: usize) -> Result<Form> {
        Form::blade(dim, &[label])
    }

    /// Basis covector at position `k` (label `k + index_base(dim)`).
    pub fn basis_covector(dim: usize, position: usize) -> Form {
        Form::monomial(dim, Blade::from_positions(&[position]), Rational::one())
            .expect("position within dimension")
    }

    pub fn volume(dim: usize) -> Result<Form> {
        check_dim(dim)?;
        Form::monomial(dim, Blade::EMPTY.complement(dim), Rational::one())
    }

    /// Unit blades of `Λ^degree` in canonical order.
    pub fn basis(dim: usize, degree: usize) -> Result<Vec<Form>> {
        Form::zero(dim, degree)?;
        Ok(basis_blades(dim, degree)
            .into_iter()
            .map(|b| Form::monomial(dim, b, Rational::one()).unwrap())
            .collect())
    }

    pub fn from_terms<I>(dim: usize, degree: usize, terms: I) -> Result<Form>
    where
        I: IntoIterator<Item = (Blade, Rational)>,
    {
        let mut f = Form::zero(dim, degree)?;
        for (b, c) in terms {
            if b.grade() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: b.grade(),
                });
            }
            if b.mask() >> dim != 0 {
                return Err(Error::BadIndex {
                    index: b.positions().last().unwrap_or(0) + index_base(dim),
                    dim,
                });
            }
            f.accumulate(b, c);
        }
        Ok(f)
    }

    /// Coordinates in the canonical blade basis of `Λ^degree`.
    pub fn to_vector(&self) -> Vec<Rational> {
        basis_blades(self.dim, self.degree)
            .into_iter()
            .map(|b| self.coeff(b))
            .collect()
    }

    pub fn from_vector(dim: usize, degree: usize, coords: &[Rational]) -> Result<Form> {
        let blades = basis_blades(dim, degree);
        if blades.len() != coords.len() {
            return Err(Error::Shape(format!(
                "{} coordinates for a space of dimension {}",
                coords.len(),
                blades.len()
            )));
        }
        Form::from_terms(dim, degree, blades.into_iter().zip(coords.iter().cloned()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, blade: Blade) -> Rational {
        self.terms.get(&blade).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the blade with the given labels (in any order).
    pub fn coeff_of(&self, labels: &[usize]) -> Result<Rational> {
        let unit = Form::blade(self.dim, labels)?;
        let (&b, sign) = unit.terms.iter().next().expect("unit blade");
        Ok(self.coeff(b) * sign)
    }

    /// Value of a degree-0 form.
    pub fn scalar_value(&self) -> Result<Rational> {
        if self.degree != 0 {
            return Err(Error::WrongSignature {
                expected: "a 0-form".into(),
                found: format!("a {}-form", self.degree),
            });
        }
        Ok(self.coeff(Blade::EMPTY))
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Rational)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    fn accumulate(&mut self, blade: Blade, value: Rational) {
        if value.is_zero() {
            return;
        }
        let slot = self.terms.entry(blade).or_insert_with(Rational::zero);
        *slot += value;
        if slot.is_zero() {
            self.terms.remove(&blade);
        }
    }

    pub fn add(&self, other: &Form) -> Result<Form> {
        check_same_dim(self.dim, other.dim)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.accumulate(*b, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Form) -> Result<Form> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Form {
        if c.is_zero() {
            return Form {
                terms: BTreeMap::new(),
                ..self.clone()
            };
        }
        Form {
            dim: self.dim,
            degree: self.degree,
            terms: self.terms.iter().map(|(b, x)| (*b, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> Form {
        Form {
            dim: self.dim,
            degree: self.degree,
            terms: self.terms.iter().map(|(b, x)| (*b, -x)).collect(),
        }
    }

    /// Sum of forms of the given signature; empty sums are zero.
    pub fn sum<'a, I>(dim: usize, degree: usize, forms: I) -> Result<Form>
    where
        I: IntoIterator<Item = &'a Form>,
    {
        forms
            .into_iter()
            .try_fold(Form::zero(dim, degree)?, |acc, f| acc.add(f))
    }

    pub fn wedge(&self, other: &Form) -> Result<Form> {
        check_same_dim(self.dim, other.dim)?;
        let degree = self.degree + other.degree;
        if degree > self.dim {
            // Λ^{>n} = 0; represented as the zero top form.
            return Form::zero(self.dim, self.dim);
        }
        let mut out = Form::zero(self.dim, degree)?;
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let sign = a.wedge_sign(*b);
                if sign != 0 {
                    let c = x * y;
                    out.accumulate(a.union(*b), if sign > 0 { c } else { -c });
                }
            }
        }
        Ok(out)
    }

    /// Interior product `i_x self`, contracting the first slot with the
    /// vector metrically dual to the covector `x`.
    pub fn contract(&self, x: &Form) -> Result<Form> {
        check_same_dim(self.dim, x.dim)?;
        if x.degree != 1 {
            return Err(Error::WrongSignature {
                expected: "a covector".into(),
                found: format!("a {}-form", x.degree),
            });
        }
        if self.degree == 0 {
            return Err(Error::DegreeOutOfRange {
                degree: 0,
                context: "interior product",
            });
        }
        let mut out = Form::zero(self.dim, self.degree - 1)?;
        for (v, xc) in &x.terms {
            let k = v.positions().next().expect("covector blade");
            for (b, c) in &self.terms {
                if b.contains(k) {
                    let t = xc * c;
                    out.accumulate(
                        b.without(k),
                        if b.contraction_sign(k) > 0 { t } else { -t },
                    );
                }
            }
        }
        Ok(out)
    }

    /// Hodge star: `b ∧ *b = vol` on every unit blade `b`.
    pub fn hodge(&self) -> Form {
        let mut out = Form {
            dim: self.dim,
            degree: self.dim - self.degree,
            terms: BTreeMap::new(),
        };
        for (b, c) in &self.terms {
            let comp = b.complement(self.dim);
            let c = c.clone();
            out.accumulate(comp, if b.wedge_sign(comp) > 0 { c } else { -c });
        }
        out
    }

    /// Determinant inner product; unit blades are orthonormal.
    pub fn inner(&self, other: &Form) -> Result<Rational> {
        check_same_dim(self.dim, other.dim)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(self
            .terms
            .iter()
            .filter_map(|(b, x)| other.terms.get(b).map(|y| x * y))
            .sum())
    }

    /// Re-expresses a form in another dimension, keeping basis labels. Used
    /// for the inclusion `Λ(ℝ⁷) ⊂ Λ(ℝ⁸)` where `e1..e7` keep their names.
    pub fn relabel_into(&self, dim: usize) -> Result<Form> {
        check_dim(dim)?;
        let (from, to) = (index_base(self.dim), index_base(dim));
        let mut out = Form::zero(dim, self.degree)?;
        for (b, c) in &self.terms {
            let mut positions = Vec::with_capacity(b.grade());
            for p in b.positions() {
                let label = p + from;
                if label < to || label - to >= dim {
                    return Err(Error::BadIndex { index: label, dim });
                }
                positions.push(label - to);
            }
            out.accumulate(Blade::from_positions(&positions), c.clone());
        }
        Ok(out)
    }

    /// Labels of a blade in this form's dimension.
    pub fn labels(&self, blade: Blade) -> Vec<usize> {
        let base = index_base(self.dim);
        blade.positions().map(|p| p + base).collect()
    }
}

pub fn wedge(a: &Form, b: &Form) -> Result<Form> {
    a.wedge(b)
}

/// `i_x a`.
pub fn interior(x: &Form, a: &Form) -> Result<Form> {
    a.contract(x)
}

pub fn hodge(a: &Form) -> Form {
    a.hodge()
}

pub fn form_inner(a: &Form, b: &Form) -> Result<Rational> {
    a.inner(b)
}
