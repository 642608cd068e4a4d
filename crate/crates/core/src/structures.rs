//! The model G₂ and Spin₇ structures and their irreducible splittings.
//!
//! `G2Model` lives on ℝ⁷ with basis labels `1..7`; `Spin7Model` lives on
//! ℝ⁸ = ℝe₀ ⊕ ℝ⁷ with labels `0..7`, and ℝ⁷-forms are included by keeping
//! their labels.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, q, qi, Rational, RationalMatrix};
use crate::multivector::display::{render_factored, render_terms};
use crate::multivector::{basis_blades, Form};

type Table = &'static [(i64, &'static [usize])];

/// The fundamental 3-form on ℝ⁷.
pub const PHI0_TERMS: Table = &[
    (1, &[1, 2, 3]),
    (1, &[1, 4, 5]),
    (1, &[1, 6, 7]),
    (1, &[2, 4, 6]),
    (-1, &[2, 5, 7]),
    (-1, &[3, 4, 7]),
    (-1, &[3, 5, 6]),
];

/// Its Hodge dual, as usually tabulated. Used only to cross-check `*₇φ₀`.
pub const STAR_PHI0_TERMS: Table = &[
    (1, &[4, 5, 6, 7]),
    (1, &[2, 3, 6, 7]),
    (1, &[2, 3, 4, 5]),
    (1, &[1, 3, 5, 7]),
    (-1, &[1, 3, 4, 6]),
    (-1, &[1, 2, 5, 6]),
    (-1, &[1, 2, 4, 7]),
];

/// The Spin₇ 4-form on ℝ⁸ written out term by term.
pub const PSI0_TERMS: Table = &[
    (1, &[0, 1, 2, 3]),
    (1, &[0, 1, 4, 5]),
    (1, &[0, 1, 6, 7]),
    (1, &[0, 2, 4, 6]),
    (-1, &[0, 2, 5, 7]),
    (-1, &[0, 3, 4, 7]),
    (-1, &[0, 3, 5, 6]),
    (1, &[4, 5, 6, 7]),
    (1, &[2, 3, 6, 7]),
    (1, &[2, 3, 4, 5]),
    (1, &[1, 3, 5, 7]),
    (-1, &[1, 3, 4, 6]),
    (-1, &[1, 2, 5, 6]),
    (-1, &[1, 2, 4, 7]),
];

/// `α₀ = i_{e₀}ψ₀ ∧ e¹ − i_{e₁}ψ₀ ∧ e⁰` written out.
pub const ALPHA0_TERMS: Table = &[
    (-1, &[1, 2, 4, 6]),
    (1, &[1, 2, 5, 7]),
    (1, &[1, 3, 4, 7]),
    (1, &[1, 3, 5, 6]),
    (1, &[0, 3, 5, 7]),
    (-1, &[0, 3, 4, 6]),
    (-1, &[0, 2, 5, 6]),
    (-1, &[0, 2, 4, 7]),
];

pub fn form_from_table(dim: usize, table: Table) -> Form {
    let terms: Vec<Form> = table
        .iter()
        .map(|(c, labels)| Form::blade(dim, labels).unwrap().scale(&qi(*c)))
        .collect();
    Form::sum(dim, table[0].1.len(), &terms).unwrap()
}

fn expect_signature(f: &Form, dim: usize, degree: usize) -> Result<()> {
    if f.dim() != dim || f.degree() != degree {
        return Err(Error::WrongSignature {
            expected: format!("a {degree}-form on R^{dim}"),
            found: format!("a {}-form on R^{}", f.degree(), f.dim()),
        });
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct G2Model {
    phi0: Form,
    star_phi0: Form,
}

impl Default for G2Model {
    fn default() -> Self {
        G2Model::new()
    }
}

impl G2Model {
    pub fn new() -> G2Model {
        let phi0 = form_from_table(7, PHI0_TERMS);
        let star_phi0 = phi0.hodge();
        G2Model { phi0, star_phi0 }
    }

    /// Shared instance.
    pub fn standard() -> &'static G2Model {
        static MODEL: OnceLock<G2Model> = OnceLock::new();
        MODEL.get_or_init(G2Model::new)
    }

    pub fn phi0(&self) -> &Form {
        &self.phi0
    }

    pub fn star_phi0(&self) -> &Form {
        &self.star_phi0
    }

    /// `L(β) = *₇(β ∧ φ₀)` on 2-forms; eigenvalue 2 on Λ²₇, −1 on Λ²₁₄.
    pub fn lambda2_operator(&self, beta: &Form) -> Result<Form> {
        expect_signature(beta, 7, 2)?;
        Ok(beta.wedge(&self.phi0)?.hodge())
    }

    /// Splits a 2-form into its Λ²₇ and Λ²₁₄ parts.
    pub fn lambda2_split(&self, beta: &Form) -> Result<(Form, Form)> {
        let l = self.lambda2_operator(beta)?;
        let third = q(1, 3);
        let beta7 = l.add(beta)?.scale(&third);
        let beta14 = beta.scale(&qi(2)).sub(&l)?.scale(&third);
        Ok((beta7, beta14))
    }

    /// Matrices of the two projectors on the 21-dimensional Λ², columns
    /// indexed by unit blades.
    pub fn lambda2_projectors(&self) -> (RationalMatrix, RationalMatrix) {
        let (mut p7, mut p14) = (Vec::new(), Vec::new());
        for b in Form::basis(7, 2).unwrap() {
            let (b7, b14) = self.lambda2_split(&b).unwrap();
            p7.push(b7.to_vector());
            p14.push(b14.to_vector());
        }
        (
            RationalMatrix::from_columns(21, &p7).unwrap(),
            RationalMatrix::from_columns(21, &p14).unwrap(),
        )
    }

    /// Dimensions of Λ²₇ and Λ²₁₄ as exact projector ranks.
    pub fn lambda2_dims(&self) -> (usize, usize) {
        let (p7, p14) = self.lambda2_projectors();
        (p7.rank(), p14.rank())
    }

    /// `*₇(α ∧ φ₀)`, the Λ³₇ element attached to a covector.
    pub fn lambda37_element(&self, alpha: &Form) -> Result<Form> {
        expect_signature(alpha, 7, 1)?;
        Ok(alpha.wedge(&self.phi0)?.hodge())
    }

    /// `*₇(e^k ∧ φ₀)` for `k = 1..7`.
    pub fn lambda37_basis(&self) -> Vec<Form> {
        (0..7)
            .map(|k| self.lambda37_element(&Form::basis_covector(7, k)).unwrap())
            .collect()
    }

    /// `β ↦ *₇(β ∧ φ₀)`, identifying Λ³₇ with covectors. Kills the other
    /// components of Λ³.
    pub fn lambda37_iso(&self, beta: &Form) -> Result<Form> {
        expect_signature(beta, 7, 3)?;
        Ok(beta.wedge(&self.phi0)?.hodge())
    }

    /// `α ↦ −¼ *₇(α ∧ φ₀)`, the inverse of [`G2Model::lambda37_iso`] on Λ³₇.
    pub fn lambda37_iso_inv(&self, alpha: &Form) -> Result<Form> {
        Ok(self.lambda37_element(alpha)?.scale(&q(-1, 4)))
    }

    pub fn split_bilinear(&self, b: &Bilinear2Tensor) -> Result<BilinearSplit> {
        if b.dim() != 7 {
            return Err(Error::DimensionMismatch {
                left: b.dim(),
                right: 7,
            });
        }
        Ok(b.split())
    }
}

#[derive(Debug, Clone)]
pub struct Spin7Model {
    psi0: Form,
    lambda3_8: Vec<Form>,
}

impl Default for Spin7Model {
    fn default() -> Self {
        Spin7Model::new()
    }
}

impl Spin7Model {
    /// Builds `ψ₀ = e⁰ ∧ φ₀ + *₇φ₀` and checks it against [`PSI0_TERMS`].
    pub fn new() -> Spin7Model {
        let g2 = G2Model::standard();
        let phi = g2.phi0().relabel_into(8).unwrap();
        let star_phi = g2.star_phi0().relabel_into(8).unwrap();
        let psi0 = Form::basis_covector(8, 0)
            .wedge(&phi)
            .unwrap()
            .add(&star_phi)
            .unwrap();
        assert_eq!(psi0, form_from_table(8, PSI0_TERMS), "psi0 construction");
        let lambda3_8 = (0..8)
            .map(|k| psi0.wedge(&Form::basis_covector(8, k)).unwrap().hodge())
            .collect();
        Spin7Model { psi0, lambda3_8 }
    }

    pub fn standard() -> &'static Spin7Model {
        static MODEL: OnceLock<Spin7Model> = OnceLock::new();
        MODEL.get_or_init(Spin7Model::new)
    }

    pub fn psi0(&self) -> &Form {
        &self.psi0
    }

    /// `α₀ = i_{e₀}ψ₀ ∧ e¹ − i_{e₁}ψ₀ ∧ e⁰`, a Λ⁴₇ element.
    pub fn alpha0(&self) -> Form {
        let e0 = Form::basis_covector(8, 0);
        let e1 = Form::basis_covector(8, 1);
        let a = self.psi0.contract(&e0).unwrap().wedge(&e1).unwrap();
        let b = self.psi0.contract(&e1).unwrap().wedge(&e0).unwrap();
        a.sub(&b).unwrap()
    }

    /// `J(α) = *₈(ψ₀ ∧ α)`, spanning Λ³₈.
    pub fn lambda3_8_element(&self, alpha: &Form) -> Result<Form> {
        expect_signature(alpha, 8, 1)?;
        Ok(self.psi0.wedge(alpha)?.hodge())
    }

    /// `J(e^k)` for `k = 0..7`.
    pub fn lambda3_8_basis(&self) -> &[Form] {
        &self.lambda3_8
    }

    /// A basis of `{β ∈ Λ³ : β ∧ ψ₀ = 0}`.
    pub fn lambda3_48_basis(&self) -> Vec<Form> {
        let columns: Vec<Vec<Rational>> = Form::basis(8, 3)
            .unwrap()
            .iter()
            .map(|b| b.wedge(&self.psi0).unwrap().to_vector())
            .collect();
        RationalMatrix::from_columns(8, &columns)
            .unwrap()
            .kernel_basis()
            .iter()
            .map(|v| Form::from_vector(8, 3, v).unwrap())
            .collect()
    }

    /// `(dim Λ³₈, dim Λ³₄₈)` by exact rank.
    pub fn lambda3_dims(&self) -> (usize, usize) {
        let span: Vec<Vec<Rational>> = self.lambda3_8.iter().map(Form::to_vector).collect();
        let rank8 = RationalMatrix::from_columns(56, &span).unwrap().rank();
        (rank8, self.lambda3_48_basis().len())
    }

    /// Orthogonal split of a 3-form into `Λ³₈ ⊕ Λ³₄₈`.
    pub fn lambda3_split8(&self, beta: &Form) -> Result<(Form, Form)> {
        expect_signature(beta, 8, 3)?;
        let span: Vec<Vec<Rational>> = self.lambda3_8.iter().map(Form::to_vector).collect();
        // unit blades are orthonormal for form_inner, so the coordinate dot
        // product is form_inner
        let proj = linalg::orthogonal_project(&beta.to_vector(), &span, linalg::dot)?;
        let beta8 = Form::from_vector(8, 3, &proj)?;
        let beta48 = beta.sub(&beta8)?;
        Ok((beta8, beta48))
    }

    /// The covector `X` with `J(X) = β₈` for the Λ³₈ part of `β`, using
    /// `⟨J(eⁱ), J(eʲ)⟩ = 7δᵢⱼ`.
    pub fn lambda3_8_coordinate(&self, beta: &Form) -> Result<Form> {
        expect_signature(beta, 8, 3)?;
        let coords: Vec<Rational> = self
            .lambda3_8
            .iter()
            .map(|j| Ok(j.inner(beta)? / qi(7)))
            .collect::<Result<_>>()?;
        Form::from_vector(8, 1, &coords)
    }

    /// The 28 generators `eⁱ∧i_{e_j}ψ₀ − eʲ∧i_{e_i}ψ₀`, `i < j`.
    pub fn lambda47_generators(&self) -> Vec<Form> {
        lambda47_generators(&self.psi0).unwrap()
    }

    pub fn lambda47_basis(&self) -> Vec<Form> {
        lambda47_basis(&self.psi0).unwrap()
    }
}

/// `X ∧ i_Y ψ − Y ∧ i_X ψ`.
pub fn lambda47_generator(psi: &Form, x: &Form, y: &Form) -> Result<Form> {
    x.wedge(&psi.contract(y)?)?
        .sub(&y.wedge(&psi.contract(x)?)?)
}

fn lambda47_generators(psi: &Form) -> Result<Vec<Form>> {
    expect_signature(psi, 8, 4)?;
    let mut out = Vec::with_capacity(28);
    for i in 0..8 {
        for j in i + 1..8 {
            out.push(lambda47_generator(
                psi,
                &Form::basis_covector(8, i),
                &Form::basis_covector(8, j),
            )?);
        }
    }
    Ok(out)
}

/// A linearly independent spanning set of Λ⁴₇, taken greedily from the 28
/// generators in order.
pub fn lambda47_basis(psi: &Form) -> Result<Vec<Form>> {
    let mut basis: Vec<Form> = Vec::new();
    let mut columns: Vec<Vec<Rational>> = Vec::new();
    for g in lambda47_generators(psi)? {
        columns.push(g.to_vector());
        if RationalMatrix::from_columns(70, &columns)?.rank() == columns.len() {
            basis.push(g);
        } else {
            columns.pop();
        }
    }
    Ok(basis)
}

/// An element of T*⊗T*, `entries[i][j] = B(e_i, e_j)` by position.
#[derive(Clone, PartialEq, Eq)]
pub struct Bilinear2Tensor {
    dim: usize,
    entries: Vec<Rational>,
}

impl Bilinear2Tensor {
    pub fn zeros(dim: usize) -> Bilinear2Tensor {
        Bilinear2Tensor {
            dim,
            entries: vec![Rational::zero(); dim * dim],
        }
    }

    /// The metric `g = Σ eᵏ⊗eᵏ`.
    pub fn metric(dim: usize) -> Bilinear2Tensor {
        let mut g = Self::zeros(dim);
        for i in 0..dim {
            g.set(i, i, Rational::one());
        }
        g
    }

    /// `a ⊗ b` for covectors `a`, `b`.
    pub fn outer(a: &Form, b: &Form) -> Result<Bilinear2Tensor> {
        expect_signature(a, a.dim(), 1)?;
        expect_signature(b, a.dim(), 1)?;
        let (va, vb) = (a.to_vector(), b.to_vector());
        let dim = a.dim();
        let mut t = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                t.set(i, j, &va[i] * &vb[j]);
            }
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Bilinear2Tensor {
        let mut t = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn add(&self, other: &Bilinear2Tensor) -> Result<Bilinear2Tensor> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(Bilinear2Tensor {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Bilinear2Tensor {
        Bilinear2Tensor {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn to_vector(&self) -> Vec<Rational> {
        self.entries.clone()
    }

    /// Skew part as a 2-form with coefficient `B_ij − B_ji` on `e^{ij}`
    /// (so `Σ eᵏ⊗γ_k ↦ Σ eᵏ∧γ_k`), traceless symmetric part, and trace
    /// coefficient `tr B / n`.
    pub fn split(&self) -> BilinearSplit {
        let n = self.dim;
        let mut skew = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                skew.push(self.get(i, j) - self.get(j, i));
            }
        }
        let trace_part = self.trace() / qi(n as i64);
        let mut sym0 = self.add(&self.transpose()).unwrap().scale(&q(1, 2));
        for i in 0..n {
            let v = sym0.get(i, i) - &trace_part;
            sym0.set(i, i, v);
        }
        BilinearSplit {
            skew: Form::from_vector(n, 2, &skew).unwrap(),
            sym0,
            trace_part,
        }
    }

    fn labelled_terms(&self) -> Vec<(String, Rational)> {
        let base = crate::multivector::index_base(self.dim);
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let c = self.get(i, j);
                if !c.is_zero() {
                    out.push((format!("e{}⊗e{}", i + base, j + base), c.clone()));
                }
            }
        }
        out
    }

    pub fn factored(&self) -> String {
        render_factored(&self.labelled_terms())
    }
}

impl fmt::Display for Bilinear2Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.labelled_terms();
        f.write_str(&render_terms(terms.iter().map(|(l, c)| (l.clone(), c))))
    }
}

impl fmt::Debug for Bilinear2Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bilinear2Tensor<{}>({})", self.dim, self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearSplit {
    pub skew: Form,
    pub sym0: Bilinear2Tensor,
    pub trace_part: Rational,
}

impl BilinearSplit {
    /// Inverse of [`Bilinear2Tensor::split`].
    pub fn recompose(&self) -> Bilinear2Tensor {
        let n = self.sym0.dim();
        let mut b = self
            .sym0
            .add(&Bilinear2Tensor::metric(n).scale(&self.trace_part))
            .unwrap();
        for (blade, c) in self.skew.terms() {
            let mut p = blade.positions();
            let (i, j) = (p.next().unwrap(), p.next().unwrap());
            let half = c * q(1, 2);
            let (bij, bji) = (b.get(i, j) + &half, b.get(j, i) - &half);
            b.set(i, j, bij);
            b.set(j, i, bji);
        }
        b
    }
}

/// Blades of `Λ^degree(ℝ^dim)` with labels, for building readable output.
pub fn blade_labels(dim: usize, degree: usize) -> Vec<String> {
    basis_blades(dim, degree)
        .into_iter()
        .map(|b| crate::multivector::display::blade_label(dim, b))
        .collect()
}
