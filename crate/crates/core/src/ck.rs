//! Algebraic conformal-Killing operators and the component maps used to
//! show they are injective (or vanish) on each irreducible piece.
//!
//! An element `A = Σ eᵏ ⊗ A_k` of T*⊗Λᵖ is stored by its components
//! `A_k = A(e_k)`. The residual operator is
//!
//! ```text
//! T(A)(X) = A(X) − 1/(p+1) · i_X(Σ eᵏ∧A_k) − 1/(n−p+1) · X∧(Σ i_{e_k}A_k)
//! ```
//!
//! i.e. `A` minus its exterior-derivative and codifferential parts. `T₃` is
//! the case `(n, p) = (7, 3)` and `T₄` the case `(8, 4)`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, q, Rational, RationalMatrix};
use crate::multivector::Form;
use crate::structures::{Bilinear2Tensor, G2Model, Spin7Model};

#[derive(Clone, PartialEq, Eq)]
pub struct CotangentValuedForm {
    dim: usize,
    degree: usize,
    components: Vec<Form>,
}

impl CotangentValuedForm {
    pub fn zero(dim: usize, degree: usize) -> Result<Self> {
        let z = Form::zero(dim, degree)?;
        Ok(CotangentValuedForm {
            dim,
            degree,
            components: vec![z; dim],
        })
    }

    pub fn from_components(components: Vec<Form>) -> Result<Self> {
        let first = components
            .first()
            .ok_or_else(|| Error::Shape("no components".into()))?;
        let (dim, degree) = (first.dim(), first.degree());
        if components.len() != dim {
            return Err(Error::Shape(format!(
                "{} components in dimension {dim}",
                components.len()
            )));
        }
        for c in &components {
            if c.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: c.dim(),
                });
            }
            if c.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: c.degree(),
                });
            }
        }
        Ok(CotangentValuedForm {
            dim,
            degree,
            components,
        })
    }

    /// `γ ⊗ β`, whose component along `e_k` is `γ(e_k)·β`.
    pub fn decomposable(gamma: &Form, beta: &Form) -> Result<Self> {
        if gamma.degree() != 1 {
            return Err(Error::WrongSignature {
                expected: "a covector".into(),
                found: format!("a {}-form", gamma.degree()),
            });
        }
        if gamma.dim() != beta.dim() {
            return Err(Error::DimensionMismatch {
                left: gamma.dim(),
                right: beta.dim(),
            });
        }
        let coords = gamma.to_vector();
        Self::from_components(coords.iter().map(|c| beta.scale(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn components(&self) -> &[Form] {
        &self.components
    }

    /// `A(e_k)`, by position.
    pub fn component(&self, k: usize) -> &Form {
        &self.components[k]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Form::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Self::from_components(components)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CotangentValuedForm {
            components: self.components.iter().map(|f| f.scale(c)).collect(),
            ..self.clone()
        }
    }

    pub fn sum<'a, I>(dim: usize, degree: usize, items: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a CotangentValuedForm>,
    {
        items
            .into_iter()
            .try_fold(Self::zero(dim, degree)?, |acc, x| acc.add(x))
    }

    /// Concatenated blade coordinates of the components.
    pub fn to_vector(&self) -> Vec<Rational> {
        self.components.iter().flat_map(Form::to_vector).collect()
    }

    /// Skew-symmetrization `Σ eᵏ ∧ A_k`.
    pub fn skew_symmetrize(&self) -> Result<Form> {
        let terms = (0..self.dim)
            .map(|k| Form::basis_covector(self.dim, k).wedge(&self.components[k]))
            .collect::<Result<Vec<_>>>()?;
        let degree = (self.degree + 1).min(self.dim);
        Form::sum(self.dim, degree, &terms)
    }

    /// Natural contraction `Σ i_{e_k} A_k`; on `X ⊗ α` this is `i_X α`.
    pub fn contraction(&self) -> Result<Form> {
        if self.degree == 0 {
            return Err(Error::DegreeOutOfRange {
                degree: 0,
                context: "contraction",
            });
        }
        let terms = (0..self.dim)
            .map(|k| self.components[k].contract(&Form::basis_covector(self.dim, k)))
            .collect::<Result<Vec<_>>>()?;
        Form::sum(self.dim, self.degree - 1, &terms)
    }
}

impl fmt::Display for CotangentValuedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = crate::multivector::index_base(self.dim);
        let mut first = true;
        for (k, c) in self.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "e{}⊗({})", k + base, c.factored())?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CotangentValuedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CotangentValuedForm<{},{}>({})",
            self.dim, self.degree, self
        )
    }
}

fn expect(a: &CotangentValuedForm, dim: usize, degree: usize) -> Result<()> {
    if a.dim != dim || a.degree != degree {
        return Err(Error::WrongSignature {
            expected: format!("an element of T*⊗Λ^{degree}(R^{dim})"),
            found: format!("an element of T*⊗Λ^{}(R^{})", a.degree, a.dim),
        });
    }
    Ok(())
}

/// Generic conformal-Killing residual on T*⊗Λᵖ, `1 ≤ p ≤ n`.
pub fn ck_residual(a: &CotangentValuedForm) -> Result<CotangentValuedForm> {
    let (n, p) = (a.dim, a.degree);
    if p == 0 || p > n {
        return Err(Error::DegreeOutOfRange {
            degree: p,
            context: "conformal-Killing residual",
        });
    }
    let exterior = a.skew_symmetrize()?;
    let codiff = a.contraction()?;
    let c_ext = q(1, (p + 1) as i64);
    let c_co = q(1, (n - p + 1) as i64);
    let components = (0..n)
        .map(|k| {
            let x = Form::basis_covector(n, k);
            let ext_part = if p < n {
                exterior.contract(&x)?.scale(&c_ext)
            } else {
                Form::zero(n, p)?
            };
            let co_part = x.wedge(&codiff)?.scale(&c_co);
            a.components[k].sub(&ext_part)?.sub(&co_part)
        })
        .collect::<Result<_>>()?;
    CotangentValuedForm::from_components(components)
}

/// `T₃` on T*⊗Λ³(ℝ⁷).
pub fn t3(a: &CotangentValuedForm) -> Result<CotangentValuedForm> {
    expect(a, 7, 3)?;
    ck_residual(a)
}

/// `T₄` on T*⊗Λ⁴(ℝ⁸).
pub fn t4(a: &CotangentValuedForm) -> Result<CotangentValuedForm> {
    expect(a, 8, 4)?;
    ck_residual(a)
}

/// Coefficient of `g` in the trivial component: `Σ_k *₇(eᵏ ∧ A_k ∧ φ₀)`.
pub fn pr_rphi(g2: &G2Model, a: &CotangentValuedForm) -> Result<Rational> {
    expect(a, 7, 3)?;
    a.skew_symmetrize()?
        .wedge(g2.phi0())?
        .hodge()
        .scalar_value()
}

/// `α⊗β ↦ α ⊗ *₇(β∧φ₀)`: `B(e_i, e_j)` is the `eʲ` coefficient of
/// `*₇(A_i ∧ φ₀)`.
pub fn extinsa_map(g2: &G2Model, a: &CotangentValuedForm) -> Result<Bilinear2Tensor> {
    expect(a, 7, 3)?;
    let mut b = Bilinear2Tensor::zeros(7);
    for (i, component) in a.components.iter().enumerate() {
        let row = g2.lambda37_iso(component)?.to_vector();
        for (j, x) in row.into_iter().enumerate() {
            b.set(i, j, x);
        }
    }
    Ok(b)
}

/// Projection onto Λ² = Λ²₇ ⊕ Λ²₁₄ (skew part of [`extinsa_map`]).
pub fn pr_lambda2(g2: &G2Model, a: &CotangentValuedForm) -> Result<Form> {
    Ok(extinsa_map(g2, a)?.split().skew)
}

/// Projection onto traceless symmetric tensors.
pub fn pr_sym0(g2: &G2Model, a: &CotangentValuedForm) -> Result<Bilinear2Tensor> {
    Ok(extinsa_map(g2, a)?.split().sym0)
}

/// `p(β)(X,Y) = ⟨ψ₀, i_Xβ∧Y − i_Yβ∧X⟩` on 4-forms of ℝ⁸.
pub fn p_map(s7: &Spin7Model, beta: &Form) -> Result<Form> {
    if beta.dim() != 8 || beta.degree() != 4 {
        return Err(Error::WrongSignature {
            expected: "a 4-form on R^8".into(),
            found: format!("a {}-form on R^{}", beta.degree(), beta.dim()),
        });
    }
    let psi = s7.psi0();
    let contracted: Vec<Form> = (0..8)
        .map(|i| beta.contract(&Form::basis_covector(8, i)))
        .collect::<Result<_>>()?;
    let mut coords = Vec::with_capacity(28);
    for i in 0..8 {
        for j in i + 1..8 {
            let x = contracted[i].wedge(&Form::basis_covector(8, j))?;
            let y = contracted[j].wedge(&Form::basis_covector(8, i))?;
            coords.push(psi.inner(&x.sub(&y)?)?);
        }
    }
    Form::from_vector(8, 2, &coords)
}

/// `P(A) = Σ eᵏ ∧ p(A_k)`.
pub fn big_p_map(s7: &Spin7Model, a: &CotangentValuedForm) -> Result<Form> {
    expect(a, 8, 4)?;
    let p_components = a
        .components
        .iter()
        .map(|c| p_map(s7, c))
        .collect::<Result<Vec<_>>>()?;
    CotangentValuedForm::from_components(p_components)?.skew_symmetrize()
}

/// `(P₈(A), P₄₈(A))`.
pub fn p8_p48(s7: &Spin7Model, a: &CotangentValuedForm) -> Result<(Form, Form)> {
    s7.lambda3_split8(&big_p_map(s7, a)?)
}

/// `Σ eᵏ ⊗ *₇(eᵏ∧φ₀)`, spanning the trivial summand of T*⊗Λ³₇.
pub fn nearly_parallel_generator(g2: &G2Model) -> CotangentValuedForm {
    CotangentValuedForm::from_components(g2.lambda37_basis()).unwrap()
}

/// The 49 tensors `eⁱ ⊗ *₇(eʲ∧φ₀)` spanning T*⊗Λ³₇, `i` outer, `j` inner.
pub fn g2_domain_basis(g2: &G2Model) -> Vec<CotangentValuedForm> {
    let l37 = g2.lambda37_basis();
    let mut out = Vec::with_capacity(49);
    for i in 0..7 {
        for b in &l37 {
            out.push(CotangentValuedForm::decomposable(&Form::basis_covector(7, i), b).unwrap());
        }
    }
    out
}

/// The 56 tensors `eⁱ ⊗ a_j` spanning T*⊗Λ⁴₇, `a_j` from
/// [`Spin7Model::lambda47_basis`].
pub fn spin7_domain_basis(s7: &Spin7Model) -> Vec<CotangentValuedForm> {
    let l47 = s7.lambda47_basis();
    let mut out = Vec::with_capacity(56);
    for i in 0..8 {
        for b in &l47 {
            out.push(CotangentValuedForm::decomposable(&Form::basis_covector(8, i), b).unwrap());
        }
    }
    out
}

/// Matrix of a linear map in the given domain basis; column `j` holds the
/// coordinates of `f(domain[j])`.
pub fn operator_matrix<F>(domain: &[CotangentValuedForm], f: F) -> Result<RationalMatrix>
where
    F: Fn(&CotangentValuedForm) -> Result<Vec<Rational>>,
{
    let columns = domain.iter().map(&f).collect::<Result<Vec<_>>>()?;
    let rows = columns.first().map_or(0, Vec::len);
    RationalMatrix::from_columns(rows, &columns)
}

/// Rank and normalized kernel of an operator restricted to a domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelAnalysis {
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub rank: usize,
    /// Kernel vectors in domain coordinates, first nonzero entry 1.
    pub kernel: Vec<Vec<Rational>>,
    /// The same vectors as elements of T*⊗Λᵖ.
    pub kernel_elements: Vec<CotangentValuedForm>,
}

impl KernelAnalysis {
    pub fn of<F>(domain: &[CotangentValuedForm], f: F) -> Result<KernelAnalysis>
    where
        F: Fn(&CotangentValuedForm) -> Result<Vec<Rational>>,
    {
        let m = operator_matrix(domain, f)?;
        let kernel: Vec<Vec<Rational>> = m
            .kernel_basis()
            .iter()
            .map(|v| linalg::normalize_leading(v))
            .collect();
        let kernel_elements = kernel
            .iter()
            .map(|v| combine(domain, v))
            .collect::<Result<_>>()?;
        Ok(KernelAnalysis {
            domain_dim: m.cols(),
            codomain_dim: m.rows(),
            rank: m.rank(),
            kernel,
            kernel_elements,
        })
    }
}

/// `Σ coeffs[j] · domain[j]`.
pub fn combine(domain: &[CotangentValuedForm], coeffs: &[Rational]) -> Result<CotangentValuedForm> {
    let first = domain
        .first()
        .ok_or_else(|| Error::Shape("empty domain".into()))?;
    let mut acc = CotangentValuedForm::zero(first.dim, first.degree)?;
    for (x, c) in domain.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&x.scale(c))?;
        }
    }
    Ok(acc)
}

/// `T₃` restricted to T*⊗Λ³₇.
pub fn analyze_t3(g2: &G2Model) -> KernelAnalysis {
    KernelAnalysis::of(&g2_domain_basis(g2), |a| Ok(t3(a)?.to_vector())).unwrap()
}

/// `T₄` restricted to T*⊗Λ⁴₇.
pub fn analyze_t4(s7: &Spin7Model) -> KernelAnalysis {
    KernelAnalysis::of(&spin7_domain_basis(s7), |a| Ok(t4(a)?.to_vector())).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qi;

    fn e(dim: usize, labels: &[usize]) -> Form {
        Form::blade(dim, labels).unwrap()
    }

    #[test]
    fn residual_on_simple_decomposable() {
        let a = CotangentValuedForm::decomposable(&e(7, &[1]), &e(7, &[2, 3, 4])).unwrap();
        let t = t3(&a).unwrap();
        assert_eq!(t.component(0), &e(7, &[2, 3, 4]).scale(&q(3, 4)));
    }

    #[test]
    fn residual_degree_errors() {
        let s = Form::scalar(7, qi(1)).unwrap();
        let a = CotangentValuedForm::decomposable(&e(7, &[1]), &s).unwrap();
        assert!(matches!(ck_residual(&a), Err(Error::DegreeOutOfRange { .. })));
        let b = CotangentValuedForm::zero(8, 3).unwrap();
        assert!(t3(&b).is_err() && t4(&b).is_err());
    }

    #[test]
    fn residual_top_degree_is_defined() {
        let a = CotangentValuedForm::decomposable(&e(3, &[1]), &e(3, &[1, 2, 3])).unwrap();
        let t = ck_residual(&a).unwrap();
        // T*⊗Λⁿ ≅ Λⁿ⁻¹, so everything is codifferential part
        assert!(t.is_zero());
    }

    #[test]
    fn t3_kills_nearly_parallel_generator() {
        let g2 = G2Model::standard();
        assert!(t3(&nearly_parallel_generator(g2)).unwrap().is_zero());
    }

    #[test]
    fn pr_rphi_values() {
        let g2 = G2Model::standard();
        assert_eq!(pr_rphi(g2, &nearly_parallel_generator(g2)).unwrap(), qi(-28));
        let a = CotangentValuedForm::decomposable(&e(7, &[1]), &e(7, &[2, 3, 4])).unwrap();
        let direct = e(7, &[1, 2, 3, 4]).wedge(g2.phi0()).unwrap().hodge().scalar_value().unwrap();
        assert_eq!(pr_rphi(g2, &a).unwrap(), direct);
    }

    #[test]
    fn extinsa_values() {
        let g2 = G2Model::standard();
        let eta = CotangentValuedForm::decomposable(
            &e(7, &[1]),
            &g2.lambda37_element(&e(7, &[2])).unwrap(),
        )
        .unwrap();
        let expected = Bilinear2Tensor::outer(&e(7, &[1]), &e(7, &[2])).unwrap().scale(&qi(-4));
        assert_eq!(extinsa_map(g2, &eta).unwrap(), expected);
        assert!(extinsa_map(g2, &CotangentValuedForm::zero(7, 3).unwrap()).unwrap().is_zero());
        assert_eq!(
            extinsa_map(g2, &nearly_parallel_generator(g2)).unwrap(),
            Bilinear2Tensor::metric(7).scale(&qi(-4))
        );
    }

    #[test]
    fn p_map_zero_and_signature() {
        let s7 = Spin7Model::standard();
        assert!(p_map(s7, &Form::zero(8, 4).unwrap()).unwrap().is_zero());
        assert!(p_map(s7, &e(8, &[0, 1, 2])).is_err());
        assert!(big_p_map(s7, &CotangentValuedForm::zero(8, 4).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn constructors_validate() {
        assert!(CotangentValuedForm::from_components(vec![]).is_err());
        assert!(CotangentValuedForm::from_components(vec![e(7, &[1]); 6]).is_err());
        let mut mixed = vec![e(7, &[1]); 7];
        mixed[3] = e(7, &[1, 2]);
        assert!(CotangentValuedForm::from_components(mixed).is_err());
        assert!(CotangentValuedForm::decomposable(&e(7, &[1, 2]), &e(7, &[3])).is_err());
    }

    #[test]
    fn display() {
        let a = CotangentValuedForm::decomposable(&e(7, &[2]), &e(7, &[1, 3]).scale(&qi(-2))).unwrap();
        assert_eq!(a.to_string(), "e2⊗(-2*e13)");
        assert_eq!(CotangentValuedForm::zero(7, 3).unwrap().to_string(), "0");
    }
}
