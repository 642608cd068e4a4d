//! (P∘T₄)(e⁰⊗α₀) on ℝ⁸ and why it has both a Λ³₈ and a Λ³₄₈ part.
//!
//! ```text
//! cargo run --example spin7_lemma
//! ```

use ckforms::ck::{self, CotangentValuedForm};
use ckforms::linalg::{qi, RationalMatrix};
use ckforms::multivector::Form;
use ckforms::structures::Spin7Model;
use ckforms::Result;

pub struct Spin7Lemma {
    pub alpha0: Form,
    pub p_alpha0: Form,
    /// `5·(P∘T₄)(η₀)`
    pub fin: Form,
    pub fin_wedge_psi: Form,
    /// Whether `fin = i_X ψ₀` has a solution X.
    pub is_contraction: bool,
    pub p8: Form,
    pub p48: Form,
}

pub fn run() -> Result<Spin7Lemma> {
    let s7 = Spin7Model::standard();
    let e0 = Form::covector(8, 0)?;
    let alpha0 = s7.alpha0();
    let t4 = ck::t4(&CotangentValuedForm::decomposable(&e0, &alpha0)?)?;
    let fin = ck::big_p_map(s7, &t4)?.scale(&qi(5));

    let columns = (0..8)
        .map(|j| Ok(s7.psi0().contract(&Form::covector(8, j)?)?.to_vector()))
        .collect::<Result<Vec<_>>>()?;
    let is_contraction = RationalMatrix::from_columns(56, &columns)?
        .solve(&fin.to_vector())?
        .is_some();
    let (p8, p48) = ck::p8_p48(s7, &t4)?;

    Ok(Spin7Lemma {
        p_alpha0: ck::p_map(s7, &alpha0)?,
        fin_wedge_psi: fin.wedge(s7.psi0())?,
        alpha0,
        fin,
        is_contraction,
        p8,
        p48,
    })
}

#[allow(dead_code)]
fn main() -> Result<()> {
    let r = run()?;
    println!("alpha0          = {}", r.alpha0);
    println!("p(alpha0)       = {}", r.p_alpha0.factored());
    println!("5 (P o T4)(eta) = {}", r.fin);
    println!("  ^ psi0        = {}", r.fin_wedge_psi);
    println!("  = i_X psi0?   {}", if r.is_contraction { "yes" } else { "no" });
    println!("  Lambda3_8     = {}", r.p8.factored());
    println!("  Lambda3_48    = {}", r.p48.factored());
    Ok(())
}
