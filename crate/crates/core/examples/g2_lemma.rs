//! T₃ on η = e¹⊗*(e²∧φ₀) and its Λ² and S²₀ projections.
//!
//! ```text
//! cargo run --example g2_lemma
//! ```

use ckforms::ck::{self, CotangentValuedForm};
use ckforms::multivector::Form;
use ckforms::structures::{Bilinear2Tensor, G2Model};
use ckforms::Result;

pub struct G2Lemma {
    pub eta: CotangentValuedForm,
    pub t3_eta: CotangentValuedForm,
    pub pr_lambda2: Form,
    pub pr_sym0: Bilinear2Tensor,
    pub lambda2_7: Form,
    pub lambda2_14: Form,
    pub wedge_phi: Form,
    pub star: Form,
}

pub fn run() -> Result<G2Lemma> {
    let g2 = G2Model::standard();
    let eta = CotangentValuedForm::decomposable(
        &Form::covector(7, 1)?,
        &g2.lambda37_element(&Form::covector(7, 2)?)?,
    )?;
    let t3_eta = ck::t3(&eta)?;
    let pr_lambda2 = ck::pr_lambda2(g2, &t3_eta)?;
    let (lambda2_7, lambda2_14) = g2.lambda2_split(&pr_lambda2)?;
    Ok(G2Lemma {
        pr_sym0: ck::pr_sym0(g2, &t3_eta)?,
        wedge_phi: pr_lambda2.wedge(g2.phi0())?,
        star: pr_lambda2.hodge(),
        eta,
        t3_eta,
        pr_lambda2,
        lambda2_7,
        lambda2_14,
    })
}

#[allow(dead_code)]
fn main() -> Result<()> {
    let r = run()?;
    println!("eta             = {}", r.eta);
    println!("T3(eta)         = {}", r.t3_eta);
    println!("pr_Lambda2      = {}", r.pr_lambda2.factored());
    println!("  Lambda2_7     = {}", r.lambda2_7.factored());
    println!("  Lambda2_14    = {}", r.lambda2_14.factored());
    println!("pr_S2_0         = {}", r.pr_sym0.factored());
    println!("pr_Lambda2^phi0 = {}", r.wedge_phi.factored());
    println!("*pr_Lambda2     = {}", r.star.factored());
    Ok(())
}
