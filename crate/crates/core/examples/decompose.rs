//! Irreducible splittings Λ² = Λ²₇ ⊕ Λ²₁₄ (G₂) and Λ³ = Λ³₈ ⊕ Λ³₄₈ (Spin₇).
//!
//! ```text
//! cargo run --example decompose
//! ```

use ckforms::expr::parse;
use ckforms::multivector::Form;
use ckforms::structures::{G2Model, Spin7Model};
use ckforms::Result;

pub struct Splits {
    pub e12: (Form, Form),
    pub e012: (Form, Form),
    /// X with the Λ³₈ part of e012 equal to `*(ψ₀∧X)`.
    pub e012_coordinate: Form,
}

pub fn run() -> Result<Splits> {
    let g2 = G2Model::standard();
    let s7 = Spin7Model::standard();
    let e012 = s7.lambda3_split8(&parse("e012")?)?;
    Ok(Splits {
        e12: g2.lambda2_split(&parse("e12")?)?,
        e012_coordinate: s7.lambda3_8_coordinate(&e012.0)?,
        e012,
    })
}

#[allow(dead_code)]
fn main() -> Result<()> {
    let g2 = G2Model::standard();
    let s7 = Spin7Model::standard();
    let r = run()?;
    println!("dims Lambda2_7, Lambda2_14 = {:?}", g2.lambda2_dims());
    println!("e12  -> {}  +  {}", r.e12.0.factored(), r.e12.1.factored());
    println!("dims Lambda3_8, Lambda3_48 = {:?}", s7.lambda3_dims());
    println!("e012 -> {}  +  {}", r.e012.0.factored(), r.e012.1.factored());
    println!("       Lambda3_8 part is *(psi0 ^ {})", r.e012_coordinate.factored());
    Ok(())
}
