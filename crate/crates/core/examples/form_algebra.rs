//! Parsing, wedge, interior product and Hodge star on ℝ⁷ and ℝ⁸.
//!
//! ```text
//! cargo run --example form_algebra
//! ```

use ckforms::expr::parse;
use ckforms::multivector::Form;
use ckforms::Result;

pub struct Tour {
    pub star_e123: Form,
    pub phi_wedge_phi: Form,
    pub star_e2_phi: Form,
    pub psi_squared: Form,
    pub i_e0_psi: Form,
}

pub fn run() -> Result<Tour> {
    let phi = parse("phi0")?;
    let psi = parse("psi0")?;
    Ok(Tour {
        star_e123: parse("e123")?.hodge(),
        phi_wedge_phi: phi.wedge(&phi)?,
        star_e2_phi: parse("e2")?.wedge(&phi)?.hodge(),
        psi_squared: psi.wedge(&psi)?,
        i_e0_psi: psi.contract(&parse("e0")?)?,
    })
}

#[allow(dead_code)]
fn main() -> Result<()> {
    let t = run()?;
    println!("*e123           = {}", t.star_e123);
    println!("phi0 ^ phi0     = {}", t.phi_wedge_phi);
    println!("*(e2 ^ phi0)    = {}", t.star_e2_phi.factored());
    println!("psi0 ^ psi0     = {}", t.psi_squared);
    println!("i_e0 psi0       = {}", t.i_e0_psi);
    Ok(())
}
