//! Exact rank and kernel of T₃ on T*⊗Λ³₇ and T₄ on T*⊗Λ⁴₇.
//!
//! ```text
//! cargo run --example kernel_rank
//! ```

use ckforms::ck::{self, KernelAnalysis};
use ckforms::structures::{G2Model, Spin7Model};

pub fn run() -> (KernelAnalysis, KernelAnalysis) {
    (
        ck::analyze_t3(G2Model::standard()),
        ck::analyze_t4(Spin7Model::standard()),
    )
}

#[allow(dead_code)]
fn main() {
    let (t3, t4) = run();
    println!("T3: rank {} of {}, kernel dimension {}", t3.rank, t3.domain_dim, t3.kernel.len());
    for k in &t3.kernel_elements {
        println!("  kernel spanned by {k}");
    }
    println!("T4: rank {} of {}, kernel dimension {}", t4.rank, t4.domain_dim, t4.kernel.len());
}
