//! One line per acceptance criterion. Runs without the libtest harness so
//! the lines are always printed; exits nonzero if any criterion fails.

use std::process::Command;
use std::sync::OnceLock;

use ckforms::ck::{self, CotangentValuedForm};
use ckforms::expr::{parse_form, ParseContext};
use ckforms::linalg::{q, Rational, RationalMatrix};
use ckforms::multivector::Form;
use ckforms::structures::{G2Model, Spin7Model};
use ckforms::verify::{self, Verdict, VerificationReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report() -> &'static VerificationReport {
    static R: OnceLock<VerificationReport> = OnceLock::new();
    R.get_or_init(|| verify::run_all(verify::DEFAULT_SEED))
}

/// True when every check whose id starts with one of `prefixes` matches,
/// and there is at least one per prefix.
fn all_match(prefixes: &[&str]) -> Result<(), String> {
    for p in prefixes {
        let checks: Vec<_> = report().checks.iter().filter(|c| c.id.starts_with(p)).collect();
        if checks.is_empty() {
            return Err(format!("no check with prefix {p}"));
        }
        for c in checks {
            if c.verdict == Verdict::Mismatch {
                return Err(format!("{} expected {} computed {}", c.id, c.expected, c.computed));
            }
        }
    }
    Ok(())
}

fn criterion_1() -> Result<(), String> {
    all_match(&[
        "g2.a.", "g2.b.", "g2.c.", "g2.d.", "g2.e.", "g2.f.", "g2.g.", "g2.h.",
    ])
}

fn criterion_2() -> Result<(), String> {
    let g2 = G2Model::standard();
    let a = ck::analyze_t3(g2);
    if (a.domain_dim, a.rank, a.kernel.len()) != (49, 48, 1) {
        return Err(format!("domain {} rank {} kernel {}", a.domain_dim, a.rank, a.kernel.len()));
    }
    // Σ eᵏ⊗*(eᵏ∧φ₀) in the domain basis eⁱ⊗*(eʲ∧φ₀) is the identity pattern.
    let want: Vec<Rational> = (0..49).map(|j| if j % 8 == 0 { q(1, 1) } else { q(0, 1) }).collect();
    if a.kernel[0] != want {
        return Err("kernel generator differs from the nearly parallel line".into());
    }
    if a.kernel_elements[0] != ck::nearly_parallel_generator(g2) {
        return Err("kernel element differs".into());
    }
    all_match(&["g2.i."])
}

fn criterion_3() -> Result<(), String> {
    all_match(&[
        "spin7.a.", "spin7.b.", "spin7.c.", "spin7.d.", "spin7.e.", "spin7.f.", "spin7.g.", "spin7.h.",
    ])?;
    // independent inconsistency test: [i_{e_j}ψ₀ | fin] has larger rank
    let s7 = Spin7Model::standard();
    let fin = parse_form("-24(e023+e045+e067) + 12(e247-e357+e256+e346)", ParseContext::dim(8)).unwrap();
    let mut cols: Vec<Vec<Rational>> = (0..8)
        .map(|j| s7.psi0().contract(&Form::basis_covector(8, j)).unwrap().to_vector())
        .collect();
    let r0 = RationalMatrix::from_columns(56, &cols).unwrap().rank();
    cols.push(fin.to_vector());
    let r1 = RationalMatrix::from_columns(56, &cols).unwrap().rank();
    if r1 != r0 + 1 {
        return Err("fin lies in the span of i_X psi0".into());
    }
    let eta = CotangentValuedForm::decomposable(&Form::basis_covector(8, 0), &s7.alpha0()).unwrap();
    let (_, p48) = ck::p8_p48(s7, &ck::t4(&eta).unwrap()).unwrap();
    if p48.is_zero() {
        return Err("P48 o T4 vanishes".into());
    }
    Ok(())
}

fn criterion_4() -> Result<(), String> {
    let a = ck::analyze_t4(Spin7Model::standard());
    if (a.domain_dim, a.rank) != (56, 56) || !a.kernel.is_empty() {
        return Err(format!("domain {} rank {}", a.domain_dim, a.rank));
    }
    all_match(&["spin7.i."])
}

fn criterion_5() -> Result<(), String> {
    all_match(&[
        "axioms.hodge-involution.dim7",
        "axioms.hodge-involution.dim8",
        "axioms.wedge-graded-commutative",
        "axioms.interior-antiderivation",
        "axioms.euler-identity.dim7",
        "axioms.euler-identity.dim8",
        "axioms.lambda2-eigen",
        "axioms.lambda2-dims",
        "axioms.lambda3-dims",
    ])?;
    for id in ["axioms.wedge-graded-commutative", "axioms.interior-antiderivation"] {
        let c = report().check(id).unwrap();
        let n: usize = c
            .computed
            .split_whitespace()
            .find_map(|w| w.parse().ok())
            .ok_or_else(|| format!("{id}: no case count in {:?}", c.computed))?;
        if n < 1000 {
            return Err(format!("{id}: only {n} cases"));
        }
    }
    let (g2, s7) = (G2Model::standard(), Spin7Model::standard());
    if g2.lambda2_dims() != (7, 14) || s7.lambda3_dims() != (8, 48) {
        return Err("irreducible dimensions".into());
    }
    Ok(())
}

fn criterion_6() -> Result<(), String> {
    all_match(&[
        "g2.star-phi0",
        "spin7.a.psi0",
        "axioms.inner-contraction-rank",
        "axioms.extinsa-rank",
    ])
}

fn criterion_7() -> Result<(), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ckforms"))
        .args(["verify", "--suite", "all", "--format", "json"])
        .env_remove("CKFORMS_SEED")
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.code() != Some(0) {
        return Err(format!("exit status {:?}", out.status.code()));
    }
    let instance: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let schema: serde_json::Value =
        serde_json::from_str(include_str!("report.schema.json")).map_err(|e| e.to_string())?;
    let validator = jsonschema::JSONSchema::compile(&schema).map_err(|e| e.to_string())?;
    if let Err(errors) = validator.validate(&instance) {
        let msgs: Vec<String> = errors.map(|e| e.to_string()).collect();
        return Err(msgs.join("; "));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(verify::DEFAULT_SEED);
    for _ in 0..200 {
        let (dim, expr) = random_expression(&mut rng);
        let dim = dim.to_string();
        let first = eval(&[&expr, "--dim", &dim])?;
        let second = eval(&[&first, "--dim", &dim])?;
        if first != second {
            return Err(format!("{expr}: {first} re-evaluates to {second}"));
        }
    }
    Ok(())
}

fn random_expression(rng: &mut ChaCha8Rng) -> (usize, String) {
    let dim = if rng.random_bool(0.5) { 7 } else { 8 };
    let degree = rng.random_range(1..=4);
    let labels: Vec<usize> = if dim == 7 { (1..=7).collect() } else { (0..=7).collect() };
    let mut text = String::new();
    for t in 0..rng.random_range(1..=4) {
        let mut pool = labels.clone();
        let mut blade = String::new();
        for _ in 0..degree {
            let i = rng.random_range(0..pool.len());
            blade.push_str(&pool.swap_remove(i).to_string());
        }
        let (n, d) = (rng.random_range(-9i64..=9), rng.random_range(1i64..=6));
        let sign = if n < 0 { "-" } else if t > 0 { "+" } else { "" };
        text.push_str(&format!("{sign} {}/{d}*e{blade} ", n.abs()));
    }
    (dim, text.trim().to_string())
}

fn eval(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ckforms"))
        .arg("eval")
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.code() != Some(0) {
        return Err(format!("eval {args:?}: {}", String::from_utf8_lossy(&out.stderr)));
    }
    Ok(String::from_utf8_lossy(&out.stdout).trim_end().to_string())
}

fn main() {
    let criteria: [(&str, fn() -> Result<(), String>); 7] = [
        ("G2 golden values", criterion_1),
        ("G2 kernel theorem", criterion_2),
        ("Spin7 golden values", criterion_3),
        ("Spin7 injectivity", criterion_4),
        ("axiom suite", criterion_5),
        ("structural cross-checks", criterion_6),
        ("CLI contract", criterion_7),
    ];
    let mut failed = Vec::new();
    for (n, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(()) => println!("PASS criterion {}: {name}", n + 1),
            Err(why) => {
                println!("FAIL criterion {}: {name}: {why}", n + 1);
                failed.push(n + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
