//! Replays the published computations as named checks.
//!
//! Every check compares an expected value, written the way it is printed in
//! the source material, with the value computed here in exact arithmetic.
//! Intermediate displays that disagree while every final value agrees are
//! reported as typo candidates instead of failures.

use std::fmt::Write as _;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::ck::{self, CotangentValuedForm};
use crate::error::Result;
use crate::expr::{parse_form, ParseContext};
use crate::linalg::{self, q, qi, Rational, RationalMatrix};
use crate::multivector::{basis_blades, Form};
use crate::structures::{Bilinear2Tensor, G2Model, Spin7Model};

/// Seed for sampled checks unless overridden.
pub const DEFAULT_SEED: u64 = 0x0c6b_f0e5;

/// Sample count for each randomized algebra law.
pub const SAMPLES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
    TypoCandidate,
}

/// Whether a check pins a final result or one display on the way to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Role {
    #[default]
    Final,
    Intermediate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub paper_location: String,
    pub expected: String,
    pub computed: String,
    pub verdict: Verdict,
    #[serde(skip)]
    pub role: Role,
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        location: impl Into<String>,
        expected: impl Into<String>,
        computed: impl Into<String>,
        equal: bool,
    ) -> Check {
        Check {
            id: id.into(),
            paper_location: location.into(),
            expected: expected.into(),
            computed: computed.into(),
            verdict: if equal { Verdict::Match } else { Verdict::Mismatch },
            role: Role::Final,
        }
    }

    pub fn intermediate(mut self) -> Check {
        self.role = Role::Intermediate;
        self
    }

    pub fn is_match(&self) -> bool {
        self.verdict == Verdict::Match
    }
}

/// Compares a computed form with its printed value, parsed in the computed
/// form's own dimension and degree.
pub fn form_check(id: &str, location: &str, expected: &str, computed: Result<Form>) -> Check {
    let computed = match computed {
        Ok(f) => f,
        Err(e) => return Check::new(id, location, expected, format!("error: {e}"), false),
    };
    let ctx = ParseContext::dim(computed.dim()).with_degree(computed.degree());
    let equal = parse_form(expected, ctx).is_ok_and(|f| f == computed);
    Check::new(id, location, expected, computed.factored(), equal)
}

/// Compares two printable values for exact equality.
pub fn value_check<T: ToString + PartialEq>(id: &str, location: &str, expected: T, computed: T) -> Check {
    let equal = expected == computed;
    Check::new(id, location, expected.to_string(), computed.to_string(), equal)
}

/// A universally quantified statement checked case by case. `outcome` is the
/// number of cases that held, or a description of the first failure.
pub fn property_check(
    id: &str,
    location: &str,
    statement: &str,
    cases: usize,
    outcome: std::result::Result<usize, String>,
) -> Check {
    let expected = format!("{statement}: holds on {cases} cases");
    let computed = match outcome {
        Ok(n) => format!("{statement}: holds on {n} cases"),
        Err(why) => format!("{statement}: fails, {why}"),
    };
    let equal = expected == computed;
    Check::new(id, location, expected, computed, equal)
}

fn nonzero_check(id: &str, location: &str, computed: std::result::Result<bool, String>) -> Check {
    let computed = match computed {
        Ok(true) => "non-zero".to_string(),
        Ok(false) => "zero".to_string(),
        Err(e) => e,
    };
    let equal = computed == "non-zero";
    Check::new(id, location, "non-zero", computed, equal)
}

fn forall<T, F>(items: &[T], f: F) -> std::result::Result<usize, String>
where
    F: Fn(&T) -> std::result::Result<(), String>,
{
    for it in items {
        f(it)?;
    }
    Ok(items.len())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err_str<E: std::fmt::Display>(e: E) -> String {
    format!("error: {e}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Overall {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    #[serde(rename = "match")]
    pub matched: usize,
    pub mismatch: usize,
    #[serde(rename = "typo-candidate")]
    pub typo_candidate: usize,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub summary: Summary,
    pub overall: Overall,
}

impl VerificationReport {
    /// Builds a report, downgrading mismatched intermediates to typo
    /// candidates when every final check matched.
    pub fn assemble(suite: &str, mut checks: Vec<Check>) -> VerificationReport {
        let finals_hold = checks
            .iter()
            .filter(|c| c.role == Role::Final)
            .all(|c| c.verdict != Verdict::Mismatch);
        if finals_hold {
            for c in &mut checks {
                if c.role == Role::Intermediate && c.verdict == Verdict::Mismatch {
                    c.verdict = Verdict::TypoCandidate;
                }
            }
        }
        Self::tally(suite, checks)
    }

    /// Concatenates already assembled reports.
    pub fn merge(suite: &str, reports: Vec<VerificationReport>) -> VerificationReport {
        let checks = reports.into_iter().flat_map(|r| r.checks).collect();
        Self::tally(suite, checks)
    }

    fn tally(suite: &str, checks: Vec<Check>) -> VerificationReport {
        let mut summary = Summary {
            total: checks.len(),
            ..Summary::default()
        };
        for c in &checks {
            match c.verdict {
                Verdict::Match => summary.matched += 1,
                Verdict::Mismatch => summary.mismatch += 1,
                Verdict::TypoCandidate => summary.typo_candidate += 1,
            }
        }
        let failed = checks
            .iter()
            .any(|c| c.role == Role::Final && c.verdict == Verdict::Mismatch);
        VerificationReport {
            suite: suite.to_string(),
            checks,
            summary,
            overall: if failed { Overall::Fail } else { Overall::Pass },
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Overall::Pass
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let id_width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(2);
        let mut s = String::new();
        let _ = writeln!(s, "suite: {}", self.suite);
        let _ = writeln!(s, "{:<14}  {:<id_width$}  EXPECTED  =>  COMPUTED", "VERDICT", "ID");
        for c in &self.checks {
            let verdict = match c.verdict {
                Verdict::Match => "match",
                Verdict::Mismatch => "MISMATCH",
                Verdict::TypoCandidate => "typo-candidate",
            };
            let _ = writeln!(
                s,
                "{verdict:<14}  {:<id_width$}  {}  =>  {}",
                c.id, c.expected, c.computed
            );
        }
        let Summary {
            matched,
            mismatch,
            typo_candidate,
            total,
        } = self.summary;
        let overall = if self.passed() { "pass" } else { "fail" };
        let _ = writeln!(
            s,
            "{total} checks: {matched} match, {mismatch} mismatch, {typo_candidate} typo-candidate; overall {overall}"
        );
        s
    }
}

type Task = Box<dyn Fn() -> Vec<Check> + Send + Sync>;

fn one<F: Fn() -> Check + Send + Sync + 'static>(f: F) -> Task {
    Box::new(move || vec![f()])
}

fn many<F: Fn() -> Vec<Check> + Send + Sync + 'static>(f: F) -> Task {
    Box::new(f)
}

/// Runs tasks in parallel; results keep the declared order.
fn run_tasks(tasks: Vec<Task>) -> Vec<Check> {
    let results: Vec<Vec<Check>> = tasks.par_iter().map(|t| t()).collect();
    results.into_iter().flatten().collect()
}

fn e7(label: usize) -> Form {
    Form::covector(7, label).unwrap()
}

fn e8(label: usize) -> Form {
    Form::covector(8, label).unwrap()
}

// ---------------------------------------------------------------- G₂

const G2_LEMMA: &str = "G2 lemma on T3(eta), eta = e1 (x) *(e2^phi)";
const G2_PROOF: &str = "G2 lemma on T3(eta), proof";

fn g2_eta(g2: &G2Model) -> CotangentValuedForm {
    let beta = g2.lambda37_element(&e7(2)).unwrap();
    CotangentValuedForm::decomposable(&e7(1), &beta).unwrap()
}

fn g2_pr_lambda2() -> Result<Form> {
    let g2 = G2Model::standard();
    ck::pr_lambda2(g2, &ck::t3(&g2_eta(g2))?)
}

/// `*(e^k ∧ e² ∧ φ)`.
fn g2_inner_star(k: usize) -> Result<Form> {
    let g2 = G2Model::standard();
    Ok(e7(k).wedge(&e7(2))?.wedge(g2.phi0())?.hodge())
}

fn g2_second_term() -> Result<Form> {
    let g2 = G2Model::standard();
    let mut acc = Form::zero(7, 2)?;
    for k in 1..=7 {
        let inner = e7(1).wedge(g2.phi0())?.wedge(&g2_inner_star(k)?)?.hodge();
        acc = acc.add(&e7(k).wedge(&inner)?)?;
    }
    Ok(acc)
}

fn g2_third_term() -> Result<Form> {
    let g2 = G2Model::standard();
    let s = e7(1).wedge(&e7(2))?.wedge(g2.phi0())?.hodge();
    let mut acc = Form::zero(7, 2)?;
    for k in 1..=7 {
        let inner = e7(k).wedge(&s)?.wedge(g2.phi0())?.hodge();
        acc = acc.add(&e7(k).wedge(&inner)?)?;
    }
    Ok(acc)
}

fn g2_first_term() -> Result<Form> {
    let g2 = G2Model::standard();
    let s = g2.lambda37_element(&e7(2))?;
    Ok(e7(1).wedge(&s.wedge(g2.phi0())?.hodge())?.scale(&q(3, 4)))
}

const G2_INNER_STAR: [&str; 7] = [
    "-(e47+e56)",
    "0",
    "-(e45+e67)",
    "e17+e35",
    "e16-e34",
    "e37-e15",
    "-(e14+e36)",
];
const G2_E1_PHI_WEDGE: [&str; 7] = [
    "2e134567",
    "0",
    "0",
    "-e123456",
    "e123457",
    "e123467",
    "-e123567",
];
const G2_STAR_E1_PHI_WEDGE: [&str; 7] = ["-2e2", "0", "0", "-e7", "-e6", "e5", "e4"];

fn g2_tasks() -> Vec<Task> {
    let mut tasks: Vec<Task> = vec![
        one(|| {
            form_check(
                "g2.star-phi0",
                "G2 model: Hodge dual of phi0",
                "e4567 + e2367 + e2345 + e1357 - e1346 - e1256 - e1247",
                Ok(G2Model::standard().phi0().hodge()),
            )
        }),
        one(|| {
            form_check(
                "g2.a.star-e2-phi",
                G2_PROOF,
                "-(e367+e345+e156+e147)",
                G2Model::standard().lambda37_element(&e7(2)),
            )
        }),
        many(|| {
            let g2 = G2Model::standard();
            (1..=7)
                .map(|k| {
                    let computed = g2
                        .lambda37_element(&e7(k))
                        .and_then(|s| Ok(s.wedge(g2.phi0())?.hodge()));
                    form_check(
                        &format!("g2.b.general.e{k}"),
                        "G2 identity *(*(alpha^phi)^phi) = -4 alpha",
                        &format!("-4e{k}"),
                        computed,
                    )
                })
                .collect()
        }),
    ];
    tasks.push(many(|| {
        let g2 = G2Model::standard();
        let mut out = Vec::new();
        for k in 1..=7 {
            out.push(
                form_check(
                    &format!("g2.c.star-ek-e2-phi.k{k}"),
                    G2_PROOF,
                    G2_INNER_STAR[k - 1],
                    g2_inner_star(k),
                )
                .intermediate(),
            );
        }
        for k in 1..=7 {
            let wedge = g2_inner_star(k).and_then(|s| e7(1).wedge(g2.phi0())?.wedge(&s));
            out.push(
                form_check(
                    &format!("g2.c.e1-phi-wedge.k{k}"),
                    G2_PROOF,
                    G2_E1_PHI_WEDGE[k - 1],
                    wedge.clone(),
                )
                .intermediate(),
            );
            out.push(
                form_check(
                    &format!("g2.c.star-e1-phi-wedge.k{k}"),
                    G2_PROOF,
                    G2_STAR_E1_PHI_WEDGE[k - 1],
                    wedge.map(|w| w.hodge()),
                )
                .intermediate(),
            );
        }
        out
    }));
    tasks.push(one(|| {
        form_check("g2.c.second-term", G2_PROOF, "-2(e12+e47+e56)", g2_second_term())
    }));
    tasks.push(one(|| {
        form_check("g2.d.third-term", G2_PROOF, "2(-2e12+e47+e56)", g2_third_term())
    }));
    tasks.push(one(|| {
        form_check("g2.e.first-term", G2_PROOF, "-3e12", g2_first_term()).intermediate()
    }));
    tasks.push(one(|| {
        let three_terms = || -> Result<Form> {
            g2_first_term()?
                .add(&g2_second_term()?.scale(&q(1, 4)))?
                .sub(&g2_third_term()?.scale(&q(1, 5)))
        };
        let (expected, computed) = (three_terms(), g2_pr_lambda2());
        match (expected, computed) {
            (Ok(x), Ok(y)) => value_check("g2.e.three-term-expansion", G2_PROOF, x.factored(), y.factored()),
            (x, y) => Check::new(
                "g2.e.three-term-expansion",
                G2_PROOF,
                format!("{x:?}"),
                format!("{y:?}"),
                false,
            ),
        }
    }));
    tasks.push(one(|| {
        form_check("g2.e.pr-lambda2", G2_LEMMA, "-9/10*(3e12+e47+e56)", g2_pr_lambda2())
    }));
    tasks.push(one(|| {
        let g2 = G2Model::standard();
        let mut expected = Bilinear2Tensor::zeros(7);
        expected.set(0, 1, q(-7, 4));
        expected.set(1, 0, q(-7, 4));
        let text = "-7/4*(e1⊗e2 + e2⊗e1)";
        match ck::t3(&g2_eta(g2)).and_then(|t| ck::pr_sym0(g2, &t)) {
            Ok(b) => Check::new("g2.f.pr-sym0", G2_LEMMA, text, b.factored(), b == expected),
            Err(e) => Check::new("g2.f.pr-sym0", G2_LEMMA, text, err_str(e), false),
        }
    }));
    tasks.push(one(|| {
        let g2 = G2Model::standard();
        let computed = g2_pr_lambda2().and_then(|b| b.wedge(g2.phi0()));
        form_check("g2.g.rel1", G2_PROOF, "9/5(e12347+e12356+e34567)", computed)
    }));
    tasks.push(one(|| {
        let computed = g2_pr_lambda2().map(|b| b.hodge());
        form_check("g2.g.rel2", G2_PROOF, "-9/10(e12347+e12356+3e34567)", computed)
    }));
    tasks.push(many(|| {
        let split = g2_pr_lambda2().and_then(|b| G2Model::standard().lambda2_split(&b));
        let loc = "G2 lemma: Lambda2_7 and Lambda2_14 parts both non-zero";
        vec![
            nonzero_check(
                "g2.g.lambda27-nonzero",
                loc,
                split.as_ref().map(|(b7, _)| !b7.is_zero()).map_err(err_str),
            ),
            nonzero_check(
                "g2.g.lambda214-nonzero",
                loc,
                split.as_ref().map(|(_, b14)| !b14.is_zero()).map_err(err_str),
            ),
        ]
    }));
    tasks.push(one(|| {
        let g2 = G2Model::standard();
        let domain = ck::g2_domain_basis(g2);
        let outcome = forall(&domain, |a| {
            let v = ck::t3(a).and_then(|t| ck::pr_rphi(g2, &t)).map_err(err_str)?;
            ensure(v.is_zero(), || format!("pr_rphi(T3(A)) = {v} for A = {a}"))
        });
        property_check(
            "g2.h.pr-rphi-vanishes",
            "G2 proof that pr_rphi o T3 is identically zero",
            "pr_rphi(T3(A)) = 0 on the basis of T*(x)Lambda3_7",
            49,
            outcome,
        )
    }));
    tasks.push(many(|| {
        let g2 = G2Model::standard();
        let analysis = ck::analyze_t3(g2);
        let loc = "Main theorem i): kernel of T3 on T*(x)Lambda3_7";
        let generator = ck::nearly_parallel_generator(g2);
        let domain = ck::g2_domain_basis(g2);
        let columns: Vec<Vec<Rational>> = domain.iter().map(|a| a.to_vector()).collect();
        let coords = RationalMatrix::from_columns(columns[0].len(), &columns)
            .and_then(|m| m.solve(&generator.to_vector()))
            .ok()
            .flatten()
            .map(|v| linalg::normalize_leading(&v));
        let kernel_check = match (coords, analysis.kernel.first()) {
            (Some(expected), Some(found)) if analysis.kernel.len() == 1 => Check::new(
                "g2.i.t3-kernel-generator",
                loc,
                generator.to_string(),
                analysis.kernel_elements[0].to_string(),
                &expected == found,
            ),
            _ => Check::new(
                "g2.i.t3-kernel-generator",
                loc,
                generator.to_string(),
                format!("kernel of dimension {}", analysis.kernel.len()),
                false,
            ),
        };
        vec![
            value_check("g2.i.t3-rank", loc, 48, analysis.rank),
            value_check("g2.i.t3-kernel-dim", loc, 1, analysis.kernel.len()),
            kernel_check,
        ]
    }));
    tasks
}

pub fn run_g2_suite() -> VerificationReport {
    VerificationReport::assemble("g2", run_tasks(g2_tasks()))
}

// ---------------------------------------------------------------- Spin₇

const SPIN7_L1: &str = "Spin7 lemma on p(alpha0), proof";
const SPIN7_L2: &str = "Spin7 lemma on e^k ^ p(e^k ^ i_e0 alpha0), proof";
const SPIN7_L3: &str = "Spin7 lemma on e^k ^ p(e0 ^ i_ek alpha0), proof";
const SPIN7_FINAL: &str = "Spin7 final lemma on (P o T4)(eta0)";

fn alpha0() -> Form {
    Spin7Model::standard().alpha0()
}

fn i_e0_alpha0() -> Form {
    alpha0().contract(&e8(0)).unwrap()
}

/// `Y ↦ ⟨ψ, β ∧ Y⟩` for a 3-form β, as a covector.
fn psi_pairing(beta: &Form) -> Result<Form> {
    let psi = Spin7Model::standard().psi0();
    let coords = (0..8)
        .map(|y| psi.inner(&beta.wedge(&e8(y))?))
        .collect::<Result<Vec<_>>>()?;
    Form::from_vector(8, 1, &coords)
}

/// `(Y, Z) ↦ ⟨ψ, β ∧ Y ∧ Z⟩` for a 2-form β.
fn psi_pairing2(beta: &Form) -> Result<Form> {
    let psi = Spin7Model::standard().psi0();
    let mut coords = Vec::new();
    for y in 0..8 {
        for z in y + 1..8 {
            coords.push(psi.inner(&beta.wedge(&e8(y))?.wedge(&e8(z))?)?);
        }
    }
    Form::from_vector(8, 2, &coords)
}

/// `β_k(X,Y) = ⟨φ, i_X(i_{e_k}α₀)∧Y − i_Y(i_{e_k}α₀)∧X⟩` with φ included in ℝ⁸.
fn beta_k(k: usize) -> Result<Form> {
    let phi = G2Model::standard().phi0().relabel_into(8)?;
    let ia = alpha0().contract(&e8(k))?;
    let mut coords = Vec::new();
    for x in 0..8 {
        for y in x + 1..8 {
            let a = ia.contract(&e8(x))?.wedge(&e8(y))?;
            let b = ia.contract(&e8(y))?.wedge(&e8(x))?;
            coords.push(phi.inner(&a.sub(&b)?)?);
        }
    }
    Form::from_vector(8, 2, &coords)
}

fn sum_ek_wedge<F: Fn(usize) -> Result<Form>>(range: std::ops::RangeInclusive<usize>, f: F) -> Result<Form> {
    let mut acc = Form::zero(8, 3)?;
    for k in range {
        acc = acc.add(&e8(k).wedge(&f(k)?)?)?;
    }
    Ok(acc)
}

fn p_alpha0() -> Result<Form> {
    ck::p_map(Spin7Model::standard(), &alpha0())
}

fn lemma2_value() -> Result<Form> {
    let s7 = Spin7Model::standard();
    let ia = i_e0_alpha0();
    sum_ek_wedge(0..=7, |k| ck::p_map(s7, &e8(k).wedge(&ia)?))
}

fn lemma3_value() -> Result<Form> {
    let s7 = Spin7Model::standard();
    let a0 = alpha0();
    sum_ek_wedge(0..=7, |k| ck::p_map(s7, &e8(0).wedge(&a0.contract(&e8(k))?)?))
}

fn eta0() -> CotangentValuedForm {
    CotangentValuedForm::decomposable(&e8(0), &alpha0()).unwrap()
}

/// `5·(P∘T₄)(η₀)`.
fn fin() -> Result<Form> {
    let s7 = Spin7Model::standard();
    Ok(ck::big_p_map(s7, &ck::t4(&eta0())?)?.scale(&qi(5)))
}

const I_ALPHA0: [&str; 8] = [
    "e357-e346-e256-e247",
    "-e246+e257+e347+e356",
    "e146-e157+e056+e047",
    "-e147-e156-e057+e046",
    "-e126+e137-e036-e027",
    "e127+e136+e037-e026",
    "e124-e135+e034+e025",
    "-e125-e134-e035+e024",
];
const PSI_I_ALPHA0: [&str; 8] = ["-4e1", "4e0", "-4e3", "4e2", "-4e5", "4e4", "-4e7", "4e6"];
const PSI_I_I_ALPHA0: [&str; 8] = [
    "0",
    "0",
    "2e03+2e12-e47-e56",
    "-2e02-e46+2e13+e57",
    "2e05+e36+e27+2e14",
    "-2e04-e37+e26+2e15",
    "2e07-e34-e25+2e16",
    "-2e06+e35+2e17-e24",
];
const P_EK_I_ALPHA0: [&str; 8] = [
    "4e10-4(e23+e45+e67)",
    "0",
    "4e12+2(e65+e74+e03+e21)",
    "4e13+2(e57-e46-e13-e02)",
    "4e14+2(e05+e36-e14+e27)",
    "4e15+2(e51+e26+e40+e73)",
    "4e16+2(e52+e61+e43+e07)",
    "4e17+2(e35-e06-e24-e17)",
];
const DELTA_PART: [&str; 8] = [
    "-4e01", "0", "-4e03", "4e02", "-4e05", "4e04", "-4e07", "4e06",
];
const BETAK: &str = "6(-e247+e357-e256-e346)+8(e023+e045+e067)";

fn spin7_tasks() -> Vec<Task> {
    vec![
        one(|| {
            let computed = (|| {
                let g2 = G2Model::standard();
                e8(0)
                    .wedge(&g2.phi0().relabel_into(8)?)?
                    .add(&g2.star_phi0().relabel_into(8)?)
            })();
            form_check(
                "spin7.a.psi0",
                "Spin7 model: psi0 = e0^phi0 + *phi0, expanded",
                "e0123+e0145+e0167+e0246-e0257-e0347-e0356+e4567+e2367+e2345+e1357-e1346-e1256-e1247",
                computed,
            )
        }),
        one(|| {
            form_check(
                "spin7.b.alpha0",
                SPIN7_L1,
                "-e1246+e1257+e1347+e1356+e0357-e0346-e0256-e0247",
                Ok(alpha0()),
            )
        }),
        one(|| {
            let s7 = Spin7Model::standard();
            let basis = s7.lambda47_basis();
            let mut with = basis.iter().map(Form::to_vector).collect::<Vec<_>>();
            let before = linalg::rank(&RationalMatrix::from_rows(with.clone()).unwrap());
            with.push(alpha0().to_vector());
            let after = linalg::rank(&RationalMatrix::from_rows(with).unwrap());
            let computed = if before == 7 && after == 7 {
                "in Lambda4_7".to_string()
            } else {
                format!("rank {before} -> {after}")
            };
            value_check(
                "spin7.b.alpha0-in-lambda47",
                "Spin7 section: alpha0 is a section of Lambda4_7",
                "in Lambda4_7".to_string(),
                computed,
            )
        }),
        many(|| {
            let a0 = alpha0();
            let mut out = Vec::new();
            for j in 0..8 {
                let ia = a0.contract(&e8(j));
                out.push(
                    form_check(&format!("spin7.l1.i-alpha0.e{j}"), SPIN7_L1, I_ALPHA0[j], ia.clone())
                        .intermediate(),
                );
                out.push(
                    form_check(
                        &format!("spin7.l1.psi-i-alpha0.e{j}"),
                        SPIN7_L1,
                        PSI_I_ALPHA0[j],
                        ia.and_then(|b| psi_pairing(&b)),
                    )
                    .intermediate(),
                );
            }
            out
        }),
        one(|| form_check("spin7.c.i-e0-alpha0", SPIN7_L2, "e357-e346-e256-e247", Ok(i_e0_alpha0()))),
        one(|| form_check("spin7.c.e1-pairing", SPIN7_L2, "-4e1", psi_pairing(&i_e0_alpha0()))),
        one(|| {
            form_check(
                "spin7.d.p-alpha0",
                "Spin7 lemma on p(alpha0)",
                "-8(e01+e23+e45+e67)",
                p_alpha0(),
            )
        }),
        one(|| {
            let computed = match p_alpha0() {
                Ok(f) => format!("{}-form", f.degree()),
                Err(e) => err_str(e),
            };
            value_check(
                "spin7.d.prose-degree",
                "Spin7 lemma on p(alpha0): degree named in the statement",
                "3-form".to_string(),
                computed,
            )
            .intermediate()
        }),
        many(|| {
            let s7 = Spin7Model::standard();
            let ia = i_e0_alpha0();
            let mut out = Vec::new();
            for j in 0..8 {
                let computed = ia.contract(&e8(j)).and_then(|b| psi_pairing2(&b));
                out.push(
                    form_check(
                        &format!("spin7.l2.psi-i-i-alpha0.e{j}"),
                        SPIN7_L2,
                        PSI_I_I_ALPHA0[j],
                        computed,
                    )
                    .intermediate(),
                );
            }
            for k in 0..8 {
                let computed = e8(k).wedge(&ia).and_then(|b| ck::p_map(s7, &b));
                out.push(
                    form_check(
                        &format!("spin7.l2.p-ek-i-alpha0.k{k}"),
                        SPIN7_L2,
                        P_EK_I_ALPHA0[k],
                        computed,
                    )
                    .intermediate(),
                );
            }
            out
        }),
        one(|| {
            form_check(
                "spin7.e.lemma2",
                "Spin7 lemma on e^k ^ p(e^k ^ i_e0 alpha0)",
                "-8(e045+e023+e067)-6(e256+e247+e346-e357)",
                lemma2_value(),
            )
        }),
        many(|| {
            let s7 = Spin7Model::standard();
            let a0 = alpha0();
            // p(e⁰ ∧ i_{e_k}α₀) + β_k is the part the proof writes with deltas
            let delta_part = |k: usize| -> Result<Form> {
                ck::p_map(s7, &e8(0).wedge(&a0.contract(&e8(k))?)?)?.add(&beta_k(k)?)
            };
            let mut out: Vec<Check> = (0..8)
                .map(|k| {
                    form_check(
                        &format!("spin7.l3.delta-part.k{k}"),
                        SPIN7_L3,
                        DELTA_PART[k],
                        delta_part(k),
                    )
                    .intermediate()
                })
                .collect();
            out.push(
                form_check(
                    "spin7.l3.delta-sum",
                    SPIN7_L3,
                    "2(e023+e045+e067)",
                    sum_ek_wedge(0..=7, delta_part).map(|f| f.scale(&q(1, 4))),
                )
                .intermediate(),
            );
            out.push(form_check("spin7.l3.betak", SPIN7_L3, BETAK, sum_ek_wedge(0..=7, beta_k)).intermediate());
            out.push(
                form_check(
                    "spin7.l3.betak-range",
                    "Spin7 lemma on e^k ^ p(e0 ^ i_ek alpha0), proof: beta_k defined for 1 <= k <= 7 only",
                    BETAK,
                    sum_ek_wedge(1..=7, beta_k),
                )
                .intermediate(),
            );
            out
        }),
        one(|| {
            form_check(
                "spin7.f.lemma3",
                "Spin7 lemma on e^k ^ p(e0 ^ i_ek alpha0)",
                "6(e247-e357+e256+e346)",
                lemma3_value(),
            )
        }),
        one(|| {
            let expansion = (|| -> Result<Form> {
                e8(0)
                    .wedge(&p_alpha0()?)?
                    .scale(&q(4, 5))
                    .add(&lemma3_value()?.scale(&q(1, 5)))?
                    .sub(&lemma2_value()?.scale(&q(1, 5)))
            })();
            let computed = fin().map(|f| f.scale(&q(1, 5)));
            match (expansion, computed) {
                (Ok(x), Ok(y)) => value_check(
                    "spin7.g.pc-expansion",
                    "Spin7 expansion of (P o T4)(gamma (x) alpha)",
                    x.factored(),
                    y.factored(),
                ),
                (x, y) => Check::new(
                    "spin7.g.pc-expansion",
                    "Spin7 expansion of (P o T4)(gamma (x) alpha)",
                    format!("{x:?}"),
                    format!("{y:?}"),
                    false,
                ),
            }
        }),
        one(|| {
            form_check(
                "spin7.g.fin",
                SPIN7_FINAL,
                "-24(e023+e045+e067)+12(e247-e357+e256+e346)",
                fin(),
            )
        }),
        one(|| {
            let computed = fin().and_then(|f| f.wedge(Spin7Model::standard().psi0()));
            form_check("spin7.g.fin-wedge-psi0", SPIN7_FINAL, "-24*e0234567", computed)
        }),
        one(|| {
            let psi = Spin7Model::standard().psi0();
            let solution = (|| -> Result<Option<Vec<Rational>>> {
                let columns = (0..8)
                    .map(|j| Ok(psi.contract(&e8(j))?.to_vector()))
                    .collect::<Result<Vec<_>>>()?;
                RationalMatrix::from_columns(56, &columns)?.solve(&fin()?.to_vector())
            })();
            let computed = match solution {
                Ok(None) => "no solution".to_string(),
                Ok(Some(x)) => format!("solution X = {}", Form::from_vector(8, 1, &x).unwrap()),
                Err(e) => err_str(e),
            };
            value_check(
                "spin7.h.not-contraction",
                "Spin7 final lemma, proof: value is not of the form i_X psi",
                "no solution".to_string(),
                computed,
            )
        }),
        many(|| {
            let parts = ck::t4(&eta0()).and_then(|t| ck::p8_p48(Spin7Model::standard(), &t));
            vec![
                nonzero_check(
                    "spin7.h.p8-nonzero",
                    SPIN7_FINAL,
                    parts.as_ref().map(|(p8, _)| !p8.is_zero()).map_err(err_str),
                ),
                nonzero_check(
                    "spin7.h.p48-nonzero",
                    SPIN7_FINAL,
                    parts.as_ref().map(|(_, p48)| !p48.is_zero()).map_err(err_str),
                ),
            ]
        }),
        many(|| {
            let analysis = ck::analyze_t4(Spin7Model::standard());
            let loc = "Main theorem ii): T4 injective on T*(x)Lambda4_7";
            vec![
                value_check("spin7.i.t4-rank", loc, 56, analysis.rank),
                value_check("spin7.i.t4-kernel-dim", loc, 0, analysis.kernel.len()),
            ]
        }),
    ]
}

pub fn run_spin7_suite() -> VerificationReport {
    VerificationReport::assemble("spin7", run_tasks(spin7_tasks()))
}

// ---------------------------------------------------------------- axioms

const EXTERIOR: &str = "exterior algebra";
const STRUCTURES: &str = "G2 and Spin7 decompositions";
const OPERATORS: &str = "conformal-Killing operators";

fn all_blades(dim: usize) -> Vec<Form> {
    (0..=dim)
        .flat_map(|p| Form::basis(dim, p).unwrap())
        .collect()
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    q(rng.random_range(-6..=6), rng.random_range(1..=4))
}

fn random_form(rng: &mut ChaCha8Rng, dim: usize, degree: usize) -> Form {
    let blades = basis_blades(dim, degree);
    let density = rng.random_range(1..=3);
    let coords: Vec<Rational> = blades
        .iter()
        .map(|_| {
            if rng.random_range(0..4) < density {
                random_rational(rng)
            } else {
                Rational::zero()
            }
        })
        .collect();
    Form::from_vector(dim, degree, &coords).unwrap()
}

fn random_dim_degree(rng: &mut ChaCha8Rng) -> (usize, usize) {
    let dim = rng.random_range(7..=8);
    (dim, rng.random_range(0..=dim))
}

fn sign(exp: usize) -> Rational {
    if exp % 2 == 0 {
        qi(1)
    } else {
        qi(-1)
    }
}

/// Runs `law` on `count` seeded random cases. Each case gets its own stream
/// so checks stay reproducible under parallel execution.
fn sampled<F>(seed: u64, stream: u64, count: usize, law: F) -> std::result::Result<usize, String>
where
    F: Fn(&mut ChaCha8Rng) -> std::result::Result<(), String>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    for _ in 0..count {
        law(&mut rng)?;
    }
    Ok(count)
}

fn exterior_tasks(seed: u64) -> Vec<Task> {
    let mut tasks: Vec<Task> = Vec::new();
    for dim in [7usize, 8] {
        tasks.push(one(move || {
            let blades = all_blades(dim);
            let outcome = forall(&blades, |b| {
                let p = b.degree();
                let twice = b.hodge().hodge();
                ensure(twice == b.scale(&sign(p * (dim - p))), || format!("**{b} = {twice}"))
            });
            property_check(
                &format!("axioms.hodge-involution.dim{dim}"),
                EXTERIOR,
                &format!("**b = (-1)^(p(n-p)) b for every blade of R^{dim}"),
                1 << dim,
                outcome,
            )
        }));
    }
    for dim in [7usize, 8] {
        tasks.push(one(move || {
            let vol = Form::volume(dim).unwrap();
            let mut pairs = Vec::new();
            for p in 0..=dim {
                let basis = Form::basis(dim, p).unwrap();
                for a in &basis {
                    for b in &basis {
                        pairs.push((a.clone(), b.clone()));
                    }
                }
            }
            let outcome = forall(&pairs, |(a, b)| {
                let lhs = a.wedge(&b.hodge()).map_err(err_str)?;
                let rhs = vol.scale(&a.inner(b).map_err(err_str)?);
                ensure(lhs == rhs, || format!("{a} ^ *{b} = {lhs}"))
            });
            let n = pairs.len();
            property_check(
                &format!("axioms.wedge-hodge-inner.dim{dim}"),
                EXTERIOR,
                &format!("a ^ *b = <a,b> vol for same-degree blades of R^{dim}"),
                n,
                outcome,
            )
        }));
    }
    for dim in [7usize, 8] {
        tasks.push(one(move || {
            let blades = all_blades(dim);
            let outcome = forall(&blades, |b| {
                let p = b.degree();
                let mut acc = Form::zero(dim, p).unwrap();
                for k in 0..dim {
                    let x = Form::basis_covector(dim, k);
                    if p > 0 {
                        acc = acc.add(&x.wedge(&b.contract(&x).unwrap()).unwrap()).unwrap();
                    }
                }
                ensure(acc == b.scale(&qi(p as i64)), || format!("sum for {b} gives {acc}"))
            });
            property_check(
                &format!("axioms.euler-identity.dim{dim}"),
                EXTERIOR,
                &format!("sum_k e^k ^ i_ek b = p b for every blade of R^{dim}"),
                1 << dim,
                outcome,
            )
        }));
    }
    for dim in [7usize, 8] {
        tasks.push(one(move || {
            let mut cases = Vec::new();
            for k in 0..dim {
                for p in 1..=dim {
                    for a in Form::basis(dim, p).unwrap() {
                        cases.push((k, a));
                    }
                }
            }
            let outcome = forall(&cases, |(k, a)| {
                let x = Form::basis_covector(dim, *k);
                let ia = a.contract(&x).map_err(err_str)?;
                for b in Form::basis(dim, a.degree() - 1).unwrap() {
                    let lhs = ia.inner(&b).map_err(err_str)?;
                    let rhs = a.inner(&x.wedge(&b).map_err(err_str)?).map_err(err_str)?;
                    ensure(lhs == rhs, || format!("<i_x {a}, {b}> = {lhs} but <{a}, x^{b}> = {rhs}"))?;
                }
                Ok(())
            });
            property_check(
                &format!("axioms.interior-adjoint.dim{dim}"),
                EXTERIOR,
                &format!("<i_x a, b> = <a, x ^ b> for basis covectors x and blades a of R^{dim}"),
                dim * ((1 << dim) - 1),
                outcome,
            )
        }));
    }
    tasks.push(one(move || {
        let outcome = sampled(seed, 1, SAMPLES, |rng| {
            let (dim, p) = random_dim_degree(rng);
            let qd = rng.random_range(0..=dim);
            let (a, b) = (random_form(rng, dim, p), random_form(rng, dim, qd));
            let ab = a.wedge(&b).map_err(err_str)?;
            let ba = b.wedge(&a).map_err(err_str)?;
            ensure(ab == ba.scale(&sign(p * qd)), || format!("a = {a}, b = {b}"))
        });
        property_check(
            "axioms.wedge-graded-commutative",
            EXTERIOR,
            "a ^ b = (-1)^(pq) b ^ a on seeded random pairs",
            SAMPLES,
            outcome,
        )
    }));
    tasks.push(one(move || {
        let outcome = sampled(seed, 2, SAMPLES, |rng| {
            let (dim, p) = random_dim_degree(rng);
            let qd = rng.random_range(usize::from(p == 0)..=dim - p);
            let (a, b) = (random_form(rng, dim, p), random_form(rng, dim, qd));
            let x = random_form(rng, dim, 1);
            let both = (|| -> Result<(Form, Form)> {
                let lhs = a.wedge(&b)?.contract(&x)?;
                let first = if p > 0 {
                    a.contract(&x)?.wedge(&b)?
                } else {
                    Form::zero(dim, qd - 1)?
                };
                let second = if qd > 0 {
                    a.wedge(&b.contract(&x)?)?.scale(&sign(p))
                } else {
                    Form::zero(dim, p - 1)?
                };
                Ok((lhs, first.add(&second)?))
            })();
            let (lhs, rhs) = both.map_err(|e| format!("x = {x}, a = {a}, b = {b}: {e}"))?;
            ensure(lhs == rhs, || format!("x = {x}, a = {a}, b = {b}"))
        });
        property_check(
            "axioms.interior-antiderivation",
            EXTERIOR,
            "i_x(a ^ b) = i_x a ^ b + (-1)^p a ^ i_x b on seeded random pairs",
            SAMPLES,
            outcome,
        )
    }));
    tasks.push(one(move || {
        let outcome = sampled(seed, 3, SAMPLES, |rng| {
            let dim = rng.random_range(7..=8);
            let p = rng.random_range(0..=3);
            let qd = rng.random_range(0..=3);
            let r = rng.random_range(0..=2);
            let (a, b, c) = (
                random_form(rng, dim, p),
                random_form(rng, dim, qd),
                random_form(rng, dim, r),
            );
            let left = a.wedge(&b).and_then(|ab| ab.wedge(&c)).map_err(err_str)?;
            let right = b.wedge(&c).and_then(|bc| a.wedge(&bc)).map_err(err_str)?;
            ensure(left == right, || format!("a = {a}, b = {b}, c = {c}"))?;
            let s = random_rational(rng);
            let b2 = random_form(rng, dim, qd);
            let lin = a.wedge(&b.scale(&s).add(&b2).unwrap()).map_err(err_str)?;
            let split = a.wedge(&b).unwrap().scale(&s).add(&a.wedge(&b2).unwrap()).unwrap();
            ensure(lin == split, || format!("a = {a}, b = {b}, b' = {b2}, s = {s}"))
        });
        property_check(
            "axioms.wedge-associative-bilinear",
            EXTERIOR,
            "(a ^ b) ^ c = a ^ (b ^ c) and a ^ (s b + b') = s a ^ b + a ^ b' on seeded random triples",
            SAMPLES,
            outcome,
        )
    }));
    tasks
}

fn structure_tasks() -> Vec<Task> {
    vec![
        one(|| {
            let g2 = G2Model::standard();
            let basis = Form::basis(7, 2).unwrap();
            let outcome = forall(&basis, |b| {
                let (b7, b14) = g2.lambda2_split(b).map_err(err_str)?;
                ensure(&b7.add(&b14).unwrap() == b, || format!("parts of {b} do not sum back"))?;
                let l7 = b7.wedge(g2.phi0()).unwrap();
                ensure(b7.hodge().scale(&qi(2)) == l7, || format!("2*b7 != b7^phi for {b}"))?;
                let l14 = b14.wedge(g2.phi0()).unwrap();
                ensure(b14.hodge() == l14.neg(), || format!("*b14 != -b14^phi for {b}"))
            });
            property_check(
                "axioms.lambda2-eigen",
                STRUCTURES,
                "b = b7 + b14 with 2*b7 = b7^phi0 and *b14 = -b14^phi0 on the basis of Lambda2",
                21,
                outcome,
            )
        }),
        one(|| {
            value_check(
                "axioms.lambda2-dims",
                STRUCTURES,
                "(7, 14)".to_string(),
                format!("{:?}", G2Model::standard().lambda2_dims()),
            )
        }),
        one(|| {
            let g2 = G2Model::standard();
            let alphas: Vec<Form> = (1..=7).map(e7).collect();
            let outcome = forall(&alphas, |a| {
                let back = g2
                    .lambda37_element(a)
                    .and_then(|b| g2.lambda37_iso_inv(&g2.lambda37_iso(&b)?))
                    .map_err(err_str)?;
                // inv∘iso is the identity on Λ³₇, so it returns *(α∧φ)
                let b = g2.lambda37_element(a).unwrap();
                ensure(back == b, || format!("round trip of *({a}^phi) gives {back}"))
            });
            property_check(
                "axioms.lambda37-inverse",
                STRUCTURES,
                "lambda37_iso_inv(lambda37_iso(*(a^phi0))) = *(a^phi0) for a = e1..e7",
                7,
                outcome,
            )
        }),
        one(|| {
            let g2 = G2Model::standard();
            let mut units = Vec::new();
            for i in 0..7 {
                for j in 0..7 {
                    let mut b = Bilinear2Tensor::zeros(7);
                    b.set(i, j, qi(1));
                    units.push(b);
                }
            }
            let outcome = forall(&units, |b| {
                let s = g2.split_bilinear(b).map_err(err_str)?;
                ensure(&s.recompose() == b, || format!("{b} does not recompose"))?;
                ensure(s.sym0.trace().is_zero(), || format!("sym0 of {b} has trace"))?;
                let mut k = 0;
                for i in 0..7 {
                    for j in i + 1..7 {
                        let want = b.get(i, j) - b.get(j, i);
                        let got = s.skew.to_vector()[k].clone();
                        ensure(want == got, || format!("skew part of {b} at ({i},{j})"))?;
                        k += 1;
                    }
                }
                Ok(())
            });
            property_check(
                "axioms.split-bilinear",
                STRUCTURES,
                "B = skew + sym0 + trace recomposes, skew = B - B^T, tr sym0 = 0 on unit tensors",
                49,
                outcome,
            )
        }),
        one(|| {
            let s7 = Spin7Model::standard();
            let basis48 = s7.lambda3_48_basis();
            let blades = Form::basis(8, 3).unwrap();
            let outcome = forall(&blades, |b| {
                let (b8, b48) = s7.lambda3_split8(b).map_err(err_str)?;
                ensure(&b8.add(&b48).unwrap() == b, || format!("parts of {b} do not sum back"))?;
                ensure(b48.wedge(s7.psi0()).unwrap().is_zero(), || format!("b48 ^ psi != 0 for {b}"))?;
                for x in &basis48 {
                    ensure(b8.inner(x).unwrap().is_zero(), || format!("b8 of {b} not orthogonal to {x}"))?;
                }
                Ok(())
            });
            property_check(
                "axioms.lambda3-split",
                STRUCTURES,
                "b = b8 + b48 with b48 ^ psi0 = 0 and b8 orthogonal to Lambda3_48 on the basis of Lambda3",
                56,
                outcome,
            )
        }),
        one(|| {
            value_check(
                "axioms.lambda3-dims",
                STRUCTURES,
                "(8, 48)".to_string(),
                format!("{:?}", Spin7Model::standard().lambda3_dims()),
            )
        }),
        one(|| {
            let s7 = Spin7Model::standard();
            let j = s7.lambda3_8_basis();
            let mut computed = "7 delta".to_string();
            for (a, x) in j.iter().enumerate() {
                for (b, y) in j.iter().enumerate() {
                    let g = x.inner(y).unwrap();
                    if g != qi(if a == b { 7 } else { 0 }) {
                        computed = format!("<J(e{a}), J(e{b})> = {g}");
                    }
                }
            }
            value_check(
                "axioms.lambda3-8-gram",
                STRUCTURES,
                "7 delta".to_string(),
                computed,
            )
        }),
        one(|| {
            let psi = Spin7Model::standard().psi0();
            form_check("axioms.psi0-self-dual", STRUCTURES, "psi0", Ok(psi.hodge()))
        }),
        one(|| {
            let psi = Spin7Model::standard().psi0();
            form_check("axioms.psi0-square", STRUCTURES, "14e01234567", psi.wedge(psi))
        }),
        one(|| {
            let mut pairs = Vec::new();
            for k in 1..=7 {
                for b in Form::basis(7, 3).unwrap() {
                    pairs.push((e7(k), b));
                }
            }
            let outcome = forall(&pairs, |(gamma, beta)| {
                let mut acc = Form::zero(7, 4).unwrap();
                for k in 0..7 {
                    let x = Form::basis_covector(7, k);
                    let term = x.wedge(gamma).and_then(|t| t.wedge(&beta.contract(&x)?));
                    acc = acc.add(&term.map_err(err_str)?).unwrap();
                }
                let want = gamma.wedge(beta).unwrap().scale(&qi(-3));
                ensure(acc == want, || format!("gamma = {gamma}, beta = {beta}"))
            });
            property_check(
                "axioms.rphi-vanishing-identity",
                "G2 proof that pr_rphi o T3 is identically zero: 3 gamma^beta + e^k^gamma^i_ek beta = 0",
                "sum_k e^k ^ gamma ^ i_ek beta = -3 gamma ^ beta for basis covectors and 3-blades",
                49 * 5,
                outcome,
            )
        }),
    ]
}

/// `T(γ⊗β)(X)` from the printed decomposable formula.
fn printed_residual(gamma: &Form, beta: &Form, c: [Rational; 3]) -> Result<CotangentValuedForm> {
    let n = gamma.dim();
    let i_gamma = beta.contract(gamma)?;
    let components = (0..n)
        .map(|k| {
            let x = Form::basis_covector(n, k);
            let g_x = gamma.inner(&x)?;
            beta.scale(&(&c[0] * g_x))
                .add(&gamma.wedge(&beta.contract(&x)?)?.scale(&c[1]))?
                .sub(&x.wedge(&i_gamma)?.scale(&c[2]))
        })
        .collect::<Result<Vec<_>>>()?;
    CotangentValuedForm::from_components(components)
}

fn operator_tasks() -> Vec<Task> {
    let mut tasks: Vec<Task> = Vec::new();
    for (dim, p, name, c) in [
        (7usize, 3usize, "T3", [q(3, 4), q(1, 4), q(1, 5)]),
        (8, 4, "T4", [q(4, 5), q(1, 5), q(1, 5)]),
    ] {
        tasks.push(one(move || {
            let mut pairs = Vec::new();
            for k in 0..dim {
                for b in Form::basis(dim, p).unwrap() {
                    pairs.push((Form::basis_covector(dim, k), b));
                }
            }
            let outcome = forall(&pairs, |(gamma, beta)| {
                let a = CotangentValuedForm::decomposable(gamma, beta).map_err(err_str)?;
                let generic = ck::ck_residual(&a).map_err(err_str)?;
                let printed = printed_residual(gamma, beta, c.clone()).map_err(err_str)?;
                ensure(generic == printed, || format!("{name} differs on {gamma} (x) {beta}"))
            });
            let n = pairs.len();
            property_check(
                &format!("axioms.{}-printed-formula", name.to_lowercase()),
                &format!("{OPERATORS}: decomposable formula for {name}"),
                &format!(
                    "{name}(g (x) b)(X) = {} g(X) b + {} g ^ i_X b - {} X ^ i_g b on basis decomposables",
                    c[0], c[1], c[2]
                ),
                n,
                outcome,
            )
        }));
    }
    tasks.push(one(|| {
        let domain = ck::spin7_domain_basis(Spin7Model::standard());
        let rank = ck::operator_matrix(&domain, |a| Ok(a.contraction()?.to_vector()))
            .map(|m| m.rank().to_string())
            .unwrap_or_else(err_str);
        value_check(
            "axioms.inner-contraction-rank",
            "Spin7 section: inner contraction T*(x)Lambda4_7 -> Lambda3 is an isomorphism",
            "56".to_string(),
            rank,
        )
    }));
    tasks.push(one(|| {
        let g2 = G2Model::standard();
        let domain = ck::g2_domain_basis(g2);
        let rank = ck::operator_matrix(&domain, |a| Ok(ck::extinsa_map(g2, a)?.to_vector()))
            .map(|m| m.rank().to_string())
            .unwrap_or_else(err_str);
        value_check(
            "axioms.extinsa-rank",
            "G2 section: T*(x)Lambda3_7 is isomorphic to T*(x)T*",
            "49".to_string(),
            rank,
        )
    }));
    tasks
}

pub fn run_axiom_suite() -> VerificationReport {
    run_axiom_suite_with_seed(DEFAULT_SEED)
}

pub fn run_axiom_suite_with_seed(seed: u64) -> VerificationReport {
    let mut tasks = exterior_tasks(seed);
    tasks.extend(structure_tasks());
    tasks.extend(operator_tasks());
    VerificationReport::assemble("axioms", run_tasks(tasks))
}

/// The three suites concatenated.
pub fn run_all(seed: u64) -> VerificationReport {
    let (g2, (spin7, axioms)) = rayon::join(run_g2_suite, || {
        rayon::join(run_spin7_suite, || run_axiom_suite_with_seed(seed))
    });
    VerificationReport::merge("all", vec![g2, spin7, axioms])
}
