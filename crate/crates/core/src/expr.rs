//! Text syntax for forms.
//!
//! ```text
//! expr    := [sign] term (sign term)*
//! term    := rational ['*'] primary | rational | primary
//! primary := 'e' digit+ | name | '(' expr ')'
//! rational:= int ['/' int]
//! name    := phi0 | star_phi0 | psi0 | alpha0
//! ```
//!
//! Whitespace is insignificant and parenthesized groups distribute, so
//! `-9/10*(3e12 + e47 + e56)` is a 2-form. Each digit after `e` is one basis
//! label. The dimension is 7 unless the label `0` or an 8-dimensional name
//! appears; a caller can pin it instead. Mixing the two is an error.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::multivector::Form;
use crate::structures::{G2Model, Spin7Model};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseContext {
    pub dim: Option<usize>,
    pub degree: Option<usize>,
}

impl ParseContext {
    pub fn dim(dim: usize) -> Self {
        ParseContext {
            dim: Some(dim),
            degree: None,
        }
    }

    pub fn with_degree(mut self, degree: usize) -> Self {
        self.degree = Some(degree);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Named {
    Phi0,
    StarPhi0,
    Psi0,
    Alpha0,
}

impl Named {
    fn lookup(name: &str) -> Option<Named> {
        match name {
            "phi0" => Some(Named::Phi0),
            "star_phi0" => Some(Named::StarPhi0),
            "psi0" => Some(Named::Psi0),
            "alpha0" => Some(Named::Alpha0),
            _ => None,
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Named::Phi0 | Named::StarPhi0 => 7,
            Named::Psi0 | Named::Alpha0 => 8,
        }
    }

    pub fn form(self) -> Form {
        match self {
            Named::Phi0 => G2Model::standard().phi0().clone(),
            Named::StarPhi0 => G2Model::standard().star_phi0().clone(),
            Named::Psi0 => Spin7Model::standard().psi0().clone(),
            Named::Alpha0 => Spin7Model::standard().alpha0(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Atom {
    Scalar,
    Blade(Vec<usize>),
    Named(Named),
}

#[derive(Debug, Clone)]
struct Term {
    coeff: Rational,
    atom: Atom,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Slash,
    Star,
    Plus,
    Minus,
    LParen,
    RParen,
}

fn parse_err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '/' => Tok::Slash,
            '*' => Tok::Star,
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start, Tok::Int(digits.parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            other => return Err(parse_err(start, format!("unexpected character '{other}'"))),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Vec<Term>> {
        let mut out = Vec::new();
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            for mut t in self.term()? {
                if negate {
                    t.coeff = -t.coeff;
                }
                out.push(t);
            }
            negate = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => break,
            };
            self.bump();
        }
        Ok(out)
    }

    fn rational(&mut self) -> Result<Rational> {
        let at = self.here();
        let Some(Tok::Int(n)) = self.bump() else {
            return Err(parse_err(at, "expected a number"));
        };
        if self.peek() != Some(&Tok::Slash) {
            return Ok(Rational::from_integer(n));
        }
        self.bump();
        let at = self.here();
        match self.bump() {
            Some(Tok::Int(d)) if !d.is_zero() => Ok(Rational::new(n, d)),
            Some(Tok::Int(_)) => Err(parse_err(at, "zero denominator")),
            _ => Err(parse_err(at, "expected a denominator")),
        }
    }

    fn term(&mut self) -> Result<Vec<Term>> {
        if let Some(Tok::Int(_)) = self.peek() {
            let c = self.rational()?;
            let explicit_star = self.peek() == Some(&Tok::Star);
            if explicit_star {
                self.bump();
            }
            let follows_primary = matches!(self.peek(), Some(Tok::Ident(_) | Tok::LParen));
            if !follows_primary {
                if explicit_star {
                    return Err(parse_err(self.here(), "expected a blade, name or group after '*'"));
                }
                return Ok(vec![Term {
                    coeff: c,
                    atom: Atom::Scalar,
                }]);
            }
            let mut terms = self.primary()?;
            for t in &mut terms {
                t.coeff *= &c;
            }
            return Ok(terms);
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Vec<Term>> {
        let at = self.here();
        match self.bump() {
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let close = self.here();
                if self.bump() != Some(Tok::RParen) {
                    return Err(parse_err(close, "expected ')'"));
                }
                Ok(inner)
            }
            Some(Tok::Ident(name)) => Ok(vec![Term {
                coeff: Rational::one(),
                atom: ident_atom(&name, at)?,
            }]),
            Some(_) => Err(parse_err(at, "expected a term")),
            None => Err(parse_err(at, "unexpected end of input")),
        }
    }
}

fn ident_atom(name: &str, at: usize) -> Result<Atom> {
    if let Some(n) = Named::lookup(name) {
        return Ok(Atom::Named(n));
    }
    let digits = name
        .strip_prefix('e')
        .filter(|d| !d.is_empty() && d.chars().all(|c| c.is_ascii_digit()))
        .ok_or_else(|| parse_err(at, format!("unknown name '{name}'")))?;
    if digits.len() > crate::multivector::MAX_DIM {
        return Err(parse_err(at, format!("too many indices in '{name}'")));
    }
    let mut labels = Vec::with_capacity(digits.len());
    for (k, ch) in digits.chars().enumerate() {
        let label = ch.to_digit(10).unwrap() as usize;
        if labels.contains(&label) {
            return Err(parse_err(at + 1 + k, format!("repeated index {label} in '{name}'")));
        }
        labels.push(label);
    }
    Ok(Atom::Blade(labels))
}

fn infer_dim(terms: &[Term], ctx: ParseContext) -> Result<usize> {
    if let Some(d) = ctx.dim {
        return Ok(d);
    }
    let mut dims: Vec<(usize, &str)> = Vec::new();
    for t in terms {
        match &t.atom {
            Atom::Named(n) => dims.push((n.dim(), "a named constant")),
            Atom::Blade(labels) if labels.contains(&0) => dims.push((8, "index 0")),
            _ => {}
        }
    }
    match dims.first() {
        None => Ok(7),
        Some(&(d, _)) => {
            if let Some((other, why)) = dims.iter().find(|(x, _)| *x != d) {
                return Err(Error::AmbiguousDimension(format!(
                    "{why} requires dimension {other}, but another term requires {d}"
                )));
            }
            Ok(d)
        }
    }
}

fn atom_degree(atom: &Atom) -> usize {
    match atom {
        Atom::Scalar => 0,
        Atom::Blade(l) => l.len(),
        Atom::Named(Named::Phi0) => 3,
        Atom::Named(_) => 4,
    }
}

/// Parses a form, inferring dimension and degree unless the context pins
/// them.
pub fn parse_form(input: &str, ctx: ParseContext) -> Result<Form> {
    let toks = lex(input)?;
    let end = input.chars().count();
    if toks.is_empty() {
        return Err(parse_err(0, "empty expression"));
    }
    let mut parser = Parser { toks, pos: 0, end };
    let terms = parser.expr()?;
    if parser.pos < parser.toks.len() {
        return Err(parse_err(parser.here(), "unexpected token"));
    }

    let dim = infer_dim(&terms, ctx)?;
    // a bare zero adapts to whatever degree the rest of the expression has
    let degrees: Vec<usize> = terms
        .iter()
        .filter(|t| !(t.atom == Atom::Scalar && t.coeff.is_zero()))
        .map(|t| atom_degree(&t.atom))
        .collect();
    let degree = match (degrees.first(), ctx.degree) {
        (Some(&d), _) => d,
        (None, Some(d)) => d,
        (None, None) => 0,
    };
    if let Some(&other) = degrees.iter().find(|&&d| d != degree) {
        return Err(Error::DegreeMismatch {
            left: degree,
            right: other,
        });
    }
    if let Some(want) = ctx.degree {
        if want != degree {
            return Err(Error::DegreeMismatch {
                left: want,
                right: degree,
            });
        }
    }

    let mut acc = Form::zero(dim, degree)?;
    for t in terms {
        let f = match t.atom {
            Atom::Scalar if t.coeff.is_zero() => continue,
            Atom::Scalar => Form::scalar(dim, Rational::one())?,
            Atom::Blade(labels) => Form::blade(dim, &labels)?,
            Atom::Named(n) => {
                if n.dim() != dim {
                    return Err(Error::DimensionMismatch {
                        left: dim,
                        right: n.dim(),
                    });
                }
                n.form()
            }
        };
        acc = acc.add(&f.scale(&t.coeff))?;
    }
    Ok(acc)
}

/// [`parse_form`] with nothing pinned.
pub fn parse(input: &str) -> Result<Form> {
    parse_form(input, ParseContext::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, qi};

    fn e(dim: usize, labels: &[usize]) -> Form {
        Form::blade(dim, labels).unwrap()
    }

    #[test]
    fn distributes_groups() {
        let f = parse("-9/10*(3e12 + e47 + e56)").unwrap();
        assert_eq!(f.dim(), 7);
        assert_eq!(f.coeff_of(&[1, 2]).unwrap(), q(-27, 10));
        assert_eq!(f.coeff_of(&[4, 7]).unwrap(), q(-9, 10));
        assert_eq!(f.coeff_of(&[5, 6]).unwrap(), q(-9, 10));
        assert_eq!(parse("-2(e12+e47)").unwrap(), parse("-2e12 - 2*e47").unwrap());
        assert_eq!(parse("2(-2e12+(e47 - e56))").unwrap().coeff_of(&[5, 6]).unwrap(), qi(-2));
    }

    #[test]
    fn written_order_sets_sign() {
        assert_eq!(parse("e21").unwrap(), e(7, &[1, 2]).neg());
    }

    #[test]
    fn dimension_inference() {
        assert_eq!(parse("e123").unwrap().dim(), 7);
        assert_eq!(parse("e0123 + psi0").unwrap().dim(), 8);
        assert_eq!(parse("e01").unwrap().dim(), 8);
        assert!(matches!(parse("e0 + e1").map(|f| f.dim()), Ok(8)));
        assert!(matches!(parse("phi0 + e0123"), Err(Error::AmbiguousDimension(_))));
        assert!(matches!(parse("e8"), Err(Error::BadIndex { index: 8, dim: 7 })));
        assert_eq!(parse_form("e123", ParseContext::dim(8)).unwrap(), e(8, &[1, 2, 3]));
        assert!(matches!(
            parse_form("phi0", ParseContext::dim(8)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn named_constants() {
        assert_eq!(&parse("phi0").unwrap(), G2Model::standard().phi0());
        assert_eq!(&parse("star_phi0").unwrap(), G2Model::standard().star_phi0());
        assert_eq!(&parse("psi0").unwrap(), Spin7Model::standard().psi0());
        assert_eq!(parse("alpha0").unwrap(), Spin7Model::standard().alpha0());
    }

    #[test]
    fn zero_and_scalars() {
        assert!(parse("0").unwrap().is_zero());
        let z = parse_form("0", ParseContext::default().with_degree(2)).unwrap();
        assert_eq!(z.degree(), 2);
        assert_eq!(parse("e12 + 0").unwrap(), e(7, &[1, 2]));
        assert_eq!(parse("-28").unwrap().scalar_value().unwrap(), qi(-28));
    }

    #[test]
    fn degree_errors() {
        assert!(matches!(parse("e1 + e12"), Err(Error::DegreeMismatch { .. })));
        assert!(matches!(
            parse_form("e1", ParseContext::default().with_degree(2)),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let pos = |s: &str| match parse(s) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(pos("e12 + $"), 6);
        assert_eq!(pos("e11"), 2);
        assert_eq!(pos("3*"), 2);
        assert_eq!(pos("(e12"), 4);
        assert_eq!(pos("foo"), 0);
        assert_eq!(pos("1/0 e1"), 2);
        assert_eq!(pos("e12 e34"), 4);
        assert_eq!(pos(""), 0);
    }

    #[test]
    fn long_blades() {
        assert_eq!(parse("-24*e0234567").unwrap(), e(8, &[0, 2, 3, 4, 5, 6, 7]).scale(&qi(-24)));
    }

    #[test]
    fn display_round_trips() {
        let f = parse("-9/10*(3e12 + e47 + e56) + 1/7 e13").unwrap();
        assert_eq!(parse(&f.to_string()).unwrap(), f);
        assert_eq!(parse(&f.factored()).unwrap(), f);
    }
}
