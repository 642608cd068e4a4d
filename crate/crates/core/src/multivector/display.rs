use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Blade, Form};
use crate::linalg::Rational;

pub(crate) fn blade_label(form_dim: usize, blade: Blade) -> String {
    let base = super::index_base(form_dim);
    let mut s = String::from("e");
    for p in blade.positions() {
        s.push_str(&(p + base).to_string());
    }
    s
}

/// Renders `c₁*l₁ + c₂*l₂ ...` with unit coefficients elided. An empty
/// label stands for the scalar unit.
pub(crate) fn render_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (String, &'a Rational)>,
{
    let mut s = String::new();
    for (i, (label, c)) in terms.into_iter().enumerate() {
        let magnitude = c.abs();
        s.push_str(match (i, c.is_negative()) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        if label.is_empty() {
            s.push_str(&magnitude.to_string());
        } else if magnitude.is_one() {
            s.push_str(&label);
        } else {
            s.push_str(&format!("{magnitude}*{label}"));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Common rational factor of the coefficients, signed like the first one,
/// so that dividing by it leaves coprime integers.
pub(crate) fn content<'a, I>(coeffs: I) -> Option<Rational>
where
    I: IntoIterator<Item = &'a Rational>,
{
    let mut it = coeffs.into_iter();
    let first = it.next()?;
    let (mut num, mut den) = (first.numer().abs(), first.denom().clone());
    for c in it {
        num = num.gcd(c.numer());
        den = den.lcm(c.denom());
    }
    let sign = if first.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    Some(Rational::new(sign * num, den))
}

/// `render_terms` with the common factor pulled out:
/// `-9/10*(3*e12 + e47 + e56)`, `-(e147 + e156)`.
pub(crate) fn render_factored(terms: &[(String, Rational)]) -> String {
    let Some(content) = content(terms.iter().map(|(_, c)| c)) else {
        return "0".into();
    };
    if terms.len() == 1 || content.is_one() {
        return render_terms(terms.iter().map(|(l, c)| (l.clone(), c)));
    }
    let scaled: Vec<(String, Rational)> = terms
        .iter()
        .map(|(l, c)| (l.clone(), c / &content))
        .collect();
    let inner = render_terms(scaled.iter().map(|(l, c)| (l.clone(), c)));
    if content == -Rational::one() {
        format!("-({inner})")
    } else {
        debug_assert!(!content.is_zero());
        format!("{content}*({inner})")
    }
}

impl Form {
    fn labelled_terms(&self) -> Vec<(String, Rational)> {
        self.terms()
            .map(|(b, c)| {
                let label = if b == Blade::EMPTY {
                    String::new()
                } else {
                    blade_label(self.dim(), b)
                };
                (label, c.clone())
            })
            .collect()
    }

    /// Common factor of all coefficients (see [`Form::factored`]).
    pub fn content(&self) -> Option<Rational> {
        content(self.terms().map(|(_, c)| c))
    }

    /// Expansion with the common factor pulled out, e.g.
    /// `-9/10*(3*e12 + e47 + e56)` or `-(e147 + e156)`.
    pub fn factored(&self) -> String {
        render_factored(&self.labelled_terms())
    }
}

/// Canonical expansion: blades in ascending order, `c*eIJK` for non-unit
/// coefficients, `0` for the zero form.
impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.labelled_terms();
        f.write_str(&render_terms(terms.iter().map(|(l, c)| (l.clone(), c))))
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form<{},{}>({})", self.dim(), self.degree(), self)
    }
}
