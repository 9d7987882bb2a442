//! The expression grammar used inside JobSpec string fields.
//!
//! ```text
//! tensor  := tprod (("+" | "-") tprod)*
//! tprod   := ["-"] product ("ox" product)*
//! product := power (("*" | "/") power)*
//! power   := atom ["^" integer]
//! atom    := integer | "q" | ident ["_" integer] | "(" sum ")"
//! ```
//!
//! `sum` is `tensor` without `ox`. Division is only by scalar expressions.
//! Results are in the free algebra; callers normalize.

use hopfcyc::{Alphabet, NCPoly, Scalar, TensorElem};
use num::{BigInt, BigRational};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("column {column}: unknown generator `{name}`")]
    UnknownGenerator { column: usize, name: String },
    #[error("column {column}: bad index for `{name}`: {detail}")]
    BadIndex { column: usize, name: String, detail: String },
}

impl ExprError {
    fn parse(column: usize, message: impl Into<String>) -> Self {
        ExprError::Parse { column, message: message.into() }
    }
}

/// Whether `q` may appear.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldMode {
    Rational,
    RationalFunction,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String, Option<u32>),
    Q,
    Ox,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' | '−' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, col));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("digits")), col));
            continue;
        }
        if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '\'') {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            let mut index = None;
            if i < chars.len() && chars[i] == '_' {
                let s = i + 1;
                let mut e = s;
                while e < chars.len() && chars[e].is_ascii_digit() {
                    e += 1;
                }
                if e == s {
                    return Err(ExprError::parse(i + 1, "expected digits after `_`"));
                }
                let digits: String = chars[s..e].iter().collect();
                let n = digits.parse::<u32>().map_err(|_| ExprError::BadIndex {
                    column: col,
                    name: name.clone(),
                    detail: format!("{digits} is too large"),
                })?;
                index = Some(n);
                i = e;
            }
            let tok = match (name.as_str(), index) {
                ("ox", None) => Tok::Ox,
                ("q", None) => Tok::Q,
                _ => Tok::Ident(name, index),
            };
            out.push((tok, col));
            continue;
        }
        return Err(ExprError::parse(col, format!("unexpected character `{c}`")));
    }
    Ok(out)
}

/// A parse in progress; tensors of uneven degree are rejected at the end.
struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    alphabet: &'a Alphabet,
    field: FieldMode,
}

/// Summands of a tensor expression as `(coefficient, slots)`.
type Terms = Vec<(Scalar, Vec<NCPoly>)>;

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn tensor(&mut self, allow_ox: bool) -> Result<Terms, ExprError> {
        let mut out: Terms = Vec::new();
        let mut sign = Scalar::one();
        if self.eat(&Tok::Minus) {
            sign = Scalar::int(-1);
        }
        loop {
            let mut slots = vec![self.product()?];
            while allow_ox && self.eat(&Tok::Ox) {
                slots.push(self.product()?);
            }
            out.push((sign.clone(), slots));
            sign = match self.peek() {
                Some(Tok::Plus) => Scalar::one(),
                Some(Tok::Minus) => Scalar::int(-1),
                _ => break,
            };
            self.pos += 1;
        }
        Ok(out)
    }

    fn sum(&mut self) -> Result<NCPoly, ExprError> {
        let terms = self.tensor(false)?;
        let mut acc = NCPoly::zero();
        for (c, slots) in terms {
            acc.add_scaled(&slots[0], &c);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<NCPoly, ExprError> {
        let mut acc = self.power()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = acc.concat(&self.power()?);
            } else if self.peek() == Some(&Tok::Slash) {
                let col = self.col();
                self.pos += 1;
                let d = self.power()?;
                let Some(c) = d.as_constant() else {
                    return Err(ExprError::parse(col, "division by a non-scalar"));
                };
                let Some(inv) = c.checked_inv() else {
                    return Err(ExprError::parse(col, "division by zero"));
                };
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<NCPoly, ExprError> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let col = self.col();
        let negative = self.eat(&Tok::Minus);
        let Some(Tok::Int(n)) = self.peek().cloned() else {
            return Err(ExprError::parse(col, "expected an integer exponent"));
        };
        self.pos += 1;
        let e: u32 = n.try_into().map_err(|_| ExprError::parse(col, "exponent too large"))?;
        let base = if negative {
            match base.as_constant().and_then(|c| c.checked_inv()) {
                Some(inv) => NCPoly::constant(inv),
                None => return Err(ExprError::parse(col, "negative exponents need a nonzero scalar base")),
            }
        } else {
            base
        };
        let mut acc = NCPoly::one();
        for _ in 0..e {
            acc = acc.concat(&base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<NCPoly, ExprError> {
        let col = self.col();
        let Some((tok, _)) = self.toks.get(self.pos).cloned() else {
            return Err(ExprError::parse(col, "unexpected end of expression"));
        };
        self.pos += 1;
        match tok {
            Tok::Int(n) => Ok(NCPoly::constant(Scalar::from_rational(BigRational::from_integer(n)))),
            Tok::Q => match self.field {
                FieldMode::RationalFunction => Ok(NCPoly::constant(Scalar::q())),
                FieldMode::Rational => Err(ExprError::parse(col, "`q` needs the rational-function field")),
            },
            Tok::Ident(name, index) => {
                let Some(fid) = self.alphabet.family_id(&name) else {
                    return Err(ExprError::UnknownGenerator { column: col, name });
                };
                let indexed = self.alphabet.family(fid).indexed;
                match (indexed, index) {
                    (true, None) => Err(ExprError::BadIndex { column: col, name, detail: "index required".into() }),
                    (false, Some(_)) => Err(ExprError::BadIndex { column: col, name, detail: "not an indexed family".into() }),
                    _ => self
                        .alphabet
                        .symbol(&name, index)
                        .map(NCPoly::gen)
                        .map_err(|e| ExprError::BadIndex { column: col, name, detail: e.to_string() }),
                }
            }
            Tok::LParen => {
                let inner = self.sum()?;
                if !self.eat(&Tok::RParen) {
                    return Err(ExprError::parse(self.col(), "expected `)`"));
                }
                Ok(inner)
            }
            other => Err(ExprError::parse(col, format!("unexpected {}", describe(&other)))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Ox => "`ox`",
        Tok::Plus => "`+`",
        Tok::Minus => "`-`",
        Tok::Star => "`*`",
        Tok::Slash => "`/`",
        Tok::Caret => "`^`",
        Tok::RParen => "`)`",
        _ => "token",
    }
}

fn run<T>(
    src: &str,
    alphabet: &Alphabet,
    field: FieldMode,
    f: impl FnOnce(&mut Parser<'_>) -> Result<T, ExprError>,
) -> Result<T, ExprError> {
    let toks = lex(src)?;
    let end = src.chars().count() + 1;
    let mut p = Parser { toks, pos: 0, end, alphabet, field };
    let out = f(&mut p)?;
    if p.pos < p.toks.len() {
        return Err(ExprError::parse(p.col(), "trailing input"));
    }
    Ok(out)
}

/// A polynomial in the free algebra on `alphabet`.
pub fn parse_poly(src: &str, alphabet: &Alphabet, field: FieldMode) -> Result<NCPoly, ExprError> {
    run(src, alphabet, field, |p| p.sum())
}

/// A scalar: an expression with no generators.
pub fn parse_scalar(src: &str, field: FieldMode) -> Result<Scalar, ExprError> {
    let empty = Alphabet::new(Vec::new());
    let p = parse_poly(src, &empty, field)?;
    Ok(p.as_constant().unwrap_or_else(Scalar::zero))
}

/// A tensor with factors separated by `ox`. A bare polynomial has degree 1.
pub fn parse_tensor(src: &str, alphabet: &Alphabet, field: FieldMode) -> Result<TensorElem, ExprError> {
    let terms = run(src, alphabet, field, |p| p.tensor(true))?;
    let degree = terms[0].1.len();
    let mut out = TensorElem::zero(degree);
    for (c, slots) in terms {
        if slots.len() != degree {
            return Err(ExprError::parse(1, format!("summands have {} and {} tensor factors", degree, slots.len())));
        }
        out.add_scaled(&TensorElem::from_polys(&slots), &c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfcyc::builders::build_cm_h1;
    use proptest::prelude::*;

    fn h1_alphabet() -> hopfcyc::HopfPresentation {
        build_cm_h1().unwrap()
    }

    #[test]
    fn rational_coefficients_and_indices() {
        let h = h1_alphabet();
        let p = parse_poly("delta_2 - 1/2 * delta_1 * delta_1", h.alphabet(), FieldMode::Rational).unwrap();
        let d1 = h.gen("delta", Some(1)).unwrap();
        let mut want = h.gen("delta", Some(2)).unwrap();
        want.add_scaled(&d1.concat(&d1), &Scalar::ratio(-1, 2));
        assert_eq!(p, want);
    }

    #[test]
    fn tensor_candidate() {
        let h = h1_alphabet();
        let t = parse_tensor("X ox Y - Y ox X - delta_1*Y ox Y", h.alphabet(), FieldMode::Rational).unwrap();
        assert_eq!(t.degree(), 2);
        assert_eq!(t.len(), 3);
    }

    #[test]
    fn q_is_gated_by_the_field() {
        let e = parse_scalar("q + 1", FieldMode::Rational).unwrap_err();
        assert!(matches!(e, ExprError::Parse { column: 1, .. }), "{e}");
        let s = parse_scalar("(q^2 - 1)/(q)", FieldMode::RationalFunction).unwrap();
        let q = Scalar::q();
        assert_eq!(s, &(&(&q * &q) - &Scalar::one()) * &q.inv());
        assert_eq!(parse_scalar("q^-2", FieldMode::RationalFunction).unwrap(), (&q * &q).inv());
        assert!(parse_scalar("0^-1", FieldMode::Rational).is_err());
    }

    #[test]
    fn errors_carry_columns() {
        let h = h1_alphabet();
        let a = h.alphabet();
        assert_eq!(
            parse_poly("X + Z", a, FieldMode::Rational).unwrap_err(),
            ExprError::UnknownGenerator { column: 5, name: "Z".into() }
        );
        assert!(matches!(parse_poly("delta", a, FieldMode::Rational), Err(ExprError::BadIndex { column: 1, .. })));
        assert!(matches!(parse_poly("X_1", a, FieldMode::Rational), Err(ExprError::BadIndex { .. })));
        assert!(matches!(parse_poly("(X + Y", a, FieldMode::Rational), Err(ExprError::Parse { column: 7, .. })));
        assert!(matches!(parse_poly("X / Y", a, FieldMode::Rational), Err(ExprError::Parse { column: 3, .. })));
        assert!(matches!(parse_poly("X Y", a, FieldMode::Rational), Err(ExprError::Parse { column: 3, .. })));
        assert!(parse_tensor("X ox Y + X", a, FieldMode::Rational).is_err());
        assert!(parse_poly("1/0", a, FieldMode::Rational).is_err());
    }

    proptest! {
        #[test]
        fn rendered_polynomials_parse_back(
            terms in prop::collection::vec((-5i64..6, 1i64..4, prop::collection::vec(0usize..4, 0..4)), 0..5)
        ) {
            let h = h1_alphabet();
            let names = ["X", "Y", "delta_1", "delta_2"];
            let mut p = NCPoly::zero();
            for (n, d, w) in &terms {
                let mut m = NCPoly::constant(Scalar::ratio(*n, *d));
                for &i in w {
                    m = m.concat(&parse_poly(names[i], h.alphabet(), FieldMode::Rational).unwrap());
                }
                p = &p + &m;
            }
            let shown = p.display(h.alphabet()).to_string();
            prop_assert_eq!(parse_poly(&shown, h.alphabet(), FieldMode::Rational).unwrap(), p);
        }
    }
}
