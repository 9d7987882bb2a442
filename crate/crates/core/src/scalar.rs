//! Exact scalars: rationals and rational functions in a single variable `q`.
//!
//! Every value is kept in canonical form. Rationals are reduced with a
//! positive denominator (via `BigRational`). Rational functions keep a coprime
//! numerator/denominator pair with a monic denominator, and collapse back to
//! the rational variant whenever both parts are constant.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

/// Dense univariate polynomial over ℚ, little-endian coefficients, no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly(Vec<BigRational>);

impl UPoly {
    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = UPoly(vec![c]);
        p.trim();
        p
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The monomial `q`.
    pub fn var() -> Self {
        UPoly(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = UPoly(coeffs);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn constant_value(&self) -> BigRational {
        self.0.first().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn lead(&self) -> Option<&BigRational> {
        self.0.last()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly(self.0.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            Some(l) => self.scale(&l.recip()),
            None => UPoly::zero(),
        }
    }

    /// Quotient and remainder of Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead_inv = d.lead().unwrap().recip();
        let mut rem = self.0.clone();
        let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() * &lead_inv;
            if !c.is_zero() {
                for (i, dc) in d.0.iter().enumerate() {
                    let v = &rem[k + i] - &c * dc;
                    rem[k + i] = v;
                }
                quot[k] = c;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (UPoly::from_coeffs(quot), UPoly::from_coeffs(rem))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let zero = BigRational::zero();
        let v = (0..n)
            .map(|i| self.0.get(i).unwrap_or(&zero) + o.0.get(i).unwrap_or(&zero))
            .collect();
        UPoly::from_coeffs(v)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, o: &UPoly) -> UPoly {
        self + &(-o)
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(v)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl UPoly {
    /// Renders in the expression grammar, e.g. `q^2 - 1/2*q + 3`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&fmt_rational(&a));
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", fmt_rational(&a), mono));
            }
        }
        out
    }
}

/// An exact element of ℚ or ℚ(q).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    /// `num/den` with `den` monic, `gcd(num, den) = 1`, and at least one part
    /// non-constant.
    Func { num: UPoly, den: UPoly },
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::Rat(r)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Scalar::Func { num: UPoly::var(), den: UPoly::one() }
    }

    /// Canonical constructor from numerator and denominator polynomials.
    pub fn from_polys(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Scalar::zero();
        }
        let g = UPoly::gcd(&num, &den);
        let (mut n, _) = num.div_rem(&g);
        let (mut d, _) = den.div_rem(&g);
        let l = d.lead().unwrap().recip();
        n = n.scale(&l);
        d = d.scale(&l);
        if n.is_constant() && d.is_constant() {
            Scalar::Rat(n.constant_value())
        } else {
            Scalar::Func { num: n, den: d }
        }
    }

    fn parts(&self) -> (UPoly, UPoly) {
        match self {
            Scalar::Rat(r) => (UPoly::constant(r.clone()), UPoly::one()),
            Scalar::Func { num, den } => (num.clone(), den.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    /// True for the rational variant (no dependence on `q`).
    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Func { .. } => None,
        }
    }

    pub fn checked_inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) if r.is_zero() => None,
            Scalar::Rat(r) => Some(Scalar::Rat(r.recip())),
            Scalar::Func { num, den } => Some(Scalar::from_polys(den.clone(), num.clone())),
        }
    }

    pub fn inv(&self) -> Scalar {
        self.checked_inv().expect("inverse of zero scalar")
    }

    pub fn pow(&self, e: i64) -> Scalar {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// Numerator and denominator polynomials (denominator monic).
    pub fn numer_denom(&self) -> (UPoly, UPoly) {
        self.parts()
    }

    /// A size measure used for pivot selection: total polynomial degree, then
    /// bit length of the rational height.
    pub fn complexity(&self) -> (usize, u64) {
        match self {
            Scalar::Rat(r) => (0, r.numer().bits() + r.denom().bits()),
            Scalar::Func { num, den } => (
                num.degree().unwrap_or(0) + den.degree().unwrap_or(0),
                num.coeffs().iter().chain(den.coeffs()).map(|c| c.numer().bits() + c.denom().bits()).sum(),
            ),
        }
    }

    /// Total order on rationals; rational functions compare by rendering.
    pub fn cmp_canonical(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            _ => self.to_string().cmp(&other.to_string()),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (self, o) {
            return Scalar::Rat(a + b);
        }
        let (an, ad) = self.parts();
        let (bn, bd) = o.parts();
        if ad == bd {
            return Scalar::from_polys(&an + &bn, ad);
        }
        Scalar::from_polys(&(&an * &bd) + &(&bn * &ad), &ad * &bd)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Func { num, den } => Scalar::Func { num: -num, den: den.clone() },
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(a), Scalar::Func { num, den }) | (Scalar::Func { num, den }, Scalar::Rat(a)) => {
                if a.is_zero() {
                    Scalar::zero()
                } else {
                    Scalar::Func { num: num.scale(a), den: den.clone() }
                }
            }
            _ => {
                let (an, ad) = self.parts();
                let (bn, bd) = o.parts();
                Scalar::from_polys(&an * &bn, &ad * &bd)
            }
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        self * &o.inv()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", fmt_rational(r)),
            Scalar::Func { num, den } => {
                if den.is_constant() {
                    write!(f, "({})", num.render("q"))
                } else {
                    write!(f, "({})/({})", num.render("q"), den.render("q"))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> Scalar {
        Scalar::q()
    }

    #[test]
    fn rational_function_canonical_form() {
        // (q^2 - 1)/(q - 1) = q + 1
        let one = Scalar::one();
        let a = &(&(&q() * &q()) - &one) / &(&q() - &one);
        assert_eq!(a, &q() + &one);
        // q * q^-1 collapses to the rational 1
        let b = &q() * &q().inv();
        assert!(b.is_one());
        assert!(b.is_rational());
    }

    #[test]
    fn zero_is_unique() {
        let z = &q() - &q();
        assert_eq!(z, Scalar::zero());
        assert!(z.is_zero());
    }

    #[test]
    fn display_is_stable() {
        assert_eq!(Scalar::ratio(-3, 6).to_string(), "-1/2");
        assert_eq!(q().inv().to_string(), "(1)/(q)");
        assert_eq!((&q() * &Scalar::int(2)).to_string(), "(2*q)");
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-6i64..6, 1i64..5, -3i64..3, 0usize..3).prop_map(|(n, d, a, k)| {
            let base = Scalar::ratio(n, d);
            match k {
                0 => base,
                1 => &base + &(&q() * &Scalar::int(a)),
                _ => &base / &(&q() + &Scalar::int(a.abs() + 1)),
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv()).is_one());
            }
        }
    }
}
