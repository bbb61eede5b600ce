//! Exact arithmetic in ℚ(q).
//!
//! A [`RationalFunction`] is kept as `num / den` with integer polynomials in
//! canonical form: `gcd(num, den) = 1` (including integer content), the
//! leading coefficient of `den` is positive, and zero is `0 / 1`. Equality is
//! therefore structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::expr::{self, ExprValue, GenKind};
use crate::field::Field;
use crate::poly::IntPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

/// gcd with a shortcut for monomial operands, which dominate in practice.
fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    fn mono_gcd(m: &IntPoly, other: &IntPoly) -> IntPoly {
        let k = m.valuation().unwrap();
        let c = m.coeffs()[k].gcd(&other.content());
        let v = other.valuation().unwrap_or(k).min(k);
        IntPoly::monomial(c, v)
    }
    if a.is_zero() || b.is_zero() {
        return a.gcd(b);
    }
    if a.is_monomial() {
        return mono_gcd(a, b);
    }
    if b.is_monomial() {
        return mono_gcd(b, a);
    }
    a.gcd(b)
}

impl RationalFunction {
    fn from_parts_unchecked(num: IntPoly, den: IntPoly) -> Self {
        RationalFunction { num, den }
    }

    /// Builds `num / den` in canonical form.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.is_one() {
            (num, den)
        } else {
            let g = poly_gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                let n = num.div_exact(&g).expect("gcd divides numerator");
                let d = den.div_exact(&g).expect("gcd divides denominator");
                (n, d)
            }
        };
        if den.leading().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        Self::from_parts_unchecked(p, IntPoly::one())
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::from_poly(IntPoly::constant(n.into()))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::reduce(
            IntPoly::constant(r.numer().clone()),
            IntPoly::constant(r.denom().clone()),
        )
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_poly(IntPoly::monomial(BigInt::one(), 1))
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let m = IntPoly::monomial(BigInt::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            Self::from_parts_unchecked(IntPoly::one(), m)
        }
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0)
    }

    /// The rational constant, if this scalar does not depend on `q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if !self.is_constant() {
            return None;
        }
        let n = self.num.coeffs().first().cloned().unwrap_or_else(BigInt::zero);
        Some(BigRational::new(n, self.den.coeffs()[0].clone()))
    }

    /// Substitutes a rational value for `q`. `None` if the denominator
    /// vanishes there.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let ev = |p: &IntPoly| {
            p.coeffs()
                .iter()
                .rev()
                .fold(BigRational::zero(), |acc, c| {
                    acc * x + BigRational::from_integer(c.clone())
                })
        };
        let d = ev(&self.den);
        if d.is_zero() {
            None
        } else {
            Some(ev(&self.num) / d)
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul_ref(&other.inv_unchecked()))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv_unchecked())
    }

    fn inv_unchecked(&self) -> Self {
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Self::from_parts_unchecked(num, den)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = u32::try_from(e.unsigned_abs())
            .map_err(|_| Error::InvalidData("exponent out of range".into()))?;
        Ok(Self::from_parts_unchecked(base.num.pow(e), base.den.pow(e)))
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::reduce(num, self.den.mul(&other.den))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        // cross-cancel first to keep the operands small
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let a = self.num.div_exact(&g1).unwrap();
        let d = other.den.div_exact(&g1).unwrap();
        let c = other.num.div_exact(&g2).unwrap();
        let b = self.den.div_exact(&g2).unwrap();
        Self::reduce(a.mul(&c), b.mul(&d))
    }

    fn neg_ref(&self) -> Self {
        Self::from_parts_unchecked(self.num.neg(), self.den.clone())
    }

    /// Deterministic total order, for sorting output only.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.den
            .cmp_canonical(&other.den)
            .then_with(|| self.num.cmp_canonical(&other.num))
    }

    /// True if the printed form needs parentheses when used as a coefficient.
    pub fn is_compound(&self) -> bool {
        let s = self.to_string();
        s.contains(" + ") || s.contains(" - ") || s.contains('/')
    }
}

/// Writes `sum c_i q^(i - shift)` from the highest exponent down.
fn write_laurent(f: &mut fmt::Formatter<'_>, p: &IntPoly, shift: i64) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let e = i as i64 - shift;
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        match (e, abs.is_one()) {
            (0, _) => write!(f, "{abs}")?,
            (1, true) => write!(f, "q")?,
            (1, false) => write!(f, "{abs}*q")?,
            (_, true) => write!(f, "q^{e}")?,
            (_, false) => write!(f, "{abs}*q^{e}")?,
        }
    }
    Ok(())
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_monomial() && self.den.leading().unwrap().is_one() {
            return write_laurent(f, &self.num, self.den.degree().unwrap() as i64);
        }
        write!(f, "(")?;
        write_laurent(f, &self.num, 0)?;
        write!(f, ")/(")?;
        write_laurent(f, &self.den, 0)?;
        write!(f, ")")
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl ExprValue for RationalFunction {
    fn int(n: BigInt) -> Self {
        Self::from_int(n)
    }
    fn q(_pos: usize) -> Result<Self> {
        Ok(Self::q())
    }
    fn gen(_kind: GenKind, _indices: &[usize], pos: usize) -> Result<Self> {
        Err(Error::Parse {
            pos,
            msg: "generators are not allowed in a scalar".into(),
        })
    }
    fn add(self, other: Self) -> Self {
        self.add_ref(&other)
    }
    fn sub(self, other: Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul(self, other: Self) -> Self {
        self.mul_ref(&other)
    }
    fn neg(self) -> Self {
        self.neg_ref()
    }
    fn div(self, other: Self, _pos: usize) -> Result<Self> {
        self.checked_div(&other)
    }
    fn pow(self, exp: i64, _pos: usize) -> Result<Self> {
        RationalFunction::pow(&self, exp)
    }
}

/// Parses a scalar from the text grammar.
pub fn parse_scalar(text: &str) -> Result<RationalFunction> {
    expr::parse(text)?.eval()
}

impl FromStr for RationalFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_parts_unchecked(IntPoly::zero(), IntPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_int(1)
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                $body(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &'a RationalFunction) -> RationalFunction {
                $body(&self, rhs)
            }
        }
        impl<'a> $trait<RationalFunction> for &'a RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                $body(self, &rhs)
            }
        }
        impl<'a, 'b> $trait<&'b RationalFunction> for &'a RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &'b RationalFunction) -> RationalFunction {
                $body(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &RationalFunction, b: &RationalFunction| a.add_ref(b));
forward_binop!(Sub, sub, |a: &RationalFunction, b: &RationalFunction| a
    .add_ref(&b.neg_ref()));
forward_binop!(Mul, mul, |a: &RationalFunction, b: &RationalFunction| a.mul_ref(b));
forward_binop!(Div, div, |a: &RationalFunction, b: &RationalFunction| a
    .checked_div(b)
    .expect("division by zero scalar"));

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        self.neg_ref()
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        self.neg_ref()
    }
}

impl Field for RationalFunction {
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }

    fn from_i64(n: i64) -> Self {
        Self::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(t: &str) -> RationalFunction {
        parse_scalar(t).unwrap()
    }

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn parse_literal_polynomial() {
        let a = s("q^2 - 1");
        assert_eq!(a.numer(), &ip(&[-1, 0, 1]));
        assert!(a.denom().is_one());
    }

    #[test]
    fn parse_cancels_common_factor() {
        assert_eq!(s("(q-1)/(q^2-1)"), s("1/(q+1)"));
        assert_eq!(s("(q-1)/(q^2-1)").denom(), &ip(&[1, 1]));
    }

    #[test]
    fn negative_exponent_is_reciprocal() {
        assert_eq!(s("q^-1"), RationalFunction::q().inv().unwrap());
        assert_eq!(s("q^-1").to_string(), "q^-1");
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(s("q - 1") + s("1"), s("q"));
        assert!((s("1/(q+1)") * s("q+1")).is_one());
        assert!(RationalFunction::zero().inv().is_err());
        assert!(matches!(parse_scalar("1/(q-q)"), Err(Error::DivisionByZero)));
    }

    #[test]
    fn canonical_sign_and_content() {
        let a = s("(2*q)/(-4*q^2 - 4)");
        assert_eq!(a.numer(), &ip(&[0, -1]));
        assert_eq!(a.denom(), &ip(&[2, 0, 2]));
        assert_eq!(s("6/4"), s("3/2"));
    }

    #[test]
    fn printing_round_trips() {
        for t in [
            "1 - q^-2",
            "q - q^-1",
            "-3*q^2 + q^-1",
            "(q + 1)/(q^2 + 2)",
            "(1)/(2)",
            "(-q)/(3)",
            "0",
            "7",
        ] {
            let a = s(t);
            assert_eq!(a.to_string(), t);
            assert_eq!(s(&a.to_string()), a);
        }
    }

    #[test]
    fn evaluation_at_one() {
        let a = s("(q^2 - 1)/(q - 1)");
        assert_eq!(a.eval(&BigRational::one()), Some(BigRational::from_integer(2.into())));
        assert_eq!(s("1/(q-1)").eval(&BigRational::one()), None);
    }

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| ip(&c))
    }

    prop_compose! {
        fn arb_scalar()(n in arb_poly(), d in arb_poly(), shift in -2i64..=2) -> RationalFunction {
            let d = if d.is_zero() { IntPoly::one() } else { d };
            RationalFunction::new(n, d).unwrap() * RationalFunction::q_pow(shift)
        }
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn equality_agrees_with_zero_difference(a in arb_scalar(), b in arb_scalar()) {
            prop_assert_eq!(a == b, (&a - &b).is_zero());
        }

        #[test]
        fn print_parse_fixed_point(a in arb_scalar()) {
            let text = a.to_string();
            let back = parse_scalar(&text).unwrap();
            prop_assert_eq!(&back, &a);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
