use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// The real quadratic field Q(√D). `D = 0` stands for Q itself.
///
/// Elements carry their field; combining elements of different fields
/// through the arithmetic operators panics, the `try_*` methods report
/// [`Error::FieldMismatch`] instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    d: u64,
}

impl Field {
    pub const RATIONAL: Field = Field { d: 0 };
    pub const GOLDEN: Field = Field { d: 5 };

    pub fn new(d: u64) -> Result<Field> {
        if d == 0 || (d > 1 && is_square_free(d)) {
            Ok(Field { d })
        } else {
            Err(Error::InvalidField(d))
        }
    }

    pub fn d(self) -> u64 {
        self.d
    }

    pub fn is_rational(self) -> bool {
        self.d == 0
    }

    pub fn zero(self) -> FieldElem {
        FieldElem::from_parts(self, Rational::zero(), Rational::zero())
    }

    pub fn one(self) -> FieldElem {
        self.int(1)
    }

    pub fn int(self, n: i64) -> FieldElem {
        self.rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn rational(self, r: Rational) -> FieldElem {
        FieldElem::from_parts(self, r, Rational::zero())
    }

    /// `a + b√D`; fails when `b ≠ 0` in Q.
    pub fn elem(self, a: Rational, b: Rational) -> Result<FieldElem> {
        if self.d == 0 && !b.is_zero() {
            return Err(Error::InvalidField(0));
        }
        Ok(FieldElem::from_parts(self, a, b))
    }

    /// √D. Panics over Q.
    pub fn sqrt_d(self) -> FieldElem {
        assert!(self.d != 0, "√D is not an element of Q");
        FieldElem::from_parts(self, Rational::zero(), Rational::one())
    }

    /// The golden ratio (1+√5)/2. Panics unless D = 5.
    pub fn phi(self) -> FieldElem {
        assert_eq!(self.d, 5, "φ lives in Q(√5)");
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        FieldElem::from_parts(self, half.clone(), half)
    }

    /// Parses the text form `p/q`, `p/q+r/s√D` or `p/q+r/s sqrtD`.
    /// The `D` written in the text must match this field.
    pub fn parse(self, text: &str) -> Result<FieldElem> {
        let text = text.trim();
        let marker = text
            .find('√')
            .map(|i| (i, '√'.len_utf8()))
            .or_else(|| text.find("sqrt").map(|i| (i, 4)));
        let Some((at, len)) = marker else {
            return Ok(self.rational(parse_rational(text)?));
        };
        let d_text = &text[at + len..];
        let d: u64 = d_text
            .parse()
            .map_err(|_| Error::parse("", format!("malformed radicand in {text:?}")))?;
        if d != self.d {
            return Err(Error::FieldMismatch(d, self.d));
        }
        let head = &text[..at];
        let bytes = head.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&i| matches!(bytes[i], b'+' | b'-') && bytes[i - 1] != b'/');
        let (a, b) = match split {
            Some(i) => (
                parse_rational(&head[..i])?,
                parse_rational(head[i..].trim_start_matches('+'))?,
            ),
            None => (Rational::zero(), parse_b(head)?),
        };
        self.elem(a, b)
    }
}

fn parse_b(text: &str) -> Result<Rational> {
    match text {
        "" | "+" => Ok(Rational::one()),
        "-" => Ok(-Rational::one()),
        t => parse_rational(t),
    }
}

fn is_square_free(d: u64) -> bool {
    let mut p = 2u64;
    while p * p <= d {
        if d % (p * p) == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// An element `a + b√D` of a real quadratic field with rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    a: Rational,
    b: Rational,
    field: Field,
}

impl FieldElem {
    fn from_parts(field: Field, a: Rational, b: Rational) -> Self {
        debug_assert!(field.d != 0 || b.is_zero());
        FieldElem { a, b, field }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Rational part.
    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// Coefficient of √D.
    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.b.is_zero() && self.a.is_integer()
    }

    /// Sign of the real number `a + b√D`, decided without floating point.
    pub fn signum(&self) -> i8 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        if sa == 0 {
            return sb;
        }
        // opposite signs: |a| vs |b|√D
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * Rational::from_integer(BigInt::from(self.field.d));
        if lhs > rhs {
            sa
        } else {
            sb
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> FieldElem {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Galois conjugate `a - b√D`.
    pub fn conj(&self) -> FieldElem {
        FieldElem::from_parts(self.field, self.a.clone(), -&self.b)
    }

    /// Field norm `a² - b²D`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(BigInt::from(self.field.d))
    }

    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(FieldElem::from_parts(self.field, &self.a / &n, -&self.b / &n))
    }

    fn check(&self, other: &FieldElem) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch(self.field.d, other.field.d))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        Ok(FieldElem::from_parts(self.field, &self.a + &other.a, &self.b + &other.b))
    }

    pub fn try_sub(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        Ok(FieldElem::from_parts(self.field, &self.a - &other.a, &self.b - &other.b))
    }

    pub fn try_mul(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        let d = Rational::from_integer(BigInt::from(self.field.d));
        let a = &self.a * &other.a + &self.b * &other.b * d;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(FieldElem::from_parts(self.field, a, b))
    }

    pub fn checked_div(&self, other: &FieldElem) -> Result<FieldElem> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> FieldElem {
        FieldElem::from_parts(self.field, &self.a * r, &self.b * r)
    }

    /// Largest integer `n` with `n ≤ self`.
    pub fn floor(&self) -> BigInt {
        use num_integer::Integer;
        let irr = if self.b.is_zero() {
            BigInt::zero()
        } else {
            // floor(√(p/q)) = floor(isqrt(p·q) / q)
            let t = &self.b * &self.b * Rational::from_integer(BigInt::from(self.field.d));
            let r = (t.numer() * t.denom()).sqrt().div_floor(t.denom());
            if self.b.is_positive() {
                r
            } else {
                -(r + 1u32)
            }
        };
        let mut guess = self.a.floor().to_integer() + irr;
        loop {
            let g = self.field.rational(Rational::from_integer(guess.clone()));
            if (self - &g).is_negative() {
                guess -= 1u32;
            } else if !(self - &g - self.field.one()).is_negative() {
                guess += 1u32;
            } else {
                return guess;
            }
        }
    }

    /// `self - floor(self)`, in `[0, 1)`.
    pub fn fract(&self) -> FieldElem {
        self - &self.field.rational(Rational::from_integer(self.floor()))
    }

    pub fn to_f64(&self) -> f64 {
        use super::rational::to_f64;
        to_f64(&self.a) + to_f64(&self.b) * (self.field.d as f64).sqrt()
    }

    /// Text form with an ASCII radical, e.g. `1/2+1/2sqrt5`.
    pub fn to_ascii(&self) -> String {
        self.render("sqrt")
    }

    fn render(&self, radical: &str) -> String {
        if self.b.is_zero() {
            return format_rational(&self.a);
        }
        let d = self.field.d;
        let b = if self.b.is_one() {
            String::new()
        } else if (-&self.b).is_one() {
            "-".to_string()
        } else {
            format_rational(&self.b)
        };
        if self.a.is_zero() {
            format!("{b}{radical}{d}")
        } else if self.b.is_negative() {
            format!("{}{b}{radical}{d}", format_rational(&self.a))
        } else {
            format!("{}+{b}{radical}{d}", format_rational(&self.a))
        }
    }
}

fn sign_of(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("√"))
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordering of the real embedding. Panics on mixed fields.
impl Ord for FieldElem {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

fn unwrap_same<T>(r: Result<T>) -> T {
    match r {
        Ok(v) => v,
        Err(e) => panic!("{e}"),
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                unwrap_same($body(self, rhs))
            }
        }
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                (&self).$m(rhs)
            }
        }
        impl $tr<FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, FieldElem::try_add);
forward_binop!(Sub, sub, FieldElem::try_sub);
forward_binop!(Mul, mul, FieldElem::try_mul);
forward_binop!(Div, div, FieldElem::checked_div);

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::from_parts(self.field, -&self.a, -&self.b)
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, rhs: &FieldElem) {
        *self = &*self * rhs;
    }
}
