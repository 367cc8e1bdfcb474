//! Exact arithmetic in the Gaussian rationals `Q(i)`.
//!
//! [`GaussRat`] stores its real and imaginary parts as reduced fractions.
//! Each part is kept in machine words while it fits and is promoted to a
//! big rational on overflow, so the common case (halves, signs, powers of
//! `i`) never allocates.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors raised by scalar arithmetic and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

/// An exact rational number with a small-integer fast path.
#[derive(Clone, Debug)]
pub enum Rat {
    /// Reduced fraction `num/den` with `den > 0`.
    Small(i64, i64),
    /// Reduced fraction that does not fit in `i64`.
    Big(BigRational),
}

impl Rat {
    pub fn zero() -> Self {
        Rat::Small(0, 1)
    }

    pub fn one() -> Self {
        Rat::Small(1, 1)
    }

    pub fn from_int(n: i64) -> Self {
        Rat::Small(n, 1)
    }

    /// Builds `num/den`, reducing to lowest terms.
    pub fn new(num: i64, den: i64) -> Result<Self, ScalarError> {
        if den == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::from_i128(num as i128, den as i128))
    }

    fn from_i128(mut n: i128, mut d: i128) -> Self {
        debug_assert!(d != 0);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rat::Small(n, d),
            _ => Rat::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational arithmetic keeps results reduced with positive denominators.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rat::Small(n, d),
            _ => Rat::Big(r),
        }
    }

    /// The nonnegative rational square root, when one exists.
    pub fn sqrt_exact(&self) -> Option<Rat> {
        if self.signum() < 0 {
            return None;
        }
        let (n, d) = (self.numer(), self.denom());
        let (rn, rd) = (n.sqrt(), d.sqrt());
        (&rn * &rn == n && &rd * &rd == d).then(|| Rat::from_big(BigRational::new(rn, rd)))
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rat::Small(n, _) => BigInt::from(*n),
            Rat::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rat::Small(_, d) => BigInt::from(*d),
            Rat::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Small(1, 1))
    }

    pub fn signum(&self) -> i32 {
        match self {
            Rat::Small(n, _) => n.signum() as i32,
            Rat::Big(r) => {
                if r.is_positive() {
                    1
                } else if r.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn add(&self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    return Self::from_i128(a + c, b);
                }
                Self::from_i128(a * d + c * b, b * d)
            }
            _ => Self::from_big(self.to_big() + o.to_big()),
        }
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::Small(n, d) => match n.checked_neg() {
                Some(m) => Rat::Small(m, *d),
                None => Self::from_big(-self.to_big()),
            },
            Rat::Big(r) => Self::from_big(-r.clone()),
        }
    }

    pub fn sub(&self, o: &Rat) -> Rat {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Self::from_big(self.to_big() * o.to_big()),
        }
    }

    pub fn inv(&self) -> Result<Rat, ScalarError> {
        match self {
            Rat::Small(0, _) => Err(ScalarError::DivisionByZero),
            Rat::Small(n, d) => Ok(Self::from_i128(*d as i128, *n as i128)),
            Rat::Big(r) => Ok(Self::from_big(r.recip())),
        }
    }
}

impl PartialEq for Rat {
    fn eq(&self, o: &Rat) -> bool {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => a == c && b == d,
            (Rat::Big(x), Rat::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Rat {}

impl Hash for Rat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Rat::Small(n, d) => {
                n.hash(state);
                d.hash(state);
            }
            Rat::Big(r) => r.hash(state),
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, o: &Rat) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Rat {
    fn cmp(&self, o: &Rat) -> Ordering {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&o.to_big()),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(n, 1) => write!(f, "{n}"),
            Rat::Small(n, d) => write!(f, "{n}/{d}"),
            Rat::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Rat::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

fn parse_rat(s: &str) -> Result<Rat, ScalarError> {
    let err = || ScalarError::Parse(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(ScalarError::DivisionByZero);
    }
    Ok(Rat::from_big(BigRational::new(n, d)))
}

/// An element `re + im·i` of `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    re: Rat,
    im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        Self::new(Rat::one(), Rat::zero())
    }

    /// The imaginary unit, which is the fixed primitive 4th root of unity.
    pub fn i() -> Self {
        Self::new(Rat::zero(), Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(Rat::from_int(n), Rat::zero())
    }

    /// `num/den` as a real element. Panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::new(Rat::new(num, den).expect("zero denominator"), Rat::zero())
    }

    /// `(a/b) + (c/d)·i`.
    pub fn from_parts(a: i64, b: i64, c: i64, d: i64) -> Result<Self, ScalarError> {
        Ok(Self::new(Rat::new(a, b)?, Rat::new(c, d)?))
    }

    pub fn half() -> Self {
        Self::frac(1, 2)
    }

    pub fn re(&self) -> &Rat {
        &self.re
    }

    pub fn im(&self) -> &Rat {
        &self.im
    }

    pub fn re_num(&self) -> BigInt {
        self.re.numer()
    }

    pub fn re_den(&self) -> BigInt {
        self.re.denom()
    }

    pub fn im_num(&self) -> BigInt {
        self.im.numer()
    }

    pub fn im_den(&self) -> BigInt {
        self.im.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), self.im.neg())
    }

    /// `re² + im²`.
    pub fn norm(&self) -> Rat {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        let n = self.norm().inv()?;
        Ok(Self::new(self.re.mul(&n), self.im.neg().mul(&n)))
    }

    pub fn try_div(&self, o: &GaussRat) -> Result<Self, ScalarError> {
        Ok(self * &o.inv()?)
    }

    /// `i^n`, with `n` taken modulo 4.
    pub fn xi_power(n: i64) -> Self {
        match n.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => Self::from_int(-1),
            _ => -Self::i(),
        }
    }

    /// `(-1)^n`.
    pub fn sign(n: i64) -> Self {
        if n.rem_euclid(2) == 0 {
            Self::one()
        } else {
            Self::from_int(-1)
        }
    }

    /// A square root in `Q(i)`, when one exists.
    pub fn sqrt_exact(&self) -> Option<Self> {
        let (a, b) = (self.re.clone(), self.im.clone());
        if b.is_zero() {
            return if a.signum() >= 0 {
                a.sqrt_exact().map(|r| Self::new(r, Rat::zero()))
            } else {
                a.neg().sqrt_exact().map(|r| Self::new(Rat::zero(), r))
            };
        }
        let m = a.mul(&a).add(&b.mul(&b)).sqrt_exact()?;
        let x = a.add(&m).mul(&Rat::from_big(BigRational::new(BigInt::from(1), BigInt::from(2)))).sqrt_exact()?;
        let y = b.mul(&x.add(&x).inv().ok()?);
        Some(Self::new(x, y))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Canonical text form `a/b+c/d*i`; [`GaussRat::from_str`] inverts it exactly.
    pub fn to_canonical(&self) -> String {
        let (sign, im) = if self.im.signum() < 0 {
            ('-', self.im.neg())
        } else {
            ('+', self.im.clone())
        };
        format!(
            "{}/{}{}{}/{}*i",
            self.re.numer(),
            self.re.denom(),
            sign,
            im.numer(),
            im.denom()
        )
    }
}

impl Default for GaussRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) if self.im.is_one() => write!(f, "i"),
            (true, false) => write!(f, "{}*i", self.im),
            (false, false) => {
                if self.im.signum() < 0 {
                    write!(f, "{}-{}*i", self.re, self.im.neg())
                } else {
                    write!(f, "{}+{}*i", self.re, self.im)
                }
            }
        }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for GaussRat {
    type Err = ScalarError;

    /// Accepts the canonical form and the shorter forms produced by `Display`
    /// (`3`, `-1/2`, `i`, `-i`, `2/3*i`, `1-i`, `1/2+1/2*i`).
    fn from_str(s: &str) -> Result<Self, ScalarError> {
        let err = || ScalarError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        if !t.ends_with('i') {
            return Ok(Self::new(parse_rat(&t)?, Rat::zero()));
        }
        let body = t[..t.len() - 1].strip_suffix('*').unwrap_or(&t[..t.len() - 1]);
        // Split at the last sign that is not in leading position.
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .last();
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => "1",
            "-" => "-1",
            other => other.strip_prefix('+').unwrap_or(other),
        };
        Ok(Self::new(parse_rat(re)?, parse_rat(im).map_err(|_| err())?))
    }
}

impl Serialize for GaussRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_canonical())
    }
}

impl<'de> Deserialize<'de> for GaussRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for GaussRat {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

/// One of the four field operations, for table-driven callers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `op` to `a` and `b`; division by zero is an error value.
pub fn arith(op: ArithOp, a: &GaussRat, b: &GaussRat) -> Result<GaussRat, ScalarError> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.try_div(b),
    }
}

impl<'a> Add<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(self.re.add(&o.re), self.im.add(&o.im))
    }
}

impl<'a> Sub<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &GaussRat) -> GaussRat {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRat::new(self.re.mul(&o.re), Rat::zero());
        }
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        GaussRat::new(re, im)
    }
}

impl<'a> Div<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    /// Panics on division by zero; use [`GaussRat::try_div`] to get an error instead.
    fn div(self, o: &GaussRat) -> GaussRat {
        self.try_div(o).expect("division by zero")
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(self.re.neg(), self.im.neg())
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $f(self, o: GaussRat) -> GaussRat {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $f(self, o: &GaussRat) -> GaussRat {
                (&self).$f(o)
            }
        }
        impl<'a> $tr<GaussRat> for &'a GaussRat {
            type Output = GaussRat;
            fn $f(self, o: GaussRat) -> GaussRat {
                self.$f(&o)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, o: &GaussRat) {
        self.re = self.re.add(&o.re);
        self.im = self.im.add(&o.im);
    }
}

impl AddAssign<GaussRat> for GaussRat {
    fn add_assign(&mut self, o: GaussRat) {
        *self += &o;
    }
}

impl SubAssign<&GaussRat> for GaussRat {
    fn sub_assign(&mut self, o: &GaussRat) {
        self.re = self.re.sub(&o.re);
        self.im = self.im.sub(&o.im);
    }
}

impl MulAssign<&GaussRat> for GaussRat {
    fn mul_assign(&mut self, o: &GaussRat) {
        *self = &*self * o;
    }
}

impl std::iter::Sum for GaussRat {
    fn sum<I: Iterator<Item = GaussRat>>(iter: I) -> GaussRat {
        iter.fold(GaussRat::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussRat {
        s.parse().unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(g("1+i") * g("1-i"), g("2"));
        assert_eq!(g("1/2") * g("1+i") + g("1/2") * g("1-i"), g("1"));
        assert_eq!(g("1").try_div(&g("1+i")).unwrap(), g("1/2-1/2*i"));
        assert_eq!(g("1").try_div(&g("0")), Err(ScalarError::DivisionByZero));
        assert_eq!(GaussRat::xi_power(0), g("1"));
        assert_eq!(GaussRat::xi_power(2), g("-1"));
        assert_eq!(GaussRat::xi_power(-1), g("-i"));
    }

    #[test]
    fn canonical_round_trip() {
        for s in ["0", "1", "-7/3", "i", "-i", "1/2+1/2*i", "5-2/9*i"] {
            let x = g(s);
            let c = x.to_canonical();
            assert_eq!(c.parse::<GaussRat>().unwrap(), x, "{c}");
        }
        assert_eq!(g("-3/4").to_canonical(), "-3/4+0/1*i");
        assert_eq!(g("1/2-1/3*i").to_canonical(), "1/2-1/3*i");
    }

    #[test]
    fn overflow_promotes_to_big() {
        let big = GaussRat::from_int(i64::MAX);
        let sq = &big * &big;
        assert_eq!(sq.re_num(), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        assert_eq!(&sq / &big, big);
        let back = sq.to_canonical().parse::<GaussRat>().unwrap();
        assert_eq!(back, sq);
    }

    #[test]
    fn arith_table() {
        let (a, b) = (g("1+i"), g("2"));
        assert_eq!(arith(ArithOp::Sub, &a, &b).unwrap(), g("-1+i"));
        assert!(arith(ArithOp::Div, &a, &GaussRat::zero()).is_err());
    }
}
