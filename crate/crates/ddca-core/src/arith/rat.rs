//! Exact rational numbers with a machine-word fast path.
//!
//! Values are kept as `i64/i64` in lowest terms with a positive denominator
//! and promoted to big-integer rationals only on overflow. Demotion back to
//! the small representation happens eagerly, so equality and hashing are
//! structural.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// A big rational kept in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BigRat {
    num: BigInt,
    den: BigInt,
}

impl BigRat {
    fn new(num: BigInt, den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        let mut num = num;
        let mut den = den;
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_zero() {
            num /= &g;
            den /= &g;
        }
        BigRat { num, den }
    }
}

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rat {
    /// `i64` numerator and positive denominator in lowest terms.
    Small(i64, i64),
    /// Arbitrary precision fallback; never representable as `Small`.
    Big(Box<BigRat>),
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i64
}

impl Rat {
    pub const ZERO: Rat = Rat::Small(0, 1);
    pub const ONE: Rat = Rat::Small(1, 1);

    /// Builds `n/d` in canonical form. Panics if `d == 0`.
    pub fn new(n: i64, d: i64) -> Rat {
        assert!(d != 0, "zero denominator");
        let (mut n, mut d) = (n, d);
        if d < 0 {
            // i64::MIN is handled by the big path below.
            if n == i64::MIN || d == i64::MIN {
                return Rat::from_big(BigRat::new(BigInt::from(n), BigInt::from(d)));
            }
            n = -n;
            d = -d;
        }
        let g = gcd_i64(n, d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        Rat::Small(n, d)
    }

    pub fn int(n: i64) -> Rat {
        Rat::Small(n, 1)
    }

    fn from_big(b: BigRat) -> Rat {
        if let (Some(n), Some(d)) = (b.num.to_i64(), b.den.to_i64()) {
            Rat::Small(n, d)
        } else {
            Rat::Big(Box::new(b))
        }
    }

    fn to_big(&self) -> BigRat {
        match self {
            Rat::Small(n, d) => BigRat {
                num: BigInt::from(*n),
                den: BigInt::from(*d),
            },
            Rat::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rat::Small(n, _) => *n < 0,
            Rat::Big(b) => b.num.is_negative(),
        }
    }

    /// Numerator as a big integer.
    pub fn numer(&self) -> BigInt {
        match self {
            Rat::Small(n, _) => BigInt::from(*n),
            Rat::Big(b) => b.num.clone(),
        }
    }

    /// Denominator as a big integer (always positive).
    pub fn denom(&self) -> BigInt {
        match self {
            Rat::Small(_, d) => BigInt::from(*d),
            Rat::Big(b) => b.den.clone(),
        }
    }

    /// Integer value if the denominator is 1.
    pub fn to_integer(&self) -> Option<i64> {
        match self {
            Rat::Small(n, 1) => Some(*n),
            _ => None,
        }
    }

    pub fn abs(&self) -> Rat {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Rat::Small(n, d) => {
                if *n < 0 {
                    if *n == i64::MIN {
                        return Rat::from_big(BigRat::new(
                            BigInt::from(-*d),
                            -BigInt::from(*n),
                        ));
                    }
                    Rat::Small(-*d, -*n)
                } else {
                    Rat::Small(*d, *n)
                }
            }
            Rat::Big(b) => Rat::from_big(BigRat::new(b.den.clone(), b.num.clone())),
        }
    }

    pub fn pow(&self, e: u32) -> Rat {
        let mut acc = Rat::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// n! as an exact rational.
    pub fn factorial(n: u64) -> Rat {
        let mut acc = Rat::ONE;
        for i in 2..=n {
            acc = &acc * &Rat::int(i as i64);
        }
        acc
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::ZERO
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::int(n)
    }
}

macro_rules! checked_binop {
    ($a:expr, $b:expr, $small:expr, $big:expr) => {{
        let a = $a;
        let b = $b;
        if let (Rat::Small(an, ad), Rat::Small(bn, bd)) = (a, b) {
            if let Some(r) = $small(*an, *ad, *bn, *bd) {
                return r;
            }
        }
        $big(a.to_big(), b.to_big())
    }};
}

fn small_add(an: i64, ad: i64, bn: i64, bd: i64) -> Option<Rat> {
    let n = an.checked_mul(bd)?.checked_add(bn.checked_mul(ad)?)?;
    let d = ad.checked_mul(bd)?;
    Some(Rat::new(n, d))
}

fn small_sub(an: i64, ad: i64, bn: i64, bd: i64) -> Option<Rat> {
    let n = an.checked_mul(bd)?.checked_sub(bn.checked_mul(ad)?)?;
    let d = ad.checked_mul(bd)?;
    Some(Rat::new(n, d))
}

fn small_mul(an: i64, ad: i64, bn: i64, bd: i64) -> Option<Rat> {
    // Cross-reduce first so typical products stay in range.
    let g1 = gcd_i64(an, bd).max(1);
    let g2 = gcd_i64(bn, ad).max(1);
    let n = (an / g1).checked_mul(bn / g2)?;
    let d = (ad / g2).checked_mul(bd / g1)?;
    Some(Rat::new(n, d))
}

impl Add for &Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        checked_binop!(self, rhs, small_add, |a: BigRat, b: BigRat| {
            Rat::from_big(BigRat::new(&a.num * &b.den + &b.num * &a.den, &a.den * &b.den))
        })
    }
}

impl Sub for &Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        checked_binop!(self, rhs, small_sub, |a: BigRat, b: BigRat| {
            Rat::from_big(BigRat::new(&a.num * &b.den - &b.num * &a.den, &a.den * &b.den))
        })
    }
}

impl Mul for &Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        if self.is_zero() || rhs.is_zero() {
            return Rat::ZERO;
        }
        checked_binop!(self, rhs, small_mul, |a: BigRat, b: BigRat| {
            Rat::from_big(BigRat::new(&a.num * &b.num, &a.den * &b.den))
        })
    }
}

impl Div for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        self * &rhs.recip()
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        match self {
            Rat::Small(n, d) => {
                if *n == i64::MIN {
                    Rat::from_big(BigRat::new(-BigInt::from(*n), BigInt::from(*d)))
                } else {
                    Rat::Small(-n, *d)
                }
            }
            Rat::Big(b) => Rat::from_big(BigRat::new(-b.num.clone(), b.den.clone())),
        }
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        -&self
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        &self + &rhs
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        &self - &rhs
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        &self * &rhs
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        &self / &rhs
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        *self = &*self * rhs;
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        if let (Rat::Small(an, ad), Rat::Small(bn, bd)) = (self, other) {
            if let (Some(l), Some(r)) = ((*an as i128).checked_mul(*bd as i128), (*bn as i128).checked_mul(*ad as i128)) {
                return l.cmp(&r);
            }
        }
        let a = self.to_big();
        let b = other.to_big();
        (&a.num * &b.den).cmp(&(&b.num * &a.den))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(n, 1) => write!(f, "{}", n),
            Rat::Small(n, d) => write!(f, "{}/{}", n, d),
            Rat::Big(b) => {
                if b.den == BigInt::from(1) {
                    write!(f, "{}", b.num)
                } else {
                    write!(f, "{}/{}", b.num, b.den)
                }
            }
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Error parsing a rational from text.
#[derive(Debug, thiserror::Error)]
#[error("invalid rational literal: {0}")]
pub struct ParseRatError(pub String);

impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n = BigInt::from_str(num).map_err(|_| ParseRatError(s.to_string()))?;
        let d = BigInt::from_str(den).map_err(|_| ParseRatError(s.to_string()))?;
        if d.is_zero() {
            return Err(ParseRatError(s.to_string()));
        }
        Ok(Rat::from_big(BigRat::new(n, d)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(Rat::new(2, 4), Rat::new(1, 2));
        assert_eq!(Rat::new(-2, -4), Rat::new(1, 2));
        assert_eq!(Rat::new(2, -4), Rat::new(-1, 2));
        assert_eq!(Rat::new(0, 5), Rat::ZERO);
    }

    #[test]
    fn arithmetic() {
        let a = Rat::new(1, 6);
        let b = Rat::new(1, 3);
        assert_eq!(&a + &b, Rat::new(1, 2));
        assert_eq!(&a - &b, Rat::new(-1, 6));
        assert_eq!(&a * &b, Rat::new(1, 18));
        assert_eq!(&a / &b, Rat::new(1, 2));
        assert_eq!(-&a, Rat::new(-1, 6));
    }

    #[test]
    fn overflow_promotes_and_roundtrips() {
        let big = Rat::int(i64::MAX);
        let sq = &big * &big;
        match &sq {
            Rat::Big(_) => {}
            _ => panic!("expected promotion"),
        }
        let back = &sq / &big;
        assert_eq!(back, big);
        match &back {
            Rat::Small(..) => {}
            _ => panic!("expected demotion"),
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/4".parse::<Rat>().unwrap(), Rat::new(3, 4));
        assert_eq!("-6/8".parse::<Rat>().unwrap(), Rat::new(-3, 4));
        assert_eq!("7".parse::<Rat>().unwrap(), Rat::int(7));
        assert!("1/0".parse::<Rat>().is_err());
        assert_eq!(Rat::new(-3, 4).to_string(), "-3/4");
    }

    #[test]
    fn ordering() {
        assert!(Rat::new(1, 3) < Rat::new(1, 2));
        assert!(Rat::new(-1, 2) < Rat::ZERO);
    }

    #[test]
    fn factorial() {
        assert_eq!(Rat::factorial(5), Rat::int(120));
        assert_eq!(Rat::factorial(0), Rat::ONE);
    }
}
