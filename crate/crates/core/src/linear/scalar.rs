//! Scalars over an exact field: the rationals or a prime field.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(p as i128) as u64)
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(Rational::from_int(n)),
            FieldSpec::Prime(p) => Scalar::Mod {
                value: (n as i128).rem_euclid(*p as i128) as u64,
                modulus: *p,
            },
        }
    }

    /// `num / den` in this field.
    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        let r = Rational::new(num, den).ok_or(Error::DivisionByZero)?;
        self.from_rational(&r)
    }

    pub fn from_rational(&self, r: &Rational) -> Result<Scalar> {
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rat(r.clone())),
            FieldSpec::Prime(p) => r
                .residue(*p)
                .map(|value| Scalar::Mod { value, modulus: *p })
                .ok_or_else(|| Error::NotReducible(r.to_string())),
        }
    }

    /// Parses `"n"`, `"n/d"` or `"k mod p"` into this field. Plain rationals
    /// are reduced into a prime field; a residue must carry the same modulus.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let parsed: Scalar = s.parse()?;
        self.coerce(&parsed)
    }

    /// Moves a scalar into this field (rationals reduce mod p).
    pub fn coerce(&self, s: &Scalar) -> Result<Scalar> {
        match (self, s) {
            (_, Scalar::Rat(r)) => self.from_rational(r),
            (FieldSpec::Prime(p), Scalar::Mod { modulus, .. }) if p == modulus => Ok(s.clone()),
            _ => Err(Error::FieldMismatch(
                self.to_string(),
                s.field().to_string(),
            )),
        }
    }

    /// Every element of a prime field, in residue order.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(
                (0..*p)
                    .map(|value| Scalar::Mod { value, modulus: *p })
                    .collect(),
            ),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "Q" | "QQ" | "rationals" => Ok(FieldSpec::Rationals),
            _ => {
                let digits = t
                    .strip_prefix('F')
                    .or_else(|| t.strip_prefix("GF"))
                    .ok_or_else(|| Error::ParseScalar(s.to_string()))?;
                let p: u64 = digits
                    .parse()
                    .map_err(|_| Error::ParseScalar(s.to_string()))?;
                FieldSpec::prime(p)
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Rat(Rational),
    Mod { value: u64, modulus: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

/// Checked scalar arithmetic. Unary ops ignore `b`.
pub fn scalar_arith(op: ArithOp, a: &Scalar, b: Option<&Scalar>) -> Result<Scalar> {
    let rhs = || b.ok_or_else(|| Error::Unsupported(format!("{op:?} needs two operands")));
    match op {
        ArithOp::Add => a.checked_add(rhs()?),
        ArithOp::Sub => a.checked_sub(rhs()?),
        ArithOp::Mul => a.checked_mul(rhs()?),
        ArithOp::Div => a.checked_div(rhs()?),
        ArithOp::Neg => Ok(a.neg()),
        ArithOp::Inv => a.inv(),
    }
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Mod { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => *r == Rational::ONE,
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::FieldMismatch(self.field().to_string(), other.field().to_string())
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a.add(b))),
            (
                Scalar::Mod {
                    value: a,
                    modulus: p,
                },
                Scalar::Mod {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Ok(Scalar::Mod {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            }),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a.mul(b))),
            (
                Scalar::Mod {
                    value: a,
                    modulus: p,
                },
                Scalar::Mod {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Ok(Scalar::Mod {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                modulus: *p,
            }),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        if self.field() != other.field() {
            return Err(self.mismatch(other));
        }
        self.checked_mul(&other.inv()?)
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(a.neg()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rat(a) => a.inv().map(Scalar::Rat).ok_or(Error::DivisionByZero),
            Scalar::Mod { value, modulus } => mod_inverse(*value, *modulus)
                .map(|value| Scalar::Mod {
                    value,
                    modulus: *modulus,
                })
                .ok_or(Error::DivisionByZero),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod { .. } => None,
        }
    }

    pub fn height(&self) -> u64 {
        match self {
            Scalar::Rat(r) => r.height(),
            Scalar::Mod { value, .. } => *value,
        }
    }

    /// Canonical string: `"n"`, `"n/d"`, or `"k mod p"`.
    pub fn to_canonical(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Mod { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseScalar(s.to_string());
        let t = s.trim();
        if let Some((k, p)) = t.split_once("mod") {
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            let k: i128 = k.trim().parse().map_err(|_| bad())?;
            return Ok(Scalar::Mod {
                value: k.rem_euclid(p as i128) as u64,
                modulus: p,
            });
        }
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        Rational::from_bigs(n, d)
            .map(Scalar::Rat)
            .ok_or(Error::DivisionByZero)
    }
}

// Operator sugar for same-field arithmetic; mixing fields is a logic error
// because every object validates its field on construction.
macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl std::ops::$tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar field mismatch")
            }
        }
        impl std::ops::$tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$checked(&rhs).expect("scalar field mismatch")
            }
        }
        impl std::ops::$tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar field mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

impl std::ops::AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.checked_add(rhs).expect("scalar field mismatch");
    }
}

impl std::ops::SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.checked_sub(rhs).expect("scalar field mismatch");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_halves_and_thirds() {
        let q = FieldSpec::Rationals;
        let a = q.ratio(1, 2).unwrap();
        let b = q.ratio(1, 3).unwrap();
        let s = scalar_arith(ArithOp::Add, &a, Some(&b)).unwrap();
        assert_eq!(s, q.ratio(5, 6).unwrap());
    }

    #[test]
    fn inverse_in_f5() {
        let f5 = FieldSpec::prime(5).unwrap();
        let inv = scalar_arith(ArithOp::Inv, &f5.int(2), None).unwrap();
        assert_eq!(inv, f5.int(3));
    }

    #[test]
    fn division_by_zero() {
        let q = FieldSpec::Rationals;
        assert_eq!(
            scalar_arith(ArithOp::Div, &q.one(), Some(&q.zero())),
            Err(Error::DivisionByZero)
        );
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_mismatch() {
        let q = FieldSpec::Rationals.one();
        let f = FieldSpec::prime(3).unwrap().one();
        assert!(matches!(q.checked_add(&f), Err(Error::FieldMismatch(..))));
        assert!(matches!(
            FieldSpec::prime(5).unwrap().coerce(&f),
            Err(Error::FieldMismatch(..))
        ));
    }

    #[test]
    fn parse_and_print() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.parse("-3/6").unwrap().to_string(), "-1/2");
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.parse("1/2").unwrap().to_string(), "4 mod 7");
        assert_eq!(f7.parse("4 mod 7").unwrap(), f7.int(4));
        assert!(f7.parse("1/7").is_err());
        assert!(q.parse("1/0").is_err());
        assert!("2 mod 4".parse::<Scalar>().is_err());
        assert_eq!("F5".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(5));
        assert!("F6".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..20).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }
}
