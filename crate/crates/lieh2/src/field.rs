//! Exact scalars over ℚ or a prime field F_p.
//!
//! A [`Scalar`] carries its field along with its value: rationals are
//! arbitrary-precision, prime-field elements are reduced residues.  Mixing
//! scalars from different fields in arithmetic is a programming error and
//! panics; user-facing field selection goes through [`FieldSpec`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// ℚ or F_p.  The modulus, when present, is prime (checked at construction).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    modulus: Option<u64>,
}

impl FieldSpec {
    pub const RATIONALS: Self = FieldSpec { modulus: None };

    pub fn rationals() -> Self {
        Self::RATIONALS
    }

    pub fn prime(p: u64) -> Result<Self, Error> {
        if is_prime(p) {
            Ok(FieldSpec { modulus: Some(p) })
        } else {
            Err(Error::Unsupported(format!("{p} is not prime")))
        }
    }

    /// Parses `q` or `f<p>` (case-insensitive), e.g. `Q`, `f5`, `F101`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Self::RATIONALS);
        }
        if let Some(rest) = t.strip_prefix(['f', 'F']) {
            let p: u64 = rest.parse().map_err(|_| {
                Error::Parse(format!("unknown field `{text}`; expected `q` or `f<p>`"))
            })?;
            return Self::prime(p);
        }
        Err(Error::Parse(format!(
            "unknown field `{text}`; expected `q` or `f<p>`"
        )))
    }

    /// 0 for ℚ, p for F_p.
    pub fn characteristic(&self) -> u64 {
        self.modulus.unwrap_or(0)
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn is_rationals(&self) -> bool {
        self.modulus.is_none()
    }

    pub fn zero(&self) -> Scalar {
        self.integer(0)
    }

    pub fn one(&self) -> Scalar {
        self.integer(1)
    }

    pub fn integer(&self, n: i64) -> Scalar {
        match self.modulus {
            None => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Some(p) => Scalar::Residue {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar, Error> {
        self.from_big_ratio(BigInt::from(num), BigInt::from(den))
    }

    pub fn from_big_ratio(&self, num: BigInt, den: BigInt) -> Result<Scalar, Error> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        match self.modulus {
            None => Ok(Scalar::Rational(BigRational::new(num, den))),
            Some(p) => {
                let d = big_residue(&den, p);
                if d == 0 {
                    return Err(Error::Parse(format!(
                        "denominator {den} is not invertible modulo {p}"
                    )));
                }
                let n = big_residue(&num, p);
                Ok(Scalar::Residue {
                    value: mul_mod(n, inv_mod(d, p), p),
                    modulus: p,
                })
            }
        }
    }

    /// Parses `a` or `a/b` with arbitrary-precision integers a, b.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, Error> {
        let t = text.trim();
        let (ns, ds) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = ns
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient `{text}`")))?;
        let den: BigInt = ds
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient `{text}`")))?;
        self.from_big_ratio(num, den)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus {
            None => write!(f, "Q"),
            Some(p) => write!(f, "F{p}"),
        }
    }
}

/// One field element.  `Residue.value` is always reduced below the modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::RATIONALS,
            Scalar::Residue { modulus, .. } => FieldSpec {
                modulus: Some(*modulus),
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => {
                assert!(!r.is_zero(), "inverse of zero");
                Scalar::Rational(r.recip())
            }
            Scalar::Residue { value, modulus } => {
                assert!(*value != 0, "inverse of zero");
                Scalar::Residue {
                    value: inv_mod(*value, *modulus),
                    modulus: *modulus,
                }
            }
        }
    }

    /// Small integer value if the scalar is one, used for display decisions.
    pub fn as_integer(&self) -> Option<i64> {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    r.numer().to_i64()
                } else {
                    None
                }
            }
            Scalar::Residue { value, .. } => Some(*value as i64),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

fn binop(
    a: &Scalar,
    b: &Scalar,
    f: impl Fn(&BigRational, &BigRational) -> BigRational,
    g: impl Fn(u64, u64, u64) -> u64,
) -> Scalar {
    match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(f(x, y)),
        (
            Scalar::Residue {
                value: x,
                modulus: p,
            },
            Scalar::Residue {
                value: y,
                modulus: q,
            },
        ) => {
            assert_eq!(p, q, "mixed moduli {p} and {q}");
            Scalar::Residue {
                value: g(*x, *y, *p),
                modulus: *p,
            }
        }
        _ => panic!("mixed rational and prime-field scalars"),
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        binop(self, rhs, |x, y| x + y, add_mod)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        binop(self, rhs, |x, y| x - y, |x, y, p| add_mod(x, p - y, p))
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        binop(self, rhs, |x, y| x * y, mul_mod)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    (((a as u128) + (b as u128)) % (p as u128)) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (((a as u128) * (b as u128)) % (p as u128)) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "{a} is not invertible modulo {p}");
    t.rem_euclid(p as i128) as u64
}

fn big_residue(n: &BigInt, p: u64) -> u64 {
    let p = BigInt::from(p);
    let mut r = n % &p;
    if r.is_negative() {
        r += &p;
    }
    r.to_u64().unwrap()
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

// Deterministic Miller-Rabin; the witness set below covers all of u64.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_checked_at_construction() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(5).is_ok());
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(91).is_err()); // 7 * 13
        assert!(FieldSpec::prime(1_000_000_007).is_ok());
    }

    #[test]
    fn field_parsing() {
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::RATIONALS);
        assert_eq!(FieldSpec::parse("Q").unwrap(), FieldSpec::RATIONALS);
        assert_eq!(FieldSpec::parse("F5").unwrap().characteristic(), 5);
        assert_eq!(FieldSpec::parse("f11").unwrap().characteristic(), 11);
        assert!(FieldSpec::parse("f6").is_err());
        assert!(FieldSpec::parse("gf5").is_err());
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let q = FieldSpec::RATIONALS;
        let a = q.ratio(1, 3).unwrap();
        let b = q.ratio(1, 6).unwrap();
        assert_eq!(&a + &b, q.ratio(1, 2).unwrap());
        assert_eq!(&a - &a, q.zero());
        assert_eq!(&(&a * &b) * &a.inv(), b);
        assert_eq!(format!("{}", q.ratio(-3, 2).unwrap()), "-3/2");
        assert_eq!(format!("{}", q.ratio(4, 2).unwrap()), "2");
    }

    #[test]
    fn residue_arithmetic() {
        let f5 = FieldSpec::prime(5).unwrap();
        let two = f5.integer(2);
        let three = f5.integer(-2);
        assert_eq!(three, f5.integer(3));
        assert_eq!(&two + &three, f5.zero());
        assert_eq!(&two * &three, f5.one());
        for v in 1..5i64 {
            let x = f5.integer(v);
            assert_eq!(&x * &x.inv(), f5.one());
        }
    }

    #[test]
    fn scalar_parsing() {
        let q = FieldSpec::RATIONALS;
        assert_eq!(q.parse_scalar("-3/2").unwrap(), q.ratio(-3, 2).unwrap());
        assert_eq!(q.parse_scalar(" 7 ").unwrap(), q.integer(7));
        let f5 = FieldSpec::prime(5).unwrap();
        // -3/2 = 2 * inv(2) = 2 * 3 = 6 = 1 mod 5
        assert_eq!(f5.parse_scalar("-3/2").unwrap(), f5.one());
        assert!(f5.parse_scalar("1/5").is_err());
        assert!(q.parse_scalar("x").is_err());
        assert!(q.parse_scalar("1/0").is_err());
    }

    #[test]
    #[should_panic(expected = "mixed")]
    fn mixed_fields_panic() {
        let q = FieldSpec::RATIONALS.one();
        let f = FieldSpec::prime(5).unwrap().one();
        let _ = &q + &f;
    }
}
