//! Exact coefficient arithmetic over ℚ and GF(p).
//!
//! Every scalar in the engine is one of these two kinds; there is no
//! floating point anywhere. Rationals are kept reduced with a positive
//! denominator, prime-field values as the canonical residue in `0..p`, so
//! equality of values is equality of representations.
//!
//! Literal syntax: an optional leading `-`, an integer, and optionally
//! `/` followed by a positive integer, e.g. `7`, `-3/4`, `0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("malformed scalar literal {0:?}")]
    MalformedLiteral(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("operands belong to different fields ({0} vs {1})")]
    FieldMismatch(FieldSpec, FieldSpec),
}

/// Which field coefficients live in: ℚ or GF(p) with p prime.
///
/// The prime constructor checks primality, so a held modulus is always
/// genuinely prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    kind: FieldKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum FieldKind {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    pub fn rational() -> Self {
        FieldSpec { kind: FieldKind::Rational }
    }

    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if is_prime_u64(p) {
            Ok(FieldSpec { kind: FieldKind::Prime(p) })
        } else {
            Err(ScalarError::NotPrime(p))
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.kind, FieldKind::Rational)
    }

    /// The modulus for GF(p), `None` for ℚ.
    pub fn modulus(&self) -> Option<u64> {
        match self.kind {
            FieldKind::Rational => None,
            FieldKind::Prime(p) => Some(p),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self.kind {
            FieldKind::Rational => Scalar(Repr::Rat(BigRational::zero())),
            FieldKind::Prime(p) => Scalar(Repr::Mod { p, val: 0 }),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, k: i64) -> Scalar {
        match self.kind {
            FieldKind::Rational => Scalar(Repr::Rat(BigRational::from_integer(BigInt::from(k)))),
            FieldKind::Prime(p) => {
                let val = (BigInt::from(k) % p).to_biguint_mod(p);
                Scalar(Repr::Mod { p, val })
            }
        }
    }

    /// Parse a scalar literal (`int` or `int/posint`, optional leading `-`)
    /// into this field. In GF(p) the literal `a/b` means `a * b^(-1)`.
    pub fn parse(&self, text: &str) -> Result<Scalar, ScalarError> {
        let text = text.trim();
        let bad = || ScalarError::MalformedLiteral(text.to_string());
        let (num_str, den_str) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        if num_str.is_empty() {
            return Err(bad());
        }
        let digits = &num_str[usize::from(num_str.starts_with('-'))..];
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let num = BigInt::from_str(num_str).map_err(|_| bad())?;
        let den = match den_str {
            None => BigInt::one(),
            Some(d) => {
                // The denominator must be a bare positive integer: no sign.
                if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                let den = BigInt::from_str(d).map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(ScalarError::DivisionByZero);
                }
                den
            }
        };
        match self.kind {
            FieldKind::Rational => Ok(Scalar(Repr::Rat(BigRational::new(num, den)))),
            FieldKind::Prime(p) => {
                let n = num.to_biguint_mod(p);
                let d = den.to_biguint_mod(p);
                if d == 0 {
                    return Err(ScalarError::DivisionByZero);
                }
                Ok(Scalar(Repr::Mod { p, val: mulmod(n, inv_mod(d, p), p) }))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rational => write!(f, "rational"),
            FieldKind::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

trait ModBigInt {
    fn to_biguint_mod(&self, p: u64) -> u64;
}

impl ModBigInt for BigInt {
    fn to_biguint_mod(&self, p: u64) -> u64 {
        use num_traits::ToPrimitive;
        let r = self % BigInt::from(p);
        let r = if r.is_negative() { r + BigInt::from(p) } else { r };
        r.to_u64().expect("residue fits in u64")
    }
}

/// An exact field element tagged with the field it belongs to.
///
/// Arithmetic between scalars of different fields is a caller bug; the
/// operator forms panic on it, [`Scalar::binop`] reports it as an error.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rat(BigRational),
    Mod { p: u64, val: u64 },
}

/// The binary operations exposed through [`Scalar::binop`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match &self.0 {
            Repr::Rat(_) => FieldSpec::rational(),
            Repr::Mod { p, .. } => FieldSpec { kind: FieldKind::Prime(*p) },
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rat(r) => r.is_zero(),
            Repr::Mod { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rat(r) => r.is_one(),
            Repr::Mod { val, .. } => *val == 1,
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a + b)),
            (Repr::Mod { p, val: a }, Repr::Mod { p: q, val: b }) if p == q => {
                Scalar(Repr::Mod { p: *p, val: addmod(*a, *b, *p) })
            }
            _ => panic!("scalar field mismatch: {} vs {}", self.field(), rhs.field()),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a * b)),
            (Repr::Mod { p, val: a }, Repr::Mod { p: q, val: b }) if p == q => {
                Scalar(Repr::Mod { p: *p, val: mulmod(*a, *b, *p) })
            }
            _ => panic!("scalar field mismatch: {} vs {}", self.field(), rhs.field()),
        }
    }

    pub fn neg(&self) -> Scalar {
        match &self.0 {
            Repr::Rat(a) => Scalar(Repr::Rat(-a)),
            Repr::Mod { p, val } => Scalar(Repr::Mod { p: *p, val: if *val == 0 { 0 } else { p - val } }),
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match &self.0 {
            Repr::Rat(a) => Ok(Scalar(Repr::Rat(a.recip()))),
            Repr::Mod { p, val } => Ok(Scalar(Repr::Mod { p: *p, val: inv_mod(*val, *p) })),
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Fallible arithmetic entry point: reports field mismatch and division
    /// by zero as errors instead of panicking.
    pub fn binop(op: FieldOp, a: &Scalar, b: &Scalar) -> Result<Scalar, ScalarError> {
        if a.field() != b.field() {
            return Err(ScalarError::FieldMismatch(a.field(), b.field()));
        }
        match op {
            FieldOp::Add => Ok(a.add(b)),
            FieldOp::Sub => Ok(a.sub(b)),
            FieldOp::Mul => Ok(a.mul(b)),
            FieldOp::Div => a.div(b),
        }
    }

    /// Non-negative integer power by square and multiply.
    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Mod { val, .. } => write!(f, "{val}"),
        }
    }
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse in GF(p) by Fermat's little theorem; `v` must be nonzero mod p.
fn inv_mod(v: u64, p: u64) -> u64 {
    debug_assert!(!v.is_multiple_of(p));
    powmod(v, p - 2, p)
}

/// Deterministic Miller-Rabin, exact for all u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mulmod(x, x, n);
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

    /// Extended Euclid, used only as a test oracle for modular inverses.
    fn ext_euclid_inv(a: i64, p: i64) -> i64 {
        let (mut r0, mut r1) = (p, a.rem_euclid(p));
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        assert_eq!(r0, 1, "not coprime");
        t0.rem_euclid(p)
    }

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn parse_rational_reduces_and_normalizes_sign() {
        let f = q();
        assert_eq!(f.parse("3/4").unwrap().to_string(), "3/4");
        assert_eq!(f.parse("6/8").unwrap().to_string(), "3/4");
        assert_eq!(f.parse("-6/4").unwrap().to_string(), "-3/2");
        assert_eq!(f.parse("-0").unwrap(), f.zero());
        assert_eq!(f.parse("12").unwrap().to_string(), "12");
    }

    #[test]
    fn parse_in_gf7_matches_extended_euclid_oracle() {
        // 3/4 in GF(7) is 3 * inv(4); the oracle gives inv(4) = 2, so 6.
        assert_eq!(ext_euclid_inv(4, 7), 2);
        let got = gf(7).parse("3/4").unwrap();
        assert_eq!(got, gf(7).from_i64(6));
        assert_eq!(got.to_string(), "6");
    }

    #[test]
    fn inverse_in_gf7_matches_brute_force_oracle() {
        // Brute force: the unique k in 1..7 with 3k = 1 mod 7 is 5.
        let k = (1..7u64).find(|k| (3 * k) % 7 == 1).unwrap();
        assert_eq!(k, 5);
        assert_eq!(gf(7).from_i64(3).inv().unwrap(), gf(7).from_i64(5));
    }

    #[test]
    fn negative_literals_wrap_in_prime_fields() {
        assert_eq!(gf(7).parse("-5").unwrap(), gf(7).from_i64(2));
        assert_eq!(gf(7).parse("-14").unwrap(), gf(7).zero());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(q().parse("1/0"), Err(ScalarError::DivisionByZero));
        assert_eq!(q().zero().inv(), Err(ScalarError::DivisionByZero));
        // A denominator divisible by p vanishes in GF(p).
        assert_eq!(gf(7).parse("1/14"), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn malformed_literals_are_rejected() {
        for bad in ["", "--3", "3/-4", "a", "1/ /2", "1//2", "0x3", "3.5", "-"] {
            assert!(
                matches!(q().parse(bad), Err(ScalarError::MalformedLiteral(_))),
                "accepted {bad:?}"
            );
        }
    }

    #[test]
    fn field_mismatch_is_reported() {
        let a = q().one();
        let b = gf(7).one();
        assert!(matches!(
            Scalar::binop(FieldOp::Add, &a, &b),
            Err(ScalarError::FieldMismatch(..))
        ));
    }

    #[test]
    fn primality_gate() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(7).is_ok());
        assert!(FieldSpec::prime(2147483647).is_ok());
        for bad in [0u64, 1, 4, 9, 1000, 2147483649] {
            assert_eq!(FieldSpec::prime(bad), Err(ScalarError::NotPrime(bad)));
        }
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let x = q().parse("-3/2").unwrap();
        let mut acc = q().one();
        for e in 0..8u64 {
            assert_eq!(x.pow(e), acc);
            acc = acc.mul(&x);
        }
        let y = gf(13).from_i64(6);
        assert_eq!(y.pow(12), gf(13).one());
    }

    #[test]
    fn display_roundtrips_through_parse() {
        for lit in ["0", "7", "-7", "3/4", "-22/7"] {
            let v = q().parse(lit).unwrap();
            assert_eq!(q().parse(&v.to_string()).unwrap(), v);
        }
        for lit in ["0", "1", "6", "3/4"] {
            let v = gf(7).parse(lit).unwrap();
            assert_eq!(gf(7).parse(&v.to_string()).unwrap(), v);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn rational() -> impl Strategy<Value = Scalar> {
            (-60i64..60, 1i64..40).prop_map(|(n, d)| {
                FieldSpec::rational().parse(&format!("{n}/{d}")).unwrap()
            })
        }

        fn gf7() -> impl Strategy<Value = Scalar> {
            (0i64..7).prop_map(|v| FieldSpec::prime(7).unwrap().from_i64(v))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]

            #[test]
            fn rational_field_axioms((a, b, c) in (rational(), rational(), rational())) {
                field_axioms(a, b, c);
            }

            #[test]
            fn gf7_field_axioms((a, b, c) in (gf7(), gf7(), gf7())) {
                field_axioms(a, b, c);
            }
        }

        fn field_axioms(a: Scalar, b: Scalar, c: Scalar) {
            let f = a.field();
            assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.add(&b), b.add(&a));
            assert_eq!(a.mul(&b), b.mul(&a));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            assert_eq!(a.add(&f.zero()), a);
            assert_eq!(a.mul(&f.one()), a);
            assert_eq!(a.add(&a.neg()), f.zero());
            if !a.is_zero() {
                assert_eq!(a.mul(&a.inv().unwrap()), f.one());
            }
        }
    }
}
