//! Exact field scalars: arbitrary-precision rationals and prime fields F_p.
//!
//! Every value carries its field, so mixed-field arithmetic is a programming
//! error and panics. Rationals are kept in lowest terms with positive
//! denominator (num-rational maintains this); F_p residues live in [0, p)
//! with p < 2^31 so products fit in 64-bit intermediates.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;

/// The active coefficient field: Q or F_p.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum FieldSpec {
    Q,
    Fp(u32),
}

impl FieldSpec {
    /// Validates and builds a prime-field spec.
    pub fn prime_field(p: u64) -> Result<FieldSpec> {
        if p >= (1u64 << 31) {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Fp(p as u32))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Q(BigRational::zero()),
            FieldSpec::Fp(p) => Scalar::Fp { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Q(BigRational::one()),
            FieldSpec::Fp(p) => Scalar::Fp { v: 1, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Fp(p) => {
                let p64 = *p as i64;
                Scalar::Fp {
                    v: n.rem_euclid(p64) as u32,
                    p: *p,
                }
            }
        }
    }

    /// Builds num/den as a field element; den must be invertible.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldSpec::Q => Ok(Scalar::Q(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            FieldSpec::Fp(_) => {
                let d = self.from_i64(den);
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(self.from_i64(num).div(&d))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            FieldSpec::Q => "Q".into(),
            FieldSpec::Fp(p) => format!("F {p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact element of the active field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u32, p: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Q,
            Scalar::Fp { p, .. } => FieldSpec::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: p2 }) => {
                assert_eq!(p, p2, "mixed prime fields");
                Scalar::Fp {
                    v: ((*a as u64 + *b as u64) % *p as u64) as u32,
                    p: *p,
                }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: p2 }) => {
                assert_eq!(p, p2, "mixed prime fields");
                Scalar::Fp {
                    v: ((*a as u64 * *b as u64) % *p as u64) as u32,
                    p: *p,
                }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    /// Multiplicative inverse; panics on zero (callers guard).
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: inv_mod(*v as i64, *p as i64) as u32,
                p: *p,
            },
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    /// As an i64-representable rational if possible (used by reporting code).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    use num::ToPrimitive;
                    r.numer().to_i64()
                } else {
                    None
                }
            }
            Scalar::Fp { v, .. } => Some(*v as i64),
        }
    }
}

fn inv_mod(a: i64, p: i64) -> i64 {
    // extended Euclid
    let (mut r0, mut r1) = (p, a.rem_euclid(p));
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    assert_eq!(r0, 1, "not invertible mod p");
    s0.rem_euclid(p)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.is_negative() {
                    write!(f, "-{}/{}", r.numer().abs(), r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}
