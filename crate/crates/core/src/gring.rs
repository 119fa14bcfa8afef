//! Exact coefficient arithmetic and graded free modules over R[G].
//!
//! Supported base rings are ℤ (arbitrary precision), ℚ (exact rationals) and
//! prime fields 𝔽_p for machine-word primes. The polynomial variable G has
//! quantum degree −2, so a monomial c·Gᵏ contributes −2k to the quantum degree
//! of any graded map it appears in.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Name of the coefficient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RingTag {
    /// The integers ℤ.
    Z,
    /// The rationals ℚ.
    Q,
    /// The prime field 𝔽_p.
    Fp(u64),
}

impl RingTag {
    pub fn is_field(self) -> bool {
        !matches!(self, RingTag::Z)
    }

    /// Parses "Z", "Q", "F2", "F3", ... (any machine-word prime).
    pub fn parse(s: &str) -> Result<RingTag> {
        match s {
            "Z" => Ok(RingTag::Z),
            "Q" => Ok(RingTag::Q),
            _ => {
                let p: u64 = s
                    .strip_prefix('F')
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::SchemaError(format!("unknown ring {s:?}")))?;
                if !is_prime(p) {
                    return Err(Error::SchemaError(format!("{p} is not prime")));
                }
                Ok(RingTag::Fp(p))
            }
        }
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Z => write!(f, "Z"),
            RingTag::Q => write!(f, "Q"),
            RingTag::Fp(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact element of ℤ, ℚ or 𝔽_p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Fp { p: u64, v: u64 },
}

impl Scalar {
    pub fn ring(&self) -> RingTag {
        match self {
            Scalar::Int(_) => RingTag::Z,
            Scalar::Rat(_) => RingTag::Q,
            Scalar::Fp { p, .. } => RingTag::Fp(*p),
        }
    }

    pub fn zero(ring: RingTag) -> Scalar {
        Scalar::from_i64(ring, 0)
    }

    pub fn one(ring: RingTag) -> Scalar {
        Scalar::from_i64(ring, 1)
    }

    pub fn from_i64(ring: RingTag, v: i64) -> Scalar {
        match ring {
            RingTag::Z => Scalar::Int(BigInt::from(v)),
            RingTag::Q => Scalar::Rat(BigRational::from(BigInt::from(v))),
            RingTag::Fp(p) => Scalar::Fp {
                p,
                v: v.rem_euclid(p as i64) as u64,
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(a) => a.is_zero(),
            Scalar::Rat(a) => a.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    fn check_same(&self, other: &Scalar) -> Result<()> {
        if self.ring() == other.ring() {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                p: *p,
                v: ((*a as u128 + *b as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                p: *p,
                v: ((*a as u128 * *b as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Int(a) => Scalar::Int(-a),
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: if *v == 0 { 0 } else { p - v },
            },
        }
    }

    /// True iff the element is invertible: ±1 over ℤ, nonzero over a field.
    pub fn is_unit(&self) -> bool {
        match self {
            Scalar::Int(a) => a.abs().is_one(),
            _ => !self.is_zero(),
        }
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        Ok(match self {
            Scalar::Int(a) => Scalar::Int(a.clone()),
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: mod_inverse(*v, *p),
            },
        })
    }

    /// Reduces an integer scalar into `target`.
    pub fn into_ring(&self, target: RingTag) -> Result<Scalar> {
        let Scalar::Int(a) = self else {
            return Err(Error::MixedRings);
        };
        Ok(match target {
            RingTag::Z => Scalar::Int(a.clone()),
            RingTag::Q => Scalar::Rat(BigRational::from(a.clone())),
            RingTag::Fp(p) => {
                let r = a.mod_floor(&BigInt::from(p));
                let (_, digits) = r.to_u64_digits();
                Scalar::Fp {
                    p,
                    v: digits.first().copied().unwrap_or(0),
                }
            }
        })
    }
}

fn mod_inverse(v: u64, p: u64) -> u64 {
    // Extended Euclid; p is prime and v != 0 mod p.
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, v as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(a) => write!(f, "{a}"),
            Scalar::Rat(a) => write!(f, "{a}"),
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

/// A monomial c·Gᵏ of R[G]. The canonical zero has `gexp == 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: Scalar,
    pub gexp: u32,
}

impl Monomial {
    pub fn new(coeff: Scalar, gexp: u32) -> Monomial {
        if coeff.is_zero() {
            Monomial { coeff, gexp: 0 }
        } else {
            Monomial { coeff, gexp }
        }
    }

    pub fn zero(ring: RingTag) -> Monomial {
        Monomial::new(Scalar::zero(ring), 0)
    }

    pub fn one(ring: RingTag) -> Monomial {
        Monomial::new(Scalar::one(ring), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn ring(&self) -> RingTag {
        self.coeff.ring()
    }

    /// Quantum degree contribution, −2·gexp.
    pub fn qdeg(&self) -> i64 {
        -2 * self.gexp as i64
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        Ok(Monomial::new(
            self.coeff.mul(&other.coeff)?,
            self.gexp + other.gexp,
        ))
    }

    pub fn add(&self, other: &Monomial) -> Result<Monomial> {
        // Only defined for equal exponents (homogeneous slots) or zeros.
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        assert_eq!(self.gexp, other.gexp, "adding monomials of unequal degree");
        Ok(Monomial::new(self.coeff.add(&other.coeff)?, self.gexp))
    }

    pub fn neg(&self) -> Monomial {
        Monomial::new(self.coeff.neg(), self.gexp)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gexp {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "{}·G", self.coeff),
            k => write!(f, "{}·G^{}", self.coeff, k),
        }
    }
}

/// A bigraded generator of a free module.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub id: String,
    pub t: i64,
    pub q: i64,
}

/// An ordered list of bigraded generators; may be empty (the zero module).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedFreeModule {
    pub gens: Vec<Generator>,
}

impl GradedFreeModule {
    pub fn new(gens: Vec<Generator>) -> Result<GradedFreeModule> {
        let mut seen = std::collections::HashSet::new();
        for g in &gens {
            if !seen.insert(g.id.clone()) {
                return Err(Error::SchemaError(format!("duplicate generator id {}", g.id)));
            }
        }
        Ok(GradedFreeModule { gens })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.id == id)
    }
}
