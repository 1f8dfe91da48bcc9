//! Number-theoretic toolkit: Legendre symbols by Euler's criterion, the
//! closed-form solution count for `a x^2 + b y^2 = c` over a prime field
//! together with its brute-force oracle, and a Chinese-remainder solver for
//! systems of congruences.
//!
//! The closed formula is the production path; the oracle exists so the
//! verification suites can confirm it by exhaustive counting. Both are
//! exported.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModularError {
    #[error("{0} is not an odd prime")]
    NotAnOddPrime(BigInt),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("moduli {a} and {b} are not coprime")]
    NotCoprime { a: BigInt, b: BigInt },
}

/// Value of a Legendre symbol: -1, 0 or +1. Zero exactly when the prime
/// divides the argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LegendreValue(i8);

impl LegendreValue {
    pub fn value(self) -> i8 {
        self.0
    }
}

/// Primality by trial division. The moduli appearing here are tiny, so
/// nothing faster is warranted.
pub fn is_odd_prime(p: &BigInt) -> bool {
    let three = BigInt::from(3);
    if p < &three {
        return false;
    }
    if p.is_even() {
        return false;
    }
    let mut d = three;
    while &d * &d <= *p {
        if (p % &d).is_zero() {
            return false;
        }
        d += 2;
    }
    true
}

/// Legendre symbol (a/p) for an odd prime p, by Euler's criterion:
/// a^((p-1)/2) mod p is 1 for nonzero squares, p-1 for non-squares.
pub fn legendre(a: &BigInt, p: &BigInt) -> Result<LegendreValue, ModularError> {
    if !is_odd_prime(p) {
        return Err(ModularError::NotAnOddPrime(p.clone()));
    }
    let a = a.mod_floor(p);
    if a.is_zero() {
        return Ok(LegendreValue(0));
    }
    let exponent = (p - 1u8) / 2u8;
    let pow = a.modpow(&exponent, p);
    if pow.is_one() {
        Ok(LegendreValue(1))
    } else {
        debug_assert_eq!(pow, p - 1u8);
        Ok(LegendreValue(-1))
    }
}

/// Number of solutions (x, y) in (Z/p)^2 of a x^2 + b y^2 = c, for an odd
/// prime p not dividing ab:
///
/// - p + (-ab/p)(p - 1)   if p divides c,
/// - p - (-ab/p)          otherwise.
///
/// In particular the count is always positive, so every element of Z/p is
/// represented by the form.
pub fn count_quadratic_solutions(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    p: &BigInt,
) -> Result<BigInt, ModularError> {
    if !is_odd_prime(p) {
        return Err(ModularError::NotAnOddPrime(p.clone()));
    }
    if (a * b).mod_floor(p).is_zero() {
        return Err(ModularError::BadInput(format!(
            "p = {p} must not divide a*b = {}",
            a * b
        )));
    }
    let chi = BigInt::from(legendre(&-(a * b), p)?.value());
    let count = if c.mod_floor(p).is_zero() {
        p + chi * (p - 1u8)
    } else {
        p - chi
    };
    debug_assert!(count.is_positive());
    Ok(count)
}

/// Exhaustive count of solutions (x, y) in (Z/p)^2 of a x^2 + b y^2 = c.
/// Independent of the closed formula; runs in O(p^2), so only sensible for
/// small moduli. Any modulus p >= 1 is accepted.
pub fn count_quadratic_solutions_oracle(a: &BigInt, b: &BigInt, c: &BigInt, p: &BigInt) -> u64 {
    assert!(p.is_positive(), "modulus must be positive");
    let pm = p
        .to_u64()
        .expect("oracle modulus must be small enough to enumerate");
    let am = a.mod_floor(p).to_u64().unwrap() as u128;
    let bm = b.mod_floor(p).to_u64().unwrap() as u128;
    let cm = c.mod_floor(p).to_u64().unwrap() as u128;
    let pm128 = pm as u128;
    let mut count = 0;
    for x in 0..pm {
        let ax2 = am * ((x as u128 * x as u128) % pm128) % pm128;
        for y in 0..pm {
            let by2 = bm * ((y as u128 * y as u128) % pm128) % pm128;
            if (ax2 + by2) % pm128 == cm {
                count += 1;
            }
        }
    }
    count
}

/// One congruence `x = residue (mod modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    pub modulus: BigInt,
    pub residue: BigInt,
}

impl Congruence {
    pub fn new(modulus: impl Into<BigInt>, residue: impl Into<BigInt>) -> Self {
        Congruence {
            modulus: modulus.into(),
            residue: residue.into(),
        }
    }
}

/// A list of congruences with pairwise coprime moduli.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CongruenceSystem {
    pub congruences: Vec<Congruence>,
}

impl CongruenceSystem {
    pub fn new(congruences: Vec<Congruence>) -> Self {
        CongruenceSystem { congruences }
    }
}

/// Solves the system, returning the unique `(residue, modulus)` with
/// `0 <= residue < modulus` where `modulus` is the product of the inputs.
/// The empty system solves to `(0, 1)`.
pub fn crt_solve(sys: &CongruenceSystem) -> Result<(BigInt, BigInt), ModularError> {
    let mut residue = BigInt::zero();
    let mut modulus = BigInt::one();
    for c in &sys.congruences {
        if !c.modulus.is_positive() {
            return Err(ModularError::BadInput(format!(
                "modulus {} must be positive",
                c.modulus
            )));
        }
        let gcd = modulus.gcd(&c.modulus);
        if !gcd.is_one() {
            // gcd with the accumulated product detects any earlier overlap
            return Err(ModularError::NotCoprime {
                a: modulus,
                b: c.modulus.clone(),
            });
        }
        // x = residue + modulus * t with t = (c.residue - residue) / modulus  (mod c.modulus)
        let inv = mod_inverse(&modulus, &c.modulus).expect("coprimality was just checked");
        let t = ((&c.residue - &residue) * inv).mod_floor(&c.modulus);
        residue += &modulus * t;
        modulus *= &c.modulus;
        residue = residue.mod_floor(&modulus);
    }
    Ok((residue, modulus))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}
