//! The exact scalar tower: rationals, polynomials, rational functions,
//! cyclotomic numbers, and the dyadic interval engine that certifies signs.

pub mod cyclotomic;
pub mod dyadic;
pub mod poly;
pub mod ratfunc;

pub use cyclotomic::Cyc;
pub use poly::Poly;
pub use ratfunc::RatFunc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always kept reduced with positive denominator
/// (num-rational maintains both invariants).
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse "p/q" or "p" into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Render a rational as "p/q" (or "p" when integral).
pub fn fmt_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn rat_sign(x: &Rat) -> i32 {
    if Zero::is_zero(x) {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Field operations shared by every scalar the matrix layer works over.
///
/// `conj` is the identity for Rat and RatFunc and cyclotomic conjugation
/// (the ring map sending each root of unity to its inverse) for Cyc.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; None for zero.
    fn inv(&self) -> Option<Self>;
    fn conj(&self) -> Self;
}

/// Scalars with an exact, certified sign: rationals and conjugation-fixed
/// cyclotomic numbers. Panics on values without a real embedding are
/// prevented upstream by hermitian-ness assertions.
pub trait OrderedScalar: Scalar {
    /// Exact sign in {-1, 0, 1}.
    fn sign(&self) -> i32;
}

impl Scalar for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn conj(&self) -> Self {
        self.clone()
    }
}

impl OrderedScalar for Rat {
    fn sign(&self) -> i32 {
        rat_sign(self)
    }
}
