//! Cyclotomic numbers: elements of ℚ(ζ_q), represented modulo the q-th
//! cyclotomic polynomial. Conjugation is ζ ↦ ζ^{q−1}; mixed conductors embed
//! into ℚ(ζ_lcm). Signs of conjugation-fixed elements are certified by
//! adaptive dyadic interval evaluation under the embedding ζ_q ↦ exp(2πi/q).

use super::dyadic::{cos_iv, pi, Iv};
use super::poly::{cyclotomic_polynomial, Poly};
use super::{Rat, Scalar};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::sync::{Mutex, OnceLock};

fn phi_cache() -> &'static Mutex<std::collections::HashMap<u64, Poly>> {
    static CACHE: OnceLock<Mutex<std::collections::HashMap<u64, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(std::collections::HashMap::new()))
}

fn phi(q: u64) -> Poly {
    let mut c = phi_cache().lock().unwrap();
    c.entry(q)
        .or_insert_with(|| cyclotomic_polynomial(q).expect("q >= 1"))
        .clone()
}

/// Starting interval precision for sign certification (bits). Overridable via
/// SIGNET_PRECISION_START; affects speed only, never results.
pub(crate) fn start_precision() -> u64 {
    static P: OnceLock<u64> = OnceLock::new();
    *P.get_or_init(|| {
        std::env::var("SIGNET_PRECISION_START")
            .ok()
            .and_then(|s| s.parse().ok())
            .filter(|&p| p >= 8 && p <= 1 << 20)
            .unwrap_or(64)
    })
}

#[derive(Clone, Debug)]
pub struct Cyc {
    /// Conductor.
    pub q: u64,
    /// Representative, reduced modulo Φ_q.
    pub rep: Poly,
}

impl Cyc {
    pub fn new(q: u64, rep: Poly) -> Cyc {
        assert!(q >= 1);
        let (_, r) = rep.divmod(&phi(q)).expect("cyclotomic modulus nonzero");
        Cyc { q, rep: r }
    }

    pub fn from_rat(x: Rat) -> Cyc {
        Cyc {
            q: 1,
            rep: Poly::constant(x),
        }
    }

    /// ζ_q^a.
    pub fn root_of_unity(a: i64, q: u64) -> Cyc {
        assert!(q >= 1);
        let a = a.rem_euclid(q as i64) as usize;
        Cyc::new(q, Poly::x().pow(a as u32))
    }

    pub fn zeta(q: u64) -> Cyc {
        Cyc::root_of_unity(1, q)
    }

    /// Re-embed into ℚ(ζ_m) for q | m, by X ↦ X^{m/q}.
    pub fn embed(&self, m: u64) -> Cyc {
        assert!(m % self.q == 0, "conductor {} does not divide {}", self.q, m);
        if m == self.q {
            return self.clone();
        }
        let k = (m / self.q) as u32;
        let img = self.rep.compose(&Poly::x().pow(k));
        Cyc::new(m, img)
    }

    fn common(a: &Cyc, b: &Cyc) -> (Cyc, Cyc) {
        let m = a.q.lcm(&b.q);
        (a.embed(m), b.embed(m))
    }

    /// Rational value if the element lies in ℚ.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.rep.is_constant() {
            Some(self.rep.coeff(0))
        } else {
            None
        }
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Certified sign of a conjugation-fixed element.
    ///
    /// Zero is decided symbolically (the reduced representative vanishes);
    /// a nonzero value is boxed by evaluating Σ c_j·cos(2πj/q) in dyadic
    /// intervals, doubling the working precision until 0 is excluded.
    /// Termination: a nonzero algebraic number has nonzero absolute value.
    pub fn sign(&self) -> Result<i32> {
        if !self.is_real() {
            return Err(Error::NotReal);
        }
        if self.rep.is_zero() {
            return Ok(0);
        }
        if let Some(r) = self.as_rat() {
            return Ok(super::rat_sign(&r));
        }
        let mut prec = start_precision();
        loop {
            let iv = self.eval_real(prec);
            if let Some(s) = iv.certified_sign() {
                if s != 0 {
                    return Ok(s);
                }
            }
            prec *= 2;
        }
    }

    /// Interval for the real part of the embedded value (equal to the value
    /// itself when the element is conjugation-fixed).
    pub fn eval_real(&self, prec: u64) -> Iv {
        let wp = prec + 8;
        let two_pi = pi(wp).scale_int(2, wp);
        let q = BigInt::from(self.q);
        let base = two_pi.div_uint(&q, wp);
        let mut acc = Iv::zero();
        for (j, c) in self.rep.c.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let angle = base.scale_int(j as i64, wp);
            let cj = cos_iv(&angle, wp);
            acc = acc.add(&cj.mul(&Iv::from_rat(c, wp), wp), wp);
        }
        acc
    }
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Cyc::common(self, other);
        a.rep == b.rep
    }
}

impl Scalar for Cyc {
    fn zero() -> Self {
        Cyc::from_rat(<Rat as Zero>::zero())
    }
    fn one() -> Self {
        Cyc::from_rat(num_traits::One::one())
    }
    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        let (a, b) = Cyc::common(self, other);
        Cyc::new(a.q, a.rep.add(&b.rep))
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        let (a, b) = Cyc::common(self, other);
        Cyc::new(a.q, a.rep.mul(&b.rep))
    }
    fn neg(&self) -> Self {
        Cyc {
            q: self.q,
            rep: self.rep.neg(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.rep.is_zero() {
            return None;
        }
        // extended gcd with Φ_q: s·rep + t·Φ_q = 1 since Φ_q is irreducible
        let (g, s, _) = self.rep.xgcd(&phi(self.q)).ok()?;
        debug_assert!(g == Poly::one(), "cyclotomic polynomial not coprime to nonzero rep");
        Some(Cyc::new(self.q, s))
    }
    fn conj(&self) -> Self {
        // ζ ↦ ζ^{q−1} = ζ^{-1}
        if self.q == 1 {
            return self.clone();
        }
        let img = self.rep.compose(&Poly::x().pow((self.q - 1) as u32));
        Cyc::new(self.q, img)
    }
}

impl super::OrderedScalar for Cyc {
    fn sign(&self) -> i32 {
        Cyc::sign(self).expect("sign of a non-real cyclotomic number")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn rational_reduction() {
        // ζ_3 + ζ_3² = −1
        let z = Cyc::zeta(3);
        let s = z.add(&z.mul(&z));
        assert_eq!(s.as_rat(), Some(rat(-1)));
        assert_eq!(s.sign().unwrap(), -1);
    }

    #[test]
    fn golden_sign() {
        // ζ_5 + ζ_5⁴ = 2cos(72°) ≈ 0.618 > 0
        let z = Cyc::zeta(5);
        let s = z.add(&Cyc::root_of_unity(4, 5));
        assert!(s.is_real());
        assert_eq!(s.sign().unwrap(), 1);
        // and ζ_5² + ζ_5³ = 2cos(144°) < 0
        let t = Cyc::root_of_unity(2, 5).add(&Cyc::root_of_unity(3, 5));
        assert_eq!(t.sign().unwrap(), -1);
    }

    #[test]
    fn zero_sign_symbolic() {
        assert_eq!(Cyc::from_rat(rat(0)).sign().unwrap(), 0);
        // 1 + ζ + ζ² + ζ³ + ζ⁴ = 0 in ℚ(ζ_5)
        let mut s = Cyc::from_rat(rat(1));
        for a in 1..5 {
            s = s.add(&Cyc::root_of_unity(a, 5));
        }
        assert!(s.is_zero());
        assert_eq!(s.sign().unwrap(), 0);
    }

    #[test]
    fn conjugation_involutive_automorphism() {
        let x = Cyc::zeta(7).add(&Cyc::from_rat(rat(2)));
        let y = Cyc::root_of_unity(3, 7).mul(&Cyc::from_rat(rat(-1)));
        assert_eq!(x.conj().conj(), x);
        assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
        assert_eq!(x.add(&y).conj(), x.conj().add(&y.conj()));
    }

    #[test]
    fn inverse() {
        let x = Cyc::zeta(12).add(&Cyc::from_rat(rat(3)));
        let i = x.inv().unwrap();
        assert_eq!(x.mul(&i), Cyc::one());
    }

    #[test]
    fn mixed_conductors() {
        // ζ_2 = −1 = ζ_6³
        let a = Cyc::zeta(2);
        let b = Cyc::root_of_unity(3, 6);
        assert_eq!(a, b);
        let s = a.add(&Cyc::zeta(3));
        assert_eq!(s.q, 6);
    }

    #[test]
    fn not_real_rejected() {
        assert!(matches!(Cyc::zeta(5).sign(), Err(Error::NotReal)));
    }

    #[test]
    fn sign_multiplicative() {
        let x = Cyc::zeta(5).add(&Cyc::root_of_unity(4, 5)); // > 0
        let y = Cyc::root_of_unity(2, 5).add(&Cyc::root_of_unity(3, 5)); // < 0
        let xy = x.mul(&y);
        assert_eq!(
            xy.sign().unwrap(),
            x.sign().unwrap() * y.sign().unwrap()
        );
    }
}
