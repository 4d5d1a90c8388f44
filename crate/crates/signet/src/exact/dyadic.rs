//! Dyadic interval arithmetic with directed rounding.
//!
//! Values are m·2^e with arbitrary-precision mantissa. Intervals carry
//! rigorous lower/upper bounds; every rounding step is outward. This is the
//! engine behind certified sign decisions for real cyclotomic numbers and
//! the cotangent cross-check of Dedekind sums.

use super::Rat;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dyadic number m·2^e.
#[derive(Clone, Debug)]
pub struct Dy {
    pub m: BigInt,
    pub e: i64,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Round {
    Down,
    Up,
}

impl Dy {
    pub fn zero() -> Dy {
        Dy {
            m: BigInt::zero(),
            e: 0,
        }
    }

    pub fn from_int(n: i64) -> Dy {
        Dy {
            m: BigInt::from(n),
            e: 0,
        }
    }

    fn bits(&self) -> u64 {
        self.m.bits()
    }

    /// Shift the value right by `k` bits (divide by 2^k), rounding.
    fn shr_round(&self, k: u64, r: Round) -> Dy {
        if k == 0 {
            return self.clone();
        }
        let floor = self.m.clone() >> k;
        let exact = (floor.clone() << k) == self.m;
        let m = match (r, exact) {
            (_, true) | (Round::Down, false) => floor,
            (Round::Up, false) => floor + 1,
        };
        Dy {
            m,
            e: self.e + k as i64,
        }
    }

    /// Round to at most `prec` mantissa bits, in direction `r`.
    fn round(&self, prec: u64, r: Round) -> Dy {
        let b = self.bits();
        if b <= prec {
            self.clone()
        } else {
            self.shr_round(b - prec, r)
        }
    }

    fn align(a: &Dy, b: &Dy) -> (BigInt, BigInt, i64) {
        let e = a.e.min(b.e);
        let ma = a.m.clone() << (a.e - e) as u64;
        let mb = b.m.clone() << (b.e - e) as u64;
        (ma, mb, e)
    }

    pub fn cmp(&self, other: &Dy) -> std::cmp::Ordering {
        let (ma, mb, _) = Dy::align(self, other);
        ma.cmp(&mb)
    }

    pub fn sign(&self) -> i32 {
        match self.m.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    fn add(&self, other: &Dy) -> Dy {
        let (ma, mb, e) = Dy::align(self, other);
        Dy { m: ma + mb, e }
    }

    fn mul(&self, other: &Dy) -> Dy {
        Dy {
            m: &self.m * &other.m,
            e: self.e + other.e,
        }
    }

    fn neg(&self) -> Dy {
        Dy {
            m: -self.m.clone(),
            e: self.e,
        }
    }

    /// Directed-rounding conversion from a rational: within 2^-prec·|x|.
    fn from_rat(x: &Rat, prec: u64, r: Round) -> Dy {
        if x.is_zero() {
            return Dy::zero();
        }
        let shift = prec as i64 + 8;
        let scaled_num = x.numer().clone() << shift as u64;
        let den = x.denom();
        let floor = scaled_num.div_floor(den);
        let exact = &floor * den == x.numer().clone() << shift as u64;
        let m = match (r, exact) {
            (_, true) | (Round::Down, false) => floor,
            (Round::Up, false) => floor + 1,
        };
        Dy { m, e: -shift }
    }

    /// Reciprocal with directed rounding, `prec` bits.
    fn recip(&self, prec: u64, r: Round) -> Dy {
        assert!(!self.m.is_zero(), "reciprocal of zero dyadic");
        let k = prec + self.bits() + 2;
        let num = BigInt::one() << k;
        // 1/(m·2^e) = (2^k/m)·2^(−k−e)
        let q = num.div_floor(&self.m);
        let exact = &q * &self.m == BigInt::one() << k;
        let m = match (r, exact) {
            (_, true) | (Round::Down, false) => q,
            (Round::Up, false) => q + 1,
        };
        Dy { m, e: -(k as i64) - self.e }
    }

    pub fn to_rat(&self) -> Rat {
        if self.e >= 0 {
            Rat::from_integer(self.m.clone() << self.e as u64)
        } else {
            Rat::new(self.m.clone(), BigInt::one() << (-self.e) as u64)
        }
    }
}

/// A closed interval [lo, hi] with dyadic endpoints.
#[derive(Clone, Debug)]
pub struct Iv {
    pub lo: Dy,
    pub hi: Dy,
}

impl Iv {
    pub fn point(d: Dy) -> Iv {
        Iv { lo: d.clone(), hi: d }
    }

    pub fn zero() -> Iv {
        Iv::point(Dy::zero())
    }

    pub fn from_rat(x: &Rat, prec: u64) -> Iv {
        Iv {
            lo: Dy::from_rat(x, prec, Round::Down),
            hi: Dy::from_rat(x, prec, Round::Up),
        }
    }

    /// Exact rational interval endpoints.
    pub fn from_rats(lo: &Rat, hi: &Rat, prec: u64) -> Iv {
        Iv {
            lo: Dy::from_rat(lo, prec, Round::Down),
            hi: Dy::from_rat(hi, prec, Round::Up),
        }
    }

    fn round(&self, prec: u64) -> Iv {
        Iv {
            lo: self.lo.round(prec, Round::Down),
            hi: self.hi.round(prec, Round::Up),
        }
    }

    pub fn add(&self, other: &Iv, prec: u64) -> Iv {
        Iv {
            lo: self.lo.add(&other.lo),
            hi: self.hi.add(&other.hi),
        }
        .round(prec)
    }

    pub fn neg(&self) -> Iv {
        Iv {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
        }
    }

    pub fn sub(&self, other: &Iv, prec: u64) -> Iv {
        self.add(&other.neg(), prec)
    }

    pub fn mul(&self, other: &Iv, prec: u64) -> Iv {
        let cands = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if c.cmp(&lo) == std::cmp::Ordering::Less {
                lo = c.clone();
            }
            if c.cmp(&hi) == std::cmp::Ordering::Greater {
                hi = c.clone();
            }
        }
        Iv { lo, hi }.round(prec)
    }

    pub fn scale_int(&self, k: i64, prec: u64) -> Iv {
        self.mul(&Iv::point(Dy::from_int(k)), prec)
    }

    /// Divide by a positive integer.
    pub fn div_uint(&self, k: &BigInt, prec: u64) -> Iv {
        assert!(k.is_positive());
        let shift = prec + 4;
        let div = |d: &Dy, r: Round| -> Dy {
            let num = d.m.clone() << shift;
            let q = num.div_floor(k);
            let exact = &q * k == d.m.clone() << shift;
            let m = match (r, exact) {
                (_, true) | (Round::Down, false) => q,
                (Round::Up, false) => q + 1,
            };
            Dy {
                m,
                e: d.e - shift as i64,
            }
        };
        Iv {
            lo: div(&self.lo, Round::Down),
            hi: div(&self.hi, Round::Up),
        }
        .round(prec)
    }

    /// Reciprocal; None when the interval contains 0.
    pub fn recip(&self, prec: u64) -> Option<Iv> {
        if self.lo.sign() <= 0 && self.hi.sign() >= 0 {
            return None;
        }
        Some(Iv {
            lo: self.hi.recip(prec, Round::Down),
            hi: self.lo.recip(prec, Round::Up),
        })
    }

    pub fn div(&self, other: &Iv, prec: u64) -> Option<Iv> {
        Some(self.mul(&other.recip(prec)?, prec))
    }

    /// Sign if certified, else None (interval straddles zero).
    pub fn certified_sign(&self) -> Option<i32> {
        if self.lo.sign() > 0 {
            Some(1)
        } else if self.hi.sign() < 0 {
            Some(-1)
        } else if self.lo.sign() == 0 && self.hi.sign() == 0 {
            Some(0)
        } else {
            None
        }
    }

    /// Upper bound on |x| over the interval.
    fn abs_hi(&self) -> Dy {
        let a = self.lo.neg();
        if a.cmp(&self.hi) == std::cmp::Ordering::Greater {
            a
        } else {
            self.hi.clone()
        }
    }

    /// Width as an exact rational.
    pub fn width(&self) -> Rat {
        self.hi.to_rat() - self.lo.to_rat()
    }

    /// Blow up the interval by ±t.
    fn widen(&self, t: &Dy) -> Iv {
        Iv {
            lo: self.lo.add(&t.neg()),
            hi: self.hi.add(t),
        }
    }
}

/// atan(1/x) for integer x ≥ 2 as an exact-rational bracketing interval,
/// from the alternating Leibniz series.
fn atan_inv(x: i64, prec: u64) -> Iv {
    let xr = Rat::from_integer(BigInt::from(x));
    let x2 = &xr * &xr;
    let mut term = Rat::one() / &xr;
    let mut sum = Rat::zero();
    let tol = Rat::new(BigInt::one(), BigInt::one() << (prec + 6));
    let mut j: i64 = 0;
    loop {
        let t = &term / Rat::from_integer(BigInt::from(2 * j + 1));
        if j % 2 == 0 {
            sum += &t;
        } else {
            sum -= &t;
        }
        term = &term / &x2;
        let next = &term / Rat::from_integer(BigInt::from(2 * j + 3));
        if next < tol {
            // alternating series: truncation error bounded by the next term
            let (lo, hi) = if j % 2 == 0 {
                (&sum - &next, sum.clone())
            } else {
                (sum.clone(), &sum + &next)
            };
            return Iv::from_rats(&lo, &hi, prec);
        }
        j += 1;
    }
}

/// π via Machin's formula, as a certified interval.
pub fn pi(prec: u64) -> Iv {
    let a = atan_inv(5, prec + 8).scale_int(16, prec + 8);
    let b = atan_inv(239, prec + 8).scale_int(4, prec + 8);
    a.sub(&b, prec)
}

/// cos over an interval via Taylor expansion with an alternating-series
/// tail bound. Valid for |x| bounded (used with |x| ≤ 2π + 1).
pub fn cos_iv(x: &Iv, prec: u64) -> Iv {
    sin_cos_taylor(x, prec, false)
}

/// sin over an interval, same scheme.
pub fn sin_iv(x: &Iv, prec: u64) -> Iv {
    sin_cos_taylor(x, prec, true)
}

fn sin_cos_taylor(x: &Iv, prec: u64, sine: bool) -> Iv {
    let wp = prec + 16;
    let x2 = x.mul(x, wp);
    // terms: cos: x^{2k}/(2k)!, sin: x^{2k+1}/(2k+1)!
    let mut term = if sine { x.clone() } else { Iv::point(Dy::from_int(1)) };
    let mut sum = Iv::zero();
    let mut k: u64 = 0;
    let bound = x.abs_hi();
    loop {
        sum = if k % 2 == 0 {
            sum.add(&term, wp)
        } else {
            sum.sub(&term, wp)
        };
        let (d1, d2) = if sine {
            (2 * k + 2, 2 * k + 3)
        } else {
            (2 * k + 1, 2 * k + 2)
        };
        let denom = BigInt::from(d1) * BigInt::from(d2);
        term = term.mul(&x2, wp).div_uint(&denom, wp);
        k += 1;
        // once the degree exceeds |x| the terms decrease monotonically and
        // the alternating tail is bounded by the magnitude of the next term
        let deg = if sine { 2 * k + 1 } else { 2 * k };
        let small = {
            let t = term.abs_hi();
            t.to_rat().abs() < Rat::new(BigInt::one(), BigInt::one() << (prec + 8))
        };
        if small && Dy::from_int(deg as i64).cmp(&bound) == std::cmp::Ordering::Greater {
            let tail = term.abs_hi();
            return sum.widen(&tail).round(prec);
        }
    }
}
