//! Reduced rational functions P/Q with monic denominator.

use super::poly::Poly;
use super::{Rat, Scalar};
use num_traits::Zero;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    pub num: Poly,
    pub den: Poly,
}

impl RatFunc {
    /// Build and reduce; panics on zero denominator.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator in rational function");
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den).expect("gcd of nonzero polynomials");
        let mut num = num.div_exact(&g);
        let mut den = den.div_exact(&g);
        let lc = den.leading();
        let inv = lc.recip();
        num = num.scale(&inv);
        den = den.scale(&inv);
        RatFunc { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(x: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(x))
    }

    pub fn x() -> Self {
        RatFunc::from_poly(Poly::x())
    }

    pub fn is_poly(&self) -> bool {
        self.den == Poly::one()
    }

    /// Evaluate at a rational point; None at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if Zero::is_zero(&d) {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        RatFunc::new(
            self.num
                .mul(&other.den)
                .add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()))
        }
    }
    fn conj(&self) -> Self {
        self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn reduction() {
        // (X²−1)/(2X−2) = (X+1)/2 with monic denominator 1
        let f = RatFunc::new(Poly::from_i64(&[-1, 0, 1]), Poly::from_i64(&[-2, 2]));
        assert_eq!(f.num, Poly::new(vec![rat(1) / rat(2), rat(1) / rat(2)]));
        assert_eq!(f.den, Poly::one());
    }

    #[test]
    fn field_ops() {
        let x = RatFunc::x();
        let inv = x.inv().unwrap();
        assert_eq!(x.mul(&inv), RatFunc::one());
        let s = x.add(&inv); // (X²+1)/X
        assert_eq!(s.num, Poly::from_i64(&[1, 0, 1]));
        assert_eq!(s.den, Poly::from_i64(&[0, 1]));
    }
}
