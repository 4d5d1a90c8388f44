//! Dense univariate polynomials over the rationals, lowest degree first.

use super::{fmt_rat, parse_rat, Rat};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    /// Coefficients, constant term first; empty means the zero polynomial.
    /// Leading coefficient is nonzero whenever the vector is nonempty.
    pub c: Vec<Rat>,
}

impl Poly {
    pub fn new(mut c: Vec<Rat>) -> Self {
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(x: Rat) -> Self {
        if x.is_zero() {
            Poly::zero()
        } else {
            Poly { c: vec![x] }
        }
    }

    pub fn x() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&n| super::rat(n)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.c.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Rat {
        self.c.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.c.len().max(other.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i) + other.coeff(i));
        }
        Poly::new(c)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.c.len().max(other.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i) - other.coeff(i));
        }
        Poly::new(c)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            c: self.c.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rat::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }

    pub fn scale(&self, k: &Rat) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            c: self.c.iter().map(|x| x * k).collect(),
        }
    }

    /// Multiply by X^n.
    pub fn shift_up(&self, n: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rat::zero(); n];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
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

    pub fn derivative(&self) -> Poly {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, a)| a * Rat::from_integer(BigInt::from(i + 1)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// Evaluate at another polynomial (composition).
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(a.clone()));
        }
        acc
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.leading();
        self.scale(&lc.recip())
    }

    /// Reverse coefficients: X^deg · P(1/X).
    pub fn reversed(&self) -> Poly {
        let mut c = self.c.clone();
        c.reverse();
        Poly::new(c)
    }

    /// Quotient and remainder of Euclidean division.
    pub fn divmod(&self, q: &Poly) -> Result<(Poly, Poly)> {
        if q.is_zero() {
            return Err(Error::ZeroPolyDivision);
        }
        let dq = q.deg();
        let lc = q.leading();
        let mut rem = self.c.clone();
        if rem.len() < q.c.len() {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - dq];
        for i in (dq..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let f = &rem[i] / &lc;
            quot[i - dq] = f.clone();
            rem[i] = Rat::zero();
            for (j, b) in q.c.iter().enumerate().take(dq) {
                let idx = i - dq + j;
                let t = &f * b;
                rem[idx] = &rem[idx] - t;
            }
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        match other.divmod(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Exact quotient; panics if the division is not exact.
    pub fn div_exact(&self, q: &Poly) -> Poly {
        let (d, r) = self.divmod(q).expect("division by zero polynomial");
        assert!(r.is_zero(), "inexact polynomial division");
        d
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroInput);
        }
        if self.is_zero() {
            return Ok(other.monic());
        }
        if other.is_zero() {
            return Ok(self.monic());
        }
        // primitive pseudo-remainder sequence over ℤ: the rational Euclidean
        // algorithm blows coefficients up exponentially, stripping the
        // content each round keeps them subresultant-sized
        let (mut a, _) = self.primitive_integer();
        let (mut b, _) = other.primitive_integer();
        if int_degree(&a) < int_degree(&b) {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let db = int_degree(&b).expect("nonzero by the loop contract");
            if db == 0 {
                return Ok(Poly::one());
            }
            let r = int_pseudo_rem(&a, &b, db);
            if r.is_empty() {
                return Ok(Poly::from_bigint(&b).monic());
            }
            a = b;
            b = r;
        }
    }

    /// Extended gcd: returns (g, s, t) monic g with s·self + t·other = g.
    pub fn xgcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroInput);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        let (mut sa, mut sb) = (Poly::one(), Poly::zero());
        let (mut ta, mut tb) = (Poly::zero(), Poly::one());
        while !b.is_zero() {
            let (q, r) = a.divmod(&b)?;
            a = b;
            b = r;
            let ns = sa.sub(&q.mul(&sb));
            sa = sb;
            sb = ns;
            let nt = ta.sub(&q.mul(&tb));
            ta = tb;
            tb = nt;
        }
        let lc = a.leading();
        let inv = lc.recip();
        Ok((a.scale(&inv), sa.scale(&inv), ta.scale(&inv)))
    }

    /// Monic product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        if self.is_constant() {
            return Ok(Poly::one());
        }
        let g = self.gcd(&self.derivative())?;
        Ok(self.div_exact(&g).monic())
    }

    /// Clear denominators and content: primitive integer coefficients with
    /// positive leading coefficient, plus the positive rational factor pulled
    /// out (self = factor · primitive, up to the recorded sign).
    pub fn primitive_integer(&self) -> (Vec<BigInt>, Rat) {
        if self.is_zero() {
            return (vec![], Rat::one());
        }
        let mut den = BigInt::one();
        for a in &self.c {
            den = den.lcm(a.denom());
        }
        let ints: Vec<BigInt> = self
            .c
            .iter()
            .map(|a| a.numer() * (&den / a.denom()))
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        if g.is_zero() {
            g = BigInt::one();
        }
        let mut prim: Vec<BigInt> = ints.iter().map(|v| v / &g).collect();
        let mut factor = Rat::new(g, den);
        if prim.last().map_or(false, |x| x.is_negative()) {
            for v in prim.iter_mut() {
                *v = -v.clone();
            }
            factor = -factor;
        }
        (prim, factor)
    }

    pub fn from_bigint(c: &[BigInt]) -> Poly {
        Poly::new(c.iter().map(|v| Rat::from_integer(v.clone())).collect())
    }

    /// Cauchy root bound: 1 + max |c_i| / |c_n|, as an exact rational.
    pub fn cauchy_bound(&self) -> Rat {
        let lc = self.leading();
        let mut m = Rat::zero();
        for a in self.c.iter().take(self.c.len().saturating_sub(1)) {
            let v = (a / &lc).abs();
            if v > m {
                m = v;
            }
        }
        m + Rat::one()
    }

    /// All rational roots, in increasing order, found via the rational root
    /// theorem on the primitive integer model; None when the leading or
    /// constant coefficient is too large to factor.
    pub fn rational_roots(&self) -> Option<Vec<Rat>> {
        if self.is_zero() || self.is_constant() {
            return Some(vec![]);
        }
        let (ints, _) = self.primitive_integer();
        // pull out the root 0 first
        let shift = ints.iter().position(|c| !Zero::is_zero(c)).unwrap_or(0);
        let mut roots = Vec::new();
        if shift > 0 {
            roots.push(Rat::zero());
        }
        let ints = &ints[shift..];
        if ints.len() < 2 {
            roots.sort();
            return Some(roots);
        }
        let c0 = &ints[0];
        let lc = &ints[ints.len() - 1];
        let ps = crate::arith::divisors(c0)?;
        let qs = crate::arith::divisors(lc)?;
        for p in &ps {
            for q in &qs {
                for cand in [Rat::new(p.clone(), q.clone()), Rat::new(-p.clone(), q.clone())] {
                    if Zero::is_zero(&self.eval(&cand)) && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        Some(roots)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.c.iter().map(fmt_rat).collect()
    }

    pub fn parse_strings(ss: &[String]) -> Option<Poly> {
        let mut c = Vec::with_capacity(ss.len());
        for s in ss {
            c.push(parse_rat(s)?);
        }
        Some(Poly::new(c))
    }
}

/// Degree of an integer coefficient vector, ignoring leading zeros.
fn int_degree(p: &[BigInt]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Strip leading zeros and divide out the content.
fn int_primitive(p: &mut Vec<BigInt>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    let mut g = BigInt::zero();
    for c in p.iter() {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in p.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// Primitive part of the pseudo-remainder of a by b (deg b = db ≥ 1);
/// empty when b divides a.
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt], db: usize) -> Vec<BigInt> {
    let lcb = &b[db];
    let mut r = a.to_vec();
    while let Some(dr) = int_degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lcb;
        }
        for i in 0..=db {
            r[dr - db + i] = &r[dr - db + i] - &lr * &b[i];
        }
    }
    int_primitive(&mut r);
    r
}

/// Lagrange interpolation through (xs[k], ys[k]) with distinct integer nodes.
pub fn interpolate_i64(xs: &[i64], ys: &[Rat]) -> Option<Poly> {
    let mut acc = Poly::zero();
    for (i, (&xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut num = Poly::constant(yi.clone());
        let mut den = Rat::from_integer(1.into());
        for (j, &xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            num = num.mul(&Poly::from_i64(&[-xj, 1]));
            den *= Rat::from_integer(BigInt::from(xi - xj));
        }
        if den.is_zero() {
            return None;
        }
        acc = acc.add(&num.scale(&den.recip()));
    }
    Some(acc)
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if a.is_negative() { "-" } else { "+" })?;
            } else if a.is_negative() {
                write!(f, "-")?;
            }
            let aa = a.abs();
            match i {
                0 => write!(f, "{}", fmt_rat(&aa))?,
                _ => {
                    if !aa.is_one() {
                        write!(f, "{}·", fmt_rat(&aa))?;
                    }
                    if i == 1 {
                        write!(f, "X")?;
                    } else {
                        write!(f, "X^{}", i)?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// The q-th cyclotomic polynomial, computed by dividing X^q − 1 by the
/// cyclotomic polynomials of the proper divisors of q.
pub fn cyclotomic_polynomial(q: u64) -> Result<Poly> {
    if q == 0 {
        return Err(Error::ZeroInput);
    }
    fn phi(q: u64, cache: &mut std::collections::HashMap<u64, Poly>) -> Poly {
        if let Some(p) = cache.get(&q) {
            return p.clone();
        }
        let mut num = Poly::new({
            let mut c = vec![-Rat::one()];
            c.extend(std::iter::repeat(Rat::zero()).take(q as usize - 1));
            c.push(Rat::one());
            c
        });
        for d in 1..q {
            if q % d == 0 {
                let pd = phi(d, cache);
                num = num.div_exact(&pd);
            }
        }
        cache.insert(q, num.clone());
        num
    }
    let mut cache = std::collections::HashMap::new();
    Ok(phi(q, &mut cache))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_frac};

    #[test]
    fn divmod_basic() {
        // X² − 1 = (2X)(X/2) − 1
        let p = Poly::from_i64(&[-1, 0, 1]);
        let q = Poly::from_i64(&[0, 2]);
        let (quot, rem) = p.divmod(&q).unwrap();
        assert_eq!(quot, Poly::new(vec![rat(0), rat_frac(1, 2)]));
        assert_eq!(rem, Poly::from_i64(&[-1]));
    }

    #[test]
    fn divmod_by_one_and_self() {
        let p = Poly::from_i64(&[3, 1, 4]);
        let (q, r) = p.divmod(&Poly::one()).unwrap();
        assert_eq!(q, p);
        assert!(r.is_zero());
        let s = Poly::from_i64(&[1, 1]);
        let (q, r) = s.divmod(&s).unwrap();
        assert_eq!(q, Poly::one());
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_basic() {
        let a = Poly::from_i64(&[-1, 0, 1]); // X²−1
        let b = Poly::from_i64(&[-1, 0, 0, 1]); // X³−1
        assert_eq!(a.gcd(&b).unwrap(), Poly::from_i64(&[-1, 1]));
        let p = Poly::from_i64(&[2, 3, 1]);
        assert_eq!(p.gcd(&Poly::zero()).unwrap(), p.monic());
        // (X−1)²(X+2) vs (X−1)(X+3)
        let x1 = Poly::from_i64(&[-1, 1]);
        let l = x1.mul(&x1).mul(&Poly::from_i64(&[2, 1]));
        let r = x1.mul(&Poly::from_i64(&[3, 1]));
        assert_eq!(l.gcd(&r).unwrap(), x1);
    }

    #[test]
    fn squarefree() {
        let x1 = Poly::from_i64(&[-1, 1]);
        let p = x1.mul(&x1).mul(&Poly::from_i64(&[2, 1]));
        assert_eq!(
            p.squarefree_part().unwrap(),
            x1.mul(&Poly::from_i64(&[2, 1]))
        );
        let q = Poly::from_i64(&[1, 0, 1]);
        assert_eq!(q.squarefree_part().unwrap(), q);
        let x4 = Poly::from_i64(&[0, 0, 0, 0, 1]);
        assert_eq!(x4.squarefree_part().unwrap(), Poly::x());
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), Poly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4).unwrap(), Poly::from_i64(&[1, 0, 1]));
        assert_eq!(
            cyclotomic_polynomial(12).unwrap(),
            Poly::from_i64(&[1, 0, -1, 0, 1])
        );
    }

    #[test]
    fn primitive_integer_roundtrip() {
        let p = Poly::new(vec![rat_frac(1, 2), rat_frac(-3, 4)]);
        let (ints, f) = p.primitive_integer();
        assert_eq!(ints, vec![BigInt::from(-2), BigInt::from(3)]);
        assert_eq!(Poly::from_bigint(&ints).scale(&f), p);
    }
}
