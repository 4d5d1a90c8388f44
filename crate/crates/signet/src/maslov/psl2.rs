//! PSL(2,ℤ) as the free product ℤ/2 * ℤ/3: exact normal forms in the
//! generators S and U = TS, and the Rademacher function as the sum of
//! U-exponents of the normal form.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An integer 2×2 matrix of determinant 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SL2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl SL2 {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<SL2> {
        let m = SL2 { a, b, c, d };
        if !m.det().is_one() {
            return Err(Error::NotUnimodular);
        }
        Ok(m)
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<SL2> {
        SL2::new(BigInt::from(a), BigInt::from(b), BigInt::from(c), BigInt::from(d))
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn identity() -> SL2 {
        SL2::from_i64(1, 0, 0, 1).expect("identity is unimodular")
    }

    /// S = [[0, −1], [1, 0]], of order 2 in PSL(2,ℤ).
    pub fn s() -> SL2 {
        SL2::from_i64(0, -1, 1, 0).expect("unimodular")
    }

    /// T = [[1, 1], [0, 1]].
    pub fn t() -> SL2 {
        SL2::from_i64(1, 1, 0, 1).expect("unimodular")
    }

    /// U = T·S = [[1, −1], [1, 0]], of order 3 in PSL(2,ℤ).
    pub fn u() -> SL2 {
        SL2::t().mul(&SL2::s())
    }

    pub fn mul(&self, o: &SL2) -> SL2 {
        SL2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    pub fn inverse(&self) -> SL2 {
        SL2 {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    pub fn neg(&self) -> SL2 {
        SL2 {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    /// Integer power (negative exponents through the inverse).
    pub fn pow(&self, e: i64) -> SL2 {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = SL2::identity();
        for _ in 0..e.abs() {
            acc = acc.mul(&base);
        }
        acc
    }
}

/// The unique alternating word U^{ε_0} S U^{ε_1} S … S U^{ε_last} in
/// ℤ/2 * ℤ/3 representing a matrix up to sign. Outer exponents lie in
/// {−1, 0, 1}; inner ones in {−1, 1}. The number of S letters is
/// exps.len() − 1; `exps = [0]` is the identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PSL2Word {
    pub exps: Vec<i8>,
}

impl PSL2Word {
    /// Multiply the word out in SL(2,ℤ); the result represents ±A.
    pub fn evaluate(&self) -> SL2 {
        let u = SL2::u();
        let s = SL2::s();
        let mut acc = SL2::identity();
        for (i, &e) in self.exps.iter().enumerate() {
            if i > 0 {
                acc = acc.mul(&s);
            }
            acc = acc.mul(&u.pow(e as i64));
        }
        acc
    }

    /// Rademacher function: the sum of U-exponents.
    pub fn r_sum(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Letter {
    S,
    /// U^e with e ∈ {−1, 1}.
    U(i8),
}

/// Reduce a letter sequence in ℤ/2 * ℤ/3 (S² = 1, U³ = 1) to the unique
/// alternating word, by stack cancellation.
fn reduce(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut stack: Vec<Letter> = Vec::new();
    for l in letters {
        push_reduced(&mut stack, l);
    }
    stack
}

fn push_reduced(stack: &mut Vec<Letter>, l: Letter) {
    match (stack.last().copied(), l) {
        (Some(Letter::S), Letter::S) => {
            stack.pop();
        }
        (Some(Letter::U(a)), Letter::U(b)) => {
            stack.pop();
            let e = (a + b).rem_euclid(3);
            let e = if e == 2 { -1 } else { e };
            if e != 0 {
                push_reduced(stack, Letter::U(e));
            }
        }
        _ => stack.push(l),
    }
}

/// The alternating S/U normal form of A in PSL(2,ℤ). Evaluating the word
/// reproduces A up to sign.
pub fn psl2_normal_form(m: &SL2) -> Result<PSL2Word> {
    if !m.det().is_one() {
        return Err(Error::NotUnimodular);
    }
    // Euclidean decomposition into T-powers separated by S: while c ≠ 0,
    // split off T^q S with q chosen to shrink |c|
    let mut t_word: Vec<i64> = Vec::new(); // q1, S, q2, S, …, qm (as exponents)
    let mut cur = m.clone();
    loop {
        if cur.c.is_zero() {
            // ±T^b
            let q = if cur.a.is_negative() { -&cur.b } else { cur.b.clone() };
            let q: i64 = num_traits::ToPrimitive::to_i64(&q)
                .ok_or_else(|| Error::Unsupported("entry exceeds i64 range".into()))?;
            t_word.push(q);
            break;
        }
        // nearest-integer quotient keeps the new lower-left small
        let q = nearest_quotient(&cur.a, &cur.c);
        let qi: i64 = num_traits::ToPrimitive::to_i64(&q)
            .ok_or_else(|| Error::Unsupported("entry exceeds i64 range".into()))?;
        t_word.push(qi);
        // cur = T^q · S · rest  ⇒  rest = S^{-1} · T^{-q} · cur; in PSL(2,ℤ)
        // we may use S for S^{-1}
        cur = SL2::s().inverse().mul(&SL2::t().pow(-qi)).mul(&cur);
    }
    // substitute T = U·S, T^{-1} = S·U^{-1} (in PSL(2,ℤ)) and reduce
    let mut letters: Vec<Letter> = Vec::new();
    for (i, &q) in t_word.iter().enumerate() {
        if q >= 0 {
            for _ in 0..q {
                letters.push(Letter::U(1));
                letters.push(Letter::S);
            }
        } else {
            for _ in 0..(-q) {
                letters.push(Letter::S);
                letters.push(Letter::U(-1));
            }
        }
        if i + 1 < t_word.len() {
            letters.push(Letter::S);
        }
    }
    let reduced = reduce(letters);
    // read off the alternating exponent vector
    let mut exps: Vec<i8> = Vec::new();
    let mut pending_u: Option<i8> = None;
    for l in reduced {
        match l {
            Letter::U(e) => {
                debug_assert!(pending_u.is_none(), "alternation after reduction");
                pending_u = Some(e);
            }
            Letter::S => {
                exps.push(pending_u.take().unwrap_or(0));
            }
        }
    }
    exps.push(pending_u.unwrap_or(0));
    Ok(PSL2Word { exps })
}

/// Quotient q minimizing |a − q·c| (ties toward the floor).
fn nearest_quotient(a: &BigInt, c: &BigInt) -> BigInt {
    use num_integer::Integer;
    let q = a.div_floor(c);
    let r = a - &q * c; // 0 ≤ r < |c|
    if &r * 2 > c.abs() {
        q + 1
    } else {
        q
    }
}

/// Rademacher function R(A): the sum of U-exponents of the normal form.
pub fn rademacher(m: &SL2) -> Result<i64> {
    Ok(psl2_normal_form(m)?.r_sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn proj_eq(x: &SL2, y: &SL2) -> bool {
        x == y || *x == y.neg()
    }

    #[test]
    fn generators_normalize() {
        assert_eq!(psl2_normal_form(&SL2::identity()).unwrap().exps, vec![0]);
        assert_eq!(psl2_normal_form(&SL2::u()).unwrap().exps, vec![1]);
        assert_eq!(psl2_normal_form(&SL2::s()).unwrap().exps, vec![0, 0]);
    }

    #[test]
    fn rademacher_basics() {
        assert_eq!(rademacher(&SL2::identity()).unwrap(), 0);
        assert_eq!(rademacher(&SL2::u()).unwrap(), 1);
        assert_eq!(rademacher(&SL2::s()).unwrap(), 0);
        assert_eq!(rademacher(&SL2::t()).unwrap(), 1);
    }

    #[test]
    fn t_is_us() {
        let w = psl2_normal_form(&SL2::t()).unwrap();
        assert_eq!(w.exps, vec![1, 0]);
        assert!(proj_eq(&w.evaluate(), &SL2::t()));
    }

    #[test]
    fn round_trips_on_random_words() {
        let mut x: u64 = 0xABCDEF0123456789;
        for _ in 0..60 {
            let mut m = SL2::identity();
            let len = 1 + (x % 9) as usize;
            for _ in 0..len {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                m = match x % 4 {
                    0 => m.mul(&SL2::s()),
                    1 => m.mul(&SL2::t()),
                    2 => m.mul(&SL2::t().inverse()),
                    _ => m.mul(&SL2::u()),
                };
            }
            let w = psl2_normal_form(&m).unwrap();
            assert!(proj_eq(&w.evaluate(), &m), "failed on {m:?} -> {w:?}");
            // alternation invariants
            for (i, &e) in w.exps.iter().enumerate() {
                if i == 0 || i + 1 == w.exps.len() {
                    assert!((-1..=1).contains(&e));
                } else {
                    assert!(e == 1 || e == -1);
                }
            }
        }
    }

    #[test]
    fn normal_form_of_product_matches() {
        // normal form is canonical: computing it from the product matrix or
        // from any factorization agrees
        let m1 = SL2::t().mul(&SL2::s()).mul(&SL2::t().pow(3));
        let m2 = SL2::u().pow(2).mul(&SL2::s()).mul(&SL2::t().inverse());
        let p = m1.mul(&m2);
        assert_eq!(
            psl2_normal_form(&p).unwrap(),
            psl2_normal_form(&p.neg().neg()).unwrap()
        );
        assert!(proj_eq(&psl2_normal_form(&p).unwrap().evaluate(), &p));
    }

    #[test]
    fn rademacher_mod3_is_abelianized_u_count() {
        // the U-exponent sum of any word equals R mod 3
        let mut x: u64 = 0x1122334455667788;
        for _ in 0..40 {
            let mut m = SL2::identity();
            let mut u_total: i64 = 0;
            for _ in 0..6 {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                match x % 3 {
                    0 => m = m.mul(&SL2::s()),
                    1 => {
                        m = m.mul(&SL2::u());
                        u_total += 1;
                    }
                    _ => {
                        m = m.mul(&SL2::u().pow(-1));
                        u_total -= 1;
                    }
                }
            }
            let r = rademacher(&m).unwrap();
            assert_eq!(r.rem_euclid(3), u_total.rem_euclid(3));
        }
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(SL2::from_i64(2, 0, 0, 1).is_err());
    }

    #[test]
    fn big_translation_powers() {
        let m = SL2::t().pow(17);
        assert_eq!(rademacher(&m).unwrap(), 17);
        let m = SL2::t().pow(-9);
        assert_eq!(rademacher(&m).unwrap(), -9);
    }
}
