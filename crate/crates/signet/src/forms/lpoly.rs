//! Hirzebruch L-polynomials, built exactly from the multiplicative sequence
//! of √x/tanh(√x).

use crate::error::{Error, Result};
use crate::exact::{rat, Rat};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// The k-th L-polynomial: a weighted-homogeneous rational polynomial in the
/// Pontrjagin symbols p_1, …, p_k. A monomial is the exponent vector
/// (e_1, …, e_k) with Σ j·e_j = k.
#[derive(Clone, PartialEq, Debug)]
pub struct LPolynomial {
    pub k: usize,
    pub terms: BTreeMap<Vec<u32>, Rat>,
}

impl LPolynomial {
    /// Evaluate by substituting numbers for p_1..p_k.
    pub fn eval(&self, p: &[Rat]) -> Rat {
        assert!(p.len() >= self.k);
        let mut acc = Rat::zero();
        for (mono, c) in &self.terms {
            let mut t = c.clone();
            for (j, &e) in mono.iter().enumerate() {
                for _ in 0..e {
                    t *= &p[j];
                }
            }
            acc += t;
        }
        acc
    }

    /// Render e.g. "7/45*p2 - 1/45*p1^2".
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (mono, c) in self.terms.iter().rev() {
            let mut vars = String::new();
            for (j, &e) in mono.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !vars.is_empty() {
                    vars.push('*');
                }
                vars.push_str(&format!("p{}", j + 1));
                if e > 1 {
                    vars.push_str(&format!("^{}", e));
                }
            }
            parts.push(format!("{}*{}", crate::exact::fmt_rat(c), vars));
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

/// Polynomials in p_1..p_k truncated beyond total weight k, used only while
/// assembling the multiplicative sequence.
#[derive(Clone, Debug)]
struct WPoly {
    k: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl WPoly {
    fn zero(k: usize) -> WPoly {
        WPoly {
            k,
            terms: BTreeMap::new(),
        }
    }

    fn constant(k: usize, c: Rat) -> WPoly {
        let mut w = WPoly::zero(k);
        if !c.is_zero() {
            w.terms.insert(vec![0; k], c);
        }
        w
    }

    fn gen(k: usize, j: usize) -> WPoly {
        // p_j, weight j
        let mut mono = vec![0; k];
        mono[j - 1] = 1;
        let mut w = WPoly::zero(k);
        w.terms.insert(mono, Rat::one());
        w
    }

    fn weight(mono: &[u32]) -> usize {
        mono.iter()
            .enumerate()
            .map(|(j, &e)| (j + 1) * e as usize)
            .sum()
    }

    fn add_term(&mut self, mono: Vec<u32>, c: Rat) {
        if c.is_zero() || Self::weight(&mono) > self.k {
            return;
        }
        let e = self.terms.entry(mono).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            // remove to keep the map canonical
            let dead: Vec<_> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(m, _)| m.clone())
                .collect();
            for m in dead {
                self.terms.remove(&m);
            }
        }
    }

    fn add(&self, other: &WPoly) -> WPoly {
        let mut w = self.clone();
        for (m, c) in &other.terms {
            w.add_term(m.clone(), c.clone());
        }
        w
    }

    fn scale(&self, s: &Rat) -> WPoly {
        let mut w = WPoly::zero(self.k);
        for (m, c) in &self.terms {
            w.add_term(m.clone(), c * s);
        }
        w
    }

    fn mul(&self, other: &WPoly) -> WPoly {
        let mut w = WPoly::zero(self.k);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mono: Vec<u32> = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                w.add_term(mono, c1 * c2);
            }
        }
        w
    }

    fn neg(&self) -> WPoly {
        self.scale(&rat(-1))
    }

    /// Part of exact weight w.
    fn weight_part(&self, w: usize) -> BTreeMap<Vec<u32>, Rat> {
        self.terms
            .iter()
            .filter(|(m, _)| Self::weight(m) == w)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }
}

fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product::<BigInt>().max(BigInt::one())
}

/// Coefficients q_0..q_k of the characteristic series √x/tanh√x =
/// (Σ xᵐ/(2m)!)/(Σ xᵐ/(2m+1)!) as a power series in x.
fn char_series(k: usize) -> Vec<Rat> {
    let cosh: Vec<Rat> = (0..=k as u64)
        .map(|m| Rat::new(BigInt::one(), factorial(2 * m)))
        .collect();
    let sinh: Vec<Rat> = (0..=k as u64)
        .map(|m| Rat::new(BigInt::one(), factorial(2 * m + 1)))
        .collect();
    // q = cosh / sinh by power series division (sinh_0 = 1)
    let mut q = vec![Rat::zero(); k + 1];
    for m in 0..=k {
        let mut acc = cosh[m].clone();
        for i in 0..m {
            acc -= &q[i] * &sinh[m - i];
        }
        q[m] = acc;
    }
    q
}

/// The k-th Hirzebruch L-polynomial, 1 ≤ k ≤ 10.
pub fn l_polynomial(k: usize) -> Result<LPolynomial> {
    if k < 1 || k > 10 {
        return Err(Error::Unsupported("k must be between 1 and 10".into()));
    }
    let q = char_series(k);
    // a = log q as a power series in x
    let mut a = vec![Rat::zero(); k + 1];
    for m in 1..=k {
        // q' series relation: m·a_m = m·q_m − Σ_{i=1}^{m−1} i·a_i·q_{m−i}
        let mut acc = rat(m as i64) * &q[m];
        for i in 1..m {
            acc -= rat(i as i64) * &a[i] * &q[m - i];
        }
        a[m] = acc / rat(m as i64);
    }
    // power sums s_m of the formal Chern-square roots, via Newton's
    // identities with e_j = p_j
    let mut s: Vec<WPoly> = vec![WPoly::constant(k, Rat::zero())];
    for m in 1..=k {
        // s_m = Σ_{i=1}^{m−1} (−1)^{i−1} p_i s_{m−i} + (−1)^{m−1} m·p_m
        let mut acc = WPoly::zero(k);
        for i in 1..m {
            let t = WPoly::gen(k, i).mul(&s[m - i]);
            acc = if i % 2 == 1 { acc.add(&t) } else { acc.add(&t.neg()) };
        }
        let lead = WPoly::gen(k, m).scale(&rat(m as i64));
        acc = if m % 2 == 1 {
            acc.add(&lead)
        } else {
            acc.add(&lead.neg())
        };
        s.push(acc);
    }
    // total L-class = exp(Σ_m a_m s_m), truncated at weight k
    let mut arg = WPoly::zero(k);
    for m in 1..=k {
        arg = arg.add(&s[m].scale(&a[m]));
    }
    let mut total = WPoly::constant(k, Rat::one());
    let mut pow = WPoly::constant(k, Rat::one());
    for i in 1..=k {
        pow = pow.mul(&arg);
        total = total.add(&pow.scale(&Rat::new(BigInt::one(), factorial(i as u64))));
    }
    Ok(LPolynomial {
        k,
        terms: total.weight_part(k),
    })
}
