//! Sawtooth function, Dedekind sums (exact and cotangent cross-check), and
//! the signature-defect identity relating τ(Tri(χ)) to Dedekind sums, with a
//! parameterized matrix/argument convention.

use super::psl2::SL2;
use crate::error::{Error, Result};
use crate::exact::dyadic::{cos_iv, pi, Iv};
use crate::exact::{rat, rat_frac, Rat};
use crate::forms::signature;
use crate::sturm::tri_form;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// ((x)) = x − ⌊x⌋ − 1/2 away from the integers, 0 on them.
pub fn sawtooth(x: &Rat) -> Rat {
    if x.denom().is_one() {
        return rat(0);
    }
    let floor = x.floor();
    x - floor - rat_frac(1, 2)
}

/// Dedekind sum s(a, c) = Σ_{k=1}^{|c|−1} ((k/c))·((ka/c)).
///
/// For coprime arguments the reciprocity law walks the Euclidean algorithm
/// down to s(0, 1) = 0 in O(log c) steps; the defining sum is kept as the
/// fallback for non-coprime arguments, where reciprocity does not apply.
pub fn dedekind_sum(a: &BigInt, c: &BigInt) -> Result<Rat> {
    if c.is_zero() {
        return Err(Error::ZeroInput);
    }
    // s(a, −c) = s(a, c): both sawtooth factors flip sign
    let mut c = c.abs();
    let mut a = a.mod_floor(&c);
    if !a.gcd(&c).is_one() {
        return Ok(dedekind_sum_direct(&a, &c));
    }
    // s(a, c) = −1/4 + (a² + c² + 1)/(12ac) − s(c mod a, a)
    let mut total = rat(0);
    let mut negate = false;
    while !a.is_zero() {
        let term = Rat::new(&a * &a + &c * &c + BigInt::from(1), BigInt::from(12) * &a * &c)
            - rat_frac(1, 4);
        total += if negate { -term } else { term };
        negate = !negate;
        std::mem::swap(&mut a, &mut c);
        a = a.mod_floor(&c);
    }
    Ok(total)
}

fn dedekind_sum_direct(a: &BigInt, c: &BigInt) -> Rat {
    let mut total = rat(0);
    let mut k = BigInt::from(1);
    while k < *c {
        let x = Rat::new(k.clone(), c.clone());
        let y = Rat::new(&k * a, c.clone());
        total += sawtooth(&x) * sawtooth(&y);
        k += 1;
    }
    total
}

fn sin_iv_local(x: &Iv, prec: u64) -> Iv {
    crate::exact::dyadic::sin_iv(x, prec)
}

/// High-precision interval bounds for the cotangent formula
/// s(a, c) = (1/4|c|) Σ_{k=1}^{|c|−1} cot(kπ/|c|)·cot(kaπ/|c|),
/// refined until the interval is narrower than eps.
pub fn dedekind_sum_cotangent(a: &BigInt, c: &BigInt, eps: &Rat) -> Result<(Rat, Rat)> {
    if c.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !a.gcd(c).is_one() {
        return Err(Error::NotCoprime);
    }
    let cc = c.abs();
    let sign_c = if c.is_negative() { -1i64 } else { 1 };
    let n = cc
        .to_i64()
        .ok_or_else(|| Error::Unsupported("modulus too large for cotangent scan".into()))?;
    let mut prec: u64 = 64;
    'outer: loop {
        let pi_iv = pi(prec);
        let mut total = Iv::zero();
        for k in 1..n {
            // angles reduced mod π keep the series arguments in (0, π)
            let m = (BigInt::from(k) * a).mod_floor(&cc);
            let m = m.to_i64().expect("bounded by |c|");
            let ang1 = pi_iv.scale_int(k, prec).div_uint(&cc, prec);
            let ang2 = pi_iv.scale_int(m, prec).div_uint(&cc, prec);
            let cot = |ang: &Iv| -> Option<Iv> {
                cos_iv(ang, prec).div(&sin_iv_local(ang, prec), prec)
            };
            let (Some(c1), Some(c2)) = (cot(&ang1), cot(&ang2)) else {
                prec *= 2;
                continue 'outer;
            };
            total = total.add(&c1.mul(&c2, prec), prec);
        }
        let total = total.div_uint(&(&cc * BigInt::from(4)), prec);
        let (lo, hi) = (total.lo.to_rat(), total.hi.to_rat());
        if &hi - &lo < *eps {
            // s(a, −c) = s(a, c): the k ↔ |c|−k symmetry absorbs the sign
            let _ = sign_c;
            return Ok((lo, hi));
        }
        prec *= 2;
    }
}

/// How to assemble the SL(2,ℤ) matrix from a continued-fraction tuple χ,
/// with M(χ) = [[χ, −1], [1, 0]].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatrixBuild {
    /// M(χ_1)·M(χ_2)⋯M(χ_n)
    Forward,
    /// M(χ_n)⋯M(χ_1)
    Reverse,
    /// inverse of the forward product
    ForwardInverse,
    /// transpose of the forward product
    ForwardTranspose,
    /// S·(forward product)
    SPrefixed,
    /// (forward product)·S
    SSuffixed,
    /// continuant matrix [[K(χ₂..χₙ), K(χ₂..χₙ₋₁)], [K(χ₁..χₙ), K(χ₁..χₙ₋₁)]],
    /// so that c/a is the continued-fraction value and c = det Tri(χ)
    Convergents,
}

/// Which entry feeds the Dedekind sum: s(a, c) or s(d, c).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SArg {
    AC,
    DC,
}

/// Shape of the trace term in the c ≠ 0 branch: (a+d)/3 as printed, or the
/// Rademacher-style (a+d)/(3c).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RhsForm {
    TraceThird,
    TraceThirdOverC,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Convention {
    pub build: MatrixBuild,
    pub s_arg: SArg,
    pub rhs: RhsForm,
}

impl Convention {
    pub fn name(&self) -> String {
        let b = match self.build {
            MatrixBuild::Forward => "forward",
            MatrixBuild::Reverse => "reverse",
            MatrixBuild::ForwardInverse => "inverse",
            MatrixBuild::ForwardTranspose => "transpose",
            MatrixBuild::SPrefixed => "s-prefixed",
            MatrixBuild::SSuffixed => "s-suffixed",
            MatrixBuild::Convergents => "convergents",
        };
        let s = match self.s_arg {
            SArg::AC => "s(a,c)",
            SArg::DC => "s(d,c)",
        };
        let r = match self.rhs {
            RhsForm::TraceThird => "(a+d)/3",
            RhsForm::TraceThirdOverC => "(a+d)/3c",
        };
        format!("{b}/{s}/{r}")
    }
}

pub fn all_conventions() -> Vec<Convention> {
    let builds = [
        MatrixBuild::Forward,
        MatrixBuild::Reverse,
        MatrixBuild::ForwardInverse,
        MatrixBuild::ForwardTranspose,
        MatrixBuild::SPrefixed,
        MatrixBuild::SSuffixed,
        MatrixBuild::Convergents,
    ];
    let args = [SArg::AC, SArg::DC];
    let forms = [RhsForm::TraceThird, RhsForm::TraceThirdOverC];
    let mut out = Vec::new();
    for b in builds {
        for s in args {
            for r in forms {
                out.push(Convention { build: b, s_arg: s, rhs: r });
            }
        }
    }
    out
}

/// Continuant K(x₁, …, xₘ) of the minus-sign continued fraction, via
/// K_j = x_j·K_{j−1} − K_{j−2} with K(∅) = 1.
fn continuant(xs: &[BigInt]) -> BigInt {
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    for x in xs {
        let next = x * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The candidate matrix for a continued-fraction tuple under a convention.
pub fn defect_matrix(chi: &[BigInt], build: MatrixBuild) -> Result<SL2> {
    let m_of = |x: &BigInt| {
        SL2::new(x.clone(), BigInt::from(-1), BigInt::from(1), BigInt::from(0))
            .expect("M(χ) is unimodular")
    };
    let forward = chi
        .iter()
        .fold(SL2::identity(), |acc, x| acc.mul(&m_of(x)));
    Ok(match build {
        MatrixBuild::Forward => forward,
        MatrixBuild::Reverse => chi
            .iter()
            .rev()
            .fold(SL2::identity(), |acc, x| acc.mul(&m_of(x))),
        MatrixBuild::ForwardInverse => forward.inverse(),
        MatrixBuild::ForwardTranspose => {
            SL2::new(forward.a, forward.c, forward.b, forward.d)?
        }
        MatrixBuild::SPrefixed => SL2::s().mul(&forward),
        MatrixBuild::SSuffixed => forward.mul(&SL2::s()),
        MatrixBuild::Convergents => {
            let n = chi.len();
            if n == 0 {
                return Ok(SL2::identity());
            }
            let a = continuant(&chi[1..]);
            let b = if n >= 2 { continuant(&chi[1..n - 1]) } else { BigInt::zero() };
            let c = continuant(chi);
            let d = continuant(&chi[..n - 1]);
            SL2::new(a, b, c, d)?
        }
    })
}

/// Both sides of the signature-defect identity, exactly:
/// lhs = τ(Tri(χ)) − (Σχ)/3 and
/// rhs = (a+d)/3 − 4·sign(c)·s(arg, c), with (a+d)/(3c) as the trace term
/// under `RhsForm::TraceThirdOverC` (or b/(3d) when c = 0).
/// Equality is for the caller to decide; the convention is a parameter.
pub fn signature_defect_check(
    chi: &[BigInt],
    a: &SL2,
    s_arg: SArg,
    rhs_form: RhsForm,
) -> Result<(Rat, Rat)> {
    let entries: Vec<Rat> = chi.iter().map(|x| Rat::from_integer(x.clone())).collect();
    let tau = if entries.is_empty() {
        0
    } else {
        signature(&tri_form(&entries))?.tau()
    };
    let sum: Rat = entries.iter().fold(rat(0), |acc, x| acc + x);
    let lhs = rat(tau) - sum / rat(3);
    let rhs = if a.c.is_zero() {
        if a.d.is_zero() {
            return Err(Error::Precondition(
                "c = 0 branch needs d ≠ 0".into(),
            ));
        }
        Rat::new(a.b.clone(), &a.d * BigInt::from(3))
    } else {
        let sign_c = if a.c.is_negative() { rat(-1) } else { rat(1) };
        let arg = match s_arg {
            SArg::AC => &a.a,
            SArg::DC => &a.d,
        };
        let s = dedekind_sum(arg, &a.c)?;
        let trace_term = match rhs_form {
            RhsForm::TraceThird => Rat::new(&a.a + &a.d, BigInt::from(3)),
            RhsForm::TraceThirdOverC => Rat::new(&a.a + &a.d, BigInt::from(3) * &a.c),
        };
        trace_term - rat(4) * sign_c * s
    };
    Ok((lhs, rhs))
}
