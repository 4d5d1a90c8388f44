//! Sturm chains and exact real root counting, improper continued fractions
//! and tridiagonal forms, Jacobi–Hermite and Bezoutian root-counting
//! matrices, and real algebraic numbers.

pub mod realalg;

pub use realalg::{ra_compare, RealAlgebraic};

use crate::error::{Error, Result};
use crate::exact::{rat, Poly, Rat, RatFunc, Scalar};
use crate::forms::{signature, EpsSym};
use crate::linalg::Mat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// The sign-flipped Euclidean chain P_0 = P, P_1 = P′,
/// P_{k+1} = P_k·Q_k − P_{k−1}.
#[derive(Clone, Debug)]
pub struct SturmChain {
    pub remainders: Vec<Poly>,
    pub quotients: Vec<Poly>,
}

pub fn sturm_chain(p: &Poly) -> Result<SturmChain> {
    if p.degree().map_or(true, |d| d < 1) {
        return Err(Error::ConstantPoly);
    }
    let mut remainders = vec![p.clone(), p.derivative()];
    let mut quotients = Vec::new();
    loop {
        let n = remainders.len();
        let (q, r) = remainders[n - 2].divmod(&remainders[n - 1])?;
        quotients.push(q);
        let next = r.neg();
        if next.is_zero() {
            break;
        }
        remainders.push(next);
    }
    Ok(SturmChain {
        remainders,
        quotients,
    })
}

/// Primitive integer Sturm chain used for fast sign evaluation. Each member
/// is the corresponding rational chain member scaled by a positive constant,
/// so sign sequences agree.
struct IntChain {
    polys: Vec<Vec<BigInt>>,
}

fn int_deg(p: &[BigInt]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn int_content_normalize(p: &mut Vec<BigInt>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    if p.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for c in p.iter() {
        g = g.gcd(c);
    }
    if !g.is_one() {
        for c in p.iter_mut() {
            *c = &*c / &g;
        }
    }
}

impl IntChain {
    fn new(p: &Poly) -> IntChain {
        let (mut p0, _) = p.primitive_integer();
        int_content_normalize(&mut p0);
        let d = int_deg(&p0).expect("nonconstant polynomial");
        let mut p1: Vec<BigInt> = (1..=d).map(|i| &p0[i] * BigInt::from(i)).collect();
        int_content_normalize(&mut p1);
        let mut polys = vec![p0, p1];
        loop {
            let n = polys.len();
            let (a, b) = (&polys[n - 2], &polys[n - 1]);
            let (Some(da), Some(db)) = (int_deg(a), int_deg(b)) else {
                break;
            };
            if da < db {
                break;
            }
            // pseudo-remainder with an overall positive scale factor
            let lcb = b[db].clone();
            let mut r = a.clone();
            let mut steps = 0u32;
            while let Some(dr) = int_deg(&r) {
                if dr < db {
                    break;
                }
                let lr = r[dr].clone();
                for c in r.iter_mut() {
                    *c = &*c * &lcb;
                }
                for i in 0..=db {
                    r[dr - db + i] = &r[dr - db + i] - &lr * &b[i];
                }
                steps += 1;
            }
            if lcb.is_negative() && steps % 2 == 1 {
                for c in r.iter_mut() {
                    *c = -&*c;
                }
            }
            // Sturm sign flip
            for c in r.iter_mut() {
                *c = -&*c;
            }
            int_content_normalize(&mut r);
            if r.is_empty() {
                break;
            }
            polys.push(r);
        }
        IntChain { polys }
    }

    /// Signs of the chain at p/q (q > 0), zeros dropped.
    fn signs_at(&self, x: &Rat) -> Vec<i32> {
        let p = x.numer();
        let q = x.denom();
        let mut out = Vec::with_capacity(self.polys.len());
        for poly in &self.polys {
            let s = sign_homogeneous(poly, p, q);
            if s != 0 {
                out.push(s);
            }
        }
        out
    }

    fn value_sign_at(&self, x: &Rat) -> i32 {
        sign_homogeneous(&self.polys[0], x.numer(), x.denom())
    }
}

/// Sign of Σ c_i·pⁱ·q^{n−i} = qⁿ·f(p/q) for q > 0.
fn sign_homogeneous(c: &[BigInt], p: &BigInt, q: &BigInt) -> i32 {
    let Some(n) = int_deg(c) else { return 0 };
    // Horner in p with a running power of q
    let mut acc = c[n].clone();
    for i in (0..n).rev() {
        acc = acc * p + &c[i] * q.pow((n - i) as u32);
    }
    match acc.sign() {
        num_bigint::Sign::Plus => 1,
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
    }
}

fn var_count(signs: &[i32]) -> usize {
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of P in the closed interval [a, b].
pub fn count_roots(p: &Poly, a: &Rat, b: &Rat) -> Result<usize> {
    if a >= b {
        return Err(Error::BadInterval);
    }
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let sf = p.squarefree_part()?;
    if sf.degree().map_or(true, |d| d < 1) {
        return Ok(0);
    }
    let chain = IntChain::new(&sf);
    Ok(count_closed(&chain, a, b))
}

/// [a, b] count for a prepared squarefree chain.
fn count_closed(chain: &IntChain, a: &Rat, b: &Rat) -> usize {
    let va = var_count(&chain.signs_at(a));
    let vb = var_count(&chain.signs_at(b));
    let at_a = if chain.value_sign_at(a) == 0 { 1 } else { 0 };
    va - vb + at_a
}

/// Isolate all distinct real roots: disjoint rational intervals in
/// increasing order, each containing exactly one root of the squarefree part.
///
/// Interval halving driven by Descartes' rule of signs: the variation count
/// of (x+1)ⁿ·q(1/(x+1)) bounds the number of roots of q in (0, 1) and has
/// the same parity, so 0 and 1 are conclusive and anything larger splits the
/// interval. All arithmetic stays in ℤ[x].
pub fn isolate_roots(p: &Poly) -> Result<Vec<RealAlgebraic>> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let sf = p.squarefree_part()?;
    if sf.degree().map_or(true, |d| d < 1) {
        return Ok(Vec::new());
    }
    let (mut c, _) = sf.primitive_integer();
    int_content_normalize(&mut c);
    let mut out: Vec<(Rat, Rat)> = Vec::new();
    if c[0].is_zero() {
        // squarefree, so x divides exactly once
        c.remove(0);
        out.push((rat(0), rat(0)));
    }
    if int_deg(&c).map_or(false, |d| d >= 1) {
        // power-of-two bound keeps every scaling a bit shift
        let bound = sf.cauchy_bound() + rat(1);
        let mut k = 0usize;
        while Rat::from_integer(BigInt::one() << k) < bound {
            k += 1;
        }
        let b_rat = Rat::from_integer(BigInt::one() << k);
        let scaled = |coeffs: &[BigInt]| -> Vec<BigInt> {
            let mut q: Vec<BigInt> = coeffs
                .iter()
                .enumerate()
                .map(|(i, x)| x.clone() << (i * k))
                .collect();
            int_content_normalize(&mut q);
            q
        };
        // (0, B)
        descartes_rec(scaled(&c), rat(0), b_rat.clone(), &mut out);
        // (−B, 0) through x ↦ −x
        let neg: Vec<BigInt> = c
            .iter()
            .enumerate()
            .map(|(i, x)| if i % 2 == 1 { -x } else { x.clone() })
            .collect();
        let mut mirrored = Vec::new();
        descartes_rec(scaled(&neg), rat(0), b_rat, &mut mirrored);
        out.extend(mirrored.into_iter().map(|(a, b)| (-b, -a)));
    }
    // an exactly-hit root is its neighbours' endpoint; shrink those
    // neighbours until every endpoint value is nonzero
    let is_root = |x: &Rat| Zero::is_zero(&sf.eval(x));
    let mut fixed = Vec::with_capacity(out.len());
    for (mut a, mut b) in out {
        while a < b && (is_root(&a) || is_root(&b)) {
            let m = (&a + &b) / rat(2);
            if is_root(&m) {
                a = m.clone();
                b = m;
                break;
            }
            // exactly one root sits strictly inside (a, b); pick its side
            let upper = count_roots(&sf, &m, &b)? - usize::from(is_root(&b));
            if upper == 1 {
                a = m;
            } else {
                b = m;
            }
        }
        fixed.push((a, b));
    }
    fixed.sort_by(|x, y| x.0.cmp(&y.0));
    let minpoly = Poly::from_bigint(&sf.primitive_integer().0);
    Ok(fixed
        .into_iter()
        .map(|(a, b)| RealAlgebraic::from_certified(minpoly.clone(), a, b))
        .collect())
}

/// Sign variations of (x+1)ⁿ·q(1/(x+1)): reverse the coefficients and shift
/// by one.
fn descartes_var(q: &[BigInt]) -> usize {
    let mut t: Vec<BigInt> = q.iter().rev().cloned().collect();
    taylor_shift_1(&mut t);
    let signs: Vec<i32> = t
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| if c.is_negative() { -1 } else { 1 })
        .collect();
    var_count(&signs)
}

/// In-place coefficients of q(x+1).
fn taylor_shift_1(a: &mut [BigInt]) {
    let n = a.len();
    for i in 0..n.saturating_sub(1) {
        for j in (i..n - 1).rev() {
            let t = a[j + 1].clone();
            a[j] += t;
        }
    }
}

/// Exact quotient of q by (x − 1) when q(1) = 0, by Horner.
fn div_x_minus_1(q: &[BigInt]) -> Vec<BigInt> {
    let n = q.len() - 1;
    let mut h = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for j in (1..=n).rev() {
        carry = &carry + &q[j];
        h[j - 1] = carry.clone();
    }
    debug_assert!((&carry + &q[0]).is_zero(), "1 is not a root");
    h
}

/// Roots of the interval polynomial q (representing P on (lo, hi) through an
/// affine map onto (0, 1), with q(0) ≠ 0 and q(1) ≠ 0) as subintervals of
/// (lo, hi).
fn descartes_rec(q: Vec<BigInt>, lo: Rat, hi: Rat, out: &mut Vec<(Rat, Rat)>) {
    let v = descartes_var(&q);
    if v == 0 {
        return;
    }
    if v == 1 {
        out.push((lo, hi));
        return;
    }
    let mid = (&lo + &hi) / rat(2);
    let n = q.len() - 1;
    // left half q(x/2), cleared to ℤ; right half is its shift by one
    let mut left: Vec<BigInt> = q
        .iter()
        .enumerate()
        .map(|(i, c)| c.clone() << (n - i))
        .collect();
    int_content_normalize(&mut left);
    let mut right = left.clone();
    taylor_shift_1(&mut right);
    if right[0].is_zero() {
        // the midpoint is a (simple) root: report it and strip it from both
        // children to keep endpoint values nonzero
        out.push((mid.clone(), mid.clone()));
        right.remove(0);
        int_content_normalize(&mut right);
        left = div_x_minus_1(&left);
        int_content_normalize(&mut left);
    }
    descartes_rec(left, lo, mid.clone(), out);
    descartes_rec(right, mid, hi, out);
}

/// The symmetric tridiagonal matrix with the given diagonal and off-diagonal
/// entries 1.
pub fn tri<T: Scalar>(chi: &[T]) -> Mat<T> {
    let n = chi.len();
    let mut m = Mat::<T>::zero(n, n);
    for (i, x) in chi.iter().enumerate() {
        *m.at_mut(i, i) = x.clone();
        if i + 1 < n {
            *m.at_mut(i, i + 1) = T::one();
            *m.at_mut(i + 1, i) = T::one();
        }
    }
    m
}

pub fn tri_form(chi: &[Rat]) -> EpsSym<Rat> {
    EpsSym::symmetric(tri(chi)).expect("tridiagonal matrix is symmetric")
}

/// Value of the improper continued fraction [χ_1, χ_2, …, χ_n] =
/// χ_1 − 1/(χ_2 − 1/(… − 1/χ_n)), together with the minor pair
/// (det Tri(χ_1..χ_n), det Tri(χ_2..χ_n)).
pub fn cf_eval(chi: &[Rat]) -> Result<(Rat, Rat, Rat)> {
    if chi.is_empty() {
        return Err(Error::ZeroInput);
    }
    let mut v = chi[chi.len() - 1].clone();
    for x in chi[..chi.len() - 1].iter().rev() {
        if Zero::is_zero(&v) {
            return Err(Error::ZeroPolyDivision);
        }
        v = x - v.recip();
    }
    let num = tri(chi).det();
    let den = tri(&chi[1..]).det();
    debug_assert_eq!(&v * &den, num, "continuant identity");
    Ok((v, num, den))
}

/// Expansion modes for `cf_expand`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CfMode {
    /// Every entry satisfies |χ_k| ≥ 2 (Hirzebruch–Jung style).
    BigEntry,
    /// Every entry is even.
    Even,
}

const CF_DEPTH: usize = 64;
const CF_BUDGET: usize = 200_000;

/// Expand a/c as an improper continued fraction whose entries satisfy the
/// mode constraint; the result always reconstructs to a/c via `cf_eval`.
pub fn cf_expand(a: &BigInt, c: &BigInt, mode: CfMode) -> Result<Vec<BigInt>> {
    if c.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !a.gcd(c).is_one() {
        return Err(Error::NotCoprime);
    }
    let x = Rat::new(a.clone(), c.clone());
    let mut budget = CF_BUDGET;
    let found = match mode {
        CfMode::BigEntry => expand_search(&x, CF_DEPTH, &mut budget, &big_entry_candidates, &|e| {
            e.abs() >= BigInt::from(2)
        }),
        CfMode::Even => expand_search(&x, CF_DEPTH, &mut budget, &even_candidates, &|e| {
            e.is_even()
        }),
    };
    let chi = found.ok_or_else(|| {
        Error::CfUnsatisfiable(format!(
            "no {:?} expansion of {}/{} within depth {}",
            mode, a, c, CF_DEPTH
        ))
    })?;
    // reconstruction is the acceptance check
    let as_rats: Vec<Rat> = chi.iter().map(|e| Rat::from_integer(e.clone())).collect();
    let (v, _, _) = cf_eval(&as_rats)?;
    if v != x {
        return Err(Error::CfUnsatisfiable(
            "reconstruction mismatch in continued fraction search".into(),
        ));
    }
    Ok(chi)
}

fn expand_search(
    x: &Rat,
    depth: usize,
    budget: &mut usize,
    candidates: &dyn Fn(&Rat) -> Vec<BigInt>,
    admissible: &dyn Fn(&BigInt) -> bool,
) -> Option<Vec<BigInt>> {
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    if x.denom().is_one() && admissible(x.numer()) {
        return Some(vec![x.numer().clone()]);
    }
    if depth == 0 {
        return None;
    }
    for e in candidates(x) {
        if !admissible(&e) {
            continue;
        }
        // x = e − 1/y  ⇒  y = 1/(e − x)
        let diff = Rat::from_integer(e.clone()) - x;
        if Zero::is_zero(&diff) {
            continue;
        }
        let y = diff.recip();
        if let Some(mut rest) = expand_search(&y, depth - 1, budget, candidates, admissible) {
            let mut chi = vec![e];
            chi.append(&mut rest);
            return Some(chi);
        }
    }
    None
}

fn big_entry_candidates(x: &Rat) -> Vec<BigInt> {
    let f = x.floor().to_integer();
    let c = x.ceil().to_integer();
    let mut v = vec![c.clone(), f.clone(), &c + 1, &f - 1];
    v.dedup();
    v
}

fn even_candidates(x: &Rat) -> Vec<BigInt> {
    let f = x.floor().to_integer();
    let lo = if f.is_even() { f.clone() } else { &f - 1 };
    let hi: BigInt = &lo + 2;
    // nearest even first keeps the search close to the greedy expansion
    let dlo = (x - Rat::from_integer(lo.clone())).abs();
    let dhi = (Rat::from_integer(hi.clone()) - x).abs();
    if dlo <= dhi {
        vec![lo, hi]
    } else {
        vec![hi, lo]
    }
}

/// Tri of the Sturm quotients as a polynomial tridiagonal matrix; evaluation
/// at a regular point a gives a symmetric rational matrix whose signature
/// jumps by 2 across each root of P.
pub fn sturm_tri(p: &Poly) -> Result<Mat<RatFunc>> {
    let chain = sturm_chain(p)?;
    let n = p.degree().expect("nonconstant") as usize;
    if chain.quotients.len() != n
        || chain.quotients.iter().any(|q| q.degree() != Some(1))
    {
        return Err(Error::Precondition(
            "polynomial is not regular: Sturm quotients are not all linear".into(),
        ));
    }
    // Thm. 1.12 orders the diagonal from the last quotient to the first
    let diag: Vec<RatFunc> = chain
        .quotients
        .iter()
        .rev()
        .map(|q| RatFunc::from_poly(q.clone()))
        .collect();
    Ok(tri(&diag))
}

/// Evaluate a RatFunc matrix at a rational point.
pub fn eval_matrix(m: &Mat<RatFunc>, x: &Rat) -> Result<Mat<Rat>> {
    let mut out = Mat::<Rat>::zero(m.rows, m.cols);
    for i in 0..m.rows {
        for j in 0..m.cols {
            *out.at_mut(i, j) = m
                .at(i, j)
                .eval(x)
                .ok_or_else(|| Error::Precondition("evaluation at a pole".into()))?;
        }
    }
    Ok(out)
}

/// Companion matrix, power sums σ_k = tr(Cᵏ), and the Hankel matrix
/// S(P)_{ij} = σ_{i+j−2}.
#[derive(Clone, Debug)]
pub struct JacobiHermiteData {
    pub companion: Mat<Rat>,
    pub power_sums: Vec<Rat>,
    pub hermite: EpsSym<Rat>,
}

pub fn jacobi_hermite(p: &Poly) -> Result<JacobiHermiteData> {
    let n = match p.degree() {
        Some(d) if d >= 1 => d as usize,
        _ => return Err(Error::ConstantPoly),
    };
    if !p.leading().is_one() {
        return Err(Error::Precondition("polynomial must be monic".into()));
    }
    if p.squarefree_part()? != p.monic() {
        return Err(Error::Precondition("polynomial must be squarefree".into()));
    }
    // P = Xⁿ − a_{n−1}X^{n−1} − … − a_0: last column holds a_0..a_{n−1}
    let mut c = Mat::<Rat>::zero(n, n);
    for i in 0..n {
        *c.at_mut(i, n - 1) = -p.coeff(i);
        if i + 1 < n {
            *c.at_mut(i + 1, i) = <Rat as One>::one();
        }
    }
    let mut power_sums = Vec::with_capacity(2 * n - 1);
    let mut pk = Mat::<Rat>::identity(n);
    for _ in 0..(2 * n - 1) {
        let tr = (0..n).fold(<Rat as Zero>::zero(), |acc, i| acc + pk.at(i, i));
        power_sums.push(tr);
        pk = pk.mul(&c);
    }
    let mut s = Mat::<Rat>::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            *s.at_mut(i, j) = power_sums[i + j].clone();
        }
    }
    let hermite = EpsSym::symmetric(s)?;
    Ok(JacobiHermiteData {
        companion: c,
        power_sums,
        hermite,
    })
}

/// (#real roots < t) − (#real roots > t), as the signature of S(P)(tI − C).
pub fn hermite_count(p: &Poly, t: &Rat) -> Result<i64> {
    if Zero::is_zero(&p.eval(t)) {
        return Err(Error::Precondition(
            "evaluation point is a root of the polynomial".into(),
        ));
    }
    let jh = jacobi_hermite(p)?;
    let n = jh.companion.rows;
    let ti = Mat::<Rat>::identity(n).scale(t);
    let m = jh.hermite.mat.mul(&ti.sub(&jh.companion));
    // S·C = Cᵀ·S makes the product symmetric; the constructor asserts it
    let form = EpsSym::symmetric(m)?;
    Ok(signature(&form)?.tau())
}

/// The Bezoutian of (P, Q): the symmetric matrix (a_{ij}) with
/// (P(X)Q(Y) − P(Y)Q(X))/(X − Y) = Σ a_{ij} X^{i−1} Y^{j−1}.
pub fn bezoutian(p: &Poly, q: &Poly) -> Result<EpsSym<Rat>> {
    let n = match p.degree() {
        Some(d) if d >= 1 => d as usize,
        _ => return Err(Error::ConstantPoly),
    };
    if q.degree().map_or(false, |dq| dq >= n) {
        return Err(Error::Dimension(
            "second polynomial must have strictly smaller degree".into(),
        ));
    }
    // numerator coefficients n_{ij} = p_i q_j − p_j q_i
    let pc = |i: usize| p.coeff(i);
    let qc = |i: usize| q.coeff(i);
    let nij = |i: usize, j: usize| -> Rat { pc(i) * qc(j) - pc(j) * qc(i) };
    // divide by (X − Y): n_{ij} = c_{i−1,j} − c_{i,j−1}
    let mut b = Mat::<Rat>::zero(n, n);
    for i in (0..n).rev() {
        for j in 0..n {
            let carry = if i + 1 < n && j >= 1 {
                b.at(i + 1, j - 1).clone()
            } else {
                <Rat as Zero>::zero()
            };
            *b.at_mut(i, j) = nij(i + 1, j) + carry;
        }
    }
    EpsSym::symmetric(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_sign;
    use crate::exact::rat_frac;

    fn poly(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn chain_linear() {
        // X + b at b = 4
        let ch = sturm_chain(&poly(&[4, 1])).unwrap();
        assert_eq!(ch.remainders, vec![poly(&[4, 1]), Poly::one()]);
        assert_eq!(ch.quotients, vec![poly(&[4, 1])]);
    }

    #[test]
    fn chain_quadratic() {
        // X² + bX + c at b=6, c=2: P₂ = b²/4 − c = 7, Q₁ = (2X+b)/4
        let ch = sturm_chain(&poly(&[2, 6, 1])).unwrap();
        assert_eq!(ch.remainders[1], poly(&[6, 2]));
        assert_eq!(ch.remainders[2], Poly::constant(rat(7)));
        assert_eq!(
            ch.quotients[0],
            Poly::new(vec![rat_frac(6, 4), rat_frac(2, 4)])
        );
    }

    #[test]
    fn chain_x2_minus_1() {
        let ch = sturm_chain(&poly(&[-1, 0, 1])).unwrap();
        assert_eq!(
            ch.remainders,
            vec![poly(&[-1, 0, 1]), poly(&[0, 2]), Poly::one()]
        );
    }

    #[test]
    fn chain_rejects_constant() {
        assert!(matches!(
            sturm_chain(&Poly::constant(rat(3))),
            Err(Error::ConstantPoly)
        ));
    }

    #[test]
    fn count_basic() {
        let p = poly(&[-1, 0, 1]);
        assert_eq!(count_roots(&p, &rat(-2), &rat(2)).unwrap(), 2);
        assert_eq!(count_roots(&poly(&[1, 0, 1]), &rat(-10), &rat(10)).unwrap(), 0);
        assert!(matches!(
            count_roots(&p, &rat(2), &rat(-2)),
            Err(Error::BadInterval)
        ));
    }

    #[test]
    fn count_endpoints_inclusive() {
        let p = poly(&[-1, 0, 1]);
        assert_eq!(count_roots(&p, &rat(-1), &rat(1)).unwrap(), 2);
        assert_eq!(count_roots(&p, &rat(-1), &rat(0)).unwrap(), 1);
        assert_eq!(count_roots(&p, &rat(0), &rat(1)).unwrap(), 1);
        assert_eq!(count_roots(&p, &rat_frac(-1, 2), &rat_frac(1, 2)).unwrap(), 0);
    }

    #[test]
    fn count_collapses_multiplicity() {
        // (X−1)³
        let p = poly(&[-1, 3, -3, 1]);
        assert_eq!(count_roots(&p, &rat(0), &rat(2)).unwrap(), 1);
    }

    #[test]
    fn count_matches_grid_oracle() {
        // deterministic pseudo-random polynomials, degree ≤ 8
        let mut seed: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _ in 0..60 {
            let deg = 2 + (next() % 7) as usize;
            let mut c: Vec<i64> = (0..=deg).map(|_| (next() % 21) as i64 - 10).collect();
            if c[deg] == 0 {
                c[deg] = 1;
            }
            let p = poly(&c);
            let sf = p.squarefree_part().unwrap();
            if sf.degree().map_or(true, |d| d < 1) {
                continue;
            }
            let (a, b) = (rat(-12), rat(12));
            let ours = count_roots(&p, &a, &b).unwrap();
            let oracle = isolate_roots(&p).unwrap().len();
            assert_eq!(ours, oracle, "polynomial {:?}", c);
        }
    }

    #[test]
    fn isolate_sqrt2() {
        let roots = isolate_roots(&poly(&[-2, 0, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].hi() < roots[1].lo() || roots[0].hi() == roots[1].lo());
        assert!(roots[0].hi() <= roots[1].lo());
    }

    #[test]
    fn isolate_empty_and_multiplicity() {
        assert!(isolate_roots(&poly(&[1, 0, 1])).unwrap().is_empty());
        let cube = poly(&[-1, 3, -3, 1]);
        let roots = isolate_roots(&cube).unwrap();
        assert_eq!(roots.len(), 1);
    }

    #[test]
    fn isolate_rational_roots() {
        // (X−1)(X+2)(2X−3)
        let p = poly(&[6, -7, -3, 2]);
        let roots = isolate_roots(&p).unwrap();
        assert_eq!(roots.len(), 3);
    }

    #[test]
    fn tri_example() {
        let m = tri(&[rat(2), rat(2)]);
        assert_eq!(m, Mat::from_rows(vec![vec![rat(2), rat(1)], vec![rat(1), rat(2)]]));
        let s = tri_form(&[rat(2), rat(2)]);
        let minors = crate::forms::principal_minors(&s);
        assert_eq!(minors.values, vec![rat(1), rat(2), rat(3)]);
    }

    #[test]
    fn tri_minor_recurrence() {
        // μ_k + μ_{k−2} = χ_k·μ_{k−1}
        let chi = [rat(3), rat(-2), rat(5), rat(2)];
        let s = tri_form(&chi);
        let mu = crate::forms::principal_minors(&s).values;
        for k in 2..=chi.len() {
            assert_eq!(&mu[k] + &mu[k - 2], &chi[k - 1] * &mu[k - 1]);
        }
        // also μ_1 = χ_1·μ_0 with μ_{−1} = 0
        assert_eq!(mu[1], chi[0].clone());
    }

    #[test]
    fn tri_duality() {
        for chi in [
            vec![rat(3), rat(-2), rat(5)],
            vec![rat(2), rat(2), rat(-3), rat(4)],
            vec![rat(-2), rat(7), rat(2), rat(-5), rat(3)],
        ] {
            let mut rev = chi.clone();
            rev.reverse();
            let a = signature(&tri_form(&chi)).unwrap();
            let b = signature(&tri_form(&rev)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn tri_big_entries_signature() {
        // |χ_k| ≥ 2 ⇒ τ = Σ sign(χ_k)
        for chi in [
            vec![rat(2), rat(-3), rat(5), rat(-2)],
            vec![rat(4), rat(2), rat(2)],
            vec![rat(-2), rat(-2), rat(-7)],
        ] {
            let expect: i64 = chi.iter().map(|x| rat_sign(x) as i64).sum();
            assert_eq!(signature(&tri_form(&chi)).unwrap().tau(), expect);
        }
    }

    #[test]
    fn cf_eval_examples() {
        let (v, num, den) = cf_eval(&[rat(2), rat(2)]).unwrap();
        assert_eq!(v, rat_frac(3, 2));
        assert_eq!((num, den), (rat(3), rat(2)));
        let (v, _, _) = cf_eval(&[rat(3)]).unwrap();
        assert_eq!(v, rat(3));
    }

    #[test]
    fn cf_minor_bridge() {
        // μ_k/μ_{k−1} = [χ_k, χ_{k−1}, …, χ_1]
        let chi = [rat(3), rat(-2), rat(5), rat(2)];
        let s = tri_form(&chi);
        let mu = crate::forms::principal_minors(&s).values;
        for k in 1..=chi.len() {
            let mut rev: Vec<Rat> = chi[..k].to_vec();
            rev.reverse();
            let (v, _, _) = cf_eval(&rev).unwrap();
            assert_eq!(v, &mu[k] / &mu[k - 1]);
        }
    }

    #[test]
    fn cf_eval_zero_denominator() {
        // [1, 1]: inner value 1, then 1 − 1/1 = 0 is fine; [1, 0, …] hits 0
        assert!(matches!(
            cf_eval(&[rat(5), rat(0)]),
            Err(Error::ZeroPolyDivision)
        ));
    }

    #[test]
    fn cf_expand_big_entry() {
        let chi = cf_expand(&BigInt::from(3), &BigInt::from(2), CfMode::BigEntry).unwrap();
        assert_eq!(chi, vec![BigInt::from(2), BigInt::from(2)]);
        let chi = cf_expand(&BigInt::from(7), &BigInt::from(1), CfMode::BigEntry).unwrap();
        assert_eq!(chi, vec![BigInt::from(7)]);
        let chi = cf_expand(&BigInt::from(-7), &BigInt::from(5), CfMode::BigEntry).unwrap();
        assert!(chi.iter().all(|e| e.abs() >= BigInt::from(2)));
        let v: Vec<Rat> = chi.iter().map(|e| Rat::from_integer(e.clone())).collect();
        assert_eq!(cf_eval(&v).unwrap().0, rat_frac(-7, 5));
    }

    #[test]
    fn cf_expand_even() {
        let chi = cf_expand(&BigInt::from(2), &BigInt::from(3), CfMode::Even).unwrap();
        assert!(chi.iter().all(|e| e.is_even()));
        let v: Vec<Rat> = chi.iter().map(|e| Rat::from_integer(e.clone())).collect();
        assert_eq!(cf_eval(&v).unwrap().0, rat_frac(2, 3));
    }

    #[test]
    fn cf_expand_rejects_bad_input() {
        assert!(matches!(
            cf_expand(&BigInt::from(4), &BigInt::from(2), CfMode::BigEntry),
            Err(Error::NotCoprime)
        ));
        assert!(matches!(
            cf_expand(&BigInt::from(1), &BigInt::from(0), CfMode::BigEntry),
            Err(Error::ZeroInput)
        ));
    }

    #[test]
    fn sturm_tri_count_bridge() {
        // count on [a,b] = (τ(Tri(Q)(b)) − τ(Tri(Q)(a)))/2
        let p = poly(&[-1, 0, 1]);
        let t = sturm_tri(&p).unwrap();
        let tau_at = |x: &Rat| -> i64 {
            let m = eval_matrix(&t, x).unwrap();
            signature(&EpsSym::symmetric(m).unwrap()).unwrap().tau()
        };
        assert_eq!((tau_at(&rat(2)) - tau_at(&rat(-2))) / 2, 2);
        // single linear polynomial: Tri(Q) = [X + 5]
        let l = sturm_tri(&poly(&[5, 1])).unwrap();
        assert_eq!(l.rows, 1);
        assert_eq!(eval_matrix(&l, &rat(0)).unwrap(), Mat::new(1, 1, vec![rat(5)]));
        assert_eq!(eval_matrix(&l, &rat(-6)).unwrap(), Mat::new(1, 1, vec![rat(-1)]));
    }

    #[test]
    fn jacobi_hermite_quadratic() {
        // X² + bX + c → S = [[2, −b], [−b, b²−2c]] at b=3, c=1
        let p = poly(&[1, 3, 1]);
        let jh = jacobi_hermite(&p).unwrap();
        assert_eq!(
            jh.hermite.mat,
            Mat::from_rows(vec![vec![rat(2), rat(-3)], vec![rat(-3), rat(7)]])
        );
        assert_eq!(jh.power_sums, vec![rat(2), rat(-3), rat(7)]);
        // τ(S) = number of distinct real roots
        assert_eq!(signature(&jh.hermite).unwrap().tau(), 2);
    }

    #[test]
    fn jacobi_hermite_x2_minus_1() {
        let jh = jacobi_hermite(&poly(&[-1, 0, 1])).unwrap();
        assert_eq!(jh.power_sums, vec![rat(2), rat(0), rat(2)]);
        assert_eq!(
            jh.hermite.mat,
            Mat::from_rows(vec![vec![rat(2), rat(0)], vec![rat(0), rat(2)]])
        );
        assert_eq!(signature(&jh.hermite).unwrap().tau(), 2);
    }

    #[test]
    fn jacobi_hermite_det_identity() {
        // char. poly of [[a,b],[b,c]]: det S(P) = (a−c)² + 4b²
        let (a, b, c) = (rat(2), rat(3), rat(-1));
        // X² − (a+c)X + (ac − b²)
        let p = Poly::new(vec![&a * &c - &b * &b, -(&a + &c), rat(1)]);
        let jh = jacobi_hermite(&p).unwrap();
        let expect = (&a - &c) * (&a - &c) + rat(4) * &b * &b;
        assert_eq!(jh.hermite.mat.det(), expect);
    }

    #[test]
    fn jacobi_hermite_rejects() {
        assert!(jacobi_hermite(&poly(&[-1, 0, 2])).is_err()); // not monic
        assert!(jacobi_hermite(&poly(&[1, 2, 1])).is_err()); // (X+1)²
    }

    #[test]
    fn companion_char_poly() {
        let p = poly(&[-5, 2, -4, 1]);
        let jh = jacobi_hermite(&p).unwrap();
        // det(XI − C) = P as a RatFunc determinant
        let n = 3;
        let x = RatFunc::x();
        let mut m = Mat::<RatFunc>::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut e = RatFunc::constant(-jh.companion.at(i, j).clone());
                if i == j {
                    e = e.add(&x);
                }
                *m.at_mut(i, j) = e;
            }
        }
        let d = m.det();
        assert_eq!(d.num, p);
        assert_eq!(d.den, Poly::one());
    }

    #[test]
    fn hermite_count_examples() {
        let p = poly(&[-1, 0, 1]);
        assert_eq!(hermite_count(&p, &rat(0)).unwrap(), 0);
        assert_eq!(hermite_count(&p, &rat(2)).unwrap(), 2);
        assert_eq!(hermite_count(&p, &rat(-2)).unwrap(), -2);
        assert_eq!(hermite_count(&poly(&[1, 0, 1]), &rat(5)).unwrap(), 0);
        assert!(hermite_count(&p, &rat(1)).is_err());
    }

    #[test]
    fn hermite_count_vs_count_roots() {
        let p = poly(&[2, -7, 0, 1]); // three real roots
        let (t1, t2) = (rat_frac(-5, 2), rat_frac(5, 2));
        let diff = hermite_count(&p, &t2).unwrap() - hermite_count(&p, &t1).unwrap();
        assert_eq!(diff as usize, 2 * count_roots(&p, &t1, &t2).unwrap());
    }

    #[test]
    fn bezoutian_examples() {
        let b = bezoutian(&poly(&[-1, 0, 1]), &poly(&[0, 2])).unwrap();
        assert_eq!(signature(&b).unwrap().tau(), 2);
        let b = bezoutian(&poly(&[1, 0, 1]), &poly(&[0, 2])).unwrap();
        assert_eq!(signature(&b).unwrap().tau(), 0);
        assert!(bezoutian(&poly(&[1, 1]), &poly(&[1, 1])).is_err());
    }

    #[test]
    fn bezoutian_congruent_to_hermite() {
        for c in [
            vec![-1i64, 0, 1],
            vec![2, -7, 0, 1],
            vec![-5, 2, -4, 1],
            vec![3, 0, -6, 0, 1],
        ] {
            let p = poly(&c);
            let b = bezoutian(&p, &p.derivative()).unwrap();
            let jh = jacobi_hermite(&p).unwrap();
            assert_eq!(
                signature(&b).unwrap(),
                signature(&jh.hermite).unwrap(),
                "{:?}",
                c
            );
        }
    }

    #[test]
    fn four_way_agreement() {
        let p = poly(&[2, -7, 0, 1]);
        let bound = p.cauchy_bound() + rat(1);
        let count = count_roots(&p, &(-&bound), &bound).unwrap() as i64;
        let jh = signature(&jacobi_hermite(&p).unwrap().hermite).unwrap().tau();
        let bz = signature(&bezoutian(&p, &p.derivative()).unwrap()).unwrap().tau();
        let t = sturm_tri(&p).unwrap();
        let tau_at = |x: &Rat| -> i64 {
            signature(&EpsSym::symmetric(eval_matrix(&t, x).unwrap()).unwrap())
                .unwrap()
                .tau()
        };
        let st = (tau_at(&bound) - tau_at(&(-&bound))) / 2;
        assert_eq!(count, jh);
        assert_eq!(count, bz);
        assert_eq!(count, st);
    }

    #[test]
    fn adjacent_chain_signs_opposite() {
        // at each root of P_k, the chain neighbors have opposite signs
        let p = poly(&[2, -7, 0, 1]);
        let ch = sturm_chain(&p).unwrap();
        for k in 1..ch.remainders.len() - 1 {
            let pk = &ch.remainders[k];
            if pk.degree().map_or(true, |d| d < 1) {
                continue;
            }
            for mut root in isolate_roots(pk).unwrap() {
                // refine until neither neighbor has a root in the interval,
                // certifying their signs are constant there
                let (prev, next) = (&ch.remainders[k - 1], &ch.remainders[k + 1]);
                let free_of = |q: &Poly, lo: &Rat, hi: &Rat| {
                    q.degree().map_or(true, |d| d < 1)
                        || lo == hi
                        || count_roots(q, lo, hi).unwrap() == 0
                };
                let mut checked = false;
                for _ in 0..256 {
                    if free_of(prev, root.lo(), root.hi())
                        && free_of(next, root.lo(), root.hi())
                    {
                        let x = root.lo().clone();
                        let sp = rat_sign(&prev.eval(&x));
                        let sn = rat_sign(&next.eval(&x));
                        assert_ne!(sp, 0);
                        assert_eq!(sp, -sn);
                        checked = true;
                        break;
                    }
                    root.refine();
                }
                assert!(checked, "failed to certify neighbor signs");
            }
        }
    }
}
