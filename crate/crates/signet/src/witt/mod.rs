//! Witt classes of symmetric forms over ℚ, F_p and ℚ(X), second residues,
//! linking forms of finite abelian groups, and lens-space linking pairings.

pub mod factorpoly;

pub use factorpoly::{factor_rational, has_nonreal_root, is_irreducible};

use crate::arith::{factor_bigint, is_prime_u64, legendre};
use crate::error::{Error, Result};
use crate::exact::{rat, Poly, Rat, RatFunc, Scalar};
use crate::forms::{diagonalize, signature, EpsSym};
use crate::sturm::{isolate_roots, ra_compare, RealAlgebraic};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Witt class of a nonsingular symmetric form over F_p, p an odd prime.
/// For p ≡ 1 (mod 4) the class is determined by the rank parity and the
/// discriminant square class; for p ≡ 3 (mod 4) it is an element of ℤ/4,
/// recorded in `z4`, and the other two fields are derived from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittClassFp {
    pub p: BigInt,
    pub r_mod2: bool,
    pub disc_is_square: bool,
    /// Class in ℤ/4 when p ≡ 3 (mod 4); None when p ≡ 1 (mod 4).
    pub z4: Option<u8>,
}

impl WittClassFp {
    fn from_counts(p: &BigInt, n_plus: u64, n_minus: u64) -> WittClassFp {
        if (p % BigInt::from(4)) == BigInt::from(3) {
            let z4 = (n_plus as i64 - n_minus as i64).rem_euclid(4) as u8;
            WittClassFp {
                p: p.clone(),
                r_mod2: z4 % 2 == 1,
                disc_is_square: z4 != 3,
                z4: Some(z4),
            }
        } else {
            WittClassFp {
                p: p.clone(),
                r_mod2: (n_plus + n_minus) % 2 == 1,
                disc_is_square: n_minus % 2 == 0,
                z4: None,
            }
        }
    }

    pub fn zero(p: &BigInt) -> WittClassFp {
        WittClassFp::from_counts(p, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        !self.r_mod2 && self.disc_is_square && self.z4.unwrap_or(0) == 0
    }

    /// Orthogonal sum in W(F_p); both classes must live over the same prime.
    pub fn add(&self, other: &WittClassFp) -> Result<WittClassFp> {
        if self.p != other.p {
            return Err(Error::Precondition(
                "cannot add Witt classes over different primes".into(),
            ));
        }
        match (self.z4, other.z4) {
            (Some(a), Some(b)) => Ok(WittClassFp::from_counts(
                &self.p,
                (a as u64 + b as u64) % 4,
                0,
            )),
            (None, None) => Ok(WittClassFp {
                p: self.p.clone(),
                r_mod2: self.r_mod2 ^ other.r_mod2,
                disc_is_square: self.disc_is_square == other.disc_is_square,
                z4: None,
            }),
            _ => unreachable!("same prime implies same residue mod 4"),
        }
    }
}

fn check_odd_prime(p: &BigInt) -> Result<()> {
    let small = p
        .to_u64()
        .ok_or_else(|| Error::Unsupported("prime modulus exceeds u64".into()))?;
    if small == 2 || !is_prime_u64(small) {
        return Err(Error::Precondition("modulus must be an odd prime".into()));
    }
    Ok(())
}

/// Witt class of a diagonal form over F_p from its diagonal residues.
pub fn witt_fp(diag: &[BigInt], p: &BigInt) -> Result<WittClassFp> {
    check_odd_prime(p)?;
    let mut n_plus = 0u64;
    let mut n_minus = 0u64;
    for a in diag {
        match legendre(a, p) {
            1 => n_plus += 1,
            -1 => n_minus += 1,
            _ => return Err(Error::ZeroInput),
        }
    }
    Ok(WittClassFp::from_counts(p, n_plus, n_minus))
}

/// Witt class of a nonsingular symmetric form over ℚ: signature (the W(ℝ)
/// image), the ℤ/2 slot at p = 2 (parity of entries with even squarefree
/// part after diagonalization), and second residues in W(F_p) at odd primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittClassQ {
    pub signature: i64,
    pub dim_mod2: bool,
    pub res2: bool,
    pub local: BTreeMap<BigInt, WittClassFp>,
}

impl WittClassQ {
    pub fn zero() -> WittClassQ {
        WittClassQ {
            signature: 0,
            dim_mod2: false,
            res2: false,
            local: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.signature == 0 && !self.res2 && self.local.is_empty()
    }

    pub fn add(&self, other: &WittClassQ) -> Result<WittClassQ> {
        let mut local = self.local.clone();
        for (p, c) in &other.local {
            let merged = match local.get(p) {
                Some(mine) => mine.add(c)?,
                None => c.clone(),
            };
            if merged.is_zero() {
                local.remove(p);
            } else {
                local.insert(p.clone(), merged);
            }
        }
        Ok(WittClassQ {
            signature: self.signature + other.signature,
            dim_mod2: self.dim_mod2 ^ other.dim_mod2,
            res2: self.res2 ^ other.res2,
            local,
        })
    }
}

/// Signed squarefree integer representing the square class of a nonzero
/// rational; None signals a ZeroInput, Err an out-of-range factorization.
fn squarefree_signed(r: &Rat) -> Result<BigInt> {
    if Zero::is_zero(r) {
        return Err(Error::ZeroInput);
    }
    let n = r.numer() * r.denom();
    let fac = factor_bigint(&n)
        .ok_or_else(|| Error::Unsupported("entry too large to factor".into()))?;
    let mut s = BigInt::one();
    for (p, e) in fac {
        if e % 2 == 1 {
            s *= p;
        }
    }
    if n.is_negative() {
        s = -s;
    }
    Ok(s)
}

/// Witt class of a nonsingular symmetric form over ℚ.
pub fn witt_q(s: &EpsSym<Rat>) -> Result<WittClassQ> {
    if s.epsilon != 1 {
        return Err(Error::Precondition(
            "Witt classes are defined for symmetric forms".into(),
        ));
    }
    if s.dim() == 0 {
        return Ok(WittClassQ::zero());
    }
    if Scalar::is_zero(&s.mat.det()) {
        return Err(Error::Singular);
    }
    let (_, d) = diagonalize(s)?;
    let mut sig = 0i64;
    let mut res2 = false;
    let mut per_prime: BTreeMap<BigInt, Vec<BigInt>> = BTreeMap::new();
    for i in 0..s.dim() {
        let sf = squarefree_signed(d.at(i, i))?;
        sig += if sf.is_negative() { -1 } else { 1 };
        let fac = factor_bigint(&sf).expect("squarefree part already factored");
        for (p, _) in fac {
            if p == BigInt::from(2) {
                res2 = !res2;
            } else {
                let unit = &sf / &p;
                per_prime.entry(p).or_default().push(unit);
            }
        }
    }
    let mut local = BTreeMap::new();
    for (p, entries) in per_prime {
        let c = witt_fp(&entries, &p)?;
        if !c.is_zero() {
            local.insert(p, c);
        }
    }
    Ok(WittClassQ {
        signature: sig,
        dim_mod2: s.dim() % 2 == 1,
        res2,
        local,
    })
}

/// Witt class of a nonsingular symmetric form over ℚ(X), modelling forms
/// over ℝ(X): the signature beyond all real spectral points, the half-jumps
/// of the signature function at isolated real points, and the parity class
/// of the discriminant at each irreducible factor with non-real roots.
#[derive(Clone, Debug)]
pub struct WittClassRX {
    pub tau_inf: i64,
    /// (spectral point, half-jump of the signature across it), jumps ≠ 0,
    /// sorted by the point.
    pub real_part: Vec<(RealAlgebraic, i64)>,
    /// Monic ℚ-irreducible factors of the discriminant with at least one
    /// non-real root and odd multiplicity, sorted.
    pub h_part: Vec<Poly>,
}

impl PartialEq for WittClassRX {
    fn eq(&self, other: &Self) -> bool {
        self.tau_inf == other.tau_inf
            && self.real_part.len() == other.real_part.len()
            && self
                .real_part
                .iter()
                .zip(&other.real_part)
                .all(|(a, b)| {
                    a.1 == b.1 && ra_compare(&a.0, &b.0) == std::cmp::Ordering::Equal
                })
            && self.h_part == other.h_part
    }
}

/// A rational point strictly between two adjacent real algebraic numbers at
/// which g does not vanish.
fn sample_between(a: &mut RealAlgebraic, b: &mut RealAlgebraic, g: &Poly) -> Rat {
    loop {
        if a.hi() < b.lo() {
            return (a.hi() + b.lo()) / rat(2);
        }
        if a.hi() == b.lo() {
            let t = a.hi().clone();
            if !Zero::is_zero(&g.eval(&t)) {
                return t;
            }
        }
        a.refine();
        b.refine();
    }
}

/// Witt class of a nonsingular symmetric form over ℚ(X).
pub fn witt_rx(s: &EpsSym<RatFunc>) -> Result<WittClassRX> {
    if s.epsilon != 1 {
        return Err(Error::Precondition(
            "Witt classes are defined for symmetric forms".into(),
        ));
    }
    if s.dim() == 0 {
        return Ok(WittClassRX {
            tau_inf: 0,
            real_part: Vec::new(),
            h_part: Vec::new(),
        });
    }
    let det = s.mat.det();
    if Scalar::is_zero(&det) {
        return Err(Error::Singular);
    }
    // every x where the evaluated matrix could be singular or undefined is a
    // root of this support polynomial
    let mut support = det.num.mul(&det.den);
    for e in &s.mat.a {
        support = support.mul(&e.den);
    }
    let support = support.squarefree_part()?;
    let mut roots = if support.degree().map_or(false, |d| d >= 1) {
        isolate_roots(&support)?
    } else {
        Vec::new()
    };
    // sample points strictly between consecutive spectral candidates
    let mut samples: Vec<Rat> = Vec::with_capacity(roots.len() + 1);
    if roots.is_empty() {
        samples.push(rat(0));
    } else {
        samples.push(roots[0].lo() - rat(1));
        for i in 0..roots.len() - 1 {
            let (left, right) = roots.split_at_mut(i + 1);
            samples.push(sample_between(&mut left[i], &mut right[0], &support));
        }
        samples.push(roots[roots.len() - 1].hi() + rat(1));
    }
    let mut taus = Vec::with_capacity(samples.len());
    for x in &samples {
        let m = crate::sturm::eval_matrix(&s.mat, x)?;
        taus.push(signature(&EpsSym::symmetric(m)?)?.tau());
    }
    let tau_inf = *taus.last().expect("at least one sample");
    let mut real_part = Vec::new();
    for (i, r) in roots.into_iter().enumerate() {
        let jump = taus[i + 1] - taus[i];
        debug_assert_eq!(jump % 2, 0, "signature parity is locally constant");
        if jump != 0 {
            real_part.push((r, jump / 2));
        }
    }
    let disc = det.num.mul(&det.den);
    let mut h_part = Vec::new();
    if disc.degree().map_or(false, |d| d >= 1) {
        for (f, m) in factor_rational(&disc)? {
            if m % 2 == 1 && has_nonreal_root(&f)? {
                h_part.push(f);
            }
        }
    }
    Ok(WittClassRX {
        tau_inf,
        real_part,
        h_part,
    })
}

/// Second residue of a nonsingular symmetric form over ℚ(X) at a monic
/// irreducible π: the diagonal (entries of degree < deg π) of a form over
/// the residue field ℚ[X]/(π).
pub fn residue(s: &EpsSym<RatFunc>, pi: &Poly) -> Result<Vec<Poly>> {
    if pi.degree().map_or(true, |d| d < 1) {
        return Err(Error::ConstantPoly);
    }
    let pi = pi.monic();
    if !is_irreducible(&pi)? {
        return Err(Error::Reducible);
    }
    if s.epsilon != 1 {
        return Err(Error::Precondition(
            "residues are defined for symmetric forms".into(),
        ));
    }
    if s.dim() == 0 {
        return Ok(Vec::new());
    }
    if Scalar::is_zero(&s.mat.det()) {
        return Err(Error::Singular);
    }
    let (_, d) = diagonalize(s)?;
    let mut out = Vec::new();
    for i in 0..s.dim() {
        let f = d.at(i, i);
        let mut t = f.num.mul(&f.den);
        let mut mult = 0u32;
        while pi.divides(&t) {
            t = t.div_exact(&pi);
            mult += 1;
        }
        if mult % 2 == 1 {
            let (_, u) = t.divmod(&pi)?;
            debug_assert!(!u.is_zero());
            out.push(u);
        }
    }
    Ok(out)
}

/// Exact square root of a nonnegative rational, when it is a square.
fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

fn is_square_rat(r: &Rat) -> bool {
    rat_sqrt(r).is_some()
}

/// Whether w (a nonzero element of degree < 2) is a square in the quadratic
/// field ℚ[X]/(π), π monic irreducible of degree 2.
fn is_square_quadratic(pi: &Poly, w: &Poly) -> bool {
    let b = pi.coeff(1);
    let c = pi.coeff(0);
    let disc = &b * &b - rat(4) * &c;
    // write w in the basis 1, √disc: X = (−b + √disc)/2
    let w1 = w.coeff(1);
    let a = w.coeff(0) - &w1 * &b / rat(2);
    let bb = &w1 / rat(2);
    if Zero::is_zero(&bb) {
        return is_square_rat(&a) || is_square_rat(&(&a / &disc));
    }
    // a + bb·√disc = (x + y√disc)² needs the norm a² − bb²·disc to be a
    // rational square n², and then x² = (a ± n)/2 a rational square
    let norm = &a * &a - &bb * &bb * &disc;
    match rat_sqrt(&norm) {
        None => false,
        Some(n) => {
            is_square_rat(&((&a + &n) / rat(2))) || is_square_rat(&((&a - &n) / rat(2)))
        }
    }
}

/// Equality in the Witt group of the residue field ℚ[X]/(π) of two diagonal
/// forms. Full comparison for deg π = 1 (the residue field is ℚ); rank ≤ 1
/// comparison for deg π = 2 via the exact square test in a quadratic field.
pub fn residue_classes_equal(pi: &Poly, a: &[Poly], b: &[Poly]) -> Result<bool> {
    let pi = pi.monic();
    match pi.degree() {
        Some(1) => {
            let root = -pi.coeff(0);
            let to_form = |entries: &[Poly]| -> Result<WittClassQ> {
                let n = entries.len();
                let mut m = crate::linalg::Mat::<Rat>::zero(n, n);
                for (i, e) in entries.iter().enumerate() {
                    *m.at_mut(i, i) = e.eval(&root);
                }
                witt_q(&EpsSym::symmetric(m)?)
            };
            Ok(to_form(a)? == to_form(b)?)
        }
        Some(2) => {
            if a.len() > 1 || b.len() > 1 {
                return Err(Error::Unsupported(
                    "only rank ≤ 1 comparisons over a quadratic residue field".into(),
                ));
            }
            match (a.first(), b.first()) {
                (None, None) => Ok(true),
                // a rank-1 class is never zero in the Witt group of a field
                (None, Some(_)) | (Some(_), None) => Ok(false),
                (Some(u), Some(v)) => {
                    let (_, w) = u.mul(v).divmod(&pi)?;
                    if w.is_zero() {
                        return Err(Error::ZeroInput);
                    }
                    Ok(is_square_quadratic(&pi, &w))
                }
            }
        }
        _ => Err(Error::Unsupported(
            "residue field comparison implemented for deg π ≤ 2".into(),
        )),
    }
}

/// A linking form on a finite abelian group, presented as an orthogonal sum
/// of cyclic summands (ℤ/c, a/c) with gcd(a, c) = 1. The summand list is
/// normalized: c ≥ 2, a reduced mod c, opposite pairs (c, a) ⊕ (c, c−a)
/// cancelled, and the result sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingFormZ {
    pub summands: Vec<(BigInt, BigInt)>,
}

impl LinkingFormZ {
    pub fn new(raw: Vec<(BigInt, BigInt)>) -> Result<LinkingFormZ> {
        let mut norm: Vec<(BigInt, BigInt)> = Vec::new();
        for (c, a) in raw {
            if c.is_zero() {
                return Err(Error::ZeroInput);
            }
            if !a.gcd(&c).is_one() {
                return Err(Error::NotCoprime);
            }
            let c = c.abs();
            if c.is_one() {
                continue;
            }
            let a = a.mod_floor(&c);
            norm.push((c, a));
        }
        norm.sort();
        let mut summands: Vec<(BigInt, BigInt)> = Vec::new();
        for (c, a) in norm {
            let opposite = |s: &(BigInt, BigInt)| s.0 == c && ((&s.1 + &a) % &c).is_zero();
            if let Some(pos) = summands.iter().position(opposite) {
                summands.remove(pos);
            } else {
                summands.push((c, a));
            }
        }
        summands.sort();
        Ok(LinkingFormZ { summands })
    }

    pub fn empty() -> LinkingFormZ {
        LinkingFormZ {
            summands: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn direct_sum(&self, other: &LinkingFormZ) -> LinkingFormZ {
        let mut raw = self.summands.clone();
        raw.extend(other.summands.clone());
        LinkingFormZ::new(raw).expect("normalized inputs stay valid")
    }
}

/// Boundary linking form of a nonsingular symmetric form over ℚ: diagonalize,
/// reduce each entry to its signed squarefree square class s, and emit a
/// cyclic summand (ℤ/|s|, sign(s)/|s|) for |s| > 1.
pub fn linking_boundary(s: &EpsSym<Rat>) -> Result<LinkingFormZ> {
    if s.epsilon != 1 {
        return Err(Error::Precondition(
            "linking boundaries are defined for symmetric forms".into(),
        ));
    }
    if s.dim() == 0 {
        return Ok(LinkingFormZ::empty());
    }
    if Scalar::is_zero(&s.mat.det()) {
        return Err(Error::Singular);
    }
    let (_, d) = diagonalize(s)?;
    let mut raw = Vec::new();
    for i in 0..s.dim() {
        let sf = squarefree_signed(d.at(i, i))?;
        let c = sf.abs();
        if c.is_one() {
            continue;
        }
        let a = if sf.is_negative() {
            &c - BigInt::one()
        } else {
            BigInt::one()
        };
        raw.push((c, a));
    }
    LinkingFormZ::new(raw)
}

/// Linking pairing of the lens space L(c, a): the form (ℤ/c, a/c); empty for
/// |c| = 1.
pub fn lens_linking(c: &BigInt, a: &BigInt) -> Result<LinkingFormZ> {
    if c.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !a.gcd(c).is_one() {
        return Err(Error::NotCoprime);
    }
    LinkingFormZ::new(vec![(c.clone(), a.clone())])
}

/// Witt-group invariants of a linking form: the ℤ/2 slot at p = 2 together
/// with a class in W(F_p) for each odd prime, obtained by splitting each
/// cyclic summand by CRT into prime-power pieces and applying dévissage
/// ((ℤ/p^k, a) contributes [a mod p] when k is odd, nothing when k is even).
fn linking_invariants(
    l: &LinkingFormZ,
) -> Result<(bool, BTreeMap<BigInt, WittClassFp>)> {
    let mut bit2 = false;
    let mut per_prime: BTreeMap<BigInt, Vec<BigInt>> = BTreeMap::new();
    for (c, a) in &l.summands {
        let fac = factor_bigint(c)
            .ok_or_else(|| Error::Unsupported("summand order too large to factor".into()))?;
        for (p, k) in fac {
            if k % 2 == 0 {
                continue;
            }
            if p == BigInt::from(2) {
                bit2 = !bit2;
                continue;
            }
            let pk = p.pow(k);
            let cof = c / &pk;
            let unit = (a * cof).mod_floor(&p);
            per_prime.entry(p).or_default().push(unit);
        }
    }
    let mut local = BTreeMap::new();
    for (p, entries) in per_prime {
        let cl = witt_fp(&entries, &p)?;
        if !cl.is_zero() {
            local.insert(p, cl);
        }
    }
    Ok((bit2, local))
}

/// Equality of linking forms in the Witt group of linking forms, decided
/// through the complete invariant system of `linking_invariants`.
pub fn linking_witt_eq(l1: &LinkingFormZ, l2: &LinkingFormZ) -> Result<bool> {
    Ok(linking_invariants(l1)? == linking_invariants(l2)?)
}
