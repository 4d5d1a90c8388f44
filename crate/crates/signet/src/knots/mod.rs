//! Knot invariants from braid words: canonical Seifert matrices, Alexander
//! polynomials, Murasugi and Tristram–Levine signatures, the full signature
//! function with its Milnor jumps, and S-equivalence moves.

pub mod braid;
pub mod seifert;

pub use braid::{closure_components, parse_braid, BraidWord};
pub use seifert::{fibred_seifert, s_equiv_enlarge, seifert_matrix, SeifertMatrix};

use crate::error::{Error, Result};
use crate::exact::poly::interpolate_i64;
use crate::exact::{rat, Cyc, Poly, Rat};
use crate::exact::Scalar;
use crate::forms::{signature, EpsSym};
use crate::linalg::Mat;
use crate::sturm::{isolate_roots, RealAlgebraic};
use num_integer::Integer;
use num_traits::Zero;

/// det(z·Σ − Σᵀ), normalized to lowest degree 0 with positive leading
/// coefficient (fixing the ±z^k unit ambiguity).
pub fn alexander(s: &SeifertMatrix) -> Result<Poly> {
    let n = s.dim();
    if n == 0 {
        return Ok(Poly::one());
    }
    let st = s.sigma.transpose();
    let xs: Vec<i64> = (0..=n as i64).collect();
    let ys: Vec<Rat> = xs
        .iter()
        .map(|&k| s.sigma.scale(&rat(k)).sub(&st).det())
        .collect();
    let p = interpolate_i64(&xs, &ys).expect("distinct interpolation nodes");
    Ok(normalize_laurent(&p))
}

/// Strip the z-power and sign unit: lowest nonzero coefficient moved to
/// degree 0, leading coefficient made positive.
fn normalize_laurent(p: &Poly) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    let v = p
        .c
        .iter()
        .position(|c| !Zero::is_zero(c))
        .expect("nonzero polynomial");
    let mut q = Poly::new(p.c[v..].to_vec());
    if q.leading() < rat(0) {
        q = q.neg();
    }
    q
}

/// Murasugi signature τ(Σ + Σᵀ).
pub fn knot_signature(s: &SeifertMatrix) -> Result<i64> {
    if s.dim() == 0 {
        return Ok(0);
    }
    Ok(signature(&EpsSym::symmetric(s.symmetrized())?)?.tau())
}

/// Tristram–Levine signature at ω = exp(2πi·a/q): the hermitian signature of
/// (1−ω)Σ + (1−ω̄)Σᵀ over ℚ(ζ_q). Errors when ω is a root of the Alexander
/// polynomial (the form degenerates there).
pub fn omega_signature(s: &SeifertMatrix, a: i64, q: u64) -> Result<i64> {
    if q < 2 || a <= 0 || (a as u64) >= q || (a as u64).gcd(&q) != 1 {
        return Err(Error::Precondition(
            "angle must be a/q in lowest terms with 0 < a < q".into(),
        ));
    }
    let n = s.dim();
    if n == 0 {
        return Ok(0);
    }
    let omega = Cyc::root_of_unity(a, q);
    let delta = alexander(s)?;
    let mut val = Cyc::zero();
    for (j, c) in delta.c.iter().enumerate() {
        if Zero::is_zero(c) {
            continue;
        }
        let term = Cyc::root_of_unity(a * j as i64, q).mul(&Cyc::from_rat(c.clone()));
        val = val.add(&term);
    }
    if val.is_zero() {
        return Err(Error::AlexanderRoot);
    }
    let u = Cyc::one().sub(&omega);
    let v = u.conj();
    let mut m = Mat::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            let left = u.mul(&Cyc::from_rat(s.sigma.at(i, j).clone()));
            let right = v.mul(&Cyc::from_rat(s.sigma.at(j, i).clone()));
            *m.at_mut(i, j) = left.add(&right);
        }
    }
    Ok(signature(&EpsSym::new(1, m)?)?.tau())
}

/// The Tristram–Levine signature as a step function of the angle θ ∈ (0, π).
///
/// Breakpoints are recorded through x = ω + ω̄ = 2cos θ, so the list is
/// strictly decreasing in x and increasing in θ. Plateau values cover the
/// |breakpoints| + 1 open arcs; `milnor_jumps[k]` is half the jump across
/// breakpoint k, the Milnor signature τ^λ at λ = e^{iθ_k}.
#[derive(Clone, Debug)]
pub struct SignatureFunction {
    pub breakpoints: Vec<RealAlgebraic>,
    pub plateau_values: Vec<i64>,
    pub milnor_jumps: Vec<i64>,
}

/// Alexander roots on the unit circle, as a polynomial in x = z + z⁻¹:
/// the norm of Δ in ℚ[z]/(z² − xz + 1), by evaluation and interpolation.
fn circle_trace_polynomial(delta: &Poly) -> Poly {
    let d = delta.deg();
    let xs: Vec<i64> = (0..=d as i64).collect();
    let mut ys = Vec::with_capacity(xs.len());
    for &x0 in &xs {
        let modulus = Poly::new(vec![rat(1), rat(-x0), rat(1)]);
        let (_, r) = delta.divmod(&modulus).expect("nonzero modulus");
        let a = r.coeff(0);
        let b = r.coeff(1);
        ys.push(&a * &a + &a * &b * rat(x0) + &b * &b);
    }
    interpolate_i64(&xs, &ys).expect("distinct interpolation nodes")
}

/// Signature of the real symmetric doubling [[tS, K], [−K, tS]] of the
/// hermitian form at θ = 2·arctan(t): twice the ω-signature at any angle,
/// rational in t = tan(θ/2).
fn doubled_tau(s: &SeifertMatrix, t: &Rat) -> Result<i64> {
    let n = s.dim();
    let sym = s.symmetrized();
    let skew = s.intersection();
    let mut m = Mat::zero(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            *m.at_mut(i, j) = t * sym.at(i, j);
            *m.at_mut(n + i, n + j) = t * sym.at(i, j);
            *m.at_mut(i, n + j) = skew.at(i, j).clone();
            *m.at_mut(n + i, j) = -skew.at(i, j);
        }
    }
    Ok(signature(&EpsSym::symmetric(m)?)?.tau())
}

/// 2cos(2πa/q) as a real cyclotomic number.
fn two_cos(a: i64, q: u64) -> Cyc {
    Cyc::root_of_unity(a, q).add(&Cyc::root_of_unity(-a, q))
}

/// Certify r_lo < 2cos(2πa/q) < r_hi, or its negation, exactly.
fn angle_inside(a: i64, q: u64, r_lo: &Rat, r_hi: &Rat) -> bool {
    let x = two_cos(a, q);
    if let Some(v) = x.as_rat() {
        return &v > r_lo && &v < r_hi;
    }
    let mut prec = crate::exact::cyclotomic::start_precision();
    loop {
        let iv = x.eval_real(prec);
        let (lo, hi) = (iv.lo.to_rat(), iv.hi.to_rat());
        if &lo > r_lo && &hi < r_hi {
            return true;
        }
        if &hi < r_lo || &lo > r_hi {
            return false;
        }
        prec *= 2;
    }
}

/// Largest conductor tried when sampling arcs at rational angles; beyond it
/// the arc is sampled through the rational tan(θ/2) doubling instead.
const CONDUCTOR_CAP: u64 = 420;

fn plateau_on_arc(s: &SeifertMatrix, r_lo: &Rat, r_hi: &Rat) -> Result<i64> {
    // rational angle a/q with 2cos(2πa/q) strictly inside the arc
    let lo_f = rat_f64(r_lo);
    let hi_f = rat_f64(r_hi);
    for q in 3..=CONDUCTOR_CAP {
        for a in 1..=((q - 1) / 2) {
            if a.gcd(&q) != 1 {
                continue;
            }
            let x = 2.0 * (2.0 * std::f64::consts::PI * a as f64 / q as f64).cos();
            if x <= lo_f || x >= hi_f {
                continue;
            }
            if angle_inside(a as i64, q, r_lo, r_hi) {
                return omega_signature(s, a as i64, q);
            }
        }
    }
    // fallback: rational t = tan(θ/2) with x(t) = 2(1−t²)/(1+t²) in the arc,
    // found by bisection on the monotone map t ↦ x(t)
    let x_of = |t: &Rat| -> Rat {
        let t2 = t * t;
        rat(2) * (rat(1) - &t2) / (rat(1) + &t2)
    };
    let mut t_lo = rat(0);
    let mut t_hi = rat(1);
    if r_lo == &rat(-2) {
        // the arc reaches θ = π: any large enough t works
        while &x_of(&t_hi) >= r_hi {
            t_hi = &t_hi * rat(2);
        }
        let doubled = doubled_tau(s, &t_hi)?;
        assert!(doubled % 2 == 0, "doubled signature must be even");
        return Ok(doubled / 2);
    }
    while &x_of(&t_hi) > r_lo {
        t_hi = &t_hi * rat(2);
    }
    loop {
        let mid = (&t_lo + &t_hi) / rat(2);
        let x = x_of(&mid);
        if &x > r_lo && &x < r_hi {
            let doubled = doubled_tau(s, &mid)?;
            assert!(doubled % 2 == 0, "doubled signature must be even");
            return Ok(doubled / 2);
        }
        if &x >= r_hi {
            t_lo = mid;
        } else {
            t_hi = mid;
        }
    }
}

fn rat_f64(x: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(0.0)
}

pub fn signature_function(s: &SeifertMatrix) -> Result<SignatureFunction> {
    let delta = alexander(s)?;
    if delta.is_zero() {
        return Err(Error::Precondition("Alexander polynomial vanishes".into()));
    }
    let mut h = circle_trace_polynomial(&delta);
    // roots at x = ±2 are the endpoints θ ∈ {0, π}, outside the open arcs
    for r in [2i64, -2] {
        let lin = Poly::from_i64(&[-r, 1]);
        while !h.is_constant() && Zero::is_zero(&h.eval(&rat(r))) {
            h = h.div_exact(&lin);
        }
    }
    let mut breakpoints: Vec<RealAlgebraic> = Vec::new();
    if !h.is_constant() {
        for mut root in isolate_roots(&h.squarefree_part()?)? {
            loop {
                if root.hi() < &rat(2) && root.lo() > &rat(-2) {
                    breakpoints.push(root);
                    break;
                }
                if root.hi() <= &rat(-2) || root.lo() >= &rat(2) {
                    break;
                }
                root.refine();
            }
        }
    }
    // θ increasing = x decreasing
    breakpoints.reverse();
    // refine until consecutive breakpoint windows (and the ±2 endpoints)
    // are separated by rational gaps
    loop {
        let mut separated = true;
        for k in 0..breakpoints.len() {
            let hi_bound = if k == 0 {
                rat(2)
            } else {
                breakpoints[k - 1].lo().clone()
            };
            if breakpoints[k].hi() >= &hi_bound || breakpoints[k].lo() <= &rat(-2) {
                separated = false;
            }
        }
        if separated {
            break;
        }
        for b in breakpoints.iter_mut() {
            b.refine();
        }
    }
    let mut plateau_values = Vec::with_capacity(breakpoints.len() + 1);
    for k in 0..=breakpoints.len() {
        let r_hi = if k == 0 {
            rat(2)
        } else {
            breakpoints[k - 1].lo().clone()
        };
        let r_lo = if k == breakpoints.len() {
            rat(-2)
        } else {
            breakpoints[k].hi().clone()
        };
        plateau_values.push(plateau_on_arc(s, &r_lo, &r_hi)?);
    }
    let milnor_jumps = plateau_values
        .windows(2)
        .map(|w| {
            let d = w[1] - w[0];
            assert!(d % 2 == 0, "signature jumps are even");
            d / 2
        })
        .collect();
    Ok(SignatureFunction {
        breakpoints,
        plateau_values,
        milnor_jumps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn braid(text: &str) -> BraidWord {
        parse_braid(text).unwrap()
    }

    fn seifert(text: &str) -> SeifertMatrix {
        seifert_matrix(&braid(text)).unwrap()
    }

    struct XorShift(u64);

    impl XorShift {
        fn next(&mut self) -> u64 {
            self.0 ^= self.0 << 13;
            self.0 ^= self.0 >> 7;
            self.0 ^= self.0 << 17;
            self.0
        }
    }

    /// Random word on `strands` strands using every generator at least once
    /// (so the canonical surface is connected).
    fn random_braid(rng: &mut XorShift, strands: usize, extra: usize) -> BraidWord {
        let mut letters: Vec<(usize, i8)> = (1..strands)
            .map(|i| (i, if rng.next() % 2 == 0 { 1 } else { -1 }))
            .collect();
        for _ in 0..extra {
            let i = 1 + (rng.next() as usize) % (strands - 1);
            let s = if rng.next() % 2 == 0 { 1 } else { -1 };
            letters.push((i, s));
        }
        // shuffle
        for k in (1..letters.len()).rev() {
            let j = (rng.next() as usize) % (k + 1);
            letters.swap(k, j);
        }
        BraidWord::new(strands, letters).unwrap()
    }

    #[test]
    fn trefoil_invariants() {
        let s = seifert("2: 1 1 1");
        assert_eq!(s.dim(), 2);
        assert_eq!(s.components, 1);
        assert_eq!(alexander(&s).unwrap(), Poly::from_i64(&[1, -1, 1]));
        assert_eq!(knot_signature(&s).unwrap(), -2);
        assert_eq!(s.intersection().det(), rat(1));
        // symmetrization matches the standard matrix [[−1,1],[0,−1]]
        let std_sym = Mat::from_rows(vec![vec![rat(-2), rat(1)], vec![rat(1), rat(-2)]]);
        assert_eq!(s.symmetrized(), std_sym);
    }

    #[test]
    fn figure_eight_invariants() {
        let s = seifert("3: 1 -2 1 -2");
        assert_eq!(alexander(&s).unwrap(), Poly::from_i64(&[1, -3, 1]));
        assert_eq!(knot_signature(&s).unwrap(), 0);
        assert_eq!(s.symmetrized().det(), rat(-5));
        assert_eq!(s.intersection().det(), rat(1));
    }

    #[test]
    fn unknot_is_empty() {
        let s = seifert("2: 1");
        assert_eq!(s.dim(), 0);
        assert_eq!(alexander(&s).unwrap(), Poly::one());
        assert_eq!(knot_signature(&s).unwrap(), 0);
    }

    #[test]
    fn disconnected_surface_rejected() {
        assert!(matches!(
            seifert_matrix(&braid("3: 1 1 1")),
            Err(Error::DisconnectedSurface(2))
        ));
    }

    #[test]
    fn torus_knot_values() {
        let s = seifert("2: 1 1 1 1 1");
        assert_eq!(alexander(&s).unwrap(), Poly::from_i64(&[1, -1, 1, -1, 1]));
        assert_eq!(knot_signature(&s).unwrap(), -4);
        let s = seifert("3: 1 2 1 2 1 2 1 2");
        assert_eq!(
            alexander(&s).unwrap(),
            Poly::from_i64(&[1, -1, 0, 1, 0, -1, 1])
        );
        assert_eq!(knot_signature(&s).unwrap(), -6);
    }

    #[test]
    fn hopf_link() {
        let s = seifert("2: 1 1");
        assert_eq!(s.components, 2);
        assert_eq!(alexander(&s).unwrap(), Poly::from_i64(&[-1, 1]));
    }

    #[test]
    fn mirror_negates_signature() {
        let t = braid("2: 1 1 1");
        assert_eq!(knot_signature(&seifert_matrix(&t.mirror()).unwrap()).unwrap(), 2);
        let mut rng = XorShift(0x9E3779B97F4A7C15);
        for _ in 0..10 {
            let n = 2 + (rng.next() as usize) % 3;
            let b = random_braid(&mut rng, n, 5);
            let s = seifert_matrix(&b).unwrap();
            let m = seifert_matrix(&b.mirror()).unwrap();
            assert_eq!(
                knot_signature(&s).unwrap(),
                -knot_signature(&m).unwrap(),
                "mirror failed on {b:?}"
            );
        }
    }

    #[test]
    fn alexander_is_reciprocal() {
        let mut rng = XorShift(0xD1B54A32D192ED03);
        for _ in 0..12 {
            let n = 2 + (rng.next() as usize) % 3;
            let b = random_braid(&mut rng, n, 6);
            let d = alexander(&seifert_matrix(&b).unwrap()).unwrap();
            if d.is_zero() {
                continue;
            }
            let rev = normalize_laurent(&d.reversed());
            assert_eq!(rev, d, "Δ not ±-reciprocal on {b:?}");
        }
    }

    #[test]
    fn braid_relations_preserve_invariants() {
        let mut rng = XorShift(0xA0761D6478BD642F);
        for _ in 0..6 {
            let suffix = random_braid(&mut rng, 3, 4);
            let mut w1 = vec![(1, 1), (2, 1), (1, 1)];
            let mut w2 = vec![(2, 1), (1, 1), (2, 1)];
            w1.extend_from_slice(&suffix.letters);
            w2.extend_from_slice(&suffix.letters);
            let s1 = seifert_matrix(&BraidWord::new(3, w1).unwrap()).unwrap();
            let s2 = seifert_matrix(&BraidWord::new(3, w2).unwrap()).unwrap();
            assert_eq!(alexander(&s1).unwrap(), alexander(&s2).unwrap());
            assert_eq!(knot_signature(&s1).unwrap(), knot_signature(&s2).unwrap());
            for (a, q) in [(1, 5), (2, 7), (3, 8)] {
                let t1 = omega_signature(&s1, a, q);
                let t2 = omega_signature(&s2, a, q);
                match (t1, t2) {
                    (Ok(x), Ok(y)) => assert_eq!(x, y),
                    (Err(Error::AlexanderRoot), Err(Error::AlexanderRoot)) => {}
                    other => panic!("mismatch {other:?}"),
                }
            }
        }
    }

    #[test]
    fn far_commutation_preserves_invariants() {
        let mut rng = XorShift(0x2545F4914F6CDD1D);
        for _ in 0..6 {
            let suffix = random_braid(&mut rng, 4, 3);
            let mut w1 = vec![(1, 1), (3, -1)];
            let mut w2 = vec![(3, -1), (1, 1)];
            w1.extend_from_slice(&suffix.letters);
            w2.extend_from_slice(&suffix.letters);
            let s1 = seifert_matrix(&BraidWord::new(4, w1).unwrap()).unwrap();
            let s2 = seifert_matrix(&BraidWord::new(4, w2).unwrap()).unwrap();
            assert_eq!(alexander(&s1).unwrap(), alexander(&s2).unwrap());
            assert_eq!(knot_signature(&s1).unwrap(), knot_signature(&s2).unwrap());
        }
    }

    #[test]
    fn markov_stabilization_preserves_invariants() {
        let mut rng = XorShift(0x853C49E6748FEA9B);
        for _ in 0..10 {
            let n = 2 + (rng.next() as usize) % 3;
            let b = random_braid(&mut rng, n, 4);
            let mut wide = b.widened(n + 1).unwrap();
            wide.letters.push((n, 1));
            let s1 = seifert_matrix(&b).unwrap();
            let s2 = seifert_matrix(&wide).unwrap();
            assert_eq!(alexander(&s1).unwrap(), alexander(&s2).unwrap());
            assert_eq!(knot_signature(&s1).unwrap(), knot_signature(&s2).unwrap());
        }
    }

    #[test]
    fn knot_intersection_form_unimodular() {
        let mut rng = XorShift(0x6C62272E07BB0142);
        let mut found = 0;
        while found < 10 {
            let n = 2 + (rng.next() as usize) % 3;
            // (n − 1) + 4 letters keeps the closure permutation the right
            // parity to be an n-cycle
            let b = random_braid(&mut rng, n, 4);
            if closure_components(&b) != 1 {
                continue;
            }
            found += 1;
            let s = seifert_matrix(&b).unwrap();
            let d = s.intersection().det();
            assert!(d == rat(1), "det(Σ−Σᵀ) = {d} for {b:?}");
        }
    }

    #[test]
    fn omega_at_minus_one_is_murasugi() {
        let mut rng = XorShift(0xE7037ED1A0B428DB);
        for _ in 0..8 {
            let n = 2 + (rng.next() as usize) % 3;
            let b = random_braid(&mut rng, n, 5);
            let s = seifert_matrix(&b).unwrap();
            match omega_signature(&s, 1, 2) {
                Ok(t) => assert_eq!(t, knot_signature(&s).unwrap()),
                Err(Error::AlexanderRoot) => {
                    // Δ(−1) = 0 happens for links; the identity is vacuous
                }
                Err(e) => panic!("unexpected error {e:?}"),
            }
        }
    }

    #[test]
    fn trefoil_omega_values() {
        let s = seifert("2: 1 1 1");
        assert_eq!(omega_signature(&s, 1, 2).unwrap(), -2);
        // θ = π/6 < π/3: before the Alexander root
        assert_eq!(omega_signature(&s, 1, 12).unwrap(), 0);
        // θ = 2π/3 > π/3: after it
        assert_eq!(omega_signature(&s, 1, 3).unwrap(), -2);
        // ω = e^{iπ/3} is the Alexander root itself
        assert!(matches!(omega_signature(&s, 1, 6), Err(Error::AlexanderRoot)));
    }

    #[test]
    fn omega_rejects_bad_angles() {
        let s = seifert("2: 1 1 1");
        assert!(omega_signature(&s, 0, 5).is_err());
        assert!(omega_signature(&s, 5, 5).is_err());
        assert!(omega_signature(&s, 2, 4).is_err());
    }

    #[test]
    fn trefoil_signature_function() {
        let f = signature_function(&seifert("2: 1 1 1")).unwrap();
        assert_eq!(f.breakpoints.len(), 1);
        let mut bp = f.breakpoints.into_iter().next().unwrap();
        // 2cos(π/3) = 1
        assert_eq!(bp.as_rat(), Some(rat(1)));
        assert_eq!(f.plateau_values, vec![0, -2]);
        assert_eq!(f.milnor_jumps, vec![-1]);
    }

    #[test]
    fn unknot_signature_function() {
        let f = signature_function(&seifert("2: 1")).unwrap();
        assert!(f.breakpoints.is_empty());
        assert_eq!(f.plateau_values, vec![0]);
    }

    #[test]
    fn figure_eight_signature_function_is_flat() {
        // Δ = z² − 3z + 1 has only real roots, hence no circle breakpoints
        let f = signature_function(&seifert("3: 1 -2 1 -2")).unwrap();
        assert!(f.breakpoints.is_empty());
        assert_eq!(f.plateau_values, vec![0]);
    }

    #[test]
    fn cinquefoil_signature_function() {
        // Δ = Φ₁₀: circle roots at θ = π/5 and 3π/5
        let f = signature_function(&seifert("2: 1 1 1 1 1")).unwrap();
        assert_eq!(f.breakpoints.len(), 2);
        assert_eq!(f.plateau_values, vec![0, -2, -4]);
        assert_eq!(f.milnor_jumps, vec![-1, -1]);
    }

    #[test]
    fn signature_function_starts_at_zero_for_knots() {
        let mut rng = XorShift(0x1F123BB5159A55E5);
        let mut found = 0;
        while found < 5 {
            let n = 2 + (rng.next() as usize) % 2;
            let b = random_braid(&mut rng, n, 4);
            if closure_components(&b) != 1 {
                continue;
            }
            found += 1;
            let s = seifert_matrix(&b).unwrap();
            let f = signature_function(&s).unwrap();
            assert_eq!(f.plateau_values[0], 0, "nonzero start for {b:?}");
            for v in &f.plateau_values {
                assert_eq!(v.rem_euclid(2), 0, "odd plateau for {b:?}");
            }
            let total: i64 = f
                .plateau_values
                .windows(2)
                .map(|w| (w[1] - w[0]).abs())
                .sum();
            assert!(total <= 2 * s.dim() as i64);
        }
    }

    #[test]
    fn enlargement_preserves_invariants() {
        let s = seifert("2: 1 1 1");
        let e = s_equiv_enlarge(&s, &[rat(3), rat(-2)]).unwrap();
        assert_eq!(alexander(&e).unwrap(), alexander(&s).unwrap());
        assert_eq!(knot_signature(&e).unwrap(), -2);
        let e2 = s_equiv_enlarge(&e, &[rat(1), rat(4), rat(0), rat(-1)]).unwrap();
        assert_eq!(alexander(&e2).unwrap(), alexander(&s).unwrap());
        for (a, q) in [(1, 3), (1, 5), (2, 5), (3, 7), (1, 8), (3, 8), (2, 9), (1, 12)] {
            assert_eq!(
                omega_signature(&e2, a, q).unwrap(),
                omega_signature(&s, a, q).unwrap(),
                "ω-signature changed at {a}/{q}"
            );
        }
        let u = s_equiv_enlarge(&seifert("2: 1"), &[]).unwrap();
        assert_eq!(alexander(&u).unwrap(), Poly::one());
        assert!(s_equiv_enlarge(&s, &[rat(1)]).is_err());
    }

    fn standard_skew() -> Mat<Rat> {
        Mat::from_rows(vec![vec![rat(0), rat(1)], vec![rat(-1), rat(0)]])
    }

    #[test]
    fn fibred_minus_identity() {
        let a = Mat::identity(2).neg();
        let s = fibred_seifert(&a, &standard_skew()).unwrap();
        assert_eq!(s.sigma, standard_skew().scale(&Rat::new(1.into(), 2.into())));
    }

    #[test]
    fn fibred_round_trip() {
        let theta = standard_skew();
        for a in [
            Mat::from_rows(vec![vec![rat(2), rat(1)], vec![rat(1), rat(1)]]),
            Mat::from_rows(vec![vec![rat(0), rat(-1)], vec![rat(1), rat(0)]]),
            Mat::from_rows(vec![vec![rat(-1), rat(1)], vec![rat(-1), rat(0)]]),
        ] {
            let s = fibred_seifert(&a, &theta).unwrap();
            assert_eq!(s.sigma.inverse().unwrap().mul(&s.sigma.transpose()), a);
            assert_eq!(s.intersection(), theta);
        }
    }

    #[test]
    fn fibred_rejects_bad_input() {
        let theta = standard_skew();
        // 1 is an eigenvalue of a shear
        let shear = Mat::from_rows(vec![vec![rat(1), rat(1)], vec![rat(0), rat(1)]]);
        assert!(matches!(fibred_seifert(&shear, &theta), Err(Error::Singular)));
        // not symplectic: determinant 2
        let m = Mat::from_rows(vec![vec![rat(2), rat(0)], vec![rat(0), rat(1)]]);
        assert!(matches!(fibred_seifert(&m, &theta), Err(Error::NotSymplectic)));
    }

    #[test]
    fn rotation_model_jumps() {
        // rotation by π/2 has eigenvalues e^{±iπ/2}; the signature function
        // jumps by ±1 at the single interior angle
        let a = Mat::from_rows(vec![vec![rat(0), rat(-1)], vec![rat(1), rat(0)]]);
        let s = fibred_seifert(&a, &standard_skew()).unwrap();
        let f = signature_function(&s).unwrap();
        assert_eq!(f.breakpoints.len(), 1);
        let mut bp = f.breakpoints.into_iter().next().unwrap();
        assert_eq!(bp.as_rat(), Some(rat(0)));
        assert_eq!(f.milnor_jumps.iter().map(|j| j.abs()).collect::<Vec<_>>(), vec![1]);
    }
}
