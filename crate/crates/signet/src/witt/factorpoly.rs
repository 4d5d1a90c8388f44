//! Factorization of rational polynomials into ℚ-irreducible factors:
//! rational-root stripping plus Kronecker interpolation for the rest.

use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::exact::{rat, Poly, Rat};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Monic ℚ-irreducible factors with multiplicities (the leading coefficient
/// and content are dropped; factors are sorted for determinism).
pub fn factor_rational(p: &Poly) -> Result<Vec<(Poly, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut rest = p.monic();
    let mut out: Vec<(Poly, u32)> = Vec::new();
    while rest.degree().map_or(false, |d| d >= 1) {
        let f = find_irreducible_factor(&rest)?;
        let mut mult = 0;
        while f.divides(&rest) {
            rest = rest.div_exact(&f).monic();
            mult += 1;
        }
        out.push((f, mult));
    }
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.to_strings().cmp(&b.0.to_strings()))
    });
    Ok(out)
}

/// True when the polynomial is irreducible over ℚ (degree ≥ 1).
pub fn is_irreducible(p: &Poly) -> Result<bool> {
    match p.degree() {
        None | Some(0) => Ok(false),
        Some(_) => {
            let f = factor_rational(p)?;
            Ok(f.len() == 1 && f[0].1 == 1)
        }
    }
}

/// Some monic irreducible factor of a nonconstant polynomial.
fn find_irreducible_factor(p: &Poly) -> Result<Poly> {
    let d = p.degree().expect("nonconstant") ;
    if d == 1 {
        return Ok(p.monic());
    }
    // linear factors from rational roots
    if let Some(roots) = p.rational_roots() {
        if let Some(r) = roots.first() {
            return Ok(Poly::new(vec![-r.clone(), rat(1)]));
        }
    } else {
        return Err(Error::Unsupported(
            "coefficients too large to factor".into(),
        ));
    }
    // Kronecker search for a factor of degree m ≤ d/2
    let (ints, _) = p.primitive_integer();
    let f = Poly::from_bigint(&ints);
    for m in 2..=d / 2 {
        if let Some(g) = kronecker_degree(&f, m)? {
            return find_irreducible_factor(&g);
        }
    }
    Ok(p.monic()) // irreducible
}

/// Search for a degree-m factor by interpolating divisors of values at
/// m+1 integer points.
fn kronecker_degree(f: &Poly, m: usize) -> Result<Option<Poly>> {
    let pts: Vec<i64> = sample_points(m + 1);
    let mut value_divs: Vec<Vec<BigInt>> = Vec::with_capacity(pts.len());
    for &x in &pts {
        let v = f.eval(&rat(x));
        debug_assert!(v.denom().abs().eq(&BigInt::from(1)));
        let vi = v.numer().clone();
        if vi.is_zero() {
            // rational root; handled by the caller's root pass
            return Ok(Some(Poly::new(vec![rat(-x), rat(1)])));
        }
        let mut ds = divisors(&vi).ok_or_else(|| {
            Error::Unsupported("polynomial values too large to factor".into())
        })?;
        let negs: Vec<BigInt> = ds.iter().map(|d| -d).collect();
        ds.extend(negs);
        value_divs.push(ds);
    }
    // bound the search to keep worst cases from exploding
    let combos: usize = value_divs.iter().map(|d| d.len()).product();
    if combos > 2_000_000 {
        return Err(Error::Unsupported(
            "factor search space too large".into(),
        ));
    }
    let mut idx = vec![0usize; pts.len()];
    loop {
        let vals: Vec<Rat> = idx
            .iter()
            .zip(&value_divs)
            .map(|(&i, ds)| Rat::from_integer(ds[i].clone()))
            .collect();
        if let Some(g) = crate::exact::poly::interpolate_i64(&pts, &vals) {
            if g.degree() == Some(m) && g.divides(f) {
                return Ok(Some(g.monic()));
            }
        }
        // advance multi-index
        let mut k = 0;
        loop {
            idx[k] += 1;
            if idx[k] < value_divs[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
            if k == idx.len() {
                return Ok(None);
            }
        }
    }
}

fn sample_points(n: usize) -> Vec<i64> {
    let mut pts = Vec::with_capacity(n);
    let mut k = 0i64;
    while pts.len() < n {
        pts.push(k);
        if k > 0 && pts.len() < n {
            pts.push(-k);
        }
        k += 1;
    }
    pts.truncate(n);
    pts
}

/// Lagrange interpolation through integer points.
/// True when the polynomial has at least one non-real complex root.
pub fn has_nonreal_root(p: &Poly) -> Result<bool> {
    match p.degree() {
        None | Some(0) => Ok(false),
        Some(d) => Ok(crate::sturm::isolate_roots(p)?.len() < d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn factors_products() {
        // (X²+1)(X−1)²(X+3)
        let p = poly(&[0, 1]); // placeholder
        let _ = p;
        let f = poly(&[1, 0, 1])
            .mul(&poly(&[-1, 1]))
            .mul(&poly(&[-1, 1]))
            .mul(&poly(&[3, 1]));
        let fac = factor_rational(&f).unwrap();
        assert_eq!(fac.len(), 3);
        let m: std::collections::HashMap<_, _> = fac
            .iter()
            .map(|(g, e)| (g.to_strings().join(","), *e))
            .collect();
        assert_eq!(m[&poly(&[-1, 1]).to_strings().join(",")], 2);
        assert_eq!(m[&poly(&[3, 1]).to_strings().join(",")], 1);
        assert_eq!(m[&poly(&[1, 0, 1]).to_strings().join(",")], 1);
    }

    #[test]
    fn irreducibles() {
        assert!(is_irreducible(&poly(&[1, 0, 1])).unwrap()); // X²+1
        assert!(is_irreducible(&poly(&[-2, 0, 0, 1])).unwrap()); // X³−2
        assert!(!is_irreducible(&poly(&[-1, 0, 1])).unwrap()); // X²−1
        assert!(!is_irreducible(&poly(&[2])).unwrap());
        // X⁴+4 = (X²−2X+2)(X²+2X+2)
        let fac = factor_rational(&poly(&[4, 0, 0, 0, 1])).unwrap();
        assert_eq!(fac.len(), 2);
        assert!(fac.iter().all(|(g, e)| g.degree() == Some(2) && *e == 1));
    }

    #[test]
    fn nonreal_detection() {
        assert!(has_nonreal_root(&poly(&[1, 0, 1])).unwrap());
        assert!(has_nonreal_root(&poly(&[-2, 0, 0, 1])).unwrap()); // X³−2
        assert!(!has_nonreal_root(&poly(&[-2, 0, 1])).unwrap()); // X²−2
        assert!(!has_nonreal_root(&poly(&[5, 1])).unwrap());
    }
}
