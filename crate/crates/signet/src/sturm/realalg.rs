//! Real algebraic numbers as (squarefree integer polynomial, isolating
//! rational interval), with certified refinement and exact comparison.

use super::count_roots;
use crate::error::{Error, Result};
use crate::exact::{rat, Poly, Rat};
use num_traits::Zero;
use std::cmp::Ordering;

#[derive(Clone, Debug)]
pub struct RealAlgebraic {
    /// Squarefree primitive integer polynomial vanishing at the number.
    minpoly: Poly,
    lo: Rat,
    hi: Rat,
}

impl RealAlgebraic {
    /// Wrap an isolating interval: exactly one root of the (squarefree part
    /// of the) polynomial lies in [lo, hi]; verified by Sturm count.
    /// Constructor for intervals the isolator has already certified: same
    /// normalization as `from_isolating`, no recount.
    pub(crate) fn from_certified(minpoly: Poly, lo: Rat, hi: Rat) -> RealAlgebraic {
        RealAlgebraic { minpoly, lo, hi }
    }

    pub fn from_isolating(p: Poly, lo: Rat, hi: Rat) -> Result<RealAlgebraic> {
        let sf = p.squarefree_part()?;
        let minpoly = Poly::from_bigint(&sf.primitive_integer().0);
        if lo > hi {
            return Err(Error::BadInterval);
        }
        if lo == hi {
            if !Zero::is_zero(&minpoly.eval(&lo)) {
                return Err(Error::Precondition(
                    "point interval does not hit a root".into(),
                ));
            }
        } else if count_roots(&minpoly, &lo, &hi)? != 1 {
            return Err(Error::Precondition(
                "interval does not isolate exactly one root".into(),
            ));
        }
        Ok(RealAlgebraic { minpoly, lo, hi })
    }

    pub fn from_rat(r: &Rat) -> RealAlgebraic {
        // X − r, cleared to primitive integer coefficients
        let p = Poly::new(vec![-r.clone(), rat(1)]);
        let minpoly = Poly::from_bigint(&p.primitive_integer().0);
        RealAlgebraic {
            minpoly,
            lo: r.clone(),
            hi: r.clone(),
        }
    }

    pub fn minpoly(&self) -> &Poly {
        &self.minpoly
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// One bisection step; the invariant is maintained exactly.
    pub fn refine(&mut self) {
        if self.is_point() {
            return;
        }
        let mid = (&self.lo + &self.hi) / rat(2);
        if Zero::is_zero(&self.minpoly.eval(&mid)) {
            self.lo = mid.clone();
            self.hi = mid;
        } else if count_roots(&self.minpoly, &self.lo, &mid).expect("valid interval") == 1 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    /// Refine until the interval is narrower than eps.
    pub fn refine_to(&mut self, eps: &Rat) {
        while !self.is_point() && self.width() >= *eps {
            self.refine();
        }
    }

    /// Exact rational value, when the number is rational.
    pub fn as_rat(&mut self) -> Option<Rat> {
        if self.is_point() {
            return Some(self.lo.clone());
        }
        let candidates = self.minpoly.rational_roots()?;
        for r in candidates {
            if r >= self.lo && r <= self.hi {
                // the interval holds exactly one root, so this is it
                self.lo = r.clone();
                self.hi = r.clone();
                return Some(r);
            }
        }
        None
    }

    /// True iff this number is a root of q.
    pub fn is_root_of(&self, q: &Poly) -> bool {
        if q.is_zero() {
            return true;
        }
        if self.is_point() {
            return Zero::is_zero(&q.eval(&self.lo));
        }
        let g = match self.minpoly.gcd(q) {
            Ok(g) => g,
            Err(_) => return false,
        };
        if g.degree().map_or(true, |d| d < 1) {
            return false;
        }
        // all roots of g are minpoly roots; our interval holds exactly one
        // minpoly root, so the count is 1 exactly when that root is shared
        count_roots(&g, &self.lo, &self.hi).map_or(false, |c| c == 1)
    }
}

/// Exact comparison of two real algebraic numbers.
pub fn ra_compare(x: &RealAlgebraic, y: &RealAlgebraic) -> Ordering {
    let mut a = x.clone();
    let mut b = y.clone();
    if a.is_point() && b.is_point() {
        return a.lo.cmp(&b.lo);
    }
    // equality test via the gcd of the defining polynomials
    if let Ok(g) = a.minpoly.gcd(&b.minpoly) {
        if g.degree().map_or(false, |d| d >= 1) && a.is_root_of(&g) && b.is_root_of(&g) {
            // both are g-roots: they are equal iff the intersection of the
            // isolating intervals still holds a g-root
            let lo = if a.lo >= b.lo { a.lo.clone() } else { b.lo.clone() };
            let hi = if a.hi <= b.hi { a.hi.clone() } else { b.hi.clone() };
            match lo.cmp(&hi) {
                Ordering::Greater => {}
                Ordering::Equal => {
                    if Zero::is_zero(&g.eval(&lo)) {
                        return Ordering::Equal;
                    }
                }
                Ordering::Less => {
                    if count_roots(&g, &lo, &hi).map_or(false, |c| c == 1) {
                        return Ordering::Equal;
                    }
                }
            }
        }
    }
    // distinct numbers: refine until the intervals separate; intervals that
    // merely touch at one endpoint already order strictly, since x ≤ t ≤ y
    // with x ≠ y forces x < y
    loop {
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        if a.width() >= b.width() {
            a.refine();
        } else {
            b.refine();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sturm::isolate_roots;
    use crate::exact::rat_frac;

    fn sqrt2() -> RealAlgebraic {
        RealAlgebraic::from_isolating(Poly::from_i64(&[-2, 0, 1]), rat(1), rat(2)).unwrap()
    }

    #[test]
    fn reflexive_equal() {
        let x = sqrt2();
        assert_eq!(ra_compare(&x, &x), Ordering::Equal);
    }

    #[test]
    fn sqrt2_vs_three_halves() {
        let x = sqrt2();
        let y = RealAlgebraic::from_rat(&rat_frac(3, 2));
        assert_eq!(ra_compare(&x, &y), Ordering::Less);
        assert_eq!(ra_compare(&y, &x), Ordering::Greater);
    }

    #[test]
    fn equal_across_polynomials() {
        // root of X²−2 in (1,2) equals root of X⁴−4 in (1,2)
        let x = sqrt2();
        let y =
            RealAlgebraic::from_isolating(Poly::from_i64(&[-4, 0, 0, 0, 1]), rat(1), rat(2))
                .unwrap();
        assert_eq!(ra_compare(&x, &y), Ordering::Equal);
    }

    #[test]
    fn distinct_with_overlapping_intervals() {
        // √2 and √3 both isolated in (1, 2)
        let x = sqrt2();
        let y = RealAlgebraic::from_isolating(Poly::from_i64(&[-3, 0, 1]), rat(1), rat(2))
            .unwrap();
        assert_eq!(ra_compare(&x, &y), Ordering::Less);
    }

    #[test]
    fn negative_root() {
        let x = RealAlgebraic::from_isolating(Poly::from_i64(&[-2, 0, 1]), rat(-2), rat(-1))
            .unwrap();
        assert_eq!(ra_compare(&x, &sqrt2()), Ordering::Less);
    }

    #[test]
    fn refinement_narrows() {
        let mut x = sqrt2();
        x.refine_to(&rat_frac(1, 1_000_000));
        assert!(x.width() < rat_frac(1, 1_000_000));
        // still brackets √2: lo² < 2 < hi²
        assert!(&x.lo * &x.lo < rat(2));
        assert!(&x.hi * &x.hi > rat(2));
    }

    #[test]
    fn rational_point_collapse() {
        let mut x =
            RealAlgebraic::from_isolating(Poly::from_i64(&[-1, 0, 1]), rat_frac(1, 2), rat(2))
                .unwrap();
        for _ in 0..64 {
            x.refine();
        }
        assert_eq!(x.as_rat(), Some(rat(1)));
    }

    #[test]
    fn rejects_bad_isolation() {
        // (−2, 2) holds both roots of X²−2
        assert!(RealAlgebraic::from_isolating(Poly::from_i64(&[-2, 0, 1]), rat(-2), rat(2))
            .is_err());
    }

    #[test]
    fn sorted_isolation_respects_order() {
        let roots = isolate_roots(&Poly::from_i64(&[6, -7, -3, 2])).unwrap();
        for w in roots.windows(2) {
            assert_eq!(ra_compare(&w[0], &w[1]), Ordering::Less);
        }
    }
}
