//! Symplectic linear algebra over ℚ: lagrangian subspaces, the Wall–Maslov
//! ternary index, the cocycle identity, graph lagrangians of symplectic
//! matrices and the Meyer cocycle; plus PSL(2,ℤ) normal forms, the
//! Rademacher function, Dedekind sums and the signature-defect identity.

pub mod dedekind;
pub mod psl2;

pub use dedekind::{
    all_conventions, dedekind_sum, dedekind_sum_cotangent, defect_matrix, sawtooth,
    signature_defect_check, Convention, MatrixBuild, SArg,
};
pub use psl2::{psl2_normal_form, rademacher, PSL2Word, SL2};

use crate::error::{Error, Result};
use crate::exact::{rat, Rat, Scalar};
use crate::forms::{signature, EpsSym};
use crate::linalg::Mat;

/// The standard symplectic space (ℚ^{2n}, Ω) with
/// Ω = [[0, I_n], [−I_n, 0]].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SympSpace {
    pub n: usize,
}

impl SympSpace {
    pub fn gram(&self) -> Mat<Rat> {
        standard_gram(self.n)
    }
}

fn standard_gram(n: usize) -> Mat<Rat> {
    let mut g = Mat::<Rat>::zero(2 * n, 2 * n);
    for i in 0..n {
        *g.at_mut(i, n + i) = rat(1);
        *g.at_mut(n + i, i) = rat(-1);
    }
    g
}

/// The doubled space (ℚ^{2n} ⊕ ℚ^{2n}, Ω ⊕ −Ω) that houses graphs of
/// symplectic maps.
pub fn doubled_gram(n: usize) -> Mat<Rat> {
    standard_gram(n).direct_sum(&standard_gram(n).neg())
}

/// A lagrangian subspace of a nonsingular skew form: a half-dimensional
/// subspace on which the form vanishes identically. The basis is kept in
/// column-echelon canonical form, so equality is structural.
#[derive(Clone, PartialEq, Debug)]
pub struct Lagrangian {
    pub gram: Mat<Rat>,
    pub basis: Mat<Rat>,
}

impl Lagrangian {
    pub fn new(gram: Mat<Rat>, basis: Mat<Rat>) -> Result<Lagrangian> {
        if !gram.is_square() || gram.rows % 2 != 0 {
            return Err(Error::Dimension(
                "ambient form must be square of even dimension".into(),
            ));
        }
        let m = gram.rows / 2;
        if gram.transpose() != gram.neg() {
            return Err(Error::NotSymmetric(-1));
        }
        if Scalar::is_zero(&gram.det()) {
            return Err(Error::Singular);
        }
        if basis.rows != 2 * m || basis.cols != m {
            return Err(Error::Dimension(
                "lagrangian basis must be 2n×n".into(),
            ));
        }
        if basis.rank() != m {
            return Err(Error::Precondition(
                "lagrangian basis must have full column rank".into(),
            ));
        }
        let pairing = basis.transpose().mul(&gram).mul(&basis);
        if pairing.a.iter().any(|x| !Scalar::is_zero(x)) {
            return Err(Error::Precondition(
                "the skew form does not vanish on the subspace".into(),
            ));
        }
        Ok(Lagrangian {
            gram,
            basis: basis.column_echelon(),
        })
    }

    /// Lagrangian of the standard (ℚ^{2n}, Ω).
    pub fn standard(n: usize, basis: Mat<Rat>) -> Result<Lagrangian> {
        Lagrangian::new(standard_gram(n), basis)
    }

    /// Half-dimension n of the ambient space.
    pub fn half_dim(&self) -> usize {
        self.gram.rows / 2
    }
}

/// The Wall form of a triple of lagrangians in (H, θ): the restriction of
/// (u, v) ↦ θ(u₁, v₂) to the kernel of L₁ ⊕ L₂ ⊕ L₃ → H. For skew θ this is
/// a symmetric form.
pub fn wall_form(l1: &Lagrangian, l2: &Lagrangian, l3: &Lagrangian) -> Result<EpsSym<Rat>> {
    if l1.gram != l2.gram || l1.gram != l3.gram {
        return Err(Error::Precondition(
            "lagrangians live in different ambient spaces".into(),
        ));
    }
    let j = l1.basis.hcat(&l2.basis).hcat(&l3.basis);
    let w = j.kernel(); // columns (u1, u2, u3) with v1 + v2 + v3 = 0
    let d1 = l1.basis.cols;
    let d2 = l2.basis.cols;
    let k = w.cols;
    // components v1 = B1·u1 and v2 = B2·u2 of each kernel vector
    let mut u1 = Mat::<Rat>::zero(d1, k);
    let mut u2 = Mat::<Rat>::zero(d2, k);
    for c in 0..k {
        for r in 0..d1 {
            *u1.at_mut(r, c) = w.at(r, c).clone();
        }
        for r in 0..d2 {
            *u2.at_mut(r, c) = w.at(d1 + r, c).clone();
        }
    }
    let v1 = l1.basis.mul(&u1);
    let v2 = l2.basis.mul(&u2);
    let psi = v1.transpose().mul(&l1.gram).mul(&v2);
    EpsSym::symmetric(psi)
}

/// Wall–Maslov ternary index: the signature of the Wall form.
pub fn wall_maslov(l1: &Lagrangian, l2: &Lagrangian, l3: &Lagrangian) -> Result<i64> {
    Ok(signature(&wall_form(l1, l2, l3)?)?.tau())
}

/// The coboundary that the Wall–Maslov index must kill:
/// W(234) − W(134) + W(124) − W(123). Always 0.
pub fn cocycle_defect(
    l1: &Lagrangian,
    l2: &Lagrangian,
    l3: &Lagrangian,
    l4: &Lagrangian,
) -> Result<i64> {
    Ok(wall_maslov(l2, l3, l4)? - wall_maslov(l1, l3, l4)?
        + wall_maslov(l1, l2, l4)?
        - wall_maslov(l1, l2, l3)?)
}

/// True when gᵀ·Ω·g = Ω for the standard Ω.
pub fn is_symplectic(g: &Mat<Rat>) -> bool {
    if !g.is_square() || g.rows % 2 != 0 {
        return false;
    }
    let omega = standard_gram(g.rows / 2);
    g.transpose().mul(&omega).mul(g) == omega
}

/// The graph {(x, g·x)} of a symplectic map as a lagrangian of the doubled
/// space (ℚ^{2n} ⊕ ℚ^{2n}, Ω ⊕ −Ω).
pub fn graph_lagrangian(g: &Mat<Rat>) -> Result<Lagrangian> {
    if !is_symplectic(g) {
        return Err(Error::NotSymplectic);
    }
    let n = g.rows / 2;
    let basis = Mat::<Rat>::identity(2 * n).vcat(g);
    Lagrangian::new(doubled_gram(n), basis)
}

/// Meyer cocycle: the Wall–Maslov index of the three graph lagrangians in
/// the doubled space.
pub fn meyer(g0: &Mat<Rat>, g1: &Mat<Rat>, g2: &Mat<Rat>) -> Result<i64> {
    if g0.rows != g1.rows || g0.rows != g2.rows {
        return Err(Error::Dimension("symplectic sizes differ".into()));
    }
    wall_maslov(
        &graph_lagrangian(g0)?,
        &graph_lagrangian(g1)?,
        &graph_lagrangian(g2)?,
    )
}

/// Non-homogeneous Meyer 2-cocycle m(A, B) = Meyer(1, A, A·B).
pub fn meyer_nonhomogeneous(a: &Mat<Rat>, b: &Mat<Rat>) -> Result<i64> {
    let id = Mat::<Rat>::identity(a.rows);
    meyer(&id, a, &a.mul(b))
}
