//! Integrals, cointegrals, and the endomorphisms built from them.
//!
//! For a finite-dimensional Hopf algebra `A` with basis `a_0 … a_{n-1}`:
//!
//! - a **left integral** is an element `Λ` with `a·Λ = ε(a)·Λ` for all `a`;
//!   a **right integral** satisfies `Λ·a = ε(a)·Λ`.  Both spaces are
//!   computed here as exact nullspaces of linear systems in the structure
//!   constants.
//! - a **cointegral** is an integral of the dual Hopf algebra `A*`: a
//!   functional `λ` with `p·λ = p(1)·λ` (left) or `λ·p = p(1)·λ` (right),
//!   where the product of functionals is dual to the coproduct.  In
//!   Sweedler notation the right-cointegral condition reads
//!   `λ(a_(1))·a_(2) = λ(a)·1`.
//!
//! The module exposes two distinguished endomorphisms of `A`, each defined
//! directly by a closed quadruple sum over structure constants:
//!
//! - [`kuperberg_q`]: `Q[i][j] = Σ m[l][w][j]·Δ[l][i][v]·s[u][v]·s[w][u]`,
//!   which satisfies `p(Q(a)) = tr(r(a)∘s²∘r(p))` and equals the rank-one
//!   map `λ ⊗ Λ` for the normalized right-cointegral/left-integral pair;
//! - [`kuperberg_p`]: `P[i][j] = Σ m[l][w][j]·s[u][l]·Δ[u][v][i]·s[w][v]`,
//!   the unique endomorphism with `P(a_(1)) ⊗ a_(2) = P(a) ⊗ 1` and
//!   `P(a)·b = ε(b)·P(a)` of trace one; it factors as `λ ⊗ Λ` for a
//!   normalized right-cointegral/right-integral pair.
//!
//! Around these sit the trace map [`cal_e_apply`] (`E`), the `•` actions of
//! elements and functionals on endomorphisms, the four ladder maps on
//! `A ⊗ A` with their antipode-twisted inverses, the Frobenius map
//! `a ↦ λ ↼ s(a)` identifying `A` with `A*`, and reconstruction of the
//! antipode from an integral pair.  [`check_suite`] runs every identity the
//! engine knows about and reports one pass/fail entry per identity.

use crate::endo::{
    self, fun_hit_left, fun_hit_right, left_hit, left_mul, partial_trace_left, right_hit,
    right_mul,
};
use crate::hopf::{dot, HopfAlgebra};
use crate::matrix::Mat;
use crate::par;
use crate::scalar::Scalar;

mod suite;

pub use suite::check_suite;

/// Which side an integral condition is imposed on.
///
/// `Left` means `a·Λ = ε(a)·Λ`; `Right` means `Λ·a = ε(a)·Λ`.  For
/// cointegrals the same convention applies inside the dual algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Solves `x·M = ε(x)·M` (or the mirrored condition) for `M` running over a
/// generic associative product given as `mult(l, i, j)` = coefficient of
/// basis element `l` in `a_i·a_j`.  Returns a canonical echelon basis of the
/// solution space, each vector scaled so its first nonzero entry is one.
fn integral_nullspace(
    h: &HopfAlgebra,
    side: Side,
    mult: impl Fn(usize, usize, usize) -> Scalar,
    counit: &[Scalar],
) -> Vec<Vec<Scalar>> {
    let n = h.dim();
    let field = h.field();
    // Unknown vector Λ; one row per (acting basis element j, output slot i):
    //   Σ_k mult(i, j, k)·Λ[k] - ε(a_j)·Λ[i] = 0   (left)
    //   Σ_k mult(i, k, j)·Λ[k] - ε(a_j)·Λ[i] = 0   (right)
    let rows = Mat::from_fn(field, n * n, n, |r, k| {
        let j = r / n;
        let i = r % n;
        let prod = match side {
            Side::Left => mult(i, j, k),
            Side::Right => mult(i, k, j),
        };
        if i == k {
            prod.sub(&counit[j])
        } else {
            prod
        }
    });
    rows.nullspace()
}

/// Basis of the space of left or right integrals of `A` (elements `Λ` with
/// `a·Λ = ε(a)·Λ`, respectively `Λ·a = ε(a)·Λ`).  For a finite-dimensional
/// Hopf algebra each space is one-dimensional; the basis vector is
/// normalized so its first nonzero coordinate is one.
pub fn integral_space(h: &HopfAlgebra, side: Side) -> Vec<Vec<Scalar>> {
    integral_nullspace(h, side, |l, i, j| h.m().get(l, i, j).clone(), h.counit())
}

/// Basis of the space of left or right cointegrals: integrals of the dual
/// algebra, whose multiplication tensor is the coproduct of `A` and whose
/// counit is evaluation at `1`.
pub fn dual_integral_space(h: &HopfAlgebra, side: Side) -> Vec<Vec<Scalar>> {
    integral_nullspace(h, side, |l, i, j| h.delta().get(l, i, j).clone(), h.unit())
}

/// Rescales `lambda` so that `lambda(big_lambda) = 1`, returning the
/// normalized pair.  Returns `None` when the pairing vanishes (in which
/// case no rescaling can normalize it).
pub fn normalize_pair(
    h: &HopfAlgebra,
    lambda: &[Scalar],
    big_lambda: &[Scalar],
) -> Option<(Vec<Scalar>, Vec<Scalar>)> {
    let pairing = dot(h.field(), lambda, big_lambda);
    let inv = pairing.inv().ok()?;
    let scaled = lambda.iter().map(|c| c.mul(&inv)).collect();
    Some((scaled, big_lambda.to_vec()))
}

/// The endomorphism `Q` of `A` given in coordinates by the quadruple sum
/// `Q[i][j] = Σ_{l,u,v,w} m[l][w][j] · Δ[l][i][v] · s[u][v] · s[w][u]`.
///
/// Writing `r(a)` for right multiplication and `r(p)` for the right harpoon
/// action of a functional, `Q` satisfies `p(Q(a)) = tr(r(a) ∘ s² ∘ r(p))`
/// (see [`q_from_traces`]) and equals `λ ⊗ Λ` for the normalized pair of a
/// right cointegral `λ` and left integral `Λ` with `λ(Λ) = 1`.
pub fn kuperberg_q(h: &HopfAlgebra) -> Mat {
    let n = h.dim();
    let field = h.field();
    let s = h.s();
    let cols: Vec<Vec<Scalar>> = par::map_range(n, |j| {
        let mut col = vec![field.zero(); n];
        for w in 0..n {
            for (l, cm) in h.m_products(w, j) {
                for (i, v, cd) in h.delta_terms(*l) {
                    let mut su_sw = field.zero();
                    for u in 0..n {
                        su_sw = su_sw.add(&s.get(u, *v).mul(s.get(w, u)));
                    }
                    col[*i] = col[*i].add(&cm.mul(cd).mul(&su_sw));
                }
            }
        }
        col
    });
    Mat::from_fn(field, n, n, |i, j| cols[j][i].clone())
}

/// The endomorphism `P` of `A` given in coordinates by the quadruple sum
/// `P[i][j] = Σ_{l,u,v,w} m[l][w][j] · s[u][l] · Δ[u][v][i] · s[w][v]`.
///
/// `P` is the unique endomorphism satisfying `P(a_(1)) ⊗ a_(2) = P(a) ⊗ 1`
/// and `P(a)·b = ε(b)·P(a)` with `tr(P) = 1`; it factors as `λ ⊗ Λ` for a
/// right cointegral `λ` and a right integral `Λ` with `λ(Λ) = 1`.
pub fn kuperberg_p(h: &HopfAlgebra) -> Mat {
    let n = h.dim();
    let field = h.field();
    let s = h.s();
    let cols: Vec<Vec<Scalar>> = par::map_range(n, |j| {
        let mut col = vec![field.zero(); n];
        for w in 0..n {
            for (l, cm) in h.m_products(w, j) {
                for u in 0..n {
                    let sul = s.get(u, *l);
                    if sul.is_zero() {
                        continue;
                    }
                    for (v, i, cd) in h.delta_terms(u) {
                        let swv = s.get(w, *v);
                        if swv.is_zero() {
                            continue;
                        }
                        col[*i] = col[*i].add(&cm.mul(sul).mul(cd).mul(swv));
                    }
                }
            }
        }
        col
    });
    Mat::from_fn(field, n, n, |i, j| cols[j][i].clone())
}

/// `Q` computed entrywise from traces: `Q[i][j] = tr(r(a_j) ∘ s² ∘ r(α_i))`
/// where `α_i` is the dual basis functional.  Independent of
/// [`kuperberg_q`]; the two must agree entrywise.
pub fn q_from_traces(h: &HopfAlgebra) -> Mat {
    let n = h.dim();
    let field = h.field();
    let s2 = h.s().mul(h.s());
    let r_elt: Vec<Mat> = (0..n).map(|j| right_mul(h, &h.basis_vec(j))).collect();
    let r_fun: Vec<Mat> = (0..n)
        .map(|i| right_hit(h, &h.basis_vec(i)))
        .collect();
    Mat::from_fn(field, n, n, |i, j| {
        r_elt[j].mul(&s2).mul(&r_fun[i]).trace()
    })
}

/// `P` computed entrywise from traces: `P[i][j] = tr(s ∘ l(α_i) ∘ s ∘ r(a_j))`
/// where `l(α_i)` is the left harpoon action.  Independent of
/// [`kuperberg_p`]; the two must agree entrywise.
pub fn p_from_traces(h: &HopfAlgebra) -> Mat {
    let n = h.dim();
    let field = h.field();
    let s = h.s();
    Mat::from_fn(field, n, n, |i, j| {
        let l_fun = left_hit(h, &h.basis_vec(i));
        let r_elt = right_mul(h, &h.basis_vec(j));
        s.mul(&l_fun).mul(s).mul(&r_elt).trace()
    })
}

/// A second trace form of `P`: `P[i][j] = tr(l(s(a_j)) ∘ s² ∘ l(α_i))`,
/// obtained from [`p_from_traces`] by cycling the product and commuting the
/// antipode across the two actions.
pub fn p_from_traces_alt(h: &HopfAlgebra) -> Mat {
    let n = h.dim();
    let field = h.field();
    let s2 = h.s().mul(h.s());
    Mat::from_fn(field, n, n, |i, j| {
        let l_elt = left_mul(h, &h.s().col(j));
        let l_fun = left_hit(h, &h.basis_vec(i));
        l_elt.mul(&s2).mul(&l_fun).trace()
    })
}

/// The trace map `E` on endomorphisms of `A`, defined by
/// `p(E(f)(a)) = tr(l(a) ∘ f ∘ r(p))`; in coordinates
/// `E(f)[i][j] = tr(l(a_j) ∘ f ∘ r(α_i))`.
///
/// `E` is a linear automorphism of `End(A)` (see [`cal_e_matrix`]) sending
/// the rank-one map `p ⊗ a` to `l(p) ∘ r(a)` and intertwining the `•`
/// actions: `r(a) ∘ E(f) = E(f • a)` and `E(f) ∘ l(p) = E(f • p)`.
pub fn cal_e_apply(h: &HopfAlgebra, f: &Mat) -> Mat {
    let n = h.dim();
    let field = h.field();
    let out_flat: Vec<Scalar> = cal_e_matrix(h).matvec(&f.vectorize());
    Mat::from_fn(field, n, n, |i, j| out_flat[i * n + j].clone())
}

/// The trace map `E` as an `n² × n²` matrix acting on row-major vectorized
/// endomorphisms: `vec(E(f)) = cal_e_matrix(h) · vec(f)`.
///
/// Entry `[(i,j)][(u,v)]` is `(r(α_i)·l(a_j))[v][u]`, which follows from
/// `tr(L·F·R) = Σ_{u,v} F[u][v]·(R·L)[v][u]`.
pub fn cal_e_matrix(h: &HopfAlgebra) -> Mat {
    let n = h.dim();
    let field = h.field();
    let l_elt: Vec<Mat> = (0..n).map(|j| left_mul(h, &h.basis_vec(j))).collect();
    let r_fun: Vec<Mat> = (0..n).map(|i| right_hit(h, &h.basis_vec(i))).collect();
    let blocks: Vec<Mat> = par::map_range(n * n, |row| {
        let (i, j) = (row / n, row % n);
        r_fun[i].mul(&l_elt[j])
    });
    Mat::from_fn(field, n * n, n * n, |row, colix| {
        let (u, v) = (colix / n, colix % n);
        blocks[row].get(v, u).clone()
    })
}

/// The right `•` action of an element on an endomorphism:
/// `f • a = Σ r(a_(1)) ∘ f ∘ r(s(a_(2)))`.
pub fn bullet_elem(h: &HopfAlgebra, f: &Mat, a: &[Scalar]) -> Mat {
    let n = h.dim();
    let field = h.field();
    let da = h.comultiply(a);
    let mut out = Mat::zeros(field, n, n);
    for (flat, c) in da.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (i, k) = (flat / n, flat % n);
        let term = right_mul(h, &h.basis_vec(i))
            .mul(f)
            .mul(&right_mul(h, &h.s().col(k)));
        out = out.add(&term.scale(c));
    }
    out
}

/// The right `•` action of a functional on an endomorphism:
/// `f • p = Σ l(S(p_(2))) ∘ f ∘ l(p_(1))`, where `S(q) = q ∘ s` is the dual
/// antipode and the dual coproduct of `p` is read off the multiplication
/// tensor via `p_(1)(a)·p_(2)(b) = p(a·b)`.
pub fn bullet_fun(h: &HopfAlgebra, f: &Mat, p: &[Scalar]) -> Mat {
    let n = h.dim();
    let field = h.field();
    let dp = endo::dual_coproduct(h, p);
    let mut out = Mat::zeros(field, n, n);
    for (flat, c) in dp.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (i, k) = (flat / n, flat % n);
        let s_pk = endo::dual_antipode(h, &h.basis_vec(k));
        let term = left_hit(h, &s_pk).mul(f).mul(&left_hit(h, &h.basis_vec(i)));
        out = out.add(&term.scale(c));
    }
    out
}

/// The four ladder maps on `A ⊗ A`.  Each splits the second tensor factor
/// with the coproduct, multiplies one leg onto the first factor, and keeps
/// the other leg as the new second factor:
///
/// - `L1: a ⊗ b ↦ a·b_(1) ⊗ b_(2)`
/// - `L2: a ⊗ b ↦ a·b_(2) ⊗ b_(1)`
/// - `L3: a ⊗ b ↦ b_(1)·a ⊗ b_(2)`
/// - `L4: a ⊗ b ↦ b_(2)·a ⊗ b_(1)`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderKind {
    L1,
    L2,
    L3,
    L4,
}

impl LadderKind {
    pub const ALL: [LadderKind; 4] = [
        LadderKind::L1,
        LadderKind::L2,
        LadderKind::L3,
        LadderKind::L4,
    ];

    /// One-based index, matching the order of [`LadderKind::ALL`].
    pub fn index(self) -> usize {
        match self {
            LadderKind::L1 => 1,
            LadderKind::L2 => 2,
            LadderKind::L3 => 3,
            LadderKind::L4 => 4,
        }
    }

    /// Whether the coproduct leg that gets multiplied is the second one.
    fn uses_second_leg(self) -> bool {
        matches!(self, LadderKind::L2 | LadderKind::L4)
    }

    /// Whether the first tensor factor sits on the left of the product.
    fn first_factor_on_left(self) -> bool {
        matches!(self, LadderKind::L1 | LadderKind::L2)
    }
}

/// Builds the matrix of `a ⊗ b ↦ (a·t(leg) ⊗ other)` or
/// `(t(leg)·a ⊗ other)` on the flat basis `a_i ⊗ a_k ↦ i·n + k`, where
/// `t` is an optional linear twist applied to the multiplied coproduct leg.
fn ladder_matrix(h: &HopfAlgebra, kind: LadderKind, twist: Option<&Mat>) -> Mat {
    let n = h.dim();
    let field = h.field();
    let mut out = Mat::zeros(field, n * n, n * n);
    for b in 0..n {
        for (u, v, c) in h.delta_terms(b) {
            let (mult_leg, keep) = if kind.uses_second_leg() {
                (*v, *u)
            } else {
                (*u, *v)
            };
            // Expand the twisted leg as a combination of basis elements.
            let twisted: Vec<(usize, Scalar)> = match twist {
                None => vec![(mult_leg, field.one())],
                Some(t) => (0..n)
                    .filter(|&w| !t.get(w, mult_leg).is_zero())
                    .map(|w| (w, t.get(w, mult_leg).clone()))
                    .collect(),
            };
            for (w, tw) in &twisted {
                for a in 0..n {
                    let (x, y) = if kind.first_factor_on_left() {
                        (a, *w)
                    } else {
                        (*w, a)
                    };
                    for (l, cm) in h.m_products(x, y) {
                        let acc = out.get(l * n + keep, a * n + b).add(&c.mul(tw).mul(cm));
                        out.set(l * n + keep, a * n + b, acc);
                    }
                }
            }
        }
    }
    out
}

/// The matrix of the ladder map `kind` on `A ⊗ A` (flat index `i·n + k`
/// for `a_i ⊗ a_k`).
pub fn ladder(h: &HopfAlgebra, kind: LadderKind) -> Mat {
    ladder_matrix(h, kind, None)
}

/// The explicit two-sided inverse of the ladder map `kind`, built from the
/// same wiring with an antipode twist on the multiplied leg:
///
/// - `L1⁻¹: a ⊗ b ↦ a·s(b_(1)) ⊗ b_(2)`
/// - `L2⁻¹: a ⊗ b ↦ a·s⁻¹(b_(2)) ⊗ b_(1)`
/// - `L3⁻¹: a ⊗ b ↦ s⁻¹(b_(1))·a ⊗ b_(2)`
/// - `L4⁻¹: a ⊗ b ↦ s(b_(2))·a ⊗ b_(1)`
///
/// Which twist inverts which ladder is forced by the two antipode axioms
/// `s(c_(1))·c_(2) = ε(c)·1 = c_(1)·s(c_(2))` and their inverse-antipode
/// mirrors `c_(2)·s⁻¹(c_(1)) = ε(c)·1 = s⁻¹(c_(2))·c_(1)`.
pub fn ladder_inverse(h: &HopfAlgebra, kind: LadderKind) -> Mat {
    let twist = match kind {
        LadderKind::L1 | LadderKind::L4 => h.s(),
        LadderKind::L2 | LadderKind::L3 => h.s_inv(),
    };
    ladder_matrix(h, kind, Some(twist))
}

/// The endomorphism of `A ⊗ A` sending `a ⊗ b ↦ s((s(a·b))_(1)) ⊗ (s(a·b))_(2)`:
/// multiply, apply the antipode, split, and apply the antipode to the first
/// leg again.  Its partial trace over the first factor is exactly
/// [`kuperberg_p`].
pub fn cal_q(h: &HopfAlgebra) -> Mat {
    let n = h.dim();
    let field = h.field();
    let s = h.s();
    let mut out = Mat::zeros(field, n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            for (l, cm) in h.m_products(i, j) {
                for t in 0..n {
                    let st = s.get(t, *l);
                    if st.is_zero() {
                        continue;
                    }
                    for (p, q, cd) in h.delta_terms(t) {
                        for w in 0..n {
                            let sw = s.get(w, *p);
                            if sw.is_zero() {
                                continue;
                            }
                            let acc = out
                                .get(w * n + q, i * n + j)
                                .add(&cm.mul(st).mul(cd).mul(sw));
                            out.set(w * n + q, i * n + j, acc);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Partial trace of [`cal_q`] over the first tensor factor; agrees with
/// [`kuperberg_p`].
pub fn cal_q_partial_trace(h: &HopfAlgebra) -> Mat {
    partial_trace_left(&cal_q(h), h.dim())
}

/// Reconstructs the antipode from a normalized pair of a right cointegral
/// `λ` and a right integral `Λ` with `λ(Λ) = 1`, via
/// `s(a) = Λ ↼ (a ⇀ λ)`.  Returns the matrix whose column `j` is `s(a_j)`.
pub fn antipode_from_pair(h: &HopfAlgebra, lambda: &[Scalar], big_lambda: &[Scalar]) -> Mat {
    let n = h.dim();
    let field = h.field();
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|j| {
            let q = fun_hit_left(h, &h.basis_vec(j), lambda);
            right_hit(h, &q).matvec(big_lambda)
        })
        .collect();
    Mat::from_fn(field, n, n, |i, j| cols[j][i].clone())
}

/// The Frobenius map `a ↦ λ ↼ s(a)` from `A` to `A*` determined by a right
/// cointegral `λ`, returned as the matrix whose column `j` holds the
/// coordinates of the functional image of `a_j`.
///
/// It converts multiplication into the harpoon action and the harpoon
/// action into multiplication of functionals: `f(a·b) = f(b) ↼ s(a)` and
/// `f(a ↼ p) = f(a)·p`.
pub fn frobenius(h: &HopfAlgebra, lambda: &[Scalar]) -> Mat {
    let n = h.dim();
    let field = h.field();
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|j| fun_hit_right(h, lambda, &h.s().col(j)))
        .collect();
    Mat::from_fn(field, n, n, |i, j| cols[j][i].clone())
}

/// Factors a rank-one matrix `f` as `f[i][j] = a[i]·p[j]`, returning
/// `(p, a)` — the functional row and element column — or `None` when `f`
/// is zero or has rank at least two.  The factorization is normalized so
/// that `p`'s first nonzero entry is `1`.
pub fn rank_one_factors(f: &Mat) -> Option<(Vec<Scalar>, Vec<Scalar>)> {
    let mut pivot = None;
    'outer: for i in 0..f.rows() {
        for j in 0..f.cols() {
            if !f.get(i, j).is_zero() {
                pivot = Some((i, j));
                break 'outer;
            }
        }
    }
    let (i0, j0) = pivot?;
    let inv = f.get(i0, j0).inv().ok()?;
    let p: Vec<Scalar> = (0..f.cols()).map(|j| f.get(i0, j).mul(&inv)).collect();
    let a: Vec<Scalar> = (0..f.rows()).map(|i| f.get(i, j0).clone()).collect();
    for i in 0..f.rows() {
        for j in 0..f.cols() {
            if a[i].mul(&p[j]) != *f.get(i, j) {
                return None;
            }
        }
    }
    // Normalize p's first nonzero to 1, compensating in a.
    let k = p.iter().position(|c| !c.is_zero())?;
    let lead = p[k].clone();
    let lead_inv = lead.inv().ok()?;
    let p: Vec<Scalar> = p.iter().map(|c| c.mul(&lead_inv)).collect();
    let a: Vec<Scalar> = a.iter().map(|c| c.mul(&lead)).collect();
    Some((p, a))
}
