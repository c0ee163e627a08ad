//! Endomorphism calculus on a Hopf algebra.
//!
//! An endomorphism of `A` is an `n x n` [`Mat`] acting on coordinate
//! columns, so composition is matrix multiplication: `f.mul(&g)` is
//! `f after g`. An endomorphism of `A (x) A` is an `n^2 x n^2` matrix
//! over the flat index `i * n + j` (left factor major), and a functional
//! is a coordinate row against the same basis.
//!
//! Conventions for the operator constructors, with `a` an element and
//! `p` a functional:
//! - `left_mul(a)`:  `b -> a b`
//! - `right_mul(a)`: `b -> b a`
//! - `left_hit(p)`:  `a -> p -> a = a_(1) p(a_(2))`
//! - `right_hit(p)`: `a -> a <- p = p(a_(1)) a_(2)`
//! - `rank_one(p, a)`: `b -> p(b) a`, whose trace is `p(a)`

use crate::hopf::{dot, HopfAlgebra};
use crate::matrix::Mat;
use crate::par;
use crate::scalar::Scalar;

/// `l(a): b -> a b`.
pub fn left_mul(h: &HopfAlgebra, a: &[Scalar]) -> Mat {
    let n = h.dim();
    let mut out = Mat::zeros(h.field(), n, n);
    for (i, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for j in 0..n {
            for (l, v) in h.m_products(i, j) {
                out.set(*l, j, out.get(*l, j).add(&c.mul(v)));
            }
        }
    }
    out
}

/// `r(a): b -> b a`.
pub fn right_mul(h: &HopfAlgebra, a: &[Scalar]) -> Mat {
    let n = h.dim();
    let mut out = Mat::zeros(h.field(), n, n);
    for (j, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for i in 0..n {
            for (l, v) in h.m_products(i, j) {
                out.set(*l, i, out.get(*l, i).add(&c.mul(v)));
            }
        }
    }
    out
}

/// `l(p): a -> p -> a = a_(1) p(a_(2))`.
pub fn left_hit(h: &HopfAlgebra, p: &[Scalar]) -> Mat {
    let n = h.dim();
    let mut out = Mat::zeros(h.field(), n, n);
    for j in 0..n {
        for (i, k, c) in h.delta_terms(j) {
            if !p[*k].is_zero() {
                out.set(*i, j, out.get(*i, j).add(&c.mul(&p[*k])));
            }
        }
    }
    out
}

/// `r(p): a -> a <- p = p(a_(1)) a_(2)`.
pub fn right_hit(h: &HopfAlgebra, p: &[Scalar]) -> Mat {
    let n = h.dim();
    let mut out = Mat::zeros(h.field(), n, n);
    for j in 0..n {
        for (i, k, c) in h.delta_terms(j) {
            if !p[*i].is_zero() {
                out.set(*k, j, out.get(*k, j).add(&c.mul(&p[*i])));
            }
        }
    }
    out
}

/// The functional `a -> p = p o r(a)`, i.e. `b -> p(b a)`.
pub fn fun_hit_left(h: &HopfAlgebra, a: &[Scalar], p: &[Scalar]) -> Vec<Scalar> {
    right_mul(h, a).vecmat(p)
}

/// The functional `p <- a = p o l(a)`, i.e. `b -> p(a b)`.
pub fn fun_hit_right(h: &HopfAlgebra, p: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
    left_mul(h, a).vecmat(p)
}

/// The rank-one endomorphism `p (x) a: b -> p(b) a`.
pub fn rank_one(h: &HopfAlgebra, p: &[Scalar], a: &[Scalar]) -> Mat {
    Mat::from_fn(h.field(), h.dim(), h.dim(), |i, j| a[i].mul(&p[j]))
}

/// Convolution `(f * g)(a) = f(a_(1)) g(a_(2))`.
pub fn convolution(h: &HopfAlgebra, f: &Mat, g: &Mat) -> Mat {
    let n = h.dim();
    let cols = par::map_range(n, |j| {
        let mut col = vec![h.field().zero(); n];
        for (u, v, c) in h.delta_terms(j) {
            let prod = h.multiply(&f.col(*u), &g.col(*v));
            for (i, x) in prod.into_iter().enumerate() {
                if !x.is_zero() {
                    col[i] = col[i].add(&c.mul(&x));
                }
            }
        }
        col
    });
    let mut out = Mat::zeros(h.field(), n, n);
    for (j, col) in cols.into_iter().enumerate() {
        for (i, x) in col.into_iter().enumerate() {
            out.set(i, j, x);
        }
    }
    out
}

/// The unit of the convolution algebra, `eta o eps: a -> eps(a) 1`.
pub fn convolution_unit(h: &HopfAlgebra) -> Mat {
    rank_one(h, h.counit(), h.unit())
}

/// `f (x) g` as an endomorphism of `A (x) A` over the flat index.
pub fn tensor_endo(f: &Mat, g: &Mat) -> Mat {
    let n = f.rows();
    let m = g.rows();
    Mat::from_fn(f.field(), n * m, n * m, |row, col| {
        let (i, j) = (row / m, row % m);
        let (u, v) = (col / m, col % m);
        f.get(i, u).mul(g.get(j, v))
    })
}

/// Trace over the left tensor factor: for `F = sum f_k (x) g_k` acting on
/// `A (x) A`, returns `sum tr(f_k) g_k`.
pub fn partial_trace_left(big: &Mat, n: usize) -> Mat {
    assert_eq!(big.rows(), n * n);
    assert_eq!(big.cols(), n * n);
    Mat::from_fn(big.field(), n, n, |i, j| {
        let mut acc = big.field().zero();
        for k in 0..n {
            acc = acc.add(big.get(k * n + i, k * n + j));
        }
        acc
    })
}

// ---------------------------------------------------------------------
// The dual algebra acting on functionals directly. `A*` multiplies by
// `(p q)(a) = p(a_(1)) q(a_(2))`, comultiplies against the product of `A`
// and has antipode `S(p) = p o s`.

/// Product in `A*`.
pub fn dual_product(h: &HopfAlgebra, p: &[Scalar], q: &[Scalar]) -> Vec<Scalar> {
    let n = h.dim();
    let mut out = vec![h.field().zero(); n];
    for l in 0..n {
        for (i, j, c) in h.delta_terms(l) {
            if !p[*i].is_zero() && !q[*j].is_zero() {
                out[l] = out[l].add(&c.mul(&p[*i]).mul(&q[*j]));
            }
        }
    }
    out
}

/// Coproduct in `A*`, flattened as `i * n + j` for `alpha_i (x) alpha_j`:
/// the coefficient is `p` evaluated on `a_i a_j`.
pub fn dual_coproduct(h: &HopfAlgebra, p: &[Scalar]) -> Vec<Scalar> {
    let n = h.dim();
    let mut out = vec![h.field().zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = h.field().zero();
            for (l, c) in h.m_products(i, j) {
                if !p[*l].is_zero() {
                    acc = acc.add(&c.mul(&p[*l]));
                }
            }
            out[i * n + j] = acc;
        }
    }
    out
}

/// Antipode of `A*`: `S(p) = p o s`.
pub fn dual_antipode(h: &HopfAlgebra, p: &[Scalar]) -> Vec<Scalar> {
    h.s().vecmat(p)
}

/// Evaluation pairing `p(a)`.
pub fn pair(h: &HopfAlgebra, p: &[Scalar], a: &[Scalar]) -> Scalar {
    dot(h.field(), p, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf;
    use crate::scalar::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    fn sweedler() -> HopfAlgebra {
        hopf::sweedler(q()).unwrap()
    }

    #[test]
    fn left_and_right_multiplication_on_sweedler() {
        let h = sweedler();
        let (one, x, g, gx) = (0usize, 1usize, 2usize, 3usize);
        // l(g) permutes the basis: 1 -> g, x -> gx, g -> 1, gx -> x.
        let lg = left_mul(&h, &h.basis_vec(g));
        for (from, to) in [(one, g), (x, gx), (g, one), (gx, x)] {
            assert_eq!(lg.matvec(&h.basis_vec(from)), h.basis_vec(to));
        }
        // r(x): 1 -> x, x -> 0, g -> gx (g x), gx -> 0... note gx * x = g x x = 0.
        let rx = right_mul(&h, &h.basis_vec(x));
        assert_eq!(rx.matvec(&h.basis_vec(one)), h.basis_vec(x));
        assert!(rx.matvec(&h.basis_vec(x)).iter().all(Scalar::is_zero));
        assert_eq!(rx.matvec(&h.basis_vec(g)), h.basis_vec(gx));
        // l and r commute: (a b) c = a (b c).
        let la = left_mul(&h, &h.basis_vec(gx));
        assert_eq!(la.mul(&rx), rx.mul(&la));
    }

    #[test]
    fn hits_match_coproduct_terms_on_sweedler() {
        let h = sweedler();
        let (one, x, g, gx) = (0usize, 1usize, 2usize, 3usize);
        // Delta(gx) = gx (x) g + 1 (x) gx. With p = alpha_g:
        // p -> gx = gx * p(g) + 1 * p(gx) = gx.
        let p = h.basis_vec(g); // alpha_g as a row
        let lh = left_hit(&h, &p);
        assert_eq!(lh.matvec(&h.basis_vec(gx)), h.basis_vec(gx));
        // gx <- p = p(gx) g + p(1) gx = 0.
        let rh = right_hit(&h, &p);
        assert!(rh.matvec(&h.basis_vec(gx)).iter().all(Scalar::is_zero));
        // With p = alpha_1: p -> gx = gx alpha_1(g) + 1 alpha_1(gx) = 0,
        // while gx <- alpha_1 = alpha_1(gx) g + alpha_1(1) gx = gx.
        let p1 = h.basis_vec(one);
        assert!(left_hit(&h, &p1).matvec(&h.basis_vec(gx)).iter().all(Scalar::is_zero));
        assert_eq!(right_hit(&h, &p1).matvec(&h.basis_vec(gx)), h.basis_vec(gx));
        // Delta(x) = x (x) 1 + g (x) x: x <- alpha_g = alpha_g(g) x = x.
        assert_eq!(right_hit(&h, &p).matvec(&h.basis_vec(x)), h.basis_vec(x));
    }

    #[test]
    fn functional_hits_evaluate_where_expected() {
        let h = sweedler();
        let (_, x, g, gx) = (0usize, 1usize, 2usize, 3usize);
        // (g -> alpha_gx)(b) = alpha_gx(b g): b = x gives alpha_gx(xg) = -1.
        let p = h.basis_vec(gx);
        let moved = fun_hit_left(&h, &h.basis_vec(g), &p);
        assert_eq!(pair(&h, &moved, &h.basis_vec(x)), q().from_i64(-1));
        // (alpha_gx <- g)(b) = alpha_gx(g b): b = x gives 1.
        let moved = fun_hit_right(&h, &p, &h.basis_vec(g));
        assert_eq!(pair(&h, &moved, &h.basis_vec(x)), q().one());
    }

    #[test]
    fn convolution_of_identities_on_c2() {
        let h = hopf::group(q(), "c2").unwrap();
        let id = Mat::identity(q(), 2);
        // (1 * 1)(b) = b_(1) b_(2): e -> e, a -> a a = e.
        let sq = convolution(&h, &id, &id);
        assert_eq!(sq, Mat::from_rows(q(), vec![
            vec![q().one(), q().one()],
            vec![q().zero(), q().zero()],
        ]));
    }

    #[test]
    fn antipode_is_convolution_inverse_of_identity() {
        for h in [sweedler(), hopf::group(q(), "s3").unwrap()] {
            let id = Mat::identity(q(), h.dim());
            let unit = convolution_unit(&h);
            assert_eq!(convolution(&h, h.s(), &id), unit);
            assert_eq!(convolution(&h, &id, h.s()), unit);
        }
    }

    #[test]
    fn rank_one_trace_is_the_pairing() {
        let h = sweedler();
        // tr(p (x) a) = p(a) with p = 3 alpha_x + alpha_g, a = 2x + 5g.
        let mut p = vec![q().zero(); 4];
        p[1] = q().from_i64(3);
        p[2] = q().one();
        let mut a = vec![q().zero(); 4];
        a[1] = q().from_i64(2);
        a[2] = q().from_i64(5);
        let f = rank_one(&h, &p, &a);
        assert_eq!(f.trace(), q().from_i64(11));
        assert_eq!(f.trace(), pair(&h, &p, &a));
        assert_eq!(f.rank(), 1);
        // (p (x) a)(b) = p(b) a.
        assert_eq!(f.matvec(&h.basis_vec(1)), {
            let mut v = vec![q().zero(); 4];
            v[1] = q().from_i64(6);
            v[2] = q().from_i64(15);
            v
        });
    }

    #[test]
    fn composing_rank_ones_multiplies_through_the_pairing() {
        // l(b) o (p (x) a) o r(q) = q p (x) b a, evaluated entrywise.
        let h = sweedler();
        let rng = |k: u64| (k.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407) >> 33) % 7;
        let vec_of = |seed: u64| -> Vec<Scalar> {
            (0..4).map(|i| q().from_i64(rng(seed + i as u64) as i64 - 3)).collect()
        };
        let (p, a, b, qq) = (vec_of(1), vec_of(40), vec_of(80), vec_of(120));
        let lhs = left_mul(&h, &b).mul(&rank_one(&h, &p, &a)).mul(&right_hit(&h, &qq));
        let rhs = rank_one(&h, &dual_product(&h, &qq, &p), &h.multiply(&b, &a));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_endo_and_partial_trace() {
        let f = Mat::from_rows(q(), vec![
            vec![q().from_i64(1), q().from_i64(2)],
            vec![q().from_i64(3), q().from_i64(4)],
        ]);
        let g = Mat::from_rows(q(), vec![
            vec![q().from_i64(5), q().from_i64(6)],
            vec![q().from_i64(7), q().from_i64(8)],
        ]);
        let big = tensor_endo(&f, &g);
        assert_eq!(big.rows(), 4);
        // (f (x) g)(e0 (x) e1) = f(e0) (x) g(e1): flat input 0*2+1 = 1.
        let mut e01 = vec![q().zero(); 4];
        e01[1] = q().one();
        let image = big.matvec(&e01);
        // f(e0) = (1,3), g(e1) = (6,8): tensor = (6,8,18,24) flat.
        let expect: Vec<Scalar> = [6, 8, 18, 24].iter().map(|&k| q().from_i64(k)).collect();
        assert_eq!(image, expect);
        // Partial trace over the left factor gives tr(f) g = 5 g.
        assert_eq!(partial_trace_left(&big, 2), g.scale(&q().from_i64(5)));
        // And composing tensors respects factors: (f (x) g)(f (x) g) = f^2 (x) g^2.
        assert_eq!(big.mul(&big), tensor_endo(&f.mul(&f), &g.mul(&g)));
    }

    #[test]
    fn dual_operations_match_sweedler_structure() {
        let h = sweedler();
        let (one, x, g, gx) = (0usize, 1usize, 2usize, 3usize);
        // alpha_x alpha_g evaluates on Delta-diagonal terms: (alpha_x alpha_g)(c)
        // = sum alpha_x(c_(1)) alpha_g(c_(2)). Delta(x) = x (x) 1 + g (x) x has
        // no x (x) g term, Delta(gx) = gx (x) g + 1 (x) gx has none either.
        let prod = dual_product(&h, &h.basis_vec(x), &h.basis_vec(g));
        assert!(prod.iter().all(Scalar::is_zero));
        // (alpha_x alpha_1)(x) = alpha_x(x) alpha_1(1) = 1 from Delta(x).
        let prod = dual_product(&h, &h.basis_vec(x), &h.basis_vec(one));
        assert_eq!(prod, h.basis_vec(x));
        // Dual coproduct of alpha_gx picks out products equal to gx.
        let cop = dual_coproduct(&h, &h.basis_vec(gx));
        // gx arises as 1*gx, gx*1, g*x and x*g (with -1).
        let mut expect = vec![q().zero(); 16];
        expect[one * 4 + gx] = q().one();
        expect[gx * 4 + one] = q().one();
        expect[g * 4 + x] = q().one();
        expect[x * 4 + g] = q().from_i64(-1);
        assert_eq!(cop, expect);
        // S(alpha_x) = alpha_x o s evaluates to 1 on gx (since s(gx) = x)
        // and to 0 elsewhere (s(x) = -gx has no x component).
        let sp = dual_antipode(&h, &h.basis_vec(x));
        let mut expect = vec![q().zero(); 4];
        expect[gx] = q().one();
        assert_eq!(sp, expect);
    }

    #[test]
    fn duality_against_explicit_dual_algebra() {
        // dual_product/dual_coproduct/dual_antipode agree with the same
        // operations computed inside h.dual().
        let h = hopf::taft(FieldSpec::prime(7).unwrap(), 3).unwrap();
        let d = h.dual();
        for (i, j) in [(0, 5), (3, 7), (8, 8), (2, 4)] {
            let via_ops = dual_product(&h, &h.basis_vec(i), &h.basis_vec(j));
            let via_dual = d.multiply(&d.basis_vec(i), &d.basis_vec(j));
            assert_eq!(via_ops, via_dual);
        }
        for l in 0..9 {
            assert_eq!(dual_coproduct(&h, &h.basis_vec(l)), d.comultiply(&d.basis_vec(l)));
            assert_eq!(dual_antipode(&h, &h.basis_vec(l)), d.apply_antipode(&d.basis_vec(l)));
        }
    }
}
