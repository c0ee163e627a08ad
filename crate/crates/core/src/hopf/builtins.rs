//! Built-in example algebras: group algebras of small groups, the
//! four-dimensional Sweedler algebra and the Taft family.
//!
//! Builtin names accepted by [`builtin`]: `trivial`, `sweedler`,
//! `taft:<n>` and `group:<g>` with `<g>` one of `c2`, `c4`, `c2c2`, `c8`,
//! `s3`, `d4`, `q8`.

use super::{AlgebraData, AlgebraError, HopfAlgebra, Tensor3};
use crate::matrix::Mat;
use crate::scalar::{FieldSpec, Scalar};

/// Names understood by [`builtin`], for help text.
pub fn builtin_names() -> Vec<&'static str> {
    vec![
        "trivial",
        "sweedler",
        "taft:<n>",
        "group:c2",
        "group:c4",
        "group:c2c2",
        "group:c8",
        "group:s3",
        "group:d4",
        "group:q8",
    ]
}

/// Constructs a builtin algebra by name over the given field.
pub fn builtin(name: &str, field: FieldSpec) -> Result<HopfAlgebra, AlgebraError> {
    if name == "trivial" {
        return Ok(trivial(field));
    }
    if name == "sweedler" {
        return sweedler(field);
    }
    if let Some(arg) = name.strip_prefix("taft:") {
        let nt: usize = arg.parse().map_err(|_| AlgebraError::BuiltinParams {
            name: "taft".into(),
            reason: format!("size {arg:?} is not a number"),
        })?;
        return taft(field, nt);
    }
    if let Some(g) = name.strip_prefix("group:") {
        return group(field, g);
    }
    Err(AlgebraError::UnknownBuiltin(name.to_string()))
}

/// The one-dimensional algebra: every structure map is the identity.
pub fn trivial(field: FieldSpec) -> HopfAlgebra {
    let mut m = Tensor3::zeros(field, 1);
    m.set(0, 0, 0, field.one());
    let mut delta = Tensor3::zeros(field, 1);
    delta.set(0, 0, 0, field.one());
    HopfAlgebra::new(AlgebraData {
        name: "trivial".into(),
        field,
        basis: vec!["1".into()],
        m,
        delta,
        s: Mat::identity(field, 1),
        unit: vec![field.one()],
        counit: vec![field.one()],
    })
    .expect("trivial algebra satisfies the axioms")
}

// ---------------------------------------------------------------------
// Group algebras

struct GroupTable {
    labels: Vec<String>,
    /// `table[i][j]` is the index of `g_i g_j`.
    table: Vec<Vec<usize>>,
}

impl GroupTable {
    fn identity(&self) -> usize {
        let n = self.labels.len();
        (0..n)
            .find(|&e| (0..n).all(|j| self.table[e][j] == j && self.table[j][e] == j))
            .expect("group table has an identity")
    }

    fn inverse(&self, j: usize) -> usize {
        let e = self.identity();
        (0..self.labels.len())
            .find(|&k| self.table[j][k] == e && self.table[k][j] == e)
            .expect("group table has inverses")
    }
}

fn cyclic(k: usize) -> GroupTable {
    let labels = (0..k)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    let table = (0..k).map(|i| (0..k).map(|j| (i + j) % k).collect()).collect();
    GroupTable { labels, table }
}

fn klein_four() -> GroupTable {
    let labels = ["e", "a", "b", "ab"].map(String::from).to_vec();
    // Index as bit pairs: xor is the group law.
    let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
    GroupTable { labels, table }
}

/// Groups generated by a rotation of order `rot` and a flip:
/// `(r^i f^j)(r^k f^l) = r^(i + (-1)^j k) f^(j + l)`. `rot = 3` gives the
/// symmetric group on three letters, `rot = 4` the dihedral group of the
/// square. Index is `j * rot + i`.
fn dihedral_like(rot: usize) -> GroupTable {
    let mut labels = Vec::new();
    for j in 0..2 {
        for i in 0..rot {
            let r = match i {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r^{i}"),
            };
            labels.push(match (r.is_empty(), j) {
                (true, 0) => "e".to_string(),
                (true, 1) => "f".to_string(),
                (false, 0) => r,
                (false, 1) => format!("{r}*f"),
                _ => unreachable!(),
            });
        }
    }
    let idx = |i: usize, j: usize| j * rot + i;
    let mut table = vec![vec![0; 2 * rot]; 2 * rot];
    for i in 0..rot {
        for j in 0..2 {
            for k in 0..rot {
                for l in 0..2 {
                    let exp = if j == 0 { (i + k) % rot } else { (i + rot - k) % rot };
                    table[idx(i, j)][idx(k, l)] = idx(exp, (j + l) % 2);
                }
            }
        }
    }
    GroupTable { labels, table }
}

fn quaternion() -> GroupTable {
    // Elements (sign, letter) with letters e, i, j, k; index = letter*2 + sign.
    let letters = ["1", "i", "j", "k"];
    let mut labels = Vec::new();
    for t in 0..4 {
        labels.push(letters[t].to_string());
        labels.push(format!("-{}", letters[t]));
    }
    // Letter product and the sign it contributes.
    let letter_mul = |u: usize, v: usize| -> (usize, usize) {
        match (u, v) {
            (0, v) => (0, v),
            (u, 0) => (0, u),
            (u, v) if u == v => (1, 0),
            (1, 2) => (0, 3),
            (2, 3) => (0, 1),
            (3, 1) => (0, 2),
            (2, 1) => (1, 3),
            (3, 2) => (1, 1),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        }
    };
    let mut table = vec![vec![0; 8]; 8];
    for u in 0..4 {
        for su in 0..2 {
            for v in 0..4 {
                for sv in 0..2 {
                    let (sign, w) = letter_mul(u, v);
                    table[u * 2 + su][v * 2 + sv] = w * 2 + (su + sv + sign) % 2;
                }
            }
        }
    }
    GroupTable { labels: labels.to_vec(), table }
}

/// Group algebra over the given field: basis indexed by group elements,
/// grouplike coproduct, antipode from inversion.
pub fn group(field: FieldSpec, which: &str) -> Result<HopfAlgebra, AlgebraError> {
    let g = match which {
        "c2" => cyclic(2),
        "c4" => cyclic(4),
        "c8" => cyclic(8),
        "c2c2" => klein_four(),
        "s3" => dihedral_like(3),
        "d4" => dihedral_like(4),
        "q8" => quaternion(),
        other => return Err(AlgebraError::UnknownBuiltin(format!("group:{other}"))),
    };
    let n = g.labels.len();
    let mut m = Tensor3::zeros(field, n);
    let mut delta = Tensor3::zeros(field, n);
    let mut s = Mat::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(g.table[i][j], i, j, field.one());
        }
        delta.set(i, i, i, field.one());
        s.set(g.inverse(i), i, field.one());
    }
    let e = g.identity();
    let mut unit = vec![field.zero(); n];
    unit[e] = field.one();
    HopfAlgebra::new(AlgebraData {
        name: format!("group:{which}"),
        field,
        basis: g.labels,
        m,
        delta,
        s,
        unit,
        counit: vec![field.one(); n],
    })
    .map_err(|err| match err {
        AlgebraError::AxiomFailure(msg) => {
            AlgebraError::Invalid(format!("group table for {which} is inconsistent: {msg}"))
        }
        other => other,
    })
}

// ---------------------------------------------------------------------
// Taft algebras

/// Multiplication of coordinate columns against a bare product tensor
/// (used while an algebra is still being assembled).
fn mul_in(m: &Tensor3, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let n = m.n();
    let field = x[0].field();
    let mut out = vec![field.zero(); n];
    for (i, xv) in x.iter().enumerate() {
        if xv.is_zero() {
            continue;
        }
        for (j, yv) in y.iter().enumerate() {
            if yv.is_zero() {
                continue;
            }
            let c = xv.mul(yv);
            for l in 0..n {
                let ml = m.get(l, i, j);
                if !ml.is_zero() {
                    out[l] = out[l].add(&c.mul(ml));
                }
            }
        }
    }
    out
}

/// Componentwise multiplication on the tensor square, flat index
/// `u * n + v` for `a_u (x) a_v`.
fn mul_in_square(m: &Tensor3, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let n = m.n();
    let field = x[0].field();
    let mut out = vec![field.zero(); n * n];
    for (uv, xv) in x.iter().enumerate() {
        if xv.is_zero() {
            continue;
        }
        let (u, v) = (uv / n, uv % n);
        for (pq, yv) in y.iter().enumerate() {
            if yv.is_zero() {
                continue;
            }
            let (p, q) = (pq / n, pq % n);
            let c = xv.mul(yv);
            for l1 in 0..n {
                let c1 = m.get(l1, u, p);
                if c1.is_zero() {
                    continue;
                }
                let cc1 = c.mul(c1);
                for l2 in 0..n {
                    let c2 = m.get(l2, v, q);
                    if !c2.is_zero() {
                        out[l1 * n + l2] = out[l1 * n + l2].add(&cc1.mul(c2));
                    }
                }
            }
        }
    }
    out
}

/// Smallest field element of exact multiplicative order `nt`.
fn root_of_unity(field: FieldSpec, nt: usize) -> Result<Scalar, AlgebraError> {
    let no_root = |reason: String| AlgebraError::BuiltinParams { name: "taft".into(), reason };
    if nt < 2 {
        return Err(no_root("size must be at least 2".into()));
    }
    match field.modulus() {
        None => {
            // Only the square roots of unity are rational.
            if nt == 2 {
                Ok(field.from_i64(-1))
            } else {
                Err(no_root(format!(
                    "the rationals have no primitive root of unity of order {nt}"
                )))
            }
        }
        Some(p) => {
            if (p - 1) % nt as u64 != 0 {
                return Err(no_root(format!(
                    "GF({p}) has no element of order {nt} ({nt} does not divide {})",
                    p - 1
                )));
            }
            for w in 2..p {
                let cand = field.from_i64(w as i64);
                let order_nt = cand.pow(nt as u64).is_one()
                    && (1..nt).all(|d| !cand.pow(d as u64).is_one());
                if order_nt {
                    return Ok(cand);
                }
            }
            Err(no_root(format!("no element of order {nt} found in GF({p})")))
        }
    }
}

fn taft_label(a: usize, b: usize) -> String {
    let g = match a {
        0 => None,
        1 => Some("g".to_string()),
        _ => Some(format!("g^{a}")),
    };
    let x = match b {
        0 => None,
        1 => Some("x".to_string()),
        _ => Some(format!("x^{b}")),
    };
    match (g, x) {
        (None, None) => "1".to_string(),
        (Some(g), None) => g,
        (None, Some(x)) => x,
        (Some(g), Some(x)) => format!("{g}*{x}"),
    }
}

/// The Taft algebra of dimension `nt^2`: generators `g` (grouplike of
/// order `nt`) and `x` with `x^nt = 0`, `x g = w g x` for a primitive
/// `nt`-th root of unity `w`, and `Delta(x) = x (x) 1 + g (x) x`. Its
/// antipode has order `2 nt`, which makes the family the standard source
/// of examples where the square of the antipode is not the identity.
pub fn taft(field: FieldSpec, nt: usize) -> Result<HopfAlgebra, AlgebraError> {
    let omega = root_of_unity(field, nt)?;
    let labels: Vec<String> =
        (0..nt).flat_map(|a| (0..nt).map(move |b| taft_label(a, b))).collect();
    taft_with(field, nt, omega, format!("taft:{nt}"), labels)
}

/// The four-dimensional Sweedler algebra, i.e. the Taft algebra of size
/// two, with its customary basis labels.
pub fn sweedler(field: FieldSpec) -> Result<HopfAlgebra, AlgebraError> {
    if field.modulus() == Some(2) {
        return Err(AlgebraError::BuiltinParams {
            name: "sweedler".into(),
            reason: "needs -1 of order two, so characteristic 2 is excluded".into(),
        });
    }
    let labels = ["1", "x", "g", "gx"].map(String::from).to_vec();
    taft_with(field, 2, field.from_i64(-1), "sweedler".into(), labels)
}

fn taft_with(
    field: FieldSpec,
    nt: usize,
    omega: Scalar,
    name: String,
    labels: Vec<String>,
) -> Result<HopfAlgebra, AlgebraError> {
    let dim = nt * nt;
    let idx = |a: usize, b: usize| a * nt + b;
    // Product: (g^a x^b)(g^c x^d) = w^(b c) g^(a+c) x^(b+d), zero once the
    // x-exponent reaches nt.
    let mut m = Tensor3::zeros(field, dim);
    for a in 0..nt {
        for b in 0..nt {
            for c in 0..nt {
                for d in 0..nt {
                    if b + d < nt {
                        let coeff = omega.pow((b * c) as u64);
                        m.set(idx((a + c) % nt, b + d), idx(a, b), idx(c, d), coeff);
                    }
                }
            }
        }
    }
    // Coproduct, built multiplicatively inside the tensor square from
    // Delta(g) = g (x) g and Delta(x) = x (x) 1 + g (x) x.
    let mut delta = Tensor3::zeros(field, dim);
    let mut dx = vec![field.zero(); dim * dim];
    dx[idx(0, 1) * dim + idx(0, 0)] = field.one();
    dx[idx(1, 0) * dim + idx(0, 1)] = field.one();
    let mut dg_pow = vec![field.zero(); dim * dim];
    dg_pow[idx(0, 0) * dim + idx(0, 0)] = field.one();
    for a in 0..nt {
        let mut cur = dg_pow.clone();
        for b in 0..nt {
            for (flat, coeff) in cur.iter().enumerate() {
                if !coeff.is_zero() {
                    delta.set(idx(a, b), flat / dim, flat % dim, coeff.clone());
                }
            }
            cur = mul_in_square(&m, &cur, &dx);
        }
        let mut dg = vec![field.zero(); dim * dim];
        dg[idx(1, 0) * dim + idx(1, 0)] = field.one();
        dg_pow = mul_in_square(&m, &dg_pow, &dg);
    }
    // Antipode: s(g) = g^(nt-1), s(x) = -g^(nt-1) x, extended as an
    // antihomomorphism, so s(g^a x^b) = s(x)^b s(g)^a.
    let mut sg = vec![field.zero(); dim];
    sg[idx(nt - 1, 0)] = field.one();
    let mut sx = vec![field.zero(); dim];
    sx[idx(nt - 1, 1)] = field.from_i64(-1);
    let mut one = vec![field.zero(); dim];
    one[idx(0, 0)] = field.one();
    let mut sg_pows = vec![one.clone()];
    let mut sx_pows = vec![one.clone()];
    for k in 1..nt {
        sg_pows.push(mul_in(&m, &sg_pows[k - 1], &sg));
        sx_pows.push(mul_in(&m, &sx_pows[k - 1], &sx));
    }
    let mut s = Mat::zeros(field, dim, dim);
    for a in 0..nt {
        for b in 0..nt {
            let col = mul_in(&m, &sx_pows[b], &sg_pows[a]);
            for (i, v) in col.into_iter().enumerate() {
                s.set(i, idx(a, b), v);
            }
        }
    }
    let mut counit = vec![field.zero(); dim];
    for a in 0..nt {
        counit[idx(a, 0)] = field.one();
    }
    HopfAlgebra::new(AlgebraData { name, field, basis: labels, m, delta, s, unit: one, counit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    fn f7() -> FieldSpec {
        FieldSpec::prime(7).unwrap()
    }

    #[test]
    fn all_builtin_groups_are_hopf_over_both_fields() {
        for which in ["c2", "c4", "c2c2", "c8", "s3", "d4", "q8"] {
            for field in [q(), f7()] {
                // Construction runs the full axiom check already.
                let h = group(field, which).unwrap();
                assert_eq!(h.name(), format!("group:{which}"));
            }
        }
    }

    #[test]
    fn trivial_algebra_is_one_dimensional() {
        let h = trivial(q());
        assert_eq!(h.dim(), 1);
        assert!(h.verify_axioms().all_pass());
    }

    #[test]
    fn s3_is_noncommutative_and_d4_matches_its_relation() {
        let h = group(q(), "s3").unwrap();
        // r*f vs f*r: indices r = 1, f = 3 under j*3+i.
        let rf = h.multiply(&h.basis_vec(1), &h.basis_vec(3));
        let fr = h.multiply(&h.basis_vec(3), &h.basis_vec(1));
        assert_ne!(rf, fr);

        let d4 = group(q(), "d4").unwrap();
        // f r f = r^-1 = r^3: indices under j*4+i: r = 1, f = 4, r^3 = 3.
        let f = d4.basis_vec(4);
        let frf = d4.multiply(&d4.multiply(&f, &d4.basis_vec(1)), &f);
        assert_eq!(frf, d4.basis_vec(3));
    }

    #[test]
    fn quaternion_table_matches_hamilton_relations() {
        let h = group(q(), "q8").unwrap();
        let lbl = h.basis_labels();
        let at = |name: &str| lbl.iter().position(|l| l == name).unwrap();
        let mul = |x: usize, y: usize| {
            let prod = h.multiply(&h.basis_vec(x), &h.basis_vec(y));
            prod.iter().position(|c| c.is_one()).unwrap()
        };
        assert_eq!(mul(at("i"), at("j")), at("k"));
        assert_eq!(mul(at("j"), at("i")), at("-k"));
        assert_eq!(mul(at("i"), at("i")), at("-1"));
        assert_eq!(mul(at("j"), at("k")), at("i"));
        assert_eq!(mul(at("k"), at("i")), at("j"));
        // Antipode sends i to its inverse -i.
        let s_of_i = h.apply_antipode(&h.basis_vec(at("i")));
        assert_eq!(s_of_i, h.basis_vec(at("-i")));
    }

    #[test]
    fn group_antipode_is_an_involution() {
        for which in ["c8", "s3", "d4", "q8"] {
            let h = group(q(), which).unwrap();
            let s2 = h.s().mul(h.s());
            assert_eq!(s2, Mat::identity(q(), h.dim()), "{which}");
        }
    }

    // Hand-computed structure of the Sweedler algebra with basis
    // 1, x, g, gx at indices 0..3: relations g^2 = 1, x^2 = 0, xg = -gx,
    // Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x,
    // s(g) = g, s(x) = -gx, s(gx) = x.
    #[test]
    fn sweedler_matches_hand_computed_tables() {
        let h = sweedler(q()).unwrap();
        assert_eq!(h.dim(), 4);
        assert_eq!(h.basis_labels(), ["1", "x", "g", "gx"]);
        let (one, x, g, gx) = (0, 1, 2, 3);
        let minus_one = q().from_i64(-1);

        // Products.
        assert_eq!(h.multiply(&h.basis_vec(g), &h.basis_vec(g)), h.basis_vec(one));
        assert!(h.multiply(&h.basis_vec(x), &h.basis_vec(x)).iter().all(Scalar::is_zero));
        assert_eq!(h.multiply(&h.basis_vec(g), &h.basis_vec(x)), h.basis_vec(gx));
        let xg = h.multiply(&h.basis_vec(x), &h.basis_vec(g));
        let mut expect = vec![q().zero(); 4];
        expect[gx] = minus_one.clone();
        assert_eq!(xg, expect);

        // Coproduct of gx is gx (x) g + 1 (x) gx.
        let d = h.comultiply(&h.basis_vec(gx));
        let mut expect = vec![q().zero(); 16];
        expect[gx * 4 + g] = q().one();
        expect[one * 4 + gx] = q().one();
        assert_eq!(d, expect);

        // Antipode columns.
        assert_eq!(h.apply_antipode(&h.basis_vec(g)), h.basis_vec(g));
        let mut expect = vec![q().zero(); 4];
        expect[gx] = minus_one;
        assert_eq!(h.apply_antipode(&h.basis_vec(x)), expect);
        assert_eq!(h.apply_antipode(&h.basis_vec(gx)), h.basis_vec(x));

        // Counit kills x and gx, keeps 1 and g.
        assert_eq!(h.counit(), [q().one(), q().zero(), q().one(), q().zero()]);
    }

    #[test]
    fn sweedler_antipode_squared_is_not_identity() {
        for field in [q(), f7()] {
            let h = sweedler(field).unwrap();
            let s2 = h.s().mul(h.s());
            assert_ne!(s2, Mat::identity(field, 4));
            // s^2(x) = -x, and s^4 = id.
            assert_eq!(s2.matvec(&h.basis_vec(1)), {
                let mut v = vec![field.zero(); 4];
                v[1] = field.from_i64(-1);
                v
            });
            assert_eq!(h.s().pow(4), Mat::identity(field, 4));
        }
    }

    /// Gaussian binomial `[n choose k]` at `w`, via q-factorials.
    fn q_binom(field: FieldSpec, w: &Scalar, n: usize, k: usize) -> Scalar {
        let q_int = |m: usize| {
            let mut acc = field.zero();
            for t in 0..m {
                acc = acc.add(&w.pow(t as u64));
            }
            acc
        };
        let q_fact = |m: usize| {
            let mut acc = field.one();
            for t in 1..=m {
                acc = acc.mul(&q_int(t));
            }
            acc
        };
        q_fact(n).div(&q_fact(k).mul(&q_fact(n - k))).unwrap()
    }

    /// Independent coproduct formula for Taft algebras:
    /// `Delta(g^a x^b) = sum_k [b choose k]_w  g^(a+k) x^(b-k) (x) g^a x^k`.
    #[test]
    fn taft_coproduct_matches_q_binomial_formula() {
        let nt = 3;
        let h = taft(f7(), nt).unwrap();
        let dim = nt * nt;
        let idx = |a: usize, b: usize| a * nt + b;
        let omega = f7().from_i64(2);
        for a in 0..nt {
            for b in 0..nt {
                let got = h.comultiply(&h.basis_vec(idx(a, b)));
                let mut expect = vec![f7().zero(); dim * dim];
                for k in 0..=b {
                    let left = idx((a + k) % nt, b - k);
                    let right = idx(a, k);
                    expect[left * dim + right] = q_binom(f7(), &omega, b, k);
                }
                assert_eq!(got, expect, "Delta(g^{a} x^{b})");
            }
        }
    }

    #[test]
    fn taft_three_uses_omega_two_and_has_antipode_of_order_six() {
        let h = taft(f7(), 3).unwrap();
        assert_eq!(h.dim(), 9);
        // x g = w g x with w = 2, the smallest order-3 element of GF(7).
        let idx = |a: usize, b: usize| a * 3 + b;
        let products = h.m_products(idx(0, 1), idx(1, 0));
        assert_eq!(products, [(idx(1, 1), f7().from_i64(2))]);
        // Antipode order is exactly 2*nt = 6.
        let id = Mat::identity(f7(), 9);
        assert_eq!(h.s().pow(6), id);
        for e in [1, 2, 3] {
            assert_ne!(h.s().pow(e), id, "s^{e} should not be the identity");
        }
    }

    #[test]
    fn taft_rejects_fields_without_the_right_root_of_unity() {
        assert!(matches!(taft(q(), 3), Err(AlgebraError::BuiltinParams { .. })));
        assert!(matches!(taft(f7(), 4), Err(AlgebraError::BuiltinParams { .. })));
        assert!(matches!(
            sweedler(FieldSpec::prime(2).unwrap()),
            Err(AlgebraError::BuiltinParams { .. })
        ));
        // 5 divides 11 - 1, so taft:5 over GF(11) exists.
        let h = taft(FieldSpec::prime(11).unwrap(), 5).unwrap();
        assert_eq!(h.dim(), 25);
    }

    #[test]
    fn builtin_dispatch() {
        assert_eq!(builtin("trivial", q()).unwrap().dim(), 1);
        assert_eq!(builtin("sweedler", q()).unwrap().dim(), 4);
        assert_eq!(builtin("taft:3", f7()).unwrap().dim(), 9);
        assert_eq!(builtin("group:q8", q()).unwrap().dim(), 8);
        assert!(matches!(builtin("nope", q()), Err(AlgebraError::UnknownBuiltin(_))));
        assert!(matches!(builtin("group:c3", q()), Err(AlgebraError::UnknownBuiltin(_))));
        assert!(matches!(builtin("taft:x", q()), Err(AlgebraError::BuiltinParams { .. })));
    }
}
