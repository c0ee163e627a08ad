//! Finite-dimensional Hopf algebras presented by structure constants.
//!
//! Fixed index conventions, used verbatim everywhere else:
//! - `m[l][i][j]`  is the coefficient of `a_l` in the product `a_i * a_j`
//! - `delta[l][i][j]` is the coefficient of `a_i (x) a_j` in `Delta(a_l)`
//! - `s[i][j]` is the coefficient of `a_i` in `s(a_j)` (so `s` acts on
//!   coordinate columns)
//! - elements of the algebra are coordinate columns, functionals are
//!   coordinate rows against the same basis
//!
//! [`verify_axioms`](HopfAlgebra::verify_axioms) checks the seven axiom
//! families exhaustively over basis indices and reports the first
//! counterexample of each failing family.

mod builtins;
mod format;

pub use builtins::{builtin, builtin_names, group, sweedler, taft, trivial};
pub use format::{load_algebra, to_json};

use crate::matrix::Mat;
use crate::par;
use crate::report::{CheckEntry, CheckReport};
use crate::scalar::{FieldSpec, Scalar, ScalarError};

#[derive(Debug, thiserror::Error)]
pub enum AlgebraError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("inconsistent algebra data: {0}")]
    Invalid(String),
    #[error("antipode matrix is singular")]
    SingularAntipode,
    #[error("axiom check failed: {0}")]
    AxiomFailure(String),
    #[error("unknown builtin {0:?}")]
    UnknownBuiltin(String),
    #[error("builtin {name}: {reason}")]
    BuiltinParams { name: String, reason: String },
}

/// Structure constants of a cubic tensor `t[l][i][j]`, dense, all slots
/// ranging over `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    n: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: FieldSpec, n: usize) -> Tensor3 {
        Tensor3 { n, field, data: vec![field.zero(); n * n * n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, l: usize, i: usize, j: usize) -> &Scalar {
        &self.data[(l * self.n + i) * self.n + j]
    }

    pub fn set(&mut self, l: usize, i: usize, j: usize, v: Scalar) {
        self.data[(l * self.n + i) * self.n + j] = v;
    }

    /// The same tensor with the two lower slots swapped.
    pub fn flip_inner(&self) -> Tensor3 {
        let mut out = Tensor3::zeros(self.field, self.n);
        for l in 0..self.n {
            for i in 0..self.n {
                for j in 0..self.n {
                    out.set(l, j, i, self.get(l, i, j).clone());
                }
            }
        }
        out
    }

    fn nonzeros_by_outer(&self) -> Vec<Vec<(usize, usize, Scalar)>> {
        (0..self.n)
            .map(|l| {
                let mut row = Vec::new();
                for i in 0..self.n {
                    for j in 0..self.n {
                        let v = self.get(l, i, j);
                        if !v.is_zero() {
                            row.push((i, j, v.clone()));
                        }
                    }
                }
                row
            })
            .collect()
    }

    fn nonzeros_by_inner(&self) -> Vec<Vec<(usize, Scalar)>> {
        let mut buckets = vec![Vec::new(); self.n * self.n];
        for l in 0..self.n {
            for i in 0..self.n {
                for j in 0..self.n {
                    let v = self.get(l, i, j);
                    if !v.is_zero() {
                        buckets[i * self.n + j].push((l, v.clone()));
                    }
                }
            }
        }
        buckets
    }
}

/// Raw pieces of an algebra, before consistency checks.
#[derive(Debug, Clone)]
pub struct AlgebraData {
    pub name: String,
    pub field: FieldSpec,
    pub basis: Vec<String>,
    pub m: Tensor3,
    pub delta: Tensor3,
    pub s: Mat,
    pub unit: Vec<Scalar>,
    pub counit: Vec<Scalar>,
}

/// Which structural variant of an algebra to form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantKind {
    /// Opposite multiplication; the antipode becomes `s^{-1}`.
    Op,
    /// Opposite comultiplication; the antipode becomes `s^{-1}`.
    Cop,
    /// Both reversed; the antipode stays `s`.
    OpCop,
}

impl VariantKind {
    pub fn suffix(&self) -> &'static str {
        match self {
            VariantKind::Op => "op",
            VariantKind::Cop => "cop",
            VariantKind::OpCop => "opcop",
        }
    }
}

/// Report of the seven axiom families; entries appear in a fixed order.
pub type AxiomReport = CheckReport;

#[derive(Debug, Clone)]
pub struct HopfAlgebra {
    name: String,
    field: FieldSpec,
    n: usize,
    basis: Vec<String>,
    m: Tensor3,
    delta: Tensor3,
    s: Mat,
    s_inv: Mat,
    unit: Vec<Scalar>,
    counit: Vec<Scalar>,
    // Cached nonzero views of the two structure tensors; every hot loop
    // walks these instead of scanning dense storage.
    m_inner: Vec<Vec<(usize, Scalar)>>,
    delta_outer: Vec<Vec<(usize, usize, Scalar)>>,
}

impl HopfAlgebra {
    /// Builds the algebra and verifies all seven axiom families, so a
    /// value from this constructor is a genuine Hopf algebra.
    pub fn new(data: AlgebraData) -> Result<HopfAlgebra, AlgebraError> {
        let h = HopfAlgebra::new_unverified(data)?;
        let report = h.verify_axioms();
        if let Some(bad) = report.failures().next() {
            let at = bad
                .counterexample
                .as_ref()
                .map(|c| format!(" at {c:?}"))
                .unwrap_or_default();
            return Err(AlgebraError::AxiomFailure(format!("{}{}", bad.id, at)));
        }
        Ok(h)
    }

    /// Builds the algebra checking shapes and antipode invertibility but
    /// not the axioms. Needed to examine deliberately broken inputs; the
    /// axioms can then fail in [`verify_axioms`] instead of at load time.
    pub fn new_unverified(data: AlgebraData) -> Result<HopfAlgebra, AlgebraError> {
        let n = data.basis.len();
        if n == 0 {
            return Err(AlgebraError::Invalid("dimension must be at least 1".into()));
        }
        if data.m.n != n || data.delta.n != n {
            return Err(AlgebraError::Invalid("structure tensor size differs from basis".into()));
        }
        if data.s.rows() != n || data.s.cols() != n {
            return Err(AlgebraError::Invalid("antipode matrix size differs from basis".into()));
        }
        if data.unit.len() != n || data.counit.len() != n {
            return Err(AlgebraError::Invalid("unit/counit length differs from basis".into()));
        }
        let mut labels = data.basis.clone();
        labels.sort();
        labels.dedup();
        if labels.len() != n {
            return Err(AlgebraError::Invalid("duplicate basis labels".into()));
        }
        let all = data
            .m
            .data
            .iter()
            .chain(&data.delta.data)
            .chain(&data.unit)
            .chain(&data.counit);
        for v in all {
            if v.field() != data.field {
                return Err(AlgebraError::Invalid("coefficient from a different field".into()));
            }
        }
        if data.s.field() != data.field {
            return Err(AlgebraError::Invalid("antipode over a different field".into()));
        }
        let s_inv = data.s.inverse().ok_or(AlgebraError::SingularAntipode)?;
        let m_inner = data.m.nonzeros_by_inner();
        let delta_outer = data.delta.nonzeros_by_outer();
        Ok(HopfAlgebra {
            name: data.name,
            field: data.field,
            n,
            basis: data.basis,
            m: data.m,
            delta: data.delta,
            s: data.s,
            s_inv,
            unit: data.unit,
            counit: data.counit,
            m_inner,
            delta_outer,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn m(&self) -> &Tensor3 {
        &self.m
    }

    pub fn delta(&self) -> &Tensor3 {
        &self.delta
    }

    pub fn s(&self) -> &Mat {
        &self.s
    }

    pub fn s_inv(&self) -> &Mat {
        &self.s_inv
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// Nonzero `(l, coeff)` of the product `a_i * a_j`.
    #[inline]
    pub fn m_products(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.m_inner[i * self.n + j]
    }

    /// Nonzero `(i, j, coeff)` terms of `Delta(a_l)`.
    #[inline]
    pub fn delta_terms(&self, l: usize) -> &[(usize, usize, Scalar)] {
        &self.delta_outer[l]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.n];
        v[i] = self.field.one();
        v
    }

    /// Product of two coordinate columns.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.mul(y);
                for (l, c) in self.m_products(i, j) {
                    out[*l] = out[*l].add(&xy.mul(c));
                }
            }
        }
        out
    }

    /// Coproduct of a coordinate column, flattened as `i * n + j` for the
    /// `a_i (x) a_j` coefficient.
    pub fn comultiply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.n * self.n];
        for (l, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, j, c) in self.delta_terms(l) {
                let idx = i * self.n + j;
                out[idx] = out[idx].add(&x.mul(c));
            }
        }
        out
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        dot(self.field, &self.counit, v)
    }

    pub fn apply_antipode(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.s.matvec(v)
    }

    /// Checks the seven axiom families exhaustively over basis indices.
    /// Entries appear in a fixed order; a failing entry carries the first
    /// counterexample in index order.
    pub fn verify_axioms(&self) -> AxiomReport {
        let entries = vec![
            CheckEntry::of("a1_associativity", self.check_associativity())
                .with_note_if_pass("(a_i a_j) a_k = a_i (a_j a_k)"),
            CheckEntry::of("a2_unit", self.check_unit()).with_note_if_pass("1 a = a = a 1"),
            CheckEntry::of("a3_coassociativity", self.check_coassociativity())
                .with_note_if_pass("(Delta (x) id) Delta = (id (x) Delta) Delta"),
            CheckEntry::of("a4_counit", self.check_counit())
                .with_note_if_pass("(eps (x) id) Delta = id = (id (x) eps) Delta"),
            CheckEntry::of("a5_comult_multiplicative", self.check_delta_multiplicative())
                .with_note_if_pass("Delta(ab) = Delta(a) Delta(b), Delta(1) = 1 (x) 1"),
            CheckEntry::of("a6_counit_multiplicative", self.check_counit_multiplicative())
                .with_note_if_pass("eps(ab) = eps(a) eps(b), eps(1) = 1"),
            CheckEntry::of("a7_antipode", self.check_antipode())
                .with_note_if_pass("s(a_(1)) a_(2) = eps(a) 1 = a_(1) s(a_(2))"),
        ];
        CheckReport::new(entries)
    }

    fn check_associativity(&self) -> Result<(), (Option<Vec<usize>>, String)> {
        let n = self.n;
        let found = par::find_first(n * n * n, |flat| {
            let i = flat / (n * n);
            let j = (flat / n) % n;
            let k = flat % n;
            let mut lhs = vec![self.field.zero(); n];
            for (l, c) in self.m_products(i, j) {
                for (u, c2) in self.m_products(*l, k) {
                    lhs[*u] = lhs[*u].add(&c.mul(c2));
                }
            }
            let mut rhs = vec![self.field.zero(); n];
            for (l, c) in self.m_products(j, k) {
                for (u, c2) in self.m_products(i, *l) {
                    rhs[*u] = rhs[*u].add(&c.mul(c2));
                }
            }
            lhs.iter()
                .zip(&rhs)
                .position(|(a, b)| a != b)
                .map(|u| vec![i, j, k, u])
        });
        fail_on(found, "associativity broken at (i, j, k, output)")
    }

    fn check_unit(&self) -> Result<(), (Option<Vec<usize>>, String)> {
        let found = par::find_first(self.n, |j| {
            let e = self.basis_vec(j);
            if self.multiply(&self.unit, &e) != e {
                return Some(vec![j, 0]);
            }
            if self.multiply(&e, &self.unit) != e {
                return Some(vec![j, 1]);
            }
            None
        });
        fail_on(found, "unit fails at (basis, side 0=left 1=right)")
    }

    fn check_coassociativity(&self) -> Result<(), (Option<Vec<usize>>, String)> {
        let n = self.n;
        let found = par::find_first(n, |w| {
            // Coefficients of a_i (x) a_j (x) a_k on both sides.
            let mut lhs = vec![self.field.zero(); n * n * n];
            for (l, k, c) in self.delta_terms(w) {
                for (i, j, c2) in self.delta_terms(*l) {
                    let idx = (i * n + j) * n + k;
                    lhs[idx] = lhs[idx].add(&c.mul(c2));
                }
            }
            let mut rhs = vec![self.field.zero(); n * n * n];
            for (i, l, c) in self.delta_terms(w) {
                for (j, k, c2) in self.delta_terms(*l) {
                    let idx = (i * n + j) * n + k;
                    rhs[idx] = rhs[idx].add(&c.mul(c2));
                }
            }
            lhs.iter().zip(&rhs).position(|(a, b)| a != b).map(|idx| {
                vec![w, idx / (n * n), (idx / n) % n, idx % n]
            })
        });
        fail_on(found, "coassociativity broken at (input, i, j, k)")
    }

    fn check_counit(&self) -> Result<(), (Option<Vec<usize>>, String)> {
        let n = self.n;
        let found = par::find_first(n, |w| {
            let mut left = vec![self.field.zero(); n];
            let mut right = vec![self.field.zero(); n];
            for (i, j, c) in self.delta_terms(w) {
                left[*j] = left[*j].add(&self.counit[*i].mul(c));
                right[*i] = right[*i].add(&self.counit[*j].mul(c));
            }
            let e = self.basis_vec(w);
            if left != e {
                return Some(vec![w, 0]);
            }
            if right != e {
                return Some(vec![w, 1]);
            }
            None
        });
        fail_on(found, "counit fails at (basis, side 0=left 1=right)")
    }

    fn check_delta_multiplicative(&self) -> Result<(), (Option<Vec<usize>>, String)> {
        let n = self.n;
        // Delta(1) = 1 (x) 1 first: a unit failure has no basis pair index.
        let mut unit_tensor = vec![self.field.zero(); n * n];
        for (i, x) in self.unit.iter().enumerate() {
            for (j, y) in self.unit.iter().enumerate() {
                unit_tensor[i * n + j] = x.mul(y);
            }
        }
        if self.comultiply(&self.unit) != unit_tensor {
            return Err((None, "Delta(1) differs from 1 (x) 1".into()));
        }
        let found = par::find_first(n * n, |flat| {
            let i = flat / n;
            let j = flat % n;
            let mut lhs = vec![self.field.zero(); n * n];
            for (l, c) in self.m_products(i, j) {
                for (u, v, c2) in self.delta_terms(*l) {
                    let idx = u * n + v;
                    lhs[idx] = lhs[idx].add(&c.mul(c2));
                }
            }
            let mut rhs = vec![self.field.zero(); n * n];
            for (p, q, c1) in self.delta_terms(i) {
                for (r, t, c2) in self.delta_terms(j) {
                    let c12 = c1.mul(c2);
                    for (u, cu) in self.m_products(*p, *r) {
                        let cu12 = c12.mul(cu);
                        for (v, cv) in self.m_products(*q, *t) {
                            let idx = u * n + v;
                            rhs[idx] = rhs[idx].add(&cu12.mul(cv));
                        }
                    }
                }
            }
            lhs.iter()
                .zip(&rhs)
                .position(|(a, b)| a != b)
                .map(|idx| vec![i, j, idx / n, idx % n])
        });
        fail_on(found, "Delta(ab) != Delta(a)Delta(b) at (i, j, out left, out right)")
    }

    fn check_counit_multiplicative(&self) -> Result<(), (Option<Vec<usize>>, String)> {
        if !self.counit_of(&self.unit).is_one() {
            return Err((None, "eps(1) != 1".into()));
        }
        let n = self.n;
        let found = par::find_first(n * n, |flat| {
            let i = flat / n;
            let j = flat % n;
            let mut lhs = self.field.zero();
            for (l, c) in self.m_products(i, j) {
                lhs = lhs.add(&self.counit[*l].mul(c));
            }
            (lhs != self.counit[i].mul(&self.counit[j])).then(|| vec![i, j])
        });
        fail_on(found, "eps(ab) != eps(a)eps(b) at (i, j)")
    }

    fn check_antipode(&self) -> Result<(), (Option<Vec<usize>>, String)> {
        let n = self.n;
        let found = par::find_first(n, |l| {
            let target: Vec<Scalar> =
                self.unit.iter().map(|u| u.mul(&self.counit[l])).collect();
            let mut left = vec![self.field.zero(); n];
            let mut right = vec![self.field.zero(); n];
            for (i, j, c) in self.delta_terms(l) {
                // left: s(a_i) * a_j, right: a_i * s(a_j)
                for u in 0..n {
                    let su = self.s.get(u, *i);
                    if !su.is_zero() {
                        let csu = c.mul(su);
                        for (w, cm) in self.m_products(u, *j) {
                            left[*w] = left[*w].add(&csu.mul(cm));
                        }
                    }
                    let sv = self.s.get(u, *j);
                    if !sv.is_zero() {
                        let csv = c.mul(sv);
                        for (w, cm) in self.m_products(*i, u) {
                            right[*w] = right[*w].add(&csv.mul(cm));
                        }
                    }
                }
            }
            if left != target {
                return Some(vec![l, 0]);
            }
            if right != target {
                return Some(vec![l, 1]);
            }
            None
        });
        fail_on(found, "antipode fails at (basis, side 0=left 1=right)")
    }

    /// The dual Hopf algebra on the dual basis: multiplication is the
    /// original coproduct, comultiplication the original product, the
    /// antipode transposes, and unit/counit trade places.
    pub fn dual(&self) -> HopfAlgebra {
        let data = AlgebraData {
            name: format!("{}^*", self.name),
            field: self.field,
            basis: self.basis.iter().map(|b| format!("{b}*")).collect(),
            m: self.delta.clone(),
            delta: self.m.clone(),
            s: self.s.transpose(),
            unit: self.counit.clone(),
            counit: self.unit.clone(),
        };
        HopfAlgebra::new_unverified(data).expect("dual of a valid algebra is well-formed")
    }

    /// The op/cop/opcop variant. Reversing exactly one of the two
    /// structures replaces the antipode by its inverse; reversing both
    /// keeps it.
    pub fn variant(&self, kind: VariantKind) -> HopfAlgebra {
        let (m, delta, s) = match kind {
            VariantKind::Op => (self.m.flip_inner(), self.delta.clone(), self.s_inv.clone()),
            VariantKind::Cop => (self.m.clone(), self.delta.flip_inner(), self.s_inv.clone()),
            VariantKind::OpCop => (self.m.flip_inner(), self.delta.flip_inner(), self.s.clone()),
        };
        let data = AlgebraData {
            name: format!("{}^{}", self.name, kind.suffix()),
            field: self.field,
            basis: self.basis.clone(),
            m,
            delta,
            s,
            unit: self.unit.clone(),
            counit: self.counit.clone(),
        };
        HopfAlgebra::new_unverified(data).expect("variant of a valid algebra is well-formed")
    }

    /// Same algebra with the antipode replaced, shape-checked only.
    /// Exists so tests can build deliberately broken inputs.
    pub fn with_antipode(&self, s: Mat) -> Result<HopfAlgebra, AlgebraError> {
        HopfAlgebra::new_unverified(AlgebraData {
            name: self.name.clone(),
            field: self.field,
            basis: self.basis.clone(),
            m: self.m.clone(),
            delta: self.delta.clone(),
            s,
            unit: self.unit.clone(),
            counit: self.counit.clone(),
        })
    }
}

trait NoteIfPass {
    fn with_note_if_pass(self, note: &str) -> Self;
}

impl NoteIfPass for CheckEntry {
    fn with_note_if_pass(mut self, note: &str) -> CheckEntry {
        if self.pass {
            self.note = Some(note.to_string());
        }
        self
    }
}

fn fail_on(
    found: Option<Vec<usize>>,
    what: &str,
) -> Result<(), (Option<Vec<usize>>, String)> {
    match found {
        None => Ok(()),
        Some(cx) => Err((Some(cx), what.to_string())),
    }
}

pub fn dot(field: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len());
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = acc.add(&x.mul(y));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    /// The group algebra of C2 written out by hand, the smallest
    /// non-trivial fixture.
    fn c2_by_hand() -> HopfAlgebra {
        let f = q();
        let mut m = Tensor3::zeros(f, 2);
        // e*e = e, e*a = a, a*e = a, a*a = e
        m.set(0, 0, 0, f.one());
        m.set(1, 0, 1, f.one());
        m.set(1, 1, 0, f.one());
        m.set(0, 1, 1, f.one());
        let mut delta = Tensor3::zeros(f, 2);
        delta.set(0, 0, 0, f.one());
        delta.set(1, 1, 1, f.one());
        let s = Mat::identity(f, 2);
        HopfAlgebra::new(AlgebraData {
            name: "c2".into(),
            field: f,
            basis: vec!["e".into(), "a".into()],
            m,
            delta,
            s,
            unit: vec![f.one(), f.zero()],
            counit: vec![f.one(), f.one()],
        })
        .unwrap()
    }

    #[test]
    fn c2_passes_all_axioms() {
        let h = c2_by_hand();
        let report = h.verify_axioms();
        assert!(report.all_pass(), "{}", report.to_lines());
        assert_eq!(report.entries.len(), 7);
    }

    #[test]
    fn multiply_and_comultiply_on_c2() {
        let h = c2_by_hand();
        let a = h.basis_vec(1);
        assert_eq!(h.multiply(&a, &a), h.basis_vec(0));
        let d = h.comultiply(&a);
        // Delta(a) = a (x) a: flat index 1*2+1 = 3.
        let mut expect = vec![q().zero(); 4];
        expect[3] = q().one();
        assert_eq!(d, expect);
        assert_eq!(h.counit_of(&a), q().one());
    }

    #[test]
    fn broken_product_is_caught_with_counterexample() {
        let f = q();
        let h = c2_by_hand();
        let mut m = h.m().clone();
        // Change a*a from e to a; the antipode law must now fail.
        m.set(0, 1, 1, f.zero());
        m.set(1, 1, 1, f.one());
        let broken = HopfAlgebra::new_unverified(AlgebraData {
            name: "broken".into(),
            field: f,
            basis: vec!["e".into(), "a".into()],
            m,
            delta: h.delta().clone(),
            s: h.s().clone(),
            unit: h.unit().to_vec(),
            counit: h.counit().to_vec(),
        })
        .unwrap();
        let report = broken.verify_axioms();
        assert!(!report.all_pass());
        let assoc = report.entry("a1_associativity").unwrap();
        // a*(a*a) = a*a = a but (a*a)*a = a*a = a, so associativity may
        // survive; the antipode axiom must break: s(a)a = a*a = a != e.
        let antipode = report.entry("a7_antipode").unwrap();
        assert!(!assoc.pass || !antipode.pass);
        let failing = report.failures().next().unwrap();
        assert!(failing.counterexample.is_some());
    }

    #[test]
    fn broken_coassociativity_is_caught() {
        let f = q();
        let h = c2_by_hand();
        let mut delta = h.delta().clone();
        delta.set(1, 1, 1, f.zero());
        delta.set(1, 0, 1, f.one()); // Delta(a) = e (x) a: not coassociative with counit
        let broken = h_with(&h, delta);
        let report = broken.verify_axioms();
        assert!(!report.all_pass());
    }

    fn h_with(h: &HopfAlgebra, delta: Tensor3) -> HopfAlgebra {
        HopfAlgebra::new_unverified(AlgebraData {
            name: "edited".into(),
            field: h.field(),
            basis: h.basis_labels().to_vec(),
            m: h.m().clone(),
            delta,
            s: h.s().clone(),
            unit: h.unit().to_vec(),
            counit: h.counit().to_vec(),
        })
        .unwrap()
    }

    #[test]
    fn dual_of_c2_has_pointwise_product() {
        let h = c2_by_hand();
        let d = h.dual();
        assert!(d.verify_axioms().all_pass());
        // Dual basis multiplies pointwise: e* e* = e*, e* a* = 0, a* a* = a*.
        let e = d.basis_vec(0);
        let a = d.basis_vec(1);
        assert_eq!(d.multiply(&e, &e), e);
        assert_eq!(d.multiply(&a, &a), a);
        assert!(d.multiply(&e, &a).iter().all(Scalar::is_zero));
        // Unit of the dual is the original counit.
        assert_eq!(d.unit(), h.counit());
    }

    #[test]
    fn double_dual_restores_structure_constants() {
        let h = c2_by_hand();
        let dd = h.dual().dual();
        assert_eq!(dd.m(), h.m());
        assert_eq!(dd.delta(), h.delta());
        assert_eq!(dd.s(), h.s());
    }

    #[test]
    fn variants_pass_axioms_and_compose() {
        let h = c2_by_hand();
        for kind in [VariantKind::Op, VariantKind::Cop, VariantKind::OpCop] {
            let v = h.variant(kind);
            assert!(v.verify_axioms().all_pass(), "{:?}", kind);
        }
        let opcop = h.variant(VariantKind::Op).variant(VariantKind::Cop);
        let direct = h.variant(VariantKind::OpCop);
        assert_eq!(opcop.m(), direct.m());
        assert_eq!(opcop.delta(), direct.delta());
        // op then cop applies inverse twice, landing back on s.
        assert_eq!(opcop.s(), direct.s());
    }

    #[test]
    fn shape_errors_are_rejected() {
        let f = q();
        let h = c2_by_hand();
        let bad = AlgebraData {
            name: "bad".into(),
            field: f,
            basis: vec!["e".into()],
            m: h.m().clone(),
            delta: h.delta().clone(),
            s: h.s().clone(),
            unit: h.unit().to_vec(),
            counit: h.counit().to_vec(),
        };
        assert!(matches!(HopfAlgebra::new_unverified(bad), Err(AlgebraError::Invalid(_))));

        let singular = h.with_antipode(Mat::zeros(f, 2, 2));
        assert!(matches!(singular, Err(AlgebraError::SingularAntipode)));
    }
}
