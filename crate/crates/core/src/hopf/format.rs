//! JSON file format for algebras given by structure constants.
//!
//! ```json
//! {
//!   "name": "c2",
//!   "field": {"kind": "rational"},
//!   "dim": 2,
//!   "basis": ["e", "a"],
//!   "m": [[0, 0, 0, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"], [0, 1, 1, "1"]],
//!   "delta": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
//!   "s": [[0, 0, "1"], [1, 1, "1"]],
//!   "unit": ["1", "0"],
//!   "counit": ["1", "1"]
//! }
//! ```
//!
//! `m` entries are `[l, i, j, coeff]` meaning `coeff` times `a_l` appears
//! in `a_i a_j`; `delta` entries are `[l, i, j, coeff]` meaning `coeff`
//! times `a_i (x) a_j` appears in `Delta(a_l)`; `s` entries are
//! `[i, j, coeff]` meaning `coeff` times `a_i` appears in `s(a_j)`.
//! Omitted entries are zero; duplicate positions are rejected. The prime
//! field is written `{"kind": "prime", "p": 7}`. Coefficients are strings
//! in the scalar literal grammar (`-3/4`, `5`, ...).

use serde::{Deserialize, Serialize};

use super::{AlgebraData, AlgebraError, HopfAlgebra, Tensor3};
use crate::matrix::Mat;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    name: String,
    field: FieldDoc,
    dim: usize,
    basis: Vec<String>,
    m: Vec<(usize, usize, usize, String)>,
    delta: Vec<(usize, usize, usize, String)>,
    s: Vec<(usize, usize, String)>,
    unit: Vec<String>,
    counit: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum FieldDoc {
    Rational,
    Prime { p: u64 },
}

/// Parses the JSON format. Shapes, indices and coefficients are fully
/// validated; the Hopf axioms are not checked here, so deliberately
/// broken inputs can still be loaded and then failed by
/// [`HopfAlgebra::verify_axioms`].
pub fn load_algebra(text: &str) -> Result<HopfAlgebra, AlgebraError> {
    let doc: AlgebraDoc =
        serde_json::from_str(text).map_err(|e| AlgebraError::Parse(e.to_string()))?;
    let field = match doc.field {
        FieldDoc::Rational => FieldSpec::rational(),
        FieldDoc::Prime { p } => FieldSpec::prime(p)?,
    };
    let n = doc.dim;
    if doc.basis.len() != n {
        return Err(AlgebraError::Invalid(format!(
            "dim is {n} but basis lists {} labels",
            doc.basis.len()
        )));
    }
    let mut m = Tensor3::zeros(field, n);
    for (l, i, j, lit) in &doc.m {
        set_cubic(&mut m, "m", field, (*l, *i, *j), lit)?;
    }
    let mut delta = Tensor3::zeros(field, n);
    for (l, i, j, lit) in &doc.delta {
        set_cubic(&mut delta, "delta", field, (*l, *i, *j), lit)?;
    }
    let mut s = Mat::zeros(field, n, n);
    for (i, j, lit) in &doc.s {
        if *i >= n || *j >= n {
            return Err(AlgebraError::Invalid(format!("s entry [{i}, {j}] out of range")));
        }
        if !s.get(*i, *j).is_zero() {
            return Err(AlgebraError::Invalid(format!("duplicate s entry [{i}, {j}]")));
        }
        s.set(*i, *j, parse_at(field, "s", &format!("[{i}, {j}]"), lit)?);
    }
    let unit = parse_dense(field, "unit", n, &doc.unit)?;
    let counit = parse_dense(field, "counit", n, &doc.counit)?;
    HopfAlgebra::new_unverified(AlgebraData {
        name: doc.name,
        field,
        basis: doc.basis,
        m,
        delta,
        s,
        unit,
        counit,
    })
}

fn set_cubic(
    t: &mut Tensor3,
    what: &str,
    field: FieldSpec,
    (l, i, j): (usize, usize, usize),
    lit: &str,
) -> Result<(), AlgebraError> {
    let n = t.n();
    if l >= n || i >= n || j >= n {
        return Err(AlgebraError::Invalid(format!("{what} entry [{l}, {i}, {j}] out of range")));
    }
    if !t.get(l, i, j).is_zero() {
        return Err(AlgebraError::Invalid(format!("duplicate {what} entry [{l}, {i}, {j}]")));
    }
    t.set(l, i, j, parse_at(field, what, &format!("[{l}, {i}, {j}]"), lit)?);
    Ok(())
}

fn parse_at(field: FieldSpec, what: &str, at: &str, lit: &str) -> Result<Scalar, AlgebraError> {
    field
        .parse(lit)
        .map_err(|e| AlgebraError::Parse(format!("{what} entry {at}: {e}")))
}

fn parse_dense(
    field: FieldSpec,
    what: &str,
    n: usize,
    lits: &[String],
) -> Result<Vec<Scalar>, AlgebraError> {
    if lits.len() != n {
        return Err(AlgebraError::Invalid(format!(
            "{what} has {} entries, expected {n}",
            lits.len()
        )));
    }
    lits.iter()
        .enumerate()
        .map(|(i, lit)| parse_at(field, what, &format!("[{i}]"), lit))
        .collect()
}

/// Serializes an algebra to the JSON format, with sparse entries in index
/// order so the output is byte-stable.
pub fn to_json(h: &HopfAlgebra) -> String {
    let n = h.dim();
    let field = match h.field().modulus() {
        None => FieldDoc::Rational,
        Some(p) => FieldDoc::Prime { p },
    };
    let cubic = |t: &Tensor3| {
        let mut out = Vec::new();
        for l in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let v = t.get(l, i, j);
                    if !v.is_zero() {
                        out.push((l, i, j, v.to_string()));
                    }
                }
            }
        }
        out
    };
    let mut s = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = h.s().get(i, j);
            if !v.is_zero() {
                s.push((i, j, v.to_string()));
            }
        }
    }
    let doc = AlgebraDoc {
        name: h.name().to_string(),
        field,
        dim: n,
        basis: h.basis_labels().to_vec(),
        m: cubic(h.m()),
        delta: cubic(h.delta()),
        s,
        unit: h.unit().iter().map(Scalar::to_string).collect(),
        counit: h.counit().iter().map(Scalar::to_string).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("algebra document serializes")
}
