//! A small textual language for string diagrams over a Hopf algebra, with
//! two independent evaluators.
//!
//! A diagram is a tensor network: boxes are the structure maps of the
//! algebra (`m`, `delta`, `s`, `sinv`, `eta`, `eps`, `id`, or a named
//! endomorphism supplied at evaluation time), and wires carry basis
//! indices.  Evaluating a diagram with `p` free inputs and `q` free
//! outputs produces the coordinate tensor of a linear map
//! `A^{⊗p} -> A^{⊗q}`.
//!
//! The text format is line oriented:
//!
//! ```text
//! # comment
//! diagram double_mult : 3 -> 1
//! node a m
//! node b m
//! wire in1 -> a.in1
//! wire in2 -> a.in2
//! wire a.out1 -> b.in1
//! wire in3 -> b.in2
//! wire b.out1 -> out1
//! ```
//!
//! Reading top down, the `k`-th free input is the `k`-th tensor factor of
//! the domain, and likewise for outputs.  Braces and semicolons are
//! accepted as statement separators, so a compact one-line style also
//! parses.  Closed loops are allowed and evaluate to traces.
//!
//! Two evaluation strategies are provided: a planned evaluator that
//! greedily contracts pairs of tensors ([`evaluate`]) and a direct
//! summation over wire labellings ([`evaluate_naive`]).  They share no
//! intermediate machinery, so agreement between them is a meaningful
//! cross-check; [`diagrams_equal`] and the bundled builtin diagrams
//! (see [`builtin_diagram`]) build on that.

use std::collections::BTreeMap;
use std::fmt;

use crate::hopf::{AlgebraError, HopfAlgebra};
use crate::matrix::Mat;
use crate::scalar::{FieldSpec, Scalar};

mod builtins;
mod eval;
mod parse;

pub use builtins::{builtin_diagram, builtin_diagram_names, builtin_diagram_text};
pub use eval::{evaluate, evaluate_naive};
pub use parse::{parse, parse_one};

/// The box alphabet.  Every kind has a fixed arity; `Endo` boxes take
/// their matrix from the [`Bindings`] passed to the evaluator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    /// Multiplication `A ⊗ A -> A`; input 1 is the left factor.
    M,
    /// Comultiplication `A -> A ⊗ A`; output 1 is the left tensorand.
    Delta,
    /// The antipode.
    S,
    /// The inverse antipode.
    SInv,
    /// The unit `k -> A` (no inputs).
    Eta,
    /// The counit `A -> k` (no outputs).
    Eps,
    /// The identity map.
    Id,
    /// A named endomorphism bound at evaluation time.
    Endo(String),
}

impl NodeKind {
    /// `(inputs, outputs)` of the box.
    pub fn arity(&self) -> (usize, usize) {
        match self {
            NodeKind::M => (2, 1),
            NodeKind::Delta => (1, 2),
            NodeKind::Eta => (0, 1),
            NodeKind::Eps => (1, 0),
            NodeKind::S | NodeKind::SInv | NodeKind::Id | NodeKind::Endo(_) => (1, 1),
        }
    }

    fn keyword(&self) -> String {
        match self {
            NodeKind::M => "m".into(),
            NodeKind::Delta => "delta".into(),
            NodeKind::S => "s".into(),
            NodeKind::SInv => "sinv".into(),
            NodeKind::Eta => "eta".into(),
            NodeKind::Eps => "eps".into(),
            NodeKind::Id => "id".into(),
            NodeKind::Endo(name) => format!("endo:{name}"),
        }
    }
}

/// A named box in a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub id: String,
    pub kind: NodeKind,
}

/// One end of a wire.  Port numbers are 0-based here; the text format
/// writes them 1-based (`a.in1`, `out2`, ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PortRef {
    /// The k-th free input of the diagram (a wire source).
    DiagramIn(usize),
    /// The k-th free output of the diagram (a wire destination).
    DiagramOut(usize),
    /// Input port k of the node at the given index (a wire destination).
    NodeIn(usize, usize),
    /// Output port k of the node at the given index (a wire source).
    NodeOut(usize, usize),
}

/// A directed wire from a source port to a destination port.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Wire {
    pub src: PortRef,
    pub dst: PortRef,
}

/// A parsed diagram.  Use [`parse`] / [`parse_one`] to build one from
/// text and [`evaluate`] / [`evaluate_naive`] to turn it into a tensor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub name: String,
    pub inputs: usize,
    pub outputs: usize,
    pub nodes: Vec<Node>,
    pub wires: Vec<Wire>,
}

impl Diagram {
    /// Index of the node with the given id.
    pub fn node_index(&self, id: &str) -> Option<usize> {
        self.nodes.iter().position(|nd| nd.id == id)
    }

    /// Names of the `endo:` boxes, deduplicated, in order of first use.
    pub fn endo_names(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for nd in &self.nodes {
            if let NodeKind::Endo(name) = &nd.kind {
                if !out.iter().any(|x| x == name) {
                    out.push(name.clone());
                }
            }
        }
        out
    }

    /// Checks that every port is wired exactly once and that wire ends
    /// point at existing ports with the right direction.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        port_map(self).map(|_| ())
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "diagram {} : {} -> {}", self.name, self.inputs, self.outputs)?;
        for nd in &self.nodes {
            writeln!(f, "node {} {}", nd.id, nd.kind.keyword())?;
        }
        for w in &self.wires {
            writeln!(f, "wire {} -> {}", self.port_text(w.src), self.port_text(w.dst))?;
        }
        Ok(())
    }
}

impl Diagram {
    fn port_text(&self, p: PortRef) -> String {
        match p {
            PortRef::DiagramIn(k) => format!("in{}", k + 1),
            PortRef::DiagramOut(k) => format!("out{}", k + 1),
            PortRef::NodeIn(nd, k) => format!("{}.in{}", self.nodes[nd].id, k + 1),
            PortRef::NodeOut(nd, k) => format!("{}.out{}", self.nodes[nd].id, k + 1),
        }
    }
}

/// Wire indices attached to every port, computed once per evaluation.
/// Wires are numbered by their position in `Diagram::wires`.
pub(crate) struct PortMap {
    /// `node_in[nd][k]` = wire entering input port k of node nd.
    pub node_in: Vec<Vec<usize>>,
    /// `node_out[nd][k]` = wire leaving output port k of node nd.
    pub node_out: Vec<Vec<usize>>,
    /// `diag_in[k]` = wire attached to the k-th free input.
    pub diag_in: Vec<usize>,
    /// `diag_out[k]` = wire attached to the k-th free output.
    pub diag_out: Vec<usize>,
}

/// Resolves every wire end to a port slot, rejecting dangling ports,
/// double wiring, out-of-range port numbers and wrong-direction ends.
pub(crate) fn port_map(d: &Diagram) -> Result<PortMap, AlgebraError> {
    let bad = |msg: String| AlgebraError::Invalid(format!("diagram {}: {msg}", d.name));
    let mut node_in: Vec<Vec<Option<usize>>> = Vec::with_capacity(d.nodes.len());
    let mut node_out: Vec<Vec<Option<usize>>> = Vec::with_capacity(d.nodes.len());
    for nd in &d.nodes {
        let (ins, outs) = nd.kind.arity();
        node_in.push(vec![None; ins]);
        node_out.push(vec![None; outs]);
    }
    let mut diag_in: Vec<Option<usize>> = vec![None; d.inputs];
    let mut diag_out: Vec<Option<usize>> = vec![None; d.outputs];

    let claim = |slot: &mut Option<usize>, wire: usize, what: String| {
        if slot.is_some() {
            return Err(bad(format!("{what} is wired twice")));
        }
        *slot = Some(wire);
        Ok(())
    };
    for (w, wire) in d.wires.iter().enumerate() {
        match wire.src {
            PortRef::DiagramIn(k) => {
                if k >= d.inputs {
                    return Err(bad(format!("input {} out of range", k + 1)));
                }
                claim(&mut diag_in[k], w, format!("input {}", k + 1))?;
            }
            PortRef::NodeOut(nd, k) => {
                if nd >= d.nodes.len() || k >= node_out[nd].len() {
                    return Err(bad("wire source port out of range".into()));
                }
                claim(&mut node_out[nd][k], w, format!("{}.out{}", d.nodes[nd].id, k + 1))?;
            }
            other => {
                return Err(bad(format!(
                    "wire source must be a diagram input or a node output, got {}",
                    d.port_text(other)
                )));
            }
        }
        match wire.dst {
            PortRef::DiagramOut(k) => {
                if k >= d.outputs {
                    return Err(bad(format!("output {} out of range", k + 1)));
                }
                claim(&mut diag_out[k], w, format!("output {}", k + 1))?;
            }
            PortRef::NodeIn(nd, k) => {
                if nd >= d.nodes.len() || k >= node_in[nd].len() {
                    return Err(bad("wire destination port out of range".into()));
                }
                claim(&mut node_in[nd][k], w, format!("{}.in{}", d.nodes[nd].id, k + 1))?;
            }
            other => {
                return Err(bad(format!(
                    "wire destination must be a diagram output or a node input, got {}",
                    d.port_text(other)
                )));
            }
        }
    }

    let full = |slots: Vec<Option<usize>>, what: &dyn Fn(usize) -> String| {
        slots
            .into_iter()
            .enumerate()
            .map(|(k, s)| s.ok_or_else(|| bad(format!("{} is not wired", what(k)))))
            .collect::<Result<Vec<usize>, _>>()
    };
    let mut ni = Vec::new();
    let mut no = Vec::new();
    for (nd, slots) in node_in.into_iter().enumerate() {
        let id = d.nodes[nd].id.clone();
        ni.push(full(slots, &|k| format!("{id}.in{}", k + 1))?);
    }
    for (nd, slots) in node_out.into_iter().enumerate() {
        let id = d.nodes[nd].id.clone();
        no.push(full(slots, &|k| format!("{id}.out{}", k + 1))?);
    }
    let di = full(diag_in, &|k| format!("input {}", k + 1))?;
    let dout = full(diag_out, &|k| format!("output {}", k + 1))?;
    Ok(PortMap { node_in: ni, node_out: no, diag_in: di, diag_out: dout })
}

/// Matrices for the `endo:` boxes of a diagram, keyed by name.
#[derive(Debug, Clone, Default)]
pub struct Bindings {
    map: BTreeMap<String, Mat>,
}

impl Bindings {
    pub fn new() -> Bindings {
        Bindings::default()
    }

    pub fn insert(&mut self, name: &str, mat: Mat) {
        self.map.insert(name.to_string(), mat);
    }

    pub fn get(&self, name: &str) -> Option<&Mat> {
        self.map.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.map.keys().map(|s| s.as_str())
    }
}

/// The result of evaluating a diagram: the coordinate tensor of a linear
/// map `A^{⊗inputs} -> A^{⊗outputs}`, stored as an
/// `n^outputs × n^inputs` matrix.  Row and column multi-indices flatten
/// with factor 1 leftmost (index `i1·n + i2` for two factors), matching
/// the `A ⊗ A` endomorphism convention used elsewhere in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorValue {
    n: usize,
    inputs: usize,
    outputs: usize,
    mat: Mat,
}

impl TensorValue {
    pub(crate) fn new(n: usize, inputs: usize, outputs: usize, mat: Mat) -> TensorValue {
        debug_assert_eq!(mat.rows(), n.pow(outputs as u32));
        debug_assert_eq!(mat.cols(), n.pow(inputs as u32));
        TensorValue { n, inputs, outputs, mat }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn outputs(&self) -> usize {
        self.outputs
    }

    pub fn field(&self) -> FieldSpec {
        self.mat.field()
    }

    /// The underlying `n^outputs × n^inputs` matrix.
    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    /// For a `1 -> 1` diagram, the `n × n` matrix of the map.
    pub fn to_endo(&self) -> Option<&Mat> {
        (self.inputs == 1 && self.outputs == 1).then_some(&self.mat)
    }

    /// For a `2 -> 2` diagram, the `n² × n²` matrix of the map on `A ⊗ A`.
    pub fn to_endo2(&self) -> Option<&Mat> {
        (self.inputs == 2 && self.outputs == 2).then_some(&self.mat)
    }

    /// For a closed (`0 -> 0`) diagram, the scalar it evaluates to.
    pub fn scalar(&self) -> Option<&Scalar> {
        (self.inputs == 0 && self.outputs == 0).then(|| self.mat.get(0, 0))
    }
}

/// Evaluates both diagrams with the planned evaluator and compares the
/// resulting tensors (shapes and entries).
pub fn diagrams_equal(
    h: &HopfAlgebra,
    a: &Diagram,
    b: &Diagram,
    bindings: &Bindings,
) -> Result<bool, AlgebraError> {
    let va = evaluate(h, a, bindings)?;
    let vb = evaluate(h, b, bindings)?;
    Ok(va == vb)
}
