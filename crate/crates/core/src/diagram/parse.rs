//! Line-oriented parser for the diagram language.
//!
//! Statements are `diagram NAME : P -> Q`, `node ID KIND` and
//! `wire SRC -> DST`.  `#` starts a comment.  Braces and semicolons act
//! as statement separators, so `diagram d : 1 -> 1 { wire in1 -> out1 }`
//! is accepted.  Nodes may be referenced by wires before they are
//! declared, as long as the declaration appears somewhere in the same
//! diagram.

use super::{Diagram, Node, NodeKind, PortRef, Wire};
use crate::hopf::AlgebraError;

fn err(line: usize, msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse(format!("line {line}: {}", msg.into()))
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// `in`/`out` optionally followed by a 1-based port number.
fn parse_port_name(s: &str) -> Option<(bool, usize)> {
    let (is_in, digits) = if let Some(rest) = s.strip_prefix("in") {
        (true, rest)
    } else {
        (false, s.strip_prefix("out")?)
    };
    if digits.is_empty() {
        return Some((is_in, 0));
    }
    let k: usize = digits.parse().ok()?;
    if k == 0 {
        return None;
    }
    Some((is_in, k - 1))
}

fn looks_like_port(s: &str) -> bool {
    parse_port_name(s).is_some()
}

/// A wire end before node names are resolved to indices.
enum RawPort {
    Diagram { is_in: bool, k: usize },
    Node { id: String, is_in: bool, k: usize },
}

fn parse_ref(line: usize, text: &str) -> Result<RawPort, AlgebraError> {
    if let Some((node_id, port)) = text.split_once('.') {
        if !is_ident(node_id) {
            return Err(err(line, format!("bad node name {node_id:?} in {text:?}")));
        }
        let (is_in, k) = parse_port_name(port)
            .ok_or_else(|| err(line, format!("bad port {port:?} in {text:?} (use inN/outN)")))?;
        Ok(RawPort::Node { id: node_id.to_string(), is_in, k })
    } else {
        let (is_in, k) = parse_port_name(text).ok_or_else(|| {
            err(line, format!("bad wire end {text:?} (expected inN, outN or node.port)"))
        })?;
        Ok(RawPort::Diagram { is_in, k })
    }
}

struct PendingDiagram {
    line: usize,
    name: String,
    inputs: usize,
    outputs: usize,
    nodes: Vec<Node>,
    raw_wires: Vec<(usize, RawPort, RawPort)>,
}

impl PendingDiagram {
    fn finish(self) -> Result<Diagram, AlgebraError> {
        let resolve = |line: usize, raw: RawPort, is_src: bool| -> Result<PortRef, AlgebraError> {
            Ok(match raw {
                RawPort::Diagram { is_in: true, k } => PortRef::DiagramIn(k),
                RawPort::Diagram { is_in: false, k } => PortRef::DiagramOut(k),
                RawPort::Node { id, is_in, k } => {
                    let nd = self
                        .nodes
                        .iter()
                        .position(|n| n.id == id)
                        .ok_or_else(|| err(line, format!("wire references unknown node {id:?}")))?;
                    if is_in {
                        PortRef::NodeIn(nd, k)
                    } else {
                        PortRef::NodeOut(nd, k)
                    }
                }
            })
            .and_then(|port| match (is_src, port) {
                (true, PortRef::DiagramOut(_)) => {
                    Err(err(line, "a diagram output cannot be a wire source"))
                }
                (true, PortRef::NodeIn(..)) => {
                    Err(err(line, "a node input cannot be a wire source"))
                }
                (false, PortRef::DiagramIn(_)) => {
                    Err(err(line, "a diagram input cannot be a wire destination"))
                }
                (false, PortRef::NodeOut(..)) => {
                    Err(err(line, "a node output cannot be a wire destination"))
                }
                (_, port) => Ok(port),
            })
        };
        let mut wires = Vec::with_capacity(self.raw_wires.len());
        for (line, src, dst) in self.raw_wires {
            wires.push(Wire { src: resolve(line, src, true)?, dst: resolve(line, dst, false)? });
        }
        let d = Diagram {
            name: self.name,
            inputs: self.inputs,
            outputs: self.outputs,
            nodes: self.nodes,
            wires,
        };
        d.validate().map_err(|e| err(self.line, e.to_string()))?;
        Ok(d)
    }
}

/// Parses every diagram in the text.
pub fn parse(text: &str) -> Result<Vec<Diagram>, AlgebraError> {
    let mut done: Vec<Diagram> = Vec::new();
    let mut current: Option<PendingDiagram> = None;

    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let no_comment = raw_line.split('#').next().unwrap_or("");
        for stmt in no_comment.split(['{', '}', ';']) {
            let spaced = stmt.replace("->", " -> ");
            let tokens: Vec<&str> = spaced.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            match tokens[0] {
                "diagram" => {
                    if let Some(pending) = current.take() {
                        done.push(pending.finish()?);
                    }
                    current = Some(parse_header(line, &tokens)?);
                }
                "node" => {
                    let d = current
                        .as_mut()
                        .ok_or_else(|| err(line, "node statement before any diagram header"))?;
                    let node = parse_node(line, &tokens)?;
                    if d.nodes.iter().any(|n| n.id == node.id) {
                        return Err(err(line, format!("duplicate node id {:?}", node.id)));
                    }
                    d.nodes.push(node);
                }
                first => {
                    // `wire SRC -> DST`, with the keyword optional.
                    let rest: &[&str] =
                        if first == "wire" { &tokens[1..] } else { &tokens[..] };
                    if rest.len() != 3 || rest[1] != "->" {
                        if first == "wire" {
                            return Err(err(line, "expected: wire SRC -> DST"));
                        }
                        return Err(err(line, format!("unknown statement {first:?}")));
                    }
                    let d = current
                        .as_mut()
                        .ok_or_else(|| err(line, "wire statement before any diagram header"))?;
                    let src = parse_ref(line, rest[0])?;
                    let dst = parse_ref(line, rest[2])?;
                    d.raw_wires.push((line, src, dst));
                }
            }
        }
    }
    if let Some(pending) = current.take() {
        done.push(pending.finish()?);
    }
    if done.is_empty() {
        return Err(AlgebraError::Parse("no diagram found in input".into()));
    }
    Ok(done)
}

/// Parses a text that must contain exactly one diagram.
pub fn parse_one(text: &str) -> Result<Diagram, AlgebraError> {
    let mut all = parse(text)?;
    if all.len() != 1 {
        return Err(AlgebraError::Parse(format!(
            "expected exactly one diagram, found {}",
            all.len()
        )));
    }
    Ok(all.pop().unwrap())
}

fn parse_header(line: usize, tokens: &[&str]) -> Result<PendingDiagram, AlgebraError> {
    // Accept `diagram NAME : P -> Q`, with the colon attached or missing.
    let mut parts: Vec<String> = Vec::new();
    for tok in &tokens[1..] {
        for piece in tok.split(':') {
            if !piece.is_empty() {
                parts.push(piece.to_string());
            }
        }
    }
    if parts.len() != 4 || parts[2] != "->" {
        return Err(err(line, "expected: diagram NAME : INPUTS -> OUTPUTS"));
    }
    let name = parts[0].clone();
    if !is_ident(&name) {
        return Err(err(line, format!("bad diagram name {name:?}")));
    }
    let count = |what: &str, s: &String| {
        s.parse::<usize>().map_err(|_| err(line, format!("bad {what} count {s:?}")))
    };
    Ok(PendingDiagram {
        line,
        name,
        inputs: count("input", &parts[1])?,
        outputs: count("output", &parts[3])?,
        nodes: Vec::new(),
        raw_wires: Vec::new(),
    })
}

fn parse_node(line: usize, tokens: &[&str]) -> Result<Node, AlgebraError> {
    if tokens.len() < 3 {
        return Err(err(line, "expected: node ID KIND"));
    }
    let id = tokens[1].to_string();
    if !is_ident(&id) {
        return Err(err(line, format!("bad node id {id:?}")));
    }
    if looks_like_port(&id) {
        return Err(err(line, format!("node id {id:?} would shadow a diagram port name")));
    }
    // Rejoin so that `endo : f` and `endo: f` both read as `endo:f`.
    let kind_text: String = tokens[2..].concat();
    let kind = match kind_text.as_str() {
        "m" => NodeKind::M,
        "delta" => NodeKind::Delta,
        "s" => NodeKind::S,
        "sinv" => NodeKind::SInv,
        "eta" => NodeKind::Eta,
        "eps" => NodeKind::Eps,
        "id" => NodeKind::Id,
        other => match other.strip_prefix("endo:") {
            Some(name) if is_ident(name) => NodeKind::Endo(name.to_string()),
            _ => {
                return Err(err(
                    line,
                    format!("unknown node kind {other:?} (m, delta, s, sinv, eta, eps, id, endo:NAME)"),
                ));
            }
        },
    };
    Ok(Node { id, kind })
}
