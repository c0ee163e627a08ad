//! A library of ready-made diagrams: the defining axioms, the two
//! projection endomorphisms, the four ladder maps with their inverses,
//! the two-output transform whose partial trace recovers the projection,
//! and a closed loop that traces a bound endomorphism.

use super::{parse_one, Diagram};
use crate::hopf::AlgebraError;

/// `(name, source text)` for every bundled diagram.
const BUILTINS: &[(&str, &str)] = &[
    // The distinguished endomorphism built from m, delta and two
    // antipodes; it projects onto the span of a one-sided invariant.
    (
        "p",
        "diagram p : 1 -> 1
         node mu m
         node s1 s
         node cp delta
         node s2 s
         wire in1 -> mu.in2
         wire mu.out1 -> s1.in1
         wire s1.out1 -> cp.in1
         wire cp.out1 -> s2.in1
         wire s2.out1 -> mu.in1
         wire cp.out2 -> out1",
    ),
    // The companion endomorphism with the antipodes on the loop side.
    (
        "q",
        "diagram q : 1 -> 1
         node mu m
         node cp delta
         node s1 s
         node s2 s
         wire in1 -> mu.in2
         wire mu.out1 -> cp.in1
         wire cp.out1 -> out1
         wire cp.out2 -> s1.in1
         wire s1.out1 -> s2.in1
         wire s2.out1 -> mu.in1",
    ),
    // Two-input form: multiply, apply the antipode, comultiply, and hit
    // the first leg with the antipode again.  Its partial trace over the
    // first factor is the `p` endomorphism.
    (
        "calq",
        "diagram calq : 2 -> 2
         node mu m
         node s1 s
         node cp delta
         node s2 s
         wire in1 -> mu.in1
         wire in2 -> mu.in2
         wire mu.out1 -> s1.in1
         wire s1.out1 -> cp.in1
         wire cp.out1 -> s2.in1
         wire s2.out1 -> out1
         wire cp.out2 -> out2",
    ),
    (
        "assoc_lhs",
        "diagram assoc_lhs : 3 -> 1
         node a m
         node b m
         wire in1 -> a.in1
         wire in2 -> a.in2
         wire a.out1 -> b.in1
         wire in3 -> b.in2
         wire b.out1 -> out1",
    ),
    (
        "assoc_rhs",
        "diagram assoc_rhs : 3 -> 1
         node a m
         node b m
         wire in2 -> a.in1
         wire in3 -> a.in2
         wire in1 -> b.in1
         wire a.out1 -> b.in2
         wire b.out1 -> out1",
    ),
    (
        "coassoc_lhs",
        "diagram coassoc_lhs : 1 -> 3
         node a delta
         node b delta
         wire in1 -> a.in1
         wire a.out1 -> b.in1
         wire b.out1 -> out1
         wire b.out2 -> out2
         wire a.out2 -> out3",
    ),
    (
        "coassoc_rhs",
        "diagram coassoc_rhs : 1 -> 3
         node a delta
         node b delta
         wire in1 -> a.in1
         wire a.out1 -> out1
         wire a.out2 -> b.in1
         wire b.out1 -> out2
         wire b.out2 -> out3",
    ),
    // Comultiplication of a product...
    (
        "bialgebra_lhs",
        "diagram bialgebra_lhs : 2 -> 2
         node mu m
         node cp delta
         wire in1 -> mu.in1
         wire in2 -> mu.in2
         wire mu.out1 -> cp.in1
         wire cp.out1 -> out1
         wire cp.out2 -> out2",
    ),
    // ...equals the product of comultiplications, with the middle legs
    // crossing.
    (
        "bialgebra_rhs",
        "diagram bialgebra_rhs : 2 -> 2
         node ca delta
         node cb delta
         node m1 m
         node m2 m
         wire in1 -> ca.in1
         wire in2 -> cb.in1
         wire ca.out1 -> m1.in1
         wire cb.out1 -> m1.in2
         wire ca.out2 -> m2.in1
         wire cb.out2 -> m2.in2
         wire m1.out1 -> out1
         wire m2.out1 -> out2",
    ),
    // m(s ⊗ 1)delta, the left convolution inverse law...
    (
        "antipode_left",
        "diagram antipode_left : 1 -> 1
         node cp delta
         node tw s
         node mu m
         wire in1 -> cp.in1
         wire cp.out1 -> tw.in1
         wire tw.out1 -> mu.in1
         wire cp.out2 -> mu.in2
         wire mu.out1 -> out1",
    ),
    // ...and its mirror m(1 ⊗ s)delta...
    (
        "antipode_right",
        "diagram antipode_right : 1 -> 1
         node cp delta
         node tw s
         node mu m
         wire in1 -> cp.in1
         wire cp.out1 -> mu.in1
         wire cp.out2 -> tw.in1
         wire tw.out1 -> mu.in2
         wire mu.out1 -> out1",
    ),
    // ...both of which must equal unit-after-counit.
    (
        "unit_law",
        "diagram unit_law : 1 -> 1
         node e eps
         node u eta
         wire in1 -> e.in1
         wire u.out1 -> out1",
    ),
    // The four ladder maps on A ⊗ A.  Output 1 carries the product.
    (
        "ladder1",
        "diagram ladder1 : 2 -> 2
         node cp delta
         node mu m
         wire in1 -> mu.in1
         wire in2 -> cp.in1
         wire cp.out1 -> mu.in2
         wire cp.out2 -> out2
         wire mu.out1 -> out1",
    ),
    (
        "ladder1_inv",
        "diagram ladder1_inv : 2 -> 2
         node cp delta
         node tw s
         node mu m
         wire in1 -> mu.in1
         wire in2 -> cp.in1
         wire cp.out1 -> tw.in1
         wire tw.out1 -> mu.in2
         wire cp.out2 -> out2
         wire mu.out1 -> out1",
    ),
    (
        "ladder2",
        "diagram ladder2 : 2 -> 2
         node cp delta
         node mu m
         wire in1 -> mu.in1
         wire in2 -> cp.in1
         wire cp.out2 -> mu.in2
         wire cp.out1 -> out2
         wire mu.out1 -> out1",
    ),
    (
        "ladder2_inv",
        "diagram ladder2_inv : 2 -> 2
         node cp delta
         node tw sinv
         node mu m
         wire in1 -> mu.in1
         wire in2 -> cp.in1
         wire cp.out2 -> tw.in1
         wire tw.out1 -> mu.in2
         wire cp.out1 -> out2
         wire mu.out1 -> out1",
    ),
    (
        "ladder3",
        "diagram ladder3 : 2 -> 2
         node cp delta
         node mu m
         wire in1 -> mu.in2
         wire in2 -> cp.in1
         wire cp.out1 -> mu.in1
         wire cp.out2 -> out2
         wire mu.out1 -> out1",
    ),
    (
        "ladder3_inv",
        "diagram ladder3_inv : 2 -> 2
         node cp delta
         node tw sinv
         node mu m
         wire in1 -> mu.in2
         wire in2 -> cp.in1
         wire cp.out1 -> tw.in1
         wire tw.out1 -> mu.in1
         wire cp.out2 -> out2
         wire mu.out1 -> out1",
    ),
    (
        "ladder4",
        "diagram ladder4 : 2 -> 2
         node cp delta
         node mu m
         wire in1 -> mu.in2
         wire in2 -> cp.in1
         wire cp.out2 -> mu.in1
         wire cp.out1 -> out2
         wire mu.out1 -> out1",
    ),
    (
        "ladder4_inv",
        "diagram ladder4_inv : 2 -> 2
         node cp delta
         node tw s
         node mu m
         wire in1 -> mu.in2
         wire in2 -> cp.in1
         wire cp.out2 -> tw.in1
         wire tw.out1 -> mu.in1
         wire cp.out1 -> out2
         wire mu.out1 -> out1",
    ),
    // A closed loop: the trace of a bound endomorphism, as a 0 -> 0
    // diagram.
    (
        "trace_endo",
        "diagram trace_endo : 0 -> 0
         node f endo:f
         wire f.out1 -> f.in1",
    ),
];

/// Names of the bundled diagrams, in a stable order.
pub fn builtin_diagram_names() -> Vec<&'static str> {
    BUILTINS.iter().map(|(name, _)| *name).collect()
}

/// Parses and returns the bundled diagram with the given name.
pub fn builtin_diagram(name: &str) -> Result<Diagram, AlgebraError> {
    let (_, text) = BUILTINS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| AlgebraError::UnknownBuiltin(name.to_string()))?;
    parse_one(text)
}

/// Source text of the bundled diagram with the given name.
pub fn builtin_diagram_text(name: &str) -> Result<&'static str, AlgebraError> {
    BUILTINS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
        .ok_or_else(|| AlgebraError::UnknownBuiltin(name.to_string()))
}
