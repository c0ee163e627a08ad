//! Cross-checks between the diagram evaluators and the direct
//! structure-constant computations.
//!
//! Every quantity that the crate can compute two ways is computed both
//! ways here and compared entry by entry: the projection endomorphisms,
//! the ladder maps and their inverses, the two-output transform and its
//! partial trace, and a closed trace loop.  On top of that, every
//! bundled diagram is run through both the planned and the brute-force
//! evaluator.  Agreement is strong evidence against a systematic error
//! on either side, since the two sides share no intermediate code.

use crate::diagram::{
    builtin_diagram, builtin_diagram_names, evaluate, evaluate_naive, Bindings, TensorValue,
};
use crate::endo::partial_trace_left;
use crate::hopf::{AlgebraError, HopfAlgebra};
use crate::integrals::{self, LadderKind};
use crate::matrix::Mat;
use crate::report::{CheckEntry, CheckReport};

type CheckResult = Result<(), (Option<Vec<usize>>, String)>;

fn fail(cx: Option<Vec<usize>>, note: impl Into<String>) -> CheckResult {
    Err((cx, note.into()))
}

fn first_diff(a: &Mat, b: &Mat) -> Option<(usize, usize)> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Some((0, 0));
    }
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            if a.get(r, c) != b.get(r, c) {
                return Some((r, c));
            }
        }
    }
    None
}

fn expect_eq(a: &Mat, b: &Mat, note: &str) -> CheckResult {
    match first_diff(a, b) {
        None => Ok(()),
        Some((r, c)) => fail(Some(vec![r, c]), note.to_string()),
    }
}

/// Evaluates a bundled diagram with the planned evaluator.
fn run(h: &HopfAlgebra, name: &str, bind: &Bindings) -> Result<TensorValue, AlgebraError> {
    evaluate(h, &builtin_diagram(name)?, bind)
}

/// Compares diagram evaluation against the direct computations on one
/// algebra.  All entries are independent; a failure in one leaves the
/// others meaningful.
pub fn diagram_cross_checks(h: &HopfAlgebra) -> CheckReport {
    let none = Bindings::new();
    let n = h.dim();
    let mut entries: Vec<CheckEntry> = Vec::new();
    let mut push = |id: &str, outcome: CheckResult| {
        entries.push(CheckEntry::of(id, outcome));
    };

    let must = |name: &str, bind: &Bindings| -> Result<TensorValue, String> {
        run(h, name, bind).map_err(|e| format!("diagram {name} failed to evaluate: {e}"))
    };
    let as_err = |msg: String| -> CheckResult { fail(None, msg) };

    push(
        "p_diagram_matches",
        match must("p", &none) {
            Ok(v) => expect_eq(
                v.to_endo().expect("p is 1 -> 1"),
                &integrals::kuperberg_p(h),
                "diagram p differs from the structure-constant sum",
            ),
            Err(e) => as_err(e),
        },
    );
    push(
        "q_diagram_matches",
        match must("q", &none) {
            Ok(v) => expect_eq(
                v.to_endo().expect("q is 1 -> 1"),
                &integrals::kuperberg_q(h),
                "diagram q differs from the structure-constant sum",
            ),
            Err(e) => as_err(e),
        },
    );

    for (id, lhs, rhs) in [
        ("associativity_diagrams_agree", "assoc_lhs", "assoc_rhs"),
        ("coassociativity_diagrams_agree", "coassoc_lhs", "coassoc_rhs"),
        ("bialgebra_diagrams_agree", "bialgebra_lhs", "bialgebra_rhs"),
    ] {
        push(
            id,
            match (must(lhs, &none), must(rhs, &none)) {
                (Ok(a), Ok(b)) => expect_eq(a.mat(), b.mat(), &format!("{lhs} != {rhs}")),
                (Err(e), _) | (_, Err(e)) => as_err(e),
            },
        );
    }

    push(
        "antipode_diagrams_agree",
        match (must("antipode_left", &none), must("antipode_right", &none), must("unit_law", &none))
        {
            (Ok(l), Ok(r), Ok(u)) => expect_eq(l.mat(), u.mat(), "antipode_left != unit_law")
                .and_then(|()| expect_eq(r.mat(), u.mat(), "antipode_right != unit_law")),
            (Err(e), ..) | (_, Err(e), _) | (.., Err(e)) => as_err(e),
        },
    );

    let ladder_pair = |kind: LadderKind| -> Result<(TensorValue, TensorValue), String> {
        let idx = kind.index();
        Ok((must(&format!("ladder{idx}"), &none)?, must(&format!("ladder{idx}_inv"), &none)?))
    };
    push(
        "ladder_diagrams_match",
        LadderKind::ALL.into_iter().try_for_each(|kind| match ladder_pair(kind) {
            Ok((fwd, _)) => expect_eq(
                fwd.to_endo2().expect("ladders are 2 -> 2"),
                &integrals::ladder(h, kind),
                &format!("diagram ladder{} differs from the direct map", kind.index()),
            ),
            Err(e) => as_err(e),
        }),
    );
    push(
        "ladder_inverse_diagrams_match",
        LadderKind::ALL.into_iter().try_for_each(|kind| match ladder_pair(kind) {
            Ok((_, inv)) => expect_eq(
                inv.to_endo2().expect("ladders are 2 -> 2"),
                &integrals::ladder_inverse(h, kind),
                &format!("diagram ladder{}_inv differs from the direct map", kind.index()),
            ),
            Err(e) => as_err(e),
        }),
    );
    push(
        "ladder_diagrams_compose_to_identity",
        LadderKind::ALL.into_iter().try_for_each(|kind| match ladder_pair(kind) {
            Ok((fwd, inv)) => {
                let eye = Mat::identity(h.field(), n * n);
                let f = fwd.to_endo2().expect("2 -> 2");
                let i = inv.to_endo2().expect("2 -> 2");
                expect_eq(
                    &f.mul(i),
                    &eye,
                    &format!("ladder{0} ∘ ladder{0}_inv != id", kind.index()),
                )
                .and_then(|()| {
                    expect_eq(
                        &i.mul(f),
                        &eye,
                        &format!("ladder{0}_inv ∘ ladder{0} != id", kind.index()),
                    )
                })
            }
            Err(e) => as_err(e),
        }),
    );

    push(
        "calq_diagram_matches",
        match must("calq", &none) {
            Ok(v) => expect_eq(
                v.to_endo2().expect("calq is 2 -> 2"),
                &integrals::cal_q(h),
                "diagram calq differs from the direct map",
            ),
            Err(e) => as_err(e),
        },
    );
    push(
        "calq_partial_trace_matches_p",
        match (must("calq", &none), must("p", &none)) {
            (Ok(cq), Ok(p)) => expect_eq(
                &partial_trace_left(cq.to_endo2().expect("2 -> 2"), n),
                p.to_endo().expect("1 -> 1"),
                "partial trace of diagram calq differs from diagram p",
            ),
            (Err(e), _) | (_, Err(e)) => as_err(e),
        },
    );

    push("trace_diagram_matches", {
        let mut bind = Bindings::new();
        bind.insert("f", h.s().clone());
        match must("trace_endo", &bind) {
            Ok(v) => {
                let got = v.scalar().expect("trace_endo is 0 -> 0");
                if *got == h.s().trace() {
                    Ok(())
                } else {
                    fail(
                        None,
                        format!("closed loop gave {got}, matrix trace gave {}", h.s().trace()),
                    )
                }
            }
            Err(e) => as_err(e),
        }
    });

    push("evaluators_agree", {
        let mut bind = Bindings::new();
        bind.insert("f", h.s().mul(h.s()));
        builtin_diagram_names().into_iter().try_for_each(|name| {
            let d = match builtin_diagram(name) {
                Ok(d) => d,
                Err(e) => return fail(None, format!("builtin {name}: {e}")),
            };
            let fast = evaluate(h, &d, &bind);
            let slow = evaluate_naive(h, &d, &bind);
            match (fast, slow) {
                (Ok(a), Ok(b)) => expect_eq(
                    a.mat(),
                    b.mat(),
                    &format!("planned and brute-force evaluation of {name} differ"),
                ),
                (Err(e), _) | (_, Err(e)) => fail(None, format!("evaluating {name}: {e}")),
            }
        })
    });

    CheckReport::new(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtin;
    use crate::scalar::FieldSpec;

    const IDS: &[&str] = &[
        "p_diagram_matches",
        "q_diagram_matches",
        "associativity_diagrams_agree",
        "coassociativity_diagrams_agree",
        "bialgebra_diagrams_agree",
        "antipode_diagrams_agree",
        "ladder_diagrams_match",
        "ladder_inverse_diagrams_match",
        "ladder_diagrams_compose_to_identity",
        "calq_diagram_matches",
        "calq_partial_trace_matches_p",
        "trace_diagram_matches",
        "evaluators_agree",
    ];

    #[test]
    fn cross_checks_pass_on_the_full_builtin_range() {
        let fields = [FieldSpec::rational(), FieldSpec::prime(7).unwrap()];
        let mut ran = 0;
        for name in crate::hopf::builtin_names() {
            let name = if name.contains("<n>") { "taft:3" } else { name };
            for field in fields {
                let Ok(h) = builtin(name, field) else { continue };
                let report = diagram_cross_checks(&h);
                let ids: Vec<&str> = report.entries.iter().map(|e| e.id.as_str()).collect();
                assert_eq!(ids, IDS, "entry ids changed on {}", h.name());
                assert!(
                    report.all_pass(),
                    "{} over {field}:\n{}",
                    h.name(),
                    report.to_lines()
                );
                ran += 1;
            }
        }
        assert!(ran >= 18, "expected the whole builtin range, ran {ran}");
    }

    #[test]
    fn cross_checks_catch_a_corrupted_antipode() {
        let good = builtin("sweedler", FieldSpec::rational()).unwrap();
        let bad = good.with_antipode(good.s_inv().clone()).unwrap();
        let report = diagram_cross_checks(&bad);
        // The diagram side and the direct side are corrupted in the same
        // way, so internal agreement survives...
        assert!(report.entry("p_diagram_matches").unwrap().pass);
        assert!(report.entry("evaluators_agree").unwrap().pass);
        // ...but identities that genuinely need the antipode fail.
        let broken = report.entry("antipode_diagrams_agree").unwrap();
        assert!(!broken.pass);
        assert!(broken.counterexample.is_some());
        assert!(!report.entry("ladder_diagrams_compose_to_identity").unwrap().pass);
        assert!(!report.all_pass());
    }
}
