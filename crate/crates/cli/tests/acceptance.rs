//! Release gate: one test per headline property of the engine, each run
//! over the full builtin corpus (trivial, the seven small group algebras,
//! and the Sweedler algebra over both ℚ and GF(7), plus the dimension-9
//! Taft algebra over GF(7)) and each printing a single pass/fail line.
//!
//! The final test is a negative control: it corrupts an algebra and checks
//! that the gate actually notices, both in-process and through the CLI.

use std::sync::OnceLock;

use hopfint_core::crosscheck::diagram_cross_checks;
use hopfint_core::endo::{pair, partial_trace_left, rank_one};
use hopfint_core::hopf::{builtin, to_json, HopfAlgebra, VariantKind};
use hopfint_core::integrals::{
    antipode_from_pair, cal_e_matrix, cal_q, cal_q_partial_trace, check_suite,
    dual_integral_space, frobenius, integral_space, kuperberg_p, kuperberg_q, normalize_pair,
    q_from_traces, rank_one_factors, ladder, ladder_inverse, LadderKind, Side,
};
use hopfint_core::matrix::Mat;
use hopfint_core::report::CheckReport;
use hopfint_core::scalar::{FieldSpec, Scalar};

fn corpus() -> &'static [(String, HopfAlgebra)] {
    static CORPUS: OnceLock<Vec<(String, HopfAlgebra)>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let names = [
            "trivial", "sweedler", "group:c2", "group:c4", "group:c2c2", "group:c8",
            "group:s3", "group:d4", "group:q8",
        ];
        let mut out = Vec::new();
        for name in names {
            for field in [FieldSpec::rational(), FieldSpec::prime(7).unwrap()] {
                let h = builtin(name, field).expect("builtin corpus algebra");
                out.push((format!("{name} over {field}"), h));
            }
        }
        let gf7 = FieldSpec::prime(7).unwrap();
        out.push(("taft:3 over GF(7)".into(), builtin("taft:3", gf7).expect("taft")));
        out
    })
}

/// One identity-suite report per corpus algebra, computed once and shared
/// by every criterion that consults suite entries.
fn suite_reports() -> &'static [CheckReport] {
    static REPORTS: OnceLock<Vec<CheckReport>> = OnceLock::new();
    REPORTS.get_or_init(|| corpus().iter().map(|(_, h)| check_suite(h)).collect())
}

fn criterion(number: usize, title: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("criterion {number:2} ({title}): pass"),
        Err(why) => {
            println!("criterion {number:2} ({title}): FAIL — {why}");
            panic!("criterion {number} ({title}) failed: {why}");
        }
    }
}

fn per_algebra(
    mut body: impl FnMut(&HopfAlgebra) -> Result<(), String>,
) -> Result<(), String> {
    for (label, h) in corpus() {
        body(h).map_err(|why| format!("[{label}] {why}"))?;
    }
    Ok(())
}

fn per_report(
    mut body: impl FnMut(&HopfAlgebra, &CheckReport) -> Result<(), String>,
) -> Result<(), String> {
    for ((label, h), report) in corpus().iter().zip(suite_reports()) {
        body(h, report).map_err(|why| format!("[{label}] {why}"))?;
    }
    Ok(())
}

fn expect(cond: bool, why: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why.into())
    }
}

fn entry_passes(report: &CheckReport, id: &str) -> Result<(), String> {
    let entry = report.entry(id).ok_or_else(|| format!("suite has no entry {id:?}"))?;
    if entry.pass {
        return Ok(());
    }
    let mut why = format!("suite entry {id} failed");
    if let Some(at) = &entry.counterexample {
        why.push_str(&format!(" at {at:?}"));
    }
    if let Some(note) = &entry.note {
        why.push_str(&format!(": {note}"));
    }
    Err(why)
}

/// The unique basis vector of a space asserted to be one-dimensional.
fn only(space: Vec<Vec<Scalar>>, what: &str) -> Result<Vec<Scalar>, String> {
    expect(space.len() == 1, format!("{what} has dimension {}", space.len()))?;
    Ok(space.into_iter().next().unwrap())
}

/// `v` is a nonzero scalar multiple of `w`.
fn proportional(v: &[Scalar], w: &[Scalar]) -> bool {
    let Some(k) = v.iter().position(|c| !c.is_zero()) else {
        return false;
    };
    if w[k].is_zero() {
        return false;
    }
    let Ok(inv) = w[k].inv() else { return false };
    let ratio = v[k].mul(&inv);
    v.iter().zip(w).all(|(a, b)| *a == b.mul(&ratio))
}

#[test]
fn criterion_01_axioms_hold_on_the_corpus_and_its_variants() {
    criterion(1, "axioms on every corpus algebra and on dual/op/cop", || {
        per_algebra(|h| {
            let mut family = vec![h.clone(), h.dual()];
            for kind in [VariantKind::Op, VariantKind::Cop] {
                family.push(h.variant(kind));
            }
            for g in &family {
                let report = g.verify_axioms();
                if !report.all_pass() {
                    let ids: Vec<&str> =
                        report.failures().map(|e| e.id.as_str()).collect();
                    return Err(format!("{} fails {}", g.name(), ids.join(", ")));
                }
            }
            Ok(())
        })
    });
}

#[test]
fn criterion_02_projection_has_unit_trace() {
    criterion(2, "trace of the projection P is exactly 1", || {
        per_algebra(|h| {
            let t = kuperberg_p(h).trace();
            expect(t.is_one(), format!("tr(P) = {t}"))
        })
    });
}

#[test]
fn criterion_03_all_four_integral_spaces_are_lines() {
    criterion(3, "all four integral spaces have dimension exactly 1", || {
        per_algebra(|h| {
            for (side, what) in [(Side::Left, "left"), (Side::Right, "right")] {
                only(integral_space(h, side), &format!("{what} integral space"))?;
                only(dual_integral_space(h, side), &format!("{what} cointegral space"))?;
            }
            Ok(())
        })
    });
}

#[test]
fn criterion_04_p_is_the_normalized_right_pair_and_idempotent() {
    criterion(4, "P = λ⊗Λ for the normalized right pair, and P² = P", || {
        per_algebra(|h| {
            let lam = only(dual_integral_space(h, Side::Right), "right cointegral space")?;
            let big = only(integral_space(h, Side::Right), "right integral space")?;
            let (lam, big) = normalize_pair(h, &lam, &big)
                .ok_or("pairing of the right pair is zero")?;
            expect(pair(h, &lam, &big).is_one(), "normalization failed")?;
            let p = kuperberg_p(h);
            expect(rank_one(h, &lam, &big) == p, "P differs from λ⊗Λ")?;
            expect(p.mul(&p) == p, "P is not idempotent")
        })
    });
}

#[test]
fn criterion_05_q_agrees_with_its_trace_form_and_rank_one_form() {
    criterion(5, "Q = trace-assembled matrix = normalized (cointegral, left integral) pair", || {
        per_algebra(|h| {
            let q = kuperberg_q(h);
            expect(q_from_traces(h) == q, "Q differs from its trace assembly")?;
            let lam = only(dual_integral_space(h, Side::Right), "right cointegral space")?;
            let big = only(integral_space(h, Side::Left), "left integral space")?;
            let (lam, big) = normalize_pair(h, &lam, &big)
                .ok_or("pairing of the (cointegral, left integral) pair is zero")?;
            expect(rank_one(h, &lam, &big) == q, "Q differs from λ⊗Λ")
        })
    });
}

#[test]
fn criterion_06_slide_and_trace_identities_hold_exhaustively() {
    criterion(6, "cointegral slide and Q trace formula over all basis tuples", || {
        per_report(|_, report| {
            entry_passes(report, "cointegral_slide")?;
            entry_passes(report, "q_trace_formula")
        })
    });
}

#[test]
fn criterion_07_ladders_compose_with_their_inverses_to_the_identity() {
    criterion(7, "all four ladders invert from both sides on A⊗A", || {
        per_algebra(|h| {
            let id2 = Mat::identity(h.field(), h.dim() * h.dim());
            for kind in LadderKind::ALL {
                let fwd = ladder(h, kind);
                let back = ladder_inverse(h, kind);
                expect(
                    fwd.mul(&back) == id2 && back.mul(&fwd) == id2,
                    format!("ladder {} does not invert", kind.index()),
                )?;
            }
            Ok(())
        })
    });
}

#[test]
fn criterion_08_trace_map_properties() {
    criterion(8, "trace map: rank-ones, invertibility, intertwining, E(s⁻²)", || {
        per_report(|h, report| {
            expect(cal_e_matrix(h).inverse().is_some(), "E matrix is singular")?;
            for id in [
                "e_on_rank_ones",
                "e_invertible",
                "e_intertwines_elements",
                "e_intertwines_functionals",
                "r_ell_commutation",
                "r_functional_slide",
                "calp_integral_cointegral",
                "calp_trace_nonzero",
                "p_trace_formulas",
                "p_via_e_cop",
            ] {
                entry_passes(report, id)?;
            }
            Ok(())
        })
    });
}

#[test]
fn criterion_09_partial_trace_of_the_big_q_gives_p() {
    criterion(9, "partial trace over the first leg of 𝒬 equals P", || {
        per_algebra(|h| {
            let p = kuperberg_p(h);
            expect(cal_q_partial_trace(h) == p, "(tr⊗1)(𝒬) differs from P")?;
            expect(
                partial_trace_left(&cal_q(h), h.dim()) == p,
                "direct partial trace differs from P",
            )
        })
    });
}

#[test]
fn criterion_10_frobenius_map_and_antipode_reconstruction() {
    criterion(10, "Frobenius map bijective with both relations; s rebuilt from the pair", || {
        per_report(|h, report| {
            let lam = only(dual_integral_space(h, Side::Right), "right cointegral space")?;
            expect(frobenius(h, &lam).inverse().is_some(), "Frobenius map is singular")?;
            entry_passes(report, "frobenius_bijective")?;
            entry_passes(report, "frobenius_relations")?;
            let big = only(integral_space(h, Side::Right), "right integral space")?;
            let (lam, big) =
                normalize_pair(h, &lam, &big).ok_or("right pair does not normalize")?;
            expect(
                antipode_from_pair(h, &lam, &big) == *h.s(),
                "reconstructed antipode differs from s",
            )?;
            entry_passes(report, "antipode_from_integral_pair")
        })
    });
}

#[test]
fn criterion_11_diagram_evaluation_agrees_with_the_direct_formulas() {
    criterion(11, "diagram evaluation matches the matrix formulas everywhere", || {
        per_algebra(|h| {
            let report = diagram_cross_checks(h);
            if report.all_pass() {
                Ok(())
            } else {
                let ids: Vec<&str> = report.failures().map(|e| e.id.as_str()).collect();
                Err(format!("failing diagram checks: {}", ids.join(", ")))
            }
        })
    });
}

#[test]
fn criterion_12_rank_one_decompositions_land_in_the_integral_spaces() {
    criterion(12, "P, Q, and E(s⁻²) split as rank one with integral factors", || {
        per_report(|h, report| {
            let coint_r = only(dual_integral_space(h, Side::Right), "right cointegral space")?;
            let int_r = only(integral_space(h, Side::Right), "right integral space")?;
            let int_l = only(integral_space(h, Side::Left), "left integral space")?;

            let (lam, big) =
                rank_one_factors(&kuperberg_p(h)).ok_or("P is not rank one")?;
            expect(proportional(&lam, &coint_r), "functional factor of P not a right cointegral")?;
            expect(proportional(&big, &int_r), "element factor of P not a right integral")?;
            expect(pair(h, &lam, &big).is_one(), "factors of P are not normalized")?;

            let (lam, big) =
                rank_one_factors(&kuperberg_q(h)).ok_or("Q is not rank one")?;
            expect(proportional(&lam, &coint_r), "functional factor of Q not a right cointegral")?;
            expect(proportional(&big, &int_l), "element factor of Q not a left integral")?;
            expect(pair(h, &lam, &big).is_one(), "factors of Q are not normalized")?;

            entry_passes(report, "p_rank_one_factors")?;
            entry_passes(report, "q_rank_one_pair")?;
            entry_passes(report, "calp_rank_one_factors")
        })
    });
}

#[test]
fn criterion_13_negative_control_is_detected() {
    criterion(13, "an inverted sweedler antipode breaks criterion 4 and check-paper", || {
        let good = builtin("sweedler", FieldSpec::rational()).unwrap();
        let bad = good.with_antipode(good.s_inv().clone()).expect("still invertible");

        // The rank-one identity of criterion 4 must now fail: the pairing
        // of the factors flips sign, so P is no longer λ⊗Λ normalized.
        let lam = only(dual_integral_space(&bad, Side::Right), "right cointegral space")?;
        let big = only(integral_space(&bad, Side::Right), "right integral space")?;
        let (lam, big) =
            normalize_pair(&bad, &lam, &big).ok_or("right pair does not normalize")?;
        expect(
            rank_one(&bad, &lam, &big) != kuperberg_p(&bad),
            "corrupted algebra still satisfies P = λ⊗Λ",
        )?;
        let report = check_suite(&bad);
        expect(
            !report.entry("p_equals_normalized_pair").unwrap().pass,
            "suite misses the corrupted projection",
        )?;
        expect(
            !report.entry("p_rank_one_factors").unwrap().pass,
            "suite misses the unnormalized factors",
        )?;

        // And the CLI gate must exit 1 on the same input.
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let path = dir.path().join("corrupted.json");
        std::fs::write(&path, to_json(&bad)).map_err(|e| e.to_string())?;
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_hopfint"))
            .args(["check-paper", path.to_str().unwrap()])
            .env("HOPFINT_COLOR", "0")
            .output()
            .map_err(|e| e.to_string())?;
        expect(
            out.status.code() == Some(1),
            format!("check-paper exited {:?}, expected 1", out.status.code()),
        )?;
        let stdout = String::from_utf8_lossy(&out.stdout);
        expect(
            stdout.contains("p_equals_normalized_pair\tFAIL"),
            "check-paper output does not name the broken identity",
        )
    });
}
