//! Acceptance suite: eleven numbered end-to-end checks, each printing one
//! `ACCEPTANCE n: PASS/FAIL` line (run with `--nocapture` to see the PASS
//! lines; FAIL lines always surface in the panic output).
//!
//! Every expected value below was frozen from an independent computation
//! (hand enumeration, a separate script, or closed-form counting) before
//! being wired into this file. A failing check therefore means the
//! implementation and the pinned expectation disagree, and the failure
//! message states which side the evidence supports. Wall-clock budgets are
//! part of the contract and are asserted, not advisory.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use am_designs::am::{am_condition, check_am_guarantee};
use am_designs::code::{
    construct_extended_golay, construct_golay, construct_golay_dual, LinearCode,
};
use am_designs::criteria::{
    check_sphere_identity, diophantine_scan, scan_criterion, IdentityVariant,
};
use am_designs::design::{delta_and_s, is_t_design, support_design};
use am_designs::harmonic::{
    dual_transform, harm_basis, harmonic_design_check, proportional_with_scalar,
    solve_dual_vanishing, HarmonicAnalyzer, HarmonicContext, HarmonicEnumerator, Limits,
};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Pinned wall-clock budgets, one per check. A correct result delivered over
/// budget is reported as a failure of that check.
const CLI_CALL_BUDGET: Duration = Duration::from_secs(1); // check 1, per invocation
const CLI_TOTAL_BUDGET: Duration = Duration::from_secs(3); // check 1, both invocations
const DISTRIBUTION_BUDGET: Duration = Duration::from_secs(1); // check 2
const STRENGTH_BUDGET: Duration = Duration::from_secs(30); // check 3
const GUARANTEE_BUDGET: Duration = Duration::from_secs(120); // check 4
const AGREEMENT_BUDGET: Duration = Duration::from_secs(600); // check 5
const PROPORTIONALITY_BUDGET: Duration = Duration::from_secs(300); // check 6
const SYMBOLIC_BUDGET: Duration = Duration::from_secs(1); // check 7
const REPRODUCTION_BUDGET: Duration = Duration::from_secs(120); // check 8 (local bound)
const IDENTITY_BUDGET: Duration = Duration::from_secs(1); // check 9
const SCAN_BUDGET: Duration = Duration::from_secs(10); // check 10
const ROOT_SCAN_BUDGET: Duration = Duration::from_secs(120); // check 11

fn check(number: u32, what: &str, budget: Duration, body: impl FnOnce() -> Result<(), String>) {
    let started = Instant::now();
    let outcome = body();
    let elapsed = started.elapsed();
    let outcome = outcome.and_then(|()| {
        if elapsed <= budget {
            Ok(())
        } else {
            Err(format!("correct result, but {elapsed:.2?} exceeds the {budget:?} budget"))
        }
    });
    match outcome {
        Ok(()) => println!("ACCEPTANCE {number}: PASS — {what} ({elapsed:.2?})"),
        Err(msg) => {
            println!("ACCEPTANCE {number}: FAIL — {what}: {msg}");
            panic!("acceptance check {number} failed: {msg}");
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !($cond) {
            return Err(format!($($arg)+));
        }
    };
}

/// Converts a library error into this suite's failure message format.
fn run<T>(what: &str, r: am_designs::Result<T>) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

#[test]
fn acceptance_01_window_parameters_via_cli() {
    check(1, "strength-window parameters of both fixtures via the CLI", CLI_TOTAL_BUDGET, || {
        for (fixture, d_dual, t_max) in [("golay11dual", "5", "4"), ("golay12", "6", "5")] {
            let started = Instant::now();
            let out = Command::new(env!("CARGO_BIN_EXE_am-designs"))
                .args(["am", "--fixture", fixture, "--json"])
                .output()
                .map_err(|e| format!("spawning the binary: {e}"))?;
            let elapsed = started.elapsed();
            ensure!(
                out.status.success(),
                "{fixture}: exit status {:?}, stderr: {}",
                out.status.code(),
                String::from_utf8_lossy(&out.stderr)
            );
            let v: serde_json::Value = serde_json::from_slice(&out.stdout)
                .map_err(|e| format!("{fixture}: bad JSON: {e}"))?;
            ensure!(
                v["dual_min_distance"] == d_dual,
                "{fixture}: dual minimum distance {}, expected {d_dual}",
                v["dual_min_distance"]
            );
            ensure!(v["t_max"] == t_max, "{fixture}: t_max {}, expected {t_max}", v["t_max"]);
            ensure!(
                elapsed <= CLI_CALL_BUDGET,
                "{fixture}: call took {elapsed:.2?}, budget {CLI_CALL_BUDGET:?}"
            );
        }
        Ok(())
    });
}

#[test]
fn acceptance_02_weight_distributions() {
    check(2, "exact weight distributions of both fixtures", DISTRIBUTION_BUDGET, || {
        let cases: [(LinearCode, &[(u32, u64)]); 2] = [
            (construct_golay_dual(), &[(0, 1), (6, 132), (9, 110)]),
            (construct_extended_golay(), &[(0, 1), (6, 264), (9, 440), (12, 24)]),
        ];
        for (c, expected) in cases {
            let expected: BTreeMap<u32, u64> = expected.iter().copied().collect();
            let wd = run("weight distribution", c.weight_distribution())?;
            ensure!(
                wd.counts() == &expected,
                "{}: distribution {:?}, expected {:?}",
                c.name().unwrap_or("?"),
                wd.counts(),
                expected
            );
        }
        Ok(())
    });
}

#[test]
fn acceptance_03_design_strengths() {
    check(3, "per-weight design strengths of both fixtures", STRENGTH_BUDGET, || {
        // [12,6,6] fixture: delta = 5, every weight class a 5-design, and
        // the weight-6 class stops there.
        let ext = construct_extended_golay();
        let st = run("strength probe", delta_and_s(&ext, 6))?;
        ensure!(
            st.delta == 5 && !st.delta_capped,
            "[12,6,6]: delta = {}{}, expected exactly 5",
            st.delta,
            if st.delta_capped { "+" } else { "" }
        );
        for (w, lambda) in [(6u32, 2u64), (9, 70), (12, 24)] {
            let v = is_t_design(&run("supports", support_design(&ext, w))?, 5);
            ensure!(
                v.is_design && v.lambda == Some(lambda),
                "[12,6,6] D_{w} at t = 5: is_design {}, lambda {:?}; expected a 5-design with lambda {lambda}",
                v.is_design,
                v.lambda
            );
        }
        let v6 = is_t_design(&run("supports", support_design(&ext, 6))?, 6);
        ensure!(
            !v6.is_design,
            "[12,6,6] D_6 at t = 6: expected failure, got a design with lambda {:?}",
            v6.lambda
        );

        // [11,5,6] fixture: delta = 4 because the weight-6 class fails t = 5.
        let dual = construct_golay_dual();
        let st = run("strength probe", delta_and_s(&dual, 5))?;
        ensure!(
            st.delta == 4 && !st.delta_capped,
            "[11,5,6]: delta = {}{}, expected exactly 4",
            st.delta,
            if st.delta_capped { "+" } else { "" }
        );
        let v6 = is_t_design(&run("supports", support_design(&dual, 6))?, 5);
        ensure!(
            !v6.is_design,
            "[11,5,6] D_6 at t = 5: expected failure, got a design with lambda {:?}",
            v6.lambda
        );

        // The pinned expectation also lists D_9 of the [11,5,6] fixture as
        // failing t = 5. Test it honestly and, if it passes instead, report
        // the structural reason with the counting and harmonic evidence.
        let d9 = run("supports", support_design(&dual, 9))?;
        let v5 = is_t_design(&d9, 5);
        if v5.is_design {
            let mult = d9.multiplicities();
            let all_twice = mult.len() == 55 && mult.iter().all(|&(_, m)| m == 2);
            let harmonic = run(
                "harmonic check",
                harmonic_design_check(&dual, 9, 5, &Limits { max_degree: 5, max_subsets: 20_000 }),
            )?;
            let v9 = is_t_design(&d9, 9);
            return Err(format!(
                "the pinned expectation says D_9 of the [11,5,6] fixture fails t = 5, but \
                 exhaustive counting shows it IS a 5-design with lambda = {}, and the \
                 independent harmonic-coefficient check agrees (is_design = {harmonic}). \
                 Structurally the verdict is forced: the 110 weight-9 supports form {} \
                 distinct 9-subsets{}, i.e. every 9-subset of the 11 points exactly twice \
                 (110 = 2 x C(11,9)), so D_9 is a t-design for every t up to 9 (at t = 9: \
                 is_design = {}, lambda = {:?}). The computation is right and the pinned \
                 expectation is wrong; delta = 4 above is already established by D_6 alone.",
                v5.lambda.unwrap(),
                mult.len(),
                if all_twice { ", each appearing exactly twice" } else { "" },
                v9.is_design,
                v9.lambda,
            ));
        }
        Ok(())
    });
}

#[test]
fn acceptance_04_counting_guarantee() {
    check(4, "window-derived design guarantee verified by counting", GUARANTEE_BUDGET, || {
        for (c, t, entry_count) in
            [(construct_golay_dual(), 4u32, 7usize), (construct_extended_golay(), 5, 6)]
        {
            let name = c.name().unwrap_or("?").to_owned();
            let am = run("window scan", am_condition(&c))?;
            ensure!(
                am.t_max == Some(t),
                "{name}: window scan reports t_max {:?}, expected {t}",
                am.t_max
            );
            let entries = run("guarantee check", check_am_guarantee(&c, t))?;
            ensure!(
                entries.len() == entry_count,
                "{name}: {} weight classes across both sides, expected {entry_count}",
                entries.len()
            );
            for e in &entries {
                ensure!(
                    e.verdict.is_design && e.verdict.lambda.is_some(),
                    "{name}: weight {} on the {} side is not a {t}-design (witness {:?})",
                    e.weight,
                    if e.dual_side { "dual" } else { "primal" },
                    e.verdict.witness
                );
            }
        }
        Ok(())
    });
}

#[test]
fn acceptance_05_harmonic_counting_agreement() {
    check(5, "harmonic and counting design tests agree on both code pairs", AGREEMENT_BUDGET, || {
        let limits = Limits { max_degree: 5, max_subsets: 20_000 };
        let g11 = construct_golay();
        let g11d = construct_golay_dual();
        let g12 = construct_extended_golay();
        // Pair coverage: ([11,6,5], [11,5,6]) are mutual duals, and the
        // [12,6,6] fixture equals its own dual, so three codes cover both
        // pairs on both sides. Both facts are asserted, not assumed.
        ensure!(
            g11.dual().canonical_generator() == g11d.canonical_generator(),
            "the [11,5,6] fixture is not the dual of the [11,6,5] fixture"
        );
        ensure!(
            g12.dual().canonical_generator() == g12.canonical_generator(),
            "the [12,6,6] fixture is not self-dual"
        );
        let mut comparisons = 0usize;
        for c in [&g11, &g11d, &g12] {
            let name = c.name().unwrap_or("?").to_owned();
            let mut analyzer = HarmonicAnalyzer::new(c, limits);
            let weights = run("weight distribution", c.weight_distribution())?.nonzero_weights();
            for w in weights {
                let d = run("supports", support_design(c, w))?;
                for t in 1..=5u32.min(w) {
                    let counted = is_t_design(&d, t).is_design;
                    let harmonic = run("harmonic check", analyzer.design_check(w, t))?;
                    ensure!(
                        counted == harmonic,
                        "{name}, w = {w}, t = {t}: counting says {counted}, harmonic says {harmonic}"
                    );
                    comparisons += 1;
                }
            }
        }
        ensure!(comparisons == 50, "made {comparisons} comparisons, expected 50");
        Ok(())
    });
}

#[test]
fn acceptance_06_transform_proportionality() {
    check(6, "dual transform matches directly computed dual enumerators", PROPORTIONALITY_BUDGET, || {
        let limits = Limits::default();
        for c in [construct_golay(), construct_golay_dual(), construct_extended_golay()] {
            let name = c.name().unwrap_or("?").to_owned();
            let n = c.length();
            let dual = c.dual();
            let basis = run("degree-2 basis", harm_basis(n, 2, &limits))?;
            ensure!(
                basis.len() == n * (n - 3) / 2,
                "{name}: degree-2 space dimension {}, expected {}",
                basis.len(),
                n * (n - 3) / 2
            );
            let primal_ctx = run("primal enumerators", HarmonicContext::new(&c, 2, &limits))?;
            let dual_ctx = run("dual enumerators", HarmonicContext::new(&dual, 2, &limits))?;
            for f in &basis {
                let zc = run("primal enumerator", primal_ctx.enumerator(f))?;
                let zd = run("dual enumerator", dual_ctx.enumerator(f))?;
                let (proportional, _) = proportional_with_scalar(&dual_transform(&zc, 3), &zd);
                ensure!(
                    proportional,
                    "{name}: a degree-2 enumerator transforms to something not proportional \
                     to the directly computed dual enumerator"
                );
            }
        }
        Ok(())
    });
}

#[test]
fn acceptance_07_symbolic_identity() {
    check(7, "fixed three-term transform identity and the forced solution", SYMBOLIC_BUDGET, || {
        let (n, k) = (18usize, 2usize);
        // Degree-2 shape on 18 points with source weights 6, 12, 15 and
        // coefficients 1, -3, 2.
        let mut coeffs = vec![BigRational::zero(); n - 2 * k + 1];
        coeffs[6 - k] = BigRational::one();
        coeffs[12 - k] = rat(-3);
        coeffs[15 - k] = rat(2);
        let z = HarmonicEnumerator::new(n, k, coeffs);
        let image = dual_transform(&z, 3);
        // The claimed zero: the image coefficient at dual weight 9, i.e. the
        // x^7 y^7 term of the transformed polynomial.
        ensure!(
            image.coefficient(9).is_zero(),
            "image coefficient at dual weight 9 is {}, expected 0",
            image.coefficient(9)
        );
        for w in [2u32, 3, 5] {
            ensure!(
                image.coefficient(w).is_zero(),
                "image coefficient at dual weight {w} is {}, expected 0",
                image.coefficient(w)
            );
        }
        ensure!(!image.is_zero(), "the image is identically zero; the zeros above are vacuous");
        ensure!(
            image.coefficient(4) == &rat(243),
            "image coefficient at dual weight 4 is {}, expected 243",
            image.coefficient(4)
        );
        // Conversely, forcing zeros at dual weights {2, 3, 5} on the general
        // four-term combination over source weights {6, 9, 12, 15} pins the
        // coefficients to multiples of (1, 0, -3, 2).
        let sol =
            run("coefficient solve", solve_dual_vanishing(n, k, 3, &[6, 9, 12, 15], &[2, 3, 5]))?;
        ensure!(sol.len() == 1, "solution space has dimension {}, expected 1", sol.len());
        let expected = vec![rat(1), rat(0), rat(-3), rat(2)];
        ensure!(
            sol[0] == expected,
            "solution {:?}, expected coefficients (1, 0, -3, 2)",
            sol[0]
        );
        Ok(())
    });
}

#[test]
fn acceptance_08_stored_matrix_reproduction() {
    check(8, "full reproduction on the stored [18,8,6] generator", REPRODUCTION_BUDGET, || {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/so_18_8.txt");
        let text = std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))?;
        let c = run("parsing", am_designs::io::parse_code_file(&text))?;
        ensure!(
            (c.length(), c.dimension(), c.modulus()) == (18, 8, 3),
            "parsed a [{},{}] code over GF({})",
            c.length(),
            c.dimension(),
            c.modulus()
        );
        ensure!(
            run("minimum distance", c.minimum_distance())? == Some(6),
            "minimum distance is not 6"
        );
        let weights = run("weight distribution", c.weight_distribution())?.nonzero_weights();
        ensure!(weights == vec![6, 9, 12, 15, 18], "nonzero weights {weights:?}");

        let dual = c.dual();
        let dual_wd = run("dual weight distribution", dual.weight_distribution())?;
        ensure!(
            dual_wd.min_nonzero_weight() == Some(4),
            "dual minimum distance {:?}, expected 4",
            dual_wd.min_nonzero_weight()
        );
        ensure!(
            dual_wd.count(5) == 0,
            "dual weight-5 class holds {} words, expected none",
            dual_wd.count(5)
        );

        // Every degree-2 coefficient at weight 9 vanishes.
        let limits = Limits::default();
        let basis = run("degree-2 basis", harm_basis(18, 2, &limits))?;
        ensure!(basis.len() == 135, "degree-2 space dimension {}, expected 135", basis.len());
        let ctx = run("enumerator context", HarmonicContext::new(&c, 2, &limits))?;
        for f in &basis {
            let b = run("coefficient", ctx.coefficient_at(9, f))?;
            ensure!(b.is_zero(), "a degree-2 coefficient at weight 9 equals {b}, expected 0");
        }

        // Both weight-9 support families are 2-designs by exhaustive counting.
        let v = is_t_design(&run("supports", support_design(&c, 9))?, 2);
        ensure!(
            v.is_design && v.lambda == Some(272),
            "primal D_9 at t = 2: is_design {}, lambda {:?}; expected lambda 272",
            v.is_design,
            v.lambda
        );
        let v = is_t_design(&run("dual supports", support_design(&dual, 9))?, 2);
        ensure!(
            v.is_design,
            "dual-side D_9 at t = 2 fails; witness {:?}",
            v.witness
        );
        Ok(())
    });
}

#[test]
fn acceptance_09_sphere_identities() {
    check(9, "sphere-counting identities on both fixtures", IDENTITY_BUDGET, || {
        let r = run("two-weight identity", check_sphere_identity(&construct_golay_dual()))?;
        ensure!(
            matches!(r.variant, IdentityVariant::TwoWeight) && r.hypothesis_met,
            "[11,5,6]: variant {:?}, hypothesis_met {}",
            r.variant,
            r.hypothesis_met
        );
        ensure!(
            r.holds && r.lhs.to_string() == "243" && r.rhs.to_string() == "243",
            "[11,5,6]: sides {} and {}, expected 243 = 243",
            r.lhs,
            r.rhs
        );
        let r = run("full-weight identity", check_sphere_identity(&construct_extended_golay()))?;
        ensure!(
            matches!(r.variant, IdentityVariant::ThreeWeightFull) && r.hypothesis_met,
            "[12,6,6]: variant {:?}, hypothesis_met {}",
            r.variant,
            r.hypothesis_met
        );
        ensure!(
            r.holds && r.lhs.to_string() == "729" && r.rhs.to_string() == "729",
            "[12,6,6]: sides {} and {}, expected 729 = 729",
            r.lhs,
            r.rhs
        );
        Ok(())
    });
}

#[test]
fn acceptance_10_perfect_parameter_scan() {
    check(10, "ball-size power scans at radius 2 and 3", SCAN_BUDGET, || {
        let sols = run("radius-2 scan", diophantine_scan(3, 2, 10_000))?;
        ensure!(
            sols == vec![(1, 1), (2, 2), (11, 5)],
            "radius-2 solutions {sols:?}, expected (1,1), (2,2), (11,5)"
        );
        let sols = run("radius-3 scan", diophantine_scan(3, 3, 10_000))?;
        ensure!(
            sols == vec![(1, 1), (2, 2), (3, 3)],
            "radius-3 solutions {sols:?}, expected (1,1), (2,2), (3,3)"
        );
        Ok(())
    });
}

#[test]
fn acceptance_11_root_scan_outcomes() {
    check(11, "root scan and counted outcomes on the dual pair", ROOT_SCAN_BUDGET, || {
        let c = construct_golay_dual();
        let r = run("root scan", scan_criterion(&c))?;
        ensure!(r.case == 1 && r.params.t == 4, "case {} at t = {}", r.case, r.params.t);
        ensure!(
            r.params.alpha(0) == 0 && r.params.beta(0) == 1,
            "exponents alpha = {}, beta = {}; expected 0 and 1",
            r.params.alpha(0),
            r.params.beta(0)
        );
        let expected_roots: Vec<u32> = (2..=11).collect();
        ensure!(r.roots == expected_roots, "roots {:?}, expected 2..=11", r.roots);
        let expected_candidates: Vec<u32> = (7..=16).collect();
        ensure!(
            r.candidates == expected_candidates,
            "candidate dual weights {:?}, expected 7..=16",
            r.candidates
        );
        ensure!(r.actionable == vec![8, 9, 11], "actionable dual weights {:?}", r.actionable);

        // The scanner records counted verdicts; re-derive each one here with
        // a fresh exhaustive count so the record is never presumed.
        let dual_side = c.dual();
        for o in &r.outcomes {
            ensure!(o.strength == 5, "outcome at weight {} probed t = {}", o.weight, o.strength);
            let fresh = is_t_design(&run("supports", support_design(&dual_side, o.weight))?, 5);
            ensure!(
                o.is_design == fresh.is_design && o.lambda == fresh.lambda,
                "recorded outcome at dual weight {} ({}, lambda {:?}) disagrees with a fresh \
                 count ({}, lambda {:?})",
                o.weight,
                o.is_design,
                o.lambda,
                fresh.is_design,
                fresh.lambda
            );
        }
        let recorded: Vec<(u32, bool, Option<u64>)> =
            r.outcomes.iter().map(|o| (o.weight, o.is_design, o.lambda)).collect();
        ensure!(
            recorded
                == vec![(8, true, Some(40)), (9, true, Some(30)), (11, true, Some(24))],
            "recorded outcomes {recorded:?}"
        );
        Ok(())
    });
}
