//! Acceptance criteria 1 to 7, one result line each.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use anneid::corpus::builtin::builtin;
use anneid::corpus::search::{
    labels_to_set, search_counterexample_strict_inclusion, DEFAULT_MAX_CANDIDATES,
};
use anneid::corpus::{
    run_theorem_suite, verify_corpus, CorpusInstance, Report, Status, TheoremVerdict,
};
use anneid::ideals::{principal_ideal, principal_right_ideal, Lattices};
use anneid::radicals::classical::{brown_mccoy_by_g_regularity, brown_mccoy_by_maximal_ideals};
use anneid::radicals::RadicalReport;
use anneid::ring::ComponentRing;
use anneid::{catalog, AnneidDocument, BitSet, FiniteAnneid, FiniteRing, Grade, Limits};
use common::{
    check_factor, confirm_counterexample, corpus, full_mask, graded_brown_mccoy_oracle, mask_of,
    members, Raw, RawRing, KNOWN_COUNTEREXAMPLE_IDS,
};

enum Verdict {
    Pass(String),
    /// Red, with every failing verdict independently confirmed as a
    /// counterexample to the statement it checks.
    Confirmed(String),
    Fail(String),
}

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn verdict<'v>(vs: &'v [TheoremVerdict], id: &str) -> &'v Status {
    &vs.iter()
        .find(|v| v.theorem == id)
        .expect("known theorem id")
        .status
}

fn no_fails(vs: &[TheoremVerdict]) -> Result<(), String> {
    let fails: Vec<&str> = vs
        .iter()
        .filter(|v| v.status.is_fail())
        .map(|v| v.theorem.as_str())
        .collect();
    ensure(fails.is_empty(), || format!("failing verdicts {fails:?}"))
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let t = catalog::triangular();
    let r = RadicalReport::compute(&t, Limits::default()).map_err(|e| e.to_string())?;
    ensure(r.graded == ["0", "b"], || format!("G(A) = {:?}", r.graded))?;
    ensure(r.large_graded == ["0", "b"], || {
        format!("G_l(A) = {:?}", r.large_graded)
    })?;
    ensure(r.linearization == ["0", "b"], || {
        format!("G(Ā) = {:?}", r.linearization)
    })?;
    ensure(
        r.components.len() == 2 && r.components.iter().all(|c| c.radical == ["0"]),
        || format!("components {:?}", r.components),
    )?;
    ensure(r.flags.delta_assumption, || {
        "Δ assumption should hold".into()
    })?;
    let out = run_theorem_suite(
        &CorpusInstance::new(t, "acceptance"),
        Limits::default(),
        false,
    );
    ensure(
        matches!(verdict(&out.verdicts, "thm1"), Status::Holds),
        || format!("thm1: {:?}", verdict(&out.verdicts, "thm1")),
    )?;
    no_fails(&out.verdicts)?;
    let d = within(start, Duration::from_secs(1))?;
    Ok(format!(
        "G(A) = G_l(A) = {{0, e12}}, G(Ā) = {{0, e12}}, G(A(11)) = G(A(22)) = 0, thm1 holds, {d:?}"
    ))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let z4 = catalog::z4();
    let r = RadicalReport::compute(&z4, Limits::default()).map_err(|e| e.to_string())?;
    for (name, v) in [
        ("G(A)", &r.graded),
        ("G_l(A)", &r.large_graded),
        ("G(Ā)", &r.linearization),
    ] {
        ensure(v == &["0", "2"], || format!("{name} = {v:?}"))?;
    }
    let ring = FiniteRing::linearize(&z4, 1 << 16).map_err(|e| e.to_string())?;
    let by_ideals = brown_mccoy_by_maximal_ideals(&ring, 1 << 16).map_err(|e| e.to_string())?;
    ensure(by_ideals == brown_mccoy_by_g_regularity(&ring), || {
        "classical algorithms disagree".into()
    })?;
    let out = run_theorem_suite(
        &CorpusInstance::new(z4, "acceptance"),
        Limits::default(),
        false,
    );
    no_fails(&out.verdicts)?;
    let d = within(start, Duration::from_secs(1))?;
    Ok(format!(
        "G(A) = G_l(A) = G(Ā) = {{0, 2}}, algorithms agree, {d:?}"
    ))
}

fn criterion_3() -> Check {
    let c2 = catalog::c2_over_z2();
    let r = RadicalReport::compute(&c2, Limits::default()).map_err(|e| e.to_string())?;
    ensure(r.linearization == ["0", "1+g"], || {
        format!("G(Ā) = {:?}", r.linearization)
    })?;
    ensure(r.large_graded == ["0"] && r.graded == ["0"], || {
        format!("G_l(A) = {:?}, G(A) = {:?}", r.large_graded, r.graded)
    })?;
    let out = run_theorem_suite(
        &CorpusInstance::new(c2, "acceptance"),
        Limits::default(),
        false,
    );
    match verdict(&out.verdicts, "thm1") {
        Status::Skipped { reason } if reason.contains("(g, g)") => {}
        s => return Err(format!("thm1: {s:?}")),
    }
    ensure(
        matches!(verdict(&out.verdicts, "theoreminc"), Status::Holds),
        || "theoreminc does not hold".into(),
    )?;
    no_fails(&out.verdicts)?;
    Ok("G(Ā) = {0, 1+g}, G_l(A) = G(A) = 0, thm1 skipped at (g, g), theoreminc holds".into())
}

fn criterion_4() -> Verdict {
    let start = Instant::now();
    let insts = corpus();
    for inst in &insts {
        let lin: usize = inst.anneid.blocks().iter().map(|b| b.len() + 1).product();
        if inst.anneid.len() > 32 || lin > 4096 {
            return Verdict::Fail(format!("{} exceeds the corpus bounds", inst.anneid.name()));
        }
    }
    let report = Report::new(
        0,
        "acceptance",
        verify_corpus(&insts, Limits::default(), false),
    );
    let elapsed = start.elapsed();
    let s = report.summary;
    let stats = format!(
        "{} instances, {} holds, {} skipped, {} fails, {elapsed:?}",
        s.instances, s.holds, s.skipped, s.fails
    );
    if s.instances < 100 {
        return Verdict::Fail(format!("only {} instances", s.instances));
    }
    if elapsed >= Duration::from_secs(300) {
        return Verdict::Fail(format!("too slow: {stats}"));
    }
    if s.fails == 0 {
        return Verdict::Pass(stats);
    }
    let mut confirmed = Vec::new();
    for (inst, ir) in insts.iter().zip(&report.instances) {
        let fails: Vec<&str> = ir.fails().map(|v| v.theorem.as_str()).collect();
        if fails.is_empty() {
            continue;
        }
        if let Some(t) = fails.iter().find(|t| !KNOWN_COUNTEREXAMPLE_IDS.contains(t)) {
            return Verdict::Fail(format!("{}: unexpected failure of {t}", ir.name));
        }
        match confirm_counterexample(&inst.anneid, &fails) {
            Ok(witness) => confirmed.push(format!("{witness} refutes {}", fails.join(", "))),
            Err(e) => {
                return Verdict::Fail(format!(
                    "{}: failure of {fails:?} not confirmed: {e}",
                    ir.name
                ))
            }
        }
    }
    Verdict::Confirmed(format!(
        "{stats}; every fail independently confirmed as a counterexample: {}",
        confirmed.join("; ")
    ))
}

fn criterion_5() -> Check {
    let mut instances = 0;
    let mut ideals = 0;
    for inst in corpus().into_iter().filter(|i| i.anneid.len() <= 16) {
        let a = &inst.anneid;
        let raw = Raw::of(a);
        let lat = Lattices::compute(a, 1 << 20).map_err(|e| e.to_string())?;
        for (two_sided, found) in [(false, &lat.right), (true, &lat.two_sided)] {
            let mut got: Vec<u64> = found.iter().map(|i| mask_of(&i.set)).collect();
            got.sort();
            let scan = raw.scan_ideals(two_sided);
            ensure(got == scan, || {
                format!("{}: lattice differs from subset scan", a.name())
            })?;
            for x in a.elements() {
                let expect = scan
                    .iter()
                    .filter(|&&i| i >> x & 1 == 1)
                    .fold(u64::MAX, |m, &i| m & i);
                let p = if two_sided {
                    principal_ideal(a, x)
                } else {
                    principal_right_ideal(a, x)
                };
                ensure(mask_of(&p.set) == expect, || {
                    format!("{}: closure of {} differs", a.name(), a.label(x))
                })?;
            }
            ideals += scan.len();
        }
        for i in raw.scan_ideals(true) {
            check_factor(a, i).map_err(|e| format!("{}: {e}", a.name()))?;
        }
        instances += 1;
    }
    ensure(instances >= 100, || format!("only {instances} instances"))?;
    Ok(format!(
        "{instances} instances with |A| ≤ 16, {ideals} ideals, closures and factors match"
    ))
}

fn criterion_6() -> Check {
    let run = || -> Result<String, String> {
        let insts = builtin(50, 0).map_err(|e| e.to_string())?;
        Ok(Report::new(
            0,
            "builtin:count=50",
            verify_corpus(&insts, Limits::default(), false),
        )
        .to_json())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.as_bytes() == b.as_bytes(), || "reports differ".into())?;
    Ok(format!(
        "two runs of builtin count 50 seed 0 give identical {}-byte reports",
        a.len()
    ))
}

fn reverify_finding(
    doc: &AnneidDocument,
    component: &[String],
    intersection: &[String],
) -> Result<(), String> {
    let a = FiniteAnneid::validate(doc.clone()).map_err(|e| e.to_string())?;
    let raw = Raw::of(&a);
    ensure(raw.scan_ideals(true) == [1, full_mask(raw.n)], || {
        "not graded simple".into()
    })?;
    let ring = RawRing::of(&FiniteRing::linearize(&a, 1 << 16).map_err(|e| e.to_string())?);
    let has_unity =
        (0..ring.n).any(|e| (0..ring.n).all(|x| ring.mul[e][x] == x && ring.mul[x][e] == x));
    ensure(!has_unity, || "linearization has a unity".into())?;
    let e = Grade::of_block(0);
    let comp = ComponentRing::new(&a, e).map_err(|e| e.to_string())?;
    let ge = comp.lift(
        &BitSet::from_iter_in(
            comp.ring.size(),
            members(RawRing::of(&comp.ring).brown_mccoy()),
        ),
        a.len(),
    );
    let block_e = BitSet::from_iter_in(a.len(), a.component(e));
    let g = graded_brown_mccoy_oracle(&a)?;
    let inter = BitSet::from_iter_in(a.len(), members(g)).intersection(&block_e);
    ensure(ge.is_subset(&inter) && ge != inter, || {
        "inclusion is not strict".into()
    })?;
    ensure(
        ge == labels_to_set(&a, component) && inter == labels_to_set(&a, intersection),
        || "reported sets differ from the oracle".into(),
    )
}

fn criterion_7() -> Check {
    let mut parts = Vec::new();
    for bound in 0..=6 {
        let out = search_counterexample_strict_inclusion(bound, DEFAULT_MAX_CANDIDATES);
        ensure(out.complete, || format!("bound {bound} did not complete"))?;
        if let Some(f) = &out.finding {
            reverify_finding(&f.anneid, &f.component_radical, &f.intersection).map_err(|e| {
                format!(
                    "bound {bound}: finding {} fails re-verification: {e}",
                    f.anneid.name
                )
            })?;
            parts.push(format!(
                "bound {bound}: finding {} re-verified",
                f.anneid.name
            ));
        } else {
            parts.push(format!(
                "bound {bound}: {} candidates, {} valid, none",
                out.candidates, out.valid
            ));
        }
    }
    // the oracle itself must reproduce known radicals
    let t = catalog::triangular();
    let g = graded_brown_mccoy_oracle(&t)?;
    ensure(
        members(g).map(|x| t.label(x)).collect::<Vec<_>>() == ["0", "b"],
        || "oracle G(T) wrong".into(),
    )?;
    Ok(parts.join("; "))
}

fn wrap(c: Check) -> Verdict {
    match c {
        Ok(s) => Verdict::Pass(s),
        Err(s) => Verdict::Fail(s),
    }
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("triangular T", || wrap(criterion_1())),
        ("Z4", || wrap(criterion_2())),
        ("Z2[C2]", || wrap(criterion_3())),
        ("corpus run", criterion_4),
        ("oracle equivalence", || wrap(criterion_5())),
        ("determinism", || wrap(criterion_6())),
        ("counterexample search", || wrap(criterion_7())),
    ];
    let (mut pass, mut confirmed, mut fail) = (0, 0, 0);
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Verdict::Pass(s) => {
                pass += 1;
                println!("criterion {} ({name}): PASS: {s}", i + 1);
            }
            Verdict::Confirmed(s) => {
                confirmed += 1;
                println!("criterion {} ({name}): FAIL: {s}", i + 1);
            }
            Verdict::Fail(s) => {
                fail += 1;
                println!("criterion {} ({name}): FAIL: {s}", i + 1);
            }
        }
    }
    println!("acceptance: {pass} pass, {} fail ({confirmed} confirmed counterexample runs, {fail} unexpected)", confirmed + fail);
    if fail == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
