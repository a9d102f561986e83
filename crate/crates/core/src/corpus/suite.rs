//! The theorem suite: every checkable statement about the radicals, run on
//! one anneid and reported as a list of verdicts.

use std::time::Instant;

use serde::Serialize;

use crate::anneid::FiniteAnneid;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::grades::Grade;
use crate::ideals::{
    check_of, is_ideal, is_modular, left_quotient, modular_degree, modular_unities,
    right_modular_unities, HomSubset, IdealSide, Lattices,
};
use crate::moduloid::{quotient_moduloid, FiniteModuloid};
use crate::properties::{
    is_regular, is_simple_with_unity, is_strongly_graded, unity, unity_criterion,
};
use crate::quotient::factor_anneid;
use crate::radicals::{
    g_regular_characterization_check, is_g_regular_anneid_element, largest_homogeneous_ideal_in,
    linearized_simple_modules, Analysis, RadicalReport, Radicals,
};
use crate::ring::Side;
use crate::Limits;

/// Verdict ids in report order.
pub const THEOREMS: &[&str] = &[
    "grading",
    "classical-agreement",
    "main",
    "gl-in-g",
    "theoreminc",
    "thm1",
    "thm2",
    "corollary",
    "correspondence",
    "gregular",
    "remark-id",
    "lemma-modular-simple",
    "unities-same-degree",
    "corollary-mod",
    "remark-mod1",
    "check-of-modular",
    "factor-regular",
    "moduloid-simple",
    "module-moduloids",
    "lemma-remark",
    "corollary-module",
    "annihilator-ideal",
    "radical-ideals",
    "unity-criterion",
    "strongly-graded",
    "final-theorem",
    "homogeneous-remark",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails { witness: Vec<String> },
    Skipped { reason: String },
}

impl Status {
    fn skipped(reason: impl Into<String>) -> Self {
        Status::Skipped {
            reason: reason.into(),
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Status::Fails { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub theorem: String,
    #[serde(flatten)]
    pub status: Status,
    /// Wall-clock microseconds, only recorded on request.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub micros: Option<u64>,
}

/// A corpus member with its origin.
#[derive(Debug, Clone)]
pub struct CorpusInstance {
    pub anneid: FiniteAnneid,
    pub provenance: String,
}

impl CorpusInstance {
    pub fn new(anneid: FiniteAnneid, provenance: impl Into<String>) -> Self {
        CorpusInstance {
            anneid,
            provenance: provenance.into(),
        }
    }
}

/// Verdicts for one instance plus its radicals when they could be computed.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub radicals: Option<RadicalReport>,
    pub verdicts: Vec<TheoremVerdict>,
}

fn all_with(status: Status) -> Vec<TheoremVerdict> {
    THEOREMS
        .iter()
        .map(|t| TheoremVerdict {
            theorem: t.to_string(),
            status: status.clone(),
            micros: None,
        })
        .collect()
}

pub fn run_theorem_suite(inst: &CorpusInstance, limits: Limits, timings: bool) -> SuiteOutcome {
    let an = match Analysis::new(&inst.anneid, limits) {
        Ok(an) => an,
        Err(e) => {
            return SuiteOutcome {
                radicals: None,
                verdicts: all_with(error_status(&e)),
            }
        }
    };
    let rad = match an.radicals() {
        Ok(rad) => rad,
        Err(e @ Error::AlgorithmsDisagree(_)) => {
            let mut verdicts = all_with(Status::skipped("classical algorithms disagree"));
            verdicts[1].status = Status::Fails {
                witness: vec![e.to_string()],
            };
            return SuiteOutcome {
                radicals: None,
                verdicts,
            };
        }
        Err(e) => {
            return SuiteOutcome {
                radicals: None,
                verdicts: all_with(error_status(&e)),
            }
        }
    };
    let ctx = Ctx::new(&an, &rad);
    let verdicts = THEOREMS
        .iter()
        .map(|&t| {
            let start = Instant::now();
            let status = ctx.run(t).unwrap_or_else(|e| error_status(&e));
            TheoremVerdict {
                theorem: t.to_string(),
                status,
                micros: timings.then(|| start.elapsed().as_micros() as u64),
            }
        })
        .collect();
    SuiteOutcome {
        radicals: Some(RadicalReport::new(&an, &rad)),
        verdicts,
    }
}

fn error_status(e: &Error) -> Status {
    match e {
        e if e.is_bounds() => Status::skipped(format!("bounds: {e}")),
        Error::PreconditionFailed(msg) => Status::skipped(msg.clone()),
        e => Status::Fails {
            witness: vec![e.to_string()],
        },
    }
}

struct Ctx<'a> {
    an: &'a Analysis,
    rad: &'a Radicals,
    a: &'a FiniteAnneid,
    lat: &'a Lattices,
    regular: bool,
    delta: bool,
}

type Outcome = Result<Status>;

impl<'a> Ctx<'a> {
    fn new(an: &'a Analysis, rad: &'a Radicals) -> Self {
        Ctx {
            an,
            rad,
            a: &an.anneid,
            lat: &an.lattices,
            regular: an.is_regular(),
            delta: an.delta_assumption(),
        }
    }

    fn run(&self, theorem: &str) -> Outcome {
        match theorem {
            "grading" => self.grading(),
            "classical-agreement" => Ok(Status::Holds),
            "main" => self.main(),
            "gl-in-g" => self.gate_regular().map_or_else(|| self.gl_in_g(), Ok),
            "theoreminc" => self
                .gate_components(false)
                .map_or_else(|| self.component_inclusion(false), Ok),
            "thm1" => self
                .gate_components(true)
                .map_or_else(|| self.component_inclusion(true), Ok),
            "thm2" => self.gate_delta().map_or_else(|| self.thm2(), Ok),
            "corollary" => self.gate_delta().map_or_else(|| self.corollary(), Ok),
            "correspondence" => self
                .gate_components(true)
                .map_or_else(|| self.correspondence(), Ok),
            "gregular" => self.gate_delta().map_or_else(|| self.gregular(), Ok),
            "remark-id" => self.remark_id(),
            "lemma-modular-simple" => self.lemma_modular_simple(),
            "unities-same-degree" => self
                .gate_regular()
                .map_or_else(|| self.unities_same_degree(), Ok),
            "corollary-mod" => self.gate_regular().map_or_else(|| self.corollary_mod(), Ok),
            "remark-mod1" => self.remark_mod1(),
            "check-of-modular" => self.check_of_modular(),
            "factor-regular" => self
                .gate_regular()
                .map_or_else(|| self.factor_regular(), Ok),
            "moduloid-simple" => self
                .gate_regular()
                .map_or_else(|| self.moduloid_simple(), Ok),
            "module-moduloids" => self.module_moduloids(),
            "lemma-remark" => self.gate_regular().map_or_else(|| self.lemma_remark(), Ok),
            "corollary-module" => self
                .gate_regular()
                .map_or_else(|| self.corollary_module(), Ok),
            "annihilator-ideal" => self.annihilator_ideal(),
            "radical-ideals" => self.radical_ideals(),
            "unity-criterion" => self
                .gate_regular()
                .map_or_else(|| self.unity_criterion(), Ok),
            "strongly-graded" => self.strongly_graded(),
            "final-theorem" => self.final_theorem(),
            "homogeneous-remark" => self
                .gate_regular()
                .map_or_else(|| self.homogeneous_remark(), Ok),
            other => Err(Error::InvalidInput(format!("unknown theorem {other}"))),
        }
    }

    fn gate_regular(&self) -> Option<Status> {
        (!self.regular).then(|| Status::skipped("anneid is not regular"))
    }

    fn gate_delta(&self) -> Option<Status> {
        self.gate_regular()
            .or_else(|| (!self.delta).then(|| Status::skipped(self.delta_reason())))
    }

    fn gate_components(&self, need_delta: bool) -> Option<Status> {
        let gate = if need_delta {
            self.gate_delta()
        } else {
            self.gate_regular()
        };
        gate.or_else(|| {
            self.an
                .components
                .is_empty()
                .then(|| Status::skipped("no idempotent grades"))
        })
    }

    fn delta_reason(&self) -> String {
        match self.an.delta.delta_assumption() {
            Err((x, y)) => format!(
                "Δ assumption fails at ({}, {})",
                self.a.grade_name(x),
                self.a.grade_name(y)
            ),
            Ok(()) => String::new(),
        }
    }

    fn labels(&self, items: impl IntoIterator<Item = usize>) -> Vec<String> {
        self.a.render(items)
    }

    fn set_label(&self, set: &BitSet) -> String {
        format!("{{{}}}", self.labels(set.iter()).join(","))
    }

    fn fail(witness: Vec<String>) -> Outcome {
        Ok(Status::Fails { witness })
    }

    /// Holds when `sub ⊆ sup`; otherwise the witness lists `sub ∖ sup`.
    fn inclusion(&self, sub: &BitSet, sup: &BitSet) -> Outcome {
        let extra: Vec<usize> = sub.iter().filter(|&x| !sup.contains(x)).collect();
        if extra.is_empty() {
            Ok(Status::Holds)
        } else {
            Self::fail(self.labels(extra))
        }
    }

    fn equality(&self, lhs: &BitSet, rhs: &BitSet) -> Outcome {
        match self.inclusion(lhs, rhs)? {
            Status::Holds => self.inclusion(rhs, lhs),
            failed => Ok(failed),
        }
    }

    fn proper_two_sided(&self) -> impl Iterator<Item = &HomSubset> {
        self.lat.two_sided.iter().filter(|i| !i.set.is_full())
    }

    fn grading(&self) -> Outcome {
        match self.an.ring.grading_violation() {
            None => Ok(Status::Holds),
            Some((u, v)) => Self::fail(vec![self.an.ring.render(u), self.an.ring.render(v)]),
        }
    }

    /// `G_l(A) = G(Ā) ∩ A`.
    fn main(&self) -> Outcome {
        let hom = self.an.ring.homogeneous_part(&self.rad.linearization);
        self.equality(&self.rad.large_graded, &hom)
    }

    fn gl_in_g(&self) -> Outcome {
        self.inclusion(&self.rad.large_graded, &self.rad.graded)
    }

    /// `G(A(ε)) ⊆ G(A) ∩ A(ε)`, or equality when `equal`.
    fn component_inclusion(&self, equal: bool) -> Outcome {
        for (c, g) in self.an.components.iter().zip(&self.rad.components) {
            let lhs = c.lift(g, self.a.len());
            let rhs = c.lift(&c.restrict(&self.rad.graded), self.a.len());
            let status = if equal {
                self.equality(&lhs, &rhs)?
            } else {
                self.inclusion(&lhs, &rhs)?
            };
            if let Status::Fails { mut witness } = status {
                witness.insert(0, format!("grade {}", self.a.grade_name(c.grade)));
                return Self::fail(witness);
            }
        }
        Ok(Status::Holds)
    }

    fn g_regular(&self) -> BitSet {
        BitSet::from_iter_in(
            self.a.len(),
            self.a
                .elements()
                .filter(|&x| is_g_regular_anneid_element(self.a, self.lat, x)),
        )
    }

    /// `G(A) = A` exactly when every element is G-regular.
    fn thm2(&self) -> Outcome {
        let reg = self.g_regular();
        if self.rad.graded.is_full() == reg.is_full() {
            return Ok(Status::Holds);
        }
        let witness = if self.rad.graded.is_full() {
            self.a.elements().find(|&x| !reg.contains(x))
        } else {
            self.a.elements().find(|&x| !self.rad.graded.contains(x))
        };
        Self::fail(self.labels(witness))
    }

    /// `G(A)` consists of G-regular elements and contains every two-sided
    /// ideal that does.
    fn corollary(&self) -> Outcome {
        let reg = self.g_regular();
        if let Status::Fails { witness } = self.inclusion(&self.rad.graded, &reg)? {
            return Self::fail(witness);
        }
        for i in &self.lat.two_sided {
            if i.set.is_subset(&reg) && !i.set.is_subset(&self.rad.graded) {
                return Self::fail(vec![self.set_label(&i.set)]);
            }
        }
        Ok(Status::Holds)
    }

    /// Maximal right ideals with modular `Ǐ` of degree `ε` correspond to
    /// those of `A(ε)` through `I ↦ I ∩ A(ε)` and `J ↦ {x : xA ∩ A(ε) ⊆ J}`.
    fn correspondence(&self) -> Outcome {
        let a = self.a;
        for c in &self.an.components {
            let eps = c.grade;
            let family_a: Vec<&HomSubset> = self
                .lat
                .maximal_right
                .iter()
                .filter(|i| matches!(modular_degree(a, &check_of(a, i).set), Ok(d) if d == eps))
                .collect();
            let ca = c.anneid();
            let lat_c = Lattices::compute(ca, self.an.limits.max_ideals)?;
            let family_c: Vec<&HomSubset> = lat_c
                .maximal_right
                .iter()
                .filter(|j| is_modular(ca, &check_of(ca, j).set))
                .collect();
            let grade = format!("grade {}", a.grade_name(eps));
            for i in &family_a {
                let contracted = c.restrict(&i.set);
                if !family_c.iter().any(|j| j.set == contracted) {
                    return Self::fail(vec![grade, format!("I={}", self.set_label(&i.set))]);
                }
                if crate::ideals::extend_ideal(a, c, &contracted).set != i.set {
                    return Self::fail(vec![
                        grade,
                        format!("I={} is not recovered", self.set_label(&i.set)),
                    ]);
                }
            }
            for j in &family_c {
                let k = crate::ideals::extend_ideal(a, c, &j.set);
                if !family_a.iter().any(|i| i.set == k.set) {
                    let lifted = c.lift(&j.set, a.len());
                    return Self::fail(vec![grade, format!("J={}", self.set_label(&lifted))]);
                }
            }
        }
        Ok(Status::Holds)
    }

    fn gregular(&self) -> Outcome {
        let check = g_regular_characterization_check(self.a, self.lat, &self.an.components)?;
        Ok(match check.witness {
            None => Status::Holds,
            Some(w) => Status::Fails {
                witness: self.labels(w),
            },
        })
    }

    /// Unities modulo a proper ideal have idempotent degree.
    fn remark_id(&self) -> Outcome {
        for i in self.proper_two_sided() {
            for e in modular_unities(self.a, &i.set) {
                if !self.an.delta.is_idempotent(self.a.degree(e)) {
                    return Self::fail(vec![
                        format!("I={}", self.set_label(&i.set)),
                        self.a.label(e).to_string(),
                    ]);
                }
            }
        }
        Ok(Status::Holds)
    }

    /// A two-sided ideal is maximal and modular exactly when the factor is
    /// simple with unity.
    fn lemma_modular_simple(&self) -> Outcome {
        for i in self.proper_two_sided() {
            let lhs = self.lat.maximal_two_sided.iter().any(|m| m.set == i.set)
                && is_modular(self.a, &i.set);
            let rhs =
                is_simple_with_unity(&factor_anneid(self.a, &i.set)?.anneid).simple_with_unity;
            if lhs != rhs {
                return Self::fail(vec![format!("I={}", self.set_label(&i.set))]);
            }
        }
        Ok(Status::Holds)
    }

    fn unities_same_degree(&self) -> Outcome {
        for i in self.proper_two_sided() {
            match modular_degree(self.a, &i.set) {
                Ok(_) | Err(Error::NotModular) => {}
                Err(Error::DegreesDiffer) => {
                    let mut witness = vec![format!("I={}", self.set_label(&i.set))];
                    witness.extend(self.labels(modular_unities(self.a, &i.set)));
                    return Self::fail(witness);
                }
                Err(e) => return Err(e),
            }
        }
        Ok(Status::Holds)
    }

    /// `G(A)` is the intersection of the maximal right ideals with modular `Ǐ`.
    fn corollary_mod(&self) -> Outcome {
        let mut meet = BitSet::full(self.a.len());
        for i in &self.lat.maximal_right {
            if is_modular(self.a, &check_of(self.a, i).set) {
                meet.intersect_with(&i.set);
            }
        }
        self.equality(&self.rad.graded, &meet)
    }

    /// A unity modulo `Ǐ` is a unity modulo `I`.
    fn remark_mod1(&self) -> Outcome {
        let a = self.a;
        for i in &self.lat.right {
            for e in modular_unities(a, &check_of(a, i).set) {
                let ok = a.elements().all(|x| {
                    crate::ideals::congruent(a, &i.set, a.mul(e, x), x)
                        && crate::ideals::congruent(a, &i.set, a.mul(x, e), x)
                });
                if !ok {
                    return Self::fail(vec![
                        format!("I={}", self.set_label(&i.set)),
                        a.label(e).to_string(),
                    ]);
                }
            }
        }
        Ok(Status::Holds)
    }

    /// For a right ideal with a left unity modulo it, `Ǐ = {a : Aa ⊆ I}`.
    fn check_of_modular(&self) -> Outcome {
        for i in &self.lat.right {
            if right_modular_unities(self.a, &i.set).is_empty() {
                continue;
            }
            if check_of(self.a, i).set != left_quotient(self.a, &i.set) {
                return Self::fail(vec![format!("I={}", self.set_label(&i.set))]);
            }
        }
        Ok(Status::Holds)
    }

    fn factor_regular(&self) -> Outcome {
        for i in &self.lat.two_sided {
            if !is_regular(&factor_anneid(self.a, &i.set)?.anneid).holds() {
                return Self::fail(vec![format!("I={}", self.set_label(&i.set))]);
            }
        }
        Ok(Status::Holds)
    }

    fn is_simple(&self, m: &FiniteModuloid) -> Result<bool> {
        m.is_simple(self.a, &self.lat.two_sided, self.an.limits.max_lin)
    }

    /// `A/I` is simple for every maximal right `I` with modular `Ǐ`; a regular
    /// simple `M` satisfies `M ≅ A/(0:x)` with `(0:x)` such an ideal, for every
    /// nonzero `x`.
    fn moduloid_simple(&self) -> Outcome {
        let a = self.a;
        for i in &self.lat.maximal_right {
            if is_modular(a, &check_of(a, i).set)
                && !self.is_simple(&quotient_moduloid(a, &i.set)?)?
            {
                return Self::fail(vec![format!(
                    "I={} gives no simple quotient",
                    self.set_label(&i.set)
                )]);
            }
        }
        for (name, m) in self.regular_simple_moduloids()? {
            for x in 1..m.len() {
                let ann = m.annihilator_of(a, x);
                let qualifies = self.lat.maximal_right.iter().any(|i| i.set == ann.set)
                    && is_modular(a, &check_of(a, &ann).set)
                    && quotient_moduloid(a, &ann.set)?.len() == m.len();
                if !qualifies {
                    return Self::fail(vec![format!("M={name}"), format!("x={}", m.labels()[x])]);
                }
            }
        }
        Ok(Status::Holds)
    }

    /// The simple `Ā`-modules are simple moduloids.
    fn module_moduloids(&self) -> Outcome {
        for m in linearized_simple_modules(&self.an.ring, self.an.limits.max_ideals)? {
            if !self.is_simple(&m)? {
                return Self::fail(vec![format!("M={{{}}}", m.labels().join(","))]);
            }
        }
        Ok(Status::Holds)
    }

    /// Regular simple moduloids among the quotients by maximal right ideals
    /// and the simple `Ā`-modules.
    fn regular_simple_moduloids(&self) -> Result<Vec<(String, FiniteModuloid)>> {
        let mut out = Vec::new();
        for i in &self.lat.maximal_right {
            let m = quotient_moduloid(self.a, &i.set)?;
            if m.is_regular(self.a).holds() && self.is_simple(&m)? {
                out.push((format!("A/{}", self.set_label(&i.set)), m));
            }
        }
        for m in linearized_simple_modules(&self.an.ring, self.an.limits.max_ideals)? {
            if m.is_regular(self.a).holds() && self.is_simple(&m)? {
                out.push((format!("{{{}}}", m.labels().join(",")), m));
            }
        }
        Ok(out)
    }

    /// For a regular simple `M` and an ideal `I` with `MI ≠ 0`, a single
    /// homogeneous `b ∈ I` fixes `M`, and its degree is idempotent.
    fn lemma_remark(&self) -> Outcome {
        let a = self.a;
        for (name, m) in self.regular_simple_moduloids()? {
            for j in &self.lat.two_sided {
                let hits = (1..m.len()).any(|x| j.set.iter().any(|c| m.act(x, c) != 0));
                if !hits {
                    continue;
                }
                let b = j
                    .set
                    .iter()
                    .find(|&b| (0..m.len()).all(|x| m.act(x, b) == x));
                match b {
                    Some(b) if self.an.delta.is_idempotent(a.degree(b)) => {}
                    _ => {
                        return Self::fail(vec![
                            format!("M={name}"),
                            format!("I={}", self.set_label(&j.set)),
                        ])
                    }
                }
            }
        }
        Ok(Status::Holds)
    }

    /// `G(A)` is the intersection of annihilators of regular simple moduloids.
    fn corollary_module(&self) -> Outcome {
        let mut meet = BitSet::full(self.a.len());
        for (_, m) in self.regular_simple_moduloids()? {
            meet.intersect_with(&m.annihilator(self.a).set);
        }
        self.equality(&self.rad.graded, &meet)
    }

    /// `(0 : A/I)` is a two-sided ideal equal to `{c : Ac ⊆ I}`.
    fn annihilator_ideal(&self) -> Outcome {
        for i in &self.lat.maximal_right {
            let ann = quotient_moduloid(self.a, &i.set)?.annihilator(self.a).set;
            if !is_ideal(self.a, &ann, IdealSide::TwoSided) || ann != left_quotient(self.a, &i.set)
            {
                return Self::fail(vec![format!("I={}", self.set_label(&i.set))]);
            }
        }
        Ok(Status::Holds)
    }

    fn radical_ideals(&self) -> Outcome {
        let mut named = vec![("G", &self.rad.graded), ("G_l", &self.rad.large_graded)];
        if let Some(j) = &self.rad.jacobson {
            named.push(("J", j));
        }
        for (name, set) in named {
            if !is_ideal(self.a, set, IdealSide::TwoSided) {
                return Self::fail(vec![name.to_string()]);
            }
        }
        if !self
            .an
            .ring
            .is_ideal(&self.rad.linearization, Side::TwoSided)
        {
            return Self::fail(vec!["G(Ā)".to_string()]);
        }
        for (c, g) in self.an.components.iter().zip(&self.rad.components) {
            if !c.ring.is_ideal(g, Side::TwoSided) {
                return Self::fail(vec![format!("G(A({}))", self.a.grade_name(c.grade))]);
            }
        }
        Ok(Status::Holds)
    }

    fn unity_criterion(&self) -> Outcome {
        match unity_criterion(self.a, self.an.limits.max_lin) {
            Ok(_) => Ok(Status::Holds),
            Err(Error::Inconsistent(msg)) => Self::fail(vec![msg]),
            Err(e) => Err(e),
        }
    }

    fn strongly_graded(&self) -> Outcome {
        let a = self.a;
        if let Some(s) = self.gate_regular() {
            return Ok(s);
        }
        if unity(a).is_none() {
            return Ok(Status::skipped("anneid has no unity"));
        }
        if !is_strongly_graded(a) {
            return Ok(Status::skipped("not strongly graded"));
        }
        let j = self.rad.jacobson.as_ref().expect("regular anneid has J");
        if let Some(g) = self
            .an
            .delta
            .grades()
            .find(|&g| a.component(g).iter().all(|&x| j.contains(x)))
        {
            return Ok(Status::skipped(format!(
                "component {} lies in J",
                a.grade_name(g)
            )));
        }
        let [eps] = self.an.delta.idempotents() else {
            return Self::fail(vec![format!(
                "{} idempotent grades",
                self.an.delta.idempotents().len()
            )]);
        };
        let eps = *eps;
        if let Status::Fails { witness } = self.component_inclusion(true)? {
            return Self::fail(witness);
        }
        let inverses: Vec<(Grade, Grade)> = self
            .an
            .delta
            .grades()
            .map(|d| {
                self.an
                    .delta
                    .grades()
                    .find(|&e| self.an.delta.product(d, e) == eps)
                    .map(|e| (d, e))
                    .ok_or_else(|| a.grade_name(d).to_string())
            })
            .collect::<std::result::Result<_, _>>()
            .map_err(|g| Error::Inconsistent(format!("grade {g} has no inverse")))?;
        let comp = a.component(eps);
        for m in &self.lat.maximal_two_sided {
            let part: Vec<usize> = comp
                .iter()
                .copied()
                .filter(|&x| m.set.contains(x))
                .collect();
            let part_set = BitSet::from_iter_in(a.len(), part.iter().copied());
            for &(d, e) in &inverses {
                let products = a.component(d).into_iter().flat_map(|x| {
                    let part = &part;
                    a.component(e)
                        .into_iter()
                        .flat_map(move |y| part.iter().map(move |&i| a.mul(a.mul(x, i), y)))
                });
                let span = crate::properties::block_span(a, products);
                if span != part_set {
                    return Self::fail(vec![
                        format!("I={}", self.set_label(&m.set)),
                        format!("grade {}", a.grade_name(d)),
                    ]);
                }
            }
        }
        Ok(Status::Holds)
    }

    /// `G(A(ε)) ⊆ G(Ā)` when `G(A) = G_l(A)`.
    fn final_theorem(&self) -> Outcome {
        if let Some(s) = self.gate_components(false) {
            return Ok(s);
        }
        if self.rad.graded != self.rad.large_graded {
            return Ok(Status::skipped("G(A) differs from G_l(A)"));
        }
        for (c, g) in self.an.components.iter().zip(&self.rad.components) {
            for u in g.iter() {
                let x = self.an.ring.embed(c.to_anneid[u]);
                if !self.rad.linearization.contains(x) {
                    return Self::fail(vec![
                        format!("grade {}", self.a.grade_name(c.grade)),
                        self.a.label(c.to_anneid[u]).to_string(),
                    ]);
                }
            }
        }
        Ok(Status::Holds)
    }

    fn homogeneous_remark(&self) -> Outcome {
        match largest_homogeneous_ideal_in(&self.an.ring, &self.rad.linearization) {
            Ok(h) => self.inclusion(&h.set, &self.rad.graded),
            Err(Error::NotIdeal) => {
                Self::fail(vec!["homogeneous part of G(Ā) is not an ideal".into()])
            }
            Err(e) => Err(e),
        }
    }
}
