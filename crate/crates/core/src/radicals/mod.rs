//! Graded, large graded and classical Brown–McCoy radicals, the graded
//! Jacobson radical and G-regularity.
//!
//! Every radical is an intersection over a family of ideals and is the
//! whole structure when the family is empty.

pub mod classical;

use serde::Serialize;

use crate::anneid::FiniteAnneid;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::grades::{Grade, GradeGroupoid};
use crate::ideals::{
    check_of, is_ideal, modular_unities, right_modular_unities, HomSubset, IdealSide, Lattices,
    SubsetKind,
};
use crate::moduloid::{linearized_quotient_moduloid, quotient_moduloid, FiniteModuloid};
use crate::properties::{is_regular, is_simple_with_unity, is_strongly_graded, unity, Check};
use crate::quotient::factor_anneid;
use crate::ring::{ComponentRing, FiniteRing, Side, Span};
use crate::Limits;

fn intersect_all<'s>(n: usize, sets: impl IntoIterator<Item = &'s BitSet>) -> BitSet {
    let mut out = BitSet::full(n);
    for s in sets {
        out.intersect_with(s);
    }
    out
}

fn radical(set: BitSet) -> HomSubset {
    HomSubset::new(set, SubsetKind::Radical)
}

/// A maximal right ideal `I` together with `Ǐ`.
#[derive(Debug, Clone)]
pub struct RightIdealPair {
    pub ideal: HomSubset,
    pub check: HomSubset,
}

/// Maximal right ideals `I` with `A/Ǐ` in the class `M`.
pub fn graded_brown_mccoy_family(a: &FiniteAnneid, lat: &Lattices) -> Result<Vec<RightIdealPair>> {
    let mut out = Vec::new();
    for i in &lat.maximal_right {
        let check = check_of(a, i);
        if is_simple_with_unity(&factor_anneid(a, &check.set)?.anneid).in_class_m {
            out.push(RightIdealPair {
                ideal: i.clone(),
                check,
            });
        }
    }
    Ok(out)
}

/// `G(A)`.
pub fn graded_brown_mccoy(a: &FiniteAnneid, lat: &Lattices) -> Result<HomSubset> {
    let family = graded_brown_mccoy_family(a, lat)?;
    Ok(radical(intersect_all(
        a.len(),
        family.iter().map(|p| &p.ideal.set),
    )))
}

/// Maximal right ideals whose quotient moduloid is simple.
pub fn simple_quotient_family(
    a: &FiniteAnneid,
    lat: &Lattices,
    max_lin: usize,
) -> Result<Vec<HomSubset>> {
    let mut out = Vec::new();
    for i in &lat.maximal_right {
        if quotient_moduloid(a, &i.set)?.is_simple(a, &lat.two_sided, max_lin)? {
            out.push(i.clone());
        }
    }
    Ok(out)
}

/// For every maximal ideal `P` of `Ā` with `Ā/P` simple with unity, the
/// simple module `Ā/K` for some maximal right ideal `K ⊇ P`, as a one-block
/// moduloid.
pub fn linearized_simple_modules(r: &FiniteRing, max_ideals: usize) -> Result<Vec<FiniteModuloid>> {
    let mut out = Vec::new();
    for p in classical::unital_maximal_ideals(r, max_ideals)? {
        let mut k = Span::new(r);
        for u in p.iter() {
            k.extend(u);
        }
        for x in r.elements() {
            if k.contains(x) {
                continue;
            }
            let mut next = k.clone();
            r.grow_ideal(&mut next, [x], Side::Right);
            if !next.set().is_full() {
                k = next;
            }
        }
        out.push(linearized_quotient_moduloid(r, k.set())?);
    }
    Ok(out)
}

/// `G_l(A)`: the intersection of the annihilators of the simple moduloids.
///
/// Two families are searched: quotients `A/I` by maximal right ideals and
/// the simple `Ā`-modules of [`linearized_simple_modules`]. Members of the
/// second family that fail the simplicity test are left out.
pub fn large_graded_brown_mccoy(
    a: &FiniteAnneid,
    lat: &Lattices,
    r: &FiniteRing,
    limits: Limits,
) -> Result<HomSubset> {
    let mut anns = Vec::new();
    for i in simple_quotient_family(a, lat, limits.max_lin)? {
        anns.push(quotient_moduloid(a, &i.set)?.annihilator(a).set);
    }
    for m in linearized_simple_modules(r, limits.max_ideals)? {
        if m.is_simple(a, &lat.two_sided, limits.max_lin)? {
            anns.push(m.annihilator(a).set);
        }
    }
    Ok(radical(intersect_all(a.len(), &anns)))
}

/// `J(A)`: the intersection of the maximal right ideals having a left unity
/// modulo themselves.
pub fn graded_jacobson(a: &FiniteAnneid, lat: &Lattices) -> Result<HomSubset> {
    if !is_regular(a).holds() {
        return Err(Error::NotRegular);
    }
    let modular = lat
        .maximal_right
        .iter()
        .filter(|i| !right_modular_unities(a, &i.set).is_empty())
        .map(|i| &i.set);
    Ok(radical(intersect_all(a.len(), modular)))
}

/// No proper two-sided ideal has `x` as a unity modulo it.
pub fn is_g_regular_anneid_element(a: &FiniteAnneid, lat: &Lattices, x: usize) -> bool {
    lat.two_sided
        .iter()
        .filter(|i| !i.set.is_full())
        .all(|i| !modular_unities(a, &i.set).contains(&x))
}

/// G-regularity of `x ∈ A` agrees with: `δ(x)` is not idempotent, or `x` is
/// G-regular in the ring `A(δ(x))`. Requires regularity and the Δ assumption.
pub fn g_regular_characterization_check(
    a: &FiniteAnneid,
    lat: &Lattices,
    components: &[ComponentRing],
) -> Result<Check> {
    if !is_regular(a).holds() {
        return Err(Error::PreconditionFailed("anneid is not regular".into()));
    }
    let delta = GradeGroupoid::derive(a);
    if !delta.delta_assumption_holds() {
        return Err(Error::PreconditionFailed("Δ assumption fails".into()));
    }
    for x in a.elements() {
        let lhs = is_g_regular_anneid_element(a, lat, x);
        let d = a.degree(x);
        let rhs = !delta.is_idempotent(d) || {
            let c = components.iter().find(|c| c.grade == d).ok_or_else(|| {
                Error::Inconsistent(format!("no component ring for {}", a.grade_name(d)))
            })?;
            classical::is_g_regular(&c.ring, c.from_anneid(x).expect("x lies in its component"))
        };
        if lhs != rhs {
            return Ok(Check::fail(vec![x]));
        }
    }
    Ok(Check::pass())
}

/// The homogeneous elements of the ring ideal `s`, asserted to form an
/// ideal of the anneid.
pub fn largest_homogeneous_ideal_in(r: &FiniteRing, s: &BitSet) -> Result<HomSubset> {
    let part = r.homogeneous_part(s);
    if !is_ideal(r.source(), &part, IdealSide::TwoSided) {
        return Err(Error::NotIdeal);
    }
    Ok(HomSubset::new(part, SubsetKind::TwoSidedIdeal))
}

/// Everything computed once per anneid and shared by the radicals and the
/// theorem suite.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub anneid: FiniteAnneid,
    pub limits: Limits,
    pub delta: GradeGroupoid,
    pub regular: Check,
    pub lattices: Lattices,
    pub ring: FiniteRing,
    /// `A(ε)` for each idempotent `ε`, in grade order.
    pub components: Vec<ComponentRing>,
}

impl Analysis {
    pub fn new(a: &FiniteAnneid, limits: Limits) -> Result<Self> {
        if a.len() > limits.max_elements {
            return Err(Error::SizeExceeded {
                actual: a.len(),
                limit: limits.max_elements,
            });
        }
        let delta = GradeGroupoid::derive(a);
        let ring = FiniteRing::linearize(a, limits.max_lin)?;
        let components = delta
            .idempotents()
            .iter()
            .map(|&eps| ComponentRing::new(a, eps))
            .collect::<Result<_>>()?;
        Ok(Analysis {
            anneid: a.clone(),
            limits,
            regular: is_regular(a),
            lattices: Lattices::compute(a, limits.max_ideals)?,
            delta,
            ring,
            components,
        })
    }

    pub fn is_regular(&self) -> bool {
        self.regular.holds()
    }

    pub fn delta_assumption(&self) -> bool {
        self.delta.delta_assumption_holds()
    }

    pub fn component(&self, eps: Grade) -> Option<&ComponentRing> {
        self.components.iter().find(|c| c.grade == eps)
    }

    pub fn radicals(&self) -> Result<Radicals> {
        let a = &self.anneid;
        let lat = &self.lattices;
        let components = self
            .components
            .iter()
            .map(|c| classical::classical_brown_mccoy(&c.ring, self.limits.max_ideals))
            .collect::<Result<_>>()?;
        Ok(Radicals {
            graded: graded_brown_mccoy(a, lat)?.set,
            large_graded: large_graded_brown_mccoy(a, lat, &self.ring, self.limits)?.set,
            jacobson: if self.is_regular() {
                Some(graded_jacobson(a, lat)?.set)
            } else {
                None
            },
            linearization: classical::classical_brown_mccoy(&self.ring, self.limits.max_ideals)?,
            components,
        })
    }
}

/// Radical values as bitsets: anneid ids for `G`, `G_l`, `J`; ring ids for
/// `G(Ā)`; component ids for each `G(A(ε))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Radicals {
    pub graded: BitSet,
    pub large_graded: BitSet,
    pub jacobson: Option<BitSet>,
    pub linearization: BitSet,
    pub components: Vec<BitSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub regular: bool,
    pub delta_assumption: bool,
    pub strongly_graded: bool,
    pub anneid_unity: bool,
    pub linearization_unity: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentRadical {
    pub grade: String,
    pub radical: Vec<String>,
}

/// Radicals rendered as label lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalReport {
    pub name: String,
    pub elements: usize,
    pub linearization_size: usize,
    pub flags: Flags,
    pub graded: Vec<String>,
    pub large_graded: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jacobson: Option<Vec<String>>,
    pub linearization: Vec<String>,
    pub components: Vec<ComponentRadical>,
}

impl RadicalReport {
    pub fn new(an: &Analysis, rad: &Radicals) -> Self {
        let a = &an.anneid;
        RadicalReport {
            name: a.name().to_string(),
            elements: a.len(),
            linearization_size: an.ring.size(),
            flags: Flags {
                regular: an.is_regular(),
                delta_assumption: an.delta_assumption(),
                strongly_graded: is_strongly_graded(a),
                anneid_unity: unity(a).is_some(),
                linearization_unity: an.ring.unity().is_some(),
            },
            graded: a.render(rad.graded.iter()),
            large_graded: a.render(rad.large_graded.iter()),
            jacobson: rad.jacobson.as_ref().map(|j| a.render(j.iter())),
            linearization: an.ring.render_set(&rad.linearization),
            components: an
                .components
                .iter()
                .zip(&rad.components)
                .map(|(c, g)| ComponentRadical {
                    grade: a.grade_name(c.grade).to_string(),
                    radical: a.render(c.lift(g, a.len()).iter()),
                })
                .collect(),
        }
    }

    pub fn compute(a: &FiniteAnneid, limits: Limits) -> Result<Self> {
        let an = Analysis::new(a, limits)?;
        let rad = an.radicals()?;
        Ok(Self::new(&an, &rad))
    }
}
