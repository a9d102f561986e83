//! Right and two-sided ideals of a finite anneid.
//!
//! Every ideal is a union of subgroups of blocks, closed under the allowed
//! one-sided products. Lattices are generated as the join-closure of the
//! principal ideals starting from `{0}`.

use std::collections::HashSet;

use serde::Serialize;

use crate::anneid::FiniteAnneid;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::grades::{Grade, GradeGroupoid};
use crate::properties::is_regular;
use crate::ring::ComponentRing;

/// Default bound on the number of ideals in one lattice.
pub const DEFAULT_MAX_IDEALS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubsetKind {
    Subanneid,
    RightIdeal,
    TwoSidedIdeal,
    Radical,
}

/// A subset of an anneid together with the role it plays.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomSubset {
    pub set: BitSet,
    pub kind: SubsetKind,
}

impl HomSubset {
    pub fn new(set: BitSet, kind: SubsetKind) -> Self {
        HomSubset { set, kind }
    }

    pub fn contains(&self, a: usize) -> bool {
        self.set.contains(a)
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn render(&self, a: &FiniteAnneid) -> Vec<String> {
        a.render(self.set.iter())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealSide {
    Right,
    TwoSided,
}

/// Closes `base ∪ seeds` under addable differences and products with `A`
/// on the allowed sides. `base` must already be closed.
pub fn close(
    a: &FiniteAnneid,
    mut base: BitSet,
    seeds: impl IntoIterator<Item = usize>,
    side: IdealSide,
) -> BitSet {
    let mut queue: Vec<usize> = seeds.into_iter().collect();
    while let Some(u) = queue.pop() {
        if !base.insert(u) {
            continue;
        }
        for x in a.elements().skip(1) {
            queue.push(a.mul(u, x));
            if side == IdealSide::TwoSided {
                queue.push(a.mul(x, u));
            }
        }
        if let Some(k) = a.block_of(u) {
            for &v in a.block(k) {
                if base.contains(v) {
                    queue.push(a.sub(u, v).unwrap());
                    queue.push(a.sub(v, u).unwrap());
                }
            }
            queue.push(a.neg(u));
        }
    }
    base
}

pub fn principal_ideal(a: &FiniteAnneid, x: usize) -> HomSubset {
    HomSubset::new(
        close(a, BitSet::zero(a.len()), [x], IdealSide::TwoSided),
        SubsetKind::TwoSidedIdeal,
    )
}

pub fn principal_right_ideal(a: &FiniteAnneid, x: usize) -> HomSubset {
    HomSubset::new(
        close(a, BitSet::zero(a.len()), [x], IdealSide::Right),
        SubsetKind::RightIdeal,
    )
}

/// Whether `set` contains 0, is closed under addable differences and under
/// products on the given sides.
pub fn is_ideal(a: &FiniteAnneid, set: &BitSet, side: IdealSide) -> bool {
    if !set.contains(0) {
        return false;
    }
    set.iter().all(|u| {
        set.iter()
            .all(|v| a.sub(u, v).is_none_or(|d| set.contains(d)))
            && a.elements().all(|x| {
                set.contains(a.mul(u, x)) && (side == IdealSide::Right || set.contains(a.mul(x, u)))
            })
    })
}

fn enumerate(a: &FiniteAnneid, side: IdealSide, max_ideals: usize) -> Result<Vec<BitSet>> {
    let n = a.len();
    let principal: Vec<BitSet> = a
        .elements()
        .map(|x| close(a, BitSet::zero(n), [x], side))
        .collect();
    let zero = BitSet::zero(n);
    let mut seen: HashSet<BitSet> = HashSet::from([zero.clone()]);
    let mut out = vec![zero];
    let mut next = 0;
    while next < out.len() {
        let current = out[next].clone();
        next += 1;
        let mut tried: HashSet<&BitSet> = HashSet::new();
        for x in a.elements() {
            if current.contains(x) || !tried.insert(&principal[x]) {
                continue;
            }
            let joined = close(a, current.clone(), principal[x].iter(), side);
            if seen.insert(joined.clone()) {
                if out.len() >= max_ideals {
                    return Err(Error::LatticeTooLarge { limit: max_ideals });
                }
                out.push(joined);
            }
        }
    }
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    Ok(out)
}

pub fn enumerate_right_ideals(a: &FiniteAnneid, max_ideals: usize) -> Result<Vec<HomSubset>> {
    Ok(enumerate(a, IdealSide::Right, max_ideals)?
        .into_iter()
        .map(|s| HomSubset::new(s, SubsetKind::RightIdeal))
        .collect())
}

pub fn enumerate_ideals(a: &FiniteAnneid, max_ideals: usize) -> Result<Vec<HomSubset>> {
    Ok(enumerate(a, IdealSide::TwoSided, max_ideals)?
        .into_iter()
        .map(|s| HomSubset::new(s, SubsetKind::TwoSidedIdeal))
        .collect())
}

/// Proper members of `lattice` not strictly below another proper member.
pub fn maximal_members(lattice: &[HomSubset]) -> Vec<HomSubset> {
    let mut proper: Vec<&HomSubset> = lattice.iter().filter(|i| !i.set.is_full()).collect();
    proper.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.set.cmp(&y.set)));
    let mut maximal: Vec<HomSubset> = Vec::new();
    for i in proper {
        if !maximal.iter().any(|m| i.set.is_subset(&m.set)) {
            maximal.push(i.clone());
        }
    }
    maximal.sort_by(|x, y| x.set.cmp(&y.set));
    maximal
}

pub fn maximal_right_ideals(a: &FiniteAnneid, max_ideals: usize) -> Result<Vec<HomSubset>> {
    Ok(maximal_members(&enumerate_right_ideals(a, max_ideals)?))
}

pub fn maximal_ideals(a: &FiniteAnneid, max_ideals: usize) -> Result<Vec<HomSubset>> {
    Ok(maximal_members(&enumerate_ideals(a, max_ideals)?))
}

/// Both lattices of one anneid, computed once.
#[derive(Debug, Clone)]
pub struct Lattices {
    pub right: Vec<HomSubset>,
    pub two_sided: Vec<HomSubset>,
    pub maximal_right: Vec<HomSubset>,
    pub maximal_two_sided: Vec<HomSubset>,
}

impl Lattices {
    pub fn compute(a: &FiniteAnneid, max_ideals: usize) -> Result<Self> {
        let right = enumerate_right_ideals(a, max_ideals)?;
        let two_sided = enumerate_ideals(a, max_ideals)?;
        Ok(Lattices {
            maximal_right: maximal_members(&right),
            maximal_two_sided: maximal_members(&two_sided),
            right,
            two_sided,
        })
    }
}

/// `Ǐ`: the largest two-sided ideal inside the right ideal `i`, as
/// `{a : ⟨a⟩ ⊆ I}`.
pub fn check_of(a: &FiniteAnneid, i: &HomSubset) -> HomSubset {
    let set = BitSet::from_iter_in(
        a.len(),
        i.set
            .iter()
            .filter(|&x| principal_ideal(a, x).set.is_subset(&i.set)),
    );
    HomSubset::new(set, SubsetKind::TwoSidedIdeal)
}

/// `{a : Aa ⊆ I}`.
pub fn left_quotient(a: &FiniteAnneid, i: &BitSet) -> BitSet {
    BitSet::from_iter_in(
        a.len(),
        a.elements()
            .filter(|&x| a.elements().all(|y| i.contains(a.mul(y, x)))),
    )
}

/// `x ∼ y mod I`: both in `I`, or addable with difference in `I`.
pub fn congruent(a: &FiniteAnneid, i: &BitSet, x: usize, y: usize) -> bool {
    (i.contains(x) && i.contains(y)) || a.sub(x, y).is_some_and(|d| i.contains(d))
}

/// All `e` with `ea ∼ a` and `ae ∼ a` modulo `i` for every `a`.
pub fn modular_unities(a: &FiniteAnneid, i: &BitSet) -> Vec<usize> {
    a.elements()
        .filter(|&e| {
            a.elements()
                .all(|x| congruent(a, i, a.mul(e, x), x) && congruent(a, i, a.mul(x, e), x))
        })
        .collect()
}

/// All `e` with `ea ∼ a` modulo the right ideal `i` for every `a`.
pub fn right_modular_unities(a: &FiniteAnneid, i: &BitSet) -> Vec<usize> {
    a.elements()
        .filter(|&e| a.elements().all(|x| congruent(a, i, a.mul(e, x), x)))
        .collect()
}

pub fn is_modular(a: &FiniteAnneid, i: &BitSet) -> bool {
    !modular_unities(a, i).is_empty()
}

/// The common degree of the unities modulo a proper modular ideal.
pub fn modular_degree(a: &FiniteAnneid, i: &BitSet) -> Result<Grade> {
    if !is_regular(a).holds() {
        return Err(Error::NotRegular);
    }
    if i.is_full() {
        return Err(Error::PreconditionFailed("ideal is not proper".into()));
    }
    let unities = modular_unities(a, i);
    let Some(&first) = unities.first() else {
        return Err(Error::NotModular);
    };
    let degree = a.degree(first);
    if unities.iter().any(|&e| a.degree(e) != degree) {
        return Err(Error::DegreesDiffer);
    }
    if !GradeGroupoid::derive(a).is_idempotent(degree) {
        return Err(Error::Inconsistent(format!(
            "unity degree {} is not idempotent",
            a.grade_name(degree)
        )));
    }
    Ok(degree)
}

/// `I ∩ A(ε)` in the ids of the component ring.
pub fn contract_ideal(a: &FiniteAnneid, i: &BitSet, eps: Grade) -> Result<(ComponentRing, BitSet)> {
    let c = ComponentRing::new(a, eps)?;
    let restricted = c.restrict(i);
    Ok((c, restricted))
}

/// `K = {x ∈ A : xA ∩ A(ε) ⊆ I}` for a right ideal `I` of `A(ε)` given in
/// component ids.
pub fn extend_ideal(a: &FiniteAnneid, component: &ComponentRing, i: &BitSet) -> HomSubset {
    let eps = component.grade;
    let inside = component.lift(i, a.len());
    let set = BitSet::from_iter_in(
        a.len(),
        a.elements().filter(|&x| {
            a.elements().all(|y| {
                let p = a.mul(x, y);
                a.degree(p) != eps || inside.contains(p)
            })
        }),
    );
    HomSubset::new(set, SubsetKind::RightIdeal)
}
