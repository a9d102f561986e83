//! Structural predicates: regularity, simplicity with unity, the unity
//! criterion for linearizations and strong grading.

use serde::Serialize;

use crate::anneid::FiniteAnneid;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::grades::GradeGroupoid;
use crate::ideals::principal_ideal;
use crate::ring::FiniteRing;

/// Outcome of a universally quantified check; a failure keeps its witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub witness: Option<Vec<usize>>,
}

impl Check {
    pub fn pass() -> Self {
        Check { witness: None }
    }

    pub fn fail(witness: Vec<usize>) -> Self {
        Check {
            witness: Some(witness),
        }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Regularity: `ac # bc` (or `ca # cb`) with both products nonzero forces
/// `a # b`. The witness is `(a, b, c)`.
pub fn is_regular(a: &FiniteAnneid) -> Check {
    for x in a.elements().skip(1) {
        for y in a.elements().skip(1) {
            if a.addable(x, y) {
                continue;
            }
            for c in a.elements().skip(1) {
                let (xc, yc) = (a.mul(x, c), a.mul(y, c));
                let (cx, cy) = (a.mul(c, x), a.mul(c, y));
                if (xc != 0 && yc != 0 && a.addable(xc, yc))
                    || (cx != 0 && cy != 0 && a.addable(cx, cy))
                {
                    return Check::fail(vec![x, y, c]);
                }
            }
        }
    }
    Check::pass()
}

/// Two-sided unity of the anneid.
pub fn unity(a: &FiniteAnneid) -> Option<usize> {
    a.elements()
        .find(|&e| a.elements().all(|x| a.mul(e, x) == x && a.mul(x, e) == x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SimpleWithUnity {
    pub simple_with_unity: bool,
    /// Also regular, i.e. a member of the class `M`.
    pub in_class_m: bool,
}

/// Nonzero, only the trivial two-sided ideals, and a unity.
pub fn is_simple_with_unity(a: &FiniteAnneid) -> SimpleWithUnity {
    let simple = !a.is_zero()
        && a.elements()
            .skip(1)
            .all(|x| principal_ideal(a, x).set.is_full());
    let with_unity = simple && unity(a).is_some();
    SimpleWithUnity {
        simple_with_unity: with_unity,
        in_class_m: with_unity && is_regular(a).holds(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnityCriterion {
    /// Every idempotent component has a unity and every element is framed
    /// by two of them.
    pub conditions_hold: bool,
    /// `Σ 1_ε` as an element of `Ā` when the conditions hold.
    pub unity: Option<usize>,
}

/// Decides whether `Ā` has a unity through the component unities and checks
/// the answer against a direct search in `Ā`.
pub fn unity_criterion(a: &FiniteAnneid, max_lin: usize) -> Result<UnityCriterion> {
    if !is_regular(a).holds() {
        return Err(Error::NotRegular);
    }
    let delta = GradeGroupoid::derive(a);
    let mut units = Vec::new();
    let mut all_have_unity = true;
    for &eps in delta.idempotents() {
        let comp = a.component(eps);
        let found = comp
            .iter()
            .copied()
            .find(|&e| comp.iter().all(|&x| a.mul(e, x) == x && a.mul(x, e) == x));
        match found {
            Some(e) => units.push(e),
            None => all_have_unity = false,
        }
    }
    let framed = all_have_unity
        && a.elements().skip(1).all(|x| {
            units.iter().any(|&e| a.mul(e, x) == x) && units.iter().any(|&f| a.mul(x, f) == x)
        });
    let ring = FiniteRing::linearize(a, max_lin)?;
    let direct = ring.unity();
    let predicted = framed.then(|| units.iter().fold(0, |acc, &e| ring.add(acc, ring.embed(e))));
    if predicted != direct {
        return Err(Error::Inconsistent(format!(
            "unity criterion predicts {:?}, direct search finds {:?}",
            predicted.map(|u| ring.render(u)),
            direct.map(|u| ring.render(u))
        )));
    }
    Ok(UnityCriterion {
        conditions_hold: framed,
        unity: predicted,
    })
}

/// Additive subgroup of the block holding `seeds`, generated by them.
pub(crate) fn block_span(a: &FiniteAnneid, seeds: impl IntoIterator<Item = usize>) -> BitSet {
    let mut set = BitSet::zero(a.len());
    let mut queue: Vec<usize> = seeds.into_iter().collect();
    while let Some(u) = queue.pop() {
        if !set.insert(u) {
            continue;
        }
        let members: Vec<usize> = set.iter().collect();
        for v in members {
            if let Some(s) = a.add(u, v) {
                queue.push(s);
            }
        }
        queue.push(a.neg(u));
    }
    set
}

/// `A(ξ)A(η)` additively spans `A(ξη)` whenever `ξη ≠ 0`.
pub fn is_strongly_graded(a: &FiniteAnneid) -> bool {
    let delta = GradeGroupoid::derive(a);
    delta.grades().all(|xi| {
        delta.grades().all(|eta| {
            let target = delta.product(xi, eta);
            if target.is_zero() {
                return true;
            }
            let products = a
                .component(xi)
                .into_iter()
                .flat_map(|x| a.component(eta).into_iter().map(move |y| a.mul(x, y)));
            block_span(a, products).len() == a.component(target).len()
        })
    })
}
