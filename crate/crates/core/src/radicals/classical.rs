//! The classical Brown–McCoy radical of a finite ring, computed by two
//! independent algorithms.
//!
//! The first intersects the maximal ideals `M` with `R/M` simple with unity.
//! Such an `M` contains `T_e`, the ideal generated by all `eg − g` and
//! `ge − g`, for some `e`; conversely every maximal ideal above a proper
//! `T_e` qualifies. The second collects the elements whose principal ideal
//! consists of G-regular elements.

use std::collections::HashSet;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ring::{FiniteRing, Side, Span};

/// `G(x)`: the additive subgroup generated by `xy − y` and `yxz − yz`.
pub fn g_set(r: &FiniteRing, x: usize) -> BitSet {
    let gens = r.additive_generators();
    let mut span = Span::new(r);
    let base: Vec<usize> = gens.iter().map(|&g| r.sub(r.mul(x, g), g)).collect();
    for &p in &base {
        span.extend(p);
    }
    for &y in gens {
        for &p in &base {
            span.extend(r.mul(y, p));
        }
    }
    span.into_set()
}

pub fn is_g_regular(r: &FiniteRing, x: usize) -> bool {
    g_set(r, x).contains(x)
}

/// The maximal ideals `M` with `R/M` simple with unity, in set order.
pub fn unital_maximal_ideals(r: &FiniteRing, max_ideals: usize) -> Result<Vec<BitSet>> {
    let gens = r.additive_generators();
    let mut seeds: Vec<BitSet> = Vec::new();
    let mut seen: HashSet<BitSet> = HashSet::new();
    for e in r.elements() {
        let t = r
            .ideal_closure(
                gens.iter()
                    .flat_map(|&g| [r.sub(r.mul(e, g), g), r.sub(r.mul(g, e), g)]),
                Side::TwoSided,
            )
            .into_set();
        if !t.is_full() && seen.insert(t.clone()) {
            seeds.push(t);
        }
    }
    let minimal: Vec<&BitSet> = seeds
        .iter()
        .filter(|t| !seeds.iter().any(|u| u != *t && u.is_subset(t)))
        .collect();

    let mut maximal: HashSet<BitSet> = HashSet::new();
    let mut visited: HashSet<BitSet> = HashSet::new();
    for t in minimal {
        let mut queue = vec![t.clone()];
        visited.insert(t.clone());
        while let Some(ideal) = queue.pop() {
            let mut covered = ideal.clone();
            let mut has_proper_successor = false;
            let members: Vec<usize> = ideal.iter().collect();
            let base = span_of(r, &ideal);
            for x in r.elements() {
                if covered.contains(x) {
                    continue;
                }
                for &m in &members {
                    covered.insert(r.add(x, m));
                }
                let mut span = base.clone();
                r.grow_ideal(&mut span, [x], Side::TwoSided);
                let next = span.into_set();
                if next.is_full() {
                    continue;
                }
                has_proper_successor = true;
                if visited.insert(next.clone()) {
                    if visited.len() > max_ideals {
                        return Err(Error::LatticeTooLarge { limit: max_ideals });
                    }
                    queue.push(next);
                }
            }
            if !has_proper_successor {
                maximal.insert(ideal);
            }
        }
    }
    let mut out: Vec<BitSet> = maximal.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Intersection of the maximal ideals with simple unital quotient.
pub fn brown_mccoy_by_maximal_ideals(r: &FiniteRing, max_ideals: usize) -> Result<BitSet> {
    let mut out = BitSet::full(r.size());
    for m in unital_maximal_ideals(r, max_ideals)? {
        out.intersect_with(&m);
    }
    Ok(out)
}

/// Rebuilds a span for a set already known to be an additive subgroup.
fn span_of<'r>(r: &'r FiniteRing, set: &BitSet) -> Span<'r> {
    let mut span = Span::new(r);
    for x in set.iter() {
        span.extend(x);
    }
    span
}

/// `{x : every element of ⟨x⟩ is G-regular}`.
pub fn brown_mccoy_by_g_regularity(r: &FiniteRing) -> BitSet {
    let n = r.size();
    let regular = BitSet::from_iter_in(n, r.elements().filter(|&x| is_g_regular(r, x)));
    let mut good = BitSet::new(n);
    let mut bad = BitSet::new(n);
    let gens = r.additive_generators();
    for x in r.elements() {
        if good.contains(x) || bad.contains(x) {
            continue;
        }
        if !regular.contains(x) {
            bad.insert(x);
            continue;
        }
        // closure of {x} with early exit on a non-regular element
        let mut span = Span::new(r);
        let mut queue = vec![x];
        let mut ok = true;
        while let Some(u) = queue.pop() {
            if span.contains(u) {
                continue;
            }
            span.extend(u);
            if !span.set().is_subset(&regular) {
                ok = false;
                break;
            }
            for &g in gens {
                queue.push(r.mul(u, g));
                queue.push(r.mul(g, u));
            }
        }
        if ok {
            good.union_with(span.set());
        } else {
            bad.insert(x);
        }
    }
    good
}

/// Both algorithms, required to agree.
pub fn classical_brown_mccoy(r: &FiniteRing, max_ideals: usize) -> Result<BitSet> {
    let by_ideals = brown_mccoy_by_maximal_ideals(r, max_ideals)?;
    let by_regularity = brown_mccoy_by_g_regularity(r);
    if by_ideals != by_regularity {
        return Err(Error::AlgorithmsDisagree(format!(
            "{}: maximal ideals give {:?}, G-regularity gives {:?}",
            r.name(),
            r.render_set(&by_ideals),
            r.render_set(&by_regularity)
        )));
    }
    Ok(by_ideals)
}
