//! Exhaustive search among small `C2`-graded anneids for a simple anneid
//! whose linearization has no unity and with `G(A(e)) ⊊ G(A) ∩ A(e)`.

use serde::Serialize;

use crate::anneid::{build_document, AnneidDocument, FiniteAnneid};
use crate::bitset::BitSet;
use crate::grades::Grade;
use crate::ideals::{principal_ideal, Lattices, DEFAULT_MAX_IDEALS};
use crate::radicals::classical::classical_brown_mccoy;
use crate::radicals::graded_brown_mccoy;
use crate::ring::{ComponentRing, FiniteRing, DEFAULT_MAX_LIN};

/// A finite abelian group `Z_{o_1} × … × Z_{o_k}` with elements in
/// mixed-radix order, `0` first.
#[derive(Debug, Clone)]
struct Group {
    name: &'static str,
    orders: Vec<usize>,
}

impl Group {
    fn all() -> Vec<Group> {
        [
            ("Z2", vec![2]),
            ("Z3", vec![3]),
            ("Z4", vec![4]),
            ("V4", vec![2, 2]),
            ("Z5", vec![5]),
        ]
        .into_iter()
        .map(|(name, orders)| Group { name, orders })
        .collect()
    }

    fn len(&self) -> usize {
        self.orders.iter().product()
    }

    fn coords(&self, mut x: usize) -> Vec<usize> {
        self.orders
            .iter()
            .map(|&o| {
                let c = x % o;
                x /= o;
                c
            })
            .collect()
    }

    fn index(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.orders)
            .rev()
            .fold(0, |acc, (&c, &o)| acc * o + c % o)
    }

    fn add(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.coords(x), self.coords(y));
        self.index(&a.iter().zip(&b).map(|(p, q)| p + q).collect::<Vec<_>>())
    }

    fn scale(&self, x: usize, k: usize) -> usize {
        self.index(&self.coords(x).iter().map(|c| c * k).collect::<Vec<_>>())
    }

    fn order_of(&self, x: usize) -> usize {
        (1..=self.len())
            .find(|&k| self.scale(x, k) == 0)
            .expect("finite group")
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Every bilinear map `G × H → K` as a `|G| × |H|` table.
fn bilinear_maps(g: &Group, h: &Group, k: &Group) -> Vec<Vec<Vec<usize>>> {
    let pairs: Vec<(usize, usize)> = (0..g.orders.len())
        .flat_map(|i| (0..h.orders.len()).map(move |j| (i, j)))
        .collect();
    let choices: Vec<Vec<usize>> = pairs
        .iter()
        .map(|&(i, j)| {
            let d = gcd(g.orders[i], h.orders[j]);
            (0..k.len())
                .filter(|&v| d.is_multiple_of(k.order_of(v)))
                .collect()
        })
        .collect();
    let mut maps = Vec::new();
    let mut digits = vec![0usize; pairs.len()];
    loop {
        let table = (0..g.len())
            .map(|x| {
                let a = g.coords(x);
                (0..h.len())
                    .map(|y| {
                        let b = h.coords(y);
                        pairs
                            .iter()
                            .zip(&digits)
                            .enumerate()
                            .fold(0, |acc, (p, (&(i, j), &d))| {
                                k.add(acc, k.scale(choices[p][d], a[i] * b[j]))
                            })
                    })
                    .collect()
            })
            .collect();
        maps.push(table);
        let mut p = 0;
        loop {
            if p == digits.len() {
                return maps;
            }
            digits[p] += 1;
            if digits[p] < choices[p].len() {
                break;
            }
            digits[p] = 0;
            p += 1;
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Finding {
    pub anneid: AnneidDocument,
    pub component_radical: Vec<String>,
    pub intersection: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    /// Largest `|A|`, zero included.
    pub bound: usize,
    pub candidates: usize,
    pub valid: usize,
    /// False when some component pair was skipped for exceeding the budget.
    pub complete: bool,
    pub finding: Option<Finding>,
}

pub const DEFAULT_MAX_CANDIDATES: usize = 10_000_000;

/// Only `{0}` and `A` are two-sided ideals, and `A ≠ 0`.
pub fn is_graded_simple(a: &FiniteAnneid) -> bool {
    !a.is_zero()
        && a.elements()
            .skip(1)
            .all(|x| principal_ideal(a, x).set.is_full())
}

/// Tests one anneid graded by `{e, g}` with block 0 the component `A(e)`.
pub fn strict_inclusion_finding(a: &FiniteAnneid) -> Option<Finding> {
    let e = Grade::of_block(0);
    if !is_graded_simple(a) {
        return None;
    }
    let ring = FiniteRing::linearize(a, DEFAULT_MAX_LIN).ok()?;
    if ring.unity().is_some() {
        return None;
    }
    let comp = ComponentRing::new(a, e).ok()?;
    let lat = Lattices::compute(a, DEFAULT_MAX_IDEALS).ok()?;
    let g = graded_brown_mccoy(a, &lat).ok()?.set;
    let lhs = comp.lift(
        &classical_brown_mccoy(&comp.ring, DEFAULT_MAX_IDEALS).ok()?,
        a.len(),
    );
    let rhs = comp.lift(&comp.restrict(&g), a.len());
    (lhs.is_subset(&rhs) && lhs != rhs).then(|| Finding {
        anneid: a.to_document(),
        component_radical: a.render(lhs.iter()),
        intersection: a.render(rhs.iter()),
    })
}

fn candidate(ge: &Group, gg: &Group, tables: [&Vec<Vec<usize>>; 4]) -> AnneidDocument {
    let (ne, ng) = (ge.len(), gg.len());
    let [ee, eg, ge_t, gg_t] = tables;
    // global ids: 0, then A(e) ∖ 0 as 1..ne, then A(g) ∖ 0
    let local = |x: usize| -> (usize, usize) {
        if x == 0 {
            (2, 0)
        } else if x < ne {
            (0, x)
        } else {
            (1, x - ne + 1)
        }
    };
    let global = |block: usize, v: usize| -> usize {
        match (block, v) {
            (_, 0) => 0,
            (0, v) => v,
            (_, v) => ne - 1 + v,
        }
    };
    let blocks = vec![
        ("e".to_string(), (1..ne).map(|i| format!("e{i}")).collect()),
        ("g".to_string(), (1..ng).map(|i| format!("g{i}")).collect()),
    ];
    build_document(
        format!("C2[{},{}]", ge.name, gg.name),
        blocks,
        |k, x, y| {
            let grp = if k == 0 { ge } else { gg };
            let (lx, ly) = (local(x).1, local(y).1);
            global(k, grp.add(lx, ly))
        },
        |x, y| {
            let ((bx, lx), (by, ly)) = (local(x), local(y));
            match (bx, by) {
                (0, 0) => global(0, ee[lx][ly]),
                (0, 1) => global(1, eg[lx][ly]),
                (1, 0) => global(1, ge_t[lx][ly]),
                (1, 1) => global(0, gg_t[lx][ly]),
                _ => 0,
            }
        },
    )
}

/// Enumerates every `C2`-graded anneid with both components drawn from
/// `Z2, Z3, Z4, V4, Z5`, `|A| ≤ bound` and `e` idempotent, and returns the
/// first one exhibiting the strict inclusion. Component pairs whose candidate
/// count would take the total past `max_candidates` are skipped.
pub fn search_counterexample_strict_inclusion(
    bound: usize,
    max_candidates: usize,
) -> SearchOutcome {
    let mut out = SearchOutcome {
        bound,
        candidates: 0,
        valid: 0,
        complete: true,
        finding: None,
    };
    let groups = Group::all();
    for ge in &groups {
        for gg in &groups {
            if ge.len() + gg.len() - 1 > bound {
                continue;
            }
            let ee = bilinear_maps(ge, ge, ge);
            let eg = bilinear_maps(ge, gg, gg);
            let gem = bilinear_maps(gg, ge, gg);
            let ggm = bilinear_maps(gg, gg, ge);
            let count = [ee.len() - 1, eg.len(), gem.len(), ggm.len()]
                .iter()
                .try_fold(1usize, |acc, &n| acc.checked_mul(n));
            if count.is_none_or(|c| out.candidates + c > max_candidates) {
                out.complete = false;
                continue;
            }
            for t1 in ee.iter().filter(|t| t.iter().flatten().any(|&v| v != 0)) {
                for t2 in &eg {
                    for t3 in &gem {
                        for t4 in &ggm {
                            out.candidates += 1;
                            let Ok(a) = FiniteAnneid::validate(candidate(ge, gg, [t1, t2, t3, t4]))
                            else {
                                continue;
                            };
                            if a.block_count() != 2 {
                                continue;
                            }
                            out.valid += 1;
                            if let Some(f) = strict_inclusion_finding(&a) {
                                out.finding = Some(f);
                                return out;
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// The elements of `a` carrying the given labels.
pub fn labels_to_set(a: &FiniteAnneid, labels: &[String]) -> BitSet {
    BitSet::from_iter_in(
        a.len(),
        labels
            .iter()
            .filter_map(|l| a.labels().iter().position(|x| x == l)),
    )
}
