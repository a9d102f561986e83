//! Congruence classes modulo a (right) ideal and the factor anneid `A/I`.

use crate::anneid::{build_document, FiniteAnneid};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ideals::{is_ideal, IdealSide};

/// Classes of `A` modulo `I`: `I` itself is class `0`; every other class is
/// a coset `a + (I ∩ A(δ(a)))` inside one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    pub class_of: Vec<usize>,
    /// Smallest member of each class.
    pub reps: Vec<usize>,
    /// Classes grouped by the block of their members, nonzero classes only.
    pub blocks: Vec<(usize, Vec<usize>)>,
}

impl Congruence {
    pub fn new(a: &FiniteAnneid, i: &BitSet) -> Self {
        let mut class_of = vec![usize::MAX; a.len()];
        let mut reps = vec![0];
        for x in i.iter() {
            class_of[x] = 0;
        }
        let mut blocks = Vec::new();
        for k in 0..a.block_count() {
            let mut members = Vec::new();
            for &x in a.block(k) {
                if class_of[x] != usize::MAX {
                    continue;
                }
                let c = reps.len();
                reps.push(x);
                members.push(c);
                for &y in a.block(k) {
                    if i.contains(a.sub(x, y).unwrap()) {
                        class_of[y] = c;
                    }
                }
            }
            if !members.is_empty() {
                blocks.push((k, members));
            }
        }
        Congruence {
            class_of,
            reps,
            blocks,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Labels `[rep]` for nonzero classes and `0` for the zero class.
    pub fn labels(&self, a: &FiniteAnneid) -> Vec<String> {
        self.reps
            .iter()
            .enumerate()
            .map(|(c, &r)| {
                if c == 0 {
                    "0".to_string()
                } else {
                    format!("[{}]", a.label(r))
                }
            })
            .collect()
    }

    /// Builds a document on the classes with addition from the blocks and
    /// the given product of classes.
    pub(crate) fn document(
        &self,
        a: &FiniteAnneid,
        name: String,
        mut mul: impl FnMut(usize, usize) -> usize,
    ) -> crate::anneid::AnneidDocument {
        let labels = self.labels(a);
        let order = self.document_order();
        let mut by_id = vec![0usize; self.len()];
        for c in 0..self.len() {
            by_id[order[c]] = c;
        }
        let blocks = self
            .blocks
            .iter()
            .map(|(k, members)| {
                (
                    a.block_names()[*k].clone(),
                    members.iter().map(|&c| labels[c].clone()).collect(),
                )
            })
            .collect();
        build_document(
            name,
            blocks,
            |_, x, y| {
                let (rx, ry) = (self.reps[by_id[x]], self.reps[by_id[y]]);
                order[self.class_of[a.add(rx, ry).expect("same block")]]
            },
            |x, y| order[mul(by_id[x], by_id[y])],
        )
    }

    /// Class ids re-indexed in document order (block by block).
    pub(crate) fn document_order(&self) -> Vec<usize> {
        let mut order = vec![0usize; self.len()];
        let mut next = 1;
        for (_, members) in &self.blocks {
            for &c in members {
                order[c] = next;
                next += 1;
            }
        }
        order
    }
}

/// `A/I` together with the canonical map `A → A/I`.
#[derive(Debug, Clone)]
pub struct FactorAnneid {
    pub anneid: FiniteAnneid,
    pub canonical: Vec<usize>,
}

pub fn factor_anneid(a: &FiniteAnneid, i: &BitSet) -> Result<FactorAnneid> {
    if !is_ideal(a, i, IdealSide::TwoSided) {
        return Err(Error::NotTwoSidedIdeal);
    }
    let cong = Congruence::new(a, i);
    let name = format!("{}/I", a.name());
    let doc = cong.document(a, name, |x, y| {
        cong.class_of[a.mul(cong.reps[x], cong.reps[y])]
    });
    let anneid = FiniteAnneid::validate(doc)
        .map_err(|e| Error::Inconsistent(format!("factor anneid: {e}")))?;
    let order = cong.document_order();
    let canonical = a.elements().map(|x| order[cong.class_of[x]]).collect();
    Ok(FactorAnneid { anneid, canonical })
}
