//! Finite anneids: the homogeneous part of a graded ring, stored as tables.
//!
//! Elements are dense ids `0..n` with `0` the zero element. Nonzero elements
//! are partitioned into addibility blocks; two elements are addable exactly
//! when one of them is zero or both lie in the same block, so the almost
//! transitivity axiom (a2) holds by construction. Each block carries its own
//! addition table over `{0} ∪ block`, and multiplication is a total `n × n`
//! table.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grades::Grade;

/// The on-disk anneid document.
///
/// `blocks` lists label indices; `add[k]` is the addition table of block `k`
/// over the local order `[0, blocks[k][0], blocks[k][1], ...]` with entries
/// given as label indices; `mul` is the full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnneidDocument {
    pub name: String,
    pub elements: Vec<String>,
    pub blocks: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block_names: Option<Vec<String>>,
    pub add: Vec<Vec<Vec<usize>>>,
    pub mul: Vec<Vec<usize>>,
}

impl AnneidDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MalformedTables(format!("parse error: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axiom {
    /// `0` absorbs multiplication on both sides.
    A1ZeroAbsorbs,
    /// Every block together with `0` is a commutative group.
    A3AdditiveGroup,
    /// Multiplication distributes over addable sums and preserves addability.
    A4Distributivity,
    /// Nonzero products of two blocks stay inside one block.
    GradingSoundness,
    Associativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::A1ZeroAbsorbs => "a1",
            Axiom::A3AdditiveGroup => "a3",
            Axiom::A4Distributivity => "a4",
            Axiom::GradingSoundness => "grading soundness",
            Axiom::Associativity => "associativity",
        })
    }
}

/// One failed axiom instance with the elements that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
    pub labels: Vec<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({})", self.axiom, self.labels.join(", "))
    }
}

/// A validated finite anneid. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAnneid {
    name: String,
    labels: Vec<String>,
    blocks: Vec<Vec<usize>>,
    block_names: Vec<String>,
    block_of: Vec<Option<usize>>,
    /// Position inside the owning block's local order (`0` for the zero element).
    local: Vec<usize>,
    /// Per block, `(m+1)^2` table of global ids.
    add: Vec<Vec<usize>>,
    neg: Vec<usize>,
    mul: Vec<usize>,
}

impl FiniteAnneid {
    /// Checks shapes and every axiom, reporting all violations at once.
    pub fn validate(doc: AnneidDocument) -> Result<Self> {
        let anneid = Self::assemble(doc)?;
        let violations = anneid.violations();
        if violations.is_empty() {
            Ok(anneid)
        } else {
            Err(Error::AxiomViolation(violations))
        }
    }

    fn assemble(doc: AnneidDocument) -> Result<Self> {
        let n = doc.elements.len();
        let malformed = |m: String| Err(Error::MalformedTables(m));
        if n == 0 {
            return malformed("no elements; the first element must be zero".into());
        }
        let mut block_of = vec![None; n];
        let mut local = vec![0; n];
        for (k, block) in doc.blocks.iter().enumerate() {
            if block.is_empty() {
                return malformed(format!("block {k} is empty"));
            }
            for (pos, &e) in block.iter().enumerate() {
                if e == 0 || e >= n {
                    return malformed(format!("block {k} lists invalid element index {e}"));
                }
                if let Some(other) = block_of[e] {
                    return malformed(format!("element {e} appears in blocks {other} and {k}"));
                }
                block_of[e] = Some(k);
                local[e] = pos + 1;
            }
        }
        if let Some(e) = (1..n).find(|&e| block_of[e].is_none()) {
            return malformed(format!("element {e} belongs to no block"));
        }
        if doc.add.len() != doc.blocks.len() {
            return malformed(format!(
                "{} addition tables for {} blocks",
                doc.add.len(),
                doc.blocks.len()
            ));
        }
        let mut add = Vec::with_capacity(doc.blocks.len());
        for (k, (table, block)) in doc.add.iter().zip(&doc.blocks).enumerate() {
            let m = block.len() + 1;
            if table.len() != m || table.iter().any(|row| row.len() != m) {
                return malformed(format!("addition table of block {k} is not {m}x{m}"));
            }
            if let Some(&bad) = table.iter().flatten().find(|&&x| x >= n) {
                return malformed(format!(
                    "addition table of block {k} has entry {bad} out of range"
                ));
            }
            add.push(table.iter().flatten().copied().collect());
        }
        if doc.mul.len() != n || doc.mul.iter().any(|row| row.len() != n) {
            return malformed(format!("multiplication table is not {n}x{n}"));
        }
        if let Some(&bad) = doc.mul.iter().flatten().find(|&&x| x >= n) {
            return malformed(format!("multiplication table entry {bad} out of range"));
        }
        let block_names = match doc.block_names {
            Some(names) if names.len() == doc.blocks.len() => names,
            Some(names) => {
                return malformed(format!(
                    "{} block names for {} blocks",
                    names.len(),
                    doc.blocks.len()
                ))
            }
            None => (1..=doc.blocks.len()).map(|k| format!("d{k}")).collect(),
        };
        let mut anneid = FiniteAnneid {
            name: doc.name,
            labels: doc.elements,
            blocks: doc.blocks,
            block_names,
            block_of,
            local,
            add,
            neg: vec![0; n],
            mul: doc.mul.into_iter().flatten().collect(),
        };
        for a in 1..n {
            let k = anneid.block_of[a].unwrap();
            let inverse = anneid.block_elems(k).find(|&b| anneid.raw_add(a, b) == 0);
            if let Some(b) = inverse {
                anneid.neg[a] = b;
            }
        }
        Ok(anneid)
    }

    /// `{0} ∪ block` in local order.
    fn block_elems(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(0).chain(self.blocks[k].iter().copied())
    }

    fn local_in(&self, k: usize, a: usize) -> Option<usize> {
        match a {
            0 => Some(0),
            _ if self.block_of[a] == Some(k) => Some(self.local[a]),
            _ => None,
        }
    }

    /// Table lookup for two addable elements, without the identity shortcut.
    fn raw_add(&self, a: usize, b: usize) -> usize {
        let k = match self.block_of[a].or(self.block_of[b]) {
            Some(k) => k,
            None => return 0,
        };
        let m = self.blocks[k].len() + 1;
        self.add[k][self.local[a] * m + self.local[b]]
    }

    fn violation(&self, axiom: Axiom, witness: Vec<usize>) -> Violation {
        let labels = witness.iter().map(|&w| self.labels[w].clone()).collect();
        Violation {
            axiom,
            witness,
            labels,
        }
    }

    fn violations(&self) -> Vec<Violation> {
        let n = self.len();
        let mut out = Vec::new();

        for a in 0..n {
            if self.mul(0, a) != 0 || self.mul(a, 0) != 0 {
                out.push(self.violation(Axiom::A1ZeroAbsorbs, vec![a]));
            }
        }

        let mut closed = vec![true; self.blocks.len()];
        for (k, closed_k) in closed.iter_mut().enumerate() {
            let elems: Vec<usize> = self.block_elems(k).collect();
            let m = elems.len();
            let table = &self.add[k];
            for i in 0..m {
                for j in 0..m {
                    if self.local_in(k, table[i * m + j]).is_none() {
                        *closed_k = false;
                        out.push(self.violation(Axiom::A3AdditiveGroup, vec![elems[i], elems[j]]));
                    }
                }
            }
            if !*closed_k {
                continue;
            }
            let sum = |i: usize, j: usize| self.local[table[i * m + j]];
            for i in 0..m {
                if sum(0, i) != i || sum(i, 0) != i {
                    out.push(self.violation(Axiom::A3AdditiveGroup, vec![0, elems[i]]));
                }
                if !(0..m).any(|j| sum(i, j) == 0) {
                    out.push(self.violation(Axiom::A3AdditiveGroup, vec![elems[i]]));
                }
                for j in 0..m {
                    if sum(i, j) != sum(j, i) {
                        out.push(self.violation(Axiom::A3AdditiveGroup, vec![elems[i], elems[j]]));
                    }
                    for l in 0..m {
                        if sum(sum(i, j), l) != sum(i, sum(j, l)) {
                            out.push(self.violation(
                                Axiom::A3AdditiveGroup,
                                vec![elems[i], elems[j], elems[l]],
                            ));
                        }
                    }
                }
            }
        }

        for (members, _) in self.blocks.iter().zip(&closed).filter(|(_, &c)| c) {
            for &a in members {
                for &b in members {
                    let s = self.raw_add(a, b);
                    for c in 0..n {
                        let (ca, cb) = (self.mul(c, a), self.mul(c, b));
                        if !self.addable(ca, cb) || !self.sum_matches(ca, cb, self.mul(c, s)) {
                            out.push(self.violation(Axiom::A4Distributivity, vec![c, a, b]));
                        }
                        let (ac, bc) = (self.mul(a, c), self.mul(b, c));
                        if !self.addable(ac, bc) || !self.sum_matches(ac, bc, self.mul(s, c)) {
                            out.push(self.violation(Axiom::A4Distributivity, vec![a, b, c]));
                        }
                    }
                }
            }
        }

        for xi in 0..self.blocks.len() {
            for eta in 0..self.blocks.len() {
                let mut first: Option<(usize, usize, usize)> = None;
                'pairs: for &a in &self.blocks[xi] {
                    for &b in &self.blocks[eta] {
                        let p = self.mul(a, b);
                        if p == 0 {
                            continue;
                        }
                        match first {
                            None => first = Some((a, b, p)),
                            Some((a0, b0, p0)) if self.block_of[p0] != self.block_of[p] => {
                                out.push(
                                    self.violation(Axiom::GradingSoundness, vec![a0, b0, a, b]),
                                );
                                break 'pairs;
                            }
                            Some(_) => {}
                        }
                    }
                }
            }
        }

        for a in 1..n {
            for b in 1..n {
                let ab = self.mul(a, b);
                for c in 1..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        out.push(self.violation(Axiom::Associativity, vec![a, b, c]));
                    }
                }
            }
        }
        out
    }

    fn sum_matches(&self, x: usize, y: usize, expected: usize) -> bool {
        let block = self.block_of[x].or(self.block_of[y]);
        match block {
            Some(k) if !self.blocks_closed(k) => true,
            _ => self.raw_add(x, y) == expected,
        }
    }

    fn blocks_closed(&self, k: usize) -> bool {
        self.add[k].iter().all(|&s| self.local_in(k, s).is_some())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Whether the anneid is `{0}`.
    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Nonzero members of block `k`.
    pub fn block(&self, k: usize) -> &[usize] {
        &self.blocks[k]
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, a: usize) -> Option<usize> {
        self.block_of[a]
    }

    /// Local position of `a` inside its block, `0` for the zero element.
    pub fn local_index(&self, a: usize) -> usize {
        self.local[a]
    }

    /// Element at local position `pos` of block `k` (position `0` is zero).
    pub fn block_element(&self, k: usize, pos: usize) -> usize {
        if pos == 0 {
            0
        } else {
            self.blocks[k][pos - 1]
        }
    }

    pub fn degree(&self, a: usize) -> Grade {
        self.block_of[a].map_or(Grade::ZERO, Grade::of_block)
    }

    /// `A(δ)` as a list including zero. Empty-but-zero for the zero grade.
    pub fn component(&self, g: Grade) -> Vec<usize> {
        match g.block() {
            Some(k) => self.block_elems(k).collect(),
            None => vec![0],
        }
    }

    pub fn grade_name(&self, g: Grade) -> &str {
        match g.block() {
            Some(k) => &self.block_names[k],
            None => "0",
        }
    }

    pub fn block_names(&self) -> &[String] {
        &self.block_names
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b]
    }

    #[inline]
    pub fn addable(&self, a: usize, b: usize) -> bool {
        a == 0 || b == 0 || self.block_of[a] == self.block_of[b]
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> Option<usize> {
        if !self.addable(a, b) {
            return None;
        }
        Some(match (a, b) {
            (0, _) => b,
            (_, 0) => a,
            _ => self.raw_add(a, b),
        })
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> Option<usize> {
        self.add(a, self.neg[b])
    }

    /// Element `a` added to itself `k` times.
    pub fn scale(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.add(acc, a).expect("multiples are addable"))
    }

    pub fn to_document(&self) -> AnneidDocument {
        let n = self.len();
        AnneidDocument {
            name: self.name.clone(),
            elements: self.labels.clone(),
            blocks: self.blocks.clone(),
            block_names: Some(self.block_names.clone()),
            add: self
                .add
                .iter()
                .zip(&self.blocks)
                .map(|(t, b)| t.chunks(b.len() + 1).map(<[usize]>::to_vec).collect())
                .collect(),
            mul: self.mul.chunks(n).map(<[usize]>::to_vec).collect(),
        }
    }

    /// Renders a set of element ids as labels.
    pub fn render(&self, set: impl IntoIterator<Item = usize>) -> Vec<String> {
        set.into_iter().map(|a| self.labels[a].clone()).collect()
    }

    /// The anneid `{0}`.
    pub fn zero(name: impl Into<String>) -> Self {
        Self::validate(AnneidDocument {
            name: name.into(),
            elements: vec!["0".into()],
            blocks: vec![],
            block_names: None,
            add: vec![],
            mul: vec![vec![0]],
        })
        .expect("zero anneid is valid")
    }
}

/// Builds a document from closures; used by every generator in the crate.
///
/// `blocks[k]` holds labels of the nonzero elements of block `k`; element ids
/// are assigned block by block after the zero element. `add(k, i, j)` and
/// `mul(x, y)` receive and return global ids.
pub(crate) fn build_document(
    name: impl Into<String>,
    blocks: Vec<(String, Vec<String>)>,
    mut add: impl FnMut(usize, usize, usize) -> usize,
    mut mul: impl FnMut(usize, usize) -> usize,
) -> AnneidDocument {
    let mut elements = vec!["0".to_string()];
    let mut ids = Vec::new();
    let mut names = Vec::new();
    for (bname, labels) in blocks {
        names.push(bname);
        let start = elements.len();
        elements.extend(labels);
        ids.push((start..elements.len()).collect::<Vec<_>>());
    }
    let n = elements.len();
    let add_tables = ids
        .iter()
        .enumerate()
        .map(|(k, members)| {
            let local: Vec<usize> = std::iter::once(0).chain(members.iter().copied()).collect();
            local
                .iter()
                .map(|&i| local.iter().map(|&j| add(k, i, j)).collect())
                .collect()
        })
        .collect();
    let mul_table = (0..n)
        .map(|x| (0..n).map(|y| mul(x, y)).collect())
        .collect();
    AnneidDocument {
        name: name.into(),
        elements,
        blocks: ids,
        block_names: Some(names),
        add: add_tables,
        mul: mul_table,
    }
}
