//! Finite associative rings presented as graded direct sums.
//!
//! Every [`FiniteRing`] is the linearization of some anneid: elements are
//! tuples with one coordinate per block and multiplication is extended
//! bilinearly from the anneid table. A ring given by plain tables is the
//! linearization of its one-block anneid, so the same representation covers
//! `Ā`, the component rings `A(ε)` and user supplied rings. Products are
//! computed on demand; nothing of size `|R|²` is materialized.

use crate::anneid::{build_document, FiniteAnneid};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::grades::{Grade, GradeGroupoid};

/// Default bound on `|Ā|`.
pub const DEFAULT_MAX_LIN: usize = 65536;

/// A ring given by full addition and multiplication tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRing {
    pub labels: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

impl TableRing {
    pub fn zmod(n: usize) -> Self {
        Self::multiples(1, n)
    }

    /// The subring `step·Z_modulus`, e.g. `multiples(2, 8) = {0,2,4,6}`.
    pub fn multiples(step: usize, modulus: usize) -> Self {
        assert!(step >= 1 && modulus.is_multiple_of(step));
        let values: Vec<usize> = (0..modulus / step).map(|i| i * step).collect();
        let index = |v: usize| v / step;
        TableRing {
            labels: values.iter().map(|v| v.to_string()).collect(),
            add: values
                .iter()
                .map(|&x| values.iter().map(|&y| index((x + y) % modulus)).collect())
                .collect(),
            mul: values
                .iter()
                .map(|&x| values.iter().map(|&y| index(x * y % modulus)).collect())
                .collect(),
        }
    }

    pub fn zero() -> Self {
        TableRing {
            labels: vec!["0".into()],
            add: vec![vec![0]],
            mul: vec![vec![0]],
        }
    }

    /// The field with four elements `{0, 1, w, w+1}`, `w² = w + 1`.
    pub fn f4() -> Self {
        // bit encoding: 1 -> 1, w -> 2
        let mul = |x: usize, y: usize| {
            let mut r = 0usize;
            for i in 0..2 {
                if y >> i & 1 == 1 {
                    r ^= x << i;
                }
            }
            if r & 4 != 0 {
                r ^= 0b111;
            }
            r
        };
        TableRing {
            labels: vec!["0".into(), "1".into(), "w".into(), "w+1".into()],
            add: (0..4).map(|x| (0..4).map(|y| x ^ y).collect()).collect(),
            mul: (0..4)
                .map(|x| (0..4).map(|y| mul(x, y)).collect())
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The one-block anneid whose linearization is this ring.
    pub fn to_anneid(&self, name: &str) -> Result<FiniteAnneid> {
        let n = self.len();
        if n == 0 || self.add.len() != n || self.mul.len() != n {
            return Err(Error::MalformedTables(
                "ring tables must be square and nonempty".into(),
            ));
        }
        let blocks = if n > 1 {
            vec![("R".to_string(), self.labels[1..].to_vec())]
        } else {
            vec![]
        };
        let doc = build_document(
            name,
            blocks,
            |_, i, j| self.add[i][j],
            |i, j| self.mul[i][j],
        );
        let mut doc = doc;
        doc.elements[0] = self.labels[0].clone();
        FiniteAnneid::validate(doc)
    }
}

/// A finite ring `⊕_k A(δ_k)` built over the homogeneous part `source`.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    source: FiniteAnneid,
    radix: Vec<usize>,
    strides: Vec<usize>,
    size: usize,
    /// Per block, `radix² ` table of local indices.
    local_add: Vec<Vec<u16>>,
    local_neg: Vec<Vec<u16>>,
    gens: Vec<usize>,
}

impl FiniteRing {
    /// `Ā`: tuples of block components, multiplication extended linearly.
    pub fn linearize(source: &FiniteAnneid, size_limit: usize) -> Result<Self> {
        let radix: Vec<usize> = source.blocks().iter().map(|b| b.len() + 1).collect();
        let mut size = 1usize;
        for &r in &radix {
            size = size
                .checked_mul(r)
                .filter(|&s| s <= size_limit)
                .ok_or_else(|| Error::SizeExceeded {
                    actual: radix.iter().fold(1usize, |acc, &r| acc.saturating_mul(r)),
                    limit: size_limit,
                })?;
        }
        let mut strides = Vec::with_capacity(radix.len());
        let mut s = 1;
        for &r in &radix {
            strides.push(s);
            s *= r;
        }
        let local_add = (0..radix.len())
            .map(|k| {
                let r = radix[k];
                (0..r * r)
                    .map(|ij| {
                        let (x, y) = (
                            source.block_element(k, ij / r),
                            source.block_element(k, ij % r),
                        );
                        source.local_index(source.add(x, y).expect("same block")) as u16
                    })
                    .collect()
            })
            .collect();
        let local_neg = (0..radix.len())
            .map(|k| {
                (0..radix[k])
                    .map(|i| source.local_index(source.neg(source.block_element(k, i))) as u16)
                    .collect()
            })
            .collect();
        let mut ring = FiniteRing {
            source: source.clone(),
            radix,
            strides,
            size,
            local_add,
            local_neg,
            gens: Vec::new(),
        };
        let mut span = Span::new(&ring);
        let mut gens = Vec::new();
        for a in source.elements().skip(1) {
            let u = ring.embed(a);
            if span.extend(u) {
                gens.push(u);
            }
        }
        ring.gens = gens;
        Ok(ring)
    }

    pub fn from_tables(name: &str, tables: &TableRing) -> Result<Self> {
        let a = tables.to_anneid(name)?;
        Self::linearize(&a, usize::MAX)
    }

    /// The one-block ring on a single anneid: `A(ε)` when `a` is the
    /// component anneid.
    pub fn name(&self) -> &str {
        self.source.name()
    }

    pub fn source(&self) -> &FiniteAnneid {
        &self.source
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    /// Additive generators: a minimal-by-greedy set of homogeneous elements.
    pub fn additive_generators(&self) -> &[usize] {
        &self.gens
    }

    #[inline]
    fn coord(&self, u: usize, k: usize) -> usize {
        u / self.strides[k] % self.radix[k]
    }

    /// Nonzero homogeneous components `(block, anneid element)` of `u`.
    pub fn components(&self, u: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.radix.len()).filter_map(move |k| {
            let c = self.coord(u, k);
            (c != 0).then(|| (k, self.source.block_element(k, c)))
        })
    }

    /// Image of an anneid element in the ring.
    #[inline]
    pub fn embed(&self, a: usize) -> usize {
        match self.source.block_of(a) {
            Some(k) => self.source.local_index(a) * self.strides[k],
            None => 0,
        }
    }

    /// The anneid element `u` equals, when `u` is homogeneous.
    pub fn homogeneous(&self, u: usize) -> Option<usize> {
        let mut comps = self.components(u);
        match (comps.next(), comps.next()) {
            (None, _) => Some(0),
            (Some((_, a)), None) => Some(a),
            _ => None,
        }
    }

    #[inline]
    pub fn add(&self, u: usize, v: usize) -> usize {
        let mut out = 0;
        for k in 0..self.radix.len() {
            let r = self.radix[k];
            let s = self.local_add[k][self.coord(u, k) * r + self.coord(v, k)] as usize;
            out += s * self.strides[k];
        }
        out
    }

    pub fn neg(&self, u: usize) -> usize {
        (0..self.radix.len())
            .map(|k| self.local_neg[k][self.coord(u, k)] as usize * self.strides[k])
            .sum()
    }

    pub fn sub(&self, u: usize, v: usize) -> usize {
        self.add(u, self.neg(v))
    }

    pub fn mul(&self, u: usize, v: usize) -> usize {
        if u == 0 || v == 0 {
            return 0;
        }
        let k = self.radix.len();
        let mut acc = vec![0u16; k];
        for i in 0..k {
            let cu = self.coord(u, i);
            if cu == 0 {
                continue;
            }
            let a = self.source.block_element(i, cu);
            for j in 0..k {
                let cv = self.coord(v, j);
                if cv == 0 {
                    continue;
                }
                let p = self.source.mul(a, self.source.block_element(j, cv));
                if let Some(bk) = self.source.block_of(p) {
                    let r = self.radix[bk];
                    acc[bk] = self.local_add[bk][acc[bk] as usize * r + self.source.local_index(p)];
                }
            }
        }
        acc.iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c as usize * s)
            .sum()
    }

    /// `u` written as a sum of labels, `0` for zero.
    pub fn render(&self, u: usize) -> String {
        let parts: Vec<&str> = self
            .components(u)
            .map(|(_, a)| self.source.label(a))
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }

    pub fn render_set(&self, set: &BitSet) -> Vec<String> {
        set.iter().map(|u| self.render(u)).collect()
    }

    /// Component `R_δ` as a set of ring elements (including zero).
    pub fn component_set(&self, g: Grade) -> BitSet {
        BitSet::from_iter_in(
            self.size,
            self.source.component(g).into_iter().map(|a| self.embed(a)),
        )
    }

    /// Homogeneous elements of `set`, as anneid elements.
    pub fn homogeneous_part(&self, set: &BitSet) -> BitSet {
        BitSet::from_iter_in(
            self.source.len(),
            self.source
                .elements()
                .filter(|&a| set.contains(self.embed(a))),
        )
    }

    /// Checks that nonzero component products land in the component of the
    /// grade product and that `R_ξ R_η ≠ 0` forces `ξη` defined. Returns an
    /// offending homogeneous pair.
    pub fn grading_violation(&self) -> Option<(usize, usize)> {
        let delta = GradeGroupoid::derive(&self.source);
        for a in self.source.elements().skip(1) {
            for b in self.source.elements().skip(1) {
                let p = self.mul(self.embed(a), self.embed(b));
                let target = delta.product(self.source.degree(a), self.source.degree(b));
                let ok = if target.is_zero() {
                    p == 0
                } else {
                    self.component_set(target).contains(p)
                };
                if !ok {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Two-sided unity, if any.
    pub fn unity(&self) -> Option<usize> {
        self.elements().find(|&e| {
            self.gens
                .iter()
                .all(|&g| self.mul(e, g) == g && self.mul(g, e) == g)
        })
    }

    pub fn is_ideal(&self, set: &BitSet, side: Side) -> bool {
        if !set.contains(0) {
            return false;
        }
        let members: Vec<usize> = set.iter().collect();
        members.iter().all(|&x| {
            members.iter().all(|&y| set.contains(self.sub(x, y)))
                && self.gens.iter().all(|&g| {
                    (!side.right() || set.contains(self.mul(x, g)))
                        && (!side.left() || set.contains(self.mul(g, x)))
                })
        })
    }

    /// Smallest ideal on `side` containing `seeds`.
    pub fn ideal_closure(&self, seeds: impl IntoIterator<Item = usize>, side: Side) -> Span<'_> {
        let mut span = Span::new(self);
        self.grow_ideal(&mut span, seeds, side);
        span
    }

    /// Extends an ideal (given as a span already closed on `side`) by `seeds`.
    pub fn grow_ideal(
        &self,
        span: &mut Span<'_>,
        seeds: impl IntoIterator<Item = usize>,
        side: Side,
    ) {
        let mut queue: Vec<usize> = seeds.into_iter().collect();
        while let Some(x) = queue.pop() {
            if span.extend(x) {
                for &g in &self.gens {
                    if side.right() {
                        queue.push(self.mul(x, g));
                    }
                    if side.left() {
                        queue.push(self.mul(g, x));
                    }
                }
            }
        }
    }

    pub fn principal_ideal(&self, x: usize) -> BitSet {
        self.ideal_closure([x], Side::TwoSided).into_set()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    fn left(self) -> bool {
        matches!(self, Side::Left | Side::TwoSided)
    }

    fn right(self) -> bool {
        matches!(self, Side::Right | Side::TwoSided)
    }
}

/// An additive subgroup grown one generator at a time.
#[derive(Debug, Clone)]
pub struct Span<'r> {
    ring: &'r FiniteRing,
    set: BitSet,
    elems: Vec<usize>,
    gens: Vec<usize>,
}

impl<'r> Span<'r> {
    pub fn new(ring: &'r FiniteRing) -> Self {
        Span {
            ring,
            set: BitSet::zero(ring.size),
            elems: vec![0],
            gens: Vec::new(),
        }
    }

    /// `H ← H + ⟨g⟩`, walking the cosets `H + kg` until `kg ∈ H`.
    pub fn extend(&mut self, g: usize) -> bool {
        if self.set.contains(g) {
            return false;
        }
        let base_len = self.elems.len();
        let mut shift = g;
        while !self.set.contains(shift) {
            for i in 0..base_len {
                let v = self.ring.add(self.elems[i], shift);
                self.set.insert(v);
                self.elems.push(v);
            }
            shift = self.ring.add(shift, g);
        }
        self.gens.push(g);
        true
    }

    pub fn contains(&self, u: usize) -> bool {
        self.set.contains(u)
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn set(&self) -> &BitSet {
        &self.set
    }

    pub fn into_set(self) -> BitSet {
        self.set
    }
}

/// `A(ε)` as a standalone ring together with its identification inside `A`.
#[derive(Debug, Clone)]
pub struct ComponentRing {
    pub grade: Grade,
    pub ring: FiniteRing,
    /// Ring element id → anneid element id.
    pub to_anneid: Vec<usize>,
}

impl ComponentRing {
    /// `A(ε)` for an idempotent grade `ε`.
    pub fn new(a: &FiniteAnneid, eps: Grade) -> Result<Self> {
        let delta = GradeGroupoid::derive(a);
        if !delta.is_idempotent(eps) {
            return Err(Error::NotIdempotent(eps));
        }
        let elems = a.component(eps);
        let pos = |x: usize| {
            elems
                .iter()
                .position(|&e| e == x)
                .expect("component is closed")
        };
        let tables = TableRing {
            labels: elems.iter().map(|&e| a.label(e).to_string()).collect(),
            add: elems
                .iter()
                .map(|&x| elems.iter().map(|&y| pos(a.add(x, y).unwrap())).collect())
                .collect(),
            mul: elems
                .iter()
                .map(|&x| elems.iter().map(|&y| pos(a.mul(x, y))).collect())
                .collect(),
        };
        let name = format!("{}({})", a.name(), a.grade_name(eps));
        Ok(ComponentRing {
            grade: eps,
            ring: FiniteRing::from_tables(&name, &tables)?,
            to_anneid: elems,
        })
    }

    /// The component viewed as a one-block anneid; its ids equal ring ids.
    pub fn anneid(&self) -> &FiniteAnneid {
        self.ring.source()
    }

    pub fn from_anneid(&self, x: usize) -> Option<usize> {
        self.to_anneid.iter().position(|&e| e == x)
    }

    /// Maps a subset of the component to anneid ids.
    pub fn lift(&self, set: &BitSet, n: usize) -> BitSet {
        BitSet::from_iter_in(n, set.iter().map(|u| self.to_anneid[u]))
    }

    /// `I ∩ A(ε)` expressed in component ids.
    pub fn restrict(&self, set: &BitSet) -> BitSet {
        BitSet::from_iter_in(
            self.to_anneid.len(),
            (0..self.to_anneid.len()).filter(|&u| set.contains(self.to_anneid[u])),
        )
    }
}
