//! Finite right moduloids over a finite anneid.
//!
//! The additive structure of a moduloid is stored as a zero-multiplication
//! anneid, so blocks, addability and the partial addition are shared with
//! [`FiniteAnneid`]. The action `M × A → M` is a full table.

use crate::anneid::{build_document, FiniteAnneid};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ideals::{is_ideal, HomSubset, IdealSide, SubsetKind};
use crate::properties::Check;
use crate::quotient::Congruence;
use crate::ring::{FiniteRing, Side};

#[derive(Debug, Clone)]
pub struct FiniteModuloid {
    additive: FiniteAnneid,
    /// `|M| × |A|`, row-major.
    action: Vec<usize>,
    owner_len: usize,
}

impl FiniteModuloid {
    /// Validates the action against the axioms of a graded right moduloid.
    pub fn new(
        additive: FiniteAnneid,
        action: Vec<Vec<usize>>,
        owner: &FiniteAnneid,
    ) -> Result<Self> {
        let (m, n) = (additive.len(), owner.len());
        if action.len() != m
            || action
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&v| v >= m))
        {
            return Err(Error::MalformedTables(format!(
                "action table is not {m}x{n}"
            )));
        }
        if (0..m).any(|x| additive.block_of(x).is_some() && (1..m).any(|y| additive.mul(x, y) != 0))
        {
            return Err(Error::MalformedTables(
                "additive part must have zero multiplication".into(),
            ));
        }
        let md = FiniteModuloid {
            additive,
            action: action.into_iter().flatten().collect(),
            owner_len: n,
        };
        md.check_axioms(owner)?;
        Ok(md)
    }

    fn check_axioms(&self, a: &FiniteAnneid) -> Result<()> {
        let m = &self.additive;
        let bad = |what: &str, w: [usize; 3]| {
            Err(Error::MalformedTables(format!("{what} fails at {w:?}")))
        };
        for x in m.elements() {
            for c in a.elements() {
                if (x == 0 || c == 0) && self.act(x, c) != 0 {
                    return bad("zero action", [x, c, 0]);
                }
                for d in a.elements() {
                    if self.act(self.act(x, c), d) != self.act(x, a.mul(c, d)) {
                        return bad("associativity", [x, c, d]);
                    }
                    if let Some(s) = a.add(c, d) {
                        let (xc, xd) = (self.act(x, c), self.act(x, d));
                        if m.add(xc, xd) != Some(self.act(x, s)) {
                            return bad("distributivity", [x, c, d]);
                        }
                    }
                }
                for y in m.elements() {
                    if let Some(s) = m.add(x, y) {
                        let (xc, yc) = (self.act(x, c), self.act(y, c));
                        if m.add(xc, yc) != Some(self.act(s, c)) {
                            return bad("distributivity", [x, y, c]);
                        }
                    }
                }
            }
        }
        for d in 0..m.block_count() {
            for k in 0..a.block_count() {
                let mut target = None;
                for &x in m.block(d) {
                    for &c in a.block(k) {
                        let v = self.act(x, c);
                        if v == 0 {
                            continue;
                        }
                        match target {
                            None => target = m.block_of(v),
                            Some(t) if m.block_of(v) != Some(t) => {
                                return bad("graded action", [x, c, v])
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.additive.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.additive.is_zero()
    }

    pub fn additive(&self) -> &FiniteAnneid {
        &self.additive
    }

    pub fn labels(&self) -> &[String] {
        self.additive.labels()
    }

    #[inline]
    pub fn act(&self, x: usize, c: usize) -> usize {
        self.action[x * self.owner_len + c]
    }

    /// Smallest submoduloid containing `seeds`.
    pub fn submoduloid(&self, seeds: impl IntoIterator<Item = usize>) -> BitSet {
        let m = &self.additive;
        let mut set = BitSet::zero(m.len());
        let mut queue: Vec<usize> = seeds.into_iter().collect();
        while let Some(u) = queue.pop() {
            if !set.insert(u) {
                continue;
            }
            for c in 0..self.owner_len {
                queue.push(self.act(u, c));
            }
            if let Some(k) = m.block_of(u) {
                for &v in m.block(k) {
                    if set.contains(v) {
                        queue.push(m.sub(u, v).unwrap());
                    }
                }
                queue.push(m.neg(u));
            }
        }
        set
    }

    /// `MA ≠ 0` and every nonzero element generates `M`.
    pub fn is_irreducible(&self) -> bool {
        let nonzero_action =
            (1..self.len()).any(|x| (1..self.owner_len).any(|c| self.act(x, c) != 0));
        nonzero_action && (1..self.len()).all(|x| self.submoduloid([x]).is_full())
    }

    /// `xa # xb` with both nonzero forces `a # b`; witness `(x, a, b)`.
    pub fn is_regular(&self, a: &FiniteAnneid) -> Check {
        for x in 1..self.len() {
            for p in a.elements().skip(1) {
                for q in a.elements().skip(1) {
                    let (xp, xq) = (self.act(x, p), self.act(x, q));
                    if xp != 0 && xq != 0 && self.additive.addable(xp, xq) && !a.addable(p, q) {
                        return Check::fail(vec![x, p, q]);
                    }
                }
            }
        }
        Check::pass()
    }

    /// `(0:M) = {a : Ma = 0}`.
    pub fn annihilator(&self, a: &FiniteAnneid) -> HomSubset {
        let set = BitSet::from_iter_in(
            a.len(),
            a.elements()
                .filter(|&c| (0..self.len()).all(|x| self.act(x, c) == 0)),
        );
        HomSubset::new(set, SubsetKind::TwoSidedIdeal)
    }

    /// `(0:x) = {a : xa = 0}`.
    pub fn annihilator_of(&self, a: &FiniteAnneid, x: usize) -> HomSubset {
        let set = BitSet::from_iter_in(a.len(), a.elements().filter(|&c| self.act(x, c) == 0));
        HomSubset::new(set, SubsetKind::RightIdeal)
    }

    /// Irreducible, and for every two-sided ideal `I` with `MI ≠ 0` some
    /// `b = Σ_δ b_δ` with `b_δ ∈ A(δ) ∩ I` fixes every element of `M`.
    ///
    /// The search over `⊕_δ A(δ) ∩ I` is bounded by `max_lin`.
    pub fn is_simple(
        &self,
        a: &FiniteAnneid,
        ideals: &[HomSubset],
        max_lin: usize,
    ) -> Result<bool> {
        if !self.is_irreducible() {
            return Ok(false);
        }
        for ideal in ideals {
            if self.hits(&ideal.set) && self.fixing_element(a, &ideal.set, max_lin)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn hits(&self, i: &BitSet) -> bool {
        (1..self.len()).any(|x| i.iter().any(|c| self.act(x, c) != 0))
    }

    /// Some `b ∈ Ī` (as its homogeneous components) with `xb = x` for all `x`.
    pub fn fixing_element(
        &self,
        a: &FiniteAnneid,
        i: &BitSet,
        max_lin: usize,
    ) -> Result<Option<Vec<usize>>> {
        let parts: Vec<Vec<usize>> = (0..a.block_count())
            .map(|k| {
                std::iter::once(0)
                    .chain(a.block(k).iter().copied().filter(|&c| i.contains(c)))
                    .collect()
            })
            .filter(|p: &Vec<usize>| p.len() > 1)
            .collect();
        let mut total = 1usize;
        for p in &parts {
            total = total.checked_mul(p.len()).filter(|&t| t <= max_lin).ok_or(
                Error::SizeExceeded {
                    actual: total.saturating_mul(p.len()),
                    limit: max_lin,
                },
            )?;
        }
        let m = &self.additive;
        let mut digits = vec![0usize; parts.len()];
        let mut sums = vec![0usize; m.block_count()];
        for _ in 0..total {
            let fixes = (1..self.len()).all(|x| {
                sums.iter_mut().for_each(|s| *s = 0);
                for (p, &d) in parts.iter().zip(&digits) {
                    let v = self.act(x, p[d]);
                    if let Some(k) = m.block_of(v) {
                        sums[k] = m.add(sums[k], v).expect("same block");
                    }
                }
                let home = m.block_of(x).expect("nonzero");
                sums.iter()
                    .enumerate()
                    .all(|(k, &s)| if k == home { s == x } else { s == 0 })
            });
            if fixes {
                return Ok(Some(
                    parts
                        .iter()
                        .zip(&digits)
                        .map(|(p, &d)| p[d])
                        .filter(|&c| c != 0)
                        .collect(),
                ));
            }
            for (d, p) in digits.iter_mut().zip(&parts) {
                *d += 1;
                if *d < p.len() {
                    break;
                }
                *d = 0;
            }
        }
        Ok(None)
    }
}

/// `A/I` as a right `A`-moduloid with `(a + I)c = ac + I`.
pub fn quotient_moduloid(a: &FiniteAnneid, i: &BitSet) -> Result<FiniteModuloid> {
    if !is_ideal(a, i, IdealSide::Right) {
        return Err(Error::NotRightIdeal);
    }
    let cong = Congruence::new(a, i);
    let doc = cong.document(a, format!("{}/I", a.name()), |_, _| 0);
    let additive = FiniteAnneid::validate(doc)
        .map_err(|e| Error::Inconsistent(format!("quotient moduloid: {e}")))?;
    let order = cong.document_order();
    let mut action = vec![vec![0; a.len()]; cong.len()];
    for c in 0..cong.len() {
        for x in a.elements() {
            action[order[c]][x] = order[cong.class_of[a.mul(cong.reps[c], x)]];
        }
    }
    FiniteModuloid::new(additive, action, a)
}

/// `Ā/K` for a right ideal `K` of the linearization, with all nonzero
/// cosets in a single block.
pub fn linearized_quotient_moduloid(r: &FiniteRing, k: &BitSet) -> Result<FiniteModuloid> {
    if !r.is_ideal(k, Side::Right) {
        return Err(Error::NotRightIdeal);
    }
    let mut class_of = vec![usize::MAX; r.size()];
    let mut reps = Vec::new();
    for u in r.elements() {
        if class_of[u] != usize::MAX {
            continue;
        }
        for m in k.iter() {
            class_of[r.add(u, m)] = reps.len();
        }
        reps.push(u);
    }
    let a = r.source();
    let labels = reps
        .iter()
        .skip(1)
        .map(|&u| format!("[{}]", r.render(u)))
        .collect();
    let doc = build_document(
        format!("{}/K", r.name()),
        vec![("M".to_string(), labels)],
        |_, x, y| class_of[r.add(reps[x], reps[y])],
        |_, _| 0,
    );
    let additive = FiniteAnneid::validate(doc)
        .map_err(|e| Error::Inconsistent(format!("module quotient: {e}")))?;
    let action = reps
        .iter()
        .map(|&u| {
            a.elements()
                .map(|x| class_of[r.mul(u, r.embed(x))])
                .collect()
        })
        .collect();
    FiniteModuloid::new(additive, action, a)
}
