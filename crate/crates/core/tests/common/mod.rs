//! Table-level oracles that work from the raw document tables and share no
//! code with the library's algorithms.

#![allow(dead_code)]

use anneid::corpus::builtin::{random, structured};
use anneid::corpus::CorpusInstance;
use anneid::{AnneidDocument, BitSet, FiniteAnneid, FiniteRing};

/// The corpus of the acceptance run: structured instances, then random
/// seeds 0 to 99.
pub fn corpus() -> Vec<CorpusInstance> {
    let mut out = structured();
    out.extend(random(100, 0).expect("random corpus generates"));
    out
}

pub fn mask_of(set: &BitSet) -> u64 {
    set.iter().fold(0, |m, i| m | 1 << i)
}

pub fn members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

/// An anneid read straight from its document.
#[derive(Debug, Clone)]
pub struct Raw {
    pub n: usize,
    pub block_of: Vec<Option<usize>>,
    pub blocks: Vec<Vec<usize>>,
    pos: Vec<usize>,
    add: Vec<Vec<Vec<usize>>>,
    pub mul: Vec<Vec<usize>>,
}

impl Raw {
    pub fn new(doc: &AnneidDocument) -> Self {
        let n = doc.elements.len();
        let mut block_of = vec![None; n];
        let mut pos = vec![0; n];
        for (k, b) in doc.blocks.iter().enumerate() {
            for (p, &x) in b.iter().enumerate() {
                block_of[x] = Some(k);
                pos[x] = p + 1;
            }
        }
        Raw {
            n,
            block_of,
            blocks: doc.blocks.clone(),
            pos,
            add: doc.add.clone(),
            mul: doc.mul.clone(),
        }
    }

    pub fn of(a: &FiniteAnneid) -> Self {
        Raw::new(&a.to_document())
    }

    pub fn sum(&self, x: usize, y: usize) -> Option<usize> {
        match (x, y) {
            (0, _) => Some(y),
            (_, 0) => Some(x),
            _ if self.block_of[x] == self.block_of[y] => {
                Some(self.add[self.block_of[x]?][self.pos[x]][self.pos[y]])
            }
            _ => None,
        }
    }

    pub fn neg(&self, x: usize) -> usize {
        (0..self.n)
            .find(|&y| self.sum(x, y) == Some(0))
            .expect("inverse exists")
    }

    /// Nonzero elements of the same block (or both zero).
    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    fn block_mask(&self, x: usize) -> u64 {
        match self.block_of[x] {
            Some(k) => self.blocks[k].iter().fold(0, |m, &y| m | 1 << y),
            None => 0,
        }
    }

    fn is_ideal(&self, mask: u64, two_sided: bool) -> bool {
        mask & 1 == 1
            && members(mask).all(|u| {
                (0..self.n).all(|x| {
                    mask >> self.mul[u][x] & 1 == 1
                        && (!two_sided || mask >> self.mul[x][u] & 1 == 1)
                }) && members(mask & self.block_mask(u))
                    .all(|v| mask >> self.sum(u, v).unwrap() & 1 == 1)
            })
    }

    /// Every right (or two-sided) ideal by scanning all subsets, ascending.
    pub fn scan_ideals(&self, two_sided: bool) -> Vec<u64> {
        assert!(self.n <= 20, "subset scan needs a small anneid");
        let mut out: Vec<u64> = (0..1u64 << (self.n - 1))
            .map(|m| m << 1 | 1)
            .filter(|&m| self.is_ideal(m, two_sided))
            .collect();
        out.sort();
        out
    }

    /// `x ≡ y (mod I)`: both in `I`, or in one block with `x - y ∈ I`.
    pub fn congruent(&self, i: u64, x: usize, y: usize) -> bool {
        let inside = |z: usize| i >> z & 1 == 1;
        (inside(x) && inside(y))
            || (self.same_block(x, y) && inside(self.sum(x, self.neg(y)).unwrap()))
    }

    /// Class index (smallest member) of every element modulo `I`.
    pub fn classes(&self, i: u64) -> Vec<usize> {
        (0..self.n)
            .map(|x| (0..self.n).find(|&y| self.congruent(i, x, y)).unwrap())
            .collect()
    }

    /// Nonzero products of nonaddable factors are never addable, on either side.
    pub fn is_regular(&self) -> bool {
        let nz = 1..self.n;
        nz.clone().all(|x| {
            nz.clone().all(|y| {
                self.same_block(x, y)
                    || nz.clone().all(|c| {
                        let bad = |p: usize, q: usize| p != 0 && q != 0 && self.same_block(p, q);
                        !bad(self.mul[x][c], self.mul[y][c]) && !bad(self.mul[c][x], self.mul[c][y])
                    })
            })
        })
    }

    /// Elements acting as a two-sided unity modulo the two-sided ideal `I`.
    pub fn unities_modulo(&self, i: u64) -> Vec<usize> {
        (0..self.n)
            .filter(|&e| {
                (0..self.n).all(|x| {
                    self.congruent(i, self.mul[e][x], x) && self.congruent(i, self.mul[x][e], x)
                })
            })
            .collect()
    }

    /// Largest two-sided ideal inside `I`, from a list of all two-sided ideals.
    pub fn largest_ideal_in(i: u64, two_sided: &[u64]) -> u64 {
        let inside: Vec<u64> = two_sided.iter().copied().filter(|&j| j & !i == 0).collect();
        let top = *inside.iter().max_by_key(|j| j.count_ones()).unwrap();
        assert!(
            inside.iter().all(|&j| j & !top == 0),
            "largest ideal is unique"
        );
        top
    }
}

/// Maximal proper members of a list of subsets.
pub fn maximal(sets: &[u64], full: u64) -> Vec<u64> {
    sets.iter()
        .copied()
        .filter(|&s| s != full && !sets.iter().any(|&t| t != full && t != s && s & !t == 0))
        .collect()
}

pub fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1 << n) - 1
    }
}

/// A finite ring given by its two tables.
pub struct RawRing {
    pub n: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    zero: usize,
}

impl RawRing {
    pub fn of(r: &FiniteRing) -> Self {
        let n = r.size();
        RawRing {
            n,
            add: (0..n)
                .map(|u| (0..n).map(|v| r.add(u, v)).collect())
                .collect(),
            mul: (0..n)
                .map(|u| (0..n).map(|v| r.mul(u, v)).collect())
                .collect(),
            zero: 0,
        }
    }

    pub fn neg(&self, u: usize) -> usize {
        (0..self.n).find(|&v| self.add[u][v] == self.zero).unwrap()
    }

    fn is_ideal(&self, mask: u64) -> bool {
        mask & 1 == 1
            && members(mask).all(|u| {
                members(mask).all(|v| mask >> self.add[u][v] & 1 == 1)
                    && (0..self.n)
                        .all(|x| mask >> self.mul[u][x] & 1 == 1 && mask >> self.mul[x][u] & 1 == 1)
            })
    }

    /// Intersection of the maximal ideals `P` with a unity modulo `P`, by
    /// scanning every subset.
    pub fn brown_mccoy(&self) -> u64 {
        assert!(self.n <= 20);
        let full = full_mask(self.n);
        let ideals: Vec<u64> = (0..1u64 << (self.n - 1))
            .map(|m| m << 1 | 1)
            .filter(|&m| self.is_ideal(m))
            .collect();
        maximal(&ideals, full)
            .into_iter()
            .filter(|&p| {
                let diff_in = |u: usize, v: usize| p >> self.add[u][self.neg(v)] & 1 == 1;
                (0..self.n).any(|e| {
                    (0..self.n).all(|x| diff_in(self.mul[e][x], x) && diff_in(self.mul[x][e], x))
                })
            })
            .fold(full, |acc, p| acc & p)
    }

    pub fn is_ring(&self) -> bool {
        let e = 0..self.n;
        e.clone().all(|u| {
            e.clone().all(|v| {
                self.add[u][v] == self.add[v][u]
                    && e.clone().all(|w| {
                        self.add[self.add[u][v]][w] == self.add[u][self.add[v][w]]
                            && self.mul[self.mul[u][v]][w] == self.mul[u][self.mul[v][w]]
                            && self.mul[u][self.add[v][w]]
                                == self.add[self.mul[u][v]][self.mul[u][w]]
                            && self.mul[self.add[v][w]][u]
                                == self.add[self.mul[v][u]][self.mul[w][u]]
                    })
            })
        })
    }
}

/// The factor anneid against the congruence relation: the canonical map is
/// a surjective homomorphism whose fibres are exactly the classes.
pub fn check_factor(a: &FiniteAnneid, i: u64) -> Result<(), String> {
    let raw = Raw::of(a);
    let f = anneid::quotient::factor_anneid(a, &BitSet::from_iter_in(a.len(), members(i)))
        .map_err(|e| e.to_string())?;
    let q = Raw::of(&f.anneid);
    let can = &f.canonical;
    let classes = raw.classes(i);
    let distinct = {
        let mut c = classes.clone();
        c.sort();
        c.dedup();
        c.len()
    };
    if q.n != distinct {
        return Err(format!(
            "{} classes but factor has {} elements",
            distinct, q.n
        ));
    }
    for x in 0..raw.n {
        for y in 0..raw.n {
            if (can[x] == can[y]) != (classes[x] == classes[y]) {
                return Err(format!("fibres differ at ({x}, {y})"));
            }
            if can[raw.mul[x][y]] != q.mul[can[x]][can[y]] {
                return Err(format!("product not preserved at ({x}, {y})"));
            }
            if let Some(s) = raw.sum(x, y) {
                if q.sum(can[x], can[y]) != Some(can[s]) {
                    return Err(format!("sum not preserved at ({x}, {y})"));
                }
            }
        }
    }
    Ok(())
}

/// The right moduloid `A/I` built from the congruence classes only.
pub struct RawQuotient<'a> {
    pub raw: &'a Raw,
    pub classes: Vec<usize>,
    pub reps: Vec<usize>,
}

impl<'a> RawQuotient<'a> {
    pub fn new(raw: &'a Raw, i: u64) -> Self {
        let classes = raw.classes(i);
        let mut reps = classes.clone();
        reps.sort();
        reps.dedup();
        RawQuotient { raw, classes, reps }
    }

    pub fn act(&self, m: usize, c: usize) -> usize {
        self.classes[self.raw.mul[m][c]]
    }

    /// Smallest set of classes containing `m` and closed under the action
    /// and under addition inside blocks.
    fn generated(&self, m: usize) -> Vec<usize> {
        let mut set = vec![0, m];
        let mut i = 0;
        while i < set.len() {
            let u = set[i];
            i += 1;
            let mut next: Vec<usize> = (0..self.raw.n).map(|c| self.act(u, c)).collect();
            for &v in &set {
                if let Some(s) = self.raw.sum(u, v) {
                    next.push(self.classes[s]);
                }
            }
            for x in next {
                if !set.contains(&x) {
                    set.push(x);
                }
            }
        }
        set
    }

    pub fn is_irreducible(&self) -> bool {
        let acts = self
            .reps
            .iter()
            .any(|&m| (0..self.raw.n).any(|c| self.act(m, c) != 0));
        acts && self
            .reps
            .iter()
            .skip(1)
            .all(|&m| self.generated(m).len() == self.reps.len())
    }

    /// `m b = m` for every class `m`, where `b` is the formal sum of `parts`.
    pub fn fixed_by(&self, parts: &[usize]) -> bool {
        self.reps.iter().skip(1).all(|&m| {
            let mut by_block: Vec<usize> = vec![0; self.raw.blocks.len()];
            for &b in parts {
                let p = self.raw.mul[m][b];
                if let Some(k) = self.raw.block_of[p] {
                    by_block[k] = self.raw.sum(by_block[k], p).unwrap();
                }
            }
            let home = self.raw.block_of[m].unwrap();
            by_block.iter().enumerate().all(|(k, &s)| {
                if k == home {
                    self.classes[s] == m
                } else {
                    self.classes[s] == 0
                }
            })
        })
    }

    /// Some `b = Σ_k b_k` with `b_k ∈ J` in block `k` fixes every class.
    pub fn fixed_inside(&self, j: u64) -> bool {
        let parts: Vec<Vec<usize>> = self
            .raw
            .blocks
            .iter()
            .map(|b| {
                std::iter::once(0)
                    .chain(b.iter().copied().filter(|&x| j >> x & 1 == 1))
                    .collect()
            })
            .collect();
        let mut choice = vec![0usize; parts.len()];
        loop {
            let b: Vec<usize> = parts.iter().zip(&choice).map(|(p, &d)| p[d]).collect();
            if self.fixed_by(&b) {
                return true;
            }
            let mut k = 0;
            loop {
                if k == parts.len() {
                    return false;
                }
                choice[k] += 1;
                if choice[k] < parts[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
        }
    }

    /// Irreducible and fixed from inside every two-sided ideal it does not kill.
    pub fn is_simple(&self, two_sided: &[u64]) -> bool {
        self.is_irreducible()
            && two_sided.iter().all(|&j| {
                let hits = self
                    .reps
                    .iter()
                    .any(|&m| members(j).any(|c| self.act(m, c) != 0));
                !hits || self.fixed_inside(j)
            })
    }

    /// `ma # mb` with both nonzero forces `a # b`.
    pub fn is_regular(&self) -> bool {
        let r = self.raw;
        self.reps.iter().skip(1).all(|&m| {
            (1..r.n).all(|p| {
                (1..r.n).all(|q| {
                    let (mp, mq) = (self.act(m, p), self.act(m, q));
                    mp == 0 || mq == 0 || !r.same_block(mp, mq) || r.same_block(p, q)
                })
            })
        })
    }

    pub fn annihilator(&self) -> u64 {
        (0..self.raw.n)
            .filter(|&c| self.reps.iter().all(|&m| self.act(m, c) == 0))
            .fold(0, |acc, c| acc | 1 << c)
    }
}

/// Theorem ids whose failures the matrix-unit anneids are known to produce.
pub const KNOWN_COUNTEREXAMPLE_IDS: [&str; 3] =
    ["moduloid-simple", "lemma-remark", "corollary-module"];

/// `G(A)` from table-level scans: the intersection of maximal right ideals
/// `I` whose `A/Ǐ` is simple, regular and has a unity.
pub fn graded_brown_mccoy_oracle(a: &FiniteAnneid) -> Result<u64, String> {
    let raw = Raw::of(a);
    let full = full_mask(raw.n);
    let two = raw.scan_ideals(true);
    let mut g = full;
    for i in maximal(&raw.scan_ideals(false), full) {
        let check = Raw::largest_ideal_in(i, &two);
        let above = two.iter().filter(|&&j| check & !j == 0).count();
        if above != 2 || raw.unities_modulo(check).is_empty() {
            continue;
        }
        check_factor(a, check)?;
        let f = anneid::quotient::factor_anneid(a, &BitSet::from_iter_in(raw.n, members(check)))
            .map_err(|e| e.to_string())?;
        if Raw::of(&f.anneid).is_regular() {
            g &= i;
        }
    }
    Ok(g)
}

/// Independently confirms that `a` refutes each statement in `fails`.
///
/// Looks for one maximal right ideal `I` such that `M = A/I` is a regular
/// simple moduloid over a regular `A` and
/// - `moduloid-simple`: no `K = (0:x)`, `x ∈ M ∖ 0`, has a modular `Ǩ`;
/// - `lemma-remark`: some ideal `J` with `MJ ≠ 0` contains no homogeneous
///   element fixing `M`;
/// - `corollary-module`: `G(A)` is not inside the annihilator of `M`.
pub fn confirm_counterexample(a: &FiniteAnneid, fails: &[&str]) -> Result<String, String> {
    let raw = Raw::of(a);
    if raw.n < 2 || raw.n > 20 {
        return Err("outside the oracle's size range".into());
    }
    if let Some(t) = fails.iter().find(|t| !KNOWN_COUNTEREXAMPLE_IDS.contains(t)) {
        return Err(format!("no oracle for {t}"));
    }
    if !raw.is_regular() {
        return Err("not regular".into());
    }
    let full = full_mask(raw.n);
    let two = raw.scan_ideals(true);
    let g = graded_brown_mccoy_oracle(a)?;
    for i in maximal(&raw.scan_ideals(false), full) {
        let q = RawQuotient::new(&raw, i);
        if !q.is_simple(&two) || !q.is_regular() {
            continue;
        }
        let refutes = |t: &&str| match *t {
            "moduloid-simple" => q.reps.iter().skip(1).all(|&x| {
                let k = (0..raw.n)
                    .filter(|&c| q.act(x, c) == 0)
                    .fold(0u64, |m, c| m | 1 << c);
                raw.unities_modulo(Raw::largest_ideal_in(k, &two))
                    .is_empty()
            }),
            "lemma-remark" => two.iter().any(|&j| {
                let hits = q.reps.iter().any(|&m| members(j).any(|c| q.act(m, c) != 0));
                hits && !members(j).any(|b| q.fixed_by(&[b]))
            }),
            _ => g & !q.annihilator() != 0,
        };
        if fails.iter().all(refutes) {
            let labels: Vec<&str> = members(i).map(|x| a.label(x)).collect();
            return Ok(format!("{}: A/{{{}}}", a.name(), labels.join(",")));
        }
    }
    Err("no regular simple quotient refutes every failing statement".into())
}
