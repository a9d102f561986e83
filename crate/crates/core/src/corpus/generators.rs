//! Instance generators: semigroup and group graded rings, Morita contexts,
//! zero-multiplication anneids and seeded random anneids.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::anneid::{build_document, FiniteAnneid};
use crate::error::{Error, Result};
use crate::ring::TableRing;

/// Rejection budget for [`gen_random_anneid`].
pub const RANDOM_ATTEMPTS: usize = 10_000;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

/// Validation failures of generated tables are input errors of the generator.
fn validate_generated(doc: crate::anneid::AnneidDocument) -> Result<FiniteAnneid> {
    FiniteAnneid::validate(doc).map_err(|e| match e {
        Error::AxiomViolation(v) => invalid(format!("generated tables fail {}", v[0])),
        other => other,
    })
}

fn check_square(name: &str, t: &[Vec<usize>], n: usize) -> Result<()> {
    if t.len() != n || t.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
        return Err(invalid(format!(
            "{name} table is not a {n}x{n} table over 0..{n}"
        )));
    }
    Ok(())
}

/// A finite abelian group by its addition table; index 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    pub labels: Vec<String>,
    pub add: Vec<Vec<usize>>,
}

impl AbelianGroup {
    pub fn cyclic(n: usize) -> Self {
        AbelianGroup {
            labels: (0..n).map(|i| i.to_string()).collect(),
            add: (0..n)
                .map(|i| (0..n).map(|j| (i + j) % n).collect())
                .collect(),
        }
    }

    pub fn zero() -> Self {
        Self::cyclic(1)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

impl From<&TableRing> for AbelianGroup {
    fn from(r: &TableRing) -> Self {
        AbelianGroup {
            labels: r.labels.clone(),
            add: r.add.clone(),
        }
    }
}

/// A finite semigroup by its table, optionally with a zero that is dropped
/// (the contracted semigroup ring).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semigroup {
    pub labels: Vec<String>,
    pub mul: Vec<Vec<usize>>,
    pub zero: Option<usize>,
}

impl Semigroup {
    pub fn cyclic_group(n: usize) -> Self {
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect();
        Semigroup {
            labels,
            mul: (0..n)
                .map(|i| (0..n).map(|j| (i + j) % n).collect())
                .collect(),
            zero: None,
        }
    }

    /// Klein four group `{1, x, y, xy}`.
    pub fn klein_group() -> Self {
        Semigroup {
            labels: ["1", "x", "y", "xy"].map(String::from).to_vec(),
            mul: (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect(),
            zero: None,
        }
    }

    /// `{0} ∪ {e_ij}` matrix units over `n` vertices.
    pub fn matrix_units(n: usize) -> Self {
        let m = n * n + 1;
        let mut labels = vec!["0".to_string()];
        for i in 1..=n {
            for j in 1..=n {
                labels.push(format!("e{i}{j}"));
            }
        }
        let unit = |x: usize| ((x - 1) / n, (x - 1) % n);
        let mul = (0..m)
            .map(|x| {
                (0..m)
                    .map(|y| {
                        if x == 0 || y == 0 {
                            return 0;
                        }
                        let ((i, j), (k, l)) = (unit(x), unit(y));
                        if j == k {
                            1 + i * n + l
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        Semigroup {
            labels,
            mul,
            zero: Some(0),
        }
    }

    fn check(&self) -> Result<()> {
        let n = self.labels.len();
        check_square("semigroup", &self.mul, n)?;
        if let Some(z) = self.zero {
            if z >= n || (0..n).any(|s| self.mul[z][s] != z || self.mul[s][z] != z) {
                return Err(invalid("declared semigroup zero does not absorb"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]] {
                        return Err(invalid(format!(
                            "semigroup is not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn is_group(&self) -> bool {
        let n = self.labels.len();
        let Some(e) = (0..n).find(|&e| (0..n).all(|s| self.mul[e][s] == s && self.mul[s][e] == s))
        else {
            return false;
        };
        (0..n).all(|s| (0..n).any(|t| self.mul[s][t] == e && self.mul[t][s] == e))
    }
}

fn coefficient_label(c: &str, s: &str) -> String {
    match (c, s) {
        ("1", s) => s.to_string(),
        (c, "1") => c.to_string(),
        (c, s) => format!("{c}{s}"),
    }
}

/// Contracted semigroup ring `K_0[S]` as an anneid: one block `K·s` per
/// nonzero `s`, with `(k s)(l t) = (kl)(st)`.
pub fn gen_semigroup_graded(name: &str, s: &Semigroup, k: &TableRing) -> Result<FiniteAnneid> {
    s.check()?;
    let m = k.len();
    check_square("coefficient addition", &k.add, m)?;
    check_square("coefficient multiplication", &k.mul, m)?;
    let grades: Vec<usize> = (0..s.labels.len()).filter(|&g| Some(g) != s.zero).collect();
    let per = m - 1;
    if per == 0 {
        return Ok(FiniteAnneid::zero(name));
    }
    let slot = |g: usize| grades.iter().position(|&x| x == g);
    let id = |pos: usize, c: usize| 1 + pos * per + (c - 1);
    let split = |x: usize| ((x - 1) / per, (x - 1) % per + 1);
    let blocks = grades
        .iter()
        .map(|&g| {
            let labels = (1..m)
                .map(|c| coefficient_label(&k.labels[c], &s.labels[g]))
                .collect();
            (s.labels[g].clone(), labels)
        })
        .collect();
    let doc = build_document(
        name,
        blocks,
        |_, x, y| match (x, y) {
            (0, y) => y,
            (x, 0) => x,
            (x, y) => {
                let ((p, a), (_, b)) = (split(x), split(y));
                match k.add[a][b] {
                    0 => 0,
                    c => id(p, c),
                }
            }
        },
        |x, y| {
            if x == 0 || y == 0 {
                return 0;
            }
            let ((p, a), (q, b)) = (split(x), split(y));
            let c = k.mul[a][b];
            match slot(s.mul[grades[p]][grades[q]]) {
                Some(r) if c != 0 => id(r, c),
                _ => 0,
            }
        },
    );
    validate_generated(doc)
}

/// The group ring `K[G]` graded by `G`.
pub fn gen_group_graded(name: &str, group: &Semigroup, k: &TableRing) -> Result<FiniteAnneid> {
    group.check()?;
    if group.zero.is_some() || !group.is_group() {
        return Err(invalid("grading table is not a group"));
    }
    gen_semigroup_graded(name, group, k)
}

/// A Morita context `(A, V, W, B)` given by tables over element indices.
#[derive(Debug, Clone)]
pub struct MoritaContext {
    pub a: TableRing,
    pub b: TableRing,
    pub v: AbelianGroup,
    pub w: AbelianGroup,
    /// `A × V → V`
    pub a_v: Vec<Vec<usize>>,
    /// `V × B → V`
    pub v_b: Vec<Vec<usize>>,
    /// `B × W → W`
    pub b_w: Vec<Vec<usize>>,
    /// `W × A → W`
    pub w_a: Vec<Vec<usize>>,
    /// `V × W → A`
    pub vw: Vec<Vec<usize>>,
    /// `W × V → B`
    pub wv: Vec<Vec<usize>>,
}

impl MoritaContext {
    /// `A = B = Z_n`, `V` and `W` either `Z_n` or zero, all actions by
    /// multiplication mod `n`; pairings are multiplication when `pairing`
    /// is set and zero otherwise.
    pub fn scalar(n: usize, with_v: bool, with_w: bool, pairing: bool) -> Self {
        let r = TableRing::zmod(n);
        let group = |on: bool| {
            if on {
                AbelianGroup::cyclic(n)
            } else {
                AbelianGroup::zero()
            }
        };
        let (v, w) = (group(with_v), group(with_w));
        let act = |p: usize, q: usize, on: bool| -> Vec<Vec<usize>> {
            (0..p)
                .map(|i| (0..q).map(|j| if on { i * j % n } else { 0 }).collect())
                .collect()
        };
        let (nv, nw) = (v.len(), w.len());
        MoritaContext {
            a_v: act(n, nv, true),
            v_b: act(nv, n, true),
            b_w: act(n, nw, true),
            w_a: act(nw, n, true),
            vw: act(nv, nw, pairing),
            wv: act(nw, nv, pairing),
            a: r.clone(),
            b: r,
            v,
            w,
        }
    }

    fn check_shapes(&self) -> Result<()> {
        type Shape<'t> = (&'static str, &'t Vec<Vec<usize>>, usize, usize, usize);
        let (na, nb, nv, nw) = (self.a.len(), self.b.len(), self.v.len(), self.w.len());
        let shapes: [Shape; 6] = [
            ("A×V", &self.a_v, na, nv, nv),
            ("V×B", &self.v_b, nv, nb, nv),
            ("B×W", &self.b_w, nb, nw, nw),
            ("W×A", &self.w_a, nw, na, nw),
            ("V×W", &self.vw, nv, nw, na),
            ("W×V", &self.wv, nw, nv, nb),
        ];
        for (name, t, rows, cols, range) in shapes {
            if t.len() != rows
                || t.iter()
                    .any(|r| r.len() != cols || r.iter().any(|&x| x >= range))
            {
                return Err(invalid(format!("{name} table has the wrong shape")));
            }
        }
        check_square("A addition", &self.a.add, na)?;
        check_square("A multiplication", &self.a.mul, na)?;
        check_square("B addition", &self.b.add, nb)?;
        check_square("B multiplication", &self.b.mul, nb)?;
        check_square("V addition", &self.v.add, nv)?;
        check_square("W addition", &self.w.add, nw)
    }
}

/// The Morita ring `[[A, V], [W, B]]` graded by matrix position; positions
/// with zero underlying group are omitted.
pub fn gen_morita(name: &str, ctx: &MoritaContext) -> Result<FiniteAnneid> {
    ctx.check_shapes()?;
    // positions in order 11, 12, 21, 22
    type Part<'c> = (&'static str, &'c [String], &'c Vec<Vec<usize>>);
    let parts: [Part; 4] = [
        ("11", &ctx.a.labels, &ctx.a.add),
        ("12", &ctx.v.labels, &ctx.v.add),
        ("21", &ctx.w.labels, &ctx.w.add),
        ("22", &ctx.b.labels, &ctx.b.add),
    ];
    let mut blocks = Vec::new();
    let mut owner = vec![(usize::MAX, 0usize)];
    let mut start = [0usize; 4];
    for (p, (pos, labels, _)) in parts.iter().enumerate() {
        if labels.len() <= 1 {
            continue;
        }
        start[p] = owner.len();
        let names = labels[1..]
            .iter()
            .map(|l| coefficient_label(l, &format!("e{pos}")))
            .collect();
        blocks.push((pos.to_string(), names));
        for i in 1..labels.len() {
            owner.push((p, i));
        }
    }
    let id = |p: usize, i: usize| if i == 0 { 0 } else { start[p] + i - 1 };
    let doc = build_document(
        name,
        blocks,
        |_, x, y| match (x, y) {
            (0, y) => y,
            (x, 0) => x,
            (x, y) => {
                let ((p, i), (_, j)) = (owner[x], owner[y]);
                id(p, parts[p].2[i][j])
            }
        },
        |x, y| {
            if x == 0 || y == 0 {
                return 0;
            }
            let ((p, i), (q, j)) = (owner[x], owner[y]);
            // p = 2·row + col over {0,1}²
            let (r1, c1, r2, c2) = (p / 2, p % 2, q / 2, q % 2);
            if c1 != r2 {
                return 0;
            }
            let target = 2 * r1 + c2;
            let v = match (p, q) {
                (0, 0) => ctx.a.mul[i][j],
                (0, 1) => ctx.a_v[i][j],
                (1, 2) => ctx.vw[i][j],
                (1, 3) => ctx.v_b[i][j],
                (2, 0) => ctx.w_a[i][j],
                (2, 1) => ctx.wv[i][j],
                (3, 2) => ctx.b_w[i][j],
                (3, 3) => ctx.b.mul[i][j],
                _ => unreachable!(),
            };
            id(target, v)
        },
    );
    validate_generated(doc)
}

/// Zero-multiplication anneid whose block `k` is cyclic of order `sizes[k] + 1`.
pub fn gen_zero_mult(sizes: &[usize]) -> Result<FiniteAnneid> {
    if sizes.contains(&0) {
        return Err(invalid("block sizes must be positive"));
    }
    let single = sizes.len() == 1;
    let blocks: Vec<(String, Vec<String>)> = sizes
        .iter()
        .enumerate()
        .map(|(k, &m)| {
            let base = if single {
                "z".to_string()
            } else {
                format!("z{}", k + 1)
            };
            let labels = (1..=m)
                .map(|j| {
                    if j == 1 {
                        base.clone()
                    } else {
                        format!("{j}{base}")
                    }
                })
                .collect();
            (format!("d{}", k + 1), labels)
        })
        .collect();
    let mut starts = Vec::new();
    let mut next = 1;
    for &m in sizes {
        starts.push(next);
        next += m;
    }
    let name = format!("zero{sizes:?}");
    let doc = build_document(
        name,
        blocks,
        |k, x, y| {
            let m = sizes[k] + 1;
            let local = |x: usize| if x == 0 { 0 } else { x - starts[k] + 1 };
            match (local(x) + local(y)) % m {
                0 => 0,
                s => starts[k] + s - 1,
            }
        },
        |_, _| 0,
    );
    validate_generated(doc)
}

/// Transitive closure of a random relation on `n` vertices as matrix units:
/// `e_ij` is present when `j` is reachable from `i`.
fn random_path_semigroup(rng: &mut ChaCha8Rng, n: usize) -> Semigroup {
    let density = rng.gen_range(0.15..0.6);
    let mut reach = vec![vec![false; n]; n];
    for row in reach.iter_mut() {
        for r in row.iter_mut() {
            *r = rng.gen_bool(density);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    let units: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| reach[i][j])
        .collect();
    let m = units.len() + 1;
    let mut labels = vec!["0".to_string()];
    labels.extend(units.iter().map(|(i, j)| format!("e{}{}", i + 1, j + 1)));
    let mul = (0..m)
        .map(|x| {
            (0..m)
                .map(|y| {
                    if x == 0 || y == 0 {
                        return 0;
                    }
                    let ((i, j), (k, l)) = (units[x - 1], units[y - 1]);
                    if j != k {
                        return 0;
                    }
                    1 + units.iter().position(|&u| u == (i, l)).expect("closed")
                })
                .collect()
        })
        .collect();
    Semigroup {
        labels,
        mul,
        zero: Some(0),
    }
}

/// The semigroup of maps `{0,1,2} → {0,1,2}` generated by one or two random
/// maps, with a zero adjoined and, sometimes, a principal ideal collapsed
/// into it. `None` if it has more than `cap` nonzero elements.
fn random_transformation_semigroup(rng: &mut ChaCha8Rng, cap: usize) -> Option<Semigroup> {
    let gens = rng.gen_range(1..=2);
    let mut maps: Vec<[usize; 3]> = Vec::new();
    for _ in 0..gens {
        let f = [0; 3].map(|_| rng.gen_range(0..3));
        if !maps.contains(&f) {
            maps.push(f);
        }
    }
    let compose = |f: &[usize; 3], g: &[usize; 3]| [g[f[0]], g[f[1]], g[f[2]]];
    let mut i = 0;
    while i < maps.len() {
        for j in 0..=i {
            for (f, g) in [(maps[i], maps[j]), (maps[j], maps[i])] {
                let h = compose(&f, &g);
                if !maps.contains(&h) {
                    maps.push(h);
                }
            }
        }
        if maps.len() > 27 {
            return None;
        }
        i += 1;
    }
    let n = maps.len();
    let index = |h: &[usize; 3]| maps.iter().position(|f| f == h).expect("closed");
    let mut killed = vec![false; n];
    if rng.gen_bool(0.4) {
        let x = rng.gen_range(0..n);
        killed[x] = true;
        for a in 0..n {
            killed[index(&compose(&maps[a], &maps[x]))] = true;
            killed[index(&compose(&maps[x], &maps[a]))] = true;
            for b in 0..n {
                killed[index(&compose(&compose(&maps[a], &maps[x]), &maps[b]))] = true;
            }
        }
    }
    let alive: Vec<usize> = (0..n).filter(|&f| !killed[f]).collect();
    if alive.is_empty() || alive.len() > cap {
        return None;
    }
    let slot = |f: usize| alive.iter().position(|&g| g == f).map_or(0, |p| p + 1);
    let mut labels = vec!["0".to_string()];
    labels.extend(
        alive
            .iter()
            .map(|&f| format!("t{}{}{}", maps[f][0], maps[f][1], maps[f][2])),
    );
    let m = alive.len() + 1;
    let mul = (0..m)
        .map(|x| {
            (0..m)
                .map(|y| {
                    if x == 0 || y == 0 {
                        0
                    } else {
                        slot(index(&compose(&maps[alive[x - 1]], &maps[alive[y - 1]])))
                    }
                })
                .collect()
        })
        .collect();
    Some(Semigroup {
        labels,
        mul,
        zero: Some(0),
    })
}

/// One draw of rank-one blocks over `F_p`: each ordered pair of blocks
/// either multiplies to zero or into a chosen block with a nonzero scalar.
fn random_rank_one(
    rng: &mut ChaCha8Rng,
    name: &str,
    max_elements: usize,
    max_blocks: usize,
) -> Option<FiniteAnneid> {
    let p: usize = if max_elements >= 3 && rng.gen_bool(0.3) {
        3
    } else {
        2
    };
    let cap = ((max_elements - 1) / (p - 1)).min(max_blocks);
    if cap == 0 {
        return Some(FiniteAnneid::zero(name));
    }
    let k = rng.gen_range(1..=cap);
    let density = rng.gen_range(0.2..0.7);
    let mut target = vec![None; k * k];
    for t in target.iter_mut() {
        if rng.gen_bool(density) {
            *t = Some((rng.gen_range(0..k), rng.gen_range(1..p)));
        }
    }
    let per = p - 1;
    let split = |x: usize| ((x - 1) / per, (x - 1) % per + 1);
    let blocks = (0..k)
        .map(|b| {
            let labels = (1..p)
                .map(|c| {
                    if c == 1 {
                        format!("x{}", b + 1)
                    } else {
                        format!("{c}x{}", b + 1)
                    }
                })
                .collect();
            (format!("g{}", b + 1), labels)
        })
        .collect();
    let doc = build_document(
        name.to_string(),
        blocks,
        |_, x, y| match (x, y) {
            (0, y) => y,
            (x, 0) => x,
            (x, y) => {
                let ((b, i), (_, j)) = (split(x), split(y));
                match (i + j) % p {
                    0 => 0,
                    s => 1 + b * per + s - 1,
                }
            }
        },
        |x, y| {
            if x == 0 || y == 0 {
                return 0;
            }
            let ((bx, i), (by, j)) = (split(x), split(y));
            match target[bx * k + by] {
                Some((bz, c)) => 1 + bz * per + i * j * c % p - 1,
                None => 0,
            }
        },
    );
    FiniteAnneid::validate(doc).ok()
}

/// Seeded random anneid with at most `max_elements` elements (zero
/// included) and `max_blocks` blocks.
///
/// Three families are mixed: contracted semigroup rings over `Z2`, `Z3` or
/// `Z4` of reachability semigroups of random digraphs and of random
/// transformation semigroups, and rank-one blocks with random products
/// drawn until one validates.
pub fn gen_random_anneid(
    seed: u64,
    max_elements: usize,
    max_blocks: usize,
) -> Result<FiniteAnneid> {
    if max_elements == 0 || max_blocks == 0 {
        return Err(invalid("bounds must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let name = format!("random-{seed}");
    for _ in 0..RANDOM_ATTEMPTS {
        let family = rng.gen_range(0..10);
        if family >= 7 {
            if let Some(a) = random_rank_one(&mut rng, &name, max_elements, max_blocks) {
                return Ok(a);
            }
            continue;
        }
        let q = match rng.gen_range(0..10) {
            0..=5 => 2,
            6..=8 => 3,
            _ => 4,
        };
        let cap = ((max_elements - 1) / (q - 1)).min(max_blocks);
        if cap == 0 {
            continue;
        }
        let s = if family < 4 {
            let vertices = rng.gen_range(2..=4);
            Some(random_path_semigroup(&mut rng, vertices))
        } else {
            random_transformation_semigroup(&mut rng, cap)
        };
        let Some(s) = s.filter(|s| (1..=cap).contains(&(s.labels.len() - 1))) else {
            continue;
        };
        if let Ok(a) = gen_semigroup_graded(&name, &s, &TableRing::zmod(q)) {
            return Ok(a);
        }
    }
    Err(Error::GenerationExhausted {
        attempts: RANDOM_ATTEMPTS,
    })
}
