//! The built-in corpus: hand-picked structured instances followed by seeded
//! random anneids.

use crate::anneid::FiniteAnneid;
use crate::catalog;
use crate::corpus::generators::{
    gen_group_graded, gen_morita, gen_random_anneid, gen_semigroup_graded, gen_zero_mult,
    MoritaContext, Semigroup,
};
use crate::corpus::suite::CorpusInstance;
use crate::error::Result;
use crate::ring::TableRing;

/// Bounds handed to [`gen_random_anneid`] for corpus members. They keep
/// `|Ā| ≤ 2^12` while `|A| ≤ 13`.
pub const RANDOM_MAX_ELEMENTS: usize = 13;
pub const RANDOM_MAX_BLOCKS: usize = 12;

/// A semigroup with zero from a product on labels `0..n`, `None` meaning 0.
fn semigroup_with_zero(labels: &[&str], f: impl Fn(usize, usize) -> Option<usize>) -> Semigroup {
    let n = labels.len() + 1;
    let mul = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    if x == 0 || y == 0 {
                        0
                    } else {
                        f(x - 1, y - 1).map_or(0, |z| z + 1)
                    }
                })
                .collect()
        })
        .collect();
    Semigroup {
        labels: std::iter::once("0")
            .chain(labels.iter().copied())
            .map(String::from)
            .collect(),
        mul,
        zero: Some(0),
    }
}

fn over_z2(name: &str, s: &Semigroup) -> FiniteAnneid {
    gen_semigroup_graded(name, s, &TableRing::zmod(2)).expect("structured semigroup ring is valid")
}

/// Path algebra of `1 → 2 → 3` over `Z2`.
fn path_a3() -> FiniteAnneid {
    // e1 e2 e3 a b ab, with a: 1→2 and b: 2→3, written left to right
    let labels = ["e1", "e2", "e3", "a", "b", "ab"];
    let ends = [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)];
    let s = semigroup_with_zero(&labels, |x, y| {
        let ((p, q), (r, t)) = (ends[x], ends[y]);
        if q != r {
            return None;
        }
        ends.iter().position(|&e| e == (p, t))
    });
    over_z2("A3", &s)
}

fn truncated_polynomial(name: &str, degree: usize) -> FiniteAnneid {
    let labels: Vec<String> = (0..degree)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x{i}"),
        })
        .collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    over_z2(
        name,
        &semigroup_with_zero(&refs, |i, j| (i + j < degree).then_some(i + j)),
    )
}

fn bands() -> [FiniteAnneid; 2] {
    let left = semigroup_with_zero(&["l1", "l2"], |x, _| Some(x));
    let right = semigroup_with_zero(&["r1", "r2"], |_, y| Some(y));
    [over_z2("left-band", &left), over_z2("right-band", &right)]
}

fn strictly_upper_3x3() -> FiniteAnneid {
    let s = semigroup_with_zero(&["e12", "e13", "e23"], |x, y| {
        (x == 0 && y == 2).then_some(1)
    });
    over_z2("U3", &s)
}

fn morita(name: &str, ctx: MoritaContext) -> FiniteAnneid {
    gen_morita(name, &ctx).expect("structured Morita context is valid")
}

/// The structured part of the corpus with provenance `structured:<name>`.
pub fn structured() -> Vec<CorpusInstance> {
    let mut out: Vec<FiniteAnneid> = Vec::new();
    for sizes in [&[1][..], &[2], &[1, 1], &[3], &[1, 2]] {
        out.push(gen_zero_mult(sizes).expect("positive sizes"));
    }
    out.push(catalog::triangular());
    for n in [2, 3, 4, 6, 8, 9] {
        out.push(catalog::zmod(n));
    }
    out.push(catalog::two_z8());
    out.push(TableRing::f4().to_anneid("F4").expect("field tables"));
    let groups = [
        ("Z2[C2]", Semigroup::cyclic_group(2), TableRing::zmod(2)),
        ("Z2[C3]", Semigroup::cyclic_group(3), TableRing::zmod(2)),
        ("Z3[C2]", Semigroup::cyclic_group(2), TableRing::zmod(3)),
        ("Z2[C4]", Semigroup::cyclic_group(4), TableRing::zmod(2)),
        ("Z2[V4]", Semigroup::klein_group(), TableRing::zmod(2)),
        ("Z3[C3]", Semigroup::cyclic_group(3), TableRing::zmod(3)),
        ("F4[C2]", Semigroup::cyclic_group(2), TableRing::f4()),
        ("Z4[C2]", Semigroup::cyclic_group(2), TableRing::zmod(4)),
        ("Z5[C2]", Semigroup::cyclic_group(2), TableRing::zmod(5)),
    ];
    for (name, g, k) in groups {
        out.push(gen_group_graded(name, &g, &k).expect("group ring tables"));
    }
    out.push(catalog::matrix_2x2_z2());
    out.push(morita("M2(Z3)", MoritaContext::scalar(3, true, true, true)));
    out.push(morita(
        "T(Z3)",
        MoritaContext::scalar(3, true, false, false),
    ));
    out.push(morita(
        "TE(Z2)",
        MoritaContext::scalar(2, true, true, false),
    ));
    out.push(morita(
        "T(Z4)",
        MoritaContext::scalar(4, true, false, false),
    ));
    out.push(morita("M2(Z4)", MoritaContext::scalar(4, true, true, true)));
    out.push(catalog::nonregular_semigroup());
    out.push(over_z2("M3(Z2)", &Semigroup::matrix_units(3)));
    out.push(path_a3());
    out.push(truncated_polynomial("Z2[x]/x2", 2));
    out.push(truncated_polynomial("Z2[x]/x3", 3));
    out.extend(bands());
    out.push(strictly_upper_3x3());
    out.into_iter()
        .map(|a| {
            let tag = format!("structured:{}", a.name());
            CorpusInstance::new(a, tag)
        })
        .collect()
}

/// Random anneids for seeds `seed, seed + 1, …`.
pub fn random(count: usize, seed: u64) -> Result<Vec<CorpusInstance>> {
    (0..count as u64)
        .map(|j| {
            let s = seed + j;
            let a = gen_random_anneid(s, RANDOM_MAX_ELEMENTS, RANDOM_MAX_BLOCKS)?;
            Ok(CorpusInstance::new(
                a,
                format!("random:seed={s},max-elements={RANDOM_MAX_ELEMENTS},max-blocks={RANDOM_MAX_BLOCKS}"),
            ))
        })
        .collect()
}

/// The first `count` members of the structured corpus followed by random
/// instances seeded from `seed`.
pub fn builtin(count: usize, seed: u64) -> Result<Vec<CorpusInstance>> {
    let mut out = structured();
    out.truncate(count);
    let missing = count - out.len();
    out.extend(random(missing, seed)?);
    Ok(out)
}
