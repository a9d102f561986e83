//! Named small anneids used throughout tests, examples and the builtin corpus.

use crate::anneid::FiniteAnneid;
use crate::corpus::generators::{
    gen_group_graded, gen_morita, gen_semigroup_graded, gen_zero_mult, MoritaContext, Semigroup,
};
use crate::ring::TableRing;

fn relabel(a: FiniteAnneid, name: &str, labels: &[&str]) -> FiniteAnneid {
    let mut doc = a.to_document();
    doc.name = name.to_string();
    doc.elements = labels.iter().map(|s| s.to_string()).collect();
    FiniteAnneid::validate(doc).expect("relabeling keeps tables valid")
}

/// `{0, z}` with `z + z = 0` and all products zero.
pub fn z2z() -> FiniteAnneid {
    gen_zero_mult(&[1]).unwrap().with_name("Z2z")
}

/// Upper triangular 2×2 matrices over `Z2`: `a = e11`, `b = e12`, `c = e22`.
pub fn triangular() -> FiniteAnneid {
    let t = gen_morita("T", &MoritaContext::scalar(2, true, false, false)).unwrap();
    relabel(t, "T", &["0", "a", "b", "c"])
}

/// `Z_n` as a one-block anneid.
pub fn zmod(n: usize) -> FiniteAnneid {
    TableRing::zmod(n).to_anneid(&format!("Z{n}")).unwrap()
}

pub fn z4() -> FiniteAnneid {
    zmod(4)
}

/// `Z2[C2]` graded by `C2 = {1, g}`.
pub fn c2_over_z2() -> FiniteAnneid {
    gen_group_graded("Z2[C2]", &Semigroup::cyclic_group(2), &TableRing::zmod(2)).unwrap()
}

pub fn c3_over_z2() -> FiniteAnneid {
    gen_group_graded("Z2[C3]", &Semigroup::cyclic_group(3), &TableRing::zmod(2)).unwrap()
}

pub fn c2_over_z3() -> FiniteAnneid {
    gen_group_graded("Z3[C2]", &Semigroup::cyclic_group(2), &TableRing::zmod(3)).unwrap()
}

pub fn klein_over_z2() -> FiniteAnneid {
    gen_group_graded("Z2[V4]", &Semigroup::klein_group(), &TableRing::zmod(2)).unwrap()
}

/// `M2(Z2)` graded by matrix units.
pub fn matrix_2x2_z2() -> FiniteAnneid {
    gen_morita("M2(Z2)", &MoritaContext::scalar(2, true, true, true)).unwrap()
}

/// Contracted semigroup ring over `Z2` with `uu = u`, `ub = uc = b`,
/// `bc = b`, `cc = c` and all other products zero. Not regular, since
/// `ub = uc` while `b` and `c` are not addable.
pub fn nonregular_semigroup() -> FiniteAnneid {
    let s = Semigroup {
        labels: ["0", "u", "b", "c"].map(String::from).to_vec(),
        mul: vec![
            vec![0, 0, 0, 0],
            vec![0, 1, 2, 2],
            vec![0, 0, 0, 2],
            vec![0, 0, 0, 3],
        ],
        zero: Some(0),
    };
    gen_semigroup_graded("N", &s, &TableRing::zmod(2)).unwrap()
}

/// `2Z8 = {0, 2, 4, 6}` as a one-block anneid; a ring without unity.
pub fn two_z8() -> FiniteAnneid {
    TableRing::multiples(2, 8).to_anneid("2Z8").unwrap()
}

pub fn all() -> Vec<FiniteAnneid> {
    vec![
        z2z(),
        triangular(),
        z4(),
        c2_over_z2(),
        c3_over_z2(),
        matrix_2x2_z2(),
        nonregular_semigroup(),
        two_z8(),
    ]
}
