//! The grade groupoid `Δ = Δ* ∪ {0}` induced by the block products of an anneid.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::anneid::FiniteAnneid;

/// A grade: `0` is the zero grade, `k + 1` is the grade of block `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Grade(pub u16);

impl Grade {
    pub const ZERO: Grade = Grade(0);

    pub fn of_block(k: usize) -> Grade {
        Grade(u16::try_from(k + 1).expect("block count fits in u16"))
    }

    pub fn block(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0 as usize - 1)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `Δ` with its total product; the zero grade absorbs and also stands for
/// "product undefined".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradeGroupoid {
    size: usize,
    product: Vec<Grade>,
    idempotents: Vec<Grade>,
}

impl GradeGroupoid {
    /// Reads `ξη` off the multiplication table: the block holding any nonzero
    /// product of `A(ξ)` and `A(η)`, or zero when all such products vanish.
    pub fn derive(a: &FiniteAnneid) -> Self {
        let size = a.block_count() + 1;
        let mut product = vec![Grade::ZERO; size * size];
        for xi in 0..a.block_count() {
            for eta in 0..a.block_count() {
                let hit = a
                    .block(xi)
                    .iter()
                    .find_map(|&x| a.block(eta).iter().map(|&y| a.mul(x, y)).find(|&p| p != 0));
                if let Some(p) = hit {
                    product[(xi + 1) * size + eta + 1] = a.degree(p);
                }
            }
        }
        let idempotents = (1..size)
            .map(|g| Grade(g as u16))
            .filter(|&g| product[g.0 as usize * size + g.0 as usize] == g)
            .collect();
        GradeGroupoid {
            size,
            product,
            idempotents,
        }
    }

    pub fn product(&self, xi: Grade, eta: Grade) -> Grade {
        self.product[xi.0 as usize * self.size + eta.0 as usize]
    }

    /// Nonzero grades.
    pub fn grades(&self) -> impl Iterator<Item = Grade> {
        (1..self.size).map(|g| Grade(g as u16))
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn idempotents(&self) -> &[Grade] {
        &self.idempotents
    }

    pub fn is_idempotent(&self, g: Grade) -> bool {
        !g.is_zero() && self.product(g, g) == g
    }

    /// The standing hypothesis that a product of two nonidempotent grades is
    /// never a nonzero idempotent. Returns the first offending pair otherwise.
    pub fn delta_assumption(&self) -> Result<(), (Grade, Grade)> {
        for xi in self.grades().filter(|&g| !self.is_idempotent(g)) {
            for eta in self.grades().filter(|&g| !self.is_idempotent(g)) {
                if self.is_idempotent(self.product(xi, eta)) {
                    return Err((xi, eta));
                }
            }
        }
        Ok(())
    }

    pub fn delta_assumption_holds(&self) -> bool {
        self.delta_assumption().is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn z2z_has_no_idempotents() {
        let d = GradeGroupoid::derive(&catalog::z2z());
        assert_eq!(d.product(Grade(1), Grade(1)), Grade::ZERO);
        assert!(d.idempotents().is_empty());
        assert!(d.delta_assumption_holds());
    }

    #[test]
    fn triangular_grades_match_matrix_units() {
        let t = catalog::triangular();
        let d = GradeGroupoid::derive(&t);
        // blocks in order 11, 12, 22
        let (g11, g12, g22) = (Grade(1), Grade(2), Grade(3));
        assert_eq!(d.product(g11, g11), g11);
        assert_eq!(d.product(g11, g12), g12);
        assert_eq!(d.product(g12, g22), g12);
        assert_eq!(d.product(g22, g22), g22);
        for (x, y) in [(g12, g11), (g22, g11), (g22, g12), (g12, g12), (g11, g22)] {
            assert_eq!(d.product(x, y), Grade::ZERO);
        }
        assert_eq!(d.idempotents(), &[g11, g22]);
        assert!(d.delta_assumption_holds());
    }

    #[test]
    fn c2_group_grading_fails_delta_assumption() {
        let a = catalog::c2_over_z2();
        let d = GradeGroupoid::derive(&a);
        assert_eq!(d.idempotents(), &[Grade(1)]);
        assert_eq!(d.product(Grade(2), Grade(2)), Grade(1));
        assert_eq!(d.delta_assumption(), Err((Grade(2), Grade(2))));
    }

    #[test]
    fn degree_is_multiplicative_on_catalog() {
        for a in catalog::all() {
            let d = GradeGroupoid::derive(&a);
            for x in a.elements() {
                for y in a.elements() {
                    let p = a.mul(x, y);
                    if p != 0 {
                        assert_eq!(
                            a.degree(p),
                            d.product(a.degree(x), a.degree(y)),
                            "{}",
                            a.name()
                        );
                    }
                }
            }
        }
    }
}
