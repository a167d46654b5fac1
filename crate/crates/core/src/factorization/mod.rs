//! Ordered Dehn twist sequences, their multiplicity invariants, and Hurwitz moves.

mod hurwitz;
mod profile;

use std::fmt;

use thiserror::Error;

use crate::mcg::{Braid, Curve, HoleSet, MappingClass, McgError};

pub use hurwitz::{hurwitz_orbit_search, HurwitzVerdict, Inequivalence, Move};
pub use profile::MultiplicityProfile;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorizationError {
    #[error(transparent)]
    Mcg(#[from] McgError),
    #[error("factor {position} has rank {found}, expected {expected}")]
    RankMismatch {
        position: usize,
        expected: usize,
        found: usize,
    },
    #[error("move position {position} out of range for {len} factors")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("factor {position} is a negative twist; a positive factorization is required")]
    NonPositive { position: usize },
    #[error("search budget must be positive")]
    InvalidBudget,
}

/// A Dehn twist `τ_c^{±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Twist {
    pub curve: Curve,
    pub sign: i8,
}

impl Twist {
    pub fn positive(curve: Curve) -> Twist {
        Twist { curve, sign: 1 }
    }

    pub fn negative(curve: Curve) -> Twist {
        Twist { curve, sign: -1 }
    }

    pub fn is_positive(&self) -> bool {
        self.sign > 0
    }

    pub fn mapping_class(&self) -> MappingClass {
        self.curve.twist(self.sign)
    }

    /// Braid word for this twist (modulo hole twists), used to move curves.
    pub fn braid(&self) -> Braid {
        self.curve.twist_braid(self.sign)
    }

    pub fn enclosed_set(&self) -> HoleSet {
        self.curve.enclosed_set()
    }
}

/// Direction of a Hurwitz move at position `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `(t_i, t_{i+1}) -> (t_{i+1}, t_{i+1}^-1 t_i t_{i+1})`.
    Right,
    /// `(t_i, t_{i+1}) -> (t_i t_{i+1} t_i^-1, t_i)`.
    Left,
}

impl Direction {
    pub fn reverse(self) -> Direction {
        match self {
            Direction::Right => Direction::Left,
            Direction::Left => Direction::Right,
        }
    }
}

/// An ordered product `τ_1 τ_2 ... τ_m` on `D_rank`; the rightmost factor acts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization {
    rank: usize,
    factors: Vec<Twist>,
}

impl Factorization {
    pub fn new(rank: usize, factors: Vec<Twist>) -> Result<Self, FactorizationError> {
        for (position, t) in factors.iter().enumerate() {
            if t.curve.rank() != rank {
                return Err(FactorizationError::RankMismatch {
                    position,
                    expected: rank,
                    found: t.curve.rank(),
                });
            }
        }
        Ok(Factorization { rank, factors })
    }

    pub fn empty(rank: usize) -> Self {
        Factorization {
            rank,
            factors: Vec::new(),
        }
    }

    /// Positive twists about the canonical curves of `blocks`, in order.
    pub fn from_blocks(rank: usize, blocks: &[HoleSet]) -> Result<Self, FactorizationError> {
        let factors = blocks
            .iter()
            .map(|&s| Curve::canonical(rank, s).map(Twist::positive))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Factorization { rank, factors })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn factors(&self) -> &[Twist] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.factors.iter().all(Twist::is_positive)
    }

    pub fn require_positive(&self) -> Result<(), FactorizationError> {
        match self.factors.iter().position(|t| !t.is_positive()) {
            Some(position) => Err(FactorizationError::NonPositive { position }),
            None => Ok(()),
        }
    }

    /// The total monodromy.
    pub fn product(&self) -> MappingClass {
        let mut acc = MappingClass::identity(self.rank);
        for t in &self.factors {
            let g = if t.sign >= 0 {
                t.curve.positive_twist().clone()
            } else {
                t.curve.twist(-1)
            };
            acc = acc.product(&g).expect("factors share the rank");
        }
        acc
    }

    pub fn profile(&self) -> MultiplicityProfile {
        let mut p = MultiplicityProfile::zero(self.rank);
        for t in &self.factors {
            p.add_block(t.enclosed_set(), t.sign as i64);
        }
        p
    }

    /// Enclosed hole sets of the factors, sorted canonically.
    pub fn enclosed_multiset(&self) -> Vec<HoleSet> {
        let mut v: Vec<HoleSet> = self.factors.iter().map(Twist::enclosed_set).collect();
        v.sort();
        v
    }

    pub fn concat(&self, other: &Factorization) -> Result<Self, FactorizationError> {
        if other.rank != self.rank {
            return Err(McgError::RankMismatch {
                left: self.rank,
                right: other.rank,
            }
            .into());
        }
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Ok(Factorization {
            rank: self.rank,
            factors,
        })
    }

    /// Hurwitz move at 0-based position `i` (acting on factors `i` and `i+1`).
    pub fn hurwitz_move(&self, i: usize, direction: Direction) -> Result<Self, FactorizationError> {
        if i + 1 >= self.factors.len() {
            return Err(FactorizationError::PositionOutOfRange {
                position: i,
                len: self.factors.len(),
            });
        }
        let (left, right) = (&self.factors[i], &self.factors[i + 1]);
        let (new_left, new_right) = match direction {
            Direction::Right => {
                let moved = left
                    .curve
                    .conjugate_by(&right.curve.twist_braid(-right.sign))?;
                (
                    right.clone(),
                    Twist {
                        curve: moved,
                        sign: left.sign,
                    },
                )
            }
            Direction::Left => {
                let moved = right.curve.conjugate_by(&left.braid())?;
                (
                    Twist {
                        curve: moved,
                        sign: right.sign,
                    },
                    left.clone(),
                )
            }
        };
        let mut factors = self.factors.clone();
        factors[i] = new_left;
        factors[i + 1] = new_right;
        Ok(Factorization {
            rank: self.rank,
            factors,
        })
    }

    /// Every curve moved by `g`; the product becomes `g Φ g^-1`.
    pub fn global_conjugate(&self, g: &Braid) -> Result<Self, FactorizationError> {
        let factors = self
            .factors
            .iter()
            .map(|t| {
                t.curve.conjugate_by(g).map(|curve| Twist {
                    curve,
                    sign: t.sign,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Factorization {
            rank: self.rank,
            factors,
        })
    }

    /// Factor-by-factor agreement of transporter words and blocks.
    pub fn same_presentation(&self, other: &Factorization) -> bool {
        self.rank == other.rank
            && self.factors.len() == other.factors.len()
            && self
                .factors
                .iter()
                .zip(&other.factors)
                .all(|(a, b)| a.sign == b.sign && a.curve.same_presentation(&b.curve))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D_{}:", self.rank)?;
        for t in &self.factors {
            write!(
                f,
                " τ{}{}",
                t.curve.enclosed_set(),
                if t.sign < 0 { "^-1" } else { "" }
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blocks(rank: usize, sets: &[&[usize]]) -> Factorization {
        let b: Vec<HoleSet> = sets
            .iter()
            .map(|s| HoleSet::from_holes(rank, s.iter().copied()).unwrap())
            .collect();
        Factorization::from_blocks(rank, &b).unwrap()
    }

    #[test]
    fn product_examples() {
        assert!(Factorization::empty(3).product().is_identity());
        let f = blocks(3, &[&[1], &[1]]);
        assert_eq!(f.product().hole_mult(), &[2, 0, 0]);
        let lhs = blocks(3, &[&[1], &[2], &[3], &[1, 2, 3]]);
        let rhs = blocks(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(lhs.product(), rhs.product());
    }

    #[test]
    fn hole_twists_commute_but_differ_from_identity() {
        let b1 = blocks(3, &[&[1]]).product();
        assert!(b1.aut().is_identity());
        assert_ne!(b1, MappingClass::identity(3));
        assert_eq!(
            blocks(3, &[&[1], &[2]]).product(),
            blocks(3, &[&[2], &[1]]).product()
        );
    }

    #[test]
    fn profile_of_boundary_factorization() {
        let p = blocks(3, &[&[1], &[2], &[3], &[1, 2, 3]]).profile();
        assert_eq!(p.singles(), &[2, 2, 2]);
        for i in 1..=3 {
            for j in i + 1..=3 {
                assert_eq!(p.joint(i, j), 1);
            }
        }
        assert!(Factorization::empty(4).profile().is_zero());
    }

    #[test]
    fn disjoint_twists_swap_unchanged() {
        let f = blocks(3, &[&[1], &[2]]);
        let g = f.hurwitz_move(0, Direction::Right).unwrap();
        assert_eq!(g.factors()[0].curve, f.factors()[1].curve);
        assert_eq!(g.factors()[1].curve, f.factors()[0].curve);
    }

    #[test]
    fn moves_are_mutually_inverse() {
        let f = blocks(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        for i in 0..2 {
            for d in [Direction::Right, Direction::Left] {
                let g = f.hurwitz_move(i, d).unwrap();
                assert_eq!(g.product(), f.product());
                let back = g.hurwitz_move(i, d.reverse()).unwrap();
                assert_eq!(back, f);
            }
        }
        assert!(matches!(
            f.hurwitz_move(2, Direction::Right),
            Err(FactorizationError::PositionOutOfRange { .. })
        ));
    }

    #[test]
    fn global_conjugation_preserves_profile() {
        let f = blocks(4, &[&[1, 2], &[2, 3, 4], &[1, 4], &[3]]);
        let g = Curve::canonical(4, HoleSet::from_holes(4, [2, 4]).unwrap())
            .unwrap()
            .twist_braid(1);
        let h = f.global_conjugate(&g).unwrap();
        assert_eq!(h.profile(), f.profile());
        let gm = g.automorphism(4).unwrap();
        assert_eq!(
            h.product().aut(),
            &gm.compose(f.product().aut())
                .unwrap()
                .compose(&gm.inverse())
                .unwrap()
        );
        assert_eq!(f.global_conjugate(&Braid::identity()).unwrap(), f);
    }

    #[test]
    fn positivity_is_checked() {
        let c = Curve::outer(2).unwrap();
        let f =
            Factorization::new(2, vec![Twist::positive(c.clone()), Twist::negative(c)]).unwrap();
        assert_eq!(
            f.require_positive(),
            Err(FactorizationError::NonPositive { position: 1 })
        );
        assert!(f.product().is_identity());
        assert!(f.profile().is_zero());
    }

    #[test]
    fn rank_mismatch_rejected() {
        let c = Curve::outer(2).unwrap();
        assert!(matches!(
            Factorization::new(3, vec![Twist::positive(c)]),
            Err(FactorizationError::RankMismatch { .. })
        ));
    }
}
