use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::{Braid, FreeAutomorphism, HalfTwist, HoleSet, MappingClass, McgError, Word};

/// An isotopy class of simple closed curve on `D_n`, presented as the image of
/// the convex curve around a contiguous block of holes under a transporter braid.
///
/// Two curves compare equal when their positive Dehn twists agree as mapping
/// classes; the presentation itself is not canonical.
#[derive(Clone, Debug)]
pub struct Curve {
    rank: usize,
    transporter: Braid,
    block: (usize, usize),
    enclosed: HoleSet,
    twist: Arc<MappingClass>,
}

impl Curve {
    pub fn new(rank: usize, transporter: Braid, a: usize, b: usize) -> Result<Curve, McgError> {
        if a == 0 || a > b || b > rank {
            return Err(McgError::InvalidInterval { a, b, rank });
        }
        transporter.check_rank(rank)?;
        let enclosed = enclosed_from(rank, &transporter, a, b)?;
        let t = transporter.automorphism(rank)?;
        let tw = FreeAutomorphism::contiguous_twist(rank, a, b)?;
        let aut = t.compose(&tw)?.compose(&t.inverse())?;
        let twist = MappingClass::from_parts_unchecked(aut, enclosed.indicator(rank));
        Ok(Curve {
            rank,
            transporter,
            block: (a, b),
            enclosed,
            twist: Arc::new(twist),
        })
    }

    /// The convex curve around `a..=b`.
    pub fn contiguous(rank: usize, a: usize, b: usize) -> Result<Curve, McgError> {
        Curve::new(rank, Braid::identity(), a, b)
    }

    /// Hole-parallel curve `b_i`.
    pub fn hole(rank: usize, i: usize) -> Result<Curve, McgError> {
        Curve::contiguous(rank, i, i)
    }

    /// Curve parallel to the outer boundary `b_{n+1}`.
    pub fn outer(rank: usize) -> Result<Curve, McgError> {
        Curve::contiguous(rank, 1, rank)
    }

    /// Deterministic curve enclosing exactly the holes of `set`.
    ///
    /// The block starts at `min(set)`; the transporter slides each later member
    /// leftward into place with positive half-twists, members taken in
    /// increasing order, so every slid hole passes above the holes it crosses.
    pub fn canonical(rank: usize, set: HoleSet) -> Result<Curve, McgError> {
        let members = set.to_vec();
        let (Some(&first), Some(&last)) = (members.first(), members.last()) else {
            return Err(McgError::EmptySubset);
        };
        if last > rank {
            return Err(McgError::HoleOutOfRange { hole: last, rank });
        }
        let mut word = Vec::new();
        for (j, &m) in members.iter().enumerate() {
            let target = first + j;
            word.extend((target..m).rev().map(HalfTwist::pos));
        }
        let curve = Curve::new(rank, Braid::new(word), first, first + members.len() - 1)?;
        debug_assert_eq!(curve.enclosed, set);
        Ok(curve)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn transporter(&self) -> &Braid {
        &self.transporter
    }

    pub fn block(&self) -> (usize, usize) {
        self.block
    }

    pub fn enclosed_set(&self) -> HoleSet {
        self.enclosed
    }

    pub fn is_hole_parallel(&self) -> bool {
        self.enclosed.len() == 1
    }

    pub fn is_outer_parallel(&self) -> bool {
        self.enclosed.len() == self.rank
    }

    /// The block's boundary word pushed through the transporter.
    pub fn boundary_word(&self) -> Result<Word, McgError> {
        Ok(self
            .transporter
            .automorphism(self.rank)?
            .apply(&Word::ascending(self.block.0, self.block.1)))
    }

    /// The positive twist, shared.
    pub fn positive_twist(&self) -> &MappingClass {
        &self.twist
    }

    /// `τ_c^sign` with `sign = ±1`.
    pub fn twist(&self, sign: i8) -> MappingClass {
        if sign >= 0 {
            (*self.twist).clone()
        } else {
            self.twist.inverse()
        }
    }

    /// A braid word representing `τ_c^sign` modulo hole-parallel twists.
    pub fn twist_braid(&self, sign: i8) -> Braid {
        let full = Braid::full_twist(self.block.0, self.block.1);
        let full = if sign >= 0 { full } else { full.inverse() };
        self.transporter
            .concat(&full)
            .concat(&self.transporter.inverse())
    }

    /// The image curve `g(c)`, whose twist is `g τ_c g^-1`.
    pub fn conjugate_by(&self, g: &Braid) -> Result<Curve, McgError> {
        g.check_rank(self.rank)?;
        Curve::new(
            self.rank,
            g.concat(&self.transporter),
            self.block.0,
            self.block.1,
        )
    }

    /// Same transporter word and block, a stronger condition than isotopy.
    pub fn same_presentation(&self, other: &Curve) -> bool {
        self.rank == other.rank
            && self.block == other.block
            && self.transporter == other.transporter
    }

    /// Whether this is the curve `Curve::canonical` builds for its enclosed set.
    pub fn is_canonical_presentation(&self) -> bool {
        Curve::canonical(self.rank, self.enclosed)
            .map(|c| self.same_presentation(&c))
            .unwrap_or(false)
    }
}

/// Support of the exponent-sum vector of the transported block word.
fn enclosed_from(
    rank: usize,
    transporter: &Braid,
    a: usize,
    b: usize,
) -> Result<HoleSet, McgError> {
    let w = transporter
        .automorphism(rank)?
        .apply(&Word::ascending(a, b));
    let mut set = HoleSet::EMPTY;
    for (i, e) in w.exponent_sums(rank).into_iter().enumerate() {
        match e {
            0 => {}
            1 => set = set.with(i + 1),
            other => {
                return Err(McgError::ModelViolation(format!(
                    "exponent sum {other} at hole {} in transported block word",
                    i + 1
                )))
            }
        }
    }
    if set.is_empty() {
        return Err(McgError::ModelViolation(
            "transported block word is null-homologous".into(),
        ));
    }
    Ok(set)
}

impl PartialEq for Curve {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.twist == other.twist
    }
}

impl Eq for Curve {}

impl Hash for Curve {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.twist.hash(state);
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.transporter.is_empty() {
            write!(f, "C[{},{}]", self.block.0, self.block.1)
        } else {
            write!(
                f,
                "({})·C[{},{}]",
                self.transporter, self.block.0, self.block.1
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(rank: usize, holes: &[usize]) -> HoleSet {
        HoleSet::from_holes(rank, holes.iter().copied()).unwrap()
    }

    #[test]
    fn canonical_contiguous_curves_have_empty_transporter() {
        let c = Curve::canonical(3, set(3, &[2])).unwrap();
        assert_eq!(c.block(), (2, 2));
        assert!(c.transporter().is_empty());
        let o = Curve::canonical(3, set(3, &[1, 2, 3])).unwrap();
        assert_eq!(o.block(), (1, 3));
        assert!(o.transporter().is_empty());
        assert!(o.is_outer_parallel());
    }

    #[test]
    fn canonical_noncontiguous_curve() {
        let c = Curve::canonical(3, set(3, &[1, 3])).unwrap();
        assert!(!c.transporter().is_empty());
        assert_eq!(c.enclosed_set(), set(3, &[1, 3]));
        // Transported block word x1 · x2 x3 x2^-1 has exponent sums (1,0,1).
        assert_eq!(c.boundary_word().unwrap().exponent_sums(3), vec![1, 0, 1]);
        assert_eq!(
            Curve::canonical(4, set(4, &[2, 4])).unwrap().enclosed_set(),
            set(4, &[2, 4])
        );
    }

    #[test]
    fn canonical_enclosed_set_round_trip() {
        for rank in 1..=6 {
            for s in HoleSet::all_nonempty(rank) {
                let c = Curve::canonical(rank, s).unwrap();
                assert_eq!(c.enclosed_set(), s);
                assert!(c.positive_twist().aut().fixes_boundary());
                assert!(c.is_canonical_presentation());
            }
        }
    }

    #[test]
    fn empty_subset_is_rejected() {
        assert_eq!(
            Curve::canonical(3, HoleSet::EMPTY).unwrap_err(),
            McgError::EmptySubset
        );
        assert!(Curve::canonical(2, set(3, &[3])).is_err());
    }

    #[test]
    fn twist_examples() {
        let b2 = Curve::canonical(3, set(3, &[2])).unwrap();
        let t = b2.twist(1);
        assert!(t.aut().is_identity());
        assert_eq!(t.hole_mult(), &[0, 1, 0]);
        let outer = Curve::outer(3).unwrap();
        assert_eq!(outer.twist(1).hole_mult(), &[1, 1, 1]);
        let c = Curve::canonical(3, set(3, &[1, 3])).unwrap();
        assert!(c.twist(1).product(&c.twist(-1)).unwrap().is_identity());
    }

    #[test]
    fn twist_braid_matches_twist_action() {
        for rank in 2..=5 {
            for s in HoleSet::all_nonempty(rank) {
                let c = Curve::canonical(rank, s).unwrap();
                for sign in [1i8, -1] {
                    let via_braid = c.twist_braid(sign).automorphism(rank).unwrap();
                    assert_eq!(&via_braid, c.twist(sign).aut());
                }
            }
        }
    }

    #[test]
    fn conjugation_examples() {
        let c = Curve::canonical(3, set(3, &[1, 3])).unwrap();
        assert_eq!(c.conjugate_by(&Braid::identity()).unwrap(), c);
        // A twist fixes its own curve.
        assert_eq!(c.conjugate_by(&c.twist_braid(1)).unwrap(), c);
        let alpha = Curve::canonical(3, set(3, &[1, 2])).unwrap();
        let gamma = Curve::canonical(3, set(3, &[2, 3])).unwrap();
        let moved = alpha.conjugate_by(&gamma.twist_braid(1)).unwrap();
        assert_eq!(moved.enclosed_set(), alpha.enclosed_set());
        assert_ne!(moved, alpha);
        let g = gamma.twist(1);
        let expected = g
            .product(alpha.positive_twist())
            .unwrap()
            .product(&g.inverse())
            .unwrap();
        assert_eq!(moved.positive_twist(), &expected);
    }

    #[test]
    fn rank_checks() {
        let c = Curve::canonical(2, set(2, &[1, 2])).unwrap();
        let g = Braid::new([HalfTwist::pos(2)]);
        assert!(matches!(
            c.conjugate_by(&g),
            Err(McgError::InvalidIndex { .. })
        ));
        assert!(matches!(
            Curve::new(3, Braid::identity(), 2, 4),
            Err(McgError::InvalidInterval { .. })
        ));
    }
}
