use std::fmt;

use super::{FreeAutomorphism, McgError};

/// Signed elementary half-twist `s_j^{±1}` exchanging holes `j` and `j+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfTwist {
    pub index: usize,
    pub positive: bool,
}

impl HalfTwist {
    pub fn pos(index: usize) -> HalfTwist {
        HalfTwist {
            index,
            positive: true,
        }
    }

    pub fn neg(index: usize) -> HalfTwist {
        HalfTwist {
            index,
            positive: false,
        }
    }

    pub fn inverse(self) -> HalfTwist {
        HalfTwist {
            index: self.index,
            positive: !self.positive,
        }
    }
}

/// A freely reduced word in half-twists, read as a composition
/// `h_1 ∘ h_2 ∘ ... ∘ h_k` (rightmost applied first).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Braid(Vec<HalfTwist>);

fn push(buf: &mut Vec<HalfTwist>, h: HalfTwist) {
    if buf.last() == Some(&h.inverse()) {
        buf.pop();
    } else {
        buf.push(h);
    }
}

impl Braid {
    pub fn identity() -> Braid {
        Braid(Vec::new())
    }

    pub fn new<I: IntoIterator<Item = HalfTwist>>(letters: I) -> Braid {
        let mut buf = Vec::new();
        for h in letters {
            push(&mut buf, h);
        }
        Braid(buf)
    }

    /// Full twist on holes `a..=b`: `(s_a s_{a+1} ... s_{b-1})^(b-a+1)`.
    pub fn full_twist(a: usize, b: usize) -> Braid {
        let cycle: Vec<HalfTwist> = (a..b).map(HalfTwist::pos).collect();
        Braid::new(std::iter::repeat_n(cycle, b - a + 1).flatten())
    }

    pub fn letters(&self) -> &[HalfTwist] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Braid {
        Braid(self.0.iter().rev().map(|h| h.inverse()).collect())
    }

    pub fn concat(&self, other: &Braid) -> Braid {
        let mut buf = self.0.clone();
        for &h in &other.0 {
            push(&mut buf, h);
        }
        Braid(buf)
    }

    /// `self^k`; negative powers use the inverse.
    pub fn pow(&self, k: i64) -> Braid {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Braid::identity(), |acc, _| acc.concat(&base))
    }

    /// Largest half-twist index used, so the braid needs at least `max + 1` holes.
    pub fn max_index(&self) -> usize {
        self.0.iter().map(|h| h.index).max().unwrap_or(0)
    }

    pub fn check_rank(&self, rank: usize) -> Result<(), McgError> {
        match self.0.iter().find(|h| h.index == 0 || h.index >= rank) {
            Some(h) => Err(McgError::InvalidIndex {
                index: h.index,
                rank,
            }),
            None => Ok(()),
        }
    }

    /// The induced automorphism of the free group of rank `rank`.
    pub fn automorphism(&self, rank: usize) -> Result<FreeAutomorphism, McgError> {
        self.check_rank(rank)?;
        let mut acc = FreeAutomorphism::identity(rank);
        for h in &self.0 {
            acc = acc.compose(&FreeAutomorphism::half_twist(rank, h.index, h.positive)?)?;
        }
        Ok(acc)
    }

    /// Where each hole ends up: `perm[i-1]` is the image position of hole `i`.
    pub fn permutation(&self, rank: usize) -> Vec<usize> {
        let mut perm: Vec<usize> = (1..=rank).collect();
        // Rightmost letter acts first.
        for h in self.0.iter().rev() {
            for p in perm.iter_mut() {
                if *p == h.index {
                    *p = h.index + 1;
                } else if *p == h.index + 1 {
                    *p = h.index;
                }
            }
        }
        perm
    }
}

impl fmt::Display for Braid {
    /// DSL form: `s1 s2inv ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, h) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{}{}", h.index, if h.positive { "" } else { "inv" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_twist_acts_as_contiguous_twist() {
        for rank in 1..=5 {
            for a in 1..=rank {
                for b in a..=rank {
                    let via_braid = Braid::full_twist(a, b).automorphism(rank).unwrap();
                    let direct = FreeAutomorphism::contiguous_twist(rank, a, b).unwrap();
                    assert_eq!(via_braid, direct, "rank {rank} block [{a},{b}]");
                }
            }
        }
    }

    #[test]
    fn free_reduction_and_inverse() {
        let b = Braid::new([HalfTwist::pos(1), HalfTwist::neg(1), HalfTwist::pos(2)]);
        assert_eq!(b.letters(), &[HalfTwist::pos(2)]);
        assert!(b.concat(&b.inverse()).is_empty());
        assert_eq!(
            b.pow(-2),
            Braid::new([HalfTwist::neg(2), HalfTwist::neg(2)])
        );
    }

    #[test]
    fn permutation_tracks_holes() {
        let b = Braid::new([HalfTwist::pos(1), HalfTwist::pos(2)]);
        // s2 first: 2<->3, then s1: 1<->2.
        assert_eq!(b.permutation(3), vec![2, 3, 1]);
    }

    #[test]
    fn display_uses_dsl_spelling() {
        let b = Braid::new([HalfTwist::pos(1), HalfTwist::neg(3)]);
        assert_eq!(b.to_string(), "s1 s3inv");
    }
}
