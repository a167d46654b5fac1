use std::fmt;

use crate::mcg::HoleSet;

/// Multiplicities `M_i` and joint multiplicities `M_ij` of a factorization.
///
/// `M_i` counts factors whose curve encloses hole `i`, `M_ij` those enclosing
/// both `i` and `j`, with negative twists counted negatively. Holes are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicityProfile {
    rank: usize,
    singles: Vec<i64>,
    /// Row-major `rank × rank`, symmetric; the diagonal repeats `singles`.
    joint: Vec<i64>,
}

impl MultiplicityProfile {
    pub fn zero(rank: usize) -> Self {
        MultiplicityProfile {
            rank,
            singles: vec![0; rank],
            joint: vec![0; rank * rank],
        }
    }

    /// Profile from explicit values; `joint[i][j]` for `i != j` is read from
    /// the upper triangle and mirrored.
    #[allow(clippy::needless_range_loop)]
    pub fn from_values(singles: Vec<i64>, joint: &[Vec<i64>]) -> Self {
        let rank = singles.len();
        let mut p = MultiplicityProfile::zero(rank);
        for i in 0..rank {
            p.joint[i * rank + i] = singles[i];
            for j in i + 1..rank {
                let v = joint[i][j];
                p.joint[i * rank + j] = v;
                p.joint[j * rank + i] = v;
            }
        }
        p.singles = singles;
        p
    }

    /// Independent counting pass over a multiset of enclosed sets.
    pub fn from_blocks(rank: usize, blocks: &[HoleSet]) -> Self {
        let mut p = MultiplicityProfile::zero(rank);
        for &b in blocks {
            p.add_block(b, 1);
        }
        p
    }

    pub(crate) fn add_block(&mut self, block: HoleSet, weight: i64) {
        let members = block.to_vec();
        for &i in &members {
            self.singles[i - 1] += weight;
            for &j in &members {
                self.joint[(i - 1) * self.rank + (j - 1)] += weight;
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn singles(&self) -> &[i64] {
        &self.singles
    }

    /// `M_i`, 1-based.
    pub fn multiplicity(&self, i: usize) -> i64 {
        self.singles[i - 1]
    }

    /// `M_ij`, 1-based; `joint(i, i) = M_i`.
    pub fn joint(&self, i: usize, j: usize) -> i64 {
        self.joint[(i - 1) * self.rank + (j - 1)]
    }

    /// `Σ_i M_i`.
    pub fn total(&self) -> i64 {
        self.singles.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.singles.iter().all(|&v| v == 0) && self.joint.iter().all(|&v| v == 0)
    }

    /// Nonnegative entries with `M_ij <= min(M_i, M_j)`: necessary for a
    /// positive factorization.
    pub fn is_consistent(&self) -> bool {
        (1..=self.rank).all(|i| {
            self.multiplicity(i) >= 0
                && (i + 1..=self.rank).all(|j| {
                    let v = self.joint(i, j);
                    v >= 0 && v <= self.multiplicity(i).min(self.multiplicity(j))
                })
        })
    }

    pub fn add(&self, other: &MultiplicityProfile) -> Self {
        assert_eq!(self.rank, other.rank, "profile ranks differ");
        MultiplicityProfile {
            rank: self.rank,
            singles: self
                .singles
                .iter()
                .zip(&other.singles)
                .map(|(a, b)| a + b)
                .collect(),
            joint: self
                .joint
                .iter()
                .zip(&other.joint)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// The profile with holes renamed: hole `i` becomes `perm[i-1]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.rank;
        let mut p = MultiplicityProfile::zero(n);
        for i in 1..=n {
            p.singles[perm[i - 1] - 1] = self.multiplicity(i);
            for j in 1..=n {
                p.joint[(perm[i - 1] - 1) * n + (perm[j - 1] - 1)] = self.joint(i, j);
            }
        }
        p
    }
}

impl fmt::Display for MultiplicityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M = {:?}; M_ij =", self.singles)?;
        let mut any = false;
        for i in 1..=self.rank {
            for j in i + 1..=self.rank {
                write!(f, " {i}{j}:{}", self.joint(i, j))?;
                any = true;
            }
        }
        if !any {
            f.write_str(" -")?;
        }
        Ok(())
    }
}
