use std::cmp::Ordering;
use std::fmt;

use super::McgError;

/// Largest supported number of holes.
pub const MAX_HOLES: usize = 63;

/// A set of holes of `D_n`, as a bitmask (bit `i-1` is hole `i`).
///
/// Ordering is the canonical block order: by size, then lexicographically by
/// the ascending element list.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct HoleSet(u64);

impl HoleSet {
    pub const EMPTY: HoleSet = HoleSet(0);

    pub fn from_bits(bits: u64) -> HoleSet {
        HoleSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(hole: usize) -> HoleSet {
        debug_assert!((1..=MAX_HOLES).contains(&hole));
        HoleSet(1 << (hole - 1))
    }

    /// `{a, a+1, ..., b}`; empty when `a > b`.
    pub fn interval(a: usize, b: usize) -> HoleSet {
        (a..=b).fold(HoleSet::EMPTY, |s, i| s.with(i))
    }

    pub fn full(rank: usize) -> HoleSet {
        HoleSet::interval(1, rank)
    }

    /// Builds a set from hole indices, checking each lies in `1..=rank`.
    pub fn from_holes<I: IntoIterator<Item = usize>>(
        rank: usize,
        holes: I,
    ) -> Result<HoleSet, McgError> {
        let mut s = HoleSet::EMPTY;
        for h in holes {
            if h == 0 || h > rank || h > MAX_HOLES {
                return Err(McgError::HoleOutOfRange { hole: h, rank });
            }
            s = s.with(h);
        }
        Ok(s)
    }

    pub fn with(self, hole: usize) -> HoleSet {
        HoleSet(self.0 | 1 << (hole - 1))
    }

    pub fn contains(self, hole: usize) -> bool {
        (1..=MAX_HOLES).contains(&hole) && self.0 >> (hole - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: HoleSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: HoleSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min_hole(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max_hole(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..=MAX_HOLES).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Whether the holes form one run `{a..b}`.
    pub fn is_interval(self) -> bool {
        match (self.min_hole(), self.max_hole()) {
            (Some(a), Some(b)) => b - a + 1 == self.len(),
            _ => false,
        }
    }

    /// Indicator vector of length `rank`.
    pub fn indicator(self, rank: usize) -> Vec<i64> {
        (1..=rank).map(|i| self.contains(i) as i64).collect()
    }

    /// All nonempty subsets of `{1..rank}` in canonical order.
    pub fn all_nonempty(rank: usize) -> Vec<HoleSet> {
        assert!(rank <= 30, "subset enumeration limited to 30 holes");
        let mut v: Vec<HoleSet> = (1u64..(1u64 << rank)).map(HoleSet).collect();
        v.sort();
        v
    }
}

impl Ord for HoleSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            // Lexicographic on ascending element lists: the set whose first
            // differing element is smaller comes first.
            let diff = self.0 ^ other.0;
            if diff == 0 {
                return Ordering::Equal;
            }
            let low = diff & diff.wrapping_neg();
            if self.0 & low != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for HoleSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for HoleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, h) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{h}")?;
        }
        f.write_str("}")
    }
}
