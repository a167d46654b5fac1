//! Invariants of the Lefschetz filling built from a planar page and a
//! multiset of vanishing cycles, recorded by their enclosed hole sets.
//!
//! Handle count: one 0-handle, `n` 1-handles and one 2-handle per factor.
//! The first homology is the cokernel of the `n x m` class matrix whose
//! columns are indicator vectors of the enclosed sets. The signature uses
//! the planar identity `sigma + chi = 1 - b1`.

use std::collections::BTreeMap;

use crate::enumerator::{enumerate_profiles, EnumOptions, EnumerationError, ProfileSolution};
use crate::factorization::{Factorization, MultiplicityProfile};
use crate::linalg::{IntMatrix, LinalgError};
use crate::mcg::HoleSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FillingInvariants {
    pub m: usize,
    pub chi: i64,
    pub b1: i64,
    /// Planar-model signature.
    pub sigma: i64,
    /// Smith divisors greater than 1 (torsion of H1).
    pub h1_torsion: Vec<i128>,
}

impl FillingInvariants {
    /// `H1 = Z^b1 ⊕ ⊕ Z/d`, formatted.
    pub fn h1_string(&self) -> String {
        let mut parts = Vec::new();
        if self.b1 > 0 {
            parts.push(if self.b1 == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.b1)
            });
        }
        parts.extend(self.h1_torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeographyPoint {
    pub sigma: i64,
    pub chi: i64,
}

/// The class matrix: row `i` is hole `i`, column `k` is the indicator of block `k`.
pub fn class_matrix(n: usize, blocks: &[HoleSet]) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, blocks.len());
    for (k, b) in blocks.iter().enumerate() {
        for h in b.iter().filter(|&h| h <= n) {
            m.set(h - 1, k, 1);
        }
    }
    m
}

pub fn filling_invariants(n: usize, blocks: &[HoleSet]) -> Result<FillingInvariants, LinalgError> {
    let cm = class_matrix(n, blocks);
    let rank = cm.rank()?;
    let m = blocks.len();
    let chi = 1 - n as i64 + m as i64;
    let b1 = (n - rank) as i64;
    let h1_torsion = cm
        .smith_divisors()?
        .into_iter()
        .filter(|&d| d > 1)
        .collect();
    Ok(FillingInvariants {
        m,
        chi,
        b1,
        sigma: 1 - b1 - chi,
        h1_torsion,
    })
}

/// Candidate geography points together with one invariant record per witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeographyCandidates {
    pub points: BTreeMap<GeographyPoint, Vec<(ProfileSolution, FillingInvariants)>>,
}

impl GeographyCandidates {
    pub fn point_set(&self) -> Vec<GeographyPoint> {
        self.points.keys().copied().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeographyError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Geography points over all profile solutions of a profile.
pub fn geography_of_profile(
    p: &MultiplicityProfile,
    opts: &EnumOptions,
) -> Result<GeographyCandidates, GeographyError> {
    let mut points: BTreeMap<GeographyPoint, Vec<_>> = BTreeMap::new();
    for sol in enumerate_profiles(p, opts)? {
        let inv = filling_invariants(p.rank(), sol.blocks())?;
        points
            .entry(GeographyPoint {
                sigma: inv.sigma,
                chi: inv.chi,
            })
            .or_default()
            .push((sol, inv));
    }
    Ok(GeographyCandidates { points })
}

/// A superset of the geography set of fillings of the monodromy of `f`.
pub fn geography_candidates(
    f: &Factorization,
    opts: &EnumOptions,
) -> Result<GeographyCandidates, GeographyError> {
    geography_of_profile(&f.profile(), opts)
}

/// `1 - n + Σ M_i`: an upper bound for the Euler characteristic of any filling.
pub fn euler_upper_bound(p: &MultiplicityProfile) -> i64 {
    1 - p.rank() as i64 + p.total()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(rank: usize, v: &[&[usize]]) -> Vec<HoleSet> {
        v.iter()
            .map(|s| HoleSet::from_holes(rank, s.iter().copied()).unwrap())
            .collect()
    }

    #[test]
    fn filling_examples() {
        let a = filling_invariants(3, &sets(3, &[&[1], &[2], &[3], &[1, 2, 3]])).unwrap();
        assert_eq!((a.m, a.chi, a.b1, a.sigma), (4, 2, 0, -1));
        assert!(a.h1_torsion.is_empty());
        let b = filling_invariants(3, &sets(3, &[&[1, 2], &[1, 3], &[2, 3]])).unwrap();
        assert_eq!((b.m, b.chi, b.b1, b.sigma), (3, 1, 0, 0));
        assert_eq!(b.h1_torsion, vec![2]);
        assert_eq!(b.h1_string(), "Z/2");
        let c = filling_invariants(2, &sets(2, &[&[1, 2]])).unwrap();
        assert_eq!((c.m, c.chi, c.b1, c.sigma), (1, 0, 1, 0));
    }

    #[test]
    fn boundary_geography() {
        let f = Factorization::from_blocks(3, &sets(3, &[&[1], &[2], &[3], &[1, 2, 3]])).unwrap();
        let g = geography_candidates(&f, &EnumOptions::default()).unwrap();
        assert_eq!(
            g.point_set(),
            vec![
                GeographyPoint { sigma: -1, chi: 2 },
                GeographyPoint { sigma: 0, chi: 1 }
            ]
        );
        let f = Factorization::from_blocks(4, &sets(4, &[&[1], &[2], &[3], &[4], &[1, 2, 3, 4]]))
            .unwrap();
        let g = geography_candidates(&f, &EnumOptions::default()).unwrap();
        assert_eq!(g.point_set(), vec![GeographyPoint { sigma: -1, chi: 2 }]);
    }

    #[test]
    fn identity_on_one_hole() {
        let f = Factorization::empty(1);
        let g = geography_candidates(&f, &EnumOptions::default()).unwrap();
        assert_eq!(g.point_set(), vec![GeographyPoint { sigma: 0, chi: 0 }]);
    }

    #[test]
    fn euler_bounds() {
        let p = MultiplicityProfile::from_blocks(3, &sets(3, &[&[1], &[2], &[3], &[1, 2, 3]]));
        assert_eq!(euler_upper_bound(&p), 4);
        assert_eq!(euler_upper_bound(&MultiplicityProfile::zero(2)), -1);
        let p = MultiplicityProfile::from_blocks(
            4,
            &sets(4, &[&[1], &[1], &[2], &[3], &[4], &[1, 2, 3, 4]]),
        );
        assert_eq!(euler_upper_bound(&p), 6);
    }

    #[test]
    fn zero_holes() {
        let inv = filling_invariants(0, &[]).unwrap();
        assert_eq!((inv.chi, inv.b1, inv.sigma), (1, 0, 0));
    }
}
