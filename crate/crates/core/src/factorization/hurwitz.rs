use std::collections::{HashMap, VecDeque};

use super::{Direction, Factorization, FactorizationError};

/// A single Hurwitz move: 0-based position and direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub position: usize,
    pub direction: Direction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inequivalence {
    ProductsDiffer,
    /// Moves preserve the multiset of enclosed hole sets.
    EnclosedSetsDiffer,
    /// Moves preserve the multiset of twist signs.
    SignsDiffer,
    /// The whole (finite) orbit was visited without meeting the target.
    OrbitExhausted {
        size: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HurwitzVerdict {
    /// Applying `path` to the first factorization yields the second.
    Equivalent { path: Vec<Move> },
    /// Certified by an invariant that moves preserve.
    NotEquivalent(Inequivalence),
    /// Budget spent without reaching the target; says nothing either way.
    NotFound { explored: usize },
}

fn signs(f: &Factorization) -> Vec<i8> {
    let mut v: Vec<i8> = f.factors().iter().map(|t| t.sign).collect();
    v.sort();
    v
}

/// Breadth-first search over single Hurwitz moves from `from`, looking for
/// `to` up to curve isotopy, visiting at most `budget` factorizations.
pub fn hurwitz_orbit_search(
    from: &Factorization,
    to: &Factorization,
    budget: usize,
) -> Result<HurwitzVerdict, FactorizationError> {
    if budget == 0 {
        return Err(FactorizationError::InvalidBudget);
    }
    if from.rank() != to.rank() {
        return Err(crate::mcg::McgError::RankMismatch {
            left: from.rank(),
            right: to.rank(),
        }
        .into());
    }
    if from.enclosed_multiset() != to.enclosed_multiset() {
        return Ok(HurwitzVerdict::NotEquivalent(
            Inequivalence::EnclosedSetsDiffer,
        ));
    }
    if signs(from) != signs(to) {
        return Ok(HurwitzVerdict::NotEquivalent(Inequivalence::SignsDiffer));
    }
    if from.product() != to.product() {
        return Ok(HurwitzVerdict::NotEquivalent(Inequivalence::ProductsDiffer));
    }

    if *from == *to {
        return Ok(HurwitzVerdict::Equivalent { path: Vec::new() });
    }

    // Node table: factorization, parent index, move from parent.
    let mut nodes: Vec<(Factorization, usize, Option<Move>)> = vec![(from.clone(), 0, None)];
    let mut index: HashMap<Factorization, usize> = HashMap::new();
    index.insert(from.clone(), 0);
    let mut queue = VecDeque::from([0usize]);

    let path_to = |nodes: &Vec<(Factorization, usize, Option<Move>)>, mut at: usize| {
        let mut path = Vec::new();
        while let Some(m) = nodes[at].2 {
            path.push(m);
            at = nodes[at].1;
        }
        path.reverse();
        path
    };

    while let Some(at) = queue.pop_front() {
        for position in 0..from.len().saturating_sub(1) {
            for direction in [Direction::Right, Direction::Left] {
                let next = nodes[at].0.hurwitz_move(position, direction)?;
                if index.contains_key(&next) {
                    continue;
                }
                let id = nodes.len();
                let hit = next == *to;
                index.insert(next.clone(), id);
                nodes.push((
                    next,
                    at,
                    Some(Move {
                        position,
                        direction,
                    }),
                ));
                if hit {
                    return Ok(HurwitzVerdict::Equivalent {
                        path: path_to(&nodes, id),
                    });
                }
                if nodes.len() >= budget {
                    return Ok(HurwitzVerdict::NotFound {
                        explored: nodes.len(),
                    });
                }
                queue.push_back(id);
            }
        }
    }
    Ok(HurwitzVerdict::NotEquivalent(
        Inequivalence::OrbitExhausted { size: nodes.len() },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mcg::HoleSet;

    fn blocks(rank: usize, sets: &[&[usize]]) -> Factorization {
        let b: Vec<HoleSet> = sets
            .iter()
            .map(|s| HoleSet::from_holes(rank, s.iter().copied()).unwrap())
            .collect();
        Factorization::from_blocks(rank, &b).unwrap()
    }

    #[test]
    fn identical_factorizations_need_no_moves() {
        let f = blocks(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(
            hurwitz_orbit_search(&f, &f, 1).unwrap(),
            HurwitzVerdict::Equivalent { path: vec![] }
        );
    }

    #[test]
    fn single_move_is_found_and_replays() {
        let f = blocks(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let g = f.hurwitz_move(0, Direction::Right).unwrap();
        match hurwitz_orbit_search(&f, &g, 10).unwrap() {
            HurwitzVerdict::Equivalent { path } => {
                let mut h = f.clone();
                for m in &path {
                    h = h.hurwitz_move(m.position, m.direction).unwrap();
                }
                assert_eq!(h, g);
                assert!(path.len() <= 1);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn boundary_and_lantern_are_certified_inequivalent() {
        let boundary = blocks(3, &[&[1], &[2], &[3], &[1, 2, 3]]);
        let lantern = blocks(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(boundary.product(), lantern.product());
        for budget in [1, 10, 1000] {
            let v = hurwitz_orbit_search(&boundary, &lantern, budget).unwrap();
            assert!(matches!(
                v,
                HurwitzVerdict::NotEquivalent(Inequivalence::EnclosedSetsDiffer)
            ));
        }
    }

    #[test]
    fn commuting_orbit_is_exhausted() {
        let f = blocks(3, &[&[1], &[2], &[3]]);
        let g = blocks(3, &[&[3], &[1], &[2]]);
        assert!(matches!(
            hurwitz_orbit_search(&f, &g, 100).unwrap(),
            HurwitzVerdict::Equivalent { .. }
        ));
        let h = blocks(3, &[&[1], &[1], &[3]]);
        assert!(matches!(
            hurwitz_orbit_search(&f, &h, 100).unwrap(),
            HurwitzVerdict::NotEquivalent(Inequivalence::EnclosedSetsDiffer)
        ));
    }

    #[test]
    fn zero_budget_is_an_error() {
        let f = blocks(2, &[&[1]]);
        assert_eq!(
            hurwitz_orbit_search(&f, &f, 0),
            Err(FactorizationError::InvalidBudget)
        );
    }
}
