//! Lantern relation representatives on `D_3` and the bounded search that
//! produces them.

use super::{Braid, Curve, HalfTwist, HoleSet, MappingClass, McgError};

/// All freely reduced half-twist words of length `<= max_len` over
/// `s_1..s_{rank-1}`, by length then in lexicographic letter order.
pub fn reduced_braid_words(rank: usize, max_len: usize) -> Vec<Braid> {
    let alphabet: Vec<HalfTwist> = (1..rank)
        .flat_map(|j| [HalfTwist::pos(j), HalfTwist::neg(j)])
        .collect();
    let mut layer: Vec<Vec<HalfTwist>> = vec![Vec::new()];
    let mut out = vec![Braid::identity()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &h in &alphabet {
                if w.last() == Some(&h.inverse()) {
                    continue;
                }
                let mut v = w.clone();
                v.push(h);
                out.push(Braid::new(v.iter().copied()));
                next.push(v);
            }
        }
        layer = next;
    }
    out
}

/// Distinct curves enclosing `set`, obtained as conjugates of
/// `Curve::canonical(rank, set)` by words of length `<= max_len`, in search order.
pub fn conjugate_family(rank: usize, set: HoleSet, max_len: usize) -> Result<Vec<Curve>, McgError> {
    let base = Curve::canonical(rank, set)?;
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for g in reduced_braid_words(rank, max_len) {
        let c = base.conjugate_by(&g)?;
        if c.enclosed_set() == set && seen.insert(c.clone()) {
            out.push(c);
        }
    }
    Ok(out)
}

/// `τ_{b_1} τ_{b_2} ... τ_{b_n} τ_{b_{n+1}}` on `D_n`.
pub fn boundary_product(rank: usize) -> Result<MappingClass, McgError> {
    let mut acc = MappingClass::identity(rank);
    for i in 1..=rank {
        acc = acc.product(Curve::hole(rank, i)?.positive_twist())?;
    }
    acc.product(Curve::outer(rank)?.positive_twist())
}

/// Given `first` and `second`, finds the first curve in the conjugate family of
/// `third_class` with `τ_first τ_second τ_third = target`.
pub fn complete_relation(
    first: &Curve,
    second: &Curve,
    third_class: HoleSet,
    target: &MappingClass,
    max_len: usize,
) -> Result<Option<Curve>, McgError> {
    let rank = first.rank();
    let head = first.positive_twist().product(second.positive_twist())?;
    for c in conjugate_family(rank, third_class, max_len)? {
        if head.product(c.positive_twist())? == *target {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub struct LanternTriple {
    pub alpha: Curve,
    pub beta: Curve,
    pub gamma: Curve,
}

impl LanternTriple {
    /// `τ_α τ_β τ_γ`.
    pub fn product(&self) -> MappingClass {
        self.alpha
            .positive_twist()
            .product(self.beta.positive_twist())
            .and_then(|p| p.product(self.gamma.positive_twist()))
            .expect("triple curves share a rank")
    }

    pub fn holds(&self) -> bool {
        boundary_product(self.alpha.rank())
            .map(|b| b == self.product())
            .unwrap_or(false)
    }
}

#[derive(Clone, Debug)]
pub struct LanternSearch {
    pub triple: Option<LanternTriple>,
    /// Number of `(β, γ)` candidate pairs tested.
    pub pairs_tested: usize,
}

/// Bounded search on `D_3`: `α = C({1,2})` fixed, `β` and `γ` range over
/// conjugates of `C({1,3})` and `C({2,3})` by words of length `<= max_len`.
pub fn search_lantern(max_len: usize) -> Result<LanternSearch, McgError> {
    let rank = 3;
    let target = boundary_product(rank)?;
    let alpha = Curve::canonical(rank, HoleSet::interval(1, 2))?;
    let betas = conjugate_family(rank, HoleSet::from_holes(rank, [1, 3])?, max_len)?;
    let gammas = conjugate_family(rank, HoleSet::interval(2, 3), max_len)?;
    let mut pairs_tested = 0;
    for beta in &betas {
        let head = alpha.positive_twist().product(beta.positive_twist())?;
        for gamma in &gammas {
            pairs_tested += 1;
            if head.product(gamma.positive_twist())? == target {
                let triple = LanternTriple {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    gamma: gamma.clone(),
                };
                return Ok(LanternSearch {
                    triple: Some(triple),
                    pairs_tested,
                });
            }
        }
    }
    Ok(LanternSearch {
        triple: None,
        pairs_tested,
    })
}

/// Word-length bound for the representative searches.
pub const SEARCH_MAX_LEN: usize = 4;

/// The lantern triple found by `search_lantern(SEARCH_MAX_LEN)`: the first
/// candidate pair already closes the relation, so all three are the canonical
/// curves `C({1,2})`, `C({1,3})`, `C({2,3})`.
pub fn frozen_lantern() -> LanternTriple {
    let rank = 3;
    let c = |holes: &[usize]| {
        Curve::canonical(
            rank,
            HoleSet::from_holes(rank, holes.iter().copied()).expect("valid holes"),
        )
        .expect("valid curve")
    };
    LanternTriple {
        alpha: c(&[1, 2]),
        beta: c(&[1, 3]),
        gamma: c(&[2, 3]),
    }
}

/// Curve `d` enclosing holes 1 and 3 with `τ_a τ_b τ_d = τ_{b_1} τ_{b_2} τ_{b_3} τ_γ`
/// for `a = C({1,2})`, `b = C({2,3})`, `γ = C({1,2,3})`, on `D_rank`, `rank >= 3`.
///
/// Found by `complete_relation` over conjugates of `C({1,3})` on `D_3`; it is
/// `s1 s1 s2 · C[1,2]`, i.e. the image of `C({1,3})` under `τ_{C({1,2})}`.
pub fn third_lantern_curve(rank: usize) -> Result<Curve, McgError> {
    Curve::new(
        rank,
        Braid::new([HalfTwist::pos(1), HalfTwist::pos(1), HalfTwist::pos(2)]),
        1,
        2,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn search_reproduces_frozen_triple() {
        let found = search_lantern(SEARCH_MAX_LEN).unwrap();
        let triple = found.triple.expect("search must succeed within the bound");
        let frozen = frozen_lantern();
        assert!(triple.alpha.same_presentation(&frozen.alpha));
        assert!(triple.beta.same_presentation(&frozen.beta));
        assert!(triple.gamma.same_presentation(&frozen.gamma));
        assert!(frozen.holds());
    }

    #[test]
    fn third_curve_matches_search() {
        let a = Curve::canonical(3, HoleSet::interval(1, 2)).unwrap();
        let b = Curve::canonical(3, HoleSet::interval(2, 3)).unwrap();
        let target = boundary_product(3).unwrap();
        let class13 = HoleSet::from_holes(3, [1, 3]).unwrap();
        let d = complete_relation(&a, &b, class13, &target, SEARCH_MAX_LEN)
            .unwrap()
            .unwrap();
        let frozen = third_lantern_curve(3).unwrap();
        assert!(d.same_presentation(&frozen));
        assert_eq!(frozen.enclosed_set(), class13);
        let via_twist = frozen_lantern()
            .beta
            .conjugate_by(&a.twist_braid(1))
            .unwrap();
        assert_eq!(via_twist, frozen);
    }

    #[test]
    fn wrong_cyclic_order_fails() {
        let t = frozen_lantern();
        let swapped = t
            .beta
            .positive_twist()
            .product(t.alpha.positive_twist())
            .unwrap();
        let swapped = swapped.product(t.gamma.positive_twist()).unwrap();
        assert_ne!(swapped, boundary_product(3).unwrap());
    }

    #[test]
    fn word_enumeration_counts() {
        // 1 + 4 + 4*3 + 4*9 + 4*27 reduced words over {s1, s1inv, s2, s2inv}.
        assert_eq!(reduced_braid_words(3, 4).len(), 161);
    }
}
