//! Sphere plumbings, definiteness checks and the planar open book whose
//! page is a connected sum of disks along the plumbing tree.
//!
//! A vertex with row sum `s_i` contributes a sphere with `|s_i|` disks
//! removed; these are connect-summed along the edges. The first disk of the
//! outer vertex becomes the outer boundary of the page and every other disk
//! becomes a hole. Holes are numbered by a preorder walk from the outer
//! vertex, so each subtree owns an interval of holes.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::enumerator::{max_factor_count, EnumOptions, EnumerationError};
use crate::factorization::{Factorization, FactorizationError};
use crate::linalg::{IntMatrix, LinalgError};
use crate::mcg::{HoleSet, MAX_HOLES};

pub type VertexId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlumbingError {
    #[error("invalid plumbing graph: {0}")]
    InvalidGraph(String),
    #[error("plumbing graph has a cycle; the page would not be planar")]
    NonPlanarPage,
    #[error("vertex {vertex} has positive row sum {sum}")]
    RowSumViolation { vertex: VertexId, sum: i64 },
    #[error("every row sum is zero; the page has no boundary")]
    NoBoundary,
    #[error("intersection form is not negative definite")]
    NotNegativeDefinite,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("outer vertex {0} is unknown or has no boundary disk")]
    InvalidOuter(VertexId),
    #[error("page would need {0} holes, more than supported")]
    TooManyHoles(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Factorization(#[from] FactorizationError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlumbingGraph {
    vertices: Vec<(VertexId, i64)>,
    edges: Vec<(VertexId, VertexId)>,
    outer: Option<VertexId>,
}

impl PlumbingGraph {
    /// Validates ids, loops, duplicate edges and connectivity. Cycles are
    /// accepted here and rejected by the open book construction.
    pub fn new(
        vertices: Vec<(VertexId, i64)>,
        edges: Vec<(VertexId, VertexId)>,
    ) -> Result<Self, PlumbingError> {
        let invalid = |s: String| Err(PlumbingError::InvalidGraph(s));
        if vertices.is_empty() {
            return invalid("no vertices".into());
        }
        let mut ids = BTreeSet::new();
        for &(v, _) in &vertices {
            if !ids.insert(v) {
                return invalid(format!("duplicate vertex {v}"));
            }
        }
        let mut seen = BTreeSet::new();
        for &(a, b) in &edges {
            if a == b {
                return invalid(format!("self-loop at vertex {a}"));
            }
            for v in [a, b] {
                if !ids.contains(&v) {
                    return invalid(format!("edge mentions unknown vertex {v}"));
                }
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return invalid(format!("duplicate edge {a}-{b}"));
            }
        }
        let g = PlumbingGraph {
            vertices,
            edges,
            outer: None,
        };
        if g.components() != 1 {
            return invalid("graph is not connected".into());
        }
        Ok(g)
    }

    /// Chooses the outer vertex explicitly instead of the default.
    pub fn with_outer(mut self, outer: VertexId) -> Self {
        self.outer = Some(outer);
        self
    }

    pub fn vertices(&self) -> &[(VertexId, i64)] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn outer(&self) -> Option<VertexId> {
        self.outer
    }

    fn index_of(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&(id, _)| id == v)
    }

    fn neighbours(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    fn components(&self) -> usize {
        let mut seen = BTreeSet::new();
        let mut count = 0;
        for &(start, _) in &self.vertices {
            if seen.insert(start) {
                count += 1;
                let mut stack = vec![start];
                while let Some(v) = stack.pop() {
                    for w in self.neighbours(v) {
                        if seen.insert(w) {
                            stack.push(w);
                        }
                    }
                }
            }
        }
        count
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.vertices.len()
    }
}

/// `Q_ii` is the weight, `Q_ij = 1` for an edge, 0 otherwise; rows follow vertex order.
pub fn intersection_matrix(g: &PlumbingGraph) -> IntMatrix {
    let n = g.vertices.len();
    let mut q = IntMatrix::zeros(n, n);
    for (i, &(_, w)) in g.vertices.iter().enumerate() {
        q.set(i, i, w);
    }
    for &(a, b) in &g.edges {
        let (i, j) = (g.index_of(a).unwrap(), g.index_of(b).unwrap());
        q.set(i, j, 1);
        q.set(j, i, 1);
    }
    q
}

/// Sign test on leading principal minors: `(-1)^k D_k > 0` for all `k`.
pub fn is_negative_definite(q: &IntMatrix) -> Result<bool, PlumbingError> {
    if !q.is_symmetric() {
        return Err(PlumbingError::NotSymmetric);
    }
    let minors = q.leading_principal_minors()?;
    Ok(minors
        .iter()
        .enumerate()
        .all(|(k, &d)| if k % 2 == 0 { d < 0 } else { d > 0 }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSums {
    pub sums: Vec<i64>,
    pub all_nonpositive: bool,
}

pub fn row_sums(q: &IntMatrix) -> RowSums {
    let sums: Vec<i64> = (0..q.rows()).map(|i| q.row(i).iter().sum()).collect();
    let all_nonpositive = sums.iter().all(|&s| s <= 0);
    RowSums {
        sums,
        all_nonpositive,
    }
}

/// A boundary circle of the page: disk `disk` (1-based) removed from `vertex`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryLabel {
    pub vertex: VertexId,
    pub disk: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeckCurve {
    /// The edge, with the endpoint farther from the outer vertex second.
    pub edge: (VertexId, VertexId),
    pub enclosed: HoleSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PageModel {
    pub holes: usize,
    pub outer: BoundaryLabel,
    /// Entry `i` labels hole `i + 1`.
    pub hole_owner: Vec<BoundaryLabel>,
    pub neck_curves: Vec<NeckCurve>,
    /// One block per hole followed by the outer-parallel block.
    pub boundary_curves: Vec<HoleSet>,
    /// Total factor count, including twists about curves that bound a disk.
    pub k: usize,
    /// Twists about curves bounding a disk in the page; trivial, so left
    /// out of the factorization but counted in `k`.
    pub inessential: usize,
}

impl PageModel {
    /// The boundary circles on the inner side of a curve enclosing `set`.
    pub fn boundary_side(&self, set: HoleSet) -> BTreeSet<BoundaryLabel> {
        set.iter().map(|h| self.hole_owner[h - 1]).collect()
    }
}

fn checked_sums(g: &PlumbingGraph) -> Result<Vec<i64>, PlumbingError> {
    let rs = row_sums(&intersection_matrix(g));
    if let Some((i, &s)) = rs.sums.iter().enumerate().find(|(_, &s)| s > 0) {
        return Err(PlumbingError::RowSumViolation {
            vertex: g.vertices[i].0,
            sum: s,
        });
    }
    if rs.sums.iter().all(|&s| s == 0) {
        return Err(PlumbingError::NoBoundary);
    }
    Ok(rs.sums)
}

/// Builds the page and the factorization of the open book monodromy.
pub fn gay_mark_open_book(g: &PlumbingGraph) -> Result<(PageModel, Factorization), PlumbingError> {
    if !g.is_tree() {
        return Err(PlumbingError::NonPlanarPage);
    }
    let sums = checked_sums(g)?;
    if !is_negative_definite(&intersection_matrix(g))? {
        return Err(PlumbingError::NotNegativeDefinite);
    }
    let disks: BTreeMap<VertexId, usize> = g
        .vertices
        .iter()
        .zip(&sums)
        .map(|(&(v, _), &s)| (v, s.unsigned_abs() as usize))
        .collect();
    let outer_vertex = match g.outer {
        Some(v) if disks.get(&v).copied().unwrap_or(0) > 0 => v,
        Some(v) => return Err(PlumbingError::InvalidOuter(v)),
        None => g
            .vertices
            .iter()
            .map(|&(v, _)| v)
            .filter(|v| disks[v] > 0)
            .min()
            .unwrap(),
    };
    let total: usize = disks.values().sum();
    let h = total - 1;
    if h > MAX_HOLES {
        return Err(PlumbingError::TooManyHoles(h));
    }

    // Preorder walk; each vertex records the hole interval of its subtree.
    let mut hole_owner = Vec::with_capacity(h);
    let mut necks = Vec::new();
    let mut stack: Vec<(VertexId, Option<VertexId>, bool)> = vec![(outer_vertex, None, false)];
    let mut start: BTreeMap<VertexId, usize> = BTreeMap::new();
    while let Some((v, parent, finished)) = stack.pop() {
        if finished {
            let enclosed = HoleSet::from_bits(
                (start[&v]..hole_owner.len()).fold(0u64, |acc, i| acc | (1u64 << i)),
            );
            if let Some(p) = parent {
                necks.push(NeckCurve {
                    edge: (p, v),
                    enclosed,
                });
            }
            continue;
        }
        start.insert(v, hole_owner.len());
        let first = if v == outer_vertex { 2 } else { 1 };
        for disk in first..=disks[&v] {
            hole_owner.push(BoundaryLabel { vertex: v, disk });
        }
        stack.push((v, parent, true));
        let children: Vec<VertexId> = g
            .neighbours(v)
            .into_iter()
            .filter(|&w| Some(w) != parent)
            .collect();
        for &w in children.iter().rev() {
            stack.push((w, Some(v), false));
        }
    }
    necks.sort_by_key(|n| {
        (
            n.enclosed.min_hole(),
            std::cmp::Reverse(n.enclosed.len()),
            n.edge,
        )
    });

    let mut boundary_curves: Vec<HoleSet> = (1..=h).map(HoleSet::singleton).collect();
    boundary_curves.push(HoleSet::full(h));
    let k = total + g.edges.len();
    let mut blocks = Vec::with_capacity(k);
    blocks.extend(boundary_curves.iter().copied().filter(|b| !b.is_empty()));
    blocks.extend(necks.iter().map(|n| n.enclosed).filter(|b| !b.is_empty()));
    let inessential = k - blocks.len();
    let f = Factorization::from_blocks(h, &blocks)?;
    let page = PageModel {
        holes: h,
        outer: BoundaryLabel {
            vertex: outer_vertex,
            disk: 1,
        },
        hole_owner,
        neck_curves: necks,
        boundary_curves,
        k,
        inessential,
    };
    Ok((page, f))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiBoundReport {
    pub holes: usize,
    pub k: usize,
    pub chi_z: i64,
    pub max_m: usize,
    pub max_chi_x: i64,
    pub holds: bool,
}

/// Compares the largest profile-level factor count with `k`.
pub fn verify_chi_bound(
    g: &PlumbingGraph,
    opts: &EnumOptions,
) -> Result<ChiBoundReport, PlumbingError> {
    let (page, f) = gay_mark_open_book(g)?;
    let max_m = max_factor_count(&f.profile(), opts)?;
    let h = page.holes as i64;
    Ok(ChiBoundReport {
        holes: page.holes,
        k: page.k,
        chi_z: 1 - h + page.k as i64,
        max_m,
        max_chi_x: 1 - h + max_m as i64,
        holds: max_m <= page.k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(weights: &[i64]) -> PlumbingGraph {
        let vs = weights
            .iter()
            .enumerate()
            .map(|(i, &w)| (i as VertexId + 1, w))
            .collect();
        let es = (1..weights.len() as VertexId).map(|i| (i, i + 1)).collect();
        PlumbingGraph::new(vs, es).unwrap()
    }

    fn star() -> PlumbingGraph {
        PlumbingGraph::new(
            vec![(1, -3), (2, -2), (3, -2), (4, -2)],
            vec![(1, 2), (1, 3), (1, 4)],
        )
        .unwrap()
    }

    fn rows(q: &IntMatrix) -> Vec<Vec<i64>> {
        (0..q.rows()).map(|i| q.row(i).to_vec()).collect()
    }

    #[test]
    fn matrices() {
        assert_eq!(rows(&intersection_matrix(&chain(&[-4]))), vec![vec![-4]]);
        assert_eq!(
            rows(&intersection_matrix(&chain(&[-2, -2]))),
            vec![vec![-2, 1], vec![1, -2]]
        );
        assert_eq!(rows(&intersection_matrix(&star()))[0], vec![-3, 1, 1, 1]);
    }

    #[test]
    fn definiteness_and_sums() {
        let q = intersection_matrix(&chain(&[-2, -2]));
        assert!(is_negative_definite(&q).unwrap());
        assert_eq!(row_sums(&q).sums, vec![-1, -1]);
        let bad = IntMatrix::from_rows(2, &[vec![-1, 1], vec![1, -1]]).unwrap();
        assert!(!is_negative_definite(&bad).unwrap());
        let rs = row_sums(&bad);
        assert_eq!(rs.sums, vec![0, 0]);
        assert!(rs.all_nonpositive);
        assert!(is_negative_definite(&intersection_matrix(&chain(&[-4]))).unwrap());
        let asym = IntMatrix::from_rows(2, &[vec![-2, 1], vec![0, -2]]).unwrap();
        assert_eq!(
            is_negative_definite(&asym),
            Err(PlumbingError::NotSymmetric)
        );
    }

    #[test]
    fn single_vertex_pages() {
        for p in 3..=6i64 {
            let (page, f) = gay_mark_open_book(&chain(&[-p])).unwrap();
            let n = (p - 1) as usize;
            assert_eq!(page.holes, n);
            assert_eq!(page.k, p as usize);
            let mut want: Vec<HoleSet> = (1..=n).map(HoleSet::singleton).collect();
            want.push(HoleSet::full(n));
            assert_eq!(f.enclosed_multiset(), {
                want.sort();
                want
            });
        }
    }

    #[test]
    fn chain_page_is_annulus() {
        let (page, f) = gay_mark_open_book(&chain(&[-2, -2])).unwrap();
        assert_eq!(page.holes, 1);
        assert_eq!(page.k, 3);
        assert_eq!(f.enclosed_multiset(), vec![HoleSet::singleton(1); 3]);
    }

    #[test]
    fn star_page() {
        let (page, f) = gay_mark_open_book(&star()).unwrap();
        assert_eq!(page.holes, 2);
        assert_eq!(page.k, 6);
        assert_eq!(page.outer.vertex, 2);
        // Necks toward the center and the far leaves; none is empty.
        assert_eq!(page.inessential, 0);
        assert_eq!(f.len(), 6);
        let r = verify_chi_bound(&star(), &EnumOptions::default()).unwrap();
        assert_eq!((r.chi_z, r.k), (5, 6));
        assert!(r.holds);
        assert_eq!(r.chi_z - r.max_chi_x, (r.k - r.max_m) as i64);
    }

    #[test]
    fn chi_bound_examples() {
        let r = verify_chi_bound(&chain(&[-4]), &EnumOptions::default()).unwrap();
        assert_eq!(
            (r.k, r.max_m, r.chi_z, r.max_chi_x, r.holds),
            (4, 4, 2, 2, true)
        );
        let r = verify_chi_bound(&chain(&[-2, -2]), &EnumOptions::default()).unwrap();
        assert_eq!((r.k, r.max_m, r.holds), (3, 3, true));
    }

    #[test]
    fn necks_nested_or_disjoint() {
        let g = PlumbingGraph::new(
            vec![(1, -3), (2, -4), (3, -3), (4, -2), (5, -2)],
            vec![(1, 2), (2, 3), (3, 4), (2, 5)],
        )
        .unwrap();
        let (page, _) = gay_mark_open_book(&g).unwrap();
        for a in &page.neck_curves {
            for b in &page.neck_curves {
                let (x, y) = (a.enclosed, b.enclosed);
                assert!(x.is_subset(y) || y.is_subset(x) || x.is_disjoint(y));
            }
            assert!(a.enclosed.is_empty() || a.enclosed.is_interval());
        }
    }

    #[test]
    fn inessential_curves_counted() {
        let (page, f) = gay_mark_open_book(&chain(&[-1])).unwrap();
        assert_eq!(
            (page.holes, page.k, page.inessential, f.len(), f.rank()),
            (0, 1, 1, 0, 0)
        );
        // A zero-sum leaf owns no holes, so its neck bounds a disk.
        let (page, f) = gay_mark_open_book(&chain(&[-3, -1])).unwrap();
        assert_eq!(
            (page.holes, page.k, page.inessential, f.len()),
            (1, 3, 1, 2)
        );
        // A zero-sum middle vertex: both necks are parallel to the far hole.
        let (page, f) = gay_mark_open_book(&chain(&[-2, -2, -2])).unwrap();
        assert_eq!((page.holes, page.k, page.inessential), (1, 4, 0));
        assert_eq!(f.enclosed_multiset(), vec![HoleSet::singleton(1); 4]);
    }

    #[test]
    fn errors() {
        let tri = PlumbingGraph::new(
            vec![(1, -3), (2, -3), (3, -3)],
            vec![(1, 2), (2, 3), (1, 3)],
        )
        .unwrap();
        assert_eq!(
            gay_mark_open_book(&tri).unwrap_err(),
            PlumbingError::NonPlanarPage
        );
        assert_eq!(
            gay_mark_open_book(&chain(&[-1, -1])).unwrap_err(),
            PlumbingError::NoBoundary
        );
        assert_eq!(
            gay_mark_open_book(&chain(&[-1, -1, -1])).unwrap_err(),
            PlumbingError::RowSumViolation { vertex: 2, sum: 1 }
        );
        assert!(matches!(
            PlumbingGraph::new(vec![(1, -2), (2, -2)], vec![]),
            Err(PlumbingError::InvalidGraph(_))
        ));
        assert!(matches!(
            PlumbingGraph::new(vec![(1, -2), (2, -2)], vec![(1, 2), (2, 1)]),
            Err(PlumbingError::InvalidGraph(_))
        ));
        assert!(matches!(
            PlumbingGraph::new(vec![(1, -2)], vec![(1, 1)]),
            Err(PlumbingError::InvalidGraph(_))
        ));
        let g = chain(&[-2, -2, -2]).with_outer(2);
        assert_eq!(
            gay_mark_open_book(&g).unwrap_err(),
            PlumbingError::InvalidOuter(2)
        );
    }

    #[test]
    fn outer_override_keeps_boundary_splits() {
        let g = chain(&[-3, -2]);
        let splits = |g: &PlumbingGraph| {
            let (page, f) = gay_mark_open_book(g).unwrap();
            let all: BTreeSet<BoundaryLabel> = page
                .hole_owner
                .iter()
                .copied()
                .chain([page.outer])
                .collect();
            let mut out: Vec<BTreeSet<BTreeSet<BoundaryLabel>>> = f
                .enclosed_multiset()
                .into_iter()
                .map(|b| {
                    let inside = page.boundary_side(b);
                    let outside = all.difference(&inside).copied().collect();
                    [inside, outside].into_iter().collect()
                })
                .collect();
            out.sort();
            (page.k, out)
        };
        assert_eq!(splits(&g), splits(&g.clone().with_outer(2)));
        let (_, a) = gay_mark_open_book(&g).unwrap();
        let (_, b) = gay_mark_open_book(&g.with_outer(2)).unwrap();
        assert_ne!(a.profile().singles(), b.profile().singles());
    }
}
