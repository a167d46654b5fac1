//! Exhaustive search for multisets of enclosed hole sets ("profile classes")
//! realizing given multiplicities `M_i` and joint multiplicities `M_ij`.
//!
//! Any positive factorization with the given profile has its multiset of
//! enclosed sets among the solutions; the converse need not hold, so results
//! are necessary conditions only.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::factorization::MultiplicityProfile;
use crate::mcg::HoleSet;

pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

/// Largest rank the enumerator accepts (it walks all `2^n - 1` subsets).
pub const MAX_ENUM_RANK: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("search budget of {limit} nodes exhausted after {} partial solutions", partial.len())]
    BudgetExceeded {
        limit: u64,
        partial: Vec<ProfileSolution>,
    },
    #[error("profile has a negative entry")]
    NegativeProfile,
    #[error("profile is inconsistent: some M_ij exceeds min(M_i, M_j)")]
    InconsistentProfile,
    #[error("rank {0} is too large to enumerate")]
    RankTooLarge(usize),
    #[error("invalid options: {0}")]
    InvalidOptions(String),
}

/// A multiset of nonempty hole sets, stored in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProfileSolution {
    rank: usize,
    blocks: Vec<HoleSet>,
}

impl ProfileSolution {
    pub fn new(rank: usize, mut blocks: Vec<HoleSet>) -> Self {
        blocks.sort();
        ProfileSolution { rank, blocks }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn blocks(&self) -> &[HoleSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn count(&self, block: HoleSet) -> usize {
        self.blocks.iter().filter(|&&b| b == block).count()
    }

    /// Recounts the profile from the blocks.
    pub fn profile(&self) -> MultiplicityProfile {
        MultiplicityProfile::from_blocks(self.rank, &self.blocks)
    }
}

impl fmt::Display for ProfileSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Debug)]
pub struct EnumOptions {
    pub max_factors: Option<usize>,
    /// Each listed block must occur at least as often as it is listed.
    pub required_blocks: Vec<HoleSet>,
    /// Listed blocks may not occur.
    pub forbidden_blocks: Vec<HoleSet>,
    pub node_limit: u64,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            max_factors: None,
            required_blocks: Vec::new(),
            forbidden_blocks: Vec::new(),
            node_limit: DEFAULT_NODE_LIMIT,
        }
    }
}

impl EnumOptions {
    pub fn with_node_limit(node_limit: u64) -> Self {
        EnumOptions {
            node_limit,
            ..Default::default()
        }
    }
}

struct Search<'a> {
    n: usize,
    /// Candidate blocks, largest first.
    cands: Vec<HoleSet>,
    lower: Vec<i64>,
    upper: Vec<i64>,
    /// Residual `M_i` (index `i`), `M_ij` (index `n + pair`), then
    /// `M_i - M_ij` for ordered `i != j` (blocks with `i` but not `j`).
    residual: Vec<i64>,
    /// For each candidate, residual slots it consumes.
    slots: Vec<Vec<usize>>,
    /// Slots whose last covering candidate is this index.
    closes: Vec<Vec<usize>>,
    /// Slots covered by no candidate at all.
    never: Vec<usize>,
    counts: Vec<i64>,
    total: i64,
    max_factors: i64,
    nodes: u64,
    limit: u64,
    out: &'a mut Vec<ProfileSolution>,
}

#[derive(Debug)]
struct OutOfBudget;

impl Search<'_> {
    fn capacity(&self, k: usize) -> i64 {
        self.slots[k]
            .iter()
            .map(|&s| self.residual[s])
            .min()
            .unwrap_or(0)
    }

    fn apply(&mut self, k: usize, c: i64) {
        for &s in &self.slots[k] {
            self.residual[s] -= c;
        }
        self.counts[k] += c;
        self.total += c;
    }

    fn run(&mut self, k: usize) -> Result<(), OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(OutOfBudget);
        }
        if k == self.cands.len() {
            self.emit();
            return Ok(());
        }
        let hi = self
            .capacity(k)
            .min(self.upper[k])
            .min(self.max_factors - self.total);
        let lo = self.lower[k];
        let mut c = hi;
        while c >= lo {
            self.apply(k, c);
            if self.closes[k].iter().all(|&s| self.residual[s] == 0) {
                self.run(k + 1)?;
            }
            self.apply(k, -c);
            c -= 1;
        }
        Ok(())
    }

    fn emit(&mut self) {
        let mut blocks = Vec::with_capacity(self.total as usize);
        for (k, &c) in self.counts.iter().enumerate() {
            blocks.extend(std::iter::repeat_n(self.cands[k], c as usize));
        }
        self.out.push(ProfileSolution::new(self.n, blocks));
    }
}

fn pair_slot(n: usize, i: usize, j: usize) -> usize {
    // 0-based i < j, packed after the n single slots.
    n + i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn diff_slot(base: usize, n: usize, i: usize, j: usize) -> usize {
    base + i * n + j
}

/// All multisets of nonempty subsets of `{1..n}` whose counting profile is `p`,
/// in canonical order without duplicates.
pub fn enumerate_profiles(
    p: &MultiplicityProfile,
    opts: &EnumOptions,
) -> Result<Vec<ProfileSolution>, EnumerationError> {
    let n = p.rank();
    if n > MAX_ENUM_RANK {
        return Err(EnumerationError::RankTooLarge(n));
    }
    if opts.node_limit == 0 {
        return Err(EnumerationError::InvalidOptions(
            "node limit must be positive".into(),
        ));
    }
    for b in opts.required_blocks.iter().chain(&opts.forbidden_blocks) {
        if b.is_empty() || b.max_hole().unwrap_or(0) > n {
            return Err(EnumerationError::InvalidOptions(format!(
                "block {b} is not a nonempty subset of 1..={n}"
            )));
        }
    }

    let base = n + n * n.saturating_sub(1) / 2;
    let slots_total = base + n * n;
    let mut residual = vec![0i64; slots_total];
    for i in 0..n {
        residual[i] = p.multiplicity(i + 1);
        for j in i + 1..n {
            residual[pair_slot(n, i, j)] = p.joint(i + 1, j + 1);
        }
    }
    if residual.iter().any(|&v| v < 0) {
        return Err(EnumerationError::NegativeProfile);
    }
    if !p.is_consistent() {
        return Err(EnumerationError::InconsistentProfile);
    }
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            residual[diff_slot(base, n, i, j)] = p.multiplicity(i + 1) - p.joint(i + 1, j + 1);
        }
    }

    // Grouped by largest hole, so the slots of hole `n` close first, then
    // those of `n - 1`, and so on.
    let mut cands = if n == 0 {
        Vec::new()
    } else {
        HoleSet::all_nonempty(n)
    };
    cands.sort_by_key(|b| std::cmp::Reverse(b.bits()));

    let mut required: BTreeMap<HoleSet, i64> = BTreeMap::new();
    for &b in &opts.required_blocks {
        *required.entry(b).or_default() += 1;
    }
    let lower: Vec<i64> = cands
        .iter()
        .map(|b| required.get(b).copied().unwrap_or(0))
        .collect();
    let upper: Vec<i64> = cands
        .iter()
        .map(|b| {
            if opts.forbidden_blocks.contains(b) {
                0
            } else {
                i64::MAX
            }
        })
        .collect();

    let slots: Vec<Vec<usize>> = cands
        .iter()
        .map(|b| {
            let m: Vec<usize> = b.iter().map(|h| h - 1).collect();
            let mut s = m.clone();
            for (x, &i) in m.iter().enumerate() {
                for &j in &m[x + 1..] {
                    s.push(pair_slot(n, i, j));
                }
                for j in (0..n).filter(|&j| !b.contains(j + 1)) {
                    s.push(diff_slot(base, n, i, j));
                }
            }
            s
        })
        .collect();
    let mut last = vec![None; slots_total];
    for (k, ss) in slots.iter().enumerate() {
        for &s in ss {
            last[s] = Some(k);
        }
    }
    let mut closes = vec![Vec::new(); cands.len()];
    let mut never = Vec::new();
    for (s, l) in last.into_iter().enumerate() {
        match l {
            Some(k) => closes[k].push(s),
            None => never.push(s),
        }
    }

    let mut out = Vec::new();
    let max_factors = opts.max_factors.map(|m| m as i64).unwrap_or(i64::MAX);
    let mut search = Search {
        n,
        counts: vec![0; cands.len()],
        cands,
        lower,
        upper,
        residual,
        slots,
        closes,
        never,
        total: 0,
        max_factors,
        nodes: 0,
        limit: opts.node_limit,
        out: &mut out,
    };
    let outcome = if search.never.iter().all(|&s| search.residual[s] == 0) {
        search.run(0)
    } else {
        Ok(())
    };
    out.sort();
    match outcome {
        Ok(()) => Ok(out),
        Err(OutOfBudget) => Err(EnumerationError::BudgetExceeded {
            limit: opts.node_limit,
            partial: out,
        }),
    }
}

/// Largest number of blocks over all solutions; 0 when there are none.
pub fn max_factor_count(
    p: &MultiplicityProfile,
    opts: &EnumOptions,
) -> Result<usize, EnumerationError> {
    Ok(enumerate_profiles(p, opts)?
        .iter()
        .map(ProfileSolution::len)
        .max()
        .unwrap_or(0))
}

/// Whether every solution has at most `Σ_i M_i` blocks.
pub fn verify_sigma_mi_bound(
    p: &MultiplicityProfile,
    opts: &EnumOptions,
) -> Result<bool, EnumerationError> {
    Ok(max_factor_count(p, opts)? as i64 <= p.total())
}
