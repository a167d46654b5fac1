//! Scenario runners; each returns a `Report` with at least one verdict.

use std::collections::HashSet;

use dehn_core::enumerator::{enumerate_profiles, EnumOptions, EnumerationError, ProfileSolution};
use dehn_core::factorization::{
    hurwitz_orbit_search, Direction, Factorization, FactorizationError, HurwitzVerdict,
    MultiplicityProfile, Twist,
};
use dehn_core::geography::{euler_upper_bound, filling_invariants, GeographyPoint};
use dehn_core::linalg::LinalgError;
use dehn_core::mcg::lantern::{frozen_lantern, search_lantern, LanternTriple, SEARCH_MAX_LEN};
use dehn_core::mcg::{product_of, Braid, Curve, HalfTwist, HoleSet, McgError, Word};
use dehn_core::plumbing::{
    gay_mark_open_book, intersection_matrix, is_negative_definite, row_sums, verify_chi_bound,
    PlumbingError, PlumbingGraph,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;
use thiserror::Error;

use crate::catalog::{CatalogError, CuriousConstants, LensFamily, CURIOUS_RANK};
use crate::dsl::{print_curve, print_factorization, DslError, MonodromyScript};
use crate::plumbing_io::PlumbingInputError;
use crate::report::{recount, InvariantRecord, Report, SolutionRecord, Verdict};

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Factorization(#[from] FactorizationError),
    #[error(transparent)]
    Mcg(#[from] McgError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Plumbing(#[from] PlumbingError),
    #[error(transparent)]
    PlumbingInput(#[from] PlumbingInputError),
}

/// Which parts of the profile analysis to report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Analysis {
    Enumerate,
    Geography,
    Classify,
}

impl Analysis {
    fn command(self) -> &'static str {
        match self {
            Analysis::Enumerate => "enumerate",
            Analysis::Geography => "geography",
            Analysis::Classify => "classify",
        }
    }
}

/// Enumeration that turns an exhausted budget into partial results.
fn enumerate_or_partial(
    p: &MultiplicityProfile,
    opts: &EnumOptions,
) -> Result<(Vec<ProfileSolution>, bool), ScenarioError> {
    match enumerate_profiles(p, opts) {
        Ok(s) => Ok((s, false)),
        Err(EnumerationError::BudgetExceeded { partial, .. }) => Ok((partial, true)),
        Err(e) => Err(e.into()),
    }
}

fn profile_json(p: &MultiplicityProfile) -> serde_json::Value {
    let n = p.rank();
    let joint: Vec<Vec<i64>> = (1..=n)
        .map(|i| (1..=n).map(|j| p.joint(i, j)).collect())
        .collect();
    json!({ "M": p.singles(), "Mij": joint })
}

fn same_counts(p: &MultiplicityProfile, rec: &SolutionRecord) -> bool {
    let (singles, joint) = recount(rec.rank, &rec.blocks);
    let n = p.rank();
    rec.rank == n
        && singles == p.singles()
        && (1..=n).all(|i| (1..=n).all(|j| i == j || joint[i - 1][j - 1] == p.joint(i, j)))
}

/// Profile enumeration, optionally with filling invariants and geography.
pub fn analyze(
    kind: Analysis,
    script: &MonodromyScript,
    opts: &EnumOptions,
) -> Result<Report, ScenarioError> {
    let start = std::time::Instant::now();
    let f = script.positive()?;
    let p = f.profile();
    let mut r = Report::new(kind.command());
    r.input("script", print_factorization(f))
        .input("budget", opts.node_limit);
    if let Some(m) = opts.max_factors {
        r.input("maxFactors", m);
    }
    r.summarize("profile", profile_json(&p))
        .summarize("sumM", p.total());

    let (sols, exhausted) = enumerate_or_partial(&p, opts)?;
    r.budget_exhausted = exhausted;
    r.solutions = sols
        .iter()
        .enumerate()
        .map(|(i, s)| SolutionRecord::new(i + 1, s))
        .collect();
    let max_m = sols.iter().map(|s| s.len()).max().unwrap_or(0);
    r.summarize("profileClasses", sols.len())
        .summarize("maxFactorCount", max_m);

    let recheck = r.solutions.iter().all(|s| same_counts(&p, s));
    r.check(
        "solutions re-validated by independent recount",
        recheck,
        format!("{} solutions", sols.len()),
    );
    let mut given = f.enclosed_multiset();
    given.sort();
    let present = sols.iter().any(|s| s.blocks() == &given[..]);
    if present || !exhausted {
        r.check(
            "given factorization appears among profile classes",
            present,
            "enclosed-set multiset of the input",
        );
    } else {
        r.verdict(
            "given factorization appears among profile classes",
            Verdict::Inconclusive,
            "budget exhausted",
        );
    }
    let bound_ok = max_m as i64 <= p.total();
    let detail = format!("max m = {max_m}, sum M_i = {}", p.total());
    if exhausted && bound_ok {
        r.verdict(
            "factor count bound max m <= sum M_i",
            Verdict::Inconclusive,
            detail,
        );
    } else {
        r.check("factor count bound max m <= sum M_i", bound_ok, detail);
    }

    if kind != Analysis::Enumerate {
        let n = p.rank();
        let bound = euler_upper_bound(&p);
        let mut points: Vec<GeographyPoint> = Vec::new();
        let mut identity_ok = true;
        let mut chi_ok = true;
        for (i, s) in sols.iter().enumerate() {
            let inv = filling_invariants(n, s.blocks())?;
            identity_ok &= inv.sigma + inv.chi == 1 - inv.b1;
            chi_ok &= inv.chi <= bound;
            let pt = GeographyPoint {
                sigma: inv.sigma,
                chi: inv.chi,
            };
            if !points.contains(&pt) {
                points.push(pt);
            }
            r.invariants.push(InvariantRecord::new(i + 1, &inv));
        }
        points.sort();
        let geo: Vec<[i64; 2]> = points.iter().map(|p| [p.sigma, p.chi]).collect();
        r.summarize("geography", json!(geo))
            .summarize("eulerUpperBound", bound);
        r.check(
            "sigma + chi = 1 - b1 for every solution",
            identity_ok,
            "planar-model signature",
        );
        r.check(
            "chi <= 1 - n + sum M_i for every solution",
            chi_ok,
            format!("bound {bound}"),
        );
        r.note("sigma is the planar-model signature, from sigma + chi = 1 - b1");
    }
    if kind == Analysis::Classify {
        r.note(format!(
            "{} profile classes: homological candidates for positive factorizations, not fillings up to symplectomorphism",
            sols.len()
        ));
    }
    r.set_elapsed(start.elapsed());
    Ok(r)
}

fn lantern_relation(t: &LanternTriple) -> Result<bool, McgError> {
    let n = t.alpha.rank();
    let lhs = product_of(
        n,
        [
            t.alpha.positive_twist(),
            t.beta.positive_twist(),
            t.gamma.positive_twist(),
        ],
    )?;
    let rhs = dehn_core::mcg::lantern::boundary_product(n)?;
    Ok(lhs == rhs)
}

pub fn verify_lantern() -> Result<Report, ScenarioError> {
    let start = std::time::Instant::now();
    let mut r = Report::new("verify lantern");
    let frozen = frozen_lantern();
    r.input("rank", 3).input("searchMaxLen", SEARCH_MAX_LEN);
    r.summarize("alpha", print_curve(&frozen.alpha))
        .summarize("beta", print_curve(&frozen.beta))
        .summarize("gamma", print_curve(&frozen.gamma));
    r.check(
        "tau_alpha tau_beta tau_gamma = tau_b1 tau_b2 tau_b3 tau_b4",
        lantern_relation(&frozen)?,
        "exact equality of free-group automorphisms and hole multiplicities",
    );
    let search = search_lantern(SEARCH_MAX_LEN)?;
    let matches = search.triple.as_ref().is_some_and(|t| {
        t.alpha.same_presentation(&frozen.alpha)
            && t.beta.same_presentation(&frozen.beta)
            && t.gamma.same_presentation(&frozen.gamma)
    });
    r.check(
        "bounded search reproduces the frozen triple",
        matches,
        format!("{} candidate pairs tested", search.pairs_tested),
    );
    let swapped = LanternTriple {
        alpha: frozen.beta.clone(),
        beta: frozen.alpha.clone(),
        gamma: frozen.gamma.clone(),
    };
    r.check(
        "relation is sensitive to cyclic order",
        !lantern_relation(&swapped)?,
        "beta alpha gamma differs",
    );
    let lhs = Factorization::new(
        3,
        vec![
            Twist::positive(frozen.alpha.clone()),
            Twist::positive(frozen.beta.clone()),
            Twist::positive(frozen.gamma.clone()),
        ],
    )?;
    let rhs = Factorization::from_blocks(
        3,
        &[1, 2, 3]
            .map(HoleSet::singleton)
            .into_iter()
            .chain([HoleSet::full(3)])
            .collect::<Vec<_>>(),
    )?;
    let (lp, rp) = (lhs.profile(), rhs.profile());
    let flat =
        (1..=3).all(|i| lp.multiplicity(i) == 2 && (1..=3).all(|j| i == j || lp.joint(i, j) == 1));
    r.check(
        "both sides have M_i = 2 and M_ij = 1",
        lp == rp && flat,
        lp.to_string(),
    );
    r.set_elapsed(start.elapsed());
    Ok(r)
}

/// `τ_{τ_γ^N(α)} τ_{τ_γ^N(β)} = τ_α τ_β` for the frozen lantern, `|N| <= nmax`.
pub fn verify_conjugation_family(nmax: u32) -> Result<Report, ScenarioError> {
    let start = std::time::Instant::now();
    let mut r = Report::new("verify conjugation");
    r.input("nmax", nmax);
    let t = frozen_lantern();
    let n = t.alpha.rank();
    let base = t.alpha.positive_twist().product(t.beta.positive_twist())?;
    let mut failures = Vec::new();
    let range = -(nmax as i64)..=nmax as i64;
    let count = range.clone().count();
    for k in range {
        let g = t.gamma.twist_braid(1).pow(k);
        let a = t.alpha.conjugate_by(&g)?;
        let b = t.beta.conjugate_by(&g)?;
        if product_of(n, [a.positive_twist(), b.positive_twist()])? != base {
            failures.push(k);
        }
    }
    r.check(
        "conjugating alpha and beta by tau_gamma^N preserves tau_alpha tau_beta",
        failures.is_empty(),
        format!("{count} values of N checked; failures {failures:?}"),
    );
    r.set_elapsed(start.elapsed());
    Ok(r)
}

pub fn verify_hurwitz(
    from: &MonodromyScript,
    to: &MonodromyScript,
    budget: u64,
) -> Result<Report, ScenarioError> {
    let start = std::time::Instant::now();
    let mut r = Report::new("verify hurwitz");
    r.input("from", from.canonical_text())
        .input("to", to.canonical_text())
        .input("budget", budget);
    match hurwitz_orbit_search(&from.factorization, &to.factorization, budget as usize)? {
        HurwitzVerdict::Equivalent { path } => {
            let moves: Vec<String> = path
                .iter()
                .map(|m| {
                    format!(
                        "{}{}",
                        if m.direction == Direction::Right {
                            "R"
                        } else {
                            "L"
                        },
                        m.position + 1
                    )
                })
                .collect();
            r.summarize("path", moves.join(" "));
            r.check(
                "Hurwitz equivalent",
                true,
                format!("path of {} moves", path.len()),
            );
        }
        HurwitzVerdict::NotEquivalent(reason) => {
            r.check(
                "Hurwitz equivalent",
                false,
                format!("certified inequivalent: {reason:?}"),
            );
        }
        HurwitzVerdict::NotFound { explored } => {
            r.budget_exhausted = true;
            r.verdict(
                "Hurwitz equivalent",
                Verdict::Inconclusive,
                format!("not found among {explored} orbit elements"),
            );
        }
    }
    r.set_elapsed(start.elapsed());
    Ok(r)
}

/// Random positive factorization: rank in `2..=max_rank`, up to `max_len`
/// factors, transporters of length at most 3.
pub fn random_factorization(rng: &mut StdRng, max_rank: usize, max_len: usize) -> Factorization {
    let n = rng.gen_range(2..=max_rank.max(2));
    let m = rng.gen_range(0..=max_len);
    let factors = (0..m)
        .map(|_| {
            let len = rng.gen_range(0..=3);
            let t = Braid::new((0..len).map(|_| {
                let i = rng.gen_range(1..n);
                if rng.gen() {
                    HalfTwist::pos(i)
                } else {
                    HalfTwist::neg(i)
                }
            }));
            let a = rng.gen_range(1..=n);
            let b = rng.gen_range(a..=n);
            Twist::positive(Curve::new(n, t, a, b).expect("transported blocks are valid curves"))
        })
        .collect();
    Factorization::new(n, factors).expect("ranks agree")
}

/// Moves whose result would push a factor's twist word weight past this
/// bound are skipped; random walks can otherwise grow curves exponentially.
pub const SWEEP_WEIGHT_CAP: usize = 1500;

fn max_weight(f: &Factorization) -> usize {
    f.factors()
        .iter()
        .map(|t| t.mapping_class().aut().weight())
        .max()
        .unwrap_or(0)
}

/// Outcome of a random Hurwitz walk.
pub struct HurwitzSweep {
    pub applied: usize,
    pub skipped: usize,
    pub failures: usize,
}

/// Applies `moves` random Hurwitz moves across random factorizations,
/// checking product, profile and enclosed-set multiset after each.
pub fn hurwitz_sweep(seed: u64, moves: usize) -> HurwitzSweep {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut s = HurwitzSweep {
        applied: 0,
        skipped: 0,
        failures: 0,
    };
    while s.applied < moves {
        let f = random_factorization(&mut rng, 6, 8);
        if f.len() < 2 {
            continue;
        }
        let (product, profile) = (f.product(), f.profile());
        let mut multiset = f.enclosed_multiset();
        multiset.sort();
        let mut g = f;
        for _ in 0..10 {
            if s.applied >= moves {
                break;
            }
            let i = rng.gen_range(0..g.len() - 1);
            let dir = if rng.gen() {
                Direction::Right
            } else {
                Direction::Left
            };
            let next = g.hurwitz_move(i, dir).expect("position in range");
            if max_weight(&next) > SWEEP_WEIGHT_CAP {
                s.skipped += 1;
                continue;
            }
            g = next;
            s.applied += 1;
            let mut m = g.enclosed_multiset();
            m.sort();
            if g.product() != product || g.profile() != profile || m != multiset {
                s.failures += 1;
            }
        }
    }
    s
}

/// Random profile realized by a random multiset of blocks on `D_n`, `n <= max_rank`.
pub fn random_feasible_profile(
    rng: &mut StdRng,
    max_rank: usize,
    max_blocks: usize,
) -> MultiplicityProfile {
    let n = rng.gen_range(1..=max_rank);
    let k = rng.gen_range(0..=max_blocks);
    let blocks: Vec<HoleSet> = (0..k)
        .map(|_| HoleSet::from_bits(rng.gen_range(1..(1u64 << n))))
        .collect();
    MultiplicityProfile::from_blocks(n, &blocks)
}

/// Property sweeps with a fixed seed.
pub fn verify_sweep(seed: u64, cases: usize, opts: &EnumOptions) -> Result<Report, ScenarioError> {
    let start = std::time::Instant::now();
    let mut r = Report::new("verify sweep");
    r.input("seed", seed).input("cases", cases);
    let sweep = hurwitz_sweep(seed, cases * 10);
    r.check(
        "Hurwitz moves preserve product, profile and enclosed sets",
        sweep.failures == 0,
        format!(
            "{} moves applied, {} skipped by the weight cap",
            sweep.applied, sweep.skipped
        ),
    );

    let mut rng = StdRng::seed_from_u64(seed ^ 0x5eed);
    let mut delta_ok = true;
    let mut twists = 0;
    for _ in 0..cases {
        for t in random_factorization(&mut rng, 8, 4).factors() {
            twists += 1;
            let n = t.curve.rank();
            delta_ok &= t.mapping_class().aut().apply(&Word::boundary(n)) == Word::boundary(n);
        }
    }
    r.check(
        "every twist automorphism fixes the boundary word",
        delta_ok,
        format!("{twists} twists"),
    );

    let mut bound_ok = true;
    let mut identity_ok = true;
    let mut exhausted = false;
    for _ in 0..cases {
        let p = random_feasible_profile(&mut rng, 5, 7);
        let (sols, ex) = enumerate_or_partial(&p, opts)?;
        exhausted |= ex;
        bound_ok &= sols.iter().all(|s| s.len() as i64 <= p.total());
        for s in &sols {
            let inv = filling_invariants(p.rank(), s.blocks())?;
            identity_ok &= inv.sigma + inv.chi == 1 - inv.b1;
        }
    }
    r.budget_exhausted = exhausted;
    r.check(
        "max m <= sum M_i on random feasible profiles",
        bound_ok,
        format!("{cases} profiles, rank <= 5"),
    );
    r.check(
        "sigma + chi = 1 - b1 on every solution",
        identity_ok,
        format!("{cases} profiles"),
    );
    r.set_elapsed(start.elapsed());
    Ok(r)
}

/// The curious family `τ_{τ_d^k(a)} τ_{τ_d^k(b)} τ_c τ_{b_1} τ_{b_3} τ_{b_4}` for `k` in `lo..=hi`.
pub fn curious_family(lo: i64, hi: i64, opts: &EnumOptions) -> Result<Report, ScenarioError> {
    let start = std::time::Instant::now();
    let mut r = Report::new("curious");
    r.input("from", lo).input("to", hi);
    let k = CuriousConstants::new()?;
    let n = CURIOUS_RANK;
    r.summarize("a", print_curve(&k.a))
        .summarize("b", print_curve(&k.b))
        .summarize("c", print_curve(&k.c))
        .summarize("gamma", print_curve(&k.gamma))
        .summarize("d", print_curve(&k.d));

    // τ_a τ_b τ_d = τ_{b_1} τ_{b_2} τ_{b_3} τ_γ, checked exactly and on profiles.
    let left = Factorization::new(
        n,
        vec![Twist::positive(k.a.clone()), Twist::positive(k.b.clone())],
    )?;
    let right = Factorization::new(
        n,
        vec![
            Twist::positive(Curve::hole(n, 1)?),
            Twist::positive(Curve::hole(n, 2)?),
            Twist::positive(Curve::hole(n, 3)?),
            Twist::positive(k.gamma.clone()),
            Twist::negative(k.d.clone()),
        ],
    )?;
    r.check(
        "tau_a tau_b = tau_b1 tau_b2 tau_b3 tau_gamma tau_d^-1",
        left.product() == right.product() && left.profile() == right.profile(),
        "exact equality and equal multiplicities",
    );

    let base = k.member(0)?;
    let base_product = base.product();
    let base_profile = base.profile();
    let members: Vec<(i64, Factorization)> = (lo..=hi)
        .map(|j| Ok((j, k.member(j)?)))
        .collect::<Result<_, ScenarioError>>()?;
    let product_ok: Vec<i64> = members
        .iter()
        .filter(|(_, f)| f.product() != base_product)
        .map(|(j, _)| *j)
        .collect();
    r.check(
        "every member has the product of the base word",
        product_ok.is_empty(),
        format!("{} members; mismatches {product_ok:?}", members.len()),
    );
    r.check(
        "every member has the profile of the base word",
        members.iter().all(|(_, f)| f.profile() == base_profile),
        base_profile.to_string(),
    );
    let mut seen = HashSet::new();
    let distinct = members
        .iter()
        .all(|(_, f)| seen.insert(f.factors()[0].mapping_class()));
    r.check(
        "first-slot twists pairwise distinct",
        distinct,
        format!("{} distinct curves tau_d^k(a)", seen.len()),
    );
    let (sols, exhausted) = enumerate_or_partial(&base_profile, opts)?;
    r.budget_exhausted = exhausted;
    r.solutions = sols
        .iter()
        .enumerate()
        .map(|(i, s)| SolutionRecord::new(i + 1, s))
        .collect();
    r.summarize("profileClasses", sols.len())
        .summarize("curveLevelFactorizations", seen.len());
    if exhausted {
        r.verdict(
            "profile class set is finite",
            Verdict::Inconclusive,
            "budget exhausted",
        );
    } else {
        r.check(
            "profile class set is finite",
            !sols.is_empty(),
            format!(
                "{} profile classes for {} distinct curve-level factorizations",
                sols.len(),
                seen.len()
            ),
        );
    }
    r.set_elapsed(start.elapsed());
    Ok(r)
}

fn graph_inputs(r: &mut Report, g: &PlumbingGraph) {
    let vs: Vec<[i64; 2]> = g.vertices().iter().map(|&(v, w)| [v as i64, w]).collect();
    let es: Vec<[u32; 2]> = g.edges().iter().map(|&(a, b)| [a, b]).collect();
    r.input("vertices", json!(vs)).input("edges", json!(es));
    if let Some(o) = g.outer() {
        r.input("outer", o);
    }
}

pub fn plumbing_check(g: &PlumbingGraph) -> Result<Report, ScenarioError> {
    let start = std::time::Instant::now();
    let mut r = Report::new("plumbing check");
    graph_inputs(&mut r, g);
    let q = intersection_matrix(g);
    let rows: Vec<Vec<i64>> = (0..q.rows()).map(|i| q.row(i).to_vec()).collect();
    let sums = row_sums(&q);
    r.summarize("intersectionMatrix", json!(rows))
        .summarize("rowSums", json!(sums.sums));
    r.check(
        "graph is a tree",
        g.is_tree(),
        format!("{} vertices, {} edges", g.vertices().len(), g.edges().len()),
    );
    r.check(
        "row sums are non-positive",
        sums.all_nonpositive,
        format!("{:?}", sums.sums),
    );
    r.check(
        "some row sum is negative",
        sums.sums.iter().any(|&s| s < 0),
        "the page needs a boundary",
    );
    let minors = q.leading_principal_minors()?;
    r.summarize(
        "leadingMinors",
        json!(minors.iter().map(|m| m.to_string()).collect::<Vec<_>>()),
    );
    r.check(
        "intersection form is negative definite",
        is_negative_definite(&q)?,
        "signs of leading principal minors",
    );
    r.set_elapsed(start.elapsed());
    Ok(r)
}

pub fn plumbing_openbook(g: &PlumbingGraph) -> Result<Report, ScenarioError> {
    let start = std::time::Instant::now();
    let mut r = Report::new("plumbing openbook");
    graph_inputs(&mut r, g);
    let (page, f) = gay_mark_open_book(g)?;
    let owners: Vec<String> = page
        .hole_owner
        .iter()
        .map(|l| format!("v{}.{}", l.vertex, l.disk))
        .collect();
    let necks: Vec<String> = page
        .neck_curves
        .iter()
        .map(|c| format!("{}-{}: {}", c.edge.0, c.edge.1, c.enclosed))
        .collect();
    r.summarize("holes", page.holes)
        .summarize(
            "outer",
            format!("v{}.{}", page.outer.vertex, page.outer.disk),
        )
        .summarize("holeOwners", json!(owners))
        .summarize("necks", json!(necks))
        .summarize("k", page.k)
        .summarize("inessentialTwists", page.inessential)
        .summarize("monodromy", print_factorization(&f));
    let nested = page.neck_curves.iter().all(|a| {
        page.neck_curves.iter().all(|b| {
            let (x, y) = (a.enclosed, b.enclosed);
            x.is_subset(y) || y.is_subset(x) || x.is_disjoint(y)
        })
    });
    r.check(
        "neck curves are nested or disjoint",
        nested,
        format!("{} necks", page.neck_curves.len()),
    );
    r.check(
        "factor count k = sum |s_i| + edges",
        f.len() + page.inessential == page.k,
        format!("{} essential + {} inessential", f.len(), page.inessential),
    );
    r.set_elapsed(start.elapsed());
    Ok(r)
}

pub fn plumbing_chibound(g: &PlumbingGraph, opts: &EnumOptions) -> Result<Report, ScenarioError> {
    let start = std::time::Instant::now();
    let mut r = Report::new("plumbing chibound");
    graph_inputs(&mut r, g);
    match verify_chi_bound(g, opts) {
        Ok(rep) => {
            r.summarize("holes", rep.holes)
                .summarize("k", rep.k)
                .summarize("chiZ", rep.chi_z)
                .summarize("maxM", rep.max_m)
                .summarize("maxChiX", rep.max_chi_x);
            r.check(
                "max m <= k (chi(X) <= chi(Z))",
                rep.holds,
                format!("max m = {}, k = {}", rep.max_m, rep.k),
            );
            r.note("chi is computed as 1 - h + m from the handle decomposition of the filling");
        }
        Err(PlumbingError::Enumeration(EnumerationError::BudgetExceeded { .. })) => {
            r.budget_exhausted = true;
            r.verdict(
                "max m <= k (chi(X) <= chi(Z))",
                Verdict::Inconclusive,
                "budget exhausted",
            );
        }
        Err(e) => return Err(e.into()),
    }
    r.set_elapsed(start.elapsed());
    Ok(r)
}

pub fn catalog_lens(family: LensFamily) -> Result<Report, ScenarioError> {
    let start = std::time::Instant::now();
    let mut r = Report::new("catalog lens");
    r.input("id", family.id());
    let script = family.script()?;
    let p = script.factorization.profile();
    r.summarize("script", script.canonical_text())
        .summarize("profile", profile_json(&p));
    r.check(
        "script is a positive factorization",
        script.positive().is_ok(),
        format!("{} factors", script.factorization.len()),
    );
    r.set_elapsed(start.elapsed());
    Ok(r)
}
