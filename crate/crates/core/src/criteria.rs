//! Autonilpotency criteria and the cross-validation harness.
//!
//! Five independent checks decide the same question (whether a group is
//! its own ascending series limit under the full automorphism group)
//! through different equivalent characterizations. The harness runs all
//! of them plus the fixed-point set identities and asserts the verdicts
//! agree; a size cap hitting one criterion marks it skipped rather than
//! disagreeing.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::aut::{
    automorphism_group_with, inner_subaction_of_aut, p_prime_elements,
    stabilizer_action_on_subgroup, AutLimits, OperatorAction,
};
use crate::error::Error;
use crate::group::{is_power_of, GroupId, GroupTable};
use crate::search::visit_automorphisms;
use crate::series::{
    build_stabilized_chain, k_series, l_series, verify_chain_stabilized, ChainCheck, SeriesKind,
};
use crate::subgroup::{
    enumerate_subgroups, is_nilpotent, subgroup_group, sylow_subgroup, Subgroup,
};

/// Identifier of one criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriterionKind {
    LSeries,
    Chain,
    Sylow,
    Frobenius,
    Fixity,
    RFrobenius,
    RSylow,
}

impl CriterionKind {
    /// Stable lowercase name, used in reports and CLI flags.
    pub fn name(self) -> &'static str {
        match self {
            CriterionKind::LSeries => "l-series",
            CriterionKind::Chain => "chain",
            CriterionKind::Sylow => "sylow",
            CriterionKind::Frobenius => "frobenius",
            CriterionKind::Fixity => "fixity",
            CriterionKind::RFrobenius => "r-frobenius",
            CriterionKind::RSylow => "r-sylow",
        }
    }
}

/// Per-prime payload of the Sylow criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylowEvidence {
    pub p: usize,
    pub sylow_order: usize,
    pub aut_order: usize,
    pub aut_is_p_group: bool,
}

/// A p-subgroup whose stabilizer quotient is not a p-group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusWitness {
    pub p: usize,
    pub subgroup_order: usize,
    pub subgroup_members: Vec<usize>,
    pub quotient_order: usize,
}

/// An operator moving an element of coprime order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixityWitness {
    pub operator: usize,
    pub operator_order: usize,
    pub element: usize,
    pub element_order: usize,
}

/// What a criterion saw; always enough to substantiate its verdict.
#[derive(Debug, Clone)]
pub enum Evidence {
    /// Term orders of a computed series.
    Series {
        kind: SeriesKind,
        term_orders: Vec<usize>,
        terminated: bool,
    },
    /// A verified stabilized chain (term orders, descending).
    Chain {
        term_orders: Vec<usize>,
        normal_in_whole: bool,
    },
    /// The descending series stalled at this order instead of reaching 1.
    ChainStall { stalled_at_order: usize },
    /// Nilpotency plus per-prime Sylow automorphism data.
    Sylow {
        nilpotent: bool,
        per_prime: Vec<SylowEvidence>,
    },
    /// Stabilizer quotients over all p-subgroups; witness on failure.
    Frobenius {
        subgroups_checked: usize,
        witness: Option<FrobeniusWitness>,
    },
    /// Coprime fixed-point scan; witness on failure.
    Fixity {
        operator_count: usize,
        witness: Option<FixityWitness>,
    },
}

/// Outcome of one criterion on one group.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub group_name: String,
    pub group_order: usize,
    pub criterion: CriterionKind,
    pub verdict: bool,
    pub evidence: Evidence,
    /// Wall-clock duration, filled in by callers that can measure time.
    pub elapsed_micros: Option<u64>,
}

/// Memo cache for automorphism groups, keyed by table identity. Criteria
/// stay independent above this shared computation.
#[derive(Debug)]
pub struct AutCache {
    limits: AutLimits,
    entries: BTreeMap<GroupId, Result<Arc<OperatorAction>, Error>>,
}

impl AutCache {
    pub fn new(limits: AutLimits) -> AutCache {
        AutCache {
            limits,
            entries: BTreeMap::new(),
        }
    }

    pub fn limits(&self) -> AutLimits {
        self.limits
    }

    /// The full automorphism action on g, computed once per table identity.
    /// Size-cap errors are cached too, so repeated queries stay cheap.
    pub fn automorphisms(&mut self, g: &GroupTable) -> Result<Arc<OperatorAction>, Error> {
        if let Some(cached) = self.entries.get(&g.id()) {
            return cached.clone();
        }
        let computed = automorphism_group_with(g, self.limits).map(Arc::new);
        self.entries.insert(g.id(), computed.clone());
        computed
    }
}

impl Default for AutCache {
    fn default() -> Self {
        AutCache::new(AutLimits::default())
    }
}

fn report(
    g: &GroupTable,
    criterion: CriterionKind,
    verdict: bool,
    evidence: Evidence,
) -> CriterionReport {
    CriterionReport {
        group_name: g.name().to_string(),
        group_order: g.order(),
        criterion,
        verdict,
        evidence,
        elapsed_micros: None,
    }
}

/// Criterion 1: the ascending series under the full automorphism group
/// reaches the whole group.
pub fn check_via_l_series(g: &GroupTable, cache: &mut AutCache) -> Result<CriterionReport, Error> {
    let aut = cache.automorphisms(g)?;
    let series = l_series(&aut);
    let verdict = series.terminated;
    let evidence = Evidence::Series {
        kind: SeriesKind::L,
        term_orders: series.term_orders(),
        terminated: series.terminated,
    };
    Ok(report(g, CriterionKind::LSeries, verdict, evidence))
}

/// Criterion 2: the full automorphism group stabilizes some chain of
/// subgroups from the whole group down to the trivial one.
pub fn check_via_chain(g: &GroupTable, cache: &mut AutCache) -> Result<CriterionReport, Error> {
    let aut = cache.automorphisms(g)?;
    match build_stabilized_chain(&aut) {
        Some(chain) => {
            let check = verify_chain_stabilized(&aut, &chain)?;
            let normal_in_whole = match check {
                ChainCheck::Stabilized { normal_in_whole } => normal_in_whole,
                ChainCheck::Failed(f) => {
                    unreachable!("chain built from a terminated series must verify: {f:?}")
                }
            };
            let evidence = Evidence::Chain {
                term_orders: chain.terms().iter().map(|t| t.order()).collect(),
                normal_in_whole,
            };
            Ok(report(g, CriterionKind::Chain, true, evidence))
        }
        None => {
            let stall = k_series(&aut);
            let evidence = Evidence::ChainStall {
                stalled_at_order: stall.limit().order(),
            };
            Ok(report(g, CriterionKind::Chain, false, evidence))
        }
    }
}

/// Criterion 3: the group is nilpotent and the automorphism group of each
/// Sylow p-subgroup is a p-group. Non-nilpotent groups fail without any
/// automorphism search, so the verdict never hides behind a size cap.
pub fn check_via_sylow(g: &GroupTable, cache: &mut AutCache) -> Result<CriterionReport, Error> {
    let nilpotent = is_nilpotent(g);
    if !nilpotent {
        let evidence = Evidence::Sylow {
            nilpotent,
            per_prime: Vec::new(),
        };
        return Ok(report(g, CriterionKind::Sylow, false, evidence));
    }
    let mut per_prime = Vec::new();
    let mut verdict = true;
    for &p in &g.prime_divisors() {
        let sylow = sylow_subgroup(g, p);
        let (table, _) = subgroup_group(g, &sylow);
        let aut = automorphism_group_with(&table, cache.limits())?;
        let aut_is_p_group = is_power_of(aut.operator_count(), p);
        verdict &= aut_is_p_group;
        per_prime.push(SylowEvidence {
            p,
            sylow_order: sylow.order(),
            aut_order: aut.operator_count(),
            aut_is_p_group,
        });
    }
    let evidence = Evidence::Sylow {
        nilpotent,
        per_prime,
    };
    Ok(report(g, CriterionKind::Sylow, verdict, evidence))
}

/// Criterion 4: for every prime p and every p-subgroup P, the stabilizer
/// quotient N(P)/C(P) inside the full automorphism group is a p-group.
pub fn check_via_frobenius(g: &GroupTable, cache: &mut AutCache) -> Result<CriterionReport, Error> {
    let aut = cache.automorphisms(g)?;
    let outcome = frobenius_scan(g, &aut)?;
    let verdict = matches!(&outcome, Evidence::Frobenius { witness: None, .. });
    Ok(report(g, CriterionKind::Frobenius, verdict, outcome))
}

/// Shared quantifier of the two Frobenius-style criteria: every p-subgroup
/// must have a p-group stabilizer quotient under the given action.
fn frobenius_scan(g: &GroupTable, act: &OperatorAction) -> Result<Evidence, Error> {
    let all = enumerate_subgroups(g, None)?;
    let mut checked = 0;
    for &p in &g.prime_divisors() {
        for sub in all.iter().filter(|s| is_power_of(s.order(), p)) {
            checked += 1;
            let stab = stabilizer_action_on_subgroup(act, sub);
            let quotient_order = stab.induced.operator_count();
            if !is_power_of(quotient_order, p) {
                return Ok(Evidence::Frobenius {
                    subgroups_checked: checked,
                    witness: Some(FrobeniusWitness {
                        p,
                        subgroup_order: sub.order(),
                        subgroup_members: sub.members().to_vec(),
                        quotient_order,
                    }),
                });
            }
        }
    }
    Ok(Evidence::Frobenius {
        subgroups_checked: checked,
        witness: None,
    })
}

/// Criterion 5: every automorphism fixes every element whose order is
/// coprime to the automorphism's own order.
pub fn check_via_fixity(g: &GroupTable, cache: &mut AutCache) -> Result<CriterionReport, Error> {
    let aut = cache.automorphisms(g)?;
    let mut witness = None;
    'outer: for a in 0..aut.operator_count() {
        let a_order = aut.operators().element_order(a);
        for x in 0..g.order() {
            let x_order = g.element_order(x);
            if crate::group::gcd(x_order, a_order) == 1 && aut.apply(a, x) != x {
                witness = Some(FixityWitness {
                    operator: a,
                    operator_order: a_order,
                    element: x,
                    element_order: x_order,
                });
                break 'outer;
            }
        }
    }
    let verdict = witness.is_none();
    let evidence = Evidence::Fixity {
        operator_count: aut.operator_count(),
        witness,
    };
    Ok(report(g, CriterionKind::Fixity, verdict, evidence))
}

/// Elements of p-power order in a member list (the identity counts).
fn p_elements_of(g: &GroupTable, members: &[usize], p: usize) -> Vec<usize> {
    members
        .iter()
        .copied()
        .filter(|&x| is_power_of(g.element_order(x), p))
        .collect()
}

fn require_prime_divisor(g: &GroupTable, p: usize) -> Result<(), Error> {
    if !g.prime_divisors().contains(&p) {
        return Err(Error::InvalidArgument {
            what: "prime",
            detail: format!("{p} does not divide the group order {}", g.order()),
        });
    }
    Ok(())
}

/// Fixed-point identity under the full automorphism group: the p-elements
/// of the ascending series limit (lhs) against the p-elements fixed by
/// every operator of order coprime to p (rhs). The two sets are expected
/// to be equal; callers compare them.
pub fn baer_absolute(
    g: &GroupTable,
    p: usize,
    cache: &mut AutCache,
) -> Result<(Vec<usize>, Vec<usize>), Error> {
    require_prime_divisor(g, p)?;
    let aut = cache.automorphisms(g)?;
    let limit = l_series(&aut).limit().clone();
    let lhs = p_elements_of(g, limit.members(), p);
    let coprime_ops = p_prime_elements(&aut, p);
    let all: Vec<usize> = (0..g.order()).collect();
    let rhs: Vec<usize> = p_elements_of(g, &all, p)
        .into_iter()
        .filter(|&x| coprime_ops.iter().all(|&a| aut.apply(a, x) == x))
        .collect();
    Ok((lhs, rhs))
}

/// Same two sets as [`baer_absolute`], computed by streaming the
/// automorphism search instead of materializing the operator group: one
/// search pass per ascending-series level plus one for the fixed points.
/// Groups whose automorphism group far exceeds the operator caps stay
/// within reach, because no map is ever collected.
pub fn baer_absolute_streamed(g: &GroupTable, p: usize) -> Result<(Vec<usize>, Vec<usize>), Error> {
    require_prime_divisor(g, p)?;
    let n = g.order();
    let mut level: Vec<usize> = vec![0];
    loop {
        // next term: elements whose commutator with every automorphism
        // lands in the current term; keeps only ever shrinks, and the
        // identity can never leave, so a pass down to one element is done
        let mut keeps = vec![true; n];
        let mut remaining = n;
        visit_automorphisms(g, &mut |map| {
            for x in 0..n {
                if keeps[x]
                    && level
                        .binary_search(&g.mul(g.inv(x), map[x] as usize))
                        .is_err()
                {
                    keeps[x] = false;
                    remaining -= 1;
                }
            }
            remaining > 1
        });
        let next: Vec<usize> = (0..n).filter(|&x| keeps[x]).collect();
        debug_assert!(
            level.iter().all(|x| next.binary_search(x).is_ok()),
            "ascending series lost a previous member"
        );
        if next.len() == level.len() {
            break;
        }
        level = next;
        if level.len() == n {
            break;
        }
    }
    let lhs = p_elements_of(g, &level, p);

    // fixed points of every automorphism of order coprime to p; again the
    // set only shrinks and always holds the identity
    let mut fixed = vec![true; n];
    let mut remaining = n;
    visit_automorphisms(g, &mut |map| {
        if crate::group::gcd(permutation_order(map), p) == 1 {
            for x in 0..n {
                if fixed[x] && map[x] as usize != x {
                    fixed[x] = false;
                    remaining -= 1;
                }
            }
        }
        remaining > 1
    });
    let candidates: Vec<usize> = (0..n).filter(|&x| fixed[x]).collect();
    let rhs = p_elements_of(g, &candidates, p);
    Ok((lhs, rhs))
}

/// Multiplicative order of a permutation given as an image array: the
/// least common multiple of its cycle lengths.
fn permutation_order(map: &[u32]) -> usize {
    let mut seen = vec![false; map.len()];
    let mut order = 1usize;
    for start in 0..map.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0usize;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = map[x] as usize;
            len += 1;
        }
        order = order / crate::group::gcd(order, len) * len;
    }
    order
}

/// Conjugation version of the fixed-point identity: p-elements of the
/// hypercenter (lhs) against p-elements commuting with every element of
/// order coprime to p (rhs).
pub fn baer_classical(g: &GroupTable, p: usize) -> Result<(Vec<usize>, Vec<usize>), Error> {
    require_prime_divisor(g, p)?;
    let z = crate::series::hypercenter(g);
    let lhs = p_elements_of(g, z.members(), p);
    let coprime_elements: Vec<usize> = (0..g.order())
        .filter(|&y| crate::group::gcd(g.element_order(y), p) == 1)
        .collect();
    let all: Vec<usize> = (0..g.order()).collect();
    let rhs: Vec<usize> = p_elements_of(g, &all, p)
        .into_iter()
        .filter(|&x| coprime_elements.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
        .collect();
    Ok((lhs, rhs))
}

/// The operator action's image must contain every conjugation map; the
/// generalized criteria are stated only under that hypothesis.
fn require_inner_inside(g: &GroupTable, act: &OperatorAction) -> Result<Subgroup, Error> {
    inner_subaction_of_aut(g, act).ok_or(Error::NotApplicable {
        requirement: "the action's image must contain every conjugation map",
    })
}

/// Generalized Frobenius criterion for an arbitrary operator action:
/// every p-subgroup's induced stabilizer quotient must be a p-group.
/// Inapplicable (an error, not a verdict) when the action's image does
/// not contain all conjugation maps.
pub fn check_r_nilpotent_frobenius(act: &OperatorAction) -> Result<CriterionReport, Error> {
    let g = act.target().clone();
    require_inner_inside(&g, act)?;
    let outcome = frobenius_scan(&g, act)?;
    let verdict = matches!(&outcome, Evidence::Frobenius { witness: None, .. });
    Ok(report(&g, CriterionKind::RFrobenius, verdict, outcome))
}

/// Generalized Sylow criterion: the target is nilpotent and each Sylow
/// subgroup's induced stabilizer quotient is a p-group. Same
/// applicability filter as [`check_r_nilpotent_frobenius`].
pub fn check_r_nilpotent_sylow(act: &OperatorAction) -> Result<CriterionReport, Error> {
    let g = act.target().clone();
    require_inner_inside(&g, act)?;
    let nilpotent = is_nilpotent(&g);
    let mut per_prime = Vec::new();
    let mut verdict = nilpotent;
    if nilpotent {
        for &p in &g.prime_divisors() {
            let sylow = sylow_subgroup(&g, p);
            let stab = stabilizer_action_on_subgroup(act, &sylow);
            let quotient_order = stab.induced.operator_count();
            let aut_is_p_group = is_power_of(quotient_order, p);
            verdict &= aut_is_p_group;
            per_prime.push(SylowEvidence {
                p,
                sylow_order: sylow.order(),
                aut_order: quotient_order,
                aut_is_p_group,
            });
        }
    }
    let evidence = Evidence::Sylow {
        nilpotent,
        per_prime,
    };
    Ok(report(&g, CriterionKind::RSylow, verdict, evidence))
}

/// A criterion that ran, or the reason it could not.
#[derive(Debug, Clone)]
pub enum CriterionOutcome {
    Report(CriterionReport),
    Skipped {
        criterion: CriterionKind,
        reason: String,
    },
}

impl CriterionOutcome {
    pub fn criterion(&self) -> CriterionKind {
        match self {
            CriterionOutcome::Report(r) => r.criterion,
            CriterionOutcome::Skipped { criterion, .. } => *criterion,
        }
    }

    pub fn verdict(&self) -> Option<bool> {
        match self {
            CriterionOutcome::Report(r) => Some(r.verdict),
            CriterionOutcome::Skipped { .. } => None,
        }
    }
}

/// Result of the fixed-point identities for one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaerOutcome {
    pub p: usize,
    /// Whether the two sets of the automorphism version match; None when
    /// the automorphism group was not computable under the cap.
    pub absolute_match: Option<bool>,
    pub classical_match: bool,
}

/// All criteria on one group, with the agreement verdict.
#[derive(Debug, Clone)]
pub struct CrossValidation {
    pub group_name: String,
    pub group_order: usize,
    pub outcomes: Vec<CriterionOutcome>,
    /// True iff every criterion that produced a verdict produced the same
    /// one. Skipped criteria never disagree.
    pub agree: bool,
    pub baer: Vec<BaerOutcome>,
}

impl CrossValidation {
    /// The common verdict, when at least one criterion ran.
    pub fn verdict(&self) -> Option<bool> {
        self.outcomes.iter().find_map(|o| o.verdict())
    }

    pub fn skipped_count(&self) -> usize {
        self.outcomes
            .iter()
            .filter(|o| o.verdict().is_none())
            .count()
    }
}

/// Run all five criteria plus both fixed-point identities for every prime
/// divisor. Size-cap errors mark a criterion skipped. `clock` supplies a
/// monotonic microsecond reading when the caller wants per-criterion
/// durations; return None to leave durations unset.
pub fn cross_validate_timed(
    g: &GroupTable,
    cache: &mut AutCache,
    clock: &mut dyn FnMut() -> Option<u64>,
) -> CrossValidation {
    type Checker = fn(&GroupTable, &mut AutCache) -> Result<CriterionReport, Error>;
    let checkers: [(CriterionKind, Checker); 5] = [
        (CriterionKind::LSeries, check_via_l_series),
        (CriterionKind::Chain, check_via_chain),
        (CriterionKind::Sylow, check_via_sylow),
        (CriterionKind::Frobenius, check_via_frobenius),
        (CriterionKind::Fixity, check_via_fixity),
    ];
    let mut outcomes = Vec::with_capacity(checkers.len());
    for (kind, run) in checkers {
        let started = clock();
        let outcome = match run(g, cache) {
            Ok(mut report) => {
                if let (Some(t0), Some(t1)) = (started, clock()) {
                    report.elapsed_micros = Some(t1.saturating_sub(t0));
                }
                CriterionOutcome::Report(report)
            }
            Err(e) => CriterionOutcome::Skipped {
                criterion: kind,
                reason: e.to_string(),
            },
        };
        outcomes.push(outcome);
    }
    let verdicts: Vec<bool> = outcomes.iter().filter_map(|o| o.verdict()).collect();
    let agree = verdicts.windows(2).all(|w| w[0] == w[1]);
    let mut baer = Vec::new();
    for &p in &g.prime_divisors() {
        let absolute_match = match baer_absolute(g, p, cache) {
            Ok((lhs, rhs)) => Some(lhs == rhs),
            Err(_) => None,
        };
        let classical_match = baer_classical(g, p)
            .map(|(lhs, rhs)| lhs == rhs)
            .expect("p came from the prime divisor list");
        baer.push(BaerOutcome {
            p,
            absolute_match,
            classical_match,
        });
    }
    CrossValidation {
        group_name: g.name().to_string(),
        group_order: g.order(),
        outcomes,
        agree,
        baer,
    }
}

/// [`cross_validate_timed`] without duration measurements.
pub fn cross_validate(g: &GroupTable, cache: &mut AutCache) -> CrossValidation {
    cross_validate_timed(g, cache, &mut || None)
}
