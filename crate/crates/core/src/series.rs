//! Descending and ascending operator series, their limits, and stabilized
//! chains of subgroups.
//!
//! Term storage convention, used consistently by both series: the next
//! term is pushed as long as it is new; when an iteration step returns the
//! same subgroup again, that repeat is stored once as evidence of the
//! stall and iteration stops. When a step lands on the forced fixed point
//! (trivial subgroup for the descending series, the whole group for the
//! ascending one) iteration stops without storing a repeat, since no
//! further step could differ. The limit is always the last stored term.

use alloc::vec;
use alloc::vec::Vec;

use crate::aut::{automorphism_group_with, inner_automorphisms, AutLimits, OperatorAction};

#[cfg(test)]
use crate::aut::automorphism_group;
use crate::error::Error;
use crate::group::GroupTable;
use crate::subgroup::{generated_subgroup, Subgroup};

/// Which of the two operator series a result describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// Descending: starts at the whole group, iterates commutation with
    /// the operators, terminated means it reached the trivial subgroup.
    K,
    /// Ascending: starts at the trivial subgroup, iterates taking
    /// preimages of fixed points, terminated means it reached the whole
    /// group.
    L,
}

/// The computed terms of an operator series.
#[derive(Debug, Clone)]
pub struct SeriesResult {
    pub kind: SeriesKind,
    /// Terms in iteration order, starting with the whole group (K) or the
    /// trivial subgroup (L).
    pub terms: Vec<Subgroup>,
    /// Whether the series reached its fixed point: trivial for K, the
    /// whole group for L.
    pub terminated: bool,
}

impl SeriesResult {
    /// The last stored term: the series limit.
    pub fn limit(&self) -> &Subgroup {
        self.terms
            .last()
            .expect("series always stores at least one term")
    }

    pub fn term_orders(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.order()).collect()
    }
}

/// [b, a] = b⁻¹ · b^a for an element b and operator a.
pub fn operator_commutator(act: &OperatorAction, b: usize, a: usize) -> usize {
    let g = act.target();
    g.mul(g.inv(b), act.apply(a, b))
}

/// The left-nested iterated commutator [x, a₁, …, aₙ]: commutate with a₁
/// first, then feed the result to a₂, and so on.
pub fn iterated_commutator(act: &OperatorAction, x: usize, operators: &[usize]) -> usize {
    operators
        .iter()
        .fold(x, |acc, &a| operator_commutator(act, acc, a))
}

/// The descending series: starts at the whole group, each term is the
/// subgroup generated by all commutators of the previous term's members
/// with all operators. Terminated iff it reaches the trivial subgroup.
pub fn k_series(act: &OperatorAction) -> SeriesResult {
    let g = act.target();
    let m = act.operator_count();
    let mut terms = vec![Subgroup::whole(g)];
    loop {
        let current = terms.last().expect("nonempty");
        if current.is_trivial() {
            // forced fixed point, reached or started at
            return SeriesResult {
                kind: SeriesKind::K,
                terms,
                terminated: true,
            };
        }
        let mut seed: Vec<usize> = Vec::new();
        for &b in current.members() {
            for a in 0..m {
                seed.push(operator_commutator(act, b, a));
            }
        }
        seed.sort_unstable();
        seed.dedup();
        let next = generated_subgroup(g, &seed);
        debug_assert!(
            next.members().iter().all(|&x| current.contains(x)),
            "descending series escaped its previous term"
        );
        let stalled = next.members() == current.members();
        terms.push(next);
        if stalled {
            return SeriesResult {
                kind: SeriesKind::K,
                terms,
                terminated: false,
            };
        }
    }
}

/// The ascending series: starts at the trivial subgroup, each term
/// collects the elements whose commutators with every operator land in
/// the previous term. Terminated iff it reaches the whole group.
pub fn l_series(act: &OperatorAction) -> SeriesResult {
    let g = act.target();
    let n = g.order();
    let m = act.operator_count();
    let mut terms = vec![Subgroup::trivial(g)];
    loop {
        let current = terms.last().expect("nonempty");
        if current.is_whole(g) {
            return SeriesResult {
                kind: SeriesKind::L,
                terms,
                terminated: true,
            };
        }
        let members: Vec<usize> = (0..n)
            .filter(|&x| (0..m).all(|a| current.contains(operator_commutator(act, x, a))))
            .collect();
        debug_assert!(
            current
                .members()
                .iter()
                .all(|&x| members.binary_search(&x).is_ok()),
            "ascending series lost a previous member"
        );
        debug_assert!(
            members.iter().all(|&x| members
                .iter()
                .all(|&y| members.binary_search(&g.mul(x, y)).is_ok())),
            "ascending series term is not closed under multiplication"
        );
        let gens = members[1..].to_vec();
        let next = Subgroup::from_sorted_members(g, members, gens);
        let stalled = next.members() == current.members();
        terms.push(next);
        if stalled {
            return SeriesResult {
                kind: SeriesKind::L,
                terms,
                terminated: false,
            };
        }
    }
}

/// True iff the descending series reaches the trivial subgroup.
pub fn is_r_nilpotent(act: &OperatorAction) -> bool {
    k_series(act).terminated
}

/// Limit of the ascending series under the conjugation action of the
/// group on itself. Equals the whole group exactly for nilpotent groups.
pub fn hypercenter(g: &GroupTable) -> Subgroup {
    l_series(&inner_automorphisms(g)).limit().clone()
}

/// Limit of the ascending series under the full automorphism group,
/// computed with default search limits.
pub fn absolute_hypercenter(g: &GroupTable) -> Result<Subgroup, Error> {
    absolute_hypercenter_with(g, AutLimits::default())
}

/// As [`absolute_hypercenter`], with explicit automorphism search limits.
pub fn absolute_hypercenter_with(g: &GroupTable, limits: AutLimits) -> Result<Subgroup, Error> {
    let aut = automorphism_group_with(g, limits)?;
    Ok(l_series(&aut).limit().clone())
}

/// A strictly descending chain of subgroups from the whole group to the
/// trivial one, as produced by a terminated descending series.
#[derive(Debug, Clone)]
pub struct StabilizedChain {
    terms: Vec<Subgroup>,
}

impl StabilizedChain {
    /// Wrap explicit terms; nothing is verified here, that is the job of
    /// [`verify_chain_stabilized`].
    pub fn new(terms: Vec<Subgroup>) -> StabilizedChain {
        StabilizedChain { terms }
    }

    /// Terms from the whole group down to the trivial subgroup.
    pub fn terms(&self) -> &[Subgroup] {
        &self.terms
    }

    pub fn link_count(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }
}

/// If the descending series of `act` terminates, its terms (consecutive
/// duplicates collapsed) form a chain the operators stabilize; otherwise
/// None.
pub fn build_stabilized_chain(act: &OperatorAction) -> Option<StabilizedChain> {
    let series = k_series(act);
    if !series.terminated {
        return None;
    }
    let mut terms: Vec<Subgroup> = Vec::with_capacity(series.terms.len());
    for term in series.terms {
        if terms
            .last()
            .map(|t: &Subgroup| t.members() == term.members())
            != Some(true)
        {
            terms.push(term);
        }
    }
    Some(StabilizedChain { terms })
}

/// Why a chain failed verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainFailure {
    /// Conjugating `member` of term link+1 by `conjugator` from term link
    /// leaves term link+1.
    NotNormal {
        link: usize,
        member: usize,
        conjugator: usize,
    },
    /// `operator` moves `element` of term link out of its coset modulo
    /// term link+1.
    CosetMoved {
        link: usize,
        element: usize,
        operator: usize,
    },
}

/// Outcome of chain verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainCheck {
    /// Every link passed: each term is normal in its predecessor and the
    /// operators fix all cosets. `normal_in_whole` additionally reports
    /// whether every term is normal in the whole group, a stronger
    /// condition that is not required.
    Stabilized {
        normal_in_whole: bool,
    },
    Failed(ChainFailure),
}

impl ChainCheck {
    pub fn is_stabilized(&self) -> bool {
        matches!(self, ChainCheck::Stabilized { .. })
    }
}

/// Check that the operators stabilize the chain: every term normal in its
/// predecessor, and x^α ∈ x·(next term) for every x in a term and every
/// operator α. Malformed chains (not strictly descending from the whole
/// group to the trivial subgroup) are errors, not failures.
pub fn verify_chain_stabilized(
    act: &OperatorAction,
    chain: &StabilizedChain,
) -> Result<ChainCheck, Error> {
    let g = act.target();
    let malformed = |detail: alloc::string::String| Error::InvalidArgument {
        what: "subgroup chain",
        detail,
    };
    if chain.terms.is_empty() {
        return Err(malformed("chain has no terms".into()));
    }
    for t in &chain.terms {
        if t.parent_id() != g.id() {
            return Err(malformed("chain term belongs to a different group".into()));
        }
    }
    if !chain.terms[0].is_whole(g) {
        return Err(malformed("chain does not start at the whole group".into()));
    }
    if !chain.terms.last().expect("nonempty").is_trivial() {
        return Err(malformed(
            "chain does not end at the trivial subgroup".into(),
        ));
    }
    for (i, pair) in chain.terms.windows(2).enumerate() {
        let (upper, lower) = (&pair[0], &pair[1]);
        if lower.order() >= upper.order() || lower.members().iter().any(|&x| !upper.contains(x)) {
            return Err(malformed(alloc::format!(
                "term {} does not strictly contain term {}",
                i,
                i + 1
            )));
        }
    }
    for (link, pair) in chain.terms.windows(2).enumerate() {
        let (upper, lower) = (&pair[0], &pair[1]);
        for &x in upper.members() {
            for &m in lower.members() {
                if !lower.contains(g.conjugate(m, x)) {
                    return Ok(ChainCheck::Failed(ChainFailure::NotNormal {
                        link,
                        member: m,
                        conjugator: x,
                    }));
                }
            }
        }
        for &x in upper.members() {
            for a in 0..act.operator_count() {
                if !lower.contains(operator_commutator(act, x, a)) {
                    return Ok(ChainCheck::Failed(ChainFailure::CosetMoved {
                        link,
                        element: x,
                        operator: a,
                    }));
                }
            }
        }
    }
    let normal_in_whole = chain.terms.iter().all(|t| crate::subgroup::is_normal(g, t));
    Ok(ChainCheck::Stabilized { normal_in_whole })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::subgroup_conjugation_action;
    use crate::group::GroupTable;
    use crate::subgroup::{fitting_subgroup, is_normal};

    #[test]
    fn commutator_under_inversion() {
        let c4 = GroupTable::cyclic(4).unwrap();
        let aut = automorphism_group(&c4).unwrap();
        // operator 1 is inversion (the only non-identity automorphism)
        assert_eq!(operator_commutator(&aut, 1, 1), 2);
        assert_eq!(operator_commutator(&aut, 1, 0), 0);
        assert_eq!(operator_commutator(&aut, 2, 1), 0); // g² is fixed
        assert_eq!(iterated_commutator(&aut, 1, &[1, 1]), 0);
        assert_eq!(iterated_commutator(&aut, 1, &[]), 1);
    }

    #[test]
    fn descending_series_examples() {
        // trivial action: one commutation step kills everything
        let s3 = GroupTable::symmetric(3).unwrap();
        let trivial_act = subgroup_conjugation_action(&s3, &Subgroup::trivial(&s3));
        let series = k_series(&trivial_act);
        assert_eq!(series.term_orders(), vec![6, 1]);
        assert!(series.terminated);

        // inner action on S3 stalls at the order-3 subgroup
        let inn = inner_automorphisms(&s3);
        let series = k_series(&inn);
        assert_eq!(series.term_orders(), vec![6, 3, 3]);
        assert!(!series.terminated);
        assert_eq!(series.limit().order(), 3);

        // full automorphisms of C4 wipe it out in two steps
        let c4 = GroupTable::cyclic(4).unwrap();
        let aut = automorphism_group(&c4).unwrap();
        let series = k_series(&aut);
        assert_eq!(series.term_orders(), vec![4, 2, 1]);
        assert!(series.terminated);
    }

    #[test]
    fn ascending_series_examples() {
        let s3 = GroupTable::symmetric(3).unwrap();
        let trivial_act = subgroup_conjugation_action(&s3, &Subgroup::trivial(&s3));
        let series = l_series(&trivial_act);
        assert_eq!(series.term_orders(), vec![1, 6]);
        assert!(series.terminated);

        let c4 = GroupTable::cyclic(4).unwrap();
        let aut = automorphism_group(&c4).unwrap();
        let series = l_series(&aut);
        assert_eq!(series.term_orders(), vec![1, 2, 4]);
        assert!(series.terminated);

        // inversion on C3 fixes only the identity: immediate stall
        let c3 = GroupTable::cyclic(3).unwrap();
        let aut = automorphism_group(&c3).unwrap();
        let series = l_series(&aut);
        assert_eq!(series.term_orders(), vec![1, 1]);
        assert!(!series.terminated);
        assert!(series.limit().is_trivial());
    }

    #[test]
    fn duality_of_the_two_series() {
        let groups = [
            GroupTable::cyclic(8).unwrap(),
            GroupTable::symmetric(3).unwrap(),
            GroupTable::quaternion8(),
            GroupTable::dihedral(8).unwrap(),
            GroupTable::cyclic(6).unwrap(),
        ];
        for g in &groups {
            let aut = automorphism_group(g).unwrap();
            let k = k_series(&aut);
            let l = l_series(&aut);
            assert_eq!(
                k.terminated,
                l.terminated,
                "series duality violated for {}",
                g.name()
            );
            assert_eq!(l.terminated, l.limit().is_whole(g));
            if k.terminated && l.terminated {
                // with n the descending terminating index, K_i sits inside
                // L_{n-i}; the ascending series cannot take longer than n
                let n = k.terms.len() - 1;
                let t = l.terms.len() - 1;
                assert!(t <= n, "ascending series outlasted the descending one");
                for (i, term) in k.terms.iter().enumerate() {
                    let j = n - i;
                    if j <= t {
                        let dual = &l.terms[j];
                        assert!(term.members().iter().all(|&x| dual.contains(x)));
                    }
                    // beyond index t the ascending term is the whole group
                }
            }
        }
    }

    #[test]
    fn every_group_is_nilpotent_over_its_fitting_subgroup() {
        for g in [
            GroupTable::symmetric(3).unwrap(),
            GroupTable::symmetric(4).unwrap(),
            GroupTable::dihedral(12).unwrap(),
            GroupTable::quaternion8(),
        ] {
            let f = fitting_subgroup(&g).unwrap();
            let act = subgroup_conjugation_action(&g, &f);
            assert!(is_r_nilpotent(&act), "{}", g.name());
        }
    }

    #[test]
    fn hypercenter_examples() {
        let s3 = GroupTable::symmetric(3).unwrap();
        assert!(hypercenter(&s3).is_trivial());

        let d8 = GroupTable::dihedral(8).unwrap();
        assert!(hypercenter(&d8).is_whole(&d8)); // nilpotent

        let c6 = GroupTable::cyclic(6).unwrap();
        let mixed = GroupTable::direct_product(&c6, &s3).unwrap();
        let z = hypercenter(&mixed);
        assert_eq!(z.order(), 6);
        // the hypercenter here is exactly the C6 factor: pairs (a, e),
        // which the product construction places at indices a·|S3|
        let c6_factor: Vec<usize> = (0..6).map(|a| a * 6).collect();
        assert_eq!(z.members(), c6_factor);
    }

    #[test]
    fn absolute_hypercenter_examples() {
        let c1 = GroupTable::cyclic(1).unwrap();
        assert!(absolute_hypercenter(&c1).unwrap().is_whole(&c1));

        let c4 = GroupTable::cyclic(4).unwrap();
        assert!(absolute_hypercenter(&c4).unwrap().is_whole(&c4));

        let q8 = GroupTable::quaternion8();
        let l = absolute_hypercenter(&q8).unwrap();
        assert_eq!(l.order(), 2); // stalls at the center

        let big = GroupTable::cyclic(300).unwrap();
        assert!(absolute_hypercenter(&big).is_err());
    }

    #[test]
    fn chains_from_terminated_series() {
        let c4 = GroupTable::cyclic(4).unwrap();
        let aut = automorphism_group(&c4).unwrap();
        let chain = build_stabilized_chain(&aut).expect("series terminates");
        assert_eq!(
            chain.terms().iter().map(|t| t.order()).collect::<Vec<_>>(),
            vec![4, 2, 1]
        );
        match verify_chain_stabilized(&aut, &chain).unwrap() {
            ChainCheck::Stabilized { normal_in_whole } => assert!(normal_in_whole),
            other => panic!("unexpected: {other:?}"),
        }

        let s3 = GroupTable::symmetric(3).unwrap();
        let aut = automorphism_group(&s3).unwrap();
        assert!(build_stabilized_chain(&aut).is_none());

        let trivial_act = subgroup_conjugation_action(&s3, &Subgroup::trivial(&s3));
        let chain = build_stabilized_chain(&trivial_act).expect("trivial action stabilizes");
        assert_eq!(chain.link_count(), 1);
        assert!(verify_chain_stabilized(&trivial_act, &chain)
            .unwrap()
            .is_stabilized());
    }

    #[test]
    fn chain_verification_catches_moved_cosets() {
        use crate::subgroup::generated_subgroup;
        let s3 = GroupTable::symmetric(3).unwrap();
        let aut = automorphism_group(&s3).unwrap();
        let three_cycle = (0..6).find(|&x| s3.element_order(x) == 3).unwrap();
        let a3 = generated_subgroup(&s3, &[three_cycle]);
        let chain = StabilizedChain::new(vec![
            Subgroup::whole(&s3),
            a3.clone(),
            Subgroup::trivial(&s3),
        ]);
        match verify_chain_stabilized(&aut, &chain).unwrap() {
            ChainCheck::Failed(ChainFailure::CosetMoved { link, element, .. }) => {
                assert_eq!(link, 1);
                assert!(a3.contains(element));
            }
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn malformed_chains_are_errors() {
        let s3 = GroupTable::symmetric(3).unwrap();
        let aut = automorphism_group(&s3).unwrap();
        // missing trivial tail
        let chain = StabilizedChain::new(vec![Subgroup::whole(&s3)]);
        assert!(verify_chain_stabilized(&aut, &chain).is_err());
        // does not start at the whole group
        let chain = StabilizedChain::new(vec![Subgroup::trivial(&s3)]);
        assert!(verify_chain_stabilized(&aut, &chain).is_err());
        // not strictly descending
        let chain = StabilizedChain::new(vec![
            Subgroup::whole(&s3),
            Subgroup::whole(&s3),
            Subgroup::trivial(&s3),
        ]);
        assert!(verify_chain_stabilized(&aut, &chain).is_err());
    }

    #[test]
    fn ascending_terms_are_normal_under_full_aut() {
        use crate::aut::inner_normalizes_image;
        for g in [
            GroupTable::quaternion8(),
            GroupTable::dihedral(8).unwrap(),
            GroupTable::symmetric(4).unwrap(),
        ] {
            let aut = automorphism_group(&g).unwrap();
            assert!(inner_normalizes_image(&g, &aut));
            for term in &l_series(&aut).terms {
                assert!(is_normal(&g, term), "{}", g.name());
            }
        }
    }
}
