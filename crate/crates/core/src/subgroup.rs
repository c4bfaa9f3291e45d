//! Subgroup machinery: closures, normality, Sylow subgroups, exhaustive
//! enumeration, maximal/Frattini/Fitting subgroups, quotients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::{format, vec, vec::Vec};

use crate::error::Error;
use crate::group::{is_power_of, p_part, GroupId, GroupTable};
use crate::search::greedy_generators;

/// Hard ceiling on distinct subgroups produced by enumeration.
const SUBGROUP_COUNT_CAP: usize = 100_000;
/// Work budget for enumeration, counted in closure elements emitted.
const ENUMERATION_WORK_CAP: usize = 500_000_000;

/// A subgroup of a [`GroupTable`], stored as a sorted member list.
///
/// Carries the parent's identity token; operations panic if a subgroup is
/// used with a table it does not belong to. Also carries a generating set
/// so further closures do not have to restart from the full member list.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: GroupId,
    members: Vec<usize>,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub(crate) fn from_sorted_members(
        g: &GroupTable,
        members: Vec<usize>,
        generators: Vec<usize>,
    ) -> Subgroup {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(members.first(), Some(&0));
        debug_assert_eq!(
            g.order() % members.len(),
            0,
            "member count violates Lagrange"
        );
        Subgroup {
            parent: g.id(),
            members,
            generators,
        }
    }

    pub fn trivial(g: &GroupTable) -> Subgroup {
        Subgroup::from_sorted_members(g, vec![0], Vec::new())
    }

    pub fn whole(g: &GroupTable) -> Subgroup {
        let gens = greedy_generators(g);
        Subgroup::from_sorted_members(g, (0..g.order()).collect(), gens)
    }

    pub fn parent_id(&self) -> GroupId {
        self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// Member indices, sorted ascending. The identity is always first.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// A generating set (not necessarily minimal; empty for the trivial
    /// subgroup).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self, g: &GroupTable) -> bool {
        self.check_parent(g);
        self.members.len() == g.order()
    }

    pub(crate) fn check_parent(&self, g: &GroupTable) {
        assert_eq!(
            self.parent,
            g.id(),
            "subgroup belongs to a different group table"
        );
    }
}

/// Members of the least subgroup containing `seed`, sorted ascending.
///
/// Right-multiplication closure: in a finite group the positive words in
/// the seed already contain all inverses.
pub(crate) fn close_members(g: &GroupTable, seed: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut in_set = vec![false; n];
    in_set[0] = true;
    let mut queue = vec![0usize];
    for &s in seed {
        assert!(s < n, "element index {s} out of range for {}", g.name());
        if !in_set[s] {
            in_set[s] = true;
            queue.push(s);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for &s in seed {
            let v = g.mul(u, s);
            if !in_set[v] {
                in_set[v] = true;
                queue.push(v);
            }
        }
    }
    queue.sort_unstable();
    queue
}

/// Least subgroup of `g` containing `seed`. The empty seed gives the
/// trivial subgroup.
pub fn generated_subgroup(g: &GroupTable, seed: &[usize]) -> Subgroup {
    let members = close_members(g, seed);
    let generators: Vec<usize> = seed.iter().copied().filter(|&s| s != 0).collect();
    Subgroup::from_sorted_members(g, members, generators)
}

/// True iff h^x = h for every x in g.
pub fn is_normal(g: &GroupTable, h: &Subgroup) -> bool {
    first_non_normalizing(g, h).is_none()
}

/// First element (ascending) that fails to normalize h, if any.
pub(crate) fn first_non_normalizing(g: &GroupTable, h: &Subgroup) -> Option<usize> {
    h.check_parent(g);
    (0..g.order()).find(|&x| h.members.iter().any(|&m| !h.contains(g.conjugate(m, x))))
}

/// The center {x : xy = yx for all y}.
pub fn center(g: &GroupTable) -> Subgroup {
    let members: Vec<usize> = (0..g.order())
        .filter(|&x| (0..g.order()).all(|y| g.mul(x, y) == g.mul(y, x)))
        .collect();
    let gens = members[1..].to_vec();
    Subgroup::from_sorted_members(g, members, gens)
}

/// {x : h^x = h}, the largest subgroup in which h is normal.
pub fn normalizer(g: &GroupTable, h: &Subgroup) -> Subgroup {
    h.check_parent(g);
    let members: Vec<usize> = (0..g.order())
        .filter(|&x| h.members.iter().all(|&m| h.contains(g.conjugate(m, x))))
        .collect();
    let gens = members[1..].to_vec();
    Subgroup::from_sorted_members(g, members, gens)
}

/// {x : conjugation by x fixes every member of h}.
pub fn centralizer(g: &GroupTable, h: &Subgroup) -> Subgroup {
    h.check_parent(g);
    let members: Vec<usize> = (0..g.order())
        .filter(|&x| h.members.iter().all(|&m| g.conjugate(m, x) == m))
        .collect();
    let gens = members[1..].to_vec();
    Subgroup::from_sorted_members(g, members, gens)
}

/// A Sylow p-subgroup, or the trivial subgroup when p does not divide |G|.
///
/// Normalizer growth: start from a cyclic subgroup of p-power order and
/// repeatedly adjoin the lowest-index p-power-order normalizer element
/// outside the current subgroup. Each step stays inside a p-group and
/// strictly grows, so the full p-part is always reached.
pub fn sylow_subgroup(g: &GroupTable, p: usize) -> Subgroup {
    let target = p_part(g.order(), p);
    if target == 1 {
        return Subgroup::trivial(g);
    }
    let seed = (1..g.order())
        .find(|&x| is_power_of(g.element_order(x), p))
        .expect("Cauchy guarantees an element of order p");
    let mut gens = vec![seed];
    let mut current = generated_subgroup(g, &gens);
    while current.order() < target {
        let norm = normalizer(g, &current);
        let next = norm
            .members()
            .iter()
            .copied()
            .find(|&y| !current.contains(y) && is_power_of(g.element_order(y), p))
            .expect("normalizer growth stalled below the full p-part");
        gens.push(next);
        current = generated_subgroup(g, &gens);
        debug_assert!(is_power_of(current.order(), p));
    }
    debug_assert_eq!(current.order(), target);
    current
}

/// All subgroups of g, each exactly once, sorted by (order, member set).
///
/// Levelwise generator growth: every subgroup found so far is extended by
/// every outside element and the closure is deduplicated by member set.
/// A subgroup of a group of order n needs at most log_p n generators
/// (p the smallest prime divisor), so `max_gen` levels with
/// p^max_gen ≥ n are exhaustive; `None` picks that default.
pub fn enumerate_subgroups(g: &GroupTable, max_gen: Option<usize>) -> Result<Vec<Subgroup>, Error> {
    let n = g.order();
    let max_gen = max_gen.unwrap_or_else(|| {
        let p = *g.prime_divisors().first().unwrap_or(&2);
        let mut k = 0;
        let mut reach = 1usize;
        while reach < n {
            reach = reach.saturating_mul(p);
            k += 1;
        }
        k
    });
    // member set -> generating set
    let mut known: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    known.insert(vec![0], Vec::new());
    let mut frontier: Vec<(Vec<usize>, Vec<usize>)> = vec![(vec![0], Vec::new())];
    let mut work: usize = 0;
    for _ in 0..max_gen {
        let mut next_frontier = Vec::new();
        for (members, gens) in &frontier {
            for x in 1..n {
                if members.binary_search(&x).is_ok() {
                    continue;
                }
                let mut seed = gens.clone();
                seed.push(x);
                let closed = close_members(g, &seed);
                work += closed.len();
                if work > ENUMERATION_WORK_CAP {
                    return Err(Error::SizeExceeded {
                        what: "subgroup enumeration work",
                        value: work,
                        cap: ENUMERATION_WORK_CAP,
                    });
                }
                if !known.contains_key(&closed) {
                    if known.len() >= SUBGROUP_COUNT_CAP {
                        return Err(Error::SizeExceeded {
                            what: "subgroup count",
                            value: known.len() + 1,
                            cap: SUBGROUP_COUNT_CAP,
                        });
                    }
                    known.insert(closed.clone(), seed.clone());
                    next_frontier.push((closed, seed));
                }
            }
        }
        if next_frontier.is_empty() {
            break;
        }
        frontier = next_frontier;
    }
    let mut out: Vec<Subgroup> = known
        .into_iter()
        .map(|(members, gens)| Subgroup::from_sorted_members(g, members, gens))
        .collect();
    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.members.cmp(&b.members))
    });
    Ok(out)
}

/// Subgroups of p-power order (the trivial subgroup counts for every p),
/// in the same order as [`enumerate_subgroups`].
pub fn p_subgroups(g: &GroupTable, p: usize) -> Result<Vec<Subgroup>, Error> {
    let all = enumerate_subgroups(g, None)?;
    Ok(all
        .into_iter()
        .filter(|h| is_power_of(h.order(), p))
        .collect())
}

/// Proper subgroups maximal under inclusion, sorted by (order, member set).
pub fn maximal_subgroups(g: &GroupTable) -> Result<Vec<Subgroup>, Error> {
    let all = enumerate_subgroups(g, None)?;
    let proper: Vec<&Subgroup> = all.iter().filter(|h| h.order() < g.order()).collect();
    let is_contained = |a: &Subgroup, b: &Subgroup| a.members.iter().all(|&m| b.contains(m));
    Ok(proper
        .iter()
        .filter(|h| {
            !proper
                .iter()
                .any(|k| k.order() > h.order() && is_contained(h, k))
        })
        .map(|h| (*h).clone())
        .collect())
}

/// Intersection of all maximal subgroups (the whole group when there are
/// none, which happens only for the trivial group).
pub fn frattini_subgroup(g: &GroupTable) -> Result<Subgroup, Error> {
    let maximals = maximal_subgroups(g)?;
    let mut members: Vec<usize> = (0..g.order()).collect();
    for m in &maximals {
        members.retain(|&x| m.contains(x));
    }
    let gens = members[1..].to_vec();
    Ok(Subgroup::from_sorted_members(g, members, gens))
}

/// The largest normal nilpotent subgroup, computed as the join of the
/// p-cores (largest normal p-subgroups) over the primes dividing |G|.
pub fn fitting_subgroup(g: &GroupTable) -> Result<Subgroup, Error> {
    let all = enumerate_subgroups(g, None)?;
    let mut seed: Vec<usize> = Vec::new();
    for &p in &g.prime_divisors() {
        // the join of all normal p-subgroups is the p-core
        for h in &all {
            if is_power_of(h.order(), p) && is_normal(g, h) {
                seed.extend_from_slice(h.members());
            }
        }
    }
    seed.sort_unstable();
    seed.dedup();
    let fitting = generated_subgroup(g, &seed);
    debug_assert!(is_normal(g, &fitting));
    Ok(fitting)
}

/// True iff every Sylow subgroup is normal.
pub fn is_nilpotent(g: &GroupTable) -> bool {
    g.prime_divisors()
        .iter()
        .all(|&p| is_normal(g, &sylow_subgroup(g, p)))
}

/// A quotient group together with the projection onto coset indices.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: GroupTable,
    /// projection[x] = index of the coset xN; projection[0] = 0.
    pub projection: Vec<usize>,
}

/// The quotient g/n. Fails with the offending conjugator when n is not
/// normal. The coset of the identity gets index 0.
pub fn quotient(g: &GroupTable, n: &Subgroup) -> Result<Quotient, Error> {
    n.check_parent(g);
    if let Some(witness) = first_non_normalizing(g, n) {
        return Err(Error::NotNormal { witness });
    }
    let order = g.order() / n.order();
    let mut projection = vec![usize::MAX; g.order()];
    let mut reps: Vec<usize> = Vec::with_capacity(order);
    for x in 0..g.order() {
        if projection[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x);
        for &m in n.members() {
            projection[g.mul(x, m)] = idx;
        }
    }
    debug_assert_eq!(reps.len(), order);
    let mut table = Vec::with_capacity(order * order);
    for &a in &reps {
        for &b in &reps {
            table.push(projection[g.mul(a, b)] as u32);
        }
    }
    let names = reps
        .iter()
        .map(|&r| format!("[{}]", g.element_label(r)))
        .collect();
    let group = GroupTable::from_flat(
        format!("{}/N{}", g.name(), n.order()),
        order,
        table,
        Some(names),
    );
    Ok(Quotient { group, projection })
}

/// A subgroup as a standalone group table, re-indexed to 0..|h|−1 in member
/// order (so the identity keeps index 0). Returns the table and the list
/// mapping new indices back to parent elements.
pub fn subgroup_group(g: &GroupTable, h: &Subgroup) -> (GroupTable, Vec<usize>) {
    h.check_parent(g);
    let members = h.members().to_vec();
    let index_of = |x: usize| members.binary_search(&x).expect("closure violated") as u32;
    let k = members.len();
    let mut table = Vec::with_capacity(k * k);
    for &a in &members {
        for &b in &members {
            table.push(index_of(g.mul(a, b)));
        }
    }
    let names: Vec<String> = members.iter().map(|&m| g.element_label(m)).collect();
    let name = format!("{}:sub{}", g.name(), k);
    (GroupTable::from_flat(name, k, table, Some(names)), members)
}
