//! Automorphism groups, inner automorphisms, and operator-group actions.
//!
//! Composition convention, fixed here once for the whole crate:
//! (α∘β) applies β first, then α. Operator tables are built so that the
//! product a·b in the operator group acts as map(a)∘map(b).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::error::Error;
use crate::group::{gcd, is_power_of, GroupId, GroupTable};
use crate::search::{all_automorphisms, greedy_generators};
use crate::subgroup::{subgroup_group, Subgroup};

/// Size limits for the automorphism search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AutLimits {
    /// Largest group order the backtracking search will accept.
    pub max_group_order: usize,
    /// Largest number of automorphisms that may be collected; the operator
    /// table is quadratic in this count, so it is capped separately.
    pub max_operator_count: usize,
}

impl Default for AutLimits {
    fn default() -> Self {
        AutLimits {
            max_group_order: 256,
            max_operator_count: 5000,
        }
    }
}

/// A single automorphism of a group table, stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    parent: GroupId,
    images: Vec<u32>,
}

impl Automorphism {
    /// Validate an image array as an automorphism of g.
    pub fn try_new(g: &GroupTable, images: Vec<usize>) -> Result<Automorphism, Error> {
        let n = g.order();
        let fail = |detail: alloc::string::String| Error::InvalidArgument {
            what: "automorphism images",
            detail,
        };
        if images.len() != n {
            return Err(fail(format!("expected {n} images, got {}", images.len())));
        }
        let mut seen = vec![false; n];
        for (x, &v) in images.iter().enumerate() {
            if v >= n {
                return Err(fail(format!("image {v} of {x} out of range")));
            }
            if seen[v] {
                return Err(fail(format!("image {v} repeats")));
            }
            seen[v] = true;
        }
        if images[0] != 0 {
            return Err(fail("identity is not fixed".into()));
        }
        for a in 0..n {
            for b in 0..n {
                if images[g.mul(a, b)] != g.mul(images[a], images[b]) {
                    return Err(fail(format!("not multiplicative at ({a}, {b})")));
                }
            }
        }
        Ok(Automorphism {
            parent: g.id(),
            images: images.into_iter().map(|v| v as u32).collect(),
        })
    }

    pub(crate) fn from_row(parent: GroupId, row: &[u32]) -> Automorphism {
        Automorphism {
            parent,
            images: row.to_vec(),
        }
    }

    pub fn parent_id(&self) -> GroupId {
        self.parent
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(x, &v)| v as usize == x)
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize).collect()
    }
}

/// An abstract operator group together with its action on a target group:
/// every operator element carries an automorphism of the target, and the
/// assignment is a homomorphism. The kernel (operators acting as the
/// identity) is exactly the centralizer of the target in the operator
/// group, so a faithful action has a trivial kernel.
#[derive(Debug, Clone)]
pub struct OperatorAction {
    target: GroupTable,
    operators: GroupTable,
    maps: Vec<Vec<u32>>,
}

impl OperatorAction {
    /// Validate and assemble an action. Checks shape, that every map is an
    /// automorphism of `target`, and the homomorphism law on a generating
    /// set of the target (maps agreeing on generators agree everywhere).
    pub fn try_new(
        target: &GroupTable,
        operators: GroupTable,
        maps: Vec<Vec<u32>>,
    ) -> Result<OperatorAction, Error> {
        let m = operators.order();
        let fail = |detail: alloc::string::String| Error::InvalidArgument {
            what: "operator action",
            detail,
        };
        if maps.len() != m {
            return Err(fail(format!("{m} operators but {} maps", maps.len())));
        }
        for (a, row) in maps.iter().enumerate() {
            let images: Vec<usize> = row.iter().map(|&v| v as usize).collect();
            Automorphism::try_new(target, images)
                .map_err(|e| fail(format!("operator {a}: {e}")))?;
        }
        if maps[0].iter().enumerate().any(|(x, &v)| v as usize != x) {
            return Err(fail("identity operator does not act trivially".into()));
        }
        let gens = greedy_generators(target);
        for a in 0..m {
            for b in 0..m {
                let ab = operators.mul(a, b);
                for &x in &gens {
                    // product acts as: apply b, then a
                    if maps[ab][x] != maps[a][maps[b][x] as usize] {
                        return Err(fail(format!(
                            "action of operator product ({a}·{b}) differs from composition at {x}"
                        )));
                    }
                }
            }
        }
        Ok(OperatorAction {
            target: target.clone(),
            operators,
            maps,
        })
    }

    /// The group being acted on.
    pub fn target(&self) -> &GroupTable {
        &self.target
    }

    /// The abstract operator group (multiplication = composition).
    pub fn operators(&self) -> &GroupTable {
        &self.operators
    }

    pub fn operator_count(&self) -> usize {
        self.operators.order()
    }

    /// x under the automorphism carried by operator a.
    #[inline]
    pub fn apply(&self, a: usize, x: usize) -> usize {
        self.maps[a][x] as usize
    }

    pub fn automorphism(&self, a: usize) -> Automorphism {
        Automorphism::from_row(self.target.id(), &self.maps[a])
    }

    /// Operators acting as the identity map, as a subgroup of the operator
    /// group. Empty kernel list cannot happen: the identity operator is
    /// always a member.
    pub fn kernel(&self) -> Subgroup {
        let members: Vec<usize> = (0..self.operator_count())
            .filter(|&a| {
                self.maps[a]
                    .iter()
                    .enumerate()
                    .all(|(x, &v)| v as usize == x)
            })
            .collect();
        let gens = members[1..].to_vec();
        Subgroup::from_sorted_members(&self.operators, members, gens)
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub(crate) fn check_target(&self, g: &GroupTable) {
        assert_eq!(
            self.target.id(),
            g.id(),
            "action belongs to a different group table"
        );
    }
}

/// True iff |g| is a power of p (the trivial group counts for every p).
pub fn is_p_group(g: &GroupTable, p: usize) -> bool {
    is_power_of(g.order(), p)
}

/// Aut(g) under the default limits. See [`automorphism_group_with`].
pub fn automorphism_group(g: &GroupTable) -> Result<OperatorAction, Error> {
    automorphism_group_with(g, AutLimits::default())
}

/// The full automorphism group of g as an operator action: backtracking
/// over generator images collects every automorphism, then the composition
/// table over the collected maps becomes the abstract operator group.
/// Deterministic: maps are sorted lexicographically, so the identity is
/// operator 0.
pub fn automorphism_group_with(g: &GroupTable, limits: AutLimits) -> Result<OperatorAction, Error> {
    if g.order() > limits.max_group_order {
        return Err(Error::SizeExceeded {
            what: "automorphism search group order",
            value: g.order(),
            cap: limits.max_group_order,
        });
    }
    let maps = all_automorphisms(g, limits.max_operator_count)?;
    let m = maps.len();
    let gens = greedy_generators(g);
    // An automorphism is determined by its generator images, so generator
    // image tuples index the collected maps during table construction.
    assert!(
        gens.len() <= 16,
        "generator set too large for composition keys"
    );
    let mut keyed: BTreeMap<[u32; 16], u32> = BTreeMap::new();
    for (i, map) in maps.iter().enumerate() {
        let mut key = [0u32; 16];
        for (slot, &x) in gens.iter().enumerate() {
            key[slot] = map[x];
        }
        if keyed.insert(key, i as u32).is_some() {
            unreachable!("two distinct automorphisms share generator images");
        }
    }
    let mut table = Vec::with_capacity(m * m);
    for map_a in &maps {
        for map_b in &maps {
            let mut key = [0u32; 16];
            for (slot, &x) in gens.iter().enumerate() {
                key[slot] = map_a[map_b[x] as usize];
            }
            let idx = *keyed
                .get(&key)
                .expect("collected automorphisms are not closed under composition");
            table.push(idx);
        }
    }
    let operators = GroupTable::from_flat(format!("Aut({})", g.name()), m, table, None);
    OperatorAction::try_new(g, operators, maps)
}

/// The conjugation action of g on itself. The operator group is an
/// abstract copy of g (not the faithful quotient); the kernel of the
/// action is exactly the center.
pub fn inner_automorphisms(g: &GroupTable) -> OperatorAction {
    let n = g.order();
    let mut maps = Vec::with_capacity(n);
    for a in 0..n {
        // operator a sends x to a·x·a⁻¹, so that operator products act as
        // composition in this crate's apply-right-first convention
        let row: Vec<u32> = (0..n)
            .map(|x| g.mul(g.mul(a, x), g.inv(a)) as u32)
            .collect();
        maps.push(row);
    }
    let operators = g.with_fresh_id().with_name(&format!("Inn[{}]", g.name()));
    OperatorAction::try_new(g, operators, maps)
        .expect("conjugation action is a homomorphism by construction")
}

/// The conjugation action of a subgroup h on the whole of g. The operator
/// group is h's standalone table, so the action is faithful exactly when
/// h meets the center trivially.
pub fn subgroup_conjugation_action(g: &GroupTable, h: &Subgroup) -> OperatorAction {
    h.check_parent(g);
    let (ops, members) = subgroup_group(g, h);
    let ops = ops.with_name(&format!("Conj[{} on {}]", members.len(), g.name()));
    let maps: Vec<Vec<u32>> = members
        .iter()
        .map(|&a| {
            (0..g.order())
                .map(|x| g.mul(g.mul(a, x), g.inv(a)) as u32)
                .collect()
        })
        .collect();
    OperatorAction::try_new(g, ops, maps)
        .expect("conjugation action is a homomorphism by construction")
}

/// The subgroup of `act`'s operator group acting by conjugation: all
/// operators whose map equals some conjugation map of g. Returns None
/// when some conjugation map is not among the operators' images (then
/// Inn g is not contained in the action's image and theorems assuming it
/// do not apply). For a non-faithful action this is the full preimage,
/// kernel included.
pub fn inner_subaction_of_aut(g: &GroupTable, act: &OperatorAction) -> Option<Subgroup> {
    act.check_target(g);
    let image: BTreeSet<&[u32]> = act.maps.iter().map(|m| m.as_slice()).collect();
    let mut conjugations: BTreeSet<Vec<u32>> = BTreeSet::new();
    for a in 0..g.order() {
        let conj: Vec<u32> = (0..g.order())
            .map(|x| g.mul(g.mul(a, x), g.inv(a)) as u32)
            .collect();
        if !image.contains(conj.as_slice()) {
            return None;
        }
        conjugations.insert(conj);
    }
    let members: Vec<usize> = (0..act.operator_count())
        .filter(|&i| conjugations.contains(&act.maps[i]))
        .collect();
    let gens = members[1..].to_vec();
    Some(Subgroup::from_sorted_members(&act.operators, members, gens))
}

/// True iff every conjugation map of g normalizes the action's image
/// inside Aut(g): conj⁻¹ ∘ map ∘ conj is again an action image for every
/// element and operator. Trivially true when the action contains Inn(g)
/// with a normal image, e.g. for the full automorphism group.
pub fn inner_normalizes_image(g: &GroupTable, act: &OperatorAction) -> bool {
    act.check_target(g);
    let image: alloc::collections::BTreeSet<&[u32]> =
        act.maps.iter().map(|m| m.as_slice()).collect();
    for a in 0..g.order() {
        let conj: Vec<usize> = (0..g.order())
            .map(|x| g.mul(g.mul(a, x), g.inv(a)))
            .collect();
        let conj_inv: Vec<usize> = {
            let mut inv = vec![0usize; g.order()];
            for (x, &v) in conj.iter().enumerate() {
                inv[v] = x;
            }
            inv
        };
        for map in &act.maps {
            let composed: Vec<u32> = (0..g.order())
                .map(|x| conj_inv[map[conj[x]] as usize] as u32)
                .collect();
            if !image.contains(composed.as_slice()) {
                return false;
            }
        }
    }
    true
}

/// Operator elements whose order is coprime to p. The identity always
/// qualifies.
pub fn p_prime_elements(act: &OperatorAction, p: usize) -> Vec<usize> {
    (0..act.operator_count())
        .filter(|&a| gcd(act.operators.element_order(a), p) == 1)
        .collect()
}

/// The same operator group acting on an admissible subgroup d, re-indexed
/// to d's standalone table. Rejects a non-admissible d with the first
/// operator that moves it.
pub fn restrict_action(act: &OperatorAction, d: &Subgroup) -> Result<OperatorAction, Error> {
    assert_eq!(
        d.parent_id(),
        act.target.id(),
        "subgroup belongs to a different group table"
    );
    for a in 0..act.operator_count() {
        if d.members().iter().any(|&x| !d.contains(act.apply(a, x))) {
            return Err(Error::NotAdmissible { operator: a });
        }
    }
    let (sub_table, members) = subgroup_group(&act.target, d);
    let index_of = |x: usize| members.binary_search(&x).expect("admissible image") as u32;
    let maps: Vec<Vec<u32>> = (0..act.operator_count())
        .map(|a| members.iter().map(|&x| index_of(act.apply(a, x))).collect())
        .collect();
    OperatorAction::try_new(&sub_table, act.operators.clone(), maps)
}

/// The stabilizer data of a subgroup under an action: which operators keep
/// it invariant, which fix it pointwise, and the faithful induced action
/// on the subgroup.
#[derive(Debug, Clone)]
pub struct StabilizerAction {
    /// Operators a with d^a = d, as a subgroup of the operator group.
    pub normalizer: Subgroup,
    /// Operators fixing d pointwise; normal in `normalizer`.
    pub centralizer: Subgroup,
    /// The quotient normalizer/centralizer acting faithfully on d's
    /// standalone table. Operator 0 is the identity restriction.
    pub induced: OperatorAction,
    /// Parent element of each index of the induced action's target.
    pub target_members: Vec<usize>,
}

/// Compute N(d), C(d) and the induced faithful action on d.
///
/// The induced operator group is built by deduplicating the restrictions
/// of the normalizer's maps, which realizes the quotient N/C directly: two
/// operators restrict equally exactly when they lie in the same coset
/// of C.
pub fn stabilizer_action_on_subgroup(act: &OperatorAction, d: &Subgroup) -> StabilizerAction {
    assert_eq!(
        d.parent_id(),
        act.target.id(),
        "subgroup belongs to a different group table"
    );
    let ops = &act.operators;
    let norm_members: Vec<usize> = (0..act.operator_count())
        .filter(|&a| d.members().iter().all(|&x| d.contains(act.apply(a, x))))
        .collect();
    let cent_members: Vec<usize> = norm_members
        .iter()
        .copied()
        .filter(|&a| d.members().iter().all(|&x| act.apply(a, x) == x))
        .collect();
    let normalizer =
        Subgroup::from_sorted_members(ops, norm_members.clone(), norm_members[1..].to_vec());
    let centralizer =
        Subgroup::from_sorted_members(ops, cent_members.clone(), cent_members[1..].to_vec());
    // centralizer is the kernel of restriction, hence normal in normalizer
    for &x in &norm_members {
        for &c in &cent_members {
            let conj = ops.mul(ops.mul(ops.inv(x), c), x);
            assert!(
                centralizer.contains(conj),
                "restriction kernel not normal in the stabilizer"
            );
        }
    }
    let (sub_table, members) = subgroup_group(&act.target, d);
    let index_of = |x: usize| members.binary_search(&x).expect("invariant image") as u32;
    let mut induced_maps: Vec<Vec<u32>> = Vec::new();
    let mut seen: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
    for &a in &norm_members {
        let restricted: Vec<u32> = members.iter().map(|&x| index_of(act.apply(a, x))).collect();
        if !seen.contains_key(&restricted) {
            seen.insert(restricted.clone(), induced_maps.len() as u32);
            induced_maps.push(restricted);
        }
    }
    let k = induced_maps.len();
    debug_assert_eq!(k * cent_members.len(), norm_members.len());
    let mut table = Vec::with_capacity(k * k);
    for map_a in &induced_maps {
        for map_b in &induced_maps {
            let composed: Vec<u32> = (0..members.len())
                .map(|x| map_a[map_b[x] as usize])
                .collect();
            let idx = *seen
                .get(&composed)
                .expect("induced restrictions are not closed under composition");
            table.push(idx);
        }
    }
    let induced_ops = GroupTable::from_flat(format!("Ind({})", sub_table.name()), k, table, None);
    let induced = OperatorAction::try_new(&sub_table, induced_ops, induced_maps)
        .expect("restriction quotient is a homomorphism by construction");
    debug_assert!(induced.is_faithful());
    StabilizerAction {
        normalizer,
        centralizer,
        induced,
        target_members: members,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroup::{center, generated_subgroup};

    fn element(g: &GroupTable, label: &str) -> usize {
        (0..g.order())
            .find(|&x| g.element_label(x) == label)
            .unwrap_or_else(|| panic!("no element {label}"))
    }

    #[test]
    fn aut_orders_match_known_values() {
        let cases: Vec<(GroupTable, usize)> = vec![
            (GroupTable::cyclic(2).unwrap(), 1),
            (GroupTable::cyclic(4).unwrap(), 2),
            (GroupTable::elementary_abelian(2, 2).unwrap(), 6),
            (GroupTable::quaternion8(), 24),
            (GroupTable::dihedral(8).unwrap(), 8),
            (GroupTable::symmetric(3).unwrap(), 6),
        ];
        for (g, expected) in cases {
            let act = automorphism_group(&g).unwrap();
            assert_eq!(act.operator_count(), expected, "Aut({})", g.name());
            assert!(act.is_faithful());
            act.operators().validate().unwrap();
        }
    }

    #[test]
    fn klein_aut_is_nonabelian() {
        let klein = GroupTable::elementary_abelian(2, 2).unwrap();
        let act = automorphism_group(&klein).unwrap();
        assert_eq!(act.operator_count(), 6);
        assert!(!act.operators().is_abelian());
    }

    #[test]
    fn group_order_cap() {
        let g = GroupTable::cyclic(300).unwrap();
        match automorphism_group(&g) {
            Err(Error::SizeExceeded { cap: 256, .. }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        let relaxed = AutLimits {
            max_group_order: 300,
            ..AutLimits::default()
        };
        assert_eq!(
            automorphism_group_with(&g, relaxed)
                .unwrap()
                .operator_count(),
            80 // totient of 300
        );
    }

    #[test]
    fn operator_count_cap() {
        // Aut of C2^4 has order 20160, far beyond the default cap
        let e16 = GroupTable::elementary_abelian(2, 4).unwrap();
        match automorphism_group(&e16) {
            Err(Error::SizeExceeded { cap: 5000, .. }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn inner_action_shape() {
        let s3 = GroupTable::symmetric(3).unwrap();
        let inn = inner_automorphisms(&s3);
        assert_eq!(inn.operator_count(), 6);
        assert!(inn.is_faithful()); // trivial center
        let q8 = GroupTable::quaternion8();
        let inn = inner_automorphisms(&q8);
        assert_eq!(inn.kernel().members(), center(&q8).members());
        let c6 = GroupTable::cyclic(6).unwrap();
        let inn = inner_automorphisms(&c6);
        assert_eq!(inn.kernel().order(), 6); // abelian: all conjugations trivial
    }

    #[test]
    fn inner_sits_inside_aut() {
        let q8 = GroupTable::quaternion8();
        let aut = automorphism_group(&q8).unwrap();
        let inn = inner_subaction_of_aut(&q8, &aut).expect("Inn is always inside Aut");
        assert_eq!(inn.order(), 4); // 8 / |Z| = 8/2

        let s3 = GroupTable::symmetric(3).unwrap();
        let aut = automorphism_group(&s3).unwrap();
        let inn = inner_subaction_of_aut(&s3, &aut).unwrap();
        assert_eq!(inn.order(), 6); // complete group: Inn = Aut

        let c4 = GroupTable::cyclic(4).unwrap();
        let aut = automorphism_group(&c4).unwrap();
        assert!(inner_subaction_of_aut(&c4, &aut).unwrap().is_trivial());

        assert!(inner_normalizes_image(
            &q8,
            &automorphism_group(&q8).unwrap()
        ));
    }

    #[test]
    fn p_prime_element_census() {
        let q8 = GroupTable::quaternion8();
        let aut = automorphism_group(&q8).unwrap();
        // Aut(Q8) has order 24; elements of order coprime to 2 are the
        // identity and the eight 3-element-order operators
        assert_eq!(p_prime_elements(&aut, 2).len(), 9);
        assert_eq!(p_prime_elements(&aut, 5).len(), 24);

        let c4 = GroupTable::cyclic(4).unwrap();
        let aut = automorphism_group(&c4).unwrap();
        assert_eq!(p_prime_elements(&aut, 3), vec![0, 1]);
        assert_eq!(p_prime_elements(&aut, 2), vec![0]);
    }

    #[test]
    fn p_group_predicate() {
        assert!(is_p_group(&GroupTable::cyclic(1).unwrap(), 7));
        assert!(is_p_group(&GroupTable::dihedral(8).unwrap(), 2));
        assert!(!is_p_group(&GroupTable::symmetric(3).unwrap(), 3));
    }

    #[test]
    fn restriction_and_admissibility() {
        let s3 = GroupTable::symmetric(3).unwrap();
        let aut = automorphism_group(&s3).unwrap();
        let a3 = generated_subgroup(&s3, &[element(&s3, "(1 2 3)")]);
        // A3 is characteristic, so restriction is allowed
        let restricted = restrict_action(&aut, &a3).unwrap();
        assert_eq!(restricted.target().order(), 3);
        assert_eq!(restricted.operator_count(), 6);
        // inner 3-cycles act trivially on the abelian A3: kernel order 3
        assert_eq!(restricted.kernel().order(), 3);

        // an order-2 subgroup is moved by some automorphism
        let flip = generated_subgroup(&s3, &[element(&s3, "(1 2)")]);
        match restrict_action(&aut, &flip) {
            Err(Error::NotAdmissible { .. }) => {}
            other => panic!("unexpected: {other:?}"),
        }

        // restriction to the whole group changes nothing but indices
        let whole = Subgroup::whole(&s3);
        let same = restrict_action(&aut, &whole).unwrap();
        assert_eq!(same.operator_count(), 6);
        assert!(same.is_faithful());
    }

    #[test]
    fn stabilizer_of_characteristic_subgroup() {
        let s3 = GroupTable::symmetric(3).unwrap();
        let aut = automorphism_group(&s3).unwrap();
        let a3 = generated_subgroup(&s3, &[element(&s3, "(1 2 3)")]);
        let stab = stabilizer_action_on_subgroup(&aut, &a3);
        assert_eq!(stab.normalizer.order(), 6);
        assert_eq!(stab.centralizer.order(), 3);
        assert_eq!(stab.induced.operator_count(), 2); // inversion on C3
        assert!(stab.induced.is_faithful());

        // trivial subgroup: everything stabilizes, induced action trivial
        let triv = Subgroup::trivial(&s3);
        let stab = stabilizer_action_on_subgroup(&aut, &triv);
        assert_eq!(stab.normalizer.order(), 6);
        assert_eq!(stab.induced.operator_count(), 1);

        // whole group under a faithful action: centralizer trivial,
        // induced group the size of the operator group
        let whole = Subgroup::whole(&s3);
        let stab = stabilizer_action_on_subgroup(&aut, &whole);
        assert!(stab.centralizer.is_trivial());
        assert_eq!(stab.induced.operator_count(), 6);
    }

    #[test]
    fn coprime_product_aut_splits() {
        let pairs = [
            (
                GroupTable::cyclic(3).unwrap(),
                GroupTable::cyclic(4).unwrap(),
            ),
            (GroupTable::cyclic(3).unwrap(), GroupTable::quaternion8()),
            (
                GroupTable::cyclic(5).unwrap(),
                GroupTable::dihedral(8).unwrap(),
            ),
        ];
        for (p, h) in pairs {
            let aut_p = automorphism_group(&p).unwrap().operator_count();
            let aut_h = automorphism_group(&h).unwrap().operator_count();
            let prod = GroupTable::direct_product(&p, &h).unwrap();
            let aut = automorphism_group(&prod).unwrap();
            assert_eq!(aut.operator_count(), aut_p * aut_h, "{}", prod.name());

            // the factor p is characteristic; the induced action on it is
            // the full Aut(p)
            let members: Vec<usize> = (0..p.order()).map(|a| a * h.order()).collect();
            let factor = generated_subgroup(&prod, &members);
            assert_eq!(factor.order(), p.order());
            let stab = stabilizer_action_on_subgroup(&aut, &factor);
            assert_eq!(stab.normalizer.order(), aut.operator_count());
            assert_eq!(stab.induced.operator_count(), aut_p);
        }
    }

    #[test]
    fn automorphism_validation() {
        let c4 = GroupTable::cyclic(4).unwrap();
        assert!(Automorphism::try_new(&c4, vec![0, 3, 2, 1]).is_ok());
        assert!(Automorphism::try_new(&c4, vec![0, 2, 1, 3]).is_err()); // order not preserved
        assert!(Automorphism::try_new(&c4, vec![1, 0, 2, 3]).is_err()); // identity moved
        assert!(Automorphism::try_new(&c4, vec![0, 1, 2]).is_err()); // wrong length
    }
}
