//! Acceptance gate for the whole workspace: twelve checks, each verified
//! against an independent oracle or a frozen expected value. Every test
//! here is meant to stay green; a failure means a real regression, not a
//! flaky environment.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write as _;
use std::time::{Duration, Instant};

use autonil::catalog::builtin_catalog;
use autonil::cayley;
use autonil_core::criteria::{
    baer_absolute, baer_absolute_streamed, baer_classical, cross_validate, AutCache,
};
use autonil_core::{
    automorphism_group, enumerate_subgroups, fitting_subgroup, frattini_subgroup,
    inner_automorphisms, is_normal, is_p_group, is_power_of, is_r_nilpotent, k_series, l_series,
    maximal_subgroups, subgroup_conjugation_action, visit_automorphisms, AutLimits, Error,
    GroupTable, OperatorAction,
};

/// Every member list of a subgroup, found by brute force: all subsets
/// containing the identity and closed under multiplication. Closure under
/// inverses is implied for finite subsets.
fn subgroups_by_subset_closure(g: &GroupTable) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    assert!(n <= 16, "oracle is exponential in the order");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
        let closed = members
            .iter()
            .all(|&x| members.iter().all(|&y| mask >> g.mul(x, y) & 1 == 1));
        if closed {
            out.insert(members);
        }
    }
    out
}

#[test]
fn a01_catalog_validates_and_subgroups_match_the_subset_oracle() {
    let start = Instant::now();
    let catalog = builtin_catalog(48);
    assert!(catalog.len() > 100, "catalog unexpectedly small");
    for entry in &catalog {
        let g = &entry.group;
        // round-trip through the strict constructor re-runs the full
        // invariant suite on the exact same table
        let rows: Vec<Vec<usize>> = (0..g.order())
            .map(|a| (0..g.order()).map(|b| g.mul(a, b)).collect())
            .collect();
        GroupTable::from_rows(g.name(), &rows)
            .unwrap_or_else(|e| panic!("{} fails validation: {e}", g.name()));
    }
    for entry in catalog.iter().filter(|e| e.group.order() <= 16) {
        let g = &entry.group;
        let found: BTreeSet<Vec<usize>> = enumerate_subgroups(g, None)
            .unwrap()
            .iter()
            .map(|s| s.members().to_vec())
            .collect();
        assert_eq!(
            found,
            subgroups_by_subset_closure(g),
            "subgroup lists differ for {}",
            g.name()
        );
    }
    assert!(
        start.elapsed() < Duration::from_secs(60),
        "validity suite took {:?}",
        start.elapsed()
    );
}

/// All multiplicative bijections of g, by backtracking over the image of
/// every element in index order. Branches are cut only when an already
/// assigned product contradicts the homomorphism equation, so the leaves
/// are exactly the automorphisms.
fn automorphisms_by_bijection_search(g: &GroupTable) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    let mut out = BTreeSet::new();
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn consistent(g: &GroupTable, images: &[usize], depth: usize) -> bool {
        for x in 0..=depth {
            for y in 0..=depth {
                let xy = g.mul(x, y);
                if xy <= depth && images[xy] != g.mul(images[x], images[y]) {
                    return false;
                }
            }
        }
        true
    }
    fn descend(
        g: &GroupTable,
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        depth: usize,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        if depth == g.order() {
            out.insert(images.clone());
            return;
        }
        for v in 0..g.order() {
            if used[v] {
                continue;
            }
            images[depth] = v;
            used[v] = true;
            if consistent(g, images, depth) {
                descend(g, images, used, depth + 1, out);
            }
            images[depth] = usize::MAX;
            used[v] = false;
        }
    }
    descend(g, &mut images, &mut used, 0, &mut out);
    out
}

/// All multiplicative bijections of g with no pruning at all: every
/// permutation of 1..n is generated by Heap's algorithm and checked in
/// full. Usable only for tiny orders; validates the pruned oracle.
fn automorphisms_by_every_permutation(g: &GroupTable) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    assert!(n <= 8, "factorial oracle needs a tiny order");
    let mut out = BTreeSet::new();
    let mut full = vec![0usize; n];
    let mut check = |tail: &[usize], out: &mut BTreeSet<Vec<usize>>| {
        full[0] = 0;
        full[1..].copy_from_slice(tail);
        for x in 0..n {
            for y in 0..n {
                if full[g.mul(x, y)] != g.mul(full[x], full[y]) {
                    return;
                }
            }
        }
        out.insert(full.clone());
    };
    if n == 1 {
        out.insert(vec![0]);
        return out;
    }
    let mut tail: Vec<usize> = (1..n).collect();
    let mut counters = vec![0usize; n - 1];
    check(&tail, &mut out);
    let mut i = 1;
    while i < n - 1 {
        if counters[i] < i {
            if i % 2 == 0 {
                tail.swap(0, i);
            } else {
                tail.swap(counters[i], i);
            }
            check(&tail, &mut out);
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    out
}

#[test]
fn a02_automorphism_search_matches_the_all_bijections_oracle() {
    for entry in builtin_catalog(12) {
        let g = &entry.group;
        let act = automorphism_group(g).unwrap();
        let searched: BTreeSet<Vec<usize>> = (0..act.operator_count())
            .map(|a| act.automorphism(a).images())
            .collect();
        assert_eq!(
            searched.len(),
            act.operator_count(),
            "duplicate maps for {}",
            g.name()
        );
        let oracle = automorphisms_by_bijection_search(g);
        assert_eq!(searched, oracle, "map sets differ for {}", g.name());
        if g.order() <= 8 {
            assert_eq!(
                oracle,
                automorphisms_by_every_permutation(g),
                "pruned and factorial oracles differ for {}",
                g.name()
            );
        }
    }
}

#[test]
fn a03_catalog_scan_reports_zero_disagreements() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_autonil"))
        .args([
            "--format",
            "json",
            "scan",
            "--max-order",
            "48",
            "--jobs",
            "4",
        ])
        .output()
        .expect("scan runs");
    assert!(out.status.success(), "scan exit: {:?}", out.status);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).expect("scan emits JSON");
    let results = doc["results"].as_array().expect("results array");
    assert_eq!(results.len(), builtin_catalog(48).len());
    for r in results {
        assert_eq!(
            r["agree"],
            serde_json::Value::Bool(true),
            "criteria disagree on {}",
            r["group"]
        );
    }
    let summary = String::from_utf8(out.stderr).unwrap();
    assert!(
        summary.contains("0 disagreements"),
        "summary was: {summary}"
    );
}

#[test]
fn a04_known_verdicts() {
    let c4 = GroupTable::cyclic(4).unwrap();
    let c3 = GroupTable::cyclic(3).unwrap();
    let cases: Vec<(GroupTable, bool)> = vec![
        (GroupTable::cyclic(1).unwrap(), true),
        (GroupTable::cyclic(2).unwrap(), true),
        (c4.clone(), true),
        (GroupTable::dihedral(8).unwrap(), true),
        (c3.clone(), false),
        (GroupTable::cyclic(5).unwrap(), false),
        (GroupTable::elementary_abelian(2, 2).unwrap(), false),
        (GroupTable::quaternion8(), false),
        (GroupTable::symmetric(3).unwrap(), false),
        (GroupTable::cyclic(6).unwrap(), false),
        (GroupTable::direct_product(&c4, &c3).unwrap(), false),
    ];
    let mut cache = AutCache::default();
    for (g, expected) in cases {
        let cv = cross_validate(&g, &mut cache);
        assert!(cv.agree, "criteria disagree on {}", g.name());
        assert_eq!(cv.verdict(), Some(expected), "verdict for {}", g.name());
    }
}

#[test]
fn a05_fixed_point_identities_hold_for_every_catalog_group_and_prime() {
    let mut cache = AutCache::default();
    let mut streamed_runs = 0;
    for entry in builtin_catalog(48) {
        let g = &entry.group;
        for &p in &g.prime_divisors() {
            let (lhs, rhs) = match baer_absolute(g, p, &mut cache) {
                Ok(pair) => pair,
                Err(Error::SizeExceeded { .. }) => {
                    streamed_runs += 1;
                    baer_absolute_streamed(g, p).unwrap()
                }
                Err(other) => panic!("{} p={p}: {other}", g.name()),
            };
            assert_eq!(
                lhs,
                rhs,
                "automorphism identity fails for {} p={p}",
                g.name()
            );
            let (lhs, rhs) = baer_classical(g, p).unwrap();
            assert_eq!(
                lhs,
                rhs,
                "conjugation identity fails for {} p={p}",
                g.name()
            );
        }
    }
    assert!(
        streamed_runs > 0,
        "expected at least one group past the operator caps"
    );
}

fn series_duality_holds(g: &GroupTable, act: &OperatorAction) {
    let k = k_series(act);
    let l = l_series(act);
    assert_eq!(
        k.terminated,
        l.terminated && l.limit().is_whole(g),
        "series duality fails for {}",
        g.name()
    );
    for term in &l.terms {
        assert!(
            is_normal(g, term),
            "ascending term of order {} is not normal in {}",
            term.order(),
            g.name()
        );
    }
}

#[test]
fn a06_descending_terminates_iff_ascending_fills_and_terms_are_normal() {
    let mut aut_checked = 0;
    for entry in builtin_catalog(48) {
        let g = &entry.group;
        series_duality_holds(g, &inner_automorphisms(g));
        match automorphism_group(g) {
            Ok(aut) => {
                series_duality_holds(g, &aut);
                aut_checked += 1;
            }
            Err(Error::SizeExceeded { .. }) => {}
            Err(other) => panic!("{}: {other}", g.name()),
        }
    }
    assert!(aut_checked > 100, "too few groups ran the full check");
}

/// Exhaustive check whether any strictly descending chain of subgroups
/// from the whole group to the trivial one has every link normal in its
/// predecessor with all operators fixing the cosets. Memoized reachability
/// over the full subgroup list.
fn chain_exists_by_exhaustion(g: &GroupTable, act: &OperatorAction) -> bool {
    let subgroups = enumerate_subgroups(g, None).unwrap();
    let members: Vec<Vec<usize>> = subgroups.iter().map(|s| s.members().to_vec()).collect();
    let link_ok = |upper: &[usize], lower: &[usize]| -> bool {
        let inside = |x: usize| lower.binary_search(&x).is_ok();
        let normal = upper
            .iter()
            .all(|&u| lower.iter().all(|&l| inside(g.mul(g.mul(u, l), g.inv(u)))));
        normal
            && upper.iter().all(|&x| {
                (0..act.operator_count()).all(|a| inside(g.mul(g.inv(x), act.apply(a, x))))
            })
    };
    fn reaches(
        i: usize,
        members: &[Vec<usize>],
        link_ok: &dyn Fn(&[usize], &[usize]) -> bool,
        memo: &mut BTreeMap<usize, bool>,
    ) -> bool {
        if members[i].len() == 1 {
            return true;
        }
        if let Some(&known) = memo.get(&i) {
            return known;
        }
        memo.insert(i, false); // cycles are impossible, orders strictly drop
        let ok = (0..members.len()).any(|j| {
            members[j].len() < members[i].len()
                && members[j]
                    .iter()
                    .all(|x| members[i].binary_search(x).is_ok())
                && link_ok(&members[i], &members[j])
                && reaches(j, members, link_ok, memo)
        });
        memo.insert(i, ok);
        ok
    }
    let whole = members
        .iter()
        .position(|m| m.len() == g.order())
        .expect("whole group is always enumerated");
    reaches(whole, &members, &link_ok, &mut BTreeMap::new())
}

#[test]
fn a07_built_chains_verify_and_absence_matches_exhaustive_search() {
    for entry in builtin_catalog(48) {
        let g = &entry.group;
        let aut = match automorphism_group(g) {
            Ok(aut) => aut,
            Err(Error::SizeExceeded { .. }) => continue,
            Err(other) => panic!("{}: {other}", g.name()),
        };
        let built = autonil_core::build_stabilized_chain(&aut);
        if let Some(chain) = &built {
            let check = autonil_core::verify_chain_stabilized(&aut, chain).unwrap();
            assert!(
                check.is_stabilized(),
                "built chain rejected for {}",
                g.name()
            );
        }
        if g.order() <= 12 {
            assert_eq!(
                built.is_some(),
                chain_exists_by_exhaustion(g, &aut),
                "chain existence differs for {}",
                g.name()
            );
        }
    }
}

/// Order of a permutation given as an image array: lcm of cycle lengths.
fn permutation_order(map: &[u32]) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    let mut seen = vec![false; map.len()];
    let mut order = 1;
    for start in 0..map.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = map[x] as usize;
            len += 1;
        }
        if len > 0 {
            order = order / gcd(order, len) * len;
        }
    }
    order
}

#[test]
fn a08_p_groups_are_nilpotent_under_automorphisms_iff_aut_is_a_p_group() {
    let mut checked = 0;
    for entry in builtin_catalog(48) {
        let g = &entry.group;
        let p = match g.prime_divisors().as_slice() {
            [p] => *p,
            _ => continue,
        };
        // every automorphism has p-power order? streaming stops at the
        // first counterexample, so oversized automorphism groups are fine
        let mut aut_is_p = true;
        visit_automorphisms(g, &mut |map| {
            if !is_power_of(permutation_order(map), p) {
                aut_is_p = false;
            }
            aut_is_p
        });
        // in a p-group every element is a p-element, so the first set of
        // the fixed-point identity is exactly the ascending series limit
        let (limit, _) = baer_absolute_streamed(g, p).unwrap();
        let nilpotent = limit.len() == g.order();
        assert_eq!(nilpotent, aut_is_p, "equivalence fails for {}", g.name());
        // where the operator table fits the caps, cross-check both sides
        if let Ok(aut) = automorphism_group(g) {
            assert_eq!(is_r_nilpotent(&aut), nilpotent, "{}", g.name());
            assert_eq!(is_p_group(aut.operators(), p), aut_is_p, "{}", g.name());
        }
        checked += 1;
    }
    assert!(checked > 20, "too few p-groups in the catalog");
}

#[test]
fn a09_every_group_is_nilpotent_over_its_fitting_subgroup() {
    for entry in builtin_catalog(48) {
        let g = &entry.group;
        let fitting = fitting_subgroup(g).unwrap();
        let act = subgroup_conjugation_action(g, &fitting);
        assert!(
            k_series(&act).terminated,
            "descending series stalls for {}",
            g.name()
        );
    }
}

#[test]
fn a10_maximal_subgroup_counts_in_p_groups() {
    let mut checked = 0;
    for entry in builtin_catalog(48) {
        let g = &entry.group;
        let p = match g.prime_divisors().as_slice() {
            [p] => *p,
            _ => continue,
        };
        let frattini = frattini_subgroup(g).unwrap();
        let quotient_order = g.order() / frattini.order();
        let mut n = 0;
        let mut reach = 1;
        while reach < quotient_order {
            reach *= p;
            n += 1;
        }
        assert_eq!(
            reach,
            quotient_order,
            "{}: quotient not a power of {p}",
            g.name()
        );
        let expected = (p.pow(n) - 1) / (p - 1);
        assert_eq!(
            maximal_subgroups(g).unwrap().len(),
            expected,
            "maximal subgroup count for {}",
            g.name()
        );
        checked += 1;
    }
    assert!(checked > 20, "too few p-groups in the catalog");
}

#[test]
fn a11_automorphism_counts_multiply_over_coprime_direct_factors() {
    let count = |g: &GroupTable| automorphism_group(g).unwrap().operator_count();
    let c3 = GroupTable::cyclic(3).unwrap();
    let c4 = GroupTable::cyclic(4).unwrap();
    let product = GroupTable::direct_product(&c3, &c4).unwrap();
    assert_eq!(count(&product), 4);
    assert_eq!(count(&product), count(&c3) * count(&c4));

    let c5 = GroupTable::cyclic(5).unwrap();
    let d8 = GroupTable::dihedral(8).unwrap();
    let product = GroupTable::direct_product(&c5, &d8).unwrap();
    assert_eq!(count(&product), 32);
    assert_eq!(count(&product), count(&c5) * count(&d8));
}

/// Euler's totient by trial-division factoring.
fn totient(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

#[test]
fn a12_order_729_ingestion_runs_the_full_pipeline() {
    let g = GroupTable::cyclic(729).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c729.json");
    std::fs::File::create(&path)
        .unwrap()
        .write_all(cayley::export(&g).as_bytes())
        .unwrap();
    let loaded = cayley::load_file(&path).unwrap();
    assert_eq!(loaded.order(), 729);
    for a in 0..729 {
        for b in 0..729 {
            assert_eq!(loaded.mul(a, b), g.mul(a, b));
        }
    }

    let limits = AutLimits {
        max_group_order: 729,
        ..AutLimits::default()
    };
    let mut cache = AutCache::new(limits);
    let aut = cache.automorphisms(&loaded).unwrap();
    assert_eq!(aut.operator_count(), totient(729));
    assert_eq!(aut.operator_count(), 486);

    let cv = cross_validate(&loaded, &mut cache);
    assert!(cv.agree, "criteria disagree on the ingested group");
    assert_eq!(cv.verdict(), Some(false));
    assert_eq!(cv.skipped_count(), 0);
    for b in &cv.baer {
        assert_eq!(b.absolute_match, Some(true));
        assert!(b.classical_match);
    }
}
