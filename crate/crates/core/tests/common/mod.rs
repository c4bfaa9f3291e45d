//! Shared group corpus for the oracle tests.

#![allow(dead_code)]

use autonil_core::GroupTable;

/// The alternating group on 4 points, built from explicit permutations.
pub fn a4() -> GroupTable {
    GroupTable::from_permutations("A4", 4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
        .expect("two even permutations generate A4")
}

/// A deterministic spread of groups with order ≤ `max_order`, covering
/// cyclic, dihedral, symmetric, elementary abelian, quaternion, and a few
/// direct products. Isomorphic duplicates are allowed.
pub fn corpus(max_order: usize) -> Vec<GroupTable> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push(GroupTable::cyclic(n).unwrap());
    }
    let mut order = 4;
    while order <= max_order {
        out.push(GroupTable::dihedral(order).unwrap());
        order += 2;
    }
    for k in 1..=6 {
        let fact: usize = (1..=k).product();
        if fact <= max_order {
            out.push(GroupTable::symmetric(k).unwrap());
        }
    }
    if max_order >= 8 {
        out.push(GroupTable::quaternion8());
    }
    for (p, max_k) in [(2usize, 4usize), (3, 2), (5, 2)] {
        for k in 2..=max_k {
            if p.pow(k as u32) <= max_order {
                out.push(GroupTable::elementary_abelian(p, k).unwrap());
            }
        }
    }
    if max_order >= 12 {
        out.push(a4());
    }
    let cyclic_pairs = [(2, 4), (2, 8), (4, 4), (2, 6), (3, 4)];
    for (a, b) in cyclic_pairs {
        if a * b <= max_order {
            out.push(
                GroupTable::direct_product(
                    &GroupTable::cyclic(a).unwrap(),
                    &GroupTable::cyclic(b).unwrap(),
                )
                .unwrap(),
            );
        }
    }
    if max_order >= 16 {
        out.push(
            GroupTable::direct_product(
                &GroupTable::cyclic(2).unwrap(),
                &GroupTable::dihedral(8).unwrap(),
            )
            .unwrap(),
        );
        out.push(
            GroupTable::direct_product(&GroupTable::cyclic(2).unwrap(), &GroupTable::quaternion8())
                .unwrap(),
        );
    }
    out
}
