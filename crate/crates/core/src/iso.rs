//! Isomorphism testing between explicit group tables.

use alloc::vec::Vec;

use crate::group::GroupTable;
use crate::search::search_bijections;

/// An isomorphism a → b as an image array, if one exists.
pub fn isomorphism(a: &GroupTable, b: &GroupTable) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    if fingerprint(a) != fingerprint(b) {
        return None;
    }
    let maps = search_bijections(a, b, true, usize::MAX).expect("no cap in first-only mode");
    maps.into_iter()
        .next()
        .map(|images| images.into_iter().map(|v| v as usize).collect())
}

/// Cheap isomorphism invariants: (order, element-order census, abelian).
fn fingerprint(g: &GroupTable) -> (usize, Vec<usize>, bool) {
    let mut orders = g.element_orders();
    orders.sort_unstable();
    (g.order(), orders, g.is_abelian())
}

pub fn are_isomorphic(a: &GroupTable, b: &GroupTable) -> bool {
    isomorphism(a, b).is_some()
}
