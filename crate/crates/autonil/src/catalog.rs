//! The builtin corpus: every family the constructors cover, plus their
//! pairwise direct products, up to an order bound and with isomorphic
//! duplicates removed.

use autonil_core::{are_isomorphic, GroupTable, DEFAULT_MAX_ORDER};

use crate::spec::{parse_spec, realize};

/// One catalog group together with the spec text that rebuilds it.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub spec: String,
    pub group: GroupTable,
}

fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn entry_from_spec(text: &str) -> CatalogEntry {
    let spec = parse_spec(text).expect("builtin spec text parses");
    let group = realize(&spec).expect("builtin spec realizes");
    CatalogEntry {
        spec: text.to_string(),
        group,
    }
}

/// Append `entry` unless an isomorphic group is already present. Earlier
/// entries win, so the family listed first keeps its name (D4 yields to
/// E2^2, D6 to S3).
fn push_deduped(list: &mut Vec<CatalogEntry>, entry: CatalogEntry) {
    let duplicate = list
        .iter()
        .filter(|e| e.group.order() == entry.group.order())
        .any(|e| are_isomorphic(&e.group, &entry.group));
    if !duplicate {
        list.push(entry);
    }
}

/// All builtin groups of order at most `max_order`, in construction
/// order: cyclic, elementary abelian, symmetric, A4, Q8, dihedral, then
/// pairwise direct products of the above. One entry per isomorphism
/// class.
pub fn builtin_catalog(max_order: usize) -> Vec<CatalogEntry> {
    let max_order = max_order.min(DEFAULT_MAX_ORDER);
    let mut base: Vec<CatalogEntry> = Vec::new();

    for n in 1..=max_order {
        push_deduped(&mut base, entry_from_spec(&format!("C{n}")));
    }
    for p in (2..)
        .filter(|&p| is_prime(p))
        .take_while(|&p| p * p <= max_order)
    {
        let mut power = p * p;
        let mut k = 2;
        while power <= max_order {
            push_deduped(&mut base, entry_from_spec(&format!("E{p}^{k}")));
            power *= p;
            k += 1;
        }
    }
    for k in [3usize, 4] {
        let factorial: usize = (1..=k).product();
        if factorial <= max_order {
            push_deduped(&mut base, entry_from_spec(&format!("S{k}")));
        }
    }
    if 12 <= max_order {
        let a4 = GroupTable::from_permutations("A4", 4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
            .expect("A4 generators close");
        push_deduped(
            &mut base,
            CatalogEntry {
                spec: "perm:(1 2 3),(1 2)(3 4)".to_string(),
                group: a4,
            },
        );
    }
    if 8 <= max_order {
        push_deduped(&mut base, entry_from_spec("Q8"));
    }
    for n in (4..=max_order).step_by(2) {
        push_deduped(&mut base, entry_from_spec(&format!("D{n}")));
    }

    let mut catalog = base.clone();
    for i in 0..base.len() {
        for j in i..base.len() {
            let (l, r) = (&base[i], &base[j]);
            if l.group.order() == 1 || r.group.order() == 1 {
                continue;
            }
            if l.group.order() * r.group.order() > max_order {
                continue;
            }
            let product = GroupTable::direct_product(&l.group, &r.group)
                .expect("product order is within the cap");
            push_deduped(
                &mut catalog,
                CatalogEntry {
                    spec: format!("{} x {}", l.spec, r.spec),
                    group: product,
                },
            );
        }
    }
    catalog
}
