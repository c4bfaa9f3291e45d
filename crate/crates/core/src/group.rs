//! Multiplication-table representation of finite groups.
//!
//! Element 0 is always the identity; every module in the crate relies on
//! that normalization. Tables are immutable once built.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::{format, vec, vec::Vec};
use core::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use crate::error::{Error, InvariantViolation};

/// Default cap on group order. All algorithms here are exhaustive; the cap
/// turns would-be hangs into clean errors.
pub const DEFAULT_MAX_ORDER: usize = 1024;

static MAX_ORDER: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_ORDER);

/// Current process-wide cap on group order.
pub fn max_order() -> usize {
    MAX_ORDER.load(Ordering::Relaxed)
}

/// Override the process-wide order cap (values below 1 are clamped to 1).
/// Intended to be set once at startup, before constructing groups.
pub fn set_max_order(n: usize) {
    MAX_ORDER.store(n.max(1), Ordering::Relaxed);
}

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// Identity token of a [`GroupTable`].
///
/// Derived objects (subgroups, automorphisms, actions) carry the token of
/// the table their indices refer to, and every operation that mixes objects
/// checks tokens, so indexing into the wrong table panics instead of
/// silently producing garbage. Clones of a table share its token, since
/// they share its content.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupId(u64);

impl GroupId {
    fn fresh() -> Self {
        GroupId(NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed))
    }
}

/// A finite group given by its full multiplication table.
///
/// `table[a * order + b]` is the index of a·b. Element 0 is the identity.
#[derive(Debug, Clone)]
pub struct GroupTable {
    id: GroupId,
    name: String,
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    element_names: Option<Vec<String>>,
}

impl GroupTable {
    /// Internal constructor for tables that are groups by construction.
    /// Computes the inverse array; panics if some row has no identity,
    /// which would mean the caller's construction is broken.
    pub(crate) fn from_flat(
        name: String,
        order: usize,
        table: Vec<u32>,
        element_names: Option<Vec<String>>,
    ) -> GroupTable {
        assert_eq!(table.len(), order * order, "table shape mismatch");
        let mut inverse = vec![0u32; order];
        for g in 0..order {
            let h = (0..order)
                .find(|&h| table[g * order + h] == 0)
                .expect("constructed table has a row without identity");
            inverse[g] = h as u32;
        }
        GroupTable {
            id: GroupId::fresh(),
            name,
            order,
            table,
            inverse,
            element_names,
        }
    }

    /// Build and fully validate a table from explicit rows, as loaded from a
    /// file or built by hand. Rejects anything that is not a group with
    /// identity at index 0.
    pub fn from_rows(name: &str, rows: &[Vec<usize>]) -> Result<GroupTable, Error> {
        let order = rows.len();
        if order == 0 {
            return Err(InvariantViolation::Empty.into());
        }
        if order > max_order() {
            return Err(Error::SizeExceeded {
                what: "group order",
                value: order,
                cap: max_order(),
            });
        }
        let mut table = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(InvariantViolation::RowLength {
                    row: r,
                    len: row.len(),
                    order,
                }
                .into());
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(InvariantViolation::EntryRange {
                        row: r,
                        col: c,
                        value: v,
                    }
                    .into());
                }
                table.push(v as u32);
            }
        }
        check_group_axioms(order, &table)?;
        Ok(GroupTable::from_flat(name.to_string(), order, table, None))
    }

    /// Re-run the full invariant suite on the stored table.
    pub fn validate(&self) -> Result<(), Error> {
        check_group_axioms(self.order, &self.table)?;
        for g in 0..self.order {
            debug_assert_eq!(self.mul(g, self.inv(g)), 0);
        }
        Ok(())
    }

    pub fn id(&self) -> GroupId {
        self.id
    }

    /// Copy of this table under a fresh identity token, for reusing a
    /// table's content as a structurally separate group (e.g. the operator
    /// group of an action on the table itself).
    pub(crate) fn with_fresh_id(&self) -> GroupTable {
        let mut t = self.clone();
        t.id = GroupId::fresh();
        t
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Same table under a different display name (keeps the identity token).
    pub fn with_name(mut self, name: &str) -> GroupTable {
        self.name = name.to_string();
        self
    }

    /// Display label for an element: its name if the table carries element
    /// names, otherwise its index.
    pub fn element_label(&self, x: usize) -> String {
        match &self.element_names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn element_names(&self) -> Option<&[String]> {
        self.element_names.as_deref()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// x^a = a⁻¹·x·a.
    #[inline]
    pub fn conjugate(&self, x: usize, a: usize) -> usize {
        self.mul(self.mul(self.inv(a), x), a)
    }

    /// Element commutator a⁻¹·a^b = a⁻¹·b⁻¹·a·b.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.inv(a), self.conjugate(a, b))
    }

    /// x^k for k ≥ 0.
    pub fn pow(&self, x: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Least k ≥ 1 with x^k = identity.
    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    /// Orders of all elements, indexed by element.
    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|x| self.element_order(x)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        for a in 0..self.order {
            for b in (a + 1)..self.order {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// Set of primes dividing the group order.
    pub fn prime_divisors(&self) -> Vec<usize> {
        prime_divisors(self.order)
    }

    /// Cyclic group of order n.
    pub fn cyclic(n: usize) -> Result<GroupTable, Error> {
        check_order("cyclic group order", n)?;
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(((i + j) % n) as u32);
            }
        }
        Ok(GroupTable::from_flat(format!("C{n}"), n, table, None))
    }

    /// Dihedral group of the given order (the order, not the polygon size:
    /// `dihedral(8)` is the symmetry group of the square). Requires an even
    /// order ≥ 4.
    pub fn dihedral(order: usize) -> Result<GroupTable, Error> {
        if order < 4 || !order.is_multiple_of(2) {
            return Err(Error::InvalidArgument {
                what: "dihedral order",
                detail: format!("{order} is not an even number >= 4"),
            });
        }
        check_order("dihedral group order", order)?;
        let m = order / 2;
        // Element e*m + a is s^e·r^a; (s^e r^a)(s^f r^b) = s^(e xor f) r^(b ± a).
        let idx = |e: usize, a: usize| (e * m + a) as u32;
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            let (e, a) = (x / m, x % m);
            for y in 0..order {
                let (f, b) = (y / m, y % m);
                let rot = if f == 0 { (a + b) % m } else { (m - a + b) % m };
                table.push(idx(e ^ f, rot));
            }
        }
        let mut names = Vec::with_capacity(order);
        for e in 0..2 {
            for a in 0..m {
                names.push(match (e, a) {
                    (0, 0) => "e".to_string(),
                    (0, 1) => "r".to_string(),
                    (0, _) => format!("r^{a}"),
                    (_, 0) => "s".to_string(),
                    (_, 1) => "s*r".to_string(),
                    (_, _) => format!("s*r^{a}"),
                });
            }
        }
        Ok(GroupTable::from_flat(
            format!("D{order}"),
            order,
            table,
            Some(names),
        ))
    }

    /// Symmetric group on k letters, 1 ≤ k ≤ 6. Elements are the k!
    /// permutations in lexicographic order (identity first).
    pub fn symmetric(k: usize) -> Result<GroupTable, Error> {
        if !(1..=6).contains(&k) {
            return Err(Error::InvalidArgument {
                what: "symmetric group degree",
                detail: format!("{k} is outside 1..=6"),
            });
        }
        let perms = all_permutations(k);
        let n = perms.len();
        check_order("symmetric group order", n)?;
        let index: BTreeMap<&[usize], u32> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i as u32))
            .collect();
        let mut table = Vec::with_capacity(n * n);
        for a in &perms {
            for b in &perms {
                let ab = compose_perm(a, b);
                table.push(index[ab.as_slice()]);
            }
        }
        let names = perms.iter().map(|p| cycle_string(p)).collect();
        Ok(GroupTable::from_flat(
            format!("S{k}"),
            n,
            table,
            Some(names),
        ))
    }

    /// The quaternion group of order 8.
    pub fn quaternion8() -> GroupTable {
        // Elements ±1, ±i, ±j, ±k as (sign, axis) with axis 0 = 1.
        const LABELS: [&str; 8] = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"];
        let unpack = |x: usize| (x / 4, x % 4);
        let pack = |sign: usize, axis: usize| (sign * 4 + axis) as u32;
        // axis products: axis_mul[a][b] = (extra sign, axis)
        let axis_mul = |a: usize, b: usize| -> (usize, usize) {
            match (a, b) {
                (0, x) => (0, x),
                (x, 0) => (0, x),
                (x, y) if x == y => (1, 0),
                // i·j = k and cyclic; reversed order flips the sign
                (1, 2) => (0, 3),
                (2, 3) => (0, 1),
                (3, 1) => (0, 2),
                (2, 1) => (1, 3),
                (3, 2) => (1, 1),
                (1, 3) => (1, 2),
                _ => unreachable!(),
            }
        };
        let mut table = Vec::with_capacity(64);
        for x in 0..8 {
            let (sx, ax) = unpack(x);
            for y in 0..8 {
                let (sy, ay) = unpack(y);
                let (s, axis) = axis_mul(ax, ay);
                table.push(pack((sx + sy + s) % 2, axis));
            }
        }
        let names = LABELS.iter().map(|s| s.to_string()).collect();
        GroupTable::from_flat("Q8".to_string(), 8, table, Some(names))
    }

    /// Elementary abelian group (C_p)^k for a prime p.
    pub fn elementary_abelian(p: usize, k: usize) -> Result<GroupTable, Error> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument {
                what: "elementary abelian prime",
                detail: format!("{p} is not prime"),
            });
        }
        if k == 0 {
            return Err(Error::InvalidArgument {
                what: "elementary abelian rank",
                detail: "rank must be positive".to_string(),
            });
        }
        let n = p
            .checked_pow(k as u32)
            .filter(|&n| n <= max_order())
            .ok_or(Error::SizeExceeded {
                what: "elementary abelian order",
                value: usize::MAX,
                cap: max_order(),
            })?;
        // Element indices are base-p digit vectors; the product adds digits mod p.
        let add = |x: usize, y: usize| -> u32 {
            let (mut x, mut y, mut out, mut place) = (x, y, 0usize, 1usize);
            for _ in 0..k {
                out += ((x + y) % p) * place;
                x /= p;
                y /= p;
                place *= p;
            }
            out as u32
        };
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(add(x, y));
            }
        }
        let digits = |mut x: usize| -> String {
            let mut ds = Vec::with_capacity(k);
            for _ in 0..k {
                ds.push((x % p).to_string());
                x /= p;
            }
            format!("({})", ds.join(","))
        };
        let names = (0..n).map(digits).collect();
        Ok(GroupTable::from_flat(
            format!("E{p}^{k}"),
            n,
            table,
            Some(names),
        ))
    }

    /// Direct product with component-wise multiplication. Index of (a, b)
    /// is a·|h| + b, so the identity pair is index 0.
    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Result<GroupTable, Error> {
        let n = g
            .order
            .checked_mul(h.order)
            .filter(|&n| n <= max_order())
            .ok_or(Error::SizeExceeded {
                what: "direct product order",
                value: g.order.saturating_mul(h.order),
                cap: max_order(),
            })?;
        let mut table = Vec::with_capacity(n * n);
        for a1 in 0..g.order {
            for b1 in 0..h.order {
                for a2 in 0..g.order {
                    for b2 in 0..h.order {
                        table.push((g.mul(a1, a2) * h.order + h.mul(b1, b2)) as u32);
                    }
                }
            }
        }
        let mut names = Vec::with_capacity(n);
        for a in 0..g.order {
            for b in 0..h.order {
                names.push(format!("({},{})", g.element_label(a), h.element_label(b)));
            }
        }
        Ok(GroupTable::from_flat(
            format!("{} x {}", g.name, h.name),
            n,
            table,
            Some(names),
        ))
    }

    /// Closure of permutation generators under composition. Each generator
    /// is an image array on `points` points (0-based); the identity gets
    /// index 0 and the table entry a·b composes b first, then a.
    pub fn from_permutations(
        name: &str,
        points: usize,
        generators: &[Vec<usize>],
    ) -> Result<GroupTable, Error> {
        if points == 0 {
            return Err(Error::InvalidArgument {
                what: "permutation domain",
                detail: "need at least one point".to_string(),
            });
        }
        for (i, gen) in generators.iter().enumerate() {
            let mut seen = vec![false; points];
            let ok = gen.len() == points
                && gen.iter().all(|&x| {
                    if x >= points || seen[x] {
                        false
                    } else {
                        seen[x] = true;
                        true
                    }
                });
            if !ok {
                return Err(Error::InvalidArgument {
                    what: "permutation generator",
                    detail: format!("generator {i} is not a bijection of the {points} points"),
                });
            }
        }
        // BFS closure from the identity, multiplying by generators on the right.
        let identity: Vec<usize> = (0..points).collect();
        let mut elements = vec![identity.clone()];
        let mut index: BTreeMap<Vec<usize>, u32> = BTreeMap::new();
        index.insert(identity, 0);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            head += 1;
            for gen in generators {
                // current·gen applies gen first under this crate's convention.
                let next = compose_perm(&current, gen);
                if !index.contains_key(&next) {
                    if elements.len() == max_order() {
                        return Err(Error::SizeExceeded {
                            what: "permutation closure",
                            value: elements.len() + 1,
                            cap: max_order(),
                        });
                    }
                    index.insert(next.clone(), elements.len() as u32);
                    elements.push(next);
                }
            }
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(index[&compose_perm(a, b)]);
            }
        }
        let names = elements.iter().map(|p| cycle_string(p)).collect();
        Ok(GroupTable::from_flat(
            name.to_string(),
            n,
            table,
            Some(names),
        ))
    }
}

fn check_order(what: &'static str, n: usize) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::InvalidArgument {
            what,
            detail: "order must be positive".to_string(),
        });
    }
    if n > max_order() {
        return Err(Error::SizeExceeded {
            what,
            value: n,
            cap: max_order(),
        });
    }
    Ok(())
}

/// The invariant suite: identity at 0, Latin square, inverses, associativity.
/// Reports the first violation in that fixed order.
fn check_group_axioms(order: usize, table: &[u32]) -> Result<(), InvariantViolation> {
    let at = |a: usize, b: usize| table[a * order + b] as usize;
    for col in 0..order {
        if at(0, col) != col {
            return Err(InvariantViolation::IdentityRow { col });
        }
    }
    for row in 0..order {
        if at(row, 0) != row {
            return Err(InvariantViolation::IdentityColumn { row });
        }
    }
    let mut seen = vec![usize::MAX; order];
    for row in 0..order {
        for col in 0..order {
            let v = at(row, col);
            if seen[v] == row {
                return Err(InvariantViolation::RowRepeats { row, value: v });
            }
            seen[v] = row;
        }
    }
    let mut seen = vec![usize::MAX; order];
    for col in 0..order {
        for row in 0..order {
            let v = at(row, col);
            if seen[v] == col {
                return Err(InvariantViolation::ColumnRepeats { col, value: v });
            }
            seen[v] = col;
        }
    }
    for g in 0..order {
        if !(0..order).any(|h| at(g, h) == 0) {
            return Err(InvariantViolation::NoInverse { element: g });
        }
    }
    for a in 0..order {
        for b in 0..order {
            let ab = at(a, b);
            for c in 0..order {
                if at(ab, c) != at(a, at(b, c)) {
                    return Err(InvariantViolation::Associativity { a, b, c });
                }
            }
        }
    }
    Ok(())
}

/// (p∘q)(x) = p(q(x)): apply q first, then p. Matches the automorphism
/// composition convention used across the crate.
pub(crate) fn compose_perm(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    // Lexicographic order, so the identity comes first.
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn rec(k: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for x in 0..k {
            if !used[x] {
                used[x] = true;
                current.push(x);
                rec(k, current, used, out);
                current.pop();
                used[x] = false;
            }
        }
    }
    rec(k, &mut current, &mut used, &mut out);
    out
}

/// Disjoint-cycle notation with 1-based points, "e" for the identity.
pub(crate) fn cycle_string(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        loop {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = perm[x];
            if x == start {
                break;
            }
            out.push(' ');
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

/// Primes dividing n, ascending. Empty for n ≤ 1.
pub fn prime_divisors(n: usize) -> Vec<usize> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// True iff n is a power of p (1 = p⁰ counts).
pub fn is_power_of(n: usize, p: usize) -> bool {
    let mut n = n;
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Largest power of p dividing n.
pub(crate) fn p_part(n: usize, p: usize) -> usize {
    let mut n = n;
    let mut part = 1;
    while n.is_multiple_of(p) {
        part *= p;
        n /= p;
    }
    part
}

pub(crate) fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_small_tables() {
        let c1 = GroupTable::cyclic(1).unwrap();
        assert_eq!(c1.order(), 1);
        assert_eq!(c1.mul(0, 0), 0);

        let c2 = GroupTable::cyclic(2).unwrap();
        assert_eq!(
            (c2.mul(0, 0), c2.mul(0, 1), c2.mul(1, 0), c2.mul(1, 1)),
            (0, 1, 1, 0)
        );

        let c4 = GroupTable::cyclic(4).unwrap();
        assert_eq!(c4.element_order(1), 4);
        assert_eq!(c4.mul(1, 1), 2);
        c4.validate().unwrap();
    }

    #[test]
    fn cyclic_rejects_zero() {
        assert!(GroupTable::cyclic(0).is_err());
    }

    #[test]
    fn constructors_pass_validation() {
        for g in [
            GroupTable::cyclic(12).unwrap(),
            GroupTable::dihedral(8).unwrap(),
            GroupTable::symmetric(4).unwrap(),
            GroupTable::quaternion8(),
            GroupTable::elementary_abelian(3, 2).unwrap(),
            GroupTable::direct_product(
                &GroupTable::cyclic(3).unwrap(),
                &GroupTable::dihedral(4).unwrap(),
            )
            .unwrap(),
        ] {
            g.validate().unwrap_or_else(|e| panic!("{}: {e}", g.name()));
        }
    }

    #[test]
    fn dihedral_shape() {
        assert!(GroupTable::dihedral(5).is_err());
        assert!(GroupTable::dihedral(2).is_err());
        let d4 = GroupTable::dihedral(4).unwrap();
        assert!(d4.is_abelian());
        let d8 = GroupTable::dihedral(8).unwrap();
        assert!(!d8.is_abelian());
        // r has order 4, every reflection order 2
        assert_eq!(d8.element_order(1), 4);
        for x in 4..8 {
            assert_eq!(d8.element_order(x), 2);
        }
    }

    #[test]
    fn symmetric_shape() {
        let s3 = GroupTable::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        let s4 = GroupTable::symmetric(4).unwrap();
        assert_eq!(s4.order(), 24);
        assert!(GroupTable::symmetric(0).is_err());
        assert!(GroupTable::symmetric(7).is_err());
        // (1 2)(3 4) has order 2
        let x = (0..24)
            .find(|&x| s4.element_label(x) == "(1 2)(3 4)")
            .unwrap();
        assert_eq!(s4.element_order(x), 2);
    }

    #[test]
    fn quaternion_census() {
        let q8 = GroupTable::quaternion8();
        q8.validate().unwrap();
        let orders = q8.element_orders();
        assert_eq!(orders.iter().filter(|&&o| o == 4).count(), 6);
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 1);
    }

    #[test]
    fn elementary_abelian_shape() {
        let e = GroupTable::elementary_abelian(2, 2).unwrap();
        assert_eq!(e.order(), 4);
        assert!((1..4).all(|x| e.element_order(x) == 2));
        assert!(GroupTable::elementary_abelian(4, 2).is_err());
        assert!(GroupTable::elementary_abelian(2, 0).is_err());
    }

    #[test]
    fn product_is_componentwise() {
        let g = GroupTable::direct_product(
            &GroupTable::cyclic(2).unwrap(),
            &GroupTable::cyclic(2).unwrap(),
        )
        .unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
        assert!((1..4).all(|x| g.element_order(x) == 2));
    }

    #[test]
    fn permutation_closure() {
        let c3 = GroupTable::from_permutations("c3", 3, &[vec![1, 2, 0]]).unwrap();
        assert_eq!(c3.order(), 3);
        let s3 = GroupTable::from_permutations("s3", 3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        assert_eq!(s3.order(), 6);
        s3.validate().unwrap();
        let trivial = GroupTable::from_permutations("t", 1, &[]).unwrap();
        assert_eq!(trivial.order(), 1);
        assert!(GroupTable::from_permutations("bad", 2, &[vec![0, 0]]).is_err());
    }

    #[test]
    fn commutator_of_transposition_and_three_cycle() {
        let s3 = GroupTable::symmetric(3).unwrap();
        let a = (0..6).find(|&x| s3.element_label(x) == "(1 2)").unwrap();
        let b = (0..6).find(|&x| s3.element_label(x) == "(1 2 3)").unwrap();
        let c = s3.commutator(a, b);
        assert_eq!(s3.element_order(c), 3);
        // commuting pair and identity cases
        assert_eq!(s3.commutator(a, 0), 0);
        assert_eq!(s3.commutator(b, b), 0);
    }

    #[test]
    fn element_orders_divide_group_order() {
        for g in [
            GroupTable::symmetric(4).unwrap(),
            GroupTable::dihedral(12).unwrap(),
            GroupTable::quaternion8(),
        ] {
            for x in 0..g.order() {
                assert_eq!(g.order() % g.element_order(x), 0);
            }
        }
    }

    #[test]
    fn validation_catches_broken_tables() {
        // element 0 not the identity
        let bad = [vec![1usize, 0], vec![0, 1]];
        match GroupTable::from_rows("bad", &bad) {
            Err(Error::Invariant(InvariantViolation::IdentityRow { col: 0 })) => {}
            other => panic!("unexpected: {other:?}"),
        }
        // broken associativity with intact identity and Latin property:
        // the smallest such loop has order 5
        let loop5 = [
            vec![0usize, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match GroupTable::from_rows("loop", &loop5) {
            Err(Error::Invariant(InvariantViolation::Associativity { .. })) => {}
            other => panic!("unexpected: {other:?}"),
        }
        // repeated entry in a row
        let rep = [vec![0usize, 1], vec![1, 1]];
        match GroupTable::from_rows("rep", &rep) {
            Err(Error::Invariant(InvariantViolation::RowRepeats { row: 1, value: 1 })) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(prime_divisors(1), vec![]);
        assert_eq!(prime_divisors(12), vec![2, 3]);
        assert_eq!(prime_divisors(729), vec![3]);
        assert!(is_power_of(1, 5));
        assert!(is_power_of(8, 2));
        assert!(!is_power_of(24, 2));
        assert_eq!(p_part(48, 2), 16);
        assert_eq!(gcd(12, 18), 6);
        assert!(is_prime(2) && is_prime(727) && !is_prime(1) && !is_prime(729));
    }

    #[test]
    fn cycle_labels() {
        assert_eq!(cycle_string(&[0, 1, 2]), "e");
        assert_eq!(cycle_string(&[1, 0, 2]), "(1 2)");
        assert_eq!(cycle_string(&[1, 2, 0, 4, 3]), "(1 2 3)(4 5)");
    }
}
