//! Backtracking search for multiplicative bijections between two group
//! tables. One engine, two uses: collecting Aut(G) and isomorphism testing.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::group::GroupTable;
use crate::subgroup::close_members;

/// Greedy generating set: repeatedly adjoin the lowest-index element
/// outside the closure of what has been picked so far. Empty for the
/// trivial group, deterministic everywhere.
pub fn greedy_generators(g: &GroupTable) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut closed = close_members(g, &gens);
    while closed.len() < g.order() {
        let next = (0..g.order())
            .find(|x| closed.binary_search(x).is_err())
            .expect("closure smaller than the group must miss an element");
        gens.push(next);
        closed = close_members(g, &gens);
    }
    gens
}

/// Partial multiplicative injection from `source` into `target`, extended
/// one generator image at a time. The domain with known images is always
/// closed under multiplication, so every extension can be checked locally.
struct PartialMap<'a> {
    source: &'a GroupTable,
    target: &'a GroupTable,
    /// images[x] = f(x), or NONE when unknown
    images: Vec<u32>,
    /// target elements already used (injectivity)
    used: Vec<bool>,
    /// source elements with known images, in assignment order (the trail)
    known: Vec<usize>,
}

const NONE: u32 = u32::MAX;

impl<'a> PartialMap<'a> {
    fn new(source: &'a GroupTable, target: &'a GroupTable) -> Self {
        let mut images = vec![NONE; source.order()];
        let mut used = vec![false; target.order()];
        images[0] = 0;
        used[0] = true;
        PartialMap {
            source,
            target,
            images,
            used,
            known: vec![0],
        }
    }

    /// Try to assign f(gen) = img and close the known set under products.
    /// On success returns the trail length to pass to [`Self::rollback`];
    /// on conflict rolls back automatically and returns None.
    fn extend(&mut self, gen: usize, img: usize) -> Option<usize> {
        let mark = self.known.len();
        if !self.assign(gen, img as u32) {
            self.rollback(mark);
            return None;
        }
        let mut i = mark;
        while i < self.known.len() {
            let x = self.known[i];
            let fx = self.images[x];
            let mut j = 0;
            while j < self.known.len() {
                let y = self.known[j];
                let fy = self.images[y];
                let ok = self.require(
                    self.source.mul(x, y),
                    self.target.mul(fx as usize, fy as usize) as u32,
                ) && self.require(
                    self.source.mul(y, x),
                    self.target.mul(fy as usize, fx as usize) as u32,
                );
                if !ok {
                    self.rollback(mark);
                    return None;
                }
                j += 1;
            }
            i += 1;
        }
        Some(mark)
    }

    /// Demand f(x) = v, assigning it if x is new. False on conflict.
    fn require(&mut self, x: usize, v: u32) -> bool {
        if self.images[x] != NONE {
            self.images[x] == v
        } else {
            self.assign(x, v)
        }
    }

    fn assign(&mut self, x: usize, v: u32) -> bool {
        if self.images[x] != NONE {
            return self.images[x] == v;
        }
        if self.used[v as usize] {
            return false;
        }
        self.images[x] = v;
        self.used[v as usize] = true;
        self.known.push(x);
        true
    }

    fn rollback(&mut self, mark: usize) {
        while self.known.len() > mark {
            let x = self.known.pop().expect("trail underflow");
            let v = self.images[x];
            self.images[x] = NONE;
            self.used[v as usize] = false;
        }
    }
}

/// Visit every multiplicative bijection source → target fixing the
/// identity, in depth-first order over generator images. The visitor
/// returns false to stop early; the return value says whether the search
/// ran to completion. Nothing is collected, so the visit count may far
/// exceed any collection cap.
pub(crate) fn visit_bijections(
    source: &GroupTable,
    target: &GroupTable,
    visit: &mut dyn FnMut(&[u32]) -> bool,
) -> bool {
    debug_assert_eq!(source.order(), target.order());
    let gens = greedy_generators(source);
    let gen_orders: Vec<usize> = gens.iter().map(|&g| source.element_order(g)).collect();
    // candidate images, one list per generator, filtered by element order
    let candidates: Vec<Vec<usize>> = gen_orders
        .iter()
        .map(|&o| {
            (0..target.order())
                .filter(|&t| target.element_order(t) == o)
                .collect()
        })
        .collect();
    let mut map = PartialMap::new(source, target);
    // depth-first over generator images with explicit trail marks
    let mut marks: Vec<usize> = Vec::with_capacity(gens.len());
    let mut choice: Vec<usize> = vec![0; gens.len() + 1];
    let mut depth = 0;
    loop {
        if depth == gens.len() {
            // all generators mapped; the closed domain is all of source
            debug_assert_eq!(map.known.len(), source.order());
            if !visit(&map.images) {
                return false;
            }
            // backtrack to try the next candidate
            match marks.pop() {
                Some(mark) => {
                    map.rollback(mark);
                    depth -= 1;
                }
                None => break, // trivial group: single empty assignment
            }
            continue;
        }
        let mut advanced = false;
        while choice[depth] < candidates[depth].len() {
            let img = candidates[depth][choice[depth]];
            choice[depth] += 1;
            if let Some(mark) = map.extend(gens[depth], img) {
                marks.push(mark);
                depth += 1;
                choice[depth] = 0;
                advanced = true;
                break;
            }
        }
        if advanced {
            continue;
        }
        // exhausted this level
        match marks.pop() {
            Some(mark) => {
                map.rollback(mark);
                depth -= 1;
            }
            None => break,
        }
    }
    true
}

/// All multiplicative bijections source → target fixing the identity,
/// as image arrays sorted lexicographically. `max_maps` caps how many may
/// be collected; exceeding it aborts with a size error. Stops after the
/// first hit when `first_only` is set.
pub(crate) fn search_bijections(
    source: &GroupTable,
    target: &GroupTable,
    first_only: bool,
    max_maps: usize,
) -> Result<Vec<Vec<u32>>, Error> {
    let mut found: Vec<Vec<u32>> = Vec::new();
    let mut overflow = false;
    visit_bijections(source, target, &mut |images| {
        if first_only {
            found.push(images.to_vec());
            return false;
        }
        if found.len() == max_maps {
            overflow = true;
            return false;
        }
        found.push(images.to_vec());
        true
    });
    if overflow {
        return Err(Error::SizeExceeded {
            what: "collected automorphisms",
            value: max_maps + 1,
            cap: max_maps,
        });
    }
    found.sort_unstable();
    Ok(found)
}

/// Visit every automorphism of g as a raw image array, in depth-first
/// search order, without collecting anything. The visitor returns false
/// to stop early; the return value says whether the search ran to
/// completion. No size cap applies, so this reaches automorphism groups
/// far too large to materialize as operator tables.
pub fn visit_automorphisms(g: &GroupTable, visit: &mut dyn FnMut(&[u32]) -> bool) -> bool {
    visit_bijections(g, g, visit)
}

/// Every automorphism of g as an image array, sorted lexicographically
/// (the identity map always lands at index 0). Collecting more than
/// `max_maps` aborts with a size error.
pub(crate) fn all_automorphisms(g: &GroupTable, max_maps: usize) -> Result<Vec<Vec<u32>>, Error> {
    search_bijections(g, g, false, max_maps)
}
