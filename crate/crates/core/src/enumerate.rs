//! Enumeration of small posets, one representative per isomorphism class.
//!
//! A poset on `k` labeled elements always admits a labeling in which the
//! strict order only relates smaller indices to larger ones, so classes are
//! generated as upper-triangular transitive relations and kept exactly when
//! the labeling is the lexicographically minimal one over all relabelings
//! (equivalently, over all linear extensions).

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::poset::{FinitePoset, PosetError};

/// Enumeration rejects ground sets above this size.
pub const MAX_ENUM_SIZE: usize = 8;

/// Streams every isomorphism class of posets on `size` elements exactly
/// once, in a fixed deterministic order. When `min_elements` or
/// `max_elements` is given, only classes with exactly that many minimal or
/// maximal elements are produced.
pub fn enumerate_posets(
    size: usize,
    min_elements: Option<usize>,
    max_elements: Option<usize>,
) -> Result<PosetClasses, PosetError> {
    if size > MAX_ENUM_SIZE {
        return Err(PosetError::TooManyElements {
            size,
            max: MAX_ENUM_SIZE,
        });
    }
    Ok(PosetClasses {
        k: size,
        min_filter: min_elements,
        max_filter: max_elements,
        rows: alloc::vec![0; size],
        cand: alloc::vec![0; size],
        depth: 0,
        finished: false,
        emitted_empty: false,
    })
}

/// Pull-based stream over poset isomorphism classes; restart by calling
/// [`enumerate_posets`] again.
pub struct PosetClasses {
    k: usize,
    min_filter: Option<usize>,
    max_filter: Option<usize>,
    /// `rows[r]` has bit `j` set when `r < j` in the strict order (`j > r`).
    rows: Vec<u16>,
    /// Next candidate subset per depth; depth `d` assigns row `k - 1 - d`.
    cand: Vec<u16>,
    depth: usize,
    finished: bool,
    emitted_empty: bool,
}

impl PosetClasses {
    fn passes_filters(&self) -> bool {
        if let Some(want) = self.min_filter {
            let covered = self.rows.iter().fold(0u16, |acc, &r| acc | r);
            if self.k - covered.count_ones() as usize != want {
                return false;
            }
        }
        if let Some(want) = self.max_filter {
            let maximal = self.rows.iter().filter(|&&r| r == 0).count();
            if maximal != want {
                return false;
            }
        }
        true
    }

    fn build(&self) -> FinitePoset {
        let mut pairs = Vec::new();
        for r in 0..self.k {
            for j in (r + 1)..self.k {
                if self.rows[r] >> j & 1 == 1 {
                    pairs.push((r, j));
                }
            }
        }
        FinitePoset::new(self.k, pairs).expect("generated relation is a strict order")
    }
}

impl Iterator for PosetClasses {
    type Item = FinitePoset;

    fn next(&mut self) -> Option<FinitePoset> {
        if self.k == 0 {
            if self.emitted_empty {
                return None;
            }
            self.emitted_empty = true;
            let ok = self.min_filter.unwrap_or(0) == 0 && self.max_filter.unwrap_or(0) == 0;
            return ok.then(|| FinitePoset::antichain(0));
        }
        if self.finished {
            return None;
        }
        loop {
            if self.depth == self.k {
                // Complete assignment; back off one level so the next call
                // resumes with the following candidate.
                self.depth -= 1;
                if self.passes_filters() && is_canonical(self.k, &self.rows) {
                    return Some(self.build());
                }
                continue;
            }
            let d = self.depth;
            let r = self.k - 1 - d;
            let limit = 1u16 << d;
            let mut chosen = None;
            while self.cand[d] < limit {
                let abs = self.cand[d] << (r + 1);
                self.cand[d] += 1;
                // A row choice is consistent when it is up-closed: every
                // element it relates to carries its own relations inside it.
                let consistent = (0..self.k)
                    .filter(|&j| abs >> j & 1 == 1)
                    .all(|j| self.rows[j] & !abs == 0);
                if consistent {
                    chosen = Some(abs);
                    break;
                }
            }
            match chosen {
                Some(abs) => {
                    self.rows[r] = abs;
                    self.depth += 1;
                    if self.depth < self.k {
                        self.cand[self.depth] = 0;
                    }
                }
                None => {
                    if d == 0 {
                        self.finished = true;
                        return None;
                    }
                    self.depth -= 1;
                }
            }
        }
    }
}

/// Cell order for labelings of a `k`-element relation: pair `(a, b)` with
/// `a < b` sits at index `b(b-1)/2 + a`, so placing elements one at a time
/// reveals cells in increasing index order.
fn cell_count(k: usize) -> usize {
    k * (k - 1) / 2
}

/// True when the identity labeling of `rows` is lexicographically minimal
/// among all relabelings; placements follow linear extensions, comparing
/// revealed cells against the identity labeling and pruning on the first
/// difference.
fn is_canonical(k: usize, rows: &[u16]) -> bool {
    fn rel(rows: &[u16], a: usize, b: usize) -> bool {
        rows[a] >> b & 1 == 1
    }
    fn dfs(t: usize, k: usize, rows: &[u16], placed: &mut Vec<usize>, used: &mut u16) -> bool {
        if t == k {
            return true;
        }
        for v in 0..k {
            if *used >> v & 1 == 1 {
                continue;
            }
            let minimal = (0..k).all(|u| *used >> u & 1 == 1 || u == v || !rel(rows, u, v));
            if !minimal {
                continue;
            }
            let mut cmp = Ordering::Equal;
            for (a, &pa) in placed.iter().enumerate() {
                let mine = rel(rows, pa, v);
                let own = rel(rows, a, t);
                if mine != own {
                    cmp = if own { Ordering::Less } else { Ordering::Greater };
                    break;
                }
            }
            match cmp {
                // A relabeling just went strictly below the identity.
                Ordering::Less => return false,
                Ordering::Greater => continue,
                Ordering::Equal => {
                    placed.push(v);
                    *used |= 1 << v;
                    let ok = dfs(t + 1, k, rows, placed, used);
                    placed.pop();
                    *used &= !(1 << v);
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }
    let mut placed = Vec::with_capacity(k);
    let mut used = 0u16;
    dfs(0, k, rows, &mut placed, &mut used)
}

/// The canonical form of a poset of at most [`MAX_ENUM_SIZE`] elements: the
/// lexicographically minimal cell bitstring over all relabelings, packed
/// with cell index `i` at bit `i`. Two posets are isomorphic exactly when
/// their masks agree; enumeration emits precisely the posets whose identity
/// labeling attains the mask.
pub fn canonical_mask(p: &FinitePoset) -> Result<u32, PosetError> {
    let k = p.size();
    if k > MAX_ENUM_SIZE {
        return Err(PosetError::TooManyElements {
            size: k,
            max: MAX_ENUM_SIZE,
        });
    }
    if k == 0 {
        return Ok(0);
    }
    let less = p.less_matrix();
    let rel = |a: usize, b: usize| less.get(a, b);
    let total = cell_count(k);
    let mut best = alloc::vec![true; total];
    let mut bits: Vec<bool> = Vec::with_capacity(total);
    let mut placed: Vec<usize> = Vec::with_capacity(k);
    let mut used = 0u16;

    fn search(
        t: usize,
        k: usize,
        rel: &dyn Fn(usize, usize) -> bool,
        placed: &mut Vec<usize>,
        used: &mut u16,
        bits: &mut Vec<bool>,
        best: &mut Vec<bool>,
        tight: bool,
    ) {
        if t == k {
            if bits.as_slice() < best.as_slice() {
                best.copy_from_slice(bits);
            }
            return;
        }
        for v in 0..k {
            if *used >> v & 1 == 1 {
                continue;
            }
            let minimal = (0..k).all(|u| *used >> u & 1 == 1 || u == v || !rel(u, v));
            if !minimal {
                continue;
            }
            let start = bits.len();
            for a in 0..t {
                bits.push(rel(placed[a], v));
            }
            let seg = bits[start..].cmp(&best[start..start + t]);
            let prune = tight && seg == Ordering::Greater;
            if !prune {
                let still_tight = tight && seg == Ordering::Equal;
                placed.push(v);
                *used |= 1 << v;
                search(t + 1, k, rel, placed, used, bits, best, still_tight);
                placed.pop();
                *used &= !(1 << v);
            }
            bits.truncate(start);
        }
    }

    search(
        0,
        k,
        &rel,
        &mut placed,
        &mut used,
        &mut bits,
        &mut best,
        true,
    );
    let mut mask = 0u32;
    for (idx, &b) in best.iter().enumerate() {
        if b {
            mask |= 1 << idx;
        }
    }
    Ok(mask)
}
