//! Finite posets given by covers: transitive closure, duality, isomorphism,
//! and the lattice of order ideals.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::poly::RankPolynomial;

/// Default cap on the ground set for ideal enumeration; `|J(P)|` can be
/// exponential in `|P|`.
pub const DEFAULT_IDEAL_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetError {
    IndexOutOfRange { index: usize, size: usize },
    SelfLoop { index: usize },
    /// The cover relation (or a relation fed to `from_relation`) has a cycle.
    CyclicCovers,
    LabelCountMismatch { labels: usize, size: usize },
    /// The pair `(a, b)` lacks a least upper bound or greatest lower bound.
    NotALattice { a: usize, b: usize },
    IdealCapExceeded { size: usize, cap: usize },
    /// Hard limits: ideals need `|P| <= 32`, enumeration `k <= 8`.
    TooManyElements { size: usize, max: usize },
    /// `realizable_as_distributive` rejects degrees above 8.
    DegreeTooLarge { degree: usize, max: usize },
    ZeroPolynomial,
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::IndexOutOfRange { index, size } => {
                write!(f, "element index {index} out of range for size {size}")
            }
            PosetError::SelfLoop { index } => write!(f, "cover ({index}, {index}) is a self-loop"),
            PosetError::CyclicCovers => write!(f, "relation contains a cycle"),
            PosetError::LabelCountMismatch { labels, size } => {
                write!(f, "{labels} labels for {size} elements")
            }
            PosetError::NotALattice { a, b } => {
                write!(f, "pair ({a}, {b}) has no unique bound; not a lattice")
            }
            PosetError::IdealCapExceeded { size, cap } => {
                write!(f, "poset has {size} elements, ideal cap is {cap}")
            }
            PosetError::TooManyElements { size, max } => {
                write!(f, "size {size} exceeds supported maximum {max}")
            }
            PosetError::DegreeTooLarge { degree, max } => {
                write!(f, "degree {degree} exceeds search maximum {max}")
            }
            PosetError::ZeroPolynomial => write!(f, "zero polynomial"),
        }
    }
}

impl core::error::Error for PosetError {}

/// Dense boolean relation over element indices, one bit row per element.
#[derive(Clone)]
pub(crate) struct Relation {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub(crate) fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Relation {
            n,
            words,
            bits: alloc::vec![0; words * n.max(1)],
        }
    }

    pub(crate) fn set(&mut self, a: usize, b: usize) {
        self.bits[a * self.words + b / 64] |= 1 << (b % 64);
    }

    pub(crate) fn get(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    pub(crate) fn row(&self, a: usize) -> &[u64] {
        &self.bits[a * self.words..(a + 1) * self.words]
    }

    fn or_row(&mut self, a: usize, b: usize) {
        let (wa, wb) = (a * self.words, b * self.words);
        for k in 0..self.words {
            let v = self.bits[wb + k];
            self.bits[wa + k] |= v;
        }
    }

    /// Warshall closure of a strict relation.
    fn close(&mut self) {
        for k in 0..self.n {
            for a in 0..self.n {
                if self.get(a, k) {
                    self.or_row(a, k);
                }
            }
        }
    }

    pub(crate) fn count_row(&self, a: usize) -> usize {
        self.row(a).iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// A finite poset on `{0, ..., size - 1}`, stored as its (irredundant)
/// cover relation with optional display labels.
#[derive(Clone, PartialEq, Eq)]
pub struct FinitePoset {
    size: usize,
    covers: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl FinitePoset {
    /// Builds a poset from covering pairs `(lower, upper)`. Redundant pairs
    /// (implied by transitivity) are dropped; cycles are rejected.
    pub fn new(size: usize, covers: Vec<(usize, usize)>) -> Result<Self, PosetError> {
        for &(a, b) in &covers {
            let bad = [a, b].into_iter().find(|&x| x >= size);
            if let Some(index) = bad {
                return Err(PosetError::IndexOutOfRange { index, size });
            }
            if a == b {
                return Err(PosetError::SelfLoop { index: a });
            }
        }
        let mut less = Relation::new(size);
        for &(a, b) in &covers {
            less.set(a, b);
        }
        less.close();
        for a in 0..size {
            if less.get(a, a) {
                return Err(PosetError::CyclicCovers);
            }
        }
        Ok(Self::from_strict_relation(size, &less))
    }

    /// Builds a poset from a reflexive comparison predicate, which must be a
    /// partial order on `0..size`.
    pub fn from_relation(
        size: usize,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<Self, PosetError> {
        let mut less = Relation::new(size);
        for a in 0..size {
            for b in 0..size {
                if a != b && leq(a, b) {
                    if leq(b, a) {
                        return Err(PosetError::CyclicCovers);
                    }
                    less.set(a, b);
                }
            }
        }
        Ok(Self::from_strict_relation(size, &less))
    }

    /// Covers of a transitively closed strict relation.
    fn from_strict_relation(size: usize, less: &Relation) -> Self {
        let mut covers = Vec::new();
        for a in 0..size {
            for b in 0..size {
                if less.get(a, b) {
                    let implied = (0..size).any(|c| less.get(a, c) && less.get(c, b));
                    if !implied {
                        covers.push((a, b));
                    }
                }
            }
        }
        covers.sort_unstable();
        FinitePoset {
            size,
            covers,
            labels: None,
        }
    }

    pub fn chain(k: usize) -> Self {
        FinitePoset {
            size: k,
            covers: (1..k).map(|i| (i - 1, i)).collect(),
            labels: None,
        }
    }

    pub fn antichain(k: usize) -> Self {
        FinitePoset {
            size: k,
            covers: Vec::new(),
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, PosetError> {
        if labels.len() != self.size {
            return Err(PosetError::LabelCountMismatch {
                labels: labels.len(),
                size: self.size,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Strict order relation (transitive closure of the covers).
    pub(crate) fn less_matrix(&self) -> Relation {
        let mut less = Relation::new(self.size);
        for &(a, b) in &self.covers {
            less.set(a, b);
        }
        less.close();
        less
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.less_matrix().get(a, b)
    }

    /// The dual poset: all covers reversed, labels kept.
    pub fn dual(&self) -> FinitePoset {
        FinitePoset {
            size: self.size,
            covers: {
                let mut covers: Vec<(usize, usize)> =
                    self.covers.iter().map(|&(a, b)| (b, a)).collect();
                covers.sort_unstable();
                covers
            },
            labels: self.labels.clone(),
        }
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        let mut has_lower = alloc::vec![false; self.size];
        for &(_, b) in &self.covers {
            has_lower[b] = true;
        }
        (0..self.size).filter(|&x| !has_lower[x]).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        let mut has_upper = alloc::vec![false; self.size];
        for &(a, _) in &self.covers {
            has_upper[a] = true;
        }
        (0..self.size).filter(|&x| !has_upper[x]).collect()
    }

    /// Longest-path depth from a minimal element; the layer function used
    /// for drawing.
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = alloc::vec![0usize; self.size];
        // Covers sorted lexicographically are not topological in general;
        // iterate to a fixed point (cheap at these sizes).
        let mut changed = true;
        while changed {
            changed = false;
            for &(a, b) in &self.covers {
                if depth[b] < depth[a] + 1 {
                    depth[b] = depth[a] + 1;
                    changed = true;
                }
            }
        }
        depth
    }

    /// Poset isomorphism by backtracking over profile-compatible bijections.
    pub fn is_isomorphic(&self, other: &FinitePoset) -> bool {
        if self.size != other.size || self.covers.len() != other.covers.len() {
            return false;
        }
        let n = self.size;
        if n == 0 {
            return true;
        }
        let (pl, ql) = (self.less_matrix(), other.less_matrix());
        let profile = |less: &Relation, poset: &FinitePoset| -> Vec<(usize, usize, usize, usize)> {
            let mut up_covers = alloc::vec![0usize; n];
            let mut down_covers = alloc::vec![0usize; n];
            for &(a, b) in poset.covers() {
                up_covers[a] += 1;
                down_covers[b] += 1;
            }
            (0..n)
                .map(|x| {
                    let above = less.count_row(x);
                    let below = (0..n).filter(|&y| less.get(y, x)).count();
                    (down_covers[x], up_covers[x], below, above)
                })
                .collect()
        };
        let pp = profile(&pl, self);
        let qp = profile(&ql, other);
        {
            let mut a = pp.clone();
            let mut b = qp.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return false;
            }
        }
        // Map elements of self one at a time, most-constrained order not
        // needed at these sizes.
        let mut image = alloc::vec![usize::MAX; n];
        let mut used = alloc::vec![false; n];
        fn assign(
            x: usize,
            n: usize,
            pp: &[(usize, usize, usize, usize)],
            qp: &[(usize, usize, usize, usize)],
            pl: &Relation,
            ql: &Relation,
            image: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            if x == n {
                return true;
            }
            for y in 0..n {
                if used[y] || pp[x] != qp[y] {
                    continue;
                }
                let consistent = (0..x).all(|z| {
                    pl.get(z, x) == ql.get(image[z], y) && pl.get(x, z) == ql.get(y, image[z])
                });
                if consistent {
                    image[x] = y;
                    used[y] = true;
                    if assign(x + 1, n, pp, qp, pl, ql, image, used) {
                        return true;
                    }
                    used[y] = false;
                    image[x] = usize::MAX;
                }
            }
            false
        }
        assign(0, n, &pp, &qp, &pl, &ql, &mut image, &mut used)
    }

    /// All order ideals (down-closed subsets) with the default ground cap.
    pub fn order_ideals(&self) -> Result<IdealLattice, PosetError> {
        self.order_ideals_capped(DEFAULT_IDEAL_CAP)
    }

    pub fn order_ideals_capped(&self, cap: usize) -> Result<IdealLattice, PosetError> {
        if self.size > 32 {
            return Err(PosetError::TooManyElements {
                size: self.size,
                max: 32,
            });
        }
        if self.size > cap {
            return Err(PosetError::IdealCapExceeded {
                size: self.size,
                cap,
            });
        }
        let less = self.less_matrix();
        // strictly_below[x] as a bitmask
        let below: Vec<u32> = (0..self.size)
            .map(|x| {
                let mut mask = 0u32;
                for y in 0..self.size {
                    if less.get(y, x) {
                        mask |= 1 << y;
                    }
                }
                mask
            })
            .collect();
        let mut seen: BTreeSet<u32> = BTreeSet::new();
        let mut frontier = alloc::vec![0u32];
        let mut edges: Vec<(u32, u32)> = Vec::new();
        seen.insert(0);
        while let Some(ideal) = frontier.pop() {
            for x in 0..self.size {
                let bit = 1u32 << x;
                // Insertion keeps an ideal exactly when everything below x
                // is already present.
                if ideal & bit == 0 && below[x] & !ideal == 0 {
                    let next = ideal | bit;
                    edges.push((ideal, next));
                    if seen.insert(next) {
                        frontier.push(next);
                    }
                }
            }
        }
        let mut ideals: Vec<u32> = seen.into_iter().collect();
        ideals.sort_by_key(|&m| (m.count_ones(), m));
        let index_of = |mask: u32, ideals: &[u32]| {
            ideals
                .binary_search_by_key(&(mask.count_ones(), mask), |&m| (m.count_ones(), m))
                .expect("edge endpoints are ideals")
        };
        let mut covers: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(lo, hi)| (index_of(lo, &ideals), index_of(hi, &ideals)))
            .collect();
        covers.sort_unstable();
        covers.dedup();
        Ok(IdealLattice {
            ground_size: self.size,
            ideals,
            covers,
        })
    }
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinitePoset(size {}, covers {:?})", self.size, self.covers)
    }
}

/// The distributive lattice `J(P)` of order ideals of a poset, ordered by
/// inclusion. Ideals are bitmasks over ground elements, sorted by
/// cardinality; covers are single-element insertions.
#[derive(Clone, PartialEq, Eq)]
pub struct IdealLattice {
    ground_size: usize,
    ideals: Vec<u32>,
    covers: Vec<(usize, usize)>,
}

impl IdealLattice {
    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ideals(&self) -> &[u32] {
        &self.ideals
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn members(&self, index: usize) -> impl Iterator<Item = usize> + '_ {
        let mask = self.ideals[index];
        (0..self.ground_size).filter(move |&x| mask >> x & 1 == 1)
    }

    /// Rank is ideal cardinality, so coefficient `k` counts size-`k` ideals.
    pub fn rank_polynomial(&self) -> RankPolynomial {
        let mut coeffs = alloc::vec![0usize; self.ground_size + 1];
        for &m in &self.ideals {
            coeffs[m.count_ones() as usize] += 1;
        }
        RankPolynomial::new(coeffs)
    }

    pub fn to_finite_poset(&self) -> FinitePoset {
        let labels: Vec<String> = self
            .ideals
            .iter()
            .map(|&m| {
                use core::fmt::Write;
                let mut s = String::from("{");
                let mut first = true;
                for x in 0..self.ground_size {
                    if m >> x & 1 == 1 {
                        if !first {
                            s.push(',');
                        }
                        first = false;
                        let _ = write!(s, "{}", x + 1);
                    }
                }
                s.push('}');
                s
            })
            .collect();
        FinitePoset::new(self.ideals.len(), self.covers.clone())
            .expect("inclusion of ideals is acyclic")
            .with_labels(labels)
            .expect("one label per ideal")
    }
}

impl fmt::Debug for IdealLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "IdealLattice({} ideals over {} elements)",
            self.ideals.len(),
            self.ground_size
        )
    }
}

/// Join and meet tables of a finite lattice presented as a poset; entry
/// `a * size + b` holds the index of the bound.
pub(crate) struct LatticeTables {
    pub size: usize,
    pub join: Vec<u16>,
    pub meet: Vec<u16>,
    pub bottom: usize,
}

/// Computes bound tables from the order relation alone (least upper bound
/// and greatest lower bound per pair), erring on the first pair without a
/// unique bound.
pub(crate) fn lattice_tables(p: &FinitePoset) -> Result<LatticeTables, PosetError> {
    let n = p.size();
    assert!(n <= u16::MAX as usize, "lattice too large for u16 tables");
    if n == 0 {
        return Err(PosetError::NotALattice { a: 0, b: 0 });
    }
    let less = p.less_matrix();
    let words = n.div_ceil(64);
    // Reflexive up-sets and down-sets as bit rows.
    let mut up = alloc::vec![0u64; n * words];
    let mut down = alloc::vec![0u64; n * words];
    for x in 0..n {
        up[x * words + x / 64] |= 1 << (x % 64);
        down[x * words + x / 64] |= 1 << (x % 64);
        for y in 0..n {
            if less.get(x, y) {
                up[x * words + y / 64] |= 1 << (y % 64);
                down[y * words + x / 64] |= 1 << (x % 64);
            }
        }
    }
    let contains = |rows: &[u64], x: usize, mask: &[u64]| -> bool {
        mask.iter()
            .enumerate()
            .all(|(k, &m)| rows[x * words + k] & m == m)
    };
    let mut join = alloc::vec![0u16; n * n];
    let mut meet = alloc::vec![0u16; n * n];
    let mut scratch = alloc::vec![0u64; words];
    for a in 0..n {
        for b in a..n {
            // join: unique minimal common upper bound
            for k in 0..words {
                scratch[k] = up[a * words + k] & up[b * words + k];
            }
            let mut found = None;
            for x in 0..n {
                if scratch[x / 64] >> (x % 64) & 1 == 1 && contains(&up, x, &scratch) {
                    found = Some(x);
                    break;
                }
            }
            let Some(j) = found else {
                return Err(PosetError::NotALattice { a, b });
            };
            join[a * n + b] = j as u16;
            join[b * n + a] = j as u16;
            // meet: unique maximal common lower bound
            for k in 0..words {
                scratch[k] = down[a * words + k] & down[b * words + k];
            }
            let mut found = None;
            for x in 0..n {
                if scratch[x / 64] >> (x % 64) & 1 == 1 && contains(&down, x, &scratch) {
                    found = Some(x);
                    break;
                }
            }
            let Some(m) = found else {
                return Err(PosetError::NotALattice { a, b });
            };
            meet[a * n + b] = m as u16;
            meet[b * n + a] = m as u16;
        }
    }
    let bottom = (0..n)
        .find(|&x| (0..n).all(|y| meet[x * n + y] == x as u16))
        .expect("a finite lattice has a bottom");
    Ok(LatticeTables {
        size: n,
        join,
        meet,
        bottom,
    })
}
