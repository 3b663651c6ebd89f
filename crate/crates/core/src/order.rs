//! Left/right weak order and strong Bruhat order on the symmetric group:
//! comparisons, cover relations, interval enumeration, and rank-generating
//! functions.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::code::{ExtendedCode, LehmerCode};
use crate::perm::Permutation;
use crate::poly::RankPolynomial;
use crate::poset::FinitePoset;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    LeftWeak,
    RightWeak,
    Bruhat,
}

impl OrderKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            OrderKind::LeftWeak => "left",
            OrderKind::RightWeak => "right",
            OrderKind::Bruhat => "bruhat",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderError {
    SizeMismatch { left: usize, right: usize },
    /// `interval_general(v, w)` requires `v <= w` in the left weak order.
    NotComparable { lower: String, upper: String },
}

impl fmt::Display for OrderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderError::SizeMismatch { left, right } => {
                write!(f, "size mismatch: {left} vs {right}")
            }
            OrderError::NotComparable { lower, upper } => {
                write!(f, "{lower} is not below {upper} in the left weak order")
            }
        }
    }
}

impl core::error::Error for OrderError {}

/// Left weak order comparison via inversion-set containment:
/// `v <= w` iff `Inv(v)` is a subset of `Inv(w)`.
pub fn leq_left(v: &Permutation, w: &Permutation) -> Result<bool, OrderError> {
    if v.n() != w.n() {
        return Err(OrderError::SizeMismatch {
            left: v.n(),
            right: w.n(),
        });
    }
    let (a, b) = (v.word(), w.word());
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if a[i] > a[j] && b[i] < b[j] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Right weak order, reduced to the left order of the inverses.
pub fn leq_right(v: &Permutation, w: &Permutation) -> Result<bool, OrderError> {
    if v.n() != w.n() {
        return Err(OrderError::SizeMismatch {
            left: v.n(),
            right: w.n(),
        });
    }
    leq_left(&v.inverse(), &w.inverse())
}

/// Left weak order comparison computed from codes alone: `v <= w` iff
/// `c_i(v) <= c_j(v) + m_{i,j}(w)` for every non-inversion `(i, j)` of `w`.
///
/// Agrees with [`leq_left`] on all inputs; the two are independent routes.
pub fn leq_left_via_codes(v: &Permutation, w: &Permutation) -> Result<bool, OrderError> {
    if v.n() != w.n() {
        return Err(OrderError::SizeMismatch {
            left: v.n(),
            right: w.n(),
        });
    }
    let n = w.n();
    let cv = LehmerCode::of(v);
    let mw = ExtendedCode::of(w);
    for i in 1..=n {
        for j in i..=(n + 1) {
            if w.image(i) <= w.image(j) && cv.entry(i) > cv.entry(j) + mw.entry(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The lower covers of `w` in left weak order: every `v = s_i w` with
/// `len(v) = len(w) - 1`. These are found where value `i + 1` precedes
/// value `i` in the word of `w`.
pub fn covers_down_left(w: &Permutation) -> Vec<Permutation> {
    let n = w.n();
    let mut position = alloc::vec![0usize; n + 1];
    for (idx, &value) in w.word().iter().enumerate() {
        position[value] = idx;
    }
    let mut out = Vec::new();
    for i in 1..n {
        if position[i + 1] < position[i] {
            let mut word = w.word().to_vec();
            word.swap(position[i], position[i + 1]);
            out.push(Permutation::from_word(word).expect("swap keeps a bijection"));
        }
    }
    out.sort();
    out
}

/// True iff no `i < j < k` has `w(i) > w(j) > w(k)`. In the symmetric group
/// these are exactly the fully commutative elements.
pub fn is_321_avoiding(w: &Permutation) -> bool {
    let a = w.word();
    let n = a.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if a[i] > a[j] {
                for k in (j + 1)..n {
                    if a[j] > a[k] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// An interval `[min, w]` in one of the implemented orders, stored as the
/// element set with its cover relation and rank function.
///
/// Elements are sorted by word; ranks satisfy
/// `rank(x) = len(x) - len(minimum)` and every cover raises rank by one.
#[derive(Clone, PartialEq, Eq)]
pub struct IntervalPoset {
    kind: OrderKind,
    elements: Vec<Permutation>,
    ranks: Vec<usize>,
    covers: Vec<(usize, usize)>,
}

impl IntervalPoset {
    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Cover pairs `(lower, upper)` as indices into `elements`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn index_of(&self, w: &Permutation) -> Option<usize> {
        self.elements.binary_search(w).ok()
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        self.index_of(w).is_some()
    }

    /// The unique minimal element.
    pub fn minimum(&self) -> &Permutation {
        let idx = (0..self.len())
            .find(|&i| self.ranks[i] == 0)
            .expect("an interval has a rank-0 element");
        &self.elements[idx]
    }

    pub fn rank_polynomial(&self) -> RankPolynomial {
        let top = self.ranks.iter().copied().max().unwrap_or(0);
        let mut coeffs = alloc::vec![0usize; top + 1];
        for &r in &self.ranks {
            coeffs[r] += 1;
        }
        RankPolynomial::new(coeffs)
    }

    /// The same interval as an abstract poset, labeled with one-line words.
    pub fn to_finite_poset(&self) -> FinitePoset {
        let labels: Vec<String> = self.elements.iter().map(|w| w.to_string()).collect();
        FinitePoset::new(self.len(), self.covers.clone())
            .expect("interval covers are acyclic")
            .with_labels(labels)
            .expect("one label per element")
    }
}

impl fmt::Debug for IntervalPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "IntervalPoset({} order, {} elements, {} covers)",
            self.kind.as_str(),
            self.len(),
            self.covers.len()
        )
    }
}

/// Downward closure of `{w}` under a cover-producing step.
fn downward_closure(
    w: &Permutation,
    step: impl Fn(&Permutation) -> Vec<Permutation>,
) -> Vec<Permutation> {
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut frontier = alloc::vec![w.clone()];
    seen.insert(w.clone());
    while let Some(u) = frontier.pop() {
        for v in step(&u) {
            if seen.insert(v.clone()) {
                frontier.push(v);
            }
        }
    }
    seen.into_iter().collect()
}

/// Cover pairs among `elements` (sorted, ranked by `rank`), comparing only
/// adjacent ranks with the supplied order predicate.
fn stratified_covers(
    elements: &[Permutation],
    ranks: &[usize],
    leq: impl Fn(&Permutation, &Permutation) -> bool,
) -> Vec<(usize, usize)> {
    let top = ranks.iter().copied().max().unwrap_or(0);
    let mut by_rank: Vec<Vec<usize>> = alloc::vec![Vec::new(); top + 1];
    for (idx, &r) in ranks.iter().enumerate() {
        by_rank[r].push(idx);
    }
    let mut covers = Vec::new();
    for r in 0..top {
        for &lo in &by_rank[r] {
            for &hi in &by_rank[r + 1] {
                if leq(&elements[lo], &elements[hi]) {
                    covers.push((lo, hi));
                }
            }
        }
    }
    covers.sort_unstable();
    covers
}

/// The principal order ideal `[id, w]` in the left weak order.
pub fn interval_left(w: &Permutation) -> IntervalPoset {
    let elements = downward_closure(w, covers_down_left);
    let ranks: Vec<usize> = elements.iter().map(|e| e.length()).collect();
    let covers = stratified_covers(&elements, &ranks, |a, b| {
        leq_left(a, b).expect("equal sizes inside one interval")
    });
    IntervalPoset {
        kind: OrderKind::LeftWeak,
        elements,
        ranks,
        covers,
    }
}

/// Rank-generating function of `[id, w]` in left weak order, computed
/// without materializing the cover relation. Used by whole-group scans.
pub fn left_interval_rank_polynomial(w: &Permutation) -> RankPolynomial {
    let elements = downward_closure(w, covers_down_left);
    let mut coeffs = alloc::vec![0usize; w.length() + 1];
    for e in &elements {
        coeffs[e.length()] += 1;
    }
    RankPolynomial::new(coeffs)
}

/// The interval `[id, w]` in right weak order, via inversion transport:
/// it is the image of the left interval of `w^{-1}` under `u -> u^{-1}`.
pub fn interval_right(w: &Permutation) -> IntervalPoset {
    let base = interval_left(&w.inverse());
    let relabeled: Vec<Permutation> = base.elements.iter().map(|u| u.inverse()).collect();
    let (elements, ranks, covers) = remap_sorted(relabeled, &base.ranks, &base.covers);
    IntervalPoset {
        kind: OrderKind::RightWeak,
        elements,
        ranks,
        covers,
    }
}

/// A general interval `[v, w]` of the left weak order, produced by
/// translating the principal ideal of `w v^{-1}`.
#[derive(Debug)]
pub struct GeneralInterval {
    /// The principal ideal `[id, w v^{-1}]` the interval was built from.
    pub quotient: IntervalPoset,
    /// The interval `[v, w]` itself: elements `u v` for `u` in the
    /// quotient, ranked relative to `v`.
    pub poset: IntervalPoset,
}

/// Builds `[v, w]` in the left weak order. Errors unless `v <= w`.
pub fn interval_general(v: &Permutation, w: &Permutation) -> Result<GeneralInterval, OrderError> {
    if !leq_left(v, w)? {
        return Err(OrderError::NotComparable {
            lower: v.to_string(),
            upper: w.to_string(),
        });
    }
    let quotient = interval_left(&w.compose(&v.inverse()).expect("sizes checked"));
    let relabeled: Vec<Permutation> = quotient
        .elements
        .iter()
        .map(|u| u.compose(v).expect("sizes checked"))
        .collect();
    let (elements, ranks, covers) = remap_sorted(relabeled, &quotient.ranks, &quotient.covers);
    Ok(GeneralInterval {
        quotient,
        poset: IntervalPoset {
            kind: OrderKind::LeftWeak,
            elements,
            ranks,
            covers,
        },
    })
}

/// The interval `[id, w]` in strong Bruhat order. Covers multiply by an
/// arbitrary transposition on the left and drop length by exactly one.
pub fn bruhat_interval(w: &Permutation) -> IntervalPoset {
    let n = w.n();
    let transpositions: Vec<Permutation> = {
        let mut out = Vec::new();
        for a in 1..=n {
            for b in (a + 1)..=n {
                out.push(Permutation::transposition(a, b, n).expect("valid pair"));
            }
        }
        out
    };
    let step = |u: &Permutation| -> Vec<Permutation> {
        let target = u.length().wrapping_sub(1);
        transpositions
            .iter()
            .filter_map(|t| {
                let v = t.compose(u).expect("equal sizes");
                (v.length() == target).then_some(v)
            })
            .collect()
    };
    let elements = downward_closure(w, step);
    let ranks: Vec<usize> = elements.iter().map(|e| e.length()).collect();
    // Covers are exactly the transposition edges with length drop one; the
    // closure walk already touches each of them from its upper end.
    let mut covers = Vec::new();
    for (hi, u) in elements.iter().enumerate() {
        for v in step(u) {
            let lo = elements.binary_search(&v).expect("closure is downward closed");
            covers.push((lo, hi));
        }
    }
    covers.sort_unstable();
    covers.dedup();
    IntervalPoset {
        kind: OrderKind::Bruhat,
        elements,
        ranks,
        covers,
    }
}

/// Sorts relabeled elements and carries ranks/covers over to the new order.
fn remap_sorted(
    relabeled: Vec<Permutation>,
    ranks: &[usize],
    covers: &[(usize, usize)],
) -> (Vec<Permutation>, Vec<usize>, Vec<(usize, usize)>) {
    let mut order: Vec<usize> = (0..relabeled.len()).collect();
    order.sort_by(|&a, &b| relabeled[a].cmp(&relabeled[b]));
    let mut new_index = alloc::vec![0usize; relabeled.len()];
    for (new, &old) in order.iter().enumerate() {
        new_index[old] = new;
    }
    let mut elements: Vec<Permutation> = Vec::with_capacity(relabeled.len());
    let mut new_ranks = alloc::vec![0usize; relabeled.len()];
    for &old in &order {
        elements.push(relabeled[old].clone());
    }
    for (old, &r) in ranks.iter().enumerate() {
        new_ranks[new_index[old]] = r;
    }
    let mut new_covers: Vec<(usize, usize)> = covers
        .iter()
        .map(|&(lo, hi)| (new_index[lo], new_index[hi]))
        .collect();
    new_covers.sort_unstable();
    (elements, new_ranks, new_covers)
}
