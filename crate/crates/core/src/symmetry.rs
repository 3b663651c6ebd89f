//! Rank-symmetry of weak order intervals: the self-duality criterion on the
//! base poset and the doubled-permutation family giving a factorial lower
//! bound on the number of rank-symmetric intervals.

use alloc::vec::Vec;

use crate::baseposet::BasePoset;
use crate::order::left_interval_rank_polynomial;
use crate::perm::Permutation;
use crate::poly::RankPolynomial;

/// True iff the rank-generating function of `[id, w]` in left weak order is
/// palindromic.
pub fn is_rank_symmetric(w: &Permutation) -> bool {
    left_interval_rank_polynomial(w).is_symmetric()
}

/// The direct sum `v x v^{-1}`, extended to `S_n` by appending fixed
/// points. Appended fixed points do not change the interval, so the rank
/// polynomial is preserved. Panics if `n < 2 * v.n()`.
pub fn doubled_embedding(v: &Permutation, n: usize) -> Permutation {
    let doubled = v.direct_sum(&v.inverse());
    assert!(n >= doubled.n(), "target size too small");
    if n == doubled.n() {
        doubled
    } else {
        doubled.direct_sum(&Permutation::identity(n - doubled.n()))
    }
}

/// Outcome of the lower-bound scan: at least `floor(n/2)!` permutations of
/// `S_n` have rank-symmetric intervals, witnessed member-by-member through
/// the doubled embedding of `S_{floor(n/2)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundReport {
    pub n: usize,
    /// `floor(n/2)!`.
    pub bound: usize,
    /// Exhaustive count of rank-symmetric `w` over all of `S_n`; `None`
    /// when the scan ran in family-only mode (`n > 7`).
    pub rank_symmetric_count: Option<usize>,
    /// The doubled family, in the enumeration order of `S_{floor(n/2)}`.
    pub family: Vec<Permutation>,
    pub family_all_symmetric: bool,
    pub family_distinct: bool,
}

impl LowerBoundReport {
    /// The claimed bound, as witnessed by this report.
    pub fn holds(&self) -> bool {
        if !(self.family_all_symmetric && self.family_distinct && self.family.len() == self.bound)
        {
            return false;
        }
        match self.rank_symmetric_count {
            Some(count) => count >= self.bound,
            None => true,
        }
    }
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// Counts rank-symmetric intervals over `S_n` (exhaustively for `n <= 7`,
/// family-only beyond) and verifies the doubled family member by member.
pub fn check_lower_bound(n: usize) -> LowerBoundReport {
    assert!(n >= 1);
    let half = n / 2;
    let bound = factorial(half);
    let family: Vec<Permutation> = if half == 0 {
        alloc::vec![Permutation::identity(n)]
    } else {
        Permutation::all(half)
            .iter()
            .map(|v| doubled_embedding(v, n))
            .collect()
    };
    let family_all_symmetric = family.iter().all(is_rank_symmetric);
    let family_distinct = {
        let mut sorted = family.clone();
        sorted.sort();
        sorted.dedup();
        sorted.len() == family.len()
    };
    let rank_symmetric_count = (n <= 7).then(|| {
        Permutation::all(n)
            .iter()
            .filter(|w| is_rank_symmetric(w))
            .count()
    });
    LowerBoundReport {
        n,
        bound,
        rank_symmetric_count,
        family,
        family_all_symmetric,
        family_distinct,
    }
}

/// The two sides of the self-duality criterion for one permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelfDualCheck {
    pub base_self_dual: bool,
    pub rank_symmetric: bool,
}

impl SelfDualCheck {
    /// A self-dual base poset with an asymmetric interval would contradict
    /// the criterion; this must never be true.
    pub fn violated(&self) -> bool {
        self.base_self_dual && !self.rank_symmetric
    }
}

/// Evaluates self-duality of the base poset and rank-symmetry of the
/// interval. The converse direction is not asserted: a rank-symmetric
/// interval may well have a non-self-dual base poset.
pub fn self_dual_implies_symmetric(w: &Permutation) -> SelfDualCheck {
    let base = BasePoset::of(w).poset().clone();
    SelfDualCheck {
        base_self_dual: base.is_isomorphic(&base.dual()),
        rank_symmetric: is_rank_symmetric(w),
    }
}

/// One rank-symmetric permutation found by [`scan_rank_symmetric`].
#[derive(Debug, Clone)]
pub struct SymmetricScanEntry {
    pub w: Permutation,
    pub polynomial: RankPolynomial,
    pub base_self_dual: bool,
}

/// All rank-symmetric `w` in `S_n` with their polynomials and the
/// self-duality of their base posets, in word order.
pub fn scan_rank_symmetric(n: usize) -> Vec<SymmetricScanEntry> {
    Permutation::all(n)
        .into_iter()
        .filter_map(|w| {
            let polynomial = left_interval_rank_polynomial(&w);
            polynomial.is_symmetric().then(|| {
                let base = BasePoset::of(&w).poset().clone();
                SymmetricScanEntry {
                    base_self_dual: base.is_isomorphic(&base.dual()),
                    polynomial,
                    w,
                }
            })
        })
        .collect()
}
