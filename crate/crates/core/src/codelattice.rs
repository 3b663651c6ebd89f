//! The set of Lehmer codes of a weak order interval under the product
//! order: componentwise meet and join, closure, distributivity, and the
//! rank-generating function match with the interval itself.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::code::{CodeError, LehmerCode};
use crate::order::interval_left;
use crate::perm::Permutation;
use crate::poly::RankPolynomial;
use crate::poset::{lattice_tables, FinitePoset, PosetError};

/// Componentwise comparison of codes of equal length.
pub fn product_leq(x: &LehmerCode, y: &LehmerCode) -> Result<bool, CodeError> {
    check_lengths(x, y)?;
    Ok(x.entries().iter().zip(y.entries()).all(|(a, b)| a <= b))
}

/// Componentwise maximum.
pub fn join(x: &LehmerCode, y: &LehmerCode) -> Result<LehmerCode, CodeError> {
    check_lengths(x, y)?;
    let entries = x
        .entries()
        .iter()
        .zip(y.entries())
        .map(|(&a, &b)| a.max(b))
        .collect();
    LehmerCode::new(entries)
}

/// Componentwise minimum.
pub fn meet(x: &LehmerCode, y: &LehmerCode) -> Result<LehmerCode, CodeError> {
    check_lengths(x, y)?;
    let entries = x
        .entries()
        .iter()
        .zip(y.entries())
        .map(|(&a, &b)| a.min(b))
        .collect();
    LehmerCode::new(entries)
}

fn check_lengths(x: &LehmerCode, y: &LehmerCode) -> Result<(), CodeError> {
    if x.len() != y.len() {
        return Err(CodeError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(())
}

/// The Lehmer codes of all permutations in `[id, w]`, as a sublattice of
/// the product order on `N^n`.
///
/// Construction verifies closure under componentwise min and max; a
/// violation would be an implementation bug, never input-dependent, and
/// panics.
#[derive(Clone, PartialEq, Eq)]
pub struct CodeLattice {
    source: Permutation,
    codes: Vec<LehmerCode>,
}

impl CodeLattice {
    pub fn of(w: &Permutation) -> Self {
        let interval = interval_left(w);
        let mut codes: Vec<LehmerCode> =
            interval.elements().iter().map(LehmerCode::of).collect();
        codes.sort();
        let lattice = CodeLattice {
            source: w.clone(),
            codes,
        };
        lattice.assert_closed();
        lattice
    }

    fn assert_closed(&self) {
        for (i, x) in self.codes.iter().enumerate() {
            for y in &self.codes[i + 1..] {
                let up = join(x, y).expect("equal lengths");
                let lo = meet(x, y).expect("equal lengths");
                assert!(
                    self.contains(&up) && self.contains(&lo),
                    "code set of {} not closed at {x} / {y}",
                    self.source
                );
            }
        }
    }

    pub fn source(&self) -> &Permutation {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The codes in lexicographic storage order.
    pub fn codes(&self) -> &[LehmerCode] {
        &self.codes
    }

    pub fn contains(&self, code: &LehmerCode) -> bool {
        self.codes.binary_search(code).is_ok()
    }

    pub fn index_of(&self, code: &LehmerCode) -> Option<usize> {
        self.codes.binary_search(code).ok()
    }

    /// Rank of a member is the sum of its entries, which equals the length
    /// of the permutation it encodes.
    pub fn rank_polynomial(&self) -> RankPolynomial {
        let top = self.codes.iter().map(LehmerCode::sum).max().unwrap_or(0);
        let mut coeffs = alloc::vec![0usize; top + 1];
        for c in &self.codes {
            coeffs[c.sum()] += 1;
        }
        RankPolynomial::new(coeffs)
    }

    /// The lattice as an abstract poset under the product order, labeled by
    /// compact code strings.
    pub fn to_finite_poset(&self) -> FinitePoset {
        let labels: Vec<String> = self.codes.iter().map(LehmerCode::label).collect();
        FinitePoset::from_relation(self.codes.len(), |a, b| {
            product_leq(&self.codes[a], &self.codes[b]).expect("equal lengths")
        })
        .expect("product order is a partial order")
        .with_labels(labels)
        .expect("one label per code")
    }
}

impl fmt::Debug for CodeLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CodeLattice({}, {} codes)", self.source, self.codes.len())
    }
}

/// Rank-generating function of the code lattice of `w`; by construction it
/// matches the rank-generating function of the weak order interval.
pub fn lattice_rank_polynomial(w: &Permutation) -> RankPolynomial {
    CodeLattice::of(w).rank_polynomial()
}

/// Distributivity of a finite lattice presented as a poset: meets and joins
/// are computed from the order relation, then checked against
/// `x /\ (y \/ z) = (x /\ y) \/ (x /\ z)` over all triples.
///
/// A poset that is not a lattice yields `Err(NotALattice)`, distinct from a
/// lattice that merely fails the law.
pub fn is_distributive(p: &FinitePoset) -> Result<bool, PosetError> {
    let t = lattice_tables(p)?;
    let n = t.size;
    for x in 0..n {
        for y in 0..n {
            let xy = t.meet[x * n + y] as usize;
            for z in y..n {
                let yz = t.join[y * n + z] as usize;
                let lhs = t.meet[x * n + yz];
                let xz = t.meet[x * n + z] as usize;
                let rhs = t.join[xy * n + xz];
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{interval_left, leq_left};
    use alloc::vec;

    fn p(word: &[usize]) -> Permutation {
        Permutation::from_word(word.to_vec()).unwrap()
    }

    fn c(entries: &[usize]) -> LehmerCode {
        LehmerCode::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn componentwise_operations() {
        let x = c(&[2, 0, 1, 0, 0]);
        let y = c(&[0, 1, 1, 0, 0]);
        assert_eq!(join(&x, &y).unwrap(), c(&[2, 1, 1, 0, 0]));
        assert_eq!(meet(&x, &y).unwrap(), c(&[0, 0, 1, 0, 0]));
        assert_eq!(join(&x, &x).unwrap(), x);
        assert_eq!(product_leq(&meet(&x, &y).unwrap(), &x), Ok(true));
        assert!(join(&x, &c(&[0, 0])).is_err());
    }

    #[test]
    fn lattice_of_32514_matches_known_codes() {
        let lattice = CodeLattice::of(&p(&[3, 2, 5, 1, 4]));
        let expected: Vec<LehmerCode> = [
            [0, 0, 0, 0, 0],
            [1, 0, 0, 0, 0],
            [0, 0, 1, 0, 0],
            [1, 0, 1, 0, 0],
            [2, 0, 1, 0, 0],
            [0, 1, 1, 0, 0],
            [1, 1, 1, 0, 0],
            [2, 1, 1, 0, 0],
            [0, 0, 2, 0, 0],
            [1, 0, 2, 0, 0],
            [2, 0, 2, 0, 0],
            [0, 1, 2, 0, 0],
            [1, 1, 2, 0, 0],
            [2, 1, 2, 0, 0],
        ]
        .iter()
        .map(|e| c(e))
        .collect();
        assert_eq!(lattice.len(), 14);
        for code in &expected {
            assert!(lattice.contains(code));
        }
    }

    #[test]
    fn lattice_of_identity_is_a_point() {
        let lattice = CodeLattice::of(&Permutation::identity(4));
        assert_eq!(lattice.codes(), &[LehmerCode::zero(4)]);
        assert_eq!(lattice.rank_polynomial(), RankPolynomial::one());
    }

    #[test]
    fn code_count_matches_interval_size_on_s5() {
        for w in Permutation::all(5) {
            assert_eq!(CodeLattice::of(&w).len(), interval_left(&w).len());
        }
    }

    #[test]
    fn rank_polynomials_agree_for_32514() {
        let w = p(&[3, 2, 5, 1, 4]);
        let f = lattice_rank_polynomial(&w);
        assert_eq!(f, RankPolynomial::new(vec![1, 2, 3, 4, 3, 1]));
        assert_eq!(f, interval_left(&w).rank_polynomial());
    }

    #[test]
    fn product_order_refines_weak_order() {
        let w = p(&[3, 2, 5, 1, 4]);
        let ivl = interval_left(&w);
        let mut weak_pairs = 0usize;
        let mut product_pairs = 0usize;
        for u in ivl.elements() {
            for v in ivl.elements() {
                if u == v {
                    continue;
                }
                let weak = leq_left(u, v).unwrap();
                let prod = product_leq(&LehmerCode::of(u), &LehmerCode::of(v)).unwrap();
                if weak {
                    assert!(prod, "weak pair {u} <= {v} must be product-comparable");
                    weak_pairs += 1;
                }
                if prod {
                    product_pairs += 1;
                }
            }
        }
        // Strict refinement: some pair is product-comparable only.
        assert!(product_pairs > weak_pairs);
        let (u, v) = (p(&[2, 1, 4, 3, 5]), p(&[2, 3, 5, 1, 4]));
        assert_eq!(leq_left(&u, &v), Ok(false));
        assert_eq!(leq_left(&v, &u), Ok(false));
        assert_eq!(
            product_leq(&LehmerCode::of(&u), &LehmerCode::of(&v)),
            Ok(true)
        );
    }

    #[test]
    fn distributivity_of_both_presentations_of_32514() {
        let w = p(&[3, 2, 5, 1, 4]);
        assert_eq!(is_distributive(&CodeLattice::of(&w).to_finite_poset()), Ok(true));
        assert_eq!(is_distributive(&interval_left(&w).to_finite_poset()), Ok(false));
    }

    #[test]
    fn chains_are_distributive_and_bowties_are_rejected() {
        assert_eq!(is_distributive(&FinitePoset::chain(4)), Ok(true));
        let bowtie = FinitePoset::new(4, vec![(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(matches!(
            is_distributive(&bowtie),
            Err(PosetError::NotALattice { .. })
        ));
    }
}
