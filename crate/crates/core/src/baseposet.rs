//! The base poset of a code lattice: its join-irreducibles, given in closed
//! form coordinate-wise, their chain decomposition, and the order-ideal
//! correspondence back to the lattice.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::code::{ExtendedCode, LehmerCode};
use crate::codelattice::{join, product_leq, CodeLattice};
use crate::enumerate::enumerate_posets;
use crate::perm::Permutation;
use crate::poly::RankPolynomial;
use crate::poset::{lattice_tables, FinitePoset, IdealLattice, PosetError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseError {
    /// Chain position `i` must lie in `[n]`.
    PositionOutOfRange { position: usize, n: usize },
    /// Chain entry `x` must satisfy `1 <= x <= c_i(w)`.
    EntryOutOfRange { position: usize, entry: usize, max: usize },
}

impl fmt::Display for BaseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseError::PositionOutOfRange { position, n } => {
                write!(f, "position {position} outside 1..={n}")
            }
            BaseError::EntryOutOfRange { position, entry, max } => {
                write!(
                    f,
                    "entry {entry} at position {position} outside 1..={max}"
                )
            }
        }
    }
}

impl core::error::Error for BaseError {}

/// The unique minimal code in the lattice of `w` whose `i`-th coordinate is
/// `x`, built coordinate-wise: zero left of `i` and on inversions `(i, j)`
/// of `w`, and `max(0, x - m_{i,j}(w))` on non-inversions.
///
/// Requires `i` in `[n]` and `1 <= x <= c_i(w)`.
pub fn minimal_code_with_entry(
    w: &Permutation,
    i: usize,
    x: usize,
) -> Result<LehmerCode, BaseError> {
    let n = w.n();
    if i < 1 || i > n {
        return Err(BaseError::PositionOutOfRange { position: i, n });
    }
    let c = LehmerCode::of(w);
    let max = c.entry(i);
    if x < 1 || x > max {
        return Err(BaseError::EntryOutOfRange {
            position: i,
            entry: x,
            max,
        });
    }
    let m = ExtendedCode::of(w);
    let entries: Vec<usize> = (1..=n)
        .map(|j| {
            if j < i || (j > i && w.image(i) > w.image(j)) {
                0
            } else {
                x.saturating_sub(m.entry(i, j))
            }
        })
        .collect();
    Ok(LehmerCode::new(entries).expect("minimal codes respect the box bound"))
}

/// The base poset `M_w`: all minimal codes with a prescribed coordinate,
/// under the product order, partitioned into one chain per position.
///
/// Elements are kept in chain-major order (position ascending, entry
/// ascending), so element counts per chain reproduce the Lehmer code and
/// the total is the length of `w`.
#[derive(Clone)]
pub struct BasePoset {
    source: Permutation,
    codes: Vec<LehmerCode>,
    chain_of: Vec<(usize, usize)>,
    chains: Vec<Vec<usize>>,
    poset: FinitePoset,
}

impl BasePoset {
    pub fn of(w: &Permutation) -> Self {
        let n = w.n();
        let c = LehmerCode::of(w);
        let mut codes = Vec::with_capacity(w.length());
        let mut chain_of = Vec::with_capacity(w.length());
        let mut chains: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
        for i in 1..=n {
            for x in 1..=c.entry(i) {
                chains[i - 1].push(codes.len());
                chain_of.push((i, x));
                codes.push(
                    minimal_code_with_entry(w, i, x).expect("x ranges over the chain"),
                );
            }
        }
        let labels: Vec<String> = codes.iter().map(LehmerCode::label).collect();
        let poset = FinitePoset::from_relation(codes.len(), |a, b| {
            product_leq(&codes[a], &codes[b]).expect("equal lengths")
        })
        .expect("product order is a partial order")
        .with_labels(labels)
        .expect("one label per element");
        BasePoset {
            source: w.clone(),
            codes,
            chain_of,
            chains,
            poset,
        }
    }

    pub fn source(&self) -> &Permutation {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn codes(&self) -> &[LehmerCode] {
        &self.codes
    }

    /// The `(position, entry)` pair that generated element `idx`.
    pub fn chain_of(&self, idx: usize) -> (usize, usize) {
        self.chain_of[idx]
    }

    /// Chain `i` (1-based position) as element indices, entry ascending;
    /// possibly empty.
    pub fn chain(&self, i: usize) -> &[usize] {
        &self.chains[i - 1]
    }

    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }
}

impl fmt::Debug for BasePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BasePoset({}, {} elements)", self.source, self.codes.len())
    }
}

/// Brute-force join-irreducibles of a finite lattice given as a poset: the
/// non-bottom elements that are not the join of any two strictly smaller
/// elements. This is the oracle the closed-form construction is checked
/// against.
pub fn join_irreducibles(p: &FinitePoset) -> Result<Vec<usize>, PosetError> {
    let t = lattice_tables(p)?;
    let n = t.size;
    let less = |a: usize, b: usize| a != b && t.join[a * n + b] == b as u16;
    let mut out = Vec::new();
    for z in 0..n {
        if z == t.bottom {
            continue;
        }
        let mut reducible = false;
        'pairs: for x in 0..n {
            if !less(x, z) {
                continue;
            }
            for y in (x + 1)..n {
                if less(y, z) && t.join[x * n + y] == z as u16 {
                    reducible = true;
                    break 'pairs;
                }
            }
        }
        if !reducible {
            out.push(z);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BirkhoffError {
    Ideals(PosetError),
    /// The ideal-to-code map failed to biject onto the code lattice.
    NotBijective,
    /// The map is a bijection but not an order isomorphism.
    OrderMismatch,
}

impl fmt::Display for BirkhoffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BirkhoffError::Ideals(e) => write!(f, "ideal enumeration failed: {e}"),
            BirkhoffError::NotBijective => write!(f, "ideal join map is not a bijection"),
            BirkhoffError::OrderMismatch => write!(f, "ideal join map is not order preserving"),
        }
    }
}

impl core::error::Error for BirkhoffError {}

/// The checked isomorphism between the order ideals of the base poset and
/// the code lattice: each ideal maps to the componentwise maximum of its
/// member codes (the empty ideal to the zero code).
pub struct BirkhoffWitness {
    pub base: BasePoset,
    pub ideals: IdealLattice,
    /// `ideal_codes[k]` is the image of `ideals.ideals()[k]`.
    pub ideal_codes: Vec<LehmerCode>,
}

/// Builds the ideal-to-code map for `w` and verifies it is an order
/// isomorphism onto the code lattice. Failure signals an implementation
/// bug, not bad input.
pub fn verify_birkhoff(w: &Permutation) -> Result<BirkhoffWitness, BirkhoffError> {
    let base = BasePoset::of(w);
    let lattice = CodeLattice::of(w);
    let ideals = base
        .poset()
        .order_ideals_capped(base.len().max(crate::poset::DEFAULT_IDEAL_CAP))
        .map_err(BirkhoffError::Ideals)?;
    let n = w.n();
    let ideal_codes: Vec<LehmerCode> = (0..ideals.len())
        .map(|k| {
            let mut acc = LehmerCode::zero(n);
            for member in ideals.members(k) {
                acc = join(&acc, &base.codes()[member]).expect("equal lengths");
            }
            acc
        })
        .collect();
    // Bijectivity onto the lattice.
    if ideal_codes.len() != lattice.len() {
        return Err(BirkhoffError::NotBijective);
    }
    let mut sorted = ideal_codes.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != ideal_codes.len() || sorted != lattice.codes() {
        return Err(BirkhoffError::NotBijective);
    }
    // Order preservation in both directions.
    for a in 0..ideal_codes.len() {
        for b in 0..ideal_codes.len() {
            let inclusion = ideals.ideals()[a] & !ideals.ideals()[b] == 0;
            let product =
                product_leq(&ideal_codes[a], &ideal_codes[b]).expect("equal lengths");
            if inclusion != product {
                return Err(BirkhoffError::OrderMismatch);
            }
        }
    }
    Ok(BirkhoffWitness {
        base,
        ideals,
        ideal_codes,
    })
}

/// Searches all poset classes of `deg(f)` elements for one whose ideal
/// lattice has rank-generating function `f`; `None` is a definitive
/// absence. Optional filters fix the number of minimal/maximal elements.
pub fn realizable_as_distributive(
    f: &RankPolynomial,
    min_elements: Option<usize>,
    max_elements: Option<usize>,
) -> Result<Option<FinitePoset>, PosetError> {
    let Some(degree) = f.degree() else {
        return Err(PosetError::ZeroPolynomial);
    };
    if degree > crate::enumerate::MAX_ENUM_SIZE {
        return Err(PosetError::DegreeTooLarge {
            degree,
            max: crate::enumerate::MAX_ENUM_SIZE,
        });
    }
    for p in enumerate_posets(degree, min_elements, max_elements)? {
        let ideals = p.order_ideals_capped(degree.max(1))?;
        if ideals.rank_polynomial() == *f {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(word: &[usize]) -> Permutation {
        Permutation::from_word(word.to_vec()).unwrap()
    }

    fn c(entries: &[usize]) -> LehmerCode {
        LehmerCode::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn minimal_codes_for_32514() {
        let w = p(&[3, 2, 5, 1, 4]);
        assert_eq!(minimal_code_with_entry(&w, 3, 2).unwrap(), c(&[0, 0, 2, 0, 0]));
        assert_eq!(minimal_code_with_entry(&w, 1, 1).unwrap(), c(&[1, 0, 0, 0, 0]));
        assert_eq!(minimal_code_with_entry(&w, 1, 2).unwrap(), c(&[2, 0, 1, 0, 0]));
        assert_eq!(minimal_code_with_entry(&w, 2, 1).unwrap(), c(&[0, 1, 1, 0, 0]));
        assert_eq!(minimal_code_with_entry(&w, 3, 1).unwrap(), c(&[0, 0, 1, 0, 0]));
    }

    #[test]
    fn minimal_code_bounds_are_checked() {
        let w = p(&[3, 2, 5, 1, 4]);
        assert!(matches!(
            minimal_code_with_entry(&w, 3, 0),
            Err(BaseError::EntryOutOfRange { position: 3, entry: 0, max: 2 })
        ));
        assert!(matches!(
            minimal_code_with_entry(&w, 4, 1),
            Err(BaseError::EntryOutOfRange { position: 4, entry: 1, max: 0 })
        ));
        assert!(matches!(
            minimal_code_with_entry(&w, 6, 1),
            Err(BaseError::PositionOutOfRange { position: 6, n: 5 })
        ));
    }

    #[test]
    fn prescribed_coordinate_is_attained() {
        for w in Permutation::all(5) {
            let code = LehmerCode::of(&w);
            for i in 1..=5 {
                for x in 1..=code.entry(i) {
                    let m = minimal_code_with_entry(&w, i, x).unwrap();
                    assert_eq!(m.entry(i), x);
                }
            }
        }
    }

    #[test]
    fn minimal_codes_are_members_and_minimal() {
        // Membership in the code lattice and minimality among members with
        // the prescribed coordinate.
        for w in Permutation::all(5) {
            let lattice = CodeLattice::of(&w);
            let code = LehmerCode::of(&w);
            for i in 1..=5 {
                for x in 1..=code.entry(i) {
                    let m = minimal_code_with_entry(&w, i, x).unwrap();
                    assert!(lattice.contains(&m), "w = {w}, ({i}, {x})");
                    for y in lattice.codes() {
                        if y.entry(i) == x {
                            assert_eq!(product_leq(&m, y), Ok(true));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn base_poset_of_identity_is_empty() {
        let base = BasePoset::of(&Permutation::identity(3));
        assert!(base.is_empty());
        assert_eq!(base.poset().size(), 0);
    }

    #[test]
    fn base_poset_size_is_length() {
        for n in 1..=6 {
            for w in Permutation::all(n) {
                assert_eq!(BasePoset::of(&w).len(), w.length());
            }
        }
    }

    #[test]
    fn chains_partition_and_order_by_entry() {
        for w in Permutation::all(5) {
            let base = BasePoset::of(&w);
            let code = LehmerCode::of(&w);
            let mut total = 0;
            for i in 1..=5 {
                let chain = base.chain(i);
                assert_eq!(chain.len(), code.entry(i));
                total += chain.len();
                for pair in chain.windows(2) {
                    assert_eq!(
                        product_leq(&base.codes()[pair[0]], &base.codes()[pair[1]]),
                        Ok(true)
                    );
                }
            }
            assert_eq!(total, base.len());
            // Pairwise distinct as codes.
            let mut codes = base.codes().to_vec();
            codes.sort();
            codes.dedup();
            assert_eq!(codes.len(), base.len());
        }
    }

    #[test]
    fn example_base_poset_with_four_chains() {
        let w = p(&[4, 1, 5, 2, 8, 6, 3, 7]);
        let base = BasePoset::of(&w);
        assert_eq!(base.len(), 9);
        let sizes: Vec<usize> = (1..=8).map(|i| base.chain(i).len()).collect();
        assert_eq!(sizes, vec![3, 0, 2, 0, 3, 1, 0, 0]);
        // Cross-chain relations follow y <= x - m_{i,j}; the chains at
        // positions 5 and 6 are incomparable since (5, 6) inverts.
        let m = ExtendedCode::of(&w);
        let rel = |i: usize, xi: usize, j: usize, yj: usize| {
            let a = base.chain(i)[xi - 1];
            let b = base.chain(j)[yj - 1];
            product_leq(&base.codes()[b], &base.codes()[a]).unwrap()
        };
        for x in 1..=3 {
            for y in 1..=2 {
                assert_eq!(rel(1, x, 3, y), y + m.entry(1, 3) <= x);
            }
            for y in 1..=3 {
                assert_eq!(rel(1, x, 5, y), y + m.entry(1, 5) <= x);
            }
            assert_eq!(rel(1, x, 6, 1), 1 + m.entry(1, 6) <= x);
        }
        for x in 1..=2 {
            for y in 1..=3 {
                assert_eq!(rel(3, x, 5, y), y + m.entry(3, 5) <= x);
            }
            assert_eq!(rel(3, x, 6, 1), 1 + m.entry(3, 6) <= x);
        }
        for x in 1..=3 {
            assert!(!rel(5, x, 6, 1));
            assert!(!rel(6, 1, 5, x));
        }
    }

    #[test]
    fn brute_force_irreducibles_agree_with_construction() {
        for w in Permutation::all(5) {
            let lattice = CodeLattice::of(&w);
            let irr = join_irreducibles(&lattice.to_finite_poset()).unwrap();
            let mut via_lattice: Vec<LehmerCode> =
                irr.into_iter().map(|i| lattice.codes()[i].clone()).collect();
            via_lattice.sort();
            let mut via_formula = BasePoset::of(&w).codes().to_vec();
            via_formula.sort();
            assert_eq!(via_lattice, via_formula, "w = {w}");
        }
    }

    #[test]
    fn irreducibles_of_a_chain_are_all_non_bottom_elements() {
        let chain = FinitePoset::chain(5);
        assert_eq!(join_irreducibles(&chain).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn irreducibles_of_32514_number_five() {
        let lattice = CodeLattice::of(&p(&[3, 2, 5, 1, 4]));
        assert_eq!(join_irreducibles(&lattice.to_finite_poset()).unwrap().len(), 5);
    }

    #[test]
    fn join_irreducibles_reject_non_lattices() {
        let bowtie = FinitePoset::new(4, vec![(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(join_irreducibles(&bowtie).is_err());
    }

    #[test]
    fn birkhoff_map_is_an_isomorphism_on_s4() {
        for w in Permutation::all(4) {
            let witness = verify_birkhoff(&w).unwrap();
            assert_eq!(witness.ideals.len(), CodeLattice::of(&w).len());
        }
        let w = p(&[3, 2, 5, 1, 4]);
        let witness = verify_birkhoff(&w).unwrap();
        assert_eq!(witness.ideals.len(), 14);
    }

    #[test]
    fn every_member_is_the_join_of_its_chain_cutoffs() {
        // Each code in the lattice decomposes as the join of the minimal
        // codes prescribed by its own nonzero coordinates.
        for w in Permutation::all(5) {
            let lattice = CodeLattice::of(&w);
            for code in lattice.codes() {
                let mut acc = LehmerCode::zero(5);
                for i in 1..=5 {
                    if code.entry(i) > 0 {
                        let m = minimal_code_with_entry(&w, i, code.entry(i)).unwrap();
                        acc = join(&acc, &m).unwrap();
                    }
                }
                assert_eq!(&acc, code, "w = {w}");
            }
        }
    }

    #[test]
    fn realizable_search_finds_small_witnesses() {
        let two_chain = realizable_as_distributive(
            &RankPolynomial::new(vec![1, 1, 1]),
            None,
            None,
        )
        .unwrap()
        .expect("a two-element chain realizes 1 + q + q^2");
        assert!(two_chain.is_isomorphic(&FinitePoset::chain(2)));

        let witness = realizable_as_distributive(
            &RankPolynomial::new(vec![1, 2, 2, 1]),
            None,
            None,
        )
        .unwrap()
        .expect("a chain plus a point realizes 1 + 2q + 2q^2 + q^3");
        let expected = FinitePoset::new(3, vec![(0, 1)]).unwrap();
        assert!(witness.is_isomorphic(&expected));
    }

    #[test]
    fn realizable_search_reports_absence() {
        let f = RankPolynomial::new(vec![1, 4, 5, 3, 1]);
        assert_eq!(realizable_as_distributive(&f, None, None).unwrap(), None);
        let constant = RankPolynomial::one();
        let empty = realizable_as_distributive(&constant, None, None)
            .unwrap()
            .expect("the empty poset realizes 1");
        assert_eq!(empty.size(), 0);
    }

    #[test]
    fn realizable_rejects_bad_inputs() {
        assert!(matches!(
            realizable_as_distributive(&RankPolynomial::zero(), None, None),
            Err(PosetError::ZeroPolynomial)
        ));
        let too_big = RankPolynomial::new(vec![1; 10]);
        assert!(matches!(
            realizable_as_distributive(&too_big, None, None),
            Err(PosetError::DegreeTooLarge { degree: 9, max: 8 })
        ));
    }
}
