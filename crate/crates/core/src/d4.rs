//! A minimal model of the Coxeter group D4 as even-signed permutations of
//! `[4]`, just enough to build one left weak order interval whose
//! rank-generating function no distributive lattice realizes.
//!
//! Equality is always decided on evaluated images; the word problem is
//! never used. Length is Cayley-graph distance from the identity over the
//! generating set, computed by one breadth-first closure of the whole
//! 192-element group.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::baseposet::realizable_as_distributive;
use crate::enumerate::enumerate_posets;
use crate::poly::RankPolynomial;
use crate::poset::FinitePoset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum D4Error {
    /// Image values must lie in `{-4..-1, 1..4}`.
    ValueOutOfRange { position: usize, value: i8 },
    /// Image magnitudes must form a bijection on `[4]`.
    DuplicateMagnitude { magnitude: i8 },
    /// Type D requires an even number of sign changes.
    OddNegativeCount { count: usize },
}

impl fmt::Display for D4Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            D4Error::ValueOutOfRange { position, value } => {
                write!(f, "image {value} at position {position} outside +-1..=+-4")
            }
            D4Error::DuplicateMagnitude { magnitude } => {
                write!(f, "magnitude {magnitude} appears twice")
            }
            D4Error::OddNegativeCount { count } => {
                write!(f, "{count} negative images; type D needs an even count")
            }
        }
    }
}

impl core::error::Error for D4Error {}

/// An even-signed permutation of `[4]`: `images[i - 1] = w(i)`, extended to
/// negative arguments by `w(-x) = -w(x)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    images: [i8; 4],
}

impl SignedPermutation {
    pub fn new(images: [i8; 4]) -> Result<Self, D4Error> {
        let mut seen = [false; 4];
        let mut negatives = 0;
        for (idx, &v) in images.iter().enumerate() {
            let magnitude = v.unsigned_abs();
            if magnitude < 1 || magnitude > 4 {
                return Err(D4Error::ValueOutOfRange {
                    position: idx + 1,
                    value: v,
                });
            }
            if seen[magnitude as usize - 1] {
                return Err(D4Error::DuplicateMagnitude {
                    magnitude: magnitude as i8,
                });
            }
            seen[magnitude as usize - 1] = true;
            if v < 0 {
                negatives += 1;
            }
        }
        if negatives % 2 != 0 {
            return Err(D4Error::OddNegativeCount { count: negatives });
        }
        Ok(SignedPermutation { images })
    }

    pub fn identity() -> Self {
        SignedPermutation {
            images: [1, 2, 3, 4],
        }
    }

    pub fn images(&self) -> [i8; 4] {
        self.images
    }

    /// `w(i)` for `i` in `{-4..-1, 1..4}`.
    pub fn image(&self, i: i8) -> i8 {
        if i > 0 {
            self.images[i as usize - 1]
        } else {
            -self.images[(-i) as usize - 1]
        }
    }

    /// `(u o v)(i) = u(v(i))`; the result stays even-signed.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let mut images = [0i8; 4];
        for i in 1..=4i8 {
            images[i as usize - 1] = self.image(other.image(i));
        }
        SignedPermutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images == [1, 2, 3, 4]
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, v) in self.images.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPermutation{self}")
    }
}

/// The four distinguished generators. The branch node `s_2` swaps positions
/// 2 and 3 and braids with each of the other three; those three commute
/// pairwise: `s_1` swaps 1 and 2, `s_3` swaps 3 and 4, and `s_4` is the
/// sign-flipping swap `1 -> -2, 2 -> -1`. Which leaf carries which label is
/// a free choice; any assignment yields isomorphic intervals.
pub fn generators() -> [SignedPermutation; 4] {
    [
        SignedPermutation {
            images: [2, 1, 3, 4],
        },
        SignedPermutation {
            images: [1, 3, 2, 4],
        },
        SignedPermutation {
            images: [1, 2, 4, 3],
        },
        SignedPermutation {
            images: [-2, -1, 3, 4],
        },
    ]
}

/// Evaluates a word in the generators (1-based letters) to a group element,
/// multiplying left to right.
pub fn word_element(letters: &[usize]) -> SignedPermutation {
    let gens = generators();
    letters.iter().fold(SignedPermutation::identity(), |acc, &l| {
        acc.compose(&gens[l - 1])
    })
}

/// The element `s_2 s_1 s_3 s_4 s_2 s_4 s_3 s_1 s_2` whose interval is the
/// counterexample; the word is a palindrome, so the reading direction does
/// not matter.
pub fn counterexample_word() -> SignedPermutation {
    word_element(&[2, 1, 3, 4, 2, 4, 3, 1, 2])
}

/// The full group with Cayley-graph distances from the identity.
pub struct D4 {
    elements: Vec<SignedPermutation>,
    lengths: Vec<usize>,
}

impl D4 {
    /// Breadth-first closure of the identity under left multiplication by
    /// the generators.
    pub fn build() -> Self {
        let gens = generators();
        let mut dist: BTreeMap<SignedPermutation, usize> = BTreeMap::new();
        dist.insert(SignedPermutation::identity(), 0);
        let mut frontier = alloc::vec![SignedPermutation::identity()];
        let mut depth = 0;
        while !frontier.is_empty() {
            depth += 1;
            let mut next = Vec::new();
            for g in &frontier {
                for s in &gens {
                    let h = s.compose(g);
                    if !dist.contains_key(&h) {
                        dist.insert(h, depth);
                        next.push(h);
                    }
                }
            }
            frontier = next;
        }
        let mut elements = Vec::with_capacity(dist.len());
        let mut lengths = Vec::with_capacity(dist.len());
        for (g, l) in dist {
            elements.push(g);
            lengths.push(l);
        }
        assert_eq!(elements.len(), 192, "D4 has 2^3 * 4! elements");
        D4 { elements, lengths }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Coxeter length as graph distance from the identity.
    pub fn length(&self, g: &SignedPermutation) -> usize {
        let idx = self
            .elements
            .binary_search(g)
            .expect("every even-signed permutation lies in the group");
        self.lengths[idx]
    }

    /// The interval `[id, w]` in left weak order: downward closure of `w`
    /// under length-decreasing left multiplication by generators.
    pub fn interval(&self, w: &SignedPermutation) -> D4Interval {
        let gens = generators();
        let mut members: BTreeMap<SignedPermutation, usize> = BTreeMap::new();
        members.insert(*w, self.length(w));
        let mut frontier = alloc::vec![*w];
        while let Some(g) = frontier.pop() {
            let lg = self.length(&g);
            for s in &gens {
                let v = s.compose(&g);
                if self.length(&v) + 1 == lg && !members.contains_key(&v) {
                    members.insert(v, lg - 1);
                    frontier.push(v);
                }
            }
        }
        let elements: Vec<SignedPermutation> = members.keys().copied().collect();
        let ranks: Vec<usize> = members.values().copied().collect();
        let mut covers = Vec::new();
        for (hi, g) in elements.iter().enumerate() {
            for s in &gens {
                let v = s.compose(g);
                if self.length(&v) + 1 == self.length(g) {
                    let lo = elements
                        .binary_search(&v)
                        .expect("intervals are downward closed");
                    covers.push((lo, hi));
                }
            }
        }
        covers.sort_unstable();
        covers.dedup();
        D4Interval {
            elements,
            ranks,
            covers,
        }
    }
}

/// A left weak order interval in D4.
pub struct D4Interval {
    elements: Vec<SignedPermutation>,
    ranks: Vec<usize>,
    covers: Vec<(usize, usize)>,
}

impl D4Interval {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn rank_polynomial(&self) -> RankPolynomial {
        let top = self.ranks.iter().copied().max().unwrap_or(0);
        let mut coeffs = alloc::vec![0usize; top + 1];
        for &r in &self.ranks {
            coeffs[r] += 1;
        }
        RankPolynomial::new(coeffs)
    }
}

/// Rank-generating function of the counterexample interval.
pub fn counterexample_polynomial() -> RankPolynomial {
    let group = D4::build();
    group.interval(&counterexample_word()).rank_polynomial()
}

/// Result of the search showing no distributive lattice shares the
/// counterexample's rank-generating function.
#[derive(Debug, Clone)]
pub struct NonrealizabilityReport {
    /// The interval's rank-generating function.
    pub polynomial: RankPolynomial,
    /// The polynomial left after stripping the forced unique bottom and top
    /// of a hypothetical base poset.
    pub reduced: RankPolynomial,
    /// Minimal/maximal element counts forced on any realizing poset (the
    /// coefficients of `q` and `q^(deg-1)` in the reduced polynomial).
    pub forced_minimal: usize,
    pub forced_maximal: usize,
    /// Witness from the search constrained to the forced extreme counts;
    /// `None` is the expected verdict.
    pub constrained_witness: Option<FinitePoset>,
    /// Witness from the unconstrained search over all classes of the same
    /// size; also expected `None`.
    pub unconstrained_witness: Option<FinitePoset>,
    /// Whether the atom-count reduction step was itself verified by brute
    /// force on all posets of up to five elements.
    pub atom_count_checked: bool,
}

impl NonrealizabilityReport {
    pub fn nonexistent(&self) -> bool {
        self.constrained_witness.is_none() && self.unconstrained_witness.is_none()
    }
}

/// Runs the whole counterexample argument: checks the atom-count lemma at
/// small sizes, strips the forced bottom and top, and searches all
/// seven-element poset classes (both with and without the extreme-count
/// constraint) for a realization of the reduced polynomial.
pub fn nonrealizability() -> NonrealizabilityReport {
    let polynomial = counterexample_polynomial();
    // Coefficient of q in F(J(P), q) counts one-element ideals, i.e. the
    // minimal elements of P; dually the second-highest coefficient counts
    // maximal elements. Checked by brute force before being relied on.
    let mut atom_count_checked = true;
    for k in 0..=5 {
        for p in enumerate_posets(k, None, None).expect("k <= 8") {
            let f = p.order_ideals().expect("small ground set").rank_polynomial();
            if f.coefficient(1) != p.minimal_elements().len() {
                atom_count_checked = false;
            }
            if k >= 1 && f.coefficient(k - 1) != p.maximal_elements().len() {
                atom_count_checked = false;
            }
        }
    }
    let degree = polynomial.degree().expect("interval polynomial is nonzero");
    assert_eq!(
        polynomial.coefficient(1),
        1,
        "a realizing base poset would have a unique minimal element"
    );
    assert_eq!(
        polynomial.coefficient(degree - 1),
        1,
        "a realizing base poset would have a unique maximal element"
    );
    // Deleting the forced bottom and top drops the constant and leading
    // term and shifts every ideal size down by one.
    let reduced = RankPolynomial::new(polynomial.coeffs()[1..degree].to_vec());
    let forced_minimal = reduced.coefficient(1);
    let forced_maximal = reduced.coefficient(reduced.degree().unwrap_or(0) - 1);
    let constrained_witness =
        realizable_as_distributive(&reduced, Some(forced_minimal), Some(forced_maximal))
            .expect("degree within search bounds");
    let unconstrained_witness =
        realizable_as_distributive(&reduced, None, None).expect("degree within search bounds");
    NonrealizabilityReport {
        polynomial,
        reduced,
        forced_minimal,
        forced_maximal,
        constrained_witness,
        unconstrained_witness,
        atom_count_checked,
    }
}
