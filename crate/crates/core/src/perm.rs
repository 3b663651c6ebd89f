//! Permutations of `[n] = {1, ..., n}` in one-line notation, with inversion
//! and non-inversion machinery and the direct-sum embedding of
//! `S_m x S_n` into `S_{m+n}`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

/// A set of ordered index pairs, as returned by [`Permutation::inversions`]
/// and [`Permutation::non_inversions`].
pub type PairSet = BTreeSet<(usize, usize)>;

/// A permutation `w` of `[n]` in one-line notation: `word[i - 1] = w(i)`.
///
/// Values and positions are 1-based everywhere in the public interface.
/// The derived `Ord` compares words lexicographically; it is a storage
/// order, not the weak order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    /// The one-line word was empty; permutations have `n >= 1`.
    EmptyWord,
    /// A letter fell outside `1..=n` (position and value are 1-based).
    ValueOutOfRange { position: usize, value: usize, n: usize },
    /// A letter occurred twice, so the word is not a bijection.
    DuplicateValue { value: usize },
    /// Two permutations of different sizes were combined.
    SizeMismatch { left: usize, right: usize },
    /// An adjacent transposition index outside `1..n` was requested.
    GeneratorOutOfRange { index: usize, n: usize },
    /// A transposition needs `1 <= a < b <= n`.
    BadTransposition { a: usize, b: usize, n: usize },
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::EmptyWord => write!(f, "permutation word is empty"),
            PermError::ValueOutOfRange { position, value, n } => write!(
                f,
                "value {value} at position {position} is outside 1..={n}"
            ),
            PermError::DuplicateValue { value } => {
                write!(f, "value {value} appears more than once")
            }
            PermError::SizeMismatch { left, right } => {
                write!(f, "size mismatch: {left} vs {right}")
            }
            PermError::GeneratorOutOfRange { index, n } => {
                write!(f, "adjacent transposition index {index} is outside 1..{n}")
            }
            PermError::BadTransposition { a, b, n } => {
                write!(f, "transposition ({a} {b}) needs 1 <= a < b <= {n}")
            }
        }
    }
}

impl core::error::Error for PermError {}

impl Permutation {
    /// Builds a permutation from a 1-based one-line word, rejecting anything
    /// that is not a bijection on `[n]`.
    pub fn from_word(word: Vec<usize>) -> Result<Self, PermError> {
        if word.is_empty() {
            return Err(PermError::EmptyWord);
        }
        let n = word.len();
        let mut seen = alloc::vec![false; n];
        for (idx, &value) in word.iter().enumerate() {
            if value < 1 || value > n {
                return Err(PermError::ValueOutOfRange {
                    position: idx + 1,
                    value,
                    n,
                });
            }
            if seen[value - 1] {
                return Err(PermError::DuplicateValue { value });
            }
            seen[value - 1] = true;
        }
        Ok(Permutation { word })
    }

    /// The identity of `S_n`. Panics if `n == 0`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations have n >= 1");
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The adjacent transposition `s_i = (i, i+1)` in `S_n`, for `1 <= i < n`.
    pub fn adjacent_transposition(i: usize, n: usize) -> Result<Self, PermError> {
        if i < 1 || i >= n {
            return Err(PermError::GeneratorOutOfRange { index: i, n });
        }
        Self::transposition(i, i + 1, n)
    }

    /// The transposition `(a, b)` in `S_n`, for `1 <= a < b <= n`.
    pub fn transposition(a: usize, b: usize, n: usize) -> Result<Self, PermError> {
        if a < 1 || a >= b || b > n {
            return Err(PermError::BadTransposition { a, b, n });
        }
        let mut word: Vec<usize> = (1..=n).collect();
        word.swap(a - 1, b - 1);
        Ok(Permutation { word })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// The one-line word; entry `i - 1` is `w(i)`.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)` for `i` in `1..=n+1`, treating `n + 1` as a virtual fixed
    /// point. Panics for other indices.
    pub fn image(&self, i: usize) -> usize {
        if i == self.n() + 1 {
            i
        } else {
            self.word[i - 1]
        }
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(idx, &v)| v == idx + 1)
    }

    /// The inversion set `{(i, j) : i < j, w(i) > w(j)}`.
    pub fn inversions(&self) -> PairSet {
        let n = self.n();
        let mut set = PairSet::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if self.word[i - 1] > self.word[j - 1] {
                    set.insert((i, j));
                }
            }
        }
        set
    }

    /// The non-inversion set `{(i, j) : i <= j <= n + 1, w(i) <= w(j)}`,
    /// with `w(n + 1) = n + 1`. Contains every `(i, i)` and every
    /// `(i, n + 1)`.
    pub fn non_inversions(&self) -> PairSet {
        let n = self.n();
        let mut set = PairSet::new();
        for i in 1..=n {
            for j in i..=(n + 1) {
                if self.image(i) <= self.image(j) {
                    set.insert((i, j));
                }
            }
        }
        set
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.word[i] > self.word[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn inverse(&self) -> Permutation {
        let n = self.n();
        let mut word = alloc::vec![0usize; n];
        for (idx, &value) in self.word.iter().enumerate() {
            word[value - 1] = idx + 1;
        }
        Permutation { word }
    }

    /// Group product under the convention `(u o v)(i) = u(v(i))`, so
    /// `self.compose(v)` applies `v` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.n() != other.n() {
            return Err(PermError::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let word = other.word.iter().map(|&v| self.word[v - 1]).collect();
        Ok(Permutation { word })
    }

    /// The direct sum `v x w` in `S_{m+n}`: the word of `v` followed by the
    /// word of `w` shifted up by `m`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let m = self.n();
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|&v| v + m));
        Permutation { word }
    }

    /// All of `S_n` in lexicographic word order (so the identity first).
    pub fn all(n: usize) -> Vec<Permutation> {
        assert!(n >= 1, "permutations have n >= 1");
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { word: word.clone() });
            if !next_word(&mut word) {
                break;
            }
        }
        out
    }
}

/// Advances to the next word in lexicographic order; false once exhausted.
fn next_word(word: &mut [usize]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    /// One-line notation: digits juxtaposed when `n <= 9`, else
    /// comma-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            for (idx, &v) in self.word.iter().enumerate() {
                if idx > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(word: &[usize]) -> Permutation {
        Permutation::from_word(word.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert_eq!(
            Permutation::from_word(vec![]).unwrap_err(),
            PermError::EmptyWord
        );
        assert_eq!(
            Permutation::from_word(vec![1, 3]).unwrap_err(),
            PermError::ValueOutOfRange {
                position: 2,
                value: 3,
                n: 2
            }
        );
        assert_eq!(
            Permutation::from_word(vec![2, 2, 1]).unwrap_err(),
            PermError::DuplicateValue { value: 2 }
        );
    }

    #[test]
    fn inversions_of_identity_and_transposition() {
        assert!(p(&[1, 2, 3, 4, 5]).inversions().is_empty());
        let inv: PairSet = p(&[2, 1]).inversions();
        assert_eq!(inv, PairSet::from([(1, 2)]));
    }

    #[test]
    fn inversions_of_32514() {
        let inv = p(&[3, 2, 5, 1, 4]).inversions();
        assert_eq!(inv, PairSet::from([(1, 2), (1, 4), (2, 4), (3, 4), (3, 5)]));
    }

    #[test]
    fn non_inversions_of_21() {
        let ninv = p(&[2, 1]).non_inversions();
        assert_eq!(ninv, PairSet::from([(1, 1), (1, 3), (2, 2), (2, 3)]));
    }

    #[test]
    fn non_inversions_of_identity_has_all_pairs() {
        let ninv = p(&[1, 2, 3, 4, 5]).non_inversions();
        assert_eq!(ninv.len(), 20);
    }

    #[test]
    fn inversions_and_non_inversions_partition_pairs() {
        // Complementary inside {(i, j) : i in [n], j in [n+1], i <= j}.
        for n in 1..=6 {
            for w in Permutation::all(n) {
                let inv = w.inversions();
                let ninv = w.non_inversions();
                assert_eq!(inv.len() + ninv.len(), n * (n + 3) / 2, "w = {w}");
                assert!(inv.intersection(&ninv).next().is_none());
            }
        }
    }

    #[test]
    fn length_examples() {
        assert_eq!(p(&[1, 2, 3, 4, 5]).length(), 0);
        assert_eq!(p(&[3, 2, 5, 1, 4]).length(), 5);
        assert_eq!(p(&[4, 1, 5, 2, 8, 6, 3, 7]).length(), 9);
    }

    #[test]
    fn length_invariant_under_inverse() {
        for w in Permutation::all(5) {
            assert_eq!(w.length(), w.inverse().length());
        }
    }

    #[test]
    fn inverse_and_compose() {
        assert_eq!(p(&[2, 3, 1]).inverse(), p(&[3, 1, 2]));
        let s1 = Permutation::adjacent_transposition(1, 5).unwrap();
        assert_eq!(s1, p(&[2, 1, 3, 4, 5]));
        assert_eq!(
            s1.compose(&Permutation::identity(5)).unwrap(),
            p(&[2, 1, 3, 4, 5])
        );
        for w in Permutation::all(4) {
            assert_eq!(w.inverse().inverse(), w);
            assert_eq!(w.compose(&w.inverse()).unwrap(), Permutation::identity(4));
        }
        assert!(matches!(
            p(&[2, 1]).compose(&p(&[1, 2, 3])),
            Err(PermError::SizeMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(p(&[2, 3, 1]).direct_sum(&p(&[3, 1, 2])), p(&[2, 3, 1, 6, 4, 5]));
        assert_eq!(
            Permutation::identity(3).direct_sum(&Permutation::identity(2)),
            Permutation::identity(5)
        );
    }

    #[test]
    fn direct_sum_adds_lengths() {
        for v in Permutation::all(3) {
            for w in Permutation::all(3) {
                assert_eq!(v.direct_sum(&w).length(), v.length() + w.length());
            }
        }
    }

    #[test]
    fn biconvexity_of_inversion_sets() {
        // For i <= j <= k: Inv and Ninv are each "transitive" and mixed
        // pairs force the third pair's type.
        for w in Permutation::all(5) {
            let n = w.n();
            let inv = w.inversions();
            let ninv = w.non_inversions();
            let is_inv = |a: usize, b: usize| inv.contains(&(a, b));
            let is_ninv = |a: usize, b: usize| ninv.contains(&(a, b));
            for i in 1..=n {
                for j in i..=n {
                    for k in j..=(n + 1) {
                        if j > i && k > j && k <= n + 1 && j <= n {
                            if is_inv(i, j) && is_inv(j, k) && k <= n {
                                assert!(is_inv(i, k));
                            }
                            if is_ninv(i, j) && is_ninv(j, k) {
                                assert!(is_ninv(i, k));
                            }
                            if is_inv(i, j) && is_ninv(i, k) {
                                assert!(is_ninv(j, k));
                            }
                            if is_ninv(i, j) && k <= n && is_inv(i, k) {
                                assert!(is_inv(j, k));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lexicographic_enumeration() {
        assert_eq!(Permutation::all(1).len(), 1);
        let s3 = Permutation::all(3);
        assert_eq!(s3.len(), 6);
        assert_eq!(s3[0], Permutation::identity(3));
        assert_eq!(s3[5], p(&[3, 2, 1]));
        assert_eq!(Permutation::all(6).len(), 720);
    }

    #[test]
    fn display_forms() {
        use alloc::string::ToString;
        assert_eq!(p(&[3, 2, 5, 1, 4]).to_string(), "32514");
        let big = Permutation::identity(10);
        assert_eq!(big.to_string(), "1,2,3,4,5,6,7,8,9,10");
    }
}
