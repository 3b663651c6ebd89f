//! Lehmer codes, the extended code matrix refining them, and code-based
//! inversion detection.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeError {
    EmptyCode,
    /// Entry `c_i` must satisfy `0 <= c_i <= n - i`. Index is 1-based.
    EntryOutOfRange { index: usize, entry: usize, max: usize },
    /// Componentwise operations need equal lengths.
    LengthMismatch { left: usize, right: usize },
    /// Index pair outside `i in [n]`, `j in [n+1]`, `i <= j`.
    InvalidIndexPair { i: usize, j: usize, n: usize },
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::EmptyCode => write!(f, "code is empty"),
            CodeError::EntryOutOfRange { index, entry, max } => {
                write!(f, "entry {entry} at index {index} exceeds bound {max}")
            }
            CodeError::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            CodeError::InvalidIndexPair { i, j, n } => {
                write!(f, "index pair ({i}, {j}) invalid for n = {n}")
            }
        }
    }
}

impl core::error::Error for CodeError {}

/// The Lehmer code `c(w) = (c_1, ..., c_n)`: `c_i` counts the inversions of
/// `w` whose first coordinate is `i`, so `0 <= c_i <= n - i` and the entries
/// sum to the length of `w`.
///
/// The derived `Ord` is lexicographic and only used as a storage order; the
/// product order lives in [`crate::codelattice`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LehmerCode {
    entries: Vec<usize>,
}

impl LehmerCode {
    /// Validates the box bound `0 <= c_i <= n - i`, reporting the first
    /// offending 1-based index.
    pub fn new(entries: Vec<usize>) -> Result<Self, CodeError> {
        if entries.is_empty() {
            return Err(CodeError::EmptyCode);
        }
        let n = entries.len();
        for (idx, &entry) in entries.iter().enumerate() {
            let max = n - (idx + 1);
            if entry > max {
                return Err(CodeError::EntryOutOfRange {
                    index: idx + 1,
                    entry,
                    max,
                });
            }
        }
        Ok(LehmerCode { entries })
    }

    pub fn zero(n: usize) -> Self {
        assert!(n >= 1);
        LehmerCode {
            entries: alloc::vec![0; n],
        }
    }

    /// The Lehmer code of a permutation.
    pub fn of(w: &Permutation) -> Self {
        let n = w.n();
        let word = w.word();
        let mut entries = alloc::vec![0usize; n];
        for i in 0..n {
            entries[i] = (i + 1..n).filter(|&j| word[j] < word[i]).count();
        }
        LehmerCode { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `c_i` for `i` in `1..=n+1`, with the convention `c_{n+1} = 0`.
    pub fn entry(&self, i: usize) -> usize {
        if i == self.entries.len() + 1 {
            0
        } else {
            self.entries[i - 1]
        }
    }

    /// Sum of the entries; equals the length of the encoded permutation.
    pub fn sum(&self) -> usize {
        self.entries.iter().sum()
    }

    /// The unique permutation with this code: position `i` takes the
    /// `(c_i + 1)`-th smallest value not used so far.
    pub fn to_permutation(&self) -> Permutation {
        let n = self.entries.len();
        let mut available: Vec<usize> = (1..=n).collect();
        let mut word = Vec::with_capacity(n);
        for &c in &self.entries {
            word.push(available.remove(c));
        }
        Permutation::from_word(word).expect("a valid code always decodes")
    }

    /// Compact label: juxtaposed digits when `n <= 9` (entries are then
    /// single digits), else comma-separated.
    pub fn label(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        if self.len() <= 9 {
            for &e in &self.entries {
                let _ = write!(s, "{e}");
            }
        } else {
            for (idx, &e) in self.entries.iter().enumerate() {
                if idx > 0 {
                    s.push(',');
                }
                let _ = write!(s, "{e}");
            }
        }
        s
    }
}

impl fmt::Display for LehmerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, &e) in self.entries.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for LehmerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LehmerCode{self}")
    }
}

/// The extended code matrix: `m_{i,j}` counts inversions `(i, k)` with
/// `k < j`, for `i in [n]`, `j in [n+1]`.
///
/// Column 1 is always zero and column `n + 1` recovers the Lehmer code.
#[derive(Clone, PartialEq, Eq)]
pub struct ExtendedCode {
    rows: Vec<Vec<usize>>,
}

impl ExtendedCode {
    pub fn of(w: &Permutation) -> Self {
        let n = w.n();
        let word = w.word();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            // Running prefix count: column j records inversions (i+1, k)
            // with k < j, so position k = j joins the count after column j.
            let mut row = alloc::vec![0usize; n + 1];
            let mut count = 0;
            for j in 1..=(n + 1) {
                row[j - 1] = count;
                if j <= n && j >= i + 2 && word[j - 1] < word[i] {
                    count += 1;
                }
            }
            rows.push(row);
        }
        ExtendedCode { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// `m_{i,j}` with 1-based `i in [n]`, `j in [n+1]`. Panics out of range.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - 1]
    }

    /// Rows of the matrix; `rows()[i - 1][j - 1]` is `m_{i,j}`.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Column `n + 1`, which equals the Lehmer code.
    pub fn lehmer_column(&self) -> LehmerCode {
        let n = self.n();
        let entries = self.rows.iter().map(|row| row[n]).collect();
        LehmerCode::new(entries).expect("extended code column is a valid code")
    }
}

impl fmt::Debug for ExtendedCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExtendedCode[")?;
        for row in &self.rows {
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}

/// Detects membership `(i, j) in Ninv(w)` from codes alone, via the
/// inequality `c_i(w) <= c_j(w) + m_{i,j}(w)`; requires `i in [n]`,
/// `j in [n+1]`, `i <= j`.
pub fn is_non_inversion_via_code(
    w: &Permutation,
    i: usize,
    j: usize,
) -> Result<bool, CodeError> {
    let n = w.n();
    if i < 1 || i > n || j < i || j > n + 1 {
        return Err(CodeError::InvalidIndexPair { i, j, n });
    }
    let c = LehmerCode::of(w);
    let m = ExtendedCode::of(w);
    Ok(c.entry(i) <= c.entry(j) + m.entry(i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(word: &[usize]) -> Permutation {
        Permutation::from_word(word.to_vec()).unwrap()
    }

    #[test]
    fn code_of_31524() {
        assert_eq!(LehmerCode::of(&p(&[3, 1, 5, 2, 4])).entries(), &[2, 0, 2, 0, 0]);
    }

    #[test]
    fn code_of_41528637() {
        assert_eq!(
            LehmerCode::of(&p(&[4, 1, 5, 2, 8, 6, 3, 7])).entries(),
            &[3, 0, 2, 0, 3, 1, 0, 0]
        );
    }

    #[test]
    fn code_of_identity_is_zero() {
        assert_eq!(LehmerCode::of(&Permutation::identity(5)), LehmerCode::zero(5));
    }

    #[test]
    fn decode_matches_known_example() {
        let c = LehmerCode::new(vec![2, 0, 2, 0, 0]).unwrap();
        assert_eq!(c.to_permutation(), p(&[3, 1, 5, 2, 4]));
        assert_eq!(LehmerCode::zero(4).to_permutation(), Permutation::identity(4));
    }

    #[test]
    fn rejects_out_of_box_entries() {
        assert_eq!(
            LehmerCode::new(vec![1, 2, 0]).unwrap_err(),
            CodeError::EntryOutOfRange {
                index: 2,
                entry: 2,
                max: 1
            }
        );
        assert_eq!(LehmerCode::new(vec![]).unwrap_err(), CodeError::EmptyCode);
    }

    #[test]
    fn round_trip_over_s6() {
        for w in Permutation::all(6) {
            assert_eq!(LehmerCode::of(&w).to_permutation(), w);
        }
    }

    #[test]
    fn codes_fill_the_box_injectively() {
        use alloc::collections::BTreeSet;
        for n in 1..=6 {
            let mut seen = BTreeSet::new();
            for w in Permutation::all(n) {
                let c = LehmerCode::of(&w);
                assert!(c.entries().iter().enumerate().all(|(i, &e)| e <= n - i - 1));
                assert!(seen.insert(c));
            }
            let box_size: usize = (1..=n).product();
            assert_eq!(seen.len(), box_size);
        }
    }

    #[test]
    fn extended_code_of_31524() {
        let m = ExtendedCode::of(&p(&[3, 1, 5, 2, 4]));
        assert_eq!(m.rows()[0], vec![0, 0, 1, 1, 2, 2]);
        assert_eq!(m.rows()[1], vec![0, 0, 0, 0, 0, 0]);
        assert_eq!(m.rows()[2], vec![0, 0, 0, 0, 1, 2]);
        assert_eq!(m.rows()[3], vec![0, 0, 0, 0, 0, 0]);
        assert_eq!(m.rows()[4], vec![0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn extended_code_of_identity_is_zero() {
        let m = ExtendedCode::of(&Permutation::identity(4));
        assert!(m.rows().iter().all(|row| row.iter().all(|&e| e == 0)));
    }

    #[test]
    fn extended_code_values_of_41528637() {
        let m = ExtendedCode::of(&p(&[4, 1, 5, 2, 8, 6, 3, 7]));
        assert_eq!(m.entry(1, 3), 1);
        assert_eq!(m.entry(1, 5), 2);
        assert_eq!(m.entry(1, 6), 2);
        assert_eq!(m.entry(3, 5), 1);
        assert_eq!(m.entry(3, 6), 1);
    }

    #[test]
    fn last_column_recovers_code() {
        for w in Permutation::all(6) {
            assert_eq!(ExtendedCode::of(&w).lehmer_column(), LehmerCode::of(&w));
        }
    }

    #[test]
    fn column_steps_and_zero_prefix() {
        for w in Permutation::all(5) {
            let m = ExtendedCode::of(&w);
            for i in 1..=5 {
                for j in 1..=6 {
                    if j <= i + 1 {
                        assert_eq!(m.entry(i, j), 0);
                    }
                    if j <= 5 {
                        let step = m.entry(i, j + 1) - m.entry(i, j);
                        assert!(step <= 1);
                    }
                }
            }
        }
    }

    #[test]
    fn non_inversion_detection_on_31524() {
        let w = p(&[3, 1, 5, 2, 4]);
        assert_eq!(is_non_inversion_via_code(&w, 1, 2), Ok(false));
        assert_eq!(is_non_inversion_via_code(&w, 1, 5), Ok(true));
        for i in 1..=5 {
            assert_eq!(is_non_inversion_via_code(&w, i, i), Ok(true));
        }
        assert!(is_non_inversion_via_code(&w, 3, 2).is_err());
        assert!(is_non_inversion_via_code(&w, 1, 7).is_err());
    }

    #[test]
    fn inversion_detection_equivalences() {
        // Three equivalent tests for (i, j) being a non-inversion: the
        // definition, the triangle inequality on matrix entries for every
        // valid k, and the code inequality.
        for w in Permutation::all(5) {
            let n = w.n();
            let ninv = w.non_inversions();
            let c = LehmerCode::of(&w);
            let m = ExtendedCode::of(&w);
            let mat = |i: usize, j: usize| if i == n + 1 { 0 } else { m.entry(i, j) };
            for i in 1..=n {
                for j in i..=(n + 1) {
                    let a = ninv.contains(&(i, j));
                    for k in j..=(n + 1) {
                        let b = mat(i, k) <= mat(i, j) + mat(j, k);
                        assert_eq!(a, b, "w = {w}, (i,j,k) = ({i},{j},{k})");
                    }
                    let ccond = c.entry(i) <= c.entry(j) + mat(i, j);
                    assert_eq!(a, ccond);
                    assert_eq!(a, is_non_inversion_via_code(&w, i, j).unwrap());
                }
            }
        }
    }

    #[test]
    fn display_and_label() {
        use alloc::string::ToString;
        let c = LehmerCode::new(vec![2, 0, 2, 0, 0]).unwrap();
        assert_eq!(c.to_string(), "(2,0,2,0,0)");
        assert_eq!(c.label(), "20200");
    }
}
