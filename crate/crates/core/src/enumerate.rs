//! Brute-force enumeration of square-free words, used as the oracle for the
//! construction.
//!
//! Linear words are generated depth-first in lexicographic order, extending
//! only square-free prefixes; each extension checks the squares ending at the
//! new letter. Circular words are the linear ones that are their own least
//! rotation and pass the circular square test.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::pansiot::{encode_linear, LinearCodeword};
use crate::words::{least_rotation, CircularWord, Letter, LinearWord};

/// Longest length accepted by the circular enumeration routines.
pub const MAX_ENUMERATION_LENGTH: usize = 40;

/// Growth constant of ternary square-free linear words, for display only.
pub const LINEAR_GROWTH_REFERENCE: f64 = 1.30176;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("length {0} is out of range 1..={MAX_ENUMERATION_LENGTH}")]
    LengthOutOfRange(usize),
    #[error("minimal squares need period at least 2, got {0}")]
    PeriodTooSmall(usize),
    #[error("empty range {0}..={1}")]
    EmptyRange(usize, usize),
}

fn check_length(l: usize) -> Result<(), EnumerateError> {
    if (1..=MAX_ENUMERATION_LENGTH).contains(&l) {
        Ok(())
    } else {
        Err(EnumerateError::LengthOutOfRange(l))
    }
}

fn has_square_suffix(w: &[Letter]) -> bool {
    let n = w.len();
    (1..=n / 2).any(|p| w[n - 2 * p..n - p] == w[n - p..])
}

/// Square-free words of a fixed length in lexicographic order.
#[derive(Debug, Clone)]
pub struct SquareFreeWords {
    len: usize,
    word: Vec<Letter>,
    started: bool,
    done: bool,
}

impl SquareFreeWords {
    pub fn new(len: usize) -> Self {
        SquareFreeWords {
            len,
            word: Vec::with_capacity(len),
            started: false,
            done: false,
        }
    }

    // Push the smallest letter >= `from` that keeps the word square-free.
    fn push_from(&mut self, from: usize) -> bool {
        for x in &Letter::ALL[from.min(3)..] {
            self.word.push(*x);
            if !has_square_suffix(&self.word) {
                return true;
            }
            self.word.pop();
        }
        false
    }

    // Replace the last letter by the next valid one, backtracking as needed.
    fn increment(&mut self) -> bool {
        while let Some(last) = self.word.pop() {
            if self.push_from(last.index() + 1) {
                return true;
            }
        }
        false
    }

    fn fill(&mut self) -> bool {
        while self.word.len() < self.len {
            if !self.push_from(0) && !self.increment() {
                return false;
            }
        }
        true
    }
}

impl Iterator for SquareFreeWords {
    type Item = LinearWord;

    fn next(&mut self) -> Option<LinearWord> {
        if self.done {
            return None;
        }
        let found = if self.started {
            self.increment() && self.fill()
        } else {
            self.started = true;
            self.fill()
        };
        if found {
            Some(LinearWord::new(self.word.clone()))
        } else {
            self.done = true;
            None
        }
    }
}

pub fn enumerate_square_free_linear(l: usize) -> SquareFreeWords {
    SquareFreeWords::new(l)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dedup {
    Rotation,
    Isomorphism,
}

// Canonical representatives of all square-free circular words of length l.
fn circular_reps(l: usize) -> impl Iterator<Item = CircularWord> {
    SquareFreeWords::new(l)
        .filter(|w| least_rotation(w.letters()) == 0)
        .map(|w| CircularWord::new(w.into_letters()).expect("nonempty"))
        .filter(CircularWord::is_square_free)
}

/// All square-free circular words of length `l`, sorted, one per rotation
/// class or per isomorphism class.
pub fn enumerate_circular(l: usize, dedup: Dedup) -> Result<Vec<CircularWord>, EnumerateError> {
    check_length(l)?;
    Ok(match dedup {
        Dedup::Rotation => circular_reps(l).collect(),
        Dedup::Isomorphism => circular_reps(l)
            .map(|c| c.canonical_iso_form())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub length: usize,
    /// Square-free circular words up to rotation.
    pub raw_count: usize,
    /// ... and up to isomorphism.
    pub iso_count: usize,
    /// Isomorphism-class representatives, at most the requested cap.
    pub representatives: Vec<CircularWord>,
}

pub fn count_circular(l: usize) -> Result<EnumerationReport, EnumerateError> {
    count_circular_capped(l, 0)
}

pub fn count_circular_capped(l: usize, max_representatives: usize) -> Result<EnumerationReport, EnumerateError> {
    check_length(l)?;
    let mut raw_count = 0;
    let mut classes = BTreeSet::new();
    for c in circular_reps(l) {
        raw_count += 1;
        classes.insert(c.canonical_iso_form());
    }
    Ok(EnumerationReport {
        length: l,
        raw_count,
        iso_count: classes.len(),
        representatives: classes.into_iter().take(max_representatives).collect(),
    })
}

/// Lengths up to `max_l` with exactly one square-free circular word up to
/// isomorphism.
pub fn uniqueness_lengths(max_l: usize) -> Result<Vec<usize>, EnumerateError> {
    check_length(max_l)?;
    let mut out = vec![];
    for l in 1..=max_l {
        if count_circular(l)?.iso_count == 1 {
            out.push(l);
        }
    }
    Ok(out)
}

/// Minimal squares `uu` with `|u| = p`. By the correspondence with circular
/// words, the roots are exactly the conjugates of square-free circular words
/// of length `p`. With [`Dedup::Isomorphism`] only roots from one word per
/// isomorphism class are listed.
pub fn minimal_squares(p: usize, dedup: Dedup) -> Result<Vec<LinearWord>, EnumerateError> {
    if p < 2 {
        return Err(EnumerateError::PeriodTooSmall(p));
    }
    Ok(enumerate_circular(p, dedup)?
        .iter()
        .flat_map(|c| c.conjugates())
        .map(|u| u.squared())
        .collect())
}

/// Linear codewords (length `2p - 2`) of the minimal squares of period `p`.
pub fn minimal_square_codewords(p: usize) -> Result<BTreeSet<LinearCodeword>, EnumerateError> {
    Ok(minimal_squares(p, Dedup::Isomorphism)?
        .iter()
        .map(|sq| encode_linear(sq).expect("minimal squares of period >= 2 have no letter squares"))
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthReport {
    pub lengths: Vec<usize>,
    pub raw_counts: Vec<usize>,
    pub iso_counts: Vec<usize>,
    /// `raw_counts[i+1] / raw_counts[i]`, when both are positive.
    pub raw_ratios: Vec<Option<f64>>,
    pub iso_ratios: Vec<Option<f64>>,
    pub raw_geometric_mean: Option<f64>,
    pub iso_geometric_mean: Option<f64>,
}

fn ratios(counts: &[usize]) -> Vec<Option<f64>> {
    counts
        .windows(2)
        .map(|w| (w[0] > 0 && w[1] > 0).then(|| w[1] as f64 / w[0] as f64))
        .collect()
}

fn geometric_mean(ratios: &[Option<f64>]) -> Option<f64> {
    let logs: Vec<f64> = ratios.iter().flatten().map(|r| r.ln()).collect();
    (!logs.is_empty()).then(|| (logs.iter().sum::<f64>() / logs.len() as f64).exp())
}

pub fn growth_report(l_min: usize, l_max: usize) -> Result<GrowthReport, EnumerateError> {
    if l_min >= l_max {
        return Err(EnumerateError::EmptyRange(l_min, l_max));
    }
    check_length(l_min)?;
    check_length(l_max)?;
    let reports = (l_min..=l_max).map(count_circular).collect::<Result<Vec<_>, _>>()?;
    let raw_counts: Vec<usize> = reports.iter().map(|r| r.raw_count).collect();
    let iso_counts: Vec<usize> = reports.iter().map(|r| r.iso_count).collect();
    let raw_ratios = ratios(&raw_counts);
    let iso_ratios = ratios(&iso_counts);
    Ok(GrowthReport {
        lengths: (l_min..=l_max).collect(),
        raw_geometric_mean: geometric_mean(&raw_ratios),
        iso_geometric_mean: geometric_mean(&iso_ratios),
        raw_counts,
        iso_counts,
        raw_ratios,
        iso_ratios,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
        xs.into_iter().map(|x| x.to_string()).collect()
    }

    // All 3^l words, filtered by the library square test.
    fn brute_force_square_free(l: usize) -> Vec<LinearWord> {
        (0..3usize.pow(l as u32))
            .map(|mut k| {
                let mut v = vec![Letter::A; l];
                for i in (0..l).rev() {
                    v[i] = Letter::from_index(k % 3).unwrap();
                    k /= 3;
                }
                LinearWord::new(v)
            })
            .filter(LinearWord::is_square_free)
            .collect()
    }

    #[test]
    fn linear_examples() {
        assert_eq!(strs(enumerate_square_free_linear(1)), ["a", "b", "c"]);
        assert_eq!(enumerate_square_free_linear(2).count(), 6);
        assert_eq!(enumerate_square_free_linear(5).count(), 30);
        assert_eq!(strs(enumerate_square_free_linear(0)), [""]);
    }

    #[test]
    fn linear_matches_brute_force() {
        for l in 0..=9 {
            let dfs: Vec<_> = enumerate_square_free_linear(l).collect();
            assert_eq!(dfs, brute_force_square_free(l), "length {l}");
        }
    }

    #[test]
    fn circular_examples() {
        assert!(enumerate_circular(5, Dedup::Rotation).unwrap().is_empty());
        assert!(enumerate_circular(5, Dedup::Isomorphism).unwrap().is_empty());
        assert_eq!(strs(enumerate_circular(4, Dedup::Isomorphism).unwrap()), ["(abac)"]);
        assert!(enumerate_circular(18, Dedup::Isomorphism).unwrap().len() >= 2);
        assert_eq!(
            strs(enumerate_circular(1, Dedup::Rotation).unwrap()),
            ["(a)", "(b)", "(c)"]
        );
        assert_eq!(
            strs(enumerate_circular(2, Dedup::Rotation).unwrap()),
            ["(ab)", "(ac)", "(bc)"]
        );
    }

    #[test]
    fn count_examples() {
        let r = count_circular(7).unwrap();
        assert_eq!((r.raw_count, r.iso_count), (0, 0));
        assert_eq!(count_circular(3).unwrap().iso_count, 1);
        assert_eq!(count_circular(21).unwrap().iso_count, 1);
        assert_eq!(count_circular(0), Err(EnumerateError::LengthOutOfRange(0)));
        assert_eq!(
            count_circular(MAX_ENUMERATION_LENGTH + 1),
            Err(EnumerateError::LengthOutOfRange(MAX_ENUMERATION_LENGTH + 1))
        );
    }

    #[test]
    fn report_bounds() {
        for l in 1..=16 {
            let r = count_circular_capped(l, 3).unwrap();
            assert!(r.iso_count <= r.raw_count && r.raw_count <= 6 * r.iso_count, "{l}");
            assert_eq!(r.representatives.len(), r.iso_count.min(3));
        }
    }

    #[test]
    fn uniqueness_short() {
        assert_eq!(uniqueness_lengths(4).unwrap(), [1, 2, 3, 4]);
    }

    #[test]
    fn minimal_square_codeword_examples() {
        assert_eq!(strs(minimal_square_codewords(2).unwrap()), ["00"]);
        assert_eq!(strs(minimal_square_codewords(3).unwrap()), ["1111"]);
        assert_eq!(strs(minimal_square_codewords(4).unwrap()), ["010101", "101010"]);
        assert_eq!(
            strs(minimal_square_codewords(6).unwrap()),
            ["0110110110", "1011011011", "1101101101"]
        );
        assert!(minimal_square_codewords(5).unwrap().is_empty());
        assert_eq!(minimal_square_codewords(1), Err(EnumerateError::PeriodTooSmall(1)));
    }

    #[test]
    fn minimal_squares_are_minimal() {
        for p in 2..=9 {
            for dedup in [Dedup::Rotation, Dedup::Isomorphism] {
                for sq in minimal_squares(p, dedup).unwrap() {
                    assert!(sq.is_minimal_square(), "{sq}");
                }
            }
            for c in minimal_square_codewords(p).unwrap() {
                assert_eq!(c.len(), 2 * p - 2);
            }
        }
    }

    #[test]
    fn growth_small_range() {
        let g = growth_report(5, 10).unwrap();
        assert_eq!(g.raw_counts[0], 0);
        assert!(g.raw_counts[1] > 0);
        assert_eq!(g.raw_counts[2], 0);
        assert!(g.raw_counts[3] > 0);
        assert_eq!(&g.raw_counts[4..], [0, 0]);
        assert!(g.raw_ratios.iter().all(Option::is_none));
        assert_eq!(g.raw_geometric_mean, None);
        let g = growth_report(3, 4).unwrap();
        assert!(g.raw_counts.iter().all(|&c| c > 0));
        assert_eq!(growth_report(4, 4), Err(EnumerateError::EmptyRange(4, 4)));
    }
}
