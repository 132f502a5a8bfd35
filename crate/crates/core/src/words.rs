//! Ternary words, circular words, and the square tests everything else is
//! checked against.
//!
//! Square detection here is deliberately the naive scan over every
//! `(offset, period)` pair. It is the independent verifier for the
//! constructions in [`crate::construct`], so it must stay obviously correct.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid letter {0:?}, expected one of a, b, c")]
    InvalidLetter(char),
    #[error("circular words must be nonempty")]
    EmptyCircular,
    #[error("the empty word has no period")]
    EmptyWord,
    #[error("unbalanced parentheses in {0:?}")]
    Parentheses(String),
}

/// A letter of the alphabet `{a, b, c}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::A, Letter::B, Letter::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Letter> {
        Self::ALL.get(i).copied()
    }

    /// The letter distinct from both `self` and `other`.
    ///
    /// Only meaningful for distinct arguments; for equal ones the result is
    /// one of the two remaining letters.
    pub fn third(self, other: Letter) -> Letter {
        debug_assert_ne!(self, other);
        Self::ALL[3 - self.index() - other.index()]
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
        }
    }

    pub fn from_char(c: char) -> Result<Letter, WordError> {
        match c {
            'a' => Ok(Letter::A),
            'b' => Ok(Letter::B),
            'c' => Ok(Letter::C),
            other => Err(WordError::InvalidLetter(other)),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A bijection of `{a, b, c}`, stored as the images of `a`, `b`, `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LetterMap([Letter; 3]);

impl LetterMap {
    /// All six bijections, ordered lexicographically by their image triple.
    /// The identity comes first.
    pub const ALL: [LetterMap; 6] = {
        use Letter::*;
        [
            LetterMap([A, B, C]),
            LetterMap([A, C, B]),
            LetterMap([B, A, C]),
            LetterMap([B, C, A]),
            LetterMap([C, A, B]),
            LetterMap([C, B, A]),
        ]
    };

    pub fn apply(&self, x: Letter) -> Letter {
        self.0[x.index()]
    }

    pub fn apply_all(&self, letters: &[Letter]) -> Vec<Letter> {
        letters.iter().map(|&x| self.apply(x)).collect()
    }
}

/// Location of a square factor `xx`: it starts at `offset` (0-based) and
/// `|x| = period`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Square {
    pub offset: usize,
    pub period: usize,
}

impl Square {
    /// 1-based start position, as used in printed reports.
    pub fn position(&self) -> usize {
        self.offset + 1
    }
}

/// Finds a square factor, preferring the smallest offset and then the
/// smallest period.
pub fn find_square_in<T: PartialEq>(s: &[T]) -> Option<Square> {
    let n = s.len();
    (0..n).find_map(|offset| {
        (1..=(n - offset) / 2)
            .find(|&p| s[offset..offset + p] == s[offset + p..offset + 2 * p])
            .map(|period| Square { offset, period })
    })
}

/// Square lying in a cyclic sequence: a factor `xx` of some rotation with
/// `2|x| <= len`. The offset refers to `s` itself.
pub fn find_cyclic_square_in<T: PartialEq + Clone>(s: &[T]) -> Option<Square> {
    let n = s.len();
    let doubled: Vec<T> = s.iter().chain(s.iter()).cloned().collect();
    (0..n).find_map(|offset| {
        (1..=n / 2)
            .find(|&p| doubled[offset..offset + p] == doubled[offset + p..offset + 2 * p])
            .map(|period| Square { offset, period })
    })
}

/// Start index of the lexicographically least rotation of `s`.
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0, 1, 0);
    while i < n && j < n && k < n {
        match s[(i + k) % n].cmp(&s[(j + k) % n]) {
            Ordering::Equal => k += 1,
            Ordering::Greater => {
                i += k + 1;
                if i <= j {
                    i = j + 1;
                }
                k = 0;
            }
            Ordering::Less => {
                j += k + 1;
                if j <= i {
                    j = i + 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

/// Smallest `q > 0` such that rotating `s` by `q` gives `s` back.
pub(crate) fn rotation_period<T: PartialEq>(s: &[T]) -> usize {
    let n = s.len();
    (1..n)
        .filter(|&q| n.is_multiple_of(q))
        .find(|&q| (0..n).all(|i| s[i] == s[(i + q) % n]))
        .unwrap_or(n)
}

/// Minimal period and exponent of a nonempty word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodData {
    pub min_period: usize,
    pub exponent: Ratio<usize>,
}

/// A finite word over `{a, b, c}`; may be empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearWord(Vec<Letter>);

impl LinearWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        LinearWord(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` followed by itself.
    pub fn squared(&self) -> LinearWord {
        LinearWord(self.0.repeat(2))
    }

    pub fn find_square(&self) -> Option<Square> {
        find_square_in(&self.0)
    }

    pub fn is_square_free(&self) -> bool {
        self.find_square().is_none()
    }

    /// True iff the word is `uu` for a nonempty `u` and contains no other
    /// square factor.
    pub fn is_minimal_square(&self) -> bool {
        let n = self.len();
        if n == 0 || n % 2 == 1 || self.0[..n / 2] != self.0[n / 2..] {
            return false;
        }
        let whole = Square {
            offset: 0,
            period: n / 2,
        };
        (0..n).all(|offset| {
            (1..=(n - offset) / 2).all(|p| {
                let sq = Square { offset, period: p };
                sq == whole || self.0[offset..offset + p] != self.0[offset + p..offset + 2 * p]
            })
        })
    }

    pub fn period_data(&self) -> Result<PeriodData, WordError> {
        let n = self.len();
        if n == 0 {
            return Err(WordError::EmptyWord);
        }
        let min_period = (1..=n)
            .find(|&p| (0..n - p).all(|i| self.0[i] == self.0[i + p]))
            .expect("the length is always a period");
        Ok(PeriodData {
            min_period,
            exponent: Ratio::new(n, min_period),
        })
    }
}

impl From<Vec<Letter>> for LinearWord {
    fn from(letters: Vec<Letter>) -> Self {
        LinearWord(letters)
    }
}

impl FromStr for LinearWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(Letter::from_char)
            .collect::<Result<Vec<_>, _>>()
            .map(LinearWord)
    }
}

impl fmt::Display for LinearWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|x| write!(f, "{x}"))
    }
}

/// A nonempty cyclic word, stored as its lexicographically least rotation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CircularWord(Vec<Letter>);

impl CircularWord {
    pub fn new(mut letters: Vec<Letter>) -> Result<Self, WordError> {
        if letters.is_empty() {
            return Err(WordError::EmptyCircular);
        }
        let start = least_rotation(&letters);
        letters.rotate_left(start);
        Ok(CircularWord(letters))
    }

    /// The canonical (least) representative.
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn representative(&self) -> LinearWord {
        LinearWord(self.0.clone())
    }

    /// The distinct rotations, starting with the representative.
    pub fn conjugates(&self) -> Vec<LinearWord> {
        (0..rotation_period(&self.0))
            .map(|i| {
                let mut v = self.0.clone();
                v.rotate_left(i);
                LinearWord(v)
            })
            .collect()
    }

    /// A square factor of some rotation, located on the representative.
    pub fn find_square(&self) -> Option<Square> {
        find_cyclic_square_in(&self.0)
    }

    pub fn is_square_free(&self) -> bool {
        self.find_square().is_none()
    }

    pub fn map_letters(&self, sigma: &LetterMap) -> CircularWord {
        CircularWord::new(sigma.apply_all(&self.0)).expect("nonempty")
    }

    pub fn is_isomorphic(&self, other: &CircularWord) -> bool {
        self.len() == other.len() && LetterMap::ALL.iter().any(|s| &self.map_letters(s) == other)
    }

    /// Least word over all letter bijections and rotations.
    pub fn canonical_iso_form(&self) -> CircularWord {
        LetterMap::ALL
            .iter()
            .map(|s| self.map_letters(s))
            .min()
            .expect("six bijections")
    }
}

impl FromStr for CircularWord {
    type Err = WordError;

    /// Accepts `(abac)` as well as a bare `abac`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = strip_parens(s)?.unwrap_or(s);
        let word: LinearWord = inner.parse()?;
        CircularWord::new(word.0)
    }
}

impl fmt::Display for CircularWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", LinearWord(self.0.clone()))
    }
}

/// `Some(inner)` for `"(inner)"`, `None` for a string without parentheses.
pub(crate) fn strip_parens(s: &str) -> Result<Option<&str>, WordError> {
    match (s.starts_with('('), s.ends_with(')')) {
        (true, true) if s.len() >= 2 => Ok(Some(&s[1..s.len() - 1])),
        (false, false) => Ok(None),
        _ => Err(WordError::Parentheses(s.to_string())),
    }
}

pub fn is_square_free(w: &LinearWord) -> bool {
    w.is_square_free()
}

pub fn is_circular_square_free(cw: &CircularWord) -> bool {
    cw.is_square_free()
}

pub fn are_isomorphic(x: &CircularWord, y: &CircularWord) -> bool {
    x.is_isomorphic(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> LinearWord {
        s.parse().unwrap()
    }

    fn cw(s: &str) -> CircularWord {
        s.parse().unwrap()
    }

    // Every (offset, period) pair, no early exit. Kept separate from the
    // library scan on purpose.
    fn all_squares(s: &[Letter]) -> Vec<Square> {
        let mut out = vec![];
        for offset in 0..s.len() {
            for period in 1..=(s.len() - offset) / 2 {
                if (0..period).all(|i| s[offset + i] == s[offset + period + i]) {
                    out.push(Square { offset, period });
                }
            }
        }
        out
    }

    fn all_words(len: usize) -> Vec<LinearWord> {
        let mut out = vec![LinearWord::default()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|v| {
                    Letter::ALL.into_iter().map(move |x| {
                        let mut v = v.clone();
                        v.0.push(x);
                        v
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn find_square_examples() {
        assert_eq!(w("abcabc").find_square(), Some(Square { offset: 0, period: 3 }));
        assert_eq!(w("abcabc").find_square().unwrap().position(), 1);
        assert_eq!(w("abcacbabcb").find_square(), None);
        assert_eq!(w("abacaba").find_square(), None);
        assert!(all_squares(w("abcacbabcb").letters()).is_empty());
        assert!(all_squares(w("abacaba").letters()).is_empty());
    }

    #[test]
    fn find_square_tie_break() {
        // "aa" at 1 and "abab"... the smallest offset wins, then period.
        assert_eq!(w("cabab").find_square(), Some(Square { offset: 1, period: 2 }));
        assert_eq!(w("aabab").find_square(), Some(Square { offset: 0, period: 1 }));
    }

    #[test]
    fn square_free_examples() {
        assert!(w("abcbacbc").is_square_free());
        assert!(!w("abab").is_square_free());
        assert!(w("").is_square_free());
    }

    #[test]
    fn minimal_square_examples() {
        for s in ["abab", "abcabc", "aa", "abcbabcb"] {
            assert!(w(s).is_minimal_square(), "{s}");
        }
        assert!(!w("aaaa").is_minimal_square());
        assert!(!w("aba").is_minimal_square());
        assert!(!w("").is_minimal_square());
        // abaaba = (aba)^2 contains aa
        assert!(!w("abaaba").is_minimal_square());
    }

    #[test]
    fn period_examples() {
        let pd = w("ababa").period_data().unwrap();
        assert_eq!((pd.min_period, pd.exponent), (2, Ratio::new(5, 2)));
        let pd = w("abc").period_data().unwrap();
        assert_eq!((pd.min_period, pd.exponent), (3, Ratio::from_integer(1)));
        let pd = w("abab").period_data().unwrap();
        assert_eq!((pd.min_period, pd.exponent), (2, Ratio::from_integer(2)));
        assert_eq!(w("").period_data(), Err(WordError::EmptyWord));
    }

    #[test]
    fn conjugate_examples() {
        let strs = |c: CircularWord| c.conjugates().iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(strs(cw("(abc)")), ["abc", "bca", "cab"]);
        assert_eq!(strs(cw("(aa)")), ["aa"]);
        assert_eq!(strs(cw("(abac)")), ["abac", "baca", "acab", "caba"]);
        assert_eq!(strs(cw("(abab)")), ["abab", "baba"]);
    }

    #[test]
    fn circular_square_free_examples() {
        assert!(cw("(abac)").is_square_free());
        assert!(!cw("(abab)").is_square_free());
        assert!(cw("(abacabcbabc)").is_square_free());
        assert!(cw("(a)").is_square_free());
        assert!(cw("(ab)").is_square_free());
        assert!(!cw("(aa)").is_square_free());
    }

    #[test]
    fn isomorphism_examples() {
        assert!(are_isomorphic(&cw("(abc)"), &cw("(acb)")));
        assert!(!are_isomorphic(&cw("(abac)"), &cw("(abab)")));
        assert!(are_isomorphic(&cw("(abacabcbabc)"), &cw("(abacabcbabc)")));
        assert!(!are_isomorphic(&cw("(abc)"), &cw("(abca)")));
    }

    #[test]
    fn canonical_iso_examples() {
        assert_eq!(cw("(acb)").canonical_iso_form(), cw("(abc)"));
        assert_eq!(cw("(caba)").canonical_iso_form().to_string(), "(abac)");
        assert_eq!(cw("(bcbcacb)").canonical_iso_form().letters()[0], Letter::A);
    }

    #[test]
    fn canonical_iso_form_is_min_over_24_candidates() {
        let x = cw("(caba)");
        let mut best: Option<Vec<Letter>> = None;
        for s in LetterMap::ALL {
            let img = s.apply_all(x.letters());
            for r in 0..img.len() {
                let mut v = img.clone();
                v.rotate_left(r);
                if best.as_ref().is_none_or(|b| v < *b) {
                    best = Some(v);
                }
            }
        }
        assert_eq!(x.canonical_iso_form().letters(), best.unwrap().as_slice());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!("abd".parse::<LinearWord>(), Err(WordError::InvalidLetter('d')));
        assert_eq!("()".parse::<CircularWord>(), Err(WordError::EmptyCircular));
        assert!(matches!("(ab".parse::<CircularWord>(), Err(WordError::Parentheses(_))));
        assert_eq!(CircularWord::new(vec![]), Err(WordError::EmptyCircular));
    }

    #[test]
    fn least_rotation_matches_brute_force() {
        for len in 1..=7 {
            for x in all_words(len) {
                let s = x.letters();
                let brute = (0..len)
                    .map(|r| {
                        let mut v = s.to_vec();
                        v.rotate_left(r);
                        v
                    })
                    .min()
                    .unwrap();
                let mut v = s.to_vec();
                v.rotate_left(least_rotation(s));
                assert_eq!(v, brute);
            }
        }
    }

    #[test]
    fn square_free_agrees_with_exponents_of_all_factors() {
        for len in 0..=12 {
            for x in all_words(len) {
                let s = x.letters();
                let by_exponent = (0..len).all(|i| {
                    (i + 1..=len).all(|j| {
                        let f = LinearWord(s[i..j].to_vec());
                        f.period_data().unwrap().exponent < Ratio::from_integer(2)
                    })
                });
                assert_eq!(x.is_square_free(), by_exponent, "{x}");
                assert_eq!(x.is_square_free(), all_squares(s).is_empty(), "{x}");
                if let Some(sq) = x.find_square() {
                    assert_eq!(Some(&sq), all_squares(s).iter().min());
                }
            }
        }
    }

    #[test]
    fn circular_square_free_iff_all_conjugates_square_free() {
        for len in 1..=9 {
            for x in all_words(len) {
                let c = CircularWord::new(x.into_letters()).unwrap();
                let all = c.conjugates().iter().all(LinearWord::is_square_free);
                assert_eq!(c.is_square_free(), all, "{c}");
            }
        }
    }

    #[test]
    fn minimal_square_iff_root_is_circular_square_free() {
        for len in 1..=7 {
            for u in all_words(len) {
                let c = CircularWord::new(u.letters().to_vec()).unwrap();
                assert_eq!(u.squared().is_minimal_square(), c.is_square_free(), "{u}");
            }
        }
    }
}
