//! Construction of a square-free circular word of every feasible length.
//!
//! Short lengths come from a fixed list of closed walks. From 33 on, write
//! `l = 18n + m`. The block morphism
//!
//! ```text
//! a -> 122133    b -> 123123    c -> 132132
//! ```
//!
//! turns a square-free word `u` into a closed walk `h(u)` of weight `18|u|`.
//! Replacing its last block by `131313` (weight 18), by `121212` (weight 15),
//! or its last two blocks by `131313121212` gives walks that spell
//! square-free codewords. One more block substitution, chosen by `m` from
//! [`construction_table`], adjusts the weight to exactly `l`.
//!
//! Every result is decoded and checked with the naive square scan before it
//! is returned.

use std::fmt;

use thiserror::Error;

use crate::enumerate::SquareFreeWords;
use crate::k33::{ClosedWalk, WalkLabel};
use crate::pansiot::CircularCodeword;
use crate::words::{CircularWord, Letter, LetterMap, LinearWord};

/// Lengths with no square-free circular word.
pub const EXCEPTIONAL_LENGTHS: [usize; 6] = [5, 7, 9, 10, 14, 17];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("no square-free circular word of length {0} exists")]
    NotRepresentable(usize),
    #[error("length {0} is not valid here")]
    InvalidLength(usize),
    #[error("length {0} is outside the short-walk range 4..=32")]
    OutOfRange(usize),
    #[error("base word {0} is not square-free")]
    NotSquareFree(LinearWord),
    #[error("base word of length {len} is too short for tail {tail:?}")]
    BaseTooShort { len: usize, tail: Tail },
    #[error("no square-free word of length {0} satisfies the constraints")]
    Unsatisfiable(usize),
    #[error("internal fault: {0}")]
    InternalFault(String),
}

pub fn is_exceptional(l: usize) -> bool {
    EXCEPTIONAL_LENGTHS.contains(&l)
}

fn digits_weight(s: &str) -> usize {
    s.bytes().map(|b| (b - b'0') as usize).sum::<usize>() + s.len()
}

fn parse_label(s: &str) -> WalkLabel {
    s.parse().expect("static label")
}

pub fn h_block(x: Letter) -> &'static str {
    match x {
        Letter::A => "122133",
        Letter::B => "123123",
        Letter::C => "132132",
    }
}

pub fn h_image(u: &LinearWord) -> Result<WalkLabel, ConstructError> {
    if u.is_empty() {
        return Err(ConstructError::InvalidLength(0));
    }
    Ok(parse_label(
        &u.letters().iter().map(|&x| h_block(x)).collect::<String>(),
    ))
}

/// What replaces the end of `h(u)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tail {
    /// Last block becomes `131313`; weight `18|u|`.
    Alt13,
    /// Last block becomes `121212`; weight `18|u| - 3`.
    Alt12,
    /// Last two blocks become `131313121212`; weight `18|u| - 3`.
    Alt13Alt12,
}

impl Tail {
    pub const ALL: [Tail; 3] = [Tail::Alt13, Tail::Alt12, Tail::Alt13Alt12];

    pub fn blocks(self) -> &'static [&'static str] {
        match self {
            Tail::Alt13 => &["131313"],
            Tail::Alt12 => &["121212"],
            Tail::Alt13Alt12 => &["131313", "121212"],
        }
    }

    /// Weight relative to `18|u|`.
    fn weight_shift(self) -> isize {
        match self {
            Tail::Alt13 => 0,
            Tail::Alt12 | Tail::Alt13Alt12 => -3,
        }
    }

    pub fn min_base_len(self) -> usize {
        self.blocks().len()
    }
}

// h-blocks of u followed by the tail, as digit strings.
fn tailed_blocks(u: &LinearWord, tail: Tail) -> Vec<&'static str> {
    let keep = u.len() - tail.blocks().len();
    u.letters()[..keep]
        .iter()
        .map(|&x| h_block(x))
        .chain(tail.blocks().iter().copied())
        .collect()
}

fn closed_from_blocks(blocks: &[&str]) -> Result<ClosedWalk, ConstructError> {
    ClosedWalk::new(parse_label(&blocks.concat())).map_err(|e| ConstructError::InternalFault(e.to_string()))
}

/// `h(u)` with its end replaced according to `tail`.
pub fn build_z(u: &LinearWord, tail: Tail) -> Result<ClosedWalk, ConstructError> {
    if u.len() < tail.min_base_len() {
        return Err(ConstructError::BaseTooShort { len: u.len(), tail });
    }
    if !u.is_square_free() {
        return Err(ConstructError::NotSquareFree(u.clone()));
    }
    closed_from_blocks(&tailed_blocks(u, tail))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstraintMode {
    Require,
    Forbid,
}

/// Requirement on the letter at a 0-based position of the base word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BaseWordConstraint {
    pub position: usize,
    pub mode: ConstraintMode,
    pub letter: Letter,
}

impl BaseWordConstraint {
    pub fn require(position: usize, letter: Letter) -> Self {
        BaseWordConstraint {
            position,
            mode: ConstraintMode::Require,
            letter,
        }
    }

    pub fn forbid(position: usize, letter: Letter) -> Self {
        BaseWordConstraint {
            position,
            mode: ConstraintMode::Forbid,
            letter,
        }
    }

    fn holds(&self, w: &[Letter]) -> bool {
        match self.mode {
            ConstraintMode::Require => w[self.position] == self.letter,
            ConstraintMode::Forbid => w[self.position] != self.letter,
        }
    }
}

/// Square-free word of length `n` meeting `constraints`: the first
/// square-free word in lexicographic order that some letter bijection
/// (tried in [`LetterMap::ALL`] order) maps onto a word meeting them.
pub fn base_word(n: usize, constraints: &[BaseWordConstraint]) -> Result<LinearWord, ConstructError> {
    if n == 0 {
        return Err(ConstructError::InvalidLength(0));
    }
    if constraints.iter().any(|c| c.position >= n) {
        return Err(ConstructError::Unsatisfiable(n));
    }
    for (i, c) in constraints.iter().enumerate() {
        let clash = constraints[i + 1..].iter().any(|d| {
            d.position == c.position
                && d.mode == ConstraintMode::Require
                && c.mode == ConstraintMode::Require
                && d.letter != c.letter
        });
        if clash {
            return Err(ConstructError::Unsatisfiable(n));
        }
    }
    SquareFreeWords::new(n)
        .find_map(|w| {
            LetterMap::ALL.iter().find_map(|sigma| {
                let img = sigma.apply_all(w.letters());
                constraints.iter().all(|c| c.holds(&img)).then(|| LinearWord::new(img))
            })
        })
        .ok_or(ConstructError::Unsatisfiable(n))
}

/// Which block of the tailed walk a rule replaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    /// The tail block with this index.
    TailBlock(usize),
    /// The h-block just before the tail, which must be `h(letter)`.
    BeforeTail(Letter),
    /// The h-block cyclically after the tail (the first block), which must
    /// be `h(letter)`.
    AfterTail(Letter),
}

/// One row of the replacement table: how to reach weight `18n + residue`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReplacementRule {
    pub residue: usize,
    pub tail: Tail,
    pub min_n: usize,
    pub max_n: Option<usize>,
    pub target: Target,
    /// The first block must not be `h(letter)`.
    pub forbid_after_tail: Option<Letter>,
    pub old_block: &'static str,
    pub new_block: &'static str,
}

impl ReplacementRule {
    const fn new(
        residue: usize,
        tail: Tail,
        min_n: usize,
        target: Target,
        old_block: &'static str,
        new_block: &'static str,
    ) -> Self {
        ReplacementRule {
            residue,
            tail,
            min_n,
            max_n: None,
            target,
            forbid_after_tail: None,
            old_block,
            new_block,
        }
    }

    const fn only_n(mut self, n: usize) -> Self {
        self.max_n = Some(n);
        self
    }

    const fn forbid_after(mut self, x: Letter) -> Self {
        self.forbid_after_tail = Some(x);
        self
    }

    pub fn applies_to(&self, n: usize) -> bool {
        n >= self.min_n && self.max_n.is_none_or(|m| n <= m)
    }

    /// Length of the base word giving total weight `18n + residue`.
    pub fn base_len(&self, n: usize) -> usize {
        let shift =
            self.tail.weight_shift() + digits_weight(self.new_block) as isize - digits_weight(self.old_block) as isize;
        let k = (18 * n + self.residue) as isize - shift;
        debug_assert_eq!(k.rem_euclid(18), 0);
        (k / 18) as usize
    }

    fn block_index(&self, k: usize) -> Option<usize> {
        let hs = k.checked_sub(self.tail.blocks().len())?;
        match self.target {
            Target::TailBlock(i) => Some(hs + i),
            Target::BeforeTail(_) => hs.checked_sub(1),
            Target::AfterTail(_) => (hs >= 1).then_some(0),
        }
    }

    /// Constraints on a base word of length `k`.
    pub fn constraints(&self, k: usize) -> Vec<BaseWordConstraint> {
        let mut out = vec![];
        if let (Target::BeforeTail(x) | Target::AfterTail(x), Some(i)) = (self.target, self.block_index(k)) {
            out.push(BaseWordConstraint::require(i, x));
        }
        if let Some(x) = self.forbid_after_tail {
            out.push(BaseWordConstraint::forbid(0, x));
        }
        out
    }

    /// The walk this rule produces at `n`, with its deterministic base word.
    pub fn apply(&self, n: usize) -> Result<ClosedWalk, ConstructError> {
        let weight = 18 * n + self.residue;
        if !self.applies_to(n) {
            return Err(ConstructError::InvalidLength(weight));
        }
        let k = self.base_len(n);
        let idx = self
            .block_index(k)
            .filter(|_| k >= self.tail.min_base_len())
            .ok_or(ConstructError::InvalidLength(weight))?;
        let u = base_word(k, &self.constraints(k))?;
        let mut blocks = tailed_blocks(&u, self.tail);
        if blocks[idx] != self.old_block {
            return Err(ConstructError::InternalFault(format!(
                "rule m={} expected block {} at {idx}, found {}",
                self.residue, self.old_block, blocks[idx]
            )));
        }
        blocks[idx] = self.new_block;
        let walk = closed_from_blocks(&blocks)?;
        if walk.total_weight() != weight {
            return Err(ConstructError::InternalFault(format!(
                "rule m={} gave weight {} instead of {weight}",
                self.residue,
                walk.total_weight()
            )));
        }
        Ok(walk)
    }
}

impl fmt::Display for ReplacementRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let range = match self.max_n {
            Some(m) if m == self.min_n => format!("n={m}"),
            Some(m) => format!("{}<=n<={m}", self.min_n),
            None => format!("n>={}", self.min_n),
        };
        write!(
            f,
            "m={} {:?} {range}: {} -> {}",
            self.residue, self.tail, self.old_block, self.new_block
        )
    }
}

const H_A: &str = "122133";
const H_B: &str = "123123";

use Letter::{A, B, C};
use Tail::{Alt12, Alt13, Alt13Alt12};
use Target::{AfterTail, BeforeTail, TailBlock};

const REPLACEMENT_TABLE: [ReplacementRule; 17] = [
    ReplacementRule::new(1, Alt13Alt12, 2, TailBlock(0), "131313", "13121213"),
    ReplacementRule::new(2, Alt13, 2, BeforeTail(A), H_A, "133133"),
    ReplacementRule::new(3, Alt12, 2, BeforeTail(A), H_A, "12212332"),
    ReplacementRule::new(4, Alt13, 1, TailBlock(0), "131313", "13121213"),
    ReplacementRule::new(5, Alt12, 2, BeforeTail(B), H_B, "12332133"),
    ReplacementRule::new(6, Alt13, 2, BeforeTail(A), H_A, "12212332"),
    ReplacementRule::new(7, Alt13Alt12, 2, TailBlock(0), "131313", "1221312213").only_n(2),
    ReplacementRule::new(7, Alt13Alt12, 3, BeforeTail(A), H_A, "1221312213"),
    ReplacementRule::new(8, Alt13, 2, BeforeTail(B), H_B, "12332133"),
    ReplacementRule::new(9, Alt12, 2, BeforeTail(A), H_A, "1221312323"),
    ReplacementRule::new(10, Alt13, 2, BeforeTail(A), H_A, "1221312213").forbid_after(C),
    ReplacementRule::new(11, Alt12, 2, BeforeTail(B), H_B, "1233212332"),
    ReplacementRule::new(12, Alt13, 2, BeforeTail(A), H_A, "1221312323"),
    ReplacementRule::new(13, Alt12, 1, AfterTail(A), H_A, "122122"),
    ReplacementRule::new(14, Alt13, 2, BeforeTail(B), H_B, "1233212332"),
    ReplacementRule::new(16, Alt13, 1, AfterTail(A), H_A, "122122"),
    ReplacementRule::new(17, Alt12, 1, BeforeTail(A), H_A, "133133"),
];

// Rows 1, 4 and 7 (n = 2) of REPLACEMENT_TABLE put `1213` next to a block
// starting with `12`, which spells a square of period 11. These replacements
// use rotations of walks already known to be square-free instead.
const CONSTRUCTION_TABLE: [ReplacementRule; 17] = [
    ReplacementRule::new(1, Alt13, 2, BeforeTail(A), H_A, "313123"),
    REPLACEMENT_TABLE[1],
    REPLACEMENT_TABLE[2],
    ReplacementRule::new(4, Alt13, 1, TailBlock(0), "131313", "13131212"),
    REPLACEMENT_TABLE[4],
    REPLACEMENT_TABLE[5],
    ReplacementRule::new(7, Alt13, 2, BeforeTail(A), H_A, "31232132").only_n(2),
    REPLACEMENT_TABLE[7],
    REPLACEMENT_TABLE[8],
    REPLACEMENT_TABLE[9],
    REPLACEMENT_TABLE[10],
    REPLACEMENT_TABLE[11],
    REPLACEMENT_TABLE[12],
    REPLACEMENT_TABLE[13],
    REPLACEMENT_TABLE[14],
    REPLACEMENT_TABLE[15],
    REPLACEMENT_TABLE[16],
];

/// The replacement rules before correction. Row 7 is split into its
/// `n = 2` and `n >= 3` cases.
pub fn replacement_table() -> &'static [ReplacementRule] {
    &REPLACEMENT_TABLE
}

/// The rules [`construct`] actually uses. Identical to
/// [`replacement_table`] except for rows 1, 4 and the `n = 2` case of row 7.
pub fn construction_table() -> &'static [ReplacementRule] {
    &CONSTRUCTION_TABLE
}

/// Fixed walk for lengths 4..=32 that the generic rules do not cover.
pub fn small_length_walk(l: usize) -> Result<Option<ClosedWalk>, ConstructError> {
    let label = match l {
        4 => "11",
        6 => "22",
        8 => "33",
        11 => "1213",
        12 => "1232",
        13 => "1323",
        15 => "121212",
        16 => "122122",
        18 => "123123",
        19 => "123313",
        20 => "133133",
        21 => "232323",
        22 => "13121213",
        23 => "12213132",
        24 => "12212332",
        25 => "12321323",
        26 => "12332133",
        27 => "12332323",
        28 => "1221312213",
        29 => "1221221323",
        30 => "1221312323",
        31 => return rule_for(13, 1).apply(1).map(Some),
        32 => "1233212332",
        5 | 7 | 9 | 10 | 14 | 17 => return Ok(None),
        _ => return Err(ConstructError::OutOfRange(l)),
    };
    closed_from_blocks(&[label]).map(Some)
}

fn rule_for(m: usize, n: usize) -> &'static ReplacementRule {
    CONSTRUCTION_TABLE
        .iter()
        .find(|r| r.residue == m && r.applies_to(n))
        .expect("every residue except 0 and 15 has a rule for n >= 2")
}

/// The closed walk used for length `l >= 4`.
pub fn construct_walk(l: usize) -> Result<ClosedWalk, ConstructError> {
    if is_exceptional(l) {
        return Err(ConstructError::NotRepresentable(l));
    }
    if l < 4 {
        return Err(ConstructError::InvalidLength(l));
    }
    if l <= 32 {
        return small_length_walk(l)?.ok_or(ConstructError::NotRepresentable(l));
    }
    let (n, m) = (l / 18, l % 18);
    match m {
        0 => build_z(&base_word(n, &[])?, Tail::Alt13),
        15 => build_z(&base_word(n + 1, &[])?, Tail::Alt12),
        _ => rule_for(m, n).apply(n),
    }
}

/// A constructed word together with the codeword and walk behind it (absent
/// for lengths below 3 and 4 respectively).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub length: usize,
    pub word: CircularWord,
    pub codeword: Option<CircularCodeword>,
    pub walk: Option<ClosedWalk>,
}

pub fn construct(l: usize) -> Result<Construction, ConstructError> {
    if is_exceptional(l) {
        return Err(ConstructError::NotRepresentable(l));
    }
    let (word, codeword, walk) = match l {
        0 => return Err(ConstructError::InvalidLength(0)),
        1..=3 => {
            let word = CircularWord::new(Letter::ALL[..l].to_vec()).expect("nonempty");
            let codeword = (l == 3).then(|| CircularCodeword::new(vec![1, 1, 1]).expect("length 3"));
            (word, codeword, None)
        }
        _ => {
            let walk = construct_walk(l)?;
            let codeword = walk.codeword();
            let word = codeword
                .decode()
                .ok_or_else(|| ConstructError::InternalFault(format!("codeword {codeword} does not decode")))?;
            (word, Some(codeword), Some(walk))
        }
    };
    if word.len() != l || codeword.as_ref().is_some_and(|c| c.len() != l) {
        return Err(ConstructError::InternalFault(format!("length {l} produced {word}")));
    }
    if let Some(sq) = word.find_square() {
        return Err(ConstructError::InternalFault(format!(
            "length {l}: square of period {} at position {}",
            sq.period,
            sq.position()
        )));
    }
    Ok(Construction {
        length: l,
        word,
        codeword,
        walk,
    })
}

/// Square-free circular codeword of length `l >= 3`.
pub fn construct_codeword(l: usize) -> Result<CircularCodeword, ConstructError> {
    if l < 3 {
        return Err(ConstructError::InvalidLength(l));
    }
    construct(l).map(|c| c.codeword.expect("lengths >= 3 carry a codeword"))
}

/// Square-free circular word of length `l >= 1`.
pub fn construct_word(l: usize) -> Result<CircularWord, ConstructError> {
    construct(l).map(|c| c.word)
}
