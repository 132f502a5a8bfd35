//! The jump graph.
//!
//! A 0 in a circular codeword marks a jump `xyx` in the encoded word. The six
//! jumps form the two sides of a complete bipartite graph `K3,3`, and the
//! number of 1s between consecutive 0s (1, 2 or 3) is the weight of the edge
//! taken. A codeword without `00` and `1111` is therefore a walk, written as
//! its cyclic sequence of weights.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::pansiot::CircularCodeword;
use crate::words::{least_rotation, strip_parens, Letter, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("invalid weight {0:?}, expected 1, 2 or 3")]
    InvalidWeight(char),
    #[error("walk labels must be nonempty")]
    Empty,
    #[error("walk {0} is not closed")]
    NotClosed(WalkLabel),
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Handedness {
    Right,
    Left,
}

/// A factor `xyx` of a ternary word: `side` is `x`, `central` is `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Jump {
    side: Letter,
    central: Letter,
}

impl Jump {
    pub const ALL: [Jump; 6] = {
        use Letter::*;
        [
            Jump { side: A, central: B },
            Jump { side: B, central: C },
            Jump { side: C, central: A },
            Jump { side: A, central: C },
            Jump { side: B, central: A },
            Jump { side: C, central: B },
        ]
    };

    pub fn new(side: Letter, central: Letter) -> Option<Jump> {
        (side != central).then_some(Jump { side, central })
    }

    pub fn side(&self) -> Letter {
        self.side
    }

    pub fn central(&self) -> Letter {
        self.central
    }

    /// `aba`, `bcb`, `cac` are right jumps.
    pub fn handedness(&self) -> Handedness {
        if (self.side.index() + 1) % 3 == self.central.index() {
            Handedness::Right
        } else {
            Handedness::Left
        }
    }

    pub fn step(self, w: Weight) -> Jump {
        let Jump { side, central } = self;
        match w {
            Weight::One => Jump {
                side,
                central: side.third(central),
            },
            Weight::Two => Jump {
                side: side.third(central),
                central,
            },
            Weight::Three => Jump {
                side: central,
                central: side,
            },
        }
    }
}

impl fmt::Display for Jump {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.side, self.central, self.side)
    }
}

pub fn step(j: Jump, w: Weight) -> Jump {
    j.step(w)
}

/// Edge weight: 1 changes the central letter, 2 the side letters, 3 swaps
/// their roles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Weight {
    One = 1,
    Two = 2,
    Three = 3,
}

impl Weight {
    pub const ALL: [Weight; 3] = [Weight::One, Weight::Two, Weight::Three];

    pub fn value(self) -> usize {
        self as usize
    }

    pub fn from_value(v: usize) -> Option<Weight> {
        match v {
            1 => Some(Weight::One),
            2 => Some(Weight::Two),
            3 => Some(Weight::Three),
            _ => None,
        }
    }
}

/// A nonempty sequence of edge weights, read cyclically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WalkLabel(Vec<Weight>);

impl WalkLabel {
    pub fn new(weights: Vec<Weight>) -> Result<Self, WalkError> {
        if weights.is_empty() {
            return Err(WalkError::Empty);
        }
        Ok(WalkLabel(weights))
    }

    pub fn weights(&self) -> &[Weight] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Sum of the weights plus the number of edges: the length of the
    /// codeword the walk spells.
    pub fn total_weight(&self) -> usize {
        self.0.iter().map(|w| w.value()).sum::<usize>() + self.0.len()
    }

    /// Endpoint of the walk from `start`.
    pub fn walk_from(&self, start: Jump) -> Jump {
        self.0.iter().fold(start, |j, &w| j.step(w))
    }

    /// Closed from `aba`; the verdict does not depend on the start vertex.
    pub fn is_closed(&self) -> bool {
        let aba = Jump::ALL[0];
        let closed = self.walk_from(aba) == aba;
        debug_assert!(Jump::ALL.iter().all(|&j| (self.walk_from(j) == j) == closed));
        closed
    }

    /// Cyclic factor of length `len` starting at `offset`.
    pub fn cyclic_factor(&self, offset: usize, len: usize) -> Vec<Weight> {
        let n = self.0.len();
        (0..len).map(|i| self.0[(offset + i) % n]).collect()
    }

    /// The same cyclic label, started at its least rotation.
    pub fn least_rotation(&self) -> WalkLabel {
        let mut v = self.0.clone();
        let start = least_rotation(&v);
        v.rotate_left(start);
        WalkLabel(v)
    }

    pub fn concat(&self, other: &WalkLabel) -> WalkLabel {
        WalkLabel([self.0.as_slice(), other.0.as_slice()].concat())
    }
}

impl FromStr for WalkLabel {
    type Err = WalkError;

    /// Accepts `(1213)` as well as a bare `1213`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = strip_parens(s)?.unwrap_or(s);
        let weights = inner
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .and_then(|d| Weight::from_value(d as usize))
                    .ok_or(WalkError::InvalidWeight(c))
            })
            .collect::<Result<Vec<_>, _>>()?;
        WalkLabel::new(weights)
    }
}

impl fmt::Display for WalkLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|w| write!(f, "{}", w.value()))
    }
}

pub fn is_closed(label: &WalkLabel) -> bool {
    label.is_closed()
}

/// A walk label known to be closed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClosedWalk(WalkLabel);

impl ClosedWalk {
    pub fn new(label: WalkLabel) -> Result<Self, WalkError> {
        if label.is_closed() {
            Ok(ClosedWalk(label))
        } else {
            Err(WalkError::NotClosed(label))
        }
    }

    pub fn label(&self) -> &WalkLabel {
        &self.0
    }

    pub fn into_label(self) -> WalkLabel {
        self.0
    }

    pub fn total_weight(&self) -> usize {
        self.0.total_weight()
    }

    /// The codeword spelled by the walk: `0 1^w` for each edge of weight `w`.
    pub fn codeword(&self) -> CircularCodeword {
        let bits = self
            .0
            .weights()
            .iter()
            .flat_map(|w| std::iter::once(0).chain(std::iter::repeat_n(1, w.value())))
            .collect();
        CircularCodeword::new(bits).expect("a closed walk has at least two edges")
    }
}

impl FromStr for ClosedWalk {
    type Err = WalkError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClosedWalk::new(s.parse()?)
    }
}

impl fmt::Display for ClosedWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0)
    }
}

pub fn walk_to_codeword(walk: &ClosedWalk) -> CircularCodeword {
    walk.codeword()
}

/// Reads the 1-runs between consecutive 0s. `None` if the codeword has no
/// 0, contains `00`, or has a run of four or more 1s. The label starts at the
/// first 0 of the normalized codeword.
pub fn codeword_to_walk(c: &CircularCodeword) -> Option<WalkLabel> {
    let bits = c.bits();
    let zeros: Vec<usize> = (0..bits.len()).filter(|&i| bits[i] == 0).collect();
    let &first = zeros.first()?;
    let n = bits.len();
    let weights = zeros
        .iter()
        .enumerate()
        .map(|(k, &z)| {
            let next = zeros.get(k + 1).copied().unwrap_or(first + n);
            Weight::from_value(next - z - 1)
        })
        .collect::<Option<Vec<_>>>()?;
    WalkLabel::new(weights).ok()
}

/// Label factors that make the codeword contain a factor of the catalogue in
/// [`crate::pansiot::ForbiddenFactor`].
pub const FORBIDDEN_LABEL_FACTORS: [&str; 5] = ["11", "222", "223", "322", "333"];

/// First of `11, 222, 223, 322, 333` occurring as a cyclic factor.
pub fn walk_label_forbidden_factor(label: &WalkLabel) -> Option<&'static str> {
    let n = label.len();
    FORBIDDEN_LABEL_FACTORS.into_iter().find(|pat| {
        let pat: Vec<usize> = pat.bytes().map(|b| (b - b'0') as usize).collect();
        pat.len() <= n
            && (0..n).any(|i| {
                pat.iter()
                    .enumerate()
                    .all(|(j, &v)| label.weights()[(i + j) % n].value() == v)
            })
    })
}

/// A cyclic factor of length `2t - 2` with even period `t >= 4` whose root
/// (its length-`t` prefix) is a closed walk. Returns `(offset, t)`.
pub fn periodic_closed_root_factor(label: &WalkLabel) -> Option<(usize, usize)> {
    let n = label.len();
    let w = label.weights();
    (4..).step_by(2).take_while(|t| 2 * t - 2 <= n).find_map(|t| {
        (0..n)
            .find(|&i| {
                (0..t - 2).all(|j| w[(i + j) % n] == w[(i + j + t) % n])
                    && WalkLabel(label.cyclic_factor(i, t)).is_closed()
            })
            .map(|i| (i, t))
    })
}

/// Sufficient condition for the walk to spell a square-free codeword: no
/// forbidden label factor, and no periodic factor of the kind found by
/// [`periodic_closed_root_factor`].
pub fn satisfies_sufficient_condition(walk: &ClosedWalk) -> bool {
    walk_label_forbidden_factor(walk.label()).is_none() && periodic_closed_root_factor(walk.label()).is_none()
}

/// One simple cycle of the jump graph with its codeword and weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleCycle {
    pub walk: ClosedWalk,
    pub codeword: CircularCodeword,
    pub weight: usize,
}

const SIMPLE_CYCLES: [(&str, &str, usize); 11] = [
    ("11", "0101", 4),
    ("22", "011011", 6),
    ("33", "01110111", 8),
    ("1213", "01011010111", 11),
    ("1232", "010110111011", 12),
    ("1323", "0101110110111", 13),
    ("121212", "010110101101011", 15),
    ("123123", "010110111010110111", 18),
    ("132132", "010111011010111011", 18),
    ("131313", "010111010111010111", 18),
    ("232323", "011011101101110110111", 21),
];

/// All simple cycles of the jump graph, with codewords as tabulated (not
/// recomputed).
pub fn simple_cycles() -> Vec<SimpleCycle> {
    SIMPLE_CYCLES
        .iter()
        .map(|&(label, codeword, weight)| SimpleCycle {
            walk: label.parse().expect("tabulated cycles are closed"),
            codeword: codeword.parse().expect("tabulated codeword"),
            weight,
        })
        .collect()
}
