//! The structural correspondences between walks, colorings, and binary
//! words: the flip involution, blue-red colorings, and odd-pair toggling.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::binary::{BinaryWord, BinaryWordError};
use crate::path::{HPath, Shuffle, Step, VPath};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BijectionError {
    #[error("the vertical projection must end with a South step")]
    VerticalMustEndSouth,
    #[error("blue vertical index {index} out of range for a word of length {len}")]
    BlueVerticalOutOfRange { index: usize, len: usize },
    #[error("blue horizontal index {index} out of range for a word of length {len}")]
    BlueHorizontalOutOfRange { index: usize, len: usize },
    #[error("the final South step cannot be blue; the origin flag stands in for it")]
    FinalSouthBlue,
    #[error("the origin may be blue only when the vertical word ends with South")]
    OriginBlueWithoutFinalSouth,
    #[error("inconsistent coloring: {reason}")]
    InconsistentColoring { reason: &'static str },
    #[error("vertical word must be a positive loop with {n} North and {n} South steps")]
    BadVerticalLoop { n: usize },
    #[error("horizontal word must have {m} East and {m} West steps")]
    BadHorizontalLoop { m: usize },
    #[error(
        "binary word must have {zeroes} zeroes and {ones} ones, got {got_zeroes} and {got_ones}"
    )]
    MalformedBinaryWord {
        zeroes: usize,
        ones: usize,
        got_zeroes: usize,
        got_ones: usize,
    },
}

/// Reverse every maximal run of outward steps in place; inward steps stay
/// fixed. An involution on walks.
pub fn flip(s: &Shuffle) -> Shuffle {
    let mut steps = s.steps().to_vec();
    let mut i = 0;
    while i < steps.len() {
        if steps[i].is_outward() {
            let start = i;
            while i < steps.len() && steps[i].is_outward() {
                i += 1;
            }
            steps[start..i].reverse();
        } else {
            i += 1;
        }
    }
    Shuffle::from_steps_unchecked(steps)
}

/// A marking of the steps of a word pair (plus possibly the origin marker).
/// Positions index into the vertical and horizontal source words.
///
/// In a coloring produced by [`coloring_encode`] the blue steps are exactly
/// the steps standing immediately before a vertical step, the final South
/// step of the vertical word is never blue, and the total number of blue
/// marks (counting the origin flag) equals the number of vertical steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlueRedColoring {
    pub blue_vertical: BTreeSet<usize>,
    pub blue_horizontal: BTreeSet<usize>,
    pub origin_blue: bool,
}

impl BlueRedColoring {
    /// Blue inward marks: West and South positions plus the origin flag.
    /// Equals the in-vert statistic of the walk the coloring decodes to.
    pub fn blue_inward_count(&self, v: &VPath, h: &HPath) -> usize {
        let vertical_in = self
            .blue_vertical
            .iter()
            .filter(|i| v.steps()[**i] == Step::South)
            .count();
        let horizontal_in = self
            .blue_horizontal
            .iter()
            .filter(|i| h.steps()[**i] == Step::West)
            .count();
        vertical_in + horizontal_in + usize::from(self.origin_blue)
    }
}

/// Mark blue every step (the origin marker included) that immediately
/// precedes a vertical step. Requires the vertical projection to end with
/// South, which guarantees the final vertical step is never marked.
pub fn coloring_encode(s: &Shuffle) -> Result<BlueRedColoring, BijectionError> {
    let steps = s.steps();
    let last_vertical = steps.iter().rev().find(|s| s.is_vertical());
    match last_vertical {
        Some(Step::South) => {}
        _ => return Err(BijectionError::VerticalMustEndSouth),
    }
    let mut blue_vertical = BTreeSet::new();
    let mut blue_horizontal = BTreeSet::new();
    let origin_blue = steps.first().is_some_and(|s| s.is_vertical());
    let mut vi = 0;
    let mut hi = 0;
    for (i, step) in steps.iter().enumerate() {
        let source_index = if step.is_vertical() {
            vi += 1;
            vi - 1
        } else {
            hi += 1;
            hi - 1
        };
        let blue = steps.get(i + 1).is_some_and(|next| next.is_vertical());
        if blue {
            if step.is_vertical() {
                blue_vertical.insert(source_index);
            } else {
                blue_horizontal.insert(source_index);
            }
        }
    }
    Ok(BlueRedColoring {
        blue_vertical,
        blue_horizontal,
        origin_blue,
    })
}

/// Rebuild the unique walk a coloring fits: after a blue step the next step
/// is the next unused vertical one, otherwise the next unused horizontal
/// one. Exact inverse of [`coloring_encode`].
pub fn coloring_decode(
    c: &BlueRedColoring,
    v: &VPath,
    h: &HPath,
) -> Result<Shuffle, BijectionError> {
    if let Some(&index) = c.blue_vertical.iter().next_back() {
        if index >= v.len() {
            return Err(BijectionError::BlueVerticalOutOfRange {
                index,
                len: v.len(),
            });
        }
    }
    if let Some(&index) = c.blue_horizontal.iter().next_back() {
        if index >= h.len() {
            return Err(BijectionError::BlueHorizontalOutOfRange {
                index,
                len: h.len(),
            });
        }
    }
    if v.ends_with_south() {
        if c.blue_vertical.contains(&(v.len() - 1)) {
            return Err(BijectionError::FinalSouthBlue);
        }
    } else {
        if c.origin_blue {
            return Err(BijectionError::OriginBlueWithoutFinalSouth);
        }
        if !v.is_empty() {
            return Err(BijectionError::VerticalMustEndSouth);
        }
    }

    let total = v.len() + h.len();
    let mut steps = Vec::with_capacity(total);
    let mut vi = 0;
    let mut hi = 0;
    let mut prev_blue = c.origin_blue;
    for _ in 0..total {
        if prev_blue {
            if vi >= v.len() {
                return Err(BijectionError::InconsistentColoring {
                    reason: "vertical word exhausted early",
                });
            }
            steps.push(v.steps()[vi]);
            prev_blue = c.blue_vertical.contains(&vi);
            vi += 1;
        } else {
            if hi >= h.len() {
                return Err(BijectionError::InconsistentColoring {
                    reason: "horizontal word exhausted early",
                });
            }
            steps.push(h.steps()[hi]);
            prev_blue = c.blue_horizontal.contains(&hi);
            hi += 1;
        }
    }
    if prev_blue {
        return Err(BijectionError::InconsistentColoring {
            reason: "the final step may not be blue",
        });
    }
    if vi != v.len() || hi != h.len() {
        return Err(BijectionError::InconsistentColoring {
            reason: "source words not fully used",
        });
    }
    Ok(Shuffle::from_steps_unchecked(steps))
}

/// The toggle-equivalence class of an even-length binary word: the anchor
/// holds the (1,1) pairs, the base holds the mixed pairs, and the members
/// are all ways of orienting the base pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToggleClass {
    word_len: usize,
    anchor: BTreeSet<usize>,
    base: BTreeSet<usize>,
    representative: BinaryWord,
}

impl ToggleClass {
    pub fn of(w: &BinaryWord) -> Result<ToggleClass, BinaryWordError> {
        let pairs = w.odd_indexed_pairs()?;
        let mut anchor = BTreeSet::new();
        let mut base = BTreeSet::new();
        for (i, (a, b)) in pairs.iter().enumerate() {
            if *a && *b {
                anchor.insert(i);
            } else if a != b {
                base.insert(i);
            }
        }
        Ok(ToggleClass {
            word_len: w.len(),
            anchor,
            base,
            representative: w.clone(),
        })
    }

    pub fn word_len(&self) -> usize {
        self.word_len
    }

    /// Pair indices holding (1, 1).
    pub fn anchor(&self) -> &BTreeSet<usize> {
        &self.anchor
    }

    /// Pair indices holding a mixed pair.
    pub fn base(&self) -> &BTreeSet<usize> {
        &self.base
    }

    /// Number of (0, 0) pairs.
    pub fn zero_pairs(&self) -> usize {
        self.word_len / 2 - self.anchor.len() - self.base.len()
    }

    pub fn representative(&self) -> &BinaryWord {
        &self.representative
    }

    /// 2 to the number of base pairs.
    pub fn size(&self) -> BigUint {
        BigUint::one() << self.base.len()
    }

    /// Membership test: same length, same anchor, same base.
    pub fn contains(&self, w: &BinaryWord) -> bool {
        if w.len() != self.word_len {
            return false;
        }
        match ToggleClass::of(w) {
            Ok(other) => other.anchor == self.anchor && other.base == self.base,
            Err(_) => false,
        }
    }

    /// All members in deterministic order: a counter over the base pairs,
    /// least-significant bit at the smallest base index, bit set meaning the
    /// pair reads (0, 1).
    pub fn members(&self) -> ClassMembers {
        assert!(
            self.base.len() <= 63,
            "class member enumeration supports up to 63 base pairs"
        );
        ClassMembers {
            template: self.representative.bits().to_vec(),
            base: self.base.iter().copied().collect(),
            counter: 0,
            total: 1u64 << self.base.len(),
        }
    }
}

pub struct ClassMembers {
    template: Vec<bool>,
    base: Vec<usize>,
    counter: u64,
    total: u64,
}

impl Iterator for ClassMembers {
    type Item = BinaryWord;

    fn next(&mut self) -> Option<BinaryWord> {
        if self.counter >= self.total {
            return None;
        }
        let mut bits = self.template.clone();
        for (t, pair) in self.base.iter().enumerate() {
            let zero_one = self.counter >> t & 1 == 1;
            bits[2 * pair] = !zero_one;
            bits[2 * pair + 1] = zero_one;
        }
        self.counter += 1;
        Some(BinaryWord::from_bits(bits))
    }
}

/// Map a binary word with 2m zeroes and 2n ones to an interleaving of the
/// loops `v` (a positive vertical loop with n up/down pairs) and `h` (a
/// horizontal loop with m pairs). The signed corner count of the result
/// equals the shifted even-count of the word, and the map is a bijection
/// onto the full shuffle set.
///
/// Construction: ones at even positions mark inward steps blue (the Wests
/// of `h` in order, then the Souths of `v`, the final South slot standing
/// for the origin marker); ones at odd positions mark outward steps blue
/// (the Easts of `h`, then the Norths of `v`). The coloring is decoded and
/// the result flipped.
pub fn word_to_shuffle(
    m: usize,
    n: usize,
    w: &BinaryWord,
    v: &VPath,
    h: &HPath,
) -> Result<Shuffle, BijectionError> {
    if v.up_count() != n || v.down_count() != n || !v.is_positive() {
        return Err(BijectionError::BadVerticalLoop { n });
    }
    if h.right_count() != m || h.left_count() != m {
        return Err(BijectionError::BadHorizontalLoop { m });
    }
    if w.zeroes() != 2 * m || w.ones() != 2 * n {
        return Err(BijectionError::MalformedBinaryWord {
            zeroes: 2 * m,
            ones: 2 * n,
            got_zeroes: w.zeroes(),
            got_ones: w.ones(),
        });
    }

    let positions_of = |steps: &[Step], wanted: Step| -> Vec<usize> {
        steps
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == wanted)
            .map(|(i, _)| i)
            .collect()
    };
    let wests = positions_of(h.steps(), Step::West);
    let easts = positions_of(h.steps(), Step::East);
    let souths = positions_of(v.steps(), Step::South);
    let norths = positions_of(v.steps(), Step::North);

    let mut coloring = BlueRedColoring {
        blue_vertical: BTreeSet::new(),
        blue_horizontal: BTreeSet::new(),
        origin_blue: false,
    };
    let bits = w.bits();
    for t in 0..m + n {
        if bits[2 * t + 1] {
            // one at even position 2(t+1): the t-th inward item is blue
            if t < m {
                coloring.blue_horizontal.insert(wests[t]);
            } else if t - m == n - 1 {
                coloring.origin_blue = true;
            } else {
                coloring.blue_vertical.insert(souths[t - m]);
            }
        }
        if bits[2 * t] {
            // one at odd position 2t+1: the t-th outward item is blue
            if t < m {
                coloring.blue_horizontal.insert(easts[t]);
            } else {
                coloring.blue_vertical.insert(norths[t - m]);
            }
        }
    }

    let decoded = coloring_decode(&coloring, v, h)?;
    Ok(flip(&decoded))
}
