//! Adjacent-pair pattern counts and the corner statistics built from them.
//!
//! All statistics scan the walk with the virtual origin marker prepended, so
//! the pair (origin, first step) participates wherever the pattern's first
//! set contains the marker.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::path::Step;

/// A small set of step symbols, including the origin marker.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StepSet(u8);

impl StepSet {
    pub const EMPTY: StepSet = StepSet(0);
    pub const HORIZONTAL: StepSet = StepSet(0b00011);
    pub const VERTICAL: StepSet = StepSet(0b01100);
    /// West, South and the origin marker.
    pub const INWARD: StepSet = StepSet(0b11010);
    /// East and North.
    pub const OUTWARD: StepSet = StepSet(0b00101);
    pub const ORIGIN: StepSet = StepSet(0b10000);

    fn bit(step: Step) -> u8 {
        match step {
            Step::East => 1 << 0,
            Step::West => 1 << 1,
            Step::North => 1 << 2,
            Step::South => 1 << 3,
            Step::Origin => 1 << 4,
        }
    }

    pub fn single(step: Step) -> StepSet {
        StepSet(Self::bit(step))
    }

    pub fn of(steps: &[Step]) -> StepSet {
        StepSet(steps.iter().fold(0, |acc, s| acc | Self::bit(*s)))
    }

    pub fn contains(self, step: Step) -> bool {
        self.0 & Self::bit(step) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: StepSet) -> StepSet {
        StepSet(self.0 | other.0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StatsError {
    #[error("pattern sets must be non-empty")]
    EmptyPatternSet,
}

/// An adjacent-pair pattern: a first set of symbols followed by a second.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PatternQuery {
    first: StepSet,
    second: StepSet,
}

impl PatternQuery {
    pub fn new(first: StepSet, second: StepSet) -> Result<PatternQuery, StatsError> {
        if first.is_empty() || second.is_empty() {
            return Err(StatsError::EmptyPatternSet);
        }
        Ok(PatternQuery { first, second })
    }

    pub fn first(&self) -> StepSet {
        self.first
    }

    pub fn second(&self) -> StepSet {
        self.second
    }
}

/// Number of adjacent pairs matching the query, with the origin marker as
/// the position-0 symbol.
pub fn pattern_count(steps: &[Step], query: &PatternQuery) -> u64 {
    let mut count = 0;
    let mut prev = Step::Origin;
    for &step in steps {
        if query.first.contains(prev) && query.second.contains(step) {
            count += 1;
        }
        prev = step;
    }
    count
}

/// Occurrences of E-then-S plus N-then-W: corners pointing away from the
/// origin.
pub fn peak_count(steps: &[Step]) -> u64 {
    let mut count = 0;
    for pair in steps.windows(2) {
        match (pair[0], pair[1]) {
            (Step::East, Step::South) | (Step::North, Step::West) => count += 1,
            _ => {}
        }
    }
    count
}

/// Occurrences of N-then-W minus occurrences of E-then-S.
pub fn signed_peak_count(steps: &[Step]) -> i64 {
    let mut count = 0;
    for pair in steps.windows(2) {
        match (pair[0], pair[1]) {
            (Step::North, Step::West) => count += 1,
            (Step::East, Step::South) => count -= 1,
            _ => {}
        }
    }
    count
}

/// Number of inward steps (West, South, or the origin marker) immediately
/// followed by a vertical step.
pub fn in_vert(steps: &[Step]) -> u64 {
    let mut count = 0;
    let mut prev = Step::Origin;
    for &step in steps {
        if prev.is_inward() && step.is_vertical() {
            count += 1;
        }
        prev = step;
    }
    count
}

/// In-vert minus the number of South steps.
pub fn shifted_in_vert(steps: &[Step]) -> i64 {
    let souths = steps.iter().filter(|s| **s == Step::South).count() as i64;
    in_vert(steps) as i64 - souths
}

/// Statistic selector used by distributions and the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statistic {
    Peak,
    SignedPeak,
    AbsSignedPeak,
    InVert,
    ShiftedInVert,
}

impl Statistic {
    pub fn eval(self, steps: &[Step]) -> i64 {
        match self {
            Statistic::Peak => peak_count(steps) as i64,
            Statistic::SignedPeak => signed_peak_count(steps),
            Statistic::AbsSignedPeak => signed_peak_count(steps).abs(),
            Statistic::InVert => in_vert(steps) as i64,
            Statistic::ShiftedInVert => shifted_in_vert(steps),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Statistic::Peak => "peak",
            Statistic::SignedPeak => "signed-peak",
            Statistic::AbsSignedPeak => "abs-signed-peak",
            Statistic::InVert => "in-vert",
            Statistic::ShiftedInVert => "shifted-in-vert",
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Statistic {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "peak" => Ok(Statistic::Peak),
            "signed-peak" => Ok(Statistic::SignedPeak),
            "abs-signed-peak" => Ok(Statistic::AbsSignedPeak),
            "in-vert" => Ok(Statistic::InVert),
            "shifted-in-vert" => Ok(Statistic::ShiftedInVert),
            other => Err(format!("unknown statistic {other:?}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::Shuffle;

    fn steps_of(text: &str) -> Vec<Step> {
        Shuffle::parse(text).unwrap().steps().to_vec()
    }

    // The running example walk: origin, N, W, S, E, S, N, N.
    const EXAMPLE: &str = "NWSESNN";

    #[test]
    fn pattern_count_inward_then_up() {
        let steps = steps_of(EXAMPLE);
        let q = PatternQuery::new(StepSet::INWARD, StepSet::single(Step::North)).unwrap();
        assert_eq!(pattern_count(&steps, &q), 2);
    }

    #[test]
    fn pattern_count_inward_then_vertical() {
        let steps = steps_of(EXAMPLE);
        let q = PatternQuery::new(StepSet::INWARD, StepSet::VERTICAL).unwrap();
        assert_eq!(pattern_count(&steps, &q), 3);
    }

    #[test]
    fn origin_occurs_once_so_origin_origin_is_zero() {
        let q = PatternQuery::new(StepSet::ORIGIN, StepSet::ORIGIN).unwrap();
        assert_eq!(pattern_count(&steps_of(EXAMPLE), &q), 0);
        assert_eq!(pattern_count(&steps_of("EWNS"), &q), 0);
    }

    #[test]
    fn empty_pattern_sets_are_rejected() {
        assert_eq!(
            PatternQuery::new(StepSet::EMPTY, StepSet::VERTICAL),
            Err(StatsError::EmptyPatternSet)
        );
    }

    #[test]
    fn peak_counts() {
        assert_eq!(peak_count(&steps_of("ENWS")), 1);
        assert_eq!(peak_count(&steps_of("EENS")), 0);
        assert_eq!(peak_count(&[]), 0);
    }

    #[test]
    fn signed_peak_counts() {
        assert_eq!(signed_peak_count(&steps_of("ENWS")), 1);
        assert_eq!(signed_peak_count(&steps_of("NESW")), -1);
        // fourth walk of the six-shuffle example set
        assert_eq!(signed_peak_count(&steps_of("ENSE")), 0);
    }

    #[test]
    fn in_vert_examples() {
        let steps = steps_of(EXAMPLE);
        assert_eq!(in_vert(&steps), 3);
        assert_eq!(shifted_in_vert(&steps), 1);

        let steps = steps_of("ENES");
        assert_eq!(in_vert(&steps), 0);
        assert_eq!(shifted_in_vert(&steps), -1);

        let steps = steps_of("EEEE");
        assert_eq!(in_vert(&steps), 0);
        assert_eq!(shifted_in_vert(&steps), 0);
    }

    #[test]
    fn signed_peak_reformulations_hold_exhaustively() {
        // signed = #(N, inward) - #(outward, S) and
        // shifted in-vert = #(inward, N) - #(outward, S), for every short walk.
        let n_in = PatternQuery::new(StepSet::single(Step::North), StepSet::INWARD).unwrap();
        let out_s = PatternQuery::new(StepSet::OUTWARD, StepSet::single(Step::South)).unwrap();
        let in_n = PatternQuery::new(StepSet::INWARD, StepSet::single(Step::North)).unwrap();
        let letters = [Step::East, Step::West, Step::North, Step::South];
        for len in 0..=8usize {
            let mut word = vec![Step::East; len];
            let total = 4usize.pow(len as u32);
            for code in 0..total {
                let mut c = code;
                for slot in word.iter_mut() {
                    *slot = letters[c % 4];
                    c /= 4;
                }
                let signed = signed_peak_count(&word);
                let lhs = pattern_count(&word, &n_in) as i64 - pattern_count(&word, &out_s) as i64;
                assert_eq!(signed, lhs);
                let shifted = shifted_in_vert(&word);
                let rhs = pattern_count(&word, &in_n) as i64 - pattern_count(&word, &out_s) as i64;
                assert_eq!(shifted, rhs);
                // parity agreement
                assert_eq!(peak_count(&word) as i64 % 2, signed.rem_euclid(2));
            }
        }
    }

    #[test]
    fn complement_negates_signed_peak() {
        let s = Shuffle::parse("ENES").unwrap();
        assert_eq!(
            signed_peak_count(s.complement().steps()),
            -signed_peak_count(s.steps())
        );
    }

    #[test]
    fn statistic_selector_round_trips() {
        for stat in [
            Statistic::Peak,
            Statistic::SignedPeak,
            Statistic::AbsSignedPeak,
            Statistic::InVert,
            Statistic::ShiftedInVert,
        ] {
            assert_eq!(stat.as_str().parse::<Statistic>().unwrap(), stat);
        }
    }
}
