//! Steps, step words, and walk geometry.
//!
//! Walks live on the integer grid with unit steps East, West, North and
//! South. A shuffle is an interleaving of a vertical word (North/South) and a
//! horizontal word (East/West); every shuffle carries a virtual origin marker
//! in front of its first step, which participates in pattern statistics but
//! is never stored or serialized.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A unit step, plus the virtual origin marker.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    East,
    West,
    North,
    South,
    /// The implicit marker at position 0 of a shuffle. Never appears inside
    /// a step word and is never serialized.
    Origin,
}

impl Step {
    /// East and North point away from the origin of the first quadrant.
    pub fn is_outward(self) -> bool {
        matches!(self, Step::East | Step::North)
    }

    /// West, South and the origin marker all point inward.
    pub fn is_inward(self) -> bool {
        !self.is_outward()
    }

    pub fn is_horizontal(self) -> bool {
        matches!(self, Step::East | Step::West)
    }

    pub fn is_vertical(self) -> bool {
        matches!(self, Step::North | Step::South)
    }

    /// Displacement as (dx, dy); the origin marker does not move.
    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::East => (1, 0),
            Step::West => (-1, 0),
            Step::North => (0, 1),
            Step::South => (0, -1),
            Step::Origin => (0, 0),
        }
    }

    /// Canonical letter. The origin marker has no text form.
    fn glyph(self) -> char {
        match self {
            Step::East => 'E',
            Step::West => 'W',
            Step::North => 'N',
            Step::South => 'S',
            Step::Origin => unreachable!("origin marker is never serialized"),
        }
    }

    fn from_char(ch: char) -> Option<Step> {
        match ch {
            'E' | 'e' | 'R' | 'r' => Some(Step::East),
            'W' | 'w' | 'L' | 'l' => Some(Step::West),
            'N' | 'n' | 'U' | 'u' => Some(Step::North),
            'S' | 's' | 'D' | 'd' => Some(Step::South),
            _ => None,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("invalid step character {ch:?} at index {index}")]
    InvalidChar { ch: char, index: usize },
    #[error("expected a vertical step (N/S) at index {index}")]
    NotVertical { index: usize },
    #[error("expected a horizontal step (E/W) at index {index}")]
    NotHorizontal { index: usize },
    #[error("the origin marker cannot appear inside a word")]
    OriginInWord,
}

fn parse_steps(text: &str) -> Result<Vec<Step>, PathError> {
    text.chars()
        .enumerate()
        .map(|(index, ch)| Step::from_char(ch).ok_or(PathError::InvalidChar { ch, index }))
        .collect()
}

fn check_no_origin(steps: &[Step]) -> Result<(), PathError> {
    if steps.contains(&Step::Origin) {
        Err(PathError::OriginInWord)
    } else {
        Ok(())
    }
}

fn render(steps: &[Step], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for s in steps {
        write!(f, "{}", s.glyph())?;
    }
    Ok(())
}

/// Classification of a parsed word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordKind {
    Empty,
    Vertical,
    Horizontal,
    Mixed,
}

/// An arbitrary word over {E, W, N, S}.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StepWord {
    steps: Vec<Step>,
}

impl StepWord {
    /// Parse a word over the alphabet E/W/N/S (synonyms R/L/U/D accepted).
    pub fn parse(text: &str) -> Result<StepWord, PathError> {
        Ok(StepWord {
            steps: parse_steps(text)?,
        })
    }

    pub fn from_steps(steps: Vec<Step>) -> Result<StepWord, PathError> {
        check_no_origin(&steps)?;
        Ok(StepWord { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn kind(&self) -> WordKind {
        if self.steps.is_empty() {
            WordKind::Empty
        } else if self.steps.iter().all(|s| s.is_vertical()) {
            WordKind::Vertical
        } else if self.steps.iter().all(|s| s.is_horizontal()) {
            WordKind::Horizontal
        } else {
            WordKind::Mixed
        }
    }

    pub fn into_vpath(self) -> Result<VPath, PathError> {
        VPath::from_steps(self.steps)
    }

    pub fn into_hpath(self) -> Result<HPath, PathError> {
        HPath::from_steps(self.steps)
    }

    pub fn into_shuffle(self) -> Shuffle {
        Shuffle { steps: self.steps }
    }
}

impl fmt::Display for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(&self.steps, f)
    }
}

impl FromStr for StepWord {
    type Err = PathError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StepWord::parse(s)
    }
}

/// A word over {N, S}.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VPath {
    steps: Vec<Step>,
}

impl VPath {
    pub fn parse(text: &str) -> Result<VPath, PathError> {
        VPath::from_steps(parse_steps(text)?)
    }

    pub fn from_steps(steps: Vec<Step>) -> Result<VPath, PathError> {
        check_no_origin(&steps)?;
        if let Some(index) = steps.iter().position(|s| !s.is_vertical()) {
            return Err(PathError::NotVertical { index });
        }
        Ok(VPath { steps })
    }

    pub fn empty() -> VPath {
        VPath { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of North steps.
    pub fn up_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::North).count()
    }

    /// Number of South steps.
    pub fn down_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::South).count()
    }

    /// Every prefix height is non-negative (the endpoint included).
    pub fn is_positive(&self) -> bool {
        let mut height = 0i64;
        for s in &self.steps {
            height += s.delta().1;
            if height < 0 {
                return false;
            }
        }
        true
    }

    /// Ends at height 0.
    pub fn is_loop(&self) -> bool {
        self.up_count() == self.down_count()
    }

    pub fn ends_with_south(&self) -> bool {
        self.steps.last() == Some(&Step::South)
    }
}

impl fmt::Display for VPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(&self.steps, f)
    }
}

impl FromStr for VPath {
    type Err = PathError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VPath::parse(s)
    }
}

/// A word over {E, W}.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HPath {
    steps: Vec<Step>,
}

impl HPath {
    pub fn parse(text: &str) -> Result<HPath, PathError> {
        HPath::from_steps(parse_steps(text)?)
    }

    pub fn from_steps(steps: Vec<Step>) -> Result<HPath, PathError> {
        check_no_origin(&steps)?;
        if let Some(index) = steps.iter().position(|s| !s.is_horizontal()) {
            return Err(PathError::NotHorizontal { index });
        }
        Ok(HPath { steps })
    }

    pub fn empty() -> HPath {
        HPath { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of East steps.
    pub fn right_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::East).count()
    }

    /// Number of West steps.
    pub fn left_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::West).count()
    }

    pub fn is_positive(&self) -> bool {
        let mut x = 0i64;
        for s in &self.steps {
            x += s.delta().0;
            if x < 0 {
                return false;
            }
        }
        true
    }

    pub fn is_loop(&self) -> bool {
        self.right_count() == self.left_count()
    }
}

impl fmt::Display for HPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(&self.steps, f)
    }
}

impl FromStr for HPath {
    type Err = PathError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        HPath::parse(s)
    }
}

/// A walk over {E, W, N, S}, starting at (0, 0), with the virtual origin
/// marker in front of its first step.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shuffle {
    steps: Vec<Step>,
}

impl Shuffle {
    pub fn parse(text: &str) -> Result<Shuffle, PathError> {
        Ok(Shuffle {
            steps: parse_steps(text)?,
        })
    }

    pub fn from_steps(steps: Vec<Step>) -> Result<Shuffle, PathError> {
        check_no_origin(&steps)?;
        Ok(Shuffle { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Shuffle {
        debug_assert!(steps.iter().all(|s| *s != Step::Origin));
        Shuffle { steps }
    }

    pub fn empty() -> Shuffle {
        Shuffle { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The vertical and horizontal subsequences, in order.
    pub fn projections(&self) -> (VPath, HPath) {
        let vertical = self
            .steps
            .iter()
            .copied()
            .filter(|s| s.is_vertical())
            .collect();
        let horizontal = self
            .steps
            .iter()
            .copied()
            .filter(|s| s.is_horizontal())
            .collect();
        (VPath { steps: vertical }, HPath { steps: horizontal })
    }

    pub fn class_params(&self) -> ClassParams {
        let mut p = ClassParams {
            r: 0,
            l: 0,
            u: 0,
            d: 0,
        };
        for s in &self.steps {
            match s {
                Step::East => p.r += 1,
                Step::West => p.l += 1,
                Step::North => p.u += 1,
                Step::South => p.d += 1,
                Step::Origin => unreachable!(),
            }
        }
        p
    }

    pub fn endpoint(&self) -> (i64, i64) {
        let mut pos = (0i64, 0i64);
        for s in &self.steps {
            let (dx, dy) = s.delta();
            pos.0 += dx;
            pos.1 += dy;
        }
        pos
    }

    pub fn is_loop(&self) -> bool {
        self.endpoint() == (0, 0)
    }

    /// Every prefix point, the endpoint included, has x >= 0 and y >= 0.
    pub fn is_quarter_planar(&self) -> bool {
        let (mut x, mut y) = (0i64, 0i64);
        for s in &self.steps {
            let (dx, dy) = s.delta();
            x += dx;
            y += dy;
            if x < 0 || y < 0 {
                return false;
            }
        }
        true
    }

    /// Swap E with N and W with S position-wise. Negates the signed
    /// corner-count.
    pub fn complement(&self) -> Shuffle {
        let steps = self
            .steps
            .iter()
            .map(|s| match s {
                Step::East => Step::North,
                Step::North => Step::East,
                Step::West => Step::South,
                Step::South => Step::West,
                Step::Origin => unreachable!(),
            })
            .collect();
        Shuffle { steps }
    }
}

impl fmt::Display for Shuffle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(&self.steps, f)
    }
}

impl FromStr for Shuffle {
    type Err = PathError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Shuffle::parse(s)
    }
}

/// Step multiplicities (East, West, North, South) of a shuffle class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassParams {
    pub r: usize,
    pub l: usize,
    pub u: usize,
    pub d: usize,
}

impl ClassParams {
    pub fn new(r: usize, l: usize, u: usize, d: usize) -> ClassParams {
        ClassParams { r, l, u, d }
    }

    pub fn total(&self) -> usize {
        self.r + self.l + self.u + self.d
    }

    /// Swap the West and North multiplicities; the factorial-scaling
    /// identity relates this class to the original.
    pub fn swap_inner(&self) -> ClassParams {
        ClassParams {
            r: self.r,
            l: self.u,
            u: self.l,
            d: self.d,
        }
    }
}

impl fmt::Display for ClassParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={},l={},u={},d={}", self.r, self.l, self.u, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_classifies_words() {
        let w = StepWord::parse("NS").unwrap();
        assert_eq!(w.kind(), WordKind::Vertical);
        assert_eq!(w.to_string(), "NS");

        let w = StepWord::parse("EE").unwrap();
        assert_eq!(w.kind(), WordKind::Horizontal);

        assert_eq!(StepWord::parse("").unwrap().kind(), WordKind::Empty);
        assert_eq!(StepWord::parse("EN").unwrap().kind(), WordKind::Mixed);
    }

    #[test]
    fn parse_reports_offending_index() {
        assert_eq!(
            StepWord::parse("NX"),
            Err(PathError::InvalidChar { ch: 'X', index: 1 })
        );
    }

    #[test]
    fn parse_accepts_synonyms() {
        assert_eq!(StepWord::parse("RLUD").unwrap().to_string(), "EWNS");
    }

    #[test]
    fn projections_extract_subsequences() {
        let (v, h) = Shuffle::parse("ENES").unwrap().projections();
        assert_eq!(v.to_string(), "NS");
        assert_eq!(h.to_string(), "EE");

        let (v, h) = Shuffle::parse("NSEE").unwrap().projections();
        assert_eq!((v.to_string(), h.to_string()), ("NS".into(), "EE".into()));

        let (v, h) = Shuffle::empty().projections();
        assert!(v.is_empty() && h.is_empty());
    }

    #[test]
    fn quarter_plane_checks_every_prefix() {
        assert!(Shuffle::parse("EW").unwrap().is_quarter_planar());
        assert!(!Shuffle::parse("WE").unwrap().is_quarter_planar());
        assert!(Shuffle::parse("NESW").unwrap().is_quarter_planar());
        // endpoint below the axis
        assert!(!Shuffle::parse("NSS").unwrap().is_quarter_planar());
    }

    #[test]
    fn complement_swaps_letters() {
        assert_eq!(
            Shuffle::parse("ENWS").unwrap().complement().to_string(),
            "NESW"
        );
        assert_eq!(Shuffle::parse("EE").unwrap().complement().to_string(), "NN");
        assert_eq!(
            Shuffle::parse("ENES").unwrap().complement().to_string(),
            "NENW"
        );
    }

    #[test]
    fn complement_is_an_involution() {
        for text in ["", "E", "ENWS", "EENWSNEWWN", "SSWW"] {
            let s = Shuffle::parse(text).unwrap();
            assert_eq!(s.complement().complement(), s);
        }
    }

    #[test]
    fn vpath_rejects_horizontal_steps() {
        assert_eq!(
            VPath::parse("NES"),
            Err(PathError::NotVertical { index: 1 })
        );
        assert_eq!(
            HPath::parse("SEE"),
            Err(PathError::NotHorizontal { index: 0 })
        );
    }

    #[test]
    fn positivity_and_loops() {
        assert!(VPath::parse("NS").unwrap().is_positive());
        assert!(!VPath::parse("SN").unwrap().is_positive());
        assert!(VPath::parse("NNS").unwrap().is_positive());
        assert!(!VPath::parse("NSS").unwrap().is_positive());
        assert!(VPath::parse("NS").unwrap().is_loop());
        assert!(!VPath::parse("NNS").unwrap().is_loop());
        assert!(HPath::parse("EEWW").unwrap().is_positive());
        assert!(!HPath::parse("EWWE").unwrap().is_positive());
    }

    #[test]
    fn class_params_count_steps() {
        let p = Shuffle::parse("ENESW").unwrap().class_params();
        assert_eq!(p, ClassParams::new(2, 1, 1, 1));
        assert_eq!(p.total(), 5);
    }
}
