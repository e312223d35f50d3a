//! Enumeration of shuffle sets and quarter-planar walk sets, exact
//! distributions, and the closed-form counts they are checked against.
//!
//! Closed forms never enumerate and enumerators never consult closed forms,
//! so each side can serve as an oracle for the other.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::binom::{binomial, binomial_signed, binomial_u64, factorial};
use crate::path::{ClassParams, HPath, Shuffle, Step, VPath};
use crate::poly::IntPoly;
use crate::stats::{peak_count, signed_peak_count, Statistic};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("vertical projection must be positive (every prefix height >= 0)")]
    NonPositiveProjection,
    #[error("loop length {len} is odd")]
    OddLoopLength { len: usize },
}

/// Which walk set a projection enumeration ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WalkDomain {
    /// Walks confined to x >= 0, y >= 0.
    QuarterPlanar,
    /// Unconstrained planar walks.
    Planar,
}

// ---------------------------------------------------------------------------
// Shuffles of a fixed word pair.

/// Gosper's hack: the next integer with the same popcount.
fn next_same_popcount(mask: u64) -> u64 {
    let c = mask & mask.wrapping_neg();
    let r = mask + c;
    (((r ^ mask) >> 2) / c) | r
}

/// Write the interleaving selected by `mask` into `buf`. Bit (len-1-i) of
/// the mask set means position i takes the next horizontal step; masks in
/// increasing numeric order therefore yield interleavings in lexicographic
/// order of their source-word choice sequences, vertical before horizontal.
fn fill_from_mask(mask: u64, v: &[Step], h: &[Step], buf: &mut [Step]) {
    let total = buf.len();
    let mut vi = 0;
    let mut hi = 0;
    for (pos, slot) in buf.iter_mut().enumerate() {
        if mask >> (total - 1 - pos) & 1 == 1 {
            *slot = h[hi];
            hi += 1;
        } else {
            *slot = v[vi];
            vi += 1;
        }
    }
}

/// Visit every interleaving of `v` and `h` exactly once without allocating
/// per walk. Same order as [`shuffles`].
pub fn visit_shuffles<F: FnMut(&[Step])>(v: &[Step], h: &[Step], mut f: F) {
    let total = v.len() + h.len();
    assert!(total <= 63, "shuffle enumeration supports lengths up to 63");
    let count = binomial_u64(total as u64, h.len() as u64);
    let mut buf = vec![Step::East; total];
    let mut mask: u64 = if h.is_empty() {
        0
    } else {
        (1u64 << h.len()) - 1
    };
    for produced in 0..count {
        fill_from_mask(mask, v, h, &mut buf);
        f(&buf);
        if produced + 1 < count {
            mask = next_same_popcount(mask);
        }
    }
}

/// Iterator over every interleaving of a vertical and a horizontal word, in
/// lexicographic order of the choice sequence with vertical before
/// horizontal.
pub struct Shuffles {
    v: Vec<Step>,
    h: Vec<Step>,
    mask: u64,
    remaining: u64,
}

pub fn shuffles(v: &VPath, h: &HPath) -> Shuffles {
    let total = v.len() + h.len();
    assert!(total <= 63, "shuffle enumeration supports lengths up to 63");
    let remaining = binomial_u64(total as u64, h.len() as u64);
    let mask = if h.is_empty() {
        0
    } else {
        (1u64 << h.len()) - 1
    };
    Shuffles {
        v: v.steps().to_vec(),
        h: h.steps().to_vec(),
        mask,
        remaining,
    }
}

impl Iterator for Shuffles {
    type Item = Shuffle;

    fn next(&mut self) -> Option<Shuffle> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let mut buf = vec![Step::East; self.v.len() + self.h.len()];
        fill_from_mask(self.mask, &self.v, &self.h, &mut buf);
        if self.remaining > 0 {
            self.mask = next_same_popcount(self.mask);
        }
        Some(Shuffle::from_steps_unchecked(buf))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.remaining as usize;
        (n, Some(n))
    }
}

// ---------------------------------------------------------------------------
// Walks with a fixed vertical projection and free horizontal arrangement.

const CHOICE_VERTICAL: u8 = 0;
const CHOICE_EAST: u8 = 1;
const CHOICE_WEST: u8 = 2;

/// Depth-first iterator over words with vertical projection exactly `v`,
/// `r` East steps and `l` West steps. In the quarter-planar domain any
/// prefix with x < 0, or with more West steps left than the current x plus
/// the remaining East steps can absorb, is pruned. Branching order at each
/// position: vertical step, then East, then West.
#[derive(Debug)]
pub struct ProjectionWalks {
    v: Vec<Step>,
    r: usize,
    l: usize,
    quarter: bool,
    buf: Vec<Step>,
    choices: Vec<u8>,
    v_used: usize,
    e_used: usize,
    w_used: usize,
    x: i64,
    started: bool,
    done: bool,
}

/// Quarter-planar walks with vertical projection `v` (which must be
/// positive), `r` East steps and `l` West steps.
pub fn quarter_planar_set(
    v: &VPath,
    r: usize,
    l: usize,
) -> Result<ProjectionWalks, EnumerateError> {
    if !v.is_positive() {
        return Err(EnumerateError::NonPositiveProjection);
    }
    Ok(ProjectionWalks::new(v, r, l, WalkDomain::QuarterPlanar))
}

/// All planar walks with vertical projection `v`, `r` East steps and `l`
/// West steps; no quadrant constraint and no positivity requirement on `v`.
pub fn planar_set(v: &VPath, r: usize, l: usize) -> ProjectionWalks {
    ProjectionWalks::new(v, r, l, WalkDomain::Planar)
}

impl ProjectionWalks {
    fn new(v: &VPath, r: usize, l: usize, domain: WalkDomain) -> ProjectionWalks {
        let total = v.len() + r + l;
        assert!(total <= 63, "walk enumeration supports lengths up to 63");
        ProjectionWalks {
            v: v.steps().to_vec(),
            r,
            l,
            quarter: domain == WalkDomain::QuarterPlanar,
            buf: Vec::with_capacity(total),
            choices: Vec::with_capacity(total),
            v_used: 0,
            e_used: 0,
            w_used: 0,
            x: 0,
            started: false,
            done: false,
        }
    }

    fn total(&self) -> usize {
        self.v.len() + self.r + self.l
    }

    fn feasible(&self, choice: u8) -> bool {
        match choice {
            CHOICE_VERTICAL => self.v_used < self.v.len(),
            CHOICE_EAST => self.e_used < self.r,
            CHOICE_WEST => {
                if self.w_used >= self.l {
                    return false;
                }
                if self.quarter {
                    // keep x >= 0 and enough East capacity for the deficit
                    let x_after = self.x - 1;
                    let west_left = (self.l - self.w_used - 1) as i64;
                    let east_left = (self.r - self.e_used) as i64;
                    x_after >= 0 && west_left <= x_after + east_left
                } else {
                    true
                }
            }
            _ => unreachable!(),
        }
    }

    fn apply(&mut self, choice: u8) {
        let step = match choice {
            CHOICE_VERTICAL => {
                let s = self.v[self.v_used];
                self.v_used += 1;
                s
            }
            CHOICE_EAST => {
                self.e_used += 1;
                self.x += 1;
                Step::East
            }
            CHOICE_WEST => {
                self.w_used += 1;
                self.x -= 1;
                Step::West
            }
            _ => unreachable!(),
        };
        self.buf.push(step);
        self.choices.push(choice);
    }

    fn undo(&mut self) -> u8 {
        let choice = self.choices.pop().expect("undo on empty stack");
        self.buf.pop();
        match choice {
            CHOICE_VERTICAL => self.v_used -= 1,
            CHOICE_EAST => {
                self.e_used -= 1;
                self.x -= 1;
            }
            CHOICE_WEST => {
                self.w_used -= 1;
                self.x += 1;
            }
            _ => unreachable!(),
        }
        choice
    }

    /// Advance to the next complete word. With `resume` the search first
    /// backtracks off the word it currently stands on.
    fn search(&mut self, mut resume: bool) -> bool {
        loop {
            if !resume && self.buf.len() == self.total() {
                return true;
            }
            let start = if resume {
                if self.choices.is_empty() {
                    return false;
                }
                self.undo() + 1
            } else {
                0
            };
            resume = true;
            for choice in start..=CHOICE_WEST {
                if self.feasible(choice) {
                    self.apply(choice);
                    resume = false;
                    break;
                }
            }
        }
    }
}

impl Iterator for ProjectionWalks {
    type Item = Shuffle;

    fn next(&mut self) -> Option<Shuffle> {
        if self.done {
            return None;
        }
        let resume = self.started;
        self.started = true;
        if self.search(resume) {
            Some(Shuffle::from_steps_unchecked(self.buf.clone()))
        } else {
            self.done = true;
            None
        }
    }
}

/// Internal-iteration twin of [`ProjectionWalks`], for hot loops; visits the
/// same words in the same order.
pub fn visit_projection_walks<F: FnMut(&[Step])>(
    v: &VPath,
    r: usize,
    l: usize,
    domain: WalkDomain,
    mut f: F,
) {
    let total = v.len() + r + l;
    assert!(total <= 63, "walk enumeration supports lengths up to 63");
    let mut buf = Vec::with_capacity(total);
    let quarter = domain == WalkDomain::QuarterPlanar;
    recurse(v.steps(), r, l, quarter, 0, 0, 0, 0, &mut buf, &mut f);

    #[allow(clippy::too_many_arguments)]
    fn recurse<F: FnMut(&[Step])>(
        v: &[Step],
        r: usize,
        l: usize,
        quarter: bool,
        v_used: usize,
        e_used: usize,
        w_used: usize,
        x: i64,
        buf: &mut Vec<Step>,
        f: &mut F,
    ) {
        if v_used == v.len() && e_used == r && w_used == l {
            f(buf);
            return;
        }
        if v_used < v.len() {
            buf.push(v[v_used]);
            recurse(v, r, l, quarter, v_used + 1, e_used, w_used, x, buf, f);
            buf.pop();
        }
        if e_used < r {
            buf.push(Step::East);
            recurse(v, r, l, quarter, v_used, e_used + 1, w_used, x + 1, buf, f);
            buf.pop();
        }
        if w_used < l {
            let feasible = if quarter {
                let west_left = (l - w_used - 1) as i64;
                let east_left = (r - e_used) as i64;
                x >= 1 && west_left <= (x - 1) + east_left
            } else {
                true
            };
            if feasible {
                buf.push(Step::West);
                recurse(v, r, l, quarter, v_used, e_used, w_used + 1, x - 1, buf, f);
                buf.pop();
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Quarter-planar loops of a given length.

/// Depth-first iterator over quarter-planar walks of a fixed even length
/// from the origin back to the origin. Branching order: E, W, N, S.
#[derive(Debug)]
pub struct LoopWalks {
    len: usize,
    buf: Vec<Step>,
    choices: Vec<u8>,
    x: i64,
    y: i64,
    started: bool,
    done: bool,
}

const LOOP_STEPS: [Step; 4] = [Step::East, Step::West, Step::North, Step::South];

pub fn quarter_planar_loops(len: usize) -> Result<LoopWalks, EnumerateError> {
    if !len.is_multiple_of(2) {
        return Err(EnumerateError::OddLoopLength { len });
    }
    assert!(len <= 63, "walk enumeration supports lengths up to 63");
    Ok(LoopWalks {
        len,
        buf: Vec::with_capacity(len),
        choices: Vec::with_capacity(len),
        x: 0,
        y: 0,
        started: false,
        done: false,
    })
}

impl LoopWalks {
    fn feasible(&self, choice: u8) -> bool {
        let (dx, dy) = LOOP_STEPS[choice as usize].delta();
        let x = self.x + dx;
        let y = self.y + dy;
        if x < 0 || y < 0 {
            return false;
        }
        // must still be able to walk home
        let rem = (self.len - self.buf.len() - 1) as i64;
        let dist = x + y;
        dist <= rem && (rem - dist) % 2 == 0
    }

    fn apply(&mut self, choice: u8) {
        let step = LOOP_STEPS[choice as usize];
        let (dx, dy) = step.delta();
        self.x += dx;
        self.y += dy;
        self.buf.push(step);
        self.choices.push(choice);
    }

    fn undo(&mut self) -> u8 {
        let choice = self.choices.pop().expect("undo on empty stack");
        let (dx, dy) = LOOP_STEPS[choice as usize].delta();
        self.x -= dx;
        self.y -= dy;
        self.buf.pop();
        choice
    }

    fn search(&mut self, mut resume: bool) -> bool {
        loop {
            if !resume && self.buf.len() == self.len {
                debug_assert!(self.x == 0 && self.y == 0);
                return true;
            }
            let start = if resume {
                if self.choices.is_empty() {
                    return false;
                }
                self.undo() + 1
            } else {
                0
            };
            resume = true;
            for choice in start..4 {
                if self.feasible(choice) {
                    self.apply(choice);
                    resume = false;
                    break;
                }
            }
        }
    }
}

impl Iterator for LoopWalks {
    type Item = Shuffle;

    fn next(&mut self) -> Option<Shuffle> {
        if self.done {
            return None;
        }
        let resume = self.started;
        self.started = true;
        if self.search(resume) {
            Some(Shuffle::from_steps_unchecked(self.buf.clone()))
        } else {
            self.done = true;
            None
        }
    }
}

// ---------------------------------------------------------------------------
// Word lists.

fn words_with(first: Step, a: usize, second: Step, b: usize) -> Vec<Vec<Step>> {
    let total = a + b;
    assert!(total <= 63);
    let count = binomial_u64(total as u64, b as u64);
    let mut out = Vec::with_capacity(count as usize);
    let mut mask: u64 = if b == 0 { 0 } else { (1u64 << b) - 1 };
    for produced in 0..count {
        let word = (0..total)
            .map(|i| {
                if mask >> (total - 1 - i) & 1 == 1 {
                    second
                } else {
                    first
                }
            })
            .collect();
        out.push(word);
        if produced + 1 < count {
            mask = next_same_popcount(mask);
        }
    }
    out
}

/// Every vertical word with `u` North and `d` South steps, deterministic
/// order.
pub fn vertical_words(u: usize, d: usize) -> Vec<VPath> {
    words_with(Step::North, u, Step::South, d)
        .into_iter()
        .map(|steps| VPath::from_steps(steps).expect("vertical by construction"))
        .collect()
}

/// Every horizontal word with `r` East and `l` West steps, deterministic
/// order.
pub fn horizontal_words(r: usize, l: usize) -> Vec<HPath> {
    words_with(Step::East, r, Step::West, l)
        .into_iter()
        .map(|steps| HPath::from_steps(steps).expect("horizontal by construction"))
        .collect()
}

/// The positive vertical words with `u` North and `d` South steps.
pub fn positive_vertical_words(u: usize, d: usize) -> Vec<VPath> {
    vertical_words(u, d)
        .into_iter()
        .filter(|v| v.is_positive())
        .collect()
}

// ---------------------------------------------------------------------------
// Distributions and generating functions.

/// Exact tally of a statistic over a finite walk set.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Distribution {
    entries: BTreeMap<i64, BigUint>,
}

impl Distribution {
    pub fn from_tally(tally: BTreeMap<i64, u64>) -> Distribution {
        let entries = tally
            .into_iter()
            .filter(|(_, count)| *count > 0)
            .map(|(value, count)| (value, BigUint::from(count)))
            .collect();
        Distribution { entries }
    }

    /// Statistic value -> count, only values with positive count.
    pub fn entries(&self) -> &BTreeMap<i64, BigUint> {
        &self.entries
    }

    pub fn count(&self, value: i64) -> BigUint {
        self.entries
            .get(&value)
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl Serialize for Distribution {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.entries.len()))?;
        for (value, count) in &self.entries {
            map.serialize_entry(&value.to_string(), &count.to_string())?;
        }
        map.end()
    }
}

/// Tally `stat` over a finite walk iterator.
pub fn distribution<I: IntoIterator<Item = Shuffle>>(walks: I, stat: Statistic) -> Distribution {
    let mut tally: BTreeMap<i64, u64> = BTreeMap::new();
    for walk in walks {
        *tally.entry(stat.eval(walk.steps())).or_insert(0) += 1;
    }
    Distribution::from_tally(tally)
}

fn gf_from_tally(tally: BTreeMap<i64, u64>) -> IntPoly {
    let deg = tally.keys().next_back().map_or(0, |k| *k as usize);
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for (value, count) in tally {
        debug_assert!(
            value >= 0,
            "generating function exponents must be non-negative"
        );
        coeffs[value as usize] = BigInt::from(count);
    }
    IntPoly::from_coeffs(coeffs)
}

/// Generating function of the corner count over a finite walk set.
pub fn peak_gf<I: IntoIterator<Item = Shuffle>>(walks: I) -> IntPoly {
    let mut tally: BTreeMap<i64, u64> = BTreeMap::new();
    for walk in walks {
        *tally.entry(peak_count(walk.steps()) as i64).or_insert(0) += 1;
    }
    gf_from_tally(tally)
}

/// Generating function of the absolute signed corner count over a finite
/// walk set.
pub fn abs_signed_gf<I: IntoIterator<Item = Shuffle>>(walks: I) -> IntPoly {
    let mut tally: BTreeMap<i64, u64> = BTreeMap::new();
    for walk in walks {
        *tally
            .entry(signed_peak_count(walk.steps()).abs())
            .or_insert(0) += 1;
    }
    gf_from_tally(tally)
}

/// Corner-count generating function over the quarter-planar set of `v`.
pub fn gf_peak_q(v: &VPath, r: usize, l: usize) -> Result<IntPoly, EnumerateError> {
    Ok(peak_gf(quarter_planar_set(v, r, l)?))
}

/// Absolute-signed-corner generating function over the quarter-planar set
/// of `v`.
pub fn gf_signed_q(v: &VPath, r: usize, l: usize) -> Result<IntPoly, EnumerateError> {
    Ok(abs_signed_gf(quarter_planar_set(v, r, l)?))
}

/// Both generating functions over a projection walk set in a single pass:
/// (corner count, absolute signed corner count).
pub fn projection_stat_gfs(
    v: &VPath,
    r: usize,
    l: usize,
    domain: WalkDomain,
) -> Result<(IntPoly, IntPoly), EnumerateError> {
    if domain == WalkDomain::QuarterPlanar && !v.is_positive() {
        return Err(EnumerateError::NonPositiveProjection);
    }
    let mut peak_tally: BTreeMap<i64, u64> = BTreeMap::new();
    let mut abs_tally: BTreeMap<i64, u64> = BTreeMap::new();
    visit_projection_walks(v, r, l, domain, |steps| {
        *peak_tally.entry(peak_count(steps) as i64).or_insert(0) += 1;
        *abs_tally.entry(signed_peak_count(steps).abs()).or_insert(0) += 1;
    });
    Ok((gf_from_tally(peak_tally), gf_from_tally(abs_tally)))
}

/// Corner-count generating function over every interleaving of a fixed word
/// pair (no quadrant filter).
pub fn gf_peak_shuffle_class(v: &VPath, h: &HPath) -> IntPoly {
    let mut tally: BTreeMap<i64, u64> = BTreeMap::new();
    visit_shuffles(v.steps(), h.steps(), |steps| {
        *tally.entry(peak_count(steps) as i64).or_insert(0) += 1;
    });
    gf_from_tally(tally)
}

// ---------------------------------------------------------------------------
// Closed forms.

/// Number of interleavings of any word pair with multiplicities `p` whose
/// signed corner count is `k`: C(r+u, u-k) * C(l+d, d+k).
pub fn signed_peak_closed_form(p: ClassParams, k: i64) -> BigUint {
    binomial_signed((p.r + p.u) as i64, p.u as i64 - k)
        * binomial_signed((p.l + p.d) as i64, p.d as i64 + k)
}

/// Closed-form generating function of the absolute signed corner count over
/// a shuffle class.
pub fn gf_abs_signed(p: ClassParams) -> IntPoly {
    let bound = p.total() as i64;
    let mut coeffs = vec![BigInt::zero(); bound as usize + 1];
    for j in 0..=bound {
        let mut count = signed_peak_closed_form(p, j);
        if j > 0 {
            count += signed_peak_closed_form(p, -j);
        }
        coeffs[j as usize] = BigInt::from(count);
    }
    IntPoly::from_coeffs(coeffs)
}

/// Number of even-corner-count interleavings minus odd ones:
/// the alternating sum over k of C(r+u, u-k) C(l+d, d+k).
pub fn parity_difference(p: ClassParams) -> BigInt {
    let mut total = BigInt::zero();
    for k in -((p.l + p.d) as i64)..=(p.r + p.u) as i64 {
        let term = BigInt::from(signed_peak_closed_form(p, k));
        if k.rem_euclid(2) == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// S(r, k) = (2r)! (2k)! / (r! k! (r+k)!), always an integer.
pub fn super_catalan(r: u64, k: u64) -> BigUint {
    let numerator = factorial(2 * r) * factorial(2 * k);
    let denominator = factorial(r) * factorial(k) * factorial(r + k);
    debug_assert!((&numerator % &denominator).is_zero());
    numerator / denominator
}

/// Total shuffle count of a class: C(r+l+u+d, u+d).
pub fn class_size(p: ClassParams) -> BigUint {
    binomial(p.total() as u64, (p.u + p.d) as u64)
}
