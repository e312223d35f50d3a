//! Exact enumeration of plane walks with fixed vertical and horizontal
//! projections, their corner statistics, and the structural machinery
//! relating them: flips, blue-red colorings, odd-pair toggling, and the
//! (x+1) polynomial basis. Everything is exact integer arithmetic; the
//! verification layer re-derives closed forms by brute force and scans
//! parameter grids for counterexamples.

pub mod bijection;
pub mod binary;
pub mod binom;
pub mod enumerate;
pub mod path;
pub mod poly;
pub mod stats;
pub mod verify;

pub use bijection::{flip, word_to_shuffle, BlueRedColoring, ToggleClass};
pub use binary::{BinaryWord, HalfInt};
pub use enumerate::{Distribution, WalkDomain};
pub use path::{ClassParams, HPath, Shuffle, Step, StepWord, VPath};
pub use poly::{IntPoly, ShiftedCoeffs};
pub use stats::Statistic;
pub use verify::{ScanCheck, ScanOptions, Verdict, VerdictReport};
