//! Exact integer polynomials, the (x+1) basis, and the toggle basis.
//!
//! Coefficients are arbitrary-precision integers stored densely in ascending
//! degree order with no trailing zeros; the zero polynomial is the empty
//! vector. Serialization renders coefficients as decimal strings so
//! arbitrary precision survives transport.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::binom::{binomial, binomial_signed};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("index k must be at least 1")]
    KZero,
    #[error("index k={k} exceeds n={n}")]
    KAboveN { k: u64, n: u64 },
}

fn trim(coeffs: &mut Vec<BigInt>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

fn serialize_decimal_seq<S: Serializer>(
    coeffs: &[BigInt],
    serializer: S,
) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(coeffs.len()))?;
    for c in coeffs {
        seq.serialize_element(&c.to_string())?;
    }
    seq.end()
}

fn render_array(coeffs: &[BigInt]) -> String {
    let parts: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// A polynomial with exact integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> IntPoly {
        IntPoly::from_coeffs(vec![c])
    }

    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> IntPoly {
        trim(&mut coeffs);
        IntPoly { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|c| BigInt::from(*c)).collect())
    }

    /// Ascending coefficients, canonical form.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, factor: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Exact evaluation by Horner's rule.
    pub fn evaluate(&self, point: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * point + c;
        }
        acc
    }

    /// Coefficients of the same polynomial written in powers of (x+1),
    /// computed by repeated synthetic division by (x+1).
    pub fn to_shifted_basis(&self) -> ShiftedCoeffs {
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let next = a[j + 1].clone();
                a[j] -= next;
            }
        }
        ShiftedCoeffs::from_coeffs(a)
    }

    /// Render ascending coefficients as "[a0, a1, ...]".
    pub fn array_string(&self) -> String {
        render_array(&self.coeffs)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_decimal_seq(&self.coeffs, serializer)
    }
}

/// Coefficients of a polynomial expanded in powers of (x+1).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftedCoeffs {
    coeffs: Vec<BigInt>,
}

impl ShiftedCoeffs {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> ShiftedCoeffs {
        trim(&mut coeffs);
        ShiftedCoeffs { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> ShiftedCoeffs {
        ShiftedCoeffs::from_coeffs(coeffs.iter().map(|c| BigInt::from(*c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Reconstruct the plain-basis polynomial.
    pub fn to_poly(&self) -> IntPoly {
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let next = a[j + 1].clone();
                a[j] += next;
            }
        }
        IntPoly::from_coeffs(a)
    }

    pub fn array_string(&self) -> String {
        render_array(&self.coeffs)
    }
}

impl Serialize for ShiftedCoeffs {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_decimal_seq(&self.coeffs, serializer)
    }
}

/// A polynomial is (x+1)-positive when every coefficient of its (x+1)
/// expansion is non-negative.
pub fn is_x_plus_1_positive(p: &IntPoly) -> bool {
    p.to_shifted_basis().is_nonnegative()
}

/// The lower building block: sum over i of C(n, i+k) x^i.
pub fn bin_lower(k: u64, n: u64) -> IntPoly {
    let coeffs = (0..=n.saturating_sub(k))
        .map(|i| BigInt::from(binomial(n, i + k)))
        .collect();
    IntPoly::from_coeffs(coeffs)
}

/// Closed-form (x+1) expansion of `bin_lower(k, n)`: the coefficient of
/// (x+1)^i is C(n-i-1, k-1). Requires k >= 1.
pub fn bin_lower_shifted(k: u64, n: u64) -> Result<ShiftedCoeffs, PolyError> {
    if k == 0 {
        return Err(PolyError::KZero);
    }
    let coeffs = (0..=n.saturating_sub(1))
        .map(|i| BigInt::from(binomial_signed(n as i64 - i as i64 - 1, k as i64 - 1)))
        .collect();
    Ok(ShiftedCoeffs::from_coeffs(coeffs))
}

/// The upper building block: the generating function counting subsets S of
/// an n-element set by | |S| - k |. Requires k <= n.
pub fn bin_upper(k: u64, n: u64) -> Result<IntPoly, PolyError> {
    if k > n {
        return Err(PolyError::KAboveN { k, n });
    }
    let deg = k.max(n - k) as usize;
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for j in 0..=n {
        let e = j.abs_diff(k) as usize;
        coeffs[e] += BigInt::from(binomial(n, j));
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// Closed-form (x+1) expansion of `bin_upper(k, n)`: constant coefficient 0,
/// and C(n-i-1, k-1) + C(n-i-1, n-k-1) at (x+1)^i for i > 0. Requires
/// 1 <= k <= n.
///
/// At k = n the second summand degenerates: the expansion splits over the
/// two lower blocks, and the complementary one is bin_0(n) = (x+1)^n, so a
/// single unit lands at i = n instead.
pub fn bin_upper_shifted(k: u64, n: u64) -> Result<ShiftedCoeffs, PolyError> {
    if k == 0 {
        return Err(PolyError::KZero);
    }
    if k > n {
        return Err(PolyError::KAboveN { k, n });
    }
    let mut coeffs = vec![BigInt::zero()];
    for i in 1..=n {
        let top = n as i64 - i as i64 - 1;
        let mut c = binomial_signed(top, k as i64 - 1);
        if k == n {
            if i == n {
                c += BigUint::from(1u32);
            }
        } else {
            c += binomial_signed(top, n as i64 - k as i64 - 1);
        }
        coeffs.push(BigInt::from(c));
    }
    Ok(ShiftedCoeffs::from_coeffs(coeffs))
}

/// Closed-form (x+1) expansion of the generating function counting shuffles
/// of the class r=l=m, u=d=n by absolute signed corner-count: C(m+n, n) at
/// (x+1)^0 and 2 * sum over 0 <= k < n of
/// C(m+n, k) C(m+n-k, 2n-2k) C(2n-2k-i-1, n-k-1) at (x+1)^i for i > 0.
pub fn loop_gf_shifted(m: u64, n: u64) -> ShiftedCoeffs {
    let mut coeffs = vec![BigInt::from(binomial(m + n, n))];
    for i in 1..=n {
        let mut total = BigUint::zero();
        for k in 0..n {
            let inner = binomial(m + n, k)
                * binomial(m + n - k, 2 * n - 2 * k)
                * binomial_signed(2 * (n - k) as i64 - i as i64 - 1, (n - k) as i64 - 1);
            total += inner;
        }
        coeffs.push(BigInt::from(total * 2u32));
    }
    ShiftedCoeffs::from_coeffs(coeffs)
}

/// The degree-j element of the toggle basis: 1 for j = 0, and the monic
/// polynomial `bin_upper(j, 2j-1)` for j >= 1.
pub fn toggle_basis_element(j: u64) -> IntPoly {
    if j == 0 {
        IntPoly::one()
    } else {
        bin_upper(j, 2 * j - 1).expect("j <= 2j-1 for j >= 1")
    }
}

/// Unique decomposition of a polynomial over the toggle basis, by greedy
/// top-degree elimination against the monic basis element of each degree.
/// Keys are basis degrees; absent degrees have coefficient zero.
pub fn toggle_basis_decompose(p: &IntPoly) -> BTreeMap<usize, BigInt> {
    let mut out = BTreeMap::new();
    let mut rest = p.clone();
    while let Some(deg) = rest.degree() {
        if deg == 0 {
            break;
        }
        let lead = rest.coeff(deg);
        rest = rest.sub(&toggle_basis_element(deg as u64).scale(&lead));
        debug_assert!(rest.degree().is_none_or(|d| d < deg));
        out.insert(deg, lead);
    }
    if !rest.is_zero() {
        out.insert(0, rest.coeff(0));
    }
    out
}

/// A polynomial is toggle-buildable when its decomposition over the toggle
/// basis has only non-negative coefficients.
pub fn is_toggle_buildable(p: &IntPoly) -> bool {
    toggle_basis_decompose(p).values().all(|c| !c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluate_examples() {
        let p = IntPoly::from_i64_coeffs(&[15, 12, 1]);
        assert_eq!(p.evaluate(&BigInt::from(-1)), BigInt::from(4));
        assert_eq!(p.add(&IntPoly::zero()), p);
        // mass of a generating function = value at 1
        assert_eq!(p.evaluate(&BigInt::from(1)), BigInt::from(28));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(
            IntPoly::from_i64_coeffs(&[15, 12, 1]).to_string(),
            "x^2 + 12x + 15"
        );
        assert_eq!(IntPoly::from_i64_coeffs(&[0, -2]).to_string(), "-2x");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn shifted_basis_examples() {
        let p = IntPoly::from_i64_coeffs(&[15, 12, 1]);
        assert_eq!(
            p.to_shifted_basis(),
            ShiftedCoeffs::from_i64_coeffs(&[4, 10, 1])
        );

        // (x+1)^3 is a unit vector in the shifted basis
        let p = IntPoly::from_i64_coeffs(&[1, 3, 3, 1]);
        assert_eq!(
            p.to_shifted_basis(),
            ShiftedCoeffs::from_i64_coeffs(&[0, 0, 0, 1])
        );

        let p = IntPoly::from_i64_coeffs(&[4, 2]);
        assert_eq!(
            p.to_shifted_basis(),
            ShiftedCoeffs::from_i64_coeffs(&[2, 2])
        );
    }

    #[test]
    fn shifted_basis_round_trips() {
        for coeffs in [
            vec![],
            vec![7],
            vec![15, 12, 1],
            vec![0, -3, 9, -1, 4],
            vec![1_000_000, -999_999, 123456, 0, 0, 17],
        ] {
            let p = IntPoly::from_i64_coeffs(&coeffs);
            assert_eq!(p.to_shifted_basis().to_poly(), p);
        }
    }

    #[test]
    fn positivity_examples() {
        assert!(is_x_plus_1_positive(&IntPoly::from_i64_coeffs(&[
            15, 12, 1
        ])));
        assert!(!is_x_plus_1_positive(&IntPoly::from_i64_coeffs(&[0, 1])));
        assert!(is_x_plus_1_positive(&IntPoly::from_i64_coeffs(&[4, 2])));
    }

    #[test]
    fn bin_lower_examples() {
        assert_eq!(bin_lower(1, 2), IntPoly::from_i64_coeffs(&[2, 1]));
        // k = 0 recovers (x+1)^n
        assert_eq!(bin_lower(0, 4), IntPoly::from_i64_coeffs(&[1, 4, 6, 4, 1]));
        assert_eq!(
            bin_lower(1, 2).to_shifted_basis(),
            ShiftedCoeffs::from_i64_coeffs(&[1, 1])
        );
        assert!(bin_lower(5, 3).is_zero());
    }

    #[test]
    fn bin_lower_shifted_examples() {
        assert_eq!(
            bin_lower_shifted(1, 2).unwrap(),
            ShiftedCoeffs::from_i64_coeffs(&[1, 1])
        );
        assert_eq!(
            bin_lower_shifted(4, 4).unwrap(),
            ShiftedCoeffs::from_i64_coeffs(&[1])
        );
        assert_eq!(bin_lower_shifted(0, 3), Err(PolyError::KZero));
    }

    #[test]
    fn bin_lower_shifted_matches_taylor_shift() {
        for n in 1..=10u64 {
            for k in 1..=10u64 {
                assert_eq!(
                    bin_lower_shifted(k, n).unwrap(),
                    bin_lower(k, n).to_shifted_basis(),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn bin_upper_examples() {
        assert_eq!(bin_upper(1, 2).unwrap(), IntPoly::from_i64_coeffs(&[2, 2]));
        assert_eq!(bin_upper(1, 1).unwrap(), IntPoly::from_i64_coeffs(&[1, 1]));
        assert_eq!(
            bin_upper(2, 3).unwrap(),
            IntPoly::from_i64_coeffs(&[3, 4, 1])
        );
        assert_eq!(bin_upper(3, 2), Err(PolyError::KAboveN { k: 3, n: 2 }));
        // k = 0 counts subsets by size
        assert_eq!(
            bin_upper(0, 2).unwrap(),
            IntPoly::from_i64_coeffs(&[1, 2, 1])
        );
    }

    #[test]
    fn bin_upper_against_subset_oracle() {
        // direct tally over all subsets of [n]
        for n in 0..=10u64 {
            for k in 0..=n {
                let mut coeffs = vec![0i64; n as usize + 1];
                for mask in 0u32..1 << n {
                    let size = mask.count_ones() as u64;
                    coeffs[size.abs_diff(k) as usize] += 1;
                }
                assert_eq!(bin_upper(k, n).unwrap(), IntPoly::from_i64_coeffs(&coeffs));
            }
        }
    }

    #[test]
    fn bin_upper_shifted_examples() {
        assert_eq!(
            bin_upper_shifted(1, 2).unwrap(),
            ShiftedCoeffs::from_i64_coeffs(&[0, 2])
        );
        assert_eq!(bin_upper_shifted(0, 2), Err(PolyError::KZero));
        for n in 1..=10u64 {
            for k in 1..=n {
                let shifted = bin_upper_shifted(k, n).unwrap();
                assert_eq!(shifted.coeff(0), BigInt::zero(), "constant must vanish");
                assert_eq!(shifted, bin_upper(k, n).unwrap().to_shifted_basis());
            }
        }
    }

    #[test]
    fn double_counting_identity() {
        // bin_lower(k, n) + bin_lower(n-k, n) = bin_upper(k, n) + C(n, k)
        for n in 1..=10u64 {
            for k in 1..=n {
                let lhs = bin_lower(k, n).add(&bin_lower(n - k, n));
                let rhs = bin_upper(k, n)
                    .unwrap()
                    .add(&IntPoly::constant(BigInt::from(binomial(n, k))));
                assert_eq!(lhs, rhs, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn doubled_odd_basis_equals_even_block() {
        for j in 1..=8u64 {
            let doubled = toggle_basis_element(j).scale(&BigInt::from(2));
            assert_eq!(doubled, bin_upper(j, 2 * j).unwrap(), "j={j}");
        }
    }

    #[test]
    fn loop_gf_shifted_examples() {
        assert_eq!(
            loop_gf_shifted(1, 1),
            ShiftedCoeffs::from_i64_coeffs(&[2, 2])
        );
        assert_eq!(loop_gf_shifted(3, 0), ShiftedCoeffs::from_i64_coeffs(&[1]));
        assert_eq!(
            loop_gf_shifted(1, 1).to_poly(),
            IntPoly::from_i64_coeffs(&[4, 2])
        );
    }

    #[test]
    fn toggle_basis_decomposition_examples() {
        // x + 1 is the degree-1 basis element itself
        let p = IntPoly::from_i64_coeffs(&[1, 1]);
        let d = toggle_basis_decompose(&p);
        assert_eq!(d, BTreeMap::from([(1usize, BigInt::one())]));

        let d = toggle_basis_decompose(&IntPoly::one());
        assert_eq!(d, BTreeMap::from([(0usize, BigInt::one())]));

        let p = IntPoly::from_i64_coeffs(&[15, 12, 1]);
        let d = toggle_basis_decompose(&p);
        assert_eq!(
            d,
            BTreeMap::from([
                (2usize, BigInt::from(1)),
                (1usize, BigInt::from(8)),
                (0usize, BigInt::from(4)),
            ])
        );
        assert!(is_toggle_buildable(&p));

        assert!(toggle_basis_decompose(&IntPoly::zero()).is_empty());
        assert!(is_toggle_buildable(&IntPoly::zero()));
        assert!(!is_toggle_buildable(&IntPoly::from_i64_coeffs(&[1, 2])));
    }

    #[test]
    fn decomposition_reconstructs_the_polynomial() {
        for coeffs in [vec![15, 12, 1], vec![0, 1, 0, 2], vec![-3, 7], vec![5]] {
            let p = IntPoly::from_i64_coeffs(&coeffs);
            let mut rebuilt = IntPoly::zero();
            for (deg, c) in toggle_basis_decompose(&p) {
                rebuilt = rebuilt.add(&toggle_basis_element(deg as u64).scale(&c));
            }
            assert_eq!(rebuilt, p);
        }
    }

    #[test]
    fn serialization_uses_decimal_strings() {
        let p = IntPoly::from_i64_coeffs(&[4, 2]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["4","2"]"#);
        let s = p.to_shifted_basis();
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"["2","2"]"#);
    }
}
