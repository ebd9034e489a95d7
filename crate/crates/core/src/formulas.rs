//! Independent oracles for the floor-diagram counts: the Kontsevich
//! recursion for rational curves, closed formulas for curves with few
//! nodes, and small dimension/genus helpers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::enumeration;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("{0}")]
    OutOfRange(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// Exact binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    // Each prefix product is itself a binomial coefficient, so the
    // division is always exact.
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Memoized values of `N(d, 0)` from the Kontsevich recursion, starting
/// from the single line through two points.
#[derive(Debug, Clone)]
pub struct RecursionTable {
    values: Vec<BigUint>,
}

impl Default for RecursionTable {
    fn default() -> Self {
        Self::new()
    }
}

impl RecursionTable {
    pub fn new() -> Self {
        // Index 0 is a placeholder so that values[d] = N(d, 0).
        Self {
            values: vec![BigUint::zero(), BigUint::one()],
        }
    }

    pub fn get(&mut self, degree: u32) -> Result<&BigUint, FormulaError> {
        if degree == 0 {
            return Err(FormulaError::OutOfRange("degree must be at least 1".into()));
        }
        let degree = degree as usize;
        while self.values.len() <= degree {
            let next = self.next_value();
            self.values.push(next);
        }
        Ok(&self.values[degree])
    }

    /// Values computed so far, as `(degree, N(degree, 0))`.
    pub fn known(&self) -> impl Iterator<Item = (u32, &BigUint)> {
        self.values.iter().enumerate().skip(1).map(|(d, n)| (d as u32, n))
    }

    fn next_value(&self) -> BigUint {
        let d = self.values.len() as u64;
        let mut total = BigInt::zero();
        for d1 in 1..d {
            let d2 = d - d1;
            let product = BigInt::from(&self.values[d1 as usize] * &self.values[d2 as usize]);
            let first = BigInt::from(d1 * d1 * d2 * d2)
                * BigInt::from(binomial(3 * d - 4, 3 * d1 as i64 - 2));
            let second = BigInt::from(d1 * d1 * d1 * d2)
                * BigInt::from(binomial(3 * d - 4, 3 * d1 as i64 - 1));
            total += product * (first - second);
        }
        total
            .to_biguint()
            .expect("the recursion produces non-negative counts")
    }
}

/// `N(d, 0)` by the Kontsevich recursion.
pub fn kontsevich(degree: u32) -> Result<BigUint, FormulaError> {
    RecursionTable::new().get(degree).cloned()
}

/// `N(d, g_max - delta)` for `delta` nodes below the maximal genus.
///
/// * `delta = 0`: exactly one curve, for every `d >= 1`;
/// * `delta = 1`: `3 (d - 1)^2`, for `d >= 3`;
/// * `delta = 2`: `3/2 (d - 1)(d - 2)(3d^2 - 3d - 11)`, for `d >= 4`.
pub fn closed_count(degree: u32, delta: u32) -> Result<BigUint, FormulaError> {
    let d = BigInt::from(degree);
    let one = BigInt::one();
    match (delta, degree) {
        (0, 1..) => Ok(BigUint::one()),
        (1, 3..) => {
            let dm1 = &d - &one;
            Ok((BigInt::from(3) * &dm1 * &dm1).magnitude().clone())
        }
        (2, 4..) => {
            let numerator = BigInt::from(3)
                * (&d - 1)
                * (&d - 2)
                * (BigInt::from(3) * &d * &d - BigInt::from(3) * &d - 11);
            let value = BigRational::new(numerator, BigInt::from(2));
            if !value.is_integer() || value.is_negative() {
                return Err(FormulaError::Internal(format!(
                    "two-node formula is not a non-negative integer at d = {degree}"
                )));
            }
            Ok(value.to_integer().magnitude().clone())
        }
        (0..=2, _) => Err(FormulaError::OutOfRange(format!(
            "the {delta}-node formula needs degree >= {}",
            [1, 3, 4][delta as usize]
        ))),
        _ => Err(FormulaError::OutOfRange(format!(
            "no closed formula for {delta} nodes below maximal genus"
        ))),
    }
}

/// Genus of a smooth curve of degree `d`: `(d - 1)(d - 2) / 2`.
pub fn genus_max(degree: u32) -> u32 {
    if degree == 0 {
        return 0;
    }
    (degree - 1) * degree.saturating_sub(2) / 2
}

pub fn genus_from_nodes(degree: u32, nodes: u32) -> Result<u32, FormulaError> {
    genus_max(degree).checked_sub(nodes).ok_or_else(|| {
        FormulaError::OutOfRange(format!(
            "an irreducible degree {degree} curve has at most {} nodes",
            genus_max(degree)
        ))
    })
}

pub fn nodes_from_genus(degree: u32, genus: u32) -> Result<u32, FormulaError> {
    genus_max(degree).checked_sub(genus).ok_or_else(|| {
        FormulaError::OutOfRange(format!(
            "a degree {degree} curve has genus at most {}",
            genus_max(degree)
        ))
    })
}

/// Number of generic points determining a curve of degree `d`:
/// one less than the number of monomials, `d(d + 3) / 2`.
pub fn space_dimension(degree: u32) -> u32 {
    degree * (degree + 3) / 2
}

/// Number of points fixing finitely many curves of degree `d`, genus `g`.
pub fn severi_dimension(degree: u32, genus: u32) -> u32 {
    (3 * degree + genus).saturating_sub(1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Congruence {
    pub holds: bool,
    pub complex_mod4: u8,
    pub real_mod4: u8,
}

/// Compares `N(d, 0)` and `W(d)` modulo 4.
pub fn congruence_of(complex: &BigUint, real: &BigUint) -> Congruence {
    let m = |n: &BigUint| (n % 4u32).to_u8().expect("residue below 4");
    let (complex_mod4, real_mod4) = (m(complex), m(real));
    Congruence {
        holds: complex_mod4 == real_mod4,
        complex_mod4,
        real_mod4,
    }
}

/// Mod-4 comparison of the floor-diagram counts `N(d, 0)` and `W(d)`.
pub fn congruence_mod4(degree: u32) -> Result<Congruence, FormulaError> {
    if degree == 0 {
        return Err(FormulaError::OutOfRange("degree must be at least 1".into()));
    }
    let complex = enumeration::count_complex(degree, 0).value;
    let real = enumeration::count_real_rational(degree).value;
    Ok(congruence_of(&complex, &real))
}

/// `ln N(d, 0) / (3 d ln d)`, a diagnostic for the growth rate of rational
/// curve counts. Accurate to about 1e-12 relative error.
pub fn asymptotic_ratio(degree: u32) -> Result<f64, FormulaError> {
    if degree < 2 {
        return Err(FormulaError::OutOfRange(
            "the ratio is defined for degree >= 2".into(),
        ));
    }
    let n = kontsevich(degree)?;
    let d = degree as f64;
    Ok(ln(&n) / (3.0 * d * d.ln()))
}

fn ln(n: &BigUint) -> f64 {
    // Top 64 bits only.
    let bits = n.bits();
    if bits <= 64 {
        return n.to_f64().unwrap_or(f64::NAN).ln();
    }
    let shift = bits - 64;
    let top = (n >> shift).to_f64().unwrap_or(f64::NAN);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Whether `a | b`, for the divisibility observations on `N(d, 0)`.
pub fn divides(a: &BigUint, b: &BigUint) -> bool {
    !a.is_zero() && b.is_multiple_of(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), n(10));
        assert_eq!(binomial(7, 0), n(1));
        assert_eq!(binomial(0, 0), n(1));
        assert_eq!(binomial(8, 4), n(70));
        assert_eq!(binomial(4, 5), n(0));
        assert_eq!(binomial(4, -1), n(0));
    }

    #[test]
    fn pascal_rule_and_symmetry() {
        // Independent table built by additions only.
        let mut row = vec![n(1)];
        for size in 0..=64u64 {
            for k in 0..=size {
                assert_eq!(binomial(size, k as i64), row[k as usize]);
                assert_eq!(binomial(size, k as i64), binomial(size, (size - k) as i64));
            }
            let mut next = vec![n(1); row.len() + 1];
            for k in 1..row.len() {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
    }

    #[test]
    fn kontsevich_table() {
        let expected = [1u64, 1, 12, 620, 87304, 26312976, 14616808192];
        let mut table = RecursionTable::new();
        for (d, &value) in (1..).zip(&expected) {
            assert_eq!(table.get(d).unwrap(), &n(value), "d = {d}");
        }
        assert_eq!(table.known().count(), 7);
        assert_eq!(kontsevich(3).unwrap(), n(12));
        assert!(kontsevich(0).is_err());
    }

    #[test]
    fn kontsevich_parity_observations() {
        let mut table = RecursionTable::new();
        for d in 3..=20u32 {
            let value = table.get(d).unwrap().clone();
            assert!(value.is_even(), "N({d},0) odd");
            let power = BigUint::one() << ((d - 1) / 2);
            assert!(divides(&power, &value), "2^[(d-1)/2] does not divide N({d},0)");
        }
    }

    #[test]
    fn closed_formulas() {
        assert_eq!(closed_count(3, 1).unwrap(), n(12));
        assert_eq!(closed_count(4, 2).unwrap(), n(225));
        assert_eq!(closed_count(5, 2).unwrap(), n(882));
        assert_eq!(closed_count(4, 1).unwrap(), n(27));
        assert_eq!(closed_count(1, 0).unwrap(), n(1));
        assert!(closed_count(2, 1).is_err());
        assert!(closed_count(3, 2).is_err());
        assert!(closed_count(5, 3).is_err());
        assert!(closed_count(0, 0).is_err());
    }

    #[test]
    fn two_node_formula_is_integral() {
        for d in 4..200 {
            closed_count(d, 2).unwrap();
        }
    }

    #[test]
    fn genus_and_nodes() {
        assert_eq!(genus_from_nodes(3, 1).unwrap(), 0);
        assert_eq!(genus_max(4), 3);
        assert_eq!(genus_max(1), 0);
        assert_eq!(genus_max(2), 0);
        assert_eq!(nodes_from_genus(4, 0).unwrap(), 3);
        assert!(genus_from_nodes(3, 2).is_err());
        assert!(nodes_from_genus(3, 2).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(space_dimension(1), 2);
        assert_eq!(space_dimension(2), 5);
        assert_eq!(space_dimension(3), 9);
        assert_eq!(severi_dimension(3, 0), 8);
        assert_eq!(severi_dimension(3, 1), space_dimension(3));
    }

    #[test]
    fn congruence_from_values() {
        assert!(congruence_of(&n(12), &n(8)).holds);
        assert!(congruence_of(&n(1), &n(1)).holds);
        assert!(congruence_of(&n(620), &n(240)).holds);
        assert!(!congruence_of(&n(6), &n(8)).holds);
    }

    #[test]
    fn asymptotic_ratio_values() {
        // ln(14616808192) / (21 ln 7), evaluated independently.
        let r7 = asymptotic_ratio(7).unwrap();
        assert!((r7 - 0.5727).abs() < 1e-3, "{r7}");
        assert_eq!(asymptotic_ratio(2).unwrap(), 0.0);
        let ratios: Vec<f64> = (3..=7).map(|d| asymptotic_ratio(d).unwrap()).collect();
        assert!(ratios.windows(2).all(|w| w[0] < w[1]), "{ratios:?}");
        assert!(asymptotic_ratio(1).is_err());
    }

    #[test]
    fn ln_of_large_values() {
        let big = BigUint::one() << 200u32;
        assert!((ln(&big) - 200.0 * std::f64::consts::LN_2).abs() < 1e-9);
    }
}
