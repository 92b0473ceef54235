//! Integer identities constraining circulant Hadamard first rows.
//!
//! Two families live here. The regularity statistics encode the classical
//! order obstruction: a circulant Hadamard matrix of order n > 1 forces
//! n = 4r² with r odd, row sums ±2r, and 2r² ± r positive entries. The
//! identity report covers the half-row decomposition: splitting an
//! even-length row into its interleaved halves yields two half-order
//! circulant matrices whose eigenvalue and cross-sum relations hold for
//! every ±1 row, Hadamard or not. Everything is exact; this module contains
//! no floating point.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::row::SignRow;

/// Sign statistics of a row measured against the regular Hadamard pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityStats {
    pub order: usize,
    /// The positive integer r with order = 4r², when one exists.
    pub quarter_root: Option<u64>,
    pub row_sum: i64,
    pub positive_count: u64,
    pub negative_count: u64,
    /// Whether the row is consistent with being a circulant Hadamard first
    /// row: order = 4r² with r odd, |row_sum| = 2r, and the positive-entry
    /// count hitting 2r² ± r.
    pub admissible: bool,
}

/// Computes the sign counts of a row and checks them against the pattern
/// a circulant Hadamard first row must satisfy.
pub fn regularity_stats(row: &SignRow) -> RegularityStats {
    let n = row.len();
    let positive_count = row.signs().iter().filter(|&&e| e == 1).count() as u64;
    let negative_count = n as u64 - positive_count;
    let row_sum = row.ones_eigenvalue();
    let quarter_root = exact_quarter_root(n);
    let admissible = match quarter_root {
        Some(r) => {
            let r_i = r as i64;
            r % 2 == 1
                && row_sum.abs() == 2 * r_i
                && (positive_count as i64 == 2 * r_i * r_i + r_i
                    || positive_count as i64 == 2 * r_i * r_i - r_i)
        }
        None => false,
    };
    RegularityStats {
        order: n,
        quarter_root,
        row_sum,
        positive_count,
        negative_count,
        admissible,
    }
}

/// The positive integer r with `n = 4r²`, if any.
fn exact_quarter_root(n: usize) -> Option<u64> {
    if n == 0 || !n.is_multiple_of(4) {
        return None;
    }
    let quarter = (n / 4) as u64;
    let r = quarter.isqrt();
    (r * r == quarter).then_some(r)
}

/// Why an order admits no circulant Hadamard matrix (orders above 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExclusionReason {
    /// The order is not 4r² for any positive integer r.
    NotFourTimesSquare,
    /// The order is 4r² but r is even.
    EvenRoot,
}

/// Outcome of the order-level pre-filter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum OrderAdmissibility {
    Admissible { quarter_root: u64 },
    Excluded { reason: ExclusionReason },
}

impl OrderAdmissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, OrderAdmissibility::Admissible { .. })
    }
}

/// Order-level test: admissible iff `n = 4r²` with r a positive odd
/// integer. Note that order 1 is excluded here even though the two trivial
/// order-1 circulant Hadamard matrices exist; the filter describes the
/// regular pattern, which only applies above order 1.
pub fn order_filter(n: usize) -> OrderAdmissibility {
    match exact_quarter_root(n) {
        None => OrderAdmissibility::Excluded {
            reason: ExclusionReason::NotFourTimesSquare,
        },
        Some(r) if r % 2 == 0 => OrderAdmissibility::Excluded {
            reason: ExclusionReason::EvenRoot,
        },
        Some(r) => OrderAdmissibility::Admissible { quarter_root: r },
    }
}

/// The three cross-row sums of the half-row decomposition, all exact.
///
/// Writing n for the row length, `odd_cross_sum` adds the scalar products
/// of the first row of the odd-half circulant with its rows 2..=n/2,
/// `even_cross_sum` does the same for the even half, and `full_cross_sum`
/// adds the products of the full row with rows 2..=n of its own circulant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionSums {
    pub odd_cross_sum: i64,
    pub even_cross_sum: i64,
    pub full_cross_sum: i64,
}

impl ConditionSums {
    /// The vanishing condition: both half sums cancel and the full sum is
    /// zero. Holds for every circulant Hadamard first row.
    pub fn vanish(&self) -> bool {
        self.odd_cross_sum + self.even_cross_sum == 0 && self.full_cross_sum == 0
    }
}

/// Computes the three cross-row sums by materializing the relevant
/// circulant rows and taking exact scalar products.
pub fn condition_sums(row: &SignRow) -> Result<ConditionSums, Error> {
    let n = row.len();
    let split = row.split_halves()?;
    let cross = |first: &SignRow, last_index: usize| -> i64 {
        (2..=last_index)
            .map(|j| first.dot(&first.circulant_row(j).unwrap()).unwrap())
            .sum()
    };
    Ok(ConditionSums {
        odd_cross_sum: cross(split.odd(), n / 2),
        even_cross_sum: cross(split.even(), n / 2),
        full_cross_sum: cross(row, n),
    })
}

/// Entry sums of the two interleaved halves: the ones-vector eigenvalues
/// of the half circulants. Their sum is always the full row sum.
pub fn half_eigenvalues(row: &SignRow) -> Result<(i64, i64), Error> {
    let split = row.split_halves()?;
    Ok((
        split.odd().ones_eigenvalue(),
        split.even().ones_eigenvalue(),
    ))
}

/// Every exact quantity of the half-row identity chain for one row.
///
/// The two power residuals vanish for every even-length ±1 row; they are
/// unconditional identities, not Hadamard conditions. The remaining fields
/// record quantities that single out Hadamard rows: for a circulant
/// Hadamard first row the cross sums vanish, the squared row sum equals
/// the order, and the eigenvalue square residual is zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub order: usize,
    pub row_sum: i64,
    /// Entry sum of the odd-position half row.
    pub odd_eigenvalue: i64,
    /// Entry sum of the even-position half row.
    pub even_eigenvalue: i64,
    pub odd_cross_sum: i64,
    pub even_cross_sum: i64,
    pub full_cross_sum: i64,
    /// odd_cross_sum + n/2 − odd_eigenvalue²; always 0.
    pub odd_power_residual: i64,
    /// even_cross_sum + n/2 − even_eigenvalue²; always 0.
    pub even_power_residual: i64,
    /// odd_eigenvalue² + even_eigenvalue² − n; 0 on Hadamard rows.
    pub eigenvalue_square_residual: i64,
    /// odd_eigenvalue · even_eigenvalue, surfaced for inspection.
    pub eigenvalue_product: i64,
    /// Whether row_sum² = n.
    pub sum_squared_equals_order: bool,
    /// Whether odd_cross_sum + even_cross_sum = 0 and full_cross_sum = 0.
    pub cross_sums_vanish: bool,
}

/// Evaluates the whole identity chain on one even-length row.
pub fn identity_report(row: &SignRow) -> Result<IdentityReport, Error> {
    let n = row.len();
    let sums = condition_sums(row)?;
    let (odd_eigenvalue, even_eigenvalue) = half_eigenvalues(row)?;
    let row_sum = row.ones_eigenvalue();
    let half = (n / 2) as i64;
    Ok(IdentityReport {
        order: n,
        row_sum,
        odd_eigenvalue,
        even_eigenvalue,
        odd_cross_sum: sums.odd_cross_sum,
        even_cross_sum: sums.even_cross_sum,
        full_cross_sum: sums.full_cross_sum,
        odd_power_residual: sums.odd_cross_sum + half - odd_eigenvalue * odd_eigenvalue,
        even_power_residual: sums.even_cross_sum + half - even_eigenvalue * even_eigenvalue,
        eigenvalue_square_residual: odd_eigenvalue * odd_eigenvalue
            + even_eigenvalue * even_eigenvalue
            - n as i64,
        eigenvalue_product: odd_eigenvalue * even_eigenvalue,
        sum_squared_equals_order: row_sum * row_sum == n as i64,
        cross_sums_vanish: sums.vanish(),
    })
}

/// Residual of the splitting identity at index `j` (2 ≤ j ≤ n/2):
///
/// ```text
/// <odd_1, odd_j> + <even_1, even_j> − <full_1, full_(2j−1)>
/// ```
///
/// where the subscripted vectors are rows of the half and full circulants.
/// This is zero for every even-length ±1 row: a shift by 2(j−1) in the
/// full row preserves position parity, so its correlation splits exactly
/// into the two half correlations at shift j−1.
pub fn split_correlation_residual(row: &SignRow, j: usize) -> Result<i64, Error> {
    let n = row.len();
    let split = row.split_halves()?;
    if j < 2 || j > n / 2 {
        return Err(Error::IndexOutOfRange {
            index: j,
            min: 2,
            max: n / 2,
        });
    }
    let odd_part = split.odd().dot(&split.odd().circulant_row(j)?)?;
    let even_part = split.even().dot(&split.even().circulant_row(j)?)?;
    let full_part = row.dot(&row.circulant_row(2 * j - 1)?)?;
    Ok(odd_part + even_part - full_part)
}
