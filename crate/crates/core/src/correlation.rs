//! Periodic autocorrelation and the circulant Hadamard predicate.
//!
//! For a ±1 row `h` of length `n`, the periodic autocorrelation at shift `s`
//! is the dot product of the row with its own cyclic shift. The circulant
//! matrix built from `h` is Hadamard exactly when this vanishes for every
//! shift `1..n`. All computations here are exact.

use serde::{Deserialize, Serialize};

use crate::row::SignRow;

/// Periodic autocorrelation of `row` at shift `s`:
/// `sum_i h[i] * h[(i + s) mod n]`. The shift reduces modulo `n`, so
/// `paf(row, 0) == n` always.
pub fn paf(row: &SignRow, s: usize) -> i64 {
    let h = row.signs();
    let n = h.len();
    let s = s % n;
    (0..n)
        .map(|i| i64::from(h[i]) * i64::from(h[(i + s) % n]))
        .sum()
}

/// All periodic autocorrelations of a row, indexed by shift.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PafSpectrum {
    values: Vec<i64>,
}

impl PafSpectrum {
    /// Computes the autocorrelation at every shift `0..n`.
    pub fn of(row: &SignRow) -> Self {
        let n = row.len();
        PafSpectrum {
            values: (0..n).map(|s| paf(row, s)).collect(),
        }
    }

    /// Value at shift `s`, which must be below the row length.
    pub fn at(&self, s: usize) -> i64 {
        self.values[s]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// True when every off-peak value is zero, i.e. the row generates a
    /// circulant Hadamard matrix.
    pub fn is_flat(&self) -> bool {
        self.values[1..].iter().all(|&v| v == 0)
    }

    /// Largest absolute off-peak value; zero exactly when [`Self::is_flat`].
    pub fn max_off_peak(&self) -> i64 {
        self.values[1..].iter().map(|v| v.abs()).max().unwrap_or(0)
    }
}

/// Whether the circulant matrix generated by `row` is Hadamard, decided
/// entirely in integer arithmetic. Length 1 is trivially Hadamard.
pub fn is_circulant_hadamard(row: &SignRow) -> bool {
    let n = row.len();
    (1..n).all(|s| paf(row, s) == 0)
}

/// Independent orthogonality oracle: materializes all `n` rows of the
/// circulant matrix and checks `M * M^T = n * I` pair by pair with exact
/// dot products. Quadratically slower than the autocorrelation route and
/// deliberately so; it shares no code with [`paf`].
pub fn gram_orthogonality_oracle(row: &SignRow) -> bool {
    let n = row.len();
    let rows: Vec<SignRow> = (1..=n).map(|j| row.circulant_row(j).unwrap()).collect();
    for i in 0..n {
        for j in i..n {
            let expected = if i == j { n as i64 } else { 0 };
            if rows[i].dot(&rows[j]).unwrap() != expected {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn row(lit: &str) -> SignRow {
        lit.parse().unwrap()
    }

    #[test]
    fn paf_of_known_rows() {
        let r = row("+---");
        assert_eq!(paf(&r, 0), 4);
        assert_eq!(paf(&r, 1), 0);
        assert_eq!(paf(&r, 2), 0);
        assert_eq!(paf(&r, 3), 0);
        assert_eq!(paf(&r, 4), 4); // shift reduces mod n

        let all_plus = row("++++");
        assert!((0..4).all(|s| paf(&all_plus, s) == 4));

        let alt = row("+-+-");
        assert_eq!(paf(&alt, 1), -4);
        assert_eq!(paf(&alt, 2), 4);
    }

    #[test]
    fn spectrum_collects_all_shifts() {
        let spec = PafSpectrum::of(&row("+---"));
        assert_eq!(spec.values(), &[4, 0, 0, 0]);
        assert!(spec.is_flat());
        assert_eq!(spec.max_off_peak(), 0);

        let spec = PafSpectrum::of(&row("++-+--"));
        assert_eq!(spec.at(0), 6);
        assert!(!spec.is_flat());
        assert_eq!(spec.max_off_peak(), 2);
    }

    #[test]
    fn hadamard_predicate_on_small_orders() {
        assert!(is_circulant_hadamard(&row("+")));
        assert!(is_circulant_hadamard(&row("-")));
        assert!(is_circulant_hadamard(&row("+---")));
        assert!(is_circulant_hadamard(&row("-+++")));
        assert!(!is_circulant_hadamard(&row("++++")));
        assert!(!is_circulant_hadamard(&row("+-")));
        assert!(!is_circulant_hadamard(&row("++-+--")));
    }

    #[test]
    fn gram_oracle_agrees_on_examples() {
        for lit in ["+", "-", "+---", "-+++", "++++", "+-", "++-+--", "+-+-"] {
            let r = row(lit);
            assert_eq!(
                gram_orthogonality_oracle(&r),
                is_circulant_hadamard(&r),
                "disagreement on {lit}"
            );
        }
    }

    fn arb_row(max_len: usize) -> impl Strategy<Value = SignRow> {
        prop::collection::vec(prop::bool::ANY, 1..=max_len).prop_map(|bits| {
            SignRow::from_signs_unchecked(bits.into_iter().map(|b| if b { 1 } else { -1 }).collect())
        })
    }

    proptest! {
        #[test]
        fn paf_is_symmetric_in_the_shift(r in arb_row(24), s in 0usize..24) {
            let n = r.len();
            prop_assert_eq!(paf(&r, s % n), paf(&r, n - s % n));
        }

        #[test]
        fn paf_matches_row_length_mod_4(r in arb_row(24), s in 0usize..24) {
            let n = r.len() as i64;
            prop_assert_eq!(paf(&r, s).rem_euclid(4), n.rem_euclid(4));
        }

        #[test]
        fn paf_values_sum_to_squared_row_sum(r in arb_row(24)) {
            let total: i64 = PafSpectrum::of(&r).values().iter().sum();
            let lambda = r.ones_eigenvalue();
            prop_assert_eq!(total, lambda * lambda);
        }

        #[test]
        fn paf_is_rotation_and_negation_invariant(r in arb_row(24), k in -30i64..30, s in 0usize..24) {
            prop_assert_eq!(paf(&r.rotate(k), s), paf(&r, s));
            prop_assert_eq!(paf(&r.negated(), s), paf(&r, s));
        }

        #[test]
        fn paf_is_a_shifted_dot_product(r in arb_row(24), s in 0usize..24) {
            // rotate(s) moves entries forward, so h[(i + s) mod n] lines up
            // with rotating the row backward
            prop_assert_eq!(paf(&r, s), r.dot(&r.rotate(-(s as i64))).unwrap());
        }

        #[test]
        fn gram_oracle_matches_paf_predicate(r in arb_row(16)) {
            prop_assert_eq!(gram_orthogonality_oracle(&r), is_circulant_hadamard(&r));
        }
    }
}
