//! ±1 rows and exact integer algebra on the circulant matrices they generate.
//!
//! A circulant matrix is fully determined by its first row; every operation
//! here works on first rows directly and never materializes the matrix.
//! All arithmetic is exact integer arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// The first row `[h1, ..., hn]` of a circulant ±1 matrix.
///
/// Entries are exactly `+1` or `-1` and the length is fixed at construction.
/// The `Ord` impl is lexicographic with `+1` ordered *before* `-1`; this is
/// the order used for canonical forms and for sorted search output.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignRow {
    entries: Vec<i8>,
}

impl SignRow {
    /// Builds a row from raw integers, rejecting empty input and anything
    /// that is not ±1.
    pub fn new<I>(signs: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = i64>,
    {
        let mut entries = Vec::new();
        for s in signs {
            match s {
                1 => entries.push(1i8),
                -1 => entries.push(-1i8),
                other => return Err(Error::InvalidEntry(other)),
            }
        }
        if entries.is_empty() {
            return Err(Error::EmptyRow);
        }
        Ok(SignRow { entries })
    }

    /// Wraps entries already known to be ±1 and non-empty.
    pub(crate) fn from_signs_unchecked(entries: Vec<i8>) -> Self {
        debug_assert!(!entries.is_empty());
        debug_assert!(entries.iter().all(|&e| e == 1 || e == -1));
        SignRow { entries }
    }

    #[allow(clippy::len_without_is_empty)] // rows are never empty
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn signs(&self) -> &[i8] {
        &self.entries
    }

    /// Sum of the entries. The all-ones vector is an eigenvector of any
    /// circulant matrix, and this sum is the associated eigenvalue.
    pub fn ones_eigenvalue(&self) -> i64 {
        self.entries.iter().map(|&e| i64::from(e)).sum()
    }

    /// Cyclic shift moving the last `k` entries to the front, so that
    /// `rotate(1)` sends `[a1, ..., an]` to `[an, a1, ..., a(n-1)]` — the
    /// second row of the circulant matrix. `k` is taken modulo `n`;
    /// negative shifts rotate the other way.
    pub fn rotate(&self, k: i64) -> SignRow {
        let n = self.entries.len();
        let shift = k.rem_euclid(n as i64) as usize;
        if shift == 0 {
            return self.clone();
        }
        let mut entries = Vec::with_capacity(n);
        entries.extend_from_slice(&self.entries[n - shift..]);
        entries.extend_from_slice(&self.entries[..n - shift]);
        SignRow { entries }
    }

    /// The `j`-th row (1-based) of the circulant matrix with this first row.
    pub fn circulant_row(&self, j: usize) -> Result<SignRow, Error> {
        let n = self.entries.len();
        if j < 1 || j > n {
            return Err(Error::IndexOutOfRange {
                index: j,
                min: 1,
                max: n,
            });
        }
        Ok(self.rotate(j as i64 - 1))
    }

    /// Exact scalar product of two rows of equal length.
    pub fn dot(&self, other: &SignRow) -> Result<i64, Error> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| i64::from(a) * i64::from(b))
            .sum())
    }

    /// The row with every entry negated.
    pub fn negated(&self) -> SignRow {
        SignRow {
            entries: self.entries.iter().map(|&e| -e).collect(),
        }
    }

    /// Splits an even-length row into its two interleaved halves.
    pub fn split_halves(&self) -> Result<HalfSplit, Error> {
        let n = self.entries.len();
        if !n.is_multiple_of(2) {
            return Err(Error::OddLength(n));
        }
        let odd = self.entries.iter().copied().step_by(2).collect();
        let even = self.entries.iter().copied().skip(1).step_by(2).collect();
        Ok(HalfSplit {
            odd: SignRow { entries: odd },
            even: SignRow { entries: even },
        })
    }
}

impl fmt::Display for SignRow {
    /// Compact literal: `+` for `+1`, `-` for `-1` (e.g. `+---`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &e in &self.entries {
            f.write_str(if e == 1 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignRow({self})")
    }
}

impl Ord for SignRow {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.entries.iter().zip(&other.entries) {
            if a != b {
                // +1 sorts before -1
                return if *a == 1 { Ordering::Less } else { Ordering::Greater };
            }
        }
        self.len().cmp(&other.len())
    }
}

impl PartialOrd for SignRow {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for SignRow {
    type Err = Error;

    /// Accepts the compact alphabet (`+---`) and comma-separated integers
    /// (`+1,-1,-1,-1` or `1,-1,-1,-1`).
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::Parse("empty row literal".to_string()));
        }
        if t.chars().all(|c| c == '+' || c == '-') {
            let entries = t.chars().map(|c| if c == '+' { 1 } else { -1 }).collect();
            return Ok(SignRow { entries });
        }
        let mut entries = Vec::new();
        for tok in t.split(',') {
            match tok.trim() {
                "1" | "+1" => entries.push(1),
                "-1" => entries.push(-1),
                other => {
                    return Err(Error::Parse(format!(
                        "invalid entry {other:?}; expected +1 or -1"
                    )))
                }
            }
        }
        Ok(SignRow { entries })
    }
}

impl Serialize for SignRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SignRow {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// The interleaved halves of an even-length row: the entries at odd 1-based
/// positions (`h1, h3, ..., h(n-1)`) and at even positions (`h2, h4, ..., hn`).
/// These are the first rows of the two half-order circulant matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSplit {
    odd: SignRow,
    even: SignRow,
}

impl HalfSplit {
    /// Pairs two half rows of equal length.
    pub fn new(odd: SignRow, even: SignRow) -> Result<Self, Error> {
        if odd.len() != even.len() {
            return Err(Error::LengthMismatch {
                left: odd.len(),
                right: even.len(),
            });
        }
        Ok(HalfSplit { odd, even })
    }

    /// Half row at odd 1-based positions of the original row.
    pub fn odd(&self) -> &SignRow {
        &self.odd
    }

    /// Half row at even 1-based positions of the original row.
    pub fn even(&self) -> &SignRow {
        &self.even
    }

    /// Exact inverse of [`SignRow::split_halves`].
    pub fn interleave(&self) -> SignRow {
        let mut entries = Vec::with_capacity(2 * self.odd.len());
        for (&o, &e) in self.odd.entries.iter().zip(&self.even.entries) {
            entries.push(o);
            entries.push(e);
        }
        SignRow { entries }
    }
}
