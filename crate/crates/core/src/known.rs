//! The ten known circulant Hadamard matrices.
//!
//! Two trivial matrices of order 1 and eight of order 4; the order-4 ones
//! form a single orbit under rotation and negation. No others are known,
//! and none exist for any even order up to at least 36 (checked by the
//! exhaustive search in this crate's test suite).

use crate::row::SignRow;

/// One catalogued matrix, identified by its first row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownMatrixRecord {
    pub name: &'static str,
    pub first_row: SignRow,
    pub order: usize,
}

/// All ten known circulant Hadamard matrices, in catalogue order. The
/// even-numbered entries are the negations of their predecessors.
pub fn known_matrices() -> Vec<KnownMatrixRecord> {
    const ROWS: [(&str, &str); 10] = [
        ("H1", "+"),
        ("H2", "-"),
        ("H3", "+---"),
        ("H4", "-+++"),
        ("H5", "-+--"),
        ("H6", "+-++"),
        ("H7", "--+-"),
        ("H8", "++-+"),
        ("H9", "---+"),
        ("H10", "+++-"),
    ];
    ROWS.iter()
        .map(|&(name, literal)| {
            let first_row: SignRow = literal.parse().unwrap();
            let order = first_row.len();
            KnownMatrixRecord {
                name,
                first_row,
                order,
            }
        })
        .collect()
}
