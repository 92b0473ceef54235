//! Helpers shared by the integration and acceptance suites.

use circulant_hadamard::SignRow;
use rand::rngs::StdRng;
use rand::Rng;

/// Every ±1 row of length `n`, in mask order. Caller keeps `n` small.
pub fn all_rows(n: usize) -> impl Iterator<Item = SignRow> {
    assert!((1..=24).contains(&n));
    (0..1u32 << n).map(move |mask| {
        SignRow::new((0..n).map(|i| if mask >> i & 1 == 0 { 1 } else { -1 })).unwrap()
    })
}

/// One uniformly random ±1 row of length `n`.
pub fn random_row(rng: &mut StdRng, n: usize) -> SignRow {
    SignRow::new((0..n).map(|_| if rng.random::<bool>() { 1i64 } else { -1 })).unwrap()
}
