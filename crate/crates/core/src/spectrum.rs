//! Floating-point spectral cross-checks.
//!
//! The polynomial `h1 + h2·x + ... + hn·x^(n-1)` evaluated at the n-th
//! roots of unity gives the eigenvalues of the circulant matrix. A row is
//! Hadamard exactly when every eigenvalue has squared modulus n; this
//! module checks that numerically as a cross-check on the exact integer
//! predicate, never as a replacement for it.

use num_complex::Complex64;

use crate::correlation::PafSpectrum;
use crate::row::SignRow;

/// The n eigenvalues of the circulant matrix, indexed by root of unity.
#[derive(Clone, Debug)]
pub struct ComplexSpectrum {
    values: Vec<Complex64>,
}

impl ComplexSpectrum {
    /// Eigenvalue at root index `k`, i.e. the representer polynomial
    /// evaluated at `exp(2πi·k/n)`.
    pub fn at(&self, k: usize) -> Complex64 {
        self.values[k]
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Squared modulus of the eigenvalue at root index `k`.
    pub fn power(&self, k: usize) -> f64 {
        self.values[k].norm_sqr()
    }

    /// Largest deviation of any squared eigenvalue modulus from the order.
    /// Zero (up to rounding) exactly on Hadamard rows.
    pub fn max_power_deviation(&self) -> f64 {
        let n = self.values.len() as f64;
        self.values
            .iter()
            .map(|v| (v.norm_sqr() - n).abs())
            .fold(0.0, f64::max)
    }
}

/// The n-th roots of unity `exp(2πi·t/n)` for t = 0..n, with the upper
/// half mirrored from the lower so that `table[n-t]` is the exact bitwise
/// conjugate of `table[t]`. This makes the conjugate symmetry of real-row
/// spectra hold exactly, not just approximately.
fn root_table(n: usize) -> Vec<Complex64> {
    let mut table = vec![Complex64::new(0.0, 0.0); n];
    table[0] = Complex64::new(1.0, 0.0);
    for t in 1..=n / 2 {
        let angle = 2.0 * std::f64::consts::PI * t as f64 / n as f64;
        table[t] = if 2 * t == n {
            Complex64::new(-1.0, 0.0)
        } else {
            Complex64::new(angle.cos(), angle.sin())
        };
        if t != n - t {
            table[n - t] = table[t].conj();
        }
    }
    table
}

/// Evaluates the row's polynomial at all n-th roots of unity by direct
/// O(n²) summation. `values[0]` is the row sum, exact in floating point.
pub fn representer_spectrum(row: &SignRow) -> ComplexSpectrum {
    let n = row.len();
    let roots = root_table(n);
    let h = row.signs();
    let values = (0..n)
        .map(|k| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, &e) in h.iter().enumerate() {
                let root = roots[j * k % n];
                if e == 1 {
                    acc += root;
                } else {
                    acc -= root;
                }
            }
            acc
        })
        .collect();
    ComplexSpectrum { values }
}

/// Numerical flat-spectrum test: true iff every squared eigenvalue modulus
/// stays within `tol·n` of n. For Hadamard rows this passes at tol 1e-9.
pub fn spectrum_modulus_check(row: &SignRow, tol: f64) -> bool {
    representer_spectrum(row).max_power_deviation() <= tol * row.len() as f64
}

/// Cross-check between the two spectra: the power spectrum must be the
/// Fourier transform of the autocorrelation sequence. Returns the largest
/// complex distance between `|R(w^k)|²` and `sum_s paf(s)·w^(ks)` over all
/// k. Stays below 1e-9·n for any row up to length 64.
pub fn wiener_khinchin_residual(row: &SignRow) -> f64 {
    let n = row.len();
    let roots = root_table(n);
    let spectrum = representer_spectrum(row);
    let paf = PafSpectrum::of(row);
    (0..n)
        .map(|k| {
            let mut transform = Complex64::new(0.0, 0.0);
            for (s, &v) in paf.values().iter().enumerate() {
                transform += v as f64 * roots[s * k % n];
            }
            (Complex64::new(spectrum.power(k), 0.0) - transform).norm()
        })
        .fold(0.0, f64::max)
}
