//! Fourier magnitude of 3×3 stencils and an angular isotropy measure.

use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::kernels::Kernel3;

/// Default grid size for spectra.
pub const DEFAULT_SPECTRUM_SIZE: usize = 64;

/// Radii (cycles/sample) used when ranking stencils by isotropy.
pub const DEFAULT_RADII: [f64; 3] = [0.15, 0.25, 0.35];

/// Angular samples per radius for [`isotropy_score`].
pub const DEFAULT_ANGLES: usize = 64;

/// DC-centered `N×N` magnitude grid. Entry `(row, col)` holds frequency
/// `((col - N/2) / N, (row - N/2) / N)` in cycles per sample.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumGrid {
    size: usize,
    magnitudes: Vec<f64>,
}

impl SpectrumGrid {
    pub fn from_magnitudes(size: usize, magnitudes: Vec<f64>) -> Result<Self> {
        if size == 0 || magnitudes.len() != size * size {
            return Err(Error::LengthMismatch {
                expected: size * size,
                actual: magnitudes.len(),
            });
        }
        if let Some(i) = magnitudes.iter().position(|m| !m.is_finite() || *m < 0.0) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { size, magnitudes })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn magnitudes(&self) -> &[f64] {
        &self.magnitudes
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.magnitudes[row * self.size + col]
    }

    /// Magnitude at signed integer frequency `(kx, ky)`, wrapping periodically.
    pub fn at_frequency(&self, kx: i64, ky: i64) -> f64 {
        let n = self.size as i64;
        let col = (kx + n / 2).rem_euclid(n) as usize;
        let row = (ky + n / 2).rem_euclid(n) as usize;
        self.get(row, col)
    }

    pub fn dc(&self) -> f64 {
        self.at_frequency(0, 0)
    }

    pub fn max(&self) -> f64 {
        self.magnitudes.iter().copied().fold(0.0, f64::max)
    }

    /// Bilinear read at fractional frequency `(fx, fy)` in cycles/sample.
    pub fn interpolate(&self, fx: f64, fy: f64) -> f64 {
        let n = self.size as f64;
        let col = n / 2.0 + fx * n;
        let row = n / 2.0 + fy * n;
        let (c0, r0) = (col.floor(), row.floor());
        let (tc, tr) = (col - c0, row - r0);
        let m = self.size as i64;
        let at = |r: f64, c: f64| {
            let r = (r as i64).rem_euclid(m) as usize;
            let c = (c as i64).rem_euclid(m) as usize;
            self.get(r, c)
        };
        let top = at(r0, c0) * (1.0 - tc) + at(r0, c0 + 1.0) * tc;
        let bottom = at(r0 + 1.0, c0) * (1.0 - tc) + at(r0 + 1.0, c0 + 1.0) * tc;
        top * (1.0 - tr) + bottom * tr
    }
}

/// |DFT| of `kernel` embedded in an `n×n` zero array, DC moved to the center.
///
/// `n` must be even and at least 32.
pub fn kernel_spectrum(kernel: &Kernel3, n: usize) -> Result<SpectrumGrid> {
    if n < 32 || !n.is_multiple_of(2) {
        return Err(Error::param(
            "n",
            format!("spectrum size must be even and >= 32, got {n}"),
        ));
    }
    let mut grid = vec![Complex64::new(0.0, 0.0); n * n];
    // center tap at the origin, neighbors wrap
    for dy in -1i64..=1 {
        for dx in -1i64..=1 {
            let r = dy.rem_euclid(n as i64) as usize;
            let c = dx.rem_euclid(n as i64) as usize;
            grid[r * n + c] = Complex64::new(kernel.at(dx as i32, dy as i32), 0.0);
        }
    }

    let fft = FftPlanner::new().plan_fft_forward(n);
    for row in grid.chunks_exact_mut(n) {
        fft.process(row);
    }
    let mut column = vec![Complex64::new(0.0, 0.0); n];
    for c in 0..n {
        for r in 0..n {
            column[r] = grid[r * n + c];
        }
        fft.process(&mut column);
        for r in 0..n {
            grid[r * n + c] = column[r];
        }
    }

    let half = n / 2;
    let mut magnitudes = vec![0.0; n * n];
    for r in 0..n {
        for c in 0..n {
            let dst = ((r + half) % n) * n + (c + half) % n;
            magnitudes[dst] = grid[r * n + c].norm();
        }
    }
    SpectrumGrid::from_magnitudes(n, magnitudes)
}

/// Mean over `radii` of the angular coefficient of variation of the spectrum.
///
/// Lower means more isotropic. Uses [`DEFAULT_ANGLES`] samples per ring.
pub fn isotropy_score(spectrum: &SpectrumGrid, radii: &[f64]) -> Result<f64> {
    isotropy_score_with(spectrum, radii, DEFAULT_ANGLES)
}

pub fn isotropy_score_with(spectrum: &SpectrumGrid, radii: &[f64], angles: usize) -> Result<f64> {
    if radii.is_empty() {
        return Err(Error::param("radii", "at least one radius is required"));
    }
    if angles < 8 {
        return Err(Error::param(
            "angles",
            format!("need >= 8 angular samples, got {angles}"),
        ));
    }
    let mut total = 0.0;
    for &r in radii {
        if !(r > 0.0 && r < 0.5) {
            return Err(Error::param("radii", format!("radius {r} outside (0, 0.5)")));
        }
        total += ring_variation(spectrum, r, angles);
    }
    Ok(total / radii.len() as f64)
}

/// Coefficient of variation (population stddev / mean) on one ring.
pub fn ring_variation(spectrum: &SpectrumGrid, radius: f64, angles: usize) -> f64 {
    let samples: Vec<f64> = (0..angles)
        .map(|j| {
            let theta = std::f64::consts::TAU * j as f64 / angles as f64;
            spectrum.interpolate(radius * theta.cos(), radius * theta.sin())
        })
        .collect();
    let mean = samples.iter().sum::<f64>() / angles as f64;
    if mean == 0.0 {
        return 0.0;
    }
    let var = samples.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / angles as f64;
    var.sqrt() / mean
}
