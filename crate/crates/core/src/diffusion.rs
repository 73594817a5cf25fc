//! Explicit diffusion `U ← U + c·response(U)`, iterated a fixed number of times.

use crate::error::{Error, Result};
use crate::image::ImageBuffer;
use crate::kernels::{laplacian_kernel, Kernel3, LaplacianVariant};
use crate::quarter::{correlate_plane, quarter_step_plane};

/// Default iteration count for quarter diffusion.
pub const DEFAULT_ITERATIONS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiffusionVariant {
    /// Isotropic diffusion with one of the classical stencils.
    Laplacian(LaplacianVariant),
    /// Edge-preserving diffusion driven by the quarter response.
    Quarter,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiffusionConfig {
    pub variant: DiffusionVariant,
    /// Step size in `(0, 1]`.
    pub c: f64,
    pub iterations: usize,
}

impl Default for DiffusionConfig {
    fn default() -> Self {
        Self::quarter(DEFAULT_ITERATIONS)
    }
}

impl DiffusionConfig {
    pub fn quarter(iterations: usize) -> Self {
        Self {
            variant: DiffusionVariant::Quarter,
            c: 1.0,
            iterations,
        }
    }

    pub fn laplacian(variant: LaplacianVariant, iterations: usize) -> Self {
        Self {
            variant: DiffusionVariant::Laplacian(variant),
            c: 1.0,
            iterations,
        }
    }

    pub fn with_c(mut self, c: f64) -> Self {
        self.c = c;
        self
    }

    pub fn validate(&self) -> Result<()> {
        check_c(self.c)
    }

    /// Runs this configuration on a single-channel image.
    pub fn run(&self, channel: &ImageBuffer) -> Result<ImageBuffer> {
        match self.variant {
            DiffusionVariant::Laplacian(v) => diffuse_laplacian(channel, &laplacian_kernel(v), self.c, self.iterations),
            DiffusionVariant::Quarter => diffuse_quarter(channel, self.c, self.iterations),
        }
    }
}

fn check_c(c: f64) -> Result<()> {
    if c.is_finite() && c > 0.0 && c <= 1.0 {
        Ok(())
    } else {
        Err(Error::param(
            "c",
            format!("diffusion coefficient must be in (0, 1], got {c}"),
        ))
    }
}

fn iterate(
    channel: &ImageBuffer,
    c: f64,
    iterations: usize,
    step: impl Fn(&[f32], usize, usize) -> Vec<f32>,
) -> Result<ImageBuffer> {
    channel.require_single_channel()?;
    check_c(c)?;
    let (w, h) = channel.dimensions();
    let mut u = channel.data().to_vec();
    for _ in 0..iterations {
        u = step(&u, w, h);
    }
    ImageBuffer::from_planar(w, h, 1, u)
}

/// Classical diffusion with stencil `kernel`; `iterations = 0` returns the input.
pub fn diffuse_laplacian(channel: &ImageBuffer, kernel: &Kernel3, c: f64, iterations: usize) -> Result<ImageBuffer> {
    iterate(channel, c, iterations, |u, w, h| {
        let d = correlate_plane(u, w, h, kernel);
        u.iter().zip(&d).map(|(&v, r)| (f64::from(v) + c * r) as f32).collect()
    })
}

/// Edge-preserving diffusion. Ideal steps and axis-aligned corners are exact fixed points.
pub fn diffuse_quarter(channel: &ImageBuffer, c: f64, iterations: usize) -> Result<ImageBuffer> {
    iterate(channel, c, iterations, |u, w, h| quarter_step_plane(u, w, h, c))
}

/// One row of one channel.
pub fn row_profile(img: &ImageBuffer, row: usize, channel: usize) -> Result<Vec<f32>> {
    img.check_channel(channel)?;
    if row >= img.height() {
        return Err(Error::OutOfRange {
            what: "row",
            index: row,
            limit: img.height(),
        });
    }
    let w = img.width();
    Ok(img.plane(channel)[row * w..(row + 1) * w].to_vec())
}

/// Row profiles of channel `channel` after 0, 1, ..., `iterations` quarter steps.
pub fn quarter_row_profiles(
    img: &ImageBuffer,
    row: usize,
    channel: usize,
    c: f64,
    iterations: usize,
) -> Result<Vec<Vec<f32>>> {
    let mut u = img.channel(channel)?;
    let mut out = vec![row_profile(&u, row, 0)?];
    for _ in 0..iterations {
        u = diffuse_quarter(&u, c, 1)?;
        out.push(row_profile(&u, row, 0)?);
    }
    Ok(out)
}
