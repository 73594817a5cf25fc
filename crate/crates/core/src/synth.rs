//! Deterministic synthetic test images.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::image::ImageBuffer;

/// Seed used by [`Pattern::Noise`].
pub const NOISE_SEED: u64 = 0x5eed_0001;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// Left half 0, right half 100.
    Step,
    /// Top-left quadrant 100, the rest 0.
    Corner,
    /// Coarse 4×4 block checkerboard (60 / 180) with a ±20 one-pixel checker texture.
    Checker,
    /// Flat 100 with uniform noise in ±20.
    Noise,
}

impl Pattern {
    pub const ALL: [Pattern; 4] = [Self::Step, Self::Corner, Self::Checker, Self::Noise];

    pub fn name(self) -> &'static str {
        match self {
            Self::Step => "step",
            Self::Corner => "corner",
            Self::Checker => "checker",
            Self::Noise => "noise",
        }
    }

    /// A `size × size` single-channel image.
    pub fn generate(self, size: usize) -> Result<ImageBuffer> {
        if size == 0 {
            return Err(Error::param("size", "must be >= 1"));
        }
        let half = size / 2;
        match self {
            Self::Step => step_image(size, size, 0.0, 100.0),
            Self::Corner => ImageBuffer::from_fn(size, size, |x, y| if x < half && y < half { 100.0 } else { 0.0 }),
            Self::Checker => {
                let cell = (size / 4).max(1);
                ImageBuffer::from_fn(size, size, |x, y| {
                    let block = if (x / cell + y / cell).is_multiple_of(2) {
                        60.0
                    } else {
                        180.0
                    };
                    let texture = if (x + y) % 2 == 0 { 20.0 } else { -20.0 };
                    block + texture
                })
            }
            Self::Noise => noise_image(size, size, 100.0, 20.0, NOISE_SEED),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::param("pattern", format!("unknown pattern {s:?}")))
    }
}

/// Vertical step edge: columns left of `width / 2` hold `low`, the rest `high`.
pub fn step_image(width: usize, height: usize, low: f32, high: f32) -> Result<ImageBuffer> {
    ImageBuffer::from_fn(width, height, |x, _| if x < width / 2 { low } else { high })
}

/// `mean` plus integer-valued uniform noise in `[-amplitude, amplitude]`.
pub fn noise_image(width: usize, height: usize, mean: f32, amplitude: f32, seed: u64) -> Result<ImageBuffer> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = amplitude.round() as i32;
    ImageBuffer::from_fn(width, height, |_, _| mean + rng.random_range(-a..=a) as f32)
}

/// Real-valued samples uniform in `[0, 255)`.
pub fn uniform_image(width: usize, height: usize, channels: usize, seed: u64) -> Result<ImageBuffer> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..width * height * channels)
        .map(|_| rng.random_range(0.0f32..255.0))
        .collect();
    ImageBuffer::from_planar(width, height, channels, data)
}
