#![allow(dead_code)]

use quarterlap::ImageBuffer;

/// The eight symmetries of the square, as maps on raster coordinates.
#[derive(Clone, Copy, Debug)]
pub enum Dihedral {
    Identity,
    Rot90,
    Rot180,
    Rot270,
    FlipX,
    FlipY,
    Transpose,
    AntiTranspose,
}

pub const ALL_SYMMETRIES: [Dihedral; 8] = [
    Dihedral::Identity,
    Dihedral::Rot90,
    Dihedral::Rot180,
    Dihedral::Rot270,
    Dihedral::FlipX,
    Dihedral::FlipY,
    Dihedral::Transpose,
    Dihedral::AntiTranspose,
];

impl Dihedral {
    fn swaps_axes(self) -> bool {
        matches!(self, Self::Rot90 | Self::Rot270 | Self::Transpose | Self::AntiTranspose)
    }

    /// Source pixel for destination `(x, y)` of a `w × h` source.
    fn source(self, x: usize, y: usize, w: usize, h: usize) -> (usize, usize) {
        match self {
            Self::Identity => (x, y),
            // clockwise: destination is h × w
            Self::Rot90 => (y, h - 1 - x),
            Self::Rot180 => (w - 1 - x, h - 1 - y),
            Self::Rot270 => (w - 1 - y, x),
            Self::FlipX => (w - 1 - x, y),
            Self::FlipY => (x, h - 1 - y),
            Self::Transpose => (y, x),
            Self::AntiTranspose => (w - 1 - y, h - 1 - x),
        }
    }

    pub fn apply_values(self, values: &[f32], w: usize, h: usize) -> (Vec<f32>, usize, usize) {
        let (dw, dh) = if self.swaps_axes() { (h, w) } else { (w, h) };
        let mut out = Vec::with_capacity(w * h);
        for y in 0..dh {
            for x in 0..dw {
                let (sx, sy) = self.source(x, y, w, h);
                out.push(values[sy * w + sx]);
            }
        }
        (out, dw, dh)
    }

    pub fn apply(self, img: &ImageBuffer) -> ImageBuffer {
        let (v, w, h) = self.apply_values(img.data(), img.width(), img.height());
        ImageBuffer::from_planar(w, h, 1, v).unwrap()
    }
}

/// Full-definition correlation with real coefficients, independent of the library routes.
pub fn oracle_correlate(img: &ImageBuffer, k: &quarterlap::Kernel3, x: usize, y: usize) -> f64 {
    let mut acc = 0.0;
    for dy in -1..=1 {
        for dx in -1..=1 {
            acc += k.at(dx, dy) * f64::from(img.sample(0, x as i64 + dx as i64, y as i64 + dy as i64));
        }
    }
    acc
}

/// Number of pixels in row `row` with value strictly inside `(lo, hi)`.
pub fn transition_width(img: &ImageBuffer, row: usize, lo: f32, hi: f32) -> usize {
    quarterlap::row_profile(img, row, 0)
        .unwrap()
        .iter()
        .filter(|&&v| v > lo && v < hi)
        .count()
}

pub fn max_abs_diff(a: &ImageBuffer, b: &ImageBuffer) -> f32 {
    a.data()
        .iter()
        .zip(b.data())
        .fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

/// Each pixel has a unique minimum |d_i| among the stored responses.
pub fn argmin_unique(maps: &quarterlap::QuarterMaps, i: usize) -> bool {
    let mags: Vec<f32> = maps.d.iter().map(|d| d.values()[i].abs()).collect();
    let min = mags.iter().copied().fold(f32::INFINITY, f32::min);
    mags.iter().filter(|&&m| m == min).count() == 1
}
