//! The quarter Laplacian response.
//!
//! Every pixel has four 2×2 windows that contain it (upper-left,
//! upper-right, lower-right, lower-left). Each quarter kernel compares the
//! pixel with the mean of the other three pixels of its window:
//! `d_i = mean3_i - U`. The filter output keeps only the response of
//! smallest magnitude, `d_m`, with the lowest index winning ties.
//!
//! Two routes compute the same maps:
//!
//! * [`quarter_response_naive`] correlates with k1..k4 directly.
//! * [`quarter_response_fast`] builds one 2×2 box-sum array and reads all
//!   four windows from it, since the lower-right window of `(x, y)` is the
//!   upper-left window of `(x + 1, y + 1)`. Each response is then
//!   `(S - 4U) / 3`, which is exactly zero on flat windows.
//!
//! Both use correlation (no kernel flip) and replicate padding.

use crate::error::Result;
use crate::image::ImageBuffer;
use crate::kernels::{quarter_kernels, Kernel3};
use crate::par::for_each_row;

/// A signed response map with the dimensions of its source image.
#[derive(Clone, Debug, PartialEq)]
pub struct FeatureMap {
    width: usize,
    height: usize,
    values: Vec<f32>,
}

impl FeatureMap {
    fn from_f64(width: usize, height: usize, values: &[f64]) -> Self {
        Self {
            width,
            height,
            values: values.iter().map(|&v| v as f32).collect(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn values(&self) -> &[f32] {
        &self.values
    }

    pub fn get(&self, x: usize, y: usize) -> f32 {
        self.values[y * self.width + x]
    }

    pub fn max_abs(&self) -> f32 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Offsets every value by 128 for display. Clamping is left to the encoder.
    pub fn visualize(&self) -> ImageBuffer {
        ImageBuffer::from_plane_unchecked(self.width, self.height, self.values.iter().map(|v| v + 128.0).collect())
    }

    /// The raw values as a single-channel image.
    pub fn to_image(&self) -> ImageBuffer {
        ImageBuffer::from_plane_unchecked(self.width, self.height, self.values.clone())
    }
}

/// The four quarter responses, the per-pixel winner index and its value.
#[derive(Clone, Debug, PartialEq)]
pub struct QuarterMaps {
    /// d1..d4 in kernel order.
    pub d: [FeatureMap; 4],
    /// Winning index per pixel, 1-based.
    pub selection: Vec<u8>,
    /// `d[selection - 1]` at every pixel.
    pub selected: FeatureMap,
}

impl QuarterMaps {
    pub fn width(&self) -> usize {
        self.selected.width
    }

    pub fn height(&self) -> usize {
        self.selected.height
    }

    pub fn selection_at(&self, x: usize, y: usize) -> u8 {
        self.selection[y * self.width() + x]
    }

    fn assemble(width: usize, height: usize, d: [Vec<f64>; 4]) -> Self {
        let n = width * height;
        let mut selection = vec![1u8; n];
        let mut selected = vec![0.0f64; n];
        for i in 0..n {
            let (m, v) = select_min([d[0][i], d[1][i], d[2][i], d[3][i]]);
            selection[i] = m;
            selected[i] = v;
        }
        Self {
            d: d.map(|map| FeatureMap::from_f64(width, height, &map)),
            selection,
            selected: FeatureMap::from_f64(width, height, &selected),
        }
    }
}

/// Smallest-magnitude entry and its 1-based index; earlier entries win ties.
#[inline]
fn select_min(d: [f64; 4]) -> (u8, f64) {
    let mut m = 1u8;
    let mut best = d[0];
    for (i, &v) in d.iter().enumerate().skip(1) {
        if v.abs() < best.abs() {
            best = v;
            m = i as u8 + 1;
        }
    }
    (m, best)
}

/// Replicate-padded 2×2 window sums, `(width + 1) × (height + 1)` entries.
///
/// `S(x, y)` sums the block whose bottom-right pixel is `(x, y)`, so for
/// pixel `(x, y)` the upper-left, upper-right, lower-right and lower-left
/// windows are `S(x, y)`, `S(x+1, y)`, `S(x+1, y+1)` and `S(x, y+1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoxSumMap {
    width: usize,
    height: usize,
    sums: Vec<f64>,
}

impl BoxSumMap {
    /// Width of the source image; rows hold `width + 1` entries.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// `S(x, y)` for `x <= width`, `y <= height`.
    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.sums[y * (self.width + 1) + x]
    }

    pub fn sums(&self) -> &[f64] {
        &self.sums
    }
}

/// Fills `out` (`width + 1` entries) with row `y` of the box-sum map.
#[inline]
fn box_row(plane: &[f32], width: usize, height: usize, y: usize, out: &mut [f64]) {
    let above = &plane[y.saturating_sub(1).min(height - 1) * width..][..width];
    let below = &plane[y.min(height - 1) * width..][..width];
    let mut prev = f64::from(above[0]) + f64::from(below[0]);
    out[0] = prev + prev;
    for x in 1..width {
        let cur = f64::from(above[x]) + f64::from(below[x]);
        out[x] = prev + cur;
        prev = cur;
    }
    out[width] = prev + prev;
}

pub(crate) fn box_sums(plane: &[f32], width: usize, height: usize) -> BoxSumMap {
    let stride = width + 1;
    let mut sums = vec![0.0f64; stride * (height + 1)];
    for_each_row(&mut sums, stride, |y, row| box_row(plane, width, height, y, row));
    BoxSumMap { width, height, sums }
}

/// Rows per independently processed band in [`quarter_map_plane`].
const BAND_ROWS: usize = 32;

/// Runs the box-sum route and maps each pixel's `(U, d_m)` through `emit`.
///
/// Only two box-sum rows are live at a time; every band of output rows
/// rebuilds its own first row, so bands are independent.
#[inline]
pub(crate) fn quarter_map_plane<T, F>(plane: &[f32], width: usize, height: usize, emit: F) -> Vec<T>
where
    T: Copy + Default + Send,
    F: Fn(f32, f64) -> T + Sync + Send,
{
    let stride = width + 1;
    let mut out = vec![T::default(); width * height];
    for_each_row(&mut out, width * BAND_ROWS, |band, rows| {
        let y0 = band * BAND_ROWS;
        let mut top = vec![0.0f64; stride];
        let mut bottom = vec![0.0f64; stride];
        box_row(plane, width, height, y0, &mut top);
        for (dy, row) in rows.chunks_exact_mut(width).enumerate() {
            let y = y0 + dy;
            box_row(plane, width, height, y + 1, &mut bottom);
            let src = &plane[y * width..][..width];
            for (x, o) in row.iter_mut().enumerate() {
                let u4 = 4.0 * f64::from(src[x]);
                let (_, best) = select_min([top[x] - u4, top[x + 1] - u4, bottom[x + 1] - u4, bottom[x] - u4]);
                *o = emit(src[x], best / 3.0);
            }
            std::mem::swap(&mut top, &mut bottom);
        }
    });
    out
}

/// Correlation of a plane with a rational 3×3 kernel, replicate padding.
///
/// Integer numerators are accumulated in `f64` and divided by the
/// denominator once per pixel.
pub(crate) fn correlate_plane(plane: &[f32], width: usize, height: usize, kernel: &Kernel3) -> Vec<f64> {
    let num = kernel.numerators().map(|row| row.map(f64::from));
    let den = f64::from(kernel.denominator());
    let mut out = vec![0.0f64; width * height];
    for_each_row(&mut out, width, |y, row| {
        let rows = [
            &plane[y.saturating_sub(1) * width..][..width],
            &plane[y * width..][..width],
            &plane[(y + 1).min(height - 1) * width..][..width],
        ];
        for (x, o) in row.iter_mut().enumerate() {
            let cols = [x.saturating_sub(1), x, (x + 1).min(width - 1)];
            let mut acc = 0.0;
            for (src, w) in rows.iter().zip(&num) {
                for (&c, &k) in cols.iter().zip(w) {
                    acc += k * f64::from(src[c]);
                }
            }
            *o = acc / den;
        }
    });
    out
}

/// Quarter response of a plane by the box-sum route, selected value only.
pub(crate) fn quarter_selected_plane(plane: &[f32], width: usize, height: usize) -> Vec<f64> {
    quarter_map_plane(plane, width, height, |_, d| d)
}

/// One diffusion step `U + c·d_m` by the box-sum route.
pub(crate) fn quarter_step_plane(plane: &[f32], width: usize, height: usize, c: f64) -> Vec<f32> {
    quarter_map_plane(plane, width, height, |u, d| (f64::from(u) + c * d) as f32)
}

/// `Σ k(dx, dy) · sample(x + dx, y + dy)` over a single-channel image.
pub fn correlate3(channel: &ImageBuffer, kernel: &Kernel3) -> Result<FeatureMap> {
    channel.require_single_channel()?;
    let (w, h) = channel.dimensions();
    Ok(FeatureMap::from_f64(
        w,
        h,
        &correlate_plane(channel.data(), w, h, kernel),
    ))
}

/// Reference route: four full correlations, then per-pixel selection.
pub fn quarter_response_naive(channel: &ImageBuffer) -> Result<QuarterMaps> {
    channel.require_single_channel()?;
    let (w, h) = channel.dimensions();
    let d = quarter_kernels().map(|k| correlate_plane(channel.data(), w, h, &k));
    Ok(QuarterMaps::assemble(w, h, d))
}

pub fn box_sum_2x2(channel: &ImageBuffer) -> Result<BoxSumMap> {
    channel.require_single_channel()?;
    let (w, h) = channel.dimensions();
    Ok(box_sums(channel.data(), w, h))
}

/// Box-filter route: one 2×2 sum array serves all four windows of every pixel.
pub fn quarter_response_fast(channel: &ImageBuffer) -> Result<QuarterMaps> {
    channel.require_single_channel()?;
    let (w, h) = channel.dimensions();
    let plane = channel.data();
    let s = box_sums(plane, w, h);
    let mut d: [Vec<f64>; 4] = std::array::from_fn(|_| vec![0.0; w * h]);
    for y in 0..h {
        for x in 0..w {
            let i = y * w + x;
            let u4 = 4.0 * f64::from(plane[i]);
            d[0][i] = (s.get(x, y) - u4) / 3.0;
            d[1][i] = (s.get(x + 1, y) - u4) / 3.0;
            d[2][i] = (s.get(x + 1, y + 1) - u4) / 3.0;
            d[3][i] = (s.get(x, y + 1) - u4) / 3.0;
        }
    }
    Ok(QuarterMaps::assemble(w, h, d))
}

/// The filter output `d_m` only, by the box-sum route.
pub fn quarter_laplacian(channel: &ImageBuffer) -> Result<FeatureMap> {
    channel.require_single_channel()?;
    let (w, h) = channel.dimensions();
    Ok(FeatureMap::from_f64(
        w,
        h,
        &quarter_selected_plane(channel.data(), w, h),
    ))
}
