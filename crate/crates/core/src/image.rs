//! Planar real-valued rasters and the replicate boundary rule.
//!
//! Samples are stored as `f32` in channel-major order: all of channel 0,
//! then all of channel 1, and so on. Values are nominally in `[0, 255]`
//! but nothing clamps them until encoding.

use crate::error::{Error, Result};

/// A planar multi-channel image with finite `f32` samples.
#[derive(Clone, Debug, PartialEq)]
pub struct ImageBuffer {
    width: usize,
    height: usize,
    channels: usize,
    data: Vec<f32>,
}

impl ImageBuffer {
    /// Wraps planar `data`, validating the shape and that every sample is finite.
    pub fn from_planar(width: usize, height: usize, channels: usize, data: Vec<f32>) -> Result<Self> {
        check_shape(width, height, channels)?;
        let expected = width * height * channels;
        if data.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                actual: data.len(),
            });
        }
        if let Some(i) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self {
            width,
            height,
            channels,
            data,
        })
    }

    /// An image with every sample set to `value`.
    pub fn filled(width: usize, height: usize, channels: usize, value: f32) -> Result<Self> {
        check_shape(width, height, channels)?;
        if !value.is_finite() {
            return Err(Error::NonFinite(0));
        }
        Ok(Self {
            width,
            height,
            channels,
            data: vec![value; width * height * channels],
        })
    }

    /// Single-channel image from a row-major closure.
    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> f32) -> Result<Self> {
        let mut data = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                data.push(f(x, y));
            }
        }
        Self::from_planar(width, height, 1, data)
    }

    /// Single-channel image from rows given top to bottom.
    pub fn from_rows<R: AsRef<[f32]>>(rows: &[R]) -> Result<Self> {
        let height = rows.len();
        let width = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(width * height);
        for row in rows {
            let row = row.as_ref();
            if row.len() != width {
                return Err(Error::LengthMismatch {
                    expected: width,
                    actual: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::from_planar(width, height, 1, data)
    }

    /// Stacks single-channel planes into one image.
    pub fn from_channels(planes: &[ImageBuffer]) -> Result<Self> {
        let first = planes.first().ok_or(Error::InvalidDimensions {
            width: 0,
            height: 0,
            channels: 0,
        })?;
        let (width, height) = first.dimensions();
        check_shape(width, height, planes.len())?;
        let mut data = Vec::with_capacity(width * height * planes.len());
        for p in planes {
            if p.channels != 1 {
                return Err(Error::ChannelMismatch {
                    expected: 1,
                    actual: p.channels,
                });
            }
            if p.dimensions() != (width, height) {
                return Err(Error::TransformShape {
                    expected: (width, height),
                    actual: p.dimensions(),
                });
            }
            data.extend_from_slice(&p.data);
        }
        Ok(Self {
            width,
            height,
            channels: planes.len(),
            data,
        })
    }

    /// Builds an image from interleaved 8-bit samples (e.g. decoded RGB bytes).
    pub fn from_interleaved_u8(width: usize, height: usize, channels: usize, bytes: &[u8]) -> Result<Self> {
        check_shape(width, height, channels)?;
        let plane = width * height;
        if bytes.len() != plane * channels {
            return Err(Error::LengthMismatch {
                expected: plane * channels,
                actual: bytes.len(),
            });
        }
        let mut data = vec![0.0f32; plane * channels];
        for (i, px) in bytes.chunks_exact(channels).enumerate() {
            for (c, &b) in px.iter().enumerate() {
                data[c * plane + i] = f32::from(b);
            }
        }
        Ok(Self {
            width,
            height,
            channels,
            data,
        })
    }

    /// Interleaves and quantizes to bytes: round half away from zero, then clamp to `[0, 255]`.
    pub fn to_interleaved_u8(&self) -> Vec<u8> {
        let plane = self.width * self.height;
        let mut out = vec![0u8; plane * self.channels];
        for c in 0..self.channels {
            for (i, &v) in self.plane(c).iter().enumerate() {
                out[i * self.channels + c] = quantize(v);
            }
        }
        out
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn dimensions(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    /// All samples, channel-major.
    pub fn data(&self) -> &[f32] {
        &self.data
    }

    pub fn into_data(self) -> Vec<f32> {
        self.data
    }

    /// Row-major samples of one channel.
    pub fn plane(&self, channel: usize) -> &[f32] {
        let n = self.width * self.height;
        &self.data[channel * n..(channel + 1) * n]
    }

    /// Copies one channel out as a single-channel image.
    pub fn channel(&self, channel: usize) -> Result<ImageBuffer> {
        self.check_channel(channel)?;
        Ok(Self {
            width: self.width,
            height: self.height,
            channels: 1,
            data: self.plane(channel).to_vec(),
        })
    }

    /// In-bounds value at `(x, y)`; panics when out of range.
    pub fn get(&self, channel: usize, x: usize, y: usize) -> f32 {
        assert!(x < self.width && y < self.height && channel < self.channels);
        self.data[(channel * self.height + y) * self.width + x]
    }

    /// Replicate-padded read: coordinates outside the raster take the
    /// nearest in-bounds pixel. Total over all integers.
    pub fn sample(&self, channel: usize, x: i64, y: i64) -> f32 {
        let cx = x.clamp(0, self.width as i64 - 1) as usize;
        let cy = y.clamp(0, self.height as i64 - 1) as usize;
        self.get(channel, cx, cy)
    }

    /// Smallest and largest sample across all channels.
    pub fn min_max(&self) -> (f32, f32) {
        self.data
            .iter()
            .fold((f32::INFINITY, f32::NEG_INFINITY), |(lo, hi), &v| {
                (lo.min(v), hi.max(v))
            })
    }

    pub(crate) fn check_channel(&self, channel: usize) -> Result<()> {
        if channel >= self.channels {
            return Err(Error::OutOfRange {
                what: "channel",
                index: channel,
                limit: self.channels,
            });
        }
        Ok(())
    }

    pub(crate) fn require_single_channel(&self) -> Result<()> {
        if self.channels != 1 {
            return Err(Error::ChannelMismatch {
                expected: 1,
                actual: self.channels,
            });
        }
        Ok(())
    }

    /// Internal constructor for buffers whose values are finite by construction.
    pub(crate) fn from_plane_unchecked(width: usize, height: usize, data: Vec<f32>) -> Self {
        debug_assert_eq!(data.len(), width * height);
        debug_assert!(data.iter().all(|v| v.is_finite()));
        Self {
            width,
            height,
            channels: 1,
            data,
        }
    }
}

fn check_shape(width: usize, height: usize, channels: usize) -> Result<()> {
    if width == 0 || height == 0 || !(channels == 1 || channels == 3) {
        return Err(Error::InvalidDimensions {
            width,
            height,
            channels,
        });
    }
    Ok(())
}

/// Encode-time quantization of one sample.
pub fn quantize(v: f32) -> u8 {
    // f32::round is half-away-from-zero
    v.round().clamp(0.0, 255.0) as u8
}

/// Applies `f` to every channel independently and restacks the results.
///
/// Each channel is handed to `f` as a single-channel image; `f` must return
/// an image of the same size.
pub fn apply_per_channel<F>(img: &ImageBuffer, f: F) -> Result<ImageBuffer>
where
    F: Fn(&ImageBuffer) -> Result<ImageBuffer> + Sync,
{
    let run = |c: usize| -> Result<ImageBuffer> {
        let out = f(&img.channel(c)?)?;
        if out.dimensions() != img.dimensions() || out.channels() != 1 {
            return Err(Error::TransformShape {
                expected: img.dimensions(),
                actual: out.dimensions(),
            });
        }
        Ok(out)
    };

    #[cfg(feature = "parallel")]
    let planes: Vec<ImageBuffer> = {
        use rayon::prelude::*;
        (0..img.channels()).into_par_iter().map(run).collect::<Result<_>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let planes: Vec<ImageBuffer> = (0..img.channels()).map(run).collect::<Result<_>>()?;

    ImageBuffer::from_channels(&planes)
}
