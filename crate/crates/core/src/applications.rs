//! Structure/texture applications built on quarter diffusion: smoothing,
//! detail amplification and a multi-scale low-light enhancer.

use crate::diffusion::{diffuse_quarter, DiffusionConfig, DEFAULT_ITERATIONS};
use crate::error::{Error, Result};
use crate::image::{apply_per_channel, ImageBuffer};

/// Largest per-pixel brightening factor applied by [`enhance_lowlight`].
pub const MAX_LOWLIGHT_GAIN: f64 = 10.0;

/// Diffuses every channel independently.
pub fn smooth(img: &ImageBuffer, cfg: &DiffusionConfig) -> Result<ImageBuffer> {
    cfg.validate()?;
    apply_per_channel(img, |c| cfg.run(c))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnhanceConfig {
    pub iterations: usize,
    /// Texture gain; 1 leaves the image unchanged.
    pub alpha: f64,
}

impl Default for EnhanceConfig {
    fn default() -> Self {
        Self {
            iterations: DEFAULT_ITERATIONS,
            alpha: 10.0,
        }
    }
}

impl EnhanceConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha.is_finite() && self.alpha > 0.0) {
            return Err(Error::param("alpha", format!("must be > 0, got {}", self.alpha)));
        }
        if self.iterations == 0 {
            return Err(Error::param("iterations", "must be >= 1"));
        }
        Ok(())
    }
}

/// `S + alpha·(img − S)` with `S` the quarter-smoothed structure.
///
/// Evaluated as `img + (alpha − 1)·(img − S)` so that `alpha = 1` and
/// smoothing fixed points reproduce the input bit for bit.
pub fn enhance_detail(img: &ImageBuffer, cfg: &EnhanceConfig) -> Result<ImageBuffer> {
    cfg.validate()?;
    let structure = smooth(img, &DiffusionConfig::quarter(cfg.iterations))?;
    let gain = cfg.alpha - 1.0;
    let data = img
        .data()
        .iter()
        .zip(structure.data())
        .map(|(&u, &s)| {
            let u = f64::from(u);
            (u + gain * (u - f64::from(s))) as f32
        })
        .collect();
    ImageBuffer::from_planar(img.width(), img.height(), img.channels(), data)
}

#[derive(Clone, Debug, PartialEq)]
pub struct LowLightConfig {
    /// Cumulative quarter iterations per scale, strictly ascending.
    pub scales: Vec<usize>,
    /// Exponent applied to the coarsest illumination layer, in `(0, 1]`.
    pub gamma: f64,
    /// Lower bound on luminance when forming the gain ratio.
    pub epsilon: f64,
}

impl Default for LowLightConfig {
    fn default() -> Self {
        Self {
            scales: vec![1, 10, 100],
            gamma: 0.5,
            epsilon: 1.0 / 255.0,
        }
    }
}

impl LowLightConfig {
    pub fn validate(&self) -> Result<()> {
        if self.scales.is_empty() {
            return Err(Error::param("scales", "at least one scale is required"));
        }
        if self.scales.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::param(
                "scales",
                format!("must be strictly ascending, got {:?}", self.scales),
            ));
        }
        if !(self.gamma > 0.0 && self.gamma <= 1.0) {
            return Err(Error::param("gamma", format!("must be in (0, 1], got {}", self.gamma)));
        }
        if !(self.epsilon.is_finite() && self.epsilon > 0.0) {
            return Err(Error::param("epsilon", format!("must be > 0, got {}", self.epsilon)));
        }
        Ok(())
    }
}

/// Illumination split into a coarse base and per-scale detail layers.
///
/// `details[0] = L − B_0` and `details[k] = B_{k−1} − B_k`, so
/// `base + Σ details = L`.
#[derive(Clone, Debug, PartialEq)]
pub struct IlluminationLayers {
    pub luminance: ImageBuffer,
    pub base: ImageBuffer,
    pub details: Vec<ImageBuffer>,
}

/// Max-channel luminance in `[0, 1]` for an RGB image.
pub fn max_channel_luminance(img: &ImageBuffer) -> Result<ImageBuffer> {
    if img.channels() != 3 {
        return Err(Error::ChannelMismatch {
            expected: 3,
            actual: img.channels(),
        });
    }
    let (r, g, b) = (img.plane(0), img.plane(1), img.plane(2));
    let data = (0..r.len()).map(|i| r[i].max(g[i]).max(b[i]) / 255.0).collect();
    ImageBuffer::from_planar(img.width(), img.height(), 1, data)
}

pub fn decompose_illumination(img: &ImageBuffer, cfg: &LowLightConfig) -> Result<IlluminationLayers> {
    cfg.validate()?;
    let luminance = max_channel_luminance(img)?;
    let mut details = Vec::with_capacity(cfg.scales.len());
    let mut previous = luminance.clone();
    let mut done = 0;
    for &scale in &cfg.scales {
        let next = diffuse_quarter(&previous, 1.0, scale - done)?;
        let diff = previous.data().iter().zip(next.data()).map(|(a, b)| a - b).collect();
        details.push(ImageBuffer::from_planar(img.width(), img.height(), 1, diff)?);
        previous = next;
        done = scale;
    }
    Ok(IlluminationLayers {
        luminance,
        base: previous,
        details,
    })
}

/// Brightens an RGB image by gamma-lifting its coarse illumination and
/// re-adding the multi-scale details, then scaling all three channels of
/// each pixel by the same gain (capped at [`MAX_LOWLIGHT_GAIN`]).
pub fn enhance_lowlight(img: &ImageBuffer, cfg: &LowLightConfig) -> Result<ImageBuffer> {
    let layers = decompose_illumination(img, cfg)?;
    let n = img.width() * img.height();
    let lum = layers.luminance.data();
    let base = layers.base.data();
    let mut gains = vec![0.0f64; n];
    for (i, g) in gains.iter_mut().enumerate() {
        let detail: f64 = layers.details.iter().map(|d| f64::from(d.data()[i])).sum();
        // the base can dip slightly below zero after diffusion overshoot
        let lifted = f64::from(base[i]).max(0.0).powf(cfg.gamma) + detail;
        let ratio = lifted.max(cfg.epsilon) / f64::from(lum[i]).max(cfg.epsilon);
        *g = ratio.min(MAX_LOWLIGHT_GAIN);
    }
    let mut data = img.data().to_vec();
    for plane in data.chunks_exact_mut(n) {
        for (v, g) in plane.iter_mut().zip(&gains) {
            *v = (f64::from(*v) * g) as f32;
        }
    }
    ImageBuffer::from_planar(img.width(), img.height(), 3, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::image::quantize;

    fn rgb_step(w: usize, h: usize) -> ImageBuffer {
        let plane = |lo: f32, hi: f32| ImageBuffer::from_fn(w, h, |x, _| if x < w / 2 { lo } else { hi }).unwrap();
        ImageBuffer::from_channels(&[plane(10.0, 200.0), plane(40.0, 90.0), plane(250.0, 0.0)]).unwrap()
    }

    #[test]
    fn smoothing_fixed_points() {
        let flat = ImageBuffer::filled(5, 5, 3, 80.0).unwrap();
        assert_eq!(smooth(&flat, &DiffusionConfig::default()).unwrap(), flat);
        let step = rgb_step(8, 6);
        assert_eq!(smooth(&step, &DiffusionConfig::quarter(30)).unwrap(), step);
    }

    #[test]
    fn enhance_identity_cases() {
        let img = ImageBuffer::from_fn(9, 7, |x, y| ((x * 19 + y * 5) % 23) as f32 * 9.7).unwrap();
        let cfg = EnhanceConfig {
            alpha: 1.0,
            ..Default::default()
        };
        assert_eq!(enhance_detail(&img, &cfg).unwrap(), img);
        let step = rgb_step(6, 6);
        assert_eq!(enhance_detail(&step, &EnhanceConfig::default()).unwrap(), step);
    }

    #[test]
    fn enhance_single_bump() {
        let img = ImageBuffer::from_fn(9, 9, |x, y| if (x, y) == (4, 4) { 110.0 } else { 100.0 }).unwrap();
        let s = diffuse_quarter(&img, 1.0, 10).unwrap();
        let out = enhance_detail(&img, &EnhanceConfig::default()).unwrap();
        let sp = f64::from(s.get(0, 4, 4));
        let expect = sp + 10.0 * (110.0 - sp);
        assert!((f64::from(out.get(0, 4, 4)) - expect).abs() < 1e-3);
        assert!(out.get(0, 4, 4) > 110.0);
    }

    #[test]
    fn enhance_config_validation() {
        let img = ImageBuffer::filled(2, 2, 1, 1.0).unwrap();
        for cfg in [
            EnhanceConfig {
                alpha: 0.0,
                iterations: 10,
            },
            EnhanceConfig {
                alpha: 2.0,
                iterations: 0,
            },
        ] {
            assert!(enhance_detail(&img, &cfg).is_err());
        }
    }

    #[test]
    fn lowlight_constant_gray() {
        let img = ImageBuffer::filled(6, 6, 3, 64.0).unwrap();
        let out = enhance_lowlight(&img, &LowLightConfig::default()).unwrap();
        let l = 64.0f64 / 255.0;
        let expect = 64.0 * l.sqrt() / l;
        assert!((expect - 127.75).abs() < 0.01);
        for &v in out.data() {
            assert!((f64::from(v) - expect).abs() < 1e-3);
            assert_eq!(quantize(v), 128);
        }
    }

    #[test]
    fn lowlight_gamma_one_on_fixed_point() {
        let step = rgb_step(8, 8);
        let cfg = LowLightConfig {
            gamma: 1.0,
            ..Default::default()
        };
        assert_eq!(enhance_lowlight(&step, &cfg).unwrap(), step);
    }

    #[test]
    fn lowlight_black_stays_black() {
        let img = ImageBuffer::filled(4, 4, 3, 0.0).unwrap();
        let out = enhance_lowlight(&img, &LowLightConfig::default()).unwrap();
        assert!(out.data().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn lowlight_layers_telescope() {
        let img =
            ImageBuffer::from_interleaved_u8(8, 5, 3, &(0..120).map(|i| ((i * 37) % 251) as u8).collect::<Vec<_>>())
                .unwrap();
        let layers = decompose_illumination(&img, &LowLightConfig::default()).unwrap();
        assert_eq!(layers.details.len(), 3);
        for i in 0..40 {
            let sum: f64 = layers.details.iter().map(|d| f64::from(d.data()[i])).sum();
            let recon = f64::from(layers.base.data()[i]) + sum;
            assert!((recon - f64::from(layers.luminance.data()[i])).abs() < 1e-6);
        }
    }

    #[test]
    fn lowlight_validation() {
        let gray = ImageBuffer::filled(2, 2, 1, 10.0).unwrap();
        assert!(enhance_lowlight(&gray, &LowLightConfig::default()).is_err());
        let rgb = ImageBuffer::filled(2, 2, 3, 10.0).unwrap();
        for cfg in [
            LowLightConfig {
                scales: vec![],
                ..Default::default()
            },
            LowLightConfig {
                scales: vec![10, 10],
                ..Default::default()
            },
            LowLightConfig {
                gamma: 1.5,
                ..Default::default()
            },
            LowLightConfig {
                epsilon: 0.0,
                ..Default::default()
            },
        ] {
            assert!(enhance_lowlight(&rgb, &cfg).is_err());
        }
    }
}
