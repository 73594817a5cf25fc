//! Plain-Rust side of the browser demo, usable and testable off the web.

use quarterlap::applications::{enhance_detail, enhance_lowlight, smooth, EnhanceConfig, LowLightConfig};
use quarterlap::diffusion::{diffuse_laplacian, diffuse_quarter, row_profile, DiffusionConfig};
use quarterlap::image::apply_per_channel;
use quarterlap::kernels::{laplacian_kernel, LaplacianVariant};
use quarterlap::quarter::quarter_laplacian;
use quarterlap::spectrum::{isotropy_score, kernel_spectrum, DEFAULT_RADII};
use quarterlap::synth::Pattern;
use quarterlap::ImageBuffer;

pub type DemoResult<T> = Result<T, String>;

fn text<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Canvas `ImageData` bytes (RGBA) to a 3-channel image; alpha is ignored.
pub fn rgba_to_image(rgba: &[u8], width: usize, height: usize) -> DemoResult<ImageBuffer> {
    if rgba.len() != width * height * 4 {
        return Err(format!(
            "expected {} RGBA bytes, got {}",
            width * height * 4,
            rgba.len()
        ));
    }
    let rgb: Vec<u8> = rgba.chunks_exact(4).flat_map(|p| [p[0], p[1], p[2]]).collect();
    ImageBuffer::from_interleaved_u8(width, height, 3, &rgb).map_err(text)
}

/// Quantized RGBA with opaque alpha; gray images are replicated to RGB.
pub fn image_to_rgba(img: &ImageBuffer) -> Vec<u8> {
    let bytes = img.to_interleaved_u8();
    match img.channels() {
        1 => bytes.iter().flat_map(|&v| [v, v, v, 255]).collect(),
        _ => bytes.chunks_exact(3).flat_map(|p| [p[0], p[1], p[2], 255]).collect(),
    }
}

pub fn pattern_rgba(name: &str, size: usize) -> DemoResult<Vec<u8>> {
    let pattern: Pattern = name.parse().map_err(text)?;
    Ok(image_to_rgba(&pattern.generate(size).map_err(text)?))
}

/// Runs one filter on canvas pixels.
///
/// `mode` is `smooth`, `enhance`, `lowlight` or `response`; `param` is the
/// step size `c`, the detail gain, the gamma, or unused respectively.
pub fn process(
    rgba: &[u8],
    width: usize,
    height: usize,
    mode: &str,
    iterations: usize,
    param: f64,
) -> DemoResult<Vec<u8>> {
    let img = rgba_to_image(rgba, width, height)?;
    let out = match mode {
        "smooth" => smooth(&img, &DiffusionConfig::quarter(iterations).with_c(param)),
        "enhance" => enhance_detail(
            &img,
            &EnhanceConfig {
                iterations: iterations.max(1),
                alpha: param,
            },
        ),
        "lowlight" => enhance_lowlight(
            &img,
            &LowLightConfig {
                gamma: param,
                ..Default::default()
            },
        ),
        "response" => apply_per_channel(&img, |c| Ok(quarter_laplacian(c)?.visualize())),
        other => return Err(format!("unknown mode {other:?}")),
    }
    .map_err(text)?;
    Ok(image_to_rgba(&out))
}

/// Log-free normalized magnitude spectrum as RGBA, `n × n`.
pub fn spectrum_rgba(kernel: &str, n: usize) -> DemoResult<Vec<u8>> {
    let variant: LaplacianVariant = kernel.parse().map_err(text)?;
    let s = kernel_spectrum(&laplacian_kernel(variant), n).map_err(text)?;
    let peak = s.max().max(f64::MIN_POSITIVE);
    Ok(s.magnitudes()
        .iter()
        .flat_map(|m| {
            let v = (m / peak * 255.0).round() as u8;
            [v, v, v, 255]
        })
        .collect())
}

pub fn isotropy(kernel: &str) -> DemoResult<f64> {
    let variant: LaplacianVariant = kernel.parse().map_err(text)?;
    let s = kernel_spectrum(&laplacian_kernel(variant), 64).map_err(text)?;
    isotropy_score(&s, &DEFAULT_RADII).map_err(text)
}

/// Row `row` of the red channel after `iterations` steps of quarter and of
/// isotropic Laplacian diffusion, concatenated: `[quarter..., laplacian...]`.
pub fn compare_profiles(
    rgba: &[u8],
    width: usize,
    height: usize,
    row: usize,
    iterations: usize,
) -> DemoResult<Vec<f32>> {
    let red = rgba_to_image(rgba, width, height)?.channel(0).map_err(text)?;
    let quarter = diffuse_quarter(&red, 1.0, iterations).map_err(text)?;
    let lap =
        diffuse_laplacian(&red, &laplacian_kernel(LaplacianVariant::Isotropic12), 1.0, iterations).map_err(text)?;
    let mut out = row_profile(&quarter, row, 0).map_err(text)?;
    out.extend(row_profile(&lap, row, 0).map_err(text)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rgba_round_trip() {
        let rgba: Vec<u8> = (0..16u8).map(|i| i * 10).collect();
        let img = rgba_to_image(&rgba, 2, 2).unwrap();
        let back = image_to_rgba(&img);
        for (a, b) in rgba.chunks(4).zip(back.chunks(4)) {
            assert_eq!(&a[..3], &b[..3]);
            assert_eq!(b[3], 255);
        }
        assert!(rgba_to_image(&rgba, 3, 2).is_err());
    }

    #[test]
    fn step_pattern_is_unchanged_by_smoothing() {
        let step = pattern_rgba("step", 16).unwrap();
        assert_eq!(process(&step, 16, 16, "smooth", 30, 1.0).unwrap(), step);
        assert_eq!(process(&step, 16, 16, "enhance", 10, 10.0).unwrap(), step);
    }

    #[test]
    fn response_of_flat_image_is_mid_gray() {
        let flat = vec![90u8; 8 * 8 * 4];
        let out = process(&flat, 8, 8, "response", 0, 0.0).unwrap();
        assert!(out.chunks(4).all(|p| p == [128, 128, 128, 255]));
    }

    #[test]
    fn lowlight_brightens_gray() {
        let gray: Vec<u8> = std::iter::repeat_n([64, 64, 64, 255], 36).flatten().collect();
        let out = process(&gray, 6, 6, "lowlight", 0, 0.5).unwrap();
        assert!(out.chunks(4).all(|p| p[..3] == [128, 128, 128]));
    }

    #[test]
    fn bad_inputs_report_errors() {
        let px = vec![0u8; 4];
        assert!(process(&px, 1, 1, "sharpen", 1, 1.0).is_err());
        assert!(process(&px, 1, 1, "smooth", 1, 3.0).is_err());
        assert!(spectrum_rgba("box", 64).is_err());
        assert!(pattern_rgba("zigzag", 8).is_err());
    }

    #[test]
    fn spectrum_and_scores() {
        let s = spectrum_rgba("isotropic12", 64).unwrap();
        assert_eq!(s.len(), 64 * 64 * 4);
        // DC at the center is zero
        assert_eq!(s[(32 * 64 + 32) * 4], 0);
        assert!(isotropy("isotropic12").unwrap() < isotropy("standard4").unwrap());
    }

    #[test]
    fn profiles_contrast_edge_handling() {
        let step = pattern_rgba("step", 32).unwrap();
        let p = compare_profiles(&step, 32, 32, 16, 10).unwrap();
        let (quarter, lap) = p.split_at(32);
        assert!(quarter.iter().all(|&v| v == 0.0 || v == 100.0));
        assert!(lap.iter().any(|&v| v > 10.0 && v < 90.0));
    }
}
