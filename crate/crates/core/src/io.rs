//! PNG (8-bit gray/RGB), binary PGM (P5) and binary PPM (P6) codecs.

use std::fs;
use std::io::Cursor;
use std::path::Path;

use image::codecs::png::PngEncoder;
use image::codecs::pnm::{PnmEncoder, PnmSubtype, SampleEncoding};
use image::{DynamicImage, ExtendedColorType, ImageEncoder, ImageFormat};

use crate::error::{Error, Result};
use crate::image::ImageBuffer;

/// What to do with an alpha channel in a decoded PNG.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AlphaPolicy {
    /// Discard alpha and keep the color samples.
    #[default]
    Drop,
    /// Fail with [`Error::UnsupportedFormat`].
    Reject,
}

/// Container formats this crate reads and writes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RasterFormat {
    Png,
    Pgm,
    Ppm,
}

impl RasterFormat {
    /// Picks the format from a file extension (case-insensitive).
    pub fn from_path(path: &Path) -> Result<Self> {
        let ext = path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase)
            .unwrap_or_default();
        match ext.as_str() {
            "png" => Ok(Self::Png),
            "pgm" => Ok(Self::Pgm),
            "ppm" => Ok(Self::Ppm),
            _ => Err(Error::UnsupportedFormat(format!(
                "extension {:?} (expected png, pgm or ppm)",
                ext
            ))),
        }
    }

    fn sniff(bytes: &[u8]) -> Option<Self> {
        const PNG_MAGIC: &[u8] = b"\x89PNG\r\n\x1a\n";
        if bytes.starts_with(PNG_MAGIC) {
            Some(Self::Png)
        } else if bytes.starts_with(b"P5") {
            Some(Self::Pgm)
        } else if bytes.starts_with(b"P6") {
            Some(Self::Ppm)
        } else {
            None
        }
    }
}

/// Reads an image file, dropping any alpha channel.
pub fn load_image(path: impl AsRef<Path>) -> Result<ImageBuffer> {
    load_image_with(path, AlphaPolicy::Drop)
}

pub fn load_image_with(path: impl AsRef<Path>, alpha: AlphaPolicy) -> Result<ImageBuffer> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|e| Error::Unreadable {
        path: path.to_owned(),
        reason: e.to_string(),
    })?;
    decode_image(&bytes, alpha).map_err(|e| match e {
        Error::Unreadable { reason, .. } => Error::Unreadable {
            path: path.to_owned(),
            reason,
        },
        other => other,
    })
}

/// Decodes an in-memory PNG/PGM/PPM. Sample bytes map to `0.0..=255.0`.
pub fn decode_image(bytes: &[u8], alpha: AlphaPolicy) -> Result<ImageBuffer> {
    let format = RasterFormat::sniff(bytes)
        .ok_or_else(|| Error::UnsupportedFormat("not a PNG, binary PGM or binary PPM".into()))?;
    let image_format = match format {
        RasterFormat::Png => ImageFormat::Png,
        RasterFormat::Pgm | RasterFormat::Ppm => ImageFormat::Pnm,
    };
    let decoded = image::load_from_memory_with_format(bytes, image_format).map_err(|e| Error::Unreadable {
        path: Default::default(),
        reason: e.to_string(),
    })?;
    let (w, h) = (decoded.width() as usize, decoded.height() as usize);
    if w == 0 || h == 0 {
        return Err(Error::InvalidDimensions {
            width: w,
            height: h,
            channels: 0,
        });
    }
    match decoded {
        DynamicImage::ImageLuma8(buf) => ImageBuffer::from_interleaved_u8(w, h, 1, buf.as_raw()),
        DynamicImage::ImageRgb8(buf) => ImageBuffer::from_interleaved_u8(w, h, 3, buf.as_raw()),
        DynamicImage::ImageLumaA8(buf) => {
            reject_alpha(alpha)?;
            let gray: Vec<u8> = buf.as_raw().chunks_exact(2).map(|p| p[0]).collect();
            ImageBuffer::from_interleaved_u8(w, h, 1, &gray)
        }
        DynamicImage::ImageRgba8(buf) => {
            reject_alpha(alpha)?;
            let rgb: Vec<u8> = buf.as_raw().chunks_exact(4).flat_map(|p| [p[0], p[1], p[2]]).collect();
            ImageBuffer::from_interleaved_u8(w, h, 3, &rgb)
        }
        other => Err(Error::UnsupportedFormat(format!(
            "color type {:?} (only 8-bit gray and RGB)",
            other.color()
        ))),
    }
}

fn reject_alpha(alpha: AlphaPolicy) -> Result<()> {
    match alpha {
        AlphaPolicy::Drop => Ok(()),
        AlphaPolicy::Reject => Err(Error::UnsupportedFormat("image has an alpha channel".into())),
    }
}

/// Writes `img` as 8-bit PNG, PGM or PPM according to the path's extension.
pub fn save_image(img: &ImageBuffer, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let bytes = encode_image(img, RasterFormat::from_path(path)?)?;
    fs::write(path, bytes).map_err(|e| Error::Unwritable {
        path: path.to_owned(),
        reason: e.to_string(),
    })
}

/// Encodes to bytes. Gray images written as PPM are expanded to RGB;
/// RGB images cannot be written as PGM.
pub fn encode_image(img: &ImageBuffer, format: RasterFormat) -> Result<Vec<u8>> {
    let (w, h) = (img.width() as u32, img.height() as u32);
    let mut samples = img.to_interleaved_u8();
    let mut color = if img.channels() == 1 {
        ExtendedColorType::L8
    } else {
        ExtendedColorType::Rgb8
    };
    let mut out = Vec::new();
    let encode_err = |e: image::ImageError| Error::UnsupportedFormat(e.to_string());
    match format {
        RasterFormat::Png => {
            PngEncoder::new(Cursor::new(&mut out))
                .write_image(&samples, w, h, color)
                .map_err(encode_err)?;
        }
        RasterFormat::Pgm => {
            if img.channels() != 1 {
                return Err(Error::ChannelMismatch {
                    expected: 1,
                    actual: img.channels(),
                });
            }
            PnmEncoder::new(&mut out)
                .with_subtype(PnmSubtype::Graymap(SampleEncoding::Binary))
                .write_image(&samples, w, h, color)
                .map_err(encode_err)?;
        }
        RasterFormat::Ppm => {
            if img.channels() == 1 {
                samples = samples.iter().flat_map(|&v| [v, v, v]).collect();
                color = ExtendedColorType::Rgb8;
            }
            PnmEncoder::new(&mut out)
                .with_subtype(PnmSubtype::Pixmap(SampleEncoding::Binary))
                .write_image(&samples, w, h, color)
                .map_err(encode_err)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pgm_bytes_map_directly() {
        let pgm = b"P5\n2 2\n255\n\x00\xff\x80\x40";
        let img = decode_image(pgm, AlphaPolicy::Drop).unwrap();
        assert_eq!((img.width(), img.height(), img.channels()), (2, 2, 1));
        assert_eq!(img.data(), &[0.0, 255.0, 128.0, 64.0]);
    }

    #[test]
    fn single_pixel_png() {
        let img = ImageBuffer::filled(1, 1, 1, 7.0).unwrap();
        let png = encode_image(&img, RasterFormat::Png).unwrap();
        let back = decode_image(&png, AlphaPolicy::Reject).unwrap();
        assert_eq!(back.data(), &[7.0]);
    }

    #[test]
    fn truncated_png_is_unreadable() {
        let img = ImageBuffer::filled(16, 16, 3, 90.0).unwrap();
        let png = encode_image(&img, RasterFormat::Png).unwrap();
        let err = decode_image(&png[..png.len() / 2], AlphaPolicy::Drop).unwrap_err();
        assert!(matches!(err, Error::Unreadable { .. }), "{err}");
    }

    #[test]
    fn unknown_magic_and_extension() {
        assert!(matches!(
            decode_image(b"GIF89a....", AlphaPolicy::Drop),
            Err(Error::UnsupportedFormat(_))
        ));
        assert!(RasterFormat::from_path(Path::new("a.jpg")).is_err());
        assert_eq!(RasterFormat::from_path(Path::new("A.PNG")).unwrap(), RasterFormat::Png);
    }

    #[test]
    fn alpha_policy() {
        let mut out = Vec::new();
        PngEncoder::new(Cursor::new(&mut out))
            .write_image(&[10, 20, 30, 40], 1, 1, ExtendedColorType::Rgba8)
            .unwrap();
        assert!(decode_image(&out, AlphaPolicy::Reject).is_err());
        let img = decode_image(&out, AlphaPolicy::Drop).unwrap();
        assert_eq!(img.data(), &[10.0, 20.0, 30.0]);
    }

    #[test]
    fn encode_clamps_and_rounds() {
        let img = ImageBuffer::from_rows(&[[255.7, -3.0, 127.5]]).unwrap();
        let pgm = encode_image(&img, RasterFormat::Pgm).unwrap();
        assert!(pgm.ends_with(&[255, 0, 128]));
    }

    #[test]
    fn rgb_cannot_be_pgm() {
        let img = ImageBuffer::filled(2, 2, 3, 1.0).unwrap();
        assert!(encode_image(&img, RasterFormat::Pgm).is_err());
        let ppm = encode_image(&ImageBuffer::filled(2, 1, 1, 9.0).unwrap(), RasterFormat::Ppm).unwrap();
        assert!(ppm.starts_with(b"P6"));
        assert!(ppm.ends_with(&[9; 6]));
    }
}
