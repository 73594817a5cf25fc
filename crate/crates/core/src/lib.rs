//! Edge-preserving image filtering with the quarter-window Laplacian.
//!
//! A pixel's response is the smallest-magnitude difference between the
//! pixel and the mean of the other three pixels in one of its four 2×2
//! windows. Iterating `U ← U + c·response` smooths texture while leaving
//! axis-aligned edges and corners untouched.
//!
//! ```
//! use quarterlap::{diffuse_quarter, synth::Pattern};
//!
//! let step = Pattern::Step.generate(16).unwrap();
//! assert_eq!(diffuse_quarter(&step, 1.0, 100).unwrap(), step);
//! ```

pub mod applications;
pub mod bench;
pub mod diffusion;
pub mod error;
pub mod image;
#[cfg(feature = "io")]
pub mod io;
pub mod kernels;
mod par;
pub mod quarter;
pub mod spectrum;
pub mod synth;

pub use applications::{enhance_detail, enhance_lowlight, smooth, EnhanceConfig, LowLightConfig};
pub use diffusion::{diffuse_laplacian, diffuse_quarter, row_profile, DiffusionConfig, DiffusionVariant};
pub use error::{Error, Result};
pub use image::{apply_per_channel, ImageBuffer};
#[cfg(feature = "io")]
pub use io::{load_image, save_image};
pub use kernels::{laplacian_kernel, quarter_kernels, Kernel3, LaplacianVariant};
pub use quarter::{
    box_sum_2x2, correlate3, quarter_laplacian, quarter_response_fast, quarter_response_naive, BoxSumMap, FeatureMap,
    QuarterMaps,
};
pub use spectrum::{isotropy_score, kernel_spectrum, SpectrumGrid};
