//! Per-iteration timing of Laplacian diffusion against both quarter routes.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::diffusion::{diffuse_laplacian, diffuse_quarter};
use crate::error::{Error, Result};
use crate::image::ImageBuffer;
use crate::kernels::{laplacian_kernel, LaplacianVariant};
use crate::quarter::quarter_response_naive;
use crate::synth::uniform_image;

pub const LAPLACIAN_NAIVE: &str = "laplacian naive";
pub const QUARTER_NAIVE: &str = "quarter naive";
pub const QUARTER_FAST: &str = "quarter fast";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchResult {
    pub name: String,
    pub median_ms_per_iter: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub size: usize,
    pub iters: usize,
    pub repeats: usize,
    pub results: Vec<BenchResult>,
}

impl BenchReport {
    pub fn median(&self, name: &str) -> Option<f64> {
        self.results
            .iter()
            .find(|r| r.name == name)
            .map(|r| r.median_ms_per_iter)
    }
}

fn quarter_naive_step(u: &ImageBuffer) -> Result<ImageBuffer> {
    let maps = quarter_response_naive(u)?;
    let data = u
        .data()
        .iter()
        .zip(maps.selected.values())
        .map(|(&v, &d)| v + d)
        .collect();
    ImageBuffer::from_planar(u.width(), u.height(), 1, data)
}

/// Median over `repeats` rounds (after one discarded warmup round) of the
/// wall time of `iters` diffusion steps, divided by `iters`.
pub fn time_per_iteration(
    input: &ImageBuffer,
    iters: usize,
    repeats: usize,
    step: impl Fn(&ImageBuffer) -> Result<ImageBuffer>,
) -> Result<f64> {
    let mut samples = Vec::with_capacity(repeats);
    for round in 0..=repeats {
        let start = Instant::now();
        let mut u = input.clone();
        for _ in 0..iters {
            u = step(&u)?;
        }
        std::hint::black_box(&u);
        if round > 0 {
            samples.push(start.elapsed().as_secs_f64() * 1e3 / iters as f64);
        }
    }
    samples.sort_by(f64::total_cmp);
    Ok(samples[samples.len() / 2])
}

pub fn run_bench(size: usize, iters: usize, repeats: usize) -> Result<BenchReport> {
    if size == 0 || iters == 0 || repeats == 0 {
        return Err(Error::param("bench", "size, iters and repeats must all be >= 1"));
    }
    let input = uniform_image(size, size, 1, 7)?;
    let iso = laplacian_kernel(LaplacianVariant::Isotropic12);
    let results = vec![
        BenchResult {
            name: LAPLACIAN_NAIVE.into(),
            median_ms_per_iter: time_per_iteration(&input, iters, repeats, |u| diffuse_laplacian(u, &iso, 1.0, 1))?,
        },
        BenchResult {
            name: QUARTER_NAIVE.into(),
            median_ms_per_iter: time_per_iteration(&input, iters, repeats, quarter_naive_step)?,
        },
        BenchResult {
            name: QUARTER_FAST.into(),
            median_ms_per_iter: time_per_iteration(&input, iters, repeats, |u| diffuse_quarter(u, 1.0, 1))?,
        },
    ];
    Ok(BenchReport {
        size,
        iters,
        repeats,
        results,
    })
}
