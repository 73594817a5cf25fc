use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use quarterlap::applications::{enhance_detail, enhance_lowlight, smooth, EnhanceConfig, LowLightConfig};
use quarterlap::bench::run_bench;
use quarterlap::diffusion::{quarter_row_profiles, DiffusionConfig};
use quarterlap::image::ImageBuffer;
use quarterlap::io::{load_image, save_image};
use quarterlap::kernels::{laplacian_kernel, LaplacianVariant};
use quarterlap::quarter::{quarter_response_fast, quarter_response_naive, QuarterMaps};
use quarterlap::spectrum::{isotropy_score, kernel_spectrum, ring_variation, DEFAULT_ANGLES, DEFAULT_RADII};
use quarterlap::synth::Pattern;

#[derive(Parser)]
#[command(name = "quarterlap", version, about = "Edge-preserving quarter Laplacian filtering")]
struct Cli {
    /// Upper bound on worker threads (default: hardware parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Edge-preserving smoothing, each channel separately.
    Smooth {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = 10)]
        iters: usize,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
    },
    /// Amplify texture relative to the smoothed structure.
    Enhance {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = 10)]
        iters: usize,
        #[arg(long, default_value_t = 10.0)]
        alpha: f64,
    },
    /// Multi-scale low-light enhancement (RGB input).
    Lowlight {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = 0.5)]
        gamma: f64,
        #[arg(long, value_delimiter = ',', default_value = "1,10,100")]
        scales: Vec<usize>,
    },
    /// Write the quarter response d_m (offset by 128) as an image.
    Response {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = Route::Fast)]
        path: Route,
        /// Also write d1..d4 next to the output.
        #[arg(long)]
        maps: bool,
    },
    /// Fourier magnitude of a Laplacian stencil plus its isotropy score.
    Spectrum {
        #[arg(long, value_enum)]
        kernel: KernelArg,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = 64)]
        n: usize,
    },
    /// Row profiles over quarter-diffusion iterations as CSV.
    Profile {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        row: usize,
        #[arg(long)]
        iters: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Time Laplacian and quarter diffusion iterations.
    Bench {
        #[arg(long, default_value_t = 1024)]
        size: usize,
        #[arg(long, default_value_t = 10)]
        iters: usize,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        #[arg(long)]
        json: bool,
    },
    /// Generate a synthetic test image.
    Gen {
        #[arg(long, value_enum)]
        pattern: PatternArg,
        #[arg(long)]
        size: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Naive,
    Fast,
}

#[derive(Clone, Copy, ValueEnum)]
enum KernelArg {
    Standard4,
    Sharp16,
    Isotropic12,
}

impl From<KernelArg> for LaplacianVariant {
    fn from(k: KernelArg) -> Self {
        match k {
            KernelArg::Standard4 => LaplacianVariant::Standard4,
            KernelArg::Sharp16 => LaplacianVariant::Sharp16,
            KernelArg::Isotropic12 => LaplacianVariant::Isotropic12,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PatternArg {
    Step,
    Corner,
    Checker,
    Noise,
}

impl From<PatternArg> for Pattern {
    fn from(p: PatternArg) -> Self {
        match p {
            PatternArg::Step => Pattern::Step,
            PatternArg::Corner => Pattern::Corner,
            PatternArg::Checker => Pattern::Checker,
            PatternArg::Noise => Pattern::Noise,
        }
    }
}

enum Failure {
    Usage(String),
    Io(String),
    Processing(String),
}

impl From<quarterlap::Error> for Failure {
    fn from(e: quarterlap::Error) -> Self {
        match e {
            quarterlap::Error::InvalidParameter { .. } => Failure::Usage(e.to_string()),
            e if e.is_io() => Failure::Io(e.to_string()),
            e => Failure::Processing(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            eprintln!("{first}");
            return ExitCode::from(1);
        }
    };

    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Processing(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(Failure::Usage("--threads must be >= 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Processing(e.to_string()))?;
    }

    match cli.command {
        Command::Smooth {
            input,
            output,
            iters,
            c,
        } => {
            let img = load_image(&input)?;
            let out = smooth(&img, &DiffusionConfig::quarter(iters).with_c(c))?;
            save_image(&out, &output)?;
        }
        Command::Enhance {
            input,
            output,
            iters,
            alpha,
        } => {
            let img = load_image(&input)?;
            let out = enhance_detail(
                &img,
                &EnhanceConfig {
                    iterations: iters,
                    alpha,
                },
            )?;
            save_image(&out, &output)?;
        }
        Command::Lowlight {
            input,
            output,
            gamma,
            scales,
        } => {
            let img = load_image(&input)?;
            let cfg = LowLightConfig {
                scales,
                gamma,
                ..Default::default()
            };
            cfg.validate()?;
            let out = enhance_lowlight(&img, &cfg)?;
            save_image(&out, &output)?;
        }
        Command::Response {
            input,
            output,
            path,
            maps,
        } => {
            let img = load_image(&input)?;
            let responses = (0..img.channels())
                .map(|c| {
                    let channel = img.channel(c)?;
                    match path {
                        Route::Naive => quarter_response_naive(&channel),
                        Route::Fast => quarter_response_fast(&channel),
                    }
                })
                .collect::<quarterlap::Result<Vec<QuarterMaps>>>()?;
            let stack = |pick: &dyn Fn(&QuarterMaps) -> ImageBuffer| {
                ImageBuffer::from_channels(&responses.iter().map(pick).collect::<Vec<_>>())
            };
            save_image(&stack(&|m| m.selected.visualize())?, &output)?;
            if maps {
                for i in 0..4 {
                    let target = sibling_path(&output, &format!("d{}", i + 1));
                    save_image(&stack(&|m| m.d[i].visualize())?, &target)?;
                }
            }
        }
        Command::Spectrum { kernel, output, n } => {
            let variant = LaplacianVariant::from(kernel);
            let spectrum = kernel_spectrum(&laplacian_kernel(variant), n)?;
            let peak = spectrum.max();
            let scaled = spectrum
                .magnitudes()
                .iter()
                .map(|m| if peak > 0.0 { (m / peak * 255.0) as f32 } else { 0.0 })
                .collect();
            save_image(&ImageBuffer::from_planar(n, n, 1, scaled)?, &output)?;
            println!("kernel {variant} n={n}");
            for r in DEFAULT_RADII {
                println!("radius {r:.2} cv {:.6}", ring_variation(&spectrum, r, DEFAULT_ANGLES));
            }
            println!("isotropy_score {:.6}", isotropy_score(&spectrum, &DEFAULT_RADII)?);
        }
        Command::Profile {
            input,
            row,
            iters,
            output,
        } => {
            let img = load_image(&input)?;
            let profiles = quarter_row_profiles(&img, row, 0, 1.0, iters)?;
            let mut csv = String::from("iteration,x,value\n");
            for (t, profile) in profiles.iter().enumerate() {
                for (x, v) in profile.iter().enumerate() {
                    let _ = writeln!(csv, "{t},{x},{v}");
                }
            }
            std::fs::write(&output, csv).map_err(|e| Failure::Io(format!("cannot write {}: {e}", output.display())))?;
        }
        Command::Bench {
            size,
            iters,
            repeats,
            json,
        } => {
            let report = run_bench(size, iters, repeats)?;
            if json {
                let text = serde_json::to_string_pretty(&report).map_err(|e| Failure::Processing(e.to_string()))?;
                println!("{text}");
            } else {
                println!("size {size}x{size}, {iters} iterations, median of {repeats} repeats");
                println!("{:<18} {:>14}", "route", "ms/iteration");
                for r in &report.results {
                    println!("{:<18} {:>14.3}", r.name, r.median_ms_per_iter);
                }
            }
        }
        Command::Gen { pattern, size, output } => {
            let img = Pattern::from(pattern).generate(size)?;
            save_image(&img, &output)?;
        }
    }
    Ok(())
}

/// `dir/out.png` → `dir/out_<suffix>.png`
fn sibling_path(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
    let name = match path.extension().and_then(|e| e.to_str()) {
        Some(ext) => format!("{stem}_{suffix}.{ext}"),
        None => format!("{stem}_{suffix}"),
    };
    path.with_file_name(name)
}
