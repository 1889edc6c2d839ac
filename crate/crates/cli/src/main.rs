use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use homsim_core::basis_conversion::{hg_to_lg_coeffs, lg_to_hg_coeffs};
use homsim_core::biphoton_state::{symmetry_classify, Normalization, TwoPhotonState};
use homsim_core::experiment::{
    linear_delays, prepare_state, render_mode, scan_dip, scan_grid, write_grid, write_grid_csv,
    write_trace, write_trace_csv, Interference, RunConfig,
};
use homsim_core::{Basis, SpatialMode};

/// Two-photon interference of entangled LG/HG spatial modes at a beamsplitter.
#[derive(Parser)]
#[command(name = "homsim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand one mode in the other basis.
    Convert {
        /// Mode label, e.g. `LG(0,2)` or `HG(1,1)`.
        mode: SpatialMode,
        /// Emit JSON instead of one line per term.
        #[arg(long)]
        json: bool,
    },
    /// Coincidence counts over all ordered detection-mode pairs.
    Grid {
        #[command(flatten)]
        source: ConfigSource,
        /// Evaluate the distinguishable-photon baseline instead.
        #[arg(long)]
        distinguishable: bool,
        /// Replace expected counts with seeded Poisson draws.
        #[arg(long, value_name = "SEED")]
        poisson_seed: Option<u64>,
        /// Output CSV path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coincidence counts versus path delay for one detection pair.
    Dip {
        #[command(flatten)]
        source: ConfigSource,
        #[arg(long = "modeC", value_name = "MODE")]
        mode_c: SpatialMode,
        #[arg(long = "modeD", value_name = "MODE")]
        mode_d: SpatialMode,
        /// Scan ±SPAN coherence times, replacing any delays in the config.
        #[arg(long, value_name = "SPAN")]
        span: Option<f64>,
        /// Number of delay points used with `--span`.
        #[arg(long, default_value_t = 101)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the transverse intensity of a mode as a binary PGM image.
    Render {
        mode: SpatialMode,
        #[arg(long, default_value_t = 256)]
        size: usize,
        /// Half-width of the field of view in beam waists.
        #[arg(long, default_value_t = 3.0)]
        extent: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the state reaching the beamsplitter as JSON.
    State {
        #[command(flatten)]
        source: ConfigSource,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report the exchange symmetry of a state file.
    Classify {
        #[arg(long)]
        state: PathBuf,
        /// Accept and rescale a state that is not normalized.
        #[arg(long)]
        renormalize: bool,
        /// Convert to this basis before classifying.
        #[arg(long)]
        basis: Option<Basis>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ConfigSource {
    /// JSON run configuration.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Built-in configuration (`fig2` or `fig3`).
    #[arg(long)]
    preset: Option<String>,
}

impl ConfigSource {
    fn load(&self) -> anyhow::Result<RunConfig> {
        match (&self.config, &self.preset) {
            (Some(path), _) => RunConfig::from_file(path)
                .with_context(|| format!("loading config {}", path.display())),
            (None, Some(name)) => Ok(RunConfig::preset(name)?),
            (None, None) => unreachable!("clap enforces one source"),
        }
    }
}

#[derive(Serialize)]
struct ConvertOutput {
    input_mode: SpatialMode,
    basis: Basis,
    terms: Vec<ConvertTerm>,
}

#[derive(Serialize)]
struct ConvertTerm {
    mode: SpatialMode,
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct ClassifyOutput {
    basis: Basis,
    symmetry: String,
    deviation: f64,
    norm_sqr: f64,
}

fn convert(mode: SpatialMode) -> ConvertOutput {
    let (basis, terms): (Basis, Vec<ConvertTerm>) = match mode {
        SpatialMode::Lg(lg) => (
            Basis::Hg,
            lg_to_hg_coeffs(lg)
                .into_iter()
                .map(|(h, c)| ConvertTerm {
                    mode: h.into(),
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        ),
        SpatialMode::Hg(hg) => (
            Basis::Lg,
            hg_to_lg_coeffs(hg)
                .into_iter()
                .map(|(l, c)| ConvertTerm {
                    mode: l.into(),
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        ),
    };
    ConvertOutput {
        input_mode: mode,
        basis,
        terms,
    }
}

/// Drops rounding residue below the printed precision so it shows as `0`, not `-0`.
fn tidy(x: f64) -> f64 {
    if x.abs() < 5e-13 {
        0.0
    } else {
        x
    }
}

fn to_stdout<E>(write: impl FnOnce(&mut dyn Write) -> Result<(), E>) -> anyhow::Result<()>
where
    E: std::error::Error + Send + Sync + 'static,
{
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    write(&mut lock).context("writing to stdout")
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Convert { mode, json } => {
            let out = convert(mode);
            if json {
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                for t in &out.terms {
                    println!("{}: {:.12}{:+.12}i", t.mode, tidy(t.re), tidy(t.im));
                }
            }
        }
        Command::Grid {
            source,
            distinguishable,
            poisson_seed,
            out,
        } => {
            let mut cfg = source.load()?;
            if distinguishable {
                cfg.interference = Interference::Distinguishable;
            } else if cfg.interference == Interference::DelayScan {
                bail!("config selects delay_scan; use `homsim dip` for delay scans");
            }
            let mut grid = scan_grid(&cfg)?;
            if let Some(seed) = poisson_seed {
                grid = grid.with_shot_noise(seed);
            }
            match out {
                Some(path) => write_grid_csv(&grid, &path)?,
                None => to_stdout(|w| write_grid(&grid, w))?,
            }
        }
        Command::Dip {
            source,
            mode_c,
            mode_d,
            span,
            steps,
            out,
        } => {
            let mut cfg = source.load()?;
            if let Some(span) = span {
                if !(span > 0.0 && span.is_finite()) {
                    bail!("--span must be positive, got {span}");
                }
                cfg.delays = linear_delays(span * cfg.coherence_time, steps);
            }
            cfg.interference = Interference::DelayScan;
            let trace = scan_dip(&cfg, mode_c, mode_d)?;
            match out {
                Some(path) => write_trace_csv(&trace, &path)?,
                None => to_stdout(|w| write_trace(&trace, w))?,
            }
        }
        Command::Render {
            mode,
            size,
            extent,
            out,
        } => {
            render_mode(mode, size, extent)?.write_pgm(&out)?;
        }
        Command::State { source, out } => {
            let state = prepare_state(&source.load()?)?;
            match out {
                Some(path) => state.write_file(&path)?,
                None => println!("{}", state.to_json()?),
            }
        }
        Command::Classify {
            state,
            renormalize,
            basis,
        } => {
            let normalization = if renormalize {
                Normalization::Renormalize
            } else {
                Normalization::Require
            };
            let mut st = TwoPhotonState::read_file(&state, normalization)?;
            if let Some(basis) = basis {
                st = homsim_core::biphoton_state::to_basis(&st, basis);
            }
            let class = symmetry_classify(&st);
            let out = ClassifyOutput {
                basis: st.basis(),
                symmetry: class.value.to_string(),
                deviation: class.deviation,
                norm_sqr: st.norm_sqr(),
            };
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
    }
    Ok(())
}

fn main() {
    if let Err(err) = run(Cli::parse()) {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}
