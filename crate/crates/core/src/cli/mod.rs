//! The `acc-kit <mode> [flags]` front door.

pub mod bench;
pub mod repl;
pub mod sim;
pub mod trace;

use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Deserialize;

use crate::imaging::{apply_effect, read_ppm, write_ppm, Color, EffectSpec, ImagingError};
use crate::lending::Registry;
use crate::rng::Lcg32;
use crate::simkernel::{Layout, SimError, WorldConfig};
use crate::undo::TextBuffer;

use bench::{run_bench, to_csv, BenchError, Suite};
use repl::{run_repl, Bank, Calc, Guess, HanoiDemo, LendDesk, ListDemo, Mode, QueueDemo, StackDemo, UndoEditor};
use sim::{load_assets, SimRun};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("io: {0}")]
    Stream(#[from] std::io::Error),
    #[error("config {path}: {reason}")]
    Config { path: String, reason: String },
    #[error("trace line {line}: {reason}")]
    Trace { line: usize, reason: String },
    #[error(transparent)]
    Imaging(#[from] ImagingError),
    #[error(transparent)]
    Sim(#[from] SimError),
    #[error(transparent)]
    Bench(#[from] BenchError),
    #[error("{0}")]
    Usage(String),
}

/// Settings for the interactive modes.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ReplConfig {
    pub queue_capacity: usize,
    pub stack_capacity: usize,
    pub undo_capacity: usize,
    pub hanoi_disks: u32,
    pub bank_strict: bool,
    pub bank_accounts: usize,
}

impl Default for ReplConfig {
    fn default() -> Self {
        Self {
            queue_capacity: 10,
            stack_capacity: 10,
            undo_capacity: 64,
            hanoi_disks: 4,
            bank_strict: false,
            bank_accounts: 3,
        }
    }
}

/// The `--config` file: a `[sim]` table of world constants and a `[repl]`
/// table. Missing keys keep their defaults.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct KitConfig {
    pub sim: WorldConfig,
    pub repl: ReplConfig,
}

impl KitConfig {
    pub fn from_toml(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_toml(&text).map_err(|e| CliError::Config {
            path: path.display().to_string(),
            reason: e.to_string(),
        })
    }
}

#[derive(Debug, Parser)]
#[command(name = "acc-kit", version, about = "Containers, algorithms, a headless game kernel and small REPLs")]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u32,
    /// TOML file with [sim] and [repl] tables.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub mode: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Four-function integer calculator.
    Calc,
    /// Guess a number from 1 to 10.
    Guess,
    /// Accounts with a FIFO transaction queue.
    Bank,
    /// Library lending desk.
    Lend,
    /// Bounded queue demo.
    Queue,
    /// Bounded stack demo.
    Stack,
    /// Linked list of student ids.
    List,
    /// Towers of Hanoi.
    Hanoi,
    /// Character editor with undo.
    Undo {
        /// Initial buffer, one line per row.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Apply a pixel effect to a PPM image.
    Filter {
        /// gray, blur, brightup:D, brightdown:D or fill:RRGGBB
        effect: String,
        input: PathBuf,
        output: PathBuf,
        /// Colour left untouched, as RRGGBB.
        #[arg(long)]
        mask: Option<String>,
    },
    /// Replay an input trace through the game kernel.
    Sim {
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        frames: u64,
        /// Directory for frame_NNNNN.ppm dumps.
        #[arg(long)]
        dump: Option<PathBuf>,
        #[arg(long)]
        mode: Option<Layout>,
        /// Directory of replacement sprite PPMs.
        #[arg(long)]
        assets: Option<PathBuf>,
    },
    /// Instrumented search, sort and container workloads as CSV.
    Bench {
        #[arg(long)]
        suite: Suite,
        #[arg(long, value_delimiter = ',', default_value = "16,64,256,1024")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 100)]
        reps: usize,
    },
}

fn parse_mask(hex: &str) -> Result<Color, CliError> {
    match format!("fill:{hex}").parse::<EffectSpec>() {
        Ok(EffectSpec::Fill(c)) => Ok(c),
        _ => Err(CliError::Usage(format!("mask must be RRGGBB, got {hex:?}"))),
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Reads, filters and writes one image.
pub fn run_filter(effect: &str, input: &Path, output: &Path, mask: Option<&str>) -> Result<(), CliError> {
    let effect: EffectSpec = effect.parse()?;
    let mask = mask.map(parse_mask).transpose()?;
    let mut image = read_ppm(input)?;
    if let Some(m) = mask {
        image = image.with_mask(m);
    }
    apply_effect(&mut image, effect);
    Ok(write_ppm(output, &image)?)
}

/// Executes one parsed command line against the given streams.
pub fn run<R: BufRead, W: Write>(cli: Cli, input: R, mut output: W) -> Result<(), CliError> {
    let config = match &cli.config {
        Some(path) => KitConfig::load(path)?,
        None => KitConfig::default(),
    };
    let mut rng = Lcg32::new(cli.seed);
    let rc = &config.repl;
    let mut mode: Box<dyn Mode> = match cli.mode {
        Command::Calc => Box::new(Calc::new()),
        Command::Guess => Box::new(Guess::new(&mut rng)),
        Command::Bank => Box::new(Bank::new(rc.bank_accounts, rc.bank_strict)),
        Command::Lend => Box::new(LendDesk::new(Registry::with_defaults(&mut rng))),
        Command::Queue => Box::new(QueueDemo::new(rc.queue_capacity)),
        Command::Stack => Box::new(StackDemo::new(rc.stack_capacity)),
        Command::List => Box::new(ListDemo::new(rng)),
        Command::Hanoi => Box::new(HanoiDemo::new(rc.hanoi_disks)),
        Command::Undo { file } => {
            let buffer = match file {
                Some(p) => TextBuffer::from_lines(&read_text(&p)?.lines().collect::<Vec<_>>()),
                None => TextBuffer::new(),
            };
            Box::new(UndoEditor::new(buffer, rc.undo_capacity))
        }
        Command::Filter {
            effect,
            input,
            output: out,
            mask,
        } => {
            run_filter(&effect, &input, &out, mask.as_deref())?;
            writeln!(output, "wrote {}", out.display())?;
            return Ok(());
        }
        Command::Sim {
            trace,
            frames,
            dump,
            mode,
            assets,
        } => {
            let mut world = config.sim.clone();
            if let Some(m) = mode {
                world.mode = m;
            }
            let events = match trace {
                Some(p) => trace::parse_trace(&read_text(&p)?, frames)?,
                None => Vec::new(),
            };
            let mut run = SimRun::new(world, cli.seed, frames, events);
            if let Some(dir) = assets {
                load_assets(&dir, &mut run.registry)?;
            }
            run.dump_dir = dump;
            let (summary, _) = run.run()?;
            writeln!(output, "{summary}")?;
            return Ok(());
        }
        Command::Bench { suite, sizes, reps } => {
            let rows = run_bench(suite, &sizes, reps, cli.seed)?;
            output.write_all(to_csv(&rows).as_bytes())?;
            return Ok(());
        }
    };
    run_repl(mode.as_mut(), input, output)?;
    Ok(())
}
