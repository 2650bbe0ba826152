//! Command-line front end: argument grammar, run configuration, rendering
//! and the worked-example harness.

pub mod args;
pub mod commands;
pub mod config;
pub mod output;
pub mod verify;

use clap::Parser;

use args::Cli;
use commands::{command_name, dispatch};
use config::{OutputFormat, RunConfig};

pub use commands::CmdError;
pub use verify::{verify_paper, PaperCheck, PaperCheckReport};

/// Build the effective config: saved config (if any), then explicit flags.
pub fn resolve_config(cli: &Cli) -> Result<RunConfig, String> {
    let g = &cli.global;
    let mut cfg = match &g.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(f) = g.field {
        cfg.field = f;
    }
    if let Some(k) = g.samples {
        cfg.samples = k;
    }
    if let Some(s) = g.seed {
        cfg.seed = s;
    }
    if let Some(c) = g.cap_matrix_cells {
        cfg.caps.matrix_cells = c;
    }
    if let Some(c) = g.cap_enum_spaces {
        cfg.caps.enum_spaces = c;
    }
    if let Some(c) = g.cap_sumset_size {
        cfg.caps.sumset_size = c;
    }
    if g.json {
        cfg.output = OutputFormat::Json;
    } else if g.csv {
        cfg.output = OutputFormat::Csv;
    } else if g.config.is_none() {
        cfg.output = OutputFormat::Text;
    }
    if g.threads.is_some() || g.config.is_none() {
        cfg.threads = RunConfig::resolve_threads(g.threads)?;
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Parse `argv`, run, print, and return the process exit status:
/// 0 ok, 1 check failure, 2 usage, 3 resource cap.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let cfg = match resolve_config(&cli) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    if let config::Threads::Fixed(k) = cfg.threads {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    let args: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let name = command_name(&cli.command);
    match dispatch(&cli.command, &cfg) {
        Ok(outcome) => {
            print!("{}", output::render(name, &args, &cfg, &outcome));
            if outcome.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
