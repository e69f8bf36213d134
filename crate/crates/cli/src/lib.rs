//! Verification campaigns behind the `gordon-verify` binary. Each subcommand
//! runs exact comparisons and produces a [`Report`]; JSON is canonical and
//! CSV projects the tables.

pub mod args;
pub mod campaigns;
pub mod report;

use std::ffi::OsString;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Command};
pub use report::{CheckClass, Format, Mismatch, Report, Status, Table, SCHEMA};

/// Environment variable read for the worker count when `--jobs` is absent.
pub const JOBS_ENV: &str = "GORDON_JOBS";

#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<Report>,
}

impl Outcome {
    fn usage(message: impl std::fmt::Display) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {message}\n"), report: None }
    }
}

fn worker_count(flag: Option<usize>) -> Result<usize, String> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var(JOBS_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| format!("{JOBS_ENV}={v:?} is not a worker count")),
        Err(_) => Ok(0),
    }
}

/// Parses `argv` (program name first), runs the campaign and renders the
/// report. Exit code 0 when every check passes, 1 on a mismatch or finding,
/// 2 on a usage error.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Outcome { code: 0, stdout: e.to_string(), stderr: String::new(), report: None };
        }
        Err(e) => {
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("invalid arguments");
            return Outcome::usage(line.trim_start_matches("error: "));
        }
    };
    let jobs = match worker_count(cli.jobs) {
        Ok(n) => n,
        Err(msg) => return Outcome::usage(msg),
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool,
        Err(e) => return Outcome::usage(e),
    };

    let start = Instant::now();
    let campaign = match pool.install(|| campaigns::execute(&cli.command)) {
        Ok(c) => c,
        Err(e) => return Outcome::usage(e),
    };
    let args = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let report = campaign.finish(cli.command.name(), args, start.elapsed().as_millis() as u64);
    Outcome {
        code: report.status.exit_code(),
        stdout: report.render(cli.format),
        stderr: String::new(),
        report: Some(report),
    }
}
