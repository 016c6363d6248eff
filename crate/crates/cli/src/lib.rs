//! Command-line front end: knot files in, reports out.

pub mod args;
pub mod commands;
pub mod envelope;
pub mod schema;

use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Format};
use envelope::{inputs_hash, ErrorPayload, ReportEnvelope};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INDETERMINATE: i32 = 3;

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the tool on `argv`, where `argv[0]` is the program name.
pub fn run<I, S>(argv: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let start = Instant::now();
    let args = argv.get(1..).unwrap_or_default().to_vec();
    let wants_json = args.windows(2).any(|w| w[0] == "--format" && w[1] == "json")
        || args.iter().any(|a| a == "--format=json");

    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Output {
                code: EXIT_OK,
                stdout: e.to_string(),
                stderr: String::new(),
            };
        }
        Err(e) => {
            let err = ErrorPayload::new("usage", e.to_string().trim_end().to_string());
            return finish(wants_json, &args, &[], Err(err), start);
        }
    };

    let json = cli.format == Format::Json;
    let (knot, files) = match commands::knot_path(&cli.command) {
        Some(path) => match commands::load_knot(path) {
            Ok((k, bytes)) => (Some(k), vec![bytes]),
            Err(e) => return finish(json, &args, &[], Err(e), start),
        },
        None => (None, vec![]),
    };
    let outcome = commands::execute(&cli.command, knot.as_ref());
    finish(json, &args, &files, outcome, start)
}

fn finish(
    json: bool,
    args: &[String],
    files: &[Vec<u8>],
    outcome: commands::CmdResult,
    start: Instant,
) -> Output {
    let code = match &outcome {
        Ok(o) if o.indeterminate => EXIT_INDETERMINATE,
        Ok(_) => EXIT_OK,
        Err(_) => EXIT_INPUT,
    };
    if !json {
        return match outcome {
            Ok(o) => Output {
                code,
                stdout: o.text,
                stderr: String::new(),
            },
            Err(e) => Output {
                code,
                stdout: String::new(),
                stderr: format!("error ({}): {}\n", e.kind, e.message),
            },
        };
    }
    let (result, error) = match outcome {
        Ok(o) => (Some(o.payload), None),
        Err(e) => (None, Some(e)),
    };
    let env = ReportEnvelope {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        command: args.to_vec(),
        inputs_sha256: inputs_hash(args, files),
        exit_code: code,
        result,
        error,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    Output {
        code,
        stdout: serde_json::to_string_pretty(&env).expect("envelope serializes") + "\n",
        stderr: String::new(),
    }
}
