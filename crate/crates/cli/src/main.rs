use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use assertconvert_cli::{run, Format, RunConfig, DEFAULT_GLOBS};
use clap::Parser;

/// Convert JUnit assertions in Java test files into English sentences.
#[derive(Debug, Parser)]
#[command(name = "assertconvert", version)]
struct Args {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// File-name pattern for directory walks; repeatable.
    /// Defaults to *Test.java and *Tests.java.
    #[arg(long = "glob", value_name = "PATTERN")]
    globs: Vec<String>,
    /// Also emit assertions that could not be converted.
    #[arg(long)]
    include_unconvertible: bool,
    /// Extra verb list, one `verb` or `verb,past` per line.
    #[arg(long, value_name = "PATH")]
    lexicon: Option<PathBuf>,
    /// Java files or directories.
    #[arg(required = true, value_name = "PATH")]
    paths: Vec<PathBuf>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let globs = if args.globs.is_empty() { DEFAULT_GLOBS.iter().map(|g| g.to_string()).collect() } else { args.globs };
    let config = RunConfig {
        inputs: args.paths,
        format: args.format,
        globs,
        include_unconvertible: args.include_unconvertible,
        lexicon_path: args.lexicon,
    };
    let stdout = io::stdout();
    let mut out = io::LineWriter::new(stdout.lock());
    let code = run(&config, &mut out, &mut io::stderr());
    ExitCode::from(code as u8)
}
