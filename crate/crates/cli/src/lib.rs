//! Batch driver behind the `assertconvert` binary.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use assertconvert::{ConvertedAssertion, Converter, Status, VerbLexicon};
use globset::{Glob, GlobSet, GlobSetBuilder};
use serde::Serialize;
use walkdir::WalkDir;

pub const DEFAULT_GLOBS: &[&str] = &["*Test.java", "*Tests.java"];

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNREADABLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Jsonl,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub inputs: Vec<PathBuf>,
    pub format: Format,
    /// File-name patterns used when walking directories. Files named
    /// directly on the command line are always processed.
    pub globs: Vec<String>,
    pub include_unconvertible: bool,
    pub lexicon_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(inputs: Vec<PathBuf>) -> Self {
        RunConfig {
            inputs,
            format: Format::Text,
            globs: DEFAULT_GLOBS.iter().map(|g| g.to_string()).collect(),
            include_unconvertible: false,
            lexicon_path: None,
        }
    }
}

/// One line of JSON-lines output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub file: String,
    pub line: usize,
    pub assertion: String,
    pub condition: String,
    pub english: String,
    pub status: Status,
    pub rule_trace: Vec<String>,
}

impl OutputRecord {
    pub fn new(file: &Path, converted: ConvertedAssertion) -> Self {
        OutputRecord {
            file: file.display().to_string(),
            line: converted.line,
            assertion: converted.raw_text,
            condition: converted.condition.map_or_else(|| "unknown".to_string(), |c| c.name().to_string()),
            english: converted.sentence,
            status: converted.status,
            rule_trace: converted.rule_trace,
        }
    }
}

fn build_globs(patterns: &[String]) -> Result<GlobSet, globset::Error> {
    let mut builder = GlobSetBuilder::new();
    for pattern in patterns {
        builder.add(Glob::new(pattern)?);
    }
    builder.build()
}

/// Files to process, sorted and deduplicated, plus inputs that do not
/// exist.
pub fn discover(inputs: &[PathBuf], globs: &GlobSet) -> (Vec<PathBuf>, Vec<(PathBuf, String)>) {
    let mut files = Vec::new();
    let mut missing = Vec::new();
    for input in inputs {
        if input.is_file() {
            files.push(input.clone());
        } else if input.is_dir() {
            for entry in WalkDir::new(input).follow_links(true) {
                match entry {
                    Ok(e) if e.file_type().is_file() && globs.is_match(e.file_name()) => {
                        files.push(e.into_path());
                    }
                    Ok(_) => {}
                    Err(err) => {
                        let path = err.path().map_or_else(|| input.clone(), Path::to_path_buf);
                        missing.push((path, err.to_string()));
                    }
                }
            }
        } else {
            missing.push((input.clone(), "no such file or directory".into()));
        }
    }
    files.sort();
    files.dedup();
    (files, missing)
}

fn load_lexicon(path: Option<&Path>) -> Result<VerbLexicon, String> {
    let mut lexicon = VerbLexicon::builtin().clone();
    if let Some(path) = path {
        let extra = VerbLexicon::load(path).map_err(|e| e.to_string())?;
        lexicon.merge(&extra);
    }
    Ok(lexicon)
}

fn write_record(
    out: &mut dyn Write,
    format: Format,
    record: &OutputRecord,
    diagnostic: Option<&str>,
) -> io::Result<()> {
    match format {
        Format::Jsonl => {
            serde_json::to_writer(&mut *out, record).map_err(io::Error::other)?;
            writeln!(out)
        }
        Format::Text => match record.status {
            Status::Converted => writeln!(out, "{}:{}\t{}.", record.file, record.line, record.english),
            Status::Unconvertible => writeln!(
                out,
                "{}:{}\t(unconvertible: {})",
                record.file,
                record.line,
                diagnostic.unwrap_or("unknown reason")
            ),
        },
    }
}

/// Runs the whole batch, writing records to `out` and problems to `err`.
/// Returns the process exit code.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let globs = match build_globs(&config.globs) {
        Ok(g) => g,
        Err(e) => {
            let _ = writeln!(err, "assertconvert: invalid glob: {e}");
            return EXIT_USAGE;
        }
    };
    let lexicon = match load_lexicon(config.lexicon_path.as_deref()) {
        Ok(l) => l,
        Err(e) => {
            let _ = writeln!(err, "assertconvert: {e}");
            return EXIT_USAGE;
        }
    };
    let converter = Converter::new(&lexicon);
    let (files, missing) = discover(&config.inputs, &globs);
    let mut code = EXIT_OK;
    for (path, reason) in &missing {
        let _ = writeln!(err, "assertconvert: {}: {reason}", path.display());
        code = EXIT_UNREADABLE;
    }
    for path in files {
        let source = match fs::read_to_string(&path) {
            Ok(s) => s,
            Err(e) => {
                let _ = writeln!(err, "assertconvert: {}: {e}", path.display());
                code = EXIT_UNREADABLE;
                continue;
            }
        };
        for converted in converter.convert_source(&source, Some(&path)) {
            if converted.status == Status::Unconvertible && !config.include_unconvertible {
                continue;
            }
            let diagnostic = converted.diagnostic.clone();
            let record = OutputRecord::new(&path, converted);
            if let Err(e) = write_record(out, config.format, &record, diagnostic.as_deref()) {
                let _ = writeln!(err, "assertconvert: write failed: {e}");
                return EXIT_UNREADABLE;
            }
        }
    }
    code
}
