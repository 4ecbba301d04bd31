use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::{run_args, Cli, CliError, Outcome, SuiteArgs, EXIT_NO_CONVERGENCE, EXIT_OK, EXIT_USAGE, EXIT_VIOLATED};

/// A batch of command lines with their expected results.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default)]
    pub jobs: Vec<Job>,
}

/// One command line. Relative paths in `args` and `golden` are resolved
/// against the manifest's directory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Job {
    pub name: String,
    /// Arguments after the program name, e.g. `["eval", "--model", "m.json", ...]`.
    pub args: Vec<String>,
    #[serde(default)]
    pub expect_exit: i32,
    /// Substrings stdout must contain.
    #[serde(default)]
    pub expect_contains: Vec<String>,
    /// Exact expected stdout.
    #[serde(default)]
    pub expect_stdout: Option<String>,
    /// File whose content stdout must equal.
    #[serde(default)]
    pub golden: Option<PathBuf>,
}

const PATH_FLAGS: &[&str] = &["--model", "--left", "--right", "--relation", "--manifest", "--output"];
const LATTICE_FLAGS: &[&str] = &["--lattice", "--default-lattice"];

fn resolve_args(args: &[String], base: &Path) -> Vec<String> {
    let mut out = Vec::with_capacity(args.len() + 1);
    out.push("fuzzbis".to_string());
    let mut pending: Option<&str> = None;
    for arg in args {
        if let Some(flag) = pending.take() {
            out.push(resolve_value(flag, arg, base));
            continue;
        }
        if let Some((flag, value)) = arg.split_once('=') {
            if PATH_FLAGS.contains(&flag) || LATTICE_FLAGS.contains(&flag) {
                out.push(format!("{flag}={}", resolve_value(flag, value, base)));
                continue;
            }
        }
        if PATH_FLAGS.contains(&arg.as_str()) || LATTICE_FLAGS.contains(&arg.as_str()) {
            pending = Some(arg.as_str());
        }
        out.push(arg.clone());
    }
    out
}

fn resolve_value(flag: &str, value: &str, base: &Path) -> String {
    let p = Path::new(value);
    if p.is_absolute() {
        return value.to_string();
    }
    let joined = base.join(p);
    // Lattice flags take names as well as files.
    if LATTICE_FLAGS.contains(&flag) && !joined.exists() {
        return value.to_string();
    }
    joined.to_string_lossy().into_owned()
}

#[derive(Debug, Serialize)]
struct JobResult {
    name: String,
    exit: i32,
    expected_exit: i32,
    passed: bool,
    problems: Vec<String>,
    #[serde(skip_serializing_if = "String::is_empty")]
    stderr: String,
}

fn run_job(job: &Job, base: &Path) -> JobResult {
    let args = resolve_args(&job.args, base);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let exit = run_args(args, &mut out, &mut err);
    let stdout = String::from_utf8_lossy(&out);
    let mut problems = Vec::new();
    if exit != job.expect_exit {
        problems.push(format!("exit {exit}, expected {}", job.expect_exit));
    }
    for s in &job.expect_contains {
        if !stdout.contains(s.as_str()) {
            problems.push(format!("stdout lacks `{s}`"));
        }
    }
    if let Some(expected) = &job.expect_stdout {
        if *expected != stdout {
            problems.push(format!("stdout is `{}`, expected `{}`", stdout.trim_end(), expected.trim_end()));
        }
    }
    if let Some(g) = &job.golden {
        let path = base.join(g);
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == stdout => {}
            Ok(_) => problems.push(format!("stdout differs from {}", path.display())),
            Err(e) => problems.push(format!("{}: {e}", path.display())),
        }
    }
    JobResult {
        name: job.name.clone(),
        exit,
        expected_exit: job.expect_exit,
        passed: problems.is_empty(),
        problems,
        stderr: String::from_utf8_lossy(&err).into_owned(),
    }
}

/// Suite exit code: 0 when every job passed, otherwise the most severe
/// failing job's code (2 before 3 before 1).
fn aggregate(results: &[JobResult]) -> i32 {
    let failing: Vec<i32> = results.iter().filter(|r| !r.passed).map(|r| r.exit).collect();
    if failing.is_empty() {
        EXIT_OK
    } else if failing.contains(&EXIT_USAGE) {
        EXIT_USAGE
    } else if failing.contains(&EXIT_NO_CONVERGENCE) {
        EXIT_NO_CONVERGENCE
    } else {
        EXIT_VIOLATED
    }
}

pub(crate) fn run(_cli: &Cli, a: &SuiteArgs) -> Result<Outcome, CliError> {
    let text = std::fs::read_to_string(&a.manifest).map_err(|e| CliError::input(&a.manifest, e))?;
    let manifest: Manifest = serde_json::from_str(&text).map_err(|e| CliError::input(&a.manifest, e))?;
    let base = a.manifest.parent().map(Path::to_path_buf).unwrap_or_default();
    let results: Vec<JobResult> = std::thread::scope(|s| {
        let handles: Vec<_> = manifest.jobs.iter().map(|job| s.spawn(|| run_job(job, &base))).collect();
        handles.into_iter().map(|h| h.join().expect("job thread panicked")).collect()
    });
    let mut out = String::new();
    for r in &results {
        out.push_str(&format!("{} {} (exit {})\n", if r.passed { "PASS" } else { "FAIL" }, r.name, r.exit));
        for p in &r.problems {
            out.push_str(&format!("  {p}\n"));
        }
        if !r.passed {
            for line in r.stderr.lines() {
                out.push_str(&format!("  stderr: {line}\n"));
            }
        }
    }
    let passed = results.iter().filter(|r| r.passed).count();
    out.push_str(&format!("# {passed}/{} jobs passed\n", results.len()));
    let exit = aggregate(&results);
    let report = json!({
        "command": "suite",
        "manifest": a.manifest.display().to_string(),
        "passed": passed,
        "total": results.len(),
        "exit": exit,
        "jobs": results,
    });
    Ok(Outcome { exit, text: out, report, csv: None })
}
