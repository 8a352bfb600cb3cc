#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], exit: i32) -> Case {
    Case { name, args, exit }
}

/// Every subcommand in JSON mode, plus the error paths of the exit-status contract.
pub const CASES: &[Case] = &[
    case(
        "ring_reduce",
        &["--format", "json", "--n", "2", "ring", "c^2"],
        0,
    ),
    case(
        "ring_top",
        &["--format", "json", "--n", "3", "ring", "h^3*c^2"],
        0,
    ),
    case(
        "ring_vanishing",
        &["--format", "json", "--n", "2", "ring", "h^3"],
        0,
    ),
    case(
        "conormal_line",
        &["--format", "json", "--n", "2", "conormal", "--j", "1"],
        0,
    ),
    case(
        "conormal_quartic",
        &[
            "--format",
            "json",
            "--n",
            "3",
            "conormal",
            "--hypersurface",
            "4",
        ],
        0,
    ),
    case(
        "conormal_variety",
        &[
            "--format", "json", "--n", "3", "conormal", "--q", "1", "--a", "0,3,1",
        ],
        0,
    ),
    case(
        "char_web_vector",
        &["--format", "json", "--n", "2", "char-web", "--d", "2,1"],
        0,
    ),
    case(
        "char_web_class",
        &[
            "--format",
            "json",
            "--n",
            "3",
            "char-web",
            "--p",
            "2",
            "--k",
            "1",
            "--class",
            "3*h^2 + 2*h*c + c^2",
        ],
        0,
    ),
    case(
        "polar_both",
        &[
            "--format",
            "json",
            "--n",
            "3",
            "polar",
            "--hypersurface",
            "3",
            "--d",
            "1,2,5",
        ],
        0,
    ),
    case(
        "check_quintic",
        &[
            "--format",
            "json",
            "--n",
            "2",
            "check",
            "--hypersurface",
            "5",
            "--d",
            "1,2",
        ],
        2,
    ),
    case(
        "check_quartic",
        &[
            "--format",
            "json",
            "--n",
            "3",
            "check",
            "--hypersurface",
            "4",
            "--d",
            "1,2",
            "--conditional",
        ],
        0,
    ),
    case(
        "bound_foliation",
        &["--format", "json", "bound", "--k", "1", "--d", "1,2"],
        0,
    ),
    case(
        "bound_two_steps",
        &["--format", "json", "bound", "--k", "1", "--d", "1,3,9"],
        0,
    ),
    case(
        "bound_web",
        &["--format", "json", "bound", "--k", "2", "--d", "2,1"],
        0,
    ),
    case(
        "web_square_root",
        &["--format", "json", "--seed", "7", "web", "--f", "p^2 - x"],
        0,
    ),
    case(
        "web_parabola",
        &[
            "--format",
            "json",
            "--seed",
            "7",
            "web",
            "--f",
            "p^2 - y",
            "--curve",
            "4*y - x^2",
        ],
        0,
    ),
    case(
        "web_circle",
        &[
            "--format",
            "json",
            "--seed",
            "7",
            "web",
            "--f",
            "x + y*p",
            "--curve",
            "x^2 + y^2 - 1",
        ],
        0,
    ),
    case(
        "web_not_invariant",
        &[
            "--format", "json", "--seed", "7", "web", "--f", "p^2 - x", "--curve", "y",
        ],
        0,
    ),
    case(
        "web_singular_claimed_smooth",
        &[
            "--format",
            "json",
            "--seed",
            "7",
            "web",
            "--f",
            "x*p - 5*y",
            "--curve",
            "y - x^5",
        ],
        2,
    ),
    case(
        "web_singular",
        &[
            "--format",
            "json",
            "--seed",
            "7",
            "web",
            "--f",
            "x*p - 5*y",
            "--curve",
            "y - x^5",
            "--singular",
        ],
        0,
    ),
    case(
        "error_syntax",
        &["--format", "json", "--n", "2", "ring", "h^^2"],
        1,
    ),
    case(
        "error_constant_web",
        &["--format", "json", "--seed", "1", "web", "--f", "5"],
        1,
    ),
    case(
        "error_missing_seed",
        &["--format", "json", "web", "--f", "p^2 - x"],
        1,
    ),
    case(
        "error_q_below_p",
        &[
            "--format", "json", "--n", "3", "check", "--q", "0", "--a", "0,0,1", "--d", "1,2,3",
        ],
        1,
    ),
    case(
        "error_length",
        &[
            "--format", "json", "--n", "3", "char-web", "--p", "2", "--d", "1,2",
        ],
        1,
    ),
    case(
        "error_unknown_flag",
        &["--format", "json", "bound", "--e", "3"],
        1,
    ),
];

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_polarweb"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().expect("exit status"),
    }
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(format!("{name}.golden"))
}

/// What a golden file stores: stdout on success, stderr otherwise.
pub fn observed(run: &Run) -> &str {
    if run.stdout.is_empty() {
        &run.stderr
    } else {
        &run.stdout
    }
}

/// Compares every case with its golden file; returns a description of each mismatch.
pub fn check_goldens(update: bool) -> Vec<String> {
    let mut problems = Vec::new();
    for c in CASES {
        let first = run(c.args);
        let second = run(c.args);
        if first.code != c.exit {
            problems.push(format!(
                "{}: exit {} instead of {}",
                c.name, first.code, c.exit
            ));
        }
        if first.stdout != second.stdout || first.stderr != second.stderr {
            problems.push(format!("{}: output differs between runs", c.name));
        }
        if c.exit == 1 && !first.stdout.is_empty() {
            problems.push(format!("{}: usage errors must not write stdout", c.name));
        }
        let path = golden_path(c.name);
        if update {
            std::fs::write(&path, observed(&first)).expect("write golden");
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == observed(&first) => {}
            Ok(_) => problems.push(format!(
                "{}: output differs from {}",
                c.name,
                path.display()
            )),
            Err(e) => problems.push(format!("{}: cannot read {}: {e}", c.name, path.display())),
        }
    }
    problems
}
