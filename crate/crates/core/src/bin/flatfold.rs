use std::io::Write;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::json;

use flatfold::coloring::{count_colorings, verify_bijection};
use flatfold::generators::PatternSpec;
use flatfold::io::{emit, load, render_svg, to_fold, PatternDocument};
use flatfold::oracle::{brute_limit, count_locally_valid_with_limit};
use flatfold::saw::build_saw;
use flatfold::single_vertex::{count_single_vertex_mv, kawasaki_check, niceness, Niceness};

#[derive(Parser)]
#[command(name = "flatfold", version, about = "Count mountain-valley assignments of flat-foldable crease patterns")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Miura,
    ModifiedMiura,
    Snake,
    TriangleTwist,
    JoinedTwists,
    Crane,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a generated crease pattern.
    Generate {
        family: Family,
        /// Family parameters: `m n` for grids, a twist count for twists.
        params: Vec<usize>,
        /// Acute Miura angle in degrees.
        #[arg(long)]
        angle: Option<i64>,
        /// Reflected columns of a modified Miura-ori as a 0/1 string of length n+1.
        #[arg(long)]
        mask: Option<String>,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Validate a pattern and report every interior vertex.
    Check {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Count locally valid MV assignments by brute force.
    CountMv {
        #[arg(default_value = "-")]
        file: String,
        /// Largest crease count to attempt.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Tile a SAW graph and embed it in the document.
    BuildSaw {
        #[arg(default_value = "-")]
        file: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Count proper 3-colorings of the SAW graph with the root pre-colored.
    CountColorings {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Check the coloring/assignment bijection against brute force.
    Verify {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Draw the pattern as SVG.
    Render {
        #[arg(default_value = "-")]
        file: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Export to FOLD with floating-point coordinates.
    ExportFold {
        #[arg(default_value = "-")]
        file: String,
        #[arg(short, long)]
        output: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Invalid(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn write_out(path: Option<&str>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) if p != "-" => std::fs::write(p, text)?,
        _ => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn spec_of(family: Family, params: &[usize], angle: Option<i64>, mask: Option<&str>) -> Result<PatternSpec, Failure> {
    let want = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(Failure::Usage(format!("this family takes {k} parameter(s), got {}", params.len())))
        }
    };
    Ok(match family {
        Family::Miura => {
            want(2)?;
            PatternSpec::Miura { m: params[0], n: params[1], angle: angle.unwrap_or(flatfold::generators::MIURA_ANGLE) }
        }
        Family::ModifiedMiura => {
            want(2)?;
            let mask = match mask {
                Some(s) => s
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(Failure::Usage(format!("mask {s:?} must contain only 0 and 1"))),
                    })
                    .collect::<Result<Vec<bool>, Failure>>()?,
                None => vec![false; params[1] + 1],
            };
            PatternSpec::ModifiedMiura { m: params[0], n: params[1], mask }
        }
        Family::Snake => {
            want(2)?;
            PatternSpec::Snake { m: params[0], n: params[1] }
        }
        Family::TriangleTwist | Family::JoinedTwists => {
            if params.len() > 1 {
                return Err(Failure::Usage("twists take at most one parameter".into()));
            }
            PatternSpec::TriangleTwist { count: params.first().copied().unwrap_or(1) }
        }
        Family::Crane => {
            want(0)?;
            PatternSpec::Crane
        }
    })
}

fn run(cli: Cli) -> Outcome {
    let json_out = cli.json;
    let print = |v: serde_json::Value, text: String| {
        if json_out {
            println!("{v}");
        } else {
            println!("{text}");
        }
    };
    match cli.cmd {
        Cmd::Generate { family, params, angle, mask, output } => {
            let cp = spec_of(family, &params, angle, mask.as_deref())?.generate()?;
            write_out(output.as_deref(), &emit(&PatternDocument::new(cp)))?;
            Ok(true)
        }
        Cmd::Check { file } => {
            let doc = load(&file)?;
            let cp = &doc.pattern;
            let mut ok = true;
            let mut rows = Vec::new();
            let mut lines = vec![format!(
                "{} vertices, {} creases, {} faces",
                cp.vertices().len(),
                cp.creases().len(),
                cp.faces().len()
            )];
            for v in cp.interior_vertices() {
                let cone = cp.cone_at(v.id)?;
                let kaw = kawasaki_check(&cone);
                ok &= kaw;
                let (nice, count) = if kaw {
                    let nice = match niceness(&cone)? {
                        Niceness::AllEqual => "all-equal".to_string(),
                        Niceness::MaxRun(m) => format!("{m}-nice"),
                    };
                    (Some(nice), Some(count_single_vertex_mv(&cone)?.to_string()))
                } else {
                    (None, None)
                };
                lines.push(format!(
                    "vertex {}: degree {}, {}{}",
                    v.id,
                    cone.degree(),
                    if kaw { "flat-foldable" } else { "fails Kawasaki" },
                    match (&nice, &count) {
                        (Some(n), Some(c)) => format!(", {n}, {c} assignments"),
                        _ => String::new(),
                    }
                ));
                rows.push(json!({"id": v.id, "degree": cone.degree(), "kawasaki": kaw, "niceness": nice, "count": count}));
            }
            lines.push(if ok { "OK".into() } else { "INVALID".into() });
            print(
                json!({"valid": ok, "vertices": cp.vertices().len(), "creases": cp.creases().len(), "faces": cp.faces().len(), "interior": rows}),
                lines.join("\n"),
            );
            Ok(ok)
        }
        Cmd::CountMv { file, limit } => {
            let doc = load(&file)?;
            let n = count_locally_valid_with_limit(&doc.pattern, limit.unwrap_or_else(brute_limit))?;
            print(json!({"count": n.to_string()}), n.to_string());
            Ok(true)
        }
        Cmd::BuildSaw { file, output } => {
            let doc = load(&file)?;
            let (cp, g) = build_saw(&doc.pattern)?;
            let same = cp.crease_ids() == doc.pattern.crease_ids();
            let out = PatternDocument {
                assignment: if same { doc.assignment } else { None },
                pattern: cp,
                saw: Some(g),
                coloring: None,
            };
            write_out(output.as_deref(), &emit(&out))?;
            Ok(true)
        }
        Cmd::CountColorings { file } => {
            let doc = load(&file)?;
            let g = match doc.saw {
                Some(g) => g,
                None => build_saw(&doc.pattern)?.1,
            };
            let n = count_colorings(&g);
            print(json!({"count": n.to_string(), "vertices": g.vertex_count()}), n.to_string());
            Ok(true)
        }
        Cmd::Verify { file } => {
            let doc = load(&file)?;
            let (cp, g) = match doc.saw {
                Some(g) => (doc.pattern, g),
                None => build_saw(&doc.pattern)?,
            };
            let r = verify_bijection(&cp, &g)?;
            let text = if r.passed {
                format!("PASS: {} colorings, {} assignments", r.colorings, r.assignments)
            } else {
                format!(
                    "FAIL: {} colorings, {} assignments: {}",
                    r.colorings,
                    r.assignments,
                    r.counterexample.clone().unwrap_or_default()
                )
            };
            print(
                json!({"passed": r.passed, "colorings": r.colorings.to_string(), "assignments": r.assignments.to_string(), "counterexample": r.counterexample}),
                text,
            );
            Ok(r.passed)
        }
        Cmd::Render { file, output } => {
            let doc = load(&file)?;
            let svg = render_svg(&doc.pattern, doc.assignment.as_ref(), doc.saw.as_ref(), doc.coloring.as_ref());
            write_out(output.as_deref(), &svg)?;
            Ok(true)
        }
        Cmd::ExportFold { file, output } => {
            let doc = load(&file)?;
            let fold = to_fold(&doc.pattern, doc.assignment.as_ref());
            let mut text = serde_json::to_string_pretty(&fold)?;
            text.push('\n');
            write_out(output.as_deref(), &text)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            let mut cmd = Cli::command();
            cmd.error(clap::error::ErrorKind::InvalidValue, msg).exit()
        }
    }
}
