use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dectab::characters::{character, expand_in_schur_q, schur_p, schur_q, MonomialPolynomial};
use dectab::checks::{run_suite, CheckConfig};
use dectab::crystal_graph::{build_graph, closure, CrystalGraph};
use dectab::insertion::insert_word_traced;
use dectab::plactic::equivalence_classes;
use dectab::tableaux::{enumerate, DecTabCrystal, Family, ShiftedTableau, StrictPartition};
use dectab::words::{weight_of, Crystal, Flavor, TensorPower, Weight, Word};

#[derive(Parser)]
#[command(
    name = "dectab",
    version,
    about = "Decomposition tableaux, insertion and queer crystals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Insert a word; print P, Q and the step-by-step trace.
    Insert {
        #[arg(long)]
        word: Word,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
        /// Omit the trace.
        #[arg(long)]
        quiet: bool,
    },
    /// Build a crystal graph on tableaux of one shape or on the component of a word.
    #[command(group(ArgGroup::new("source").required(true).args(["shape", "word"])))]
    Graph {
        #[arg(long, default_value = "qplus")]
        flavor: Flavor,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        shape: Option<StrictPartition>,
        #[arg(long)]
        word: Option<Word>,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List a tableau family of one shape.
    Enumerate {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        shape: StrictPartition,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Character of a tableau family or tensor power, or a Schur polynomial.
    #[command(group(ArgGroup::new("source").required(true).args(["shape", "tensor", "schur_p", "schur_q"])))]
    Character {
        #[arg(long)]
        shape: Option<StrictPartition>,
        #[arg(long, default_value = "dectab+", requires = "shape")]
        family: Family,
        /// Length m of the tensor power of the standard crystal.
        #[arg(long)]
        tensor: Option<usize>,
        #[arg(long)]
        schur_p: Option<StrictPartition>,
        #[arg(long)]
        schur_q: Option<StrictPartition>,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Expand in the Schur Q basis.
        #[arg(long)]
        expand: bool,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Group all words of one length by their insertion tableau.
    Classes {
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Restrict to unprimed letters.
        #[arg(long)]
        unprimed: bool,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Run a verification suite, or all of them.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
}

/// Output text, or a message for an invalid request.
type Outcome = Result<String, String>;

fn usage(msg: impl Into<String>) -> String {
    msg.into()
}

fn domain(e: dectab::Error) -> String {
    e.to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or_default()
                .trim_start_matches("error: ");
            eprintln!("{}", json!({ "error": "usage", "message": first }));
            return ExitCode::from(2);
        }
    };
    let mut checks_failed = false;
    match run(cli.command, &mut checks_failed) {
        Ok(out) => {
            print!("{out}");
            if checks_failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(msg) => {
            eprintln!("{}", json!({ "error": "usage", "message": msg }));
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, checks_failed: &mut bool) -> Outcome {
    match command {
        Command::Insert {
            word,
            format,
            quiet,
        } => insert(&word, format, quiet),
        Command::Graph {
            flavor,
            n,
            shape,
            word,
            format,
            output,
        } => {
            let text = graph(flavor, n, shape, word, format)?;
            match output {
                Some(path) => {
                    std::fs::write(&path, text)
                        .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Enumerate {
            family,
            shape,
            n,
            format,
        } => enumerate_cmd(family, &shape, n, format),
        Command::Character {
            shape,
            family,
            tensor,
            schur_p: sp,
            schur_q: sq,
            n,
            expand,
            format,
        } => {
            let poly = if let Some(shape) = shape {
                let ts = enumerate(family, &shape, n);
                let ws = ts
                    .iter()
                    .map(|t| weight_of(&dectab::tableaux::revrow(t), n))
                    .collect::<dectab::Result<Vec<Weight>>>()
                    .map_err(domain)?;
                character(&ws, n)
            } else if let Some(m) = tensor {
                let ws = Word::all(m, n, true)
                    .iter()
                    .map(|w| weight_of(w, n))
                    .collect::<dectab::Result<Vec<Weight>>>()
                    .map_err(domain)?;
                character(&ws, n)
            } else if let Some(l) = sp {
                schur_p(&l, n)
            } else {
                schur_q(&sq.expect("argument group requires one source"), n)
            };
            character_output(&poly, expand, format)
        }
        Command::Classes {
            length,
            n,
            unprimed,
            format,
        } => classes(length, n, !unprimed, format),
        Command::Check {
            suite,
            n,
            max_len,
            format,
        } => {
            let outcomes = run_suite(&suite, &CheckConfig { n, max_len }).map_err(domain)?;
            *checks_failed = outcomes.iter().any(|o| !o.passed);
            match format {
                Format::Json => Ok(format!(
                    "{}\n",
                    serde_json::to_string_pretty(&outcomes).expect("serializable")
                )),
                Format::Ascii => {
                    let mut out = String::new();
                    for o in &outcomes {
                        let status = if o.passed { "PASS" } else { "FAIL" };
                        out +=
                            &format!("[{status}] {:>2} {:<17} {} cases\n", o.id, o.name, o.cases);
                        for f in &o.failures {
                            out += &format!("       {f}\n");
                        }
                    }
                    let passed = outcomes.iter().filter(|o| o.passed).count();
                    out += &format!("{passed}/{} suites passed\n", outcomes.len());
                    Ok(out)
                }
                Format::Dot => Err(usage("check output supports ascii or json")),
            }
        }
    }
}

fn insert(word: &Word, format: Format, quiet: bool) -> Outcome {
    let (p, q, steps) = insert_word_traced(word);
    match format {
        Format::Json => {
            let mut v = json!({ "word": word.to_string(), "P": p, "Q": q });
            if !quiet {
                v["trace"] = serde_json::to_value(&steps).expect("serializable");
            }
            Ok(format!(
                "{}\n",
                serde_json::to_string_pretty(&v).expect("serializable")
            ))
        }
        Format::Ascii => {
            let mut out = format!(
                "P =\n{}\nQ =\n{}\n",
                indent(&p.to_ascii()),
                indent(&q.to_ascii())
            );
            if !quiet {
                out += "trace:\n";
                let m = word.len();
                for (k, ins) in steps.iter().enumerate() {
                    let x = word.letters()[m - 1 - k];
                    out += &format!(
                        "  insert {x} -> {} ({}), box {:?}\n",
                        ins.tableau, ins.parity, ins.added_box
                    );
                    for s in &ins.trace {
                        let bumped = s.bumped.map_or("-".to_string(), |b| b.to_string());
                        out += &format!(
                            "    row {}: in {} out {} middle {}\n",
                            s.row + 1,
                            s.incoming,
                            bumped,
                            if s.middle_moved { "moved" } else { "stayed" }
                        );
                    }
                }
            }
            Ok(out)
        }
        Format::Dot => Err(usage("insert output supports ascii or json")),
    }
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("  {l}\n")).collect()
}

fn graph(
    flavor: Flavor,
    n: usize,
    shape: Option<StrictPartition>,
    word: Option<Word>,
    format: Format,
) -> Outcome {
    if flavor != Flavor::Gl && n < 2 {
        return Err(usage("q and q+ crystals need n >= 2"));
    }
    if let Some(shape) = shape {
        let crystal = DecTabCrystal::new(shape.clone(), n);
        let family = if flavor == Flavor::QPlus {
            Family::DecTabPlus
        } else {
            Family::DecTab
        };
        let g = build_graph(&crystal, enumerate(family, &shape, n), flavor).map_err(domain)?;
        Ok(render_graph(&g, format))
    } else {
        let word = word.expect("argument group requires one source");
        word.check_rank(n).map_err(domain)?;
        if flavor != Flavor::QPlus && word.prime_pattern().iter().any(|&p| p) {
            return Err(usage("primed words need the qplus flavor"));
        }
        let g = closure(&TensorPower::new(n, flavor), vec![word], flavor).map_err(domain)?;
        Ok(render_graph(&g, format))
    }
}

fn render_graph<V: Clone + Eq + std::hash::Hash + Display>(
    g: &CrystalGraph<V>,
    format: Format,
) -> String {
    match format {
        Format::Dot => g.to_dot(),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&g.to_json()).expect("serializable")
        ),
        Format::Ascii => {
            let mut out = String::new();
            for (k, v) in g.vertices().iter().enumerate() {
                out += &format!("{k}: {v}  wt {:?}\n", g.weight(&k).0);
            }
            for (s, i, d) in g.edges() {
                out += &format!("{s} -{}-> {d}\n", i.label());
            }
            out
        }
    }
}

fn enumerate_cmd(family: Family, shape: &StrictPartition, n: usize, format: Format) -> Outcome {
    let ts = enumerate(family, shape, n);
    match format {
        Format::Json => Ok(format!(
            "{}\n",
            serde_json::to_string(&ts).expect("serializable")
        )),
        Format::Ascii => Ok(ts.iter().map(|t| format!("{t}\n")).collect()),
        Format::Dot => Err(usage("enumerate output supports ascii or json")),
    }
}

fn character_output(p: &MonomialPolynomial, expand: bool, format: Format) -> Outcome {
    if format == Format::Dot {
        return Err(usage("character output supports ascii or json"));
    }
    if !expand {
        return Ok(match format {
            Format::Json => format!("{}\n", serde_json::to_string(p).expect("serializable")),
            _ => format!("{p}\n"),
        });
    }
    let coeffs = expand_in_schur_q(p).map_err(domain)?;
    Ok(match format {
        Format::Json => {
            let v: Vec<Value> = coeffs
                .iter()
                .map(|(l, c)| {
                    let coef = match c.to_string().parse::<i64>() {
                        Ok(v) => json!(v),
                        Err(_) => json!(c.to_string()),
                    };
                    json!({ "shape": l.parts(), "coef": coef })
                })
                .collect();
            format!("{}\n", Value::Array(v))
        }
        _ => {
            if coeffs.is_empty() {
                "0\n".to_string()
            } else {
                let terms: Vec<String> = coeffs
                    .iter()
                    .rev()
                    .map(|(l, c)| {
                        let c = c.to_string();
                        if c == "1" {
                            format!("Q{l}")
                        } else {
                            format!("{c}*Q{l}")
                        }
                    })
                    .collect();
                format!("{}\n", terms.join(" + "))
            }
        }
    })
}

fn classes(m: usize, n: usize, primed: bool, format: Format) -> Outcome {
    let cs = equivalence_classes(m, n, primed);
    match format {
        Format::Json => {
            let v: Vec<Value> = cs
                .iter()
                .map(|c| {
                    json!({
                        "representative": c.representative.to_string(),
                        "tableau": c.tableau,
                        "words": c.words.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(format!(
                "{}\n",
                serde_json::to_string_pretty(&v).expect("serializable")
            ))
        }
        Format::Ascii => {
            let mut out = String::new();
            for c in &cs {
                let tableau: &ShiftedTableau = &c.tableau;
                out += &format!("{tableau}  [{}]:", c.words.len());
                for w in &c.words {
                    out += &format!(" \"{w}\"");
                }
                out.push('\n');
            }
            out += &format!("{} classes\n", cs.len());
            Ok(out)
        }
        Format::Dot => Err(usage("classes output supports ascii or json")),
    }
}
