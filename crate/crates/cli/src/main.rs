//! Command-line front end: typecheck diagram files, evaluate them under
//! relational or linear-circuit bindings, count colorings, compute knot
//! groups, and run the axiom suite.
//!
//! Exit codes: 0 on success, 1 for evaluation errors (or failing axioms),
//! 2 for parse and type errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use group_core::FiniteGroup;
use knotgroup_backend::{
    eval_presentation, hom_count_budgeted, tietze_simplify, DEFAULT_MAX_PASSES,
};
use span_backend::eval_colorings;
use tcd_dsl::{parse_linres_bindings, parse_program, parse_trel_bindings, Program};
use trel_backend::{axiom_suite, eval_trel, scalar_of};

#[derive(Parser)]
#[command(name = "tcd", about = "Tangled circuit diagrams: check and evaluate")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Backend {
    Trel,
    Linres,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and typecheck a diagram file, printing each interface.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a diagram under a binding file.
    Eval {
        #[arg(long, value_enum)]
        backend: Backend,
        #[arg(long)]
        bindings: PathBuf,
        file: PathBuf,
        /// Diagram name; defaults to "main" or the file's only diagram.
        #[arg(long)]
        diagram: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Count colorings of a closed structure-only diagram in a group.
    Colorings {
        #[arg(long)]
        group: String,
        file: PathBuf,
        #[arg(long)]
        diagram: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Compute the presentation of a closed diagram's group.
    Knotgroup {
        file: PathBuf,
        #[arg(long)]
        diagram: Option<String>,
        /// Also print the Tietze-simplified presentation.
        #[arg(long)]
        simplify: bool,
        /// Count homomorphisms into a builtin group (after simplification
        /// when --simplify is given).
        #[arg(long, value_name = "GROUP")]
        hom_count: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run the relational axiom suite over a group, one line per law.
    Axioms {
        #[arg(long)]
        group: String,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, message }) => {
            eprintln!("error: {}", message);
            ExitCode::from(code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn parse_error(message: impl ToString) -> Failure {
    Failure { code: 2, message: message.to_string() }
}

fn eval_error(message: impl ToString) -> Failure {
    Failure { code: 1, message: message.to_string() }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| parse_error(format!("cannot read {}: {}", path.display(), e)))
}

fn load_program(path: &PathBuf) -> Result<Program, Failure> {
    let text = read(path)?;
    parse_program(&text).map_err(|e| parse_error(format!("{}: {}", path.display(), e)))
}

fn pick_diagram<'p>(
    program: &'p Program,
    name: &'p Option<String>,
) -> Result<(&'p str, &'p diagram_core::DiagramTerm), Failure> {
    match name {
        Some(n) => program
            .diagram(n)
            .map(|(t, _)| (n.as_str(), t))
            .ok_or_else(|| eval_error(format!("no diagram named {:?}", n))),
        None => program
            .default_diagram()
            .map(|(n, t, _)| (n, t))
            .ok_or_else(|| eval_error("no diagram named \"main\" and the file has several")),
    }
}

fn builtin_group(name: &str) -> Result<FiniteGroup, Failure> {
    FiniteGroup::builtin(name).map_err(eval_error)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Check { file, json } => {
            let program = load_program(&file)?;
            if json {
                let diagrams: Vec<serde_json::Value> = program
                    .diagrams()
                    .map(|(name, _, iface)| {
                        serde_json::json!({
                            "diagram": name,
                            "dom": iface.dom.to_string(),
                            "cod": iface.cod.to_string(),
                        })
                    })
                    .collect();
                println!("{}", serde_json::json!({ "diagrams": diagrams }));
            } else {
                for (name, _, iface) in program.diagrams() {
                    println!("{} : {}", name, iface);
                }
            }
            Ok(())
        }
        Command::Eval { backend, bindings, file, diagram, json } => {
            let program = load_program(&file)?;
            let (_, term) = pick_diagram(&program, &diagram)?;
            let btext = read(&bindings)?;
            match backend {
                Backend::Trel => {
                    let parsed = parse_trel_bindings(&btext)
                        .map_err(|e| parse_error(format!("{}: {}", bindings.display(), e)))?;
                    let result =
                        eval_trel(term, &program.multigraph, &parsed).map_err(eval_error)?;
                    let scalar = (result.in_width() == 0 && result.out_width() == 0)
                        .then(|| scalar_of(&result).expect("widths checked").to_string());
                    if json {
                        let mut value = result.to_json();
                        if let Some(s) = &scalar {
                            value["scalar"] = serde_json::Value::String(s.clone());
                        }
                        println!("{}", value);
                    } else {
                        print!("{}", result.render());
                        if let Some(s) = scalar {
                            println!("scalar: {}", s);
                        }
                    }
                }
                Backend::Linres => {
                    let parsed = parse_linres_bindings(&btext)
                        .map_err(|e| parse_error(format!("{}: {}", bindings.display(), e)))?;
                    let result = linres_backend::eval_linres(term, &program.multigraph, &parsed)
                        .map_err(eval_error)?;
                    if json {
                        println!("{}", result.to_json());
                    } else {
                        print!("{}", result.render());
                    }
                }
            }
            Ok(())
        }
        Command::Colorings { group, file, diagram, json: _ } => {
            let program = load_program(&file)?;
            let (_, term) = pick_diagram(&program, &diagram)?;
            let g = builtin_group(&group)?;
            let count = eval_colorings(term, &g).map_err(eval_error)?;
            // The count line is already its own JSON mirror.
            println!("{{\"count\": {}}}", count);
            Ok(())
        }
        Command::Knotgroup { file, diagram, simplify, hom_count, json } => {
            let program = load_program(&file)?;
            let (_, term) = pick_diagram(&program, &diagram)?;
            let raw = eval_presentation(term).map_err(eval_error)?;
            let simplified = simplify.then(|| tietze_simplify(&raw, DEFAULT_MAX_PASSES));
            let count = match &hom_count {
                Some(gname) => {
                    let g = builtin_group(gname)?;
                    let target = simplified.as_ref().unwrap_or(&raw);
                    Some((
                        gname.clone(),
                        hom_count_budgeted(target, &g, 100_000_000).map_err(eval_error)?,
                    ))
                }
                None => None,
            };
            if json {
                let mut value = serde_json::json!({ "presentation": raw.to_json() });
                if let Some(s) = &simplified {
                    value["simplified"] = s.to_json();
                }
                if let Some((gname, n)) = &count {
                    value["hom_count"] = serde_json::json!({ "group": gname, "count": n });
                }
                println!("{}", value);
            } else {
                println!("{}", raw.render());
                if let Some(s) = &simplified {
                    println!("simplified: {}", s.render());
                }
                if let Some((gname, n)) = &count {
                    println!("hom_count({}) = {}", gname, n);
                }
            }
            Ok(())
        }
        Command::Axioms { group, json } => {
            let g = builtin_group(&group)?;
            let results = axiom_suite(&g).map_err(eval_error)?;
            let all_hold = results.iter().all(|(_, ok)| *ok);
            if json {
                let laws: Vec<serde_json::Value> = results
                    .iter()
                    .map(|(law, ok)| serde_json::json!({ "law": law, "holds": ok }))
                    .collect();
                println!("{}", serde_json::json!({ "group": group, "laws": laws }));
            } else {
                for (law, ok) in &results {
                    println!("{}: {}", law, if *ok { "pass" } else { "FAIL" });
                }
            }
            if all_hold {
                Ok(())
            } else {
                Err(eval_error(format!("axiom suite failed for {}", group)))
            }
        }
    }
}
