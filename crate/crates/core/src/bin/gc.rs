use std::io::{self, BufRead, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use grossone::gclang::{parse, value_json, GcError, Session};
use grossone::gnum::render;
use grossone::oracle;

#[derive(Parser)]
#[command(name = "gc", version, about = "Grossone calculator")]
struct Cli {
    /// Print one JSON object per result
    #[arg(long, global = true)]
    json: bool,

    /// Attach a finite-substitution check at ① = L to every count, e.g. L=27720
    #[arg(long, global = true, value_name = "L=<int>", value_parser = parse_oracle)]
    oracle: Option<u64>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one expression
    Eval { expr: String },
    /// Evaluate a script, one statement per line
    Run { file: PathBuf },
    /// Run the randomized set-cardinality sweep
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        cases: usize,
    },
}

fn parse_oracle(s: &str) -> Result<u64, String> {
    let n = s.strip_prefix("L=").unwrap_or(s);
    match n.parse::<u64>() {
        Ok(l) if l > 0 => Ok(l),
        _ => Err(format!("expected L=<positive integer>, got {s:?}")),
    }
}

const OK: u8 = 0;
const EVAL_ERROR: u8 = 1;
const SYNTAX_ERROR: u8 = 2;

struct Runner {
    session: Session,
    json: bool,
    oracle: Option<u64>,
}

impl Runner {
    /// Evaluates and prints one statement; returns its exit status.
    fn statement(&mut self, input: &str, out: &mut impl Write) -> io::Result<u8> {
        let ast = match parse(input) {
            Ok(a) => a,
            Err(e) => return self.failure(input, GcError::Syntax(e), out),
        };
        let value = match self.session.eval(&ast) {
            Ok(v) => v,
            Err(e) => return self.failure(input, GcError::Eval(e), out),
        };
        let note = self
            .oracle
            .and_then(|l| self.session.oracle_note(&ast, &value, l));
        if self.json {
            let mut obj = value_json(input, &value);
            if let Some(n) = &note {
                obj["oracle"] = match n {
                    Ok(n) => n.to_json(),
                    Err(e) => GcError::Eval(e.clone()).to_json(),
                };
            }
            writeln!(out, "{obj}")?;
        } else {
            writeln!(out, "{value}")?;
            match note {
                Some(Ok(n)) => writeln!(out, "  {n}")?,
                Some(Err(e)) => writeln!(out, "  oracle: {e}")?,
                None => {}
            }
        }
        Ok(OK)
    }

    fn failure(&self, input: &str, e: GcError, out: &mut impl Write) -> io::Result<u8> {
        if self.json {
            let mut obj = e.to_json();
            obj["input"] = json!(input);
            writeln!(out, "{obj}")?;
        } else {
            eprintln!("error [{}]: {}", e.kind(), e.detail());
        }
        Ok(match e {
            GcError::Syntax(_) => SYNTAX_ERROR,
            GcError::Eval(_) => EVAL_ERROR,
        })
    }

    fn lines(&mut self, src: impl BufRead, prompt: bool) -> io::Result<u8> {
        let stdout = io::stdout();
        let mut worst = OK;
        if prompt {
            print!("gc> ");
            io::stdout().flush()?;
        }
        for line in src.lines() {
            let line = line?;
            let trimmed = line.trim();
            if !trimmed.is_empty() && !trimmed.starts_with('#') {
                let code = self.statement(trimmed, &mut stdout.lock())?;
                worst = worst.max(code);
            }
            if prompt {
                print!("gc> ");
                io::stdout().flush()?;
            }
        }
        if prompt {
            println!();
        }
        Ok(worst)
    }
}

fn check(seed: u64, cases: usize, json: bool) -> u8 {
    let report = oracle::sweep(seed, cases);
    let failed = report.failures().count();
    if json {
        let rows: Vec<_> = report
            .cases
            .iter()
            .map(|c| {
                json!({
                    "case": c.index,
                    "expression": c.expression,
                    "L": c.reports.iter().map(|r| r.l.to_string()).collect::<Vec<_>>(),
                    "pass": c.passed(),
                    "error": c.error,
                })
            })
            .collect();
        println!(
            "{}",
            json!({"seed": seed, "cases": cases, "failed": failed, "results": rows})
        );
    } else {
        println!("{:>5}  {:<6}  {:<26}  expression", "case", "result", "L: symbolic = brute");
        for c in &report.cases {
            let detail = match &c.error {
                Some(e) => e.clone(),
                None => c
                    .reports
                    .iter()
                    .map(|r| format!("{}:{}", r.l, render::rational(&r.symbolic)))
                    .collect::<Vec<_>>()
                    .join(" "),
            };
            let status = if c.passed() { "pass" } else { "FAIL" };
            println!("{:>5}  {status:<6}  {detail:<26}  {}", c.index, c.expression);
        }
        println!("{}/{} passed (seed {seed})", cases - failed, cases);
    }
    if failed == 0 {
        OK
    } else {
        EVAL_ERROR
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut runner = Runner {
        session: Session::new(),
        json: cli.json,
        oracle: cli.oracle,
    };
    let result = match cli.command {
        Some(Command::Eval { expr }) => runner.statement(&expr, &mut io::stdout().lock()),
        Some(Command::Run { file }) => match std::fs::File::open(&file) {
            Ok(f) => runner.lines(io::BufReader::new(f), false),
            Err(e) => {
                eprintln!("gc: {}: {e}", file.display());
                return ExitCode::from(EVAL_ERROR);
            }
        },
        Some(Command::Check { seed, cases }) => Ok(check(seed, cases, cli.json)),
        None => {
            let stdin = io::stdin();
            let prompt = stdin.is_terminal();
            runner.lines(stdin.lock(), prompt)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("gc: {e}");
            ExitCode::from(EVAL_ERROR)
        }
    }
}
