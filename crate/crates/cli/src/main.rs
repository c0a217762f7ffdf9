//! `kashiwara`: exact computations in two-parameter quantum groups and
//! their Kashiwara algebras, and the verification suites.

mod config;

/// Print a line; a closed pipe ends output quietly instead of panicking.
macro_rules! emit {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use config::{Config, Partial};
use kashiwara_core::hopf::{AntipodeDirection, Coproduct};
use kashiwara_core::{
    parse_element, run_suites, CartanType, Engine, Error, Parent, Report, Suite, TruncatedElement, VermaModule,
    Weight,
};

#[derive(Parser, Debug)]
#[command(name = "kashiwara", version, about = "Two-parameter quantum group workbench")]
struct Cli {
    /// Cartan type: A1, A2, ..., B2 or G2.
    #[arg(long = "type", global = true)]
    cartan: Option<String>,
    /// Truncation height L.
    #[arg(long, global = true)]
    height: Option<usize>,
    /// Module depth D.
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// Highest weight as coordinates over the simple roots, e.g. 1,-1.
    #[arg(long, global = true, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized instances.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// A file of `key = value` lines; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Deliberately break one structure constant (smoke test for the suites):
    /// kashiwara-delta, quantum-commutator or pairing-base.
    #[arg(long, global = true, hide = true)]
    mutation: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ParentArg {
    U,
    B,
    Bbar,
}

impl From<ParentArg> for Parent {
    fn from(p: ParentArg) -> Parent {
        match p {
            ParentArg::U => Parent::U,
            ParentArg::B => Parent::B,
            ParentArg::Bbar => Parent::Bbar,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form of an expression.
    Nf {
        expr: String,
        #[arg(long, value_enum, default_value = "u")]
        parent: ParentArg,
    },
    /// The pairing <x, y> for x in U^≥ and y in U^≤.
    Pair { x: String, y: String },
    /// Gram matrix of a weight space: `gram [TYPE] BETA`.
    Gram {
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
    },
    /// Dual basis of a weight space: `dual [TYPE] BETA`.
    Dual {
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
    },
    /// A coproduct: std (U), right (B), left (Bbar) or bottom (U).
    Coprod {
        expr: String,
        #[arg(long, default_value = "std")]
        variant: String,
    },
    /// The antipode of U, or its inverse.
    Antipode {
        expr: String,
        #[arg(long)]
        inverse: bool,
    },
    /// The anti-isomorphism from Bbar to B.
    Phi { expr: String },
    /// The extremal projector, grade by grade up to the height.
    Gamma {
        /// Use the rank-one divided-power formula.
        #[arg(long)]
        closed_form: bool,
    },
    /// The Casimir element, grade by grade up to the height.
    Casimir,
    /// Slices, kernel basis and structure checks of H(lambda).
    Verma {
        /// Run the structure checks (`all`).
        #[arg(long)]
        verify: Option<String>,
    },
    /// Run a verification suite or `all`.
    Verify { suite: String },
}

/// Failure modes mapped to exit codes.
enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let flags = Partial {
        cartan: cli.cartan.clone(),
        height: cli.height,
        depth: cli.depth,
        lambda: cli.lambda.clone(),
        seed: cli.seed,
        json: cli.json.then_some(true),
        mutation: cli.mutation.clone(),
    };
    let file = match &cli.config {
        Some(p) => Partial::read_file(p)?,
        None => Partial::default(),
    };
    let mut partial = flags.or(file);
    // `gram A2 1,1` names the type positionally.
    if let Command::Gram { args } | Command::Dual { args } = &cli.command {
        if args.len() == 2 {
            partial.cartan = Some(args[0].clone());
        }
    }
    let cfg = Config::resolve(partial)?;
    let engine = cfg.suite.engine();
    let out = Printer { json: cfg.json };

    match cli.command {
        Command::Nf { expr, parent } => {
            let x = parse_element(&expr, &engine, parent.into())?;
            out.element("nf", &x.to_string(), json!({ "parent": x.parent().name() }));
        }
        Command::Pair { x, y } => {
            let x = parse_element(&x, &engine, Parent::U)?;
            let y = parse_element(&y, &engine, Parent::U)?;
            let v = engine.pair(&x, &y)?;
            out.element("pair", &v.to_string(), json!({}));
        }
        Command::Gram { args } => gram(&engine, &out, args.last().expect("required"), false)?,
        Command::Dual { args } => gram(&engine, &out, args.last().expect("required"), true)?,
        Command::Coprod { expr, variant } => {
            let variant: Coproduct = variant.parse()?;
            let x = parse_element(&expr, &engine, variant.source())?;
            let d = engine.coproduct(variant, &x)?;
            out.element("coprod", &d.to_string(), json!({ "variant": variant.name() }));
        }
        Command::Antipode { expr, inverse } => {
            let x = parse_element(&expr, &engine, Parent::U)?;
            let dir = if inverse { AntipodeDirection::Inverse } else { AntipodeDirection::Forward };
            let y = engine.antipode(&x, dir)?;
            out.element("antipode", &y.to_string(), json!({ "inverse": inverse }));
        }
        Command::Phi { expr } => {
            let x = parse_element(&expr, &engine, Parent::Bbar)?;
            out.element("phi", &engine.phi(&x)?.to_string(), json!({}));
        }
        Command::Gamma { closed_form } => {
            let l = cfg.suite.height;
            let g = if closed_form { engine.gamma_rank_one(l)? } else { engine.gamma(l)? };
            out.grades("gamma", engine.cartan(), &g);
        }
        Command::Casimir => {
            let c = engine.casimir(cfg.suite.height)?;
            out.grades("casimir", engine.cartan(), &c);
        }
        Command::Verma { verify } => return verma(&engine, &cfg, &out, verify.as_deref()),
        Command::Verify { suite } => {
            let suites = Suite::parse_list(&suite)?;
            let report = run_suites(&suites, &cfg.suite)?;
            out.report(&report);
            return Ok(if report.passed() { Outcome::Pass } else { Outcome::Fail });
        }
    }
    Ok(Outcome::Pass)
}

fn gram(engine: &Engine, out: &Printer, beta: &str, dual: bool) -> Result<(), Error> {
    let beta: Weight = beta.parse()?;
    if beta.0.len() != engine.rank() || !beta.is_nonnegative() {
        return Err(Error::Config(format!(
            "weight {beta} is not in the positive root cone of {}",
            engine.cartan().name()
        )));
    }
    let g = engine.gram(&beta)?;
    let plus: Vec<String> = g.plus_basis.iter().map(|w| engine.upper_word(Parent::U, w).to_string()).collect();
    let minus: Vec<String> = g.minus_basis.iter().map(|w| engine.lower_word(Parent::U, w).to_string()).collect();
    if dual {
        let ys: Vec<String> = engine.dual_basis(&beta)?.iter().map(ToString::to_string).collect();
        if out.json {
            emit!(
                "{}",
                pretty(&json!({ "beta": beta.to_string(), "plus_basis": plus, "dual_basis": ys }))
            );
        } else {
            for (x, y) in plus.iter().zip(&ys) {
                emit!("{x}  ->  {y}");
            }
        }
        return Ok(());
    }
    let cells: Vec<Vec<String>> = g.gram.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect();
    let det = g.determinant().to_string();
    if out.json {
        emit!(
            "{}",
            pretty(&json!({
                "beta": beta.to_string(),
                "plus_basis": plus,
                "minus_basis": minus,
                "gram": cells,
                "determinant": det,
            }))
        );
        return Ok(());
    }
    let mut widths: Vec<usize> = minus.iter().map(|m| m.chars().count()).collect();
    for row in &cells {
        for (k, c) in row.iter().enumerate() {
            widths[k] = widths[k].max(c.chars().count());
        }
    }
    let left = plus.iter().map(|p| p.chars().count()).max().unwrap_or(0);
    let line = |head: &str, row: &[String]| {
        let mut s = format!("{head:<left$}");
        for (k, c) in row.iter().enumerate() {
            s.push_str(&format!("  {c:>w$}", w = widths[k]));
        }
        s.trim_end().to_string()
    };
    emit!("{}", line("", &minus));
    for (p, row) in plus.iter().zip(&cells) {
        emit!("{}", line(p, row));
    }
    emit!("det = {det}");
    Ok(())
}

fn verma(engine: &Engine, cfg: &Config, out: &Printer, verify: Option<&str>) -> Result<Outcome, Error> {
    let lambda = cfg.lambda.clone().unwrap_or_else(|| engine.cartan().zero_weight());
    let depth = cfg.suite.depth;
    let m = VermaModule::new(engine, lambda.clone(), depth)?;
    let inner = depth - 1;
    let kernel: Vec<String> = m.kernel(inner)?.iter().map(|v| m.format_vector(v)).collect();
    let report = match verify {
        None => None,
        Some("all") => Some(m.verify(&engine.gamma(inner)?, inner)?),
        Some(other) => return Err(Error::Config(format!("unknown verma check `{other}`; use all"))),
    };
    if out.json {
        let slices: Vec<Value> = m
            .slices()
            .iter()
            .map(|(b, w)| json!({ "beta": b.to_string(), "weight": lambda.sub(b).to_string(), "dim": w.len() }))
            .collect();
        let mut v = json!({
            "lambda": lambda.to_string(),
            "depth": depth,
            "slices": slices,
            "kernel": kernel,
        });
        if let Some(r) = &report {
            v["passed"] = json!(r.passed());
            v["report"] = serde_json::from_str(&r.to_json()).expect("report JSON");
        }
        emit!("{}", pretty(&v));
    } else {
        emit!("H({lambda}) to depth {depth}");
        for (b, w) in m.slices() {
            emit!("  slice {b}  weight {}  dim {}", lambda.sub(b), w.len());
        }
        emit!("kernel to depth {inner}:");
        for k in &kernel {
            emit!("  {k}");
        }
        if let Some(r) = &report {
            emit_raw(&r.to_text());
        }
    }
    Ok(match report {
        Some(r) if !r.passed() => Outcome::Fail,
        _ => Outcome::Pass,
    })
}

fn emit_raw(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON value")
}

struct Printer {
    json: bool,
}

impl Printer {
    fn element(&self, verb: &str, text: &str, mut extra: Value) {
        if self.json {
            extra["verb"] = json!(verb);
            extra["result"] = json!(text);
            emit!("{}", pretty(&extra));
        } else {
            emit!("{text}");
        }
    }

    fn grades(&self, verb: &str, t: &CartanType, g: &TruncatedElement) {
        if self.json {
            let grades: Vec<Value> = g
                .grades
                .iter()
                .map(|(b, x)| json!({ "grade": b.to_string(), "element": x.to_string() }))
                .collect();
            emit!(
                "{}",
                pretty(&json!({ "verb": verb, "type": t.name(), "cutoff": g.cutoff, "grades": grades }))
            );
        } else {
            for (b, x) in &g.grades {
                emit!("{b}: {x}");
            }
        }
    }

    fn report(&self, r: &Report) {
        if self.json {
            emit!("{}", r.to_json());
        } else {
            emit_raw(&r.to_text());
        }
    }
}
