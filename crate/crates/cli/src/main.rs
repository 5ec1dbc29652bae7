//! `deltapol`: inspect finite structures, build interpolation terms and run
//! the verification checks.
//!
//! Exit codes: 0 when everything holds, 1 when a property or assertion fails
//! (the witness is printed), 2 on input or usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use deltapol::{
    check_distributivity, check_interpolation, check_kronecker, check_prop1, emit_structure, eval_term,
    interpolate_boolean_algebra, interpolate_boolean_poset, interpolate_ring, lagrange_field, parse_points,
    parse_structure, parse_term, run_suite, sweep, BooleanAlgebra, CheckReport, Interpolant, Setting,
    Structure, SuiteConfig, UnitaryRing,
};

#[derive(Parser)]
#[command(name = "deltapol", version, about = "Interpolation over finite rings, Boolean algebras and Boolean posets")]
struct Cli {
    /// One result per line, `CHECK <name> PASS|FAIL <witness?>`.
    #[arg(long, global = true)]
    porcelain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a structure file.
    Validate { file: PathBuf },
    /// Report order-theoretic or ring-theoretic properties.
    Classify { file: PathBuf },
    /// Generate a standard structure file.
    Gen(GenArgs),
    /// Build the interpolation term for a finite support and tabulate it.
    Interpolate {
        file: PathBuf,
        /// Comma-separated `point:value` pairs.
        #[arg(long)]
        points: String,
        #[arg(long)]
        setting: Option<Setting>,
    },
    /// Evaluate a term at one element.
    Eval {
        file: PathBuf,
        #[arg(long)]
        term: String,
        #[arg(long)]
        at: String,
        #[arg(long)]
        setting: Option<Setting>,
    },
    /// Run one property check.
    Check(CheckArgs),
    /// Run the full verification corpus.
    Suite {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 5)]
        max_support: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GenChoice {
    /// Powerset algebra with N atoms.
    #[arg(long, value_name = "N")]
    powerset: Option<usize>,
    /// Integers modulo N.
    #[arg(long, value_name = "N")]
    zmod: Option<usize>,
    /// 2x2 matrices over Z2.
    #[arg(long)]
    matring2: bool,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    choice: GenChoice,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Prop {
    Prop1,
    Interpolation,
    Kronecker,
    Distributivity,
}

#[derive(Args)]
struct CheckArgs {
    file: PathBuf,
    #[arg(long, value_enum)]
    prop: Prop,
    /// Random supports per size.
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Support size; sweeps 1..=min(5, N) when omitted.
    #[arg(long)]
    size: Option<usize>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Check one explicit support instead of random ones.
    #[arg(long, conflicts_with_all = ["trials", "size", "seed"])]
    points: Option<String>,
}

/// An input or usage problem; maps to exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<bool, InputError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Classify { file } => classify(file, cli.porcelain),
        Command::Gen(args) => generate(args),
        Command::Interpolate { file, points, setting } => interpolate(file, points, *setting),
        Command::Eval {
            file,
            term,
            at,
            setting,
        } => eval(file, term, at, *setting),
        Command::Check(args) => check(args, cli.porcelain),
        Command::Suite {
            trials,
            max_support,
            seed,
        } => suite(*trials, *max_support, *seed, cli.porcelain),
    }
}

fn load(path: &Path) -> Result<Structure, InputError> {
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let s = parse_structure(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok(s.promote())
}

fn kind(s: &Structure) -> &'static str {
    match s {
        Structure::Ring(_) => "ring",
        Structure::Algebra(_) => "boolean algebra",
        Structure::Poset(_) => "poset",
    }
}

fn default_setting(s: &Structure) -> Setting {
    match s {
        Structure::Ring(_) => Setting::Ring,
        Structure::Algebra(_) => Setting::BooleanAlgebra,
        Structure::Poset(_) => Setting::BooleanPoset,
    }
}

fn validate(file: &Path) -> Outcome {
    let s = load(file)?;
    println!("ok: {} `{}` with {} elements", kind(&s), s.name(), s.len());
    Ok(true)
}

fn classify(file: &Path, porcelain: bool) -> Outcome {
    let s = load(file)?;
    let names = s.names();
    let mut rows: Vec<(String, bool, String)> = Vec::new();
    match &s {
        Structure::Ring(r) => {
            rows.push(("commutative".into(), r.is_commutative(), String::new()));
            rows.push(("field".into(), r.is_field(), String::new()));
            rows.push(("boolean_ring".into(), r.is_boolean_ring(), String::new()));
        }
        other => {
            let cls = other.poset().expect("ordered").classify();
            for (prop, ok) in cls.flags() {
                let w = cls
                    .witness(prop)
                    .map(|w| w.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join(", "))
                    .unwrap_or_default();
                rows.push((prop.label().into(), ok, w));
            }
        }
    }
    for (label, ok, w) in rows {
        match (porcelain, w.is_empty()) {
            (true, true) => println!("PROPERTY {label} {ok}"),
            (true, false) => println!("PROPERTY {label} {ok} ({w})"),
            (false, true) => println!("{label:<18} {ok}"),
            (false, false) => println!("{label:<18} {ok}  witness ({w})"),
        }
    }
    Ok(true)
}

fn generate(args: &GenArgs) -> Outcome {
    let c = &args.choice;
    let s: Structure = if let Some(n) = c.powerset {
        BooleanAlgebra::powerset(n)?.into()
    } else if let Some(n) = c.zmod {
        UnitaryRing::zmod(n)?.into()
    } else {
        UnitaryRing::matring2().into()
    };
    let text = emit_structure(&s);
    match &args.output {
        Some(path) => fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(true)
}

fn build(s: &Structure, points: &str, setting: Option<Setting>) -> Result<Interpolant, InputError> {
    let support = parse_points(points, s.names())?;
    let setting = setting.unwrap_or_else(|| default_setting(s));
    let ip = match (setting, s) {
        (Setting::Field, Structure::Ring(r)) => lagrange_field(r, &support)?,
        (Setting::Ring, Structure::Ring(r)) => interpolate_ring(r, &support)?,
        (Setting::BooleanAlgebra, Structure::Algebra(a)) => interpolate_boolean_algebra(a, &support)?,
        (Setting::BooleanPoset, Structure::Algebra(a)) => interpolate_boolean_poset(a.poset(), &support)?,
        (Setting::BooleanPoset, Structure::Poset(p)) => interpolate_boolean_poset(p, &support)?,
        (setting, s) => {
            return Err(InputError(format!("setting {setting} does not apply to a {}", kind(s))));
        }
    };
    Ok(ip)
}

fn interpolate(file: &Path, points: &str, setting: Option<Setting>) -> Outcome {
    let s = load(file)?;
    let names = s.names();
    let ip = build(&s, points, setting)?;
    println!("setting: {}", ip.setting());
    println!("support: {}", ip.support.display(names));
    println!("term: {}", ip.poly.display(names));
    let mut ok = true;
    for x in 0..names.len() {
        let value = ip.eval(s.model(), x)?.value;
        let shown = value.display(names).to_string();
        match ip.support.points().iter().find(|&&(a, _)| a == x) {
            Some(&(_, v)) if value == deltapol::Value::Element(v) => println!("p({})={shown}", names[x]),
            Some(&(_, v)) => {
                ok = false;
                println!("p({})={shown}  MISMATCH, f({})={}", names[x], names[x], names[v]);
            }
            None => println!("p({})={shown}  (off support)", names[x]),
        }
    }
    Ok(ok)
}

fn eval(file: &Path, term: &str, at: &str, setting: Option<Setting>) -> Outcome {
    let s = load(file)?;
    let names = s.names();
    let setting = setting.unwrap_or_else(|| default_setting(&s));
    let term = parse_term(term, setting, names)?;
    let x = s
        .index_of(at)
        .ok_or_else(|| InputError(format!("unknown element `{at}`")))?;
    let r = eval_term(s.model(), &term, x)?;
    println!("{}", r.value.display(names));
    Ok(true)
}

fn print_report(r: &CheckReport, porcelain: bool) {
    if porcelain {
        println!("{}", r.porcelain());
        return;
    }
    println!("{} {} on {} ({} cases)", r.status(), r.check, r.structure, r.cases.len());
    if let Some(w) = &r.witness {
        println!("witness: {w}");
    }
}

fn check(args: &CheckArgs, porcelain: bool) -> Outcome {
    let s = load(&args.file)?;
    let report = match args.prop {
        Prop::Prop1 => check_prop1(&s)?,
        Prop::Distributivity => check_distributivity(&s)?,
        Prop::Interpolation | Prop::Kronecker => {
            let run = |sup: &deltapol::SupportFunction| match args.prop {
                Prop::Interpolation => check_interpolation(&s, sup),
                _ => check_kronecker(&s, sup),
            };
            if let Some(points) = &args.points {
                run(&parse_points(points, s.names())?)?
            } else {
                if args.trials == 0 {
                    return Err(InputError("trials must be at least 1".into()));
                }
                let sizes = match args.size {
                    Some(n) if n == 0 || n > s.len() => {
                        return Err(InputError(format!("support size {n} out of range 1..={}", s.len())))
                    }
                    Some(n) => n..=n,
                    None => 1..=5.min(s.len()),
                };
                // A structure the constructors reject is an input error, not a failed check.
                run(&parse_points(&format!("{0}:{0}", s.names()[0]), s.names())?)?;
                let name = match args.prop {
                    Prop::Interpolation => "interpolation",
                    _ => "kronecker",
                };
                sweep(name, &s, args.trials, sizes, args.seed, run)
            }
        }
    };
    print_report(&report, porcelain);
    Ok(report.passed)
}

fn suite(trials: usize, max_support: usize, seed: u64, porcelain: bool) -> Outcome {
    let config = SuiteConfig {
        trials,
        max_support,
        seed,
        ..SuiteConfig::default()
    };
    let outcome = run_suite(&config)?;
    if porcelain {
        print!("{}", outcome.porcelain());
    } else {
        print!("{}", outcome.summary());
    }
    Ok(outcome.passed())
}
