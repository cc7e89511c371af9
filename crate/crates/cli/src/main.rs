//! `mdsqs`: build, verify, switch and count the objects of the `mdsqs`
//! library from the command line.
//!
//! Exit status: 0 on success, 1 when an object fails verification or a
//! search gives up, 2 on usage errors and unreadable or malformed input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mdsqs::designs::{bbd_build, verify_bbd};
use mdsqs::io::{self, Artifact};
use mdsqs::latin::{
    cube_with_subcube, symmetric_unipotent_ls, verify_latin, verify_symmetric_unipotent,
};
use mdsqs::mds::{linear_mds, verify_mds};
use mdsqs::sqs::{
    boolean_sqs, build_8n2, double_sqs, search_sqs, verify_partial, verify_sqs, Mode, Sqs,
    Sqs8n2Ingredients,
};
use mdsqs::switching::{self, enumerate_switched, lower_bound, select_disjoint, Ratio};
use mdsqs::{oracle, Error, Field, Violation};

#[derive(Parser)]
#[command(
    name = "mdsqs",
    version,
    about = "MDS codes, latin hypercubes, BBDs and Steiner quadruple systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an object and write it in its text format.
    #[command(subcommand)]
    Construct(Construct),
    /// Read a LATIN, CODE, BBD or SQS file and run its verifier.
    Verify { file: PathBuf },
    /// Switch disjoint line subcodes of a linear code.
    Switch(SwitchArgs),
    /// Brute-force counts.
    #[command(subcommand)]
    Count(Count),
    /// Evaluate the lower bound on the number of switched codes.
    Bound(BoundArgs),
    /// Worked examples.
    #[command(subcommand)]
    Demo(Demo),
    /// Assemble SQS(8n+2) from a length-8 distance-7 code.
    BuildSqs(BuildSqsArgs),
    /// Search for an SQS(v) by exact cover.
    SearchSqs(SearchSqsArgs),
}

#[derive(Subcommand)]
enum Construct {
    /// Latin hypercube of order q with a corner subcube of order l.
    Latin {
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 0)]
        l: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Symmetric unipotent square instead (q even, 4l <= q).
        #[arg(long)]
        symmetric: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Linear MDS code over GF(p^k) of length d and distance rho.
    Mds {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        rho: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// BBD on 2q points from a symmetric unipotent square.
    Bbd {
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 0)]
        l: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// SQS(2^a) on GF(2)^a.
    SqsBoolean {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// SQS(2n) from two copies of an SQS(n) and a BBD.
    SqsDouble {
        /// SQS(n) to double; defaults to the Boolean SQS(2^a).
        #[arg(long, conflicts_with = "a")]
        input: Option<PathBuf>,
        #[arg(long)]
        a: Option<u32>,
        /// Subsquare order of the BBD's latin square.
        #[arg(long, default_value_t = 0)]
        l: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Same as `build-sqs`.
    Sqs8n2(BuildSqsArgs),
}

#[derive(Args)]
struct SwitchArgs {
    /// CODE file with a LINEAR header.
    #[arg(long)]
    code: PathBuf,
    /// Number of switched codes to emit.
    #[arg(long)]
    count: usize,
    /// Fraction of the code the counting argument may leave unused.
    #[arg(long, default_value_t = 0.5)]
    eps: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Directory for `switched-<assignment>.code` files.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Subcommand)]
enum Count {
    /// Latin squares of order q.
    Latin {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        reduced: bool,
    },
    /// Ordered pairs of orthogonal latin squares of order q.
    Mols {
        #[arg(long)]
        q: usize,
    },
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    rho: usize,
    /// Either a decimal or `num/den`.
    #[arg(long)]
    eps: String,
}

#[derive(Subcommand)]
enum Demo {
    /// The order-9 switching example.
    PaperExample,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Partial,
    Full,
}

#[derive(Args)]
struct BuildSqsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Partial)]
    mode: ModeArg,
    /// Directory holding `column-0.sqs` .. `column-3.sqs`, each an SQS(2n+2).
    /// Missing files are searched for.
    #[arg(long)]
    ingredients: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Row selections allowed per column search.
    #[arg(long, default_value_t = 200_000_000)]
    budget: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SearchSqsArgs {
    #[arg(long)]
    v: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 200_000_000)]
    budget: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Why a command stopped.
enum Failure {
    /// The object is wrong: exit 1.
    Violation(Violation),
    /// A construction or search could not finish: exit 1.
    Incomplete(Error),
    /// Bad input: exit 2.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Verification(v) => Failure::Violation(v),
            Error::SearchFailed { .. } | Error::BudgetUnreachable { .. } | Error::Missing(_) => {
                Failure::Incomplete(e)
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<Violation> for Failure {
    fn from(v: Violation) -> Failure {
        Failure::Violation(v)
    }
}

type Outcome = std::result::Result<(), Failure>;

fn emit(artifact: &Artifact, out: Option<&Path>) -> Outcome {
    let text = artifact.to_text();
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn construct(c: Construct) -> Outcome {
    match c {
        Construct::Latin {
            q,
            l,
            dim,
            symmetric,
            out,
        } => {
            let cube = if symmetric {
                let s = symmetric_unipotent_ls(q, l)?;
                verify_symmetric_unipotent(&s, l)?;
                s
            } else {
                let c = cube_with_subcube(q, l, dim)?;
                verify_latin(&c)?;
                c
            };
            emit(&Artifact::Latin(cube), out.as_deref())
        }
        Construct::Mds { p, k, d, rho, out } => {
            let code = linear_mds(&Arc::new(Field::new(p, k)?), d, rho)?;
            verify_mds(&code)?;
            emit(&Artifact::Code(code), out.as_deref())
        }
        Construct::Bbd { q, l, out } => {
            let b = bbd_build(q, l)?;
            verify_bbd(&b.bbd)?;
            emit(&Artifact::Bbd(b.bbd), out.as_deref())
        }
        Construct::SqsBoolean { a, out } => {
            let s = boolean_sqs(a)?;
            verify_sqs(&s)?;
            emit(&Artifact::Sqs(s), out.as_deref())
        }
        Construct::SqsDouble { input, a, l, out } => {
            let s = match (input, a) {
                (Some(path), _) => match io::read_file(&path)? {
                    Artifact::Sqs(s) => s,
                    other => {
                        return Err(Failure::Usage(format!(
                            "expected an SQS file, found {}",
                            other.kind()
                        )))
                    }
                },
                (None, Some(a)) => boolean_sqs(a)?,
                (None, None) => return Err(Failure::Usage("give --input or --a".into())),
            };
            verify_sqs(&s)?;
            let bbd = bbd_build(s.v, l)?.bbd;
            let doubled = double_sqs(&s, &s, &bbd)?;
            verify_sqs(&doubled)?;
            emit(&Artifact::Sqs(doubled), out.as_deref())
        }
        Construct::Sqs8n2(args) => build_sqs(args),
    }
}

fn verify(file: &Path) -> Outcome {
    let artifact = io::read_file(file)?;
    artifact.verify()?;
    println!("status=ok kind={}", artifact.kind());
    Ok(())
}

fn parse_ratio(s: &str) -> std::result::Result<Ratio, Failure> {
    let bad = || Failure::Usage(format!("eps {s:?} is not a fraction in (0, 1)"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = n.trim().parse().map_err(|_| bad())?;
            let d = d.trim().parse().map_err(|_| bad())?;
            Ratio::new(n, d).map_err(|_| bad())
        }
        None => Ratio::from_f64(s.trim().parse().map_err(|_| bad())?).map_err(|_| bad()),
    }
}

fn switch(args: SwitchArgs) -> Outcome {
    let code = match io::read_file(&args.code)? {
        Artifact::Code(c) => c,
        other => {
            return Err(Failure::Usage(format!(
                "expected a CODE file, found {}",
                other.kind()
            )))
        }
    };
    let form = code
        .linear_form()
        .ok_or_else(|| Failure::Usage("the CODE file has no LINEAR header".into()))?;
    let p = form.field.characteristic() as u64;
    // fewest components whose nonzero assignments cover the request
    let mut components = 1u32;
    while p.saturating_pow(components) - 1 < args.count as u64 {
        components += 1;
    }
    let eps = Ratio::from_f64(args.eps).map_err(|e| Failure::Usage(e.to_string()))?;
    let selection = select_disjoint(&code, components as usize, eps, args.seed)?;
    fs::create_dir_all(&args.out)
        .map_err(|e| Failure::Usage(format!("{}: {e}", args.out.display())))?;
    println!(
        "components={} guaranteed={} count={}",
        selection.components.len(),
        selection.guaranteed,
        args.count
    );
    for item in enumerate_switched(&code, &selection.components, args.count, args.seed)? {
        let (alphas, switched) = item?;
        verify_mds(&switched)?;
        let index = alphas.iter().rev().fold(0u64, |acc, &a| acc * p + a as u64);
        let path = args.out.join(format!("switched-{index}.code"));
        emit(&Artifact::Code(switched), Some(&path))?;
        println!(
            "assignment={index} alphas={} file={}",
            join(&alphas),
            path.display()
        );
    }
    Ok(())
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn count(c: Count) -> Outcome {
    let start = Instant::now();
    let n = match c {
        Count::Latin { q, reduced } => oracle::count_latin_squares(q, reduced)?,
        Count::Mols { q } => oracle::count_mols_pairs(q)?,
    };
    println!("{n}");
    eprintln!("elapsed_ms={}", start.elapsed().as_millis());
    Ok(())
}

fn bound(args: BoundArgs) -> Outcome {
    let eps = parse_ratio(&args.eps)?;
    let b = lower_bound(args.p, args.k, args.d, args.rho, eps)?;
    println!("m={}", b.m);
    println!("t={}", b.t);
    println!("t_exponent={}", b.t_exponent);
    println!("w={}", b.w);
    println!("w_exponent={}", b.w_exponent);
    println!("ln_w={}", b.ln_w);
    println!("ln_bound={}", b.ln_bound);
    println!("vacuous={}", b.vacuous);
    Ok(())
}

fn print_pair(title: &str, pair: &[[[u32; 9]; 9]; 2]) {
    println!("{title}");
    for x in 0..9 {
        let left: Vec<String> = pair[0][x].iter().map(|s| s.to_string()).collect();
        let right: Vec<String> = pair[1][x].iter().map(|s| s.to_string()).collect();
        println!("  {}    {}", left.join(" "), right.join(" "));
    }
}

fn demo(d: Demo) -> Outcome {
    match d {
        Demo::PaperExample => {
            use switching::example::{
                apply_printed_switch, pair_from_code, recover, AFTER, BEFORE,
            };
            print_pair("before", &BEFORE);
            print_pair("after", &AFTER);
            let ex = recover()?;
            println!("orthogonal=ok pairs=2");
            println!(
                "italic anchor={} direction={}",
                join(ex.italic.anchor()),
                ex.italic.direction()
            );
            println!(
                "bold anchor={} direction={}",
                join(ex.bold.anchor()),
                ex.bold.direction()
            );
            let out = apply_printed_switch(&ex)?;
            if pair_from_code(&out) != AFTER {
                return Err(Failure::Violation(Violation::Shape {
                    reason: "switched pair differs from the printed one".into(),
                }));
            }
            for (i, b) in &ex.reproducing {
                println!("reproduced_by italic={i:?} bold={b:?}");
            }
            println!("status=ok");
            Ok(())
        }
    }
}

fn column_designs(args: &BuildSqsArgs) -> std::result::Result<Vec<Sqs>, Failure> {
    let v = 2 * args.n + 2;
    let mut cols = Vec::with_capacity(4);
    for i in 0..4u64 {
        let file = args
            .ingredients
            .as_ref()
            .map(|d| d.join(format!("column-{i}.sqs")));
        let s = match file.filter(|f| f.exists()) {
            Some(f) => match io::read_file(&f)? {
                Artifact::Sqs(s) => s,
                other => {
                    return Err(Failure::Usage(format!(
                        "{}: expected SQS, found {}",
                        f.display(),
                        other.kind()
                    )))
                }
            },
            None => {
                eprintln!("searching SQS({v}) for column {i}");
                search_sqs(v, args.seed.wrapping_add(i), args.budget)?
            }
        };
        if s.v != v {
            return Err(Failure::Usage(format!(
                "column {i} has order {}, expected {v}",
                s.v
            )));
        }
        cols.push(s);
    }
    Ok(cols)
}

fn build_sqs(args: BuildSqsArgs) -> Outcome {
    let mut ing = Sqs8n2Ingredients::standard(args.n)?;
    let mode = match args.mode {
        ModeArg::Partial => Mode::Partial,
        ModeArg::Full => {
            ing.columns = Some(column_designs(&args)?);
            Mode::Full
        }
    };
    let build = build_8n2(&ing, mode)?;
    println!(
        "v={} r1={} r2={} r3={} r4={}",
        build.v(),
        build.r1.len(),
        build.r2.len(),
        build.r3.len(),
        build.r4.len()
    );
    verify_partial(&build)?;
    println!("cross_column=ok intra_column=empty");
    let design = build.design();
    if mode == Mode::Full {
        verify_sqs(&design)?;
        println!("sqs=ok blocks={}", design.blocks.len());
    }
    match &args.out {
        Some(path) => emit(&Artifact::Sqs(design), Some(path)),
        None => Ok(()),
    }
}

fn search(args: SearchSqsArgs) -> Outcome {
    let s = search_sqs(args.v, args.seed, args.budget)?;
    verify_sqs(&s)?;
    emit(&Artifact::Sqs(s), args.out.as_deref())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct(c) => construct(c),
        Command::Verify { file } => verify(&file),
        Command::Switch(a) => switch(a),
        Command::Count(c) => count(c),
        Command::Bound(a) => bound(a),
        Command::Demo(d) => demo(d),
        Command::BuildSqs(a) => build_sqs(a),
        Command::SearchSqs(a) => search(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation(v)) => {
            println!("status=fail {v}");
            ExitCode::from(1)
        }
        Err(Failure::Incomplete(e)) => {
            eprintln!("error: {e}");
            println!("status=incomplete");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
