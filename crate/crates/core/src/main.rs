use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hyperplitz::complex_rep::{chi1_with, Layout};
use hyperplitz::io::{
    self, cmat_to_json, hamilton_toeplitz_from_json, hamilton_toeplitz_to_json, matrix_from_json,
    matrix_to_json, segre_toeplitz_from_json, segre_toeplitz_to_json, MatrixDoc, PairJson, RingTag,
};
use hyperplitz::normality::{classify_normal, dense_commutator, generate_normal, Strategy};
use hyperplitz::product::{displacement_multiply_counted, zero_product_classify};
use hyperplitz::sample;
use hyperplitz::toeplitz::is_toeplitz;
use hyperplitz::verify::{self, RunConfig, Theorem};
use hyperplitz::{Error, HQuat, Kappa, Mat, Rational, Result, SQuat, SegreConj, ToeplitzGen};

const DEFAULT_MAX_N: usize = 512;

#[derive(Parser)]
#[command(name = "hyperplitz", version, about = "Quaternion Toeplitz algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Test a property of the matrix in FILE.
    Check {
        property: Property,
        #[arg(long)]
        kappa: Option<u8>,
        file: PathBuf,
    },
    /// Run a seeded verification campaign.
    Verify {
        theorem: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long)]
        exhaustive: bool,
        /// Components are drawn from [-bound, bound].
        #[arg(long, default_value_t = 5)]
        bound: i64,
        /// Restrict normal-classification to these κ (repeatable).
        #[arg(long)]
        kappa: Vec<u8>,
        /// Also write the full report, with wall time, to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a generated instance as JSON.
    Generate {
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kappa: Option<u8>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        bound: i64,
        #[arg(long, value_enum, default_value_t = StrategyArg::KappaCirculant)]
        strategy: StrategyArg,
    },
    /// Complex representations.
    Rep {
        which: RepKind,
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = LayoutArg::Interleaved)]
        layout: LayoutArg,
    },
    /// Multiply two matrices.
    Multiply {
        method: Method,
        file_t: PathBuf,
        file_u: PathBuf,
        #[arg(long)]
        count_ops: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Toeplitz,
    Normal,
    ZeroProduct,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    RandomToeplitz,
    Normal,
    ZeroProductPair,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    RealSymmetric,
    KappaCirculant,
    ExhaustiveGrid,
    RandomSearch,
}

#[derive(Clone, Copy, ValueEnum)]
enum RepKind {
    Chi1,
}

#[derive(Clone, Copy, ValueEnum)]
enum LayoutArg {
    Interleaved,
    Block,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Naive,
    Displacement,
}

/// Exit status of a command that ran to completion.
enum Verdict {
    Holds,
    Fails,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Verdict::Holds) => ExitCode::SUCCESS,
        Ok(Verdict::Fails) => ExitCode::from(1),
        Err(Error::SearchExhausted(n)) => {
            eprintln!("hyperplitz: {}", Error::SearchExhausted(n));
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("hyperplitz: {e}");
            ExitCode::from(2)
        }
    }
}

fn max_n() -> Result<usize> {
    match std::env::var("HYPERPLITZ_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("HYPERPLITZ_MAX_N must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn cap(n: usize) -> Result<()> {
    let cap = max_n()?;
    if n > cap {
        Err(Error::SizeCap { n, cap })
    } else {
        Ok(())
    }
}

fn kappa(k: Option<u8>) -> Result<Kappa> {
    k.map_or(Ok(Kappa::One), Kappa::try_from)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_doc(path: &Path) -> Result<MatrixDoc> {
    let doc: MatrixDoc = io::from_str(&read(path)?)?;
    cap(doc.order())?;
    Ok(doc)
}

fn emit(v: &impl serde::Serialize) {
    println!("{}", io::to_line(v));
}

fn verdict(holds: bool) -> Verdict {
    if holds {
        Verdict::Holds
    } else {
        Verdict::Fails
    }
}

fn run(cli: Cli) -> Result<Verdict> {
    match cli.cmd {
        Cmd::Check { property, kappa: k, file } => match property {
            Property::Toeplitz => check_toeplitz(&read_doc(&file)?, k),
            Property::Normal => check_normal(&read_doc(&file)?, kappa(k)?),
            Property::ZeroProduct => check_zero_product(&file),
        },
        Cmd::Verify {
            theorem,
            seed,
            trials,
            n_min,
            n_max,
            exhaustive,
            bound,
            kappa: ks,
            out,
        } => {
            let theorem: Theorem = theorem.parse()?;
            cap(n_max)?;
            let kappas = if ks.is_empty() {
                Kappa::ALL.to_vec()
            } else {
                ks.into_iter().map(Kappa::try_from).collect::<Result<_>>()?
            };
            let cfg = RunConfig {
                seed,
                trials,
                n_min,
                n_max,
                bound,
                kappas,
                exhaustive,
            };
            let report = verify::run(theorem, &cfg)?;
            emit(&report.body);
            eprintln!("wall time: {} ms", report.wall_time_ms);
            if let Some(path) = out {
                std::fs::write(&path, io::to_line(&report) + "\n")
                    .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            }
            Ok(verdict(report.all_passed()))
        }
        Cmd::Generate {
            kind,
            n,
            kappa: k,
            seed,
            bound,
            strategy,
        } => {
            cap(n)?;
            generate(kind, n, k, seed, bound, strategy)
        }
        Cmd::Rep { which: RepKind::Chi1, file, layout } => {
            let m = io::hamilton_dense::<Rational>(&read_doc(&file)?)?;
            let layout = match layout {
                LayoutArg::Interleaved => Layout::Interleaved,
                LayoutArg::Block => Layout::Block,
            };
            emit(&cmat_to_json(&chi1_with(&m, layout)));
            Ok(Verdict::Holds)
        }
        Cmd::Multiply {
            method,
            file_t,
            file_u,
            count_ops,
        } => multiply(method, &read_doc(&file_t)?, &read_doc(&file_u)?, count_ops),
    }
}

fn check_toeplitz(doc: &MatrixDoc, k: Option<u8>) -> Result<Verdict> {
    let (holds, generators) = match doc.ring() {
        RingTag::H => {
            let m = io::hamilton_dense::<Rational>(doc)?;
            let g = is_toeplitz(&m, ());
            (g.is_some(), g.map(|g| json!(hamilton_toeplitz_to_json(&g))))
        }
        RingTag::S => {
            let kap = k.map(Kappa::try_from).transpose()?;
            let (m, conj) = match doc {
                MatrixDoc::Toeplitz(t) => {
                    let g = segre_toeplitz_from_json::<Rational>(t, kap)?;
                    (g.dense(), g.conj())
                }
                MatrixDoc::Dense(d) => (
                    matrix_from_json::<SQuat>(d, RingTag::S)?,
                    SegreConj::Kappa(kap.unwrap_or(Kappa::One)),
                ),
            };
            let g = is_toeplitz(&m, conj);
            (g.is_some(), g.map(|g| json!(segre_toeplitz_to_json(&g))))
        }
    };
    emit(&json!({ "toeplitz": holds, "generators": generators }));
    Ok(verdict(holds))
}

fn check_normal(doc: &MatrixDoc, kappa: Kappa) -> Result<Verdict> {
    let g = match doc {
        MatrixDoc::Toeplitz(t) => Some(segre_toeplitz_from_json::<Rational>(t, Some(kappa))?),
        MatrixDoc::Dense(d) => {
            let m = matrix_from_json::<SQuat>(d, RingTag::S)?;
            match is_toeplitz(&m, SegreConj::Kappa(kappa)) {
                Some(g) => Some(g),
                None => {
                    // Not Toeplitz: only the commutator applies.
                    let zero = dense_commutator(&m, kappa)?.is_zero();
                    emit(&json!({ "kappa": kappa, "toeplitz": false, "commutator_zero": zero }));
                    return Ok(verdict(zero));
                }
            }
        }
    };
    let v = classify_normal(&g.expect("set above"), kappa);
    emit(&v);
    Ok(verdict(v.commutator_zero))
}

fn check_zero_product(file: &Path) -> Result<Verdict> {
    let pair: PairJson = io::from_str(&read(file)?)?;
    cap(pair.t.n.max(pair.u.n))?;
    let t = hamilton_toeplitz_from_json::<Rational>(&pair.t)?;
    let u = hamilton_toeplitz_from_json::<Rational>(&pair.u)?;
    let report = zero_product_classify(&t, &u)?;
    emit(&report);
    Ok(verdict(report.dense_zero))
}

fn generate(
    kind: GenKind,
    n: usize,
    k: Option<u8>,
    seed: u64,
    bound: i64,
    strategy: StrategyArg,
) -> Result<Verdict> {
    if n == 0 {
        return Err(Error::Config("n must be at least 1".into()));
    }
    let mut rng = sample::trial_rng(seed, 0);
    match kind {
        GenKind::RandomToeplitz => match k {
            None => {
                let g: ToeplitzGen<HQuat> = sample::toeplitz(&mut rng, n, bound, (), false);
                emit(&hamilton_toeplitz_to_json(&g));
            }
            Some(k) => {
                let conj = SegreConj::Kappa(Kappa::try_from(k)?);
                let g: ToeplitzGen<SQuat> = sample::toeplitz(&mut rng, n, bound, conj, false);
                emit(&segre_toeplitz_to_json(&g));
            }
        },
        GenKind::Normal => {
            let strategy = match strategy {
                StrategyArg::RealSymmetric => Strategy::RealSymmetric,
                StrategyArg::KappaCirculant => Strategy::KappaCirculant,
                StrategyArg::ExhaustiveGrid => Strategy::ExhaustiveGrid,
                StrategyArg::RandomSearch => Strategy::RandomSearch,
            };
            let g = generate_normal::<Rational>(n, kappa(k)?, strategy, seed)?;
            emit(&segre_toeplitz_to_json(&g));
        }
        GenKind::ZeroProductPair => {
            if n < 2 {
                return Err(Error::Config("zero-product-pair needs n >= 2".into()));
            }
            // Lower triangular with zero diagonal; one factor keeps only its
            // last subdiagonal, which the other factor's shift pushes out.
            let zero = vec![HQuat::default(); n];
            let full: Vec<HQuat> = (0..n).map(|_| sample::nonzero_quat(&mut rng, bound)).collect();
            let mut last = zero.clone();
            last[n - 1] = sample::nonzero_quat(&mut rng, bound);
            let (p, q) = if rand::Rng::gen_bool(&mut rng, 0.5) {
                (full, last)
            } else {
                (last, full)
            };
            let t = ToeplitzGen::new(HQuat::default(), p, zero.clone(), ())?;
            let u = ToeplitzGen::new(HQuat::default(), q, zero, ())?;
            emit(&PairJson {
                t: hamilton_toeplitz_to_json(&t),
                u: hamilton_toeplitz_to_json(&u),
            });
        }
    }
    Ok(Verdict::Holds)
}

fn toeplitz_of(doc: &MatrixDoc) -> Result<ToeplitzGen<HQuat>> {
    match doc {
        MatrixDoc::Toeplitz(t) => hamilton_toeplitz_from_json(t),
        MatrixDoc::Dense(d) => is_toeplitz(&matrix_from_json::<HQuat>(d, RingTag::H)?, ())
            .ok_or_else(|| Error::HypothesisViolated("displacement multiply needs Toeplitz inputs".into())),
    }
}

fn multiply(method: Method, t: &MatrixDoc, u: &MatrixDoc, count_ops: bool) -> Result<Verdict> {
    let mut ops = 0u64;
    let product: Mat<HQuat> = match method {
        Method::Naive => {
            let a = io::hamilton_dense::<Rational>(t)?;
            let b = io::hamilton_dense::<Rational>(u)?;
            a.mul_counted(&b, &mut ops)?
        }
        Method::Displacement => {
            let (a, b) = (toeplitz_of(t)?, toeplitz_of(u)?);
            displacement_multiply_counted(&a, &b, &mut ops)?
        }
    };
    let mut out = json!({ "product": matrix_to_json(&product, RingTag::H) });
    if count_ops {
        out["scalar_mults"] = Value::from(ops);
    }
    emit(&out);
    Ok(Verdict::Holds)
}
