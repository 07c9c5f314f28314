//! Command-line front end: parse program files, dispatch to the library,
//! render results.
//!
//! Results go to the output stream, one value per line; diagnostics go to
//! the error stream. Exit codes: 0 success (and "yes" verdicts), 1 negative
//! `dual-canonical` verdict, 2 parse error, 3 semantic error (killed or
//! blocked programs, mismatched boundaries), 4 resource guard.

use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use slnweb::canonical::{canonical_tableau, is_dual_canonical_with};
use slnweb::error::Error;
use slnweb::evaluation::{ev_by_shape_with, ev_with, kuperberg_pair_with, EvalOptions};
use slnweb::links::{compile_braid_closure, expand, normalization, LinkProgram};
use slnweb::webs::{render_state_string, tensor_expansion, FProgram};
use slnweb::{LaurentPoly, Sign};

/// Computes sl(n) web invariants: evaluations, canonical fillings,
/// dual-canonicality, pairings and colored link polynomials.
#[derive(Parser)]
#[command(name = "slnweb", version, about)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for summand-parallel link evaluation (default: 1,
    /// sequential).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Abort when the evaluation holds more than this many live shapes.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_states: usize,
}

#[derive(Args)]
struct FileArg {
    /// Path to a program file.
    file: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a closed web program to a Laurent polynomial.
    Eval(FileArg),
    /// Print the per-shape polynomials of the evaluation.
    Shapes(FileArg),
    /// Print the boundary states with their elementary-tensor coefficients.
    Flows(FileArg),
    /// Print the canonical filling and its degree.
    Canonical(FileArg),
    /// Decide dual-canonicality; exits 0 for yes, 1 for no.
    DualCanonical(FileArg),
    /// Kuperberg pairing of two web programs with equal boundary.
    Pair { left: PathBuf, right: PathBuf },
    /// Evaluate a link program (crossings allowed).
    Link(FileArg),
    /// Normalized colored Reshetikhin-Turaev polynomial of a link program.
    Rt(FileArg),
    /// Emit the link program of a colored braid closure.
    CompileBraid {
        /// Ambient rank n.
        #[arg(long)]
        n: usize,
        /// Strand colors, comma separated, e.g. `1,2`.
        #[arg(long, value_delimiter = ',')]
        colors: Vec<usize>,
        /// Braid letters bottom to top, e.g. `1+ 1+` or `2-`.
        word: Vec<String>,
    },
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let opts = EvalOptions {
        max_live_shapes: cli.max_states,
    };
    let jobs = cli.jobs.max(1);
    let result = dispatch(&cli.command, &opts, jobs, out);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        Error::ResourceExhausted { .. } => 4,
        _ => 3,
    }
}

fn dispatch(
    cmd: &Command,
    opts: &EvalOptions,
    jobs: usize,
    out: &mut dyn Write,
) -> Result<i32, Error> {
    match cmd {
        Command::Eval(f) => {
            let p = load_fprogram(&f.file)?;
            emit(out, ev_with::<i64>(&p, opts)?);
            Ok(0)
        }
        Command::Shapes(f) => {
            let p = load_fprogram(&f.file)?;
            for (shape, poly) in ev_by_shape_with::<i64>(&p, opts)? {
                emit(out, format!("{shape} : {poly}"));
            }
            Ok(0)
        }
        Command::Flows(f) => {
            let p = load_fprogram(&f.file)?;
            for (state, coeff) in tensor_expansion::<i64>(&p)? {
                emit(out, format!("{} : {coeff}", render_state_string(&state)));
            }
            Ok(0)
        }
        Command::Canonical(f) => {
            let p = load_fprogram(&f.file)?;
            let t = canonical_tableau(&p)?;
            emit(out, &t);
            emit(out, format!("degree: {}", t.bkw_degree()));
            Ok(0)
        }
        Command::DualCanonical(f) => {
            let p = load_fprogram(&f.file)?;
            if is_dual_canonical_with(&p, opts)? {
                emit(out, "dual-canonical");
                Ok(0)
            } else {
                let e = ev_with::<i64>(&p, opts)?;
                emit(
                    out,
                    format!(
                        "not dual-canonical: evaluation {} does not lie in 1 + qN[q]",
                        e
                    ),
                );
                Ok(1)
            }
        }
        Command::Pair { left, right } => {
            let u = load_fprogram(left)?;
            let v = load_fprogram(right)?;
            emit(out, kuperberg_pair_with::<i64>(&u, &v, opts)?);
            Ok(0)
        }
        Command::Link(f) => {
            let lp = load_link_program(&f.file)?;
            emit(out, ev_link_parallel(&lp, opts, jobs)?);
            Ok(0)
        }
        Command::Rt(f) => {
            let lp = load_link_program(&f.file)?;
            let (sign, qpow) = normalization(&lp)?;
            emit(out, ev_link_parallel(&lp, opts, jobs)?.scale(sign, qpow)?);
            Ok(0)
        }
        Command::CompileBraid { n, colors, word } => {
            let word = parse_word(word)?;
            let lp = compile_braid_closure(*n, colors, &word)?;
            let _ = write!(out, "{lp}");
            Ok(0)
        }
    }
}

/// Signed, q-shifted sum over expanded summands; with `jobs > 1` the summand
/// evaluations run on a thread pool and are reduced in input order, so the
/// output is identical to the sequential one.
fn ev_link_parallel(
    lp: &LinkProgram,
    opts: &EvalOptions,
    jobs: usize,
) -> Result<LaurentPoly, Error> {
    let summands = expand(lp)?;
    for s in &summands {
        if !s.program.is_closed()? {
            return Err(Error::Invalid(
                "expanded summand is not closed; the diagram is not a link".into(),
            ));
        }
    }
    let values: Vec<Result<LaurentPoly, Error>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
        pool.install(|| {
            use rayon::prelude::*;
            summands
                .par_iter()
                .map(|s| ev_with::<i64>(&s.program, opts))
                .collect()
        })
    } else {
        summands
            .iter()
            .map(|s| ev_with::<i64>(&s.program, opts))
            .collect()
    };
    let mut total = LaurentPoly::zero();
    for (s, v) in summands.iter().zip(values) {
        total = total.checked_add(&v?.scale(s.sign, s.qshift)?)?;
    }
    Ok(total)
}

fn parse_word(tokens: &[String]) -> Result<Vec<(usize, Sign)>, Error> {
    tokens
        .iter()
        .map(|t| {
            let (digits, sign) = t
                .strip_suffix('+')
                .map(|d| (d, Sign::Plus))
                .or_else(|| t.strip_suffix('-').map(|d| (d, Sign::Minus)))
                .ok_or_else(|| {
                    Error::Invalid(format!("bad braid letter `{t}`: expected e.g. `1+` or `2-`"))
                })?;
            let strand: usize = digits
                .parse()
                .map_err(|_| Error::Invalid(format!("bad strand index in `{t}`")))?;
            Ok((strand, sign))
        })
        .collect()
}

fn load_fprogram(path: &PathBuf) -> Result<FProgram, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    text.parse()
}

fn load_link_program(path: &PathBuf) -> Result<LinkProgram, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    text.parse()
}

fn emit(out: &mut dyn Write, value: impl Display) {
    let _ = writeln!(out, "{value}");
}
