//! Command-line front end: exact C2-algebra and Zhu-algebra computations for
//! sl_n, identity verification suites, and the brute-force oracle, with
//! text, csv, and json output.
//!
//! Exit codes: 0 all checks pass, 1 verification failure or internal
//! mismatch, 2 usage error, 3 resource budget exceeded.

mod output;

use c2zhu::formula::{
    b_identity_sides, bijection_check, c2_graded_decomposition, c2_graded_dim, c2_table, c_dim,
    c_graded_dim, cominuscule_nodes, rect_branch, zhu_dim, CartanType, FormulaError,
};
use c2zhu::oracle::{Oracle, OracleError, DEFAULT_BLOCK_BUDGET};
use c2zhu::tensor::char_decompose;
use c2zhu::weights::{sl_dim, weyl_dim, GlWeight, Partition};
use clap::{Parser, Subcommand, ValueEnum};
use num::{BigUint, Zero};
use output::{render, Format, OutputRecord, Row, Verdict};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "c2zhu",
    version,
    about = "Exact graded dimensions and decompositions of C2-algebras and Zhu algebras for sl_n"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Option<Format>,
    /// Include elapsed milliseconds in the record (off by default so that
    /// output is byte-identical across runs)
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Suite {
    Dual,
    Sum,
    Bijection,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum OracleMode {
    Dims,
    Characters,
}

#[derive(Subcommand)]
enum Command {
    /// Zhu dimension, box-algebra dimension, and the graded dimension table
    Dims {
        /// Rank n of sl_n (n >= 2)
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
        /// Level k
        #[arg(long)]
        k: u32,
    },
    /// Irreducible decomposition of one graded piece of the C2-algebra
    Decompose {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Degree of the graded piece
        #[arg(long)]
        m: usize,
    },
    /// Run an identity suite over the grid 2..=n-max, 0..=k-max
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long = "n-max", value_parser = clap::value_parser!(u32).range(2..))]
        n_max: u32,
        #[arg(long = "k-max")]
        k_max: u32,
    },
    /// Compare the brute-force quotient construction against the formulas
    Oracle {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Highest degree to check (default n·k)
        #[arg(long = "max-degree")]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value = "dims")]
        mode: OracleMode,
    },
    /// Branch the rectangular gl_N module V((k^i)) to gl_i ⊕ gl_{N-i}
    Branch {
        #[arg(long = "N", value_parser = clap::value_parser!(u32).range(2..))]
        big_n: u32,
        #[arg(long)]
        i: u32,
        #[arg(long)]
        k: u32,
    },
    /// List the co-minuscule nodes of a Dynkin diagram
    Cominuscule {
        /// Cartan type letter A..G
        #[arg(long = "type")]
        cartan: String,
        #[arg(long)]
        rank: usize,
    },
}

enum CliError {
    Usage(String),
    Failure(String),
    Budget(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
            CliError::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Failure(m) | CliError::Budget(m) => m,
        }
    }
}

impl From<FormulaError> for CliError {
    fn from(e: FormulaError) -> Self {
        match e {
            FormulaError::InvalidCartan { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded { .. } | OracleError::DegreeTooLarge { .. } => {
                CliError::Budget(e.to_string())
            }
            OracleError::ClosureDimensionMismatch { .. } => CliError::Failure(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli.command) {
        Ok(mut record) => {
            if cli.timing {
                record.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            render(&record, cli.format.unwrap_or(Format::Text));
            if record.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(command: &Command) -> Result<OutputRecord, CliError> {
    match command {
        Command::Dims { n, k } => cmd_dims(*n as usize, *k),
        Command::Decompose { n, k, m } => cmd_decompose(*n as usize, *k, *m),
        Command::Verify { suite, n_max, k_max } => cmd_verify(*suite, *n_max as usize, *k_max),
        Command::Oracle { n, k, max_degree, mode } => {
            cmd_oracle(*n as usize, *k, *max_degree, *mode)
        }
        Command::Branch { big_n, i, k } => cmd_branch(*big_n as usize, *i as usize, *k),
        Command::Cominuscule { cartan, rank } => cmd_cominuscule(cartan, *rank),
    }
}

fn cmd_dims(n: usize, k: u32) -> Result<OutputRecord, CliError> {
    let mut record = OutputRecord::new("dims");
    record.param("n", n).param("k", k);
    let table = c2_table(n, k)?;
    for (m, dim) in table.table.iter() {
        record.rows.push(Row { m: Some(m), dim: Some(dim.to_string()), ..Default::default() });
    }
    record.total("zhu_dim", zhu_dim(n, k));
    record.total("c_dim", c_dim(n, k));
    record.total("graded_total", table.table.total());
    record.total("max_degree", table.table.max_degree());
    let pass = table.table.total() == zhu_dim(n, k);
    record.verdicts.push(Verdict::new(
        "graded total equals Zhu dimension",
        pass,
        format!("graded={} zhu={}", table.table.total(), zhu_dim(n, k)),
    ));
    Ok(record)
}

fn cmd_decompose(n: usize, k: u32, m: usize) -> Result<OutputRecord, CliError> {
    let mut record = OutputRecord::new("decompose");
    record.param("n", n).param("k", k).param("m", m);
    let decomposition = c2_graded_decomposition(n, k, m)?;
    for (w, mult) in decomposition.entries() {
        record.rows.push(Row {
            weight: Some(w.partition().parts().to_vec()),
            mult: Some(mult),
            dim: Some(sl_dim(w).to_string()),
            ..Default::default()
        });
    }
    let total = decomposition.virtual_dim();
    let expected = c2_graded_dim(n, k, m)?;
    record.total("dim", &total);
    record.total("summands", record.rows.len());
    record.verdicts.push(Verdict::new(
        "decomposition dimension matches graded dimension",
        total == num::BigInt::from(expected.clone()),
        format!("decomposition={total} formula={expected}"),
    ));
    Ok(record)
}

fn cmd_verify(suite: Suite, n_max: usize, k_max: u32) -> Result<OutputRecord, CliError> {
    let mut record = OutputRecord::new("verify");
    record
        .param("suite", format!("{suite:?}").to_lowercase())
        .param("n_max", n_max)
        .param("k_max", k_max);
    for n in 2..=n_max {
        for k in 0..=k_max {
            if matches!(suite, Suite::Dual | Suite::All) {
                let (lhs, rhs) = b_identity_sides(n, k);
                record.verdicts.push(Verdict::new(
                    format!("dual n={n} k={k}"),
                    lhs == rhs,
                    format!("lhs={lhs} rhs={rhs}"),
                ));
            }
            if matches!(suite, Suite::Sum | Suite::All) {
                let direct = c_dim(n, k);
                let level_sum: BigUint = (0..=k).map(|j| zhu_dim(n, j)).sum();
                record.verdicts.push(Verdict::new(
                    format!("sum n={n} k={k}"),
                    direct == level_sum,
                    format!("c_dim={direct} level_sum={level_sum}"),
                ));
                let recursion = verify_recursion(n, k)?;
                record.verdicts.push(recursion);
            }
            if matches!(suite, Suite::Bijection | Suite::All) {
                let ok = bijection_check(n, k);
                record.verdicts.push(Verdict::new(
                    format!("bijection n={n} k={k}"),
                    ok,
                    if ok { "parameter sets agree" } else { "parameter sets differ" },
                ));
            }
        }
    }
    Ok(record)
}

fn verify_recursion(n: usize, k: u32) -> Result<Verdict, CliError> {
    for m in 0..=n * k as usize {
        let direct = c_graded_dim(n, k, m);
        let mut recursive = BigUint::zero();
        for i in 0..=m.min(k as usize) {
            recursive += c2_graded_dim(n, k - i as u32, m - i)?;
        }
        if direct != recursive {
            return Ok(Verdict::new(
                format!("sum-recursion n={n} k={k}"),
                false,
                format!("first mismatch at m={m}: direct={direct} recursive={recursive}"),
            ));
        }
    }
    Ok(Verdict::new(
        format!("sum-recursion n={n} k={k}"),
        true,
        format!("all degrees 0..={}", n * k as usize),
    ))
}

fn block_budget() -> Result<usize, CliError> {
    match std::env::var("C2ZHU_BUDGET") {
        Err(_) => Ok(DEFAULT_BLOCK_BUDGET),
        Ok(s) => s.parse().map_err(|_| {
            CliError::Usage(format!("C2ZHU_BUDGET must be a positive integer, got {s:?}"))
        }),
    }
}

fn cmd_oracle(
    n: usize,
    k: u32,
    max_degree: Option<usize>,
    mode: OracleMode,
) -> Result<OutputRecord, CliError> {
    let mut record = OutputRecord::new("oracle");
    let top = max_degree.unwrap_or(n * k as usize);
    record
        .param("n", n)
        .param("k", k)
        .param("max_degree", top)
        .param("mode", format!("{mode:?}").to_lowercase());
    let oracle = Oracle::with_budget(n, k, block_budget()?)?;
    let mut oracle_total = BigUint::zero();
    for m in 0..=top {
        let analysis = oracle.degree_analysis(m)?;
        oracle_total += &analysis.dim;
        match mode {
            OracleMode::Dims => {
                let formula = c2_graded_dim(n, k, m)?;
                let is_match = analysis.dim == formula;
                record.rows.push(Row {
                    m: Some(m),
                    oracle: Some(analysis.dim.to_string()),
                    formula: Some(formula.to_string()),
                    status: Some(if is_match { "match" } else { "MISMATCH" }.to_string()),
                    ..Default::default()
                });
                record.verdicts.push(Verdict::new(
                    format!("degree {m}"),
                    is_match,
                    format!("oracle={} formula={formula}", analysis.dim),
                ));
            }
            OracleMode::Characters => {
                let from_oracle = char_decompose(&analysis.character)
                    .map_err(|e| CliError::Failure(e.to_string()))?;
                let from_formula = c2_graded_decomposition(n, k, m)?;
                let is_match = from_oracle == from_formula;
                record.rows.push(Row {
                    m: Some(m),
                    oracle: Some(from_oracle.to_string()),
                    formula: Some(from_formula.to_string()),
                    status: Some(if is_match { "match" } else { "MISMATCH" }.to_string()),
                    ..Default::default()
                });
                record.verdicts.push(Verdict::new(
                    format!("degree {m}"),
                    is_match,
                    format!("oracle={from_oracle} formula={from_formula}"),
                ));
            }
        }
    }
    record.total("oracle_total", &oracle_total);
    record.total("zhu_dim", zhu_dim(n, k));
    Ok(record)
}

fn cmd_branch(big_n: usize, i: usize, k: u32) -> Result<OutputRecord, CliError> {
    if i < 1 || i >= big_n {
        return Err(CliError::Usage(format!(
            "need 1 <= i <= N-1, got i={i} with N={big_n}"
        )));
    }
    let mut record = OutputRecord::new("branch");
    record.param("N", big_n).param("i", i).param("k", k);
    let rows = rect_branch(big_n, i, k);
    let mut total = BigUint::zero();
    for (lambda, (left, right)) in &rows {
        total += left * right;
        record.rows.push(Row {
            weight: Some(lambda.parts().to_vec()),
            dim_left: Some(left.to_string()),
            dim_right: Some(right.to_string()),
            dim: Some((left * right).to_string()),
            ..Default::default()
        });
    }
    let rect = weyl_dim(
        &GlWeight::new(big_n, Partition::new(vec![k; i]).expect("rectangle is a partition"))
            .expect("rectangle fits rank"),
    );
    record.total("total", &total);
    record.total("rectangle_dim", &rect);
    record.verdicts.push(Verdict::new(
        "dimension sum",
        total == rect,
        format!("sum={total} rectangle={rect}"),
    ));
    Ok(record)
}

fn cmd_cominuscule(cartan: &str, rank: usize) -> Result<OutputRecord, CliError> {
    let letter = match cartan.chars().next() {
        Some(c) if cartan.len() == 1 => c,
        _ => return Err(CliError::Usage(format!("invalid Cartan type {cartan:?}"))),
    };
    let cartan_type = CartanType::from_letter(letter)
        .ok_or_else(|| CliError::Usage(format!("invalid Cartan type {cartan:?}")))?;
    let mut record = OutputRecord::new("cominuscule");
    record.param("type", cartan_type.letter().to_string()).param("rank", rank);
    let nodes = cominuscule_nodes(cartan_type, rank)?;
    for node in &nodes {
        record.rows.push(Row { node: Some(*node), ..Default::default() });
    }
    record.total("count", nodes.len());
    Ok(record)
}
