use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rigid_invariants::blocks::fingerprint_of_representative;
use rigid_invariants::catalog::{
    build_catalog, find_dual_candidates, group_classes, verify_implication, write_jsonl, ClassKey,
};
use rigid_invariants::fingerprint::{
    combine, condition_ii_delta, fingerprint_trace, Combine, Conventions, Fingerprint,
};
use rigid_invariants::represent::{mu_from_fingerprint, reconstruct_from_symbol, symbol_of_mu_r};
use rigid_invariants::rigidity::{enumerate_pairs, enumerate_rigid};
use rigid_invariants::symbol::symbol_of_pair;
use rigid_invariants::{Error, Family, OperatorPair, Symbol, TheoryLabel};

#[derive(Parser)]
#[command(
    name = "rigid",
    about = "Symbols and fingerprints of rigid operators in B, C and D"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum By {
    Symbol,
    Fingerprint,
}

impl From<By> for ClassKey {
    fn from(b: By) -> Self {
        match b {
            By::Symbol => ClassKey::Symbol,
            By::Fingerprint => ClassKey::Fingerprint,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List rigid pairs, or rigid partitions with --partitions-only
    Enumerate {
        #[arg(long)]
        theory: TheoryLabel,
        #[arg(long)]
        partitions_only: bool,
    },
    /// Symbol, fingerprint, μ and τ of one pair
    Invariants {
        #[arg(long)]
        theory: TheoryLabel,
        #[arg(long)]
        pair: String,
    },
    /// Group the pairs of a theory by an invariant
    Classes {
        #[arg(long)]
        theory: TheoryLabel,
        #[arg(long, value_enum, default_value = "symbol")]
        by: By,
    },
    /// Representative pair of a symbol, or μ_r of a fingerprint
    Represent {
        #[arg(long)]
        theory: TheoryLabel,
        #[arg(
            long,
            conflicts_with = "from_fingerprint",
            required_unless_present = "from_fingerprint"
        )]
        from_symbol: Option<Symbol>,
        #[arg(long)]
        from_fingerprint: Option<Fingerprint>,
    },
    /// Check that equal symbols force equal fingerprints
    Verify {
        /// `all`, a family letter, or a single theory such as B6
        #[arg(long, default_value = "all")]
        theory: String,
        #[arg(long, default_value_t = 6)]
        max_rank: u32,
        /// Also fail on condition-(ii) differences
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Match B and C classes of one rank
    Duals {
        #[arg(long)]
        rank: u32,
        #[arg(long, value_enum, default_value = "symbol")]
        by: By,
    },
    /// Write the JSON Lines catalog of a theory
    Catalog {
        #[arg(long)]
        theory: TheoryLabel,
        #[arg(long)]
        out: Option<String>,
    },
}

enum Failure {
    Input(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn theories(selector: &str, max_rank: u32) -> Result<Vec<TheoryLabel>, Failure> {
    let families: Vec<Family> = match selector.to_ascii_uppercase().as_str() {
        "ALL" => Family::ALL.to_vec(),
        "B" => vec![Family::B],
        "C" => vec![Family::C],
        "D" => vec![Family::D],
        _ => return Ok(vec![selector.parse()?]),
    };
    Ok(families
        .into_iter()
        .flat_map(|f| (1..=max_rank).map(move |r| TheoryLabel::new(f, r)))
        .collect())
}

fn run(command: Command) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match command {
        Command::Enumerate {
            theory,
            partitions_only,
        } => {
            if partitions_only {
                for p in enumerate_rigid(theory) {
                    writeln!(out, "{p}")?;
                }
            } else {
                for pair in enumerate_pairs(theory) {
                    writeln!(out, "{pair}")?;
                }
            }
        }
        Command::Invariants { theory, pair } => {
            let pair = OperatorPair::parse(theory, &pair)?;
            let trace = fingerprint_trace(&pair, Conventions::default())?;
            let blocks = fingerprint_of_representative(&pair)?;
            let combined = combine(&pair, Combine::PartwiseSum);
            writeln!(out, "pair: {pair}")?;
            writeln!(out, "symbol: {}", symbol_of_pair(&pair)?)?;
            writeln!(out, "lambda: {}", trace.lambda)?;
            writeln!(out, "mu: {}", trace.mu)?;
            writeln!(out, "tau: {}", trace.tau)?;
            writeln!(out, "fingerprint: {}", trace.fingerprint)?;
            writeln!(
                out,
                "signature: {:?}/{:?}",
                pair.signature.first, pair.signature.second
            )?;
            let names: Vec<_> = blocks.blocks.iter().map(|b| b.operator.as_str()).collect();
            writeln!(out, "blocks: {}", names.join(" "))?;
            if let Some(d) = blocks.diagnostic {
                writeln!(out, "blocks fallback: {d}")?;
            }
            let delta = condition_ii_delta(&combined, Conventions::default());
            writeln!(out, "condition (ii) changes tau at: {delta:?}")?;
            writeln!(out, "lambda equals mu: {}", trace.lambda == trace.mu)?;
        }
        Command::Classes { theory, by } => {
            let records = build_catalog(theory)?;
            for ((_, key), members) in group_classes(&records, by.into()) {
                let names: Vec<_> = members.iter().map(|&i| records[i].pair_text()).collect();
                writeln!(out, "{key}\t{}\t{}", members.len(), names.join(" "))?;
            }
        }
        Command::Represent {
            theory,
            from_symbol,
            from_fingerprint,
        } => {
            if let Some(s) = from_symbol {
                let r = reconstruct_from_symbol(&s, theory)?;
                writeln!(out, "{}", r.pair)?;
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&r).map_err(io::Error::other)?
                )?;
            } else if let Some(fp) = from_fingerprint {
                let r = mu_from_fingerprint(&fp);
                writeln!(out, "lambda1_r: {}", r.lambda1)?;
                writeln!(out, "lambda2_r: {}", r.lambda2)?;
                writeln!(out, "mu_r: {}", r.mu)?;
                writeln!(out, "symbol: {}", symbol_of_mu_r(&fp)?)?;
            }
        }
        Command::Verify {
            theory,
            max_rank,
            strict,
            json,
        } => {
            let mut records = Vec::new();
            for t in theories(&theory, max_rank)? {
                records.extend(build_catalog(t)?);
            }
            let report = verify_implication(&records);
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report).map_err(io::Error::other)?
                )?;
            } else {
                for c in &report.corpus {
                    writeln!(
                        out,
                        "{}: {} pairs, {} symbol classes, {} fingerprint classes",
                        c.theory, c.records, c.symbol_classes, c.fingerprint_classes
                    )?;
                }
                for v in &report.violations {
                    writeln!(
                        out,
                        "violation {} {}: {:?}",
                        v.theory, v.symbol, v.fingerprints
                    )?;
                }
                let a = &report.audits;
                writeln!(out, "violations: {}", report.violations.len())?;
                writeln!(out, "size failures: {}", a.size_failures.len())?;
                writeln!(
                    out,
                    "blocks: {}/{} via blocks, {} mismatches",
                    a.block_ok,
                    a.block_checked,
                    a.block_mismatches.len()
                )?;
                writeln!(out, "condition (ii) differences: {}", a.condition_ii_deltas)?;
            }
            out.flush()?;
            let ok = report.strict_pass() && (!strict || report.audits.condition_ii_deltas == 0);
            if !ok {
                return Err(Failure::Verification);
            }
        }
        Command::Duals { rank, by } => {
            let b = build_catalog(TheoryLabel::b(rank))?;
            let c = build_catalog(TheoryLabel::c(rank))?;
            let report = find_dual_candidates(&b, &c, by.into())?;
            writeln!(
                out,
                "B{rank}: {} classes, C{rank}: {} classes, {} matched",
                report.left_classes,
                report.right_classes,
                report.matches.len()
            )?;
            for m in &report.matches {
                writeln!(
                    out,
                    "{}\tB: {}\tC: {}",
                    m.key,
                    m.left.join(" "),
                    m.right.join(" ")
                )?;
            }
            for k in &report.unmatched_left {
                writeln!(out, "{k}\tB only")?;
            }
            for k in &report.unmatched_right {
                writeln!(out, "{k}\tC only")?;
            }
        }
        Command::Catalog { theory, out: path } => {
            let records = build_catalog(theory)?;
            match path {
                Some(p) => write_jsonl(&records, BufWriter::new(File::create(p)?))?,
                None => write_jsonl(&records, &mut out)?,
            }
        }
    }
    out.flush()?;
    Ok(())
}
