//! Command-line front end: parse algebra descriptions, dispatch checks
//! and transfers, and render reports.
//!
//! The exit status is 0 exactly when every requested check passed,
//! 1 when a check failed, and 2 on usage, parse or computation errors.

mod document;

pub use document::{AlgebraDocument, AlgebraKind, OpEntry};

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::exactlin::homology_with_contraction;
use crate::halg::{check_ainf, check_linf};
use crate::operad::{
    ainf_generator_diff, arity_homology, check_d_squared, is_minimal, linf_generator_diff,
    DgFreeOperad, FreeElement,
};
use crate::report::Report;
use crate::transfer::{transfer, verify_transfer, TransferProblem};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Family {
    Ainf,
    Linf,
}

impl Family {
    fn label(&self) -> &'static str {
        match self {
            Family::Ainf => "ainf",
            Family::Linf => "linf",
        }
    }

    /// Default arity caps: symmetric bases grow factorially, so the Lie
    /// family stops one arity earlier.
    fn dsq_cap(&self) -> usize {
        match self {
            Family::Ainf => 6,
            Family::Linf => 5,
        }
    }

    fn homology_cap(&self) -> usize {
        match self {
            Family::Ainf => 5,
            Family::Linf => 4,
        }
    }

    fn operad(&self, max_arity: usize) -> DgFreeOperad {
        match self {
            Family::Ainf => DgFreeOperad::a_infinity(max_arity),
            Family::Linf => DgFreeOperad::l_infinity(max_arity),
        }
    }

    fn generator_diff(&self, arity: usize) -> Result<FreeElement> {
        match self {
            Family::Ainf => ainf_generator_diff(arity),
            Family::Linf => linf_generator_diff(arity),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Parser)]
#[command(
    name = "opalg",
    version,
    about = "Exact symbolic checks for operadic homotopy algebra"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify that the generator differential squares to zero, arity by arity
    CheckDsq {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        max_arity: usize,
        /// Raise the family arity cap
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the differential of one generator, term by term
    DiffTable {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        arity: usize,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Load an algebra description and run its axiom checker
    CheckAlgebra {
        file: PathBuf,
        #[arg(long)]
        max_arity: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Contract a loaded algebra onto its homology, transfer the
    /// structure, verify it, and write the result
    Transfer {
        file: PathBuf,
        #[arg(long)]
        max_arity: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Betti numbers of one arity component of the operad
    Homology {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        arity: usize,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check that every generator differential is decomposable
    Minimality {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        max_arity: usize,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Entry point for the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage text
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::CapExceeded { .. }) {
                eprintln!("raise the cap with --cap if you really want this");
            }
            2
        }
    }
}

fn enforce_cap(arity: usize, cap: usize, what: &str) -> Result<()> {
    if arity > cap {
        return Err(Error::CapExceeded {
            arity,
            cap,
            what: what.to_string(),
        });
    }
    Ok(())
}

fn render(report: &Report, format: Format) -> i32 {
    match format {
        Format::Text => print!("{report}"),
        Format::Machine => print!("{}", report.machine()),
    }
    if report.passed() {
        0
    } else {
        1
    }
}

fn execute(cmd: Cmd) -> Result<i32> {
    match cmd {
        Cmd::CheckDsq {
            family,
            max_arity,
            cap,
            format,
        } => {
            enforce_cap(max_arity, cap.unwrap_or(family.dsq_cap()), family.label())?;
            let op = family.operad(max_arity);
            let report = check_d_squared(&op, max_arity)?;
            let code = render(&report, format);
            if format == Format::Text {
                let failures = report.failures().count();
                if failures == 0 {
                    println!("{} generators, residual 0", report.lines.len());
                } else {
                    println!("{} generators, {} with nonzero residual", report.lines.len(), failures);
                }
            }
            Ok(code)
        }
        Cmd::DiffTable {
            family,
            arity,
            cap,
            format,
        } => {
            enforce_cap(arity, cap.unwrap_or(family.dsq_cap()), family.label())?;
            let elem = family.generator_diff(arity)?;
            let gen_name = match family {
                Family::Ainf => format!("mu{arity}"),
                Family::Linf => format!("l{arity}"),
            };
            match format {
                Format::Text => {
                    println!("d({gen_name}) = {} terms", elem.term_count());
                    for (tree, coeff) in elem.terms() {
                        println!("{} {}", fmt_coeff(coeff), tree.compact());
                        for line in tree.pretty().lines() {
                            println!("    {line}");
                        }
                    }
                }
                Format::Machine => {
                    for (tree, coeff) in elem.terms() {
                        println!("term {arity} {coeff} {}", tree.compact());
                    }
                }
            }
            Ok(0)
        }
        Cmd::CheckAlgebra {
            file,
            max_arity,
            format,
        } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
            let doc = AlgebraDocument::parse(&text)?;
            let report = match doc.kind {
                AlgebraKind::Ainf => check_ainf(&doc.to_ainf(max_arity)?)?,
                AlgebraKind::Linf => check_linf(&doc.to_linf(max_arity)?)?,
            };
            Ok(render(&report, format))
        }
        Cmd::Transfer {
            file,
            max_arity,
            out,
            format,
        } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
            let doc = AlgebraDocument::parse(&text)?;
            let source = doc.to_ainf(max_arity)?;
            let contraction = homology_with_contraction(&source.space, &source.d)?;
            let result = transfer(&TransferProblem {
                source,
                contraction,
                max_arity,
            })?;
            let report = verify_transfer(&result)?;
            let out_doc = AlgebraDocument::from_transfer(&result);
            std::fs::write(&out, out_doc.serialize())
                .map_err(|e| Error::Io(format!("{}: {e}", out.display())))?;
            let code = render(&report, format);
            if format == Format::Text {
                println!(
                    "wrote the transferred structure ({} operation tables, {} morphism components) to {}",
                    result.transferred.ops().count(),
                    result.morphism.components().count(),
                    out.display()
                );
            }
            Ok(code)
        }
        Cmd::Homology {
            family,
            arity,
            cap,
            format,
        } => {
            enforce_cap(arity, cap.unwrap_or(family.homology_cap()), family.label())?;
            let op = family.operad(arity);
            let betti = arity_homology(&op, arity)?;
            match format {
                Format::Text => {
                    println!("homology of the arity-{arity} component ({}):", family.label());
                    if betti.is_empty() {
                        println!("  zero");
                    }
                    for (degree, dim) in &betti {
                        println!("  degree {degree}: dimension {dim}");
                    }
                }
                Format::Machine => {
                    for (degree, dim) in &betti {
                        println!("homology {} {arity} {degree} {dim}", family.label());
                    }
                }
            }
            Ok(0)
        }
        Cmd::Minimality {
            family,
            max_arity,
            cap,
            format,
        } => {
            enforce_cap(max_arity, cap.unwrap_or(family.dsq_cap()), family.label())?;
            let op = family.operad(max_arity);
            let verdict = is_minimal(&op);
            match format {
                Format::Text => println!(
                    "{} is {}minimal up to arity {max_arity}",
                    family.label(),
                    if verdict { "" } else { "NOT " }
                ),
                Format::Machine => println!(
                    "minimal {} {max_arity} {} 0",
                    family.label(),
                    if verdict { "pass" } else { "fail" }
                ),
            }
            Ok(if verdict { 0 } else { 1 })
        }
    }
}

fn fmt_coeff(c: &crate::exactlin::Scalar) -> String {
    let s = c.to_string();
    if s.starts_with('-') {
        s
    } else {
        format!("+{s}")
    }
}
