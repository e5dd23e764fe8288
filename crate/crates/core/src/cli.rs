//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 validation or parse
//! error, 3 enumeration budget exceeded, 4 generator is not a right divisor
//! of xⁿ − 1, 5 odd length without `--allow-odd`.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::code::{search_divisors, GeneratorClass, SearchOptions, SkewCyclicCode, DEFAULT_BUDGET};
use crate::dna::Codebook;
use crate::report::CodeReport;
use crate::skewpoly::SkewPoly;
use crate::table::TABLE;
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAIL: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_NOT_DIVISOR: i32 = 4;
pub const EXIT_ODD_LENGTH: i32 = 5;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::NotRightDivisor { .. } => EXIT_NOT_DIVISOR,
        Error::OddLength(_) => EXIT_ODD_LENGTH,
        _ => EXIT_VALIDATION,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "skewdna",
    version,
    about = "Skew cyclic codes over R16 and reversible DNA codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Palindromic,
    ThetaPalindromic,
}

impl From<ClassArg> for GeneratorClass {
    fn from(c: ClassArg) -> GeneratorClass {
        match c {
            ClassArg::Palindromic => GeneratorClass::Palindromic,
            ClassArg::ThetaPalindromic => GeneratorClass::ThetaPalindromic,
        }
    }
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random codewords checked for reversibility on top of the spanning set.
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the F16 / DNA-pair table.
    Table {
        #[command(flatten)]
        common: Common,
    },
    /// Parameters, class and reversibility of the code generated by GENERATOR.
    Analyze {
        /// Comma-separated hex words, lowest degree first.
        generator: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        allow_odd: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Search palindromic / theta-palindromic right divisors of x^n - 1.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum)]
        class: ClassArg,
        #[command(flatten)]
        common: Common,
    },
    /// Encode a message (or the spanning codewords) into a codebook file.
    Encode {
        generator: String,
        #[arg(long)]
        n: usize,
        /// Message polynomial as hex words; degree must be below k.
        #[arg(
            long,
            conflicts_with = "all_spanning",
            required_unless_present = "all_spanning"
        )]
        message: Option<String>,
        #[arg(long)]
        all_spanning: bool,
        #[arg(long)]
        allow_odd: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Check a codebook file and the reversibility of its code.
    Verify {
        codebook: PathBuf,
        /// Defaults to the generator in the codebook header.
        #[arg(long)]
        generator: Option<String>,
        /// Defaults to n in the codebook header.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        allow_odd: bool,
        #[command(flatten)]
        common: Common,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{rendered}");
            } else {
                let _ = write!(stderr, "{rendered}");
            }
            return code;
        }
    };
    match execute(cli.command, stderr) {
        Ok(Output { text, path, code }) => {
            let written = match path {
                Some(p) => fs::write(&p, &text).map_err(Error::from),
                None => stdout.write_all(text.as_bytes()).map_err(Error::from),
            };
            match written {
                Ok(()) => code,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    exit_code(&e)
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

struct Output {
    text: String,
    path: Option<PathBuf>,
    code: i32,
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serializable") + "\n",
        Format::Text => text(),
    }
}

fn make_code(
    generator: &str,
    n: usize,
    allow_odd: bool,
    stderr: &mut dyn Write,
) -> crate::Result<SkewCyclicCode> {
    let g: SkewPoly = generator.parse()?;
    if allow_odd && n % 2 == 1 {
        let _ = writeln!(
            stderr,
            "warning: n = {n} is odd; θ acts like the identity on the code and it is an ordinary cyclic code"
        );
        SkewCyclicCode::new_allow_odd(g, n)
    } else {
        SkewCyclicCode::new(g, n)
    }
}

#[derive(Serialize)]
struct TableRowOut {
    power: String,
    additive: String,
    hex: String,
    pair: String,
    fourth_power: String,
    fourth_power_pair: String,
}

pub fn table_text() -> String {
    let mut s = String::from("F16 (mult)  F16 (additive)       hex  pair   x^4    pair(x^4)\n");
    for row in table_rows() {
        s += &format!(
            "{:<11} {:<20} {:<4} {:<6} {:<6} {}\n",
            row.power, row.additive, row.hex, row.pair, row.fourth_power, row.fourth_power_pair
        );
    }
    s
}

fn table_rows() -> Vec<TableRowOut> {
    TABLE
        .iter()
        .map(|row| {
            let x = crate::Gf16::new(row.additive);
            let x4 = x.frob();
            let row4 = TABLE
                .iter()
                .find(|r| r.additive == x4.bits())
                .expect("16 rows");
            TableRowOut {
                power: row.power_label(),
                additive: row.additive_label(),
                hex: x.to_string(),
                pair: row.pair_str().to_string(),
                fourth_power: row4.power_label(),
                fourth_power_pair: row4.pair_str().to_string(),
            }
        })
        .collect()
}

#[derive(Serialize)]
struct SearchOut {
    n: usize,
    degree: usize,
    class: GeneratorClass,
    exhaustive: bool,
    candidates_tested: u64,
    space_size: String,
    seed: u64,
    found: usize,
    generators: Vec<CodeReport>,
}

#[derive(Serialize)]
struct VerifyOut {
    path: String,
    lines: usize,
    inconsistent_lines: Vec<usize>,
    non_members: Vec<usize>,
    report: CodeReport,
    pass: bool,
}

fn execute(command: Command, stderr: &mut dyn Write) -> crate::Result<Output> {
    match command {
        Command::Table { common } => {
            let rows = table_rows();
            Ok(Output {
                text: render(common.format, &rows, table_text),
                path: common.out,
                code: EXIT_OK,
            })
        }
        Command::Analyze {
            generator,
            n,
            allow_odd,
            common,
        } => {
            let code = make_code(&generator, n, allow_odd, stderr)?;
            let report =
                CodeReport::analyze(&code, common.budget, common.samples as usize, common.seed)?;
            let exit = if report.reversibility.pass {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAIL
            };
            Ok(Output {
                text: render(common.format, &report, || format!("{report}\n")),
                path: common.out,
                code: exit,
            })
        }
        Command::Search {
            n,
            degree,
            class,
            common,
        } => {
            let class = GeneratorClass::from(class);
            let opts = SearchOptions {
                budget: common.budget,
                seed: common.seed,
                ..SearchOptions::default()
            };
            let outcome = search_divisors(n, degree, class, &opts)?;
            let reports = outcome
                .generators
                .iter()
                .map(|g| {
                    let code = SkewCyclicCode::new(g.clone(), n)?;
                    CodeReport::analyze(&code, common.budget, common.samples as usize, common.seed)
                })
                .collect::<crate::Result<Vec<_>>>()?;
            let out = SearchOut {
                n,
                degree,
                class,
                exhaustive: outcome.exhaustive,
                candidates_tested: outcome.candidates_tested,
                space_size: outcome.space_size.to_string(),
                seed: common.seed,
                found: reports.len(),
                generators: reports,
            };
            let text = render(common.format, &out, || {
                let mut s = format!(
                    "# n={} degree={} class={} {} search, {} of {} candidates, {} found\n",
                    n,
                    degree,
                    class,
                    if out.exhaustive {
                        "exhaustive"
                    } else {
                        "sampled"
                    },
                    out.candidates_tested,
                    out.space_size,
                    out.found
                );
                for r in &out.generators {
                    s += &format!(
                        "{}\t[{},{},{}]\treversible={}\n",
                        r.generator,
                        r.n,
                        r.k,
                        r.d_r16,
                        r.reversible_label()
                    );
                }
                s
            });
            Ok(Output {
                text,
                path: common.out,
                code: EXIT_OK,
            })
        }
        Command::Encode {
            generator,
            n,
            message,
            all_spanning,
            allow_odd,
            common,
        } => {
            let code = make_code(&generator, n, allow_odd, stderr)?;
            let codewords = if all_spanning {
                code.spanning_codewords()
            } else {
                let f: SkewPoly = message.as_deref().unwrap_or_default().parse()?;
                vec![code.encode(&f)?]
            };
            let book = Codebook::new(&code, codewords);
            Ok(Output {
                text: book.to_string(),
                path: common.out,
                code: EXIT_OK,
            })
        }
        Command::Verify {
            codebook,
            generator,
            n,
            allow_odd,
            common,
        } => {
            let text = fs::read_to_string(&codebook)?;
            let book: Codebook = text.parse()?;
            let n = n.unwrap_or(book.n);
            if n != book.n {
                return Err(Error::Format(format!(
                    "codebook header has n={}, expected {n}",
                    book.n
                )));
            }
            let generator = generator.unwrap_or_else(|| book.generator.to_string());
            let code = make_code(&generator, n, allow_odd, stderr)?;
            if book.generator != *code.generator() {
                return Err(Error::Format(format!(
                    "codebook header generator {} differs from {}",
                    book.generator,
                    code.generator()
                )));
            }
            let inconsistent = book.inconsistent_lines();
            let non_members: Vec<usize> = book
                .entries
                .iter()
                .enumerate()
                .filter(|(_, e)| !code.contains(&e.codeword))
                .map(|(i, _)| i + 2)
                .collect();
            let report = CodeReport::analyze(&code, common.budget, 0, common.seed)?;
            let pass =
                inconsistent.is_empty() && non_members.is_empty() && report.reversibility.pass;
            let out = VerifyOut {
                path: codebook.display().to_string(),
                lines: book.entries.len(),
                inconsistent_lines: inconsistent,
                non_members,
                report,
                pass,
            };
            let text = render(common.format, &out, || {
                let mut s = format!("codebook         {} ({} codewords)\n", out.path, out.lines);
                if !out.inconsistent_lines.is_empty() {
                    s += &format!("DNA mismatch on lines {:?}\n", out.inconsistent_lines);
                }
                if !out.non_members.is_empty() {
                    s += &format!("non-codewords on lines {:?}\n", out.non_members);
                }
                s += &format!(
                    "{}\n{}\n",
                    out.report,
                    if out.pass { "PASS" } else { "FAIL" }
                );
                s
            });
            Ok(Output {
                text,
                path: common.out,
                code: if pass { EXIT_OK } else { EXIT_VERIFY_FAIL },
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("skewdna").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn table_has_16_rows() {
        let (code, out, _) = run_capture(&["table"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 17);
        assert!(out
            .lines()
            .any(|l| l.starts_with("α^2 ") && l.contains("GC")));
        assert!(out.lines().any(|l| l.starts_with("0 ") && l.contains("AA")));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            run_capture(&["analyze", "2000", "--n", "6"]).0,
            EXIT_VALIDATION
        );
        assert_eq!(
            run_capture(&["analyze", "zz", "--n", "6"]).0,
            EXIT_VALIDATION
        );
        assert_eq!(
            run_capture(&["analyze", "2000,1000", "--n", "4"]).0,
            EXIT_NOT_DIVISOR
        );
        assert_eq!(
            run_capture(&["analyze", "2000,1000", "--n", "7"]).0,
            EXIT_ODD_LENGTH
        );
        assert_eq!(
            run_capture(&["analyze", "2000,1000", "--n", "6"]).0,
            EXIT_VERIFY_FAIL
        );
        assert_eq!(
            run_capture(&[
                "analyze",
                "1000,B220,D330,1000",
                "--n",
                "6",
                "--budget",
                "100"
            ])
            .0,
            EXIT_BUDGET
        );
        assert_eq!(run_capture(&["search", "--n", "6", "--degree", "3"]).0, 2);
    }

    #[test]
    fn allow_odd_warns() {
        let (code, _, err) = run_capture(&["analyze", "1000,1000", "--n", "3", "--allow-odd"]);
        assert_eq!(code, 0);
        assert!(err.contains("warning"));
    }
}
