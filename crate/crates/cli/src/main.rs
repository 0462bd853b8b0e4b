use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use permstat::catalog::{self, is_finite_class, GfFamily};
use permstat::verify::{self, Scope};
use permstat::{enumerate_class, map_f, map_g, stat_vector, MultiPoly, PatternPair, Permutation, Statistic};
use serde_json::json;

#[derive(Parser)]
#[command(name = "permstat", version, about = "Statistics on permutations avoiding two patterns of length 3")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    F,
    G,
}

#[derive(Subcommand)]
enum Cmd {
    /// Size of S_n(A,B) from the closed form.
    Count {
        #[arg(long)]
        pair: PatternPair,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// List S_n(A,B) in lexicographic order.
    Enumerate {
        #[arg(long)]
        pair: PatternPair,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// All eight statistics of one permutation.
    Stats {
        #[arg(long, value_parser = parse_perm)]
        perm: Permutation,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Joint distribution polynomial(s) from the generating function.
    Table {
        #[arg(long)]
        pair: PatternPair,
        #[arg(long, value_parser = parse_family)]
        family: GfFamily,
        /// A single length.
        #[arg(long, conflicts_with = "n_max", required_unless_present = "n_max")]
        n: Option<usize>,
        /// Every length from 0 up to this one.
        #[arg(long)]
        n_max: Option<usize>,
        /// Enumerate the class instead of expanding the generating function.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Apply f or g to a permutation of S_n(231,312).
    Map {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_parser = parse_perm)]
        perm: Permutation,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Check the catalog and the bijections against enumeration.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_scope)]
        scope: Scope,
        /// Overrides every default order.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Every stored formula, as printed and as used.
    CatalogDump {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

// Accepts "3 4 1 5 2" and, for n ≤ 9, the compact "34152".
fn parse_perm(s: &str) -> Result<Permutation, String> {
    let t = s.trim();
    let spaced = if t.len() > 1 && !t.contains(char::is_whitespace) && t.chars().all(|c| c.is_ascii_digit()) {
        t.chars().map(String::from).collect::<Vec<_>>().join(" ")
    } else {
        t.to_string()
    };
    spaced.parse().map_err(|e: permstat::PermError| e.to_string())
}

fn parse_family(s: &str) -> Result<GfFamily, String> {
    s.parse()
}

fn parse_scope(s: &str) -> Result<Scope, String> {
    s.parse()
}

struct Failure(String);

fn run(cmd: Cmd) -> Result<String, Failure> {
    let mut out = String::new();
    match cmd {
        Cmd::Count { pair, n, format } => {
            let c = catalog::class_count(&pair, n);
            match format {
                Format::Plain => writeln!(out, "{c}"),
                Format::Csv => writeln!(out, "pair,n,count\n\"{pair}\",{n},{c}"),
                Format::Json => writeln!(out, "{}", json!({"pair": pair, "n": n, "count": c.to_string()})),
            }
            .unwrap();
        }
        Cmd::Enumerate { pair, n, format } => {
            let class = enumerate_class(&pair, n);
            match format {
                Format::Plain => class.iter().for_each(|p| writeln!(out, "{p}").unwrap()),
                Format::Csv => class.iter().for_each(|p| {
                    let row: Vec<String> = p.values().iter().map(|v| v.to_string()).collect();
                    writeln!(out, "{}", row.join(",")).unwrap()
                }),
                Format::Json => writeln!(out, "{}", serde_json::to_string(&class).unwrap()).unwrap(),
            }
        }
        Cmd::Stats { perm, format } => {
            let sv = stat_vector(&perm);
            match format {
                Format::Plain => {
                    let cells: Vec<String> =
                        Statistic::ALL.iter().map(|&s| format!("{s}={}", sv.get(s))).collect();
                    writeln!(out, "{}", cells.join(" ")).unwrap();
                }
                Format::Csv => {
                    let names: Vec<&str> = Statistic::ALL.iter().map(|s| s.name()).collect();
                    let vals: Vec<String> = Statistic::ALL.iter().map(|&s| sv.get(s).to_string()).collect();
                    writeln!(out, "{}\n{}", names.join(","), vals.join(",")).unwrap();
                }
                Format::Json => writeln!(out, "{}", serde_json::to_string(&sv).unwrap()).unwrap(),
            }
        }
        Cmd::Table { pair, family, n, n_max, oracle, format } => {
            let (lo, hi) = match (n, n_max) {
                (Some(n), _) => (n, n),
                (None, Some(m)) => (0, m),
                (None, None) => unreachable!("clap requires one of --n, --n-max"),
            };
            // The finite class has no stored function; its table is its enumeration.
            let rows: Vec<MultiPoly> = if oracle || is_finite_class(&pair) {
                (lo..=hi).map(|k| verify::brute_distribution(&pair, k, family)).collect()
            } else {
                let gf = catalog::gf_for(&pair, family).map_err(|e| Failure(e.to_string()))?;
                let table = gf.expand(hi).map_err(|e| Failure(e.to_string()))?;
                table.coeffs[lo..=hi].to_vec()
            };
            write_table(&mut out, lo, &rows, format, n.is_some());
        }
        Cmd::Map { which, perm, format } => {
            let image = match which {
                Which::F => map_f(&perm),
                Which::G => map_g(&perm),
            }
            .map_err(|e| Failure(e.to_string()))?;
            match format {
                Format::Plain => writeln!(out, "{image}"),
                Format::Csv => writeln!(out, "input,output\n{perm},{image}"),
                Format::Json => writeln!(out, "{}", json!({"input": perm, "output": image})),
            }
            .unwrap();
        }
        Cmd::Verify { scope, n_max, format } => {
            let reports = verify::run_suite(scope, n_max);
            let failed = reports.iter().filter(|r| !r.passed()).count();
            for r in &reports {
                match format {
                    Format::Json => writeln!(out, "{}", serde_json::to_string(r).unwrap()),
                    Format::Csv => writeln!(
                        out,
                        "{},{},{},{},{}",
                        r.check,
                        r.pair.as_ref().map(|p| format!("\"{p}\"")).unwrap_or_default(),
                        r.family.map(|f| f.to_string()).unwrap_or_default(),
                        r.n_range.1,
                        if r.passed() { "pass" } else { "fail" }
                    ),
                    Format::Plain => writeln!(out, "{r}"),
                }
                .unwrap();
            }
            if format == Format::Plain {
                writeln!(out, "{} checks, {} failed", reports.len(), failed).unwrap();
            }
            if failed > 0 {
                print!("{out}");
                return Err(Failure(format!("{failed} verification check(s) failed")));
            }
        }
        Cmd::CatalogDump { format } => {
            let dump = catalog::catalog_dump();
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&dump).unwrap()).unwrap(),
                Format::Plain | Format::Csv => {
                    for e in catalog::Catalog::get().joint_entries().chain(catalog::Catalog::get().single_entries()) {
                        let label = e.stat.map(|s| s.to_string()).unwrap_or_else(|| e.family.to_string());
                        writeln!(out, "{} {label}: ({}) / ({})", e.pair, e.gf.num, e.gf.den).unwrap();
                    }
                }
            }
        }
    }
    Ok(out)
}

fn write_table(out: &mut String, lo: usize, rows: &[MultiPoly], format: Format, single: bool) {
    match format {
        Format::Plain if single => writeln!(out, "{}", rows[0]).unwrap(),
        Format::Plain => {
            let width = (lo + rows.len() - 1).to_string().len();
            for (i, p) in rows.iter().enumerate() {
                writeln!(out, "{:>width$}  {p}", lo + i).unwrap();
            }
        }
        Format::Csv => {
            writeln!(out, "n,monomial,coeff").unwrap();
            for (i, p) in rows.iter().enumerate() {
                for (m, c) in p.sorted_terms() {
                    writeln!(out, "{},{m},{c}", lo + i).unwrap();
                }
            }
        }
        Format::Json if single => writeln!(out, "{}", serde_json::to_string(&rows[0]).unwrap()).unwrap(),
        Format::Json => {
            let v: Vec<_> = rows.iter().enumerate().map(|(i, p)| json!({"n": lo + i, "poly": p})).collect();
            writeln!(out, "{}", serde_json::to_string(&v).unwrap()).unwrap();
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
