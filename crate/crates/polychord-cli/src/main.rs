//! Command-line entry point: catalog listings, exact spectra, verification
//! runs, and open-case product exploration.
//!
//! All configuration arrives through flags so invocations are reproducible;
//! output is byte-identical across runs for fixed flags. Exit codes: 0 when
//! every requested check passes, 1 when any check fails, 2 on usage or
//! internal errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use polychord::catalog::{default_suite, extended_suite, PolytopeSpec};
use polychord::report::{
    pretty, render_catalog, render_exploration, render_spectrum, render_verdicts,
    spectrum_document, verdicts_document, ReportFormat, SCHEMA_VERSION,
};
use polychord::spectrum::chord_spectrum_capped;
use polychord::theorems::{
    assert_integral_distinct_sum, explore_open_products, run_checks, Verdict,
};

#[derive(Parser)]
#[command(
    name = "polychord",
    version,
    about = "Exact chord-length spectra of regular polytopes inscribed in the unit sphere"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Markdown,
}

impl From<FormatArg> for ReportFormat {
    fn from(value: FormatArg) -> Self {
        match value {
            FormatArg::Json => ReportFormat::Json,
            FormatArg::Csv => ReportFormat::Csv,
            FormatArg::Markdown => ReportFormat::Markdown,
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum SuiteArg {
    /// Polygons E = 3..30, families n = 2..12, the exceptional solids.
    Default,
    /// Polygons E = 3..60, families n = 2..14, the exceptional solids.
    Extended,
}

impl SuiteArg {
    fn specs(self) -> Vec<PolytopeSpec> {
        match self {
            SuiteArg::Default => default_suite(),
            SuiteArg::Extended => extended_suite(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the catalog with vertex, edge, ridge, and facet counts.
    List {
        #[arg(long, value_enum, default_value_t = SuiteArg::Default)]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Markdown)]
        format: FormatArg,
    },
    /// Emit the exact chord spectrum of one polytope.
    Spectrum {
        /// Polytope name: polygon:E, simplex:N, crosspolytope:N, cube:N,
        /// icosahedron, dodecahedron, 24-cell, 600-cell, 120-cell.
        #[arg(long)]
        polytope: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Largest polygon order accepted.
        #[arg(long, default_value_t = 1000)]
        max_polygon: u64,
    },
    /// Run the named checks and report verdicts.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::Default)]
        suite: SuiteArg,
        /// Check these polytopes instead of a whole suite (repeatable).
        #[arg(long = "polytope")]
        polytopes: Vec<String>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Additionally assert that every distinct chord sum is an integer
        /// (false for simplices of dimension 3 and up).
        #[arg(long)]
        assert_integral_distinct_sum: bool,
    },
    /// Compute exact factored chord products for the open cases.
    Explore {
        /// One of: 600-cell, 120-cell, simplex:N or cube:N with N > 3.
        #[arg(long)]
        polytope: String,
        /// Also evaluate the factored product to full decimal digits.
        #[arg(long)]
        evaluate: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Batch document over the dimension families plus the exceptional
    /// solids whose dimension falls in range.
    Report {
        /// Inclusive dimension range, e.g. 2..6.
        #[arg(long, default_value = "2..6", value_parser = parse_dims)]
        dims: (u32, u32),
        /// Write the document here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_dims(raw: &str) -> Result<(u32, u32), String> {
    let (lo, hi) = raw
        .split_once("..")
        .ok_or_else(|| format!("expected a..b, got `{raw}`"))?;
    let lo: u32 = lo.trim().parse().map_err(|_| format!("bad lower bound `{lo}`"))?;
    let hi: u32 = hi.trim().parse().map_err(|_| format!("bad upper bound `{hi}`"))?;
    if lo < 2 {
        return Err("dimension families start at 2".to_string());
    }
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn parse_spec(name: &str) -> Result<PolytopeSpec, String> {
    name.parse::<PolytopeSpec>().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match command {
        Command::List { suite, format } => {
            print!("{}", render_catalog(&suite.specs(), format.into())?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum {
            polytope,
            format,
            max_polygon,
        } => {
            let spec = parse_spec(&polytope)?;
            let spectrum = chord_spectrum_capped(&spec, max_polygon)?;
            print!("{}", render_spectrum(&spec, &spectrum, format.into())?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            polytopes,
            format,
            assert_integral_distinct_sum: assert_integral,
        } => {
            let (scope, targets) = if polytopes.is_empty() {
                (
                    format!("suite:{}", suite_name(suite)),
                    suite.specs(),
                )
            } else {
                let mut specs = Vec::with_capacity(polytopes.len());
                for name in &polytopes {
                    specs.push(parse_spec(name)?);
                }
                (polytopes.join(","), specs)
            };
            let mut verdicts: Vec<Verdict> = Vec::new();
            for spec in &targets {
                verdicts.extend(run_checks(spec)?);
                if assert_integral {
                    verdicts.push(assert_integral_distinct_sum(spec)?);
                }
            }
            print!("{}", render_verdicts(&scope, &verdicts, format.into()));
            if verdicts.iter().all(|v| v.pass) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Explore {
            polytope,
            evaluate,
            format,
        } => {
            let spec = parse_spec(&polytope)?;
            let report = explore_open_products(&spec, evaluate)?;
            print!("{}", render_exploration(&report, format.into()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Report { dims, out } => {
            let (lo, hi) = dims;
            let mut specs: Vec<PolytopeSpec> = Vec::new();
            for n in lo..=hi {
                specs.push(PolytopeSpec::simplex(n)?);
                specs.push(PolytopeSpec::crosspolytope(n)?);
                specs.push(PolytopeSpec::cube(n)?);
            }
            for solid in [
                PolytopeSpec::icosahedron(),
                PolytopeSpec::dodecahedron(),
                PolytopeSpec::cell24(),
                PolytopeSpec::cell600(),
                PolytopeSpec::cell120(),
            ] {
                if (lo..=hi).contains(&solid.dimension()) {
                    specs.push(solid);
                }
            }

            let mut rows = Vec::with_capacity(specs.len());
            for spec in &specs {
                let spectrum = chord_spectrum_capped(spec, 1000)?;
                let mut doc = spectrum_document(spec, &spectrum)?;
                let verdicts = run_checks(spec)?;
                let vdoc = verdicts_document(&spec.to_string(), &verdicts);
                doc["verdicts"] = vdoc["verdicts"].clone();
                doc["all_pass"] = vdoc["all_pass"].clone();
                rows.push(doc);
            }
            let document = json!({
                "schema_version": SCHEMA_VERSION,
                "dims": format!("{lo}..{hi}"),
                "polytopes": rows,
            });
            let rendered = pretty(&document);
            match out {
                Some(path) => std::fs::write(&path, rendered)?,
                None => print!("{rendered}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn suite_name(suite: SuiteArg) -> &'static str {
    match suite {
        SuiteArg::Default => "default",
        SuiteArg::Extended => "extended",
    }
}
