use std::io::{self, BufRead, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gogmagog::bijections::{
    left1_gog_to_gogam, left1_gogam_to_gog, left2_gog_to_gogam, left2_gogam_to_gog, pentagon333_gog_to_gogam,
    pentagon333_gogam_to_gog, standard_procedure, standard_procedure_inverse,
};
use gogmagog::enumeration::{count_parallel, default_jobs, stream};
use gogmagog::harness::{self, Caps, Config, Report, Scope, StatSelector};
use gogmagog::stats::{z_brute, z_determinant};
use gogmagog::{Entry, Error, Family, GTTriangle, LeftTrapezoid, Pentagon, Region, Result};

#[derive(Parser)]
#[command(name = "gogmagog", version, about = "Gog, Magog and GOGAm triangles, trapezoids and pentagons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every object of a family and shape, one per line.
    Enumerate {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
    /// Count the objects of a family and shape.
    Count {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Apply a bijection to JSON objects read line by line from stdin.
    Biject {
        #[arg(long, value_enum)]
        map: MapName,
        #[arg(long, value_enum, default_value_t = Direction::Fwd)]
        direction: Direction,
    },
    /// Distribution of a statistic, or the joint (mu,nu) table.
    Stats {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// alpha, beta, gamma, mu, nu, or mu,nu
        #[arg(long, default_value = "mu,nu")]
        stat: StatSelector,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// The generating polynomial of (nu, mu) over Gog triangles.
    Zpoly {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Det)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run verification suites; exits nonzero if a non-conjecture check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Run every size class up to this bound instead of the default caps.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Args)]
struct ShapeArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_enum)]
    side: Option<SideArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Jsonl,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapName {
    Std,
    Left1,
    Left2,
    Pent333,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Fwd,
    Inv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Det,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    All,
    Equinumeration,
    Bijections,
    Statistics,
}

impl ShapeArgs {
    fn region(&self) -> Result<Region> {
        let n = self.n;
        let region = match (self.side, self.k, self.l, self.m) {
            (None, None, None, None) => Region::Triangle { n },
            (None, Some(k), Some(l), Some(m)) => Region::Pentagon { n, k, l, m },
            (Some(SideArg::Left), Some(k), None, None) => Region::Left { n, k },
            (Some(SideArg::Right), Some(k), None, None) => Region::Right { n, k },
            _ => {
                return Err(Error::Parse(
                    "use no shape flags, --side left|right with --k, or --k --l --m for a pentagon".into(),
                ))
            }
        };
        region.validate()?;
        Ok(region)
    }
}

/// Rows of a region's bottom-up flat storage.
fn rows_of(region: Region, flat: &[Entry]) -> Vec<Vec<Entry>> {
    let mut rows = Vec::with_capacity(region.height());
    let mut pos = 0;
    for i in 1..=region.height() {
        let (lo, hi) = region.span(i);
        let len = (hi + 1).saturating_sub(lo);
        rows.push(flat[pos..pos + len].to_vec());
        pos += len;
    }
    rows
}

fn shape_json(region: Region) -> serde_json::Map<String, serde_json::Value> {
    let v = match region {
        Region::Triangle { n } => json!({"n": n}),
        Region::Left { n, k } => json!({"n": n, "k": k, "side": "left"}),
        Region::Right { n, k } => json!({"n": n, "k": k, "side": "right"}),
        Region::Pentagon { n, k, l, m } => json!({"n": n, "k": k, "l": l, "m": m}),
    };
    match v {
        serde_json::Value::Object(m) => m,
        _ => unreachable!("shape descriptions are objects"),
    }
}

fn object_json(region: Region, flat: &[Entry]) -> serde_json::Value {
    let mut obj = shape_json(region);
    obj.insert("rows".into(), json!(rows_of(region, flat)));
    serde_json::Value::Object(obj)
}

fn object_text(region: Region, flat: &[Entry]) -> String {
    let mut out = String::new();
    for row in rows_of(region, flat).iter().rev() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

fn enumerate(shape: &ShapeArgs, format: Format) -> Result<()> {
    let region = shape.region()?;
    let out = io::stdout();
    let mut out = BufWriter::new(out.lock());
    for v in stream(shape.family, region, None)? {
        let written = match format {
            Format::Jsonl => writeln!(out, "{}", object_json(region, &v)),
            Format::Table => writeln!(out, "{}", object_text(region, &v)),
        };
        if written.is_err() {
            break;
        }
    }
    let _ = out.flush();
    Ok(())
}

fn count(shape: &ShapeArgs, format: Format, jobs: usize) -> Result<()> {
    let region = shape.region()?;
    let c = count_parallel(shape.family, region, jobs)?;
    match format {
        Format::Jsonl => {
            let mut obj = shape_json(region);
            obj.insert("family".into(), json!(shape.family));
            obj.insert("count".into(), json!(c));
            println!("{}", serde_json::Value::Object(obj));
        }
        Format::Table => println!("{c}"),
    }
    Ok(())
}

fn biject_line(map: MapName, direction: Direction, line: &str) -> Result<String> {
    let fwd = direction == Direction::Fwd;
    Ok(match map {
        MapName::Std if fwd => {
            let t = GTTriangle::from_json(line)?;
            let out = standard_procedure(&t)?;
            let region = Region::Triangle { n: out.n() };
            let mut obj = object_json(region, out.entries());
            let m = obj.as_object_mut().expect("object");
            m.insert("admissible".into(), json!(out.is_admissible()));
            m.insert("gt".into(), json!(out.triangle().is_some()));
            obj.to_string()
        }
        MapName::Std => standard_procedure_inverse(&GTTriangle::from_json(line)?)?.to_json(),
        MapName::Left1 => {
            let t = LeftTrapezoid::from_json(line)?;
            if fwd { left1_gog_to_gogam(&t) } else { left1_gogam_to_gog(&t) }?.to_json()
        }
        MapName::Left2 => {
            let t = LeftTrapezoid::from_json(line)?;
            if fwd { left2_gog_to_gogam(&t) } else { left2_gogam_to_gog(&t) }?.to_json()
        }
        MapName::Pent333 => {
            let p = Pentagon::from_json(line)?;
            if fwd { pentagon333_gog_to_gogam(&p) } else { pentagon333_gogam_to_gog(&p) }?.to_json()
        }
    })
}

/// Returns the number of lines that could not be mapped.
fn biject(map: MapName, direction: Direction) -> Result<usize> {
    let stdin = io::stdin();
    let mut out = BufWriter::new(io::stdout().lock());
    let mut errors = 0;
    for line in stdin.lock().lines() {
        let line = line.map_err(|e| Error::Parse(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let result = match biject_line(map, direction, &line) {
            Ok(s) => s,
            Err(e) => {
                errors += 1;
                json!({"error": e.to_string()}).to_string()
            }
        };
        if writeln!(out, "{result}").is_err() {
            break;
        }
    }
    let _ = out.flush();
    Ok(errors)
}

fn verify(suite: Suite, n_max: Option<usize>, format: Format, cfg: &Config) -> Result<Report> {
    let scope = n_max.map_or_else(|| Scope::from(cfg.caps), Scope::uniform);
    let report = match suite {
        Suite::All => harness::verify_all(&scope, cfg)?,
        Suite::Equinumeration => harness::verify_equinumeration(&scope, cfg)?,
        Suite::Bijections => harness::verify_bijections(&scope, cfg)?,
        Suite::Statistics => harness::verify_statistics(&scope, cfg)?,
    };
    match format {
        Format::Jsonl => println!("{}", report.to_json()),
        Format::Table => print!("{}", report.to_table()),
    }
    Ok(report)
}

fn config(jobs: Option<usize>) -> Config {
    Config { caps: Caps::default(), jobs: jobs.unwrap_or_else(default_jobs).max(1) }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Enumerate { shape, format } => enumerate(&shape, format)?,
        Command::Count { shape, format, jobs } => count(&shape, format, config(jobs).jobs)?,
        Command::Biject { map, direction } => {
            if biject(map, direction)? > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Stats { family, n, stat, format, jobs } => {
            let table = harness::stats_table(family, n, stat, &config(jobs))?;
            match format {
                Format::Jsonl => println!("{}", table.to_json()),
                Format::Table => print!("{}", table.to_text()),
            }
        }
        Command::Zpoly { n, method, format } => {
            Caps::check(Caps::default().zdet, n)?;
            let p = match method {
                Method::Det => z_determinant(n),
                Method::Brute => z_brute(n),
            };
            match format {
                Format::Jsonl => println!("{}", p.to_json()),
                Format::Table => println!("{p}"),
            }
        }
        Command::Verify { suite, n_max, format, jobs } => {
            if !verify(suite, n_max, format, &config(jobs))?.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
