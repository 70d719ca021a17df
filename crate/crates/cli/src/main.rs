use clap::{Args, Parser, Subcommand};
use pd3c_core::construct::{self, PipelineReport, DEFAULT_MAX_RETRIES, DEFAULT_PRIME};
use pd3c_core::format::{parse_ideal_file_with, HeaderOverrides, IdealFile};
use pd3c_core::hilbert::{self, HilbertSeries};
use pd3c_core::ideal_ops::{self, RingMapSpec};
use pd3c_core::resolution::{betti_table, minimal_resolution, Resolution};
use pd3c_core::{Error, Ideal, MonomialOrder, PolyRing, Polynomial, SeededRng};
use serde_json::json;
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "pd3c",
    version,
    about = "Groebner bases, resolutions and the three-cubics construction over F_p"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Monomial order replacing the one in the file header (grevlex, lex, grlex)
    #[arg(long)]
    order: Option<MonomialOrder>,
    /// Prime replacing the one in the file header
    #[arg(long)]
    prime: Option<u64>,
    /// Seed for randomized steps
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Retry budget for randomized steps
    #[arg(long, env = "PD3C_MAX_RETRIES", default_value_t = DEFAULT_MAX_RETRIES)]
    max_retries: usize,
    /// Comma-separated variable names (eliminate: variables to drop; kernel: source variables)
    #[arg(long, value_delimiter = ',')]
    vars: Vec<String>,
    /// Machine-readable JSON output
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Groebner basis, one polynomial per line
    Gb(One),
    /// Minimal generators
    Mingens(One),
    /// Betti table of the minimal resolution of R/I
    Betti(One),
    /// Minimal free resolution of R/I
    Res(One),
    /// Krull dimension of R/I
    Dim(One),
    /// Degree (multiplicity) of R/I
    Degree(One),
    /// Hilbert series of R/I
    Hilbert(One),
    /// Ideal quotient I : J
    Colon(Two),
    /// Intersection of I and J
    Intersect(Two),
    /// Saturation of I with respect to J
    Saturate(Two),
    /// Eliminate the variables given by --vars
    Eliminate(One),
    /// Kernel of the map sending the source variables to the images,
    /// modulo the relations in TARGET
    Kernel(KernelArgs),
    /// Unmixed part (top-dimensional component)
    Unmixed(One),
    /// Run the three-cubics construction
    Pd5(NoFile),
    /// Check the fixed example over Z/3
    VerifyPaperExample(NoFile),
}

#[derive(Args)]
struct One {
    /// Ideal file, or - for stdin
    file: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Two {
    first: String,
    second: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct KernelArgs {
    /// Target ring header and its relations
    target: String,
    /// Images of the source variables, over the same ring as TARGET
    images: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct NoFile {
    #[command(flatten)]
    common: Common,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_mathematical() {
            Failure::Math(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

type Outcome = Result<String, Failure>;

fn read_source(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("<stdin>: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn load(path: &str, common: &Common) -> Result<IdealFile, Failure> {
    let text = read_source(path)?;
    let overrides = HeaderOverrides {
        prime: common.prime,
        order: common.order.clone(),
    };
    parse_ideal_file_with(&text, &overrides).map_err(|e| match e {
        Error::Parse { line, column, message } => Failure::Input(format!("{path}:{line}:{column}: {message}")),
        other => Failure::Input(format!("{path}: {other}")),
    })
}

fn load_ideal(path: &str, common: &Common) -> Result<Ideal, Failure> {
    let f = load(path, common)?;
    Ideal::new(&f.ring, f.polys).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

fn load_pair(a: &str, b: &str, common: &Common) -> Result<(Ideal, Ideal), Failure> {
    let i = load_ideal(a, common)?;
    let j = load_ideal(b, common)?;
    if **i.ring() != **j.ring() {
        return Err(Failure::Input(format!("{a} and {b} declare different rings")));
    }
    let gens = j
        .gens()
        .iter()
        .map(|g| g.to_ring(i.ring()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((i.clone(), Ideal::new(i.ring(), gens)?))
}

fn poly_lines(polys: &[Polynomial]) -> String {
    polys.iter().map(|p| format!("{p}\n")).collect()
}

fn poly_strings(polys: &[Polynomial]) -> Vec<String> {
    polys.iter().map(|p| p.to_string()).collect()
}

/// Minimal generators by degree, each degree in descending leading monomial.
fn ideal_output(ideal: &Ideal, json: bool) -> String {
    let ring = ideal.ring().clone();
    let mut gens = ideal.minimal_generators();
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| ring.cmp(b.lm(), a.lm())));
    if json {
        json!({ "generators": poly_strings(&gens) }).to_string() + "\n"
    } else {
        poly_lines(&gens)
    }
}

fn series_text(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
        let sign = if c < 0 { "-" } else { "+" };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let a = c.unsigned_abs();
        match k {
            0 => out.push_str(&a.to_string()),
            _ => {
                if a != 1 {
                    out.push_str(&format!("{a}*"));
                }
                out.push('t');
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn hilbert_output(hs: &HilbertSeries, json: bool) -> String {
    if json {
        return serde_json::to_string(hs).expect("serializable") + "\n";
    }
    let den = |d: usize| match d {
        0 => String::new(),
        1 => " / (1 - t)".into(),
        d => format!(" / (1 - t)^{d}"),
    };
    format!(
        "({}){}\n({}){}\n",
        series_text(hs.numerator()),
        den(hs.denominator_power()),
        series_text(hs.reduced_numerator()),
        den(hs.dimension().max(0) as usize)
    )
}

fn resolution_output(res: &Resolution, json: bool) -> Result<String, Failure> {
    let table = betti_table(res)?;
    let modules: Vec<Vec<i32>> = (0..=res.length())
        .map(|i| {
            let mut t = res.module(i).twists().to_vec();
            t.sort_unstable();
            t
        })
        .collect();
    if json {
        return Ok(json!({ "modules": modules, "betti": table }).to_string() + "\n");
    }
    let mut out = String::new();
    for (i, twists) in modules.iter().enumerate() {
        let mut groups: Vec<(i32, usize)> = Vec::new();
        for &t in twists {
            match groups.last_mut() {
                Some((u, c)) if *u == t => *c += 1,
                _ => groups.push((t, 1)),
            }
        }
        let parts: Vec<String> = groups
            .iter()
            .map(|&(t, c)| match t {
                0 => format!("R^{c}"),
                _ => format!("R(-{t})^{c}"),
            })
            .collect();
        out.push_str(&format!("F_{i} = {}\n", parts.join(" + ")));
    }
    out.push_str(&table.to_kv());
    Ok(out)
}

fn report_output(report: &PipelineReport, json: bool) -> String {
    if json {
        serde_json::to_string_pretty(report).expect("serializable") + "\n"
    } else {
        report.to_string()
    }
}

fn kernel(args: &KernelArgs) -> Outcome {
    let c = &args.common;
    let target = load(&args.target, c)?;
    let images = load(&args.images, c)?;
    if *target.ring != *images.ring {
        return Err(Failure::Input(format!(
            "{} and {} declare different rings",
            args.target, args.images
        )));
    }
    let images: Vec<Polynomial> = images
        .polys
        .iter()
        .map(|g| g.to_ring(&target.ring))
        .collect::<Result<_, _>>()?;
    let names: Vec<String> = if c.vars.is_empty() {
        (0..images.len()).map(|i| format!("x_{i}")).collect()
    } else {
        c.vars.clone()
    };
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let order = c.order.clone().unwrap_or_default();
    let source = PolyRing::new(target.ring.characteristic() as u64, &refs, order)?;
    let spec = RingMapSpec {
        source,
        target: target.ring.clone(),
        target_relations: Ideal::new(&target.ring, target.polys)?,
        images,
    };
    Ok(ideal_output(&ideal_ops::ring_map_kernel(&spec)?, c.json))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gb(a) => {
            let i = load_ideal(&a.file, &a.common)?;
            let gb = i.groebner_basis().elements().to_vec();
            Ok(if a.common.json {
                json!({ "groebner_basis": poly_strings(&gb) }).to_string() + "\n"
            } else {
                poly_lines(&gb)
            })
        }
        Command::Mingens(a) => Ok(ideal_output(&load_ideal(&a.file, &a.common)?, a.common.json)),
        Command::Betti(a) => {
            let i = load_ideal(&a.file, &a.common)?;
            let table = betti_table(&minimal_resolution(&i)?)?;
            Ok(if a.common.json {
                serde_json::to_string(&table).expect("serializable") + "\n"
            } else {
                table.to_string()
            })
        }
        Command::Res(a) => {
            let i = load_ideal(&a.file, &a.common)?;
            resolution_output(&minimal_resolution(&i)?, a.common.json)
        }
        Command::Dim(a) => {
            let d = hilbert::dimension(&load_ideal(&a.file, &a.common)?)?;
            Ok(if a.common.json {
                json!({ "dim": d }).to_string()
            } else {
                d.to_string()
            } + "\n")
        }
        Command::Degree(a) => {
            let d = hilbert::degree(&load_ideal(&a.file, &a.common)?)?;
            Ok(if a.common.json {
                json!({ "degree": d }).to_string()
            } else {
                d.to_string()
            } + "\n")
        }
        Command::Hilbert(a) => {
            let hs = hilbert::hilbert_series(&load_ideal(&a.file, &a.common)?)?;
            Ok(hilbert_output(&hs, a.common.json))
        }
        Command::Colon(a) => {
            let (i, j) = load_pair(&a.first, &a.second, &a.common)?;
            Ok(ideal_output(&ideal_ops::quotient(&i, &j)?, a.common.json))
        }
        Command::Intersect(a) => {
            let (i, j) = load_pair(&a.first, &a.second, &a.common)?;
            Ok(ideal_output(&ideal_ops::intersect(&i, &j)?, a.common.json))
        }
        Command::Saturate(a) => {
            let (i, j) = load_pair(&a.first, &a.second, &a.common)?;
            Ok(ideal_output(&ideal_ops::saturate(&i, &j)?, a.common.json))
        }
        Command::Eliminate(a) => {
            let i = load_ideal(&a.file, &a.common)?;
            if a.common.vars.is_empty() {
                return Err(Failure::Input("eliminate needs --vars".into()));
            }
            let drop = a
                .common
                .vars
                .iter()
                .map(|v| {
                    i.ring()
                        .var_index(v)
                        .ok_or_else(|| Failure::Input(format!("unknown variable '{v}' in --vars")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(ideal_output(&ideal_ops::eliminate(&i, &drop)?, a.common.json))
        }
        Command::Kernel(a) => kernel(&a),
        Command::Unmixed(a) => {
            let i = load_ideal(&a.file, &a.common)?;
            let mut rng = SeededRng::new(a.common.seed);
            let u = ideal_ops::unmixed_part(&i, &mut rng, a.common.max_retries)?;
            Ok(ideal_output(&u, a.common.json))
        }
        Command::Pd5(a) => {
            let c = &a.common;
            let report = construct::pd5_pipeline(c.prime.unwrap_or(DEFAULT_PRIME), c.seed, c.max_retries)?;
            Ok(report_output(&report, c.json))
        }
        Command::VerifyPaperExample(a) => {
            let report = construct::verify_paper_example()?;
            Ok(if a.common.json {
                report_output(&report, true)
            } else {
                report.betti.to_string()
            })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Math(msg)) => {
            eprintln!("pd3c: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("pd3c: {msg}");
            ExitCode::from(2)
        }
    }
}
