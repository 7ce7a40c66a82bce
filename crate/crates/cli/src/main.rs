//! `khdetect`: Khovanov-type homology and rank-based link detection from the command line.

mod input;
mod verify;

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use input::{load, InputArgs};
use khovanov::cube::{build_complex, CubeError, Ring, Variant};
use khovanov::detect::{annular_detect, hfl_classify, kh_detect, linking_from_lee, DetectError, DetectionVerdict};
use khovanov::diagram::DiagramError;
use khovanov::homology::{homology, rank_table, simplify, ComputeError, GradedAbelianGroup, HomologyError};
use khovanov::reference::{
    akh_clasp, akh_sigma, hfk_twist_knot, hfl_twisted_whitehead, kh_reference, shape, shape_to_json, tensor, KnownLink,
    ReferenceError, Shape, ShapeFamily,
};
use khovanov::skein::SkeinError;
use khovanov::spectra::{lee_homology, SpectraError};

/// Error classes, each with its own exit status.
#[derive(Debug)]
pub enum Failure {
    /// A check failed or a detector was inconclusive.
    Negative(String),
    Parse(String),
    Hypothesis(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Negative(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Hypothesis(_) => 3,
            Failure::Internal(_) => 4,
        }
    }
}

impl From<DiagramError> for Failure {
    fn from(e: DiagramError) -> Self {
        match e {
            DiagramError::TooLarge(_) => Failure::Hypothesis(e.to_string()),
            _ => Failure::Parse(e.to_string()),
        }
    }
}

impl From<CubeError> for Failure {
    fn from(e: CubeError) -> Self {
        match e {
            CubeError::NotAnEdge => Failure::Internal(e.to_string()),
            _ => Failure::Hypothesis(e.to_string()),
        }
    }
}

impl From<HomologyError> for Failure {
    fn from(e: HomologyError) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<ComputeError> for Failure {
    fn from(e: ComputeError) -> Self {
        match e {
            ComputeError::Cube(c) => c.into(),
            ComputeError::Homology(h) => h.into(),
        }
    }
}

impl From<SpectraError> for Failure {
    fn from(e: SpectraError) -> Self {
        match e {
            SpectraError::Compute(c) => c.into(),
            SpectraError::FieldMismatch(..) => Failure::Hypothesis(e.to_string()),
            SpectraError::LeeRank { .. } => Failure::Internal(e.to_string()),
        }
    }
}

impl From<SkeinError> for Failure {
    fn from(e: SkeinError) -> Self {
        match e {
            SkeinError::Diagram(d) => d.into(),
            _ => Failure::Hypothesis(e.to_string()),
        }
    }
}

impl From<DetectError> for Failure {
    fn from(e: DetectError) -> Self {
        Failure::Hypothesis(e.to_string())
    }
}

impl From<ReferenceError> for Failure {
    fn from(e: ReferenceError) -> Self {
        Failure::Hypothesis(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RingArg {
    #[value(alias = "Z")]
    Z,
    #[value(alias = "Q")]
    Q,
    #[value(alias = "F2")]
    F2,
}

impl From<RingArg> for Ring {
    fn from(r: RingArg) -> Ring {
        match r {
            RingArg::Z => Ring::Integers,
            RingArg::Q => Ring::Rationals,
            RingArg::F2 => Ring::Field2,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "khdetect", version, about = "Khovanov homology computations and rank-based link detection")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads (default: all cores)
    #[arg(long, global = true, env = "KHDETECT_THREADS")]
    threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Khovanov homology
    Kh {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "z")]
        ring: RingArg,
        /// Cancel invertible differential entries before taking homology
        #[arg(long)]
        simplify: bool,
    },
    /// Annular Khovanov homology
    Akh {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "z")]
        ring: RingArg,
        #[arg(long)]
        simplify: bool,
    },
    /// Lee homology ranks by homological degree
    Lee {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Reduced Khovanov homology
    Reduced {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "z")]
        ring: RingArg,
        /// Arc label carrying the basepoint (default: the smallest label)
        #[arg(long)]
        basepoint: Option<u32>,
    },
    /// Run a detector
    Detect {
        #[command(subcommand)]
        which: DetectCmd,
    },
    /// Run a validation battery over the bundled corpus
    Verify { suite: Suite },
    /// Print a bundled reference table
    Tables {
        #[command(subcommand)]
        which: TableCmd,
    },
}

#[derive(Subcommand, Debug)]
enum DetectCmd {
    /// Braid and clasp-braid detection from annular Khovanov homology of a knot
    Annular {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Whitehead link and L7n2 from integral Khovanov homology
    Kh {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Case labels from the top Alexander slice of link Floer homology
    Hfl {
        /// JSON shape (`khovanov.shape/1`) or HFL table (`khovanov.hfl/1`)
        #[arg(long, conflicts_with = "twisted")]
        table: Option<String>,
        /// Use the bundled HFL table of the N-twisted Whitehead link
        #[arg(long)]
        twisted: Option<i64>,
        #[arg(long, default_value_t = 2)]
        components: usize,
    },
    /// Linking number of a two-component link from Lee homology
    Linking {
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    Skein,
    Bounds,
    Tables,
    Euler,
}

#[derive(Subcommand, Debug)]
enum TableCmd {
    /// Annular Khovanov homology of the clasp-braid knot with N twists
    AkhClasp {
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// Annular Khovanov homology of the closure of sigma^-N
    AkhSigma { n: i64 },
    /// Integral Khovanov homology of a named link
    Kh { link: LinkArg },
    /// Link Floer homology of the N-twisted Whitehead link
    Hfl {
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// Knot Floer homology of the twist knot with N half twists
    Hfk { n: i64 },
    /// Geography shape B, P, E or PE (the product of P and E)
    Shape { family: ShapeArg, n: i64 },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LinkArg {
    Whitehead,
    L7n2,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ShapeArg {
    B,
    P,
    E,
    Pe,
}

fn emit_group(g: &GradedAbelianGroup, format: Format) -> String {
    match format {
        Format::Text => g.to_text(),
        Format::Json => g.to_json().to_string() + "\n",
        Format::Csv => g.to_csv(),
    }
}

fn group(input: &InputArgs, variant: Variant, ring: Ring, basepoint: Option<u32>, simp: bool) -> Result<GradedAbelianGroup, Failure> {
    let l = load(input)?;
    let c = match variant {
        Variant::Annular => build_complex(l.annular()?, variant, ring, basepoint)?,
        Variant::Reduced => {
            let bp = basepoint.or_else(|| l.link.arcs().iter().copied().min());
            build_complex(&l.link, variant, ring, bp)?
        }
        _ => build_complex(&l.link, variant, ring, basepoint)?,
    };
    let c = if simp { simplify(&c) } else { c };
    Ok(homology(&c)?)
}

fn emit_verdict(v: &DetectionVerdict, format: Format) -> Result<String, Failure> {
    let s = match format {
        Format::Text => {
            let mut s = format!("theorem: {}\nconfidence: {:?}\n", v.theorem, v.confidence);
            for l in &v.verdict {
                s += &format!("verdict: {l}\n");
            }
            s + &format!("evidence: {}\n", v.evidence)
        }
        Format::Json | Format::Csv => v.to_json().to_string() + "\n",
    };
    if v.conclusive {
        Ok(s)
    } else {
        print!("{s}");
        Err(Failure::Negative("inconclusive".into()))
    }
}

fn parse_slice(text: &str) -> Result<Shape, Failure> {
    let v: Value = serde_json::from_str(text).map_err(|e| Failure::Parse(e.to_string()))?;
    let bad = || Failure::Parse("expected a khovanov.shape/1 or khovanov.hfl/1 document".into());
    let entries = v["entries"].as_array().ok_or_else(bad)?;
    match v["schema"].as_str() {
        Some("khovanov.shape/1") => entries
            .iter()
            .map(|e| {
                let a = e["a"].as_array().ok_or_else(bad)?.iter().map(|x| x.as_i64().ok_or_else(bad)).collect::<Result<Vec<_>, _>>()?;
                Ok((a, e["rank"].as_u64().ok_or_else(bad)? as usize))
            })
            .collect(),
        Some("khovanov.hfl/1") => {
            let mut cells = Vec::new();
            for e in entries {
                let f = |k: &str| e[k].as_i64().ok_or_else(bad);
                cells.push((f("a1")?, f("a2")?, e["rank"].as_u64().ok_or_else(bad)? as usize));
            }
            let top = cells.iter().map(|c| c.1).max().ok_or_else(bad)?;
            let mut s = Shape::new();
            for (a1, a2, r) in cells {
                if a2 == top {
                    *s.entry(vec![a1]).or_insert(0) += r;
                }
            }
            Ok(s)
        }
        _ => Err(bad()),
    }
}

fn emit_json_or_csv(v: Value, csv: Option<String>, format: Format) -> String {
    match (format, csv) {
        (Format::Csv, Some(c)) => c,
        (Format::Text, _) => serde_json::to_string_pretty(&v).unwrap() + "\n",
        _ => v.to_string() + "\n",
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let f = cli.format;
    match &cli.cmd {
        Cmd::Kh { input, ring, simplify } => Ok(emit_group(&group(input, Variant::Plain, (*ring).into(), None, *simplify)?, f)),
        Cmd::Akh { input, ring, simplify } => Ok(emit_group(&group(input, Variant::Annular, (*ring).into(), None, *simplify)?, f)),
        Cmd::Reduced { input, ring, basepoint } => Ok(emit_group(&group(input, Variant::Reduced, (*ring).into(), *basepoint, false)?, f)),
        Cmd::Lee { input } => {
            let l = lee_homology(&load(input)?.link)?;
            Ok(match f {
                Format::Csv => l.ranks_by_i.iter().fold("i,rank\n".to_string(), |s, (i, r)| s + &format!("{i},{r}\n")),
                Format::Json => l.to_json().to_string() + "\n",
                Format::Text => l.ranks_by_i.iter().map(|(i, r)| format!("i={i:>3}  Q^{r}\n")).collect(),
            })
        }
        Cmd::Detect { which } => match which {
            DetectCmd::Annular { input } => {
                let l = load(input)?;
                let a = l.annular()?;
                let g = homology(&build_complex(a, Variant::Annular, Ring::Rationals, None)?)?;
                let t = rank_table(&g, Ring::Rationals)?;
                emit_verdict(&annular_detect(&t, l.link.component_count())?, f)
            }
            DetectCmd::Kh { input } => {
                let g = group(input, Variant::Plain, Ring::Integers, None, false)?;
                emit_verdict(&kh_detect(&g)?, f)
            }
            DetectCmd::Hfl { table, twisted, components } => {
                let slice = match (table, twisted) {
                    (Some(path), _) => parse_slice(&fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{path}: {e}")))?)?,
                    (None, Some(n)) => hfl_twisted_whitehead(*n).top_slice(),
                    (None, None) => return Err(Failure::Parse("give --table or --twisted".into())),
                };
                emit_verdict(&hfl_classify(&slice, *components)?, f)
            }
            DetectCmd::Linking { input } => {
                let l = lee_homology(&load(input)?.link)?;
                let lk = linking_from_lee(&l)?;
                Ok(emit_json_or_csv(json!({"schema": "khovanov.linking/1", "linking_number": lk, "lee": l.to_json()}), None, f))
            }
        },
        Cmd::Verify { suite } => {
            let checks = match suite {
                Suite::Skein => verify::skein()?,
                Suite::Bounds => verify::bounds()?,
                Suite::Tables => verify::tables()?,
                Suite::Euler => verify::euler()?,
            };
            let mut s = String::new();
            for c in &checks {
                s += &match f {
                    Format::Text => format!("{} {}\n", if c.ok { "ok  " } else { "FAIL" }, c.name),
                    _ => json!({"suite": format!("{suite:?}").to_lowercase(), "check": c.name, "ok": c.ok, "detail": c.detail}).to_string() + "\n",
                };
            }
            let failed = checks.iter().filter(|c| !c.ok).count();
            if failed > 0 {
                print!("{s}");
                return Err(Failure::Negative(format!("{failed} of {} checks failed", checks.len())));
            }
            Ok(s)
        }
        Cmd::Tables { which } => Ok(match which {
            TableCmd::AkhClasp { n } => emit_ranks(&akh_clasp(*n), f),
            TableCmd::AkhSigma { n } => emit_ranks(&akh_sigma(*n)?, f),
            TableCmd::Kh { link } => emit_group(
                &kh_reference(match link {
                    LinkArg::Whitehead => KnownLink::Whitehead,
                    LinkArg::L7n2 => KnownLink::L7n2,
                }),
                f,
            ),
            TableCmd::Hfl { n } => {
                let t = hfl_twisted_whitehead(*n);
                emit_json_or_csv(t.to_json(), Some(t.to_csv()), f)
            }
            TableCmd::Hfk { n } => {
                let t = hfk_twist_knot(*n)?;
                let rows: Vec<Value> = t.iter().map(|(&(a, m), r)| json!({"alexander": a, "maslov": m, "rank": r})).collect();
                let csv = t.iter().fold("alexander,maslov,rank\n".to_string(), |s, ((a, m), r)| s + &format!("{a},{m},{r}\n"));
                emit_json_or_csv(json!({"schema": "khovanov.hfk/1", "entries": rows}), Some(csv), f)
            }
            TableCmd::Shape { family, n } => {
                let s = match family {
                    ShapeArg::B => shape(ShapeFamily::B, *n)?,
                    ShapeArg::P => shape(ShapeFamily::P, *n)?,
                    ShapeArg::E => shape(ShapeFamily::E, *n)?,
                    ShapeArg::Pe => tensor(&shape(ShapeFamily::P, *n)?, &shape(ShapeFamily::E, *n)?),
                };
                emit_json_or_csv(shape_to_json(&s), None, f)
            }
        }),
    }
}

fn emit_ranks(t: &khovanov::homology::GradedRankTable, format: Format) -> String {
    match format {
        Format::Text => t.to_text(),
        Format::Json => t.to_json().to_string() + "\n",
        Format::Csv => t.to_csv(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(4);
        }
    }
    match run(&cli) {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            let (Failure::Negative(m) | Failure::Parse(m) | Failure::Hypothesis(m) | Failure::Internal(m)) = &e;
            eprintln!("error: {m}");
            ExitCode::from(e.code())
        }
    }
}
