use std::fs;

use khovanov::corpus;
use khovanov::diagram::{families, parse_braid, AnnularDiagram, LinkDiagram, Tangle};

use crate::Failure;

#[derive(clap::Args, Debug, Clone, Default)]
pub struct InputArgs {
    /// PD code, or a file containing one (comments may carry `# axis: F`)
    #[arg(long, group = "source")]
    pub pd: Option<String>,
    /// Braid word such as "2; -1 -1 -1"; the closure carries the braid axis
    #[arg(long, group = "source")]
    pub braid: Option<String>,
    /// Named diagram: unknot, hopf, trefoil, trefoil-left, figure-eight, whitehead, l7n2,
    /// twisted:N, clasp:N, sigma:N, core, or corpus:NAME
    #[arg(long, group = "source")]
    pub family: Option<String>,
    /// Face index of the annular axis (PD input)
    #[arg(long)]
    pub axis: Option<usize>,
    /// Face index of the outer face (PD input)
    #[arg(long, requires = "axis")]
    pub outer: Option<usize>,
}

pub struct Loaded {
    pub link: LinkDiagram,
    pub annular: Option<AnnularDiagram>,
}

impl Loaded {
    pub fn annular(&self) -> Result<&AnnularDiagram, Failure> {
        self.annular
            .as_ref()
            .ok_or_else(|| Failure::Hypothesis("this command needs an annular diagram: pass --axis, a braid or an annular family".into()))
    }
}

fn link(d: LinkDiagram) -> Loaded {
    Loaded { link: d, annular: None }
}

fn annular(a: AnnularDiagram) -> Loaded {
    Loaded { link: a.base().clone(), annular: Some(a) }
}

fn number(name: &str, v: &str) -> Result<i64, Failure> {
    v.parse().map_err(|_| Failure::Parse(format!("bad parameter '{v}' for family {name}")))
}

fn family(spec: &str) -> Result<Loaded, Failure> {
    let (name, arg) = match spec.split_once(':') {
        Some((a, b)) => (a, Some(b)),
        None => (spec, None),
    };
    let need = || arg.ok_or_else(|| Failure::Parse(format!("family {name} needs a parameter, e.g. {name}:2")));
    Ok(match name {
        "unknot" => link(families::unknot()),
        "hopf" => link(families::hopf()),
        "trefoil" => link(families::right_trefoil()),
        "trefoil-left" => link(families::left_trefoil()),
        "figure-eight" => link(families::figure_eight()),
        "whitehead" => link(families::whitehead()),
        "l7n2" => link(families::l7n2()),
        "core" => annular(families::identity_closure(1)),
        "twisted" => link(families::twisted_whitehead(number(name, need()?)?)),
        "clasp" => annular(families::clasp(number(name, need()?)?)),
        "sigma" => {
            let n = number(name, need()?)?;
            if n < 0 {
                return Err(Failure::Parse("sigma:N needs N >= 0".into()));
            }
            annular(families::sigma_closure(n as usize))
        }
        "corpus" => {
            let e = corpus::get(need()?).ok_or_else(|| Failure::Parse(format!("no corpus entry '{}'", arg.unwrap())))?;
            Loaded { link: e.link, annular: e.annular }
        }
        _ => return Err(Failure::Parse(format!("unknown family '{name}'"))),
    })
}

pub fn load(args: &InputArgs) -> Result<Loaded, Failure> {
    if let Some(f) = &args.family {
        return family(f);
    }
    if let Some(b) = &args.braid {
        let (strands, word) = parse_braid(b)?;
        let t = Tangle::braid(&word, strands)?;
        return Ok(annular(t.closure()?));
    }
    let Some(pd) = &args.pd else {
        return Err(Failure::Parse("no input: give --pd, --braid or --family".into()));
    };
    let text = if pd.trim_start().starts_with("PD") { pd.clone() } else { fs::read_to_string(pd).map_err(|e| Failure::Parse(format!("{pd}: {e}")))? };
    let (d, a) = corpus::load(&text)?;
    if let Some(axis) = args.axis {
        let a = match args.outer {
            Some(o) => AnnularDiagram::mark_axis_with_outer(&d, axis, o)?,
            None => AnnularDiagram::mark_axis(&d, axis)?,
        };
        return Ok(annular(a));
    }
    Ok(Loaded { link: d, annular: a })
}
