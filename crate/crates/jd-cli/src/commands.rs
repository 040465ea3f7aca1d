//! Subcommand bodies. Each returns the text to print and an exit code.

use jd_abelian::Structure;
use jd_diagram::{parse_expr, render_expr, Expr};
use jd_enumeration::{counts, rank_formula};
use jd_lie::{FreeLie, LieError, QuasiLie};
use jd_operators::{apply_named, OpError, OpOutput};
use jd_spaces::{Catalog, Flavor, Space, SpaceError};
use jd_verify::{run_suite, Params, VerifyError, SUITES};
use serde_json::json;

use crate::cache::Cache;
use crate::{Cli, Command, SpaceArgs, SpaceKind};

pub struct Output {
    pub text: String,
    pub code: u8,
}

pub struct Failure {
    pub message: String,
    pub code: u8,
}

impl Failure {
    fn usage(m: impl Into<String>) -> Self {
        Failure { message: m.into(), code: 1 }
    }
}

impl From<SpaceError> for Failure {
    fn from(e: SpaceError) -> Self {
        let code = if matches!(e, SpaceError::Bounds { .. }) { 3 } else { 1 };
        Failure { message: e.to_string(), code }
    }
}

impl From<OpError> for Failure {
    fn from(e: OpError) -> Self {
        match e {
            OpError::Space(s) => s.into(),
            e => Failure::usage(e.to_string()),
        }
    }
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        match e {
            LieError::Space(s) => s.into(),
            e => Failure::usage(e.to_string()),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        Failure::usage(e.to_string())
    }
}

fn ok(text: String) -> Result<Output, Failure> {
    Ok(Output { text, code: 0 })
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

pub fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Basis(a) => basis(a, cli.json),
        Command::Structure(a) => structure(a, cli.json),
        Command::Apply { genus, op, exprs } => apply(*genus, op, exprs, cli.json),
        Command::Verify { suite, list, genus, degree, max_ideg, seed, samples, time } => {
            if *list {
                return ok(SUITES.iter().map(|s| format!("{:<20} {}\n", s.id, s.about)).collect());
            }
            let Some(id) = suite else { return Err(Failure::usage("missing suite name (see `jd verify --list`)")) };
            let params = Params { genus: *genus, degree: *degree, max_ideg: *max_ideg, seed: *seed, samples: *samples, timed: *time };
            let report = run_suite(id, &params)?;
            let code = if report.failures() > 0 {
                2
            } else if report.skipped() > 0 {
                3
            } else {
                0
            };
            let text = if cli.json { line(report.to_json()) } else { report.to_text() };
            Ok(Output { text, code })
        }
        Command::Count { length, alphabet, genus } => count(*length, *alphabet, *genus, cli.json),
        Command::Lie { genus, degree, quasi } => lie(*genus, *degree, *quasi, cli.json),
    }
}

fn flavor(a: &SpaceArgs) -> Result<Flavor, Failure> {
    if a.loops.is_some() && a.space != SpaceKind::C {
        return Err(Failure::usage("--loops applies to connected spaces only"));
    }
    if a.legs.is_some() && a.space != SpaceKind::Full {
        return Err(Failure::usage("--legs applies to `full` only"));
    }
    Ok(match a.space {
        SpaceKind::C => Flavor::Connected { ideg: a.ideg, loops: a.loops },
        SpaceKind::Y => Flavor::StrutFree { ideg: a.ideg },
        SpaceKind::Full => Flavor::Full { ideg: a.ideg, legs: a.legs.ok_or_else(|| Failure::usage("`full` needs --legs"))? },
        SpaceKind::Sym => Flavor::OneLoopSymmetric { ideg: a.ideg },
        SpaceKind::Period => {
            if a.ideg % 2 != 0 {
                return Err(Failure::usage("periodic wheels need an even i-degree"));
            }
            Flavor::OneLoopPeriodic { ideg: a.ideg }
        }
    })
}

fn presentation(a: &SpaceArgs) -> Result<(Flavor, crate::cache::Payload), Failure> {
    let f = flavor(a)?;
    let (p, _) = Cache::from_env().presentation(a.genus, f, || Space::new(Catalog::global(), a.genus, f))?;
    Ok((f, p))
}

fn structure_json(s: &Structure) -> serde_json::Value {
    json!({
        "rank": s.rank,
        "invariantFactors": s.invariant_factors.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "text": s.describe(),
    })
}

fn basis(a: &SpaceArgs, as_json: bool) -> Result<Output, Failure> {
    let (f, p) = presentation(a)?;
    if as_json {
        return ok(line(json!({ "genus": a.genus, "space": f.to_string(), "generators": p.generators })));
    }
    ok(p.generators.iter().enumerate().map(|(i, g)| format!("{i:>4}  {g}\n")).collect())
}

fn structure(a: &SpaceArgs, as_json: bool) -> Result<Output, Failure> {
    let (f, p) = presentation(a)?;
    let s = p.group.structure();
    if as_json {
        return ok(line(json!({ "genus": a.genus, "space": f.to_string(), "generators": p.generators.len(), "structure": structure_json(&s) })));
    }
    ok(line(s.describe()))
}

fn apply(genus: u16, op: &str, exprs: &[String], as_json: bool) -> Result<Output, Failure> {
    let args = exprs.iter().map(|t| parse_expr(t).map_err(|e| Failure::usage(format!("cannot parse `{t}`: {e}")))).collect::<Result<Vec<Expr>, _>>()?;
    if let Some(e) = args.iter().find(|e| e.max_index() > genus) {
        return Err(Failure::usage(format!("`{}` uses labels beyond genus {genus}", render_expr(e))));
    }
    let out = apply_named(op, &args)?;
    let text = out.to_string();
    if as_json {
        let ring = match &out {
            OpOutput::Expr(e) => format!("{:?}", e.ring()),
            OpOutput::Half(_) => "Q/Z".into(),
        };
        return ok(line(json!({ "op": op, "genus": genus, "ring": ring, "result": text })));
    }
    ok(line(text))
}

fn count(length: usize, alphabet: Option<usize>, genus: Option<u16>, as_json: bool) -> Result<Output, Failure> {
    let k = match (alphabet, genus) {
        (Some(k), _) => k,
        (None, Some(g)) => 2 * g as usize,
        (None, None) => return Err(Failure::usage("give --alphabet or --genus")),
    };
    let c = counts(k, length).map_err(|e| Failure::usage(e.to_string()))?;
    let rank = genus.map(|g| rank_formula(g, length).map_err(|e| e.to_string()));
    if as_json {
        let mut v = serde_json::to_value(&c).expect("counts serialize");
        if let Some(r) = &rank {
            v["oneLoopRank"] = match r {
                Ok(r) => json!(r),
                Err(e) => json!({ "error": e }),
            };
        }
        return ok(line(v));
    }
    let mut s = format!(
        "alphabet {k}, length {length}\nnecklaces {}\nbracelets {}\nLie dimension {}\ntotients {:?}\n",
        c.necklaces, c.bracelets, c.witt_dim, c.totients
    );
    if let Some(r) = rank {
        s.push_str(&match r {
            Ok(r) => format!("rank A^c_{{{length},1}} {r}\n"),
            Err(e) => format!("rank A^c_{{{length},1}}: {e}\n"),
        });
    }
    ok(s)
}

fn lie(genus: u16, degree: usize, quasi: bool, as_json: bool) -> Result<Output, Failure> {
    if genus == 0 || degree == 0 {
        return Err(Failure::usage("genus and degree must be positive"));
    }
    let (s, names): (Structure, Vec<String>) = if quasi {
        let q = QuasiLie::cached(genus, degree)?;
        (q.group().structure(), q.generators().iter().map(|t| t.to_string()).collect())
    } else {
        let l = FreeLie::cached(genus, degree)?;
        (jd_abelian::PresentedGroup::free(l.dim()).structure(), (0..l.dim()).map(|i| l.basis_name(i)).collect())
    };
    if as_json {
        return ok(line(json!({ "genus": genus, "degree": degree, "quasi": quasi, "structure": structure_json(&s), "basis": names })));
    }
    let mut out = format!("{}\n", s.describe());
    for (i, n) in names.iter().enumerate() {
        out.push_str(&format!("{i:>4}  {n}\n"));
    }
    ok(out)
}
