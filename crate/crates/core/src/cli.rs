//! Command-line front end.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::crystals::{
    braiding_obstruction, cactus_action, check_cactus_action, check_coboundary, coboundary_triples,
    commutor_c, commutor_s, decompose, shapes_up_to, to_dot, Crystal, CrystalMap,
    KashiwaraCommutor, Shape,
};
use crate::error::Error;
use crate::groups::Violation;
use crate::uqsl2::{
    braiding_matrix, cactus_relation_holds, irreducible, unitarized, unitarized_matrix,
    verify_kt07, yang_baxter_v1, Frame,
};

/// Environment variable naming the directory artifacts are written to when `--output` is absent.
pub const OUTPUT_DIR_ENV: &str = "COBOUNDARY_OUTPUT_DIR";

#[derive(Parser, Debug)]
#[command(
    name = "coboundary",
    version,
    about = "sl2 crystals, cactus commutors and quantum R-matrices"
)]
pub struct Cli {
    /// Output format; `dot` is only available for `crystal graph`.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the artifact to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    /// Kashiwara-involution commutor.
    #[value(name = "c")]
    C,
    /// Schützenberger commutor.
    #[value(name = "S")]
    S,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Crystal graphs and decompositions.
    Crystal {
        #[command(subcommand)]
        cmd: CrystalCmd,
    },
    /// The crystal commutor `A ⊗ B -> B ⊗ A`.
    Commutor {
        #[arg(long)]
        a: Shape,
        #[arg(long)]
        b: Shape,
        #[arg(long, value_enum, default_value = "c")]
        variant: Variant,
    },
    /// Cactus group action on tensor products of crystals.
    Cactus {
        #[command(subcommand)]
        cmd: CactusCmd,
    },
    /// Exhaustive verification suites.
    Check {
        #[command(subcommand)]
        cmd: CheckCmd,
    },
    /// The braiding `flip∘R` (or `flip∘R̄` with `--unitarize`) on `V_m ⊗ V_n`.
    Rmatrix {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "s1", value_parser = parse_frame)]
        frame: Frame,
        #[arg(long)]
        unitarize: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum CrystalCmd {
    Graph {
        #[arg(long)]
        shape: Shape,
    },
    Decompose {
        #[arg(long)]
        shape: Shape,
    },
}

#[derive(Subcommand, Debug)]
pub enum CactusCmd {
    Act {
        #[arg(long)]
        shape: Shape,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum CheckCmd {
    /// Involutivity and the cactus relation for the crystal commutor.
    Coboundary {
        #[arg(long, default_value_t = 2)]
        max: u32,
    },
    /// Cactus group relations for the induced action on all shapes.
    CactusAction {
        #[arg(long, default_value_t = 3)]
        factors: usize,
        #[arg(long, default_value_t = 2)]
        max: u32,
    },
    /// No natural braiding on sl2 crystals.
    BraidingObstruction,
    /// Reduced `flip∘R̄` against the signed crystal commutor.
    Kt07 {
        #[arg(long, default_value_t = 3)]
        max: u32,
    },
    /// Braid relation for `flip∘R` and cactus relation for `flip∘R̄` on `V_1^{⊗3}`.
    YangBaxter,
}

fn parse_frame(s: &str) -> Result<Frame, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A finished command: what to emit, where by default, and the exit status.
struct Artifact {
    stem: String,
    ext: &'static str,
    body: String,
    status: i32,
}

enum Failure {
    Usage(String),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Index(_) | Error::Parse(_) | Error::Domain(_) => Failure::Usage(e.to_string()),
            e => Failure::Runtime(e),
        }
    }
}

/// Parse `argv` (including the program name), execute, and return the process exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli).and_then(|a| emit(&cli, a)) {
        Ok(status) => status,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Runtime(e)) => {
            println!("{}", pretty(&json!({ "error": e.to_string() })));
            1
        }
    }
}

fn emit(cli: &Cli, a: Artifact) -> Result<i32, Failure> {
    let path = match (&cli.output, std::env::var_os(OUTPUT_DIR_ENV)) {
        (Some(p), _) => Some(p.clone()),
        (None, Some(dir)) if !dir.is_empty() => {
            Some(PathBuf::from(dir).join(format!("{}.{}", a.stem, a.ext)))
        }
        _ => None,
    };
    match path {
        Some(p) => {
            if let Some(parent) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", parent.display())))?;
            }
            std::fs::write(&p, &a.body)
                .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
        }
        None => print!("{}", a.body),
    }
    Ok(a.status)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json serializes") + "\n"
}

fn format_for(cli: &Cli, default: Format, dot_ok: bool) -> Result<Format, Failure> {
    let f = cli.format.unwrap_or(default);
    if f == Format::Dot && !dot_ok {
        return Err(Failure::Usage(
            "--format dot is only available for `crystal graph`".into(),
        ));
    }
    Ok(f)
}

fn ext(f: Format) -> &'static str {
    match f {
        Format::Dot => "dot",
        Format::Json => "json",
        Format::Text => "txt",
    }
}

fn execute(cli: &Cli) -> Result<Artifact, Failure> {
    match &cli.command {
        Command::Crystal {
            cmd: CrystalCmd::Graph { shape },
        } => {
            let f = format_for(cli, Format::Dot, true)?;
            let body = match f {
                Format::Dot => to_dot(shape),
                Format::Json => graph_json(shape),
                Format::Text => graph_text(shape),
            };
            Ok(Artifact {
                stem: format!("crystal-graph-{shape}"),
                ext: ext(f),
                body,
                status: 0,
            })
        }
        Command::Crystal {
            cmd: CrystalCmd::Decompose { shape },
        } => {
            let f = format_for(cli, Format::Json, false)?;
            let d = decompose(shape);
            let body = match f {
                Format::Text => d
                    .components
                    .iter()
                    .map(|c| {
                        let chain: Vec<String> = c.chain.iter().map(ToString::to_string).collect();
                        format!("B_{}: {}\n", c.highest_weight, chain.join(" -> "))
                    })
                    .collect(),
                _ => pretty(&json!({
                    "shape": shape,
                    "highest_weights": d.highest_weights(),
                    "components": d.components.iter().map(|c| json!({
                        "highest_weight": c.highest_weight,
                        "source": c.source,
                        "chain": c.chain,
                    })).collect::<Vec<_>>(),
                })),
            };
            Ok(Artifact {
                stem: format!("crystal-decompose-{shape}"),
                ext: ext(f),
                body,
                status: 0,
            })
        }
        Command::Commutor { a, b, variant } => {
            let f = format_for(cli, Format::Json, false)?;
            let (map, tag) = match variant {
                Variant::C => (commutor_c(a, b)?, "c"),
                Variant::S => (commutor_s(a, b), "S"),
            };
            Ok(Artifact {
                stem: format!("commutor-{tag}-{a}-{b}"),
                ext: ext(f),
                body: map_body(&map, f),
                status: 0,
            })
        }
        Command::Cactus {
            cmd: CactusCmd::Act { shape, p, q },
        } => {
            let f = format_for(cli, Format::Json, false)?;
            let map = cactus_action(shape, *p, *q)?;
            Ok(Artifact {
                stem: format!("cactus-{shape}-{p}-{q}"),
                ext: ext(f),
                body: map_body(&map, f),
                status: 0,
            })
        }
        Command::Check { cmd } => check(cli, cmd),
        Command::Rmatrix {
            m,
            n,
            frame,
            unitarize,
        } => {
            let f = format_for(cli, Format::Json, false)?;
            let (vm, vn) = (irreducible(*m), irreducible(*n));
            let mat = if *unitarize {
                unitarized_matrix(&vm, &vn, *frame)?
            } else {
                braiding_matrix(&vm, &vn, *frame)?
            };
            let body = match f {
                Format::Text => mat.to_string(),
                _ => mat.to_json(*frame) + "\n",
            };
            let kind = if *unitarize { "unitarized" } else { "braiding" };
            Ok(Artifact {
                stem: format!("rmatrix-{m}-{n}-{frame}-{kind}"),
                ext: ext(f),
                body,
                status: 0,
            })
        }
    }
}

fn graph_json(shape: &Shape) -> String {
    let c = Crystal::new(shape.clone());
    let d = decompose(shape);
    pretty(&json!({
        "shape": shape,
        "vertices": c.elements.iter().map(|w| json!({
            "word": w,
            "wt": w.wt(),
            "eps": w.eps(),
            "phi": w.phi(),
            "component": d.locate(w).map(|l| l.0),
        })).collect::<Vec<_>>(),
        "edges": c.edges(),
    }))
}

fn graph_text(shape: &Shape) -> String {
    let c = Crystal::new(shape.clone());
    let mut out = String::new();
    for w in &c.elements {
        let _ = writeln!(out, "{w}  wt={} eps={} phi={}", w.wt(), w.eps(), w.phi());
    }
    for (a, b) in c.edges() {
        let _ = writeln!(out, "{a} -> {b}");
    }
    out
}

fn map_body(map: &CrystalMap, f: Format) -> String {
    match f {
        Format::Text => map
            .table
            .iter()
            .map(|(w, v)| format!("{w} ↦ {v}\n"))
            .collect(),
        _ => map.to_json() + "\n",
    }
}

fn report(
    name: &str,
    stem: String,
    f: Format,
    cases: usize,
    violations: Vec<Value>,
    extra: Value,
) -> Artifact {
    let passed = violations.is_empty();
    let body = match f {
        Format::Text => {
            let mut s = format!(
                "{name}: {} ({cases} cases)\n",
                if passed { "passed" } else { "FAILED" }
            );
            for v in &violations {
                let _ = writeln!(s, "  {v}");
            }
            s
        }
        _ => {
            let mut doc = json!({ "check": name, "passed": passed, "cases": cases, "violations": violations });
            if let (Value::Object(d), Value::Object(e)) = (&mut doc, extra) {
                d.extend(e);
            }
            pretty(&doc)
        }
    };
    Artifact {
        stem,
        ext: ext(f),
        body,
        status: if passed { 0 } else { 1 },
    }
}

fn violations_json(vs: &[Violation], context: Option<&str>) -> Vec<Value> {
    vs.iter()
        .map(|v| match context {
            Some(c) => json!({ "shape": c, "relation": v.relation, "witness": v.witness }),
            None => json!({ "relation": v.relation, "witness": v.witness }),
        })
        .collect()
}

fn check(cli: &Cli, cmd: &CheckCmd) -> Result<Artifact, Failure> {
    let f = format_for(cli, Format::Json, false)?;
    match cmd {
        CheckCmd::Coboundary { max } => {
            let triples = coboundary_triples(*max);
            let vs = check_coboundary(&KashiwaraCommutor, &triples)?;
            Ok(report(
                "coboundary",
                format!("check-coboundary-{max}"),
                f,
                triples.len(),
                violations_json(&vs, None),
                json!({}),
            ))
        }
        CheckCmd::CactusAction { factors, max } => {
            let shapes = shapes_up_to(*factors, *max);
            let mut vs = vec![];
            for s in &shapes {
                vs.extend(violations_json(
                    &check_cactus_action(s)?,
                    Some(&s.to_string()),
                ));
            }
            let stem = format!("check-cactus-action-{factors}-{max}");
            Ok(report(
                "cactus-action",
                stem,
                f,
                shapes.len(),
                vs,
                json!({}),
            ))
        }
        CheckCmd::BraidingObstruction => {
            let w = braiding_obstruction()?;
            let vs = if w.obstructed {
                vec![]
            } else {
                vec![
                    json!({ "relation": "naturality-forced value differs from hexagon-forced value", "witness": w.input }),
                ]
            };
            let extra = serde_json::to_value(&w).expect("witness serializes");
            Ok(report(
                "braiding-obstruction",
                "check-braiding-obstruction".into(),
                f,
                1,
                vs,
                json!({ "witness": extra }),
            ))
        }
        CheckCmd::Kt07 { max } => {
            let mut reports = vec![];
            let mut vs = vec![];
            for m in 0..=*max {
                for n in 0..=*max {
                    let r = verify_kt07(m, n)?;
                    if let Some(mm) = &r.mismatch {
                        vs.push(json!({ "m": m, "n": n, "word": mm.word, "expected": mm.expected, "got": mm.got }));
                    }
                    reports.push(r);
                }
            }
            let extra = json!({ "reports": reports });
            Ok(report(
                "kt07",
                format!("check-kt07-{max}"),
                f,
                reports.len(),
                vs,
                extra,
            ))
        }
        CheckCmd::YangBaxter => {
            let v = irreducible(1);
            let mut vs = vec![];
            if !yang_baxter_v1()? {
                vs.push(json!({ "relation": "σ1σ2σ1 = σ2σ1σ2 for flip∘R on V1⊗V1⊗V1" }));
            }
            if !cactus_relation_holds(unitarized, &v, &v, &v)? {
                vs.push(json!({ "relation": "cactus relation for flip∘R̄ on V1⊗V1⊗V1" }));
            }
            Ok(report(
                "yang-baxter",
                "check-yang-baxter".into(),
                f,
                2,
                vs,
                json!({}),
            ))
        }
    }
}
