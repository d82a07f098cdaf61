use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use digitop::catalog::{
    build_census, census_generated, ingest_graph6, write_catalog, write_census_csv, CensusOptions,
    Provenance,
};
use digitop::cycles::{classify_cycle_selfmap, expected_induced};
use digitop::graph6::write_graph6;
use digitop::homology::{induced_homology_map, ChainComplex, HomologyPresentation, IntegerMatrix};
use digitop::homotopy::{
    find_homotopy, one_step_homotopic, one_step_strong_homotopic, pointed_strongly_contractible,
    strong_contraction_ordering, strong_core, Homotopy, SearchConfig, StepKind, Verdict,
};
use digitop::input::{parse_image_arg, parse_map_arg};
use digitop::verify::{self, VerifyOptions, DEFAULT_SEED};
use digitop::{DigitalImage, Error};

#[derive(Parser)]
#[command(
    name = "digitop",
    version,
    about = "Strong homotopy of finite digital images"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Cap on maps visited by homotopy searches.
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    budget_maps: u64,
    /// Candidate-product size above which a warning is logged.
    #[arg(long, global = true, default_value_t = 1_000_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    budget_candidates: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    OneStep,
    OneStepStrong,
    Homotopic,
    Strong,
}

#[derive(Subcommand)]
enum Cmd {
    /// Homology groups of the clique complex.
    Homology {
        #[arg(long)]
        input: String,
        /// Highest degree reported; defaults to one above the top dimension.
        #[arg(long)]
        max_q: Option<usize>,
    },
    /// Decides whether two maps are homotopic in the given sense.
    Check {
        #[arg(long)]
        input: String,
        /// Codomain image; defaults to the input image.
        #[arg(long)]
        codomain: Option<String>,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, value_enum, default_value = "strong")]
        mode: Mode,
        /// Include a witnessing stage list when the answer is yes.
        #[arg(long)]
        witness: bool,
    },
    /// Strong core, contraction ordering and pointed contractibility.
    Reduce {
        #[arg(long)]
        input: String,
        #[arg(long)]
        basepoint: Option<usize>,
    },
    /// Counts connected images that are not strongly reducible.
    Census {
        /// Generate all connected images on `n` points (n <= 7).
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        n: Option<usize>,
        /// graph6 file of pairwise non-isomorphic connected images.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Also decide reducibility of the survivors.
        #[arg(long)]
        reducible: bool,
        /// Write the surviving entries as JSON lines.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Classifies a selfmap of the cycle C_n.
    ClassifyCycle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        map: String,
    },
    /// Runs the verification scorecard.
    VerifyPaper {
        /// Directory holding connected8.g6[.gz] and connected9.g6[.gz].
        #[arg(long, env = "DIGITOP_CORPUS")]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Run only these items.
        #[arg(long)]
        only: Vec<String>,
    },
}

enum Failure {
    Parse(String),
    /// Output is still printed.
    Undecided(String),
    /// Report printed, exit 1.
    Failed(String),
    Other(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Undecided(_) => 3,
            Failure::Failed(_) | Failure::Other(_) => 1,
        }
    }
}

fn parse_err(e: Error) -> Failure {
    Failure::Parse(e.to_string())
}

fn other(e: Error) -> Failure {
    Failure::Other(e.to_string())
}

type Run = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    if cli.jobs != 1 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
        {
            log::warn!("could not size the thread pool: {e}");
        }
    }
    let cfg = SearchConfig {
        max_maps: usize::try_from(cli.budget_maps).unwrap_or(usize::MAX),
        max_candidates: cli.budget_candidates.into(),
        parallel: cli.jobs != 1,
    };
    let result = match &cli.cmd {
        Cmd::Homology { input, max_q } => homology(cli.format, input, *max_q),
        Cmd::Check {
            input,
            codomain,
            f,
            g,
            mode,
            witness,
        } => check(
            cli.format,
            &cfg,
            input,
            codomain.as_deref(),
            f,
            g,
            *mode,
            *witness,
        ),
        Cmd::Reduce { input, basepoint } => reduce(cli.format, &cfg, input, *basepoint),
        Cmd::Census {
            n,
            input,
            reducible,
            catalog,
        } => census(
            cli.format,
            &cfg,
            *n,
            input.as_ref(),
            *reducible,
            catalog.as_ref(),
        ),
        Cmd::ClassifyCycle { n, map } => classify_cycle(cli.format, *n, map),
        Cmd::VerifyPaper { corpus, seed, only } => {
            verify_paper(cli.format, &cfg, corpus.clone(), *seed, only)
        }
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Parse(m) => eprintln!("error: {m}"),
                Failure::Undecided(m) | Failure::Failed(m) => print!("{m}"),
                Failure::Other(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn no_csv(format: Format) -> Result<(), Failure> {
    match format {
        Format::Csv => Err(Failure::Parse(
            "csv output is only available for census".into(),
        )),
        _ => Ok(()),
    }
}

fn to_json(v: &Value) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(v).expect("values serialize")
    )
}

fn group_text(h: &HomologyPresentation) -> String {
    let mut parts = Vec::new();
    match h.betti {
        0 => {}
        1 => parts.push("Z".to_string()),
        b => parts.push(format!("Z^{b}")),
    }
    parts.extend(h.torsion.iter().map(|d| format!("Z/{d}")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn homology(format: Format, input: &str, max_q: Option<usize>) -> Run {
    no_csv(format)?;
    let x = parse_image_arg(input).map_err(parse_err)?;
    let cc = ChainComplex::new(&x);
    let top = max_q.unwrap_or(cc.top_dimension() + 1);
    let groups = (0..=top)
        .map(|q| digitop::homology::homology_of(&cc, q))
        .collect::<Result<Vec<_>, _>>()
        .map_err(other)?;
    Ok(match format {
        Format::Text => groups
            .iter()
            .map(|h| format!("H_{} = {}\n", h.q, group_text(h)))
            .collect(),
        _ => to_json(&json!(groups)),
    })
}

fn matrix_json(m: &IntegerMatrix) -> Value {
    json!(m.to_rows())
}

#[allow(clippy::too_many_arguments)]
fn check(
    format: Format,
    cfg: &SearchConfig,
    input: &str,
    codomain: Option<&str>,
    f: &str,
    g: &str,
    mode: Mode,
    witness: bool,
) -> Run {
    no_csv(format)?;
    let x = parse_image_arg(input).map_err(parse_err)?;
    let y = match codomain {
        Some(c) => parse_image_arg(c).map_err(parse_err)?,
        None => x.clone(),
    };
    let f = parse_map_arg(f, &x, &y).map_err(parse_err)?;
    let g = parse_map_arg(g, &x, &y).map_err(parse_err)?;
    for (name, m) in [("f", &f), ("g", &g)] {
        m.require_continuous(name).map_err(parse_err)?;
    }
    let (verdict, stages) = match mode {
        Mode::OneStep | Mode::OneStepStrong => {
            let ok = if mode == Mode::OneStep {
                one_step_homotopic(&f, &g)
            } else {
                one_step_strong_homotopic(&f, &g)
            }
            .map_err(other)?;
            (
                Verdict::from_bool(ok),
                ok.then(|| Homotopy::from_maps(&[f.clone(), g.clone()])),
            )
        }
        Mode::Homotopic | Mode::Strong => {
            let kind = if mode == Mode::Strong {
                StepKind::Strong
            } else {
                StepKind::Ordinary
            };
            let out = find_homotopy(&f, &g, kind, cfg).map_err(other)?;
            let v = out.verdict();
            (v, out.found().map(Ok))
        }
    };
    let record = match stages {
        Some(h) if witness => Some(h.map_err(other)?.to_record()),
        _ => None,
    };
    let mode_name = match mode {
        Mode::OneStep => "one-step",
        Mode::OneStepStrong => "one-step-strong",
        Mode::Homotopic => "homotopic",
        Mode::Strong => "strong",
    };
    let out = match format {
        Format::Text => {
            let mut s = format!("{mode_name}: {verdict}\n");
            if let Some(r) = &record {
                for (t, st) in r.stages.iter().enumerate() {
                    s.push_str(&format!("  H_{t} = {st:?}\n"));
                }
            }
            s
        }
        _ => {
            let mut v = json!({ "mode": mode_name, "verdict": verdict });
            if let Some(r) = &record {
                v["witness"] = json!(r);
            }
            to_json(&v)
        }
    };
    if verdict == Verdict::Undecided {
        return Err(Failure::Undecided(out));
    }
    Ok(out)
}

fn reduce(format: Format, cfg: &SearchConfig, input: &str, basepoint: Option<usize>) -> Run {
    no_csv(format)?;
    let x = parse_image_arg(input).map_err(parse_err)?;
    if let Some(b) = basepoint {
        if b >= x.len() {
            return Err(Failure::Parse(format!(
                "basepoint {b} out of range for {} points",
                x.len()
            )));
        }
    }
    let core = strong_core(&x);
    let ordering = strong_contraction_ordering(&x);
    let pointed = match basepoint {
        Some(b) => Some((b, pointed_strongly_contractible(&x, b, cfg).map_err(other)?)),
        None => None,
    };
    let out = match format {
        Format::Text => {
            let label = |v: usize| x.label(v);
            let mut s = format!(
                "image: {} points, {} edges\ncore: {} points ({})\n",
                x.len(),
                x.edge_count(),
                core.image.len(),
                write_graph6(&core.image)
            );
            for (a, b) in &core.removed {
                s.push_str(&format!("  remove {} -> {}\n", label(*a), label(*b)));
            }
            match &ordering {
                Some(o) => {
                    let names: Vec<String> = o.order.iter().map(|&v| label(v)).collect();
                    s.push_str(&format!("contraction ordering: {}\n", names.join(", ")));
                }
                None => s.push_str("not strongly contractible\n"),
            }
            if let Some((b, v)) = pointed {
                s.push_str(&format!(
                    "pointed strongly contractible at {}: {v}\n",
                    label(b)
                ));
            }
            s
        }
        _ => {
            let mut v = json!({
                "n": x.len(),
                "graph6": write_graph6(&x),
                "core": {
                    "n": core.image.len(),
                    "graph6": write_graph6(&core.image),
                    "kept": core.translation.new_to_old,
                    "removed": core.removed,
                    "retraction": core.retraction,
                },
                "strongly_contractible": ordering.is_some(),
                "ordering": ordering.as_ref().map(|o| json!({ "order": o.order, "witnesses": o.witnesses })),
            });
            if let Some((b, verdict)) = pointed {
                v["pointed"] = json!({ "basepoint": b, "verdict": verdict });
            }
            to_json(&v)
        }
    };
    if matches!(pointed, Some((_, Verdict::Undecided))) {
        return Err(Failure::Undecided(out));
    }
    Ok(out)
}

fn census(
    format: Format,
    cfg: &SearchConfig,
    n: Option<usize>,
    input: Option<&PathBuf>,
    reducible: bool,
    catalog: Option<&PathBuf>,
) -> Run {
    let mut opts = CensusOptions {
        reducible,
        search: *cfg,
        ..CensusOptions::default()
    };
    let result = match (n, input) {
        (Some(n), _) => census_generated(n, &opts).map_err(parse_err)?,
        (None, Some(path)) => {
            let images = ingest_graph6(path).map_err(parse_err)?;
            opts.provenance = Provenance::Ingested;
            build_census(&images, &opts)
        }
        (None, None) => return Err(Failure::Parse("give --n or --input".into())),
    };
    if let Some(path) = catalog {
        write_catalog(&result.entries, path).map_err(other)?;
    }
    let out = match format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_census_csv(&result.rows, &mut buf).map_err(other)?;
            String::from_utf8(buf).expect("csv output is utf-8")
        }
        Format::Text => result
            .rows
            .iter()
            .map(|r| {
                let c = r.c.map_or("-".to_string(), |c| c.to_string());
                format!(
                    "n={} total={} d={} c={} undecided={}\n",
                    r.n, r.total, r.d, c, r.undecided
                )
            })
            .collect(),
        Format::Json => to_json(&json!(result.rows)),
    };
    if result.rows.iter().any(|r| r.undecided > 0) {
        return Err(Failure::Undecided(out));
    }
    Ok(out)
}

fn classify_cycle(format: Format, n: usize, map: &str) -> Run {
    no_csv(format)?;
    let cn = DigitalImage::cycle(n).map_err(parse_err)?;
    let f = parse_map_arg(map, &cn, &cn).map_err(parse_err)?;
    f.require_continuous("map").map_err(parse_err)?;
    let class = match classify_cycle_selfmap(&f) {
        Ok(c) => c,
        Err(Error::OutOfScope(reason)) => {
            return Ok(match format {
                Format::Text => format!("out of supported scope: {reason}\n"),
                _ => to_json(&json!({ "n": n, "class": "out_of_scope", "reason": reason })),
            });
        }
        Err(e) => return Err(other(e)),
    };
    let mut induced = Vec::new();
    for q in 0..=2 {
        let computed = induced_homology_map(&f, q).map_err(other)?;
        let expected = expected_induced(&f, q).map_err(other)?;
        induced.push((q, expected, expected.matches(&computed), computed.matrix));
    }
    Ok(match format {
        Format::Text => {
            let mut s = format!("C_{n}: {class:?}\n");
            for (q, e, ok, m) in &induced {
                s.push_str(&format!(
                    "  q={q}: expected {e:?}, computed {:?}{}\n",
                    m.to_rows(),
                    if *ok { "" } else { "  MISMATCH" }
                ));
            }
            s
        }
        _ => to_json(&json!({
            "n": n,
            "class": class,
            "induced": induced
                .iter()
                .map(|(q, e, ok, m)| json!({ "q": q, "expected": e, "computed": matrix_json(m), "agrees": ok }))
                .collect::<Vec<_>>(),
        })),
    })
}

fn verify_paper(
    format: Format,
    cfg: &SearchConfig,
    corpus: Option<PathBuf>,
    seed: u64,
    only: &[String],
) -> Run {
    no_csv(format)?;
    let opts = VerifyOptions {
        seed,
        corpus,
        search: *cfg,
    };
    let ids: Vec<&str> = if only.is_empty() {
        verify::IDS.to_vec()
    } else {
        for id in only {
            if !verify::IDS.contains(&id.as_str()) {
                return Err(Failure::Parse(format!(
                    "unknown item {id:?}; known: {}",
                    verify::IDS.join(", ")
                )));
            }
        }
        only.iter().map(String::as_str).collect()
    };
    let results: Vec<_> = ids.iter().map(|id| verify::run(id, &opts)).collect();
    let out = match format {
        Format::Text => results.iter().map(|r| format!("{r}\n")).collect(),
        _ => to_json(&json!(results)),
    };
    if results.iter().any(|r| r.failed()) {
        return Err(Failure::Failed(out));
    }
    Ok(out)
}
