//! The `aeclab` command line.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use aeclab_core::constructions::{
    build_scenario, graphs_up_to_order, random_corpus, ScenarioBody, ScenarioParams, DEFAULT_SEED,
    MAX_ENUMERATION_ORDER,
};
use aeclab_core::lab::{
    axiom_suite_for_host, jep_check, run_scenario, search_amalgam, suite_certificate,
    AmalgamProblem, JepStrategy, SuiteTally, DEFAULT_EXTRA, MAX_SUITE_ORDER,
};
use aeclab_core::{CertificateKind, ClassSpec, Embedding, Graph, SubmodelRelation};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crate::dsl::{
    parse_class_literal, parse_relation_literal, parse_spec, resolve, ClassForm, Pos,
    RelationForm, ResolvedSpec, SExpr,
};
use crate::report::{summarize, write_atomic, Corpus, Report};
use crate::text::write_graph;

/// Graph name that `axioms` sweeps over every small graph when the description file
/// does not define it.
pub const WILDCARD: &str = "G";

#[derive(Parser, Debug, Clone)]
#[command(name = "aeclab", version, about = "Finite checks for abstract elementary classes of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Write the JSON report to this file and print a summary instead.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    /// Seed of the random corpus.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Read the component relation in its strict-attach form.
    #[arg(long, global = true)]
    pub strict_attach: bool,
    /// Certificate kind every certificate must have (overrides the
    /// command default).
    #[arg(long, global = true)]
    pub expect: Option<String>,
    /// Description file whose graphs, classes and relations may be named.
    #[arg(long, global = true)]
    pub spec: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Parse a description file and evaluate its checks.
    Validate { file: PathBuf },
    /// Run the axiom suite for a relation over every small host.
    Axioms {
        #[arg(long)]
        rel: String,
        #[arg(long)]
        class: Option<String>,
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        #[arg(long, default_value_t = 4)]
        chain_len: usize,
        /// Largest graph the wildcard `G` ranges over.
        #[arg(long, default_value_t = 4)]
        wildcard_max: usize,
        /// Use the seeded random corpus (up to --max-size) as hosts.
        #[arg(long)]
        random: bool,
    },
    /// Bounded search for an amalgam of m1 and m2 over m0.
    Amalgamate {
        #[arg(long)]
        class: Option<String>,
        #[arg(long)]
        rel: String,
        #[arg(long)]
        m0: String,
        #[arg(long)]
        m1: String,
        #[arg(long)]
        m2: String,
        /// Image of each m0 vertex in m1, e.g. `0,1,2` (default: identity).
        #[arg(long)]
        e1: Option<String>,
        #[arg(long)]
        e2: Option<String>,
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_EXTRA)]
        extra: usize,
        #[arg(long)]
        disjoint: bool,
    },
    /// Joint embedding of two class members.
    Jep {
        #[arg(long)]
        class: Option<String>,
        #[arg(long)]
        rel: String,
        #[arg(long)]
        m: String,
        #[arg(long)]
        n: String,
        /// disjoint, join or search.
        #[arg(long, default_value = "disjoint")]
        strategy: String,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Build and run a named scenario and compare with its expected kind.
    Scenario {
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        mu: Option<usize>,
        #[arg(long)]
        kappa: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long)]
        extra: Option<usize>,
        /// Also write the scenario graphs and a manifest to this directory.
        #[arg(long)]
        bundle: Option<PathBuf>,
    },
    /// Dump the exhaustive (or random) corpus.
    Enumerate {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long)]
        random: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Axioms { .. } => "axioms",
            Command::Amalgamate { .. } => "amalgamate",
            Command::Jep { .. } => "jep",
            Command::Scenario { .. } => "scenario",
            Command::Enumerate { .. } => "enumerate",
        }
    }
}

/// Every setting that can change a report. The report path is left out.
fn config(cli: &Cli) -> BTreeMap<String, String> {
    let mut c = BTreeMap::new();
    let mut put = |k: &str, v: String| {
        c.insert(k.to_string(), v);
    };
    let opt = |v: &Option<usize>| v.map_or("default".to_string(), |x| x.to_string());
    put("seed", cli.common.seed.to_string());
    put("strict_attach", cli.common.strict_attach.to_string());
    if let Some(e) = &cli.common.expect {
        put("expect", e.clone());
    }
    if let Some(s) = &cli.common.spec {
        put("spec", s.display().to_string());
    }
    match &cli.command {
        Command::Validate { file } => put("file", file.display().to_string()),
        Command::Axioms {
            rel,
            class,
            max_size,
            chain_len,
            wildcard_max,
            random,
        } => {
            put("rel", rel.clone());
            put("class", class.clone().unwrap_or_else(|| "natural".into()));
            put("max_size", max_size.to_string());
            put("chain_len", chain_len.to_string());
            put("wildcard_max", wildcard_max.to_string());
            put("random", random.to_string());
        }
        Command::Amalgamate {
            class,
            rel,
            m0,
            m1,
            m2,
            e1,
            e2,
            bound,
            extra,
            disjoint,
        } => {
            put("class", class.clone().unwrap_or_else(|| "natural".into()));
            put("rel", rel.clone());
            put("m0", m0.clone());
            put("m1", m1.clone());
            put("m2", m2.clone());
            put("e1", e1.clone().unwrap_or_else(|| "identity".into()));
            put("e2", e2.clone().unwrap_or_else(|| "identity".into()));
            put("bound", opt(bound));
            put("extra", extra.to_string());
            put("disjoint", disjoint.to_string());
        }
        Command::Jep {
            class,
            rel,
            m,
            n,
            strategy,
            bound,
        } => {
            put("class", class.clone().unwrap_or_else(|| "natural".into()));
            put("rel", rel.clone());
            put("m", m.clone());
            put("n", n.clone());
            put("strategy", strategy.clone());
            put("bound", opt(bound));
        }
        Command::Scenario {
            name,
            n,
            k,
            mu,
            kappa,
            m,
            bound,
            extra,
            bundle,
        } => {
            put("name", name.clone());
            for (key, v) in [
                ("n", n),
                ("k", k),
                ("mu", mu),
                ("kappa", kappa),
                ("m", m),
                ("bound", bound),
                ("extra", extra),
            ] {
                if v.is_some() {
                    put(key, opt(v));
                }
            }
            if let Some(b) = bundle {
                put("bundle", b.display().to_string());
            }
        }
        Command::Enumerate { max_size, random } => {
            put("max_size", max_size.to_string());
            put("random", random.to_string());
        }
    }
    c
}

/// Runs one command. Never panics on bad input: problems become an
/// input-error report.
pub fn run(cli: &Cli) -> Report {
    let name = cli.command.name();
    let cfg = config(cli);
    let mut report = Report::new(name, cfg.clone());
    match execute(cli, &mut report) {
        Ok(()) => {
            report.settle();
            report
        }
        Err(msg) => Report::input_error(name, cfg, msg),
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {}", path.display(), e))
}

fn load_spec(path: &Path) -> Result<ResolvedSpec, String> {
    let src = read(path)?;
    let file = parse_spec(&src).map_err(|e| format!("{}: {}", path.display(), e))?;
    resolve(&file).map_err(|e| format!("{}: {}", path.display(), e))
}

fn thread_pool() -> Result<rayon::ThreadPool, String> {
    let threads = match std::env::var("AECLAB_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| format!("AECLAB_THREADS must be a positive integer, got '{}'", v))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| e.to_string())
}

fn expected_kind(common: &Common, default: Option<CertificateKind>) -> Result<Option<CertificateKind>, String> {
    match &common.expect {
        None => Ok(default),
        Some(s) => CertificateKind::parse(s).map(Some).ok_or_else(|| {
            format!(
                "--expect must be witness, bounded-refutation, complete-refutation or pass, got '{}'",
                s
            )
        }),
    }
}

fn class_of(spec: &ResolvedSpec, text: &str) -> Result<ClassSpec, String> {
    if let Some(c) = spec.class(text.trim()) {
        return Ok(c.clone());
    }
    let form = parse_class_literal(text).map_err(|e| format!("--class: {}", e))?;
    spec.resolve_class(&form, Pos { line: 1, col: 1 })
        .map_err(|e| format!("--class: {}", e))
}

fn relation_of(spec: &ResolvedSpec, text: &str, strict: bool) -> Result<SubmodelRelation, String> {
    let rel = match spec.relation(text.trim()) {
        Some(r) => r.clone(),
        None => {
            let form = parse_relation_literal(text).map_err(|e| format!("--rel: {}", e))?;
            spec.resolve_relation(&form).map_err(|e| format!("--rel: {}", e))?
        }
    };
    Ok(if strict { rel.with_strict_attach(true) } else { rel })
}

fn graph_of(spec: &ResolvedSpec, flag: &str, name: &str) -> Result<Graph, String> {
    spec.graph(name.trim())
        .ok_or_else(|| format!("--{}: unknown graph '{}'", flag, name))
}

fn embedding_of(flag: &str, text: &Option<String>, n: usize) -> Result<Embedding, String> {
    match text {
        None => Ok(Embedding::identity(n)),
        Some(t) if t.trim().is_empty() => Ok(Embedding::new(Vec::new())),
        Some(t) => t
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map(Embedding::new)
            .map_err(|_| format!("--{}: expected comma-separated vertex numbers, got '{}'", flag, t)),
    }
}

fn execute(cli: &Cli, report: &mut Report) -> Result<(), String> {
    let common = &cli.common;
    let pool = thread_pool()?;
    let spec = match &common.spec {
        Some(p) => load_spec(p)?,
        None => ResolvedSpec::default(),
    };
    match &cli.command {
        Command::Validate { file } => {
            let s = load_spec(file)?;
            report.checks = s.checks.iter().map(|c| c.evaluate()).collect();
            report.expected = expected_kind(common, None)?;
        }
        Command::Axioms {
            rel,
            class,
            max_size,
            chain_len,
            wildcard_max,
            random,
        } => {
            report.expected = expected_kind(common, Some(CertificateKind::Pass))?;
            if *max_size > MAX_SUITE_ORDER {
                return Err(format!("--max-size must be at most {}", MAX_SUITE_ORDER));
            }
            if *chain_len == 0 {
                return Err("--chain-len must be positive".into());
            }
            if *wildcard_max == 0 || *wildcard_max > MAX_ENUMERATION_ORDER {
                return Err(format!("--wildcard-max must be in 1..={}", MAX_ENUMERATION_ORDER));
            }
            let hosts: Vec<Graph> = if *random {
                random_corpus(common.seed)
                    .into_iter()
                    .filter(|g| g.order() <= *max_size)
                    .collect()
            } else {
                graphs_up_to_order(*max_size).map_err(|e| e.to_string())?
            };
            let sweep = uses_wildcard(&spec, rel, class.as_deref());
            let values: Vec<Option<Graph>> = if sweep {
                graphs_up_to_order(*wildcard_max)
                    .map_err(|e| e.to_string())?
                    .into_iter()
                    .filter(|g| g.order() > 0)
                    .map(Some)
                    .collect()
            } else {
                vec![None]
            };
            for value in values {
                let mut scope = spec.clone();
                if let Some(g) = &value {
                    scope.graphs.push((WILDCARD.to_string(), g.clone()));
                }
                let r = relation_of(&scope, rel, common.strict_attach)?;
                let c = match class {
                    Some(text) => class_of(&scope, text)?,
                    None => r.natural_class(),
                };
                let tallies: Vec<SuiteTally> = pool
                    .install(|| {
                        hosts
                            .par_iter()
                            .map(|h| axiom_suite_for_host(&r, &c, h, *chain_len))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .map_err(|e| e.to_string())?;
                let mut total = SuiteTally::default();
                for t in &tallies {
                    total.merge(t);
                }
                let mut cert = suite_certificate("axioms", &total);
                let names = graph_names(&c);
                cert.inputs.insert("relation".into(), r.literal(WILDCARD));
                cert.inputs.insert("class".into(), c.literal(&names));
                if let Some(g) = r.forbidden() {
                    cert.inputs.insert(format!("relation.{}", WILDCARD), g.to_text(WILDCARD));
                }
                for (n, g) in names.iter().zip(c.graphs()) {
                    cert.inputs.insert(format!("class.{}", n), g.to_text(n));
                }
                cert.inputs.insert(
                    "hosts".into(),
                    if *random {
                        format!("random corpus, orders <= {}", max_size)
                    } else {
                        format!("every graph with at most {} vertices", max_size)
                    },
                );
                cert.inputs.insert("chain_len".into(), chain_len.to_string());
                cert.seed = random.then_some(common.seed);
                cert.replay = format!(
                    "aeclab axioms --rel '{}' --max-size {} --chain-len {}{}",
                    rel,
                    max_size,
                    chain_len,
                    if *random { format!(" --random --seed {}", common.seed) } else { String::new() }
                );
                report.certificates.push(cert);
            }
        }
        Command::Amalgamate {
            class,
            rel,
            m0,
            m1,
            m2,
            e1,
            e2,
            bound,
            extra,
            disjoint,
        } => {
            report.expected = expected_kind(common, Some(CertificateKind::Witness))?;
            let r = relation_of(&spec, rel, common.strict_attach)?;
            let c = match class {
                Some(text) => class_of(&spec, text)?,
                None => r.natural_class(),
            };
            let g0 = graph_of(&spec, "m0", m0)?;
            let g1 = graph_of(&spec, "m1", m1)?;
            let g2 = graph_of(&spec, "m2", m2)?;
            let f1 = embedding_of("e1", e1, g0.order())?;
            let f2 = embedding_of("e2", e2, g0.order())?;
            if f1.len() != g0.order() || f2.len() != g0.order() {
                return Err(format!("--e1 and --e2 need one entry per vertex of m0 ({})", g0.order()));
            }
            if f1.as_slice().iter().any(|&v| v >= g1.order())
                || f2.as_slice().iter().any(|&v| v >= g2.order())
            {
                return Err("--e1/--e2 map outside m1/m2".into());
            }
            let union = (g1.order() + g2.order()).saturating_sub(g0.order());
            let b = bound.unwrap_or(union.max(g1.order()).max(g2.order()));
            let mut p = AmalgamProblem::new(c, r, g0, g1, g2, f1, f2, b);
            p.extra = *extra;
            p.disjoint = *disjoint;
            report.certificates.push(search_amalgam(&p).map_err(|e| e.to_string())?);
        }
        Command::Jep {
            class,
            rel,
            m,
            n,
            strategy,
            bound,
        } => {
            report.expected = expected_kind(common, Some(CertificateKind::Witness))?;
            let r = relation_of(&spec, rel, common.strict_attach)?;
            let c = match class {
                Some(text) => class_of(&spec, text)?,
                None => r.natural_class(),
            };
            let gm = graph_of(&spec, "m", m)?;
            let gn = graph_of(&spec, "n", n)?;
            let s = match strategy.as_str() {
                "disjoint" => JepStrategy::Disjoint,
                "join" => JepStrategy::Join,
                "search" => JepStrategy::Search {
                    bound: bound.unwrap_or(gm.order() + gn.order()),
                },
                other => {
                    return Err(format!(
                        "--strategy must be disjoint, join or search, got '{}'",
                        other
                    ))
                }
            };
            report
                .certificates
                .push(jep_check(&c, &r, &gm, &gn, s).map_err(|e| e.to_string())?);
        }
        Command::Scenario {
            name,
            n,
            k,
            mu,
            kappa,
            m,
            bound,
            extra,
            bundle,
        } => {
            let params = ScenarioParams {
                n: *n,
                k: *k,
                mu: *mu,
                kappa: *kappa,
                m: *m,
                bound: *bound,
                extra: *extra,
            };
            let mut s = build_scenario(name, &params).map_err(|e| e.to_string())?;
            if common.strict_attach {
                if let ScenarioBody::Amalgam(p) = &mut s.body {
                    p.rel = p.rel.clone().with_strict_attach(true);
                }
            }
            report.expected = expected_kind(common, Some(s.expected))?;
            let cert = run_scenario(&s).map_err(|e| e.to_string())?;
            if let Some(dir) = bundle {
                write_bundle(dir, &s)?;
            }
            report.certificates.push(cert);
        }
        Command::Enumerate { max_size, random } => {
            report.expected = expected_kind(common, None)?;
            let corpus = if *random {
                Corpus::new(&format!("random corpus, seed {}", common.seed), random_corpus(common.seed))
            } else {
                if *max_size == 0 || *max_size > MAX_ENUMERATION_ORDER {
                    return Err(format!("--max-size must be in 1..={}", MAX_ENUMERATION_ORDER));
                }
                let graphs = graphs_up_to_order(*max_size)
                    .map_err(|e| e.to_string())?
                    .into_iter()
                    .filter(|g| g.order() > 0)
                    .collect();
                Corpus::new(
                    &format!("isomorphism classes of orders 1..={}", max_size),
                    graphs,
                )
            };
            report.corpus = Some(corpus);
        }
    }
    Ok(())
}

fn graph_names(c: &ClassSpec) -> Vec<String> {
    (0..c.graphs().len()).map(|i| format!("C{}", i)).collect()
}

/// Whether a literal refers to the wildcard graph and the description leaves it
/// free.
fn uses_wildcard(spec: &ResolvedSpec, rel: &str, class: Option<&str>) -> bool {
    if spec.graph(WILDCARD).is_some() {
        return false;
    }
    let in_rel = parse_relation_literal(rel).is_ok_and(|f| match f {
        RelationForm::ForbBounded(g, _)
        | RelationForm::Count(g)
        | RelationForm::NoAdd(g, _)
        | RelationForm::TypeBounded(g, _)
        | RelationForm::FcClique(g)
        | RelationForm::FcComp(g) => g.name == WILDCARD,
        _ => false,
    });
    let in_class = class
        .and_then(|t| parse_class_literal(t).ok())
        .is_some_and(|f| match f {
            ClassForm::Forb(l) | ClassForm::NotAllEmbed(l) => l.iter().any(|i| i.name == WILDCARD),
            ClassForm::ForbCon(g) | ClassForm::NotBoth(g, _, _) => g.name == WILDCARD,
            ClassForm::Sentence(e) => expr_mentions(&e),
            ClassForm::CompMax(_) | ClassForm::CompCond(_, _) => false,
        });
    in_rel || in_class
}

fn expr_mentions(e: &SExpr) -> bool {
    match e {
        SExpr::Embeds(i) => i.name == WILDCARD,
        SExpr::Not(a) => expr_mentions(a),
        SExpr::And(a, b) | SExpr::Or(a, b) | SExpr::Implies(a, b) | SExpr::Iff(a, b) => {
            expr_mentions(a) || expr_mentions(b)
        }
    }
}

/// Class and relation literals naming the bundle's graph files.
fn bundle_literals(body: &ScenarioBody) -> (String, String) {
    let (class, rel) = match body {
        ScenarioBody::Amalgam(p) => {
            let names: Vec<String> = (0..p.class.graphs().len()).map(|i| format!("class{}", i)).collect();
            return (p.class.literal(&names), p.rel.literal("forbidden"));
        }
        ScenarioBody::Closure { rel, class, .. } => (class.clone(), rel.clone()),
        ScenarioBody::LimitStandIn { forbidden, kappa } => (
            ClassSpec::Forb {
                family: vec![forbidden.clone()],
            },
            SubmodelRelation::NoAdd {
                forbidden: forbidden.clone(),
                size: *kappa,
            },
        ),
        ScenarioBody::CountChain { forbidden, .. } => (
            ClassSpec::Forb {
                family: vec![forbidden.clone()],
            },
            SubmodelRelation::CountPreserving {
                forbidden: forbidden.clone(),
            },
        ),
    };
    // Outside amalgam bundles every class graph is the forbidden graph.
    let names = vec!["forbidden".to_string(); class.graphs().len()];
    (class.literal(&names), rel.literal("forbidden"))
}

#[derive(Serialize)]
struct Manifest<'a> {
    scenario: &'a str,
    params: &'a BTreeMap<String, usize>,
    expected: CertificateKind,
    files: Vec<ManifestFile>,
    class: String,
    relation: String,
}

#[derive(Serialize)]
struct ManifestFile {
    name: String,
    file: String,
}

fn write_bundle(
    dir: &Path,
    s: &aeclab_core::constructions::Scenario,
) -> Result<(), String> {
    let fail = |e: std::io::Error| format!("cannot write bundle {}: {}", dir.display(), e);
    fs::create_dir_all(dir).map_err(fail)?;
    let (class, relation) = bundle_literals(&s.body);
    let mut files = Vec::new();
    for (name, g) in s.graphs() {
        let file = format!("{}.graph", name);
        write_atomic(&dir.join(&file), write_graph(&name, &g).as_bytes()).map_err(fail)?;
        files.push(ManifestFile { name, file });
    }
    let manifest = Manifest {
        scenario: &s.name,
        params: &s.params,
        expected: s.expected,
        files,
        class,
        relation,
    };
    let mut json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    json.push('\n');
    write_atomic(&dir.join("manifest.json"), json.as_bytes()).map_err(fail)
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

/// Parses arguments, runs, writes output and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let report = run(&cli);
    let json = report.to_json();
    if let Some(e) = &report.error {
        eprintln!("error: {}", e);
    }
    match &cli.common.report {
        Some(path) => {
            if let Err(e) = write_atomic(path, json.as_bytes()) {
                eprintln!("error: cannot write report {}: {}", path.display(), e);
                return 2;
            }
            emit(&summarize(&json));
        }
        None => emit(&json),
    }
    report.exit_code
}
