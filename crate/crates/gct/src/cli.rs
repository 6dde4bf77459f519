//! Command-line driver: generate example categories, validate files,
//! evaluate predicates, enumerate families, apply the correspondence, and
//! run the theorem verifiers.
//!
//! Exit codes: 0 on success, 1 when a requested verification fails, 2 on
//! usage or data errors. Output ordering is deterministic, so identical
//! invocations produce identical bytes.

use crate::bridge::{cluster_tiltings, phi, phi_inverse, verify, Theorem, VerificationReport};
use crate::gen::{self, OrbitNaming, OrbitSpec};
use crate::homcat::BasicObject;
use crate::tricat::{enumerate, ghost_report, Kind, TriangCategory};
use crate::{Error, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "gct",
    about = "Exact computations around ghost cluster tilting in finite triangulated categories",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate one of the built-in example categories
    Gen(GenArgs),
    /// Validate a category file and optionally list its objects
    Validate(ValidateArgs),
    /// Evaluate the rigidity and tilting predicates on one object
    Predicates(PredicatesArgs),
    /// Enumerate all basic objects satisfying a predicate
    Enumerate(EnumerateArgs),
    /// Apply the correspondence X ↦ (Hom(T,X), T ∩ X[-1]) or its inverse
    Phi(PhiArgs),
    /// List the completions of a ghost rigid object to full rank
    Complete(CompleteArgs),
    /// Verify theorems for one or all cluster tilting objects
    Verify(VerifyArgs),
    /// Run the whole verification battery over several category files
    Report(ReportArgs),
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: GenFamily,
}

#[derive(Subcommand)]
enum GenFamily {
    /// Cluster category of A_n (objects named by polygon diagonals)
    Cluster {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Repetitive cluster category of A_n for the twist τ^-a[b]
    Repetitive {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        a: i64,
        #[arg(long, default_value_t = 2)]
        b: i64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Stable module category of the self-injective Nakayama algebra
    StableNakayama {
        #[arg(long, default_value_t = 2)]
        simples: usize,
        #[arg(long, default_value_t = 4)]
        loewy: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(short = 'c', long = "category")]
    category: PathBuf,
    /// Print the object names and exit
    #[arg(long)]
    list_objects: bool,
}

#[derive(Args)]
struct PredicatesArgs {
    #[arg(short = 'c', long = "category")]
    category: PathBuf,
    /// Tilting object: comma-separated object names
    #[arg(short = 'T', long = "tilting")]
    tilting: String,
    /// Subject object: comma-separated object names
    #[arg(short = 'X', long = "subject")]
    subject: String,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(short = 'c', long = "category")]
    category: PathBuf,
    #[arg(short = 'T', long = "tilting")]
    tilting: Option<String>,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Print at most this many results
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Rigid,
    #[value(alias = "cluster_tilting")]
    ClusterTilting,
    #[value(name = "t1-rigid", alias = "T1_rigid", alias = "t1_rigid")]
    T1Rigid,
    #[value(alias = "maximal_ghost_rigid")]
    MaximalGhostRigid,
    #[value(alias = "ghost_cluster_tilting")]
    GhostClusterTilting,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Rigid => Kind::Rigid,
            KindArg::ClusterTilting => Kind::ClusterTilting,
            KindArg::T1Rigid => Kind::T1Rigid,
            KindArg::MaximalGhostRigid => Kind::MaximalGhostRigid,
            KindArg::GhostClusterTilting => Kind::GhostClusterTilting,
        }
    }
}

#[derive(Args)]
struct PhiArgs {
    #[arg(short = 'c', long = "category")]
    category: PathBuf,
    #[arg(short = 'T', long = "tilting")]
    tilting: String,
    /// Object to map forward
    #[arg(short = 'X', long = "subject")]
    subject: Option<String>,
    /// Inverse input "MODS|KER": object names whose Yoneda modules form the
    /// family, then kernel summands of the tilting object
    #[arg(long)]
    inverse: Option<String>,
    /// Emit the image as JSON (dimensions, action matrices, provenance)
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CompleteArgs {
    #[arg(short = 'c', long = "category")]
    category: PathBuf,
    #[arg(short = 'T', long = "tilting")]
    tilting: String,
    #[arg(short = 'X', long = "subject")]
    subject: String,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(short = 'c', long = "category")]
    category: PathBuf,
    #[arg(short = 'T', long = "tilting")]
    tilting: Option<String>,
    /// Run for every cluster tilting object found by enumeration
    #[arg(long, conflicts_with = "tilting")]
    all_tilting: bool,
    /// Theorem id (a7, a9, thm5, thm6, thm7, f_stable, equi, two_cy,
    /// factor, prop_y4) or "all"
    #[arg(long)]
    theorem: String,
    /// Emit the reports as JSON instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ReportArgs {
    /// Category files (repeatable)
    #[arg(short = 'c', long = "category", required = true)]
    categories: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    /// Write to a file instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

/// Splits a comma-separated list of object names, keeping commas inside
/// parentheses (diagonal names) intact.
fn split_names(list: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in list.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
            }
            _ => cur.push(ch),
        }
    }
    out.push(cur);
    out.into_iter().filter(|s| !s.trim().is_empty()).collect()
}

/// Resolves one object name, allowing a trailing shift suffix "[k]" and
/// optional parentheses around the base name.
fn resolve_name(t: &TriangCategory, name: &str) -> Result<usize> {
    let name = name.trim();
    if let Some(id) = t.base.object_by_name(name) {
        return Ok(id);
    }
    if let Some(open) = name.rfind('[') {
        if let Some(stripped) = name.strip_suffix(']') {
            let base = &name[..open];
            let k: i64 = stripped[open + 1..]
                .parse()
                .map_err(|_| Error::UnknownObject(name.to_string()))?;
            // the base may be a literal name like "(0,2)" or a
            // parenthesized one like "(1/2)"
            let id = resolve_name(t, base).or_else(|_| {
                let inner = base
                    .strip_prefix('(')
                    .and_then(|b| b.strip_suffix(')'))
                    .ok_or_else(|| Error::UnknownObject(name.to_string()))?;
                resolve_name(t, inner)
            })?;
            return Ok(t.shift_id(id, k));
        }
    }
    Err(Error::UnknownObject(name.to_string()))
}

fn resolve_list(t: &TriangCategory, list: &str) -> Result<BasicObject> {
    let mut out = BasicObject::empty();
    for part in split_names(list) {
        out.insert(resolve_name(t, &part)?);
    }
    Ok(out)
}

fn load(path: &std::path::Path) -> Result<TriangCategory> {
    gen::load(path)
}

fn print_report_table(reports: &[VerificationReport]) {
    for r in reports {
        let status = if r.success() { "pass" } else { "FAIL" };
        println!(
            "{status}  {:<9} {:<12} T={:<28} |L|={:<4} |R|={:<4} matched={:<4} {}ms",
            r.theorem, r.category, r.tilting, r.left_card, r.right_card, r.matched, r.wall_ms
        );
        for f in &r.failures {
            println!("      failure: {f}");
        }
    }
}

fn run_inner(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen(args) => {
            let (t, path) = match args.family {
                GenFamily::Cluster { n, output } => {
                    (gen::gen_orbit(OrbitSpec::cluster(n), OrbitNaming::Diagonals, None)?, output)
                }
                GenFamily::Repetitive { n, a, b, output } => (
                    gen::gen_orbit(OrbitSpec { n, a, b }, OrbitNaming::ModuleShift, None)?,
                    output,
                ),
                GenFamily::StableNakayama {
                    simples,
                    loewy,
                    output,
                } => (gen::gen_stable_nakayama(simples, loewy)?, output),
            };
            gen::save(&t, &path)?;
            println!(
                "wrote {} ({} objects) to {}",
                t.label,
                t.base.object_count(),
                path.display()
            );
            Ok(true)
        }
        Command::Validate(args) => {
            let t = load(&args.category)?;
            if args.list_objects {
                for o in t.base.objects() {
                    println!("{}", o.name);
                }
            } else {
                println!(
                    "{}: valid ({} objects, serre data {})",
                    t.label,
                    t.base.object_count(),
                    if t.has_serre() { "present" } else { "absent" }
                );
            }
            Ok(true)
        }
        Command::Predicates(args) => {
            let t = load(&args.category)?;
            let tilting = resolve_list(&t, &args.tilting)?;
            if !t.is_cluster_tilting(&tilting) {
                return Err(Error::NotClusterTilting(tilting.display(&t.base)));
            }
            let subject = resolve_list(&t, &args.subject)?;
            let rep = ghost_report(&t, &tilting, &subject);
            println!("subject:              {}", rep.subject.display(&t.base));
            println!("tilting:              {}", rep.tilting.display(&t.base));
            println!("rigid:                {}", rep.rigid);
            println!("T1_rigid:             {}", rep.t1_rigid);
            println!("maximal_ghost_rigid:  {}", rep.maximal_ghost_rigid);
            println!("ghost_cluster_tilting:{}", rep.ghost_cluster_tilting);
            println!("cluster_tilting:      {}", rep.cluster_tilting);
            match rep.f_stable {
                Some(v) => println!("F_stable:             {v}"),
                None => println!("F_stable:             (no Serre data)"),
            }
            for w in &rep.witnesses {
                println!("witness: {w}");
            }
            Ok(true)
        }
        Command::Enumerate(args) => {
            let t = load(&args.category)?;
            let kind: Kind = args.kind.into();
            let tilting = match &args.tilting {
                Some(list) => Some(resolve_list(&t, list)?),
                None => None,
            };
            if kind.needs_tilting() && tilting.is_none() {
                return Err(Error::NotClusterTilting(
                    "(tilting object required for this kind)".into(),
                ));
            }
            if let Some(tl) = &tilting {
                if !t.is_cluster_tilting(tl) {
                    return Err(Error::NotClusterTilting(tl.display(&t.base)));
                }
            }
            let found = enumerate(&t, tilting.as_ref(), kind);
            let shown = args.limit.unwrap_or(found.len());
            for x in found.iter().take(shown) {
                println!("{}", x.display(&t.base));
            }
            if found.len() > shown {
                println!("... ({} total)", found.len());
            }
            Ok(true)
        }
        Command::Phi(args) => {
            let t = load(&args.category)?;
            let tilting = resolve_list(&t, &args.tilting)?;
            if !t.is_cluster_tilting(&tilting) {
                return Err(Error::NotClusterTilting(tilting.display(&t.base)));
            }
            match (&args.subject, &args.inverse) {
                (Some(subject), None) => {
                    let x = resolve_list(&t, subject)?;
                    let p = phi(&t, &tilting, &x);
                    if args.json {
                        let modules: Vec<serde_json::Value> = p
                            .modules
                            .iter()
                            .zip(p.module_sources.iter())
                            .map(|(m, &src)| {
                                let action: Vec<Vec<Vec<String>>> = m
                                    .action
                                    .iter()
                                    .map(|mat| {
                                        (0..mat.rows())
                                            .map(|i| {
                                                mat.row(i)
                                                    .iter()
                                                    .map(|s| s.to_string())
                                                    .collect()
                                            })
                                            .collect()
                                    })
                                    .collect();
                                serde_json::json!({
                                    "dim": m.dim,
                                    "from": t.base.name(src),
                                    "action": action,
                                })
                            })
                            .collect();
                        let doc = serde_json::json!({
                            "source": p.source.display(&t.base),
                            "tilting": p.tilting.display(&t.base),
                            "kernel_part": p.kernel_part.display(&t.base),
                            "modules": modules,
                        });
                        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                    } else {
                        let dims: Vec<String> =
                            p.modules.iter().map(|m| m.dim.to_string()).collect();
                        println!("modules:     {} (dims {})", p.modules.len(), dims.join(","));
                        println!("kernel part: {}", p.kernel_part.display(&t.base));
                    }
                    Ok(true)
                }
                (None, Some(spec)) => {
                    let (mods_part, ker_part) = spec
                        .split_once('|')
                        .ok_or_else(|| Error::UnknownObject(format!("bad inverse spec {spec:?}")))?;
                    let gens = resolve_list(&t, mods_part)?;
                    let kernel = resolve_list(&t, ker_part)?;
                    let p = phi(&t, &tilting, &gens);
                    match phi_inverse(&t, &tilting, &p.modules, &kernel)? {
                        Some(x) => {
                            println!("{}", x.display(&t.base));
                            Ok(true)
                        }
                        None => {
                            println!("no preimage");
                            Ok(false)
                        }
                    }
                }
                _ => Err(Error::UnknownObject(
                    "pass exactly one of --subject or --inverse".into(),
                )),
            }
        }
        Command::Complete(args) => {
            let t = load(&args.category)?;
            let tilting = resolve_list(&t, &args.tilting)?;
            if !t.is_cluster_tilting(&tilting) {
                return Err(Error::NotClusterTilting(tilting.display(&t.base)));
            }
            let x = resolve_list(&t, &args.subject)?;
            let completions = t.bongartz_complete(&tilting, &x)?;
            for c in &completions {
                println!("{}", c.display(&t.base));
            }
            Ok(!completions.is_empty())
        }
        Command::Verify(args) => {
            let t = load(&args.category)?;
            let theorems: Vec<Theorem> = if args.theorem == "all" {
                Theorem::ALL.into_iter().filter(|th| th.applies(&t)).collect()
            } else {
                vec![Theorem::parse(&args.theorem)
                    .ok_or_else(|| Error::UnknownObject(format!("theorem {:?}", args.theorem)))?]
            };
            let tiltings: Vec<BasicObject> = if args.all_tilting {
                cluster_tiltings(&t)
            } else if let Some(list) = &args.tilting {
                vec![resolve_list(&t, list)?]
            } else {
                return Err(Error::NotClusterTilting(
                    "(pass -T or --all-tilting)".into(),
                ));
            };
            let mut reports = Vec::new();
            for tilt in &tiltings {
                for &th in &theorems {
                    reports.push(verify(th, &t, tilt)?);
                }
            }
            reports.sort_by(|a, b| {
                (a.theorem.clone(), a.tilting.clone()).cmp(&(b.theorem.clone(), b.tilting.clone()))
            });
            let ok = reports.iter().all(VerificationReport::success);
            if args.json {
                println!("{}", serde_json::to_string_pretty(&reports).unwrap());
            } else {
                print_report_table(&reports);
                println!(
                    "{}: {}/{} checks passed",
                    t.label,
                    reports.iter().filter(|r| r.success()).count(),
                    reports.len()
                );
            }
            Ok(ok)
        }
        Command::Report(args) => {
            let mut reports = Vec::new();
            for path in &args.categories {
                let t = load(path)?;
                let theorems: Vec<Theorem> = Theorem::ALL
                    .into_iter()
                    .filter(|th| th.applies(&t))
                    .collect();
                for tilt in cluster_tiltings(&t) {
                    for &th in &theorems {
                        reports.push(verify(th, &t, &tilt)?);
                    }
                }
            }
            reports.sort_by(|a, b| {
                (a.category.clone(), a.theorem.clone(), a.tilting.clone()).cmp(&(
                    b.category.clone(),
                    b.theorem.clone(),
                    b.tilting.clone(),
                ))
            });
            let ok = reports.iter().all(VerificationReport::success);
            let rendered = match args.format {
                FormatArg::Json => serde_json::to_string_pretty(&reports).unwrap() + "\n",
                FormatArg::Table => {
                    let mut s = String::new();
                    for r in &reports {
                        let status = if r.success() { "pass" } else { "FAIL" };
                        s.push_str(&format!(
                            "{status}  {:<9} {:<12} T={:<28} |L|={:<4} |R|={:<4} matched={:<4} {}ms\n",
                            r.theorem,
                            r.category,
                            r.tilting,
                            r.left_card,
                            r.right_card,
                            r.matched,
                            r.wall_ms
                        ));
                        for f in &r.failures {
                            s.push_str(&format!("      failure: {f}\n"));
                        }
                    }
                    s.push_str(&format!(
                        "{}/{} checks passed\n",
                        reports.iter().filter(|r| r.success()).count(),
                        reports.len()
                    ));
                    s
                }
            };
            match &args.output {
                Some(path) => std::fs::write(path, rendered)?,
                None => print!("{rendered}"),
            }
            Ok(ok)
        }
    }
}

/// Entry point used by the binary: parses, runs, maps outcomes to exit
/// codes (0 success, 1 verification failure, 2 usage or data error).
pub fn run(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run_inner(cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
