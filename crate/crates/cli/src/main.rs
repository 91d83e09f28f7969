//! `btz` — membership queries, diagrams, window builds, verification
//! suites, symmetry checks, reductions and figure rendering for the
//! vanishing complexes of the Bruhat-Tits building.
//!
//! Exit codes: 0 success (for `member`: is a member), 1 negative result or
//! verifier violation (for `member`: not a member), 2 error.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use btz_core as core;
use core::{
    build_complex, check_involution_symmetry, classify_stratum, connected_components,
    critical_index, d_diagram, diagram_prefix, in_ray_stratum, member_a, member_w,
    reduce_to_fundamental, render_svg, vanishing_value, verify_boundaryless,
    verify_strong_equidimensionality, ChamberLayout, ComplexWindow, Horizon, Kind, Stratum, Vertex,
};

#[derive(Parser)]
#[command(
    name = "btz",
    version,
    about = "Vanishing complexes of the Bruhat-Tits building"
)]
struct Cli {
    /// Suppress informational output.
    #[arg(long, global = true)]
    quiet: bool,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Test membership of a vertex in W(d,k) / A(d,k).
    Member(MemberArgs),
    /// Print the d-diagram of a vertex with box numbers.
    Diagram(DiagramArgs),
    /// Build a window complex and write it as JSON or DOT.
    Build(BuildArgs),
    /// Run the verification suites on a window complex.
    Verify(VerifyArgs),
    /// Check the hat symmetry W(d,k)^ = W(d,rd-k) on a window.
    Symmetry(SymmetryArgs),
    /// Reduce a member vertex to a fundamental weight along an edge path.
    Reduce(ReduceArgs),
    /// Render rank-3 windows as an SVG figure (or a single window as DOT).
    Render(RenderArgs),
    /// Execute jobs from a key=value config file.
    Run(RunArgs),
}

#[derive(Args)]
struct MemberArgs {
    /// Rank (optional; inferred from --n).
    #[arg(long)]
    r: Option<usize>,
    /// Vertex coordinates, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    n: String,
    /// Horizon: a positive integer or "inf".
    #[arg(long)]
    d: String,
    #[arg(long)]
    k: u32,
    /// Complex kind: W (Weyl chamber) or A (apartment).
    #[arg(long, default_value = "W")]
    kind: String,
}

#[derive(Args)]
struct DiagramArgs {
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    n: String,
    /// Horizon: a positive integer or "inf".
    #[arg(long)]
    d: String,
    /// Weight to highlight (boxes k and k+1).
    #[arg(long)]
    k: Option<u32>,
    /// Number of boxes to show for the infinite diagram.
    #[arg(long)]
    len: Option<usize>,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    d: String,
    #[arg(long)]
    k: u32,
    /// Window bound.
    #[arg(long = "N")]
    n_bound: i64,
    #[arg(long, default_value = "W")]
    kind: String,
    #[arg(long, default_value_t = 1)]
    margin: u32,
    /// Output file (stdout when omitted). `.dot` selects DOT output.
    #[arg(long, short = 'o')]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    d: String,
    /// Weight, or omitted to sweep every valid weight.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long = "N")]
    n_bound: i64,
    #[arg(long, default_value = "A")]
    kind: String,
    #[arg(long, default_value_t = 1)]
    margin: u32,
    /// Report wall violations on Weyl windows instead of refusing the
    /// boundarylessness check.
    #[arg(long)]
    report_only: bool,
    /// Write the machine-readable report to this file.
    #[arg(long, short = 'o')]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SymmetryArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    d: u32,
    #[arg(long = "N")]
    n_bound: i64,
    /// Single weight (default: all 1 <= k < rd).
    #[arg(long)]
    k: Option<u32>,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    n: String,
    #[arg(long)]
    d: String,
    #[arg(long)]
    k: u32,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    d: String,
    /// Comma-separated weights to overlay.
    #[arg(long)]
    k: String,
    #[arg(long = "N")]
    n_bound: i64,
    #[arg(long, default_value = "W")]
    kind: String,
    /// Output file. `.dot` selects DOT output (single weight only).
    #[arg(long, short = 'o')]
    out: PathBuf,
}

#[derive(Args)]
struct RunArgs {
    /// Config file: key = value lines, jobs separated by blank lines.
    #[arg(long)]
    config: PathBuf,
}

fn parse_horizon(s: &str) -> Result<Horizon> {
    if s.eq_ignore_ascii_case("inf") {
        return Ok(Horizon::Infinite);
    }
    let d: u32 = s
        .parse()
        .with_context(|| format!("horizon must be a positive integer or \"inf\", got {s:?}"))?;
    if d == 0 {
        bail!("horizon must be at least 1");
    }
    Ok(Horizon::Finite(d))
}

fn parse_vertex(n: &str, r: Option<usize>) -> Result<Vertex> {
    let coords: Vec<i64> = n
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .with_context(|| format!("cannot parse coordinates {n:?}"))?;
    if let Some(r) = r {
        if coords.len() != r {
            bail!("--n has {} coordinates but --r is {r}", coords.len());
        }
    }
    Ok(Vertex::normalize(coords)?)
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, bytes).with_context(|| format!("writing {}", p.display()))?,
        None => std::io::stdout().write_all(bytes)?,
    }
    Ok(())
}

fn cmd_member(a: &MemberArgs, format: Format, quiet: bool) -> Result<u8> {
    let n = parse_vertex(&a.n, a.r)?;
    let horizon = parse_horizon(&a.d)?;
    let kind = Kind::parse(&a.kind)?;
    let member = match kind {
        Kind::Weyl => member_w(&n, horizon, a.k)?,
        Kind::Apartment => member_a(&n, horizon, a.k)?,
    };
    let seq = core::membership::effective_sequence(&n, horizon, a.k)?;
    let rho = if member && kind == Kind::Weyl {
        Some(critical_index(&n, horizon, a.k)?)
    } else {
        None
    };
    match format {
        Format::Json => {
            let doc = json!({
                "n": n.coords(),
                "d": serde_json::to_value(horizon)?,
                "k": a.k,
                "kind": kind.letter(),
                "member": member,
                "v_k": seq.value(a.k),
                "v_k_plus_1": seq.value(a.k + 1),
                "rho": rho,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Format::Text => {
            if !quiet {
                let verdict = if member { "member" } else { "non-member" };
                let mut line = format!(
                    "{n} is a {verdict} of {kind}({},{}) ; v_{} = {}, v_{} = {}",
                    horizon,
                    a.k,
                    a.k,
                    seq.value(a.k),
                    a.k + 1,
                    seq.value(a.k + 1)
                );
                if let Some(rho) = rho {
                    line.push_str(&format!(", rho = {rho}"));
                }
                println!("{line}");
            }
        }
    }
    Ok(if member { 0 } else { 1 })
}

fn cmd_diagram(a: &DiagramArgs, format: Format) -> Result<u8> {
    let n = parse_vertex(&a.n, a.r)?;
    let r = n.rank();
    let horizon = parse_horizon(&a.d)?;
    let boxes = match horizon {
        Horizon::Finite(d) => d_diagram(&n, d)?.boxes().to_vec(),
        Horizon::Infinite => {
            let len = a
                .len
                .unwrap_or_else(|| r * (n.spread().unsigned_abs() as usize + 3));
            diagram_prefix(&n, len)?
        }
    };
    if let Some(k) = a.k {
        if k as usize + 1 > boxes.len() {
            bail!("k={k} needs at least {} boxes, have {}", k + 1, boxes.len());
        }
    }
    match format {
        Format::Json => {
            let items: Vec<_> = boxes
                .iter()
                .enumerate()
                .map(|(i, b)| json!({"number": i + 1, "index": b.index, "value": b.value}))
                .collect();
            let doc = json!({
                "n": n.coords(),
                "d": serde_json::to_value(horizon)?,
                "k": a.k,
                "boxes": items,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Format::Text => {
            let min_v = boxes.iter().map(|b| b.value).min().unwrap_or(0);
            let max_v = boxes.iter().map(|b| b.value).max().unwrap_or(0);
            let mut grid: BTreeMap<(usize, i64), usize> = BTreeMap::new();
            for (i, b) in boxes.iter().enumerate() {
                grid.insert((b.index, b.value), i + 1);
            }
            let highlight = |num: usize| -> String {
                match a.k {
                    Some(k) if num as u32 == k || num as u32 == k + 1 => format!("[{num}]"),
                    _ => format!("{num}"),
                }
            };
            let width = boxes.len().to_string().len() + 3;
            print!("{:>4} |", "i/v");
            for v in min_v..=max_v {
                print!("{v:>width$}");
            }
            println!();
            println!("{}", "-".repeat(6 + (max_v - min_v + 1) as usize * width));
            for i in 1..=r {
                print!("{i:>4} |");
                for v in min_v..=max_v {
                    match grid.get(&(i, v)) {
                        Some(&num) => print!("{:>width$}", highlight(num)),
                        None => print!("{:>width$}", "."),
                    }
                }
                println!();
            }
            if horizon == Horizon::Infinite {
                println!("(first {} boxes of the unbounded diagram)", boxes.len());
            }
        }
    }
    Ok(0)
}

fn cmd_build(a: &BuildArgs, format: Format, quiet: bool) -> Result<u8> {
    let horizon = parse_horizon(&a.d)?;
    let kind = Kind::parse(&a.kind)?;
    let cw = build_complex(a.r, horizon, a.k, a.n_bound, kind, a.margin)?;
    let as_dot = a
        .out
        .as_deref()
        .and_then(|p| p.extension())
        .map(|e| e == "dot")
        .unwrap_or(false);
    let bytes = if as_dot {
        core::io::export_dot(&cw)
    } else {
        core::io::export_json(&cw)?
    };
    write_output(a.out.as_deref(), &bytes)?;
    if !quiet && a.out.is_some() {
        match format {
            Format::Json => println!(
                "{}",
                json!({"vertices": cw.vertices().len(),
                       "maximal_simplices": cw.maximal_simplices().len(),
                       "edges": cw.edges().len(),
                       "out": a.out.as_ref().map(|p| p.display().to_string())})
            ),
            Format::Text => println!(
                "{}({},{}) N={} : {} vertices, {} maximal simplices, {} edges",
                cw.kind,
                cw.horizon,
                cw.k,
                cw.bound,
                cw.vertices().len(),
                cw.maximal_simplices().len(),
                cw.edges().len()
            ),
        }
    }
    Ok(0)
}

fn verify_one(
    r: usize,
    horizon: Horizon,
    k: u32,
    n_bound: i64,
    kind: Kind,
    margin: u32,
    report_only: bool,
) -> Result<(serde_json::Value, Vec<String>, bool)> {
    let cw = build_complex(r, horizon, k, n_bound, kind, margin)?;
    let mut lines = Vec::new();
    let mut ok = true;

    // Strong equidimensionality holds on both kinds; no wall exemption.
    let eq = verify_strong_equidimensionality(&cw, margin);
    for v in &eq.violations {
        ok = false;
        lines.push(format!(
            "equidimensionality violation: {} ({})",
            v.simplex, v.detail
        ));
    }

    let bl_margin = margin + 1;
    let bl = verify_boundaryless(&cw, bl_margin, kind == Kind::Weyl || report_only)?;
    let mut wall_violations = 0usize;
    for v in &bl.violations {
        if kind == Kind::Weyl && v.on_chamber_wall {
            wall_violations += 1;
            continue;
        }
        ok = false;
        lines.push(format!(
            "boundarylessness violation: {} ({})",
            v.simplex, v.detail
        ));
    }
    if wall_violations > 0 {
        lines.push(format!(
            "note: {wall_violations} boundary deficits on the chamber walls (expected for kind W)"
        ));
    }

    let comps = connected_components(&cw);
    if !cw.vertices().is_empty() && comps.count != 1 {
        ok = false;
        lines.push(format!(
            "connectivity violation: {} components",
            comps.count
        ));
    }

    // Path certificates for the Weyl-sorted forms of the window members.
    let mut paths = 0usize;
    for n in cw.vertices() {
        let w = n.weyl_sorted();
        if !member_w(&w, horizon, k)? {
            ok = false;
            lines.push(format!("weyl-sorted form {w} of {n} is not a member"));
            continue;
        }
        let path = reduce_to_fundamental(&w, horizon, k)?;
        if let Err(e) = path.verify(Horizon::Finite(horizon.effective(k)), k) {
            ok = false;
            lines.push(format!("reduction path from {w} invalid: {e}"));
        }
        paths += 1;
    }

    // Stratification decomposition (finite horizons only).
    let mut strat_checked = 0usize;
    if let Horizon::Finite(d) = horizon {
        for n in cw.vertices() {
            let w = n.weyl_sorted();
            let v = vanishing_value(&w, horizon, k)?;
            let stratum = classify_stratum(&w, d, k)?;
            let low = v < d as i64;
            let in_ray = in_ray_stratum(&w, d, k)?;
            if !(low || in_ray) || ((low && in_ray) != (stratum == Stratum::S3)) {
                ok = false;
                lines.push(format!("stratification violation at {w}"));
            }
            strat_checked += 1;
        }
    }

    let report = json!({
        "r": r,
        "d": serde_json::to_value(horizon)?,
        "k": k,
        "kind": kind.letter(),
        "N": n_bound,
        "margin": margin,
        "vertices": cw.vertices().len(),
        "maximal_simplices": cw.maximal_simplices().len(),
        "equidimensionality": {"checked": eq.checked, "violations": eq.violations.len()},
        "boundarylessness": {"checked": bl.checked, "violations": bl.violations.len(),
                              "margin": bl_margin},
        "components": comps.count,
        "reduction_paths": paths,
        "stratification_checked": strat_checked,
        "ok": ok,
    });
    Ok((report, lines, ok))
}

fn cmd_verify(a: &VerifyArgs, format: Format, quiet: bool) -> Result<u8> {
    let horizon = parse_horizon(&a.d)?;
    let kind = Kind::parse(&a.kind)?;
    let weights: Vec<u32> = match a.k {
        Some(k) => vec![k],
        None => match horizon.max_weight(a.r) {
            Some(max) => (1..=max).collect(),
            None => bail!("--k is required for the infinite horizon"),
        },
    };
    let mut reports = Vec::new();
    let mut all_ok = true;
    for &k in &weights {
        let (report, lines, ok) =
            verify_one(a.r, horizon, k, a.n_bound, kind, a.margin, a.report_only)?;
        if format == Format::Text && (!quiet || !ok) {
            println!(
                "verify {kind}({horizon},{k}) N={} : {}",
                a.n_bound,
                if ok { "ok" } else { "VIOLATIONS" }
            );
            for l in &lines {
                println!("  {l}");
            }
        }
        all_ok &= ok;
        reports.push(report);
    }
    let combined = json!({"reports": reports, "ok": all_ok});
    if format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&combined)?);
    }
    if let Some(out) = &a.out {
        write_output(
            Some(out),
            serde_json::to_string_pretty(&combined)?.as_bytes(),
        )?;
    }
    Ok(if all_ok { 0 } else { 1 })
}

fn cmd_symmetry(a: &SymmetryArgs, format: Format, quiet: bool) -> Result<u8> {
    let rd = a.r as u32 * a.d;
    if rd < 2 {
        bail!("need r*d >= 2");
    }
    let weights: Vec<u32> = match a.k {
        Some(k) => vec![k],
        None => (1..rd).collect(),
    };
    let mut all_ok = true;
    let mut items = Vec::new();
    for &k in &weights {
        let rep = check_involution_symmetry(a.r, a.d, k, a.n_bound)?;
        let ok = rep.matched();
        all_ok &= ok;
        if format == Format::Text && (!quiet || !ok) {
            println!(
                "W({},{})^ vs W({},{}) on N={} : {}",
                a.d,
                rep.k,
                a.d,
                rep.dual_k,
                a.n_bound,
                if ok { "match" } else { "MISMATCH" }
            );
            for v in &rep.missing {
                println!("  hat image {v} missing from the dual window");
            }
            for v in &rep.extra {
                println!("  dual member {v} not covered by the hat image");
            }
        }
        items.push(json!({
            "k": rep.k,
            "dual_k": rep.dual_k,
            "matched": ok,
            "missing": rep.missing.iter().map(|v| v.coords().to_vec()).collect::<Vec<_>>(),
            "extra": rep.extra.iter().map(|v| v.coords().to_vec()).collect::<Vec<_>>(),
        }));
    }
    if format == Format::Json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({"pairs": items, "ok": all_ok}))?
        );
    }
    Ok(if all_ok { 0 } else { 1 })
}

fn cmd_reduce(a: &ReduceArgs, format: Format) -> Result<u8> {
    let n = parse_vertex(&a.n, a.r)?;
    let horizon = parse_horizon(&a.d)?;
    let path = reduce_to_fundamental(&n, horizon, a.k)?;
    path.verify(Horizon::Finite(horizon.effective(a.k)), a.k)?;
    match format {
        Format::Json => {
            let steps: Vec<_> = path
                .vertices()
                .iter()
                .map(|v| v.coords().to_vec())
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "d": serde_json::to_value(horizon)?,
                    "k": a.k,
                    "length": path.len() - 1,
                    "path": steps,
                }))?
            );
        }
        Format::Text => {
            let line = path
                .vertices()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" -> ");
            println!("{line}");
        }
    }
    Ok(0)
}

fn cmd_render(a: &RenderArgs, format: Format, quiet: bool) -> Result<u8> {
    let horizon = parse_horizon(&a.d)?;
    let kind = Kind::parse(&a.kind)?;
    let weights: Vec<u32> =
        a.k.split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .context("cannot parse --k list")?;
    if weights.is_empty() {
        bail!("--k must list at least one weight");
    }
    let windows: Vec<ComplexWindow> = weights
        .iter()
        .map(|&k| Ok(build_complex(a.r, horizon, k, a.n_bound, kind, 1)?))
        .collect::<Result<_>>()?;
    let as_dot = a.out.extension().map(|e| e == "dot").unwrap_or(false);
    let bytes = if as_dot {
        if windows.len() != 1 {
            bail!("DOT output supports a single weight, got {}", windows.len());
        }
        core::io::export_dot(&windows[0])
    } else {
        let refs: Vec<&ComplexWindow> = windows.iter().collect();
        render_svg(&refs, &ChamberLayout::default())?
    };
    write_output(Some(&a.out), &bytes)?;
    if !quiet {
        match format {
            Format::Json => println!(
                "{}",
                json!({"out": a.out.display().to_string(), "overlays": weights})
            ),
            Format::Text => println!(
                "wrote {} ({} overlay{})",
                a.out.display(),
                weights.len(),
                if weights.len() == 1 { "" } else { "s" }
            ),
        }
    }
    Ok(0)
}

/// One key=value block of a config file, mirroring the flag names.
fn run_job(block: &BTreeMap<String, String>, format: Format, quiet: bool) -> Result<u8> {
    let get = |key: &str| -> Result<&str> {
        block
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| anyhow!("config job is missing `{key}`"))
    };
    let opt = |key: &str| block.get(key).map(String::as_str);
    let command = get("command")?;
    let format = match opt("format") {
        Some("json") => Format::Json,
        Some("text") => Format::Text,
        Some(other) => bail!("unknown format {other:?} in config"),
        None => format,
    };
    match command {
        "member" => cmd_member(
            &MemberArgs {
                r: opt("r").map(str::parse).transpose()?,
                n: get("n")?.to_string(),
                d: get("d")?.to_string(),
                k: get("k")?.parse()?,
                kind: opt("kind").unwrap_or("W").to_string(),
            },
            format,
            quiet,
        ),
        "diagram" => cmd_diagram(
            &DiagramArgs {
                r: opt("r").map(str::parse).transpose()?,
                n: get("n")?.to_string(),
                d: get("d")?.to_string(),
                k: opt("k").map(str::parse).transpose()?,
                len: opt("len").map(str::parse).transpose()?,
            },
            format,
        ),
        "build" => cmd_build(
            &BuildArgs {
                r: get("r")?.parse()?,
                d: get("d")?.to_string(),
                k: get("k")?.parse()?,
                n_bound: get("N")?.parse()?,
                kind: opt("kind").unwrap_or("W").to_string(),
                margin: opt("margin").unwrap_or("1").parse()?,
                out: opt("out").map(PathBuf::from),
            },
            format,
            quiet,
        ),
        "verify" => cmd_verify(
            &VerifyArgs {
                r: get("r")?.parse()?,
                d: get("d")?.to_string(),
                k: opt("k").map(str::parse).transpose()?,
                n_bound: get("N")?.parse()?,
                kind: opt("kind").unwrap_or("A").to_string(),
                margin: opt("margin").unwrap_or("1").parse()?,
                report_only: opt("report_only").map(|v| v == "true").unwrap_or(false),
                out: opt("out").map(PathBuf::from),
            },
            format,
            quiet,
        ),
        "symmetry" => cmd_symmetry(
            &SymmetryArgs {
                r: get("r")?.parse()?,
                d: get("d")?.parse()?,
                n_bound: get("N")?.parse()?,
                k: opt("k").map(str::parse).transpose()?,
            },
            format,
            quiet,
        ),
        "reduce" => cmd_reduce(
            &ReduceArgs {
                r: opt("r").map(str::parse).transpose()?,
                n: get("n")?.to_string(),
                d: get("d")?.to_string(),
                k: get("k")?.parse()?,
            },
            format,
        ),
        "render" => cmd_render(
            &RenderArgs {
                r: get("r")?.parse()?,
                d: get("d")?.to_string(),
                k: get("k")?.to_string(),
                n_bound: get("N")?.parse()?,
                kind: opt("kind").unwrap_or("W").to_string(),
                out: PathBuf::from(get("out")?),
            },
            format,
            quiet,
        ),
        other => bail!("unknown command {other:?} in config"),
    }
}

fn cmd_run(a: &RunArgs, format: Format, quiet: bool) -> Result<u8> {
    let text = std::fs::read_to_string(&a.config)
        .with_context(|| format!("reading {}", a.config.display()))?;
    let mut jobs: Vec<BTreeMap<String, String>> = Vec::new();
    let mut current = BTreeMap::new();
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() {
            if !current.is_empty() {
                jobs.push(std::mem::take(&mut current));
            }
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("config line is not `key = value`: {line:?}");
        };
        current.insert(key.trim().to_string(), value.trim().to_string());
    }
    if !current.is_empty() {
        jobs.push(current);
    }
    if jobs.is_empty() {
        bail!("config file contains no jobs");
    }
    let mut worst = 0u8;
    for (i, job) in jobs.iter().enumerate() {
        if !quiet {
            println!(
                "# job {} ({})",
                i + 1,
                job.get("command").map(String::as_str).unwrap_or("?")
            );
        }
        let code = run_job(job, format, quiet)?;
        worst = worst.max(code);
    }
    Ok(worst)
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("BTZ_THREADS") {
        if let Ok(t) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build_global();
        }
    }
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Member(a) => cmd_member(a, cli.format, cli.quiet),
        Command::Diagram(a) => cmd_diagram(a, cli.format),
        Command::Build(a) => cmd_build(a, cli.format, cli.quiet),
        Command::Verify(a) => cmd_verify(a, cli.format, cli.quiet),
        Command::Symmetry(a) => cmd_symmetry(a, cli.format, cli.quiet),
        Command::Reduce(a) => cmd_reduce(a, cli.format),
        Command::Render(a) => cmd_render(a, cli.format, cli.quiet),
        Command::Run(a) => cmd_run(a, cli.format, cli.quiet),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
