//! Command implementations behind the `hakensum` binary. Every command
//! returns a [`Report`]; rendering and exit codes are decided by the caller.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hakensum::reductions::{FirstMove, RunTrace};
use hakensum::scenario_file::{Expected, GenusLaw};
use hakensum::{
    compute_thresholds, essential_certificate, handlebody_certificate, reduce_parities, remove_trivial, resolve,
    torus_periodicity, trace, tuna_can_run, ScenarioFile,
};
use serde::Serialize;
use serde_json::{json, Value};

pub mod selfcheck;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "hakensum", version, about = "Resolve and check iterated Haken sums H + nK")]
pub struct Cli {
    /// Scenario file (JSON).
    #[arg(long, global = true)]
    pub scenario: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Stop at the first expectation mismatch.
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Components, euler characteristic and genus of F + nG.
    Resolve {
        #[arg(long)]
        n: u64,
    },
    /// Trace the curves of (H + nK) ∩ D.
    Trace,
    /// Shifts and the thresholds b, s, N.
    Shifts,
    /// Certificate that the traced curve at level i is essential.
    Certify {
        #[arg(long)]
        i: u64,
        /// Copy count; defaults to the disk pattern's n.
        #[arg(long)]
        n: Option<u64>,
    },
    /// Inventory rewrites and the can-separation run.
    Reduce,
    /// Handlebody proof for the gluing graph.
    Handlebody,
    /// Per-n invariants over a range of copy counts.
    Sweep {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Seeded self-checks of the core invariants.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: u64,
    },
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub scenario: Option<String>,
    pub body: Value,
    pub mismatches: Vec<String>,
    #[serde(skip)]
    pub text: String,
}

impl Report {
    fn new(command: &str, scenario: Option<&ScenarioFile>) -> Self {
        Self {
            command: command.to_string(),
            scenario: scenario.map(|s| s.name.clone()),
            ..Self::default()
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.mismatches.is_empty() {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("reports serialize") + "\n",
            Format::Text => {
                let mut out = String::new();
                if let Some(s) = &self.scenario {
                    let _ = writeln!(out, "scenario: {s}");
                }
                out.push_str(&self.text);
                for m in &self.mismatches {
                    let _ = writeln!(out, "MISMATCH {m}");
                }
                out
            }
        }
    }

    fn expect<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, expected: Option<&Expected<T>>, found: &T) {
        if let Some(e) = expected {
            if &e.value != found {
                self.mismatches
                    .push(format!("{what}: expected {:?}, found {found:?}", e.value));
            }
        }
    }
}

pub fn load(path: &Path) -> Result<ScenarioFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    ScenarioFile::from_json(&text).with_context(|| format!("in {}", path.display()))
}

/// Runs a command. `Err` means bad input (exit 3).
pub fn run(cli: &Cli) -> Result<Report> {
    if let Command::Check { seed, count } = cli.command {
        return Ok(selfcheck::run(seed, count));
    }
    let Some(path) = &cli.scenario else {
        bail!("--scenario is required for this command");
    };
    let file = load(path)?;
    execute(&file, &cli.command, cli.strict)
}

pub fn execute(file: &ScenarioFile, command: &Command, strict: bool) -> Result<Report> {
    match *command {
        Command::Resolve { n } => cmd_resolve(file, n),
        Command::Trace => cmd_trace(file),
        Command::Shifts => cmd_shifts(file),
        Command::Certify { i, n } => cmd_certify(file, i, n),
        Command::Reduce => cmd_reduce(file),
        Command::Handlebody => cmd_handlebody(file),
        Command::Sweep { from, to } => cmd_sweep(file, from, to, strict),
        Command::Check { seed, count } => Ok(selfcheck::run(seed, count)),
    }
}

fn genus_text(genus: Option<u64>) -> String {
    genus.map_or_else(|| "-".to_string(), |g| g.to_string())
}

pub fn cmd_resolve(file: &ScenarioFile, n: u64) -> Result<Report> {
    let pc = file.patch_complex()?;
    let r = resolve(pc, n)?;
    let mut report = Report::new("resolve", Some(file));
    let _ = writeln!(report.text, "copies: {n}");
    let _ = writeln!(report.text, "components: {}", r.components.len());
    for (j, c) in r.components.iter().enumerate() {
        let _ = writeln!(
            report.text,
            "  [{j}] euler {} closed {} orientable {} genus {}",
            c.euler,
            c.closed,
            c.orientable.map_or("unknown".to_string(), |o| o.to_string()),
            genus_text(c.genus)
        );
    }
    let _ = writeln!(report.text, "total euler: {}", r.total_euler());
    let genus = r.is_connected().then(|| r.components[0].genus).flatten();
    if r.is_connected() {
        let _ = writeln!(report.text, "genus: {}", genus_text(genus));
    }
    report.expect("connected", file.expectations.connected.as_ref(), &r.is_connected());
    if let Some(law) = &file.expectations.genus {
        let want = law_at(law, n);
        if genus.map(|g| g as i64) != Some(want) {
            report
                .mismatches
                .push(format!("genus at n = {n}: expected {want}, found {}", genus_text(genus)));
        }
    }
    report.body = json!({
        "n": n,
        "total_euler": r.total_euler(),
        "connected": r.is_connected(),
        "genus": genus,
        "components": r.components,
    });
    Ok(report)
}

fn law_at(law: &Expected<GenusLaw>, n: u64) -> i64 {
    law.value.at(n)
}

pub fn cmd_trace(file: &ScenarioFile) -> Result<Report> {
    let dp = file.disk_pattern()?;
    let r = trace(dp);
    let mut report = Report::new("trace", Some(file));
    let _ = writeln!(report.text, "h: {}  n: {}", r.h, r.n);
    let _ = writeln!(report.text, "arcs: {}", r.arc_count);
    let _ = writeln!(report.text, "excursion: max {} min {}", r.excursion.0, r.excursion.1);
    match r.gamma_levels {
        Some(g) => {
            let _ = writeln!(report.text, "gamma levels: {g} ({} curves)", r.gamma_count);
        }
        None => {
            let _ = writeln!(report.text, "gamma levels: none");
        }
    }
    let _ = writeln!(report.text, "annuli: {}", r.annuli.len());
    let _ = writeln!(report.text, "extra closed curves: at most {}", r.extra_closed_bound);
    report.expect("arc_count", file.expectations.arc_count.as_ref(), &r.arc_count);
    report.expect("gamma_count", file.expectations.gamma_count.as_ref(), &r.gamma_count);
    report.body = serde_json::to_value(&r)?;
    Ok(report)
}

pub fn cmd_shifts(file: &ScenarioFile) -> Result<Report> {
    let sec = file.sides()?;
    let (p, d) = sec.systems()?;
    let prof = compute_thresholds(sec.h, &p, &d);
    let mut report = Report::new("shifts", Some(file));
    let _ = writeln!(report.text, "shifts K': {:?}", prof.shifts_prime);
    let _ = writeln!(report.text, "shifts K'': {:?}", prof.shifts_dblprime);
    let _ = writeln!(report.text, "h {}  b {}  s {}  N {}", prof.h, prof.b, prof.s, prof.big_n);
    report.expect("big_n", file.expectations.big_n.as_ref(), &prof.big_n);
    report.body = serde_json::to_value(&prof)?;
    Ok(report)
}

pub fn cmd_certify(file: &ScenarioFile, i: u64, n: Option<u64>) -> Result<Report> {
    let sec = file.sides()?;
    let Some(euler) = sec.euler else {
        bail!("scenario `{}` has no euler data in its `sides` section", file.name);
    };
    let n = match n {
        Some(n) => n,
        None => file.disk_pattern()?.n(),
    };
    let (p, d) = sec.systems()?;
    let prof = compute_thresholds(sec.h, &p, &d);
    let cert = essential_certificate(i, n, &prof, &p, &d, &euler)?;
    cert.validate(&p, &d, &euler)?;
    let mut report = Report::new("certify", Some(file));
    let _ = writeln!(report.text, "level {i} of {n}: essential (N = {})", prof.big_n);
    let _ = writeln!(report.text, "{}", serde_json::to_string(&cert)?);
    report.body = serde_json::to_value(&cert)?;
    Ok(report)
}

fn run_summary(run: &RunTrace) -> Value {
    json!({
        "slices": run.slices,
        "packs": run.packs,
        "slice_bound": run.slice_bound,
        "pack_bound": run.pack_bound,
        "measures": run.measures,
        "moves": run.moves,
        "terminal": run.terminal,
    })
}

pub fn cmd_reduce(file: &ScenarioFile) -> Result<Report> {
    let sec = file.inventory_section()?;
    let inv = file.inventory()?;
    let mut report = Report::new("reduce", Some(file));
    let (trimmed, removed) = remove_trivial(&inv)?;
    let _ = writeln!(report.text, "inessential curves removed: {removed}  n: {} -> {}", inv.n, trimmed.n);
    report.expect("removed", file.expectations.removed.as_ref(), &removed);
    let mut body = json!({ "removed": removed, "n": trimmed.n });

    if trimmed.is_torus_mode() {
        let r = reduce_parities(&trimmed)?;
        let _ = writeln!(
            report.text,
            "parity cancellation: m {}  m' {}  n: {} -> {}",
            r.m, r.m_prime, trimmed.n, r.inventory.n
        );
        report.expect("m", file.expectations.m.as_ref(), &r.m);
        report.expect("m_prime", file.expectations.m_prime.as_ref(), &r.m_prime);
        body["m"] = json!(r.m);
        body["m_prime"] = json!(r.m_prime);
        body["n"] = json!(r.inventory.n);
        body["curves"] = json!(r.inventory.curves.iter().map(|c| c.id.as_str()).collect::<Vec<_>>());
    }
    if let Some(cans) = &sec.cans {
        let run = tuna_can_run(cans, &mut FirstMove);
        let _ = writeln!(
            report.text,
            "cans: {} slices (bound {}), {} packs (bound {})",
            run.slices, run.slice_bound, run.packs, run.pack_bound
        );
        if !run.within_bound() || !run.measure_decreasing() {
            report.mismatches.push("can separation exceeded its bound".into());
        }
        body["cans"] = run_summary(&run);
    }
    report.body = body;
    Ok(report)
}

pub fn cmd_handlebody(file: &ScenarioFile) -> Result<Report> {
    let g = file.gluing_graph()?;
    let proof = handlebody_certificate(g)?;
    let mut report = Report::new("handlebody", Some(file));
    for step in &proof.steps {
        let _ = writeln!(report.text, "{}", serde_json::to_string(step)?);
    }
    let _ = writeln!(report.text, "handlebody of genus {} (euler sum {})", proof.genus, proof.euler_sum);
    report.expect("handlebody_genus", file.expectations.handlebody_genus.as_ref(), &proof.genus);
    report.body = serde_json::to_value(&proof)?;
    Ok(report)
}

pub fn cmd_sweep(file: &ScenarioFile, from: u64, to: u64, strict: bool) -> Result<Report> {
    if from > to {
        bail!("empty range: --from {from} is larger than --to {to}");
    }
    let mut report = Report::new("sweep", Some(file));
    let mut body = json!({ "from": from, "to": to });
    let mut any = false;

    if let Some(pc) = &file.patch_complex {
        any = true;
        let mut rows = Vec::new();
        for n in from..=to {
            let r = resolve(pc, n)?;
            let genus = r.is_connected().then(|| r.components[0].genus).flatten();
            let _ = writeln!(
                report.text,
                "n {n:>3}: {} components, euler {}, genus {}",
                r.components.len(),
                r.total_euler(),
                genus_text(genus)
            );
            if let Some(law) = &file.expectations.genus {
                let want = law_at(law, n);
                if genus.map(|g| g as i64) != Some(want) {
                    report
                        .mismatches
                        .push(format!("genus at n = {n}: expected {want}, found {}", genus_text(genus)));
                }
            }
            if let Some(c) = &file.expectations.connected {
                if c.value != r.is_connected() {
                    report.mismatches.push(format!("connected at n = {n}: expected {}", c.value));
                }
            }
            rows.push(json!({
                "n": n,
                "components": r.components.len(),
                "euler": r.total_euler(),
                "genus": genus,
            }));
            if strict && !report.mismatches.is_empty() {
                break;
            }
        }
        let genera: Vec<Option<i64>> = rows.iter().map(|r| r["genus"].as_i64()).collect();
        let steps: Vec<i64> = genera
            .windows(2)
            .filter_map(|w| Some(w[1]? - w[0]?))
            .collect();
        if !steps.is_empty() && steps.iter().all(|&d| d == steps[0]) {
            let _ = writeln!(report.text, "genus grows by {} per copy", steps[0]);
            body["genus_step"] = json!(steps[0]);
        }
        body["rows"] = Value::Array(rows);
    }

    if file.inventory.is_some() {
        let inv = file.inventory()?;
        let (trimmed, _) = remove_trivial(&inv)?;
        if trimmed.is_torus_mode() {
            any = true;
            let r = reduce_parities(&trimmed)?;
            let euler_h = file.inventory_section()?.euler_h.unwrap_or(0);
            let p = torus_periodicity(r.m, from..=to, euler_h)?;
            let _ = writeln!(report.text, "period m = {}: {} classes", p.m, p.class_count());
            for class in &p.classes {
                let _ = writeln!(report.text, "  {class:?}");
            }
            let _ = writeln!(report.text, "euler constant at {}: {}", p.euler_h, p.euler_constant());
            if !p.euler_constant() {
                report.mismatches.push("euler(H + nT) varies with n".into());
            }
            report.expect("classes", file.expectations.classes.as_ref(), &(p.class_count() as u64));
            body["periodicity"] = serde_json::to_value(&p)?;
        }
    }
    if !any {
        bail!(
            "scenario `{}` has nothing to sweep: it needs a patch_complex or a solid-torus inventory",
            file.name
        );
    }
    report.body = body;
    Ok(report)
}
