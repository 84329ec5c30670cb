//! The `coxcc` command line: classify diagrams, decide convex
//! cocompactness, build Cartan matrices and representations, render
//! tilings, and replay the bundled example corpus.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use coxcc_core::cartan::{
    affine_atilde_cartan, deformed_tits_cartan, generic_cc_cartan, tits_cartan, CartanMatrix,
};
use coxcc_core::coxeter::{
    self, classify_connected, condition_atilde, condition_ic, irreducible_components,
    peripheral_subgroups, CoxeterMatrix, GroupClass,
};
use coxcc_core::decision::{decide_with_tol, exists_verdict, Witness};
use coxcc_core::geometry::{orbit, render_svg, sigma_boundary_test, ChartSpec};
use coxcc_core::reflection::{
    atilde_model, build_rep, n2_proximal, verify_rep, InteriorCertificate, ProximalOutcome,
};
use coxcc_core::{linalg, tol};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::corpus;
use crate::exit;
use crate::formats::{self, read_cartan, read_cox, write_cartan, write_rep, write_tiling_jsonl};
use crate::report::{ClassifyJson, ComponentJson, PeripheralJson, RunReport, VerdictJson};

#[derive(Parser, Debug)]
#[command(
    name = "coxcc",
    version,
    about = "Convex cocompactness for Coxeter reflection groups: classify, decide, build, tile"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit the full machine-readable run report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the randomized identity checks.
    #[arg(long, global = true, default_value_t = 715982)]
    pub seed: u64,
    /// Margin for the strict inequalities of the decision (products vs 4,
    /// cycle products vs 1); values inside the margin decide "not CC".
    #[arg(long, global = true, default_value_t = tol::STRICT)]
    pub tol_strict: f64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a diagram: components, families, hyperbolicity, and the
    /// group-level existence verdict.
    Classify { cox: PathBuf },
    /// Decide convex cocompactness for a Coxeter/Cartan pair.
    Decide { cox: PathBuf, cartan: PathBuf },
    /// Build a Cartan matrix of the given flavor and its semisimple
    /// representation; writes `<out>.cartan` and `<out>.rep.json`.
    Build {
        cox: PathBuf,
        /// tits | deformed | generic | atilde
        #[arg(long)]
        flavor: String,
        /// For `deformed`: ∞-pair deformations as `i,j=value` (1-based),
        /// repeatable. Pairs not listed get λ = 0.
        #[arg(long)]
        lambda: Vec<String>,
        /// For `atilde`: the corner parameter a > 0, a ≠ 1.
        #[arg(long)]
        a: Option<f64>,
        /// Representation dimension (default: number of generators).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Render the orbit tiling of a rank-3 representation (or a sliced
    /// rank-4 one) to SVG.
    Tile {
        cox: PathBuf,
        cartan: PathBuf,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long)]
        out: PathBuf,
        /// Chart covector (comma-separated); default: sum of the walls.
        #[arg(long)]
        chart: Option<String>,
        /// Slice covector for 4-dimensional representations.
        #[arg(long)]
        slice: Option<String>,
        /// Also dump the tiling as JSON lines.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Materialize a bundled corpus entry at explicit parameter values;
    /// writes `<out>.cox` and `<out>.cartan`.
    Corpus {
        /// ex91 | ex92 | ex93 | ex31 | fig5
        name: String,
        #[arg(long, default_value_t = 1.0)]
        x: f64,
        #[arg(long, default_value_t = 1.0)]
        y: f64,
        #[arg(long, default_value_t = 1.0)]
        z: f64,
        #[arg(long, default_value_t = 1.0)]
        u: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Replay the bundled corpus end-to-end, checking every closed-form
    /// identity; or sweep a corpus parameter with `--sweep`.
    Examples {
        /// Sweep spec `example:param=lo:hi:step`, e.g. `ex93:x=0.5:3:0.1`.
        #[arg(long)]
        sweep: Option<String>,
        /// With --sweep: write the sweep as CSV here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn parse(message: impl Into<String>) -> Self {
        CliError { code: exit::PARSE_ERROR, message: message.into() }
    }

    fn validation(message: impl Into<String>) -> Self {
        CliError { code: exit::VALIDATION_ERROR, message: message.into() }
    }

    fn identity(message: impl Into<String>) -> Self {
        CliError { code: exit::IDENTITY_FAILURE, message: message.into() }
    }
}

impl From<formats::FormatError> for CliError {
    fn from(e: formats::FormatError) -> Self {
        CliError::parse(e.to_string())
    }
}

/// Run the parsed command; prints output and returns the exit code.
pub fn run(cli: Cli) -> i32 {
    let started = Instant::now();
    let result = dispatch(&cli);
    match result {
        Ok((mut report, human)) => {
            report.wall_ms = started.elapsed().as_secs_f64() * 1e3;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{human}");
            }
            exit::OK
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(RunReport, String), CliError> {
    match &cli.command {
        Command::Classify { cox } => cmd_classify(cox, cli),
        Command::Decide { cox, cartan } => cmd_decide(cox, cartan, cli),
        Command::Build { cox, flavor, lambda, a, n, out } => {
            cmd_build(cox, flavor, lambda, *a, *n, out, cli)
        }
        Command::Tile { cox, cartan, depth, out, chart, slice, dump } => {
            cmd_tile(cox, cartan, *depth, out, chart.as_deref(), slice.as_deref(), dump.as_deref(), cli)
        }
        Command::Corpus { name, x, y, z, u, out } => cmd_corpus(name, [*x, *y, *z, *u], out, cli),
        Command::Examples { sweep, out } => match sweep {
            Some(spec) => cmd_sweep(spec, out.as_deref(), cli),
            None => cmd_examples(cli),
        },
    }
}

fn subset_names(subset: &[usize]) -> String {
    subset.iter().map(|&i| format!("s{}", i + 1)).collect::<Vec<_>>().join(",")
}

fn cmd_classify(path: &Path, cli: &Cli) -> Result<(RunReport, String), CliError> {
    let w = read_cox(path)?;
    let comps = irreducible_components(&w);
    let components: Vec<ComponentJson> = comps
        .iter()
        .map(|c| ComponentJson {
            vertices: c.vertices.iter().map(|&v| v + 1).collect(),
            class: coxeter::classify_component(&w, c).to_string(),
        })
        .collect();
    let irreducible = comps.len() == 1;
    let (ic, ic_witness) = condition_ic(&w);
    let (atilde, atilde_witness) = condition_atilde(&w);
    let hyperbolic = w.is_word_hyperbolic();
    let exists = if irreducible && w.is_infinite() {
        Some(coxeter::admits_cc_reflection_rep(&w).map_err(|e| CliError::validation(e.to_string()))?)
    } else {
        None
    };
    let peripherals = if exists == Some(true)
        && matches!(classify_connected(&w), Ok(GroupClass::Large))
    {
        Some(
            peripheral_subgroups(&w)
                .map_err(|e| CliError::validation(e.to_string()))?
                .into_iter()
                .map(|(u, perp)| PeripheralJson {
                    u: u.iter().map(|&i| i + 1).collect(),
                    u_perp: perp.iter().map(|&i| i + 1).collect(),
                })
                .collect(),
        )
    } else {
        None
    };
    let classify = ClassifyJson {
        n: w.size(),
        irreducible,
        components,
        word_hyperbolic: hyperbolic,
        condition_ic: ic,
        ic_witness: ic_witness
            .as_ref()
            .map(|(a, b)| (a.iter().map(|&i| i + 1).collect(), b.iter().map(|&i| i + 1).collect())),
        condition_atilde: atilde,
        atilde_witness: atilde_witness.as_ref().map(|s| s.iter().map(|&i| i + 1).collect()),
        exists_cc_rep: exists,
        peripheral_subgroups: peripherals,
    };
    let mut human = String::new();
    human.push_str(&format!("generators: {}\n", classify.n));
    human.push_str(&format!(
        "reducibility: {}\n",
        if irreducible { "irreducible" } else { "reducible" }
    ));
    for c in &classify.components {
        human.push_str(&format!(
            "component {{{}}}: {}\n",
            c.vertices.iter().map(|v| format!("s{v}")).collect::<Vec<_>>().join(","),
            c.class
        ));
    }
    human.push_str(&format!("word hyperbolic: {hyperbolic}\n"));
    match &ic_witness {
        Some((s1, s2)) => human.push_str(&format!(
            "(IC): holds, witness ({{{}}}, {{{}}})\n",
            subset_names(s1),
            subset_names(s2)
        )),
        None => human.push_str("(IC): does not hold\n"),
    }
    human.push_str(&format!(
        "(Ã): {}\n",
        match &atilde_witness {
            Some(s) => format!("fails at {{{}}}", subset_names(s)),
            None => "holds".to_string(),
        }
    ));
    if let Some(e) = exists {
        human.push_str(&format!("admits convex cocompact reflection representation: {e}\n"));
    }
    if let Some(ps) = &classify.peripheral_subgroups {
        if ps.is_empty() {
            human.push_str("peripheral subgroups: none (word hyperbolic case)\n");
        }
        for p in ps {
            human.push_str(&format!(
                "peripheral: U = {{{}}}, U⊥ = {{{}}}\n",
                p.u.iter().map(|v| format!("s{v}")).collect::<Vec<_>>().join(","),
                p.u_perp.iter().map(|v| format!("s{v}")).collect::<Vec<_>>().join(",")
            ));
        }
    }
    let report = RunReport::new(
        "classify",
        vec![path.display().to_string()],
        serde_json::to_value(&classify).expect("classify serializes"),
        cli.tol_strict,
    );
    Ok((report, human))
}

fn load_pair(cox: &Path, cartan: &Path) -> Result<(CoxeterMatrix, CartanMatrix), CliError> {
    let w = read_cox(cox)?;
    let a = read_cartan(cartan)?;
    if a.coxeter() != &w {
        return Err(CliError::validation(format!(
            "{} and {} describe different Coxeter groups",
            cox.display(),
            cartan.display()
        )));
    }
    Ok((w, a))
}

fn describe_witness(w: &Witness) -> String {
    format!("{w}")
}

fn cmd_decide(cox: &Path, cartan: &Path, cli: &Cli) -> Result<(RunReport, String), CliError> {
    let (w, a) = load_pair(cox, cartan)?;
    let verdict = decide_with_tol(&w, &a, cli.tol_strict)
        .map_err(|e| CliError::validation(e.to_string()))?;
    let json = VerdictJson::from(&verdict);
    let mut human = String::new();
    human.push_str(&format!(
        "exists (group level): {}\ncc: {}   ncc: {}   scc: {}   anosov: {}\n",
        json.exists, json.cc, json.ncc, json.scc, json.anosov
    ));
    human.push_str(&format!(
        "routes: products/cycles (¬ZD) = {}, zero-type scan (¬ZT) = {}{}\n",
        json.routes.zd,
        json.routes.zt,
        if json.routes.tolerance_fault { "  [tolerance fault]" } else { "" }
    ));
    if let Some(aff) = &json.affine {
        human.push_str(&format!(
            "affine case: type {} (|λ| tol {:.1e}), det = {:.12} (strict tol {:.1e}), Ã family: {}\n",
            aff.matrix_type,
            tol::ZERO_TYPE,
            aff.det,
            cli.tol_strict,
            aff.is_atilde
        ));
    }
    for witness in &verdict.witnesses {
        human.push_str(&format!("witness: {}\n", describe_witness(witness)));
    }
    let report = RunReport::new(
        "decide",
        vec![cox.display().to_string(), cartan.display().to_string()],
        serde_json::to_value(&json).expect("verdict serializes"),
        cli.tol_strict,
    );
    Ok((report, human))
}

type LambdaList = Vec<((usize, usize), f64)>;

fn parse_lambda(specs: &[String], w: &CoxeterMatrix) -> Result<LambdaList, CliError> {
    let mut lambda: LambdaList = w.infinite_pairs().into_iter().map(|p| (p, 0.0)).collect();
    for spec in specs {
        let (pair_part, value_part) = spec
            .split_once('=')
            .ok_or_else(|| CliError::validation(format!("bad --lambda `{spec}`: expected i,j=v")))?;
        let (i_str, j_str) = pair_part
            .split_once(',')
            .ok_or_else(|| CliError::validation(format!("bad --lambda `{spec}`: expected i,j=v")))?;
        let parse_idx = |s: &str| -> Result<usize, CliError> {
            let v: usize = s
                .trim()
                .parse()
                .map_err(|_| CliError::validation(format!("bad index in --lambda `{spec}`")))?;
            if v == 0 || v > w.size() {
                return Err(CliError::validation(format!("index out of range in --lambda `{spec}`")));
            }
            Ok(v - 1)
        };
        let (mut i, mut j) = (parse_idx(i_str)?, parse_idx(j_str)?);
        if i > j {
            std::mem::swap(&mut i, &mut j);
        }
        let value: f64 = value_part
            .trim()
            .parse()
            .map_err(|_| CliError::validation(format!("bad value in --lambda `{spec}`")))?;
        match lambda.iter_mut().find(|((a, b), _)| (*a, *b) == (i, j)) {
            Some(slot) => slot.1 = value,
            None => {
                return Err(CliError::validation(format!(
                    "--lambda pair ({},{}) is not an ∞-labeled pair",
                    i + 1,
                    j + 1
                )))
            }
        }
    }
    Ok(lambda)
}

#[allow(clippy::too_many_arguments)]
fn cmd_build(
    cox: &Path,
    flavor: &str,
    lambda_specs: &[String],
    a_param: Option<f64>,
    n: Option<usize>,
    out: &Path,
    cli: &Cli,
) -> Result<(RunReport, String), CliError> {
    let w = read_cox(cox)?;
    let mut zigzag_checked = None;
    let a = match flavor {
        "tits" => tits_cartan(&w),
        "deformed" => {
            let lambda = parse_lambda(lambda_specs, &w)?;
            deformed_tits_cartan(&w, &lambda).map_err(|e| CliError::validation(e.to_string()))?
        }
        "generic" => generic_cc_cartan(&w).map_err(|e| CliError::validation(e.to_string()))?,
        "atilde" => {
            let a_param = a_param
                .ok_or_else(|| CliError::validation("--flavor atilde requires --a".to_string()))?;
            let big_n = w.size();
            let family = affine_atilde_cartan(big_n, a_param)
                .map_err(|e| CliError::validation(e.to_string()))?;
            if family.coxeter() != &w {
                return Err(CliError::validation(format!(
                    "{} is not the Ã_{} cycle required by --flavor atilde",
                    cox.display(),
                    big_n - 1
                )));
            }
            // The explicit model also certifies the zigzag identity.
            let (_, zigzag) =
                atilde_model(big_n, a_param).map_err(|e| CliError::validation(e.to_string()))?;
            let mut expect = linalg::Mat::identity(big_n);
            expect[(0, 0)] = 1.0 / a_param;
            expect[(big_n - 1, big_n - 1)] = a_param;
            let err = zigzag.max_abs_diff(&expect);
            if err > tol::ENTRY {
                return Err(CliError::identity(format!(
                    "zigzag identity failed: err {err:.3e} > {:.1e}",
                    tol::ENTRY
                )));
            }
            zigzag_checked = Some(err);
            family
        }
        other => {
            return Err(CliError::validation(format!(
                "unknown flavor `{other}` (expected tits|deformed|generic|atilde)"
            )))
        }
    };
    let dim = n.unwrap_or(w.size());
    let rank_info = linalg::rank_info(a.entries(), tol::RANK);
    let rep = build_rep(&a, dim).map_err(|e| CliError::validation(e.to_string()))?;
    let verify = verify_rep(&rep, &w);
    let cartan_path = out.with_extension("cartan");
    let rep_path = out.with_extension("rep.json");
    write_cartan(&cartan_path, &a)?;
    write_rep(&rep_path, &rep)?;
    let interior = match &verify.interior {
        InteriorCertificate::Strict { max_alpha, .. } => format!("strict (max α = {max_alpha:.3e})"),
        InteriorCertificate::Undetermined => "undetermined (zero type present)".to_string(),
        InteriorCertificate::Failed { max_alpha } => format!("FAILED (max α = {max_alpha:.3e})"),
    };
    let max_involution = verify.involution_errs.iter().cloned().fold(0.0, f64::max);
    let max_relation = verify.relations.iter().map(|r| r.err).fold(0.0, f64::max);
    let outputs = serde_json::json!({
        "cartan": cartan_path.display().to_string(),
        "rep": rep_path.display().to_string(),
        "dimension": dim,
        "rank": rank_info.rank,
        "rank_pivot_gap": rank_info.pivot_gap(),
        "verify": {
            "passed": verify.passed(),
            "max_involution_err": max_involution,
            "max_relation_err": max_relation,
            "cartan_err": verify.cartan_err,
            "interior": interior,
        },
        "zigzag_err": zigzag_checked,
    });
    let human = format!(
        "wrote {} and {}\nverify: passed = {} (involutions ≤ {:.2e} of tol {:.0e}, relations ≤ {:.2e} of tol {:.0e}, recovery ≤ {:.2e} of tol {:.0e})\ninterior certificate: {}\n{}",
        cartan_path.display(),
        rep_path.display(),
        verify.passed(),
        max_involution,
        tol::ENTRY,
        max_relation,
        tol::RELATION,
        verify.cartan_err,
        tol::ENTRY,
        interior,
        match zigzag_checked {
            Some(err) => format!("zigzag identity: ok (err {err:.2e} ≤ {:.0e})\n", tol::ENTRY),
            None => String::new(),
        }
    );
    let report = RunReport::new(
        "build",
        vec![cox.display().to_string(), format!("flavor={flavor}")],
        outputs,
        cli.tol_strict,
    );
    Ok((report, human))
}

fn parse_covector(text: &str, n: usize, what: &str) -> Result<Vec<f64>, CliError> {
    let values: Result<Vec<f64>, _> = text.split(',').map(|s| s.trim().parse::<f64>()).collect();
    let values =
        values.map_err(|_| CliError::validation(format!("bad {what}: expected comma floats")))?;
    if values.len() != n {
        return Err(CliError::validation(format!("{what} must have {n} entries")));
    }
    Ok(values)
}

#[allow(clippy::too_many_arguments)]
fn cmd_tile(
    cox: &Path,
    cartan: &Path,
    depth: usize,
    out: &Path,
    chart: Option<&str>,
    slice: Option<&str>,
    dump: Option<&Path>,
    cli: &Cli,
) -> Result<(RunReport, String), CliError> {
    let (w, a) = load_pair(cox, cartan)?;
    let rank = a.rank();
    let rep = build_rep(&a, rank).map_err(|e| CliError::validation(e.to_string()))?;
    let tiling = orbit(&rep, depth).map_err(|e| CliError::validation(e.to_string()))?;
    let spec = ChartSpec {
        chart: chart.map(|c| parse_covector(c, rank, "--chart")).transpose()?,
        slice: slice.map(|c| parse_covector(c, rank, "--slice")).transpose()?,
        ..ChartSpec::default()
    };
    let (svg, render) =
        render_svg(&rep, &tiling, &spec).map_err(|e| CliError::validation(e.to_string()))?;
    std::fs::write(out, &svg).map_err(|e| CliError::validation(format!("{}: {e}", out.display())))?;
    if let Some(dump_path) = dump {
        write_tiling_jsonl(dump_path, &tiling)?;
    }
    let sigma_interior = match sigma_boundary_test(&w, &a) {
        Ok(res) => Some(!res.touches_boundary),
        Err(_) => None,
    };
    let outputs = serde_json::json!({
        "svg": out.display().to_string(),
        "depth": depth,
        "orbit_count": tiling.elements.len(),
        "tiles_drawn": render.tiles_drawn,
        "tiles_clipped": render.tiles_clipped,
        "sigma_in_interior": sigma_interior,
        "warnings": render.warnings,
        "dump": dump.map(|p| p.display().to_string()),
    });
    let mut human = format!(
        "wrote {} ({} orbit elements at depth {depth}, {} drawn, {} clipped)\n",
        out.display(),
        tiling.elements.len(),
        render.tiles_drawn,
        render.tiles_clipped
    );
    match sigma_interior {
        Some(ok) => human.push_str(&format!("Σ ⊂ interior: {ok}\n")),
        None => human.push_str("Σ ⊂ interior: n/a (needs negative type)\n"),
    }
    for warning in &render.warnings {
        human.push_str(&format!("warning: {warning}\n"));
    }
    let report = RunReport::new(
        "tile",
        vec![cox.display().to_string(), cartan.display().to_string(), format!("depth={depth}")],
        outputs,
        cli.tol_strict,
    );
    Ok((report, human))
}

fn cmd_corpus(
    name: &str,
    [x, y, z, u]: [f64; 4],
    out: &Path,
    cli: &Cli,
) -> Result<(RunReport, String), CliError> {
    let a = match name {
        "ex91" => corpus::ex91_cartan(x, y, z, u),
        "ex92" => corpus::ex92_cartan(x, y),
        "ex93" => corpus::ex93_cartan(x, y),
        "ex31" => corpus::ex31_cartan(),
        "fig5" => corpus::fig5_cartan(),
        other => {
            return Err(CliError::validation(format!(
                "unknown corpus entry `{other}` (expected ex91|ex92|ex93|ex31|fig5)"
            )))
        }
    };
    let cox_path = out.with_extension("cox");
    let cartan_path = out.with_extension("cartan");
    std::fs::write(&cox_path, coxcc_core::coxeter::to_cox_text(a.coxeter()))
        .map_err(|e| CliError::validation(format!("{}: {e}", cox_path.display())))?;
    write_cartan(&cartan_path, &a)?;
    let outputs = serde_json::json!({
        "cox": cox_path.display().to_string(),
        "cartan": cartan_path.display().to_string(),
        "n": a.size(),
        "params": {"x": x, "y": y, "z": z, "u": u},
    });
    let human = format!(
        "wrote {} and {} ({} at x={x}, y={y}, z={z}, u={u})\n",
        cox_path.display(),
        cartan_path.display(),
        name
    );
    let report = RunReport::new(
        "corpus",
        vec![name.to_string()],
        outputs,
        cli.tol_strict,
    );
    Ok((report, human))
}

struct Check {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check { name, passed, detail }
}

fn cmd_examples(cli: &Cli) -> Result<(RunReport, String), CliError> {
    let mut rng = StdRng::seed_from_u64(cli.seed);
    let mut checks: Vec<Check> = Vec::new();

    // ex91: determinant identity and the constant (2,4)-minor.
    {
        let mut max_det_err = 0.0_f64;
        let mut max_minor_err = 0.0_f64;
        for _ in 0..20 {
            let (x, y, z, u) = (
                rng.gen_range(1.0..3.0),
                rng.gen_range(1.0..3.0),
                rng.gen_range(1.0..3.0),
                rng.gen_range(1.0..3.0),
            );
            let a = corpus::ex91_cartan(x, y, z, u);
            max_det_err =
                max_det_err.max((a.det() - corpus::ex91_det_formula(x, y, z, u)).abs());
            let minor = linalg::det(&a.entries().minor_matrix(1, 3));
            max_minor_err = max_minor_err.max((minor - 16.0).abs());
        }
        checks.push(check(
            "ex91 det = 32(xu+xz+yu-x-y-z-u+1)",
            max_det_err <= 1e-8,
            format!("max |err| = {max_det_err:.3e} (tol 1e-8)"),
        ));
        checks.push(check(
            "ex91 (2,4)-minor = 16",
            max_minor_err <= 1e-9,
            format!("max |err| = {max_minor_err:.3e} (tol 1e-9)"),
        ));
    }

    // ex92: determinant identity and the (1,1)-minor.
    {
        let mut max_det_err = 0.0_f64;
        let mut max_minor_err = 0.0_f64;
        for _ in 0..20 {
            let x = rng.gen_range(0.3..3.0);
            let y = rng.gen_range(1.0..3.0);
            let a = corpus::ex92_cartan(x, y);
            max_det_err = max_det_err.max((a.det() - corpus::ex92_det_formula(x, y)).abs());
            let minor = linalg::det(&a.entries().minor_matrix(0, 0));
            max_minor_err = max_minor_err.max((minor - corpus::ex92_minor11_formula(y)).abs());
        }
        checks.push(check(
            "ex92 det = 32y^2 - 9(x+1/x) - 14",
            max_det_err <= 1e-8,
            format!("max |err| = {max_det_err:.3e} (tol 1e-8)"),
        ));
        checks.push(check(
            "ex92 (1,1)-minor = -4(2y^2+1)",
            max_minor_err <= 1e-8,
            format!("max |err| = {max_minor_err:.3e} (tol 1e-8)"),
        ));
    }

    // ex93: determinant identity and its fixed sign.
    {
        let mut max_det_err = 0.0_f64;
        let mut all_negative = true;
        for _ in 0..20 {
            let x = rng.gen_range(0.3..3.0);
            let y = rng.gen_range(0.3..3.0);
            let a = corpus::ex93_cartan(x, y);
            let det = a.det();
            max_det_err = max_det_err.max((det - corpus::ex93_det_formula(x, y)).abs());
            all_negative &= det < 0.0;
        }
        checks.push(check(
            "ex93 det identity and det < 0",
            max_det_err <= 1e-8 && all_negative,
            format!("max |err| = {max_det_err:.3e} (tol 1e-8), all negative: {all_negative}"),
        ));
    }

    // Verdict reproduction.
    {
        let w = corpus::ex92_cox();
        let boundary = decide_with_tol(&w, &corpus::ex92_cartan(1.0, 1.0), cli.tol_strict)
            .map_err(|e| CliError::validation(e.to_string()))?;
        let x = 2.0;
        let curve = decide_with_tol(
            &w,
            &corpus::ex92_cartan(x, corpus::ex92_curve_y(x)),
            cli.tol_strict,
        )
        .map_err(|e| CliError::validation(e.to_string()))?;
        let boundary_names_pair = boundary.witnesses.iter().any(
            |w| matches!(w, Witness::InfinitePairProduct { i: 3, j: 4, .. }),
        );
        checks.push(check(
            "ex92 verdicts: (1,1) boundary false, on-curve true",
            !boundary.cc && boundary_names_pair && curve.cc && curve.scc && curve.anosov,
            format!(
                "cc(1,1) = {}, witness pair (s4,s5) = {boundary_names_pair}, on-curve cc/scc/anosov = {}/{}/{}",
                boundary.cc, curve.cc, curve.scc, curve.anosov
            ),
        ));
        let w = corpus::ex93_cox();
        let at_one = decide_with_tol(&w, &corpus::ex93_cartan(1.0, 1.0), cli.tol_strict)
            .map_err(|e| CliError::validation(e.to_string()))?;
        let triangle_witness = at_one.witnesses.iter().any(
            |w| matches!(w, Witness::AtildeCycle { subset, .. } if subset == &vec![0, 1, 2]),
        );
        let mut away_ok = true;
        for x in [0.5, 2.0, 3.0] {
            let v = decide_with_tol(&w, &corpus::ex93_cartan(x, 1.0), cli.tol_strict)
                .map_err(|e| CliError::validation(e.to_string()))?;
            away_ok &= v.cc && !v.scc;
        }
        checks.push(check(
            "ex93 verdicts: cc fails exactly on the x=1 locus",
            !at_one.cc && triangle_witness && away_ok,
            format!(
                "cc(x=1) = {}, triangle witness = {triangle_witness}, cc(x∈{{0.5,2,3}}) = {away_ok}",
                at_one.cc
            ),
        ));
        let (exists, witness) = exists_verdict(&corpus::ex91_cox())
            .map_err(|e| CliError::validation(e.to_string()))?;
        let ic_witness = matches!(witness, Some(Witness::ConditionIC { .. }));
        checks.push(check(
            "ex91 existence: no CC representation, (IC) witness",
            !exists && ic_witness,
            format!("exists = {exists}, (IC) witness = {ic_witness}"),
        ));
    }

    // Proximal data of the rank-2 fixture.
    {
        let a = corpus::ex31_cartan();
        let outcome = n2_proximal(&a).map_err(|e| CliError::validation(e.to_string()))?;
        let ok = match outcome {
            ProximalOutcome::Proximal(d) => {
                let expect =
                    linalg::Mat::from_rows(&[vec![5.0, -3.0], vec![2.0, -1.0]]);
                let m_ok = d.matrix.max_abs_diff(&expect) <= 1e-9;
                let prod_ok = (d.eigen_plus * d.eigen_minus - 1.0).abs() <= 1e-12;
                let mut vec_ok = true;
                for (x, lambda) in [(d.x_plus, d.eigen_plus), (d.x_minus, d.eigen_minus)] {
                    let mx = d.matrix.mul_vec(&x);
                    vec_ok &= (0..2).all(|p| (mx[p] - lambda * x[p]).abs() <= 1e-9);
                }
                m_ok && prod_ok && vec_ok
            }
            ProximalOutcome::Unipotent => false,
        };
        checks.push(check(
            "ex31 proximal data: M, eigenvectors, λ+·λ- = 1",
            ok,
            "matrix [[5,-3],[2,-1]], residuals ≤ 1e-9, product tol 1e-12".to_string(),
        ));
    }

    // Zigzag identity on the cyclic family.
    {
        let mut ok = true;
        let mut max_err = 0.0_f64;
        for n in 3..=5 {
            for &a_param in &[0.5, 2.0] {
                let (_, zig) = atilde_model(n, a_param)
                    .map_err(|e| CliError::validation(e.to_string()))?;
                let mut expect = linalg::Mat::identity(n);
                expect[(0, 0)] = 1.0 / a_param;
                expect[(n - 1, n - 1)] = a_param;
                let err = zig.max_abs_diff(&expect);
                max_err = max_err.max(err);
                ok &= err <= 1e-9;
                let fam = affine_atilde_cartan(n, a_param)
                    .map_err(|e| CliError::validation(e.to_string()))?;
                ok &= (fam.det() - (2.0 - a_param - 1.0 / a_param)).abs() <= 1e-9;
            }
        }
        checks.push(check(
            "zigzag = Diag(1/a,1,..,1,a) and det = 2-a-1/a",
            ok,
            format!("max zigzag err = {max_err:.3e} (tol 1e-9)"),
        ));
    }

    // Figure configuration: Σ stays interior and the orbit count matches
    // the independent normal-form count.
    {
        let w = corpus::fig5_cox();
        let a = corpus::fig5_cartan();
        let boundary = sigma_boundary_test(&w, &a)
            .map_err(|e| CliError::validation(e.to_string()))?;
        let rep = build_rep(&a, 3).map_err(|e| CliError::validation(e.to_string()))?;
        let tiling = orbit(&rep, 4).map_err(|e| CliError::validation(e.to_string()))?;
        let oracle = racg_ball_count(&[(0, 2)], 3, 4);
        checks.push(check(
            "figure group: Σ interior, orbit count = normal-form count",
            !boundary.touches_boundary && tiling.elements.len() == oracle,
            format!(
                "touches = {}, orbit = {}, oracle = {oracle}",
                boundary.touches_boundary,
                tiling.elements.len()
            ),
        ));
    }

    let mut human = String::new();
    let mut all_ok = true;
    for c in &checks {
        all_ok &= c.passed;
        human.push_str(&format!(
            "[{}] {}: {}\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        ));
    }
    human.push_str(&format!(
        "{}/{} identity checks passed (seed {})\n",
        checks.iter().filter(|c| c.passed).count(),
        checks.len(),
        cli.seed
    ));
    if !all_ok {
        return Err(CliError::identity(format!("identity checks failed:\n{human}")));
    }
    let outputs = serde_json::json!({
        "checks": checks
            .iter()
            .map(|c| serde_json::json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
            .collect::<Vec<_>>(),
        "seed": cli.seed,
    });
    let report = RunReport::new("examples", vec![], outputs, cli.tol_strict);
    Ok((report, human))
}

/// Ball size of a right-angled Coxeter group by canonical-form counting:
/// enumerate all words up to `depth` over `gens` generators, rewrite to
/// the normal form (square cancellation + sorted commuting swaps), and
/// count distinct forms. Independent of any matrix arithmetic.
fn racg_ball_count(commuting: &[(usize, usize)], gens: usize, depth: usize) -> usize {
    fn canonicalize(word: &mut Vec<usize>, commuting: &[(usize, usize)]) {
        loop {
            let mut changed = false;
            let mut k = 0;
            while k + 1 < word.len() {
                if word[k] == word[k + 1] {
                    word.drain(k..k + 2);
                    changed = true;
                    k = k.saturating_sub(1);
                    continue;
                }
                let (a, b) = (word[k], word[k + 1]);
                let commutes = commuting.contains(&(a.min(b), a.max(b)));
                if commutes && a > b {
                    word.swap(k, k + 1);
                    changed = true;
                }
                k += 1;
            }
            if !changed {
                return;
            }
        }
    }
    let mut seen: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    seen.insert(Vec::new());
    for _ in 0..depth {
        let mut next = Vec::new();
        for word in &frontier {
            for g in 0..gens {
                let mut w = word.clone();
                w.push(g);
                canonicalize(&mut w, commuting);
                if seen.insert(w.clone()) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    seen.len()
}

fn threads_cap() -> usize {
    std::env::var("COXCC_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn cmd_sweep(
    spec: &str,
    out: Option<&Path>,
    cli: &Cli,
) -> Result<(RunReport, String), CliError> {
    // Spec: example:param=lo:hi:step (e.g. ex93:x=0.5:3:0.1).
    let (example, rest) = spec
        .split_once(':')
        .ok_or_else(|| CliError::validation("sweep spec must be example:param=lo:hi:step"))?;
    let (param, range) = rest
        .split_once('=')
        .ok_or_else(|| CliError::validation("sweep spec must be example:param=lo:hi:step"))?;
    let parts: Vec<&str> = range.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::validation("sweep range must be lo:hi:step"));
    }
    let parse = |s: &str| -> Result<f64, CliError> {
        s.parse().map_err(|_| CliError::validation(format!("bad number `{s}` in sweep")))
    };
    let (lo, hi, step) = (parse(parts[0])?, parse(parts[1])?, parse(parts[2])?);
    if step <= 0.0 || hi < lo {
        return Err(CliError::validation("sweep needs lo ≤ hi and step > 0"));
    }
    let mut points = Vec::new();
    let mut v = lo;
    while v <= hi + 1e-12 {
        points.push(v);
        v += step;
    }
    let strict = cli.tol_strict;
    type SweepEval = Box<dyn Fn(f64) -> Result<(bool, bool), String> + Sync>;
    let eval: SweepEval = match (example, param) {
        ("ex92", "x") => Box::new(move |x| {
            let w = corpus::ex92_cox();
            let a = corpus::ex92_cartan(x, corpus::ex92_curve_y(x));
            decide_with_tol(&w, &a, strict).map(|v| (v.cc, v.scc)).map_err(|e| e.to_string())
        }),
        ("ex92", "y") => Box::new(move |y| {
            let w = corpus::ex92_cox();
            let a = corpus::ex92_cartan(1.0, y);
            decide_with_tol(&w, &a, strict).map(|v| (v.cc, v.scc)).map_err(|e| e.to_string())
        }),
        ("ex93", "x") => Box::new(move |x| {
            let w = corpus::ex93_cox();
            let a = corpus::ex93_cartan(x, 1.0);
            decide_with_tol(&w, &a, strict).map(|v| (v.cc, v.scc)).map_err(|e| e.to_string())
        }),
        ("ex93", "y") => Box::new(move |y| {
            let w = corpus::ex93_cox();
            let a = corpus::ex93_cartan(2.0, y);
            decide_with_tol(&w, &a, strict).map(|v| (v.cc, v.scc)).map_err(|e| e.to_string())
        }),
        _ => {
            return Err(CliError::validation(format!(
                "unsupported sweep `{example}:{param}` (supported: ex92:x, ex92:y, ex93:x, ex93:y)"
            )))
        }
    };
    // Evaluate in parallel, capped by COXCC_THREADS; results keep the
    // parameter order.
    let threads = threads_cap().min(points.len().max(1));
    type SweepRow = (f64, Result<(bool, bool), String>);
    let results: Vec<SweepRow> = std::thread::scope(|scope| {
        let chunk = points.len().div_ceil(threads);
        let mut handles = Vec::new();
        for part in points.chunks(chunk.max(1)) {
            let eval = &eval;
            handles.push(scope.spawn(move || {
                part.iter().map(|&p| (p, eval(p))).collect::<Vec<_>>()
            }));
        }
        handles.into_iter().flat_map(|h| h.join().expect("sweep worker")).collect()
    });
    let mut human = String::new();
    let mut csv = String::from("param,value,cc,scc\n");
    let mut rows = Vec::new();
    for (p, res) in &results {
        match res {
            Ok((cc, scc)) => {
                human.push_str(&format!("{param}={p:.6}  cc={cc}  scc={scc}\n"));
                csv.push_str(&format!("{param},{p},{cc},{scc}\n"));
                rows.push(serde_json::json!({"value": p, "cc": cc, "scc": scc}));
            }
            Err(e) => {
                human.push_str(&format!("{param}={p:.6}  error: {e}\n"));
                rows.push(serde_json::json!({"value": p, "error": e}));
            }
        }
    }
    if let Some(path) = out {
        std::fs::write(path, &csv)
            .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))?;
        human.push_str(&format!("wrote {}\n", path.display()));
    }
    let outputs = serde_json::json!({
        "example": example,
        "param": param,
        "points": rows,
        "threads": threads,
    });
    let report = RunReport::new("examples --sweep", vec![spec.to_string()], outputs, cli.tol_strict);
    Ok((report, human))
}
