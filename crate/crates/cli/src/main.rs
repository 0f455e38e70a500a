mod source;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coverideals::betti::{BettiModule, BettiTable};
use coverideals::experiments::{ExperimentConfig, ExperimentId, DEFAULT_SEED};
use coverideals::formulas::{
    betti_complete_power, betti_connected_graph, betti_tree_complement_power, evaluate, pdim_complete_power,
    reg_multipartite, FormulaId, FormulaParams,
};
use coverideals::oracle::{betti_table_oracle, hochster_entry, FieldSpec, OracleOptions, DEFAULT_VERTEX_CAP};
use coverideals::quotients::{betti_from_linear_quotients, linear_quotient_data, weighted_betti};
use coverideals::rees::{ci_report, defining_ideal_generators, k1_generators, linear_type, ReesBinomial};
use coverideals::series::{extract_power_series, rees_hilbert_ci};
use coverideals::{Error, HilbertMode, MonomialIdeal, SimpleGraph};
use serde::Serialize;
use serde_json::json;

use source::{Origin, SourceArgs};

const ORDER_BUDGET: usize = 200_000;

#[derive(Debug, Parser)]
#[command(name = "coverideals", version, about = "Betti numbers, regularity and Rees algebras of cover ideals")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Coefficient field for homology: a prime, or q for the rationals.
    #[arg(long, global = true, default_value = "32003", value_parser = parse_field)]
    field: FieldSpec,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for random graphs.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the minimal generators of an ideal.
    Ideal(SourceArgs),
    /// Print a graph with its structure and minimal vertex covers.
    Graph(SourceArgs),
    /// Graded Betti numbers by linear quotients, Hochster's formula or a closed form.
    Betti(BettiArgs),
    /// Defining relations of the Rees algebra, linear type and complete-intersection checks.
    Rees(ReesArgs),
    /// Regularity and projective dimension, compared with closed forms where known.
    Reg(RegArgs),
    /// Hilbert function of an ideal, or the complete-intersection Rees series.
    Hilbert(HilbertArgs),
    /// Evaluate a closed formula.
    Formula(FormulaArgs),
    /// Run a named experiment, or all of them.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Lq,
    Oracle,
    Formula,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModuleArg {
    Quotient,
    Ideal,
}

#[derive(Debug, Args)]
struct BettiArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value = "oracle")]
    method: Method,
    /// Also compute with this method and fail on any difference.
    #[arg(long, value_enum)]
    check: Option<Method>,
    /// Only the entry beta_{i,j}.
    #[arg(long, value_name = "I,J")]
    entry: Option<String>,
    #[arg(long, value_enum, default_value = "quotient")]
    module: ModuleArg,
    /// Largest polarized variable count for full oracle tables.
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
    cap: usize,
    /// Print the table as CSV.
    #[arg(long)]
    csv: bool,
}

#[derive(Debug, Args)]
struct ReesArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Largest T-degree searched for binomial coincidences.
    #[arg(long, default_value_t = 3)]
    smax: usize,
    /// Also list all C(r, 2) Taylor relations of T-degree one.
    #[arg(long)]
    raw: bool,
}

#[derive(Debug, Args)]
struct RegArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value = "oracle")]
    method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Ideal,
    Quotient,
}

#[derive(Debug, Args)]
struct HilbertArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, default_value_t = 10)]
    dmax: u32,
    #[arg(long, value_enum, default_value = "ideal")]
    mode: ModeArg,
    /// Print the complete-intersection Rees series for this many variables instead.
    #[arg(long, value_name = "N")]
    ci_series: Option<usize>,
    /// Largest power in the series.
    #[arg(long, default_value_t = 3)]
    smax: usize,
}

#[derive(Debug, Args)]
struct FormulaArgs {
    /// connected-graph, planar, complete-power, tree-complement-power, reg-multipartite,
    /// pdim-complete-power, a-t, chu-vandermonde
    id: String,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    s: Option<u64>,
    #[arg(long)]
    i: Option<u64>,
    #[arg(long)]
    r: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    t: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<u32>>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Experiment id, or "all".
    experiment: String,
}

/// Failures carrying their exit code.
enum Failure {
    Lib(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<(), Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotSquarefree(_)
        | Error::WrongDegree { .. }
        | Error::Disconnected
        | Error::NotLinearQuotients { .. }
        | Error::BudgetExceeded(_)
        | Error::Precondition(_)
        | Error::EmptyTable => 3,
        Error::Contradiction(_) => 4,
        _ => 2,
    }
}

struct Ctx {
    json: bool,
    field: FieldSpec,
    jobs: Option<usize>,
    seed: u64,
}

impl Ctx {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
        } else {
            println!("{}", text());
        }
    }

    fn oracle(&self, cap: usize) -> OracleOptions {
        OracleOptions {
            field: self.field,
            jobs: self.jobs,
            vertex_cap: cap,
            ..OracleOptions::default()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker threads: {e}");
            return ExitCode::from(2);
        }
    };
    let ctx = Ctx {
        json: cli.json,
        field: cli.field,
        jobs: cli.jobs,
        seed: cli.seed,
    };
    let result = pool.install(|| match &cli.command {
        Command::Ideal(a) => cmd_ideal(&ctx, a),
        Command::Graph(a) => cmd_graph(&ctx, a),
        Command::Betti(a) => cmd_betti(&ctx, a),
        Command::Rees(a) => cmd_rees(&ctx, a),
        Command::Reg(a) => cmd_reg(&ctx, a),
        Command::Hilbert(a) => cmd_hilbert(&ctx, a),
        Command::Formula(a) => cmd_formula(&ctx, a),
        Command::Verify(a) => cmd_verify(&ctx, a),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Mismatch(m)) => {
            eprintln!("mismatch: {m}");
            ExitCode::from(4)
        }
    }
}

fn cmd_ideal(ctx: &Ctx, a: &SourceArgs) -> Outcome {
    let r = a.resolve(ctx.seed)?;
    let i = &r.ideal;
    ctx.emit(i, || {
        let deg = i
            .generated_in_degree()
            .map_or_else(|| "mixed degrees".to_string(), |d| format!("degree {d}"));
        format!("{i}\n{} generators, {deg}, {} variables", i.len(), i.n())
    });
    Ok(())
}

fn cmd_graph(ctx: &Ctx, a: &SourceArgs) -> Outcome {
    let r = a.resolve(ctx.seed)?;
    let g = r
        .graph
        .ok_or_else(|| Error::InvalidParameter("graph needs a graph source, not an ideal file".into()))?;
    let st = g.structure();
    let covers = g.minimal_vertex_covers();
    let parts = g.multipartite_parts();
    let value = json!({
        "graph": g,
        "structure": st,
        "minimal_vertex_covers": covers,
        "multipartite_parts": parts,
    });
    ctx.emit(&value, || {
        let covers: Vec<String> = covers.iter().map(|c| format!("{:?}", c.0)).collect();
        format!(
            "{g}\nconnected: {}, components: {}, forest: {}, cyclomatic number: {}, odd unicyclic: {}\nminimal vertex covers: {}",
            st.is_connected,
            st.components,
            st.is_forest,
            st.cyclomatic_number,
            st.odd_unicyclic,
            covers.join(" ")
        )
    });
    Ok(())
}

fn parse_entry(s: &str) -> Result<(usize, u64), Error> {
    let bad = || Error::InvalidParameter(format!("entry {s:?} should look like i,j"));
    let (i, j) = s.split_once(',').ok_or_else(bad)?;
    Ok((i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?))
}

/// Closed-form table of the ideal, for the families with a known formula.
fn formula_table(ideal: &MonomialIdeal, origin: &Origin) -> Result<BettiTable, Error> {
    if !ideal.context().is_standard() {
        return Err(Error::Precondition("closed forms are for the standard grading".into()));
    }
    let is_tree = |g: &SimpleGraph| g.is_connected() && g.structure().is_forest;
    let linear = |n: u64, s: u64, start: u64, f: fn(u64, u64, u64) -> num_bigint::BigUint| {
        let entries = (0..=n).map(|i| (i as usize, start + i, u64::try_from(f(n, s, i)).unwrap_or(u64::MAX)));
        BettiTable::from_entries(BettiModule::Ideal, entries)
    };
    match origin {
        Origin::Cover { graph, power } if graph.edge_count() == graph.n() * (graph.n() - 1) / 2 && graph.n() >= 2 => {
            let (n, s) = (graph.n() as u64, *power as u64);
            Ok(linear(n, s, s * (n - 1), betti_complete_power))
        }
        Origin::Cover { graph, power } if graph.n() >= 3 && is_tree(&graph.complement()) => {
            let (n, s) = (graph.n() as u64, *power as u64);
            Ok(linear(n, s, s * (n - 2), betti_tree_complement_power))
        }
        Origin::GraphGj { graph, power } if graph.n() >= 3 && is_tree(graph) => {
            let (n, s) = (graph.n() as u64, *power as u64);
            Ok(linear(n, s, s * (n - 2), betti_tree_complement_power))
        }
        Origin::GraphGj { graph, power: 1 } if graph.n() >= 3 && graph.is_connected() => {
            let (r, n) = (graph.edge_count() as u64, graph.n() as u64);
            let [b0, b1, b2] = betti_connected_graph(r, n)?;
            Ok(BettiTable::from_entries(
                BettiModule::Ideal,
                [(0, n - 2, b0), (1, n - 1, b1), (2, n, b2)],
            ))
        }
        _ => Err(Error::Precondition(
            "no closed form: use a cover ideal of a complete graph or of a tree complement, or a connected G_J".into(),
        )),
    }
}

fn lq_quotient_table(ideal: &MonomialIdeal) -> Result<BettiTable, Error> {
    let data = linear_quotient_data(ideal, ORDER_BUDGET)?;
    let table = if ideal.context().is_standard() {
        betti_from_linear_quotients(&data)
    } else {
        weighted_betti(&data, ideal.context().weights())?
    };
    Ok(table.to_quotient())
}

fn quotient_table(ctx: &Ctx, r: &source::Resolved, method: Method, cap: usize) -> Result<BettiTable, Error> {
    match method {
        Method::Lq => lq_quotient_table(&r.ideal),
        Method::Oracle => betti_table_oracle(&r.ideal, &ctx.oracle(cap)),
        Method::Formula => Ok(formula_table(&r.ideal, &r.origin)?.to_quotient()),
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Lq => "lq",
        Method::Oracle => "oracle",
        Method::Formula => "formula",
    }
}

fn shaped(t: &BettiTable, module: ModuleArg) -> BettiTable {
    match module {
        ModuleArg::Quotient => t.to_quotient(),
        ModuleArg::Ideal => t.to_ideal(),
    }
}

fn cmd_betti(ctx: &Ctx, a: &BettiArgs) -> Outcome {
    let r = a.source.resolve(ctx.seed)?;
    if let Some(entry) = &a.entry {
        let (i, j) = parse_entry(entry)?;
        // quotient index of the requested entry
        let qi = match a.module {
            ModuleArg::Quotient => i,
            ModuleArg::Ideal => i + 1,
        };
        let value_of = |m: Method| -> Result<u64, Error> {
            match m {
                Method::Oracle => hochster_entry(&r.ideal, qi, j, &ctx.oracle(a.cap)),
                other => Ok(quotient_table(ctx, &r, other, a.cap)?.get(qi, j)),
            }
        };
        let v = value_of(a.method)?;
        let checked = a.check.map(value_of).transpose()?;
        let value = json!({
            "i": i,
            "j": j,
            "module": match a.module { ModuleArg::Quotient => "quotient", ModuleArg::Ideal => "ideal" },
            "method": method_name(a.method),
            "field": ctx.field,
            "value": v,
            "check": checked,
        });
        ctx.emit(&value, || v.to_string());
        if let Some(c) = checked.filter(|&c| c != v) {
            return Err(Failure::Mismatch(format!("beta_{i},{j}: {} gives {v}, check gives {c}", method_name(a.method))));
        }
        return Ok(());
    }
    let table = shaped(&quotient_table(ctx, &r, a.method, a.cap)?, a.module);
    let other = match a.check {
        Some(m) => Some(shaped(&quotient_table(ctx, &r, m, a.cap)?, a.module)),
        None => None,
    };
    if a.csv && !ctx.json {
        print!("{}", table.to_csv());
    } else {
        let value = json!({
            "method": method_name(a.method),
            "field": ctx.field,
            "table": table,
            "regularity": table.regularity().ok(),
            "pdim": table.pdim().ok(),
            "check": other.as_ref().map(|o| o == &table),
        });
        ctx.emit(&value, || {
            let mut s = format!("{table}");
            if let (Ok(reg), Ok(pd)) = (table.regularity(), table.pdim()) {
                s.push_str(&format!("\nreg = {reg}, pdim = {pd}"));
            }
            if let Some(o) = &other {
                s.push_str(if o == &table { "\ncheck: identical" } else { "\ncheck: DIFFERENT" });
            }
            s
        });
    }
    if let Some(o) = other.filter(|o| o != &table) {
        return Err(Failure::Mismatch(format!("{} table {table} vs {o}", method_name(a.method))));
    }
    Ok(())
}

fn list(bs: &[ReesBinomial]) -> String {
    bs.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n  ")
}

fn cmd_rees(ctx: &Ctx, a: &ReesArgs) -> Outcome {
    let r = a.source.resolve(ctx.seed)?;
    let j = &r.ideal;
    let def = defining_ideal_generators(j, a.smax)?;
    let lt = linear_type(j, a.smax)?;
    let ci = match ci_report(j) {
        Ok(rep) => Some(rep),
        Err(Error::Precondition(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let raw = if a.raw { Some(k1_generators(j)?) } else { None };
    let value = json!({
        "ideal": j,
        "k1": def.k1,
        "k1_reduced": def.k1_reduced,
        "k1_all": raw,
        "coincidences": def.coincidences.iter().map(|(s, p)| json!({"s": s, "binomials": p})).collect::<Vec<_>>(),
        "linear_type": lt,
        "ci": ci,
    });
    ctx.emit(&value, || {
        let mut s = format!("ideal {j}\nK_1 ({} generators{}):\n  {}", def.k1.len(), if def.k1_reduced { ", reduced" } else { "" }, list(&def.k1));
        if let Some(raw) = &raw {
            s.push_str(&format!("\nall Taylor relations of T-degree 1 ({}):\n  {}", raw.len(), list(raw)));
        }
        for (deg, p) in &def.coincidences {
            s.push_str(&format!("\nP_{deg}: {} binomials", p.len()));
            if !p.is_empty() {
                s.push_str(&format!("\n  {}", list(p)));
            }
        }
        s.push_str(&format!(
            "\ngraph verdict: {:?}; search: {}",
            lt.graph_verdict,
            match &lt.search {
                coverideals::rees::SearchVerdict::NoCoincidence { s_max } => format!("no coincidence up to s = {s_max}"),
                coverideals::rees::SearchVerdict::Witness { s, binomial } => format!("witness at s = {s}: {binomial}"),
            }
        ));
        s.push_str(if lt.graph_verdict.predicts_linear_type() { "\nlinear type" } else { "\nnot of linear type" });
        if let Some(c) = &ci {
            s.push_str(&format!(
                "\nmu(K) = {}, expected height = {}, bidegree (1,1): {}, verdict: {:?}",
                c.mu_k, c.expected_height, c.all_bidegree_1_1, c.verdict
            ));
        }
        s
    });
    Ok(())
}

fn cmd_reg(ctx: &Ctx, a: &RegArgs) -> Outcome {
    let r = a.source.resolve(ctx.seed)?;
    let table = quotient_table(ctx, &r, a.method, DEFAULT_VERTEX_CAP)?;
    let reg = table.regularity()?;
    let pdim = table.pdim()?;
    // closed forms for powers of cover ideals of complete multipartite graphs
    let (mut f_reg, mut f_pdim) = (None, None);
    if let Origin::Cover { graph, power } = &r.origin {
        if let Some(parts) = graph.multipartite_parts().filter(|p| p.len() >= 2) {
            if r.ideal.context().is_standard() {
                let w: Vec<u32> = parts.iter().map(|&p| p as u32).collect();
                f_reg = Some(reg_multipartite(&w, *power as u64)?);
                if parts.iter().all(|&p| p == 1) {
                    f_pdim = Some(pdim_complete_power(parts.len() as u64, *power as u64));
                }
            } else if parts.iter().all(|&p| p == 1) {
                // J(K_n) with weights is the multipartite case with part sizes w
                let mut w = r.ideal.context().weights().to_vec();
                w.sort_unstable();
                f_reg = Some(reg_multipartite(&w, *power as u64)?);
                f_pdim = Some(pdim_complete_power(parts.len() as u64, *power as u64));
            }
        }
    }
    let value = json!({
        "method": method_name(a.method),
        "regularity": reg,
        "pdim": pdim,
        "formula_regularity": f_reg,
        "formula_pdim": f_pdim,
    });
    ctx.emit(&value, || {
        let mut s = format!("reg(S/I) = {reg}\npdim(S/I) = {pdim}");
        if let Some(f) = f_reg {
            s.push_str(&format!("\nformula reg = {f}"));
        }
        if let Some(f) = f_pdim {
            s.push_str(&format!("\nformula pdim = {f}"));
        }
        s
    });
    if f_reg.is_some_and(|f| f != reg) || f_pdim.is_some_and(|f| f != pdim as u64) {
        return Err(Failure::Mismatch("computed values differ from the closed form".into()));
    }
    Ok(())
}

fn cmd_hilbert(ctx: &Ctx, a: &HilbertArgs) -> Outcome {
    if let Some(n) = a.ci_series {
        let series = rees_hilbert_ci(n, a.dmax as usize, a.smax)?;
        let rows: Vec<Vec<String>> = (0..=a.smax)
            .map(|s| Ok(extract_power_series(&series, s)?.iter().map(ToString::to_string).collect()))
            .collect::<Result<_, Error>>()?;
        let value = json!({"n": n, "d_max": a.dmax, "s_max": a.smax, "rows": rows});
        ctx.emit(&value, || {
            rows.iter()
                .enumerate()
                .map(|(s, row)| format!("s={s}: {}", row.join(" ")))
                .collect::<Vec<_>>()
                .join("\n")
        });
        return Ok(());
    }
    let r = a.source.resolve(ctx.seed)?;
    let mode = match a.mode {
        ModeArg::Ideal => HilbertMode::Ideal,
        ModeArg::Quotient => HilbertMode::Quotient,
    };
    let values: Vec<String> = (0..=a.dmax).map(|d| r.ideal.hilbert_function(d, mode).to_string()).collect();
    let value = json!({"mode": mode, "values": values});
    ctx.emit(&value, || values.join(" "));
    Ok(())
}

fn cmd_formula(ctx: &Ctx, a: &FormulaArgs) -> Outcome {
    let id: FormulaId = a.id.parse()?;
    let p = FormulaParams {
        n: a.n,
        s: a.s,
        i: a.i,
        r: a.r,
        m: a.m,
        t: a.t,
        weights: a.weights.clone(),
    };
    let res = evaluate(id, &p)?;
    ctx.emit(&res, || res.to_string());
    Ok(())
}

fn cmd_verify(ctx: &Ctx, a: &VerifyArgs) -> Outcome {
    let ids: Vec<ExperimentId> = if a.experiment == "all" {
        ExperimentId::ALL.to_vec()
    } else {
        vec![a.experiment.parse()?]
    };
    let cfg = ExperimentConfig {
        field: ctx.field,
        jobs: ctx.jobs,
        seed: ctx.seed,
    };
    let reports = ids.iter().map(|e| e.run(&cfg)).collect::<Result<Vec<_>, Error>>()?;
    let failed = reports.iter().filter(|r| !r.passed).count();
    ctx.emit(&json!({"passed": failed == 0, "field": ctx.field, "seed": ctx.seed, "reports": reports}), || {
        let mut s = String::new();
        for r in &reports {
            s.push_str(&format!("{r}\n"));
            for n in &r.notes {
                s.push_str(&format!("    {n}\n"));
            }
            for m in &r.mismatches {
                s.push_str(&format!("    mismatch: {m}\n"));
            }
        }
        s.push_str(&format!("{} of {} passed", reports.len() - failed, reports.len()));
        s
    });
    if failed > 0 {
        return Err(Failure::Mismatch(format!("{failed} experiments failed")));
    }
    Ok(())
}
