use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use fuzzbis::automata::{
    check_forward_bisimulation, correspondence_check, greatest_forward_bisimulation, Direction, FuzzyAutomaton,
};
use fuzzbis::bisim::{
    check_bisimulation, check_relational, greatest_bisimulation, BisimError, BisimReport, SolverConfig, SolverMode,
    SolverOutcome, Violation,
};
use fuzzbis::hm::{
    default_pool, hm_check, invariance_check, program_zigzag_check, EnumerationBudget, Gating, GatingCondition,
    InvarianceError,
};
use fuzzbis::lattice::laws::run_law_suite;
use fuzzbis::lattice::{parse_rational, Lattice};
use fuzzbis::model::KripkeModel;
use fuzzbis::relation::{Domain, FuzzyRelation, RelationDoc};
use fuzzbis::syntax::{parse_formula, parse_program, FragmentSpec};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{
    AutomataArgs, BisimCheckArgs, CliError, Context, EvalArgs, GatingArg, HmArgs, InvarianceArgs, LawArgs, Mode,
    Outcome, PairArgs, SolverArgs, ZigzagArgs, EXIT_OK, EXIT_VIOLATED,
};

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::input(path, e))
}

fn load_model(ctx: &Context, path: &Path) -> Result<KripkeModel, CliError> {
    KripkeModel::from_json(&read(path)?, ctx.explicit.as_ref(), ctx.fallback.as_ref())
        .map_err(|e| CliError::input(path, e))
}

fn load_pair(ctx: &Context, a: &PairArgs) -> Result<(KripkeModel, KripkeModel), CliError> {
    let m = load_model(ctx, &a.left)?;
    let n = load_model(ctx, &a.right)?;
    if m.lattice() != n.lattice() {
        return Err(CliError::Usage(format!(
            "{} uses {} but {} uses {}",
            a.left.display(),
            m.lattice().name(),
            a.right.display(),
            n.lattice().name()
        )));
    }
    Ok((m, n))
}

fn load_automaton(ctx: &Context, path: &Path) -> Result<FuzzyAutomaton, CliError> {
    FuzzyAutomaton::from_json(&read(path)?, ctx.explicit.as_ref(), ctx.fallback.as_ref())
        .map_err(|e| CliError::input(path, e))
}

/// Reads a relation document, or the "relation" member of a report.
fn load_relation(path: &Path, l: &Lattice, rows: &Arc<Domain>, cols: &Arc<Domain>) -> Result<FuzzyRelation, CliError> {
    let value: Value = serde_json::from_str(&read(path)?).map_err(|e| CliError::input(path, e))?;
    let inner = match value.get("relation") {
        Some(r) => r.clone(),
        None => value,
    };
    let doc: RelationDoc = serde_json::from_value(inner).map_err(|e| CliError::input(path, e))?;
    FuzzyRelation::from_doc(l, &doc, rows, cols).map_err(|e| CliError::input(path, e))
}

fn solver_config(a: &SolverArgs) -> Result<SolverConfig, CliError> {
    let tolerance = parse_rational(&a.tolerance)
        .filter(|t| *t >= num_rational::BigRational::from_integer(0.into()))
        .ok_or_else(|| CliError::Usage(format!("--tolerance: `{}` is not a non-negative rational", a.tolerance)))?;
    Ok(SolverConfig {
        tolerance,
        max_iterations: a.max_iterations,
        mode: a.mode.map(|m| match m {
            Mode::Exact => SolverMode::Exact,
            Mode::Approximate => SolverMode::Approximate,
        }),
    })
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn solve(m: &KripkeModel, n: &KripkeModel, cfg: &SolverConfig) -> Result<SolverOutcome, CliError> {
    let out = greatest_bisimulation(m, n, cfg).map_err(usage)?;
    if !out.converged {
        return Err(CliError::NoConvergence(format!(
            "the greatest bisimulation did not converge within {} iterations (last change {})",
            out.iterations,
            out.trace.last().map(|(_, d)| d.to_string()).unwrap_or_default()
        )));
    }
    Ok(out)
}

fn relation_doc(ctx: &Context, z: &FuzzyRelation) -> RelationDoc {
    z.to_doc_with(|v| ctx.value(z.lattice(), v))
}

/// Every cell, row-major, as `row<TAB>col<TAB>value` lines.
fn relation_text(ctx: &Context, z: &FuzzyRelation) -> String {
    let mut s = String::new();
    for i in 0..z.rows().len() {
        for j in 0..z.cols().len() {
            let _ = writeln!(s, "{}\t{}\t{}", z.rows().name(i), z.cols().name(j), ctx.value(z.lattice(), z.get(i, j)));
        }
    }
    s
}

fn relation_csv(ctx: &Context, z: &FuzzyRelation) -> String {
    let mut s = String::from("row,col,value\n");
    for i in 0..z.rows().len() {
        for j in 0..z.cols().len() {
            let _ = writeln!(
                s,
                "{},{},{}",
                csv_field(z.rows().name(i)),
                csv_field(z.cols().name(j)),
                ctx.value(z.lattice(), z.get(i, j))
            );
        }
    }
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Serialize)]
struct ViolationJson {
    condition: &'static str,
    #[serde(skip_serializing_if = "String::is_empty")]
    label: String,
    states: Vec<String>,
    lhs: String,
    rhs: String,
}

fn violations_json(ctx: &Context, l: &Lattice, vs: &[Violation]) -> Vec<ViolationJson> {
    vs.iter()
        .map(|v| ViolationJson {
            condition: v.condition,
            label: v.label.clone(),
            states: v.states.clone(),
            lhs: ctx.value(l, &v.lhs),
            rhs: ctx.value(l, &v.rhs),
        })
        .collect()
}

fn bisim_report_json(ctx: &Context, l: &Lattice, r: &BisimReport) -> Value {
    json!({ "holds": r.holds, "violations": violations_json(ctx, l, &r.violations) })
}

fn describe(ctx: &Context, l: &Lattice, v: &Violation) -> String {
    let label = if v.label.is_empty() { String::new() } else { format!(" [{}]", v.label) };
    format!(
        "{}{} at ({}): {} ≰ {}",
        v.condition,
        label,
        v.states.join(", "),
        ctx.value(l, &v.lhs),
        ctx.value(l, &v.rhs)
    )
}

fn solver_json(out: &SolverOutcome) -> Value {
    json!({
        "iterations": out.iterations,
        "converged": out.converged,
        "exact": out.exact,
        "certified": out.certified,
        "error_bound": out.error_bound.to_string(),
    })
}

fn solver_header(out: &SolverOutcome) -> String {
    format!(
        "# iterations: {}, exact: {}, certified: {}, error bound: {}\n",
        out.iterations, out.exact, out.certified, out.error_bound
    )
}

pub(crate) fn eval(ctx: &Context, a: &EvalArgs) -> Result<Outcome, CliError> {
    let m = load_model(ctx, &a.model)?;
    let l = m.lattice().clone();
    let at = a.at.as_deref().map(|s| m.domain().index_of(s).map_err(usage)).transpose()?;
    if let Some(text) = &a.formula {
        let phi = parse_formula(text, &l).map_err(|e| CliError::Usage(format!("--formula: {e}")))?;
        let values = m.eval_formula(&phi).map_err(usage)?;
        let states: Vec<usize> = match at {
            Some(i) => vec![i],
            None => (0..m.len()).collect(),
        };
        let mut out = String::new();
        let mut csv = String::from("state,value\n");
        let mut map = serde_json::Map::new();
        for &i in &states {
            let (name, v) = (m.domain().name(i), ctx.value(&l, &values[i]));
            if at.is_some() {
                let _ = writeln!(out, "{v}");
            } else {
                let _ = writeln!(out, "{name}\t{v}");
            }
            let _ = writeln!(csv, "{},{}", csv_field(name), v);
            map.insert(name.to_string(), Value::String(v));
        }
        let report = json!({
            "command": "eval",
            "lattice": l.name(),
            "formula": phi.to_text(&l),
            "values": map,
        });
        return Ok(Outcome { exit: EXIT_OK, text: out, report, csv: Some(csv) });
    }
    let text = a.program.as_deref().expect("clap requires a formula or a program");
    let alpha = parse_program(text, &l).map_err(|e| CliError::Usage(format!("--program: {e}")))?;
    let rel = m.eval_program(&alpha).map_err(usage)?;
    let rel = match at {
        Some(i) => {
            let row = Domain::new([m.domain().name(i).to_string()]).map_err(usage)?;
            FuzzyRelation::from_fn(&l, &row, m.domain(), |_, j| Ok(rel.get(i, j).clone())).map_err(usage)?
        }
        None => rel,
    };
    let report = json!({
        "command": "eval",
        "lattice": l.name(),
        "program": alpha.display(&l).to_string(),
        "relation": relation_doc(ctx, &rel),
    });
    Ok(Outcome { exit: EXIT_OK, text: relation_text(ctx, &rel), report, csv: Some(relation_csv(ctx, &rel)) })
}

pub(crate) fn bisim_check(ctx: &Context, a: &BisimCheckArgs) -> Result<Outcome, CliError> {
    let m = load_model(ctx, &a.left)?;
    let n = load_model(ctx, &a.right)?;
    let l = m.lattice().clone();
    let z = load_relation(&a.relation, &l, m.domain(), n.domain())?;
    let defining = check_bisimulation(&m, &n, &z).map_err(usage)?;
    let relational = check_relational(&m, &n, &z).map_err(usage)?;
    let mut text = String::new();
    if defining.holds {
        text.push_str("bisimulation: yes\n");
    } else {
        let _ = writeln!(text, "bisimulation: no ({} violations)", defining.violations.len());
        for v in &defining.violations {
            let _ = writeln!(text, "  {}", describe(ctx, &l, v));
        }
    }
    let _ = writeln!(text, "relational conditions: {}", if relational.holds { "yes" } else { "no" });
    for v in &relational.violations {
        let _ = writeln!(text, "  {}", describe(ctx, &l, v));
    }
    let report = json!({
        "command": "bisim-check",
        "lattice": l.name(),
        "holds": defining.holds,
        "defining": bisim_report_json(ctx, &l, &defining),
        "relational": bisim_report_json(ctx, &l, &relational),
    });
    let exit = if defining.holds { EXIT_OK } else { EXIT_VIOLATED };
    Ok(Outcome { exit, text, report, csv: None })
}

pub(crate) fn bisim_greatest(ctx: &Context, a: &PairArgs) -> Result<Outcome, CliError> {
    let (m, n) = load_pair(ctx, a)?;
    let cfg = solver_config(&a.solver)?;
    let out = solve(&m, &n, &cfg)?;
    let l = m.lattice();
    let mut text = format!("# lattice: {}\n", l.name());
    text.push_str(&solver_header(&out));
    text.push_str(&relation_text(ctx, &out.relation));
    let report = json!({
        "command": "bisim-greatest",
        "lattice": l.name(),
        "solver": solver_json(&out),
        "relation": relation_doc(ctx, &out.relation),
    });
    Ok(Outcome { exit: EXIT_OK, text, report, csv: Some(relation_csv(ctx, &out.relation)) })
}

pub(crate) fn hm(ctx: &Context, a: &HmArgs) -> Result<Outcome, CliError> {
    let (m, n) = load_pair(ctx, &a.pair)?;
    let cfg = solver_config(&a.pair.solver)?;
    let l = m.lattice().clone();
    let budget = EnumerationBudget {
        max_depth: a.depth,
        constant_pool: default_pool(&m, &n, a.pool_rounds),
        max_formulas: Some(a.max_formulas),
    };
    let report = hm_check(&m, &n, &budget, &cfg).map_err(|e| match e {
        fuzzbis::hm::HmError::Bisim(b) => usage(b),
        other => usage(other),
    })?;
    if !report.solver.converged {
        return Err(CliError::NoConvergence(format!(
            "the greatest bisimulation did not converge within {} iterations",
            report.solver.iterations
        )));
    }
    let last = report.distance.last();
    let mut text = format!(
        "# lattice: {}, depth: {}, constants: {}, distinct formulas: {}{}\n",
        l.name(),
        last.depth,
        budget.constant_pool.len(),
        last.distinct_formulas,
        if report.distance.truncated { " (formula budget exhausted)" } else { "" }
    );
    text.push_str(&solver_header(&report.solver));
    let _ = writeln!(
        text,
        "# solver ≤ distance at every depth: {}; distance equals solver: {}",
        if report.sound() { "yes" } else { "no" },
        if report.closed { "yes" } else { "no" }
    );
    let mut csv = String::from("left,right,distance,solver,witness\n");
    let mut pairs = Vec::new();
    for p in &report.pairs {
        let witness = p.witness.as_ref().map(|f| f.to_text(&l));
        let (d, s) = (ctx.value(&l, &p.distance), ctx.value(&l, &p.solver));
        let _ = writeln!(
            text,
            "{}\t{}\tdistance {}\tsolver {}\twitness {}",
            p.left,
            p.right,
            d,
            s,
            witness.as_deref().unwrap_or("-")
        );
        let _ = writeln!(
            csv,
            "{},{},{},{},{}",
            csv_field(&p.left),
            csv_field(&p.right),
            d,
            s,
            csv_field(witness.as_deref().unwrap_or(""))
        );
        pairs.push(json!({
            "left": p.left, "right": p.right, "distance": d, "solver": s,
            "witness": witness, "gap": p.gap.to_string(),
        }));
    }
    let levels: Vec<Value> = report
        .distance
        .levels
        .iter()
        .map(|lv| {
            json!({
                "depth": lv.depth,
                "distinct_formulas": lv.distinct_formulas,
                "sound": !report.unsound_depths.contains(&lv.depth),
                "distance": relation_doc(ctx, &lv.distance),
            })
        })
        .collect();
    let json = json!({
        "command": "hm",
        "lattice": l.name(),
        "solver": solver_json(&report.solver),
        "sound": report.sound(),
        "closed": report.closed,
        "unsound_depths": report.unsound_depths,
        "truncated": report.distance.truncated,
        "levels": levels,
        "pairs": pairs,
    });
    let exit = if report.sound() && report.closed { EXIT_OK } else { EXIT_VIOLATED };
    Ok(Outcome { exit, text, report: json, csv: Some(csv) })
}

fn gating(g: GatingArg) -> Gating {
    match g {
        GatingArg::Enforce => Gating::Enforce,
        GatingArg::Laws => Gating::Laws,
        GatingArg::Override => Gating::Override,
    }
}

fn fragment(text: &str) -> Result<FragmentSpec, CliError> {
    FragmentSpec::parse(text).map_err(|e| CliError::Usage(format!("--fragment: {e}")))
}

/// The given relation, or the greatest bisimulation.
fn relation_or_greatest(
    m: &KripkeModel,
    n: &KripkeModel,
    path: Option<&Path>,
    solver: &SolverArgs,
) -> Result<(FuzzyRelation, Option<SolverOutcome>), CliError> {
    match path {
        Some(p) => Ok((load_relation(p, m.lattice(), m.domain(), n.domain())?, None)),
        None => {
            let out = solve(m, n, &solver_config(solver)?)?;
            Ok((out.relation.clone(), Some(out)))
        }
    }
}

fn invariance_error(e: InvarianceError) -> CliError {
    match e {
        InvarianceError::Gating(_) => CliError::Refused(e.to_string()),
        other => usage(other),
    }
}

fn conditions_text(text: &mut String, conds: &[GatingCondition], overridden: bool) {
    for c in conds {
        let _ = writeln!(
            text,
            "# condition {}: {}{}",
            c.name,
            if c.satisfied { "satisfied" } else { "fails" },
            if !c.satisfied && overridden { " (overridden)" } else { "" }
        );
    }
}

pub(crate) fn invariance(ctx: &Context, a: &InvarianceArgs) -> Result<Outcome, CliError> {
    let (m, n) = load_pair(ctx, &a.pair)?;
    let l = m.lattice().clone();
    let phi = parse_formula(&a.formula, &l).map_err(|e| CliError::Usage(format!("--formula: {e}")))?;
    let frag = fragment(&a.fragment)?;
    let (z, solver) = relation_or_greatest(&m, &n, a.relation.as_deref(), &a.pair.solver)?;
    let report = invariance_check(&m, &n, &z, &phi, &frag, gating(a.gating)).map_err(invariance_error)?;
    let mut text = String::new();
    conditions_text(&mut text, &report.conditions, report.overridden);
    if report.holds {
        let _ = writeln!(text, "invariance holds: Z(x, x') ≤ φ(x) ⟺ φ(x') for all {} pairs", m.len() * n.len());
    } else {
        let _ = writeln!(text, "invariance fails at {} pairs", report.violations.len());
    }
    let mut violations = Vec::new();
    for v in &report.violations {
        let _ = writeln!(
            text,
            "  ({}, {}): Z = {} > {} = φ({}) ⟺ φ({}), with φ({}) = {} and φ({}) = {}",
            v.left,
            v.right,
            ctx.value(&l, &v.relation),
            ctx.value(&l, &v.agreement),
            v.left,
            v.right,
            v.left,
            ctx.value(&l, &v.left_value),
            v.right,
            ctx.value(&l, &v.right_value)
        );
        let mut trace = Vec::new();
        for step in &v.trace {
            let f = step.formula.to_text(&l);
            let (lv, rv) = (ctx.value(&l, &step.left), ctx.value(&l, &step.right));
            let _ = writeln!(text, "    {f}: {lv} vs {rv}");
            trace.push(json!({ "formula": f, "left": lv, "right": rv }));
        }
        violations.push(json!({
            "left": v.left, "right": v.right,
            "relation": ctx.value(&l, &v.relation),
            "agreement": ctx.value(&l, &v.agreement),
            "left_value": ctx.value(&l, &v.left_value),
            "right_value": ctx.value(&l, &v.right_value),
            "trace": trace,
        }));
    }
    let json = json!({
        "command": "invariance",
        "lattice": l.name(),
        "formula": phi.to_text(&l),
        "fragment": frag.to_string(),
        "holds": report.holds,
        "conditions": report.conditions,
        "overridden": report.overridden,
        "solver": solver.as_ref().map(solver_json),
        "violations": violations,
    });
    let exit = if report.holds { EXIT_OK } else { EXIT_VIOLATED };
    Ok(Outcome { exit, text, report: json, csv: None })
}

pub(crate) fn zigzag(ctx: &Context, a: &ZigzagArgs) -> Result<Outcome, CliError> {
    let (m, n) = load_pair(ctx, &a.pair)?;
    let l = m.lattice().clone();
    let alpha = parse_program(&a.program, &l).map_err(|e| CliError::Usage(format!("--program: {e}")))?;
    let frag = fragment(&a.fragment)?;
    let (z, solver) = relation_or_greatest(&m, &n, a.relation.as_deref(), &a.pair.solver)?;
    let report = program_zigzag_check(&m, &n, &z, &alpha, &frag, gating(a.gating)).map_err(invariance_error)?;
    let mut text = String::new();
    conditions_text(&mut text, &report.conditions, report.overridden);
    let _ = writeln!(text, "back and forth for {}: {}", alpha.display(&l), if report.holds { "yes" } else { "no" });
    for v in &report.violations {
        let _ = writeln!(text, "  {}", describe(ctx, &l, v));
    }
    let json = json!({
        "command": "zigzag",
        "lattice": l.name(),
        "program": alpha.display(&l).to_string(),
        "fragment": frag.to_string(),
        "holds": report.holds,
        "conditions": report.conditions,
        "overridden": report.overridden,
        "solver": solver.as_ref().map(solver_json),
        "violations": violations_json(ctx, &l, &report.violations),
    });
    let exit = if report.holds { EXIT_OK } else { EXIT_VIOLATED };
    Ok(Outcome { exit, text, report: json, csv: None })
}

fn load_automata(ctx: &Context, a: &PairArgs) -> Result<(FuzzyAutomaton, FuzzyAutomaton), CliError> {
    let x = load_automaton(ctx, &a.left)?;
    let y = load_automaton(ctx, &a.right)?;
    Ok((x, y))
}

fn automata_error(e: fuzzbis::automata::AutomatonError) -> CliError {
    match e {
        fuzzbis::automata::AutomatonError::Bisim(b @ BisimError::ExactUnsupported(_)) => usage(b),
        other => usage(other),
    }
}

pub(crate) fn automata_bisim(ctx: &Context, a: &AutomataArgs) -> Result<Outcome, CliError> {
    let (x, y) = load_automata(ctx, &a.pair)?;
    let l = x.lattice().clone();
    if let Some(path) = &a.relation {
        let z = load_relation(path, &l, x.states(), y.states())?;
        let report = check_forward_bisimulation(&x, &y, &z).map_err(automata_error)?;
        let mut text = format!("forward bisimulation: {}\n", if report.holds { "yes" } else { "no" });
        for v in &report.violations {
            let _ = writeln!(text, "  {}", describe(ctx, &l, v));
        }
        let json = json!({
            "command": "automata-bisim",
            "lattice": l.name(),
            "holds": report.holds,
            "check": bisim_report_json(ctx, &l, &report),
        });
        let exit = if report.holds { EXIT_OK } else { EXIT_VIOLATED };
        return Ok(Outcome { exit, text, report: json, csv: None });
    }
    let cfg = solver_config(&a.pair.solver)?;
    let out = greatest_forward_bisimulation(&x, &y, &cfg).map_err(automata_error)?;
    if !out.solver.converged {
        return Err(CliError::NoConvergence(format!(
            "the forward bisimulation iteration did not converge within {} iterations",
            out.solver.iterations
        )));
    }
    let mut text = format!("# lattice: {}\n", l.name());
    text.push_str(&solver_header(&out.solver));
    if out.exists() {
        text.push_str("# greatest forward bisimulation\n");
        text.push_str(&relation_text(ctx, out.relation()));
    } else {
        text.push_str("no forward bisimulation with these initial sets\n");
        for v in &out.initial.violations {
            let _ = writeln!(text, "  {}", describe(ctx, &l, v));
        }
    }
    let json = json!({
        "command": "automata-bisim",
        "lattice": l.name(),
        "exists": out.exists(),
        "solver": solver_json(&out.solver),
        "initial": bisim_report_json(ctx, &l, &out.initial),
        "relation": out.exists().then(|| relation_doc(ctx, out.relation())),
    });
    let exit = if out.exists() { EXIT_OK } else { EXIT_VIOLATED };
    let csv = out.exists().then(|| relation_csv(ctx, out.relation()));
    Ok(Outcome { exit, text, report: json, csv })
}

fn direction_text(d: Direction) -> &'static str {
    match d {
        Direction::Confirmed => "confirmed",
        Direction::Vacuous => "vacuous (premise fails)",
        Direction::Violated => "VIOLATED",
        Direction::NotCovered => "not covered (lattice is not linear)",
    }
}

pub(crate) fn automata_corresp(ctx: &Context, a: &AutomataArgs) -> Result<Outcome, CliError> {
    let (x, y) = load_automata(ctx, &a.pair)?;
    let l = x.lattice().clone();
    let z = match &a.relation {
        Some(path) => load_relation(path, &l, x.states(), y.states())?,
        None => {
            let out = greatest_forward_bisimulation(&x, &y, &solver_config(&a.pair.solver)?).map_err(automata_error)?;
            if !out.solver.converged {
                return Err(CliError::NoConvergence("the forward bisimulation iteration did not converge".into()));
            }
            out.solver.relation
        }
    };
    let r = correspondence_check(&x, &y, &z).map_err(automata_error)?;
    let mut text = String::new();
    let _ = writeln!(text, "# Z as forward bisimulation: {}", if r.automata.holds { "yes" } else { "no" });
    let _ = writeln!(text, "# Z2 as Kripke bisimulation: {}", if r.kripke.holds { "yes" } else { "no" });
    let _ = writeln!(text, "Kripke => automata: {}", direction_text(r.kripke_to_automata));
    let _ = writeln!(text, "automata => Kripke: {}", direction_text(r.automata_to_kripke));
    for v in r.automata.violations.iter().chain(&r.kripke.violations) {
        let _ = writeln!(text, "  {}", describe(ctx, &l, v));
    }
    let json = json!({
        "command": "automata-corresp",
        "lattice": l.name(),
        "holds": r.holds(),
        "kripke_to_automata": r.kripke_to_automata,
        "automata_to_kripke": r.automata_to_kripke,
        "automata": bisim_report_json(ctx, &l, &r.automata),
        "kripke": bisim_report_json(ctx, &l, &r.kripke),
        "initial_states": [r.left.initial_state, r.right.initial_state],
        "final_states": [r.left.final_state, r.right.final_state],
        "extended_relation": relation_doc(ctx, &r.extended),
    });
    let exit = if r.holds() { EXIT_OK } else { EXIT_VIOLATED };
    Ok(Outcome { exit, text, report: json, csv: None })
}

pub(crate) fn lattice_laws(ctx: &Context, a: &LawArgs) -> Result<Outcome, CliError> {
    let l = ctx
        .explicit
        .clone()
        .or_else(|| ctx.fallback.clone())
        .ok_or_else(|| CliError::Usage("lattice-laws needs --lattice (or FUZZBIS_LATTICE)".into()))?;
    let report = run_law_suite(&l, a.samples, a.seed).map_err(usage)?;
    let mut text = format!(
        "# lattice: {}, {} samples{}, heyting: {}, linear: {}\n",
        l.name(),
        report.samples,
        if report.exhaustive { " (exhaustive)" } else { "" },
        l.is_heyting(),
        l.is_linear()
    );
    let mut csv = String::from("law,checked,failures\n");
    for o in &report.laws {
        let status = if o.failures == 0 { "PASS" } else { "FAIL" };
        let _ = writeln!(text, "{status} {}: {}", o.law, o.statement);
        if let Some(c) = &o.counterexample {
            let _ = writeln!(
                text,
                "  {} failures; first at x={}, x'={}, y={}, y'={}, z={}",
                o.failures, c[0], c[1], c[2], c[3], c[4]
            );
        }
        let _ = writeln!(csv, "{},{},{}", o.law, o.checked, o.failures);
    }
    let exit = if report.all_hold() { EXIT_OK } else { EXIT_VIOLATED };
    let json = json!({
        "command": "lattice-laws",
        "lattice": report.lattice,
        "holds": report.all_hold(),
        "report": report,
    });
    Ok(Outcome { exit, text, report: json, csv: Some(csv) })
}
