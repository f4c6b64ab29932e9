use std::io::Write;

use anyhow::{anyhow, bail, Context, Result};
use clap::{ArgAction, Args};
use mixable::construct::{self, Certificate, ConstructOptions, ConstructionReport};
use mixable::document;
use mixable::engine::{self, Mode, VerifyOptions};
use mixable::rep::{self, MatrixRep};
use mixable::search::{self, SearchConfig};
use mixable::{structure, MixingSequence, Real};
use serde_json::{json, Value};

use crate::input::{load_group, load_json, parse_range, Input};
use crate::{Cli, Command, Global};

pub const DEFAULT_SEED: u64 = mixable::engine::sample::DEFAULT_SEED;

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// sym | sym-fast | sym-adjacent | sym-action | alt | alt-full | alt-action |
    /// cyclic2 | two-group | dihedral | coxeter-b | coxeter-d | coxeter-h3 | psl2
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: Option<u64>,
    /// exponent for cyclic2 (order 2^d)
    #[arg(long)]
    pub d: Option<u32>,
    /// field exponent for psl2 (q = 2^e)
    #[arg(long)]
    pub e: Option<u32>,
    /// sym: fast | adjacent | action; alt: full | action
    #[arg(long)]
    pub method: Option<String>,
    /// group file or shorthand, for two-group
    #[arg(long)]
    pub group: Option<String>,
    /// write the sequence document here
    #[arg(short, long)]
    pub output: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub sequence: String,
    /// group file or shorthand, when the document has no group
    #[arg(long)]
    pub group: Option<String>,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub group: String,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long = "max-len", default_value_t = 8)]
    pub max_len: usize,
    /// comma-separated rationals in (0, 1)
    #[arg(long = "p-grid", default_value = "1/2")]
    pub p_grid: String,
    /// restrict the first step to conjugacy-class representatives
    #[arg(long = "first-step-classes", action = ArgAction::Set, default_value_t = true)]
    pub first_step_classes: bool,
    /// certify that no sequence exists instead of searching for the shortest
    #[arg(long)]
    pub certify: bool,
    #[arg(long = "max-order", default_value_t = search::DEFAULT_MAX_ORDER)]
    pub max_order: u128,
}

#[derive(Args, Debug)]
pub struct RepMixArgs {
    /// representation file: {"group", "dim", "matrices": [{"g", "m"}]}
    #[arg(long, conflicts_with = "builtin")]
    pub rep: Option<String>,
    /// dihedral:N (all nontrivial irreps), standard:N or sign:N (for S_N)
    #[arg(long)]
    pub builtin: Option<String>,
    /// element (JSON) to use as the eigenvalue -1 witness
    #[arg(long)]
    pub witness: Option<String>,
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[arg(long)]
    pub sequence: String,
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// sym | sym-adjacent | sym-action | alt | alt-action | dihedral | cyclic2 |
    /// psl2 | coxeter-b | coxeter-d
    #[arg(long)]
    pub family: String,
    /// a..b, inclusive
    #[arg(long)]
    pub range: String,
}

#[derive(Args, Debug)]
pub struct MatrixStatusArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub d: u64,
}

struct Outcome {
    result: Value,
    ok: bool,
    inputs: Vec<Input>,
}

impl Outcome {
    fn new(result: Value, ok: bool) -> Self {
        Outcome { result, ok, inputs: Vec::new() }
    }

    fn with(mut self, input: Input) -> Self {
        self.inputs.push(input);
        self
    }
}

pub fn run(cli: &Cli, argv: &[String]) -> u8 {
    if let Some(t) = cli.global.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    let outcome = dispatch(cli);
    let (report, code) = match outcome {
        Ok(o) => {
            let code = if o.ok { 0 } else { 1 };
            let inputs: Vec<Value> = o.inputs.iter().map(Input::echo).collect();
            (json!({ "command": argv, "inputs": inputs, "result": o.result, "status": code }), code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            (json!({ "command": argv, "inputs": [], "error": format!("{e:#}"), "status": 2 }), 2)
        }
    };
    let text =
        if cli.global.compact { report.to_string() } else { serde_json::to_string_pretty(&report).expect("json") };
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    code
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Construct(a) => cmd_construct(g, a),
        Command::Verify(a) => cmd_verify(g, a),
        Command::Analyze(a) => cmd_analyze(g, a),
        Command::Search(a) => cmd_search(g, a),
        Command::RepMix(a) => cmd_rep_mix(g, a),
        Command::Sample(a) => cmd_sample(g, a),
        Command::Table(a) => cmd_table(g, a),
        Command::MatrixStatus(a) => {
            let s = mixable::field::matrix_family_status(a.q, a.d)?;
            Ok(Outcome::new(serde_json::to_value(s)?, true))
        }
    }
}

fn verify_options(g: &Global) -> Result<VerifyOptions> {
    let mode = g.mode.as_deref().map(str::parse::<Mode>).transpose()?;
    Ok(VerifyOptions { mode, tol: Real::parse(&g.tol)?, enum_bound: g.enum_bound })
}

fn construct_options(g: &Global) -> Result<ConstructOptions> {
    let verify = verify_options(g)?;
    let fold_limit = construct::DEFAULT_FOLD_LIMIT.min(g.enum_bound);
    Ok(ConstructOptions { verify, fold_limit })
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: &str) -> Result<T> {
    v.ok_or_else(|| anyhow!("--family {family} needs --{flag}"))
}

fn build(family: &str, a: &ConstructArgs, opts: &ConstructOptions) -> Result<(ConstructionReport, Option<Input>)> {
    let n = || need(a.n, "n", family);
    let method = a.method.as_deref();
    let r = match (family, method) {
        ("sym", None | Some("fast")) | ("sym-fast", _) => construct::construct_sym_fast(n()? as usize, opts)?,
        ("sym", Some("adjacent")) | ("sym-adjacent", _) => construct::construct_sym_adjacent(n()? as usize, opts)?,
        ("sym", Some("action")) | ("sym-action", _) => construct::construct_sym_action(n()? as usize, opts)?,
        ("alt", None | Some("full")) | ("alt-full", _) => construct::construct_alt_full(n()? as usize, opts)?,
        ("alt", Some("action")) | ("alt-action", _) => construct::construct_alt_action(n()? as usize, opts)?,
        ("cyclic2", _) => construct::construct_cyclic_2group(need(a.d.or(a.n.map(|x| x as u32)), "d", family)?, opts)?,
        ("two-group", _) => {
            let arg = a.group.as_deref().ok_or_else(|| anyhow!("--family two-group needs --group"))?;
            let (group, input) = load_group(arg)?;
            return Ok((construct::construct_2group_chain(&group, opts)?, Some(input)));
        }
        ("dihedral", _) => construct::construct_dihedral(n()?, opts)?,
        ("coxeter-b", _) => construct::construct_signed_perm(n()? as usize, false, opts)?,
        ("coxeter-d", _) => construct::construct_signed_perm(n()? as usize, true, opts)?,
        ("coxeter-h3", _) => {
            let a5 = construct::construct_alt_full(5, opts)?.into_sequence();
            let z2 = construct::construct_cyclic_2group(1, opts)?.into_sequence();
            construct::compose_direct_product(&[a5, z2], opts)?
        }
        ("psl2", _) => construct::construct_psl2_char2(need(a.e.or(a.n.map(|x| x as u32)), "e", family)?, opts)?,
        (f, Some(m)) if matches!(f, "sym" | "alt") => bail!("unknown method {m} for {f}"),
        (f, _) => bail!("unknown family {f}"),
    };
    Ok((r, None))
}

fn cmd_construct(g: &Global, a: &ConstructArgs) -> Result<Outcome> {
    let opts = construct_options(g)?;
    let (report, input) = build(&a.family, a, &opts)?;
    let doc = document::construction_to_json(&report);
    let ok = report.certificate.holds();
    let result = match &a.output {
        Some(path) => {
            let text = serde_json::to_string_pretty(&doc)? + "\n";
            std::fs::write(path, text).with_context(|| format!("cannot write {path}"))?;
            json!({ "output": path, "report": doc["report"].clone() })
        }
        None => doc,
    };
    let mut out = Outcome::new(result, ok);
    if let Some(i) = input {
        out = out.with(i);
    }
    Ok(out)
}

fn load_sequence(seq_arg: &str, group_arg: Option<&str>) -> Result<(MixingSequence, Vec<Input>)> {
    let mut inputs = Vec::new();
    let group = match group_arg {
        Some(arg) => {
            let (g, i) = load_group(arg)?;
            inputs.push(i);
            Some(g)
        }
        None => None,
    };
    let doc = load_json(seq_arg)?;
    let seq = document::sequence_from_json(&doc.value, group.as_ref())?;
    inputs.insert(0, doc);
    Ok((seq, inputs))
}

fn cmd_verify(g: &Global, a: &VerifyArgs) -> Result<Outcome> {
    let (seq, inputs) = load_sequence(&a.sequence, a.group.as_deref())?;
    let report = engine::verify(&seq, &verify_options(g)?)?;
    let mut out = Outcome::new(document::report_to_json(&report), report.uniform);
    out.inputs = inputs;
    Ok(out)
}

fn cmd_analyze(g: &Global, a: &AnalyzeArgs) -> Result<Outcome> {
    let (group, input) = load_group(&a.group)?;
    let report = structure::analyze(&group, g.enum_bound)?;
    Ok(Outcome::new(serde_json::to_value(report)?, true).with(input))
}

fn cmd_search(g: &Global, a: &SearchArgs) -> Result<Outcome> {
    let (group, input) = load_group(&a.group)?;
    let mut config = SearchConfig::new(SearchConfig::parse_grid(&a.p_grid)?, a.max_len)?;
    config.first_step_classes = a.first_step_classes;
    config.threads = g.threads;
    config.max_order = a.max_order.min(g.enum_bound);
    if a.certify {
        let c = search::certify_no_mixing(&group, &config)?;
        let ok = c.exhausted;
        return Ok(Outcome::new(serde_json::to_value(c)?, ok).with(input));
    }
    let r = search::search_min_length(&group, &config)?;
    let ok = r.outcome == search::Outcome::Found;
    Ok(Outcome::new(r.to_json(&group), ok).with(input))
}

fn builtin_reps(spec: &str) -> Result<Vec<MatrixRep>> {
    let (kind, n) = spec.split_once(':').ok_or_else(|| anyhow!("builtin must look like dihedral:5"))?;
    let n: u64 = n.parse().with_context(|| format!("bad size in {spec}"))?;
    Ok(match kind {
        "dihedral" => rep::dihedral_irreps(n)?,
        "standard" => vec![rep::standard_rep_symmetric(n as usize)?],
        "sign" => vec![rep::sign_rep_symmetric(n as usize)?],
        other => bail!("unknown builtin representation {other}"),
    })
}

fn cmd_rep_mix(g: &Global, a: &RepMixArgs) -> Result<Outcome> {
    let mut inputs = Vec::new();
    let reps = match (&a.rep, &a.builtin) {
        (Some(path), _) => {
            let input = load_json(path)?;
            let r = MatrixRep::from_json(&input.value, g.enum_bound)?;
            inputs.push(input);
            vec![r]
        }
        (None, Some(b)) => builtin_reps(b)?,
        (None, None) => bail!("rep-mix needs --rep or --builtin"),
    };
    let mut results = Vec::new();
    let mut all_steps = Vec::new();
    let mut ok = true;
    for r in &reps {
        let seq = match &a.witness {
            Some(w) => {
                let el = r.group().parse_element(&document::parse(w)?)?;
                rep::mix_rep_with(r, &el)
            }
            None => rep::mix_rep(r),
        };
        match seq {
            Ok(s) => {
                ok &= s.mixed();
                all_steps.extend(s.steps.iter().cloned());
                let mut v = s.to_json(r.group());
                v["rep"] = json!(r.label);
                v["dim"] = json!(r.dim());
                results.push(v);
            }
            Err(e) => {
                ok = false;
                results.push(json!({ "rep": r.label, "dim": r.dim(), "error": e.to_string() }));
            }
        }
    }
    let mut result = json!({ "group": reps[0].group().name(), "reps": results });
    // all nontrivial irreducibles of a dihedral group: the concatenation mixes the group
    if ok && a.rep.is_none() && a.builtin.as_deref().is_some_and(|b| b.starts_with("dihedral")) {
        let seq = MixingSequence::new(reps[0].group().clone(), all_steps);
        let report = engine::verify(&seq, &VerifyOptions { mode: Some(Mode::Numeric), ..verify_options(g)? })?;
        ok &= report.uniform;
        result["group_check"] = json!({ "steps": document::steps_to_json(&seq.group, &seq.steps), "report": report });
    }
    let mut out = Outcome::new(result, ok);
    out.inputs = inputs;
    Ok(out)
}

fn cmd_sample(g: &Global, a: &SampleArgs) -> Result<Outcome> {
    let (seq, inputs) = load_sequence(&a.sequence, a.group.as_deref())?;
    let r = engine::sample(&seq, a.trials, g.seed, g.enum_bound)?;
    let mut out = Outcome::new(serde_json::to_value(r)?, true);
    out.inputs = inputs;
    Ok(out)
}

fn certificate_kind(c: &Certificate) -> &'static str {
    match c {
        Certificate::Fold { .. } => "fold",
        Certificate::Extension { .. } => "extension",
        Certificate::Product { .. } => "product",
    }
}

fn table_row(family: &str, n: u64, opts: &ConstructOptions) -> Result<ConstructionReport> {
    let u = n as usize;
    Ok(match family {
        "sym" | "sym-fast" => construct::construct_sym_fast(u, opts)?,
        "sym-adjacent" => construct::construct_sym_adjacent(u, opts)?,
        "sym-action" => construct::construct_sym_action(u, opts)?,
        "alt" | "alt-full" => construct::construct_alt_full(u, opts)?,
        "alt-action" => construct::construct_alt_action(u, opts)?,
        "dihedral" => construct::construct_dihedral(n, opts)?,
        "cyclic2" => construct::construct_cyclic_2group(n as u32, opts)?,
        "psl2" => construct::construct_psl2_char2(n as u32, opts)?,
        "coxeter-b" => construct::construct_signed_perm(u, false, opts)?,
        "coxeter-d" => construct::construct_signed_perm(u, true, opts)?,
        other => bail!("unknown family {other}"),
    })
}

fn cmd_table(g: &Global, a: &TableArgs) -> Result<Outcome> {
    let (lo, hi) = parse_range(&a.range)?;
    let opts = construct_options(g)?;
    let mut rows = Vec::new();
    let mut ok = true;
    for n in lo..=hi {
        match table_row(&a.family, n, &opts) {
            Ok(r) => {
                let verified = r.certificate.holds();
                ok &= verified && r.bound_satisfied;
                let order = r.sequence.group.order();
                rows.push(json!({
                    "n": n,
                    "order": u64::try_from(order).map(Value::from).unwrap_or_else(|_| Value::from(order.to_string())),
                    "entropy_lb": r.entropy_lb,
                    "length": r.length,
                    "bound": r.bound,
                    "bound_expr": r.bound_expr,
                    "within_bound": r.bound_satisfied,
                    "verified": verified,
                    "certificate": certificate_kind(&r.certificate),
                    "mode": r.mode,
                }));
            }
            Err(e) => {
                ok = false;
                rows.push(json!({ "n": n, "error": e.to_string() }));
            }
        }
    }
    Ok(Outcome::new(json!({ "family": a.family, "rows": rows }), ok))
}
