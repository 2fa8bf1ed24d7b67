//! Command-line front end for the entailment engine.
//!
//! Every answered query exits 0, including a failing entailment: the
//! verdict is the answer. Exit 1 is reserved for `catalog` checks that
//! found a mismatch, 2 for unusable input, and 3 for queries over the
//! engine's budget. Results go to stdout, diagnostics to stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use goedel_core::catalog::{
    class_count_report, expected_class_count, named_witnesses, run_named_witness,
    separating_matrix, verify_hierarchy, CatalogError, MatrixBlock,
};
use goedel_core::decision::{
    check_validity, decide_entailment, decide_order_entailment, DecisionError, Limits, Verdict,
    Witness,
};
use goedel_core::filters::{canonical_representative, classify, EntailmentClass, Filter, FilterError};
use goedel_core::reductions::{reduce_g2, reduce_ginv, ReductionError, ReductionRecipe};
use goedel_core::semantics::{
    eval_big, eval_g2, eval_ginv, UnitRational, Valuation1, Valuation2, ValueError,
};
use goedel_core::syntax::{nnf_g2, nnf_ginv, parse, require_language, Formula, Language};

/// A failure reported on stderr. The variant picks the exit code: 2 for
/// unusable input, 3 for a well-formed query the engine refuses to afford.
#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    fn code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Budget(_) => ExitCode::from(3),
        }
    }
}

impl From<DecisionError> for CliError {
    fn from(e: DecisionError) -> Self {
        match e {
            DecisionError::TooManyVariables { .. } | DecisionError::GridBudget { .. } => {
                CliError::Budget(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Decision(d) => d.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "goedel",
    version,
    about = "Exact entailment queries over Gödel logics with order reversal, \
             involutive negation, and paired truth values"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a formula at an exact rational valuation.
    Eval(EvalArgs),
    /// Decide whether premises entail a conclusion over a filter or the
    /// degree order.
    Entail(EntailArgs),
    /// Decide whether a formula is valid.
    Valid(ValidArgs),
    /// Name the entailment class of a filter and its canonical
    /// representative.
    Classify(ClassifyArgs),
    /// Translate a sequent into the order-entailment form for a class.
    Reduce(ReduceArgs),
    /// Rewrite a formula into negation normal form.
    Nnf(NnfArgs),
    /// Replay the frozen classification artifacts, exiting 1 on mismatch.
    Catalog(CatalogArgs),
}

/// Language profile names accepted by `--lang`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LangArg {
    Big,
    Ginv,
    G2,
}

impl From<LangArg> for Language {
    fn from(l: LangArg) -> Language {
        match l {
            LangArg::Big => Language::BiG,
            LangArg::Ginv => Language::Ginv,
            LangArg::G2 => Language::Gsquare,
        }
    }
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, value_enum)]
    lang: LangArg,
    /// Variable binding `p=2/3`, or `p=2/3:1/3` for pair values. Commas
    /// separate several bindings in one flag.
    #[arg(long = "val", value_name = "NAME=VALUE", value_delimiter = ',')]
    vals: Vec<String>,
    formula: String,
    /// Emit the result as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EntailArgs {
    #[arg(long, value_enum)]
    lang: Option<LangArg>,
    /// Designation filter, such as "[1/2,1]" or "bi(1/3,2/3)".
    #[arg(long)]
    filter: Option<String>,
    /// Premise formula, repeatable.
    #[arg(long = "premise", value_name = "FORMULA")]
    premises: Vec<String>,
    #[arg(long, value_name = "FORMULA")]
    conclusion: Option<String>,
    /// Decide degree-order entailment instead of a filter entailment.
    #[arg(long)]
    order: bool,
    /// Read query parts from a line-oriented file. Flags fill in whatever
    /// the file leaves out; premises accumulate.
    #[arg(long, value_name = "PATH")]
    query_file: Option<PathBuf>,
    /// Refuse queries with more distinct variables than this.
    #[arg(long, default_value_t = 4)]
    max_vars: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ValidArgs {
    #[arg(long, value_enum)]
    lang: LangArg,
    formula: String,
    /// Refuse formulas with more distinct variables than this.
    #[arg(long, default_value_t = 4)]
    max_vars: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, value_enum)]
    lang: LangArg,
    filter: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long, value_enum)]
    lang: LangArg,
    /// Entailment class name, such as "half-closed" or "prime".
    #[arg(long)]
    class: String,
    #[arg(long = "premise", value_name = "FORMULA")]
    premises: Vec<String>,
    #[arg(long, value_name = "FORMULA")]
    conclusion: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct NnfArgs {
    #[arg(long, value_enum)]
    lang: LangArg,
    formula: String,
    #[arg(long)]
    json: bool,
}

/// Which frozen artifact `catalog` replays.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    /// Separation tables, cell by cell.
    Tables,
    /// Hierarchy edges on a query corpus plus separators for non-edges.
    Hierarchy,
    /// Distinguishable-relation counts over the generated filter family.
    Counts,
    /// The curated regression sequents.
    Witnesses,
}

#[derive(Args)]
struct CatalogArgs {
    /// Restrict the check to one language; all three otherwise.
    #[arg(long, value_enum)]
    lang: Option<LangArg>,
    #[arg(long, value_enum)]
    check: CheckKind,
    /// Number of corpus sequents per hierarchy edge check.
    #[arg(long, default_value_t = 60)]
    corpus: usize,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eval(args) => run_eval(args),
        Command::Entail(args) => run_entail(args),
        Command::Valid(args) => run_valid(args),
        Command::Classify(args) => run_classify(args),
        Command::Reduce(args) => run_reduce(args),
        Command::Nnf(args) => run_nnf(args),
        Command::Catalog(args) => run_catalog(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.code()
        }
    }
}

fn parse_formula(text: &str) -> Result<Formula, CliError> {
    parse(text).map_err(|e| CliError::Usage(format!("cannot parse formula {text:?}: {e}")))
}

fn parse_checked_formula(text: &str, lang: Language) -> Result<Formula, CliError> {
    let f = parse_formula(text)?;
    require_language(&f, lang).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(f)
}

fn parse_filter_text(text: &str) -> Result<Filter, CliError> {
    text.parse()
        .map_err(|e: FilterError| CliError::Usage(format!("cannot parse filter {text:?}: {e}")))
}

fn split_binding(text: &str) -> Result<(&str, &str), CliError> {
    text.split_once('=')
        .map(|(name, value)| (name.trim(), value.trim()))
        .ok_or_else(|| CliError::Usage(format!("binding {text:?} is not NAME=VALUE")))
}

fn parse_rational(text: &str) -> Result<UnitRational, CliError> {
    text.parse()
        .map_err(|e: ValueError| CliError::Usage(format!("value {text:?}: {e}")))
}

fn parse_valuation1(vals: &[String]) -> Result<Valuation1, CliError> {
    let mut v = Valuation1::new();
    for binding in vals {
        let (name, value) = split_binding(binding)?;
        if value.contains(':') {
            return Err(CliError::Usage(format!(
                "binding {binding:?} is a pair; this language takes NAME=n/d"
            )));
        }
        v.insert(name.to_string(), parse_rational(value)?);
    }
    Ok(v)
}

fn parse_valuation2(vals: &[String]) -> Result<Valuation2, CliError> {
    let mut v = Valuation2::new();
    for binding in vals {
        let (name, value) = split_binding(binding)?;
        let (a, b) = value.split_once(':').ok_or_else(|| {
            CliError::Usage(format!(
                "binding {binding:?} is scalar; this language takes NAME=n/d:n/d"
            ))
        })?;
        let pair = goedel_core::semantics::ValuePair::new(parse_rational(a)?, parse_rational(b)?);
        v.insert(name.to_string(), pair);
    }
    Ok(v)
}

fn run_eval(args: EvalArgs) -> Result<ExitCode, CliError> {
    let lang: Language = args.lang.into();
    let f = parse_formula(&args.formula)?;
    match lang {
        Language::BiG | Language::Ginv => {
            let v = parse_valuation1(&args.vals)?;
            let value = match lang {
                Language::BiG => eval_big(&f, &v),
                _ => eval_ginv(&f, &v),
            }
            .map_err(|e| CliError::Usage(e.to_string()))?;
            if args.json {
                println!("{}", json!({ "value": value.to_string() }));
            } else {
                println!("{value}");
            }
        }
        Language::Gsquare => {
            let v = parse_valuation2(&args.vals)?;
            let value = eval_g2(&f, &v).map_err(|e| CliError::Usage(e.to_string()))?;
            if args.json {
                let body = json!({
                    "value": { "v1": value.first.to_string(), "v2": value.second.to_string() }
                });
                println!("{body}");
            } else {
                println!("{value}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// The contents of a `--query-file`: any subset of the query, merged with
/// command-line flags afterwards.
#[derive(Default)]
struct QueryFileData {
    lang: Option<Language>,
    premises: Vec<String>,
    conclusion: Option<String>,
    filter: Option<String>,
}

fn parse_lang_name(text: &str) -> Result<Language, CliError> {
    match text {
        "big" => Ok(Language::BiG),
        "ginv" => Ok(Language::Ginv),
        "g2" => Ok(Language::Gsquare),
        other => Err(CliError::Usage(format!(
            "unknown language {other:?}; expected big, ginv, or g2"
        ))),
    }
}

fn parse_query_file(path: &Path) -> Result<QueryFileData, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let mut data = QueryFileData::default();
    for (index, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at = |msg: String| CliError::Usage(format!("{}:{}: {msg}", path.display(), index + 1));
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| at("expected `key: value`".to_string()))?;
        let value = value.trim();
        match key.trim() {
            "lang" => data.lang = Some(parse_lang_name(value)?),
            "premise" => data.premises.push(value.to_string()),
            "conclusion" => {
                if data.conclusion.replace(value.to_string()).is_some() {
                    return Err(at("duplicate conclusion".to_string()));
                }
            }
            "filter" => {
                if data.filter.replace(value.to_string()).is_some() {
                    return Err(at("duplicate filter".to_string()));
                }
            }
            other => return Err(at(format!("unknown key {other:?}"))),
        }
    }
    Ok(data)
}

struct EntailQuery {
    lang: Language,
    premises: Vec<Formula>,
    conclusion: Formula,
    /// `None` asks for degree-order entailment.
    filter: Option<Filter>,
}

fn resolve_entail_query(args: &EntailArgs) -> Result<EntailQuery, CliError> {
    let file = match &args.query_file {
        Some(path) => parse_query_file(path)?,
        None => QueryFileData::default(),
    };
    let lang = args
        .lang
        .map(Language::from)
        .or(file.lang)
        .ok_or_else(|| CliError::Usage("no language: pass --lang or a `lang:` line".into()))?;
    let filter_text = args.filter.clone().or(file.filter);
    if args.order && filter_text.is_some() {
        return Err(CliError::Usage(
            "--order and a filter are mutually exclusive".into(),
        ));
    }
    if !args.order && filter_text.is_none() {
        return Err(CliError::Usage(
            "no designation: pass --filter, --order, or a `filter:` line".into(),
        ));
    }
    let conclusion_text = args
        .conclusion
        .clone()
        .or(file.conclusion)
        .ok_or_else(|| CliError::Usage("no conclusion: pass --conclusion or a `conclusion:` line".into()))?;
    let mut premises = Vec::new();
    for text in file.premises.iter().chain(&args.premises) {
        premises.push(parse_checked_formula(text, lang)?);
    }
    Ok(EntailQuery {
        lang,
        premises,
        conclusion: parse_checked_formula(&conclusion_text, lang)?,
        filter: match filter_text {
            Some(text) => Some(parse_filter_text(&text)?),
            None => None,
        },
    })
}

fn witness_text(w: &Witness) -> String {
    let parts: Vec<String> = match w {
        Witness::One(v) => v.iter().map(|(name, r)| format!("{name}={r}")).collect(),
        Witness::Two(v) => v
            .iter()
            .map(|(name, p)| format!("{name}={}:{}", p.first, p.second))
            .collect(),
    };
    parts.join(" ")
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::One(v) => Value::Object(
            v.iter()
                .map(|(name, r)| (name.clone(), Value::String(r.to_string())))
                .collect(),
        ),
        Witness::Two(v) => Value::Object(
            v.iter()
                .map(|(name, p)| {
                    let pair = json!({ "v1": p.first.to_string(), "v2": p.second.to_string() });
                    (name.clone(), pair)
                })
                .collect(),
        ),
    }
}

fn print_verdict(verdict: &Verdict, elapsed_ms: u64, json_output: bool, valid_wording: bool) {
    if json_output {
        let body = json!({
            "holds": verdict.holds,
            "witness": verdict.witness.as_ref().map(witness_json),
            "class": verdict.class_used.map(|c| c.to_string()),
            "elapsed_ms": elapsed_ms,
        });
        println!("{body}");
        return;
    }
    let (yes, no) = if valid_wording {
        ("valid", "invalid")
    } else {
        ("holds", "fails")
    };
    println!("{}", if verdict.holds { yes } else { no });
    if let Some(class) = verdict.class_used {
        println!("class: {class}");
    }
    if let Some(w) = &verdict.witness {
        println!("witness: {}", witness_text(w));
    }
}

fn run_entail(args: EntailArgs) -> Result<ExitCode, CliError> {
    let query = resolve_entail_query(&args)?;
    let limits = Limits {
        max_vars: args.max_vars,
    };
    let started = Instant::now();
    let verdict = match &query.filter {
        Some(filter) => {
            decide_entailment(&query.premises, &query.conclusion, filter, query.lang, &limits)?
        }
        None => decide_order_entailment(&query.premises, &query.conclusion, query.lang, &limits)?,
    };
    let elapsed_ms = started.elapsed().as_millis() as u64;
    print_verdict(&verdict, elapsed_ms, args.json, false);
    Ok(ExitCode::SUCCESS)
}

fn run_valid(args: ValidArgs) -> Result<ExitCode, CliError> {
    let lang: Language = args.lang.into();
    let f = parse_checked_formula(&args.formula, lang)?;
    let limits = Limits {
        max_vars: args.max_vars,
    };
    let started = Instant::now();
    let verdict = check_validity(&f, lang, &limits)?;
    let elapsed_ms = started.elapsed().as_millis() as u64;
    print_verdict(&verdict, elapsed_ms, args.json, true);
    Ok(ExitCode::SUCCESS)
}

fn run_classify(args: ClassifyArgs) -> Result<ExitCode, CliError> {
    let lang: Language = args.lang.into();
    let filter = parse_filter_text(&args.filter)?;
    let class = classify(&filter, lang).map_err(|e| CliError::Usage(e.to_string()))?;
    let representative = canonical_representative(class);
    if args.json {
        let body = json!({
            "class": class.to_string(),
            "representative": representative.to_string(),
        });
        println!("{body}");
    } else {
        println!("class: {class}");
        println!("representative: {representative}");
    }
    Ok(ExitCode::SUCCESS)
}

fn print_recipe(recipe: &ReductionRecipe, json_output: bool) {
    if json_output {
        let premises: Vec<String> = recipe.premises.iter().map(|f| f.to_string()).collect();
        let body = json!({
            "class": recipe.class.to_string(),
            "premises": premises,
            "conclusion": recipe.conclusion.to_string(),
            "fresh": recipe.fresh,
        });
        println!("{body}");
        return;
    }
    println!("class: {}", recipe.class);
    for premise in &recipe.premises {
        println!("premise: {premise}");
    }
    println!("conclusion: {}", recipe.conclusion);
    if let Some(fresh) = &recipe.fresh {
        println!("fresh: {fresh}");
    }
}

fn run_reduce(args: ReduceArgs) -> Result<ExitCode, CliError> {
    let lang: Language = args.lang.into();
    let class = EntailmentClass::from_name(lang, &args.class)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut premises = Vec::new();
    for text in &args.premises {
        premises.push(parse_checked_formula(text, lang)?);
    }
    let conclusion = parse_checked_formula(&args.conclusion, lang)?;
    let recipe = match class {
        EntailmentClass::Ginv(c) => reduce_ginv(&premises, &conclusion, c),
        EntailmentClass::Gsquare(c) => reduce_g2(&premises, &conclusion, c),
        EntailmentClass::Big(_) => Err(ReductionError::NoRecipe(class)),
    };
    match recipe {
        Ok(recipe) => {
            print_recipe(&recipe, args.json);
            Ok(ExitCode::SUCCESS)
        }
        Err(ReductionError::NoRecipe(class)) => {
            if args.json {
                let body = json!({
                    "class": class.to_string(),
                    "premises": Value::Null,
                    "conclusion": Value::Null,
                    "fresh": Value::Null,
                });
                println!("{body}");
            } else {
                println!("no order-entailment reduction for class {class}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(ReductionError::Decision(e)) => Err(e.into()),
    }
}

fn run_nnf(args: NnfArgs) -> Result<ExitCode, CliError> {
    let lang: Language = args.lang.into();
    let f = parse_formula(&args.formula)?;
    let normal = match lang {
        Language::Ginv => nnf_ginv(&f),
        Language::Gsquare => nnf_g2(&f),
        Language::BiG => {
            return Err(CliError::Usage(
                "negation normal form is defined for ginv and g2 only".into(),
            ))
        }
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    if args.json {
        println!("{}", json!({ "formula": normal.to_string() }));
    } else {
        println!("{normal}");
    }
    Ok(ExitCode::SUCCESS)
}

fn selected_langs(choice: Option<LangArg>) -> Vec<Language> {
    match choice {
        Some(lang) => vec![lang.into()],
        None => vec![Language::BiG, Language::Ginv, Language::Gsquare],
    }
}

fn gate(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn block_json(block: &MatrixBlock) -> Value {
    let rows: Vec<Value> = block
        .rows
        .iter()
        .map(|row| {
            json!({
                "filter": row.label,
                "class": row.class.to_string(),
                "expected": row.expected,
                "computed": row.computed,
            })
        })
        .collect();
    json!({
        "title": block.title,
        "lang": block.lang.to_string(),
        "columns": block.columns,
        "rows": rows,
    })
}

fn check_tables(langs: &[Language], json_output: bool) -> Result<ExitCode, CliError> {
    let mut mismatched_cells = 0usize;
    let mut blocks_json = Vec::new();
    for &lang in langs {
        for block in separating_matrix(lang)? {
            mismatched_cells += block.mismatches().len();
            if json_output {
                blocks_json.push(block_json(&block));
            } else {
                print!("{block}");
                for (row, column) in block.mismatches() {
                    println!("mismatch: {row} x {column}");
                }
                println!();
            }
        }
    }
    let passed = mismatched_cells == 0;
    if json_output {
        let body = json!({
            "check": "tables",
            "blocks": blocks_json,
            "mismatched_cells": mismatched_cells,
            "passed": passed,
        });
        println!("{body}");
    } else if passed {
        println!("tables: ok");
    } else {
        println!("tables: {mismatched_cells} cells disagree with the frozen matrices");
    }
    Ok(gate(passed))
}

fn check_counts(langs: &[Language], json_output: bool) -> Result<ExitCode, CliError> {
    let mut passed = true;
    let mut langs_json = Vec::new();
    for &lang in langs {
        let report = class_count_report(lang)?;
        let expected = expected_class_count(lang);
        let found = report.count();
        if json_output {
            let groups: Vec<Value> = report
                .groups
                .iter()
                .map(|g| {
                    json!({
                        "classes": g.classes.iter().collect::<Vec<_>>(),
                        "filters": g.filters.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            langs_json.push(json!({
                "lang": lang.to_string(),
                "found": found,
                "expected": expected,
                "groups": groups,
            }));
        } else {
            print!("{report}");
            if found != expected {
                println!(
                    "counts: {lang} battery distinguishes {found} relations but the classifier \
                     names {expected} classes"
                );
                for group in report.groups.iter().filter(|g| g.classes.len() > 1) {
                    let classes: Vec<&str> = group.classes.iter().map(String::as_str).collect();
                    println!("  indistinguishable classes: [{}]", classes.join(", "));
                }
            }
            println!();
        }
        passed &= found == expected;
    }
    if json_output {
        let body = json!({
            "check": "counts",
            "languages": langs_json,
            "passed": passed,
        });
        println!("{body}");
    } else if passed {
        println!("counts: ok");
    } else {
        println!("counts: battery and classifier disagree");
    }
    Ok(gate(passed))
}

fn check_hierarchy(langs: &[Language], corpus: usize, json_output: bool) -> Result<ExitCode, CliError> {
    let mut passed = true;
    let mut langs_json = Vec::new();
    for &lang in langs {
        let report = verify_hierarchy(lang, corpus)?;
        let exact = report.is_exact();
        if json_output {
            let violations: Vec<Value> = report
                .edge_violations
                .iter()
                .map(|v| {
                    json!({
                        "from": v.from.to_string(),
                        "to": v.to.to_string(),
                        "premises": v.premises.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                        "conclusion": v.conclusion.to_string(),
                    })
                })
                .collect();
            let separations: Vec<Value> = report
                .separations
                .iter()
                .map(|s| {
                    json!({
                        "from": s.from.to_string(),
                        "to": s.to.to_string(),
                        "statement": s.statement,
                    })
                })
                .collect();
            langs_json.push(json!({
                "lang": lang.to_string(),
                "corpus": report.corpus_size,
                "edge_violations": violations,
                "separations": separations,
                "exact": exact,
            }));
        } else {
            print!("{report}");
            println!(
                "hierarchy {lang}: {}",
                if exact { "exact" } else { "NOT EXACT" }
            );
            println!();
        }
        passed &= exact;
    }
    if json_output {
        let body = json!({
            "check": "hierarchy",
            "languages": langs_json,
            "passed": passed,
        });
        println!("{body}");
    } else if passed {
        println!("hierarchy: ok");
    } else {
        println!("hierarchy: some figure could not be confirmed");
    }
    Ok(gate(passed))
}

fn check_witnesses(langs: &[Language], json_output: bool) -> Result<ExitCode, CliError> {
    let mut passed = true;
    let mut outcomes_json = Vec::new();
    for w in named_witnesses() {
        if !langs.contains(&w.lang) {
            continue;
        }
        let outcome = run_named_witness(&w)?;
        if json_output {
            outcomes_json.push(json!({
                "id": outcome.id,
                "lang": w.lang.to_string(),
                "passed": outcome.passed,
                "detail": outcome.detail,
            }));
        } else {
            println!(
                "{} {}",
                if outcome.passed { "ok  " } else { "FAIL" },
                outcome.id
            );
            if !outcome.passed {
                println!("     {}", outcome.detail);
            }
        }
        passed &= outcome.passed;
    }
    if json_output {
        let body = json!({
            "check": "witnesses",
            "outcomes": outcomes_json,
            "passed": passed,
        });
        println!("{body}");
    } else if passed {
        println!("witnesses: ok");
    } else {
        println!("witnesses: some regression sequents diverged");
    }
    Ok(gate(passed))
}

fn run_catalog(args: CatalogArgs) -> Result<ExitCode, CliError> {
    let langs = selected_langs(args.lang);
    match args.check {
        CheckKind::Tables => check_tables(&langs, args.json),
        CheckKind::Counts => check_counts(&langs, args.json),
        CheckKind::Hierarchy => check_hierarchy(&langs, args.corpus, args.json),
        CheckKind::Witnesses => check_witnesses(&langs, args.json),
    }
}
