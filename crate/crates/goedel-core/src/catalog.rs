//! The executable landscape: separating statements, expected separation
//! tables, class counts, hierarchy checks, and named witness sequents.
//!
//! Everything here is frozen data plus replay. The statements are the small
//! sequents that tell the entailment classes of a language apart; the
//! expected tables record which class satisfies which statement; the
//! hierarchy data records which classes imply which. [`separating_matrix`],
//! [`class_count_report`], [`verify_hierarchy`] and [`run_named_witnesses`]
//! recompute all of it with the decision engine and report any divergence
//! between the frozen expectation and the engine.
//!
//! One expected-table cell deliberately departs from the source the tables
//! were drawn from: the strict-lower-corner row (`bi(1/3,1)`-style filters)
//! satisfies the non-paraconsistency statement `P1` only if the filter
//! contains no diagonal point, and `bi(1/3,1)` contains `<3/4, 3/4>`, so
//! the cell is a "no". The consequence, visible in [`class_count_report`]
//! and [`verify_hierarchy`], is that the `lower-corner` and `lower` classes
//! answer every statement identically: they induce the same entailment
//! relation (see [`crate::filters::G2Class::LowerCorner`]), and no
//! separating statement for the pair can exist.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::decision::{
    check_validity, decide_entailment, decide_entailment_grid, decide_order_entailment,
    DecisionError, Limits,
};
use crate::filters::{canonical_representative, classify, EntailmentClass, Filter, FilterError};
use crate::semantics::{
    eval_big, eval_g2, eval_ginv, inf_premises1, inf_premises2, EvalError, UnitRational,
    Valuation1, Valuation2, ValueError, ValuePair,
};
use crate::syntax::{parse, Formula, Language};

/// Grid resolution for the refutation prefilter run before each complete
/// symbolic decision. Divisible by 2 and 3 so the family bounds land on
/// grid points.
const PREFILTER_DENOM: i64 = 6;

/// An error surfaced while recomputing catalog data.
#[derive(Debug, Error)]
pub enum CatalogError {
    #[error(transparent)]
    Decision(#[from] DecisionError),
    #[error(transparent)]
    Filter(#[from] FilterError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Value(#[from] ValueError),
}

fn parse_formula(text: &'static str) -> Formula {
    parse(text).unwrap_or_else(|e| panic!("catalog formula {text:?} does not parse: {e}"))
}

fn parse_filter(text: &'static str) -> Filter {
    text.parse()
        .unwrap_or_else(|e| panic!("catalog filter {text:?} does not parse: {e}"))
}

/// A small sequent that distinguishes entailment classes.
#[derive(Debug, Clone)]
pub struct SeparatingStatement {
    /// Stable identifier (`S1`..`S7` on the interval, `P1`..`P9` on pairs).
    pub id: &'static str,
    pub lang: Language,
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
}

impl SeparatingStatement {
    fn new(
        id: &'static str,
        lang: Language,
        premises: &[&'static str],
        conclusion: &'static str,
    ) -> Self {
        SeparatingStatement {
            id,
            lang,
            premises: premises.iter().copied().map(parse_formula).collect(),
            conclusion: parse_formula(conclusion),
        }
    }
}

impl fmt::Display for SeparatingStatement {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{}: ", self.id)?;
        for (i, p) in self.premises.iter().enumerate() {
            if i > 0 {
                write!(out, ", ")?;
            }
            write!(out, "{p}")?;
        }
        write!(out, " |- {}", self.conclusion)
    }
}

/// The statement battery of a language, in identifier order.
///
/// `S1` and `S2` need no negation beyond the Gödel one and are shared with
/// the base language; `S6`, `S7` and `P9` extend the printed-table columns
/// and are needed only for the hierarchy non-edge separations.
pub fn separating_statements(lang: Language) -> Vec<SeparatingStatement> {
    let s1 = |l| SeparatingStatement::new("S1", l, &["p & ~Dp"], "q");
    let s2 = |l| SeparatingStatement::new("S2", l, &["q"], "p | ~p");
    match lang {
        Language::BiG => vec![s1(lang), s2(lang)],
        Language::Ginv => vec![
            s1(lang),
            s2(lang),
            SeparatingStatement::new("S3", lang, &["p & -p"], "q"),
            SeparatingStatement::new(
                "S4",
                lang,
                &["q & -q", "~D((p & -p) -> (q & -q))"],
                "r",
            ),
            SeparatingStatement::new(
                "S5",
                lang,
                &["~D((p | -p) -> (q | -q))"],
                "p | -p",
            ),
            SeparatingStatement::new("S6", lang, &["p"], "q | -q"),
            SeparatingStatement::new("S7", lang, &["p & -p"], "D(p <-> -p)"),
        ],
        Language::Gsquare => vec![
            SeparatingStatement::new("P1", lang, &["p & !p"], "q"),
            SeparatingStatement::new("P2", lang, &["p -< q", "q"], "r"),
            SeparatingStatement::new("P3", lang, &["p -< !p", "!p"], "q"),
            SeparatingStatement::new("P4", lang, &["~(p & !p)", "!~(p & !p)"], "q"),
            SeparatingStatement::new("P5", lang, &["p", "~Tp"], "q"),
            SeparatingStatement::new(
                "P6",
                lang,
                &[
                    "Dp <-> !Dp",
                    "Dq <-> !Dq",
                    "~T(p -> q)",
                    "T(q -> p)",
                    "p",
                    "T(!p -> p)",
                    "~T(p -> !p)",
                    "T(!q -> q)",
                    "~T(q -> !q)",
                ],
                "(q | !q) | ~(q | !q)",
            ),
            SeparatingStatement::new(
                "P7",
                lang,
                &["p", "!p", "Dp <-> !Dp", "~T(p -> !p)", "T(!p -> p)"],
                "q",
            ),
            SeparatingStatement::new("P8", lang, &["p"], "q | ~q"),
            SeparatingStatement::new("P9", lang, &["p"], "Dp"),
        ],
    }
}

/// Decides `premises |- conclusion` over `filter`, trying the finite grid
/// for a quick genuine counterexample before the complete symbolic search.
fn entails(
    premises: &[Formula],
    conclusion: &Formula,
    filter: &Filter,
    lang: Language,
    limits: &Limits,
) -> Result<bool, DecisionError> {
    let refuted = decide_entailment_grid(premises, conclusion, filter, lang, PREFILTER_DENOM)?;
    if !refuted.holds {
        return Ok(false);
    }
    decide_entailment(premises, conclusion, filter, lang, limits).map(|v| v.holds)
}

fn battery_row(
    filter: &Filter,
    statements: &[SeparatingStatement],
    lang: Language,
    limits: &Limits,
) -> Result<Vec<bool>, CatalogError> {
    statements
        .iter()
        .map(|s| Ok(entails(&s.premises, &s.conclusion, filter, lang, limits)?))
        .collect()
}

/// One row of a separation table: a filter, its class, the frozen expected
/// verdicts, and the verdicts the engine recomputed.
#[derive(Debug, Clone)]
pub struct MatrixRow {
    pub label: String,
    pub filter: Filter,
    pub class: EntailmentClass,
    pub expected: Vec<bool>,
    pub computed: Vec<bool>,
}

/// A separation table with engine verdicts filled in.
#[derive(Debug, Clone)]
pub struct MatrixBlock {
    pub title: &'static str,
    pub lang: Language,
    pub columns: Vec<&'static str>,
    pub rows: Vec<MatrixRow>,
}

impl MatrixBlock {
    /// Cells where the engine disagrees with the frozen table, as
    /// (row label, column id) pairs.
    pub fn mismatches(&self) -> Vec<(String, &'static str)> {
        let mut out = Vec::new();
        for row in &self.rows {
            for (k, col) in self.columns.iter().enumerate() {
                if row.expected[k] != row.computed[k] {
                    out.push((row.label.clone(), *col));
                }
            }
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.mismatches().is_empty()
    }
}

impl fmt::Display for MatrixBlock {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "{} ({})", self.title, self.lang)?;
        write!(out, "{:<24}", "filter (class)")?;
        for col in &self.columns {
            write!(out, " {col:>4}")?;
        }
        writeln!(out)?;
        for row in &self.rows {
            write!(out, "{:<24}", format!("{} ({})", row.label, row.class))?;
            for (k, &got) in row.computed.iter().enumerate() {
                let mark = if got == row.expected[k] { "" } else { "*" };
                write!(out, " {:>4}", format!("{}{mark}", if got { "yes" } else { "no" }))?;
            }
            writeln!(out)?;
        }
        Ok(())
    }
}

struct TableSpec {
    title: &'static str,
    columns: &'static [&'static str],
    rows: &'static [(&'static str, &'static [bool])],
}

const Y: bool = true;
const N: bool = false;

fn table_specs(lang: Language) -> Vec<TableSpec> {
    match lang {
        Language::BiG => vec![TableSpec {
            title: "interval separation table",
            columns: &["S1", "S2"],
            rows: &[
                ("[1,1]", &[Y, N]),
                ("[1/2,1]", &[N, N]),
                ("(0,1]", &[N, Y]),
            ],
        }],
        Language::Ginv => vec![TableSpec {
            title: "involutive separation table",
            columns: &["S1", "S2", "S3", "S4", "S5"],
            rows: &[
                ("[1,1]", &[Y, N, Y, Y, N]),
                ("[3/4,1]", &[N, N, Y, Y, N]),
                ("(1/2,1]", &[N, N, Y, Y, Y]),
                ("[1/2,1]", &[N, N, N, Y, Y]),
                ("[1/4,1]", &[N, N, N, N, Y]),
                ("(0,1]", &[N, Y, N, N, Y]),
            ],
        }],
        Language::Gsquare => vec![
            TableSpec {
                title: "point-generated separation table",
                columns: &["P1", "P2", "P3", "P4", "P5"],
                rows: &[
                    ("bi[1,0]", &[Y, Y, Y, Y, Y]),
                    ("bi[1/2,0]", &[Y, Y, Y, Y, N]),
                    ("bi[1,1]", &[N, Y, Y, N, N]),
                    ("bi[2/3,1/3]", &[Y, N, Y, Y, N]),
                    ("bi[1/3,2/3]", &[N, N, N, Y, N]),
                    ("bi[1/2,1/2]", &[N, N, Y, Y, N]),
                    ("bi[1/2,1]", &[N, N, N, N, N]),
                ],
            },
            TableSpec {
                title: "non-point-generated separation table",
                columns: &["P1", "P2", "P3", "P4", "P6", "P7", "P8"],
                rows: &[
                    ("bi(1/2,0]", &[Y, Y, Y, Y, N, Y, N]),
                    ("bi[1,1)", &[Y, Y, Y, Y, Y, Y, N]),
                    ("bi(2/3,1/3)", &[Y, N, Y, Y, N, Y, N]),
                    ("bi(1/3,2/3)", &[N, N, N, Y, N, Y, N]),
                    // bi(1/3,1) contains diagonal points such as <3/4,3/4>,
                    // so P1 is falsifiable; the row equals the bi(1/3,2/3)
                    // row on every column.
                    ("bi(1/3,1)", &[N, N, N, Y, N, Y, N]),
                    ("bi(0,1]", &[N, N, N, N, Y, N, Y]),
                    ("bi(0,1)", &[N, N, N, Y, Y, Y, Y]),
                    ("bi(1/2,1]", &[N, N, N, N, N, N, N]),
                ],
            },
        ],
    }
}

/// Recomputes the separation tables of a language with the decision engine
/// and pairs every cell with its frozen expected value.
pub fn separating_matrix(lang: Language) -> Result<Vec<MatrixBlock>, CatalogError> {
    let limits = Limits::default();
    let statements = separating_statements(lang);
    let lookup = |id: &str| {
        statements
            .iter()
            .find(|s| s.id == id)
            .unwrap_or_else(|| panic!("no statement {id} in the {lang} battery"))
            .clone()
    };
    let mut blocks = Vec::new();
    for spec in table_specs(lang) {
        let cols: Vec<SeparatingStatement> = spec.columns.iter().map(|id| lookup(id)).collect();
        let mut rows = Vec::new();
        for (text, expected) in spec.rows {
            let filter = parse_filter(text);
            let class = classify(&filter, lang)?;
            let computed = battery_row(&filter, &cols, lang, &limits)?;
            rows.push(MatrixRow {
                label: (*text).to_string(),
                filter,
                class,
                expected: expected.to_vec(),
                computed,
            });
        }
        blocks.push(MatrixBlock {
            title: spec.title,
            lang,
            columns: spec.columns.to_vec(),
            rows,
        });
    }
    Ok(blocks)
}

/// The bounds the generated filter family draws from; they hit both sides
/// of every classification threshold.
fn family_bounds() -> Vec<UnitRational> {
    [(0, 1), (1, 4), (1, 3), (1, 2), (2, 3), (3, 4), (1, 1)]
        .into_iter()
        .map(|(n, d)| UnitRational::new(n, d).expect("family bound"))
        .collect()
}

/// Every constructible filter whose bounds come from [`family_bounds`],
/// over all open/closed flag combinations.
pub fn generated_filter_family(lang: Language) -> Vec<Filter> {
    let bounds = family_bounds();
    let mut out = Vec::new();
    match lang {
        Language::BiG | Language::Ginv => {
            for &b in &bounds {
                for strict in [false, true] {
                    if let Ok(f) = Filter::unit(b, strict) {
                        out.push(f);
                    }
                }
            }
        }
        Language::Gsquare => {
            for &x in &bounds {
                for xs in [false, true] {
                    for &y in &bounds {
                        for ys in [false, true] {
                            if let Ok(f) = Filter::pair(x, xs, y, ys) {
                                out.push(f);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Filters of the generated family that answered the battery identically.
#[derive(Debug, Clone)]
pub struct ClassGroup {
    /// One verdict per statement, in [`separating_statements`] order.
    pub verdicts: Vec<bool>,
    pub filters: Vec<Filter>,
    /// Names of the classification labels landing in this group.
    pub classes: BTreeSet<String>,
}

/// The battery grouping of the generated filter family.
#[derive(Debug, Clone)]
pub struct ClassCountReport {
    pub lang: Language,
    pub statement_ids: Vec<&'static str>,
    pub groups: Vec<ClassGroup>,
}

impl ClassCountReport {
    /// The number of distinguishable entailment relations found.
    pub fn count(&self) -> usize {
        self.groups.len()
    }
}

impl fmt::Display for ClassCountReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            out,
            "{}: {} distinguishable relations over {} statements",
            self.lang,
            self.count(),
            self.statement_ids.len()
        )?;
        for group in &self.groups {
            let bits: String = group
                .verdicts
                .iter()
                .map(|&b| if b { 'Y' } else { 'N' })
                .collect();
            let classes: Vec<&str> = group.classes.iter().map(String::as_str).collect();
            writeln!(
                out,
                "  {bits}  classes [{}]  e.g. {}",
                classes.join(", "),
                group.filters[0]
            )?;
        }
        Ok(())
    }
}

/// Runs the full statement battery over the generated filter family and
/// groups filters by their verdict rows.
pub fn class_count_report(lang: Language) -> Result<ClassCountReport, CatalogError> {
    let limits = Limits::default();
    let statements = separating_statements(lang);
    let mut groups: Vec<ClassGroup> = Vec::new();
    for filter in generated_filter_family(lang) {
        let verdicts = battery_row(&filter, &statements, lang, &limits)?;
        let class = classify(&filter, lang)?;
        match groups.iter_mut().find(|g| g.verdicts == verdicts) {
            Some(group) => {
                group.filters.push(filter);
                group.classes.insert(class.to_string());
            }
            None => groups.push(ClassGroup {
                verdicts,
                filters: vec![filter],
                classes: [class.to_string()].into_iter().collect(),
            }),
        }
    }
    Ok(ClassCountReport {
        lang,
        statement_ids: statements.iter().map(|s| s.id).collect(),
        groups,
    })
}

/// The number of battery-distinguishable relations in the generated family.
pub fn class_count(lang: Language) -> Result<usize, CatalogError> {
    Ok(class_count_report(lang)?.count())
}

/// The classification-tree label count of a language: how many classes the
/// filter classifier distinguishes syntactically.
pub fn expected_class_count(lang: Language) -> usize {
    match lang {
        Language::BiG => 3,
        Language::Ginv => 6,
        Language::Gsquare => 11,
    }
}

/// A node of an entailment hierarchy: a filter-induced class, or the
/// degree-order entailment itself where it is not among the classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HierarchyNode {
    DegreeOrder,
    Class(EntailmentClass),
}

impl fmt::Display for HierarchyNode {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HierarchyNode::DegreeOrder => write!(out, "degree-order"),
            HierarchyNode::Class(c) => write!(out, "{c}"),
        }
    }
}

fn ginv_node(name: &str) -> HierarchyNode {
    HierarchyNode::Class(
        EntailmentClass::from_name(Language::Ginv, name).expect("hierarchy class name"),
    )
}

fn g2_node(name: &str) -> HierarchyNode {
    HierarchyNode::Class(
        EntailmentClass::from_name(Language::Gsquare, name).expect("hierarchy class name"),
    )
}

/// The hierarchy nodes of a language, strongest first.
pub fn hierarchy_nodes(lang: Language) -> Vec<HierarchyNode> {
    match lang {
        Language::BiG => vec![
            HierarchyNode::DegreeOrder,
            HierarchyNode::Class(
                EntailmentClass::from_name(lang, "one").expect("hierarchy class name"),
            ),
            HierarchyNode::Class(
                EntailmentClass::from_name(lang, "order").expect("hierarchy class name"),
            ),
            HierarchyNode::Class(
                EntailmentClass::from_name(lang, "no-zero").expect("hierarchy class name"),
            ),
        ],
        Language::Ginv => vec![
            HierarchyNode::DegreeOrder,
            ginv_node("lower-open"),
            ginv_node("upper-open"),
            ginv_node("one"),
            ginv_node("half-open"),
            ginv_node("half-closed"),
            ginv_node("no-zero"),
        ],
        Language::Gsquare => vec![
            g2_node("order"),
            g2_node("lower-corner"),
            g2_node("lower"),
            g2_node("edge"),
            g2_node("edge-open"),
            g2_node("diagonal"),
            g2_node("upper"),
            g2_node("one-dimensional"),
            g2_node("prime"),
            g2_node("prime-sharp"),
            g2_node("top"),
        ],
    }
}

/// The direct implication arrows of the hierarchy: if the source entails a
/// sequent, so does the target.
pub fn hierarchy_edges(lang: Language) -> Vec<(HierarchyNode, HierarchyNode)> {
    match lang {
        Language::BiG => {
            let order_class = HierarchyNode::Class(
                EntailmentClass::from_name(lang, "order").expect("hierarchy class name"),
            );
            let one = HierarchyNode::Class(
                EntailmentClass::from_name(lang, "one").expect("hierarchy class name"),
            );
            let no_zero = HierarchyNode::Class(
                EntailmentClass::from_name(lang, "no-zero").expect("hierarchy class name"),
            );
            vec![
                (HierarchyNode::DegreeOrder, order_class),
                (order_class, HierarchyNode::DegreeOrder),
                (HierarchyNode::DegreeOrder, one),
                (HierarchyNode::DegreeOrder, no_zero),
            ]
        }
        Language::Ginv => vec![
            (HierarchyNode::DegreeOrder, ginv_node("lower-open")),
            (ginv_node("lower-open"), ginv_node("no-zero")),
            (ginv_node("lower-open"), ginv_node("half-closed")),
            (HierarchyNode::DegreeOrder, ginv_node("upper-open")),
            (ginv_node("upper-open"), ginv_node("one")),
            (ginv_node("upper-open"), ginv_node("half-open")),
        ],
        Language::Gsquare => vec![
            (g2_node("order"), g2_node("edge")),
            (g2_node("order"), g2_node("prime")),
            (g2_node("order"), g2_node("lower-corner")),
            (g2_node("prime"), g2_node("top")),
            (g2_node("prime-sharp"), g2_node("top")),
            (g2_node("edge"), g2_node("edge-open")),
            (g2_node("lower"), g2_node("edge-open")),
            (g2_node("lower"), g2_node("diagonal")),
            (g2_node("diagonal"), g2_node("upper")),
            (g2_node("upper"), g2_node("one-dimensional")),
            (g2_node("one-dimensional"), g2_node("prime-sharp")),
            (g2_node("lower-corner"), g2_node("lower")),
        ],
    }
}

/// A corpus query on which a hierarchy edge failed to transfer.
#[derive(Debug, Clone)]
pub struct EdgeViolation {
    pub from: HierarchyNode,
    pub to: HierarchyNode,
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
}

/// The separation outcome for one ordered pair of incomparable nodes.
#[derive(Debug, Clone)]
pub struct Separation {
    pub from: HierarchyNode,
    pub to: HierarchyNode,
    /// A statement the `from` node satisfies and the `to` node falsifies,
    /// or `None` when the battery offers no such statement.
    pub statement: Option<&'static str>,
}

/// The outcome of replaying a hierarchy figure against the engine.
#[derive(Debug, Clone)]
pub struct HierarchyReport {
    pub lang: Language,
    pub corpus_size: usize,
    pub edge_violations: Vec<EdgeViolation>,
    pub separations: Vec<Separation>,
}

impl HierarchyReport {
    /// Incomparable pairs for which no separating statement exists.
    pub fn missing_separations(&self) -> Vec<&Separation> {
        self.separations
            .iter()
            .filter(|s| s.statement.is_none())
            .collect()
    }

    /// True when every edge held on the corpus and every incomparable pair
    /// has a machine-checked separator.
    pub fn is_exact(&self) -> bool {
        self.edge_violations.is_empty() && self.missing_separations().is_empty()
    }
}

impl fmt::Display for HierarchyReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            out,
            "{} hierarchy: {} corpus queries, {} edge violations",
            self.lang,
            self.corpus_size,
            self.edge_violations.len()
        )?;
        for v in &self.edge_violations {
            writeln!(
                out,
                "  edge {} => {} violated by {:?} |- {}",
                v.from,
                v.to,
                v.premises.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                v.conclusion
            )?;
        }
        for s in &self.separations {
            match s.statement {
                Some(id) => writeln!(out, "  {} not below {}: separated by {id}", s.from, s.to)?,
                None => writeln!(out, "  {} not below {}: NO SEPARATOR FOUND", s.from, s.to)?,
            }
        }
        Ok(())
    }
}

/// A curated pool of small two-variable formulas used for corpus queries.
fn corpus_formulas(lang: Language) -> Vec<Formula> {
    let texts: &[&str] = match lang {
        Language::BiG => &[
            "p", "q", "~p", "Dp", "p & ~Dp", "p | ~p", "p -> q", "q -< p", "D(p -> q)", "~q",
            "p & q", "1 -< p",
        ],
        Language::Ginv => &[
            "p",
            "q",
            "-p",
            "~p",
            "Dp",
            "p & -p",
            "p | -p",
            "q & -q",
            "q | -q",
            "p -> q",
            "q -< p",
            "~D(-p -> p)",
            "D(p <-> -p)",
            "-q | p",
        ],
        Language::Gsquare => &[
            "p",
            "q",
            "!p",
            "~p",
            "Dp",
            "Tp",
            "p & !p",
            "p | !p",
            "q | ~q",
            "p -> q",
            "q -< p",
            "~T(p -> !p)",
            "Dp <-> !Dp",
            "T(!p -> p)",
        ],
    };
    texts.iter().copied().map(parse_formula).collect()
}

/// Deterministically enumerates `size` corpus sequents over the formula
/// pool of `lang`.
pub fn corpus_sequents(lang: Language, size: usize) -> Vec<(Vec<Formula>, Formula)> {
    let pool = corpus_formulas(lang);
    let n = pool.len();
    let mut out = Vec::with_capacity(size);
    for r in 0..size {
        let ci = r % n;
        let mut pi = (r / n + 2 * r + 1) % n;
        if pi == ci {
            pi = (pi + 1) % n;
        }
        let mut premises = vec![pool[pi].clone()];
        if r % 3 == 2 {
            let qi = (pi + r / 3 + 1) % n;
            if qi != ci && qi != pi {
                premises.push(pool[qi].clone());
            }
        }
        out.push((premises, pool[ci].clone()));
    }
    out
}

fn node_holds(
    node: HierarchyNode,
    premises: &[Formula],
    conclusion: &Formula,
    lang: Language,
    limits: &Limits,
) -> Result<bool, CatalogError> {
    match node {
        HierarchyNode::DegreeOrder => {
            Ok(decide_order_entailment(premises, conclusion, lang, limits)?.holds)
        }
        HierarchyNode::Class(c) => {
            let filter = canonical_representative(c);
            Ok(entails(premises, conclusion, &filter, lang, limits)?)
        }
    }
}

/// Replays a hierarchy figure: checks every arrow on a deterministic corpus
/// of `corpus_size` queries and searches the statement battery for a
/// separator for every incomparable ordered pair.
pub fn verify_hierarchy(lang: Language, corpus_size: usize) -> Result<HierarchyReport, CatalogError> {
    let limits = Limits::default();
    let nodes = hierarchy_nodes(lang);
    let edges = hierarchy_edges(lang);
    let index = |n: HierarchyNode| nodes.iter().position(|m| *m == n).expect("hierarchy node");

    let count = nodes.len();
    let mut reach = vec![vec![false; count]; count];
    for (a, b) in &edges {
        reach[index(*a)][index(*b)] = true;
    }
    for k in 0..count {
        for i in 0..count {
            for j in 0..count {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }

    let statements = separating_statements(lang);
    let mut battery = Vec::with_capacity(count);
    for node in &nodes {
        let mut row = Vec::with_capacity(statements.len());
        for s in &statements {
            row.push(node_holds(*node, &s.premises, &s.conclusion, lang, &limits)?);
        }
        battery.push(row);
    }

    let mut separations = Vec::new();
    for i in 0..count {
        for j in 0..count {
            if i == j || reach[i][j] {
                continue;
            }
            let statement = (0..statements.len())
                .find(|&k| battery[i][k] && !battery[j][k])
                .map(|k| statements[k].id);
            separations.push(Separation {
                from: nodes[i],
                to: nodes[j],
                statement,
            });
        }
    }

    let mut edge_violations = Vec::new();
    let corpus = corpus_sequents(lang, corpus_size);
    for (premises, conclusion) in &corpus {
        let mut verdicts = Vec::with_capacity(count);
        for node in &nodes {
            verdicts.push(node_holds(*node, premises, conclusion, lang, &limits)?);
        }
        for (a, b) in &edges {
            if verdicts[index(*a)] && !verdicts[index(*b)] {
                edge_violations.push(EdgeViolation {
                    from: *a,
                    to: *b,
                    premises: premises.clone(),
                    conclusion: conclusion.clone(),
                });
            }
        }
    }

    Ok(HierarchyReport {
        lang,
        corpus_size: corpus.len(),
        edge_violations,
        separations,
    })
}

/// A concrete valuation spelled as variable/value text, scalar or pair.
#[derive(Debug, Clone, Copy)]
pub enum ValuationSpec {
    One(&'static [(&'static str, &'static str)]),
    Two(&'static [(&'static str, &'static str, &'static str)]),
}

impl ValuationSpec {
    fn valuation1(&self) -> Result<Valuation1, ValueError> {
        match self {
            ValuationSpec::One(pairs) => pairs
                .iter()
                .map(|(name, value)| Ok((name.to_string(), value.parse()?)))
                .collect(),
            ValuationSpec::Two(_) => panic!("pair valuation used in a scalar context"),
        }
    }

    fn valuation2(&self) -> Result<Valuation2, ValueError> {
        match self {
            ValuationSpec::Two(triples) => triples
                .iter()
                .map(|(name, first, second)| {
                    Ok((
                        name.to_string(),
                        ValuePair::new(first.parse()?, second.parse()?),
                    ))
                })
                .collect(),
            ValuationSpec::One(_) => panic!("scalar valuation used in a pair context"),
        }
    }
}

/// What a named witness asserts about its sequent.
#[derive(Debug, Clone)]
pub enum NamedCheck {
    /// Filter entailment with the given expected verdict; a failing check
    /// carries the concrete falsifying valuation to re-evaluate.
    Entailment {
        filter: &'static str,
        expect_holds: bool,
        falsifier: Option<ValuationSpec>,
    },
    /// Degree-order entailment.
    Order {
        expect_holds: bool,
        falsifier: Option<ValuationSpec>,
    },
    /// Validity of the conclusion formula.
    Valid {
        expect_valid: bool,
        falsifier: Option<ValuationSpec>,
    },
    /// Exact evaluation of the conclusion formula.
    Eval {
        valuation: ValuationSpec,
        expected: &'static str,
    },
}

/// A curated regression sequent with its expected engine outcome.
#[derive(Debug, Clone)]
pub struct NamedWitness {
    pub id: &'static str,
    pub lang: Language,
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
    pub check: NamedCheck,
}

fn witness(
    id: &'static str,
    lang: Language,
    premises: &[&'static str],
    conclusion: &'static str,
    check: NamedCheck,
) -> NamedWitness {
    NamedWitness {
        id,
        lang,
        premises: premises.iter().copied().map(parse_formula).collect(),
        conclusion: parse_formula(conclusion),
        check,
    }
}

/// The curated regression list.
pub fn named_witnesses() -> Vec<NamedWitness> {
    use NamedCheck::{Entailment, Eval, Order, Valid};
    let holds = |filter| Entailment {
        filter,
        expect_holds: true,
        falsifier: None,
    };
    let fails1 = |filter, falsifier| Entailment {
        filter,
        expect_holds: false,
        falsifier: Some(ValuationSpec::One(falsifier)),
    };
    let fails2 = |filter, falsifier| Entailment {
        filter,
        expect_holds: false,
        falsifier: Some(ValuationSpec::Two(falsifier)),
    };
    vec![
        witness(
            "always-designated-eval",
            Language::Ginv,
            &[],
            "~D((p | -p) -> (q | -q)) -> (p | -p)",
            Eval {
                valuation: ValuationSpec::One(&[("p", "2/3"), ("q", "1/2")]),
                expected: "2/3",
            },
        ),
        witness(
            "almost-one-premise-one-holds",
            Language::BiG,
            &["p & ~Dp"],
            "q",
            holds("[1,1]"),
        ),
        witness(
            "almost-one-premise-order-fails",
            Language::BiG,
            &["p & ~Dp"],
            "q",
            Order {
                expect_holds: false,
                falsifier: Some(ValuationSpec::One(&[("p", "1/2"), ("q", "0")])),
            },
        ),
        witness(
            "contradiction-pair-half-closed-holds",
            Language::Ginv,
            &["q & -q", "~D((p & -p) -> (q & -q))"],
            "r",
            holds("[1/2,1]"),
        ),
        witness(
            "contradiction-pair-third-open-fails",
            Language::Ginv,
            &["q & -q", "~D((p & -p) -> (q & -q))"],
            "r",
            fails1("(1/3,1]", &[("p", "1/2"), ("q", "5/12"), ("r", "0")]),
        ),
        witness(
            "involutive-contradiction-quarter-fails",
            Language::Ginv,
            &["p & -p"],
            "q",
            fails1("[1/4,1]", &[("p", "1/2"), ("q", "0")]),
        ),
        witness(
            "involutive-contradiction-half-open-holds",
            Language::Ginv,
            &["p & -p"],
            "q",
            holds("(1/2,1]"),
        ),
        witness(
            "involutive-contradiction-half-closed-fails",
            Language::Ginv,
            &["p & -p"],
            "q",
            fails1("[1/2,1]", &[("p", "1/2"), ("q", "0")]),
        ),
        witness(
            "always-designated-one-fails",
            Language::Ginv,
            &["~D((p | -p) -> (q | -q))"],
            "p | -p",
            fails1("[1,1]", &[("p", "3/4"), ("q", "2/3")]),
        ),
        witness(
            "always-designated-half-open-holds",
            Language::Ginv,
            &["~D((p | -p) -> (q | -q))"],
            "p | -p",
            holds("(1/2,1]"),
        ),
        witness(
            "midpoint-marker-half-closed-holds",
            Language::Ginv,
            &["p & -p"],
            "D(p <-> -p)",
            holds("[1/2,1]"),
        ),
        witness(
            "midpoint-marker-no-zero-fails",
            Language::Ginv,
            &["p & -p"],
            "D(p <-> -p)",
            fails1("(0,1]", &[("p", "1/3")]),
        ),
        witness(
            "strong-contradiction-diagonal-fails",
            Language::Gsquare,
            &["p & !p"],
            "q",
            fails2(
                "bi[1/2,1/2]",
                &[("p", "1/2", "1/2"), ("q", "0", "1")],
            ),
        ),
        witness(
            "strong-contradiction-one-dimensional-holds",
            Language::Gsquare,
            &["p & !p"],
            "q",
            holds("bi[1/2,0]"),
        ),
        witness(
            "coimplication-chain-one-dimensional-holds",
            Language::Gsquare,
            &["p -< q", "q"],
            "r",
            holds("bi[1,1/2]"),
        ),
        witness(
            "designated-detector-top-holds",
            Language::Gsquare,
            &["p", "~Tp"],
            "q",
            holds("bi[1,0]"),
        ),
        witness(
            "designated-detector-prime-fails",
            Language::Gsquare,
            &["p", "~Tp"],
            "q",
            fails2("bi[1,1]", &[("p", "1", "1"), ("q", "0", "1")]),
        ),
        witness(
            "weak-excluded-middle-edge-holds",
            Language::Gsquare,
            &["p"],
            "q | ~q",
            holds("bi(0,1]"),
        ),
        witness(
            "weak-excluded-middle-prime-fails",
            Language::Gsquare,
            &["p"],
            "q | ~q",
            fails2("bi[1,1]", &[("p", "1", "1"), ("q", "1/2", "1/2")]),
        ),
        witness(
            "crisp-detector-prime-holds",
            Language::Gsquare,
            &["p"],
            "Dp",
            holds("bi[1,1]"),
        ),
        witness(
            "crisp-detector-prime-sharp-fails",
            Language::Gsquare,
            &["p"],
            "Dp",
            fails2("bi[1,1)", &[("p", "1", "1/2")]),
        ),
        witness(
            "prelinearity-valid",
            Language::BiG,
            &[],
            "(p -> q) | (q -> p)",
            Valid {
                expect_valid: true,
                falsifier: None,
            },
        ),
        witness(
            "excluded-middle-invalid",
            Language::BiG,
            &[],
            "p | ~p",
            Valid {
                expect_valid: false,
                falsifier: Some(ValuationSpec::One(&[("p", "1/2")])),
            },
        ),
        witness(
            "involutive-weak-excluded-middle-valid",
            Language::Ginv,
            &[],
            "(p & -p) -> (q | -q)",
            Valid {
                expect_valid: true,
                falsifier: None,
            },
        ),
        witness(
            "involutive-double-negation-valid",
            Language::Ginv,
            &[],
            "~~(p | -p)",
            Valid {
                expect_valid: true,
                falsifier: None,
            },
        ),
        witness(
            "strong-weak-excluded-middle-invalid",
            Language::Gsquare,
            &[],
            "(p & !p) -> (q | !q)",
            Valid {
                expect_valid: false,
                falsifier: Some(ValuationSpec::Two(&[("p", "1", "1"), ("q", "0", "0")])),
            },
        ),
        witness(
            "strong-double-negation-invalid",
            Language::Gsquare,
            &[],
            "~~(p | !p)",
            Valid {
                expect_valid: false,
                falsifier: Some(ValuationSpec::Two(&[("p", "0", "0")])),
            },
        ),
        witness(
            "excluded-middle-no-zero-holds",
            Language::BiG,
            &[],
            "p | ~p",
            holds("(0,1]"),
        ),
        witness(
            "excluded-middle-one-fails",
            Language::BiG,
            &[],
            "p | ~p",
            fails1("[1,1]", &[("p", "1/2")]),
        ),
    ]
}

/// The result of replaying one named witness.
#[derive(Debug, Clone)]
pub struct WitnessOutcome {
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn eval1(f: &Formula, v: &Valuation1, lang: Language) -> Result<UnitRational, EvalError> {
    match lang {
        Language::BiG => eval_big(f, v),
        _ => eval_ginv(f, v),
    }
}

fn falsifier_refutes_filter(
    w: &NamedWitness,
    filter: &Filter,
    spec: &ValuationSpec,
) -> Result<bool, CatalogError> {
    match w.lang {
        Language::BiG | Language::Ginv => {
            let v = spec.valuation1()?;
            let d = filter.as_unit(w.lang)?;
            let inf = inf_premises1(&w.premises, &v, w.lang)?;
            let concl = eval1(&w.conclusion, &v, w.lang)?;
            Ok(d.member(inf) && !d.member(concl))
        }
        Language::Gsquare => {
            let v = spec.valuation2()?;
            let d = filter.as_pair(w.lang)?;
            let inf = inf_premises2(&w.premises, &v)?;
            let concl = eval_g2(&w.conclusion, &v)?;
            Ok(d.member(inf) && !d.member(concl))
        }
    }
}

fn falsifier_refutes_order(w: &NamedWitness, spec: &ValuationSpec) -> Result<bool, CatalogError> {
    match w.lang {
        Language::BiG | Language::Ginv => {
            let v = spec.valuation1()?;
            let inf = inf_premises1(&w.premises, &v, w.lang)?;
            let concl = eval1(&w.conclusion, &v, w.lang)?;
            Ok(inf > concl)
        }
        Language::Gsquare => {
            let v = spec.valuation2()?;
            let inf = inf_premises2(&w.premises, &v)?;
            let concl = eval_g2(&w.conclusion, &v)?;
            Ok(!inf.le_truth(concl))
        }
    }
}

fn falsifier_refutes_validity(
    w: &NamedWitness,
    spec: &ValuationSpec,
) -> Result<bool, CatalogError> {
    match w.lang {
        Language::BiG | Language::Ginv => {
            let v = spec.valuation1()?;
            Ok(!eval1(&w.conclusion, &v, w.lang)?.is_one())
        }
        Language::Gsquare => {
            let v = spec.valuation2()?;
            let got = eval_g2(&w.conclusion, &v)?;
            Ok(got != ValuePair::top())
        }
    }
}

/// Replays one named witness: recomputes the verdict and, where a concrete
/// falsifying valuation is recorded, re-evaluates it directly.
pub fn run_named_witness(w: &NamedWitness) -> Result<WitnessOutcome, CatalogError> {
    let limits = Limits::default();
    let (passed, detail) = match &w.check {
        NamedCheck::Entailment {
            filter,
            expect_holds,
            falsifier,
        } => {
            let filter = parse_filter(filter);
            let verdict = decide_entailment(&w.premises, &w.conclusion, &filter, w.lang, &limits)?;
            let mut ok = verdict.holds == *expect_holds;
            let mut detail = format!(
                "entailment over {filter}: expected {}, engine says {}",
                verdict_word(*expect_holds),
                verdict_word(verdict.holds)
            );
            if let Some(spec) = falsifier {
                let refutes = falsifier_refutes_filter(w, &filter, spec)?;
                ok = ok && refutes;
                if !refutes {
                    detail.push_str("; recorded falsifier does not refute");
                }
            }
            (ok, detail)
        }
        NamedCheck::Order {
            expect_holds,
            falsifier,
        } => {
            let verdict = decide_order_entailment(&w.premises, &w.conclusion, w.lang, &limits)?;
            let mut ok = verdict.holds == *expect_holds;
            let mut detail = format!(
                "order entailment: expected {}, engine says {}",
                verdict_word(*expect_holds),
                verdict_word(verdict.holds)
            );
            if let Some(spec) = falsifier {
                let refutes = falsifier_refutes_order(w, spec)?;
                ok = ok && refutes;
                if !refutes {
                    detail.push_str("; recorded falsifier does not refute");
                }
            }
            (ok, detail)
        }
        NamedCheck::Valid {
            expect_valid,
            falsifier,
        } => {
            let verdict = check_validity(&w.conclusion, w.lang, &limits)?;
            let mut ok = verdict.holds == *expect_valid;
            let mut detail = format!(
                "validity: expected {}, engine says {}",
                if *expect_valid { "valid" } else { "invalid" },
                if verdict.holds { "valid" } else { "invalid" }
            );
            if let Some(spec) = falsifier {
                let refutes = falsifier_refutes_validity(w, spec)?;
                ok = ok && refutes;
                if !refutes {
                    detail.push_str("; recorded falsifier does not refute");
                }
            }
            (ok, detail)
        }
        NamedCheck::Eval {
            valuation,
            expected,
        } => match w.lang {
            Language::BiG | Language::Ginv => {
                let v = valuation.valuation1()?;
                let got = eval1(&w.conclusion, &v, w.lang)?;
                let want: UnitRational = expected.parse()?;
                (got == want, format!("evaluates to {got}, expected {want}"))
            }
            Language::Gsquare => {
                let v = valuation.valuation2()?;
                let got = eval_g2(&w.conclusion, &v)?;
                (
                    format!("{got}") == *expected,
                    format!("evaluates to {got}, expected {expected}"),
                )
            }
        },
    };
    Ok(WitnessOutcome {
        id: w.id,
        passed,
        detail,
    })
}

fn verdict_word(holds: bool) -> &'static str {
    if holds {
        "holds"
    } else {
        "fails"
    }
}

/// Replays the whole curated regression list.
pub fn run_named_witnesses() -> Result<Vec<WitnessOutcome>, CatalogError> {
    named_witnesses().iter().map(run_named_witness).collect()
}
