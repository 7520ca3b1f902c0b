//! Comparator sites, statement-context classification, and the single-flip
//! mutation that manufactures balanced (likely-correct, likely-buggy) pairs.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, BufRead, Write};

use base64::engine::general_purpose::STANDARD as B64;
use base64::Engine;
use rand::Rng;
use thiserror::Error;

use crate::ast::{AstNode, MethodUnit, NodeKind, Span};

/// The four relational operators subject to off-by-one flips.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Comparator {
    Less,
    LessEquals,
    Greater,
    GreaterEquals,
}

impl Comparator {
    pub const ALL: [Comparator; 4] = [
        Comparator::Less,
        Comparator::LessEquals,
        Comparator::Greater,
        Comparator::GreaterEquals,
    ];

    pub fn from_surface(op: &str) -> Option<Comparator> {
        match op {
            "<" => Some(Comparator::Less),
            "<=" => Some(Comparator::LessEquals),
            ">" => Some(Comparator::Greater),
            ">=" => Some(Comparator::GreaterEquals),
            _ => None,
        }
    }

    pub fn surface(&self) -> &'static str {
        match self {
            Comparator::Less => "<",
            Comparator::LessEquals => "<=",
            Comparator::Greater => ">",
            Comparator::GreaterEquals => ">=",
        }
    }

    /// Lower-camel name used in context-type labels and reports.
    pub fn label(&self) -> &'static str {
        match self {
            Comparator::Less => "less",
            Comparator::LessEquals => "lessEquals",
            Comparator::Greater => "greater",
            Comparator::GreaterEquals => "greaterEquals",
        }
    }

    pub fn from_label(label: &str) -> Option<Comparator> {
        Comparator::ALL.into_iter().find(|c| c.label() == label)
    }
}

impl fmt::Display for Comparator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The off-by-one sibling: a fixed-point-free involution.
pub fn flip(c: Comparator) -> Comparator {
    match c {
        Comparator::Less => Comparator::LessEquals,
        Comparator::LessEquals => Comparator::Less,
        Comparator::Greater => Comparator::GreaterEquals,
        Comparator::GreaterEquals => Comparator::Greater,
    }
}

/// The statement context a comparator occurs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StatementKind {
    If,
    For,
    While,
    Do,
    Return,
    Ternary,
    Method,
    Assert,
    VariableDeclarator,
    Assign,
    Expression,
    ObjectCreation,
}

impl StatementKind {
    pub const ALL: [StatementKind; 12] = [
        StatementKind::If,
        StatementKind::For,
        StatementKind::While,
        StatementKind::Do,
        StatementKind::Return,
        StatementKind::Ternary,
        StatementKind::Method,
        StatementKind::Assert,
        StatementKind::VariableDeclarator,
        StatementKind::Assign,
        StatementKind::Expression,
        StatementKind::ObjectCreation,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            StatementKind::If => "IF",
            StatementKind::For => "FOR",
            StatementKind::While => "WHILE",
            StatementKind::Do => "DO",
            StatementKind::Return => "RETURN",
            StatementKind::Ternary => "TERNARY",
            StatementKind::Method => "METHOD",
            StatementKind::Assert => "ASSERT",
            StatementKind::VariableDeclarator => "VARIABLEDECLARATOR",
            StatementKind::Assign => "ASSIGN",
            StatementKind::Expression => "EXPRESSION",
            StatementKind::ObjectCreation => "OBJECTCREATION",
        }
    }

    pub fn from_label(label: &str) -> Option<StatementKind> {
        StatementKind::ALL.into_iter().find(|s| s.label() == label)
    }
}

impl fmt::Display for StatementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// (statement, comparator) pair; 48 distinct values, rendered `FORlessEquals`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ContextType {
    pub statement: StatementKind,
    pub comparator: Comparator,
}

impl ContextType {
    pub fn new(statement: StatementKind, comparator: Comparator) -> Self {
        ContextType {
            statement,
            comparator,
        }
    }

    pub fn parse(s: &str) -> Option<ContextType> {
        // Statement labels are upper-case; the comparator starts at the first
        // lower-case character.
        let split = s.find(|c: char| c.is_ascii_lowercase())?;
        Some(ContextType {
            statement: StatementKind::from_label(&s[..split])?,
            comparator: Comparator::from_label(&s[split..])?,
        })
    }
}

impl fmt::Display for ContextType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.statement.label(), self.comparator.label())
    }
}

/// One comparator occurrence inside a method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparatorSite {
    /// Child-index path from the method root to the `BinaryExpr`.
    pub node_path: Vec<usize>,
    pub comparator: Comparator,
    pub statement: StatementKind,
    /// Byte interval of the operator lexeme within the method source.
    pub span: Span,
}

/// Mutation provenance of a labeled record.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Original,
    Mutated { from: Comparator },
}

/// One labeled corpus record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledMethod {
    /// Stable id derived from file path, method name and per-file ordinal.
    pub id: String,
    pub source: String,
    /// 0 = likely-correct, 1 = likely-buggy.
    pub label: u8,
    pub context_type: ContextType,
    pub origin: Origin,
}

/// Every `<`, `<=`, `>`, `>=` binary expression, ordered by operator position.
pub fn find_comparator_sites(method: &MethodUnit) -> Vec<ComparatorSite> {
    let mut sites = Vec::new();
    let mut path = Vec::new();
    walk_sites(&method.root, method, &mut path, &mut sites);
    sites.sort_by_key(|s| s.span.start);
    sites
}

fn walk_sites(
    node: &AstNode,
    method: &MethodUnit,
    path: &mut Vec<usize>,
    out: &mut Vec<ComparatorSite>,
) {
    if node.kind == NodeKind::BinaryExpr {
        if let Some(op) = node.operator_token().and_then(Comparator::from_surface) {
            let op_leaf = node
                .children
                .iter()
                .find(|c| c.kind == NodeKind::Operator)
                .expect("binary expression carries its operator");
            out.push(ComparatorSite {
                node_path: path.clone(),
                comparator: op,
                statement: classify_statement(path, method),
                span: op_leaf.span,
            });
        }
    }
    for (i, c) in node.children.iter().enumerate() {
        path.push(i);
        walk_sites(c, method, path, out);
        path.pop();
    }
}

/// Maps a comparator node to its enclosing statement kind by walking upward,
/// skipping pure expression wrappers (parentheses, boolean connectives,
/// logical not). The first non-wrapper ancestor decides; anything unmapped
/// falls back to `EXPRESSION`.
pub fn classify_statement(site_node_path: &[usize], method: &MethodUnit) -> StatementKind {
    let mut depth = site_node_path.len();
    while depth > 0 {
        let parent = method
            .root
            .node_at(&site_node_path[..depth - 1])
            .expect("node path stays valid");
        let came_from = site_node_path[depth - 1];
        match parent.kind {
            NodeKind::EnclosedExpr => {}
            NodeKind::UnaryExpr if parent.operator_token() == Some("!") => {}
            NodeKind::BinaryExpr
                if matches!(parent.operator_token(), Some("&&" | "||" | "&" | "|" | "^")) => {}
            NodeKind::ForStmt => return StatementKind::For,
            NodeKind::IfStmt => return StatementKind::If,
            NodeKind::WhileStmt => return StatementKind::While,
            NodeKind::DoStmt => return StatementKind::Do,
            NodeKind::ReturnStmt => return StatementKind::Return,
            NodeKind::ConditionalExpr => return StatementKind::Ternary,
            NodeKind::AssertStmt => return StatementKind::Assert,
            NodeKind::AssignExpr => return StatementKind::Assign,
            NodeKind::MethodCallExpr => {
                if is_call_argument(parent, came_from) {
                    return StatementKind::Method;
                }
                return StatementKind::Expression;
            }
            NodeKind::ObjectCreationExpr => {
                if is_creation_argument(parent, came_from) {
                    return StatementKind::ObjectCreation;
                }
                return StatementKind::Expression;
            }
            // The name leaf cannot hold a comparator, so reaching a
            // declarator means we came out of its initializer.
            NodeKind::VariableDeclarator => return StatementKind::VariableDeclarator,
            _ => return StatementKind::Expression,
        }
        depth -= 1;
    }
    StatementKind::Expression
}

fn is_call_argument(call: &AstNode, child_index: usize) -> bool {
    // MethodCallExpr children: [scope?, SimpleName, arg...]
    let name_idx = call
        .children
        .iter()
        .position(|c| c.kind == NodeKind::SimpleName);
    matches!(name_idx, Some(n) if child_index > n)
}

fn is_creation_argument(creation: &AstNode, child_index: usize) -> bool {
    // ObjectCreationExpr children: [scope?, type, arg..., body members...]
    let type_idx = creation.children.iter().position(|c| {
        c.kind == NodeKind::ClassOrInterfaceType || c.kind == NodeKind::PrimitiveType
    });
    let first_member = creation
        .children
        .iter()
        .position(|c| {
            matches!(
                c.kind,
                NodeKind::MethodDeclaration
                    | NodeKind::FieldDeclaration
                    | NodeKind::InitializerDeclaration
                    | NodeKind::ClassOrInterfaceDeclaration
                    | NodeKind::EnumDeclaration
            )
        })
        .unwrap_or(creation.children.len());
    matches!(type_idx, Some(t) if child_index > t && child_index < first_member)
}

/// Splices the flipped operator into the source, replacing exactly the
/// operator span.
pub fn splice_flip(source: &str, site: &ComparatorSite) -> String {
    let mut out = String::with_capacity(source.len() + 1);
    out.push_str(&source[..site.span.start]);
    out.push_str(flip(site.comparator).surface());
    out.push_str(&source[site.span.end..]);
    out
}

/// Emits the (original, mutated) pair for one method, or `None` when the
/// method has no comparator. One site is chosen uniformly at random and only
/// that operator's bytes change. Both records carry the selected site's
/// context type: the original with the pre-mutation comparator, the mutated
/// with the post-mutation one.
pub fn mutate_method(
    method: &MethodUnit,
    id: &str,
    rng: &mut impl Rng,
) -> Option<(LabeledMethod, LabeledMethod)> {
    mutate_method_filtered(method, id, rng, None)
}

/// [`mutate_method`] with candidate sites restricted to one statement context.
pub fn mutate_method_filtered(
    method: &MethodUnit,
    id: &str,
    rng: &mut impl Rng,
    only_statement: Option<StatementKind>,
) -> Option<(LabeledMethod, LabeledMethod)> {
    let mut sites = find_comparator_sites(method);
    if let Some(filter) = only_statement {
        sites.retain(|s| s.statement == filter);
    }
    if sites.is_empty() {
        return None;
    }
    let site = &sites[rng.random_range(0..sites.len())];
    let mutated_source = splice_flip(&method.source, site);
    let original = LabeledMethod {
        id: format!("{id}#orig"),
        source: method.source.clone(),
        label: 0,
        context_type: ContextType::new(site.statement, site.comparator),
        origin: Origin::Original,
    };
    let mutated = LabeledMethod {
        id: format!("{id}#mut"),
        source: mutated_source,
        label: 1,
        context_type: ContextType::new(site.statement, flip(site.comparator)),
        origin: Origin::Mutated {
            from: site.comparator,
        },
    };
    Some((original, mutated))
}

/// Counts and percentages per comparator and per statement kind over the
/// original records only.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DistributionReport {
    pub total_originals: usize,
    pub by_comparator: BTreeMap<Comparator, usize>,
    pub by_statement: BTreeMap<StatementKind, usize>,
}

pub fn corpus_distribution<'a>(
    records: impl IntoIterator<Item = &'a LabeledMethod>,
) -> DistributionReport {
    let mut report = DistributionReport::default();
    for rec in records {
        if rec.origin != Origin::Original {
            continue;
        }
        report.total_originals += 1;
        *report
            .by_comparator
            .entry(rec.context_type.comparator)
            .or_default() += 1;
        *report
            .by_statement
            .entry(rec.context_type.statement)
            .or_default() += 1;
    }
    report
}

fn render_distribution_section(
    title: &str,
    rows: Vec<(&str, usize)>,
    total: f64,
    out: &mut String,
) {
    out.push_str(&format!("{title}\tcount\tpercent\n"));
    let mut rows = rows;
    rows.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(b.0)));
    for (name, count) in rows {
        out.push_str(&format!(
            "{name}\t{count}\t{:.2}%\n",
            100.0 * count as f64 / total
        ));
    }
}

impl DistributionReport {
    /// Two sections sorted by count descending.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let total = self.total_originals.max(1) as f64;
        render_distribution_section(
            "comparator",
            self.by_comparator
                .iter()
                .map(|(c, n)| (c.label(), *n))
                .collect(),
            total,
            &mut out,
        );
        out.push('\n');
        render_distribution_section(
            "statement",
            self.by_statement
                .iter()
                .map(|(s, n)| (s.label(), *n))
                .collect(),
            total,
            &mut out,
        );
        out.push_str(&format!("\ntotal originals\t{}\n", self.total_originals));
        out
    }
}

/// Labeled corpus line format: `id \t label \t context_type \t base64(source)`.
#[derive(Debug, Error)]
pub enum CorpusIoError {
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

pub fn write_labeled<W: Write>(
    mut w: W,
    records: impl IntoIterator<Item = impl std::borrow::Borrow<LabeledMethod>>,
) -> Result<(), CorpusIoError> {
    for rec in records {
        let rec = rec.borrow();
        writeln!(
            w,
            "{}\t{}\t{}\t{}",
            rec.id,
            rec.label,
            rec.context_type,
            B64.encode(rec.source.as_bytes())
        )?;
    }
    Ok(())
}

pub fn read_labeled<R: BufRead>(r: R) -> Result<Vec<LabeledMethod>, CorpusIoError> {
    let mut out = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        out.push(parse_labeled_line(&line, i + 1)?);
    }
    Ok(out)
}

fn parse_labeled_line(line: &str, line_no: usize) -> Result<LabeledMethod, CorpusIoError> {
    let bad = |message: &str| CorpusIoError::Malformed {
        line: line_no,
        message: message.to_string(),
    };
    let mut parts = line.split('\t');
    let id = parts.next().ok_or_else(|| bad("missing id"))?.to_string();
    let label: u8 = parts
        .next()
        .ok_or_else(|| bad("missing label"))?
        .parse()
        .map_err(|_| bad("label must be 0 or 1"))?;
    if label > 1 {
        return Err(bad("label must be 0 or 1"));
    }
    let context_type = ContextType::parse(parts.next().ok_or_else(|| bad("missing context type"))?)
        .ok_or_else(|| bad("unknown context type"))?;
    let source_b64 = parts.next().ok_or_else(|| bad("missing source"))?;
    if parts.next().is_some() {
        return Err(bad("too many fields"));
    }
    let source = String::from_utf8(B64.decode(source_b64).map_err(|_| bad("invalid base64"))?)
        .map_err(|_| bad("source is not UTF-8"))?;
    let origin = if label == 1 {
        Origin::Mutated {
            from: flip(context_type.comparator),
        }
    } else {
        Origin::Original
    };
    Ok(LabeledMethod {
        id,
        source,
        label,
        context_type,
        origin,
    })
}

#[cfg(test)]
mod tests;
