//! Bag-of-path-contexts encoding.
//!
//! A method becomes at most `max_contexts` integer triples
//! `(source_token_id, path_id, target_token_id)`. For every ordered pair of
//! distinct value-bearing terminals the path walks from the first terminal up
//! to their lowest common ancestor and down to the second, naming node kinds,
//! with `^` for upward steps and `_` for downward steps, e.g.
//! `NameExpr^BinaryExpr:Less_MethodCallExpr_NameExpr`.
//!
//! Operator-bearing nodes (binary, unary, assignment) are labeled with their
//! operator, so flipping a comparator changes every path through it — the
//! structural signal the classifier learns from.
//!
//! Path strings are hashed with Java's `String.hashCode` and both hashes and
//! normalized terminal tokens are mapped through a frequency-built
//! [`Vocabulary`] with ids 0 and 1 reserved for padding and unknowns. Hash
//! collisions are deliberately not resolved: two paths with equal hashes
//! share an id.

use std::collections::HashMap;
use std::io::{self, BufRead, Write};

use rand::seq::index::sample;
use rand::Rng;
use thiserror::Error;

use crate::ast::{value_terminals, AstNode, MethodUnit, NodeKind};
use crate::mutate::ContextType;

pub const PAD_ID: u32 = 0;
pub const UNK_ID: u32 = 1;
pub const DEFAULT_MAX_PATH_LENGTH: usize = 8;
pub const DEFAULT_MAX_PATH_WIDTH: usize = 2;
pub const DEFAULT_MAX_CONTEXTS: usize = 200;
pub const DEFAULT_MAX_TOKEN_VOCAB: usize = 100_000;
pub const DEFAULT_MAX_PATH_VOCAB: usize = 500_000;

/// No terminal pair survived the length/width limits; the caller drops the
/// method.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("method yields no path contexts")]
pub struct EmptyRepresentation;

/// Bit-exact Java `String.hashCode`: h_i = 31·h_{i-1} + c_i over UTF-16 code
/// units with 32-bit two's-complement wrapping.
pub fn java_string_hash(s: &str) -> i32 {
    let mut h: i32 = 0;
    for unit in s.encode_utf16() {
        h = h.wrapping_mul(31).wrapping_add(i32::from(unit));
    }
    h
}

/// Normalizes a value-bearing lexeme: identifiers split at camelCase and
/// snake_case boundaries, lowercased, joined with `|`; string and char
/// literals collapse to `STR`; numeric literals stay verbatim. Never empty.
pub fn normalize_terminal(raw_lexeme: &str) -> String {
    let first = raw_lexeme.chars().next();
    match first {
        Some('"') | Some('\'') => "STR".to_string(),
        Some(c) if c.is_ascii_digit() => raw_lexeme.to_string(),
        Some('.') if raw_lexeme.len() > 1 => raw_lexeme.to_string(), // `.5`
        _ => {
            let parts = split_subtokens(raw_lexeme);
            if parts.is_empty() {
                raw_lexeme.to_lowercase()
            } else {
                parts.join("|")
            }
        }
    }
}

fn split_subtokens(ident: &str) -> Vec<String> {
    let chars: Vec<char> = ident.chars().collect();
    let mut words: Vec<String> = Vec::new();
    let mut cur = String::new();
    for (i, &c) in chars.iter().enumerate() {
        if c == '_' || c == '$' {
            if !cur.is_empty() {
                words.push(cur.clone());
                cur.clear();
            }
            continue;
        }
        if c.is_uppercase() {
            let prev_lower = i > 0 && chars[i - 1].is_lowercase();
            let next_lower = chars.get(i + 1).is_some_and(|n| n.is_lowercase());
            // Break before `Case` in camelCase and before `Parser` in
            // XMLParser.
            if !cur.is_empty() && (prev_lower || next_lower) {
                words.push(cur.clone());
                cur.clear();
            }
        }
        cur.extend(c.to_lowercase());
    }
    if !cur.is_empty() {
        words.push(cur);
    }
    words
}

/// Node label used inside path strings; operator-bearing kinds carry their
/// operator name (`BinaryExpr:Less`).
pub fn path_node_label(node: &AstNode) -> String {
    match node.kind {
        NodeKind::BinaryExpr | NodeKind::AssignExpr => {
            match node.operator_token().and_then(binary_operator_name) {
                Some(op) => format!("{}:{}", node.kind.name(), op),
                None => node.kind.name().to_string(),
            }
        }
        NodeKind::UnaryExpr => {
            let prefix = node
                .children
                .first()
                .is_some_and(|c| c.kind == NodeKind::Operator);
            match node
                .operator_token()
                .map(|t| unary_operator_name(t, prefix))
            {
                Some(op) => format!("{}:{}", node.kind.name(), op),
                None => node.kind.name().to_string(),
            }
        }
        _ => node.kind.name().to_string(),
    }
}

fn binary_operator_name(op: &str) -> Option<&'static str> {
    Some(match op {
        "<" => "Less",
        "<=" => "LessEquals",
        ">" => "Greater",
        ">=" => "GreaterEquals",
        "==" => "Equals",
        "!=" => "NotEquals",
        "&&" => "And",
        "||" => "Or",
        "&" => "BinaryAnd",
        "|" => "BinaryOr",
        "^" => "Xor",
        "<<" => "LeftShift",
        ">>" => "SignedRightShift",
        ">>>" => "UnsignedRightShift",
        "+" => "Plus",
        "-" => "Minus",
        "*" => "Multiply",
        "/" => "Divide",
        "%" => "Remainder",
        "=" => "Assign",
        "+=" => "PlusAssign",
        "-=" => "MinusAssign",
        "*=" => "MultiplyAssign",
        "/=" => "DivideAssign",
        "&=" => "AndAssign",
        "|=" => "OrAssign",
        "^=" => "XorAssign",
        "%=" => "RemainderAssign",
        "<<=" => "LeftShiftAssign",
        ">>=" => "SignedRightShiftAssign",
        ">>>=" => "UnsignedRightShiftAssign",
        _ => return None,
    })
}

fn unary_operator_name(op: &str, prefix: bool) -> &'static str {
    match (op, prefix) {
        ("+", _) => "Plus",
        ("-", _) => "Minus",
        ("!", _) => "Not",
        ("~", _) => "BitwiseComplement",
        ("++", true) => "PreIncrement",
        ("++", false) => "PostIncrement",
        ("--", true) => "PreDecrement",
        ("--", false) => "PostDecrement",
        _ => "Unknown",
    }
}

/// One extracted path context before vocabulary mapping. Terminal indices are
/// positions in the method's value-bearing terminal list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RawPathContext {
    pub source_index: usize,
    pub target_index: usize,
    pub path: String,
}

/// Enumerates every unordered terminal pair (emitted with source position
/// `i < j`) whose connecting path satisfies the limits; sorted by `(i, j)`.
/// Width is the child-index distance between the two LCA children the path
/// descends through.
pub fn extract_paths(
    method: &MethodUnit,
    max_path_length: usize,
    max_path_width: usize,
) -> Result<Vec<RawPathContext>, EmptyRepresentation> {
    let mut out = Vec::new();
    let mut counter = 0usize;
    // For each subtree: the value-bearing leaves under it, each with its
    // label chain from just above the leaf up to just below the subtree root.
    collect_and_combine(
        &method.root,
        max_path_length,
        max_path_width,
        &mut counter,
        &mut out,
    );
    if out.is_empty() {
        return Err(EmptyRepresentation);
    }
    out.sort();
    Ok(out)
}

struct LeafChain {
    leaf_index: usize,
    leaf_label: &'static str,
    /// Node labels from the leaf's parent upward, excluding the current root.
    chain: Vec<String>,
}

fn collect_and_combine(
    node: &AstNode,
    max_len: usize,
    max_width: usize,
    counter: &mut usize,
    out: &mut Vec<RawPathContext>,
) -> Vec<LeafChain> {
    if node.is_leaf() {
        if crate::ast::is_value_bearing(node) {
            let idx = *counter;
            *counter += 1;
            return vec![LeafChain {
                leaf_index: idx,
                leaf_label: node.kind.name(),
                chain: Vec::new(),
            }];
        }
        return Vec::new();
    }

    let per_child: Vec<Vec<LeafChain>> = node
        .children
        .iter()
        .map(|c| collect_and_combine(c, max_len, max_width, counter, out))
        .collect();

    // Pairs whose lowest common ancestor is this node.
    let here = path_node_label(node);
    for ci in 0..per_child.len() {
        for cj in (ci + 1)..per_child.len() {
            if cj - ci > max_width {
                break;
            }
            for a in &per_child[ci] {
                for b in &per_child[cj] {
                    // leaf + up chain + LCA + down chain + leaf
                    let node_count = a.chain.len() + b.chain.len() + 3;
                    if node_count > max_len {
                        continue;
                    }
                    let mut path = String::with_capacity(64);
                    path.push_str(a.leaf_label);
                    for label in &a.chain {
                        path.push('^');
                        path.push_str(label);
                    }
                    path.push('^');
                    path.push_str(&here);
                    for label in b.chain.iter().rev() {
                        path.push('_');
                        path.push_str(label);
                    }
                    path.push('_');
                    path.push_str(b.leaf_label);
                    out.push(RawPathContext {
                        source_index: a.leaf_index,
                        target_index: b.leaf_index,
                        path,
                    });
                }
            }
        }
    }

    // Hoist the chains one level, pruning those already too long to ever fit.
    let mut hoisted = Vec::new();
    for leaves in per_child {
        for mut lc in leaves {
            if lc.chain.len() + 3 > max_len {
                continue;
            }
            lc.chain.push(here.clone());
            hoisted.push(lc);
        }
    }
    hoisted
}

/// Token and path-hash dictionaries with reserved PAD (0) and UNK (1) ids.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Vocabulary {
    pub token_to_id: HashMap<String, u32>,
    pub path_to_id: HashMap<i32, u32>,
}

impl Vocabulary {
    /// Total token table size including the two reserved ids.
    pub fn token_vocab_size(&self) -> usize {
        self.token_to_id.len() + 2
    }

    pub fn path_vocab_size(&self) -> usize {
        self.path_to_id.len() + 2
    }

    pub fn token_id(&self, token: &str) -> u32 {
        self.token_to_id.get(token).copied().unwrap_or(UNK_ID)
    }

    pub fn path_id(&self, hash: i32) -> u32 {
        self.path_to_id.get(&hash).copied().unwrap_or(UNK_ID)
    }
}

/// Builds the vocabulary from extracted training methods: entries are kept
/// most-frequent first up to the caps, ties broken by lexicographic token /
/// numeric hash order, and ids assigned in that order starting at 2.
pub fn build_vocabulary(
    extracted: impl IntoIterator<Item = (Vec<String>, Vec<i32>)>,
    max_token_vocab: usize,
    max_path_vocab: usize,
) -> Vocabulary {
    let mut token_counts: HashMap<String, u64> = HashMap::new();
    let mut path_counts: HashMap<i32, u64> = HashMap::new();
    for (tokens, hashes) in extracted {
        for t in tokens {
            *token_counts.entry(t).or_default() += 1;
        }
        for h in hashes {
            *path_counts.entry(h).or_default() += 1;
        }
    }
    let mut tokens: Vec<(String, u64)> = token_counts.into_iter().collect();
    tokens.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    tokens.truncate(max_token_vocab);
    let mut paths: Vec<(i32, u64)> = path_counts.into_iter().collect();
    paths.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    paths.truncate(max_path_vocab);

    Vocabulary {
        token_to_id: tokens
            .into_iter()
            .enumerate()
            .map(|(i, (t, _))| (t, i as u32 + 2))
            .collect(),
        path_to_id: paths
            .into_iter()
            .enumerate()
            .map(|(i, (h, _))| (h, i as u32 + 2))
            .collect(),
    }
}

/// Normalized tokens and path hashes of one method, the unit vocabulary
/// building counts over.
pub fn extract_for_vocab(
    method: &MethodUnit,
    max_path_length: usize,
    max_path_width: usize,
) -> (Vec<String>, Vec<i32>) {
    let terminals = value_terminals(&method.root);
    let contexts = extract_paths(method, max_path_length, max_path_width).unwrap_or_default();
    let mut tokens = Vec::new();
    let mut hashes = Vec::with_capacity(contexts.len());
    for c in &contexts {
        tokens.push(normalize_terminal(token_of(&terminals, c.source_index)));
        tokens.push(normalize_terminal(token_of(&terminals, c.target_index)));
        hashes.push(java_string_hash(&c.path));
    }
    (tokens, hashes)
}

fn token_of<'a>(terminals: &'a [&AstNode], idx: usize) -> &'a str {
    terminals[idx]
        .token
        .as_deref()
        .expect("value terminals are leaves")
}

/// The model's unit of input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathContextTriple {
    pub source_token_id: u32,
    pub path_id: u32,
    pub target_token_id: u32,
}

/// One encoded example: id, label, context type and 1..=max_contexts triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedExample {
    pub id: String,
    pub label: u8,
    pub context_type: ContextType,
    pub contexts: Vec<PathContextTriple>,
}

/// Encodes a method against a fixed vocabulary. When more than `max_contexts`
/// triples exist, a uniform sample without replacement is kept, in original
/// order.
pub fn encode_method(
    method: &MethodUnit,
    vocab: &Vocabulary,
    max_contexts: usize,
    max_path_length: usize,
    max_path_width: usize,
    rng: &mut impl Rng,
) -> Result<Vec<PathContextTriple>, EmptyRepresentation> {
    let terminals = value_terminals(&method.root);
    let contexts = extract_paths(method, max_path_length, max_path_width)?;
    let mut triples: Vec<PathContextTriple> = contexts
        .iter()
        .map(|c| PathContextTriple {
            source_token_id: vocab
                .token_id(&normalize_terminal(token_of(&terminals, c.source_index))),
            path_id: vocab.path_id(java_string_hash(&c.path)),
            target_token_id: vocab
                .token_id(&normalize_terminal(token_of(&terminals, c.target_index))),
        })
        .collect();
    if triples.len() > max_contexts {
        let mut keep: Vec<usize> = sample(rng, triples.len(), max_contexts).into_vec();
        keep.sort_unstable();
        triples = keep.into_iter().map(|i| triples[i]).collect();
    }
    Ok(triples)
}

// ---------------------------------------------------------------------------
// File formats
// ---------------------------------------------------------------------------

#[derive(Debug, Error)]
pub enum VocabIoError {
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("vocabulary file line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// Writes `token-vocab <n>` / `path-vocab <m>` sections. `n` and `m` are the
/// table sizes including the reserved PAD/UNK ids, whose rows are implicit;
/// explicit rows are `id<TAB>entry` with dense ids starting at 2, in id order.
pub fn write_vocabulary<W: Write>(mut w: W, vocab: &Vocabulary) -> Result<(), VocabIoError> {
    writeln!(w, "token-vocab {}", vocab.token_vocab_size())?;
    let mut tokens: Vec<(&String, &u32)> = vocab.token_to_id.iter().collect();
    tokens.sort_by_key(|(_, id)| **id);
    for (token, id) in tokens {
        writeln!(w, "{id}\t{token}")?;
    }
    writeln!(w, "path-vocab {}", vocab.path_vocab_size())?;
    let mut paths: Vec<(&i32, &u32)> = vocab.path_to_id.iter().collect();
    paths.sort_by_key(|(_, id)| **id);
    for (hash, id) in paths {
        writeln!(w, "{id}\t{hash}")?;
    }
    Ok(())
}

pub fn read_vocabulary<R: BufRead>(r: R) -> Result<Vocabulary, VocabIoError> {
    let mut vocab = Vocabulary::default();
    let mut lines = r.lines().enumerate();
    let bad = |line: usize, message: &str| VocabIoError::Malformed {
        line: line + 1,
        message: message.to_string(),
    };

    let (i, header) = lines
        .next()
        .ok_or_else(|| bad(0, "empty vocabulary file"))
        .and_then(|(i, l)| Ok((i, l?)))?;
    let token_count: usize = header
        .strip_prefix("token-vocab ")
        .and_then(|n| n.parse().ok())
        .ok_or_else(|| bad(i, "expected 'token-vocab <n>' header"))?;

    let mut path_count = None;
    for (i, line) in &mut lines {
        let line = line?;
        if let Some(n) = line.strip_prefix("path-vocab ") {
            path_count = Some(
                n.parse::<usize>()
                    .map_err(|_| bad(i, "bad path-vocab count"))?,
            );
            break;
        }
        let (id, token) = line
            .split_once('\t')
            .ok_or_else(|| bad(i, "expected id<TAB>token"))?;
        let id: u32 = id.parse().map_err(|_| bad(i, "bad id"))?;
        if id as usize != vocab.token_to_id.len() + 2 {
            return Err(bad(i, "token ids must be dense and ordered"));
        }
        vocab.token_to_id.insert(token.to_string(), id);
    }
    if vocab.token_vocab_size() != token_count {
        return Err(bad(0, "token count does not match header"));
    }
    let path_count = path_count.ok_or_else(|| bad(0, "missing 'path-vocab' header"))?;

    for (i, line) in &mut lines {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        let (id, hash) = line
            .split_once('\t')
            .ok_or_else(|| bad(i, "expected id<TAB>hash"))?;
        let id: u32 = id.parse().map_err(|_| bad(i, "bad id"))?;
        if id as usize != vocab.path_to_id.len() + 2 {
            return Err(bad(i, "path ids must be dense and ordered"));
        }
        vocab
            .path_to_id
            .insert(hash.parse().map_err(|_| bad(i, "bad hash"))?, id);
    }
    if vocab.path_vocab_size() != path_count {
        return Err(bad(0, "path count does not match header"));
    }
    Ok(vocab)
}

#[derive(Debug, Error)]
pub enum DatasetIoError {
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("dataset line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// One example per line:
/// `id<TAB>label<TAB>context_type<TAB>s,p,t s,p,t ...`
pub fn write_dataset<W: Write>(
    mut w: W,
    examples: impl IntoIterator<Item = impl std::borrow::Borrow<EncodedExample>>,
) -> Result<(), DatasetIoError> {
    for ex in examples {
        let ex = ex.borrow();
        write!(w, "{}\t{}\t{}\t", ex.id, ex.label, ex.context_type)?;
        for (i, t) in ex.contexts.iter().enumerate() {
            if i > 0 {
                write!(w, " ")?;
            }
            write!(
                w,
                "{},{},{}",
                t.source_token_id, t.path_id, t.target_token_id
            )?;
        }
        writeln!(w)?;
    }
    Ok(())
}

pub fn read_dataset<R: BufRead>(r: R) -> Result<Vec<EncodedExample>, DatasetIoError> {
    let mut out = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        out.push(parse_dataset_line(&line, i + 1)?);
    }
    Ok(out)
}

fn parse_dataset_line(line: &str, line_no: usize) -> Result<EncodedExample, DatasetIoError> {
    let bad = |message: String| DatasetIoError::Malformed {
        line: line_no,
        message,
    };
    let mut parts = line.split('\t');
    let id = parts
        .next()
        .ok_or_else(|| bad("missing id".into()))?
        .to_string();
    let label: u8 = parts
        .next()
        .and_then(|l| l.parse().ok())
        .filter(|l| *l <= 1)
        .ok_or_else(|| bad("label must be 0 or 1".into()))?;
    let context_type = parts
        .next()
        .and_then(ContextType::parse)
        .ok_or_else(|| bad("unknown context type".into()))?;
    let triples_field = parts.next().ok_or_else(|| bad("missing contexts".into()))?;
    if parts.next().is_some() {
        return Err(bad("too many fields".into()));
    }
    let mut contexts = Vec::new();
    for triple in triples_field.split(' ') {
        if triple.is_empty() {
            continue;
        }
        let ids: Vec<u32> = triple
            .split(',')
            .map(|x| x.parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad(format!("bad triple '{triple}'")))?;
        if ids.len() != 3 {
            return Err(bad(format!("triple '{triple}' must have 3 ids")));
        }
        contexts.push(PathContextTriple {
            source_token_id: ids[0],
            path_id: ids[1],
            target_token_id: ids[2],
        });
    }
    if contexts.is_empty() {
        return Err(bad("example has no contexts".into()));
    }
    Ok(EncodedExample {
        id,
        label,
        context_type,
        contexts,
    })
}

#[cfg(test)]
mod tests;
