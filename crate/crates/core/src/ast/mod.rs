//! Method-level Java ASTs.
//!
//! The grammar is a Java subset chosen to cover ordinary production code:
//! class/interface/enum declarations, the usual statements, and the usual
//! expressions. Files using constructs outside the subset fail with
//! [`ParseError`] and are skipped by corpus ingestion rather than aborting it.
//!
//! Shape conventions, pinned here because everything downstream relies on them:
//!
//! - Node kinds follow JavaParser class names (`ForStmt`, `BinaryExpr`, ...).
//! - A node carries a raw-lexeme token iff it has no children. Structural
//!   nodes that happen to be childless (an empty `BlockStmt`, a bare
//!   `default:` switch entry) carry their raw source slice so the rule holds
//!   uniformly.
//! - Binary, unary and assignment expressions keep their operator as an
//!   `Operator` leaf child, in source position, so operators have spans.
//! - Punctuation (braces, parens, semicolons, commas) is not represented.
//! - Comments, annotations, package and import declarations are dropped.
//! - Generic type arguments are kept as nested type nodes; lambdas and method
//!   reference scopes are kept but lambda bodies are opaque leaves.
//! - Child spans are contained in the parent span, pairwise disjoint, and in
//!   source order. The one exception to "span covers every owned byte" is a
//!   C-style array declarator (`int a[]`), where the `ArrayType` wrapper
//!   reuses the element type's span because the brackets sit after the name.

mod lexer;
mod parser;

use std::fmt;

use thiserror::Error;

/// Half-open byte interval into the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn contains(&self, other: &Span) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    fn shifted(self, offset: usize) -> Span {
        Span::new(self.start - offset, self.end - offset)
    }
}

/// The closed node-kind inventory of the supported grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    CompilationUnit,
    ClassOrInterfaceDeclaration,
    EnumDeclaration,
    EnumConstantDeclaration,
    FieldDeclaration,
    MethodDeclaration,
    ConstructorDeclaration,
    InitializerDeclaration,
    Parameter,
    TypeParameter,
    Modifier,
    // Types
    ClassOrInterfaceType,
    PrimitiveType,
    VoidType,
    ArrayType,
    WildcardType,
    UnionType,
    // Statements
    BlockStmt,
    IfStmt,
    ForStmt,
    ForEachStmt,
    WhileStmt,
    DoStmt,
    ReturnStmt,
    AssertStmt,
    ExpressionStmt,
    ThrowStmt,
    TryStmt,
    CatchClause,
    SwitchStmt,
    SwitchEntry,
    BreakStmt,
    ContinueStmt,
    SynchronizedStmt,
    LabeledStmt,
    EmptyStmt,
    ExplicitConstructorInvocationStmt,
    LocalClassDeclarationStmt,
    // Expressions
    VariableDeclarationExpr,
    VariableDeclarator,
    BinaryExpr,
    UnaryExpr,
    AssignExpr,
    ConditionalExpr,
    EnclosedExpr,
    CastExpr,
    InstanceOfExpr,
    MethodCallExpr,
    ObjectCreationExpr,
    FieldAccessExpr,
    ArrayAccessExpr,
    ArrayCreationExpr,
    ArrayInitializerExpr,
    LambdaExpr,
    MethodReferenceExpr,
    ClassExpr,
    NameExpr,
    ThisExpr,
    SuperExpr,
    SimpleName,
    Operator,
    // Literals
    IntegerLiteralExpr,
    LongLiteralExpr,
    DoubleLiteralExpr,
    CharLiteralExpr,
    StringLiteralExpr,
    BooleanLiteralExpr,
    NullLiteralExpr,
}

impl NodeKind {
    pub fn name(&self) -> &'static str {
        match self {
            NodeKind::CompilationUnit => "CompilationUnit",
            NodeKind::ClassOrInterfaceDeclaration => "ClassOrInterfaceDeclaration",
            NodeKind::EnumDeclaration => "EnumDeclaration",
            NodeKind::EnumConstantDeclaration => "EnumConstantDeclaration",
            NodeKind::FieldDeclaration => "FieldDeclaration",
            NodeKind::MethodDeclaration => "MethodDeclaration",
            NodeKind::ConstructorDeclaration => "ConstructorDeclaration",
            NodeKind::InitializerDeclaration => "InitializerDeclaration",
            NodeKind::Parameter => "Parameter",
            NodeKind::TypeParameter => "TypeParameter",
            NodeKind::Modifier => "Modifier",
            NodeKind::ClassOrInterfaceType => "ClassOrInterfaceType",
            NodeKind::PrimitiveType => "PrimitiveType",
            NodeKind::VoidType => "VoidType",
            NodeKind::ArrayType => "ArrayType",
            NodeKind::WildcardType => "WildcardType",
            NodeKind::UnionType => "UnionType",
            NodeKind::BlockStmt => "BlockStmt",
            NodeKind::IfStmt => "IfStmt",
            NodeKind::ForStmt => "ForStmt",
            NodeKind::ForEachStmt => "ForEachStmt",
            NodeKind::WhileStmt => "WhileStmt",
            NodeKind::DoStmt => "DoStmt",
            NodeKind::ReturnStmt => "ReturnStmt",
            NodeKind::AssertStmt => "AssertStmt",
            NodeKind::ExpressionStmt => "ExpressionStmt",
            NodeKind::ThrowStmt => "ThrowStmt",
            NodeKind::TryStmt => "TryStmt",
            NodeKind::CatchClause => "CatchClause",
            NodeKind::SwitchStmt => "SwitchStmt",
            NodeKind::SwitchEntry => "SwitchEntry",
            NodeKind::BreakStmt => "BreakStmt",
            NodeKind::ContinueStmt => "ContinueStmt",
            NodeKind::SynchronizedStmt => "SynchronizedStmt",
            NodeKind::LabeledStmt => "LabeledStmt",
            NodeKind::EmptyStmt => "EmptyStmt",
            NodeKind::ExplicitConstructorInvocationStmt => "ExplicitConstructorInvocationStmt",
            NodeKind::LocalClassDeclarationStmt => "LocalClassDeclarationStmt",
            NodeKind::VariableDeclarationExpr => "VariableDeclarationExpr",
            NodeKind::VariableDeclarator => "VariableDeclarator",
            NodeKind::BinaryExpr => "BinaryExpr",
            NodeKind::UnaryExpr => "UnaryExpr",
            NodeKind::AssignExpr => "AssignExpr",
            NodeKind::ConditionalExpr => "ConditionalExpr",
            NodeKind::EnclosedExpr => "EnclosedExpr",
            NodeKind::CastExpr => "CastExpr",
            NodeKind::InstanceOfExpr => "InstanceOfExpr",
            NodeKind::MethodCallExpr => "MethodCallExpr",
            NodeKind::ObjectCreationExpr => "ObjectCreationExpr",
            NodeKind::FieldAccessExpr => "FieldAccessExpr",
            NodeKind::ArrayAccessExpr => "ArrayAccessExpr",
            NodeKind::ArrayCreationExpr => "ArrayCreationExpr",
            NodeKind::ArrayInitializerExpr => "ArrayInitializerExpr",
            NodeKind::LambdaExpr => "LambdaExpr",
            NodeKind::MethodReferenceExpr => "MethodReferenceExpr",
            NodeKind::ClassExpr => "ClassExpr",
            NodeKind::NameExpr => "NameExpr",
            NodeKind::ThisExpr => "ThisExpr",
            NodeKind::SuperExpr => "SuperExpr",
            NodeKind::SimpleName => "SimpleName",
            NodeKind::Operator => "Operator",
            NodeKind::IntegerLiteralExpr => "IntegerLiteralExpr",
            NodeKind::LongLiteralExpr => "LongLiteralExpr",
            NodeKind::DoubleLiteralExpr => "DoubleLiteralExpr",
            NodeKind::CharLiteralExpr => "CharLiteralExpr",
            NodeKind::StringLiteralExpr => "StringLiteralExpr",
            NodeKind::BooleanLiteralExpr => "BooleanLiteralExpr",
            NodeKind::NullLiteralExpr => "NullLiteralExpr",
        }
    }
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One AST node. A node has a token iff it is a leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AstNode {
    pub kind: NodeKind,
    pub children: Vec<AstNode>,
    pub token: Option<String>,
    pub span: Span,
}

impl AstNode {
    pub(crate) fn leaf(kind: NodeKind, token: impl Into<String>, span: Span) -> Self {
        AstNode {
            kind,
            children: Vec::new(),
            token: Some(token.into()),
            span,
        }
    }

    pub(crate) fn inner(kind: NodeKind, children: Vec<AstNode>, span: Span) -> Self {
        debug_assert!(!children.is_empty());
        AstNode {
            kind,
            children,
            token: None,
            span,
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Follows a child-index path from this node.
    pub fn node_at(&self, path: &[usize]) -> Option<&AstNode> {
        let mut cur = self;
        for &i in path {
            cur = cur.children.get(i)?;
        }
        Some(cur)
    }

    /// Operator lexeme of a `BinaryExpr`/`UnaryExpr`/`AssignExpr` node.
    pub fn operator_token(&self) -> Option<&str> {
        self.children
            .iter()
            .find(|c| c.kind == NodeKind::Operator)
            .and_then(|c| c.token.as_deref())
    }

    fn shift_spans(&mut self, offset: usize) {
        self.span = self.span.shifted(offset);
        for c in &mut self.children {
            c.shift_spans(offset);
        }
    }
}

/// One parsed Java method: the unit of mutation, encoding, and prediction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodUnit {
    pub file_path: String,
    pub method_name: String,
    /// `MethodDeclaration` subtree with spans rebased so that
    /// `root.span == [0, source.len())`.
    pub root: AstNode,
    /// The method's source text slice.
    pub source: String,
    /// 1-based line of the method's first byte in the original file.
    pub start_line: usize,
}

/// Parse failure; callers skip the file and record the error.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("{file_path}:{position}: {message}")]
pub struct ParseError {
    pub file_path: String,
    /// Byte offset into the source text.
    pub position: usize,
    pub message: String,
}

/// Parses a compilation unit and returns its concrete methods in source order.
///
/// Methods inside nested and anonymous classes are included; bodyless
/// declarations (interface/abstract methods) are excluded. Constructors are
/// parsed but are not methods.
pub fn parse_file(source_text: &str, file_path: &str) -> Result<Vec<MethodUnit>, ParseError> {
    let unit = parse_compilation_unit(source_text, file_path)?;
    let mut methods = Vec::new();
    collect_methods(&unit, source_text, file_path, &mut methods);
    Ok(methods)
}

/// Parses the full compilation unit AST (exposed for structural tests).
pub fn parse_compilation_unit(source_text: &str, file_path: &str) -> Result<AstNode, ParseError> {
    parser::Parser::new(source_text, file_path)?.parse_compilation_unit()
}

/// Parses a standalone method declaration, e.g. a labeled-corpus record.
pub fn parse_method(source_text: &str, file_path: &str) -> Result<MethodUnit, ParseError> {
    let root = parser::Parser::new(source_text, file_path)?.parse_single_method()?;
    let name = method_name(&root).ok_or_else(|| ParseError {
        file_path: file_path.to_string(),
        position: root.span.start,
        message: "method declaration has no name".into(),
    })?;
    let mut root = root;
    let start = root.span.start;
    root.shift_spans(start);
    let source = source_text[start..start + root.span.end].to_string();
    Ok(MethodUnit {
        file_path: file_path.to_string(),
        method_name: name,
        root,
        source,
        start_line: line_of(source_text, start),
    })
}

fn collect_methods(node: &AstNode, text: &str, file_path: &str, out: &mut Vec<MethodUnit>) {
    if node.kind == NodeKind::MethodDeclaration && has_body(node) {
        if let Some(name) = method_name(node) {
            let mut root = node.clone();
            let start = root.span.start;
            root.shift_spans(start);
            out.push(MethodUnit {
                file_path: file_path.to_string(),
                method_name: name,
                source: text[start..start + root.span.end].to_string(),
                root,
                start_line: line_of(text, start),
            });
        }
    }
    for c in &node.children {
        collect_methods(c, text, file_path, out);
    }
}

fn has_body(method: &AstNode) -> bool {
    method
        .children
        .iter()
        .any(|c| c.kind == NodeKind::BlockStmt)
}

fn method_name(method: &AstNode) -> Option<String> {
    method
        .children
        .iter()
        .find(|c| c.kind == NodeKind::SimpleName)
        .and_then(|c| c.token.clone())
}

fn line_of(text: &str, byte: usize) -> usize {
    text[..byte].bytes().filter(|b| *b == b'\n').count() + 1
}

/// All leaf nodes in left-to-right source order.
pub fn terminals_in_order(root: &AstNode) -> Vec<&AstNode> {
    let mut out = Vec::new();
    fn walk<'a>(n: &'a AstNode, out: &mut Vec<&'a AstNode>) {
        if n.is_leaf() {
            out.push(n);
        } else {
            for c in &n.children {
                walk(c, out);
            }
        }
    }
    walk(root, &mut out);
    out
}

/// Whether a leaf is value-bearing: identifiers, literals, keyword operands
/// (`this`, `super`) and type names. Operators, modifiers, lambdas, method
/// references and childless structural nodes are not.
pub fn is_value_bearing(leaf: &AstNode) -> bool {
    leaf.is_leaf()
        && matches!(
            leaf.kind,
            NodeKind::NameExpr
                | NodeKind::SimpleName
                | NodeKind::ThisExpr
                | NodeKind::SuperExpr
                | NodeKind::PrimitiveType
                | NodeKind::VoidType
                | NodeKind::IntegerLiteralExpr
                | NodeKind::LongLiteralExpr
                | NodeKind::DoubleLiteralExpr
                | NodeKind::CharLiteralExpr
                | NodeKind::StringLiteralExpr
                | NodeKind::BooleanLiteralExpr
                | NodeKind::NullLiteralExpr
        )
}

/// Value-bearing leaves in source order: the terminal set for path extraction.
pub fn value_terminals(root: &AstNode) -> Vec<&AstNode> {
    terminals_in_order(root)
        .into_iter()
        .filter(|n| is_value_bearing(n))
        .collect()
}

#[cfg(test)]
mod tests;
