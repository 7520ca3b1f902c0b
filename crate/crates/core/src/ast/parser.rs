//! Recursive-descent parser for the supported Java subset.

use super::lexer::{lex, Tok, TokKind};
use super::{AstNode, NodeKind, ParseError, Span};

const MAX_DEPTH: usize = 256;

const MODIFIERS: &[&str] = &[
    "public",
    "protected",
    "private",
    "static",
    "final",
    "abstract",
    "native",
    "synchronized",
    "transient",
    "volatile",
    "strictfp",
    "default",
];

const PRIMITIVES: &[&str] = &[
    "boolean", "byte", "short", "int", "long", "char", "float", "double",
];

#[derive(Clone, Copy)]
struct Mark {
    pos: usize,
    shrinks: usize,
}

pub(crate) struct Parser<'a> {
    src: &'a str,
    file_path: &'a str,
    toks: Vec<Tok<'a>>,
    pos: usize,
    depth: usize,
    // Undo log for `>`-token splits, so speculation can backtrack cleanly.
    shrink_log: Vec<(usize, Tok<'a>)>,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    pub fn new(src: &'a str, file_path: &'a str) -> PResult<Self> {
        Ok(Parser {
            src,
            file_path,
            toks: lex(src, file_path)?,
            pos: 0,
            depth: 0,
            shrink_log: Vec::new(),
        })
    }

    pub fn parse_compilation_unit(mut self) -> PResult<AstNode> {
        let start = self.cur().span.start;
        // package and import declarations are consumed but not represented.
        self.skip_annotations()?;
        if self.cur().is_ident("package") {
            self.advance();
            self.skip_qualified_name()?;
            self.expect_punct(";")?;
        }
        while self.cur().is_ident("import") {
            self.advance();
            if self.cur().is_ident("static") {
                self.advance();
            }
            self.skip_qualified_name()?;
            if self.cur().is(".") {
                self.advance();
                self.expect_punct("*")?;
            }
            self.expect_punct(";")?;
        }
        let mut types = Vec::new();
        while self.cur().kind != TokKind::Eof {
            if self.cur().is(";") {
                self.advance();
                continue;
            }
            types.push(self.parse_type_declaration()?);
        }
        if types.is_empty() {
            return Ok(AstNode::leaf(
                NodeKind::CompilationUnit,
                self.src,
                Span::new(0, self.src.len()),
            ));
        }
        let _ = start;
        Ok(AstNode::inner(
            NodeKind::CompilationUnit,
            types,
            Span::new(0, self.src.len()),
        ))
    }

    pub fn parse_single_method(mut self) -> PResult<AstNode> {
        let method = self
            .parse_member(None)?
            .ok_or_else(|| self.error("expected a method"))?;
        if method.kind != NodeKind::MethodDeclaration {
            return Err(self.error("expected a method declaration"));
        }
        if self.cur().kind != TokKind::Eof {
            return Err(self.error("trailing input after method"));
        }
        Ok(method)
    }

    // ------------------------------------------------------------------
    // Token plumbing
    // ------------------------------------------------------------------

    fn cur(&self) -> Tok<'a> {
        self.toks[self.pos]
    }

    fn peek(&self, n: usize) -> Tok<'a> {
        let i = (self.pos + n).min(self.toks.len() - 1);
        self.toks[i]
    }

    fn advance(&mut self) -> Tok<'a> {
        let t = self.toks[self.pos];
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, msg: &str) -> ParseError {
        let t = self.cur();
        let what = if t.kind == TokKind::Eof {
            "end of input".to_string()
        } else {
            format!("'{}'", t.text)
        };
        ParseError {
            file_path: self.file_path.to_string(),
            position: t.span.start,
            message: format!("{msg}, found {what}"),
        }
    }

    fn expect_punct(&mut self, p: &str) -> PResult<Tok<'a>> {
        if self.cur().is(p) {
            Ok(self.advance())
        } else {
            Err(self.error(&format!("expected '{p}'")))
        }
    }

    fn expect_ident(&mut self) -> PResult<Tok<'a>> {
        if self.cur().kind == TokKind::Ident && !is_reserved(self.cur().text) {
            Ok(self.advance())
        } else {
            Err(self.error("expected an identifier"))
        }
    }

    /// Consumes one `>`, splitting `>>`/`>>>`/`>=`/... when necessary.
    fn expect_gt(&mut self) -> PResult<()> {
        let t = self.cur();
        if t.is(">") {
            self.advance();
            return Ok(());
        }
        if t.kind == TokKind::Punct && t.text.starts_with('>') && t.text.len() > 1 {
            self.shrink_log.push((self.pos, t));
            self.toks[self.pos] = Tok {
                kind: TokKind::Punct,
                text: &t.text[1..],
                span: Span::new(t.span.start + 1, t.span.end),
            };
            return Ok(());
        }
        Err(self.error("expected '>'"))
    }

    fn mark(&self) -> Mark {
        Mark {
            pos: self.pos,
            shrinks: self.shrink_log.len(),
        }
    }

    fn reset(&mut self, m: Mark) {
        while self.shrink_log.len() > m.shrinks {
            let (i, t) = self.shrink_log.pop().unwrap();
            self.toks[i] = t;
        }
        self.pos = m.pos;
    }

    fn enter(&mut self) -> PResult<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            Err(self.error("nesting too deep"))
        } else {
            Ok(())
        }
    }

    fn leave(&mut self) {
        self.depth -= 1;
    }

    fn slice(&self, span: Span) -> &'a str {
        &self.src[span.start..span.end]
    }

    /// Wraps children into a node; a childless structural node keeps its raw
    /// slice as token so the leaf-iff-token invariant holds everywhere.
    fn node(&self, kind: NodeKind, children: Vec<AstNode>, span: Span) -> AstNode {
        if children.is_empty() {
            AstNode::leaf(kind, self.slice(span), span)
        } else {
            AstNode::inner(kind, children, span)
        }
    }

    fn op_leaf(&self, t: Tok<'a>) -> AstNode {
        AstNode::leaf(NodeKind::Operator, t.text, t.span)
    }

    fn name_leaf(&self, t: Tok<'a>) -> AstNode {
        AstNode::leaf(NodeKind::SimpleName, t.text, t.span)
    }

    // ------------------------------------------------------------------
    // Declarations
    // ------------------------------------------------------------------

    fn skip_qualified_name(&mut self) -> PResult<()> {
        self.expect_ident()?;
        while self.cur().is(".") && self.peek(1).kind == TokKind::Ident {
            self.advance();
            self.advance();
        }
        Ok(())
    }

    /// `@Name` or `@Name(...)`, dropped from the tree.
    fn skip_annotations(&mut self) -> PResult<bool> {
        let mut any = false;
        while self.cur().is("@") && self.peek(1).kind == TokKind::Ident {
            // `@interface` declarations are outside the subset.
            if self.peek(1).is_ident("interface") {
                return Err(self.error("annotation type declarations are not supported"));
            }
            self.advance();
            self.skip_qualified_name()?;
            if self.cur().is("(") {
                self.skip_balanced()?;
            }
            any = true;
        }
        Ok(any)
    }

    /// Skips from an opening bracket past its matching closer.
    fn skip_balanced(&mut self) -> PResult<()> {
        let mut depth = 0usize;
        loop {
            let t = self.cur();
            match t.kind {
                TokKind::Eof => return Err(self.error("unbalanced brackets")),
                TokKind::Punct if matches!(t.text, "(" | "[" | "{") => depth += 1,
                TokKind::Punct if matches!(t.text, ")" | "]" | "}") => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| self.error("unbalanced brackets"))?;
                    if depth == 0 {
                        self.advance();
                        return Ok(());
                    }
                }
                _ => {}
            }
            self.advance();
        }
    }

    fn parse_modifiers(&mut self) -> PResult<Vec<AstNode>> {
        let mut mods = Vec::new();
        loop {
            self.skip_annotations()?;
            let t = self.cur();
            if t.kind == TokKind::Ident && MODIFIERS.contains(&t.text) {
                // `default` only modifies interface members; as a switch label
                // it is followed by `:`.
                if t.text == "default" && self.peek(1).is(":") {
                    break;
                }
                self.advance();
                mods.push(AstNode::leaf(NodeKind::Modifier, t.text, t.span));
            } else {
                break;
            }
        }
        Ok(mods)
    }

    fn parse_type_declaration(&mut self) -> PResult<AstNode> {
        let start = self.cur().span.start;
        let mods = self.parse_modifiers()?;
        let start = mods.first().map_or(start, |m| m.span.start.min(start));
        let t = self.cur();
        if t.is_ident("class") || t.is_ident("interface") {
            self.parse_class_or_interface(mods, start)
        } else if t.is_ident("enum") {
            self.parse_enum(mods, start)
        } else {
            Err(self.error("expected a type declaration"))
        }
    }

    fn parse_class_or_interface(&mut self, mods: Vec<AstNode>, start: usize) -> PResult<AstNode> {
        self.advance(); // class | interface
        let name_tok = self.expect_ident()?;
        let mut children = mods;
        children.push(self.name_leaf(name_tok));
        if self.cur().is("<") {
            children.extend(self.parse_type_parameters()?);
        }
        if self.cur().is_ident("extends") {
            self.advance();
            loop {
                children.push(self.parse_type(false)?);
                if self.cur().is(",") {
                    self.advance();
                } else {
                    break;
                }
            }
        }
        if self.cur().is_ident("implements") {
            self.advance();
            loop {
                children.push(self.parse_type(false)?);
                if self.cur().is(",") {
                    self.advance();
                } else {
                    break;
                }
            }
        }
        self.expect_punct("{")?;
        while !self.cur().is("}") {
            if self.cur().is(";") {
                self.advance();
                continue;
            }
            if let Some(member) = self.parse_member(Some(name_tok.text))? {
                children.push(member);
            }
        }
        let end = self.expect_punct("}")?.span.end;
        Ok(self.node(
            NodeKind::ClassOrInterfaceDeclaration,
            children,
            Span::new(start, end),
        ))
    }

    fn parse_enum(&mut self, mods: Vec<AstNode>, start: usize) -> PResult<AstNode> {
        self.advance(); // enum
        let name_tok = self.expect_ident()?;
        let mut children = mods;
        children.push(self.name_leaf(name_tok));
        if self.cur().is_ident("implements") {
            self.advance();
            loop {
                children.push(self.parse_type(false)?);
                if self.cur().is(",") {
                    self.advance();
                } else {
                    break;
                }
            }
        }
        self.expect_punct("{")?;
        // Constants, then optionally `;` and ordinary members.
        while !self.cur().is("}") && !self.cur().is(";") {
            self.skip_annotations()?;
            let cstart = self.cur().span.start;
            let ctok = self.expect_ident()?;
            let mut cchildren = vec![self.name_leaf(ctok)];
            let mut cend = ctok.span.end;
            if self.cur().is("(") {
                let (args, end) = self.parse_arguments()?;
                cchildren.extend(args);
                cend = end;
            }
            if self.cur().is("{") {
                // Constant class body.
                self.advance();
                while !self.cur().is("}") {
                    if self.cur().is(";") {
                        self.advance();
                        continue;
                    }
                    if let Some(m) = self.parse_member(None)? {
                        cchildren.push(m);
                    }
                }
                cend = self.expect_punct("}")?.span.end;
            }
            children.push(self.node(
                NodeKind::EnumConstantDeclaration,
                cchildren,
                Span::new(cstart, cend),
            ));
            if self.cur().is(",") {
                self.advance();
            } else {
                break;
            }
        }
        if self.cur().is(";") {
            self.advance();
            while !self.cur().is("}") {
                if self.cur().is(";") {
                    self.advance();
                    continue;
                }
                if let Some(m) = self.parse_member(Some(name_tok.text))? {
                    children.push(m);
                }
            }
        }
        let end = self.expect_punct("}")?.span.end;
        Ok(self.node(NodeKind::EnumDeclaration, children, Span::new(start, end)))
    }

    fn parse_type_parameters(&mut self) -> PResult<Vec<AstNode>> {
        self.expect_punct("<")?;
        let mut params = Vec::new();
        loop {
            self.skip_annotations()?;
            let t = self.expect_ident()?;
            let mut children = vec![self.name_leaf(t)];
            let mut end = t.span.end;
            if self.cur().is_ident("extends") {
                self.advance();
                loop {
                    let b = self.parse_type(false)?;
                    end = b.span.end;
                    children.push(b);
                    if self.cur().is("&") {
                        self.advance();
                    } else {
                        break;
                    }
                }
            }
            params.push(self.node(
                NodeKind::TypeParameter,
                children,
                Span::new(t.span.start, end),
            ));
            if self.cur().is(",") {
                self.advance();
            } else {
                break;
            }
        }
        self.expect_gt()?;
        Ok(params)
    }

    /// One class member. Returns `None` for a stray `;`.
    fn parse_member(&mut self, class_name: Option<&str>) -> PResult<Option<AstNode>> {
        self.enter()?;
        let r = self.parse_member_inner(class_name);
        self.leave();
        r
    }

    fn parse_member_inner(&mut self, class_name: Option<&str>) -> PResult<Option<AstNode>> {
        if self.cur().is(";") {
            self.advance();
            return Ok(None);
        }
        let start = self.cur().span.start;
        let mods = self.parse_modifiers()?;
        let start = mods.first().map_or(start, |m| m.span.start.min(start));
        let t = self.cur();

        if t.is_ident("class") || t.is_ident("interface") {
            return self.parse_class_or_interface(mods, start).map(Some);
        }
        if t.is_ident("enum") {
            return self.parse_enum(mods, start).map(Some);
        }
        if t.is("{") {
            let body = self.parse_block()?;
            let span = Span::new(start, body.span.end);
            let mut children = mods;
            children.push(body);
            return Ok(Some(self.node(
                NodeKind::InitializerDeclaration,
                children,
                span,
            )));
        }

        let mut children = mods;
        if self.cur().is("<") {
            children.extend(self.parse_type_parameters()?);
        }

        // Constructor: the enclosing type's name followed by `(`.
        if let Some(cname) = class_name {
            if self.cur().is_ident(cname) && self.peek(1).is("(") {
                let name_tok = self.advance();
                children.push(self.name_leaf(name_tok));
                children.extend(self.parse_parameters()?);
                children.extend(self.parse_throws()?);
                let body = self.parse_block()?;
                let span = Span::new(start, body.span.end);
                children.push(body);
                return Ok(Some(self.node(
                    NodeKind::ConstructorDeclaration,
                    children,
                    span,
                )));
            }
        }

        let ty = self.parse_type(true)?;
        self.skip_annotations()?;
        let name_tok = self.expect_ident()?;

        if self.cur().is("(") {
            children.push(ty);
            children.push(self.name_leaf(name_tok));
            children.extend(self.parse_parameters()?);
            children.extend(self.parse_throws()?);
            let end;
            if self.cur().is(";") {
                // Bodyless: abstract or interface method.
                end = self.advance().span.end;
            } else {
                let body = self.parse_block()?;
                end = body.span.end;
                children.push(body);
            }
            return Ok(Some(self.node(
                NodeKind::MethodDeclaration,
                children,
                Span::new(start, end),
            )));
        }

        // Field declaration.
        children.push(ty);
        let decls = self.parse_variable_declarators(name_tok)?;
        children.extend(decls);
        let end = self.expect_punct(";")?.span.end;
        Ok(Some(self.node(
            NodeKind::FieldDeclaration,
            children,
            Span::new(start, end),
        )))
    }

    fn parse_throws(&mut self) -> PResult<Vec<AstNode>> {
        let mut types = Vec::new();
        if self.cur().is_ident("throws") {
            self.advance();
            loop {
                types.push(self.parse_type(false)?);
                if self.cur().is(",") {
                    self.advance();
                } else {
                    break;
                }
            }
        }
        Ok(types)
    }

    fn parse_parameters(&mut self) -> PResult<Vec<AstNode>> {
        self.expect_punct("(")?;
        let mut params = Vec::new();
        if !self.cur().is(")") {
            loop {
                let start = self.cur().span.start;
                let mut children = self.parse_modifiers()?;
                let start = children.first().map_or(start, |m| m.span.start.min(start));
                let mut ty = self.parse_type(false)?;
                if self.cur().is("...") {
                    let dots = self.advance();
                    let tspan = Span::new(ty.span.start, dots.span.end);
                    ty = AstNode::inner(NodeKind::ArrayType, vec![ty], tspan);
                }
                self.skip_annotations()?;
                let name_tok = self.expect_ident()?;
                // C-style dims after the name are consumed but not modeled.
                let mut end = name_tok.span.end;
                while self.cur().is("[") && self.peek(1).is("]") {
                    self.advance();
                    end = self.advance().span.end;
                }
                children.push(ty);
                children.push(self.name_leaf(name_tok));
                params.push(self.node(NodeKind::Parameter, children, Span::new(start, end)));
                if self.cur().is(",") {
                    self.advance();
                } else {
                    break;
                }
            }
        }
        self.expect_punct(")")?;
        Ok(params)
    }

    /// Declarators starting from an already-consumed first name.
    fn parse_variable_declarators(&mut self, first: Tok<'a>) -> PResult<Vec<AstNode>> {
        let mut decls = Vec::new();
        let mut name_tok = first;
        loop {
            let mut children = vec![self.name_leaf(name_tok)];
            let mut end = name_tok.span.end;
            while self.cur().is("[") && self.peek(1).is("]") {
                self.advance();
                end = self.advance().span.end;
            }
            if self.cur().is("=") {
                self.advance();
                let init = if self.cur().is("{") {
                    self.parse_array_initializer()?
                } else {
                    self.parse_expression()?
                };
                end = init.span.end;
                children.push(init);
            }
            decls.push(self.node(
                NodeKind::VariableDeclarator,
                children,
                Span::new(name_tok.span.start, end),
            ));
            if self.cur().is(",") {
                self.advance();
                name_tok = self.expect_ident()?;
            } else {
                break;
            }
        }
        Ok(decls)
    }

    // ------------------------------------------------------------------
    // Types
    // ------------------------------------------------------------------

    fn parse_type(&mut self, allow_void: bool) -> PResult<AstNode> {
        self.enter()?;
        let r = self.parse_type_inner(allow_void);
        self.leave();
        r
    }

    fn parse_type_inner(&mut self, allow_void: bool) -> PResult<AstNode> {
        let t = self.cur();
        let mut ty = if t.kind == TokKind::Ident && PRIMITIVES.contains(&t.text) {
            self.advance();
            AstNode::leaf(NodeKind::PrimitiveType, t.text, t.span)
        } else if t.is_ident("void") {
            if !allow_void {
                return Err(self.error("'void' is not allowed here"));
            }
            self.advance();
            AstNode::leaf(NodeKind::VoidType, t.text, t.span)
        } else if t.kind == TokKind::Ident && !is_reserved(t.text) {
            self.parse_class_type()?
        } else {
            return Err(self.error("expected a type"));
        };
        while self.cur().is("[") && self.peek(1).is("]") {
            self.advance();
            let close = self.advance();
            let span = Span::new(ty.span.start, close.span.end);
            ty = AstNode::inner(NodeKind::ArrayType, vec![ty], span);
        }
        Ok(ty)
    }

    fn parse_class_type(&mut self) -> PResult<AstNode> {
        let first = self.expect_ident()?;
        let mut ty = self.class_type_segment(None, first)?;
        while self.cur().is(".")
            && self.peek(1).kind == TokKind::Ident
            && !is_reserved(self.peek(1).text)
        {
            self.advance();
            let seg = self.expect_ident()?;
            ty = self.class_type_segment(Some(ty), seg)?;
        }
        Ok(ty)
    }

    fn class_type_segment(
        &mut self,
        scope: Option<AstNode>,
        name_tok: Tok<'a>,
    ) -> PResult<AstNode> {
        let start = scope.as_ref().map_or(name_tok.span.start, |s| s.span.start);
        let mut children = Vec::new();
        if let Some(s) = scope {
            children.push(s);
        }
        children.push(self.name_leaf(name_tok));
        let mut end = name_tok.span.end;
        if self.cur().is("<") {
            let (args, close) = self.parse_type_arguments()?;
            children.extend(args);
            end = close;
        }
        Ok(self.node(
            NodeKind::ClassOrInterfaceType,
            children,
            Span::new(start, end),
        ))
    }

    /// `<...>`, including the diamond `<>`. Returns (args, end offset).
    fn parse_type_arguments(&mut self) -> PResult<(Vec<AstNode>, usize)> {
        self.expect_punct("<")?;
        if self.cur().is(">") {
            let close = self.advance();
            return Ok((Vec::new(), close.span.end));
        }
        let mut args = Vec::new();
        loop {
            if self.cur().is("?") {
                let q = self.advance();
                let mut children = Vec::new();
                let mut end = q.span.end;
                if self.cur().is_ident("extends") || self.cur().is_ident("super") {
                    self.advance();
                    let b = self.parse_type(false)?;
                    end = b.span.end;
                    children.push(b);
                }
                args.push(self.node(
                    NodeKind::WildcardType,
                    children,
                    Span::new(q.span.start, end),
                ));
            } else {
                args.push(self.parse_type(false)?);
            }
            if self.cur().is(",") {
                self.advance();
            } else {
                break;
            }
        }
        let end = self.cur().span.start + 1;
        self.expect_gt()?;
        Ok((args, end))
    }

    fn try_parse_type(&mut self) -> Option<AstNode> {
        let m = self.mark();
        match self.parse_type(false) {
            Ok(ty) => Some(ty),
            Err(_) => {
                self.reset(m);
                None
            }
        }
    }

    // ------------------------------------------------------------------
    // Statements
    // ------------------------------------------------------------------

    fn parse_block(&mut self) -> PResult<AstNode> {
        let open = self.expect_punct("{")?;
        let mut stmts = Vec::new();
        while !self.cur().is("}") {
            stmts.push(self.parse_statement()?);
        }
        let close = self.expect_punct("}")?;
        Ok(self.node(
            NodeKind::BlockStmt,
            stmts,
            Span::new(open.span.start, close.span.end),
        ))
    }

    fn parse_statement(&mut self) -> PResult<AstNode> {
        self.enter()?;
        let r = self.parse_statement_inner();
        self.leave();
        r
    }

    fn parse_statement_inner(&mut self) -> PResult<AstNode> {
        let t = self.cur();
        match t.kind {
            TokKind::Punct if t.is("{") => return self.parse_block(),
            TokKind::Punct if t.is(";") => {
                let t = self.advance();
                return Ok(self.node(NodeKind::EmptyStmt, Vec::new(), t.span));
            }
            TokKind::Punct if t.is("@") => {
                // Annotated local declaration or local class.
                let start = t.span.start;
                self.skip_annotations()?;
                return self.parse_declaration_or_expression_statement(start);
            }
            TokKind::Ident => match t.text {
                "if" => return self.parse_if(),
                "for" => return self.parse_for(),
                "while" => return self.parse_while(),
                "do" => return self.parse_do(),
                "return" => return self.parse_return(),
                "assert" => return self.parse_assert(),
                "throw" => return self.parse_throw(),
                "try" => return self.parse_try(),
                "switch" => return self.parse_switch(),
                "break" | "continue" => return self.parse_break_continue(),
                "synchronized" if self.peek(1).is("(") => return self.parse_synchronized(),
                "this" | "super" if self.peek(1).is("(") => {
                    return self.parse_explicit_ctor_invocation()
                }
                "class" | "abstract" | "final" if self.is_local_class_start() => {
                    return self.parse_local_class()
                }
                _ => {
                    if !is_reserved(t.text) && self.peek(1).is(":") {
                        return self.parse_labeled();
                    }
                }
            },
            _ => {}
        }
        self.parse_declaration_or_expression_statement(t.span.start)
    }

    fn is_local_class_start(&self) -> bool {
        if self.cur().is_ident("class") {
            return true;
        }
        // `abstract class`, `final class`, `abstract final class`...
        let mut i = 0;
        while self.peek(i).kind == TokKind::Ident
            && matches!(
                self.peek(i).text,
                "abstract" | "final" | "static" | "strictfp"
            )
        {
            i += 1;
        }
        i > 0 && self.peek(i).is_ident("class")
    }

    fn parse_local_class(&mut self) -> PResult<AstNode> {
        let start = self.cur().span.start;
        let decl = self.parse_type_declaration()?;
        let span = Span::new(start, decl.span.end);
        Ok(self.node(NodeKind::LocalClassDeclarationStmt, vec![decl], span))
    }

    fn parse_labeled(&mut self) -> PResult<AstNode> {
        let label = self.expect_ident()?;
        self.expect_punct(":")?;
        let stmt = self.parse_statement()?;
        let span = Span::new(label.span.start, stmt.span.end);
        Ok(self.node(
            NodeKind::LabeledStmt,
            vec![self.name_leaf(label), stmt],
            span,
        ))
    }

    fn parse_if(&mut self) -> PResult<AstNode> {
        let kw = self.advance();
        self.expect_punct("(")?;
        let cond = self.parse_expression()?;
        self.expect_punct(")")?;
        let then = self.parse_statement()?;
        let mut children = vec![cond, then];
        let mut end = children[1].span.end;
        if self.cur().is_ident("else") {
            self.advance();
            let els = self.parse_statement()?;
            end = els.span.end;
            children.push(els);
        }
        Ok(self.node(NodeKind::IfStmt, children, Span::new(kw.span.start, end)))
    }

    /// Distinguishes classic `for (;;)` from for-each by scanning for a `;`
    /// at bracket depth zero before the header closes.
    fn for_header_has_semicolon(&self) -> bool {
        let mut depth = 0usize;
        let mut i = self.pos;
        loop {
            let t = self.toks[i];
            match t.kind {
                TokKind::Eof => return false,
                TokKind::Punct => match t.text {
                    "(" | "[" | "{" => depth += 1,
                    ")" | "]" | "}" => {
                        if depth == 0 {
                            return false;
                        }
                        depth -= 1;
                    }
                    ";" if depth == 0 => return true,
                    _ => {}
                },
                _ => {}
            }
            i += 1;
        }
    }

    fn parse_for(&mut self) -> PResult<AstNode> {
        let kw = self.advance();
        self.expect_punct("(")?;
        if !self.for_header_has_semicolon() {
            // for-each
            let vstart = self.cur().span.start;
            let mut vchildren = self.parse_modifiers()?;
            let vstart = vchildren
                .first()
                .map_or(vstart, |m| m.span.start.min(vstart));
            vchildren.push(self.parse_type(false)?);
            let name_tok = self.expect_ident()?;
            let vend = name_tok.span.end;
            vchildren.push(self.name_leaf(name_tok));
            let var = self.node(
                NodeKind::VariableDeclarationExpr,
                vchildren,
                Span::new(vstart, vend),
            );
            self.expect_punct(":")?;
            let iterable = self.parse_expression()?;
            self.expect_punct(")")?;
            let body = self.parse_statement()?;
            let span = Span::new(kw.span.start, body.span.end);
            return Ok(self.node(NodeKind::ForEachStmt, vec![var, iterable, body], span));
        }
        let mut children = Vec::new();
        // init
        if !self.cur().is(";") {
            if let Some(decl) = self.try_parse_variable_declaration_expr()? {
                children.push(decl);
            } else {
                loop {
                    children.push(self.parse_expression()?);
                    if self.cur().is(",") {
                        self.advance();
                    } else {
                        break;
                    }
                }
            }
        }
        self.expect_punct(";")?;
        // condition
        if !self.cur().is(";") {
            children.push(self.parse_expression()?);
        }
        self.expect_punct(";")?;
        // update
        if !self.cur().is(")") {
            loop {
                children.push(self.parse_expression()?);
                if self.cur().is(",") {
                    self.advance();
                } else {
                    break;
                }
            }
        }
        self.expect_punct(")")?;
        let body = self.parse_statement()?;
        let span = Span::new(kw.span.start, body.span.end);
        children.push(body);
        Ok(self.node(NodeKind::ForStmt, children, span))
    }

    fn parse_while(&mut self) -> PResult<AstNode> {
        let kw = self.advance();
        self.expect_punct("(")?;
        let cond = self.parse_expression()?;
        self.expect_punct(")")?;
        let body = self.parse_statement()?;
        let span = Span::new(kw.span.start, body.span.end);
        Ok(self.node(NodeKind::WhileStmt, vec![cond, body], span))
    }

    fn parse_do(&mut self) -> PResult<AstNode> {
        let kw = self.advance();
        let body = self.parse_statement()?;
        if !self.cur().is_ident("while") {
            return Err(self.error("expected 'while'"));
        }
        self.advance();
        self.expect_punct("(")?;
        let cond = self.parse_expression()?;
        self.expect_punct(")")?;
        let end = self.expect_punct(";")?.span.end;
        Ok(self.node(
            NodeKind::DoStmt,
            vec![body, cond],
            Span::new(kw.span.start, end),
        ))
    }

    fn parse_return(&mut self) -> PResult<AstNode> {
        let kw = self.advance();
        let mut children = Vec::new();
        if !self.cur().is(";") {
            children.push(self.parse_expression()?);
        }
        let end = self.expect_punct(";")?.span.end;
        Ok(self.node(
            NodeKind::ReturnStmt,
            children,
            Span::new(kw.span.start, end),
        ))
    }

    fn parse_assert(&mut self) -> PResult<AstNode> {
        let kw = self.advance();
        let mut children = vec![self.parse_expression()?];
        if self.cur().is(":") {
            self.advance();
            children.push(self.parse_expression()?);
        }
        let end = self.expect_punct(";")?.span.end;
        Ok(self.node(
            NodeKind::AssertStmt,
            children,
            Span::new(kw.span.start, end),
        ))
    }

    fn parse_throw(&mut self) -> PResult<AstNode> {
        let kw = self.advance();
        let expr = self.parse_expression()?;
        let end = self.expect_punct(";")?.span.end;
        Ok(self.node(
            NodeKind::ThrowStmt,
            vec![expr],
            Span::new(kw.span.start, end),
        ))
    }

    fn parse_try(&mut self) -> PResult<AstNode> {
        let kw = self.advance();
        let mut children = Vec::new();
        if self.cur().is("(") {
            self.advance();
            loop {
                if self.cur().is(")") {
                    break;
                }
                if let Some(decl) = self.try_parse_variable_declaration_expr()? {
                    children.push(decl);
                } else {
                    children.push(self.parse_expression()?);
                }
                if self.cur().is(";") {
                    self.advance();
                } else {
                    break;
                }
            }
            self.expect_punct(")")?;
        }
        let body = self.parse_block()?;
        let mut end = body.span.end;
        children.push(body);
        while self.cur().is_ident("catch") {
            let cstart = self.advance().span.start;
            self.expect_punct("(")?;
            let pstart = self.cur().span.start;
            let mut pchildren = self.parse_modifiers()?;
            let pstart = pchildren
                .first()
                .map_or(pstart, |m| m.span.start.min(pstart));
            let mut ty = self.parse_type(false)?;
            if self.cur().is("|") {
                let mut union = vec![ty];
                while self.cur().is("|") {
                    self.advance();
                    union.push(self.parse_type(false)?);
                }
                let uspan = Span::new(union[0].span.start, union.last().unwrap().span.end);
                ty = AstNode::inner(NodeKind::UnionType, union, uspan);
            }
            let name_tok = self.expect_ident()?;
            pchildren.push(ty);
            pchildren.push(self.name_leaf(name_tok));
            let param = self.node(
                NodeKind::Parameter,
                pchildren,
                Span::new(pstart, name_tok.span.end),
            );
            self.expect_punct(")")?;
            let cbody = self.parse_block()?;
            end = cbody.span.end;
            children.push(self.node(
                NodeKind::CatchClause,
                vec![param, cbody],
                Span::new(cstart, end),
            ));
        }
        if self.cur().is_ident("finally") {
            self.advance();
            let fbody = self.parse_block()?;
            end = fbody.span.end;
            children.push(fbody);
        }
        Ok(self.node(NodeKind::TryStmt, children, Span::new(kw.span.start, end)))
    }

    fn parse_switch(&mut self) -> PResult<AstNode> {
        let kw = self.advance();
        self.expect_punct("(")?;
        let selector = self.parse_expression()?;
        self.expect_punct(")")?;
        self.expect_punct("{")?;
        let mut children = vec![selector];
        while !self.cur().is("}") {
            let estart = self.cur().span.start;
            let mut echildren = Vec::new();
            if self.cur().is_ident("case") {
                self.advance();
                loop {
                    echildren.push(self.parse_expression()?);
                    if self.cur().is(",") {
                        self.advance();
                    } else {
                        break;
                    }
                }
            } else if self.cur().is_ident("default") {
                self.advance();
            } else {
                return Err(self.error("expected 'case' or 'default'"));
            }
            let colon = self.expect_punct(":")?;
            let mut end = colon.span.end;
            while !self.cur().is("}")
                && !self.cur().is_ident("case")
                && !self.cur().is_ident("default")
            {
                let s = self.parse_statement()?;
                end = s.span.end;
                echildren.push(s);
            }
            children.push(self.node(NodeKind::SwitchEntry, echildren, Span::new(estart, end)));
        }
        let end = self.expect_punct("}")?.span.end;
        Ok(self.node(
            NodeKind::SwitchStmt,
            children,
            Span::new(kw.span.start, end),
        ))
    }

    fn parse_break_continue(&mut self) -> PResult<AstNode> {
        let kw = self.advance();
        let kind = if kw.text == "break" {
            NodeKind::BreakStmt
        } else {
            NodeKind::ContinueStmt
        };
        let mut children = Vec::new();
        let mut end = kw.span.end;
        if self.cur().kind == TokKind::Ident && !is_reserved(self.cur().text) {
            let label = self.advance();
            end = label.span.end;
            children.push(self.name_leaf(label));
        }
        self.expect_punct(";")?;
        Ok(self.node(kind, children, Span::new(kw.span.start, end)))
    }

    fn parse_synchronized(&mut self) -> PResult<AstNode> {
        let kw = self.advance();
        self.expect_punct("(")?;
        let monitor = self.parse_expression()?;
        self.expect_punct(")")?;
        let body = self.parse_block()?;
        let span = Span::new(kw.span.start, body.span.end);
        Ok(self.node(NodeKind::SynchronizedStmt, vec![monitor, body], span))
    }

    fn parse_explicit_ctor_invocation(&mut self) -> PResult<AstNode> {
        let kw = self.advance(); // this | super
        let (args, _) = self.parse_arguments()?;
        let end = self.expect_punct(";")?.span.end;
        Ok(self.node(
            NodeKind::ExplicitConstructorInvocationStmt,
            args,
            Span::new(kw.span.start, end),
        ))
    }

    /// Local variable declaration if the lookahead reads as `Type name`,
    /// otherwise an expression statement.
    fn parse_declaration_or_expression_statement(&mut self, start: usize) -> PResult<AstNode> {
        if let Some(decl) = self.try_parse_variable_declaration_expr()? {
            let end = self.expect_punct(";")?.span.end;
            let span = Span::new(start, end);
            return Ok(self.node(NodeKind::ExpressionStmt, vec![decl], span));
        }
        let expr = self.parse_expression()?;
        let end = self.expect_punct(";")?.span.end;
        let span = Span::new(start, end);
        Ok(self.node(NodeKind::ExpressionStmt, vec![expr], span))
    }

    /// Speculatively parses `final? Type name (= init)? (, name (= init)?)*`.
    fn try_parse_variable_declaration_expr(&mut self) -> PResult<Option<AstNode>> {
        let m = self.mark();
        let start = self.cur().span.start;
        let mut children = match self.parse_modifiers() {
            Ok(mods) => mods,
            Err(_) => {
                self.reset(m);
                return Ok(None);
            }
        };
        let start = children.first().map_or(start, |c| c.span.start.min(start));
        let ty = match self.try_parse_type() {
            Some(ty) => ty,
            None => {
                self.reset(m);
                return Ok(None);
            }
        };
        let named = self.cur().kind == TokKind::Ident && !is_reserved(self.cur().text);
        let is_decl = named
            && (matches!(self.peek(1).text, "=" | ";" | ",")
                || (self.peek(1).is("[") && self.peek(2).is("]")));
        if !is_decl {
            self.reset(m);
            return Ok(None);
        }
        let name_tok = self.expect_ident()?;
        children.push(ty);
        let decls = self.parse_variable_declarators(name_tok)?;
        let end = decls.last().unwrap().span.end;
        children.extend(decls);
        Ok(Some(self.node(
            NodeKind::VariableDeclarationExpr,
            children,
            Span::new(start, end),
        )))
    }

    // ------------------------------------------------------------------
    // Expressions
    // ------------------------------------------------------------------

    fn parse_expression(&mut self) -> PResult<AstNode> {
        self.enter()?;
        let r = self.parse_assignment();
        self.leave();
        r
    }

    fn parse_assignment(&mut self) -> PResult<AstNode> {
        let left = self.parse_ternary()?;
        let t = self.cur();
        if t.kind == TokKind::Punct
            && matches!(
                t.text,
                "=" | "+="
                    | "-="
                    | "*="
                    | "/="
                    | "&="
                    | "|="
                    | "^="
                    | "%="
                    | "<<="
                    | ">>="
                    | ">>>="
            )
        {
            let op = self.advance();
            let value = self.parse_expression()?;
            let span = Span::new(left.span.start, value.span.end);
            return Ok(AstNode::inner(
                NodeKind::AssignExpr,
                vec![left, self.op_leaf(op), value],
                span,
            ));
        }
        Ok(left)
    }

    fn parse_ternary(&mut self) -> PResult<AstNode> {
        let cond = self.parse_binary(0)?;
        if self.cur().is("?") {
            self.advance();
            let then = self.parse_expression()?;
            self.expect_punct(":")?;
            let els = self.parse_ternary_tail()?;
            let span = Span::new(cond.span.start, els.span.end);
            return Ok(AstNode::inner(
                NodeKind::ConditionalExpr,
                vec![cond, then, els],
                span,
            ));
        }
        Ok(cond)
    }

    fn parse_ternary_tail(&mut self) -> PResult<AstNode> {
        self.enter()?;
        let r = self.parse_ternary();
        self.leave();
        r
    }

    /// Binary operators by precedence level; `instanceof` sits with the
    /// relational operators.
    fn parse_binary(&mut self, level: usize) -> PResult<AstNode> {
        const LEVELS: &[&[&str]] = &[
            &["||"],
            &["&&"],
            &["|"],
            &["^"],
            &["&"],
            &["==", "!="],
            &["<", ">", "<=", ">="],
            &["<<", ">>", ">>>"],
            &["+", "-"],
            &["*", "/", "%"],
        ];
        if level >= LEVELS.len() {
            return self.parse_unary();
        }
        let mut left = self.parse_binary(level + 1)?;
        loop {
            let t = self.cur();
            if level == 6 && t.is_ident("instanceof") {
                self.advance();
                let ty = self.parse_type(false)?;
                let span = Span::new(left.span.start, ty.span.end);
                left = AstNode::inner(NodeKind::InstanceOfExpr, vec![left, ty], span);
                continue;
            }
            if t.kind == TokKind::Punct && LEVELS[level].contains(&t.text) {
                let op = self.advance();
                let right = self.parse_binary(level + 1)?;
                let span = Span::new(left.span.start, right.span.end);
                left = AstNode::inner(
                    NodeKind::BinaryExpr,
                    vec![left, self.op_leaf(op), right],
                    span,
                );
                continue;
            }
            break;
        }
        Ok(left)
    }

    fn parse_unary(&mut self) -> PResult<AstNode> {
        self.enter()?;
        let r = self.parse_unary_inner();
        self.leave();
        r
    }

    fn parse_unary_inner(&mut self) -> PResult<AstNode> {
        let t = self.cur();
        if t.kind == TokKind::Punct && matches!(t.text, "+" | "-" | "!" | "~" | "++" | "--") {
            let op = self.advance();
            let operand = self.parse_unary()?;
            let span = Span::new(op.span.start, operand.span.end);
            return Ok(AstNode::inner(
                NodeKind::UnaryExpr,
                vec![self.op_leaf(op), operand],
                span,
            ));
        }
        if t.is("(") {
            if self.lambda_ahead() {
                return self.parse_lambda();
            }
            if let Some(cast) = self.try_parse_cast()? {
                return Ok(cast);
            }
        }
        self.parse_postfix()
    }

    /// `( ... ) ->` means a lambda starts here.
    fn lambda_ahead(&self) -> bool {
        let mut depth = 0usize;
        let mut i = self.pos;
        loop {
            let t = self.toks[i];
            match t.kind {
                TokKind::Eof => return false,
                TokKind::Punct if matches!(t.text, "(" | "[" | "{") => depth += 1,
                TokKind::Punct if matches!(t.text, ")" | "]" | "}") => {
                    if depth == 0 {
                        return false;
                    }
                    depth -= 1;
                    if depth == 0 {
                        return self.toks[i + 1].is("->");
                    }
                }
                _ => {}
            }
            i += 1;
        }
    }

    /// Lambdas are opaque leaves: the whole `params -> body` text.
    fn parse_lambda(&mut self) -> PResult<AstNode> {
        let start = self.cur().span.start;
        if self.cur().is("(") {
            self.skip_balanced()?;
        } else {
            self.expect_ident()?;
        }
        self.expect_punct("->")?;
        let end = if self.cur().is("{") {
            self.skip_balanced()?;
            self.toks[self.pos - 1].span.end
        } else {
            self.scan_expression_end()?
        };
        let span = Span::new(start, end);
        Ok(AstNode::leaf(NodeKind::LambdaExpr, self.slice(span), span))
    }

    /// Consumes an expression opaquely, stopping at a top-level `,`, `;`, a
    /// closing bracket, or a ternary-unbalanced `:`. Returns the end offset.
    fn scan_expression_end(&mut self) -> PResult<usize> {
        let mut depth = 0usize;
        let mut ternary = 0usize;
        let mut end = self.cur().span.start;
        loop {
            let t = self.cur();
            match t.kind {
                TokKind::Eof => {
                    if depth > 0 {
                        return Err(self.error("unbalanced brackets"));
                    }
                    return Ok(end);
                }
                TokKind::Punct => match t.text {
                    "(" | "[" | "{" => depth += 1,
                    ")" | "]" | "}" => {
                        if depth == 0 {
                            return Ok(end);
                        }
                        depth -= 1;
                    }
                    "," | ";" if depth == 0 => return Ok(end),
                    "?" if depth == 0 => ternary += 1,
                    ":" if depth == 0 => {
                        if ternary == 0 {
                            return Ok(end);
                        }
                        ternary -= 1;
                    }
                    _ => {}
                },
                _ => {}
            }
            end = t.span.end;
            self.advance();
        }
    }

    /// `(Type) operand` when the parenthesized tokens read as a type and the
    /// follow token can begin a cast operand.
    fn try_parse_cast(&mut self) -> PResult<Option<AstNode>> {
        let m = self.mark();
        let open = self.advance(); // (
        let ty = match self.try_parse_type() {
            Some(ty) => ty,
            None => {
                self.reset(m);
                return Ok(None);
            }
        };
        if !self.cur().is(")") {
            self.reset(m);
            return Ok(None);
        }
        let primitive = base_is_primitive(&ty);
        let follow = self.peek(1);
        let castable = match follow.kind {
            TokKind::Ident => {
                !is_reserved(follow.text)
                    || matches!(
                        follow.text,
                        "this" | "super" | "new" | "true" | "false" | "null"
                    )
            }
            TokKind::Int | TokKind::Long | TokKind::Double | TokKind::Char | TokKind::Str => true,
            TokKind::Punct => {
                matches!(follow.text, "(" | "!" | "~")
                    || (primitive && matches!(follow.text, "+" | "-"))
            }
            TokKind::Eof => false,
        };
        // A bare name in parens is only a cast when the operand makes it
        // unambiguous; `(x) + 1` stays an enclosed expression.
        let unambiguous_type = primitive
            || ty.kind == NodeKind::ArrayType
            || ty.children.len() > 1
            || follow.kind == TokKind::Punct && matches!(follow.text, "!" | "~");
        let plausible = castable
            && (unambiguous_type
                || matches!(follow.kind, TokKind::Ident)
                || matches!(follow.kind, TokKind::Punct if follow.text == "("));
        if !plausible {
            self.reset(m);
            return Ok(None);
        }
        self.advance(); // )
        let operand = match self.parse_unary() {
            Ok(e) => e,
            Err(_) => {
                self.reset(m);
                return Ok(None);
            }
        };
        let span = Span::new(open.span.start, operand.span.end);
        Ok(Some(AstNode::inner(
            NodeKind::CastExpr,
            vec![ty, operand],
            span,
        )))
    }

    fn parse_postfix(&mut self) -> PResult<AstNode> {
        let mut expr = self.parse_primary()?;
        loop {
            let t = self.cur();
            if t.is(".") {
                let after = self.peek(1);
                if after.is_ident("this") {
                    self.advance();
                    let kw = self.advance();
                    let span = Span::new(expr.span.start, kw.span.end);
                    expr = AstNode::inner(NodeKind::ThisExpr, vec![expr], span);
                    continue;
                }
                if after.is_ident("super") {
                    self.advance();
                    let kw = self.advance();
                    let span = Span::new(expr.span.start, kw.span.end);
                    expr = AstNode::inner(NodeKind::SuperExpr, vec![expr], span);
                    continue;
                }
                if after.is_ident("class") {
                    self.advance();
                    let kw = self.advance();
                    let span = Span::new(expr.span.start, kw.span.end);
                    expr = AstNode::inner(NodeKind::ClassExpr, vec![expr], span);
                    continue;
                }
                if after.is_ident("new") {
                    self.advance();
                    self.advance();
                    expr = self.parse_creation(Some(expr))?;
                    continue;
                }
                if after.is("<") {
                    // Explicitly-typed generic call: scope.<T>name(args)
                    self.advance();
                    let _ = self.parse_type_arguments()?;
                    let name_tok = self.expect_ident()?;
                    let (args, end) = self.parse_arguments()?;
                    let span = Span::new(expr.span.start, end);
                    let mut children = vec![expr, self.name_leaf(name_tok)];
                    children.extend(args);
                    expr = AstNode::inner(NodeKind::MethodCallExpr, children, span);
                    continue;
                }
                if after.kind == TokKind::Ident && !is_reserved(after.text) {
                    self.advance();
                    let name_tok = self.advance();
                    if self.cur().is("(") {
                        let (args, end) = self.parse_arguments()?;
                        let span = Span::new(expr.span.start, end);
                        let mut children = vec![expr, self.name_leaf(name_tok)];
                        children.extend(args);
                        expr = AstNode::inner(NodeKind::MethodCallExpr, children, span);
                    } else {
                        let span = Span::new(expr.span.start, name_tok.span.end);
                        expr = AstNode::inner(
                            NodeKind::FieldAccessExpr,
                            vec![expr, self.name_leaf(name_tok)],
                            span,
                        );
                    }
                    continue;
                }
                return Err(self.error("unexpected token after '.'"));
            }
            if t.is("[") {
                if self.peek(1).is("]") {
                    // Array-typed method reference or class literal:
                    // `String[]::new`, `ReadableType[].class`
                    while self.cur().is("[") && self.peek(1).is("]") {
                        self.advance();
                        self.advance();
                    }
                    if self.cur().is(".") && self.peek(1).is_ident("class") {
                        self.advance();
                        let kw = self.advance();
                        let span = Span::new(expr.span.start, kw.span.end);
                        expr = AstNode::inner(NodeKind::ClassExpr, vec![expr], span);
                        continue;
                    }
                    self.expect_punct("::")?;
                    let name_tok = self.advance();
                    let span = Span::new(expr.span.start, name_tok.span.end);
                    expr = AstNode::inner(
                        NodeKind::MethodReferenceExpr,
                        vec![expr, self.name_leaf(name_tok)],
                        span,
                    );
                    continue;
                }
                self.advance();
                let index = self.parse_expression()?;
                let close = self.expect_punct("]")?;
                let span = Span::new(expr.span.start, close.span.end);
                expr = AstNode::inner(NodeKind::ArrayAccessExpr, vec![expr, index], span);
                continue;
            }
            if t.is("++") || t.is("--") {
                let op = self.advance();
                let span = Span::new(expr.span.start, op.span.end);
                expr = AstNode::inner(NodeKind::UnaryExpr, vec![expr, self.op_leaf(op)], span);
                continue;
            }
            if t.is("::") {
                self.advance();
                if self.cur().is("<") {
                    let _ = self.parse_type_arguments()?;
                }
                let name_tok = if self.cur().is_ident("new") {
                    self.advance()
                } else {
                    self.expect_ident()?
                };
                let span = Span::new(expr.span.start, name_tok.span.end);
                expr = AstNode::inner(
                    NodeKind::MethodReferenceExpr,
                    vec![expr, self.name_leaf(name_tok)],
                    span,
                );
                continue;
            }
            break;
        }
        Ok(expr)
    }

    fn parse_arguments(&mut self) -> PResult<(Vec<AstNode>, usize)> {
        self.expect_punct("(")?;
        let mut args = Vec::new();
        if !self.cur().is(")") {
            loop {
                args.push(self.parse_expression()?);
                if self.cur().is(",") {
                    self.advance();
                } else {
                    break;
                }
            }
        }
        let end = self.expect_punct(")")?.span.end;
        Ok((args, end))
    }

    fn parse_primary(&mut self) -> PResult<AstNode> {
        let t = self.cur();
        match t.kind {
            TokKind::Int => {
                self.advance();
                Ok(AstNode::leaf(NodeKind::IntegerLiteralExpr, t.text, t.span))
            }
            TokKind::Long => {
                self.advance();
                Ok(AstNode::leaf(NodeKind::LongLiteralExpr, t.text, t.span))
            }
            TokKind::Double => {
                self.advance();
                Ok(AstNode::leaf(NodeKind::DoubleLiteralExpr, t.text, t.span))
            }
            TokKind::Char => {
                self.advance();
                Ok(AstNode::leaf(NodeKind::CharLiteralExpr, t.text, t.span))
            }
            TokKind::Str => {
                self.advance();
                Ok(AstNode::leaf(NodeKind::StringLiteralExpr, t.text, t.span))
            }
            TokKind::Punct if t.is("(") => {
                // Lambdas and casts were handled at the unary level.
                let open = self.advance();
                let inner = self.parse_expression()?;
                let close = self.expect_punct(")")?;
                Ok(AstNode::inner(
                    NodeKind::EnclosedExpr,
                    vec![inner],
                    Span::new(open.span.start, close.span.end),
                ))
            }
            TokKind::Ident => match t.text {
                "true" | "false" => {
                    self.advance();
                    Ok(AstNode::leaf(NodeKind::BooleanLiteralExpr, t.text, t.span))
                }
                "null" => {
                    self.advance();
                    Ok(AstNode::leaf(NodeKind::NullLiteralExpr, t.text, t.span))
                }
                "this" => {
                    self.advance();
                    if self.cur().is("(") {
                        return Err(self.error("constructor call outside a constructor"));
                    }
                    Ok(AstNode::leaf(NodeKind::ThisExpr, t.text, t.span))
                }
                "super" => {
                    self.advance();
                    Ok(AstNode::leaf(NodeKind::SuperExpr, t.text, t.span))
                }
                "new" => {
                    self.advance();
                    self.parse_creation(None)
                }
                _ if PRIMITIVES.contains(&t.text) || t.text == "void" => {
                    // Only legal as `int.class`, `void.class`, `int[]::new`.
                    self.advance();
                    Ok(AstNode::leaf(NodeKind::NameExpr, t.text, t.span))
                }
                _ if is_reserved(t.text) => Err(self.error("unexpected keyword")),
                _ => {
                    if self.peek(1).is("->") {
                        return self.parse_lambda();
                    }
                    self.advance();
                    if self.cur().is("(") {
                        let (args, end) = self.parse_arguments()?;
                        let mut children = vec![self.name_leaf(t)];
                        children.extend(args);
                        return Ok(AstNode::inner(
                            NodeKind::MethodCallExpr,
                            children,
                            Span::new(t.span.start, end),
                        ));
                    }
                    Ok(AstNode::leaf(NodeKind::NameExpr, t.text, t.span))
                }
            },
            _ => Err(self.error("expected an expression")),
        }
    }

    /// Object or array creation; `new` is already consumed. `scope` carries a
    /// qualifying expression from `outer.new Inner()`.
    fn parse_creation(&mut self, scope: Option<AstNode>) -> PResult<AstNode> {
        let start = scope
            .as_ref()
            .map_or(self.toks[self.pos.saturating_sub(1)].span.start, |s| {
                s.span.start
            });
        let t = self.cur();
        let base = if t.kind == TokKind::Ident && PRIMITIVES.contains(&t.text) {
            self.advance();
            AstNode::leaf(NodeKind::PrimitiveType, t.text, t.span)
        } else {
            self.parse_class_type()?
        };
        if self.cur().is("[") {
            let mut children = vec![base];
            let mut end = children[0].span.end;
            let mut saw_empty = false;
            while self.cur().is("[") {
                self.advance();
                if self.cur().is("]") {
                    end = self.advance().span.end;
                    saw_empty = true;
                } else {
                    let dim = self.parse_expression()?;
                    children.push(dim);
                    end = self.expect_punct("]")?.span.end;
                }
            }
            if self.cur().is("{") {
                let init = self.parse_array_initializer()?;
                end = init.span.end;
                children.push(init);
            } else if saw_empty && children.len() == 1 {
                return Err(self.error("array creation with empty dims needs an initializer"));
            }
            return Ok(self.node(NodeKind::ArrayCreationExpr, children, Span::new(start, end)));
        }
        let mut children = Vec::new();
        if let Some(s) = scope {
            children.push(s);
        }
        children.push(base);
        let (args, mut end) = self.parse_arguments()?;
        children.extend(args);
        if self.cur().is("{") {
            // Anonymous class body.
            self.advance();
            while !self.cur().is("}") {
                if self.cur().is(";") {
                    self.advance();
                    continue;
                }
                if let Some(m) = self.parse_member(None)? {
                    children.push(m);
                }
            }
            end = self.expect_punct("}")?.span.end;
        }
        Ok(self.node(
            NodeKind::ObjectCreationExpr,
            children,
            Span::new(start, end),
        ))
    }

    fn parse_array_initializer(&mut self) -> PResult<AstNode> {
        self.enter()?;
        let open = self.expect_punct("{")?;
        let mut elems = Vec::new();
        while !self.cur().is("}") {
            let e = if self.cur().is("{") {
                self.parse_array_initializer()?
            } else {
                self.parse_expression()?
            };
            elems.push(e);
            if self.cur().is(",") {
                self.advance();
            } else {
                break;
            }
        }
        let close = self.expect_punct("}")?;
        self.leave();
        Ok(self.node(
            NodeKind::ArrayInitializerExpr,
            elems,
            Span::new(open.span.start, close.span.end),
        ))
    }
}

fn base_is_primitive(ty: &AstNode) -> bool {
    match ty.kind {
        NodeKind::PrimitiveType => true,
        NodeKind::ArrayType => base_is_primitive(&ty.children[0]),
        _ => false,
    }
}

/// Java keywords that can never be used as identifiers. `this`, `super`,
/// `true`, `false` and `null` are handled as expressions where they occur.
fn is_reserved(word: &str) -> bool {
    matches!(
        word,
        "abstract"
            | "assert"
            | "boolean"
            | "break"
            | "byte"
            | "case"
            | "catch"
            | "char"
            | "class"
            | "const"
            | "continue"
            | "default"
            | "do"
            | "double"
            | "else"
            | "enum"
            | "extends"
            | "final"
            | "finally"
            | "float"
            | "for"
            | "goto"
            | "if"
            | "implements"
            | "import"
            | "instanceof"
            | "int"
            | "interface"
            | "long"
            | "native"
            | "new"
            | "package"
            | "private"
            | "protected"
            | "public"
            | "return"
            | "short"
            | "static"
            | "strictfp"
            | "switch"
            | "synchronized"
            | "throw"
            | "throws"
            | "transient"
            | "try"
            | "void"
            | "volatile"
            | "while"
            | "this"
            | "super"
            | "true"
            | "false"
            | "null"
    )
}
