//! Java lexer. Comments are dropped; everything else becomes a token slice.

use super::{ParseError, Span};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum TokKind {
    Ident,
    Int,
    Long,
    Double,
    Char,
    Str,
    Punct,
    Eof,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Tok<'a> {
    pub kind: TokKind,
    pub text: &'a str,
    pub span: Span,
}

impl<'a> Tok<'a> {
    pub fn is(&self, text: &str) -> bool {
        self.kind == TokKind::Punct && self.text == text
    }

    pub fn is_ident(&self, text: &str) -> bool {
        self.kind == TokKind::Ident && self.text == text
    }
}

// Longest-match first. `>`-starting compounds are split back apart by the
// parser when closing nested type arguments.
const PUNCTS: &[&str] = &[
    ">>>=", ">>>", ">>=", "<<=", ">>", "<<", ">=", "<=", "==", "!=", "&&", "||", "++", "--", "+=",
    "-=", "*=", "/=", "&=", "|=", "^=", "%=", "->", "::", "...", ".", "<", ">", "=", "!", "~", "?",
    ":", "&", "|", "^", "+", "-", "*", "/", "%", "(", ")", "{", "}", "[", "]", ";", ",", "@",
];

pub(crate) fn lex<'a>(src: &'a str, file_path: &str) -> Result<Vec<Tok<'a>>, ParseError> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    let err = |pos: usize, msg: &str| ParseError {
        file_path: file_path.to_string(),
        position: pos,
        message: msg.to_string(),
    };

    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        // Comments.
        if b == b'/' && i + 1 < bytes.len() {
            if bytes[i + 1] == b'/' {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
                continue;
            }
            if bytes[i + 1] == b'*' {
                let start = i;
                i += 2;
                loop {
                    if i + 1 >= bytes.len() {
                        return Err(err(start, "unterminated block comment"));
                    }
                    if bytes[i] == b'*' && bytes[i + 1] == b'/' {
                        i += 2;
                        break;
                    }
                    i += 1;
                }
                continue;
            }
        }
        // Identifiers and keywords.
        if b == b'_' || b == b'$' || b.is_ascii_alphabetic() || b >= 0x80 {
            let start = i;
            if b >= 0x80 {
                let c = src[i..].chars().next().unwrap();
                if !c.is_alphabetic() {
                    return Err(err(i, "unexpected character"));
                }
            }
            while i < bytes.len() {
                let nb = bytes[i];
                if nb == b'_' || nb == b'$' || nb.is_ascii_alphanumeric() {
                    i += 1;
                } else if nb >= 0x80 {
                    let c = src[i..].chars().next().unwrap();
                    if c.is_alphanumeric() {
                        i += c.len_utf8();
                    } else {
                        break;
                    }
                } else {
                    break;
                }
            }
            toks.push(Tok {
                kind: TokKind::Ident,
                text: &src[start..i],
                span: Span::new(start, i),
            });
            continue;
        }
        // Numbers, including `.5` style doubles.
        if b.is_ascii_digit() || (b == b'.' && i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit())
        {
            let (tok, next) = lex_number(src, i);
            toks.push(tok);
            i = next;
            continue;
        }
        if b == b'"' {
            let start = i;
            i += 1;
            loop {
                if i >= bytes.len() {
                    return Err(err(start, "unterminated string literal"));
                }
                match bytes[i] {
                    // Skip the backslash, then the escaped character, which
                    // may be multi-byte.
                    b'\\' => {
                        i += 1;
                        if i >= bytes.len() {
                            return Err(err(start, "unterminated string literal"));
                        }
                        i += src[i..].chars().next().map_or(1, |c| c.len_utf8());
                    }
                    b'"' => {
                        i += 1;
                        break;
                    }
                    b'\n' => return Err(err(start, "newline in string literal")),
                    _ => i += 1,
                }
            }
            toks.push(Tok {
                kind: TokKind::Str,
                text: &src[start..i],
                span: Span::new(start, i),
            });
            continue;
        }
        if b == b'\'' {
            let start = i;
            i += 1;
            loop {
                if i >= bytes.len() {
                    return Err(err(start, "unterminated char literal"));
                }
                match bytes[i] {
                    b'\\' => {
                        i += 1;
                        if i >= bytes.len() {
                            return Err(err(start, "unterminated char literal"));
                        }
                        i += src[i..].chars().next().map_or(1, |c| c.len_utf8());
                    }
                    b'\'' => {
                        i += 1;
                        break;
                    }
                    _ => {
                        // Multi-byte chars are legal ('λ').
                        i += src[i..].chars().next().map_or(1, |c| c.len_utf8());
                    }
                }
            }
            toks.push(Tok {
                kind: TokKind::Char,
                text: &src[start..i],
                span: Span::new(start, i),
            });
            continue;
        }
        // Punctuation by longest match.
        let rest = &src[i..];
        let mut matched = false;
        for p in PUNCTS {
            if rest.starts_with(p) {
                toks.push(Tok {
                    kind: TokKind::Punct,
                    text: &src[i..i + p.len()],
                    span: Span::new(i, i + p.len()),
                });
                i += p.len();
                matched = true;
                break;
            }
        }
        if !matched {
            return Err(err(i, "unexpected character"));
        }
    }
    toks.push(Tok {
        kind: TokKind::Eof,
        text: "",
        span: Span::new(src.len(), src.len()),
    });
    Ok(toks)
}

fn lex_number(src: &str, start: usize) -> (Tok<'_>, usize) {
    let bytes = src.as_bytes();
    let mut i = start;
    let mut is_float = false;

    if bytes[i] == b'0' && i + 1 < bytes.len() && matches!(bytes[i + 1], b'x' | b'X' | b'b' | b'B')
    {
        i += 2;
        while i < bytes.len() && (bytes[i].is_ascii_hexdigit() || bytes[i] == b'_') {
            i += 1;
        }
    } else {
        while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'_') {
            i += 1;
        }
        if i < bytes.len()
            && bytes[i] == b'.'
            && i + 1 < bytes.len()
            && bytes[i + 1].is_ascii_digit()
        {
            is_float = true;
            i += 1;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'_') {
                i += 1;
            }
        } else if i < bytes.len() && bytes[i] == b'.' {
            // `1.` and `1.e3` are valid doubles; `1.foo()` is not a number tail.
            let after = bytes.get(i + 1).copied();
            if !matches!(after, Some(b) if b == b'_' || b == b'$' || b.is_ascii_alphabetic()) {
                is_float = true;
                i += 1;
            } else if matches!(after, Some(b'e' | b'E' | b'f' | b'F' | b'd' | b'D')) {
                // Conservative: treat `1.e5` / `1.f` as a double literal.
                let two_after = bytes.get(i + 2).copied();
                if matches!(after, Some(b'e' | b'E'))
                    && matches!(two_after, Some(b) if b.is_ascii_digit() || b == b'+' || b == b'-')
                {
                    is_float = true;
                    i += 1;
                }
            }
        }
        if i < bytes.len() && matches!(bytes[i], b'e' | b'E') {
            let after = bytes.get(i + 1).copied();
            let digits = matches!(after, Some(b) if b.is_ascii_digit())
                || (matches!(after, Some(b'+' | b'-'))
                    && matches!(bytes.get(i + 2), Some(b) if b.is_ascii_digit()));
            if digits {
                is_float = true;
                i += 1;
                if matches!(bytes[i], b'+' | b'-') {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
            }
        }
    }

    let mut kind = if is_float {
        TokKind::Double
    } else {
        TokKind::Int
    };
    if i < bytes.len() {
        match bytes[i] {
            b'l' | b'L' => {
                kind = TokKind::Long;
                i += 1;
            }
            b'f' | b'F' | b'd' | b'D' if !matches!(&src[start..i], s if s.starts_with("0x") || s.starts_with("0X")) =>
            {
                kind = TokKind::Double;
                i += 1;
            }
            _ => {}
        }
    }
    (
        Tok {
            kind,
            text: &src[start..i],
            span: Span::new(start, i),
        },
        i,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(src: &str) -> Vec<String> {
        lex(src, "t.java")
            .unwrap()
            .iter()
            .filter(|t| t.kind != TokKind::Eof)
            .map(|t| t.text.to_string())
            .collect()
    }

    #[test]
    fn splits_operators_longest_first() {
        assert_eq!(texts("a<=b"), vec!["a", "<=", "b"]);
        assert_eq!(texts("a<b"), vec!["a", "<", "b"]);
        assert_eq!(texts("x >>> 2"), vec!["x", ">>>", "2"]);
        assert_eq!(texts("i++"), vec!["i", "++"]);
    }

    #[test]
    fn skips_comments() {
        assert_eq!(texts("a /* < */ < b // c"), vec!["a", "<", "b"]);
    }

    #[test]
    fn numbers() {
        assert_eq!(
            texts("0x1F 12L 1.5f 2e3 1_000"),
            vec!["0x1F", "12L", "1.5f", "2e3", "1_000"]
        );
        let toks = lex("1.5f", "t").unwrap();
        assert_eq!(toks[0].kind, TokKind::Double);
        let toks = lex("list.size", "t").unwrap();
        assert_eq!(
            toks.iter().map(|t| t.text).collect::<Vec<_>>(),
            vec!["list", ".", "size", ""]
        );
    }

    #[test]
    fn string_with_escapes() {
        assert_eq!(texts(r#"s = "a\"b<";"#), vec!["s", "=", r#""a\"b<""#, ";"]);
    }

    #[test]
    fn rejects_garbage() {
        assert!(lex("int x = #;", "t").is_err());
    }
}
