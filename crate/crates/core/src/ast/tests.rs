use super::*;

const LISTING_FOR: &str = r#"public void setContents(List<Content> contentsBefore, List<Content> contentsAfter) {
    for (int i = 0; i < contentsAfter.size(); i++) {
        Content content = contentsAfter.get(i);
        if (content instanceof PathContent) {
            paths.add((PathContent) content);
        }
    }
}"#;

fn count_kind(node: &AstNode, kind: NodeKind) -> usize {
    let here = usize::from(node.kind == kind);
    here + node
        .children
        .iter()
        .map(|c| count_kind(c, kind))
        .sum::<usize>()
}

fn comparator_ops(node: &AstNode) -> Vec<String> {
    let mut out = Vec::new();
    fn walk(n: &AstNode, out: &mut Vec<String>) {
        if n.kind == NodeKind::BinaryExpr {
            if let Some(op) = n.operator_token() {
                if matches!(op, "<" | "<=" | ">" | ">=") {
                    out.push(op.to_string());
                }
            }
        }
        for c in &n.children {
            walk(c, out);
        }
    }
    walk(node, &mut out);
    out
}

#[test]
fn minimal_class_yields_one_method() {
    let methods = parse_file("class C { void f() {} }", "C.java").unwrap();
    assert_eq!(methods.len(), 1);
    let m = &methods[0];
    assert_eq!(m.method_name, "f");
    assert_eq!(m.root.kind, NodeKind::MethodDeclaration);
    assert_eq!(m.source, "void f() {}");
    assert_eq!(m.root.span, Span::new(0, m.source.len()));
    let body = m
        .root
        .children
        .iter()
        .find(|c| c.kind == NodeKind::BlockStmt)
        .unwrap();
    assert!(body.is_leaf(), "empty body is a childless block");
    assert_eq!(body.token.as_deref(), Some("{}"));
}

#[test]
fn listing_method_structure() {
    let src = format!("class Loader {{ {LISTING_FOR} }}");
    let methods = parse_file(&src, "Loader.java").unwrap();
    assert_eq!(methods.len(), 1);
    let m = &methods[0];
    assert_eq!(m.method_name, "setContents");
    assert_eq!(m.source, LISTING_FOR);
    assert_eq!(count_kind(&m.root, NodeKind::ForStmt), 1);
    assert_eq!(count_kind(&m.root, NodeKind::IfStmt), 1);
    assert_eq!(comparator_ops(&m.root), vec!["<"]);
    // The generics in the parameter list must not read as comparators.
    assert!(count_kind(&m.root, NodeKind::ClassOrInterfaceType) > 2);
}

#[test]
fn malformed_input_is_a_parse_error() {
    let err = parse_file("class C { void f( {} }", "C.java").unwrap_err();
    assert_eq!(err.file_path, "C.java");
    assert!(err.position > 0);
}

#[test]
fn methods_in_nested_and_anonymous_classes_are_included() {
    let src = r#"
class Outer {
    class Inner { int g() { return 1; } }
    void f() {
        Runnable r = new Runnable() {
            public void run() { helper(); }
        };
    }
    interface I { void abstractOne(); default int h() { return 2; } }
}
"#;
    let methods = parse_file(src, "Outer.java").unwrap();
    let names: Vec<_> = methods.iter().map(|m| m.method_name.as_str()).collect();
    // Bodyless interface methods are excluded; default methods are kept.
    assert_eq!(names, vec!["g", "f", "run", "h"]);
}

#[test]
fn methods_come_back_in_source_order_with_lines() {
    let src = "class C {\n  void a() {}\n  void b() {}\n}\n";
    let methods = parse_file(src, "C.java").unwrap();
    assert_eq!(methods[0].method_name, "a");
    assert_eq!(methods[0].start_line, 2);
    assert_eq!(methods[1].method_name, "b");
    assert_eq!(methods[1].start_line, 3);
}

#[test]
fn terminals_for_trivial_method() {
    let methods = parse_file("class C { void f() {} }", "C.java").unwrap();
    let terms = terminals_in_order(&methods[0].root);
    let tokens: Vec<_> = terms.iter().map(|t| t.token.as_deref().unwrap()).collect();
    // Leaf inventory for this grammar: no punctuation nodes, childless
    // structural nodes carry their slice.
    assert_eq!(tokens, vec!["void", "f", "{}"]);
    let value: Vec<_> = value_terminals(&methods[0].root)
        .iter()
        .map(|t| t.token.as_deref().unwrap())
        .collect();
    assert_eq!(value, vec!["void", "f"]);
}

#[test]
fn terminals_of_single_leaf_is_itself() {
    let leaf = AstNode::leaf(NodeKind::NameExpr, "x", Span::new(0, 1));
    let terms = terminals_in_order(&leaf);
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0].token.as_deref(), Some("x"));
}

#[test]
fn terminals_preserve_source_order() {
    let a = AstNode::leaf(NodeKind::NameExpr, "a", Span::new(0, 1));
    let b = AstNode::leaf(NodeKind::NameExpr, "b", Span::new(2, 3));
    let parent = AstNode::inner(NodeKind::BinaryExpr, vec![a, b], Span::new(0, 3));
    let terms = terminals_in_order(&parent);
    let tokens: Vec<_> = terms.iter().map(|t| t.token.as_deref().unwrap()).collect();
    assert_eq!(tokens, vec!["a", "b"]);
}

#[test]
fn token_iff_leaf_and_spans_nest() {
    let src = r#"
class K {
    int pick(int[] xs, int n) {
        int best = 0;
        for (int i = 0; i < n; i++) {
            if (xs[i] > best && i != 3) { best = xs[i]; }
        }
        return n >= 0 ? best : -1;
    }
    String describe(Object o) {
        StringBuilder sb = new StringBuilder("v=");
        sb.append((String) o).append('x');
        do { sb.append(1.5e3); } while (sb.length() <= 4);
        return sb.toString();
    }
}
"#;
    let methods = parse_file(src, "K.java").unwrap();
    assert_eq!(methods.len(), 2);
    fn check(n: &AstNode) {
        assert_eq!(
            n.token.is_some(),
            n.children.is_empty(),
            "token iff leaf: {:?}",
            n.kind
        );
        let mut prev_end = n.span.start;
        for c in &n.children {
            assert!(n.span.contains(&c.span), "child span inside parent");
            assert!(c.span.start >= prev_end, "children disjoint and ordered");
            prev_end = c.span.end;
            check(c);
        }
    }
    for m in &methods {
        check(&m.root);
    }
}

#[test]
fn reparse_of_method_source_is_identical() {
    let src = format!("class Loader {{ {LISTING_FOR} }}");
    let methods = parse_file(&src, "Loader.java").unwrap();
    for m in &methods {
        let again = parse_method(&m.source, &m.file_path).unwrap();
        assert_eq!(again.root, m.root);
        assert_eq!(again.method_name, m.method_name);
    }
}

#[test]
fn parsing_is_deterministic() {
    let src = format!("class Loader {{ {LISTING_FOR} }}");
    let a = parse_compilation_unit(&src, "L.java").unwrap();
    let b = parse_compilation_unit(&src, "L.java").unwrap();
    assert_eq!(a, b);
}

#[test]
fn grammar_covers_common_constructs() {
    let src = r#"
package com.example.app;

import java.util.*;
import java.util.List;
import static java.lang.Math.max;

@Deprecated
public class Wide<T extends Comparable<T>> extends Base implements Api, Closeable {
    private static final int LIMIT = 32;
    protected volatile Map<String, List<Integer>> cache = new HashMap<>();
    int[] data = new int[LIMIT];
    int csty[] = {1, 2, 3};

    static { System.out.println("init"); }

    enum Mode implements Api {
        FAST(1), SLOW(2) { int weight() { return 9; } };
        final int w;
        Mode(int w) { this.w = w; }
    }

    public Wide(int seed) throws IOException {
        super();
        this.hash = seed ^ (seed >>> 16);
    }

    @SafeVarargs
    final <V> V pickFirst(V... options) {
        outer:
        for (V v : options) {
            switch (v.hashCode() % 3) {
                case 0:
                case 1: return v;
                default: break outer;
            }
        }
        return null;
    }

    public synchronized void mix(List<? extends Number> nums) {
        try (AutoCloseable c = open("x")) {
            assert nums != null : "nums";
            long total = 0L;
            for (int i = 0, j = nums.size(); i < j; ++i) {
                total += nums.get(i).longValue();
            }
            while (total > 0) { total >>= 1; }
            Runnable r = () -> System.out.println(total + 1);
            Supplier<String> s = this::toString;
            Function<String, Integer> f = String::length;
            char ch = total == 0 ? 'y' : 'n';
            Object arr = new String[]{"a", "b"};
            Class<?> k = Wide.class;
            boolean ok = (total & 1) == 0 && !(ch > 'a') || ch <= 'z';
        } catch (IllegalStateException | IllegalArgumentException e) {
            throw new RuntimeException(e.getMessage(), e);
        } catch (Exception e) {
            handle(e);
        } finally {
            cleanup();
        }
    }
}

interface Api { void abstractOne(); }
"#;
    let methods = parse_file(src, "Wide.java").unwrap();
    let names: Vec<_> = methods.iter().map(|m| m.method_name.as_str()).collect();
    assert!(names.contains(&"pickFirst"));
    assert!(names.contains(&"mix"));
    assert!(names.contains(&"weight"));
    assert!(!names.contains(&"abstractOne"));
}

#[test]
fn generics_shift_split_round_trips() {
    let src = "class G { Map<String, List<Map<Integer, String>>> deep() { return null; } }";
    let methods = parse_file(src, "G.java").unwrap();
    assert_eq!(methods.len(), 1);
    // `>>>` at the end of the nested generic must split into three closers.
    assert_eq!(comparator_ops(&methods[0].root), Vec::<String>::new());
    let again = parse_method(&methods[0].source, "G.java").unwrap();
    assert_eq!(again.root, methods[0].root);
}

#[test]
fn shift_and_comparison_expressions_coexist() {
    let src = "class S { int f(int a, int b) { int c = a >> 2; return a >= b ? c : a >>> 1; } }";
    let methods = parse_file(src, "S.java").unwrap();
    assert_eq!(comparator_ops(&methods[0].root), vec![">="]);
}

#[test]
fn cast_versus_enclosed_expression() {
    let src = r#"
class C {
    int f(Object o, int a, int b) {
        int x = (a) + b;
        int y = (int) -1.5;
        String s = (String) o;
        List<String> l = (List<String>) o;
        return x + y;
    }
}
"#;
    let methods = parse_file(src, "C.java").unwrap();
    let root = &methods[0].root;
    assert_eq!(count_kind(root, NodeKind::CastExpr), 3);
    assert_eq!(count_kind(root, NodeKind::EnclosedExpr), 1);
}

#[test]
fn lambda_bodies_are_opaque() {
    let src = "class L { void f(List<Integer> xs) { xs.removeIf(x -> x < 3); } }";
    let methods = parse_file(src, "L.java").unwrap();
    let root = &methods[0].root;
    // The `<` inside the lambda body is invisible to the tree.
    assert_eq!(comparator_ops(root), Vec::<String>::new());
    assert_eq!(count_kind(root, NodeKind::LambdaExpr), 1);
}

#[test]
fn operator_leaves_have_exact_spans() {
    let src = "class O { boolean f(int a, int b) { return a <= b; } }";
    let methods = parse_file(src, "O.java").unwrap();
    let m = &methods[0];
    fn find_op(n: &AstNode) -> Option<Span> {
        if n.kind == NodeKind::Operator && n.token.as_deref() == Some("<=") {
            return Some(n.span);
        }
        n.children.iter().find_map(find_op)
    }
    let span = find_op(&m.root).unwrap();
    assert_eq!(&m.source[span.start..span.end], "<=");
}

#[test]
fn node_at_follows_child_indices() {
    let methods = parse_file("class C { int f() { return 1 + 2; } }", "C.java").unwrap();
    let root = &methods[0].root;
    fn path_to_kind(n: &AstNode, kind: NodeKind, path: &mut Vec<usize>) -> bool {
        if n.kind == kind {
            return true;
        }
        for (i, c) in n.children.iter().enumerate() {
            path.push(i);
            if path_to_kind(c, kind, path) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = Vec::new();
    assert!(path_to_kind(root, NodeKind::BinaryExpr, &mut path));
    assert_eq!(root.node_at(&path).unwrap().kind, NodeKind::BinaryExpr);
}

#[test]
fn multibyte_escapes_in_literals_do_not_break_lexing() {
    // Escaped multi-byte characters are not valid Java escapes, but they
    // must produce a clean error or token, never a panic.
    let srcs = [
        "class C { char c = '\\é'; }",
        "class C { String s = \"\\é\"; }",
        "class C { String s = \"λ < é\"; void f() {} }",
        "class C { char c = 'λ'; }",
    ];
    for src in srcs {
        let _ = parse_file(src, "U.java");
    }
    let ok = parse_file("class C { boolean f(char c) { return c < 'λ'; } }", "U.java").unwrap();
    assert_eq!(ok.len(), 1);
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]
    // Arbitrary input must parse or fail cleanly; corpus ingestion relies on
    // skip-with-log, never on catching panics.
    #[test]
    fn parser_never_panics_on_arbitrary_input(src in "\\PC{0,400}") {
        let _ = parse_file(&src, "F.java");
    }

    #[test]
    fn parser_never_panics_on_java_like_input(
        src in "(class|interface|enum|[{}()<>;=+\\-!&|? :.,\"'\\\\a-z0-9\\n\\t ]){0,300}",
    ) {
        let _ = parse_file(&src, "F.java");
    }
}
