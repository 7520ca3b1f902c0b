use super::*;
use crate::ast::{parse_file, MethodUnit};
use crate::oracle::brute_force_paths;
use crate::rng;

fn method_of(body: &str) -> MethodUnit {
    let src = format!("class T {{ {body} }}");
    let mut methods = parse_file(&src, "T.java").unwrap();
    assert_eq!(methods.len(), 1);
    methods.remove(0)
}

// ---------------------------------------------------------------------------
// java_string_hash
// ---------------------------------------------------------------------------

#[test]
fn hash_base_cases() {
    assert_eq!(java_string_hash(""), 0);
    assert_eq!(java_string_hash("a"), 97);
    assert_eq!(java_string_hash("Ab"), 2113); // 31·65 + 98
}

#[test]
fn hash_collides_like_the_reference() {
    assert_eq!(java_string_hash("Aa"), java_string_hash("BB"));
}

fn unescape_fixture(s: &str) -> String {
    // Fixture strings are unicode-escaped: \t \n \\ \xHH \uHHHH \UHHHHHHHH.
    let mut out = String::new();
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        match chars.next() {
            Some('t') => out.push('\t'),
            Some('n') => out.push('\n'),
            Some('r') => out.push('\r'),
            Some('\\') => out.push('\\'),
            Some('x') => {
                let hex: String = chars.by_ref().take(2).collect();
                out.push(char::from_u32(u32::from_str_radix(&hex, 16).unwrap()).unwrap());
            }
            Some('u') => {
                let hex: String = chars.by_ref().take(4).collect();
                out.push(char::from_u32(u32::from_str_radix(&hex, 16).unwrap()).unwrap());
            }
            Some('U') => {
                let hex: String = chars.by_ref().take(8).collect();
                out.push(char::from_u32(u32::from_str_radix(&hex, 16).unwrap()).unwrap());
            }
            other => panic!("unknown escape {other:?}"),
        }
    }
    out
}

#[test]
fn hash_matches_reference_table() {
    let raw = include_str!("../../../../fixtures/java-hash/hashcode_reference.tsv");
    let mut checked = 0;
    for line in raw.lines().skip(1) {
        if line.is_empty() {
            continue;
        }
        let (escaped, expect) = line.rsplit_once('\t').unwrap();
        let s = unescape_fixture(escaped);
        let expect: i32 = expect.parse().unwrap();
        assert_eq!(java_string_hash(&s), expect, "hash of {s:?}");
        checked += 1;
    }
    assert!(
        checked >= 50,
        "need at least 50 reference values, got {checked}"
    );
}

// ---------------------------------------------------------------------------
// normalize_terminal
// ---------------------------------------------------------------------------

#[test]
fn normalization_rules() {
    assert_eq!(normalize_terminal("contentsAfter"), "contents|after");
    assert_eq!(normalize_terminal("i"), "i");
    assert_eq!(normalize_terminal("\"hello\""), "STR");
    assert_eq!(normalize_terminal("'x'"), "STR");
    assert_eq!(normalize_terminal("XMLParser"), "xml|parser");
    assert_eq!(normalize_terminal("snake_case_token"), "snake|case|token");
    assert_eq!(normalize_terminal("maxHTTPRetries2"), "max|http|retries2");
    assert_eq!(normalize_terminal("123"), "123");
    assert_eq!(normalize_terminal("0x1F"), "0x1F");
    assert_eq!(normalize_terminal("1.5e3"), "1.5e3");
    assert_eq!(normalize_terminal("this"), "this");
    // Never empty, even for identifiers with no letters.
    assert_eq!(normalize_terminal("_"), "_");
    assert_eq!(normalize_terminal("$"), "$");
}

// ---------------------------------------------------------------------------
// extract_paths
// ---------------------------------------------------------------------------

#[test]
fn identity_method_links_parameter_to_return() {
    let m = method_of("int f(int a){return a;}");
    let paths = extract_paths(&m, DEFAULT_MAX_PATH_LENGTH, DEFAULT_MAX_PATH_WIDTH).unwrap();
    // Terminals: int(ret) f int(param) a(param) a(return)
    let terminals = crate::ast::value_terminals(&m.root);
    let tokens: Vec<_> = terminals
        .iter()
        .map(|t| t.token.as_deref().unwrap())
        .collect();
    assert_eq!(tokens, vec!["int", "f", "int", "a", "a"]);
    let param_to_return = paths
        .iter()
        .find(|p| p.source_index == 3 && p.target_index == 4)
        .expect("the a–a pair survives the default limits");
    assert_eq!(
        param_to_return.path,
        "SimpleName^Parameter^MethodDeclaration_BlockStmt_ReturnStmt_NameExpr"
    );
}

#[test]
fn adjacent_terminals_have_a_three_node_path() {
    let m = method_of("void f() { g(a, b); }");
    let paths = extract_paths(&m, DEFAULT_MAX_PATH_LENGTH, DEFAULT_MAX_PATH_WIDTH).unwrap();
    let pair = paths
        .iter()
        .find(|p| p.path == "NameExpr^MethodCallExpr_NameExpr")
        .expect("a and b meet at the call");
    assert!(pair.source_index < pair.target_index);
}

#[test]
fn length_limit_excludes_long_paths() {
    // Terminal order: void(0) f(1) int(2) a(3) x(4) y(5) z(6) g(7) b(8);
    // the a–b pair needs 13 nodes, over the default cap of 8.
    let m = method_of("void f(int a) { if (x) { if (y) { if (z) { g(b); } } } }");
    let all = extract_paths(&m, 32, 32).unwrap();
    let long_pair = all
        .iter()
        .find(|p| p.source_index == 3 && p.target_index == 8)
        .unwrap();
    let nodes = long_pair.path.matches(['^', '_']).count() + 1;
    assert!(nodes > 8, "a–b path has {nodes} nodes");
    let limited = extract_paths(&m, 8, 32).unwrap();
    assert!(limited.iter().all(|p| node_count(&p.path) <= 8));
    assert!(!limited
        .iter()
        .any(|p| p.source_index == 3 && p.target_index == 8));
}

#[test]
fn width_limit_prunes_distant_siblings() {
    let m = method_of("void f() { g(a, b, c, d, e); }");
    // Terminal order: void(0) f(1) a(2) b(3) c(4) d(5) e(6). In the call
    // node `a` is child 1 and `e` is child 5: width 4.
    let wide = extract_paths(&m, 8, 8).unwrap();
    assert!(wide
        .iter()
        .any(|p| p.source_index == 2 && p.target_index == 6));
    let narrow = extract_paths(&m, 8, 2).unwrap();
    assert!(!narrow
        .iter()
        .any(|p| p.source_index == 2 && p.target_index == 6));
    // Width 2 still links `a` to `c`.
    assert!(narrow
        .iter()
        .any(|p| p.source_index == 2 && p.target_index == 4));
}

#[test]
fn comparator_flip_changes_paths() {
    let before = method_of("void f(int n) { for (int i = 0; i < n; i++) { g(i); } }");
    let after = method_of("void f(int n) { for (int i = 0; i <= n; i++) { g(i); } }");
    let pb = extract_paths(&before, 8, 2).unwrap();
    let pa = extract_paths(&after, 8, 2).unwrap();
    assert!(pb.iter().any(|p| p.path.contains("BinaryExpr:Less_")));
    assert!(pa.iter().any(|p| p.path.contains("BinaryExpr:LessEquals_")));
    // Same pair structure, different labels through the flipped node.
    assert_eq!(pb.len(), pa.len());
    assert_ne!(pb, pa);
}

#[test]
fn too_small_method_is_empty_representation() {
    let m = method_of("void f() {}");
    // Terminals `void` and `f` sit under MethodDeclaration: their pair is the
    // only candidate; with a pathological width limit of zero nothing
    // survives.
    assert_eq!(extract_paths(&m, 8, 0), Err(EmptyRepresentation));
}

#[test]
fn extraction_agrees_with_brute_force_oracle() {
    let sources = [
        "int f(int a){return a;}",
        "void f(int n) { for (int i = 0; i < n; i++) { g(i); } }",
        "boolean g(int x, int y) { return x >= 0 && y <= x ? true : false; }",
        "void h(List<String> xs) { int c = 0; while (c < xs.size()) { c += 1; } }",
        "int k(int[] data) { int best = data[0]; if (data[1] > best) { best = data[1]; } return best; }",
        "void m(Object o) { String s = (String) o; p(s.length() > 2 ? s : \"pad\"); }",
    ];
    for src in sources {
        let m = method_of(src);
        for (max_len, max_width) in [(8, 2), (6, 1), (12, 3)] {
            let fast: Vec<(usize, usize, String)> = extract_paths(&m, max_len, max_width)
                .unwrap()
                .into_iter()
                .map(|p| (p.source_index, p.target_index, p.path))
                .collect();
            let slow = brute_force_paths(&m, max_len, max_width);
            assert_eq!(fast, slow, "mismatch on {src} at ({max_len},{max_width})");
        }
    }
}

#[test]
fn path_symmetry_reverses_with_separators_swapped() {
    let m = method_of("void f(int n) { for (int i = 0; i < n; i++) { g(i); } }");
    let paths = extract_paths(&m, 9, 3).unwrap();
    // Only the i < j orientation is emitted; its reverse with `^`/`_`
    // swapped is the j → i path. Reversal is an involution and swaps the
    // climb/descend step counts.
    for p in &paths {
        let reversed = reverse_path(&p.path);
        assert_eq!(reverse_path(&reversed), p.path);
        assert_eq!(p.path.matches('^').count(), reversed.matches('_').count());
        assert_eq!(p.path.matches('_').count(), reversed.matches('^').count());
        let mut fwd: Vec<&str> = p.path.split(['^', '_']).collect();
        fwd.reverse();
        let rev: Vec<&str> = reversed.split(['^', '_']).collect();
        assert_eq!(fwd, rev, "node names reverse");
    }
}

fn node_count(path: &str) -> usize {
    path.matches(['^', '_']).count() + 1
}

fn reverse_path(path: &str) -> String {
    // Split into node names and separators, reverse, swap ^ and _.
    let mut names = Vec::new();
    let mut seps = Vec::new();
    let mut cur = String::new();
    for c in path.chars() {
        if c == '^' || c == '_' {
            names.push(std::mem::take(&mut cur));
            seps.push(c);
        } else {
            cur.push(c);
        }
    }
    names.push(cur);
    let mut out = String::new();
    for (k, name) in names.iter().rev().enumerate() {
        if k > 0 {
            let sep = seps[seps.len() - k];
            out.push(if sep == '^' { '_' } else { '^' });
        }
        out.push_str(name);
    }
    out
}

// ---------------------------------------------------------------------------
// Vocabulary
// ---------------------------------------------------------------------------

#[test]
fn vocabulary_keeps_top_entries() {
    let extracted = vec![(
        vec![
            "a".to_string(),
            "a".into(),
            "a".into(),
            "a".into(),
            "a".into(),
            "b".into(),
            "b".into(),
            "b".into(),
            "c".into(),
        ],
        vec![10, 10, 20],
    )];
    let vocab = build_vocabulary(extracted, 2, 10);
    assert_eq!(vocab.token_id("a"), 2);
    assert_eq!(vocab.token_id("b"), 3);
    assert_eq!(vocab.token_id("c"), UNK_ID);
    assert_eq!(vocab.path_id(10), 2);
    assert_eq!(vocab.path_id(20), 3);
    assert_eq!(vocab.path_id(99), UNK_ID);
}

#[test]
fn empty_corpus_yields_reserved_only() {
    let vocab = build_vocabulary(Vec::<(Vec<String>, Vec<i32>)>::new(), 10, 10);
    assert_eq!(vocab.token_vocab_size(), 2);
    assert_eq!(vocab.path_vocab_size(), 2);
}

#[test]
fn vocabulary_ties_break_lexicographically() {
    let extracted = vec![(vec!["x".to_string(), "y".into()], vec![7, 3])];
    let vocab = build_vocabulary(extracted, 1, 1);
    assert_eq!(vocab.token_id("x"), 2);
    assert_eq!(vocab.token_id("y"), UNK_ID);
    // Numeric order for hashes.
    assert_eq!(vocab.path_id(3), 2);
    assert_eq!(vocab.path_id(7), UNK_ID);
}

#[test]
fn vocabulary_file_round_trips() {
    let m = method_of("void f(int countMax) { for (int i = 0; i < countMax; i++) { g(i); } }");
    let vocab = build_vocabulary(vec![extract_for_vocab(&m, 8, 2)], 100, 100);
    let mut buf = Vec::new();
    write_vocabulary(&mut buf, &vocab).unwrap();
    let back = read_vocabulary(&buf[..]).unwrap();
    assert_eq!(back, vocab);
    let mut buf2 = Vec::new();
    write_vocabulary(&mut buf2, &back).unwrap();
    assert_eq!(buf, buf2, "writer is bit-stable");
    let text = String::from_utf8(buf).unwrap();
    assert!(text.starts_with(&format!("token-vocab {}\n", vocab.token_vocab_size())));
    assert!(text.contains(&format!("path-vocab {}", vocab.path_vocab_size())));
}

#[test]
fn vocabulary_reader_rejects_sparse_ids() {
    let text = "token-vocab 4\n2\ta\n4\tb\npath-vocab 2\n";
    assert!(read_vocabulary(text.as_bytes()).is_err());
}

// ---------------------------------------------------------------------------
// encode_method
// ---------------------------------------------------------------------------

fn big_method(args: usize) -> MethodUnit {
    // Wide call: n arguments under one call node produce ~n²/2 pairs at
    // width cap n.
    let names: Vec<String> = (0..args).map(|i| format!("v{i}")).collect();
    method_of(&format!("void f() {{ g({}); }}", names.join(", ")))
}

#[test]
fn over_cap_methods_sample_exactly_max_contexts() {
    let m = big_method(40);
    let vocab = build_vocabulary(vec![extract_for_vocab(&m, 8, 64)], 1000, 10_000);
    let all = encode_method(&m, &vocab, usize::MAX, 8, 64, &mut rng::stream(0, "e")).unwrap();
    assert!(
        all.len() > 350,
        "need an over-cap example, got {}",
        all.len()
    );
    let mut r = rng::stream(0, "e");
    let sampled = encode_method(&m, &vocab, 200, 8, 64, &mut r).unwrap();
    assert_eq!(sampled.len(), 200);
    // A subset of the full set, order preserved.
    let mut cursor = 0;
    for t in &sampled {
        while cursor < all.len() && all[cursor] != *t {
            cursor += 1;
        }
        assert!(cursor < all.len(), "sampled triple must appear in order");
        cursor += 1;
    }
}

#[test]
fn under_cap_methods_keep_everything_in_order() {
    let m = method_of("int f(int a){return a;}");
    let vocab = build_vocabulary(vec![extract_for_vocab(&m, 8, 2)], 100, 100);
    let no_cap = encode_method(&m, &vocab, usize::MAX, 8, 2, &mut rng::stream(1, "x")).unwrap();
    let capped = encode_method(&m, &vocab, 200, 8, 2, &mut rng::stream(2, "y")).unwrap();
    assert_eq!(no_cap, capped, "below the cap the rng is irrelevant");
}

#[test]
fn out_of_vocabulary_tokens_become_unk() {
    let m = method_of("int f(int a){return a;}");
    let vocab = Vocabulary::default(); // nothing but PAD/UNK
    let triples = encode_method(&m, &vocab, 200, 8, 2, &mut rng::stream(0, "u")).unwrap();
    assert!(!triples.is_empty());
    for t in triples {
        assert_eq!(t.source_token_id, UNK_ID);
        assert_eq!(t.path_id, UNK_ID);
        assert_eq!(t.target_token_id, UNK_ID);
    }
}

#[test]
fn encoding_is_deterministic_per_seed() {
    let m = big_method(40);
    let vocab = build_vocabulary(vec![extract_for_vocab(&m, 8, 64)], 1000, 10_000);
    let a = encode_method(&m, &vocab, 200, 8, 64, &mut rng::stream(5, "enc")).unwrap();
    let b = encode_method(&m, &vocab, 200, 8, 64, &mut rng::stream(5, "enc")).unwrap();
    assert_eq!(a, b);
}

// ---------------------------------------------------------------------------
// Dataset file format
// ---------------------------------------------------------------------------

#[test]
fn dataset_io_round_trips() {
    use crate::mutate::{Comparator, StatementKind};
    let examples = vec![
        EncodedExample {
            id: "p/T.java#f#0#orig".into(),
            label: 0,
            context_type: ContextType::new(StatementKind::For, Comparator::Less),
            contexts: vec![
                PathContextTriple {
                    source_token_id: 2,
                    path_id: 3,
                    target_token_id: 4,
                },
                PathContextTriple {
                    source_token_id: 1,
                    path_id: 1,
                    target_token_id: 9,
                },
            ],
        },
        EncodedExample {
            id: "p/T.java#f#0#mut".into(),
            label: 1,
            context_type: ContextType::new(StatementKind::For, Comparator::LessEquals),
            contexts: vec![PathContextTriple {
                source_token_id: 5,
                path_id: 6,
                target_token_id: 7,
            }],
        },
    ];
    let mut buf = Vec::new();
    write_dataset(&mut buf, &examples).unwrap();
    let text = String::from_utf8(buf.clone()).unwrap();
    assert_eq!(
        text.lines().next().unwrap(),
        "p/T.java#f#0#orig\t0\tFORless\t2,3,4 1,1,9"
    );
    let back = read_dataset(&buf[..]).unwrap();
    assert_eq!(back, examples);
}

#[test]
fn dataset_reader_rejects_bad_lines() {
    assert!(read_dataset("id\t0\tFORless\t".as_bytes()).is_err());
    assert!(read_dataset("id\t2\tFORless\t1,1,1".as_bytes()).is_err());
    assert!(read_dataset("id\t0\tFORless\t1,1".as_bytes()).is_err());
    assert!(read_dataset("id\t0\tWHO\t1,1,1".as_bytes()).is_err());
}

proptest::proptest! {
    #[test]
    fn dataset_round_trip_is_bit_exact(
        seed in 0u64..500,
        n_examples in 1usize..12,
    ) {
        use crate::mutate::{Comparator, StatementKind};
        use rand::Rng as _;
        let mut r = rng::stream(seed, "ds-prop");
        let examples: Vec<EncodedExample> = (0..n_examples)
            .map(|k| EncodedExample {
                id: format!("proj{}/F{k}.java#m{k}#{k}#{}", seed % 7, if k % 2 == 0 { "orig" } else { "mut" }),
                label: (k % 2) as u8,
                context_type: ContextType::new(
                    StatementKind::ALL[r.random_range(0..12)],
                    Comparator::ALL[r.random_range(0..4)],
                ),
                contexts: (0..r.random_range(1..20))
                    .map(|_| PathContextTriple {
                        source_token_id: r.random_range(0..5000),
                        path_id: r.random_range(0..5000),
                        target_token_id: r.random_range(0..5000),
                    })
                    .collect(),
            })
            .collect();
        let mut buf = Vec::new();
        write_dataset(&mut buf, &examples).unwrap();
        let back = read_dataset(&buf[..]).unwrap();
        proptest::prop_assert_eq!(&back, &examples);
        let mut buf2 = Vec::new();
        write_dataset(&mut buf2, &back).unwrap();
        proptest::prop_assert_eq!(buf, buf2);
    }
}
