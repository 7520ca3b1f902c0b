use super::*;
use crate::ast::parse_file;
use crate::rng;

const LISTING_BEFORE: &str = r#"public void setContents(List<Content> contentsBefore, List<Content> contentsAfter) {
    for (int i = 0; i < contentsAfter.size(); i++) {
        Content content = contentsAfter.get(i);
        if (content instanceof PathContent) {
            paths.add((PathContent) content);
        }
    }
}"#;

const LISTING_AFTER: &str = r#"public void setContents(List<Content> contentsBefore, List<Content> contentsAfter) {
    for (int i = 0; i <= contentsAfter.size(); i++) {
        Content content = contentsAfter.get(i);
        if (content instanceof PathContent) {
            paths.add((PathContent) content);
        }
    }
}"#;

fn method_of(body: &str) -> MethodUnit {
    let src = format!("class T {{ {body} }}");
    let mut methods = parse_file(&src, "T.java").unwrap();
    assert_eq!(methods.len(), 1);
    methods.remove(0)
}

#[test]
fn listing_method_has_one_for_less_site() {
    let m = method_of(LISTING_BEFORE);
    let sites = find_comparator_sites(&m);
    assert_eq!(sites.len(), 1);
    assert_eq!(sites[0].comparator, Comparator::Less);
    assert_eq!(sites[0].statement, StatementKind::For);
    assert_eq!(
        ContextType::new(sites[0].statement, sites[0].comparator).to_string(),
        "FORless"
    );
}

#[test]
fn comparator_free_method_has_no_sites() {
    let m = method_of("void f() { g(); }");
    assert!(find_comparator_sites(&m).is_empty());
}

#[test]
fn connective_condition_yields_two_if_sites_in_order() {
    let m = method_of("void f(int a, int b, int c, int d) { if (a > b && c <= d) { g(); } }");
    let sites = find_comparator_sites(&m);
    assert_eq!(sites.len(), 2);
    assert_eq!(sites[0].comparator, Comparator::Greater);
    assert_eq!(sites[0].statement, StatementKind::If);
    assert_eq!(sites[1].comparator, Comparator::LessEquals);
    assert_eq!(sites[1].statement, StatementKind::If);
}

#[test]
fn classification_covers_the_twelve_contexts() {
    let cases: &[(&str, StatementKind)] = &[
        (
            "void f(int n) { for (int i = 0; i < n; i++) { g(); } }",
            StatementKind::For,
        ),
        ("void f(int x) { if (x > 0) { g(); } }", StatementKind::If),
        (
            "void f(int x) { while (x >= 2) { x--; } }",
            StatementKind::While,
        ),
        (
            "void f(int x) { do { x--; } while (x > 0); }",
            StatementKind::Do,
        ),
        ("boolean f(int x) { return x >= 0; }", StatementKind::Return),
        (
            "int f(int x) { return x < 0 ? -x : x; }",
            StatementKind::Ternary,
        ),
        ("void f(int x) { g(x <= 3); }", StatementKind::Method),
        ("void f(int x) { assert x < 10; }", StatementKind::Assert),
        (
            "void f(int x) { boolean b = x < 1; }",
            StatementKind::VariableDeclarator,
        ),
        (
            "void f(int x, boolean b) { b = (x < 1); }",
            StatementKind::Assign,
        ),
        (
            "void f(int x, boolean[] bs) { bs[0] = new Flag(x > 1).get(); }",
            StatementKind::ObjectCreation,
        ),
        // No classifying ancestor: array index position.
        (
            "int f(int[] xs, int i, int j) { return xs[i < j ? 0 : 1]; }",
            StatementKind::Ternary,
        ),
    ];
    for (src, expected) in cases {
        let m = method_of(src);
        let sites = find_comparator_sites(&m);
        assert_eq!(sites.len(), 1, "exactly one site in {src}");
        assert_eq!(sites[0].statement, *expected, "context of {src}");
    }
}

#[test]
fn wrappers_are_skipped_during_classification() {
    let m = method_of("void f(int a, int b, int c) { if (!(a < b) || c > 0) { g(); } }");
    let sites = find_comparator_sites(&m);
    assert_eq!(sites.len(), 2);
    assert!(sites.iter().all(|s| s.statement == StatementKind::If));
}

#[test]
fn flip_pairs_and_involution() {
    assert_eq!(flip(Comparator::Less), Comparator::LessEquals);
    assert_eq!(flip(Comparator::GreaterEquals), Comparator::Greater);
    for c in Comparator::ALL {
        assert_eq!(flip(flip(c)), c, "involution");
        assert_ne!(flip(c), c, "fixed-point free");
    }
}

#[test]
fn mutation_reproduces_the_listing_pair() {
    let m = method_of(LISTING_BEFORE);
    let mut rng = rng::stream(0, "test");
    let (orig, mutated) = mutate_method(&m, "T.java#setContents#0", &mut rng).unwrap();
    assert_eq!(orig.source, LISTING_BEFORE);
    assert_eq!(mutated.source, LISTING_AFTER);
    assert_eq!(orig.label, 0);
    assert_eq!(mutated.label, 1);
    assert_eq!(orig.context_type.to_string(), "FORless");
    assert_eq!(mutated.context_type.to_string(), "FORlessEquals");
    assert_eq!(orig.origin, Origin::Original);
    assert_eq!(
        mutated.origin,
        Origin::Mutated {
            from: Comparator::Less
        }
    );
}

#[test]
fn comparator_free_method_is_ignored() {
    let m = method_of("void f() { g(); }");
    let mut rng = rng::stream(0, "test");
    assert!(mutate_method(&m, "id", &mut rng).is_none());
}

#[test]
fn mutation_edits_only_the_selected_operator_span() {
    let m =
        method_of("void f(int a, int b, int c, int d) { if (a < b) { g(); } if (c > d) { g(); } }");
    let sites = find_comparator_sites(&m);
    assert_eq!(sites.len(), 2);
    // Force the second site (`>`): splice directly.
    let mutated = splice_flip(&m.source, &sites[1]);
    let prefix = &m.source[..sites[1].span.start];
    let suffix = &m.source[sites[1].span.end..];
    assert!(mutated.starts_with(prefix));
    assert!(mutated.ends_with(suffix));
    assert_eq!(&mutated[sites[1].span.start..sites[1].span.start + 2], ">=");
    // Everything before and after the operator is byte-identical.
    assert_eq!(mutated.len(), m.source.len() + 1);
}

#[test]
fn mutation_round_trips_through_reparse() {
    let m = method_of(LISTING_BEFORE);
    let site = &find_comparator_sites(&m)[0];
    let mutated_src = splice_flip(&m.source, site);
    let mutated = crate::ast::parse_method(&mutated_src, "T.java").unwrap();
    let mutated_sites = find_comparator_sites(&mutated);
    assert_eq!(mutated_sites.len(), 1);
    assert_eq!(mutated_sites[0].node_path, site.node_path);
    assert_eq!(mutated_sites[0].comparator, flip(site.comparator));
    // Flipping again restores the original bytes.
    let restored = splice_flip(&mutated.source, &mutated_sites[0]);
    assert_eq!(restored, m.source);
}

#[test]
fn site_filter_restricts_selection() {
    let m = method_of(
        "void f(int a, int b, int n) { if (a < b) { g(); } for (int i = 0; i < n; i++) { g(); } }",
    );
    let mut rng = rng::stream(3, "t");
    let picked = mutate_method_filtered(&m, "id", &mut rng, Some(StatementKind::If)).unwrap();
    assert_eq!(picked.0.context_type.statement, StatementKind::If);
    let mut rng = rng::stream(3, "t");
    assert!(mutate_method_filtered(&m, "id", &mut rng, Some(StatementKind::Do)).is_none());
}

#[test]
fn mutation_is_deterministic_per_seed_and_id() {
    let m = method_of("void f(int a, int b, int c, int d) { if (a < b || c >= d) { g(); } }");
    let run = |seed: u64| {
        let mut rng = rng::stream(seed, "mutate:id");
        mutate_method(&m, "id", &mut rng).unwrap()
    };
    assert_eq!(run(9), run(9));
}

#[test]
fn distribution_percentages_match_reference_counts() {
    // Comparator and statement counts over a large public Java corpus; the
    // derived percentages are the checked-in reference.
    let comparator_counts = [
        (Comparator::Greater, 755_078usize),
        (Comparator::GreaterEquals, 359_455),
        (Comparator::Less, 1_389_789),
        (Comparator::LessEquals, 248_848),
    ];
    let statement_counts = [
        (StatementKind::If, 1_399_436usize),
        (StatementKind::For, 921_948),
        (StatementKind::While, 104_412),
        (StatementKind::Ternary, 100_567),
        (StatementKind::Method, 70_268),
    ];
    let total: usize = comparator_counts.iter().map(|(_, n)| n).sum();
    let pct = |n: usize| (100.0 * n as f64 / total as f64 * 100.0).round() / 100.0;
    assert_eq!(pct(comparator_counts[2].1), 50.48);
    assert_eq!(pct(comparator_counts[0].1), 27.43);
    assert_eq!(pct(comparator_counts[1].1), 13.06);
    assert_eq!(pct(comparator_counts[3].1), 9.04);
    assert_eq!(pct(statement_counts[0].1), 50.83);
    assert_eq!(pct(statement_counts[1].1), 33.49);
    assert_eq!(pct(statement_counts[2].1), 3.79);
    assert_eq!(pct(statement_counts[3].1), 3.65);
    assert_eq!(pct(statement_counts[4].1), 2.55);
}

#[test]
fn distribution_over_single_record() {
    let rec = LabeledMethod {
        id: "x".into(),
        source: "void f() {}".into(),
        label: 0,
        context_type: ContextType::new(StatementKind::For, Comparator::Less),
        origin: Origin::Original,
    };
    let mutated = LabeledMethod {
        label: 1,
        origin: Origin::Mutated {
            from: Comparator::Less,
        },
        context_type: ContextType::new(StatementKind::For, Comparator::LessEquals),
        ..rec.clone()
    };
    let report = corpus_distribution([&rec, &mutated]);
    assert_eq!(report.total_originals, 1);
    assert_eq!(report.by_comparator[&Comparator::Less], 1);
    assert_eq!(report.by_statement[&StatementKind::For], 1);
    let rendered = report.render();
    assert!(rendered.contains("less\t1\t100.00%"));
    assert!(rendered.contains("FOR\t1\t100.00%"));
}

#[test]
fn labeled_corpus_io_round_trips() {
    let m = method_of(LISTING_BEFORE);
    let mut rng = rng::stream(1, "io");
    let (a, b) = mutate_method(&m, "p/T.java#setContents#0", &mut rng).unwrap();
    let records = vec![a, b];
    let mut buf = Vec::new();
    write_labeled(&mut buf, &records).unwrap();
    let back = read_labeled(&buf[..]).unwrap();
    assert_eq!(back, records);
    // Writing again is byte-identical.
    let mut buf2 = Vec::new();
    write_labeled(&mut buf2, &back).unwrap();
    assert_eq!(buf, buf2);
}

#[test]
fn labeled_corpus_reader_rejects_garbage() {
    assert!(read_labeled("one\ttwo".as_bytes()).is_err());
    assert!(read_labeled("id\t7\tFORless\tAAAA".as_bytes()).is_err());
    assert!(read_labeled("id\t0\tNOPEless\tAAAA".as_bytes()).is_err());
    assert!(read_labeled("id\t0\tFORless\t@@@".as_bytes()).is_err());
}

#[test]
fn context_type_has_48_distinct_renderings() {
    let mut seen = std::collections::BTreeSet::new();
    for s in StatementKind::ALL {
        for c in Comparator::ALL {
            let ct = ContextType::new(s, c);
            let rendered = ct.to_string();
            assert_eq!(ContextType::parse(&rendered), Some(ct));
            seen.insert(rendered);
        }
    }
    assert_eq!(seen.len(), 48);
}

proptest::proptest! {
    #[test]
    fn labeled_corpus_round_trip_is_bit_exact(
        source in "[ -~\\n\\t]{0,120}",
        label in 0u8..2,
        stmt in 0usize..12,
        cmp in 0usize..4,
    ) {
        let context_type = ContextType::new(StatementKind::ALL[stmt], Comparator::ALL[cmp]);
        let rec = LabeledMethod {
            id: "p/F.java#m#0#x".into(),
            source,
            label,
            context_type,
            origin: if label == 1 {
                Origin::Mutated { from: flip(context_type.comparator) }
            } else {
                Origin::Original
            },
        };
        let mut buf = Vec::new();
        write_labeled(&mut buf, [&rec]).unwrap();
        let back = read_labeled(&buf[..]).unwrap();
        proptest::prop_assert_eq!(&back[..], std::slice::from_ref(&rec));
        let mut buf2 = Vec::new();
        write_labeled(&mut buf2, &back).unwrap();
        proptest::prop_assert_eq!(buf, buf2);
    }
}
