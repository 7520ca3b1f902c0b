//! Shared helpers for the integration suites: a seeded generator for the
//! canonical-loop corpus and small pipeline conveniences.

use std::fs;
use std::path::{Path, PathBuf};

use obo_core::rng;
use rand::Rng;

const COLLECTIONS: &[&str] = &[
    "items", "rows", "entries", "values", "tokens", "nodes", "children", "elements", "records",
    "buffers", "names", "events", "links", "parts", "cells", "queue", "pending", "visible",
];
const INDICES: &[&str] = &["i", "j", "k", "idx", "pos", "cursor", "n", "slot"];
const VERBS: &[&str] = &[
    "scan", "walk", "drain", "visit", "emit", "collect", "process", "consume", "flush", "track",
];
const NOUNS: &[&str] = &[
    "Items", "Rows", "Entries", "Batch", "Queue", "Window", "Chunk", "Range", "Page", "Group",
];
const CALLEES: &[&str] = &[
    "handle", "process", "absorb", "push", "record", "accept", "observe", "forward",
];

/// One synthetic method built around a canonical counted loop. Ascending
/// loops compare with `<`; descending ones with `>=`.
fn synth_method(rng: &mut impl Rng, ordinal: usize) -> String {
    let coll = COLLECTIONS[rng.random_range(0..COLLECTIONS.len())];
    let idx = INDICES[rng.random_range(0..INDICES.len())];
    let callee = CALLEES[rng.random_range(0..CALLEES.len())];
    let verb = VERBS[rng.random_range(0..VERBS.len())];
    let noun = NOUNS[rng.random_range(0..NOUNS.len())];
    let name = format!("{verb}{noun}{ordinal}");
    let descending = rng.random_range(0..10) < 3;
    if descending {
        format!(
            "    public void {name}(java.util.List<String> {coll}) {{\n        for (int {idx} = {coll}.size() - 1; {idx} >= 0; {idx}--) {{\n            {callee}({coll}.get({idx}));\n        }}\n    }}\n"
        )
    } else {
        format!(
            "    public void {name}(java.util.List<String> {coll}) {{\n        for (int {idx} = 0; {idx} < {coll}.size(); {idx}++) {{\n            {callee}({coll}.get({idx}));\n        }}\n    }}\n"
        )
    }
}

/// Writes `n_methods` canonical-loop methods under `root`, grouped into
/// `n_projects` template-seed directories. Returns the file list.
pub fn write_synth_corpus(
    root: &Path,
    n_methods: usize,
    n_projects: usize,
    seed: u64,
) -> Vec<PathBuf> {
    const METHODS_PER_CLASS: usize = 5;
    let mut files = Vec::new();
    let mut written = 0usize;
    let mut class_no = 0usize;
    while written < n_methods {
        let project = class_no % n_projects;
        let mut rng = rng::stream(seed, &format!("synth:{class_no}"));
        let class_name = format!("Scan{class_no}");
        let mut body = String::new();
        let in_class = METHODS_PER_CLASS.min(n_methods - written);
        for m in 0..in_class {
            body.push_str(&synth_method(&mut rng, written + m));
        }
        written += in_class;
        let dir = root.join(format!("tmpl_{project:04}"));
        fs::create_dir_all(&dir).unwrap();
        let file = dir.join(format!("{class_name}.java"));
        fs::write(
            &file,
            format!("package synth.t{project};\n\npublic class {class_name} {{\n{body}}}\n"),
        )
        .unwrap();
        files.push(file);
        class_no += 1;
    }
    files
}

/// SHA-256 of every file under `dir`, keyed by relative path.
#[allow(dead_code)] // only the acceptance target hashes artifacts
pub fn hash_tree(dir: &Path) -> Vec<(String, String)> {
    use sha2::{Digest, Sha256};
    let mut out = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in fs::read_dir(&d).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let bytes = fs::read(&path).unwrap();
                let digest = Sha256::digest(&bytes);
                let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
                let rel = path
                    .strip_prefix(dir)
                    .unwrap()
                    .to_string_lossy()
                    .to_string();
                out.push((rel, hex));
            }
        }
    }
    out.sort();
    out
}

/// Workspace-level fixtures directory.
pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .canonicalize()
        .expect("fixtures directory exists")
}
