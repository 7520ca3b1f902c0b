//! Pipeline commands behind the `obo` binary: mutate → split → vocab →
//! encode → train → eval → predict.
//!
//! Exit-code scheme: 0 success, 1 I/O or compatibility error, 2 empty
//! result, 64 usage error. All randomness is derived from one `--seed`
//! (fallback: `OBO_SEED`), keyed per component and per item, so reruns are
//! byte-identical and unrelated inputs never reshuffle each other.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use walkdir::WalkDir;

use obo_core::ast::{parse_file, parse_method, MethodUnit};
use obo_core::eval::{breakdown, render_report, GroupBy, Prediction, ReportFormat};
use obo_core::model::{forward, init_params, load_params, save_params, Mode, ModelDims};
use obo_core::mutate::{
    corpus_distribution, mutate_method_filtered, read_labeled, write_labeled, LabeledMethod,
    StatementKind,
};
use obo_core::paths::{
    build_vocabulary, encode_method, extract_for_vocab, read_dataset, read_vocabulary,
    write_dataset, write_vocabulary, EncodedExample, Vocabulary,
};
use obo_core::train::{train, EpochRecord, TrainConfig};
use obo_core::{model, rng};

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_EMPTY: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

/// Path-extraction knobs shared by vocab, encode and predict.
#[derive(Debug, Clone, Copy)]
pub struct ExtractOptions {
    pub max_path_length: usize,
    pub max_path_width: usize,
    pub max_contexts: usize,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        ExtractOptions {
            max_path_length: obo_core::paths::DEFAULT_MAX_PATH_LENGTH,
            max_path_width: obo_core::paths::DEFAULT_MAX_PATH_WIDTH,
            max_contexts: obo_core::paths::DEFAULT_MAX_CONTEXTS,
        }
    }
}

/// `.java` files under `root` (or `root` itself), sorted for determinism.
pub fn collect_java_files(root: &Path) -> Result<Vec<PathBuf>> {
    if root.is_file() {
        return Ok(vec![root.to_path_buf()]);
    }
    if !root.is_dir() {
        bail!("input path {} does not exist", root.display());
    }
    let mut files: Vec<PathBuf> = WalkDir::new(root)
        .follow_links(false)
        .into_iter()
        .filter_map(|e| e.ok())
        .filter(|e| e.file_type().is_file())
        .map(|e| e.into_path())
        .filter(|p| p.extension().is_some_and(|ext| ext == "java"))
        .collect();
    files.sort();
    Ok(files)
}

fn relative_id_path(root: &Path, file: &Path) -> String {
    let rel = file.strip_prefix(root).unwrap_or(file);
    rel.to_string_lossy().replace('\\', "/")
}

/// Parses every collected file, skipping unparseable ones with a note on
/// stderr. Returns (relative path, methods) per file.
fn parse_corpus(root: &Path, files: &[PathBuf]) -> Vec<(String, Vec<MethodUnit>)> {
    files
        .par_iter()
        .filter_map(|file| {
            let rel = relative_id_path(root, file);
            let text = match std::fs::read_to_string(file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("skipping {rel}: {e}");
                    return None;
                }
            };
            match parse_file(&text, &rel) {
                Ok(methods) => Some((rel, methods)),
                Err(e) => {
                    eprintln!("skipping unparseable file: {e}");
                    None
                }
            }
        })
        .collect()
}

/// Generates the balanced labeled corpus plus its distribution sidecar.
pub fn cmd_mutate(
    input: &Path,
    out: &Path,
    seed: u64,
    only_context: Option<StatementKind>,
) -> Result<u8> {
    let files = collect_java_files(input)?;
    let parsed = parse_corpus(input, &files);

    let mut records: Vec<LabeledMethod> = Vec::new();
    let mut methods_seen = 0usize;
    for (rel, methods) in &parsed {
        for (ordinal, method) in methods.iter().enumerate() {
            methods_seen += 1;
            let id = format!("{rel}#{}#{ordinal}", method.method_name);
            let mut method_rng = rng::stream(seed, &format!("mutate:{id}"));
            if let Some((orig, mutated)) =
                mutate_method_filtered(method, &id, &mut method_rng, only_context)
            {
                records.push(orig);
                records.push(mutated);
            }
        }
    }

    let report = corpus_distribution(&records);
    let mut writer =
        BufWriter::new(File::create(out).with_context(|| format!("creating {}", out.display()))?);
    write_labeled(&mut writer, &records)?;
    writer.flush()?;
    std::fs::write(sidecar_path(out), report.render())?;

    println!(
        "files={} methods={} pairs={}",
        parsed.len(),
        methods_seen,
        records.len() / 2
    );
    if records.is_empty() {
        return Ok(EXIT_EMPTY);
    }
    Ok(EXIT_OK)
}

pub fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(".dist.tsv");
    out.with_file_name(name)
}

/// Splits a labeled corpus by project (top-level directory in the record
/// id), greedily filling train, then validation, then test.
pub fn cmd_split(
    input: &Path,
    train_out: &Path,
    val_out: &Path,
    test_out: &Path,
    ratios: (f64, f64, f64),
    seed: u64,
) -> Result<u8> {
    let records = read_labeled(BufReader::new(
        File::open(input).with_context(|| format!("opening {}", input.display()))?,
    ))?;
    if records.is_empty() {
        return Ok(EXIT_EMPTY);
    }
    let (r_train, r_val, r_test) = ratios;
    if !(r_train > 0.0 && r_val > 0.0 && r_test > 0.0)
        || (r_train + r_val + r_test - 1.0).abs() > 1e-9
    {
        bail!("split ratios must be positive and sum to 1");
    }

    let mut groups: BTreeMap<String, Vec<&LabeledMethod>> = BTreeMap::new();
    for rec in &records {
        groups.entry(project_of(&rec.id)).or_default().push(rec);
    }
    if groups.len() < 3 {
        bail!(
            "need at least 3 projects to split by project, found {}",
            groups.len()
        );
    }

    let mut names: Vec<&String> = groups.keys().collect();
    let mut order_rng = rng::stream(seed, "split");
    rng::shuffle(&mut names, &mut order_rng);

    let total = records.len() as f64;
    let mut splits: [Vec<&LabeledMethod>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    let mut group_counts = [0usize; 3];
    let cutoffs = [r_train, r_train + r_val];
    let mut filled = 0usize;
    for name in names {
        let bucket = if (filled as f64) < cutoffs[0] * total {
            0
        } else if (filled as f64) < cutoffs[1] * total {
            1
        } else {
            2
        };
        let members = &groups[name];
        filled += members.len();
        splits[bucket].extend(members.iter().copied());
        group_counts[bucket] += 1;
    }
    // Greedy filling can starve the later buckets when projects are few or
    // lopsided; rebalance one group at a time.
    for needy in (1..3).rev() {
        if !splits[needy].is_empty() {
            continue;
        }
        let donor = (0..3)
            .filter(|b| group_counts[*b] > 1)
            .max_by_key(|b| splits[*b].len())
            .context("cannot produce three non-empty splits")?;
        let moved_project = project_of(&splits[donor].last().unwrap().id);
        let (keep, moved): (Vec<_>, Vec<_>) = splits[donor]
            .drain(..)
            .partition(|r| project_of(&r.id) != moved_project);
        splits[donor] = keep;
        splits[needy] = moved;
        group_counts[donor] -= 1;
        group_counts[needy] += 1;
    }

    for (out, split) in [train_out, val_out, test_out].iter().zip(&splits) {
        let mut w = BufWriter::new(File::create(out)?);
        write_labeled(&mut w, split.iter().copied())?;
        w.flush()?;
    }
    println!(
        "train={} val={} test={}",
        splits[0].len(),
        splits[1].len(),
        splits[2].len()
    );
    Ok(EXIT_OK)
}

fn project_of(id: &str) -> String {
    let path_part = id.split('#').next().unwrap_or(id);
    path_part.split('/').next().unwrap_or(path_part).to_string()
}

/// Builds the vocabulary from the training split.
pub fn cmd_vocab(
    corpus: &Path,
    out: &Path,
    max_token_vocab: usize,
    max_path_vocab: usize,
    opts: ExtractOptions,
) -> Result<u8> {
    let records = read_labeled(BufReader::new(
        File::open(corpus).with_context(|| format!("opening {}", corpus.display()))?,
    ))?;
    if records.is_empty() {
        return Ok(EXIT_EMPTY);
    }
    let extracted: Vec<(Vec<String>, Vec<i32>)> = records
        .par_iter()
        .filter_map(|rec| {
            let method = parse_method(&rec.source, &rec.id).ok()?;
            Some(extract_for_vocab(
                &method,
                opts.max_path_length,
                opts.max_path_width,
            ))
        })
        .collect();
    let vocab = build_vocabulary(extracted, max_token_vocab, max_path_vocab);
    let mut w = BufWriter::new(File::create(out)?);
    write_vocabulary(&mut w, &vocab)?;
    w.flush()?;
    println!(
        "tokens={} paths={}",
        vocab.token_vocab_size(),
        vocab.path_vocab_size()
    );
    Ok(EXIT_OK)
}

/// Encodes a labeled split against a fixed vocabulary.
pub fn cmd_encode(
    corpus: &Path,
    vocab_path: &Path,
    out: &Path,
    seed: u64,
    opts: ExtractOptions,
) -> Result<u8> {
    let vocab = read_vocabulary(BufReader::new(
        File::open(vocab_path).with_context(|| format!("opening {}", vocab_path.display()))?,
    ))?;
    let records = read_labeled(BufReader::new(
        File::open(corpus).with_context(|| format!("opening {}", corpus.display()))?,
    ))?;

    let encoded: Vec<Option<EncodedExample>> = records
        .par_iter()
        .map(|rec| encode_record(rec, &vocab, seed, opts))
        .collect();
    let dropped = encoded.iter().filter(|e| e.is_none()).count();
    let kept: Vec<EncodedExample> = encoded.into_iter().flatten().collect();

    let mut w = BufWriter::new(File::create(out)?);
    write_dataset(&mut w, &kept)?;
    w.flush()?;
    println!("encoded={} dropped={}", kept.len(), dropped);
    if kept.is_empty() {
        return Ok(EXIT_EMPTY);
    }
    Ok(EXIT_OK)
}

fn encode_record(
    rec: &LabeledMethod,
    vocab: &Vocabulary,
    seed: u64,
    opts: ExtractOptions,
) -> Option<EncodedExample> {
    let method = parse_method(&rec.source, &rec.id).ok()?;
    let mut enc_rng = rng::stream(seed, &format!("encode:{}", rec.id));
    let contexts = encode_method(
        &method,
        vocab,
        opts.max_contexts,
        opts.max_path_length,
        opts.max_path_width,
        &mut enc_rng,
    )
    .ok()?;
    Some(EncodedExample {
        id: rec.id.clone(),
        label: rec.label,
        context_type: rec.context_type,
        contexts,
    })
}

/// Trains the classifier and writes best weights, the epoch history, and a
/// final validation metrics line.
#[allow(clippy::too_many_arguments)]
pub fn cmd_train(
    train_path: &Path,
    val_path: &Path,
    vocab_path: &Path,
    out_weights: &Path,
    history_path: Option<&Path>,
    embed_dim: usize,
    config: &TrainConfig,
) -> Result<u8> {
    let vocab = read_vocabulary(BufReader::new(File::open(vocab_path)?))?;
    let train_set = read_dataset(BufReader::new(File::open(train_path)?))?;
    let val_set = read_dataset(BufReader::new(File::open(val_path)?))?;
    if train_set.is_empty() || val_set.is_empty() {
        return Ok(EXIT_EMPTY);
    }
    let dims = ModelDims::new(vocab.token_vocab_size(), vocab.path_vocab_size(), embed_dim);
    for (name, set) in [("train", &train_set), ("val", &val_set)] {
        if let Some(bad) = max_ids_exceed(set, &dims) {
            eprintln!("{name} split is incompatible with the vocabulary: {bad}");
            return Ok(EXIT_ERROR);
        }
    }

    let params = init_params(&dims, &mut rng::stream(config.seed, "init"));
    let history_file = history_path
        .map(|p| File::create(p).map(BufWriter::new))
        .transpose()?;
    let mut history_file = history_file;
    let mut log_epoch = |r: &EpochRecord| {
        let line = format!(
            "{}\t{:.6}\t{:.6}\t{:.6}",
            r.epoch, r.train_loss, r.val_loss, r.val_accuracy
        );
        println!("{line}");
        if let Some(f) = history_file.as_mut() {
            let _ = writeln!(f, "{line}");
        }
    };
    let (best, _records) = train(params, &train_set, &val_set, config, &mut log_epoch)?;
    if let Some(mut f) = history_file {
        f.flush()?;
    }
    save_params(&best, out_weights)?;

    let metrics =
        obo_core::train::evaluate_split(&best, &val_set, config.classification_threshold)?;
    println!(
        "val accuracy={} precision={} recall={} f1={}",
        obo_core::eval::render_ratio(metrics.accuracy),
        obo_core::eval::render_ratio(metrics.precision),
        obo_core::eval::render_ratio(metrics.recall),
        obo_core::eval::render_ratio(metrics.f1),
    );
    Ok(EXIT_OK)
}

fn max_ids_exceed(set: &[EncodedExample], dims: &ModelDims) -> Option<String> {
    for ex in set {
        for t in &ex.contexts {
            if t.source_token_id as usize >= dims.token_vocab_size
                || t.target_token_id as usize >= dims.token_vocab_size
            {
                return Some(format!("token id out of range in {}", ex.id));
            }
            if t.path_id as usize >= dims.path_vocab_size {
                return Some(format!("path id out of range in {}", ex.id));
            }
        }
    }
    None
}

/// Scores a test split and renders the grouped breakdown report.
pub fn cmd_eval(
    weights: &Path,
    test_path: &Path,
    group_by: GroupBy,
    format: ReportFormat,
    out: Option<&Path>,
    threshold: f64,
) -> Result<u8> {
    let params = load_params(weights)?;
    let test_set = read_dataset(BufReader::new(File::open(test_path)?))?;
    let dims = params.dims();
    if let Some(bad) = max_ids_exceed(&test_set, &dims) {
        eprintln!("test split is incompatible with the weights: {bad}");
        return Ok(EXIT_ERROR);
    }

    let predictions: Vec<Prediction> = test_set
        .par_iter()
        .map(|ex| {
            let p = model::predict(&params, ex)?;
            Ok(Prediction {
                label: ex.label,
                probability: p,
                context_type: ex.context_type,
            })
        })
        .collect::<Result<_, model::ModelError>>()?;

    let rows = breakdown(&predictions, threshold, group_by);
    let report = render_report(&rows, format);
    print!("{report}");
    if let Some(out) = out {
        std::fs::write(out, &report)?;
    }
    if predictions.is_empty() {
        return Ok(EXIT_EMPTY);
    }
    Ok(EXIT_OK)
}

/// Method-level prediction over a file or directory of Java sources.
pub fn cmd_predict(
    weights: &Path,
    vocab_path: &Path,
    input: &Path,
    threshold: f64,
    seed: u64,
    opts: ExtractOptions,
) -> Result<u8> {
    let params = load_params(weights)?;
    let vocab = read_vocabulary(BufReader::new(File::open(vocab_path)?))?;
    let dims = params.dims();
    if vocab.token_vocab_size() != dims.token_vocab_size
        || vocab.path_vocab_size() != dims.path_vocab_size
    {
        eprintln!(
            "vocabulary ({} tokens, {} paths) does not match weights ({} tokens, {} paths)",
            vocab.token_vocab_size(),
            vocab.path_vocab_size(),
            dims.token_vocab_size,
            dims.path_vocab_size
        );
        return Ok(EXIT_ERROR);
    }

    let files = collect_java_files(input)?;
    let parsed = parse_corpus(input, &files);
    for (rel, methods) in &parsed {
        for method in methods {
            let mut enc_rng = rng::stream(
                seed,
                &format!("predict:{rel}#{}#{}", method.method_name, method.start_line),
            );
            let encoded = encode_method(
                method,
                &vocab,
                opts.max_contexts,
                opts.max_path_length,
                opts.max_path_width,
                &mut enc_rng,
            );
            match encoded {
                Err(_) => {
                    println!(
                        "{rel}:{}\t{}\tskipped",
                        method.start_line, method.method_name
                    );
                }
                Ok(contexts) => {
                    let example = EncodedExample {
                        id: format!("{rel}#{}", method.method_name),
                        label: 0,
                        context_type: obo_core::mutate::ContextType::new(
                            StatementKind::Expression,
                            obo_core::mutate::Comparator::Less,
                        ),
                        contexts,
                    };
                    let trace = forward::<model::EvalRng>(&params, &example, Mode::Eval)?;
                    let verdict = if trace.p >= threshold {
                        "FLAGGED"
                    } else {
                        "ok"
                    };
                    println!(
                        "{rel}:{}\t{}\tp={:.4}\t{verdict}",
                        method.start_line, method.method_name, trace.p
                    );
                }
            }
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn project_group_is_the_top_level_directory() {
        assert_eq!(project_of("projA/src/Main.java#f#0#orig"), "projA");
        assert_eq!(project_of("Single.java#g#1#mut"), "Single.java");
    }

    #[test]
    fn sidecar_is_derived_from_the_output_name() {
        assert_eq!(
            sidecar_path(Path::new("/tmp/corpus.tsv")),
            PathBuf::from("/tmp/corpus.tsv.dist.tsv")
        );
    }
}
