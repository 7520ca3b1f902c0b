use super::*;
use crate::mutate::{Comparator, ContextType, StatementKind};
use crate::rng;

fn example(contexts: Vec<(u32, u32, u32)>) -> EncodedExample {
    EncodedExample {
        id: "t".into(),
        label: 1,
        context_type: ContextType::new(StatementKind::For, Comparator::Less),
        contexts: contexts
            .into_iter()
            .map(|(s, q, t)| PathContextTriple {
                source_token_id: s,
                path_id: q,
                target_token_id: t,
            })
            .collect(),
    }
}

fn small_params(seed: u64) -> ModelParams {
    let dims = ModelDims::new(10, 10, 4);
    init_params(&dims, &mut rng::stream(seed, "init"))
}

fn bce(p: f64, y: u8) -> f64 {
    let y = f64::from(y);
    -(y * p.ln() + (1.0 - y) * (1.0 - p).ln())
}

#[test]
fn init_is_deterministic_and_pads_are_zero() {
    let a = small_params(7);
    let b = small_params(7);
    assert_eq!(a, b);
    assert!(a.e_tok.row(0).iter().all(|v| *v == 0.0));
    assert!(a.e_path.row(0).iter().all(|v| *v == 0.0));
    assert_eq!(a.b_out, 0.0);
    let c = small_params(8);
    assert_ne!(a, c);
}

#[test]
fn combined_dim_is_three_embeddings() {
    let dims = ModelDims::new(100, 100, 128);
    assert_eq!(dims.combined_dim(), 384);
    let params = init_params(&dims, &mut rng::stream(0, "i"));
    assert_eq!(params.w.rows, 384);
    assert_eq!(params.w.cols, 384);
}

#[test]
fn single_context_gets_full_attention() {
    let params = small_params(1);
    let ex = example(vec![(2, 3, 4)]);
    let trace = forward::<EvalRng>(&params, &ex, Mode::Eval).unwrap();
    assert_eq!(trace.alpha, vec![1.0]);
}

#[test]
fn zero_params_predict_one_half() {
    let dims = ModelDims::new(10, 10, 4);
    let params = ModelParams {
        e_tok: Mat::zeros(10, 4),
        e_path: Mat::zeros(10, 4),
        w: Mat::zeros(12, 12),
        a: vec![0.0; 12],
        w_out: vec![0.0; 12],
        b_out: 0.0,
    };
    let _ = dims;
    let ex = example(vec![(2, 3, 4), (5, 6, 7)]);
    assert_eq!(predict(&params, &ex).unwrap(), 0.5);
}

#[test]
fn identical_contexts_share_attention_evenly() {
    let params = small_params(2);
    let ex = example(vec![(2, 3, 4), (2, 3, 4)]);
    let trace = forward::<EvalRng>(&params, &ex, Mode::Eval).unwrap();
    assert!((trace.alpha[0] - 0.5).abs() < 1e-15);
    assert!((trace.alpha[1] - 0.5).abs() < 1e-15);
}

#[test]
fn attention_sums_to_one() {
    let params = small_params(3);
    for n in 1..=8 {
        let ex = example(
            (0..n)
                .map(|i| (2 + i % 7, 2 + (i * 3) % 7, 3 + i % 6))
                .collect(),
        );
        let trace = forward::<EvalRng>(&params, &ex, Mode::Eval).unwrap();
        let sum: f64 = trace.alpha.iter().sum();
        assert!((sum - 1.0).abs() <= 1e-6, "Σα = {sum}");
        assert!(trace.p > 0.0 && trace.p < 1.0);
    }
}

#[test]
fn prediction_is_permutation_invariant() {
    let params = small_params(4);
    let ex = example(vec![(2, 3, 4), (5, 6, 7), (8, 2, 3), (4, 5, 6)]);
    let mut shuffled = ex.clone();
    shuffled.contexts.reverse();
    shuffled.contexts.swap(0, 2);
    let p1 = predict(&params, &ex).unwrap();
    let p2 = predict(&params, &shuffled).unwrap();
    assert!((p1 - p2).abs() <= 1e-12, "{p1} vs {p2}");
}

#[test]
fn sigmoid_bce_identity_at_one_half() {
    // All-zero parameters give p = 0.5 exactly; with label 1 the output-unit
    // gradient is p − y = −0.5.
    let params = ModelParams {
        e_tok: Mat::zeros(10, 4),
        e_path: Mat::zeros(10, 4),
        w: Mat::zeros(12, 12),
        a: vec![0.0; 12],
        w_out: vec![0.0; 12],
        b_out: 0.0,
    };
    let ex = example(vec![(2, 3, 4), (5, 6, 7)]);
    let trace = forward::<EvalRng>(&params, &ex, Mode::Eval).unwrap();
    let grads = backward(&params, &trace, 1);
    assert_eq!(grads.b_out, -0.5);
}

#[test]
fn pad_rows_never_receive_gradient() {
    let params = small_params(5);
    // A contrived example that looks PAD up directly.
    let ex = example(vec![(0, 0, 2), (2, 3, 4)]);
    let trace = forward::<EvalRng>(&params, &ex, Mode::Eval).unwrap();
    let grads = backward(&params, &trace, 0);
    assert!(grads.e_tok[&PAD_ID].iter().all(|v| *v == 0.0));
    assert!(grads.e_path[&PAD_ID].iter().all(|v| *v == 0.0));
}

#[test]
fn invalid_ids_are_rejected() {
    let params = small_params(6);
    let ex = example(vec![(2, 3, 99)]);
    assert!(matches!(
        predict(&params, &ex),
        Err(ModelError::InvalidId { id: 99, .. })
    ));
}

// ---------------------------------------------------------------------------
// Finite differences
// ---------------------------------------------------------------------------

fn loss_with_mask(params: &ModelParams, ex: &EncodedExample, mask: &Option<DropoutMask>) -> f64 {
    let trace = forward_with_mask(params, ex, mask.clone()).unwrap();
    bce(trace.p, ex.label)
}

/// Compares every analytic gradient entry against central finite differences.
fn check_gradients(params: &ModelParams, ex: &EncodedExample, mask: Option<DropoutMask>) -> f64 {
    const H: f64 = 1e-5;
    let trace = forward_with_mask(params, ex, mask.clone()).unwrap();
    let analytic = backward(params, &trace, ex.label);
    let mut worst: f64 = 0.0;
    let mut check = |analytic_value: f64, perturb: &mut dyn FnMut(&mut ModelParams, f64)| {
        let mut plus = params.clone();
        perturb(&mut plus, H);
        let mut minus = params.clone();
        perturb(&mut minus, -H);
        let numeric =
            (loss_with_mask(&plus, ex, &mask) - loss_with_mask(&minus, ex, &mask)) / (2.0 * H);
        let rel =
            (analytic_value - numeric).abs() / analytic_value.abs().max(numeric.abs()).max(1e-6);
        worst = worst.max(rel);
    };

    let d = params.e_tok.cols;
    for row in 0..params.e_tok.rows {
        // PAD is pinned at zero and excluded from updates.
        if row == PAD_ID as usize {
            continue;
        }
        for k in 0..d {
            let g = analytic.e_tok.get(&(row as u32)).map_or(0.0, |r| r[k]);
            check(g, &mut |p, h| p.e_tok.row_mut(row)[k] += h);
        }
    }
    for row in 0..params.e_path.rows {
        if row == PAD_ID as usize {
            continue;
        }
        for k in 0..d {
            let g = analytic.e_path.get(&(row as u32)).map_or(0.0, |r| r[k]);
            check(g, &mut |p, h| p.e_path.row_mut(row)[k] += h);
        }
    }
    for idx in 0..params.w.data.len() {
        check(analytic.w.data[idx], &mut |p, h| p.w.data[idx] += h);
    }
    for idx in 0..params.a.len() {
        check(analytic.a[idx], &mut |p, h| p.a[idx] += h);
    }
    for idx in 0..params.w_out.len() {
        check(analytic.w_out[idx], &mut |p, h| p.w_out[idx] += h);
    }
    check(analytic.b_out, &mut |p, h| p.b_out += h);
    worst
}

#[test]
fn gradients_match_finite_differences() {
    for draw in 0..20 {
        let params = small_params(100 + draw);
        let mut r = rng::stream(200 + draw, "fd-ex");
        let n = 1 + (draw as usize % 3);
        let ex = EncodedExample {
            label: (draw % 2) as u8,
            ..example(
                (0..n)
                    .map(|_| {
                        (
                            r.random_range(1..10) as u32,
                            r.random_range(1..10) as u32,
                            r.random_range(1..10) as u32,
                        )
                    })
                    .collect(),
            )
        };
        let worst = check_gradients(&params, &ex, None);
        assert!(worst < 1e-4, "eval-mode rel err {worst} on draw {draw}");
    }
}

#[test]
fn gradients_match_finite_differences_under_dropout() {
    use rand::Rng as _;
    for draw in 0..5 {
        let params = small_params(300 + draw);
        let mut r = rng::stream(400 + draw, "fd-mask");
        let n = 2 + (draw as usize % 2);
        let ex = example(
            (0..n)
                .map(|_| {
                    (
                        r.random_range(1..10) as u32,
                        r.random_range(1..10) as u32,
                        r.random_range(1..10) as u32,
                    )
                })
                .collect(),
        );
        let mask = DropoutMask::draw(n, params.dims().combined_dim(), 0.25, &mut r);
        let worst = check_gradients(&params, &ex, Some(mask));
        assert!(worst < 1e-4, "train-mode rel err {worst} on draw {draw}");
    }
}

#[test]
fn dropout_scales_are_inverted() {
    let mut r = rng::stream(0, "mask");
    let mask = DropoutMask::draw(50, 12, 0.25, &mut r);
    let mut kept = 0usize;
    let mut dropped = 0usize;
    for row in &mask.scales {
        for s in row {
            if *s == 0.0 {
                dropped += 1;
            } else {
                assert!((s - 1.0 / 0.75).abs() < 1e-15);
                kept += 1;
            }
        }
    }
    assert!(kept > 0 && dropped > 0);
    let rate = dropped as f64 / (kept + dropped) as f64;
    assert!((rate - 0.25).abs() < 0.05, "drop rate {rate}");
}

#[test]
fn eval_mode_is_deterministic_and_pure() {
    let params = small_params(9);
    let ex = example(vec![(2, 3, 4), (5, 6, 7)]);
    let before = params.clone();
    let p1 = predict(&params, &ex).unwrap();
    let p2 = predict(&params, &ex).unwrap();
    assert_eq!(p1, p2);
    assert_eq!(params, before);
}

// ---------------------------------------------------------------------------
// Weight file
// ---------------------------------------------------------------------------

#[test]
fn save_load_round_trips_bit_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("weights.obo");
    let params = small_params(11);
    save_params(&params, &path).unwrap();
    let loaded = load_params(&path).unwrap();
    assert_eq!(loaded, params);
    // Bytes are stable across saves.
    let path2 = dir.path().join("weights2.obo");
    save_params(&loaded, &path2).unwrap();
    assert_eq!(
        std::fs::read(&path).unwrap(),
        std::fs::read(&path2).unwrap()
    );
}

#[test]
fn wrong_magic_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.obo");
    std::fs::write(&path, b"NOPE0000000000000000").unwrap();
    assert!(matches!(load_params(&path), Err(FormatError::BadMagic)));
}

#[test]
fn truncated_file_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trunc.obo");
    let params = small_params(12);
    save_params(&params, &path).unwrap();
    let bytes = std::fs::read(&path).unwrap();
    std::fs::write(&path, &bytes[..bytes.len() / 2]).unwrap();
    assert!(matches!(
        load_params(&path),
        Err(FormatError::BadDimensions)
    ));
}

#[test]
fn gradient_accumulation_merges_sparse_rows() {
    let params = small_params(13);
    let ex1 = example(vec![(2, 3, 4)]);
    let ex2 = example(vec![(2, 5, 6)]);
    let t1 = forward::<EvalRng>(&params, &ex1, Mode::Eval).unwrap();
    let t2 = forward::<EvalRng>(&params, &ex2, Mode::Eval).unwrap();
    let g1 = backward(&params, &t1, 1);
    let g2 = backward(&params, &t2, 0);
    let mut sum = Gradients::zeros_like(&params);
    sum.accumulate(&g1);
    sum.accumulate(&g2);
    let expected: Vec<f64> = g1.e_tok[&2]
        .iter()
        .zip(&g2.e_tok[&2])
        .map(|(a, b)| a + b)
        .collect();
    assert_eq!(sum.e_tok[&2], expected);
    assert!(sum.is_finite());
    sum.scale(0.5);
    assert_eq!(sum.b_out, (g1.b_out + g2.b_out) * 0.5);
}
