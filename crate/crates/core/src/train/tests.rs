use super::*;
use crate::model::{init_params, Mat, ModelDims};
use crate::mutate::{Comparator, ContextType, StatementKind};
use crate::paths::PathContextTriple;
use crate::rng;

fn toy_example(label: u8, path_id: u32, token: u32) -> EncodedExample {
    EncodedExample {
        id: format!("ex-{label}-{path_id}-{token}"),
        label,
        context_type: ContextType::new(
            StatementKind::For,
            if label == 1 {
                Comparator::LessEquals
            } else {
                Comparator::Less
            },
        ),
        contexts: vec![
            PathContextTriple {
                source_token_id: token,
                path_id,
                target_token_id: token + 1,
            },
            PathContextTriple {
                source_token_id: token + 1,
                path_id,
                target_token_id: token,
            },
        ],
    }
}

/// 4 correct + 4 buggy examples with class-distinctive path ids.
fn toy_dataset() -> Vec<EncodedExample> {
    (0..8)
        .map(|i| {
            let label = (i % 2) as u8;
            let path_id = if label == 1 {
                2 + (i as u32 % 2)
            } else {
                4 + (i as u32 % 2)
            };
            toy_example(label, path_id, 2 + (i as u32 % 3))
        })
        .collect()
}

#[test]
fn bce_values() {
    assert!((bce_loss(0.5, 1) - std::f64::consts::LN_2).abs() < 1e-12);
    assert!(bce_loss(1.0 - 1e-12, 1) < 1e-9);
    assert!((bce_loss(0.25, 0) + 0.75f64.ln()).abs() < 1e-12);
    // Clamping keeps the loss finite at the extremes.
    assert!(bce_loss(0.0, 1).is_finite());
    assert!(bce_loss(1.0, 0).is_finite());
}

#[test]
fn adam_leaves_zero_gradient_tensors_unchanged() {
    let dims = ModelDims::new(6, 6, 3);
    let mut params = init_params(&dims, &mut rng::stream(0, "a"));
    let before = params.clone();
    let mut state = AdamState::new(&params);
    let grads = crate::model::Gradients::zeros_like(&params);
    adam_step(&mut params, &grads, &mut state, &TrainConfig::default());
    assert_eq!(params, before);
    assert_eq!(state.t, 1);
}

#[test]
fn adam_first_step_is_minus_learning_rate() {
    // Scalar θ = 0, g = 1, lr = 0.1: bias-corrected m̂ = v̂ = 1, so
    // θ becomes −lr/(1+ε) ≈ −0.1.
    let dims = ModelDims::new(4, 4, 2);
    let mut params = init_params(&dims, &mut rng::stream(0, "b"));
    params.b_out = 0.0;
    let mut state = AdamState::new(&params);
    let mut grads = crate::model::Gradients::zeros_like(&params);
    grads.b_out = 1.0;
    let config = TrainConfig {
        learning_rate: 0.1,
        ..TrainConfig::default()
    };
    adam_step(&mut params, &grads, &mut state, &config);
    assert!(
        (params.b_out + 0.1).abs() < 1e-8,
        "b_out = {}",
        params.b_out
    );
}

#[test]
fn adam_sparse_rows_update_lazily() {
    let dims = ModelDims::new(6, 6, 3);
    let mut params = init_params(&dims, &mut rng::stream(1, "c"));
    let untouched_row = params.e_tok.row(5).to_vec();
    let mut state = AdamState::new(&params);
    let mut grads = crate::model::Gradients::zeros_like(&params);
    grads.e_tok.insert(2, vec![1.0, 1.0, 1.0]);
    adam_step(&mut params, &grads, &mut state, &TrainConfig::default());
    assert_eq!(
        params.e_tok.row(5),
        untouched_row.as_slice(),
        "untouched row is frozen"
    );
    assert!(state.m_e_tok.contains_key(&2));
    assert!(
        !state.m_e_tok.contains_key(&5),
        "no moments for untouched rows"
    );
}

#[test]
fn adam_is_deterministic() {
    let dims = ModelDims::new(6, 6, 3);
    let run = || {
        let mut params = init_params(&dims, &mut rng::stream(2, "d"));
        let mut state = AdamState::new(&params);
        for step in 0..5 {
            let mut grads = crate::model::Gradients::zeros_like(&params);
            grads.b_out = 1.0 / f64::from(step + 1);
            grads.a[0] = 0.5;
            adam_step(&mut params, &grads, &mut state, &TrainConfig::default());
        }
        params
    };
    assert_eq!(run(), run());
}

#[test]
fn stopper_follows_the_accuracy_patience_rule() {
    // Accuracy [0.70, 0.75, 0.74, 0.73] with patience 2 stops after epoch 4.
    let mut stopper = EarlyStopper::new(2);
    assert_eq!(stopper.observe(1, 0.70, 0.60), (true, false));
    assert_eq!(stopper.observe(2, 0.75, 0.48), (true, false));
    assert_eq!(stopper.observe(3, 0.74, 0.51), (false, false));
    assert_eq!(stopper.observe(4, 0.73, 0.55), (false, true));
    // Lowest loss came at epoch 2: that snapshot is the one retained.
    assert_eq!(stopper.best_epoch, Some(2));
}

#[test]
fn stopper_resets_on_improvement() {
    let mut stopper = EarlyStopper::new(2);
    assert_eq!(stopper.observe(1, 0.5, 1.0), (true, false));
    assert_eq!(stopper.observe(2, 0.4, 1.1), (false, false));
    assert_eq!(stopper.observe(3, 0.6, 0.9), (true, false));
    assert_eq!(stopper.observe(4, 0.6, 1.0), (false, false));
    assert_eq!(stopper.observe(5, 0.6, 1.2), (false, true));
}

#[test]
fn empty_splits_are_a_config_error() {
    let dims = ModelDims::new(6, 6, 3);
    let params = init_params(&dims, &mut rng::stream(0, "e"));
    let data = toy_dataset();
    let err = train(params.clone(), &[], &data, &TrainConfig::default(), |_| {});
    assert!(matches!(err, Err(TrainError::Config(_))));
    let err = train(params, &data, &[], &TrainConfig::default(), |_| {});
    assert!(matches!(err, Err(TrainError::Config(_))));
}

#[test]
fn overfit_eight_examples_in_two_hundred_full_batch_steps() {
    let dims = ModelDims::new(8, 8, 4);
    let params = init_params(&dims, &mut rng::stream(0, "overfit"));
    let data = toy_dataset();
    let config = TrainConfig {
        learning_rate: 0.01,
        batch_size: 8,
        dropout_p: 0.0,
        max_epochs: 200,
        patience_epochs: 200,
        seed: 0,
        ..TrainConfig::default()
    };
    let (_best, records) = train(params, &data, &data, &config, |_| {}).unwrap();
    let last = records.last().unwrap();
    assert!(
        last.train_loss < 0.05,
        "mean BCE after {} epochs: {}",
        records.len(),
        last.train_loss
    );
    // Loss sequence is finite throughout.
    assert!(records
        .iter()
        .all(|r| r.train_loss.is_finite() && r.val_loss.is_finite()));
}

#[test]
fn training_is_reproducible() {
    let dims = ModelDims::new(8, 8, 4);
    let data = toy_dataset();
    let config = TrainConfig {
        max_epochs: 8,
        patience_epochs: 8,
        seed: 42,
        ..TrainConfig::default()
    };
    let run = || {
        let params = init_params(&dims, &mut rng::stream(7, "repro"));
        train(params, &data, &data, &config, |_| {}).unwrap()
    };
    let (best1, rec1) = run();
    let (best2, rec2) = run();
    assert_eq!(rec1, rec2);
    assert_eq!(best1, best2);
}

#[test]
fn returned_snapshot_has_the_lowest_validation_loss() {
    let dims = ModelDims::new(8, 8, 4);
    let data = toy_dataset();
    let config = TrainConfig {
        learning_rate: 0.01,
        batch_size: 8,
        dropout_p: 0.0,
        max_epochs: 30,
        patience_epochs: 30,
        seed: 3,
        ..TrainConfig::default()
    };
    let params = init_params(&dims, &mut rng::stream(3, "low"));
    let (best, records) = train(params, &data, &data, &config, |_| {}).unwrap();
    let min_loss = records
        .iter()
        .map(|r| r.val_loss)
        .fold(f64::INFINITY, f64::min);
    let (best_loss, _) = {
        let losses: Vec<(f64, bool)> = data
            .iter()
            .map(|ex| {
                let p = crate::model::predict(&best, ex).unwrap();
                (bce_loss(p, ex.label), true)
            })
            .collect();
        (
            losses.iter().map(|(l, _)| l).sum::<f64>() / data.len() as f64,
            (),
        )
    };
    assert!(
        (best_loss - min_loss).abs() < 1e-12,
        "{best_loss} vs {min_loss}"
    );
}

#[test]
fn non_finite_parameters_abort_with_a_diagnostic() {
    let dims = ModelDims::new(8, 8, 4);
    let mut params = init_params(&dims, &mut rng::stream(0, "nan"));
    params.w.data[0] = f64::NAN;
    let data = toy_dataset();
    let err = train(params, &data, &data, &TrainConfig::default(), |_| {});
    assert!(matches!(err, Err(TrainError::NonFinite { .. })), "{err:?}");
}

#[test]
fn evaluate_split_matches_stated_conventions() {
    let data = toy_dataset();
    // All-zero parameters output exactly 0.5; ties classify positive, so a
    // balanced set scores accuracy 0.5 with every negative a false positive.
    let zero = crate::model::ModelParams {
        e_tok: Mat::zeros(8, 4),
        e_path: Mat::zeros(8, 4),
        w: Mat::zeros(12, 12),
        a: vec![0.0; 12],
        w_out: vec![0.0; 12],
        b_out: 0.0,
    };
    let m = evaluate_split(&zero, &data, 0.5).unwrap();
    assert_eq!(m.accuracy, 0.5);
    assert_eq!(m.true_positives, 4);
    assert_eq!(m.false_positives, 4);
    assert_eq!(m.true_negatives, 0);

    // A trained model separates the toy set perfectly.
    let dims = ModelDims::new(8, 8, 4);
    let config = TrainConfig {
        learning_rate: 0.01,
        batch_size: 8,
        dropout_p: 0.0,
        max_epochs: 200,
        patience_epochs: 200,
        seed: 0,
        ..TrainConfig::default()
    };
    let params = init_params(&dims, &mut rng::stream(0, "sep"));
    let (best, _) = train(params, &data, &data, &config, |_| {}).unwrap();
    let m = evaluate_split(&best, &data, 0.5).unwrap();
    assert_eq!(m.accuracy, 1.0);
}

#[test]
fn last_partial_batch_is_kept() {
    // 8 examples with batch size 5 must still see all 8 per epoch: the
    // mean train loss over one epoch equals the mean over examples.
    let dims = ModelDims::new(8, 8, 4);
    let data = toy_dataset();
    let config = TrainConfig {
        batch_size: 5,
        max_epochs: 1,
        dropout_p: 0.0,
        seed: 1,
        ..TrainConfig::default()
    };
    let params = init_params(&dims, &mut rng::stream(1, "partial"));
    let (_, records) = train(params, &data, &data, &config, |_| {}).unwrap();
    assert_eq!(records.len(), 1);
    assert!(records[0].train_loss.is_finite());
}
