//! Mini-batch training: Adam with lazy sparse embedding updates, binary
//! cross-entropy, accuracy-based early stopping, lowest-validation-loss
//! weight retention.

use rayon::prelude::*;
use thiserror::Error;

use crate::eval::{confusion, Metrics};
use crate::model::{backward, forward, predict, Gradients, Mat, Mode, ModelParams, SparseGrad};
use crate::paths::EncodedExample;
use crate::rng;

#[derive(Debug, Clone, PartialEq)]
pub struct TrainConfig {
    pub learning_rate: f64,
    pub adam_beta1: f64,
    pub adam_beta2: f64,
    pub adam_eps: f64,
    pub batch_size: usize,
    pub dropout_p: f64,
    pub patience_epochs: usize,
    pub max_epochs: usize,
    pub seed: u64,
    pub classification_threshold: f64,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            learning_rate: 1e-3,
            adam_beta1: 0.9,
            adam_beta2: 0.999,
            adam_eps: 1e-8,
            batch_size: 128,
            dropout_p: 0.25,
            patience_epochs: 2,
            max_epochs: 30,
            seed: 0,
            classification_threshold: 0.5,
        }
    }
}

#[derive(Debug, Error)]
pub enum TrainError {
    #[error("invalid training configuration: {0}")]
    Config(String),
    #[error("non-finite {what} at epoch {epoch}, batch {batch}; aborting")]
    NonFinite {
        what: &'static str,
        epoch: usize,
        batch: usize,
    },
    #[error("model error: {0}")]
    Model(#[from] crate::model::ModelError),
}

/// Binary cross-entropy with the probability clamped away from 0 and 1.
pub fn bce_loss(p: f64, y: u8) -> f64 {
    let p = p.clamp(1e-12, 1.0 - 1e-12);
    let y = f64::from(y);
    -(y * p.ln() + (1.0 - y) * (1.0 - p).ln())
}

/// First and second moment accumulators, one pair per parameter tensor.
/// Embedding moments are kept per-row and only touched rows update (lazy).
#[derive(Debug, Clone)]
pub struct AdamState {
    pub t: u64,
    pub m_e_tok: SparseGrad,
    pub v_e_tok: SparseGrad,
    pub m_e_path: SparseGrad,
    pub v_e_path: SparseGrad,
    pub m_w: Mat,
    pub v_w: Mat,
    pub m_a: Vec<f64>,
    pub v_a: Vec<f64>,
    pub m_w_out: Vec<f64>,
    pub v_w_out: Vec<f64>,
    pub m_b: f64,
    pub v_b: f64,
}

impl AdamState {
    pub fn new(params: &ModelParams) -> Self {
        AdamState {
            t: 0,
            m_e_tok: SparseGrad::new(),
            v_e_tok: SparseGrad::new(),
            m_e_path: SparseGrad::new(),
            v_e_path: SparseGrad::new(),
            m_w: Mat::zeros(params.w.rows, params.w.cols),
            v_w: Mat::zeros(params.w.rows, params.w.cols),
            m_a: vec![0.0; params.a.len()],
            v_a: vec![0.0; params.a.len()],
            m_w_out: vec![0.0; params.w_out.len()],
            v_w_out: vec![0.0; params.w_out.len()],
            m_b: 0.0,
            v_b: 0.0,
        }
    }
}

/// One Adam update with bias correction. Dense tensors always update;
/// embedding rows update only where the batch produced a gradient.
pub fn adam_step(
    params: &mut ModelParams,
    grads: &Gradients,
    state: &mut AdamState,
    config: &TrainConfig,
) {
    state.t += 1;
    let t = state.t as i32;
    let b1 = config.adam_beta1;
    let b2 = config.adam_beta2;
    let bias1 = 1.0 - b1.powi(t);
    let bias2 = 1.0 - b2.powi(t);
    let lr = config.learning_rate;
    let eps = config.adam_eps;

    let dense = |theta: &mut [f64], g: &[f64], m: &mut [f64], v: &mut [f64]| {
        for k in 0..theta.len() {
            m[k] = b1 * m[k] + (1.0 - b1) * g[k];
            v[k] = b2 * v[k] + (1.0 - b2) * g[k] * g[k];
            let m_hat = m[k] / bias1;
            let v_hat = v[k] / bias2;
            theta[k] -= lr * m_hat / (v_hat.sqrt() + eps);
        }
    };
    dense(
        &mut params.w.data,
        &grads.w.data,
        &mut state.m_w.data,
        &mut state.v_w.data,
    );
    dense(&mut params.a, &grads.a, &mut state.m_a, &mut state.v_a);
    dense(
        &mut params.w_out,
        &grads.w_out,
        &mut state.m_w_out,
        &mut state.v_w_out,
    );
    {
        let mut theta = [params.b_out];
        let mut m = [state.m_b];
        let mut v = [state.v_b];
        dense(&mut theta, &[grads.b_out], &mut m, &mut v);
        params.b_out = theta[0];
        state.m_b = m[0];
        state.v_b = v[0];
    }

    let d = params.e_tok.cols;
    let sparse = |table: &mut Mat, g: &SparseGrad, m: &mut SparseGrad, v: &mut SparseGrad| {
        for (row, grow) in g {
            let mrow = m.entry(*row).or_insert_with(|| vec![0.0; d]);
            let vrow = v.entry(*row).or_insert_with(|| vec![0.0; d]);
            let trow = table.row_mut(*row as usize);
            for k in 0..d {
                mrow[k] = b1 * mrow[k] + (1.0 - b1) * grow[k];
                vrow[k] = b2 * vrow[k] + (1.0 - b2) * grow[k] * grow[k];
                let m_hat = mrow[k] / bias1;
                let v_hat = vrow[k] / bias2;
                trow[k] -= lr * m_hat / (v_hat.sqrt() + eps);
            }
        }
    };
    sparse(
        &mut params.e_tok,
        &grads.e_tok,
        &mut state.m_e_tok,
        &mut state.v_e_tok,
    );
    sparse(
        &mut params.e_path,
        &grads.e_path,
        &mut state.m_e_path,
        &mut state.v_e_path,
    );
}

/// Loss/accuracy bookkeeping of one completed epoch.
#[derive(Debug, Clone, PartialEq)]
pub struct EpochRecord {
    pub epoch: usize,
    pub train_loss: f64,
    pub val_loss: f64,
    pub val_accuracy: f64,
}

/// Stopping and selection rules: accuracy governs stopping, loss governs
/// which snapshot is returned.
#[derive(Debug, Clone)]
pub struct EarlyStopper {
    patience: usize,
    best_accuracy: f64,
    epochs_since_improvement: usize,
    best_loss: f64,
    pub best_epoch: Option<usize>,
}

impl EarlyStopper {
    pub fn new(patience: usize) -> Self {
        EarlyStopper {
            patience,
            best_accuracy: f64::NEG_INFINITY,
            epochs_since_improvement: 0,
            best_loss: f64::INFINITY,
            best_epoch: None,
        }
    }

    /// Feeds one epoch; returns `(keep_this_snapshot, stop_now)`.
    pub fn observe(&mut self, epoch: usize, val_accuracy: f64, val_loss: f64) -> (bool, bool) {
        let keep = val_loss < self.best_loss;
        if keep {
            self.best_loss = val_loss;
            self.best_epoch = Some(epoch);
        }
        if val_accuracy > self.best_accuracy {
            self.best_accuracy = val_accuracy;
            self.epochs_since_improvement = 0;
        } else {
            self.epochs_since_improvement += 1;
        }
        (keep, self.epochs_since_improvement >= self.patience)
    }
}

/// Trains on `train_set`, validating each epoch, and returns the snapshot
/// with the lowest validation loss plus the per-epoch records.
pub fn train(
    initial: ModelParams,
    train_set: &[EncodedExample],
    val_set: &[EncodedExample],
    config: &TrainConfig,
    mut on_epoch: impl FnMut(&EpochRecord),
) -> Result<(ModelParams, Vec<EpochRecord>), TrainError> {
    if train_set.is_empty() || val_set.is_empty() {
        return Err(TrainError::Config(
            "train and validation sets must be non-empty".into(),
        ));
    }
    if !config.learning_rate.is_finite() || config.learning_rate <= 0.0 {
        return Err(TrainError::Config("learning rate must be positive".into()));
    }
    if !(0.0..1.0).contains(&config.dropout_p) {
        return Err(TrainError::Config("dropout must be in [0, 1)".into()));
    }
    if config.patience_epochs == 0 {
        return Err(TrainError::Config("patience must be at least 1".into()));
    }

    let mut params = initial;
    let mut state = AdamState::new(&params);
    let mut stopper = EarlyStopper::new(config.patience_epochs);
    let mut best = params.clone();
    let mut records = Vec::new();

    let mut order: Vec<usize> = (0..train_set.len()).collect();
    for epoch in 1..=config.max_epochs {
        let mut shuffle_rng = rng::stream(config.seed, &format!("shuffle:{epoch}"));
        rng::shuffle(&mut order, &mut shuffle_rng);

        let mut epoch_loss_sum = 0.0;
        for (batch_no, batch) in order.chunks(config.batch_size).enumerate() {
            // Per-example dropout streams keyed by position, so the batch
            // gradient is independent of worker scheduling.
            let results: Vec<(Gradients, f64)> = batch
                .par_iter()
                .map(|&idx| {
                    let ex = &train_set[idx];
                    let mut dropout_rng =
                        rng::stream(config.seed, &format!("dropout:{epoch}:{idx}"));
                    let trace = forward(
                        &params,
                        ex,
                        Mode::Train {
                            dropout_p: config.dropout_p,
                            rng: &mut dropout_rng,
                        },
                    )?;
                    let loss = bce_loss(trace.p, ex.label);
                    Ok((backward(&params, &trace, ex.label), loss))
                })
                .collect::<Result<_, crate::model::ModelError>>()?;

            let mut batch_grads = Gradients::zeros_like(&params);
            let mut batch_loss = 0.0;
            for (g, loss) in &results {
                batch_grads.accumulate(g);
                batch_loss += loss;
            }
            batch_grads.scale(1.0 / batch.len() as f64);
            epoch_loss_sum += batch_loss;
            if !batch_grads.is_finite() {
                return Err(TrainError::NonFinite {
                    what: "gradient",
                    epoch,
                    batch: batch_no,
                });
            }
            if !batch_loss.is_finite() {
                return Err(TrainError::NonFinite {
                    what: "loss",
                    epoch,
                    batch: batch_no,
                });
            }
            adam_step(&mut params, &batch_grads, &mut state, config);
        }

        let (val_loss, val_accuracy) = validate(&params, val_set, config.classification_threshold)?;
        let record = EpochRecord {
            epoch,
            train_loss: epoch_loss_sum / train_set.len() as f64,
            val_loss,
            val_accuracy,
        };
        on_epoch(&record);
        records.push(record);

        let (keep, stop) = stopper.observe(epoch, val_accuracy, val_loss);
        if keep {
            best = params.clone();
        }
        if stop {
            break;
        }
    }
    Ok((best, records))
}

fn validate(
    params: &ModelParams,
    val_set: &[EncodedExample],
    threshold: f64,
) -> Result<(f64, f64), TrainError> {
    let losses: Vec<(f64, bool)> = val_set
        .par_iter()
        .map(|ex| {
            let p = predict(params, ex)?;
            let correct = (p >= threshold) == (ex.label == 1);
            Ok((bce_loss(p, ex.label), correct))
        })
        .collect::<Result<_, crate::model::ModelError>>()?;
    let loss_sum: f64 = losses.iter().map(|(l, _)| l).sum();
    let correct = losses.iter().filter(|(_, c)| *c).count();
    Ok((
        loss_sum / val_set.len() as f64,
        correct as f64 / val_set.len() as f64,
    ))
}

/// Applies the model to every example and aggregates confusion metrics.
/// Probabilities at exactly the threshold classify as positive.
pub fn evaluate_split(
    params: &ModelParams,
    dataset: &[EncodedExample],
    threshold: f64,
) -> Result<Metrics, TrainError> {
    let predictions: Vec<(u8, f64)> = dataset
        .par_iter()
        .map(|ex| Ok((ex.label, predict(params, ex)?)))
        .collect::<Result<_, crate::model::ModelError>>()?;
    Ok(confusion(
        predictions.iter().map(|(label, p)| (*label, *p)),
        threshold,
    ))
}

#[cfg(test)]
mod tests;
