//! The attention-based binary classifier.
//!
//! Per context triple `(s, q, t)`: the two token embeddings and the path
//! embedding are concatenated (`3 × embed_dim`), passed through inverted
//! dropout (train mode only), transformed with `c = tanh(W x)`, scored
//! against the attention vector, softmax-pooled into a single code vector,
//! and squashed to a probability through one sigmoid unit.
//!
//! Everything runs in 64-bit floats and gradients are written out by hand,
//! which keeps the finite-difference checks tight.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::Path;

use rand::Rng;
use thiserror::Error;

use crate::paths::{EncodedExample, PathContextTriple, PAD_ID};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModelDims {
    pub token_vocab_size: usize,
    pub path_vocab_size: usize,
    pub embed_dim: usize,
    pub max_contexts: usize,
}

pub const DEFAULT_EMBED_DIM: usize = 128;

impl ModelDims {
    pub fn new(token_vocab_size: usize, path_vocab_size: usize, embed_dim: usize) -> Self {
        ModelDims {
            token_vocab_size,
            path_vocab_size,
            embed_dim,
            max_contexts: crate::paths::DEFAULT_MAX_CONTEXTS,
        }
    }

    /// Concatenation of two token embeddings and one path embedding.
    pub fn combined_dim(&self) -> usize {
        3 * self.embed_dim
    }
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [f64] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn matvec(&self, x: &[f64], out: &mut [f64]) {
        debug_assert_eq!(x.len(), self.cols);
        debug_assert_eq!(out.len(), self.rows);
        for (acc, row) in out.iter_mut().zip(self.data.chunks_exact(self.cols)) {
            *acc = row.iter().zip(x).map(|(w, xv)| w * xv).sum();
        }
    }

    /// `out += Aᵀ y` without materializing the transpose.
    fn add_t_matvec(&self, y: &[f64], out: &mut [f64]) {
        debug_assert_eq!(y.len(), self.rows);
        debug_assert_eq!(out.len(), self.cols);
        for (yr, row) in y.iter().zip(self.data.chunks_exact(self.cols)) {
            if *yr == 0.0 {
                continue;
            }
            for (o, w) in out.iter_mut().zip(row) {
                *o += w * yr;
            }
        }
    }

    /// `self += y ⊗ x`.
    fn add_outer(&mut self, y: &[f64], x: &[f64]) {
        debug_assert_eq!(y.len(), self.rows);
        debug_assert_eq!(x.len(), self.cols);
        for (yr, row) in y.iter().zip(self.data.chunks_exact_mut(self.cols)) {
            if *yr == 0.0 {
                continue;
            }
            for (w, xv) in row.iter_mut().zip(x) {
                *w += yr * xv;
            }
        }
    }
}

/// All trainable tensors. Row 0 of both embedding tables is the PAD row: it
/// stays all-zero and receives no gradient.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams {
    pub e_tok: Mat,
    pub e_path: Mat,
    pub w: Mat,
    pub a: Vec<f64>,
    pub w_out: Vec<f64>,
    pub b_out: f64,
}

impl ModelParams {
    pub fn dims(&self) -> ModelDims {
        ModelDims::new(self.e_tok.rows, self.e_path.rows, self.e_tok.cols)
    }
}

/// Glorot-uniform initialization: every tensor drawn in
/// ±√(6 / (fan_in + fan_out)), bias zero, PAD rows zeroed afterwards.
pub fn init_params(dims: &ModelDims, rng: &mut impl Rng) -> ModelParams {
    let d = dims.embed_dim;
    let combined = dims.combined_dim();
    let mut e_tok = draw_glorot(dims.token_vocab_size, d, rng);
    let mut e_path = draw_glorot(dims.path_vocab_size, d, rng);
    let w = draw_glorot(combined, combined, rng);
    let vec_limit = (6.0 / (combined + 1) as f64).sqrt();
    let a: Vec<f64> = (0..combined)
        .map(|_| rng.random_range(-vec_limit..vec_limit))
        .collect();
    let w_out: Vec<f64> = (0..combined)
        .map(|_| rng.random_range(-vec_limit..vec_limit))
        .collect();
    e_tok.row_mut(PAD_ID as usize).fill(0.0);
    e_path.row_mut(PAD_ID as usize).fill(0.0);
    ModelParams {
        e_tok,
        e_path,
        w,
        a,
        w_out,
        b_out: 0.0,
    }
}

fn draw_glorot(rows: usize, cols: usize, rng: &mut impl Rng) -> Mat {
    let limit = (6.0 / (rows + cols) as f64).sqrt();
    let mut m = Mat::zeros(rows, cols);
    for v in &mut m.data {
        *v = rng.random_range(-limit..limit);
    }
    m
}

/// Inverted-dropout mask: per context, per combined-vector entry, either 0 or
/// `1/(1-p)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DropoutMask {
    pub scales: Vec<Vec<f64>>,
}

impl DropoutMask {
    pub fn draw(n_contexts: usize, dim: usize, p: f64, rng: &mut impl Rng) -> Self {
        let keep_scale = 1.0 / (1.0 - p);
        let scales = (0..n_contexts)
            .map(|_| {
                (0..dim)
                    .map(|_| {
                        if rng.random::<f64>() < p {
                            0.0
                        } else {
                            keep_scale
                        }
                    })
                    .collect()
            })
            .collect();
        DropoutMask { scales }
    }
}

pub enum Mode<'r, R: Rng> {
    Eval,
    Train { dropout_p: f64, rng: &'r mut R },
}

/// Concrete rng type for [`Mode::Eval`] call sites, which never draw.
pub type EvalRng = rand_chacha::ChaCha8Rng;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("example has no contexts")]
    EmptyExample,
    #[error("id {id} out of range for {table} table of size {size}")]
    InvalidId {
        table: &'static str,
        id: u32,
        size: usize,
    },
}

/// Everything the backward pass needs, plus the prediction.
#[derive(Debug, Clone)]
pub struct ForwardTrace {
    pub contexts: Vec<PathContextTriple>,
    /// Post-dropout combined vectors, one per context.
    pub x_tilde: Vec<Vec<f64>>,
    /// tanh-transformed context vectors.
    pub c: Vec<Vec<f64>>,
    pub logits: Vec<f64>,
    pub alpha: Vec<f64>,
    /// Attention-pooled code vector.
    pub v: Vec<f64>,
    /// Output probability.
    pub p: f64,
    /// Dropout scales used; `None` in eval mode.
    pub mask: Option<DropoutMask>,
}

pub fn forward<R: Rng>(
    params: &ModelParams,
    example: &EncodedExample,
    mode: Mode<'_, R>,
) -> Result<ForwardTrace, ModelError> {
    let mask = match mode {
        Mode::Eval => None,
        Mode::Train { dropout_p, rng } => Some(DropoutMask::draw(
            example.contexts.len(),
            params.dims().combined_dim(),
            dropout_p,
            rng,
        )),
    };
    forward_with_mask(params, example, mask)
}

/// Forward pass with an explicit dropout mask (`None` = eval). Exposed so
/// gradient checks can re-run the exact same stochastic function.
pub fn forward_with_mask(
    params: &ModelParams,
    example: &EncodedExample,
    mask: Option<DropoutMask>,
) -> Result<ForwardTrace, ModelError> {
    let n = example.contexts.len();
    if n == 0 {
        return Err(ModelError::EmptyExample);
    }
    let d = params.e_tok.cols;
    let combined = 3 * d;

    let mut x_tilde = Vec::with_capacity(n);
    let mut c = Vec::with_capacity(n);
    let mut logits = Vec::with_capacity(n);
    for (i, triple) in example.contexts.iter().enumerate() {
        check_id("token", triple.source_token_id, params.e_tok.rows)?;
        check_id("path", triple.path_id, params.e_path.rows)?;
        check_id("token", triple.target_token_id, params.e_tok.rows)?;
        let mut x = Vec::with_capacity(combined);
        x.extend_from_slice(params.e_tok.row(triple.source_token_id as usize));
        x.extend_from_slice(params.e_path.row(triple.path_id as usize));
        x.extend_from_slice(params.e_tok.row(triple.target_token_id as usize));
        if let Some(m) = &mask {
            for (xv, s) in x.iter_mut().zip(&m.scales[i]) {
                *xv *= s;
            }
        }
        let mut u = vec![0.0; combined];
        params.w.matvec(&x, &mut u);
        let ci: Vec<f64> = u.iter().map(|z| z.tanh()).collect();
        let logit = dot(&ci, &params.a);
        x_tilde.push(x);
        c.push(ci);
        logits.push(logit);
    }

    let alpha = softmax(&logits);
    let mut v = vec![0.0; combined];
    for (ai, ci) in alpha.iter().zip(&c) {
        for (vv, cv) in v.iter_mut().zip(ci) {
            *vv += ai * cv;
        }
    }
    let z = dot(&v, &params.w_out) + params.b_out;
    let p = sigmoid(z);
    Ok(ForwardTrace {
        contexts: example.contexts.clone(),
        x_tilde,
        c,
        logits,
        alpha,
        v,
        p,
        mask,
    })
}

fn check_id(table: &'static str, id: u32, size: usize) -> Result<(), ModelError> {
    if (id as usize) < size {
        Ok(())
    } else {
        Err(ModelError::InvalidId { table, id, size })
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sigmoid(z: f64) -> f64 {
    1.0 / (1.0 + (-z).exp())
}

fn softmax(logits: &[f64]) -> Vec<f64> {
    let max = logits.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = logits.iter().map(|l| (l - max).exp()).collect();
    let sum: f64 = exps.iter().sum();
    exps.into_iter().map(|e| e / sum).collect()
}

/// Sparse per-row gradients for an embedding table, keyed by row id.
pub type SparseGrad = BTreeMap<u32, Vec<f64>>;

/// Gradients, shaped like [`ModelParams`] with sparse embedding tables.
#[derive(Debug, Clone, PartialEq)]
pub struct Gradients {
    pub e_tok: SparseGrad,
    pub e_path: SparseGrad,
    pub w: Mat,
    pub a: Vec<f64>,
    pub w_out: Vec<f64>,
    pub b_out: f64,
}

impl Gradients {
    pub fn zeros_like(params: &ModelParams) -> Self {
        Gradients {
            e_tok: SparseGrad::new(),
            e_path: SparseGrad::new(),
            w: Mat::zeros(params.w.rows, params.w.cols),
            a: vec![0.0; params.a.len()],
            w_out: vec![0.0; params.w_out.len()],
            b_out: 0.0,
        }
    }

    /// Elementwise `self += rhs`, merging sparse rows.
    pub fn accumulate(&mut self, rhs: &Gradients) {
        for (id, row) in &rhs.e_tok {
            add_sparse_row(&mut self.e_tok, *id, row);
        }
        for (id, row) in &rhs.e_path {
            add_sparse_row(&mut self.e_path, *id, row);
        }
        for (w, r) in self.w.data.iter_mut().zip(&rhs.w.data) {
            *w += r;
        }
        for (aa, r) in self.a.iter_mut().zip(&rhs.a) {
            *aa += r;
        }
        for (ww, r) in self.w_out.iter_mut().zip(&rhs.w_out) {
            *ww += r;
        }
        self.b_out += rhs.b_out;
    }

    pub fn scale(&mut self, factor: f64) {
        for row in self.e_tok.values_mut() {
            for v in row {
                *v *= factor;
            }
        }
        for row in self.e_path.values_mut() {
            for v in row {
                *v *= factor;
            }
        }
        for v in &mut self.w.data {
            *v *= factor;
        }
        for v in &mut self.a {
            *v *= factor;
        }
        for v in &mut self.w_out {
            *v *= factor;
        }
        self.b_out *= factor;
    }

    pub fn is_finite(&self) -> bool {
        self.e_tok.values().flatten().all(|v| v.is_finite())
            && self.e_path.values().flatten().all(|v| v.is_finite())
            && self.w.data.iter().all(|v| v.is_finite())
            && self.a.iter().all(|v| v.is_finite())
            && self.w_out.iter().all(|v| v.is_finite())
            && self.b_out.is_finite()
    }
}

fn add_sparse_row(grad: &mut SparseGrad, id: u32, delta: &[f64]) {
    let row = grad.entry(id).or_insert_with(|| vec![0.0; delta.len()]);
    for (r, d) in row.iter_mut().zip(delta) {
        *r += d;
    }
}

/// Analytic gradients of the binary cross-entropy loss at this trace. The
/// dropout mask recorded in the trace is re-applied on the way back;
/// gradients for the PAD embedding row are forced to zero.
#[allow(clippy::needless_range_loop)] // per-context step indexes five buffers
pub fn backward(params: &ModelParams, trace: &ForwardTrace, label: u8) -> Gradients {
    let n = trace.contexts.len();
    let combined = trace.v.len();
    let d = combined / 3;
    let y = f64::from(label);
    let mut grads = Gradients::zeros_like(params);

    // Sigmoid + BCE: dL/dz = p − y.
    let dz = trace.p - y;
    grads.b_out = dz;
    for (gw, vv) in grads.w_out.iter_mut().zip(&trace.v) {
        *gw = dz * vv;
    }
    let dv: Vec<f64> = params.w_out.iter().map(|w| dz * w).collect();

    // v = Σ αᵢ cᵢ
    let dalpha: Vec<f64> = trace.c.iter().map(|ci| dot(&dv, ci)).collect();
    // Softmax backward.
    let weighted: f64 = trace.alpha.iter().zip(&dalpha).map(|(a, da)| a * da).sum();
    let dlogits: Vec<f64> = trace
        .alpha
        .iter()
        .zip(&dalpha)
        .map(|(a, da)| a * (da - weighted))
        .collect();

    for i in 0..n {
        // dL/dcᵢ from the pooled sum and from the attention score.
        let mut dc: Vec<f64> = dv.iter().map(|dvk| trace.alpha[i] * dvk).collect();
        for (dck, ak) in dc.iter_mut().zip(&params.a) {
            *dck += dlogits[i] * ak;
        }
        for (ga, ck) in grads.a.iter_mut().zip(&trace.c[i]) {
            *ga += dlogits[i] * ck;
        }
        // c = tanh(u)
        let du: Vec<f64> = dc
            .iter()
            .zip(&trace.c[i])
            .map(|(dck, ck)| dck * (1.0 - ck * ck))
            .collect();
        grads.w.add_outer(&du, &trace.x_tilde[i]);
        let mut dx = vec![0.0; combined];
        params.w.add_t_matvec(&du, &mut dx);
        if let Some(mask) = &trace.mask {
            for (dxk, s) in dx.iter_mut().zip(&mask.scales[i]) {
                *dxk *= s;
            }
        }
        let triple = trace.contexts[i];
        add_sparse_row(&mut grads.e_tok, triple.source_token_id, &dx[..d]);
        add_sparse_row(&mut grads.e_path, triple.path_id, &dx[d..2 * d]);
        add_sparse_row(&mut grads.e_tok, triple.target_token_id, &dx[2 * d..]);
    }

    // PAD never learns.
    if let Some(row) = grads.e_tok.get_mut(&PAD_ID) {
        row.fill(0.0);
    }
    if let Some(row) = grads.e_path.get_mut(&PAD_ID) {
        row.fill(0.0);
    }
    grads
}

/// Eval-mode probability that the example is buggy.
pub fn predict(params: &ModelParams, example: &EncodedExample) -> Result<f64, ModelError> {
    Ok(forward::<EvalRng>(params, example, Mode::Eval)?.p)
}

// ---------------------------------------------------------------------------
// Weight file: magic `OBO1`, little-endian u32 dims (token vocab, path
// vocab, embed dim, combined dim), then E_tok, E_path, W, a, w_out, b_out as
// little-endian f64, row-major.
// ---------------------------------------------------------------------------

const MAGIC: &[u8; 4] = b"OBO1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("io error: {0}")]
    Io(#[from] io::Error),
    #[error("not a weight file (bad magic)")]
    BadMagic,
    #[error("inconsistent dimensions in weight file")]
    BadDimensions,
}

pub fn save_params(params: &ModelParams, path: &Path) -> Result<(), FormatError> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(MAGIC)?;
    let dims = params.dims();
    for n in [
        dims.token_vocab_size,
        dims.path_vocab_size,
        dims.embed_dim,
        dims.combined_dim(),
    ] {
        w.write_all(&(n as u32).to_le_bytes())?;
    }
    for tensor in [&params.e_tok.data, &params.e_path.data, &params.w.data] {
        write_f64s(&mut w, tensor)?;
    }
    write_f64s(&mut w, &params.a)?;
    write_f64s(&mut w, &params.w_out)?;
    write_f64s(&mut w, &[params.b_out])?;
    w.flush()?;
    Ok(())
}

fn write_f64s<W: Write>(w: &mut W, data: &[f64]) -> io::Result<()> {
    for v in data {
        w.write_all(&v.to_le_bytes())?;
    }
    Ok(())
}

pub fn load_params(path: &Path) -> Result<ModelParams, FormatError> {
    let mut r = BufReader::new(File::open(path)?);
    let mut magic = [0u8; 4];
    read_exact_or(&mut r, &mut magic)?;
    if &magic != MAGIC {
        return Err(FormatError::BadMagic);
    }
    let mut dims = [0usize; 4];
    for d in &mut dims {
        let mut buf = [0u8; 4];
        read_exact_or(&mut r, &mut buf)?;
        *d = u32::from_le_bytes(buf) as usize;
    }
    let [token_vocab, path_vocab, embed_dim, combined_dim] = dims;
    if combined_dim != 3 * embed_dim || token_vocab < 2 || path_vocab < 2 || embed_dim == 0 {
        return Err(FormatError::BadDimensions);
    }
    let read_mat =
        |rows: usize, cols: usize, r: &mut BufReader<File>| -> Result<Mat, FormatError> {
            let mut m = Mat::zeros(rows, cols);
            read_f64s(r, &mut m.data)?;
            Ok(m)
        };
    let e_tok = read_mat(token_vocab, embed_dim, &mut r)?;
    let e_path = read_mat(path_vocab, embed_dim, &mut r)?;
    let w = read_mat(combined_dim, combined_dim, &mut r)?;
    let mut a = vec![0.0; combined_dim];
    read_f64s(&mut r, &mut a)?;
    let mut w_out = vec![0.0; combined_dim];
    read_f64s(&mut r, &mut w_out)?;
    let mut b = [0.0];
    read_f64s(&mut r, &mut b)?;
    // Trailing garbage means the file is not what the header claims.
    let mut probe = [0u8; 1];
    if r.read(&mut probe)? != 0 {
        return Err(FormatError::BadDimensions);
    }
    Ok(ModelParams {
        e_tok,
        e_path,
        w,
        a,
        w_out,
        b_out: b[0],
    })
}

fn read_f64s<R: Read>(r: &mut R, out: &mut [f64]) -> Result<(), FormatError> {
    for v in out {
        let mut buf = [0u8; 8];
        read_exact_or(r, &mut buf)?;
        *v = f64::from_le_bytes(buf);
    }
    Ok(())
}

fn read_exact_or<R: Read>(r: &mut R, buf: &mut [u8]) -> Result<(), FormatError> {
    r.read_exact(buf).map_err(|e| {
        if e.kind() == io::ErrorKind::UnexpectedEof {
            FormatError::BadDimensions
        } else {
            FormatError::Io(e)
        }
    })
}

#[cfg(test)]
mod tests;
