//! Confusion-matrix metrics and per-context breakdown tables.

use std::collections::BTreeMap;

use crate::mutate::{Comparator, ContextType, StatementKind};

/// Confusion counts and the ratios derived from them. Any 0/0 ratio is
/// defined as 0, matching rows with no positive predictions at all.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Metrics {
    pub true_positives: u64,
    pub true_negatives: u64,
    pub false_positives: u64,
    pub false_negatives: u64,
    pub accuracy: f64,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

impl Metrics {
    pub fn from_counts(tp: u64, tn: u64, fp: u64, fn_: u64) -> Metrics {
        let ratio = |num: u64, den: u64| {
            if den == 0 {
                0.0
            } else {
                num as f64 / den as f64
            }
        };
        let precision = ratio(tp, tp + fp);
        let recall = ratio(tp, tp + fn_);
        let f1 = if precision + recall == 0.0 {
            0.0
        } else {
            2.0 * precision * recall / (precision + recall)
        };
        Metrics {
            true_positives: tp,
            true_negatives: tn,
            false_positives: fp,
            false_negatives: fn_,
            accuracy: ratio(tp + tn, tp + tn + fp + fn_),
            precision,
            recall,
            f1,
        }
    }

    pub fn total(&self) -> u64 {
        self.true_positives + self.true_negatives + self.false_positives + self.false_negatives
    }
}

/// Positive class = buggy (label 1); probabilities at the threshold count as
/// positive.
pub fn confusion(predictions: impl IntoIterator<Item = (u8, f64)>, threshold: f64) -> Metrics {
    let mut tp = 0;
    let mut tn = 0;
    let mut fp = 0;
    let mut fn_ = 0;
    for (label, p) in predictions {
        let positive = p >= threshold;
        match (label == 1, positive) {
            (true, true) => tp += 1,
            (false, false) => tn += 1,
            (false, true) => fp += 1,
            (true, false) => fn_ += 1,
        }
    }
    Metrics::from_counts(tp, tn, fp, fn_)
}

/// One scored prediction with the grouping metadata it carries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Prediction {
    pub label: u8,
    pub probability: f64,
    pub context_type: ContextType,
}

/// Grouping keys for breakdown tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupBy {
    ContextType,
    Statement,
    Comparator,
}

impl GroupBy {
    fn key(&self, ct: ContextType) -> String {
        match self {
            GroupBy::ContextType => ct.to_string(),
            GroupBy::Statement => ct.statement.label().to_string(),
            GroupBy::Comparator => cap_first(ct.comparator.label()),
        }
    }
}

fn cap_first(s: &str) -> String {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) => c.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

/// One row of a breakdown table.
#[derive(Debug, Clone, PartialEq)]
pub struct ContextBreakdownRow {
    pub group: String,
    pub metrics: Metrics,
}

/// Partitions predictions by the grouping key, sorts rows by group total
/// descending (ties by name), and appends the pooled `Total` row.
pub fn breakdown(
    predictions: &[Prediction],
    threshold: f64,
    group_by: GroupBy,
) -> Vec<ContextBreakdownRow> {
    let mut groups: BTreeMap<String, Vec<(u8, f64)>> = BTreeMap::new();
    for p in predictions {
        groups
            .entry(group_by.key(p.context_type))
            .or_default()
            .push((p.label, p.probability));
    }
    let mut rows: Vec<ContextBreakdownRow> = groups
        .into_iter()
        .map(|(group, preds)| ContextBreakdownRow {
            group,
            metrics: confusion(preds, threshold),
        })
        .collect();
    rows.sort_by(|a, b| {
        b.metrics
            .total()
            .cmp(&a.metrics.total())
            .then_with(|| a.group.cmp(&b.group))
    });
    if !rows.is_empty() {
        let pooled = pool_rows(rows.iter().map(|r| &r.metrics));
        rows.push(ContextBreakdownRow {
            group: "Total".to_string(),
            metrics: pooled,
        });
    }
    rows
}

/// Pools confusion counts and recomputes the ratios from the sums.
pub fn pool_rows<'a>(rows: impl IntoIterator<Item = &'a Metrics>) -> Metrics {
    let mut tp = 0;
    let mut tn = 0;
    let mut fp = 0;
    let mut fn_ = 0;
    for m in rows {
        tp += m.true_positives;
        tn += m.true_negatives;
        fp += m.false_positives;
        fn_ += m.false_negatives;
    }
    Metrics::from_counts(tp, tn, fp, fn_)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    AlignedText,
    Csv,
}

/// Ratios rendered with four decimals, rounding halves away from zero.
pub fn render_ratio(x: f64) -> String {
    format!("{:.4}", (x * 10_000.0).round() / 10_000.0)
}

/// Renders rows as CSV (exact column set) or as an aligned-text table.
pub fn render_report(rows: &[ContextBreakdownRow], format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => {
            let mut out =
                String::from("context_type,tp,tn,fp,fn,total,accuracy,recall,precision,f1\n");
            for r in rows {
                let m = &r.metrics;
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{}\n",
                    r.group,
                    m.true_positives,
                    m.true_negatives,
                    m.false_positives,
                    m.false_negatives,
                    m.total(),
                    render_ratio(m.accuracy),
                    render_ratio(m.recall),
                    render_ratio(m.precision),
                    render_ratio(m.f1),
                ));
            }
            out
        }
        ReportFormat::AlignedText => {
            let name_width = rows
                .iter()
                .map(|r| r.group.len())
                .max()
                .unwrap_or(12)
                .max("Context Type".len());
            let mut out = format!(
                "{:<name_width$} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>9} {:>8}\n",
                "Context Type", "TP", "TN", "FP", "FN", "Total", "Acc", "Recall", "Precision", "F1",
            );
            for r in rows {
                let m = &r.metrics;
                out.push_str(&format!(
                    "{:<name_width$} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>9} {:>8}\n",
                    r.group,
                    m.true_positives,
                    m.true_negatives,
                    m.false_positives,
                    m.false_negatives,
                    m.total(),
                    render_ratio(m.accuracy),
                    render_ratio(m.recall),
                    render_ratio(m.precision),
                    render_ratio(m.f1),
                ));
            }
            out
        }
    }
}

/// Convenience for tests and fixtures: a breakdown row from raw counts.
pub fn row_from_counts(group: &str, tp: u64, tn: u64, fp: u64, fn_: u64) -> ContextBreakdownRow {
    ContextBreakdownRow {
        group: group.to_string(),
        metrics: Metrics::from_counts(tp, tn, fp, fn_),
    }
}

/// Parses a breakdown group label back into grouping parts where possible.
pub fn group_statement(row: &ContextBreakdownRow) -> Option<StatementKind> {
    ContextType::parse(&row.group).map(|ct| ct.statement)
}

pub fn group_comparator(row: &ContextBreakdownRow) -> Option<Comparator> {
    ContextType::parse(&row.group).map(|ct| ct.comparator)
}

#[cfg(test)]
mod tests;
