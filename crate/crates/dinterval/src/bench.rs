//! Scaling of the transform phase of the construction.

use std::time::{Duration, Instant};

use dinterval_core::construction::{transform_family, ConstructionError, TieBreak};
use dinterval_core::generators::random_interval_rep;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub pieces: usize,
    /// Best of the repetitions.
    pub time: Duration,
    /// Time relative to the previous row.
    pub ratio: Option<f64>,
}

/// Times `transform_family` on `random_interval_rep(n, max_m, seed)` for
/// each `n`. Generation is not timed.
pub fn scaling(
    sizes: &[usize],
    max_m: usize,
    seed: u64,
    repeats: usize,
) -> Result<Vec<BenchRow>, ConstructionError> {
    let d = max_m.div_ceil(2).max(1);
    let mut rows: Vec<BenchRow> = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let rep = random_interval_rep(n, max_m, seed);
        let mut best = Duration::MAX;
        let mut pieces = 0;
        for _ in 0..repeats.max(1) {
            let t = Instant::now();
            let out = transform_family(&rep, d, TieBreak::SmallerId)?;
            best = best.min(t.elapsed());
            pieces = out.interval_count();
        }
        let ratio = rows
            .last()
            .map(|prev| best.as_secs_f64() / prev.time.as_secs_f64().max(1e-9));
        rows.push(BenchRow {
            n,
            pieces,
            time: best,
            ratio,
        });
    }
    Ok(rows)
}

pub fn table(rows: &[BenchRow]) -> String {
    let mut out = format!("{:>10} {:>10} {:>12} {:>7}\n", "n", "pieces", "ms", "ratio");
    for r in rows {
        let ratio = r.ratio.map_or("-".to_string(), |x| format!("{x:.2}"));
        out.push_str(&format!(
            "{:>10} {:>10} {:>12.3} {:>7}\n",
            r.n,
            r.pieces,
            r.time.as_secs_f64() * 1e3,
            ratio
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_table() {
        let rows = scaling(&[100, 200], 4, 1, 1).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows[0].ratio.is_none() && rows[1].ratio.is_some());
        assert!(rows[1].pieces >= 200);
        let text = table(&rows);
        assert_eq!(text.lines().count(), 3);
    }
}
