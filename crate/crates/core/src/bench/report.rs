use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::search::Method;

use super::{diff_percent, RunResult};

/// Instances down, methods across, a `k` and `Dif.%` column per method, as in
/// a color-count comparison table. Across seeds a cell shows the smallest `k`.
/// The best `k` of each instance is marked with `*`; methods with no rows are
/// left out.
pub fn compare_report(rows: &[RunResult]) -> String {
    let methods: Vec<Method> = Method::ALL
        .into_iter()
        .filter(|m| rows.iter().any(|r| r.method == *m))
        .collect();

    // instance -> method -> (best k, best_known)
    let mut table: BTreeMap<&str, BTreeMap<Method, (u32, Option<u32>)>> = BTreeMap::new();
    for row in rows {
        let cell = table
            .entry(row.instance.as_str())
            .or_default()
            .entry(row.method)
            .or_insert((row.k_colors, row.best_known));
        if row.k_colors < cell.0 {
            *cell = (row.k_colors, row.best_known);
        }
    }

    let name_width = table.keys().map(|n| n.len()).max().unwrap_or(0).max("instance".len());
    let mut out = String::new();
    let _ = write!(out, "{:<name_width$}", "instance");
    for m in &methods {
        let _ = write!(out, " {:>6} {:>7}", m.label(), "Dif.%");
    }
    out.push('\n');

    for (name, cells) in &table {
        let best = cells.values().map(|c| c.0).min();
        let _ = write!(out, "{name:<name_width$}");
        for m in &methods {
            match cells.get(m) {
                Some(&(k, reference)) => {
                    let flag = if Some(k) == best { "*" } else { " " };
                    let diff = reference
                        .and_then(|r| diff_percent(k, r).ok())
                        .map_or_else(|| "-".to_string(), |d| format!("{d:.2}"));
                    let _ = write!(out, " {:>5}{flag} {diff:>7}", k);
                }
                None => {
                    let _ = write!(out, " {:>6} {:>7}", "-", "-");
                }
            }
        }
        out.push('\n');
    }
    out
}
