//! CSV and JSON serialization of benchmark rows.

use std::io::{Read, Write};

use crate::bench::RunResult;
use crate::error::Result;

pub const CSV_HEADER: [&str; 8] = [
    "instance",
    "method",
    "seed",
    "k_colors",
    "proper",
    "wall_seconds",
    "best_known",
    "diff_percent",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ResultFormat {
    #[default]
    Csv,
    Json,
}

/// Writes `rows` as CSV (wall seconds to 3 decimals, diff-% to 2, absent
/// values as empty fields) or as a JSON array with the same field names.
pub fn write_results<W: Write>(rows: &[RunResult], out: W, format: ResultFormat) -> Result<()> {
    match format {
        ResultFormat::Csv => write_csv(rows, out),
        ResultFormat::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, rows)?;
            writeln!(out)?;
            Ok(())
        }
    }
}

fn write_csv<W: Write>(rows: &[RunResult], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(CSV_HEADER)?;
    for row in rows {
        writer.write_record([
            row.instance.clone(),
            row.method.to_string(),
            row.seed.to_string(),
            row.k_colors.to_string(),
            row.proper.to_string(),
            format!("{:.3}", row.wall_seconds),
            row.best_known.map(|b| b.to_string()).unwrap_or_default(),
            row.diff_percent.map(|d| format!("{d:.2}")).unwrap_or_default(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

pub fn read_results_csv<R: Read>(input: R) -> Result<Vec<RunResult>> {
    let mut reader = csv::Reader::from_reader(input);
    let mut rows = Vec::new();
    for record in reader.deserialize() {
        rows.push(record?);
    }
    Ok(rows)
}

pub fn read_results_json<R: Read>(input: R) -> Result<Vec<RunResult>> {
    Ok(serde_json::from_reader(input)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::diff_percent;
    use crate::search::Method;
    use proptest::prelude::*;

    fn hc_row() -> RunResult {
        RunResult {
            instance: "DSJC125.5".into(),
            method: Method::Hc,
            seed: 1,
            k_colors: 20,
            proper: true,
            wall_seconds: 4283.51234,
            best_known: Some(17),
            diff_percent: Some(diff_percent(20, 17).unwrap()),
        }
    }

    #[test]
    fn csv_row_layout() {
        let mut buf = Vec::new();
        write_results(&[hc_row()], &mut buf, ResultFormat::Csv).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "instance,method,seed,k_colors,proper,wall_seconds,best_known,diff_percent");
        assert_eq!(lines[1], "DSJC125.5,HC,1,20,true,4283.512,17,17.65");
    }

    #[test]
    fn empty_rows_give_header_only() {
        let mut buf = Vec::new();
        write_results(&[], &mut buf, ResultFormat::Csv).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), format!("{}\n", CSV_HEADER.join(",")));
        let mut buf = Vec::new();
        write_results(&[], &mut buf, ResultFormat::Json).unwrap();
        assert_eq!(read_results_json(buf.as_slice()).unwrap(), vec![]);
    }

    #[test]
    fn absent_reference_is_empty_field() {
        let row = RunResult {
            best_known: None,
            diff_percent: None,
            instance: "toy".into(),
            ..hc_row()
        };
        let mut buf = Vec::new();
        write_results(std::slice::from_ref(&row), &mut buf, ResultFormat::Csv).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.lines().nth(1).unwrap().ends_with(",true,4283.512,,"));
        let back = read_results_csv(text.as_bytes()).unwrap();
        assert_eq!(back[0].best_known, None);
        assert_eq!(back[0].diff_percent, None);
    }

    fn any_row() -> impl Strategy<Value = RunResult> {
        (
            "[A-Za-z0-9._-]{1,12}",
            0usize..4,
            any::<u64>(),
            1u32..200,
            0.0f64..1e5,
            proptest::option::of(1u32..200),
        )
            .prop_map(|(instance, m, seed, k, wall, best)| RunResult {
                instance,
                method: Method::ALL[m],
                seed,
                k_colors: k,
                proper: true,
                wall_seconds: wall,
                best_known: best,
                diff_percent: best.map(|b| diff_percent(k, b).unwrap()),
            })
    }

    proptest! {
        #[test]
        fn json_round_trip(rows in proptest::collection::vec(any_row(), 0..8)) {
            let mut buf = Vec::new();
            write_results(&rows, &mut buf, ResultFormat::Json).unwrap();
            prop_assert_eq!(read_results_json(buf.as_slice()).unwrap(), rows);
        }

        #[test]
        fn csv_round_trip_up_to_rounding(rows in proptest::collection::vec(any_row(), 0..8)) {
            let mut buf = Vec::new();
            write_results(&rows, &mut buf, ResultFormat::Csv).unwrap();
            let back = read_results_csv(buf.as_slice()).unwrap();
            prop_assert_eq!(back.len(), rows.len());
            for (a, b) in rows.iter().zip(&back) {
                prop_assert_eq!(&a.instance, &b.instance);
                prop_assert_eq!((a.method, a.seed, a.k_colors, a.best_known), (b.method, b.seed, b.k_colors, b.best_known));
                prop_assert!((a.wall_seconds - b.wall_seconds).abs() <= 5e-4 + 1e-9);
                prop_assert_eq!(a.diff_percent, b.diff_percent);
            }
        }
    }
}
