use std::io::Write;
use std::path::Path;

use super::config::{Algorithm, SweepKind};
use super::sweep::SweepRecord;
use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 9] = [
    "sweep_var",
    "sweep_value",
    "tau",
    "algorithm",
    "mean_ee",
    "mean_se",
    "mean_m_star",
    "feasibility_rate",
    "realizations",
];

fn sci(v: f64) -> String {
    format!("{v:.16e}")
}

fn sorted(records: &[SweepRecord]) -> Vec<&SweepRecord> {
    let mut rows: Vec<&SweepRecord> = records.iter().collect();
    rows.sort_by(|a, b| {
        a.sweep_value
            .total_cmp(&b.sweep_value)
            .then(a.tau.total_cmp(&b.tau))
            .then(a.algorithm.name().cmp(b.algorithm.name()))
    });
    rows
}

/// Writes records as CSV to any sink, sorted by sweep value, `τ` and
/// algorithm name.
pub fn write_csv_to<W: Write>(records: &[SweepRecord], sink: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(CSV_HEADER)?;
    for r in sorted(records) {
        w.write_record([
            r.sweep_var.csv_name().to_string(),
            sci(r.sweep_value),
            sci(r.tau),
            r.algorithm.name().to_string(),
            sci(r.mean_ee),
            sci(r.mean_se),
            sci(r.mean_m_star),
            sci(r.feasibility_rate),
            r.realizations.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_csv(records: &[SweepRecord], path: &Path) -> Result<()> {
    let file = std::fs::File::create(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    write_csv_to(records, file).map_err(|source| Error::Csv {
        path: path.to_path_buf(),
        source,
    })
}

/// Parses a file produced by [`write_csv`].
pub fn read_csv(path: &Path) -> Result<Vec<SweepRecord>> {
    let csv_err = |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    };
    let mut rdr = csv::Reader::from_path(path).map_err(csv_err)?;
    let header = rdr.headers().map_err(csv_err)?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::config(format!("{}: unexpected header", path.display())));
    }
    let mut out = Vec::new();
    for (line, row) in rdr.records().enumerate() {
        let row = row.map_err(csv_err)?;
        let bad = |col: &str| Error::config(format!("{}: row {}: bad {col}", path.display(), line + 1));
        let num = |i: usize| row[i].parse::<f64>().map_err(|_| bad(CSV_HEADER[i]));
        out.push(SweepRecord {
            sweep_var: SweepKind::from_csv_name(&row[0]).ok_or_else(|| bad("sweep_var"))?,
            sweep_value: num(1)?,
            tau: num(2)?,
            algorithm: row[3].parse::<Algorithm>().map_err(|_| bad("algorithm"))?,
            mean_ee: num(4)?,
            mean_se: num(5)?,
            mean_m_star: num(6)?,
            feasibility_rate: num(7)?,
            realizations: row[8].parse().map_err(|_| bad("realizations"))?,
        });
    }
    Ok(out)
}
