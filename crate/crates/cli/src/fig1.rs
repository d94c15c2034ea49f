use std::fs::File;
use std::io::{BufWriter, Write};

use gcdirac::dirac::{spinor_ratio, Branch};

use crate::{CliError, Fig1Config, Outcome};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fig1Row {
    pub m: f64,
    pub p: f64,
    pub branch: Branch,
    pub ratio: f64,
}

/// `steps` evenly spaced values; the endpoints are hit exactly.
pub fn linspace(min: f64, max: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![min],
        n => (0..n)
            .map(|k| {
                if k == n - 1 {
                    max
                } else {
                    min + (max - min) * (k as f64 / (n - 1) as f64)
                }
            })
            .collect(),
    }
}

/// Rows ordered by `m`, then `p`, then branch.
pub fn fig1_rows(cfg: &Fig1Config) -> Result<Vec<Fig1Row>, CliError> {
    cfg.validate()?;
    let ms = linspace(cfg.m_min, cfg.m_max, cfg.m_steps);
    let ps = linspace(cfg.p_min, cfg.p_max, cfg.p_steps);
    let branches = cfg.branch.branches();
    let mut rows = Vec::with_capacity(ms.len() * ps.len() * branches.len());
    for &m in &ms {
        for &p in &ps {
            for &branch in branches {
                let ratio = spinor_ratio(m, p, branch).map_err(|e| CliError::Usage(e.to_string()))?;
                rows.push(Fig1Row { m, p, branch, ratio });
            }
        }
    }
    Ok(rows)
}

/// Shortest decimal that parses back to the same `f64`; `-0` prints as `0`.
fn num(x: f64) -> String {
    format!("{}", x + 0.0)
}

pub fn write_fig1_csv(rows: &[Fig1Row], out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "m,p,branch,ratio")?;
    for r in rows {
        writeln!(out, "{},{},{},{}", num(r.m), num(r.p), r.branch, num(r.ratio))?;
    }
    Ok(())
}

/// Writes to `cfg.output` when set, otherwise to `out`.
pub fn cmd_fig1(cfg: &Fig1Config, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let rows = fig1_rows(cfg)?;
    match &cfg.output {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            write_fig1_csv(&rows, &mut w)?;
            w.flush()?;
        }
        None => {
            let mut w = BufWriter::new(out);
            write_fig1_csv(&rows, &mut w)?;
            w.flush()?;
        }
    }
    Ok(Outcome::Success)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BranchSelection;

    fn point(m: f64, p: f64) -> Fig1Config {
        Fig1Config {
            m_min: m,
            m_max: m,
            m_steps: 1,
            p_min: p,
            p_max: p,
            p_steps: 1,
            branch: BranchSelection::Positive,
            output: None,
        }
    }

    fn csv(cfg: &Fig1Config) -> String {
        let mut buf = Vec::new();
        cmd_fig1(cfg, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn single_point_rows() {
        assert_eq!(csv(&point(1.0, 0.0)), "m,p,branch,ratio\n1,0,positive,1\n");
        assert_eq!(csv(&point(3.0, 4.0)), "m,p,branch,ratio\n3,4,positive,3\n");
    }

    #[test]
    fn linspace_endpoints() {
        let v = linspace(-5.0, 5.0, 50);
        assert_eq!(v.len(), 50);
        assert_eq!((v[0], v[49]), (-5.0, 5.0));
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(linspace(2.0, 2.0, 1), vec![2.0]);
    }

    #[test]
    fn default_grid_shape() {
        let rows = fig1_rows(&Fig1Config::default()).unwrap();
        assert_eq!(rows.len(), 50 * 50 * 2);
        assert!(rows.iter().all(|r| r.ratio.is_finite()));
        assert_eq!(rows[0].branch, Branch::Positive);
        assert_eq!(rows[1].branch, Branch::Negative);
        assert_eq!(rows[1].p, rows[0].p);
    }

    #[test]
    fn values_round_trip_through_text() {
        let text = csv(&Fig1Config::default());
        let rows = fig1_rows(&Fig1Config::default()).unwrap();
        for (line, row) in text.lines().skip(1).zip(&rows) {
            let ratio: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
            assert_eq!(ratio, row.ratio);
        }
    }

    #[test]
    fn unwritable_path_is_io_error() {
        let cfg = Fig1Config {
            output: Some("/nonexistent-dir/x/fig1.csv".into()),
            ..point(1.0, 0.0)
        };
        let err = cmd_fig1(&cfg, &mut Vec::new()).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }
}
