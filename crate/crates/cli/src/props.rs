use std::fs;
use std::io::Write;

use gcdirac::algebra::{
    check_associative, check_commutative, check_power_associative_sampled, find_zero_divisors, LawWitness,
    StructureConstantsTable,
};
use serde::Serialize;

use crate::{CliError, Format, Outcome, PropsConfig};

#[derive(Debug, Clone, Serialize)]
pub struct PropsReport {
    pub table: StructureConstantsTable,
    pub commutativity: Vec<LawWitness>,
    pub associativity: Vec<LawWitness>,
    pub zero_divisors: Vec<LawWitness>,
    pub power_associativity: Vec<LawWitness>,
    pub power_samples: usize,
}

impl PropsReport {
    fn operands(&self, w: &LawWitness) -> String {
        match w.basis_operands() {
            Some(idx) => idx
                .iter()
                .map(|&i| self.table.basis_names()[i].as_str())
                .collect::<Vec<_>>()
                .join(","),
            None => "sampled element".into(),
        }
    }

    fn verdict(&self, witnesses: &[LawWitness]) -> String {
        match witnesses.first() {
            None => "yes".into(),
            Some(w) => format!("NO (witness {})", self.operands(w)),
        }
    }

    /// One-line summary, e.g.
    /// `commutative: yes; associative: NO (witness i,i,j); zero divisors: (i,j), (j,i)`.
    pub fn summary(&self) -> String {
        let zd = if self.zero_divisors.is_empty() {
            "none".to_string()
        } else {
            self.zero_divisors
                .iter()
                .map(|w| format!("({})", self.operands(w)))
                .collect::<Vec<_>>()
                .join(", ")
        };
        format!(
            "commutative: {}; associative: {}; zero divisors: {}; power-associative: {}",
            self.verdict(&self.commutativity),
            self.verdict(&self.associativity),
            zd,
            self.verdict(&self.power_associativity),
        )
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "table: {} (dim {})\n{}\n",
            self.table.basis_names().join(", "),
            self.table.dim(),
            self.summary()
        );
        let sections = [
            ("commutativity", &self.commutativity),
            ("associativity", &self.associativity),
            ("zero divisors", &self.zero_divisors),
            ("power associativity", &self.power_associativity),
        ];
        for (title, ws) in sections {
            if ws.is_empty() {
                continue;
            }
            out.push_str(&format!("{title}:\n"));
            for w in ws {
                out.push_str(&format!("  {}\n", w.describe(&self.table)));
            }
        }
        out
    }
}

pub fn props_report(table: StructureConstantsTable, samples: usize, seed: u64) -> PropsReport {
    PropsReport {
        commutativity: check_commutative(&table),
        associativity: check_associative(&table),
        zero_divisors: find_zero_divisors(&table),
        power_associativity: check_power_associative_sampled(&table, samples, seed),
        power_samples: samples,
        table,
    }
}

fn load_table(cfg: &PropsConfig) -> Result<StructureConstantsTable, CliError> {
    let Some(path) = &cfg.table else {
        return Ok(cfg.builtin.table());
    };
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse {
        path: path.display().to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn cmd_props(cfg: &PropsConfig, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let report = props_report(load_table(cfg)?, cfg.samples, cfg.seed);
    match cfg.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &report).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        Format::Text => out.write_all(report.render_text().as_bytes())?,
        Format::Csv => return Err(CliError::Usage("props supports text or json output".into())),
    }
    Ok(Outcome::Success)
}
