//! Trace and table serialization.
//!
//! A trace file is JSON lines: one `header` record, one `step` record per
//! applied rule, one `footer` record. Budgets are exact rational strings.

use std::fmt::Write as _;

use platonic_core::simulate::{conservation_report, Budgets, RuleSet, Trace};
use platonic_core::Rational;
use serde::{Deserialize, Serialize};

use crate::reactions::{state_doc, ReactionDoc, TermDoc};
use crate::FormatError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetDoc {
    pub scalene: String,
    pub isosceles: String,
    pub earth: String,
}

impl BudgetDoc {
    pub fn new(b: &Budgets) -> Self {
        BudgetDoc { scalene: b.scalene.to_string(), isosceles: b.isosceles.to_string(), earth: b.earth.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "lowercase")]
pub enum TraceRecord {
    Header {
        schema: String,
        seed: u64,
        requested_steps: usize,
        rules: Vec<ReactionDoc>,
        initial: Vec<TermDoc>,
        budgets: BudgetDoc,
    },
    Step {
        index: usize,
        rule: usize,
        budgets: BudgetDoc,
    },
    Footer {
        steps_taken: usize,
        stopped_early: bool,
        conserved: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        first_drift: Option<usize>,
        #[serde(rename = "final")]
        final_state: Vec<TermDoc>,
    },
}

pub fn trace_records(trace: &Trace, rules: &RuleSet) -> Vec<TraceRecord> {
    let report = conservation_report(trace);
    let mut out = Vec::with_capacity(trace.steps.len() + 2);
    out.push(TraceRecord::Header {
        schema: format!("trace/v{}", crate::SCHEMA_VERSION),
        seed: trace.seed,
        requested_steps: trace.requested_steps,
        rules: rules.rules().iter().map(ReactionDoc::new).collect(),
        initial: state_doc(&trace.initial),
        budgets: BudgetDoc::new(&report.baseline),
    });
    out.extend(trace.steps.iter().enumerate().map(|(index, s)| TraceRecord::Step {
        index,
        rule: s.rule,
        budgets: BudgetDoc::new(&s.budgets),
    }));
    out.push(TraceRecord::Footer {
        steps_taken: trace.steps.len(),
        stopped_early: trace.stopped_early,
        conserved: report.conserved(),
        first_drift: report.first_drift,
        final_state: state_doc(&trace.final_state),
    });
    out
}

pub fn to_json_lines(trace: &Trace, rules: &RuleSet) -> String {
    let mut out = String::new();
    for record in trace_records(trace, rules) {
        let line = serde_json::to_string(&record).expect("trace records serialize");
        writeln!(out, "{line}").expect("writing to a String");
    }
    out
}

pub fn parse_json_lines(text: &str) -> Result<Vec<TraceRecord>, FormatError> {
    text.lines().filter(|l| !l.trim().is_empty()).map(|l| serde_json::from_str(l).map_err(FormatError::from)).collect()
}

fn csv_string(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w).expect("CSV into memory");
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("CSV is UTF-8")
}

/// `step,rule,scalene,isosceles,earth`; step 0 is the initial state with an
/// empty rule column.
pub fn budgets_csv(trace: &Trace) -> String {
    csv_string(|w| {
        w.write_record(["step", "rule", "scalene", "isosceles", "earth"])?;
        let b = trace.initial.budgets();
        w.write_record([
            "0".into(),
            String::new(),
            b.scalene.to_string(),
            b.isosceles.to_string(),
            b.earth.to_string(),
        ])?;
        for (i, s) in trace.steps.iter().enumerate() {
            let b = &s.budgets;
            w.write_record([
                (i + 1).to_string(),
                s.rule.to_string(),
                b.scalene.to_string(),
                b.isosceles.to_string(),
                b.earth.to_string(),
            ])?;
        }
        Ok(())
    })
}

/// `fire,air,water,faces` rows.
pub fn decompositions_csv(faces: &Rational, rows: &[[Rational; 3]]) -> String {
    csv_string(|w| {
        w.write_record(["fire", "air", "water", "faces"])?;
        for [a, b, c] in rows {
            w.write_record([a.to_string(), b.to_string(), c.to_string(), faces.to_string()])?;
        }
        Ok(())
    })
}
