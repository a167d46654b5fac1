//! Structured scenario reports, rendered as JSON or plain text.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use dehn_core::enumerator::ProfileSolution;
use dehn_core::geography::FillingInvariants;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictRecord {
    pub check: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionRecord {
    pub index: usize,
    pub rank: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl SolutionRecord {
    pub fn new(index: usize, s: &ProfileSolution) -> Self {
        SolutionRecord {
            index,
            rank: s.rank(),
            blocks: s.blocks().iter().map(|b| b.to_vec()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InvariantRecord {
    pub solution: usize,
    pub m: usize,
    pub chi: i64,
    pub b1: i64,
    pub planar_model_signature: i64,
    pub h1: String,
    pub h1_torsion: Vec<i128>,
}

impl InvariantRecord {
    pub fn new(solution: usize, inv: &FillingInvariants) -> Self {
        InvariantRecord {
            solution,
            m: inv.m,
            chi: inv.chi,
            b1: inv.b1,
            planar_model_signature: inv.sigma,
            h1: inv.h1_string(),
            h1_torsion: inv.h1_torsion.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub summary: BTreeMap<String, Value>,
    pub solutions: Vec<SolutionRecord>,
    pub invariants: Vec<InvariantRecord>,
    pub verdicts: Vec<VerdictRecord>,
    pub notes: Vec<String>,
    pub budget_exhausted: bool,
    pub timing: Timing,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            inputs: BTreeMap::new(),
            summary: BTreeMap::new(),
            solutions: Vec::new(),
            invariants: Vec::new(),
            verdicts: Vec::new(),
            notes: Vec::new(),
            budget_exhausted: false,
            timing: Timing { elapsed_ms: 0.0 },
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn summarize(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.summary.insert(key.to_string(), value.into());
        self
    }

    pub fn verdict(
        &mut self,
        check: impl Into<String>,
        verdict: Verdict,
        detail: impl Into<String>,
    ) -> &mut Self {
        self.verdicts.push(VerdictRecord {
            check: check.into(),
            verdict,
            detail: detail.into(),
        });
        self
    }

    pub fn check(
        &mut self,
        check: impl Into<String>,
        ok: bool,
        detail: impl Into<String>,
    ) -> &mut Self {
        self.verdict(check, Verdict::from_bool(ok), detail)
    }

    pub fn note(&mut self, note: impl Into<String>) -> &mut Self {
        self.notes.push(note.into());
        self
    }

    pub fn set_elapsed(&mut self, d: Duration) {
        self.timing.elapsed_ms = d.as_secs_f64() * 1e3;
    }

    /// Worst verdict: FAIL beats INCONCLUSIVE beats PASS; an exhausted
    /// budget counts as INCONCLUSIVE.
    pub fn overall(&self) -> Verdict {
        if self.verdicts.iter().any(|v| v.verdict == Verdict::Fail) {
            Verdict::Fail
        } else if self.budget_exhausted
            || self
                .verdicts
                .iter()
                .any(|v| v.verdict == Verdict::Inconclusive)
        {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.overall() {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => 2,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "== {}", self.command).unwrap();
        for (k, v) in &self.inputs {
            writeln!(out, "input {k}: {}", plain(v)).unwrap();
        }
        for (k, v) in &self.summary {
            writeln!(out, "{k}: {}", plain(v)).unwrap();
        }
        for s in &self.solutions {
            let blocks: Vec<String> = s
                .blocks
                .iter()
                .map(|b| {
                    format!(
                        "{{{}}}",
                        b.iter()
                            .map(|h| h.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    )
                })
                .collect();
            write!(out, "solution {}: {{{}}}", s.index, blocks.join(", ")).unwrap();
            if let Some(inv) = self.invariants.iter().find(|i| i.solution == s.index) {
                write!(
                    out,
                    "  m={} chi={} b1={} sigma(planar model)={} H1={}",
                    inv.m, inv.chi, inv.b1, inv.planar_model_signature, inv.h1
                )
                .unwrap();
            }
            out.push('\n');
        }
        for n in &self.notes {
            writeln!(out, "note: {n}").unwrap();
        }
        if self.budget_exhausted {
            writeln!(out, "search budget exhausted: results are partial").unwrap();
        }
        for v in &self.verdicts {
            writeln!(out, "[{}] {}: {}", v.verdict.label(), v.check, v.detail).unwrap();
        }
        writeln!(out, "overall: {}", self.overall().label()).unwrap();
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Recounts `M_i` and `M_ij` from block lists without using the core
/// profile type; used to re-validate solutions echoed in reports.
pub fn recount(rank: usize, blocks: &[Vec<usize>]) -> (Vec<i64>, Vec<Vec<i64>>) {
    let mut singles = vec![0i64; rank];
    let mut joint = vec![vec![0i64; rank]; rank];
    for b in blocks {
        for &i in b {
            singles[i - 1] += 1;
            for &j in b {
                if i != j {
                    joint[i - 1][j - 1] += 1;
                }
            }
        }
    }
    (singles, joint)
}
