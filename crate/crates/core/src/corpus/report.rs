//! Running the suite over a corpus and assembling the report document.

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::suite::{run_theorem_suite, CorpusInstance, Status, TheoremVerdict};
use crate::radicals::RadicalReport;
use crate::Limits;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceReport {
    pub name: String,
    pub provenance: String,
    pub elements: usize,
    pub blocks: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radicals: Option<RadicalReport>,
    pub verdicts: Vec<TheoremVerdict>,
}

impl InstanceReport {
    pub fn fails(&self) -> impl Iterator<Item = &TheoremVerdict> {
        self.verdicts.iter().filter(|v| v.status.is_fail())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub holds: usize,
    pub skipped: usize,
    pub fails: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub format_version: u32,
    pub seed: u64,
    pub generator: String,
    pub instances: Vec<InstanceReport>,
    pub summary: Summary,
}

/// Runs the suite on every instance in parallel; the output keeps input order.
pub fn verify_corpus(
    instances: &[CorpusInstance],
    limits: Limits,
    timings: bool,
) -> Vec<InstanceReport> {
    instances
        .par_iter()
        .map(|inst| {
            let outcome = run_theorem_suite(inst, limits, timings);
            InstanceReport {
                name: inst.anneid.name().to_string(),
                provenance: inst.provenance.clone(),
                elements: inst.anneid.len(),
                blocks: inst.anneid.block_count(),
                radicals: outcome.radicals,
                verdicts: outcome.verdicts,
            }
        })
        .collect()
}

impl Report {
    pub fn new(seed: u64, generator: impl Into<String>, instances: Vec<InstanceReport>) -> Self {
        let mut summary = Summary {
            instances: instances.len(),
            ..Summary::default()
        };
        for v in instances.iter().flat_map(|i| &i.verdicts) {
            match v.status {
                Status::Holds => summary.holds += 1,
                Status::Skipped { .. } => summary.skipped += 1,
                Status::Fails { .. } => summary.fails += 1,
            }
        }
        Report {
            format_version: FORMAT_VERSION,
            seed,
            generator: generator.into(),
            instances,
            summary,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fails > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per instance, the failing verdicts and a summary line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for inst in &self.instances {
            let count =
                |f: fn(&Status) -> bool| inst.verdicts.iter().filter(|v| f(&v.status)).count();
            out.push_str(&format!(
                "{} [{}]: {} holds, {} skipped, {} fails\n",
                inst.name,
                inst.provenance,
                count(|s| matches!(s, Status::Holds)),
                count(|s| matches!(s, Status::Skipped { .. })),
                count(Status::is_fail),
            ));
            for v in inst.fails() {
                if let Status::Fails { witness } = &v.status {
                    out.push_str(&format!("  FAIL {}: {}\n", v.theorem, witness.join(" ")));
                }
            }
        }
        let s = self.summary;
        out.push_str(&format!(
            "summary: {} instances, {} holds, {} skipped, {} fails\n",
            s.instances, s.holds, s.skipped, s.fails
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn summary_counts_and_order() {
        let insts = vec![
            CorpusInstance::new(catalog::z4(), "a"),
            CorpusInstance::new(catalog::triangular(), "b"),
        ];
        let report = Report::new(0, "test", verify_corpus(&insts, Limits::default(), false));
        assert_eq!(report.instances[0].name, "Z4");
        assert_eq!(report.instances[1].name, "T");
        let s = report.summary;
        assert_eq!(s.instances, 2);
        assert_eq!(
            s.holds + s.skipped + s.fails,
            2 * crate::corpus::suite::THEOREMS.len()
        );
        assert_eq!(s.fails, 0);
        assert!(report.render_text().ends_with("0 fails\n"));
        assert!(!report.to_json().contains("micros"));
    }

    #[test]
    fn empty_corpus() {
        let report = Report::new(0, "none", verify_corpus(&[], Limits::default(), false));
        assert_eq!(report.summary, Summary::default());
    }
}
