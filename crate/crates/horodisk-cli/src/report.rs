//! Check records and the versioned verification report.
//!
//! Reports carry no timestamp and sort their records by name, so the same
//! configuration always produces the same bytes. JSON objects are emitted
//! with sorted keys; CSV holds one flat row per record under a commented
//! header that documents the columns.

use serde::Serialize;

use crate::config::OutputFormat;

/// Version of the report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// One verified identity instance.
///
/// `pass` holds exactly when `residual <= tolerance`. Checks against a
/// measured floor (a value that must stay large) encode the floor as
/// `residual = floor - measured` with zero tolerance, so the same rule
/// applies.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub suite: String,
    pub name: String,
    pub anchor: String,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(
        suite: &str,
        name: impl Into<String>,
        anchor: &str,
        lhs: f64,
        rhs: f64,
        residual: f64,
        tolerance: f64,
    ) -> Self {
        // JSON cannot carry non-finite numbers; a non-finite residual is a
        // failure and is pinned to the largest finite value.
        let residual = if residual.is_finite() {
            residual
        } else {
            f64::MAX
        };
        let clamp = |x: f64| if x.is_finite() { x } else { f64::MAX };
        Self {
            suite: suite.to_string(),
            name: name.into(),
            anchor: anchor.to_string(),
            lhs: clamp(lhs),
            rhs: clamp(rhs),
            residual,
            tolerance,
            pass: residual <= tolerance,
        }
    }
}

/// Grid sizes and seed in force for the run.
#[derive(Debug, Clone, Serialize)]
pub struct Environment {
    pub seed: u64,
    pub grid_beta: usize,
    pub grid_tau: usize,
    pub grid_lambda: usize,
}

/// Normalization constants the checks were evaluated with. Suites whose
/// identities never touch the spectral norm constant run with `kappa = 1`.
#[derive(Debug, Clone, Serialize)]
pub struct Calibration {
    pub c_n: f64,
    pub c_a: f64,
    pub kappa: f64,
}

/// Full machine-readable outcome of one command.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: String,
    pub environment: Environment,
    pub calibration: Calibration,
    pub checks: Vec<CheckRecord>,
    pub passed: bool,
}

impl VerificationReport {
    /// Builds the report, sorting records and deriving the overall flag.
    pub fn assemble(
        suite: &str,
        environment: Environment,
        calibration: Calibration,
        mut checks: Vec<CheckRecord>,
    ) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.suite.cmp(&b.suite)));
        let passed = checks.iter().all(|c| c.pass);
        Self {
            schema_version: SCHEMA_VERSION,
            suite: suite.to_string(),
            environment,
            calibration,
            checks,
            passed,
        }
    }

    /// Canonical JSON: objects with sorted keys, trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report holds only finite numbers");
        let mut text = serde_json::to_string_pretty(&value).expect("value serializes");
        text.push('\n');
        text
    }

    /// Flat CSV: one row per record, columns documented in the header.
    pub fn to_csv(&self) -> String {
        let env = &self.environment;
        let cal = &self.calibration;
        let mut text = format!(
            "# horodisk verification report schema_version={}\n\
             # suite={} seed={} grid_beta={} grid_tau={} grid_lambda={}\n\
             # c_n={} c_a={} kappa={}\n\
             suite,check,anchor,lhs,rhs,residual,tolerance,pass\n",
            self.schema_version,
            self.suite,
            env.seed,
            env.grid_beta,
            env.grid_tau,
            env.grid_lambda,
            cal.c_n,
            cal.c_a,
            cal.kappa,
        );
        for c in &self.checks {
            text.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                c.suite, c.name, c.anchor, c.lhs, c.rhs, c.residual, c.tolerance, c.pass
            ));
        }
        text
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Csv => self.to_csv(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        VerificationReport::assemble(
            "demo",
            Environment {
                seed: 17,
                grid_beta: 32,
                grid_tau: 512,
                grid_lambda: 512,
            },
            Calibration {
                c_n: 0.636,
                c_a: 1.128,
                kappa: 1.0,
            },
            vec![
                CheckRecord::new("demo", "b-check", "anchor-two", 1.0, 1.0, 0.0, 1e-9),
                CheckRecord::new("demo", "a-check", "anchor-one", 2.0, 2.5, 0.5, 1e-3),
            ],
        )
    }

    #[test]
    fn records_sort_by_name_and_drive_the_overall_flag() {
        let report = sample();
        assert_eq!(report.checks[0].name, "a-check");
        assert!(!report.checks[0].pass);
        assert!(report.checks[1].pass);
        assert!(!report.passed);
    }

    #[test]
    fn json_keys_come_out_sorted() {
        let json = sample().to_json();
        let calibration = json.find("\"calibration\"").unwrap();
        let checks = json.find("\"checks\"").unwrap();
        let environment = json.find("\"environment\"").unwrap();
        let passed = json.find("\"passed\"").unwrap();
        assert!(calibration < checks && checks < environment && environment < passed);
        assert!(json.ends_with('\n'));
    }

    #[test]
    fn pass_rule_is_residual_at_most_tolerance() {
        let edge = CheckRecord::new("demo", "edge", "anchor", 0.0, 0.0, 1e-9, 1e-9);
        assert!(edge.pass);
        let nan = CheckRecord::new("demo", "nan", "anchor", 0.0, 0.0, f64::NAN, 1e-9);
        assert!(!nan.pass);
        assert!(nan.residual.is_finite());
        let floor = CheckRecord::new("demo", "floor", "anchor", 2.0, 0.1, 0.1 - 2.0, 0.0);
        assert!(floor.pass);
    }

    #[test]
    fn csv_is_flat_with_a_documented_header() {
        let csv = sample().to_csv();
        let mut lines = csv.lines();
        assert!(lines.next().unwrap().starts_with("# horodisk"));
        assert!(lines.next().unwrap().contains("suite=demo"));
        assert!(lines.next().unwrap().contains("kappa="));
        assert_eq!(
            lines.next().unwrap(),
            "suite,check,anchor,lhs,rhs,residual,tolerance,pass"
        );
        assert_eq!(lines.count(), 2);
    }
}
