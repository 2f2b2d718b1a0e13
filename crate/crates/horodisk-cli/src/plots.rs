//! Plot data emitters: small tabular views of the library's central
//! objects, written as JSON or CSV with the columns documented in the
//! header.

use clap::ValueEnum;
use horodisk::disk::{BoundaryPoint, DiskPoint, HorocycleParam};
use horodisk::disk::horocycle_params_to_circle;
use horodisk::numerics::LineGrid;
use horodisk::transforms::{
    harish_chandra_c, multiplier, plancherel_density, radon_row, spectral_transform, TestFunction,
    TransformGrids,
};
use serde_json::json;

use crate::config::{OutputFormat, RunConfig};
use crate::report::SCHEMA_VERSION;
use crate::suites::{base_normalization, SuiteError};

/// Which view to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotKind {
    /// Spectral density: meromorphic route, closed form and multiplier
    /// over a frequency sweep.
    CFunction,
    /// Euclidean circle parameters of the basic horocycle under a height
    /// sweep.
    HorocycleFamily,
    /// One boundary row of the horocycle transform of a seeded bump.
    RadonProfile,
    /// One boundary row of the frequency table of the reference bump.
    Spectrum,
}

impl PlotKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::CFunction => "c-function",
            Self::HorocycleFamily => "horocycle-family",
            Self::RadonProfile => "radon-profile",
            Self::Spectrum => "spectrum",
        }
    }
}

/// Column names and rows of one view.
pub struct PlotData {
    pub plot: &'static str,
    pub columns: &'static [&'static str],
    pub rows: Vec<Vec<f64>>,
}

impl PlotData {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let value = json!({
                    "schema_version": SCHEMA_VERSION,
                    "plot": self.plot,
                    "columns": self.columns,
                    "rows": self.rows,
                });
                let mut text =
                    serde_json::to_string_pretty(&value).expect("plot rows are finite");
                text.push('\n');
                text
            }
            OutputFormat::Csv => {
                let mut text = format!(
                    "# horodisk plot {} schema_version={}\n# columns: {}\n",
                    self.plot,
                    SCHEMA_VERSION,
                    self.columns.join(",")
                );
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
                    text.push_str(&cells.join(","));
                    text.push('\n');
                }
                text
            }
        }
    }
}

/// Frequency sweep over (0, 10]: both density routes agree to nine digits,
/// and the multiplier column is the square root of half the density.
fn c_function() -> PlotData {
    let n = 512;
    let rows = (0..n)
        .map(|k| {
            let lambda = 10.0 * (k + 1) as f64 / n as f64;
            let c = harish_chandra_c(lambda).expect("sweep avoids the pole at zero");
            vec![
                lambda,
                1.0 / c.norm_sqr(),
                plancherel_density(lambda),
                multiplier(lambda),
            ]
        })
        .collect();
    PlotData {
        plot: PlotKind::CFunction.name(),
        columns: &["lambda", "density_gamma", "density_closed", "multiplier"],
        rows,
    }
}

/// Height sweep of the basic horocycle at boundary angle zero: every circle
/// stays internally tangent to the unit circle, so the tangency defect
/// column is zero to rounding.
fn horocycle_family() -> Result<PlotData, SuiteError> {
    let b = BoundaryPoint::new(0.0);
    let origin = DiskPoint::origin();
    let mut rows = Vec::new();
    for k in 0..=16 {
        let tau = -2.0 + 4.0 * k as f64 / 16.0;
        let circle = horocycle_params_to_circle(&HorocycleParam::new(b, tau), &origin)
            .expect("interior circle for finite height");
        let tangency = (circle.center().norm() + circle.radius() - 1.0).abs();
        rows.push(vec![
            b.angle(),
            tau,
            circle.center().re,
            circle.center().im,
            circle.radius(),
            tangency,
        ]);
    }
    Ok(PlotData {
        plot: PlotKind::HorocycleFamily.name(),
        columns: &[
            "beta",
            "tau",
            "center_re",
            "center_im",
            "radius",
            "tangency_defect",
        ],
        rows,
    })
}

/// One row of the horocycle transform of the first seeded bump: finite
/// values decaying in both height directions.
fn radon_profile_rows(cfg: &RunConfig) -> Result<PlotData, SuiteError> {
    let norms = base_normalization(cfg)?;
    let f = TestFunction::seeded_family(cfg.seed, 1).remove(0);
    let tau = LineGrid::symmetric_staggered(8.0, cfg.resolved_tau())?;
    let values = radon_row(&f, 0.0, &tau, &norms);
    let rows = values
        .into_iter()
        .enumerate()
        .map(|(k, v)| vec![tau.node(k), v])
        .collect();
    Ok(PlotData {
        plot: PlotKind::RadonProfile.name(),
        columns: &["tau", "value"],
        rows,
    })
}

/// One boundary row of the frequency table of the reference bump; only a
/// few rows are computed since one is shown.
fn spectrum_rows(cfg: &RunConfig) -> Result<PlotData, SuiteError> {
    let norms = base_normalization(cfg)?;
    let grids = TransformGrids::with_counts(4, cfg.resolved_tau(), cfg.resolved_lambda())?;
    let table = spectral_transform(&TestFunction::reference_bump(), &grids, &norms)?;
    let lambda = grids.lambda();
    let rows = table
        .row(0)
        .iter()
        .enumerate()
        .map(|(k, v)| vec![lambda.node(k), v.re, v.im, v.norm()])
        .collect();
    Ok(PlotData {
        plot: PlotKind::Spectrum.name(),
        columns: &["lambda", "re", "im", "abs"],
        rows,
    })
}

pub fn emit(kind: PlotKind, cfg: &RunConfig) -> Result<PlotData, SuiteError> {
    match kind {
        PlotKind::CFunction => Ok(c_function()),
        PlotKind::HorocycleFamily => horocycle_family(),
        PlotKind::RadonProfile => radon_profile_rows(cfg),
        PlotKind::Spectrum => spectrum_rows(cfg),
    }
}
