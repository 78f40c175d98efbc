//! Output rendering: the human-readable point report, sweep CSV/JSON files,
//! and the reproduction manifest. All numbers are serialized with 17
//! significant digits, which round-trips 64-bit floats losslessly.

use crate::config::ConfigValues;
use crate::entanglement::clip_noise;
use crate::linalg::StabilityReport;
use crate::params::DerivedParams;
use crate::sweep::{SweepRow, SweepSpec};

/// 17-significant-digit serialization (1 leading + 16 fractional digits).
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Everything the point command reports for one parameter set.
#[derive(Debug, Clone)]
pub struct PointReport {
    pub derived: DerivedParams,
    pub stability: StabilityReport,
    /// (label, value) for the six mode pairs; `None` when unstable.
    pub pairs: Option<Vec<(String, f64)>>,
    /// (label, value) for the three distinct mode triples; `None` when unstable.
    pub triples: Option<Vec<(String, f64)>>,
    pub residual: Option<f64>,
    pub min_symplectic: Option<f64>,
}

impl PointReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let d = &self.derived;
        out.push_str("derived parameters:\n");
        let scalars = [
            ("omega_l (rad/s)", d.omega_l),
            ("omega_r (rad/s)", d.omega_r),
            ("e_l (1/s)", d.e_l),
            ("g0 (rad/s)", d.g0),
            ("cos^2(theta/2)", d.cos2),
            ("g (rad/s)", d.g),
            ("n_th", d.n_th),
            ("squeeze_n", d.squeeze_n),
        ];
        for (label, value) in scalars {
            out.push_str(&format!("  {label} = {}\n", format_f64(value)));
        }
        out.push_str(&format!(
            "  a_s = {} + {}i  (|a_s| = {})\n",
            format_f64(d.a_s.re),
            format_f64(d.a_s.im),
            format_f64(d.a_s.norm())
        ));
        out.push_str(&format!(
            "  squeeze_m = {} + {}i\n",
            format_f64(d.squeeze_m.re),
            format_f64(d.squeeze_m.im)
        ));
        out.push_str(&format!(
            "stability: {} (max eigenvalue real part = {})\n",
            if self.stability.stable { "stable" } else { "unstable" },
            format_f64(self.stability.max_real_part)
        ));
        if let Some(pairs) = &self.pairs {
            out.push_str("pairwise log-negativity:\n");
            for (label, value) in pairs {
                out.push_str(&format!("  {label} = {}\n", format_f64(clip_noise(*value))));
            }
        }
        if let Some(triples) = &self.triples {
            out.push_str("tripartite negativity:\n");
            for (label, value) in triples {
                out.push_str(&format!("  {label} = {}\n", format_f64(clip_noise(*value))));
            }
        }
        if let Some(residual) = self.residual {
            out.push_str(&format!("lyapunov residual = {}\n", format_f64(residual)));
        }
        if let Some(nu) = self.min_symplectic {
            out.push_str(&format!("min symplectic eigenvalue = {}\n", format_f64(nu)));
        }
        out
    }
}

/// Render sweep rows as CSV: header `axis,<labels...>,stable`, one row per
/// grid point, empty value cells on unstable rows.
pub fn sweep_csv(spec: &SweepSpec, rows: &[SweepRow]) -> String {
    let labels: Vec<String> = spec.quantities.iter().map(|q| q.label()).collect();
    let mut out = String::new();
    out.push_str("axis,");
    out.push_str(&labels.join(","));
    out.push_str(",stable\n");
    for row in rows {
        out.push_str(&format_f64(row.axis_value));
        match &row.values {
            Some(values) => {
                for v in values {
                    out.push(',');
                    out.push_str(&format_f64(*v));
                }
            }
            None => {
                for _ in &labels {
                    out.push(',');
                }
            }
        }
        out.push(',');
        out.push_str(if row.stable { "true" } else { "false" });
        out.push('\n');
    }
    out
}

fn json_string(s: &str) -> String {
    // keys and labels here are plain ASCII identifiers; quoting suffices
    format!("\"{s}\"")
}

/// Render sweep rows as JSON with the same content as the CSV.
pub fn sweep_json(spec: &SweepSpec, rows: &[SweepRow]) -> String {
    let labels: Vec<String> = spec
        .quantities
        .iter()
        .map(|q| json_string(&q.label()))
        .collect();
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!(
        "  \"axis\": {},\n",
        json_string(spec.axis.name())
    ));
    out.push_str(&format!("  \"labels\": [{}],\n", labels.join(", ")));
    out.push_str("  \"rows\": [\n");
    for (i, row) in rows.iter().enumerate() {
        let values = match &row.values {
            Some(values) => format!(
                "[{}]",
                values
                    .iter()
                    .map(|v| format_f64(*v))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            None => "null".to_string(),
        };
        out.push_str(&format!(
            "    {{\"axis_value\": {}, \"stable\": {}, \"values\": {}}}{}\n",
            format_f64(row.axis_value),
            row.stable,
            values,
            if i + 1 < rows.len() { "," } else { "" }
        ));
    }
    out.push_str("  ]\n}\n");
    out
}

/// Reproduction manifest: the fully resolved parameter set (config units,
/// exactly as they will be re-parsed), the grid definition, the crate
/// version, and the wall-clock duration. Everything except the duration is
/// deterministic across reruns.
pub fn manifest_json(raw: &ConfigValues, spec: &SweepSpec, duration_s: f64) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!(
        "  \"version\": {},\n",
        json_string(env!("CARGO_PKG_VERSION"))
    ));
    out.push_str(&format!(
        "  \"duration_s\": {},\n",
        format_f64(duration_s)
    ));
    out.push_str("  \"params\": {\n");
    let entries = raw.entries();
    for (i, (key, value)) in entries.iter().enumerate() {
        out.push_str(&format!(
            "    {}: {}{}\n",
            json_string(key),
            format_f64(*value),
            if i + 1 < entries.len() { "," } else { "" }
        ));
    }
    out.push_str("  },\n");
    out.push_str("  \"sweep\": {\n");
    out.push_str(&format!(
        "    \"axis\": {},\n",
        json_string(spec.axis.name())
    ));
    out.push_str(&format!("    \"min\": {},\n", format_f64(spec.min)));
    out.push_str(&format!("    \"max\": {},\n", format_f64(spec.max)));
    out.push_str(&format!("    \"count\": {},\n", spec.count));
    out.push_str(&format!(
        "    \"scale\": {},\n",
        json_string(match spec.scale {
            crate::sweep::SweepScale::Linear => "linear",
            crate::sweep::SweepScale::Logarithmic => "logarithmic",
        })
    ));
    out.push_str(&format!(
        "    \"normalize_axis\": {},\n",
        spec.normalize_axis
    ));
    out.push_str(&format!(
        "    \"quantities\": [{}]\n",
        spec.quantities
            .iter()
            .map(|q| json_string(&q.label()))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    out.push_str("  }\n}\n");
    out
}
