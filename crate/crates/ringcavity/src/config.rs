//! Flat `key = value` configuration files. Units are encoded in the key
//! names and converted to SI exactly once, here at the boundary — everything
//! past this module speaks SI only.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::params::PhysicalParams;
use crate::sweep::{Quantity, SweepAxis, SweepScale, SweepSpec};

/// The configuration shipped with the binary (the reference parameter set).
pub const DEFAULT_CONFIG: &str = include_str!("../configs/default.cfg");

/// Parameter values exactly as configured, in config-file units. Kept
/// alongside the derived SI [`PhysicalParams`] so that a manifest written
/// from these values and fed back as a config reproduces the run bit for
/// bit — no round trip through inverse unit conversions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfigValues {
    pub power_mw: f64,
    pub wavelength_nm: f64,
    pub mass_ng: f64,
    pub omega_m_rad_s: f64,
    pub kappa_rad_s: f64,
    pub gamma_m_rad_s: f64,
    pub gamma_a_rad_s: f64,
    pub g_a_rad_s: f64,
    pub theta_rad: f64,
    pub length_mm: f64,
    pub temperature_k: f64,
    pub squeeze_r: f64,
    pub squeeze_phi: f64,
    pub delta_over_omega_m: f64,
    pub delta_a_over_omega_m: f64,
}

impl ConfigValues {
    /// Shipped defaults; must stay in lockstep with `configs/default.cfg`
    /// (a test enforces the equality).
    pub fn shipped() -> Self {
        ConfigValues {
            power_mw: 35.0,
            wavelength_nm: 1064.0,
            mass_ng: 10.0,
            omega_m_rad_s: 62831853.071795866,
            kappa_rad_s: 31415926.535897933,
            gamma_m_rad_s: 628.3185307179587,
            gamma_a_rad_s: 31415926.535897933,
            g_a_rad_s: 37699111.84307752,
            theta_rad: 1.0471975511965976,
            length_mm: 1.0,
            temperature_k: 1e-6,
            squeeze_r: 0.2,
            squeeze_phi: 0.0,
            delta_over_omega_m: 1.0,
            delta_a_over_omega_m: -1.0,
        }
    }

    /// Key/value view in a fixed order, for manifests and reports.
    pub fn entries(&self) -> [(&'static str, f64); 15] {
        [
            ("power_mw", self.power_mw),
            ("wavelength_nm", self.wavelength_nm),
            ("mass_ng", self.mass_ng),
            ("omega_m_rad_s", self.omega_m_rad_s),
            ("kappa_rad_s", self.kappa_rad_s),
            ("gamma_m_rad_s", self.gamma_m_rad_s),
            ("gamma_a_rad_s", self.gamma_a_rad_s),
            ("g_a_rad_s", self.g_a_rad_s),
            ("theta_rad", self.theta_rad),
            ("length_mm", self.length_mm),
            ("temperature_k", self.temperature_k),
            ("squeeze_r", self.squeeze_r),
            ("squeeze_phi", self.squeeze_phi),
            ("delta_over_omega_m", self.delta_over_omega_m),
            ("delta_a_over_omega_m", self.delta_a_over_omega_m),
        ]
    }

    fn slot(&mut self, key: &str) -> Option<&mut f64> {
        Some(match key {
            "power_mw" => &mut self.power_mw,
            "wavelength_nm" => &mut self.wavelength_nm,
            "mass_ng" => &mut self.mass_ng,
            "omega_m_rad_s" => &mut self.omega_m_rad_s,
            "kappa_rad_s" => &mut self.kappa_rad_s,
            "gamma_m_rad_s" => &mut self.gamma_m_rad_s,
            "gamma_a_rad_s" => &mut self.gamma_a_rad_s,
            "g_a_rad_s" => &mut self.g_a_rad_s,
            "theta_rad" => &mut self.theta_rad,
            "length_mm" => &mut self.length_mm,
            "temperature_k" => &mut self.temperature_k,
            "squeeze_r" => &mut self.squeeze_r,
            "squeeze_phi" => &mut self.squeeze_phi,
            "delta_over_omega_m" => &mut self.delta_over_omega_m,
            "delta_a_over_omega_m" => &mut self.delta_a_over_omega_m,
            _ => return None,
        })
    }

    /// Convert to SI. Divisions by exact powers of ten keep round decimal
    /// inputs on their shortest-representation values.
    pub fn to_params(&self) -> PhysicalParams {
        PhysicalParams {
            pump_power: self.power_mw / 1e3,
            wavelength: self.wavelength_nm / 1e9,
            mass: self.mass_ng / 1e12,
            omega_m: self.omega_m_rad_s,
            kappa: self.kappa_rad_s,
            gamma_m: self.gamma_m_rad_s,
            gamma_a: self.gamma_a_rad_s,
            g_a: self.g_a_rad_s,
            theta: self.theta_rad,
            length: self.length_mm / 1e3,
            temperature: self.temperature_k,
            squeeze_r: self.squeeze_r,
            squeeze_phi: self.squeeze_phi,
            delta: self.delta_over_omega_m * self.omega_m_rad_s,
            delta_a: self.delta_a_over_omega_m * self.omega_m_rad_s,
        }
    }
}

/// A fully parsed and validated configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Values in config units, exactly as parsed (defaults filled in).
    pub raw: ConfigValues,
    /// The same parameters in SI, validated.
    pub params: PhysicalParams,
    /// Present iff any `sweep_*`/`normalize_axis` key appeared.
    pub sweep: Option<SweepSpec>,
}

const SWEEP_KEYS: [&str; 7] = [
    "sweep_axis",
    "sweep_min",
    "sweep_max",
    "sweep_count",
    "sweep_scale",
    "sweep_quantities",
    "normalize_axis",
];

/// Config key corresponding to an SI parameter-validation failure, so error
/// messages name what the user actually wrote.
fn config_key_for(param: &'static str) -> &'static str {
    match param {
        "pump_power" => "power_mw",
        "wavelength" => "wavelength_nm",
        "mass" => "mass_ng",
        "omega_m" => "omega_m_rad_s",
        "kappa" => "kappa_rad_s",
        "gamma_m" => "gamma_m_rad_s",
        "gamma_a" => "gamma_a_rad_s",
        "g_a" => "g_a_rad_s",
        "theta" => "theta_rad",
        "length" => "length_mm",
        "temperature" => "temperature_k",
        "delta" => "delta_over_omega_m",
        "delta_a" => "delta_a_over_omega_m",
        other => other, // squeeze_r, squeeze_phi are their own keys
    }
}

fn parse_f64(key: &str, value: &str) -> Result<f64> {
    value
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| Error::Config(format!("{key}: cannot parse \"{value}\" as a finite number")))
}

fn parse_usize(key: &str, value: &str) -> Result<usize> {
    value
        .parse::<usize>()
        .map_err(|_| Error::Config(format!("{key}: cannot parse \"{value}\" as a count")))
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value {
        "true" => Ok(true),
        "false" => Ok(false),
        _ => Err(Error::Config(format!(
            "{key}: expected true or false, got \"{value}\""
        ))),
    }
}

/// Parse configuration text. Unknown and duplicate keys are hard errors;
/// parameter keys not present fall back to the shipped defaults.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let mut pairs: BTreeMap<String, String> = BTreeMap::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line = raw_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Config(format!(
                "line {}: expected `key = value`, got \"{line}\"",
                idx + 1
            )));
        };
        let (key, value) = (key.trim().to_string(), value.trim().to_string());
        if value.is_empty() {
            return Err(Error::Config(format!("{key}: empty value")));
        }
        if pairs.insert(key.clone(), value).is_some() {
            return Err(Error::Config(format!("duplicate key {key}")));
        }
    }

    let mut raw = ConfigValues::shipped();
    let mut sweep_pairs: BTreeMap<&str, String> = BTreeMap::new();
    for (key, value) in &pairs {
        if let Some(slot) = raw.slot(key) {
            *slot = parse_f64(key, value)?;
        } else if let Some(name) = SWEEP_KEYS.iter().find(|k| *k == key) {
            sweep_pairs.insert(name, value.clone());
        } else {
            return Err(Error::Config(format!("unknown key {key}")));
        }
    }

    let params = raw.to_params();
    params.validate().map_err(|e| match e {
        Error::InvalidParameter { name, reason } => {
            Error::Config(format!("{}: {reason}", config_key_for(name)))
        }
        other => other,
    })?;

    let sweep = if sweep_pairs.is_empty() {
        None
    } else {
        Some(build_sweep(&sweep_pairs, params)?)
    };

    Ok(RunConfig { raw, params, sweep })
}

fn build_sweep(pairs: &BTreeMap<&str, String>, base: PhysicalParams) -> Result<SweepSpec> {
    let required = |key: &str| {
        pairs
            .get(key)
            .ok_or_else(|| Error::Config(format!("{key} is required when sweep keys are present")))
    };
    let axis = SweepAxis::parse(required("sweep_axis")?)?;
    let min = parse_f64("sweep_min", required("sweep_min")?)?;
    let max = parse_f64("sweep_max", required("sweep_max")?)?;
    let count = parse_usize("sweep_count", required("sweep_count")?)?;
    let scale = match pairs.get("sweep_scale").map(String::as_str) {
        None | Some("linear") => SweepScale::Linear,
        Some("logarithmic") => SweepScale::Logarithmic,
        Some(other) => {
            return Err(Error::Config(format!(
                "sweep_scale: expected linear or logarithmic, got \"{other}\""
            )))
        }
    };
    let quantities = match pairs.get("sweep_quantities") {
        None => Quantity::all_reported(),
        Some(list) => list
            .split(',')
            .map(|s| Quantity::parse(s.trim()))
            .collect::<Result<Vec<_>>>()?,
    };
    let normalize_axis = match pairs.get("normalize_axis") {
        None => false,
        Some(v) => parse_bool("normalize_axis", v)?,
    };
    let spec = SweepSpec {
        base,
        axis,
        min,
        max,
        count,
        scale,
        quantities,
        normalize_axis,
    };
    spec.validate()?;
    Ok(spec)
}

/// The shipped configuration, parsed.
pub fn default_config() -> Result<RunConfig> {
    parse_config(DEFAULT_CONFIG)
}
