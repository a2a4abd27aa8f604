//! Settings file handling and resolution into the configs the library
//! consumes. The file is plain `key=value` lines; `#` starts a comment.
//! Precedence is command-line flag, then file, then built-in default.

use zeta_core::zeta_em::EmParams;
use zeta_core::{QuadratureConfig, ScanConfig};

/// Raw values read from a settings file; `None` means "not set".
#[derive(Debug, Default, Clone)]
pub struct FileSettings {
    pub quad_order: Option<usize>,
    pub quad_max_iters: Option<usize>,
    pub quad_cutoff: Option<f64>,
    pub quad_tol: Option<f64>,
    pub em_auto: Option<bool>,
    pub em_n: Option<usize>,
    pub em_m: Option<usize>,
    pub scan_step: Option<f64>,
    pub scan_refine_tol: Option<f64>,
}

/// Which Euler-Maclaurin parameter policy to use.
#[derive(Debug, Clone, Copy)]
pub enum EmChoice {
    Auto,
    Manual(EmParams),
}

/// Fully resolved settings after defaults, file, and flags are merged.
#[derive(Debug, Clone)]
pub struct Settings {
    pub quad: QuadratureConfig,
    pub em: EmChoice,
    pub scan_step: f64,
    pub scan_refine_tol: f64,
}

fn parse_as<T: std::str::FromStr>(key: &str, value: &str, kind: &str) -> Result<T, String> {
    value
        .parse()
        .map_err(|_| format!("config key {key}: expected {kind}, got '{value}'"))
}

fn parse_bool(key: &str, value: &str) -> Result<bool, String> {
    match value {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(format!("config key {key}: expected true or false, got '{other}'")),
    }
}

/// Parses the settings file text. Unknown keys and malformed lines are
/// errors so a typo cannot silently fall back to a default.
pub fn parse_file(text: &str) -> Result<FileSettings, String> {
    let mut out = FileSettings::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!("config line {}: expected key=value, got '{line}'", idx + 1));
        };
        let (key, value) = (key.trim(), value.trim());
        match key {
            "quadrature.order" => out.quad_order = Some(parse_as(key, value, "an integer")?),
            "quadrature.max_iters" => {
                out.quad_max_iters = Some(parse_as(key, value, "an integer")?)
            }
            "quadrature.cutoff" => out.quad_cutoff = Some(parse_as(key, value, "a number")?),
            "quadrature.tol" => out.quad_tol = Some(parse_as(key, value, "a number")?),
            "em.auto" => out.em_auto = Some(parse_bool(key, value)?),
            "em.n" => out.em_n = Some(parse_as(key, value, "an integer")?),
            "em.m" => out.em_m = Some(parse_as(key, value, "an integer")?),
            "scan.step" => out.scan_step = Some(parse_as(key, value, "a number")?),
            "scan.refine_tol" => out.scan_refine_tol = Some(parse_as(key, value, "a number")?),
            other => return Err(format!("unknown config key '{other}'")),
        }
    }
    Ok(out)
}

/// Merges the file over the defaults and validates the result. The `--tol`
/// flag is applied later by the subcommand, which knows whether it means the
/// quadrature tolerance or the scan refinement width.
pub fn resolve(file: &FileSettings) -> Result<Settings, String> {
    let defaults = QuadratureConfig::default();
    let quad = QuadratureConfig::new(
        file.quad_order.unwrap_or(defaults.order),
        file.quad_max_iters.unwrap_or(defaults.max_iters),
        file.quad_cutoff.unwrap_or(defaults.cutoff),
        file.quad_tol.unwrap_or(defaults.tol),
    )
    .map_err(|e| e.to_string())?;

    let em = match (file.em_auto, file.em_n, file.em_m) {
        (Some(true) | None, None, None) => EmChoice::Auto,
        (Some(true), _, _) => {
            return Err("em.n/em.m conflict with em.auto=true".into());
        }
        (Some(false) | None, Some(n), Some(m)) => {
            EmChoice::Manual(EmParams::new(n, m).map_err(|e| e.to_string())?)
        }
        (Some(false), _, _) | (None, _, _) => {
            return Err("manual Euler-Maclaurin settings need both em.n and em.m".into());
        }
    };

    let scan_defaults = ScanConfig::default();
    Ok(Settings {
        quad,
        em,
        scan_step: file.scan_step.unwrap_or(scan_defaults.step),
        scan_refine_tol: file.scan_refine_tol.unwrap_or(scan_defaults.refine_tol),
    })
}

impl Settings {
    /// Applies a `--tol` meant as the quadrature tolerance (eval, verify).
    pub fn with_quad_tol(mut self, tol: Option<f64>) -> Result<Self, String> {
        if let Some(t) = tol {
            self.quad = QuadratureConfig::new(self.quad.order, self.quad.max_iters, self.quad.cutoff, t)
                .map_err(|e| e.to_string())?;
        }
        Ok(self)
    }

    /// Applies a `--tol` meant as the bisection width (zeros, table).
    pub fn with_refine_tol(mut self, tol: Option<f64>) -> Self {
        if let Some(t) = tol {
            self.scan_refine_tol = t;
        }
        self
    }
}
