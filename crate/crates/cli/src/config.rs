//! Experiment configuration: defaults, a flat `key = value` file format with
//! sections named after the library modules, and flag overrides on top.
//!
//! Precedence: command-line flags > config file > defaults. Unknown keys and
//! sections are errors, not warnings; a misspelled knob must not silently
//! fall back to a default.

use std::path::{Path, PathBuf};

use mml_core::error::{Error, Result};
use mml_core::kernels::ContourConfig;
use mml_core::moments::QuadratureConfig;
use mml_core::zeta::{EvalConfig, Method};

/// Largest integration endpoint accepted without --override-guardrail.
pub const T_GUARDRAIL: f64 = 1.0e4;
/// Largest mollifier length accepted without --override-guardrail.
pub const LENGTH_GUARDRAIL: f64 = 1.0e6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Window {
    FromZero,
    Dyadic,
}

impl Window {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "from_zero" => Ok(Window::FromZero),
            "dyadic" => Ok(Window::Dyadic),
            other => Err(Error::Config(format!(
                "window must be from_zero or dyadic, got '{other}'"
            ))),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Window::FromZero => "from_zero",
            Window::Dyadic => "dyadic",
        }
    }

    /// Concrete endpoints for a window size T: [0, T] or [T, 2T].
    pub fn span(self, t: f64) -> (f64, f64) {
        match self {
            Window::FromZero => (0.0, t),
            Window::Dyadic => (t, 2.0 * t),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Config(format!(
                "format must be csv or json, got '{other}'"
            ))),
        }
    }
}

/// Everything a run needs. List fields stay None until the file or a flag
/// sets them; each command fills in its own defaults so that, say, zero
/// ordinates default differently for jt-check and gsupport.
#[derive(Clone, Debug)]
pub struct LabConfig {
    pub theta_list: Option<Vec<f64>>,
    /// Window sizes T.
    pub t_list: Option<Vec<f64>>,
    pub window: Window,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    /// Reserved for sweeps that sample; the shipped commands run fixed grids.
    pub seed: u64,
    /// Mollifier lengths x.
    pub x_list: Option<Vec<f64>>,
    /// Kernel ordinates t (not window sizes).
    pub ordinate_list: Option<Vec<f64>>,
    /// Kernel arguments u for the support report.
    pub u_list: Option<Vec<f64>>,
    /// Zeros to locate.
    pub count: usize,
    pub beta0: f64,
    /// None picks the first critical-line zero.
    pub gamma0: Option<f64>,
    pub override_guardrail: bool,
    pub quadrature: QuadratureConfig,
    pub contour: ContourConfig,
    pub zeta: EvalConfig,
}

impl Default for LabConfig {
    fn default() -> Self {
        Self {
            theta_list: None,
            t_list: None,
            window: Window::FromZero,
            format: Format::Csv,
            out: None,
            cache_dir: None,
            seed: 1,
            x_list: None,
            ordinate_list: None,
            u_list: None,
            count: 3,
            beta0: 0.5,
            gamma0: None,
            override_guardrail: false,
            quadrature: QuadratureConfig::default(),
            contour: ContourConfig::default(),
            zeta: EvalConfig::default(),
        }
    }
}

impl LabConfig {
    pub fn validate(&self) -> Result<()> {
        self.quadrature.validate()?;
        self.contour.validate()?;
        self.zeta.validate()?;
        if !(self.beta0 >= 0.5 && self.beta0 < 1.0) {
            return Err(Error::Config(format!(
                "beta0 must lie in [  0.5, 1 ), got {}",
                self.beta0
            )));
        }
        if let Some(g) = self.gamma0 {
            if !(g > 0.0) || !g.is_finite() {
                return Err(Error::Config(format!("gamma0 must be positive, got {g}")));
            }
        }
        Ok(())
    }

    /// T <= 1e4 unless overridden.
    pub fn check_endpoint(&self, t: f64) -> Result<()> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::Config(format!("window size must be positive, got {t}")));
        }
        if t > T_GUARDRAIL && !self.override_guardrail {
            return Err(Error::Config(format!(
                "integration endpoint {t} exceeds the desk-scale guardrail {T_GUARDRAIL}; \
                 pass --override-guardrail to proceed"
            )));
        }
        Ok(())
    }

    /// Mollifier length <= 1e6 unless overridden.
    pub fn check_length(&self, x: f64) -> Result<()> {
        if !(x > 0.0) || !x.is_finite() {
            return Err(Error::Config(format!("mollifier length must be positive, got {x}")));
        }
        if x > LENGTH_GUARDRAIL && !self.override_guardrail {
            return Err(Error::Config(format!(
                "mollifier length {x:.3e} exceeds the desk-scale guardrail {LENGTH_GUARDRAIL:.0e}; \
                 pass --override-guardrail to proceed"
            )));
        }
        Ok(())
    }
}

fn parse_f64(key: &str, value: &str) -> Result<f64> {
    value
        .parse::<f64>()
        .map_err(|_| Error::Config(format!("{key}: '{value}' is not a number")))
}

fn parse_usize(key: &str, value: &str) -> Result<usize> {
    value
        .parse::<usize>()
        .map_err(|_| Error::Config(format!("{key}: '{value}' is not a non-negative integer")))
}

/// Comma-separated floats; blanks around commas are fine.
pub fn parse_list(key: &str, value: &str) -> Result<Vec<f64>> {
    let items: Vec<f64> = value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_f64(key, s))
        .collect::<Result<_>>()?;
    if items.is_empty() {
        return Err(Error::Config(format!("{key}: empty list")));
    }
    if items.iter().any(|v| !v.is_finite()) {
        return Err(Error::Config(format!("{key}: entries must be finite")));
    }
    Ok(items)
}

fn set_key(cfg: &mut LabConfig, section: &str, key: &str, value: &str) -> Result<()> {
    match (section, key) {
        ("labcli", "theta_list") => cfg.theta_list = Some(parse_list(key, value)?),
        ("labcli", "T_list") => cfg.t_list = Some(parse_list(key, value)?),
        ("labcli", "window") => cfg.window = Window::parse(value)?,
        ("labcli", "format") => cfg.format = Format::parse(value)?,
        ("labcli", "output") => cfg.out = Some(PathBuf::from(value)),
        ("labcli", "cache_dir") => cfg.cache_dir = Some(PathBuf::from(value)),
        ("labcli", "seed") => {
            cfg.seed = value
                .parse::<u64>()
                .map_err(|_| Error::Config(format!("seed: '{value}' is not an integer")))?
        }
        ("labcli", "x_list") => cfg.x_list = Some(parse_list(key, value)?),
        ("labcli", "ordinate_list") => cfg.ordinate_list = Some(parse_list(key, value)?),
        ("labcli", "u_list") => cfg.u_list = Some(parse_list(key, value)?),
        ("labcli", "count") => cfg.count = parse_usize(key, value)?,
        ("labcli", "beta0") => cfg.beta0 = parse_f64(key, value)?,
        ("labcli", "gamma0") => cfg.gamma0 = Some(parse_f64(key, value)?),
        ("moments", "nodes_per_period") => {
            cfg.quadrature.nodes_per_period = parse_usize(key, value)?
        }
        ("moments", "panel_nodes") => cfg.quadrature.panel_nodes = parse_usize(key, value)?,
        ("moments", "rel_tol") => cfg.quadrature.rel_tol = parse_f64(key, value)?,
        ("moments", "max_panels") => cfg.quadrature.max_panels = parse_usize(key, value)?,
        ("kernels", "sigma") => cfg.contour.sigma = parse_f64(key, value)?,
        ("kernels", "height_y") => cfg.contour.height_y = parse_f64(key, value)?,
        ("kernels", "spacing") => cfg.contour.spacing = parse_f64(key, value)?,
        ("kernels", "tail_tol") => cfg.contour.tail_tol = parse_f64(key, value)?,
        ("zeta", "method") => {
            cfg.zeta.method = match value {
                "auto" => Method::Auto,
                "em" => Method::EulerMaclaurin,
                "rs" => Method::RiemannSiegel,
                other => {
                    return Err(Error::Config(format!(
                        "method must be auto, em or rs, got '{other}'"
                    )))
                }
            }
        }
        ("zeta", "em_terms") => cfg.zeta.em_terms = parse_usize(key, value)?,
        ("zeta", "em_bernoulli_order") => {
            cfg.zeta.em_bernoulli_order = parse_usize(key, value)?
        }
        ("zeta", "rs_corrections") => cfg.zeta.rs_corrections = parse_usize(key, value)?,
        _ => {
            return Err(Error::Config(format!(
                "unknown key '{key}' in section [{section}]"
            )))
        }
    }
    Ok(())
}

/// Apply a config file over the current values. Format: optional `[section]`
/// headers (labcli, moments, kernels, zeta; labcli until the first header),
/// `key = value` lines, `#` comments, blank lines ignored.
pub fn apply_file(cfg: &mut LabConfig, path: &Path) -> Result<()> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut section = "labcli".to_string();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |msg: String| Error::Config(format!("{}:{}: {msg}", path.display(), idx + 1));
        if let Some(inner) = line.strip_prefix('[') {
            let name = inner
                .strip_suffix(']')
                .ok_or_else(|| at("unterminated section header".into()))?
                .trim();
            if !matches!(name, "labcli" | "moments" | "kernels" | "zeta") {
                return Err(at(format!("unknown section [{name}]")));
            }
            section = name.to_string();
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| at(format!("expected 'key = value', got '{line}'")))?;
        set_key(cfg, &section, key.trim(), value.trim())
            .map_err(|e| at(e.to_string()))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_cfg(text: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        f
    }

    #[test]
    fn file_sets_values_across_sections() {
        let f = write_cfg(
            "theta_list = 0.25, 0.5\nwindow = dyadic\n\
             [moments]\nrel_tol = 1e-5  # tighter later\n\
             [kernels]\nspacing = 0.1\n\
             [zeta]\nmethod = em\nrs_corrections = 4\n",
        );
        let mut cfg = LabConfig::default();
        apply_file(&mut cfg, f.path()).unwrap();
        assert_eq!(cfg.theta_list.as_deref(), Some(&[0.25, 0.5][..]));
        assert_eq!(cfg.window, Window::Dyadic);
        assert_eq!(cfg.quadrature.rel_tol, 1e-5);
        assert_eq!(cfg.contour.spacing, 0.1);
        assert_eq!(cfg.zeta.method, Method::EulerMaclaurin);
        assert_eq!(cfg.zeta.rs_corrections, 4);
        cfg.validate().unwrap();
    }

    #[test]
    fn unknown_key_and_section_are_errors() {
        let f = write_cfg("not_a_knob = 3\n");
        assert!(apply_file(&mut LabConfig::default(), f.path()).is_err());
        let f = write_cfg("[turbo]\nx = 1\n");
        assert!(apply_file(&mut LabConfig::default(), f.path()).is_err());
        let f = write_cfg("theta_list 0.3\n");
        assert!(apply_file(&mut LabConfig::default(), f.path()).is_err());
    }

    #[test]
    fn window_spans() {
        assert_eq!(Window::FromZero.span(200.0), (0.0, 200.0));
        assert_eq!(Window::Dyadic.span(100.0), (100.0, 200.0));
        assert!(Window::parse("sideways").is_err());
    }

    #[test]
    fn guardrails_bite_unless_overridden() {
        let cfg = LabConfig::default();
        assert!(cfg.check_endpoint(9000.0).is_ok());
        assert!(cfg.check_endpoint(20_000.0).is_err());
        assert!(cfg.check_length(2.0e6).is_err());
        let over = LabConfig {
            override_guardrail: true,
            ..LabConfig::default()
        };
        assert!(over.check_endpoint(20_000.0).is_ok());
        assert!(over.check_length(2.0e6).is_ok());
        assert!(over.check_endpoint(-3.0).is_err());
    }

    #[test]
    fn list_parsing_rejects_junk() {
        assert_eq!(parse_list("k", "1, 2.5,3").unwrap(), vec![1.0, 2.5, 3.0]);
        assert!(parse_list("k", "").is_err());
        assert!(parse_list("k", "1, soup").is_err());
        assert!(parse_list("k", "inf").is_err());
    }
}
