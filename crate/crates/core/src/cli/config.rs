use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::hilbert::InitialStateKind;
use crate::walk::ShiftKind;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Experiment {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Table1,
    Fig6,
    Custom,
}

impl Experiment {
    pub const NAMED: [Experiment; 7] = [
        Experiment::Fig1,
        Experiment::Fig2,
        Experiment::Fig3,
        Experiment::Fig4,
        Experiment::Fig5,
        Experiment::Table1,
        Experiment::Fig6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Experiment::Fig1 => "fig1",
            Experiment::Fig2 => "fig2",
            Experiment::Fig3 => "fig3",
            Experiment::Fig4 => "fig4",
            Experiment::Fig5 => "fig5",
            Experiment::Table1 => "table1",
            Experiment::Fig6 => "fig6",
            Experiment::Custom => "custom",
        }
    }
}

impl FromStr for Experiment {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let lower = s.to_ascii_lowercase();
        Experiment::NAMED
            .iter()
            .chain(std::iter::once(&Experiment::Custom))
            .find(|e| e.name() == lower)
            .copied()
            .ok_or_else(|| {
                format!("unknown experiment `{s}` (expected fig1..fig6, table1 or custom)")
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

/// Payload of a custom sweep cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Observable {
    #[default]
    Distribution,
    Entropy,
    Norm,
}

impl FromStr for Observable {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "distribution" => Ok(Observable::Distribution),
            "entropy" => Ok(Observable::Entropy),
            "norm" => Ok(Observable::Norm),
            other => Err(format!(
                "unknown observable `{other}` (expected distribution, entropy or norm)"
            )),
        }
    }
}

/// Parameters a sweep axis may range over.
pub const AXIS_NAMES: [&str; 9] = [
    "alpha", "alpha1", "alpha2", "lambda", "tau", "inv_tau", "v", "steps", "T",
];

#[derive(Debug, Clone, PartialEq)]
pub struct SweepAxis {
    pub name: String,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl SweepAxis {
    pub fn values(&self) -> Vec<f64> {
        crate::sweep::linspace(self.start, self.stop, self.count)
    }
}

impl FromStr for SweepAxis {
    type Err = String;

    /// `name:start:stop:count`
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(format!("axis `{s}` must look like name:start:stop:count"));
        }
        let name = parts[0];
        if !AXIS_NAMES.contains(&name) {
            return Err(format!(
                "unknown axis `{name}` (expected one of {})",
                AXIS_NAMES.join(", ")
            ));
        }
        let num = |x: &str| {
            x.parse::<f64>()
                .map_err(|_| format!("axis `{name}`: `{x}` is not a number"))
        };
        let count = parts[3]
            .parse::<usize>()
            .map_err(|_| format!("axis `{name}`: count `{}` is not a positive integer", parts[3]))?;
        if count == 0 {
            return Err(format!("axis `{name}`: count must be at least 1"));
        }
        Ok(SweepAxis {
            name: name.to_string(),
            start: num(parts[1])?,
            stop: num(parts[2])?,
            count,
        })
    }
}

/// Keys accepted in config files; flags use the same names with `-` for `_`.
pub const CONFIG_KEYS: [&str; 17] = [
    "experiment",
    "steps",
    "alpha",
    "alpha1",
    "alpha2",
    "v",
    "lambda",
    "lambdas",
    "tau",
    "taus",
    "tau_prime",
    "shift",
    "initial",
    "observable",
    "axis",
    "out",
    "format",
];

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub experiment: Experiment,
    /// `None` selects the experiment's default.
    pub steps: Option<usize>,
    pub alpha: Option<f64>,
    pub alpha1: Option<f64>,
    pub alpha2: Option<f64>,
    pub v: f64,
    pub lambda: Option<f64>,
    pub lambdas: Option<Vec<f64>>,
    pub tau: Option<f64>,
    pub taus: Option<Vec<f64>>,
    pub tau_prime: f64,
    pub shift: ShiftKind,
    pub initial: InitialStateKind,
    pub observable: Observable,
    pub axes: Vec<SweepAxis>,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn new(experiment: Experiment) -> Self {
        RunConfig {
            experiment,
            steps: None,
            alpha: None,
            alpha1: None,
            alpha2: None,
            v: 1.0,
            lambda: None,
            lambdas: None,
            tau: None,
            taus: None,
            tau_prime: crate::analysis::DEFAULT_TAU_PRIME,
            shift: ShiftKind::Generalized,
            initial: InitialStateKind::Localized,
            observable: Observable::Distribution,
            axes: Vec::new(),
            out: None,
            format: Format::Csv,
        }
    }

    /// Builds a config from `(key, value, line)` settings applied in order;
    /// later settings override earlier ones. `line` is reported in errors.
    pub fn from_settings<'a, I>(settings: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str, Option<usize>)>,
    {
        let mut experiment = None;
        let mut rest = Vec::new();
        for (key, value, line) in settings {
            if key == "experiment" {
                experiment = Some(
                    value
                        .parse::<Experiment>()
                        .map_err(|m| Error::config(line, key, m))?,
                );
            } else {
                rest.push((key, value, line));
            }
        }
        let experiment =
            experiment.ok_or_else(|| Error::config(None, "experiment", "no experiment given"))?;
        let mut cfg = RunConfig::new(experiment);
        for (key, value, line) in rest {
            cfg.set(key, value, line)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Applies one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str, line: Option<usize>) -> Result<()> {
        let err = |m: String| Error::config(line, key, m);
        let real = |v: &str| -> Result<f64> {
            let x = v
                .trim()
                .parse::<f64>()
                .map_err(|_| err(format!("`{v}` is not a number")))?;
            if x.is_finite() {
                Ok(x)
            } else {
                Err(err(format!("`{v}` is not finite")))
            }
        };
        let list = |v: &str| -> Result<Vec<f64>> {
            let xs = v
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(real)
                .collect::<Result<Vec<_>>>()?;
            if xs.is_empty() {
                Err(err("empty list".into()))
            } else {
                Ok(xs)
            }
        };
        match key {
            "experiment" => self.experiment = value.parse().map_err(err)?,
            "steps" => {
                let n = value
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| err(format!("`{value}` is not a non-negative integer")))?;
                self.steps = Some(n);
            }
            "alpha" => self.alpha = Some(real(value)?),
            "alpha1" => self.alpha1 = Some(real(value)?),
            "alpha2" => self.alpha2 = Some(real(value)?),
            "v" => self.v = real(value)?,
            "lambda" => self.lambda = Some(real(value)?),
            "lambdas" => self.lambdas = Some(list(value)?),
            "tau" => self.tau = Some(real(value)?),
            "taus" => self.taus = Some(list(value)?),
            "tau_prime" => self.tau_prime = real(value)?,
            "shift" => self.shift = value.trim().parse().map_err(err)?,
            "initial" => self.initial = value.trim().parse().map_err(err)?,
            "observable" => self.observable = value.trim().parse().map_err(err)?,
            "axis" => {
                let axis: SweepAxis = value.parse().map_err(err)?;
                match self.axes.iter_mut().find(|a| a.name == axis.name) {
                    Some(slot) => *slot = axis,
                    None => self.axes.push(axis),
                }
            }
            "out" => self.out = Some(PathBuf::from(value.trim())),
            "format" => self.format = value.trim().parse().map_err(err)?,
            other => {
                return Err(Error::config(
                    line,
                    other,
                    format!("unknown key (expected one of {})", CONFIG_KEYS.join(", ")),
                ))
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if self.steps == Some(0) {
            return Err(Error::config(None, "steps", "must be at least 1"));
        }
        if !(self.v > 0.0) {
            return Err(Error::config(None, "v", "tunneling energy must be positive"));
        }
        if !(self.tau_prime > 0.0) {
            return Err(Error::config(None, "tau_prime", "must be positive"));
        }
        if self.axes.len() > 2 {
            return Err(Error::config(None, "axis", "at most two sweep axes"));
        }
        for a in &self.axes {
            if a.count == 0 {
                return Err(Error::config(None, "axis", format!("axis `{}` needs count >= 1", a.name)));
            }
        }
        let allowed: &[&str] = match self.experiment {
            Experiment::Fig1 => &["alpha"],
            Experiment::Fig2 => &["inv_tau"],
            Experiment::Fig3 | Experiment::Fig4 => &["lambda"],
            Experiment::Fig6 => &["T", "tau"],
            Experiment::Fig5 | Experiment::Table1 => &[],
            Experiment::Custom => &["alpha", "alpha1", "alpha2", "lambda", "tau", "inv_tau", "v", "steps"],
        };
        for a in &self.axes {
            if !allowed.contains(&a.name.as_str()) {
                return Err(Error::config(
                    None,
                    "axis",
                    format!(
                        "axis `{}` is not adjustable for {} (allowed: {})",
                        a.name,
                        self.experiment.name(),
                        if allowed.is_empty() { "none".to_string() } else { allowed.join(", ") }
                    ),
                ));
            }
        }
        if self.experiment == Experiment::Custom {
            let names: Vec<&str> = self.axes.iter().map(|a| a.name.as_str()).collect();
            if names.len() == 2 && names[0] == names[1] {
                return Err(Error::config(None, "axis", "duplicate axis"));
            }
            if names.contains(&"tau") && names.contains(&"inv_tau") {
                return Err(Error::config(None, "axis", "tau and inv_tau cannot both be swept"));
            }
            for a in &self.axes {
                if a.name == "steps" && (a.start < 1.0 || a.stop < 1.0) {
                    return Err(Error::config(None, "axis", "steps axis must stay >= 1"));
                }
            }
        }
        Ok(())
    }

    /// Axis override for `name`, if any.
    pub fn axis(&self, name: &str) -> Option<&SweepAxis> {
        self.axes.iter().find(|a| a.name == name)
    }
}

/// Parses a flat `key = value` (or `key: value`) file. `#` starts a comment.
pub fn parse_config_text(text: &str) -> Result<Vec<(String, String, usize)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .or_else(|| line.split_once(':'))
            .ok_or_else(|| Error::config(Some(line_no), line, "expected `key = value`"))?;
        let key = key.trim().replace('-', "_");
        if !CONFIG_KEYS.contains(&key.as_str()) {
            return Err(Error::config(
                Some(line_no),
                key,
                format!("unknown key (expected one of {})", CONFIG_KEYS.join(", ")),
            ));
        }
        out.push((key, value.trim().to_string(), line_no));
    }
    Ok(out)
}

pub fn read_config_file(path: &Path) -> Result<Vec<(String, String, usize)>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config_text(&text)
}
