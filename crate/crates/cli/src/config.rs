//! Run configuration: JSON config file, CLI flag overrides and the
//! deterministic config digest.

use anyhow::{bail, Context, Result};
use floorsum_core::rat::{parse_rational, rat_i64, rat_pow, Rational};
use floorsum_core::registry::{ParamValue, Policy};
use num_traits::Signed;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::PathBuf;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OutputFormat {
    JsonLines,
    Csv,
    Human,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "json-lines" => Ok(OutputFormat::JsonLines),
            "csv" => Ok(OutputFormat::Csv),
            "human" => Ok(OutputFormat::Human),
            other => bail!("unsupported format {other:?} (expected json-lines, csv or human)"),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            OutputFormat::JsonLines => "json-lines",
            OutputFormat::Csv => "csv",
            OutputFormat::Human => "human",
        }
    }
}

/// Values for one overridden parameter.
pub type GridOverride = BTreeMap<String, Vec<ParamValue>>;

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub ids: Vec<String>,
    /// Per-id overrides from the config file plus global CLI overrides.
    pub grids: BTreeMap<String, GridOverride>,
    pub global_grid: GridOverride,
    pub precision: u32,
    pub tolerance: Rational,
    /// Original tolerance spelling, kept for the digest.
    pub tolerance_repr: String,
    pub max_terms: u64,
    pub workers: usize,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        let policy = Policy::default();
        RunConfig {
            ids: vec!["all".into()],
            grids: BTreeMap::new(),
            global_grid: BTreeMap::new(),
            precision: default_precision(),
            tolerance: policy.tolerance,
            tolerance_repr: "1e-30".into(),
            max_terms: policy.max_terms,
            workers: 1,
            output: None,
            format: OutputFormat::JsonLines,
        }
    }
}

/// FLOORSUM_PRECISION overrides the built-in default.
pub fn default_precision() -> u32 {
    std::env::var("FLOORSUM_PRECISION")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(256)
}

impl RunConfig {
    pub fn policy(&self) -> Result<Policy> {
        if self.precision < 64 {
            bail!("precision must be at least 64 bits");
        }
        if !self.tolerance.is_positive() {
            bail!("tolerance must be positive");
        }
        Ok(Policy {
            precision: self.precision,
            tolerance: self.tolerance.clone(),
            max_terms: self.max_terms,
        })
    }

    /// Canonical rendering that the digest is computed over; identical
    /// configurations produce identical digests.
    pub fn canonical_string(&self) -> String {
        let mut s = String::new();
        s.push_str("ids=");
        s.push_str(&self.ids.join(","));
        for (id, over) in &self.grids {
            for (key, vals) in over {
                s.push_str(&format!(
                    ";grid:{id}:{key}={}",
                    vals.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
                ));
            }
        }
        for (key, vals) in &self.global_grid {
            s.push_str(&format!(
                ";grid:*:{key}={}",
                vals.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            ));
        }
        s.push_str(&format!(
            ";precision={};tolerance={};max_terms={};format={}",
            self.precision,
            self.tolerance_repr,
            self.max_terms,
            self.format.as_str()
        ));
        s
    }

    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.canonical_string().as_bytes());
        hex_string(&hasher.finalize())
    }
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Parse a tolerance like "1e-30", "2.5e-12" or "1/1000" into a rational.
pub fn parse_tolerance(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((mant, exp)) = s.split_once(['e', 'E']) {
        let m = parse_rational(mant).with_context(|| format!("bad tolerance mantissa {mant:?}"))?;
        let e: i64 = exp.parse().with_context(|| format!("bad tolerance exponent {exp:?}"))?;
        return Ok(m * rat_pow(&rat_i64(10), e));
    }
    parse_rational(s).with_context(|| format!("cannot parse tolerance {s:?}"))
}

/// Parse "lo..hi" (inclusive integers) or "v1,v2,..." (integers or rationals).
pub fn parse_grid_values(s: &str) -> Result<Vec<ParamValue>> {
    let s = s.trim();
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: i64 = lo.trim().parse().context("bad grid range start")?;
        let hi: i64 = hi.trim().parse().context("bad grid range end")?;
        if hi < lo {
            bail!("empty grid range {lo}..{hi}");
        }
        if (hi - lo) as u64 > 100_000 {
            bail!("grid range {lo}..{hi} too large");
        }
        return Ok((lo..=hi).map(ParamValue::Int).collect());
    }
    s.split(',')
        .map(|tok| ParamValue::parse(tok).map_err(anyhow::Error::from))
        .collect()
}

/// Parse "key=spec" into a named override.
pub fn parse_grid_flag(s: &str) -> Result<(String, Vec<ParamValue>)> {
    let (key, spec) = s
        .split_once('=')
        .context("grid override must look like key=lo..hi or key=v1,v2")?;
    Ok((key.trim().to_string(), parse_grid_values(spec)?))
}

/// Load a JSON config file; only recognized keys are accepted.
pub fn load_config_file(path: &PathBuf) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read config file {}", path.display()))?;
    let doc: serde_json::Value =
        serde_json::from_str(&text).context("config file is not valid JSON")?;
    let obj = doc.as_object().context("config root must be an object")?;
    let mut cfg = RunConfig::default();
    for (key, value) in obj {
        match key.as_str() {
            "ids" => {
                let arr = value.as_array().context("ids must be an array")?;
                cfg.ids = arr
                    .iter()
                    .map(|v| {
                        v.as_str()
                            .map(str::to_string)
                            .context("ids entries must be strings")
                    })
                    .collect::<Result<_>>()?;
            }
            "grids" => {
                let map = value.as_object().context("grids must be an object")?;
                for (id, spec) in map {
                    let spec = spec.as_object().context("per-id grid must be an object")?;
                    let mut over = GridOverride::new();
                    for (pname, pvals) in spec {
                        let vals = match pvals {
                            serde_json::Value::String(s) => parse_grid_values(s)?,
                            serde_json::Value::Array(a) => a
                                .iter()
                                .map(|v| match v {
                                    serde_json::Value::String(s) => {
                                        ParamValue::parse(s).map_err(anyhow::Error::from)
                                    }
                                    serde_json::Value::Number(n) => n
                                        .as_i64()
                                        .map(ParamValue::Int)
                                        .context("non-integer numeric grid value"),
                                    _ => bail!("unsupported grid value"),
                                })
                                .collect::<Result<_>>()?,
                            serde_json::Value::Number(n) => {
                                vec![ParamValue::Int(n.as_i64().context("bad grid number")?)]
                            }
                            _ => bail!("unsupported grid spec for {id}.{pname}"),
                        };
                        over.insert(pname.clone(), vals);
                    }
                    cfg.grids.insert(id.clone(), over);
                }
            }
            "precision" => {
                cfg.precision = value.as_u64().context("precision must be an integer")? as u32;
            }
            "tolerance" => {
                let s = value.as_str().context("tolerance must be a string")?;
                cfg.tolerance = parse_tolerance(s)?;
                cfg.tolerance_repr = s.to_string();
            }
            "max_terms" => {
                cfg.max_terms = value.as_u64().context("max_terms must be an integer")?;
            }
            "workers" => {
                cfg.workers = value.as_u64().context("workers must be an integer")? as usize;
            }
            "output" => {
                cfg.output = Some(PathBuf::from(
                    value.as_str().context("output must be a string")?,
                ));
            }
            "format" => {
                cfg.format = OutputFormat::parse(value.as_str().context("format must be a string")?)?;
            }
            other => bail!("unknown config key {other:?}"),
        }
    }
    Ok(cfg)
}
