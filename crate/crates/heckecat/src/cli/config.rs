use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::weyl::RootDatum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Tex,
}

/// Fully resolved run parameters: defaults, then the config file, then flags.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub datum_type: Option<String>,
    pub datum_file: Option<PathBuf>,
    pub p: u32,
    pub word: Option<String>,
    pub weight: Option<String>,
    pub bound: i64,
    pub max_len: usize,
    pub samples: usize,
    pub field_ext: u32,
    pub seed: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub finite: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            datum_type: None,
            datum_file: None,
            p: 5,
            word: None,
            weight: None,
            bound: 20,
            max_len: 3,
            samples: 10,
            field_ext: 2,
            seed: 0,
            format: Format::Json,
            out: None,
            finite: false,
        }
    }
}

pub const KEYS: &[&str] = &[
    "type",
    "datum-file",
    "p",
    "word",
    "weight",
    "bound",
    "max-len",
    "samples",
    "field-ext",
    "seed",
    "format",
    "out",
    "finite",
];

/// Parses `key = value` lines; `#` starts a comment.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let pos = format!("line {}", ln + 1);
        let Some((k, v)) = line.split_once('=') else {
            return Err(Error::Parse { pos, msg: "expected key = value".into() });
        };
        let k = k.trim().to_string();
        if !KEYS.contains(&k.as_str()) {
            return Err(Error::Parse { pos, msg: format!("unknown key {k:?}") });
        }
        out.insert(k, v.trim().to_string());
    }
    Ok(out)
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| Error::Parse { pos: format!("--{key}"), msg: format!("invalid value {v:?}") })
}

impl RunConfig {
    pub fn set(&mut self, key: &str, v: &str) -> Result<()> {
        match key {
            "type" => self.datum_type = Some(v.to_string()),
            "datum-file" => self.datum_file = Some(PathBuf::from(v)),
            "p" => self.p = parse_num(key, v)?,
            "word" => self.word = Some(v.to_string()),
            "weight" => self.weight = Some(v.to_string()),
            "bound" => self.bound = parse_num(key, v)?,
            "max-len" => self.max_len = parse_num(key, v)?,
            "samples" => self.samples = parse_num(key, v)?,
            "field-ext" => self.field_ext = parse_num(key, v)?,
            "seed" => self.seed = parse_num(key, v)?,
            "format" => {
                self.format = Format::from_str(v, true)
                    .map_err(|_| Error::Parse { pos: "--format".into(), msg: format!("unknown format {v:?}") })?
            }
            "out" => self.out = Some(PathBuf::from(v)),
            "finite" => self.finite = parse_num(key, v)?,
            _ => return Err(Error::Parse { pos: key.into(), msg: "unknown key".into() }),
        }
        Ok(())
    }

    /// Applies a config file, then `overrides` (flag values, in key order).
    pub fn resolve(file: Option<&Path>, overrides: &[(&str, Option<String>)]) -> Result<RunConfig> {
        let mut cfg = RunConfig::default();
        if let Some(path) = file {
            let text = std::fs::read_to_string(path)?;
            for (k, v) in parse_config(&text)? {
                cfg.set(&k, &v)?;
            }
        }
        let flag_type = overrides.iter().any(|(k, v)| *k == "type" && v.is_some());
        let flag_file = overrides.iter().any(|(k, v)| *k == "datum-file" && v.is_some());
        if flag_type && !flag_file {
            cfg.datum_file = None;
        }
        if flag_file && !flag_type {
            cfg.datum_type = None;
        }
        for (k, v) in overrides {
            if let Some(v) = v {
                cfg.set(k, v)?;
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |pos: &str, msg: String| Err(Error::Parse { pos: pos.into(), msg });
        if self.p == 2 || !is_prime(self.p) {
            return bad("--p", format!("p = {} must be an odd prime", self.p));
        }
        if self.bound <= 0 {
            return bad("--bound", "must be positive".into());
        }
        if self.samples == 0 {
            return bad("--samples", "must be positive".into());
        }
        if self.field_ext == 0 {
            return bad("--field-ext", "must be positive".into());
        }
        if self.datum_type.is_some() && self.datum_file.is_some() {
            return bad("--type", "--type and --datum-file are mutually exclusive".into());
        }
        Ok(())
    }

    pub fn datum(&self) -> Result<RootDatum> {
        if let Some(path) = &self.datum_file {
            let text = std::fs::read_to_string(path)?;
            let kept: Vec<&str> = text.lines().filter(|l| l.split('=').next().map(str::trim) != Some("p")).collect();
            return RootDatum::from_config(&format!("{}\np = {}\n", kept.join("\n"), self.p));
        }
        RootDatum::preset(self.datum_type.as_deref().unwrap_or("A1"), self.p)
    }
}

/// Comma-separated integers of length `rank`.
pub fn parse_weight(text: &str, rank: usize) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    let mut col = 1;
    for part in text.split(',') {
        let t = part.trim();
        let v = t.parse::<i64>().map_err(|_| Error::Parse {
            pos: format!("--weight column {col}"),
            msg: format!("expected an integer, found {t:?}"),
        })?;
        out.push(v);
        col += part.len() + 1;
    }
    if out.len() != rank {
        return Err(Error::Parse {
            pos: "--weight".into(),
            msg: format!("expected {rank} coordinates, found {}", out.len()),
        });
    }
    Ok(out)
}

/// Generator indices 0..=rank, either comma-separated or as a digit string.
pub fn parse_word(text: &str, rank: usize) -> Result<Vec<usize>> {
    let t = text.trim();
    if t.is_empty() || t == "e" {
        return Ok(vec![]);
    }
    let parts: Vec<&str> =
        if t.contains(',') { t.split(',').collect() } else { t.split("").filter(|s| !s.is_empty()).collect() };
    parts
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let s = s.trim().trim_start_matches('s');
            match s.parse::<usize>() {
                Ok(g) if g <= rank => Ok(g),
                _ => Err(Error::Parse {
                    pos: format!("--word letter {}", i + 1),
                    msg: format!("expected a generator index in 0..={rank}, found {s:?}"),
                }),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file_values() {
        let dir = std::env::temp_dir().join("heckecat-config-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.cfg");
        std::fs::write(&path, "# sample\np = 7\nbound = 30\ntype = A2\n").unwrap();
        let cfg = RunConfig::resolve(Some(&path), &[("p", Some("3".into())), ("bound", None)]).unwrap();
        assert_eq!((cfg.p, cfg.bound, cfg.datum_type.as_deref()), (3, 30, Some("A2")));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_config("p 5").is_err());
        assert!(parse_config("colour = red").is_err());
        assert!(RunConfig::resolve(None, &[("p", Some("4".into()))]).is_err());
        assert!(RunConfig::resolve(None, &[("p", Some("2".into()))]).is_err());
        assert!(parse_weight("1,x", 2).is_err());
        assert_eq!(parse_weight("1, -2", 2).unwrap(), vec![1, -2]);
        assert_eq!(parse_word("0101", 1).unwrap(), vec![0, 1, 0, 1]);
        assert_eq!(parse_word("s0,s1", 1).unwrap(), vec![0, 1]);
        assert!(parse_word("012", 1).is_err());
    }
}
