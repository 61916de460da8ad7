//! Line-oriented ring-spec files.
//!
//! ```text
//! # R = k[a,b,c]/(ac, bc, c^2)
//! [field]
//! 32003
//! [vars]
//! a b c
//! [ideal]
//! a*c
//! b*c
//! c^2
//! [sop main]
//! a
//! b
//! [caps]
//! homological 4
//! power 4
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Variables may be
//! separated by whitespace or commas. An empty `[ideal]` section gives the
//! polynomial ring.

use std::fmt;
use std::sync::Arc;

use paramres_core::{MonomialOrder, ParameterSequence, Polynomial, PolynomialRing, QuotientRing, DEFAULT_CHARACTERISTIC};
use thiserror::Error;

/// 1-based position in a spec file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SpecErrorKind {
    #[error("unknown section `[{0}]`")]
    UnknownSection(String),
    #[error("content outside any section")]
    NoSection,
    #[error("section `[{0}]` appears twice")]
    DuplicateSection(String),
    #[error("missing section `[{0}]`")]
    MissingSection(&'static str),
    #[error("invalid characteristic `{0}`")]
    Characteristic(String),
    #[error("invalid variable list: {0}")]
    Variables(String),
    #[error("{0}")]
    Syntax(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("`{0}` is not homogeneous")]
    Inhomogeneous(String),
    #[error("invalid parameter `{0}`: {1}")]
    Parameter(String, String),
    #[error("sequence `{0}` is empty")]
    EmptySequence(String),
    #[error("unknown cap `{0}`")]
    UnknownCap(String),
    #[error("invalid value for cap `{0}`")]
    CapValue(String),
    #[error("{0}")]
    Algebra(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{location}: {kind}")]
pub struct SpecError {
    pub location: Location,
    pub kind: SpecErrorKind,
}

impl SpecError {
    fn at(line: usize, column: usize, kind: SpecErrorKind) -> Self {
        SpecError {
            location: Location { line, column },
            kind,
        }
    }
}

/// Optional limits carried by a spec file.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Caps {
    pub homological: Option<usize>,
    pub internal: Option<i32>,
    pub power: Option<i64>,
}

/// A trimmed line fragment with the column where it starts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spanned {
    pub text: String,
    pub line: usize,
    pub column: usize,
}

/// The parsed but not yet validated contents of a spec file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpecFile {
    pub characteristic: u32,
    pub variables: Vec<String>,
    pub ideal: Vec<Spanned>,
    pub sops: Vec<(String, Vec<Spanned>)>,
    pub caps: Caps,
}

#[derive(PartialEq)]
enum Section {
    Field,
    Vars,
    Ideal,
    Sop(usize),
    Caps,
}

impl RingSpecFile {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let mut characteristic = None;
        let mut variables: Option<Vec<String>> = None;
        let mut ideal = Vec::new();
        let mut sops: Vec<(String, Vec<Spanned>)> = Vec::new();
        let mut caps = Caps::default();
        let mut seen: Vec<String> = Vec::new();
        let mut section = None;
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let body = raw.trim_end();
            let trimmed = body.trim_start();
            let column = body.len() - trimmed.len() + 1;
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix('[') {
                let Some(inner) = rest.strip_suffix(']') else {
                    return Err(SpecError::at(line, column, SpecErrorKind::Syntax("unterminated section header".into())));
                };
                let inner = inner.trim();
                if seen.iter().any(|s| s == inner) {
                    return Err(SpecError::at(line, column, SpecErrorKind::DuplicateSection(inner.into())));
                }
                seen.push(inner.to_string());
                let mut words = inner.split_whitespace();
                section = Some(match (words.next(), words.next(), words.next()) {
                    (Some("field"), None, _) => Section::Field,
                    (Some("vars"), None, _) => Section::Vars,
                    (Some("ideal"), None, _) => Section::Ideal,
                    (Some("caps"), None, _) => Section::Caps,
                    (Some("sop"), Some(name), None) => {
                        sops.push((name.to_string(), Vec::new()));
                        Section::Sop(sops.len() - 1)
                    }
                    _ => return Err(SpecError::at(line, column, SpecErrorKind::UnknownSection(inner.into()))),
                });
                continue;
            }
            let here = Spanned {
                text: trimmed.to_string(),
                line,
                column,
            };
            match &section {
                None => return Err(SpecError::at(line, column, SpecErrorKind::NoSection)),
                Some(Section::Field) => {
                    if characteristic.is_some() {
                        return Err(SpecError::at(line, column, SpecErrorKind::Syntax("extra line in [field]".into())));
                    }
                    let p = trimmed
                        .parse::<u32>()
                        .map_err(|_| SpecError::at(line, column, SpecErrorKind::Characteristic(trimmed.into())))?;
                    characteristic = Some(p);
                }
                Some(Section::Vars) => {
                    let vars = variables.get_or_insert_with(Vec::new);
                    for name in trimmed.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
                        let ok = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                        if !ok {
                            let col = column + trimmed.find(name).unwrap_or(0);
                            return Err(SpecError::at(line, col, SpecErrorKind::Variables(format!("bad name `{name}`"))));
                        }
                        if vars.iter().any(|v| v == name) {
                            let col = column + trimmed.rfind(name).unwrap_or(0);
                            return Err(SpecError::at(line, col, SpecErrorKind::Variables(format!("`{name}` repeated"))));
                        }
                        vars.push(name.to_string());
                    }
                }
                Some(Section::Ideal) => ideal.push(here),
                Some(Section::Sop(i)) => sops[*i].1.push(here),
                Some(Section::Caps) => {
                    let mut words = trimmed.split_whitespace();
                    let key = words.next().unwrap_or_default();
                    let value = words.next().unwrap_or_default();
                    let value_col = column + trimmed.find(value).filter(|_| !value.is_empty()).unwrap_or(0);
                    let bad = || SpecError::at(line, value_col, SpecErrorKind::CapValue(key.into()));
                    if words.next().is_some() {
                        return Err(bad());
                    }
                    match key {
                        "homological" => caps.homological = Some(value.parse().map_err(|_| bad())?),
                        "internal" => caps.internal = Some(value.parse().map_err(|_| bad())?),
                        "power" => {
                            let n: i64 = value.parse().map_err(|_| bad())?;
                            if n < 1 {
                                return Err(bad());
                            }
                            caps.power = Some(n);
                        }
                        _ => return Err(SpecError::at(line, column, SpecErrorKind::UnknownCap(key.into()))),
                    }
                }
            }
        }
        let end = text.lines().count().max(1);
        let variables = variables.ok_or(SpecError::at(end, 1, SpecErrorKind::MissingSection("vars")))?;
        if variables.is_empty() {
            return Err(SpecError::at(end, 1, SpecErrorKind::Variables("no variables".into())));
        }
        for (name, elems) in &sops {
            if elems.is_empty() {
                return Err(SpecError::at(end, 1, SpecErrorKind::EmptySequence(name.clone())));
            }
        }
        Ok(RingSpecFile {
            characteristic: characteristic.unwrap_or(DEFAULT_CHARACTERISTIC),
            variables,
            ideal,
            sops,
            caps,
        })
    }

    /// Builds the ring and all named sequences, checking homogeneity.
    pub fn load(&self) -> Result<LoadedRing, SpecError> {
        let names: Vec<&str> = self.variables.iter().map(String::as_str).collect();
        let ambient = PolynomialRing::new(self.characteristic, &names, MonomialOrder::DegRevLex)
            .map_err(|e| SpecError::at(1, 1, SpecErrorKind::Algebra(e.to_string())))?;
        let mut gens = Vec::new();
        for g in &self.ideal {
            let f = parse_at(&ambient, g)?;
            if !f.is_homogeneous() {
                return Err(SpecError::at(g.line, g.column, SpecErrorKind::Inhomogeneous(g.text.clone())));
            }
            gens.push(f);
        }
        let ring = QuotientRing::new(&ambient, &gens).map_err(|e| {
            let first = self.ideal.first().map_or((1, 1), |g| (g.line, g.column));
            SpecError::at(first.0, first.1, SpecErrorKind::Algebra(e.to_string()))
        })?;
        let mut sops = Vec::new();
        for (name, elems) in &self.sops {
            let mut polys = Vec::new();
            for e in elems {
                let f = parse_at(&ambient, e)?;
                if !f.is_homogeneous() {
                    return Err(SpecError::at(e.line, e.column, SpecErrorKind::Inhomogeneous(e.text.clone())));
                }
                polys.push(f);
            }
            let seq = ParameterSequence::new(&ring, polys).map_err(|err| {
                let e = &elems[0];
                SpecError::at(e.line, e.column, SpecErrorKind::Parameter(name.clone(), err.to_string()))
            })?;
            sops.push((name.clone(), seq));
        }
        Ok(LoadedRing {
            spec: self.clone(),
            ring,
            sops,
        })
    }
}

fn parse_at(ring: &Arc<PolynomialRing>, s: &Spanned) -> Result<Polynomial, SpecError> {
    ring.parse(&s.text).map_err(|e| match e {
        paramres_core::Error::Parse { position, message } => {
            SpecError::at(s.line, s.column + position, SpecErrorKind::Syntax(message))
        }
        paramres_core::Error::UnknownVariable(v) => {
            let col = s.column + s.text.find(v.as_str()).unwrap_or(0);
            SpecError::at(s.line, col, SpecErrorKind::UnknownVariable(v))
        }
        other => SpecError::at(s.line, s.column, SpecErrorKind::Algebra(other.to_string())),
    })
}

/// A validated ring together with its named parameter sequences.
#[derive(Clone, Debug)]
pub struct LoadedRing {
    pub spec: RingSpecFile,
    pub ring: Arc<QuotientRing>,
    pub sops: Vec<(String, ParameterSequence)>,
}

impl LoadedRing {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        RingSpecFile::parse(text)?.load()
    }

    /// The named sequence, or the first one when `name` is `None`.
    pub fn sop(&self, name: Option<&str>) -> Option<(&str, &ParameterSequence)> {
        match name {
            None => self.sops.first(),
            Some(n) => self.sops.iter().find(|(k, _)| k == n),
        }
        .map(|(k, x)| (k.as_str(), x))
    }
}
