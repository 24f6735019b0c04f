//! The matroid file format `{"n": .., "bases": [[..], ..]}` and the
//! named-family strings `uniform:r,n`, `boolean:n`, `pg:d,q`.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::matroid::{pg_point_count, Matroid};
use crate::{Error, Result};

/// Ground-set cap used when `CHOWLAB_MAX_N` is unset.
pub const DEFAULT_MAX_N: usize = 18;

pub const MAX_N_VAR: &str = "CHOWLAB_MAX_N";

/// `CHOWLAB_MAX_N`, or [`DEFAULT_MAX_N`] when unset or unparsable.
pub fn max_n_from_env() -> usize {
    std::env::var(MAX_N_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatroidFile {
    n: usize,
    bases: Vec<Vec<usize>>,
}

/// Canonical JSON: bases ascending, basis list lexicographic.
pub fn to_json(m: &Matroid) -> String {
    let file = MatroidFile { n: m.n(), bases: m.canonical_bases() };
    serde_json::to_string(&file).expect("plain data serializes")
}

pub fn from_json_str(s: &str) -> Result<Matroid> {
    from_json_str_capped(s, max_n_from_env())
}

pub fn from_json_str_capped(s: &str, max_n: usize) -> Result<Matroid> {
    let file: MatroidFile = serde_json::from_str(s).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if file.n > max_n {
        return Err(Error::TooManyElements { n: file.n, max: max_n });
    }
    Matroid::from_bases(file.n, &file.bases)
}

pub fn read_json_file(path: &Path, max_n: usize) -> Result<Matroid> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameters(format!("cannot read {}: {e}", path.display())))?;
    from_json_str_capped(&text, max_n)
}

/// A matroid source on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidSpec {
    Uniform { r: usize, n: usize },
    Boolean { n: usize },
    Pg { d: usize, q: u64 },
    File(PathBuf),
}

fn parse_error(column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line: 1, column, message: message.into() }
}

/// Parses `k` comma-separated naturals starting at byte `offset` of the spec.
fn parse_args(args: &str, offset: usize, k: usize, family: &str) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(k);
    let mut column = offset + 1;
    for part in args.split(',') {
        if out.len() == k {
            return Err(parse_error(column - 1, format!("{family} takes {k} argument(s)")));
        }
        let value = part
            .trim()
            .parse::<u64>()
            .map_err(|_| parse_error(column, format!("expected a natural number, found {part:?}")))?;
        out.push(value);
        column += part.len() + 1;
    }
    if out.len() != k {
        return Err(parse_error(column - 1, format!("{family} takes {k} argument(s)")));
    }
    Ok(out)
}

fn to_usize(v: u64, column: usize) -> Result<usize> {
    usize::try_from(v).map_err(|_| parse_error(column, format!("{v} is too large")))
}

impl FromStr for MatroidSpec {
    type Err = Error;

    /// Strings without a known `family:` prefix are file paths.
    fn from_str(s: &str) -> Result<Self> {
        let Some((family, args)) = s.split_once(':') else {
            return Ok(MatroidSpec::File(PathBuf::from(s)));
        };
        let offset = family.len() + 1;
        match family {
            "uniform" => {
                let v = parse_args(args, offset, 2, family)?;
                Ok(MatroidSpec::Uniform { r: to_usize(v[0], offset + 1)?, n: to_usize(v[1], offset + 1)? })
            }
            "boolean" => {
                let v = parse_args(args, offset, 1, family)?;
                Ok(MatroidSpec::Boolean { n: to_usize(v[0], offset + 1)? })
            }
            "pg" => {
                let v = parse_args(args, offset, 2, family)?;
                Ok(MatroidSpec::Pg { d: to_usize(v[0], offset + 1)?, q: v[1] })
            }
            _ if Path::new(s).exists() => Ok(MatroidSpec::File(PathBuf::from(s))),
            _ => Err(parse_error(1, format!("unknown family {family:?}; expected uniform, boolean or pg"))),
        }
    }
}

impl fmt::Display for MatroidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatroidSpec::Uniform { r, n } => write!(f, "uniform:{r},{n}"),
            MatroidSpec::Boolean { n } => write!(f, "boolean:{n}"),
            MatroidSpec::Pg { d, q } => write!(f, "pg:{d},{q}"),
            MatroidSpec::File(p) => write!(f, "{}", p.display()),
        }
    }
}

impl MatroidSpec {
    /// Builds the matroid, refusing ground sets larger than `max_n`.
    pub fn load(&self, max_n: usize) -> Result<Matroid> {
        let too_many = |n: usize| Error::TooManyElements { n, max: max_n };
        match *self {
            MatroidSpec::Uniform { r, n } => {
                if n > max_n {
                    return Err(too_many(n));
                }
                Matroid::uniform(r, n)
            }
            MatroidSpec::Boolean { n } => {
                if n > max_n {
                    return Err(too_many(n));
                }
                Matroid::boolean(n)
            }
            MatroidSpec::Pg { d, q } => {
                if d == 0 || d > 63 || !(2..=16).contains(&q) {
                    return Matroid::projective_geometry(d.min(63), q);
                }
                let n = pg_point_count(d, q);
                if n > max_n as u128 {
                    return Err(too_many(usize::try_from(n).unwrap_or(usize::MAX)));
                }
                Matroid::projective_geometry(d, q)
            }
            MatroidSpec::File(ref path) => read_json_file(path, max_n),
        }
    }
}
