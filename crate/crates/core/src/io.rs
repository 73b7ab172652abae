//! Text encodings of symbol vectors and the JSON documents exchanged with the CLI.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::code::{AuxData, CodeFlag, EnsembleKind, LinearCode, Provenance};
use crate::error::{Error, Result};
use crate::field::{BaseField, FieldDescriptor};
use crate::linalg::Matrix;
use crate::local::TypeDistribution;
use crate::tape::TapeOrigin;

/// Base-`q` digits when `q <= 10`, otherwise space-separated decimals.
pub fn symbols_to_string(q: usize, v: &[u8]) -> String {
    if q <= 10 {
        v.iter().map(|&d| char::from(b'0' + d)).collect()
    } else {
        v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
    }
}

pub fn symbols_from_str(q: usize, s: &str) -> Result<Vec<u8>> {
    let out: Vec<u8> = if q <= 10 {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(format!("bad digit {c:?}")))
            })
            .collect::<Result<_>>()?
    } else {
        s.split_whitespace()
            .map(|t| t.parse::<u8>().map_err(|e| Error::Parse(format!("bad symbol {t:?}: {e}"))))
            .collect::<Result<_>>()?
    };
    if let Some(&bad) = out.iter().find(|&&d| d as usize >= q) {
        return Err(Error::Parse(format!("symbol {bad} out of range for q = {q}")));
    }
    Ok(out)
}

/// Version tag carried by every machine-readable document.
pub const FORMAT_VERSION: &str = "1";

/// Pretty JSON with a trailing newline; field order is fixed by the types,
/// so equal values always give identical bytes.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

pub fn from_json<T: DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// One row per line.
pub fn matrix_to_text(q: usize, m: &Matrix) -> String {
    (0..m.rows()).map(|r| symbols_to_string(q, m.row(r)) + "\n").collect()
}

/// Parses one row per line; blank lines and `#` comments are skipped.
pub fn matrix_from_text(q: usize, s: &str) -> Result<Matrix> {
    let rows: Vec<Vec<u8>> = s
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| symbols_from_str(q, l))
        .collect::<Result<_>>()?;
    if rows.is_empty() {
        return Err(Error::Parse("matrix has no rows".into()));
    }
    Matrix::from_rows(q, rows)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxDocument {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub f: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub g: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub h: Vec<String>,
}

/// Self-describing code file: parameters, provenance and generator rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDocument {
    pub format_version: String,
    pub ensemble: EnsembleKind,
    pub q: u64,
    pub n: usize,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tape: Option<String>,
    pub bits_consumed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nominal_bits: Option<u64>,
    /// Degree of the extension the construction worked in.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ext_degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_modulus: Option<String>,
    pub generator: Vec<String>,
    #[serde(default, skip_serializing_if = "AuxDocument::is_empty")]
    pub aux: AuxDocument,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<CodeFlag>,
}

impl AuxDocument {
    fn is_empty(&self) -> bool {
        self.f.is_empty() && self.g.is_empty() && self.h.is_empty()
    }
}

impl CodeDocument {
    pub fn from_code(code: &LinearCode) -> Self {
        let q = code.q();
        let p = code.provenance();
        let rows = |v: &[Vec<u8>]| v.iter().map(|r| symbols_to_string(q, r)).collect::<Vec<_>>();
        let (seed, tape) = match &p.tape {
            Some(TapeOrigin::Seed(s)) => (Some(s.clone()), None),
            Some(TapeOrigin::Bits(b)) => (None, Some(b.clone())),
            None => (None, None),
        };
        CodeDocument {
            format_version: FORMAT_VERSION.into(),
            ensemble: p.kind,
            q: q as u64,
            n: code.n(),
            k: code.k(),
            ell: p.ell,
            r: p.r,
            seed,
            tape,
            bits_consumed: p.bits_consumed,
            nominal_bits: p.nominal_bits,
            ext_degree: p.field.as_ref().map(|d| d.n),
            modulus: p.field.as_ref().map(|d| d.modulus.clone()),
            base_modulus: p.field.as_ref().and_then(|d| d.base_modulus.clone()),
            generator: rows(&code.generator().row_vecs()),
            aux: AuxDocument {
                f: rows(&p.aux.f),
                g: rows(&p.aux.g),
                h: rows(&p.aux.h),
            },
            flags: p.flags.clone(),
        }
    }

    pub fn to_code(&self) -> Result<LinearCode> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Parse(format!("unsupported format_version {:?}", self.format_version)));
        }
        let base = BaseField::get(self.q)?;
        let q = base.q();
        let rows = |v: &[String]| v.iter().map(|r| symbols_from_str(q, r)).collect::<Result<Vec<_>>>();
        let generator = Matrix::from_rows_with_cols(q, self.n, rows(&self.generator)?)?;
        if generator.rows() != self.k {
            return Err(Error::Parse(format!("k = {} but {} generator rows", self.k, generator.rows())));
        }
        let field = match (self.ext_degree, &self.modulus) {
            (Some(n), Some(modulus)) => Some(FieldDescriptor {
                q: self.q,
                p: base.characteristic() as u64,
                base_modulus: self.base_modulus.clone(),
                n,
                modulus: modulus.clone(),
            }),
            (None, None) => None,
            _ => return Err(Error::Parse("ext_degree and modulus must appear together".into())),
        };
        let tape = match (&self.seed, &self.tape) {
            (Some(s), None) => Some(TapeOrigin::Seed(s.clone())),
            (None, Some(b)) => Some(TapeOrigin::Bits(b.clone())),
            (None, None) => None,
            _ => return Err(Error::Parse("a code file records a seed or a tape, not both".into())),
        };
        let prov = Provenance {
            kind: self.ensemble,
            ell: self.ell,
            r: self.r,
            tape,
            bits_consumed: self.bits_consumed,
            nominal_bits: self.nominal_bits,
            field,
            aux: AuxData {
                f: rows(&self.aux.f)?,
                g: rows(&self.aux.g)?,
                h: rows(&self.aux.h)?,
            },
            flags: self.flags.clone(),
        };
        Ok(LinearCode::new(base, generator, prov))
    }
}

pub fn code_to_json(code: &LinearCode) -> String {
    to_json(&CodeDocument::from_code(code))
}

pub fn code_from_json(s: &str) -> Result<LinearCode> {
    from_json::<CodeDocument>(s)?.to_code()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauEntry {
    pub vector: String,
    pub num: u64,
    pub den: u64,
}

/// τ file: `{b, q, entries: [{vector, num, den}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauDocument {
    #[serde(default = "default_version")]
    pub format_version: String,
    pub b: usize,
    pub q: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub entries: Vec<TauEntry>,
}

fn default_version() -> String {
    FORMAT_VERSION.into()
}

impl TauDocument {
    pub fn from_tau(tau: &TypeDistribution) -> Self {
        let q = tau.q() as usize;
        TauDocument {
            format_version: FORMAT_VERSION.into(),
            b: tau.b(),
            q: tau.q(),
            n: tau.n_hint(),
            entries: tau
                .entries()
                .iter()
                .map(|(v, p)| TauEntry {
                    vector: symbols_to_string(q, v),
                    num: p.numer().to_u64().expect("small numerator"),
                    den: p.denom().to_u64().expect("small denominator"),
                })
                .collect(),
        }
    }

    pub fn to_tau(&self) -> Result<TypeDistribution> {
        let q = self.q as usize;
        let entries = self
            .entries
            .iter()
            .map(|e| {
                if e.den == 0 {
                    return Err(Error::Parse(format!("zero denominator at {:?}", e.vector)));
                }
                Ok((symbols_from_str(q, &e.vector)?, BigRational::new(BigInt::from(e.num), BigInt::from(e.den))))
            })
            .collect::<Result<Vec<_>>>()?;
        TypeDistribution::new(self.q, self.b, entries, self.n)
    }
}

/// A τ file holding one distribution or an array of them.
pub fn taus_from_json(s: &str) -> Result<Vec<TypeDistribution>> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum OneOrMany {
        One(TauDocument),
        Many(Vec<TauDocument>),
    }
    match from_json::<OneOrMany>(s)? {
        OneOrMany::One(d) => Ok(vec![d.to_tau()?]),
        OneOrMany::Many(ds) => ds.iter().map(TauDocument::to_tau).collect(),
    }
}
