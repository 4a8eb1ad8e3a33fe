//! JSON documents read and written by the command-line tool.
//!
//! A scalar is a 4-array of components; each component is a rational string
//! such as `"-2/3"` or a bare integer. Containers carry a `"ring"` tag, `"H"`
//! for Hamilton and `"S"` for Segre quaternions.

use std::fmt::Display;
use std::str::FromStr;

use num_complex::Complex;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hamilton::Hamilton;
use crate::matrix::Mat;
use crate::scalar::{Kappa, Quaternion, Real};
use crate::segre::{Segre, SegreConj};
use crate::toeplitz::ToeplitzGen;

/// One component, kept as text until the target type is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comp(pub String);

impl Serialize for Comp {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Comp {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Comp;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a rational string or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Comp, E> {
                Ok(Comp(v.trim().to_string()))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Comp, E> {
                Ok(Comp(v.to_string()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Comp, E> {
                Ok(Comp(v.to_string()))
            }
        }
        d.deserialize_any(V)
    }
}

pub type QuatJson = [Comp; 4];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RingTag {
    H,
    S,
}

impl std::fmt::Display for RingTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RingTag::H => "H",
            RingTag::S => "S",
        })
    }
}

fn expect_ring(found: RingTag, expected: RingTag) -> Result<()> {
    if found == expected {
        Ok(())
    } else {
        Err(Error::RingMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub ring: RingTag,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<QuatJson>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjModeJson {
    Raw,
    Kappa,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToeplitzJson {
    pub ring: RingTag,
    pub n: usize,
    pub p0: QuatJson,
    pub col: Vec<QuatJson>,
    pub psi: Vec<QuatJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conj_mode: Option<ConjModeJson>,
    /// Which κ a `"kappa"` conj_mode refers to; optional, see [`segre_conj`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<u8>,
}

/// A file holding either a dense matrix or Toeplitz generators.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixDoc {
    Toeplitz(ToeplitzJson),
    Dense(MatrixJson),
}

impl MatrixDoc {
    pub fn ring(&self) -> RingTag {
        match self {
            MatrixDoc::Toeplitz(t) => t.ring,
            MatrixDoc::Dense(m) => m.ring,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            MatrixDoc::Toeplitz(t) => t.n,
            MatrixDoc::Dense(m) => m.rows.max(m.cols),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairJson {
    #[serde(rename = "T")]
    pub t: ToeplitzJson,
    #[serde(rename = "U")]
    pub u: ToeplitzJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadJson {
    #[serde(rename = "T")]
    pub t: ToeplitzJson,
    #[serde(rename = "U")]
    pub u: ToeplitzJson,
    #[serde(rename = "V")]
    pub v: ToeplitzJson,
    #[serde(rename = "W")]
    pub w: ToeplitzJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CMatJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<[Comp; 2]>,
}

pub fn parse_comp<R: Real + FromStr>(c: &Comp) -> Result<R> {
    c.0.parse::<R>()
        .map_err(|_| Error::Parse(format!("bad component {:?}", c.0)))
}

pub fn quat_from_json<Q>(j: &QuatJson) -> Result<Q>
where
    Q: Quaternion,
    Q::Real: FromStr,
{
    Ok(Q::from_components([
        parse_comp(&j[0])?,
        parse_comp(&j[1])?,
        parse_comp(&j[2])?,
        parse_comp(&j[3])?,
    ]))
}

pub fn quat_to_json<Q: Quaternion>(q: &Q) -> QuatJson {
    q.components().map(|c| Comp(c.to_string()))
}

pub fn matrix_from_json<Q>(m: &MatrixJson, ring: RingTag) -> Result<Mat<Q>>
where
    Q: Quaternion,
    Q::Real: FromStr,
{
    expect_ring(m.ring, ring)?;
    if m.entries.len() != m.rows || m.entries.iter().any(|r| r.len() != m.cols) {
        return Err(Error::Parse(format!(
            "entries do not match the declared {}x{} shape",
            m.rows, m.cols
        )));
    }
    let rows = m
        .entries
        .iter()
        .map(|r| r.iter().map(quat_from_json).collect::<Result<Vec<Q>>>())
        .collect::<Result<Vec<_>>>()?;
    if m.rows == 0 {
        return Ok(Mat::zeros(0, m.cols));
    }
    Mat::from_rows(rows)
}

pub fn matrix_to_json<Q: Quaternion>(m: &Mat<Q>, ring: RingTag) -> MatrixJson {
    MatrixJson {
        ring,
        rows: m.rows(),
        cols: m.cols(),
        entries: (0..m.rows())
            .map(|i| m.row(i).iter().map(quat_to_json).collect())
            .collect(),
    }
}

fn generators<Q>(t: &ToeplitzJson) -> Result<(Q, Vec<Q>, Vec<Q>)>
where
    Q: Quaternion,
    Q::Real: FromStr,
{
    if t.n == 0 || t.col.len() != t.n || t.psi.len() != t.n {
        return Err(Error::Parse(format!(
            "Toeplitz object with n = {} has col/psi lengths {}/{}",
            t.n,
            t.col.len(),
            t.psi.len()
        )));
    }
    let p0 = quat_from_json(&t.p0)?;
    let col = t.col.iter().map(quat_from_json).collect::<Result<_>>()?;
    let psi = t.psi.iter().map(quat_from_json).collect::<Result<_>>()?;
    Ok((p0, col, psi))
}

pub fn hamilton_toeplitz_from_json<R>(t: &ToeplitzJson) -> Result<ToeplitzGen<Hamilton<R>>>
where
    R: Real + FromStr,
{
    expect_ring(t.ring, RingTag::H)?;
    let (p0, col, psi) = generators(t)?;
    ToeplitzGen::new(p0, col, psi, ())
}

/// The involution a Segre Toeplitz object uses for its first row.
///
/// `"raw"` is the identity. `"kappa"` (also the default) is the κ-conjugate
/// with κ taken from the object's own `"kappa"` field, else `fallback`, else 1.
pub fn segre_conj(t: &ToeplitzJson, fallback: Option<Kappa>) -> Result<SegreConj> {
    match t.conj_mode.unwrap_or(ConjModeJson::Kappa) {
        ConjModeJson::Raw => Ok(SegreConj::Raw),
        ConjModeJson::Kappa => {
            let k = match t.kappa {
                Some(k) => Kappa::try_from(k)?,
                None => fallback.unwrap_or(Kappa::One),
            };
            Ok(SegreConj::Kappa(k))
        }
    }
}

pub fn segre_toeplitz_from_json<R>(t: &ToeplitzJson, fallback: Option<Kappa>) -> Result<ToeplitzGen<Segre<R>>>
where
    R: Real + FromStr,
{
    expect_ring(t.ring, RingTag::S)?;
    let conj = segre_conj(t, fallback)?;
    let (p0, col, psi) = generators(t)?;
    ToeplitzGen::new(p0, col, psi, conj)
}

pub fn hamilton_toeplitz_to_json<R: Real>(g: &ToeplitzGen<Hamilton<R>>) -> ToeplitzJson {
    ToeplitzJson {
        ring: RingTag::H,
        n: g.n(),
        p0: quat_to_json(g.p0()),
        col: g.col().iter().map(quat_to_json).collect(),
        psi: g.psi().iter().map(quat_to_json).collect(),
        conj_mode: None,
        kappa: None,
    }
}

pub fn segre_toeplitz_to_json<R: Real>(g: &ToeplitzGen<Segre<R>>) -> ToeplitzJson {
    let (conj_mode, kappa) = match g.conj() {
        SegreConj::Raw => (ConjModeJson::Raw, None),
        SegreConj::Kappa(k) => (ConjModeJson::Kappa, Some(k.index())),
    };
    ToeplitzJson {
        ring: RingTag::S,
        n: g.n(),
        p0: quat_to_json(g.p0()),
        col: g.col().iter().map(quat_to_json).collect(),
        psi: g.psi().iter().map(quat_to_json).collect(),
        conj_mode: Some(conj_mode),
        kappa,
    }
}

/// Dense Hamilton matrix from either document kind.
pub fn hamilton_dense<R: Real + FromStr>(doc: &MatrixDoc) -> Result<Mat<Hamilton<R>>> {
    match doc {
        MatrixDoc::Dense(m) => matrix_from_json(m, RingTag::H),
        MatrixDoc::Toeplitz(t) => Ok(hamilton_toeplitz_from_json(t)?.dense()),
    }
}

pub fn cmat_to_json<R: Real + Display>(m: &Mat<Complex<R>>) -> CMatJson {
    CMatJson {
        rows: m.rows(),
        cols: m.cols(),
        entries: m
            .entries()
            .iter()
            .map(|c| [Comp(c.re.to_string()), Comp(c.im.to_string())])
            .collect(),
    }
}

pub fn cmat_from_json<R: Real + FromStr>(c: &CMatJson) -> Result<Mat<Complex<R>>> {
    let data = c
        .entries
        .iter()
        .map(|[re, im]| Ok(Complex::new(parse_comp(re)?, parse_comp(im)?)))
        .collect::<Result<Vec<_>>>()?;
    Mat::new(c.rows, c.cols, data)
}

pub fn from_str<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_line<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}
