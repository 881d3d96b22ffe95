//! The JSON pattern document: exact rational coordinates, optional declared
//! angles, MV assignment, SAW graph and coloring.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coloring::ThreeColoring;
use crate::cone::{Mv, MvAssignment};
use crate::io::IoError;
use crate::pattern::{Crease, CreasePattern, PatternInput};
use crate::saw::{BoundaryStep, SawGraph, SawId};
use crate::{CreaseId, ExactPattern, Point, Rational, VertexId};

pub const FORMAT_VERSION: u32 = 1;

/// An exact rational written as `"p/q"`, an integer or a finite decimal.
#[derive(Clone, Debug, PartialEq)]
pub struct Exact(pub Rational);

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Ok(r) = Rational::from_str(s) {
        return Some(r);
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.')?;
    if int.is_empty() && frac.is_empty() || !(int.chars().chain(frac.chars())).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int}{frac}");
    let num = num_bigint::BigInt::from_str(&digits).ok()?;
    let den = num_bigint::BigInt::from(10u32).pow(frac.len() as u32);
    let r = Rational::new(num, den);
    Some(if neg { -r } else { r })
}

impl Serialize for Exact {
    fn serialize<Se: Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

struct ExactVisitor;

const NUMBER_ADVICE: &str = "numbers must be exact rational strings such as \"3/4\" or \"-2\", not JSON numbers";

impl Visitor<'_> for ExactVisitor {
    type Value = Exact;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an exact rational string such as \"3/4\"")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Exact, E> {
        parse_rational(v)
            .map(Exact)
            .ok_or_else(|| E::custom(format!("{v:?} is not a rational number")))
    }

    fn visit_f64<E: de::Error>(self, _: f64) -> Result<Exact, E> {
        Err(E::custom(NUMBER_ADVICE))
    }

    fn visit_i64<E: de::Error>(self, _: i64) -> Result<Exact, E> {
        Err(E::custom(NUMBER_ADVICE))
    }

    fn visit_u64<E: de::Error>(self, _: u64) -> Result<Exact, E> {
        Err(E::custom(NUMBER_ADVICE))
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(ExactVisitor)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVertex {
    id: VertexId,
    x: Exact,
    y: Exact,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCrease {
    id: CreaseId,
    a: VertexId,
    b: VertexId,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSawVertex {
    id: SawId,
    face: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCrossing {
    crease: CreaseId,
    tail: SawId,
    head: SawId,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSaw {
    root: SawId,
    vertices: Vec<RawSawVertex>,
    edges: Vec<(SawId, SawId)>,
    crossings: Vec<RawCrossing>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    boundary: Vec<BoundaryStep>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    version: u32,
    vertices: Vec<RawVertex>,
    creases: Vec<RawCrease>,
    boundary: Vec<(Exact, Exact)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    angles: BTreeMap<VertexId, Vec<Exact>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    assignment: Option<BTreeMap<CreaseId, i8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    saw: Option<RawSaw>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coloring: Option<BTreeMap<SawId, u8>>,
}

/// A loaded pattern file.
#[derive(Clone, Debug)]
pub struct PatternDocument {
    pub pattern: ExactPattern,
    pub assignment: Option<MvAssignment>,
    pub saw: Option<SawGraph>,
    pub coloring: Option<ThreeColoring>,
}

impl PatternDocument {
    pub fn new(pattern: ExactPattern) -> Self {
        PatternDocument { pattern, assignment: None, saw: None, coloring: None }
    }
}

fn reference(msg: String) -> IoError {
    IoError::Parse { message: msg, line: None, column: None }
}

/// Parse and validate a pattern document.
pub fn parse(text: &str) -> Result<PatternDocument, IoError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| {
        let full = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        IoError::Parse {
            message: full.strip_suffix(&suffix).unwrap_or(&full).to_string(),
            line: Some(e.line()),
            column: Some(e.column()),
        }
    })?;
    if raw.version != FORMAT_VERSION {
        return Err(reference(format!("unsupported version {}, expected {FORMAT_VERSION}", raw.version)));
    }
    let ids: BTreeSet<VertexId> = raw.vertices.iter().map(|v| v.id).collect();
    for c in &raw.creases {
        for v in [c.a, c.b] {
            if !ids.contains(&v) {
                return Err(reference(format!("crease {} references unknown vertex {v}", c.id)));
            }
        }
    }
    for v in raw.angles.keys() {
        if !ids.contains(v) {
            return Err(reference(format!("angles given for unknown vertex {v}")));
        }
    }
    let input = PatternInput {
        vertices: raw.vertices.into_iter().map(|v| (v.id, Point::new(v.x.0, v.y.0))).collect(),
        creases: raw.creases.iter().map(|c| Crease { id: c.id, a: c.a, b: c.b }).collect(),
        region: raw.boundary.into_iter().map(|(x, y)| Point::new(x.0, y.0)).collect(),
        angles: raw.angles.into_iter().map(|(v, a)| (v, a.into_iter().map(|x| x.0).collect())).collect(),
    };
    let pattern = CreasePattern::build(input)?;
    let creases: BTreeSet<CreaseId> = pattern.crease_ids().into_iter().collect();
    let assignment = match raw.assignment {
        None => None,
        Some(map) => {
            let mut mv = MvAssignment::new();
            for (c, v) in map {
                if !creases.contains(&c) {
                    return Err(reference(format!("assignment names unknown crease {c}")));
                }
                let m = Mv::from_sign(v as i64)
                    .ok_or_else(|| reference(format!("crease {c} has value {v}; use 1 or -1")))?;
                mv.set(c, m);
            }
            Some(mv)
        }
    };
    let saw = match raw.saw {
        None => None,
        Some(r) => Some(saw_from_raw(r, &creases, pattern.faces().len())?),
    };
    let coloring = match raw.coloring {
        None => None,
        Some(map) => {
            let Some(g) = &saw else {
                return Err(reference("a coloring needs an embedded SAW graph".into()));
            };
            if map.values().any(|&c| c > 2) || map.keys().any(|v| !g.faces.contains_key(v)) {
                return Err(reference("coloring uses colors outside 0..3 or unknown vertices".into()));
            }
            Some(map)
        }
    };
    Ok(PatternDocument { pattern, assignment, saw, coloring })
}

fn saw_from_raw(r: RawSaw, creases: &BTreeSet<CreaseId>, faces: usize) -> Result<SawGraph, IoError> {
    let mut g = SawGraph::default();
    for v in &r.vertices {
        if v.face >= faces {
            return Err(reference(format!("SAW vertex {} sits in unknown face {}", v.id, v.face)));
        }
        if g.faces.insert(v.id, v.face).is_some() {
            return Err(reference(format!("duplicate SAW vertex {}", v.id)));
        }
    }
    let known = |v: SawId| {
        if g.faces.contains_key(&v) {
            Ok(v)
        } else {
            Err(reference(format!("SAW graph references unknown vertex {v}")))
        }
    };
    known(r.root)?;
    let mut edges = BTreeSet::new();
    for &(a, b) in &r.edges {
        known(a)?;
        known(b)?;
        if a == b {
            return Err(reference(format!("SAW edge loops at vertex {a}")));
        }
        edges.insert((a.min(b), a.max(b)));
    }
    let mut crossings = BTreeMap::new();
    for c in &r.crossings {
        known(c.tail)?;
        known(c.head)?;
        if !creases.contains(&c.crease) {
            return Err(reference(format!("SAW crossing over unknown crease {}", c.crease)));
        }
        crossings.insert(c.crease, (c.tail, c.head));
    }
    for s in &r.boundary {
        known(s.from)?;
        known(s.to)?;
    }
    g.edges = edges;
    g.crossings = crossings;
    g.root = r.root;
    g.boundary = r.boundary;
    Ok(g)
}

fn exact(x: &Rational) -> Exact {
    Exact(x.clone())
}

/// Serialize a document with every list sorted by id.
pub fn emit(doc: &PatternDocument) -> String {
    let cp = &doc.pattern;
    let raw = RawDocument {
        version: FORMAT_VERSION,
        vertices: cp
            .vertices()
            .iter()
            .map(|v| RawVertex { id: v.id, x: exact(&v.pos.x), y: exact(&v.pos.y) })
            .collect(),
        creases: cp.creases().iter().map(|c| RawCrease { id: c.id, a: c.a, b: c.b }).collect(),
        boundary: cp.region().iter().map(|p| (exact(&p.x), exact(&p.y))).collect(),
        angles: cp
            .declared_angles()
            .iter()
            .map(|(&v, a)| (v, a.iter().map(exact).collect()))
            .collect(),
        assignment: doc
            .assignment
            .as_ref()
            .map(|mv| mv.iter().map(|(c, m)| (c, m.sign())).collect()),
        saw: doc.saw.as_ref().map(|g| RawSaw {
            root: g.root,
            vertices: g.faces.iter().map(|(&id, &face)| RawSawVertex { id, face }).collect(),
            edges: g.edges.iter().copied().collect(),
            crossings: g
                .crossings
                .iter()
                .map(|(&crease, &(tail, head))| RawCrossing { crease, tail, head })
                .collect(),
            boundary: g.boundary.clone(),
        }),
        coloring: doc.coloring.clone(),
    };
    let mut s = serde_json::to_string_pretty(&raw).expect("document serializes");
    s.push('\n');
    s
}

pub fn emit_pattern(cp: &ExactPattern) -> String {
    emit(&PatternDocument::new(cp.clone()))
}

/// Read and parse a document; `-` reads standard input.
pub fn load(path: &str) -> Result<PatternDocument, IoError> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)?;
        s
    } else {
        std::fs::read_to_string(path)?
    };
    parse(&text)
}
