//! File formats: distance CSV, point-cloud, complex and labelled-complex JSON,
//! and barcode JSON.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::complex::{DistanceMatrix, Face, Filtration, SimplicialComplex};
use crate::error::{Error, Result};
use crate::labelled::{make_labelled, LabelledComplex};
use crate::linalg::Polynomial;
use crate::monomial::{AtomTable, FactoredElement, LinearPrime, MonomialIdeal};
use crate::persistence::{PhBarcode, PrimeBarcode};

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { line: e.line() as u64, column: e.column() as u64, msg: e.to_string() }
}

fn nonempty(text: &str) -> Result<()> {
    if text.trim().is_empty() {
        return Err(Error::Input("input is empty".into()));
    }
    Ok(())
}

/// Square distance matrix, one comma-separated row per line. Blank lines and
/// lines starting with `#` are skipped.
pub fn parse_distance_csv(text: &str) -> Result<DistanceMatrix> {
    nonempty(text)?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            Error::Parse { line, column: 0, msg: e.to_string() }
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.iter().all(str::is_empty) {
            continue;
        }
        let row = record
            .iter()
            .enumerate()
            .map(|(i, field)| {
                field.parse::<f64>().map_err(|_| Error::Parse {
                    line,
                    column: i as u64 + 1,
                    msg: format!("expected a number, found {field:?}"),
                })
            })
            .collect::<Result<Vec<f64>>>()?;
        rows.push((line, row));
    }
    let n = rows.len();
    if let Some((line, r)) = rows.iter().find(|(_, r)| r.len() != n) {
        return Err(Error::Parse {
            line: *line,
            column: r.len().min(n) as u64 + 1,
            msg: format!("expected {n} entries per row, found {}", r.len()),
        });
    }
    DistanceMatrix::new(rows.into_iter().map(|(_, r)| r).collect())
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PointsDoc {
    Bare(Vec<Vec<f64>>),
    Wrapped { points: Vec<Vec<f64>> },
}

/// Point cloud as `[[x, y, ...], ...]` or `{"points": [...]}`, turned into
/// its Euclidean distance matrix.
pub fn parse_points_json(text: &str) -> Result<DistanceMatrix> {
    nonempty(text)?;
    let points = match serde_json::from_str::<PointsDoc>(text).map_err(json_error)? {
        PointsDoc::Bare(p) | PointsDoc::Wrapped { points: p } => p,
    };
    DistanceMatrix::euclidean(&points)
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ComplexDoc {
    pub n: u32,
    pub faces: Vec<Vec<u32>>,
    /// Optional entry parameter per listed face.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub births: Option<Vec<f64>>,
}

fn faces_of(raw: &[Vec<u32>]) -> Result<Vec<Face>> {
    raw.iter().map(|f| Face::new(f.iter().copied())).collect()
}

/// Complex JSON `{"n", "faces"}`; the listed faces are closed downward.
pub fn parse_complex_json(text: &str) -> Result<SimplicialComplex> {
    nonempty(text)?;
    let doc: ComplexDoc = serde_json::from_str(text).map_err(json_error)?;
    SimplicialComplex::from_generators(doc.n, faces_of(&doc.faces)?)
}

/// Complex JSON read as a filtration. With `births`, every face enters at the
/// earliest birth of a listed face containing it; without, the complex is
/// constant from 0.
pub fn parse_complex_filtration(text: &str) -> Result<Filtration> {
    nonempty(text)?;
    let doc: ComplexDoc = serde_json::from_str(text).map_err(json_error)?;
    let gens = faces_of(&doc.faces)?;
    let Some(births) = doc.births else {
        return Filtration::constant(SimplicialComplex::from_generators(doc.n, gens)?, 0.0);
    };
    if births.len() != gens.len() {
        return Err(Error::Arity { expected: gens.len(), got: births.len() });
    }
    if let Some(b) = births.iter().find(|b| !b.is_finite()) {
        return Err(Error::InvalidFiltration(format!("non-finite birth {b}")));
    }
    let mut entry: BTreeMap<Face, f64> = BTreeMap::new();
    for (g, &b) in gens.iter().zip(&births) {
        SimplicialComplex::from_generators(doc.n, [g.clone()])?;
        for s in g.nonempty_subfaces() {
            let e = entry.entry(s).or_insert(b);
            *e = e.min(b);
        }
    }
    Filtration::from_births(doc.n, &entry)
}

pub fn complex_to_json(k: &SimplicialComplex) -> Value {
    let faces: Vec<Vec<u32>> = k.maximal_faces().iter().map(|f| f.vertices().to_vec()).collect();
    serde_json::json!({ "n": k.n(), "faces": faces })
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct LabelledDoc {
    pub n: u32,
    pub faces: Vec<Vec<u32>>,
    pub atoms: Vec<String>,
    /// Per atom, a list of `[coefficient, [exponents]]` terms.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub atom_polys: Option<Vec<Vec<(Value, Vec<u32>)>>>,
    /// Per vertex, exponents over the atoms; `null` denotes zero.
    pub labels: Vec<Option<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduced: Option<bool>,
}

fn coefficient(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(BigInt::from(i)))
            .ok_or_else(|| Error::Input(format!("coefficient {n} is not an integer; write it as a string \"p/q\""))),
        Value::String(s) => s.trim().parse().map_err(|_| Error::Input(format!("bad coefficient {s:?}"))),
        other => Err(Error::Input(format!("bad coefficient {other}"))),
    }
}

/// Labelled complex JSON. Without `atom_polys` each atom is its own
/// coordinate variable.
pub fn parse_labelled_json(text: &str) -> Result<LabelledComplex> {
    nonempty(text)?;
    let doc: LabelledDoc = serde_json::from_str(text).map_err(json_error)?;
    labelled_from_doc(&doc)
}

pub fn labelled_from_doc(doc: &LabelledDoc) -> Result<LabelledComplex> {
    let atoms = match &doc.atom_polys {
        None => AtomTable::with_expansions(
            doc.atoms.clone(),
            doc.atoms.len(),
            (0..doc.atoms.len()).map(|i| Polynomial::var(doc.atoms.len(), i)).collect(),
        )?,
        Some(polys) => {
            let coords = polys.iter().flatten().map(|(_, e)| e.len()).next().unwrap_or(0);
            let expansions = polys
                .iter()
                .map(|terms| {
                    let terms = terms.iter().map(|(c, e)| Ok((coefficient(c)?, e.clone()))).collect::<Result<Vec<_>>>()?;
                    Polynomial::from_terms(coords, terms)
                })
                .collect::<Result<Vec<_>>>()?;
            AtomTable::with_expansions(doc.atoms.clone(), coords, expansions)?
        }
    };
    let labels = doc
        .labels
        .iter()
        .enumerate()
        .map(|(i, l)| match l {
            None => Err(Error::ZeroLabel(i as u32 + 1)),
            Some(e) if e.len() != atoms.len() => Err(Error::Arity { expected: atoms.len(), got: e.len() }),
            Some(e) => Ok(FactoredElement::from_exponents(e)),
        })
        .collect::<Result<Vec<_>>>()?;
    let complex = SimplicialComplex::from_generators(doc.n, faces_of(&doc.faces)?)?;
    make_labelled(complex, atoms, labels, doc.reduced.unwrap_or(false))
}

/// Monomial ideal JSON `{"n", "generators": [[exponents]]}`.
pub fn ideal_to_json(i: &MonomialIdeal) -> Value {
    let n = i.ambient_n() as usize;
    let gens: Vec<Vec<u32>> = i.generators().iter().map(|g| g.exponents(n)).collect();
    serde_json::json!({ "n": i.ambient_n(), "generators": gens })
}

/// Factored element JSON `{"atoms": [names], "exp": [exponents]}`.
pub fn element_to_json(atoms: &AtomTable, e: &FactoredElement) -> Value {
    serde_json::json!({ "atoms": atoms.names(), "exp": e.exponents(atoms.len()) })
}

/// Interval end: a finite parameter or `"inf"`.
#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq)]
#[serde(untagged)]
pub enum Endpoint {
    Finite(f64),
    Infinite(Infinity),
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Infinity {
    #[serde(rename = "inf")]
    Inf,
}

impl Endpoint {
    pub fn from_death(d: Option<f64>) -> Self {
        d.map_or(Endpoint::Infinite(Infinity::Inf), Endpoint::Finite)
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            Endpoint::Finite(x) => Some(x),
            Endpoint::Infinite(_) => None,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct IntervalJson {
    /// Generators of the prime, `[]` for the zero prime; `null` for PH bars.
    pub prime: Option<Vec<u32>>,
    /// Homology dimension for PH bars; `null` for prime intervals.
    pub dim: Option<usize>,
    pub birth: f64,
    pub death: Endpoint,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct BarcodeJson {
    /// `SR`, `EDGE` or `PH`.
    pub kind: String,
    pub intervals: Vec<IntervalJson>,
}

impl BarcodeJson {
    pub fn from_primes(b: &PrimeBarcode) -> Self {
        let intervals = b
            .entries()
            .iter()
            .map(|e| IntervalJson {
                prime: Some(e.prime.vertices().to_vec()),
                dim: None,
                birth: e.birth,
                death: Endpoint::from_death(e.death),
            })
            .collect();
        BarcodeJson { kind: b.kind().to_string(), intervals }
    }

    pub fn from_ph(b: &PhBarcode) -> Self {
        let intervals = b
            .bars
            .iter()
            .map(|bar| IntervalJson { prime: None, dim: Some(bar.dim), birth: bar.birth, death: Endpoint::from_death(bar.death) })
            .collect();
        BarcodeJson { kind: "PH".into(), intervals }
    }

    /// Prime of an interval, if it is a prime interval.
    pub fn prime_of(i: &IntervalJson) -> Option<Result<LinearPrime>> {
        i.prime.as_ref().map(|v| LinearPrime::new(v.iter().copied()))
    }
}

/// Serialises with two-space indentation and a trailing newline.
pub fn to_pretty_json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::vr_filtration;
    use crate::persistence::{prime_barcode, IdealKind};

    #[test]
    fn csv_reports_line_and_column() {
        let err = parse_distance_csv("0,1\n1,x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 2, .. }), "{err}");
        let err = parse_distance_csv("0,1\n1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(matches!(parse_distance_csv("  \n"), Err(Error::Input(_))));
    }

    #[test]
    fn csv_with_comments() {
        let d = parse_distance_csv("# two points\n0, 3\n3, 0\n").unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.edge_threshold(1, 2), 1.5);
    }

    #[test]
    fn points_in_both_shapes() {
        let a = parse_points_json("[[0,0],[3,4]]").unwrap();
        let b = parse_points_json(r#"{"points": [[0,0],[3,4]]}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.get(1, 2), 5.0);
    }

    #[test]
    fn json_errors_carry_position() {
        let err = parse_complex_json("{\"n\": 3,\n \"faces\": [[1,2],]}").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn complex_round_trip() {
        let k = parse_complex_json(r#"{"n": 4, "faces": [[1,2,3],[1,4]]}"#).unwrap();
        assert_eq!(k.len(), 9);
        let back = parse_complex_json(&complex_to_json(&k).to_string()).unwrap();
        assert_eq!(back, k);
    }

    #[test]
    fn complex_with_births() {
        let f = parse_complex_filtration(r#"{"n": 3, "faces": [[1],[2],[3],[1,2],[2,3]], "births": [0,0,0.5,1,2]}"#).unwrap();
        assert_eq!(f.params(), vec![0.0, 0.5, 1.0, 2.0]);
        assert_eq!(f.complex_at(0.7).unwrap().len(), 3);
    }

    #[test]
    fn labelled_with_polynomial_atom() {
        let text = r#"{
            "n": 3, "faces": [[1,2],[1,3],[2,3]],
            "atoms": ["x1", "x2", "x1+x2"],
            "atom_polys": [[[1,[1,0]]], [[1,[0,1]]], [[1,[1,0]],[1,[0,1]]]],
            "labels": [[0,0,1],[1,0,0],[1,1,0]]
        }"#;
        let lc = parse_labelled_json(text).unwrap();
        assert_eq!(lc.atoms().coords(), 2);
        assert_eq!(lc.atoms().format(lc.face_label(&Face::new([1, 3]).unwrap()).unwrap()), "x1*x2*(x1+x2)");
    }

    #[test]
    fn labelled_zero_label() {
        let text = r#"{"n": 2, "faces": [[1,2]], "atoms": ["x1"], "labels": [[1], null]}"#;
        assert!(matches!(parse_labelled_json(text), Err(Error::ZeroLabel(2))));
    }

    #[test]
    fn barcode_json_shape() {
        let d = DistanceMatrix::new(vec![vec![0.0, 2.0], vec![2.0, 0.0]]).unwrap();
        let b = BarcodeJson::from_primes(&prime_barcode(&vr_filtration(&d, 1).unwrap(), IdealKind::Sr));
        let v = serde_json::to_value(&b).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"kind": "SR", "intervals": [
                {"prime": [1], "dim": null, "birth": 0.0, "death": 1.0},
                {"prime": [2], "dim": null, "birth": 0.0, "death": 1.0},
                {"prime": [], "dim": null, "birth": 1.0, "death": "inf"}
            ]})
        );
        let back: BarcodeJson = serde_json::from_value(v).unwrap();
        assert_eq!(back, b);
    }
}
