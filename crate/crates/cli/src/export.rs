//! JSON and DOT renderings of hypermaps, codes and cell complexes.
//!
//! Every JSON document starts with `version`, `indexing` and `type`; dart
//! labels are 1-based and matrices are lists of `'0'`/`'1'` row strings.
//! Field order is fixed by the struct definitions below.

use hypercode_core::css::{Distance, DistanceReport, LogicalWeight};
use hypercode_core::{BitMatrix, CellComplex, CodeKind, CssCode, CycleDecomposition, Hypermap};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

pub const JSON_VERSION: u64 = 1;
const INDEXING: &str = "1-based";

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Artifact {
    Hypermap(Hypermap),
    Code(CssCode),
    Complex(CellComplex),
}

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("unsupported version {0} (expected {JSON_VERSION})")]
    Version(Value),
    #[error("unsupported indexing {0} (expected \"1-based\")")]
    Indexing(Value),
    #[error("unknown artifact type {0}")]
    UnknownType(Value),
    #[error(transparent)]
    Invalid(#[from] hypercode_core::Error),
    #[error("inconsistent document: {0}")]
    Inconsistent(String),
}

#[derive(Serialize, Deserialize)]
struct HypermapJson {
    version: u64,
    indexing: String,
    #[serde(rename = "type")]
    kind: String,
    darts: usize,
    alpha: String,
    sigma: String,
    vertices: Vec<Vec<usize>>,
    edges: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
    euler_characteristic: i64,
    genus: usize,
}

#[derive(Serialize, Deserialize)]
struct CodeJson {
    version: u64,
    indexing: String,
    #[serde(rename = "type")]
    kind: String,
    code: String,
    n: usize,
    k: usize,
    qubits: Vec<usize>,
    x_checks: Vec<String>,
    z_checks: Vec<String>,
    hx: Vec<String>,
    hz: Vec<String>,
    distance: Option<DistanceJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
enum DistanceJson {
    NoLogical,
    Report {
        d: WeightJson,
        d_x: WeightJson,
        d_z: WeightJson,
        max_weight: usize,
        /// Darts carrying a minimum-weight X logical.
        x_witness: Option<Vec<usize>>,
        z_witness: Option<Vec<usize>>,
    },
}

#[derive(Serialize, Deserialize)]
struct WeightJson {
    value: usize,
    exact: bool,
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    version: u64,
    indexing: String,
    #[serde(rename = "type")]
    kind: String,
    zero_cells: Vec<String>,
    /// Darts kept as 1-cells.
    one_cells: Vec<usize>,
    two_cells: Vec<String>,
    /// One row per 1-cell, one entry per 2-cell.
    incidence21: Vec<Vec<u32>>,
    /// One row string per 0-cell.
    incidence10: Vec<String>,
    euler_characteristic: i64,
}

fn one_based(darts: &[usize]) -> Vec<usize> {
    darts.iter().map(|d| d + 1).collect()
}

fn orbits(c: &CycleDecomposition) -> Vec<Vec<usize>> {
    c.iter().map(|cycle| one_based(cycle)).collect()
}

fn weight_json(w: LogicalWeight) -> WeightJson {
    WeightJson {
        value: w.value(),
        exact: w.is_exact(),
    }
}

fn weight_from(w: &WeightJson) -> LogicalWeight {
    if w.exact {
        LogicalWeight::Exact(w.value)
    } else {
        LogicalWeight::AtLeast(w.value)
    }
}

fn hypermap_json(h: &Hypermap) -> HypermapJson {
    HypermapJson {
        version: JSON_VERSION,
        indexing: INDEXING.into(),
        kind: "hypermap".into(),
        darts: h.degree(),
        alpha: h.alpha().to_string(),
        sigma: h.sigma().to_string(),
        vertices: orbits(h.vertices()),
        edges: orbits(h.edges()),
        faces: orbits(h.faces()),
        euler_characteristic: h.euler_characteristic(),
        genus: h.genus(),
    }
}

fn code_json(c: &CssCode) -> CodeJson {
    let darts = |qubits: &Option<Vec<usize>>| {
        qubits
            .as_ref()
            .map(|q| q.iter().map(|&i| c.qubit_labels[i] + 1).collect())
    };
    let distance = c.distance.as_ref().map(|d| match d {
        Distance::NoLogical => DistanceJson::NoLogical,
        Distance::Report(r) => DistanceJson::Report {
            d: weight_json(r.d()),
            d_x: weight_json(r.d_x),
            d_z: weight_json(r.d_z),
            max_weight: r.max_weight,
            x_witness: darts(&r.x_witness),
            z_witness: darts(&r.z_witness),
        },
    });
    CodeJson {
        version: JSON_VERSION,
        indexing: INDEXING.into(),
        kind: "css-code".into(),
        code: c.kind.as_str().into(),
        n: c.n,
        k: c.k,
        qubits: one_based(&c.qubit_labels),
        x_checks: c.x_checks.clone(),
        z_checks: c.z_checks.clone(),
        hx: c.hx.to_row_strings(),
        hz: c.hz.to_row_strings(),
        distance,
    }
}

fn complex_json(c: &CellComplex) -> ComplexJson {
    ComplexJson {
        version: JSON_VERSION,
        indexing: INDEXING.into(),
        kind: "cell-complex".into(),
        zero_cells: c.zero_cells.clone(),
        one_cells: one_based(&c.one_cells),
        two_cells: c.two_cells.clone(),
        incidence21: c.incidence21.clone(),
        incidence10: c.incidence10.to_row_strings(),
        euler_characteristic: c.euler_characteristic(),
    }
}

fn to_text<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("plain structs serialize");
    text.push('\n');
    text
}

pub fn export_json(artifact: &Artifact) -> String {
    match artifact {
        Artifact::Hypermap(h) => to_text(&hypermap_json(h)),
        Artifact::Code(c) => to_text(&code_json(c)),
        Artifact::Complex(c) => to_text(&complex_json(c)),
    }
}

fn zero_based(labels: &[usize], n: usize, what: &str) -> Result<Vec<usize>, JsonError> {
    labels
        .iter()
        .map(|&l| {
            if (1..=n).contains(&l) {
                Ok(l - 1)
            } else {
                Err(JsonError::Inconsistent(format!(
                    "{what} label {l} out of range 1..={n}"
                )))
            }
        })
        .collect()
}

fn ensure(ok: bool, what: &str) -> Result<(), JsonError> {
    if ok {
        Ok(())
    } else {
        Err(JsonError::Inconsistent(format!(
            "{what} does not match the data"
        )))
    }
}

fn hypermap_from(doc: HypermapJson) -> Result<Hypermap, JsonError> {
    let h = Hypermap::from_cycle_notation(doc.darts, &doc.alpha, &doc.sigma)?;
    let derived = hypermap_json(&h);
    ensure(doc.vertices == derived.vertices, "vertices")?;
    ensure(doc.edges == derived.edges, "edges")?;
    ensure(doc.faces == derived.faces, "faces")?;
    ensure(
        doc.euler_characteristic == derived.euler_characteristic,
        "euler_characteristic",
    )?;
    ensure(doc.genus == derived.genus, "genus")?;
    Ok(h)
}

fn matrix(cols: usize, rows: &[String]) -> Result<BitMatrix, JsonError> {
    Ok(BitMatrix::from_row_strings(cols, rows)?)
}

fn code_from(doc: CodeJson) -> Result<CssCode, JsonError> {
    let kind: CodeKind = doc.code.parse().map_err(JsonError::Inconsistent)?;
    let max_dart = doc.qubits.iter().copied().max().unwrap_or(0);
    let qubit_labels = zero_based(&doc.qubits, max_dart, "qubit")?;
    let n = qubit_labels.len();
    let mut code = CssCode::from_checks(
        kind,
        matrix(n, &doc.hx)?,
        matrix(n, &doc.hz)?,
        qubit_labels,
        doc.x_checks,
        doc.z_checks,
    )?;
    ensure(doc.n == code.n, "n")?;
    ensure(doc.k == code.k, "k")?;

    let qubits = |darts: Option<Vec<usize>>| -> Result<Option<Vec<usize>>, JsonError> {
        darts
            .map(|darts| {
                darts
                    .iter()
                    .map(|&d| {
                        code.qubit_labels
                            .iter()
                            .position(|&q| q + 1 == d)
                            .ok_or_else(|| {
                                JsonError::Inconsistent(format!("witness dart {d} is not a qubit"))
                            })
                    })
                    .collect()
            })
            .transpose()
    };
    let distance = match doc.distance {
        None => None,
        Some(DistanceJson::NoLogical) => Some(Distance::NoLogical),
        Some(DistanceJson::Report {
            d,
            d_x,
            d_z,
            max_weight,
            x_witness,
            z_witness,
        }) => {
            let report = DistanceReport {
                d_x: weight_from(&d_x),
                d_z: weight_from(&d_z),
                x_witness: qubits(x_witness)?,
                z_witness: qubits(z_witness)?,
                max_weight,
            };
            ensure(
                weight_json(report.d()).value == d.value && report.d().is_exact() == d.exact,
                "d",
            )?;
            Some(Distance::Report(report))
        }
    };
    code.distance = distance;
    Ok(code)
}

fn complex_from(doc: ComplexJson) -> Result<CellComplex, JsonError> {
    let max_dart = doc.one_cells.iter().copied().max().unwrap_or(0);
    let one_cells = zero_based(&doc.one_cells, max_dart, "1-cell")?;
    ensure(doc.incidence10.len() == doc.zero_cells.len(), "incidence10")?;
    let complex = CellComplex {
        incidence10: matrix(one_cells.len(), &doc.incidence10)?,
        zero_cells: doc.zero_cells,
        one_cells,
        two_cells: doc.two_cells,
        incidence21: doc.incidence21,
    };
    ensure(
        doc.euler_characteristic == complex.euler_characteristic(),
        "euler_characteristic",
    )?;
    Ok(complex)
}

/// Reads back any document written by [`export_json`].
pub fn parse_json(text: &str) -> Result<Artifact, JsonError> {
    let value: Value = serde_json::from_str(text)?;
    let field = |name: &str| value.get(name).cloned().unwrap_or(Value::Null);
    if field("version") != JSON_VERSION {
        return Err(JsonError::Version(field("version")));
    }
    if field("indexing") != INDEXING {
        return Err(JsonError::Indexing(field("indexing")));
    }
    match field("type").as_str() {
        Some("hypermap") => Ok(Artifact::Hypermap(hypermap_from(serde_json::from_value(
            value,
        )?)?)),
        Some("css-code") => Ok(Artifact::Code(code_from(serde_json::from_value(value)?)?)),
        Some("cell-complex") => Ok(Artifact::Complex(complex_from(serde_json::from_value(
            value,
        )?)?)),
        _ => Err(JsonError::UnknownType(field("type"))),
    }
}

/// The Walsh bipartite graph: circles for vertices, squares for edges and
/// one link per dart, labeled with the dart.
pub fn export_walsh_dot(h: &Hypermap) -> String {
    let mut out = String::from("graph walsh {\n");
    for v in 1..=h.vertices().len() {
        out.push_str(&format!("  v{v} [shape=circle];\n"));
    }
    for e in 1..=h.edges().len() {
        out.push_str(&format!("  e{e} [shape=square];\n"));
    }
    for d in 0..h.degree() {
        out.push_str(&format!(
            "  v{} -- e{} [label=\"{}\"];\n",
            h.vertex_of(d) + 1,
            h.edge_of(d) + 1,
            d + 1
        ));
    }
    out.push_str("}\n");
    out
}
