//! CSS codes read off a quotient complex, and their distances.
//!
//! `H_X` is the vertex boundary and `H_Z` the transpose of the face (or edge)
//! boundary, so `H_X H_Z^T = 0` is the chain condition. The number of logical
//! qubits is `n - rank H_X - rank H_Z`.

use crate::chain::{CodeKind, QuotientCode};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector, Echelon};

/// Largest qubit count the exhaustive distance search accepts by default.
pub const DEFAULT_MAX_QUBITS: usize = 28;
/// Default weight limit of the distance search.
pub const DEFAULT_MAX_WEIGHT: usize = 6;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CssCode {
    pub kind: CodeKind,
    /// X checks x qubits.
    pub hx: BitMatrix,
    /// Z checks x qubits.
    pub hz: BitMatrix,
    /// 0-based dart carried by each qubit.
    pub qubit_labels: Vec<usize>,
    pub x_checks: Vec<String>,
    pub z_checks: Vec<String>,
    pub n: usize,
    pub k: usize,
    pub distance: Option<Distance>,
}

impl CssCode {
    /// Builds a code from explicit check matrices, checking commutation.
    pub fn from_checks(
        kind: CodeKind,
        hx: BitMatrix,
        hz: BitMatrix,
        qubit_labels: Vec<usize>,
        x_checks: Vec<String>,
        z_checks: Vec<String>,
    ) -> Result<Self> {
        let n = qubit_labels.len();
        if hx.cols() != n || hz.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "check matrices have {} and {} columns for {n} qubits",
                hx.cols(),
                hz.cols()
            )));
        }
        if x_checks.len() != hx.rows() || z_checks.len() != hz.rows() {
            return Err(Error::DimensionMismatch(
                "check labels do not match check rows".into(),
            ));
        }
        let product = hx.multiply(&hz.transpose())?;
        if !product.is_zero() {
            let (r, c) = (0..product.rows())
                .flat_map(|r| (0..product.cols()).map(move |c| (r, c)))
                .find(|&(r, c)| product.get(r, c))
                .expect("nonzero product has a set entry");
            return Err(Error::CommutationFailure(format!(
                "{} anticommutes with {}",
                x_checks[r], z_checks[c]
            )));
        }
        let k = n - hx.rank() - hz.rank();
        Ok(CssCode {
            kind,
            hx,
            hz,
            qubit_labels,
            x_checks,
            z_checks,
            n,
            k,
            distance: None,
        })
    }
}

/// `H_X = boundary1`, `H_Z = boundary2^T`.
pub fn assemble(q: &QuotientCode) -> Result<CssCode> {
    CssCode::from_checks(
        q.kind,
        q.boundary1.clone(),
        q.boundary2.transpose(),
        q.qubit_labels.clone(),
        q.x_generators.clone(),
        q.z_generators.clone(),
    )
}

/// One line per nontrivial check, e.g. `X_v1 = X1 X3 X4 X6 X7 X8`, with
/// 1-based dart labels. Checks acting on no qubit are skipped.
pub fn stabilizer_strings(c: &CssCode) -> Vec<String> {
    let render = |pauli: char, name: &str, row: BitVector| -> Option<String> {
        if row.is_zero() {
            return None;
        }
        let support: Vec<String> = row
            .ones()
            .map(|q| format!("{pauli}{}", c.qubit_labels[q] + 1))
            .collect();
        Some(format!("{pauli}_{name} = {}", support.join(" ")))
    };
    let xs = (0..c.hx.rows()).filter_map(|r| render('X', &c.x_checks[r], c.hx.row(r)));
    let zs = (0..c.hz.rows()).filter_map(|r| render('Z', &c.z_checks[r], c.hz.row(r)));
    xs.chain(zs).collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DistanceBudget {
    /// Largest logical weight searched for.
    pub max_weight: usize,
    /// Codes with more qubits are refused.
    pub max_qubits: usize,
}

impl Default for DistanceBudget {
    fn default() -> Self {
        DistanceBudget {
            max_weight: DEFAULT_MAX_WEIGHT,
            max_qubits: DEFAULT_MAX_QUBITS,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LogicalWeight {
    Exact(usize),
    /// The search budget ran out; every logical has at least this weight.
    AtLeast(usize),
}

impl LogicalWeight {
    pub fn value(self) -> usize {
        match self {
            LogicalWeight::Exact(w) | LogicalWeight::AtLeast(w) => w,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, LogicalWeight::Exact(_))
    }

    fn min(self, other: LogicalWeight) -> LogicalWeight {
        use LogicalWeight::*;
        match (self, other) {
            (Exact(a), Exact(b)) => Exact(a.min(b)),
            (Exact(a), AtLeast(b)) | (AtLeast(b), Exact(a)) => {
                if a <= b {
                    Exact(a)
                } else {
                    AtLeast(b)
                }
            }
            (AtLeast(a), AtLeast(b)) => AtLeast(a.min(b)),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DistanceReport {
    /// Minimum weight of `v` in `ker H_Z` outside the row space of `H_X`.
    pub d_x: LogicalWeight,
    /// Minimum weight of `v` in `ker H_X` outside the row space of `H_Z`.
    pub d_z: LogicalWeight,
    /// A minimum-weight X logical (qubit indices), when one was found within budget.
    pub x_witness: Option<Vec<usize>>,
    pub z_witness: Option<Vec<usize>>,
    pub max_weight: usize,
}

impl DistanceReport {
    pub fn d(&self) -> LogicalWeight {
        self.d_x.min(self.d_z)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Distance {
    /// `k = 0`: there is no logical operator to measure.
    NoLogical,
    Report(DistanceReport),
}

/// Minimum weight of a vector in `ker(checks)` outside `rowspace(stabilizers)`.
///
/// The kernel basis is put in reduced echelon form; a combination of `t`
/// basis rows has weight at least `t` (one bit per pivot), so combinations
/// are enumerated by increasing `t` and the search stops once `t` reaches
/// the best weight found or the budget.
fn min_logical_weight(
    checks: &BitMatrix,
    stabilizers: &Echelon,
    max_weight: usize,
) -> (LogicalWeight, Option<BitVector>) {
    let kernel = checks.kernel_basis().echelon();
    let basis = kernel.basis();
    let dim = basis.len();
    let mut best: Option<BitVector> = None;
    let best_weight = |b: &Option<BitVector>| b.as_ref().map_or(usize::MAX, BitVector::weight);

    let limit = dim.min(max_weight);
    let mut exhausted_at = None;
    for t in 1..=limit {
        if t >= best_weight(&best) {
            exhausted_at = Some(t);
            break;
        }
        let mut idx: Vec<usize> = (0..t).collect();
        loop {
            let mut v = basis[idx[0]].clone();
            for &i in &idx[1..] {
                v.xor_assign(&basis[i]);
            }
            if v.weight() < best_weight(&best) && !stabilizers.contains(&v) {
                best = Some(v);
            }
            // Next t-subset of 0..dim in lexicographic order.
            let Some(pos) = (0..t).rev().find(|&p| idx[p] < dim - t + p) else {
                break;
            };
            idx[pos] += 1;
            for p in pos + 1..t {
                idx[p] = idx[p - 1] + 1;
            }
        }
    }

    let complete = exhausted_at.is_some() || limit == dim;
    let Some(found) = &best else {
        // Without a logical of this type the search is complete only when
        // the whole kernel was enumerated; callers rule that out via k > 0.
        let bound = if complete { usize::MAX } else { max_weight + 1 };
        return (LogicalWeight::AtLeast(bound), None);
    };
    let w = found.weight();
    let weight = if complete || w <= max_weight + 1 {
        LogicalWeight::Exact(w)
    } else {
        LogicalWeight::AtLeast(max_weight + 1)
    };
    (weight, best)
}

/// Exact per-class distances up to `budget.max_weight`, or lower bounds past it.
pub fn distance(c: &CssCode, budget: DistanceBudget) -> Result<Distance> {
    if c.n > budget.max_qubits {
        return Err(Error::TooManyQubits {
            n: c.n,
            cap: budget.max_qubits,
        });
    }
    if c.k == 0 {
        return Ok(Distance::NoLogical);
    }
    let (d_x, x_witness) = min_logical_weight(&c.hz, &c.hx.echelon(), budget.max_weight);
    let (d_z, z_witness) = min_logical_weight(&c.hx, &c.hz.echelon(), budget.max_weight);
    let support = |v: Option<BitVector>| v.map(|v| v.ones().collect());
    Ok(Distance::Report(DistanceReport {
        d_x,
        d_z,
        x_witness: support(x_witness),
        z_witness: support(z_witness),
        max_weight: budget.max_weight,
    }))
}
