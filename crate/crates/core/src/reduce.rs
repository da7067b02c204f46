//! Reduction of a face code to an ordinary surface-code cell complex.
//!
//! Every non-special dart `i` becomes a 1-cell joining the vertices of `i`
//! and `alpha^-1(i)`; special darts are erased. Each face becomes a 2-cell
//! whose boundary walks its non-special darts plus, for each special dart on
//! it, the remaining darts of that special dart's edge. Incidences are kept
//! as natural numbers so that the closed-surface condition (every 1-cell
//! bounds 2-cells exactly twice) can be checked before reducing mod 2.
//!
//! Geometric choices in drawing the curves never change this complex, so
//! curve `i` is simply identified with dart `i`.

use std::fmt;

use crate::error::Result;
use crate::gf2::BitMatrix;
use crate::hypermap::{Hypermap, SpecialDarts, SpecialKind};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellComplex {
    /// Vertex names of the hypermap (`v1`, ...).
    pub zero_cells: Vec<String>,
    /// Non-special darts, 0-based, increasing.
    pub one_cells: Vec<usize>,
    /// Face names of the hypermap (`f1`, ...).
    pub two_cells: Vec<String>,
    /// `incidence21[i][f]` counts how often 1-cell `i` is traversed by the boundary of 2-cell `f`.
    pub incidence21: Vec<Vec<u32>>,
    /// zero cells x one cells.
    pub incidence10: BitMatrix,
}

impl CellComplex {
    pub fn euler_characteristic(&self) -> i64 {
        self.zero_cells.len() as i64 - self.one_cells.len() as i64 + self.two_cells.len() as i64
    }

    /// `incidence21` reduced mod 2.
    pub fn boundary2(&self) -> BitMatrix {
        BitMatrix::from_fn(self.one_cells.len(), self.two_cells.len(), |i, f| {
            self.incidence21[i][f] % 2 == 1
        })
    }

    /// `dim H_1` over GF(2).
    pub fn homology_dimension(&self) -> usize {
        self.one_cells.len() - self.incidence10.rank() - self.boundary2().rank()
    }
}

pub fn reduce_to_surface(h: &Hypermap, special: &SpecialDarts) -> Result<CellComplex> {
    let special = special.reinterpret(h, SpecialKind::PerEdge)?;
    let n = h.degree();
    let one_cells: Vec<usize> = (0..n).filter(|&d| !special.contains(d)).collect();
    let mut row_of = vec![usize::MAX; n];
    for (row, &d) in one_cells.iter().enumerate() {
        row_of[d] = row;
    }

    let faces = h.faces();
    let mut incidence21 = vec![vec![0u32; faces.len()]; one_cells.len()];
    for (f, face) in faces.iter().enumerate() {
        for &d in face {
            if special.contains(d) {
                for &other in &h.edges().cycles()[h.edge_of(d)] {
                    if other != d {
                        incidence21[row_of[other]][f] += 1;
                    }
                }
            } else {
                incidence21[row_of[d]][f] += 1;
            }
        }
    }

    let alpha_inv = h.alpha().inverse();
    let mut incidence10 = BitMatrix::zeros(h.vertices().len(), one_cells.len());
    for (col, &d) in one_cells.iter().enumerate() {
        incidence10.toggle(h.vertex_of(d), col);
        incidence10.toggle(h.vertex_of(alpha_inv.apply(d)), col);
    }

    Ok(CellComplex {
        zero_cells: (1..=h.vertices().len()).map(|i| format!("v{i}")).collect(),
        one_cells,
        two_cells: (1..=faces.len()).map(|i| format!("f{i}")).collect(),
        incidence21,
        incidence10,
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurfaceCheck {
    pub name: &'static str,
    pub passed: bool,
    /// Offending cells when the check fails.
    pub detail: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurfaceReport {
    pub checks: Vec<SurfaceCheck>,
    pub euler_characteristic: i64,
}

impl SurfaceReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&SurfaceCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SurfaceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{}: {status}", c.name)?;
            } else {
                writeln!(f, "{}: {status} ({})", c.name, c.detail)?;
            }
        }
        write!(f, "euler characteristic: {}", self.euler_characteristic)
    }
}

fn check(name: &'static str, failures: Vec<String>) -> SurfaceCheck {
    SurfaceCheck {
        name,
        passed: failures.is_empty(),
        detail: failures.join(", "),
    }
}

/// Checks that the complex describes a closed surface.
pub fn validate_surface(c: &CellComplex) -> SurfaceReport {
    let ones = c.one_cells.len();
    let twos = c.two_cells.len();
    let mut checks = Vec::new();

    let mut shape = Vec::new();
    if c.incidence21.len() != ones || c.incidence21.iter().any(|row| row.len() != twos) {
        shape.push(format!("incidence21 is not {ones}x{twos}"));
    }
    if c.incidence10.rows() != c.zero_cells.len() || c.incidence10.cols() != ones {
        shape.push(format!(
            "incidence10 is {}x{}, expected {}x{ones}",
            c.incidence10.rows(),
            c.incidence10.cols(),
            c.zero_cells.len()
        ));
    }
    let shape_ok = shape.is_empty();
    checks.push(check("shape", shape));
    if !shape_ok {
        return SurfaceReport {
            checks,
            euler_characteristic: c.euler_characteristic(),
        };
    }

    let closed = c
        .incidence21
        .iter()
        .zip(&c.one_cells)
        .filter_map(|(row, &d)| {
            let total: u32 = row.iter().sum();
            (total != 2).then(|| format!("1-cell {} has incidence total {total}", d + 1))
        })
        .collect();
    checks.push(check("closed-surface", closed));

    let endpoints = (0..ones)
        .filter_map(|i| {
            let w = c.incidence10.column(i).weight();
            (w != 0 && w != 2).then(|| format!("1-cell {} has {w} endpoints", c.one_cells[i] + 1))
        })
        .collect();
    checks.push(check("one-cell-endpoints", endpoints));

    let product = c
        .incidence10
        .multiply(&c.boundary2())
        .expect("shapes checked above");
    let chain = (0..twos)
        .filter(|&f| !product.column(f).is_zero())
        .map(|f| format!("boundary of {} is not a cycle", c.two_cells[f]))
        .collect();
    checks.push(check("chain-condition", chain));

    let chi = c.euler_characteristic();
    let mut euler = Vec::new();
    if chi % 2 != 0 || chi > 2 {
        euler.push(format!(
            "euler characteristic {chi} is not that of a closed orientable surface"
        ));
    }
    checks.push(check("euler-characteristic", euler));

    SurfaceReport {
        checks,
        euler_characteristic: chi,
    }
}
