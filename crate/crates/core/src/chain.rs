//! Chain complexes of a hypermap and their quotients by special darts.
//!
//! The raw complex is `F --d2--> W --d1--> V` with the extra inclusion
//! `E --iota--> W`, where `W` has one basis vector per dart. Face codes
//! quotient `W` by `iota(E)`, edge codes by `d2(F)`; in both cases the
//! classes of non-special darts form the qubit basis and each special dart
//! is rewritten as the sum of the other darts in its orbit.

use crate::error::Result;
use crate::gf2::BitMatrix;
use crate::hypermap::{Hypermap, SpecialDarts, SpecialKind};
use crate::perm::CycleDecomposition;

/// Boundary and inclusion matrices of a hypermap, before any quotient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RawComplex {
    /// `|B| x |F|`, one column per face.
    pub d2: BitMatrix,
    /// `|V| x |B|`, one column per dart.
    pub d1: BitMatrix,
    /// `|B| x |E|`, one column per edge.
    pub iota: BitMatrix,
    pub vertex_labels: Vec<String>,
    pub edge_labels: Vec<String>,
    pub face_labels: Vec<String>,
    /// 0-based darts in increasing order.
    pub darts: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CodeKind {
    Face,
    Edge,
    Full,
}

impl CodeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CodeKind::Face => "face",
            CodeKind::Edge => "edge",
            CodeKind::Full => "full",
        }
    }

    /// The special-dart kind a code of this kind needs, if any.
    pub fn special_kind(self) -> Option<SpecialKind> {
        match self {
            CodeKind::Face => Some(SpecialKind::PerEdge),
            CodeKind::Edge => Some(SpecialKind::PerFace),
            CodeKind::Full => None,
        }
    }
}

impl std::str::FromStr for CodeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "face" => Ok(CodeKind::Face),
            "edge" => Ok(CodeKind::Edge),
            "full" => Ok(CodeKind::Full),
            _ => Err(format!(
                "unknown code kind {s:?} (expected face, edge or full)"
            )),
        }
    }
}

/// A two-step complex over the quotient basis, ready to become a CSS code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientCode {
    pub kind: CodeKind,
    /// `None` for the full code.
    pub special: Option<SpecialDarts>,
    /// Non-special darts, 0-based, increasing. Row order of `boundary2`.
    pub qubit_labels: Vec<usize>,
    /// Names of the Z generators (columns of `boundary2`), e.g. `f1` or `e1`.
    pub z_generators: Vec<String>,
    /// Names of the X generators (rows of `boundary1`), e.g. `v1`.
    pub x_generators: Vec<String>,
    /// qubits x Z generators.
    pub boundary2: BitMatrix,
    /// X generators x qubits.
    pub boundary1: BitMatrix,
}

fn labels(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

/// Column per dart with ones at `v(i)` and `v(alpha^-1(i))`; zero when they coincide.
fn vertex_boundary(h: &Hypermap, darts: &[usize]) -> BitMatrix {
    let alpha_inv = h.alpha().inverse();
    let mut m = BitMatrix::zeros(h.vertices().len(), darts.len());
    for (col, &i) in darts.iter().enumerate() {
        m.toggle(h.vertex_of(i), col);
        m.toggle(h.vertex_of(alpha_inv.apply(i)), col);
    }
    m
}

fn orbit_columns(n: usize, orbits: &CycleDecomposition) -> BitMatrix {
    let mut m = BitMatrix::zeros(n, orbits.len());
    for (col, orbit) in orbits.iter().enumerate() {
        for &d in orbit {
            m.set(d, col, true);
        }
    }
    m
}

pub fn raw_complex(h: &Hypermap) -> RawComplex {
    let n = h.degree();
    let darts: Vec<usize> = (0..n).collect();
    RawComplex {
        d2: orbit_columns(n, h.faces()),
        d1: vertex_boundary(h, &darts),
        iota: orbit_columns(n, h.edges()),
        vertex_labels: labels("v", h.vertices().len()),
        edge_labels: labels("e", h.edges().len()),
        face_labels: labels("f", h.faces().len()),
        darts,
    }
}

/// Quotient of the dart space by the orbit sums of `eliminated`, with
/// `generators` as the Z side.
fn quotient(
    h: &Hypermap,
    kind: CodeKind,
    special: SpecialDarts,
    generators: &CycleDecomposition,
    generator_prefix: &str,
    eliminated: &CycleDecomposition,
    eliminated_of: impl Fn(usize) -> usize,
) -> QuotientCode {
    let n = h.degree();
    let qubits: Vec<usize> = (0..n).filter(|&d| !special.contains(d)).collect();
    let mut row_of = vec![usize::MAX; n];
    for (row, &d) in qubits.iter().enumerate() {
        row_of[d] = row;
    }

    let mut boundary2 = BitMatrix::zeros(qubits.len(), generators.len());
    for (col, orbit) in generators.iter().enumerate() {
        for &d in orbit {
            if special.contains(d) {
                for &other in &eliminated.cycles()[eliminated_of(d)] {
                    if other != d {
                        boundary2.toggle(row_of[other], col);
                    }
                }
            } else {
                boundary2.toggle(row_of[d], col);
            }
        }
    }

    QuotientCode {
        kind,
        boundary1: vertex_boundary(h, &qubits),
        boundary2,
        qubit_labels: qubits,
        z_generators: labels(generator_prefix, generators.len()),
        x_generators: labels("v", h.vertices().len()),
        special: Some(special),
    }
}

/// Face code: faces act as Z checks, `W / iota(E)` carries the qubits.
/// `special` must hold one dart per edge.
pub fn face_code(h: &Hypermap, special: &SpecialDarts) -> Result<QuotientCode> {
    let special = special.reinterpret(h, SpecialKind::PerEdge)?;
    Ok(quotient(
        h,
        CodeKind::Face,
        special,
        h.faces(),
        "f",
        h.edges(),
        |d| h.edge_of(d),
    ))
}

/// Edge code: edges act as Z checks, `W / d2(F)` carries the qubits.
/// `special` must hold one dart per face.
pub fn edge_code(h: &Hypermap, special: &SpecialDarts) -> Result<QuotientCode> {
    let special = special.reinterpret(h, SpecialKind::PerFace)?;
    Ok(quotient(
        h,
        CodeKind::Edge,
        special,
        h.edges(),
        "e",
        h.faces(),
        |d| h.face_of(d),
    ))
}

/// The unquotiented complex `F -> W -> V`: every dart is a qubit.
pub fn full_code(h: &Hypermap) -> QuotientCode {
    let raw = raw_complex(h);
    QuotientCode {
        kind: CodeKind::Full,
        special: None,
        qubit_labels: raw.darts,
        z_generators: raw.face_labels,
        x_generators: raw.vertex_labels,
        boundary2: raw.d2,
        boundary1: raw.d1,
    }
}

/// Builds the code of the requested kind.
pub fn build_code(
    h: &Hypermap,
    kind: CodeKind,
    special: Option<&SpecialDarts>,
) -> Result<QuotientCode> {
    let default = |k| h.default_special_darts(k);
    match kind {
        CodeKind::Face => face_code(
            h,
            &special
                .cloned()
                .unwrap_or_else(|| default(SpecialKind::PerEdge)),
        ),
        CodeKind::Edge => edge_code(
            h,
            &special
                .cloned()
                .unwrap_or_else(|| default(SpecialKind::PerFace)),
        ),
        CodeKind::Full => Ok(full_code(h)),
    }
}

/// How two quotient codes were found equal.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CodeMatch {
    /// Identical matrices under the shared orbit-minimum ordering.
    Literal,
    /// Equal after re-sorting generators by their support.
    Resorted,
}

/// Compares the boundary matrices of two codes on the same qubits.
pub fn match_codes(a: &QuotientCode, b: &QuotientCode) -> Option<CodeMatch> {
    if a.qubit_labels != b.qubit_labels {
        return None;
    }
    if a.boundary1 == b.boundary1 && a.boundary2 == b.boundary2 {
        return Some(CodeMatch::Literal);
    }
    let sorted_rows = |m: &BitMatrix| {
        let mut rows = m.to_row_strings();
        rows.sort();
        rows
    };
    let same_x = sorted_rows(&a.boundary1) == sorted_rows(&b.boundary1);
    let same_z = sorted_rows(&a.boundary2.transpose()) == sorted_rows(&b.boundary2.transpose());
    (same_x && same_z).then_some(CodeMatch::Resorted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitVector;
    use proptest::prelude::*;

    fn worked() -> Hypermap {
        Hypermap::from_cycle_notation(8, "(4 3 2 1)(5 7 8 6)", "(7 1 6 3)(5 2 8 4)").unwrap()
    }

    fn single() -> Hypermap {
        Hypermap::random(1, 0)
    }

    fn hypermaps() -> impl Strategy<Value = Hypermap> {
        (1usize..=10, any::<u64>()).prop_map(|(n, seed)| Hypermap::random(n, seed))
    }

    fn worked_special(h: &Hypermap) -> SpecialDarts {
        SpecialDarts::new(h, &[1, 4], SpecialKind::PerEdge).unwrap()
    }

    #[test]
    fn worked_example_raw_complex() {
        let raw = raw_complex(&worked());
        assert_eq!(raw.d2.column(0), BitVector::from_ones(8, [0, 7]));
        assert!(raw.d1.multiply(&raw.d2).unwrap().is_zero());
        assert!(raw.d1.multiply(&raw.iota).unwrap().is_zero());
        assert_eq!(raw.face_labels, ["f1", "f2", "f3", "f4"]);
    }

    #[test]
    fn worked_example_face_code() {
        let h = worked();
        let code = face_code(&h, &worked_special(&h)).unwrap();
        assert_eq!(code.qubit_labels, [0, 2, 3, 5, 6, 7]);
        assert_eq!(code.boundary1.to_row_strings(), ["111111", "111111"]);
        assert_eq!(
            code.boundary2.transpose().to_row_strings(),
            ["100001", "111010", "010111", "001100"]
        );
        assert!(code.boundary1.multiply(&code.boundary2).unwrap().is_zero());
    }

    #[test]
    fn worked_example_face_equals_triangle_edge() {
        let h = worked();
        let s = worked_special(&h);
        let face = face_code(&h, &s).unwrap();
        let t = h.triangle_dual();
        let edge = edge_code(&t, &s.reinterpret(&t, SpecialKind::PerFace).unwrap()).unwrap();
        assert_eq!(match_codes(&face, &edge), Some(CodeMatch::Literal));
    }

    #[test]
    fn single_dart_codes_are_empty() {
        let h = single();
        let raw = raw_complex(&h);
        assert_eq!((raw.d1.rows(), raw.d1.cols()), (1, 1));
        assert!(raw.d1.is_zero());
        for kind in [CodeKind::Face, CodeKind::Edge] {
            let code = build_code(&h, kind, None).unwrap();
            assert!(code.qubit_labels.is_empty());
            assert_eq!(code.boundary2.rows(), 0);
            assert_eq!(code.boundary1.cols(), 0);
        }
        assert_eq!(full_code(&h).qubit_labels, [0]);
    }

    #[test]
    fn wrong_special_kind_is_rejected() {
        let h = worked();
        let per_face = h.default_special_darts(SpecialKind::PerFace);
        assert!(face_code(&h, &per_face).is_err());
        assert!(edge_code(&h, &worked_special(&h)).is_err());
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("edge".parse::<CodeKind>(), Ok(CodeKind::Edge));
        assert!("vertex".parse::<CodeKind>().is_err());
    }

    /// Brute-force projection of `v` into `W / span(columns of sub)`,
    /// expressed on the coordinates outside `special`.
    fn project_by_search(v: &BitVector, sub: &BitMatrix, special: &SpecialDarts) -> BitVector {
        let k = sub.cols();
        let mut hits = Vec::new();
        for mask in 0u32..1 << k {
            let mut w = v.clone();
            for c in (0..k).filter(|c| mask >> c & 1 == 1) {
                w.xor_assign(&sub.column(c));
            }
            if special.darts().iter().all(|&d| !w.get(d)) {
                hits.push(w);
            }
        }
        assert_eq!(
            hits.len(),
            1,
            "special darts must give a unique representative"
        );
        let w = &hits[0];
        let kept: Vec<usize> = (0..v.len()).filter(|&d| !special.contains(d)).collect();
        BitVector::from_ones(
            kept.len(),
            kept.iter()
                .enumerate()
                .filter(|(_, &d)| w.get(d))
                .map(|(r, _)| r),
        )
    }

    proptest! {
        #[test]
        fn face_code_matches_quotient_oracle(h in hypermaps()) {
            let s = h.default_special_darts(SpecialKind::PerEdge);
            let code = face_code(&h, &s).unwrap();
            let raw = raw_complex(&h);
            for f in 0..raw.d2.cols() {
                prop_assert_eq!(code.boundary2.column(f), project_by_search(&raw.d2.column(f), &raw.iota, &s));
            }
        }

        #[test]
        fn edge_code_matches_quotient_oracle(h in hypermaps()) {
            let s = h.default_special_darts(SpecialKind::PerFace);
            let code = edge_code(&h, &s).unwrap();
            let raw = raw_complex(&h);
            for e in 0..raw.iota.cols() {
                prop_assert_eq!(code.boundary2.column(e), project_by_search(&raw.iota.column(e), &raw.d2, &s));
            }
        }

        #[test]
        fn chain_conditions_hold(h in hypermaps()) {
            let raw = raw_complex(&h);
            prop_assert!(raw.d1.multiply(&raw.d2).unwrap().is_zero());
            prop_assert!(raw.d1.multiply(&raw.iota).unwrap().is_zero());
            for kind in [CodeKind::Face, CodeKind::Edge, CodeKind::Full] {
                let code = build_code(&h, kind, None).unwrap();
                prop_assert!(code.boundary1.multiply(&code.boundary2).unwrap().is_zero());
            }
            for f in 0..raw.d2.cols() {
                prop_assert_eq!(raw.d2.column(f).weight(), h.faces().cycles()[f].len());
            }
        }

        #[test]
        fn qubit_counts_and_labels(h in hypermaps()) {
            let n = h.degree();
            let face = build_code(&h, CodeKind::Face, None).unwrap();
            let edge = build_code(&h, CodeKind::Edge, None).unwrap();
            prop_assert_eq!(face.qubit_labels.len(), n - h.edges().len());
            prop_assert_eq!(edge.qubit_labels.len(), n - h.faces().len());
            prop_assert_eq!(face.z_generators.len(), h.faces().len());
            prop_assert_eq!(edge.z_generators.len(), h.edges().len());
            prop_assert!(face.qubit_labels.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(full_code(&h).qubit_labels.len(), n);
        }

        #[test]
        fn face_code_equals_triangle_edge_code_and_dual(h in hypermaps()) {
            let s = h.default_special_darts(SpecialKind::PerEdge);
            let t = h.triangle_dual();
            let face = face_code(&h, &s).unwrap();
            let edge = edge_code(&t, &s).unwrap();
            prop_assert_eq!(match_codes(&face, &edge), Some(CodeMatch::Literal));

            let d = h.dual();
            let nabla = h.nabla();
            let s_dual = d.default_special_darts(SpecialKind::PerEdge);
            let face = face_code(&d, &s_dual).unwrap();
            let edge = edge_code(&nabla, &s_dual).unwrap();
            prop_assert_eq!(match_codes(&face, &edge), Some(CodeMatch::Literal));
        }
    }
}
