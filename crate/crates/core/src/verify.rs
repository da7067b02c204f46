//! Mechanical checks of every duality identity over a random corpus.
//!
//! Each hypermap in the corpus is run through the same list of named checks;
//! the report counts passes and failures per check and keeps the first
//! counterexample. Everything is a pure function of the configuration, so
//! two runs with the same seed print the same report.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chain::{
    edge_code, face_code, full_code, match_codes, raw_complex, CodeMatch, QuotientCode,
};
use crate::css::assemble;
use crate::hypermap::{Hypermap, SpecialKind};
use crate::reduce::{reduce_to_surface, validate_surface};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct VerifyConfig {
    pub trials: usize,
    pub max_darts: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            trials: 500,
            max_darts: 10,
            seed: 7,
        }
    }
}

/// `trials` random transitive hypermaps with `1..=max_darts` darts each.
pub fn corpus(config: &VerifyConfig) -> Vec<Hypermap> {
    assert!(config.max_darts >= 1, "max_darts must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    (0..config.trials)
        .map(|_| {
            let n = rng.gen_range(1..=config.max_darts);
            Hypermap::random_with(&mut rng, n)
        })
        .collect()
}

/// Names and one-line descriptions of every check, in report order.
pub const CHECKS: &[(&str, &str)] = &[
    ("dual-involution", "dual(dual(H)) = H"),
    ("triangle-dual-involution", "tri(tri(H)) = H"),
    ("triangle-faces-are-edges", "faces(tri(H)) = edges(H)"),
    ("triangle-edges-are-faces", "edges(tri(H)) = faces(H)"),
    (
        "nabla-edges-are-dual-faces",
        "edges(nabla(H)) = faces(dual(H))",
    ),
    (
        "nabla-faces-are-dual-edges",
        "faces(nabla(H)) = edges(dual(H))",
    ),
    (
        "nabla-is-triangle-of-dual",
        "nabla(H) and tri(dual(H)) share all partitions",
    ),
    (
        "face-code-equals-triangle-edge-code",
        "face code of H = edge code of tri(H)",
    ),
    (
        "dual-face-code-equals-nabla-edge-code",
        "face code of dual(H) = edge code of nabla(H)",
    ),
    ("euler-even", "chi even and at most 2"),
    (
        "k-equals-two-minus-euler",
        "k = 2 - chi for face and edge codes",
    ),
    ("full-code-gap", "k_full = k + |E| - 1"),
    (
        "chain-conditions",
        "d1 d2 = 0, d1 iota = 0, boundary1 boundary2 = 0",
    ),
    (
        "closed-surface",
        "reduced complex is a closed surface with the same chi and k",
    ),
];

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub description: &'static str,
    pub passed: usize,
    pub failed: usize,
    /// Hypermap (file format, one line) and reason of the first failure.
    pub first_failure: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub checks: Vec<CheckResult>,
    /// Code comparisons that matched literally vs. only after re-sorting generators.
    pub literal_matches: usize,
    pub resorted_matches: usize,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verify: trials={} max-darts={} seed={}",
            self.config.trials, self.config.max_darts, self.config.seed
        )?;
        for c in &self.checks {
            let status = if c.failed == 0 { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{status} {:<40} {}/{}  {}",
                c.name,
                c.passed,
                c.passed + c.failed,
                c.description
            )?;
            if let Some(why) = &c.first_failure {
                writeln!(f, "     first failure: {why}")?;
            }
        }
        writeln!(
            f,
            "code comparisons: {} literal, {} after re-sorting generators",
            self.literal_matches, self.resorted_matches
        )?;
        let failed = self.checks.iter().filter(|c| c.failed > 0).count();
        if failed == 0 {
            write!(f, "result: all {} checks passed", self.checks.len())
        } else {
            write!(f, "result: {failed} of {} checks failed", self.checks.len())
        }
    }
}

type Outcome = Result<(), String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

struct Tally {
    literal: usize,
    resorted: usize,
}

impl Tally {
    fn compare(&mut self, a: &QuotientCode, b: &QuotientCode) -> Outcome {
        match match_codes(a, b) {
            Some(CodeMatch::Literal) => {
                self.literal += 1;
                Ok(())
            }
            Some(CodeMatch::Resorted) => {
                self.resorted += 1;
                Ok(())
            }
            None => Err(format!(
                "boundary matrices differ: [{}] vs [{}]",
                a.boundary2.transpose().to_row_strings().join(" "),
                b.boundary2.transpose().to_row_strings().join(" ")
            )),
        }
    }
}

fn run_checks(h: &Hypermap, tally: &mut Tally) -> Vec<Outcome> {
    let dual = h.dual();
    let tri = h.triangle_dual();
    let nabla = h.nabla();
    let chi = h.euler_characteristic();
    let s = h.default_special_darts(SpecialKind::PerEdge);
    let s_dual = dual.default_special_darts(SpecialKind::PerEdge);

    let face = face_code(h, &s);
    let tri_edge = edge_code(&tri, &s);
    let dual_face = face_code(&dual, &s_dual);
    let nabla_edge = edge_code(&nabla, &s_dual);
    let own_edge = edge_code(h, &h.default_special_darts(SpecialKind::PerFace));
    let full = full_code(h);

    let face_vs_tri = match (&face, &tri_edge) {
        (Ok(a), Ok(b)) => tally.compare(a, b),
        (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
    };
    let dual_vs_nabla = match (&dual_face, &nabla_edge) {
        (Ok(a), Ok(b)) => tally.compare(a, b),
        (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
    };

    let k_check = (|| {
        for code in [&face, &own_edge] {
            let code = code.as_ref().map_err(|e| e.to_string())?;
            let css = assemble(code).map_err(|e| e.to_string())?;
            ensure(css.k as i64 == 2 - chi, || {
                format!("{} code has k={} but chi={chi}", code.kind.as_str(), css.k)
            })?;
        }
        Ok(())
    })();

    let gap = (|| {
        let face =
            assemble(face.as_ref().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let full = assemble(&full).map_err(|e| e.to_string())?;
        ensure(full.k == face.k + h.edges().len() - 1, || {
            format!("k_full={} k={} |E|={}", full.k, face.k, h.edges().len())
        })
    })();

    let chain = (|| {
        let raw = raw_complex(h);
        let zero = |a: &crate::gf2::BitMatrix, b: &crate::gf2::BitMatrix| {
            a.multiply(b).map(|m| m.is_zero()).unwrap_or(false)
        };
        ensure(zero(&raw.d1, &raw.d2), || "d1 d2 != 0".into())?;
        ensure(zero(&raw.d1, &raw.iota), || "d1 iota != 0".into())?;
        for code in [&face, &own_edge, &tri_edge, &dual_face, &nabla_edge] {
            let code = code.as_ref().map_err(|e| e.to_string())?;
            ensure(zero(&code.boundary1, &code.boundary2), || {
                format!("{} code boundary1 boundary2 != 0", code.kind.as_str())
            })?;
        }
        ensure(zero(&full.boundary1, &full.boundary2), || {
            "full code boundary1 boundary2 != 0".into()
        })
    })();

    let surface = (|| {
        let complex = reduce_to_surface(h, &s).map_err(|e| e.to_string())?;
        let report = validate_surface(&complex);
        ensure(report.passed(), || report.to_string().replace('\n', "; "))?;
        ensure(complex.euler_characteristic() == chi, || {
            format!(
                "complex chi={} but hypermap chi={chi}",
                complex.euler_characteristic()
            )
        })?;
        let face =
            assemble(face.as_ref().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(complex.homology_dimension() == face.k, || {
            format!(
                "complex H1 has dim {} but k={}",
                complex.homology_dimension(),
                face.k
            )
        })
    })();

    vec![
        ensure(dual.dual() == *h, || "dual is not an involution".into()),
        ensure(tri.triangle_dual() == *h, || {
            "triangle dual is not an involution".into()
        }),
        ensure(tri.faces().same_partition(h.edges()), || {
            "faces(tri) != edges".into()
        }),
        ensure(tri.edges().same_partition(h.faces()), || {
            "edges(tri) != faces".into()
        }),
        ensure(nabla.edges().same_partition(dual.faces()), || {
            "edges(nabla) != faces(dual)".into()
        }),
        ensure(nabla.faces().same_partition(dual.edges()), || {
            "faces(nabla) != edges(dual)".into()
        }),
        ensure(h.check_nabla_identity(), || {
            "nabla and tri(dual) differ".into()
        }),
        face_vs_tri,
        dual_vs_nabla,
        ensure(chi % 2 == 0 && chi <= 2, || format!("chi = {chi}")),
        k_check,
        gap,
        chain,
        surface,
    ]
}

pub fn run(config: VerifyConfig) -> VerifyReport {
    let mut checks: Vec<CheckResult> = CHECKS
        .iter()
        .map(|&(name, description)| CheckResult {
            name,
            description,
            passed: 0,
            failed: 0,
            first_failure: None,
        })
        .collect();
    let mut tally = Tally {
        literal: 0,
        resorted: 0,
    };
    for h in corpus(&config) {
        for (result, outcome) in checks.iter_mut().zip(run_checks(&h, &mut tally)) {
            match outcome {
                Ok(()) => result.passed += 1,
                Err(why) => {
                    result.failed += 1;
                    result.first_failure.get_or_insert_with(|| {
                        format!(
                            "darts={} alpha={} sigma={}: {why}",
                            h.degree(),
                            h.alpha(),
                            h.sigma()
                        )
                    });
                }
            }
        }
    }
    VerifyReport {
        config,
        checks,
        literal_matches: tally.literal,
        resorted_matches: tally.resorted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic_and_bounded() {
        let config = VerifyConfig {
            trials: 50,
            max_darts: 6,
            seed: 3,
        };
        let a = corpus(&config);
        assert_eq!(a, corpus(&config));
        assert_eq!(a.len(), 50);
        assert!(a.iter().all(|h| (1..=6).contains(&h.degree())));
    }

    #[test]
    fn small_run_passes() {
        let report = run(VerifyConfig {
            trials: 40,
            max_darts: 8,
            seed: 11,
        });
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.checks.len(), CHECKS.len());
        assert_eq!(report.literal_matches, 80);
        assert_eq!(report.to_string(), run(report.config).to_string());
    }
}
