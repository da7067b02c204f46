//! Combinatorial hypermaps and their dual constructions.
//!
//! A hypermap on darts `{0..n-1}` is a pair `(alpha, sigma)` generating a
//! transitive group. Vertices are the orbits of `sigma`, edges the orbits of
//! `alpha`, faces the orbits of `alpha^-1 sigma`.
//!
//! The duals keep dart labels fixed, so dart `i` of a hypermap and dart `i`
//! of any of its duals correspond to each other.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::perm::{joint_orbits, CycleDecomposition, Permutation};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hypermap {
    alpha: Permutation,
    sigma: Permutation,
    vertices: CycleDecomposition,
    edges: CycleDecomposition,
    faces: CycleDecomposition,
    vertex_of: Vec<usize>,
    edge_of: Vec<usize>,
    face_of: Vec<usize>,
}

impl Hypermap {
    /// Validates the pair and caches the three orbit decompositions.
    pub fn new(alpha: Permutation, sigma: Permutation) -> Result<Self> {
        let components = joint_orbits(&alpha, &sigma)?;
        if components.len() != 1 {
            return Err(Error::NotTransitive { components });
        }
        Ok(Self::from_transitive(alpha, sigma))
    }

    /// For pairs whose transitivity is inherited from an existing hypermap.
    fn from_transitive(alpha: Permutation, sigma: Permutation) -> Self {
        let face_perm = alpha
            .inverse()
            .compose(&sigma)
            .expect("alpha and sigma share a degree");
        let vertices = sigma.cycles();
        let edges = alpha.cycles();
        let faces = face_perm.cycles();
        Hypermap {
            vertex_of: vertices.orbit_index(),
            edge_of: edges.orbit_index(),
            face_of: faces.orbit_index(),
            alpha,
            sigma,
            vertices,
            edges,
            faces,
        }
    }

    /// Parses 1-based cycle notation for both permutations.
    pub fn from_cycle_notation(n: usize, alpha: &str, sigma: &str) -> Result<Self> {
        Hypermap::new(
            Permutation::parse_cycles(alpha, n)?,
            Permutation::parse_cycles(sigma, n)?,
        )
    }

    /// Samples `alpha` and `sigma` uniformly from `S_n`, rejecting
    /// non-transitive pairs.
    pub fn random(n: usize, seed: u64) -> Self {
        Hypermap::random_with(&mut ChaCha8Rng::seed_from_u64(seed), n)
    }

    pub fn random_with<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Self {
        assert!(n >= 1, "a hypermap needs at least one dart");
        let mut images: Vec<usize> = (0..n).collect();
        loop {
            images.shuffle(rng);
            let alpha = Permutation::from_images(images.clone()).expect("shuffle is a bijection");
            images.shuffle(rng);
            let sigma = Permutation::from_images(images.clone()).expect("shuffle is a bijection");
            if let Ok(h) = Hypermap::new(alpha, sigma) {
                return h;
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.alpha.degree()
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn vertices(&self) -> &CycleDecomposition {
        &self.vertices
    }

    pub fn edges(&self) -> &CycleDecomposition {
        &self.edges
    }

    pub fn faces(&self) -> &CycleDecomposition {
        &self.faces
    }

    /// Index of the vertex containing `dart`.
    pub fn vertex_of(&self, dart: usize) -> usize {
        self.vertex_of[dart]
    }

    pub fn edge_of(&self, dart: usize) -> usize {
        self.edge_of[dart]
    }

    pub fn face_of(&self, dart: usize) -> usize {
        self.face_of[dart]
    }

    /// `|V| + |E| - n + |F|`: sites and faces of the bipartite embedding,
    /// minus the darts joining them.
    pub fn euler_characteristic(&self) -> i64 {
        (self.vertices.len() + self.edges.len() + self.faces.len()) as i64 - self.degree() as i64
    }

    pub fn genus(&self) -> usize {
        let chi = self.euler_characteristic();
        debug_assert!(chi <= 2 && chi % 2 == 0, "chi = {chi}");
        ((2 - chi) / 2) as usize
    }

    /// `(alpha^-1, alpha^-1 sigma)`. Shares edges with `self`; vertices and
    /// faces trade places.
    pub fn dual(&self) -> Hypermap {
        let alpha_inv = self.alpha.inverse();
        let sigma = alpha_inv.compose(&self.sigma).expect("same degree");
        Hypermap::from_transitive(alpha_inv, sigma)
    }

    /// `(sigma^-1 alpha, sigma^-1)`. Shares vertices with `self`; edges and
    /// faces trade places.
    pub fn triangle_dual(&self) -> Hypermap {
        let sigma_inv = self.sigma.inverse();
        let alpha = sigma_inv.compose(&self.alpha).expect("same degree");
        Hypermap::from_transitive(alpha, sigma_inv)
    }

    /// `(sigma, alpha)`: vertices and edges trade places.
    pub fn contrary(&self) -> Hypermap {
        Hypermap::from_transitive(self.sigma.clone(), self.alpha.clone())
    }

    /// The contrary map of the triangle dual, `(sigma^-1, sigma^-1 alpha)`.
    pub fn nabla(&self) -> Hypermap {
        self.triangle_dual().contrary()
    }

    /// Whether the nabla map and the triangle dual of the dual have the same
    /// vertex, edge and face partitions.
    pub fn check_nabla_identity(&self) -> bool {
        let nabla = self.nabla();
        let other = self.dual().triangle_dual();
        nabla.vertices.same_partition(&other.vertices)
            && nabla.edges.same_partition(&other.edges)
            && nabla.faces.same_partition(&other.faces)
    }

    /// One dart per edge (or per face): the minimum of each orbit.
    pub fn default_special_darts(&self, kind: SpecialKind) -> SpecialDarts {
        let orbits = self.orbits_for(kind);
        SpecialDarts {
            darts: orbits.iter().map(|c| c[0]).collect(),
            kind,
        }
    }

    fn orbits_for(&self, kind: SpecialKind) -> &CycleDecomposition {
        match kind {
            SpecialKind::PerEdge => &self.edges,
            SpecialKind::PerFace => &self.faces,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SpecialKind {
    /// One dart from every edge; the face-code quotient.
    PerEdge,
    /// One dart from every face; the edge-code quotient.
    PerFace,
}

/// A transversal of the edge orbits or face orbits of a hypermap.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SpecialDarts {
    darts: Vec<usize>,
    kind: SpecialKind,
}

impl SpecialDarts {
    /// Validates that `darts` (0-based) hits every orbit of the given kind exactly once.
    pub fn new(h: &Hypermap, darts: &[usize], kind: SpecialKind) -> Result<Self> {
        let n = h.degree();
        let orbits = h.orbits_for(kind);
        let orbit_of = match kind {
            SpecialKind::PerEdge => &h.edge_of,
            SpecialKind::PerFace => &h.face_of,
        };
        let what = match kind {
            SpecialKind::PerEdge => "edge",
            SpecialKind::PerFace => "face",
        };
        let mut owner: Vec<Option<usize>> = vec![None; orbits.len()];
        for &d in darts {
            if d >= n {
                return Err(Error::InvalidSpecialDarts(format!(
                    "dart {} is out of range 1..={n}",
                    d + 1
                )));
            }
            let k = orbit_of[d];
            if let Some(prev) = owner[k] {
                return Err(Error::InvalidSpecialDarts(format!(
                    "darts {} and {} lie on the same {what}",
                    prev + 1,
                    d + 1
                )));
            }
            owner[k] = Some(d);
        }
        if let Some(k) = owner.iter().position(Option::is_none) {
            let orbit: Vec<String> = orbits.cycles()[k]
                .iter()
                .map(|d| (d + 1).to_string())
                .collect();
            return Err(Error::InvalidSpecialDarts(format!(
                "no special dart on {what} ({})",
                orbit.join(" ")
            )));
        }
        let mut darts = darts.to_vec();
        darts.sort_unstable();
        Ok(SpecialDarts { darts, kind })
    }

    /// Sorted 0-based labels.
    pub fn darts(&self) -> &[usize] {
        &self.darts
    }

    pub fn kind(&self) -> SpecialKind {
        self.kind
    }

    pub fn contains(&self, dart: usize) -> bool {
        self.darts.binary_search(&dart).is_ok()
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// The same darts reinterpreted for another hypermap on the same darts.
    pub fn reinterpret(&self, h: &Hypermap, kind: SpecialKind) -> Result<SpecialDarts> {
        SpecialDarts::new(h, &self.darts, kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn worked() -> Hypermap {
        Hypermap::from_cycle_notation(8, "(4 3 2 1)(5 7 8 6)", "(7 1 6 3)(5 2 8 4)").unwrap()
    }

    fn single() -> Hypermap {
        Hypermap::new(Permutation::identity(1), Permutation::identity(1)).unwrap()
    }

    fn hypermaps() -> impl Strategy<Value = Hypermap> {
        (1usize..=10, any::<u64>()).prop_map(|(n, seed)| Hypermap::random(n, seed))
    }

    #[test]
    fn worked_example_orbits() {
        let h = worked();
        assert_eq!(h.edges().len(), 2);
        assert_eq!(h.vertices().len(), 2);
        assert_eq!(h.faces().len(), 4);
        assert_eq!(
            h.faces().cycles(),
            &[vec![0, 7], vec![1, 6], vec![2, 4], vec![3, 5]]
        );
        assert_eq!(h.euler_characteristic(), 0);
        assert_eq!(h.genus(), 1);
    }

    #[test]
    fn single_dart_is_a_sphere() {
        let h = single();
        assert_eq!(
            (h.vertices().len(), h.edges().len(), h.faces().len()),
            (1, 1, 1)
        );
        assert_eq!(h.euler_characteristic(), 2);
        assert_eq!(h.genus(), 0);
        assert!(h.check_nabla_identity());
        assert_eq!(h.default_special_darts(SpecialKind::PerEdge).darts(), &[0]);
    }

    #[test]
    fn rejects_disconnected_pairs() {
        let id = Permutation::identity(2);
        match Hypermap::new(id.clone(), id) {
            Err(Error::NotTransitive { components }) => {
                assert_eq!(components, vec![vec![0], vec![1]])
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Hypermap::new(Permutation::identity(2), Permutation::identity(3)),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn worked_example_dual() {
        let d = worked().dual();
        assert_eq!(d.alpha().to_cycle_notation(), "(1 2 3 4)(5 6 8 7)");
        assert_eq!(d.sigma().to_cycle_notation(), "(1 8)(2 7)(3 5)(4 6)");
        assert_eq!(d.dual(), worked());
        assert!(worked().check_nabla_identity());
    }

    #[test]
    fn nabla_is_literally_triangle_of_dual() {
        let h = worked();
        assert_eq!(h.nabla(), h.dual().triangle_dual());
        assert_eq!(h.nabla().alpha(), &h.sigma().inverse());
    }

    #[test]
    fn special_darts() {
        let h = worked();
        assert_eq!(
            h.default_special_darts(SpecialKind::PerEdge).darts(),
            &[0, 4]
        );
        let chosen = SpecialDarts::new(&h, &[4, 1], SpecialKind::PerEdge).unwrap();
        assert_eq!(chosen.darts(), &[1, 4]);
        assert!(chosen.contains(4) && !chosen.contains(0));
        assert!(SpecialDarts::new(&h, &[0, 1], SpecialKind::PerEdge).is_err());
        assert!(SpecialDarts::new(&h, &[0], SpecialKind::PerEdge).is_err());
        assert!(SpecialDarts::new(&h, &[0, 8], SpecialKind::PerEdge).is_err());
        assert!(SpecialDarts::new(&h, &[0, 4], SpecialKind::PerFace).is_err());
        assert_eq!(
            h.default_special_darts(SpecialKind::PerFace).darts(),
            &[0, 1, 2, 3]
        );
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(Hypermap::random(9, 42), Hypermap::random(9, 42));
        let h = Hypermap::random(1, 3);
        assert!(h.alpha().is_identity() && h.sigma().is_identity());
    }

    #[test]
    fn random_pairs_are_usually_transitive() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut images: Vec<usize> = (0..8).collect();
        let mut accepted = 0;
        for _ in 0..1000 {
            images.shuffle(&mut rng);
            let a = Permutation::from_images(images.clone()).unwrap();
            images.shuffle(&mut rng);
            let s = Permutation::from_images(images.clone()).unwrap();
            if Hypermap::new(a, s).is_ok() {
                accepted += 1;
            }
        }
        assert!(accepted > 500, "accepted {accepted}/1000");
    }

    proptest! {
        #[test]
        fn euler_characteristic_is_even_and_at_most_two(h in hypermaps()) {
            let chi = h.euler_characteristic();
            prop_assert!(chi % 2 == 0 && chi <= 2);
            prop_assert_eq!(h.dual().euler_characteristic(), chi);
            prop_assert_eq!(h.triangle_dual().euler_characteristic(), chi);
            prop_assert_eq!(h.nabla().euler_characteristic(), chi);
        }

        #[test]
        fn dual_identities(h in hypermaps()) {
            let d = h.dual();
            prop_assert_eq!(&d.dual(), &h);
            prop_assert!(d.edges().same_partition(h.edges()));
            prop_assert!(d.vertices().same_partition(h.faces()));
            prop_assert!(d.faces().same_partition(h.vertices()));
        }

        #[test]
        fn triangle_dual_identities(h in hypermaps()) {
            let t = h.triangle_dual();
            prop_assert_eq!(&t.triangle_dual(), &h);
            prop_assert!(t.faces().same_partition(h.edges()));
            prop_assert!(t.edges().same_partition(h.faces()));
            prop_assert!(t.vertices().same_partition(h.vertices()));
        }

        #[test]
        fn contrary_identities(h in hypermaps()) {
            let c = h.contrary();
            prop_assert_eq!(&c.contrary(), &h);
            prop_assert!(c.vertices().same_partition(h.edges()));
            prop_assert!(c.edges().same_partition(h.vertices()));
            let nabla = h.nabla();
            let dual = h.dual();
            prop_assert!(nabla.edges().same_partition(dual.faces()));
            prop_assert!(nabla.faces().same_partition(dual.edges()));
            prop_assert!(h.check_nabla_identity());
        }

        #[test]
        fn default_special_darts_are_transversals(h in hypermaps()) {
            for kind in [SpecialKind::PerEdge, SpecialKind::PerFace] {
                let s = h.default_special_darts(kind);
                prop_assert!(SpecialDarts::new(&h, s.darts(), kind).is_ok());
            }
            let s = h.default_special_darts(SpecialKind::PerEdge);
            let t = h.triangle_dual();
            prop_assert!(s.reinterpret(&t, SpecialKind::PerFace).is_ok());
            let back = t.default_special_darts(SpecialKind::PerFace);
            prop_assert!(back.reinterpret(&h, SpecialKind::PerEdge).is_ok());
        }

        #[test]
        fn never_accepts_disconnected_pairs(
            (a, s) in (1usize..=8).prop_flat_map(|n| {
                let p = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
                (p.clone(), p)
            })
        ) {
            let a = Permutation::from_images(a).unwrap();
            let s = Permutation::from_images(s).unwrap();
            // Reachability from dart 0 over both permutations and their inverses.
            let n = a.degree();
            let mut seen = vec![false; n];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(x) = stack.pop() {
                for y in [a.apply(x), a.inverse().apply(x), s.apply(x), s.inverse().apply(x)] {
                    if !seen[y] { seen[y] = true; stack.push(y); }
                }
            }
            let connected = seen.iter().all(|&b| b);
            prop_assert_eq!(Hypermap::new(a, s).is_ok(), connected);
        }
    }
}
