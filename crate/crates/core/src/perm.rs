//! Permutations of `{0..n-1}` and their cycle structure.
//!
//! Composition is left to right: `p.compose(&q)` is "apply `p`, then `q`",
//! so `p.compose(&q)[i] == q[p[i]]`. Every derived permutation in the crate
//! (`alpha^-1 sigma`, `sigma^-1 alpha`, ...) is built with this convention.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{0..n-1}`; position `i` holds the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations need at least one point");
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image table.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &img) in images.iter().enumerate() {
            if img >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {img} of {i} is out of range for degree {n}"
                )));
            }
            if std::mem::replace(&mut seen[img], true) {
                return Err(Error::InvalidPermutation(format!("{img} is hit twice")));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of degree `n` from 0-based cycles. Points not
    /// mentioned are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (k, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(Error::InvalidPermutation(format!(
                        "label {x} out of range for degree {n}"
                    )));
                }
                if std::mem::replace(&mut used[x], true) {
                    return Err(Error::InvalidPermutation(format!("label {x} repeated")));
                }
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `"(4 3 2 1)(5 7 8 6)"`.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self> {
        parse_cycle_notation(text, n, 1, 1)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// Canonical cycle decomposition: each cycle starts at its minimum and
    /// cycles are ordered by minimum. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        // Scanning starts in increasing order, so each cycle is discovered
        // from its minimum and the list comes out sorted.
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        CycleDecomposition { degree: n, cycles }
    }

    /// 1-based cycle notation, omitting fixed points. The identity renders as `"()"`.
    pub fn to_cycle_notation(&self) -> String {
        let text: String = self
            .cycles()
            .iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                format!("({})", inner.join(" "))
            })
            .collect();
        if text.is_empty() {
            "()".to_string()
        } else {
            text
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_notation())
    }
}

/// Orbits of a single permutation, in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycleDecomposition {
    degree: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vec<usize>> {
        self.cycles.iter()
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// `index[i]` is the position of the cycle containing `i`.
    pub fn orbit_index(&self) -> Vec<usize> {
        let mut index = vec![0; self.degree];
        for (k, cycle) in self.cycles.iter().enumerate() {
            for &x in cycle {
                index[x] = k;
            }
        }
        index
    }

    /// The orbits as a set partition: each block sorted, blocks ordered by
    /// minimum. Cyclic order is forgotten.
    pub fn partition(&self) -> Vec<Vec<usize>> {
        // Blocks already start with their minimum and are sorted by it.
        self.cycles
            .iter()
            .map(|c| {
                let mut block = c.clone();
                block.sort_unstable();
                block
            })
            .collect()
    }

    /// Equality of the underlying set partitions.
    pub fn same_partition(&self, other: &CycleDecomposition) -> bool {
        self.degree == other.degree && self.partition() == other.partition()
    }
}

impl<'a> IntoIterator for &'a CycleDecomposition {
    type Item = &'a Vec<usize>;
    type IntoIter = std::slice::Iter<'a, Vec<usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.cycles.iter()
    }
}

/// Orbits of the group generated by `p` and `q`, each sorted, ordered by minimum.
pub fn joint_orbits(p: &Permutation, q: &Permutation) -> Result<Vec<Vec<usize>>> {
    p.check_degree(q)?;
    let n = p.degree();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for perm in [p, q] {
        for i in 0..n {
            let a = find(&mut parent, i);
            let b = find(&mut parent, perm.apply(i));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of_root = vec![usize::MAX; n];
    for i in 0..n {
        let root = find(&mut parent, i);
        if block_of_root[root] == usize::MAX {
            block_of_root[root] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[block_of_root[root]].push(i);
    }
    Ok(blocks)
}

/// Whether `<p, q>` acts transitively on the points.
pub fn is_transitive(p: &Permutation, q: &Permutation) -> Result<bool> {
    Ok(joint_orbits(p, q)?.len() == 1)
}

/// Parses 1-based cycle notation. `line` and `column` locate `text` in its
/// source for error reporting.
pub(crate) fn parse_cycle_notation(
    text: &str,
    n: usize,
    line: usize,
    column: usize,
) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::parse(line, column, "degree must be at least 1"));
    }
    let mut images: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    let bytes = text.as_bytes();
    let mut pos = 0;
    let col = |pos: usize| column + pos;

    while pos < bytes.len() {
        match bytes[pos] {
            b' ' | b'\t' => pos += 1,
            b'(' => {
                pos += 1;
                let mut cycle: Vec<usize> = Vec::new();
                loop {
                    while pos < bytes.len() && matches!(bytes[pos], b' ' | b'\t' | b',') {
                        pos += 1;
                    }
                    if pos >= bytes.len() {
                        return Err(Error::parse(line, col(pos), "unclosed cycle"));
                    }
                    if bytes[pos] == b')' {
                        pos += 1;
                        break;
                    }
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if start == pos {
                        return Err(Error::parse(
                            line,
                            col(start),
                            format!(
                                "unexpected character '{}'",
                                text[start..].chars().next().unwrap()
                            ),
                        ));
                    }
                    let label: usize = text[start..pos]
                        .parse()
                        .map_err(|_| Error::parse(line, col(start), "label too large"))?;
                    if label == 0 || label > n {
                        return Err(Error::parse(
                            line,
                            col(start),
                            format!("label {label} out of range 1..={n}"),
                        ));
                    }
                    let x = label - 1;
                    if std::mem::replace(&mut used[x], true) {
                        return Err(Error::parse(
                            line,
                            col(start),
                            format!("label {label} appears more than once"),
                        ));
                    }
                    cycle.push(x);
                }
                for (k, &x) in cycle.iter().enumerate() {
                    images[x] = cycle[(k + 1) % cycle.len()];
                }
            }
            _ => {
                return Err(Error::parse(
                    line,
                    col(pos),
                    format!(
                        "expected '(', found '{}'",
                        text[pos..].chars().next().unwrap()
                    ),
                ))
            }
        }
    }
    Ok(Permutation { images })
}

#[cfg(test)]
mod tests {
    // Oracles index directly, like the textbook definitions.
    #![allow(clippy::needless_range_loop)]

    use super::*;
    use proptest::prelude::*;
    use std::collections::VecDeque;

    fn alpha() -> Permutation {
        Permutation::parse_cycles("(4 3 2 1)(5 7 8 6)", 8).unwrap()
    }

    fn sigma() -> Permutation {
        Permutation::parse_cycles("(7 1 6 3)(5 2 8 4)", 8).unwrap()
    }

    fn naive_compose(p: &[usize], q: &[usize]) -> Vec<usize> {
        let mut out = vec![0; p.len()];
        for i in 0..p.len() {
            for j in 0..q.len() {
                if j == p[i] {
                    out[i] = q[j];
                }
            }
        }
        out
    }

    fn bfs_transitive(p: &Permutation, q: &Permutation) -> bool {
        let (pi, qi) = (p.inverse(), q.inverse());
        let n = p.degree();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for y in [p.apply(x), pi.apply(x), q.apply(x), qi.apply(x)] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn perm_strategy(max_n: usize) -> impl Strategy<Value = Permutation> {
        (1..=max_n).prop_flat_map(perm_of_degree)
    }

    fn perm_of_degree(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    #[test]
    fn faces_of_worked_example() {
        let faces = alpha().inverse().compose(&sigma()).unwrap();
        assert_eq!(faces.to_cycle_notation(), "(1 8)(2 7)(3 5)(4 6)");
        assert_eq!(
            faces.cycles().cycles(),
            &[vec![0, 7], vec![1, 6], vec![2, 4], vec![3, 5]]
        );
    }

    #[test]
    fn inverse_of_alpha_maps_one_to_two() {
        assert_eq!(alpha().apply(1), 0);
        assert_eq!(alpha().inverse().apply(0), 1);
    }

    #[test]
    fn identity_cases() {
        let id = Permutation::identity(8);
        assert_eq!(id.compose(&sigma()).unwrap(), sigma());
        assert_eq!(id.inverse(), id);
        assert_eq!(
            Permutation::identity(3).cycles().cycles(),
            &[vec![0], vec![1], vec![2]]
        );
        assert_eq!(id.to_cycle_notation(), "()");
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = Permutation::identity(2).compose(&Permutation::identity(3));
        assert_eq!(err, Err(Error::DegreeMismatch { left: 2, right: 3 }));
        assert!(is_transitive(&Permutation::identity(2), &Permutation::identity(3)).is_err());
    }

    #[test]
    fn transitivity_examples() {
        assert!(is_transitive(&alpha(), &sigma()).unwrap());
        let id = Permutation::identity(2);
        assert!(!is_transitive(&id, &id).unwrap());
        assert_eq!(joint_orbits(&id, &id).unwrap(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn parse_errors_carry_columns() {
        match Permutation::parse_cycles("(1 2)(2 3)", 3) {
            Err(Error::Parse {
                line: 1, column: 7, ..
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Permutation::parse_cycles("(1 4)", 3),
            Err(Error::Parse { column: 4, .. })
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1 2", 3),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Permutation::parse_cycles("1 2", 3),
            Err(Error::Parse { column: 1, .. })
        ));
        assert_eq!(
            Permutation::parse_cycles("", 3).unwrap(),
            Permutation::identity(3)
        );
        assert_eq!(
            Permutation::parse_cycles("()", 3).unwrap(),
            Permutation::identity(3)
        );
    }

    #[test]
    fn from_images_validates() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![2, 0]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    proptest! {
        #[test]
        fn compose_matches_naive_and_inverse_cancels(p in perm_strategy(12)) {
            let q = p.inverse();
            let pq = p.compose(&q).unwrap();
            prop_assert_eq!(pq.images().to_vec(), naive_compose(p.images(), q.images()));
            prop_assert!(pq.is_identity());
            prop_assert_eq!(q.inverse(), p);
        }

        #[test]
        fn compose_is_associative(
            (a, b, c) in (1usize..=12).prop_flat_map(|n| (perm_of_degree(n), perm_of_degree(n), perm_of_degree(n)))
        ) {
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(left.images().to_vec(), naive_compose(&naive_compose(a.images(), b.images()), c.images()));
            prop_assert_eq!(left, right);
        }

        #[test]
        fn cycles_reproduce_images(p in perm_strategy(12)) {
            let dec = p.cycles();
            prop_assert_eq!(&dec, &p.cycles());
            let mut covered: Vec<usize> = dec.iter().flatten().copied().collect();
            covered.sort_unstable();
            prop_assert_eq!(covered, (0..p.degree()).collect::<Vec<_>>());
            for cycle in &dec {
                prop_assert_eq!(cycle[0], *cycle.iter().min().unwrap());
                for k in 0..cycle.len() {
                    prop_assert_eq!(p.apply(cycle[k]), cycle[(k + 1) % cycle.len()]);
                }
            }
            let rebuilt = Permutation::from_cycles(p.degree(), dec.cycles()).unwrap();
            prop_assert_eq!(&rebuilt, &p);
            prop_assert_eq!(Permutation::parse_cycles(&p.to_cycle_notation(), p.degree()).unwrap(), p);
        }

        #[test]
        fn transitivity_matches_bfs(
            (p, q) in (1usize..=10).prop_flat_map(|n| (perm_of_degree(n), perm_of_degree(n)))
        ) {
            let t = is_transitive(&p, &q).unwrap();
            prop_assert_eq!(t, bfs_transitive(&p, &q));
            prop_assert_eq!(t, is_transitive(&q, &p).unwrap());
            prop_assert_eq!(t, is_transitive(&p.inverse(), &q).unwrap());
            prop_assert_eq!(t, is_transitive(&p, &q.inverse()).unwrap());
        }
    }
}
