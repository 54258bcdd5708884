//! Structural analysis of finite semi-Heyting algebras: subuniverse closure,
//! embedding search, congruence generation, and subdirect irreducibility.

use crate::algebra::SemiHeytingAlgebra;
use crate::config::RunConfig;
use crate::lattice::Elem;
use itertools::Itertools;
use std::collections::{BTreeSet, VecDeque};

/// Refusal reasons for the potentially explosive analyses.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("algebra size {size} exceeds the analysis cap {cap}")]
    SizeAboveCap { size: usize, cap: usize },
}

/// A partition of the element indices that is compatible with all three
/// operations (constants are trivially respected by any partition).
///
/// Stored as a class vector normalized so class ids appear in first-use
/// order; the identity partition is therefore `[0, 1, ..., n-1]` and the
/// total partition is all zeros.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CongruencePartition {
    class: Vec<usize>,
}

impl CongruencePartition {
    fn from_classes(raw: &[usize]) -> Self {
        // normalize ids to first-appearance order
        let mut rename: Vec<Option<usize>> = vec![None; raw.len()];
        let mut next = 0;
        let class = raw
            .iter()
            .map(|&c| {
                *rename[c].get_or_insert_with(|| {
                    let id = next;
                    next += 1;
                    id
                })
            })
            .collect();
        CongruencePartition { class }
    }

    pub fn identity(n: usize) -> Self {
        CongruencePartition {
            class: (0..n).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.class.len()
    }

    pub fn same_block(&self, x: Elem, y: Elem) -> bool {
        self.class[x] == self.class[y]
    }

    pub fn num_blocks(&self) -> usize {
        self.class.iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_identity(&self) -> bool {
        self.num_blocks() == self.size()
    }

    pub fn is_total(&self) -> bool {
        self.num_blocks() <= 1
    }

    /// Blocks as sorted element lists, ordered by least element.
    pub fn blocks(&self) -> Vec<Vec<Elem>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (x, &c) in self.class.iter().enumerate() {
            blocks[c].push(x);
        }
        blocks
    }

    /// True if every block of `self` is inside a block of `coarser`.
    pub fn refines(&self, coarser: &CongruencePartition) -> bool {
        let n = self.size();
        (0..n).all(|x| (0..n).all(|y| !self.same_block(x, y) || coarser.same_block(x, y)))
    }

    /// Common refinement (blockwise intersection); always a congruence when
    /// both inputs are.
    pub fn intersect(&self, other: &CongruencePartition) -> CongruencePartition {
        let n = self.size();
        let mut raw = vec![usize::MAX; n];
        let mut next = 0;
        for x in 0..n {
            if raw[x] != usize::MAX {
                continue;
            }
            raw[x] = next;
            for y in x + 1..n {
                if self.same_block(x, y) && other.same_block(x, y) {
                    raw[y] = next;
                }
            }
            next += 1;
        }
        CongruencePartition::from_classes(&raw)
    }

    /// Exhaustively re-checks operation compatibility.
    pub fn is_compatible_with(&self, a: &SemiHeytingAlgebra) -> bool {
        let n = a.size();
        for x in 0..n {
            for x2 in 0..n {
                if !self.same_block(x, x2) {
                    continue;
                }
                for y in 0..n {
                    for y2 in 0..n {
                        if !self.same_block(y, y2) {
                            continue;
                        }
                        if !self.same_block(a.meet(x, y), a.meet(x2, y2))
                            || !self.same_block(a.join(x, y), a.join(x2, y2))
                            || !self.same_block(a.arrow(x, y), a.arrow(x2, y2))
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

// Plain union-find over element indices.
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx.max(ry)] = rx.min(ry);
        true
    }

    fn into_partition(mut self) -> CongruencePartition {
        let raw: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        CongruencePartition::from_classes(&raw)
    }
}

/// The least congruence identifying every listed pair: merge the pairs, then
/// keep merging whatever the operations force, to a fixpoint.
pub fn generated_congruence(a: &SemiHeytingAlgebra, pairs: &[(Elem, Elem)]) -> CongruencePartition {
    let n = a.size();
    let mut uf = UnionFind::new(n);
    let mut queue: VecDeque<(Elem, Elem)> = VecDeque::new();
    for &(x, y) in pairs {
        if uf.union(x, y) {
            queue.push_back((x, y));
        }
    }
    while let Some((x, y)) = queue.pop_front() {
        for w in 0..n {
            let forced = [
                (a.meet(x, w), a.meet(y, w)),
                (a.join(x, w), a.join(y, w)),
                (a.arrow(x, w), a.arrow(y, w)),
                (a.arrow(w, x), a.arrow(w, y)),
            ];
            for (p, q) in forced {
                if uf.union(p, q) {
                    queue.push_back((p, q));
                }
            }
        }
    }
    uf.into_partition()
}

fn pairs_of(p: &CongruencePartition) -> Vec<(Elem, Elem)> {
    let n = p.size();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if p.same_block(x, y) {
                out.push((x, y));
            }
        }
    }
    out
}

/// All congruences, sorted: the identity, every principal congruence, and the
/// closure of those under pairwise join.
pub fn congruences(
    a: &SemiHeytingAlgebra,
    config: &RunConfig,
) -> Result<Vec<CongruencePartition>, StructureError> {
    let n = a.size();
    let cap = config.max_enumeration_size;
    if n > cap {
        return Err(StructureError::SizeAboveCap { size: n, cap });
    }
    let mut found: BTreeSet<CongruencePartition> = BTreeSet::new();
    found.insert(CongruencePartition::identity(n));
    for x in 0..n {
        for y in x + 1..n {
            found.insert(generated_congruence(a, &[(x, y)]));
        }
    }
    // join closure: the join of two congruences is generated by their pairs
    loop {
        let snapshot: Vec<_> = found.iter().cloned().collect();
        let mut grew = false;
        for p in &snapshot {
            for q in &snapshot {
                let mut pairs = pairs_of(p);
                pairs.extend(pairs_of(q));
                let join = generated_congruence(a, &pairs);
                if found.insert(join) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    // finest first: the identity leads, the total partition closes the list
    let mut out: Vec<_> = found.into_iter().collect();
    out.sort_by_key(|p| (p.size() - p.num_blocks(), p.class.clone()));
    Ok(out)
}

/// Subdirect-irreducibility verdict with the evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiReport {
    pub subdirectly_irreducible: bool,
    /// The least non-identity congruence, when there is one.
    pub monolith: Option<CongruencePartition>,
    /// Set for degenerate input (the one-element algebra).
    pub note: Option<&'static str>,
}

/// An algebra is subdirectly irreducible when its non-identity congruences
/// have a least element; the one-element algebra is not, by convention.
pub fn is_subdirectly_irreducible(
    a: &SemiHeytingAlgebra,
    config: &RunConfig,
) -> Result<SiReport, StructureError> {
    if a.size() == 1 {
        return Ok(SiReport {
            subdirectly_irreducible: false,
            monolith: None,
            note: Some("one-element algebra: not subdirectly irreducible by convention"),
        });
    }
    let all = congruences(a, config)?;
    let nontrivial: Vec<_> = all.iter().filter(|p| !p.is_identity()).collect();
    let least = nontrivial
        .iter()
        .fold(None::<CongruencePartition>, |acc, p| match acc {
            None => Some((*p).clone()),
            Some(m) => Some(m.intersect(p)),
        });
    match least {
        Some(m) if !m.is_identity() => Ok(SiReport {
            subdirectly_irreducible: true,
            monolith: Some(m),
            note: None,
        }),
        _ => Ok(SiReport {
            subdirectly_irreducible: false,
            monolith: None,
            note: None,
        }),
    }
}

/// Least subset containing `seed` and the bounds, closed under the three
/// operations.
pub fn subuniverse_closure(a: &SemiHeytingAlgebra, seed: &BTreeSet<Elem>) -> BTreeSet<Elem> {
    let mut set: BTreeSet<Elem> = seed.clone();
    set.insert(a.bottom());
    set.insert(a.top());
    loop {
        let mut grew = false;
        let current: Vec<Elem> = set.iter().copied().collect();
        for &x in &current {
            for &y in &current {
                for v in [a.meet(x, y), a.join(x, y), a.arrow(x, y)] {
                    grew |= set.insert(v);
                }
            }
        }
        if !grew {
            break;
        }
    }
    set
}

/// A map between algebras, `map[x]` being the image of `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    pub map: Vec<Elem>,
}

impl Homomorphism {
    /// Exhaustively checks preservation of meet, join, arrow, and bounds.
    pub fn preserves(&self, a: &SemiHeytingAlgebra, b: &SemiHeytingAlgebra) -> bool {
        let f = &self.map;
        if f.len() != a.size() || f.iter().any(|&v| v >= b.size()) {
            return false;
        }
        if f[a.bottom()] != b.bottom() || f[a.top()] != b.top() {
            return false;
        }
        for x in 0..a.size() {
            for y in 0..a.size() {
                if f[a.meet(x, y)] != b.meet(f[x], f[y])
                    || f[a.join(x, y)] != b.join(f[x], f[y])
                    || f[a.arrow(x, y)] != b.arrow(f[x], f[y])
                {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.map.iter().all(|&v| seen.insert(v))
    }
}

/// The lexicographically first injective homomorphism from `a` into `b`, if
/// any exists.
pub fn find_embedding(a: &SemiHeytingAlgebra, b: &SemiHeytingAlgebra) -> Option<Homomorphism> {
    if a.size() > b.size() {
        return None;
    }
    // k-permutations of b's elements come out of itertools in lexicographic
    // order, so the first full check to succeed is the lexicographic minimum
    (0..b.size())
        .permutations(a.size())
        .map(|map| Homomorphism { map })
        .find(|h| h.preserves(a, b))
}

/// True when the two algebras differ only by a relabeling.
pub fn is_isomorphic(a: &SemiHeytingAlgebra, b: &SemiHeytingAlgebra) -> bool {
    a.size() == b.size() && find_embedding(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{corpus, corpus_algebra};
    use crate::lattice::make_chain;

    fn cfg() -> RunConfig {
        RunConfig::default()
    }

    #[test]
    fn constants_generate_the_two_element_subuniverse() {
        let csh3 = corpus_algebra("CSH3").unwrap();
        assert_eq!(
            subuniverse_closure(&csh3, &BTreeSet::new()),
            BTreeSet::from([0, 2])
        );
        let l1 = corpus_algebra("L1").unwrap();
        assert_eq!(
            subuniverse_closure(&l1, &BTreeSet::new()),
            BTreeSet::from([0, 2])
        );
        for a in corpus() {
            let all: BTreeSet<Elem> = (0..a.size()).collect();
            assert_eq!(subuniverse_closure(&a, &all), all, "{:?}", a.name());
        }
    }

    #[test]
    fn embedding_examples() {
        let twobar = corpus_algebra("2bar").unwrap();
        let two = corpus_algebra("2").unwrap();
        let csh3 = corpus_algebra("CSH3").unwrap();
        assert_eq!(
            find_embedding(&twobar, &csh3),
            Some(Homomorphism { map: vec![0, 2] })
        );
        assert_eq!(find_embedding(&two, &csh3), None);
        for a in corpus() {
            let id = find_embedding(&a, &a).expect("identity embedding");
            // the identity is lexicographically first among self-embeddings
            assert_eq!(id.map, (0..a.size()).collect::<Vec<_>>(), "{:?}", a.name());
        }
    }

    #[test]
    fn hom_checks_reject_non_homomorphisms() {
        let two = corpus_algebra("2").unwrap();
        let twobar = corpus_algebra("2bar").unwrap();
        let f = Homomorphism { map: vec![0, 1] };
        assert!(f.preserves(&two, &two));
        assert!(!f.preserves(&two, &twobar), "0 -> 1 differs");
        let swap = Homomorphism { map: vec![1, 0] };
        assert!(!swap.preserves(&two, &two), "must fix the bounds");
    }

    #[test]
    fn congruence_counts_on_corpus() {
        let twobar = corpus_algebra("2bar").unwrap();
        let cs = congruences(&twobar, &cfg()).unwrap();
        assert_eq!(cs.len(), 2);
        assert!(cs[0].is_identity() && cs[1].is_total());

        let csh3 = corpus_algebra("CSH3").unwrap();
        let cs = congruences(&csh3, &cfg()).unwrap();
        assert_eq!(cs.len(), 3);
        let middle = cs.iter().find(|p| !p.is_identity() && !p.is_total()).unwrap();
        assert_eq!(middle.blocks(), vec![vec![0], vec![1, 2]]);

        let one = crate::algebra::SemiHeytingAlgebra::new(make_chain(1).unwrap(), vec![vec![0]])
            .unwrap();
        assert_eq!(congruences(&one, &cfg()).unwrap().len(), 1);
    }

    #[test]
    fn congruences_are_compatible_and_closed() {
        for a in corpus() {
            let cs = congruences(&a, &cfg()).unwrap();
            for p in &cs {
                assert!(p.is_compatible_with(&a), "{:?} {:?}", a.name(), p);
            }
            // closed under intersection and join
            for p in &cs {
                for q in &cs {
                    assert!(cs.contains(&p.intersect(q)), "{:?} meet", a.name());
                    let mut pairs = pairs_of(p);
                    pairs.extend(pairs_of(q));
                    assert!(
                        cs.contains(&generated_congruence(&a, &pairs)),
                        "{:?} join",
                        a.name()
                    );
                }
            }
        }
    }

    #[test]
    fn congruence_cap_is_enforced() {
        let mut tiny = cfg();
        tiny.max_enumeration_size = 2;
        let csh3 = corpus_algebra("CSH3").unwrap();
        assert_eq!(
            congruences(&csh3, &tiny),
            Err(StructureError::SizeAboveCap { size: 3, cap: 2 })
        );
    }

    #[test]
    fn subdirect_irreducibility_verdicts() {
        let twobar = corpus_algebra("2bar").unwrap();
        let r = is_subdirectly_irreducible(&twobar, &cfg()).unwrap();
        assert!(r.subdirectly_irreducible);
        assert!(r.monolith.unwrap().is_total());

        let csh3 = corpus_algebra("CSH3").unwrap();
        let r = is_subdirectly_irreducible(&csh3, &cfg()).unwrap();
        assert!(r.subdirectly_irreducible);
        assert_eq!(r.monolith.unwrap().blocks(), vec![vec![0], vec![1, 2]]);

        let one = crate::algebra::SemiHeytingAlgebra::new(make_chain(1).unwrap(), vec![vec![0]])
            .unwrap();
        let r = is_subdirectly_irreducible(&one, &cfg()).unwrap();
        assert!(!r.subdirectly_irreducible);
        assert!(r.note.is_some());
    }

    #[test]
    fn isomorphism_is_relabeling_only() {
        let two = corpus_algebra("2").unwrap();
        let twobar = corpus_algebra("2bar").unwrap();
        assert!(is_isomorphic(&two, &two));
        assert!(!is_isomorphic(&two, &twobar));
        assert!(!is_isomorphic(&two, &corpus_algebra("L1").unwrap()));
    }
}
