//! Distance graphs on codes, bipartiteness with odd-cycle witnesses, and
//! enumeration of code splits.
//!
//! Splitting a (multi)set of words into two distance-3 codes is exactly a
//! proper 2-coloring of its graph of distances 1 and 2 — with the twist that
//! the two copies of a multiplicity-2 word must land in different parts, and
//! multiplicity 3 or more can never be split. The coloring is canonical: in
//! every connected component the lexicographically smallest vertex gets color
//! 0, so runs are reproducible and all 2^ν orientations can be enumerated in
//! a fixed order.

use std::collections::HashMap;
use std::fmt;

use crate::code::BinaryCode;
use crate::distrib::WordCollection;
use crate::error::{Error, Result};
use crate::word::{hamming_distance, BinaryWord};

/// Undirected graph on the words of a (multi)set code, with edges between
/// words at a prescribed set of distances.
#[derive(Clone, Debug)]
pub struct DistanceGraph {
    words: Vec<BinaryWord>,
    multiplicities: Vec<u32>,
    distances: Vec<u32>,
    adjacency: Vec<Vec<u32>>,
    component: Vec<u32>,
    component_count: u32,
}

/// Enumerate all masks of weight `k` over `n` bits in increasing numeric
/// order (Gosper's hack).
fn for_each_weight_mask(n: u32, k: u32, mut f: impl FnMut(u64)) {
    debug_assert!(k >= 1 && k <= n);
    let limit = 1u64 << n;
    let mut v = (1u64 << k) - 1;
    while v < limit {
        f(v);
        let c = v & v.wrapping_neg();
        let r = v + c;
        if r >= limit {
            break;
        }
        v = (((r ^ v) >> 2) / c) | r;
    }
}

/// Build the graph of the given distances over a code or multiset.
pub fn build_graph(code: &impl WordCollection, distances: &[u32]) -> Result<DistanceGraph> {
    if code.total() == 0 {
        return Err(Error::usage("cannot build a graph on an empty code"));
    }
    let n = code.length();
    let mut dist: Vec<u32> = distances.to_vec();
    dist.sort_unstable();
    dist.dedup();
    if dist.is_empty() {
        return Err(Error::usage("distance set must be nonempty"));
    }
    if dist.iter().any(|&d| d == 0 || d > n) {
        return Err(Error::usage(format!("distances must lie in 1..={n}")));
    }
    let mut words = Vec::new();
    let mut multiplicities = Vec::new();
    code.for_each(|x, m| {
        words.push(*x);
        multiplicities.push(m);
    });
    // vertex order must be lexicographic whatever order the collection
    // iterates in
    if !words.windows(2).all(|w| w[0] < w[1]) {
        let mut paired: Vec<(BinaryWord, u32)> = words
            .iter()
            .copied()
            .zip(multiplicities.iter().copied())
            .collect();
        paired.sort_by_key(|&(w, _)| w);
        words = paired.iter().map(|&(w, _)| w).collect();
        multiplicities = paired.iter().map(|&(_, m)| m).collect();
    }
    let index: HashMap<u64, u32> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.bits(), i as u32))
        .collect();
    let mut adjacency: Vec<Vec<u32>> = vec![Vec::new(); words.len()];
    for (i, w) in words.iter().enumerate() {
        for &d in &dist {
            for_each_weight_mask(n, d, |mask| {
                if let Some(&j) = index.get(&(w.bits() ^ mask)) {
                    adjacency[i].push(j);
                }
            });
        }
        adjacency[i].sort_unstable();
    }
    let (component, component_count) = components(&adjacency);
    Ok(DistanceGraph {
        words,
        multiplicities,
        distances: dist,
        adjacency,
        component,
        component_count,
    })
}

fn components(adjacency: &[Vec<u32>]) -> (Vec<u32>, u32) {
    let mut component = vec![u32::MAX; adjacency.len()];
    let mut count = 0u32;
    for seed in 0..adjacency.len() {
        if component[seed] != u32::MAX {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([seed as u32]);
        component[seed] = count;
        while let Some(u) = queue.pop_front() {
            for &v in &adjacency[u as usize] {
                if component[v as usize] == u32::MAX {
                    component[v as usize] = count;
                    queue.push_back(v);
                }
            }
        }
        count += 1;
    }
    (component, count)
}

impl DistanceGraph {
    pub fn vertex_count(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[BinaryWord] {
        &self.words
    }

    pub fn multiplicity(&self, v: usize) -> u32 {
        self.multiplicities[v]
    }

    pub fn distances(&self) -> &[u32] {
        &self.distances
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    /// Number of connected components ν.
    pub fn nu(&self) -> u32 {
        self.component_count
    }

    pub fn component(&self, v: usize) -> u32 {
        self.component[v]
    }

    /// Component sizes indexed by component id (components are numbered by
    /// their lexicographically smallest vertex).
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.component_count as usize];
        for &c in &self.component {
            sizes[c as usize] += 1;
        }
        sizes
    }

    /// Check that a word sequence is a genuine odd cycle of this graph:
    /// odd length at least 3, every word present, and every consecutive pair
    /// (wrapping around) either at an in-set distance or a repeated
    /// multiplicity-≥2 word.
    pub fn validates_odd_cycle(&self, cycle: &[BinaryWord]) -> bool {
        if cycle.len() < 3 || cycle.len() % 2 == 0 {
            return false;
        }
        let lookup = |w: &BinaryWord| -> Option<usize> { self.words.binary_search(w).ok() };
        for (k, w) in cycle.iter().enumerate() {
            let Some(i) = lookup(w) else { return false };
            let next = &cycle[(k + 1) % cycle.len()];
            if w == next {
                if self.multiplicities[i] < 2 {
                    return false;
                }
                continue;
            }
            if !self.distances.contains(&hamming_distance(w, next)) {
                return false;
            }
        }
        true
    }
}

/// A successful split into two distance-compatible parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSplit {
    pub part_a: BinaryCode,
    pub part_b: BinaryCode,
    /// Number of connected components of the graph that was colored.
    pub nu: u32,
}

/// An odd cycle certifying non-bipartiteness. Consecutive words are at an
/// in-set distance; a repeated word stands for the two copies of a
/// multiplicity-2 codeword.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCycle {
    pub words: Vec<BinaryWord>,
}

impl OddCycle {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

impl fmt::Display for OddCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ODD_CYCLE {}", self.words.len())?;
        for w in &self.words {
            writeln!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Outcome of a splitting attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitResult {
    Split(CodeSplit),
    OddCycle(OddCycle),
}

impl SplitResult {
    pub fn split(&self) -> Option<&CodeSplit> {
        match self {
            SplitResult::Split(s) => Some(s),
            SplitResult::OddCycle(_) => None,
        }
    }

    pub fn odd_cycle(&self) -> Option<&OddCycle> {
        match self {
            SplitResult::Split(_) => None,
            SplitResult::OddCycle(c) => Some(c),
        }
    }
}

pub(crate) struct Coloring {
    pub colors: Vec<u8>,
    pub component: Vec<u32>,
    pub component_count: u32,
}

pub(crate) enum ColorOutcome {
    Bipartite(Coloring),
    /// Vertex indices of an odd cycle (consecutive entries adjacent,
    /// wrapping).
    OddCycle(Vec<u32>),
}

/// BFS 2-coloring with seeds in index order; each component's seed (its
/// smallest vertex index) gets color 0. On a conflict the odd cycle is
/// extracted from the BFS tree, trimmed at the lowest common ancestor.
pub(crate) fn two_color(adjacency: &[Vec<u32>]) -> ColorOutcome {
    let n = adjacency.len();
    let mut colors = vec![u8::MAX; n];
    let mut component = vec![u32::MAX; n];
    let mut parent = vec![u32::MAX; n];
    let mut depth = vec![0u32; n];
    let mut count = 0u32;
    for seed in 0..n {
        if colors[seed] != u8::MAX {
            continue;
        }
        colors[seed] = 0;
        component[seed] = count;
        parent[seed] = seed as u32;
        depth[seed] = 0;
        let mut queue = std::collections::VecDeque::from([seed as u32]);
        while let Some(u) = queue.pop_front() {
            for &v in &adjacency[u as usize] {
                if colors[v as usize] == u8::MAX {
                    colors[v as usize] = 1 - colors[u as usize];
                    component[v as usize] = count;
                    parent[v as usize] = u;
                    depth[v as usize] = depth[u as usize] + 1;
                    queue.push_back(v);
                } else if colors[v as usize] == colors[u as usize] && u != v {
                    return ColorOutcome::OddCycle(extract_cycle(&parent, &depth, u, v));
                }
            }
        }
        count += 1;
    }
    ColorOutcome::Bipartite(Coloring {
        colors,
        component,
        component_count: count,
    })
}

fn extract_cycle(parent: &[u32], depth: &[u32], u: u32, v: u32) -> Vec<u32> {
    let mut a = u;
    let mut b = v;
    let mut a_path = vec![a];
    let mut b_path = vec![b];
    while depth[a as usize] > depth[b as usize] {
        a = parent[a as usize];
        a_path.push(a);
    }
    while depth[b as usize] > depth[a as usize] {
        b = parent[b as usize];
        b_path.push(b);
    }
    while a != b {
        a = parent[a as usize];
        b = parent[b as usize];
        a_path.push(a);
        b_path.push(b);
    }
    // a_path ends at the common ancestor; b_path's copy of it is dropped
    b_path.pop();
    b_path.reverse();
    a_path.extend(b_path);
    a_path
}

/// 2-color a distance graph. On success the color classes are returned as
/// plain codes, with every multiplicity-2 word present in both parts; on
/// failure an odd cycle is returned. Words of multiplicity 3 or more, or a
/// multiplicity-2 word with any neighbor, make the expanded graph contain a
/// short odd cycle directly.
pub fn bipartition(graph: &DistanceGraph) -> SplitResult {
    for (i, &m) in graph.multiplicities.iter().enumerate() {
        let w = graph.words[i];
        if m >= 3 {
            return SplitResult::OddCycle(OddCycle {
                words: vec![w, w, w],
            });
        }
        if m == 2 {
            if let Some(&j) = graph.adjacency[i].first() {
                return SplitResult::OddCycle(OddCycle {
                    words: vec![w, w, graph.words[j as usize]],
                });
            }
        }
    }
    match two_color(&graph.adjacency) {
        ColorOutcome::OddCycle(indices) => SplitResult::OddCycle(OddCycle {
            words: indices
                .into_iter()
                .map(|i| graph.words[i as usize])
                .collect(),
        }),
        ColorOutcome::Bipartite(coloring) => {
            let n = graph.words[0].length();
            let mut part_a = Vec::new();
            let mut part_b = Vec::new();
            for (i, &w) in graph.words.iter().enumerate() {
                let doubled = graph.multiplicities[i] == 2;
                if coloring.colors[i] == 0 || doubled {
                    part_a.push(w);
                }
                if coloring.colors[i] == 1 || doubled {
                    part_b.push(w);
                }
            }
            SplitResult::Split(CodeSplit {
                part_a: BinaryCode::from_words(n, part_a).expect("lengths equal"),
                part_b: BinaryCode::from_words(n, part_b).expect("lengths equal"),
                nu: coloring.component_count,
            })
        }
    }
}

/// Split a code into two distance-3 codes via its graph of distances 1
/// and 2, or certify non-splittability with an odd cycle.
pub fn split_code(code: &BinaryCode) -> Result<SplitResult> {
    let graph = build_graph(code, &[1, 2])?;
    let result = bipartition(&graph);
    if let SplitResult::Split(split) = &result {
        // distances 1 and 2 are exactly the edges, so a proper coloring
        // forces distance >= 3 in both parts
        for part in [&split.part_a, &split.part_b] {
            if let Some(d) = part.code_distance() {
                if d < 3 {
                    return Err(Error::internal(format!(
                        "proper 2-coloring produced a part with distance {d}"
                    )));
                }
            }
        }
    }
    Ok(result)
}

/// Component statistics of a distance graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentStats {
    pub nu: u32,
    pub min_size: usize,
    /// (component size, number of components of that size), ascending.
    pub histogram: Vec<(usize, usize)>,
}

pub fn component_stats(graph: &DistanceGraph) -> ComponentStats {
    let sizes = graph.component_sizes();
    let mut histogram: HashMap<usize, usize> = HashMap::new();
    for &s in &sizes {
        *histogram.entry(s).or_insert(0) += 1;
    }
    let mut histogram: Vec<(usize, usize)> = histogram.into_iter().collect();
    histogram.sort_unstable();
    ComponentStats {
        nu: graph.nu(),
        min_size: sizes.iter().copied().min().unwrap_or(0),
        histogram,
    }
}

/// Deterministic enumeration of the 2^ν ordered splits of a bipartite
/// distance-{1,2} graph: orientation flips are counted in binary over
/// components ordered by their smallest vertex.
pub struct SplitEnumeration {
    words: Vec<BinaryWord>,
    colors: Vec<u8>,
    component: Vec<u32>,
    nu: u32,
    next: u64,
    limit: u64,
}

impl SplitEnumeration {
    /// Total number of ordered splits, 2^ν.
    pub fn total(&self) -> u128 {
        1u128 << self.nu
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }
}

impl Iterator for SplitEnumeration {
    type Item = (BinaryCode, BinaryCode);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.limit {
            return None;
        }
        let t = self.next;
        self.next += 1;
        let n = self.words[0].length();
        let mut part_a = Vec::new();
        let mut part_b = Vec::new();
        for (i, &w) in self.words.iter().enumerate() {
            let flip = (t >> self.component[i]) & 1 == 1;
            if (self.colors[i] == 1) ^ flip {
                part_b.push(w);
            } else {
                part_a.push(w);
            }
        }
        Some((
            BinaryCode::from_words(n, part_a).expect("lengths equal"),
            BinaryCode::from_words(n, part_b).expect("lengths equal"),
        ))
    }
}

/// Enumerate the ordered splits of `code` (graph of distances 1 and 2),
/// up to `cap` of them.
pub fn enumerate_splits(code: &BinaryCode, cap: u64) -> Result<SplitEnumeration> {
    if cap < 1 {
        return Err(Error::usage("cap must be at least 1"));
    }
    let graph = build_graph(code, &[1, 2])?;
    if graph.multiplicities.iter().any(|&m| m != 1) {
        return Err(Error::usage("split enumeration expects a plain code"));
    }
    match two_color(&graph.adjacency) {
        ColorOutcome::OddCycle(_) => Err(Error::precondition(
            "code is not splittable, nothing to enumerate",
        )),
        ColorOutcome::Bipartite(coloring) => {
            let nu = coloring.component_count;
            if nu >= 64 {
                return Err(Error::usage(format!(
                    "2^{nu} splits cannot be indexed by a 64-bit counter"
                )));
            }
            let limit = (1u64 << nu).min(cap);
            Ok(SplitEnumeration {
                words: graph.words,
                colors: coloring.colors,
                component: coloring.component,
                nu,
                next: 0,
                limit,
            })
        }
    }
}

/// Shortest odd cycle of the graph, if any: BFS from every vertex, taking
/// the best conflict edge; deterministic because roots and edges are scanned
/// in index order and only strict improvements are kept. Multiplicity-based
/// conflicts (a doubled word with a neighbor, or multiplicity ≥ 3) are
/// length-3 cycles and returned immediately.
pub fn shortest_odd_cycle(graph: &DistanceGraph) -> Option<OddCycle> {
    for (i, &m) in graph.multiplicities.iter().enumerate() {
        let w = graph.words[i];
        if m >= 3 {
            return Some(OddCycle {
                words: vec![w, w, w],
            });
        }
        if m == 2 {
            if let Some(&j) = graph.adjacency[i].first() {
                return Some(OddCycle {
                    words: vec![w, w, graph.words[j as usize]],
                });
            }
        }
    }
    let n = graph.words.len();
    let mut best: Option<Vec<u32>> = None;
    for root in 0..n {
        let mut depth = vec![u32::MAX; n];
        let mut parent = vec![u32::MAX; n];
        depth[root] = 0;
        parent[root] = root as u32;
        let mut queue = std::collections::VecDeque::from([root as u32]);
        while let Some(u) = queue.pop_front() {
            for &v in &graph.adjacency[u as usize] {
                if depth[v as usize] == u32::MAX {
                    depth[v as usize] = depth[u as usize] + 1;
                    parent[v as usize] = u;
                    queue.push_back(v);
                }
            }
        }
        for u in 0..n as u32 {
            if depth[u as usize] == u32::MAX {
                continue;
            }
            for &v in &graph.adjacency[u as usize] {
                if v <= u || depth[v as usize] == u32::MAX {
                    continue;
                }
                if (depth[u as usize] ^ depth[v as usize]) & 1 == 0 {
                    let cycle = extract_cycle(&parent, &depth, u, v);
                    if best.as_ref().map_or(true, |b| cycle.len() < b.len()) {
                        best = Some(cycle);
                    }
                }
            }
        }
    }
    best.map(|indices| OddCycle {
        words: indices
            .into_iter()
            .map(|i| graph.words[i as usize])
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::MultisetCode;
    use crate::generators::hamming;
    use crate::partition::derive_partition;
    use crate::perfect::double_shorten;
    use crate::word::lex_words;

    fn c4_of_n5() -> BinaryCode {
        let c1 = double_shorten(&hamming(3).unwrap()).unwrap();
        derive_partition(&c1).unwrap().part(3).clone()
    }

    #[test]
    fn every_c4_vertex_has_a_neighbor() {
        let g = build_graph(&c4_of_n5(), &[1, 2]).unwrap();
        assert!((0..g.vertex_count()).all(|v| !g.neighbors(v).is_empty()));
    }

    #[test]
    fn antipodal_code_under_full_distance_is_a_matching() {
        let code = hamming(3).unwrap();
        let g = build_graph(&code, &[7]).unwrap();
        assert!((0..g.vertex_count()).all(|v| g.neighbors(v).len() == 1));
        assert_eq!(g.nu(), 8);
    }

    #[test]
    fn n5_split_has_even_parts() {
        match split_code(&c4_of_n5()).unwrap() {
            SplitResult::Split(s) => {
                assert_eq!(s.part_a.len(), 4);
                assert_eq!(s.part_b.len(), 4);
                assert!(s.part_a.code_distance().unwrap() >= 3);
                assert!(s.part_b.code_distance().unwrap() >= 3);
            }
            SplitResult::OddCycle(c) => panic!("unexpected odd cycle {c}"),
        }
    }

    #[test]
    fn triangle_yields_length_three_cycle() {
        let code = BinaryCode::from_words(
            4,
            ["0000", "0001", "0011"].iter().map(|s| s.parse().unwrap()),
        )
        .unwrap();
        let g = build_graph(&code, &[1, 2]).unwrap();
        match bipartition(&g) {
            SplitResult::OddCycle(c) => {
                assert_eq!(c.len(), 3);
                assert!(g.validates_odd_cycle(&c.words));
            }
            SplitResult::Split(_) => panic!("triangle cannot be 2-colored"),
        }
    }

    #[test]
    fn single_vertex_graph_splits_trivially() {
        let code = BinaryCode::from_words(3, ["010".parse().unwrap()]).unwrap();
        let g = build_graph(&code, &[1, 2]).unwrap();
        match bipartition(&g) {
            SplitResult::Split(s) => {
                assert_eq!(s.nu, 1);
                assert_eq!(s.part_a.len(), 1);
                assert!(s.part_b.is_empty());
            }
            SplitResult::OddCycle(_) => panic!("edgeless graph is bipartite"),
        }
    }

    #[test]
    fn doubled_word_with_neighbor_is_unsplittable() {
        let w: BinaryWord = "0000".parse().unwrap();
        let v: BinaryWord = "0011".parse().unwrap();
        let m = MultisetCode::from_entries(4, [(w, 2), (v, 1)]).unwrap();
        let g = build_graph(&m, &[1, 2]).unwrap();
        match bipartition(&g) {
            SplitResult::OddCycle(c) => {
                assert_eq!(c.words, vec![w, w, v]);
                assert!(g.validates_odd_cycle(&c.words));
            }
            SplitResult::Split(_) => panic!("doubled word with neighbor must fail"),
        }
    }

    #[test]
    fn isolated_doubled_words_go_to_both_parts() {
        let w: BinaryWord = "000000".parse().unwrap();
        let v: BinaryWord = "111111".parse().unwrap();
        let m = MultisetCode::from_entries(6, [(w, 2), (v, 2)]).unwrap();
        let g = build_graph(&m, &[1, 2]).unwrap();
        match bipartition(&g) {
            SplitResult::Split(s) => {
                assert_eq!(s.part_a, s.part_b);
                assert_eq!(s.part_a.len(), 2);
            }
            SplitResult::OddCycle(c) => panic!("unexpected cycle {c}"),
        }
    }

    #[test]
    fn enumeration_yields_exactly_two_to_nu_distinct_splits() {
        let c4 = c4_of_n5();
        let splits: Vec<_> = enumerate_splits(&c4, 1 << 16).unwrap().collect();
        let nu = build_graph(&c4, &[1, 2]).unwrap().nu();
        assert_eq!(splits.len(), 1usize << nu);
        let mut seen = std::collections::HashSet::new();
        for (a, b) in &splits {
            assert_eq!(a.disjoint_union(b).unwrap(), c4);
            assert!(a.code_distance().map_or(true, |d| d >= 3));
            assert!(b.code_distance().map_or(true, |d| d >= 3));
            assert!(seen.insert((a.clone(), b.clone())), "duplicate split");
        }
        // flipping every orientation swaps the pair
        let last = splits.len() - 1;
        assert_eq!(splits[0].0, splits[last].1);
        assert_eq!(splits[0].1, splits[last].0);
    }

    #[test]
    fn enumeration_cap_is_validated_and_applied() {
        let c4 = c4_of_n5();
        assert!(matches!(enumerate_splits(&c4, 0), Err(Error::Usage(_))));
        let capped: Vec<_> = enumerate_splits(&c4, 1).unwrap().collect();
        assert_eq!(capped.len(), 1);
    }

    #[test]
    fn two_colorings_counted_by_brute_force_on_small_graphs() {
        // for bipartite graphs the number of proper 2-colorings is 2^nu
        let code = BinaryCode::from_words(
            4,
            ["0000", "0011", "1100", "1111", "0101"]
                .iter()
                .map(|s| s.parse().unwrap()),
        )
        .unwrap();
        let g = build_graph(&code, &[2]).unwrap();
        let n = g.vertex_count();
        let mut proper = 0u64;
        for assignment in 0u64..(1 << n) {
            let ok = (0..n).all(|u| {
                g.neighbors(u)
                    .iter()
                    .all(|&v| (assignment >> u) & 1 != (assignment >> v) & 1)
            });
            proper += ok as u64;
        }
        match bipartition(&g) {
            SplitResult::Split(s) => assert_eq!(proper, 1u64 << s.nu),
            SplitResult::OddCycle(_) => assert_eq!(proper, 0),
        }
    }

    #[test]
    fn component_ids_independent_of_insertion_order() {
        // build_graph sorts vertices, so nu must not depend on input order
        let words: Vec<BinaryWord> = lex_words(5).step_by(3).collect();
        let fwd = BinaryCode::from_words(5, words.iter().copied()).unwrap();
        let rev = BinaryCode::from_words(5, words.iter().rev().copied()).unwrap();
        let a = build_graph(&fwd, &[1, 2]).unwrap();
        let b = build_graph(&rev, &[1, 2]).unwrap();
        assert_eq!(a.nu(), b.nu());
        assert_eq!(a.component_sizes(), b.component_sizes());
    }

    #[test]
    fn odd_cycle_replays_and_shortest_is_found() {
        // a 5-cycle under distance 2: weight-2 words sharing one coordinate
        let cycle_words = ["1100000", "0110000", "0011000", "0001100", "1000100"];
        let code =
            BinaryCode::from_words(7, cycle_words.iter().map(|s| s.parse().unwrap())).unwrap();
        let g = build_graph(&code, &[2]).unwrap();
        match bipartition(&g) {
            SplitResult::OddCycle(c) => {
                assert!(g.validates_odd_cycle(&c.words));
            }
            SplitResult::Split(_) => panic!("pentagon is not bipartite"),
        }
        let shortest = shortest_odd_cycle(&g).unwrap();
        assert_eq!(shortest.len(), 5);
        assert!(g.validates_odd_cycle(&shortest.words));
    }
}
