//! Graph data model: digraphs with parallel arcs, bipartite graphs, and
//! subpartitions of a ground set. All node subsets are bitmasks.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{self, Mask};
use crate::error::Error;

/// Directed graph on nodes `0..n` with arcs stored as a multiset of ordered
/// pairs. Parallel arcs are repeated entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    /// Builds a digraph; loops are permitted.
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Digraph, Error> {
        if n > 64 {
            return Err(Error::capacity(format!("digraph on {n} nodes exceeds the 64-node cap")));
        }
        for &(u, v) in &arcs {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("arc ({u},{v}) out of range for n={n}")));
            }
        }
        Ok(Digraph { n, arcs })
    }

    /// Builds a digraph, rejecting loops. Required by the branchings module.
    pub fn loopless(n: usize, arcs: Vec<(usize, usize)>) -> Result<Digraph, Error> {
        let d = Digraph::new(n, arcs)?;
        if let Some(&(u, _)) = d.arcs.iter().find(|&&(u, v)| u == v) {
            return Err(Error::invalid(format!("loop at node {u} not permitted here")));
        }
        Ok(d)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_loops(&self) -> bool {
        self.arcs.iter().any(|&(u, v)| u == v)
    }

    pub fn full_mask(&self) -> Mask {
        bits::full_mask(self.n)
    }

    /// Number of arcs entering `x` (tail outside, head inside), with
    /// multiplicity.
    pub fn in_degree(&self, x: Mask) -> Result<i64, Error> {
        self.check_mask(x)?;
        Ok(self
            .arcs
            .iter()
            .filter(|&&(u, v)| !bits::contains(x, u) && bits::contains(x, v))
            .count() as i64)
    }

    /// Number of arcs leaving `x`, with multiplicity.
    pub fn out_degree(&self, x: Mask) -> Result<i64, Error> {
        self.check_mask(x)?;
        Ok(self
            .arcs
            .iter()
            .filter(|&&(u, v)| bits::contains(x, u) && !bits::contains(x, v))
            .count() as i64)
    }

    /// In-degrees of all singletons in one pass.
    pub fn in_degrees(&self) -> Vec<i64> {
        let mut d = vec![0i64; self.n];
        for &(u, v) in &self.arcs {
            if u != v {
                d[v] += 1;
            }
        }
        d
    }

    fn check_mask(&self, x: Mask) -> Result<(), Error> {
        if x & !self.full_mask() != 0 {
            return Err(Error::invalid("node subset out of range"));
        }
        Ok(())
    }
}

/// Bipartite graph on parts `S` (indices `0..s_size`) and `T`
/// (indices `0..t_size`); edges are (s, t) pairs. With the `simple` flag the
/// edge list is a set; without it, a multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bigraph {
    s_size: usize,
    t_size: usize,
    edges: Vec<(usize, usize)>,
    simple: bool,
}

impl Bigraph {
    /// A simple bigraph: repeated (s, t) pairs are rejected.
    pub fn simple(s_size: usize, t_size: usize, edges: Vec<(usize, usize)>) -> Result<Bigraph, Error> {
        let g = Bigraph::multi(s_size, t_size, edges)?;
        let mut seen = vec![false; s_size * t_size];
        for &(s, t) in &g.edges {
            let slot = s * t_size + t;
            if seen[slot] {
                return Err(Error::invalid(format!("repeated edge ({s},{t}) in simple bigraph")));
            }
            seen[slot] = true;
        }
        Ok(Bigraph { simple: true, ..g })
    }

    /// A bigraph with parallel edges permitted.
    pub fn multi(s_size: usize, t_size: usize, edges: Vec<(usize, usize)>) -> Result<Bigraph, Error> {
        if s_size > 64 || t_size > 64 {
            return Err(Error::capacity("bigraph side exceeds the 64-node cap"));
        }
        for &(s, t) in &edges {
            if s >= s_size || t >= t_size {
                return Err(Error::invalid(format!(
                    "edge ({s},{t}) out of range for {s_size}x{t_size}"
                )));
            }
        }
        Ok(Bigraph {
            s_size,
            t_size,
            edges,
            simple: false,
        })
    }

    pub fn s_size(&self) -> usize {
        self.s_size
    }

    pub fn t_size(&self) -> usize {
        self.t_size
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    /// Re-checks simplicity from the edge list (independent of the flag).
    pub fn verify_simple(&self) -> bool {
        let mut seen = vec![false; self.s_size * self.t_size];
        for &(s, t) in &self.edges {
            let slot = s * self.t_size + t;
            if seen[slot] {
                return false;
            }
            seen[slot] = true;
        }
        true
    }

    /// Degree of every S-node, then of every T-node, recomputed from edges.
    pub fn degrees(&self) -> (Vec<i64>, Vec<i64>) {
        let mut ds = vec![0i64; self.s_size];
        let mut dt = vec![0i64; self.t_size];
        for &(s, t) in &self.edges {
            ds[s] += 1;
            dt[t] += 1;
        }
        (ds, dt)
    }

    /// Neighbours in S of the T-subset `y`.
    pub fn neighbors(&self, y: Mask) -> Result<Mask, Error> {
        if y & !bits::full_mask(self.t_size) != 0 {
            return Err(Error::invalid("T-subset out of range"));
        }
        let mut out = 0;
        for &(s, t) in &self.edges {
            if bits::contains(y, t) {
                out |= bits::bit(s);
            }
        }
        Ok(out)
    }

    /// Number of edges between the S-subset `x` and the T-subset `y`,
    /// with multiplicity.
    pub fn edges_between(&self, x: Mask, y: Mask) -> i64 {
        self.edges
            .iter()
            .filter(|&&(s, t)| bits::contains(x, s) && bits::contains(y, t))
            .count() as i64
    }

    /// Maximum matching via repeated augmenting-path search. Returns the
    /// matching edges and the matching number.
    pub fn max_matching(&self) -> (Vec<(usize, usize)>, usize) {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.s_size];
        for &(s, t) in &self.edges {
            if !adj[s].contains(&t) {
                adj[s].push(t);
            }
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let mut match_t: Vec<Option<usize>> = vec![None; self.t_size];
        let mut nu = 0;
        for s in 0..self.s_size {
            let mut visited = vec![false; self.t_size];
            if augment(&adj, &mut match_t, &mut visited, s) {
                nu += 1;
            }
        }
        let edges = match_t
            .iter()
            .enumerate()
            .filter_map(|(t, m)| m.map(|s| (s, t)))
            .collect();
        (edges, nu)
    }

    /// 0-1 matrix view, row-major: rows are S, columns are T.
    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0u8; self.t_size]; self.s_size];
        for &(s, t) in &self.edges {
            m[s][t] = 1;
        }
        m
    }

    pub fn from_matrix(matrix: &[Vec<u8>]) -> Result<Bigraph, Error> {
        let s_size = matrix.len();
        let t_size = matrix.first().map_or(0, Vec::len);
        let mut edges = Vec::new();
        for (s, row) in matrix.iter().enumerate() {
            if row.len() != t_size {
                return Err(Error::invalid("ragged matrix"));
            }
            for (t, &cell) in row.iter().enumerate() {
                match cell {
                    0 => {}
                    1 => edges.push((s, t)),
                    _ => return Err(Error::invalid("matrix entries must be 0 or 1")),
                }
            }
        }
        Bigraph::simple(s_size, t_size, edges)
    }
}

fn augment(
    adj: &[Vec<usize>],
    match_t: &mut [Option<usize>],
    visited: &mut [bool],
    s: usize,
) -> bool {
    for &t in &adj[s] {
        if visited[t] {
            continue;
        }
        visited[t] = true;
        if match_t[t].is_none() || augment(adj, match_t, visited, match_t[t].unwrap()) {
            match_t[t] = Some(s);
            return true;
        }
    }
    false
}

/// Family of pairwise-disjoint non-empty subsets of a ground set. The empty
/// family is a valid subpartition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subpartition {
    parts: Vec<Mask>,
}

impl Subpartition {
    pub fn new(ground: Mask, parts: Vec<Mask>) -> Result<Subpartition, Error> {
        let mut used: Mask = 0;
        for &p in &parts {
            if p == 0 {
                return Err(Error::invalid("empty part in subpartition"));
            }
            if p & !ground != 0 {
                return Err(Error::invalid("subpartition part outside ground set"));
            }
            if p & used != 0 {
                return Err(Error::invalid("overlapping parts in subpartition"));
            }
            used |= p;
        }
        Ok(Subpartition { parts })
    }

    pub fn empty() -> Subpartition {
        Subpartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[Mask] {
        &self.parts
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn union(&self) -> Mask {
        self.parts.iter().fold(0, |m, &p| m | p)
    }
}

/// Cap for full subpartition enumeration: Bell numbers explode beyond this.
pub const SUBPARTITION_ENUM_CAP: usize = 12;

/// Calls `f` once for every subpartition of every subset of `ground`
/// (equivalently: every family of disjoint non-empty subsets of `ground`),
/// including the empty family, each exactly once. `max_parts` limits the
/// family size.
pub fn for_each_subpartition<F: FnMut(&[Mask])>(
    ground: Mask,
    max_parts: Option<usize>,
    mut f: F,
) -> Result<(), Error> {
    if bits::count(ground) > SUBPARTITION_ENUM_CAP {
        return Err(Error::capacity(format!(
            "ground set of {} elements exceeds the enumeration cap of {}; use the subset-DP \
             entry points (setfn::subpartition_max) instead",
            bits::count(ground),
            SUBPARTITION_ENUM_CAP
        )));
    }
    let cap = max_parts.unwrap_or(usize::MAX);
    let mut parts: Vec<Mask> = Vec::new();
    recurse(ground, cap, &mut parts, &mut f);
    Ok(())
}

fn recurse<F: FnMut(&[Mask])>(rest: Mask, cap: usize, parts: &mut alloc::vec::Vec<Mask>, f: &mut F) {
    f(parts);
    if rest == 0 || parts.len() >= cap {
        return;
    }
    // Canonical order: each emitted family is generated once by always
    // deciding the lowest remaining element (either skipped or placed in a
    // new part together with a subset of the higher remaining elements).
    let mut skipped = rest;
    while skipped != 0 {
        let low = skipped & skipped.wrapping_neg();
        skipped &= skipped - 1;
        let higher = skipped;
        let mut sub = higher;
        loop {
            parts.push(low | sub);
            recurse(skipped & !sub, cap, parts, f);
            parts.pop();
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & higher;
        }
    }
}

/// Collects [`for_each_subpartition`] into a vector of [`Subpartition`]s.
pub fn enumerate_subpartitions(
    ground: Mask,
    max_parts: Option<usize>,
) -> Result<Vec<Subpartition>, Error> {
    let mut out = Vec::new();
    for_each_subpartition(ground, max_parts, |parts| {
        out.push(Subpartition {
            parts: parts.to_vec(),
        });
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn path3() -> Digraph {
        Digraph::new(3, vec![(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn in_degree_on_path() {
        let d = path3();
        assert_eq!(d.in_degree(bits::bit(1)).unwrap(), 1);
        assert_eq!(d.in_degree(0).unwrap(), 0);
        assert_eq!(d.in_degree(bits::bit(0)).unwrap(), 0);
        assert_eq!(d.in_degree(d.full_mask()).unwrap(), 0);
    }

    #[test]
    fn in_degree_rejects_out_of_range() {
        let d = path3();
        assert!(matches!(d.in_degree(bits::bit(5)), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn crossing_arcs_counted_once() {
        let d = Digraph::new(4, vec![(0, 1), (1, 0), (2, 3), (0, 3), (3, 0)]).unwrap();
        for x in 0..16u64 {
            let crossing = d
                .arcs()
                .iter()
                .filter(|&&(u, v)| bits::contains(x, u) != bits::contains(x, v))
                .count() as i64;
            assert_eq!(d.in_degree(x).unwrap() + d.out_degree(x).unwrap(), crossing);
        }
        assert_eq!(d.in_degree(d.full_mask()).unwrap(), 0);
    }

    #[test]
    fn loopless_rejects_loops() {
        assert!(Digraph::loopless(2, vec![(0, 0)]).is_err());
        assert!(Digraph::new(2, vec![(0, 0)]).is_ok());
    }

    fn complete(s: usize, t: usize) -> Bigraph {
        let mut e = Vec::new();
        for i in 0..s {
            for j in 0..t {
                e.push((i, j));
            }
        }
        Bigraph::simple(s, t, e).unwrap()
    }

    #[test]
    fn neighbors_basic() {
        let k22 = complete(2, 2);
        assert_eq!(k22.neighbors(bits::bit(0)).unwrap(), 0b11);
        assert_eq!(k22.neighbors(0).unwrap(), 0);
    }

    /// Unique simple graph with degrees (4,4,3,2) on both sides.
    pub(crate) fn tight_4433_graph() -> Bigraph {
        let mut e = Vec::new();
        for t in 0..4 {
            e.push((0, t));
            e.push((1, t));
        }
        for t in 0..3 {
            e.push((2, t));
        }
        e.push((3, 0));
        e.push((3, 1));
        Bigraph::simple(4, 4, e).unwrap()
    }

    #[test]
    fn neighbors_of_last_two_columns() {
        let g = tight_4433_graph();
        let y = bits::bit(2) | bits::bit(3);
        let n = g.neighbors(y).unwrap();
        assert_eq!(n, 0b0111);
        assert_eq!(bits::count(n), 3);
    }

    #[test]
    fn matching_numbers() {
        assert_eq!(complete(2, 2).max_matching().1, 2);
        let star = Bigraph::simple(1, 3, vec![(0, 0), (0, 1), (0, 2)]).unwrap();
        assert_eq!(star.max_matching().1, 1);
        // Frozen from the exhaustive matcher below on the 13-edge graph.
        assert_eq!(tight_4433_graph().max_matching().1, 4);
    }

    fn exhaustive_matching(g: &Bigraph) -> usize {
        fn go(edges: &[(usize, usize)], used_s: u64, used_t: u64) -> usize {
            match edges.split_first() {
                None => 0,
                Some((&(s, t), rest)) => {
                    let skip = go(rest, used_s, used_t);
                    if !bits::contains(used_s, s) && !bits::contains(used_t, t) {
                        let take =
                            1 + go(rest, used_s | bits::bit(s), used_t | bits::bit(t));
                        skip.max(take)
                    } else {
                        skip
                    }
                }
            }
        }
        go(g.edges(), 0, 0)
    }

    #[test]
    fn matching_agrees_with_exhaustive_on_small_graphs() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut rng = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..300 {
            let s = (rng() % 4 + 1) as usize;
            let t = (rng() % 4 + 1) as usize;
            let mut edges = BTreeSet::new();
            for _ in 0..rng() % 13 {
                edges.insert(((rng() as usize) % s, (rng() as usize) % t));
            }
            let g = Bigraph::simple(s, t, edges.into_iter().collect()).unwrap();
            assert_eq!(g.max_matching().1, exhaustive_matching(&g));
        }
    }

    #[test]
    fn matching_result_is_a_matching() {
        let g = tight_4433_graph();
        let (m, nu) = g.max_matching();
        assert_eq!(m.len(), nu);
        let ss: BTreeSet<usize> = m.iter().map(|&(s, _)| s).collect();
        let ts: BTreeSet<usize> = m.iter().map(|&(_, t)| t).collect();
        assert_eq!(ss.len(), nu);
        assert_eq!(ts.len(), nu);
    }

    #[test]
    fn degree_sums_match_edge_count() {
        let g = tight_4433_graph();
        let (ds, dt) = g.degrees();
        assert_eq!(ds.iter().sum::<i64>(), g.edge_count() as i64);
        assert_eq!(dt.iter().sum::<i64>(), g.edge_count() as i64);
        assert_eq!(ds, [4, 4, 3, 2]);
        assert_eq!(dt, [4, 4, 3, 2]);
    }

    fn bell(n: usize) -> u64 {
        // Bell triangle.
        let mut row = vec![1u64];
        for _ in 0..n {
            let mut next = vec![*row.last().unwrap()];
            for &v in &row {
                let last = *next.last().unwrap();
                next.push(last + v);
            }
            row = next;
        }
        row[0]
    }

    #[test]
    fn subpartition_counts_follow_bell_numbers() {
        for n in 0..=8 {
            let ground = bits::full_mask(n);
            let mut count = 0u64;
            for_each_subpartition(ground, None, |_| count += 1).unwrap();
            assert_eq!(count, bell(n + 1), "ground size {n}");
        }
    }

    #[test]
    fn subpartitions_of_pair() {
        let subs = enumerate_subpartitions(0b11, None).unwrap();
        assert_eq!(subs.len(), 5);
        let families: BTreeSet<Vec<Mask>> = subs
            .iter()
            .map(|sp| {
                let mut p = sp.parts().to_vec();
                p.sort_unstable();
                p
            })
            .collect();
        assert_eq!(families.len(), 5, "no family generated twice");
        assert!(families.contains(&vec![]));
        assert!(families.contains(&vec![0b11]));
        assert!(families.contains(&vec![0b01, 0b10]));
    }

    #[test]
    fn subpartitions_of_empty_and_singleton() {
        assert_eq!(enumerate_subpartitions(0, None).unwrap().len(), 1);
        assert_eq!(enumerate_subpartitions(0b1, None).unwrap().len(), 2);
    }

    #[test]
    fn subpartition_enum_cap() {
        assert!(matches!(
            for_each_subpartition(bits::full_mask(13), None, |_| {}),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn max_parts_limits_family_size() {
        let subs = enumerate_subpartitions(0b111, Some(1)).unwrap();
        assert!(subs.iter().all(|sp| sp.part_count() <= 1));
        assert_eq!(subs.len(), 8); // empty family + 7 non-empty subsets
    }

    #[test]
    fn subpartition_validation() {
        assert!(Subpartition::new(0b111, vec![0b011, 0b100]).is_ok());
        assert!(Subpartition::new(0b111, vec![0b011, 0b110]).is_err());
        assert!(Subpartition::new(0b111, vec![0]).is_err());
        assert!(Subpartition::new(0b011, vec![0b100]).is_err());
    }
}
