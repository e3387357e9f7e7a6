//! Forests with prescribed degrees on the T side, bigraphs realizing them,
//! and wooded hypergraphs (hypergraphs trimmable to a forest).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{self, Mask};
use crate::error::Error;
use crate::graph::{Bigraph, Subpartition};
use crate::realize::{self, Certificate, CondId, DegreeSpec};
use crate::setfn::SetFunctionOnT;
use crate::{Outcome, Verdict};

/// Hypergraph on `s_size` vertices; hyperedges are vertex sets of size at
/// least 2, kept as a multiset. Distinct hyperedges correspond bijectively
/// to a simple incidence bigraph with one T-node per hyperedge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    s_size: usize,
    hyperedges: Vec<Mask>,
}

impl Hypergraph {
    pub fn new(s_size: usize, hyperedges: Vec<Mask>) -> Result<Hypergraph, Error> {
        if s_size > 64 {
            return Err(Error::capacity("hypergraph vertex count exceeds 64"));
        }
        for (i, &e) in hyperedges.iter().enumerate() {
            if e & !bits::full_mask(s_size) != 0 {
                return Err(Error::invalid(format!("hyperedge {i} out of range")));
            }
            if bits::count(e) < 2 {
                return Err(Error::invalid(format!("hyperedge {i} has fewer than 2 vertices")));
            }
        }
        Ok(Hypergraph { s_size, hyperedges })
    }

    pub fn s_size(&self) -> usize {
        self.s_size
    }

    pub fn hyperedges(&self) -> &[Mask] {
        &self.hyperedges
    }

    pub fn has_duplicate_hyperedges(&self) -> bool {
        let mut sorted = self.hyperedges.clone();
        sorted.sort_unstable();
        sorted.windows(2).any(|w| w[0] == w[1])
    }

    /// Incidence bigraph: vertices on S, hyperedges on T.
    pub fn incidence_bigraph(&self) -> Result<Bigraph, Error> {
        let mut edges = Vec::new();
        for (t, &e) in self.hyperedges.iter().enumerate() {
            for s in bits::elements(e) {
                edges.push((s, t));
            }
        }
        Bigraph::simple(self.s_size, self.hyperedges.len(), edges)
    }

    /// Vertex degrees: number of hyperedges containing each vertex.
    pub fn degrees(&self) -> Vec<i64> {
        let mut d = vec![0i64; self.s_size];
        for &e in &self.hyperedges {
            for s in bits::elements(e) {
                d[s] += 1;
            }
        }
        d
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Does `g` contain a forest with degree exactly `m_for(t)` at every T-node?
/// Exists iff every non-empty `Y` has enough neighbours; the worst violator
/// is returned otherwise.
pub fn check_forest_degrees(g: &Bigraph, m_for: &[i64]) -> Result<Verdict<Mask>, Error> {
    if m_for.len() != g.t_size() {
        return Err(Error::invalid("forest degree vector length must be |T|"));
    }
    if m_for.iter().any(|&v| v < 0) {
        return Err(Error::invalid("forest degrees must be non-negative"));
    }
    if g.t_size() > 16 {
        return Err(Error::capacity("subset scan over |T| > 16 not supported"));
    }
    let mut worst: Option<(i64, Mask)> = None;
    for y in 1..=bits::full_mask(g.t_size()) {
        let have = bits::count(g.neighbors(y)?) as i64;
        let need = bits::mask_sum(m_for, y) - bits::count(y) as i64 + 1;
        if have < need && worst.is_none_or(|(gap, _)| need - have > gap) {
            worst = Some((need - have, y));
        }
    }
    Ok(match worst {
        None => Outcome::Feasible(()),
        Some((_, y)) => Outcome::Infeasible(y),
    })
}

/// Degree-2 everywhere: does `g` contain a forest in which every T-node has
/// degree exactly 2?
pub fn check_t2_forest(g: &Bigraph) -> Result<Verdict<Mask>, Error> {
    check_forest_degrees(g, &vec![2; g.t_size()])
}

/// Extracts a forest `F` from `g` with `d_F(t) = m_for(t)` for every `t`, as
/// an edge list, by matroid intersection between the graphic matroid of `g`
/// and the partition matroid capping the edges at each T-node.
pub fn extract_forest(
    g: &Bigraph,
    m_for: &[i64],
) -> Result<Outcome<Vec<(usize, usize)>, Mask>, Error> {
    if let Outcome::Infeasible(y) = check_forest_degrees(g, m_for)? {
        return Ok(Outcome::Infeasible(y));
    }
    let target: i64 = m_for.iter().sum();
    let edges = g.edges();
    let m = edges.len();
    let nodes = g.s_size() + g.t_size();
    let node_of = |s: usize, t: usize| (s, g.s_size() + t);

    let acyclic = |members: &dyn Fn(usize) -> bool| -> bool {
        let mut uf = UnionFind::new(nodes);
        for (i, &(s, t)) in edges.iter().enumerate() {
            if members(i) {
                let (a, b) = node_of(s, t);
                if !uf.union(a, b) {
                    return false;
                }
            }
        }
        true
    };
    let within_caps = |members: &dyn Fn(usize) -> bool| -> bool {
        let mut count = vec![0i64; g.t_size()];
        for (i, &(_, t)) in edges.iter().enumerate() {
            if members(i) {
                count[t] += 1;
                if count[t] > m_for[t] {
                    return false;
                }
            }
        }
        true
    };

    let mut in_set = vec![false; m];
    let mut size = 0i64;
    while size < target {
        // Exchange graph search for a shortest augmenting sequence.
        let sources: Vec<usize> = (0..m)
            .filter(|&y| !in_set[y] && acyclic(&|i| in_set[i] || i == y))
            .collect();
        if sources.is_empty() {
            break;
        }
        let mut parent = vec![usize::MAX; m];
        let mut seen = vec![false; m];
        let mut queue: Vec<usize> = Vec::new();
        for &y in &sources {
            seen[y] = true;
            queue.push(y);
        }
        let mut found: Option<usize> = None;
        let mut head = 0;
        'bfs: while head < queue.len() {
            let cur = queue[head];
            head += 1;
            if !in_set[cur] {
                // cur = y outside the set: sink test, else arcs y -> x.
                if within_caps(&|i| (in_set[i] || i == cur) && i != usize::MAX) {
                    found = Some(cur);
                    break 'bfs;
                }
                for x in 0..m {
                    if in_set[x]
                        && !seen[x]
                        && within_caps(&|i| (in_set[i] && i != x) || i == cur)
                    {
                        seen[x] = true;
                        parent[x] = cur;
                        queue.push(x);
                    }
                }
            } else {
                // cur = x inside the set: arcs x -> y.
                for y in 0..m {
                    if !in_set[y]
                        && !seen[y]
                        && acyclic(&|i| (in_set[i] && i != cur) || i == y)
                    {
                        seen[y] = true;
                        parent[y] = cur;
                        queue.push(y);
                    }
                }
            }
        }
        let Some(end) = found else {
            break;
        };
        // Flip membership along the augmenting sequence.
        let mut v = end;
        loop {
            in_set[v] = !in_set[v];
            if parent[v] == usize::MAX {
                break;
            }
            v = parent[v];
        }
        size += 1;
    }

    if size < target {
        return Err(Error::defect(
            "matroid intersection fell short although the neighbourhood condition holds",
        ));
    }
    let forest: Vec<(usize, usize)> = (0..m).filter(|&i| in_set[i]).map(|i| edges[i]).collect();
    verify_forest(g, m_for, &forest)?;
    Ok(Outcome::Feasible(forest))
}

/// Re-checks a forest independently: edges of `g`, acyclic, exact T-degrees.
pub fn verify_forest(g: &Bigraph, m_for: &[i64], forest: &[(usize, usize)]) -> Result<(), Error> {
    let mut remaining: Vec<(usize, usize)> = g.edges().to_vec();
    for &e in forest {
        match remaining.iter().position(|&r| r == e) {
            Some(pos) => {
                remaining.swap_remove(pos);
            }
            None => return Err(Error::defect("forest edge not present in the graph")),
        }
    }
    let mut uf = UnionFind::new(g.s_size() + g.t_size());
    let mut deg = vec![0i64; g.t_size()];
    for &(s, t) in forest {
        deg[t] += 1;
        if !uf.union(s, g.s_size() + t) {
            return Err(Error::defect("cycle in extracted forest"));
        }
    }
    if deg != m_for {
        return Err(Error::defect("extracted forest misses the prescribed degrees"));
    }
    Ok(())
}

/// Both sides of the fitting-with-forest inequality at `(x, y)`; `x` must be
/// non-empty.
pub fn forest_fit_sides(
    spec: &DegreeSpec,
    m_for: &[i64],
    x: Mask,
    y: Mask,
) -> Result<(i64, i64), Error> {
    let m_t = spec
        .m_t()
        .ok_or_else(|| Error::precondition("forest realization needs degrees on both sides"))?;
    if x == 0 {
        return Err(Error::invalid("the S-subset of this condition must be non-empty"));
    }
    let full = bits::full_mask(m_t.len());
    let rest = full & !y;
    let cx = bits::count(x) as i64;
    let lhs = bits::mask_sum(spec.m_s(), x) + bits::mask_sum(m_t, y)
        - cx * bits::count(y) as i64
        + bits::mask_sum(m_for, rest)
        - bits::count(rest) as i64
        - cx
        + 1;
    Ok((lhs, spec.gamma()))
}

/// Notes for instances outside the classical uniform-degree hypotheses
/// (`|S| >= |T| + 1` and `m_t >= 2` when every forest degree is 2); such
/// instances are still decided exactly.
pub fn classical_hypothesis_notes(spec: &DegreeSpec, m_for: &[i64]) -> Vec<String> {
    let mut notes = Vec::new();
    let Some(m_t) = spec.m_t() else {
        return notes;
    };
    if m_for.iter().all(|&v| v == 2) {
        if spec.s_size() < m_t.len() + 1 {
            notes.push(format!(
                "classical hypothesis |S| >= |T| + 1 fails ({} < {})",
                spec.s_size(),
                m_t.len() + 1
            ));
        }
        if m_t.iter().any(|&v| v < 2) {
            notes.push(String::from("classical hypothesis m_t >= 2 fails"));
        }
    }
    notes
}

/// Is there a simple bigraph fitting `(m_s, m_t)` that contains a forest
/// with degree `m_for(t)` at every T-node? On success returns the graph and
/// such a forest, both verified.
pub fn realize_with_forest(
    spec: &DegreeSpec,
    m_for: &[i64],
) -> Result<Outcome<(Bigraph, Vec<(usize, usize)>), Certificate>, Error> {
    let m_t = spec
        .m_t()
        .ok_or_else(|| Error::precondition("forest realization needs degrees on both sides"))?;
    if m_for.len() != m_t.len() {
        return Err(Error::invalid("forest degree vector length must be |T|"));
    }
    if m_for.iter().any(|&v| v < 0) {
        return Err(Error::invalid("forest degrees must be non-negative"));
    }
    if let Some(t) = (0..m_t.len()).find(|&t| m_for[t] > m_t[t]) {
        return Err(Error::precondition(format!(
            "forest degree {} at T-node {t} exceeds the prescribed degree {}",
            m_for[t], m_t[t]
        )));
    }
    if let Outcome::Infeasible(cert) = realize::check_gale_ryser(spec)? {
        return Ok(Outcome::Infeasible(cert));
    }
    // The forest condition, on non-empty S-prefixes against all T-subsets.
    let gamma = spec.gamma();
    let t_len = m_t.len();
    let full = bits::full_mask(t_len);
    let mut idx: Vec<usize> = (0..spec.s_size()).collect();
    idx.sort_by_key(|&i| (-spec.m_s()[i], i));
    let mut prefix_sum = vec![0i64];
    let mut prefix_mask = vec![0 as Mask];
    for (r, &i) in idx.iter().enumerate() {
        prefix_sum.push(prefix_sum[r] + spec.m_s()[i]);
        prefix_mask.push(prefix_mask[r] | bits::bit(i));
    }
    let mfor_total: i64 = m_for.iter().sum();
    let mut worst: Option<Certificate> = None;
    for y in 0..=full {
        let cy = bits::count(y) as i64;
        let mty = bits::mask_sum(m_t, y);
        let rest_sum = mfor_total - bits::mask_sum(m_for, y);
        let rest_count = t_len as i64 - cy;
        for i in 1..=spec.s_size() {
            let lhs = prefix_sum[i] + mty - i as i64 * cy + rest_sum - rest_count - i as i64 + 1;
            if lhs > gamma
                && worst.as_ref().is_none_or(|w| lhs - gamma > w.lhs - w.rhs)
            {
                worst = Some(Certificate {
                    condition: CondId::ForestFit,
                    x: prefix_mask[i],
                    y,
                    parts: Subpartition::empty(),
                    lhs,
                    rhs: gamma,
                });
            }
        }
    }
    if let Some(cert) = worst {
        let (lhs, rhs) = forest_fit_sides(spec, m_for, cert.x, cert.y)?;
        if (lhs, rhs) != (cert.lhs, cert.rhs) {
            return Err(Error::defect("certificate re-evaluation mismatch"));
        }
        return Ok(Outcome::Infeasible(cert));
    }
    let p = SetFunctionOnT::forest(m_for.to_vec())?;
    let g = match realize::construct_cover_full(spec, &p)? {
        Outcome::Feasible(g) => g,
        Outcome::Infeasible(_) => {
            return Err(Error::defect(
                "covering construction infeasible although both conditions hold",
            ));
        }
    };
    let forest = match extract_forest(&g, m_for)? {
        Outcome::Feasible(f) => f,
        Outcome::Infeasible(_) => {
            return Err(Error::defect("constructed graph lost the forest condition"));
        }
    };
    Ok(Outcome::Feasible((g, forest)))
}

/// Why a uniform wooded hypergraph cannot fit the degree specification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WoodedInfeasible {
    /// The total degree is not a multiple of the hyperedge size.
    NotDivisible { total: i64, ell: i64 },
    /// A vertex demands more hyperedges than exist.
    DegreeExceedsTau { node: usize, degree: i64, tau: i64 },
    /// More hyperedges than supported vertices minus one: trimming must
    /// close a cycle.
    TauExceedsSupport { tau: i64, support: usize },
}

/// Builds an `ell`-uniform wooded hypergraph with vertex degrees `m_s`,
/// together with a trimmed forest (one vertex pair per hyperedge) witnessing
/// woodedness.
pub fn realize_wooded_uniform(
    m_s: &[i64],
    ell: i64,
) -> Result<Outcome<(Hypergraph, Vec<(usize, usize)>), WoodedInfeasible>, Error> {
    if ell < 2 {
        return Err(Error::precondition("hyperedge size must be at least 2"));
    }
    if m_s.iter().any(|&v| v < 0) {
        return Err(Error::invalid("vertex degrees must be non-negative"));
    }
    let total: i64 = m_s.iter().sum();
    if total % ell != 0 {
        return Ok(Outcome::Infeasible(WoodedInfeasible::NotDivisible { total, ell }));
    }
    let tau = total / ell;
    let support: Vec<usize> = (0..m_s.len()).filter(|&s| m_s[s] > 0).collect();
    for &s in &support {
        if m_s[s] > tau {
            return Ok(Outcome::Infeasible(WoodedInfeasible::DegreeExceedsTau {
                node: s,
                degree: m_s[s],
                tau,
            }));
        }
    }
    if tau > 0 && tau > support.len() as i64 - 1 {
        return Ok(Outcome::Infeasible(WoodedInfeasible::TauExceedsSupport {
            tau,
            support: support.len(),
        }));
    }
    if tau == 0 {
        let h = Hypergraph::new(m_s.len(), Vec::new())?;
        return Ok(Outcome::Feasible((h, Vec::new())));
    }
    // Reduced instance on the supported vertices.
    let reduced_m_s: Vec<i64> = support.iter().map(|&s| m_s[s]).collect();
    let spec = DegreeSpec::new(reduced_m_s, vec![ell; tau as usize])?;
    let m_for = vec![2i64; tau as usize];
    let (g, forest) = match realize_with_forest(&spec, &m_for)? {
        Outcome::Feasible(out) => out,
        Outcome::Infeasible(cert) => {
            return Err(Error::defect(format!(
                "reduced instance infeasible ({}) although the closed-form conditions hold",
                cert.condition.as_str()
            )));
        }
    };
    let mut hyperedges = vec![0 as Mask; tau as usize];
    for &(s, t) in g.edges() {
        hyperedges[t] |= bits::bit(support[s]);
    }
    let h = Hypergraph::new(m_s.len(), hyperedges)?;
    if h.degrees() != m_s {
        return Err(Error::defect("hypergraph degrees do not match the request"));
    }
    // Trimmed pairs in hyperedge order, verified as a forest on the
    // original vertices.
    let mut pairs: Vec<(usize, usize)> = vec![(usize::MAX, usize::MAX); tau as usize];
    for &(s, t) in &forest {
        let orig = support[s];
        if pairs[t].0 == usize::MAX {
            pairs[t].0 = orig;
        } else if pairs[t].1 == usize::MAX {
            pairs[t].1 = orig;
        } else {
            return Err(Error::defect("forest degree exceeded 2 at a hyperedge"));
        }
    }
    let mut uf = UnionFind::new(m_s.len());
    for &(a, b) in &pairs {
        if a == usize::MAX || b == usize::MAX {
            return Err(Error::defect("forest degree fell short at a hyperedge"));
        }
        if !uf.union(a, b) {
            return Err(Error::defect("trimmed pairs close a cycle"));
        }
    }
    for (t, &(a, b)) in pairs.iter().enumerate() {
        if !bits::contains(h.hyperedges()[t], a) || !bits::contains(h.hyperedges()[t], b) {
            return Err(Error::defect("trimmed pair escapes its hyperedge"));
        }
    }
    Ok(Outcome::Feasible((h, pairs)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star_2s_1t() -> Bigraph {
        Bigraph::simple(2, 1, vec![(0, 0), (1, 0)]).unwrap()
    }

    fn four_cycle() -> Bigraph {
        Bigraph::simple(2, 2, vec![(0, 0), (1, 0), (0, 1), (1, 1)]).unwrap()
    }

    fn k32() -> Bigraph {
        let mut e = Vec::new();
        for s in 0..3 {
            for t in 0..2 {
                e.push((s, t));
            }
        }
        Bigraph::simple(3, 2, e).unwrap()
    }

    #[test]
    fn t2_exists_in_star() {
        assert!(check_t2_forest(&star_2s_1t()).unwrap().is_feasible());
    }

    #[test]
    fn t2_fails_on_cycle() {
        let y = check_t2_forest(&four_cycle()).unwrap().infeasible().unwrap();
        assert_eq!(y, 0b11);
    }

    #[test]
    fn t2_exists_in_k32() {
        assert!(check_t2_forest(&k32()).unwrap().is_feasible());
    }

    #[test]
    fn extract_forced_star() {
        let f = extract_forest(&star_2s_1t(), &[2]).unwrap().feasible().unwrap();
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn extract_from_k32() {
        let f = extract_forest(&k32(), &[2, 2]).unwrap().feasible().unwrap();
        assert_eq!(f.len(), 4);
        verify_forest(&k32(), &[2, 2], &f).unwrap();
    }

    #[test]
    fn extract_fails_on_cycle() {
        let out = extract_forest(&four_cycle(), &[2, 2]).unwrap();
        assert_eq!(out.infeasible().unwrap(), 0b11);
    }

    #[test]
    fn exhaustive_trimming_matches_check() {
        // All simple bigraphs on 3x2 and 2x2: the subset condition equals
        // the existence of an actual degree-exact forest.
        for (s_size, t_size) in [(3usize, 2usize), (2, 2), (4, 2)] {
            let slots = s_size * t_size;
            for code in 0..1u64 << slots {
                let edges: Vec<(usize, usize)> = (0..slots)
                    .filter(|&i| code & (1 << i) != 0)
                    .map(|i| (i / t_size, i % t_size))
                    .collect();
                let g = Bigraph::simple(s_size, t_size, edges).unwrap();
                let m_for = vec![2i64; t_size];
                let checked = check_forest_degrees(&g, &m_for).unwrap().is_feasible();
                let trimmed = trimming_search(&g, &m_for);
                assert_eq!(checked, trimmed, "graph code {code} on {s_size}x{t_size}");
            }
        }
    }

    fn trimming_search(g: &Bigraph, m_for: &[i64]) -> bool {
        fn go(
            g: &Bigraph,
            m_for: &[i64],
            t: usize,
            uf_edges: &mut Vec<(usize, usize)>,
        ) -> bool {
            if t == g.t_size() {
                let mut uf = UnionFind::new(g.s_size() + g.t_size());
                return uf_edges
                    .iter()
                    .all(|&(a, b)| uf.union(a, b));
            }
            let nbrs: Vec<usize> = g
                .edges()
                .iter()
                .filter(|&&(_, tt)| tt == t)
                .map(|&(s, _)| s)
                .collect();
            let need = m_for[t] as usize;
            if nbrs.len() < need {
                return false;
            }
            fn choices(
                g: &Bigraph,
                m_for: &[i64],
                t: usize,
                nbrs: &[usize],
                start: usize,
                need: usize,
                uf_edges: &mut Vec<(usize, usize)>,
            ) -> bool {
                if need == 0 {
                    return go(g, m_for, t + 1, uf_edges);
                }
                for i in start..nbrs.len() {
                    uf_edges.push((nbrs[i], g.s_size() + t));
                    if choices(g, m_for, t, nbrs, i + 1, need - 1, uf_edges) {
                        return true;
                    }
                    uf_edges.pop();
                }
                false
            }
            choices(g, m_for, t, &nbrs, 0, need, uf_edges)
        }
        go(g, m_for, 0, &mut Vec::new())
    }

    #[test]
    fn realize_three_by_two() {
        let spec = DegreeSpec::new(vec![2, 1, 1], vec![2, 2]).unwrap();
        let (g, forest) = realize_with_forest(&spec, &[2, 2]).unwrap().feasible().unwrap();
        assert_eq!(g.edge_count(), 4);
        verify_forest(&g, &[2, 2], &forest).unwrap();
    }

    #[test]
    fn realize_k22_impossible() {
        let spec = DegreeSpec::new(vec![2, 2], vec![2, 2]).unwrap();
        let cert = realize_with_forest(&spec, &[2, 2]).unwrap().infeasible().unwrap();
        assert_eq!(cert.condition, CondId::ForestFit);
        assert_eq!(cert.x, 0b11);
        assert_eq!(cert.y, 0);
        assert_eq!((cert.lhs, cert.rhs), (5, 4));
    }

    #[test]
    fn realize_forced_path() {
        let spec = DegreeSpec::new(vec![1, 1], vec![2]).unwrap();
        let (g, forest) = realize_with_forest(&spec, &[2]).unwrap().feasible().unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(forest.len(), 2);
    }

    #[test]
    fn hypothesis_notes_flag_but_do_not_reject() {
        let spec = DegreeSpec::new(vec![2, 2], vec![2, 2]).unwrap();
        let notes = classical_hypothesis_notes(&spec, &[2, 2]);
        assert_eq!(notes.len(), 1);
        let spec2 = DegreeSpec::new(vec![2, 1, 1], vec![2, 2]).unwrap();
        assert!(classical_hypothesis_notes(&spec2, &[2, 2]).is_empty());
    }

    #[test]
    fn wooded_single_hyperedge() {
        let (h, pairs) = realize_wooded_uniform(&[1, 1, 1], 3).unwrap().feasible().unwrap();
        assert_eq!(h.hyperedges(), &[0b111]);
        assert_eq!(pairs.len(), 1);
    }

    #[test]
    fn wooded_rejects_excess_tau() {
        let out = realize_wooded_uniform(&[2, 2], 2).unwrap();
        assert_eq!(
            out.infeasible().unwrap(),
            WoodedInfeasible::TauExceedsSupport { tau: 2, support: 2 }
        );
    }

    #[test]
    fn wooded_two_hyperedges() {
        let (h, pairs) = realize_wooded_uniform(&[2, 1, 1], 2).unwrap().feasible().unwrap();
        assert_eq!(h.hyperedges().len(), 2);
        assert_eq!(h.degrees(), vec![2, 1, 1]);
        assert_eq!(pairs.len(), 2);
    }

    #[test]
    fn wooded_rejects_bad_divisibility() {
        let out = realize_wooded_uniform(&[1, 1, 1], 2).unwrap();
        assert_eq!(
            out.infeasible().unwrap(),
            WoodedInfeasible::NotDivisible { total: 3, ell: 2 }
        );
    }

    #[test]
    fn wooded_duplicates_when_forced() {
        // The unique realization here repeats one hyperedge; it is
        // nevertheless wooded.
        let (h, pairs) = realize_wooded_uniform(&[2, 2, 2], 3).unwrap().feasible().unwrap();
        assert!(h.has_duplicate_hyperedges());
        let mut uf = UnionFind::new(3);
        for &(a, b) in &pairs {
            assert!(uf.union(a, b));
        }
    }

    #[test]
    fn wooded_empty_request() {
        let (h, pairs) = realize_wooded_uniform(&[0, 0], 2).unwrap().feasible().unwrap();
        assert!(h.hyperedges().is_empty());
        assert!(pairs.is_empty());
    }

    #[test]
    fn woodedness_biconditional_small() {
        // Union of any j > 0 hyperedges has at least j + 1 vertices iff a
        // trimming to a forest exists. All hypergraphs with <= 3 hyperedges
        // over 4 vertices.
        let vertex_sets: Vec<Mask> = (0..16u64).filter(|&e| bits::count(e) >= 2).collect();
        let mut stack = vec![Vec::new()];
        while let Some(current) = stack.pop() {
            if current.len() < 3 {
                let last = current.last().copied().unwrap_or(0);
                for &e in vertex_sets.iter().filter(|&&e| e >= last) {
                    let mut next = current.clone();
                    next.push(e);
                    stack.push(next);
                }
            }
            if current.is_empty() {
                continue;
            }
            let h = Hypergraph::new(4, current.clone()).unwrap();
            let union_ok = (1..1u64 << current.len()).all(|sel| {
                let mut u: Mask = 0;
                for j in bits::elements(sel) {
                    u |= current[j];
                }
                bits::count(u) >= bits::count(sel) + 1
            });
            let g = h.incidence_bigraph().unwrap();
            let trimmed = check_t2_forest(&g).unwrap().is_feasible();
            assert_eq!(union_ok, trimmed, "hypergraph {current:?}");
        }
    }
}
