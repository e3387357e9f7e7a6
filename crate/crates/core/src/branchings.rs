//! Packing arc-disjoint branchings: prescribed root-sets, prescribed sizes,
//! prescribed indegrees of the union, and fully bounded variants.
//!
//! The size/indegree/bounded variants all reduce to covering a demand
//! function with a simple bigraph whose S side indexes the branchings; the
//! neighbourhoods of the S-nodes are admissible root-sets, which the
//! root-set packer then realizes arc by arc.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{self, Mask};
use crate::error::Error;
use crate::ext::Ext;
use crate::graph::{Bigraph, Digraph};
use crate::realize::{self, Certificate, DegreeBounds};
use crate::setfn::{SetFunctionOnT, SpTable};
use crate::{Outcome, Verdict};

/// Cap for the subset sweeps in the feasibility checks.
pub const NODE_CAP: usize = 16;

/// A branching given by its root-set and arc list. Every node outside the
/// root-set has in-degree exactly 1, root nodes have in-degree 0, and the
/// arcs are acyclic; so `|arcs| + |root_set| = n` always holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branching {
    root_set: Mask,
    arcs: Vec<(usize, usize)>,
}

impl Branching {
    pub fn new(n: usize, root_set: Mask, arcs: Vec<(usize, usize)>) -> Result<Branching, Error> {
        let b = Branching { root_set, arcs };
        b.verify(n)?;
        Ok(b)
    }

    pub fn root_set(&self) -> Mask {
        self.root_set
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn size(&self) -> usize {
        self.arcs.len()
    }

    /// Checks the branching invariants from scratch.
    pub fn verify(&self, n: usize) -> Result<(), Error> {
        if self.root_set & !bits::full_mask(n) != 0 {
            return Err(Error::invalid("root-set out of range"));
        }
        let mut indeg = vec![0usize; n];
        for &(u, v) in &self.arcs {
            if u >= n || v >= n || u == v {
                return Err(Error::invalid("bad arc in branching"));
            }
            indeg[v] += 1;
        }
        for v in 0..n {
            let expected = usize::from(!bits::contains(self.root_set, v));
            if indeg[v] != expected {
                return Err(Error::defect(format!(
                    "node {v} has in-degree {} in a branching where {expected} is required",
                    indeg[v]
                )));
            }
        }
        if self.arcs.len() + bits::count(self.root_set) != n {
            return Err(Error::defect("branching size plus root-size must equal n"));
        }
        // Acyclic: walk parent pointers; meeting a node of the current walk
        // again means a cycle.
        let mut parent = vec![usize::MAX; n];
        for &(u, v) in &self.arcs {
            parent[v] = u;
        }
        let mut state = vec![0u8; n]; // 0 fresh, 1 on current walk, 2 settled
        for start in 0..n {
            if state[start] != 0 {
                continue;
            }
            let mut path = Vec::new();
            let mut v = start;
            loop {
                if state[v] == 1 {
                    return Err(Error::defect("cycle in branching"));
                }
                if state[v] == 2 {
                    break;
                }
                state[v] = 1;
                path.push(v);
                if parent[v] == usize::MAX {
                    break;
                }
                v = parent[v];
            }
            for p in path {
                state[p] = 2;
            }
        }
        Ok(())
    }
}

/// Size prescriptions, size+indegree prescriptions, or interval bounds.
#[derive(Clone, Debug)]
pub enum PackMode {
    /// Branching `j` must have exactly `sizes[j]` arcs.
    Sizes(Vec<i64>),
    /// Additionally the union must have in-degree `m_in(v)` at every node.
    SizesIndeg { sizes: Vec<i64>, m_in: Vec<i64> },
    /// Intervals on each size, each union-indegree, and the total size.
    Bounds(BranchingBounds),
}

#[derive(Clone, Debug)]
pub struct BranchingBounds {
    pub size_lo: Vec<i64>,
    pub size_hi: Vec<i64>,
    pub indeg_lo: Vec<i64>,
    pub indeg_hi: Vec<i64>,
    pub total_lo: i64,
    pub total_hi: Ext,
}

#[derive(Clone, Debug)]
pub struct PackingRequest {
    pub digraph: Digraph,
    pub k: usize,
    pub mode: PackMode,
}

impl PackingRequest {
    pub fn sizes(digraph: Digraph, sizes: Vec<i64>) -> PackingRequest {
        PackingRequest {
            digraph,
            k: sizes.len(),
            mode: PackMode::Sizes(sizes),
        }
    }

    pub fn sizes_indeg(digraph: Digraph, sizes: Vec<i64>, m_in: Vec<i64>) -> PackingRequest {
        PackingRequest {
            digraph,
            k: sizes.len(),
            mode: PackMode::SizesIndeg { sizes, m_in },
        }
    }

    pub fn bounds(digraph: Digraph, k: usize, bounds: BranchingBounds) -> PackingRequest {
        PackingRequest {
            digraph,
            k,
            mode: PackMode::Bounds(bounds),
        }
    }

    /// `k` spanning arborescences, node `v` a root of at least `f(v)` and at
    /// most `g(v)` of them.
    pub fn rooted_spanning(digraph: Digraph, k: usize, f: Vec<i64>, g: Vec<i64>) -> PackingRequest {
        let n = digraph.node_count() as i64;
        let kk = k as i64;
        let bounds = BranchingBounds {
            size_lo: vec![n - 1; k],
            size_hi: vec![n - 1; k],
            indeg_lo: g.iter().map(|&gv| (kk - gv).max(0)).collect(),
            indeg_hi: f.iter().map(|&fv| (kk - fv).min(kk)).collect(),
            total_lo: 0,
            total_hi: Ext::PosInf,
        };
        PackingRequest::bounds(digraph, k, bounds)
    }

    /// `k` branchings all of size exactly `mu`, in interval form.
    pub fn uniform_size(digraph: Digraph, k: usize, mu: i64) -> PackingRequest {
        let n = digraph.node_count();
        let bounds = BranchingBounds {
            size_lo: vec![mu; k],
            size_hi: vec![mu; k],
            indeg_lo: vec![0; n],
            indeg_hi: vec![k as i64; n],
            total_lo: 0,
            total_hi: Ext::PosInf,
        };
        PackingRequest::bounds(digraph, k, bounds)
    }
}

/// Infeasibility witnesses in branching vocabulary.
#[derive(Clone, Debug)]
pub enum PackCertificate {
    /// A node set entered by fewer arcs than the number of root-sets
    /// disjoint from it: `demand > capacity`.
    Cut { x: Mask, demand: i64, capacity: i64 },
    /// A subpartition (with an optional singleton collection `y` for the
    /// indegree variant) whose in-degree total is below the demand:
    /// `lhs` is the demand, `rhs` the available in-degree total.
    Subpartition {
        y: Mask,
        parts: Vec<Mask>,
        lhs: i64,
        rhs: i64,
    },
    /// A violated condition of the derived degree-bounds instance (branch
    /// indices on the S side, nodes on the T side).
    Bounds(Certificate),
}

fn require_loopless(d: &Digraph) -> Result<(), Error> {
    if d.has_loops() {
        return Err(Error::invalid("digraph with loops not allowed in branching packings"));
    }
    Ok(())
}

fn require_node_cap(d: &Digraph) -> Result<(), Error> {
    if d.node_count() > NODE_CAP {
        return Err(Error::capacity(format!(
            "subset sweep over {} nodes exceeds the cap of {NODE_CAP}",
            d.node_count()
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Prescribed root-sets.
// ---------------------------------------------------------------------------

/// Do `k` arc-disjoint branchings with the given root-sets exist? Checks
/// that every non-empty node set is entered by at least as many arcs as
/// there are root-sets disjoint from it.
pub fn check_edmonds(d: &Digraph, root_sets: &[Mask]) -> Result<Verdict<PackCertificate>, Error> {
    require_loopless(d)?;
    require_node_cap(d)?;
    let full = d.full_mask();
    for (j, &r) in root_sets.iter().enumerate() {
        if r == 0 {
            return Err(Error::precondition(format!("root-set {j} is empty")));
        }
        if r & !full != 0 {
            return Err(Error::invalid(format!("root-set {j} out of range")));
        }
    }
    let mut worst: Option<PackCertificate> = None;
    let mut worst_gap = 0;
    for x in 1..=full {
        let capacity = d.in_degree(x)?;
        let demand = root_sets.iter().filter(|&&r| r & x == 0).count() as i64;
        if demand > capacity && demand - capacity > worst_gap {
            worst_gap = demand - capacity;
            worst = Some(PackCertificate::Cut {
                x,
                demand,
                capacity,
            });
        }
    }
    Ok(match worst {
        None => Outcome::Feasible(()),
        Some(c) => Outcome::Infeasible(c),
    })
}

/// Builds `k` arc-disjoint branchings with the prescribed root-sets by
/// growing them arc by arc. A candidate arc is kept only if the remaining
/// arcs still enter every node set at least as often as there are grown
/// branchings not yet touching it; this invariant is the packing analogue
/// of the feasibility condition, so a valid arc always exists and
/// backtracking is insurance only.
pub fn pack_edmonds(
    d: &Digraph,
    root_sets: &[Mask],
) -> Result<Outcome<Vec<Branching>, PackCertificate>, Error> {
    if let Outcome::Infeasible(cert) = check_edmonds(d, root_sets)? {
        return Ok(Outcome::Infeasible(cert));
    }
    let full = d.full_mask();
    let arcs = d.arcs();
    let k = root_sets.len();

    let mut covered: Vec<Mask> = root_sets.to_vec();
    let mut used = vec![false; arcs.len()];
    let mut assigned: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    // Each frame records (branching index, arc index) of one commitment.
    let mut frames: Vec<(usize, usize)> = Vec::new();
    let mut resume = 0usize;
    let mut budget: usize = 100_000;

    let invariant_ok = |covered: &[Mask], used: &[bool]| -> bool {
        for x in 1..=full {
            let mut capacity = 0i64;
            for (i, &(u, v)) in arcs.iter().enumerate() {
                if !used[i] && !bits::contains(x, u) && bits::contains(x, v) {
                    capacity += 1;
                }
            }
            let demand = covered.iter().filter(|&&c| c & x == 0).count() as i64;
            if demand > capacity {
                return false;
            }
        }
        true
    };

    loop {
        let Some(j) = (0..k).find(|&j| covered[j] != full) else {
            break;
        };
        let mut committed = false;
        for i in resume..arcs.len() {
            if used[i] {
                continue;
            }
            let (u, v) = arcs[i];
            if !bits::contains(covered[j], u) || bits::contains(covered[j], v) {
                continue;
            }
            if budget == 0 {
                return Err(Error::defect("packing search budget exhausted"));
            }
            budget -= 1;
            used[i] = true;
            covered[j] |= bits::bit(v);
            if invariant_ok(&covered, &used) {
                assigned[j].push((u, v));
                frames.push((j, i));
                resume = 0;
                committed = true;
                break;
            }
            used[i] = false;
            covered[j] &= !bits::bit(v);
        }
        if !committed {
            let Some((pj, pi)) = frames.pop() else {
                return Err(Error::defect(
                    "no extendable arc although the packing invariant held",
                ));
            };
            let (u, v) = arcs[pi];
            let _ = u;
            used[pi] = false;
            covered[pj] &= !bits::bit(v);
            let popped = assigned[pj].pop();
            debug_assert_eq!(popped, Some(arcs[pi]));
            resume = pi + 1;
        }
    }

    let packing: Vec<Branching> = root_sets
        .iter()
        .zip(assigned)
        .map(|(&r, arcs)| Branching { root_set: r, arcs })
        .collect();
    verify_packing(d, root_sets, &packing)?;
    Ok(Outcome::Feasible(packing))
}

/// Independent verifier: arc-disjointness with multiplicities, branching
/// invariants, and root-set agreement. Used after every construction and by
/// the test suites.
pub fn verify_packing(
    d: &Digraph,
    root_sets: &[Mask],
    packing: &[Branching],
) -> Result<(), Error> {
    if packing.len() != root_sets.len() {
        return Err(Error::defect("packing size does not match the root-set count"));
    }
    let n = d.node_count();
    for (j, b) in packing.iter().enumerate() {
        if b.root_set() != root_sets[j] {
            return Err(Error::defect(format!("branching {j} has the wrong root-set")));
        }
        b.verify(n)?;
    }
    // Multiset containment: arcs used across all branchings must not exceed
    // the digraph's multiplicities.
    let mut usage: Vec<((usize, usize), i64)> = Vec::new();
    for b in packing {
        for &a in b.arcs() {
            match usage.iter_mut().find(|(arc, _)| *arc == a) {
                Some((_, c)) => *c += 1,
                None => usage.push((a, 1)),
            }
        }
    }
    for (arc, c) in usage {
        let avail = d.arcs().iter().filter(|&&a| a == arc).count() as i64;
        if c > avail {
            return Err(Error::defect(format!(
                "arc {arc:?} used {c} times but only {avail} copies exist"
            )));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Prescribed sizes.
// ---------------------------------------------------------------------------

fn validate_sizes(d: &Digraph, sizes: &[i64]) -> Result<(), Error> {
    let n = d.node_count() as i64;
    for (j, &mu) in sizes.iter().enumerate() {
        if mu < 1 || mu > n - 1 {
            return Err(Error::precondition(format!(
                "size {mu} of branching {j} outside 1..={}",
                n - 1
            )));
        }
    }
    Ok(())
}

/// Do `k` arc-disjoint branchings with the prescribed sizes exist? Decided
/// through the subpartition-count form of the covering condition: one
/// subset-DP answers every part count at once.
pub fn check_pack_sizes(req: &PackingRequest) -> Result<Verdict<PackCertificate>, Error> {
    let PackMode::Sizes(sizes) = &req.mode else {
        return Err(Error::invalid("request mode must be Sizes"));
    };
    require_loopless(&req.digraph)?;
    require_node_cap(&req.digraph)?;
    validate_sizes(&req.digraph, sizes)?;
    let n = req.digraph.node_count();
    let root_sizes: Vec<i64> = sizes.iter().map(|&mu| n as i64 - mu).collect();
    let p = SetFunctionOnT::branching_indeg(req.digraph.clone(), req.k as i64, None)?;
    let sp = SpTable::build(&p)?;
    let full = bits::full_mask(n);
    let mut worst: Option<(i64, usize)> = None;
    for q in 0..=n {
        if let Ext::Fin(sum) = sp.max(full, q) {
            let rhs: i64 = root_sizes.iter().map(|&m| m.min(q as i64)).sum();
            if sum > rhs && worst.is_none_or(|(gap, _)| sum - rhs > gap) {
                worst = Some((sum - rhs, q));
            }
        }
    }
    let Some((_, q)) = worst else {
        return Ok(Outcome::Feasible(()));
    };
    let parts = sp.argmax(full, q).expect("finite DP maximum has a witness");
    // Translate to in-degree vocabulary: demand versus available in-degrees.
    let mut capacity = 0i64;
    for &part in parts.parts() {
        capacity += req.digraph.in_degree(part)?;
    }
    let demand: i64 = sizes
        .iter()
        .map(|&mu| (q as i64 - (n as i64 - mu)).max(0))
        .sum();
    if demand <= capacity {
        return Err(Error::defect("certificate translation lost the violation"));
    }
    Ok(Outcome::Infeasible(PackCertificate::Subpartition {
        y: 0,
        parts: parts.parts().to_vec(),
        lhs: demand,
        rhs: capacity,
    }))
}

/// Both sides of the size-packing inequality for a subpartition.
pub fn pack_sizes_sides(
    d: &Digraph,
    sizes: &[i64],
    parts: &[Mask],
) -> Result<(i64, i64), Error> {
    let n = d.node_count() as i64;
    let q = parts.len() as i64;
    let demand: i64 = sizes.iter().map(|&mu| (q - (n - mu)).max(0)).sum();
    let mut capacity = 0i64;
    for &part in parts {
        capacity += d.in_degree(part)?;
    }
    Ok((demand, capacity))
}

fn roots_from_graph(g: &Bigraph) -> Vec<Mask> {
    let mut roots = vec![0 as Mask; g.s_size()];
    for &(s, t) in g.edges() {
        roots[s] |= bits::bit(t);
    }
    roots
}

/// Packs `k` arc-disjoint branchings of exactly the prescribed sizes:
/// root-set sizes become a degree specification on the branching indices,
/// the covering construction picks admissible root-sets, and the root-set
/// packer finishes the job.
pub fn pack_sizes(req: &PackingRequest) -> Result<Outcome<Vec<Branching>, PackCertificate>, Error> {
    let PackMode::Sizes(sizes) = &req.mode else {
        return Err(Error::invalid("request mode must be Sizes"));
    };
    if let Outcome::Infeasible(cert) = check_pack_sizes(req)? {
        return Ok(Outcome::Infeasible(cert));
    }
    let n = req.digraph.node_count();
    let root_sizes: Vec<i64> = sizes.iter().map(|&mu| n as i64 - mu).collect();
    let p = SetFunctionOnT::branching_indeg(req.digraph.clone(), req.k as i64, None)?;
    let g = match realize::construct_cover_s(&root_sizes, &p)? {
        Outcome::Feasible(g) => g,
        Outcome::Infeasible(_) => {
            return Err(Error::defect(
                "root-set instance infeasible although the size check passed",
            ));
        }
    };
    let roots = roots_from_graph(&g);
    let packing = match pack_edmonds(&req.digraph, &roots)? {
        Outcome::Feasible(p) => p,
        Outcome::Infeasible(_) => {
            return Err(Error::defect(
                "admissible root-sets rejected by the root-set packer",
            ));
        }
    };
    for (j, b) in packing.iter().enumerate() {
        if b.size() as i64 != sizes[j] {
            return Err(Error::defect(format!("branching {j} has the wrong size")));
        }
    }
    Ok(Outcome::Feasible(packing))
}

// ---------------------------------------------------------------------------
// Prescribed sizes and union indegrees.
// ---------------------------------------------------------------------------

/// Packs `k` branchings with prescribed sizes whose union has in-degree
/// exactly `m_in(v)` at every node. The demand function carries the
/// indegree prescription on singletons.
pub fn pack_sizes_indeg(
    req: &PackingRequest,
) -> Result<Outcome<Vec<Branching>, PackCertificate>, Error> {
    let PackMode::SizesIndeg { sizes, m_in } = &req.mode else {
        return Err(Error::invalid("request mode must be SizesIndeg"));
    };
    require_loopless(&req.digraph)?;
    require_node_cap(&req.digraph)?;
    validate_sizes(&req.digraph, sizes)?;
    let n = req.digraph.node_count();
    if m_in.len() != n {
        return Err(Error::invalid("indegree prescription length must be n"));
    }
    let rho = req.digraph.in_degrees();
    for v in 0..n {
        if m_in[v] < 0 || m_in[v] > rho[v] || m_in[v] > req.k as i64 {
            return Err(Error::precondition(format!(
                "indegree prescription {} at node {v} outside 0..=min({}, {})",
                m_in[v], rho[v], req.k
            )));
        }
    }
    let total_size: i64 = sizes.iter().sum();
    let total_in: i64 = m_in.iter().sum();
    if total_size != total_in {
        return Err(Error::precondition(format!(
            "total size {total_size} must equal the total prescribed indegree {total_in}"
        )));
    }
    let root_sizes: Vec<i64> = sizes.iter().map(|&mu| n as i64 - mu).collect();
    let p = SetFunctionOnT::branching_indeg(req.digraph.clone(), req.k as i64, Some(m_in.clone()))?;
    match realize::check_cover_s(&root_sizes, &p)? {
        Outcome::Feasible(()) => {}
        Outcome::Infeasible(cert) => {
            // Split the violating family: singleton parts carry the
            // indegree prescription, larger parts the cut capacities.
            let mut y = 0 as Mask;
            let mut parts = Vec::new();
            for &part in cert.parts.parts() {
                if bits::count(part) == 1 {
                    y |= part;
                } else {
                    parts.push(part);
                }
            }
            let q = parts.len() as i64 + bits::count(y) as i64;
            let demand: i64 = sizes
                .iter()
                .map(|&mu| (q - (n as i64 - mu)).max(0))
                .sum();
            let mut capacity = bits::mask_sum(m_in, y);
            for &part in &parts {
                capacity += req.digraph.in_degree(part)?;
            }
            if demand <= capacity {
                return Err(Error::defect("certificate translation lost the violation"));
            }
            return Ok(Outcome::Infeasible(PackCertificate::Subpartition {
                y,
                parts,
                lhs: demand,
                rhs: capacity,
            }));
        }
    }
    let g = match realize::construct_cover_s(&root_sizes, &p)? {
        Outcome::Feasible(g) => g,
        Outcome::Infeasible(_) => {
            return Err(Error::defect("construction failed after a feasible check"));
        }
    };
    let roots = roots_from_graph(&g);
    let packing = match pack_edmonds(&req.digraph, &roots)? {
        Outcome::Feasible(p) => p,
        Outcome::Infeasible(_) => {
            return Err(Error::defect("admissible root-sets rejected by the packer"));
        }
    };
    let mut indeg = vec![0i64; n];
    for b in &packing {
        for &(_, v) in b.arcs() {
            indeg[v] += 1;
        }
    }
    if indeg != *m_in {
        return Err(Error::defect("union indegrees do not match the prescription"));
    }
    for (j, b) in packing.iter().enumerate() {
        if b.size() as i64 != sizes[j] {
            return Err(Error::defect(format!("branching {j} has the wrong size")));
        }
    }
    Ok(Outcome::Feasible(packing))
}

/// Both sides of the indegree-variant inequality at `(y, parts)`.
pub fn pack_indeg_sides(
    d: &Digraph,
    sizes: &[i64],
    m_in: &[i64],
    y: Mask,
    parts: &[Mask],
) -> Result<(i64, i64), Error> {
    let n = d.node_count() as i64;
    let q = parts.len() as i64 + bits::count(y) as i64;
    let demand: i64 = sizes.iter().map(|&mu| (q - (n - mu)).max(0)).sum();
    let mut capacity = bits::mask_sum(m_in, y);
    for &part in parts {
        capacity += d.in_degree(part)?;
    }
    Ok((demand, capacity))
}

// ---------------------------------------------------------------------------
// Interval bounds on sizes, indegrees, and total size.
// ---------------------------------------------------------------------------

/// The degree-bounds instance a bounded packing request reduces to: branch
/// indices on the S side (degree = root-set size = n - branching size),
/// nodes on the T side (degree = k - union indegree), edge count = kn -
/// total size.
pub fn derived_bounds(req: &PackingRequest) -> Result<(DegreeBounds, SetFunctionOnT), Error> {
    let PackMode::Bounds(b) = &req.mode else {
        return Err(Error::invalid("request mode must be Bounds"));
    };
    let n = req.digraph.node_count() as i64;
    let k = req.k as i64;
    if b.size_lo.len() != req.k || b.size_hi.len() != req.k {
        return Err(Error::invalid("size bound vectors must have length k"));
    }
    if b.indeg_lo.len() != req.digraph.node_count() || b.indeg_hi.len() != req.digraph.node_count()
    {
        return Err(Error::invalid("indegree bound vectors must have length n"));
    }
    for j in 0..req.k {
        if b.size_lo[j] < 0 || b.size_lo[j] > b.size_hi[j] || b.size_hi[j] > n - 1 {
            return Err(Error::precondition(format!(
                "size interval of branching {j} outside 0..={}",
                n - 1
            )));
        }
    }
    for v in 0..req.digraph.node_count() {
        if b.indeg_lo[v] < 0 || b.indeg_lo[v] > b.indeg_hi[v] || b.indeg_hi[v] > k {
            return Err(Error::precondition(format!(
                "indegree interval of node {v} outside 0..={k}"
            )));
        }
    }
    if Ext::Fin(b.total_lo) > b.total_hi {
        return Err(Error::precondition("total-size interval is empty"));
    }
    let alpha = match b.total_hi {
        Ext::Fin(hi) => Ext::Fin(k * n - hi),
        _ => Ext::NegInf,
    };
    let beta = Ext::Fin(k * n - b.total_lo);
    let bounds = DegreeBounds {
        f_s: b.size_hi.iter().map(|&gj| Ext::Fin(n - gj)).collect(),
        g_s: b.size_lo.iter().map(|&fj| Ext::Fin(n - fj)).collect(),
        f_t: b.indeg_hi.iter().map(|&gv| Ext::Fin(k - gv)).collect(),
        g_t: b.indeg_lo.iter().map(|&fv| Ext::Fin(k - fv)).collect(),
        alpha,
        beta,
    };
    let p = SetFunctionOnT::branching_indeg(req.digraph.clone(), k, None)?;
    Ok((bounds, p))
}

/// Checks a bounded packing request.
pub fn check_pack_bounds(req: &PackingRequest) -> Result<Verdict<PackCertificate>, Error> {
    require_loopless(&req.digraph)?;
    require_node_cap(&req.digraph)?;
    let (bounds, p) = derived_bounds(req)?;
    match realize::check_bounds(&bounds, &p)? {
        Outcome::Infeasible(cert) => return Ok(Outcome::Infeasible(PackCertificate::Bounds(cert))),
        Outcome::Feasible(()) => {}
    }
    match realize::check_bounds_edges(&bounds, &p)? {
        Outcome::Infeasible(cert) => Ok(Outcome::Infeasible(PackCertificate::Bounds(cert))),
        Outcome::Feasible(()) => Ok(Outcome::Feasible(())),
    }
}

/// Packs under interval bounds by constructing the derived degree-bounded
/// bigraph and reading off root-sets.
pub fn pack_bounds(req: &PackingRequest) -> Result<Outcome<Vec<Branching>, PackCertificate>, Error> {
    let PackMode::Bounds(b) = &req.mode else {
        return Err(Error::invalid("request mode must be Bounds"));
    };
    require_loopless(&req.digraph)?;
    require_node_cap(&req.digraph)?;
    let (bounds, p) = derived_bounds(req)?;
    match realize::check_bounds(&bounds, &p)? {
        Outcome::Infeasible(cert) => return Ok(Outcome::Infeasible(PackCertificate::Bounds(cert))),
        Outcome::Feasible(()) => {}
    }
    let g = match realize::construct_bounds(&bounds, &p)? {
        Outcome::Feasible(g) => g,
        Outcome::Infeasible(cert) => return Ok(Outcome::Infeasible(PackCertificate::Bounds(cert))),
    };
    let roots = roots_from_graph(&g);
    let packing = match pack_edmonds(&req.digraph, &roots)? {
        Outcome::Feasible(p) => p,
        Outcome::Infeasible(_) => {
            return Err(Error::defect("admissible root-sets rejected by the packer"));
        }
    };
    // Verify every requested interval on the packing itself.
    let n = req.digraph.node_count();
    let mut total = 0i64;
    let mut indeg = vec![0i64; n];
    for (j, br) in packing.iter().enumerate() {
        let size = br.size() as i64;
        if size < b.size_lo[j] || size > b.size_hi[j] {
            return Err(Error::defect(format!("branching {j} size {size} escapes its interval")));
        }
        total += size;
        for &(_, v) in br.arcs() {
            indeg[v] += 1;
        }
    }
    for v in 0..n {
        if indeg[v] < b.indeg_lo[v] || indeg[v] > b.indeg_hi[v] {
            return Err(Error::defect(format!("union indegree at {v} escapes its interval")));
        }
    }
    if total < b.total_lo || Ext::Fin(total) > b.total_hi {
        return Err(Error::defect("total size escapes its interval"));
    }
    Ok(Outcome::Feasible(packing))
}

/// Dispatch over the request mode.
pub fn pack(req: &PackingRequest) -> Result<Outcome<Vec<Branching>, PackCertificate>, Error> {
    match &req.mode {
        PackMode::Sizes(_) => pack_sizes(req),
        PackMode::SizesIndeg { .. } => pack_sizes_indeg(req),
        PackMode::Bounds(_) => pack_bounds(req),
    }
}

pub fn check(req: &PackingRequest) -> Result<Verdict<PackCertificate>, Error> {
    match &req.mode {
        PackMode::Sizes(_) => check_pack_sizes(req),
        PackMode::SizesIndeg { .. } => match pack_sizes_indeg(req)? {
            Outcome::Feasible(_) => Ok(Outcome::Feasible(())),
            Outcome::Infeasible(c) => Ok(Outcome::Infeasible(c)),
        },
        PackMode::Bounds(_) => check_pack_bounds(req),
    }
}
