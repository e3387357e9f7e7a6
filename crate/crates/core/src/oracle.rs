//! Exhaustive ground truth at desk scale. Everything here re-decides the
//! problems of the other modules by raw enumeration, with its own condition
//! arithmetic, its own matching search, and its own subpartition recursion.
//! The duplication is deliberate: correlated bugs between checker and oracle
//! would defeat the test suites, so no evaluation helpers are shared with
//! the main path.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{self, Mask};
use crate::branchings::{Branching, PackMode, PackingRequest};
use crate::error::Error;
use crate::ext::Ext;
use crate::graph::Bigraph;
use crate::realize::DegreeBounds;
use crate::setfn::SetFunctionOnT;

/// Hard size gates for the exhaustive sweeps. Enumeration beyond the budget
/// is refused with a capacity error, never silently sampled. The step cap is
/// a deterministic work counter.
#[derive(Clone, Copy, Debug)]
pub struct OracleBudget {
    pub max_s: usize,
    pub max_t: usize,
    pub max_n: usize,
    pub max_arcs: usize,
    /// Cap on `|S| * |T|`, the exponent of the bigraph sweep.
    pub max_edges: usize,
    pub max_steps: u64,
}

impl Default for OracleBudget {
    fn default() -> OracleBudget {
        OracleBudget {
            max_s: 6,
            max_t: 6,
            max_n: 5,
            max_arcs: 9,
            max_edges: 20,
            max_steps: 1 << 33,
        }
    }
}

/// Degree requirement for the bigraph sweep.
#[derive(Clone, Copy, Debug)]
pub enum DegreeRequirement<'a> {
    Exact {
        m_s: &'a [i64],
        m_t: &'a [i64],
    },
    Box {
        f_s: &'a [i64],
        g_s: &'a [i64],
        f_t: &'a [i64],
        g_t: &'a [i64],
        alpha: i64,
        beta: i64,
    },
}

impl DegreeRequirement<'_> {
    fn sizes(&self) -> (usize, usize) {
        match self {
            DegreeRequirement::Exact { m_s, m_t } => (m_s.len(), m_t.len()),
            DegreeRequirement::Box { f_s, f_t, .. } => (f_s.len(), f_t.len()),
        }
    }
}

/// Predicate tested on each enumerated graph.
#[derive(Clone, Copy)]
pub enum GraphPredicate<'a> {
    Any,
    Covers(&'a SetFunctionOnT),
    MatchingAtLeast(i64),
    HasDegreeForest(&'a [i64]),
}

struct StepCounter {
    left: u64,
}

impl StepCounter {
    fn tick(&mut self) -> Result<(), Error> {
        if self.left == 0 {
            return Err(Error::capacity("oracle step budget exhausted"));
        }
        self.left -= 1;
        Ok(())
    }
}

/// Enumerates every simple bigraph satisfying the degree requirement, in
/// lexicographic order of row masks, and returns the first one satisfying
/// the predicate. `None` means the sweep was exhaustive and found nothing.
pub fn oracle_bigraphs(
    req: &DegreeRequirement<'_>,
    pred: &GraphPredicate<'_>,
    budget: &OracleBudget,
) -> Result<Option<Bigraph>, Error> {
    let (s_size, t_size) = req.sizes();
    if s_size > budget.max_s || t_size > budget.max_t || s_size * t_size > budget.max_edges {
        return Err(Error::capacity(format!(
            "bigraph sweep over {s_size}x{t_size} exceeds the oracle budget"
        )));
    }
    let mut steps = StepCounter {
        left: budget.max_steps,
    };
    let mut rows: Vec<Mask> = vec![0; s_size];
    let mut cols: Vec<i64> = vec![0; t_size];
    search_rows(req, pred, 0, &mut rows, &mut cols, 0, &mut steps)
}

fn search_rows(
    req: &DegreeRequirement<'_>,
    pred: &GraphPredicate<'_>,
    s: usize,
    rows: &mut Vec<Mask>,
    cols: &mut Vec<i64>,
    edges_so_far: i64,
    steps: &mut StepCounter,
) -> Result<Option<Bigraph>, Error> {
    let (s_size, t_size) = req.sizes();
    steps.tick()?;
    if s == s_size {
        let ok = match req {
            DegreeRequirement::Exact { m_t, .. } => cols.iter().zip(*m_t).all(|(&c, &m)| c == m),
            DegreeRequirement::Box {
                f_t, alpha, beta, ..
            } => {
                cols.iter().zip(*f_t).all(|(&c, &f)| c >= f)
                    && edges_so_far >= *alpha
                    && edges_so_far <= *beta
            }
        };
        if !ok || !predicate_holds(pred, rows, t_size)? {
            return Ok(None);
        }
        let mut edges = Vec::new();
        for (i, &row) in rows.iter().enumerate() {
            for t in bits::elements(row) {
                edges.push((i, t));
            }
        }
        return Ok(Some(Bigraph::simple(s_size, t_size, edges)?));
    }
    let (lo, hi) = match req {
        DegreeRequirement::Exact { m_s, .. } => (m_s[s], m_s[s]),
        DegreeRequirement::Box { f_s, g_s, .. } => (f_s[s].max(0), g_s[s].min(t_size as i64)),
    };
    for row in 0..=bits::full_mask(t_size) {
        let deg = bits::count(row) as i64;
        if deg < lo || deg > hi {
            continue;
        }
        // Column prune: never exceed the upper column bounds.
        let mut fits = true;
        for t in bits::elements(row) {
            let cap = match req {
                DegreeRequirement::Exact { m_t, .. } => m_t[t],
                DegreeRequirement::Box { g_t, .. } => g_t[t],
            };
            if cols[t] + 1 > cap {
                fits = false;
                break;
            }
        }
        if !fits {
            continue;
        }
        if let DegreeRequirement::Box { beta, .. } = req {
            if edges_so_far + deg > *beta {
                continue;
            }
        }
        rows[s] = row;
        for t in bits::elements(row) {
            cols[t] += 1;
        }
        let found = search_rows(req, pred, s + 1, rows, cols, edges_so_far + deg, steps)?;
        for t in bits::elements(row) {
            cols[t] -= 1;
        }
        rows[s] = 0;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn predicate_holds(
    pred: &GraphPredicate<'_>,
    rows: &[Mask],
    t_size: usize,
) -> Result<bool, Error> {
    Ok(match pred {
        GraphPredicate::Any => true,
        GraphPredicate::Covers(p) => {
            let mut ok = true;
            for y in 1..=bits::full_mask(t_size) {
                let gamma_count = rows.iter().filter(|&&row| row & y != 0).count() as i64;
                if gamma_count < p.eval(y)? {
                    ok = false;
                    break;
                }
            }
            ok
        }
        GraphPredicate::MatchingAtLeast(ell) => matching_number(rows, t_size) >= *ell,
        GraphPredicate::HasDegreeForest(m_for) => has_degree_forest(rows, t_size, m_for),
    })
}

/// Matching number by augmenting alternating paths from the T side.
fn matching_number(rows: &[Mask], t_size: usize) -> i64 {
    let mut owner_s: Vec<Option<usize>> = vec![None; rows.len()];
    let mut nu = 0;
    for t in 0..t_size {
        let mut tried = vec![false; rows.len()];
        if claim(rows, t, &mut owner_s, &mut tried) {
            nu += 1;
        }
    }
    nu
}

fn claim(rows: &[Mask], t: usize, owner_s: &mut [Option<usize>], tried: &mut [bool]) -> bool {
    for s in 0..rows.len() {
        if tried[s] || !bits::contains(rows[s], t) {
            continue;
        }
        tried[s] = true;
        if owner_s[s].is_none() || claim(rows, owner_s[s].unwrap(), owner_s, tried) {
            owner_s[s] = Some(t);
            return true;
        }
    }
    false
}

/// Forest with exact T-degrees, by trying every way to pick the edges.
fn has_degree_forest(rows: &[Mask], t_size: usize, m_for: &[i64]) -> bool {
    fn parent_find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    fn place(
        rows: &[Mask],
        t_size: usize,
        m_for: &[i64],
        t: usize,
        parent: &mut Vec<usize>,
    ) -> bool {
        if t == t_size {
            return true;
        }
        let nbrs: Vec<usize> = (0..rows.len())
            .filter(|&s| bits::contains(rows[s], t))
            .collect();
        let need = m_for[t] as usize;
        fn choose(
            rows: &[Mask],
            t_size: usize,
            m_for: &[i64],
            t: usize,
            nbrs: &[usize],
            from: usize,
            need: usize,
            parent: &mut Vec<usize>,
        ) -> bool {
            if need == 0 {
                return place(rows, t_size, m_for, t + 1, parent);
            }
            for i in from..nbrs.len() {
                let saved = parent.clone();
                let a = parent_find(parent, nbrs[i]);
                let b = parent_find(parent, rows.len() + t);
                if a != b {
                    parent[a] = b;
                    if choose(rows, t_size, m_for, t, nbrs, i + 1, need - 1, parent) {
                        return true;
                    }
                }
                *parent = saved;
            }
            false
        }
        choose(rows, t_size, m_for, t, &nbrs, 0, need, parent)
    }
    let mut parent: Vec<usize> = (0..rows.len() + t_size).collect();
    place(rows, t_size, m_for, 0, &mut parent)
}

/// Largest matching number over all simple bigraphs fitting `(m_s, m_t)`;
/// `None` when no graph fits at all.
pub fn oracle_max_term_rank(
    m_s: &[i64],
    m_t: &[i64],
    budget: &OracleBudget,
) -> Result<Option<i64>, Error> {
    let top = m_s.len().min(m_t.len()) as i64;
    for ell in (0..=top).rev() {
        let req = DegreeRequirement::Exact { m_s, m_t };
        if oracle_bigraphs(&req, &GraphPredicate::MatchingAtLeast(ell), budget)?.is_some() {
            return Ok(Some(ell));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Branching packings.
// ---------------------------------------------------------------------------

/// Exhaustively assigns every arc to one of the `k` branchings or to
/// "unused" and tests all constraints of the request. Returns the first
/// valid packing in assignment order, or `None` after an exhaustive sweep.
pub fn oracle_pack_branchings(
    req: &PackingRequest,
    budget: &OracleBudget,
) -> Result<Option<Vec<Branching>>, Error> {
    let d = &req.digraph;
    let n = d.node_count();
    let arcs = d.arcs();
    if n > budget.max_n || arcs.len() > budget.max_arcs {
        return Err(Error::capacity(format!(
            "packing sweep over n={n}, |A|={} exceeds the oracle budget",
            arcs.len()
        )));
    }
    let states = (req.k as u64 + 1).checked_pow(arcs.len() as u32);
    if states.is_none_or(|s| s > budget.max_steps) {
        return Err(Error::capacity("packing sweep exceeds the oracle step budget"));
    }
    if d.arcs().iter().any(|&(u, v)| u == v) {
        return Err(Error::invalid("loops not allowed in packing requests"));
    }
    let mut assign = vec![0usize; arcs.len()];
    loop {
        if let Some(packing) = packing_from_assignment(req, &assign)? {
            return Ok(Some(packing));
        }
        // Increment the mixed-radix assignment vector.
        let mut i = 0;
        loop {
            if i == arcs.len() {
                return Ok(None);
            }
            assign[i] += 1;
            if assign[i] <= req.k {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

fn packing_from_assignment(
    req: &PackingRequest,
    assign: &[usize],
) -> Result<Option<Vec<Branching>>, Error> {
    let d = &req.digraph;
    let n = d.node_count();
    let arcs = d.arcs();
    let mut per: Vec<Vec<(usize, usize)>> = vec![Vec::new(); req.k];
    for (i, &a) in assign.iter().enumerate() {
        if a > 0 {
            per[a - 1].push(arcs[i]);
        }
    }
    // Each class must be a branching: in-degree at most 1, no cycles.
    let mut roots: Vec<Mask> = Vec::with_capacity(req.k);
    for class in &per {
        let mut parent = vec![usize::MAX; n];
        for &(u, v) in class {
            if parent[v] != usize::MAX {
                return Ok(None);
            }
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
                    return Ok(None); // cycle
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
        let mut root: Mask = 0;
        for v in 0..n {
            if parent[v] == usize::MAX {
                root |= bits::bit(v);
            }
        }
        roots.push(root);
    }
    // Mode constraints.
    match &req.mode {
        PackMode::Sizes(sizes) => {
            for (j, class) in per.iter().enumerate() {
                if class.len() as i64 != sizes[j] {
                    return Ok(None);
                }
            }
        }
        PackMode::SizesIndeg { sizes, m_in } => {
            for (j, class) in per.iter().enumerate() {
                if class.len() as i64 != sizes[j] {
                    return Ok(None);
                }
            }
            let mut indeg = vec![0i64; n];
            for class in &per {
                for &(_, v) in class {
                    indeg[v] += 1;
                }
            }
            if indeg != *m_in {
                return Ok(None);
            }
        }
        PackMode::Bounds(b) => {
            let mut total = 0i64;
            for (j, class) in per.iter().enumerate() {
                let size = class.len() as i64;
                if size < b.size_lo[j] || size > b.size_hi[j] {
                    return Ok(None);
                }
                total += size;
            }
            let mut indeg = vec![0i64; n];
            for class in &per {
                for &(_, v) in class {
                    indeg[v] += 1;
                }
            }
            for v in 0..n {
                if indeg[v] < b.indeg_lo[v] || indeg[v] > b.indeg_hi[v] {
                    return Ok(None);
                }
            }
            if total < b.total_lo || Ext::Fin(total) > b.total_hi {
                return Ok(None);
            }
        }
    }
    let packing: Vec<Branching> = roots
        .into_iter()
        .zip(per)
        .map(|(r, arcs)| Branching::new(n, r, arcs))
        .collect::<Result<_, _>>()?;
    Ok(Some(packing))
}

// ---------------------------------------------------------------------------
// Raw condition sweeps.
// ---------------------------------------------------------------------------

/// A named min-max inequality, swept without prefix reductions and without
/// restricted subpartition modes.
pub enum RawCondition<'a> {
    Fitting {
        m_s: &'a [i64],
        m_t: &'a [i64],
    },
    CoverParts {
        m_s: &'a [i64],
        p: &'a SetFunctionOnT,
    },
    CoverMixed {
        m_s: &'a [i64],
        p: &'a SetFunctionOnT,
    },
    CoverFull {
        m_s: &'a [i64],
        m_t: &'a [i64],
        p: &'a SetFunctionOnT,
    },
    Ftgs {
        b: &'a DegreeBounds,
        p: &'a SetFunctionOnT,
    },
    Fsgt {
        b: &'a DegreeBounds,
        p: &'a SetFunctionOnT,
    },
    Galfa {
        b: &'a DegreeBounds,
        p: &'a SetFunctionOnT,
    },
    Fbeta {
        b: &'a DegreeBounds,
        p: &'a SetFunctionOnT,
    },
    TermRank {
        m_s: &'a [i64],
        m_t: &'a [i64],
        ell: i64,
    },
    TermRankFtgs {
        b: &'a DegreeBounds,
        ell: i64,
    },
    TermRankFsgt {
        b: &'a DegreeBounds,
        ell: i64,
    },
    TermRankGalfa {
        b: &'a DegreeBounds,
        ell: i64,
    },
    TermRankFbeta {
        b: &'a DegreeBounds,
        ell: i64,
    },
    ForestFit {
        m_s: &'a [i64],
        m_t: &'a [i64],
        m_for: &'a [i64],
    },
}

/// Maximizer of lhs - rhs over the full domain of the condition. A
/// non-positive `gap` means the condition holds everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawViolation {
    pub x: Mask,
    pub y: Mask,
    pub parts: Vec<Mask>,
    pub lhs: i64,
    pub rhs: i64,
    pub gap: i64,
}

fn msum(values: &[i64], mask: Mask) -> i64 {
    let mut total = 0;
    for (i, &v) in values.iter().enumerate() {
        if mask & (1 << i) != 0 {
            total += v;
        }
    }
    total
}

struct RawBounds {
    f_s: Vec<i64>,
    g_s: Vec<i64>,
    f_t: Vec<i64>,
    g_t: Vec<i64>,
    alpha: i64,
    beta: Option<i64>,
}

fn raw_clamp(b: &DegreeBounds) -> RawBounds {
    let s = b.s_size() as i64;
    let t = b.t_size() as i64;
    let cl = |v: &Ext, hi: i64| match v {
        Ext::NegInf => 0,
        Ext::PosInf => hi,
        Ext::Fin(x) => (*x).clamp(0, hi),
    };
    RawBounds {
        f_s: b.f_s.iter().map(|v| cl(v, i64::MAX)).collect(),
        g_s: b.g_s.iter().map(|v| cl(v, t)).collect(),
        f_t: b.f_t.iter().map(|v| cl(v, i64::MAX)).collect(),
        g_t: b.g_t.iter().map(|v| cl(v, s)).collect(),
        alpha: match b.alpha {
            Ext::NegInf => 0,
            Ext::PosInf => i64::MAX,
            Ext::Fin(x) => x.max(0),
        },
        beta: match b.beta {
            Ext::PosInf => None,
            Ext::NegInf => Some(i64::MIN),
            Ext::Fin(x) => Some(x),
        },
    }
}

fn for_each_family(ground: Mask, f: &mut dyn FnMut(&[Mask])) {
    fn rec(rest: Mask, parts: &mut Vec<Mask>, f: &mut dyn FnMut(&[Mask])) {
        f(parts);
        if rest == 0 {
            return;
        }
        let mut skipped = rest;
        while skipped != 0 {
            let low = skipped & skipped.wrapping_neg();
            skipped &= skipped - 1;
            let higher = skipped;
            let mut sub = higher;
            loop {
                parts.push(low | sub);
                rec(skipped & !sub, parts, f);
                parts.pop();
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & higher;
            }
        }
    }
    rec(ground, &mut Vec::new(), f);
}

/// Sweeps the condition over every subset pair and every subpartition of the
/// residual ground set, returning the maximizing triple.
pub fn oracle_condition(cond: &RawCondition<'_>) -> Result<RawViolation, Error> {
    let (s_size, t_size): (usize, usize) = match cond {
        RawCondition::Fitting { m_s, m_t }
        | RawCondition::CoverFull { m_s, m_t, .. }
        | RawCondition::TermRank { m_s, m_t, .. }
        | RawCondition::ForestFit { m_s, m_t, .. } => (m_s.len(), m_t.len()),
        RawCondition::CoverParts { m_s, p } | RawCondition::CoverMixed { m_s, p } => {
            (m_s.len(), p.t_size())
        }
        RawCondition::Ftgs { b, .. }
        | RawCondition::Fsgt { b, .. }
        | RawCondition::Galfa { b, .. }
        | RawCondition::Fbeta { b, .. } => (b.s_size(), b.t_size()),
        RawCondition::TermRankFtgs { b, .. }
        | RawCondition::TermRankFsgt { b, .. }
        | RawCondition::TermRankGalfa { b, .. }
        | RawCondition::TermRankFbeta { b, .. } => (b.s_size(), b.t_size()),
    };
    if s_size > 12 || t_size > 10 {
        return Err(Error::capacity("raw condition sweep beyond the oracle scale"));
    }
    let mut best: Option<RawViolation> = None;
    let mut consider = |x: Mask, y: Mask, parts: &[Mask], lhs: i64, rhs: i64| {
        let gap = lhs - rhs;
        if best.as_ref().is_none_or(|b| gap > b.gap) {
            best = Some(RawViolation {
                x,
                y,
                parts: parts.to_vec(),
                lhs,
                rhs,
                gap,
            });
        }
    };

    let p_sum = |p: &SetFunctionOnT, parts: &[Mask]| -> Result<i64, Error> {
        let mut total = 0;
        for &part in parts {
            total += p.eval(part)?;
        }
        Ok(total)
    };

    let full_t = bits::full_mask(t_size);
    match cond {
        RawCondition::Fitting { m_s, m_t } => {
            let gamma: i64 = m_s.iter().sum();
            for x in 0..=bits::full_mask(s_size) {
                for y in 0..=full_t {
                    let lhs = msum(m_s, x) + msum(m_t, y)
                        - (bits::count(x) * bits::count(y)) as i64;
                    consider(x, y, &[], lhs, gamma);
                }
            }
        }
        RawCondition::CoverParts { m_s, p } => {
            let mut err = None;
            for_each_family(full_t, &mut |parts| {
                if err.is_some() {
                    return;
                }
                match p_sum(p, parts) {
                    Ok(lhs) => {
                        let q = parts.len() as i64;
                        let rhs: i64 = m_s.iter().map(|&m| m.min(q)).sum();
                        consider(0, 0, parts, lhs, rhs);
                    }
                    Err(e) => err = Some(e),
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
        }
        RawCondition::CoverMixed { m_s, p } => {
            let gamma: i64 = m_s.iter().sum();
            let mut err = None;
            for x in 0..=bits::full_mask(s_size) {
                let cx = bits::count(x) as i64;
                for_each_family(full_t, &mut |parts| {
                    if err.is_some() {
                        return;
                    }
                    match p_sum(p, parts) {
                        Ok(ps) => {
                            let lhs = msum(m_s, x) + ps - parts.len() as i64 * cx;
                            consider(x, 0, parts, lhs, gamma);
                        }
                        Err(e) => err = Some(e),
                    }
                });
            }
            if let Some(e) = err {
                return Err(e);
            }
        }
        RawCondition::CoverFull { m_s, m_t, p } => {
            let gamma: i64 = m_s.iter().sum();
            let mut err = None;
            for x in 0..=bits::full_mask(s_size) {
                let cx = bits::count(x) as i64;
                for y in 0..=full_t {
                    let base = msum(m_s, x) + msum(m_t, y) - cx * bits::count(y) as i64;
                    for_each_family(full_t & !y, &mut |parts| {
                        if err.is_some() {
                            return;
                        }
                        match p_sum(p, parts) {
                            Ok(ps) => {
                                let lhs = base + ps - parts.len() as i64 * cx;
                                consider(x, y, parts, lhs, gamma);
                            }
                            Err(e) => err = Some(e),
                        }
                    });
                }
            }
            if let Some(e) = err {
                return Err(e);
            }
        }
        RawCondition::Ftgs { b, p }
        | RawCondition::Fsgt { b, p }
        | RawCondition::Galfa { b, p }
        | RawCondition::Fbeta { b, p } => {
            let rb = raw_clamp(b);
            let gs_total: i64 = rb.g_s.iter().sum();
            let gt_total: i64 = rb.g_t.iter().sum();
            let mut err = None;
            for x in 0..=bits::full_mask(s_size) {
                let cx = bits::count(x) as i64;
                for y in 0..=full_t {
                    let cy = bits::count(y) as i64;
                    for_each_family(full_t & !y, &mut |parts| {
                        if err.is_some() {
                            return;
                        }
                        let ps = match p_sum(p, parts) {
                            Ok(v) => v,
                            Err(e) => {
                                err = Some(e);
                                return;
                            }
                        };
                        let q = parts.len() as i64;
                        match cond {
                            RawCondition::Ftgs { .. } => {
                                let lhs = msum(&rb.f_t, y) - cx * cy + ps - q * cx;
                                let rhs = gs_total - msum(&rb.g_s, x);
                                consider(x, y, parts, lhs, rhs);
                            }
                            RawCondition::Fsgt { .. } => {
                                let lhs = msum(&rb.f_s, x) - cx * cy + ps - q * cx;
                                let rhs = gt_total - msum(&rb.g_t, y);
                                consider(x, y, parts, lhs, rhs);
                            }
                            RawCondition::Galfa { .. } => {
                                let value = (gs_total - msum(&rb.g_s, x))
                                    + (gt_total - msum(&rb.g_t, y))
                                    + cx * cy
                                    - (ps - q * cx);
                                consider(x, y, parts, rb.alpha, value);
                            }
                            RawCondition::Fbeta { .. } => {
                                let forced = msum(&rb.f_s, x) + msum(&rb.f_t, y) - cx * cy
                                    + ps
                                    - q * cx;
                                if let Some(beta) = rb.beta {
                                    consider(x, y, parts, forced, beta);
                                }
                            }
                            _ => unreachable!(),
                        }
                    });
                }
            }
            if let Some(e) = err {
                return Err(e);
            }
        }
        RawCondition::TermRank { m_s, m_t, ell } => {
            let gamma: i64 = m_s.iter().sum();
            for x in 0..=bits::full_mask(s_size) {
                let cx = bits::count(x) as i64;
                for y in 0..=full_t {
                    let cy = bits::count(y) as i64;
                    let lhs = msum(m_s, x) + msum(m_t, y) - cx * cy + (ell - cx - cy).max(0);
                    consider(x, y, &[], lhs, gamma);
                }
            }
        }
        RawCondition::TermRankFtgs { b, ell }
        | RawCondition::TermRankFsgt { b, ell }
        | RawCondition::TermRankGalfa { b, ell }
        | RawCondition::TermRankFbeta { b, ell } => {
            let rb = raw_clamp(b);
            let gs_total: i64 = rb.g_s.iter().sum();
            let gt_total: i64 = rb.g_t.iter().sum();
            for x in 0..=bits::full_mask(s_size) {
                let cx = bits::count(x) as i64;
                for y in 0..=full_t {
                    let cy = bits::count(y) as i64;
                    let surplus = (ell - cx - cy).max(0);
                    match cond {
                        RawCondition::TermRankFtgs { .. } => {
                            let lhs = msum(&rb.f_t, y) - cx * cy + surplus;
                            consider(x, y, &[], lhs, gs_total - msum(&rb.g_s, x));
                        }
                        RawCondition::TermRankFsgt { .. } => {
                            let lhs = msum(&rb.f_s, x) - cx * cy + surplus;
                            consider(x, y, &[], lhs, gt_total - msum(&rb.g_t, y));
                        }
                        RawCondition::TermRankGalfa { .. } => {
                            let value = (gs_total - msum(&rb.g_s, x))
                                + (gt_total - msum(&rb.g_t, y))
                                + cx * cy
                                - surplus;
                            consider(x, y, &[], rb.alpha, value);
                        }
                        RawCondition::TermRankFbeta { .. } => {
                            let forced = msum(&rb.f_s, x) + msum(&rb.f_t, y) - cx * cy + surplus;
                            if let Some(beta) = rb.beta {
                                consider(x, y, &[], forced, beta);
                            }
                        }
                        _ => unreachable!(),
                    }
                }
            }
        }
        RawCondition::ForestFit { m_s, m_t, m_for } => {
            let gamma: i64 = m_s.iter().sum();
            for x in 1..=bits::full_mask(s_size) {
                let cx = bits::count(x) as i64;
                for y in 0..=full_t {
                    let cy = bits::count(y) as i64;
                    let rest = full_t & !y;
                    let lhs = msum(m_s, x) + msum(m_t, y) - cx * cy + msum(m_for, rest)
                        - bits::count(rest) as i64
                        - cx
                        + 1;
                    consider(x, y, &[], lhs, gamma);
                }
            }
        }
    }
    best.ok_or_else(|| Error::defect("empty condition domain"))
}

// ---------------------------------------------------------------------------
// Wooded hypergraph brute force.
// ---------------------------------------------------------------------------

/// Is there an `ell`-uniform multiset of hyperedges with vertex degrees
/// `m_s` that can be trimmed to a forest? Exhaustive over all multisets.
pub fn oracle_wooded_uniform(m_s: &[i64], ell: i64, budget: &OracleBudget) -> Result<bool, Error> {
    let total: i64 = m_s.iter().sum();
    if total > 10 || m_s.len() > 8 {
        return Err(Error::capacity("wooded sweep beyond the oracle scale"));
    }
    let _ = budget;
    if total % ell != 0 {
        return Ok(false);
    }
    let count = (total / ell) as usize;
    let candidates: Vec<Mask> = (0..=bits::full_mask(m_s.len()))
        .filter(|&e| bits::count(e) == ell as usize)
        .collect();
    fn rec(
        m_s: &[i64],
        candidates: &[Mask],
        from: usize,
        left: usize,
        deg: &mut Vec<i64>,
        chosen: &mut Vec<Mask>,
    ) -> bool {
        if left == 0 {
            return deg.iter().zip(m_s).all(|(&d, &m)| d == m) && trimmable(m_s.len(), chosen);
        }
        for i in from..candidates.len() {
            let e = candidates[i];
            let mut ok = true;
            for s in bits::elements(e) {
                if deg[s] + 1 > m_s[s] {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            for s in bits::elements(e) {
                deg[s] += 1;
            }
            chosen.push(e);
            if rec(m_s, candidates, i, left - 1, deg, chosen) {
                return true;
            }
            chosen.pop();
            for s in bits::elements(e) {
                deg[s] -= 1;
            }
        }
        false
    }
    let mut deg = vec![0i64; m_s.len()];
    Ok(rec(m_s, &candidates, 0, count, &mut deg, &mut Vec::new()))
}

/// Can two vertices be selected from each hyperedge so the pairs form a
/// forest?
fn trimmable(n: usize, hyperedges: &[Mask]) -> bool {
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    fn rec(n: usize, hyperedges: &[Mask], i: usize, parent: &mut Vec<usize>) -> bool {
        if i == hyperedges.len() {
            return true;
        }
        let members: Vec<usize> = bits::elements(hyperedges[i]).collect();
        for a in 0..members.len() {
            for b in a + 1..members.len() {
                let ra = find(parent, members[a]);
                let rb = find(parent, members[b]);
                if ra == rb {
                    continue;
                }
                let saved = parent.clone();
                parent[ra] = rb;
                if rec(n, hyperedges, i + 1, parent) {
                    return true;
                }
                *parent = saved;
            }
        }
        false
    }
    rec(n, hyperedges, 0, &mut (0..n).collect())
}
