//! Feasibility checks and constructions for simple bipartite graphs that
//! cover a demand function on T while fitting exact degrees, degree bounds,
//! or edge-count bounds.
//!
//! Every check evaluates a finite family of inequalities exactly; on failure
//! it returns the maximizing violator as a [`Certificate`] whose two sides
//! can be recomputed from scratch (see the `*_sides` functions). Every
//! construction re-verifies its output independently before returning it.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{self, Mask};
use crate::error::Error;
use crate::ext::Ext;
use crate::graph::{Bigraph, Subpartition};
use crate::setfn::{Flags, SetFunctionOnT, SpTable, TABLE_CAP};
use crate::{Outcome, Verdict};

/// Exact degree prescription: `m_s` over S, optionally `m_t` over T
/// (balanced with `m_s` when present).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSpec {
    m_s: Vec<i64>,
    m_t: Option<Vec<i64>>,
}

impl DegreeSpec {
    pub fn new(m_s: Vec<i64>, m_t: Vec<i64>) -> Result<DegreeSpec, Error> {
        let spec = DegreeSpec {
            m_s,
            m_t: Some(m_t),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn s_only(m_s: Vec<i64>) -> Result<DegreeSpec, Error> {
        let spec = DegreeSpec { m_s, m_t: None };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<(), Error> {
        if self.m_s.iter().any(|&v| v < 0) {
            return Err(Error::invalid("degree specification on S must be non-negative"));
        }
        if let Some(m_t) = &self.m_t {
            if m_t.iter().any(|&v| v < 0) {
                return Err(Error::invalid("degree specification on T must be non-negative"));
            }
            let gs: i64 = self.m_s.iter().sum();
            let gt: i64 = m_t.iter().sum();
            if gs != gt {
                return Err(Error::invalid(format!(
                    "degree specification unbalanced: {gs} on S vs {gt} on T"
                )));
            }
        }
        Ok(())
    }

    pub fn s_size(&self) -> usize {
        self.m_s.len()
    }

    pub fn t_size(&self) -> Option<usize> {
        self.m_t.as_ref().map(Vec::len)
    }

    pub fn m_s(&self) -> &[i64] {
        &self.m_s
    }

    pub fn m_t(&self) -> Option<&[i64]> {
        self.m_t.as_deref()
    }

    /// Total prescribed degree on S (= on T when balanced).
    pub fn gamma(&self) -> i64 {
        self.m_s.iter().sum()
    }
}

/// Lower/upper degree bounds on both sides plus an edge-count interval.
/// Entries may be infinite; they are clamped to the trivial caps
/// (0 below; `|T|` resp. `|S|` above, by simplicity) before arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBounds {
    pub f_s: Vec<Ext>,
    pub g_s: Vec<Ext>,
    pub f_t: Vec<Ext>,
    pub g_t: Vec<Ext>,
    pub alpha: Ext,
    pub beta: Ext,
}

impl DegreeBounds {
    /// No constraints at all: `f = -inf`, `g = +inf`, any edge count.
    pub fn unbounded(s_size: usize, t_size: usize) -> DegreeBounds {
        DegreeBounds {
            f_s: vec![Ext::NegInf; s_size],
            g_s: vec![Ext::PosInf; s_size],
            f_t: vec![Ext::NegInf; t_size],
            g_t: vec![Ext::PosInf; t_size],
            alpha: Ext::NegInf,
            beta: Ext::PosInf,
        }
    }

    /// Exact bounds `f = g = m`.
    pub fn exact(spec: &DegreeSpec) -> Result<DegreeBounds, Error> {
        let m_t = spec
            .m_t()
            .ok_or_else(|| Error::precondition("exact bounds need degrees on both sides"))?;
        let fin = |v: &[i64]| v.iter().map(|&x| Ext::Fin(x)).collect::<Vec<_>>();
        Ok(DegreeBounds {
            f_s: fin(spec.m_s()),
            g_s: fin(spec.m_s()),
            f_t: fin(m_t),
            g_t: fin(m_t),
            alpha: Ext::NegInf,
            beta: Ext::PosInf,
        })
    }

    pub fn with_f_s(mut self, v: Vec<i64>) -> DegreeBounds {
        self.f_s = v.into_iter().map(Ext::Fin).collect();
        self
    }

    pub fn with_g_s(mut self, v: Vec<i64>) -> DegreeBounds {
        self.g_s = v.into_iter().map(Ext::Fin).collect();
        self
    }

    pub fn with_f_t(mut self, v: Vec<i64>) -> DegreeBounds {
        self.f_t = v.into_iter().map(Ext::Fin).collect();
        self
    }

    pub fn with_g_t(mut self, v: Vec<i64>) -> DegreeBounds {
        self.g_t = v.into_iter().map(Ext::Fin).collect();
        self
    }

    pub fn with_edge_interval(mut self, alpha: Ext, beta: Ext) -> DegreeBounds {
        self.alpha = alpha;
        self.beta = beta;
        self
    }

    pub fn s_size(&self) -> usize {
        self.f_s.len()
    }

    pub fn t_size(&self) -> usize {
        self.f_t.len()
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.g_s.len() != self.f_s.len() || self.g_t.len() != self.f_t.len() {
            return Err(Error::invalid("bound vector lengths disagree"));
        }
        for (f, g) in self.f_s.iter().zip(&self.g_s).chain(self.f_t.iter().zip(&self.g_t)) {
            if f > g {
                return Err(Error::precondition("lower degree bound exceeds upper bound"));
            }
        }
        if self.alpha > self.beta {
            return Err(Error::precondition("edge-count lower bound exceeds upper bound"));
        }
        Ok(())
    }

    fn clamped(&self) -> Clamped {
        let s = self.s_size();
        let t = self.t_size();
        let clamp = |v: &[Ext], hi: i64| -> Vec<i64> {
            v.iter().map(|&e| e.clamp_finite(0, hi)).collect()
        };
        Clamped {
            f_s: clamp(&self.f_s, i64::MAX),
            g_s: clamp(&self.g_s, t as i64),
            f_t: clamp(&self.f_t, i64::MAX),
            g_t: clamp(&self.g_t, s as i64),
            alpha: self.alpha.clamp_finite(0, i64::MAX),
            beta: self.beta,
        }
    }
}

/// Bounds after clamping: lower bounds at least 0, upper bounds at most the
/// simplicity caps. Only `beta` stays possibly infinite.
struct Clamped {
    f_s: Vec<i64>,
    g_s: Vec<i64>,
    f_t: Vec<i64>,
    g_t: Vec<i64>,
    alpha: i64,
    beta: Ext,
}

/// Which inequality a certificate violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CondId {
    /// Degree fitting: `ms~(X) + mt~(Y) - |X||Y| <= gamma`.
    GaleRyser,
    /// Subpartition-count form: `sum p(T_i) <= sum_s min(m_s(s), q)`.
    CoverParts,
    /// Mixed form: `ms~(X) + p~(parts) - q|X| <= gamma`.
    CoverMixed,
    /// Full form on (X, Y, parts) against gamma.
    CoverFull,
    /// `ft~(Y) - |X||Y| + p~(parts) - q|X| <= gs~(S-X)`.
    Ftgs,
    /// `fs~(X) - |X||Y| + p~(parts) - q|X| <= gt~(T-Y)`.
    Fsgt,
    /// Edge lower bound: required `alpha` exceeds the achievable maximum.
    Galfa,
    /// Edge upper bound: forced minimum exceeds `beta`.
    Fbeta,
    /// Unified fitting-with-matching condition against gamma.
    TermRank,
    TermRankFtgs,
    TermRankFsgt,
    TermRankGalfa,
    TermRankFbeta,
    /// Degree fitting plus a degree-exact forest.
    ForestFit,
}

impl CondId {
    pub fn as_str(self) -> &'static str {
        match self {
            CondId::GaleRyser => "gale_ryser",
            CondId::CoverParts => "cover_parts",
            CondId::CoverMixed => "cover_mixed",
            CondId::CoverFull => "cover_full",
            CondId::Ftgs => "ftgs",
            CondId::Fsgt => "fsgt",
            CondId::Galfa => "galfa",
            CondId::Fbeta => "fbeta",
            CondId::TermRank => "term_rank",
            CondId::TermRankFtgs => "term_rank_ftgs",
            CondId::TermRankFsgt => "term_rank_fsgt",
            CondId::TermRankGalfa => "term_rank_galfa",
            CondId::TermRankFbeta => "term_rank_fbeta",
            CondId::ForestFit => "forest_fit",
        }
    }
}

/// A violated inequality, pinned to the subsets achieving it. `lhs > rhs`
/// always holds; re-evaluating the named condition at `(x, y, parts)`
/// reproduces both sides exactly. For lower-bound conditions (`Galfa`,
/// `TermRankGalfa`) `lhs` is the required minimum and `rhs` the achievable
/// value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub condition: CondId,
    pub x: Mask,
    pub y: Mask,
    pub parts: Subpartition,
    pub lhs: i64,
    pub rhs: i64,
}

/// How the subpartition part of a condition is searched.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartsMode {
    /// All subpartitions of the ground set (subset DP).
    Unrestricted,
    /// Only the empty family and single parts. Exact for fully supermodular
    /// demands.
    AtMostOne,
    /// Only the empty family and the whole ground set. Exact for fully
    /// supermodular, monotone demands.
    EmptyOrWhole,
}

fn auto_mode(flags: &Flags) -> PartsMode {
    if flags.fully_supermodular.is_true() && flags.monotone.is_true() {
        PartsMode::EmptyOrWhole
    } else if flags.fully_supermodular.is_true() {
        PartsMode::AtMostOne
    } else {
        PartsMode::Unrestricted
    }
}

/// Descending order with prefix sums and prefix masks; ties by smallest
/// index. `masks[i]` is the set of the first `i` nodes in that order.
struct PrefixOrder {
    sums: Vec<i64>,
    masks: Vec<Mask>,
}

impl PrefixOrder {
    fn descending(values: &[i64]) -> PrefixOrder {
        let mut idx: Vec<usize> = (0..values.len()).collect();
        idx.sort_by_key(|&i| (-values[i], i));
        let mut sums = Vec::with_capacity(values.len() + 1);
        let mut masks = Vec::with_capacity(values.len() + 1);
        sums.push(0);
        masks.push(0);
        for (rank, &i) in idx.iter().enumerate() {
            sums.push(sums[rank] + values[i]);
            masks.push(masks[rank] | bits::bit(i));
        }
        PrefixOrder { sums, masks }
    }
}

/// Demand-side engine: for a penalty `|X|` and a ground set, the best value
/// of `p~(parts) - q |X|` over the families admitted by the mode (at least 0,
/// from the empty family), together with a family attaining it.
struct DemandEngine<'a> {
    table: &'a [i64],
    sp: &'a SpTable,
    mode: PartsMode,
}

impl DemandEngine<'_> {
    fn best(&self, ground: Mask, penalty: i64) -> (i64, usize) {
        match self.mode {
            PartsMode::Unrestricted => self.sp.best_with_penalty(ground, penalty, None),
            PartsMode::AtMostOne => self.sp.best_with_penalty(ground, penalty, Some(1)),
            PartsMode::EmptyOrWhole => {
                if ground != 0 && self.table[ground as usize] - penalty > 0 {
                    (self.table[ground as usize] - penalty, 1)
                } else {
                    (0, 0)
                }
            }
        }
    }

    fn witness(&self, ground: Mask, penalty: i64, q: usize) -> Subpartition {
        if q == 0 {
            return Subpartition::empty();
        }
        match self.mode {
            PartsMode::EmptyOrWhole => {
                Subpartition::new(ground, vec![ground]).expect("ground is non-empty here")
            }
            _ => {
                let _ = penalty;
                self.sp.argmax(ground, q).expect("argmax exists for recorded q")
            }
        }
    }
}

fn demand_table(p: &SetFunctionOnT) -> Result<Vec<i64>, Error> {
    if p.t_size() > TABLE_CAP {
        return Err(Error::capacity(format!(
            "demand ground set of {} elements exceeds the cap of {TABLE_CAP}",
            p.t_size()
        )));
    }
    p.table()
}

fn require_intersecting(p: &SetFunctionOnT) -> Result<Flags, Error> {
    let flags = p.classify()?;
    if !flags.intersecting_supermodular.is_true() {
        return Err(Error::precondition(
            "demand function is not positively intersecting supermodular",
        ));
    }
    Ok(flags)
}

fn require_at_most_s(table: &[i64], s_size: usize) -> Result<(), Error> {
    if let Some(y) = (0..table.len()).find(|&y| table[y] > s_size as i64) {
        return Err(Error::precondition(format!(
            "demand {} on subset mask {y} exceeds |S| = {s_size}",
            table[y]
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Exact degree specification, no demand: Gale-Ryser.
// ---------------------------------------------------------------------------

/// Is there a simple bigraph fitting `(m_s, m_t)`? Only the sorted-prefix
/// pairs need checking.
pub fn check_gale_ryser(spec: &DegreeSpec) -> Result<Verdict<Certificate>, Error> {
    let m_t = spec
        .m_t()
        .ok_or_else(|| Error::precondition("degree fitting needs degrees on both sides"))?;
    let gamma = spec.gamma();
    let ps = PrefixOrder::descending(spec.m_s());
    let pt = PrefixOrder::descending(m_t);
    let mut worst: Option<Certificate> = None;
    for i in 0..=spec.s_size() {
        for j in 0..=m_t.len() {
            let lhs = ps.sums[i] + pt.sums[j] - (i * j) as i64;
            if lhs > gamma && worst.as_ref().is_none_or(|w| lhs - gamma > w.lhs - w.rhs) {
                worst = Some(Certificate {
                    condition: CondId::GaleRyser,
                    x: ps.masks[i],
                    y: pt.masks[j],
                    parts: Subpartition::empty(),
                    lhs,
                    rhs: gamma,
                });
            }
        }
    }
    match worst {
        None => Ok(Outcome::Feasible(())),
        Some(cert) => {
            let (lhs, rhs) = gale_ryser_sides(spec, cert.x, cert.y)?;
            if (lhs, rhs) != (cert.lhs, cert.rhs) {
                return Err(Error::defect("certificate re-evaluation mismatch"));
            }
            Ok(Outcome::Infeasible(cert))
        }
    }
}

/// Both sides of the degree-fitting inequality at `(x, y)`.
pub fn gale_ryser_sides(spec: &DegreeSpec, x: Mask, y: Mask) -> Result<(i64, i64), Error> {
    let m_t = spec
        .m_t()
        .ok_or_else(|| Error::precondition("degree fitting needs degrees on both sides"))?;
    let lhs = bits::mask_sum(spec.m_s(), x) + bits::mask_sum(m_t, y)
        - (bits::count(x) * bits::count(y)) as i64;
    Ok((lhs, spec.gamma()))
}

/// Canonical greedy construction: S-nodes in decreasing degree order, each
/// wired to the currently most-demanding T-nodes. Verified before return.
pub fn construct_gale_ryser(spec: &DegreeSpec) -> Result<Outcome<Bigraph, Certificate>, Error> {
    if let Outcome::Infeasible(cert) = check_gale_ryser(spec)? {
        return Ok(Outcome::Infeasible(cert));
    }
    let m_t = spec.m_t().expect("presence checked above");
    let t_size = m_t.len();
    let mut order: Vec<usize> = (0..spec.s_size()).collect();
    order.sort_by_key(|&i| (-spec.m_s()[i], i));
    let mut residual: Vec<i64> = m_t.to_vec();
    let mut edges = Vec::new();
    for &s in &order {
        let want = spec.m_s()[s];
        if want > t_size as i64 {
            return Err(Error::defect("fitting check passed but a degree exceeds |T|"));
        }
        let mut ts: Vec<usize> = (0..t_size).collect();
        ts.sort_by_key(|&t| (-residual[t], t));
        for &t in ts.iter().take(want as usize) {
            residual[t] -= 1;
            edges.push((s, t));
        }
    }
    let g = Bigraph::simple(spec.s_size(), t_size, edges)
        .map_err(|e| Error::defect(format!("greedy produced a non-simple graph: {e}")))?;
    verify_fits(&g, spec)?;
    Ok(Outcome::Feasible(g))
}

fn verify_fits(g: &Bigraph, spec: &DegreeSpec) -> Result<(), Error> {
    let (ds, dt) = g.degrees();
    if ds != spec.m_s() {
        return Err(Error::defect("constructed graph misses the S degrees"));
    }
    if let Some(m_t) = spec.m_t() {
        if dt != m_t {
            return Err(Error::defect("constructed graph misses the T degrees"));
        }
    }
    if !g.verify_simple() {
        return Err(Error::defect("constructed graph is not simple"));
    }
    Ok(())
}

fn verify_covers(g: &Bigraph, p: &SetFunctionOnT) -> Result<(), Error> {
    for y in 0..1u64 << p.t_size() {
        let have = bits::count(g.neighbors(y)?) as i64;
        if have < p.eval(y)? {
            return Err(Error::defect(format!(
                "constructed graph leaves demand uncovered on mask {y:#b}"
            )));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Degree specification on S only, covering a demand.
// ---------------------------------------------------------------------------

fn check_cover_s_preconditions(m_s: &[i64], p: &SetFunctionOnT) -> Result<Vec<i64>, Error> {
    if m_s.iter().any(|&v| v < 0) {
        return Err(Error::invalid("degrees on S must be non-negative"));
    }
    if let Some(s) = (0..m_s.len()).find(|&s| m_s[s] > p.t_size() as i64) {
        return Err(Error::precondition(format!(
            "degree {} at S-node {s} exceeds |T| = {}",
            m_s[s],
            p.t_size()
        )));
    }
    require_intersecting(p)?;
    demand_table(p)
}

/// Is there a simple bigraph fitting `m_s` on S and covering `p`?
/// Subpartition-count form; the certificate carries the maximizing family.
pub fn check_cover_s(m_s: &[i64], p: &SetFunctionOnT) -> Result<Verdict<Certificate>, Error> {
    let table = check_cover_s_preconditions(m_s, p)?;
    let sp = SpTable::from_values(p.t_size(), &table);
    Ok(check_cover_s_inner(m_s, p.t_size(), &sp))
}

fn check_cover_s_inner(m_s: &[i64], t_size: usize, sp: &SpTable) -> Verdict<Certificate> {
    let full = bits::full_mask(t_size);
    let mut worst: Option<(i64, usize)> = None;
    for q in 0..=t_size {
        if let Ext::Fin(sum) = sp.max(full, q) {
            let rhs: i64 = m_s.iter().map(|&m| m.min(q as i64)).sum();
            if sum > rhs && worst.is_none_or(|(gap, _)| sum - rhs > gap) {
                worst = Some((sum - rhs, q));
            }
        }
    }
    match worst {
        None => Outcome::Feasible(()),
        Some((_, q)) => {
            let parts = sp.argmax(full, q).expect("finite max has a witness");
            let lhs = sp.max(full, q).finite().unwrap();
            let rhs = m_s.iter().map(|&m| m.min(q as i64)).sum();
            Outcome::Infeasible(Certificate {
                condition: CondId::CoverParts,
                x: 0,
                y: 0,
                parts,
                lhs,
                rhs,
            })
        }
    }
}

/// Both sides of the subpartition-count inequality for `parts`.
pub fn cover_parts_sides(
    m_s: &[i64],
    p: &SetFunctionOnT,
    parts: &Subpartition,
) -> Result<(i64, i64), Error> {
    let mut lhs = 0;
    for &part in parts.parts() {
        lhs += p.eval(part)?;
    }
    let q = parts.part_count() as i64;
    Ok((lhs, m_s.iter().map(|&m| m.min(q)).sum()))
}

/// The mixed form of the same feasibility question: prefix sets on S against
/// subpartitions of all of T. Equivalent to [`check_cover_s`]; kept as an
/// independently evaluated route.
pub fn check_cover_s_mixed(m_s: &[i64], p: &SetFunctionOnT) -> Result<Verdict<Certificate>, Error> {
    let table = check_cover_s_preconditions(m_s, p)?;
    let sp = SpTable::from_values(p.t_size(), &table);
    let gamma: i64 = m_s.iter().sum();
    let full = bits::full_mask(p.t_size());
    let ps = PrefixOrder::descending(m_s);
    let mut worst: Option<(i64, usize, usize)> = None;
    for i in 0..=m_s.len() {
        for q in 0..=p.t_size() {
            if let Ext::Fin(sum) = sp.max(full, q) {
                let lhs = ps.sums[i] + sum - (q * i) as i64;
                if lhs > gamma && worst.is_none_or(|(gap, _, _)| lhs - gamma > gap) {
                    worst = Some((lhs - gamma, i, q));
                }
            }
        }
    }
    match worst {
        None => Ok(Outcome::Feasible(())),
        Some((gap, i, q)) => {
            let parts = sp.argmax(full, q).expect("finite max has a witness");
            Ok(Outcome::Infeasible(Certificate {
                condition: CondId::CoverMixed,
                x: ps.masks[i],
                y: 0,
                parts,
                lhs: gamma + gap,
                rhs: gamma,
            }))
        }
    }
}

/// Both sides of the mixed inequality at `(x, parts)`.
pub fn cover_mixed_sides(
    m_s: &[i64],
    p: &SetFunctionOnT,
    x: Mask,
    parts: &Subpartition,
) -> Result<(i64, i64), Error> {
    let mut psum = 0;
    for &part in parts.parts() {
        psum += p.eval(part)?;
    }
    let lhs = bits::mask_sum(m_s, x) + psum
        - (parts.part_count() * bits::count(x)) as i64;
    Ok((lhs, m_s.iter().sum()))
}

/// Builds a simple bigraph fitting `m_s` and covering `p` by committing one
/// S-node's neighbour set at a time; a partial assignment survives only if
/// the residual instance still passes the exact feasibility check, so the
/// first surviving branch is always extendable. Backtracking is kept as
/// insurance with a hard budget.
pub fn construct_cover_s(
    m_s: &[i64],
    p: &SetFunctionOnT,
) -> Result<Outcome<Bigraph, Certificate>, Error> {
    let table = check_cover_s_preconditions(m_s, p)?;
    let g = match construct_cover_s_inner(m_s, p.t_size(), table)? {
        Outcome::Feasible(g) => g,
        Outcome::Infeasible(cert) => return Ok(Outcome::Infeasible(cert)),
    };
    verify_covers(&g, p)?;
    let spec = DegreeSpec::s_only(m_s.to_vec())?;
    let (ds, _) = g.degrees();
    if ds != spec.m_s() || !g.verify_simple() {
        return Err(Error::defect("constructed graph misses degrees or simplicity"));
    }
    Ok(Outcome::Feasible(g))
}

const SEARCH_BUDGET: usize = 200_000;

fn construct_cover_s_inner(
    m_s: &[i64],
    t_size: usize,
    table: Vec<i64>,
) -> Result<Outcome<Bigraph, Certificate>, Error> {
    let sp0 = SpTable::from_values(t_size, &table);
    if let Outcome::Infeasible(cert) = check_cover_s_inner(m_s, t_size, &sp0) {
        return Ok(Outcome::Infeasible(cert));
    }
    let mut order: Vec<usize> = (0..m_s.len()).collect();
    order.sort_by_key(|&i| (-m_s[i], i));

    // residuals[d]: demand table before assigning order[d].
    let mut residuals: Vec<Vec<i64>> = vec![table];
    let mut chosen: Vec<Mask> = Vec::new();
    let mut cand = if order.is_empty() {
        None
    } else {
        next_ksubset(None, m_s[order[0]] as u32, t_size)
    };
    let mut budget = SEARCH_BUDGET;

    while chosen.len() < order.len() {
        let depth = chosen.len();
        let want = m_s[order[depth]] as u32;
        let mut committed = false;
        while let Some(n) = cand {
            if budget == 0 {
                return Err(Error::defect(
                    "construction search budget exhausted; the residual check should prevent this",
                ));
            }
            budget -= 1;
            let mut residual = residuals[depth].clone();
            for (y, r) in residual.iter_mut().enumerate() {
                if (y as u64) & n != 0 && *r > 0 {
                    *r -= 1;
                }
            }
            let rem_m: Vec<i64> = order[depth + 1..].iter().map(|&i| m_s[i]).collect();
            let sp = SpTable::from_values(t_size, &residual);
            if check_cover_s_inner(&rem_m, t_size, &sp).is_feasible() {
                chosen.push(n);
                residuals.push(residual);
                committed = true;
                if chosen.len() < order.len() {
                    cand = next_ksubset(None, m_s[order[chosen.len()]] as u32, t_size);
                }
                break;
            }
            cand = next_ksubset(Some(n), want, t_size);
        }
        if !committed {
            // Exact residual checks make dead ends unreachable in theory;
            // backtrack anyway rather than trust the argument.
            if chosen.is_empty() {
                return Err(Error::defect(
                    "no neighbour set extends a feasible residual instance",
                ));
            }
            residuals.pop();
            let prev = chosen.pop().unwrap();
            cand = next_ksubset(Some(prev), m_s[order[chosen.len()]] as u32, t_size);
        }
    }

    let mut edges = Vec::new();
    for (depth, &n) in chosen.iter().enumerate() {
        for t in bits::elements(n) {
            edges.push((order[depth], t));
        }
    }
    let g = Bigraph::simple(m_s.len(), t_size, edges)
        .map_err(|e| Error::defect(format!("construction produced a non-simple graph: {e}")))?;
    Ok(Outcome::Feasible(g))
}

/// First k-subset of `0..t` (as a mask) after `prev`, in ascending mask
/// order; `None` when exhausted. `prev = None` starts the sequence.
fn next_ksubset(prev: Option<Mask>, k: u32, t: usize) -> Option<Mask> {
    if k as usize > t {
        return None;
    }
    if k == 0 {
        return match prev {
            None => Some(0),
            Some(_) => None,
        };
    }
    let first = bits::full_mask(k as usize);
    let limit = bits::full_mask(t);
    match prev {
        None => Some(first),
        Some(m) => {
            // Gosper's hack.
            let c = m & m.wrapping_neg();
            let r = m + c;
            let next = (((r ^ m) >> 2) / c) | r;
            (next <= limit).then_some(next)
        }
    }
}

// ---------------------------------------------------------------------------
// Degree specification on both sides, covering a demand.
// ---------------------------------------------------------------------------

/// Is there a simple bigraph fitting `(m_s, m_t)` and covering `p`? The
/// search mode is chosen from the demand's verified flags.
pub fn check_cover_full(
    spec: &DegreeSpec,
    p: &SetFunctionOnT,
) -> Result<Verdict<Certificate>, Error> {
    let flags = require_intersecting(p)?;
    check_cover_full_mode(spec, p, auto_mode(&flags))
}

/// Same check with an explicit subpartition search mode. Using a restricted
/// mode is only exact under the corresponding flag; the unrestricted mode is
/// always exact.
pub fn check_cover_full_mode(
    spec: &DegreeSpec,
    p: &SetFunctionOnT,
    mode: PartsMode,
) -> Result<Verdict<Certificate>, Error> {
    let m_t = spec
        .m_t()
        .ok_or_else(|| Error::precondition("full covering check needs degrees on both sides"))?;
    if m_t.len() != p.t_size() {
        return Err(Error::invalid("degree vector on T does not match the demand ground set"));
    }
    let table = demand_table(p)?;
    require_at_most_s(&table, spec.s_size())?;
    let sp = SpTable::from_values(p.t_size(), &table);
    let engine = DemandEngine {
        table: &table,
        sp: &sp,
        mode,
    };
    let gamma = spec.gamma();
    let ps = PrefixOrder::descending(spec.m_s());
    let full = bits::full_mask(p.t_size());
    let mut worst: Option<(i64, usize, Mask, usize)> = None;
    for y in 0..=full {
        let mty = bits::mask_sum(m_t, y);
        let ground = full & !y;
        let cy = bits::count(y) as i64;
        for i in 0..=spec.s_size() {
            let (dval, q) = engine.best(ground, i as i64);
            let lhs = ps.sums[i] + mty - i as i64 * cy + dval;
            if lhs > gamma && worst.is_none_or(|(gap, ..)| lhs - gamma > gap) {
                worst = Some((lhs - gamma, i, y, q));
            }
        }
    }
    match worst {
        None => Ok(Outcome::Feasible(())),
        Some((gap, i, y, q)) => {
            let ground = full & !y;
            let parts = engine.witness(ground, i as i64, q);
            let cert = Certificate {
                condition: CondId::CoverFull,
                x: ps.masks[i],
                y,
                parts,
                lhs: gamma + gap,
                rhs: gamma,
            };
            let (lhs, rhs) = cover_full_sides(spec, p, cert.x, cert.y, &cert.parts)?;
            if (lhs, rhs) != (cert.lhs, cert.rhs) {
                return Err(Error::defect("certificate re-evaluation mismatch"));
            }
            Ok(Outcome::Infeasible(cert))
        }
    }
}

/// Both sides of the full covering inequality at `(x, y, parts)`.
pub fn cover_full_sides(
    spec: &DegreeSpec,
    p: &SetFunctionOnT,
    x: Mask,
    y: Mask,
    parts: &Subpartition,
) -> Result<(i64, i64), Error> {
    let m_t = spec
        .m_t()
        .ok_or_else(|| Error::precondition("full covering check needs degrees on both sides"))?;
    let mut psum = 0;
    for &part in parts.parts() {
        psum += p.eval(part)?;
    }
    let cx = bits::count(x) as i64;
    let lhs = bits::mask_sum(spec.m_s(), x) + bits::mask_sum(m_t, y) - cx * bits::count(y) as i64
        + psum
        - parts.part_count() as i64 * cx;
    Ok((lhs, spec.gamma()))
}

/// Constructs a simple bigraph fitting `(m_s, m_t)` and covering `p`: the
/// demand is lifted to at least `m_t` on singletons, the S-side construction
/// then automatically realizes the T degrees exactly.
pub fn construct_cover_full(
    spec: &DegreeSpec,
    p: &SetFunctionOnT,
) -> Result<Outcome<Bigraph, Certificate>, Error> {
    require_intersecting(p)?;
    if let Outcome::Infeasible(cert) = check_cover_full(spec, p)? {
        return Ok(Outcome::Infeasible(cert));
    }
    let m_t = spec.m_t().expect("presence checked in check_cover_full");
    let mut lifted = p.table()?;
    for (t, &mt) in m_t.iter().enumerate() {
        let idx = bits::bit(t) as usize;
        lifted[idx] = lifted[idx].max(mt);
    }
    let g = match construct_cover_s_inner(spec.m_s(), p.t_size(), lifted)? {
        Outcome::Feasible(g) => g,
        Outcome::Infeasible(_) => {
            return Err(Error::defect(
                "lifted instance infeasible although the full check passed",
            ));
        }
    };
    verify_fits(&g, spec)?;
    verify_covers(&g, p)?;
    Ok(Outcome::Feasible(g))
}

// ---------------------------------------------------------------------------
// Degree bounds, with and without edge-count bounds.
// ---------------------------------------------------------------------------

/// Is there a simple bigraph covering `p` with all degrees inside the
/// bounds? Mode chosen from the demand's flags.
pub fn check_bounds(b: &DegreeBounds, p: &SetFunctionOnT) -> Result<Verdict<Certificate>, Error> {
    let flags = require_intersecting(p)?;
    check_bounds_mode(b, p, auto_mode(&flags))
}

pub fn check_bounds_mode(
    b: &DegreeBounds,
    p: &SetFunctionOnT,
    mode: PartsMode,
) -> Result<Verdict<Certificate>, Error> {
    b.validate()?;
    if b.t_size() != p.t_size() {
        return Err(Error::invalid("bound vector on T does not match the demand ground set"));
    }
    let table = demand_table(p)?;
    require_at_most_s(&table, b.s_size())?;
    let sp = SpTable::from_values(p.t_size(), &table);
    let engine = DemandEngine {
        table: &table,
        sp: &sp,
        mode,
    };
    let c = b.clamped();
    degree_conditions(&c, &engine, p.t_size())
}

fn degree_conditions(
    c: &Clamped,
    engine: &DemandEngine<'_>,
    t_size: usize,
) -> Result<Verdict<Certificate>, Error> {
    let full = bits::full_mask(t_size);
    let gs_total: i64 = c.g_s.iter().sum();
    let gt = |y: Mask| bits::mask_sum(&c.g_t, y);
    let by_gs = PrefixOrder::descending(&c.g_s);
    let by_fs = PrefixOrder::descending(&c.f_s);
    let mut worst: Option<Certificate> = None;
    let mut consider = |cond, gap: i64, x, y, parts: Subpartition, lhs, rhs| {
        if worst
            .as_ref()
            .is_none_or(|w| gap > w.lhs - w.rhs)
        {
            worst = Some(Certificate {
                condition: cond,
                x,
                y,
                parts,
                lhs,
                rhs,
            });
        }
    };
    for y in 0..=full {
        let ground = full & !y;
        let cy = bits::count(y) as i64;
        let fty = bits::mask_sum(&c.f_t, y);
        for i in 0..=c.f_s.len() {
            let (dval, q) = engine.best(ground, i as i64);
            // Demand plus T lower bounds must fit under the S capacity.
            let lhs = fty - i as i64 * cy + dval;
            let rhs = gs_total - by_gs.sums[i];
            if lhs > rhs {
                consider(
                    CondId::Ftgs,
                    lhs - rhs,
                    by_gs.masks[i],
                    y,
                    engine.witness(ground, i as i64, q),
                    lhs,
                    rhs,
                );
            }
            // Demand plus S lower bounds must fit under the T capacity.
            let lhs = by_fs.sums[i] - i as i64 * cy + dval;
            let rhs = gt(ground);
            if lhs > rhs {
                consider(
                    CondId::Fsgt,
                    lhs - rhs,
                    by_fs.masks[i],
                    y,
                    engine.witness(ground, i as i64, q),
                    lhs,
                    rhs,
                );
            }
        }
    }
    Ok(match worst {
        None => Outcome::Feasible(()),
        Some(cert) => Outcome::Infeasible(cert),
    })
}

/// Both sides of the S-capacity inequality at `(x, y, parts)`.
pub fn ftgs_sides(
    b: &DegreeBounds,
    p: &SetFunctionOnT,
    x: Mask,
    y: Mask,
    parts: &Subpartition,
) -> Result<(i64, i64), Error> {
    let c = b.clamped();
    let mut psum = 0;
    for &part in parts.parts() {
        psum += p.eval(part)?;
    }
    let cx = bits::count(x) as i64;
    let lhs = bits::mask_sum(&c.f_t, y) - cx * bits::count(y) as i64 + psum
        - parts.part_count() as i64 * cx;
    let rhs = c.g_s.iter().sum::<i64>() - bits::mask_sum(&c.g_s, x);
    Ok((lhs, rhs))
}

/// Both sides of the T-capacity inequality at `(x, y, parts)`.
pub fn fsgt_sides(
    b: &DegreeBounds,
    p: &SetFunctionOnT,
    x: Mask,
    y: Mask,
    parts: &Subpartition,
) -> Result<(i64, i64), Error> {
    let c = b.clamped();
    let mut psum = 0;
    for &part in parts.parts() {
        psum += p.eval(part)?;
    }
    let cx = bits::count(x) as i64;
    let lhs = bits::mask_sum(&c.f_s, x) - cx * bits::count(y) as i64 + psum
        - parts.part_count() as i64 * cx;
    let full = bits::full_mask(b.t_size());
    let rhs = bits::mask_sum(&c.g_t, full & !y);
    Ok((lhs, rhs))
}

/// Adds the edge-count interval on top of degree feasibility. Calling this
/// on a degree-infeasible instance is a precondition error.
pub fn check_bounds_edges(
    b: &DegreeBounds,
    p: &SetFunctionOnT,
) -> Result<Verdict<Certificate>, Error> {
    let flags = require_intersecting(p)?;
    check_bounds_edges_mode(b, p, auto_mode(&flags))
}

pub fn check_bounds_edges_mode(
    b: &DegreeBounds,
    p: &SetFunctionOnT,
    mode: PartsMode,
) -> Result<Verdict<Certificate>, Error> {
    match check_bounds_mode(b, p, mode)? {
        Outcome::Feasible(()) => {}
        Outcome::Infeasible(cert) => {
            return Err(Error::precondition(format!(
                "degree bounds alone are infeasible (condition {})",
                cert.condition.as_str()
            )));
        }
    }
    let table = demand_table(p)?;
    let sp = SpTable::from_values(p.t_size(), &table);
    let engine = DemandEngine {
        table: &table,
        sp: &sp,
        mode,
    };
    let c = b.clamped();
    edge_conditions(&c, &engine, p.t_size())
}

fn edge_conditions(
    c: &Clamped,
    engine: &DemandEngine<'_>,
    t_size: usize,
) -> Result<Verdict<Certificate>, Error> {
    let full = bits::full_mask(t_size);
    let gs_total: i64 = c.g_s.iter().sum();
    let gt_total: i64 = c.g_t.iter().sum();
    let by_gs = PrefixOrder::descending(&c.g_s);
    let by_fs = PrefixOrder::descending(&c.f_s);
    let mut worst: Option<Certificate> = None;
    let mut consider = |cond, gap: i64, x, y, parts: Subpartition, lhs, rhs| {
        if worst.as_ref().is_none_or(|w| gap > w.lhs - w.rhs) {
            worst = Some(Certificate {
                condition: cond,
                x,
                y,
                parts,
                lhs,
                rhs,
            });
        }
    };
    for y in 0..=full {
        let ground = full & !y;
        let cy = bits::count(y) as i64;
        let fty = bits::mask_sum(&c.f_t, y);
        let gty = bits::mask_sum(&c.g_t, y);
        for i in 0..=c.f_s.len() {
            let (dval, q) = engine.best(ground, i as i64);
            // Largest achievable edge count given (X, Y, parts) must reach
            // alpha.
            let achievable =
                (gs_total - by_gs.sums[i]) + (gt_total - gty) + i as i64 * cy - dval;
            if achievable < c.alpha {
                consider(
                    CondId::Galfa,
                    c.alpha - achievable,
                    by_gs.masks[i],
                    y,
                    engine.witness(ground, i as i64, q),
                    c.alpha,
                    achievable,
                );
            }
            // Forced edge count must stay under beta.
            let forced = by_fs.sums[i] + fty - i as i64 * cy + dval;
            if Ext::Fin(forced) > c.beta {
                let beta = c.beta.finite().expect("violated bound is finite");
                consider(
                    CondId::Fbeta,
                    forced - beta,
                    by_fs.masks[i],
                    y,
                    engine.witness(ground, i as i64, q),
                    forced,
                    beta,
                );
            }
        }
    }
    Ok(match worst {
        None => Outcome::Feasible(()),
        Some(cert) => Outcome::Infeasible(cert),
    })
}

/// Achievable-maximum side of the edge lower bound at `(x, y, parts)`;
/// returns `(alpha, achievable)`.
pub fn galfa_sides(
    b: &DegreeBounds,
    p: &SetFunctionOnT,
    x: Mask,
    y: Mask,
    parts: &Subpartition,
) -> Result<(i64, i64), Error> {
    let c = b.clamped();
    let mut psum = 0;
    for &part in parts.parts() {
        psum += p.eval(part)?;
    }
    let cx = bits::count(x) as i64;
    let full = bits::full_mask(b.t_size());
    let achievable = c.g_s.iter().sum::<i64>() - bits::mask_sum(&c.g_s, x)
        + bits::mask_sum(&c.g_t, full & !y)
        + cx * bits::count(y) as i64
        - (psum - parts.part_count() as i64 * cx);
    Ok((c.alpha, achievable))
}

/// Forced-minimum side of the edge upper bound at `(x, y, parts)`; returns
/// `(forced, beta)`. Errors when `beta` is unbounded.
pub fn fbeta_sides(
    b: &DegreeBounds,
    p: &SetFunctionOnT,
    x: Mask,
    y: Mask,
    parts: &Subpartition,
) -> Result<(i64, i64), Error> {
    let c = b.clamped();
    let beta = c
        .beta
        .finite()
        .ok_or_else(|| Error::precondition("edge upper bound is unbounded"))?;
    let mut psum = 0;
    for &part in parts.parts() {
        psum += p.eval(part)?;
    }
    let cx = bits::count(x) as i64;
    let forced = bits::mask_sum(&c.f_s, x) + bits::mask_sum(&c.f_t, y)
        - cx * bits::count(y) as i64
        + psum
        - parts.part_count() as i64 * cx;
    Ok((forced, beta))
}

/// Minimum edge count over all simple bigraphs covering `p` within the
/// degree bounds. Requires degree feasibility.
pub fn min_edge_count(b: &DegreeBounds, p: &SetFunctionOnT) -> Result<i64, Error> {
    let flags = require_intersecting(p)?;
    let mode = auto_mode(&flags);
    match check_bounds_mode(b, p, mode)? {
        Outcome::Feasible(()) => {}
        Outcome::Infeasible(cert) => {
            return Err(Error::precondition(format!(
                "degree bounds are infeasible (condition {})",
                cert.condition.as_str()
            )));
        }
    }
    let table = demand_table(p)?;
    let sp = SpTable::from_values(p.t_size(), &table);
    let engine = DemandEngine {
        table: &table,
        sp: &sp,
        mode,
    };
    let c = b.clamped();
    let full = bits::full_mask(p.t_size());
    let by_fs = PrefixOrder::descending(&c.f_s);
    let mut best = 0i64;
    for y in 0..=full {
        let ground = full & !y;
        let cy = bits::count(y) as i64;
        let fty = bits::mask_sum(&c.f_t, y);
        for i in 0..=c.f_s.len() {
            let (dval, _) = engine.best(ground, i as i64);
            best = best.max(by_fs.sums[i] + fty - i as i64 * cy + dval);
        }
    }
    Ok(best)
}

/// Builds a simple bigraph covering `p` inside the degree and edge-count
/// bounds: lower bounds are lifted node by node while all four conditions
/// survive, the lifted vector is then an exactly realizable degree
/// specification.
pub fn construct_bounds(
    b: &DegreeBounds,
    p: &SetFunctionOnT,
) -> Result<Outcome<Bigraph, Certificate>, Error> {
    let flags = require_intersecting(p)?;
    let mode = auto_mode(&flags);
    if let Outcome::Infeasible(cert) = check_bounds_mode(b, p, mode)? {
        return Ok(Outcome::Infeasible(cert));
    }
    let table = demand_table(p)?;
    let sp = SpTable::from_values(p.t_size(), &table);
    let engine = DemandEngine {
        table: &table,
        sp: &sp,
        mode,
    };
    let mut c = b.clamped();
    if let Outcome::Infeasible(cert) = edge_conditions(&c, &engine, p.t_size())? {
        return Ok(Outcome::Infeasible(cert));
    }

    let holds = |c: &Clamped| -> Result<bool, Error> {
        Ok(degree_conditions(c, &engine, p.t_size())?.is_feasible()
            && edge_conditions(c, &engine, p.t_size())?.is_feasible())
    };
    // Lift each loose node as far as the conditions allow. Raising a lower
    // bound only tightens every condition, so one pass reaches a maximal
    // vector; a confirmation pass then re-checks single increments.
    let mut changed = true;
    while changed {
        changed = false;
        let s_len = c.f_s.len();
        let t_len = c.f_t.len();
        for node in 0..s_len + t_len {
            let (lo, hi) = if node < s_len {
                (c.f_s[node], c.g_s[node])
            } else {
                (c.f_t[node - s_len], c.g_t[node - s_len])
            };
            if lo >= hi {
                continue;
            }
            let set = |c: &mut Clamped, v: i64| {
                if node < s_len {
                    c.f_s[node] = v;
                } else {
                    c.f_t[node - s_len] = v;
                }
            };
            let mut ok = lo;
            let mut bad = hi + 1;
            while bad - ok > 1 {
                let mid = ok + (bad - ok) / 2;
                set(&mut c, mid);
                if holds(&c)? {
                    ok = mid;
                } else {
                    bad = mid;
                }
            }
            set(&mut c, ok);
            if ok > lo {
                changed = true;
            }
        }
    }

    let gamma_s: i64 = c.f_s.iter().sum();
    let gamma_t: i64 = c.f_t.iter().sum();
    if gamma_s != gamma_t {
        return Err(Error::defect(format!(
            "maximally lifted lower bounds are unbalanced ({gamma_s} vs {gamma_t})"
        )));
    }
    if gamma_s < c.alpha || Ext::Fin(gamma_s) > c.beta {
        return Err(Error::defect("lifted edge total escapes the edge interval"));
    }
    let spec = DegreeSpec::new(c.f_s.clone(), c.f_t.clone())?;
    let g = match construct_cover_full(&spec, p)? {
        Outcome::Feasible(g) => g,
        Outcome::Infeasible(_) => {
            return Err(Error::defect(
                "lifted specification infeasible although all conditions held",
            ));
        }
    };
    verify_within_bounds(&g, b)?;
    verify_covers(&g, p)?;
    Ok(Outcome::Feasible(g))
}

fn verify_within_bounds(g: &Bigraph, b: &DegreeBounds) -> Result<(), Error> {
    let c = b.clamped();
    let (ds, dt) = g.degrees();
    for (s, &d) in ds.iter().enumerate() {
        if d < c.f_s[s] || d > c.g_s[s] {
            return Err(Error::defect(format!("S-degree {d} at node {s} escapes its bounds")));
        }
    }
    for (t, &d) in dt.iter().enumerate() {
        if d < c.f_t[t] || d > c.g_t[t] {
            return Err(Error::defect(format!("T-degree {d} at node {t} escapes its bounds")));
        }
    }
    let e = g.edge_count() as i64;
    if e < c.alpha || Ext::Fin(e) > c.beta {
        return Err(Error::defect("edge count escapes the requested interval"));
    }
    if !g.verify_simple() {
        return Err(Error::defect("constructed graph is not simple"));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// One-sided convenience entries.
// ---------------------------------------------------------------------------

/// Lower bounds on T against upper bounds on S only.
pub fn check_cover_ft_gs(
    f_t: Vec<i64>,
    g_s: Vec<i64>,
    p: &SetFunctionOnT,
) -> Result<Verdict<Certificate>, Error> {
    let b = DegreeBounds::unbounded(g_s.len(), f_t.len())
        .with_f_t(f_t)
        .with_g_s(g_s);
    check_bounds(&b, p)
}

/// Lower bounds on S against upper bounds on T only.
pub fn check_cover_fs_gt(
    f_s: Vec<i64>,
    g_t: Vec<i64>,
    p: &SetFunctionOnT,
) -> Result<Verdict<Certificate>, Error> {
    let b = DegreeBounds::unbounded(f_s.len(), g_t.len())
        .with_f_s(f_s)
        .with_g_t(g_t);
    check_bounds(&b, p)
}

/// Exact degrees on S with upper bounds on T.
pub fn check_cover_m_and_gt(
    m_s: &[i64],
    g_t: Vec<i64>,
    p: &SetFunctionOnT,
) -> Result<Verdict<Certificate>, Error> {
    let b = DegreeBounds::unbounded(m_s.len(), g_t.len())
        .with_f_s(m_s.to_vec())
        .with_g_s(m_s.to_vec())
        .with_g_t(g_t);
    check_bounds(&b, p)
}

/// Bounds on S only.
pub fn check_cover_fs_gs(
    f_s: Vec<i64>,
    g_s: Vec<i64>,
    t_size: usize,
    p: &SetFunctionOnT,
) -> Result<Verdict<Certificate>, Error> {
    let b = DegreeBounds::unbounded(f_s.len(), t_size)
        .with_f_s(f_s)
        .with_g_s(g_s);
    check_bounds(&b, p)
}

/// Upper bounds on T only.
pub fn check_cover_gt_only(
    s_size: usize,
    g_t: Vec<i64>,
    p: &SetFunctionOnT,
) -> Result<Verdict<Certificate>, Error> {
    let b = DegreeBounds::unbounded(s_size, g_t.len()).with_g_t(g_t);
    check_bounds(&b, p)
}

// ---------------------------------------------------------------------------
// De-parallelization.
// ---------------------------------------------------------------------------

/// Rewires parallel edges to fresh T-neighbours while keeping every S-degree
/// and never shrinking any neighbourhood. Requires `d(s) <= |T|` wherever a
/// parallel edge occurs.
pub fn simplify(g: &Bigraph) -> Result<Bigraph, Error> {
    let s_size = g.s_size();
    let t_size = g.t_size();
    let mut count = vec![vec![0u32; t_size]; s_size];
    for &(s, t) in g.edges() {
        count[s][t] += 1;
    }
    loop {
        let mut rewired = false;
        'scan: for s in 0..s_size {
            for t in 0..t_size {
                if count[s][t] > 1 {
                    let degree: u32 = count[s].iter().sum();
                    if degree > t_size as u32 {
                        return Err(Error::precondition(format!(
                            "S-node {s} has degree {degree} > |T| = {t_size}; cannot simplify"
                        )));
                    }
                    let fresh = (0..t_size)
                        .find(|&t2| count[s][t2] == 0)
                        .expect("degree <= |T| leaves a free slot");
                    count[s][t] -= 1;
                    count[s][fresh] += 1;
                    rewired = true;
                    break 'scan;
                }
            }
        }
        if !rewired {
            break;
        }
    }
    let mut edges = Vec::new();
    for (s, row) in count.iter().enumerate() {
        for (t, &c) in row.iter().enumerate() {
            for _ in 0..c {
                edges.push((s, t));
            }
        }
    }
    Bigraph::simple(s_size, t_size, edges)
}
