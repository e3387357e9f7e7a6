//! Maximum term rank: simple bigraphs (0-1 matrices) with prescribed or
//! bounded degrees (row/column sums) and matching number at least `ell`.
//!
//! All checks run on sorted-prefix pairs only, which is exact for these
//! conditions; the full-sweep equivalence is exercised by the test suite.

use alloc::format;
use alloc::vec::Vec;

use crate::bits::{self, Mask};
use crate::error::Error;
use crate::ext::Ext;
use crate::graph::{Bigraph, Subpartition};
use crate::realize::{
    self, Certificate, CondId, DegreeBounds, DegreeSpec,
};
use crate::setfn::SetFunctionOnT;
use crate::{Outcome, Verdict};

/// A term-rank instance: a degree constraint plus the target matching size.
#[derive(Clone, Debug)]
pub struct TermRankInstance {
    pub constraint: DegreeConstraint,
    pub ell: i64,
}

#[derive(Clone, Debug)]
pub enum DegreeConstraint {
    Exact(DegreeSpec),
    Bounds(DegreeBounds),
}

fn positive_part(v: i64) -> i64 {
    v.max(0)
}

fn validate_ell(ell: i64, s_size: usize, t_size: usize) -> Result<(), Error> {
    if ell < 0 {
        return Err(Error::invalid("target matching size must be non-negative"));
    }
    if ell > s_size.min(t_size) as i64 {
        return Err(Error::precondition(format!(
            "target matching size {ell} exceeds min(|S|, |T|) = {}",
            s_size.min(t_size)
        )));
    }
    Ok(())
}

/// Descending order with prefix sums; masks are built on demand so the
/// sum-only sweeps scale past the 64-bit subset representation.
struct Prefix {
    sums: Vec<i64>,
    order: Vec<usize>,
}

fn prefix_desc(values: &[i64]) -> Prefix {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by_key(|&i| (-values[i], i));
    let mut sums = Vec::with_capacity(values.len() + 1);
    sums.push(0);
    for (r, &i) in order.iter().enumerate() {
        sums.push(sums[r] + values[i]);
    }
    Prefix { sums, order }
}

impl Prefix {
    fn mask(&self, i: usize) -> Result<Mask, Error> {
        if self.order.len() > 64 {
            return Err(Error::capacity(
                "violation certificates need node sets of at most 64 elements",
            ));
        }
        Ok(self.order[..i].iter().fold(0, |m, &v| m | bits::bit(v)))
    }
}

/// Is there a simple bigraph fitting `(m_s, m_t)` with matching number at
/// least `ell`? The `ell = 0` case degenerates to plain degree fitting.
pub fn check_termrank(spec: &DegreeSpec, ell: i64) -> Result<Verdict<Certificate>, Error> {
    let m_t = spec
        .m_t()
        .ok_or_else(|| Error::precondition("term-rank check needs degrees on both sides"))?;
    validate_ell(ell, spec.s_size(), m_t.len())?;
    let gamma = spec.gamma();
    let ps = prefix_desc(spec.m_s());
    let pt = prefix_desc(m_t);
    let mut worst: Option<(i64, usize, usize)> = None;
    for i in 0..=spec.s_size() {
        for j in 0..=m_t.len() {
            let lhs =
                ps.sums[i] + pt.sums[j] - (i * j) as i64 + positive_part(ell - (i + j) as i64);
            if lhs > gamma && worst.is_none_or(|(best, _, _)| lhs > best) {
                worst = Some((lhs, i, j));
            }
        }
    }
    Ok(match worst {
        None => Outcome::Feasible(()),
        Some((lhs, i, j)) => Outcome::Infeasible(Certificate {
            condition: CondId::TermRank,
            x: ps.mask(i)?,
            y: pt.mask(j)?,
            parts: Subpartition::empty(),
            lhs,
            rhs: gamma,
        }),
    })
}

/// Both sides of the unified fitting-with-matching inequality at `(x, y)`.
pub fn term_rank_sides(
    spec: &DegreeSpec,
    ell: i64,
    x: Mask,
    y: Mask,
) -> Result<(i64, i64), Error> {
    let m_t = spec
        .m_t()
        .ok_or_else(|| Error::precondition("term-rank check needs degrees on both sides"))?;
    let cx = bits::count(x) as i64;
    let cy = bits::count(y) as i64;
    let lhs = bits::mask_sum(spec.m_s(), x) + bits::mask_sum(m_t, y) - cx * cy
        + positive_part(ell - cx - cy);
    Ok((lhs, spec.gamma()))
}

/// Clamped bound vectors used by the prefix conditions.
struct ClampedBounds {
    f_s: Vec<i64>,
    g_s: Vec<i64>,
    f_t: Vec<i64>,
    g_t: Vec<i64>,
    alpha: i64,
    beta: Ext,
}

fn clamp(b: &DegreeBounds) -> ClampedBounds {
    let s = b.s_size() as i64;
    let t = b.t_size() as i64;
    ClampedBounds {
        f_s: b.f_s.iter().map(|&e| e.clamp_finite(0, i64::MAX)).collect(),
        g_s: b.g_s.iter().map(|&e| e.clamp_finite(0, t)).collect(),
        f_t: b.f_t.iter().map(|&e| e.clamp_finite(0, i64::MAX)).collect(),
        g_t: b.g_t.iter().map(|&e| e.clamp_finite(0, s)).collect(),
        alpha: b.alpha.clamp_finite(0, i64::MAX),
        beta: b.beta,
    }
}

/// Sorted-prefix structures for the bound conditions, built once per probe.
struct BoundSweep {
    gs_total: i64,
    gt_total: i64,
    by_gs: Prefix,
    by_fs: Prefix,
    by_gt: Prefix,
    by_ft: Prefix,
}

impl BoundSweep {
    fn new(c: &ClampedBounds) -> BoundSweep {
        BoundSweep {
            gs_total: c.g_s.iter().sum(),
            gt_total: c.g_t.iter().sum(),
            by_gs: prefix_desc(&c.g_s),
            by_fs: prefix_desc(&c.f_s),
            by_gt: prefix_desc(&c.g_t),
            by_ft: prefix_desc(&c.f_t),
        }
    }

    /// Sides of one condition family at prefix sizes (i, j).
    fn eval(&self, cond: CondId, c: &ClampedBounds, ell: i64, i: usize, j: usize) -> (i64, i64) {
        let cross = (i * j) as i64;
        let surplus = positive_part(ell - (i + j) as i64);
        match cond {
            CondId::TermRankFtgs => (
                self.by_ft.sums[j] - cross + surplus,
                self.gs_total - self.by_gs.sums[i],
            ),
            CondId::TermRankFsgt => (
                self.by_fs.sums[i] - cross + surplus,
                self.gt_total - self.by_gt.sums[j],
            ),
            CondId::TermRankGalfa => (
                c.alpha,
                (self.gs_total - self.by_gs.sums[i]) + (self.gt_total - self.by_gt.sums[j])
                    + cross
                    - surplus,
            ),
            CondId::TermRankFbeta => (
                self.by_fs.sums[i] + self.by_ft.sums[j] - cross + surplus,
                match c.beta {
                    Ext::Fin(beta) => beta,
                    _ => i64::MAX,
                },
            ),
            _ => unreachable!("not a bound condition"),
        }
    }

    fn families(c: &ClampedBounds) -> Vec<CondId> {
        let mut out = vec![CondId::TermRankFtgs, CondId::TermRankFsgt, CondId::TermRankGalfa];
        if c.beta.is_finite() {
            out.push(CondId::TermRankFbeta);
        }
        out
    }

    /// X/Y prefix orders belonging to a condition family.
    fn orders(&self, cond: CondId) -> (&Prefix, &Prefix) {
        match cond {
            CondId::TermRankFtgs => (&self.by_gs, &self.by_ft),
            CondId::TermRankFsgt => (&self.by_fs, &self.by_gt),
            CondId::TermRankGalfa => (&self.by_gs, &self.by_gt),
            CondId::TermRankFbeta => (&self.by_fs, &self.by_ft),
            _ => unreachable!("not a bound condition"),
        }
    }
}

/// Fast probe: does any of the four condition families fail? Mask-free, so
/// it scales to instances far beyond the certificate representation.
fn any_violation(c: &ClampedBounds, ell: i64) -> bool {
    let sweep = BoundSweep::new(c);
    for cond in BoundSweep::families(c) {
        for i in 0..=c.f_s.len() {
            for j in 0..=c.f_t.len() {
                let (lhs, rhs) = sweep.eval(cond, c, ell, i, j);
                if lhs > rhs {
                    return true;
                }
            }
        }
    }
    false
}

/// Certificate for the first violated family (maximal gap inside it), if any.
fn worst_violation(c: &ClampedBounds, ell: i64) -> Result<Option<Certificate>, Error> {
    let sweep = BoundSweep::new(c);
    for cond in BoundSweep::families(c) {
        let mut worst: Option<(i64, i64, usize, usize)> = None;
        for i in 0..=c.f_s.len() {
            for j in 0..=c.f_t.len() {
                let (lhs, rhs) = sweep.eval(cond, c, ell, i, j);
                if lhs > rhs && worst.is_none_or(|(gap, ..)| lhs - rhs > gap) {
                    worst = Some((lhs - rhs, lhs, i, j));
                }
            }
        }
        if let Some((gap, lhs, i, j)) = worst {
            let (xs, ys) = sweep.orders(cond);
            return Ok(Some(Certificate {
                condition: cond,
                x: xs.mask(i)?,
                y: ys.mask(j)?,
                parts: Subpartition::empty(),
                lhs,
                rhs: lhs - gap,
            }));
        }
    }
    Ok(None)
}

/// Is there a simple bigraph with matching number at least `ell` inside the
/// degree bounds and the edge-count interval?
pub fn check_termrank_bounds(b: &DegreeBounds, ell: i64) -> Result<Verdict<Certificate>, Error> {
    b.validate()?;
    validate_ell(ell, b.s_size(), b.t_size())?;
    let c = clamp(b);
    Ok(match worst_violation(&c, ell)? {
        None => Outcome::Feasible(()),
        Some(cert) => Outcome::Infeasible(cert),
    })
}

/// Both sides of a bound-form condition at `(x, y)`.
pub fn term_rank_bound_sides(
    cond: CondId,
    b: &DegreeBounds,
    ell: i64,
    x: Mask,
    y: Mask,
) -> Result<(i64, i64), Error> {
    let c = clamp(b);
    let cx = bits::count(x) as i64;
    let cy = bits::count(y) as i64;
    let surplus = positive_part(ell - cx - cy);
    let gs_total: i64 = c.g_s.iter().sum();
    let gt_total: i64 = c.g_t.iter().sum();
    Ok(match cond {
        CondId::TermRankFtgs => (
            bits::mask_sum(&c.f_t, y) - cx * cy + surplus,
            gs_total - bits::mask_sum(&c.g_s, x),
        ),
        CondId::TermRankFsgt => (
            bits::mask_sum(&c.f_s, x) - cx * cy + surplus,
            gt_total - bits::mask_sum(&c.g_t, y),
        ),
        CondId::TermRankGalfa => (
            c.alpha,
            (gs_total - bits::mask_sum(&c.g_s, x)) + (gt_total - bits::mask_sum(&c.g_t, y))
                + cx * cy
                - surplus,
        ),
        CondId::TermRankFbeta => (
            bits::mask_sum(&c.f_s, x) + bits::mask_sum(&c.f_t, y) - cx * cy + surplus,
            c.beta
                .finite()
                .ok_or_else(|| Error::precondition("edge upper bound is unbounded"))?,
        ),
        _ => return Err(Error::invalid("not a term-rank bound condition")),
    })
}

/// Lifts the lower bounds node by node while all conditions survive; the
/// maximal lifted vector is an exactly realizable degree specification with
/// matching number at least `ell`. Runs on prefix checks only, so it scales
/// far beyond the construction caps.
pub fn lift_bounds(
    b: &DegreeBounds,
    ell: i64,
) -> Result<Outcome<DegreeSpec, Certificate>, Error> {
    b.validate()?;
    validate_ell(ell, b.s_size(), b.t_size())?;
    let mut c = clamp(b);
    if let Some(cert) = worst_violation(&c, ell)? {
        return Ok(Outcome::Infeasible(cert));
    }
    // Raising any lower bound only tightens the conditions, so lifting each
    // node to its maximum in one sweep yields a maximal vector; the outer
    // loop re-scans to confirm the fixpoint.
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
            let mut ok = lo;
            let mut bad = hi + 1;
            while bad - ok > 1 {
                let mid = ok + (bad - ok) / 2;
                if node < s_len {
                    c.f_s[node] = mid;
                } else {
                    c.f_t[node - s_len] = mid;
                }
                if !any_violation(&c, ell) {
                    ok = mid;
                } else {
                    bad = mid;
                }
            }
            if node < s_len {
                c.f_s[node] = ok;
            } else {
                c.f_t[node - s_len] = ok;
            }
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
    let spec = DegreeSpec::new(c.f_s, c.f_t)?;
    if !check_termrank(&spec, ell)?.is_feasible() {
        return Err(Error::defect(
            "lifted specification fails the exact check although all conditions held",
        ));
    }
    Ok(Outcome::Feasible(spec))
}

/// Builds a simple bigraph fitting `(m_s, m_t)` with matching number at
/// least `ell`, via the covering construction. Verified before return.
pub fn construct_termrank(
    spec: &DegreeSpec,
    ell: i64,
) -> Result<Outcome<Bigraph, Certificate>, Error> {
    let m_t = spec
        .m_t()
        .ok_or_else(|| Error::precondition("term-rank construction needs degrees on both sides"))?;
    if let Outcome::Infeasible(cert) = check_termrank(spec, ell)? {
        return Ok(Outcome::Infeasible(cert));
    }
    let p = SetFunctionOnT::term_rank(m_t.len(), ell)?;
    let g = match realize::construct_cover_full(spec, &p)? {
        Outcome::Feasible(g) => g,
        Outcome::Infeasible(_) => {
            return Err(Error::defect(
                "covering construction infeasible although the term-rank check passed",
            ));
        }
    };
    if (g.max_matching().1 as i64) < ell {
        return Err(Error::defect("constructed graph misses the target matching size"));
    }
    Ok(Outcome::Feasible(g))
}

/// Bounded variant: lifts the bounds to an exact specification and builds
/// that. Output verified against the original bounds.
pub fn construct_termrank_bounds(
    b: &DegreeBounds,
    ell: i64,
) -> Result<Outcome<Bigraph, Certificate>, Error> {
    let spec = match lift_bounds(b, ell)? {
        Outcome::Feasible(spec) => spec,
        Outcome::Infeasible(cert) => return Ok(Outcome::Infeasible(cert)),
    };
    let g = match construct_termrank(&spec, ell)? {
        Outcome::Feasible(g) => g,
        Outcome::Infeasible(_) => {
            return Err(Error::defect("lifted specification became infeasible"));
        }
    };
    let c = clamp(b);
    let (ds, dt) = g.degrees();
    for (s, &d) in ds.iter().enumerate() {
        if d < c.f_s[s] || d > c.g_s[s] {
            return Err(Error::defect("constructed degree escapes the S bounds"));
        }
    }
    for (t, &d) in dt.iter().enumerate() {
        if d < c.f_t[t] || d > c.g_t[t] {
            return Err(Error::defect("constructed degree escapes the T bounds"));
        }
    }
    let e = g.edge_count() as i64;
    if e < c.alpha || Ext::Fin(e) > c.beta {
        return Err(Error::defect("constructed edge count escapes the interval"));
    }
    Ok(Outcome::Feasible(g))
}

/// Dispatch on a [`TermRankInstance`].
pub fn check_instance(inst: &TermRankInstance) -> Result<Verdict<Certificate>, Error> {
    match &inst.constraint {
        DegreeConstraint::Exact(spec) => check_termrank(spec, inst.ell),
        DegreeConstraint::Bounds(b) => check_termrank_bounds(b, inst.ell),
    }
}

pub fn construct_instance(inst: &TermRankInstance) -> Result<Outcome<Bigraph, Certificate>, Error> {
    match &inst.constraint {
        DegreeConstraint::Exact(spec) => construct_termrank(spec, inst.ell),
        DegreeConstraint::Bounds(b) => construct_termrank_bounds(b, inst.ell),
    }
}

/// Finds a 2-switch (replace edges `s1 t1`, `s2 t2` by the non-edges
/// `s1 t2`, `s2 t1`) that strictly increases the matching number, preserving
/// both degree vectors and simplicity. Returns the switched graph, or `None`
/// when no improving switch exists. An optional accelerator only; the
/// covering construction remains the correctness authority.
pub fn interchange_step(g: &Bigraph) -> Result<Option<Bigraph>, Error> {
    if !g.verify_simple() {
        return Err(Error::invalid("interchange step requires a simple bigraph"));
    }
    let nu = g.max_matching().1;
    let matrix = g.to_matrix();
    let edges = g.edges();
    for (a, &(s1, t1)) in edges.iter().enumerate() {
        for &(s2, t2) in edges.iter().skip(a + 1) {
            if s1 == s2 || t1 == t2 {
                continue;
            }
            if matrix[s1][t2] == 1 || matrix[s2][t1] == 1 {
                continue;
            }
            let mut new_edges: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
            for &(s, t) in edges {
                if (s, t) == (s1, t1) {
                    new_edges.push((s1, t2));
                } else if (s, t) == (s2, t2) {
                    new_edges.push((s2, t1));
                } else {
                    new_edges.push((s, t));
                }
            }
            let candidate = Bigraph::simple(g.s_size(), g.t_size(), new_edges)
                .map_err(|e| Error::defect(format!("switch broke simplicity: {e}")))?;
            if candidate.max_matching().1 > nu {
                return Ok(Some(candidate));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(m_s: &[i64], m_t: &[i64]) -> DegreeSpec {
        DegreeSpec::new(m_s.to_vec(), m_t.to_vec()).unwrap()
    }

    #[test]
    fn perfect_matching_feasible() {
        assert!(check_termrank(&spec(&[1, 1], &[1, 1]), 2).unwrap().is_feasible());
    }

    #[test]
    fn forced_star_cannot_reach_two() {
        let cert = check_termrank(&spec(&[1, 1], &[2, 0]), 2)
            .unwrap()
            .infeasible()
            .unwrap();
        assert_eq!((cert.lhs, cert.rhs), (3, 2));
        assert_eq!(cert.x, 0);
        assert_eq!(cert.y, 0b01);
        let (lhs, rhs) = term_rank_sides(&spec(&[1, 1], &[2, 0]), 2, cert.x, cert.y).unwrap();
        assert_eq!((lhs, rhs), (3, 2));
    }

    #[test]
    fn tight_instance_reaches_four() {
        assert!(check_termrank(&spec(&[4, 4, 3, 2], &[4, 4, 3, 2]), 4)
            .unwrap()
            .is_feasible());
    }

    #[test]
    fn ell_above_min_side_is_a_precondition_error() {
        assert!(matches!(
            check_termrank(&spec(&[1, 1], &[1, 1]), 3),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn ell_zero_degenerates_to_fitting() {
        for (m_s, m_t) in [(&[2, 1][..], &[2, 1][..]), (&[2][..], &[2][..])] {
            let sp = DegreeSpec::new(m_s.to_vec(), m_t.to_vec()).unwrap();
            assert_eq!(
                check_termrank(&sp, 0).unwrap().is_feasible(),
                realize::check_gale_ryser(&sp).unwrap().is_feasible()
            );
        }
    }

    #[test]
    fn prefix_check_equals_full_sweep() {
        let specs = [
            spec(&[1, 1], &[2, 0]),
            spec(&[2, 2, 1], &[3, 2, 0]),
            spec(&[3, 1, 1], &[2, 2, 1]),
            spec(&[2, 2], &[2, 2]),
        ];
        for sp in &specs {
            let t_len = sp.m_t().unwrap().len();
            for ell in 0..=(sp.s_size().min(t_len) as i64) {
                let fast = check_termrank(sp, ell).unwrap().is_feasible();
                let mut full = true;
                for x in 0..1u64 << sp.s_size() {
                    for y in 0..1u64 << t_len {
                        let (lhs, rhs) = term_rank_sides(sp, ell, x, y).unwrap();
                        if lhs > rhs {
                            full = false;
                        }
                    }
                }
                assert_eq!(fast, full, "spec {sp:?} ell {ell}");
            }
        }
    }

    #[test]
    fn unconstrained_bounds_always_feasible() {
        let b = DegreeBounds::unbounded(3, 3);
        for ell in 0..=3 {
            assert!(check_termrank_bounds(&b, ell).unwrap().is_feasible());
        }
    }

    #[test]
    fn capacity_shortfall_bounds() {
        let b = DegreeBounds::unbounded(2, 3)
            .with_f_t(vec![2, 2, 2])
            .with_g_s(vec![1, 1]);
        let cert = check_termrank_bounds(&b, 0).unwrap().infeasible().unwrap();
        assert_eq!(cert.condition, CondId::TermRankFtgs);
        let (lhs, rhs) = term_rank_bound_sides(cert.condition, &b, 0, cert.x, cert.y).unwrap();
        assert_eq!((lhs, rhs), (cert.lhs, cert.rhs));
    }

    #[test]
    fn edge_budget_below_matching() {
        let b = DegreeBounds::unbounded(2, 2)
            .with_f_s(vec![0, 0])
            .with_g_s(vec![2, 2])
            .with_edge_interval(Ext::NegInf, Ext::Fin(1));
        let cert = check_termrank_bounds(&b, 2).unwrap().infeasible().unwrap();
        assert_eq!(cert.condition, CondId::TermRankFbeta);
        assert_eq!((cert.lhs, cert.rhs), (2, 1));
    }

    #[test]
    fn construct_exact_instances() {
        let g = construct_termrank(&spec(&[1, 1], &[1, 1]), 2).unwrap().feasible().unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.max_matching().1, 2);

        let g = construct_termrank(&spec(&[2, 2], &[2, 2]), 2).unwrap().feasible().unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.max_matching().1, 2);
    }

    #[test]
    fn construct_under_box_and_interval() {
        let b = DegreeBounds::unbounded(3, 3)
            .with_f_s(vec![1, 1, 1])
            .with_g_s(vec![2, 2, 2])
            .with_f_t(vec![1, 1, 1])
            .with_g_t(vec![2, 2, 2])
            .with_edge_interval(Ext::Fin(3), Ext::Fin(4));
        let g = construct_termrank_bounds(&b, 3).unwrap().feasible().unwrap();
        assert!(g.max_matching().1 >= 3);
        assert!((3..=4).contains(&(g.edge_count() as i64)));
        let (ds, dt) = g.degrees();
        assert!(ds.iter().chain(dt.iter()).all(|&d| (1..=2).contains(&d)));
    }

    #[test]
    fn lift_produces_realizable_spec() {
        let b = DegreeBounds::unbounded(3, 3)
            .with_f_s(vec![0, 0, 0])
            .with_g_s(vec![2, 2, 2])
            .with_f_t(vec![0, 0, 0])
            .with_g_t(vec![2, 2, 2]);
        let spec = lift_bounds(&b, 2).unwrap().feasible().unwrap();
        assert!(check_termrank(&spec, 2).unwrap().is_feasible());
        assert_eq!(spec.gamma(), spec.m_t().unwrap().iter().sum::<i64>());
    }

    #[test]
    fn interchange_finds_nothing_on_maximal_graphs() {
        let g = Bigraph::simple(2, 2, vec![(0, 0), (0, 1), (1, 0)]).unwrap();
        assert!(interchange_step(&g).unwrap().is_none());

        let double_star =
            Bigraph::simple(2, 4, vec![(0, 0), (0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(interchange_step(&double_star).unwrap().is_none());

        let stuck = Bigraph::simple(2, 2, vec![(0, 0), (1, 0)]).unwrap();
        assert!(interchange_step(&stuck).unwrap().is_none());
        assert!(check_termrank(&spec(&[1, 1], &[2, 0]), 2)
            .unwrap()
            .infeasible()
            .is_some());
    }

    #[test]
    fn interchange_preserves_degrees_and_increases_matching() {
        // Two parallel stars: switching one edge pair raises the matching.
        let g = Bigraph::simple(2, 2, vec![(0, 0), (0, 1), (1, 0)]).unwrap();
        assert!(interchange_step(&g).unwrap().is_none());
        let h = Bigraph::simple(3, 3, vec![(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)]).unwrap();
        let nu = h.max_matching().1;
        if let Some(h2) = interchange_step(&h).unwrap() {
            assert!(h2.max_matching().1 > nu);
            assert_eq!(h2.degrees(), h.degrees());
            assert!(h2.verify_simple());
        }
    }
}
