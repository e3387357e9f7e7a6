//! Set functions on the T side of a bigraph: evaluation, supermodularity
//! classification, subpartition maxima via subset DP, and the master
//! submodular function whose 0-base-polyhedron captures realizable degree
//! specifications.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{self, Mask};
use crate::error::Error;
use crate::ext::Ext;
use crate::graph::{Digraph, Subpartition};
use crate::Outcome;

/// Ground sets larger than this make the 2^t tables and 3^t DPs intractable.
pub const TABLE_CAP: usize = 16;

/// Verification state of a structural property.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tri {
    True,
    False,
    Unknown,
}

impl Tri {
    pub fn is_true(self) -> bool {
        self == Tri::True
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flags {
    /// Positively intersecting supermodular: the supermodular inequality
    /// holds for every intersecting pair on which both values are positive.
    pub intersecting_supermodular: Tri,
    /// Supermodular inequality for all pairs, empty intersections included.
    pub fully_supermodular: Tri,
    /// Non-decreasing on non-empty sets.
    pub monotone: Tri,
}

/// A set function on subsets of `T` with `p(empty) = 0`, either an explicit
/// table or one of the closed forms used by the constructions.
#[derive(Clone, Debug)]
pub struct SetFunctionOnT {
    t_size: usize,
    form: Form,
}

#[derive(Clone, Debug)]
pub enum Form {
    /// Value per subset bitmask; index 0 is normalized to 0.
    Explicit(Vec<i64>),
    /// `ell - |T - Y|` on non-empty `Y`: covering it forces matching number
    /// at least `ell`.
    TermRank { ell: i64 },
    /// `m_for~(Y) - |Y| + 1` on non-empty `Y`: covering it forces a forest
    /// with degree `m_for(t)` at every `t`.
    Forest { m_for: Vec<i64> },
    /// `k - rho_D(Y)` on non-empty `Y`, with singletons optionally lifted to
    /// `k - m_in(v)`: covering it yields admissible root-sets for `k`
    /// arc-disjoint branchings.
    BranchingIndeg {
        digraph: Digraph,
        k: i64,
        m_in: Option<Vec<i64>>,
    },
}

impl SetFunctionOnT {
    pub fn explicit(t_size: usize, mut values: Vec<i64>) -> Result<SetFunctionOnT, Error> {
        if t_size > TABLE_CAP {
            return Err(Error::capacity(format!(
                "explicit table over {t_size} elements exceeds the cap of {TABLE_CAP}"
            )));
        }
        if values.len() != 1usize << t_size {
            return Err(Error::invalid(format!(
                "explicit table needs {} entries, got {}",
                1usize << t_size,
                values.len()
            )));
        }
        values[0] = 0; // normalization
        Ok(SetFunctionOnT {
            t_size,
            form: Form::Explicit(values),
        })
    }

    pub fn term_rank(t_size: usize, ell: i64) -> Result<SetFunctionOnT, Error> {
        if ell < 0 {
            return Err(Error::invalid("target matching size must be non-negative"));
        }
        Ok(SetFunctionOnT {
            t_size,
            form: Form::TermRank { ell },
        })
    }

    pub fn forest(m_for: Vec<i64>) -> Result<SetFunctionOnT, Error> {
        if m_for.iter().any(|&v| v < 0) {
            return Err(Error::invalid("forest degree specification must be non-negative"));
        }
        Ok(SetFunctionOnT {
            t_size: m_for.len(),
            form: Form::Forest { m_for },
        })
    }

    pub fn branching_indeg(
        digraph: Digraph,
        k: i64,
        m_in: Option<Vec<i64>>,
    ) -> Result<SetFunctionOnT, Error> {
        if k < 0 {
            return Err(Error::invalid("branching count must be non-negative"));
        }
        if let Some(m) = &m_in {
            if m.len() != digraph.node_count() {
                return Err(Error::invalid("indegree prescription length must match node count"));
            }
            if m.iter().any(|&v| v < 0) {
                return Err(Error::invalid("indegree prescription must be non-negative"));
            }
        }
        Ok(SetFunctionOnT {
            t_size: digraph.node_count(),
            form: Form::BranchingIndeg { digraph, k, m_in },
        })
    }

    pub fn t_size(&self) -> usize {
        self.t_size
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    /// Evaluates the function; always 0 on the empty set.
    pub fn eval(&self, y: Mask) -> Result<i64, Error> {
        if y & !bits::full_mask(self.t_size) != 0 {
            return Err(Error::invalid("subset out of range for set function"));
        }
        if y == 0 {
            return Ok(0);
        }
        Ok(match &self.form {
            Form::Explicit(values) => values[y as usize],
            Form::TermRank { ell } => ell - (self.t_size - bits::count(y)) as i64,
            Form::Forest { m_for } => bits::mask_sum(m_for, y) - bits::count(y) as i64 + 1,
            Form::BranchingIndeg { digraph, k, m_in } => {
                if let (Some(m), 1) = (m_in, bits::count(y)) {
                    let v = y.trailing_zeros() as usize;
                    k - m[v]
                } else {
                    k - digraph.in_degree(y)?
                }
            }
        })
    }

    /// Materializes the full value table; requires `t_size <= 16`.
    pub fn table(&self) -> Result<Vec<i64>, Error> {
        if self.t_size > TABLE_CAP {
            return Err(Error::capacity(format!(
                "set-function table over {} elements exceeds the cap of {TABLE_CAP}",
                self.t_size
            )));
        }
        if let Form::Explicit(values) = &self.form {
            return Ok(values.clone());
        }
        (0..1u64 << self.t_size).map(|y| self.eval(y)).collect()
    }

    /// Property flags, verified: closed forms by the facts recorded below,
    /// explicit tables by exhaustive pair checks.
    pub fn classify(&self) -> Result<Flags, Error> {
        match &self.form {
            Form::Explicit(values) => Ok(classify_table(self.t_size, values)),
            Form::TermRank { ell } => Ok(Flags {
                intersecting_supermodular: Tri::True,
                // On disjoint non-empty pairs the defect is ell - |T|.
                fully_supermodular: if self.t_size < 2 || *ell <= self.t_size as i64 {
                    Tri::True
                } else {
                    Tri::False
                },
                monotone: Tri::True,
            }),
            Form::Forest { m_for } => Ok(Flags {
                intersecting_supermodular: Tri::True,
                // Merging two disjoint non-empty sets always loses exactly 1.
                fully_supermodular: if self.t_size < 2 { Tri::True } else { Tri::False },
                monotone: if m_for.iter().all(|&v| v >= 1) {
                    Tri::True
                } else {
                    Tri::False
                },
            }),
            Form::BranchingIndeg { digraph, k: _, m_in } => {
                if let Some(m) = m_in {
                    let rho = digraph.in_degrees();
                    for v in 0..digraph.node_count() {
                        if m[v] > rho[v] {
                            return Err(Error::precondition(format!(
                                "indegree prescription {} at node {v} exceeds its in-degree {}",
                                m[v], rho[v]
                            )));
                        }
                    }
                }
                let (fully, monotone) = if self.t_size <= 12 {
                    let table = self.table()?;
                    let f = classify_table(self.t_size, &table);
                    (f.fully_supermodular, f.monotone)
                } else {
                    (Tri::Unknown, Tri::Unknown)
                };
                Ok(Flags {
                    intersecting_supermodular: Tri::True,
                    fully_supermodular: fully,
                    monotone,
                })
            }
        }
    }
}

fn classify_table(t_size: usize, values: &[i64]) -> Flags {
    let full = bits::full_mask(t_size);
    let mut intersecting = true;
    let mut fully = true;
    for a in 0..=full {
        for b in a..=full {
            let lhs = values[a as usize] + values[b as usize];
            let rhs = values[(a & b) as usize] + values[(a | b) as usize];
            if lhs > rhs {
                fully = false;
                let proper = a & b != 0 && a & !b != 0 && b & !a != 0;
                if proper && values[a as usize] > 0 && values[b as usize] > 0 {
                    intersecting = false;
                }
            }
        }
        if !fully && !intersecting {
            break;
        }
    }
    let mut monotone = true;
    'outer: for y in 1..=full {
        for i in 0..t_size {
            let b = bits::bit(i);
            if y & b == 0 && values[y as usize] > values[(y | b) as usize] {
                monotone = false;
                break 'outer;
            }
        }
    }
    let tri = |b: bool| if b { Tri::True } else { Tri::False };
    Flags {
        intersecting_supermodular: tri(intersecting),
        fully_supermodular: tri(fully),
        monotone: tri(monotone),
    }
}

const NEG: i64 = i64::MIN;

/// Subset DP over subpartitions: `max(ground, q)` is the largest sum of
/// values over families of exactly `q` disjoint non-empty parts inside
/// `ground`. One build serves every (ground, q) query, which is what the
/// min-max conditions sweep over.
pub struct SpTable {
    t_size: usize,
    best: Vec<Vec<i64>>,
    choice: Vec<Vec<u32>>,
}

impl SpTable {
    pub fn build(p: &SetFunctionOnT) -> Result<SpTable, Error> {
        Ok(SpTable::from_values(p.t_size(), &p.table()?))
    }

    pub fn from_values(t_size: usize, values: &[i64]) -> SpTable {
        debug_assert!(t_size <= TABLE_CAP);
        debug_assert_eq!(values.len(), 1usize << t_size);
        let size = 1usize << t_size;
        let mut best = vec![vec![0i64; size]; t_size + 1];
        let mut choice = vec![vec![0u32; size]; t_size + 1];
        for q in 1..=t_size {
            best[q][0] = NEG;
            for mask in 1..size as u64 {
                let low = mask & mask.wrapping_neg();
                let rest = mask & (mask - 1);
                // Lowest element unused.
                let mut b = best[q][rest as usize];
                let mut c = 0u32;
                // Lowest element in a part `low | sub` with `sub` drawn from
                // the higher elements.
                for sub in bits::submasks(rest) {
                    let part = low | sub;
                    let prev = best[q - 1][(mask & !part) as usize];
                    if prev == NEG {
                        continue;
                    }
                    let cand = values[part as usize] + prev;
                    if cand > b {
                        b = cand;
                        c = part as u32;
                    }
                }
                best[q][mask as usize] = b;
                choice[q][mask as usize] = c;
            }
        }
        SpTable {
            t_size,
            best,
            choice,
        }
    }

    pub fn t_size(&self) -> usize {
        self.t_size
    }

    /// Maximum value sum over subpartitions of `ground` with exactly `q`
    /// parts; `NegInf` when no such subpartition exists, 0 when `q` is 0.
    pub fn max(&self, ground: Mask, q: usize) -> Ext {
        if q > bits::count(ground) {
            return Ext::NegInf;
        }
        let v = self.best[q][ground as usize];
        if v == NEG {
            Ext::NegInf
        } else {
            Ext::Fin(v)
        }
    }

    /// A maximizing subpartition for `(ground, q)`, if one exists.
    pub fn argmax(&self, ground: Mask, q: usize) -> Option<Subpartition> {
        if q > bits::count(ground) || self.best[q][ground as usize] == NEG {
            return None;
        }
        let mut parts = Vec::with_capacity(q);
        let mut mask = ground;
        let mut rem = q;
        while rem > 0 {
            let c = self.choice[rem][mask as usize] as Mask;
            if c == 0 {
                mask &= mask - 1;
            } else {
                parts.push(c);
                mask &= !c;
                rem -= 1;
            }
        }
        Some(Subpartition::new(ground, parts).expect("DP reconstruction yields disjoint parts"))
    }

    /// `max over q of (max(ground, q) - penalty * q)` together with the best
    /// `q`. The empty family (q = 0) contributes 0, so the result is never
    /// negative. `q_cap` restricts the family size.
    pub fn best_with_penalty(&self, ground: Mask, penalty: i64, q_cap: Option<usize>) -> (i64, usize) {
        let hi = q_cap
            .unwrap_or(self.t_size)
            .min(bits::count(ground));
        let mut best = 0i64;
        let mut best_q = 0usize;
        for q in 1..=hi {
            let v = self.best[q][ground as usize];
            if v == NEG {
                continue;
            }
            let cand = v - penalty * q as i64;
            if cand > best {
                best = cand;
                best_q = q;
            }
        }
        (best, best_q)
    }
}

/// Maximum of the value sum over subpartitions of `ground` with exactly `q`
/// parts. `NegInf` when `q > |ground|`; 0 when `q = 0`.
pub fn subpartition_max(p: &SetFunctionOnT, ground: Mask, q: usize) -> Result<Ext, Error> {
    if ground & !bits::full_mask(p.t_size()) != 0 {
        return Err(Error::invalid("ground set out of range"));
    }
    let table = SpTable::build(p)?;
    Ok(table.max(ground, q))
}

/// Node subsets of the combined ground set `V = S + T`: S occupies the low
/// bits, T the bits starting at `s_size`.
pub fn join_masks(s_size: usize, x: Mask, z: Mask) -> Mask {
    x | (z << s_size)
}

pub fn split_mask(s_size: usize, u: Mask) -> (Mask, Mask) {
    (u & bits::full_mask(s_size), u >> s_size)
}

/// Witness that a degree vector pair is not realizable: a subset of `V` on
/// which the prescribed values exceed the master function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct B0Violation {
    /// Offending subset of `V` (S in the low bits).
    pub u: Mask,
    /// Prescribed total on `u` (`m_S` summed positively, `m_T` negatively).
    pub lhs: i64,
    /// Master function value on `u`.
    pub rhs: i64,
}

/// The master submodular function associated with a demand function and an
/// S side of a given size. Built eagerly: one subpartition DP serves every
/// subsequent evaluation, so shared lookups are safe from any thread.
pub struct MasterFunction {
    s_size: usize,
    t_size: usize,
    sp: SpTable,
}

impl MasterFunction {
    /// Requires `p(Y) <= s_size` everywhere (otherwise no graph on S can
    /// cover `p` and the function is not defined); the witness subset is
    /// reported on failure.
    pub fn new(s_size: usize, p: &SetFunctionOnT) -> Result<MasterFunction, Error> {
        let table = p.table()?;
        if let Some(y) = (0..table.len()).find(|&y| table[y] > s_size as i64) {
            return Err(Error::precondition(format!(
                "demand {} on subset mask {y} exceeds |S| = {s_size}",
                table[y]
            )));
        }
        Ok(MasterFunction {
            s_size,
            t_size: p.t_size(),
            sp: SpTable::from_values(p.t_size(), &table),
        })
    }

    pub fn s_size(&self) -> usize {
        self.s_size
    }

    pub fn t_size(&self) -> usize {
        self.t_size
    }

    pub fn v_size(&self) -> usize {
        self.s_size + self.t_size
    }

    /// Evaluates the master function on a subset of `V` (S in the low bits):
    /// the cheapest way any subpartition of the T part can discount the
    /// rectangle count.
    pub fn eval_b0(&self, u: Mask) -> Result<i64, Error> {
        if u & !bits::full_mask(self.v_size()) != 0 {
            return Err(Error::invalid("subset out of range for master function"));
        }
        let (x, z) = split_mask(self.s_size, u);
        let cx = bits::count(x) as i64;
        let outside = (self.t_size - bits::count(z)) as i64;
        let mut best = i64::MAX;
        for q in 0..=bits::count(z) {
            if let Ext::Fin(sp) = self.sp.max(z, q) {
                best = best.min(outside * cx - sp + q as i64 * cx);
            }
        }
        Ok(best)
    }

    /// Complementary function: `-b0(V - u)`.
    pub fn complement(&self, u: Mask) -> Result<i64, Error> {
        Ok(-self.eval_b0(bits::full_mask(self.v_size()) & !u)?)
    }

    /// Decides whether the signed vector `(m_s, -m_t)` lies in the
    /// 0-base-polyhedron of the master function, i.e. whether `(m_s, m_t)`
    /// is the degree vector of some simple bigraph covering the demand.
    /// On failure returns a subset maximizing the violation.
    pub fn member_in_b0(
        &self,
        m_s: &[i64],
        m_t: &[i64],
    ) -> Result<Outcome<(), B0Violation>, Error> {
        if m_s.len() != self.s_size || m_t.len() != self.t_size {
            return Err(Error::invalid("degree vector lengths do not match the master function"));
        }
        let gamma_s: i64 = m_s.iter().sum();
        let gamma_t: i64 = m_t.iter().sum();
        if gamma_s != gamma_t {
            return Err(Error::precondition(format!(
                "degree specification unbalanced: {gamma_s} on S vs {gamma_t} on T"
            )));
        }
        let v = self.v_size();
        if v > 22 {
            return Err(Error::capacity(format!(
                "membership sweep over 2^{v} subsets exceeds the cap of 2^22"
            )));
        }
        let mut worst: Option<B0Violation> = None;
        for u in 0..=bits::full_mask(v) {
            let (x, z) = split_mask(self.s_size, u);
            let lhs = bits::mask_sum(m_s, x) - bits::mask_sum(m_t, z);
            let rhs = self.eval_b0(u)?;
            if lhs > rhs {
                let better = match &worst {
                    None => true,
                    Some(w) => lhs - rhs > w.lhs - w.rhs,
                };
                if better {
                    worst = Some(B0Violation { u, lhs, rhs });
                }
            }
        }
        Ok(match worst {
            None => Outcome::Feasible(()),
            Some(w) => Outcome::Infeasible(w),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::for_each_subpartition;

    /// The 4-element demand table whose unique degree-fitting graph fails to
    /// cover it; used as a fixture across the crate.
    pub(crate) fn tight_demand_table() -> SetFunctionOnT {
        let mut v = vec![0i64; 16];
        v[0b0001] = 3;
        v[0b0010] = 3;
        v[0b0100] = 3;
        v[0b1000] = 2;
        for pair in [0b0011u64, 0b0101, 0b1001, 0b0110, 0b1010] {
            v[pair as usize] = 1;
        }
        v[0b1100] = 4;
        v[0b0111] = 2;
        v[0b1011] = 2;
        v[0b1101] = 3;
        v[0b1110] = 3;
        v[0b1111] = 4;
        SetFunctionOnT::explicit(4, v).unwrap()
    }

    #[test]
    fn eval_closed_forms() {
        let tr = SetFunctionOnT::term_rank(3, 2).unwrap();
        assert_eq!(tr.eval(0b001).unwrap(), 0);
        assert_eq!(tr.eval(0).unwrap(), 0);
        assert_eq!(tr.eval(0b111).unwrap(), 2);

        let forest = SetFunctionOnT::forest(vec![2, 2, 2]).unwrap();
        assert_eq!(forest.eval(0b011).unwrap(), 2 * 2 - 2 + 1);
        assert_eq!(forest.eval(0b001).unwrap(), 2);

        let path = Digraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let b = SetFunctionOnT::branching_indeg(path.clone(), 2, None).unwrap();
        assert_eq!(b.eval(0b110).unwrap(), 2 - 1);
        assert_eq!(b.eval(0b001).unwrap(), 2 - 0);

        let bi = SetFunctionOnT::branching_indeg(path, 2, Some(vec![0, 1, 1])).unwrap();
        assert_eq!(bi.eval(0b001).unwrap(), 2 - 0);
        assert_eq!(bi.eval(0b010).unwrap(), 2 - 1);
        assert_eq!(bi.eval(0b110).unwrap(), 2 - 1);
    }

    #[test]
    fn normalization_on_empty_set() {
        let mut v = vec![7i64; 16];
        let p = SetFunctionOnT::explicit(4, v.clone()).unwrap();
        assert_eq!(p.eval(0).unwrap(), 0);
        v[0] = 0;
        for form in [
            SetFunctionOnT::term_rank(4, 3).unwrap(),
            SetFunctionOnT::forest(vec![2; 4]).unwrap(),
        ] {
            assert_eq!(form.eval(0).unwrap(), 0);
        }
    }

    #[test]
    fn classify_term_rank() {
        let f = SetFunctionOnT::term_rank(3, 2).unwrap().classify().unwrap();
        assert_eq!(f.intersecting_supermodular, Tri::True);
        assert_eq!(f.fully_supermodular, Tri::True);
        assert_eq!(f.monotone, Tri::True);
    }

    #[test]
    fn classify_forest_on_four_elements() {
        let p = SetFunctionOnT::forest(vec![2, 2, 2, 2]).unwrap();
        let f = p.classify().unwrap();
        assert_eq!(f.intersecting_supermodular, Tri::True);
        assert_eq!(f.fully_supermodular, Tri::False);
        // Exhaustive pair check agrees with the recorded facts.
        let g = classify_table(4, &p.table().unwrap());
        assert_eq!(g.intersecting_supermodular, Tri::True);
        assert_eq!(g.fully_supermodular, Tri::False);
        assert_eq!(g.monotone, f.monotone);
    }

    #[test]
    fn classify_tight_demand_table() {
        let f = tight_demand_table().classify().unwrap();
        assert_eq!(f.intersecting_supermodular, Tri::True);
    }

    #[test]
    fn classify_rejects_overfull_indegree_prescription() {
        let path = Digraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let p = SetFunctionOnT::branching_indeg(path, 1, Some(vec![1, 1, 0])).unwrap();
        assert!(matches!(p.classify(), Err(Error::Precondition(_))));
    }

    #[test]
    fn subpartition_max_basics() {
        let p = tight_demand_table();
        assert_eq!(subpartition_max(&p, 0b1111, 0).unwrap(), Ext::Fin(0));
        assert_eq!(subpartition_max(&p, 0b1100, 1).unwrap(), Ext::Fin(4));
        assert_eq!(subpartition_max(&p, 0b0001, 2).unwrap(), Ext::NegInf);

        let tr = SetFunctionOnT::term_rank(3, 3).unwrap();
        assert_eq!(subpartition_max(&tr, 0b111, 1).unwrap(), Ext::Fin(3));
    }

    #[test]
    fn subpartition_dp_matches_enumeration() {
        let functions = [
            tight_demand_table(),
            SetFunctionOnT::term_rank(4, 2).unwrap(),
            SetFunctionOnT::forest(vec![2, 1, 2, 1]).unwrap(),
        ];
        for p in &functions {
            let sp = SpTable::build(p).unwrap();
            for ground in 0..16u64 {
                let n = bits::count(ground);
                let mut best = vec![i64::MIN; n + 1];
                for_each_subpartition(ground, None, |parts| {
                    let sum: i64 = parts.iter().map(|&m| p.eval(m).unwrap()).sum();
                    if sum > best[parts.len()] {
                        best[parts.len()] = sum;
                    }
                })
                .unwrap();
                for (q, &expect) in best.iter().enumerate() {
                    let got = sp.max(ground, q);
                    assert_eq!(got, Ext::Fin(expect), "ground {ground:#b} q {q}");
                    let arg = sp.argmax(ground, q).unwrap();
                    let sum: i64 = arg.parts().iter().map(|&m| p.eval(m).unwrap()).sum();
                    assert_eq!(sum, expect);
                    assert_eq!(arg.part_count(), q);
                }
                assert_eq!(sp.max(ground, n + 1), Ext::NegInf);
            }
        }
    }

    #[test]
    fn subpartition_dp_matches_enumeration_on_eight_elements() {
        let mut state = 0x0123_4567_89abu64;
        let mut rng = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let values: Vec<i64> = (0..256).map(|_| (rng() % 9) as i64 - 3).collect();
        let p = SetFunctionOnT::explicit(8, values).unwrap();
        let sp = SpTable::build(&p).unwrap();
        let ground = bits::full_mask(8);
        let mut best = vec![i64::MIN; 9];
        for_each_subpartition(ground, None, |parts| {
            let sum: i64 = parts.iter().map(|&m| p.eval(m).unwrap()).sum();
            if sum > best[parts.len()] {
                best[parts.len()] = sum;
            }
        })
        .unwrap();
        for (q, &expect) in best.iter().enumerate() {
            assert_eq!(sp.max(ground, q), Ext::Fin(expect), "q = {q}");
        }
    }

    #[test]
    fn master_function_shared_across_threads() {
        let p = tight_demand_table();
        let m = MasterFunction::new(4, &p).unwrap();
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..4)
                .map(|offset| {
                    let m = &m;
                    scope.spawn(move || {
                        let mut acc = 0i64;
                        for u in 0..256u64 {
                            acc += m.eval_b0((u + offset) % 256).unwrap();
                        }
                        acc
                    })
                })
                .collect();
            let results: Vec<i64> = handles.into_iter().map(|h| h.join().unwrap()).collect();
            assert!(results.windows(2).all(|w| w[0] == w[1]));
        });
    }

    #[test]
    fn master_function_zero_at_both_ends() {
        let p = tight_demand_table();
        let m = MasterFunction::new(4, &p).unwrap();
        assert_eq!(m.eval_b0(0).unwrap(), 0);
        assert_eq!(m.eval_b0(bits::full_mask(8)).unwrap(), 0);
    }

    #[test]
    fn master_function_hall_example() {
        // Demand |Y| on a 2x2 ground: the perfect-matching demand.
        let hall = SetFunctionOnT::explicit(2, vec![0, 1, 1, 2]).unwrap();
        let m = MasterFunction::new(2, &hall).unwrap();
        // U = {s0, t0}: both subpartitions of {t0} price the set at 1.
        let u = join_masks(2, 0b01, 0b01);
        assert_eq!(m.eval_b0(u).unwrap(), 1);
    }

    #[test]
    fn master_function_rejects_oversized_demand() {
        let p = SetFunctionOnT::explicit(2, vec![0, 3, 1, 2]).unwrap();
        assert!(matches!(MasterFunction::new(2, &p), Err(Error::Precondition(_))));
    }

    #[test]
    fn membership_single_edge() {
        let p = SetFunctionOnT::explicit(1, vec![0, 0]).unwrap();
        let m = MasterFunction::new(1, &p).unwrap();
        assert!(m.member_in_b0(&[1], &[1]).unwrap().is_feasible());
    }

    #[test]
    fn membership_perfect_matching() {
        let hall = SetFunctionOnT::explicit(2, vec![0, 1, 1, 2]).unwrap();
        let m = MasterFunction::new(2, &hall).unwrap();
        assert!(m.member_in_b0(&[1, 1], &[1, 1]).unwrap().is_feasible());
    }

    #[test]
    fn membership_rejects_tight_instance() {
        let p = tight_demand_table();
        let m = MasterFunction::new(4, &p).unwrap();
        let out = m.member_in_b0(&[4, 4, 3, 2], &[4, 4, 3, 2]).unwrap();
        let viol = out.infeasible().expect("must be outside the polyhedron");
        assert!(viol.lhs > viol.rhs);
        // The subset X = {s0, s1}, Z = {t2, t3} exhibits a gap of 1.
        let u = join_masks(4, 0b0011, 0b1100);
        let lhs = 4 + 4 - 3 - 2;
        assert_eq!(m.eval_b0(u).unwrap(), 2);
        assert_eq!(lhs - m.eval_b0(u).unwrap(), 1);
        assert_eq!(viol.lhs - viol.rhs, 1);
    }

    #[test]
    fn membership_requires_balance() {
        let p = SetFunctionOnT::explicit(1, vec![0, 0]).unwrap();
        let m = MasterFunction::new(1, &p).unwrap();
        assert!(matches!(
            m.member_in_b0(&[2], &[1]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn b0_submodular_and_complement_supermodular_on_random_instances() {
        let mut state = 0x2545f4914f6cdd1du64;
        let mut rng = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..40 {
            let s = (rng() % 4 + 1) as usize;
            let t = (rng() % 4 + 1) as usize;
            // Random intersecting-supermodular demand: k - indegree of a
            // random digraph, clipped at 0 and capped at |S| by rejection.
            let n_arcs = (rng() % 7) as usize;
            let arcs = (0..n_arcs)
                .map(|_| ((rng() as usize) % t, (rng() as usize) % t))
                .collect();
            let d = Digraph::new(t, arcs).unwrap();
            let k = (rng() % s as u64) as i64;
            let base = SetFunctionOnT::branching_indeg(d, k, None).unwrap();
            let table: Vec<i64> = base.table().unwrap().iter().map(|&v| v.max(0)).collect();
            let p = SetFunctionOnT::explicit(t, table).unwrap();
            assert!(p.classify().unwrap().intersecting_supermodular.is_true());
            let m = MasterFunction::new(s, &p).unwrap();
            let v = bits::full_mask(s + t);
            let b0: Vec<i64> = (0..=v).map(|u| m.eval_b0(u).unwrap()).collect();
            assert_eq!(b0[0], 0);
            assert_eq!(b0[v as usize], 0);
            for a in 0..=v {
                for b in 0..=v {
                    assert!(
                        b0[a as usize] + b0[b as usize]
                            >= b0[(a & b) as usize] + b0[(a | b) as usize],
                        "submodularity fails on {a:#b}, {b:#b}"
                    );
                    let pa = m.complement(a).unwrap();
                    let pb = m.complement(b).unwrap();
                    let pi = m.complement(a & b).unwrap();
                    let pu = m.complement(a | b).unwrap();
                    assert!(pa + pb <= pi + pu, "complement supermodularity fails");
                }
            }
        }
    }
}
