//! Acceptance suite: every criterion below pins a behaviour of the library
//! against an independent oracle or a frozen instance, with its runtime
//! budget asserted. Run with `--nocapture` to see one line per criterion.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use gsynth_core::bits;
use gsynth_core::branchings::{self, PackingRequest};
use gsynth_core::ext::Ext;
use gsynth_core::forests;
use gsynth_core::graph::{Bigraph, Digraph};
use gsynth_core::oracle::{self, DegreeRequirement, GraphPredicate, OracleBudget, RawCondition};
use gsynth_core::realize::{self, DegreeBounds, DegreeSpec, PartsMode};
use gsynth_core::setfn::{MasterFunction, SetFunctionOnT};
use gsynth_core::termrank;

fn seeded(criterion: u64) -> StdRng {
    StdRng::seed_from_u64(0x5eed_0000 + criterion)
}

fn budget() -> OracleBudget {
    OracleBudget::default()
}

fn tight_spec() -> DegreeSpec {
    DegreeSpec::new(vec![4, 4, 3, 2], vec![4, 4, 3, 2]).unwrap()
}

fn tight_demand() -> SetFunctionOnT {
    let mut v = vec![0i64; 16];
    v[0b0001] = 3;
    v[0b0010] = 3;
    v[0b0100] = 3;
    v[0b1000] = 2;
    for pair in [0b0011usize, 0b0101, 0b1001, 0b0110, 0b1010] {
        v[pair] = 1;
    }
    v[0b1100] = 4;
    v[0b0111] = 2;
    v[0b1011] = 2;
    v[0b1101] = 3;
    v[0b1110] = 3;
    v[0b1111] = 4;
    SetFunctionOnT::explicit(4, v).unwrap()
}

fn report(criterion: u32, name: &str, elapsed: Duration, limit: Duration) {
    assert!(
        elapsed < limit,
        "criterion {criterion} exceeded its runtime budget: {elapsed:?} >= {limit:?}"
    );
    println!("criterion {criterion:2} ({name}): PASS in {elapsed:?}");
}

/// Random demand function that is positively intersecting supermodular and
/// bounded by `s_size`, drawn from the named closed forms and from clipped
/// cut-style tables.
fn random_demand(rng: &mut StdRng, s_size: usize, t_size: usize) -> SetFunctionOnT {
    loop {
        let p = match rng.gen_range(0..5) {
            0 => SetFunctionOnT::explicit(t_size, vec![0; 1 << t_size]).unwrap(),
            1 => {
                // Neighbourhood demand |Y| (a matching covering T); the size
                // filter below rejects it when |T| > |S|.
                let v = (0..1u64 << t_size).map(|y| bits::count(y) as i64).collect();
                SetFunctionOnT::explicit(t_size, v).unwrap()
            }
            2 => SetFunctionOnT::term_rank(t_size, rng.gen_range(0..=3.min(t_size as i64)))
                .unwrap(),
            3 => {
                let m_for: Vec<i64> = (0..t_size).map(|_| rng.gen_range(0..=2)).collect();
                SetFunctionOnT::forest(m_for).unwrap()
            }
            _ => {
                let arcs = (0..rng.gen_range(0..=7))
                    .map(|_| (rng.gen_range(0..t_size), rng.gen_range(0..t_size)))
                    .collect();
                let d = Digraph::new(t_size, arcs).unwrap();
                let k = rng.gen_range(0..=s_size as i64);
                let base = SetFunctionOnT::branching_indeg(d, k, None).unwrap();
                let mut table: Vec<i64> =
                    base.table().unwrap().iter().map(|&v| v.max(0)).collect();
                // Lifting singleton values preserves the property.
                for t in 0..t_size {
                    let idx = 1usize << t;
                    table[idx] = (table[idx] + rng.gen_range(0..=1)).min(s_size as i64);
                }
                SetFunctionOnT::explicit(t_size, table).unwrap()
            }
        };
        let table = p.table().unwrap();
        if table.iter().all(|&v| v <= s_size as i64) {
            assert!(p
                .classify()
                .unwrap()
                .intersecting_supermodular
                .is_true());
            return p;
        }
    }
}

fn random_balanced_pair(rng: &mut StdRng, s: usize, t: usize, max_deg: i64) -> (Vec<i64>, Vec<i64>) {
    loop {
        let m_s: Vec<i64> = (0..s).map(|_| rng.gen_range(0..=max_deg.min(t as i64))).collect();
        let m_t: Vec<i64> = (0..t).map(|_| rng.gen_range(0..=max_deg.min(s as i64))).collect();
        if m_s.iter().sum::<i64>() == m_t.iter().sum::<i64>() {
            return (m_s, m_t);
        }
    }
}

#[test]
fn criterion_01_tight_counterexample() {
    let start = Instant::now();
    let spec = tight_spec();
    let p = tight_demand();
    let cert = realize::check_cover_full(&spec, &p)
        .unwrap()
        .infeasible()
        .expect("the tight instance admits no covering realization");
    assert_eq!((cert.lhs, cert.rhs), (14, 13));
    let (lhs, rhs) = realize::cover_full_sides(&spec, &p, cert.x, cert.y, &cert.parts).unwrap();
    assert_eq!((lhs, rhs), (14, 13));

    let g = realize::construct_gale_ryser(&spec).unwrap().feasible().unwrap();
    let gamma = g.neighbors(0b1100).unwrap();
    assert_eq!(bits::count(gamma), 3);
    report(1, "tight counterexample", start.elapsed(), Duration::from_secs(1));
}

#[test]
fn criterion_02_degree_fitting_biconditional() {
    let start = Instant::now();
    let mut disagreements = 0u32;
    let mut checked = 0u32;
    for s in 1..=3usize {
        for t in 1..=3usize {
            let combos_s = (4i64).pow(s as u32);
            let combos_t = (4i64).pow(t as u32);
            for cs in 0..combos_s {
                let m_s: Vec<i64> = (0..s).map(|i| (cs / 4i64.pow(i as u32)) % 4).collect();
                for ct in 0..combos_t {
                    let m_t: Vec<i64> = (0..t).map(|i| (ct / 4i64.pow(i as u32)) % 4).collect();
                    if m_s.iter().sum::<i64>() != m_t.iter().sum::<i64>() {
                        continue;
                    }
                    if m_s.iter().any(|&v| v > t as i64) || m_t.iter().any(|&v| v > s as i64) {
                        // Out-of-cap entries: the checker must reject, and no
                        // simple graph can exist.
                        let spec = DegreeSpec::new(m_s.clone(), m_t.clone()).unwrap();
                        assert!(!realize::check_gale_ryser(&spec).unwrap().is_feasible());
                        continue;
                    }
                    let spec = DegreeSpec::new(m_s.clone(), m_t.clone()).unwrap();
                    let fast = realize::check_gale_ryser(&spec).unwrap().is_feasible();
                    let req = DegreeRequirement::Exact {
                        m_s: &m_s,
                        m_t: &m_t,
                    };
                    let found = oracle::oracle_bigraphs(&req, &GraphPredicate::Any, &budget())
                        .unwrap()
                        .is_some();
                    checked += 1;
                    if fast != found {
                        disagreements += 1;
                    }
                    if fast {
                        // The construction must succeed and fit exactly.
                        let g = realize::construct_gale_ryser(&spec)
                            .unwrap()
                            .feasible()
                            .unwrap();
                        let (ds, dt) = g.degrees();
                        assert_eq!(ds, m_s);
                        assert_eq!(dt, m_t);
                    }
                }
            }
        }
    }
    let mut rng = seeded(2);
    for _ in 0..500 {
        let (m_s, m_t) = random_balanced_pair(&mut rng, 4, 4, 4);
        let spec = DegreeSpec::new(m_s.clone(), m_t.clone()).unwrap();
        let fast = realize::check_gale_ryser(&spec).unwrap().is_feasible();
        let req = DegreeRequirement::Exact {
            m_s: &m_s,
            m_t: &m_t,
        };
        let found = oracle::oracle_bigraphs(&req, &GraphPredicate::Any, &budget())
            .unwrap()
            .is_some();
        checked += 1;
        if fast != found {
            disagreements += 1;
        }
    }
    assert_eq!(disagreements, 0, "checker vs oracle over {checked} instances");
    report(2, "degree fitting biconditional", start.elapsed(), Duration::from_secs(120));
}

#[test]
fn criterion_03_cover_s_biconditional() {
    let start = Instant::now();
    let mut rng = seeded(3);
    for round in 0..200 {
        let s = rng.gen_range(1..=4usize);
        let t = rng.gen_range(1..=4usize);
        let p = random_demand(&mut rng, s, t);
        let m_s: Vec<i64> = (0..s).map(|_| rng.gen_range(0..=t as i64)).collect();
        let parts_form = realize::check_cover_s(&m_s, &p).unwrap().is_feasible();
        let mixed_form = realize::check_cover_s_mixed(&m_s, &p).unwrap().is_feasible();
        assert_eq!(parts_form, mixed_form, "round {round}: the two condition forms disagree");
        let g_t = vec![s as i64; t];
        let f_t = vec![0i64; t];
        let req = DegreeRequirement::Box {
            f_s: &m_s,
            g_s: &m_s,
            f_t: &f_t,
            g_t: &g_t,
            alpha: 0,
            beta: (s * t) as i64,
        };
        let found = oracle::oracle_bigraphs(&req, &GraphPredicate::Covers(&p), &budget())
            .unwrap()
            .is_some();
        assert_eq!(parts_form, found, "round {round}: checker vs oracle");
        if parts_form {
            let g = realize::construct_cover_s(&m_s, &p).unwrap().feasible().unwrap();
            let (ds, _) = g.degrees();
            assert_eq!(ds, m_s);
            for y in 1..1u64 << t {
                assert!(bits::count(g.neighbors(y).unwrap()) as i64 >= p.eval(y).unwrap());
            }
        }
    }
    report(3, "covering with S-degrees biconditional", start.elapsed(), Duration::from_secs(300));
}

#[test]
fn criterion_04_master_function_submodularity() {
    let start = Instant::now();
    let mut rng = seeded(4);
    for _ in 0..50 {
        let s = rng.gen_range(1..=4usize);
        let t = rng.gen_range(1..=(8 - s).min(4));
        let p = random_demand(&mut rng, s, t);
        let master = MasterFunction::new(s, &p).unwrap();
        let v = bits::full_mask(s + t);
        let b0: Vec<i64> = (0..=v).map(|u| master.eval_b0(u).unwrap()).collect();
        assert_eq!(b0[0], 0);
        assert_eq!(b0[v as usize], 0);
        for a in 0..=v {
            for b in 0..=v {
                assert!(
                    b0[a as usize] + b0[b as usize] >= b0[(a & b) as usize] + b0[(a | b) as usize],
                    "submodularity violated at {a:#b}, {b:#b}"
                );
            }
        }
    }
    report(4, "master function submodular", start.elapsed(), Duration::from_secs(120));
}

#[test]
fn criterion_05_membership_equals_realizability() {
    let start = Instant::now();
    let mut rng = seeded(5);
    for round in 0..200 {
        let s = rng.gen_range(1..=4usize);
        let t = rng.gen_range(1..=4usize);
        let p = random_demand(&mut rng, s, t);
        let (m_s, m_t) = random_balanced_pair(&mut rng, s, t, 4);
        let spec = DegreeSpec::new(m_s.clone(), m_t.clone()).unwrap();
        let master = MasterFunction::new(s, &p).unwrap();
        let member = master.member_in_b0(&m_s, &m_t).unwrap().is_feasible();
        let constructed = realize::construct_cover_full(&spec, &p).unwrap().is_feasible();
        assert_eq!(member, constructed, "round {round}");
    }
    report(5, "membership equals realizability", start.elapsed(), Duration::from_secs(120));
}

fn random_digraph(rng: &mut StdRng, n: usize, max_arcs: usize) -> Digraph {
    let arc_count = rng.gen_range(0..=max_arcs);
    let arcs = (0..arc_count)
        .map(|_| loop {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                return (u, v);
            }
        })
        .collect();
    Digraph::loopless(n, arcs).unwrap()
}

#[test]
fn criterion_06_size_packing_biconditional() {
    let start = Instant::now();
    let mut rng = seeded(6);
    let run = |n: usize, max_arcs: usize, max_k: usize, rounds: usize, rng: &mut StdRng| {
        for round in 0..rounds {
            let d = random_digraph(rng, n, max_arcs);
            let k = rng.gen_range(1..=max_k);
            let sizes: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=(n as i64 - 1))).collect();
            let req = PackingRequest::sizes(d.clone(), sizes.clone());
            let packed = branchings::pack_sizes(&req).unwrap();
            let oracle_found = oracle::oracle_pack_branchings(&req, &budget())
                .unwrap()
                .is_some();
            match packed {
                gsynth_core::Outcome::Feasible(packing) => {
                    assert!(oracle_found, "n={n} round {round}: packer found, oracle did not");
                    let roots: Vec<u64> = packing.iter().map(|b| b.root_set()).collect();
                    branchings::verify_packing(&d, &roots, &packing).unwrap();
                    for (j, b) in packing.iter().enumerate() {
                        assert_eq!(b.size() as i64, sizes[j]);
                    }
                }
                gsynth_core::Outcome::Infeasible(_) => {
                    assert!(!oracle_found, "n={n} round {round}: oracle found, packer did not");
                }
            }
        }
    };
    run(4, 6, 2, 2000, &mut rng);
    run(5, 8, 3, 200, &mut rng);
    report(6, "size packing biconditional", start.elapsed(), Duration::from_secs(600));
}

#[test]
fn criterion_07_indegree_packing_biconditional() {
    let start = Instant::now();
    let mut rng = seeded(7);
    let mut rounds = 0;
    while rounds < 200 {
        let n = rng.gen_range(3..=4usize);
        let d = random_digraph(&mut rng, n, 6);
        let k = rng.gen_range(1..=2usize);
        let rho = d.in_degrees();
        let m_in: Vec<i64> = (0..n)
            .map(|v| rng.gen_range(0..=rho[v].min(k as i64)))
            .collect();
        let total: i64 = m_in.iter().sum();
        // Split the total into k sizes within 1..=n-1.
        if total < k as i64 || total > (k * (n - 1)) as i64 {
            continue;
        }
        let mut sizes = vec![1i64; k];
        let mut left = total - k as i64;
        for j in 0..k {
            let add = rng.gen_range(0..=left.min(n as i64 - 2));
            sizes[j] += add;
            left -= add;
        }
        if left != 0 {
            continue;
        }
        rounds += 1;
        let req = PackingRequest::sizes_indeg(d.clone(), sizes.clone(), m_in.clone());
        let packed = branchings::pack_sizes_indeg(&req).unwrap();
        let oracle_found = oracle::oracle_pack_branchings(&req, &budget())
            .unwrap()
            .is_some();
        match packed {
            gsynth_core::Outcome::Feasible(packing) => {
                assert!(oracle_found);
                let mut indeg = vec![0i64; n];
                for b in &packing {
                    for &(_, v) in b.arcs() {
                        indeg[v] += 1;
                    }
                }
                assert_eq!(indeg, m_in, "union indegrees must match exactly");
                let roots: Vec<u64> = packing.iter().map(|b| b.root_set()).collect();
                branchings::verify_packing(&d, &roots, &packing).unwrap();
            }
            gsynth_core::Outcome::Infeasible(_) => assert!(!oracle_found),
        }
    }
    report(7, "indegree packing biconditional", start.elapsed(), Duration::from_secs(300));
}

#[test]
fn criterion_08_term_rank_formula() {
    let start = Instant::now();
    for s in 1..=3usize {
        for t in 1..=3usize {
            let combos_s = (4i64).pow(s as u32);
            let combos_t = (4i64).pow(t as u32);
            for cs in 0..combos_s {
                let m_s: Vec<i64> = (0..s).map(|i| (cs / 4i64.pow(i as u32)) % 4).collect();
                if m_s.iter().any(|&v| v > t as i64) {
                    continue;
                }
                for ct in 0..combos_t {
                    let m_t: Vec<i64> = (0..t).map(|i| (ct / 4i64.pow(i as u32)) % 4).collect();
                    if m_t.iter().any(|&v| v > s as i64) {
                        continue;
                    }
                    if m_s.iter().sum::<i64>() != m_t.iter().sum::<i64>() {
                        continue;
                    }
                    let spec = DegreeSpec::new(m_s.clone(), m_t.clone()).unwrap();
                    let best_ell = (0..=s.min(t) as i64)
                        .rev()
                        .find(|&ell| {
                            termrank::check_termrank(&spec, ell).unwrap().is_feasible()
                        });
                    let oracle_best = oracle::oracle_max_term_rank(&m_s, &m_t, &budget()).unwrap();
                    assert_eq!(best_ell, oracle_best, "spec {m_s:?} {m_t:?}");
                    // Sorted-prefix check equals the raw full sweep.
                    for ell in 0..=s.min(t) as i64 {
                        let fast = termrank::check_termrank(&spec, ell).unwrap().is_feasible();
                        let raw = oracle::oracle_condition(&RawCondition::TermRank {
                            m_s: &m_s,
                            m_t: &m_t,
                            ell,
                        })
                        .unwrap();
                        assert_eq!(fast, raw.gap <= 0, "prefix vs full sweep");
                    }
                }
            }
        }
    }
    // Bound-form conditions: prefix evaluation equals the raw sweep.
    let mut rng = seeded(8);
    for _ in 0..120 {
        let s = rng.gen_range(1..=3usize);
        let t = rng.gen_range(1..=3usize);
        let f_s: Vec<i64> = (0..s).map(|_| rng.gen_range(0..=2)).collect();
        let g_s: Vec<i64> = f_s.iter().map(|&f| rng.gen_range(f..=3)).collect();
        let f_t: Vec<i64> = (0..t).map(|_| rng.gen_range(0..=2)).collect();
        let g_t: Vec<i64> = f_t.iter().map(|&f| rng.gen_range(f..=3)).collect();
        let alpha = rng.gen_range(0..=3);
        let beta = rng.gen_range(alpha..=(s * t) as i64 + 2);
        let b = DegreeBounds::unbounded(s, t)
            .with_f_s(f_s)
            .with_g_s(g_s)
            .with_f_t(f_t)
            .with_g_t(g_t)
            .with_edge_interval(Ext::Fin(alpha), Ext::Fin(beta));
        let ell = rng.gen_range(0..=s.min(t) as i64);
        let fast = termrank::check_termrank_bounds(&b, ell).unwrap().is_feasible();
        let raw_ok = [
            RawCondition::TermRankFtgs { b: &b, ell },
            RawCondition::TermRankFsgt { b: &b, ell },
            RawCondition::TermRankGalfa { b: &b, ell },
            RawCondition::TermRankFbeta { b: &b, ell },
        ]
        .iter()
        .all(|c| oracle::oracle_condition(c).unwrap().gap <= 0);
        assert_eq!(fast, raw_ok);
    }
    report(8, "term rank formula", start.elapsed(), Duration::from_secs(180));
}

#[test]
fn criterion_09_constrained_term_rank() {
    let start = Instant::now();
    let mut rng = seeded(9);
    for round in 0..200 {
        let s = rng.gen_range(1..=4usize);
        let t = rng.gen_range(1..=4usize);
        let f_s: Vec<i64> = (0..s).map(|_| rng.gen_range(0..=2)).collect();
        let g_s: Vec<i64> = f_s.iter().map(|&f| rng.gen_range(f..=3)).collect();
        let f_t: Vec<i64> = (0..t).map(|_| rng.gen_range(0..=2)).collect();
        let g_t: Vec<i64> = f_t.iter().map(|&f| rng.gen_range(f..=3)).collect();
        let alpha = rng.gen_range(0..=(s * t) as i64);
        let beta = rng.gen_range(alpha..=(s * t) as i64);
        let ell = rng.gen_range(0..=s.min(t) as i64);
        let b = DegreeBounds::unbounded(s, t)
            .with_f_s(f_s.clone())
            .with_g_s(g_s.clone())
            .with_f_t(f_t.clone())
            .with_g_t(g_t.clone())
            .with_edge_interval(Ext::Fin(alpha), Ext::Fin(beta));
        let accepted = termrank::check_termrank_bounds(&b, ell).unwrap().is_feasible();
        let g_s_capped: Vec<i64> = g_s.iter().map(|&g| g.min(t as i64)).collect();
        let g_t_capped: Vec<i64> = g_t.iter().map(|&g| g.min(s as i64)).collect();
        let req = DegreeRequirement::Box {
            f_s: &f_s,
            g_s: &g_s_capped,
            f_t: &f_t,
            g_t: &g_t_capped,
            alpha,
            beta,
        };
        let found = oracle::oracle_bigraphs(&req, &GraphPredicate::MatchingAtLeast(ell), &budget())
            .unwrap()
            .is_some();
        assert_eq!(accepted, found, "round {round}: checker vs oracle");
        if accepted {
            let g = termrank::construct_termrank_bounds(&b, ell)
                .unwrap()
                .feasible()
                .expect("checker accepted, construction must succeed");
            let (ds, dt) = g.degrees();
            for i in 0..s {
                assert!(ds[i] >= f_s[i] && ds[i] <= g_s[i]);
            }
            for j in 0..t {
                assert!(dt[j] >= f_t[j] && dt[j] <= g_t[j]);
            }
            let e = g.edge_count() as i64;
            assert!(e >= alpha && e <= beta);
            assert!(g.max_matching().1 as i64 >= ell);
        }
    }
    report(9, "constrained term rank", start.elapsed(), Duration::from_secs(300));
}

#[test]
fn criterion_10_lifting_scales() {
    let start = Instant::now();
    let mut rng = seeded(10);
    for _ in 0..3 {
        let n = 200usize;
        let f: Vec<i64> = (0..2 * n).map(|_| rng.gen_range(0..=2)).collect();
        let g: Vec<i64> = f.iter().map(|&fv| fv + rng.gen_range(0..=3)).collect();
        let ell = rng.gen_range(0..=100i64);
        let b = DegreeBounds::unbounded(n, n)
            .with_f_s(f[..n].to_vec())
            .with_g_s(g[..n].to_vec())
            .with_f_t(f[n..].to_vec())
            .with_g_t(g[n..].to_vec())
            .with_edge_interval(Ext::Fin(0), Ext::PosInf);
        let t0 = Instant::now();
        let out = termrank::lift_bounds(&b, ell).unwrap();
        let one = t0.elapsed();
        assert!(one < Duration::from_secs(5), "one lifting took {one:?}");
        let spec = out.feasible().expect("loose instance must be feasible");
        assert!(termrank::check_termrank(&spec, ell).unwrap().is_feasible());
        for i in 0..n {
            assert!(spec.m_s()[i] >= f[i] && spec.m_s()[i] <= g[i]);
            let mt = spec.m_t().unwrap()[i];
            assert!(mt >= f[n + i] && mt <= g[n + i]);
        }
    }
    report(10, "lifting at scale", start.elapsed(), Duration::from_secs(15));
}

#[test]
fn criterion_11_forests_and_wooded() {
    let start = Instant::now();
    let mut rng = seeded(11);
    // Degree-2 forest check against exhaustive trimming.
    for round in 0..500 {
        let s = rng.gen_range(1..=4usize);
        let t = rng.gen_range(1..=3usize);
        let mut edges = Vec::new();
        for i in 0..s {
            for j in 0..t {
                if rng.gen_bool(0.55) {
                    edges.push((i, j));
                }
            }
        }
        edges.truncate(10);
        let g = Bigraph::simple(s, t, edges).unwrap();
        let m_for = vec![2i64; t];
        let checked = forests::check_t2_forest(&g).unwrap().is_feasible();
        let trimmed = trimming_search(&g, &m_for);
        assert_eq!(checked, trimmed, "round {round}");
        if checked {
            let f = forests::extract_forest(&g, &m_for).unwrap().feasible().unwrap();
            forests::verify_forest(&g, &m_for, &f).unwrap();
        }
    }
    // Fitting-with-forest biconditional against the graph oracle.
    let mut rounds = 0;
    while rounds < 200 {
        let s = rng.gen_range(2..=4usize);
        let t = rng.gen_range(1..=2usize);
        let m_t: Vec<i64> = (0..t).map(|_| rng.gen_range(2..=(s as i64).min(4))).collect();
        let total: i64 = m_t.iter().sum();
        let mut m_s = vec![0i64; s];
        let mut left = total;
        for item in m_s.iter_mut() {
            let take = rng.gen_range(0..=left.min(t as i64));
            *item = take;
            left -= take;
        }
        if left != 0 {
            continue;
        }
        rounds += 1;
        let spec = DegreeSpec::new(m_s.clone(), m_t.clone()).unwrap();
        let m_for = vec![2i64; t];
        let out = forests::realize_with_forest(&spec, &m_for).unwrap();
        let req = DegreeRequirement::Exact {
            m_s: &m_s,
            m_t: &m_t,
        };
        let found =
            oracle::oracle_bigraphs(&req, &GraphPredicate::HasDegreeForest(&m_for), &budget())
                .unwrap()
                .is_some();
        match out {
            gsynth_core::Outcome::Feasible((g, forest)) => {
                assert!(found, "constructed but oracle finds nothing");
                forests::verify_forest(&g, &m_for, &forest).unwrap();
                let (ds, dt) = g.degrees();
                assert_eq!(ds, m_s);
                assert_eq!(dt, m_t);
            }
            gsynth_core::Outcome::Infeasible(cert) => {
                assert!(!found, "oracle found a graph but the checker refused");
                assert!(cert.lhs > cert.rhs);
            }
        }
    }
    // Uniform wooded hypergraphs against the multiset brute force.
    let mut rounds = 0;
    while rounds < 200 {
        let s = rng.gen_range(1..=5usize);
        let ell = rng.gen_range(2..=3i64);
        let m_s: Vec<i64> = (0..s).map(|_| rng.gen_range(0..=3)).collect();
        if m_s.iter().sum::<i64>() > 8 {
            continue;
        }
        rounds += 1;
        let fast = forests::realize_wooded_uniform(&m_s, ell).unwrap();
        let brute = oracle::oracle_wooded_uniform(&m_s, ell, &budget()).unwrap();
        match fast {
            gsynth_core::Outcome::Feasible((h, pairs)) => {
                assert!(brute, "m_s {m_s:?} ell {ell}");
                assert_eq!(h.degrees(), m_s);
                assert_eq!(pairs.len(), h.hyperedges().len());
            }
            gsynth_core::Outcome::Infeasible(_) => assert!(!brute, "m_s {m_s:?} ell {ell}"),
        }
    }
    report(11, "forests and wooded hypergraphs", start.elapsed(), Duration::from_secs(300));
}

fn trimming_search(g: &Bigraph, m_for: &[i64]) -> bool {
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    fn go(g: &Bigraph, m_for: &[i64], t: usize, parent: &mut Vec<usize>) -> bool {
        if t == g.t_size() {
            return true;
        }
        let nbrs: Vec<usize> = g
            .edges()
            .iter()
            .filter(|&&(_, tt)| tt == t)
            .map(|&(s, _)| s)
            .collect();
        fn choose(
            g: &Bigraph,
            m_for: &[i64],
            t: usize,
            nbrs: &[usize],
            from: usize,
            need: usize,
            parent: &mut Vec<usize>,
        ) -> bool {
            if need == 0 {
                return go(g, m_for, t + 1, parent);
            }
            for i in from..nbrs.len() {
                let saved = parent.clone();
                let a = find(parent, nbrs[i]);
                let b = find(parent, g.s_size() + t);
                if a != b {
                    parent[a] = b;
                    if choose(g, m_for, t, nbrs, i + 1, need - 1, parent) {
                        return true;
                    }
                }
                *parent = saved;
            }
            false
        }
        choose(g, m_for, t, &nbrs, 0, m_for[t] as usize, parent)
    }
    go(g, m_for, 0, &mut (0..g.s_size() + g.t_size()).collect())
}

#[test]
fn criterion_12_fast_path_equivalence() {
    let start = Instant::now();
    let mut rng = seeded(12);
    for round in 0..200 {
        let s = rng.gen_range(1..=4usize);
        let t = rng.gen_range(1..=4usize);
        let ell = rng.gen_range(0..=t as i64);
        let p = SetFunctionOnT::term_rank(t, ell).unwrap();
        if p.table().unwrap().iter().any(|&v| v > s as i64) {
            continue;
        }
        let (m_s, m_t) = random_balanced_pair(&mut rng, s, t, 4);
        let spec = DegreeSpec::new(m_s, m_t).unwrap();
        let full = realize::check_cover_full_mode(&spec, &p, PartsMode::Unrestricted)
            .unwrap()
            .is_feasible();
        let single = realize::check_cover_full_mode(&spec, &p, PartsMode::AtMostOne)
            .unwrap()
            .is_feasible();
        let whole = realize::check_cover_full_mode(&spec, &p, PartsMode::EmptyOrWhole)
            .unwrap()
            .is_feasible();
        assert_eq!(full, single, "round {round}: single-part fast path diverges");
        assert_eq!(full, whole, "round {round}: whole-set fast path diverges");

        let f_s: Vec<i64> = (0..s).map(|_| rng.gen_range(0..=2)).collect();
        let g_s: Vec<i64> = f_s.iter().map(|&f| rng.gen_range(f..=3)).collect();
        let f_t: Vec<i64> = (0..t).map(|_| rng.gen_range(0..=2)).collect();
        let g_t: Vec<i64> = f_t.iter().map(|&f| rng.gen_range(f..=3)).collect();
        let b = DegreeBounds::unbounded(s, t)
            .with_f_s(f_s)
            .with_g_s(g_s)
            .with_f_t(f_t)
            .with_g_t(g_t);
        let full = realize::check_bounds_mode(&b, &p, PartsMode::Unrestricted)
            .unwrap()
            .is_feasible();
        let single = realize::check_bounds_mode(&b, &p, PartsMode::AtMostOne)
            .unwrap()
            .is_feasible();
        let whole = realize::check_bounds_mode(&b, &p, PartsMode::EmptyOrWhole)
            .unwrap()
            .is_feasible();
        assert_eq!(full, single, "round {round}: bounds single-part fast path diverges");
        assert_eq!(full, whole, "round {round}: bounds whole-set fast path diverges");
    }
    report(12, "fast-path equivalence", start.elapsed(), Duration::from_secs(120));
}
