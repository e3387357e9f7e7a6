//! Seeded desk-scale property suites: compact versions of the library's
//! oracle-backed biconditionals, runnable in the field. Any failure is a
//! library defect (exit 3), never an input problem.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

use gsynth_core::bits;
use gsynth_core::branchings::{self, PackingRequest};
use gsynth_core::graph::Digraph;
use gsynth_core::oracle::{self, DegreeRequirement, GraphPredicate, OracleBudget};
use gsynth_core::realize::{self, DegreeSpec, PartsMode};
use gsynth_core::setfn::{MasterFunction, SetFunctionOnT};
use gsynth_core::termrank;
use gsynth_core::Outcome;

use crate::{error_run, feasible, Run};

type Suite = fn(&mut StdRng) -> Result<usize, String>;

pub fn run(seed: u64) -> Run {
    let suites: &[(&str, Suite)] = &[
        ("degree_fitting", fitting_suite),
        ("covering", covering_suite),
        ("master_function", master_suite),
        ("membership", membership_suite),
        ("term_rank", term_rank_suite),
        ("branching_sizes", packing_suite),
        ("forests", forest_suite),
        ("wooded", wooded_suite),
        ("fast_paths", fast_path_suite),
    ];
    let mut report = Vec::new();
    for (i, (name, suite)) in suites.iter().enumerate() {
        let mut rng = StdRng::seed_from_u64(seed.wrapping_add(i as u64));
        match suite(&mut rng) {
            Ok(cases) => report.push(json!({"suite": name, "cases": cases, "ok": true})),
            Err(msg) => {
                return error_run("defect", 3, format!("suite {name} failed: {msg}"));
            }
        }
    }
    feasible(json!({"seed": seed, "suites": report}))
}

fn budget() -> OracleBudget {
    OracleBudget::default()
}

fn balanced_pair(rng: &mut StdRng, s: usize, t: usize, max: i64) -> (Vec<i64>, Vec<i64>) {
    loop {
        let m_s: Vec<i64> = (0..s).map(|_| rng.gen_range(0..=max.min(t as i64))).collect();
        let m_t: Vec<i64> = (0..t).map(|_| rng.gen_range(0..=max.min(s as i64))).collect();
        if m_s.iter().sum::<i64>() == m_t.iter().sum::<i64>() {
            return (m_s, m_t);
        }
    }
}

fn random_demand(rng: &mut StdRng, s: usize, t: usize) -> SetFunctionOnT {
    loop {
        let p = match rng.gen_range(0..4) {
            0 => SetFunctionOnT::explicit(t, vec![0; 1 << t]).unwrap(),
            1 => SetFunctionOnT::term_rank(t, rng.gen_range(0..=t as i64)).unwrap(),
            2 => {
                let m_for: Vec<i64> = (0..t).map(|_| rng.gen_range(0..=2)).collect();
                SetFunctionOnT::forest(m_for).unwrap()
            }
            _ => {
                let arcs = (0..rng.gen_range(0..=6))
                    .map(|_| (rng.gen_range(0..t), rng.gen_range(0..t)))
                    .collect();
                let d = Digraph::new(t, arcs).unwrap();
                let k = rng.gen_range(0..=s as i64);
                let base = SetFunctionOnT::branching_indeg(d, k, None).unwrap();
                let table = base.table().unwrap().iter().map(|&v| v.max(0)).collect();
                SetFunctionOnT::explicit(t, table).unwrap()
            }
        };
        if p.table().unwrap().iter().all(|&v| v <= s as i64) {
            return p;
        }
    }
}

fn fitting_suite(rng: &mut StdRng) -> Result<usize, String> {
    let mut cases = 0;
    for _ in 0..80 {
        let s = rng.gen_range(1..=3);
        let t = rng.gen_range(1..=3);
        let (m_s, m_t) = balanced_pair(rng, s, t, 3);
        let spec = DegreeSpec::new(m_s.clone(), m_t.clone()).map_err(|e| e.to_string())?;
        let fast = realize::check_gale_ryser(&spec)
            .map_err(|e| e.to_string())?
            .is_feasible();
        let req = DegreeRequirement::Exact {
            m_s: &m_s,
            m_t: &m_t,
        };
        let found = oracle::oracle_bigraphs(&req, &GraphPredicate::Any, &budget())
            .map_err(|e| e.to_string())?
            .is_some();
        if fast != found {
            return Err(format!("disagreement on {m_s:?} / {m_t:?}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn covering_suite(rng: &mut StdRng) -> Result<usize, String> {
    let mut cases = 0;
    for _ in 0..40 {
        let s = rng.gen_range(1..=3);
        let t = rng.gen_range(1..=3);
        let p = random_demand(rng, s, t);
        let m_s: Vec<i64> = (0..s).map(|_| rng.gen_range(0..=t as i64)).collect();
        let a = realize::check_cover_s(&m_s, &p)
            .map_err(|e| e.to_string())?
            .is_feasible();
        let b = realize::check_cover_s_mixed(&m_s, &p)
            .map_err(|e| e.to_string())?
            .is_feasible();
        if a != b {
            return Err("the two condition forms disagree".into());
        }
        let f_t = vec![0i64; t];
        let g_t = vec![s as i64; t];
        let req = DegreeRequirement::Box {
            f_s: &m_s,
            g_s: &m_s,
            f_t: &f_t,
            g_t: &g_t,
            alpha: 0,
            beta: (s * t) as i64,
        };
        let found = oracle::oracle_bigraphs(&req, &GraphPredicate::Covers(&p), &budget())
            .map_err(|e| e.to_string())?
            .is_some();
        if a != found {
            return Err(format!("checker vs oracle on m_s {m_s:?}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn master_suite(rng: &mut StdRng) -> Result<usize, String> {
    let mut cases = 0;
    for _ in 0..10 {
        let s = rng.gen_range(1..=3);
        let t = rng.gen_range(1..=3);
        let p = random_demand(rng, s, t);
        let master = MasterFunction::new(s, &p).map_err(|e| e.to_string())?;
        let v = bits::full_mask(s + t);
        let b0: Vec<i64> = (0..=v)
            .map(|u| master.eval_b0(u))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        if b0[0] != 0 || b0[v as usize] != 0 {
            return Err("master function endpoints are not zero".into());
        }
        for a in 0..=v {
            for b in 0..=v {
                if b0[a as usize] + b0[b as usize]
                    < b0[(a & b) as usize] + b0[(a | b) as usize]
                {
                    return Err("submodularity violated".into());
                }
            }
        }
        cases += 1;
    }
    Ok(cases)
}

fn membership_suite(rng: &mut StdRng) -> Result<usize, String> {
    let mut cases = 0;
    for _ in 0..30 {
        let s = rng.gen_range(1..=3);
        let t = rng.gen_range(1..=3);
        let p = random_demand(rng, s, t);
        let (m_s, m_t) = balanced_pair(rng, s, t, 3);
        let spec = DegreeSpec::new(m_s.clone(), m_t.clone()).map_err(|e| e.to_string())?;
        let master = MasterFunction::new(s, &p).map_err(|e| e.to_string())?;
        let member = master
            .member_in_b0(&m_s, &m_t)
            .map_err(|e| e.to_string())?
            .is_feasible();
        let constructed = realize::construct_cover_full(&spec, &p)
            .map_err(|e| e.to_string())?
            .is_feasible();
        if member != constructed {
            return Err(format!("membership vs construction on {m_s:?} / {m_t:?}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn term_rank_suite(rng: &mut StdRng) -> Result<usize, String> {
    let mut cases = 0;
    for _ in 0..30 {
        let s = rng.gen_range(1..=3);
        let t = rng.gen_range(1..=3);
        let (m_s, m_t) = balanced_pair(rng, s, t, 3);
        let spec = DegreeSpec::new(m_s.clone(), m_t.clone()).map_err(|e| e.to_string())?;
        let best = (0..=s.min(t) as i64).rev().find(|&ell| {
            termrank::check_termrank(&spec, ell)
                .map(|v| v.is_feasible())
                .unwrap_or(false)
        });
        let reference =
            oracle::oracle_max_term_rank(&m_s, &m_t, &budget()).map_err(|e| e.to_string())?;
        if best != reference {
            return Err(format!("term rank mismatch on {m_s:?} / {m_t:?}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn packing_suite(rng: &mut StdRng) -> Result<usize, String> {
    let mut cases = 0;
    for _ in 0..80 {
        let n = rng.gen_range(2..=4);
        let arcs: Vec<(usize, usize)> = (0..rng.gen_range(0..=5))
            .map(|_| loop {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u != v {
                    return (u, v);
                }
            })
            .collect();
        let d = Digraph::loopless(n, arcs).map_err(|e| e.to_string())?;
        let k = rng.gen_range(1..=2);
        let sizes: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=(n as i64 - 1))).collect();
        let req = PackingRequest::sizes(d.clone(), sizes);
        let packed = branchings::pack_sizes(&req).map_err(|e| e.to_string())?;
        let reference = oracle::oracle_pack_branchings(&req, &budget())
            .map_err(|e| e.to_string())?
            .is_some();
        match packed {
            Outcome::Feasible(packing) => {
                if !reference {
                    return Err("packer found a packing the oracle missed".into());
                }
                let roots: Vec<u64> = packing.iter().map(|b| b.root_set()).collect();
                branchings::verify_packing(&d, &roots, &packing).map_err(|e| e.to_string())?;
            }
            Outcome::Infeasible(_) => {
                if reference {
                    return Err("oracle found a packing the packer missed".into());
                }
            }
        }
        cases += 1;
    }
    Ok(cases)
}

fn forest_suite(rng: &mut StdRng) -> Result<usize, String> {
    let mut cases = 0;
    while cases < 40 {
        let s = rng.gen_range(2..=4usize);
        let t = rng.gen_range(1..=2usize);
        let m_t: Vec<i64> = (0..t).map(|_| rng.gen_range(2..=(s as i64).min(3))).collect();
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
        let spec = DegreeSpec::new(m_s.clone(), m_t.clone()).map_err(|e| e.to_string())?;
        let m_for = vec![2i64; t];
        let fast = forests_feasible(&spec, &m_for)?;
        let req = DegreeRequirement::Exact {
            m_s: &m_s,
            m_t: &m_t,
        };
        let found =
            oracle::oracle_bigraphs(&req, &GraphPredicate::HasDegreeForest(&m_for), &budget())
                .map_err(|e| e.to_string())?
                .is_some();
        if fast != found {
            return Err(format!("forest realization mismatch on {m_s:?} / {m_t:?}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn forests_feasible(spec: &DegreeSpec, m_for: &[i64]) -> Result<bool, String> {
    match gsynth_core::forests::realize_with_forest(spec, m_for).map_err(|e| e.to_string())? {
        Outcome::Feasible((g, forest)) => {
            gsynth_core::forests::verify_forest(&g, m_for, &forest).map_err(|e| e.to_string())?;
            Ok(true)
        }
        Outcome::Infeasible(_) => Ok(false),
    }
}

fn wooded_suite(rng: &mut StdRng) -> Result<usize, String> {
    let mut cases = 0;
    while cases < 40 {
        let s = rng.gen_range(1..=5usize);
        let ell = rng.gen_range(2..=3i64);
        let m_s: Vec<i64> = (0..s).map(|_| rng.gen_range(0..=3)).collect();
        if m_s.iter().sum::<i64>() > 8 {
            continue;
        }
        let fast = gsynth_core::forests::realize_wooded_uniform(&m_s, ell)
            .map_err(|e| e.to_string())?
            .is_feasible();
        let brute =
            oracle::oracle_wooded_uniform(&m_s, ell, &budget()).map_err(|e| e.to_string())?;
        if fast != brute {
            return Err(format!("wooded mismatch on {m_s:?}, ell={ell}"));
        }
        cases += 1;
    }
    Ok(cases)
}

fn fast_path_suite(rng: &mut StdRng) -> Result<usize, String> {
    let mut cases = 0;
    while cases < 40 {
        let s = rng.gen_range(1..=3usize);
        let t = rng.gen_range(1..=3usize);
        let ell = rng.gen_range(0..=t as i64);
        let p = SetFunctionOnT::term_rank(t, ell).unwrap();
        if p.table().unwrap().iter().any(|&v| v > s as i64) {
            continue;
        }
        let (m_s, m_t) = balanced_pair(rng, s, t, 3);
        let spec = DegreeSpec::new(m_s, m_t).map_err(|e| e.to_string())?;
        let modes = [
            PartsMode::Unrestricted,
            PartsMode::AtMostOne,
            PartsMode::EmptyOrWhole,
        ];
        let verdicts: Vec<bool> = modes
            .iter()
            .map(|&m| {
                realize::check_cover_full_mode(&spec, &p, m)
                    .map(|v| v.is_feasible())
                    .map_err(|e| e.to_string())
            })
            .collect::<Result<_, _>>()?;
        if verdicts[0] != verdicts[1] || verdicts[0] != verdicts[2] {
            return Err("fast paths disagree".into());
        }
        cases += 1;
    }
    Ok(cases)
}
