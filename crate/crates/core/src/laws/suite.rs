//! Seeded suites of checks over a pool of objects.
//!
//! A run first draws, trial by trial, the objects and morphisms each check
//! needs (sequentially, so the draws depend only on the seed), then
//! evaluates the checks. Checks that depend only on objects are evaluated
//! once per object tuple.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraMorphism, QuadraticPresentation};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg::{Field, Matrix};
use crate::sampling::{random_matrix, sample_endomorphism, sample_morphism};

use super::axioms::*;
use super::braiding::{check_braiding, check_bullet_to_circle};
use super::check::DiagramCheck;
use super::duality::*;
use super::hom::check_hom_algebra;
use super::rigid::{check_rigid_products, measure_trace_product, rank_check, trace_check};

type Q = QuadraticPresentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Axioms,
    Duality,
    Braiding,
    HomAlgebra,
    Rigid,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Axioms,
        Suite::Duality,
        Suite::Braiding,
        Suite::HomAlgebra,
        Suite::Rigid,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Duality => "duality",
            Suite::Braiding => "braiding",
            Suite::HomAlgebra => "hom-algebra",
            Suite::Rigid => "rigid",
            Suite::All => "all",
        }
    }

    fn covers(self, part: Suite) -> bool {
        self == Suite::All || self == part
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub trials: usize,
    pub seed: u64,
    pub exec: Exec,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            trials: 100,
            seed: 0,
            exec: Exec::default(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    /// Sorted by name, then object labels, then trial.
    pub checks: Vec<DiagramCheck>,
    /// Measurements that are reported but never fail the run.
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &DiagramCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Largest generator count used for checks on three or four objects.
pub const SMALL_N: usize = 2;
/// Largest generator count for checks on one or two objects.
pub const MEDIUM_N: usize = 3;

#[derive(Debug, Clone)]
enum Job {
    MixedBlack([usize; 4]),
    MixedWhite([usize; 4]),
    Zigzags(usize),
    Naturality(Box<[AlgebraMorphism; 3]>),
    Roundtrip { u: AlgebraMorphism, u_obj: usize, l: usize },
    RoundtripRev { v: AlgebraMorphism, l: usize, n: usize },
    Antimultiplicative(usize, usize),
    DoubleDual(usize),
    UnitDuality,
    Contragredient(AlgebraMorphism),
    Hexagon([usize; 3]),
    BulletToCircle(usize, usize),
    HomAlgebra(usize),
    Trace(AlgebraMorphism),
    Rank(usize),
    RigidProducts(usize, usize),
}

struct Planned {
    trial: Option<usize>,
    job: Job,
}

struct Pools {
    objects: Vec<Q>,
    small: Vec<usize>,
    medium: Vec<usize>,
    rigid: Vec<usize>,
}

impl Pools {
    fn new(pool: &[Q]) -> Result<Self> {
        let field = pool.first().map(Q::field).unwrap_or(Field::Rationals);
        for q in pool {
            field.check_same(q.field())?;
        }
        let mut objects: Vec<Q> = pool.to_vec();
        for d in 1..=MEDIUM_N {
            if !objects.iter().any(|o| o.is_rigid() && o.n() == d) {
                objects.push(Q::embed_vector_space(field, d));
            }
        }
        let within = |limit: usize| -> Vec<usize> {
            let from_pool: Vec<usize> = (0..pool.len()).filter(|&i| objects[i].n() <= limit).collect();
            if from_pool.is_empty() {
                (pool.len()..objects.len()).filter(|&i| objects[i].n() <= limit).collect()
            } else {
                from_pool
            }
        };
        let small = within(SMALL_N);
        let medium = within(MEDIUM_N);
        let rigid = (0..objects.len())
            .filter(|&i| objects[i].is_rigid() && objects[i].n() <= MEDIUM_N)
            .collect();
        Ok(Pools {
            objects,
            small,
            medium,
            rigid,
        })
    }

    fn pick(&self, from: &[usize], rng: &mut ChaCha8Rng) -> usize {
        *from.choose(rng).expect("pools are never empty")
    }

    fn obj(&self, i: usize) -> &Q {
        &self.objects[i]
    }
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (trial as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn plan_trial(suite: Suite, pools: &Pools, trial: usize, seed: u64, out: &mut Vec<Planned>) -> Result<()> {
    let mut rng = trial_rng(seed, trial);
    let rng = &mut rng;
    let at = |job| Planned { trial: Some(trial), job };
    let shared = |job| Planned { trial: None, job };
    if suite.covers(Suite::Axioms) {
        let q: [usize; 4] = std::array::from_fn(|_| pools.pick(&pools.small, rng));
        out.push(shared(Job::MixedBlack(q)));
        out.push(shared(Job::MixedWhite(q)));
        out.push(shared(Job::Zigzags(q[0])));
        let mut maps = Vec::with_capacity(3);
        for &src in &q[..3] {
            let dst = pools.pick(&pools.small, rng);
            maps.push(sample_morphism(pools.obj(src), pools.obj(dst), rng)?.morphism);
        }
        let maps: [AlgebraMorphism; 3] = maps.try_into().expect("three maps");
        out.push(at(Job::Naturality(Box::new(maps))));
        let (u_obj, l, n) = (q[1], q[2], q[3]);
        let u = sample_morphism(&pools.obj(u_obj).black(pools.obj(l))?, pools.obj(n), rng)?.morphism;
        out.push(at(Job::Roundtrip { u, u_obj, l }));
        let target = pools.obj(n).white(&pools.obj(l).dual())?;
        let v = sample_morphism(pools.obj(u_obj), &target, rng)?.morphism;
        out.push(at(Job::RoundtripRev { v, l, n }));
    }
    if suite.covers(Suite::Duality) {
        let (a, b) = (pools.pick(&pools.medium, rng), pools.pick(&pools.medium, rng));
        out.push(shared(Job::Antimultiplicative(a, b)));
        out.push(shared(Job::DoubleDual(a)));
        out.push(shared(Job::UnitDuality));
        let h = (0..8)
            .map(|_| sample_endomorphism(pools.obj(a), rng).morphism)
            .find(|h| h.matrix().inverse().is_some())
            .unwrap_or_else(|| AlgebraMorphism::identity(pools.obj(a)));
        out.push(at(Job::Contragredient(h)));
    }
    if suite.covers(Suite::Braiding) {
        let q: [usize; 3] = std::array::from_fn(|_| pools.pick(&pools.small, rng));
        out.push(shared(Job::Hexagon(q)));
        let (a, b) = (pools.pick(&pools.medium, rng), pools.pick(&pools.medium, rng));
        out.push(shared(Job::BulletToCircle(a, b)));
    }
    if suite.covers(Suite::HomAlgebra) {
        out.push(shared(Job::HomAlgebra(pools.pick(&pools.small, rng))));
    }
    if suite.covers(Suite::Rigid) {
        let r = pools.pick(&pools.rigid, rng);
        let u = pools.obj(r);
        let h = AlgebraMorphism::new(u.clone(), u.clone(), random_matrix(u.field(), u.n(), u.n(), rng))?;
        out.push(at(Job::Trace(h)));
        out.push(shared(Job::Rank(r)));
        out.push(shared(Job::RigidProducts(r, pools.pick(&pools.rigid, rng))));
    }
    Ok(())
}

fn job_key(job: &Job) -> Option<String> {
    match job {
        Job::MixedBlack(q) => Some(format!("mb{q:?}")),
        Job::MixedWhite(q) => Some(format!("mw{q:?}")),
        Job::Zigzags(a) => Some(format!("zz{a}")),
        Job::Antimultiplicative(a, b) => Some(format!("am{a},{b}")),
        Job::DoubleDual(a) => Some(format!("dd{a}")),
        Job::UnitDuality => Some("ud".into()),
        Job::Hexagon(q) => Some(format!("hx{q:?}")),
        Job::BulletToCircle(a, b) => Some(format!("bc{a},{b}")),
        Job::HomAlgebra(a) => Some(format!("ha{a}")),
        Job::Rank(a) => Some(format!("rk{a}")),
        Job::RigidProducts(a, b) => Some(format!("rp{a},{b}")),
        _ => None,
    }
}

fn run_job(job: &Job, pools: &Pools) -> Result<Vec<DiagramCheck>> {
    let o = |i: usize| pools.obj(i);
    Ok(match job {
        Job::MixedBlack([a, b, c, d]) => vec![mixed_associativity_black(o(*a), o(*b), o(*c), o(*d))?],
        Job::MixedWhite([a, b, c, d]) => vec![mixed_associativity_white(o(*a), o(*b), o(*c), o(*d))?],
        Job::Zigzags(a) => vec![zigzag_left(o(*a))?, zigzag_right(o(*a))?],
        Job::Naturality(m) => vec![naturality_h(&m[0], &m[1], &m[2])?, naturality_f(&m[0], &m[1], &m[2])?],
        Job::Roundtrip { u, u_obj, l } => vec![adjunction_roundtrip(u, o(*u_obj), o(*l))?],
        Job::RoundtripRev { v, l, n } => vec![adjunction_roundtrip_rev(v, o(*l), o(*n))?],
        Job::Antimultiplicative(a, b) => vec![check_dual_antimultiplicative(o(*a), o(*b))?],
        Job::DoubleDual(a) => vec![check_double_dual(o(*a))],
        Job::UnitDuality => check_unit_duality(pools.objects[0].field()),
        Job::Contragredient(h) => contragredient_checks(h)?,
        Job::Hexagon([a, b, c]) => vec![check_braiding(o(*a), o(*b), o(*c))?],
        Job::BulletToCircle(a, b) => vec![check_bullet_to_circle(o(*a), o(*b))?],
        Job::HomAlgebra(a) => check_hom_algebra(o(*a))?,
        Job::Trace(h) => vec![trace_check(h)?],
        Job::Rank(a) => vec![rank_check(o(*a))?],
        Job::RigidProducts(a, b) => vec![check_rigid_products(o(*a), o(*b))?],
    })
}

/// Solves for the contragredient of an invertible `h`, checks its two
/// equations, and checks the inverse it forces.
fn contragredient_checks(h: &AlgebraMorphism) -> Result<Vec<DiagramCheck>> {
    let Some(h2) = solve_contragredient(h)? else {
        return Err(Error::NotAMorphism {
            src: h.src().name().to_string(),
            dst: h.dst().name().to_string(),
            reason: "invertible map without a contragredient".into(),
        });
    };
    let eq = contragredient_check(h, &h2)?;
    let report = contragredient_invertibility(h, &h2)?;
    let field = h.field();
    let left = match &report.inverse {
        Some(inv) => inv.matrix().mul(h.matrix())?,
        None => Matrix::zeros(field, h.src().n(), h.src().n()),
    };
    let mut inv = DiagramCheck::compare("contragredient-inverse", eq.objects.clone(), left, Matrix::identity(field, h.src().n()));
    inv.passed &= report.consistent();
    Ok(vec![eq, inv])
}

/// Runs `suite` on `pool` (all objects over one field). Missing rigid
/// objects `embed(1..=3)` are added for the rigid checks.
pub fn run_suite(suite: Suite, pool: &[Q], cfg: &SuiteConfig) -> Result<SuiteReport> {
    let pools = Pools::new(pool)?;
    let mut planned = Vec::new();
    for trial in 0..cfg.trials {
        plan_trial(suite, &pools, trial, cfg.seed, &mut planned)?;
    }
    let mut seen = BTreeSet::new();
    let planned: Vec<Planned> = planned
        .into_iter()
        .filter(|p| job_key(&p.job).is_none_or(|k| seen.insert(k)))
        .collect();

    let trace_maps: Vec<AlgebraMorphism> = planned
        .iter()
        .filter_map(|p| match &p.job {
            Job::Trace(h) => Some(h.clone()),
            _ => None,
        })
        .collect();

    let results = cfg.exec.map(planned, |p| {
        run_job(&p.job, &pools).map(|cs| {
            cs.into_iter()
                .map(|c| match p.trial {
                    Some(t) => c.with_trial(t),
                    None => c,
                })
                .collect::<Vec<_>>()
        })
    });
    let mut checks = Vec::new();
    for r in results {
        checks.extend(r?);
    }
    checks.sort_by(|a, b| {
        (a.name.as_str(), a.objects_label(), a.trial).cmp(&(b.name.as_str(), b.objects_label(), b.trial))
    });

    let mut notes = Vec::new();
    if suite.covers(Suite::Rigid) {
        let pairs: Vec<_> = trace_maps
            .iter()
            .zip(trace_maps.iter().skip(1))
            .filter(|(h, k)| h.src().same_object(k.src()))
            .collect();
        let report = measure_trace_product(pairs)?;
        let mut line = format!("trace-product agreeing {}/{}", report.agreeing, report.pairs);
        if let Some((h, k, lhs, rhs)) = &report.counterexample {
            line.push_str(&format!(
                " counterexample h={} h'={} Trace(hh')={lhs} Trace(h)Trace(h')={rhs}",
                compact(h),
                compact(k)
            ));
        }
        notes.push(line);
    }
    Ok(SuiteReport { checks, notes })
}

fn compact(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}
