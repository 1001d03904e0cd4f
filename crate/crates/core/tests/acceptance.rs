//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always printed.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qcat::algebra::{hilbert, AlgebraMorphism, QuadraticPresentation as Q};
use qcat::corpus;
use qcat::format::{parse, unparse};
use qcat::koszul::{dh_square_is_zero, euler_hilbert_test, ext_diagonal_check, koszul_verdict};
use qcat::laws::{measure_trace_product, rank_of, run_suite, trace, Suite, SuiteConfig};
use qcat::linalg::{Field, Matrix, Scalar, SparseVec, Subspace};
use qcat::sampling::endomorphism_batch;
use qcat::Exec;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gf(p: u64) -> Field {
    Field::gf(p).unwrap()
}

fn corpus_algebras() -> Vec<(&'static str, Q)> {
    corpus::load()
}

fn random_gf5(rng: &mut ChaCha8Rng) -> Q {
    let n = rng.random_range(1..=3usize);
    let c = rng.random_range(0..=n * n);
    Q::random(gf(5), n, c, rng).unwrap()
}

fn duality_involution() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut algebras: Vec<Q> = corpus_algebras().into_iter().map(|(_, a)| a).collect();
    algebras.extend((0..200).map(|_| random_gf5(&mut rng)));
    for a in &algebras {
        let dd = a.dual().dual();
        ensure(unparse(&dd) == unparse(a), || format!("{} is not its double dual", a.name()))?;
        ensure(parse(&unparse(a)).as_ref() == Ok(a), || format!("{} does not round-trip", a.name()))?;
    }
    Ok(format!("{} presentations", algebras.len()))
}

fn manin_dimensions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for k in 0..200 {
        let field = if k % 4 == 0 { Field::Rationals } else { gf(5) };
        let (n1, n2) = (rng.random_range(1..=3usize), rng.random_range(1..=3usize));
        let a = Q::random(field, n1, rng.random_range(0..=n1 * n1), &mut rng).unwrap();
        let b = Q::random(field, n2, rng.random_range(0..=n2 * n2), &mut rng).unwrap();
        let (c1, c2) = (a.relations().dim(), b.relations().dim());
        let black = a.black(&b).unwrap().relations().dim();
        let white = a.white(&b).unwrap().relations().dim();
        ensure(black == c1 * c2, || format!("pair {k}: black {black} vs {}", c1 * c2))?;
        let expected = n1 * n1 * c2 + c1 * n2 * n2 - c1 * c2;
        ensure(white == expected, || format!("pair {k}: white {white} vs {expected}"))?;
    }
    Ok("200 pairs".into())
}

fn unit_laws() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut algebras: Vec<Q> = corpus_algebras().into_iter().map(|(_, a)| a).collect();
    algebras.extend((0..50).map(|_| random_gf5(&mut rng)));
    let mut fields = BTreeSet::new();
    for a in &algebras {
        let f = a.field();
        fields.insert(f);
        let (ib, io) = (Q::unit_black(f), Q::unit_white(f));
        for (p, label) in [(a.black(&ib), "A•I_b"), (ib.black(a), "I_b•A"), (a.white(&io), "A∘I_o"), (io.white(a), "I_o∘A")] {
            let p = p.map_err(|e| e.to_string())?;
            let there = AlgebraMorphism::reshape(&p, a);
            let back = AlgebraMorphism::reshape(a, &p);
            ensure(there.is_ok() && back.is_ok(), || format!("{label} ≇ A for {}", a.name()))?;
        }
    }
    for f in fields {
        let (ib, io) = (Q::unit_black(f), Q::unit_white(f));
        ensure(ib.dual().same_object(&io) && io.dual().same_object(&ib), || format!("unit duality over {f}"))?;
    }
    Ok(format!("{} algebras", algebras.len()))
}

const REQUIRED_DIAGRAMS: [&str; 13] = [
    "mixed-assoc-black",
    "mixed-assoc-white",
    "zigzag-left",
    "zigzag-right",
    "naturality-h",
    "naturality-f",
    "braiding-hexagon",
    "adjunction-roundtrip",
    "adjunction-roundtrip-rev",
    "dual-antimultiplicative",
    "hom-associativity",
    "hom-composition",
    "double-dual",
];

fn pool(field: Field, rng: &mut ChaCha8Rng) -> Vec<Q> {
    vec![
        Q::symmetric(field, 2),
        Q::exterior(field, 2),
        Q::free(field, 2),
        Q::unit_white(field),
        Q::unit_black(field),
        Q::embed_vector_space(field, 2),
        Q::random(field, 2, 1, rng).unwrap(),
        Q::random(field, 2, 2, rng).unwrap(),
        Q::symmetric(field, 3),
    ]
}

fn axiom_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut summary = Vec::new();
    for (field, trials) in [(gf(5), 100), (Field::Rationals, 20)] {
        let objects = pool(field, &mut rng);
        let cfg = SuiteConfig {
            trials,
            seed: 4,
            exec: Exec::Parallel,
        };
        let report = run_suite(Suite::All, &objects, &cfg).map_err(|e| e.to_string())?;
        if let Some(bad) = report.failures().next() {
            return Err(format!("{bad} over {field}"));
        }
        let names: BTreeSet<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
        for required in REQUIRED_DIAGRAMS {
            ensure(names.contains(required), || format!("{required} never ran over {field}"))?;
        }
        let max_trial = report.checks.iter().filter_map(|c| c.trial).max().unwrap_or(0);
        ensure(max_trial + 1 >= trials, || format!("only {} trials over {field}", max_trial + 1))?;
        summary.push(format!("{} checks over {field}", report.checks.len()));
    }
    Ok(summary.join(", "))
}

fn dh_square() -> Outcome {
    let mut total = 0;
    for (name, a) in corpus_algebras() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for s in endomorphism_batch(&a, 50, &mut rng) {
            let r = dh_square_is_zero(&a, s.morphism.matrix()).map_err(|e| e.to_string())?;
            ensure(r.zero, || format!("{name}: (d_h)² ≠ 0 for {:?}", s.family))?;
            total += 1;
        }
    }
    Ok(format!("{total} endomorphisms"))
}

/// `n^m − dim` of the span of all `V^i ⊗ r ⊗ V^(m−2−i)`.
fn oracle_dim(a: &Q, m: usize) -> usize {
    let n = a.n();
    let total = n.pow(m as u32);
    if m < 2 {
        return total;
    }
    let mut spanning: Vec<SparseVec> = Vec::new();
    for r in a.relations().basis_sparse() {
        for i in 0..=m - 2 {
            let (left, right) = (n.pow(i as u32), n.pow((m - 2 - i) as u32));
            for l in 0..left {
                for q in 0..right {
                    spanning.push(r.iter().map(|(w, x)| ((l * n * n + w) * right + q, x.clone())).collect());
                }
            }
        }
    }
    total - Subspace::span(a.field(), total, spanning.iter()).dim()
}

fn koszul_family(field: Field) -> Vec<Q> {
    vec![
        Q::symmetric(field, 2),
        Q::symmetric(field, 3),
        Q::exterior(field, 2),
        Q::exterior(field, 3),
        Q::free(field, 1),
        Q::free(field, 2),
        Q::embed_vector_space(field, 2),
        Q::embed_vector_space(field, 3),
        Q::unit_black(field),
        Q::unit_white(field),
    ]
}

fn koszul_engine() -> Outcome {
    let family = koszul_family(Field::Rationals);
    for a in &family {
        let v = koszul_verdict(a, 6, Exec::Parallel);
        ensure(v.koszul && v.reports.len() == 6, || format!("{} not Koszul up to 6", a.name()))?;
        let h = hilbert(a, 6);
        for (m, &d) in h.iter().enumerate() {
            let o = oracle_dim(a, m);
            ensure(d == o, || format!("{} degree {m}: {d} vs oracle {o}", a.name()))?;
        }
        ensure(euler_hilbert_test(a, 8).iter().all(|&x| x), || format!("{} fails Euler by 8", a.name()))?;
    }
    Ok(format!("{} algebras", family.len()))
}

fn ext_equivalence() -> Outcome {
    let mut agree = 0;
    for (name, a) in corpus_algebras() {
        let ext = ext_diagonal_check(&a, 4, Exec::Parallel);
        let kz = koszul_verdict(&a, 4, Exec::Parallel);
        ensure(ext.holds == kz.koszul, || format!("{name}: ext {} vs koszul {}", ext.holds, kz.koszul))?;
        if ext.holds {
            let d = a.dual();
            for p in 0..=4 {
                let want = qcat::algebra::graded_dim(&d, p);
                let got = ext.table.get(p, p);
                ensure(got == want, || format!("{name}: diagonal {p} is {got}, dual has {want}"))?;
            }
        }
        agree += 1;
    }
    Ok(format!("{agree} corpus algebras agree"))
}

fn negative_control() -> Outcome {
    let find = corpus::search_gf2(6, Exec::Parallel).ok_or("search found nothing")?;
    let a = &find.presentation;
    ensure(find.euler_failure <= 6, || "Euler failure beyond degree 6".into())?;
    ensure(!euler_hilbert_test(a, 6).iter().all(|&x| x), || "Euler test passes".into())?;
    let kz = koszul_verdict(a, 6, Exec::Parallel);
    let ext = ext_diagonal_check(a, 6, Exec::Parallel);
    ensure(!kz.koszul && !ext.holds, || format!("engines: koszul {} ext {}", kz.koszul, ext.holds))?;
    let recorded = corpus::get("nonkoszul_gf2.qa").ok_or("corpus entry missing")?;
    ensure(recorded == *a, || "recorded find differs from the search".into())?;
    let rels = unparse(a).lines().filter(|l| l.starts_with("rel ")).map(|l| &l[4..]).collect::<Vec<_>>().join("; ");
    Ok(format!("{rels}, Euler fails at m={}", find.euler_failure))
}

/// All `d × d` matrices over GF(3), as row-major digit strings.
fn all_matrices(field: Field, d: usize) -> Vec<Matrix> {
    let count = 3usize.pow((d * d) as u32);
    (0..count)
        .map(|mut code| {
            let rows = (0..d)
                .map(|_| {
                    (0..d)
                        .map(|_| {
                            let x = Scalar::from_i64(field, (code % 3) as i64);
                            code /= 3;
                            x
                        })
                        .collect()
                })
                .collect();
            Matrix::from_rows(field, d, rows).unwrap()
        })
        .collect()
}

fn trace_rank() -> Outcome {
    let f = gf(3);
    let mut checked = 0;
    for d in 1..=3 {
        let u = Q::embed_vector_space(f, d);
        let rank = rank_of(&u).map_err(|e| e.to_string())?;
        ensure(rank == Scalar::from_i64(f, d as i64), || format!("rank_of(embed{d}) = {rank}"))?;
        let mats = all_matrices(f, d);
        let bad = Exec::Parallel.find_first(mats, |m| {
            let h = AlgebraMorphism::new(u.clone(), u.clone(), m.clone()).ok()?;
            let t = trace(&h).ok()?;
            (t != m.trace()).then(|| format!("embed{d}: trace {t} vs {}", m.trace()))
        });
        if let Some(msg) = bad {
            return Err(msg);
        }
        checked += 3usize.pow((d * d) as u32);
    }
    let u = Q::embed_vector_space(Field::Rationals, 2);
    let id = AlgebraMorphism::identity(&u);
    let report = measure_trace_product([(&id, &id)]).map_err(|e| e.to_string())?;
    let note = match report.counterexample {
        Some((_, _, lhs, rhs)) => format!("Trace(hh')={lhs} vs Trace(h)Trace(h')={rhs} at h=h'=Id on embed2"),
        None => "no counterexample".into(),
    };
    Ok(format!("{checked} endomorphisms; {note}"))
}

fn cli_determinism() -> Outcome {
    let mismatches = common::check_goldens();
    ensure(mismatches.is_empty(), || format!("golden mismatch: {}", mismatches.join(", ")))?;
    let total = common::golden_invocations().len();
    // a second run and the sequential engine must reproduce the same bytes
    for args in common::golden_invocations().iter().filter(|a| a.iter().any(|x| x == "laws" || x == "ext")) {
        let first = common::render(&common::run_invocation(args, ""));
        let mut seq = vec!["--sequential".to_string()];
        seq.extend(args.iter().cloned());
        let second = common::render(&common::run_invocation(&seq, ""));
        ensure(first == second, || format!("sequential output differs for {}", args.join(" ")))?;
    }
    Ok(format!("{total} invocations"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("duality involution", duality_involution),
        ("Manin dimension formulas", manin_dimensions),
        ("unit laws and unit duality", unit_laws),
        ("axiom suite", axiom_suite),
        ("(d_h)^2 = 0", dh_square),
        ("Koszulity engine", koszul_engine),
        ("bar diagonal vs Koszul complex", ext_equivalence),
        ("GF(2) negative control", negative_control),
        ("trace and rank", trace_rank),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.1}s)", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
