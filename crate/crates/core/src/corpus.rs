//! The bundled example presentations and the GF(2) search that produced
//! the non-Koszul entry.
//!
//! Every `.qa` file under `corpus/` is generated by [`generate`]; a test
//! keeps the files and the generators in sync.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{default_labels, hilbert, QuadraticPresentation};
use crate::exec::Exec;
use crate::format;
use crate::koszul::euler_from_hilbert;
use crate::linalg::{Field, Scalar, SparseVec, Subspace};

pub const GF7_SEED: u64 = 7;
/// `(n, c)` of each member of the seeded GF(7) family.
pub const GF7_SHAPES: [(usize, usize); 4] = [(2, 1), (2, 2), (3, 2), (3, 5)];

/// `(file name, contents)` for every corpus file, in a fixed order.
pub const FILES: &[(&str, &str)] = &[
    ("free1.qa", include_str!("../corpus/free1.qa")),
    ("free2.qa", include_str!("../corpus/free2.qa")),
    ("sym2.qa", include_str!("../corpus/sym2.qa")),
    ("sym3.qa", include_str!("../corpus/sym3.qa")),
    ("ext2.qa", include_str!("../corpus/ext2.qa")),
    ("ext3.qa", include_str!("../corpus/ext3.qa")),
    ("unit_black.qa", include_str!("../corpus/unit_black.qa")),
    ("embed2.qa", include_str!("../corpus/embed2.qa")),
    ("embed3.qa", include_str!("../corpus/embed3.qa")),
    ("gf7_0.qa", include_str!("../corpus/gf7_0.qa")),
    ("gf7_1.qa", include_str!("../corpus/gf7_1.qa")),
    ("gf7_2.qa", include_str!("../corpus/gf7_2.qa")),
    ("gf7_3.qa", include_str!("../corpus/gf7_3.qa")),
    ("nonkoszul_gf2.qa", include_str!("../corpus/nonkoszul_gf2.qa")),
];

/// Expected Koszul status of each corpus file, by name.
pub fn expected_koszul(file: &str) -> Option<bool> {
    match file {
        "nonkoszul_gf2.qa" => Some(false),
        f if f.starts_with("gf7_") => None,
        _ => Some(true),
    }
}

/// Parsed corpus, in [`FILES`] order.
pub fn load() -> Vec<(&'static str, QuadraticPresentation)> {
    FILES
        .iter()
        .map(|(name, text)| (*name, format::parse(text).unwrap_or_else(|e| panic!("corpus/{name}: {e}"))))
        .collect()
}

pub fn get(file: &str) -> Option<QuadraticPresentation> {
    FILES.iter().find(|(name, _)| *name == file).map(|(_, text)| format::parse(text).expect("corpus parses"))
}

pub fn gf7_family() -> Vec<QuadraticPresentation> {
    let f = Field::gf(7).expect("prime");
    let mut rng = ChaCha8Rng::seed_from_u64(GF7_SEED);
    GF7_SHAPES
        .iter()
        .enumerate()
        .map(|(k, &(n, c))| {
            QuadraticPresentation::random(f, n, c, &mut rng)
                .expect("c ≤ n²")
                .with_name(format!("gf7_{k}"))
        })
        .collect()
}

/// The corpus as built from constructors and the search.
pub fn generate() -> Vec<(String, QuadraticPresentation)> {
    let q = Field::Rationals;
    let free1 = QuadraticPresentation::new("free1", vec!["t".into()], Subspace::zero(q, 1)).expect("valid");
    let mut out: Vec<(String, QuadraticPresentation)> = vec![
        ("free1.qa".into(), free1),
        ("free2.qa".into(), QuadraticPresentation::free(q, 2)),
        ("sym2.qa".into(), QuadraticPresentation::symmetric(q, 2)),
        ("sym3.qa".into(), QuadraticPresentation::symmetric(q, 3)),
        ("ext2.qa".into(), QuadraticPresentation::exterior(q, 2)),
        ("ext3.qa".into(), QuadraticPresentation::exterior(q, 3)),
        ("unit_black.qa".into(), QuadraticPresentation::unit_black(q)),
        ("embed2.qa".into(), QuadraticPresentation::embed_vector_space(q, 2)),
        ("embed3.qa".into(), QuadraticPresentation::embed_vector_space(q, 3)),
    ];
    for (k, a) in gf7_family().into_iter().enumerate() {
        out.push((format!("gf7_{k}.qa"), a));
    }
    let find = search_gf2(6, Exec::Parallel).expect("the search finds a candidate");
    out.push(("nonkoszul_gf2.qa".into(), find.presentation));
    out
}

#[derive(Debug, Clone)]
pub struct SearchFind {
    pub presentation: QuadraticPresentation,
    /// Relation spanning set as 9-bit word masks.
    pub masks: Vec<u32>,
    /// First degree at which the Euler–Hilbert identity fails.
    pub euler_failure: usize,
}

fn mask_vector(mask: u32, field: Field) -> SparseVec {
    (0..9).filter(|i| mask >> i & 1 == 1).map(|i| (i, Scalar::one(field))).collect()
}

fn candidate(masks: &[u32]) -> Option<QuadraticPresentation> {
    let f = Field::gf(2).expect("prime");
    let rows: Vec<SparseVec> = masks.iter().map(|&m| mask_vector(m, f)).collect();
    let r = Subspace::span(f, 9, rows.iter());
    // skip spanning sets that are not minimal
    if r.dim() != masks.len() {
        return None;
    }
    QuadraticPresentation::new("nonkoszul_gf2", default_labels(3), r).ok()
}

/// First degree `≤ max` where the Euler–Hilbert identity fails. Degrees
/// are tried in increasing order so that most candidates are cheap.
fn euler_failure(a: &QuadraticPresentation, max: usize) -> Option<usize> {
    let d = a.dual();
    (3..=max).find(|&top| {
        let checks = euler_from_hilbert(&hilbert(a, top), &hilbert(&d, top));
        !checks[top - 1]
    })
}

/// Exhaustive search over GF(2) presentations on three generators, by
/// increasing relation count and then lexicographically by word masks.
/// Returns the first presentation whose Euler–Hilbert identity fails in
/// some degree `≤ max`.
pub fn search_gf2(max: usize, exec: Exec) -> Option<SearchFind> {
    let test = |masks: Vec<u32>| {
        let a = candidate(&masks)?;
        let degree = euler_failure(&a, max)?;
        Some(SearchFind {
            presentation: a,
            masks,
            euler_failure: degree,
        })
    };
    for c in 1..=9usize {
        if c <= 2 {
            let batch = (1..512u32).flat_map(|lead| tails(lead, c - 1)).collect();
            if let Some(found) = exec.find_first(batch, test) {
                return Some(found);
            }
            continue;
        }
        // one batch per leading mask keeps memory bounded
        for lead in 1..512u32 {
            if let Some(found) = exec.find_first(tails(lead, c - 1), test) {
                return Some(found);
            }
        }
    }
    None
}

/// Increasing mask sequences of length `len + 1` starting with `lead`.
fn tails(lead: u32, len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![lead];
    fn go(current: &mut Vec<u32>, len: usize, out: &mut Vec<Vec<u32>>) {
        if len == 0 {
            out.push(current.clone());
            return;
        }
        let last = *current.last().expect("nonempty");
        for next in last + 1..512 {
            current.push(next);
            go(current, len - 1, out);
            current.pop();
        }
    }
    go(&mut current, len, &mut out);
    out
}
