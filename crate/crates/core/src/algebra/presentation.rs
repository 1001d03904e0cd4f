use std::collections::HashSet;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar, SparseVec, Subspace};
use crate::tensor::{kron_vectors, t23, word_count};

/// `T(V)/(R)` with `V` of dimension `n` and `R ⊆ V⊗V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticPresentation {
    name: String,
    labels: Vec<String>,
    relations: Subspace,
}

impl QuadraticPresentation {
    pub fn new(name: impl Into<String>, labels: Vec<String>, relations: Subspace) -> Result<Self> {
        let n = labels.len();
        if relations.ambient_dim() != n * n {
            return Err(Error::DimensionMismatch {
                context: "relation space must live in V⊗V",
                expected: n * n,
                found: relations.ambient_dim(),
            });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if l.is_empty() {
                return Err(Error::InvalidPresentation("empty generator label".into()));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidPresentation(format!("duplicate generator label {l}")));
            }
        }
        Ok(QuadraticPresentation {
            name: name.into(),
            labels,
            relations,
        })
    }

    /// Presentation spanned by the given relation vectors (word order).
    pub fn from_relations<'a, I>(field: Field, name: &str, labels: Vec<String>, rels: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a SparseVec>,
    {
        let n = labels.len();
        let r = Subspace::span(field, n * n, rels);
        Self::new(name, labels, r)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Number of generators.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> Field {
        self.relations.field()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Same underlying algebra: labels and names are ignored.
    pub fn same_object(&self, other: &QuadraticPresentation) -> bool {
        self.n() == other.n() && self.relations == other.relations
    }

    pub fn free(field: Field, n: usize) -> Self {
        Self::new(format!("free{n}"), default_labels(n), Subspace::zero(field, n * n)).expect("valid")
    }

    /// `d` generators, all products zero: a vector space viewed as an algebra.
    pub fn embed_vector_space(field: Field, d: usize) -> Self {
        Self::new(format!("embed{d}"), default_labels(d), Subspace::full(field, d * d)).expect("valid")
    }

    /// Polynomial algebra: `x_i x_j - x_j x_i` for `i < j`.
    pub fn symmetric(field: Field, n: usize) -> Self {
        let one = Scalar::one(field);
        let rels: Vec<SparseVec> = pairs(n)
            .map(|(i, j)| vec![(i * n + j, one.clone()), (j * n + i, -&one)])
            .collect();
        Self::from_relations(field, &format!("Sym{n}"), default_labels(n), rels.iter()).expect("valid")
    }

    /// Exterior algebra: `x_i x_i` and `x_i x_j + x_j x_i`.
    pub fn exterior(field: Field, n: usize) -> Self {
        let one = Scalar::one(field);
        let mut rels: Vec<SparseVec> = (0..n).map(|i| vec![(i * n + i, one.clone())]).collect();
        rels.extend(pairs(n).map(|(i, j)| vec![(i * n + j, one.clone()), (j * n + i, one.clone())]));
        Self::from_relations(field, &format!("Ext{n}"), default_labels(n), rels.iter()).expect("valid")
    }

    /// Unit for ∘: the free algebra on one generator.
    pub fn unit_white(field: Field) -> Self {
        Self::new("I_o", vec!["e".into()], Subspace::zero(field, 1)).expect("valid")
    }

    /// Unit for •: one generator whose square is a relation.
    pub fn unit_black(field: Field) -> Self {
        Self::new("I_b", vec!["e".into()], Subspace::full(field, 1)).expect("valid")
    }

    /// Uniformly drawn relation space of dimension exactly `c` (entries in
    /// `-3..=3` over Q, uniform residues over GF(p)).
    pub fn random<R: Rng>(field: Field, n: usize, c: usize, rng: &mut R) -> Result<Self> {
        if c > n * n {
            return Err(Error::DimensionMismatch {
                context: "relation count exceeds n²",
                expected: n * n,
                found: c,
            });
        }
        let r = loop {
            let vectors: Vec<SparseVec> = (0..c)
                .map(|_| {
                    (0..n * n)
                        .map(|i| (i, random_scalar(field, rng)))
                        .filter(|(_, x)| !x.is_zero())
                        .collect()
                })
                .collect();
            let s = Subspace::span(field, n * n, vectors.iter());
            if s.dim() == c {
                break s;
            }
        };
        Self::new(format!("rand_n{n}_c{c}"), default_labels(n), r)
    }

    /// Quadratic dual: relations are the annihilator of `R` in `V*⊗V*`.
    pub fn dual(&self) -> Self {
        let mut labels: Vec<String> = self.labels.iter().map(|l| dual_label(l)).collect();
        if labels.iter().collect::<HashSet<_>>().len() != labels.len() {
            labels = self.labels.iter().map(|l| format!("({l})*")).collect();
        }
        QuadraticPresentation {
            name: dual_name(&self.name),
            labels,
            relations: self.relations.annihilator(),
        }
    }

    /// Manin's black product `A • B`: relations `t23(R_A ⊗ R_B)`.
    pub fn black(&self, other: &Self) -> Result<Self> {
        self.field().check_same(other.field())?;
        let (n1, n2) = (self.n(), other.n());
        let t = t23(n1, n2)?;
        let rows: Vec<SparseVec> = self
            .relations
            .basis_sparse()
            .iter()
            .flat_map(|r| {
                other
                    .relations
                    .basis_sparse()
                    .iter()
                    .map(|s| t.apply_sparse(&kron_vectors(r, s, n2 * n2)))
                    .collect::<Vec<_>>()
            })
            .collect();
        let relations = Subspace::span(self.field(), (n1 * n2) * (n1 * n2), rows.iter());
        Ok(QuadraticPresentation {
            name: format!("({}•{})", self.name, other.name),
            labels: product_labels(&self.labels, &other.labels),
            relations,
        })
    }

    /// Manin's white product `A ∘ B`: relations
    /// `t23(V_A⊗V_A ⊗ R_B + R_A ⊗ V_B⊗V_B)`.
    pub fn white(&self, other: &Self) -> Result<Self> {
        self.field().check_same(other.field())?;
        let field = self.field();
        let (n1, n2) = (self.n(), other.n());
        let (sq1, sq2) = (n1 * n1, n2 * n2);
        let t = t23(n1, n2)?;
        let one = Scalar::one(field);
        let mut rows: Vec<SparseVec> = Vec::new();
        for w in 0..sq1 {
            for s in other.relations.basis_sparse() {
                rows.push(kron_vectors(&vec![(w, one.clone())], s, sq2));
            }
        }
        for r in self.relations.basis_sparse() {
            for w in 0..sq2 {
                rows.push(kron_vectors(r, &vec![(w, one.clone())], sq2));
            }
        }
        let pushed: Vec<SparseVec> = rows.iter().map(|v| t.apply_sparse(v)).collect();
        let relations = Subspace::span(field, sq1 * sq2, pushed.iter());
        Ok(QuadraticPresentation {
            name: format!("({}∘{})", self.name, other.name),
            labels: product_labels(&self.labels, &other.labels),
            relations,
        })
    }

    /// Internal Hom from `self` to `target`: `target ∘ self^!`.
    pub fn internal_hom(&self, target: &Self) -> Result<Self> {
        target.white(&self.dual())
    }

    /// Whether the relations are all of `V⊗V` (the rigid objects).
    pub fn is_rigid(&self) -> bool {
        self.relations.is_full()
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// Entries in `-3..=3` over Q, uniform residues over GF(p).
pub fn random_scalar<R: Rng>(field: Field, rng: &mut R) -> Scalar {
    match field {
        Field::Rationals => Scalar::from_i64(field, rng.random_range(-3..=3)),
        Field::Prime(p) => Scalar::from_i64(field, rng.random_range(0..p.get() as i64)),
    }
}

pub fn default_labels(n: usize) -> Vec<String> {
    const SHORT: [&str; 4] = ["x", "y", "z", "w"];
    if n <= SHORT.len() {
        SHORT[..n].iter().map(|s| s.to_string()).collect()
    } else {
        (0..n).map(|i| format!("x{i}")).collect()
    }
}

fn wrap(label: &str) -> String {
    if label.contains('⊗') {
        format!("({label})")
    } else {
        label.to_string()
    }
}

/// Generator labels of a product, in row-major order.
pub fn product_labels(a: &[String], b: &[String]) -> Vec<String> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| format!("{}⊗{}", wrap(x), wrap(y))))
        .collect()
}

/// Label of the dual basis vector. Product labels are wrapped as `(…)*`;
/// other labels toggle one trailing `*`.
pub fn dual_label(label: &str) -> String {
    if let Some(core) = label.strip_prefix('(').and_then(|s| s.strip_suffix(")*")) {
        if core.contains('⊗') && balanced(core) {
            return core.to_string();
        }
    }
    if label.contains('⊗') {
        return format!("({label})*");
    }
    match label.strip_suffix('*') {
        Some(inner) => inner.to_string(),
        None => format!("{label}*"),
    }
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}

pub fn dual_name(name: &str) -> String {
    match name.strip_suffix('!') {
        Some(inner) => inner.to_string(),
        None => format!("{name}!"),
    }
}

/// Word index of `x_a x_b` among `n²` degree-2 words.
pub fn word2(n: usize, a: usize, b: usize) -> usize {
    a * n + b
}

/// `n^m`, re-exported for callers that think in degrees.
#[allow(dead_code)]
pub fn words_in_degree(n: usize, m: usize) -> usize {
    word_count(n, m)
}
