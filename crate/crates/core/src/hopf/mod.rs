//! Finite-dimensional bialgebras and Hopf algebras given by structure
//! constants.
//!
//! For a basis `e_0 … e_{n-1}`:
//! * `mult` is `n × n²`, column `i·n + j` holds `e_i e_j`;
//! * `unit` is `n × 1`, `counit` is `1 × n`;
//! * `comult` is `n² × n`, column `k` holds `Δ(e_k)` in the basis `e_i⊗e_j`.
//!
//! The dual basis `{e^i}` of `H*` is the coordinate functionals, so every
//! dual structure map is a transpose.

mod zoo;

use std::fmt;
use std::sync::Arc;

pub use zoo::{cyclic_group, group_algebra, symmetric_group_s3, sweedler, taft, trivial_bialgebra, zoo, ZooEntry};

use crate::chain::{id, map, Chain};
use crate::error::{dims, Error, Result};
use crate::linmap::LinMap;
use crate::report::{check_chains, AxiomEntry, AxiomReport};
use crate::scalar::FieldSpec;

/// How a bialgebra was built, when that matters downstream.
#[derive(Clone, Debug)]
pub enum Origin {
    Plain,
    /// Built as `H ⊗ H*` by [`tensor_with_dual`]; basis `e_i⊗e^j` at `i·n + j`.
    TensorWithDual(Arc<Bialgebra>),
}

#[derive(Clone)]
pub struct Bialgebra {
    dim: usize,
    field: FieldSpec,
    labels: Vec<String>,
    mult: LinMap,
    unit: LinMap,
    comult: LinMap,
    counit: LinMap,
    origin: Origin,
}

impl fmt::Debug for Bialgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bialgebra(dim {} over {}; {:?})", self.dim, self.field, self.labels)
    }
}

/// Structural equality: dimension, field and the four structure maps.
/// Labels and provenance are not compared.
impl PartialEq for Bialgebra {
    fn eq(&self, o: &Self) -> bool {
        self.dim == o.dim
            && self.field == o.field
            && self.mult == o.mult
            && self.unit == o.unit
            && self.comult == o.comult
            && self.counit == o.counit
    }
}

impl Eq for Bialgebra {}

impl Bialgebra {
    /// Validates shapes and fields only; axioms are [`check_bialgebra`]'s job.
    pub fn new(
        labels: Vec<String>,
        mult: LinMap,
        unit: LinMap,
        comult: LinMap,
        counit: LinMap,
    ) -> Result<Self> {
        let n = unit.rows();
        let field = mult.field();
        let shapes = [
            ("mult", &mult, n, n * n),
            ("unit", &unit, n, 1),
            ("comult", &comult, n * n, n),
            ("counit", &counit, 1, n),
        ];
        for (name, m, r, c) in shapes {
            if (m.rows(), m.cols()) != (r, c) {
                return Err(dims(format!("{name} is {}x{}, expected {r}x{c}", m.rows(), m.cols())));
            }
            if m.field() != field {
                return Err(Error::FieldMismatch(field, m.field()));
            }
        }
        let labels = if labels.is_empty() { (0..n).map(|i| format!("e{i}")).collect() } else { labels };
        if labels.len() != n {
            return Err(dims(format!("{} labels for dimension {n}", labels.len())));
        }
        Ok(Bialgebra { dim: n, field, labels, mult, unit, comult, counit, origin: Origin::Plain })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mult(&self) -> &LinMap {
        &self.mult
    }

    pub fn unit(&self) -> &LinMap {
        &self.unit
    }

    pub fn comult(&self) -> &LinMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(dims(format!("{} labels for dimension {}", labels.len(), self.dim)));
        }
        self.labels = labels;
        Ok(self)
    }

    /// `e_i e_j` as a sparse vector.
    pub fn product(&self, i: usize, j: usize) -> &crate::SparseVec {
        self.mult.column(i * self.dim + j)
    }
}

/// Checks the ten bialgebra identities as exact map equalities.
pub fn check_bialgebra(b: &Bialgebra) -> Result<AxiomReport> {
    let (n, k) = (b.dim, b.field);
    let (m, u, d, e) = (&b.mult, &b.unit, &b.comult, &b.counit);
    let ident = Chain::new(k, n);
    let mut r = AxiomReport::new();
    r.push(check_chains(
        "assoc",
        &Chain::new(k, n * n * n).then(vec![map(m), id(n)])?.then_map(m)?,
        &Chain::new(k, n * n * n).then(vec![id(n), map(m)])?.then_map(m)?,
    )?);
    r.push(check_chains("unit_l", &Chain::new(k, n).then(vec![map(u), id(n)])?.then_map(m)?, &ident)?);
    r.push(check_chains("unit_r", &Chain::new(k, n).then(vec![id(n), map(u)])?.then_map(m)?, &ident)?);
    r.push(check_chains(
        "coassoc",
        &Chain::new(k, n).then_map(d)?.then(vec![map(d), id(n)])?,
        &Chain::new(k, n).then_map(d)?.then(vec![id(n), map(d)])?,
    )?);
    r.push(check_chains("counit_l", &Chain::new(k, n).then_map(d)?.then(vec![map(e), id(n)])?, &ident)?);
    r.push(check_chains("counit_r", &Chain::new(k, n).then_map(d)?.then(vec![id(n), map(e)])?, &ident)?);
    r.push(check_chains(
        "delta_mult",
        &Chain::new(k, n * n).then_map(m)?.then_map(d)?,
        &Chain::new(k, n * n)
            .then(vec![map(d), map(d)])?
            .permute(&[n, n, n, n], &[0, 2, 1, 3])?
            .then(vec![map(m), map(m)])?,
    )?);
    r.push(check_chains(
        "delta_unit",
        &Chain::new(k, 1).then_map(u)?.then_map(d)?,
        &Chain::new(k, 1).then(vec![map(u), map(u)])?,
    )?);
    r.push(check_chains(
        "eps_mult",
        &Chain::new(k, n * n).then_map(m)?.then_map(e)?,
        &Chain::new(k, n * n).then(vec![map(e), map(e)])?,
    )?);
    r.push(check_chains("eps_unit", &Chain::new(k, 1).then_map(u)?.then_map(e)?, &Chain::new(k, 1))?);
    Ok(r)
}

/// `antipode_left`: `m∘(S⊗id)∘Δ = u∘ε`; `antipode_right`: `m∘(id⊗S)∘Δ = u∘ε`.
pub fn check_antipode(b: &Bialgebra, s: &LinMap) -> Result<AxiomReport> {
    let (n, k) = (b.dim, b.field);
    if (s.rows(), s.cols()) != (n, n) {
        return Err(dims(format!("antipode is {}x{}, expected {n}x{n}", s.rows(), s.cols())));
    }
    let ue = Chain::new(k, n).then_map(&b.counit)?.then_map(&b.unit)?;
    let side = |f| Chain::new(k, n).then_map(&b.comult)?.then(f)?.then_map(&b.mult);
    let mut r = AxiomReport::new();
    r.push(check_chains("antipode_left", &side(vec![map(s), id(n)])?, &ue)?);
    r.push(check_chains("antipode_right", &side(vec![id(n), map(s)])?, &ue)?);
    Ok(r)
}

/// Solves `m∘(S⊗id)∘Δ = u∘ε` for `S` as a linear system in its `n²`
/// entries, then checks both antipode identities. `None` when `b` is not
/// a Hopf algebra.
pub fn compute_antipode(b: &Bialgebra) -> Result<Option<LinMap>> {
    let (n, k) = (b.dim, b.field);
    // unknown S[l, i] at l·n + i; equation (r, k) at r·n + k
    let mut entries = Vec::new();
    for kk in 0..n {
        for (ij, c) in b.comult.column(kk) {
            let (i, j) = (ij / n, ij % n);
            for l in 0..n {
                for (r, v) in b.mult.column(l * n + j) {
                    entries.push((r * n + kk, l * n + i, c * v));
                }
            }
        }
    }
    let a = LinMap::from_triplets(k, n * n, n * n, entries)?;
    let mut rhs = Vec::new();
    for (r, u) in b.unit.column(0) {
        for (kk, e) in b.counit.columns().iter().enumerate() {
            if let Some((_, e)) = e.first() {
                rhs.push((r * n + kk, 0, u * e));
            }
        }
    }
    let rhs = LinMap::from_triplets(k, n * n, 1, rhs)?;
    let Some(x) = a.solve(&rhs)? else {
        return Ok(None);
    };
    let s = LinMap::from_triplets(k, n, n, x.column(0).iter().map(|(idx, v)| (idx / n, idx % n, v.clone())))?;
    if check_antipode(b, &s)?.passed() {
        Ok(Some(s))
    } else {
        Ok(None)
    }
}

/// Hopf algebra with an antipode satisfying both identities.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    bialgebra: Arc<Bialgebra>,
    antipode: LinMap,
    antipode_inv: Option<LinMap>,
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, o: &Self) -> bool {
        self.bialgebra == o.bialgebra && self.antipode == o.antipode
    }
}

impl HopfAlgebra {
    /// Verifies the antipode identities before accepting `antipode`.
    pub fn new(bialgebra: Arc<Bialgebra>, antipode: LinMap) -> Result<Self> {
        let report = check_antipode(&bialgebra, &antipode)?;
        if let Some(f) = report.first_failure() {
            return Err(Error::Precondition(format!("antipode fails {}", f.name)));
        }
        Ok(HopfAlgebra { bialgebra, antipode, antipode_inv: None })
    }

    /// Accepts `antipode` as is; callers check it separately.
    pub(crate) fn new_unverified(bialgebra: Arc<Bialgebra>, antipode: LinMap) -> Self {
        HopfAlgebra { bialgebra, antipode, antipode_inv: None }
    }

    /// Computes the antipode and, when it is bijective, its inverse.
    pub fn from_bialgebra(b: impl Into<Arc<Bialgebra>>) -> Result<Self> {
        let b = b.into();
        let s = compute_antipode(&b)?.ok_or(Error::NotHopf)?;
        let h = HopfAlgebra { bialgebra: b, antipode: s, antipode_inv: None };
        match h.clone().invert_antipode() {
            Ok(h) => Ok(h),
            Err(Error::SingularAntipode) => Ok(h),
            Err(e) => Err(e),
        }
    }

    pub fn bialgebra(&self) -> &Arc<Bialgebra> {
        &self.bialgebra
    }

    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> Option<&LinMap> {
        self.antipode_inv.as_ref()
    }

    pub fn require_antipode_inv(&self) -> Result<&LinMap> {
        self.antipode_inv.as_ref().ok_or(Error::SingularAntipode)
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.bialgebra.field
    }

    /// Fills in `S⁻¹` by exact inversion.
    pub fn invert_antipode(mut self) -> Result<Self> {
        let inv = self.antipode.invert()?.ok_or(Error::SingularAntipode)?;
        self.antipode_inv = Some(inv);
        Ok(self)
    }
}

/// `H*` in the dual basis: every structure map transposes.
pub fn dual_bialgebra(b: &Bialgebra) -> Bialgebra {
    Bialgebra {
        dim: b.dim,
        field: b.field,
        labels: b.labels.iter().map(|l| format!("{l}*")).collect(),
        mult: b.comult.transpose(),
        unit: b.counit.transpose(),
        comult: b.mult.transpose(),
        counit: b.unit.transpose(),
        origin: Origin::Plain,
    }
}

/// `B1 ⊗ B2` with componentwise product and coproduct.
pub fn tensor_bialgebra(b1: &Bialgebra, b2: &Bialgebra) -> Result<Bialgebra> {
    if b1.field != b2.field {
        return Err(Error::FieldMismatch(b1.field, b2.field));
    }
    let (n1, n2, k) = (b1.dim, b2.dim, b1.field);
    let mult = Chain::new(k, n1 * n2 * n1 * n2)
        .permute(&[n1, n2, n1, n2], &[0, 2, 1, 3])?
        .then(vec![map(&b1.mult), map(&b2.mult)])?
        .to_linmap();
    let comult = Chain::new(k, n1 * n2)
        .then(vec![map(&b1.comult), map(&b2.comult)])?
        .permute(&[n1, n1, n2, n2], &[0, 2, 1, 3])?
        .to_linmap();
    let labels = b1.labels.iter().flat_map(|a| b2.labels.iter().map(move |b| format!("{a}|{b}"))).collect();
    Ok(Bialgebra {
        dim: n1 * n2,
        field: k,
        labels,
        mult,
        unit: b1.unit.kron(&b2.unit)?,
        comult,
        counit: b1.counit.kron(&b2.counit)?,
        origin: Origin::Plain,
    })
}

/// `H ⊗ H*`, tagged so that functors out of its Yetter-Drinfeld category
/// can recover `H`.
pub fn tensor_with_dual(h: &Arc<Bialgebra>) -> Result<Bialgebra> {
    let mut t = tensor_bialgebra(h, &dual_bialgebra(h))?;
    t.origin = Origin::TensorWithDual(h.clone());
    Ok(t)
}

pub fn dual_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    HopfAlgebra {
        bialgebra: Arc::new(dual_bialgebra(&h.bialgebra)),
        antipode: h.antipode.transpose(),
        antipode_inv: h.antipode_inv.as_ref().map(LinMap::transpose),
    }
}

/// Tensor product Hopf algebra with antipode `S₁⊗S₂`.
pub fn tensor_hopf(h1: &HopfAlgebra, h2: &HopfAlgebra) -> Result<HopfAlgebra> {
    Ok(HopfAlgebra {
        bialgebra: Arc::new(tensor_bialgebra(&h1.bialgebra, &h2.bialgebra)?),
        antipode: h1.antipode.kron(&h2.antipode)?,
        antipode_inv: match (&h1.antipode_inv, &h2.antipode_inv) {
            (Some(a), Some(b)) => Some(a.kron(b)?),
            _ => None,
        },
    })
}

/// `H ⊗ H*` as a Hopf algebra, tagged like [`tensor_with_dual`].
pub fn tensor_with_dual_hopf(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let d = dual_hopf(h);
    let bialgebra = Arc::new(tensor_with_dual(&h.bialgebra)?);
    Ok(HopfAlgebra {
        bialgebra,
        antipode: h.antipode.kron(&d.antipode)?,
        antipode_inv: match (&h.antipode_inv, &d.antipode_inv) {
            (Some(a), Some(b)) => Some(a.kron(b)?),
            _ => None,
        },
    })
}

/// `(commutative, cocommutative)`.
pub fn commutativity_flags(b: &Bialgebra) -> (bool, bool) {
    let flip = LinMap::flip(b.field, b.dim, b.dim);
    let comm = b.mult.compose(&flip).map(|m| m == b.mult).unwrap_or(false);
    let cocomm = flip.compose(&b.comult).map(|d| d == b.comult).unwrap_or(false);
    (comm, cocomm)
}

/// Smallest `k <= max` with `Sᵏ = id`.
pub fn antipode_order(s: &LinMap, max: usize) -> Option<usize> {
    let mut p = s.clone();
    for k in 1..=max {
        if p.is_identity() {
            return Some(k);
        }
        p = p.compose(s).ok()?;
    }
    None
}

/// Single report entry for the antipode computation.
pub fn antipode_entry(b: &Bialgebra) -> Result<AxiomEntry> {
    Ok(match compute_antipode(b)? {
        Some(_) => AxiomEntry::pass("antipode"),
        None => AxiomEntry::fail("antipode", "convolution-inverse system is inconsistent"),
    })
}

#[cfg(test)]
mod tests;
