//! The Drinfeld double `D(B)` on `B*⊗B` and the passage between
//! Yetter-Drinfeld modules over `B` and `D(B)`-modules.
//!
//! Basis `b^i ⊗ b_a` sits at `i·n + a` (dual factor first). Structure maps
//! are evaluated lazily from those of `B`; [`DrinfeldDouble::materialize`]
//! builds the full Hopf algebra when it is small enough to want one.
//!
//! A YD module `M` becomes a `D(B)`-module by `(f⊗a)·m = ⟨f, (a·m)₍₋₁₎⟩ (a·m)₍₀₎`.
//! Since `f·(g·m) = (g*f)·m` under that action, the dual factor enters as
//! `B*op` and the product is `(f⊗a)(g⊗b) = g(S(a₁) ? a₃)*f ⊗ a₂b`, with the
//! ordinary coalgebra of `B*` and antipode `(ε⊗S(a))·(f∘S⁻¹⊗1)`; this is
//! [`DoubleConvention::LeftLeftYd`]. The co-opposite variant
//! `f*g(S⁻¹(a₃) ? a₁) ⊗ a₂b` on `B*cop ⊗ B` is kept as
//! [`DoubleConvention::CoOppositeDual`]; it is a Hopf algebra, but not one
//! that acts on YD modules through the formula above.

use std::sync::{Arc, OnceLock};

use crate::chain::{first_row_mismatch, id, map, Chain};
use crate::error::{dims, Error, Result};
use crate::exec::Exec;
use crate::hopf::{check_antipode, check_bialgebra, Bialgebra, HopfAlgebra};
use crate::linmap::{normalize, LinMap, SparseVec, Witness};
use crate::rep::{same_algebra, YdModule};
use crate::report::{AxiomEntry, AxiomReport, Coverage};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum DoubleConvention {
    #[default]
    LeftLeftYd,
    CoOppositeDual,
}

/// One term `c · S(a₁) ⊗ a₂ ⊗ a₃` of the twisted `Δ²(a)`, stored as
/// `(left, middle, right, c)` with the left factor already expanded.
type Twisted = (usize, usize, usize, Scalar);

pub struct DrinfeldDouble {
    base: HopfAlgebra,
    convention: DoubleConvention,
    n: usize,
    /// `B*` product, `n × n²`.
    dual_mult: LinMap,
    /// `B*` coproduct, `n² × n`.
    dual_comult: LinMap,
    twisted: Vec<Vec<Twisted>>,
    /// `T_{p,q}`: column `j` is the functional `b^j(b_p ? b_q)`.
    sandwich: Vec<OnceLock<LinMap>>,
    /// `b^i ↦ b^i∘S⁻¹`.
    dual_antipode: LinMap,
    materialized: OnceLock<Result<HopfAlgebra>>,
}

impl std::fmt::Debug for DrinfeldDouble {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DrinfeldDouble(dim {}, {:?})", self.n * self.n, self.convention)
    }
}

fn scaled<'v>(v: &'v SparseVec, c: &Scalar) -> impl Iterator<Item = (usize, Scalar)> + 'v {
    let c = c.clone();
    v.iter().map(move |(i, x)| (*i, x * &c))
}

impl DrinfeldDouble {
    /// Builds the double without any axiom checks.
    pub fn new_unchecked(base: &HopfAlgebra, convention: DoubleConvention) -> Result<Self> {
        let b = base.bialgebra();
        let n = b.dim();
        let sinv = base.require_antipode_inv()?;
        // Δ²(a) = (Δ⊗id)Δ(a), indexed (a₁·n + a₂)·n + a₃
        let delta2 = Chain::new(b.field(), n).then_map(b.comult())?.then(vec![map(b.comult()), id(n)])?.to_linmap();
        let twisted = (0..n)
            .map(|a| {
                let mut out = Vec::new();
                for (t, c) in delta2.column(a) {
                    let (a1, a2, a3) = (t / (n * n), (t / n) % n, t % n);
                    let (outer, other, left_map) = match convention {
                        DoubleConvention::LeftLeftYd => (a1, a3, base.antipode()),
                        DoubleConvention::CoOppositeDual => (a3, a1, sinv),
                    };
                    for (p, s) in left_map.column(outer) {
                        out.push((*p, a2, other, c * s));
                    }
                }
                out
            })
            .collect();
        let dual_antipode = sinv.transpose();
        Ok(DrinfeldDouble {
            base: base.clone(),
            convention,
            n,
            dual_mult: b.comult().transpose(),
            dual_comult: b.mult().transpose(),
            twisted,
            sandwich: (0..n * n).map(|_| OnceLock::new()).collect(),
            dual_antipode,
            materialized: OnceLock::new(),
        })
    }

    pub fn base(&self) -> &HopfAlgebra {
        &self.base
    }

    pub fn convention(&self) -> DoubleConvention {
        self.convention
    }

    pub fn dim(&self) -> usize {
        self.n * self.n
    }

    pub fn field(&self) -> FieldSpec {
        self.base.field()
    }

    pub fn labels(&self) -> Vec<String> {
        let l = self.base.bialgebra().labels();
        l.iter().flat_map(|f| l.iter().map(move |a| format!("{f}*#{a}"))).collect()
    }

    fn sandwich(&self, p: usize, q: usize) -> &LinMap {
        self.sandwich[p * self.n + q].get_or_init(|| {
            let b = self.base.bialgebra();
            let n = self.n;
            let cols = (0..n)
                .map(|k| {
                    let mut out = Vec::new();
                    for (r, x) in b.product(p, k) {
                        out.extend(scaled(b.product(*r, q), x));
                    }
                    normalize(out)
                })
                .collect();
            LinMap::from_normalized(b.field(), n, cols).transpose()
        })
    }

    /// `f ↦ f⊗1` on a vector of `B*`.
    fn embed_dual(&self, f: &SparseVec) -> SparseVec {
        let one = self.base.bialgebra().unit().column(0);
        let mut out = Vec::new();
        for (i, x) in f {
            out.extend(scaled(one, x).map(|(a, y)| (i * self.n + a, y)));
        }
        normalize(out)
    }

    /// `a ↦ ε⊗a` on a vector of `B`.
    fn embed_base(&self, a: &SparseVec) -> SparseVec {
        let b = self.base.bialgebra();
        let mut out = Vec::new();
        for (k, e) in b.counit().columns().iter().enumerate() {
            if let Some((_, e)) = e.first() {
                out.extend(scaled(a, e).map(|(r, y)| (k * self.n + r, y)));
            }
        }
        normalize(out)
    }

    /// Column of `dual_mult` holding the dual-factor product of `f = b^i`
    /// (left) and `g = b^k` (right).
    fn dual_product_index(&self, i: usize, k: usize) -> usize {
        match self.convention {
            DoubleConvention::LeftLeftYd => k * self.n + i,
            DoubleConvention::CoOppositeDual => i * self.n + k,
        }
    }

    /// Product of two basis elements.
    pub fn mul_basis(&self, x: usize, y: usize) -> SparseVec {
        let b = self.base.bialgebra();
        let n = self.n;
        let (i, a, j, bb) = (x / n, x % n, y / n, y % n);
        let mut out = Vec::new();
        for (p, a2, q, c) in &self.twisted[a] {
            let right = b.product(*a2, bb);
            if right.is_empty() {
                continue;
            }
            for (k, g) in self.sandwich(*p, *q).column(j) {
                let cg = c * g;
                for (l, u) in self.dual_mult.column(self.dual_product_index(i, *k)) {
                    let cgu = &cg * u;
                    out.extend(scaled(right, &cgu).map(|(r, v)| (l * n + r, v)));
                }
            }
        }
        normalize(out)
    }

    pub fn mul(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (x, s) in u {
            for (y, t) in v {
                out.extend(scaled(&self.mul_basis(*x, *y), &(s * t)));
            }
        }
        normalize(out)
    }

    /// `Δ` of a basis element, in `D⊗D` flattened as `X·N + Y`.
    pub fn comult_basis(&self, x: usize) -> SparseVec {
        let b = self.base.bialgebra();
        let (n, big) = (self.n, self.dim());
        let (i, a) = (x / n, x % n);
        let mut out = Vec::new();
        for (pq, c) in self.dual_comult.column(i) {
            let (p, q) = (pq / n, pq % n);
            for (st, d) in b.comult().column(a) {
                let (s, t) = (st / n, st % n);
                let (left, right) = match self.convention {
                    DoubleConvention::LeftLeftYd => (p * n + s, q * n + t),
                    DoubleConvention::CoOppositeDual => (q * n + s, p * n + t),
                };
                out.push((left * big + right, c * d));
            }
        }
        normalize(out)
    }

    pub fn comult(&self, u: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (x, s) in u {
            out.extend(scaled(&self.comult_basis(*x), s));
        }
        normalize(out)
    }

    /// `ε_D(b^i⊗b_a) = b^i(1) ε(b_a)`.
    pub fn counit_basis(&self, x: usize) -> Scalar {
        let b = self.base.bialgebra();
        let (i, a) = (x / self.n, x % self.n);
        b.unit().get(i, 0) * b.counit().get(0, a)
    }

    pub fn counit(&self, u: &SparseVec) -> Scalar {
        let mut acc = self.field().zero();
        for (x, s) in u {
            acc.add_mul(s, &self.counit_basis(*x));
        }
        acc
    }

    /// `ε⊗1`.
    pub fn unit(&self) -> SparseVec {
        self.embed_base(self.base.bialgebra().unit().column(0))
    }

    /// `S_D(f⊗a) = (ε⊗S(a))·(f∘S⁻¹⊗1)`.
    pub fn antipode_basis(&self, x: usize) -> SparseVec {
        let (i, a) = (x / self.n, x % self.n);
        let left = self.embed_base(self.base.antipode().column(a));
        let right = self.embed_dual(self.dual_antipode.column(i));
        self.mul(&left, &right)
    }

    pub fn antipode(&self, u: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (x, s) in u {
            out.extend(scaled(&self.antipode_basis(*x), s));
        }
        normalize(out)
    }

    /// `D(B)` as an explicit Hopf algebra. Only sensible for small `B`.
    pub fn materialize(&self) -> Result<&HopfAlgebra> {
        self.materialized
            .get_or_init(|| {
                let (k, big) = (self.field(), self.dim());
                let mult = Exec::default().map_range(big * big, |xy| self.mul_basis(xy / big, xy % big));
                let mult = LinMap::from_normalized(k, big, mult);
                let comult = LinMap::from_normalized(k, big * big, (0..big).map(|x| self.comult_basis(x)).collect());
                let counit = LinMap::from_columns(
                    k,
                    1,
                    (0..big).map(|x| normalize(vec![(0, self.counit_basis(x))])).collect(),
                )?;
                let unit = LinMap::from_normalized(k, big, vec![self.unit()]);
                let antipode = LinMap::from_normalized(k, big, (0..big).map(|x| self.antipode_basis(x)).collect());
                let bialgebra = Bialgebra::new(self.labels(), mult, unit, comult, counit)?;
                let s_inv = antipode.invert()?;
                let mut h = HopfAlgebra::new_unverified(Arc::new(bialgebra), antipode);
                if s_inv.is_some() {
                    h = h.invert_antipode()?;
                }
                Ok(h)
            })
            .as_ref()
            .map_err(Clone::clone)
    }
}

/// The double of `B` in the default convention, self-validated.
pub fn drinfeld_double(b: &HopfAlgebra) -> Result<DrinfeldDouble> {
    drinfeld_double_with(b, DoubleConvention::default(), Coverage::bounded(1 << 12, 256))
}

/// Builds `D(B)` and runs [`check_double`] on it; any failure is reported as
/// [`Error::ConventionMismatch`].
pub fn drinfeld_double_with(b: &HopfAlgebra, convention: DoubleConvention, validate: Coverage) -> Result<DrinfeldDouble> {
    let d = DrinfeldDouble::new_unchecked(b, convention)?;
    let report = check_double(&d, validate)?;
    if let Some(f) = report.first_failure() {
        return Err(Error::ConventionMismatch(format!("double fails {f}")));
    }
    Ok(d)
}

/// Evaluates `identity(col) → (lhs, rhs)` on the selected columns and keeps
/// the row-major first mismatch.
fn sampled_identity<F>(name: &str, domain: usize, cov: Coverage, zero: &Scalar, identity: F) -> AxiomEntry
where
    F: Fn(usize) -> (SparseVec, SparseVec) + Sync + Send,
{
    let cols: Vec<usize> = cov.columns(domain).unwrap_or_else(|| (0..domain).collect());
    let hits = Exec::default().map_slice(&cols, |&c| {
        let (l, r) = identity(c);
        first_row_mismatch(&l, &r).map(|(row, x, y)| (row, c, x, y))
    });
    let first = hits.into_iter().flatten().min_by_key(|(r, c, _, _)| (*r, *c));
    let entry = match first {
        None => AxiomEntry::pass(name),
        Some((row, col, x, y)) => AxiomEntry::from_witness(
            name,
            Some(Witness {
                row,
                col,
                index: row * domain + col,
                lhs: x.unwrap_or_else(|| zero.clone()),
                rhs: y.unwrap_or_else(|| zero.clone()),
            }),
        ),
    };
    if cols.len() < domain {
        entry.with_detail(format!("{} sampled columns", cols.len()))
    } else {
        entry
    }
}

fn tensor_mul(d: &DrinfeldDouble, u: &SparseVec, v: &SparseVec) -> SparseVec {
    let big = d.dim();
    let mut out = Vec::new();
    for (xy, s) in u {
        for (zw, t) in v {
            let st = s * t;
            let left = d.mul_basis(xy / big, zw / big);
            if left.is_empty() {
                continue;
            }
            let right = d.mul_basis(xy % big, zw % big);
            for (l, a) in &left {
                let sa = &st * a;
                out.extend(right.iter().map(|(r, b)| (l * big + r, &sa * b)));
            }
        }
    }
    normalize(out)
}

fn scalar_vec(s: Scalar) -> SparseVec {
    normalize(vec![(0, s)])
}

/// Bialgebra, antipode and embedding identities of `D(B)`.
///
/// With full coverage the double is materialized and checked with the
/// ordinary checkers; otherwise each identity is evaluated on sampled
/// domain columns (for the product identities a column is a basis triple
/// or pair).
pub fn check_double(d: &DrinfeldDouble, cov: Coverage) -> Result<AxiomReport> {
    let big = d.dim();
    if cov.is_exhaustive(big * big * big) {
        let h = d.materialize()?;
        let mut r = check_bialgebra(h.bialgebra())?;
        r.entries.extend(check_antipode(h.bialgebra(), h.antipode())?.entries);
        r.entries.extend(embedding_report(d, Coverage::Full).entries);
        return Ok(r);
    }
    let zero = d.field().zero();
    let basis = |x: usize| vec![(x, d.field().one())];
    let one = d.unit();
    let mut r = AxiomReport::new();
    r.push(sampled_identity("assoc", big * big * big, cov, &zero, |c| {
        let (x, y, z) = (c / (big * big), (c / big) % big, c % big);
        let xy = d.mul_basis(x, y);
        let yz = d.mul_basis(y, z);
        (d.mul(&xy, &basis(z)), d.mul(&basis(x), &yz))
    }));
    r.push(sampled_identity("unit_l", big, cov, &zero, |x| (d.mul(&one, &basis(x)), basis(x))));
    r.push(sampled_identity("unit_r", big, cov, &zero, |x| (d.mul(&basis(x), &one), basis(x))));
    r.push(sampled_identity("coassoc", big, cov, &zero, |x| {
        let dx = d.comult_basis(x);
        let mut l = Vec::new();
        let mut rr = Vec::new();
        for (uv, s) in &dx {
            let (u, v) = (uv / big, uv % big);
            l.extend(scaled(&d.comult_basis(u), s).map(|(ab, t)| (ab * big + v, t)));
            rr.extend(scaled(&d.comult_basis(v), s).map(|(ab, t)| (u * big * big + ab, t)));
        }
        (normalize(l), normalize(rr))
    }));
    let counit_side = |x: usize, left: bool| {
        let mut out = Vec::new();
        for (uv, s) in d.comult_basis(x) {
            let (u, v) = (uv / big, uv % big);
            let (e, keep) = if left { (u, v) } else { (v, u) };
            out.push((keep, &s * &d.counit_basis(e)));
        }
        normalize(out)
    };
    r.push(sampled_identity("counit_l", big, cov, &zero, |x| (counit_side(x, true), basis(x))));
    r.push(sampled_identity("counit_r", big, cov, &zero, |x| (counit_side(x, false), basis(x))));
    r.push(sampled_identity("delta_mult", big * big, cov, &zero, |c| {
        let (x, y) = (c / big, c % big);
        (d.comult(&d.mul_basis(x, y)), tensor_mul(d, &d.comult_basis(x), &d.comult_basis(y)))
    }));
    let mut one_one = Vec::new();
    for (a, s) in &one {
        one_one.extend(scaled(&one, s).map(|(b, t)| (a * big + b, t)));
    }
    r.push(sampled_identity("delta_unit", 1, Coverage::Full, &zero, |_| (d.comult(&one), normalize(one_one.clone()))));
    r.push(sampled_identity("eps_mult", big * big, cov, &zero, |c| {
        let (x, y) = (c / big, c % big);
        (scalar_vec(d.counit(&d.mul_basis(x, y))), scalar_vec(&d.counit_basis(x) * &d.counit_basis(y)))
    }));
    r.push(sampled_identity("eps_unit", 1, Coverage::Full, &zero, |_| {
        (scalar_vec(d.counit(&one)), scalar_vec(d.field().one()))
    }));
    let antipode_side = |x: usize, left: bool| {
        let mut out = Vec::new();
        for (uv, s) in d.comult_basis(x) {
            let (u, v) = (uv / big, uv % big);
            let prod = if left {
                d.mul(&d.antipode_basis(u), &basis(v))
            } else {
                d.mul(&basis(u), &d.antipode_basis(v))
            };
            out.extend(scaled(&prod, &s));
        }
        normalize(out)
    };
    let eps_one = |x: usize| normalize(scaled(&one, &d.counit_basis(x)).collect());
    r.push(sampled_identity("antipode_left", big, cov, &zero, |x| (antipode_side(x, true), eps_one(x))));
    r.push(sampled_identity("antipode_right", big, cov, &zero, |x| (antipode_side(x, false), eps_one(x))));
    r.entries.extend(embedding_report(d, cov).entries);
    Ok(r)
}

/// `f ↦ f⊗1` (from `B*op`, or `B*` in the co-opposite convention) and
/// `a ↦ ε⊗a` are algebra maps.
fn embedding_report(d: &DrinfeldDouble, cov: Coverage) -> AxiomReport {
    let n = d.n;
    let b = d.base.bialgebra();
    let zero = d.field().zero();
    let e = |i: usize| vec![(i, d.field().one())];
    let mut r = AxiomReport::new();
    r.push(sampled_identity("embed_dual", n * n, cov, &zero, |c| {
        let (i, j) = (c / n, c % n);
        let fg = d.dual_mult.column(d.dual_product_index(i, j));
        (d.mul(&d.embed_dual(&e(i)), &d.embed_dual(&e(j))), d.embed_dual(fg))
    }));
    r.push(sampled_identity("embed_base", n * n, cov, &zero, |c| {
        let (a, bb) = (c / n, c % n);
        (d.mul(&d.embed_base(&e(a)), &d.embed_base(&e(bb))), d.embed_base(b.product(a, bb)))
    }));
    r
}

/// A left `D(B)`-module.
#[derive(Clone, Debug)]
pub struct DoubleModule {
    double: Arc<DrinfeldDouble>,
    dim: usize,
    /// `dim × N·dim`.
    action: LinMap,
}

impl PartialEq for DoubleModule {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.double, &o.double) && self.action == o.action
    }
}

impl DoubleModule {
    pub fn new(double: Arc<DrinfeldDouble>, action: LinMap) -> Result<Self> {
        let dim = action.rows();
        if action.cols() != double.dim() * dim {
            return Err(dims(format!("action has {} columns, expected {}", action.cols(), double.dim() * dim)));
        }
        if action.field() != double.field() {
            return Err(Error::FieldMismatch(double.field(), action.field()));
        }
        Ok(DoubleModule { double, dim, action })
    }

    pub fn double(&self) -> &Arc<DrinfeldDouble> {
        &self.double
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &LinMap {
        &self.action
    }

}

/// `u·v` for an action given column by column (`x·m + w`).
fn act_with(m: usize, col: &impl Fn(usize) -> SparseVec, u: &SparseVec, v: &SparseVec) -> SparseVec {
    let mut out = Vec::new();
    for (x, s) in u {
        for (w, t) in v {
            out.extend(scaled(&col(x * m + w), &(s * t)).collect::<Vec<_>>());
        }
    }
    normalize(out)
}

fn module_report(d: &DrinfeldDouble, m: usize, cov: Coverage, col: impl Fn(usize) -> SparseVec + Sync + Send) -> AxiomReport {
    let big = d.dim();
    let zero = d.field().zero();
    let e = |i: usize| vec![(i, d.field().one())];
    let mut r = AxiomReport::new();
    r.push(sampled_identity("assoc_action", big * big * m, cov, &zero, |c| {
        let (x, y, w) = (c / (big * m), (c / m) % big, c % m);
        (act_with(m, &col, &d.mul_basis(x, y), &e(w)), act_with(m, &col, &e(x), &col(y * m + w)))
    }));
    let one = d.unit();
    r.push(sampled_identity("unit_action", m, Coverage::Full, &zero, |w| (act_with(m, &col, &one, &e(w)), e(w))));
    r
}

/// `{assoc_action, unit_action}` over `D(B)`, columns `(x·N + y)·m + w`.
pub fn check_double_module(v: &DoubleModule, cov: Coverage) -> AxiomReport {
    module_report(&v.double, v.dim, cov, |c| v.action.column(c).clone())
}

fn yd_double_action<'a>(y: &'a YdModule, n: usize, eval: &'a LinMap) -> Result<Chain<'a>> {
    let (k, m) = (y.field(), y.dim());
    Chain::new(k, n * n * m)
        .then(vec![id(n), map(y.act())])?
        .then(vec![id(n), map(y.coact())])?
        .then(vec![map(eval), id(m)])
}

/// The module identities of [`yd_to_double_module`]'s action evaluated
/// lazily, for modules whose `N²·m` action is too large to build.
pub fn check_yd_as_double_module(y: &YdModule, d: &DrinfeldDouble, cov: Coverage) -> Result<AxiomReport> {
    if !same_algebra(y.algebra(), d.base.bialgebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let eval = pairing(y.field(), d.n).transpose();
    let action = yd_double_action(y, d.n, &eval)?;
    Ok(module_report(d, y.dim(), cov, |c| action.apply_basis(c)))
}

/// `(f⊗a)·m = ⟨f, (a·m)₍₋₁₎⟩ (a·m)₍₀₎`. Associativity is checked (on
/// `cov`'s columns); a failure is a [`Error::ConventionMismatch`].
pub fn yd_to_double_module(y: &YdModule, d: &Arc<DrinfeldDouble>, cov: Coverage) -> Result<DoubleModule> {
    if !same_algebra(y.algebra(), d.base.bialgebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let eval = pairing(y.field(), d.n).transpose();
    let action = yd_double_action(y, d.n, &eval)?.to_linmap();
    let v = DoubleModule::new(d.clone(), action)?;
    let report = check_double_module(&v, cov);
    if let Some(f) = report.first_failure() {
        return Err(Error::ConventionMismatch(format!("YD module is not a {:?} double module: {f}", d.convention)));
    }
    Ok(v)
}

/// `Σ b^i⊗b_i` as an `n² × 1` map (`i·n + i`); its transpose is evaluation.
pub fn pairing(k: FieldSpec, n: usize) -> LinMap {
    LinMap::from_normalized(k, n * n, vec![(0..n).map(|i| (i * n + i, k.one())).collect()])
}

/// `a·m = (ε⊗a)·m`, `ρ(m) = Σ b_i ⊗ (b^i⊗1)·m`.
pub fn double_module_to_yd(v: &DoubleModule) -> Result<YdModule> {
    let d = &v.double;
    let (k, n, m) = (d.field(), d.n, v.dim);
    let e = |i: usize| vec![(i, k.one())];
    let embed_base = LinMap::from_normalized(k, n * n, (0..n).map(|a| d.embed_base(&e(a))).collect());
    let embed_dual = LinMap::from_normalized(k, n * n, (0..n).map(|i| d.embed_dual(&e(i))).collect());
    let coev = pairing(k, n);
    let act = Chain::new(k, n * m).then(vec![map(&embed_base), id(m)])?.then_map(&v.action)?.to_linmap();
    let coact = Chain::new(k, m)
        .then(vec![map(&coev), id(m)])?
        .then(vec![id(n), map(&embed_dual), id(m)])?
        .then(vec![id(n), map(&v.action)])?
        .to_linmap();
    YdModule::new(d.base.bialgebra().clone(), act, coact)
}

/// The left regular `D(B)`-module seen as a YD module over `B`, computed
/// from products directly so the `N × N²` regular action is never built.
pub fn regular_double_yd(d: &DrinfeldDouble) -> Result<YdModule> {
    let (k, n, big) = (d.field(), d.n, d.dim());
    let e = |i: usize| vec![(i, k.one())];
    let act = Exec::default().map_range(n * big, |c| {
        let (a, x) = (c / big, c % big);
        d.mul(&d.embed_base(&e(a)), &e(x))
    });
    let coact = Exec::default().map_range(big, |x| {
        let mut out = Vec::new();
        for i in 0..n {
            out.extend(d.mul(&d.embed_dual(&e(i)), &e(x)).into_iter().map(|(y, s)| (i * big + y, s)));
        }
        normalize(out)
    });
    YdModule::new(
        d.base.bialgebra().clone(),
        LinMap::from_normalized(k, big, act),
        LinMap::from_normalized(k, n * big, coact),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{commutativity_flags, cyclic_group, sweedler, symmetric_group_s3, tensor_with_dual_hopf};
    use crate::rep::{adjoint_yd, check_yd, trivial_yd};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn hopf(b: Bialgebra) -> HopfAlgebra {
        HopfAlgebra::from_bialgebra(b).unwrap()
    }

    #[test]
    fn double_of_c2() {
        let c2 = hopf(cyclic_group(Q, 2).unwrap());
        let d = drinfeld_double(&c2).unwrap();
        assert_eq!(d.dim(), 4);
        let r = check_double(&d, Coverage::Full).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.entries.len(), 14);
    }

    #[test]
    fn double_of_tensor_square_c2() {
        let t = tensor_with_dual_hopf(&hopf(cyclic_group(Q, 2).unwrap())).unwrap();
        let d = drinfeld_double(&t).unwrap();
        assert_eq!(d.dim(), 16);
        assert!(check_double(&d, Coverage::Full).unwrap().passed());
    }

    #[test]
    fn double_of_sweedler_is_noncommutative_hopf() {
        let h4 = hopf(sweedler(Q).unwrap());
        let d = drinfeld_double(&h4).unwrap();
        let r = check_double(&d, Coverage::Full).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(commutativity_flags(d.materialize().unwrap().bialgebra()), (false, false));
    }

    #[test]
    fn sampled_check_agrees_with_full() {
        let s3 = hopf(symmetric_group_s3(Q).unwrap());
        let d = DrinfeldDouble::new_unchecked(&s3, DoubleConvention::LeftLeftYd).unwrap();
        let r = check_double(&d, Coverage::sampled(300)).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn module_round_trips() {
        let h4 = hopf(sweedler(Q).unwrap());
        let d = Arc::new(drinfeld_double(&h4).unwrap());
        for y in [adjoint_yd(&h4).unwrap(), trivial_yd(h4.bialgebra().clone(), 2)] {
            let v = yd_to_double_module(&y, &d, Coverage::Full).unwrap();
            assert!(check_double_module(&v, Coverage::Full).passed());
            assert_eq!(double_module_to_yd(&v).unwrap(), y);
            let back = yd_to_double_module(&double_module_to_yd(&v).unwrap(), &d, Coverage::Full).unwrap();
            assert_eq!(back, v);
        }
    }

    #[test]
    fn trivial_module_acts_by_counit() {
        let c2 = hopf(cyclic_group(Q, 2).unwrap());
        let d = Arc::new(drinfeld_double(&c2).unwrap());
        let v = yd_to_double_module(&trivial_yd(c2.bialgebra().clone(), 1), &d, Coverage::Full).unwrap();
        let eps: Vec<Scalar> = (0..4).map(|x| d.counit_basis(x)).collect();
        assert_eq!(v.action().to_dense(), eps);
    }

    #[test]
    fn regular_double_yd_is_yd() {
        for b in [cyclic_group(Q, 2).unwrap(), sweedler(Q).unwrap()] {
            let h = hopf(b);
            let d = drinfeld_double(&h).unwrap();
            let y = regular_double_yd(&d).unwrap();
            assert_eq!(y.dim(), h.dim() * h.dim());
            assert!(check_yd(&y).unwrap().passed());
        }
    }

    #[test]
    fn co_opposite_convention_breaks_the_fixed_action() {
        let h4 = hopf(sweedler(Q).unwrap());
        let d = DrinfeldDouble::new_unchecked(&h4, DoubleConvention::CoOppositeDual).unwrap();
        assert!(check_double(&d, Coverage::Full).unwrap().passed());
        let d = Arc::new(d);
        let err = yd_to_double_module(&adjoint_yd(&h4).unwrap(), &d, Coverage::Full).unwrap_err();
        assert!(matches!(err, Error::ConventionMismatch(_)), "{err}");
    }
}
