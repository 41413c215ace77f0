//! Modules, comodules and left-left Yetter-Drinfeld modules over a
//! bialgebra given by structure constants.
//!
//! A left action on `M` (dim `m`) over `H` (dim `n`) is an `m × n·m` map,
//! a right action `m × m·n`; a left coaction is `n·m × m`, a right one
//! `m·n × m`. Everything follows the leftmost-major flattening.

use std::sync::Arc;

use crate::chain::{id, map, Chain, Factor};
use crate::error::{dims, Error, Result};
use crate::hopf::{Bialgebra, HopfAlgebra};
use crate::linmap::LinMap;
use crate::report::{check_chains_with, AxiomReport, Coverage};
use crate::scalar::FieldSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// `h⊗v ↦ h·v` (left) or `v⊗h ↦ v·h` (right).
#[derive(Clone, Debug)]
pub struct ActionStructure {
    side: Side,
    algebra: Arc<Bialgebra>,
    dim: usize,
    map: LinMap,
}

/// `v ↦ v₍₋₁₎⊗v₍₀₎` (left) or `v ↦ v<0>⊗v<1>` (right).
#[derive(Clone, Debug)]
pub struct CoactionStructure {
    side: Side,
    algebra: Arc<Bialgebra>,
    dim: usize,
    map: LinMap,
}

pub(crate) fn same_algebra(a: &Arc<Bialgebra>, b: &Arc<Bialgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn check_shape(what: &str, m: &LinMap, rows: usize, cols: usize, field: FieldSpec) -> Result<()> {
    if m.field() != field {
        return Err(Error::FieldMismatch(field, m.field()));
    }
    if (m.rows(), m.cols()) != (rows, cols) {
        return Err(dims(format!("{what} is {}x{}, expected {rows}x{cols}", m.rows(), m.cols())));
    }
    Ok(())
}

impl ActionStructure {
    pub fn new(side: Side, algebra: Arc<Bialgebra>, dim: usize, map: LinMap) -> Result<Self> {
        check_shape("action", &map, dim, dim * algebra.dim(), algebra.field())?;
        Ok(ActionStructure { side, algebra, dim, map })
    }

    /// `h·m = ε(h)m` (or `m·h = ε(h)m`).
    pub fn trivial(side: Side, algebra: Arc<Bialgebra>, dim: usize) -> Self {
        let eps = algebra.counit();
        let map = match side {
            Side::Left => eps.kron(&LinMap::identity(algebra.field(), dim)),
            Side::Right => LinMap::identity(algebra.field(), dim).kron(eps),
        }
        .expect("same field");
        ActionStructure { side, algebra, dim, map }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn algebra(&self) -> &Arc<Bialgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn map(&self) -> &LinMap {
        &self.map
    }
}

impl CoactionStructure {
    pub fn new(side: Side, algebra: Arc<Bialgebra>, dim: usize, map: LinMap) -> Result<Self> {
        check_shape("coaction", &map, dim * algebra.dim(), dim, algebra.field())?;
        Ok(CoactionStructure { side, algebra, dim, map })
    }

    /// `m ↦ 1⊗m` (or `m⊗1`).
    pub fn trivial(side: Side, algebra: Arc<Bialgebra>, dim: usize) -> Self {
        let unit = algebra.unit();
        let map = match side {
            Side::Left => unit.kron(&LinMap::identity(algebra.field(), dim)),
            Side::Right => LinMap::identity(algebra.field(), dim).kron(unit),
        }
        .expect("same field");
        CoactionStructure { side, algebra, dim, map }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn algebra(&self) -> &Arc<Bialgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn map(&self) -> &LinMap {
        &self.map
    }
}

/// Associativity and unit law of an action, given as a chain factor.
pub(crate) fn action_report(
    h: &Bialgebra,
    side: Side,
    m: usize,
    act: Factor<'_>,
    cov: Coverage,
) -> Result<AxiomReport> {
    let (k, n) = (h.field(), h.dim());
    let mut r = AxiomReport::new();
    let (lhs, rhs, unit) = match side {
        Side::Left => (
            Chain::new(k, n * n * m).then(vec![map(h.mult()), id(m)])?.then_factor(act)?,
            Chain::new(k, n * n * m).then(vec![id(n), act])?.then_factor(act)?,
            Chain::new(k, m).then(vec![map(h.unit()), id(m)])?.then_factor(act)?,
        ),
        Side::Right => (
            Chain::new(k, m * n * n).then(vec![id(m), map(h.mult())])?.then_factor(act)?,
            Chain::new(k, m * n * n).then(vec![act, id(n)])?.then_factor(act)?,
            Chain::new(k, m).then(vec![id(m), map(h.unit())])?.then_factor(act)?,
        ),
    };
    r.push(check_chains_with("assoc_action", &lhs, &rhs, cov)?);
    r.push(check_chains_with("unit_action", &unit, &Chain::new(k, m), cov)?);
    Ok(r)
}

pub(crate) fn coaction_report(
    h: &Bialgebra,
    side: Side,
    m: usize,
    coact: Factor<'_>,
    cov: Coverage,
) -> Result<AxiomReport> {
    let (k, n) = (h.field(), h.dim());
    let base = Chain::new(k, m).then_factor(coact)?;
    let mut r = AxiomReport::new();
    let (lhs, rhs, counit) = match side {
        Side::Left => (
            base.clone().then(vec![map(h.comult()), id(m)])?,
            base.clone().then(vec![id(n), coact])?,
            base.then(vec![map(h.counit()), id(m)])?,
        ),
        Side::Right => (
            base.clone().then(vec![id(m), map(h.comult())])?,
            base.clone().then(vec![coact, id(n)])?,
            base.then(vec![id(m), map(h.counit())])?,
        ),
    };
    r.push(check_chains_with("coassoc_coaction", &lhs, &rhs, cov)?);
    r.push(check_chains_with("counit_coaction", &counit, &Chain::new(k, m), cov)?);
    Ok(r)
}

/// Report `{assoc_action, unit_action}`.
pub fn check_action(a: &ActionStructure) -> Result<AxiomReport> {
    action_report(&a.algebra, a.side, a.dim, map(&a.map), Coverage::Full)
}

/// Report `{coassoc_coaction, counit_coaction}`.
pub fn check_coaction(c: &CoactionStructure) -> Result<AxiomReport> {
    coaction_report(&c.algebra, c.side, c.dim, map(&c.map), Coverage::Full)
}

/// Both sides of the left-left compatibility
/// `(b₁·m)₍₋₁₎b₂ ⊗ (b₁·m)₍₀₎ = b₁m₍₋₁₎ ⊗ b₂·m₍₀₎` as maps `H⊗M → H⊗M`.
pub(crate) fn yd_sides<'a>(
    h: &'a Bialgebra,
    m: usize,
    act: Factor<'a>,
    coact: Factor<'a>,
) -> Result<(Chain<'a>, Chain<'a>)> {
    let (k, n) = (h.field(), h.dim());
    let lhs = Chain::new(k, n * m)
        .then(vec![map(h.comult()), id(m)])?
        .permute(&[n, n, m], &[0, 2, 1])?
        .then(vec![act, id(n)])?
        .then(vec![coact, id(n)])?
        .permute(&[n, m, n], &[0, 2, 1])?
        .then(vec![map(h.mult()), id(m)])?;
    let rhs = Chain::new(k, n * m)
        .then(vec![map(h.comult()), id(m)])?
        .then(vec![id(n), id(n), coact])?
        .permute(&[n, n, n, m], &[0, 2, 1, 3])?
        .then(vec![map(h.mult()), act])?;
    Ok((lhs, rhs))
}

/// Diagonal action `b·(m⊗p) = b₁·m ⊗ b₂·p` on `M⊗P`.
pub(crate) fn diagonal_action<'a>(
    h: &'a Bialgebra,
    m: usize,
    p: usize,
    act_m: Factor<'a>,
    act_p: Factor<'a>,
) -> Result<Chain<'a>> {
    let n = h.dim();
    Chain::new(h.field(), n * m * p)
        .then(vec![map(h.comult()), id(m), id(p)])?
        .permute(&[n, n, m, p], &[0, 2, 1, 3])?
        .then(vec![act_m, act_p])
}

/// Codiagonal left coaction `m⊗p ↦ m₍₋₁₎p₍₋₁₎ ⊗ m₍₀₎ ⊗ p₍₀₎`.
pub(crate) fn codiagonal_coaction<'a>(
    h: &'a Bialgebra,
    m: usize,
    p: usize,
    co_m: Factor<'a>,
    co_p: Factor<'a>,
) -> Result<Chain<'a>> {
    let n = h.dim();
    Chain::new(h.field(), m * p)
        .then(vec![co_m, co_p])?
        .permute(&[n, m, n, p], &[0, 2, 1, 3])?
        .then(vec![map(h.mult()), id(m), id(p)])
}

/// `c(m⊗p) = m₍₋₁₎·p ⊗ m₍₀₎`, a map `M⊗P → P⊗M`.
pub(crate) fn yd_braiding_chain<'a>(
    h: &'a Bialgebra,
    m: usize,
    p: usize,
    co_m: Factor<'a>,
    act_p: Factor<'a>,
) -> Result<Chain<'a>> {
    let n = h.dim();
    Chain::new(h.field(), m * p)
        .then(vec![co_m, id(p)])?
        .permute(&[n, m, p], &[0, 2, 1])?
        .then(vec![act_p, id(m)])
}

/// A left-left Yetter-Drinfeld module.
#[derive(Clone, Debug)]
pub struct YdModule {
    action: ActionStructure,
    coaction: CoactionStructure,
}

impl PartialEq for YdModule {
    fn eq(&self, o: &Self) -> bool {
        same_algebra(self.algebra(), o.algebra())
            && self.action.map == o.action.map
            && self.coaction.map == o.coaction.map
    }
}

impl YdModule {
    /// Shapes only; the axioms are [`check_yd`]'s job.
    pub fn new(algebra: Arc<Bialgebra>, action: LinMap, coaction: LinMap) -> Result<Self> {
        let dim = action.rows();
        Ok(YdModule {
            action: ActionStructure::new(Side::Left, algebra.clone(), dim, action)?,
            coaction: CoactionStructure::new(Side::Left, algebra, dim, coaction)?,
        })
    }

    pub fn from_structures(action: ActionStructure, coaction: CoactionStructure) -> Result<Self> {
        if action.side != Side::Left || coaction.side != Side::Left {
            return Err(Error::Precondition("Yetter-Drinfeld structures must be left-sided".into()));
        }
        if !same_algebra(&action.algebra, &coaction.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        if action.dim != coaction.dim {
            return Err(dims(format!("action on dim {}, coaction on dim {}", action.dim, coaction.dim)));
        }
        Ok(YdModule { action, coaction })
    }

    pub fn algebra(&self) -> &Arc<Bialgebra> {
        &self.action.algebra
    }

    pub fn dim(&self) -> usize {
        self.action.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.action.algebra.field()
    }

    pub fn action(&self) -> &ActionStructure {
        &self.action
    }

    pub fn coaction(&self) -> &CoactionStructure {
        &self.coaction
    }

    pub fn act(&self) -> &LinMap {
        &self.action.map
    }

    pub fn coact(&self) -> &LinMap {
        &self.coaction.map
    }

    /// Same structures over an equal algebra instance.
    pub fn rebase(self, algebra: Arc<Bialgebra>) -> Result<Self> {
        if !same_algebra(self.algebra(), &algebra) {
            return Err(Error::AlgebraMismatch);
        }
        YdModule::new(algebra, self.action.map, self.coaction.map)
    }
}

/// Report `{module, comodule, yd_compat}`.
pub fn check_yd(y: &YdModule) -> Result<AxiomReport> {
    check_yd_with(y, Coverage::Full)
}

pub fn check_yd_with(y: &YdModule, cov: Coverage) -> Result<AxiomReport> {
    let h = y.algebra();
    let m = y.dim();
    let mut r = AxiomReport::new();
    r.push(action_report(h, Side::Left, m, map(y.act()), cov)?.summarize("module"));
    r.push(coaction_report(h, Side::Left, m, map(y.coact()), cov)?.summarize("comodule"));
    let (lhs, rhs) = yd_sides(h, m, map(y.act()), map(y.coact()))?;
    r.push(check_chains_with("yd_compat", &lhs, &rhs, cov)?);
    Ok(r)
}

fn require_same(a: &Arc<Bialgebra>, b: &Arc<Bialgebra>) -> Result<()> {
    if same_algebra(a, b) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// Diagonal action, codiagonal coaction.
pub fn yd_tensor(m: &YdModule, p: &YdModule) -> Result<YdModule> {
    require_same(m.algebra(), p.algebra())?;
    let h = m.algebra();
    let act = diagonal_action(h, m.dim(), p.dim(), map(m.act()), map(p.act()))?.to_linmap();
    let coact = codiagonal_coaction(h, m.dim(), p.dim(), map(m.coact()), map(p.coact()))?.to_linmap();
    YdModule::new(h.clone(), act, coact)
}

/// `c_{M,P}: m⊗p ↦ m₍₋₁₎·p ⊗ m₍₀₎`.
pub fn yd_braiding(m: &YdModule, p: &YdModule) -> Result<LinMap> {
    require_same(m.algebra(), p.algebra())?;
    Ok(yd_braiding_chain(m.algebra(), m.dim(), p.dim(), map(m.coact()), map(p.act()))?.to_linmap())
}

/// `c_{M,P}⁻¹` by exact matrix inversion.
pub fn yd_braiding_inv(m: &YdModule, p: &YdModule) -> Result<LinMap> {
    yd_braiding(m, p)?.invert()?.ok_or(Error::SingularAntipode)
}

/// Report `{linear, colinear}` for `f: M → N`.
pub fn check_intertwiner(f: &LinMap, m: &YdModule, p: &YdModule) -> Result<AxiomReport> {
    require_same(m.algebra(), p.algebra())?;
    check_shape("morphism", f, p.dim(), m.dim(), m.field())?;
    let (k, n) = (m.field(), m.algebra().dim());
    let mut r = AxiomReport::new();
    let lhs = Chain::new(k, n * m.dim()).then_map(m.act())?.then_map(f)?;
    let rhs = Chain::new(k, n * m.dim()).then(vec![id(n), map(f)])?.then_map(p.act())?;
    r.push(check_chains_with("linear", &lhs, &rhs, Coverage::Full)?);
    let lhs = Chain::new(k, m.dim()).then_map(f)?.then_map(p.coact())?;
    let rhs = Chain::new(k, m.dim()).then_map(m.coact())?.then(vec![id(n), map(f)])?;
    r.push(check_chains_with("colinear", &lhs, &rhs, Coverage::Full)?);
    Ok(r)
}

/// Trivial action and coaction on `k^dim`.
pub fn trivial_yd(algebra: Arc<Bialgebra>, dim: usize) -> YdModule {
    YdModule {
        action: ActionStructure::trivial(Side::Left, algebra.clone(), dim),
        coaction: CoactionStructure::trivial(Side::Left, algebra, dim),
    }
}

/// `h·m = h₁ m S(h₂)` as a map `H⊗H → H`.
pub fn left_adjoint_action(h: &HopfAlgebra) -> Result<LinMap> {
    let b = h.bialgebra();
    let n = b.dim();
    Ok(Chain::new(b.field(), n * n)
        .then(vec![map(b.comult()), id(n)])?
        .permute(&[n, n, n], &[0, 2, 1])?
        .then(vec![id(n), id(n), map(h.antipode())])?
        .then(vec![map(b.mult()), id(n)])?
        .then_map(b.mult())?
        .to_linmap())
}

/// `m·h = S(h₁) m h₂` as a map `H⊗H → H`.
pub fn right_adjoint_action(h: &HopfAlgebra) -> Result<LinMap> {
    let b = h.bialgebra();
    let n = b.dim();
    Ok(Chain::new(b.field(), n * n)
        .then(vec![id(n), map(b.comult())])?
        .permute(&[n, n, n], &[1, 0, 2])?
        .then(vec![map(h.antipode()), id(n), id(n)])?
        .then(vec![map(b.mult()), id(n)])?
        .then_map(b.mult())?
        .to_linmap())
}

/// `H` with the adjoint action and the regular coaction `Δ`.
pub fn adjoint_yd(h: &HopfAlgebra) -> Result<YdModule> {
    let b = h.bialgebra();
    YdModule::new(b.clone(), left_adjoint_action(h)?, b.comult().clone())
}

/// `H` with left multiplication and `Δ`; not Yetter-Drinfeld in general.
pub fn regular_yd(b: &Arc<Bialgebra>) -> Result<YdModule> {
    YdModule::new(b.clone(), b.mult().clone(), b.comult().clone())
}
