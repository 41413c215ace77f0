//! Yetter-Drinfeld-Long bimodules: one space with left and right actions
//! and coactions of `H` satisfying the two YD and two Long conditions.
//!
//! The functors `F` and `G` identify them with left-left YD modules over
//! `H⊗H*` (basis `h_i⊗h^j` at `i·n + j`). Every construction is available
//! both materialized and as a lazy [`Chain`] over an [`LrView`], so that
//! identities on large tensor products can be checked on sampled columns.

mod braid;
mod functor;
mod standard;

use std::sync::Arc;

pub use braid::{
    check_braid_relation, check_naturality, pseudosym_criterion, pseudosym_determination,
    pseudosym_equation, PseudosymDetermination, TripleOutcome,
};
pub use functor::{
    check_braiding_transport, check_braiding_transport_with, check_monoidal_f, check_monoidal_f_with,
    check_roundtrip, functor_f, functor_f_over, functor_g, tensor_square_of,
};
pub use standard::{standard_lr, standard_objects, unit_morphism, STANDARD_NAMES};

use crate::chain::{id, map, sub, Chain, Factor};
use crate::error::{dims, Error, Result};
use crate::hopf::{Bialgebra, HopfAlgebra};
use crate::linmap::LinMap;
use crate::rep::{
    action_report, codiagonal_coaction, diagonal_action, same_algebra, yd_sides, ActionStructure,
    CoactionStructure, Side,
};
use crate::report::{check_chains_with, AxiomReport, Coverage};
use crate::scalar::FieldSpec;

/// An object of `LR(H)`.
#[derive(Clone, Debug)]
pub struct LrBimodule {
    lact: ActionStructure,
    ract: ActionStructure,
    lcoact: CoactionStructure,
    rcoact: CoactionStructure,
}

impl PartialEq for LrBimodule {
    fn eq(&self, o: &Self) -> bool {
        same_algebra(self.algebra(), o.algebra())
            && self.lact.map() == o.lact.map()
            && self.ract.map() == o.ract.map()
            && self.lcoact.map() == o.lcoact.map()
            && self.rcoact.map() == o.rcoact.map()
    }
}

/// The four structure maps of an LR object as chain factors.
#[derive(Clone, Copy, Debug)]
pub struct LrView<'a> {
    pub algebra: &'a Bialgebra,
    pub dim: usize,
    pub lact: Factor<'a>,
    pub ract: Factor<'a>,
    pub lcoact: Factor<'a>,
    pub rcoact: Factor<'a>,
}

impl LrBimodule {
    /// Shapes only; the axioms are [`check_lr`]'s job.
    pub fn new(algebra: Arc<Bialgebra>, lact: LinMap, ract: LinMap, lcoact: LinMap, rcoact: LinMap) -> Result<Self> {
        let dim = lact.rows();
        Ok(LrBimodule {
            lact: ActionStructure::new(Side::Left, algebra.clone(), dim, lact)?,
            ract: ActionStructure::new(Side::Right, algebra.clone(), dim, ract)?,
            lcoact: CoactionStructure::new(Side::Left, algebra.clone(), dim, lcoact)?,
            rcoact: CoactionStructure::new(Side::Right, algebra, dim, rcoact)?,
        })
    }

    pub fn from_structures(
        lact: ActionStructure,
        ract: ActionStructure,
        lcoact: CoactionStructure,
        rcoact: CoactionStructure,
    ) -> Result<Self> {
        let sides = [lact.side(), ract.side(), lcoact.side(), rcoact.side()];
        if sides != [Side::Left, Side::Right, Side::Left, Side::Right] {
            return Err(Error::Precondition("structures given on the wrong sides".into()));
        }
        let a = lact.algebra();
        if ![ract.algebra(), lcoact.algebra(), rcoact.algebra()].iter().all(|b| same_algebra(a, b)) {
            return Err(Error::AlgebraMismatch);
        }
        if [ract.dim(), lcoact.dim(), rcoact.dim()].iter().any(|&d| d != lact.dim()) {
            return Err(dims("structures act on spaces of different dimension"));
        }
        Ok(LrBimodule { lact, ract, lcoact, rcoact })
    }

    /// All four structures trivial on `k^dim`.
    pub fn trivial(algebra: Arc<Bialgebra>, dim: usize) -> Self {
        LrBimodule {
            lact: ActionStructure::trivial(Side::Left, algebra.clone(), dim),
            ract: ActionStructure::trivial(Side::Right, algebra.clone(), dim),
            lcoact: CoactionStructure::trivial(Side::Left, algebra.clone(), dim),
            rcoact: CoactionStructure::trivial(Side::Right, algebra, dim),
        }
    }

    pub fn algebra(&self) -> &Arc<Bialgebra> {
        self.lact.algebra()
    }

    pub fn dim(&self) -> usize {
        self.lact.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra().field()
    }

    pub fn lact(&self) -> &LinMap {
        self.lact.map()
    }

    pub fn ract(&self) -> &LinMap {
        self.ract.map()
    }

    pub fn lcoact(&self) -> &LinMap {
        self.lcoact.map()
    }

    pub fn rcoact(&self) -> &LinMap {
        self.rcoact.map()
    }

    pub fn structures(&self) -> (&ActionStructure, &ActionStructure, &CoactionStructure, &CoactionStructure) {
        (&self.lact, &self.ract, &self.lcoact, &self.rcoact)
    }

    /// `(name, map)` for the four structures in declaration order.
    pub fn maps(&self) -> [(&'static str, &LinMap); 4] {
        [("lact", self.lact()), ("ract", self.ract()), ("lcoact", self.lcoact()), ("rcoact", self.rcoact())]
    }

    pub fn view(&self) -> LrView<'_> {
        LrView {
            algebra: self.algebra(),
            dim: self.dim(),
            lact: map(self.lact()),
            ract: map(self.ract()),
            lcoact: map(self.lcoact()),
            rcoact: map(self.rcoact()),
        }
    }

    /// Same structures over an equal algebra instance.
    pub fn rebase(self, algebra: Arc<Bialgebra>) -> Result<Self> {
        if !same_algebra(self.algebra(), &algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let [l, r, lc, rc] = [self.lact(), self.ract(), self.lcoact(), self.rcoact()].map(Clone::clone);
        LrBimodule::new(algebra, l, r, lc, rc)
    }
}

pub(crate) fn require_same(a: &Bialgebra, b: &Bialgebra) -> Result<()> {
    if std::ptr::eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// The ten defining identities.
pub fn check_lr(m: &LrBimodule) -> Result<AxiomReport> {
    check_lr_view(m.view(), Coverage::Full)
}

/// [`check_lr`] on a view, each identity checked on `cov`'s columns.
pub fn check_lr_view(v: LrView<'_>, cov: Coverage) -> Result<AxiomReport> {
    let h = v.algebra;
    let (k, n, m) = (h.field(), h.dim(), v.dim);
    let mut r = AxiomReport::new();
    r.push(action_report(h, Side::Left, m, v.lact, cov)?.summarize("lmod"));
    r.push(action_report(h, Side::Right, m, v.ract, cov)?.summarize("rmod"));
    let lhs = Chain::new(k, n * m * n).then(vec![v.lact, id(n)])?.then_factor(v.ract)?;
    let rhs = Chain::new(k, n * m * n).then(vec![id(n), v.ract])?.then_factor(v.lact)?;
    r.push(check_chains_with("bimod", &lhs, &rhs, cov)?);
    r.push(crate::rep::coaction_report(h, Side::Left, m, v.lcoact, cov)?.summarize("lcomod"));
    r.push(crate::rep::coaction_report(h, Side::Right, m, v.rcoact, cov)?.summarize("rcomod"));
    let lhs = Chain::new(k, m).then_factor(v.rcoact)?.then(vec![v.lcoact, id(n)])?;
    let rhs = Chain::new(k, m).then_factor(v.lcoact)?.then(vec![id(n), v.rcoact])?;
    r.push(check_chains_with("bicomod", &lhs, &rhs, cov)?);

    // (h₁·m)₍₋₁₎h₂ ⊗ (h₁·m)₍₀₎ = h₁m₍₋₁₎ ⊗ h₂·m₍₀₎
    let (lhs, rhs) = yd_sides(h, m, v.lact, v.lcoact)?;
    r.push(check_chains_with("yd_ll", &lhs, &rhs, cov)?);

    // (h·m)<0> ⊗ (h·m)<1> = h·m<0> ⊗ m<1>
    let lhs = Chain::new(k, n * m).then_factor(v.lact)?.then_factor(v.rcoact)?;
    let rhs = Chain::new(k, n * m).then(vec![id(n), v.rcoact])?.then(vec![v.lact, id(n)])?;
    r.push(check_chains_with("long_lr", &lhs, &rhs, cov)?);

    // (m·h₂)<0> ⊗ h₁(m·h₂)<1> = m<0>·h₁ ⊗ m<1>h₂, both sides M⊗H → M⊗H
    let lhs = Chain::new(k, m * n)
        .then(vec![id(m), map(h.comult())])?
        .permute(&[m, n, n], &[1, 0, 2])?
        .then(vec![id(n), v.ract])?
        .then(vec![id(n), v.rcoact])?
        .permute(&[n, m, n], &[1, 0, 2])?
        .then(vec![id(m), map(h.mult())])?;
    let rhs = Chain::new(k, m * n)
        .then(vec![v.rcoact, map(h.comult())])?
        .permute(&[m, n, n, n], &[0, 2, 1, 3])?
        .then(vec![v.ract, map(h.mult())])?;
    r.push(check_chains_with("yd_rr", &lhs, &rhs, cov)?);

    // (m·h)₍₋₁₎ ⊗ (m·h)₍₀₎ = m₍₋₁₎ ⊗ m₍₀₎·h
    let lhs = Chain::new(k, m * n).then_factor(v.ract)?.then_factor(v.lcoact)?;
    let rhs = Chain::new(k, m * n).then(vec![v.lcoact, id(n)])?.then(vec![id(n), v.ract])?;
    r.push(check_chains_with("long_rl", &lhs, &rhs, cov)?);
    Ok(r)
}

/// The four structures of `M⊗N` as lazy chains.
pub struct LrTensorChains<'a> {
    algebra: &'a Bialgebra,
    dim: usize,
    lact: Chain<'a>,
    ract: Chain<'a>,
    lcoact: Chain<'a>,
    rcoact: Chain<'a>,
}

impl<'a> LrTensorChains<'a> {
    pub fn new(a: LrView<'a>, b: LrView<'a>) -> Result<Self> {
        require_same(a.algebra, b.algebra)?;
        let h = a.algebra;
        let (k, n, m, p) = (h.field(), h.dim(), a.dim, b.dim);
        let ract = Chain::new(k, m * p * n)
            .then(vec![id(m), id(p), map(h.comult())])?
            .permute(&[m, p, n, n], &[0, 2, 1, 3])?
            .then(vec![a.ract, b.ract])?;
        let rcoact = Chain::new(k, m * p)
            .then(vec![a.rcoact, b.rcoact])?
            .permute(&[m, n, p, n], &[0, 2, 1, 3])?
            .then(vec![id(m), id(p), map(h.mult())])?;
        Ok(LrTensorChains {
            algebra: h,
            dim: m * p,
            lact: diagonal_action(h, m, p, a.lact, b.lact)?,
            ract,
            lcoact: codiagonal_coaction(h, m, p, a.lcoact, b.lcoact)?,
            rcoact,
        })
    }

    pub fn view(&self) -> LrView<'_> {
        LrView {
            algebra: self.algebra,
            dim: self.dim,
            lact: sub(&self.lact),
            ract: sub(&self.ract),
            lcoact: sub(&self.lcoact),
            rcoact: sub(&self.rcoact),
        }
    }
}

/// `M⊗N` with diagonal actions and codiagonal coactions.
pub fn lr_tensor(a: &LrBimodule, b: &LrBimodule) -> Result<LrBimodule> {
    let t = LrTensorChains::new(a.view(), b.view())?;
    LrBimodule::new(
        a.algebra().clone(),
        t.lact.to_linmap(),
        t.ract.to_linmap(),
        t.lcoact.to_linmap(),
        t.rcoact.to_linmap(),
    )
}

/// `c_{M,N}: m⊗n ↦ m₍₋₁₎·n<0> ⊗ m₍₀₎·n<1>` as a chain `M⊗N → N⊗M`.
pub fn lr_braiding_chain<'a>(a: LrView<'a>, b: LrView<'a>) -> Result<Chain<'a>> {
    require_same(a.algebra, b.algebra)?;
    let h = a.algebra;
    let (n, m, p) = (h.dim(), a.dim, b.dim);
    Chain::new(h.field(), m * p)
        .then(vec![a.lcoact, b.rcoact])?
        .permute(&[n, m, p, n], &[0, 2, 1, 3])?
        .then(vec![b.lact, a.ract])
}

/// `c⁻¹_{M,N}: n⊗m ↦ m₍₀₎·S⁻¹(n<1>) ⊗ S⁻¹(m₍₋₁₎)·n<0>` as a chain `N⊗M → M⊗N`.
pub fn lr_braiding_inv_chain<'a>(s_inv: &'a LinMap, a: LrView<'a>, b: LrView<'a>) -> Result<Chain<'a>> {
    require_same(a.algebra, b.algebra)?;
    let h = a.algebra;
    let (n, m, p) = (h.dim(), a.dim, b.dim);
    Chain::new(h.field(), p * m)
        .then(vec![b.rcoact, a.lcoact])?
        .then(vec![id(p), map(s_inv), map(s_inv), id(m)])?
        .permute(&[p, n, n, m], &[3, 1, 2, 0])?
        .then(vec![a.ract, b.lact])
}

pub fn lr_braiding(a: &LrBimodule, b: &LrBimodule) -> Result<LinMap> {
    Ok(lr_braiding_chain(a.view(), b.view())?.to_linmap())
}

/// The displayed inverse of `c_{M,N}`, a map `N⊗M → M⊗N`.
pub fn lr_braiding_inv(h: &HopfAlgebra, a: &LrBimodule, b: &LrBimodule) -> Result<LinMap> {
    require_same(h.bialgebra(), a.algebra())?;
    let s_inv = h.require_antipode_inv()?;
    Ok(lr_braiding_inv_chain(s_inv, a.view(), b.view())?.to_linmap())
}

/// `{inv_left: c⁻¹∘c = id, inv_right: c∘c⁻¹ = id}`.
pub fn check_braiding_inverse(h: &HopfAlgebra, a: &LrBimodule, b: &LrBimodule) -> Result<AxiomReport> {
    check_braiding_inverse_with(h, a, b, Coverage::Full)
}

pub fn check_braiding_inverse_with(h: &HopfAlgebra, a: &LrBimodule, b: &LrBimodule, cov: Coverage) -> Result<AxiomReport> {
    require_same(h.bialgebra(), a.algebra())?;
    let s_inv = h.require_antipode_inv()?;
    let c = lr_braiding_chain(a.view(), b.view())?;
    let ci = lr_braiding_inv_chain(s_inv, a.view(), b.view())?;
    let (k, d) = (a.field(), a.dim() * b.dim());
    let mut r = AxiomReport::new();
    let lhs = Chain::new(k, d).then_factor(sub(&c))?.then_factor(sub(&ci))?;
    r.push(check_chains_with("inv_left", &lhs, &Chain::new(k, d), cov)?);
    let lhs = Chain::new(k, d).then_factor(sub(&ci))?.then_factor(sub(&c))?;
    r.push(check_chains_with("inv_right", &lhs, &Chain::new(k, d), cov)?);
    Ok(r)
}

/// `{lact, ract, lcoact, rcoact}` for `f: M → N` (bilinear and bicolinear).
pub fn check_lr_morphism(f: &LinMap, a: &LrBimodule, b: &LrBimodule) -> Result<AxiomReport> {
    require_same(a.algebra(), b.algebra())?;
    if (f.rows(), f.cols()) != (b.dim(), a.dim()) {
        return Err(dims(format!("morphism is {}x{}, expected {}x{}", f.rows(), f.cols(), b.dim(), a.dim())));
    }
    let (k, n, m) = (a.field(), a.algebra().dim(), a.dim());
    let mut r = AxiomReport::new();
    let full = Coverage::Full;
    let lhs = Chain::new(k, n * m).then_map(a.lact())?.then_map(f)?;
    let rhs = Chain::new(k, n * m).then(vec![id(n), map(f)])?.then_map(b.lact())?;
    r.push(check_chains_with("lact", &lhs, &rhs, full)?);
    let lhs = Chain::new(k, m * n).then_map(a.ract())?.then_map(f)?;
    let rhs = Chain::new(k, m * n).then(vec![map(f), id(n)])?.then_map(b.ract())?;
    r.push(check_chains_with("ract", &lhs, &rhs, full)?);
    let lhs = Chain::new(k, m).then_map(f)?.then_map(b.lcoact())?;
    let rhs = Chain::new(k, m).then_map(a.lcoact())?.then(vec![id(n), map(f)])?;
    r.push(check_chains_with("lcoact", &lhs, &rhs, full)?);
    let lhs = Chain::new(k, m).then_map(f)?.then_map(b.rcoact())?;
    let rhs = Chain::new(k, m).then_map(a.rcoact())?.then(vec![map(f), id(n)])?;
    r.push(check_chains_with("rcoact", &lhs, &rhs, full)?);
    Ok(r)
}

#[cfg(test)]
mod tests;
