use std::sync::Arc;

use super::{lr_braiding_chain, require_same, LrBimodule, LrTensorChains, LrView};
use crate::chain::{id, map, Chain};
use crate::double::pairing;
use crate::error::{Error, Result};
use crate::hopf::{tensor_with_dual, Bialgebra, Origin};
use crate::linmap::LinMap;
use crate::rep::{codiagonal_coaction, diagonal_action, same_algebra, yd_braiding_chain, YdModule};
use crate::report::{check_chains_with, check_maps, AxiomEntry, AxiomReport, Coverage};

/// `H ⊗ H*` with its provenance tag.
pub fn tensor_square_of(h: &Arc<Bialgebra>) -> Result<Arc<Bialgebra>> {
    Ok(Arc::new(tensor_with_dual(h)?))
}

/// `H` for a base tagged as `H ⊗ H*`.
fn square_root(k: &Bialgebra) -> Result<&Arc<Bialgebra>> {
    match k.origin() {
        Origin::TensorWithDual(h) => Ok(h),
        Origin::Plain => Err(Error::BaseNotTensorSquare),
    }
}

/// `(h⊗f)·m = ⟨f, m<1>⟩ h·m<0>`.
fn f_action<'a>(v: LrView<'a>, eval: &'a LinMap) -> Result<Chain<'a>> {
    let (n, m) = (v.algebra.dim(), v.dim);
    Chain::new(v.algebra.field(), n * n * m)
        .then(vec![id(n), id(n), v.rcoact])?
        .permute(&[n, n, m, n], &[0, 2, 1, 3])?
        .then(vec![v.lact, map(eval)])
}

/// `ρ(m) = Σ m₍₋₁₎⊗h^i ⊗ m₍₀₎·h_i`.
fn f_coaction<'a>(v: LrView<'a>, coev: &'a LinMap) -> Result<Chain<'a>> {
    let (n, m) = (v.algebra.dim(), v.dim);
    Chain::new(v.algebra.field(), m)
        .then_factor(v.lcoact)?
        .then(vec![id(n), id(m), map(coev)])?
        .permute(&[n, m, n, n], &[0, 2, 1, 3])?
        .then(vec![id(n), id(n), v.ract])
}

/// Dual-basis pairing and copairing for a fixed `H`.
struct Pairing {
    coev: LinMap,
    eval: LinMap,
}

impl Pairing {
    fn of(h: &Bialgebra) -> Self {
        let coev = pairing(h.field(), h.dim());
        Pairing { eval: coev.transpose(), coev }
    }
}

/// `F(M)` over a freshly built `H⊗H*`.
pub fn functor_f(m: &LrBimodule) -> Result<YdModule> {
    functor_f_over(m, &tensor_square_of(m.algebra())?)
}

/// `F(M)` over a given `K = H⊗H*`, so that images of different objects
/// share one base instance.
pub fn functor_f_over(m: &LrBimodule, k: &Arc<Bialgebra>) -> Result<YdModule> {
    if !same_algebra(square_root(k)?, m.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let p = Pairing::of(m.algebra());
    let v = m.view();
    YdModule::new(k.clone(), f_action(v, &p.eval)?.to_linmap(), f_coaction(v, &p.coev)?.to_linmap())
}

/// `G(M)` for a YD module over a base tagged as `H⊗H*`.
pub fn functor_g(y: &YdModule) -> Result<LrBimodule> {
    let h = square_root(y.algebra())?;
    let (k, n, m) = (h.field(), h.dim(), y.dim());
    let p = Pairing::of(h);
    let eps_h = h.counit();
    let one_h = h.unit();
    // unit and counit of H* are ε^T and 1^T
    let one_dual = eps_h.transpose();
    let eps_dual = one_h.transpose();

    let lact = Chain::new(k, n * m).then(vec![id(n), map(&one_dual), id(m)])?.then_map(y.act())?.to_linmap();
    let lcoact = Chain::new(k, m).then_map(y.coact())?.then(vec![id(n), map(&eps_dual), id(m)])?.to_linmap();
    let ract = Chain::new(k, m * n)
        .then(vec![map(y.coact()), id(n)])?
        .then(vec![map(eps_h), id(n), id(m), id(n)])?
        .permute(&[n, m, n], &[1, 0, 2])?
        .then(vec![id(m), map(&p.eval)])?
        .to_linmap();
    let rcoact = Chain::new(k, m)
        .then(vec![map(&p.coev), id(m)])?
        .permute(&[n, n, m], &[0, 2, 1])?
        .then(vec![map(one_h), id(n), id(m), id(n)])?
        .then(vec![map(y.act()), id(n)])?
        .to_linmap();
    LrBimodule::new(h.clone(), lact, ract, lcoact, rcoact)
}

/// `{GF_id, FG_id}`: `G(F(M)) = M` on all four maps and `F(G(Y)) = Y`
/// on action and coaction.
pub fn check_roundtrip(m: &LrBimodule, y: &YdModule) -> Result<AxiomReport> {
    let mut r = AxiomReport::new();
    let gf = functor_g(&functor_f(m)?)?;
    r.push(structure_entry("GF_id", gf.maps().iter().zip(m.maps()).map(|(a, b)| (a.0, a.1, b.1)))?);
    let fg = functor_f_over(&functor_g(y)?, y.algebra())?;
    r.push(structure_entry("FG_id", [("action", fg.act(), y.act()), ("coaction", fg.coact(), y.coact())].into_iter())?);
    Ok(r)
}

fn structure_entry<'a>(
    name: &str,
    pairs: impl Iterator<Item = (&'static str, &'a LinMap, &'a LinMap)>,
) -> Result<AxiomEntry> {
    for (what, a, b) in pairs {
        let e = check_maps(name, a, b)?;
        if !e.passed {
            return Ok(e.with_detail(what));
        }
    }
    Ok(AxiomEntry::pass(name))
}

/// `{action_eq, coaction_eq}` comparing `F(M⊗N)` with `F(M)⊗F(N)`.
pub fn check_monoidal_f(a: &LrBimodule, b: &LrBimodule) -> Result<AxiomReport> {
    let k = tensor_square_of(a.algebra())?;
    check_monoidal_f_with(a, &functor_f_over(a, &k)?, b, &functor_f_over(b, &k)?, Coverage::Full)
}

/// [`check_monoidal_f`] given the images `F(M)`, `F(N)`, on `cov`'s columns.
pub fn check_monoidal_f_with(
    a: &LrBimodule,
    fa: &YdModule,
    b: &LrBimodule,
    fb: &YdModule,
    cov: Coverage,
) -> Result<AxiomReport> {
    require_same(a.algebra(), b.algebra())?;
    require_same(fa.algebra(), fb.algebra())?;
    let kb = fa.algebra();
    let p = Pairing::of(a.algebra());
    let t = LrTensorChains::new(a.view(), b.view())?;
    let (m, q) = (a.dim(), b.dim());
    let mut r = AxiomReport::new();
    let lhs = f_action(t.view(), &p.eval)?;
    let rhs = diagonal_action(kb, m, q, map(fa.act()), map(fb.act()))?;
    r.push(check_chains_with("action_eq", &lhs, &rhs, cov)?);
    let lhs = f_coaction(t.view(), &p.coev)?;
    let rhs = codiagonal_coaction(kb, m, q, map(fa.coact()), map(fb.coact()))?;
    r.push(check_chains_with("coaction_eq", &lhs, &rhs, cov)?);
    Ok(r)
}

/// Single entry `transport`: `c^{YD}_{F(M),F(N)} = c_{M,N}`.
pub fn check_braiding_transport(a: &LrBimodule, b: &LrBimodule) -> Result<AxiomReport> {
    let k = tensor_square_of(a.algebra())?;
    check_braiding_transport_with(a, &functor_f_over(a, &k)?, b, &functor_f_over(b, &k)?, Coverage::Full)
}

pub fn check_braiding_transport_with(
    a: &LrBimodule,
    fa: &YdModule,
    b: &LrBimodule,
    fb: &YdModule,
    cov: Coverage,
) -> Result<AxiomReport> {
    require_same(fa.algebra(), fb.algebra())?;
    let lhs = yd_braiding_chain(fa.algebra(), a.dim(), b.dim(), map(fa.coact()), map(fb.act()))?;
    let rhs = lr_braiding_chain(a.view(), b.view())?;
    let mut r = AxiomReport::new();
    r.push(check_chains_with("transport", &lhs, &rhs, cov)?);
    Ok(r)
}
