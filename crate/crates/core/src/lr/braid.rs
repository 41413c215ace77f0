use std::fmt;

use super::{lr_braiding_chain, lr_braiding_inv_chain, require_same, LrBimodule, LrView};
use crate::chain::{id, map, sub, Chain};
use crate::error::{dims, Error, Result};
use crate::hopf::{commutativity_flags, Bialgebra, HopfAlgebra};
use crate::linmap::LinMap;
use crate::report::{check_chains_with, AxiomEntry, AxiomReport, Coverage};

/// Both sides of a braid-shaped identity on `M⊗N⊗P → P⊗N⊗M`:
/// `(c_NP⊗id)(id⊗x)(c_MN⊗id)` and `(id⊗c_MN)(x⊗id)(id⊗c_NP)` where the
/// middle crossing `x: M⊗P → P⊗M` is `c_MP` or `c⁻¹_{P,M}`.
fn braid_entry(name: &str, a: LrView<'_>, b: LrView<'_>, c: LrView<'_>, s_inv: Option<&LinMap>, cov: Coverage) -> Result<AxiomEntry> {
    require_same(a.algebra, b.algebra)?;
    require_same(a.algebra, c.algebra)?;
    let (m, n, p) = (a.dim, b.dim, c.dim);
    let mn = lr_braiding_chain(a, b)?;
    let np = lr_braiding_chain(b, c)?;
    let mp = match s_inv {
        None => lr_braiding_chain(a, c)?,
        Some(s) => lr_braiding_inv_chain(s, c, a)?,
    };
    let k = a.algebra.field();
    let lhs = Chain::new(k, m * n * p)
        .then(vec![sub(&mn), id(p)])?
        .then(vec![id(n), sub(&mp)])?
        .then(vec![sub(&np), id(m)])?;
    let rhs = Chain::new(k, m * n * p)
        .then(vec![id(m), sub(&np)])?
        .then(vec![sub(&mp), id(n)])?
        .then(vec![id(p), sub(&mn)])?;
    check_chains_with(name, &lhs, &rhs, cov)
}

/// Single entry `braid`: `(c_NP⊗id)(id⊗c_MP)(c_MN⊗id) = (id⊗c_MN)(c_MP⊗id)(id⊗c_NP)`.
pub fn check_braid_relation(a: &LrBimodule, b: &LrBimodule, c: &LrBimodule, cov: Coverage) -> Result<AxiomReport> {
    let mut r = AxiomReport::new();
    r.push(braid_entry("braid", a.view(), b.view(), c.view(), None, cov)?);
    Ok(r)
}

/// `{natural_left, natural_right}` for `f: M → M'` against `N`:
/// `c_{M',N}(f⊗id) = (id⊗f)c_{M,N}` and `c_{N,M'}(id⊗f) = (f⊗id)c_{N,M}`.
pub fn check_naturality(f: &LinMap, a: &LrBimodule, a2: &LrBimodule, b: &LrBimodule) -> Result<AxiomReport> {
    require_same(a.algebra(), a2.algebra())?;
    require_same(a.algebra(), b.algebra())?;
    if (f.rows(), f.cols()) != (a2.dim(), a.dim()) {
        return Err(dims(format!("morphism is {}x{}, expected {}x{}", f.rows(), f.cols(), a2.dim(), a.dim())));
    }
    let (k, m, q) = (a.field(), a.dim(), b.dim());
    let mut r = AxiomReport::new();
    let c2 = lr_braiding_chain(a2.view(), b.view())?;
    let c1 = lr_braiding_chain(a.view(), b.view())?;
    let lhs = Chain::new(k, m * q).then(vec![map(f), id(q)])?.then_factor(sub(&c2))?;
    let rhs = Chain::new(k, m * q).then_factor(sub(&c1))?.then(vec![id(q), map(f)])?;
    r.push(check_chains_with("natural_left", &lhs, &rhs, Coverage::Full)?);
    let c2 = lr_braiding_chain(b.view(), a2.view())?;
    let c1 = lr_braiding_chain(b.view(), a.view())?;
    let lhs = Chain::new(k, q * m).then(vec![id(q), map(f)])?.then_factor(sub(&c2))?;
    let rhs = Chain::new(k, q * m).then_factor(sub(&c1))?.then(vec![map(f), id(q)])?;
    r.push(check_chains_with("natural_right", &lhs, &rhs, Coverage::Full)?);
    Ok(r)
}

/// Commutative and cocommutative.
pub fn pseudosym_criterion(h: &Bialgebra) -> bool {
    commutativity_flags(h) == (true, true)
}

/// Single entry `pseudosym`: the braid relation with the middle crossing
/// `c_MP` replaced by `c⁻¹_{P,M}`.
pub fn pseudosym_equation(h: &HopfAlgebra, a: &LrBimodule, b: &LrBimodule, c: &LrBimodule, cov: Coverage) -> Result<AxiomReport> {
    require_same(h.bialgebra(), a.algebra())?;
    let s_inv = h.require_antipode_inv()?;
    let mut r = AxiomReport::new();
    r.push(braid_entry("pseudosym", a.view(), b.view(), c.view(), Some(s_inv), cov)?);
    Ok(r)
}

#[derive(Clone, Debug)]
pub struct TripleOutcome {
    pub names: [String; 3],
    pub entry: AxiomEntry,
}

/// The criterion against the equation evaluated on every ordered triple.
#[derive(Clone, Debug)]
pub struct PseudosymDetermination {
    pub criterion: bool,
    pub outcomes: Vec<TripleOutcome>,
    /// `agreement` passes when the equation holds on every triple exactly
    /// when the criterion is true; otherwise it carries `CONVENTION_MISMATCH`.
    pub agreement: AxiomEntry,
}

impl PseudosymDetermination {
    pub fn equation_holds(&self) -> bool {
        self.outcomes.iter().all(|o| o.entry.passed)
    }

    pub fn counterexample(&self) -> Option<&TripleOutcome> {
        self.outcomes.iter().find(|o| !o.entry.passed)
    }

    pub fn into_result(self) -> Result<Self> {
        if self.agreement.passed {
            Ok(self)
        } else {
            Err(Error::ConventionMismatch(self.agreement.detail.unwrap_or_default()))
        }
    }
}

impl fmt::Display for PseudosymDetermination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "criterion: {}", self.criterion)?;
        for o in &self.outcomes {
            writeln!(f, "  ({}, {}, {}) {}", o.names[0], o.names[1], o.names[2], o.entry)?;
        }
        write!(f, "{}", self.agreement)
    }
}

/// Runs [`pseudosym_equation`] on all ordered triples of `objects`.
pub fn pseudosym_determination(
    h: &HopfAlgebra,
    objects: &[(&str, LrBimodule)],
    cov: Coverage,
) -> Result<PseudosymDetermination> {
    let criterion = pseudosym_criterion(h.bialgebra());
    let mut outcomes = Vec::new();
    for (na, a) in objects {
        for (nb, b) in objects {
            for (nc, c) in objects {
                let entry = pseudosym_equation(h, a, b, c, cov)?.entries.remove(0);
                outcomes.push(TripleOutcome { names: [na, nb, nc].map(|s| s.to_string()), entry });
            }
        }
    }
    let holds = outcomes.iter().all(|o| o.entry.passed);
    let agreement = if holds == criterion {
        AxiomEntry::pass("agreement")
    } else if criterion {
        let o = outcomes.iter().find(|o| !o.entry.passed).expect("a failing triple");
        AxiomEntry::fail(
            "agreement",
            format!("CONVENTION_MISMATCH: criterion holds but ({}, {}, {}) fails: {}", o.names[0], o.names[1], o.names[2], o.entry),
        )
    } else {
        AxiomEntry::fail("agreement", "CONVENTION_MISMATCH: criterion fails but the equation holds on every triple")
    };
    Ok(PseudosymDetermination { criterion, outcomes, agreement })
}
