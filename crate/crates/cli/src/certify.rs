//! The full certification suite over the built-in LR objects of one `H`.

use lrcert_core::double::{check_yd_as_double_module, drinfeld_double};
use lrcert_core::hopf::{check_antipode, check_bialgebra, tensor_with_dual_hopf};
use lrcert_core::lr::{
    check_braid_relation, check_braiding_inverse_with, check_braiding_transport_with, check_lr_morphism,
    check_lr_view, check_monoidal_f_with, check_naturality, check_roundtrip, functor_f_over, functor_g,
    standard_objects, unit_morphism,
};
use lrcert_core::report::DEFAULT_SEED;
use lrcert_core::rep::check_yd_with;
use lrcert_core::{Bialgebra, Coverage, HopfAlgebra, LinMap, LrBimodule, YdModule};

use crate::summary::CheckSummary;

/// Sampling budget for identities whose domain is too large to check on
/// every column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub seed: u64,
    /// Columns drawn for each sampled pair or triple identity.
    pub sample: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { seed: DEFAULT_SEED, sample: 1000 }
    }
}

impl Budget {
    /// Pairs and triples: every column up to 4096, `sample` columns above.
    pub fn combined(self) -> Coverage {
        Coverage::Bounded { limit: 1 << 12, seed: self.seed, count: self.sample }
    }

    /// Single objects: every column up to 2²², 2¹⁶ columns above.
    pub fn single(self) -> Coverage {
        Coverage::Bounded { limit: 1 << 22, seed: self.seed, count: self.sample.max(1 << 16) }
    }
}

/// Bialgebra and antipode identities; returns the Hopf algebra when they
/// hold. A supplied antipode is checked as given.
pub fn certify_hopf(b: Bialgebra, antipode: Option<LinMap>, s: &mut CheckSummary) -> Option<HopfAlgebra> {
    let r = match check_bialgebra(&b) {
        Ok(r) => r,
        Err(e) => {
            s.error("hopf", "bialgebra", e);
            return None;
        }
    };
    s.report("hopf", &r);
    if !r.passed() {
        return None;
    }
    let h = match HopfAlgebra::from_bialgebra(b) {
        Ok(h) => h,
        Err(e) => {
            s.error("hopf", "antipode", e);
            return None;
        }
    };
    let given = antipode.as_ref().unwrap_or(h.antipode());
    match check_antipode(h.bialgebra(), given) {
        Ok(r) => s.report("hopf", &r),
        Err(e) => s.error("hopf", "antipode", e),
    }
    match h.antipode_inv() {
        Some(_) => s.entry("hopf", &lrcert_core::AxiomEntry::pass("antipode_invertible")),
        None => s.error("hopf", "antipode_invertible", "antipode is singular"),
    }
    s.passed().then_some(h)
}

struct Object {
    name: &'static str,
    lr: LrBimodule,
    f: YdModule,
}

/// Runs every suite and appends the results to `s`.
pub fn certify(h: &HopfAlgebra, budget: Budget, s: &mut CheckSummary) {
    if let Err(e) = run(h, budget, s) {
        s.error("certify", "setup", e);
    }
}

fn run(h: &HopfAlgebra, budget: Budget, s: &mut CheckSummary) -> lrcert_core::Result<()> {
    let k = tensor_with_dual_hopf(h)?;
    let mut objects = Vec::new();
    for (name, lr) in standard_objects(h)? {
        let f = functor_f_over(&lr, k.bialgebra())?;
        objects.push(Object { name, lr, f });
    }
    for o in &objects {
        s.report(&format!("lr/{}", o.name), &check_lr_view(o.lr.view(), budget.single())?);
        s.report(&format!("F/{}", o.name), &check_yd_with(&o.f, budget.single())?);
        s.report(&format!("G/{}", o.name), &check_lr_view(functor_g(&o.f)?.view(), budget.single())?);
        s.report(&format!("roundtrip/{}", o.name), &check_roundtrip(&o.lr, &o.f)?);
    }
    for a in &objects {
        for b in &objects {
            let pair = format!("{},{}", a.name, b.name);
            let cov = budget.combined();
            s.report(&format!("monoidal/{pair}"), &check_monoidal_f_with(&a.lr, &a.f, &b.lr, &b.f, cov)?);
            s.report(&format!("transport/{pair}"), &check_braiding_transport_with(&a.lr, &a.f, &b.lr, &b.f, cov)?);
            s.report(&format!("inverse/{pair}"), &check_braiding_inverse_with(h, &a.lr, &b.lr, cov)?);
        }
    }
    for a in &objects {
        for b in &objects {
            for c in &objects {
                let suite = format!("braid/{},{},{}", a.name, b.name, c.name);
                s.report(&suite, &check_braid_relation(&a.lr, &b.lr, &c.lr, budget.combined())?);
            }
        }
    }
    let eta = unit_morphism(h);
    let trivial = &objects[0].lr;
    for target in objects.iter().filter(|o| o.name.ends_with("_adjoint") && o.lr.dim() == h.dim()) {
        let suite = format!("morphism/unit:{}", target.name);
        s.report(&suite, &check_lr_morphism(&eta, trivial, &target.lr)?);
        for other in &objects {
            let r = check_naturality(&eta, trivial, &target.lr, &other.lr)?;
            s.report(&format!("naturality/unit:{},{}", target.name, other.name), &r);
        }
    }
    let d = drinfeld_double(&k)?;
    for o in &objects {
        s.report(&format!("double/{}", o.name), &check_yd_as_double_module(&o.f, &d, budget.combined())?);
    }
    Ok(())
}
