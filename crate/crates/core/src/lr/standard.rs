use super::{functor_g, LrBimodule};
use crate::double::{drinfeld_double, regular_double_yd};
use crate::error::{Error, Result};
use crate::hopf::{tensor_with_dual_hopf, HopfAlgebra};
use crate::linmap::LinMap;
use crate::rep::{adjoint_yd, left_adjoint_action, right_adjoint_action, ActionStructure, CoactionStructure, Side};

/// Names accepted by [`standard_lr`], smallest objects first.
pub const STANDARD_NAMES: [&str; 5] = ["trivial", "left_adjoint", "right_adjoint", "tensor_adjoint", "from_double_regular"];

/// Built-in LR objects over `h`.
///
/// - `trivial`: `k` with every structure given by `ε` or `1`.
/// - `left_adjoint`: `H` with `h₁mS(h₂)` and `Δ` on the left, trivial on the right.
/// - `right_adjoint`: the mirror, `S(h₁)mh₂` and `Δ` on the right.
/// - `tensor_adjoint`: `G` of the adjoint YD module of `H⊗H*` (dim `n²`).
/// - `from_double_regular`: `G` of the regular `D(H⊗H*)`-module (dim `n⁴`).
pub fn standard_lr(h: &HopfAlgebra, name: &str) -> Result<LrBimodule> {
    let b = h.bialgebra();
    let n = b.dim();
    match name {
        "trivial" => Ok(LrBimodule::trivial(b.clone(), 1)),
        "left_adjoint" => LrBimodule::from_structures(
            ActionStructure::new(Side::Left, b.clone(), n, left_adjoint_action(h)?)?,
            ActionStructure::trivial(Side::Right, b.clone(), n),
            CoactionStructure::new(Side::Left, b.clone(), n, b.comult().clone())?,
            CoactionStructure::trivial(Side::Right, b.clone(), n),
        ),
        "right_adjoint" => LrBimodule::from_structures(
            ActionStructure::trivial(Side::Left, b.clone(), n),
            ActionStructure::new(Side::Right, b.clone(), n, right_adjoint_action(h)?)?,
            CoactionStructure::trivial(Side::Left, b.clone(), n),
            CoactionStructure::new(Side::Right, b.clone(), n, b.comult().clone())?,
        ),
        "tensor_adjoint" => functor_g(&adjoint_yd(&tensor_with_dual_hopf(h)?)?),
        "from_double_regular" => {
            let d = drinfeld_double(&tensor_with_dual_hopf(h)?)?;
            functor_g(&regular_double_yd(&d)?)
        }
        _ => Err(Error::InvalidSpec(format!("unknown LR object {name:?}; expected one of {STANDARD_NAMES:?}"))),
    }
}

/// Every entry of [`STANDARD_NAMES`] over `h`, in order.
pub fn standard_objects(h: &HopfAlgebra) -> Result<Vec<(&'static str, LrBimodule)>> {
    STANDARD_NAMES.iter().map(|&name| Ok((name, standard_lr(h, name)?))).collect()
}

/// `η: k → H`, a morphism from `trivial` to either adjoint object.
pub fn unit_morphism(h: &HopfAlgebra) -> LinMap {
    h.bialgebra().unit().clone()
}
