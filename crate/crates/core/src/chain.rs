//! Lazy composites of tensor products and factor permutations.
//!
//! An identity such as `mult∘(mult⊗id) = mult∘(id⊗mult)` would need the
//! Kronecker factors `mult⊗id` materialized as huge sparse matrices. A
//! [`Chain`] instead pushes one domain basis vector at a time through its
//! stages, so the cost of a check is proportional to the number of nonzero
//! paths, not to the size of the intermediate spaces.

use crate::error::{dims, Result};
use crate::exec::Exec;
use crate::linmap::{normalize, permute_index, LinMap, SparseVec, Witness};
use crate::scalar::{FieldSpec, Scalar};

/// One tensor factor of a [`Stage::Tensor`].
#[derive(Clone, Copy, Debug)]
pub enum Factor<'a> {
    Id(usize),
    Map(&'a LinMap),
    /// A lazily evaluated composite, applied one basis vector at a time.
    Sub(&'a Chain<'a>),
}

impl Factor<'_> {
    fn domain(&self) -> usize {
        match self {
            Factor::Id(n) => *n,
            Factor::Map(m) => m.cols(),
            Factor::Sub(c) => c.domain,
        }
    }

    fn codomain(&self) -> usize {
        match self {
            Factor::Id(n) => *n,
            Factor::Map(m) => m.rows(),
            Factor::Sub(c) => c.codomain,
        }
    }
}

pub fn id(n: usize) -> Factor<'static> {
    Factor::Id(n)
}

pub fn map(m: &LinMap) -> Factor<'_> {
    Factor::Map(m)
}

pub fn sub<'a>(c: &'a Chain<'a>) -> Factor<'a> {
    Factor::Sub(c)
}

#[derive(Clone, Debug)]
pub enum Stage<'a> {
    Tensor(Vec<Factor<'a>>),
    /// Output factor `p` is input factor `perm[p]`.
    Permute { dims: Vec<usize>, perm: Vec<usize> },
}

/// A composite of stages, applied in order (first stage first).
#[derive(Clone, Debug)]
pub struct Chain<'a> {
    field: FieldSpec,
    domain: usize,
    codomain: usize,
    stages: Vec<Stage<'a>>,
}

impl<'a> Chain<'a> {
    pub fn new(field: FieldSpec, domain: usize) -> Self {
        Chain { field, domain, codomain: domain, stages: Vec::new() }
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    /// Appends `f₁ ⊗ f₂ ⊗ …`.
    pub fn then(mut self, factors: Vec<Factor<'a>>) -> Result<Self> {
        let d: usize = factors.iter().map(Factor::domain).product();
        if d != self.codomain {
            return Err(dims(format!("stage expects dim {d}, chain provides {}", self.codomain)));
        }
        for f in &factors {
            let field = match f {
                Factor::Id(_) => continue,
                Factor::Map(m) => m.field(),
                Factor::Sub(c) => c.field,
            };
            if field != self.field {
                return Err(crate::Error::FieldMismatch(self.field, field));
            }
        }
        self.codomain = factors.iter().map(Factor::codomain).product();
        self.stages.push(Stage::Tensor(factors));
        Ok(self)
    }

    pub fn then_map(self, m: &'a LinMap) -> Result<Self> {
        self.then(vec![Factor::Map(m)])
    }

    pub fn then_factor(self, f: Factor<'a>) -> Result<Self> {
        self.then(vec![f])
    }

    /// Appends a reordering of tensor factors of dimensions `dims`.
    pub fn permute(mut self, dims_in: &[usize], perm: &[usize]) -> Result<Self> {
        let d: usize = dims_in.iter().product();
        if d != self.codomain {
            return Err(dims(format!("permutation expects dim {d}, chain provides {}", self.codomain)));
        }
        let mut seen = vec![false; dims_in.len()];
        if perm.len() != dims_in.len() || perm.iter().any(|&p| p >= seen.len() || std::mem::replace(&mut seen[p], true)) {
            return Err(dims(format!("{perm:?} is not a permutation of {} factors", dims_in.len())));
        }
        if perm.iter().enumerate().all(|(i, &p)| i == p) {
            return Ok(self);
        }
        self.stages.push(Stage::Permute { dims: dims_in.to_vec(), perm: perm.to_vec() });
        Ok(self)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn apply(&self, v: SparseVec) -> SparseVec {
        self.stages.iter().fold(v, |v, stage| apply_stage(stage, v))
    }

    pub fn apply_basis(&self, j: usize) -> SparseVec {
        self.apply(vec![(j, self.field.one())])
    }

    pub fn to_linmap(&self) -> LinMap {
        self.to_linmap_with(Exec::default())
    }

    pub fn to_linmap_with(&self, exec: Exec) -> LinMap {
        let columns = exec.map_range(self.domain, |j| self.apply_basis(j));
        LinMap::from_normalized(self.field, self.codomain, columns)
    }
}

fn apply_stage(stage: &Stage<'_>, v: SparseVec) -> SparseVec {
    match stage {
        Stage::Permute { dims, perm } => {
            normalize(v.into_iter().map(|(j, s)| (permute_index(dims, perm, j), s)).collect())
        }
        Stage::Tensor(factors) => {
            match factors.as_slice() {
                [Factor::Map(m)] => return m.apply(&v),
                [Factor::Sub(c)] => return c.apply(v),
                _ => {}
            }
            let mut out: Vec<(usize, Scalar)> = Vec::new();
            let mut digits = vec![0usize; factors.len()];
            for (j, s) in v {
                let mut rest = j;
                for (k, f) in factors.iter().enumerate().rev() {
                    let d = f.domain();
                    digits[k] = rest % d;
                    rest /= d;
                }
                let mut acc: Vec<(usize, Scalar)> = vec![(0, s)];
                for (f, &dgt) in factors.iter().zip(&digits) {
                    let cod = f.codomain();
                    acc = match f {
                        Factor::Id(_) => acc.into_iter().map(|(i, x)| (i * cod + dgt, x)).collect(),
                        Factor::Map(m) => expand(&acc, m.column(dgt), cod),
                        Factor::Sub(c) => expand(&acc, &c.apply_basis(dgt), cod),
                    };
                    if acc.is_empty() {
                        break;
                    }
                }
                out.extend(acc);
            }
            normalize(out)
        }
    }
}

fn expand(acc: &[(usize, Scalar)], col: &SparseVec, cod: usize) -> Vec<(usize, Scalar)> {
    let mut next = Vec::with_capacity(acc.len() * col.len());
    for (i, x) in acc {
        for (r, y) in col {
            next.push((i * cod + r, x * y));
        }
    }
    next
}

/// Compares two chains column by column and returns the first differing
/// coordinate in row-major order.
pub fn first_difference(lhs: &Chain<'_>, rhs: &Chain<'_>, exec: Exec) -> Result<Option<Witness>> {
    check_shapes(lhs, rhs)?;
    let cols: Vec<usize> = (0..lhs.domain).collect();
    Ok(first_difference_on(lhs, rhs, &cols, exec))
}

/// Same as [`first_difference`] restricted to the given domain columns.
pub fn first_difference_sampled(
    lhs: &Chain<'_>,
    rhs: &Chain<'_>,
    cols: &[usize],
    exec: Exec,
) -> Result<Option<Witness>> {
    check_shapes(lhs, rhs)?;
    if let Some(c) = cols.iter().find(|&&c| c >= lhs.domain) {
        return Err(dims(format!("sampled column {c} outside domain {}", lhs.domain)));
    }
    Ok(first_difference_on(lhs, rhs, cols, exec))
}

fn check_shapes(lhs: &Chain<'_>, rhs: &Chain<'_>) -> Result<()> {
    if lhs.field != rhs.field {
        return Err(crate::Error::FieldMismatch(lhs.field, rhs.field));
    }
    if (lhs.domain, lhs.codomain) != (rhs.domain, rhs.codomain) {
        return Err(dims(format!(
            "sides are {}→{} and {}→{}",
            lhs.domain, lhs.codomain, rhs.domain, rhs.codomain
        )));
    }
    Ok(())
}

fn first_difference_on(lhs: &Chain<'_>, rhs: &Chain<'_>, cols: &[usize], exec: Exec) -> Option<Witness> {
    let hits = exec.map_slice(cols, |&c| {
        let (a, b) = (lhs.apply_basis(c), rhs.apply_basis(c));
        first_row_mismatch(&a, &b).map(|(r, x, y)| (r, c, x, y))
    });
    let zero = lhs.field.zero();
    hits.into_iter().flatten().min_by_key(|(r, c, _, _)| (*r, *c)).map(|(row, col, x, y)| Witness {
        row,
        col,
        index: row * lhs.domain + col,
        lhs: x.unwrap_or_else(|| zero.clone()),
        rhs: y.unwrap_or_else(|| zero.clone()),
    })
}

pub(crate) type Mismatch = (usize, Option<Scalar>, Option<Scalar>);

pub(crate) fn first_row_mismatch(a: &SparseVec, b: &SparseVec) -> Option<Mismatch> {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return None,
            (Some((r, x)), None) => return Some((*r, Some(x.clone()), None)),
            (None, Some((r, y))) => return Some((*r, None, Some(y.clone()))),
            (Some((r, x)), Some((s, y))) => {
                if r < s {
                    return Some((*r, Some(x.clone()), None));
                }
                if s < r {
                    return Some((*s, None, Some(y.clone())));
                }
                if x != y {
                    return Some((*r, Some(x.clone()), Some(y.clone())));
                }
                i += 1;
                j += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn chain_matches_materialized_kron() {
        let f = LinMap::from_ints(Q, 2, 3, &[1, 2, 0, 0, -1, 4]).unwrap();
        let g = LinMap::from_ints(Q, 3, 2, &[1, 0, 5, 2, 0, 3]).unwrap();
        let chain = Chain::new(Q, 6).then(vec![map(&f), map(&g)]).unwrap();
        assert_eq!(chain.to_linmap(), f.kron(&g).unwrap());
        let with_id = Chain::new(Q, 8).then(vec![id(2), map(&g), id(2)]).unwrap();
        let expect = LinMap::identity(Q, 2).kron(&g).unwrap().kron(&LinMap::identity(Q, 2)).unwrap();
        assert_eq!(with_id.to_linmap(), expect);
    }

    #[test]
    fn nested_chain_matches_materialized() {
        let f = LinMap::from_ints(Q, 2, 3, &[1, 2, 0, 0, -1, 4]).unwrap();
        let g = LinMap::from_ints(Q, 3, 2, &[1, 0, 5, 2, 0, 3]).unwrap();
        let inner = Chain::new(Q, 2).then_map(&g).unwrap().then_map(&f).unwrap();
        let fg = f.compose(&g).unwrap();
        let lazy = Chain::new(Q, 6).then(vec![id(3), sub(&inner)]).unwrap();
        let eager = Chain::new(Q, 6).then(vec![id(3), map(&fg)]).unwrap();
        assert_eq!(lazy.to_linmap(), eager.to_linmap());
    }

    #[test]
    fn permute_stage_matches_permutation_matrix() {
        let c = Chain::new(Q, 24).permute(&[2, 3, 4], &[1, 2, 0]).unwrap();
        assert_eq!(c.to_linmap(), LinMap::permutation(Q, &[2, 3, 4], &[1, 2, 0]));
    }

    #[test]
    fn shape_errors() {
        let f = LinMap::identity(Q, 3);
        assert!(Chain::new(Q, 4).then_map(&f).is_err());
        assert!(Chain::new(Q, 6).permute(&[2, 3], &[0, 0]).is_err());
    }

    #[test]
    fn difference_reports_first_row_major() {
        let a = LinMap::from_ints(Q, 2, 2, &[1, 0, 0, 7]).unwrap();
        let b = LinMap::from_ints(Q, 2, 2, &[1, 0, 3, 8]).unwrap();
        let (ca, cb) = (Chain::new(Q, 2).then_map(&a).unwrap(), Chain::new(Q, 2).then_map(&b).unwrap());
        let w = first_difference(&ca, &cb, Exec::Parallel).unwrap().unwrap();
        assert_eq!((w.row, w.col), (1, 0));
        assert_eq!(w, a.first_difference(&b).unwrap().unwrap());
    }
}
