//! Exact linear maps between tensor powers of based vector spaces.
//!
//! A map with `cols = n₁·n₂·…·n_k` reads its domain as the tensor product of
//! spaces of dimensions `n₁ … n_k`, with basis tensor `e_{i₁}⊗…⊗e_{i_k}` at
//! flattened index `((i₁·n₂ + i₂)·n₃ + i₃)…` (leftmost factor most
//! significant, zero based). The same convention is used for codomains and
//! by every module of this crate.
//!
//! Storage is column-sparse; semantics are those of a dense matrix.

use std::fmt;

use crate::error::{dims, Error, Result};
use crate::exec::Exec;
use crate::scalar::{FieldSpec, Scalar};

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Sorts, merges duplicate indices and drops zeros.
pub fn normalize(mut v: Vec<(usize, Scalar)>) -> SparseVec {
    if v.len() <= 1 {
        v.retain(|(_, s)| !s.is_zero());
        return v;
    }
    v.sort_unstable_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, s) in v {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc = &*acc + &s,
            _ => {
                if let Some((_, acc)) = out.last() {
                    if acc.is_zero() {
                        out.pop();
                    }
                }
                out.push((i, s));
            }
        }
    }
    if let Some((_, acc)) = out.last() {
        if acc.is_zero() {
            out.pop();
        }
    }
    out
}

/// `acc += coeff · v` on sparse vectors.
pub fn axpy(acc: &SparseVec, coeff: &Scalar, v: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(acc.len() + v.len());
    let (mut a, mut b) = (acc.iter().peekable(), v.iter().peekable());
    loop {
        match (a.peek(), b.peek()) {
            (Some((i, x)), Some((j, y))) if i == j => {
                let mut s = x.clone();
                s.add_mul(coeff, y);
                if !s.is_zero() {
                    out.push((*i, s));
                }
                a.next();
                b.next();
            }
            (Some((i, x)), Some((j, _))) if i < j => {
                out.push((*i, x.clone()));
                a.next();
            }
            (Some((i, x)), None) => {
                out.push((*i, x.clone()));
                a.next();
            }
            (_, Some((j, y))) => {
                let s = coeff * y;
                if !s.is_zero() {
                    out.push((*j, s));
                }
                b.next();
            }
            (None, None) => break,
        }
    }
    out
}

fn lookup(v: &SparseVec, i: usize) -> Option<&Scalar> {
    v.binary_search_by_key(&i, |(j, _)| *j).ok().map(|k| &v[k].1)
}

/// Exact matrix over a fixed field.
#[derive(Clone, PartialEq, Eq)]
pub struct LinMap {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    columns: Vec<SparseVec>,
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinMap[{}x{} over {}]", self.rows, self.cols, self.field)?;
        if self.rows * self.cols <= 64 {
            for r in 0..self.rows {
                write!(f, "\n  [")?;
                for c in 0..self.cols {
                    write!(f, " {}", self.get(r, c))?;
                }
                write!(f, " ]")?;
            }
        }
        Ok(())
    }
}

/// First coordinate (row-major) where two maps differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    /// `row * cols + col`
    pub index: usize,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at ({},{}) [flat {}]: lhs={} rhs={}", self.row, self.col, self.index, self.lhs, self.rhs)
    }
}

impl LinMap {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        LinMap { rows, cols, field, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let one = field.one();
        LinMap { rows: n, cols: n, field, columns: (0..n).map(|i| vec![(i, one.clone())]).collect() }
    }

    /// Row-major dense entries.
    pub fn from_dense(field: FieldSpec, rows: usize, cols: usize, entries: &[Scalar]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(dims(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        let mut m = LinMap::zeros(field, rows, cols);
        for (k, s) in entries.iter().enumerate() {
            if s.field() != field {
                return Err(Error::FieldMismatch(field, s.field()));
            }
            if !s.is_zero() {
                m.columns[k % cols].push((k / cols, s.clone()));
            }
        }
        Ok(m)
    }

    pub fn from_ints(field: FieldSpec, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        let e: Vec<_> = entries.iter().map(|&v| Scalar::from_i64(field, v)).collect();
        LinMap::from_dense(field, rows, cols, &e)
    }

    /// Entries `(row, col, value)`; repeated coordinates are summed.
    pub fn from_triplets(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut raw: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
        for (r, c, s) in entries {
            if r >= rows || c >= cols {
                return Err(dims(format!("entry ({r},{c}) outside {rows}x{cols}")));
            }
            if s.field() != field {
                return Err(Error::FieldMismatch(field, s.field()));
            }
            raw[c].push((r, s));
        }
        Ok(LinMap { rows, cols, field, columns: raw.into_iter().map(normalize).collect() })
    }

    /// Builds from sparse columns; each column is normalized.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: Vec<SparseVec>) -> Result<Self> {
        let cols = columns.len();
        let mut out = Vec::with_capacity(cols);
        for col in columns {
            let col = normalize(col);
            if let Some((r, _)) = col.last() {
                if *r >= rows {
                    return Err(dims(format!("row {r} outside {rows} rows")));
                }
            }
            if let Some((_, s)) = col.iter().find(|(_, s)| s.field() != field) {
                return Err(Error::FieldMismatch(field, s.field()));
            }
            out.push(col);
        }
        Ok(LinMap { rows, cols, field, columns: out })
    }

    /// Trusted constructor for already-normalized columns.
    pub(crate) fn from_normalized(field: FieldSpec, rows: usize, columns: Vec<SparseVec>) -> Self {
        LinMap { rows, cols: columns.len(), field, columns }
    }

    /// Single-column map `k → V` for a vector.
    pub fn from_vector(field: FieldSpec, rows: usize, v: SparseVec) -> Result<Self> {
        LinMap::from_columns(field, rows, vec![v])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn column(&self, c: usize) -> &SparseVec {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        lookup(&self.columns[c], r).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        assert_eq!(v.field(), self.field);
        let col = &mut self.columns[c];
        match col.binary_search_by_key(&r, |(j, _)| *j) {
            Ok(k) if v.is_zero() => {
                col.remove(k);
            }
            Ok(k) => col[k].1 = v,
            Err(_) if v.is_zero() => {}
            Err(k) => col.insert(k, (r, v)),
        }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.columns.iter().enumerate().all(|(i, c)| c.len() == 1 && c[0].0 == i && c[0].1.is_one())
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.rows * self.cols];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, s) in col {
                out[r * self.cols + c] = s.clone();
            }
        }
        out
    }

    /// Image of a sparse vector.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc: Vec<(usize, Scalar)> = Vec::new();
        for (i, x) in v {
            for (r, y) in &self.columns[*i] {
                acc.push((*r, x * y));
            }
        }
        normalize(acc)
    }

    fn same_field(&self, other: &LinMap) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field, other.field))
        }
    }

    /// `self ∘ g` (apply `g` first).
    pub fn compose(&self, g: &LinMap) -> Result<LinMap> {
        self.compose_with(g, Exec::default())
    }

    pub fn compose_with(&self, g: &LinMap, exec: Exec) -> Result<LinMap> {
        self.same_field(g)?;
        if self.cols != g.rows {
            return Err(dims(format!("compose {}x{} after {}x{}", self.rows, self.cols, g.rows, g.cols)));
        }
        let columns = exec.map_slice(&g.columns, |col| self.apply(col));
        Ok(LinMap::from_normalized(self.field, self.rows, columns))
    }

    /// Kronecker product: `(f⊗g)(e_i⊗e_j) = f(e_i)⊗g(e_j)`.
    pub fn kron(&self, g: &LinMap) -> Result<LinMap> {
        self.same_field(g)?;
        let mut columns = Vec::with_capacity(self.cols * g.cols);
        for a in &self.columns {
            for b in &g.columns {
                let mut col = Vec::with_capacity(a.len() * b.len());
                for (r1, x) in a {
                    for (r2, y) in b {
                        col.push((r1 * g.rows + r2, x * y));
                    }
                }
                columns.push(col);
            }
        }
        Ok(LinMap::from_normalized(self.field, self.rows * g.rows, columns))
    }

    /// Matrix transpose; the dual map in the dual bases.
    pub fn transpose(&self) -> LinMap {
        let mut columns: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, s) in col {
                columns[*r].push((c, s.clone()));
            }
        }
        LinMap { rows: self.cols, cols: self.rows, field: self.field, columns }
    }

    pub fn add(&self, g: &LinMap) -> Result<LinMap> {
        self.combine(g, &self.field.one())
    }

    pub fn sub(&self, g: &LinMap) -> Result<LinMap> {
        self.combine(g, &-&self.field.one())
    }

    fn combine(&self, g: &LinMap, coeff: &Scalar) -> Result<LinMap> {
        self.same_field(g)?;
        if (self.rows, self.cols) != (g.rows, g.cols) {
            return Err(dims(format!("{}x{} vs {}x{}", self.rows, self.cols, g.rows, g.cols)));
        }
        let columns = self.columns.iter().zip(&g.columns).map(|(a, b)| axpy(a, coeff, b)).collect();
        Ok(LinMap::from_normalized(self.field, self.rows, columns))
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        assert_eq!(s.field(), self.field);
        if s.is_zero() {
            return LinMap::zeros(self.field, self.rows, self.cols);
        }
        let columns = self.columns.iter().map(|c| c.iter().map(|(r, x)| (*r, x * s)).collect()).collect();
        LinMap::from_normalized(self.field, self.rows, columns)
    }

    /// First row-major coordinate where `self` and `other` differ.
    pub fn first_difference(&self, other: &LinMap) -> Result<Option<Witness>> {
        self.same_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(dims(format!("{}x{} vs {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut best: Option<(usize, usize)> = None;
        for c in 0..self.cols {
            if let Some(r) = first_row_difference(&self.columns[c], &other.columns[c]) {
                if best.is_none_or(|(br, _)| r < br) {
                    best = Some((r, c));
                }
            }
        }
        Ok(best.map(|(row, col)| Witness {
            row,
            col,
            index: row * self.cols + col,
            lhs: self.get(row, col),
            rhs: other.get(row, col),
        }))
    }

    /// Solves `self ∘ X = b` exactly. Free variables are set to zero;
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &LinMap) -> Result<Option<LinMap>> {
        self.same_field(b)?;
        if self.rows != b.rows {
            return Err(dims(format!("solve with {} rows against {} rows", self.rows, b.rows)));
        }
        let n = self.cols;
        let k = b.cols;
        // row-sparse augmented system [A | B]
        let mut rows: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, s) in col {
                rows[*r].push((c, s.clone()));
            }
        }
        for (c, col) in b.columns.iter().enumerate() {
            for (r, s) in col {
                rows[*r].push((n + c, s.clone()));
            }
        }
        let pivots = eliminate(&mut rows, n);
        if rows.iter().any(|r| r.first().is_some_and(|(c, _)| *c >= n)) {
            return Ok(None);
        }
        // reduced echelon form: each pivot row reads x_p = rhs
        let mut columns: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); k];
        for (p, row) in pivots {
            for (c, s) in &rows[row] {
                if *c >= n {
                    columns[c - n].push((p, s.clone()));
                }
            }
        }
        Ok(Some(LinMap::from_normalized(
            self.field,
            n,
            columns.into_iter().map(normalize).collect(),
        )))
    }

    pub fn invert(&self) -> Result<Option<LinMap>> {
        if self.rows != self.cols {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        // a singular square system has no solution for the identity
        self.solve(&LinMap::identity(self.field, self.rows))
    }

    /// Swap of tensor factors `V_m ⊗ V_n → V_n ⊗ V_m`.
    pub fn flip(field: FieldSpec, m: usize, n: usize) -> LinMap {
        LinMap::permutation(field, &[m, n], &[1, 0])
    }

    /// Reorders tensor factors: output factor `p` is input factor `perm[p]`.
    pub fn permutation(field: FieldSpec, dims: &[usize], perm: &[usize]) -> LinMap {
        let total: usize = dims.iter().product();
        let one = field.one();
        let columns = (0..total).map(|j| vec![(permute_index(dims, perm, j), one.clone())]).collect();
        LinMap::from_normalized(field, total, columns)
    }
}

/// Output flattened index of input basis tensor `j` under a factor permutation.
pub fn permute_index(dims: &[usize], perm: &[usize], mut j: usize) -> usize {
    let k = dims.len();
    let mut digits = [0usize; 16];
    assert!(k <= digits.len(), "too many tensor factors");
    for f in (0..k).rev() {
        digits[f] = j % dims[f];
        j /= dims[f];
    }
    perm.iter().fold(0, |acc, &src| acc * dims[src] + digits[src])
}

fn first_row_difference(a: &SparseVec, b: &SparseVec) -> Option<usize> {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return None,
            (Some((r, _)), None) | (None, Some((r, _))) => return Some(*r),
            (Some((r, x)), Some((s, y))) => {
                if r != s {
                    return Some(*r.min(s));
                }
                if x != y {
                    return Some(*r);
                }
                i += 1;
                j += 1;
            }
        }
    }
}

/// Gauss-Jordan elimination on sparse rows over the first `ncols` columns.
/// Returns `(pivot column, row)` pairs; pivot rows are scaled to 1 and all
/// other rows are cleared in pivot columns.
fn eliminate(rows: &mut [SparseVec], ncols: usize) -> Vec<(usize, usize)> {
    let mut pivots = Vec::new();
    let mut used = vec![false; rows.len()];
    for col in 0..ncols {
        // sparsest available row with a nonzero leading entry here
        let Some(prow) = (0..rows.len())
            .filter(|&r| !used[r] && rows[r].first().is_some_and(|(c, _)| *c == col))
            .min_by_key(|&r| rows[r].len())
        else {
            continue;
        };
        used[prow] = true;
        let inv = rows[prow][0].1.inv().expect("pivot is nonzero");
        rows[prow] = rows[prow].iter().map(|(c, s)| (*c, s * &inv)).collect();
        let pivot_row = rows[prow].clone();
        for r in 0..rows.len() {
            if r == prow {
                continue;
            }
            if let Some(s) = lookup(&rows[r], col) {
                let coeff = -s;
                rows[r] = axpy(&rows[r], &coeff, &pivot_row);
            }
        }
        pivots.push((col, prow));
    }
    pivots
}
