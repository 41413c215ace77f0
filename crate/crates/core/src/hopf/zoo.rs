//! Built-in example algebras.

use std::sync::Arc;

use super::{dual_hopf, Bialgebra, HopfAlgebra};
use crate::error::{Error, Result};
use crate::linmap::{normalize, LinMap, SparseVec};
use crate::scalar::{FieldSpec, Scalar};

/// The 1-dimensional bialgebra `k`.
pub fn trivial_bialgebra(field: FieldSpec) -> Bialgebra {
    let one = LinMap::identity(field, 1);
    Bialgebra::new(vec!["1".into()], one.clone(), one.clone(), one.clone(), one).expect("1x1 shapes")
}

/// Group algebra `k[G]` from a multiplication table of element indices.
pub fn group_algebra(field: FieldSpec, table: &[Vec<usize>], labels: Vec<String>) -> Result<Bialgebra> {
    let n = table.len();
    let bad = |m: &str| Err(Error::InvalidSpec(format!("not a group table: {m}")));
    if n == 0 || table.iter().any(|row| row.len() != n || row.iter().any(|&g| g >= n)) {
        return bad("table must be square with entries in range");
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return bad("not associative");
                }
            }
        }
    }
    let Some(e) = (0..n).find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g)) else {
        return bad("no identity element");
    };
    if (0..n).any(|g| !(0..n).any(|h| table[g][h] == e && table[h][g] == e)) {
        return bad("missing inverse");
    }
    let one = field.one();
    let mult = LinMap::from_columns(
        field,
        n,
        (0..n * n).map(|ij| vec![(table[ij / n][ij % n], one.clone())]).collect(),
    )?;
    let unit = LinMap::from_columns(field, n, vec![vec![(e, one.clone())]])?;
    let comult = LinMap::from_columns(field, n * n, (0..n).map(|g| vec![(g * n + g, one.clone())]).collect())?;
    let counit = LinMap::from_columns(field, 1, (0..n).map(|_| vec![(0, one.clone())]).collect())?;
    Bialgebra::new(labels, mult, unit, comult, counit)
}

/// `k[C_n]` with basis `1, g, g2, …`.
pub fn cyclic_group(field: FieldSpec, n: usize) -> Result<Bialgebra> {
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let labels = (0..n).map(|i| power_label("g", i, "1")).collect();
    group_algebra(field, &table, labels)
}

/// `k[S₃]`, elements in lexicographic one-line order, `(στ)(i) = σ(τ(i))`.
pub fn symmetric_group_s3(field: FieldSpec) -> Result<Bialgebra> {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let labels = ["e", "(23)", "(12)", "(123)", "(132)", "(13)"].map(String::from).to_vec();
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("S3 is closed");
    let table = perms
        .iter()
        .map(|s| perms.iter().map(|t| index([s[t[0]], s[t[1]], s[t[2]]])).collect())
        .collect::<Vec<Vec<usize>>>();
    group_algebra(field, &table, labels)
}

fn power_label(base: &str, e: usize, empty: &str) -> String {
    match e {
        0 => empty.to_string(),
        1 => base.to_string(),
        _ => format!("{base}{e}"),
    }
}

/// Taft algebra `T_n(ω)`: `gⁿ = 1`, `xⁿ = 0`, `xg = ω·gx`, `Δ(g) = g⊗g`,
/// `Δ(x) = x⊗1 + g⊗x`. Basis `gⁱxʲ` at index `j·n + i`, so `n = 2`, `ω = −1`
/// gives Sweedler's algebra in the order `1, g, x, gx`.
pub fn taft(field: FieldSpec, n: usize, omega: &Scalar) -> Result<Bialgebra> {
    if n < 2 {
        return Err(Error::InvalidSpec("Taft algebra needs n >= 2".into()));
    }
    if omega.field() != field {
        return Err(Error::FieldMismatch(field, omega.field()));
    }
    let primitive = omega.pow(n as u64).is_one() && (1..n).all(|k| !omega.pow(k as u64).is_one());
    if !primitive {
        return Err(Error::InvalidSpec(format!("{omega} is not a primitive {n}-th root of unity in {field}")));
    }
    let dim = n * n;
    let idx = |i: usize, j: usize| j * n + i;
    let mut mult_cols: Vec<SparseVec> = Vec::with_capacity(dim * dim);
    for a in 0..dim {
        let (i, j) = (a % n, a / n);
        for b in 0..dim {
            let (k, l) = (b % n, b / n);
            mult_cols.push(if j + l < n {
                vec![(idx((i + k) % n, j + l), omega.pow((j * k) as u64))]
            } else {
                Vec::new()
            });
        }
    }
    let mult = LinMap::from_columns(field, dim, mult_cols)?;
    let one = field.one();
    let unit = LinMap::from_columns(field, dim, vec![vec![(idx(0, 0), one.clone())]])?;
    let counit = LinMap::from_columns(
        field,
        1,
        (0..dim).map(|a| if a / n == 0 { vec![(0, one.clone())] } else { Vec::new() }).collect(),
    )?;

    // Δ(gⁱxʲ) = Δ(g)ⁱ Δ(x)ʲ, multiplied out in H⊗H
    let t = |a: usize, b: usize| a * dim + b;
    let (g, x, e) = (idx(1, 0), idx(0, 1), idx(0, 0));
    let delta_g: SparseVec = vec![(t(g, g), one.clone())];
    let delta_x: SparseVec = normalize(vec![(t(x, e), one.clone()), (t(g, x), one.clone())]);
    let mut comult_cols = vec![Vec::new(); dim];
    for a in 0..dim {
        let (i, j) = (a % n, a / n);
        let mut v: SparseVec = vec![(t(e, e), one.clone())];
        for _ in 0..i {
            v = tensor_square_product(&mult, dim, &v, &delta_g);
        }
        for _ in 0..j {
            v = tensor_square_product(&mult, dim, &v, &delta_x);
        }
        comult_cols[a] = v;
    }
    let comult = LinMap::from_columns(field, dim * dim, comult_cols)?;
    let labels = (0..dim)
        .map(|a| {
            let s = format!("{}{}", power_label("g", a % n, ""), power_label("x", a / n, ""));
            if s.is_empty() { "1".to_string() } else { s }
        })
        .collect();
    Bialgebra::new(labels, mult, unit, comult, counit)
}

/// Product in `H⊗H` of two vectors given `H`'s multiplication.
fn tensor_square_product(mult: &LinMap, n: usize, a: &SparseVec, b: &SparseVec) -> SparseVec {
    let mut out = Vec::new();
    for (ia, x) in a {
        for (ib, y) in b {
            let (a1, a2, b1, b2) = (ia / n, ia % n, ib / n, ib % n);
            let xy = x * y;
            for (r1, u) in mult.column(a1 * n + b1) {
                for (r2, v) in mult.column(a2 * n + b2) {
                    out.push((r1 * n + r2, &xy * &(u * v)));
                }
            }
        }
    }
    normalize(out)
}

/// Sweedler's 4-dimensional Hopf algebra; requires characteristic ≠ 2.
pub fn sweedler(field: FieldSpec) -> Result<Bialgebra> {
    if field.characteristic() == 2 {
        return Err(Error::InvalidSpec("Sweedler's algebra needs characteristic != 2".into()));
    }
    taft(field, 2, &Scalar::from_i64(field, -1))
}

#[derive(Clone, Debug)]
pub struct ZooEntry {
    pub name: &'static str,
    pub hopf: HopfAlgebra,
}

/// The standard examples: `ℚ[C2]`, `GF(7)[C3]`, `ℚ[S3]`, `ℚ[S3]*`,
/// Sweedler over `ℚ`, and `T_3(2)` over `GF(7)`.
pub fn zoo() -> Result<Vec<ZooEntry>> {
    let q = FieldSpec::Rationals;
    let f7 = FieldSpec::prime(7)?;
    let hopf = |b: Bialgebra| HopfAlgebra::from_bialgebra(Arc::new(b));
    let s3 = hopf(symmetric_group_s3(q)?)?;
    Ok(vec![
        ZooEntry { name: "qc2", hopf: hopf(cyclic_group(q, 2)?)? },
        ZooEntry { name: "gf7c3", hopf: hopf(cyclic_group(f7, 3)?)? },
        ZooEntry { name: "qs3", hopf: s3.clone() },
        ZooEntry { name: "dual_qs3", hopf: dual_hopf(&s3) },
        ZooEntry { name: "sweedler", hopf: hopf(sweedler(q)?)? },
        ZooEntry { name: "taft3", hopf: hopf(taft(f7, 3, &Scalar::from_i64(f7, 2))?)? },
    ])
}
