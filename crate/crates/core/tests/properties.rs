use lrcert_core::{Exec, FieldSpec, LinMap, Scalar};
use proptest::prelude::*;

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Rationals), Just(FieldSpec::prime(7).unwrap()), Just(FieldSpec::prime(2).unwrap())]
}

fn scalar(k: FieldSpec) -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(move |(n, d)| Scalar::from_ratio(k, n, d).unwrap_or_else(|| Scalar::from_i64(k, n)))
}

/// Sparse-ish matrices: about half the entries are zero.
fn matrix(k: FieldSpec, rows: usize, cols: usize) -> impl Strategy<Value = LinMap> {
    proptest::collection::vec(prop_oneof![Just(None), scalar(k).prop_map(Some)], rows * cols).prop_map(move |es| {
        let es: Vec<Scalar> = es.into_iter().map(|e| e.unwrap_or_else(|| k.zero())).collect();
        LinMap::from_dense(k, rows, cols, &es).unwrap()
    })
}

fn triple() -> impl Strategy<Value = (LinMap, LinMap, LinMap)> {
    (fields(), 1usize..5, 1usize..5, 1usize..5, 1usize..5)
        .prop_flat_map(|(k, a, b, c, d)| (matrix(k, a, b), matrix(k, b, c), matrix(k, c, d)))
}

proptest! {
    #[test]
    fn compose_is_associative((f, g, h) in triple()) {
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn policies_agree((f, g, _) in triple()) {
        prop_assert_eq!(f.compose_with(&g, Exec::Sequential).unwrap(), f.compose_with(&g, Exec::Parallel).unwrap());
    }

    #[test]
    fn kron_interchange((f, g, _) in triple(), (p, q, _) in triple()) {
        // (f⊗p)∘(g⊗q) = (f∘g)⊗(p∘q), when the fields agree
        prop_assume!(f.field() == p.field());
        let lhs = f.kron(&p).unwrap().compose(&g.kron(&q).unwrap()).unwrap();
        let rhs = f.compose(&g).unwrap().kron(&p.compose(&q).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn solve_returns_a_solution((a, x, _) in triple()) {
        let b = a.compose(&x).unwrap();
        let y = a.solve(&b).unwrap().expect("b is in the image of a");
        prop_assert_eq!(a.compose(&y).unwrap(), b);
    }

    #[test]
    fn inverse_is_two_sided(a in (fields(), 1usize..5).prop_flat_map(|(k, n)| matrix(k, n, n))) {
        if let Some(inv) = a.invert().unwrap() {
            prop_assert!(a.compose(&inv).unwrap().is_identity());
            prop_assert!(inv.compose(&a).unwrap().is_identity());
        }
    }

    #[test]
    fn transpose_reverses_composition((f, g, _) in triple()) {
        prop_assert_eq!(f.compose(&g).unwrap().transpose(), g.transpose().compose(&f.transpose()).unwrap());
    }

    #[test]
    fn scalar_print_parse(k in fields(), n in -1000i64..1000, d in 1i64..50) {
        if let Some(s) = Scalar::from_ratio(k, n, d) {
            let text = s.to_string();
            prop_assert_eq!(k.parse_scalar(&text).unwrap(), s.clone());
            prop_assert_eq!(k.parse_scalar(&text).unwrap().to_string(), text);
        }
    }
}
