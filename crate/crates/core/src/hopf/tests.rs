use super::*;
use crate::scalar::Scalar;

const Q: FieldSpec = FieldSpec::Rationals;

fn h4() -> Bialgebra {
    sweedler(Q).unwrap()
}

fn vec_of(b: &Bialgebra, m: &LinMap, col: usize) -> Vec<(String, String)> {
    m.column(col).iter().map(|(r, s)| (b.labels()[*r].clone(), s.to_string())).collect()
}

#[test]
fn group_algebra_c2_passes() {
    let b = cyclic_group(Q, 2).unwrap();
    assert!(check_bialgebra(&b).unwrap().passed());
    let s = compute_antipode(&b).unwrap().unwrap();
    assert_eq!(s, LinMap::identity(Q, 2));
}

#[test]
fn sweedler_relations_and_axioms() {
    let b = h4();
    assert_eq!(b.labels(), ["1", "g", "x", "gx"]);
    let (one, g, x, gx) = (0, 1, 2, 3);
    // g² = 1, x² = 0, xg = −gx
    assert_eq!(b.product(g, g), &vec![(one, Q.one())]);
    assert!(b.product(x, x).is_empty());
    assert_eq!(b.product(x, g), &vec![(gx, -Q.one())]);
    assert_eq!(b.product(g, x), &vec![(gx, Q.one())]);
    let r = check_bialgebra(&b).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.entries.len(), 10);
}

#[test]
fn sweedler_antipode() {
    let b = h4();
    let s = compute_antipode(&b).unwrap().unwrap();
    // S(x) = −gx, S(gx) = x
    assert_eq!(vec_of(&b, &s, 2), vec![("gx".to_string(), "-1".to_string())]);
    assert_eq!(vec_of(&b, &s, 3), vec![("x".to_string(), "1".to_string())]);
    let s2 = s.compose(&s).unwrap();
    assert!(!s2.is_identity());
    assert_eq!(antipode_order(&s, 8), Some(4));
    let h = HopfAlgebra::from_bialgebra(b.clone()).unwrap();
    let sinv = h.antipode_inv().unwrap();
    // S⁻¹(x) = gx
    assert_eq!(vec_of(&b, sinv, 2), vec![("gx".to_string(), "1".to_string())]);
    assert!(s.compose(sinv).unwrap().is_identity());
}

#[test]
fn perturbed_multiplication_fails_assoc_with_witness() {
    let b = h4();
    let mut mult = b.mult().clone();
    let v = &mult.get(3, 4 + 2) + &Q.one();
    mult.set(3, 4 + 2, v);
    let bad = Bialgebra::new(b.labels().to_vec(), mult, b.unit().clone(), b.comult().clone(), b.counit().clone())
        .unwrap();
    let r = check_bialgebra(&bad).unwrap();
    let assoc = r.get("assoc").unwrap();
    assert!(!assoc.passed);
    let w = assoc.witness.as_ref().unwrap();
    assert_ne!(w.lhs, w.rhs);
}

fn two_dim(tt: &[(usize, usize, Scalar)]) -> Bialgebra {
    let one = Q.one();
    let mut m = vec![(0, 0, one.clone()), (1, 1, one.clone()), (1, 2, one.clone())];
    m.extend(tt.iter().cloned());
    let mult = LinMap::from_triplets(Q, 2, 4, m).unwrap();
    let unit = LinMap::from_ints(Q, 2, 1, &[1, 0]).unwrap();
    let comult = LinMap::from_triplets(Q, 4, 2, [(0, 0, one.clone()), (3, 1, one)]).unwrap();
    let counit = LinMap::from_ints(Q, 1, 2, &[1, 1]).unwrap();
    Bialgebra::new(vec![], mult, unit, comult, counit).unwrap()
}

#[test]
fn grouplike_nilpotent_is_not_hopf() {
    // basis {1, t}: t grouplike, t² = 0; ε(t²) ≠ ε(t)² so only the solver verdict matters
    let b = two_dim(&[]);
    let r = check_bialgebra(&b).unwrap();
    assert_eq!(r.first_failure().unwrap().name, "eps_mult");
    assert_eq!(compute_antipode(&b).unwrap(), None);
}

#[test]
fn grouplike_idempotent_is_not_hopf() {
    // t² = t: the monoid bialgebra of {1, t}
    let b = two_dim(&[(1, 3, Q.one())]);
    assert!(check_bialgebra(&b).unwrap().passed());
    assert_eq!(compute_antipode(&b).unwrap(), None);
    assert!(matches!(HopfAlgebra::from_bialgebra(Arc::new(b)), Err(Error::NotHopf)));
}

#[test]
fn involutive_antipodes() {
    let c2 = HopfAlgebra::from_bialgebra(cyclic_group(Q, 2).unwrap()).unwrap();
    assert_eq!(c2.antipode_inv().unwrap(), c2.antipode());
    let s3 = HopfAlgebra::from_bialgebra(symmetric_group_s3(Q).unwrap()).unwrap();
    assert_eq!(s3.antipode_inv().unwrap(), s3.antipode());
}

#[test]
fn dual_of_c2_is_function_algebra() {
    let b = cyclic_group(Q, 2).unwrap();
    let d = dual_bialgebra(&b);
    assert!(check_bialgebra(&d).unwrap().passed());
    // δ_g·δ_g = δ_g, δ_1·δ_g = 0
    assert_eq!(d.product(1, 1), &vec![(1, Q.one())]);
    assert!(d.product(0, 1).is_empty());
    // ε*(h^i) = h^i(1)
    assert_eq!(d.counit(), &LinMap::from_ints(Q, 1, 2, &[1, 0]).unwrap());
    // transposing kC2's multiplication gives the dual comultiplication
    assert_eq!(&b.mult().transpose(), d.comult());
}

#[test]
fn dual_swaps_commutativity_flags() {
    let s3 = symmetric_group_s3(Q).unwrap();
    assert_eq!(commutativity_flags(&s3), (false, true));
    assert_eq!(commutativity_flags(&dual_bialgebra(&s3)), (true, false));
    assert!(check_bialgebra(&dual_bialgebra(&s3)).unwrap().passed());
    assert_eq!(commutativity_flags(&cyclic_group(Q, 2).unwrap()), (true, true));
    assert_eq!(commutativity_flags(&h4()), (false, false));
}

#[test]
fn double_dual_is_identity() {
    for b in [h4(), symmetric_group_s3(Q).unwrap()] {
        assert_eq!(dual_bialgebra(&dual_bialgebra(&b)), b);
    }
}

#[test]
fn tensor_products() {
    let c2 = cyclic_group(Q, 2).unwrap();
    let k = trivial_bialgebra(Q);
    assert_eq!(tensor_bialgebra(&c2, &k).unwrap(), c2);
    assert_eq!(tensor_bialgebra(&k, &c2).unwrap(), c2);
    let h = Arc::new(c2.clone());
    let t = tensor_with_dual(&h).unwrap();
    assert_eq!(t.dim(), 4);
    assert!(matches!(t.origin(), Origin::TensorWithDual(_)));
    assert!(check_bialgebra(&t).unwrap().passed());
    let s = compute_antipode(&t).unwrap().unwrap();
    let hc2 = HopfAlgebra::from_bialgebra(c2).unwrap();
    let dual = dual_hopf(&hc2);
    assert_eq!(s, hc2.antipode().kron(dual.antipode()).unwrap());
    let t4 = tensor_with_dual(&Arc::new(h4())).unwrap();
    assert_eq!(t4.dim(), 16);
    assert!(check_bialgebra(&t4).unwrap().passed());
}

#[test]
fn tensor_is_associative() {
    let a = cyclic_group(Q, 2).unwrap();
    let b = h4();
    let c = dual_bialgebra(&a);
    let left = tensor_bialgebra(&tensor_bialgebra(&a, &b).unwrap(), &c).unwrap();
    let right = tensor_bialgebra(&a, &tensor_bialgebra(&b, &c).unwrap()).unwrap();
    assert_eq!(left, right);
}

#[test]
fn tensor_rejects_field_mismatch() {
    let a = cyclic_group(Q, 2).unwrap();
    let b = cyclic_group(FieldSpec::prime(7).unwrap(), 2).unwrap();
    assert!(matches!(tensor_bialgebra(&a, &b), Err(Error::FieldMismatch(..))));
}

#[test]
fn taft3_over_gf7() {
    let f7 = FieldSpec::prime(7).unwrap();
    let b = taft(f7, 3, &Scalar::from_i64(f7, 2)).unwrap();
    assert_eq!(b.dim(), 9);
    assert!(check_bialgebra(&b).unwrap().passed());
    let h = HopfAlgebra::from_bialgebra(b).unwrap();
    assert!(h.antipode_inv().is_some());
    // 4 is a primitive cube root too, 6 = −1 is not
    assert!(taft(f7, 3, &Scalar::from_i64(f7, 4)).is_ok());
    assert!(matches!(taft(f7, 3, &Scalar::from_i64(f7, 6)), Err(Error::InvalidSpec(_))));
}

#[test]
fn builder_errors() {
    assert!(sweedler(FieldSpec::prime(2).unwrap()).is_err());
    assert!(group_algebra(Q, &[vec![0, 1], vec![0, 1]], vec![]).is_err());
    assert!(group_algebra(Q, &[vec![0, 2], vec![1, 0]], vec![]).is_err());
}

#[test]
fn zoo_members_are_hopf() {
    for z in zoo().unwrap() {
        let b = z.hopf.bialgebra();
        assert!(check_bialgebra(b).unwrap().passed(), "{}", z.name);
        assert!(check_antipode(b, z.hopf.antipode()).unwrap().passed(), "{}", z.name);
        assert!(z.hopf.antipode_inv().is_some(), "{}", z.name);
    }
}
