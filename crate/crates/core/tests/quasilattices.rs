use num_bigint::BigInt;
use qtk_core::catalog;
use qtk_core::quasilattice::MembershipCertificate;

#[test]
fn relation_lattice_two_ways() {
    for name in catalog::QUASILATTICES {
        let q = catalog::quasilattice(name).unwrap();
        assert_eq!(q.relation_lattice(), q.relation_lattice_direct(), "{name}");
        for r in q.relation_lattice().row_vecs() {
            assert!(q.combine(&r).is_zero(), "{name}");
        }
    }
}

#[test]
fn ranks() {
    let rank = |n: &str| catalog::quasilattice(n).unwrap().z_rank();
    assert_eq!(rank("pentagon"), 4);
    assert_eq!(rank("icosa_simple"), 6);
    assert_eq!(rank("icosa_body"), 6);
    assert_eq!(rank("icosa_face"), 6);
    for n in ["integer_lattice_1", "integer_lattice_2", "integer_lattice_3"] {
        assert!(catalog::quasilattice(n).unwrap().is_discrete());
    }
    assert!(!catalog::pentagon().is_discrete());
}

#[test]
fn pentagon_quotient_by_two_roots() {
    // Q / span{v0, v1} for the pentagonal quasilattice is free of rank 2
    let q = catalog::pentagon();
    let certs = [MembershipCertificate::from_i64(&[1, 0, 0, 0, 0]), MembershipCertificate::from_i64(&[0, 1, 0, 0, 0])];
    let p = q.quotient_by(&certs);
    assert_eq!(p.invariants.free_rank, 2);
    assert!(p.invariants.torsion.is_empty());
    assert_eq!(q.quotient_generators(&certs).len(), 2);
}

#[test]
fn sum_of_fifth_roots_is_zero() {
    let q = catalog::pentagon();
    let ones: Vec<BigInt> = vec![BigInt::from(1); 5];
    assert!(q.combine(&ones).is_zero());
}
