use num_bigint::BigInt;
use num_traits::Zero;
use qtk_core::field::*;
use qtk_core::quasilattice::*;

fn golden_line() -> Quasilattice {
    let f = Field::GOLDEN;
    Quasilattice::new(f, 1, vec![KVector::new(vec![f.one()]), KVector::new(vec![f.phi()])]).unwrap()
}

#[test]
fn golden_line_membership() {
    let f = Field::GOLDEN;
    let q = golden_line();
    let phi2 = f.phi() * f.phi();
    assert_eq!(q.member(&KVector::new(vec![phi2])), Some(MembershipCertificate::from_i64(&[1, 1])));
    let half = f.rational(qtk_core::field::rational::rat(1, 2));
    assert_eq!(q.member(&KVector::new(vec![half])), None);
    assert_eq!(q.relation_lattice().rows(), 0);
    assert!(!q.is_discrete());
}

#[test]
fn golden_line_quotients() {
    let q = golden_line();
    let p = q.quotient_by(&[MembershipCertificate::from_i64(&[0, 1])]);
    assert_eq!(p.invariants.free_rank, 1);
    assert!(p.invariants.torsion.is_empty());
    assert_eq!(p.generator_images[1], vec![BigInt::zero()]);
    assert!(!p.generator_images[0][0].is_zero());
}

#[test]
fn integer_lattice() {
    let q = Quasilattice::integer_lattice(Field::RATIONAL, 2);
    assert!(q.is_discrete());
    assert_eq!(q.relation_lattice().rows(), 0);
    let all = [MembershipCertificate::from_i64(&[1, 0]), MembershipCertificate::from_i64(&[0, 1])];
    assert!(q.quotient_by(&all).invariants.is_trivial());

    let z = Quasilattice::integer_lattice(Field::RATIONAL, 1);
    let g = z.quotient_by(&[MembershipCertificate::from_i64(&[3])]).invariants;
    assert_eq!(g.torsion, vec![BigInt::from(3)]);
}

#[test]
fn rejects_non_spanning() {
    let f = Field::GOLDEN;
    let g = vec![KVector::from_ints(f, &[1, 2]), KVector::from_ints(f, &[2, 4])];
    assert!(Quasilattice::new(f, 2, g).is_err());
}
