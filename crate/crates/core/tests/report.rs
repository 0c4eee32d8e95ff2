use qtk_core::construction::*;
use qtk_core::field::*;

#[test]
fn golden_rendering() {
    let f = Field::GOLDEN;
    assert_eq!(render_elem(&f.phi()), "φ");
    assert_eq!(render_elem(&(f.phi() * f.phi())), "φ + 1");
    assert_eq!(render_elem(&(f.phi() - f.int(1))), "φ - 1");
    assert_eq!(render_elem(&f.int(-3)), "-3");
    assert_eq!(render_elem(&f.sqrt_d()), "2φ - 1");
    let half = f.rational(qtk_core::field::rational::rat(1, 2));
    assert_eq!(render_elem(&(f.phi() * half)), "1/4+1/4√5");
    let q = Field::RATIONAL;
    assert_eq!(render_elem(&q.int(2)), "2");
}

#[test]
fn row_rendering() {
    let f = Field::GOLDEN;
    let r = LevelRow { coefficients: KVector::new(vec![f.one(), f.phi()]), constant: f.phi() };
    assert_eq!(render_level_row(&r), "|z1|^2 + φ|z2|^2 = φ");
    let r = LevelRow {
        coefficients: KVector::new(vec![f.phi() - f.int(1), f.int(-1), f.zero()]),
        constant: f.one(),
    };
    assert_eq!(render_level_row(&r), "(φ - 1)|z1|^2 - |z2|^2 = 1");
}
