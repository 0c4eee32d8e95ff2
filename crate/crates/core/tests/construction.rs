use qtk_core::construction::*;
use qtk_core::field::rational::rat;
use qtk_core::field::{Field, FieldElem, KVector};
use qtk_core::{catalog, Error, Exec};

fn presented() -> Vec<(&'static str, Triple)> {
    catalog::EXAMPLES
        .iter()
        .map(|n| (*n, catalog::example(n).unwrap()))
        .filter(|(_, t)| t.is_simple())
        .collect()
}

#[test]
fn vertices_lie_on_the_level_set() {
    for (name, t) in presented() {
        let p = build_presentation(&t).unwrap();
        for chart in build_charts(&t).unwrap() {
            let f = t.field();
            let zero = vec![f.zero(); chart.active.len()];
            let m = chart.lift_moduli(&zero);
            assert!(level_residuals(&p, &m).iter().all(FieldElem::is_zero), "{name} at {:?}", chart.active);
            // the vertex is the moment-map image of the origin of the chart
            assert!(m.iter().all(|x| !x.is_negative()), "{name}");
        }
    }
}

#[test]
fn chart_points_lie_on_the_level_set() {
    for (name, t) in presented() {
        let p = build_presentation(&t).unwrap();
        let f = t.field();
        for chart in build_charts(&t).unwrap() {
            let small: Vec<FieldElem> =
                (0..chart.active.len()).map(|k| f.rational(rat(1, 97 + k as i64))).collect();
            if !chart.in_domain(&small) {
                continue;
            }
            let m = chart.lift_moduli(&small);
            assert!(level_residuals(&p, &m).iter().all(FieldElem::is_zero), "{name}");
            assert!(m.iter().all(|x| x.is_positive() || x.is_zero()), "{name}");
        }
    }
}

#[test]
fn continuous_generators_are_in_the_kernel() {
    for (name, t) in presented() {
        let p = build_presentation(&t).unwrap();
        let pi = pi_matrix(&t);
        assert_eq!(p.cont_gens.len(), t.d() - t.n(), "{name}");
        for g in &p.cont_gens {
            assert!(pi.mul_vec(g).is_zero(), "{name}");
            assert!(in_identity_component(&t, g));
        }
        for g in &p.disc_gens {
            assert!(in_cutting_group(&t, g), "{name}");
            assert!(!in_identity_component(&t, g), "{name}: redundant discrete generator");
            assert!(cutting_certificate(&t, g).is_some());
        }
        assert_eq!(p.disc_gens.is_empty(), p.component_invariants.is_trivial(), "{name}");
    }
}

#[test]
fn quasisphere_family() {
    let f = Field::GOLDEN;
    // s|z|² + t|w|² = st
    let (s, t) = (f.int(2), f.phi());
    let q = catalog::quasisphere(s.clone(), t.clone()).unwrap();
    let p = build_presentation(&q).unwrap();
    let r = &p.level_rows[0];
    let lead = r.coefficients[0].clone();
    assert_eq!(r.coefficients.scale(&lead.inv().unwrap()), KVector::new(vec![f.one(), &t / &s]));
    assert_eq!(&r.constant / &lead, &(&s * &t) / &s);
}

#[test]
fn strategies_agree() {
    for name in ["kite", "dodecahedron", "prolate_rhombohedron"] {
        let t = catalog::example(name).unwrap();
        assert_eq!(
            build_charts_with(&t, Exec::Sequential).unwrap(),
            build_charts_with(&t, Exec::Parallel).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn nonsimple_input_is_refused() {
    for name in ["octahedron", "icosahedron"] {
        let t = catalog::example(name).unwrap();
        assert!(matches!(build_presentation(&t), Err(Error::Refused(_))), "{name}");
        assert!(matches!(build_charts(&t), Err(Error::Refused(_))), "{name}");
        let c = classify(&t);
        assert!(!c.simple);
    }
}

#[test]
fn rhombus_cut_along_diagonal() {
    for name in ["thick_rhombus", "thin_rhombus"] {
        let t = catalog::example(name).unwrap();
        let (x, l) = catalog::axis_of(name).unwrap();
        let r = cut_and_present(&t, &x, None, &l).unwrap();
        for half in [&r.plus, &r.minus] {
            assert_eq!(half.d(), 3, "{name}");
            assert_eq!(half.report().vertex_count, 3);
            assert!(half.is_simple());
        }
        assert_eq!(r.plus_presentation.level_rows.len(), 1);
    }
}

#[test]
fn cut_missing_the_interior() {
    let t = catalog::kite();
    let f = t.field();
    let x = KVector::new(vec![f.one(), f.zero()]);
    assert_eq!(cut_and_present(&t, &x, None, &f.int(10)).unwrap_err(), Error::DegenerateCut);
}

#[test]
fn cut_certificate_is_checked() {
    let t = catalog::kite();
    let (x, l) = catalog::kite_axis();
    let bad = qtk_core::quasilattice::MembershipCertificate::from_i64(&[1, 1, 1, 1, 1]);
    assert!(matches!(cut_and_present(&t, &x, Some(bad), &l), Err(Error::CertificateMismatch { .. })));
}

#[test]
fn chart_kinds() {
    let kinds = |name: &str| classify(&catalog::example(name).unwrap()).kind;
    assert_eq!(kinds("sphere"), GlobalKind::Smooth(ChartKind::Manifold));
    assert_eq!(kinds("orbisphere"), GlobalKind::Smooth(ChartKind::Orbifold));
    assert_eq!(kinds("kite"), GlobalKind::Smooth(ChartKind::Quasifold));
    assert_eq!(kinds("quasisphere"), GlobalKind::Smooth(ChartKind::Quasifold));
    assert_eq!(kinds("octahedron"), GlobalKind::Stratified(ChartKind::Manifold));
    assert_eq!(kinds("icosahedron"), GlobalKind::Stratified(ChartKind::Quasifold));
}

#[test]
fn kite_is_nonrational_and_rhombi_rational() {
    assert!(!classify(&catalog::kite()).rational);
    assert!(classify(&catalog::thick_rhombus()).rational);
    assert!(classify(&catalog::oblate_rhombohedron()).rational);
}

#[test]
fn json_documents_round_trip() {
    use qtk_core::io::*;
    for (name, t) in presented() {
        let p = build_presentation(&t).unwrap();
        let charts = build_charts(&t).unwrap();
        let text = to_text(&charts_to_json(&charts, t.field()));
        assert_eq!(charts_from_json(&text).unwrap(), charts, "{name}");
        let text = to_text(&report_to_json(&p, &charts, t.field()));
        assert_eq!(report_from_json(&text).unwrap(), (p, charts), "{name}");
    }
}
