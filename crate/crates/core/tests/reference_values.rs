//! Matrix elements against a 30-digit quadrature of the same integrals.

use approx::assert_relative_eq;
use defrad::melem::{q_nm, tan_nm};
use defrad::DeformedMode;

fn mode(x: f64) -> DeformedMode {
    DeformedMode::from_deformation(x).unwrap()
}

#[test]
fn tangent_elements() {
    let cases = [
        (1e-3, 3, 0, 1.368_278_180_551_130_8e-5),
        (1.0, 3, 0, 0.182_418_494_484_320_01),
        (1.0, 1, 0, 0.629_030_897_695_633_1),
        (0.5, 5, 2, 0.245_792_084_187_572_35),
    ];
    for (x, n, m, want) in cases {
        let got = tan_nm(&mode(x), n, m).unwrap().value;
        assert_eq!(got.im, 0.0);
        assert_relative_eq!(got.re, want, max_relative = 1e-10);
    }
}

#[test]
fn position_elements() {
    // value / (i hbar sqrt(beta)); beta = x here
    let cases = [
        (1.0, 1, 0, -1.017_793_372_445_392_3),
        (1.0, 3, 0, -0.295_159_324_252_215),
        (1.0, 2, 1, -1.730_405_647_616_058_7),
        (2.0, 2, 1, -1.599_516_410_592_373_4),
    ];
    for (x, n, m, want) in cases {
        let got = q_nm(&mode(x), n, m).unwrap().value;
        assert_eq!(got.re, 0.0);
        assert_relative_eq!(got.im / x.sqrt(), want, max_relative = 1e-10);
    }
}

#[test]
fn units_scale_position_elements() {
    // same alpha (beta*hbar*omega = 1), hbar = 0.5, beta = 4
    let m = DeformedMode::new(0.5, 4.0, 0.5).unwrap();
    let got = q_nm(&m, 2, 1).unwrap().value.im;
    assert_relative_eq!(
        got,
        0.5 * 2.0 * -1.730_405_647_616_058_7,
        max_relative = 1e-10
    );
}
