//! Gamma- and beta-function numerics backing the Beta-kernel smoother.

/// Maximum iterations for the incomplete-beta continued fraction.
///
/// Generous on purpose: convergence slows near x ≈ a/(a+b) when a + b is
/// very large (concentrations up to ~1e6 are exercised by the smoother).
const MAX_CF_ITER: usize = 800;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural log of the gamma function, Lanczos approximation (g = 7, n = 9).
///
/// Domain: x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0, "ln_gamma domain: x > 0, got {x}");
    if x < 0.5 {
        // Reflection: Γ(x)Γ(1−x) = π / sin(πx).
        let pi = std::f64::consts::PI;
        (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x)
    } else {
        let z = x - 1.0;
        let mut acc = LANCZOS[0];
        for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
            acc += c / (z + i as f64);
        }
        let t = z + LANCZOS_G + 0.5;
        0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
    }
}

/// Natural log of the beta function B(a, b).
pub fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}

/// Beta density β(x; a, b) for x in (0, 1), evaluated in log space so
/// that large shape parameters do not overflow.
pub fn beta_pdf(x: f64, a: f64, b: f64) -> f64 {
    debug_assert!(x > 0.0 && x < 1.0, "beta_pdf domain: x in (0,1), got {x}");
    debug_assert!(a > 0.0 && b > 0.0);
    let ln_pdf = (a - 1.0) * x.ln() + (b - 1.0) * (-x).ln_1p() - ln_beta(a, b);
    ln_pdf.exp()
}

/// Regularized incomplete beta function I_x(a, b).
///
/// I_x(a, b) = B(x; a, b) / B(a, b) where B(x; a, b) = ∫₀ˣ t^{a−1}(1−t)^{b−1} dt.
/// Continued fraction (modified Lentz), with the symmetry
/// I_x(a, b) = 1 − I_{1−x}(b, a) applied for x past the convergence switch.
pub fn betainc_reg(x: f64, a: f64, b: f64) -> f64 {
    debug_assert!(a > 0.0 && b > 0.0);
    debug_assert!((0.0..=1.0).contains(&x));
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    if x > (a + 1.0) / (a + b + 2.0) {
        1.0 - betainc_cf(1.0 - x, b, a)
    } else {
        betainc_cf(x, a, b)
    }
}

/// Continued fraction for I_x(a, b), valid for x < (a+1)/(a+b+2).
fn betainc_cf(x: f64, a: f64, b: f64) -> f64 {
    let tiny = 1e-30;
    let eps = f64::EPSILON;

    let ln_prefix = a * x.ln() + b * (-x).ln_1p() - ln_beta(a, b);
    let prefix = ln_prefix.exp() / a;

    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;

    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < tiny {
        d = tiny;
    }
    d = 1.0 / d;
    let mut f = d;

    for m in 1..=MAX_CF_ITER {
        let fm = m as f64;
        let m2 = 2.0 * fm;

        // Even step: a_{2m} = m(b−m)x / ((a+2m−1)(a+2m)).
        let aa = fm * (b - fm) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < tiny {
            d = tiny;
        }
        c = 1.0 + aa / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        f *= d * c;

        // Odd step: a_{2m+1} = −(a+m)(a+b+m)x / ((a+2m)(a+2m+1)).
        let aa = -((a + fm) * (qab + fm) * x) / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < tiny {
            d = tiny;
        }
        c = 1.0 + aa / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = d * c;
        f *= delta;

        if (delta - 1.0).abs() < eps {
            break;
        }
    }
    prefix * f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_gamma_known_values() {
        // Γ(0.5) = √π, Γ(1) = 1, Γ(5) = 24.
        assert!((ln_gamma(0.5) - std::f64::consts::PI.sqrt().ln()).abs() < 1e-13);
        assert!(ln_gamma(1.0).abs() < 1e-13);
        assert!((ln_gamma(5.0) - 24.0f64.ln()).abs() < 1e-12);
        // Recurrence Γ(x+1) = xΓ(x) at a non-integer point.
        let x = 3.7;
        assert!((ln_gamma(x + 1.0) - (x.ln() + ln_gamma(x))).abs() < 1e-12);
    }

    #[test]
    fn beta_pdf_uniform_case() {
        // β(x; 1, 1) is the uniform density.
        for &x in &[0.1, 0.5, 0.9] {
            assert!((beta_pdf(x, 1.0, 1.0) - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn beta_pdf_integrates_to_one() {
        // Riemann check on a fine grid for a few parameter pairs.
        for &(a, b) in &[(2.0, 3.0), (0.5, 0.5), (80.0, 120.0)] {
            let n = 200_000;
            let sum: f64 = (0..n)
                .map(|i| beta_pdf((i as f64 + 0.5) / n as f64, a, b) / n as f64)
                .sum();
            assert!((sum - 1.0).abs() < 1e-4, "a={a} b={b} sum={sum}");
        }
    }

    #[test]
    fn betainc_endpoints_and_uniform() {
        assert_eq!(betainc_reg(0.0, 2.0, 3.0), 0.0);
        assert_eq!(betainc_reg(1.0, 2.0, 3.0), 1.0);
        // I_x(1, 1) = x.
        for &x in &[0.25, 0.5, 0.75] {
            assert!((betainc_reg(x, 1.0, 1.0) - x).abs() < 1e-14);
        }
    }

    #[test]
    fn betainc_hand_value() {
        // I_{0.5}(2, 3) = 11/16 by direct polynomial integration.
        assert!((betainc_reg(0.5, 2.0, 3.0) - 0.6875).abs() < 1e-13);
    }

    #[test]
    fn betainc_symmetry() {
        for &(x, a, b) in &[(0.3, 2.5, 1.5), (0.8, 0.7, 4.0), (0.5, 163.0, 163.0)] {
            let lhs = betainc_reg(x, a, b);
            let rhs = 1.0 - betainc_reg(1.0 - x, b, a);
            assert!((lhs - rhs).abs() < 1e-13, "x={x} a={a} b={b}");
        }
    }

    #[test]
    fn betainc_matches_density_quadrature() {
        // Cross-check the continued fraction against direct Riemann sums of
        // the density.
        for &(a, b) in &[(2.0, 5.0), (0.8, 0.8), (40.0, 60.0)] {
            for &x in &[0.2, 0.5, 0.7] {
                let n = 400_000;
                let riemann: f64 = (0..n)
                    .map(|i| beta_pdf(x * (i as f64 + 0.5) / n as f64, a, b) * x / n as f64)
                    .sum();
                let cf = betainc_reg(x, a, b);
                assert!((cf - riemann).abs() < 1e-5, "a={a} b={b} x={x}");
            }
        }
    }

    #[test]
    fn betainc_large_concentration() {
        // Concentration ν = 1e6 centered at 1/2: symmetric, sharp sigmoid.
        let a = 5e5;
        let b = 5e5;
        let mid = betainc_reg(0.5, a, b);
        assert!((mid - 0.5).abs() < 1e-9, "mid={mid}");
        let hi = betainc_reg(0.51, a, b);
        assert!(hi > 1.0 - 1e-12, "hi={hi}");
        let lo = betainc_reg(0.49, a, b);
        assert!(lo < 1e-12, "lo={lo}");
        // ±2 kernel standard deviations: between the center and saturation.
        let sd = (0.25f64 / (a + b + 1.0)).sqrt();
        let z2 = betainc_reg(0.5 + 2.0 * sd, a, b);
        assert!(z2 > 0.95 && z2 < 0.99, "z2={z2}");
    }
}
