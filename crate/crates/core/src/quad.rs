//! Adaptive Gauss–Kronrod quadrature (G7, K15).
//!
//! Globally adaptive: panels are kept in a worst-error-first queue and the
//! worst panel is bisected until the summed error estimate meets the
//! absolute tolerance. This handles integrable endpoint singularities
//! (e.g. Beta kernels with shape < 1, logistic spectral densities) without
//! per-panel budgets that such integrands can never satisfy.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// 15-point Kronrod abscissae (positive half, outermost first).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

/// 15-point Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022_935_322_010_529_2,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

/// 7-point Gauss weights for the embedded rule (nodes XGK[1], XGK[3], XGK[5], center).
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One G7/K15 evaluation over [a, b]: returns (estimate, error estimate).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut result_k = WGK[7] * fc;
    let mut result_g = WG[3] * fc;

    for (j, &x) in XGK.iter().enumerate().take(7) {
        let dx = half * x;
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        result_k += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            result_g += WG[j / 2] * (f1 + f2);
        }
    }

    let value = result_k * half;
    let err = ((result_k - result_g) * half).abs();
    (value, err)
}

#[derive(Debug)]
struct Panel {
    err: f64,
    value: f64,
    a: f64,
    b: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Hard cap on panel subdivisions per integral.
const MAX_PANELS: usize = 100_000;

/// Integrate `f` over [a, b] to absolute tolerance `tol`.
///
/// Returns the estimate once the summed error of all panels is below `tol`
/// (or the subdivision budget is exhausted, which the integrands used in
/// this crate do not reach).
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    integrate_with_breakpoints(f, &[a, b], tol)
}

/// Integrate over [points[0], points.last()] with the interior points used
/// as initial panel boundaries. Breakpoints must be sorted; duplicates are
/// collapsed. Useful when the integrand has known kinks or sharp peaks.
pub fn integrate_with_breakpoints<F: Fn(f64) -> f64>(f: F, points: &[f64], tol: f64) -> f64 {
    assert!(points.len() >= 2, "need at least two breakpoints");
    let lo = points[0];
    let hi = points[points.len() - 1];
    if lo >= hi {
        return 0.0;
    }
    // Panels narrower than this are accepted as-is; keeps kernel evaluations
    // away from the extreme subnormal range next to interval endpoints.
    let min_width = (hi - lo) * 1e-30;

    let mut heap: BinaryHeap<Panel> = BinaryHeap::new();
    let mut settled_value = 0.0;
    let mut settled_err = 0.0;
    let mut active_value = 0.0;
    let mut active_err = 0.0;

    for w in points.windows(2) {
        if w[1] > w[0] {
            let (v, e) = gk15(&f, w[0], w[1]);
            active_value += v;
            active_err += e;
            heap.push(Panel {
                err: e,
                value: v,
                a: w[0],
                b: w[1],
            });
        }
    }

    let mut splits = 0;
    while active_err + settled_err > tol && splits < MAX_PANELS {
        let worst = match heap.pop() {
            Some(p) => p,
            None => break,
        };
        active_value -= worst.value;
        active_err -= worst.err;

        if worst.b - worst.a < min_width {
            // Too narrow to split further; accept its estimate.
            settled_value += worst.value;
            settled_err += worst.err;
            continue;
        }

        let mid = 0.5 * (worst.a + worst.b);
        let (v1, e1) = gk15(&f, worst.a, mid);
        let (v2, e2) = gk15(&f, mid, worst.b);
        active_value += v1 + v2;
        active_err += e1 + e2;
        heap.push(Panel {
            err: e1,
            value: v1,
            a: worst.a,
            b: mid,
        });
        heap.push(Panel {
            err: e2,
            value: v2,
            a: mid,
            b: worst.b,
        });
        splits += 1;
    }

    settled_value + active_value
}
