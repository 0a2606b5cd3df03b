//! Numerical quadrature: adaptive Gauss-Kronrod, fixed Gauss-Legendre,
//! and the uniform-grid trapezoid/Simpson weights used by the time marchers.

use crate::error::EngineError;
use crate::Result;

/// 7-point Gauss / 15-point Kronrod node-weight pair on [-1, 1].
/// Nodes are symmetric; only the nonnegative half is stored.
const KRONROD_NODES: [f64; 8] = [
    0.000000000000000000000000000000000,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
];
const KRONROD_WEIGHTS: [f64; 8] = [
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
];
/// Gauss weights matching nodes 1, 3, 5 (paired +/-) and the center node 0.
const GAUSS_WEIGHTS: [f64; 4] = [
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
];

fn gauss_kronrod_cell<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> (f64, f64) {
    let half = 0.5 * (hi - lo);
    let mid = 0.5 * (hi + lo);
    let f_mid = f(mid);
    let mut kronrod = KRONROD_WEIGHTS[0] * f_mid;
    let mut gauss = GAUSS_WEIGHTS[0] * f_mid;
    for j in 1..8 {
        let dx = half * KRONROD_NODES[j];
        let pair = f(mid - dx) + f(mid + dx);
        kronrod += KRONROD_WEIGHTS[j] * pair;
        if j % 2 == 0 {
            gauss += GAUSS_WEIGHTS[j / 2] * pair;
        }
    }
    let value = kronrod * half;
    let err = ((kronrod - gauss) * half).abs();
    // Standard QUADPACK error sharpening.
    let err = if err != 0.0 {
        let scale = (200.0 * err / value.abs().max(1e-300)).min(1.0);
        (err * scale.powf(1.5)).max(err * 1e-12)
    } else {
        0.0
    };
    (value, err)
}

/// Adaptive Gauss-Kronrod integration of `f` over [lo, hi] to absolute
/// tolerance `abs_tol`. Bisects the worst cell until the summed error
/// estimate passes or the subdivision budget runs out.
pub fn integrate_gk<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, abs_tol: f64) -> Result<f64> {
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(EngineError::Integration(
            "non-finite integration limits".into(),
        ));
    }
    if lo == hi {
        return Ok(0.0);
    }
    let (v, e) = gauss_kronrod_cell(&f, lo, hi);
    let mut cells = vec![(lo, hi, v, e)];
    let max_cells = 2000;
    loop {
        let total_err: f64 = cells.iter().map(|c| c.3).sum();
        if total_err <= abs_tol {
            return Ok(cells.iter().map(|c| c.2).sum());
        }
        if cells.len() >= max_cells {
            return Err(EngineError::Integration(format!(
                "adaptive quadrature stalled at {} cells with error {:e} > tol {:e}",
                cells.len(),
                total_err,
                abs_tol
            )));
        }
        let worst = cells
            .iter()
            .enumerate()
            .max_by(|a, b| a.1 .3.partial_cmp(&b.1 .3).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        let (a, b, _, _) = cells.swap_remove(worst);
        let m = 0.5 * (a + b);
        let (v1, e1) = gauss_kronrod_cell(&f, a, m);
        let (v2, e2) = gauss_kronrod_cell(&f, m, b);
        cells.push((a, m, v1, e1));
        cells.push((m, b, v2, e2));
    }
}

/// Upper-truncated integral over [lo, inf): marches in doubling windows
/// until a window contributes less than `tail_tol` relative to the total.
pub fn integrate_gk_upper<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    abs_tol: f64,
    tail_tol: f64,
) -> Result<f64> {
    let mut total = 0.0;
    let mut a = lo;
    let mut width = 1.0f64.max(lo.abs() * 0.5);
    for _ in 0..64 {
        let b = a + width;
        let piece = integrate_gk(&f, a, b, abs_tol)?;
        total += piece;
        if piece.abs() <= tail_tol * total.abs().max(1e-300) && width > 8.0 {
            return Ok(total);
        }
        a = b;
        width *= 2.0;
    }
    Err(EngineError::Integration(
        "semi-infinite integral did not settle within the window budget".into(),
    ))
}

const GL32_NODES: [f64; 16] = [
    0.048307665687738316234812570441,
    0.144471961582796493485186373599,
    0.239287362252137074544603209166,
    0.331868602282127649779916805730,
    0.421351276130635345364119436172,
    0.506899908932229390023747474378,
    0.587715757240762329040745476402,
    0.663044266930215200975115168663,
    0.732182118740289680387426665091,
    0.794483795967942406963097298970,
    0.849367613732569970133693004968,
    0.896321155766052123965307243719,
    0.934906075937739689170919134835,
    0.964762255587506430773811928118,
    0.985611511545268335400175044631,
    0.997263861849481563544981128665,
];
const GL32_WEIGHTS: [f64; 16] = [
    0.096540088514727800566764830063,
    0.095638720079274859419082002204,
    0.093844399080804565639180237668,
    0.091173878695763884712868577111,
    0.087652093004403811142771462751,
    0.083311924226946755222199074604,
    0.078193895787070306471740918828,
    0.072345794108848506225399356478,
    0.065822222776361846837650063706,
    0.058684093478535547145283637300,
    0.050998059262376176196163244690,
    0.042835898022226680656878646606,
    0.034273862913021433102687732252,
    0.025392065309262059455752589789,
    0.016274394730905670605170562206,
    0.007018610009470096600407063739,
];

/// Fixed 32-point Gauss-Legendre rule on [lo, hi].
pub fn gauss_legendre_32<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> f64 {
    let half = 0.5 * (hi - lo);
    let mid = 0.5 * (hi + lo);
    let mut acc = 0.0;
    for j in 0..16 {
        let dx = half * GL32_NODES[j];
        acc += GL32_WEIGHTS[j] * (f(mid - dx) + f(mid + dx));
    }
    acc * half
}

/// Quadrature rule for the temporal premium integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TimeQuadrature {
    Trapezoid,
    Simpson,
}

/// Weights for a uniform grid with `n` nodes and spacing `h`.
///
/// Simpson needs an even interval count; for an odd count the final
/// interval is handled by a trapezoid cell so the rule stays usable on
/// any grid the solver produces.
pub fn uniform_weights(rule: TimeQuadrature, n: usize, h: f64) -> Vec<f64> {
    assert!(n >= 2, "quadrature grid needs at least two nodes");
    let mut w = vec![0.0; n];
    match rule {
        TimeQuadrature::Trapezoid => {
            w[0] = 0.5 * h;
            w[n - 1] = 0.5 * h;
            for wi in w.iter_mut().take(n - 1).skip(1) {
                *wi = h;
            }
        }
        TimeQuadrature::Simpson => {
            let intervals = n - 1;
            let simpson_end = if intervals % 2 == 0 { n - 1 } else { n - 2 };
            w[0] = h / 3.0;
            for (i, wi) in w.iter_mut().enumerate().take(simpson_end).skip(1) {
                *wi = if i % 2 == 1 { 4.0 * h / 3.0 } else { 2.0 * h / 3.0 };
            }
            w[simpson_end] += h / 3.0;
            if simpson_end != n - 1 {
                w[simpson_end] += 0.5 * h;
                w[n - 1] += 0.5 * h;
            }
        }
    }
    w
}
