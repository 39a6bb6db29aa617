//! Three-real-root cubic solver.
//!
//! Solves monic cubics whose roots are known to be real (here: displaced
//! characteristic polynomials of matrices that embed into real symmetric
//! ones). The trigonometric form of the depressed cubic avoids complex
//! intermediates entirely; each root then gets one guarded Newton step.
//!
//! Double roots of a cubic are ill-conditioned (O(√ε) error for O(ε)
//! coefficient noise), so after the solve a near-coincident pair is repaired
//! through Vieta: the isolated root is well-conditioned, and the pair is
//! recovered from the exact coefficient sum.

use std::f64::consts::PI;

/// Roots of `λ³ + b2 λ² + b1 λ + b0`, ascending. All roots must be real;
/// a slightly negative discriminant from roundoff is clamped.
pub fn roots_real(b2: f64, b1: f64, b0: f64) -> [f64; 3] {
    // depress: λ = u − b2/3
    let shift = b2 / 3.0;
    let p = b1 - b2 * b2 / 3.0;
    let q = 2.0 * b2 * b2 * b2 / 27.0 - b2 * b1 / 3.0 + b0;

    let mut roots = if p >= -1e-300 {
        // triple (or near-triple) root region: p ≈ 0 forces q ≈ 0 for
        // all-real roots
        let u = -cbrt(q);
        [u, u, u]
    } else {
        let t = 2.0 * (-p / 3.0).sqrt();
        // cos(3θ) = 3q / (p t); clamp against roundoff outside [-1, 1]
        let arg = (3.0 * q / (p * t)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        [
            t * theta.cos(),
            t * (theta - 2.0 * PI / 3.0).cos(),
            t * (theta - 4.0 * PI / 3.0).cos(),
        ]
    };

    for u in roots.iter_mut() {
        *u -= shift;
        *u = newton_polish(*u, b2, b1, b0);
    }
    roots.sort_by(|x, y| x.total_cmp(y));

    vieta_repair(roots, b2)
}

fn cbrt(x: f64) -> f64 {
    x.signum() * x.abs().powf(1.0 / 3.0)
}

fn newton_polish(x: f64, b2: f64, b1: f64, b0: f64) -> f64 {
    let f = ((x + b2) * x + b1) * x + b0;
    let df = (3.0 * x + 2.0 * b2) * x + b1;
    let scale = x.abs().max(1.0);
    if df.abs() <= 1e-12 * scale * scale {
        return x; // at a (near-)double root the Newton step is noise
    }
    let step = f / df;
    if step.abs() > 0.1 * scale {
        return x;
    }
    x - step
}

fn vieta_repair(mut roots: [f64; 3], b2: f64) -> [f64; 3] {
    let scale = 1.0 + roots.iter().fold(0.0f64, |m, r| m.max(r.abs()));
    let tol = 1e-7 * scale;
    let close01 = roots[1] - roots[0] <= tol;
    let close12 = roots[2] - roots[1] <= tol;
    match (close01, close12) {
        (true, true) => {
            let u = -b2 / 3.0;
            [u, u, u]
        }
        (true, false) => {
            // roots[2] is simple and accurate; recover the pair from the sum
            let pair = 0.5 * (-b2 - roots[2]);
            roots[0] = pair;
            roots[1] = pair;
            roots
        }
        (false, true) => {
            let pair = 0.5 * (-b2 - roots[0]);
            roots[1] = pair;
            roots[2] = pair;
            roots
        }
        (false, false) => roots,
    }
}
