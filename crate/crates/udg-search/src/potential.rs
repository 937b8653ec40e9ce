//! Violation potential over flat coordinate vectors `[x0, y0, x1, y1, ...]`.

use udg_graph::Graph;

/// `sum_edges max(0, d - 1 + delta)^2 + sum_nonedges max(0, 1 + delta - d)^2`.
pub fn potential(g: &Graph, x: &[f64], delta: f64) -> f64 {
    let mut s = 0.0;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let d = (x[2 * u] - x[2 * v]).hypot(x[2 * u + 1] - x[2 * v + 1]);
            let t = term(g.has_edge(u, v), d, delta);
            s += t * t;
        }
    }
    s
}

/// Signed violation: positive when the pair is on the wrong side.
fn term(edge: bool, d: f64, delta: f64) -> f64 {
    if edge {
        (d - 1.0 + delta).max(0.0)
    } else {
        (1.0 + delta - d).max(0.0)
    }
}

/// Potential and its gradient. Coincident points contribute no gradient.
pub fn potential_grad(g: &Graph, x: &[f64], delta: f64, grad: &mut [f64]) -> f64 {
    grad.iter_mut().for_each(|v| *v = 0.0);
    let mut s = 0.0;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let dx = x[2 * u] - x[2 * v];
            let dy = x[2 * u + 1] - x[2 * v + 1];
            let d = dx.hypot(dy);
            let edge = g.has_edge(u, v);
            let t = term(edge, d, delta);
            if t == 0.0 {
                continue;
            }
            s += t * t;
            if d == 0.0 {
                continue;
            }
            let c = if edge { 2.0 * t / d } else { -2.0 * t / d };
            grad[2 * u] += c * dx;
            grad[2 * u + 1] += c * dy;
            grad[2 * v] -= c * dx;
            grad[2 * v + 1] -= c * dy;
        }
    }
    s
}
