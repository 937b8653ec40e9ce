//! Geometry of one hexagon block and the attachment points around it.
//!
//! The block lives in a frame where `g3 - g1` is horizontal. Vertices named
//! `g*` sit near the bottom line (part U), `b*` near the top line (part W);
//! heights differ from 0 and 1 by multiples of `eps^2`.

use crate::vec2::{reflect, v2, V2};

pub const UP: V2 = v2(0.0, 1.0);

#[derive(Debug, Clone, Copy)]
pub struct BlockPoints {
    pub x12: V2,
    pub b2: V2,
    pub g2: V2,
    pub y23: V2,
    pub x23: V2,
    pub y12: V2,
    pub g1: V2,
    pub g3: V2,
    pub b1: V2,
    pub b3: V2,
    pub r1: V2,
    pub r2: V2,
    pub s1: V2,
    pub s2: V2,
}

impl BlockPoints {
    fn map(&self, f: impl Fn(V2) -> V2) -> BlockPoints {
        BlockPoints {
            x12: f(self.x12),
            b2: f(self.b2),
            g2: f(self.g2),
            y23: f(self.y23),
            x23: f(self.x23),
            y12: f(self.y12),
            g1: f(self.g1),
            g3: f(self.g3),
            b1: f(self.b1),
            b3: f(self.b3),
            r1: f(self.r1),
            r2: f(self.r2),
            s1: f(self.s1),
            s2: f(self.s2),
        }
    }
}

/// Point on the circle about `center` through `other`, turned so the chord
/// from `other` has length `chord`.
fn circle_point(center: V2, other: V2, chord: f64, side: f64) -> V2 {
    let v = other - center;
    let th = 2.0 * (chord / 2.0 / v.norm()).asin();
    center + v.rot(th * side)
}

/// Two unit rectangles of width `eps` crossing along `b2 g2`, with `g1`
/// and `g3` at chord `2 eps` from the rectangle corners.
fn raw_block(eps: f64) -> BlockPoints {
    let x12 = v2(0.0, 0.0);
    let b2 = v2(eps, 0.0);
    let g2 = v2(0.0, 1.0);
    let y23 = v2(eps, 1.0);
    let x23 = reflect(x12, b2, g2);
    let y12 = reflect(y23, b2, g2);
    let pick = |c: [V2; 2], left: bool| {
        if (c[0].x < c[1].x) == left {
            c[0]
        } else {
            c[1]
        }
    };
    let g1 = pick([1.0, -1.0].map(|s| circle_point(g2, x12, 2.0 * eps, s)), true);
    let g3 = pick([1.0, -1.0].map(|s| circle_point(g2, x23, 2.0 * eps, s)), false);
    let ctr = b2.mid(g2);
    BlockPoints {
        x12,
        b2,
        g2,
        y23,
        x23,
        y12,
        g1,
        g3,
        b1: ctr * 2.0 - g3,
        b3: ctr * 2.0 - g1,
        r1: x12.mid(b2),
        r2: g2.mid(y23),
        s1: b2.mid(x23),
        s2: g2.mid(y12),
    }
}

/// Horizontal lines used by lobster pieces glued to blocks.
#[derive(Debug, Clone, Copy)]
pub struct Lines {
    pub l1: f64,
    pub l2: f64,
    pub l3: f64,
    pub l4: f64,
    /// horizontal step between consecutive spine vertices
    pub mu: f64,
}

impl Lines {
    /// Inner lines at heights `l3` and `l3 + h`, outer lines `(1 - h)/2`
    /// beyond them, spine step `sqrt(1 - h^2)`.
    pub fn from_inner(l3: f64, h: f64) -> Lines {
        let c = (1.0 - h) / 2.0;
        Lines {
            l1: l3 + h + c,
            l2: l3 + h,
            l3,
            l4: l3 - c,
            mu: (1.0 - h * h).sqrt(),
        }
    }

    pub fn inner(&self, top: bool) -> f64 {
        if top {
            self.l2
        } else {
            self.l3
        }
    }

    pub fn outer(&self, top: bool) -> f64 {
        if top {
            self.l1
        } else {
            self.l4
        }
    }
}

/// Attachment points at one end of a block: the end vertex not glued is
/// split into `u1`, `u2`; leg and foot of the glued vertex go to `a3`, `a4`;
/// pendants of the split halves to `h1`, `h2`. `dx` is the twin direction.
#[derive(Debug, Clone, Copy)]
pub struct Attach {
    pub u1: V2,
    pub u2: V2,
    pub a3: V2,
    pub a4: V2,
    pub h1: V2,
    pub h2: V2,
    pub dx: V2,
}

#[derive(Debug, Clone, Copy)]
pub struct BlockGeometry {
    pub eps: f64,
    pub base: BlockPoints,
    pub period: f64,
    pub lines: Lines,
}

impl BlockGeometry {
    pub fn new(eps: f64) -> BlockGeometry {
        let raw = raw_block(eps);
        let t = raw.g3 - raw.g1;
        let th = -t.y.atan2(t.x);
        let base = raw.map(|p| p.rot(th));
        let h = base.b3.y - base.g3.y;
        BlockGeometry {
            eps,
            base,
            period: t.norm(),
            lines: Lines::from_inner(base.g3.y, h),
        }
    }

    /// Block translated right by `x`.
    pub fn at(&self, x: f64) -> BlockPoints {
        self.base.map(|p| p + v2(x, 0.0))
    }

    /// Attachment at the right (`right == true`) or left end of the block
    /// at offset `x`, glued at the top (`b`) or bottom (`g`) corner.
    pub fn attach(&self, x: f64, right: bool, top: bool) -> Attach {
        let p = self.at(x);
        let pn = self.at(x + self.period);
        let u1 = p.g3.mid(p.x23);
        let u2 = p.g3.mid(pn.x12);
        let a3 = u1.mid(u2);
        let c = p.b2.mid(p.g2);
        let point_refl = |q: V2| c * 2.0 - q;
        let line_refl = |q: V2| reflect(q, p.b2, p.g2);
        let f = |q: V2| match (right, top) {
            (true, true) => q,
            (true, false) => line_refl(point_refl(q)),
            (false, true) => line_refl(q),
            (false, false) => point_refl(q),
        };
        Attach {
            u1: f(u1),
            u2: f(u2),
            a3: f(a3),
            a4: f(a3 + UP),
            h1: f(u1 + UP),
            h2: f(u2 + UP),
            dx: f(a3 + v2(1.0, 0.0)) - f(a3),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_sides_are_unit_or_shorter() {
        let e = 1.0 / 256.0;
        let g = BlockGeometry::new(e);
        let p = g.base;
        for (a, b) in [
            (p.g1, p.g2),
            (p.g2, p.g3),
            (p.g3, p.b3),
            (p.b3, p.b2),
            (p.b2, p.b1),
            (p.b1, p.g1),
        ] {
            assert!(a.dist(b) <= 1.0 + 1e-12);
        }
        assert!((p.r1.dist(p.r2) - 1.0).abs() < 1e-12);
        let d = p.g1.dist(p.b1);
        assert!(d >= 1.0 - 10.0 * e * e && d <= 1.0 - 9.0 * e * e);
    }
}
