use std::ops::{Add, Mul, Neg, Sub};

use udg_graph::Point;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct V2 {
    pub x: f64,
    pub y: f64,
}

pub const fn v2(x: f64, y: f64) -> V2 {
    V2 { x, y }
}

impl V2 {
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn unit(self) -> V2 {
        self * (1.0 / self.norm())
    }

    pub fn dot(self, o: V2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// Rotation by `th` counter-clockwise.
    pub fn rot(self, th: f64) -> V2 {
        let (s, c) = th.sin_cos();
        v2(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn perp(self) -> V2 {
        v2(-self.y, self.x)
    }

    pub fn dist(self, o: V2) -> f64 {
        (self - o).norm()
    }

    pub fn mid(self, o: V2) -> V2 {
        (self + o) * 0.5
    }
}

impl Add for V2 {
    type Output = V2;
    fn add(self, o: V2) -> V2 {
        v2(self.x + o.x, self.y + o.y)
    }
}

impl Sub for V2 {
    type Output = V2;
    fn sub(self, o: V2) -> V2 {
        v2(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for V2 {
    type Output = V2;
    fn mul(self, k: f64) -> V2 {
        v2(self.x * k, self.y * k)
    }
}

impl Neg for V2 {
    type Output = V2;
    fn neg(self) -> V2 {
        v2(-self.x, -self.y)
    }
}

impl From<V2> for Point {
    fn from(p: V2) -> Point {
        Point::new(p.x, p.y)
    }
}

impl From<Point> for V2 {
    fn from(p: Point) -> V2 {
        v2(p.x, p.y)
    }
}

/// Mirror image of `p` in the line through `a` and `b`.
pub fn reflect(p: V2, a: V2, b: V2) -> V2 {
    let d = (b - a).unit();
    let q = p - a;
    a + d * (2.0 * q.dot(d)) - q
}
