use udg_graph::Point;

/// Orientation values inside this band count as collinear.
pub const DEADBAND: f64 = 1e-12;

pub fn dist(a: Point, b: Point) -> f64 {
    (a.x - b.x).hypot(a.y - b.y)
}

/// Twice the signed area of `abc`.
pub fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Crossing {
    Proper,
    Apart,
    /// some triple is collinear within the deadband
    Degenerate,
}

/// Do the open segments `[a, b]` and `[c, d]` cross?
pub fn segments_cross(a: Point, b: Point, c: Point, d: Point) -> Crossing {
    let o = [orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b)];
    if o.iter().any(|x| x.abs() <= DEADBAND) {
        return Crossing::Degenerate;
    }
    if (o[0] > 0.0) != (o[1] > 0.0) && (o[2] > 0.0) != (o[3] > 0.0) {
        Crossing::Proper
    } else {
        Crossing::Apart
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_cases() {
        let p = |x, y| Point::new(x, y);
        assert_eq!(
            segments_cross(p(0., 0.), p(1., 1.), p(0., 1.), p(1., 0.)),
            Crossing::Proper
        );
        assert_eq!(
            segments_cross(p(0., 0.), p(1., 0.), p(0., 1.), p(1., 1.)),
            Crossing::Apart
        );
        assert_eq!(
            segments_cross(p(0., 0.), p(2., 0.), p(1., 0.), p(1., 1.)),
            Crossing::Degenerate
        );
    }
}
