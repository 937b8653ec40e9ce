use serde::{Deserialize, Serialize};

use crate::vec2::{v2, V2};

/// Polar coordinates read as `(r sin a, r cos a)`: the angle is measured
/// from the positive y axis towards the positive x axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarPoint {
    pub radius: f64,
    pub angle: f64,
}

impl PolarPoint {
    pub fn new(radius: f64, angle: f64) -> Self {
        PolarPoint { radius, angle }
    }

    pub fn to_cartesian(self) -> V2 {
        let (s, c) = self.angle.sin_cos();
        v2(self.radius * s, self.radius * c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turns() {
        let p = PolarPoint::new(2.0, 0.0).to_cartesian();
        assert_eq!((p.x, p.y), (0.0, 2.0));
        let q = PolarPoint::new(1.0, std::f64::consts::FRAC_PI_2).to_cartesian();
        assert!((q.x - 1.0).abs() < 1e-15 && q.y.abs() < 1e-15);
    }
}
