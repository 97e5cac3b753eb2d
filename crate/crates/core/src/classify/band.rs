use crate::error::{Error, Result};

/// The two roots in `z` of `C(x, y, z) = 4` for real `x, y >= 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandFunctions {
    pub x: f64,
    pub y: f64,
    pub m_minus: f64,
    pub m_plus: f64,
}

impl BandFunctions {
    /// Whether `z` lies in the closed band `[m-, m+]`.
    pub fn contains(&self, z: f64) -> bool {
        self.m_minus <= z && z <= self.m_plus
    }

    /// Distance from `z` to the nearer band edge.
    pub fn edge_distance(&self, z: f64) -> f64 {
        (z - self.m_minus).abs().min((z - self.m_plus).abs())
    }
}

pub fn band_functions(x: f64, y: f64) -> Result<BandFunctions> {
    if !(x >= 2.0 && y >= 2.0) {
        return Err(Error::BandDomain { x, y });
    }
    let root = ((x * x - 4.0) * (y * y - 4.0)).sqrt();
    let m_plus = 0.5 * (x * y + root);
    // m- m+ = x^2 + y^2 - 4 avoids cancellation in xy - root.
    let m_minus = (x * x + y * y - 4.0) / m_plus;
    Ok(BandFunctions {
        x,
        y,
        m_minus,
        m_plus,
    })
}

/// `(xy - sqrt((x^2 - 4)(y^2 - 4))) / 2`.
pub fn m_minus(x: f64, y: f64) -> Result<f64> {
    band_functions(x, y).map(|b| b.m_minus)
}

/// `(xy + sqrt((x^2 - 4)(y^2 - 4))) / 2`.
pub fn m_plus(x: f64, y: f64) -> Result<f64> {
    band_functions(x, y).map(|b| b.m_plus)
}
