//! Classical 3×3 Laplacian stencils and the four quarter-window kernels.
//!
//! Kernels are stored as exact rationals: small integer numerators over a
//! shared denominator. Coefficient `(dx, dy)` weights the sample at
//! `(x + dx, y + dy)`, so row `dy = -1` is the top row as printed.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A 3×3 stencil with rational coefficients `numerators[row][col] / denominator`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Kernel3 {
    numerators: [[i32; 3]; 3],
    denominator: i32,
}

impl Kernel3 {
    pub const fn new(numerators: [[i32; 3]; 3], denominator: i32) -> Self {
        assert!(denominator > 0);
        Self {
            numerators,
            denominator,
        }
    }

    pub fn numerators(&self) -> &[[i32; 3]; 3] {
        &self.numerators
    }

    pub fn denominator(&self) -> i32 {
        self.denominator
    }

    /// Coefficient at offset `(dx, dy)`, each in `-1..=1`.
    pub fn at(&self, dx: i32, dy: i32) -> f64 {
        f64::from(self.numerators[(dy + 1) as usize][(dx + 1) as usize]) / f64::from(self.denominator)
    }

    /// Rows of real coefficients, top to bottom.
    pub fn coefficients(&self) -> [[f64; 3]; 3] {
        let d = f64::from(self.denominator);
        self.numerators.map(|row| row.map(|n| f64::from(n) / d))
    }

    /// Exact sum of coefficients as `(numerator, denominator)`.
    pub fn sum_rational(&self) -> (i32, i32) {
        (self.numerators.iter().flatten().sum(), self.denominator)
    }

    pub fn sum(&self) -> f64 {
        let (n, d) = self.sum_rational();
        f64::from(n) / f64::from(d)
    }

    /// Rotates the coefficient grid 90° clockwise.
    pub fn rotate_cw(&self) -> Self {
        let n = &self.numerators;
        let mut out = [[0; 3]; 3];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, v) in row.iter_mut().enumerate() {
                *v = n[2 - c][r];
            }
        }
        Self::new(out, self.denominator)
    }

    /// Mirrors left↔right.
    pub fn flip_horizontal(&self) -> Self {
        Self::new(self.numerators.map(|[a, b, c]| [c, b, a]), self.denominator)
    }

    /// Mirrors top↔bottom.
    pub fn flip_vertical(&self) -> Self {
        let [a, b, c] = self.numerators;
        Self::new([c, b, a], self.denominator)
    }
}

impl fmt::Display for Kernel3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.numerators {
            let cells: Vec<String> = row
                .iter()
                .map(|&n| {
                    if n == 0 {
                        "0".to_string()
                    } else {
                        format!("{n}/{}", self.denominator)
                    }
                })
                .collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// The three classical discrete Laplacians.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum LaplacianVariant {
    /// Five-point stencil: edges 1/4, corners 0.
    Standard4,
    /// Edges 5/16, corners −1/16.
    Sharp16,
    /// Edges 1/6, corners 1/12; the most isotropic of the three.
    #[default]
    Isotropic12,
}

impl LaplacianVariant {
    pub const ALL: [LaplacianVariant; 3] = [Self::Standard4, Self::Sharp16, Self::Isotropic12];

    pub fn name(self) -> &'static str {
        match self {
            Self::Standard4 => "standard4",
            Self::Sharp16 => "sharp16",
            Self::Isotropic12 => "isotropic12",
        }
    }
}

impl fmt::Display for LaplacianVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LaplacianVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::param("kernel", format!("unknown Laplacian variant {s:?}")))
    }
}

pub fn laplacian_kernel(variant: LaplacianVariant) -> Kernel3 {
    match variant {
        LaplacianVariant::Standard4 => Kernel3::new([[0, 1, 0], [1, -4, 1], [0, 1, 0]], 4),
        LaplacianVariant::Sharp16 => Kernel3::new([[-1, 5, -1], [5, -16, 5], [-1, 5, -1]], 16),
        LaplacianVariant::Isotropic12 => Kernel3::new([[1, 2, 1], [2, -12, 2], [1, 2, 1]], 12),
    }
}

/// Quarter kernels k1..k4: upper-left, upper-right, lower-right, lower-left.
///
/// Each averages the three other pixels of one 2×2 window containing the
/// center and subtracts the center.
pub fn quarter_kernels() -> [Kernel3; 4] {
    [
        Kernel3::new([[1, 1, 0], [1, -3, 0], [0, 0, 0]], 3),
        Kernel3::new([[0, 1, 1], [0, -3, 1], [0, 0, 0]], 3),
        Kernel3::new([[0, 0, 0], [0, -3, 1], [0, 1, 1]], 3),
        Kernel3::new([[0, 0, 0], [1, -3, 0], [1, 1, 0]], 3),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laplacians_match_printed_matrices() {
        let s4 = laplacian_kernel(LaplacianVariant::Standard4).coefficients();
        assert_eq!(s4, [[0.0, 0.25, 0.0], [0.25, -1.0, 0.25], [0.0, 0.25, 0.0]]);

        let sh = laplacian_kernel(LaplacianVariant::Sharp16).coefficients();
        let (c, e) = (-1.0 / 16.0, 5.0 / 16.0);
        assert_eq!(sh, [[c, e, c], [e, -1.0, e], [c, e, c]]);

        let iso = laplacian_kernel(LaplacianVariant::Isotropic12).coefficients();
        let (c, e) = (1.0 / 12.0, 1.0 / 6.0);
        assert_eq!(iso, [[c, e, c], [e, -1.0, e], [c, e, c]]);
    }

    #[test]
    fn quarter_kernels_match_printed_matrices() {
        let t = 1.0 / 3.0;
        let [k1, k2, k3, k4] = quarter_kernels().map(|k| k.coefficients());
        assert_eq!(k1, [[t, t, 0.0], [t, -1.0, 0.0], [0.0, 0.0, 0.0]]);
        assert_eq!(k2, [[0.0, t, t], [0.0, -1.0, t], [0.0, 0.0, 0.0]]);
        assert_eq!(k3, [[0.0, 0.0, 0.0], [0.0, -1.0, t], [0.0, t, t]]);
        assert_eq!(k4, [[0.0, 0.0, 0.0], [t, -1.0, 0.0], [t, t, 0.0]]);
    }

    #[test]
    fn offsets_follow_raster_convention() {
        let [k1, ..] = quarter_kernels();
        for (dx, dy) in [(-1, -1), (0, -1), (-1, 0)] {
            assert_eq!(k1.at(dx, dy), 1.0 / 3.0);
        }
        assert_eq!(k1.at(0, 0), -1.0);
        assert_eq!(k1.at(1, 1), 0.0);
    }

    #[test]
    fn all_kernels_are_zero_sum_with_unit_center() {
        let all = LaplacianVariant::ALL
            .into_iter()
            .map(laplacian_kernel)
            .chain(quarter_kernels());
        for k in all {
            assert_eq!(k.sum_rational().0, 0, "{k}");
            assert_eq!(k.at(0, 0), -1.0);
        }
    }

    #[test]
    fn quarter_set_is_closed_under_rotation_and_flips() {
        let [k1, k2, k3, k4] = quarter_kernels();
        assert_eq!(k1.rotate_cw(), k2);
        assert_eq!(k2.rotate_cw(), k3);
        assert_eq!(k3.rotate_cw(), k4);
        assert_eq!(k4.rotate_cw(), k1);
        assert_eq!(k1.flip_horizontal(), k2);
        assert_eq!(k1.flip_vertical(), k4);
        assert_eq!(k3.flip_horizontal(), k4);
    }

    #[test]
    fn variant_names_round_trip() {
        for v in LaplacianVariant::ALL {
            assert_eq!(v.name().parse::<LaplacianVariant>().unwrap(), v);
        }
        assert!("nine".parse::<LaplacianVariant>().is_err());
    }
}
