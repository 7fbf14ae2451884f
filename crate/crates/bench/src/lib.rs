//! Deterministic inputs shared by the benchmarks.

use kgtube::ads_modes::{FreqNode, ModeVector};
use kgtube::harmonics::indices_up_to;
use kgtube::Complex64;

/// Frequency nodes that avoid the Gamma poles for Δ = 4.2.
pub const OMEGAS: [f64; 6] = [-2.35, -0.95, -0.45, 0.45, 0.95, 2.35];

/// `(ω, l)` pairs over [`OMEGAS`] and `0..=lmax`.
pub fn points(lmax: u32) -> Vec<(f64, u32)> {
    OMEGAS.iter().flat_map(|&w| (0..=lmax).map(move |l| (w, l))).collect()
}

/// A mode vector with every entry filled by a fixed quasi-random pattern.
pub fn mode_vector(d: usize, lmax: u32) -> ModeVector {
    let grid: Vec<FreqNode> = OMEGAS.iter().map(|&omega| FreqNode { omega, weight: 0.3 }).collect();
    let mut phi = ModeVector::new(grid).expect("grid is valid");
    let mut k = 0.0f64;
    for &w in &OMEGAS {
        for idx in indices_up_to(d, lmax) {
            k += 1.0;
            let a = Complex64::new((1.3 * k).sin(), (2.1 * k).cos());
            let b = Complex64::new((0.7 * k).cos(), (1.7 * k).sin());
            phi.set(w, idx, a, b).expect("index fits d");
        }
    }
    phi
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_sizes() {
        assert_eq!(points(2).len(), 18);
        // 1 + 3 + 5 harmonics up to l = 2 on S², per node
        assert_eq!(mode_vector(3, 2).len(), 6 * 9);
    }
}
