//! Composite Simpson quadrature on uniform meshes.

/// Integrate samples on a uniform mesh of step `h` by composite Simpson.
///
/// Requires an odd number of samples (an even number of intervals); the
/// solver meshes used throughout the crate satisfy this by construction.
pub fn simpson(samples: &[f64], h: f64) -> f64 {
    let n = samples.len();
    assert!(n >= 3 && n % 2 == 1, "simpson needs an odd sample count, got {n}");
    let mut acc = samples[0] + samples[n - 1];
    for (i, &v) in samples.iter().enumerate().take(n - 1).skip(1) {
        acc += if i % 2 == 1 { 4.0 * v } else { 2.0 * v };
    }
    acc * h / 3.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn integrates_sine_over_half_period() {
        let n = 512;
        let h = PI / n as f64;
        let samples: Vec<f64> = (0..=n).map(|i| (i as f64 * h).sin()).collect();
        assert!((simpson(&samples, h) - 2.0).abs() < 1e-10);
    }

    #[test]
    fn exact_for_cubics() {
        let n = 8;
        let h = 0.25;
        let samples: Vec<f64> = (0..=n)
            .map(|i| {
                let x = i as f64 * h;
                x * x * x - 2.0 * x + 1.0
            })
            .collect();
        let exact = 2.0_f64.powi(4) / 4.0 - 2.0 * 2.0 + 2.0;
        assert!((simpson(&samples, h) - exact).abs() < 1e-13);
    }
}
