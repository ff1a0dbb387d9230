//! Spherical Bessel functions of the first kind and tables of their zeros.

use std::f64::consts::PI;

const RESCALE_THRESHOLD: f64 = 1e250;
const RESCALE_FACTOR: f64 = 1e-250;
// Zeros of j_l for l ≥ 1 are more than π apart, so a scan step below π
// brackets at most one zero per step.
const SCAN_STEP: f64 = 0.5 * PI;

/// j_l(x) for x ≥ 0.
///
/// Closed forms are used for l ≤ 1. Higher orders come from Miller's
/// downward recurrence j_{k−1} = (2k+1)/x · j_k − j_{k+1}, started well above
/// max(l, x) and normalized against whichever of j_0, j_1 is larger in
/// magnitude.
pub fn spherical_bessel_j(l: usize, x: f64) -> f64 {
    if x == 0.0 {
        return if l == 0 { 1.0 } else { 0.0 };
    }
    let (s, c) = x.sin_cos();
    let j0 = s / x;
    let j1 = s / (x * x) - c / x;
    match l {
        0 => return j0,
        1 => return j1,
        _ => {}
    }

    let top = l.max(x.ceil() as usize);
    let start = top + 20 + (40.0 * top as f64).sqrt() as usize;
    let mut upper = 0.0; // f_{k+1}
    let mut current = 1e-30; // f_k
    let mut at_l = 0.0;
    let mut at_1 = 0.0;
    let mut at_0 = 0.0;
    for k in (1..=start).rev() {
        let lower = (2 * k + 1) as f64 / x * current - upper;
        upper = current;
        current = lower;
        // `current` now holds f_{k−1}, `upper` holds f_k.
        if k == l {
            at_l = upper;
        }
        if current.abs() > RESCALE_THRESHOLD {
            current *= RESCALE_FACTOR;
            upper *= RESCALE_FACTOR;
            at_l *= RESCALE_FACTOR;
        }
        if k == 1 {
            at_1 = upper;
            at_0 = current;
        }
    }
    let scale = if j0.abs() >= j1.abs() {
        j0 / at_0
    } else {
        j1 / at_1
    };
    at_l * scale
}

fn bisect<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b || (b - a) <= 2.0 * f64::EPSILON * b {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

/// Positive zeros of j_l for every l, up to a common cutoff.
#[derive(Debug, Clone, PartialEq)]
pub struct BesselZeroTable {
    x_max: f64,
    channels: Vec<Vec<f64>>,
}

impl BesselZeroTable {
    /// Tabulates all zeros x_{n,l} ≤ x_max of every j_l that has one.
    pub fn build(x_max: f64) -> Self {
        Self::build_up_to(x_max, usize::MAX)
    }

    /// Like [`BesselZeroTable::build`], stopping after order `l_max`.
    pub fn build_up_to(x_max: f64, l_max: usize) -> Self {
        let mut channels = Vec::new();
        if x_max.is_nan() || x_max <= 0.0 {
            return Self { x_max, channels };
        }
        // Each working channel keeps exactly one zero beyond x_max so the
        // next order can be bracketed by interlacing.
        let count0 = (x_max / PI).floor() as usize + 1;
        let mut working: Vec<f64> = (1..=count0).map(|n| n as f64 * PI).collect();
        let mut l = 0;
        loop {
            let kept: Vec<f64> = working.iter().copied().filter(|&z| z <= x_max).collect();
            if kept.is_empty() {
                break;
            }
            channels.push(kept);
            if l == l_max {
                break;
            }
            working = next_channel(l + 1, &working, x_max);
            l += 1;
        }
        Self { x_max, channels }
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    /// Number of orders l with at least one zero below the cutoff.
    pub fn orders(&self) -> usize {
        self.channels.len()
    }

    /// Zeros of j_l up to the cutoff (empty if l has none).
    pub fn zeros(&self, l: usize) -> &[f64] {
        self.channels.get(l).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &[f64])> {
        self.channels
            .iter()
            .enumerate()
            .map(|(l, z)| (l, z.as_slice()))
    }

    pub fn total_zeros(&self) -> usize {
        self.channels.iter().map(Vec::len).sum()
    }
}

/// Zeros of j_l bracketed by consecutive zeros of j_{l−1}, extended by a
/// forward scan until one zero lies beyond `x_max`.
fn next_channel(l: usize, previous: &[f64], x_max: f64) -> Vec<f64> {
    let f = |x: f64| spherical_bessel_j(l, x);
    let mut zeros: Vec<f64> = previous.windows(2).map(|w| bisect(f, w[0], w[1])).collect();
    while zeros.last().map_or(true, |&z| z <= x_max) {
        let from = zeros
            .last()
            .copied()
            .unwrap_or(previous.last().copied().unwrap_or(l as f64));
        zeros.push(scan_next_zero(l, from));
    }
    zeros
}

fn scan_next_zero(l: usize, after: f64) -> f64 {
    let f = |x: f64| spherical_bessel_j(l, x);
    let mut a = after + SCAN_STEP;
    let mut fa = f(a);
    loop {
        if fa == 0.0 {
            return a;
        }
        let b = a + SCAN_STEP;
        let fb = f(b);
        if fb == 0.0 {
            return b;
        }
        if (fa < 0.0) != (fb < 0.0) {
            return bisect(f, a, b);
        }
        a = b;
        fa = fb;
    }
}

/// All zeros of j_l in (0, x_max], ascending.
pub fn spherical_bessel_zeros(l: usize, x_max: f64) -> Vec<f64> {
    BesselZeroTable::build_up_to(x_max, l).zeros(l).to_vec()
}
