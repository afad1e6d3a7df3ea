//! Integer forms of the `sqrt(n)`-type bounds. Every quantity is rounded up,
//! computed exactly without floating point.

/// Smallest `s` with `s * s >= x`.
pub fn ceil_sqrt(x: u64) -> u64 {
    let mut s = (x as f64).sqrt() as u64;
    while s * s < x {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= x {
        s -= 1;
    }
    s
}

/// `ceil((p / q) * sqrt(n))`: smallest `s` with `(q s)^2 >= p^2 n`.
pub fn ceil_ratio_sqrt(p: u64, q: u64, n: u64) -> u64 {
    let s = ceil_sqrt(p * p * n).div_ceil(q);
    let mut s = s.saturating_sub(1);
    while (q * s) * (q * s) < p * p * n {
        s += 1;
    }
    s
}

/// `ceil(sqrt(32 n))`, the localization distance of the composed strategy.
pub fn sqrt_32n(n: usize) -> u32 {
    ceil_sqrt(32 * n as u64) as u32
}

/// `ceil(sqrt(2 n))`, its localization time.
pub fn sqrt_2n(n: usize) -> u32 {
    ceil_sqrt(2 * n as u64) as u32
}

/// `ceil(sqrt(8) sqrt(n))`, the scattered-set separation for `c = sqrt(8)`.
pub fn sqrt_8n(n: usize) -> u32 {
    ceil_sqrt(8 * n as u64) as u32
}

/// `ceil(3 sqrt(n))`, the sphere-walk parameter `K`.
pub fn three_sqrt_n(n: usize) -> u32 {
    ceil_ratio_sqrt(3, 1, n as u64) as u32
}

/// `ceil((9/2) sqrt(n))`.
pub fn nine_halves_sqrt_n(n: usize) -> u32 {
    ceil_ratio_sqrt(9, 2, n as u64) as u32
}

/// `ceil(3K / 2)`.
pub fn three_halves(k: u32) -> u32 {
    (3 * k).div_ceil(2)
}

/// `ceil(c sqrt(n))` for an arbitrary positive real `c`.
pub fn ceil_c_sqrt(c: f64, n: usize) -> u32 {
    (c * (n as f64).sqrt()).ceil().max(1.0) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_ceilings() {
        assert_eq!(ceil_sqrt(0), 0);
        assert_eq!(ceil_sqrt(16), 4);
        assert_eq!(ceil_sqrt(17), 5);
        assert_eq!(sqrt_32n(145), 69);
        assert_eq!(sqrt_2n(145), 18);
        assert_eq!(sqrt_8n(145), 35);
        assert_eq!(sqrt_2n(2000), 64);
        assert_eq!(sqrt_32n(2000), 253);
        assert_eq!(three_sqrt_n(145), 37);
        assert_eq!(three_sqrt_n(2000), 135);
        assert_eq!(three_sqrt_n(2025), 135);
        assert_eq!(nine_halves_sqrt_n(2025), 203);
        assert_eq!(nine_halves_sqrt_n(2000), 202);
        assert_eq!(three_halves(10), 15);
        assert_eq!(three_halves(37), 56);
    }

    #[test]
    fn ratio_matches_float_away_from_integers() {
        for n in 1..5000u64 {
            let f = (4.5 * (n as f64).sqrt()).ceil() as u64;
            assert_eq!(ceil_ratio_sqrt(9, 2, n), f, "n = {n}");
        }
    }
}
