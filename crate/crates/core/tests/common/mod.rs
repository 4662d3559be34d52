#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use segrelab::ellfrob::is_smooth_cubic;
use segrelab::segre::CubicCurve;
use segrelab::{Engine, Monomial, PolyRing, Polynomial};

/// Exponent vectors of the ten cubic monomials in three variables.
pub fn cubic_monomials() -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 0..=3u32 {
        for b in 0..=3 - a {
            out.push([a, b, 3 - a - b]);
        }
    }
    out
}

pub fn random_cubic(p: u64, rng: &mut ChaCha8Rng) -> Polynomial {
    let ring = PolyRing::with_characteristic(&["x0", "x1", "x2"], p).unwrap();
    loop {
        let terms: Vec<_> = cubic_monomials()
            .into_iter()
            .map(|e| {
                let c: i64 = if p == 0 { rng.gen_range(-3..=3) } else { rng.gen_range(0..p as i64) };
                (ring.field().from_i64(c), Monomial::from_exponents(&e))
            })
            .collect();
        let f = Polynomial::from_terms(&ring, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Smooth cubics over `F_p` (or `Q` for p = 0) found by rejection.
pub fn smooth_cubics(p: u64, count: usize, seed: u64) -> Vec<CubicCurve> {
    let engine = Engine::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let c = CubicCurve::new(random_cubic(p, &mut rng)).unwrap();
        if is_smooth_cubic(&engine, &c).unwrap() {
            out.push(c);
        }
    }
    out
}

/// `n! / prod k_i!` modulo `p` with plain integer arithmetic.
pub fn multinomial_mod(parts: &[u64], p: u64) -> u64 {
    let n: u64 = parts.iter().sum();
    let mut num = 1u128;
    for k in 1..=n {
        num = num * k as u128 % p as u128;
    }
    let mut den = 1u128;
    for &part in parts {
        for k in 1..=part {
            den = den * k as u128 % p as u128;
        }
    }
    // inverse by Fermat's little theorem
    let mut inv = 1u128;
    let mut base = den;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            inv = inv * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    (num * inv % p as u128) as u64
}

/// Hasse coefficient of the Fermat cubic at `p`, from the single exponent
/// vector `((p-1)/3, (p-1)/3, (p-1)/3)` when it exists.
pub fn fermat_hasse_oracle(p: u64) -> u64 {
    if !(p - 1).is_multiple_of(3) {
        return 0;
    }
    let k = (p - 1) / 3;
    multinomial_mod(&[k, k, k], p)
}
