//! Exact big-integer primitives shared by every factorization method:
//! integer square root, perfect-square testing, extended gcd, Miller-Rabin
//! primality, and the 6k±1 decomposition of primes above 3.

use num_bigint::{BigInt, BigUint, RandBigInt, Sign as IntSign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Sign of the `±1` offset in a `6x ± 1` representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The offset as an integer, `+1` or `-1`.
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("extended gcd is undefined for (0, 0)")]
    ZeroArguments,
    #[error("{0} has no 6x±1 form (the decomposition applies to primes above 3)")]
    PrimeTwoOrThree(u8),
    #[error("input shares a factor with 6, no 6x±1 form exists")]
    NotCoprimeToSix,
}

/// A prime `p >= 5` written as `6x + sign`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SixKForm {
    pub x: BigUint,
    pub sign: Sign,
}

impl SixKForm {
    /// Rebuild the decomposed integer, `6x + sign`.
    pub fn reconstruct(&self) -> BigUint {
        let six_x = &self.x * 6u32;
        match self.sign {
            Sign::Plus => six_x + 1u32,
            Sign::Minus => six_x - 1u32,
        }
    }
}

/// Floor of the square root, by Newton iteration on big integers.
///
/// Returns `r` with `r^2 <= n < (r+1)^2`. Exact at any size; no floating
/// point is involved.
pub fn isqrt(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    // Initial guess from the bit length keeps the iteration count logarithmic.
    let mut x = BigUint::one() << ((n.bits() + 1) / 2);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    // Newton from above converges to floor(sqrt(n)), but guard the boundary.
    while &x * &x > *n {
        x -= 1u32;
    }
    x
}

/// Perfect-square test: `Some(r)` with `r^2 = n`, or `None`.
pub fn is_perfect_square(n: &BigUint) -> Option<BigUint> {
    // Squares mod 64 are sparse; reject most inputs without a root extraction.
    const SQUARES_MOD_64: u64 = {
        let mut mask = 0u64;
        let mut i = 0u64;
        while i < 64 {
            mask |= 1 << ((i * i) % 64);
            i += 1;
        }
        mask
    };
    let low = (n % 64u32).to_u64_digits().first().copied().unwrap_or(0);
    if SQUARES_MOD_64 & (1 << low) == 0 {
        return None;
    }
    let r = isqrt(n);
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Extended Euclid: returns `(g, u, v)` with `g = gcd(a, b) > 0` and
/// `a*u + b*v = g`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt, BigInt), ArithError> {
    if a.is_zero() && b.is_zero() {
        return Err(ArithError::ZeroArguments);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut u0, mut u1) = (BigInt::one(), BigInt::zero());
    let (mut v0, mut v1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r);
        let u = &u0 - &q * &u1;
        u0 = std::mem::replace(&mut u1, u);
        let v = &v0 - &q * &v1;
        v0 = std::mem::replace(&mut v1, v);
    }
    if r0.is_negative() {
        r0 = -r0;
        u0 = -u0;
        v0 = -v0;
    }
    Ok((r0, u0, v0))
}

/// Inverse of `a` modulo `m`, when `gcd(a, m) = 1`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let (g, u, _) = ext_gcd(a, m).ok()?;
    if !g.is_one() {
        return None;
    }
    Some(u.mod_floor(m))
}

/// Miller-Rabin primality test.
///
/// Below 2^64 a fixed witness set makes the answer deterministic. Above,
/// `rounds` pseudo-random witnesses are drawn from a generator seeded by the
/// input itself, so repeated calls agree; the composite-acceptance
/// probability is at most 4^-rounds.
pub fn is_probable_prime(n: &BigUint, rounds: u32) -> bool {
    const SMALL_PRIMES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < &BigUint::from(2u32) {
        return false;
    }
    for &p in &SMALL_PRIMES {
        let p = BigUint::from(p);
        if n % &p == BigUint::zero() {
            return *n == p;
        }
    }
    // n - 1 = d * 2^s with d odd
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().expect("n > 2 is odd here");
    let d = &n_minus_1 >> s;

    let witness_fails = |a: &BigUint| -> bool {
        // true when `a` proves n composite
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            return false;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_minus_1 {
                return false;
            }
        }
        true
    };

    if n.bits() <= 64 {
        // Deterministic for all 64-bit inputs with the first twelve primes.
        return SMALL_PRIMES
            .iter()
            .all(|&a| !witness_fails(&BigUint::from(a)));
    }

    let mut seed = [0u8; 32];
    for (dst, src) in seed.iter_mut().zip(n.to_bytes_le()) {
        *dst = src;
    }
    let mut rng = ChaCha8Rng::from_seed(seed);
    let span = n - 3u32;
    for _ in 0..rounds.max(1) {
        let a = rng.gen_biguint_below(&span) + 2u32;
        if witness_fails(&a) {
            return false;
        }
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: &BigUint) -> BigUint {
    let mut candidate = n + 1u32;
    if candidate <= BigUint::from(2u32) {
        return BigUint::from(2u32);
    }
    if candidate.is_even() {
        candidate += 1u32;
    }
    while !is_probable_prime(&candidate, 32) {
        candidate += 2u32;
    }
    candidate
}

/// Decompose a prime `p >= 5` as `6x ± 1`.
///
/// `p = 2` and `p = 3` are rejected with a distinct error from other inputs
/// sharing a factor with 6; the representation only exists above 3.
pub fn sixk_form(p: &BigUint) -> Result<SixKForm, ArithError> {
    let two = BigUint::from(2u32);
    let three = BigUint::from(3u32);
    if *p == two || *p == three {
        return Err(ArithError::PrimeTwoOrThree(if *p == two { 2 } else { 3 }));
    }
    match (p % 6u32).to_u64_digits().first().copied().unwrap_or(0) {
        1 => Ok(SixKForm {
            x: (p - 1u32) / 6u32,
            sign: Sign::Plus,
        }),
        5 => Ok(SixKForm {
            x: (p + 1u32) / 6u32,
            sign: Sign::Minus,
        }),
        _ => Err(ArithError::NotCoprimeToSix),
    }
}

/// Convenience: BigInt wrapper around [`is_perfect_square`]; negative inputs
/// are never squares.
pub fn is_perfect_square_int(n: &BigInt) -> Option<BigInt> {
    match n.sign() {
        IntSign::Minus => None,
        _ => {
            let r = is_perfect_square(n.magnitude())?;
            Some(BigInt::from(r))
        }
    }
}

trait RngBigExt {
    fn gen_biguint_below(&mut self, bound: &BigUint) -> BigUint;
}

impl RngBigExt for ChaCha8Rng {
    fn gen_biguint_below(&mut self, bound: &BigUint) -> BigUint {
        // Rejection sampling over bound's bit width.
        let bits = bound.bits();
        loop {
            let mut bytes = vec![0u8; ((bits + 7) / 8) as usize];
            self.fill(&mut bytes[..]);
            let mut v = BigUint::from_bytes_le(&bytes);
            let excess = 8 * bytes.len() as u64 - bits;
            v >>= excess;
            if &v < bound {
                return v;
            }
        }
    }
}
