//! Exact number-theoretic primitives: multiplicative orders, the z-invariant,
//! cyclotomic cosets and projective length decompositions.
//!
//! Everything here is exact integer arithmetic; intermediate products go
//! through `u128` so no operation can overflow for lengths within
//! [`LENGTH_CAP`].

use crate::error::{Error, Result};

/// Largest object length the crate accepts.
pub const LENGTH_CAP: u64 = 1_000_000;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Modular inverse of a unit `a` mod `n`.
pub(crate) fn inv_mod(a: u64, n: u64) -> Result<u64> {
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return Err(Error::NotCoprime { q: a, n });
    }
    Ok(t0.rem_euclid(n as i128) as u64)
}

/// Deterministic primality test by trial division. Intended for the desk
/// scale of this crate (arguments stay below 2^40).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = 7u64;
    while d as u128 * d as u128 <= n as u128 {
        for o in [0, 4] {
            let f = d + o;
            if n.is_multiple_of(f) {
                return false;
            }
        }
        d += 6;
    }
    true
}

/// Writes `x = p^a` with `p` prime, if possible.
pub fn prime_power(x: u64) -> Option<(u64, u32)> {
    if x < 2 {
        return None;
    }
    let mut p = x;
    let mut f = 2u64;
    while f as u128 * f as u128 <= x as u128 {
        if x.is_multiple_of(f) {
            p = f;
            break;
        }
        f += 1;
    }
    let mut rest = x;
    let mut a = 0u32;
    while rest.is_multiple_of(p) {
        rest /= p;
        a += 1;
    }
    (rest == 1).then_some((p, a))
}

/// A length n = p^m with its prime decomposition attached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimePowerLength {
    p: u64,
    m: u32,
    n: u64,
}

impl PrimePowerLength {
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidArgument("exponent m must be >= 1".into()));
        }
        let n = (0..m).try_fold(1u64, |acc, _| acc.checked_mul(p)).filter(|&n| n <= LENGTH_CAP);
        match n {
            Some(n) => Ok(Self { p, m, n }),
            None => Err(Error::LengthCap { n: u64::MAX, cap: LENGTH_CAP }),
        }
    }

    /// Recognizes `n` as a prime power.
    pub fn from_n(n: u64) -> Result<Self> {
        if n > LENGTH_CAP {
            return Err(Error::LengthCap { n, cap: LENGTH_CAP });
        }
        let (p, m) = prime_power(n).ok_or(Error::NotPrimePower(n))?;
        Ok(Self { p, m, n })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// p^(m-1), the modulus that controls the higher coefficients of the
    /// polynomial permutations on this length.
    pub fn p_pow_m1(&self) -> u64 {
        self.n / self.p
    }
}

/// Least r >= 1 with q^r = 1 (mod n).
pub fn multiplicative_order(q: u64, n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("modulus {n} must be >= 2")));
    }
    if n > LENGTH_CAP {
        return Err(Error::LengthCap { n, cap: LENGTH_CAP });
    }
    let q = q % n;
    if gcd(q, n) != 1 {
        return Err(Error::NotCoprime { q, n });
    }
    let mut acc = q;
    let mut r = 1u64;
    while acc != 1 {
        acc = mul_mod(acc, q, n);
        r += 1;
    }
    Ok(r)
}

/// Largest z with p^z | q^t' - 1, where t' is the order of q modulo p.
pub fn z_invariant(q: u64, p: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if q.is_multiple_of(p) {
        return Err(Error::NotCoprime { q, n: p });
    }
    let t = multiplicative_order(q, p)?;
    // q^t - 1 is huge in general; count the p-adic valuation by testing
    // q^t mod p^(z+1) for growing z. Moduli stay below 2^63 so the u128
    // products in pow_mod cannot overflow. p^1 divides q^t - 1 by the
    // definition of t, so the count starts at 1.
    let mut z = 1u32;
    let mut modulus = p;
    loop {
        let next = match modulus.checked_mul(p) {
            Some(v) if v < (1 << 63) => v,
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "z-invariant of (q={q}, p={p}) exceeds the supported range"
                )))
            }
        };
        if pow_mod(q % next, t, next) == 1 {
            z += 1;
            modulus = next;
        } else {
            return Ok(z);
        }
    }
}

/// ord_{p^m}(q), cross-checked against the closed form p^(m-1) * ord_p(q)
/// that holds whenever the z-invariant is 1.
pub fn order_mod_prime_power(q: u64, len: &PrimePowerLength) -> Result<u64> {
    if q.is_multiple_of(len.p()) {
        return Err(Error::NotCoprime { q, n: len.n() });
    }
    let r = multiplicative_order(q, len.n())?;
    if z_invariant(q, len.p())? == 1 {
        let t = multiplicative_order(q, len.p())?;
        let expected = len.p_pow_m1() * t;
        if r != expected {
            return Err(Error::Internal(format!(
                "ord_{{{}}}({q}) = {r} disagrees with p^(m-1)*t = {expected}",
                len.n()
            )));
        }
    }
    Ok(r)
}

/// The partition of Z_n into orbits of x -> qx.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    n: u64,
    q: u64,
    cosets: Vec<Vec<u64>>,
}

impl CosetPartition {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Cosets sorted by their minimal representative; each coset sorted.
    pub fn cosets(&self) -> &[Vec<u64>] {
        &self.cosets
    }

    pub fn coset_containing(&self, s: u64) -> &[u64] {
        let s = s % self.n;
        self.cosets
            .iter()
            .find(|c| c.binary_search(&s).is_ok())
            .expect("partition covers Z_n")
    }
}

/// Orbit of `s` under multiplication by `q` mod `n`, sorted.
pub fn cyclotomic_coset_of(n: u64, q: u64, s: u64) -> Vec<u64> {
    let mut orbit = vec![];
    let mut x = s % n;
    loop {
        orbit.push(x);
        x = mul_mod(x, q, n);
        if x == s % n {
            break;
        }
    }
    orbit.sort_unstable();
    orbit
}

/// Full partition of Z_n into q-cyclotomic cosets.
pub fn cyclotomic_cosets(n: u64, q: u64) -> Result<CosetPartition> {
    if !(2..=LENGTH_CAP).contains(&n) {
        return Err(Error::LengthCap { n, cap: LENGTH_CAP });
    }
    if gcd(q % n, n) != 1 {
        return Err(Error::NotCoprime { q: q % n, n });
    }
    let mut seen = vec![false; n as usize];
    let mut cosets = vec![];
    for s in 0..n {
        if seen[s as usize] {
            continue;
        }
        let orbit = cyclotomic_coset_of(n, q, s);
        for &x in &orbit {
            seen[x as usize] = true;
        }
        cosets.push(orbit);
    }
    Ok(CosetPartition { n, q: q % n, cosets })
}

/// All (t, d) with t a prime power, 2 <= d <= max_d and
/// n = (t^d - 1)/(t - 1) = 1 + t + ... + t^(d-1).
pub fn projective_length_decompositions(n: u64, max_d: u32) -> Vec<(u64, u32)> {
    let mut out = vec![];
    if n < 3 {
        return out;
    }
    for d in 2..=max_d {
        if (1u128 << (d - 1).min(127)) > n as u128 {
            break; // already 1 + 2 + ... + 2^(d-1) > n
        }
        let mut t = 2u64;
        loop {
            let mut sum = 1u128;
            let mut pw = 1u128;
            for _ in 1..d {
                pw *= t as u128;
                sum += pw;
                if sum > n as u128 {
                    break;
                }
            }
            if sum > n as u128 {
                break;
            }
            if sum == n as u128 && prime_power(t).is_some() {
                out.push((t, d));
            }
            t += 1;
        }
    }
    out
}
