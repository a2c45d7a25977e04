//! Arithmetic in GF(r^k) for prime r.
//!
//! A field is a quotient GF(r)[x]/(modulus) over the prime field only;
//! composite extensions are reached through one big extension plus
//! [`Embedding`]. Elements are stored as integer encodings
//! `sum c_i * r^i` of their coefficient vectors, so `FieldElem` is `Copy`
//! and matrices of field elements are flat `u64` buffers.
//!
//! The modulus is the lexicographically smallest monic irreducible of its
//! degree (smallest integer encoding), and the primitive element is the
//! first generator in encoding order, so every derived artifact is
//! reproducible bit for bit.

use std::collections::HashMap;
use std::fmt;

use crate::arithmetic::{is_prime, mul_mod};
use crate::error::{Error, Result};

/// Largest permitted field order r^k.
pub const FIELD_ORDER_CAP: u64 = 1 << 40;

/// An element of a [`FieldSpec`], stored as the integer encoding of its
/// coefficient vector (base-r digits, constant term least significant).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElem(pub u64);

/// A concrete finite field GF(r^k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    r: u64,
    k: u32,
    order: u64,
    /// Monic modulus of degree k, dense, constant term first (length k+1).
    modulus: Vec<u64>,
}

/// Deterministic field constructor; same (r, k) always yields the same spec.
pub fn field(r: u64, k: u32) -> Result<FieldSpec> {
    FieldSpec::new(r, k)
}

impl FieldSpec {
    pub fn new(r: u64, k: u32) -> Result<Self> {
        if !is_prime(r) {
            return Err(Error::NotPrime(r));
        }
        if k == 0 {
            return Err(Error::InvalidArgument("extension degree must be >= 1".into()));
        }
        let order = (0..k)
            .try_fold(1u64, |acc, _| acc.checked_mul(r))
            .filter(|&o| o <= FIELD_ORDER_CAP)
            .ok_or(Error::FieldCap { r, k })?;
        if k == 1 {
            return Ok(Self { r, k, order, modulus: vec![0, 1] });
        }
        // Scan monic degree-k polynomials in encoding order for the first
        // irreducible one.
        let mut enc = 0u64;
        loop {
            if enc >= order {
                return Err(Error::Internal(format!("no irreducible of degree {k} over GF({r})")));
            }
            let mut coeffs: Vec<u64> = (0..k).map(|i| digit(enc, r, i)).collect();
            coeffs.push(1);
            if poly_is_irreducible(&coeffs, r) {
                return Ok(Self { r, k, order, modulus: coeffs });
            }
            enc += 1;
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.r
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    /// The class of x (only meaningful for k >= 2).
    pub fn gen_x(&self) -> FieldElem {
        FieldElem(if self.k == 1 { 0 } else { self.r })
    }

    /// Embeds a prime-field constant 0 <= c < r.
    pub fn constant(&self, c: u64) -> FieldElem {
        FieldElem(c % self.r)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.order).map(FieldElem)
    }

    pub fn decode(&self, a: FieldElem) -> Vec<u64> {
        (0..self.k).map(|i| digit(a.0, self.r, i)).collect()
    }

    pub fn encode(&self, coeffs: &[u64]) -> FieldElem {
        let mut e = 0u64;
        for (i, &c) in coeffs.iter().enumerate().take(self.k as usize) {
            e += (c % self.r) * self.r.pow(i as u32);
        }
        FieldElem(e)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.k == 1 {
            let s = a.0 + b.0;
            return FieldElem(if s >= self.r { s - self.r } else { s });
        }
        let mut e = 0u64;
        let mut pw = 1u64;
        let (mut x, mut y) = (a.0, b.0);
        for _ in 0..self.k {
            let s = (x % self.r + y % self.r) % self.r;
            e += s * pw;
            pw *= self.r;
            x /= self.r;
            y /= self.r;
        }
        FieldElem(e)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.k == 1 {
            return FieldElem(if a.0 == 0 { 0 } else { self.r - a.0 });
        }
        let mut e = 0u64;
        let mut pw = 1u64;
        let mut x = a.0;
        for _ in 0..self.k {
            let d = x % self.r;
            e += if d == 0 { 0 } else { self.r - d } * pw;
            pw *= self.r;
            x /= self.r;
        }
        FieldElem(e)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.k == 1 {
            return FieldElem(mul_mod(a.0, b.0, self.r));
        }
        if a.0 == 0 || b.0 == 0 {
            return FieldElem(0);
        }
        let ca = self.decode(a);
        let cb = self.decode(b);
        let mut prod = vec![0u64; 2 * self.k as usize - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod(x, y, self.r)) % self.r;
            }
        }
        poly_reduce(&mut prod, &self.modulus, self.r);
        FieldElem(prod.iter().take(self.k as usize).rev().fold(0, |acc, &c| acc * self.r + c))
    }

    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.order - 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: FieldElem) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.order - 1;
        let mut o = n;
        for f in factorize(n) {
            while o.is_multiple_of(f) && self.pow(a, o / f) == self.one() {
                o /= f;
            }
        }
        Ok(o)
    }

    /// First element in encoding order of multiplicative order r^k - 1.
    pub fn primitive_element(&self) -> FieldElem {
        let n = self.order - 1;
        if n == 1 {
            return self.one();
        }
        let factors = factorize(n);
        'outer: for e in 2..self.order {
            let a = FieldElem(e);
            for &f in &factors {
                if self.pow(a, n / f) == self.one() {
                    continue 'outer;
                }
            }
            return a;
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    pub fn format_elem(&self, a: FieldElem) -> String {
        if self.k == 1 {
            return a.0.to_string();
        }
        let coeffs = self.decode(a);
        let mut parts = vec![];
        for (i, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            parts.push(match i {
                0 => c.to_string(),
                1 if c == 1 => "x".into(),
                1 => format!("{c}*x"),
                _ if c == 1 => format!("x^{i}"),
                _ => format!("{c}*x^{i}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn digit(e: u64, r: u64, i: u32) -> u64 {
    (e / r.pow(i)) % r
}

fn factorize(mut n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut f = 2u64;
    while f as u128 * f as u128 <= n as u128 {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// ---- dense polynomial helpers over GF(r), constant term first ----

fn poly_trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// Reduces `a` in place modulo the monic polynomial `m`.
fn poly_reduce(a: &mut Vec<u64>, m: &[u64], r: u64) {
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = *a.last().unwrap();
        let top = a.len() - 1;
        if lead != 0 {
            for (i, &mc) in m.iter().enumerate() {
                let idx = top - dm + i;
                let sub = mul_mod(lead, mc, r);
                a[idx] = (a[idx] + r - sub % r) % r;
            }
        }
        a.pop();
    }
    a.resize(dm, 0);
}

fn poly_mul_mod(a: &[u64], b: &[u64], m: &[u64], r: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + mul_mod(x, y, r)) % r;
        }
    }
    poly_reduce(&mut prod, m, r);
    prod
}

/// x^(r^e) mod m, by square-and-multiply on the exponent.
fn poly_x_pow_q_pow(e: u32, m: &[u64], r: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    let mut x = vec![0u64; dm];
    if dm == 1 {
        // x mod a degree-1 modulus is a constant; not used in practice
        x[0] = (r - m[0] % r) % r;
    } else {
        x[1] = 1;
    }
    let mut acc = {
        let mut one = vec![0u64; dm];
        one[0] = 1;
        one
    };
    let mut exp: u128 = (0..e).fold(1u128, |a, _| a * r as u128);
    let mut base = x;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_mul_mod(&acc, &base, m, r);
        }
        base = poly_mul_mod(&base, &base, m, r);
        exp >>= 1;
    }
    acc
}

fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, r: u64) -> Vec<u64> {
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let lead_inv = crate::arithmetic::inv_mod(*b.last().unwrap(), r).expect("r prime");
        while a.len() >= b.len() && !a.is_empty() {
            let f = mul_mod(*a.last().unwrap(), lead_inv, r);
            let shift = a.len() - b.len();
            if f != 0 {
                for (i, &bc) in b.iter().enumerate() {
                    let sub = mul_mod(f, bc, r);
                    a[shift + i] = (a[shift + i] + r - sub) % r;
                }
            }
            poly_trim(&mut a);
            if a.len() < b.len() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
        poly_trim(&mut b);
    }
    a
}

/// Rabin irreducibility test for a monic polynomial over GF(r).
fn poly_is_irreducible(f: &[u64], r: u64) -> bool {
    let k = (f.len() - 1) as u32;
    if k == 1 {
        return true;
    }
    // x^(r^k) == x mod f
    let mut xq = poly_x_pow_q_pow(k, f, r);
    if xq.len() < 2 {
        xq.resize(2, 0);
    }
    xq[1] = (xq[1] + r - 1) % r;
    let mut probe = xq;
    poly_trim(&mut probe);
    if !probe.is_empty() {
        return false;
    }
    // gcd(x^(r^(k/l)) - x, f) == 1 for every prime l | k
    for l in factorize(k as u64) {
        let mut xe = poly_x_pow_q_pow(k / l as u32, f, r);
        if xe.len() < 2 {
            xe.resize(2, 0);
        }
        xe[1] = (xe[1] + r - 1) % r;
        let g = poly_gcd(xe, f.to_vec(), r);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Dense polynomial over one [`FieldSpec`], constant term first, no
/// trailing zeros (the zero polynomial is the empty vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub coeffs: Vec<FieldElem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last() == Some(&FieldElem(0)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![FieldElem(1)] }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, fs: &FieldSpec, x: FieldElem) -> FieldElem {
        let mut acc = FieldElem(0);
        for &c in self.coeffs.iter().rev() {
            acc = fs.add(fs.mul(acc, x), c);
        }
        acc
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.coeffs.iter().map(|c| c.0.to_string()).collect::<Vec<_>>().join(", ")
        )
    }
}

/// Monic product of (x - root) over the given distinct roots.
pub fn poly_product_over_roots(fs: &FieldSpec, roots: &[FieldElem]) -> Result<Poly> {
    let mut sorted: Vec<_> = roots.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != roots.len() {
        return Err(Error::InvalidArgument("duplicate roots".into()));
    }
    let mut g = vec![fs.one()];
    for &root in roots {
        let mut next = vec![FieldElem(0); g.len() + 1];
        let neg = fs.neg(root);
        for (i, &c) in g.iter().enumerate() {
            next[i + 1] = fs.add(next[i + 1], c);
            next[i] = fs.add(next[i], fs.mul(neg, c));
        }
        g = next;
    }
    Ok(Poly::new(g))
}

/// A fixed embedding GF(r^a) -> GF(r^(a*e)).
///
/// The image of the class of x is the first root of the small modulus in
/// the big field's subfield of matching order, scanned in a fixed order,
/// so the embedding is deterministic.
#[derive(Debug, Clone)]
pub struct Embedding {
    sub: FieldSpec,
    sup: FieldSpec,
    forward: Vec<u64>,
    reverse: HashMap<u64, u64>,
}

impl Embedding {
    pub fn new(sub: &FieldSpec, sup: &FieldSpec) -> Result<Self> {
        if sub.characteristic() != sup.characteristic() {
            return Err(Error::InvalidArgument(format!(
                "incompatible characteristics {} vs {}",
                sub.characteristic(),
                sup.characteristic()
            )));
        }
        if !sup.degree().is_multiple_of(sub.degree()) {
            return Err(Error::InvalidArgument(format!(
                "degree {} does not divide {}",
                sub.degree(),
                sup.degree()
            )));
        }
        if sub.order() > (1 << 21) {
            return Err(Error::FieldCap { r: sub.characteristic(), k: sub.degree() });
        }
        // Root of the small modulus inside the subfield of `sup` of order
        // sub.order(): scan 0, w^0, w^1, ... with w of order sub.order()-1.
        let image_x = if sub.degree() == 1 {
            FieldElem(0) // modulus is x; its root is 0 (never used for k=1)
        } else {
            let w = sup.pow(sup.primitive_element(), (sup.order() - 1) / (sub.order() - 1));
            let eval_mod = |h: FieldElem| -> FieldElem {
                let mut acc = FieldElem(0);
                for &c in sub.modulus().iter().rev() {
                    acc = sup.add(sup.mul(acc, h), sup.constant(c));
                }
                acc
            };
            let mut found = None;
            let mut cand = sup.one();
            for _ in 0..sub.order() - 1 {
                if eval_mod(cand) == FieldElem(0) {
                    found = Some(cand);
                    break;
                }
                cand = sup.mul(cand, w);
            }
            found.ok_or_else(|| Error::Internal("no root of subfield modulus found".into()))?
        };
        let mut forward = Vec::with_capacity(sub.order() as usize);
        let mut reverse = HashMap::with_capacity(sub.order() as usize);
        for a in sub.elements() {
            let digits = sub.decode(a);
            let mut acc = FieldElem(0);
            for &c in digits.iter().rev() {
                acc = sup.add(sup.mul(acc, image_x), sup.constant(c));
            }
            forward.push(acc.0);
            reverse.insert(acc.0, a.0);
        }
        if reverse.len() != forward.len() {
            return Err(Error::Internal("embedding is not injective".into()));
        }
        Ok(Self { sub: sub.clone(), sup: sup.clone(), forward, reverse })
    }

    pub fn sub(&self) -> &FieldSpec {
        &self.sub
    }

    pub fn sup(&self) -> &FieldSpec {
        &self.sup
    }

    pub fn embed(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.forward[a.0 as usize])
    }

    /// Partial inverse: defined exactly on the image subfield.
    pub fn project(&self, b: FieldElem) -> Option<FieldElem> {
        self.reverse.get(&b.0).map(|&e| FieldElem(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_moduli() {
        assert_eq!(field(2, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(field(2, 2).unwrap().modulus(), &[1, 1, 1]); // x^2+x+1
        assert_eq!(field(3, 2).unwrap().modulus(), &[1, 0, 1]); // x^2+1
        assert_eq!(field(2, 3).unwrap().modulus(), &[1, 1, 0, 1]); // x^3+x+1
        assert_eq!(field(3, 3).unwrap().modulus(), &[1, 2, 0, 1]); // x^3+2x+1
        assert!(field(4, 1).is_err());
        assert!(field(2, 41).is_err());
    }

    #[test]
    fn gf4_mul() {
        let f = field(2, 2).unwrap();
        let x = f.gen_x();
        // x * x = x + 1 after reduction by x^2+x+1
        assert_eq!(f.mul(x, x), FieldElem(3));
        assert_eq!(f.inv(f.one()).unwrap(), f.one());
        assert!(f.inv(f.zero()).is_err());
    }

    #[test]
    fn primitive_elements() {
        assert_eq!(field(2, 1).unwrap().primitive_element(), FieldElem(1));
        assert_eq!(field(7, 1).unwrap().primitive_element(), FieldElem(3));
        assert_eq!(field(2, 2).unwrap().primitive_element().0, 2); // x
        let f9 = field(3, 2).unwrap();
        let g = f9.primitive_element();
        assert_eq!(f9.element_order(g).unwrap(), 8);
    }

    #[test]
    fn group_order_pow() {
        for (r, k) in [(2, 3), (3, 2), (5, 1)] {
            let f = field(r, k).unwrap();
            for a in f.elements().skip(1) {
                assert_eq!(f.pow(a, f.order() - 1), f.one());
            }
        }
    }

    #[test]
    fn field_axioms_random() {
        // deterministic LCG sampling; enough to exercise carries/reduction
        for (r, k) in [(2u64, 4u32), (3, 3), (5, 2), (13, 1), (2, 8)] {
            let f = field(r, k).unwrap();
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                FieldElem((state >> 20) % f.order())
            };
            for _ in 0..200 {
                let (a, b, c) = (next(), next(), next());
                assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if a != f.zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
            }
        }
    }

    #[test]
    fn embeddings() {
        let f2 = field(2, 1).unwrap();
        let f8 = field(2, 3).unwrap();
        let e = Embedding::new(&f2, &f8).unwrap();
        assert_eq!(e.embed(FieldElem(1)), f8.one());
        assert_eq!(e.embed(FieldElem(0)), f8.zero());

        let f4 = field(2, 2).unwrap();
        let f16 = field(2, 4).unwrap();
        let e = Embedding::new(&f4, &f16).unwrap();
        let img = e.embed(f4.gen_x());
        assert_eq!(f16.element_order(img).unwrap(), 3);
        // ring homomorphism on all pairs
        for a in f4.elements() {
            for b in f4.elements() {
                assert_eq!(e.embed(f4.add(a, b)), f16.add(e.embed(a), e.embed(b)));
                assert_eq!(e.embed(f4.mul(a, b)), f16.mul(e.embed(a), e.embed(b)));
            }
        }
        assert_eq!(e.project(img), Some(f4.gen_x()));
        assert!(Embedding::new(&f4, &f8).is_err());
    }

    #[test]
    fn products_over_roots() {
        let f4 = field(2, 2).unwrap();
        assert_eq!(poly_product_over_roots(&f4, &[]).unwrap(), Poly::one());
        // all three nonzero elements of GF(4) are the roots of x^3 - 1
        let roots: Vec<_> = f4.elements().skip(1).collect();
        let g = poly_product_over_roots(&f4, &roots).unwrap();
        assert_eq!(g.coeffs, vec![FieldElem(1), FieldElem(0), FieldElem(0), FieldElem(1)]);
        for &root in &roots {
            assert_eq!(g.eval(&f4, root), f4.zero());
        }
        assert!(poly_product_over_roots(&f4, &[f4.one(), f4.one()]).is_err());

        // coset {b, b^2, b^4} for b of order 7 in GF(8) gives a GF(2) cubic
        let f8 = field(2, 3).unwrap();
        let b = f8.primitive_element();
        let roots: Vec<_> = [1u64, 2, 4].iter().map(|&e| f8.pow(b, e)).collect();
        let g = poly_product_over_roots(&f8, &roots).unwrap();
        assert_eq!(g.degree(), Some(3));
        assert!(g.coeffs.iter().all(|c| c.0 <= 1), "coefficients fixed by Frobenius");
    }
}
