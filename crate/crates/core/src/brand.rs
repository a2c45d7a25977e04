//! Polynomial permutations of Z_{p^m} with a unit linear coefficient and
//! higher coefficients divisible by p^(m-1), and the groups Q^n / Q_1^n they
//! form. These groups carry the whole prime-power equivalence machinery:
//! the probe permutations f_i locate the p-Sylow subgroup of an automorphism
//! group, and Q^(I+1) is the complete search space for equivalence
//! witnesses.
//!
//! p = 2 is rejected throughout; the underlying classification of p-groups
//! with a cyclic maximal subgroup does not hold there.

use std::fmt;

use crate::arithmetic::{gcd, inv_mod, mul_mod, PrimePowerLength};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A permutation of Z_{p^m} given by polynomial coefficients a_0..a_k with
/// gcd(a_1, p) = 1 and p^(m-1) | a_i for i >= 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyPerm {
    len: PrimePowerLength,
    coeffs: Vec<u64>,
}

/// Validating constructor, mirroring [`PolyPerm::new`].
pub fn polyperm(len: &PrimePowerLength, coeffs: &[u64]) -> Result<PolyPerm> {
    PolyPerm::new(len.clone(), coeffs.to_vec())
}

impl PolyPerm {
    pub fn new(len: PrimePowerLength, mut coeffs: Vec<u64>) -> Result<Self> {
        if len.p() == 2 {
            return Err(Error::EvenPrime);
        }
        let n = len.n();
        for c in coeffs.iter_mut() {
            *c %= n;
        }
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(Error::InvalidCoefficients(
                "the linear coefficient a_1 must be present and a unit".into(),
            ));
        }
        if coeffs.len() as u64 > len.p() {
            return Err(Error::InvalidCoefficients(format!(
                "degree {} exceeds p - 1 = {}",
                coeffs.len() - 1,
                len.p() - 1
            )));
        }
        if gcd(coeffs[1], len.p()) != 1 {
            return Err(Error::InvalidCoefficients(format!(
                "a_1 = {} is not a unit mod {}",
                coeffs[1],
                len.p()
            )));
        }
        let q = len.p_pow_m1();
        for (i, &c) in coeffs.iter().enumerate().skip(2) {
            if c % q != 0 {
                return Err(Error::InvalidCoefficients(format!(
                    "a_{i} = {c} is not divisible by p^(m-1) = {q}"
                )));
            }
        }
        let pp = Self { len, coeffs };
        // direct image check; for m >= 2 the coefficient constraints already
        // force a bijection, for m = 1 they do not
        let mut seen = vec![false; n as usize];
        for x in 0..n {
            let y = pp.eval(x) as usize;
            if seen[y] {
                return Err(Error::NotBijective);
            }
            seen[y] = true;
        }
        Ok(pp)
    }

    pub fn len(&self) -> &PrimePowerLength {
        &self.len
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: u64) -> u64 {
        let n = self.len.n();
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, x, n) + c) % n;
        }
        acc
    }

    pub fn to_permutation(&self) -> Permutation {
        let n = self.len.n();
        Permutation::from_image((0..n).map(|x| self.eval(x) as u32).collect())
            .expect("validated at construction")
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs == [0, 1]
    }

    /// compose(f, g)(x) = f(g(x)).
    ///
    /// For m >= 2 the higher terms of g vanish inside the higher terms of f
    /// modulo p^m (two factors divisible by p^(m-1) kill each other), so
    /// f(g(x)) = f_0 + f_1 g(x) + sum_{i>=2} f_i (g_0 + g_1 x)^i and the
    /// degree stays at max(deg f, deg g). For m = 1 the product is expanded
    /// in full and must stay below degree p.
    pub fn compose(&self, g: &PolyPerm) -> Result<PolyPerm> {
        if self.len != g.len {
            return Err(Error::DegreeMismatch(self.len.n(), g.len.n()));
        }
        let n = self.len.n();
        let result = if self.len.m() >= 2 {
            let deg = self.degree().max(g.degree());
            let mut h = vec![0u64; deg + 1];
            h[0] = self.coeffs[0];
            for (j, &gj) in g.coeffs.iter().enumerate() {
                h[j] = (h[j] + mul_mod(self.coeffs[1], gj, n)) % n;
            }
            // powers of the affine part of g
            let mut pw = vec![g.coeffs[0], g.coeffs[1]];
            for &fi in self.coeffs.iter().skip(2) {
                pw = poly_mul(&pw, &[g.coeffs[0], g.coeffs[1]], n);
                for (j, &c) in pw.iter().enumerate() {
                    h[j] = (h[j] + mul_mod(fi, c, n)) % n;
                }
            }
            h
        } else {
            // m = 1: full expansion via Horner on polynomials
            let mut acc = vec![*self.coeffs.last().unwrap()];
            for &c in self.coeffs.iter().rev().skip(1) {
                acc = poly_mul(&acc, &g.coeffs, n);
                acc[0] = (acc[0] + c) % n;
            }
            while acc.len() > 1 && acc.last() == Some(&0) {
                acc.pop();
            }
            if acc.len() as u64 > self.len.p() {
                return Err(Error::InvalidCoefficients(format!(
                    "composition has degree {} >= p; not representable",
                    acc.len() - 1
                )));
            }
            acc
        };
        let h = PolyPerm::new(self.len.clone(), result)?;
        // pointwise oracle: the reduction above must agree with actual
        // composition at every point
        for x in 0..n {
            if h.eval(x) != self.eval(g.eval(x)) {
                return Err(Error::Internal(format!(
                    "composition reduction disagrees with pointwise application at x = {x}"
                )));
            }
        }
        Ok(h)
    }

    /// Inverse under composition.
    ///
    /// The closed form b_1 = g_1^-1, b_i = -g_i g_1^-(i+1) applies to the
    /// constant-free part when m >= 2; the constant term is handled by
    /// translating the result. Affine maps invert directly for any m.
    pub fn invert(&self) -> Result<PolyPerm> {
        let n = self.len.n();
        let a1_inv = inv_mod(self.coeffs[1], n)?;
        if self.degree() <= 1 {
            let b0 = mul_mod(a1_inv, (n - self.coeffs[0]) % n, n);
            return PolyPerm::new(self.len.clone(), vec![b0, a1_inv]);
        }
        if self.len.m() < 2 {
            return Err(Error::InvalidArgument(
                "nonlinear inversion needs m >= 2; the closed form does not apply on Z_p".into(),
            ));
        }
        // inverse of g - g_0
        let mut b = vec![0u64, a1_inv];
        let mut a1_inv_pow = mul_mod(a1_inv, a1_inv, n); // a_1^-(i+1) for i = 1
        for &gi in self.coeffs.iter().skip(2) {
            a1_inv_pow = mul_mod(a1_inv_pow, a1_inv, n);
            b.push(mul_mod((n - gi) % n, a1_inv_pow, n));
        }
        // substitute x - g_0
        let shift = [(n - self.coeffs[0]) % n, 1];
        let mut res = vec![b[0], 0];
        let mut pw = vec![1u64];
        for &bi in b.iter().skip(1) {
            pw = poly_mul(&pw, &shift, n);
            if res.len() < pw.len() {
                res.resize(pw.len(), 0);
            }
            for (j, &c) in pw.iter().enumerate() {
                res[j] = (res[j] + mul_mod(bi, c, n)) % n;
            }
        }
        let inv = PolyPerm::new(self.len.clone(), res)?;
        for x in 0..n {
            if self.eval(inv.eval(x)) != x || inv.eval(self.eval(x)) != x {
                return Err(Error::Internal("inverse formula failed the pointwise check".into()));
            }
        }
        Ok(inv)
    }
}

impl fmt::Display for PolyPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        write!(f, "poly mod {}: {}", self.len.n(), terms.join(" + "))
    }
}

fn poly_mul(a: &[u64], b: &[u64], n: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, n)) % n;
        }
    }
    out
}

/// The probe permutation f_i: f_1 = T and, for i >= 2,
/// f_i(x) = 1 + x + p^(m-1) (x^2 + ... + x^i).
///
/// For m = 1 and i >= 2 the formula may fail to be a bijection; the error
/// then simply means f_i is not an element of S_{p^m}.
pub fn probe_perm(len: &PrimePowerLength, i: u32) -> Result<PolyPerm> {
    if len.p() == 2 {
        return Err(Error::EvenPrime);
    }
    if i < 1 || i as u64 > len.p() - 2 {
        return Err(Error::InvalidArgument(format!(
            "probe index {i} outside 1..={}",
            len.p() - 2
        )));
    }
    let mut coeffs = vec![1u64, 1];
    coeffs.resize(i as usize + 1, len.p_pow_m1());
    PolyPerm::new(len.clone(), coeffs)
}

/// The element (1 + p^(m-1)) x of Q_1^1. Together with the uniqueness of
/// Q_1^1 among subgroups of order p^(m+1) containing T, its membership in
/// an automorphism group decides whether the p-Sylow subgroup is exactly
/// the cycle (s = m) or strictly larger.
pub fn sylow_step_witness(len: &PrimePowerLength) -> Result<PolyPerm> {
    if len.m() < 2 {
        return Err(Error::InvalidArgument("witness needs m >= 2".into()));
    }
    PolyPerm::new(len.clone(), vec![0, 1 + len.p_pow_m1()])
}

/// Identifier of a coefficient-constrained permutation group: Q^n when
/// `restricted` is false, Q_1^n (a_1 = 1 mod p^(m-1)) when true.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QGroup {
    len: PrimePowerLength,
    degree_bound: u32,
    restricted: bool,
}

impl QGroup {
    pub fn full(len: &PrimePowerLength, degree_bound: u32) -> Result<Self> {
        Self::new(len, degree_bound, false)
    }

    pub fn restricted(len: &PrimePowerLength, degree_bound: u32) -> Result<Self> {
        Self::new(len, degree_bound, true)
    }

    fn new(len: &PrimePowerLength, degree_bound: u32, restricted: bool) -> Result<Self> {
        if len.p() == 2 {
            return Err(Error::EvenPrime);
        }
        if len.m() < 2 {
            return Err(Error::InvalidArgument(
                "the coefficient groups are defined for m >= 2".into(),
            ));
        }
        if degree_bound < 1 || degree_bound as u64 >= len.p() {
            return Err(Error::InvalidArgument(format!(
                "degree bound {degree_bound} outside 1..p"
            )));
        }
        Ok(Self { len: len.clone(), degree_bound, restricted })
    }

    pub fn len(&self) -> &PrimePowerLength {
        &self.len
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn is_restricted(&self) -> bool {
        self.restricted
    }

    /// |Q^n| = (p-1) p^(2m+n-2); |Q_1^n| = p^(m+n).
    pub fn order(&self) -> u128 {
        let p = self.len.p() as u128;
        let (m, n) = (self.len.m(), self.degree_bound);
        if self.restricted {
            p.pow(m + n)
        } else {
            (p - 1) * p.pow(2 * m + n - 2)
        }
    }

    /// Coefficient-constraint membership test; lower-degree members of
    /// smaller groups are members here too.
    pub fn contains(&self, f: &PolyPerm) -> bool {
        if *f.len() != self.len || f.degree() as u32 > self.degree_bound {
            return false;
        }
        if self.restricted {
            f.coeffs()[1] % self.len.p_pow_m1() == 1
        } else {
            true
        }
    }

    fn a1_count(&self) -> u64 {
        if self.restricted {
            self.len.p()
        } else {
            self.len.n() - self.len.p_pow_m1()
        }
    }

    /// Decodes the lexicographic index (on the coefficient tuple
    /// (a_0, a_1, ..., a_n)) into coefficients.
    fn coeffs_at(&self, idx: u128) -> Vec<u64> {
        let n = self.len.n();
        let q = self.len.p_pow_m1();
        let p = self.len.p();
        let d = self.degree_bound as usize;
        let mut radices = vec![n as u128, self.a1_count() as u128];
        radices.extend(std::iter::repeat_n(p as u128, d - 1));
        let mut digits = vec![0u128; d + 1];
        let mut rest = idx;
        for i in (0..=d).rev() {
            digits[i] = rest % radices[i];
            rest /= radices[i];
        }
        debug_assert_eq!(rest, 0);
        let mut coeffs = Vec::with_capacity(d + 1);
        coeffs.push(digits[0] as u64);
        coeffs.push(if self.restricted {
            1 + digits[1] as u64 * q
        } else {
            // digits[1]-th unit mod p^m in ascending order: units are the
            // values skipping multiples of p
            let j = digits[1] as u64;
            j + 1 + j / (p - 1)
        });
        for &dg in digits.iter().skip(2) {
            coeffs.push(dg as u64 * q);
        }
        coeffs
    }

    /// Element at a lexicographic index. The coefficient constraints imply
    /// bijectivity for m >= 2, so construction cannot fail.
    pub fn element_at(&self, idx: u128) -> PolyPerm {
        PolyPerm::new(self.len.clone(), self.coeffs_at(idx))
            .expect("coefficient constraints imply a bijection for m >= 2")
    }

    /// Streams the group in lexicographic coefficient order.
    ///
    /// For degree_bound < p-1 the coefficient tuples are in bijection with
    /// the elements; for degree_bound = p-1 distinct tuples may induce the
    /// same map, which [`QGroup::elements`] deduplicates and reports.
    pub fn iter(&self) -> impl Iterator<Item = PolyPerm> + '_ {
        (0..self.order()).map(|i| self.element_at(i))
    }

    /// Materializes the whole group (capped), deduplicated by image array.
    /// Returns the elements and the number of coefficient collisions.
    pub fn elements(&self, cap: u128) -> Result<(Vec<PolyPerm>, u64)> {
        let count = self.order();
        if count > cap {
            return Err(Error::EnumerationCap { required: count, cap });
        }
        let dedupe = self.degree_bound as u64 == self.len.p() - 1;
        let mut out = Vec::with_capacity(count as usize);
        let mut collisions = 0u64;
        let mut seen = std::collections::HashSet::new();
        for f in self.iter() {
            if dedupe {
                let img: Vec<u32> = (0..self.len.n()).map(|x| f.eval(x) as u32).collect();
                if !seen.insert(img) {
                    collisions += 1;
                    continue;
                }
            }
            out.push(f);
        }
        Ok((out, collisions))
    }
}

impl fmt::Display for QGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub = if self.restricted { "_1" } else { "" };
        write!(f, "Q{sub}^{} on Z_{}", self.degree_bound, self.len.n())
    }
}
