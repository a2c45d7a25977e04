//! Cyclic codes over F_q given by defining sets, with generator matrices,
//! canonical forms, permutation action, duality and exact minimum distance
//! at desk scale.
//!
//! A cyclic code of length n over F_q (gcd(q, n) = 1) is stored as its
//! defining set Z, a union of q-cyclotomic cosets mod n: the code is
//! { c in F_q^n : c(beta^z) = 0 for all z in Z } for a fixed primitive
//! n-th root of unity beta in GF(q^e), e = ord_n(q). The root beta and the
//! embedding F_q -> GF(q^e) are deterministic, so generator matrices are
//! reproducible bit for bit.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::arithmetic::{
    cyclotomic_coset_of, gcd, multiplicative_order, prime_power, LENGTH_CAP,
};
use crate::error::{Error, Result};
use crate::field::{field, poly_product_over_roots, Embedding, FieldElem, FieldSpec, Poly};
use crate::linalg::Mat;
use crate::perm::Permutation;

/// Default cap on brute-force codeword enumeration (q^k candidates).
pub const DISTANCE_CAP: u128 = 10_000_000;

/// JSON descriptor: `{"n":..,"q":..,"defining_set":[..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub n: u64,
    pub q: u64,
    pub defining_set: Vec<u64>,
}

/// A cyclic code, identified by (n, F_q, defining set).
#[derive(Debug)]
pub struct CyclicCode {
    n: u64,
    field: FieldSpec,
    defining: Vec<u64>,
    canon: OnceLock<LinearCode>,
}

impl Clone for CyclicCode {
    fn clone(&self) -> Self {
        Self {
            n: self.n,
            field: self.field.clone(),
            defining: self.defining.clone(),
            canon: OnceLock::new(),
        }
    }
}

impl PartialEq for CyclicCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.field == other.field && self.defining == other.defining
    }
}
impl Eq for CyclicCode {}

/// A (possibly non-cyclic) linear code given by its canonical rref
/// generator matrix. This is what permutation images produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    pub n: u64,
    pub field: FieldSpec,
    pub rref: Mat,
}

impl LinearCode {
    pub fn dimension(&self) -> u64 {
        self.rref.rows() as u64
    }
}

impl CyclicCode {
    /// Smallest cyclic code whose defining set contains the seeds.
    pub fn from_defining_set(n: u64, fs: &FieldSpec, seeds: &[u64]) -> Result<Self> {
        if !(2..=LENGTH_CAP).contains(&n) {
            return Err(Error::LengthCap { n, cap: LENGTH_CAP });
        }
        let q = fs.order();
        if gcd(q % n, n) != 1 {
            return Err(Error::NotCoprime { q, n });
        }
        let mut defining = vec![];
        for &s in seeds {
            defining.extend(cyclotomic_coset_of(n, q % n, s));
        }
        defining.sort_unstable();
        defining.dedup();
        Ok(Self { n, field: fs.clone(), defining, canon: OnceLock::new() })
    }

    /// BCH code with designed distance delta: defining set is the closure
    /// of the consecutive run b, b+1, ..., b+delta-2.
    pub fn bch(n: u64, fs: &FieldSpec, b: u64, delta: u64) -> Result<Self> {
        if delta < 2 {
            return Err(Error::InvalidArgument("designed distance must be >= 2".into()));
        }
        if b < 1 {
            return Err(Error::InvalidArgument("b must be >= 1".into()));
        }
        let seeds: Vec<u64> = (b..=b + delta - 2).map(|s| s % n).collect();
        Self::from_defining_set(n, fs, &seeds)
    }

    pub fn from_descriptor(d: &CodeDescriptor) -> Result<Self> {
        let (r, alpha) = prime_power(d.q).ok_or(Error::NotPrimePower(d.q))?;
        let fs = field(r, alpha)?;
        let code = Self::from_defining_set(d.n, &fs, &d.defining_set)?;
        if code.defining.len() != d.defining_set.len()
            || d.defining_set.iter().any(|s| code.defining.binary_search(&(s % d.n)).is_err())
        {
            return Err(Error::InvalidArgument(
                "defining_set is not a union of q-cyclotomic cosets".into(),
            ));
        }
        Ok(code)
    }

    pub fn descriptor(&self) -> CodeDescriptor {
        CodeDescriptor { n: self.n, q: self.q(), defining_set: self.defining.clone() }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn field_spec(&self) -> &FieldSpec {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.order()
    }

    pub fn defining_set(&self) -> &[u64] {
        &self.defining
    }

    pub fn dimension(&self) -> u64 {
        self.n - self.defining.len() as u64
    }

    /// k x n matrix whose rows are the cyclic shifts of the generator
    /// polynomial.
    pub fn generator_matrix(&self) -> Result<GeneratorMatrix> {
        let k = self.dimension() as usize;
        let n = self.n as usize;
        if k == 0 {
            return Ok(GeneratorMatrix { mat: Mat::zero(0, n) });
        }
        let g = self.generator_poly()?;
        debug_assert_eq!(g.coeffs.len(), self.defining.len() + 1);
        let mut rows = Vec::with_capacity(k);
        for i in 0..k {
            let mut row = vec![FieldElem(0); n];
            for (j, &c) in g.coeffs.iter().enumerate() {
                row[i + j] = c;
            }
            rows.push(row);
        }
        Ok(GeneratorMatrix { mat: Mat::from_rows(rows, n)? })
    }

    /// Monic generator polynomial with coefficients in F_q.
    pub fn generator_poly(&self) -> Result<Poly> {
        if self.defining.is_empty() {
            return Ok(Poly::one());
        }
        let e = multiplicative_order(self.q(), self.n)?;
        let r = self.field.characteristic();
        let big_degree = self
            .field
            .degree()
            .checked_mul(e as u32)
            .ok_or(Error::FieldCap { r, k: u32::MAX })?;
        let big = field(r, big_degree)?;
        let beta = big.pow(big.primitive_element(), (big.order() - 1) / self.n);
        debug_assert_eq!(big.element_order(beta).unwrap(), self.n);
        let roots: Vec<FieldElem> =
            self.defining.iter().map(|&z| big.pow(beta, z)).collect();
        let g_big = poly_product_over_roots(&big, &roots)?;
        let emb = Embedding::new(&self.field, &big)?;
        let mut coeffs = Vec::with_capacity(g_big.coeffs.len());
        for &c in &g_big.coeffs {
            let small = emb.project(c).ok_or_else(|| {
                Error::Internal("generator coefficient escaped F_q".into())
            })?;
            coeffs.push(small);
        }
        Ok(Poly::new(coeffs))
    }

    /// Canonical rref form; cached. Two cyclic codes are equal as codes iff
    /// their canonical forms are identical.
    pub fn canonical_form(&self) -> Result<&LinearCode> {
        if let Some(c) = self.canon.get() {
            return Ok(c);
        }
        let gm = self.generator_matrix()?;
        let lc = LinearCode {
            n: self.n,
            field: self.field.clone(),
            rref: gm.mat.rref(&self.field),
        };
        let _ = self.canon.set(lc);
        Ok(self.canon.get().expect("just set"))
    }

    /// The coordinate-permuted code, re-canonicalized. The result is
    /// generally no longer cyclic.
    pub fn apply_perm(&self, sigma: &Permutation) -> Result<LinearCode> {
        if sigma.degree() != self.n {
            return Err(Error::DegreeMismatch(sigma.degree(), self.n));
        }
        let base = self.canonical_form()?;
        Ok(LinearCode {
            n: self.n,
            field: self.field.clone(),
            rref: base.rref.permute_cols(sigma)?.rref(&self.field),
        })
    }

    pub fn is_automorphism(&self, sigma: &Permutation) -> Result<bool> {
        Ok(self.apply_perm(sigma)? == *self.canonical_form()?)
    }

    /// A = {units a mod n : a Z = Z setwise}. The convention is that the
    /// multiplier mu_a fixes the code iff it fixes the defining set; the
    /// generator-matrix oracle agrees because mu_a sends defining set Z to
    /// a^-1 Z and A is a group.
    pub fn multiplier_stabilizer(&self) -> Vec<u64> {
        let z: std::collections::HashSet<u64> = self.defining.iter().copied().collect();
        (1..self.n)
            .filter(|&a| gcd(a, self.n) == 1)
            .filter(|&a| {
                self.defining
                    .iter()
                    .all(|&x| z.contains(&(crate::arithmetic::mul_mod(a, x, self.n))))
            })
            .collect()
    }

    /// Dual code: defining set Z_n \ (-Z).
    pub fn dual(&self) -> CyclicCode {
        let neg: std::collections::HashSet<u64> =
            self.defining.iter().map(|&z| (self.n - z) % self.n).collect();
        let defining: Vec<u64> = (0..self.n).filter(|x| !neg.contains(x)).collect();
        CyclicCode {
            n: self.n,
            field: self.field.clone(),
            defining,
            canon: OnceLock::new(),
        }
    }

    /// Zero code, full space, repetition code or its dual.
    pub fn is_elementary(&self) -> bool {
        let z = self.defining.len() as u64;
        z == 0                                                    // full space
            || z == self.n                                        // zero code
            || (z == 1 && self.defining[0] == 0)                  // sum-zero code
            || (z == self.n - 1 && self.defining.first() != Some(&0)) // repetition
    }

    /// Exact minimum Hamming distance by codeword enumeration (q^k
    /// candidates, capped). Binary codes of length <= 64 run on packed
    /// words.
    pub fn min_distance(&self, cap: u128) -> Result<u64> {
        min_distance_of(&self.canonical_form()?.clone(), cap)
    }
}

/// Exact minimum distance of a linear code given by a generator matrix.
pub fn min_distance_of(code: &LinearCode, cap: u128) -> Result<u64> {
    let fs = &code.field;
    let k = code.rref.rows();
    let n = code.n as usize;
    if k == 0 {
        return Err(Error::InvalidArgument("the zero code has no nonzero codeword".into()));
    }
    let total = (fs.order() as u128)
        .checked_pow(k as u32)
        .ok_or(Error::DistanceCap { required: u128::MAX, cap })?;
    if fs.order() == 2 && n <= 64 {
        // Gray-code walk over all 2^k combinations on packed rows.
        if total > (1 << 32) {
            return Err(Error::DistanceCap { required: total, cap: 1 << 32 });
        }
        let rows: Vec<u64> = (0..k)
            .map(|i| {
                code.rref
                    .row(i)
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, &e)| acc | ((e.0 & 1) << j))
            })
            .collect();
        let mut word = 0u64;
        let mut best = u32::MAX;
        for i in 1u64..(1u64 << k) {
            word ^= rows[i.trailing_zeros() as usize];
            best = best.min(word.count_ones());
        }
        return Ok(best as u64);
    }
    if total > cap {
        return Err(Error::DistanceCap { required: total, cap });
    }
    // depth-first partial sums over information symbols
    let mut current = vec![FieldElem(0); n];
    let mut best = u64::MAX;
    fn walk(
        fs: &FieldSpec,
        mat: &Mat,
        depth: usize,
        nonzero: bool,
        current: &mut Vec<FieldElem>,
        best: &mut u64,
    ) {
        if depth == mat.rows() {
            if nonzero {
                let w = current.iter().filter(|e| e.0 != 0).count() as u64;
                if w < *best {
                    *best = w;
                }
            }
            return;
        }
        for c in fs.elements() {
            if c != FieldElem(0) {
                for (j, slot) in current.iter_mut().enumerate() {
                    *slot = fs.add(*slot, fs.mul(c, mat.at(depth, j)));
                }
            }
            walk(fs, mat, depth + 1, nonzero || c != FieldElem(0), current, best);
            if c != FieldElem(0) {
                let neg = fs.neg(c);
                for (j, slot) in current.iter_mut().enumerate() {
                    *slot = fs.add(*slot, fs.mul(neg, mat.at(depth, j)));
                }
            }
        }
    }
    walk(fs, &code.rref, 0, false, &mut current, &mut best);
    Ok(best)
}

/// Generator matrix wrapper; rows serialize as integer-encoded field
/// elements (base-r polynomial coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorMatrix {
    pub mat: Mat,
}
