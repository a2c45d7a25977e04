//! Automorphism-group classification of cyclic codes and circulant graphs:
//! the prime-length multiplier algorithm, Golay and projective exceptional
//! cases, and the Sylow-subgroup probe for length p^m.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arithmetic::{
    gcd, is_prime, mul_mod, multiplicative_order, prime_power,
    projective_length_decompositions, PrimePowerLength,
};
use crate::brand::{probe_perm, sylow_step_witness};
use crate::codes::{CyclicCode, DISTANCE_CAP};
use crate::error::{Error, Result};
use crate::field::{field, FieldElem, FieldSpec};
use crate::graphs::CirculantGraph;
use crate::linalg::Mat;
use crate::object::CyclicObject;
use crate::perm::{multiplier, Permutation};

/// Exact order when fully determined, lower bound otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderBound {
    Exact(BigUint),
    AtLeast(BigUint),
}

impl OrderBound {
    pub fn value(&self) -> &BigUint {
        match self {
            OrderBound::Exact(v) | OrderBound::AtLeast(v) => v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, OrderBound::Exact(_))
    }
}

impl fmt::Display for OrderBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderBound::Exact(v) => write!(f, "{v}"),
            OrderBound::AtLeast(v) => write!(f, ">= {v}"),
        }
    }
}

impl Serialize for OrderBound {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("OrderBound", 2)?;
        match self {
            OrderBound::Exact(v) => {
                st.serialize_field("exact", &true)?;
                st.serialize_field("value", &v.to_string())?;
            }
            OrderBound::AtLeast(v) => {
                st.serialize_field("exact", &false)?;
                st.serialize_field("value", &v.to_string())?;
            }
        }
        st.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupTag {
    Symmetric,
    AffineSubgroup,
    FullAffine,
    Projective,
    GolayBinary,
    GolayTernary,
    Imprimitive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SylowBound {
    Exact(u32),
    AtLeast(u32),
}

/// Outcome of probing the p-Sylow subgroup of Aut with the permutations
/// f_i and the Q_1^1 step witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SylowProbe {
    pub p: u64,
    pub m: u32,
    /// Largest i in 1..=p-2 with f_i in Aut.
    pub largest_i: u32,
    /// True when largest_i = p-2; the exponent is then only a lower bound.
    pub at_cap: bool,
    /// Whether (1 + p^(m-1)) x is an automorphism; false pins the Sylow
    /// subgroup to the cycle itself.
    pub step_witness_in_aut: bool,
    /// Exponent s of the p-Sylow order p^s.
    pub s: SylowBound,
    /// Membership checks actually performed, as (i, in_aut).
    pub probes: Vec<(u32, bool)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    Elementary {
        kind: String,
    },
    Multipliers {
        a: Vec<u64>,
        semidirect: (u64, u64),
    },
    Projective {
        d: u32,
        t: u64,
        labeling_class: u64,
    },
    Golay {
        n: u64,
        q: u64,
        dim: u64,
        min_distance: Option<u64>,
    },
    Imprimitive {
        p: u64,
        m: u32,
        blocks: u64,
        block_size: u64,
        sylow: Option<SylowProbe>,
    },
}

/// A classified automorphism group with its computational evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutClassification {
    pub n: u64,
    pub tag: GroupTag,
    pub order: OrderBound,
    pub evidence: Evidence,
}

impl AutClassification {
    /// Human-readable group name; `x|` renders the semidirect product.
    pub fn name(&self) -> String {
        match (&self.tag, &self.evidence) {
            (GroupTag::Symmetric, _) => format!("S_{}", self.n),
            (GroupTag::AffineSubgroup, Evidence::Multipliers { a, .. }) => {
                if a.len() == 1 {
                    format!("C_{}", self.n)
                } else {
                    format!("C_{} x| C_{}", a.len(), self.n)
                }
            }
            (GroupTag::FullAffine, _) => format!("AGL(1,{})", self.n),
            (GroupTag::Projective, Evidence::Projective { d, t, .. }) => {
                format!("PGammaL({d},{t})")
            }
            (GroupTag::GolayBinary, _) => "M_23".into(),
            (GroupTag::GolayTernary, _) => "PSL(2,11)".into(),
            (GroupTag::Imprimitive, Evidence::Imprimitive { blocks, block_size, .. }) => {
                format!("imprimitive ({blocks} blocks of {block_size})")
            }
            _ => format!("{:?}", self.tag),
        }
    }
}

impl fmt::Display for AutClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, order {}", self.name(), self.order)
    }
}

pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// |PGammaL(d, t)| = s * |GL(d,t)| / (t - 1) for t = r0^s.
pub fn pgammal_order(d: u32, t: u64) -> Result<BigUint> {
    let (_, s) = prime_power(t).ok_or(Error::NotPrimePower(t))?;
    let tb = BigUint::from(t);
    let td = tb.pow(d);
    let mut gl = BigUint::from(1u32);
    for i in 0..d {
        gl *= &td - tb.pow(i);
    }
    Ok(gl / (t - 1) * s)
}

pub const M23_ORDER: u64 = 10_200_960;
pub const PSL2_11_ORDER: u64 = 660;

// ---------------------------------------------------------------------
// Sylow probe
// ---------------------------------------------------------------------

/// Locates the p-Sylow subgroup of Aut(obj) for an object on p^m points.
///
/// The step witness (1 + p^(m-1)) x decides s = m versus s > m: the unique
/// subgroup of S_{p^m} of order p^(m+1) containing T is Q_1^1, so a Sylow
/// subgroup strictly larger than the cycle must contain the witness, and
/// conversely the witness together with T generates a group of order
/// p^(m+1). When s > m, the largest I with f_I in Aut gives s = I + m as
/// long as I < p-2; at I = p-2 the result is flagged and s is only a lower
/// bound.
pub fn sylow_probe<T: CyclicObject>(obj: &T, len: &PrimePowerLength) -> Result<SylowProbe> {
    if len.p() == 2 {
        return Err(Error::EvenPrime);
    }
    if obj.points() != len.n() {
        return Err(Error::DegreeMismatch(obj.points(), len.n()));
    }
    let t = crate::perm::complete_cycle(len.n())?;
    if !obj.is_automorphism(&t)? {
        return Err(Error::Internal("object is not cyclic: T is not an automorphism".into()));
    }
    let mut probes = vec![(1u32, true)];
    if len.m() == 1 {
        // the p-part of |S_p| is p, so the Sylow subgroup is the cycle
        return Ok(SylowProbe {
            p: len.p(),
            m: 1,
            largest_i: 1,
            at_cap: false,
            step_witness_in_aut: false,
            s: SylowBound::Exact(1),
            probes,
        });
    }
    let witness = sylow_step_witness(len)?;
    let step_witness_in_aut = obj.is_automorphism(&witness.to_permutation())?;
    if !step_witness_in_aut {
        return Ok(SylowProbe {
            p: len.p(),
            m: len.m(),
            largest_i: 1,
            at_cap: false,
            step_witness_in_aut,
            s: SylowBound::Exact(len.m()),
            probes,
        });
    }
    let cap = (len.p() - 2) as u32;
    let mut memo: HashMap<u32, bool> = HashMap::from([(1, true)]);
    let mut member = |i: u32, probes: &mut Vec<(u32, bool)>| -> Result<bool> {
        if let Some(&v) = memo.get(&i) {
            return Ok(v);
        }
        let f = probe_perm(len, i)?;
        let v = obj.is_automorphism(&f.to_permutation())?;
        memo.insert(i, v);
        probes.push((i, v));
        Ok(v)
    };
    // binary search on the monotone chain f_1, f_2, ..., f_(p-2)
    let (mut lo, mut hi) = (1u32, cap);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if member(mid, &mut probes)? {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    let largest_i = lo;
    // neighbor checks guard the monotonicity assumption
    if !member(largest_i, &mut probes)? {
        return Err(Error::Internal("probe chain is not monotone at I".into()));
    }
    if largest_i < cap && member(largest_i + 1, &mut probes)? {
        return Err(Error::Internal("probe chain is not monotone at I+1".into()));
    }
    let at_cap = largest_i == cap;
    let s = if at_cap {
        SylowBound::AtLeast(largest_i + len.m())
    } else {
        SylowBound::Exact(largest_i + len.m())
    };
    Ok(SylowProbe {
        p: len.p(),
        m: len.m(),
        largest_i,
        at_cap,
        step_witness_in_aut,
        s,
        probes,
    })
}

/// Convenience view of [`sylow_probe`] as the pair (I, s-lower-bound).
pub fn sylow_exponent<T: CyclicObject>(obj: &T, len: &PrimePowerLength) -> Result<(u32, u32)> {
    let probe = sylow_probe(obj, len)?;
    let s = match probe.s {
        SylowBound::Exact(s) | SylowBound::AtLeast(s) => s,
    };
    Ok((probe.largest_i, s))
}

// ---------------------------------------------------------------------
// Singer labeling and the projective test
// ---------------------------------------------------------------------

/// A bijection between Z_n (n = (t^d - 1)/(t - 1)) and the points of the
/// (d-1)-dimensional projective space over F_t, chosen so that the
/// complete cycle T acts as multiplication by a primitive element gamma.
pub struct SingerLabeling {
    d: u32,
    t: u64,
    r0: u64,
    s: u32,
    n: u64,
    big: FieldSpec,
    mu: FieldElem,
    scalars: Vec<FieldElem>,
    gamma_pows: Vec<FieldElem>,
    /// normalized point representative for each coordinate
    points: Vec<u64>,
    index: HashMap<u64, u32>,
    /// inverse of the basis matrix over GF(r0), for F_t-coordinates
    basis_inv: Mat,
    mu_pows: Vec<FieldElem>,
}

impl SingerLabeling {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn point_of(&self, coordinate: u64) -> u64 {
        self.points[coordinate as usize]
    }

    fn normalize(&self, u: FieldElem) -> u64 {
        self.scalars.iter().map(|&lam| self.big.mul(lam, u).0).min().expect("t >= 2")
    }

    /// F_t-coordinates of an element in the basis gamma^0..gamma^(d-1).
    fn decompose(&self, u: FieldElem) -> Vec<FieldElem> {
        let digits = self.big.decode(u);
        let sd = (self.s * self.d) as usize;
        let mut lams = Vec::with_capacity(self.d as usize);
        for i in 0..self.d as usize {
            let mut lam = FieldElem(0);
            for j in 0..self.s as usize {
                // solution entry (i*s + j) = sum_k basis_inv[(i*s+j), k] * digits[k]
                let mut x = 0u64;
                for (k, &dg) in digits.iter().enumerate().take(sd) {
                    x = (x + mul_mod(self.basis_inv.at(i * self.s as usize + j, k).0, dg, self.r0))
                        % self.r0;
                }
                lam = self.big.add(lam, self.big.mul(FieldElem(x), self.mu_pows[j]));
            }
            lams.push(lam);
        }
        lams
    }

    /// The coordinate permutation induced by an invertible d x d matrix
    /// over F_t (entries given as big-field elements lying in F_t).
    pub fn matrix_perm(&self, a: &[Vec<FieldElem>]) -> Result<Permutation> {
        let d = self.d as usize;
        let mut image = Vec::with_capacity(self.n as usize);
        for c in 0..self.n {
            let lam = self.decompose(self.gamma_pows_coord(c));
            let mut u = FieldElem(0);
            for (row, arow) in a.iter().enumerate() {
                let mut w = FieldElem(0);
                for col in 0..d {
                    w = self.big.add(w, self.big.mul(arow[col], lam[col]));
                }
                u = self.big.add(u, self.big.mul(w, self.gamma_pows[row]));
            }
            if u == FieldElem(0) {
                return Err(Error::InvalidArgument("singular matrix".into()));
            }
            let idx = self.index.get(&self.normalize(u)).ok_or_else(|| {
                Error::Internal("matrix image is not a labeled point".into())
            })?;
            image.push(*idx);
        }
        Permutation::from_image(image)
    }

    fn gamma_pows_coord(&self, c: u64) -> FieldElem {
        // gamma^c, computed incrementally would be nicer; keep it simple
        self.big.pow(self.gamma_pows[1], c)
    }

    /// Standard generators of GL(d, t) as coordinate permutations:
    /// a transvection, the basis cycle, and (for t > 2) a diagonal scaling
    /// by a generator of F_t^*.
    pub fn pgl_generators(&self) -> Result<Vec<Permutation>> {
        let d = self.d as usize;
        let one = self.big.one();
        let zero = self.big.zero();
        let mut transvection = vec![vec![zero; d]; d];
        let mut cycle = vec![vec![zero; d]; d];
        let mut diag = vec![vec![zero; d]; d];
        for i in 0..d {
            transvection[i][i] = one;
            diag[i][i] = one;
            cycle[i][(i + 1) % d] = one;
        }
        transvection[0][1] = one;
        diag[0][0] = self.mu;
        let mut gens = vec![self.matrix_perm(&transvection)?, self.matrix_perm(&cycle)?];
        if self.t > 2 {
            gens.push(self.matrix_perm(&diag)?);
        }
        Ok(gens)
    }

    /// The Frobenius x -> x^r0 acts on coordinates as the multiplier by r0.
    pub fn frobenius_perm(&self) -> Result<Permutation> {
        multiplier(self.n, self.r0 % self.n)
    }
}

/// Builds the deterministic Singer labeling for parameters (d, t).
pub fn singer_labeling(d: u32, t: u64) -> Result<SingerLabeling> {
    if d < 2 {
        return Err(Error::InvalidArgument("projective dimension d must be >= 2".into()));
    }
    let (r0, s) = prime_power(t).ok_or(Error::NotPrimePower(t))?;
    let big = field(r0, s * d)?;
    let n = (big.order() - 1) / (t - 1);
    if n > crate::arithmetic::LENGTH_CAP {
        return Err(Error::LengthCap { n, cap: crate::arithmetic::LENGTH_CAP });
    }
    let gamma = big.primitive_element();
    // gamma^n has order t - 1, so it generates F_t^* (trivial when t = 2)
    let mu = big.pow(gamma, n);
    let scalars: Vec<FieldElem> =
        std::iter::successors(Some(big.one()), |&x| Some(big.mul(x, mu)))
            .take((t - 1) as usize)
            .collect();
    let mu_pows: Vec<FieldElem> =
        std::iter::successors(Some(big.one()), |&x| Some(big.mul(x, mu)))
            .take(s as usize)
            .collect();
    let gamma_pows: Vec<FieldElem> =
        std::iter::successors(Some(big.one()), |&x| Some(big.mul(x, gamma)))
            .take(d as usize)
            .collect();
    // basis gamma^i * mu^j of the big field over GF(r0)
    let sd = (s * d) as usize;
    let prime = field(r0, 1)?;
    let mut basis = Mat::zero(sd, 2 * sd);
    for i in 0..d as usize {
        for j in 0..s as usize {
            let v = big.mul(gamma_pows[i], mu_pows[j]);
            let digits = big.decode(v);
            for (k, &dg) in digits.iter().enumerate() {
                basis.set(k, i * s as usize + j, FieldElem(dg));
            }
        }
    }
    for k in 0..sd {
        basis.set(k, sd + k, FieldElem(1));
    }
    let reduced = basis.rref(&prime);
    if reduced.rows() != sd {
        return Err(Error::Internal("singer basis is singular".into()));
    }
    let mut basis_inv = Mat::zero(sd, sd);
    for i in 0..sd {
        for j in 0..sd {
            basis_inv.set(i, j, reduced.at(i, sd + j));
        }
    }
    let mut lab = SingerLabeling {
        d,
        t,
        r0,
        s,
        n,
        big,
        mu,
        scalars,
        gamma_pows,
        points: vec![],
        index: HashMap::new(),
        basis_inv,
        mu_pows,
    };
    let mut points = Vec::with_capacity(n as usize);
    let mut index = HashMap::with_capacity(n as usize);
    let mut acc = lab.big.one();
    let gamma = lab.gamma_pows[1];
    for i in 0..n {
        let rep = lab.normalize(acc);
        if index.insert(rep, i as u32).is_some() {
            return Err(Error::Internal("labeling maps two coordinates to one point".into()));
        }
        points.push(rep);
        acc = lab.big.mul(acc, gamma);
    }
    // wrap-around consistency: gamma^n is a scalar
    if lab.normalize(acc) != points[0] {
        return Err(Error::Internal("labeling does not close up into a Singer cycle".into()));
    }
    lab.points = points;
    lab.index = index;
    Ok(lab)
}

/// Tests whether the code is invariant under PGammaL(d, t) realized through
/// a Singer labeling; returns the unit class of the successful labeling.
///
/// The labeling is only determined up to the choice of the primitive
/// element; replacing gamma by gamma^u conjugates every generator by the
/// multiplier M_u. The test therefore retries one representative u per
/// class of units mod n modulo the subgroup generated by r0 (labelings in
/// one class induce the same group).
pub fn projective_witness_class(code: &CyclicCode, d: u32, t: u64) -> Result<Option<u64>> {
    let n = code.n();
    let r = code.field_spec().characteristic();
    let (r0, _) = prime_power(t).ok_or(Error::NotPrimePower(t))?;
    if r0 != r {
        return Err(Error::Precondition(format!(
            "t = {t} is not a power of the field characteristic {r}"
        )));
    }
    if d < 3 {
        return Err(Error::Precondition("projective detection needs d >= 3".into()));
    }
    let lab = singer_labeling(d, t)?;
    if lab.n() != n {
        return Err(Error::Precondition(format!(
            "(t^d - 1)/(t - 1) = {} does not match the length {n}",
            lab.n()
        )));
    }
    let mut gens = lab.pgl_generators()?;
    gens.push(lab.frobenius_perm()?);
    // unit classes mod <r0>
    let mut seen = vec![false; n as usize];
    let mut classes = vec![];
    for u in 1..n {
        if gcd(u, n) != 1 || seen[u as usize] {
            continue;
        }
        classes.push(u);
        let mut x = u;
        loop {
            seen[x as usize] = true;
            x = mul_mod(x, r0 % n, n);
            if x == u {
                break;
            }
        }
        if classes.len() > 1024 {
            return Err(Error::EnumerationCap { required: classes.len() as u128, cap: 1024 });
        }
    }
    'class: for &u in &classes {
        let mu_u = multiplier(n, u)?;
        let mu_inv = mu_u.inverse();
        for g in &gens {
            let conj = mu_inv.compose(g)?.compose(&mu_u)?;
            if !code.is_automorphism(&conj)? {
                continue 'class;
            }
        }
        return Ok(Some(u));
    }
    Ok(None)
}

/// Boolean form of [`projective_witness_class`].
pub fn is_projective(code: &CyclicCode, d: u32, t: u64) -> Result<bool> {
    Ok(projective_witness_class(code, d, t)?.is_some())
}

// ---------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------

fn elementary_kind(code: &CyclicCode) -> String {
    let z = code.defining_set().len() as u64;
    if z == 0 {
        "full space".into()
    } else if z == code.n() {
        "zero code".into()
    } else if z == 1 {
        "sum-zero code".into()
    } else {
        "repetition code".into()
    }
}

/// Shared core of Algorithm A: the multiplier stabilizer determines the
/// affine automorphism group {tau_{a,b} : a in A, b in Z_p} of order p|A|.
/// Every member of A is re-verified against the generator-matrix oracle.
fn affine_classification(code: &CyclicCode) -> Result<AutClassification> {
    let p = code.n();
    let a = code.multiplier_stabilizer();
    for &u in &a {
        if !code.is_automorphism(&multiplier(p, u)?)? {
            return Err(Error::Internal(format!(
                "multiplier {u} stabilizes the defining set but fails the matrix oracle"
            )));
        }
    }
    let order = BigUint::from(p) * a.len();
    if a.len() as u64 == p - 1 {
        return Ok(AutClassification {
            n: p,
            tag: GroupTag::FullAffine,
            order: OrderBound::Exact(order),
            evidence: Evidence::Multipliers { semidirect: (a.len() as u64, p), a },
        });
    }
    Ok(AutClassification {
        n: p,
        tag: GroupTag::AffineSubgroup,
        order: OrderBound::Exact(order),
        evidence: Evidence::Multipliers { semidirect: (a.len() as u64, p), a },
    })
}

/// Algorithm A for prime length, with its preconditions enforced: the code
/// must be non-elementary, not a Golay case, and the length must not admit
/// a projective decomposition pattern p = (t^d - 1)/(t - 1) with t = r^(d^b),
/// d >= 3 prime and gcd(d, t - 1) = 1.
pub fn algorithm_a(code: &CyclicCode) -> Result<AutClassification> {
    let p = code.n();
    if !is_prime(p) {
        return Err(Error::UnsupportedLength(p));
    }
    if code.is_elementary() {
        return Err(Error::Precondition("the code is elementary".into()));
    }
    if detect_golay(code, DISTANCE_CAP)?.is_some() {
        return Err(Error::Precondition("the code is a Golay case (p = 11 or 23)".into()));
    }
    let r = code.field_spec().characteristic();
    for (t, d) in projective_length_decompositions(p, 40) {
        if d < 3 || !is_prime(d as u64) {
            continue;
        }
        let Some((r0, a)) = prime_power(t) else { continue };
        if r0 != r {
            continue;
        }
        // a must be a power of d
        let mut ap = a;
        while ap % d == 0 {
            ap /= d;
        }
        if ap == 1 && gcd(d as u64, t - 1) == 1 {
            return Err(Error::Precondition(format!(
                "projective length pattern p = (t^d-1)/(t-1) with t = {t}, d = {d}"
            )));
        }
    }
    affine_classification(code)
}

/// Recognizes the binary and ternary Golay cases by length, field
/// characteristic and dimension, confirming the minimum distance when the
/// enumeration fits under the cap.
pub fn detect_golay(code: &CyclicCode, distance_cap: u128) -> Result<Option<AutClassification>> {
    if code.is_elementary() {
        return Ok(None);
    }
    let n = code.n();
    let r = code.field_spec().characteristic();
    let dim = code.dimension();
    let (tag, order, expected_distance) = match (n, r, dim) {
        (23, 2, 12) => (GroupTag::GolayBinary, M23_ORDER, 7),
        (23, 2, 11) => (GroupTag::GolayBinary, M23_ORDER, 8),
        (11, 3, 6) => (GroupTag::GolayTernary, PSL2_11_ORDER, 5),
        (11, 3, 5) => (GroupTag::GolayTernary, PSL2_11_ORDER, 6),
        _ => return Ok(None),
    };
    let min_distance = match code.min_distance(distance_cap) {
        Ok(dist) => {
            if dist != expected_distance {
                return Err(Error::Internal(format!(
                    "length-{n} dimension-{dim} code has distance {dist}, expected {expected_distance}"
                )));
            }
            Some(dist)
        }
        Err(Error::DistanceCap { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(Some(AutClassification {
        n,
        tag,
        order: OrderBound::Exact(BigUint::from(order)),
        evidence: Evidence::Golay { n, q: code.q(), dim, min_distance },
    }))
}

/// Full classification of the automorphism group of a cyclic code, with
/// the default codeword-enumeration cap for the distance confirmations.
pub fn classify_code(code: &CyclicCode) -> Result<AutClassification> {
    classify_code_with(code, DISTANCE_CAP)
}

/// Full classification of the automorphism group of a cyclic code.
///
/// Dispatch order: elementary, Golay, projective (over every admissible
/// length decomposition), then prime-length affine via Algorithm A, then
/// prime-power imprimitive with Sylow evidence. Composite non-prime-power
/// lengths are unsupported.
pub fn classify_code_with(code: &CyclicCode, distance_cap: u128) -> Result<AutClassification> {
    let n = code.n();
    if code.is_elementary() {
        return Ok(AutClassification {
            n,
            tag: GroupTag::Symmetric,
            order: OrderBound::Exact(factorial(n)),
            evidence: Evidence::Elementary { kind: elementary_kind(code) },
        });
    }
    if let Some(golay) = detect_golay(code, distance_cap)? {
        return Ok(golay);
    }
    let r = code.field_spec().characteristic();
    for (t, d) in projective_length_decompositions(n, 40) {
        if d < 3 {
            continue;
        }
        match prime_power(t) {
            Some((r0, _)) if r0 == r => {}
            _ => continue,
        }
        if let Some(class) = projective_witness_class(code, d, t)? {
            return Ok(AutClassification {
                n,
                tag: GroupTag::Projective,
                order: OrderBound::Exact(pgammal_order(d, t)?),
                evidence: Evidence::Projective { d, t, labeling_class: class },
            });
        }
    }
    if is_prime(n) {
        if code.q() == n {
            // unreachable while gcd(q, n) = 1 is required of cyclic codes;
            // kept as the documented dispatch for the q = p case
            return Ok(AutClassification {
                n,
                tag: GroupTag::FullAffine,
                order: OrderBound::Exact(BigUint::from(n) * (n - 1)),
                evidence: Evidence::Multipliers {
                    a: (1..n).collect(),
                    semidirect: (n - 1, n),
                },
            });
        }
        return affine_classification(code);
    }
    let len = PrimePowerLength::from_n(n).map_err(|_| Error::UnsupportedLength(n))?;
    let sylow = if len.p() > 2 { Some(sylow_probe(code, &len)?) } else { None };
    let k_order = BigUint::from(n) * multiplicative_order(code.q(), n)?;
    Ok(AutClassification {
        n,
        tag: GroupTag::Imprimitive,
        order: OrderBound::AtLeast(k_order),
        evidence: Evidence::Imprimitive {
            p: len.p(),
            m: len.m(),
            blocks: len.p_pow_m1(),
            block_size: len.p(),
            sylow,
        },
    })
}

/// Classification for circulant graphs. A doubly transitive graph group
/// forces a complete or empty graph, so the only cases are symmetric,
/// prime-length affine, and prime-power imprimitive.
pub fn classify_graph(graph: &CirculantGraph) -> Result<AutClassification> {
    let n = graph.n();
    if graph.is_complete() || graph.is_empty_graph() {
        return Ok(AutClassification {
            n,
            tag: GroupTag::Symmetric,
            order: OrderBound::Exact(factorial(n)),
            evidence: Evidence::Elementary {
                kind: if graph.is_complete() { "complete graph" } else { "empty graph" }.into(),
            },
        });
    }
    let stabilizer: Vec<u64> = (1..n)
        .filter(|&a| gcd(a, n) == 1)
        .filter(|&a| {
            graph
                .multiplier_image(a)
                .map(|img| img.connection() == graph.connection())
                .unwrap_or(false)
        })
        .collect();
    for &a in &stabilizer {
        if !graph.is_automorphism(&multiplier(n, a)?)? {
            return Err(Error::Internal(format!(
                "multiplier {a} stabilizes the connection set but moves the edge set"
            )));
        }
    }
    if is_prime(n) {
        let order = BigUint::from(n) * stabilizer.len();
        let tag = if stabilizer.len() as u64 == n - 1 {
            GroupTag::FullAffine
        } else {
            GroupTag::AffineSubgroup
        };
        return Ok(AutClassification {
            n,
            tag,
            order: OrderBound::Exact(order),
            evidence: Evidence::Multipliers {
                semidirect: (stabilizer.len() as u64, n),
                a: stabilizer,
            },
        });
    }
    let len = PrimePowerLength::from_n(n).map_err(|_| Error::UnsupportedLength(n))?;
    let sylow = if len.p() > 2 { Some(sylow_probe(graph, &len)?) } else { None };
    let k_order = BigUint::from(n) * stabilizer.len();
    Ok(AutClassification {
        n,
        tag: GroupTag::Imprimitive,
        order: OrderBound::AtLeast(k_order),
        evidence: Evidence::Imprimitive {
            p: len.p(),
            m: len.m(),
            blocks: len.p_pow_m1(),
            block_size: len.p(),
            sylow,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::field;

    fn gf(r: u64, k: u32) -> FieldSpec {
        field(r, k).unwrap()
    }

    fn bch(n: u64, r: u64, k: u32, b: u64, delta: u64) -> CyclicCode {
        CyclicCode::bch(n, &gf(r, k), b, delta).unwrap()
    }

    #[test]
    fn singer_labeling_fano() {
        let lab = singer_labeling(3, 2).unwrap();
        assert_eq!(lab.n(), 7);
        let pts: std::collections::HashSet<u64> = (0..7).map(|i| lab.point_of(i)).collect();
        assert_eq!(pts.len(), 7);
    }

    #[test]
    fn singer_labeling_projective_line() {
        let lab = singer_labeling(2, 3).unwrap();
        assert_eq!(lab.n(), 4);
    }

    #[test]
    fn hamming_is_projective() {
        let c = bch(7, 2, 1, 1, 3);
        assert_eq!(projective_witness_class(&c, 3, 2).unwrap(), Some(1));
        assert_eq!(pgammal_order(3, 2).unwrap(), BigUint::from(168u32));
    }

    #[test]
    fn pgl_orders() {
        assert_eq!(pgammal_order(3, 3).unwrap(), BigUint::from(5616u32));
        assert_eq!(pgammal_order(2, 4).unwrap(), BigUint::from(120u32)); // 2 * |PGL(2,4)| = 2*60
    }

    #[test]
    fn ternary_13_cases() {
        let proj = bch(13, 3, 1, 1, 4);
        assert_eq!(proj.dimension(), 7);
        assert!(is_projective(&proj, 3, 3).unwrap());
        let affine = bch(13, 3, 1, 2, 4);
        assert_eq!(affine.dimension(), 4);
        assert!(!is_projective(&affine, 3, 3).unwrap());
        let small = bch(13, 3, 1, 1, 2);
        assert!(!is_projective(&small, 3, 3).unwrap());
    }

    #[test]
    fn algorithm_a_cases() {
        let c17 = bch(17, 2, 1, 1, 2);
        let out = algorithm_a(&c17).unwrap();
        assert_eq!(out.tag, GroupTag::AffineSubgroup);
        assert_eq!(out.order, OrderBound::Exact(BigUint::from(136u32)));
        assert_eq!(out.name(), "C_8 x| C_17");

        let c41 = bch(41, 2, 1, 1, 2);
        assert_eq!(algorithm_a(&c41).unwrap().order, OrderBound::Exact(BigUint::from(820u32)));

        let c5 = bch(5, 11, 1, 1, 3);
        let out = algorithm_a(&c5).unwrap();
        assert_eq!(out.order, OrderBound::Exact(BigUint::from(5u32)));
        assert_eq!(out.name(), "C_5");

        // pre-screens
        assert!(algorithm_a(&bch(23, 2, 1, 1, 3)).is_err()); // Golay
        assert!(algorithm_a(&bch(13, 3, 1, 1, 2)).is_err()); // projective pattern
        let rep = CyclicCode::from_defining_set(7, &gf(2, 1), &[1, 2, 3, 4, 5, 6]).unwrap();
        assert!(algorithm_a(&rep).is_err()); // elementary
    }

    #[test]
    fn golay_detection() {
        let golay = bch(23, 2, 1, 1, 3);
        let out = detect_golay(&golay, DISTANCE_CAP).unwrap().unwrap();
        assert_eq!(out.tag, GroupTag::GolayBinary);
        assert_eq!(out.order, OrderBound::Exact(BigUint::from(10_200_960u32)));
        match out.evidence {
            Evidence::Golay { min_distance, .. } => assert_eq!(min_distance, Some(7)),
            _ => panic!("wrong evidence"),
        }
        let ternary = bch(11, 3, 1, 1, 2);
        let out = detect_golay(&ternary, DISTANCE_CAP).unwrap().unwrap();
        assert_eq!(out.tag, GroupTag::GolayTernary);
        assert_eq!(out.order, OrderBound::Exact(BigUint::from(660u32)));
        let dual = ternary.dual();
        let out = detect_golay(&dual, DISTANCE_CAP).unwrap().unwrap();
        match out.evidence {
            Evidence::Golay { dim, min_distance, .. } => {
                assert_eq!(dim, 5);
                assert_eq!(min_distance, Some(6));
            }
            _ => panic!("wrong evidence"),
        }
        assert!(detect_golay(&bch(7, 2, 1, 1, 3), DISTANCE_CAP).unwrap().is_none());
    }

    #[test]
    fn classify_dispatch() {
        // elementary
        let rep17 = CyclicCode::from_defining_set(17, &gf(2, 1), &(1..17).collect::<Vec<_>>()).unwrap();
        let out = classify_code(&rep17).unwrap();
        assert_eq!(out.tag, GroupTag::Symmetric);
        assert_eq!(out.order, OrderBound::Exact(factorial(17)));

        // affine via table row (4, 43, 9)
        let c43 = bch(43, 2, 2, 1, 9);
        let out = classify_code(&c43).unwrap();
        assert_eq!(out.tag, GroupTag::AffineSubgroup);
        assert_eq!(out.order, OrderBound::Exact(BigUint::from(301u32)));

        // hamming projective
        let out = classify_code(&bch(7, 2, 1, 1, 3)).unwrap();
        assert_eq!(out.tag, GroupTag::Projective);
        assert_eq!(out.name(), "PGammaL(3,2)");

        // imprimitive on 25 points
        let out = classify_code(&bch(25, 3, 1, 1, 3)).unwrap();
        assert_eq!(out.tag, GroupTag::Imprimitive);
        match &out.evidence {
            Evidence::Imprimitive { blocks, block_size, sylow, .. } => {
                assert_eq!((*blocks, *block_size), (5, 5));
                let probe = sylow.as_ref().unwrap();
                assert!(probe.at_cap);
                assert_eq!(probe.largest_i, 3);
            }
            _ => panic!("wrong evidence"),
        }

        // 15 = (2^4-1)/(2-1): the [15,11] Hamming code is projective
        let c15 = CyclicCode::from_defining_set(15, &gf(2, 1), &[1]).unwrap();
        let out = classify_code(&c15).unwrap();
        assert_eq!(out.name(), "PGammaL(4,2)");
        assert_eq!(out.order, OrderBound::Exact(BigUint::from(20160u32)));

        // composite non prime power with no admissible decomposition refused
        let c33 = CyclicCode::from_defining_set(33, &gf(2, 1), &[1]).unwrap();
        assert!(matches!(classify_code(&c33), Err(Error::UnsupportedLength(33))));
    }

    #[test]
    fn sylow_probes() {
        // cycle graph on 25 points: witness fails, so s = m exactly
        let c25 = CirculantGraph::cycle(25).unwrap();
        let len = PrimePowerLength::new(5, 2).unwrap();
        let probe = sylow_probe(&c25, &len).unwrap();
        assert!(!probe.step_witness_in_aut);
        assert_eq!(probe.s, SylowBound::Exact(2));

        // BCH(25, GF(3), 1, 3): f_2 and f_3 pass, I = 3 = p - 2 at cap
        let code = bch(25, 3, 1, 1, 3);
        let probe = sylow_probe(&code, &len).unwrap();
        assert!(probe.step_witness_in_aut);
        assert_eq!(probe.largest_i, 3);
        assert!(probe.at_cap);
        assert_eq!(probe.s, SylowBound::AtLeast(5));

        // BCH(9, GF(5), 1, 2): p = 3 so only f_1; witness passes
        let code9 = bch(9, 5, 1, 1, 2);
        let len9 = PrimePowerLength::new(3, 2).unwrap();
        let probe = sylow_probe(&code9, &len9).unwrap();
        assert!(probe.step_witness_in_aut);
        assert_eq!(probe.largest_i, 1);
        assert!(probe.at_cap);

        // cycle graph C_9: witness fails, s = m
        let c9 = CirculantGraph::cycle(9).unwrap();
        let probe = sylow_probe(&c9, &len9).unwrap();
        assert_eq!(probe.s, SylowBound::Exact(2));
    }

    #[test]
    fn classify_graphs() {
        let complete = CirculantGraph::new(7, &(1..7).collect::<Vec<_>>(), false).unwrap();
        assert_eq!(classify_graph(&complete).unwrap().tag, GroupTag::Symmetric);

        let c7 = CirculantGraph::cycle(7).unwrap();
        let out = classify_graph(&c7).unwrap();
        assert_eq!(out.tag, GroupTag::AffineSubgroup);
        assert_eq!(out.order, OrderBound::Exact(BigUint::from(14u32))); // dihedral

        let c9 = CirculantGraph::cycle(9).unwrap();
        let out = classify_graph(&c9).unwrap();
        assert_eq!(out.tag, GroupTag::Imprimitive);
        match out.evidence {
            Evidence::Imprimitive { blocks, block_size, .. } => {
                assert_eq!((blocks, block_size), (3, 3));
            }
            _ => panic!("wrong evidence"),
        }
    }

    #[test]
    fn classification_json_shape() {
        let out = classify_code(&bch(17, 2, 1, 1, 2)).unwrap();
        let json = serde_json::to_value(&out).unwrap();
        assert_eq!(json["tag"], "AffineSubgroup");
        assert_eq!(json["order"]["value"], "136");
        assert_eq!(json["evidence"]["multipliers"]["semidirect"][0], 8);
    }
}
