//! Equivalence of cyclic objects with an explicit witness permutation:
//! multiplier scan for prime length, and the Q^(I+1) search driven by the
//! Sylow probe for length p^m.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arithmetic::{is_prime, PrimePowerLength};
use crate::brand::{PolyPerm, QGroup};
use crate::error::{Error, Result};
use crate::object::CyclicObject;
use crate::perm::{AffineMap, Permutation};

/// Knobs for the witness search.
#[derive(Debug, Clone)]
pub struct EquivConfig {
    /// Cap on |Q^(I+1)| candidates enumerated in step 2.
    pub enumeration_cap: u128,
    /// Worker threads for the step-2 scan (1 = sequential).
    pub jobs: usize,
}

impl Default for EquivConfig {
    fn default() -> Self {
        Self { enumeration_cap: 10_000_000, jobs: 1 }
    }
}

/// The witness permutation, in its most structured available form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessPerm {
    Multiplier { n: u64, a: u64 },
    Affine { n: u64, a: u64, b: u64 },
    Poly(PolyPerm),
}

impl WitnessPerm {
    pub fn to_permutation(&self) -> Result<Permutation> {
        match self {
            WitnessPerm::Multiplier { n, a } => Ok(AffineMap::new(*n, *a, 0)?.to_permutation()),
            WitnessPerm::Affine { n, a, b } => Ok(AffineMap::new(*n, *a, *b)?.to_permutation()),
            WitnessPerm::Poly(f) => Ok(f.to_permutation()),
        }
    }

    fn from_polyperm(f: &PolyPerm) -> WitnessPerm {
        let n = f.len().n();
        match f.coeffs() {
            [b, a] if *b == 0 => WitnessPerm::Multiplier { n, a: *a },
            [b, a] => WitnessPerm::Affine { n, a: *a, b: *b },
            _ => WitnessPerm::Poly(f.clone()),
        }
    }
}

impl fmt::Display for WitnessPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessPerm::Multiplier { n, a } => write!(f, "multiplier a={a} mod {n}"),
            WitnessPerm::Affine { n, a, b } => write!(f, "affine x -> {a}*x + {b} mod {n}"),
            WitnessPerm::Poly(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for WitnessPerm {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            WitnessPerm::Multiplier { n, a } => {
                let mut st = ser.serialize_struct("WitnessPerm", 3)?;
                st.serialize_field("kind", "multiplier")?;
                st.serialize_field("n", n)?;
                st.serialize_field("a", a)?;
                st.end()
            }
            WitnessPerm::Affine { n, a, b } => {
                let mut st = ser.serialize_struct("WitnessPerm", 4)?;
                st.serialize_field("kind", "affine")?;
                st.serialize_field("n", n)?;
                st.serialize_field("a", a)?;
                st.serialize_field("b", b)?;
                st.end()
            }
            WitnessPerm::Poly(p) => {
                let mut st = ser.serialize_struct("WitnessPerm", 3)?;
                st.serialize_field("kind", "poly")?;
                st.serialize_field("n", &p.len().n())?;
                st.serialize_field("coeffs", p.coeffs())?;
                st.end()
            }
        }
    }
}

/// Verdict of an equivalence decision; a returned witness has been
/// re-verified by full application before this value is constructed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceWitness {
    pub equivalent: bool,
    pub witness: Option<WitnessPerm>,
    /// Description of the search space (e.g. "Q^{2}, |.|=162").
    pub space: String,
    /// Number of candidates applied before the verdict.
    pub checked: u64,
}

impl EquivalenceWitness {
    fn not_equivalent(space: impl Into<String>, checked: u64) -> Self {
        Self { equivalent: false, witness: None, space: space.into(), checked }
    }
}

impl fmt::Display for EquivalenceWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.equivalent {
            write!(
                f,
                "equivalent via {} (space {}, {} candidates checked)",
                self.witness.as_ref().expect("witness present"),
                self.space,
                self.checked
            )
        } else {
            write!(f, "not equivalent (space {}, {} candidates checked)", self.space, self.checked)
        }
    }
}

/// Invariant comparison that can only rule equivalence out. Returns a
/// NotEquivalent verdict on a mismatch, None otherwise.
pub fn equivalence_precheck<T: CyclicObject>(a: &T, b: &T) -> Result<Option<EquivalenceWitness>> {
    if a.points() != b.points() {
        return Err(Error::DegreeMismatch(a.points(), b.points()));
    }
    if a.fingerprint()? != b.fingerprint()? {
        return Ok(Some(EquivalenceWitness::not_equivalent("precheck: invariants", 0)));
    }
    Ok(None)
}

fn verify_witness<T: CyclicObject>(
    obj: &T,
    target: &T::Canon,
    witness: &WitnessPerm,
) -> Result<()> {
    let sigma = witness.to_permutation()?;
    if obj.image(&sigma)? != *target {
        return Err(Error::Internal("witness failed re-verification".into()));
    }
    Ok(())
}

/// Prime length: scans the p - 1 multipliers. Complete for cyclic objects
/// of prime length (equivalence reduces to a multiplier there).
pub fn equivalent_prime<T: CyclicObject>(a: &T, b: &T) -> Result<EquivalenceWitness> {
    let p = a.points();
    if !is_prime(p) {
        return Err(Error::UnsupportedLength(p));
    }
    if let Some(v) = equivalence_precheck(a, b)? {
        return Ok(v);
    }
    let target = b.canon()?;
    let space = format!("multipliers mod {p}");
    let mut checked = 0u64;
    for u in 1..p {
        let witness = WitnessPerm::Multiplier { n: p, a: u };
        checked += 1;
        if a.image(&witness.to_permutation()?)? == target {
            verify_witness(a, &target, &witness)?;
            return Ok(EquivalenceWitness { equivalent: true, witness: Some(witness), space, checked });
        }
    }
    Ok(EquivalenceWitness::not_equivalent(space, checked))
}

/// Step 1 and step 2 for length p^m, m >= 2: probe the Sylow subgroup of
/// Aut(c) for I, then scan Q^(I+1) in lexicographic coefficient order for
/// the first f with f(c) = target.
///
/// When the probe is at cap (I = p - 2) the scan falls back to Q^(p-1) and
/// the space description carries a warning: the containment theorem needs
/// s <= p + m - 1, so completeness is not guaranteed there.
pub fn equivalent_prime_power<T: CyclicObject>(
    c: &T,
    target: &T::Canon,
    cfg: &EquivConfig,
) -> Result<EquivalenceWitness> {
    let len = PrimePowerLength::from_n(c.points())?;
    if len.p() == 2 {
        return Err(Error::EvenPrime);
    }
    if len.m() < 2 {
        return Err(Error::UnsupportedLength(len.n()));
    }
    if T::canon_fingerprint(&c.canon()?) != T::canon_fingerprint(target) {
        return Ok(EquivalenceWitness::not_equivalent("precheck: invariants", 0));
    }
    let probe = crate::autgroup::sylow_probe(c, &len)?;
    let bound = if probe.at_cap {
        (len.p() - 1) as u32
    } else {
        probe.largest_i + 1
    };
    let group = QGroup::full(&len, bound)?;
    let order = group.order();
    if order > cfg.enumeration_cap {
        return Err(Error::EnumerationCap { required: order, cap: cfg.enumeration_cap });
    }
    let mut space = format!("Q^{{{bound}}}, |.|={order}");
    if probe.at_cap {
        space.push_str(" (probe at cap I = p-2; containment hypothesis s <= p+m-1 unverified)");
    }
    let jobs = cfg.jobs.clamp(1, 64);
    let hit = if jobs == 1 {
        let mut checked = 0u64;
        let mut found = None;
        for (idx, f) in group.iter().enumerate() {
            checked += 1;
            if c.image(&f.to_permutation())? == *target {
                found = Some((idx as u128, f));
                break;
            }
        }
        found.map(|x| (x, checked)).ok_or(checked)
    } else {
        scan_parallel(c, target, &group, order, jobs)?
    };
    match hit {
        Ok(((_, f), checked)) => {
            let witness = WitnessPerm::from_polyperm(&f);
            verify_witness(c, target, &witness)?;
            Ok(EquivalenceWitness { equivalent: true, witness: Some(witness), space, checked })
        }
        Err(checked) => Ok(EquivalenceWitness::not_equivalent(space, checked)),
    }
}

/// Deterministic parallel scan: the index range is split into contiguous
/// chunks; the minimal hit index wins, so the result matches the
/// sequential scan.
#[allow(clippy::type_complexity)]
fn scan_parallel<T: CyclicObject>(
    c: &T,
    target: &T::Canon,
    group: &QGroup,
    order: u128,
    jobs: usize,
) -> Result<std::result::Result<((u128, PolyPerm), u64), u64>> {
    let best = AtomicU64::new(u64::MAX);
    let checked_total = AtomicU64::new(0);
    let chunk = (order / jobs as u128).max(1) + 1;
    let joined: Vec<Result<Option<(u128, PolyPerm)>>> = std::thread::scope(|scope| {
        let mut handles = vec![];
        for w in 0..jobs {
            let lo = (w as u128) * chunk;
            let hi = (lo + chunk).min(order);
            let best = &best;
            let checked_total = &checked_total;
            handles.push(scope.spawn(move || -> Result<Option<(u128, PolyPerm)>> {
                let mut local = None;
                for idx in lo..hi {
                    if idx as u64 >= best.load(Ordering::Relaxed) {
                        break;
                    }
                    let f = group.element_at(idx);
                    checked_total.fetch_add(1, Ordering::Relaxed);
                    if c.image(&f.to_permutation())? == *target {
                        best.fetch_min(idx as u64, Ordering::Relaxed);
                        local = Some((idx, f));
                        break;
                    }
                }
                Ok(local)
            }));
        }
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut winner: Option<(u128, PolyPerm)> = None;
    for r in joined {
        if let Some(hit) = r? {
            if winner.as_ref().is_none_or(|(i, _)| hit.0 < *i) {
                winner = Some(hit);
            }
        }
    }
    let checked = checked_total.load(Ordering::Relaxed);
    Ok(match winner {
        Some(hit) => Ok((hit, checked)),
        None => Err(checked),
    })
}

/// Decides equivalence of two cyclic objects of the same category and
/// length, dispatching on the length: multiplier scan for primes, the
/// Brand search for odd prime powers. Other lengths are unsupported.
pub fn equivalent<T: CyclicObject>(a: &T, b: &T, cfg: &EquivConfig) -> Result<EquivalenceWitness> {
    let n = a.points();
    if n != b.points() {
        return Err(Error::DegreeMismatch(n, b.points()));
    }
    if is_prime(n) {
        return equivalent_prime(a, b);
    }
    let len = PrimePowerLength::from_n(n).map_err(|_| Error::UnsupportedLength(n))?;
    if len.p() == 2 {
        return Err(Error::UnsupportedLength(n));
    }
    if let Some(v) = equivalence_precheck(a, b)? {
        return Ok(v);
    }
    // Sylow data is an isomorphism invariant; compare before searching.
    let pa = crate::autgroup::sylow_probe(a, &len)?;
    let pb = crate::autgroup::sylow_probe(b, &len)?;
    if (pa.largest_i, pa.at_cap, pa.step_witness_in_aut)
        != (pb.largest_i, pb.at_cap, pb.step_witness_in_aut)
    {
        return Ok(EquivalenceWitness::not_equivalent("precheck: sylow probe mismatch", 0));
    }
    equivalent_prime_power(a, &b.canon()?, cfg)
}
