//! Permutations of Z_n as first-class values: the complete cycle T,
//! multipliers, affine maps, composition and order computation.
//!
//! Coordinates are the residues {0, ..., n-1}; the complete cycle acts as
//! i -> i+1 mod n.

use std::fmt;

use crate::arithmetic::{gcd, inv_mod, mul_mod, LENGTH_CAP};
use crate::error::{Error, Result};

/// A permutation of {0, ..., n-1}, stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: u64) -> Result<Self> {
        check_degree(n)?;
        Ok(Self { image: (0..n as u32).collect() })
    }

    /// Validates that `image` is a bijection.
    pub fn from_image(image: Vec<u32>) -> Result<Self> {
        check_degree(image.len() as u64)?;
        let mut seen = vec![false; image.len()];
        for &v in &image {
            if v as usize >= image.len() || seen[v as usize] {
                return Err(Error::NotBijective);
            }
            seen[v as usize] = true;
        }
        Ok(Self { image })
    }

    pub fn degree(&self) -> u64 {
        self.image.len() as u64
    }

    pub fn apply(&self, i: u64) -> u64 {
        self.image[i as usize] as u64
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// compose(sigma, rho)(i) = sigma(rho(i)).
    pub fn compose(&self, rho: &Permutation) -> Result<Permutation> {
        if self.degree() != rho.degree() {
            return Err(Error::DegreeMismatch(self.degree(), rho.degree()));
        }
        Ok(Permutation {
            image: rho.image.iter().map(|&i| self.image[i as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation { image: inv }
    }

    pub fn pow(&self, e: u64) -> Permutation {
        let mut acc = Permutation { image: (0..self.image.len() as u32).collect() };
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base).expect("equal degrees");
            }
            base = base.compose(&base).expect("equal degrees");
            e >>= 1;
        }
        acc
    }

    /// Cycle decomposition (cycles of length >= 1, each starting at its
    /// minimal point, sorted by that point).
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut out = vec![];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cyc = vec![];
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x as u32);
                x = self.image[x] as usize;
            }
            out.push(cyc);
        }
        out
    }

    /// Least k >= 1 with sigma^k = identity; errors if the lcm of the cycle
    /// lengths overflows u128.
    pub fn order(&self) -> Result<u128> {
        let mut acc: u128 = 1;
        for cyc in self.orbits() {
            let l = cyc.len() as u128;
            let g = gcd128(acc, l);
            acc = (acc / g)
                .checked_mul(l)
                .ok_or_else(|| Error::InvalidArgument("permutation order overflows u128".into()))?;
        }
        Ok(acc)
    }

    pub fn cycle_notation(&self) -> String {
        let cycles: Vec<String> = self
            .orbits()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", inner.join(" "))
            })
            .collect();
        if cycles.is_empty() {
            "()".into()
        } else {
            cycles.join("")
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.image.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn check_degree(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("degree must be >= 1".into()));
    }
    if n > LENGTH_CAP {
        return Err(Error::LengthCap { n, cap: LENGTH_CAP });
    }
    Ok(())
}

fn gcd128(a: u128, b: u128) -> u128 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// The complete cycle T: i -> i+1 mod n.
pub fn complete_cycle(n: u64) -> Result<Permutation> {
    check_degree(n)?;
    Ok(Permutation {
        image: (0..n as u32).map(|i| ((i as u64 + 1) % n) as u32).collect(),
    })
}

/// x -> (a*x + b) mod n for a unit a.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineMap {
    n: u64,
    a: u64,
    b: u64,
}

impl AffineMap {
    pub fn new(n: u64, a: u64, b: u64) -> Result<Self> {
        check_degree(n)?;
        let a = a % n;
        if gcd(a, n) != 1 {
            return Err(Error::NotCoprime { q: a, n });
        }
        Ok(Self { n, a, b: b % n })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn apply(&self, x: u64) -> u64 {
        (mul_mod(self.a, x % self.n, self.n) + self.b) % self.n
    }

    /// (a1, b1) after (a2, b2) is (a1*a2, a1*b2 + b1).
    pub fn compose(&self, other: &AffineMap) -> Result<AffineMap> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        Ok(AffineMap {
            n: self.n,
            a: mul_mod(self.a, other.a, self.n),
            b: (mul_mod(self.a, other.b, self.n) + self.b) % self.n,
        })
    }

    pub fn inverse(&self) -> AffineMap {
        let a_inv = inv_mod(self.a, self.n).expect("a is a unit");
        AffineMap {
            n: self.n,
            a: a_inv,
            b: mul_mod(a_inv, (self.n - self.b) % self.n, self.n),
        }
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation {
            image: (0..self.n).map(|x| self.apply(x) as u32).collect(),
        }
    }

    pub fn is_multiplier(&self) -> bool {
        self.b == 0
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == 0 {
            write!(f, "x -> {}*x mod {}", self.a, self.n)
        } else {
            write!(f, "x -> {}*x + {} mod {}", self.a, self.b, self.n)
        }
    }
}

/// The affine permutation x -> a*x + b mod n.
pub fn affine(n: u64, a: u64, b: u64) -> Result<Permutation> {
    Ok(AffineMap::new(n, a, b)?.to_permutation())
}

/// The multiplier M_a: x -> a*x mod n.
pub fn multiplier(n: u64, a: u64) -> Result<Permutation> {
    affine(n, a, 0)
}

/// If sigma * t * sigma^-1 = t^j for some j, returns j (so sigma normalizes
/// the cyclic group generated by t); otherwise None.
pub fn conjugate_into_cycle_power(sigma: &Permutation, t: &Permutation) -> Result<Option<u64>> {
    if sigma.degree() != t.degree() {
        return Err(Error::DegreeMismatch(sigma.degree(), t.degree()));
    }
    let n = t.degree();
    let conj = sigma.compose(t)?.compose(&sigma.inverse())?;
    // Fast path for the complete cycle: t^j sends i to i + j.
    let is_complete = (0..n).all(|i| t.apply(i) == (i + 1) % n);
    if is_complete {
        let j = conj.apply(0);
        let matches = (0..n).all(|i| conj.apply(i) == (i + j) % n);
        return Ok(matches.then_some(j));
    }
    let mut power = Permutation::identity(n)?;
    for j in 0..=n {
        if power == conj {
            return Ok(Some(j));
        }
        power = t.compose(&power)?;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_cycle_basics() {
        let t = complete_cycle(3).unwrap();
        assert_eq!(t.image(), &[1, 2, 0]);
        assert!(t.pow(3).is_identity());
        assert_eq!(complete_cycle(8).unwrap().order().unwrap(), 8);
    }

    #[test]
    fn cycle_power_block_structure() {
        // T^3 on Z_9 has 3 orbits of size 3
        let t = complete_cycle(9).unwrap();
        let t3 = t.pow(3);
        let orbits = t3.orbits();
        assert_eq!(orbits.len(), 3);
        assert!(orbits.iter().all(|o| o.len() == 3));
        assert_eq!(orbits[0], vec![0, 3, 6]);
    }

    #[test]
    fn affine_examples() {
        assert!(multiplier(7, 1).unwrap().is_identity());
        assert_eq!(affine(5, 2, 1).unwrap().image(), &[1, 3, 0, 2, 4]);
        assert!(affine(9, 3, 1).is_err());
        // |AG(p)| = p(p-1): count distinct affine maps of Z_5
        let mut all = std::collections::HashSet::new();
        for a in 1..5 {
            for b in 0..5 {
                all.insert(affine(5, a, b).unwrap());
            }
        }
        assert_eq!(all.len(), 20);
    }

    #[test]
    fn affine_closure_random() {
        let mut state = 12345u64;
        let mut next = |hi: u64| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            (state >> 24) % hi
        };
        for _ in 0..200 {
            let n = 2 + next(40);
            let pick_unit = |state: &mut dyn FnMut(u64) -> u64| loop {
                let a = 1 + state(n - 1);
                if gcd(a, n) == 1 {
                    return a;
                }
            };
            let a1 = pick_unit(&mut next);
            let a2 = pick_unit(&mut next);
            let f = AffineMap::new(n, a1, next(n)).unwrap();
            let g = AffineMap::new(n, a2, next(n)).unwrap();
            let h = f.compose(&g).unwrap();
            assert_eq!(
                h.to_permutation(),
                f.to_permutation().compose(&g.to_permutation()).unwrap()
            );
            assert!(f.compose(&f.inverse()).unwrap().to_permutation().is_identity());
        }
    }

    #[test]
    fn inverse_of_affine() {
        let f = AffineMap::new(9, 2, 5).unwrap();
        let inv = f.inverse();
        assert_eq!(inv.a(), 5); // 2 * 5 = 10 = 1 mod 9
        assert!(f.compose(&inv).unwrap().to_permutation().is_identity());
    }

    #[test]
    fn compose_identity_and_order() {
        let sigma = affine(11, 3, 7).unwrap();
        let id = Permutation::identity(11).unwrap();
        assert_eq!(sigma.compose(&id).unwrap(), sigma);
        // order(multiplier(n, a)) = ord_n(a)
        for (n, a) in [(7u64, 3u64), (9, 2), (17, 2), (25, 7)] {
            let expect = crate::arithmetic::multiplicative_order(a, n).unwrap() as u128;
            assert_eq!(multiplier(n, a).unwrap().order().unwrap(), expect);
        }
    }

    #[test]
    fn conjugation_into_cycle() {
        let t7 = complete_cycle(7).unwrap();
        assert_eq!(conjugate_into_cycle_power(&t7, &t7).unwrap(), Some(1));
        let m3 = multiplier(7, 3).unwrap();
        assert_eq!(conjugate_into_cycle_power(&m3, &t7).unwrap(), Some(3));
        let mut img: Vec<u32> = (0..5).collect();
        img.swap(0, 1);
        let swap = Permutation::from_image(img).unwrap();
        let t5 = complete_cycle(5).unwrap();
        assert_eq!(conjugate_into_cycle_power(&swap, &t5).unwrap(), None);
    }

    #[test]
    fn normalizer_of_cycle_in_s5_is_affine() {
        // brute force over S_5: exactly the 20 affine maps normalize <T>
        let t5 = complete_cycle(5).unwrap();
        let mut count = 0;
        let mut affine_count = 0;
        let mut image: Vec<u32> = (0..5).collect();
        permute_all(&mut image, 0, &mut |img| {
            let sigma = Permutation::from_image(img.to_vec()).unwrap();
            if conjugate_into_cycle_power(&sigma, &t5).unwrap().is_some() {
                count += 1;
                let is_affine = (1..5).any(|a| {
                    (0..5).any(|b| affine(5, a, b).map(|f| f == sigma).unwrap_or(false))
                });
                if is_affine {
                    affine_count += 1;
                }
            }
        });
        assert_eq!(count, 20);
        assert_eq!(affine_count, 20);
    }

    fn permute_all(items: &mut Vec<u32>, k: usize, visit: &mut impl FnMut(&[u32])) {
        if k == items.len() {
            visit(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute_all(items, k + 1, visit);
            items.swap(k, i);
        }
    }
}
