//! Circulant graphs and digraphs: connection sets, permutation action and
//! automorphism tests.

use serde::{Deserialize, Serialize};

use crate::arithmetic::{gcd, mul_mod, LENGTH_CAP};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// JSON descriptor: `{"n":..,"connection":[..],"directed":bool}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDescriptor {
    pub n: u64,
    pub connection: Vec<u64>,
    #[serde(default)]
    pub directed: bool,
}

/// Graph on Z_n with i -> j iff (j - i) mod n is in the connection set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantGraph {
    n: u64,
    connection: Vec<u64>,
    directed: bool,
}

/// Plain edge list, the canonical image of a circulant graph under an
/// arbitrary relabelling. Undirected edges are stored as (min, max).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeGraph {
    pub n: u64,
    pub directed: bool,
    pub edges: Vec<(u32, u32)>,
}

impl CirculantGraph {
    pub fn new(n: u64, connection: &[u64], directed: bool) -> Result<Self> {
        if !(2..=LENGTH_CAP).contains(&n) {
            return Err(Error::LengthCap { n, cap: LENGTH_CAP });
        }
        let mut conn: Vec<u64> = connection.iter().map(|&s| s % n).collect();
        conn.sort_unstable();
        conn.dedup();
        if conn.first() == Some(&0) {
            return Err(Error::InvalidArgument("0 is not allowed in the connection set".into()));
        }
        if !directed {
            for &s in &conn {
                if conn.binary_search(&((n - s) % n)).is_err() {
                    return Err(Error::InvalidArgument(format!(
                        "undirected connection set must be closed under negation; missing {}",
                        (n - s) % n
                    )));
                }
            }
        }
        Ok(Self { n, connection: conn, directed })
    }

    /// The cycle graph C_n: connection set {1, n-1}.
    pub fn cycle(n: u64) -> Result<Self> {
        Self::new(n, &[1, n - 1], false)
    }

    pub fn from_descriptor(d: &GraphDescriptor) -> Result<Self> {
        Self::new(d.n, &d.connection, d.directed)
    }

    pub fn descriptor(&self) -> GraphDescriptor {
        GraphDescriptor { n: self.n, connection: self.connection.clone(), directed: self.directed }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn connection(&self) -> &[u64] {
        &self.connection
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    pub fn is_complete(&self) -> bool {
        self.connection.len() as u64 == self.n - 1
    }

    pub fn is_empty_graph(&self) -> bool {
        self.connection.is_empty()
    }

    pub fn edge_graph(&self) -> EdgeGraph {
        let mut edges = vec![];
        for i in 0..self.n {
            for &s in &self.connection {
                let j = (i + s) % self.n;
                // undirected: the closure of the connection set under
                // negation guarantees the i < j visit covers every edge
                if self.directed || i < j {
                    edges.push((i as u32, j as u32));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        EdgeGraph { n: self.n, directed: self.directed, edges }
    }

    /// Relabels the vertices; the result is generally not circulant.
    pub fn apply_perm(&self, sigma: &Permutation) -> Result<EdgeGraph> {
        self.edge_graph().apply_perm(sigma)
    }

    pub fn is_automorphism(&self, sigma: &Permutation) -> Result<bool> {
        Ok(self.apply_perm(sigma)? == self.edge_graph())
    }

    /// The image under the multiplier M_a is circulant again, with
    /// connection set a*S.
    pub fn multiplier_image(&self, a: u64) -> Result<CirculantGraph> {
        if gcd(a % self.n, self.n) != 1 {
            return Err(Error::NotCoprime { q: a % self.n, n: self.n });
        }
        let conn: Vec<u64> =
            self.connection.iter().map(|&s| mul_mod(a, s, self.n)).collect();
        Self::new(self.n, &conn, self.directed)
    }

    pub fn to_dot(&self) -> String {
        let eg = self.edge_graph();
        let (kind, arrow) = if self.directed { ("digraph", "->") } else { ("graph", "--") };
        let mut out = format!("{kind} circulant {{\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v};\n"));
        }
        for (a, b) in eg.edges {
            out.push_str(&format!("  {a} {arrow} {b};\n"));
        }
        out.push('}');
        out
    }
}

impl EdgeGraph {
    pub fn apply_perm(&self, sigma: &Permutation) -> Result<EdgeGraph> {
        if sigma.degree() != self.n {
            return Err(Error::DegreeMismatch(sigma.degree(), self.n));
        }
        let mut edges: Vec<(u32, u32)> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (sigma.apply(a as u64) as u32, sigma.apply(b as u64) as u32);
                if self.directed || x < y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Ok(EdgeGraph { n: self.n, directed: self.directed, edges })
    }

    /// (out-degree, in-degree) per vertex, sorted; a permutation invariant.
    pub fn degree_multiset(&self) -> Vec<(u32, u32)> {
        let mut out_deg = vec![0u32; self.n as usize];
        let mut in_deg = vec![0u32; self.n as usize];
        for &(a, b) in &self.edges {
            out_deg[a as usize] += 1;
            in_deg[b as usize] += 1;
            if !self.directed {
                out_deg[b as usize] += 1;
                in_deg[a as usize] += 1;
            }
        }
        let mut pairs: Vec<(u32, u32)> =
            out_deg.into_iter().zip(in_deg).collect();
        pairs.sort_unstable();
        pairs
    }
}
