//! The common surface of cyclic combinatorial objects: codes and graphs
//! both expose a canonical image under coordinate permutations, which is
//! all the classification and equivalence machinery needs.

use crate::codes::{CyclicCode, LinearCode};
use crate::error::Result;
use crate::graphs::{CirculantGraph, EdgeGraph};
use crate::perm::Permutation;

/// Cheap permutation invariants used to rule out equivalence early.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fingerprint {
    Code { n: u64, r: u64, alpha: u32, dim: u64 },
    Graph { n: u64, directed: bool, edges: usize, degrees: Vec<(u32, u32)> },
}

pub trait CyclicObject: Sync {
    /// Canonical value of the object under relabelling; equality of canons
    /// is equality of objects.
    type Canon: PartialEq + Clone + Send + Sync;

    fn points(&self) -> u64;

    fn canon(&self) -> Result<Self::Canon>;

    /// Canonical value of the relabelled object.
    fn image(&self, sigma: &Permutation) -> Result<Self::Canon>;

    fn fingerprint(&self) -> Result<Fingerprint>;

    fn canon_fingerprint(c: &Self::Canon) -> Fingerprint;

    fn is_automorphism(&self, sigma: &Permutation) -> Result<bool> {
        Ok(self.image(sigma)? == self.canon()?)
    }

    fn category_name() -> &'static str;
}

impl CyclicObject for CyclicCode {
    type Canon = LinearCode;

    fn points(&self) -> u64 {
        self.n()
    }

    fn canon(&self) -> Result<LinearCode> {
        Ok(self.canonical_form()?.clone())
    }

    fn image(&self, sigma: &Permutation) -> Result<LinearCode> {
        self.apply_perm(sigma)
    }

    fn fingerprint(&self) -> Result<Fingerprint> {
        Ok(Fingerprint::Code {
            n: self.n(),
            r: self.field_spec().characteristic(),
            alpha: self.field_spec().degree(),
            dim: self.dimension(),
        })
    }

    fn canon_fingerprint(c: &LinearCode) -> Fingerprint {
        Fingerprint::Code {
            n: c.n,
            r: c.field.characteristic(),
            alpha: c.field.degree(),
            dim: c.dimension(),
        }
    }

    fn is_automorphism(&self, sigma: &Permutation) -> Result<bool> {
        CyclicCode::is_automorphism(self, sigma)
    }

    fn category_name() -> &'static str {
        "cyclic code"
    }
}

impl CyclicObject for CirculantGraph {
    type Canon = EdgeGraph;

    fn points(&self) -> u64 {
        self.n()
    }

    fn canon(&self) -> Result<EdgeGraph> {
        Ok(self.edge_graph())
    }

    fn image(&self, sigma: &Permutation) -> Result<EdgeGraph> {
        self.apply_perm(sigma)
    }

    fn fingerprint(&self) -> Result<Fingerprint> {
        Ok(Self::canon_fingerprint(&self.edge_graph()))
    }

    fn canon_fingerprint(c: &EdgeGraph) -> Fingerprint {
        Fingerprint::Graph {
            n: c.n,
            directed: c.directed,
            edges: c.edges.len(),
            degrees: c.degree_multiset(),
        }
    }

    fn category_name() -> &'static str {
        "circulant graph"
    }
}
