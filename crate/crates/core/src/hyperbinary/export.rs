//! Graphviz and JSON views of `𝓓(n)`.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{enumerate, lattice::principal_prefix, HyperExpansion};

/// One row of the JSON export.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionRecord {
    pub digits: String,
    pub ell: u32,
    pub p1: u32,
    pub p2: u32,
    pub t: u32,
    pub z: u32,
    /// `(s₁, …, s_r)`, the prefix sums over the principal-prefix length.
    pub s_vector: Vec<u64>,
}

impl ExpansionRecord {
    pub fn new(d: &HyperExpansion, r: usize) -> Self {
        let st = d.stats();
        let mut s_vector = d.s_vector();
        s_vector.truncate(r);
        Self {
            digits: d.to_string(),
            ell: st.ell,
            p1: st.p1,
            p2: st.p2,
            t: st.t,
            z: st.z,
            s_vector,
        }
    }
}

/// Records for every element of `𝓓(n)`, in enumeration order.
pub fn records(n: u64) -> Vec<ExpansionRecord> {
    let r = principal_prefix(n).len();
    enumerate(n).iter().map(|d| ExpansionRecord::new(d, r)).collect()
}

/// Hasse diagram of `𝓓(n)` in DOT. Nodes are digit strings; each cover
/// `c ⋖ d` is an edge `c -> d`.
pub fn hasse_dot(n: u64) -> String {
    let all = enumerate(n);
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"D({n})\" {{");
    let _ = writeln!(out, "  rankdir=BT;");
    for d in &all {
        let _ = writeln!(out, "  \"{d}\";");
    }
    let mut edges: Vec<(String, String)> = all
        .iter()
        .flat_map(|d| d.covers().into_iter().map(move |c| (c.to_string(), d.to_string())))
        .collect();
    edges.sort();
    for (lo, hi) in edges {
        let _ = writeln!(out, "  \"{lo}\" -> \"{hi}\";");
    }
    out.push_str("}\n");
    out
}
