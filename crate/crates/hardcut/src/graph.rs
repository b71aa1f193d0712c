//! Regular multigraphs, seeded generation, and certified edge expansion.
//!
//! The expansion constant of a graph is the minimum of `|boundary(S)| / |S|`
//! over nonempty vertex subsets `S` with `|S| <= m/2`. Small graphs are
//! certified exactly by subset enumeration; larger ones get a one-sided
//! spectral certificate `(d - mu2) / 2` from the second adjacency eigenvalue.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::spectral;

/// Hard cap on exhaustive subset enumeration.
pub const ENUMERATION_LIMIT: usize = 24;

/// Attempt budget for rejection sampling in [`generate_regular`].
const GENERATION_ATTEMPTS: usize = 10_000;

/// An undirected multigraph. Parallel edges are allowed, self-loops are not.
///
/// Edges are kept normalized (`u < v`) and sorted, so two graphs with the
/// same edge multiset compare equal and serialize identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph("vertex count must be positive".into()));
        }
        for e in edges.iter_mut() {
            if e.0 == e.1 {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {}", e.0)));
            }
            if e.0 >= vertex_count || e.1 >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({}, {}) out of range for {} vertices",
                    e.0, e.1, vertex_count
                )));
            }
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        Ok(Self { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Uniform degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let deg = self.degrees();
        let d = deg[0];
        deg.iter().all(|&x| x == d).then_some(d)
    }

    /// Neighbor lists with multiplicity (a double edge lists the neighbor twice).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut visited = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    visited += 1;
                    stack.push(w);
                }
            }
        }
        visited == self.vertex_count
    }

    /// Text form: header `m d`, then one sorted `u v` line per edge.
    /// Only defined for regular graphs, which is all this crate produces.
    pub fn to_text(&self) -> Result<String> {
        let d = self.regular_degree().ok_or(Error::NotRegular)?;
        let mut out = format!("{} {}\n", self.vertex_count, d);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        Ok(out)
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty graph file".into()))?;
        let mut it = header.split_whitespace();
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad header: expected `m d`".into()))?;
        let d: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad header: expected `m d`".into()))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line: {line:?}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line: {line:?}")))?;
            edges.push((u, v));
        }
        let g = Self::new(m, edges)?;
        if g.regular_degree() != Some(d) {
            return Err(Error::Parse(format!("graph is not {d}-regular as the header claims")));
        }
        Ok(g)
    }
}

/// A vertex subset as a membership vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCut {
    membership: Vec<bool>,
}

impl VertexCut {
    pub fn new(membership: Vec<bool>) -> Self {
        Self { membership }
    }

    pub fn from_indices(len: usize, members: &[usize]) -> Self {
        let mut m = vec![false; len];
        for &i in members {
            m[i] = true;
        }
        Self { membership: m }
    }

    pub fn from_bitmask(len: usize, mask: u32) -> Self {
        Self {
            membership: (0..len).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.membership.len()
    }

    pub fn is_empty(&self) -> bool {
        self.membership.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.membership[v]
    }

    pub fn membership(&self) -> &[bool] {
        &self.membership
    }

    /// Number of member vertices.
    pub fn size(&self) -> usize {
        self.membership.iter().filter(|&&b| b).count()
    }

    pub fn complement(&self) -> Self {
        Self {
            membership: self.membership.iter().map(|b| !b).collect(),
        }
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.membership[i]).collect()
    }

    /// `0`/`1` string indexed by vertex, e.g. `0011` for {2, 3} on 4 vertices.
    pub fn to_bit_string(&self) -> String {
        self.membership.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

impl fmt::Display for VertexCut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

/// Certified lower bound on edge expansion.
#[derive(Debug, Clone, PartialEq)]
pub enum ExpansionCertificate {
    /// The exact minimum, with a subset attaining it.
    Exact { constant: f64, witness: VertexCut },
    /// One-sided Cheeger bound `(d - mu2) / 2` for a d-regular graph.
    Spectral { constant: f64, mu2: f64 },
}

impl ExpansionCertificate {
    pub fn constant(&self) -> f64 {
        match self {
            ExpansionCertificate::Exact { constant, .. } => *constant,
            ExpansionCertificate::Spectral { constant, .. } => *constant,
        }
    }

    pub fn method_name(&self) -> &'static str {
        match self {
            ExpansionCertificate::Exact { .. } => "exact",
            ExpansionCertificate::Spectral { .. } => "spectral",
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            ExpansionCertificate::Exact { constant, witness } => format!(
                "method = exact\nc = {constant}\nwitness_size = {}\nwitness = {witness}\n",
                witness.size()
            ),
            ExpansionCertificate::Spectral { constant, mu2 } => {
                format!("method = spectral\nc = {constant}\nmu2 = {mu2}\n")
            }
        }
    }
}

/// Generate a simple connected d-regular graph on `m` vertices by the
/// configuration model: shuffle half-edges into a perfect matching and
/// reject matchings with self-loops, parallel edges, or a disconnected
/// result. Deterministic in `(m, d, seed)`.
pub fn generate_regular(m: usize, d: usize, seed: u64) -> Result<Multigraph> {
    if m * d % 2 != 0 {
        return Err(Error::InvalidParity { m, d });
    }
    if d == 0 || m < d + 1 {
        return Err(Error::TooFewVertices { m, d });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut half_edges: Vec<usize> = (0..m).flat_map(|v| std::iter::repeat_n(v, d)).collect();

    for _ in 0..GENERATION_ATTEMPTS {
        half_edges.shuffle(&mut rng);
        let mut seen = HashSet::with_capacity(m * d / 2);
        let mut simple = true;
        for pair in half_edges.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                simple = false;
                break;
            }
        }
        if !simple {
            continue;
        }
        let edges = half_edges.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        let g = Multigraph::new(m, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::GenerationExhausted { attempts: GENERATION_ATTEMPTS })
}

/// Number of edges with exactly one endpoint in `cut`, with multiplicity.
pub fn edge_boundary(g: &Multigraph, cut: &VertexCut) -> usize {
    assert_eq!(cut.len(), g.vertex_count(), "cut length must match vertex count");
    g.edges().iter().filter(|&&(u, v)| cut.contains(u) != cut.contains(v)).count()
}

/// `true` if `a` precedes `b` as a 0/1 membership vector read from vertex 0.
fn lex_before(a: u32, b: u32) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    a >> diff.trailing_zeros() & 1 == 0
}

/// Exact edge expansion by enumerating all nonempty subsets of size at most
/// `m/2`. Ties are broken by smaller subset size, then by lexicographically
/// smaller membership vector.
pub fn exact_expansion(g: &Multigraph) -> Result<ExpansionCertificate> {
    let m = g.vertex_count();
    if m > ENUMERATION_LIMIT {
        return Err(Error::TooLarge { vertex_count: m, limit: ENUMERATION_LIMIT });
    }
    if m < 2 {
        return Err(Error::InvalidGraph("expansion needs at least 2 vertices".into()));
    }
    let edges = g.edges();
    // (boundary, size, mask) of the best subset so far; ratios are compared
    // exactly by cross-multiplication.
    let mut best: Option<(u64, u32, u32)> = None;
    let half = (m / 2) as u32;
    for mask in 1u32..(1u32 << m) {
        let k = mask.count_ones();
        if k > half {
            continue;
        }
        let b = edges
            .iter()
            .filter(|&&(u, v)| (mask >> u ^ mask >> v) & 1 == 1)
            .count() as u64;
        let better = match best {
            None => true,
            Some((bb, bk, bm)) => {
                // b/k < bb/bk, then smaller k, then lexicographic membership.
                match (b * u64::from(bk)).cmp(&(bb * u64::from(k))) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Greater => false,
                    std::cmp::Ordering::Equal => k < bk || (k == bk && lex_before(mask, bm)),
                }
            }
        };
        if better {
            best = Some((b, k, mask));
        }
    }
    let (b, k, mask) = best.expect("m >= 2 guarantees at least one admissible subset");
    Ok(ExpansionCertificate::Exact {
        constant: b as f64 / f64::from(k),
        witness: VertexCut::from_bitmask(m, mask),
    })
}

/// Spectral Cheeger certificate `(d - mu2) / 2` for a connected regular
/// graph. Always at most the true edge expansion.
pub fn spectral_expansion_bound(g: &Multigraph) -> Result<ExpansionCertificate> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let pair = spectral::second_adjacency_eigenpair(g, d)?;
    Ok(ExpansionCertificate::Spectral {
        constant: (d as f64 - pair.value) / 2.0,
        mu2: pair.value,
    })
}
