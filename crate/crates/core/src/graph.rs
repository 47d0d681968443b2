//! Dense simple graphs, BFS distances and strong-regularity detection.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectra::SymMatrix;

/// Simple undirected graph on vertices `0..n`.
///
/// Adjacency is a dense symmetric bit matrix; row `x` occupies `words`
/// consecutive `u64`s. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("a graph needs at least one vertex"));
        }
        let words = n.div_ceil(64);
        Ok(Graph {
            n,
            words,
            bits: vec![0; n * words],
        })
    }

    /// Builds a graph from a list of vertex pairs. Duplicates (in either
    /// orientation) collapse to a single edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u},{v}) references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            g.set(u, v);
            g.set(v, u);
        }
        Ok(g)
    }

    /// Builds a graph by evaluating `adjacent(x, y)` for every `x < y`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for x in 0..n {
            for y in (x + 1)..n {
                if adjacent(x, y) {
                    g.set(x, y);
                    g.set(y, x);
                }
            }
        }
        Ok(g)
    }

    /// Parses the edge-list text format: a header line `n m`, then `m` lines
    /// `u v` with 0-based vertices. Everything after `#` on a line is ignored,
    /// as are blank lines.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::input("edge list is empty; expected header \"n m\""))?;
        let (n, m) = parse_pair(header, hline)?;

        let mut edges = Vec::with_capacity(m);
        for (lineno, line) in lines {
            edges.push(parse_pair(line, lineno)?);
        }
        if edges.len() != m {
            return Err(Error::input(format!(
                "header announces {m} edges but {} were given",
                edges.len()
            )));
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_edge_list_string(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    #[inline]
    fn set(&mut self, x: usize, y: usize) {
        self.bits[x * self.words + y / 64] |= 1u64 << (y % 64);
    }

    #[inline]
    fn row(&self, x: usize) -> &[u64] {
        &self.bits[x * self.words..(x + 1) * self.words]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        self.bits[x * self.words + y / 64] >> (y % 64) & 1 == 1
    }

    pub fn degree(&self, x: usize) -> usize {
        self.row(x).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&y| self.adjacent(x, y))
    }

    pub fn common_neighbors(&self, x: usize, y: usize) -> usize {
        self.row(x)
            .iter()
            .zip(self.row(y))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|x| self.degree(x)).sum::<usize>() / 2
    }

    /// `x ~ y` in the result iff `x != y` and `x !~ y` here.
    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        let tail = self.n % 64;
        for x in 0..self.n {
            let row = &mut g.bits[x * self.words..(x + 1) * self.words];
            for w in row.iter_mut() {
                *w = !*w;
            }
            if tail != 0 {
                row[self.words - 1] &= (1u64 << tail) - 1;
            }
            row[x / 64] &= !(1u64 << (x % 64));
        }
        g
    }

    /// BFS levels from `source`; `None` for unreachable vertices.
    fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut visited = vec![0u64; self.words];
        visited[source / 64] |= 1 << (source % 64);
        let mut frontier = vec![source];
        let mut level = 0;
        while !frontier.is_empty() {
            level += 1;
            let mut next_bits = vec![0u64; self.words];
            for &v in &frontier {
                for (nb, r) in next_bits.iter_mut().zip(self.row(v)) {
                    *nb |= r;
                }
            }
            let mut next = Vec::new();
            for (i, (nb, vis)) in next_bits.iter().zip(visited.iter_mut()).enumerate() {
                let mut fresh = nb & !*vis;
                *vis |= fresh;
                while fresh != 0 {
                    let b = fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    let y = i * 64 + b;
                    dist[y] = Some(level);
                    next.push(y);
                }
            }
            frontier = next;
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    /// All-pairs shortest path lengths.
    pub fn distance_matrix(&self) -> Result<DistanceMatrix> {
        let n = self.n;
        let mut d = vec![0u32; n * n];
        let mut diameter = 0;
        for x in 0..n {
            for (y, dist) in self.bfs(x).into_iter().enumerate() {
                let dist = dist.ok_or(Error::Disconnected)?;
                diameter = diameter.max(dist);
                d[x * n + y] = dist;
            }
        }
        Ok(DistanceMatrix { n, d, diameter })
    }

    /// Adjacency matrix as a real symmetric matrix.
    pub fn adjacency_matrix(&self) -> SymMatrix {
        SymMatrix::from_fn(self.n, |i, j| if self.adjacent(i, j) { 1.0 } else { 0.0 })
    }

    /// Tests strong regularity.
    ///
    /// Complete and empty graphs satisfy the defining conditions vacuously
    /// for μ and λ respectively; those come back as
    /// [`SrgDetection::Complete`] / [`SrgDetection::Empty`] with the
    /// undetermined parameter left out.
    pub fn detect_srg(&self) -> SrgDetection {
        let n = self.n;
        let k = self.degree(0);
        if (1..n).any(|x| self.degree(x) != k) {
            return SrgDetection::NotSrg;
        }
        if k + 1 == n {
            return SrgDetection::Complete {
                n,
                lambda: (n >= 2).then(|| n - 2),
            };
        }
        if k == 0 {
            return SrgDetection::Empty { n, mu: Some(0) };
        }

        let mut lambda = None;
        let mut mu = None;
        for x in 0..n {
            for y in (x + 1)..n {
                let c = self.common_neighbors(x, y);
                let slot = if self.adjacent(x, y) { &mut lambda } else { &mut mu };
                match *slot {
                    None => *slot = Some(c),
                    Some(v) if v != c => return SrgDetection::NotSrg,
                    Some(_) => {}
                }
            }
        }
        // k in 1..n-1 guarantees both an edge and a non-edge
        SrgDetection::Srg(SrgParams::new(
            n as i64,
            k as i64,
            lambda.unwrap_or(0) as i64,
            mu.unwrap_or(0) as i64,
        ))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| Error::input(format!("line {lineno}: expected two integers")))?;
        tok.parse()
            .map_err(|_| Error::input(format!("line {lineno}: `{tok}` is not a non-negative integer")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::input(format!("line {lineno}: trailing tokens")));
    }
    Ok((a, b))
}

/// Graph distances between every pair of vertices of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    diameter: u32,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.d[x * self.n + y]
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn row(&self, x: usize) -> &[u32] {
        &self.d[x * self.n..(x + 1) * self.n]
    }

    /// Transmission (row sum) of every vertex.
    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.n)
            .map(|x| self.row(x).iter().map(|&v| u64::from(v)).sum())
            .collect()
    }

    pub fn to_sym_matrix(&self) -> SymMatrix {
        SymMatrix::from_fn(self.n, |i, j| f64::from(self.get(i, j)))
    }
}

/// Parameter tuple `(n, k, λ, μ)` of a strongly regular graph.
///
/// Signed so that arbitrary user-supplied tuples can be represented and
/// rejected by feasibility checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SrgParams {
    pub n: i64,
    pub k: i64,
    pub lambda: i64,
    pub mu: i64,
}

impl SrgParams {
    pub const fn new(n: i64, k: i64, lambda: i64, mu: i64) -> Self {
        SrgParams { n, k, lambda, mu }
    }

    /// `(n, n-k-1, n-2-2k+μ, n-2k+λ)`, the parameters of the complement.
    pub fn complement(&self) -> SrgParams {
        let SrgParams { n, k, lambda, mu } = *self;
        SrgParams::new(n, n - k - 1, n - 2 - 2 * k + mu, n - 2 * k + lambda)
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "srg({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

/// Outcome of [`Graph::detect_srg`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SrgDetection {
    NotSrg,
    /// Every parameter determined. μ may be 0 (disconnected union of cliques).
    Srg(SrgParams),
    /// `K_n`: no non-adjacent pair exists, so μ is undetermined.
    /// λ = n-2 is undetermined too when n = 1.
    Complete { n: usize, lambda: Option<usize> },
    /// Edgeless graph on n ≥ 2 vertices: λ is undetermined.
    Empty { n: usize, mu: Option<usize> },
}

impl SrgDetection {
    /// The full tuple when every parameter is determined.
    pub fn params(&self) -> Option<SrgParams> {
        match *self {
            SrgDetection::Srg(p) => Some(p),
            _ => None,
        }
    }

    /// The tuple when the graph is a connected, non-complete SRG (μ ≥ 1).
    pub fn connected_params(&self) -> Option<SrgParams> {
        self.params().filter(|p| p.mu >= 1)
    }
}
