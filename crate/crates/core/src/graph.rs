//! Undirected simple graphs and two-sided bipartite graphs over dense bit rows.

use crate::bitset;
use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n`.
///
/// Adjacency is an `n x n` bit matrix stored row-major; degrees are kept in
/// step with every mutation.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    words: usize,
    adj: Vec<u64>,
    deg: Vec<usize>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .finish_non_exhaustive()
    }
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        let words = bitset::words_for(n);
        Graph {
            n,
            m: 0,
            words,
            adj: vec![0; n * words],
            deg: vec![0; n],
        }
    }

    /// Builds a graph from unordered pairs. Repeated pairs are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        bitset::set(self.row_mut(u), v);
        bitset::set(self.row_mut(v), u);
        self.deg[u] += 1;
        self.deg[v] += 1;
        self.m += 1;
        Ok(())
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u >= self.n {
            Err(Error::VertexOutOfRange { u, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.deg[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.deg
    }

    /// `false` for out-of-range vertices.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bitset::get(self.row(u), v)
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bitset::ones(self.row(v))
    }

    /// Edges as `(u, v)` with `u < v`, sorted by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// `{w not in R : w adjacent to every vertex of C}`, ascending.
    pub fn common_neighbors_outside(&self, c: &[usize], r: &[usize]) -> Result<Vec<usize>> {
        if c.is_empty() {
            return Err(Error::EmptyQuerySet);
        }
        for &v in c.iter().chain(r) {
            self.check_vertex(v)?;
        }
        let mut acc = bitset::full(self.n);
        for &v in r {
            bitset::clear(&mut acc, v);
        }
        for &v in c {
            for (a, w) in acc.iter_mut().zip(self.row(v)) {
                *a &= w;
            }
        }
        Ok(bitset::ones(&acc).collect())
    }

    /// The `r` highest-degree vertices, ties broken by smaller id, returned in
    /// ascending id order.
    pub fn top_degree_vertices(&self, r: usize) -> Vec<usize> {
        top_by_degree(&self.deg, r)
    }

    /// Removes every edge between `left` and `right`. Nothing is removed unless
    /// all cross pairs are present.
    pub fn delete_biclique_edges(&mut self, left: &[usize], right: &[usize]) -> Result<()> {
        for &u in left {
            for &v in right {
                if !self.has_edge(u, v) {
                    return Err(Error::MissingEdge(u, v));
                }
            }
        }
        for &u in left {
            for &v in right {
                bitset::clear(self.row_mut(u), v);
                bitset::clear(self.row_mut(v), u);
                self.deg[u] -= 1;
                self.deg[v] -= 1;
            }
        }
        self.m -= left.len() * right.len();
        Ok(())
    }

    /// Recomputes every derived quantity from the bit rows and compares.
    pub fn audit(&self) -> std::result::Result<(), String> {
        let mut twice_m = 0;
        for v in 0..self.n {
            let row = self.row(v);
            if bitset::get(row, v) {
                return Err(format!("self-loop at {v}"));
            }
            let d = bitset::count(row);
            if d != self.deg[v] {
                return Err(format!("degree of {v} is {} but row has {d}", self.deg[v]));
            }
            for u in bitset::ones(row) {
                if u >= self.n {
                    return Err(format!("bit {u} set beyond n in row {v}"));
                }
                if !bitset::get(self.row(u), v) {
                    return Err(format!("asymmetric pair ({v}, {u})"));
                }
            }
            twice_m += d;
        }
        if twice_m != 2 * self.m {
            return Err(format!("m = {} but degree sum is {twice_m}", self.m));
        }
        Ok(())
    }
}

/// The `r` highest-degree ids (ties to the smaller id), ascending. Uses a
/// degree histogram to find the cut degree, then one pass in id order.
pub(crate) fn top_by_degree(deg: &[usize], r: usize) -> Vec<usize> {
    let r = r.min(deg.len());
    if r == 0 {
        return Vec::new();
    }
    let max = deg.iter().copied().max().unwrap_or(0);
    let mut count = vec![0usize; max + 1];
    for &d in deg {
        count[d] += 1;
    }
    let mut cut = max;
    let mut above = 0;
    while above + count[cut] < r {
        above += count[cut];
        cut -= 1;
    }
    let mut at_cut = r - above;
    let mut ids = Vec::with_capacity(r);
    for (v, &d) in deg.iter().enumerate() {
        if d > cut {
            ids.push(v);
        } else if d == cut && at_cut > 0 {
            ids.push(v);
            at_cut -= 1;
        }
    }
    ids
}

/// Bipartite graph with parts `A` (size `a`) and `B` (size `b`), `a >= b`.
///
/// Vertex ids are local to each side. When the input had the smaller side
/// first the sides are swapped on construction; [`BipartiteGraph::is_swapped`]
/// reports it and serialization restores the original orientation.
#[derive(Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    a: usize,
    b: usize,
    m: usize,
    swapped: bool,
    words: usize,
    // one row per B vertex, bits over A
    rows: Vec<u64>,
    deg_a: Vec<usize>,
    deg_b: Vec<usize>,
}

impl std::fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BipartiteGraph")
            .field("a", &self.a)
            .field("b", &self.b)
            .field("m", &self.m)
            .field("swapped", &self.swapped)
            .finish_non_exhaustive()
    }
}

impl BipartiteGraph {
    /// Empty graph with sides of the given sizes, larger side becoming `A`.
    pub fn empty(first: usize, second: usize) -> Self {
        let swapped = first < second;
        let (a, b) = if swapped { (second, first) } else { (first, second) };
        let words = bitset::words_for(a);
        BipartiteGraph {
            a,
            b,
            m: 0,
            swapped,
            words,
            rows: vec![0; b * words],
            deg_a: vec![0; a],
            deg_b: vec![0; b],
        }
    }

    /// Builds from pairs `(x, y)` with `x` on the first side and `y` on the second,
    /// in the caller's orientation.
    pub fn from_edge_list(first: usize, second: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = BipartiteGraph::empty(first, second);
        for &(x, y) in edges {
            g.add_edge_original(x, y)?;
        }
        Ok(g)
    }

    /// Adds an edge given in the caller's original orientation.
    pub fn add_edge_original(&mut self, x: usize, y: usize) -> Result<()> {
        let (first, second) = self.original_sizes();
        if x >= first {
            return Err(Error::VertexOutOfRange { u: x, n: first });
        }
        if y >= second {
            return Err(Error::VertexOutOfRange { u: y, n: second });
        }
        let (u, v) = if self.swapped { (y, x) } else { (x, y) };
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(x, y));
        }
        self.insert(u, v);
        Ok(())
    }

    /// Adds edge `(u in A, v in B)` in normalized orientation.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.a {
            return Err(Error::VertexOutOfRange { u, n: self.a });
        }
        if v >= self.b {
            return Err(Error::VertexOutOfRange { u: v, n: self.b });
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u, v));
        }
        self.insert(u, v);
        Ok(())
    }

    fn insert(&mut self, u: usize, v: usize) {
        let w = self.words;
        bitset::set(&mut self.rows[v * w..(v + 1) * w], u);
        self.deg_a[u] += 1;
        self.deg_b[v] += 1;
        self.m += 1;
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_swapped(&self) -> bool {
        self.swapped
    }

    /// Side sizes as given by the caller.
    pub fn original_sizes(&self) -> (usize, usize) {
        if self.swapped {
            (self.b, self.a)
        } else {
            (self.a, self.b)
        }
    }

    pub fn degree_a(&self, u: usize) -> usize {
        self.deg_a[u]
    }

    pub fn degree_b(&self, v: usize) -> usize {
        self.deg_b[v]
    }

    /// `u` in A, `v` in B. `false` when out of range.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.a && v < self.b && bitset::get(self.row_b(v), u)
    }

    /// A-side neighborhood of a B vertex as a bit row.
    pub(crate) fn row_b(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Edges `(u in A, v in B)` sorted by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.a).flat_map(move |u| (0..self.b).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    /// Edges in the caller's orientation, sorted by first then second coordinate.
    pub fn edges_original(&self) -> Vec<(usize, usize)> {
        if self.swapped {
            // original first side is B: iterate B rows in order
            (0..self.b)
                .flat_map(|v| bitset::ones(self.row_b(v)).map(move |u| (v, u)))
                .collect()
        } else {
            self.edges().collect()
        }
    }

    /// The `r` highest-degree B vertices, ascending ids.
    pub fn top_degree_b(&self, r: usize) -> Vec<usize> {
        top_by_degree(&self.deg_b, r)
    }

    /// A vertices adjacent to every B vertex of `c`, ascending.
    pub fn common_neighbors(&self, c: &[usize]) -> Result<Vec<usize>> {
        if c.is_empty() {
            return Err(Error::EmptyQuerySet);
        }
        let mut acc = bitset::full(self.a);
        for &v in c {
            if v >= self.b {
                return Err(Error::VertexOutOfRange { u: v, n: self.b });
            }
            for (x, w) in acc.iter_mut().zip(self.row_b(v)) {
                *x &= w;
            }
        }
        Ok(bitset::ones(&acc).collect())
    }

    /// Removes all edges between `left` (B ids) and `right` (A ids), atomically.
    pub fn delete_biclique_edges(&mut self, left: &[usize], right: &[usize]) -> Result<()> {
        for &v in left {
            for &u in right {
                if !self.has_edge(u, v) {
                    return Err(Error::MissingEdge(v, u));
                }
            }
        }
        let w = self.words;
        for &v in left {
            for &u in right {
                bitset::clear(&mut self.rows[v * w..(v + 1) * w], u);
                self.deg_a[u] -= 1;
                self.deg_b[v] -= 1;
            }
        }
        self.m -= left.len() * right.len();
        Ok(())
    }

    pub fn audit(&self) -> std::result::Result<(), String> {
        let mut deg_a = vec![0usize; self.a];
        let mut sum_b = 0;
        for v in 0..self.b {
            let row = self.row_b(v);
            let d = bitset::count(row);
            if d != self.deg_b[v] {
                return Err(format!("degree of B vertex {v} is {} but row has {d}", self.deg_b[v]));
            }
            for u in bitset::ones(row) {
                if u >= self.a {
                    return Err(format!("bit {u} set beyond a in row {v}"));
                }
                deg_a[u] += 1;
            }
            sum_b += d;
        }
        if deg_a != self.deg_a {
            return Err("A-side degrees out of sync".into());
        }
        if sum_b != self.m || self.deg_a.iter().sum::<usize>() != self.m {
            return Err(format!("m = {} disagrees with degree sums", self.m));
        }
        if self.a < self.b {
            return Err("side A smaller than side B".into());
        }
        Ok(())
    }
}
