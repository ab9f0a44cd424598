//! Explicit graphs and the breadth-first oracle that reads intersection
//! numbers back off them.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::array::{ArrayError, IntersectionArray};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    Empty,
    NeighborOutOfRange { v: usize, w: usize },
    Loop { v: usize },
    Duplicate { v: usize, w: usize },
    Asymmetric { v: usize, w: usize },
    Disconnected { unreached: usize },
    NotBipartite,
    BadParameter { what: &'static str, value: u32 },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Empty => f.write_str("graph has no vertices"),
            GraphError::NeighborOutOfRange { v, w } => {
                write!(f, "vertex {v} lists neighbor {w}, which is out of range")
            }
            GraphError::Loop { v } => write!(f, "vertex {v} is adjacent to itself"),
            GraphError::Duplicate { v, w } => write!(f, "vertex {v} lists neighbor {w} twice"),
            GraphError::Asymmetric { v, w } => write!(f, "{v} lists {w} but {w} does not list {v}"),
            GraphError::Disconnected { unreached } => {
                write!(f, "graph is disconnected: vertex {unreached} is unreachable from 0")
            }
            GraphError::NotBipartite => f.write_str("graph is not bipartite"),
            GraphError::BadParameter { what, value } => write!(f, "{what} = {value} is out of range"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A finite, simple, connected, undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Validates and normalizes (sorts) the neighbor lists.
    pub fn new(mut adj: Vec<Vec<usize>>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            for w in list.windows(2) {
                if w[0] == w[1] {
                    return Err(GraphError::Duplicate { v, w: w[0] });
                }
            }
            if let Some(&w) = list.iter().find(|&&w| w >= n) {
                return Err(GraphError::NeighborOutOfRange { v, w });
            }
            if list.binary_search(&v).is_ok() {
                return Err(GraphError::Loop { v });
            }
        }
        for (v, list) in adj.iter().enumerate() {
            for &w in list {
                if adj[w].binary_search(&v).is_err() {
                    return Err(GraphError::Asymmetric { v, w });
                }
            }
        }
        let g = Graph { adj };
        if let Some(u) = g.distances(0).iter().position(|&d| d == usize::MAX) {
            return Err(GraphError::Disconnected { unreached: u });
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::NeighborOutOfRange { v: u, w: v });
            }
            adj[u].push(v);
            if u != v {
                adj[v].push(u);
            }
        }
        Graph::new(adj)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Breadth-first distances from `src`; `usize::MAX` marks unreachable vertices.
    pub fn distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs distances, row per source.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n()).map(|v| self.distances(v)).collect()
    }

    pub fn diameter(&self) -> usize {
        (0..self.n())
            .map(|v| self.distances(v).into_iter().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// Two-coloring with vertex 0 in class 0, or `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let dist = self.distances(0);
        let color: Vec<u8> = dist.iter().map(|&d| (d % 2) as u8).collect();
        let proper = (0..self.n()).all(|v| self.adj[v].iter().all(|&w| color[v] != color[w]));
        proper.then_some(color)
    }
}

/// The intersection numbers read off a distance-regular graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrgCertificate {
    /// `b_0 .. b_{D-1}`.
    pub b: Vec<u32>,
    /// `c_1 .. c_D`.
    pub c: Vec<u32>,
    /// `|Γ_i(x)|` for `i = 0..=D`; equal for every `x`.
    pub layer_sizes: Vec<usize>,
    pub n: usize,
    pub bipartite: bool,
    /// Every vertex has exactly one vertex at distance `D`.
    pub antipodal2: bool,
    pub has_induced_quadrangle: bool,
}

impl DrgCertificate {
    pub fn diameter(&self) -> usize {
        self.c.len()
    }

    /// The array, when it satisfies the array invariants (`k ≥ 2`).
    pub fn array(&self) -> Result<IntersectionArray, ArrayError> {
        IntersectionArray::new(self.b.clone(), self.c.clone())
    }
}

/// The first ordered pair `(x, y)` at distance `i` whose `(c, a, b)` counts
/// differ from those seen at vertex 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotDrg {
    pub x: usize,
    pub y: usize,
    pub i: usize,
}

impl fmt::Display for NotDrg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not distance-regular: pair ({}, {}) at distance {} has different c/a/b counts",
            self.x, self.y, self.i
        )
    }
}

impl core::error::Error for NotDrg {}

/// `(c, a, b)` for `y` relative to the distance vector of some `x`.
fn local_counts(g: &Graph, dist: &[usize], y: usize) -> (u32, u32, u32) {
    let i = dist[y];
    let (mut c, mut a, mut b) = (0, 0, 0);
    for &z in g.neighbors(y) {
        match dist[z] {
            d if d + 1 == i => c += 1,
            d if d == i => a += 1,
            _ => b += 1,
        }
    }
    (c, a, b)
}

pub fn verify_drg(g: &Graph) -> Result<DrgCertificate, NotDrg> {
    let n = g.n();
    let dist0 = g.distances(0);
    let d = dist0.iter().copied().max().unwrap_or(0);
    let mut reference: Vec<Option<(u32, u32, u32)>> = vec![None; d + 1];
    for y in 0..n {
        let i = dist0[y];
        let counts = local_counts(g, &dist0, y);
        match reference[i] {
            None => reference[i] = Some(counts),
            Some(r) if r != counts => return Err(NotDrg { x: 0, y, i }),
            Some(_) => {}
        }
    }
    let reference: Vec<(u32, u32, u32)> = reference
        .into_iter()
        .map(|r| r.expect("every layer is nonempty"))
        .collect();
    let mut layer_sizes = vec![0usize; d + 1];
    for &i in &dist0 {
        layer_sizes[i] += 1;
    }
    let mut antipodal2 = layer_sizes[d] == 1;
    for x in 1..n {
        let dist = g.distances(x);
        for y in 0..n {
            let i = dist[y];
            if i > d || local_counts(g, &dist, y) != reference[i] {
                return Err(NotDrg { x, y, i });
            }
        }
        antipodal2 &= dist.iter().filter(|&&i| i == d).count() == 1;
    }
    Ok(DrgCertificate {
        b: reference[..d].iter().map(|r| r.2).collect(),
        c: reference[1..].iter().map(|r| r.0).collect(),
        layer_sizes,
        n,
        bipartite: reference.iter().all(|r| r.1 == 0),
        antipodal2,
        has_induced_quadrangle: find_induced_quadrangle(g).is_some(),
    })
}

/// Triple intersection numbers counted directly: entry `[i][j][h]` is the
/// number of `z` with `d(x,z) = j`, `d(y,z) = h` for any `x, y` at distance
/// `i`. `None` if some pair disagrees.
pub fn count_pnumbers(g: &Graph) -> Option<Vec<Vec<Vec<u64>>>> {
    let dm = g.distance_matrix();
    let d = dm[0].iter().copied().max().unwrap_or(0);
    let mut table: Vec<Option<Vec<Vec<u64>>>> = vec![None; d + 1];
    for x in 0..g.n() {
        for y in 0..g.n() {
            let i = dm[x][y];
            let mut counts = vec![vec![0u64; d + 1]; d + 1];
            for (&j, &h) in dm[x].iter().zip(&dm[y]) {
                if j > d || h > d {
                    return None;
                }
                counts[j][h] += 1;
            }
            match &table[i] {
                None => table[i] = Some(counts),
                Some(t) if *t != counts => return None,
                Some(_) => {}
            }
        }
    }
    table.into_iter().collect()
}

/// The `d`-cube on bit strings of length `d`.
pub fn build_cube(d: u32) -> Result<Graph, GraphError> {
    if !(1..=16).contains(&d) {
        return Err(GraphError::BadParameter {
            what: "cube dimension",
            value: d,
        });
    }
    let n = 1usize << d;
    let adj = (0..n).map(|v| (0..d).map(|bit| v ^ (1 << bit)).collect()).collect();
    Graph::new(adj)
}

/// `K_{k+1,k+1}` minus a perfect matching; `i` and `k+1+i` are the matched pair.
pub fn build_crown(k: u32) -> Result<Graph, GraphError> {
    if k < 1 {
        return Err(GraphError::BadParameter {
            what: "crown valency",
            value: k,
        });
    }
    let s = k as usize + 1;
    let edges = (0..s).flat_map(|i| (0..s).filter(move |&j| j != i).map(move |j| (i, s + j)));
    Graph::from_edges(2 * s, edges)
}

/// Hadamard graph of the Sylvester matrix of order `2^m`. Vertices
/// `r_i^+, r_i^-, c_j^+, c_j^-` are numbered `i`, `N+i`, `2N+j`, `3N+j`, and
/// `r_i^e ~ c_j^f` iff `H_ij = e·f`.
pub fn build_hadamard(m: u32) -> Result<Graph, GraphError> {
    if !(2..=10).contains(&m) {
        return Err(GraphError::BadParameter {
            what: "Sylvester exponent",
            value: m,
        });
    }
    let order = 1usize << m;
    let h = |i: usize, j: usize| {
        if (i & j).count_ones().is_multiple_of(2) {
            1i8
        } else {
            -1
        }
    };
    let mut edges = Vec::with_capacity(2 * order * order);
    for i in 0..order {
        for j in 0..order {
            for (e, re) in [(1i8, i), (-1, order + i)] {
                for (f, cf) in [(1i8, 2 * order + j), (-1, 3 * order + j)] {
                    if h(i, j) == e * f {
                        edges.push((re, cf));
                    }
                }
            }
        }
    }
    Graph::from_edges(4 * order, edges)
}

/// Vertex 0 on top, rings `1..=5` and `6..=10`, vertex 11 at the bottom.
pub fn build_icosahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 1..=5usize {
        let next = i % 5 + 1;
        edges.push((0, i));
        edges.push((i, next));
        edges.push((11, i + 5));
        edges.push((i + 5, next + 5));
        edges.push((i, i + 5));
        edges.push((i, next + 5));
    }
    Graph::from_edges(12, edges).expect("icosahedron is well formed")
}

/// The graph on one color class (`side` 0 contains vertex 0), adjacent when at
/// distance 2. Vertices are renumbered in increasing order of their original
/// labels.
pub fn halved_graph(g: &Graph, side: u8) -> Result<Graph, GraphError> {
    let color = g.bipartition().ok_or(GraphError::NotBipartite)?;
    let members: Vec<usize> = (0..g.n()).filter(|&v| color[v] == side).collect();
    let mut index = vec![usize::MAX; g.n()];
    for (new, &old) in members.iter().enumerate() {
        index[old] = new;
    }
    let adj = members
        .iter()
        .map(|&v| {
            let mut list: Vec<usize> = g
                .neighbors(v)
                .iter()
                .flat_map(|&w| g.neighbors(w).iter().copied())
                .filter(|&u| u != v)
                .map(|u| index[u])
                .collect();
            list.sort_unstable();
            list.dedup();
            list
        })
        .collect();
    Graph::new(adj)
}

/// The lexicographically first induced 4-cycle `(a, b, c, d)` with
/// `a-b-c-d-a`, `a` its smallest vertex and `b < d`.
pub fn find_induced_quadrangle(g: &Graph) -> Option<[usize; 4]> {
    for a in 0..g.n() {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            for &c in g.neighbors(b).iter().filter(|&&c| c > a && !g.has_edge(a, c)) {
                let d = g
                    .neighbors(c)
                    .iter()
                    .copied()
                    .find(|&d| d > b && g.has_edge(a, d) && !g.has_edge(b, d));
                if let Some(d) = d {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cert(g: &Graph) -> DrgCertificate {
        verify_drg(g).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(Graph::new(vec![]), Err(GraphError::Empty));
        assert_eq!(Graph::new(vec![vec![0]]), Err(GraphError::Loop { v: 0 }));
        assert_eq!(
            Graph::new(vec![vec![1], vec![]]),
            Err(GraphError::Asymmetric { v: 0, w: 1 })
        );
        assert_eq!(
            Graph::new(vec![vec![], vec![]]),
            Err(GraphError::Disconnected { unreached: 1 })
        );
        assert_eq!(
            Graph::new(vec![vec![2], vec![]]),
            Err(GraphError::NeighborOutOfRange { v: 0, w: 2 })
        );
        assert_eq!(
            Graph::new(vec![vec![1, 1], vec![0]]),
            Err(GraphError::Duplicate { v: 0, w: 1 })
        );
    }

    #[test]
    fn small_cubes() {
        let g = build_cube(1).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.diameter(), 1);
        assert!(cert(&g).array().is_err());
        let c = cert(&build_cube(2).unwrap());
        assert_eq!(c.array().unwrap().to_string(), "{2,1;1,2}");
        let c = cert(&build_cube(6).unwrap());
        assert_eq!(c.n, 64);
        assert_eq!(c.array().unwrap().to_string(), "{6,5,4,3,2,1;1,2,3,4,5,6}");
        assert_eq!(c.layer_sizes, [1, 6, 15, 20, 15, 6, 1]);
        assert!(c.bipartite && c.antipodal2 && c.has_induced_quadrangle);
    }

    #[test]
    fn path_is_not_drg() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(verify_drg(&p3), Err(NotDrg { x: 1, y: 0, i: 1 }));
    }

    #[test]
    fn crowns() {
        assert_eq!(
            cert(&build_crown(2).unwrap()).array().unwrap().to_string(),
            "{2,1,1;1,1,2}"
        );
        let c = cert(&build_crown(5).unwrap());
        assert_eq!(c.array().unwrap().to_string(), "{5,4,1;1,4,5}");
        assert!(c.bipartite && c.antipodal2);
    }

    #[test]
    fn hadamard() {
        let c4 = cert(&build_hadamard(2).unwrap());
        assert_eq!(c4.array().unwrap().to_string(), "{4,3,2,1;1,2,3,4}");
        let c8 = cert(&build_hadamard(3).unwrap());
        assert_eq!(c8.n, 32);
        assert_eq!(c8.array().unwrap().to_string(), "{8,7,4,1;1,4,7,8}");
        assert!(c8.has_induced_quadrangle);
        assert!(build_hadamard(1).is_err());
    }

    #[test]
    fn icosahedron() {
        let c = cert(&build_icosahedron());
        assert_eq!(c.n, 12);
        assert_eq!(c.array().unwrap().to_string(), "{5,2,1;1,2,5}");
        assert!(!c.bipartite && c.antipodal2);
    }

    #[test]
    fn halved() {
        let h = halved_graph(&build_cube(4).unwrap(), 0).unwrap();
        assert_eq!(h.n(), 8);
        assert!((0..8).all(|v| h.degree(v) == 6));
        let tri = halved_graph(&build_crown(2).unwrap(), 0).unwrap();
        assert_eq!(tri.n(), 3);
        assert_eq!(tri.edge_count(), 3);
        let clebsch = halved_graph(&build_cube(5).unwrap(), 1).unwrap();
        assert_eq!(clebsch.n(), 16);
        assert!((0..16).all(|v| clebsch.degree(v) == 10));
        assert_eq!(halved_graph(&build_icosahedron(), 0), Err(GraphError::NotBipartite));
    }

    #[test]
    fn quadrangles() {
        assert_eq!(find_induced_quadrangle(&build_cube(4).unwrap()), Some([0, 1, 3, 2]));
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(find_induced_quadrangle(&k3), None);
        assert_eq!(find_induced_quadrangle(&build_icosahedron()), None);
    }

    #[test]
    fn counted_pnumbers_are_uniform() {
        let t = count_pnumbers(&build_cube(3).unwrap()).unwrap();
        // p^3_{32}: antipodal pair, nothing at distance 3 from both.
        assert_eq!(t[3][3][2], 0);
        assert_eq!(t[1][1][1], 0);
        assert_eq!(t[2][1][1], 2);
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(count_pnumbers(&p3), None);
    }
}
