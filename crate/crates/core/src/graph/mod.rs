//! Small graphs on at most [`MAX_ORDER`] vertices, stored as bitmask rows.

mod canon;
pub(crate) mod count;
mod enumerate;
pub mod graph6;
mod group;
mod orbits;

pub use canon::{canonical_form, canonical_key, CanonicalForm, CanonicalKey};
pub use count::{count_induced, extension_count};
pub use enumerate::{children, enumerate_graphs, EnumerationError};
pub use group::{Perm, PermGroup};
pub use orbits::{orbits, orbits_with, Orbit, OrbitDecomposition, OrbitKind};

use core::fmt;

/// Largest supported order.
pub const MAX_ORDER: usize = 12;

/// An undirected simple graph on `order` vertices labelled `0..order`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallGraph {
    order: u8,
    rows: [u16; MAX_ORDER],
}

impl SmallGraph {
    /// The edgeless graph on `order` vertices.
    ///
    /// # Panics
    /// If `order` is 0 or exceeds [`MAX_ORDER`].
    pub fn empty(order: usize) -> Self {
        assert!((1..=MAX_ORDER).contains(&order), "order {order} out of range");
        SmallGraph { order: order as u8, rows: [0; MAX_ORDER] }
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Self::empty(order);
        let all = g.vertex_mask();
        for v in 0..order {
            g.rows[v] = all & !(1 << v);
        }
        g
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(order);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn cycle(order: usize) -> Self {
        let mut g = Self::empty(order);
        for v in 0..order {
            g.add_edge(v, (v + 1) % order);
        }
        g
    }

    pub fn path(order: usize) -> Self {
        let mut g = Self::empty(order);
        for v in 1..order {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
    pub fn petersen() -> Self {
        let mut g = Self::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        g
    }

    /// Builds a graph from raw rows, checking symmetry and the absence of loops.
    pub fn from_rows(order: usize, rows: &[u16]) -> Option<Self> {
        if !(1..=MAX_ORDER).contains(&order) || rows.len() != order {
            return None;
        }
        let mut g = Self::empty(order);
        let mask = g.vertex_mask();
        for (v, &r) in rows.iter().enumerate() {
            if r & !mask != 0 || r & (1 << v) != 0 {
                return None;
            }
            g.rows[v] = r;
        }
        for u in 0..order {
            for v in 0..order {
                if g.has_edge(u, v) != g.has_edge(v, u) {
                    return None;
                }
            }
        }
        Some(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Bitmask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u16 {
        ((1u32 << self.order) - 1) as u16
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u16 {
        self.rows[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u16] {
        &self.rows[..self.order()]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.order() && v < self.order(), "bad edge ({u},{v})");
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Number of common neighbours of `u` and `v`.
    #[inline]
    pub fn common_degree(&self, u: usize, v: usize) -> usize {
        (self.rows[u] & self.rows[v]).count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn nonedge_count(&self) -> usize {
        let n = self.order();
        n * (n - 1) / 2 - self.edge_count()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order();
        (0..n).flat_map(move |u| (u + 1..n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn nonedges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order();
        (0..n).flat_map(move |u| (u + 1..n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Self {
        let mut g = *self;
        let all = self.vertex_mask();
        for v in 0..self.order() {
            g.rows[v] = !self.rows[v] & all & !(1 << v);
        }
        g
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[u8]) -> Self {
        let n = self.order();
        let mut g = Self::empty(n);
        for u in 0..n {
            let mut row = self.rows[u];
            let pu = perm[u] as usize;
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                g.rows[pu] |= 1 << perm[v];
            }
        }
        g
    }

    /// The subgraph induced by the vertices in `mask`, relabelled in increasing order.
    pub fn induced(&self, mask: u16) -> Self {
        let n = mask.count_ones() as usize;
        let mut g = Self::empty(n);
        let mut i = 0;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            g.rows[i] = compress(self.rows[v] & mask, mask);
            i += 1;
        }
        g
    }

    /// Deletes vertex `u`; vertices above `u` shift down by one.
    pub fn remove_vertex(&self, u: usize) -> Self {
        self.induced(self.vertex_mask() & !(1 << u))
    }

    /// Appends a vertex adjacent to the vertices in `nbrs`.
    pub fn with_vertex(&self, nbrs: u16) -> Self {
        let n = self.order();
        assert!(n < MAX_ORDER);
        let mut g = *self;
        g.order += 1;
        g.rows[n] = nbrs;
        let mut m = nbrs;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            g.rows[v] |= 1 << n;
        }
        g
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().any(|(u, v)| self.rows[u] & self.rows[v] != 0)
    }

    /// True if some 4-cycle is present as a subgraph (not necessarily induced).
    pub fn has_quadrangle(&self) -> bool {
        let n = self.order();
        (0..n).any(|u| (u + 1..n).any(|v| self.common_degree(u, v) >= 2))
    }

    pub fn has_induced_quadrangle(&self) -> bool {
        let n = self.order();
        (0..n).any(|u| {
            (u + 1..n).any(|v| {
                if self.has_edge(u, v) {
                    return false;
                }
                let mut c = self.rows[u] & self.rows[v];
                while c != 0 {
                    let w = c.trailing_zeros() as usize;
                    c &= c - 1;
                    if c & !self.rows[w] != 0 {
                        return true;
                    }
                }
                false
            })
        })
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u16;
        let mut frontier = 1u16;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.rows[v] & !seen;
            seen |= new;
            frontier |= new;
        }
        seen == self.vertex_mask()
    }

    pub fn is_in(&self, class: GraphClass) -> bool {
        class.contains(self)
    }
}

/// Packs the bits of `bits` selected by `mask` into the low bits.
#[inline]
fn compress(bits: u16, mask: u16) -> u16 {
    let mut out = 0u16;
    let mut m = mask;
    let mut i = 0;
    while m != 0 {
        let v = m.trailing_zeros();
        m &= m - 1;
        out |= ((bits >> v) & 1) << i;
        i += 1;
    }
    out
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph({}, [", self.order)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// The graph universes used by the counting systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    General,
    /// No triangle.
    TriangleFree,
    /// No triangle and no 4-cycle.
    TriangleAndQuadrangleFree,
}

impl GraphClass {
    pub fn contains(self, g: &SmallGraph) -> bool {
        match self {
            GraphClass::General => true,
            GraphClass::TriangleFree => !g.has_triangle(),
            GraphClass::TriangleAndQuadrangleFree => !g.has_triangle() && !g.has_induced_quadrangle(),
        }
    }

    /// Largest order [`enumerate_graphs`] accepts for this class.
    pub fn max_enumeration_order(self) -> usize {
        match self {
            GraphClass::General => 9,
            GraphClass::TriangleFree => 10,
            GraphClass::TriangleAndQuadrangleFree => 11,
        }
    }
}
