//! Red/blue colorings of complete graphs and color-constrained searches.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits;
use crate::embed::{self, Host};
use crate::graph::{GraphError, SimpleGraph, MAX_VERTICES};

/// Cap for [`chromatic_profile`].
pub const MAX_PROFILE_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("exact coloring is capped at {MAX_PROFILE_VERTICES} vertices, got {0}")]
    TooLarge(usize),
    #[error("malformed hex bitmap: {0}")]
    BadHex(String),
}

/// A 2-coloring of the complete graph on `order` vertices. The red graph is
/// stored; every other pair is blue.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwoColoring {
    red: SimpleGraph,
}

impl std::fmt::Debug for TwoColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TwoColoring(N={}, red={:?})", self.order(), self.red.edges())
    }
}

impl TwoColoring {
    pub fn all_blue(order: usize) -> Result<Self, ColoringError> {
        Ok(Self {
            red: SimpleGraph::empty(order)?,
        })
    }

    pub fn all_red(order: usize) -> Result<Self, ColoringError> {
        Ok(Self {
            red: SimpleGraph::empty(order)?.complement(),
        })
    }

    pub fn from_red_graph(red: SimpleGraph) -> Self {
        Self { red }
    }

    pub fn from_red_pairs(
        order: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, ColoringError> {
        Ok(Self {
            red: SimpleGraph::from_edges(order, pairs)?,
        })
    }

    pub fn order(&self) -> usize {
        self.red.vertex_count()
    }

    pub fn is_red(&self, u: usize, v: usize) -> bool {
        self.red.has_edge(u, v)
    }

    pub fn is_blue(&self, u: usize, v: usize) -> bool {
        u != v && !self.red.has_edge(u, v)
    }

    pub fn set_red(&mut self, u: usize, v: usize) -> Result<(), ColoringError> {
        Ok(self.red.add_edge(u, v)?)
    }

    pub fn set_blue(&mut self, u: usize, v: usize) -> Result<(), ColoringError> {
        Ok(self.red.remove_edge(u, v)?)
    }

    pub fn red_graph(&self) -> &SimpleGraph {
        &self.red
    }

    pub fn blue_graph(&self) -> SimpleGraph {
        self.red.complement()
    }

    /// Exchanges the two colors.
    pub fn swap(&self) -> Self {
        Self {
            red: self.red.complement(),
        }
    }

    pub fn red_pairs(&self) -> Vec<(usize, usize)> {
        self.red.edges()
    }

    /// One bit per pair in the order (0,1), (0,2), ..., (0,N-1), (1,2), ...,
    /// set for red, packed most significant bit first and zero padded,
    /// written as lowercase hex.
    pub fn to_hex(&self) -> String {
        let n = self.order();
        let pairs = n * (n - 1) / 2;
        let mut bytes = vec![0u8; pairs.div_ceil(8)];
        let mut i = 0;
        for u in 0..n {
            for v in u + 1..n {
                if self.is_red(u, v) {
                    bytes[i / 8] |= 0x80 >> (i % 8);
                }
                i += 1;
            }
        }
        bytes.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(order: usize, hex: &str) -> Result<Self, ColoringError> {
        if order == 0 || order > MAX_VERTICES {
            return Err(ColoringError::Graph(if order == 0 {
                GraphError::NoVertices
            } else {
                GraphError::TooManyVertices(order)
            }));
        }
        let pairs = order * (order - 1) / 2;
        let nbytes = pairs.div_ceil(8);
        if hex.len() != 2 * nbytes {
            return Err(ColoringError::BadHex(format!(
                "expected {} hex digits, got {}",
                2 * nbytes,
                hex.len()
            )));
        }
        let mut bytes = Vec::with_capacity(nbytes);
        for k in 0..nbytes {
            let byte = u8::from_str_radix(&hex[2 * k..2 * k + 2], 16)
                .map_err(|e| ColoringError::BadHex(e.to_string()))?;
            bytes.push(byte);
        }
        let mut c = Self::all_blue(order)?;
        let mut i = 0;
        for u in 0..order {
            for v in u + 1..order {
                if bytes[i / 8] & (0x80 >> (i % 8)) != 0 {
                    c.set_red(u, v)?;
                }
                i += 1;
            }
        }
        for j in pairs..8 * nbytes {
            if bytes[j / 8] & (0x80 >> (j % 8)) != 0 {
                return Err(ColoringError::BadHex("non-zero padding".into()));
            }
        }
        Ok(c)
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    #[serde(rename = "N")]
    order: usize,
    red: Vec<(usize, usize)>,
}

impl Serialize for TwoColoring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ColoringJson {
            order: self.order(),
            red: self.red_pairs(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TwoColoring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = ColoringJson::deserialize(d)?;
        Self::from_red_pairs(raw.order, raw.red).map_err(serde::de::Error::custom)
    }
}

/// Injective vertex map from a pattern into a host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Whether the map is injective and sends every pattern edge to a host
    /// edge.
    pub fn is_valid(&self, pattern: &SimpleGraph, host: &SimpleGraph) -> bool {
        let n = host.vertex_count();
        if self.map.len() != pattern.vertex_count() || self.map.iter().any(|&v| v >= n) {
            return false;
        }
        let mut seen = vec![false; n];
        for &v in &self.map {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        pattern
            .edges()
            .into_iter()
            .all(|(a, b)| host.has_edge(self.map[a], self.map[b]))
    }
}

/// A copy of `g` inside `host`.
pub fn find_subgraph(host: &SimpleGraph, g: &SimpleGraph) -> Option<Embedding> {
    if g.vertex_count() > host.vertex_count() || g.edge_count() > host.edge_count() {
        return None;
    }
    let h = Host::of(host);
    embed::find_embedding(g, h, &h.full_mask()).map(|map| Embedding { map })
}

pub fn find_red_subgraph(c: &TwoColoring, g: &SimpleGraph) -> Option<Embedding> {
    find_subgraph(c.red_graph(), g)
}

pub fn find_blue_subgraph(c: &TwoColoring, g: &SimpleGraph) -> Option<Embedding> {
    find_red_subgraph(&c.swap(), g)
}

/// `t` pairwise disjoint vertex sets of size `m` in `host`, each a clique.
pub fn find_disjoint_cliques(host: &SimpleGraph, t: usize, m: usize) -> Option<Vec<Vec<usize>>> {
    if t == 0 {
        return Some(vec![]);
    }
    if m == 0 || t * m > host.vertex_count() {
        return None;
    }
    let h = Host::of(host);
    embed::find_disjoint_cliques(h, &h.full_mask(), t, m)
}

/// A blue `tK_m`: `t` disjoint `m`-sets whose pairs are all blue.
pub fn find_blue_tkm(c: &TwoColoring, t: usize, m: usize) -> Option<Vec<Vec<usize>>> {
    find_disjoint_cliques(&c.blue_graph(), t, m)
}

/// Whether the coloring avoids both a red `g` and a blue `tK_m`.
pub fn is_good_coloring(c: &TwoColoring, g: &SimpleGraph, t: usize, m: usize) -> bool {
    find_red_subgraph(c, g).is_none() && find_blue_tkm(c, t, m).is_none()
}

/// Chromatic number and chromatic surplus (the least possible size of the
/// smallest class over all proper colorings with the minimum number of
/// colors).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticProfile {
    pub chi: usize,
    pub surplus: usize,
}

pub fn chromatic_profile(h: &SimpleGraph) -> Result<ChromaticProfile, ColoringError> {
    let n = h.vertex_count();
    if n > MAX_PROFILE_VERTICES {
        return Err(ColoringError::TooLarge(n));
    }
    let rows: Vec<u32> = (0..n).map(|v| h.word_row(v) as u32).collect();
    // Highest degree first keeps conflicts early.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(rows[v].count_ones()));
    for chi in 1..=n {
        let mut classes = vec![0u32; chi];
        let mut best = usize::MAX;
        profile_rec(&rows, &order, 0, &mut classes, 0, &mut best);
        if best != usize::MAX {
            return Ok(ChromaticProfile { chi, surplus: best });
        }
    }
    unreachable!("n colors always suffice")
}

fn profile_rec(
    rows: &[u32],
    order: &[usize],
    depth: usize,
    classes: &mut [u32],
    used: usize,
    best: &mut usize,
) {
    if *best == 1 {
        return;
    }
    if depth == order.len() {
        if used == classes.len() {
            let smallest = classes.iter().map(|c| c.count_ones() as usize).min().unwrap_or(0);
            *best = (*best).min(smallest);
        }
        return;
    }
    // Not enough vertices left to open the remaining classes.
    if classes.len() - used > order.len() - depth {
        return;
    }
    let v = order[depth];
    let limit = (used + 1).min(classes.len());
    for c in 0..limit {
        if classes[c] & rows[v] != 0 {
            continue;
        }
        classes[c] |= 1 << v;
        profile_rec(rows, order, depth + 1, classes, used.max(c + 1), best);
        classes[c] &= !(1 << v);
    }
}

/// The extremal coloring: `chi - 1` red cliques on `n - 1` vertices and one
/// red clique on `s - 1` vertices, with every pair between groups blue.
/// It has `(n-1)(chi-1) + s - 1` vertices, red components of order below
/// `n`, and a blue complete multipartite graph with a part of size `s - 1`.
pub fn burr_coloring(n: usize, chi: usize, s: usize) -> Result<TwoColoring, ColoringError> {
    if chi < 2 || s < 1 || s > n {
        return Err(ColoringError::InvalidParams(format!(
            "need n >= s >= 1 and chi >= 2, got n={n}, chi={chi}, s={s}"
        )));
    }
    let order = (n - 1) * (chi - 1) + s - 1;
    if order == 0 {
        return Err(ColoringError::InvalidParams(
            "the coloring would have no vertices".into(),
        ));
    }
    let mut sizes = vec![n - 1; chi - 1];
    sizes.push(s - 1);
    let mut c = TwoColoring::all_blue(order)?;
    let mut start = 0;
    for size in sizes {
        for u in start..start + size {
            for v in u + 1..start + size {
                c.set_red(u, v)?;
            }
        }
        start += size;
    }
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub order: usize,
    pub n: usize,
    pub t: usize,
    pub m: usize,
    pub largest_red_component: usize,
    pub no_red_connected_n: bool,
    pub blue_tkm: Option<Vec<Vec<usize>>>,
    pub pass: bool,
}

/// Checks that no connected red subgraph on `n` vertices exists (every red
/// component is smaller than `n`) and that there is no blue `tK_m`.
pub fn verify_extremal(c: &TwoColoring, n: usize, t: usize, m: usize) -> ExtremalReport {
    let largest = c
        .red_graph()
        .components()
        .iter()
        .map(Vec::len)
        .max()
        .unwrap_or(0);
    let blue = find_blue_tkm(c, t, m);
    let no_red = largest < n;
    ExtremalReport {
        order: c.order(),
        n,
        t,
        m,
        largest_red_component: largest,
        no_red_connected_n: no_red,
        pass: no_red && blue.is_none(),
        blue_tkm: blue,
    }
}

/// Red vertices reachable from `v` as a bitmask over `rows` (at most 64
/// vertices).
pub(crate) fn component_mask(rows: &[u64], v: usize) -> u64 {
    let mut seen = 1u64 << v;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for u in bits::iter_word(frontier) {
            next |= rows[u];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn profiles() {
        let two_k3 = disjoint_cliques(2, 3).unwrap();
        assert_eq!(
            chromatic_profile(&two_k3).unwrap(),
            ChromaticProfile { chi: 3, surplus: 2 }
        );
        assert_eq!(
            chromatic_profile(&complete(4).unwrap()).unwrap(),
            ChromaticProfile { chi: 4, surplus: 1 }
        );
        assert_eq!(
            chromatic_profile(&SimpleGraph::empty(5).unwrap()).unwrap(),
            ChromaticProfile { chi: 1, surplus: 5 }
        );
        assert!(chromatic_profile(&path(17).unwrap()).is_err());
    }

    #[test]
    fn burr_layout() {
        let c = burr_coloring(4, 3, 2).unwrap();
        assert_eq!(c.order(), 7);
        let sizes: Vec<usize> = c.red_graph().components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 3, 1]);
        let small = burr_coloring(3, 2, 1).unwrap();
        assert_eq!((small.order(), small.red_pairs()), (2, vec![(0, 1)]));
        assert!(burr_coloring(1, 2, 1).is_err());
        assert!(burr_coloring(2, 2, 3).is_err());
    }

    #[test]
    fn burr_is_extremal() {
        let c = burr_coloring(4, 3, 2).unwrap();
        assert!(verify_extremal(&c, 4, 2, 3).pass);
        assert!(find_blue_tkm(&c, 2, 3).is_none());
        assert!(find_red_subgraph(&c, &path(4).unwrap()).is_none());
        let red = TwoColoring::all_red(7).unwrap();
        let report = verify_extremal(&red, 4, 2, 3);
        assert_eq!((report.largest_red_component, report.pass), (7, false));
    }

    #[test]
    fn searches() {
        let red = TwoColoring::all_red(5).unwrap();
        let c4 = cycle(4).unwrap();
        assert!(find_red_subgraph(&red, &c4).unwrap().is_valid(&c4, red.red_graph()));
        assert!(find_blue_subgraph(&red, &c4).is_none());
        let blue = TwoColoring::all_blue(6).unwrap();
        assert_eq!(find_blue_tkm(&blue, 2, 3).unwrap().len(), 2);
    }

    #[test]
    fn hex_and_json_round_trip() {
        let c = burr_coloring(4, 3, 2).unwrap();
        let hex = c.to_hex();
        assert_eq!(hex.len(), 6);
        assert_eq!(TwoColoring::from_hex(7, &hex).unwrap(), c);
        let json = serde_json::to_string(&c).unwrap();
        assert!(json.starts_with("{\"N\":7,\"red\":[[0,1]"));
        assert_eq!(serde_json::from_str::<TwoColoring>(&json).unwrap(), c);
        // (0,1) red is the top bit.
        let k2 = TwoColoring::all_red(2).unwrap();
        assert_eq!(k2.to_hex(), "80");
        assert!(TwoColoring::from_hex(2, "81").is_err());
    }

    #[test]
    fn component_mask_follows_edges() {
        let rows = [0b10u64, 0b101, 0b10, 0];
        assert_eq!(component_mask(&rows, 0), 0b111);
        assert_eq!(component_mask(&rows, 3), 0b1000);
    }
}
