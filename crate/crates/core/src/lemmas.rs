//! Witness finders for the auxiliary lemmas: red path extension, the
//! matching/biclique dichotomy, and cliques in complements.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds;
use crate::colorings::{find_subgraph, TwoColoring};
use crate::embed::{self, Host};
use crate::graph::{families, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("a = {a} < b(c-1) + d = {need}; no outcome is guaranteed")]
    Refused { a: usize, need: usize },
    #[error("no outcome found although one is guaranteed")]
    NoOutcome,
}

/// A coloring of `K_{a+b}` with `x_i = i - 1` for `i <= a` and
/// `y_j = a + j - 1`, whose spine `x_1 x_2 ... x_a` is red.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathExtensionInstance {
    pub coloring: TwoColoring,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl PathExtensionInstance {
    pub fn new(coloring: TwoColoring, a: usize, b: usize, c: usize, d: usize) -> Result<Self, LemmaError> {
        let inst = Self {
            coloring,
            a,
            b,
            c,
            d,
        };
        inst.check()?;
        Ok(inst)
    }

    fn check(&self) -> Result<(), LemmaError> {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        if a == 0 || c == 0 || d == 0 {
            return Err(LemmaError::InvalidInstance("a, c and d must be positive".into()));
        }
        if self.coloring.order() != a + b {
            return Err(LemmaError::InvalidInstance(format!(
                "coloring has {} vertices, expected a + b = {}",
                self.coloring.order(),
                a + b
            )));
        }
        if let Some(i) = (1..a).find(|&i| !self.coloring.is_red(i - 1, i)) {
            return Err(LemmaError::InvalidInstance(format!(
                "spine edge x{}x{} is not red",
                i,
                i + 1
            )));
        }
        let need = b * (c - 1) + d;
        if a < need {
            return Err(LemmaError::Refused { a, need });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum PathExtensionOutcome {
    /// Red path from `x_1` to `x_a` with exactly `a` edges.
    ExtendedPath { path: Vec<usize> },
    /// `c` vertices spanning only blue pairs.
    BlueClique { vertices: Vec<usize> },
    /// `d` vertices of `X` joined in blue to all of `Y`.
    BlueDominators { vertices: Vec<usize> },
}

impl PathExtensionOutcome {
    pub fn validate(&self, inst: &PathExtensionInstance) -> Result<(), String> {
        let col = &inst.coloring;
        let n = col.order();
        let distinct = |vs: &[usize]| {
            let mut seen = vec![false; n];
            vs.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
        };
        match self {
            Self::ExtendedPath { path } => {
                if path.len() != inst.a + 1 || !distinct(path) {
                    return Err("path must have a + 1 distinct vertices".into());
                }
                if path[0] != 0 || path[inst.a] != inst.a - 1 {
                    return Err("path must run from x_1 to x_a".into());
                }
                if path.windows(2).any(|w| !col.is_red(w[0], w[1])) {
                    return Err("path has a blue edge".into());
                }
            }
            Self::BlueClique { vertices } => {
                if vertices.len() != inst.c || !distinct(vertices) {
                    return Err("clique must have c distinct vertices".into());
                }
                for (i, &u) in vertices.iter().enumerate() {
                    if vertices[i + 1..].iter().any(|&v| !col.is_blue(u, v)) {
                        return Err("clique has a red pair".into());
                    }
                }
            }
            Self::BlueDominators { vertices } => {
                if vertices.len() != inst.d || !distinct(vertices) {
                    return Err("need d distinct vertices".into());
                }
                for &x in vertices {
                    if x >= inst.a {
                        return Err(format!("{x} is not in X"));
                    }
                    if (inst.a..n).any(|y| !col.is_blue(x, y)) {
                        return Err(format!("{x} has a red edge to Y"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Tries the three outcomes in the order extended path, blue clique, blue
/// dominators and returns the first that exists.
pub fn path_extension_witness(inst: &PathExtensionInstance) -> Result<PathExtensionOutcome, LemmaError> {
    inst.check()?;
    let col = &inst.coloring;
    let (a, n) = (inst.a, col.order());
    if a >= 2 && inst.b >= 1 {
        let mut path = vec![0];
        let mut used = vec![false; n];
        used[0] = true;
        if red_path(col, a - 1, a, &mut path, &mut used) {
            return Ok(PathExtensionOutcome::ExtendedPath { path });
        }
    }
    let blue = col.blue_graph();
    let host = Host::of(&blue);
    if let Some(vertices) = embed::find_clique(host, &host.full_mask(), inst.c) {
        return Ok(PathExtensionOutcome::BlueClique { vertices });
    }
    let dominators: Vec<usize> = (0..a)
        .filter(|&x| (a..n).all(|y| col.is_blue(x, y)))
        .take(inst.d)
        .collect();
    if dominators.len() == inst.d {
        return Ok(PathExtensionOutcome::BlueDominators {
            vertices: dominators,
        });
    }
    Err(LemmaError::NoOutcome)
}

/// Extends `path` by red edges to a path ending at `target` with exactly
/// `edges` edges.
fn red_path(col: &TwoColoring, target: usize, edges: usize, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let last = *path.last().expect("nonempty");
    if path.len() == edges + 1 {
        return last == target;
    }
    let last_step = path.len() == edges;
    for v in col.red_graph().neighbors(last) {
        if used[v] || (v == target) != last_step {
            continue;
        }
        used[v] = true;
        path.push(v);
        if red_path(col, target, edges, path, used) {
            return true;
        }
        path.pop();
        used[v] = false;
    }
    false
}

/// A red/blue coloring of `K_{a,b}`: `red[x]` is the bitmask of the `y`
/// joined to `x` in red.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteColoring {
    pub a: usize,
    pub b: usize,
    pub red: Vec<u64>,
}

impl BipartiteColoring {
    pub fn new(a: usize, b: usize, red: Vec<u64>) -> Result<Self, LemmaError> {
        if a > b || b > 64 || red.len() != a {
            return Err(LemmaError::InvalidInstance(format!(
                "need a <= b <= 64 and one row per x, got a={a}, b={b}, rows={}",
                red.len()
            )));
        }
        let mask = if b == 64 { u64::MAX } else { (1u64 << b) - 1 };
        if red.iter().any(|r| r & !mask != 0) {
            return Err(LemmaError::InvalidInstance("row has bits beyond b".into()));
        }
        Ok(Self { a, b, red })
    }

    pub fn is_red(&self, x: usize, y: usize) -> bool {
        self.red[x] >> y & 1 == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum HallOutcome {
    /// `a` disjoint red edges `(x, y)`.
    RedMatching { edges: Vec<(usize, usize)> },
    /// Blue `K_{c+1, b-c}` with the `c + 1` vertices `xs` in `X`.
    BlueBiclique { c: usize, xs: Vec<usize>, ys: Vec<usize> },
}

impl HallOutcome {
    pub fn validate(&self, col: &BipartiteColoring) -> Result<(), String> {
        match self {
            Self::RedMatching { edges } => {
                if edges.len() != col.a {
                    return Err(format!("matching has {} edges, expected {}", edges.len(), col.a));
                }
                let (mut xs, mut ys) = (0u64, 0u64);
                for &(x, y) in edges {
                    if x >= col.a || y >= col.b || !col.is_red(x, y) {
                        return Err(format!("({x}, {y}) is not a red edge"));
                    }
                    if xs >> x & 1 == 1 || ys >> y & 1 == 1 {
                        return Err("edges overlap".into());
                    }
                    xs |= 1 << x;
                    ys |= 1 << y;
                }
            }
            Self::BlueBiclique { c, xs, ys } => {
                if *c >= col.a.max(1) || xs.len() != c + 1 || ys.len() != col.b - c {
                    return Err(format!("wrong part sizes for c = {c}"));
                }
                let mut sx = xs.clone();
                sx.sort_unstable();
                sx.dedup();
                let mut sy = ys.clone();
                sy.sort_unstable();
                sy.dedup();
                if sx.len() != xs.len() || sy.len() != ys.len() {
                    return Err("repeated vertices".into());
                }
                for &x in xs {
                    for &y in ys {
                        if x >= col.a || y >= col.b || col.is_red(x, y) {
                            return Err(format!("({x}, {y}) is not a blue edge"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// A red matching covering `X`, or else a blue biclique built from a set
/// `S` of `X` violating the marriage condition: `S` against every `y`
/// outside the red neighborhood of `S`.
pub fn hall_witness(col: &BipartiteColoring) -> HallOutcome {
    let mut match_y: Vec<Option<usize>> = vec![None; col.b];
    for x in 0..col.a {
        let mut seen = vec![false; col.b];
        if !augment(col, x, &mut match_y, &mut seen) {
            // Alternating tree from the unmatched x.
            let mut in_s = vec![false; col.a];
            let mut in_t = 0u64;
            let mut stack = vec![x];
            in_s[x] = true;
            while let Some(u) = stack.pop() {
                for y in 0..col.b {
                    if col.is_red(u, y) && in_t >> y & 1 == 0 {
                        in_t |= 1 << y;
                        let partner = match_y[y].expect("no augmenting path");
                        if !in_s[partner] {
                            in_s[partner] = true;
                            stack.push(partner);
                        }
                    }
                }
            }
            let xs: Vec<usize> = (0..col.a).filter(|&v| in_s[v]).collect();
            let c = xs.len() - 1;
            let ys: Vec<usize> = (0..col.b)
                .filter(|&y| in_t >> y & 1 == 0)
                .take(col.b - c)
                .collect();
            return HallOutcome::BlueBiclique { c, xs, ys };
        }
    }
    let mut edges: Vec<(usize, usize)> = match_y
        .iter()
        .enumerate()
        .filter_map(|(y, x)| x.map(|x| (x, y)))
        .collect();
    edges.sort_unstable();
    HallOutcome::RedMatching { edges }
}

fn augment(col: &BipartiteColoring, x: usize, match_y: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for y in 0..col.b {
        if !col.is_red(x, y) || seen[y] {
            continue;
        }
        seen[y] = true;
        let free = match match_y[y] {
            None => true,
            Some(other) => augment(col, other, match_y, seen),
        };
        if free {
            match_y[y] = Some(x);
            return true;
        }
    }
    false
}

/// A clique of `size` vertices in the complement of `g`, if one exists.
pub fn complement_clique(g: &SimpleGraph, size: usize) -> Result<Option<Vec<usize>>, LemmaError> {
    if size > g.vertex_count() {
        return Err(LemmaError::InvalidInstance(format!(
            "size {size} exceeds {} vertices",
            g.vertex_count()
        )));
    }
    let comp = g.complement();
    if size <= 2 {
        // Small sizes go through the generic embedding to stay exact for
        // edge cases such as an edgeless complement.
        let k = families::complete(size.max(1)).expect("small clique");
        return Ok(if size == 0 {
            Some(vec![])
        } else {
            find_subgraph(&comp, &k).map(|e| e.map)
        });
    }
    let host = Host::of(&comp);
    Ok(embed::find_clique(host, &host.full_mask(), size))
}

/// Edge count of the complement against the Turán bound for cliques of
/// `size` vertices, and whether the clique search agrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranCheck {
    pub complement_edges: usize,
    /// `(1 - 1/(size-1)) n^2 / 2` as `p/q`.
    pub turan_bound: String,
    pub forced: bool,
    pub clique: Option<Vec<usize>>,
    /// False only if the bound forces a clique that the search misses.
    pub consistent: bool,
}

pub fn turan_check(g: &SimpleGraph, size: usize) -> Result<TuranCheck, LemmaError> {
    if size < 2 {
        return Err(LemmaError::InvalidInstance("size must be at least 2".into()));
    }
    let n = g.vertex_count();
    let total = n * (n - 1) / 2;
    let complement_edges = total - g.edge_count();
    let bound = bounds::turan_bound(n as u64, (size - 1) as u64)
        .map_err(|e| LemmaError::InvalidInstance(e.to_string()))?;
    let forced = BigRational::from_integer(BigInt::from(complement_edges)) > bound;
    let clique = if size <= n {
        complement_clique(g, size)?
    } else {
        None
    };
    Ok(TuranCheck {
        complement_edges,
        turan_bound: bounds::format_rational(&bound),
        forced,
        consistent: !forced || clique.is_some(),
        clique,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn spine_instance(a: usize, b: usize, c: usize, d: usize, xy_red: bool, xx_red: bool) -> PathExtensionInstance {
        let mut col = TwoColoring::all_blue(a + b).unwrap();
        for u in 0..a + b {
            for v in u + 1..a + b {
                let red = if v < a {
                    v == u + 1 || xx_red
                } else if u < a {
                    xy_red
                } else {
                    false
                };
                if red {
                    col.set_red(u, v).unwrap();
                }
            }
        }
        PathExtensionInstance::new(col, a, b, c, d).unwrap()
    }

    #[test]
    fn all_red_extends() {
        let col = TwoColoring::all_red(6).unwrap();
        let inst = PathExtensionInstance::new(col, 5, 1, 3, 3).unwrap();
        let out = path_extension_witness(&inst).unwrap();
        assert!(matches!(out, PathExtensionOutcome::ExtendedPath { .. }));
        out.validate(&inst).unwrap();
    }

    #[test]
    fn blue_star_gives_dominators() {
        let inst = spine_instance(5, 1, 3, 3, false, true);
        let out = path_extension_witness(&inst).unwrap();
        assert_eq!(
            out,
            PathExtensionOutcome::BlueDominators {
                vertices: vec![0, 1, 2]
            }
        );
        out.validate(&inst).unwrap();
    }

    #[test]
    fn refuses_below_threshold() {
        let col = TwoColoring::all_red(6).unwrap();
        assert_eq!(
            PathExtensionInstance::new(col, 4, 2, 2, 3).unwrap_err(),
            LemmaError::Refused { a: 4, need: 5 }
        );
    }

    #[test]
    fn hall_examples() {
        let all_red = BipartiteColoring::new(2, 3, vec![0b111, 0b111]).unwrap();
        let out = hall_witness(&all_red);
        assert!(matches!(out, HallOutcome::RedMatching { ref edges } if edges.len() == 2));
        out.validate(&all_red).unwrap();

        let all_blue = BipartiteColoring::new(2, 3, vec![0, 0]).unwrap();
        let out = hall_witness(&all_blue);
        assert_eq!(
            out,
            HallOutcome::BlueBiclique {
                c: 0,
                xs: vec![0],
                ys: vec![0, 1, 2]
            }
        );
        out.validate(&all_blue).unwrap();

        // Both x see only y_0 in red.
        let squeezed = BipartiteColoring::new(2, 3, vec![0b001, 0b001]).unwrap();
        let out = hall_witness(&squeezed);
        assert_eq!(
            out,
            HallOutcome::BlueBiclique {
                c: 1,
                xs: vec![0, 1],
                ys: vec![1, 2]
            }
        );
        out.validate(&squeezed).unwrap();
    }

    #[test]
    fn complement_cliques() {
        let p = path(63).unwrap();
        let c = complement_clique(&p, 4).unwrap().unwrap();
        for (i, &u) in c.iter().enumerate() {
            for &v in &c[i + 1..] {
                assert!(!p.has_edge(u, v));
            }
        }
        assert_eq!(complement_clique(&complete(5).unwrap(), 2).unwrap(), None);
        assert_eq!(
            complement_clique(&SimpleGraph::empty(4).unwrap(), 4).unwrap().map(|v| v.len()),
            Some(4)
        );
        let check = turan_check(&p, 4).unwrap();
        assert!(check.forced && check.consistent);
    }
}
