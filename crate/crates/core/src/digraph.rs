//! Orientations of complement graphs: orienting along a 3-coloring,
//! directed 3-path detection, I/D/O colorings and the exhaustive
//! orientation search behind the Gallai–Hasse–Roy–Vitaver theorem.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{k_color, Coloring, Dense, Graph, Label};

/// Color classes of an orientation without directed 3-paths. As color
/// indices O = 0, D = 1, I = 2, and arcs run from lower to higher class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Ido {
    O,
    D,
    I,
}

impl Ido {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Ido> {
        [Ido::O, Ido::D, Ido::I].get(i).copied()
    }
}

/// Frobenius digraph arcs on the prime triple of PSL(2,7): 2 <- 3 -> 7 and 7 -> 2.
pub const PSL27_ARCS: [(u64, u64); 3] = [(3, 2), (3, 7), (7, 2)];

/// Frobenius digraph arcs on the prime triple of PSL(2,17): 3 <- 2 -> 17 and 17 -> 3.
pub const PSL217_ARCS: [(u64, u64); 3] = [(2, 3), (2, 17), (17, 3)];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    base: Graph,
    arcs: BTreeSet<(Label, Label)>,
}

impl Orientation {
    /// Checks that `arcs` direct every base edge exactly once.
    pub fn new(base: Graph, arcs: impl IntoIterator<Item = (Label, Label)>) -> Result<Orientation> {
        let arcs: BTreeSet<(Label, Label)> = arcs.into_iter().collect();
        if arcs.len() != base.edge_count() {
            return Err(Error::Contract(format!(
                "{} arcs for {} edges",
                arcs.len(),
                base.edge_count()
            )));
        }
        for (u, v) in &arcs {
            if !base.has_edge(u, v) || arcs.contains(&(v.clone(), u.clone())) {
                return Err(Error::Contract(format!("arc {u} -> {v} does not match a base edge")));
            }
        }
        Ok(Orientation { base, arcs })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn arcs(&self) -> impl Iterator<Item = &(Label, Label)> + '_ {
        self.arcs.iter()
    }

    pub fn has_arc(&self, u: &Label, v: &Label) -> bool {
        self.arcs.contains(&(u.clone(), v.clone()))
    }

    pub fn out_degree(&self, v: &Label) -> usize {
        self.arcs.iter().filter(|(u, _)| u == v).count()
    }

    pub fn in_degree(&self, v: &Label) -> usize {
        self.arcs.iter().filter(|(_, w)| w == v).count()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph {\n");
        for v in self.base.vertices() {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for (u, v) in &self.arcs {
            out.push_str(&format!("  \"{u}\" -> \"{v}\";\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Directs each edge from the lower to the higher color class (O < D < I).
pub fn orient_by_coloring(gbar: &Graph, coloring: &Coloring) -> Result<Orientation> {
    if coloring.k > 3 || !coloring.is_proper(gbar) {
        return Err(Error::ImproperColoring(
            "orientation needs a proper coloring with classes O, D, I".into(),
        ));
    }
    let arcs = gbar.edges().map(|(a, b)| {
        if coloring.assignment[a] < coloring.assignment[b] {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        }
    });
    Orientation::new(gbar.clone(), arcs.collect::<Vec<_>>())
}

/// Some walk v0 -> v1 -> v2 -> v3 along three arcs, first in label order.
/// A directed triangle qualifies (then v3 = v0): it traces three
/// consecutive arcs, and forbidding it is what makes I/D/O proper.
pub fn directed_3path(o: &Orientation) -> Option<[Label; 4]> {
    let mut out: BTreeMap<&Label, Vec<&Label>> = BTreeMap::new();
    for (u, v) in &o.arcs {
        out.entry(u).or_default().push(v);
    }
    for (v0, v1) in &o.arcs {
        for v2 in out.get(v1).into_iter().flatten() {
            if let Some(v3) = out.get(v2).and_then(|s| s.first()) {
                return Some([v0.clone(), v1.clone(), (*v2).clone(), (*v3).clone()]);
            }
        }
    }
    None
}

/// Labels sinks and isolated vertices I, sources O, everything else D.
pub fn ido_coloring(o: &Orientation) -> Result<Coloring> {
    if let Some(p) = directed_3path(o) {
        return Err(Error::Contract(format!(
            "orientation has a directed 3-path {} -> {} -> {} -> {}",
            p[0], p[1], p[2], p[3]
        )));
    }
    let assignment = o
        .base
        .vertices()
        .map(|v| {
            let class = match (o.in_degree(v), o.out_degree(v)) {
                (_, 0) => Ido::I,
                (0, _) => Ido::O,
                _ => Ido::D,
            };
            (v.clone(), class.index())
        })
        .collect();
    Ok(Coloring { k: 3, assignment })
}

/// Largest graph handed to the exhaustive orientation search.
pub const EXHAUSTIVE_MAX_VERTICES: usize = 12;

/// An orientation with no directed 3-path, if one exists. Derived from a
/// 3-coloring when there is one; otherwise confirmed absent by exhaustive
/// search (bounded by [`EXHAUSTIVE_MAX_VERTICES`]).
pub fn orientation_without_3paths(gbar: &Graph) -> Result<Option<Orientation>> {
    if let Some(col) = k_color(gbar, 3) {
        return orient_by_coloring(gbar, &col).map(Some);
    }
    exhaustive_orientation_without_3paths(gbar)
}

/// Searches all 2^|E| orientations, pruning a branch as soon as its fixed
/// arcs contain a directed 3-path. Independent of any coloring.
pub fn exhaustive_orientation_without_3paths(gbar: &Graph) -> Result<Option<Orientation>> {
    let n = gbar.vertex_count();
    if n > EXHAUSTIVE_MAX_VERTICES {
        return Err(Error::SizeCap {
            what: "exhaustive orientation search",
            limit: EXHAUSTIVE_MAX_VERTICES as u64,
            actual: n as u64,
        });
    }
    let dense = Dense::new(gbar);
    let edges: Vec<(usize, usize)> = gbar
        .edges()
        .map(|(a, b)| (dense.index[a], dense.index[b]))
        .collect();
    let mut out = vec![0u32; n];
    let mut inn = vec![0u32; n];
    let mut chosen = Vec::with_capacity(edges.len());
    if !search(&edges, 0, &mut out, &mut inn, &mut chosen) {
        return Ok(None);
    }
    let arcs = chosen
        .into_iter()
        .map(|(u, v)| (dense.labels[u].clone(), dense.labels[v].clone()));
    Orientation::new(gbar.clone(), arcs.collect::<Vec<_>>()).map(Some)
}

// out/inn hold bitmasks of current out- and in-neighbours.
fn search(
    edges: &[(usize, usize)],
    pos: usize,
    out: &mut [u32],
    inn: &mut [u32],
    chosen: &mut Vec<(usize, usize)>,
) -> bool {
    if pos == edges.len() {
        return true;
    }
    let (a, b) = edges[pos];
    for (u, v) in [(a, b), (b, a)] {
        if creates_3path(out, inn, u, v) {
            continue;
        }
        out[u] |= 1 << v;
        inn[v] |= 1 << u;
        chosen.push((u, v));
        if search(edges, pos + 1, out, inn, chosen) {
            return true;
        }
        chosen.pop();
        out[u] &= !(1 << v);
        inn[v] &= !(1 << u);
    }
    false
}

// Would adding u -> v complete a walk of three arcs through it?
fn creates_3path(out: &[u32], inn: &[u32], u: usize, v: usize) -> bool {
    let preds = inn[u];
    let succs = out[v];
    // x -> u -> v -> y
    if preds != 0 && succs != 0 {
        return true;
    }
    // x -> y -> u -> v
    if bits(preds).any(|y| inn[y] != 0) {
        return true;
    }
    // u -> v -> x -> y
    bits(succs).any(|x| out[x] != 0)
}

fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}
