//! Undirected simple graphs over prime or abstract vertex labels, with
//! complements, triangle listing and exact k-coloring.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::is_prime;
use crate::error::{Error, Result};

/// A vertex label. Primes sort before tokens; primes by value, tokens
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Prime(u64),
    Token(String),
}

impl Label {
    pub fn prime(p: u64) -> Result<Label> {
        if is_prime(p) {
            Ok(Label::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn token(s: &str) -> Result<Label> {
        s.parse()
    }

    pub fn as_prime(&self) -> Option<u64> {
        match self {
            Label::Prime(p) => Some(*p),
            Label::Token(_) => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Prime(p) => write!(f, "{p}"),
            Label::Token(s) => f.write_str(s),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Label> {
        if s.is_empty() || s.chars().any(char::is_whitespace) {
            return Err(Error::InvalidLabel(s.to_string()));
        }
        if s.bytes().all(|b| b.is_ascii_digit()) {
            let n: u64 = s.parse().map_err(|_| Error::InvalidLabel(s.to_string()))?;
            return Label::prime(n);
        }
        Ok(Label::Token(s.to_string()))
    }
}

impl From<u64> for Label {
    /// Panics unless `p` is prime; meant for literals in code and tests.
    fn from(p: u64) -> Label {
        Label::prime(p).expect("prime label")
    }
}

impl From<&str> for Label {
    /// Panics on malformed labels; meant for literals in code and tests.
    fn from(s: &str) -> Label {
        s.parse().expect("valid label")
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Label, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn ordered(a: Label, b: Label) -> (Label, Label) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: BTreeSet<Label>,
    edges: BTreeSet<(Label, Label)>,
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    vertices: Vec<Label>,
    edges: Vec<(Label, Label)>,
}

impl Graph {
    pub fn new() -> Graph {
        Graph::default()
    }

    pub fn with_vertices<I, L>(vertices: I) -> Graph
    where
        I: IntoIterator<Item = L>,
        L: Into<Label>,
    {
        Graph {
            vertices: vertices.into_iter().map(Into::into).collect(),
            edges: BTreeSet::new(),
        }
    }

    /// Builds a graph from vertices and edges, rejecting loops and edges with
    /// unknown endpoints. Duplicate edges collapse.
    pub fn from_parts<V, E, L>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator<Item = L>,
        E: IntoIterator<Item = (L, L)>,
        L: Into<Label>,
    {
        let mut g = Graph::with_vertices(vertices);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: impl Into<Label>) {
        self.vertices.insert(v.into());
    }

    pub fn add_edge(&mut self, a: impl Into<Label>, b: impl Into<Label>) -> Result<()> {
        let (a, b) = (a.into(), b.into());
        if a == b {
            return Err(Error::SelfLoop(a.to_string()));
        }
        for v in [&a, &b] {
            if !self.vertices.contains(v) {
                return Err(Error::UnknownVertex(v.to_string()));
            }
        }
        self.edges.insert(ordered(a, b));
        Ok(())
    }

    pub fn remove_edge(&mut self, a: &Label, b: &Label) -> bool {
        self.edges.remove(&ordered(a.clone(), b.clone()))
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Label> + '_ {
        self.vertices.iter()
    }

    pub fn vertex_set(&self) -> &BTreeSet<Label> {
        &self.vertices
    }

    /// Edges in canonical order, smaller label first.
    pub fn edges(&self) -> impl Iterator<Item = &(Label, Label)> + '_ {
        self.edges.iter()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, v: &Label) -> bool {
        self.vertices.contains(v)
    }

    pub fn has_edge(&self, a: &Label, b: &Label) -> bool {
        a != b && self.edges.contains(&ordered(a.clone(), b.clone()))
    }

    fn require(&self, v: &Label) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_string()))
        }
    }

    pub fn neighbors(&self, v: &Label) -> Result<BTreeSet<Label>> {
        self.require(v)?;
        Ok(self
            .edges
            .iter()
            .filter_map(|(a, b)| {
                if a == v {
                    Some(b.clone())
                } else if b == v {
                    Some(a.clone())
                } else {
                    None
                }
            })
            .collect())
    }

    pub fn degree(&self, v: &Label) -> Result<usize> {
        self.require(v)?;
        Ok(self.edges.iter().filter(|(a, b)| a == v || b == v).count())
    }

    /// True when every vertex is a prime label.
    pub fn is_prime_labeled(&self) -> bool {
        self.vertices.iter().all(|v| v.as_prime().is_some())
    }

    pub fn complement(&self) -> Graph {
        let vs: Vec<&Label> = self.vertices.iter().collect();
        let mut edges = BTreeSet::new();
        for (i, a) in vs.iter().enumerate() {
            for b in &vs[i + 1..] {
                let e = ((*a).clone(), (*b).clone());
                if !self.edges.contains(&e) {
                    edges.insert(e);
                }
            }
        }
        Graph {
            vertices: self.vertices.clone(),
            edges,
        }
    }

    pub fn induced_subgraph<'a, I>(&self, s: I) -> Result<Graph>
    where
        I: IntoIterator<Item = &'a Label>,
    {
        let mut keep = BTreeSet::new();
        for v in s {
            self.require(v)?;
            keep.insert(v.clone());
        }
        let edges = self
            .edges
            .iter()
            .filter(|(a, b)| keep.contains(a) && keep.contains(b))
            .cloned()
            .collect();
        Ok(Graph {
            vertices: keep,
            edges,
        })
    }

    /// Renames vertices through `map`; unmapped vertices keep their label.
    /// Fails if two vertices collide.
    pub fn relabel(&self, map: &BTreeMap<Label, Label>) -> Result<Graph> {
        let f = |v: &Label| map.get(v).cloned().unwrap_or_else(|| v.clone());
        let vertices: BTreeSet<Label> = self.vertices.iter().map(f).collect();
        if vertices.len() != self.vertices.len() {
            return Err(Error::Contract("relabeling is not injective".into()));
        }
        let edges = self.edges.iter().map(|(a, b)| ordered(f(a), f(b))).collect();
        Ok(Graph { vertices, edges })
    }

    /// All 3-cliques, each once, in lexicographic order.
    pub fn triangles(&self) -> Vec<Triangle> {
        let dense = Dense::new(self);
        let n = dense.labels.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if !dense.adj[i][j] {
                    continue;
                }
                for k in (j + 1)..n {
                    if dense.adj[i][k] && dense.adj[j][k] {
                        out.push(Triangle([
                            dense.labels[i].clone(),
                            dense.labels[j].clone(),
                            dense.labels[k].clone(),
                        ]));
                    }
                }
            }
        }
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        self.triangles().is_empty()
    }

    pub fn to_json(&self) -> String {
        let doc = GraphDoc {
            vertices: self.vertices.iter().cloned().collect(),
            edges: self.edges.iter().cloned().collect(),
        };
        serde_json::to_string(&doc).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<Graph> {
        let doc: GraphDoc = serde_json::from_str(s)?;
        Graph::from_parts(doc.vertices, doc.edges)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for (a, b) in &self.edges {
            out.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphDoc {
            vertices: self.vertices.iter().cloned().collect(),
            edges: self.edges.iter().cloned().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Graph, D::Error> {
        let doc = GraphDoc::deserialize(d)?;
        Graph::from_parts(doc.vertices, doc.edges).map_err(serde::de::Error::custom)
    }
}

/// Index-based view of a graph used by the search routines.
pub(crate) struct Dense {
    pub labels: Vec<Label>,
    pub index: BTreeMap<Label, usize>,
    pub adj: Vec<Vec<bool>>,
}

impl Dense {
    pub fn new(g: &Graph) -> Dense {
        let labels: Vec<Label> = g.vertices.iter().cloned().collect();
        let index: BTreeMap<Label, usize> =
            labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let n = labels.len();
        let mut adj = vec![vec![false; n]; n];
        for (a, b) in &g.edges {
            let (i, j) = (index[a], index[b]);
            adj[i][j] = true;
            adj[j][i] = true;
        }
        Dense { labels, index, adj }
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].iter().filter(|&&x| x).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triangle(pub [Label; 3]);

impl Triangle {
    pub fn new(a: Label, b: Label, c: Label) -> Triangle {
        let mut t = [a, b, c];
        t.sort();
        Triangle(t)
    }

    pub fn contains(&self, v: &Label) -> bool {
        self.0.contains(v)
    }

    pub fn is_in(&self, g: &Graph) -> bool {
        let [a, b, c] = &self.0;
        g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.0[0], self.0[1], self.0[2])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub k: usize,
    pub assignment: BTreeMap<Label, usize>,
}

impl Coloring {
    pub fn color(&self, v: &Label) -> Option<usize> {
        self.assignment.get(v).copied()
    }

    /// Total on `g`, within range, and no monochromatic edge.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.assignment.len() == g.vertex_count()
            && g.vertices()
                .all(|v| matches!(self.color(v), Some(c) if c < self.k))
            && g.edges().all(|(a, b)| self.color(a) != self.color(b))
    }

    pub fn class(&self, color: usize) -> BTreeSet<Label> {
        self.assignment
            .iter()
            .filter(|(_, &c)| c == color)
            .map(|(v, _)| v.clone())
            .collect()
    }

    /// Renames colors through `perm` (old color -> new color).
    pub fn permuted(&self, perm: &[usize]) -> Coloring {
        Coloring {
            k: self.k,
            assignment: self
                .assignment
                .iter()
                .map(|(v, &c)| (v.clone(), perm[c]))
                .collect(),
        }
    }
}

/// Deterministic backtracking k-coloring. Vertices are visited by
/// descending degree, ties by label; a new color is only opened when all
/// earlier ones are blocked.
pub fn k_color(g: &Graph, k: usize) -> Option<Coloring> {
    let dense = Dense::new(g);
    let n = dense.labels.len();
    if n > 0 && k == 0 {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| dense.degree(b).cmp(&dense.degree(a)).then(a.cmp(&b)));
    let mut colors = vec![usize::MAX; n];
    if !backtrack(&dense.adj, &order, 0, k, 0, &mut colors) {
        return None;
    }
    Some(Coloring {
        k,
        assignment: dense.labels.iter().cloned().zip(colors).collect(),
    })
}

fn backtrack(
    adj: &[Vec<bool>],
    order: &[usize],
    pos: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if (0..adj.len()).any(|u| adj[v][u] && colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if backtrack(adj, order, pos + 1, k, used.max(c + 1), colors) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}

/// A proper 3-coloring in which every neighbor of `c`, apart from the two
/// `excluded` vertices, receives the same color.
pub fn constrained_3color(
    gbar: &Graph,
    c: &Label,
    excluded: (&Label, &Label),
) -> Result<Option<Coloring>> {
    for v in [c, excluded.0, excluded.1] {
        gbar.require(v)?;
    }
    let group: Vec<Label> = gbar
        .neighbors(c)?
        .into_iter()
        .filter(|v| v != excluded.0 && v != excluded.1)
        .collect();
    let Some(rep) = group.first().cloned() else {
        return Ok(k_color(gbar, 3));
    };
    for (i, a) in group.iter().enumerate() {
        if group[i + 1..].iter().any(|b| gbar.has_edge(a, b)) {
            return Ok(None);
        }
    }
    // Merge the group into `rep`; a coloring of the quotient lifts back.
    let merged: BTreeSet<&Label> = group[1..].iter().collect();
    let mut quotient = Graph::with_vertices(
        gbar.vertices().filter(|v| !merged.contains(v)).cloned(),
    );
    for (a, b) in gbar.edges() {
        let a = if merged.contains(a) { &rep } else { a };
        let b = if merged.contains(b) { &rep } else { b };
        quotient.add_edge(a.clone(), b.clone())?;
    }
    Ok(k_color(&quotient, 3).map(|mut col| {
        let rc = col.assignment[&rep];
        for v in merged {
            col.assignment.insert(v.clone(), rc);
        }
        col
    }))
}

/// Largest graph the exhaustive chromatic-number oracle accepts.
pub const ORACLE_MAX_VERTICES: usize = 10;

/// Exact chromatic number by enumerating every color assignment up to
/// renaming of colors (restricted growth strings).
pub fn chromatic_number_oracle(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::SizeCap {
            what: "chromatic number oracle",
            limit: ORACLE_MAX_VERTICES as u64,
            actual: n as u64,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let dense = Dense::new(g);
    let mut a = vec![0usize; n];
    let mut best = n;
    loop {
        let blocks = a.iter().max().unwrap() + 1;
        if blocks < best {
            let proper = (0..n).all(|i| ((i + 1)..n).all(|j| !dense.adj[i][j] || a[i] != a[j]));
            if proper {
                best = blocks;
            }
        }
        // next restricted growth string: a[0] = 0, a[i] <= 1 + max(a[..i])
        let mut i = n - 1;
        loop {
            if i == 0 {
                return Ok(best);
            }
            let prefix_max = a[..i].iter().max().copied().unwrap();
            if a[i] <= prefix_max {
                a[i] += 1;
                for x in &mut a[i + 1..] {
                    *x = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let mut g = Graph::with_vertices(names.iter().map(|s| s.as_str()));
        for i in 0..n {
            g.add_edge(names[i].as_str(), names[(i + 1) % n].as_str()).unwrap();
        }
        g
    }

    fn complete(labels: &[&str]) -> Graph {
        Graph::with_vertices(labels.iter().copied()).complement()
    }

    #[test]
    fn labels_parse_and_order() {
        assert_eq!("7".parse::<Label>().unwrap(), Label::Prime(7));
        assert!(matches!("9".parse::<Label>(), Err(Error::NotPrime(9))));
        assert!(matches!("0".parse::<Label>(), Err(Error::NotPrime(0))));
        assert!("".parse::<Label>().is_err());
        assert_eq!("p1".parse::<Label>().unwrap(), Label::Token("p1".into()));
        let mut v: Vec<Label> = vec!["b".into(), 13.into(), "a".into(), 2.into()];
        v.sort();
        assert_eq!(v, vec![2.into(), 13.into(), "a".into(), "b".into()]);
    }

    #[test]
    fn complement_of_empty_is_complete() {
        let g = Graph::with_vertices([2u64, 3, 5]);
        let c = g.complement();
        assert_eq!(c.edge_count(), 3);
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn rejects_loops_and_unknown_vertices() {
        let mut g = Graph::with_vertices(["a", "b"]);
        assert!(matches!(g.add_edge("a", "a"), Err(Error::SelfLoop(_))));
        assert!(matches!(g.add_edge("a", "z"), Err(Error::UnknownVertex(_))));
        assert!(g.degree(&"z".into()).is_err());
        assert!(g.induced_subgraph([&Label::from("z")]).is_err());
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(complete(&["a", "b", "c", "d"]).triangles().len(), 4);
        assert!(cycle(5).triangles().is_empty());
    }

    #[test]
    fn coloring_small_cases() {
        let c5 = cycle(5);
        let col = k_color(&c5, 3).unwrap();
        assert!(col.is_proper(&c5));
        assert!(k_color(&c5, 2).is_none());
        let k4 = complete(&["a", "b", "c", "d"]);
        assert!(k_color(&k4, 3).is_none());
        assert_eq!(chromatic_number_oracle(&k4).unwrap(), 4);
        assert_eq!(chromatic_number_oracle(&Graph::new()).unwrap(), 0);
        assert_eq!(chromatic_number_oracle(&Graph::with_vertices(["x"])).unwrap(), 1);
        assert_eq!(chromatic_number_oracle(&c5).unwrap(), 3);
    }

    #[test]
    fn oracle_enforces_cap() {
        assert!(matches!(
            chromatic_number_oracle(&cycle(11)),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn constrained_coloring_on_lone_triangle() {
        let t = complete(&["a", "b", "c"]);
        let col = constrained_3color(&t, &"c".into(), (&"a".into(), &"b".into()))
            .unwrap()
            .unwrap();
        assert!(col.is_proper(&t));
    }

    #[test]
    fn json_round_trip() {
        let s = r#"{"vertices":["2","3","7","p1"],"edges":[["2","3"],["3","7"]]}"#;
        let g = Graph::from_json(s).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
        assert!(Graph::from_json(r#"{"vertices":["4"],"edges":[]}"#).is_err());
        assert!(g.to_dot().starts_with("graph {"));
    }
}
