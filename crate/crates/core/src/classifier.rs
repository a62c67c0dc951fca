//! Decision procedures for the prime-graph families, with certificates on
//! acceptance and concrete witnesses on rejection.
//!
//! Every procedure works on the complement Γ̄ of the input prime graph.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{constrained_3color, k_color, Coloring, Graph, Label, Triangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Family {
    Solvable,
    Psl27,
    U33,
    A6,
    U42,
    Psl28,
    Psl33,
    Psl217,
    /// At least two nonabelian composition factors.
    Multi,
}

/// The shape of the complement condition a family imposes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// 3-colorable and triangle-free.
    TriangleFree,
    /// 3-colorable with at most one triangle, which is isolated.
    IsolatedTriangle,
    /// Triangle-free and 3-colorable, or one triangle {a,b,c} where only
    /// c reaches outside and c's outside neighbors can share a color.
    Hub,
}

/// Primes a triangle {a,b,c} must map to in the hub families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HubPrimes {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Solvable,
        Family::Psl27,
        Family::U33,
        Family::A6,
        Family::U42,
        Family::Psl28,
        Family::Psl33,
        Family::Psl217,
        Family::Multi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Solvable => "SOLVABLE",
            Family::Psl27 => "PSL27",
            Family::U33 => "U33",
            Family::A6 => "A6",
            Family::U42 => "U42",
            Family::Psl28 => "PSL28",
            Family::Psl33 => "PSL33",
            Family::Psl217 => "PSL217",
            Family::Multi => "MULTI",
        }
    }

    /// The simple group T of the family, as a builtin name.
    pub fn group(self) -> Option<&'static str> {
        match self {
            Family::Solvable | Family::Multi => None,
            Family::Psl27 => Some("PSL(2,7)"),
            Family::U33 => Some("U3(3)"),
            Family::A6 => Some("A6"),
            Family::U42 => Some("U4(2)"),
            Family::Psl28 => Some("PSL(2,8)"),
            Family::Psl33 => Some("PSL(3,3)"),
            Family::Psl217 => Some("PSL(2,17)"),
        }
    }

    /// π(T), sorted.
    pub fn triple(self) -> Option<[u64; 3]> {
        match self {
            Family::Solvable | Family::Multi => None,
            Family::Psl27 | Family::U33 | Family::Psl28 => Some([2, 3, 7]),
            Family::A6 | Family::U42 => Some([2, 3, 5]),
            Family::Psl33 => Some([2, 3, 13]),
            Family::Psl217 => Some([2, 3, 17]),
        }
    }

    pub fn condition(self) -> Condition {
        match self {
            Family::A6 | Family::Psl28 => Condition::IsolatedTriangle,
            Family::Psl27 | Family::Psl217 => Condition::Hub,
            _ => Condition::TriangleFree,
        }
    }

    /// Role primes for the hub families. b is the source of T's Frobenius
    /// digraph, c the middle vertex and a the sink.
    pub fn hub_primes(self) -> Option<HubPrimes> {
        match self {
            Family::Psl27 => Some(HubPrimes { a: 2, b: 3, c: 7 }),
            Family::Psl217 => Some(HubPrimes { a: 3, b: 2, c: 17 }),
            _ => None,
        }
    }

    /// The complement edge whose removal must leave a triangle-free,
    /// 3-colorable graph.
    pub fn designated_edge(self) -> Option<(u64, u64)> {
        match self {
            Family::Psl27 => Some((2, 7)),
            Family::A6 => Some((3, 5)),
            Family::Psl28 => Some((3, 7)),
            Family::Psl217 => Some((3, 17)),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts family names (`psl27`, `MULTI`) and group spellings (`PSL(2,7)`).
    fn from_str(s: &str) -> Result<Family> {
        let slug: String = s
            .chars()
            .filter(char::is_ascii_alphanumeric)
            .map(|c| c.to_ascii_lowercase())
            .collect();
        Family::ALL
            .into_iter()
            .find(|f| f.name().to_ascii_lowercase() == slug)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Accept,
    Reject,
}

/// How a complement triangle is matched to π(T).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleRoles {
    pub a: Label,
    pub b: Label,
    pub c: Label,
    pub primes: BTreeMap<Label, u64>,
    /// Neighbors of c outside the triangle; empty unless the family has a hub.
    pub hub_neighbors: Vec<Label>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    /// Proper 3-coloring of Γ̄. With a hub triangle its classes are O, D, I
    /// (0, 1, 2): c in D, a in I, b in O and the hub neighbors in I.
    pub coloring: Coloring,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangle: Option<TriangleRoles>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Triangle { triangle: Triangle },
    /// A vertex set whose induced subgraph has no proper 3-coloring;
    /// minimal under vertex deletion.
    NotThreeColorable { core: Vec<Label> },
    SecondTriangle { first: Triangle, second: Triangle },
    TriangleNotIsolated { triangle: Triangle, vertex: Label, neighbor: Label },
    WrongTriangle { triangle: Triangle, expected: [u64; 3] },
    SeveralHubs { triangle: Triangle, vertices: Vec<Label> },
    WrongHub { triangle: Triangle, hub: Label, expected: u64 },
    NoConstrainedColoring { triangle: Triangle, c: Label, hub_neighbors: Vec<Label> },
    HighDegree { vertex: Label, degree: usize },
    ForbiddenEdge { vertex: Label, neighbor: Label },
}

fn join(vs: &[Label]) -> String {
    vs.iter().map(Label::to_string).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Triangle { triangle } => write!(f, "complement triangle {triangle}"),
            Witness::NotThreeColorable { core } => {
                write!(f, "not 3-colorable: no 3-coloring of {{{}}}", join(core))
            }
            Witness::SecondTriangle { first, second } => {
                write!(f, "two complement triangles {first} and {second}")
            }
            Witness::TriangleNotIsolated { triangle, vertex, neighbor } => write!(
                f,
                "triangle {triangle} is not isolated: edge {vertex}-{neighbor}"
            ),
            Witness::WrongTriangle { triangle, expected } => write!(
                f,
                "triangle {triangle} is not {{{}, {}, {}}}",
                expected[0], expected[1], expected[2]
            ),
            Witness::SeveralHubs { triangle, vertices } => write!(
                f,
                "triangle {triangle} has outside neighbors at {{{}}}",
                join(vertices)
            ),
            Witness::WrongHub { triangle, hub, expected } => write!(
                f,
                "triangle {triangle} reaches outside at {hub}, not at {expected}"
            ),
            Witness::NoConstrainedColoring { c, hub_neighbors, .. } => write!(
                f,
                "no constrained 3-coloring: neighbors {{{}}} of {c} cannot share a color",
                join(hub_neighbors)
            ),
            Witness::HighDegree { vertex, degree } => {
                write!(f, "vertex {vertex} has complement degree {degree} > 2")
            }
            Witness::ForbiddenEdge { vertex, neighbor } => {
                write!(f, "complement edge {vertex}-{neighbor} with {neighbor} not in {{2, 13}}")
            }
        }
    }
}

impl Witness {
    /// Whether the witnessed fact holds in `gbar`.
    pub fn holds(&self, gbar: &Graph) -> bool {
        let outside = |t: &Triangle, v: &Label| -> Vec<Label> {
            gbar.neighbors(v)
                .map(|n| n.into_iter().filter(|w| !t.contains(w)).collect())
                .unwrap_or_default()
        };
        match self {
            Witness::Triangle { triangle } => triangle.is_in(gbar),
            Witness::NotThreeColorable { core } => {
                core.iter().all(|v| gbar.contains(v))
                    && gbar
                        .induced_subgraph(core)
                        .map(|g| k_color(&g, 3).is_none())
                        .unwrap_or(false)
            }
            Witness::SecondTriangle { first, second } => {
                first != second && first.is_in(gbar) && second.is_in(gbar)
            }
            Witness::TriangleNotIsolated { triangle, vertex, neighbor } => {
                triangle.is_in(gbar)
                    && triangle.contains(vertex)
                    && !triangle.contains(neighbor)
                    && gbar.has_edge(vertex, neighbor)
            }
            Witness::WrongTriangle { triangle, expected } => {
                let primes: Vec<Option<u64>> = triangle.0.iter().map(Label::as_prime).collect();
                triangle.is_in(gbar) && primes != expected.map(Some).to_vec()
            }
            Witness::SeveralHubs { triangle, vertices } => {
                triangle.is_in(gbar)
                    && vertices.len() >= 2
                    && vertices
                        .iter()
                        .all(|v| triangle.contains(v) && !outside(triangle, v).is_empty())
            }
            Witness::WrongHub { triangle, hub, expected } => {
                triangle.is_in(gbar)
                    && triangle.contains(hub)
                    && !outside(triangle, hub).is_empty()
                    && hub.as_prime() != Some(*expected)
            }
            Witness::NoConstrainedColoring { triangle, c, hub_neighbors } => {
                if !triangle.is_in(gbar) || !triangle.contains(c) {
                    return false;
                }
                let others: Vec<&Label> = triangle.0.iter().filter(|v| *v != c).collect();
                outside(triangle, c) == *hub_neighbors
                    && matches!(constrained_3color(gbar, c, (others[0], others[1])), Ok(None))
            }
            Witness::HighDegree { vertex, degree } => {
                *degree > 2 && gbar.degree(vertex).ok() == Some(*degree)
            }
            Witness::ForbiddenEdge { vertex, neighbor } => {
                vertex.as_prime() == Some(3)
                    && gbar.has_edge(vertex, neighbor)
                    && !matches!(neighbor.as_prime(), Some(2 | 13))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub family: Family,
    pub decision: Decision,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Set for the edge-removal check: the complement edge taken out
    /// before testing.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub removed_edge: Option<(Label, Label)>,
}

impl Verdict {
    fn accept(family: Family, certificate: Certificate) -> Verdict {
        Verdict {
            family,
            decision: Decision::Accept,
            certificate: Some(certificate),
            witness: None,
            removed_edge: None,
        }
    }

    fn reject(family: Family, witness: Witness) -> Verdict {
        Verdict {
            family,
            decision: Decision::Reject,
            certificate: None,
            witness: Some(witness),
            removed_edge: None,
        }
    }

    pub fn accepted(&self) -> bool {
        self.decision == Decision::Accept
    }

    /// Re-checks the certificate or witness against the prime graph
    /// `gamma`, independently of how it was found.
    pub fn check(&self, gamma: &Graph) -> Result<()> {
        let mut gbar = gamma.complement();
        let condition = match &self.removed_edge {
            Some((u, v)) => {
                gbar.remove_edge(u, v);
                Condition::TriangleFree
            }
            None => self.family.condition(),
        };
        let fail = |msg: String| Err(Error::Integrity(format!("{} verdict: {msg}", self.family)));
        match (self.decision, &self.certificate, &self.witness) {
            (Decision::Accept, Some(cert), None) => {
                check_certificate(&gbar, gamma.is_prime_labeled(), self.family, condition, cert)
                    .or_else(fail)
            }
            (Decision::Reject, None, Some(w)) => {
                if !w.holds(&gbar) {
                    return fail(format!("witness does not hold: {w}"));
                }
                if !witness_refutes(w, condition, gamma.is_prime_labeled()) {
                    return fail(format!("witness does not refute the condition: {w}"));
                }
                Ok(())
            }
            _ => fail("decision does not match its evidence".into()),
        }
    }
}

fn witness_refutes(w: &Witness, condition: Condition, prime_labeled: bool) -> bool {
    match (w, condition) {
        (Witness::NotThreeColorable { .. }, _) => true,
        (Witness::Triangle { .. }, Condition::TriangleFree) => true,
        (Witness::SecondTriangle { .. }, Condition::IsolatedTriangle | Condition::Hub) => true,
        (Witness::TriangleNotIsolated { .. }, Condition::IsolatedTriangle) => true,
        (Witness::WrongTriangle { .. }, Condition::IsolatedTriangle | Condition::Hub) => {
            prime_labeled
        }
        (Witness::SeveralHubs { .. } | Witness::NoConstrainedColoring { .. }, Condition::Hub) => {
            true
        }
        (Witness::WrongHub { .. }, Condition::Hub) => prime_labeled,
        _ => false,
    }
}

fn check_certificate(
    gbar: &Graph,
    prime_labeled: bool,
    family: Family,
    condition: Condition,
    cert: &Certificate,
) -> std::result::Result<(), String> {
    let col = &cert.coloring;
    if col.k != 3 || !col.is_proper(gbar) {
        return Err("coloring is not a proper 3-coloring of the complement".into());
    }
    let tris = gbar.triangles();
    let roles = match (condition, tris.as_slice(), &cert.triangle) {
        (_, [], None) => return Ok(()),
        (Condition::IsolatedTriangle | Condition::Hub, [t], Some(roles)) => {
            if Triangle::new(roles.a.clone(), roles.b.clone(), roles.c.clone()) != *t {
                return Err(format!("roles do not name the triangle {t}"));
            }
            roles
        }
        _ => return Err(format!("{} triangles do not fit the certificate", tris.len())),
    };
    let t = &tris[0];
    let outside = |v: &Label| -> BTreeSet<Label> {
        gbar.neighbors(v)
            .unwrap_or_default()
            .into_iter()
            .filter(|w| !t.contains(w))
            .collect()
    };
    let expected: BTreeMap<Label, u64> = match condition {
        Condition::IsolatedTriangle => {
            if t.0.iter().any(|v| !outside(v).is_empty()) {
                return Err(format!("triangle {t} is not isolated"));
            }
            let triple = family.triple().ok_or("family has no triple")?;
            let values: BTreeSet<u64> = roles.primes.values().copied().collect();
            if values != triple.into_iter().collect() || roles.primes.len() != 3 {
                return Err("triangle labeling does not hit the distinguished primes".into());
            }
            roles.primes.clone()
        }
        _ => {
            let hp = family.hub_primes().ok_or("family has no hub")?;
            if !outside(&roles.a).is_empty() || !outside(&roles.b).is_empty() {
                return Err("a or b has neighbors outside the triangle".into());
            }
            let hub: Vec<Label> = outside(&roles.c).into_iter().collect();
            if hub != roles.hub_neighbors {
                return Err("hub neighbor list is wrong".into());
            }
            let ido = [(&roles.b, 0), (&roles.c, 1), (&roles.a, 2)];
            if ido.iter().any(|(v, k)| col.color(v) != Some(*k))
                || hub.iter().any(|v| col.color(v) != Some(2))
            {
                return Err("coloring does not place c, a, b and the hub neighbors in D, I, O, I".into());
            }
            [(&roles.a, hp.a), (&roles.b, hp.b), (&roles.c, hp.c)]
                .into_iter()
                .map(|(v, p)| (v.clone(), p))
                .collect()
        }
    };
    if roles.primes != expected {
        return Err("triangle labeling disagrees with the family".into());
    }
    if prime_labeled && roles.primes.iter().any(|(v, p)| v.as_prime() != Some(*p)) {
        return Err("prime-labeled triangle is not mapped to itself".into());
    }
    Ok(())
}

/// Shrinks the vertex set of a non-3-colorable graph to a subset that is
/// minimal under vertex deletion.
fn non_3colorable_core(gbar: &Graph) -> Vec<Label> {
    let mut core: Vec<Label> = gbar.vertices().cloned().collect();
    let mut i = 0;
    while i < core.len() {
        let mut rest = core.clone();
        rest.remove(i);
        let sub = gbar.induced_subgraph(&rest).expect("subset of vertices");
        if k_color(&sub, 3).is_none() {
            core = rest;
        } else {
            i += 1;
        }
    }
    core
}

fn triangle_free_verdict(gbar: &Graph, family: Family) -> Verdict {
    if let Some(t) = gbar.triangles().into_iter().next() {
        return Verdict::reject(family, Witness::Triangle { triangle: t });
    }
    three_color_verdict(gbar, family, None)
}

fn three_color_verdict(gbar: &Graph, family: Family, triangle: Option<TriangleRoles>) -> Verdict {
    match k_color(gbar, 3) {
        Some(coloring) => Verdict::accept(family, Certificate { coloring, triangle }),
        None => Verdict::reject(
            family,
            Witness::NotThreeColorable {
                core: non_3colorable_core(gbar),
            },
        ),
    }
}

fn outside_neighbors(gbar: &Graph, t: &Triangle, v: &Label) -> Vec<Label> {
    gbar.neighbors(v)
        .expect("triangle vertex")
        .into_iter()
        .filter(|w| !t.contains(w))
        .collect()
}

/// Decides whether `gamma` is the prime graph of a group in `family`.
/// Abstract labels are classified up to relabeling; when every vertex is
/// a prime the triangle must be the family's own primes.
pub fn classify(gamma: &Graph, family: Family) -> Verdict {
    let gbar = gamma.complement();
    let prime_labeled = gamma.is_prime_labeled();
    let condition = family.condition();
    if condition == Condition::TriangleFree {
        return triangle_free_verdict(&gbar, family);
    }
    let tris = gbar.triangles();
    let t = match tris.as_slice() {
        [] => return three_color_verdict(&gbar, family, None),
        [t] => t.clone(),
        [first, second, ..] => {
            return Verdict::reject(
                family,
                Witness::SecondTriangle {
                    first: first.clone(),
                    second: second.clone(),
                },
            )
        }
    };
    let triple = family.triple().expect("families with triangles have a triple");
    let wrong_triangle = || {
        Verdict::reject(
            family,
            Witness::WrongTriangle {
                triangle: t.clone(),
                expected: triple,
            },
        )
    };
    if condition == Condition::IsolatedTriangle {
        for v in &t.0 {
            if let Some(n) = outside_neighbors(&gbar, &t, v).into_iter().next() {
                return Verdict::reject(
                    family,
                    Witness::TriangleNotIsolated {
                        triangle: t.clone(),
                        vertex: v.clone(),
                        neighbor: n,
                    },
                );
            }
        }
        if prime_labeled && t.0.iter().map(Label::as_prime).ne(triple.map(Some)) {
            return wrong_triangle();
        }
        let [a, b, c] = t.0.clone();
        let primes = t.0.iter().cloned().zip(triple).collect();
        return three_color_verdict(
            &gbar,
            family,
            Some(TriangleRoles {
                a,
                b,
                c,
                primes,
                hub_neighbors: Vec::new(),
            }),
        );
    }

    // Hub families.
    let hp = family.hub_primes().expect("hub family");
    let reaching: Vec<Label> = t
        .0
        .iter()
        .filter(|v| !outside_neighbors(&gbar, &t, v).is_empty())
        .cloned()
        .collect();
    if reaching.len() >= 2 {
        return Verdict::reject(
            family,
            Witness::SeveralHubs {
                triangle: t.clone(),
                vertices: reaching,
            },
        );
    }
    if prime_labeled && t.0.iter().map(Label::as_prime).ne(triple.map(Some)) {
        return wrong_triangle();
    }
    let c = reaching.first().unwrap_or(&t.0[2]).clone();
    if prime_labeled && c.as_prime() != Some(hp.c) {
        return Verdict::reject(
            family,
            Witness::WrongHub {
                triangle: t.clone(),
                hub: c,
                expected: hp.c,
            },
        );
    }
    let (a, b) = if prime_labeled {
        (Label::Prime(hp.a), Label::Prime(hp.b))
    } else {
        let rest: Vec<&Label> = t.0.iter().filter(|v| **v != c).collect();
        (rest[0].clone(), rest[1].clone())
    };
    if k_color(&gbar, 3).is_none() {
        return three_color_verdict(&gbar, family, None);
    }
    let hub_neighbors = outside_neighbors(&gbar, &t, &c);
    let constrained = constrained_3color(&gbar, &c, (&a, &b)).expect("triangle vertices exist");
    let Some(mut col) = constrained else {
        return Verdict::reject(
            family,
            Witness::NoConstrainedColoring {
                triangle: t.clone(),
                c,
                hub_neighbors,
            },
        );
    };
    // a and b only touch each other and c, so their colors can be swapped;
    // the hub neighbors must end up with a's color.
    if let Some(h) = hub_neighbors.first() {
        if col.assignment[h] == col.assignment[&b] {
            let (ca, cb) = (col.assignment[&a], col.assignment[&b]);
            col.assignment.insert(a.clone(), cb);
            col.assignment.insert(b.clone(), ca);
        }
    }
    let mut perm = [0usize; 3];
    perm[col.assignment[&b]] = 0;
    perm[col.assignment[&c]] = 1;
    perm[col.assignment[&a]] = 2;
    let coloring = col.permuted(&perm);
    let primes = [(&a, hp.a), (&b, hp.b), (&c, hp.c)]
        .into_iter()
        .map(|(v, p)| (v.clone(), p))
        .collect();
    Verdict::accept(
        family,
        Certificate {
            coloring,
            triangle: Some(TriangleRoles {
                a,
                b,
                c,
                primes,
                hub_neighbors,
            }),
        },
    )
}

/// Necessary condition: Γ̄ minus the family's designated edge is
/// triangle-free and 3-colorable. `Ok(None)` for families without one.
pub fn necessary_edge_removal_check(gamma: &Graph, family: Family) -> Result<Option<Verdict>> {
    if !gamma.is_prime_labeled() {
        return Err(Error::Contract("edge-removal check needs a prime-labeled graph".into()));
    }
    let Some((p, r)) = family.designated_edge() else {
        return Ok(None);
    };
    let (p, r) = (Label::Prime(p), Label::Prime(r));
    let mut gbar = gamma.complement();
    gbar.remove_edge(&p, &r);
    let mut v = triangle_free_verdict(&gbar, family);
    v.removed_edge = Some((p, r));
    Ok(Some(v))
}

/// An obstruction to Γ being the prime graph of a strictly pseudo
/// PSL(3,3)-solvable group: vertex 3 with complement degree above 2, or a
/// complement edge 3-p with p outside {2, 13}. `None` proves nothing.
pub fn strict_psl33_obstruction(gamma: &Graph) -> Result<Option<Witness>> {
    if !gamma.is_prime_labeled() {
        return Err(Error::Contract("strict PSL(3,3) check needs a prime-labeled graph".into()));
    }
    let three = Label::Prime(3);
    let gbar = gamma.complement();
    let degree = gbar.degree(&three)?;
    if degree > 2 {
        return Ok(Some(Witness::HighDegree {
            vertex: three,
            degree,
        }));
    }
    let bad = gbar
        .neighbors(&three)?
        .into_iter()
        .find(|n| !matches!(n.as_prime(), Some(2 | 13)));
    Ok(bad.map(|neighbor| Witness::ForbiddenEdge {
        vertex: three,
        neighbor,
    }))
}

/// Named complement graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    /// Triangle {a,b,c}; c joined to r1..r5, r_i to p_i, p1..p5 a 5-cycle.
    Figure2,
    /// Cycle c1..cn, whiskers w1..wn, apexes k1, k2 joined to every whisker.
    Whisker(usize),
    /// Complement prime graph of SL(2,7).
    Figure4,
    /// Complement prime graph of PSL(2,7) x C5.
    Figure5,
    Groetzsch,
}

impl FromStr for Fixture {
    type Err = Error;

    /// `figure2`, `figure4`, `figure5`, `groetzsch`, and `whisker:n` or
    /// `whisker(n)`.
    fn from_str(s: &str) -> Result<Fixture> {
        let lower = s.trim().to_ascii_lowercase();
        let unknown = || Error::UnknownFixture(s.to_string());
        Ok(match lower.as_str() {
            "figure2" => Fixture::Figure2,
            "figure4" => Fixture::Figure4,
            "figure5" => Fixture::Figure5,
            "groetzsch" | "grotzsch" => Fixture::Groetzsch,
            _ => {
                let n = lower
                    .strip_prefix("whisker")
                    .map(|r| r.trim_matches(|c| matches!(c, ':' | '(' | ')')))
                    .ok_or_else(unknown)?;
                Fixture::Whisker(n.parse().map_err(|_| unknown())?)
            }
        })
    }
}

impl Fixture {
    /// The complement graph Γ̄ of the fixture.
    pub fn graph(self) -> Result<Graph> {
        let mut g = Graph::new();
        let l = |s: String| Label::token(&s).expect("fixture labels are tokens");
        match self {
            Fixture::Figure2 => {
                for (x, y) in [("a", "b"), ("a", "c"), ("b", "c")] {
                    g.add_vertex(l(x.into()));
                    g.add_vertex(l(y.into()));
                    g.add_edge(l(x.into()), l(y.into()))?;
                }
                for i in 1..=5 {
                    let (r, p, next) = (format!("r{i}"), format!("p{i}"), format!("p{}", i % 5 + 1));
                    for v in [&r, &p, &next] {
                        g.add_vertex(l(v.clone()));
                    }
                    g.add_edge(l("c".into()), l(r.clone()))?;
                    g.add_edge(l(r), l(p.clone()))?;
                    g.add_edge(l(p), l(next))?;
                }
            }
            Fixture::Whisker(n) => {
                if n < 4 {
                    return Err(Error::UnknownFixture(format!(
                        "whisker({n}): the cycle needs at least 4 vertices"
                    )));
                }
                for i in 1..=n {
                    let (c, w, next) = (format!("c{i}"), format!("w{i}"), format!("c{}", i % n + 1));
                    for v in [&c, &w, &next, &"k1".to_string(), &"k2".to_string()] {
                        g.add_vertex(l(v.clone()));
                    }
                    g.add_edge(l(c.clone()), l(next))?;
                    g.add_edge(l(c), l(w.clone()))?;
                    g.add_edge(l(w.clone()), l("k1".into()))?;
                    g.add_edge(l(w), l("k2".into()))?;
                }
            }
            Fixture::Figure4 => {
                g = Graph::from_parts([2u64, 3, 7], [(3u64, 7u64)])?;
            }
            Fixture::Figure5 => {
                g = Graph::from_parts([2u64, 3, 5, 7], [(2u64, 3u64), (2, 7), (3, 7)])?;
            }
            Fixture::Groetzsch => {
                // Mycielskian of the 5-cycle u1..u5.
                for i in 1..=5 {
                    for v in [format!("u{i}"), format!("v{i}")] {
                        g.add_vertex(l(v));
                    }
                }
                g.add_vertex(l("w".into()));
                for i in 1..=5 {
                    let j = i % 5 + 1;
                    g.add_edge(l(format!("u{i}")), l(format!("u{j}")))?;
                    g.add_edge(l(format!("v{i}")), l(format!("u{j}")))?;
                    g.add_edge(l(format!("v{j}")), l(format!("u{i}")))?;
                    g.add_edge(l(format!("v{i}")), l("w".into()))?;
                }
            }
        }
        Ok(g)
    }
}

/// The complement graph of a named fixture (see [`Fixture`]).
pub fn fixture(name: &str) -> Result<Graph> {
    name.parse::<Fixture>()?.graph()
}
