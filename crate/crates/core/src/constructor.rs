//! Witness groups for admissible graphs, as recipes: a small AST of cyclic
//! groups, builtin simple groups, direct products and coprime module
//! extensions, together with the prime graph each recipe promises.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, prime_divisors};
use crate::chartab::{embedded_table, fixed_space_dim};
use crate::classifier::{classify, Condition, Family};
use crate::error::{Error, Result};
use crate::graph::{Graph, Label};
use crate::group::{builtin_spectrum, canonical_name, prime_graph_from_spectrum, K3_GROUPS};

/// How elements of one prime order in the actor act on the module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Action {
    /// Every element of this prime order fixes only the zero vector.
    Fpf,
    /// Some element of this prime order fixes a nonzero vector, acting
    /// nontrivially.
    Fixes,
    Trivial,
}

/// Why an FPF entry is justified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Obligation {
    /// A cyclic layer of order `prime` acting by scalars; needs prime | r - 1.
    FrobeniusCyclic { prime: u64 },
    /// The module restricted to `group` is the character `row`, which has no
    /// fixed vectors exactly on elements of order `prime`.
    RepTable { prime: u64, group: String, row: String },
}

impl Obligation {
    pub fn prime(&self) -> u64 {
        match self {
            Obligation::FrobeniusCyclic { prime } | Obligation::RepTable { prime, .. } => *prime,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum GroupRecipe {
    Cyclic {
        p: u64,
    },
    K3Atom {
        name: String,
    },
    Product {
        left: Box<GroupRecipe>,
        right: Box<GroupRecipe>,
    },
    /// The split extension (F_r)^d ⋊ actor.
    ModuleExt {
        actor: Box<GroupRecipe>,
        module_prime: u64,
        module_rank: u32,
        #[serde(with = "prime_keys")]
        action_profile: BTreeMap<u64, Action>,
        obligations: Vec<Obligation>,
    },
}

// Tagged enums buffer their content, which loses integer map keys.
mod prime_keys {
    use std::collections::BTreeMap;

    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Action;

    pub fn serialize<S: Serializer>(m: &BTreeMap<u64, Action>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(m.iter().map(|(k, v)| (k.to_string(), v)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u64, Action>, D::Error> {
        BTreeMap::<String, Action>::deserialize(d)?
            .into_iter()
            .map(|(k, v)| k.parse().map(|k| (k, v)).map_err(|_| D::Error::custom(format!("bad prime key {k:?}"))))
            .collect()
    }
}

impl GroupRecipe {
    pub fn cyclic(p: u64) -> GroupRecipe {
        GroupRecipe::Cyclic { p }
    }

    pub fn k3(name: &str) -> GroupRecipe {
        GroupRecipe::K3Atom { name: name.to_string() }
    }

    pub fn product(left: GroupRecipe, right: GroupRecipe) -> GroupRecipe {
        GroupRecipe::Product {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn primes(&self) -> Result<BTreeSet<u64>> {
        Ok(match self {
            GroupRecipe::Cyclic { p } => [*p].into(),
            GroupRecipe::K3Atom { name } => prime_divisors(builtin_spectrum(name)?.0).into_iter().collect(),
            GroupRecipe::Product { left, right } => {
                let mut s = left.primes()?;
                s.extend(right.primes()?);
                s
            }
            GroupRecipe::ModuleExt { actor, module_prime, .. } => {
                let mut s = actor.primes()?;
                s.insert(*module_prime);
                s
            }
        })
    }

    pub fn order(&self) -> Result<u128> {
        let overflow = || Error::InvalidRecipe("order overflows u128".into());
        match self {
            GroupRecipe::Cyclic { p } => Ok(*p as u128),
            GroupRecipe::K3Atom { name } => Ok(builtin_spectrum(name)?.0 as u128),
            GroupRecipe::Product { left, right } => {
                left.order()?.checked_mul(right.order()?).ok_or_else(overflow)
            }
            GroupRecipe::ModuleExt { actor, module_prime, module_rank, .. } => (*module_prime as u128)
                .checked_pow(*module_rank)
                .and_then(|m| m.checked_mul(actor.order().ok()?))
                .ok_or_else(overflow),
        }
    }

    /// Structural invariants: prime parameters, known atoms, coprime
    /// extensions, one profile entry per actor prime and an obligation for
    /// each FPF entry.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidRecipe(m));
        match self {
            GroupRecipe::Cyclic { p } => {
                if !is_prime(*p) {
                    return bad(format!("Cyclic({p}) needs a prime"));
                }
            }
            GroupRecipe::K3Atom { name } => {
                let canon = canonical_name(name)?;
                if !K3_GROUPS.contains(&canon) {
                    return bad(format!("{name} is not a simple group with three prime divisors"));
                }
            }
            GroupRecipe::Product { left, right } => {
                left.validate()?;
                right.validate()?;
            }
            GroupRecipe::ModuleExt {
                actor,
                module_prime: r,
                module_rank,
                action_profile,
                obligations,
            } => {
                actor.validate()?;
                let pi = actor.primes()?;
                if !is_prime(*r) || pi.contains(r) {
                    return bad(format!("module prime {r} must be a prime outside the actor"));
                }
                if *module_rank == 0 {
                    return bad("module rank must be positive".into());
                }
                if action_profile.keys().copied().collect::<BTreeSet<_>>() != pi {
                    return bad(format!("profile over module {r} does not list the actor primes"));
                }
                for (s, a) in action_profile {
                    let cited = obligations.iter().any(|o| o.prime() == *s);
                    if (*a == Action::Fpf) != cited {
                        return bad(format!("prime {s} over module {r}: FPF entries need exactly one kind of obligation"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Discharges every obligation: divisibility for cyclic layers and
    /// exact fixed-space dimensions for character-table citations.
    /// Returns one line per discharged obligation.
    pub fn discharge_obligations(&self) -> Result<Vec<String>> {
        let mut log = Vec::new();
        self.discharge_into(&mut log)?;
        Ok(log)
    }

    fn discharge_into(&self, log: &mut Vec<String>) -> Result<()> {
        match self {
            GroupRecipe::Cyclic { .. } | GroupRecipe::K3Atom { .. } => Ok(()),
            GroupRecipe::Product { left, right } => {
                left.discharge_into(log)?;
                right.discharge_into(log)
            }
            GroupRecipe::ModuleExt {
                actor,
                module_prime: r,
                action_profile,
                obligations,
                ..
            } => {
                actor.discharge_into(log)?;
                for o in obligations {
                    match o {
                        Obligation::FrobeniusCyclic { prime } => {
                            if (r - 1) % prime != 0 {
                                return Err(Error::InvalidRecipe(format!(
                                    "{prime} does not divide {r} - 1"
                                )));
                            }
                            log.push(format!("{prime} | {r} - 1"));
                        }
                        Obligation::RepTable { prime, group, row } => {
                            log.push(discharge_rep_table(*r, *prime, group, row, action_profile)?);
                        }
                    }
                }
                Ok(())
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("recipe serializes")
    }

    pub fn from_json(s: &str) -> Result<GroupRecipe> {
        let r: GroupRecipe = serde_json::from_str(s)?;
        r.validate()?;
        Ok(r)
    }
}

fn discharge_rep_table(
    r: u64,
    prime: u64,
    group: &str,
    row: &str,
    profile: &BTreeMap<u64, Action>,
) -> Result<String> {
    let t = embedded_table(group)?;
    let i = t.row(row)?;
    if (r - 1) % t.order != 0 {
        return Err(Error::InvalidRecipe(format!(
            "{r} - 1 is not divisible by |{group}| = {}",
            t.order
        )));
    }
    // Per prime of T: whether some element of that order fixes a vector.
    let mut fixes: BTreeMap<u64, bool> = BTreeMap::new();
    for (k, class) in t.classes.iter().enumerate() {
        if is_prime(class.order) {
            let dim = fixed_space_dim(&t, i, k)?;
            *fixes.entry(class.order).or_default() |= dim > 0;
        }
    }
    for (&s, &has_fixed) in &fixes {
        let want = profile.get(&s).copied();
        let ok = match want {
            Some(Action::Fpf) => !has_fixed && s == prime,
            Some(Action::Fixes) => has_fixed && s != prime,
            _ => false,
        };
        if !ok {
            return Err(Error::InvalidRecipe(format!(
                "row {row} of {group} on order-{s} elements does not match profile {want:?}"
            )));
        }
    }
    Ok(format!("{group} row {row}: fixed-point-free exactly on order {prime}"))
}

/// The prime graph the recipe's annotations promise.
pub fn eval_prime_graph(recipe: &GroupRecipe) -> Result<Graph> {
    match recipe {
        GroupRecipe::Cyclic { p } => Ok(Graph::with_vertices([Label::prime(*p)?])),
        GroupRecipe::K3Atom { name } => {
            let (order, spectrum) = builtin_spectrum(name)?;
            Ok(prime_graph_from_spectrum(order, &spectrum))
        }
        GroupRecipe::Product { left, right } => {
            let (l, r) = (eval_prime_graph(left)?, eval_prime_graph(right)?);
            let mut g = l.clone();
            for v in r.vertices() {
                g.add_vertex(v.clone());
            }
            for (a, b) in r.edges() {
                g.add_edge(a.clone(), b.clone())?;
            }
            for a in l.vertices() {
                for b in r.vertices().filter(|b| *b != a) {
                    g.add_edge(a.clone(), b.clone())?;
                }
            }
            Ok(g)
        }
        GroupRecipe::ModuleExt { actor, module_prime, action_profile, .. } => {
            let mut g = eval_prime_graph(actor)?;
            let r = Label::prime(*module_prime)?;
            g.add_vertex(r.clone());
            for (s, a) in action_profile {
                if *a != Action::Fpf {
                    g.add_edge(Label::prime(*s)?, r.clone())?;
                }
            }
            Ok(g)
        }
    }
}

/// Largest candidate `1 + k m` examined by [`dirichlet_prime`].
pub const DIRICHLET_BOUND: u64 = 1_000_000_000;

/// Smallest prime p ≡ 1 (mod m) outside `avoid`. Candidates 1 + km are
/// scanned for k = 1..=10^9.
pub fn dirichlet_prime(m: u64, avoid: &BTreeSet<u64>) -> Result<u64> {
    if m == 0 {
        return Err(Error::Contract("modulus must be positive".into()));
    }
    for k in 1..=DIRICHLET_BOUND {
        let p = k
            .checked_mul(m)
            .and_then(|x| x.checked_add(1))
            .ok_or(Error::SearchExhausted(u64::MAX))?;
        if is_prime(p) && !avoid.contains(&p) {
            return Ok(p);
        }
    }
    Err(Error::SearchExhausted(DIRICHLET_BOUND))
}

/// `prime ≡ 1 (mod modulus)`, recorded for each Dirichlet choice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Congruence {
    pub prime: u64,
    pub modulus: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeAssignment {
    pub primes: BTreeMap<Label, u64>,
    pub congruences: Vec<Congruence>,
}

impl PrimeAssignment {
    /// Injective, prime-valued, and every recorded congruence holds.
    pub fn check(&self) -> Result<()> {
        let values: BTreeSet<u64> = self.primes.values().copied().collect();
        if values.len() != self.primes.len() {
            return Err(Error::Integrity("prime assignment is not injective".into()));
        }
        if let Some(p) = values.iter().find(|p| !is_prime(**p)) {
            return Err(Error::NotPrime(*p));
        }
        for c in &self.congruences {
            if c.modulus == 0 || (c.prime - 1) % c.modulus != 0 {
                return Err(Error::Integrity(format!("{} is not 1 mod {}", c.prime, c.modulus)));
            }
        }
        Ok(())
    }

    /// `g` with every vertex renamed to its prime.
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        let map: BTreeMap<Label, Label> = self
            .primes
            .iter()
            .map(|(v, p)| Ok((v.clone(), Label::prime(*p)?)))
            .collect::<Result<_>>()?;
        if let Some(v) = g.vertices().find(|v| !map.contains_key(v)) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        g.relabel(&map)
    }
}

/// Row of T's character table acting as the hub module.
fn hub_row(family: Family) -> Option<&'static str> {
    match family {
        Family::Psl27 => Some("3a"),
        Family::Psl217 => Some("16a"),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Role {
    O,
    D,
    I,
}

struct Picker {
    used: BTreeSet<u64>,
    next: u64,
}

impl Picker {
    fn fresh(&mut self) -> u64 {
        while self.used.contains(&self.next) || !is_prime(self.next) {
            self.next += 1;
        }
        self.used.insert(self.next);
        self.next
    }

    fn dirichlet(&mut self, m: u64) -> Result<u64> {
        let p = dirichlet_prime(m, &self.used)?;
        self.used.insert(p);
        Ok(p)
    }
}

fn checked_product(xs: impl IntoIterator<Item = u64>) -> Result<u64> {
    xs.into_iter().try_fold(1u64, |acc, x| {
        acc.checked_mul(x)
            .ok_or_else(|| Error::SizeCap { what: "Dirichlet modulus", limit: u64::MAX, actual: u64::MAX })
    })
}

fn module_ext(
    actor: GroupRecipe,
    r: u64,
    d: u32,
    profile: BTreeMap<u64, Action>,
    obligations: Vec<Obligation>,
) -> GroupRecipe {
    GroupRecipe::ModuleExt {
        actor: Box::new(actor),
        module_prime: r,
        module_rank: d,
        action_profile: profile,
        obligations,
    }
}

/// A recipe whose prime graph is `gamma` after renaming vertices through the
/// returned assignment.
///
/// The complement minus T's triangle is oriented along the certificate
/// coloring. Sources (O) become cyclic factors, middle vertices (D)
/// Frobenius kernels over them, and sinks (I) modules induced from the
/// cyclic group of their in-neighbors. Hub neighbors additionally carry
/// T's module from the character table.
pub fn construct(gamma: &Graph, family: Family) -> Result<(GroupRecipe, PrimeAssignment)> {
    let verdict = classify(gamma, family);
    let Some(cert) = verdict.certificate else {
        let w = verdict.witness.map(|w| w.to_string()).unwrap_or_default();
        return Err(Error::Contract(format!("{family} rejects the graph: {w}")));
    };
    if gamma.vertex_count() == 0 {
        return Err(Error::Contract("the empty graph has no witness group".into()));
    }
    let gbar = gamma.complement();
    let col = &cert.coloring;

    let mut assignment = PrimeAssignment::default();
    let mut picker = Picker {
        used: family.triple().into_iter().flatten().collect(),
        next: 2,
    };
    let roles = cert.triangle.clone();
    let t_name = family.group();
    let mut in_triangle = BTreeSet::new();
    let mut hub_neighbors = BTreeSet::new();
    if let Some(roles) = &roles {
        for (v, p) in &roles.primes {
            in_triangle.insert(v.clone());
            assignment.primes.insert(v.clone(), *p);
        }
        if family.condition() == Condition::Hub {
            hub_neighbors.extend(roles.hub_neighbors.iter().cloned());
        }
    }
    let tower: Vec<Label> = gbar.vertices().filter(|v| !in_triangle.contains(v)).cloned().collect();
    let arc = |u: &Label, v: &Label| gbar.has_edge(u, v) && col.color(u) < col.color(v);
    let ins = |v: &Label| -> Vec<Label> { tower.iter().filter(|u| arc(u, v)).cloned().collect() };
    let role = |v: &Label| {
        let indeg = ins(v).len() + usize::from(hub_neighbors.contains(v));
        let outdeg = tower.iter().filter(|w| arc(v, w)).count();
        match (indeg, outdeg) {
            (0, _) => Role::O,
            (_, 0) => Role::I,
            _ => Role::D,
        }
    };
    let of_role = |r: Role| -> Vec<Label> { tower.iter().filter(|v| role(v) == r).cloned().collect() };
    let (os, ds, is) = (of_role(Role::O), of_role(Role::D), of_role(Role::I));

    for v in &os {
        let p = picker.fresh();
        assignment.primes.insert(v.clone(), p);
    }
    let o_product = checked_product(os.iter().map(|v| assignment.primes[v]))?;
    for v in &ds {
        let q = picker.dirichlet(o_product)?;
        assignment.primes.insert(v.clone(), q);
        assignment.congruences.push(Congruence { prime: q, modulus: o_product });
    }
    let prime = |v: &Label, a: &PrimeAssignment| a.primes[v];

    // O factors, then one Frobenius layer per D vertex.
    let mut tower_recipe: Option<GroupRecipe> = os
        .iter()
        .rev()
        .map(|v| GroupRecipe::cyclic(prime(v, &assignment)))
        .reduce(|acc, c| GroupRecipe::product(c, acc));
    for v in &ds {
        let actor = tower_recipe.take().expect("a D vertex has an O in-neighbor");
        let fpf: BTreeSet<u64> = ins(v).iter().map(|u| prime(u, &assignment)).collect();
        let profile = actor
            .primes()?
            .into_iter()
            .map(|s| (s, if fpf.contains(&s) { Action::Fpf } else { Action::Trivial }))
            .collect();
        let obligations = fpf.iter().map(|&s| Obligation::FrobeniusCyclic { prime: s }).collect();
        tower_recipe = Some(module_ext(actor, prime(v, &assignment), 1, profile, obligations));
    }

    let hub_layers = !hub_neighbors.is_empty();
    let mut current = match (&t_name, &roles, hub_layers) {
        (Some(t), Some(_), true) => Some(match tower_recipe.take() {
            Some(k) => GroupRecipe::product(GroupRecipe::k3(t), k),
            None => GroupRecipe::k3(t),
        }),
        _ => tower_recipe.take(),
    };
    let t_order = match t_name {
        Some(t) => builtin_spectrum(t)?.0,
        None => 1,
    };
    let hub = roles.as_ref().map(|r| r.c.clone());

    for v in &is {
        let n1: BTreeSet<Label> = ins(v).into_iter().collect();
        let mut n2: BTreeSet<Label> = BTreeSet::new();
        for w in &n1 {
            n2.extend(ins(w).into_iter().filter(|u| !n1.contains(u)));
        }
        let p1: BTreeSet<u64> = n1.iter().map(|u| prime(u, &assignment)).collect();
        let p2: BTreeSet<u64> = n2.iter().map(|u| prime(u, &assignment)).collect();
        let on_hub = hub_neighbors.contains(v);
        let mut modulus = checked_product(p1.iter().chain(&p2).copied())?;
        if on_hub {
            modulus = checked_product([modulus, t_order])?;
        }
        let r = picker.dirichlet(modulus)?;
        assignment.primes.insert(v.clone(), r);
        assignment.congruences.push(Congruence { prime: r, modulus });

        let (t_row, t_degree) = match (on_hub, family.group(), hub_row(family)) {
            (true, Some(g), Some(row)) => {
                let t = embedded_table(g)?;
                let deg = t.characters[t.row(row)?].degree().unwrap_or(1) as u64;
                (Some((g, row)), deg)
            }
            _ => (None, 1),
        };
        let rank = checked_product(p2.iter().copied().chain([t_degree]))?;
        let rank = u32::try_from(rank).map_err(|_| Error::SizeCap {
            what: "module rank",
            limit: u32::MAX as u64,
            actual: rank,
        })?;
        let hub_prime = hub.as_ref().map(|c| prime(c, &assignment));
        let t_primes: BTreeSet<u64> = family.triple().into_iter().flatten().collect();

        let Some(actor) = current.take() else {
            return Err(Error::Contract("an I vertex needs an in-neighbor".into()));
        };
        let mut profile = BTreeMap::new();
        let mut obligations = Vec::new();
        for s in actor.primes()? {
            let a = if p1.contains(&s) {
                obligations.push(Obligation::FrobeniusCyclic { prime: s });
                Action::Fpf
            } else if p2.contains(&s) {
                Action::Fixes
            } else if t_row.is_some() && Some(s) == hub_prime {
                let (g, row) = t_row.unwrap();
                obligations.push(Obligation::RepTable {
                    prime: s,
                    group: g.to_string(),
                    row: row.to_string(),
                });
                Action::Fpf
            } else if t_row.is_some() && t_primes.contains(&s) {
                Action::Fixes
            } else {
                Action::Trivial
            };
            profile.insert(s, a);
        }
        current = Some(module_ext(actor, r, rank, profile, obligations));
    }

    let recipe = match (t_name, &roles, hub_layers, current) {
        (Some(t), Some(_), false, Some(k)) => GroupRecipe::product(GroupRecipe::k3(t), k),
        (Some(t), Some(_), false, None) => GroupRecipe::k3(t),
        (_, _, _, Some(k)) => k,
        _ => return Err(Error::Contract("no tower and no triangle".into())),
    };
    recipe.validate()?;
    assignment.check()?;
    if eval_prime_graph(&recipe)? != assignment.apply(gamma)? {
        return Err(Error::Integrity(format!(
            "constructed recipe for {family} does not evaluate to the input graph"
        )));
    }
    Ok((recipe, assignment))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dirichlet_examples() {
        let none = BTreeSet::new();
        assert_eq!(dirichlet_prime(5, &none).unwrap(), 11);
        assert_eq!(dirichlet_prime(21, &none).unwrap(), 43);
        assert_eq!(dirichlet_prime(1, &[2].into()).unwrap(), 3);
        assert_eq!(dirichlet_prime(168, &none).unwrap(), 337);
        assert!(dirichlet_prime(0, &none).is_err());
    }

    #[test]
    fn eval_examples() {
        let g = eval_prime_graph(&GroupRecipe::cyclic(5)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        let f = module_ext(
            GroupRecipe::cyclic(5),
            11,
            1,
            [(5, Action::Fpf)].into(),
            vec![Obligation::FrobeniusCyclic { prime: 5 }],
        );
        f.validate().unwrap();
        assert_eq!(eval_prime_graph(&f).unwrap().edge_count(), 0);
        let fig5 = GroupRecipe::product(GroupRecipe::k3("PSL(2,7)"), GroupRecipe::cyclic(5));
        let gbar = eval_prime_graph(&fig5).unwrap().complement();
        assert_eq!(gbar.triangles().len(), 1);
        assert_eq!(gbar.degree(&Label::Prime(5)).unwrap(), 0);
    }

    #[test]
    fn validate_rejects_bad_modules() {
        let shared = module_ext(GroupRecipe::cyclic(5), 5, 1, [(5, Action::Trivial)].into(), vec![]);
        assert!(shared.validate().is_err());
        let missing = module_ext(GroupRecipe::cyclic(5), 11, 1, [(5, Action::Fpf)].into(), vec![]);
        assert!(missing.validate().is_err());
    }

    #[test]
    fn edgeless_complement_is_a_direct_product() {
        let gamma = Graph::with_vertices(["a", "b", "c"]).complement();
        let (r, a) = construct(&gamma, Family::Solvable).unwrap();
        assert_eq!(
            r,
            GroupRecipe::product(
                GroupRecipe::cyclic(2),
                GroupRecipe::product(GroupRecipe::cyclic(3), GroupRecipe::cyclic(5))
            )
        );
        assert_eq!(a.primes.len(), 3);
    }

    #[test]
    fn hub_neighbor_gets_the_klein_module() {
        let gbar = Graph::from_parts(["a", "b", "c", "v"], [("a", "b"), ("a", "c"), ("b", "c"), ("c", "v")])
            .unwrap();
        let (r, a) = construct(&gbar.complement(), Family::Psl27).unwrap();
        assert_eq!(a.primes[&Label::from("v")], 337);
        let GroupRecipe::ModuleExt { module_rank, action_profile, .. } = &r else {
            panic!("expected a module on top");
        };
        assert_eq!(*module_rank, 3);
        assert_eq!(action_profile[&7], Action::Fpf);
        assert_eq!(action_profile[&2], Action::Fixes);
        assert_eq!(action_profile[&3], Action::Fixes);
        assert_eq!(r.discharge_obligations().unwrap().len(), 1);
    }
}
