//! Permutation groups with full element enumeration: orders, element-order
//! spectra and prime graphs, plus the builtin groups used as ground truth.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, lcm, prime_divisors, primitive_root, pow_mod};
use crate::error::{Error, Result};
use crate::graph::{Graph, Label};

/// Enumeration refuses groups larger than this.
pub const ENUMERATION_CAP: u64 = 10_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidGroup(format!(
                    "image list of length {n} is not a bijection"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    /// Builds a permutation from disjoint cycles on `n` points.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Permutation> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                let slot = images
                    .get_mut(x as usize)
                    .ok_or_else(|| Error::InvalidGroup(format!("point {x} out of range")))?;
                *slot = c[(i + 1) % c.len()];
            }
        }
        Permutation::from_images(images)
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.0[x as usize]
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation(inv)
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut ord = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// Extends to `n` points, fixing the new ones.
    pub fn padded(&self, n: usize) -> Permutation {
        let mut v = self.0.clone();
        v.extend(self.0.len() as u32..n as u32);
        Permutation(v)
    }

    /// Moves the action to points `offset..offset + degree` of an `n`-point domain.
    pub fn shifted(&self, offset: usize, n: usize) -> Permutation {
        let mut v: Vec<u32> = (0..n as u32).collect();
        for (i, &x) in self.0.iter().enumerate() {
            v[offset + i] = x + offset as u32;
        }
        Permutation(v)
    }

    // Canonical byte encoding: images in the narrowest fitting width.
    pub(crate) fn encode(&self, out: &mut Vec<u8>) {
        out.clear();
        let n = self.0.len();
        if n <= 1 << 8 {
            out.extend(self.0.iter().map(|&x| x as u8));
        } else if n <= 1 << 16 {
            out.extend(self.0.iter().flat_map(|&x| (x as u16).to_le_bytes()));
        } else {
            out.extend(self.0.iter().flat_map(|&x| x.to_le_bytes()));
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({:?})", self.0)
    }
}

#[derive(Clone, Debug)]
pub struct PermGroup {
    pub name: Option<String>,
    degree: usize,
    generators: Vec<Permutation>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>, name: Option<String>) -> Result<PermGroup> {
        if generators.is_empty() {
            return Err(Error::InvalidGroup("no generators".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidGroup(format!(
                "generator of degree {} in a group of degree {degree}",
                g.degree()
            )));
        }
        Ok(PermGroup {
            name,
            degree,
            generators,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Visits every element once, breadth first from the identity.
    pub fn for_each_element(&self, cap: u64, mut f: impl FnMut(&Permutation)) -> Result<u64> {
        let id = Permutation::identity(self.degree);
        let mut buf = Vec::new();
        id.encode(&mut buf);
        let mut seen: HashSet<Box<[u8]>> = HashSet::new();
        seen.insert(buf.clone().into_boxed_slice());
        f(&id);
        let mut frontier = vec![id];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for g in &frontier {
                for s in &self.generators {
                    let h = g.then(s);
                    h.encode(&mut buf);
                    if seen.contains(buf.as_slice()) {
                        continue;
                    }
                    seen.insert(buf.clone().into_boxed_slice());
                    if seen.len() as u64 > cap {
                        return Err(Error::SizeCap {
                            what: "group enumeration",
                            limit: cap,
                            actual: seen.len() as u64,
                        });
                    }
                    f(&h);
                    next.push(h);
                }
            }
            frontier = next;
        }
        Ok(seen.len() as u64)
    }

    pub fn enumerate(&self) -> Result<Vec<Permutation>> {
        let mut out = Vec::new();
        self.for_each_element(ENUMERATION_CAP, |g| out.push(g.clone()))?;
        Ok(out)
    }

    pub fn order(&self) -> Result<u64> {
        self.for_each_element(ENUMERATION_CAP, |_| {})
    }

    pub fn order_spectrum(&self) -> Result<BTreeSet<u64>> {
        self.order_spectrum_capped(ENUMERATION_CAP)
    }

    pub fn order_spectrum_capped(&self, cap: u64) -> Result<BTreeSet<u64>> {
        let mut spec = BTreeSet::new();
        self.for_each_element(cap, |g| {
            spec.insert(g.order());
        })?;
        Ok(spec)
    }

    pub fn prime_graph(&self) -> Result<Graph> {
        self.prime_graph_capped(ENUMERATION_CAP)
    }

    pub fn prime_graph_capped(&self, cap: u64) -> Result<Graph> {
        let mut spec = BTreeSet::new();
        let order = self.for_each_element(cap, |g| {
            spec.insert(g.order());
        })?;
        Ok(prime_graph_from_spectrum(order, &spec))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GroupDoc {
            name: self.name.clone().unwrap_or_default(),
            degree: self.degree,
            order: None,
            spectrum: None,
            generators: self.generators.iter().map(|g| g.0.clone()).collect(),
        })
        .expect("group serializes")
    }

    /// Loads a group in the generator format; a stated order or spectrum is
    /// checked against enumeration.
    pub fn from_json(s: &str) -> Result<PermGroup> {
        let doc: GroupDoc = serde_json::from_str(s)?;
        doc.into_group()
    }
}

/// Vertices are the primes dividing `order`; p–q is an edge iff pq is an
/// element order.
pub fn prime_graph_from_spectrum(order: u64, spectrum: &BTreeSet<u64>) -> Graph {
    let primes = prime_divisors(order);
    let mut g = Graph::with_vertices(primes.iter().map(|&p| Label::Prime(p)));
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if spectrum.contains(&(p * q)) {
                g.add_edge(Label::Prime(p), Label::Prime(q)).expect("vertices exist");
            }
        }
    }
    g
}

#[derive(Serialize, Deserialize)]
struct GroupDoc {
    #[serde(default)]
    name: String,
    degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    spectrum: Option<Vec<u64>>,
    generators: Vec<Vec<u32>>,
}

impl GroupDoc {
    fn into_group(self) -> Result<PermGroup> {
        let gens = self
            .generators
            .into_iter()
            .map(Permutation::from_images)
            .collect::<Result<Vec<_>>>()?;
        let name = (!self.name.is_empty()).then_some(self.name);
        let g = PermGroup::new(self.degree, gens, name)?;
        if self.order.is_some() || self.spectrum.is_some() {
            let mut spec = BTreeSet::new();
            let order = g.for_each_element(ENUMERATION_CAP, |x| {
                spec.insert(x.order());
            })?;
            if let Some(want) = self.order {
                if want != order {
                    return Err(Error::InvalidGroup(format!(
                        "declared order {want}, generators give {order}"
                    )));
                }
            }
            if let Some(want) = self.spectrum {
                if want.into_iter().collect::<BTreeSet<_>>() != spec {
                    return Err(Error::InvalidGroup("declared spectrum does not match".into()));
                }
            }
        }
        Ok(g)
    }
}

pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let total = a.order()?.saturating_mul(b.order()?);
    if total > ENUMERATION_CAP {
        return Err(Error::SizeCap {
            what: "direct product",
            limit: ENUMERATION_CAP,
            actual: total,
        });
    }
    let n = a.degree + b.degree;
    let gens = a
        .generators
        .iter()
        .map(|g| g.padded(n))
        .chain(b.generators.iter().map(|g| g.shifted(a.degree, n)))
        .collect();
    let name = match (&a.name, &b.name) {
        (Some(x), Some(y)) => Some(format!("{x} x {y}")),
        _ => None,
    };
    PermGroup::new(n, gens, name)
}

pub fn cyclic(n: u64) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidGroup("cyclic group of order 0".into()));
    }
    let images = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    PermGroup::new(n as usize, vec![Permutation(images)], Some(format!("C{n}")))
}

/// Affine maps x -> a*x + b on the field of `r` elements, `a` running over
/// the multiplicative subgroup of order `p`.
pub fn frobenius_cyclic(r: u64, p: u64) -> Result<PermGroup> {
    for q in [r, p] {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
    }
    if (r - 1) % p != 0 {
        return Err(Error::InvalidGroup(format!("{p} does not divide {r} - 1")));
    }
    let a = pow_mod(primitive_root(r), (r - 1) / p, r);
    let shift = (0..r).map(|x| ((x + 1) % r) as u32).collect();
    let scale = (0..r).map(|x| (x * a % r) as u32).collect();
    PermGroup::new(
        r as usize,
        vec![Permutation(shift), Permutation(scale)],
        Some(format!("F{}", r * p)),
    )
}

/// Canonical names of the builtin groups, with their orders.
pub const BUILTINS: [(&str, u64); 10] = [
    ("A5", 60),
    ("PSL(2,7)", 168),
    ("A6", 360),
    ("PSL(2,8)", 504),
    ("PSL(2,17)", 2448),
    ("PSL(3,3)", 5616),
    ("U3(3)", 6048),
    ("U4(2)", 25920),
    ("SL(2,7)", 336),
    ("SL(2,17)", 4896),
];

/// The eight simple groups with exactly three prime divisors.
pub const K3_GROUPS: [&str; 8] = [
    "A5", "PSL(2,7)", "A6", "PSL(2,8)", "PSL(2,17)", "PSL(3,3)", "U3(3)", "U4(2)",
];

fn slug(name: &str) -> String {
    name.chars()
        .filter(char::is_ascii_alphanumeric)
        .map(|c| c.to_ascii_lowercase())
        .collect()
}

/// Resolves `PSL(2,7)`, `psl27` and similar spellings to a canonical name.
pub fn canonical_name(name: &str) -> Result<&'static str> {
    let s = slug(name);
    BUILTINS
        .iter()
        .map(|(n, _)| *n)
        .find(|n| slug(n) == s)
        .ok_or_else(|| Error::UnknownGroup(name.to_string()))
}

fn builtin_source(name: &str) -> &'static str {
    match name {
        "A5" => include_str!("../data/groups/a5.json"),
        "PSL(2,7)" => include_str!("../data/groups/psl27.json"),
        "A6" => include_str!("../data/groups/a6.json"),
        "PSL(2,8)" => include_str!("../data/groups/psl28.json"),
        "PSL(2,17)" => include_str!("../data/groups/psl217.json"),
        "PSL(3,3)" => include_str!("../data/groups/psl33.json"),
        "U3(3)" => include_str!("../data/groups/u33.json"),
        "U4(2)" => include_str!("../data/groups/u42.json"),
        "SL(2,7)" => include_str!("../data/groups/sl27.json"),
        "SL(2,17)" => include_str!("../data/groups/sl217.json"),
        _ => unreachable!("canonical names only"),
    }
}

/// Loads a builtin group and validates its order and spectrum by enumeration.
pub fn builtin(name: &str) -> Result<PermGroup> {
    let canon = canonical_name(name)?;
    let doc: GroupDoc = serde_json::from_str(builtin_source(canon))?;
    let catalog = BUILTINS.iter().find(|(n, _)| *n == canon).unwrap().1;
    if doc.order != Some(catalog) || doc.name != canon {
        return Err(Error::InvalidGroup(format!("embedded data for {canon} is mislabeled")));
    }
    doc.into_group()
}

/// Order and element-order spectrum as recorded in the embedded data,
/// without enumerating. `builtin` checks the same record.
pub fn builtin_spectrum(name: &str) -> Result<(u64, BTreeSet<u64>)> {
    let canon = canonical_name(name)?;
    let doc: GroupDoc = serde_json::from_str(builtin_source(canon))?;
    match (doc.order, doc.spectrum) {
        (Some(o), Some(s)) => Ok((o, s.into_iter().collect())),
        _ => Err(Error::InvalidGroup(format!("no spectrum recorded for {canon}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_basics() {
        let p = Permutation::from_cycles(5, &[&[0, 1, 2], &[3, 4]]).unwrap();
        assert_eq!(p.order(), 6);
        assert!(p.then(&p.inverse()).is_identity());
        assert!(p.pow(6).is_identity());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn trivial_and_cyclic() {
        let t = PermGroup::new(3, vec![Permutation::identity(3)], None).unwrap();
        assert_eq!(t.enumerate().unwrap().len(), 1);
        let c6 = cyclic(6).unwrap();
        assert_eq!(c6.order_spectrum().unwrap(), [1, 2, 3, 6].into_iter().collect());
    }

    #[test]
    fn frobenius_groups() {
        let f55 = frobenius_cyclic(11, 5).unwrap();
        assert_eq!(f55.order().unwrap(), 55);
        assert_eq!(f55.order_spectrum().unwrap(), [1, 5, 11].into_iter().collect());
        let f21 = frobenius_cyclic(7, 3).unwrap();
        assert_eq!(f21.order_spectrum().unwrap(), [1, 3, 7].into_iter().collect());
        assert!(frobenius_cyclic(5, 3).is_err());
    }

    #[test]
    fn name_styles() {
        assert_eq!(canonical_name("psl27").unwrap(), "PSL(2,7)");
        assert_eq!(canonical_name("PSL(2,17)").unwrap(), "PSL(2,17)");
        assert_eq!(canonical_name("u4(2)").unwrap(), "U4(2)");
        assert!(matches!(canonical_name("M11"), Err(Error::UnknownGroup(_))));
    }

    #[test]
    fn mismatched_declared_order_is_rejected() {
        let s = r#"{"name":"bad","degree":3,"order":5,"generators":[[1,2,0]]}"#;
        assert!(PermGroup::from_json(s).is_err());
        let s = r#"{"name":"c3","degree":3,"order":3,"generators":[[1,2,0]]}"#;
        assert_eq!(PermGroup::from_json(s).unwrap().order().unwrap(), 3);
    }
}
