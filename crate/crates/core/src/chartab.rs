//! Exact character tables over cyclotomic integers, and the fixed-point
//! facts the constructions depend on.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, prime_divisors, prime_factors};
use crate::error::{Error, Result};

/// Σ c_k ζ_N^k with integer coefficients, stored densely over exponents
/// 0..N. Several coefficient vectors represent the same number; compare
/// through [`Cyclotomic::reduced`] or `==`, which reduce modulo Φ_N.
#[derive(Clone)]
pub struct Cyclotomic {
    n: u32,
    coeffs: Vec<i64>,
}

impl Cyclotomic {
    pub fn zero(n: u32) -> Cyclotomic {
        Cyclotomic {
            n,
            coeffs: vec![0; n as usize],
        }
    }

    pub fn integer(n: u32, k: i64) -> Cyclotomic {
        let mut z = Cyclotomic::zero(n);
        z.coeffs[0] = k;
        z
    }

    /// ζ_N^e.
    pub fn zeta_power(n: u32, e: i64) -> Cyclotomic {
        let mut z = Cyclotomic::zero(n);
        z.coeffs[e.rem_euclid(n as i64) as usize] = 1;
        z
    }

    pub fn from_terms(n: u32, terms: &[(i64, i64)]) -> Cyclotomic {
        let mut z = Cyclotomic::zero(n);
        for &(e, c) in terms {
            z.coeffs[e.rem_euclid(n as i64) as usize] += c;
        }
        z
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().copied().enumerate().filter(|&(_, c)| c != 0)
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.coeffs[e] += c;
        }
        out
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        debug_assert_eq!(self.n, other.n);
        let n = self.n as usize;
        let mut out = Cyclotomic::zero(self.n);
        let rhs: Vec<(usize, i64)> = other.terms().collect();
        for (e, c) in self.terms() {
            for &(f, d) in &rhs {
                out.coeffs[(e + f) % n] += c * d;
            }
        }
        out
    }

    /// Complex conjugate: ζ ↦ ζ^-1.
    pub fn conj(&self) -> Cyclotomic {
        self.galois(-1)
    }

    /// The field automorphism ζ ↦ ζ^v; `v` must be a unit mod N.
    pub fn galois(&self, v: i64) -> Cyclotomic {
        let n = self.n as i64;
        debug_assert_eq!(gcd(v.rem_euclid(n) as u64, n as u64), 1);
        let mut out = Cyclotomic::zero(self.n);
        for (e, c) in self.terms() {
            out.coeffs[(e as i64 * v).rem_euclid(n) as usize] += c;
        }
        out
    }

    /// Canonical coordinates: the remainder modulo Φ_N, of length φ(N).
    pub fn reduced(&self) -> Vec<i64> {
        let phi = cyclotomic_polynomial(self.n);
        let deg = phi.len() - 1;
        let support: Vec<(usize, i64)> = phi
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .collect();
        let mut r = self.coeffs.clone();
        for top in (deg..r.len()).rev() {
            let c = r[top];
            if c == 0 {
                continue;
            }
            let shift = top - deg;
            for &(i, p) in &support {
                r[shift + i] -= c * p;
            }
        }
        r.truncate(deg);
        r
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(|&c| c == 0)
    }

    /// `Some(k)` when the value is the rational integer k.
    pub fn as_integer(&self) -> Option<i64> {
        let r = self.reduced();
        r.iter().skip(1).all(|&c| c == 0).then(|| r.first().copied().unwrap_or(0))
    }

    /// Rational iff fixed by every Galois automorphism; this checks the
    /// generators of (Z/N)^*.
    pub fn is_rational(&self) -> bool {
        unit_generators(self.n)
            .iter()
            .all(|&v| self.galois(v as i64) == *self)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Cyclotomic) -> bool {
        self.n == other.n && self.sub(other).is_zero()
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(k) = self.as_integer() {
            return write!(f, "{k}");
        }
        let parts: Vec<String> = self.terms().map(|(e, c)| format!("{c}z{}^{e}", self.n)).collect();
        f.write_str(&parts.join(" + "))
    }
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd] / den[dd];
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            r[i + j] -= c * d;
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

/// Coefficients of Φ_n, lowest degree first. Built for the radical of n
/// by exact division, then expanded via Φ_n(x) = Φ_rad(n)(x^(n/rad(n))).
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let rad: u32 = prime_divisors(n as u64).iter().product::<u64>() as u32;
    let poly = if rad != n {
        let base = cyclotomic_polynomial(rad);
        let step = (n / rad) as usize;
        let mut p = vec![0i64; (base.len() - 1) * step + 1];
        for (i, &c) in base.iter().enumerate() {
            p[i * step] = c;
        }
        p
    } else {
        // x^n - 1 divided by Φ_d for every proper divisor d
        let mut p = vec![0i64; n as usize + 1];
        p[0] = -1;
        p[n as usize] = 1;
        for d in (1..n).filter(|d| n % d == 0) {
            p = poly_div_exact(&p, &cyclotomic_polynomial(d));
        }
        p
    };
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

/// A generating set of the unit group mod n.
pub fn unit_generators(n: u32) -> Vec<u32> {
    let units: BTreeSet<u32> = (1..n.max(2)).filter(|&v| gcd(v as u64, n as u64) == 1).collect();
    let mut span: BTreeSet<u32> = [1 % n.max(1)].into_iter().collect();
    let mut gens = Vec::new();
    for &v in &units {
        if span.len() == units.len() {
            break;
        }
        if span.contains(&v) {
            continue;
        }
        gens.push(v);
        loop {
            let next: BTreeSet<u32> = span
                .iter()
                .flat_map(|&s| gens.iter().map(move |&g| (s as u64 * g as u64 % n as u64) as u32))
                .collect();
            if next.is_subset(&span) {
                break;
            }
            span.extend(next);
        }
    }
    gens
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassInfo {
    pub name: String,
    pub order: u64,
    pub size: u64,
}

#[derive(Clone, Debug)]
pub struct Character {
    pub name: String,
    pub values: Vec<Cyclotomic>,
}

impl Character {
    pub fn degree(&self) -> Option<i64> {
        self.values.first().and_then(Cyclotomic::as_integer)
    }
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub name: String,
    pub order: u64,
    pub conductor: u32,
    pub classes: Vec<ClassInfo>,
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    pub characters: Vec<Character>,
}

/// A stored value: an integer or sparse `[exponent, coefficient]` pairs.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ValueDoc {
    Int(i64),
    Terms(Vec<(i64, i64)>),
}

#[derive(Serialize, Deserialize)]
struct CharacterDoc {
    name: String,
    values: Vec<ValueDoc>,
}

#[derive(Serialize, Deserialize)]
struct TableDoc {
    name: String,
    order: u64,
    conductor: u32,
    classes: Vec<ClassInfo>,
    power_maps: BTreeMap<String, Vec<usize>>,
    characters: Vec<CharacterDoc>,
}

impl CharacterTable {
    /// Parses table JSON; structural shape is checked here, the
    /// mathematical invariants by [`validate_table`].
    pub fn from_json(s: &str) -> Result<CharacterTable> {
        let doc: TableDoc = serde_json::from_str(s)?;
        let n = doc.conductor;
        if n == 0 {
            return Err(Error::InvalidTable("conductor 0".into()));
        }
        let k = doc.classes.len();
        let mut power_maps = BTreeMap::new();
        for (p, map) in doc.power_maps {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::InvalidTable(format!("power map key {p:?}")))?;
            if map.len() != k || map.iter().any(|&c| c >= k) {
                return Err(Error::InvalidTable(format!("malformed {p}-power map")));
            }
            power_maps.insert(p, map);
        }
        let characters = doc
            .characters
            .into_iter()
            .map(|c| {
                if c.values.len() != k {
                    return Err(Error::InvalidTable(format!(
                        "row {} has {} values for {k} classes",
                        c.name,
                        c.values.len()
                    )));
                }
                let values = c
                    .values
                    .into_iter()
                    .map(|v| match v {
                        ValueDoc::Int(x) => Cyclotomic::integer(n, x),
                        ValueDoc::Terms(t) => Cyclotomic::from_terms(n, &t),
                    })
                    .collect();
                Ok(Character {
                    name: c.name,
                    values,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CharacterTable {
            name: doc.name,
            order: doc.order,
            conductor: n,
            classes: doc.classes,
            power_maps,
            characters,
        })
    }

    pub fn to_json(&self) -> String {
        let doc = TableDoc {
            name: self.name.clone(),
            order: self.order,
            conductor: self.conductor,
            classes: self.classes.clone(),
            power_maps: self
                .power_maps
                .iter()
                .map(|(p, m)| (p.to_string(), m.clone()))
                .collect(),
            characters: self
                .characters
                .iter()
                .map(|c| CharacterDoc {
                    name: c.name.clone(),
                    values: c
                        .values
                        .iter()
                        .map(|v| match v.as_integer() {
                            Some(k) => ValueDoc::Int(k),
                            None => ValueDoc::Terms(
                                v.terms().map(|(e, c)| (e as i64, c)).collect(),
                            ),
                        })
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("table serializes")
    }

    pub fn row(&self, name: &str) -> Result<usize> {
        self.characters
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| Error::InvalidTable(format!("{} has no row {name}", self.name)))
    }

    /// Class of g^e for g in `class`, through the stored power maps.
    pub fn power_class(&self, class: usize, e: u64) -> Result<usize> {
        let mut c = class;
        for p in prime_factors(e) {
            let map = self.power_maps.get(&p).ok_or_else(|| {
                Error::InvalidTable(format!("{} lacks a {p}-power map", self.name))
            })?;
            c = map[c];
        }
        Ok(c)
    }
}

/// Dimension of the fixed space of ρ(g), g in `class`, for the character
/// `row`: (1/k) Σ_{j<k} χ(g^j) with k the element order.
///
/// g^j = (g^e)^u with e = gcd(j, k) and u a unit mod k/e. The class of g^e
/// comes from the power maps; χ(h^u) is the Galois image of χ(h) under
/// ζ ↦ ζ^v for any unit v mod N with v ≡ u mod gcd(k/e, N). That avoids
/// power maps for primes not dividing the group order.
pub fn fixed_space_dim(t: &CharacterTable, row: usize, class: usize) -> Result<u64> {
    let chi = t
        .characters
        .get(row)
        .ok_or_else(|| Error::InvalidTable(format!("row index {row} out of range")))?;
    let cls = t
        .classes
        .get(class)
        .ok_or_else(|| Error::InvalidTable(format!("class index {class} out of range")))?;
    let k = cls.order;
    let n = t.conductor as u64;
    let mut sum = Cyclotomic::zero(t.conductor);
    for j in 0..k {
        let e = if j == 0 { k } else { gcd(j, k) };
        let h = t.power_class(class, e)?;
        let m = k / e;
        let u = (j / e) % m.max(1);
        let g = gcd(m, n);
        let mut v = u.max(1);
        while gcd(v, n) != 1 {
            v += g;
        }
        sum = sum.add(&chi.values[h].galois(v as i64));
    }
    let total = sum.as_integer().ok_or_else(|| {
        Error::Integrity(format!(
            "{}: row {} on class {} sums to an irrational value",
            t.name, chi.name, cls.name
        ))
    })?;
    if total < 0 || total % k as i64 != 0 {
        return Err(Error::Integrity(format!(
            "{}: row {} on class {} gives fixed dimension {total}/{k}",
            t.name, chi.name, cls.name
        )));
    }
    Ok(total as u64 / k)
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub table: String,
    pub rows: usize,
    pub failures: Vec<String>,
}

impl TableReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks degree sum, class sizes, orthogonality of all row pairs, power
/// map orders and closure of the rows under Galois action.
pub fn validate_table(t: &CharacterTable) -> TableReport {
    let mut failures = Vec::new();
    let k = t.classes.len();
    let order = t.order as i64;
    if t.characters.len() != k {
        failures.push(format!("{} rows for {k} classes", t.characters.len()));
    }
    if t.classes.first().map(|c| (c.order, c.size)) != Some((1, 1)) {
        failures.push("first class is not the identity".into());
    }
    let size_sum: u64 = t.classes.iter().map(|c| c.size).sum();
    if size_sum != t.order {
        failures.push(format!("class sizes sum to {size_sum}, not {}", t.order));
    }
    let mut deg_sq = 0i64;
    for c in &t.characters {
        match c.degree() {
            Some(d) if d > 0 => deg_sq += d * d,
            _ => failures.push(format!("row {} has no positive integer degree", c.name)),
        }
    }
    if deg_sq != order {
        failures.push(format!("squared degrees sum to {deg_sq}, not {order}"));
    }
    let conj: Vec<Vec<Cyclotomic>> = t
        .characters
        .iter()
        .map(|c| c.values.iter().map(Cyclotomic::conj).collect())
        .collect();
    for (i, a) in t.characters.iter().enumerate() {
        for (j, b) in conj.iter().enumerate().skip(i) {
            let mut s = Cyclotomic::zero(t.conductor);
            for (c, cls) in t.classes.iter().enumerate() {
                s = s.add(&a.values[c].mul(&b[c]).scale(cls.size as i64));
            }
            let want = if i == j { order } else { 0 };
            if s.as_integer() != Some(want) {
                failures.push(format!(
                    "inner product of rows {} and {} is not {}",
                    a.name,
                    t.characters[j].name,
                    want / order
                ));
            }
        }
    }
    let needed: BTreeSet<u64> = t
        .classes
        .iter()
        .flat_map(|c| prime_divisors(c.order))
        .collect();
    for p in needed {
        if !t.power_maps.contains_key(&p) {
            failures.push(format!("missing {p}-power map"));
        }
    }
    for (&p, map) in &t.power_maps {
        for (c, &img) in map.iter().enumerate() {
            let o = t.classes[c].order;
            if t.classes[img].order != o / gcd(o, p) {
                failures.push(format!(
                    "{p}-power of class {} lands in {} of the wrong order",
                    t.classes[c].name, t.classes[img].name
                ));
            }
        }
    }
    let reduced_rows: Vec<Vec<Vec<i64>>> = t
        .characters
        .iter()
        .map(|c| c.values.iter().map(Cyclotomic::reduced).collect())
        .collect();
    for v in unit_generators(t.conductor) {
        for c in &t.characters {
            let image: Vec<Vec<i64>> = c.values.iter().map(|x| x.galois(v as i64).reduced()).collect();
            if !reduced_rows.contains(&image) {
                failures.push(format!("Galois image of row {} under {v} is not a row", c.name));
            }
        }
    }
    TableReport {
        table: t.name.clone(),
        rows: t.characters.len(),
        failures,
    }
}

pub const EMBEDDED_TABLES: [&str; 4] = ["PSL(2,7)", "A6", "PSL(2,17)", "SL(2,17)"];

pub fn embedded_table(name: &str) -> Result<CharacterTable> {
    let canon = crate::group::canonical_name(name)?;
    let src = match canon {
        "PSL(2,7)" => include_str!("../data/tables/psl27.json"),
        "A6" => include_str!("../data/tables/a6.json"),
        "PSL(2,17)" => include_str!("../data/tables/psl217.json"),
        "SL(2,17)" => include_str!("../data/tables/sl217.json"),
        _ => return Err(Error::InvalidTable(format!("no embedded table for {canon}"))),
    };
    CharacterTable::from_json(src)
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub id: char,
    pub table: String,
    pub statement: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub claims: Vec<Claim>,
}

impl ClaimReport {
    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }
}

/// Fixed-space dimensions of one row on every class.
pub fn fixed_profile(t: &CharacterTable, row: usize) -> Result<Vec<u64>> {
    (0..t.classes.len()).map(|c| fixed_space_dim(t, row, c)).collect()
}

fn every_row_fixes(t: &CharacterTable, orders: &[u64]) -> Result<std::result::Result<(), String>> {
    for (r, chi) in t.characters.iter().enumerate() {
        for (c, cls) in t.classes.iter().enumerate() {
            if orders.contains(&cls.order) && fixed_space_dim(t, r, c)? == 0 {
                return Ok(Err(format!("row {} is fixed-point-free on {}", chi.name, cls.name)));
            }
        }
    }
    Ok(Ok(()))
}

/// First row of the given degree whose fixed space vanishes exactly on the
/// classes of element order `p`.
pub fn fpf_exactly_on(t: &CharacterTable, degree: i64, p: u64) -> Result<Option<usize>> {
    for (r, chi) in t.characters.iter().enumerate() {
        if chi.degree() != Some(degree) {
            continue;
        }
        let dims = fixed_profile(t, r)?;
        if t.classes.iter().zip(&dims).all(|(c, &d)| (d == 0) == (c.order == p)) {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// Runs the five fixed-point claims over the embedded tables.
pub fn verify_fixed_point_claims() -> Result<ClaimReport> {
    let a6 = embedded_table("A6")?;
    let psl217 = embedded_table("PSL(2,17)")?;
    let sl217 = embedded_table("SL(2,17)")?;
    let psl27 = embedded_table("PSL(2,7)")?;
    let mut claims = Vec::new();
    let mut push = |id, t: &CharacterTable, statement: &str, outcome: Result<std::result::Result<String, String>>| {
        let (passed, detail) = match outcome {
            Ok(Ok(d)) => (true, d),
            Ok(Err(d)) => (false, d),
            Err(e) => (false, e.to_string()),
        };
        claims.push(Claim {
            id,
            table: t.name.clone(),
            statement: statement.to_string(),
            passed,
            detail,
        });
    };
    let all_rows = |t: &CharacterTable, orders: &[u64]| {
        every_row_fixes(t, orders).map(|r| r.map(|_| format!("{} rows checked", t.characters.len())))
    };
    push('a', &a6, "every irreducible row fixes a vector on elements of order 2, 3 and 5", all_rows(&a6, &[2, 3, 5]));
    push('b', &psl217, "every irreducible row fixes a vector on elements of order 2 and 3", all_rows(&psl217, &[2, 3]));
    push('c', &sl217, "every irreducible row fixes a vector on elements of order 3", all_rows(&sl217, &[3]));
    let exact = |t: &CharacterTable, degree: i64, p: u64| {
        fpf_exactly_on(t, degree, p).map(|r| match r {
            Some(r) => Ok(format!("row {}", t.characters[r].name)),
            None => Err(format!("no degree-{degree} row is fixed-point-free exactly on order {p}")),
        })
    };
    push('d', &psl27, "a degree-3 row is fixed-point-free exactly on elements of order 7", exact(&psl27, 3, 7));
    push('e', &psl217, "a degree-16 row is fixed-point-free exactly on elements of order 17", exact(&psl217, 16, 17));
    Ok(ClaimReport { claims })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(2448).len() - 1, 768);
    }

    #[test]
    fn arithmetic_identities() {
        let n = 7;
        let sum: Cyclotomic = (0..7).fold(Cyclotomic::zero(n), |s, e| s.add(&Cyclotomic::zeta_power(n, e)));
        assert!(sum.is_zero());
        let b7 = Cyclotomic::from_terms(n, &[(1, 1), (2, 1), (4, 1)]);
        // b7 * conj(b7) = 2
        assert_eq!(b7.mul(&b7.conj()).as_integer(), Some(2));
        assert!(!b7.is_rational());
        assert!(b7.add(&b7.conj()).is_rational());
        assert_eq!(b7.add(&b7.conj()).as_integer(), Some(-1));
    }

    #[test]
    fn unit_group_generators_span() {
        for n in [1u32, 2, 5, 8, 12, 1224] {
            let gens = unit_generators(n);
            let phi = (1..n.max(2)).filter(|&v| gcd(v as u64, n as u64) == 1).count();
            let mut span: BTreeSet<u64> = [1 % n.max(1) as u64].into_iter().collect();
            loop {
                let next: BTreeSet<u64> = span
                    .iter()
                    .flat_map(|&s| gens.iter().map(move |&g| s * g as u64 % n.max(1) as u64))
                    .collect();
                if next.is_subset(&span) {
                    break;
                }
                span.extend(next);
            }
            assert_eq!(span.len(), phi.max(1), "n = {n}");
        }
    }

    #[test]
    fn trivial_row_fixes_one_dimension() {
        let t = embedded_table("PSL(2,7)").unwrap();
        for c in 0..t.classes.len() {
            assert_eq!(fixed_space_dim(&t, 0, c).unwrap(), 1);
        }
    }

    #[test]
    fn rho1_profile() {
        let t = embedded_table("PSL(2,7)").unwrap();
        let r = t.row("3a").unwrap();
        let dims = fixed_profile(&t, r).unwrap();
        for (cls, d) in t.classes.iter().zip(dims) {
            assert_eq!(d == 0, cls.order == 7, "class {}", cls.name);
        }
    }
}
