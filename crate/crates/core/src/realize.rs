//! Explicit groups for recipes, so that the prime graph a recipe promises
//! can be checked against element enumeration.
//!
//! Inner layers become permutation groups. A module extension on top is kept
//! affine, (F_r)^d ⋊ H, and only H is enumerated: an element (v, h) with
//! |h| = m has order m or m·r according to v·(1 + M_h + ... + M_h^(m-1)).

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::arith::{inv_mod, lcm, pow_mod, prime_divisors, root_of_unity};
use crate::constructor::{Action, GroupRecipe, Obligation};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{builtin, canonical_name, cyclic, prime_graph_from_spectrum, PermGroup, Permutation};

/// Square matrix over the field with `r` elements; vectors are rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    r: u64,
    data: Vec<u64>,
}

impl Matrix {
    pub fn identity(n: usize, r: u64) -> Matrix {
        let mut m = Matrix::zero(n, r);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn zero(n: usize, r: u64) -> Matrix {
        Matrix { n, r, data: vec![0; n * n] }
    }

    pub fn from_rows(r: u64, rows: &[Vec<u64>]) -> Result<Matrix> {
        let n = rows.len();
        if rows.iter().any(|row| row.len() != n) {
            return Err(Error::Contract("matrix rows must be square".into()));
        }
        Ok(Matrix {
            n,
            r,
            data: rows.iter().flatten().map(|x| x % r).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, x: u64) {
        self.data[i * self.n + j] = x % self.r;
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        let (n, r) = (self.n, self.r as u128);
        let mut out = Matrix::zero(n, self.r);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k] as u128;
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    out.data[idx] = ((out.data[idx] as u128 + a * o.data[k * n + j] as u128) % r) as u64;
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        let data = self
            .data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| ((*a as u128 + *b as u128) % self.r as u128) as u64)
            .collect();
        Matrix { n: self.n, r: self.r, data }
    }

    /// Kronecker product; row index of `self` is the major one.
    pub fn kron(&self, o: &Matrix) -> Matrix {
        let n = self.n * o.n;
        let mut out = Matrix::zero(n, self.r);
        for i in 0..self.n {
            for j in 0..self.n {
                let a = self.get(i, j) as u128;
                for k in 0..o.n {
                    for l in 0..o.n {
                        let x = a * o.get(k, l) as u128 % self.r as u128;
                        out.data[(i * o.n + k) * n + j * o.n + l] = x as u64;
                    }
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.n, self.r)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn trace(&self) -> u64 {
        (0..self.n).fold(0, |acc, i| (acc + self.get(i, i)) % self.r)
    }

    /// Multiplicative order, if at most `bound`.
    pub fn order(&self, bound: u64) -> Option<u64> {
        let mut x = self.clone();
        for k in 1..=bound {
            if x.is_identity() {
                return Some(k);
            }
            x = x.mul(self);
        }
        None
    }

    pub fn rank(&self) -> usize {
        let (n, r) = (self.n, self.r);
        let mut a = self.data.clone();
        let mut rank = 0;
        for col in 0..n {
            let Some(piv) = (rank..n).find(|&i| a[i * n + col] != 0) else {
                continue;
            };
            for j in 0..n {
                a.swap(rank * n + j, piv * n + j);
            }
            let inv = inv_mod(a[rank * n + col], r);
            for i in 0..n {
                if i != rank && a[i * n + col] != 0 {
                    let f = a[i * n + col] as u128 * inv as u128 % r as u128;
                    for j in 0..n {
                        let sub = f * a[rank * n + j] as u128 % r as u128;
                        a[i * n + j] = ((a[i * n + j] as u128 + r as u128 - sub) % r as u128) as u64;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Whether some nonzero row vector v has v·M = v.
    pub fn has_eigenvalue_one(&self) -> bool {
        let mut m = self.clone();
        for i in 0..self.n {
            let x = (m.get(i, i) + self.r - 1) % self.r;
            m.set(i, i, x);
        }
        m.rank() < self.n
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[u64]> = self.data.chunks(self.n.max(1)).collect();
        write!(f, "Matrix(mod {}; {:?})", self.r, rows)
    }
}

/// Closure of a set of matrices under multiplication, or `None` past `cap`.
pub fn matrix_closure(gens: &[Matrix], cap: usize) -> Option<Vec<Matrix>> {
    let id = Matrix::identity(gens[0].n, gens[0].r);
    let mut seen: BTreeSet<Vec<u64>> = [id.data.clone()].into();
    let mut all = vec![id.clone()];
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for s in gens {
                let h = g.mul(s);
                if seen.insert(h.data.clone()) {
                    if seen.len() > cap {
                        return None;
                    }
                    all.push(h.clone());
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    Some(all)
}

/// The 3-dimensional representation of PSL(2,7) over F_r.
#[derive(Clone, Debug)]
pub struct KleinModule {
    pub r: u64,
    /// The primitive 7th root of unity the Brauer character is read against.
    pub zeta: u64,
    pub generators: [Matrix; 2],
}

impl KleinModule {
    pub fn elements(&self) -> Vec<Matrix> {
        matrix_closure(&self.generators, 168).expect("validated to order 168")
    }
}

const KLEIN_EXPONENTS: [[u64; 3]; 6] = [[1, 2, 4], [1, 4, 2], [2, 1, 4], [2, 4, 1], [4, 1, 2], [4, 2, 1]];

/// Generators for PSL(2,7) acting on (F_r)^3, for r ≡ 1 (mod 168).
///
/// Candidates are diag(ζ^a, ζ^b, ζ^c) with {a,b,c} = {1,2,4}, and the
/// symmetric matrix with (i,j) entry (ζ^e − ζ^(−e))/s, e taken from a
/// cyclic arrangement of 1, 2, 4 and s = ±√−7. The first candidate whose
/// group has order 168 and the right Brauer character is returned.
pub fn klein_module(r: u64) -> Result<KleinModule> {
    if r < 2 || (r - 1) % 168 != 0 || !crate::arith::is_prime(r) {
        return Err(Error::Contract(format!("Klein module needs a prime r = 1 mod 168, got {r}")));
    }
    let z0 = root_of_unity(7, r).expect("7 divides r - 1");
    let mut zetas: Vec<u64> = (1..7).map(|k| pow_mod(z0, k, r)).collect();
    zetas.sort();
    for &zeta in &zetas {
        let zp = |e: u64| pow_mod(zeta, e % 7, r);
        // Gauss sum: (ζ + ζ² + ζ⁴) − (ζ³ + ζ⁵ + ζ⁶) squares to −7.
        let gauss = (zp(1) + zp(2) + zp(4) + 3 * r - zp(3) - zp(5) - zp(6)) % r;
        debug_assert_eq!(gauss as u128 * gauss as u128 % r as u128, (r - 7) as u128);
        for s in [gauss, r - gauss] {
            let s_inv = inv_mod(s, r);
            for diag_e in KLEIN_EXPONENTS {
                let mut d = Matrix::zero(3, r);
                for i in 0..3 {
                    d.set(i, i, zp(diag_e[i]));
                }
                for row_e in KLEIN_EXPONENTS {
                    let mut m = Matrix::zero(3, r);
                    for i in 0..3 {
                        for j in 0..3 {
                            let e = row_e[(i + j) % 3];
                            let x = (zp(e) + r - zp(7 - e)) as u128 * s_inv as u128 % r as u128;
                            m.set(i, j, x as u64);
                        }
                    }
                    let k = KleinModule { r, zeta, generators: [d.clone(), m] };
                    if klein_valid(&k) {
                        return Ok(k);
                    }
                }
            }
        }
    }
    Err(Error::Integrity(format!("no Klein generator convention validates over F_{r}")))
}

/// Order 168, Brauer character 3, -1, 0, 1, b7, b7* on orders 1, 2, 3, 4, 7,
/// no eigenvalue 1 in order 7, eigenvalue 1 in orders 2, 3, 4.
fn klein_valid(k: &KleinModule) -> bool {
    let Some(elems) = matrix_closure(&k.generators, 168) else {
        return false;
    };
    if elems.len() != 168 {
        return false;
    }
    let r = k.r;
    let zp = |e: u64| pow_mod(k.zeta, e, r);
    let b7 = (zp(1) + zp(2) + zp(4)) % r;
    let b7c = (zp(3) + zp(5) + zp(6)) % r;
    elems.iter().all(|x| match (x.order(8), x.trace()) {
        (Some(1), t) => t == 3 % r,
        (Some(2), t) => t == r - 1 && x.has_eigenvalue_one(),
        (Some(3), t) => t == 0 && x.has_eigenvalue_one(),
        (Some(4), t) => t == 1 && x.has_eigenvalue_one(),
        (Some(7), t) => (t == b7 || t == b7c) && !x.has_eigenvalue_one(),
        _ => false,
    })
}

/// What a generator of an assembled permutation group came from.
#[derive(Clone, Debug, PartialEq, Eq)]
enum GenKind {
    Prime(u64),
    Atom(&'static str),
}

struct Labeled {
    group: PermGroup,
    kinds: Vec<GenKind>,
}

/// Visits (h, M_h) for every h in `actor`, checking on every Cayley-graph
/// edge that the generator matrices multiply consistently.
fn for_each_pair(
    actor: &PermGroup,
    mats: &[Matrix],
    cap: u64,
    mut f: impl FnMut(&Permutation, &Matrix),
) -> Result<u64> {
    let gens = actor.generators();
    let id = Permutation::identity(actor.degree());
    let mut buf = Vec::new();
    id.encode(&mut buf);
    let mut seen: HashMap<Box<[u8]>, Matrix> = HashMap::new();
    let id_m = Matrix::identity(mats[0].n, mats[0].r);
    f(&id, &id_m);
    seen.insert(buf.clone().into_boxed_slice(), id_m.clone());
    let mut frontier = vec![(id, id_m)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (g, m) in &frontier {
            for (s, ms) in gens.iter().zip(mats) {
                let h = g.then(s);
                let mh = m.mul(ms);
                h.encode(&mut buf);
                match seen.get(buf.as_slice()) {
                    Some(prev) if *prev != mh => {
                        return Err(Error::Capability(
                            "generator matrices do not define an action of the actor".into(),
                        ));
                    }
                    Some(_) => {}
                    None => {
                        if seen.len() as u64 >= cap {
                            return Err(Error::SizeCap {
                                what: "actor enumeration",
                                limit: cap,
                                actual: seen.len() as u64 + 1,
                            });
                        }
                        f(&h, &mh);
                        seen.insert(buf.clone().into_boxed_slice(), mh.clone());
                        next.push((h, mh));
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(seen.len() as u64)
}

/// Matrices for the builtin generators of PSL(2,7) in the Klein module.
fn klein_images(t: &PermGroup, r: u64) -> Result<Vec<Matrix>> {
    let k = klein_module(r)?;
    let elems = k.elements();
    let gens = t.generators();
    let with_order = |o: u64| -> Vec<&Matrix> { elems.iter().filter(|x| x.order(8) == Some(o)).collect() };
    let candidates: Vec<Vec<&Matrix>> = gens.iter().map(|g| with_order(g.order())).collect();
    let mut pick = vec![0usize; gens.len()];
    // Odometer over candidate tuples.
    loop {
        if candidates.iter().any(Vec::is_empty) {
            break;
        }
        let mats: Vec<Matrix> = pick.iter().zip(&candidates).map(|(&i, c)| c[i].clone()).collect();
        if matches!(for_each_pair(t, &mats, 168, |_, _| {}), Ok(168)) {
            return Ok(mats);
        }
        let mut i = 0;
        while i < pick.len() {
            pick[i] += 1;
            if pick[i] < candidates[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
        if i == pick.len() {
            break;
        }
    }
    Err(Error::Integrity("builtin PSL(2,7) does not map onto the Klein group".into()))
}

fn build_perm(recipe: &GroupRecipe, cap: u64) -> Result<Labeled> {
    match recipe {
        GroupRecipe::Cyclic { p } => Ok(Labeled {
            group: cyclic(*p)?,
            kinds: vec![GenKind::Prime(*p)],
        }),
        GroupRecipe::K3Atom { name } => {
            let canon = canonical_name(name)?;
            let group = builtin(canon)?;
            let kinds = vec![GenKind::Atom(canon); group.generators().len()];
            Ok(Labeled { group, kinds })
        }
        GroupRecipe::Product { left, right } => {
            let (a, b) = (build_perm(left, cap)?, build_perm(right, cap)?);
            let n = a.group.degree() + b.group.degree();
            let gens = a
                .group
                .generators()
                .iter()
                .map(|g| g.padded(n))
                .chain(b.group.generators().iter().map(|g| g.shifted(a.group.degree(), n)))
                .collect();
            let mut kinds = a.kinds;
            kinds.extend(b.kinds);
            Ok(Labeled {
                group: PermGroup::new(n, gens, None)?,
                kinds,
            })
        }
        GroupRecipe::ModuleExt {
            actor,
            module_prime: r,
            module_rank: d,
            action_profile,
            obligations,
        } => {
            let order = recipe.order()?;
            if order > cap as u128 {
                return Err(Error::SizeCap {
                    what: "permutation realization",
                    limit: cap,
                    actual: u64::try_from(order).unwrap_or(u64::MAX),
                });
            }
            let h = build_perm(actor, cap)?;
            let d = *d as usize;
            let mats = module_matrices(&h, *r, d, action_profile, obligations)?;
            for_each_pair(&h.group, &mats, cap, |_, _| {})?;
            let r = *r;
            let points = (r as usize).pow(d as u32);
            let n = points + h.group.degree();
            let digits = |mut x: usize| -> Vec<u64> {
                (0..d)
                    .map(|_| {
                        let q = (x % r as usize) as u64;
                        x /= r as usize;
                        q
                    })
                    .collect()
            };
            let index = |v: &[u64]| -> usize { v.iter().rev().fold(0, |acc, &x| acc * r as usize + x as usize) };
            let mut gens = Vec::new();
            let mut kinds = Vec::new();
            for i in 0..d {
                let images = (0..points)
                    .map(|x| {
                        let mut v = digits(x);
                        v[i] = (v[i] + 1) % r;
                        index(&v) as u32
                    })
                    .chain(points as u32..n as u32)
                    .collect();
                gens.push(Permutation::from_images(images)?);
                kinds.push(GenKind::Prime(r));
            }
            for (g, m) in h.group.generators().iter().zip(&mats) {
                let mut images: Vec<u32> = (0..points)
                    .map(|x| {
                        let v = digits(x);
                        let w: Vec<u64> = (0..d)
                            .map(|j| {
                                let s: u128 = (0..d).map(|i| v[i] as u128 * m.get(i, j) as u128).sum();
                                (s % r as u128) as u64
                            })
                            .collect();
                        index(&w) as u32
                    })
                    .collect();
                images.extend(g.shifted(points, n).images()[points..].iter().copied());
                gens.push(Permutation::from_images(images)?);
            }
            kinds.extend(h.kinds);
            Ok(Labeled {
                group: PermGroup::new(n, gens, None)?,
                kinds,
            })
        }
    }
}

/// Generator matrices for the module (F_r)^d of the labeled actor.
///
/// Primes marked FPF must form a cyclic group A with one generator per
/// prime; FIXES primes W (one generator each) permute the basis e_w,
/// w ∈ W, and A acts on e_w by a faithful character of A twisted by w.
/// This is the module induced from that character. A PSL(2,7) factor with
/// a non-trivial profile contributes the Klein module as a tensor factor.
fn module_matrices(
    actor: &Labeled,
    r: u64,
    d: usize,
    profile: &BTreeMap<u64, Action>,
    obligations: &[Obligation],
) -> Result<Vec<Matrix>> {
    let gens = actor.group.generators();
    let cap_err = |m: String| Error::Capability(m);

    let atoms: BTreeSet<&str> = actor
        .kinds
        .iter()
        .filter_map(|k| match k {
            GenKind::Atom(n) => Some(*n),
            GenKind::Prime(_) => None,
        })
        .collect();
    let mut atom_mats: Option<Vec<Matrix>> = None;
    if let Some(&name) = atoms.iter().next() {
        if atoms.len() > 1 {
            return Err(cap_err("several simple factors in one actor".into()));
        }
        let t = builtin(name)?;
        let t_primes = prime_divisors(t.order()?);
        let trivial = t_primes.iter().all(|p| profile.get(p) == Some(&Action::Trivial));
        if !trivial {
            let klein_cited = obligations.iter().any(|o| {
                matches!(o, Obligation::RepTable { group, row, .. }
                    if canonical_name(group).ok() == Some("PSL(2,7)") && row == "3a")
            });
            if name != "PSL(2,7)" || !klein_cited {
                return Err(cap_err(format!("no explicit matrices for the {name} module")));
            }
            let n_atom = actor.kinds.iter().filter(|k| matches!(k, GenKind::Atom(_))).count();
            if n_atom != t.generators().len() {
                return Err(cap_err("PSL(2,7) appears more than once".into()));
            }
            atom_mats = Some(klein_images(&t, r)?);
        }
    }

    let action_of = |s: u64| -> Result<Action> {
        profile
            .get(&s)
            .copied()
            .ok_or_else(|| Error::InvalidRecipe(format!("prime {s} missing from the profile")))
    };
    let mut by_prime: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, k) in actor.kinds.iter().enumerate() {
        if let GenKind::Prime(s) = k {
            by_prime.entry(*s).or_default().push(i);
        }
    }
    let mut fpf: Vec<(u64, usize)> = Vec::new();
    let mut fixes: Vec<(u64, usize)> = Vec::new();
    for (&s, idx) in &by_prime {
        match action_of(s)? {
            Action::Trivial => {}
            a => {
                if idx.len() != 1 {
                    return Err(cap_err(format!("prime {s} has {} generators", idx.len())));
                }
                if a == Action::Fpf {
                    fpf.push((s, idx[0]));
                } else {
                    fixes.push((s, idx[0]));
                }
            }
        }
    }
    let ind: usize = fixes.iter().map(|(s, _)| *s as usize).product();
    let kd = if atom_mats.is_some() { 3 } else { 1 };
    if kd * ind != d {
        return Err(cap_err(format!(
            "module rank {d} is not {kd} x {ind} from the induced construction"
        )));
    }

    // Transversal elements: w = prod g_s^(e_s) over the FIXES primes.
    let w_perm = |mut w: usize| -> Permutation {
        let mut p = Permutation::identity(actor.group.degree());
        for (s, i) in &fixes {
            let e = w % *s as usize;
            w /= *s as usize;
            p = p.then(&gens[*i].pow(e as u64));
        }
        p
    };
    let transversal: Vec<Permutation> = (0..ind).map(w_perm).collect();

    let mut small: Vec<Matrix> = vec![Matrix::identity(ind, r); gens.len()];
    for (f, i) in &fpf {
        let omega = root_of_unity(*f, r).ok_or_else(|| cap_err(format!("{f} does not divide {r} - 1")))?;
        let g = &gens[*i];
        let powers: Vec<Permutation> = (0..*f).map(|m| g.pow(m)).collect();
        let mut m = Matrix::zero(ind, r);
        for (w, wp) in transversal.iter().enumerate() {
            let c = wp.then(g).then(&wp.inverse());
            let e = powers
                .iter()
                .position(|x| *x == c)
                .ok_or_else(|| cap_err(format!("a conjugate of the order-{f} generator leaves its cyclic group")))?;
            m.set(w, w, pow_mod(omega, e as u64, r));
        }
        small[*i] = m;
    }
    let mut radix = 1usize;
    for (s, i) in &fixes {
        let s = *s as usize;
        let mut m = Matrix::zero(ind, r);
        for w in 0..ind {
            let digit = (w / radix) % s;
            let target = w - digit * radix + ((digit + 1) % s) * radix;
            m.set(w, target, 1);
        }
        small[*i] = m;
        radix *= s;
    }

    let id_t = Matrix::identity(kd, r);
    let id_w = Matrix::identity(ind, r);
    let mut atom_iter = atom_mats.into_iter().flatten();
    Ok(actor
        .kinds
        .iter()
        .zip(small)
        .map(|(k, m)| match k {
            GenKind::Atom(_) => match atom_iter.next() {
                Some(a) => a.kron(&id_w),
                None => Matrix::identity(d, r),
            },
            GenKind::Prime(_) => id_t.kron(&m),
        })
        .collect())
}

/// (F_r)^d ⋊ actor, given by one matrix per actor generator.
#[derive(Clone, Debug)]
pub struct AffineGroup {
    pub actor: PermGroup,
    pub module_prime: u64,
    pub module_rank: u32,
    pub matrices: Vec<Matrix>,
}

#[derive(Clone, Debug)]
pub enum Realization {
    Perm(PermGroup),
    Affine(AffineGroup),
    /// Direct product kept as two factors when the whole is too large.
    Product(Box<Realization>, Box<Realization>),
}

/// Order and element-order spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupStats {
    pub order: u128,
    pub spectrum: BTreeSet<u64>,
}

impl Realization {
    /// Enumerates at most `cap` elements per permutation group or actor.
    pub fn stats(&self, cap: u64) -> Result<GroupStats> {
        match self {
            Realization::Perm(g) => {
                let mut spectrum = BTreeSet::new();
                let n = g.for_each_element(cap, |x| {
                    spectrum.insert(x.order());
                })?;
                Ok(GroupStats { order: n as u128, spectrum })
            }
            Realization::Affine(a) => {
                let (r, d) = (a.module_prime, a.matrices[0].dim());
                let mut spectrum = BTreeSet::new();
                let n = for_each_pair(&a.actor, &a.matrices, cap, |h, m| {
                    let k = h.order();
                    let mut sum = Matrix::zero(d, r);
                    let mut pow = Matrix::identity(d, r);
                    for _ in 0..k {
                        sum = sum.add(&pow);
                        pow = pow.mul(m);
                    }
                    spectrum.insert(k);
                    if !sum.is_zero() {
                        spectrum.insert(k * r);
                    }
                })?;
                let order = (r as u128)
                    .checked_pow(a.module_rank)
                    .and_then(|m| m.checked_mul(n as u128))
                    .ok_or_else(|| Error::InvalidRecipe("order overflows u128".into()))?;
                Ok(GroupStats { order, spectrum })
            }
            Realization::Product(a, b) => {
                let (x, y) = (a.stats(cap)?, b.stats(cap)?);
                let spectrum = x
                    .spectrum
                    .iter()
                    .flat_map(|&p| y.spectrum.iter().map(move |&q| lcm(p, q)))
                    .collect();
                Ok(GroupStats {
                    order: x.order * y.order,
                    spectrum,
                })
            }
        }
    }

    pub fn prime_graph(&self, cap: u64) -> Result<Graph> {
        let s = self.stats(cap)?;
        let exponent = s.spectrum.iter().fold(1, |acc, &k| lcm(acc, k));
        Ok(prime_graph_from_spectrum(exponent, &s.spectrum))
    }

    pub fn describe(&self) -> String {
        match self {
            Realization::Perm(g) => format!("permutation group of degree {}", g.degree()),
            Realization::Affine(a) => format!(
                "(F_{})^{} by a permutation group of degree {}",
                a.module_prime,
                a.module_rank,
                a.actor.degree()
            ),
            Realization::Product(a, b) => format!("({}) x ({})", a.describe(), b.describe()),
        }
    }
}

/// Realizes `recipe` with at most `max_order` elements enumerated in any
/// one permutation group or affine actor.
pub fn realize(recipe: &GroupRecipe, max_order: u64) -> Result<Realization> {
    recipe.validate()?;
    realize_within(recipe, max_order)
}

fn realize_within(recipe: &GroupRecipe, cap: u64) -> Result<Realization> {
    match recipe {
        GroupRecipe::ModuleExt {
            actor,
            module_prime,
            module_rank,
            action_profile,
            obligations,
        } => {
            let actor_order = actor.order()?;
            if actor_order > cap as u128 {
                return Err(Error::SizeCap {
                    what: "affine actor",
                    limit: cap,
                    actual: u64::try_from(actor_order).unwrap_or(u64::MAX),
                });
            }
            let h = build_perm(actor, cap)?;
            let matrices = module_matrices(&h, *module_prime, *module_rank as usize, action_profile, obligations)?;
            Ok(Realization::Affine(AffineGroup {
                actor: h.group,
                module_prime: *module_prime,
                module_rank: *module_rank,
                matrices,
            }))
        }
        GroupRecipe::Product { left, right } if recipe.order()? > cap as u128 => Ok(Realization::Product(
            Box::new(realize_within(left, cap)?),
            Box::new(realize_within(right, cap)?),
        )),
        _ => {
            let order = recipe.order()?;
            if order > cap as u128 {
                return Err(Error::SizeCap {
                    what: "permutation realization",
                    limit: cap,
                    actual: u64::try_from(order).unwrap_or(u64::MAX),
                });
            }
            Ok(Realization::Perm(build_perm(recipe, cap)?.group))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructor::eval_prime_graph;

    fn frob(p: u64, r: u64) -> GroupRecipe {
        GroupRecipe::ModuleExt {
            actor: Box::new(GroupRecipe::cyclic(p)),
            module_prime: r,
            module_rank: 1,
            action_profile: [(p, Action::Fpf)].into(),
            obligations: vec![Obligation::FrobeniusCyclic { prime: p }],
        }
    }

    #[test]
    fn f21_as_affine_and_as_permutations() {
        let r = frob(3, 7);
        let s = realize(&r, 1000).unwrap().stats(1000).unwrap();
        assert_eq!(s.order, 21);
        assert_eq!(s.spectrum, [1, 3, 7].into());
        let p = build_perm(&r, 1000).unwrap().group;
        assert_eq!(p.order().unwrap(), 21);
        assert_eq!(p.order_spectrum().unwrap(), [1, 3, 7].into());
    }

    #[test]
    fn rank_and_eigenvalues() {
        let m = Matrix::from_rows(7, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert!(Matrix::identity(3, 5).has_eigenvalue_one());
        let swap = Matrix::from_rows(5, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(swap.has_eigenvalue_one());
        assert_eq!(swap.order(4), Some(2));
    }

    #[test]
    fn klein_337() {
        let k = klein_module(337).unwrap();
        assert_eq!(k.elements().len(), 168);
        assert!(klein_module(338).is_err());
        assert!(klein_module(7).is_err());
    }

    #[test]
    fn product_falls_back_to_factors_past_the_cap() {
        let big = GroupRecipe::product(frob(3, 7), frob(5, 11));
        let small_cap = realize(&big, 100).unwrap();
        assert!(matches!(small_cap, Realization::Product(..)));
        let g = small_cap.prime_graph(100).unwrap();
        assert_eq!(g, eval_prime_graph(&big).unwrap());
    }
}
