//! Subgroup-level algebra: generated subgroups, normal closures, centres,
//! derived and lower central series, quotients and numeric invariants.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{PermGroup, StabChain};
use crate::perm::Permutation;

/// A subgroup together with the group it was computed inside.
#[derive(Clone, Debug)]
pub struct SubgroupHandle {
    parent: PermGroup,
    sub: PermGroup,
    index: u128,
    normal: bool,
}

impl SubgroupHandle {
    /// Wraps `sub`, checking containment and computing index and normality.
    pub fn new(parent: &PermGroup, sub: PermGroup) -> Result<Self> {
        if sub.degree() != parent.degree() {
            return Err(Error::DegreeMismatch {
                left: parent.degree(),
                right: sub.degree(),
            });
        }
        if !sub.is_subgroup_of(parent) {
            return Err(Error::NotMember);
        }
        let normal = is_normalized_by(&sub, parent);
        Ok(SubgroupHandle {
            parent: parent.clone(),
            index: parent.order() / sub.order(),
            sub,
            normal,
        })
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(group: &PermGroup) -> Self {
        SubgroupHandle {
            parent: group.clone(),
            sub: group.clone(),
            index: 1,
            normal: true,
        }
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn group(&self) -> &PermGroup {
        &self.sub
    }

    pub fn order(&self) -> u128 {
        self.sub.order()
    }

    pub fn index(&self) -> u128 {
        self.index
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.index == 1
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.sub.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &SubgroupHandle) -> bool {
        self.sub.is_subgroup_of(&other.sub)
    }

    pub fn same_subgroup(&self, other: &SubgroupHandle) -> bool {
        self.sub.same_group(&other.sub)
    }
}

/// Is every conjugate of a generator of `sub` by a generator of `by` in `sub`?
pub fn is_normalized_by(sub: &PermGroup, by: &PermGroup) -> bool {
    by.generators().iter().all(|g| {
        sub.generators()
            .iter()
            .all(|s| sub.contains(&s.conjugate_by(g)))
    })
}

/// Smallest group containing `seeds`, without reference to a parent.
/// Only seeds that enlarge the group so far are kept as generators.
pub fn closure(degree: usize, seeds: &[Permutation], cap: usize) -> Result<PermGroup> {
    let mut chain = StabChain::trivial(degree);
    let mut gens = Vec::new();
    for s in seeds {
        if chain.extend(s)? {
            gens.push(s.clone());
        }
    }
    if gens.is_empty() {
        gens.push(Permutation::identity(degree));
    }
    Ok(PermGroup::from_parts(degree, gens, cap, Some(chain)))
}

/// `<seeds>` as a subgroup of `parent`. Every seed must lie in `parent`.
pub fn generated_subgroup(parent: &PermGroup, seeds: &[Permutation]) -> Result<SubgroupHandle> {
    for s in seeds {
        if s.degree() != parent.degree() {
            return Err(Error::DegreeMismatch {
                left: parent.degree(),
                right: s.degree(),
            });
        }
        if !parent.contains(s) {
            return Err(Error::NotMember);
        }
    }
    let sub = closure(parent.degree(), seeds, parent.cap())?;
    SubgroupHandle::new(parent, sub)
}

/// Normal closure of `seeds` in `group`.
pub fn normal_closure(group: &PermGroup, seeds: &[Permutation]) -> Result<SubgroupHandle> {
    let degree = group.degree();
    let mut chain = StabChain::trivial(degree);
    let mut gens: Vec<Permutation> = Vec::new();
    for s in seeds {
        if !group.contains(s) {
            return Err(Error::NotMember);
        }
        if chain.extend(s)? {
            gens.push(s.clone());
        }
    }
    let mut k = 0;
    while k < gens.len() {
        let s = gens[k].clone();
        k += 1;
        for g in group.generators() {
            let c = s.conjugate_by(g);
            if chain.extend(&c)? {
                gens.push(c);
            }
        }
    }
    if gens.is_empty() {
        gens.push(Permutation::identity(degree));
    }
    let sub = PermGroup::from_parts(degree, gens, group.cap(), Some(chain));
    Ok(SubgroupHandle {
        parent: group.clone(),
        index: group.order() / sub.order(),
        sub,
        normal: true,
    })
}

/// `[A, B]` for subgroups `A`, `B` that are both normal in `group`.
pub fn commutator_subgroup(
    group: &PermGroup,
    a: &PermGroup,
    b: &PermGroup,
) -> Result<SubgroupHandle> {
    let mut seeds = Vec::new();
    for x in a.generators() {
        for y in b.generators() {
            let c = Permutation::commutator(x, y);
            if !c.is_identity() {
                seeds.push(c);
            }
        }
    }
    normal_closure(group, &seeds)
}

pub fn derived_subgroup(group: &PermGroup) -> SubgroupHandle {
    commutator_subgroup(group, group, group).expect("commutators lie in the group")
}

pub fn center(group: &PermGroup) -> Result<SubgroupHandle> {
    let central: Vec<Permutation> = group
        .members()?
        .iter()
        .filter(|z| group.generators().iter().all(|g| z.commutes_with(g)))
        .cloned()
        .collect();
    generated_subgroup(group, &central)
}

/// `C_G(x)` by enumeration.
pub fn centralizer(group: &PermGroup, x: &Permutation) -> Result<SubgroupHandle> {
    let commuting: Vec<Permutation> = group
        .members()?
        .iter()
        .filter(|g| g.commutes_with(x))
        .cloned()
        .collect();
    generated_subgroup(group, &commuting)
}

#[derive(Clone, Debug)]
pub struct DerivedSeries {
    /// `G = G^(0) >= G^(1) >= ...`, stopping at the first repeat or at 1.
    pub terms: Vec<SubgroupHandle>,
    /// Number of steps needed to reach 1; `None` when the series stalls above 1.
    pub derived_length: Option<usize>,
}

impl DerivedSeries {
    pub fn is_solvable(&self) -> bool {
        self.derived_length.is_some()
    }

    pub fn is_metabelian(&self) -> bool {
        self.derived_length.is_some_and(|l| l <= 2)
    }
}

pub fn derived_series(group: &PermGroup) -> DerivedSeries {
    let mut terms = vec![SubgroupHandle::whole(group)];
    loop {
        let current = terms.last().unwrap();
        if current.is_trivial() {
            let length = terms.len() - 1;
            return DerivedSeries {
                terms,
                derived_length: Some(length),
            };
        }
        let next = commutator_subgroup(group, current.group(), current.group())
            .expect("commutators lie in the group");
        if next.order() == current.order() {
            return DerivedSeries {
                terms,
                derived_length: None,
            };
        }
        terms.push(next);
    }
}

pub fn is_solvable(group: &PermGroup) -> bool {
    derived_series(group).is_solvable()
}

#[derive(Clone, Debug)]
pub struct LowerCentralSeries {
    /// `gamma_1 = G, gamma_{i+1} = [gamma_i, G]`, stopping at 1 or at a repeat.
    pub terms: Vec<SubgroupHandle>,
    /// Nilpotence class, or `None` when the series stalls above 1.
    pub class: Option<usize>,
}

impl LowerCentralSeries {
    pub fn is_nilpotent(&self) -> bool {
        self.class.is_some()
    }
}

pub fn lower_central_series(group: &PermGroup) -> LowerCentralSeries {
    let mut terms = vec![SubgroupHandle::whole(group)];
    loop {
        let current = terms.last().unwrap();
        if current.is_trivial() {
            let class = terms.len() - 1;
            return LowerCentralSeries {
                terms,
                class: Some(class),
            };
        }
        let next = commutator_subgroup(group, current.group(), group)
            .expect("commutators lie in the group");
        if next.order() == current.order() {
            return LowerCentralSeries { terms, class: None };
        }
        terms.push(next);
    }
}

pub fn nilpotence_class(group: &PermGroup) -> Option<usize> {
    lower_central_series(group).class
}

/// Exponent (lcm of element orders) and the prime divisors of `|G|`.
pub fn exponent_and_primes(group: &PermGroup) -> Result<(u128, PrimeSet)> {
    let exponent = group
        .members()?
        .iter()
        .fold(1u128, |acc, g| lcm(acc, g.order()));
    Ok((exponent, PrimeSet::of_order(group.order())))
}

/// Permutation image of the action of `group` on the right cosets of a
/// normal subgroup. Cosets are numbered in the order of their minimal
/// members; `x` acts by `Ng -> Ngx^-1`, which makes the map a homomorphism
/// under the right-factor-first product.
pub fn quotient(group: &PermGroup, normal: &SubgroupHandle) -> Result<PermGroup> {
    if !normal.parent().same_group(group) {
        return Err(Error::NotMember);
    }
    if !normal.is_normal() {
        return Err(Error::NotNormal);
    }
    let limit = group.cap() as u128;
    if normal.index() > limit {
        return Err(Error::QuotientTooLarge {
            index: normal.index(),
            limit,
        });
    }
    let elements = group.members()?;
    let kernel = normal.group().members()?;
    let mut coset_of: HashMap<&Permutation, usize> = HashMap::with_capacity(elements.len());
    let mut reps: Vec<&Permutation> = Vec::new();
    for g in elements {
        if coset_of.contains_key(g) {
            continue;
        }
        let idx = reps.len();
        reps.push(g);
        for n in kernel {
            let ng = n.compose_unchecked(g);
            let key = elements
                .binary_search(&ng)
                .map(|i| &elements[i])
                .expect("coset element lies in the group");
            coset_of.insert(key, idx);
        }
    }
    let image_of = |x: &Permutation| -> Permutation {
        let xinv = x.inverse();
        let images = reps
            .iter()
            .map(|r| {
                let y = r.compose_unchecked(&xinv);
                coset_of[&y]
            })
            .collect();
        Permutation::from_images(images).expect("coset action is a bijection")
    };
    let gens: Vec<Permutation> = group.generators().iter().map(image_of).collect();
    PermGroup::new(gens).map(|q| q.with_cap(group.cap()))
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u128, b: u128) -> u128 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors by trial division, ascending.
pub fn prime_factors(mut n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d as u64);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

/// If `n` is a power of a single prime, that prime.
pub fn prime_power_base(n: u128) -> Option<u64> {
    match prime_factors(n).as_slice() {
        [p] => Some(*p),
        _ => None,
    }
}

/// A finite set of primes, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PrimeSet(Vec<u64>);

impl PrimeSet {
    pub fn new(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut v: Vec<u64> = primes.into_iter().collect();
        if let Some(&bad) = v.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::NotPrime(bad));
        }
        v.sort_unstable();
        v.dedup();
        Ok(PrimeSet(v))
    }

    pub fn empty() -> Self {
        PrimeSet(Vec::new())
    }

    /// Prime divisors of `n`.
    pub fn of_order(n: u128) -> Self {
        PrimeSet(prime_factors(n))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn intersection(&self, other: &PrimeSet) -> PrimeSet {
        PrimeSet(self.iter().filter(|&p| other.contains(p)).collect())
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        let mut v = self.0.clone();
        v.extend(other.iter());
        v.sort_unstable();
        v.dedup();
        PrimeSet(v)
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.iter().all(|p| other.contains(p))
    }

    pub fn without(&self, p: u64) -> PrimeSet {
        PrimeSet(self.iter().filter(|&q| q != p).collect())
    }

    /// All nonempty subsets with at most `max_len` elements, in order of
    /// size and then lexicographically.
    pub fn subsets(&self, max_len: usize) -> Vec<PrimeSet> {
        let n = self.0.len();
        let mut out: Vec<PrimeSet> = (1u64..(1 << n))
            .filter(|mask| (mask.count_ones() as usize) <= max_len)
            .map(|mask| {
                PrimeSet(
                    (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0)));
        out
    }
}

impl TryFrom<Vec<u64>> for PrimeSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        PrimeSet::new(v)
    }
}

impl From<PrimeSet> for Vec<u64> {
    fn from(p: PrimeSet) -> Self {
        p.0
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for PrimeSet {
    type Err = Error;

    /// Accepts `"3,13"`, `"{3,13}"` or `"{}"`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        let primes = body
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad prime {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        PrimeSet::new(primes)
    }
}
