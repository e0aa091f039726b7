//! Hughes subgroups `H_p(G)`, their exponent variant `H_n(G)`, the
//! prime-set variant `H_π(G)`, and the classification of where `H_π(G)`
//! sits relative to `1`, `G` and the individual `H_p(G)`.
//!
//! Generators are collected by enumerating every element of `G`, so all
//! operations here inherit the enumeration cap of the group.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{closure, is_prime, PrimeSet, SubgroupHandle};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::structure::{frobenius_decomposition, FrobeniusCertificate};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HughesKind {
    /// `H_p`: generated by `x` with `x^p != 1`.
    Prime(u64),
    /// `H_n`: generated by `x` with `x^n != 1`.
    Exponent(u64),
    /// `H_π`: generated by `x` with `x^p != 1` for every `p` in the set.
    /// `used` is the set actually applied (`requested ∩ π(G)` when
    /// `normalized`).
    Primes {
        requested: PrimeSet,
        used: PrimeSet,
        normalized: bool,
    },
}

#[derive(Clone, Debug)]
pub struct HughesResult {
    pub kind: HughesKind,
    pub subgroup: SubgroupHandle,
    /// Number of elements of `G` that qualified as generators.
    pub generator_count: usize,
}

impl HughesResult {
    pub fn order(&self) -> u128 {
        self.subgroup.order()
    }
}

fn generated_by_orders(
    group: &PermGroup,
    qualifies: impl Fn(u128) -> bool,
) -> Result<(SubgroupHandle, usize)> {
    let seeds: Vec<Permutation> = group
        .members()?
        .iter()
        .filter(|x| qualifies(x.order()))
        .cloned()
        .collect();
    let sub = closure(group.degree(), &seeds, group.cap())?;
    Ok((SubgroupHandle::new(group, sub)?, seeds.len()))
}

/// `H_p(G) = <x : x^p != 1>`.
pub fn hughes_p(group: &PermGroup, p: u64) -> Result<HughesResult> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p = p as u128;
    let (subgroup, generator_count) = generated_by_orders(group, |o| o != 1 && o != p)?;
    Ok(HughesResult {
        kind: HughesKind::Prime(p as u64),
        subgroup,
        generator_count,
    })
}

/// `H_n(G) = <x : x^n != 1>`, i.e. elements whose order does not divide `n`.
pub fn hughes_n(group: &PermGroup, n: u64) -> Result<HughesResult> {
    if n == 0 {
        return Err(Error::ZeroExponent);
    }
    let (subgroup, generator_count) =
        generated_by_orders(group, |o| !(n as u128).is_multiple_of(o))?;
    Ok(HughesResult {
        kind: HughesKind::Exponent(n),
        subgroup,
        generator_count,
    })
}

/// `H_π(G)` with `π` first replaced by `π ∩ π(G)`.
pub fn hughes_pi(group: &PermGroup, pi: &PrimeSet) -> Result<HughesResult> {
    hughes_pi_with(group, pi, true)
}

/// `H_π(G) = <x : order(x) ∉ {1} ∪ π>`, optionally normalizing `π` to
/// `π ∩ π(G)` first. Normalization never changes the subgroup.
pub fn hughes_pi_with(group: &PermGroup, pi: &PrimeSet, normalize: bool) -> Result<HughesResult> {
    let used = if normalize {
        pi.intersection(&PrimeSet::of_order(group.order()))
    } else {
        pi.clone()
    };
    let (subgroup, generator_count) = generated_by_orders(group, |o| {
        o != 1 && !(o <= u64::MAX as u128 && used.contains(o as u64))
    })?;
    Ok(HughesResult {
        kind: HughesKind::Primes {
            requested: pi.clone(),
            used,
            normalized: normalize,
        },
        subgroup,
        generator_count,
    })
}

/// `⋂_{p ∈ π(G)} H_p(G)`, by intersecting element sets.
pub fn hughes_intersection(group: &PermGroup) -> Result<SubgroupHandle> {
    let primes = PrimeSet::of_order(group.order());
    if primes.len() < 2 {
        return Err(Error::TooFewPrimes(primes.len()));
    }
    intersection_over(group, &primes)
}

/// `⋂_{p ∈ π} H_p(G)` for any nonempty set of primes.
pub fn intersection_over(group: &PermGroup, primes: &PrimeSet) -> Result<SubgroupHandle> {
    let mut common: Option<Vec<Permutation>> = None;
    for p in primes.iter() {
        let h = hughes_p(group, p)?;
        let members = h.subgroup.group().members()?;
        common = Some(match common {
            None => members.to_vec(),
            Some(prev) => prev
                .into_iter()
                .filter(|x| members.binary_search(x).is_ok())
                .collect(),
        });
    }
    let elems = common.unwrap_or_else(|| group.members().map(<[_]>::to_vec).unwrap_or_default());
    let sub = closure(group.degree(), &elems, group.cap())?;
    SubgroupHandle::new(group, sub)
}

/// Which primes to use for `H_π`: the caller's set, or all of `π(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PiChoice {
    All,
    Set(PrimeSet),
}

impl PiChoice {
    pub fn resolve(&self, group: &PermGroup) -> PrimeSet {
        let all = PrimeSet::of_order(group.order());
        match self {
            PiChoice::All => all,
            PiChoice::Set(pi) => pi.intersection(&all),
        }
    }
}

impl FromStr for PiChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("all") {
            Ok(PiChoice::All)
        } else {
            s.parse().map(PiChoice::Set)
        }
    }
}

impl fmt::Display for PiChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PiChoice::All => f.write_str("ALL"),
            PiChoice::Set(pi) => write!(f, "{pi}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PiCase {
    /// `H_π = 1`.
    Trivial,
    /// `H_π = G`.
    Full,
    /// `H_π = H_p` for the unique prime `p`.
    EqualsSomeHp,
    /// `1 < H_π < H_p` for every `p ∈ π`.
    Exceptional,
}

impl fmt::Display for PiCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PiCase::Trivial => "TRIVIAL",
            PiCase::Full => "FULL",
            PiCase::EqualsSomeHp => "EQUALS_SOME_HP",
            PiCase::Exceptional => "EXCEPTIONAL",
        })
    }
}

#[derive(Clone, Debug)]
pub struct PiClassification {
    pub case: PiCase,
    /// The prime for [`PiCase::EqualsSomeHp`].
    pub prime: Option<u64>,
    /// The normalized `π`.
    pub primes: PrimeSet,
    pub group_order: u128,
    pub h_pi: HughesResult,
    /// `H_p` for each `p ∈ π`, ascending by `p`.
    pub h_p: Vec<HughesResult>,
    /// Present when the case is exceptional.
    pub frobenius: Option<FrobeniusCertificate>,
}

impl PiClassification {
    pub fn h_pi_order(&self) -> u128 {
        self.h_pi.order()
    }

    pub fn hp_orders(&self) -> Vec<(u64, u128)> {
        self.h_p
            .iter()
            .map(|h| match h.kind {
                HughesKind::Prime(p) => (p, h.order()),
                _ => unreachable!("h_p holds prime Hughes subgroups"),
            })
            .collect()
    }
}

/// Computes `H_π(G)` and every `H_p(G)` for `p ∈ π` and decides which of
/// the four cases holds.
pub fn classify_pi(group: &PermGroup, choice: &PiChoice) -> Result<PiClassification> {
    let primes = choice.resolve(group);
    let h_pi = hughes_pi(group, &primes)?;
    let h_p = primes
        .iter()
        .map(|p| hughes_p(group, p))
        .collect::<Result<Vec<_>>>()?;
    let order = h_pi.order();
    let mut prime = None;
    let case = if order == 1 {
        PiCase::Trivial
    } else if h_pi.subgroup.is_whole() {
        PiCase::Full
    } else if let Some(h) = h_p
        .iter()
        .find(|h| h.subgroup.same_subgroup(&h_pi.subgroup))
    {
        prime = match h.kind {
            HughesKind::Prime(p) => Some(p),
            _ => None,
        };
        PiCase::EqualsSomeHp
    } else if h_p.iter().all(|h| 1 < order && order < h.order()) {
        PiCase::Exceptional
    } else {
        return Err(Error::Inconsistent(format!(
            "H_π of order {order} is neither 1, G, some H_p, nor strictly below every H_p"
        )));
    };
    let frobenius = if case == PiCase::Exceptional {
        frobenius_decomposition(group)?
    } else {
        None
    };
    Ok(PiClassification {
        case,
        prime,
        primes,
        group_order: group.order(),
        h_pi,
        h_p,
        frobenius,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gamma_tower, Family};
    use std::collections::BTreeSet;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    fn s3() -> PermGroup {
        PermGroup::new(vec![p("(0 1)", 3), p("(0 1 2)", 3)]).unwrap()
    }

    fn cyclic(n: usize) -> PermGroup {
        Family::Cyclic(n).build().unwrap()
    }

    fn pi(s: &str) -> PrimeSet {
        s.parse().unwrap()
    }

    /// Element-set closure of everything satisfying `keep`, independent of
    /// the chain.
    fn brute_hughes(g: &PermGroup, keep: impl Fn(u128) -> bool) -> BTreeSet<Permutation> {
        let seeds: Vec<Permutation> = g
            .members()
            .unwrap()
            .iter()
            .filter(|x| keep(x.order()))
            .cloned()
            .collect();
        let mut set: BTreeSet<Permutation> = BTreeSet::new();
        set.insert(g.identity());
        loop {
            let before = set.len();
            let snapshot: Vec<Permutation> = set.iter().cloned().collect();
            for a in &snapshot {
                for s in &seeds {
                    set.insert(a * s);
                }
            }
            if set.len() == before {
                return set;
            }
        }
    }

    #[test]
    fn hughes_p_examples() {
        let g = s3();
        let h2 = hughes_p(&g, 2).unwrap();
        assert_eq!(h2.order(), 3);
        assert_eq!(h2.generator_count, 2);
        assert!(h2.subgroup.is_normal());
        assert!(hughes_p(&g, 3).unwrap().subgroup.is_whole());
        assert_eq!(brute_hughes(&g, |o| o != 1 && o != 3).len(), 6);

        let t = gamma_tower();
        let h13 = hughes_p(&t.gamma0, 13).unwrap();
        assert_eq!(h13.order(), 27);
        assert!(h13.subgroup.group().same_group(&t.kernel));
        assert_eq!(hughes_p(&g, 4).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn hughes_n_examples() {
        let g = s3();
        assert!(hughes_n(&g, 6).unwrap().subgroup.is_trivial());
        assert!(hughes_n(&g, 1).unwrap().subgroup.is_whole());
        let c12 = cyclic(12);
        assert_eq!(brute_hughes(&c12, |o| 6 % o != 0).len(), 12);
        let h = hughes_n(&c12, 6).unwrap();
        assert!(h.subgroup.is_whole());
        assert_eq!(h.generator_count, 6);
        assert_eq!(hughes_n(&g, 0).unwrap_err(), Error::ZeroExponent);
    }

    #[test]
    fn hughes_pi_examples() {
        assert!(hughes_pi(&s3(), &pi("2,3")).unwrap().subgroup.is_trivial());
        assert!(hughes_pi(&cyclic(6), &pi("2,3"))
            .unwrap()
            .subgroup
            .is_whole());
    }

    #[test]
    fn gamma_has_elements_of_order_nine() {
        // x = t_b σ sends a to a^3 + b, so x^3 is translation by the trace
        // of b. Any b with nonzero trace gives an element of order 9, and
        // those generate all of Γ.
        let t = gamma_tower();
        let nine: Vec<&Permutation> = t
            .gamma
            .members()
            .unwrap()
            .iter()
            .filter(|x| x.order() == 9)
            .collect();
        assert_eq!(nine.len(), 468);
        assert!(nine.iter().all(|x| !t.gamma0.contains(x)));
        // Translation by x^2, whose trace is 2 under x^3 + 2x + 1.
        let b = &t.gamma0.generators()[2];
        let x = b * &t.galois;
        assert_eq!(x.order(), 9);
        assert!(t.kernel.contains(&x.pow(3)));
        assert!(hughes_pi(&t.gamma, &pi("3,13"))
            .unwrap()
            .subgroup
            .is_whole());
        assert!(hughes_p(&t.gamma, 3).unwrap().subgroup.is_whole());
    }

    #[test]
    fn normalization_is_recorded_and_harmless() {
        let g = cyclic(6);
        let r = hughes_pi(&g, &pi("2,3,7")).unwrap();
        match &r.kind {
            HughesKind::Primes {
                used, normalized, ..
            } => {
                assert_eq!(used, &pi("2,3"));
                assert!(normalized);
            }
            k => panic!("unexpected kind {k:?}"),
        }
        let raw = hughes_pi_with(&g, &pi("2,3,7"), false).unwrap();
        assert!(raw.subgroup.same_subgroup(&r.subgroup));
    }

    #[test]
    fn intersections() {
        let g = s3();
        let i = hughes_intersection(&g).unwrap();
        assert_eq!(i.order(), 3);
        assert!(i.same_subgroup(&hughes_p(&g, 2).unwrap().subgroup));
        assert!(hughes_intersection(&cyclic(6)).unwrap().is_whole());
        let t = gamma_tower();
        // H_3(Γ0) is generated by the order-13 elements and is all of Γ0.
        assert!(hughes_p(&t.gamma0, 3).unwrap().subgroup.is_whole());
        let i = hughes_intersection(&t.gamma0).unwrap();
        assert!(i.group().same_group(&t.kernel));
        assert_eq!(
            hughes_intersection(&cyclic(8)).unwrap_err(),
            Error::TooFewPrimes(1)
        );
    }

    #[test]
    fn classification_examples() {
        let c = classify_pi(&s3(), &PiChoice::Set(pi("2,3"))).unwrap();
        assert_eq!(c.case, PiCase::Trivial);
        assert_eq!(c.hp_orders(), vec![(2, 3), (3, 6)]);

        assert_eq!(
            classify_pi(&cyclic(6), &PiChoice::All).unwrap().case,
            PiCase::Full
        );

        // Every element of Γ0 has order 1, 3 or 13, so H_{3,13}(Γ0) = 1.
        let t = gamma_tower();
        let orders: BTreeSet<u128> = t
            .gamma0
            .members()
            .unwrap()
            .iter()
            .map(|x| x.order())
            .collect();
        assert_eq!(orders, BTreeSet::from([1, 3, 13]));
        let c = classify_pi(&t.gamma0, &"3,13".parse().unwrap()).unwrap();
        assert_eq!(c.case, PiCase::Trivial);

        // D30: H_2 = C15 is proper; with π = {2,3} the elements of order 5
        // and 15 generate exactly C15.
        let d30 = Family::Dihedral(15).build().unwrap();
        assert_eq!(brute_hughes(&d30, |o| ![1, 2, 3].contains(&o)).len(), 15);
        let c = classify_pi(&d30, &PiChoice::Set(pi("2,3"))).unwrap();
        assert_eq!(
            (c.case, c.prime, c.h_pi_order()),
            (PiCase::EqualsSomeHp, Some(2), 15)
        );
        assert!(c.frobenius.is_none());
    }

    #[test]
    fn pi_choice_parsing() {
        assert_eq!("ALL".parse::<PiChoice>().unwrap(), PiChoice::All);
        assert_eq!("all".parse::<PiChoice>().unwrap(), PiChoice::All);
        assert_eq!(
            "3,13".parse::<PiChoice>().unwrap(),
            PiChoice::Set(pi("3,13"))
        );
        assert!("3,x".parse::<PiChoice>().is_err());
        assert_eq!(PiChoice::All.to_string(), "ALL");
    }

    #[test]
    fn outside_elements_have_small_order() {
        let t = gamma_tower();
        let g = &t.gamma;
        let primes = pi("3,13");
        let h = hughes_p(g, 13).unwrap();
        for x in g.members().unwrap() {
            if !h.subgroup.contains(x) {
                let o = x.order() as u64;
                assert!(o == 1 || o == 13);
                assert!(primes.contains(o));
            }
        }
    }
}
