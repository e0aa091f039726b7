//! Structural certificates: normal subgroups, Frobenius kernels,
//! fixed-point-free automorphisms, `Ω₁` / `℧₁`, regularity of p-groups and
//! the two-sided check of the π-Hughes classification theorem.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::algebra::{
    center, closure, derived_series, derived_subgroup, generated_subgroup, is_prime,
    prime_power_base, PrimeSet, SubgroupHandle,
};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::hughes::{classify_pi, hughes_p, PiCase, PiChoice, PiClassification};
use crate::perm::Permutation;

/// Conjugacy classes by brute-force orbits, each sorted, ordered by their
/// smallest element.
pub fn conjugacy_classes(group: &PermGroup) -> Result<Vec<Vec<Permutation>>> {
    let members = group.members()?;
    let mut seen = vec![false; members.len()];
    let mut classes = Vec::new();
    for (i, x) in members.iter().enumerate() {
        if seen[i] {
            continue;
        }
        seen[i] = true;
        let mut class = vec![x.clone()];
        let mut queue = VecDeque::from([x.clone()]);
        while let Some(y) = queue.pop_front() {
            for g in group.generators() {
                let z = y.conjugate_by(g);
                let j = members
                    .binary_search(&z)
                    .expect("conjugate lies in the group");
                if !seen[j] {
                    seen[j] = true;
                    class.push(z.clone());
                    queue.push_back(z);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    Ok(classes)
}

/// Every normal subgroup, as joins of the subgroups generated by conjugacy
/// classes. Sorted by order; includes `1` and `G`.
pub fn normal_subgroups(group: &PermGroup) -> Result<Vec<SubgroupHandle>> {
    let classes = conjugacy_classes(group)?;
    let mut found: Vec<SubgroupHandle> = vec![generated_subgroup(group, &[])?];
    for class in classes.iter().filter(|c| !c[0].is_identity()) {
        let class_group = closure(group.degree(), class, group.cap())?;
        let mut fresh = Vec::new();
        for m in &found {
            let mut seeds = m.group().generators().to_vec();
            seeds.extend(class_group.generators().iter().cloned());
            let join = generated_subgroup(group, &seeds)?;
            let known = found
                .iter()
                .chain(&fresh)
                .any(|n| n.order() == join.order() && n.same_subgroup(&join));
            if !known {
                fresh.push(join);
            }
        }
        found.extend(fresh);
    }
    found.sort_by_key(|h| h.order());
    Ok(found)
}

#[derive(Clone, Debug)]
pub struct FrobeniusCertificate {
    pub kernel: SubgroupHandle,
    pub complement_order: u128,
    pub complement_is_prime: bool,
    /// `Some(q)` when the kernel is a nontrivial `q`-group.
    pub kernel_prime: Option<u64>,
    pub kernel_is_abelian: bool,
    /// Every nonidentity kernel element was checked to commute with no
    /// element outside the kernel.
    pub centralizer_condition_checked: bool,
}

impl FrobeniusCertificate {
    pub fn kernel_order(&self) -> u128 {
        self.kernel.order()
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `C_G(x) <= N` for every `1 != x` in `N`.
fn centralizers_inside(group: &PermGroup, kernel: &SubgroupHandle) -> Result<bool> {
    let outside: Vec<&Permutation> = group
        .members()?
        .iter()
        .filter(|g| !kernel.contains(g))
        .collect();
    let inside = kernel.group().members()?;
    Ok(inside
        .par_iter()
        .filter(|x| !x.is_identity())
        .all(|x| outside.iter().all(|g| !g.commutes_with(x))))
}

/// Looks for a normal Hall subgroup `1 < N < G` whose nonidentity elements
/// have centralizers inside `N`; that is the Frobenius kernel. Returns the
/// certificate for the largest such `N`.
pub fn frobenius_decomposition(group: &PermGroup) -> Result<Option<FrobeniusCertificate>> {
    let order = group.order();
    if PrimeSet::of_order(order).len() < 2 {
        return Ok(None);
    }
    let mut candidates: Vec<SubgroupHandle> = normal_subgroups(group)?
        .into_iter()
        .filter(|n| !n.is_trivial() && !n.is_whole() && gcd(n.order(), n.index()) == 1)
        .collect();
    candidates.sort_by_key(|n| std::cmp::Reverse(n.order()));
    for n in candidates {
        if centralizers_inside(group, &n)? {
            let complement_order = order / n.order();
            let kernel_is_abelian = n.group().is_abelian();
            return Ok(Some(FrobeniusCertificate {
                kernel_prime: prime_power_base(n.order()),
                complement_is_prime: complement_order <= u64::MAX as u128
                    && is_prime(complement_order as u64),
                complement_order,
                kernel_is_abelian,
                centralizer_condition_checked: true,
                kernel: n,
            }));
        }
    }
    Ok(None)
}

/// A map on the generators of `domain` that has been checked to extend to an
/// automorphism. The full element table is kept for evaluation.
#[derive(Clone, Debug)]
pub struct AutomorphismSpec {
    pub domain: PermGroup,
    /// Image of each generator of `domain`, in order.
    pub images: Vec<Permutation>,
    table: Vec<usize>,
}

impl AutomorphismSpec {
    /// Validates the generator map by transporting it along the Cayley
    /// graph: `φ(s x) = φ(s) φ(x)` must hold for every generator `s` and
    /// element `x`, and the resulting map must be a bijection.
    pub fn new(domain: &PermGroup, images: Vec<Permutation>) -> Result<Self> {
        let gens = domain.generators();
        if images.len() != gens.len() {
            return Err(Error::NotAutomorphism(format!(
                "{} images for {} generators",
                images.len(),
                gens.len()
            )));
        }
        let members = domain.members()?;
        let idx = |x: &Permutation| members.binary_search(x).ok();
        let image_idx = images
            .iter()
            .map(|t| {
                idx(t).ok_or_else(|| Error::NotAutomorphism("image outside the domain".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let id = idx(&domain.identity()).expect("identity is a member");
        let mut table = vec![usize::MAX; members.len()];
        table[id] = id;
        let mut queue = VecDeque::from([id]);
        while let Some(i) = queue.pop_front() {
            let x = &members[i];
            let fx = &members[table[i]];
            for (s, &t) in gens.iter().zip(&image_idx) {
                let y = idx(&s.compose_unchecked(x)).expect("closed under generators");
                let fy = idx(&members[t].compose_unchecked(fx)).expect("images lie in the domain");
                if table[y] == usize::MAX {
                    table[y] = fy;
                    queue.push_back(y);
                } else if table[y] != fy {
                    return Err(Error::NotAutomorphism(
                        "generator images violate a relation".into(),
                    ));
                }
            }
        }
        let mut hit = vec![false; members.len()];
        for &t in &table {
            if std::mem::replace(&mut hit[t], true) {
                return Err(Error::NotAutomorphism("map is not injective".into()));
            }
        }
        Ok(AutomorphismSpec {
            domain: domain.clone(),
            images,
            table,
        })
    }

    /// `x -> h^-1 x h`, which must map `domain` onto itself.
    pub fn by_conjugation(domain: &PermGroup, h: &Permutation) -> Result<Self> {
        if h.degree() != domain.degree() {
            return Err(Error::DegreeMismatch {
                left: domain.degree(),
                right: h.degree(),
            });
        }
        let images: Vec<Permutation> = domain
            .generators()
            .iter()
            .map(|g| g.conjugate_by(h))
            .collect();
        if images.iter().any(|g| !domain.contains(g)) {
            return Err(Error::NotAutomorphism(
                "conjugating element does not normalize the domain".into(),
            ));
        }
        let members = domain.members()?;
        let table = members
            .iter()
            .map(|x| {
                members
                    .binary_search(&x.conjugate_by(h))
                    .expect("conjugation preserves the domain")
            })
            .collect();
        Ok(AutomorphismSpec {
            domain: domain.clone(),
            images,
            table,
        })
    }

    pub fn apply(&self, x: &Permutation) -> Option<Permutation> {
        let members = self.domain.members().ok()?;
        let i = members.binary_search(x).ok()?;
        Some(members[self.table[i]].clone())
    }

    pub fn fixed_point_count(&self) -> usize {
        self.table
            .iter()
            .enumerate()
            .filter(|(i, &t)| *i == t)
            .count()
    }

    /// Order of the automorphism.
    pub fn order(&self) -> u128 {
        let perm = Permutation::from_images(self.table.clone()).expect("table is a bijection");
        perm.order()
    }
}

/// Does `φ` fix only the identity?
pub fn is_fixed_point_free(phi: &AutomorphismSpec) -> bool {
    phi.fixed_point_count() == 1
}

fn require_p_group(group: &PermGroup, p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let order = group.order();
    if order == 1 || prime_power_base(order) == Some(p) {
        Ok(())
    } else {
        Err(Error::NotPGroup(p))
    }
}

#[derive(Clone, Debug)]
pub struct Omega1 {
    pub subgroup: SubgroupHandle,
    /// Whether the elements with `x^p = 1` already form the subgroup.
    pub is_exact_set: bool,
}

/// `Ω₁(G) = <x : x^p = 1>` for a `p`-group `G`.
pub fn omega1(group: &PermGroup, p: u64) -> Result<Omega1> {
    require_p_group(group, p)?;
    let pp = p as u128;
    let seeds: Vec<Permutation> = group
        .members()?
        .iter()
        .filter(|x| pp.is_multiple_of(x.order()))
        .cloned()
        .collect();
    let sub = closure(group.degree(), &seeds, group.cap())?;
    let subgroup = SubgroupHandle::new(group, sub)?;
    Ok(Omega1 {
        is_exact_set: subgroup.order() == seeds.len() as u128,
        subgroup,
    })
}

/// `℧₁(K) = <k^p : k ∈ K>`.
pub fn agemo1(group: &PermGroup, p: u64) -> Result<SubgroupHandle> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let seeds: Vec<Permutation> = group
        .members()?
        .iter()
        .map(|k| k.pow(p as u128))
        .filter(|k| !k.is_identity())
        .collect();
    let sub = closure(group.degree(), &seeds, group.cap())?;
    SubgroupHandle::new(group, sub)
}

#[derive(Clone, Debug)]
pub struct Regularity {
    pub regular: bool,
    /// First failing pair `(x, y)` in the sorted element order.
    pub witness: Option<(Permutation, Permutation)>,
}

/// `(x^p y^p)^-1 (xy)^p` lies in `℧₁(<x, y>')`?
fn pair_is_regular(x: &Permutation, y: &Permutation, p: u64) -> Result<bool> {
    let pp = p as u128;
    let xy_p = x.compose_unchecked(y).pow(pp);
    let xp_yp = x.pow(pp).compose_unchecked(&y.pow(pp));
    let d = xp_yp.inverse().compose_unchecked(&xy_p);
    if d.is_identity() {
        return Ok(true);
    }
    let pair = closure(x.degree(), &[x.clone(), y.clone()], usize::MAX)?;
    let derived = derived_subgroup(&pair);
    let agemo = agemo1(derived.group(), p)?;
    Ok(agemo.contains(&d))
}

/// Regularity of a `p`-group in the Hall sense: for all `x, y`,
/// `(xy)^p ≡ x^p y^p` modulo `℧₁(<x, y>')`.
pub fn is_regular_p_group(group: &PermGroup, p: u64) -> Result<Regularity> {
    require_p_group(group, p)?;
    let members = group.members()?;
    let failure = (0..members.len())
        .into_par_iter()
        .map(|i| -> Result<Option<(usize, usize)>> {
            for j in 0..members.len() {
                if !pair_is_regular(&members[i], &members[j], p)? {
                    return Ok(Some((i, j)));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    Ok(Regularity {
        regular: failure.is_none(),
        witness: failure.map(|(i, j)| (members[i].clone(), members[j].clone())),
    })
}

#[derive(Clone, Debug)]
pub struct ExceptionalChecks {
    /// `H_π(G) = H_q(F)`.
    pub h_pi_equals_kernel_hughes: bool,
    /// `Z(F) < H_π(G)`, strictly.
    pub center_strictly_inside: bool,
}

/// Both sides of: `1 < H_π(G) < H_p(G)` for all `p ∈ π(G)` iff `G` is a
/// Frobenius group with prime-order complement and nonabelian `q`-group
/// kernel `F` satisfying `1 < H_q(F) < F`.
#[derive(Clone, Debug)]
pub struct MainTheoremVerdict {
    pub classification: PiClassification,
    pub frobenius: Option<FrobeniusCertificate>,
    /// `|H_q(F)|` when the kernel is a `q`-group.
    pub kernel_hughes_order: Option<u128>,
    /// Left side: the exceptional case holds.
    pub exceptional: bool,
    /// Right side: the Frobenius description holds.
    pub frobenius_side: bool,
    pub exceptional_checks: Option<ExceptionalChecks>,
}

impl MainTheoremVerdict {
    pub fn equivalence_holds(&self) -> bool {
        self.exceptional == self.frobenius_side
    }

    /// Equivalence plus, in the exceptional case, the identification of
    /// `H_π(G)` and the position of `Z(F)`.
    pub fn consistent(&self) -> bool {
        self.equivalence_holds()
            && self
                .exceptional_checks
                .as_ref()
                .is_none_or(|c| c.h_pi_equals_kernel_hughes && c.center_strictly_inside)
    }
}

/// Evaluates both sides independently for a solvable group with `π = π(G)`.
pub fn main_theorem_check(group: &PermGroup) -> Result<MainTheoremVerdict> {
    if !derived_series(group).is_solvable() {
        return Err(Error::NotSolvable);
    }
    let classification = classify_pi(group, &PiChoice::All)?;
    let exceptional = classification.case == PiCase::Exceptional;

    let frobenius = frobenius_decomposition(group)?;
    let mut kernel_hughes = None;
    let mut frobenius_side = false;
    if let Some(cert) = &frobenius {
        if let Some(q) = cert.kernel_prime {
            let hq = hughes_p(cert.kernel.group(), q)?;
            let ord = hq.order();
            frobenius_side = cert.complement_is_prime
                && !cert.kernel_is_abelian
                && 1 < ord
                && ord < cert.kernel_order();
            kernel_hughes = Some(hq);
        }
    }

    let exceptional_checks = if exceptional {
        let h_pi = classification.h_pi.subgroup.group();
        let h_pi_equals_kernel_hughes = kernel_hughes
            .as_ref()
            .is_some_and(|hq| hq.subgroup.group().same_group(h_pi));
        let center_strictly_inside = match &frobenius {
            Some(cert) => {
                let z = center(cert.kernel.group())?;
                z.group().is_subgroup_of(h_pi) && z.order() < h_pi.order()
            }
            None => false,
        };
        Some(ExceptionalChecks {
            h_pi_equals_kernel_hughes,
            center_strictly_inside,
        })
    } else {
        None
    };

    Ok(MainTheoremVerdict {
        kernel_hughes_order: kernel_hughes.map(|h| h.order()),
        classification,
        frobenius,
        exceptional,
        frobenius_side,
        exceptional_checks,
    })
}

/// Outcome of searching a Frobenius kernel for the configuration that
/// a metabelian `q`-group kernel with proper nontrivial `H_q` and a
/// fixed-point-free automorphism of prime order would form.
#[derive(Clone, Debug, Default)]
pub struct MetabelianScan {
    /// Whether the kernel is a metabelian `q`-group with `1 < H_q(F) < F`.
    pub kernel_qualifies: bool,
    /// Conjugations by prime-order elements outside the kernel that were examined.
    pub automorphisms_examined: usize,
    /// A fixed-point-free one, if found.
    pub witness: Option<Permutation>,
}

/// Looks at the Frobenius kernel (if any) and, when it is a metabelian
/// `q`-group with `1 < H_q < F`, tries every automorphism of prime order
/// induced by conjugation from `G`. A witness would contradict the
/// known exclusion of metabelian kernels.
pub fn metabelian_kernel_scan(group: &PermGroup) -> Result<MetabelianScan> {
    let Some(cert) = frobenius_decomposition(group)? else {
        return Ok(MetabelianScan::default());
    };
    let Some(q) = cert.kernel_prime else {
        return Ok(MetabelianScan::default());
    };
    let kernel = cert.kernel.group();
    let hq = hughes_p(kernel, q)?;
    let qualifies = !hq.subgroup.is_trivial()
        && !hq.subgroup.is_whole()
        && derived_series(kernel).is_metabelian();
    let mut scan = MetabelianScan {
        kernel_qualifies: qualifies,
        ..Default::default()
    };
    if !qualifies {
        return Ok(scan);
    }
    for g in group.members()? {
        let o = g.order();
        if cert.kernel.contains(g) || o > u64::MAX as u128 || !is_prime(o as u64) {
            continue;
        }
        let phi = AutomorphismSpec::by_conjugation(kernel, g)?;
        scan.automorphisms_examined += 1;
        if phi.order() == o && is_fixed_point_free(&phi) {
            scan.witness = Some(g.clone());
            break;
        }
    }
    Ok(scan)
}

/// Is `group` a `p`-group for some prime, and which?
pub fn p_group_prime(group: &PermGroup) -> Option<u64> {
    prime_power_base(group.order())
}

/// `π(G)` as a set.
pub fn prime_divisors(group: &PermGroup) -> PrimeSet {
    PrimeSet::of_order(group.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::nilpotence_class;
    use crate::constructions::{affine_frobenius, gamma_tower, Family};

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    fn s3() -> PermGroup {
        PermGroup::new(vec![p("(0 1)", 3), p("(0 1 2)", 3)]).unwrap()
    }

    fn d8() -> PermGroup {
        Family::Dihedral(4).build().unwrap()
    }

    /// Normal subgroups by brute force: every subset closed under products
    /// and conjugation, found by closing unions of conjugacy classes.
    fn brute_normal_count(g: &PermGroup) -> usize {
        let classes = conjugacy_classes(g).unwrap();
        let n = classes.len();
        let total = g.order() as usize;
        let mut count = 0;
        for mask in 0u64..(1 << n) {
            let mut set: Vec<&Permutation> = Vec::new();
            for (i, c) in classes.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    set.extend(c);
                }
            }
            if set.is_empty() || !set.iter().any(|x| x.is_identity()) {
                continue;
            }
            if !total.is_multiple_of(set.len()) {
                continue;
            }
            let closed = set
                .iter()
                .all(|a| set.iter().all(|b| set.contains(&&(*a * *b))));
            if closed {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn normal_subgroup_examples() {
        let c5 = Family::Cyclic(5).build().unwrap();
        let orders: Vec<u128> = normal_subgroups(&c5)
            .unwrap()
            .iter()
            .map(|h| h.order())
            .collect();
        assert_eq!(orders, vec![1, 5]);
        let orders: Vec<u128> = normal_subgroups(&s3())
            .unwrap()
            .iter()
            .map(|h| h.order())
            .collect();
        assert_eq!(orders, vec![1, 3, 6]);
        let d = d8();
        assert_eq!(brute_normal_count(&d), 6);
        let ns = normal_subgroups(&d).unwrap();
        assert_eq!(ns.len(), 6);
        assert!(ns.iter().all(|h| h.is_normal()));
        let s4 = Family::Symmetric(4).build().unwrap();
        assert_eq!(
            normal_subgroups(&s4).unwrap().len(),
            brute_normal_count(&s4)
        );
    }

    #[test]
    fn frobenius_examples() {
        let c = frobenius_decomposition(&s3()).unwrap().unwrap();
        assert_eq!((c.kernel_order(), c.complement_order), (3, 2));
        assert!(c.complement_is_prime && c.centralizer_condition_checked);
        assert_eq!(c.kernel_prime, Some(3));

        let t = gamma_tower();
        let c = frobenius_decomposition(&t.gamma0).unwrap().unwrap();
        assert_eq!((c.kernel_order(), c.complement_order), (27, 13));
        assert!(c.complement_is_prime);
        assert!(c.kernel.group().same_group(&t.kernel));
        // p | |F| - 1.
        assert_eq!((c.kernel_order() - 1) % c.complement_order, 0);

        let c6 = Family::Cyclic(6).build().unwrap();
        assert!(frobenius_decomposition(&c6).unwrap().is_none());
        // Γ is not Frobenius: the Galois element centralizes GF(3) inside N.
        assert!(frobenius_decomposition(&t.gamma).unwrap().is_none());
        let a4 = Family::Alternating(4).build().unwrap();
        let c = frobenius_decomposition(&a4).unwrap().unwrap();
        assert_eq!((c.kernel_order(), c.complement_order), (4, 3));
        let agl = affine_frobenius(2, 3, 7).unwrap();
        assert_eq!(
            frobenius_decomposition(&agl)
                .unwrap()
                .unwrap()
                .kernel_order(),
            8
        );
    }

    #[test]
    fn fixed_point_free_examples() {
        let c5 = Family::Cyclic(5).build().unwrap();
        let id = AutomorphismSpec::new(&c5, c5.generators().to_vec()).unwrap();
        assert!(!is_fixed_point_free(&id));
        let inv = AutomorphismSpec::new(&c5, vec![c5.generators()[0].inverse()]).unwrap();
        assert!(is_fixed_point_free(&inv));
        assert_eq!(inv.order(), 2);

        let t = gamma_tower();
        let phi = AutomorphismSpec::by_conjugation(&t.kernel, &t.multiplier).unwrap();
        assert!(is_fixed_point_free(&phi));
        assert_eq!(phi.order(), 13);
        // Orbit check: every nonzero translation has a 13-element orbit.
        let nontrivial = &t.kernel.members().unwrap()[1..];
        for x in nontrivial {
            let mut y = x.clone();
            let mut len = 0;
            loop {
                y = y.conjugate_by(&t.multiplier);
                len += 1;
                if &y == x {
                    break;
                }
            }
            assert_eq!(len, 13);
        }
        let galois = AutomorphismSpec::by_conjugation(&t.kernel, &t.galois).unwrap();
        assert!(!is_fixed_point_free(&galois));
    }

    #[test]
    fn bad_automorphisms_rejected() {
        let c6 = Family::Cyclic(6).build().unwrap();
        let g = &c6.generators()[0];
        // Sending a generator of C6 to an element of order 3 is not injective.
        assert!(AutomorphismSpec::new(&c6, vec![g.pow(2)]).is_err());
        let s = s3();
        // (0 1) -> (0 1 2) violates (0 1)^2 = 1.
        let bad = vec![p("(0 1 2)", 3), p("(0 1 2)", 3)];
        assert!(AutomorphismSpec::new(&s, bad).is_err());
        assert!(AutomorphismSpec::new(&s, vec![p("(0 1)", 3)]).is_err());
        let a3 = Family::Cyclic(3).build().unwrap();
        assert!(AutomorphismSpec::by_conjugation(&a3, &p("(0 1)", 3)).is_ok());
        let two = PermGroup::new(vec![p("(0 1)", 3)]).unwrap();
        assert!(AutomorphismSpec::by_conjugation(&two, &p("(0 1 2)", 3)).is_err());
    }

    #[test]
    fn omega_and_agemo() {
        let e = Family::ElementaryAbelian { p: 3, rank: 2 }.build().unwrap();
        let o = omega1(&e, 3).unwrap();
        assert!(o.subgroup.is_whole() && o.is_exact_set);
        assert!(agemo1(&e, 3).unwrap().is_trivial());

        let c4 = Family::Cyclic(4).build().unwrap();
        let o = omega1(&c4, 2).unwrap();
        assert_eq!(o.subgroup.order(), 2);
        assert!(o.is_exact_set);
        assert_eq!(agemo1(&c4, 2).unwrap().order(), 2);

        let d = d8();
        let o = omega1(&d, 2).unwrap();
        assert!(o.subgroup.is_whole());
        assert!(!o.is_exact_set);
        let a = agemo1(&d, 2).unwrap();
        assert_eq!(a.order(), 2);
        assert!(a.same_subgroup(&center(&d).unwrap()));

        assert_eq!(omega1(&s3(), 2).unwrap_err(), Error::NotPGroup(2));
    }

    #[test]
    fn regularity_examples() {
        let e = Family::ElementaryAbelian { p: 2, rank: 3 }.build().unwrap();
        assert!(is_regular_p_group(&e, 2).unwrap().regular);
        let c9 = Family::Cyclic(9).build().unwrap();
        assert!(is_regular_p_group(&c9, 3).unwrap().regular);

        let d = d8();
        let r = is_regular_p_group(&d, 2).unwrap();
        assert!(!r.regular);
        let (x, y) = r.witness.unwrap();
        assert!(!x.commutes_with(&y));
        assert!(!pair_is_regular(&x, &y, 2).unwrap());
        // Rotation r and reflection s: d = (r^2 s^2)^-1 (rs)^2 = r^-2 = r^2,
        // while <r, s>' = <r^2> has trivial agemo.
        let (rot, refl) = (&d.generators()[0], &d.generators()[1]);
        assert!(!pair_is_regular(rot, refl, 2).unwrap());

        let h125 = Family::Extraspecial {
            p: 5,
            exponent_p: true,
        }
        .build()
        .unwrap();
        assert_eq!(nilpotence_class(&h125), Some(2));
        assert!(is_regular_p_group(&h125, 5).unwrap().regular);
        assert_eq!(
            is_regular_p_group(&s3(), 3).unwrap_err(),
            Error::NotPGroup(3)
        );
    }

    #[test]
    fn main_theorem_examples() {
        let v = main_theorem_check(&s3()).unwrap();
        assert!(!v.exceptional && !v.frobenius_side && v.consistent());
        assert_eq!(v.classification.case, PiCase::Trivial);

        let t = gamma_tower();
        let v = main_theorem_check(&t.gamma).unwrap();
        assert!(!v.exceptional && !v.frobenius_side && v.consistent());

        let a5 = Family::Alternating(5).build().unwrap();
        assert_eq!(main_theorem_check(&a5).unwrap_err(), Error::NotSolvable);

        // Frobenius with abelian kernel: right side fails on "nonabelian".
        let v = main_theorem_check(&t.gamma0).unwrap();
        assert!(v.frobenius.is_some());
        assert_eq!(v.kernel_hughes_order, Some(1));
        assert!(!v.frobenius_side && v.consistent());
    }

    #[test]
    fn metabelian_scan_is_vacuous_on_known_frobenius_groups() {
        for g in [
            s3(),
            gamma_tower().gamma0,
            affine_frobenius(2, 3, 7).unwrap(),
        ] {
            let scan = metabelian_kernel_scan(&g).unwrap();
            assert!(!scan.kernel_qualifies);
            assert!(scan.witness.is_none());
        }
    }
}
