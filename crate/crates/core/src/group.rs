//! Permutation groups given by generators, with a deterministic
//! Schreier–Sims stabilizer chain for order and membership and a
//! breadth-first closure for explicit element lists.

use std::collections::{HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default element cap for [`PermGroup::members`].
pub const DEFAULT_CAP: usize = 200_000;

/// Environment variable that overrides [`DEFAULT_CAP`].
pub const CAP_ENV: &str = "HUGHESLAB_CAP";

/// The enumeration cap in effect: `HUGHESLAB_CAP` if set and parseable,
/// otherwise [`DEFAULT_CAP`].
pub fn default_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    /// `transversal[x]` maps the base point to `x`, for `x` in the basic orbit.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

/// Base and strong generating set with one transversal per base point.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
    strong_gens: Vec<Permutation>,
}

impl StabChain {
    pub fn trivial(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
            strong_gens: Vec::new(),
        }
    }

    /// Builds the chain for `<generators>`. Deterministic in the generator
    /// order; base points are the first moved points as they are needed.
    pub fn build(degree: usize, generators: &[Permutation]) -> Result<Self> {
        let mut chain = StabChain::trivial(degree);
        for g in generators {
            chain.extend(g)?;
        }
        Ok(chain)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong_gens
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Product of basic orbit lengths, saturating at `u128::MAX`.
    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .fold(1u128, |acc, l| acc.saturating_mul(l.orbit.len() as u128))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, _) = self.sift(g.clone(), 0);
        residue.is_identity()
    }

    /// Sifts `g` from level `start`, returning the residue and the level at
    /// which sifting stopped (`levels.len()` when it went all the way).
    fn sift(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let x = g.apply(level.base_point);
            match &level.transversal[x] {
                Some(u) => g = u.inverse().compose_unchecked(&g),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    fn gens_fixing_prefix(&self, level: usize) -> Vec<&Permutation> {
        let prefix: Vec<usize> = self.levels[..level].iter().map(|l| l.base_point).collect();
        self.strong_gens
            .iter()
            .filter(|g| prefix.iter().all(|&b| g.apply(b) == b))
            .collect()
    }

    fn rebuild_orbit(&mut self, level: usize) {
        let degree = self.degree;
        let base_point = self.levels[level].base_point;
        let gens: Vec<Permutation> = self
            .gens_fixing_prefix(level)
            .into_iter()
            .cloned()
            .collect();
        let mut transversal: Vec<Option<Permutation>> = vec![None; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        let mut orbit = vec![base_point];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for s in &gens {
                let y = s.apply(x);
                if transversal[y].is_none() {
                    let u = s.compose_unchecked(transversal[x].as_ref().unwrap());
                    transversal[y] = Some(u);
                    orbit.push(y);
                }
            }
        }
        let l = &mut self.levels[level];
        l.transversal = transversal;
        l.orbit = orbit;
    }

    /// Adds a strong generator that reached sifting level `level`, pushing a
    /// new base point if it fixes every existing one.
    fn add_strong_generator(&mut self, h: Permutation, level: usize) {
        if level == self.levels.len() {
            let b = h
                .first_moved_point()
                .expect("nontrivial residue moves a point");
            let mut transversal = vec![None; self.degree];
            transversal[b] = Some(Permutation::identity(self.degree));
            self.levels.push(Level {
                base_point: b,
                transversal,
                orbit: vec![b],
            });
        }
        self.strong_gens.push(h);
    }

    /// Adds `g` to the group. Returns whether the group grew.
    pub fn extend(&mut self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: g.degree(),
            });
        }
        let (residue, level) = self.sift(g.clone(), 0);
        if residue.is_identity() {
            return Ok(false);
        }
        self.add_strong_generator(residue, level);
        self.complete_from(level.min(self.levels.len() - 1));
        Ok(true)
    }

    /// Restores the chain invariants for all levels `<= top`, assuming every
    /// level below `top` in the chain (deeper) is already complete.
    fn complete_from(&mut self, top: usize) {
        let mut i = top as isize;
        while i >= 0 {
            let level = i as usize;
            self.rebuild_orbit(level);
            match self.first_failing_schreier_generator(level) {
                Some((h, j)) => {
                    self.add_strong_generator(h, j);
                    i = j.min(self.levels.len() - 1) as isize;
                }
                None => i -= 1,
            }
        }
    }

    fn first_failing_schreier_generator(&self, level: usize) -> Option<(Permutation, usize)> {
        let l = &self.levels[level];
        let gens = self.gens_fixing_prefix(level);
        for &x in &l.orbit {
            let ux = l.transversal[x].as_ref().unwrap();
            for s in &gens {
                let y = s.apply(x);
                let uy = l.transversal[y].as_ref().unwrap();
                let h = uy.inverse().compose_unchecked(&s.compose_unchecked(ux));
                let (residue, j) = self.sift(h, level + 1);
                if !residue.is_identity() {
                    return Some((residue, j));
                }
            }
        }
        None
    }
}

struct Inner {
    degree: usize,
    generators: Vec<Permutation>,
    cap: usize,
    chain: OnceLock<StabChain>,
    members: OnceLock<Vec<Permutation>>,
}

/// A permutation group given by generators. Cheap to clone; the chain and
/// element list are computed once on first use and shared.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<Inner>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.inner.degree)
            .field("generators", &self.inner.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn new(generators: Vec<Permutation>) -> Result<Self> {
        let degree = generators.first().ok_or(Error::NoGenerators)?.degree();
        Self::with_generators(degree, generators, default_cap())
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(
            degree,
            vec![Permutation::identity(degree)],
            default_cap(),
            None,
        )
    }

    fn with_generators(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::NoGenerators);
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        Ok(Self::from_parts(degree, generators, cap, None))
    }

    pub(crate) fn from_parts(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
        chain: Option<StabChain>,
    ) -> Self {
        let cell = OnceLock::new();
        if let Some(c) = chain {
            let _ = cell.set(c);
        }
        PermGroup {
            inner: Arc::new(Inner {
                degree,
                generators,
                cap,
                chain: cell,
                members: OnceLock::new(),
            }),
        }
    }

    /// Same group with a different enumeration cap.
    pub fn with_cap(&self, cap: usize) -> Self {
        Self::from_parts(
            self.degree(),
            self.generators().to_vec(),
            cap,
            self.inner.chain.get().cloned(),
        )
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    pub fn cap(&self) -> usize {
        self.inner.cap
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    pub fn chain(&self) -> &StabChain {
        self.inner.chain.get_or_init(|| {
            StabChain::build(self.degree(), self.generators())
                .expect("generator degrees checked at construction")
        })
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.generators().iter().all(Permutation::is_identity)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Is every element of `self` in `other`?
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree() && self.generators().iter().all(|g| other.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other) && other.is_subgroup_of(self)
    }

    /// Every element, sorted lexicographically by image array. The list comes
    /// from a breadth-first closure over the generators and never consults
    /// the stabilizer chain. Refuses when the group exceeds the cap.
    pub fn members(&self) -> Result<&[Permutation]> {
        if let Some(m) = self.inner.members.get() {
            return Ok(m);
        }
        let list = bfs_closure(self.degree(), self.generators(), self.cap())?;
        Ok(self.inner.members.get_or_init(|| list))
    }

    /// Membership by binary search in [`members`](Self::members).
    pub fn member_index(&self, g: &Permutation) -> Result<Option<usize>> {
        Ok(self.members()?.binary_search(g).ok())
    }
}

/// Breadth-first closure of `gens` from the identity, sorted afterwards.
pub fn bfs_closure(degree: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    let gens: Vec<&Permutation> = gens.iter().filter(|g| !g.is_identity()).collect();
    while let Some(x) = queue.pop_front() {
        for s in &gens {
            let y = s.compose_unchecked(&x);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    fn symmetric(n: usize) -> PermGroup {
        let cycle: Vec<usize> = (0..n).collect();
        PermGroup::new(vec![
            Permutation::from_cycles(n, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(n, &[&cycle]).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn s3_order_six() {
        let g = PermGroup::new(vec![p("(0 1)", 3), p("(0 1 2)", 3)]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.members().unwrap().len(), 6);
    }

    #[test]
    fn identity_generator_gives_trivial_group() {
        let g = PermGroup::new(vec![Permutation::identity(4)]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.members().unwrap(), &[Permutation::identity(4)]);
        assert!(g.is_trivial());
    }

    #[test]
    fn mismatched_generators_rejected() {
        let err = PermGroup::new(vec![p("(0 1)", 3), p("(0 1)", 4)]).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { .. }));
        assert_eq!(PermGroup::new(vec![]).unwrap_err(), Error::NoGenerators);
    }

    #[test]
    fn symmetric_orders_and_bases() {
        let mut fact = 1u128;
        for n in 2..=7 {
            fact *= n as u128;
            let g = symmetric(n);
            assert_eq!(g.order(), fact, "S{n}");
        }
        assert_eq!(symmetric(4).chain().base(), vec![0, 1, 2]);
    }

    #[test]
    fn large_symmetric_group_order() {
        // |S_12| = 479001600, far beyond the enumeration cap.
        let g = symmetric(12);
        assert_eq!(g.order(), 479_001_600);
        assert_eq!(
            g.members().unwrap_err(),
            Error::CapExceeded { cap: g.cap() }
        );
    }

    #[test]
    fn cap_refusal_is_explicit() {
        let g = symmetric(5).with_cap(100);
        assert_eq!(g.members().unwrap_err(), Error::CapExceeded { cap: 100 });
        assert_eq!(g.order(), 120);
    }

    #[test]
    fn members_are_sorted_and_distinct() {
        let g = symmetric(4);
        let m = g.members().unwrap();
        assert!(m.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(m[0], Permutation::identity(4));
    }

    #[test]
    fn chain_membership_agrees_with_enumeration() {
        let a4 = PermGroup::new(vec![p("(0 1 2)", 5), p("(1 2 3)", 5)]).unwrap();
        let m = a4.members().unwrap();
        assert_eq!(a4.order(), 12);
        for g in m {
            assert!(a4.contains(g));
        }
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let mut rejected = 0;
        for _ in 0..100 {
            let mut v: Vec<usize> = (0..5).collect();
            v.shuffle(&mut rng);
            let g = Permutation::from_images(v).unwrap();
            assert_eq!(a4.contains(&g), m.binary_search(&g).is_ok());
            if !a4.contains(&g) {
                rejected += 1;
            }
        }
        assert!(rejected > 0);
        assert!(!a4.contains(&Permutation::identity(4)));
    }

    #[test]
    fn extend_reports_growth() {
        let mut c = StabChain::trivial(4);
        assert!(c.extend(&p("(0 1 2 3)", 4)).unwrap());
        assert!(!c.extend(&p("(0 2)(1 3)", 4)).unwrap());
        assert!(c.extend(&p("(0 2)", 4)).unwrap());
        assert_eq!(c.order(), 8);
    }

    #[test]
    fn lagrange_on_elements() {
        let g = symmetric(5);
        let n = g.order();
        for x in g.members().unwrap() {
            assert_eq!(n % x.order(), 0);
        }
    }
}
