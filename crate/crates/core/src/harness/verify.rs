//! The verification suite: exact values for the small examples, and the
//! structural theorems checked across the builtin catalog.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::catalog::{builtin_catalog, BuiltinEntry};
use super::question::{hunt, CITE_HIGMAN, CITE_NEUMANN, CITE_PARITY, CITE_Q};
use crate::algebra::{derived_series, lower_central_series, PrimeSet};
use crate::constructions::{gamma_tower, Family};
use crate::error::Result;
use crate::group::{bfs_closure, PermGroup};
use crate::hughes::{hughes_intersection, hughes_p, hughes_pi, HughesResult, PiCase};
use crate::structure::{is_regular_p_group, main_theorem_check, p_group_prime};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    /// Failures, or a short summary when everything passed.
    pub detail: Vec<String>,
    pub elapsed_ms: u128,
    pub limit_ms: Option<u128>,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let limit = self
            .limit_ms
            .map_or_else(String::new, |l| format!(" (limit {l} ms)"));
        format!(
            "[{status}] {}. {}: {} ms{limit}; {}",
            self.id,
            self.title,
            self.elapsed_ms,
            self.detail.join("; ")
        )
    }
}

fn timed(
    id: u8,
    title: &'static str,
    limit: Option<Duration>,
    body: impl FnOnce() -> Result<(Vec<String>, String)>,
) -> CriterionOutcome {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (failures, summary) = match outcome {
        Ok(x) => x,
        Err(e) => (vec![format!("error: {e}")], String::new()),
    };
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let mut detail = failures.clone();
    if !in_time {
        detail.push("time limit exceeded".into());
    }
    if detail.is_empty() {
        detail.push(summary);
    }
    CriterionOutcome {
        id,
        title,
        passed: failures.is_empty() && in_time,
        detail,
        elapsed_ms: elapsed.as_millis(),
        limit_ms: limit.map(|l| l.as_millis()),
    }
}

fn expect(failures: &mut Vec<String>, label: &str, got: u128, want: u128) {
    if got != want {
        failures.push(format!("{label} = {got}, expected {want}"));
    }
}

fn catalog_failures(
    catalog: &[BuiltinEntry],
    check: impl Fn(&BuiltinEntry) -> Result<Vec<String>> + Sync,
) -> Result<Vec<String>> {
    let per: Vec<Vec<String>> = catalog.par_iter().map(&check).collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

pub fn s3_chain() -> CriterionOutcome {
    timed(1, "S3 chain", Some(Duration::from_secs(1)), || {
        let s3 = Family::Symmetric(3).build()?;
        let h23 = hughes_pi(&s3, &PrimeSet::new([2, 3])?)?;
        let h2 = hughes_p(&s3, 2)?;
        let mut f = Vec::new();
        expect(&mut f, "|H_{2,3}(S3)|", h23.order(), 1);
        expect(&mut f, "|H_2(S3)|", h2.order(), 3);
        if !(h23.subgroup.is_subgroup_of(&h2.subgroup) && !h2.subgroup.is_whole()) {
            f.push("1 < H_2(S3) < S3 fails".into());
        }
        Ok((f, "1 = H_{2,3} < H_2 = C3 < S3".into()))
    })
}

pub fn gamma_chain() -> CriterionOutcome {
    timed(2, "GF(27) tower", Some(Duration::from_secs(10)), || {
        let t = gamma_tower();
        let mut f = Vec::new();
        expect(&mut f, "|Gamma|", t.gamma.order(), 1053);
        expect(&mut f, "|Gamma0|", t.gamma0.order(), 351);
        expect(&mut f, "|N|", t.kernel.order(), 27);
        let h = hughes_pi(&t.gamma, &PrimeSet::new([3, 13])?)?;
        expect(&mut f, "|H_{3,13}(Gamma)|", h.order(), 1);
        let h13 = hughes_p(&t.gamma0, 13)?;
        if !h13.subgroup.group().same_group(&t.kernel) {
            f.push(format!(
                "H_13(Gamma0) has order {}, expected N",
                h13.order()
            ));
        }
        let h3 = hughes_p(&t.gamma, 3)?;
        if !h3.subgroup.group().same_group(&t.gamma0) {
            f.push(format!(
                "H_3(Gamma) has order {}, expected Gamma0 (351)",
                h3.order()
            ));
        }
        Ok((f, "1 = H_{3,13}(Gamma) < N < Gamma0 < Gamma".into()))
    })
}

fn hughes_all(group: &PermGroup) -> Result<Vec<(u64, HughesResult)>> {
    PrimeSet::of_order(group.order())
        .iter()
        .map(|p| hughes_p(group, p).map(|h| (p, h)))
        .collect()
}

pub fn intersections(catalog: &[BuiltinEntry]) -> CriterionOutcome {
    timed(3, "intersection of all H_p", None, || {
        let f = catalog_failures(catalog, |e| {
            if PrimeSet::of_order(e.group.order()).len() < 2 {
                return Ok(vec![]);
            }
            let meet = hughes_intersection(&e.group)?;
            let proper: Vec<_> = hughes_all(&e.group)?
                .into_iter()
                .filter(|(_, h)| !h.subgroup.is_whole())
                .collect();
            let ok = if meet.is_whole() {
                proper.is_empty()
            } else {
                proper.len() == 1 && proper[0].1.subgroup.same_subgroup(&meet)
            };
            Ok(if ok {
                vec![]
            } else {
                vec![format!(
                    "{}: meet {} with {} proper H_p",
                    e.name,
                    meet.order(),
                    proper.len()
                )]
            })
        })?;
        let checked = catalog
            .iter()
            .filter(|e| PrimeSet::of_order(e.group.order()).len() >= 2)
            .count();
        Ok((
            f,
            format!(
                "{} groups, {checked} with two or more primes",
                catalog.len()
            ),
        ))
    })
}

pub fn full_iff(catalog: &[BuiltinEntry]) -> CriterionOutcome {
    timed(4, "H_pi = G iff every H_p = G", None, || {
        let f = catalog_failures(catalog, |e| {
            let g = &e.group;
            let primes = PrimeSet::of_order(g.order());
            if primes.len() < 2 || !derived_series(g).is_solvable() {
                return Ok(vec![]);
            }
            let hp = hughes_all(g)?;
            let mut out = Vec::new();
            for pi in primes.subsets(3) {
                let whole = hughes_pi(g, &pi)?.subgroup.is_whole();
                let all = hp
                    .iter()
                    .filter(|(p, _)| pi.contains(*p))
                    .all(|(_, h)| h.subgroup.is_whole());
                if whole != all {
                    out.push(format!("{}: pi = {pi}", e.name));
                }
            }
            Ok(out)
        })?;
        Ok((f, "every solvable group, every pi with |pi| <= 3".into()))
    })
}

pub fn p_groups(catalog: &[BuiltinEntry]) -> CriterionOutcome {
    timed(5, "regular and small-class p-groups", None, || {
        let mut f = catalog_failures(catalog, |e| {
            let g = &e.group;
            let Some(p) = p_group_prime(g).filter(|_| g.order() > 1) else {
                return Ok(vec![]);
            };
            let h = hughes_p(g, p)?;
            let extreme = h.subgroup.is_trivial() || h.subgroup.is_whole();
            let mut out = Vec::new();
            if is_regular_p_group(g, p)?.regular && !extreme {
                out.push(format!("{}: regular with 1 < H_{p} < G", e.name));
            }
            let class = lower_central_series(g).class.unwrap_or(usize::MAX);
            if class < p as usize && !extreme {
                out.push(format!(
                    "{}: class {class} < {p} with 1 < H_{p} < G",
                    e.name
                ));
            }
            Ok(out)
        })?;
        let d8 = Family::Dihedral(4).build()?;
        let h2 = hughes_p(&d8, 2)?;
        let c4 = h2.order() == 4
            && h2
                .subgroup
                .group()
                .members()?
                .iter()
                .any(|x| x.order() == 4);
        if !(c4 && !h2.subgroup.is_whole()) {
            f.push(format!("D8: H_2 has order {}, expected C4", h2.order()));
        }
        if lower_central_series(&d8).class != Some(2) {
            f.push("D8: class is not 2".into());
        }
        if is_regular_p_group(&d8, 2)?.regular {
            f.push("D8: reported regular".into());
        }
        Ok((f, "D8: 1 < H_2 = C4 < D8, class 2".into()))
    })
}

pub fn main_theorem(catalog: &[BuiltinEntry]) -> CriterionOutcome {
    timed(6, "exceptional-case characterization", None, || {
        let f = catalog_failures(catalog, |e| {
            if !derived_series(&e.group).is_solvable() {
                return Ok(vec![]);
            }
            let v = main_theorem_check(&e.group)?;
            let mut out = Vec::new();
            if !v.consistent() {
                out.push(format!("{}: equivalence fails", e.name));
            }
            if v.classification.case == PiCase::Exceptional {
                out.push(format!("{}: EXCEPTIONAL", e.name));
            }
            Ok(out)
        })?;
        Ok((f, "holds everywhere; no exceptional group".into()))
    })
}

fn brute_force(
    group: &PermGroup,
    h: &HughesResult,
    qualifies: impl Fn(u128) -> bool,
) -> Result<bool> {
    let seeds: Vec<_> = group
        .members()?
        .iter()
        .filter(|x| qualifies(x.order()))
        .cloned()
        .collect();
    let set = if seeds.is_empty() {
        vec![group.identity()]
    } else {
        bfs_closure(group.degree(), &seeds, group.cap())?
    };
    Ok(set.len() as u128 == h.order() && set.iter().all(|x| h.subgroup.contains(x)))
}

pub fn oracle(catalog: &[BuiltinEntry]) -> CriterionOutcome {
    timed(7, "chain vs enumeration", None, || {
        let f = catalog_failures(catalog, |e| {
            let g = &e.group;
            let mut out = Vec::new();
            let n = bfs_closure(g.degree(), g.generators(), g.cap())?.len() as u128;
            if n != g.order() {
                out.push(format!("{}: chain {} vs enumerated {n}", e.name, g.order()));
            }
            let primes = PrimeSet::of_order(g.order());
            for (p, h) in hughes_all(g)? {
                let pp = p as u128;
                if !brute_force(g, &h, |o| o != 1 && o != pp)? {
                    out.push(format!("{}: H_{p}", e.name));
                }
            }
            let h = hughes_pi(g, &primes)?;
            let in_pi = |o: u128| o <= u64::MAX as u128 && primes.contains(o as u64);
            if !brute_force(g, &h, |o| o != 1 && !in_pi(o))? {
                out.push(format!("{}: H_pi", e.name));
            }
            Ok(out)
        })?;
        Ok((f, format!("{} groups agree", catalog.len())))
    })
}

pub fn question_hunt() -> CriterionOutcome {
    timed(8, "prefilter hunt", Some(Duration::from_secs(5)), || {
        let h = hunt(Some(1_000_000), 13, 13)?;
        let again = hunt(Some(1_000_000), 13, 13)?;
        let mut f = Vec::new();
        let lines: Vec<String> = h.verdicts.iter().map(|v| v.to_line()).collect();
        let lines2: Vec<String> = again.verdicts.iter().map(|v| v.to_line()).collect();
        if lines != lines2 {
            f.push("verdict stream is not deterministic".into());
        }
        for v in &h.verdicts {
            let (p, q) = (v.p, v.q);
            if !v.rejected {
                let floor = (q as u128).pow(q as u32 + 1);
                let has = v
                    .obligations
                    .iter()
                    .any(|o| o.ends_with(&format!("= {floor}")));
                if !has {
                    f.push(format!("({p},{q}) passes without |F| >= q^(q+1)"));
                }
            }
            let cite = match p {
                2 => Some(CITE_PARITY),
                3 => Some(CITE_NEUMANN),
                5 => Some(CITE_HIGMAN),
                _ => None,
            };
            if let Some(c) = cite {
                if !v.cites(c) {
                    f.push(format!("({p},{q}) not rejected citing {c}"));
                }
            }
            if (q == 2 || q == 3) && !v.cites(CITE_Q) {
                f.push(format!("({p},{q}) not rejected citing {CITE_Q}"));
            }
        }
        Ok((f, h.summary.statement.clone()))
    })
}

/// Runs every criterion over the builtin catalog, in order.
pub fn run_suite() -> Vec<CriterionOutcome> {
    let catalog = builtin_catalog();
    vec![
        s3_chain(),
        gamma_chain(),
        intersections(&catalog),
        full_iff(&catalog),
        p_groups(&catalog),
        main_theorem(&catalog),
        oracle(&catalog),
        question_hunt(),
    ]
}
