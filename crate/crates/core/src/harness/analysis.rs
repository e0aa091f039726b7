//! Per-group analysis: every Hughes subgroup, the `H_π` classification,
//! structural certificates, and a list of violated invariants.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    center, derived_series, derived_subgroup, is_prime, lower_central_series, PrimeSet,
    SubgroupHandle,
};
use crate::error::Result;
use crate::group::{bfs_closure, PermGroup};
use crate::hughes::{
    classify_pi, hughes_intersection, hughes_n, hughes_p, hughes_pi, hughes_pi_with,
    intersection_over, HughesKind, HughesResult, PiCase, PiChoice,
};
use crate::perm::Permutation;
use crate::structure::{
    is_regular_p_group, main_theorem_check, metabelian_kernel_scan, omega1, p_group_prime,
    FrobeniusCertificate,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeHughes {
    pub p: u64,
    pub order: u128,
    pub index: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusSummary {
    pub kernel_order: u128,
    pub complement_order: u128,
    pub complement_prime: bool,
    pub kernel_prime: Option<u64>,
    pub kernel_abelian: bool,
}

impl From<&FrobeniusCertificate> for FrobeniusSummary {
    fn from(c: &FrobeniusCertificate) -> Self {
        FrobeniusSummary {
            kernel_order: c.kernel_order(),
            complement_order: c.complement_order,
            complement_prime: c.complement_is_prime,
            kernel_prime: c.kernel_prime,
            kernel_abelian: c.kernel_is_abelian,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PGroupSummary {
    pub p: u64,
    pub class: Option<usize>,
    pub regular: bool,
    pub omega1_order: u128,
    pub omega1_exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainTheoremSummary {
    pub exceptional: bool,
    pub frobenius_side: bool,
    pub kernel_hughes_order: Option<u128>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub name: String,
    pub degree: usize,
    pub order: u128,
    pub primes: PrimeSet,
    pub solvable: bool,
    pub derived_length: Option<usize>,
    pub nilpotence_class: Option<usize>,
    pub hughes: Vec<PrimeHughes>,
    pub pi: PrimeSet,
    pub h_pi_order: u128,
    pub case: PiCase,
    pub case_prime: Option<u64>,
    pub intersection_order: Option<u128>,
    pub frobenius: Option<FrobeniusSummary>,
    pub p_group: Option<PGroupSummary>,
    pub main_theorem: Option<MainTheoremSummary>,
    pub violations: Vec<String>,
}

impl AnalysisReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn is_exceptional(&self) -> bool {
        self.case == PiCase::Exceptional
            || self.main_theorem.as_ref().is_some_and(|m| m.exceptional)
    }

    pub fn hughes_order(&self, p: u64) -> Option<u128> {
        self.hughes.iter().find(|h| h.p == p).map(|h| h.order)
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    /// Largest `|π|` used when sweeping subsets of `π(G)`.
    pub max_subset: usize,
    /// Run the pairwise regularity test on `p`-groups.
    pub regularity: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            max_subset: 3,
            regularity: true,
        }
    }
}

struct Checks(Vec<String>);

impl Checks {
    fn require(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.0.push(msg());
        }
    }
}

/// Every element outside `sub` has order in `{1} ∪ allowed`.
fn outside_orders_ok(group: &PermGroup, sub: &SubgroupHandle, allowed: &PrimeSet) -> Result<bool> {
    Ok(group.members()?.iter().all(|x| {
        sub.contains(x) || {
            let o = x.order();
            o == 1 || (o <= u64::MAX as u128 && allowed.contains(o as u64))
        }
    }))
}

/// Recomputes a Hughes subgroup by closing its qualifying elements under
/// multiplication, without the chain.
fn brute_force_matches(
    group: &PermGroup,
    h: &HughesResult,
    qualifies: impl Fn(u128) -> bool,
) -> Result<bool> {
    let seeds: Vec<Permutation> = group
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

pub fn analyze(name: &str, group: &PermGroup, choice: &PiChoice) -> Result<AnalysisReport> {
    analyze_with(name, group, choice, AnalyzeOptions::default())
}

pub fn analyze_with(
    name: &str,
    group: &PermGroup,
    choice: &PiChoice,
    options: AnalyzeOptions,
) -> Result<AnalysisReport> {
    let mut v = Checks(Vec::new());
    let order = group.order();
    let primes = PrimeSet::of_order(order);

    let enumerated = group.members()?.len() as u128;
    v.require(enumerated == order, || {
        format!("oracle: chain order {order} != enumerated {enumerated}")
    });

    let derived = derived_series(group);
    let solvable = derived.is_solvable();
    let lower = lower_central_series(group);
    for (label, sub) in [
        ("center", center(group)?),
        ("derived", derived_subgroup(group)),
    ] {
        v.require(sub.is_normal(), || {
            format!("normality: {label} subgroup not normal")
        });
    }

    let mut hughes = Vec::new();
    let mut hp: Vec<HughesResult> = Vec::new();
    for p in primes.iter() {
        let h = hughes_p(group, p)?;
        let single = PrimeSet::new([p])?;
        v.require(h.subgroup.is_normal(), || {
            format!("hughes: H_{p} not normal")
        });
        v.require(outside_orders_ok(group, &h.subgroup, &single)?, || {
            format!("hughes: element outside H_{p} of order other than 1, {p}")
        });
        v.require(h.order() * h.subgroup.index() == order, || {
            format!("hughes: |H_{p}| * index != |G|")
        });
        let pp = p as u128;
        v.require(
            brute_force_matches(group, &h, |o| o != 1 && o != pp)?,
            || format!("oracle: H_{p} differs from brute-force closure"),
        );
        v.require(
            hughes_pi(group, &single)?
                .subgroup
                .same_subgroup(&h.subgroup),
            || format!("singleton: H_{{{p}}} != H_{p}"),
        );
        v.require(
            hughes_n(group, p)?.subgroup.same_subgroup(&h.subgroup),
            || format!("singleton: H_n with n = {p} != H_{p}"),
        );
        hughes.push(PrimeHughes {
            p,
            order: h.order(),
            index: h.subgroup.index(),
        });
        hp.push(h);
    }
    let find_hp = |p: u64| hp.iter().find(|h| h.kind == HughesKind::Prime(p));

    let classification = classify_pi(group, choice)?;
    let pi = classification.primes.clone();
    let h_pi = &classification.h_pi;
    v.require(h_pi.subgroup.is_normal(), || {
        "hughes: H_pi not normal".into()
    });
    v.require(outside_orders_ok(group, &h_pi.subgroup, &pi)?, || {
        format!("hughes: element outside H_pi of order not in {{1}} u {pi}")
    });
    v.require(
        brute_force_matches(group, h_pi, |o| {
            o != 1 && !(o <= u64::MAX as u128 && pi.contains(o as u64))
        })?,
        || "oracle: H_pi differs from brute-force closure".into(),
    );
    for p in pi.iter() {
        if let Some(h) = find_hp(p) {
            v.require(h_pi.subgroup.is_subgroup_of(&h.subgroup), || {
                format!("monotonicity: H_pi not inside H_{p}")
            });
        }
    }
    if !pi.is_empty() {
        let meet = intersection_over(group, &pi)?;
        v.require(h_pi.subgroup.is_subgroup_of(&meet), || {
            "chain: H_pi not inside the intersection of its H_p".into()
        });
    }
    let outside_prime = (2..)
        .find(|&r| is_prime(r) && !order.is_multiple_of(r as u128))
        .expect("primes are unbounded");
    let widened = pi.union(&PrimeSet::new([outside_prime])?);
    v.require(
        hughes_pi_with(group, &widened, false)?
            .subgroup
            .same_subgroup(&h_pi.subgroup),
        || format!("normalization: adding {outside_prime} changes H_pi"),
    );

    let mut intersection_order = None;
    if primes.len() >= 2 {
        let meet = hughes_intersection(group)?;
        intersection_order = Some(meet.order());
        let proper: Vec<&HughesResult> = hp.iter().filter(|h| !h.subgroup.is_whole()).collect();
        let ok = if meet.is_whole() {
            proper.is_empty()
        } else {
            proper.len() == 1 && proper[0].subgroup.same_subgroup(&meet)
        };
        v.require(ok, || {
            format!(
                "intersection: meet of order {} with {} proper H_p",
                meet.order(),
                proper.len()
            )
        });
    }

    if solvable && primes.len() >= 2 {
        let proper_prime = hp
            .iter()
            .find(|h| !h.subgroup.is_whole())
            .map(|h| match h.kind {
                HughesKind::Prime(p) => p,
                _ => unreachable!(),
            });
        for sub in primes.subsets(options.max_subset) {
            let h = hughes_pi(group, &sub)?;
            let all_full = sub
                .iter()
                .all(|p| find_hp(p).is_some_and(|h| h.subgroup.is_whole()));
            v.require(h.subgroup.is_whole() == all_full, || {
                format!("full-iff: H_{sub} = G disagrees with every H_p = G")
            });
            if sub.len() < primes.len() {
                if let Some(p) = proper_prime {
                    if sub.contains(p) {
                        let hp = find_hp(p).expect("computed above");
                        v.require(h.subgroup.same_subgroup(&hp.subgroup), || {
                            format!("subset: H_{sub} != H_{p} though H_{p} < G")
                        });
                    } else {
                        v.require(h.subgroup.is_whole(), || {
                            format!("subset: H_{sub} != G though {p} not in the set")
                        });
                    }
                }
            }
        }
    }

    let p_group = match (p_group_prime(group), order > 1) {
        (Some(p), true) => {
            let h = find_hp(p).expect("p divides |G|");
            let extreme = h.subgroup.is_trivial() || h.subgroup.is_whole();
            let class = lower.class;
            if let Some(c) = class {
                v.require(extreme || c >= p as usize, || {
                    format!("class: 1 < H_{p} < G with class {c} < {p}")
                });
            }
            let om = omega1(group, p)?;
            let regular = if options.regularity {
                is_regular_p_group(group, p)?.regular
            } else {
                false
            };
            if regular {
                v.require(extreme, || {
                    format!("regular: 1 < H_{p} < G in a regular group")
                });
                v.require(om.is_exact_set, || {
                    "regular: Omega_1 is not the set of x^p = 1".into()
                });
            }
            Some(PGroupSummary {
                p,
                class,
                regular,
                omega1_order: om.subgroup.order(),
                omega1_exact: om.is_exact_set,
            })
        }
        _ => None,
    };

    let mut main_theorem = None;
    let mut frobenius = classification
        .frobenius
        .as_ref()
        .map(FrobeniusSummary::from);
    if solvable {
        let verdict = main_theorem_check(group)?;
        v.require(verdict.equivalence_holds(), || {
            format!(
                "main: exceptional = {} but Frobenius side = {}",
                verdict.exceptional, verdict.frobenius_side
            )
        });
        v.require(verdict.consistent(), || {
            "main: exceptional case without H_pi = H_q(F) and Z(F) < H_pi".into()
        });
        if let Some(cert) = &verdict.frobenius {
            let f = cert.kernel_order();
            v.require(f * cert.complement_order == order, || {
                "frobenius: |F| * |A| != |G|".into()
            });
            if cert.complement_is_prime {
                let a = cert.complement_order;
                v.require((f - 1) % a == 0, || {
                    format!("frobenius: {a} does not divide |F| - 1")
                });
            }
            frobenius = Some(FrobeniusSummary::from(cert));
        }
        let scan = metabelian_kernel_scan(group)?;
        v.require(scan.witness.is_none(), || {
            "metabelian: kernel admits a fixed-point-free automorphism of prime order".into()
        });
        main_theorem = Some(MainTheoremSummary {
            exceptional: verdict.exceptional,
            frobenius_side: verdict.frobenius_side,
            kernel_hughes_order: verdict.kernel_hughes_order,
            holds: verdict.consistent(),
        });
    }

    Ok(AnalysisReport {
        name: name.to_string(),
        degree: group.degree(),
        order,
        primes,
        solvable,
        derived_length: derived.derived_length,
        nilpotence_class: lower.class,
        hughes,
        h_pi_order: h_pi.order(),
        pi,
        case: classification.case,
        case_prime: classification.prime,
        intersection_order,
        frobenius,
        p_group,
        main_theorem,
        violations: v.0,
    })
}

const HEADER: [&str; 9] = [
    "name",
    "order",
    "primes",
    "solvable",
    "H_p",
    "pi",
    "|H_pi|",
    "case",
    "violations",
];

/// Fixed-width text table, one row per report.
pub fn render_table(reports: &[AnalysisReport]) -> String {
    let rows: Vec<[String; 9]> = reports
        .iter()
        .map(|r| {
            let hp = r
                .hughes
                .iter()
                .map(|h| format!("{}:{}", h.p, h.order))
                .collect::<Vec<_>>()
                .join(" ");
            [
                r.name.clone(),
                r.order.to_string(),
                r.primes.to_string(),
                if r.solvable { "yes" } else { "no" }.to_string(),
                hp,
                r.pi.to_string(),
                r.h_pi_order.to_string(),
                r.case.to_string(),
                r.violations.len().to_string(),
            ]
        })
        .collect();
    let mut widths = HEADER.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = line(HEADER.to_vec());
    out.push('\n');
    for row in &rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}
