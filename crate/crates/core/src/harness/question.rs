//! Prefilter for Frobenius groups `FA` with `F` a nonabelian `q`-group,
//! `1 < H_q(F) < F`, and `|A| = p` prime.
//!
//! Each filter either rejects the pair `(p, q)` outright or narrows the
//! smallest admissible kernel order. A pair that survives every filter is
//! reported with the obligations a construction would still have to meet.

use serde::{Deserialize, Serialize};

use crate::algebra::is_prime;
use crate::error::{Error, Result};

pub const CITE_PARITY: &str = "p ≠ 2";
pub const CITE_Q: &str = "q ≠ 2,3";
pub const CITE_CLASS_ORDER: &str = "c(F) ≥ q ⟹ |F| ≥ q^(q+1)";
pub const CITE_NEUMANN: &str = "Neumann: c(F) ≤ 2 for p = 3";
pub const CITE_HIGMAN: &str = "Higman: c(F) ≤ 6 for p = 5";
pub const CITE_METABELIAN: &str = "F not metabelian";
pub const CITE_DIVISIBILITY: &str = "p | q^n − 1";
pub const CITE_SMOOTH: &str = "π(|F| − 1) ⊄ {2,3,5}";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FilterOutcome {
    Pass,
    Reject,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterVerdict {
    pub filter: String,
    pub outcome: FilterOutcome,
    pub citation: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuestionVerdict {
    pub p: u64,
    pub q: u64,
    /// `None` means unbounded.
    pub kernel_order_bound: Option<u128>,
    pub filters: Vec<FilterVerdict>,
    pub rejected: bool,
    /// Smallest `n` with `p | q^n - 1` and `n ≥ q + 1`.
    pub minimal_exponent: Option<u32>,
    /// `q^n` for that `n`, if it fits in 128 bits.
    pub minimal_kernel_order: Option<u128>,
    pub obligations: Vec<String>,
}

impl QuestionVerdict {
    pub fn rejections(&self) -> impl Iterator<Item = &FilterVerdict> {
        self.filters
            .iter()
            .filter(|f| f.outcome == FilterOutcome::Reject)
    }

    pub fn cites(&self, citation: &str) -> bool {
        self.rejections().any(|f| f.citation == citation)
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("verdicts serialize")
    }
}

/// Multiplicative order of `q` modulo `p`.
pub fn multiplicative_order(q: u64, p: u64) -> Option<u32> {
    if p < 2 || q.is_multiple_of(p) {
        return None;
    }
    let (q, p) = (q as u128 % p as u128, p as u128);
    let mut x = q;
    let mut n = 1;
    while x != 1 {
        x = x * q % p;
        n += 1;
    }
    Some(n)
}

fn within(order: Option<u128>, bound: Option<u128>) -> bool {
    match (order, bound) {
        (_, None) => true,
        (Some(o), Some(b)) => o <= b,
        (None, Some(_)) => false,
    }
}

fn show(order: Option<u128>) -> String {
    order.map_or_else(|| "> 2^128".to_string(), |o| o.to_string())
}

/// Applies every filter to `(p, q)`. All filters are evaluated and
/// reported, even after one rejects.
pub fn question_prefilter(p: u64, q: u64, bound: Option<u128>) -> Result<QuestionVerdict> {
    for x in [p, q] {
        if !is_prime(x) {
            return Err(Error::NotPrime(x));
        }
    }
    if p == q {
        return Err(Error::Inconsistent(format!(
            "p and q must differ, both are {p}"
        )));
    }
    let mut filters = Vec::new();
    let mut push = |filter: &str, pass: bool, citation: &str, detail: String| {
        filters.push(FilterVerdict {
            filter: filter.to_string(),
            outcome: if pass {
                FilterOutcome::Pass
            } else {
                FilterOutcome::Reject
            },
            citation: citation.to_string(),
            detail,
        })
    };

    push(
        "parity",
        p != 2,
        CITE_PARITY,
        if p == 2 {
            "a complement of even order forces an abelian kernel".into()
        } else {
            "complement has odd order".into()
        },
    );

    let q_ok = q != 2 && q != 3;
    push(
        "q-filter",
        q_ok,
        CITE_Q,
        if q_ok {
            format!("q = {q}")
        } else {
            format!(
                "|F : H_q(F)| = {q} would force p | {}, impossible for odd p",
                q - 1
            )
        },
    );

    // With q ∉ {2, 3} and q ≠ p the class is at least q, and q is at least
    // the smallest prime ≥ 5 other than p.
    let smallest_q = (5..)
        .find(|&r| is_prime(r) && r != p)
        .expect("primes are unbounded");
    let class_floor = q.max(smallest_q);

    let naive = (q as u128).checked_pow(q as u32 + 1);
    let class_ok = within(naive, bound);
    push(
        "class-order",
        class_ok,
        CITE_CLASS_ORDER,
        format!("|F| ≥ {q}^{} = {}", q + 1, show(naive)),
    );

    if p == 3 {
        push(
            "neumann",
            class_floor <= 2,
            CITE_NEUMANN,
            format!("c(F) ≥ {class_floor} > 2"),
        );
    }
    if p == 5 {
        push(
            "higman",
            class_floor <= 6,
            CITE_HIGMAN,
            format!("c(F) ≥ {class_floor} > 6"),
        );
    }

    push(
        "metabelian",
        true,
        CITE_METABELIAN,
        "structural obligation: derived length of F at least 3".into(),
    );

    let ord = multiplicative_order(q, p).expect("p and q are distinct primes");
    let n = {
        let floor = q as u32 + 1;
        floor.div_ceil(ord) * ord
    };
    let minimal = (q as u128).checked_pow(n);
    push(
        "divisibility",
        within(minimal, bound),
        CITE_DIVISIBILITY,
        format!(
            "ord_{p}({q}) = {ord}, so n ≡ 0 mod {ord}; least n ≥ {} is {n}, |F| ≥ {}",
            q + 1,
            show(minimal)
        ),
    );

    let smooth_ok = if ![2, 3, 5].contains(&p) {
        true
    } else {
        minimal.is_some_and(|m| {
            let mut r = m - 1;
            for s in [2, 3, 5] {
                while r % s == 0 {
                    r /= s;
                }
            }
            r > 1
        })
    };
    push(
        "smooth",
        smooth_ok,
        CITE_SMOOTH,
        if ![2, 3, 5].contains(&p) {
            format!("automatic: {p} divides |F| − 1")
        } else {
            format!("checked on |F| = {}", show(minimal))
        },
    );

    let rejected = filters.iter().any(|f| f.outcome == FilterOutcome::Reject);
    let obligations = if rejected {
        Vec::new()
    } else {
        vec![
            format!("c(F) ≥ {q}"),
            format!("|F| ≥ {q}^{} = {}", q + 1, show(naive)),
            "F not metabelian".to_string(),
            format!("{p} | {q}^n − 1 ⟹ n ≡ 0 mod {ord}"),
            format!("|F| ≥ {q}^{n} = {}", show(minimal)),
            "π(|F| − 1) ⊄ {2,3,5} auto-satisfied".to_string(),
        ]
    };
    Ok(QuestionVerdict {
        p,
        q,
        kernel_order_bound: bound,
        filters,
        rejected,
        minimal_exponent: Some(n),
        minimal_kernel_order: minimal,
        obligations,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survivor {
    pub p: u64,
    pub q: u64,
    pub minimal_kernel_order: Option<u128>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntSummary {
    pub kernel_order_bound: Option<u128>,
    pub max_p: u64,
    pub max_q: u64,
    pub pairs: usize,
    pub rejected: usize,
    pub survivors: Vec<Survivor>,
    pub statement: String,
}

#[derive(Clone, Debug)]
pub struct Hunt {
    pub verdicts: Vec<QuestionVerdict>,
    pub summary: HuntSummary,
}

/// Every pair of distinct primes `p ≤ max_p`, `q ≤ max_q`, ordered by `p`
/// then `q`.
pub fn hunt(bound: Option<u128>, max_p: u64, max_q: u64) -> Result<Hunt> {
    if bound == Some(0) {
        return Err(Error::Inconsistent(
            "kernel order bound must be positive".into(),
        ));
    }
    let mut verdicts = Vec::new();
    for p in (2..=max_p).filter(|&x| is_prime(x)) {
        for q in (2..=max_q).filter(|&x| is_prime(x) && x != p) {
            verdicts.push(question_prefilter(p, q, bound)?);
        }
    }
    let survivors: Vec<Survivor> = verdicts
        .iter()
        .filter(|v| !v.rejected)
        .map(|v| Survivor {
            p: v.p,
            q: v.q,
            minimal_kernel_order: v.minimal_kernel_order,
        })
        .collect();
    let statement = if survivors.is_empty() {
        "no candidate below bound, every pair rejected with citations".to_string()
    } else {
        let list = survivors
            .iter()
            .map(|s| {
                format!(
                    "(p={}, q={}, |F|≥{})",
                    s.p,
                    s.q,
                    show(s.minimal_kernel_order)
                )
            })
            .collect::<Vec<_>>()
            .join(", ");
        format!("surviving obligations: {list}")
    };
    let summary = HuntSummary {
        kernel_order_bound: bound,
        max_p,
        max_q,
        pairs: verdicts.len(),
        rejected: verdicts.len() - survivors.len(),
        survivors,
        statement,
    };
    Ok(Hunt { verdicts, summary })
}
