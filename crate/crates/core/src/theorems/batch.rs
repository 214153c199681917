use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    corollary_suite, exact1_suite, h3a_order_check, identity_suite, theorem_h4_suite, H4Options,
    Invariants,
};
use crate::abgroup::{FgAbGroup, DEFAULT_ENUM_CAP};
use crate::error::{Error, Result};

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Partitions of `n` into parts of size at most `max`, parts non-increasing.
fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// One representative per isomorphism class of abelian groups of order `n`.
pub fn abelian_groups_of_order(n: u64) -> Vec<FgAbGroup> {
    let mut classes: Vec<Vec<BigInt>> = vec![vec![]];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for prefix in &classes {
            for part in partitions(e, e) {
                let mut orders = prefix.clone();
                orders.extend(part.iter().map(|&k| BigInt::from(p).pow(k)));
                next.push(orders);
            }
        }
        classes = next;
    }
    let mut groups: Vec<FgAbGroup> = classes
        .iter()
        .map(|o| FgAbGroup::from_cyclic_orders(o))
        .collect();
    groups.sort_by(|a, b| a.invariants().cmp(b.invariants()));
    groups
}

/// All classes of order at most `max_order`, by order and then by invariant factors.
pub fn abelian_groups_up_to(max_order: u64) -> Vec<FgAbGroup> {
    (1..=max_order).flat_map(abelian_groups_of_order).collect()
}

#[derive(Clone, Copy, Debug)]
pub struct BatchOptions {
    /// Largest admissible `max_order`.
    pub max_enum: u64,
    /// Presentation cross-check of Γ, enumerating at most this many elements.
    pub oracle_cap: Option<u64>,
}

impl Default for BatchOptions {
    fn default() -> Self {
        Self {
            max_enum: DEFAULT_ENUM_CAP,
            oracle_cap: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupVerdict {
    pub group: String,
    pub invariants: Invariants,
    pub h4: bool,
    pub corollary: bool,
    pub exact1: bool,
    pub h3a: bool,
    pub identities: bool,
    pub norm_chain_identity: bool,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub millis: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BatchSummary {
    pub max_order: u64,
    pub classes: usize,
    pub passed: usize,
    pub all_passed: bool,
    pub groups: Vec<GroupVerdict>,
    pub millis: f64,
}

fn verify_one(a: &FgAbGroup, opts: BatchOptions) -> GroupVerdict {
    let start = Instant::now();
    let run = || -> Result<(bool, bool, bool, bool, bool, bool)> {
        let h4 = theorem_h4_suite(
            a,
            H4Options {
                oracle_cap: opts.oracle_cap,
            },
        )?
        .passed;
        let corollary = corollary_suite(a)?.passed;
        let exact1 = exact1_suite(a)?.passed;
        let h3a = h3a_order_check(a)?;
        let ids = identity_suite(a)?;
        Ok((
            h4,
            corollary,
            exact1,
            h3a,
            ids.passed,
            ids.norm_chain_identity,
        ))
    };
    let (flags, error) = match run() {
        Ok(f) => (f, None),
        Err(e) => (
            (false, false, false, false, false, false),
            Some(e.to_string()),
        ),
    };
    let (h4, corollary, exact1, h3a, identities, norm_chain_identity) = flags;
    GroupVerdict {
        group: a.to_string(),
        invariants: Invariants::of(a),
        h4,
        corollary,
        exact1,
        h3a,
        identities,
        norm_chain_identity,
        passed: error.is_none() && h4 && corollary && exact1 && h3a && identities,
        error,
        millis: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Runs every suite on every class of order at most `max_order`, in parallel;
/// results are ordered as in [`abelian_groups_up_to`].
pub fn batch_verify(max_order: u64, opts: BatchOptions) -> Result<BatchSummary> {
    if max_order == 0 {
        return Err(Error::InvalidInput("max order must be positive".into()));
    }
    if max_order > opts.max_enum {
        return Err(Error::SizeCap {
            order: max_order.to_string(),
            cap: opts.max_enum,
        });
    }
    let start = Instant::now();
    let groups = abelian_groups_up_to(max_order);
    let verdicts: Vec<GroupVerdict> = groups.par_iter().map(|a| verify_one(a, opts)).collect();
    let passed = verdicts.iter().filter(|v| v.passed).count();
    Ok(BatchSummary {
        max_order,
        classes: verdicts.len(),
        passed,
        all_passed: passed == verdicts.len(),
        groups: verdicts,
        millis: start.elapsed().as_secs_f64() * 1e3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        // Number of abelian groups of order n is the product of p(eᵢ) over the factorization.
        let counts: Vec<usize> = (1..=16).map(|n| abelian_groups_of_order(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5]);
        assert_eq!(abelian_groups_of_order(64).len(), 11);
        assert_eq!(abelian_groups_of_order(72).len(), 6);
    }

    #[test]
    fn classes_are_distinct_and_of_the_right_order() {
        for n in 1..=64u64 {
            let gs = abelian_groups_of_order(n);
            for (i, g) in gs.iter().enumerate() {
                assert_eq!(g.order(), Some(BigInt::from(n)));
                assert!(gs[..i].iter().all(|h| h != g));
            }
        }
    }

    #[test]
    fn small_batches() {
        let s = batch_verify(1, BatchOptions::default()).unwrap();
        assert_eq!((s.classes, s.passed), (1, 1));
        let s = batch_verify(4, BatchOptions::default()).unwrap();
        assert_eq!(s.classes, 5);
        assert!(s.all_passed, "{s:?}");
        let names: Vec<&str> = s.groups.iter().map(|v| v.group.as_str()).collect();
        assert_eq!(names, vec!["0", "Z/2", "Z/3", "Z/2 + Z/2", "Z/4"]);
    }

    #[test]
    fn cap_is_enforced() {
        let opts = BatchOptions {
            max_enum: 8,
            oracle_cap: None,
        };
        assert!(matches!(
            batch_verify(9, opts),
            Err(Error::SizeCap { cap: 8, .. })
        ));
    }
}
