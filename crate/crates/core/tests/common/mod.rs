//! Generators shared by the integration tests.

#![allow(dead_code)]

use proptest::prelude::*;
use sopq_core::multiplets::MultipletLabels;
use sopq_core::signatures::{Algebra, Signature};
use sopq_core::weights::{root_system, Root, WeightVector};
use sopq_core::HalfInt;

/// Strictly increasing doubled labels of length `len` in one congruence
/// class, the first entry signed for even `n`.
fn increasing(
    len: usize,
    half: bool,
    even: bool,
    zero_start: bool,
    neg: bool,
    gaps: &[i64],
) -> Vec<HalfInt> {
    let base = if half {
        1
    } else if even && zero_start {
        0
    } else {
        2
    };
    let mut twice = vec![base + 2 * gaps[0]];
    for k in 1..len {
        twice.push(twice[k - 1] + 2 + 2 * gaps[k]);
    }
    if even && neg {
        twice[0] = -twice[0];
    }
    twice.into_iter().map(HalfInt::from_twice).collect()
}

pub fn signature(n: std::ops::RangeInclusive<u32>) -> impl Strategy<Value = Signature> {
    (
        n,
        any::<bool>(),
        prop::collection::vec(0i64..4, 6),
        any::<bool>(),
        any::<bool>(),
        -20i64..20,
    )
        .prop_map(|(n, half, gaps, zero_start, neg, c)| {
            let algebra = Algebra::from_total(n).unwrap();
            let mu = increasing(algebra.h, half, algebra.is_even(), zero_start, neg, &gaps);
            let c = HalfInt::from_twice(2 * c + i64::from(half));
            Signature::new(mu, c, &algebra).unwrap()
        })
}

pub fn labels(n: std::ops::RangeInclusive<u32>) -> impl Strategy<Value = MultipletLabels> {
    (
        n,
        any::<bool>(),
        prop::collection::vec(0i64..3, 6),
        any::<bool>(),
        any::<bool>(),
    )
        .prop_map(|(n, half, gaps, zero_start, neg)| {
            let algebra = Algebra::from_total(n).unwrap();
            let l = increasing(
                algebra.rank,
                half,
                algebra.is_even(),
                zero_start,
                neg,
                &gaps,
            );
            MultipletLabels::new(l, &algebra).unwrap()
        })
}

/// An arbitrary vector paired with a positive root of the same rank.
pub fn vector_and_root() -> impl Strategy<Value = (u32, WeightVector, Root)> {
    (5u32..=14).prop_flat_map(|n| {
        let rs = root_system(n).unwrap();
        let roots = rs.positive_roots.clone();
        (
            Just(n),
            prop::collection::vec(-40i64..40, rs.rank).prop_map(|t| WeightVector::from_twice(&t)),
            prop::sample::select(roots),
        )
    })
}

pub fn half(s: &str) -> HalfInt {
    s.parse().unwrap()
}

pub fn halves(xs: &[&str]) -> Vec<HalfInt> {
    xs.iter().map(|s| half(s)).collect()
}
