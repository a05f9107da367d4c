//! Main multiplets and reduced pairs of elementary representations.
//!
//! A main multiplet is labelled by `{n_1, ..., n_{h+1}}`, the signature of a
//! finite-dimensional irrep of so(p+q, C). Its `2(h+1)` vertices are
//! `chi^±_i`, `i = 1..h+1`, with `c = ±n_{h+2-i}` and the remaining labels as
//! the M-signature, the first of which carries a sign `eps` (correlated with
//! `±` for even `p+q`, `+1` for odd).
//!
//! Arrows come from two independent routes:
//! - [`closed_form_arrows`] lists the named operators by position, with
//!   degrees given by label differences;
//! - [`bgg_scan`] tests every non-compact positive root against every vertex.
//!
//! [`build_multiplet`] requires the first to be contained in the second and
//! keeps any surplus oracle arrows separately.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result, ValidationError};
use crate::signatures::{
    check_congruence, check_ordering, hc_to_signature, is_mu_dominant, ks_partner, Algebra,
    Signature,
};
use crate::weights::{pairing, reflect, weyl_orbit, HalfInt, Root, RootSystem, WeightVector};

/// Labels `{n_1, ..., n_{h+1}}` of a main multiplet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultipletLabels {
    labels: Vec<HalfInt>,
    algebra: Algebra,
}

impl MultipletLabels {
    pub fn new(labels: Vec<HalfInt>, algebra: &Algebra) -> Result<Self> {
        if labels.len() != algebra.rank {
            return Err(ValidationError::Arity {
                expected: algebra.rank,
                found: labels.len(),
            }
            .into());
        }
        check_ordering(&labels, algebra.is_even())?;
        check_congruence(&labels)?;
        Ok(MultipletLabels {
            labels,
            algebra: *algebra,
        })
    }

    pub fn labels(&self) -> &[HalfInt] {
        &self.labels
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    /// `n_k`, 1-based.
    pub fn n(&self, k: usize) -> HalfInt {
        self.labels[k - 1]
    }

    pub fn h(&self) -> usize {
        self.algebra.h
    }
}

impl fmt::Display for MultipletLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }

    fn word(self) -> &'static str {
        match self {
            Sign::Minus => "minus",
            Sign::Plus => "plus",
        }
    }
}

/// Position of a vertex in its multiplet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexId {
    /// `chi^±_index` of a main multiplet.
    Main { index: usize, sign: Sign },
    /// `tilde-chi^±` of a reduced pair.
    Reduced { sign: Sign },
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::Main { index, sign } => write!(f, "chi-{index}-{}", sign.word()),
            VertexId::Reduced { sign } => write!(f, "tchi-{}", sign.word()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: VertexId,
    pub signature: Signature,
}

/// Which operator an arrow is, by its position in the operator catalog.
/// The index is the subscript of the operator name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArrowName {
    /// `d_i : chi^-_i -> chi^-_{i+1}`, `i = 1..h`.
    Down(usize),
    /// `d'_i : chi^+_{i+1} -> chi^+_i`, `i = 1..h-1`, and `i = h` for odd `p+q`.
    Up(usize),
    /// `d_h : chi^+_{h+1} -> chi^+_h`, even `p+q`.
    UpTop(usize),
    /// `d'_h : chi^-_h -> chi^+_{h+1}`, even `p+q`.
    CrossA(usize),
    /// `d'_h : chi^-_{h+1} -> chi^+_h`, even `p+q`.
    CrossB(usize),
    /// `d_{h+1} : chi^-_{h+1} -> chi^+_{h+1}`, odd `p+q`.
    ShortRoot(usize),
    /// `d_eps` of a reduced pair.
    Reduced,
    /// Oracle-only `chi^-_i -> chi^+_i` via `e_1`, odd `p+q`, `i <= h`.
    KsDegenerate(usize),
}

impl ArrowName {
    /// Display name such as `d_1`, `d'_2`, `d_eps`.
    pub fn label(&self) -> String {
        match *self {
            ArrowName::Down(i) | ArrowName::UpTop(i) | ArrowName::ShortRoot(i) => format!("d_{i}"),
            ArrowName::Up(i) | ArrowName::CrossA(i) | ArrowName::CrossB(i) => format!("d'_{i}"),
            ArrowName::Reduced => "d_eps".to_string(),
            ArrowName::KsDegenerate(_) => "ks_degenerate".to_string(),
        }
    }
}

impl fmt::Display for ArrowName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// An intertwining differential operator of order `degree` along `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub src: Signature,
    pub dst: Signature,
    pub root: Root,
    pub degree: HalfInt,
    pub name: Option<ArrowName>,
}

impl Arrow {
    /// `(src, dst, degree, root)`, the identity used to compare routes.
    pub fn key(&self) -> (Signature, Signature, HalfInt, Root) {
        (self.src.clone(), self.dst.clone(), self.degree, self.root)
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = self.name {
            write!(f, "{name}: ")?;
        }
        write!(
            f,
            "{} -> {} (deg {}, {})",
            self.src, self.dst, self.degree, self.root
        )
    }
}

/// A Knapp–Stein shadow pair `chi^- <-> chi^+`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KsPair {
    pub minus: Signature,
    pub plus: Signature,
}

/// Labels of a reduced pair: `tilde-chi^±_eps = {±eps 1/2, n_3, ..., n_{h+1}; ±1/2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedTail {
    pub tail: Vec<HalfInt>,
    pub eps: i64,
    pub algebra: Algebra,
}

impl fmt::Display for ReducedTail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.tail.iter().map(|x| x.to_string()).collect();
        let eps = if self.eps > 0 { "+1" } else { "-1" };
        write!(f, "tail ({}), eps={eps}", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MultipletKind {
    Main(MultipletLabels),
    Reduced(ReducedTail),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiplet {
    pub kind: MultipletKind,
    pub vertices: Vec<Vertex>,
    pub diff_arrows: Vec<Arrow>,
    pub ks_pairs: Vec<KsPair>,
    pub extra_arrows: Vec<Arrow>,
}

impl Multiplet {
    pub fn algebra(&self) -> &Algebra {
        match &self.kind {
            MultipletKind::Main(labels) => labels.algebra(),
            MultipletKind::Reduced(tail) => &tail.algebra,
        }
    }

    pub fn vertex_id(&self, sig: &Signature) -> Option<VertexId> {
        self.vertices
            .iter()
            .find(|v| &v.signature == sig)
            .map(|v| v.id)
    }

    pub fn signatures(&self) -> Vec<Signature> {
        self.vertices.iter().map(|v| v.signature.clone()).collect()
    }
}

fn signature(mu: Vec<HalfInt>, c: HalfInt, algebra: &Algebra) -> Signature {
    Signature::new(mu, c, algebra).expect("labels validated upstream")
}

fn main_vertex(labels: &MultipletLabels, index: usize, sign: Sign) -> Signature {
    let h = labels.h();
    let alg = labels.algebra();
    let removed = h + 2 - index;
    let c = labels.n(removed).scale(sign.value());
    let mut mu: Vec<HalfInt> = (1..=h + 1)
        .filter(|&k| k != removed)
        .map(|k| labels.n(k))
        .collect();
    if alg.is_even() && sign == Sign::Minus {
        mu[0] = -mu[0];
    }
    signature(mu, c, alg)
}

/// `chi^-_1, chi^+_1, chi^-_2, chi^+_2, ..., chi^±_{h+1}`.
pub fn main_vertices(labels: &MultipletLabels) -> Vec<Vertex> {
    (1..=labels.h() + 1)
        .flat_map(|index| {
            [Sign::Minus, Sign::Plus].map(|sign| Vertex {
                id: VertexId::Main { index, sign },
                signature: main_vertex(labels, index, sign),
            })
        })
        .collect()
}

/// The named differential operators of a main multiplet.
///
/// Roots and degrees are read off the label positions; nothing here reflects
/// or pairs weights.
pub fn closed_form_arrows(labels: &MultipletLabels) -> Vec<Arrow> {
    let h = labels.h();
    let r = h + 1;
    let even = labels.algebra().is_even();
    let n = |k: usize| labels.n(k);
    let v = |index: usize, sign: Sign| main_vertex(labels, index, sign);
    let gap = |i: usize| n(h + 2 - i) - n(h + 1 - i);
    let arrow = |src, dst, root, degree, name| Arrow {
        src,
        dst,
        root,
        degree,
        name: Some(name),
    };

    let mut out = Vec::with_capacity(2 * h + 2);
    for i in 1..=h {
        // n_{h+1-i} sits at slot i+1 of the source tail; the last slot holds
        // eps*n_1, negated on the minus side for even p+q
        let root = if i < h {
            Root::Diff(1, i + 1)
        } else if even {
            Root::Sum(1, r)
        } else {
            Root::Diff(1, r)
        };
        out.push(arrow(
            v(i, Sign::Minus),
            v(i + 1, Sign::Minus),
            root,
            gap(i),
            ArrowName::Down(i),
        ));
    }
    for i in 1..h {
        out.push(arrow(
            v(i + 1, Sign::Plus),
            v(i, Sign::Plus),
            Root::Sum(1, i + 1),
            gap(i),
            ArrowName::Up(i),
        ));
    }
    if even {
        out.push(arrow(
            v(h + 1, Sign::Plus),
            v(h, Sign::Plus),
            Root::Sum(1, r),
            gap(h),
            ArrowName::UpTop(h),
        ));
        let cross = n(2) + n(1);
        out.push(arrow(
            v(h, Sign::Minus),
            v(h + 1, Sign::Plus),
            Root::Diff(1, r),
            cross,
            ArrowName::CrossA(h),
        ));
        out.push(arrow(
            v(h + 1, Sign::Minus),
            v(h, Sign::Plus),
            Root::Diff(1, r),
            cross,
            ArrowName::CrossB(h),
        ));
    } else {
        out.push(arrow(
            v(h + 1, Sign::Plus),
            v(h, Sign::Plus),
            Root::Sum(1, r),
            gap(h),
            ArrowName::Up(h),
        ));
        out.push(arrow(
            v(h + 1, Sign::Minus),
            v(h + 1, Sign::Plus),
            Root::Short(1),
            n(1).double(),
            ArrowName::ShortRoot(h + 1),
        ));
    }
    out
}

/// Brute-force BGG scan: for each vertex and non-compact positive root with
/// `(hc, beta^vee) = m` a positive integer and `s_beta(hc)` dominant for the
/// compact part, an arrow of degree `m` to that reflected signature.
pub fn bgg_scan(vertices: &[Signature], rs: &RootSystem) -> Result<Vec<Arrow>> {
    let mut out = Vec::new();
    for sig in vertices {
        let algebra = sig.algebra();
        let hc = sig.hc();
        for &beta in &rs.noncompact_positive {
            let m = pairing(&hc, beta)?;
            if !(m.is_integer() && m.is_positive()) {
                continue;
            }
            let target = reflect(&hc, beta)?;
            if !is_mu_dominant(&target, &algebra) {
                continue;
            }
            out.push(Arrow {
                src: sig.clone(),
                dst: hc_to_signature(&target, &algebra)?,
                root: beta,
                degree: m,
                name: None,
            });
        }
    }
    Ok(out)
}

/// The dominant Harish-Chandra vector of the multiplet, `hc(chi^-_1)`:
/// `(n_{h+1}, ..., n_2, -n_1)` for even `p+q`, `(n_{h+1}, ..., n_1)` for odd.
///
/// For even `p+q` the sign of the last entry is the mirror image of the
/// label `n_1`, because the minus-side vertices carry `-n_1` in the first
/// M-slot.
pub fn dominant_vector(labels: &MultipletLabels) -> WeightVector {
    let mut v: Vec<HalfInt> = labels.labels().iter().rev().copied().collect();
    if labels.algebra().is_even() {
        let last = v.len() - 1;
        v[last] = -v[last];
    }
    WeightVector::new(v)
}

/// Vertices recomputed as the compact-dominant part of a Weyl orbit, sorted.
pub fn orbit_vertices(labels: &MultipletLabels) -> Result<Vec<Signature>> {
    let alg = labels.algebra();
    let orbit = weyl_orbit(&dominant_vector(labels), alg.series)?;
    orbit
        .iter()
        .filter(|v| is_mu_dominant(v, alg))
        .map(|v| hc_to_signature(v, alg))
        .collect()
}

/// The reduced pair `tilde-chi^-_eps -> tilde-chi^+_eps` with its first-order
/// operator `d_eps` and Knapp–Stein pair. `eps` only matters for even `p+q`.
pub fn reduced_pair(tail: &[HalfInt], eps: i64, algebra: &Algebra) -> Result<Multiplet> {
    if eps != 1 && eps != -1 {
        return Err(ValidationError::Eps(eps).into());
    }
    let expected = algebra.h - 1;
    if tail.len() != expected {
        return Err(ValidationError::Arity {
            expected,
            found: tail.len(),
        }
        .into());
    }
    let mut chain = vec![HalfInt::HALF];
    chain.extend_from_slice(tail);
    if !chain.windows(2).all(|w| w[0] < w[1]) || tail.iter().any(|x| x.is_integer()) {
        let parts: Vec<String> = tail.iter().map(|x| x.to_string()).collect();
        return Err(ValidationError::ReducedTail(parts.join(",")).into());
    }
    let eps = if algebra.is_even() { eps } else { 1 };
    let half = HalfInt::HALF;
    let build = |sign: Sign| {
        let s = sign.value();
        let first = if algebra.is_even() {
            half.scale(s * eps)
        } else {
            half
        };
        let mut mu = vec![first];
        mu.extend_from_slice(tail);
        signature(mu, half.scale(s), algebra)
    };
    let minus = build(Sign::Minus);
    let plus = build(Sign::Plus);
    let r = algebra.rank;
    let root = match (algebra.is_even(), eps) {
        (false, _) => Root::Short(1),
        (true, 1) => Root::Diff(1, r),
        (true, _) => Root::Sum(1, r),
    };
    let d_eps = Arrow {
        src: minus.clone(),
        dst: plus.clone(),
        root,
        degree: HalfInt::ONE,
        name: Some(ArrowName::Reduced),
    };

    let rs = algebra.root_system();
    let oracle = bgg_scan(&[minus.clone(), plus.clone()], &rs)?;
    let keys: Vec<_> = oracle.iter().map(Arrow::key).collect();
    if keys != vec![d_eps.key()] {
        return Err(Error::Verification(format!(
            "reduced pair {minus} / {plus}: oracle found {} arrows, expected exactly {d_eps}",
            oracle.len()
        )));
    }

    Ok(Multiplet {
        kind: MultipletKind::Reduced(ReducedTail {
            tail: tail.to_vec(),
            eps,
            algebra: *algebra,
        }),
        vertices: vec![
            Vertex {
                id: VertexId::Reduced { sign: Sign::Minus },
                signature: minus.clone(),
            },
            Vertex {
                id: VertexId::Reduced { sign: Sign::Plus },
                signature: plus.clone(),
            },
        ],
        diff_arrows: vec![d_eps],
        ks_pairs: vec![KsPair { minus, plus }],
        extra_arrows: Vec::new(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    /// Cross-check the vertex list against the Weyl orbit of the labels.
    pub check_orbit: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { check_orbit: true }
    }
}

/// Assemble a verified main multiplet.
///
/// Fails with [`Error::Verification`] if a named arrow is not found by the
/// oracle, which can only mean a convention bug.
pub fn build_multiplet(labels: &MultipletLabels, options: BuildOptions) -> Result<Multiplet> {
    let alg = labels.algebra();
    let vertices = main_vertices(labels);
    let sigs: Vec<Signature> = vertices.iter().map(|v| v.signature.clone()).collect();

    if options.check_orbit {
        let from_orbit: BTreeSet<_> = orbit_vertices(labels)?.into_iter().collect();
        let listed: BTreeSet<_> = sigs.iter().cloned().collect();
        if from_orbit != listed {
            return Err(Error::Verification(format!(
                "multiplet {labels}: {} listed vertices vs {} from the Weyl orbit",
                listed.len(),
                from_orbit.len()
            )));
        }
    }

    let named = closed_form_arrows(labels);
    let oracle = bgg_scan(&sigs, &alg.root_system())?;
    let oracle_keys: BTreeSet<_> = oracle.iter().map(Arrow::key).collect();
    if let Some(missing) = named.iter().find(|a| !oracle_keys.contains(&a.key())) {
        return Err(Error::Verification(format!(
            "multiplet {labels}: named arrow {missing} fails the BGG condition"
        )));
    }

    let named_keys: BTreeSet<_> = named.iter().map(Arrow::key).collect();
    let extra_arrows = oracle
        .into_iter()
        .filter(|a| !named_keys.contains(&a.key()))
        .map(|mut a| {
            a.name = ks_degenerate_index(&vertices, &a).map(ArrowName::KsDegenerate);
            a
        })
        .collect();

    let ks_pairs = (1..=labels.h() + 1)
        .map(|i| {
            let minus = main_vertex(labels, i, Sign::Minus);
            let plus = ks_partner(&minus);
            KsPair { minus, plus }
        })
        .collect();

    Ok(Multiplet {
        kind: MultipletKind::Main(labels.clone()),
        vertices,
        diff_arrows: named,
        ks_pairs,
        extra_arrows,
    })
}

/// `Some(i)` if the arrow is `chi^-_i -> chi^+_i` along `e_1` (odd `p+q`).
fn ks_degenerate_index(vertices: &[Vertex], arrow: &Arrow) -> Option<usize> {
    if arrow.root != Root::Short(1) {
        return None;
    }
    let id = |sig: &Signature| vertices.iter().find(|v| &v.signature == sig).map(|v| v.id);
    match (id(&arrow.src)?, id(&arrow.dst)?) {
        (
            VertexId::Main {
                index: i,
                sign: Sign::Minus,
            },
            VertexId::Main {
                index: j,
                sign: Sign::Plus,
            },
        ) if i == j => Some(i),
        _ => None,
    }
}

/// The oracle-only arrows expected for odd `p+q`:
/// `chi^-_i -> chi^+_i` via `e_1` with degree `2 n_{h+2-i}`, `i = 1..h`.
pub fn expected_extras(labels: &MultipletLabels) -> Vec<Arrow> {
    if labels.algebra().is_even() {
        return Vec::new();
    }
    let h = labels.h();
    (1..=h)
        .map(|i| Arrow {
            src: main_vertex(labels, i, Sign::Minus),
            dst: main_vertex(labels, i, Sign::Plus),
            root: Root::Short(1),
            degree: labels.n(h + 2 - i).double(),
            name: Some(ArrowName::KsDegenerate(i)),
        })
        .collect()
}

fn class_values(max: HalfInt, parity: i64) -> Vec<HalfInt> {
    let m = max.twice();
    (-m..=m)
        .filter(|t| t.rem_euclid(2) == parity)
        .map(HalfInt::from_twice)
        .collect()
}

fn check_bound(max: HalfInt) -> Result<()> {
    if max.twice() < 0 {
        return Err(ValidationError::NegativeBound(max).into());
    }
    Ok(())
}

/// Every valid label tuple with entries of absolute value at most `max`, in
/// both congruence classes, with signed `n_1` for even `p+q`. Sorted
/// lexicographically. Fails once more than `cap` tuples would be produced.
pub fn label_tuples(algebra: &Algebra, max: HalfInt, cap: usize) -> Result<Vec<MultipletLabels>> {
    check_bound(max)?;
    let r = algebra.rank;
    let mut raw: Vec<Vec<HalfInt>> = Vec::new();
    for parity in [0, 1] {
        let values = class_values(max, parity);
        let positive: Vec<HalfInt> = values.iter().copied().filter(|x| x.is_positive()).collect();
        // upper labels n_2 < ... < n_r chosen from the positive values
        let mut stack: Vec<(usize, Vec<HalfInt>)> = vec![(0, Vec::new())];
        while let Some((start, upper)) = stack.pop() {
            if upper.len() == r - 1 {
                let n2 = upper[0];
                for &n1 in &values {
                    let ok = if algebra.is_even() {
                        n1.abs() < n2
                    } else {
                        n1.is_positive() && n1 < n2
                    };
                    if ok {
                        let mut labels = vec![n1];
                        labels.extend_from_slice(&upper);
                        raw.push(labels);
                        if raw.len() > cap {
                            return Err(Error::Limit(format!(
                                "more than {cap} label tuples at bound {max}"
                            )));
                        }
                    }
                }
                continue;
            }
            for (k, &value) in positive.iter().enumerate().skip(start) {
                let mut next = upper.clone();
                next.push(value);
                stack.push((k + 1, next));
            }
        }
    }
    raw.sort();
    raw.into_iter()
        .map(|labels| MultipletLabels::new(labels, algebra))
        .collect()
}

/// Every reduced-pair tail `1/2 < n_3 < ... < n_{h+1} <= max` (half-odd
/// entries), with `eps = ±1` for even `p+q` and `eps = 1` for odd.
pub fn reduced_tails(
    algebra: &Algebra,
    max: HalfInt,
    cap: usize,
) -> Result<Vec<(Vec<HalfInt>, i64)>> {
    check_bound(max)?;
    let len = algebra.h - 1;
    let values: Vec<HalfInt> = class_values(max, 1)
        .into_iter()
        .filter(|x| *x > HalfInt::HALF)
        .collect();
    let eps_values: &[i64] = if algebra.is_even() { &[-1, 1] } else { &[1] };
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<HalfInt>)> = vec![(0, Vec::new())];
    while let Some((start, tail)) = stack.pop() {
        if tail.len() == len {
            for &eps in eps_values {
                out.push((tail.clone(), eps));
                if out.len() > cap {
                    return Err(Error::Limit(format!(
                        "more than {cap} reduced tails at bound {max}"
                    )));
                }
            }
            continue;
        }
        for (k, &value) in values.iter().enumerate().skip(start) {
            let mut next = tail.clone();
            next.push(value);
            stack.push((k + 1, next));
        }
    }
    out.sort();
    Ok(out)
}

/// One disagreement between the closed-form list and the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub labels: String,
    pub arrow: String,
    /// The side on which the arrow is missing.
    pub missing_from: &'static str,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub tuples_tested: usize,
    pub arrows_matched: usize,
    pub extras_found: usize,
    pub mismatches: Vec<Mismatch>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compare closed-form arrows with the oracle for one multiplet. For odd
/// `p+q` the oracle surplus must be exactly [`expected_extras`].
pub fn compare_routes(labels: &MultipletLabels) -> Result<SweepReport> {
    let sigs: Vec<Signature> = main_vertices(labels)
        .into_iter()
        .map(|v| v.signature)
        .collect();
    let named = closed_form_arrows(labels);
    let oracle = bgg_scan(&sigs, &labels.algebra().root_system())?;

    let named_keys: BTreeSet<_> = named.iter().map(Arrow::key).collect();
    let oracle_keys: BTreeSet<_> = oracle.iter().map(Arrow::key).collect();
    let extra_keys: BTreeSet<_> = expected_extras(labels).iter().map(Arrow::key).collect();

    let mut report = SweepReport {
        tuples_tested: 1,
        ..Default::default()
    };
    let describe = |k: &(Signature, Signature, HalfInt, Root)| {
        format!("{} -> {} (deg {}, {})", k.0, k.1, k.2, k.3)
    };
    for k in &named_keys {
        if oracle_keys.contains(k) {
            report.arrows_matched += 1;
        } else {
            report.mismatches.push(Mismatch {
                labels: labels.to_string(),
                arrow: describe(k),
                missing_from: "oracle",
            });
        }
    }
    for k in oracle_keys.difference(&named_keys) {
        if extra_keys.contains(k) {
            report.extras_found += 1;
        } else {
            report.mismatches.push(Mismatch {
                labels: labels.to_string(),
                arrow: describe(k),
                missing_from: "closed-form",
            });
        }
    }
    for k in extra_keys.difference(&oracle_keys) {
        report.mismatches.push(Mismatch {
            labels: labels.to_string(),
            arrow: describe(k),
            missing_from: "oracle (expected surplus)",
        });
    }
    Ok(report)
}

/// [`compare_routes`] over every label tuple up to `max`.
pub fn verify_sweep(algebra: &Algebra, max: HalfInt, cap: usize) -> Result<SweepReport> {
    let mut total = SweepReport::default();
    for labels in label_tuples(algebra, max, cap)? {
        let r = compare_routes(&labels)?;
        total.tuples_tested += r.tuples_tested;
        total.arrows_matched += r.arrows_matched;
        total.extras_found += r.extras_found;
        total.mismatches.extend(r.mismatches);
    }
    Ok(total)
}
