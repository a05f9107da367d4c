//! First-order intertwining operators, i.e. conservation laws `D f = 0`
//! whose kernels are the conserved currents.

use std::fmt;

use crate::error::{Error, Result};
use crate::multiplets::{
    build_multiplet, label_tuples, reduced_pair, reduced_tails, Arrow, ArrowName, BuildOptions,
    Multiplet, MultipletKind,
};
use crate::signatures::Algebra;
use crate::weights::HalfInt;

/// Default cap on the number of multiplets an enumeration may build.
pub const DEFAULT_MAX_TUPLES: usize = 200_000;

/// Row of the first-order catalog an arrow belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `d_i`, consecutive labels `n_{h+2-i} = n_{h+1-i} + 1`; `i = h` is the
    /// minus-side `d_h` row.
    DI(usize),
    /// `d'_i`, `i < h`.
    DPrimeI(usize),
    /// Plus-side `d_h`, even `p+q`.
    DhEven,
    /// `d'_h : chi^-_h -> chi^+_{h+1}`, even `p+q`, `n_1 + n_2 = 1`.
    DPrimeHEvenA,
    /// `d'_h : chi^-_{h+1} -> chi^+_h`, even `p+q`, `n_1 + n_2 = 1`.
    DPrimeHEvenB,
    /// `d'_h`, odd `p+q`.
    DPrimeHOdd,
    /// `d_{h+1}`, odd `p+q`, `n_1 = 1/2`.
    DH1Odd,
    /// `d_eps` between minimal representations.
    DEpsReduced,
    /// Oracle-only arrow outside the named list.
    KsDegenerate,
}

impl Family {
    pub fn tag(&self) -> String {
        match self {
            Family::DI(i) => format!("d_i({i})"),
            Family::DPrimeI(i) => format!("d'_i({i})"),
            Family::DhEven => "d_h_even".into(),
            Family::DPrimeHEvenA => "d'_h_even_a".into(),
            Family::DPrimeHEvenB => "d'_h_even_b".into(),
            Family::DPrimeHOdd => "d'_h_odd".into(),
            Family::DH1Odd => "d_h1_odd".into(),
            Family::DEpsReduced => "d_eps_reduced".into(),
            Family::KsDegenerate => "ks_degenerate".into(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConservationLaw {
    pub arrow: Arrow,
    pub family: Family,
    pub constraint_note: String,
    /// `-(-1)^{p+q}`, carried as metadata on every law.
    pub eps_annotation: i64,
}

/// Match a degree-1 arrow against the catalog rows.
pub fn classify_family(arrow: &Arrow, algebra: &Algebra) -> Result<(Family, String)> {
    let unclassified = || Error::Unclassified(arrow.to_string());
    if arrow.degree != HalfInt::ONE {
        return Err(unclassified());
    }
    let h = algebra.h;
    let even = algebra.is_even();
    let name = arrow.name.ok_or_else(unclassified)?;
    let consecutive = |i: usize| format!("n_{} = n_{} + 1", h + 2 - i, h + 1 - i);
    Ok(match name {
        ArrowName::Down(i) if i < h => (Family::DI(i), consecutive(i)),
        ArrowName::Down(i) if i == h => (Family::DI(h), "n_1 = n_2 - 1, n_2 > 1/2".into()),
        ArrowName::Up(i) if i < h => (Family::DPrimeI(i), consecutive(i)),
        ArrowName::Up(i) if i == h && !even => {
            (Family::DPrimeHOdd, "n_1 = n_2 - 1, n_2 > 1".into())
        }
        ArrowName::UpTop(i) if i == h && even => {
            (Family::DhEven, "n_1 = n_2 - 1, n_2 > 1/2".into())
        }
        ArrowName::CrossA(i) if i == h && even => {
            (Family::DPrimeHEvenA, "n_1 = 1 - n_2, n_2 > 1/2".into())
        }
        ArrowName::CrossB(i) if i == h && even => {
            (Family::DPrimeHEvenB, "n_1 = 1 - n_2, n_2 > 1/2".into())
        }
        ArrowName::ShortRoot(i) if i == h + 1 && !even && arrow.src.c() == -HalfInt::HALF => (
            Family::DH1Odd,
            "n_1 = 1/2; listed as d'_{h+1}: {-n_2, n_3, ..., n_{h+1}; -1/2} -> \
             {n_2, n_3, ..., n_{h+1}; 1/2}, n_2 > 1"
                .into(),
        ),
        ArrowName::Reduced => (
            Family::DEpsReduced,
            "minimal representations {-eps 1/2, n_3, ..., n_{h+1}; -1/2} -> \
             {eps 1/2, n_3, ..., n_{h+1}; 1/2}"
                .into(),
        ),
        ArrowName::KsDegenerate(i) => (
            Family::KsDegenerate,
            format!("warning: oracle-only arrow chi^-_{i} -> chi^+_{i} along e1, outside the named list"),
        ),
        _ => return Err(unclassified()),
    })
}

fn eps_annotation(algebra: &Algebra) -> i64 {
    if algebra.is_even() {
        -1
    } else {
        1
    }
}

/// Every degree-1 arrow of the multiplet as a classified law, named arrows
/// first, then degree-1 oracle extras.
pub fn first_order_laws(m: &Multiplet) -> Result<Vec<ConservationLaw>> {
    let algebra = m.algebra();
    m.diff_arrows
        .iter()
        .chain(m.extra_arrows.iter())
        .filter(|a| a.degree == HalfInt::ONE)
        .map(|a| {
            let (family, constraint_note) = classify_family(a, algebra)?;
            Ok(ConservationLaw {
                arrow: a.clone(),
                family,
                constraint_note,
                eps_annotation: eps_annotation(algebra),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Keep only one of each mirror pair `n_1 <-> -n_1` (even `p+q`).
    pub fold_chirality: bool,
    pub max_tuples: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            fold_chirality: false,
            max_tuples: DEFAULT_MAX_TUPLES,
        }
    }
}

/// All conservation laws of all main multiplets with labels bounded by
/// `max_label`, followed by all reduced pairs at the same bound. Main
/// multiplets come in lexicographic label order.
pub fn enumerate_laws(
    algebra: &Algebra,
    max_label: HalfInt,
    options: EnumerateOptions,
) -> Result<Vec<(MultipletKind, ConservationLaw)>> {
    let algebra = algebra.complexified();
    let tuples = label_tuples(&algebra, max_label, options.max_tuples)?;
    let tails = reduced_tails(&algebra, max_label, options.max_tuples)?;
    if tuples.len() + tails.len() > options.max_tuples {
        return Err(Error::Limit(format!(
            "{} multiplets at bound {max_label} exceed the cap {}",
            tuples.len() + tails.len(),
            options.max_tuples
        )));
    }
    let fold = options.fold_chirality && algebra.is_even();

    let mut out = Vec::new();
    for labels in tuples {
        if fold && labels.n(1).twice() < 0 {
            continue;
        }
        let m = build_multiplet(&labels, BuildOptions { check_orbit: false })?;
        for law in first_order_laws(&m)? {
            out.push((m.kind.clone(), law));
        }
    }
    for (tail, eps) in tails {
        if fold && eps < 0 {
            continue;
        }
        let m = reduced_pair(&tail, eps, &algebra)?;
        for law in first_order_laws(&m)? {
            out.push((m.kind.clone(), law));
        }
    }
    Ok(out)
}

/// One-line statement of a conservation law.
pub fn law_statement(law: &ConservationLaw) -> String {
    let a = &law.arrow;
    let name = a.name.map(|n| n.label()).unwrap_or_else(|| "?".into());
    format!(
        "D₁: {} → {}, β={}, order {}, family {} [{}] ({}); \
         first-order invariant operator D: C_χ → C_χ′, conserved currents = ker D",
        a.src, a.dst, a.root, a.degree, name, law.family, law.constraint_note
    )
}
