//! Text, JSON and DOT renderings of multiplets, laws and verification reports.
//!
//! JSON documents are plain serde structs; field order is declaration order
//! and every scalar in (1/2)Z is a canonical fraction string.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::conservation::{law_statement, ConservationLaw};
use crate::multiplets::{Arrow, Multiplet, MultipletKind, SweepReport};
use crate::signatures::{Algebra, Signature};
use crate::weights::{HalfInt, Root, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: String,
    pub mu: Vec<HalfInt>,
    pub c: HalfInt,
    pub d: HalfInt,
    pub hc: WeightVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub src: String,
    pub dst: String,
    pub root: Root,
    pub degree: HalfInt,
    pub name: Option<String>,
    pub kind: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KsPairDoc {
    pub minus: String,
    pub plus: String,
    pub kind: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipletDoc {
    pub algebra: Algebra,
    pub labels: Vec<HalfInt>,
    pub multiplet: String,
    pub eps: Option<i64>,
    pub vertices: Vec<VertexDoc>,
    pub arrows: Vec<ArrowDoc>,
    pub ks_pairs: Vec<KsPairDoc>,
    pub extra_arrows: Vec<ArrowDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceDoc {
    pub multiplet: String,
    pub labels: Vec<HalfInt>,
    pub eps: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawDoc {
    pub source: SourceDoc,
    pub name: Option<String>,
    pub family: String,
    pub src: Signature,
    pub dst: Signature,
    pub root: Root,
    pub degree: HalfInt,
    pub constraint_note: String,
    pub eps_annotation: i64,
    pub statement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawsDoc {
    pub algebra: Algebra,
    pub laws: Vec<LawDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchDoc {
    pub labels: String,
    pub arrow: String,
    pub missing_from: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub algebra: Algebra,
    pub max_label: HalfInt,
    pub tuples_tested: usize,
    pub arrows_matched: usize,
    pub extras_found: usize,
    pub status: String,
    pub mismatches: Vec<MismatchDoc>,
}

fn source_doc(kind: &MultipletKind) -> SourceDoc {
    match kind {
        MultipletKind::Main(labels) => SourceDoc {
            multiplet: "main".into(),
            labels: labels.labels().to_vec(),
            eps: None,
        },
        MultipletKind::Reduced(t) => SourceDoc {
            multiplet: "reduced".into(),
            labels: t.tail.clone(),
            eps: Some(t.eps),
        },
    }
}

fn arrow_doc(m: &Multiplet, a: &Arrow) -> ArrowDoc {
    let id = |s: &Signature| {
        m.vertex_id(s)
            .map(|id| id.to_string())
            .unwrap_or_else(|| s.to_string())
    };
    ArrowDoc {
        src: id(&a.src),
        dst: id(&a.dst),
        root: a.root,
        degree: a.degree,
        name: a.name.map(|n| n.label()),
        kind: "differential".into(),
    }
}

pub fn multiplet_doc(m: &Multiplet, algebra: &Algebra, include_extras: bool) -> MultipletDoc {
    let source = source_doc(&m.kind);
    MultipletDoc {
        algebra: *algebra,
        labels: source.labels,
        multiplet: source.multiplet,
        eps: source.eps,
        vertices: m
            .vertices
            .iter()
            .map(|v| VertexDoc {
                id: v.id.to_string(),
                mu: v.signature.mu().to_vec(),
                c: v.signature.c(),
                d: v.signature.conformal_weight(),
                hc: v.signature.hc(),
            })
            .collect(),
        arrows: m.diff_arrows.iter().map(|a| arrow_doc(m, a)).collect(),
        ks_pairs: m
            .ks_pairs
            .iter()
            .map(|p| KsPairDoc {
                minus: m
                    .vertex_id(&p.minus)
                    .map(|i| i.to_string())
                    .unwrap_or_default(),
                plus: m
                    .vertex_id(&p.plus)
                    .map(|i| i.to_string())
                    .unwrap_or_default(),
                kind: "knapp_stein".into(),
            })
            .collect(),
        extra_arrows: if include_extras {
            m.extra_arrows.iter().map(|a| arrow_doc(m, a)).collect()
        } else {
            Vec::new()
        },
    }
}

pub fn laws_doc(algebra: &Algebra, laws: &[(MultipletKind, ConservationLaw)]) -> LawsDoc {
    LawsDoc {
        algebra: *algebra,
        laws: laws
            .iter()
            .map(|(kind, law)| LawDoc {
                source: source_doc(kind),
                name: law.arrow.name.map(|n| n.label()),
                family: law.family.tag(),
                src: law.arrow.src.clone(),
                dst: law.arrow.dst.clone(),
                root: law.arrow.root,
                degree: law.arrow.degree,
                constraint_note: law.constraint_note.clone(),
                eps_annotation: law.eps_annotation,
                statement: law_statement(law),
            })
            .collect(),
    }
}

pub fn verify_doc(algebra: &Algebra, max_label: HalfInt, report: &SweepReport) -> VerifyDoc {
    VerifyDoc {
        algebra: *algebra,
        max_label,
        tuples_tested: report.tuples_tested,
        arrows_matched: report.arrows_matched,
        extras_found: report.extras_found,
        status: if report.is_clean() { "ok" } else { "mismatch" }.into(),
        mismatches: report
            .mismatches
            .iter()
            .map(|m| MismatchDoc {
                labels: m.labels.clone(),
                arrow: m.arrow.clone(),
                missing_from: m.missing_from.into(),
            })
            .collect(),
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

/// The one-line header; everything after it depends only on `p+q`.
pub fn header(algebra: &Algebra) -> String {
    let split = match (algebra.p, algebra.q) {
        (Some(_), Some(_)) => "; identical for every p,q with the same p+q",
        _ => "",
    };
    format!(
        "algebra: {algebra} (n={}, {}_{}, h={}{split})",
        algebra.n, algebra.series, algebra.rank, algebra.h
    )
}

fn kind_line(kind: &MultipletKind) -> String {
    match kind {
        MultipletKind::Main(labels) => format!("main multiplet {labels}"),
        MultipletKind::Reduced(t) => format!("reduced pair, {t}"),
    }
}

pub fn multiplet_text(m: &Multiplet, algebra: &Algebra, include_extras: bool) -> String {
    let mut out = String::new();
    let doc = multiplet_doc(m, algebra, include_extras);
    let _ = writeln!(out, "{}", header(algebra));
    let _ = writeln!(out, "{}", kind_line(&m.kind));
    let _ = writeln!(out, "vertices ({}):", m.vertices.len());
    for v in &m.vertices {
        let _ = writeln!(
            out,
            "  {:<12} {:<24} d={:<5} hc={}",
            v.id.to_string(),
            v.signature.to_string(),
            v.signature.conformal_weight().to_string(),
            v.signature.hc()
        );
    }
    let arrow_line = |out: &mut String, a: &ArrowDoc, full: &Arrow| {
        let _ = writeln!(
            out,
            "  {:<13} {:<12} -> {:<12} deg {:<4} {:<6} {} -> {}",
            a.name.clone().unwrap_or_else(|| "-".into()),
            a.src,
            a.dst,
            a.degree.to_string(),
            a.root.to_string(),
            full.src,
            full.dst
        );
    };
    let _ = writeln!(out, "arrows ({}):", m.diff_arrows.len());
    for (a, full) in doc.arrows.iter().zip(&m.diff_arrows) {
        arrow_line(&mut out, a, full);
    }
    let _ = writeln!(out, "knapp-stein pairs ({}):", doc.ks_pairs.len());
    for p in &doc.ks_pairs {
        let _ = writeln!(out, "  {} <-> {}", p.minus, p.plus);
    }
    if include_extras {
        let _ = writeln!(out, "extra arrows ({}):", m.extra_arrows.len());
        for (a, full) in doc.extra_arrows.iter().zip(&m.extra_arrows) {
            arrow_line(&mut out, a, full);
        }
    }
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz digraph: solid differential arrows, dashed undirected
/// Knapp–Stein edges, dotted oracle extras.
pub fn emit_dot(m: &Multiplet, algebra: &Algebra, include_extras: bool) -> String {
    let doc = multiplet_doc(m, algebra, include_extras);
    let mut out = String::new();
    let _ = writeln!(out, "// {}", header(algebra));
    let _ = writeln!(out, "digraph multiplet {{");
    let _ = writeln!(out, "  label=\"{}\";", dot_escape(&kind_line(&m.kind)));
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  node [shape=box];");
    for v in &m.vertices {
        let _ = writeln!(
            out,
            "  \"{}\" [label=\"{}\"];",
            v.id,
            dot_escape(&v.signature.to_string())
        );
    }
    let edge = |out: &mut String, a: &ArrowDoc, style: &str| {
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{} (deg {}, {})\", style={style}];",
            a.src,
            a.dst,
            dot_escape(a.name.as_deref().unwrap_or("-")),
            a.degree,
            a.root
        );
    };
    for a in &doc.arrows {
        edge(&mut out, a, "solid");
    }
    for p in &doc.ks_pairs {
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [dir=none, style=dashed, label=\"KS\"];",
            p.minus, p.plus
        );
    }
    for a in &doc.extra_arrows {
        edge(&mut out, a, "dotted");
    }
    out.push_str("}\n");
    out
}

pub fn laws_text(algebra: &Algebra, laws: &[(MultipletKind, ConservationLaw)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", header(algebra));
    let _ = writeln!(out, "conservation laws ({}):", laws.len());
    let mut last: Option<&MultipletKind> = None;
    for (kind, law) in laws {
        if last != Some(kind) {
            let _ = writeln!(out, "{}", kind_line(kind));
            last = Some(kind);
        }
        let _ = writeln!(out, "  {}", law_statement(law));
    }
    out
}

pub fn verify_text(algebra: &Algebra, max_label: HalfInt, report: &SweepReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", header(algebra));
    let _ = writeln!(
        out,
        "sweep: all label tuples with |n_j| <= {max_label}, both congruence classes{}",
        if algebra.is_even() {
            ", signed n_1"
        } else {
            ""
        }
    );
    let _ = writeln!(out, "tuples tested: {}", report.tuples_tested);
    let _ = writeln!(out, "arrows matched: {}", report.arrows_matched);
    let _ = writeln!(out, "extras found: {}", report.extras_found);
    if report.is_clean() {
        if algebra.is_even() {
            let _ = writeln!(out, "all multiplets: closed-form == oracle");
        } else {
            let _ = writeln!(
                out,
                "all multiplets: closed-form ⊂ oracle; extras = h = {} per multiplet via e1",
                algebra.h
            );
        }
    } else {
        let _ = writeln!(out, "MISMATCHES ({}):", report.mismatches.len());
        for m in &report.mismatches {
            let _ = writeln!(
                out,
                "  multiplet {}: {} missing from {}",
                m.labels, m.arrow, m.missing_from
            );
        }
    }
    out
}
