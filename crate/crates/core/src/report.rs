//! Whole-table analysis and the table-source syntax shared by the CLI.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::axioms::{self, AxiomProfile, ElementIdentityInfo, InverseInfo};
use crate::catalog;
use crate::error::Result;
use crate::products::{decompose, PhiType};
use crate::quotient::{
    ascending_central_series, factor, is_normal, is_plain, is_simple, nuclei, NormalityFailure,
    NucleusReport,
};
use crate::set::ElementSet;
use crate::substructure::{subsystems, LagrangianClass, SubsystemReport};
use crate::table::{parse_table, CayleyTable};

/// Bumped only on breaking changes; new fields do not bump it.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Where a table comes from: a file path, `catalog:<id>`, or `-` for stdin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableSource {
    Path(PathBuf),
    Catalog(String),
    Stdin,
}

impl TableSource {
    pub fn parse(text: &str) -> TableSource {
        if text == "-" {
            TableSource::Stdin
        } else if let Some(id) = text.strip_prefix("catalog:") {
            TableSource::Catalog(id.to_string())
        } else {
            TableSource::Path(PathBuf::from(text))
        }
    }

    /// The raw text behind the source; catalog entries are rendered as `.tbl`.
    pub fn read_text(&self) -> Result<String> {
        match self {
            TableSource::Path(p) => Ok(std::fs::read_to_string(p)?),
            TableSource::Catalog(id) => Ok(catalog::table(id)?.to_tbl()),
            TableSource::Stdin => {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                Ok(s)
            }
        }
    }

    pub fn load(&self) -> Result<CayleyTable> {
        match self {
            TableSource::Catalog(id) => catalog::table(id),
            _ => Ok(parse_table(&self.read_text()?)?),
        }
    }
}

impl std::fmt::Display for TableSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TableSource::Path(p) => write!(f, "{}", p.display()),
            TableSource::Catalog(id) => write!(f, "catalog:{id}"),
            TableSource::Stdin => f.write_str("-"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalityEntry {
    pub subsystem: ElementSet,
    pub normal: bool,
    pub failure: Option<NormalityFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionSummary {
    pub subsystem: ElementSet,
    pub k: usize,
    pub m: usize,
    pub phi_type: PhiType,
    /// Decided under the canonical cell labeling only.
    pub is_mono_phi: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub name: Option<String>,
    pub order: usize,
    pub profile: AxiomProfile,
    pub identity: ElementIdentityInfo,
    /// One entry per element when a two-sided identity exists.
    pub inverses: Vec<InverseInfo>,
    /// The remaining fields are filled for loops only.
    pub subsystems: Option<SubsystemReport>,
    pub lagrangian_class: Option<LagrangianClass>,
    pub composite: Option<bool>,
    /// Every nontrivial proper subsystem.
    pub normality: Vec<NormalityEntry>,
    pub nuclei: Option<NucleusReport>,
    pub center: Option<ElementSet>,
    /// Factor over the center, when the center is a nontrivial normal subsystem.
    pub center_factor: Option<CayleyTable>,
    pub central_series: Option<Vec<ElementSet>>,
    /// Invertible loops only.
    pub simple: Option<bool>,
    pub plain: Option<bool>,
    pub decompositions: Vec<DecompositionSummary>,
}

impl AnalysisReport {
    /// e.g. `NAFIL, non-Lagrangian` or `abelian group, Lagrangian`.
    pub fn headline(&self) -> String {
        let mut s = String::new();
        if self.profile.a5 {
            s.push_str("abelian ");
        }
        s.push_str(self.profile.kind.name());
        if let Some(c) = self.lagrangian_class {
            s.push_str(", ");
            s.push_str(c.describe());
        }
        s
    }

    pub fn normal_subsystems(&self) -> Vec<ElementSet> {
        self.normality
            .iter()
            .filter(|e| e.normal)
            .map(|e| e.subsystem)
            .collect()
    }
}

pub fn analyze_source(src: &TableSource) -> Result<AnalysisReport> {
    analyze(&src.load()?)
}

pub fn analyze(t: &CayleyTable) -> Result<AnalysisReport> {
    let n = t.order();
    let profile = axioms::axiom_profile(t);
    let identity = axioms::identity_info(t);
    let inverses = match identity.two_sided_identity {
        Some(_) => (1..=n)
            .map(|x| axioms::inverse_info(t, x))
            .collect::<Result<_>>()?,
        None => Vec::new(),
    };
    let mut report = AnalysisReport {
        schema_version: REPORT_SCHEMA_VERSION,
        name: t.name().map(str::to_string),
        order: n,
        profile,
        identity,
        inverses,
        subsystems: None,
        lagrangian_class: None,
        composite: None,
        normality: Vec::new(),
        nuclei: None,
        center: None,
        center_factor: None,
        central_series: None,
        simple: None,
        plain: None,
        decompositions: Vec::new(),
    };
    if !report.profile.is_loop() {
        return Ok(report);
    }
    let subs = subsystems(t)?;
    for s in subs.nontrivial() {
        let r = is_normal(t, s.elements)?;
        report.normality.push(NormalityEntry {
            subsystem: s.elements,
            normal: r.normal,
            failure: r.failure,
        });
        if r.normal {
            let d = decompose(t, s.elements)?;
            report.decompositions.push(DecompositionSummary {
                subsystem: s.elements,
                k: d.multiphi.k(),
                m: d.multiphi.m(),
                phi_type: d.phi_type,
                is_mono_phi: d.is_mono_phi,
            });
        }
    }
    let nuc = nuclei(t)?;
    let center = nuc.center;
    if center.len() > 1 && center.len() < n {
        report.center_factor = factor(t, center).ok().map(|f| f.table);
    }
    report.lagrangian_class = Some(subs.lagrangian_class);
    report.composite = Some(subs.is_composite());
    report.subsystems = Some(subs);
    report.nuclei = Some(nuc);
    report.center = Some(center);
    report.central_series = Some(ascending_central_series(t)?);
    if report.profile.is_invertible_loop() {
        report.simple = Some(is_simple(t)?);
        report.plain = Some(is_plain(t)?);
    }
    Ok(report)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Plain-text rendering of a report.
pub fn render_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    if let Some(name) = &r.name {
        let _ = writeln!(out, "table: {name}");
    }
    let _ = writeln!(out, "order {}: {}", r.order, r.headline());
    let _ = writeln!(out, "axiom type: {}", r.profile.label);
    let p = &r.profile;
    let _ = writeln!(
        out,
        "axioms: A1 {} A2 {} A3 {} A4 {} A5 {} A6 {}",
        yes_no(p.a1),
        yes_no(p.a2),
        yes_no(p.a3),
        yes_no(p.a4),
        yes_no(p.a5),
        yes_no(p.a6)
    );
    if let Some(w) = p.witness_a4 {
        let eq = match w.side {
            axioms::Side::Left => format!("{}*x = {}", w.a, w.b),
            axioms::Side::Right => format!("y*{} = {}", w.a, w.b),
        };
        let _ = writeln!(
            out,
            "  not a quasigroup: {eq} has {} solutions",
            w.solutions
        );
    }
    if let Some((a, b)) = p.witness_a5 {
        let _ = writeln!(out, "  non-commuting pair: {a}*{b} != {b}*{a}");
    }
    if let Some((a, b, c)) = p.witness_a6 {
        let _ = writeln!(
            out,
            "  non-associative triple: ({a}*{b})*{c} != {a}*({b}*{c})"
        );
    }
    match r.identity.two_sided_identity {
        Some(e) => {
            let _ = writeln!(out, "identity: {e}");
        }
        None => {
            let _ = writeln!(
                out,
                "identity: none (left {}, right {})",
                r.identity.left_identities, r.identity.right_identities
            );
        }
    }
    if !r.inverses.is_empty() {
        let inv: Vec<String> = r
            .inverses
            .iter()
            .map(|i| match i.two_sided {
                Some(y) => format!("{}->{}", i.element, y),
                None => format!("{}->?", i.element),
            })
            .collect();
        let _ = writeln!(out, "inverses: {}", inv.join(" "));
    }
    if let Some(subs) = &r.subsystems {
        let nontrivial: Vec<_> = subs.nontrivial().collect();
        let _ = writeln!(out, "nontrivial subsystems: {}", nontrivial.len());
        for s in nontrivial {
            let normal = r
                .normality
                .iter()
                .find(|e| e.subsystem == s.elements)
                .is_some_and(|e| e.normal);
            let _ = writeln!(
                out,
                "  {} order {} {}{}{}",
                s.elements,
                s.order,
                if s.is_divisor {
                    "divisor"
                } else {
                    "non-divisor"
                },
                if normal { ", normal" } else { "" },
                format_args!(", {}", s.label)
            );
        }
    }
    if let Some(nuc) = &r.nuclei {
        let _ = writeln!(
            out,
            "nuclei: left {} middle {} right {} nucleus {}",
            nuc.left, nuc.middle, nuc.right, nuc.nucleus
        );
    }
    if let Some(c) = r.center {
        let _ = writeln!(out, "center: {c}");
    }
    if let Some(f) = &r.center_factor {
        let _ = writeln!(out, "factor over center: order {}", f.order());
    }
    if let Some(series) = &r.central_series {
        let s: Vec<String> = series.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "ascending central series: {}", s.join(" < "));
    }
    if let Some(s) = r.simple {
        let _ = writeln!(out, "simple: {}", yes_no(s));
    }
    if let Some(p) = r.plain {
        let _ = writeln!(out, "plain: {}", yes_no(p));
    }
    for d in &r.decompositions {
        let ty = match d.phi_type {
            PhiType::TypeA => "type A",
            PhiType::TypeB => "type B",
            PhiType::Irregular => "irregular",
        };
        let _ = writeln!(
            out,
            "decomposition over {}: k={} m={} {}{}",
            d.subsystem,
            d.k,
            d.m,
            ty,
            if d.is_mono_phi { ", mono-phi" } else { "" }
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sources() {
        assert_eq!(TableSource::parse("-"), TableSource::Stdin);
        assert_eq!(
            TableSource::parse("catalog:l5"),
            TableSource::Catalog("l5".into())
        );
        assert_eq!(
            TableSource::parse("x.tbl"),
            TableSource::Path("x.tbl".into())
        );
        assert!(TableSource::parse("catalog:nope").load().is_err());
    }

    #[test]
    fn l5_headline() {
        let r = analyze_source(&TableSource::parse("catalog:l5")).unwrap();
        assert!(render_text(&r).contains("NAFIL, non-Lagrangian"));
        assert_eq!(r.simple, Some(true));
        assert_eq!(r.center, Some(ElementSet::singleton(1)));
    }

    #[test]
    fn non_loop_report() {
        let t = CayleyTable::from_fn(3, |a, _| a).unwrap();
        let r = analyze(&t).unwrap();
        assert!(r.subsystems.is_none());
        assert!(r.inverses.is_empty());
        assert!(!render_text(&r).is_empty());
    }
}
