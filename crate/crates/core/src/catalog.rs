//! Built-in tables with machine-checkable structural claims.

use serde::Serialize;

use crate::axioms::{axiom_profile, SystemKind};
use crate::error::{Error, Result};
use crate::quotient::{is_normal, is_plain, is_simple, nuclei};
use crate::set::ElementSet;
use crate::substructure::{subsystems, LagrangianClass};
use crate::table::CayleyTable;

const L5: [[usize; 5]; 5] = [
    [1, 2, 3, 4, 5],
    [2, 1, 5, 3, 4],
    [3, 4, 1, 5, 2],
    [4, 5, 2, 1, 3],
    [5, 3, 4, 2, 1],
];

const NAFIL8: [[usize; 8]; 8] = [
    [1, 2, 3, 4, 5, 6, 7, 8],
    [2, 3, 4, 1, 6, 7, 8, 5],
    [3, 4, 1, 2, 7, 8, 5, 6],
    [4, 1, 2, 3, 8, 5, 6, 7],
    [5, 6, 7, 8, 1, 2, 3, 4],
    [6, 5, 8, 7, 2, 1, 4, 3],
    [7, 8, 5, 6, 3, 4, 1, 2],
    [8, 7, 6, 5, 4, 3, 2, 1],
];

const ABELIAN6: [[usize; 6]; 6] = [
    [1, 2, 3, 4, 5, 6],
    [2, 1, 4, 3, 6, 5],
    [3, 4, 5, 6, 1, 2],
    [4, 3, 6, 5, 2, 1],
    [5, 6, 1, 2, 4, 3],
    [6, 5, 2, 1, 3, 4],
];

const L9_ANTI: [[usize; 9]; 9] = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9],
    [2, 1, 4, 3, 6, 5, 8, 9, 7],
    [3, 4, 1, 2, 7, 8, 9, 6, 5],
    [4, 3, 2, 1, 8, 9, 5, 7, 6],
    [5, 6, 7, 8, 9, 1, 2, 4, 3],
    [6, 5, 8, 9, 1, 7, 3, 2, 4],
    [7, 8, 9, 6, 2, 3, 4, 5, 1],
    [8, 9, 5, 7, 3, 4, 6, 1, 2],
    [9, 7, 6, 5, 4, 2, 1, 3, 8],
];

const L10: [[usize; 10]; 10] = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
    [2, 1, 5, 3, 4, 7, 6, 10, 8, 9],
    [3, 4, 1, 5, 2, 8, 9, 6, 10, 7],
    [4, 5, 2, 1, 3, 9, 10, 7, 6, 8],
    [5, 3, 4, 2, 1, 10, 8, 9, 7, 6],
    [6, 7, 8, 9, 10, 1, 2, 3, 4, 5],
    [7, 6, 10, 8, 9, 2, 1, 5, 3, 4],
    [8, 9, 6, 10, 7, 3, 4, 1, 5, 2],
    [9, 10, 7, 6, 8, 4, 5, 2, 1, 3],
    [10, 8, 9, 7, 6, 5, 3, 4, 2, 1],
];

const L7_COMPOSITE: [[usize; 7]; 7] = [
    [1, 2, 3, 4, 5, 6, 7],
    [2, 3, 1, 5, 6, 7, 4],
    [3, 1, 2, 7, 4, 5, 6],
    [4, 5, 6, 1, 7, 3, 2],
    [5, 6, 7, 2, 1, 4, 3],
    [6, 7, 4, 3, 2, 1, 5],
    [7, 4, 5, 6, 3, 2, 1],
];

const L7_PLAIN: [[usize; 7]; 7] = [
    [1, 2, 3, 4, 5, 6, 7],
    [2, 3, 1, 5, 4, 7, 6],
    [3, 1, 4, 6, 7, 2, 5],
    [4, 5, 6, 7, 2, 1, 3],
    [5, 4, 7, 2, 6, 3, 1],
    [6, 7, 2, 1, 3, 5, 4],
    [7, 6, 5, 3, 1, 4, 2],
];

const PLAIN7N_T: [[usize; 7]; 7] = [
    [1, 2, 3, 4, 5, 6, 7],
    [2, 3, 4, 5, 6, 7, 1],
    [3, 4, 2, 6, 7, 1, 5],
    [4, 5, 6, 7, 1, 2, 3],
    [5, 6, 7, 1, 4, 3, 2],
    [6, 7, 1, 3, 2, 5, 4],
    [7, 1, 5, 2, 3, 4, 6],
];

/// The `plain7n` rows exactly as commonly printed. Row 4 is not a valid
/// Latin row against the columns (column 2 repeats 6), so the catalog stores
/// the transpose of `plain7n-t` instead, which differs only in row 4.
pub const PLAIN7N_AS_PRINTED: [[usize; 7]; 7] = [
    [1, 2, 3, 4, 5, 6, 7],
    [2, 3, 4, 5, 6, 7, 1],
    [3, 4, 2, 6, 7, 1, 5],
    [4, 6, 5, 7, 1, 3, 2],
    [5, 6, 7, 1, 4, 2, 3],
    [6, 7, 1, 2, 3, 5, 4],
    [7, 1, 5, 3, 2, 4, 6],
];

/// A structural fact about a catalog table, checked by [`check_claims`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "claim", rename_all = "kebab-case")]
pub enum Claim {
    Kind {
        kind: SystemKind,
    },
    Abelian {
        abelian: bool,
    },
    /// The complete list of nontrivial proper subsystems.
    NontrivialSubsystems {
        sets: Vec<ElementSet>,
    },
    /// Subsystems that must appear among the nontrivial proper ones.
    HasSubsystems {
        sets: Vec<ElementSet>,
    },
    Lagrangian {
        class: LagrangianClass,
    },
    Center {
        set: ElementSet,
    },
    Normal {
        set: ElementSet,
        normal: bool,
    },
    Simple {
        simple: bool,
    },
    Plain {
        plain: bool,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub table: CayleyTable,
    pub description: &'static str,
    /// Alternative names the table goes by.
    pub aliases: Vec<&'static str>,
    pub claims: Vec<Claim>,
}

pub const IDS: [&str; 13] = [
    "l5",
    "nafil8",
    "abelian6",
    "l9-anti",
    "l10",
    "l7-composite",
    "l7-plain",
    "plain7n",
    "plain7n-t",
    "c2",
    "c3",
    "c4",
    "k4",
];

fn rows<const N: usize>(r: &[[usize; N]; N]) -> CayleyTable {
    CayleyTable::from_rows(r).expect("catalog tables are well formed")
}

fn cyclic(n: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |a, b| (a + b - 2) % n + 1).expect("cyclic table")
}

fn s(v: &[usize]) -> ElementSet {
    ElementSet::from_elements(v.iter().copied())
}

fn sets(v: &[&[usize]]) -> Vec<ElementSet> {
    v.iter().map(|x| s(x)).collect()
}

fn nafil(abelian: bool) -> [Claim; 2] {
    [
        Claim::Kind {
            kind: SystemKind::Nafil,
        },
        Claim::Abelian { abelian },
    ]
}

fn group(abelian: bool) -> [Claim; 2] {
    [
        Claim::Kind {
            kind: SystemKind::Group,
        },
        Claim::Abelian { abelian },
    ]
}

pub fn get(id: &str) -> Result<CatalogEntry> {
    let (table, description, aliases, claims): (_, _, Vec<&str>, Vec<Claim>) = match id {
        "l5" => (
            rows(&L5),
            "smallest NAFIL, order 5, non-Lagrangian",
            vec!["L5"],
            [
                nafil(false).to_vec(),
                vec![
                    Claim::NontrivialSubsystems {
                        sets: sets(&[&[1, 2], &[1, 3], &[1, 4], &[1, 5]]),
                    },
                    Claim::Lagrangian {
                        class: LagrangianClass::AntiLagrangian,
                    },
                    Claim::Center { set: s(&[1]) },
                    Claim::Simple { simple: true },
                    Claim::Plain { plain: false },
                ],
            ]
            .concat(),
        ),
        "nafil8" => (
            rows(&NAFIL8),
            "order-8 NAFIL with a normal cyclic subloop of order 4",
            vec![],
            [
                nafil(false).to_vec(),
                vec![
                    Claim::NontrivialSubsystems {
                        sets: sets(&[
                            &[1, 3],
                            &[1, 5],
                            &[1, 6],
                            &[1, 7],
                            &[1, 8],
                            &[1, 2, 3, 4],
                            &[1, 3, 5, 7],
                            &[1, 3, 6, 8],
                        ]),
                    },
                    Claim::Lagrangian {
                        class: LagrangianClass::Lagrangian,
                    },
                    Claim::Normal {
                        set: s(&[1, 2, 3, 4]),
                        normal: true,
                    },
                    Claim::Normal {
                        set: s(&[1, 3, 5, 7]),
                        normal: true,
                    },
                    Claim::Normal {
                        set: s(&[1, 3, 6, 8]),
                        normal: true,
                    },
                    Claim::Normal {
                        set: s(&[1, 7]),
                        normal: false,
                    },
                ],
            ]
            .concat(),
        ),
        "abelian6" => (
            rows(&ABELIAN6),
            "abelian NAFIL of order 6 with center {1,2}",
            vec![],
            [
                nafil(true).to_vec(),
                vec![
                    Claim::NontrivialSubsystems {
                        sets: sets(&[&[1, 2]]),
                    },
                    Claim::Center { set: s(&[1, 2]) },
                    Claim::Normal {
                        set: s(&[1, 2]),
                        normal: true,
                    },
                    Claim::Simple { simple: false },
                ],
            ]
            .concat(),
        ),
        "l9-anti" => (
            rows(&L9_ANTI),
            "anti-Lagrangian NAFIL of order 9",
            vec![],
            [
                nafil(false).to_vec(),
                vec![
                    Claim::NontrivialSubsystems {
                        sets: sets(&[&[1, 2], &[1, 3], &[1, 4], &[1, 8], &[1, 2, 3, 4]]),
                    },
                    Claim::Lagrangian {
                        class: LagrangianClass::AntiLagrangian,
                    },
                    Claim::Simple { simple: true },
                ],
            ]
            .concat(),
        ),
        "l10" => (
            rows(&L10),
            "order-10 NAFIL, the direct product of C2 and l5",
            vec!["PAP NAFIL"],
            [
                nafil(false).to_vec(),
                vec![
                    Claim::HasSubsystems {
                        sets: sets(&[&[1, 6], &[1, 2, 6, 7], &[1, 2, 3, 4, 5]]),
                    },
                    Claim::Lagrangian {
                        class: LagrangianClass::NonLagrangian,
                    },
                    Claim::Normal {
                        set: s(&[1, 2, 3, 4, 5]),
                        normal: true,
                    },
                ],
            ]
            .concat(),
        ),
        "l7-composite" => (
            rows(&L7_COMPOSITE),
            "simple composite NAFIL of order 7",
            vec![],
            [
                nafil(false).to_vec(),
                vec![
                    Claim::NontrivialSubsystems {
                        sets: sets(&[&[1, 4], &[1, 5], &[1, 6], &[1, 7], &[1, 2, 3]]),
                    },
                    Claim::Simple { simple: true },
                    Claim::Plain { plain: false },
                ],
            ]
            .concat(),
        ),
        "l7-plain" => (
            rows(&L7_PLAIN),
            "simple plain NAFIL of order 7",
            vec![],
            [
                nafil(true).to_vec(),
                vec![
                    Claim::NontrivialSubsystems { sets: vec![] },
                    Claim::Simple { simple: true },
                    Claim::Plain { plain: true },
                ],
            ]
            .concat(),
        ),
        "plain7n" => (
            rows(&PLAIN7N_T).transpose(),
            "plain NAFIL of order 7",
            vec!["PLAIN 7N"],
            [nafil(false).to_vec(), vec![Claim::Plain { plain: true }]].concat(),
        ),
        "plain7n-t" => (
            rows(&PLAIN7N_T),
            "transpose of plain7n",
            vec!["PLAIN 7N-T"],
            [nafil(false).to_vec(), vec![Claim::Plain { plain: true }]].concat(),
        ),
        "c2" => (
            cyclic(2),
            "cyclic group of order 2",
            vec![],
            group(true).to_vec(),
        ),
        "c3" => (
            cyclic(3),
            "cyclic group of order 3",
            vec![],
            group(true).to_vec(),
        ),
        "c4" => (
            cyclic(4),
            "cyclic group of order 4",
            vec![],
            group(true).to_vec(),
        ),
        "k4" => (
            CayleyTable::from_fn(4, |a, b| ((a - 1) ^ (b - 1)) + 1).expect("Klein table"),
            "Klein four-group",
            vec![],
            group(true).to_vec(),
        ),
        _ => {
            return Err(Error::UnknownId {
                id: id.to_string(),
                valid: IDS.join(", "),
            })
        }
    };
    Ok(CatalogEntry {
        id: IDS.iter().find(|&&x| x == id).expect("listed"),
        table: table.with_name(id),
        description,
        aliases,
        claims,
    })
}

pub fn table(id: &str) -> Result<CayleyTable> {
    Ok(get(id)?.table)
}

pub fn all() -> Vec<CatalogEntry> {
    IDS.iter()
        .map(|id| get(id).expect("listed ids resolve"))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimCheck {
    pub claim: Claim,
    pub holds: bool,
    pub observed: String,
}

/// Re-derives every claim of an entry from its table.
pub fn check_claims(entry: &CatalogEntry) -> Result<Vec<ClaimCheck>> {
    let t = &entry.table;
    let mut out = Vec::new();
    for claim in &entry.claims {
        let (holds, observed) = match claim {
            Claim::Kind { kind } => {
                let k = axiom_profile(t).kind;
                (k == *kind, k.name().to_string())
            }
            Claim::Abelian { abelian } => {
                let a = axiom_profile(t).a5;
                (a == *abelian, a.to_string())
            }
            Claim::NontrivialSubsystems { sets } => {
                let got = subsystems(t)?.nontrivial_sets();
                (got == *sets, format!("{got:?}"))
            }
            Claim::HasSubsystems { sets } => {
                let got = subsystems(t)?.nontrivial_sets();
                (sets.iter().all(|x| got.contains(x)), format!("{got:?}"))
            }
            Claim::Lagrangian { class } => {
                let c = subsystems(t)?.lagrangian_class;
                (c == *class, format!("{c:?}"))
            }
            Claim::Center { set } => {
                let c = nuclei(t)?.center;
                (c == *set, c.to_string())
            }
            Claim::Normal { set, normal } => {
                let r = is_normal(t, *set)?.normal;
                (r == *normal, r.to_string())
            }
            Claim::Simple { simple } => {
                let r = is_simple(t)?;
                (r == *simple, r.to_string())
            }
            Claim::Plain { plain } => {
                let r = is_plain(t)?;
                (r == *plain, r.to_string())
            }
        };
        out.push(ClaimCheck {
            claim: claim.clone(),
            holds,
            observed,
        });
    }
    Ok(out)
}
