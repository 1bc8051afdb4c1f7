use loopwork::axioms::{axiom_profile, SystemKind};
use loopwork::catalog::{self, PLAIN7N_AS_PRINTED};
use loopwork::error::Error;
use loopwork::quotient::are_isomorphic;
use loopwork::report::{analyze_source, TableSource};
use loopwork::set::ElementSet;
use loopwork::substructure::LagrangianClass;
use loopwork::table::{parse_table, CayleyTable};

fn report(src: &str) -> loopwork::report::AnalysisReport {
    analyze_source(&TableSource::parse(src)).unwrap()
}

#[test]
fn every_claim_is_rederived() {
    for entry in catalog::all() {
        for check in catalog::check_claims(&entry).unwrap() {
            assert!(
                check.holds,
                "{}: {:?} observed {}",
                entry.id, check.claim, check.observed
            );
        }
    }
}

#[test]
fn ids_and_errors() {
    assert_eq!(catalog::all().len(), catalog::IDS.len());
    for id in catalog::IDS {
        assert_eq!(catalog::get(id).unwrap().id, id);
    }
    match catalog::get("l6") {
        Err(Error::UnknownId { valid, .. }) => assert!(valid.contains("nafil8")),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn entries_round_trip_through_tbl() {
    for entry in catalog::all() {
        let back = parse_table(&entry.table.to_tbl()).unwrap();
        assert_eq!(back.rows(), entry.table.rows(), "{}", entry.id);
    }
}

#[test]
fn printed_plain7n_is_not_latin() {
    let t = CayleyTable::from_rows(&PLAIN7N_AS_PRINTED).unwrap();
    assert!(!axiom_profile(&t).a4);
    let fixed = catalog::table("plain7n").unwrap();
    let differing: usize = (1..=7)
        .flat_map(|a| (1..=7).map(move |b| (a, b)))
        .filter(|&(a, b)| t.product(a, b) != fixed.product(a, b))
        .count();
    assert_eq!(differing, 2);
    assert_eq!(fixed.transpose(), catalog::table("plain7n-t").unwrap());
}

#[test]
fn l9_anti_report() {
    let r = report("catalog:l9-anti");
    assert_eq!(r.lagrangian_class, Some(LagrangianClass::AntiLagrangian));
    assert_eq!(r.simple, Some(true));
    assert_eq!(r.subsystems.unwrap().nontrivial().count(), 5);
}

#[test]
fn abelian6_report() {
    let r = report("catalog:abelian6");
    assert!(r.profile.a5);
    assert_eq!(r.center, Some(ElementSet::from_elements([1, 2])));
    let c3 = CayleyTable::from_fn(3, |a, b| (a + b - 2) % 3 + 1).unwrap();
    assert!(are_isomorphic(r.center_factor.as_ref().unwrap(), &c3).is_some());
}

#[test]
fn l7_composite_report() {
    let r = report("catalog:l7-composite");
    assert_eq!(r.simple, Some(true));
    assert_eq!(r.composite, Some(true));
    assert_eq!(r.plain, Some(false));
}

#[test]
fn reports_are_consistent() {
    for entry in catalog::all() {
        let r = loopwork::report::analyze(&entry.table).unwrap();
        let subs = r.subsystems.as_ref().unwrap();
        if r.plain == Some(true) {
            assert_eq!(subs.nontrivial().count(), 0, "{}", entry.id);
            assert_eq!(r.simple, Some(true), "{}", entry.id);
        }
        assert_eq!(r.composite, Some(subs.is_composite()));
        assert_eq!(r.normality.len(), subs.nontrivial().count());
        if r.profile.kind == SystemKind::Group {
            assert_eq!(r.decompositions.len(), r.normality.len(), "{}", entry.id);
        }
        assert_eq!(r.decompositions.len(), r.normal_subsystems().len());
        assert_eq!(r, loopwork::report::analyze(&entry.table).unwrap());
    }
}
