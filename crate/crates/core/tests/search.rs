mod common;

use std::collections::HashSet;

use loopwork::axioms::{axiom_profile, SystemKind};
use loopwork::catalog;
use loopwork::quotient::is_plain;
use loopwork::search::{
    canonical_form, enumerate, CensusResult, Constraints, SearchMode, SearchSpec, Strategy,
};
use loopwork::substructure::{subloop_sets, subsystems};
use loopwork::table::CayleyTable;

fn collect(spec: SearchSpec) -> CensusResult {
    enumerate(&spec.with_mode(SearchMode::Collect)).unwrap()
}

fn reps(r: &CensusResult) -> &[CayleyTable] {
    r.representatives.as_deref().unwrap()
}

/// Reduced Latin squares by plain cell-by-cell backtracking.
fn brute_reduced_count(n: usize) -> u64 {
    fn go(t: &mut Vec<Vec<usize>>, n: usize, pos: usize) -> u64 {
        if pos == (n - 1) * (n - 1) {
            return 1;
        }
        let (i, j) = (1 + pos / (n - 1), 1 + pos % (n - 1));
        let mut total = 0;
        for v in 1..=n {
            if (0..j).all(|c| t[i][c] != v) && (0..i).all(|r| t[r][j] != v) {
                t[i][j] = v;
                total += go(t, n, pos + 1);
                t[i][j] = 0;
            }
        }
        total
    }
    let mut t = vec![vec![0; n]; n];
    for (k, row) in t.iter_mut().enumerate() {
        row[0] = k + 1;
    }
    t[0] = (1..=n).collect();
    go(&mut t, n, 0)
}

#[test]
fn reduced_counts_match_plain_backtracking() {
    for n in 1..=5 {
        let labeled = enumerate(&SearchSpec::new(n, Constraints::default()).labeled()).unwrap();
        assert_eq!(labeled.count, brute_reduced_count(n), "order {n}");
    }
    assert_eq!(brute_reduced_count(5), 56);
}

#[test]
fn orderly_search_agrees_with_canonical_dedup() {
    let cases = [
        (5, Constraints::default()),
        (6, Constraints::default()),
        (
            6,
            Constraints {
                nafil: true,
                ..Default::default()
            },
        ),
        (
            7,
            Constraints {
                abelian: true,
                ..Default::default()
            },
        ),
        (
            7,
            Constraints {
                nafil: true,
                abelian: true,
                plain: true,
                ..Default::default()
            },
        ),
    ];
    for (n, c) in cases {
        let labeled = collect(SearchSpec::new(n, c).labeled());
        let classes: HashSet<CayleyTable> = reps(&labeled)
            .iter()
            .map(|t| canonical_form(t).unwrap())
            .collect();
        let orderly = collect(SearchSpec::new(n, c));
        let got: HashSet<CayleyTable> = reps(&orderly).iter().cloned().collect();
        assert_eq!(got.len() as u64, orderly.count);
        assert_eq!(got, classes, "order {n} {}", c.describe());
    }
}

#[test]
fn known_loop_counts() {
    let counts: Vec<u64> = (1..=7)
        .map(|n| {
            enumerate(&SearchSpec::new(n, Constraints::default()))
                .unwrap()
                .count
        })
        .collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 6, 109, 23746]);
}

#[test]
fn representatives_satisfy_constraints() {
    let c = Constraints {
        nafil: true,
        composite: true,
        ..Default::default()
    };
    for n in 5..=6 {
        let r = collect(SearchSpec::new(n, c));
        let all = enumerate(&SearchSpec::new(
            n,
            Constraints {
                nafil: true,
                ..Default::default()
            },
        ))
        .unwrap();
        // every NAFIL of order 5 and 6 is composite
        assert_eq!(r.count, all.count, "order {n}");
        for t in reps(&r) {
            assert_eq!(axiom_profile(t).kind, SystemKind::Nafil);
            assert!(subsystems(t).unwrap().is_composite());
            assert_eq!(&canonical_form(t).unwrap(), t);
        }
    }
    let c = Constraints {
        nafil: true,
        abelian: true,
        plain: true,
        ..Default::default()
    };
    for t in reps(&collect(SearchSpec::new(7, c))) {
        let p = axiom_profile(t);
        assert!(p.a5 && p.kind == SystemKind::Nafil);
        assert!(is_plain(t).unwrap());
    }
}

#[test]
fn jobs_and_strategies_agree() {
    for c in [
        Constraints::default(),
        Constraints {
            nafil: true,
            ..Default::default()
        },
    ] {
        let base = collect(SearchSpec::new(6, c));
        for spec in [
            SearchSpec::new(6, c).with_jobs(8),
            SearchSpec::new(6, c).with_jobs(3),
            SearchSpec::new(6, c).with_strategy(Strategy::MostConstrained),
            SearchSpec::new(6, c)
                .with_strategy(Strategy::MostConstrained)
                .with_jobs(8),
        ] {
            let r = collect(spec);
            assert_eq!(r.count, base.count);
            assert_eq!(r.representatives, base.representatives);
        }
    }
}

#[test]
fn enumerated_loops_respect_the_half_bound() {
    for n in 1..=7 {
        let r = collect(SearchSpec::new(n, Constraints::default()));
        for t in reps(&r) {
            for h in subloop_sets(t).unwrap() {
                assert!(h.len() == n || 2 * h.len() <= n);
            }
        }
    }
}

#[test]
fn transposed_plain_tables() {
    let a = catalog::table("plain7n").unwrap();
    let b = catalog::table("plain7n-t").unwrap();
    let same = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
    assert_eq!(same, loopwork::quotient::are_isomorphic(&a, &b).is_some());
    assert_eq!(same, common::brute_isomorphic(&a, &b));
}

#[test]
fn emit_writes_manifest_and_tables() {
    let dir = tempfile::tempdir().unwrap();
    let c = Constraints {
        nafil: true,
        ..Default::default()
    };
    let r =
        enumerate(&SearchSpec::new(6, c).with_mode(SearchMode::Emit(dir.path().into()))).unwrap();
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("manifest.json")).unwrap())
            .unwrap();
    assert_eq!(manifest["count"], r.count);
    let files = manifest["files"].as_array().unwrap();
    assert_eq!(files.len() as u64, r.count);
    for f in files {
        let text = std::fs::read_to_string(dir.path().join(f.as_str().unwrap())).unwrap();
        let t = loopwork::table::parse_table(&text).unwrap();
        assert_eq!(canonical_form(&t).unwrap(), t);
        assert_eq!(loopwork::search::table_file_name(&t), f.as_str().unwrap());
    }
}
