//! Canonical forms and exhaustive enumeration of small loops.

mod canonical;
mod emit;
mod enumerate;
mod sample;

pub use canonical::canonical_form;
pub use emit::table_file_name;
pub use enumerate::{
    enumerate, CensusResult, Constraints, SearchMode, SearchSpec, Strategy, MAX_SEARCH_ORDER,
};
pub use sample::random_reduced_loop;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{self, axiom_profile, SystemKind};
    use crate::catalog;
    use crate::error::Error;

    fn count(order: usize, c: Constraints) -> u64 {
        enumerate(&SearchSpec::new(order, c)).unwrap().count
    }

    #[test]
    fn loops_up_to_isomorphism() {
        let none = Constraints::default();
        let got: Vec<u64> = (1..=6).map(|n| count(n, none)).collect();
        assert_eq!(got, vec![1, 1, 1, 2, 6, 109]);
    }

    #[test]
    fn reduced_tables_without_rejection() {
        let got: Vec<u64> = (1..=5)
            .map(|n| {
                enumerate(&SearchSpec::new(n, Constraints::default()).labeled())
                    .unwrap()
                    .count
            })
            .collect();
        assert_eq!(got, vec![1, 1, 1, 4, 56]);
    }

    #[test]
    fn no_small_nafils() {
        let nafil = Constraints {
            nafil: true,
            ..Default::default()
        };
        for n in 1..=4 {
            assert_eq!(count(n, nafil), 0, "order {n}");
        }
        let r = enumerate(&SearchSpec::new(5, nafil).with_mode(SearchMode::Collect)).unwrap();
        assert!(r.count >= 1);
        let l5 = canonical_form(&catalog::table("l5").unwrap()).unwrap();
        let reps = r.representatives.unwrap();
        assert!(reps.contains(&l5));
        for t in &reps {
            assert_eq!(axiom_profile(t).kind, SystemKind::Nafil);
            assert_eq!(&canonical_form(t).unwrap(), t);
        }
    }

    #[test]
    fn spec_validation() {
        let c = Constraints {
            plain: true,
            composite: true,
            ..Default::default()
        };
        assert!(matches!(
            enumerate(&SearchSpec::new(5, c)),
            Err(Error::InvalidSearchSpec(_))
        ));
        assert!(matches!(
            enumerate(&SearchSpec::new(9, Constraints::default())),
            Err(Error::UnsupportedOrder(9))
        ));
        assert!(matches!(
            enumerate(&SearchSpec::new(4, Constraints::default()).with_jobs(0)),
            Err(Error::InvalidSearchSpec(_))
        ));
    }

    #[test]
    fn random_loops_are_loops() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 1..=12 {
            let t = random_reduced_loop(n, &mut rng).unwrap();
            assert!(axioms::is_loop(&t));
            assert_eq!(axioms::identity(&t), Some(1));
        }
    }
}
