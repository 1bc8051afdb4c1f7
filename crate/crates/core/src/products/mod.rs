//! Multi-φ systems, block and direct products, generator checks, and the
//! decomposition of a loop over the cosets of a normal subloop.

mod decompose;
mod mphi;
mod multiphi;
mod generators;

pub use decompose::{decompose, recompose, CosetDecomposition};
pub use mphi::{parse_mphi, to_mphi};
pub use multiphi::{
    block_product, classify_phi_type, compose_unchecked, direct_product, index_pair, pair_index,
    MultiPhiSystem, PhiType,
};
pub use generators::{validate_generators, GeneratorReport, GeneratorViolation, InverseReadings};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{axiom_profile, SystemKind};
    use crate::catalog;
    use crate::error::Error;
    use crate::table::parse_table;

    #[test]
    fn c2_squared_is_k4() {
        let c2 = catalog::table("c2").unwrap();
        assert_eq!(
            direct_product(&c2, &c2).unwrap(),
            catalog::table("k4").unwrap()
        );
    }

    #[test]
    fn c2_times_l5_is_l10() {
        let p = direct_product(
            &catalog::table("c2").unwrap(),
            &catalog::table("l5").unwrap(),
        )
        .unwrap();
        assert_eq!(p, catalog::table("l10").unwrap());
    }

    #[test]
    fn block_product_errors() {
        let c2 = catalog::table("c2").unwrap();
        let bad = parse_table("2\n1 1\n2 2").unwrap();
        let mut mp = MultiPhiSystem::mono(c2.clone(), c2.clone());
        mp.phi[1] = bad.clone();
        assert!(matches!(
            block_product(&mp),
            Err(Error::PhiNotQuasigroup { p: 1, q: 2 })
        ));
        let mp = MultiPhiSystem::mono(bad, c2.clone());
        assert!(matches!(block_product(&mp), Err(Error::ENotQuasigroup)));
        assert!(matches!(
            MultiPhiSystem::new(c2.clone(), vec![c2.clone(); 3]),
            Err(Error::ShapeMismatch(_))
        ));
        let l10 = catalog::table("l10").unwrap();
        assert!(matches!(
            direct_product(&l10, &l10),
            Err(Error::OrderTooLarge(100))
        ));
    }

    #[test]
    fn phi_types() {
        let c2 = catalog::table("c2").unwrap();
        let c4 = catalog::table("c4").unwrap();
        let k4 = catalog::table("k4").unwrap();
        assert_eq!(
            classify_phi_type(&MultiPhiSystem::mono(c2.clone(), c2.clone())),
            PhiType::TypeA
        );
        let mixed = MultiPhiSystem::new(
            c2.clone(),
            vec![c4.clone(), c4.clone(), c4.clone(), k4.clone()],
        )
        .unwrap();
        assert_eq!(classify_phi_type(&mixed), PhiType::TypeA);
        let q3 = parse_table("3\n1 2 3\n3 1 2\n2 3 1").unwrap();
        let c3 = catalog::table("c3").unwrap();
        let mut irregular = MultiPhiSystem::mono(c2.clone(), c3.clone());
        irregular.phi[1] = q3;
        assert_eq!(classify_phi_type(&irregular), PhiType::Irregular);
        // C3 relabeled so that 2 is the identity: still a loop, different identity
        let shifted = c3.relabel(&[2, 1, 3]).unwrap();
        let mut type_b = MultiPhiSystem::mono(c2, c3);
        type_b.phi[3] = shifted;
        assert_eq!(classify_phi_type(&type_b), PhiType::TypeB);
    }

    #[test]
    fn mixed_groups_give_a_nafil() {
        let c2 = catalog::table("c2").unwrap();
        let c4 = catalog::table("c4").unwrap();
        let k4 = catalog::table("k4").unwrap();
        let mp = MultiPhiSystem::new(c2, vec![c4.clone(), c4.clone(), c4, k4]).unwrap();
        let t = block_product(&mp).unwrap();
        let p = axiom_profile(&t);
        assert_eq!(p.kind, SystemKind::Nafil);
        assert!(p.witness_a6.is_some());
    }

    #[test]
    fn generator_checks() {
        let c2 = catalog::table("c2").unwrap();
        let r = validate_generators(&MultiPhiSystem::mono(c2.clone(), c2.clone()));
        assert!(r.valid, "{r:?}");
        let nafil8 = catalog::table("nafil8").unwrap();
        let d = decompose(&nafil8, crate::set::ElementSet::from_elements(1..=4)).unwrap();
        let r = validate_generators(&d.multiphi);
        assert!(r.valid, "{r:?}");
        let q2 = parse_table("2\n2 1\n1 2").unwrap();
        let mut mp = MultiPhiSystem::mono(c2.clone(), c2);
        mp.phi[0] = q2;
        let r = validate_generators(&mp);
        assert!(!r.valid);
        assert!(r
            .violations
            .contains(&GeneratorViolation::NotRightIdentity { p: 1, q: 1 }));
        assert!(r
            .violations
            .contains(&GeneratorViolation::NotLeftIdentity { p: 1, q: 1 }));
    }
}
