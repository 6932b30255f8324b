use tightmaps_core::catalog::SweepBounds;
use tightmaps_core::classify::{
    classify, spin_descriptor, tube_type, MapDescriptor, Rule, TargetTag,
};
use tightmaps_core::matrixalg::Inclusion;
use tightmaps_core::survey::run_survey;
use tightmaps_core::{AlgebraId, Error, Status};

fn status(m: &MapDescriptor) -> Status {
    classify(m).unwrap().status
}

#[test]
fn hand_table() {
    use MapDescriptor::*;
    use TargetTag as T;
    let rows = [
        (DiscInclusion(Inclusion::Iota1, 5), Status::Tight),
        (DiscInclusion(Inclusion::Iota2, 4), Status::Tight),
        (DiscInclusion(Inclusion::Iota2, 5), Status::NotTight),
        (
            TensorRep {
                p: 4,
                m: 1,
                target: T::Su,
            },
            Status::Tight,
        ),
        (
            TensorRep {
                p: 4,
                m: 4,
                target: T::Su,
            },
            Status::Tight,
        ),
        (
            TensorRep {
                p: 4,
                m: 2,
                target: T::Su,
            },
            Status::NotTight,
        ),
        (
            TensorRep {
                p: 5,
                m: 3,
                target: T::Sp,
            },
            Status::NotTight,
        ),
        (
            TensorRep {
                p: 3,
                m: 2,
                target: T::SoStar,
            },
            Status::Tight,
        ),
        (
            TensorRep {
                p: 7,
                m: 4,
                target: T::SoStar,
            },
            Status::NotTight,
        ),
        (
            TensorRep {
                p: 11,
                m: 6,
                target: T::SoStar,
            },
            Status::NotTight,
        ),
        (
            SpinRep {
                p: 6,
                target: T::SoStar,
            },
            Status::Tight,
        ),
        (
            SpinRep {
                p: 9,
                target: T::Sp,
            },
            Status::Tight,
        ),
        (DiagonalDisc(AlgebraId::E7), Status::Tight),
        (Identity(AlgebraId::su(2, 5)), Status::Tight),
    ];
    for (map, expected) in rows {
        assert_eq!(status(&map), expected, "{map}");
    }
}

#[test]
fn spin_routing() {
    // p=6 has p′=4, so the second target is so*(8)
    assert!(spin_descriptor(6)
        .targets
        .contains(&AlgebraId::SoStar { p: 4 }));
    let d = spin_descriptor(9);
    assert!(d.targets.iter().any(|t| matches!(t, AlgebraId::Sp { .. })));
    assert!(!d
        .targets
        .iter()
        .any(|t| matches!(t, AlgebraId::SoStar { .. })));
    for p in 5..=13 {
        assert!(spin_descriptor(p)
            .targets
            .iter()
            .any(|t| matches!(t, AlgebraId::Su { .. })));
    }
}

#[test]
fn tube_type_table() {
    assert!(tube_type(AlgebraId::su(3, 3)));
    assert!(!tube_type(AlgebraId::su(2, 3)));
    assert!(tube_type(AlgebraId::Sp { p: 3 }));
    assert!(tube_type(AlgebraId::SoStar { p: 6 }));
    assert!(!tube_type(AlgebraId::SoStar { p: 5 }));
    assert!(tube_type(AlgebraId::So2 { p: 7 }));
    assert!(tube_type(AlgebraId::E7));
    assert!(!tube_type(AlgebraId::E6));
}

#[test]
fn singletons_delegate() {
    let inner = MapDescriptor::TensorRep {
        p: 5,
        m: 2,
        target: TargetTag::Su,
    };
    let expected = classify(&inner).unwrap();
    for wrapped in [
        MapDescriptor::Composition(vec![inner.clone()]),
        MapDescriptor::Product(vec![inner.clone()]),
    ] {
        assert_eq!(classify(&wrapped).unwrap(), expected);
    }
}

#[test]
fn chains_and_products() {
    use MapDescriptor::*;
    let tight = Composition(vec![
        DiagonalDisc(AlgebraId::Sp { p: 4 }),
        DiscInclusion(Inclusion::Iota1, 4),
    ]);
    let v = classify(&tight).unwrap();
    assert_eq!(v.status, Status::Tight);
    assert!(v.rules().contains(&Rule::R2));
    let broken = Composition(vec![
        DiagonalDisc(AlgebraId::SoStar { p: 5 }),
        DiscInclusion(Inclusion::Iota2, 5),
    ]);
    assert_eq!(status(&broken), Status::NotTight);
    let prod = Product(vec![
        DiagonalDisc(AlgebraId::su(2, 2)),
        DiagonalDisc(AlgebraId::E6),
    ]);
    let v = classify(&prod).unwrap();
    assert_eq!(v.status, Status::Tight);
    assert!(v.rules().contains(&Rule::R1));
    let mixed = Product(vec![
        DiagonalDisc(AlgebraId::su(2, 2)),
        TensorRep {
            p: 2,
            m: 1,
            target: TargetTag::Su,
        },
    ]);
    // the domains differ, so the product is ill-typed
    assert!(matches!(classify(&mixed), Err(Error::IllTyped(_))));
}

#[test]
fn identity_is_tight_everywhere() {
    let b = SweepBounds::default();
    for f in tightmaps_core::catalog::FAMILIES {
        for a in b.ambients(f) {
            let v = classify(&MapDescriptor::Identity(a)).unwrap();
            assert_eq!(v.status, Status::Tight, "{a}");
        }
    }
}

#[test]
fn full_survey_has_no_mismatches() {
    let report = run_survey(&SweepBounds::default()).unwrap();
    let bad: Vec<_> = report.mismatches().collect();
    assert!(bad.is_empty(), "{bad:#?}");
    assert!(report.rows.len() > 400);
}
