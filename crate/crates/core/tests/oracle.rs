use proptest::prelude::*;

use scb_core::code::ScbSpec;
use scb_core::oracle::{
    cross_validate, enumerate_class, enumerate_unpruned, max_shared_checks, records,
    write_records_csv, OracleOptions,
};
use scb_core::topology::{as48, as59, catalog, is_absorbing};
use scb_core::Error;

fn opts(use_symmetry: bool) -> OracleOptions {
    OracleOptions {
        use_symmetry,
        ..Default::default()
    }
}

fn small_spec() -> impl Strategy<Value = ScbSpec> {
    (prop::sample::select(vec![5u32, 7]), 3usize..=5).prop_flat_map(|(p, r)| {
        prop::sample::subsequence((0..p).collect::<Vec<_>>(), r)
            .prop_map(move |rows| ScbSpec::selected_rows(p, rows).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn symmetry_shortcut_is_exact(spec in small_spec(), a in 3usize..=5, b in 0usize..=9) {
        let fast = enumerate_class(&spec, a, b, opts(true)).unwrap();
        let slow = enumerate_class(&spec, a, b, opts(false)).unwrap();
        prop_assert_eq!(&fast, &slow);
        let h = spec.build();
        for s in &fast {
            prop_assert_eq!(is_absorbing(s, &h).unwrap(), Some((a, b)));
        }
    }
}

#[test]
fn pruned_search_matches_unpruned() {
    for (p, r) in [(5, 3), (5, 4), (7, 5)] {
        let spec = ScbSpec::eab(p, r).unwrap();
        let h = spec.build();
        for a in 3usize..=4 {
            for b in 0..=a * r as usize {
                let fast = enumerate_class(&spec, a, b, opts(true)).unwrap();
                let slow = enumerate_unpruned(&h, a, b).unwrap();
                assert_eq!(fast, slow, "p={p} r={r} ({a},{b})");
            }
        }
    }
}

#[test]
fn girth_six_codes_share_at_most_one_check() {
    let h = ScbSpec::eab(11, 5).unwrap().build();
    assert_eq!(max_shared_checks(&h), 1);
}

#[test]
fn cross_validation_examples() {
    let eab11 = ScbSpec::eab(11, 5).unwrap();
    assert!(cross_validate(&eab11, &as48(), opts(true)).unwrap().agree());
    let eab13 = ScbSpec::eab(13, 5).unwrap();
    assert!(cross_validate(&eab13, &as59(), opts(true)).unwrap().agree());
    let sr29 = ScbSpec::selected_rows(29, vec![0, 1, 2, 4, 6]).unwrap();
    let cv = cross_validate(&sr29, &as48(), opts(true)).unwrap();
    assert!(cv.agree());
    assert!(cv.oracle_supports.is_empty());
}

#[test]
fn budget_is_enforced() {
    let spec = ScbSpec::eab(11, 5).unwrap();
    let small = OracleOptions {
        use_symmetry: true,
        budget: 10,
    };
    assert!(matches!(
        enumerate_class(&spec, 4, 8, small),
        Err(Error::Budget { .. })
    ));
}

#[test]
fn records_and_csv() {
    let spec = ScbSpec::eab(7, 5).unwrap();
    let s = enumerate_class(&spec, 4, 8, opts(true)).unwrap();
    let recs = records(&spec, &s, &catalog()).unwrap();
    assert_eq!(recs.len(), s.len());
    for r in &recs {
        assert_eq!(r.class, (4, 8));
        assert_eq!(r.topology.as_deref(), Some("AS48"));
        assert_eq!(r.satisfied_checks.len(), 6);
    }
    let mut buf = Vec::new();
    write_records_csv(&mut buf, &["seed: none".into()], &recs).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# seed: none"));
    assert_eq!(lines.next(), Some("a,b,topology,support,satisfied_checks,labeling"));
    assert_eq!(lines.count(), recs.len());
}
