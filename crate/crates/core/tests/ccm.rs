use proptest::prelude::*;

use scb_core::ccm::{Analysis, Verdict};
use scb_core::code::ScbSpec;
use scb_core::gfp::is_prime;
use scb_core::search::{scan_rsf, RsfPolicy};
use scb_core::topology::{
    as48, as68_c2, as68_c4, as68_c5, catalog, induced_topology, is_absorbing, isomorphisms,
};

fn rsf_and_prime() -> impl Strategy<Value = (Vec<u32>, u32)> {
    (prop::sample::select((29u32..110).filter(|&p| is_prime(p as u64)).collect::<Vec<_>>()))
        .prop_flat_map(|p| {
            (
                prop::sample::subsequence((2..p).collect::<Vec<_>>(), 3),
                Just(p),
            )
        })
        .prop_map(|(rest, p)| {
            let mut r = vec![0, 1];
            r.extend(rest);
            (r, p)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn as48_elimination_implies_containing_shapes_eliminated((rsf, p) in rsf_and_prime()) {
        let spec = ScbSpec::selected_rows(p, rsf).unwrap();
        let base = Analysis::new(&as48()).unwrap().exists_in_code(&spec).unwrap();
        if base.verdict() == Verdict::Absent {
            for t in [as68_c2(), as68_c4(), as68_c5()] {
                let v = Analysis::new(&t).unwrap().exists_in_code(&spec).unwrap().verdict();
                prop_assert_eq!(v, Verdict::Absent, "{}", t.name());
            }
        }
    }

    #[test]
    fn scan_verdicts_respect_as48_containment((rsf, p) in rsf_and_prime()) {
        let an: Vec<Analysis> = [as48(), as68_c2(), as68_c4(), as68_c5()]
            .iter()
            .map(|t| Analysis::new(t).unwrap())
            .collect();
        let report = scan_rsf(&rsf, &[p], &an, RsfPolicy::Reject).unwrap();
        let v = &report.rows[0].1;
        if v[0] == Verdict::Absent {
            prop_assert!(v[1..].iter().all(|&x| x == Verdict::Absent));
        }
    }
}

#[test]
fn witnesses_are_exact_instances() {
    for (p, rsf) in [(11, vec![0, 1, 2, 3, 4]), (67, vec![0, 1, 2, 3, 4]), (13, vec![0, 1, 2, 4, 6])] {
        let spec = ScbSpec::selected_rows(p, rsf).unwrap();
        let h = spec.build();
        for t in catalog() {
            let e = Analysis::new(&t).unwrap().exists_in_code(&spec).unwrap();
            let Some(w) = e.witness else { continue };
            assert_eq!(w.support.len(), t.a());
            let mut s = w.support.clone();
            s.sort_unstable();
            assert_eq!(is_absorbing(&s, &h).unwrap(), Some((t.a(), t.b())), "{} p={p}", t.name());
            let (shape, _) = induced_topology(&s, &h).unwrap().unwrap();
            assert!(!isomorphisms(&t, &shape).is_empty(), "{} p={p}", t.name());
            for check in t.checks() {
                for (x, &u) in check.iter().enumerate() {
                    for &v in &check[x + 1..] {
                        assert_ne!(w.columns[u], w.columns[v], "{} p={p}", t.name());
                    }
                }
            }
        }
    }
}

#[test]
fn eab_67_keeps_48() {
    let spec = ScbSpec::eab(67, 5).unwrap();
    let e = Analysis::new(&as48()).unwrap().exists_in_code(&spec).unwrap();
    assert_eq!(e.verdict(), Verdict::Present);
}

#[test]
fn selected_rows_0_1_2_4_17_at_67_is_clean() {
    let spec = ScbSpec::selected_rows(67, vec![0, 1, 2, 4, 17]).unwrap();
    for t in catalog() {
        let v = Analysis::new(&t).unwrap().exists_in_code(&spec).unwrap().verdict();
        assert_eq!(v, Verdict::Absent, "{}", t.name());
    }
}

#[test]
fn wrong_row_count_is_rejected() {
    let spec = ScbSpec::eab(11, 3).unwrap();
    assert!(Analysis::new(&as48()).unwrap().exists_in_code(&spec).is_err());
}
