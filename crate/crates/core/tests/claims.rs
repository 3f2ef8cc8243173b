use scb_core::claims::{as48_assignment2_solutions, clean_rsf_list, generic_vs_published};
use scb_core::closed_form::{as48_assignment2, closed_form_det, ClosedForm};
use scb_core::search::solution_sets_48_assignment2_with;

#[test]
fn pinned_evaluator_passes() {
    let c = as48_assignment2_solutions(|s| ClosedForm::As48A2.eval(&s)).unwrap();
    assert!(c.passed, "{}", c.detail);
    for t in ["(0,1,2,4,3)", "(4,3,2,0,1)", "(1,0,2,3,4)"] {
        assert!(c.detail.contains(t));
    }
}

#[test]
fn perturbed_evaluator_is_caught() {
    // one coefficient off: x -> x + 1 in the first argument
    let shifted = |s: [i64; 5]| ClosedForm::As48A2.eval(&[s[0] + 1, s[1], s[2], s[3], s[4]]);
    let c = as48_assignment2_solutions(shifted).unwrap();
    assert!(!c.passed, "{}", c.detail);

    // extra factor with an extra root
    let extra = |s: [i64; 5]| Ok(ClosedForm::As48A2.eval(&s)? * (s[0] - s[1] + 1) as i128);
    let n = solution_sets_48_assignment2_with(19, extra).unwrap().integer.len();
    assert_ne!(n, 8);
    assert!(!as48_assignment2_solutions(extra).unwrap().passed);

    // constant offset kills every root
    let offset = |s: [i64; 5]| Ok(ClosedForm::As48A2.eval(&s)? + 1);
    assert!(!as48_assignment2_solutions(offset).unwrap().passed);
}

#[test]
fn assignment2_labels_respect_bit_consistency() {
    let labels = as48_assignment2(0, 1, 2, 4, 3);
    assert_eq!(labels.len(), 6);
    assert_eq!(closed_form_det(ClosedForm::As48A2, &[0, 1, 2, 4, 3], 67).unwrap(), 0);
}

#[test]
fn comparison_has_no_mismatches() {
    let (claim, reports) = generic_vs_published().unwrap();
    assert!(claim.passed);
    for r in &reports {
        assert_eq!(r.mismatches, 0, "{}", r.topology);
        assert_eq!(r.not_contained, 0, "{}", r.topology);
    }
}

#[test]
fn clean_list_primes_are_prime() {
    for (rsf, primes) in clean_rsf_list() {
        assert_eq!(&rsf[..2], &[0, 1]);
        assert!(primes.iter().all(|&p| scb_core::gfp::is_prime(p as u64)));
    }
}
