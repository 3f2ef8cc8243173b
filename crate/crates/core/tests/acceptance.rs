//! Acceptance criteria, one test each. Every test writes a single
//! `criterion N: PASS|FAIL ...` line straight to stderr so the line shows up
//! whether or not libtest captures output.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::Instant;

use scb_core::ccm::Analysis;
use scb_core::claims::{self, Claim, AS48_ASSIGNMENT2_ZEROS, AS59_PATTERN4_ZEROS};
use scb_core::closed_form::ClosedForm;
use scb_core::code::ScbSpec;
use scb_core::decoder::{
    channel_llrs, classify_error, monte_carlo, planted_llrs, Decoder, ErrorProfile, TrialConfig,
};
use scb_core::oracle::{cross_validate, OracleOptions};
use scb_core::search::solution_sets_48_assignment2;
use scb_core::topology::{as48, as59, catalog};

fn report(n: u32, passed: bool, detail: &str, started: Instant) {
    let line = format!(
        "criterion {n}: {} ({:.1}s) {detail}\n",
        if passed { "PASS" } else { "FAIL" },
        started.elapsed().as_secs_f64()
    );
    let _ = std::io::stderr().write_all(line.as_bytes());
}

fn check_claim(n: u32, c: Claim, started: Instant) {
    report(n, c.passed, &format!("{}: {}", c.id, c.detail), started);
    assert!(c.passed, "{}: {}", c.statement, c.detail);
}

#[test]
fn criterion_01_assignment1_empty() {
    let t = Instant::now();
    check_claim(1, claims::as48_assignment1_empty().unwrap(), t);
}

#[test]
fn criterion_02_assignment2_solutions() {
    let t = Instant::now();
    let s = solution_sets_48_assignment2(19).unwrap();
    let got: BTreeSet<_> = s.integer.iter().copied().collect();
    let want: BTreeSet<_> = AS48_ASSIGNMENT2_ZEROS.iter().copied().collect();
    let c = claims::as48_assignment2_solutions(|x| ClosedForm::As48A2.eval(&x)).unwrap();
    assert_eq!(got, want);
    check_claim(2, c, t);
}

#[test]
fn criterion_03_as59_pattern4_solutions() {
    let t = Instant::now();
    let c = claims::as59_pattern4_solutions().unwrap();
    assert_eq!(AS59_PATTERN4_ZEROS.len(), 8);
    check_claim(3, c, t);
}

#[test]
fn criterion_04_generic_vs_closed_form() {
    let t = Instant::now();
    let (c, reports) = claims::generic_vs_published().unwrap();
    assert_eq!(reports.len(), catalog().len());
    check_claim(4, c, t);
}

#[test]
fn criterion_05_rsf_01246_eliminates_48() {
    let t = Instant::now();
    check_claim(5, claims::rsf_01246_scan().unwrap(), t);
}

#[test]
fn criterion_06_rsf_01247_59_exceptions() {
    let t = Instant::now();
    check_claim(6, claims::rsf_01247_scan().unwrap(), t);
}

#[test]
fn criterion_07_clean_rsf_list() {
    let t = Instant::now();
    let list = claims::clean_rsf_list();
    assert!(list.contains(&(vec![0, 1, 2, 4, 17], vec![67])));
    assert!(list.contains(&(vec![0, 1, 2, 3, 7], vec![83, 97, 101, 103, 107, 109, 113, 127])));
    check_claim(7, claims::clean_rsf_scan().unwrap(), t);
}

#[test]
fn criterion_08_oracle_equivalence() {
    let t = Instant::now();
    let mut bad = Vec::new();
    let mut sizes = Vec::new();
    for p in [11, 13] {
        for rsf in [vec![0, 1, 2, 3, 4], vec![0, 1, 2, 4, 6]] {
            let spec = ScbSpec::selected_rows(p, rsf.clone()).unwrap();
            for top in [as48(), as59()] {
                let cv = cross_validate(&spec, &top, OracleOptions::default()).unwrap();
                sizes.push(format!("{}@{p}{rsf:?}={}", top.name(), cv.oracle_supports.len()));
                if !cv.agree() {
                    bad.push(format!(
                        "{}@{p}{rsf:?}: ccm {} oracle {}",
                        top.name(),
                        cv.ccm_supports.len(),
                        cv.oracle_supports.len()
                    ));
                }
            }
        }
    }
    let detail = if bad.is_empty() { sizes.join(" ") } else { bad.join("; ") };
    report(8, bad.is_empty(), &detail, t);
    assert!(bad.is_empty(), "{detail}");
}

#[test]
fn criterion_09_candidate2_count() {
    let t = Instant::now();
    let mut parts = Vec::new();
    let mut ok = true;
    for p in [7, 11, 13] {
        let (got, want) = claims::c2_count(p).unwrap();
        ok &= got == want;
        parts.push(format!(
            "p={p}: {got} supports vs p^2(p-1) = {want}, ratio {:.3}",
            got as f64 / want as f64
        ));
    }
    let detail = parts.join("; ");
    report(9, ok, &detail, t);
    assert!(ok, "{detail}");
}

#[test]
fn criterion_10_tanner_p31() {
    let t = Instant::now();
    check_claim(10, claims::tanner_p31().unwrap(), t);
}

/// Topology name, its `(a, b)` class and the supports to plant.
type Plants = Vec<(String, (usize, usize), Vec<Vec<usize>>)>;

/// Supports of 100 exact instances of each catalog topology present in `spec`.
fn plants(spec: &ScbSpec) -> Plants {
    let p = spec.p() as usize;
    let mut out = Vec::new();
    for top in catalog() {
        let a = Analysis::new(&top).unwrap();
        if !a.exists_in_code(spec).unwrap().present() {
            continue;
        }
        let supports: Vec<Vec<usize>> = if p <= 13 {
            let all: Vec<Vec<usize>> = a.instances(spec).unwrap().into_iter().collect();
            (0..100).map(|i| all[i * all.len() / 100].clone()).collect()
        } else {
            let w = a.exists_in_code(spec).unwrap().witness.unwrap();
            (0..100)
                .map(|i| {
                    let (c, d) = (i / 10 * 7 % p, i % 10 * 13 % p);
                    w.support
                        .iter()
                        .map(|&v| (v / p + c) % p * p + (v % p + d) % p)
                        .collect()
                })
                .collect()
        };
        out.push((top.name().to_string(), (top.a(), top.b()), supports));
    }
    out
}

#[test]
fn criterion_11_decoder_sanity() {
    let t = Instant::now();
    let cfg = TrialConfig::default();
    let h67 = ScbSpec::eab(67, 5).unwrap().build();
    let rate = h67.dimension() as f64 / h67.cols() as f64;
    let clean = monte_carlo(
        &h67,
        rate,
        &[None],
        &TrialConfig {
            max_frames: 1000,
            target_errors: u64::MAX,
            ..cfg.clone()
        },
    )
    .unwrap();
    let mut ok = clean[0].frames == 1000 && clean[0].n_collected == 0;
    let mut parts = vec![format!(
        "noiseless p=67: {}/{} decoded",
        clean[0].frames - clean[0].n_collected,
        clean[0].frames
    )];
    for p in [11, 67] {
        let spec = ScbSpec::eab(p, 5).unwrap();
        let h = spec.build();
        let dec = Decoder::new(&h);
        let zero = vec![0u8; h.cols()];
        let mut rng = scb_core::decoder::frame_rng(cfg.seed, 0, 0);
        for (name, class, supports) in plants(&spec) {
            let mut hits = 0;
            let mut seen = std::collections::BTreeMap::<String, usize>::new();
            for s in &supports {
                let llr = planted_llrs(h.cols(), s, 0.0, &mut rng);
                let o = dec.decode(&llr, &zero, &cfg).unwrap();
                let got = if o.residual.is_empty() {
                    "decoded".to_string()
                } else {
                    let c = classify_error(&o.residual, &h).unwrap();
                    if c.absorbing && (c.a, c.b) == class {
                        hits += 1;
                    }
                    format!("({},{}){}", c.a, c.b, if c.absorbing { "" } else { "*" })
                };
                *seen.entry(got).or_default() += 1;
            }
            let pass = hits * 10 >= supports.len() * 9;
            ok &= pass;
            parts.push(format!(
                "p={p} {name}: {hits}/{} in ({},{}) {seen:?}",
                supports.len(),
                class.0,
                class.1
            ));
        }
    }
    let detail = parts.join("; ");
    report(11, ok, &detail, t);
    assert!(ok, "{detail}");
}

fn bucket_sum(p: &ErrorProfile, classes: &[(usize, usize)]) -> u64 {
    classes.iter().map(|&(a, b)| p.bucket(a, b)).sum()
}

/// Extended run. `SCB_FLOOR_SNR` (dB, default 5.5) and `SCB_FLOOR_FRAMES`
/// (default 10^7) override the operating point.
#[test]
#[ignore = "extended: hours of decoding at p = 67"]
fn criterion_12_error_floor_direction() {
    let t = Instant::now();
    let snr: f64 = std::env::var("SCB_FLOOR_SNR")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(5.5);
    let frames: u64 = std::env::var("SCB_FLOOR_FRAMES")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(10_000_000);
    let cfg = TrialConfig {
        target_errors: 50,
        max_frames: frames,
        ..Default::default()
    };
    let run = |rows: Vec<u32>| {
        let h = ScbSpec::selected_rows(67, rows).unwrap().build();
        let rate = h.dimension() as f64 / h.cols() as f64;
        monte_carlo(&h, rate, &[Some(snr)], &cfg).unwrap().remove(0)
    };
    let eab = run(vec![0, 1, 2, 3, 4]);
    let sr = run(vec![0, 1, 2, 4, 17]);
    let enough = eab.n_collected >= 50;
    let modal = eab.modal_bucket() == Some((4, 8));
    let sr_zero = bucket_sum(&sr, &[(4, 8), (5, 9), (6, 8)]) == 0;
    let ok = enough && modal && sr_zero;
    let detail = format!(
        "snr {snr} dB; EAB {} failures / {} frames, buckets {:?}, unclassified {}; \
         SR [0,1,2,4,17] {} failures / {} frames, buckets {:?}",
        eab.n_collected, eab.frames, eab.buckets, eab.unclassified, sr.n_collected, sr.frames, sr.buckets
    );
    report(12, ok, &detail, t);
    assert!(ok, "{detail}");
}

#[test]
fn noiseless_llrs_are_saturated() {
    let mut rng = scb_core::decoder::frame_rng(1, 0, 0);
    assert!(channel_llrs(10, 0.0, &mut rng).iter().all(|&x| x > 0.0));
}
