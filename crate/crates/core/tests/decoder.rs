use proptest::prelude::*;

use scb_core::ccm::Analysis;
use scb_core::code::{ParityCheck, ScbSpec};
use scb_core::decoder::{
    classify_error, monte_carlo, planted_llrs, Decoder, QFormat, Quantization, TrialConfig,
    FLOAT_LLR_CAP,
};
use scb_core::gfp::FieldMatrix;
use scb_core::topology::as48;

fn codewords(h: &ParityCheck) -> Vec<Vec<u8>> {
    let rows: Vec<Vec<i64>> = (0..h.rows())
        .map(|c| {
            let mut r = vec![0i64; h.cols()];
            for &v in h.vars_of(c) {
                r[v] = 1;
            }
            r
        })
        .collect();
    let basis = FieldMatrix::from_rows(&rows, 2).unwrap().null_space();
    basis.vectors.iter().take(4).map(|v| v.iter().map(|&x| x as u8).collect()).collect()
}

proptest! {
    #[test]
    fn quantizer_is_idempotent(x in -100.0f64..100.0, ib in 1u32..6, fb in 0u32..4) {
        let q = QFormat { integer_bits: ib, fraction_bits: fb };
        let y = q.quantize(x);
        prop_assert_eq!(q.quantize(y), y);
        prop_assert!(y >= q.min() && y <= q.max());
        prop_assert!((y / q.step()).fract() == 0.0);
        if x >= q.min() && x <= q.max() {
            prop_assert!((y - x).abs() <= q.step() / 2.0 + 1e-12);
        }
    }
}

#[test]
fn saturation_at_range_edges() {
    let q = QFormat::default();
    assert_eq!(q.quantize(1e9), 15.75);
    assert_eq!(q.quantize(-1e9), -16.0);
    assert_eq!(q.quantize(15.8), 15.75);
    assert_eq!(q.quantize(-15.9), -16.0);
    assert_eq!(Quantization::Float.apply(1e9), FLOAT_LLR_CAP);
}

#[test]
fn noiseless_decoding_recovers_codewords() {
    for (p, rows) in [(7, vec![0, 1, 2]), (11, vec![0, 1, 2, 3, 4]), (13, vec![0, 1, 2, 4, 6])] {
        let h = ScbSpec::selected_rows(p, rows).unwrap().build();
        let dec = Decoder::new(&h);
        for quantization in [Quantization::Float, Quantization::default()] {
            let cfg = TrialConfig {
                quantization,
                ..Default::default()
            };
            for c in codewords(&h) {
                let llr: Vec<f64> = c.iter().map(|&b| if b == 0 { 20.0 } else { -20.0 }).collect();
                let o = dec.decode(&llr, &c, &cfg).unwrap();
                assert!(o.converged, "p = {p}");
                assert!(o.residual.is_empty(), "p = {p}");
                assert_eq!(o.hard, c);
            }
        }
    }
}

#[test]
fn monte_carlo_is_deterministic_across_thread_counts() {
    let h = ScbSpec::eab(13, 3).unwrap().build();
    let rate = h.dimension() as f64 / h.cols() as f64;
    let cfg = TrialConfig {
        target_errors: 30,
        max_frames: 3000,
        batch: 64,
        max_iterations: 30,
        ..Default::default()
    };
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| monte_carlo(&h, rate, &[Some(2.0), Some(3.0)], &cfg).unwrap())
    };
    let a = run(1);
    assert_eq!(a, run(3));
    assert_eq!(a, run(1));
    for p in &a {
        let total: u64 = p.buckets.values().sum::<u64>() + p.unclassified;
        assert_eq!(total, p.n_collected);
        let union: u64 = p.union_buckets.values().sum::<u64>() + p.union_unclassified;
        assert_eq!(union, p.n_collected);
    }
}

#[test]
fn fer_does_not_increase_with_snr() {
    let h = ScbSpec::eab(13, 3).unwrap().build();
    let rate = h.dimension() as f64 / h.cols() as f64;
    let cfg = TrialConfig {
        target_errors: 200,
        max_frames: 20_000,
        max_iterations: 50,
        ..Default::default()
    };
    let profiles = monte_carlo(&h, rate, &[Some(1.0), Some(2.0), Some(3.0), Some(4.0)], &cfg).unwrap();
    for w in profiles.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        // two-sigma binomial margin on the difference
        let var = lo.fer() * (1.0 - lo.fer()) / lo.frames as f64
            + hi.fer() * (1.0 - hi.fer()) / hi.frames as f64;
        assert!(
            hi.fer() <= lo.fer() + 2.0 * var.sqrt(),
            "{} dB: {} > {} dB: {}",
            hi.snr_db,
            hi.fer(),
            lo.snr_db,
            lo.fer()
        );
    }
    assert!(profiles[3].fer() < profiles[0].fer());
}

#[test]
fn planted_48_at_13_lands_in_its_bucket() {
    let spec = ScbSpec::eab(13, 5).unwrap();
    let h = spec.build();
    let dec = Decoder::new(&h);
    let zero = vec![0u8; h.cols()];
    let cfg = TrialConfig::default();
    let all: Vec<Vec<usize>> = Analysis::new(&as48()).unwrap().instances(&spec).unwrap().into_iter().collect();
    let mut rng = scb_core::decoder::frame_rng(7, 0, 0);
    let mut hits = 0;
    for i in 0..100 {
        let s = &all[i * all.len() / 100];
        let o = dec.decode(&planted_llrs(h.cols(), s, 0.0, &mut rng), &zero, &cfg).unwrap();
        if !o.residual.is_empty() {
            let c = classify_error(&o.residual, &h).unwrap();
            hits += (c.absorbing && (c.a, c.b) == (4, 8)) as usize;
        }
    }
    assert!(hits >= 90, "{hits}/100");
}

#[test]
fn config_validation() {
    let h = ScbSpec::eab(7, 3).unwrap().build();
    let bad = TrialConfig {
        max_iterations: 0,
        ..Default::default()
    };
    assert!(monte_carlo(&h, 0.5, &[None], &bad).is_err());
    assert!(monte_carlo(&h, 0.0, &[None], &TrialConfig::default()).is_err());
    assert!(classify_error(&[], &h).is_err());
    let dec = Decoder::new(&h);
    assert!(dec.decode(&[1.0; 3], &[0; 3], &TrialConfig::default()).is_err());
}
