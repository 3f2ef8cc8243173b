//! Fixed-point sum-product decoding and Monte Carlo error profiling.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::code::ParityCheck;
use crate::error::{Error, Result};
use crate::topology::{induced_check_degrees, is_absorbing};

/// Signed fixed-point format with `integer_bits` magnitude bits and
/// `fraction_bits` fractional bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QFormat {
    pub integer_bits: u32,
    pub fraction_bits: u32,
}

impl Default for QFormat {
    fn default() -> Self {
        QFormat {
            integer_bits: 4,
            fraction_bits: 2,
        }
    }
}

impl QFormat {
    pub fn step(&self) -> f64 {
        (0.5f64).powi(self.fraction_bits as i32)
    }

    pub fn min(&self) -> f64 {
        -(2f64.powi(self.integer_bits as i32))
    }

    pub fn max(&self) -> f64 {
        2f64.powi(self.integer_bits as i32) - self.step()
    }

    /// Nearest grid point, saturating at the range edges.
    pub fn quantize(&self, x: f64) -> f64 {
        if x.is_nan() {
            return 0.0;
        }
        let q = (x / self.step()).round() * self.step();
        q.clamp(self.min(), self.max())
    }
}

/// Message representation used by the decoder.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantization {
    Fixed(QFormat),
    /// Double precision; magnitudes are capped at [`FLOAT_LLR_CAP`].
    Float,
}

impl Default for Quantization {
    fn default() -> Self {
        Quantization::Fixed(QFormat::default())
    }
}

pub const FLOAT_LLR_CAP: f64 = 1000.0;

impl Quantization {
    pub fn apply(&self, x: f64) -> f64 {
        match self {
            Quantization::Fixed(q) => q.quantize(x),
            Quantization::Float => x.clamp(-FLOAT_LLR_CAP, FLOAT_LLR_CAP),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Quantization::Fixed(q) => format!("Q{}.{}", q.integer_bits, q.fraction_bits),
            Quantization::Float => "float".into(),
        }
    }
}

/// Decoder and simulation settings.
#[derive(Clone, Debug)]
pub struct TrialConfig {
    pub max_iterations: usize,
    /// Stop an SNR point after this many failures.
    pub target_errors: u64,
    /// Stop an SNR point after this many frames.
    pub max_frames: u64,
    pub seed: u64,
    pub quantization: Quantization,
    /// Iterations whose error supports are merged in the union classification.
    pub union_window: usize,
    /// Frames decoded per parallel batch.
    pub batch: usize,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            max_iterations: 200,
            target_errors: 100,
            max_frames: 1_000_000,
            seed: 1,
            quantization: Quantization::default(),
            union_window: 10,
            batch: 512,
        }
    }
}

impl TrialConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_iterations == 0 {
            return Err(Error::OutOfRange("max_iterations must be at least 1".into()));
        }
        if self.batch == 0 || self.union_window == 0 {
            return Err(Error::OutOfRange("batch and union_window must be positive".into()));
        }
        Ok(())
    }
}

/// Result of decoding one frame.
#[derive(Clone, Debug, PartialEq)]
pub struct DecodeOutcome {
    pub hard: Vec<u8>,
    pub converged: bool,
    pub iterations: usize,
    /// Positions where the final decision differs from the transmitted word.
    pub residual: Vec<usize>,
    /// Union of such positions over the last `union_window` iterations.
    pub residual_union: Vec<usize>,
}

/// Flooding sum-product decoder over a fixed parity-check matrix.
#[derive(Clone, Debug)]
pub struct Decoder {
    n: usize,
    /// Edge ranges of each check in the edge arrays.
    check_start: Vec<usize>,
    edge_var: Vec<usize>,
    /// Edge ids of each variable.
    var_start: Vec<usize>,
    var_edges: Vec<usize>,
}

impl Decoder {
    pub fn new(h: &ParityCheck) -> Self {
        let mut check_start = Vec::with_capacity(h.rows() + 1);
        let mut edge_var = Vec::with_capacity(h.n_edges());
        let mut per_var: Vec<Vec<usize>> = vec![Vec::new(); h.cols()];
        check_start.push(0);
        for c in 0..h.rows() {
            for &v in h.vars_of(c) {
                per_var[v].push(edge_var.len());
                edge_var.push(v);
            }
            check_start.push(edge_var.len());
        }
        let mut var_start = Vec::with_capacity(h.cols() + 1);
        let mut var_edges = Vec::with_capacity(edge_var.len());
        var_start.push(0);
        for es in per_var {
            var_edges.extend(es);
            var_start.push(var_edges.len());
        }
        Decoder {
            n: h.cols(),
            check_start,
            edge_var,
            var_start,
            var_edges,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn syndrome_ok(&self, hard: &[u8]) -> bool {
        self.check_start.windows(2).all(|w| {
            self.edge_var[w[0]..w[1]]
                .iter()
                .fold(0u8, |acc, &v| acc ^ hard[v])
                == 0
        })
    }

    /// Decodes channel LLRs (positive favours bit 0). The LLRs are quantized
    /// on entry.
    pub fn decode(
        &self,
        llr: &[f64],
        transmitted: &[u8],
        cfg: &TrialConfig,
    ) -> Result<DecodeOutcome> {
        cfg.validate()?;
        if llr.len() != self.n || transmitted.len() != self.n {
            return Err(Error::Dimension(format!(
                "expected {} llrs and bits, got {} and {}",
                self.n,
                llr.len(),
                transmitted.len()
            )));
        }
        let q = cfg.quantization;
        let chan: Vec<f64> = llr.iter().map(|&x| q.apply(x)).collect();
        let n_edges = self.edge_var.len();
        let mut v2c: Vec<f64> = self.edge_var.iter().map(|&v| chan[v]).collect();
        let mut c2v = vec![0.0f64; n_edges];
        let mut hard: Vec<u8> = chan.iter().map(|&x| u8::from(x < 0.0)).collect();
        let mut window: VecDeque<Vec<usize>> = VecDeque::with_capacity(cfg.union_window);
        let mut t_buf: Vec<f64> = Vec::new();
        let mut suffix: Vec<f64> = Vec::new();

        let lut = match q {
            Quantization::Fixed(f) => Some(CheckLut::new(f)),
            Quantization::Float => None,
        };
        for it in 1..=cfg.max_iterations {
            for w in self.check_start.windows(2) {
                let (s, e) = (w[0], w[1]);
                t_buf.clear();
                match &lut {
                    Some(l) => t_buf.extend(v2c[s..e].iter().map(|&m| l.tanh_half(m))),
                    None => t_buf.extend(v2c[s..e].iter().map(|&m| (m / 2.0).tanh())),
                }
                suffix.clear();
                suffix.resize(e - s + 1, 1.0);
                for k in (0..e - s).rev() {
                    suffix[k] = suffix[k + 1] * t_buf[k];
                }
                let mut prefix = 1.0;
                for k in 0..e - s {
                    let prod = prefix * suffix[k + 1];
                    c2v[s + k] = match &lut {
                        Some(l) => l.output(prod),
                        None => q.apply(2.0 * prod.clamp(-1.0 + 1e-16, 1.0 - 1e-16).atanh()),
                    };
                    prefix *= t_buf[k];
                }
            }
            for v in 0..self.n {
                let es = &self.var_edges[self.var_start[v]..self.var_start[v + 1]];
                let total = chan[v] + es.iter().map(|&e| c2v[e]).sum::<f64>();
                for &e in es {
                    v2c[e] = q.apply(total - c2v[e]);
                }
                hard[v] = u8::from(q.apply(total) < 0.0);
            }
            let ok = self.syndrome_ok(&hard);
            if window.len() == cfg.union_window {
                window.pop_front();
            }
            window.push_back(diff(&hard, transmitted));
            if ok {
                return Ok(self.outcome(hard, transmitted, true, it, &window));
            }
        }
        Ok(self.outcome(hard, transmitted, false, cfg.max_iterations, &window))
    }

    fn outcome(
        &self,
        hard: Vec<u8>,
        transmitted: &[u8],
        converged: bool,
        iterations: usize,
        window: &VecDeque<Vec<usize>>,
    ) -> DecodeOutcome {
        let residual = diff(&hard, transmitted);
        let mut union: BTreeSet<usize> = residual.iter().copied().collect();
        for w in window {
            union.extend(w.iter().copied());
        }
        DecodeOutcome {
            hard,
            converged,
            iterations,
            residual,
            residual_union: union.into_iter().collect(),
        }
    }
}

/// Tables for the check update on a fixed-point grid: `tanh(m / 2)` per grid
/// point, and the `tanh` images of the midpoints between output grid points so
/// that `quantize(2 atanh(x))` becomes a binary search.
#[derive(Clone, Debug)]
struct CheckLut {
    step: f64,
    min_code: i64,
    tanh: Vec<f64>,
    grid: Vec<f64>,
    bounds: Vec<f64>,
}

impl CheckLut {
    fn new(f: QFormat) -> Self {
        let step = f.step();
        let min_code = (f.min() / step).round() as i64;
        let max_code = (f.max() / step).round() as i64;
        let grid: Vec<f64> = (min_code..=max_code).map(|c| c as f64 * step).collect();
        let tanh = grid.iter().map(|&g| (g / 2.0).tanh()).collect();
        let bounds = grid[..grid.len() - 1]
            .iter()
            .map(|&g| ((g + step / 2.0) / 2.0).tanh())
            .collect();
        CheckLut {
            step,
            min_code,
            tanh,
            grid,
            bounds,
        }
    }

    fn tanh_half(&self, m: f64) -> f64 {
        self.tanh[((m / self.step).round() as i64 - self.min_code) as usize]
    }

    fn output(&self, prod: f64) -> f64 {
        self.grid[self.bounds.partition_point(|&b| b <= prod)]
    }
}

fn diff(a: &[u8], b: &[u8]) -> Vec<usize> {
    (0..a.len()).filter(|&i| a[i] != b[i]).collect()
}

/// One-shot decode; see [`Decoder::decode`].
pub fn sum_product_decode(
    h: &ParityCheck,
    llr: &[f64],
    transmitted: &[u8],
    cfg: &TrialConfig,
) -> Result<DecodeOutcome> {
    Decoder::new(h).decode(llr, transmitted, cfg)
}

/// Size, odd-check count and absorbing flag of an error support.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ErrorClass {
    pub a: usize,
    pub b: usize,
    pub absorbing: bool,
}

pub fn classify_error(residual: &[usize], h: &ParityCheck) -> Result<ErrorClass> {
    if residual.is_empty() {
        return Err(Error::OutOfRange("empty residual".into()));
    }
    let (_, b) = induced_check_degrees(residual, h)?;
    let absorbing = is_absorbing(residual, h)?.is_some();
    let mut s = residual.to_vec();
    s.sort_unstable();
    s.dedup();
    Ok(ErrorClass {
        a: s.len(),
        b,
        absorbing,
    })
}

/// Failures at one SNR point. Only absorbing residuals enter `buckets`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ErrorProfile {
    pub snr_db: f64,
    pub frames: u64,
    pub n_collected: u64,
    pub buckets: BTreeMap<(usize, usize), u64>,
    pub unclassified: u64,
    /// Same classification applied to the union of recent error supports.
    pub union_buckets: BTreeMap<(usize, usize), u64>,
    pub union_unclassified: u64,
}

impl ErrorProfile {
    pub fn fer(&self) -> f64 {
        if self.frames == 0 {
            0.0
        } else {
            self.n_collected as f64 / self.frames as f64
        }
    }

    pub fn bucket(&self, a: usize, b: usize) -> u64 {
        self.buckets.get(&(a, b)).copied().unwrap_or(0)
    }

    /// Bucket with the most failures, ties to the smaller class.
    pub fn modal_bucket(&self) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), u64)> = None;
        for (&k, &v) in &self.buckets {
            if best.is_none_or(|(_, bv)| v > bv) {
                best = Some((k, v));
            }
        }
        best.map(|(k, _)| k)
    }
}

/// Noise standard deviation for BPSK at `ebn0_db` and code rate `rate`.
pub fn noise_sigma(ebn0_db: f64, rate: f64) -> f64 {
    (1.0 / (2.0 * rate * 10f64.powf(ebn0_db / 10.0))).sqrt()
}

/// Channel LLRs for the all-zero codeword. `sigma == 0` gives saturated
/// noiseless values.
pub fn channel_llrs(n: usize, sigma: f64, rng: &mut impl Rng) -> Vec<f64> {
    if sigma == 0.0 {
        return vec![FLOAT_LLR_CAP; n];
    }
    let s2 = sigma * sigma;
    (0..n)
        .map(|_| {
            let noise: f64 = rng.sample(StandardNormal);
            2.0 * (1.0 + sigma * noise) / s2
        })
        .collect()
}

/// Independent generator for one frame.
pub fn frame_rng(seed: u64, point: usize, frame: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (point as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    rng.set_stream(frame);
    rng
}

#[derive(Clone, Debug)]
struct FrameResult {
    failed: bool,
    class: Option<ErrorClass>,
    union_class: Option<ErrorClass>,
}

/// Simulates the all-zero codeword over BPSK/AWGN at each Eb/N0 (dB) until
/// `target_errors` failures or `max_frames` frames. `None` in `snrs` runs a
/// noiseless point. Results do not depend on the number of worker threads.
pub fn monte_carlo(
    h: &ParityCheck,
    rate: f64,
    snrs: &[Option<f64>],
    cfg: &TrialConfig,
) -> Result<Vec<ErrorProfile>> {
    cfg.validate()?;
    if !(rate > 0.0 && rate <= 1.0) {
        return Err(Error::OutOfRange(format!("rate {rate} outside (0, 1]")));
    }
    let dec = Decoder::new(h);
    let zero = vec![0u8; h.cols()];
    let mut out = Vec::with_capacity(snrs.len());
    for (point, snr) in snrs.iter().enumerate() {
        let sigma = snr.map_or(0.0, |s| noise_sigma(s, rate));
        let mut prof = ErrorProfile {
            snr_db: snr.unwrap_or(f64::INFINITY),
            ..Default::default()
        };
        let mut next = 0u64;
        'outer: while next < cfg.max_frames && prof.n_collected < cfg.target_errors {
            let end = (next + cfg.batch as u64).min(cfg.max_frames);
            let results: Result<Vec<FrameResult>> = (next..end)
                .into_par_iter()
                .map(|f| {
                    let mut rng = frame_rng(cfg.seed, point, f);
                    let llr = channel_llrs(h.cols(), sigma, &mut rng);
                    let o = dec.decode(&llr, &zero, cfg)?;
                    let failed = !o.residual.is_empty() || !o.converged;
                    let class = match o.residual.is_empty() {
                        true => None,
                        false => Some(classify_error(&o.residual, h)?),
                    };
                    let union_class = match o.residual_union.is_empty() {
                        true => None,
                        false => Some(classify_error(&o.residual_union, h)?),
                    };
                    Ok(FrameResult {
                        failed,
                        class,
                        union_class,
                    })
                })
                .collect();
            for r in results? {
                prof.frames += 1;
                if r.failed {
                    prof.n_collected += 1;
                    tally(&mut prof.buckets, &mut prof.unclassified, r.class);
                    tally(&mut prof.union_buckets, &mut prof.union_unclassified, r.union_class);
                    if prof.n_collected >= cfg.target_errors {
                        break 'outer;
                    }
                }
            }
            next = end;
        }
        out.push(prof);
    }
    Ok(out)
}

fn tally(buckets: &mut BTreeMap<(usize, usize), u64>, other: &mut u64, c: Option<ErrorClass>) {
    match c {
        Some(c) if c.absorbing => *buckets.entry((c.a, c.b)).or_default() += 1,
        _ => *other += 1,
    }
}

/// Writes profiles as CSV after `#`-prefixed metadata lines.
pub fn write_profiles_csv<W: Write>(mut w: W, header: &[String], profiles: &[ErrorProfile]) -> Result<()> {
    for line in header {
        writeln!(w, "# {line}")?;
    }
    let mut keys: BTreeSet<(usize, usize)> = BTreeSet::new();
    for p in profiles {
        keys.extend(p.buckets.keys().copied());
        keys.extend(p.union_buckets.keys().copied());
    }
    let mut out = csv::Writer::from_writer(w);
    let mut head: Vec<String> = ["snr_db", "frames", "n_errors", "fer"].map(String::from).to_vec();
    head.extend(keys.iter().map(|(a, b)| format!("({a},{b})")));
    head.push("unclassified".into());
    head.extend(keys.iter().map(|(a, b)| format!("union ({a},{b})")));
    head.push("union unclassified".into());
    out.write_record(&head)?;
    for p in profiles {
        let mut row = vec![
            p.snr_db.to_string(),
            p.frames.to_string(),
            p.n_collected.to_string(),
            format!("{:.6e}", p.fer()),
        ];
        row.extend(keys.iter().map(|k| p.buckets.get(k).copied().unwrap_or(0).to_string()));
        row.push(p.unclassified.to_string());
        row.extend(keys.iter().map(|k| p.union_buckets.get(k).copied().unwrap_or(0).to_string()));
        row.push(p.union_unclassified.to_string());
        out.write_record(&row)?;
    }
    out.flush()?;
    Ok(())
}

/// Channel LLRs at noise level `sigma` with `support` forced to the
/// saturated wrong sign.
pub fn planted_llrs(n: usize, support: &[usize], sigma: f64, rng: &mut impl Rng) -> Vec<f64> {
    let mut llr = channel_llrs(n, sigma, rng);
    for &v in support {
        llr[v] = -FLOAT_LLR_CAP;
    }
    llr
}
