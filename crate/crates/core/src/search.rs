//! Row-selection scans, Tanner-construction checks and small solution-set
//! enumerations.

use std::io::Write;

use rayon::prelude::*;

use crate::ccm::{bit_consistent, Analysis, Verdict};
use crate::closed_form::{as48_assignment2, as59_pattern, ClosedForm};
use crate::code::ScbSpec;
use crate::error::{Error, Result};
use crate::gfp::{check_prime, inverse, is_prime, reduce};
use crate::topology::{as48, as59};

/// What to do with a row selection lacking the labels 0 and 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RsfPolicy {
    #[default]
    Reject,
    /// Map `x -> (x - a0) / (a1 - a0)` using the two smallest labels, then sort.
    Normalize,
}

/// Sorted row selection containing 0 and 1, or an error / normalized copy.
pub fn normalize_rsf(rsf: &[u32], p: u32, policy: RsfPolicy) -> Result<Vec<u32>> {
    check_prime(p)?;
    let mut s: Vec<u32> = rsf.iter().map(|&x| x % p).collect();
    s.sort_unstable();
    s.dedup();
    if s.len() != rsf.len() {
        return Err(Error::Spec(format!("row labels {rsf:?} not distinct mod {p}")));
    }
    if s.len() < 2 {
        return Err(Error::Spec("need at least two row labels".into()));
    }
    if s[0] == 0 && s[1] == 1 {
        return Ok(s);
    }
    match policy {
        RsfPolicy::Reject => Err(Error::Spec(format!(
            "row selection {rsf:?} must contain 0 and 1"
        ))),
        RsfPolicy::Normalize => {
            let a0 = s[0] as i64;
            let inv = inverse(reduce(s[1] as i64 - a0, p), p) as i64;
            let mut out: Vec<u32> = s
                .iter()
                .map(|&x| reduce((x as i64 - a0) * inv, p))
                .collect();
            out.sort_unstable();
            Ok(out)
        }
    }
}

/// Verdicts of every topology at every scanned prime.
#[derive(Clone, Debug)]
pub struct RsfReport {
    pub rsf: Vec<u32>,
    pub topologies: Vec<String>,
    /// `(prime, verdict per topology)` in ascending prime order.
    pub rows: Vec<(u32, Vec<Verdict>)>,
}

impl RsfReport {
    /// Primes at which `topology` was not eliminated.
    pub fn failing_primes(&self, topology: &str) -> Vec<u32> {
        let Some(k) = self.topologies.iter().position(|t| t == topology) else {
            return Vec::new();
        };
        self.rows
            .iter()
            .filter(|(_, v)| v[k] != Verdict::Absent)
            .map(|(p, _)| *p)
            .collect()
    }

    /// Primes at which every topology was eliminated.
    pub fn clean_primes(&self) -> Vec<u32> {
        self.rows
            .iter()
            .filter(|(_, v)| v.iter().all(|&x| x == Verdict::Absent))
            .map(|(p, _)| *p)
            .collect()
    }

    pub fn largest_failing_prime(&self) -> Option<u32> {
        self.rows
            .iter()
            .filter(|(_, v)| v.iter().any(|&x| x != Verdict::Absent))
            .map(|(p, _)| *p)
            .max()
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["rsf", "prime", "topology", "verdict"])?;
        let rsf = label_list(&self.rsf);
        for (p, verdicts) in &self.rows {
            for (t, v) in self.topologies.iter().zip(verdicts) {
                out.write_record([rsf.as_str(), &p.to_string(), t, verdict_name(*v)])?;
            }
        }
        out.flush()?;
        Ok(())
    }
}

pub fn label_list(labels: &[u32]) -> String {
    let s: Vec<String> = labels.iter().map(u32::to_string).collect();
    s.join(" ")
}

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Present => "present",
        Verdict::NecessaryOnly => "necessary-only",
        Verdict::Absent => "eliminated",
    }
}

/// Runs the existence test for each prime and topology. Primes are processed
/// in parallel; rows come back in ascending order.
pub fn scan_rsf(rsf: &[u32], primes: &[u32], analyses: &[Analysis], policy: RsfPolicy) -> Result<RsfReport> {
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    let rows: Result<Vec<(u32, Vec<Verdict>)>> = primes
        .par_iter()
        .map(|&p| {
            let labels = normalize_rsf(rsf, p, policy)?;
            let spec = ScbSpec::selected_rows(p, labels)?;
            let v = analyses
                .iter()
                .map(|a| Ok(a.exists_in_code(&spec)?.verdict()))
                .collect::<Result<Vec<_>>>()?;
            Ok((p, v))
        })
        .collect();
    Ok(RsfReport {
        rsf: rsf.to_vec(),
        topologies: analyses.iter().map(|a| a.topology().name().to_string()).collect(),
        rows: rows?,
    })
}

/// Every `[0, 1, a, b, c]` with `1 < a < b < c < p` eliminating all `analyses`
/// at `p`, in lexicographic order. Topologies are tried in the given order and
/// a candidate is dropped at its first survivor.
pub fn find_rsfs(p: u32, analyses: &[Analysis]) -> Result<Vec<Vec<u32>>> {
    check_prime(p)?;
    if p <= 5 {
        return Err(Error::Spec(format!("p = {p} leaves no room for five labels")));
    }
    let mut cands = Vec::new();
    for a in 2..p {
        for b in a + 1..p {
            for c in b + 1..p {
                cands.push(vec![0, 1, a, b, c]);
            }
        }
    }
    let keep: Result<Vec<bool>> = cands
        .par_iter()
        .map(|rsf| {
            let spec = ScbSpec::selected_rows(p, rsf.clone())?;
            for a in analyses {
                if a.exists_in_code(&spec)?.verdict() != Verdict::Absent {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect();
    Ok(cands
        .into_iter()
        .zip(keep?)
        .filter_map(|(c, k)| k.then_some(c))
        .collect())
}

/// A quasi-cyclic code whose exponents are `m(i) Y(j)` with `m` and `Y` the
/// cyclic groups generated by `row_generator` and `col_generator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TannerSpec {
    p: u32,
    rows: Vec<u32>,
    cols: Vec<u32>,
}

impl TannerSpec {
    /// `r` and `c` must be the multiplicative orders of the generators.
    pub fn new(p: u32, row_generator: u32, r: usize, col_generator: u32, c: usize) -> Result<Self> {
        check_prime(p)?;
        let rows = cyclic_group(row_generator, r, p)?;
        let cols = cyclic_group(col_generator, c, p)?;
        Ok(TannerSpec { p, rows, cols })
    }

    /// Explicit exponent sets; each must be a multiplicative subgroup mod `p`.
    pub fn from_sets(p: u32, rows: Vec<u32>, cols: Vec<u32>) -> Result<Self> {
        check_prime(p)?;
        for (what, s) in [("row", &rows), ("column", &cols)] {
            if s.iter().any(|&x| x == 0 || x >= p) {
                return Err(Error::Spec(format!("{what} exponents must lie in [1, {p})")));
            }
            for &x in s.iter() {
                for &y in s.iter() {
                    if !s.contains(&((x as u64 * y as u64 % p as u64) as u32)) {
                        return Err(Error::Spec(format!("{what} exponents {s:?} not closed")));
                    }
                }
            }
        }
        Ok(TannerSpec { p, rows, cols })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn row_exponents(&self) -> &[u32] {
        &self.rows
    }

    pub fn column_exponents(&self) -> &[u32] {
        &self.cols
    }

    pub fn to_scb(&self) -> Result<ScbSpec> {
        ScbSpec::new(self.p, self.rows.clone(), self.cols.clone())
    }
}

fn cyclic_group(g: u32, order: usize, p: u32) -> Result<Vec<u32>> {
    if g == 0 || g >= p {
        return Err(Error::Spec(format!("generator {g} outside [1, {p})")));
    }
    let mut out = Vec::with_capacity(order);
    let mut x = 1u64;
    for _ in 0..order {
        out.push(x as u32);
        x = x * g as u64 % p as u64;
    }
    let mut sorted = out.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if x != 1 || sorted.len() != order {
        return Err(Error::Spec(format!("{g} does not have order {order} mod {p}")));
    }
    Ok(out)
}

/// True if some labeling's CCM null space meets the allowed column tuples.
pub fn tanner_absorbing_check(t: &TannerSpec, analysis: &Analysis) -> Result<bool> {
    analysis.necessary_conditions_hold(&t.to_scb()?)
}

/// Zeros of a determinant polynomial over 5-tuples of labels from `{0..4}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSets {
    /// Tuples where the integer polynomial vanishes.
    pub integer: Vec<[u32; 5]>,
    /// Tuples where it vanishes mod `p` only.
    pub modular: Vec<[u32; 5]>,
}

/// Scans label tuples accepted by `admissible` and sorts zeros of `eval`.
pub fn solution_sets(
    p: u32,
    admissible: impl Fn([i64; 5]) -> bool,
    eval: impl Fn([i64; 5]) -> Result<i128>,
) -> Result<SolutionSets> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let mut out = SolutionSets {
        integer: Vec::new(),
        modular: Vec::new(),
    };
    for code in 0..5u32.pow(5) {
        let mut t = [0u32; 5];
        let mut c = code;
        for k in (0..5).rev() {
            t[k] = c % 5;
            c /= 5;
        }
        let s = t.map(|x| x as i64);
        if !admissible(s) {
            continue;
        }
        let v = eval(s)?;
        if v == 0 {
            out.integer.push(t);
        } else if v.rem_euclid(p as i128) == 0 {
            out.modular.push(t);
        }
    }
    Ok(out)
}

/// Solution sets of the (4,8) assignment-2 determinant. Labels must be
/// pairwise distinct, matching the five-symbol reading of the assignment.
pub fn solution_sets_48_assignment2(p: u32) -> Result<SolutionSets> {
    solution_sets_48_assignment2_with(p, |s| ClosedForm::As48A2.eval(&s))
}

/// As [`solution_sets_48_assignment2`] with a caller-supplied evaluator.
pub fn solution_sets_48_assignment2_with(
    p: u32,
    eval: impl Fn([i64; 5]) -> Result<i128>,
) -> Result<SolutionSets> {
    let t = as48();
    solution_sets(
        p,
        |[x, y, z, w, u]| distinct(&[x, y, z, w, u]) && bit_consistent(&t, &as48_assignment2(x, y, z, w, u)),
        eval,
    )
}

/// Solution sets of the (5,9) determinant under label pattern `pattern`.
pub fn solution_sets_59(p: u32, pattern: usize) -> Result<SolutionSets> {
    let t = as59();
    if as59_pattern(pattern, [0; 5]).is_none() {
        return Err(Error::Labeling(format!("no (5,9) pattern {pattern}")));
    }
    solution_sets(
        p,
        |s| distinct(&s) && bit_consistent(&t, &as59_pattern(pattern, s).unwrap()),
        |s| ClosedForm::As59.eval(&as59_pattern(pattern, s).unwrap()),
    )
}

fn distinct(s: &[i64]) -> bool {
    (0..s.len()).all(|i| (i + 1..s.len()).all(|j| s[i] != s[j]))
}
