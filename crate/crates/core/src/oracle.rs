//! Brute-force absorbing-set enumeration on an explicit parity-check matrix.
//!
//! The search touches only the binary matrix. Supports grow from their
//! lowest-index variable by depth-first include/exclude branching driven by the
//! variable furthest from having a majority of checks shared with the set.

use std::collections::BTreeSet;
use std::io::Write;

use rayon::prelude::*;

use crate::ccm::Analysis;
use crate::code::{NodeLabel, ParityCheck, ScbSpec};
use crate::error::{Error, Result};
use crate::topology::{induced_topology, is_absorbing, isomorphisms, Topology};

#[derive(Clone, Copy, Debug)]
pub struct OracleOptions {
    /// Search only supports whose lowest variable has offset 0, then add every
    /// circulant shift. Exact for SCB codes.
    pub use_symmetry: bool,
    /// Maximum node expansions over the whole search.
    pub budget: u64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            use_symmetry: true,
            budget: 2_000_000_000,
        }
    }
}

/// One absorbing-set instance found by the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceRecord {
    /// Sorted variable indices.
    pub support: Vec<usize>,
    /// `(j, k)` of each support variable.
    pub labels: Vec<NodeLabel>,
    pub class: (usize, usize),
    pub topology: Option<String>,
    /// `(i, l)` of every satisfied (even-degree) check.
    pub satisfied_checks: Vec<NodeLabel>,
    /// Row label `a(i)` of each satisfied check.
    pub labeling: Vec<u32>,
}

struct Search<'a> {
    h: &'a ParityCheck,
    a: usize,
    b: usize,
    root: usize,
    in_set: Vec<bool>,
    excluded: Vec<bool>,
    count: Vec<u32>,
    set: Vec<usize>,
    /// Checks of each variable with at least two set members.
    shared: Vec<usize>,
    need: Vec<usize>,
    lambda: usize,
    expansions: u64,
    budget: u64,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn add(&mut self, v: usize) {
        self.in_set[v] = true;
        self.set.push(v);
        for &c in self.h.checks_of(v) {
            self.count[c] += 1;
            if self.count[c] == 2 {
                for &w in self.h.vars_of(c) {
                    if self.in_set[w] {
                        self.shared[w] += 1;
                    }
                }
            } else if self.count[c] > 2 {
                self.shared[v] += 1;
            }
        }
    }

    fn remove(&mut self, v: usize) {
        for &c in self.h.checks_of(v) {
            if self.count[c] == 2 {
                for &w in self.h.vars_of(c) {
                    if self.in_set[w] {
                        self.shared[w] -= 1;
                    }
                }
            } else if self.count[c] > 2 {
                self.shared[v] -= 1;
            }
            self.count[c] -= 1;
        }
        self.in_set[v] = false;
        self.set.pop();
    }

    fn available(&self, w: usize) -> bool {
        w > self.root && !self.in_set[w] && !self.excluded[w]
    }

    fn finish(&mut self) {
        let mut odd = 0;
        for &v in &self.set {
            let o = self
                .h
                .checks_of(v)
                .iter()
                .filter(|&&c| self.count[c] % 2 == 1)
                .count();
            if self.h.checks_of(v).len() - o <= o {
                return;
            }
        }
        let mut checks = BTreeSet::new();
        for &v in &self.set {
            for &c in self.h.checks_of(v) {
                if self.count[c] % 2 == 1 && checks.insert(c) {
                    odd += 1;
                }
            }
        }
        if odd == self.b {
            let mut s = self.set.clone();
            s.sort_unstable();
            self.found.push(s);
        }
    }

    fn dfs(&mut self) -> Result<()> {
        self.expansions += 1;
        if self.expansions > self.budget {
            return Err(Error::Budget {
                budget: self.budget,
            });
        }
        if self.set.len() == self.a {
            self.finish();
            return Ok(());
        }
        let remaining = self.a - self.set.len();
        let mut worst = None;
        let mut worst_def = 0;
        for &v in &self.set {
            let def = self.need[v].saturating_sub(self.shared[v]);
            if def > remaining * self.lambda {
                return Ok(());
            }
            if def > worst_def {
                worst_def = def;
                worst = Some(v);
            }
        }
        let mut cands = Vec::new();
        match worst {
            Some(v) => {
                let mut useful_checks = 0;
                for &c in self.h.checks_of(v) {
                    if self.count[c] != 1 {
                        continue;
                    }
                    let before = cands.len();
                    cands.extend(self.h.vars_of(c).iter().copied().filter(|&w| self.available(w)));
                    if cands.len() > before {
                        useful_checks += 1;
                    }
                }
                if useful_checks < worst_def {
                    return Ok(());
                }
            }
            None => {
                for &v in &self.set {
                    for &c in self.h.checks_of(v) {
                        cands.extend(self.h.vars_of(c).iter().copied().filter(|&w| self.available(w)));
                    }
                }
            }
        }
        cands.sort_unstable();
        cands.dedup();
        for &w in &cands {
            self.add(w);
            let r = self.dfs();
            self.remove(w);
            r?;
            self.excluded[w] = true;
        }
        for &w in &cands {
            self.excluded[w] = false;
        }
        Ok(())
    }
}

/// Every support of size `a` forming an `(a, b)` absorbing set in the code.
///
/// Supports are assumed connected, which holds for every absorbing set with
/// at most seven variables when each variable has degree five and the girth
/// is at least six.
pub fn enumerate_class(
    spec: &ScbSpec,
    a: usize,
    b: usize,
    opts: OracleOptions,
) -> Result<BTreeSet<Vec<usize>>> {
    let h = spec.build();
    let p = spec.p() as usize;
    let roots: Vec<usize> = if opts.use_symmetry {
        (0..spec.c()).map(|j| j * p).collect()
    } else {
        (0..h.cols()).collect()
    };
    let base = enumerate_from_roots(&h, a, b, &roots, opts.budget)?;
    if !opts.use_symmetry {
        return Ok(base);
    }
    let mut out = BTreeSet::new();
    for s in &base {
        for d in 0..p {
            let mut t: Vec<usize> = s.iter().map(|&v| v / p * p + (v % p + d) % p).collect();
            t.sort_unstable();
            out.insert(t);
        }
    }
    Ok(out)
}

/// Enumeration over an arbitrary matrix with the given root variables.
pub fn enumerate_from_roots(
    h: &ParityCheck,
    a: usize,
    b: usize,
    roots: &[usize],
    budget: u64,
) -> Result<BTreeSet<Vec<usize>>> {
    if a == 0 {
        return Ok(BTreeSet::new());
    }
    let lambda = max_shared_checks(h);
    let need: Vec<usize> = (0..h.cols()).map(|v| h.checks_of(v).len() / 2 + 1).collect();
    let per_root: Vec<Result<Vec<Vec<usize>>>> = roots
        .par_iter()
        .map(|&root| {
            let mut s = Search {
                h,
                a,
                b,
                root,
                in_set: vec![false; h.cols()],
                excluded: vec![false; h.cols()],
                count: vec![0; h.rows()],
                set: Vec::with_capacity(a),
                shared: vec![0; h.cols()],
                need: need.clone(),
                lambda,
                expansions: 0,
                budget,
                found: Vec::new(),
            };
            s.add(root);
            s.dfs()?;
            Ok(s.found)
        })
        .collect();
    let mut out = BTreeSet::new();
    for r in per_root {
        out.extend(r?);
    }
    Ok(out)
}

/// Largest number of checks shared by two distinct variables.
pub fn max_shared_checks(h: &ParityCheck) -> usize {
    let mut best = 0;
    let mut seen = vec![0usize; h.cols()];
    for v in 0..h.cols() {
        let mut touched = Vec::new();
        for &c in h.checks_of(v) {
            for &w in h.vars_of(c) {
                if w != v {
                    if seen[w] == 0 {
                        touched.push(w);
                    }
                    seen[w] += 1;
                    best = best.max(seen[w]);
                }
            }
        }
        for w in touched {
            seen[w] = 0;
        }
    }
    best
}

/// Slow reference: tests every support of size `a` directly.
pub fn enumerate_unpruned(h: &ParityCheck, a: usize, b: usize) -> Result<BTreeSet<Vec<usize>>> {
    fn rec(
        h: &ParityCheck,
        a: usize,
        b: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut BTreeSet<Vec<usize>>,
    ) -> Result<()> {
        if cur.len() == a {
            if is_absorbing(cur, h)? == Some((a, b)) {
                out.insert(cur.clone());
            }
            return Ok(());
        }
        for v in start..h.cols() {
            cur.push(v);
            rec(h, a, b, v + 1, cur, out)?;
            cur.pop();
        }
        Ok(())
    }
    let mut out = BTreeSet::new();
    rec(h, a, b, 0, &mut Vec::new(), &mut out)?;
    Ok(out)
}

/// Matches the shape induced by `support` against `catalog`.
pub fn match_topology(support: &[usize], h: &ParityCheck, catalog: &[Topology]) -> Result<Option<String>> {
    let Some((shape, _)) = induced_topology(support, h)? else {
        return Ok(None);
    };
    Ok(catalog
        .iter()
        .find(|t| !isomorphisms(t, &shape).is_empty())
        .map(|t| t.name().to_string()))
}

/// Number of distinct row-label vectors a cataloged topology receives over all
/// isomorphisms onto the shape induced by `support`.
pub fn labeled_count(support: &[usize], h: &ParityCheck, spec: &ScbSpec, t: &Topology) -> Result<usize> {
    let Some((shape, check_ids)) = induced_topology(support, h)? else {
        return Ok(0);
    };
    let mut vectors = BTreeSet::new();
    for phi in isomorphisms(t, &shape) {
        let labels: Vec<usize> = t
            .checks()
            .iter()
            .map(|c| {
                let mut img: Vec<usize> = c.iter().map(|&v| phi[v]).collect();
                img.sort_unstable();
                let pos = shape.checks().iter().position(|d| *d == img).unwrap();
                spec.check_label(check_ids[pos]).group
            })
            .collect();
        vectors.insert(labels);
    }
    Ok(vectors.len())
}

/// Builds full records for a set of supports.
pub fn records(spec: &ScbSpec, supports: &BTreeSet<Vec<usize>>, catalog: &[Topology]) -> Result<Vec<InstanceRecord>> {
    let h = spec.build();
    supports
        .iter()
        .map(|s| {
            let (degrees, odd) = crate::topology::induced_check_degrees(s, &h)?;
            let mut sat: Vec<usize> = degrees
                .iter()
                .filter(|(_, &d)| d % 2 == 0)
                .map(|(&c, _)| c)
                .collect();
            sat.sort_unstable();
            Ok(InstanceRecord {
                support: s.clone(),
                labels: s.iter().map(|&v| spec.var_label(v)).collect(),
                class: (s.len(), odd),
                topology: match_topology(s, &h, catalog)?,
                labeling: sat
                    .iter()
                    .map(|&c| spec.row_values()[spec.check_label(c).group])
                    .collect(),
                satisfied_checks: sat.into_iter().map(|c| spec.check_label(c)).collect(),
            })
        })
        .collect()
}

/// Writes records as CSV after `#`-prefixed header comments.
pub fn write_records_csv<W: Write>(mut w: W, header: &[String], recs: &[InstanceRecord]) -> Result<()> {
    for line in header {
        writeln!(w, "# {line}")?;
    }
    let pairs = |ls: &[NodeLabel]| {
        ls.iter()
            .map(|l| format!("{}:{}", l.group, l.offset))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["a", "b", "topology", "support", "satisfied_checks", "labeling"])?;
    for r in recs {
        let labeling: Vec<String> = r.labeling.iter().map(u32::to_string).collect();
        out.write_record([
            r.class.0.to_string(),
            r.class.1.to_string(),
            r.topology.clone().unwrap_or_else(|| "-".into()),
            pairs(&r.labels),
            pairs(&r.satisfied_checks),
            labeling.join(" "),
        ])?;
    }
    out.flush()?;
    Ok(())
}

/// Outcome of comparing the CCM pipeline with the oracle for one topology.
#[derive(Clone, Debug)]
pub struct CrossValidation {
    pub ccm_supports: BTreeSet<Vec<usize>>,
    pub oracle_supports: BTreeSet<Vec<usize>>,
}

impl CrossValidation {
    pub fn agree(&self) -> bool {
        self.ccm_supports == self.oracle_supports
    }
}

/// Compares exact instances from the CCM pipeline with oracle instances whose
/// induced shape is the topology.
pub fn cross_validate(spec: &ScbSpec, t: &Topology, opts: OracleOptions) -> Result<CrossValidation> {
    let ccm_supports = Analysis::new(t)?.instances(spec)?;
    let h = spec.build();
    let all = enumerate_class(spec, t.a(), t.b(), opts)?;
    let mut oracle_supports = BTreeSet::new();
    for s in all {
        if let Some((shape, _)) = induced_topology(&s, &h)? {
            if !isomorphisms(t, &shape).is_empty() {
                oracle_supports.insert(s);
            }
        }
    }
    Ok(CrossValidation {
        ccm_supports,
        oracle_supports,
    })
}
