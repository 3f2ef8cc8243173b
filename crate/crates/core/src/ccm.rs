//! Cycle consistency matrices, check labelings and absorbing-set existence.
//!
//! Placing a topology in an SCB code assigns each variable a column value `β`
//! and offset `k`, and each satisfied check a row value `a`. A check with row
//! value `a` joining `s` and `t` forces `k_t = k_s + a (β_s - β_t)`, so around
//! any closed walk the label differences weighted by `β` must cancel. Writing
//! `u_m = β_m - β_0`, each cycle gives one linear row over GF(p): the CCM.

use std::collections::{BTreeSet, HashMap};

use crate::code::{NodeLabel, ScbSpec};
use crate::error::{Error, Result};
use crate::gfp::{primes_in, FieldMatrix, NullBasis};
use crate::topology::{is_extensible, Automorphism, Cycle, Topology, VnGraph};

/// Row-group index (into the row selection) for each satisfied check, by check id.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CheckLabeling {
    pub rows: Vec<usize>,
}

impl CheckLabeling {
    pub fn new(rows: Vec<usize>) -> Self {
        CheckLabeling { rows }
    }

    /// Row values under a row selection.
    pub fn values(&self, rsf: &[u32]) -> Vec<i64> {
        self.rows.iter().map(|&i| rsf[i] as i64).collect()
    }
}

/// True when the labels of the checks at every variable are pairwise distinct.
pub fn bit_consistent<T: PartialEq>(t: &Topology, labels: &[T]) -> bool {
    (0..t.n_vars()).all(|v| {
        let at: Vec<&T> = t
            .checks()
            .iter()
            .zip(labels)
            .filter(|(c, _)| c.contains(&v))
            .map(|(_, l)| l)
            .collect();
        (0..at.len()).all(|i| (i + 1..at.len()).all(|j| at[i] != at[j]))
    })
}

/// A cycle consistency matrix with the cycle basis and labeling behind it.
#[derive(Clone, Debug)]
pub struct Ccm {
    pub matrix: FieldMatrix,
    pub cycles: Vec<Cycle>,
    pub labeling: CheckLabeling,
}

/// Integer CCM rows for given check values: for each cycle and each traversed
/// vertex `m > 0`, adds (entering label - leaving label) to column `m - 1`.
pub fn ccm_rows(graph: &VnGraph, cycles: &[Cycle], values: &[i64]) -> Vec<Vec<i64>> {
    let cols = graph.n().saturating_sub(1);
    cycles
        .iter()
        .map(|cy| {
            let mut row = vec![0i64; cols];
            let len = cy.vertices.len();
            for m in 0..len {
                let v = cy.vertices[m];
                if v == 0 {
                    continue;
                }
                let e_in = cy.edges[(m + len - 1) % len];
                let e_out = cy.edges[m];
                row[v - 1] += values[graph.check_id(e_in)] - values[graph.check_id(e_out)];
            }
            row
        })
        .collect()
}

/// Builds the CCM of a labeled topology over GF(p). Checks of degree above two
/// contribute the star edges of the constraint graph.
pub fn build_ccm(t: &Topology, lab: &CheckLabeling, rsf: &[u32], p: u32) -> Result<Ccm> {
    if lab.rows.len() != t.checks().len() {
        return Err(Error::Labeling(format!(
            "{} labels for {} checks",
            lab.rows.len(),
            t.checks().len()
        )));
    }
    if let Some(&i) = lab.rows.iter().find(|&&i| i >= rsf.len()) {
        return Err(Error::Labeling(format!("row index {i} outside selection")));
    }
    let values = lab.values(rsf);
    if !bit_consistent(t, &values) {
        return Err(Error::Labeling(
            "two checks at one variable share a row label".into(),
        ));
    }
    let graph = t.constraint_graph();
    let cycles = graph.fundamental_cycles();
    let rows = ccm_rows(&graph, &cycles, &values);
    let matrix = if rows.is_empty() {
        FieldMatrix::zeros(0, t.n_vars() - 1, p)?
    } else {
        FieldMatrix::from_rows(&rows, p)?
    };
    Ok(Ccm {
        matrix,
        cycles,
        labeling: lab.clone(),
    })
}

/// Every bit-consistent assignment of row indices `0..r` to the checks.
pub fn all_labelings(t: &Topology, r: usize) -> Vec<Vec<usize>> {
    let checks_at: Vec<Vec<usize>> = (0..t.n_vars()).map(|v| t.checks_at(v)).collect();
    let q = t.checks().len();
    let mut out = Vec::new();
    let mut cur = vec![usize::MAX; q];
    fn rec(
        idx: usize,
        t: &Topology,
        r: usize,
        checks_at: &[Vec<usize>],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if idx == cur.len() {
            out.push(cur.clone());
            return;
        }
        'label: for l in 0..r {
            for &v in &t.checks()[idx] {
                if checks_at[v].iter().any(|&c| c < idx && cur[c] == l) {
                    continue 'label;
                }
            }
            cur[idx] = l;
            rec(idx + 1, t, r, checks_at, cur, out);
        }
        cur[idx] = usize::MAX;
    }
    rec(0, t, r, &checks_at, &mut cur, &mut out);
    out
}

/// Relabels values by order of first appearance.
fn first_appearance(labels: &[usize]) -> Vec<usize> {
    let mut map: HashMap<usize, usize> = HashMap::new();
    labels
        .iter()
        .map(|l| {
            let next = map.len();
            *map.entry(*l).or_insert(next)
        })
        .collect()
}

fn permute_labels(aut: &Automorphism, labels: &[usize]) -> Vec<usize> {
    let mut out = vec![0; labels.len()];
    for (c, &l) in labels.iter().enumerate() {
        out[aut.checks[c]] = l;
    }
    out
}

/// Canonical representative under topology automorphisms and renaming of labels.
pub fn canonical_pattern(auts: &[Automorphism], labels: &[usize]) -> Vec<usize> {
    auts.iter()
        .map(|a| first_appearance(&permute_labels(a, labels)))
        .min()
        .unwrap_or_else(|| first_appearance(labels))
}

/// Canonical representative under topology automorphisms only.
pub fn canonical_labeling(auts: &[Automorphism], labels: &[usize]) -> Vec<usize> {
    auts.iter()
        .map(|a| permute_labels(a, labels))
        .min()
        .unwrap_or_else(|| labels.to_vec())
}

/// Bit-consistent label patterns up to topology automorphisms and label
/// renaming, without any feasibility filter.
pub fn label_patterns(t: &Topology, r: usize) -> Vec<CheckLabeling> {
    let auts = t.automorphisms();
    let set: BTreeSet<Vec<usize>> = all_labelings(t, r)
        .iter()
        .map(|l| canonical_pattern(&auts, l))
        .collect();
    set.into_iter().map(CheckLabeling::new).collect()
}

/// Non-isomorphic bit-consistent labelings with row values from `rsf`.
///
/// Patterns are orbits under topology automorphisms and label renaming. A
/// pattern is kept only if, for some prime in `[7, 97]` above the largest label
/// and some injective assignment of `rsf` values to its classes, the CCM has a
/// null vector separating every pair of variables that share a check.
pub fn enumerate_labelings(t: &Topology, rsf: &[u32]) -> Result<Vec<CheckLabeling>> {
    let max = rsf.iter().copied().max().unwrap_or(0);
    let primes: Vec<u32> = primes_in(7.max(max + 1), 97.max(max + 1));
    let graph = t.constraint_graph();
    let cycles = graph.fundamental_cycles();
    let pairs = adjacent_pairs(t);
    let mut out = Vec::new();
    for pattern in label_patterns(t, rsf.len()) {
        let classes = pattern.rows.iter().max().map_or(0, |m| m + 1);
        let mut feasible = false;
        for assign in injections(classes, rsf.len()) {
            let values: Vec<i64> = pattern.rows.iter().map(|&c| rsf[assign[c]] as i64).collect();
            let rows = ccm_rows(&graph, &cycles, &values);
            for &p in &primes {
                let m = FieldMatrix::from_rows(&rows, p)?;
                let basis = m.null_space();
                if has_separating_vector(&basis, &pairs, p)? {
                    feasible = true;
                    break;
                }
            }
            if feasible {
                break;
            }
        }
        if feasible {
            out.push(pattern);
        }
    }
    Ok(out)
}

/// Injective maps `0..k -> 0..n` as vectors.
fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; n];
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(k, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(k, &mut cur, &mut used, &mut out);
    out
}

/// Pairs of variables joined by a satisfied check.
pub fn adjacent_pairs(t: &Topology) -> Vec<(usize, usize)> {
    let mut pairs = BTreeSet::new();
    for c in t.checks() {
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                pairs.insert((c[i], c[j]));
            }
        }
    }
    pairs.into_iter().collect()
}

/// `u` extended with `u_0 = 0`.
fn coordinate(u: &[u32], v: usize) -> u32 {
    if v == 0 {
        0
    } else {
        u[v - 1]
    }
}

fn has_separating_vector(basis: &NullBasis, pairs: &[(usize, usize)], p: u32) -> Result<bool> {
    let mut found = false;
    for_each_vector(basis, p, false, 1 << 22, &mut |u| {
        if pairs.iter().all(|&(s, t)| coordinate(u, s) != coordinate(u, t)) {
            found = true;
            return false;
        }
        true
    })?;
    Ok(found)
}

/// Calls `f` on nonzero vectors of the null space: every one, or one per
/// projective point (leading coefficient 1). `f` returns false to stop.
fn for_each_vector(
    basis: &NullBasis,
    p: u32,
    projective: bool,
    budget: u64,
    f: &mut dyn FnMut(&[u32]) -> bool,
) -> Result<()> {
    let d = basis.dimension();
    if d == 0 {
        return Ok(());
    }
    let total = (p as u64).checked_pow(d as u32).unwrap_or(u64::MAX);
    if total > budget {
        return Err(Error::Budget { budget });
    }
    let mut coeffs = vec![0u32; d];
    for lead in 0..d {
        if projective {
            coeffs.iter_mut().for_each(|c| *c = 0);
            coeffs[lead] = 1;
        } else if lead > 0 {
            break;
        }
        let free_from = if projective { lead + 1 } else { 0 };
        loop {
            if coeffs.iter().any(|&c| c != 0) && !f(&basis.combine(&coeffs)) {
                return Ok(());
            }
            // odometer over coordinates free_from..d
            let mut i = free_from;
            loop {
                if i == d {
                    break;
                }
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
    }
    Ok(())
}

/// A concrete placement of a topology in a code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExistenceWitness {
    pub labeling: CheckLabeling,
    /// `u_m = β_m - β_0` for `m = 1..n`.
    pub u: Vec<u32>,
    /// Column-group index `j` of each variable.
    pub columns: Vec<usize>,
    /// Offset `k` of each variable.
    pub offsets: Vec<u32>,
    /// `(i, l)` of each satisfied check.
    pub checks: Vec<NodeLabel>,
    /// Variable indices `j p + k`, in topology vertex order.
    pub support: Vec<usize>,
}

/// How far the existence test got.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// An exact instance was constructed.
    Present,
    /// Some labeling passes the rank and consistency conditions, but every
    /// placement acquires extra check coincidences, so no instance has exactly
    /// this shape.
    NecessaryOnly,
    /// No labeling passes the necessary conditions.
    Absent,
}

#[derive(Clone, Debug)]
pub struct Existence {
    pub witness: Option<ExistenceWitness>,
    /// Orbit representatives examined (stops at the first witness).
    pub labelings_tested: usize,
    /// Representatives whose CCM lacks full column rank.
    pub rank_deficient: usize,
    /// Representatives with a null vector giving consistent in-range columns.
    pub consistent: usize,
    pub extensible: bool,
}

impl Existence {
    pub fn verdict(&self) -> Verdict {
        if self.witness.is_some() {
            Verdict::Present
        } else if self.consistent > 0 {
            Verdict::NecessaryOnly
        } else {
            Verdict::Absent
        }
    }

    pub fn present(&self) -> bool {
        self.witness.is_some()
    }
}

/// Per-topology data reused across codes: cycle basis, spanning tree,
/// labelings and their automorphism classes.
#[derive(Clone, Debug)]
pub struct Analysis {
    topology: Topology,
    r: usize,
    graph: VnGraph,
    cycles: Vec<Cycle>,
    /// `(check id, from, to)` in BFS order from variable 0.
    tree: Vec<(usize, usize, usize)>,
    pairs: Vec<(usize, usize)>,
    labelings: Vec<Vec<usize>>,
    reps: Vec<usize>,
    extensible: bool,
}

/// Hard cap on null-space vectors visited per labeling.
const VECTOR_BUDGET: u64 = 1 << 24;

impl Analysis {
    pub fn new(t: &Topology) -> Result<Self> {
        let r = t.degree_budget().ok_or_else(|| {
            Error::Topology(format!("{}: variables have different degrees", t.name()))
        })?;
        let graph = t.constraint_graph();
        if graph.components() != 1 {
            return Err(Error::Topology(format!("{}: not connected", t.name())));
        }
        let cycles = graph.fundamental_cycles();
        let (parent_edge, depth) = graph.spanning_forest();
        let mut order: Vec<usize> = (1..t.n_vars()).collect();
        order.sort_by_key(|&v| depth[v]);
        let tree = order
            .iter()
            .map(|&v| {
                let e = parent_edge[v].expect("connected");
                let (a, b) = graph.edges()[e];
                let from = if a == v { b } else { a };
                (graph.check_id(e), from, v)
            })
            .collect();
        let auts = t.automorphisms();
        let labelings = all_labelings(t, r);
        let mut seen = BTreeSet::new();
        let mut reps = Vec::new();
        for (i, l) in labelings.iter().enumerate() {
            if seen.insert(canonical_labeling(&auts, l)) {
                reps.push(i);
            }
        }
        let extensible = if t.is_degree2() {
            is_extensible(t, 6)?
        } else {
            false
        };
        Ok(Analysis {
            topology: t.clone(),
            r,
            graph,
            cycles,
            tree,
            pairs: adjacent_pairs(t),
            labelings,
            reps,
            extensible,
        })
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    /// All bit-consistent row-index labelings.
    pub fn labelings(&self) -> &[Vec<usize>] {
        &self.labelings
    }

    /// One labeling per automorphism class.
    pub fn representatives(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.reps.iter().map(|&i| &self.labelings[i])
    }

    fn check_spec(&self, spec: &ScbSpec) -> Result<()> {
        if spec.r() != self.r {
            return Err(Error::Spec(format!(
                "code has {} row groups, topology {} needs {}",
                spec.r(),
                self.topology.name(),
                self.r
            )));
        }
        Ok(())
    }

    /// Integer CCM for the given check values.
    pub fn ccm_rows(&self, values: &[i64]) -> Vec<Vec<i64>> {
        ccm_rows(&self.graph, &self.cycles, values)
    }

    fn null_basis(&self, values: &[i64], p: u32) -> Result<NullBasis> {
        let rows = self.ccm_rows(values);
        if rows.is_empty() {
            return Ok(FieldMatrix::zeros(0, self.topology.n_vars() - 1, p)?.null_space());
        }
        Ok(FieldMatrix::from_rows(&rows, p)?.null_space())
    }

    /// True if the CCM for `values` has a null vector giving distinct column
    /// values to every pair of variables sharing a check.
    pub fn separated_null_vector(&self, values: &[i64], p: u32) -> Result<bool> {
        let basis = self.null_basis(values, p)?;
        let n = self.topology.n_vars();
        let mut beta = vec![0u32; n];
        let mut hit = false;
        for_each_vector(&basis, p, true, VECTOR_BUDGET, &mut |u| {
            for v in 0..n {
                beta[v] = coordinate(u, v);
            }
            hit = self.separated(&beta);
            !hit
        })?;
        Ok(hit)
    }

    /// Null space of the CCM for `values` over `GF(p)`.
    pub fn null_space(&self, values: &[i64], p: u32) -> Result<NullBasis> {
        self.null_basis(values, p)
    }

    /// Column values `β` are consistent if variables sharing a check differ.
    fn separated(&self, beta: &[u32]) -> bool {
        self.pairs.iter().all(|&(s, t)| beta[s] != beta[t])
    }

    /// Completes column values into a placement; returns it only if the
    /// induced structure in the code is exactly this topology.
    fn realize(
        &self,
        spec: &ScbSpec,
        col_pos: &[Option<usize>],
        lab: &[usize],
        beta: &[u32],
        k0: u32,
    ) -> Option<ExistenceWitness> {
        let p = spec.p() as i64;
        let n = self.topology.n_vars();
        let rsf = spec.row_values();
        let mut columns = Vec::with_capacity(n);
        for &b in beta {
            columns.push(col_pos[b as usize]?);
        }
        let mut k = vec![0i64; n];
        k[0] = k0 as i64;
        for &(c, from, to) in &self.tree {
            let a = rsf[lab[c]] as i64;
            k[to] = (k[from] + a * (beta[from] as i64 - beta[to] as i64)).rem_euclid(p);
        }
        let mut placements = Vec::with_capacity(lab.len());
        for (c, vars) in self.topology.checks().iter().enumerate() {
            let a = rsf[lab[c]] as i64;
            let l = |v: usize| (k[v] + a * beta[v] as i64).rem_euclid(p);
            let l0 = l(vars[0]);
            if vars.iter().any(|&v| l(v) != l0) {
                return None;
            }
            placements.push(NodeLabel::new(lab[c], l0 as u32));
        }
        let mut support: Vec<usize> = (0..n)
            .map(|v| columns[v] * p as usize + k[v] as usize)
            .collect();
        let mut sorted = support.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != n {
            return None;
        }
        let mut all_checks = Vec::with_capacity(n * self.r);
        for v in 0..n {
            for (i, &a) in rsf.iter().enumerate() {
                let l = (k[v] + a as i64 * beta[v] as i64).rem_euclid(p);
                all_checks.push(i as i64 * p + l);
            }
        }
        all_checks.sort_unstable();
        all_checks.dedup();
        if all_checks.len() != self.topology.checks().len() + self.topology.b() {
            return None;
        }
        support.shrink_to_fit();
        Some(ExistenceWitness {
            labeling: CheckLabeling::new(lab.to_vec()),
            u: (1..n)
                .map(|v| (beta[v] as i64 - beta[0] as i64).rem_euclid(p) as u32)
                .collect(),
            columns,
            offsets: k.iter().map(|&x| x as u32).collect(),
            checks: placements,
            support,
        })
    }

    /// Existence test with exact instance construction.
    ///
    /// For each labeling class, nonzero null vectors `u` of the CCM give column
    /// values; those separating adjacent variables and lying in the column
    /// selection are completed to offsets and accepted only if the placement
    /// has no coincidences beyond the topology. With every column present, the
    /// code is invariant under `β -> β + c` and `β -> λβ`, so `β_0 = 0` and one
    /// vector per projective point suffice.
    pub fn exists_in_code(&self, spec: &ScbSpec) -> Result<Existence> {
        self.check_spec(spec)?;
        let p = spec.p();
        let col_pos = column_positions(spec);
        let full = spec.full_columns();
        let mut report = Existence {
            witness: None,
            labelings_tested: 0,
            rank_deficient: 0,
            consistent: 0,
            extensible: self.extensible,
        };
        let n = self.topology.n_vars();
        for lab in self.representatives() {
            report.labelings_tested += 1;
            let values: Vec<i64> = lab.iter().map(|&i| spec.row_values()[i] as i64).collect();
            let basis = self.null_basis(&values, p)?;
            if basis.dimension() == 0 {
                continue;
            }
            report.rank_deficient += 1;
            let mut any_consistent = false;
            let mut witness = None;
            let mut beta = vec![0u32; n];
            let starts: Vec<u32> = if full { vec![0] } else { spec.col_values().to_vec() };
            for_each_vector(&basis, p, full, VECTOR_BUDGET, &mut |u| {
                for &j0 in &starts {
                    for v in 0..n {
                        beta[v] = (j0 + coordinate(u, v)) % p;
                    }
                    if !self.separated(&beta) || beta.iter().any(|&b| col_pos[b as usize].is_none())
                    {
                        continue;
                    }
                    any_consistent = true;
                    if let Some(w) = self.realize(spec, &col_pos, lab, &beta, 0) {
                        witness = Some(w);
                        return false;
                    }
                }
                true
            })?;
            if any_consistent {
                report.consistent += 1;
            }
            if witness.is_some() {
                report.witness = witness;
                return Ok(report);
            }
        }
        Ok(report)
    }

    /// True if some labeling class admits a CCM null vector whose column values
    /// separate adjacent variables and lie in the column selection.
    pub fn necessary_conditions_hold(&self, spec: &ScbSpec) -> Result<bool> {
        self.check_spec(spec)?;
        let p = spec.p();
        let col_pos = column_positions(spec);
        let n = self.topology.n_vars();
        let mut beta = vec![0u32; n];
        for lab in self.representatives() {
            let values: Vec<i64> = lab.iter().map(|&i| spec.row_values()[i] as i64).collect();
            let basis = self.null_basis(&values, p)?;
            let mut hit = false;
            for_each_vector(&basis, p, false, VECTOR_BUDGET, &mut |u| {
                for &j0 in spec.col_values() {
                    for v in 0..n {
                        beta[v] = (j0 + coordinate(u, v)) % p;
                    }
                    if self.separated(&beta) && beta.iter().all(|&b| col_pos[b as usize].is_some()) {
                        hit = true;
                        return false;
                    }
                }
                true
            })?;
            if hit {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Every support (sorted variable indices) of an exact instance in the code.
    ///
    /// Instances are built with `k_0 = 0` and, when all columns are present,
    /// `β_0 = 0`; the rest follow from the shift symmetries of the code.
    pub fn instances(&self, spec: &ScbSpec) -> Result<BTreeSet<Vec<usize>>> {
        self.check_spec(spec)?;
        let p = spec.p();
        let col_pos = column_positions(spec);
        let full = spec.full_columns();
        let n = self.topology.n_vars();
        let mut base: BTreeSet<(Vec<u32>, Vec<u32>)> = BTreeSet::new();
        let starts: Vec<u32> = if full { vec![0] } else { spec.col_values().to_vec() };
        let mut beta = vec![0u32; n];
        for lab in self.representatives() {
            let values: Vec<i64> = lab.iter().map(|&i| spec.row_values()[i] as i64).collect();
            let basis = self.null_basis(&values, p)?;
            for_each_vector(&basis, p, false, VECTOR_BUDGET, &mut |u| {
                for &j0 in &starts {
                    for v in 0..n {
                        beta[v] = (j0 + coordinate(u, v)) % p;
                    }
                    if !self.separated(&beta) || beta.iter().any(|&b| col_pos[b as usize].is_none())
                    {
                        continue;
                    }
                    if let Some(w) = self.realize(spec, &col_pos, lab, &beta, 0) {
                        base.insert((beta.clone(), w.offsets));
                    }
                }
                true
            })?;
        }
        let shifts: Vec<u32> = if full { (0..p).collect() } else { vec![0] };
        let mut out = BTreeSet::new();
        for (beta, k) in &base {
            for &c in &shifts {
                for d in 0..p {
                    let mut s: Vec<usize> = (0..n)
                        .map(|v| {
                            let b = (beta[v] + c) % p;
                            col_pos[b as usize].expect("shift stays in range") * p as usize
                                + ((k[v] + d) % p) as usize
                        })
                        .collect();
                    s.sort_unstable();
                    out.insert(s);
                }
            }
        }
        Ok(out)
    }
}

fn column_positions(spec: &ScbSpec) -> Vec<Option<usize>> {
    let mut pos = vec![None; spec.p() as usize];
    for (j, &b) in spec.col_values().iter().enumerate() {
        pos[b as usize] = Some(j);
    }
    pos
}

/// Existence test for a topology in a code; see [`Analysis::exists_in_code`].
pub fn exists_in_code(t: &Topology, spec: &ScbSpec) -> Result<Existence> {
    Analysis::new(t)?.exists_in_code(spec)
}

/// Integer determinant by fraction-free elimination.
pub fn int_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * a[n - 1][n - 1]
    }
}

/// Determinant mod `p` of the CCM of each complete-graph-on-four sub-structure
/// `quad` (four variables pairwise sharing a check) under the given values.
pub fn quad_det(t: &Topology, quad: [usize; 4], values: &[i64], p: u32) -> Result<u32> {
    let mut checks = Vec::new();
    let mut vals = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let c = t
                .checks()
                .iter()
                .position(|c| c.contains(&quad[i]) && c.contains(&quad[j]))
                .ok_or_else(|| Error::Topology("sub-structure is not complete".into()))?;
            checks.push((i, j));
            vals.push(values[c]);
        }
    }
    let g = VnGraph::new(4, checks);
    let rows = ccm_rows(&g, &g.fundamental_cycles(), &vals);
    FieldMatrix::from_rows(&rows, p)?.det()
}

/// Sets of four variables in `t` that pairwise share a satisfied check.
pub fn complete_quads(t: &Topology) -> Vec<[usize; 4]> {
    let n = t.n_vars();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [a, b, c, d];
                    if (0..4).all(|i| (i + 1..4).all(|j| t.share_check(q[i], q[j]))) {
                        out.push(q);
                    }
                }
            }
        }
    }
    out
}

/// True if some bit-consistent labeling with the code's row values makes the
/// CCMs of all embedded four-variable complete sub-structures singular.
fn quads_vanish_together(t: &Topology, spec: &ScbSpec) -> Result<bool> {
    if spec.r() != 5 {
        return Err(Error::Spec(format!("expected 5 row groups, got {}", spec.r())));
    }
    let quads = complete_quads(t);
    let analysis = Analysis::new(t)?;
    for lab in analysis.representatives() {
        let values: Vec<i64> = lab.iter().map(|&i| spec.row_values()[i] as i64).collect();
        let mut all = true;
        for q in &quads {
            if quad_det(t, *q, &values, spec.p())? != 0 {
                all = false;
                break;
            }
        }
        if all {
            return Ok(true);
        }
    }
    Ok(false)
}

/// True if no labeling of the degree-four-check candidate makes every embedded
/// (4,8) CCM singular at once.
pub fn candidate1_excluded(spec: &ScbSpec) -> Result<bool> {
    Ok(!quads_vanish_together(&crate::topology::as68_c1(), spec)?)
}

/// True if some labeling of the two-overlapping-(4,8) candidate makes both
/// internal (4,8) CCMs singular.
pub fn candidate2_condition(spec: &ScbSpec) -> Result<bool> {
    quads_vanish_together(&crate::topology::as68_c2(), spec)
}
