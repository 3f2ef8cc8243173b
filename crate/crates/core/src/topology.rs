//! Unlabeled absorbing-set topologies, their variable-node graphs and cycle spaces.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::code::ParityCheck;
use crate::error::{Error, Result};
use crate::gfp::FieldMatrix;

/// An absorbing-set shape: variables, satisfied checks (each joining an even
/// number of variables) and per-variable counts of degree-1 unsatisfied checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Topology {
    name: String,
    n_vars: usize,
    checks: Vec<Vec<usize>>,
    stubs: Vec<usize>,
}

impl Topology {
    pub fn new(
        name: impl Into<String>,
        n_vars: usize,
        checks: Vec<Vec<usize>>,
        stubs: Vec<usize>,
    ) -> Result<Self> {
        let name = name.into();
        if n_vars == 0 {
            return Err(Error::Topology(format!("{name}: no variables")));
        }
        if stubs.len() != n_vars {
            return Err(Error::Topology(format!(
                "{name}: {} stub counts for {n_vars} variables",
                stubs.len()
            )));
        }
        let mut checks = checks;
        for (id, c) in checks.iter_mut().enumerate() {
            if c.len() < 2 || c.len() % 2 != 0 {
                return Err(Error::Topology(format!(
                    "{name}: satisfied check {id} has odd or unit degree {}",
                    c.len()
                )));
            }
            let mut sorted = c.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != c.len() || sorted.iter().any(|&v| v >= n_vars) {
                return Err(Error::Topology(format!(
                    "{name}: satisfied check {id} has repeated or out-of-range variables"
                )));
            }
            *c = sorted;
        }
        let t = Topology {
            name,
            n_vars,
            checks,
            stubs,
        };
        for v in 0..n_vars {
            if t.sat_degree(v) <= t.stubs[v] {
                return Err(Error::Topology(format!(
                    "{}: variable {v} has {} satisfied and {} unsatisfied checks",
                    t.name,
                    t.sat_degree(v),
                    t.stubs[v]
                )));
            }
        }
        Ok(t)
    }

    /// Builds a topology with stubs filling every variable up to degree `r`.
    pub fn with_budget(
        name: impl Into<String>,
        n_vars: usize,
        checks: Vec<Vec<usize>>,
        r: usize,
    ) -> Result<Self> {
        let mut deg = vec![0usize; n_vars];
        for c in &checks {
            for &v in c {
                if v < n_vars {
                    deg[v] += 1;
                }
            }
        }
        let name = name.into();
        if let Some(v) = deg.iter().position(|&d| d > r) {
            return Err(Error::Topology(format!(
                "{name}: variable {v} exceeds degree budget {r}"
            )));
        }
        let stubs = deg.iter().map(|d| r - d).collect();
        Self::new(name, n_vars, checks, stubs)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of variables `a`.
    pub fn a(&self) -> usize {
        self.n_vars
    }

    /// Number of unsatisfied checks `b`.
    pub fn b(&self) -> usize {
        self.stubs.iter().sum()
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Satisfied checks; check `id` is the position in this list.
    pub fn checks(&self) -> &[Vec<usize>] {
        &self.checks
    }

    pub fn stubs(&self) -> &[usize] {
        &self.stubs
    }

    pub fn sat_degree(&self, v: usize) -> usize {
        self.checks.iter().filter(|c| c.contains(&v)).count()
    }

    /// Satisfied checks incident to `v`, ascending by id.
    pub fn checks_at(&self, v: usize) -> Vec<usize> {
        (0..self.checks.len())
            .filter(|&c| self.checks[c].contains(&v))
            .collect()
    }

    /// Total check degree of each variable.
    pub fn budgets(&self) -> Vec<usize> {
        (0..self.n_vars)
            .map(|v| self.sat_degree(v) + self.stubs[v])
            .collect()
    }

    /// Common degree of every variable, if uniform.
    pub fn degree_budget(&self) -> Option<usize> {
        let b = self.budgets();
        b.iter().all(|&x| x == b[0]).then_some(b[0])
    }

    pub fn is_degree2(&self) -> bool {
        self.checks.iter().all(|c| c.len() == 2)
    }

    pub fn share_check(&self, u: usize, v: usize) -> bool {
        self.checks.iter().any(|c| c.contains(&u) && c.contains(&v))
    }

    /// Variable-node graph: one edge per satisfied check, degree-2 checks only.
    pub fn vn_graph(&self) -> Result<VnGraph> {
        if !self.is_degree2() {
            return Err(Error::Topology(format!(
                "{}: satisfied check of degree > 2 has no VN-graph edge",
                self.name
            )));
        }
        Ok(VnGraph::new(
            self.n_vars,
            self.checks.iter().map(|c| (c[0], c[1])).collect(),
        ))
    }

    /// Graph carrying the consistency constraints: each satisfied check becomes a
    /// star from its lowest variable to the others, every star edge keeping the
    /// check id. Equals the VN graph for degree-2 topologies.
    pub fn constraint_graph(&self) -> VnGraph {
        let mut edges = Vec::new();
        let mut ids = Vec::new();
        for (id, c) in self.checks.iter().enumerate() {
            for &v in &c[1..] {
                edges.push((c[0], v));
                ids.push(id);
            }
        }
        VnGraph {
            n: self.n_vars,
            edges,
            check_ids: ids,
        }
    }

    /// Vertex permutations mapping the satisfied checks onto themselves and
    /// preserving stub counts, each with the induced check permutation.
    pub fn automorphisms(&self) -> Vec<Automorphism> {
        let n = self.n_vars;
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        permutations(&mut perm, 0, &mut |pi| {
            if (0..n).any(|v| self.stubs[v] != self.stubs[pi[v]]) {
                return;
            }
            let mut used = vec![false; self.checks.len()];
            let mut check_map = Vec::with_capacity(self.checks.len());
            for c in &self.checks {
                let mut img: Vec<usize> = c.iter().map(|&v| pi[v]).collect();
                img.sort_unstable();
                match (0..self.checks.len()).find(|&d| !used[d] && self.checks[d] == img) {
                    Some(d) => {
                        used[d] = true;
                        check_map.push(d);
                    }
                    None => return,
                }
            }
            out.push(Automorphism {
                vertices: pi.to_vec(),
                checks: check_map,
            });
        });
        out
    }

    /// Serializes to the line-based text format read by [`Topology::parse`].
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "name {}", self.name).unwrap();
        writeln!(s, "vars {}", self.n_vars).unwrap();
        for c in &self.checks {
            let vs: Vec<String> = c.iter().map(usize::to_string).collect();
            writeln!(s, "check {}", vs.join(" ")).unwrap();
        }
        let st: Vec<String> = self.stubs.iter().map(usize::to_string).collect();
        writeln!(s, "stubs {}", st.join(" ")).unwrap();
        s
    }

    /// Parses the text format: `name`, `vars`, one `check v..` line per
    /// satisfied check, and either `stubs s..` or `budget r`. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut name = String::from("custom");
        let mut n_vars = None;
        let mut checks = Vec::new();
        let mut stubs = None;
        let mut budget = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse {
                line: i + 1,
                msg: msg.to_string(),
            };
            let mut parts = line.split_whitespace();
            let key = parts.next().unwrap_or_default();
            let nums = |parts: std::str::SplitWhitespace| -> Result<Vec<usize>> {
                parts
                    .map(|x| x.parse().map_err(|_| err(&format!("bad integer {x:?}"))))
                    .collect()
            };
            match key {
                "name" => name = parts.collect::<Vec<_>>().join(" "),
                "vars" => n_vars = Some(single(nums(parts)?, i + 1)?),
                "check" => checks.push(nums(parts)?),
                "stubs" => stubs = Some(nums(parts)?),
                "budget" => budget = Some(single(nums(parts)?, i + 1)?),
                other => return Err(err(&format!("unknown key {other:?}"))),
            }
        }
        let n_vars = n_vars.ok_or(Error::Parse {
            line: 0,
            msg: "missing vars line".into(),
        })?;
        match (stubs, budget) {
            (Some(s), None) => Self::new(name, n_vars, checks, s),
            (None, Some(r)) => Self::with_budget(name, n_vars, checks, r),
            _ => Err(Error::Parse {
                line: 0,
                msg: "exactly one of stubs or budget is required".into(),
            }),
        }
    }
}

fn single(v: Vec<usize>, line: usize) -> Result<usize> {
    match v.as_slice() {
        [x] => Ok(*x),
        _ => Err(Error::Parse {
            line,
            msg: "expected one integer".into(),
        }),
    }
}

fn permutations(perm: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permutations(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// A topology automorphism: `vertices[v]` is the image of `v`, `checks[c]` the
/// image of check `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    pub vertices: Vec<usize>,
    pub checks: Vec<usize>,
}

/// Multigraph on variables; `check_ids[e]` is the satisfied check behind edge `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VnGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    check_ids: Vec<usize>,
}

/// Closed walk `vertices[0] -edges[0]-> vertices[1] -> ... -> vertices[0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl VnGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let check_ids = (0..edges.len()).collect();
        VnGraph {
            n,
            edges,
            check_ids,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges `q`.
    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn check_id(&self, e: usize) -> usize {
        self.check_ids[e]
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    /// `(neighbor, edge)` pairs per vertex, ascending by edge id.
    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
        adj
    }

    /// Unoriented vertex-edge incidence matrix over GF(2).
    pub fn incidence(&self) -> FieldMatrix {
        let mut m = FieldMatrix::zeros(self.n, self.q(), 2).expect("2 is prime");
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            m.set(a, e, 1);
            m.set(b, e, m.get(b, e) as i64 + 1);
        }
        m
    }

    /// Dimension of the binary cycle space, `q - rank(B)` over GF(2).
    pub fn cycle_space_dim(&self) -> usize {
        self.q() - self.incidence().rank()
    }

    pub fn components(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &(w, _) in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// BFS spanning forest rooted at the lowest vertex of each component, with
    /// neighbors taken in edge-id order. Returns parent edge per vertex and depth.
    pub fn spanning_forest(&self) -> (Vec<Option<usize>>, Vec<usize>) {
        let adj = self.adjacency();
        let mut parent_edge = vec![None; self.n];
        let mut depth = vec![usize::MAX; self.n];
        for root in 0..self.n {
            if depth[root] != usize::MAX {
                continue;
            }
            depth[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &(w, e) in &adj[u] {
                    if depth[w] == usize::MAX {
                        depth[w] = depth[u] + 1;
                        parent_edge[w] = Some(e);
                        queue.push_back(w);
                    }
                }
            }
        }
        (parent_edge, depth)
    }

    fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Fundamental cycles of the BFS spanning forest, one per chord in
    /// ascending edge-id order. Each walk starts at its lowest vertex and is
    /// oriented so its first edge id is below its last.
    pub fn fundamental_cycles(&self) -> Vec<Cycle> {
        let (parent_edge, depth) = self.spanning_forest();
        let tree: Vec<bool> = {
            let mut t = vec![false; self.q()];
            for e in parent_edge.iter().flatten() {
                t[*e] = true;
            }
            t
        };
        let mut out = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if tree[e] {
                continue;
            }
            // climb from both endpoints to the lowest common ancestor
            let (mut x, mut y) = (a, b);
            let mut up_a = vec![a];
            let mut up_a_edges = Vec::new();
            let mut up_b = vec![b];
            let mut up_b_edges = Vec::new();
            while x != y {
                if depth[x] >= depth[y] {
                    let pe = parent_edge[x].expect("non-root");
                    x = self.other(pe, x);
                    up_a.push(x);
                    up_a_edges.push(pe);
                } else {
                    let pe = parent_edge[y].expect("non-root");
                    y = self.other(pe, y);
                    up_b.push(y);
                    up_b_edges.push(pe);
                }
            }
            // walk: lca -> ... -> a -chord-> b -> ... -> (before lca)
            let mut vertices: Vec<usize> = up_a.iter().rev().copied().collect();
            let mut edges: Vec<usize> = up_a_edges.iter().rev().copied().collect();
            edges.push(e);
            vertices.extend(up_b[..up_b.len() - 1].iter().copied());
            edges.extend(up_b_edges.iter().copied());
            out.push(normalize_cycle(vertices, edges));
        }
        out
    }
}

fn normalize_cycle(mut vertices: Vec<usize>, mut edges: Vec<usize>) -> Cycle {
    let len = vertices.len();
    let start = (0..len).min_by_key(|&i| vertices[i]).unwrap();
    vertices.rotate_left(start);
    edges.rotate_left(start);
    if len > 1 && edges[0] > edges[len - 1] {
        // reverse direction, keeping the start vertex
        vertices[1..].reverse();
        edges.reverse();
    }
    Cycle { vertices, edges }
}

/// True if a satisfied check can be added between two variables without a
/// bipartite cycle shorter than `girth_floor` and within each variable's degree
/// budget: either two unsatisfied stubs merge into a new check, or a stub joins
/// an existing satisfied check.
pub fn is_extensible(t: &Topology, girth_floor: usize) -> Result<bool> {
    let g = t.vn_graph()?;
    let n = t.n_vars();
    let dist_without = |skip: Option<usize>, from: usize| -> Vec<usize> {
        let mut adj = vec![Vec::new(); n];
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if Some(e) != skip {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        bfs_dist(&adj, from)
    };
    let ok = |vn_dist: usize| vn_dist == usize::MAX || 2 * (vn_dist + 1) >= girth_floor;
    for u in 0..n {
        if t.stubs()[u] == 0 {
            continue;
        }
        let d = dist_without(None, u);
        for v in u + 1..n {
            if t.stubs()[v] > 0 && ok(d[v]) {
                return Ok(true);
            }
        }
        for (e, &(v, w)) in g.edges().iter().enumerate() {
            if v == u || w == u {
                continue;
            }
            let d = dist_without(Some(e), u);
            if ok(d[v].min(d[w])) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn bfs_dist(adj: &[Vec<usize>], from: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Injective vertex map from `small` into `big` carrying every edge of `small`
/// onto an edge of `big`, if one exists.
pub fn find_subgraph(big: &VnGraph, small: &VnGraph) -> Option<Vec<usize>> {
    let mut big_adj = vec![vec![0usize; big.n()]; big.n()];
    for &(a, b) in big.edges() {
        big_adj[a][b] += 1;
        big_adj[b][a] += 1;
    }
    let mut need = vec![vec![0usize; small.n()]; small.n()];
    for &(a, b) in small.edges() {
        need[a][b] += 1;
        need[b][a] += 1;
    }
    let mut map = Vec::with_capacity(small.n());
    let mut used = vec![false; big.n()];
    fn rec(
        map: &mut Vec<usize>,
        used: &mut [bool],
        need: &[Vec<usize>],
        big_adj: &[Vec<usize>],
    ) -> bool {
        let k = map.len();
        if k == need.len() {
            return true;
        }
        for cand in 0..used.len() {
            if used[cand] {
                continue;
            }
            if (0..k).all(|j| big_adj[map[j]][cand] >= need[j][k]) {
                used[cand] = true;
                map.push(cand);
                if rec(map, used, need, big_adj) {
                    return true;
                }
                map.pop();
                used[cand] = false;
            }
        }
        false
    }
    rec(&mut map, &mut used, &need, &big_adj).then_some(map)
}

/// Vertex maps `φ` with `φ(a)` isomorphic to `b`: checks map onto checks and
/// stub counts are preserved.
pub fn isomorphisms(a: &Topology, b: &Topology) -> Vec<Vec<usize>> {
    if a.n_vars() != b.n_vars() || a.checks().len() != b.checks().len() {
        return Vec::new();
    }
    let mut sa: Vec<usize> = a.checks().iter().map(Vec::len).collect();
    let mut sb: Vec<usize> = b.checks().iter().map(Vec::len).collect();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Vec::new();
    }
    let mut target: Vec<Vec<usize>> = b.checks().to_vec();
    target.sort();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..a.n_vars()).collect();
    permutations(&mut perm, 0, &mut |pi| {
        if (0..pi.len()).any(|v| a.stubs()[v] != b.stubs()[pi[v]]) {
            return;
        }
        let mut img: Vec<Vec<usize>> = a
            .checks()
            .iter()
            .map(|c| {
                let mut m: Vec<usize> = c.iter().map(|&v| pi[v]).collect();
                m.sort_unstable();
                m
            })
            .collect();
        img.sort();
        if img == target {
            out.push(pi.to_vec());
        }
    });
    out
}

/// Shape induced by a support in `h`: satisfied checks are those of even degree,
/// stubs the degree-1 checks. `None` if some check has odd degree above one,
/// which a [`Topology`] cannot express, or the majority condition fails.
pub fn induced_topology(support: &[usize], h: &ParityCheck) -> Result<Option<(Topology, Vec<usize>)>> {
    let (degrees, _) = induced_check_degrees(support, h)?;
    let mut vars = support.to_vec();
    vars.sort_unstable();
    vars.dedup();
    let local: HashMap<usize, usize> = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut checks: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut stubs = vec![0usize; vars.len()];
    let mut ids: Vec<usize> = degrees.keys().copied().collect();
    ids.sort_unstable();
    for c in ids {
        let d = degrees[&c];
        if d % 2 == 0 {
            let members = h
                .vars_of(c)
                .iter()
                .filter_map(|v| local.get(v).copied())
                .collect();
            checks.push((c, members));
        } else if d == 1 {
            let v = h.vars_of(c).iter().find_map(|v| local.get(v)).unwrap();
            stubs[*v] += 1;
        } else {
            return Ok(None);
        }
    }
    let check_ids = checks.iter().map(|(c, _)| *c).collect();
    match Topology::new(
        "induced",
        vars.len(),
        checks.into_iter().map(|(_, m)| m).collect(),
        stubs,
    ) {
        Ok(t) => Ok(Some((t, check_ids))),
        Err(_) => Ok(None),
    }
}

/// Classifies a variable support in `h`: returns `(a, b)` if every variable has
/// strictly more even-degree than odd-degree neighboring checks within the
/// induced subgraph, `b` being the number of odd-degree checks.
pub fn is_absorbing(support: &[usize], h: &ParityCheck) -> Result<Option<(usize, usize)>> {
    let (degrees, odd) = induced_check_degrees(support, h)?;
    for &v in support {
        let odd_here = h.checks_of(v).iter().filter(|c| degrees[c] % 2 == 1).count();
        if h.checks_of(v).len() - odd_here <= odd_here {
            return Ok(None);
        }
    }
    Ok(Some((degrees_support_len(support), odd)))
}

fn degrees_support_len(support: &[usize]) -> usize {
    let mut s = support.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

/// Degree of every check touched by `support`, and the number of odd ones.
pub fn induced_check_degrees(
    support: &[usize],
    h: &ParityCheck,
) -> Result<(HashMap<usize, usize>, usize)> {
    if support.is_empty() {
        return Err(Error::OutOfRange("empty support".into()));
    }
    let mut degrees: HashMap<usize, usize> = HashMap::new();
    let mut sorted = support.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &v in &sorted {
        if v >= h.cols() {
            return Err(Error::OutOfRange(format!("variable {v} >= {}", h.cols())));
        }
        for &c in h.checks_of(v) {
            *degrees.entry(c).or_default() += 1;
        }
    }
    let odd = degrees.values().filter(|&&d| d % 2 == 1).count();
    Ok((degrees, odd))
}

fn deg2(name: &str, n: usize, edges: &[(usize, usize)]) -> Topology {
    Topology::with_budget(name, n, edges.iter().map(|&(a, b)| vec![a, b]).collect(), 5)
        .expect("catalog entries are valid")
}

/// The (4,8) absorbing set: complete graph on four variables.
pub fn as48() -> Topology {
    deg2("AS48", 4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)])
}

/// The (5,9) absorbing set: a wheel with hub 0 and rim 1-2-3-4.
pub fn as59() -> Topology {
    deg2(
        "AS59",
        5,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (1, 4)],
    )
}

/// (6,8) candidate with one satisfied check of degree four on variables 0..3;
/// variables 4 and 5 are joined to each other and to all of 0..3.
pub fn as68_c1() -> Topology {
    let mut checks = vec![vec![0, 1, 2, 3]];
    for hub in [4, 5] {
        for v in 0..4 {
            checks.push(vec![v, hub]);
        }
    }
    checks.push(vec![4, 5]);
    Topology::with_budget("AS68_C1", 6, checks, 5).expect("catalog entry is valid")
}

/// (6,8) candidate made of two complete graphs on four vertices sharing the
/// edge between the two full-degree variables 0 and 1.
pub fn as68_c2() -> Topology {
    deg2(
        "AS68_C2",
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 3),
            (0, 4),
            (0, 5),
            (1, 4),
            (1, 5),
            (4, 5),
        ],
    )
}

/// (6,8) candidate: variable 0 joined to all others, plus a complete bipartite
/// graph between {1, 2} and {3, 4, 5}.
pub fn as68_c3() -> Topology {
    deg2(
        "AS68_C3",
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 5),
            (1, 4),
            (1, 3),
            (2, 5),
            (2, 4),
            (2, 3),
        ],
    )
}

pub fn as68_c4() -> Topology {
    deg2(
        "AS68_C4",
        6,
        &[
            (1, 2),
            (2, 3),
            (0, 2),
            (0, 3),
            (0, 1),
            (1, 3),
            (0, 5),
            (0, 4),
            (4, 5),
            (3, 4),
            (2, 5),
        ],
    )
}

pub fn as68_c5() -> Topology {
    deg2(
        "AS68_C5",
        6,
        &[
            (0, 3),
            (0, 2),
            (0, 1),
            (0, 4),
            (1, 4),
            (1, 3),
            (1, 2),
            (2, 3),
            (2, 5),
            (3, 5),
            (4, 5),
        ],
    )
}

pub fn as68_c6() -> Topology {
    deg2(
        "AS68_C6",
        6,
        &[
            (0, 3),
            (1, 3),
            (2, 3),
            (3, 4),
            (2, 4),
            (1, 2),
            (2, 5),
            (0, 1),
            (1, 5),
            (0, 4),
            (0, 5),
        ],
    )
}

/// Every cataloged topology, degree budget 5.
pub fn catalog() -> Vec<Topology> {
    vec![
        as48(),
        as59(),
        as68_c1(),
        as68_c2(),
        as68_c3(),
        as68_c4(),
        as68_c5(),
        as68_c6(),
    ]
}

pub fn by_name(name: &str) -> Result<Topology> {
    catalog()
        .into_iter()
        .find(|t| t.name().eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::Unknown(format!("topology {name}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_shapes() {
        for t in catalog() {
            assert_eq!(t.degree_budget(), Some(5), "{}", t.name());
            let expect_b = if t.name() == "AS59" { 9 } else { 8 };
            assert_eq!(t.b(), expect_b, "{}", t.name());
        }
        assert_eq!(as48().a(), 4);
        assert_eq!(as59().a(), 5);
    }

    #[test]
    fn rejects_bad_topologies() {
        assert!(Topology::new("x", 2, vec![vec![0, 1]], vec![1, 1]).is_err());
        assert!(Topology::new("x", 2, vec![vec![0, 0]], vec![0, 0]).is_err());
        assert!(Topology::new("x", 3, vec![vec![0, 1, 2]], vec![0, 0, 0]).is_err());
        assert!(Topology::new("x", 2, vec![vec![0, 2]], vec![0, 0]).is_err());
    }

    #[test]
    fn cycle_normalization() {
        let c = normalize_cycle(vec![2, 0, 1], vec![5, 1, 3]);
        assert_eq!(c.vertices[0], 0);
        assert!(c.edges[0] < c.edges[2]);
    }
}
