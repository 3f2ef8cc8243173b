use scb_core::code::ScbSpec;
use scb_core::gfp::{BitMatrix, FieldMatrix};
use scb_core::topology::{
    as48, as59, as68_c2, as68_c3, as68_c4, as68_c5, as68_c6, by_name, catalog, find_subgraph,
    induced_topology, is_absorbing, isomorphisms, Topology,
};

#[test]
fn cycle_space_dimensions() {
    let want = [
        (as48(), 3),
        (as59(), 4),
        (as68_c3(), 6),
        (as68_c4(), 6),
        (as68_c5(), 6),
        (as68_c6(), 6),
    ];
    for (t, d) in want {
        let g = t.vn_graph().unwrap();
        assert_eq!(g.cycle_space_dim(), d, "{}", t.name());
        assert_eq!(g.fundamental_cycles().len(), d, "{}", t.name());
    }
}

#[test]
fn edge_count_equals_degree_two_checks() {
    for t in catalog().into_iter().filter(Topology::is_degree2) {
        let g = t.vn_graph().unwrap();
        assert_eq!(g.q(), t.checks().len(), "{}", t.name());
        let stubs: usize = t.stubs().iter().sum();
        assert_eq!(stubs, t.b(), "{}", t.name());
    }
}

#[test]
fn fundamental_cycles_are_independent_and_span() {
    for t in catalog().into_iter().filter(Topology::is_degree2) {
        let g = t.vn_graph().unwrap();
        let cycles = g.fundamental_cycles();
        let mut m = BitMatrix::zeros(cycles.len(), g.q());
        for (r, c) in cycles.iter().enumerate() {
            for &e in &c.edges {
                m.set(r, e, !m.get(r, e));
            }
        }
        assert_eq!(m.rank(), cycles.len(), "{}", t.name());
        // the cycle space is the GF(2) kernel of the incidence matrix
        let inc = g.incidence();
        let rank = FieldMatrix::from_rows(
            &(0..inc.rows())
                .map(|r| inc.row(r).iter().map(|&x| x as i64).collect())
                .collect::<Vec<_>>(),
            2,
        )
        .unwrap()
        .rank();
        assert_eq!(g.q() - rank, cycles.len(), "{}", t.name());
        for c in &cycles {
            let mut deg = vec![0usize; g.n()];
            for &e in &c.edges {
                let (a, b) = g.edges()[e];
                deg[a] += 1;
                deg[b] += 1;
            }
            assert!(deg.iter().all(|d| d % 2 == 0), "{}: not closed", t.name());
        }
    }
}

#[test]
fn c2_c4_c5_contain_as48() {
    let small = as48().vn_graph().unwrap();
    for t in [as68_c2(), as68_c4(), as68_c5()] {
        let big = t.vn_graph().unwrap();
        let map = find_subgraph(&big, &small).unwrap_or_else(|| panic!("{}", t.name()));
        let mut seen = map.clone();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), 4);
    }
    assert!(find_subgraph(&as68_c3().vn_graph().unwrap(), &small).is_none());
}

#[test]
fn codeword_support_has_no_odd_checks() {
    let spec = ScbSpec::eab(5, 3).unwrap();
    let h = spec.build();
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
    assert!(basis.dimension() > 0);
    for v in &basis.vectors {
        let support: Vec<usize> = (0..v.len()).filter(|&i| v[i] == 1).collect();
        assert_eq!(is_absorbing(&support, &h).unwrap(), Some((support.len(), 0)));
    }
}

#[test]
fn single_variable_is_not_absorbing() {
    let h = ScbSpec::eab(7, 5).unwrap().build();
    assert_eq!(is_absorbing(&[3], &h).unwrap(), None);
}

#[test]
fn induced_shape_of_catalog_instance_is_isomorphic() {
    let spec = ScbSpec::eab(11, 5).unwrap();
    let h = spec.build();
    let t = as48();
    let w = scb_core::ccm::exists_in_code(&t, &spec).unwrap().witness.unwrap();
    let (shape, _) = induced_topology(&w.support, &h).unwrap().unwrap();
    assert!(!isomorphisms(&t, &shape).is_empty());
    assert_eq!(is_absorbing(&w.support, &h).unwrap(), Some((4, 8)));
}

#[test]
fn text_round_trip_and_lookup() {
    for t in catalog() {
        assert_eq!(Topology::parse(&t.to_text()).unwrap(), t);
        assert_eq!(by_name(&t.name().to_lowercase()).unwrap(), t);
    }
    assert!(by_name("AS99").is_err());
}
