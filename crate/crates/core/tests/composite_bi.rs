#[test]
fn composite_bicocyclic_h1dag2() {
    let dag = hopfcyc::Algebra::by_name("h1dagN:2").unwrap();
    let trunc = hopfcyc::TruncationSpec {
        pbw_cap: 1,
        delta_index_cap: 1,
        max_tensor_degree: 2,
        ..Default::default()
    };
    for r in hopfcyc::bicyclic::check_bicocyclic(&dag, -1, 2, 2, &trunc, 4, 1).unwrap() {
        assert!(r.passed(), "{}: {:?} {:?}", r.check, r.witness, r.notes);
    }
}
