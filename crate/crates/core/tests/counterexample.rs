use coverideals::experiments::{counterexample_g, counterexample_h};
use coverideals::oracle::{betti_table_oracle, hochster_entry, FieldSpec, OracleOptions};
use coverideals::quotients::{betti_from_linear_quotients, compute_set_data, revlex_order};

#[test]
fn entries_over_both_fields() {
    for field in [FieldSpec::default(), FieldSpec::gf2()] {
        let o = OracleOptions::with_field(field);
        let g = counterexample_g().cover_ideal().unwrap().power(3).unwrap();
        let h = counterexample_h().cover_ideal().unwrap().power(3).unwrap();
        assert_eq!(hochster_entry(&g, 2, 16, &o).unwrap(), 196);
        assert_eq!(hochster_entry(&h, 2, 16, &o).unwrap(), 195);
    }
}

#[test]
fn powers_share_generator_counts_but_not_tables() {
    let g = counterexample_g().cover_ideal().unwrap();
    let h = counterexample_h().cover_ideal().unwrap();
    assert_eq!(g.len(), h.len());
    let (g3, h3) = (g.power(3).unwrap(), h.power(3).unwrap());
    assert_eq!(g3.len(), h3.len());
    let window = OracleOptions {
        window: Some(15..=16),
        ..OracleOptions::default()
    };
    let tg = betti_table_oracle(&g3, &window).unwrap();
    let th = betti_table_oracle(&h3, &window).unwrap();
    assert_eq!(tg.get(1, 15), th.get(1, 15));
    assert_ne!(tg.get(2, 16), th.get(2, 16));
    for j in [&g3, &h3] {
        let lq = betti_from_linear_quotients(&compute_set_data(&revlex_order(j)).unwrap());
        let full = betti_table_oracle(j, &OracleOptions::default()).unwrap();
        assert_eq!(lq.to_quotient(), full);
    }
}
