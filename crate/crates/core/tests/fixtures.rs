mod common;

use clutterbetti::betti::betti_table;
use clutterbetti::fixtures;
use clutterbetti::io::{emit_clutter, parse_clutter};
use clutterbetti::reduction::verify_removal_sequence;
use clutterbetti::FieldSpec;
use common::{koszul_betti, table_map};

#[test]
fn removal_stages_are_the_drawn_graphs() {
    let replay = verify_removal_sequence(&fixtures::figure2_sequence().unwrap()).unwrap();
    let names = ["figure2-graph-g", "figure2-graph-g1", "figure2-graph-g2", "figure2-graph-g3"];
    assert_eq!(replay.stages.len(), names.len());
    for (stage, name) in replay.stages.iter().zip(names) {
        assert_eq!(stage, &fixtures::clutter(name).unwrap(), "{name}");
    }
}

#[test]
fn graph_stage_tables_match_oracle() {
    for name in ["figure2-graph-g", "figure2-graph-g3"] {
        let ideal = fixtures::clutter(name).unwrap().circuit_ideal_of_complement();
        assert_eq!(table_map(&betti_table(&ideal, FieldSpec::Rationals).unwrap()), koszul_betti(&ideal, None), "{name}");
    }
}

#[test]
fn every_fixture_text_round_trips() {
    fixtures::verify_all().unwrap();
    for name in fixtures::names() {
        if let Ok(c) = fixtures::clutter(name) {
            assert_eq!(parse_clutter(&emit_clutter(&c)).unwrap(), c, "{name}");
        }
    }
}
