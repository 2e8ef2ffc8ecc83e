use std::io::Cursor;

use pathenergy::emit_graph6;
use pathenergy::enumerate::{connected_graphs, trees, unicyclic_graphs};
use pathenergy::explorer::{scan_to_vec, stratified_report, ScanOptions};
use pathenergy::Graph;

fn stream(graphs: &[Graph]) -> String {
    graphs.iter().map(|g| emit_graph6(g).unwrap() + "\n").collect()
}

fn scan(text: &str, jobs: usize) -> (Vec<pathenergy::explorer::ScanRecord>, pathenergy::explorer::ScanSummary) {
    let opts = ScanOptions { jobs, ..ScanOptions::default() };
    scan_to_vec(Cursor::new(text), &opts).unwrap()
}

#[test]
fn repeated_scans_serialise_identically() {
    let text = stream(&connected_graphs(6).unwrap());
    let (ra, sa) = scan(&text, 1);
    let (rb, sb) = scan(&text, 4);
    assert_eq!(serde_json::to_string(&ra).unwrap(), serde_json::to_string(&rb).unwrap());
    assert_eq!(serde_json::to_string(&sa).unwrap(), serde_json::to_string(&sb).unwrap());
    assert_eq!(sa.total, 112);
}

#[test]
fn counts_do_not_depend_on_input_order() {
    let mut graphs = connected_graphs(6).unwrap();
    let (_, forward) = scan(&stream(&graphs), 2);
    graphs.reverse();
    let (_, backward) = scan(&stream(&graphs), 2);
    assert_eq!(forward.strata, backward.strata);
    assert_eq!(forward.block_strata, backward.block_strata);
    assert_eq!(forward.conjecture2, backward.conjecture2);
    assert_eq!(forward.conjecture1.applicable, backward.conjecture1.applicable);
}

#[test]
fn trees_have_one_positive_eigenvalue() {
    for n in 2..=8 {
        let (records, summary) = scan(&stream(&trees(n).unwrap()), 0);
        assert_eq!(summary.total, records.len());
        for r in records {
            assert!(!r.conjecture1_applicable);
            assert_eq!(r.positive_count, 1, "{}", r.graph6);
            assert_eq!(r.block_count, n - 1);
            assert_eq!(r.nontrivial_block_count, 0);
            assert!(!r.needs_review);
        }
    }
}

#[test]
fn two_positive_unicyclic_graphs_start_at_eight_vertices() {
    let (_, seven) = scan(&stream(&unicyclic_graphs(7).unwrap()), 0);
    assert_eq!(seven.total, 33);
    assert!(seven.unicyclic_by_girth.iter().all(|s| s.two_positive_witnesses.is_empty()));

    let (records, eight) = scan(&stream(&unicyclic_graphs(8).unwrap()), 0);
    let witnesses: Vec<&String> = eight.unicyclic_by_girth.iter().flat_map(|s| &s.two_positive_witnesses).collect();
    assert!(!witnesses.is_empty());
    for w in witnesses {
        let r = records.iter().find(|r| &r.graph6 == w).unwrap();
        assert!(r.unicyclic && r.positive_count == 2 && !r.needs_review);
    }
}

#[test]
fn counterexamples_survive_recheck() {
    let (records, summary) = scan(&stream(&connected_graphs(7).unwrap()), 0);
    assert_eq!(summary.conjecture1.counterexamples.len(), 2);
    for g6 in &summary.conjecture1.counterexamples {
        let r = records.iter().find(|r| &r.graph6 == g6).unwrap();
        assert!(r.biconnected && r.positive_count != 1 && !r.needs_review);
    }
    assert!(summary.bound_violations.is_empty());
    assert!(summary.spectrum_inconsistent.is_empty());
    assert_eq!(stratified_report(&records), summary);
}
