//! Generator output pinned byte-for-byte. Set `BLESS=1` to rewrite the files.

use std::path::PathBuf;

use biclique::gen;
use biclique::io::{serialize_bipartite, serialize_graph};

fn check(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(expected == actual, "{name} differs from golden output");
}

#[test]
fn gnm_sparse() {
    check("gnm_20_30_1.g", &serialize_graph(&gen::gnm(20, 30, 1).unwrap()));
}

#[test]
fn gnm_dense() {
    check("gnm_16_100_42.g", &serialize_graph(&gen::gnm(16, 100, 42).unwrap()));
}

#[test]
fn gnm_medium() {
    check("gnm_40_200_7.g", &serialize_graph(&gen::gnm(40, 200, 7).unwrap()));
}

#[test]
fn bipartite_gnm() {
    check("bgnm_6_9_20_3.bg", &serialize_bipartite(&gen::bipartite_gnm(6, 9, 20, 3).unwrap()));
}
