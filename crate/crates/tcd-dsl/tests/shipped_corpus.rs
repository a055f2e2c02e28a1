//! Every shipped circuit file parses, typechecks, and survives a
//! print-reparse round trip up to associativity of the chains.

use std::path::{Path, PathBuf};

use tcd_dsl::{parse_program, pretty_print};

fn circuits_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../circuits")
}

fn shipped_sources() -> Vec<(String, String)> {
    let mut out = Vec::new();
    for entry in std::fs::read_dir(circuits_dir()).expect("circuits directory present") {
        let path = entry.unwrap().path();
        let Some(name) = path.file_name().and_then(|n| n.to_str()) else { continue };
        if name.ends_with(".tcd") && name != "broken.tcd" {
            out.push((name.to_string(), std::fs::read_to_string(&path).unwrap()));
        }
    }
    assert!(out.len() >= 15, "corpus unexpectedly small: {}", out.len());
    out
}

#[test]
fn every_shipped_file_parses_and_typechecks() {
    for (name, text) in shipped_sources() {
        let program = parse_program(&text).unwrap_or_else(|e| panic!("{}: {}", name, e));
        assert!(program.diagrams().count() >= 1, "{}", name);
    }
}

#[test]
fn print_reparse_is_stable() {
    for (name, text) in shipped_sources() {
        let first = parse_program(&text).unwrap();
        let printed = pretty_print(&first);
        let second = parse_program(&printed).unwrap_or_else(|e| panic!("{}: {}", name, e));
        assert_eq!(pretty_print(&second), printed, "{}", name);
        for ((n1, t1, i1), (n2, t2, i2)) in first.diagrams().zip(second.diagrams()) {
            assert_eq!(n1, n2, "{}", name);
            assert_eq!(t1.normalized(), t2.normalized(), "{}", name);
            assert_eq!(i1, i2, "{}", name);
        }
    }
}
