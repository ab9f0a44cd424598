use drg::catalog::{builtin_graph, expected_array, BUNDLED};
use drg::crosscheck::cross_check;
use drg::format::{load_graph, parse_graph, render_graph, save_graph};
use drg_core::graph::verify_drg;
use drg_core::Precision;
use sha2::{Digest, Sha256};

#[test]
fn bundled_files_are_locked() {
    let expected = [
        (
            "foster",
            "48ee9a62a709109f85bc4b49594df7c3e28206a2d0c18bca37f3d0d74fea3e29",
        ),
        (
            "biggs_smith",
            "e6692079167a29ef217abf4b79716a61999dc880d81a8f6291205fd2f6395232",
        ),
        (
            "gen_dodecagon_12",
            "4f21bc8c9d52bedecc7813d35ba3e05c1a91c148d5593f1ee1c9f2fc082d91e6",
        ),
    ];
    for ((name, text), (want_name, digest)) in BUNDLED.iter().zip(expected) {
        assert_eq!(*name, want_name);
        let got: String = Sha256::digest(text.as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        assert_eq!(got, digest, "{name}");
    }
}

#[test]
fn bundled_files_round_trip() {
    for (name, text) in BUNDLED {
        let g = parse_graph(text).unwrap();
        assert_eq!(g.name, name);
        assert_eq!(render_graph(&g.name, &g.graph), text, "{name}");
    }
}

#[test]
fn save_then_load() {
    let path = std::env::temp_dir().join(format!("drg-save-{}.drg", std::process::id()));
    let g = builtin_graph("crown-4").unwrap();
    save_graph(&path, "crown-4", &g).unwrap();
    let back = load_graph(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(back.graph, g);
}

#[test]
fn builtin_graphs_agree_with_their_arrays() {
    let names = [
        "2-cube",
        "3-cube",
        "4-cube",
        "5-cube",
        "6-cube",
        "7-cube",
        "crown-3",
        "crown-4",
        "crown-5",
        "crown-6",
        "hadamard-4",
        "hadamard-8",
        "icosahedron",
        "foster",
        "biggs_smith",
        "gen_dodecagon_12",
    ];
    for name in names {
        let g = builtin_graph(name).unwrap();
        let cert = verify_drg(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(cert.array().unwrap(), expected_array(name).unwrap(), "{name}");
        let checks = cross_check(&g, &cert, Precision::default());
        let failed: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
        assert!(failed.is_empty(), "{name}: {failed:?}");
        assert!(checks.iter().any(|c| c.check == "spectrum"));
        assert_eq!(checks.iter().any(|c| c.check == "pnumbers"), g.n() <= 130, "{name}");
    }
}

#[test]
fn cross_check_rejects_a_mismatched_certificate() {
    let c16 = drg_core::Graph::from_edges(16, (0..16).map(|i| (i, (i + 1) % 16))).unwrap();
    let cube = builtin_graph("4-cube").unwrap();
    let cert = verify_drg(&cube).unwrap();
    let checks = cross_check(&c16, &cert, Precision::default());
    for name in ["pnumbers", "spectrum"] {
        let c = checks.iter().find(|c| c.check == name).unwrap();
        assert!(!c.pass, "{name}");
    }
}
