use moduli_cli::{run, OutputRecord};

fn golden(name: &str) -> String {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

fn emitted(args: &[&str]) -> String {
    let mut out = Vec::new();
    let code = run(
        std::iter::once("moduli").chain(args.iter().copied()),
        &mut out,
        &mut Vec::new(),
    );
    assert_eq!(code, 0);
    String::from_utf8(out).unwrap()
}

#[test]
fn tables_match_committed_golden_files() {
    assert_eq!(
        emitted(&["poly", "A", "0..20", "--format", "json"]),
        golden("A.jsonl")
    );
    assert_eq!(
        emitted(&["poly", "B", "0..20", "--format", "json"]),
        golden("B.jsonl")
    );
    assert_eq!(
        emitted(&["gamma", "B", "0..20", "--format", "json"]),
        golden("gammaB.jsonl")
    );
}

#[test]
fn golden_files_contain_the_printed_values() {
    let b: Vec<OutputRecord> = golden("B.jsonl")
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(
        b[5].to_poly().unwrap().to_plain(),
        "x^4+122x^3+482x^2+122x+1"
    );
    let g: Vec<OutputRecord> = golden("gammaB.jsonl")
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(
        g[9].to_poly().unwrap().to_plain(),
        "5080320x^4+8491968x^3+968224x^2+10254x+1"
    );
}

#[test]
fn seed_fixtures_reproduces_committed_files() {
    let dir = tempfile::tempdir().unwrap();
    let (f, g) = (dir.path().join("fixtures"), dir.path().join("golden"));
    let code = run(
        [
            "moduli",
            "seed-fixtures",
            "--fixtures-dir",
            f.to_str().unwrap(),
            "--golden-dir",
            g.to_str().unwrap(),
        ],
        &mut Vec::new(),
        &mut Vec::new(),
    );
    assert_eq!(code, 0);
    assert_eq!(
        std::fs::read_to_string(f.join("b074059.txt")).unwrap(),
        moduli_core::oeis::A074059_FIXTURE
    );
    for name in ["A.jsonl", "B.jsonl", "gammaB.jsonl"] {
        assert_eq!(
            std::fs::read_to_string(g.join(name)).unwrap(),
            golden(name),
            "{name}"
        );
    }
}
