//! End-to-end tests of the `rep2v` binary: exit-code contract, output
//! determinism, and the documented file schemas.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

use rep2v::charlat::{AbelianGroup, Pi1Action};
use rep2v::cohom::{h2_representatives, EnumLimits, TwistedQzModule};
use rep2v::grp::{FiniteGroup, Perm, PermRep};
use rep2v::repq::{cocyclic_rep, permutation_rep, regular_rep, trivial_rep};
use rep2v::twogrp::TwoGroupData;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rep2v"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn write_json<T: serde::Serialize>(dir: &TempDir, name: &str, value: &T) -> PathBuf {
    write(dir, name, &serde_json::to_string_pretty(value).unwrap())
}

fn split(pi0: FiniteGroup, orders: Vec<u64>) -> TwoGroupData {
    let pi1 = AbelianGroup::new(orders).unwrap();
    let action = Pi1Action::trivial(&pi0, &pi1);
    TwoGroupData::make_split(pi0, pi1, action).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_two_group_files() {
    let dir = TempDir::new().unwrap();

    // A hand-written split (ℤ/2)[0] file exercises the documented schema.
    let good = write(
        &dir,
        "z2.json",
        r#"{
  "pi0": {"order": 2, "table": [[0, 1], [1, 0]]},
  "pi1": {"cyclic": [1]},
  "action": {"perms": [[0], [0]]},
  "alpha": [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
}"#,
    );
    let out = run(&["validate", path_str(&good)]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("valid 2-group: p = 2, q = 1"));

    // Malformed JSON is a parse error.
    let broken = write(&dir, "broken.json", "{ not json");
    assert_eq!(code(&run(&["validate", path_str(&broken)])), 2);

    // A normalized but non-closed alpha fails with a witness.
    let mut alpha = rep2v::twogrp::cyclic_alpha_table(4, 2, 1);
    alpha[1][2][3] = 1 - alpha[1][2][3];
    let bad = serde_json::json!({
        "pi0": {"order": 4, "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]},
        "pi1": {"cyclic": [2]},
        "action": {"perms": [[0,1],[0,1],[0,1],[0,1]]},
        "alpha": alpha,
    });
    let bad = write(&dir, "bad_alpha.json", &serde_json::to_string(&bad).unwrap());
    let out = run(&["validate", path_str(&bad)]);
    assert_eq!(code(&out), 1);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not a 3-cocycle"), "witness missing: {err}");
}

#[test]
fn validate_quadruple_files() {
    let dir = TempDir::new().unwrap();
    let t = split(FiniteGroup::cyclic(2), vec![1]);
    let good = write_json(&dir, "triv.json", &trivial_rep(&t));
    let out = run(&["validate", path_str(&good)]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("ok   coboundary_equation"));

    // Equivariance failure: nontrivial action, character not moved.
    let pi1 = AbelianGroup::new(vec![3]).unwrap();
    let neg = Perm::new(vec![0, 2, 1]).unwrap();
    let pi0 = FiniteGroup::cyclic(2);
    let action = Pi1Action::new(&pi0, &pi1, vec![Perm::identity(3), neg]).unwrap();
    let t2 = TwoGroupData::make_split(pi0, pi1, action).unwrap();
    let raw = serde_json::json!({
        "two_group": &t2,
        "n": 1,
        "rho": [[0], [0]],
        "beta": [[1]],
        "c": [[["0/1"], ["0/1"]], [["0/1"], ["0/1"]]],
    });
    let bad = write(&dir, "bad_quad.json", &serde_json::to_string(&raw).unwrap());
    let out = run(&["validate", path_str(&bad)]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL beta_equivariance"));
}

#[test]
fn regular_is_deterministic_and_validates() {
    let dir = TempDir::new().unwrap();
    let t = split(FiniteGroup::cyclic(2), vec![1]);
    let tg = write_json(&dir, "z2.json", &t);

    let first = run(&["regular", path_str(&tg)]);
    let second = run(&["regular", path_str(&tg)]);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout, "byte-identical across runs");
    let text = stdout(&first);
    assert!(text.contains("\"n\": 2"));
    assert!(text.contains("[1, 0]") || text.contains("[\n      1,\n      0\n    ]"));

    // Round through a file and validate it.
    let out_path = dir.path().join("regular.json");
    let out = run(&["regular", path_str(&tg), "-o", path_str(&out_path)]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&run(&["validate", path_str(&out_path)])), 0);

    // (ℤ/2)[1]: β components are the two characters of ℤ/2.
    let t1 = split(FiniteGroup::trivial(), vec![2]);
    let tg1 = write_json(&dir, "z2_one.json", &t1);
    let text = stdout(&run(&["regular", path_str(&tg1)]));
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["beta"], serde_json::json!([[0], [1]]));
}

#[test]
fn hom_rank_tables_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let t = split(FiniteGroup::symmetric(3), vec![1]);
    let i = write_json(&dir, "triv.json", &trivial_rep(&t));

    let out = run(&["hom-rank", path_str(&i), path_str(&i)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("rep\tsize\tstab\ttorsor\tzregular"));
    assert!(text.contains("total\t3"), "End(I) over S3 has rank 3:\n{text}");

    // --both reports the symmetric comparison.
    let r = write_json(&dir, "reg.json", &regular_rep(&t));
    let out = run(&["hom-rank", path_str(&r), path_str(&i), "--both"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("total\t1"));
    assert!(text.contains("symmetric\tyes"));

    // JSON mode is valid JSON and deterministic.
    let out1 = run(&["hom-rank", path_str(&r), path_str(&i), "--json"]);
    let out2 = run(&["hom-rank", path_str(&r), path_str(&i), "--json"]);
    assert_eq!(out1.stdout, out2.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out1)).unwrap();
    assert_eq!(v["total_rank"], 1);

    // Mismatched 2-groups exit 1.
    let t2 = split(FiniteGroup::cyclic(2), vec![1]);
    let other = write_json(&dir, "other.json", &trivial_rep(&t2));
    assert_eq!(code(&run(&["hom-rank", path_str(&i), path_str(&other)])), 1);
}

#[test]
fn orbits_lists_non_intertwining_too() {
    let dir = TempDir::new().unwrap();
    let t = split(FiniteGroup::trivial(), vec![2]);
    let r = write_json(&dir, "reg.json", &regular_rep(&t));
    let i = write_json(&dir, "triv.json", &trivial_rep(&t));
    let out = run(&["orbits", path_str(&r), path_str(&i)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    // X(1, 2) over the trivial group: two singleton orbits, one
    // intertwining (the trivial character slot).
    assert!(text.contains("yes"));
    assert!(text.contains("no"));
}

#[test]
fn zregular_command() {
    let dir = TempDir::new().unwrap();
    let v4 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
    let group = write_json(&dir, "v4.json", &v4);

    // The nontrivial Klein cocycle has a single regular class.
    let z: Vec<Vec<String>> = (0..4)
        .map(|a: usize| {
            (0..4)
                .map(|b: usize| {
                    if (a / 2) * (b % 2) == 1 { "1/2".to_string() } else { "0/1".to_string() }
                })
                .collect()
        })
        .collect();
    let zfile = write(
        &dir,
        "z.json",
        &serde_json::to_string(&serde_json::json!({ "z": z })).unwrap(),
    );
    let out = run(&["zregular", path_str(&group), path_str(&zfile)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "zregular\t1\n");

    // A non-cocycle is rejected as a mathematical failure.
    let mut bad = vec![vec!["0/1".to_string(); 4]; 4];
    bad[1][2] = "1/3".to_string();
    let zbad = write(
        &dir,
        "zbad.json",
        &serde_json::to_string(&serde_json::json!({ "z": bad })).unwrap(),
    );
    assert_eq!(code(&run(&["zregular", path_str(&group), path_str(&zbad)])), 1);
}

#[test]
fn equiv_witness_and_mismatch() {
    let dir = TempDir::new().unwrap();
    let v4 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
    let t = split(v4, vec![1]);

    let module = TwistedQzModule::untwisted(t.pi0().clone(), 1);
    let classes = h2_representatives(&module, &EnumLimits::default()).unwrap();
    let triv = write_json(&dir, "c0.json", &cocyclic_rep(&t, classes[0].clone()).unwrap());
    let non = write_json(&dir, "c1.json", &cocyclic_rep(&t, classes[1].clone()).unwrap());

    let out = run(&["equiv", path_str(&triv), path_str(&triv)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("equivalent"));

    let out = run(&["equiv", path_str(&triv), path_str(&non)]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "inequivalent\n");
}

#[test]
fn enumerate_ground_truth() {
    let dir = TempDir::new().unwrap();
    let v4 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
    let klein = write_json(&dir, "v4.json", &split(v4, vec![1]));
    let out = run(&["enumerate", path_str(&klein), "--n", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("classes\t2\n"), "{}", stdout(&out));

    let trivial = write_json(&dir, "triv.json", &split(FiniteGroup::trivial(), vec![1]));
    let out = run(&["enumerate", path_str(&trivial), "--n", "1", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);

    // Bound violations are mathematical failures.
    let out = run(&["enumerate", path_str(&klein), "--n", "3", "--max-n", "2"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn universal_check_and_basis() {
    let dir = TempDir::new().unwrap();
    let t = split(FiniteGroup::cyclic(2), vec![1]);
    let swap = PermRep::new(
        t.pi0(),
        vec![Perm::identity(2), Perm::new(vec![1, 0]).unwrap()],
    )
    .unwrap();
    let q = write_json(&dir, "swap.json", &permutation_rep(&t, swap).unwrap());

    let out = run(&["universal-check", path_str(&q), "--d", "2,3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("pass"));

    // Wrong length is a mathematical mismatch.
    assert_eq!(code(&run(&["universal-check", path_str(&q), "--d", "1,2,3"])), 1);

    let out = run(&["basis-endomega", path_str(&q)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("chi\tg\tcomponents"));
    // ζ_{χ₀, e} is the identity on both basis objects; ζ_{χ₀, g} swaps.
    assert!(text.contains("0\t0\t0,1"));
    assert!(text.contains("0\t1\t1,0"));
}

#[test]
fn missing_file_is_io_error() {
    assert_eq!(code(&run(&["validate", "/nonexistent/nope.json"])), 2);
}
