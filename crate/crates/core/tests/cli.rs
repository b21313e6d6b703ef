use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn hotruss(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hotruss"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn generated(dir: &TempDir, spec: &str, seed: &str) -> String {
    let path = dir.path().join(format!("{}-{seed}.txt", spec.replace(':', "_")));
    let out = hotruss(&["--generate", spec, "--seed", seed, "--output", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path.display().to_string()
}

#[test]
fn k4_labels() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "k4.txt", "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    let out = hotruss(&["--input", &input, "--tau", "1", "--algorithm", "optimized"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().all(|l| l.ends_with("\t4")));
    assert!(text.starts_with("1\t2\t4\n1\t3\t4\n"));
}

#[test]
fn empty_input_gives_empty_output() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "empty.txt", "");
    let out = hotruss(&["--input", &input]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_input_names_the_line() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "bad.txt", "1 2\n# fine\n3 x\n");
    let out = hotruss(&["--input", &input]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn missing_file_fails() {
    let out = hotruss(&["--input", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "g.txt", "1 2\n");
    assert_eq!(hotruss(&["--input", &input, "--tau", "0"]).status.code(), Some(2));
    assert_eq!(
        hotruss(&["--input", &input, "--algorithm", "topr"]).status.code(),
        Some(2)
    );
    assert_eq!(
        hotruss(&["--input", &input, "--algorithm", "topr", "--r", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(hotruss(&[]).status.code(), Some(2));
    assert_eq!(hotruss(&["--generate", "uniform-random:5:11"]).status.code(), Some(2));
    assert_eq!(hotruss(&["--generate", "lattice:5:4"]).status.code(), Some(2));
}

#[test]
fn generation_is_deterministic_and_round_trips() {
    let a = hotruss(&["--generate", "uniform-random:10:15", "--seed", "1"]);
    let b = hotruss(&["--generate", "uniform-random:10:15", "--seed", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let dir = TempDir::new().unwrap();
    for spec in ["uniform-random:100:300", "preferential-attachment:100:300"] {
        let path = generated(&dir, spec, "3");
        let (g, report) =
            hotruss::load_edge_list(std::io::BufReader::new(std::fs::File::open(&path).unwrap())).unwrap();
        assert_eq!(g.edge_count(), 300);
        assert!(g.vertex_count() <= 100);
        assert_eq!((report.duplicates, report.self_loops), (0, 0));
    }
    let full = stdout(&hotruss(&["--generate", "uniform-random:5:10"]));
    assert_eq!(full.lines().filter(|l| !l.starts_with('#')).count(), 10);
}

#[test]
fn stats_are_deterministic_apart_from_time() {
    let dir = TempDir::new().unwrap();
    let input = generated(&dir, "uniform-random:60:180", "4");
    let run = |name: &str| {
        let stats = dir.path().join(name);
        let out = hotruss(&["--input", &input, "--stats", stats.to_str().unwrap(), "--self-check"]);
        assert!(out.status.success());
        let text = std::fs::read_to_string(&stats).unwrap();
        (
            out.stdout,
            text.lines()
                .filter(|l| !l.starts_with("wall_time_ms"))
                .map(String::from)
                .collect::<Vec<_>>(),
            text,
        )
    };
    let (out_a, stats_a, raw) = run("a.tsv");
    let (out_b, stats_b, _) = run("b.tsv");
    assert_eq!(out_a, out_b);
    assert_eq!(stats_a, stats_b);
    for key in [
        "support_recomputations\t",
        "bfs_traversals\t",
        "vertices_pruned\t",
        "self_check_failures\t0",
        "wall_time_ms\t",
    ] {
        assert!(raw.contains(key), "missing {key}");
    }
}

#[test]
fn output_goes_to_file() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "tri.txt", "5 6\n6 7\n5 7\n7 8\n");
    let output = dir.path().join("out.tsv");
    let out = hotruss(&["--input", &input, "--tau", "1", "--output", output.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(Path::new(&output)).unwrap(),
        "5\t6\t3\n5\t7\t3\n6\t7\t3\n7\t8\t2\n"
    );
}

#[test]
fn compare_reports_agreement() {
    let dir = TempDir::new().unwrap();
    let medium = generated(&dir, "uniform-random:100:300", "5");
    let small = generated(&dir, "uniform-random:30:90", "6");
    for args in [
        vec!["--input", &medium, "--algorithm", "baseline", "--compare", "optimized"],
        vec!["--input", &small, "--tau", "3", "--compare", "oracle"],
        vec![
            "--input",
            &medium,
            "--algorithm",
            "topr",
            "--r",
            "100",
            "--compare",
            "optimized",
        ],
        vec![
            "--input",
            &medium,
            "--algorithm",
            "topr",
            "--r",
            "2",
            "--compare",
            "baseline",
        ],
    ] {
        let out = hotruss(&args);
        assert!(
            out.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let text = stdout(&out);
        assert!(text.contains("labels_equal\ttrue"), "{text}");
        assert!(text.lines().any(|l| l.starts_with("support_recomputations\t")));
    }
}

#[test]
fn topr_prints_only_the_top_trusses() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "g.txt", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n4 5\n5 6\n");
    let out = hotruss(&["--input", &input, "--tau", "1", "--algorithm", "topr", "--r", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().all(|l| l.ends_with("\t4")));
}
