use std::process::{Command, Output};

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_backbones"))
        .args(args)
        .env_remove("BACKBONES_ENUM_CAP")
        .env_remove("BACKBONES_KERNEL_CAP")
        .env_remove("BACKBONES_ORACLE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn color_path_of_three() {
    let out = stdout(&["color", "--edges", &data("p3.edges")]);
    assert!(out.starts_with("1 green\n2 brown\n3 green\n"), "{out}");
    assert!(out.contains("vc_positive 2\n"));
    assert!(out.contains("optional_vertices 1,3\n"));
}

#[test]
fn red_edges_appear_in_both_backbone_roles() {
    let v = json(&["color", "--edges", &data("commented.edges"), "--format", "json"]);
    let red = serde_json::json!([[1, 2], [3, 4]]);
    assert_eq!(v["coloring"]["red_edges"], red);
    assert_eq!(v["backbones"]["mm_positive_edges"], red);
    assert_eq!(v["backbones"]["exclusive_edges"], red);
    assert_eq!(v["coloring"]["colors"], serde_json::json!(["red", "red", "red", "red"]));
}

#[test]
fn count_examples() {
    let p4 = json(&["count", "--edges", &data("p4.edges")]);
    assert_eq!((p4["vc_count"].as_str(), p4["mm_count"].as_str()), (Some("3"), Some("1")));
    let single = json(&["count", "--edges", &data("single.edges")]);
    assert_eq!((single["vc_size"].as_u64(), single["vc_count"].as_str()), (Some(0), Some("1")));
    let p5 = json(&["count", "--edges", &data("p5.edges")]);
    assert_eq!(p5["mm_count"].as_str(), Some("3"));
}

#[test]
fn prufer_inputs_agree() {
    let inline = stdout(&["color", "--prufer", "6 1 1 2 2"]);
    assert_eq!(inline, stdout(&["color", "--prufer", "6,1,1,2,2"]));
    assert_eq!(inline, stdout(&["color", "--prufer", &data("code.prufer")]));
}

#[test]
fn enumerate_rows() {
    assert_eq!(stdout(&["enumerate", "5", "--quiet"]), "n,trees,brown,red,green,vc,mm\n5,125,185,120,320,185,320\n");
    assert!(stdout(&["enumerate", "2", "--quiet"]).ends_with("\n2,1,0,2,0,2,1\n"));
}

#[test]
fn enumerate_is_independent_of_jobs() {
    let one = stdout(&["enumerate", "7", "--jobs", "1", "--quiet"]);
    let eight = stdout(&["enumerate", "7", "--jobs", "8", "--quiet"]);
    assert_eq!(one, eight);
}

#[test]
fn long_enumeration_needs_confirmation() {
    let out = run(&["enumerate", "9"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--yes-long"));
}

#[test]
fn enumeration_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_backbones"))
        .args(["enumerate", "6", "--quiet"])
        .env("BACKBONES_ENUM_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn series_of_covers() {
    let out = stdout(&["series", "vc", "--order", "10"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[0], "1 1");
    assert_eq!(lines[9], "10 464105440");
}

#[test]
fn series_rational_dump() {
    let out = stdout(&["series", "t", "--order", "3", "--rational"]);
    assert_eq!(out, "0 0\n1 1\n2 1\n3 3/2\n");
}

#[test]
fn asymptotics_print_ten_decimals() {
    let out = stdout(&["asymptotics"]);
    assert_eq!(out, "brown 0.2276096758\nred   0.4104940675\ngreen 0.3618962566\ncover 0.4328567096\n");
}

#[test]
fn closed_form_totals() {
    assert_eq!(stdout(&["closed-form", "--color", "brown", "--n", "10"]), "195060070\n");
    let v = json(&["closed-form", "--color", "green", "--n", "3", "--format", "json"]);
    assert_eq!((v["total"].as_str(), v["fraction"].as_str()), (Some("6"), Some("2/3")));
}

#[test]
fn kernel_of_path() {
    assert_eq!(stdout(&["kernel", "--edges", &data("p3.edges")]), "dim=1 support=1,3 check=pass\n");
}

#[test]
fn sampling_is_repeatable() {
    let args = ["sample", "200", "--seed", "11", "--samples", "20"];
    assert_eq!(stdout(&args), stdout(&args));
    let tree = stdout(&["sample", "30", "--seed", "5", "--tree"]);
    assert_eq!(tree.lines().count(), 30);
    assert_eq!(tree, stdout(&["sample", "30", "--seed", "5", "--tree"]));
}

#[test]
fn oracle_lists_optima() {
    let out = stdout(&["oracle", "--edges", &data("p3.edges")]);
    assert_eq!(out, "cover 2\nmatching 1-2\nmatching 2-3\ncolorings agree\n");
}

#[test]
fn invalid_inputs_exit_with_two() {
    for (file, needle) in [("cycle.edges", "connect"), ("garbage.edges", "parse")] {
        let out = run(&["color", "--edges", &data(file)]);
        assert_eq!(out.status.code(), Some(2), "{file}");
        assert!(String::from_utf8_lossy(&out.stderr).contains(needle), "{file}");
    }
    assert_eq!(run(&["color", "--edges", &data("missing.edges")]).status.code(), Some(2));
    assert_eq!(run(&["color", "--prufer", "5 9 1 1"]).status.code(), Some(2));
    assert_eq!(run(&["series", "vc", "--order", "0"]).status.code(), Some(2));
}
