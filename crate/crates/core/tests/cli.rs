use std::process::{Command, Output};

use wv_core::cli::{BranchReport, FanReport, InfoReport, ResolveReport, VerifyReport};

fn wv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wv")).args(args).output().expect("wv runs")
}

fn json<T: serde::de::DeserializeOwned>(args: &[&str]) -> T {
    let out = wv(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid report")
}

#[test]
fn info_reports_large_groups_without_enumerating() {
    let r: InfoReport = json(&["info", "E8", "--format", "json"]);
    assert_eq!(r.weyl_group_order, 696_729_600);
    assert_eq!(r.positive_roots.len(), 120);
    let g2: InfoReport = json(&["info", "G2", "--format", "json"]);
    assert_eq!((g2.rank, g2.ambient_dim), (2, 3));
}

#[test]
fn branch_json_matches_text_totals() {
    let r: BranchReport = json(&["branch", "B3", "--hw", "1,0,1", "--a-roots", "0,1,0", "--format", "json"]);
    assert_eq!(r.total_dimension, r.dimension);
    let text = String::from_utf8(wv(&["branch", "B3", "--hw", "1,0,1", "--a-roots", "0,1,0"]).stdout).unwrap();
    assert!(text.contains(&format!("sum b * dim = {} (dim L^mu = {})", r.dimension, r.dimension)));
}

#[test]
fn embedding_descriptor_and_env_depth() {
    let r: ResolveReport = Command::new(env!("CARGO_BIN_EXE_wv"))
        .args([
            "resolve",
            "--embedding",
            r#"{"ambient":"A3","a_roots":[[1,0,0],[0,0,1]]}"#,
            "--hw",
            "0,1,0",
            "--format",
            "json",
        ])
        .env("WV_DEPTH", "5")
        .output()
        .map(|o| serde_json::from_slice(&o.stdout).unwrap())
        .unwrap();
    assert_eq!(r.depth, 5);
    assert!(r.euler_check);
    assert_eq!(r.sequence.len(), 24);
}

#[test]
fn fan_report_round_trips() {
    let r: FanReport = json(&["fan", "G2", "--a-roots", "1,0", "--format", "json"]);
    assert_eq!(serde_json::from_str::<FanReport>(&serde_json::to_string(&r).unwrap()).unwrap(), r);
}

#[test]
fn verify_single_embedding() {
    let r: VerifyReport = json(&["verify", "G2", "--a-roots", "1,0", "--max-label", "1", "--format", "json"]);
    assert_eq!(r.cases.len(), 4);
    assert_eq!(r.failed, 0);
}

#[test]
fn out_file_and_svg() {
    let dir = std::env::temp_dir().join(format!("wv-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b2.svg");
    let out = wv(&["draw", "B2", "--hw", "1,0", "--a-roots", "1,2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.contains("<svg") && svg.trim_end().ends_with("</svg>"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(wv(&["branch", "B2", "--hw", "1,0,0", "--a-roots", "1,2"]).status.code(), Some(2));
    assert_eq!(wv(&["nonsense"]).status.code(), Some(2));
    assert_eq!(wv(&["fan", "B2", "--a-roots", "1,3"]).status.code(), Some(1));
    assert_eq!(wv(&["draw", "A3", "--hw", "1,0,0"]).status.code(), Some(1));
    assert_eq!(
        wv(&["fan", "A2", "--a-roots", "1,0", "--embedding", r#"{"ambient":"B2","a_roots":[[1,0]]}"#]).status.code(),
        Some(2)
    );
    assert_eq!(wv(&["--help"]).status.code(), Some(0));
}
