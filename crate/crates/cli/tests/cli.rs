use std::process::{Command, Output};

use serde_json::Value;

fn atlas(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_atlas"))
        .args(args)
        .output()
        .expect("running atlas")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(atlas(&["zone", "--n", "12"]).status.code(), Some(0));
    assert_eq!(atlas(&["bogus"]).status.code(), Some(2));
    assert_eq!(atlas(&["zone", "--n", "3..1"]).status.code(), Some(2));
    assert_eq!(atlas(&["zone", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(atlas(&["ears", "--n", "45"]).status.code(), Some(2));
    assert_eq!(
        atlas(&["corridors", "--n", "12", "--pairs", "4^3/5,4,3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(atlas(&["verify", "--n", "11"]).status.code(), Some(0));
}

#[test]
fn max_n_and_force() {
    assert_eq!(
        atlas(&["zone", "--n", "12", "--max-n", "10"]).status.code(),
        Some(2)
    );
    let out = atlas(&["zone", "--n", "12", "--max-n", "10", "--force"]);
    assert_eq!(
        stdout(&out),
        "n,rect_count,zone_vertices,components,sizes\n12,4,8,3,\"4,2,2\"\n"
    );
}

#[test]
fn failed_expectation_exits_one() {
    let dir = std::env::temp_dir().join(format!("atlas-expect-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("wrong.csv");
    std::fs::write(
        &path,
        "n,rho,sigma,d_sup,endpoint_u,endpoint_v,profile\n12,4^3,3^4,2,\"4,4,3,1\",\"4,3,3,2\",\"4,4\"\n",
    )
    .unwrap();
    let out = atlas(&["corridors", "--n", "12", "--expect", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains(",fail\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn formats_carry_the_same_fields() {
    let csv_text = stdout(&atlas(&["corridors", "--n", "12"]));
    let json: Value = serde_json::from_str(&stdout(&atlas(&[
        "corridors",
        "--n",
        "12",
        "--format",
        "json",
    ])))
    .unwrap();
    let md = stdout(&atlas(&["corridors", "--n", "12", "--format", "md"]));

    let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
    let headers = reader.headers().unwrap().clone();
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let records = json.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(records.len(), 6);
    assert_eq!(md.lines().count(), 8);
    for (row, rec) in rows.iter().zip(records) {
        for (h, cell) in headers.iter().zip(row.iter()) {
            let v = &rec[h];
            let text = v
                .as_str()
                .map(str::to_string)
                .unwrap_or_else(|| v.to_string());
            assert_eq!(text, cell, "column {h}");
        }
    }
    let md_first: Vec<&str> = md
        .lines()
        .nth(2)
        .unwrap()
        .trim_matches('|')
        .split(" | ")
        .map(str::trim)
        .collect();
    assert_eq!(md_first, rows[0].iter().collect::<Vec<_>>());
}

#[test]
fn explicit_pairs() {
    let out = stdout(&atlas(&[
        "corridors",
        "--n",
        "12",
        "--pairs",
        "4^3/3^4;6,6/2^6",
    ]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("12,4^3,3^4,1,"));
    assert!(lines[2].starts_with("12,\"6,6\",2^6,6,"));
    assert_eq!(
        stdout(&atlas(&["corridors", "--n", "9"])).lines().count(),
        1
    );
}

#[test]
fn ears_json_and_empty() {
    let v: Value =
        serde_json::from_str(&stdout(&atlas(&["ears", "--n", "9", "--format", "json"]))).unwrap();
    let rec = &v.as_array().unwrap()[0];
    assert_eq!(
        (
            rec["dim_root"].as_u64(),
            rec["dim_alpha"].as_u64(),
            rec["dim_beta"].as_u64()
        ),
        (Some(2), Some(3), Some(3))
    );
    assert_eq!(
        stdout(&atlas(&["ears", "--n", "7"])),
        "n,root,type,alpha,beta,dim_root,dim_alpha,dim_beta,remarks\n"
    );
}

#[test]
fn verify_reports_named_claims() {
    let out = atlas(&["verify", "--n", "12"]);
    let summary = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(summary.lines().any(|l| l.starts_with("independence: pass")));
    assert!(stdout(&out).contains("12,tetra,(4^3),pass,"));
}

#[test]
fn export_writes_files() {
    let dir = std::env::temp_dir().join(format!("atlas-export-{}", std::process::id()));
    let out = atlas(&["export", "--n", "2,8,12", "--out", dir.to_str().unwrap()]);
    assert!(out.status.success());

    let g2: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("graph_2.json")).unwrap()).unwrap();
    assert_eq!(g2["vertices"], serde_json::json!(["2", "1,1"]));
    assert_eq!(g2["edges"], serde_json::json!([[0, 1]]));

    let edges = std::fs::read_to_string(dir.join("graph_8.edges")).unwrap();
    assert!(edges.starts_with("p 8 22 "));
    let g8: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("graph_8.json")).unwrap()).unwrap();
    assert_eq!(g8["vertices"].as_array().unwrap().len(), 22);

    let corridors: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("corridors_12.json")).unwrap())
            .unwrap();
    let records = corridors.as_array().unwrap();
    assert_eq!(records.len(), 6);
    let tetra = records.iter().find(|r| r["d_sup"] == 1).unwrap();
    assert_eq!(tetra["rho"], "4,4,4");
    assert_eq!(
        tetra["chosen_endpoints"],
        serde_json::json!(["4,4,3,1", "4,3,3,2"])
    );
    assert_eq!(tetra["edge_clique_profile"], serde_json::json!([4]));
    assert_eq!(tetra["profile_class"], "tetrahedral");
    std::fs::remove_dir_all(&dir).unwrap();
}
