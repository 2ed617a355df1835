use serde_json::Value;
use wv_wasm::{branching_json, diagram, resolution_json};

#[test]
fn b2_diagram_with_contours() {
    let svg = diagram("B2", "1,2", "1,0").unwrap();
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches("contour positive").count(), 2);
    let plain = diagram("A2", "", "1,1").unwrap();
    assert!(!plain.contains(r#"class="contour "#));
}

#[test]
fn branching_rows() {
    let rows: Value = serde_json::from_str(&branching_json("B2", "1,2", "1,0").unwrap()).unwrap();
    let mults: Vec<u64> = rows.as_array().unwrap().iter().map(|r| r["multiplicity"].as_u64().unwrap()).collect();
    assert_eq!(mults, vec![2, 1]);
}

#[test]
fn resolution_payload() {
    let v: Value = serde_json::from_str(&resolution_json("B2", "1,2", "0,1").unwrap()).unwrap();
    assert_eq!(v["euler_check"], Value::Bool(true));
    assert_eq!(v["sequence"]["grades"].as_array().unwrap().len(), 4);
}

#[test]
fn input_errors() {
    assert!(diagram("A3", "", "1,0,0").unwrap_err().contains("rank"));
    assert!(branching_json("B2", "", "1,0").is_err());
    assert!(branching_json("B2", "1,2", "1").unwrap_err().contains("labels"));
    assert!(resolution_json("B2", "2,1", "1,0").is_err());
    assert!(diagram("G2", "", "9,9").unwrap_err().contains("limit"));
}
