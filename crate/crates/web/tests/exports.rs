use serde_json::Value;
use trifree_web::{analyze_json, f_curve_json, srg_check_json, srg_table_json};

fn parse(s: Result<String, String>) -> Value {
    serde_json::from_str(&s.expect("call succeeds")).unwrap()
}

#[test]
fn analyze_named_and_graph6() {
    let hs = parse(analyze_json("named:higman-sims"));
    assert_eq!(hs["srg"], "(100,22,0,6)");
    assert_eq!(hs["exact_ratio"], "7/50");
    assert!((hs["ratio"].as_f64().unwrap() - 0.14).abs() < 1e-12);
    let c5 = parse(analyze_json("Dhc"));
    assert_eq!(c5["n"], 5);
    assert_eq!(c5["clusters"].as_array().unwrap().len(), 3);
    let k4 = parse(analyze_json("C~"));
    assert_eq!(k4["triangle_free"], false);
    assert!(k4["bounds"].is_null());
    assert!(analyze_json("named:nope").is_err());
    assert!(analyze_json("??").is_err());
}

#[test]
fn curve_peaks_at_the_maximum() {
    let c = parse(f_curve_json(501));
    let values: Vec<f64> = c["value"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    let max = c["max"].as_f64().unwrap();
    assert!(values.iter().all(|&v| v <= max + 1e-15));
    assert!((values.iter().cloned().fold(f64::MIN, f64::max) - max).abs() < 1e-5);
    assert!(f_curve_json(1).is_err());
}

#[test]
fn srg_checks() {
    let v = parse(srg_check_json(28, 9, 0, 4));
    assert_eq!(v["verdict"], "no such graph");
    assert_eq!(v["triggered"], true);
    assert_eq!(v["inertia"], "m2 = 6 >= k = 9 fails");
    let v = parse(srg_check_json(100, 22, 0, 6));
    assert_eq!(v["verdict"], "feasible");
    assert_eq!(v["ratio"], "7/50");
    let v = parse(srg_check_json(10, 3, 0, 2));
    assert_eq!(v["verdict"], "infeasible");
}

#[test]
fn table() {
    let v = parse(srg_table_json(816, false));
    assert_eq!(v.as_array().unwrap().len(), 24);
    let v = parse(srg_table_json(816, true));
    assert_eq!(v.as_array().unwrap().len(), 22);
    assert!(srg_table_json(5000, false).is_err());
}
