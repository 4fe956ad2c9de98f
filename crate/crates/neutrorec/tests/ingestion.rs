//! Dataset schemas, loading, re-serialization and the surrogate generator.

use neutrorec::ingestion::surrogate::heart_like;
use neutrorec::ingestion::{load_dataset, load_schema, parse_dataset, DatasetSchema};
use proptest::prelude::*;

const SCHEMA: &str = r#"
name = "toy"
expected_records = 3
features = [{ name = "a" }, { name = "b", range = [0, 10] }]
symptoms = [{ name = "s" }]
target = { column = "y", levels = ["no", "yes"] }
"#;

fn data(rel: &str) -> String {
    format!("{}/data/{rel}", env!("CARGO_MANIFEST_DIR"))
}

fn toy() -> DatasetSchema {
    DatasetSchema::parse(SCHEMA).unwrap()
}

fn row() -> impl Strategy<Value = (f64, f64, f64, bool)> {
    (
        prop::num::f64::NORMAL | prop::num::f64::ZERO | prop::num::f64::SUBNORMAL,
        0.0..=10.0f64,
        -1e6..1e6f64,
        any::<bool>(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn reserialization_is_lossless(rows in prop::collection::vec(row(), 1..30), tabs in any::<bool>()) {
        let sep = if tabs { "\t" } else { "," };
        let mut text = ["s", "y", "b", "a", "ignored"].join(sep) + "\n";
        for (a, b, s, y) in &rows {
            let fields = [s.to_string(), (if *y { "yes" } else { "no" }).to_string(), b.to_string(), a.to_string(), "x".into()];
            text += &(fields.join(sep) + "\n");
        }
        let first = parse_dataset(&text, &toy()).unwrap();
        prop_assert_eq!(first.len(), rows.len());
        prop_assert_eq!(first.dropped, 0);
        for (r, (a, b, s, y)) in first.rows.iter().zip(&rows) {
            prop_assert_eq!(r.features[0].to_bits(), a.to_bits());
            prop_assert_eq!(r.features[1].to_bits(), b.to_bits());
            prop_assert_eq!(r.symptoms[0].to_bits(), s.to_bits());
            prop_assert_eq!(r.target, if *y { 1.0 } else { 0.0 });
        }
        let second = parse_dataset(&first.to_csv().unwrap(), &toy()).unwrap();
        let bits = |d: &neutrorec::ingestion::Dataset| -> Vec<Vec<u64>> {
            d.rows.iter().map(|r| r.features.iter().chain(&r.symptoms).chain([&r.target]).map(|v| v.to_bits()).collect()).collect()
        };
        prop_assert_eq!(bits(&first), bits(&second));
    }
}

#[test]
fn bad_rows_are_dropped_and_counted() {
    let text = "a,b,s,y\n1,2,3,yes\n1,11,3,no\n1,,3,no\nx,2,3,no\n1,2,3,maybe\n4,5,6,no\n";
    let d = parse_dataset(text, &toy()).unwrap();
    assert_eq!(d.len(), 2);
    assert_eq!(d.dropped, 4);
    assert_eq!(d.rows[1].line, 7);
    assert_eq!(d.column("b"), Some(vec![2.0, 5.0]));
    assert_eq!(d.class_count(), 2);
    assert_eq!(d.normalized_target(&d.rows[0]), 1.0);
}

#[test]
fn numeric_levels_match_either_spelling() {
    let schema = load_schema(data("schemas/heart.toml")).unwrap();
    let text = "age,resting_bp,cholesterol,max_hr,class\n50,120,200,150,2.0\n50,120,200,150,1\n";
    let d = parse_dataset(text, &schema).unwrap();
    assert_eq!(d.rows.iter().map(|r| r.target).collect::<Vec<_>>(), vec![1.0, 0.0]);
}

#[test]
fn missing_columns_are_schema_errors() {
    let err = parse_dataset("a,b,y\n1,2,no\n", &toy()).unwrap_err();
    assert!(err.is_validation());
    assert!(err.to_string().contains('s'), "{err}");
}

#[test]
fn invalid_schemas_are_rejected() {
    for bad in [
        SCHEMA.replace("expected_records = 3", "expected_records = 0"),
        SCHEMA.replace("range = [0, 10]", "range = [10, 0]"),
        SCHEMA.replace("name = \"s\"", "name = \"a\""),
        SCHEMA.replace("[\"no\", \"yes\"]", "[\"only\"]"),
        SCHEMA.replace("column = \"y\"", "column = \"a\""),
    ] {
        assert!(DatasetSchema::parse(&bad).unwrap_err().is_validation(), "{bad}");
    }
}

#[test]
fn shipped_schemas_load() {
    for name in ["heart", "rhc", "diabetes", "breast", "dmd"] {
        let s = load_schema(data(&format!("schemas/{name}.toml"))).unwrap();
        assert_eq!(s.name, name);
        assert!(s.attribute_count() >= 2);
    }
}

#[test]
fn vendored_surrogate_matches_its_generator() {
    let schema = load_schema(data("schemas/heart.toml")).unwrap();
    let path = schema.file.clone().unwrap();
    assert_eq!(std::fs::read_to_string(&path).unwrap(), heart_like(271, 2019));
    let d = load_dataset(&path, &schema).unwrap();
    assert_eq!((d.len(), d.dropped, d.class_count()), (271, 0, 2));
}

#[test]
fn surrogate_is_seeded() {
    assert_eq!(heart_like(40, 7), heart_like(40, 7));
    assert_ne!(heart_like(40, 7), heart_like(40, 8));
}
