use serde_json::{json, Value};

use crate::args::{Common, Format};
use crate::commands::Outcome;

pub const SCHEMA_VERSION: &str = "1";

pub fn document(common: &Common, command: &Value, subcommand: &str, outcome: &Outcome) -> Value {
    json!({
        "meta": {
            "subcommand": subcommand,
            "config": { "command": command, "seed": common.seed, "threads": common.threads },
            "versions": { "metawhit": env!("CARGO_PKG_VERSION"), "schema": SCHEMA_VERSION },
        },
        "result": outcome.result,
    })
}

pub fn render(format: Format, doc: &Value, outcome: &Outcome) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("json");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(vec![]);
            w.write_record(&outcome.header).expect("csv header");
            for row in &outcome.rows {
                w.write_record(row).expect("csv row");
            }
            String::from_utf8(w.into_inner().expect("csv flush")).expect("utf8")
        }
        Format::Pretty => outcome.pretty.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn outcome() -> Outcome {
        Outcome {
            result: json!({ "k": 1 }),
            header: vec!["a".into(), "b".into()],
            rows: vec![vec!["1".into(), "x,y".into()]],
            pretty: "one line".into(),
            mismatch: false,
        }
    }

    #[test]
    fn csv_quotes_fields() {
        let o = outcome();
        assert_eq!(render(Format::Csv, &json!({}), &o), "a,b\n1,\"x,y\"\n");
    }

    #[test]
    fn json_is_stable() {
        let o = outcome();
        let doc = json!({ "meta": { "z": 1, "a": 2 }, "result": o.result });
        let s = render(Format::Json, &doc, &o);
        assert_eq!(s, render(Format::Json, &doc, &o));
        assert!(s.find("\"a\"").unwrap() < s.find("\"z\"").unwrap());
        assert!(s.ends_with('\n'));
    }
}
