//! JSON dataset files.
//!
//! ```json
//! {
//!   "universe": ["x1", "x2"],
//!   "sets": {
//!     "A": { "x1": {"mu": 0.3, "nu": 0.2}, "x2": {"mu": 0.4, "nu": 0.3} }
//!   }
//! }
//! ```
//!
//! Set order follows the file. Elements follow `universe`, whatever order the
//! labels appear in inside each set. Hesitance is derived and may not be given.

use std::fmt;
use std::marker::PhantomData;
use std::path::Path;

use serde::de::{Deserializer, MapAccess, Visitor};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::pfs::{PfsElement, PfsSet};
use crate::set::{FuzzySet, Labeled};

#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    universe: Vec<String>,
    sets: Vec<PfsSet>,
}

/// Object entries in document order, duplicates kept.
struct Entries<V>(Vec<(String, V)>);

impl<'de, V: Deserialize<'de>> Deserialize<'de> for Entries<V> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct EntriesVisitor<V>(PhantomData<V>);

        impl<'de, V: Deserialize<'de>> Visitor<'de> for EntriesVisitor<V> {
            type Value = Entries<V>;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an object")
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut map: A,
            ) -> std::result::Result<Self::Value, A::Error> {
                let mut out = Vec::new();
                while let Some(entry) = map.next_entry()? {
                    out.push(entry);
                }
                Ok(Entries(out))
            }
        }

        d.deserialize_map(EntriesVisitor(PhantomData))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPair {
    mu: f64,
    nu: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDataset {
    universe: Vec<String>,
    sets: Entries<Entries<RawPair>>,
}

/// Finds the line of a key inside the document, searching past `after`.
struct Locator<'a> {
    text: &'a str,
}

impl Locator<'_> {
    fn find_key(&self, key: &str, from: usize) -> Option<usize> {
        let quoted = serde_json::to_string(key).ok()?;
        let mut start = from;
        while let Some(rel) = self.text.get(start..)?.find(&quoted) {
            let pos = start + rel;
            let rest = self.text[pos + quoted.len()..].trim_start();
            if rest.starts_with(':') {
                return Some(pos);
            }
            start = pos + quoted.len();
        }
        None
    }

    fn nth_key(&self, key: &str, from: usize, n: usize) -> Option<usize> {
        let mut pos = self.find_key(key, from)?;
        for _ in 0..n {
            pos = self.find_key(key, pos + 1)?;
        }
        Some(pos)
    }

    fn line_of(&self, pos: usize) -> usize {
        self.text[..pos].bytes().filter(|&b| b == b'\n').count() + 1
    }

    fn set_start(&self, set: &str, occurrence: usize) -> Option<usize> {
        let sets = self.find_key("sets", 0)?;
        self.nth_key(set, sets, occurrence)
    }

    fn set_line(&self, set: &str, occurrence: usize) -> Option<usize> {
        self.set_start(set, occurrence).map(|p| self.line_of(p))
    }

    fn label_line(
        &self,
        set: &str,
        occurrence: usize,
        label: &str,
        label_occurrence: usize,
    ) -> Option<usize> {
        let start = self.set_start(set, occurrence)?;
        self.nth_key(label, start + 1, label_occurrence)
            .map(|p| self.line_of(p))
    }
}

fn dataset_error(line: Option<usize>, message: impl Into<String>) -> Error {
    Error::Dataset {
        line,
        message: message.into(),
    }
}

impl Dataset {
    /// Checks that every set is defined over exactly `universe`, in that order.
    pub fn new(universe: Vec<String>, sets: Vec<PfsSet>) -> Result<Self> {
        if universe.is_empty() {
            return Err(dataset_error(None, "universe is empty"));
        }
        for (i, label) in universe.iter().enumerate() {
            if universe[..i].contains(label) {
                return Err(dataset_error(
                    None,
                    format!("universe repeats label '{label}'"),
                ));
            }
        }
        for (i, set) in sets.iter().enumerate() {
            if sets[..i].iter().any(|s| s.name() == set.name()) {
                return Err(dataset_error(
                    None,
                    format!("set name '{}' is used twice", set.name()),
                ));
            }
            if !set.labels().eq(universe.iter().map(String::as_str)) {
                return Err(dataset_error(
                    None,
                    format!("set '{}' is not defined over the universe", set.name()),
                ));
            }
        }
        Ok(Dataset { universe, sets })
    }

    /// Parses and validates a dataset, allowing `mu² + nu²` to exceed one by `epsilon`.
    pub fn from_json_str(text: &str, epsilon: f64) -> Result<Self> {
        let raw: RawDataset = serde_json::from_str(text).map_err(|e| {
            let line = (e.line() > 0).then_some(e.line());
            dataset_error(
                line,
                e.to_string().split(" at line ").next().unwrap_or_default(),
            )
        })?;
        let loc = Locator { text };

        let universe = raw.universe;
        if universe.is_empty() {
            return Err(dataset_error(
                loc.find_key("universe", 0).map(|p| loc.line_of(p)),
                "universe is empty",
            ));
        }
        for (i, label) in universe.iter().enumerate() {
            if universe[..i].contains(label) {
                let line = loc.find_key("universe", 0).map(|p| loc.line_of(p));
                return Err(dataset_error(
                    line,
                    format!("universe repeats label '{label}'"),
                ));
            }
        }

        let mut sets = Vec::with_capacity(raw.sets.0.len());
        for (set_index, (name, pairs)) in raw.sets.0.into_iter().enumerate() {
            let occurrence = sets
                .iter()
                .take(set_index)
                .filter(|s: &&PfsSet| s.name() == name)
                .count();
            if occurrence > 0 {
                return Err(dataset_error(
                    loc.set_line(&name, occurrence),
                    format!("set name '{name}' is used twice"),
                ));
            }

            let mut seen: Vec<&str> = Vec::with_capacity(pairs.0.len());
            for (label, _) in &pairs.0 {
                if seen.contains(&label.as_str()) {
                    return Err(dataset_error(
                        loc.label_line(&name, 0, label, 1),
                        format!("set '{name}' repeats label '{label}'"),
                    ));
                }
                if !universe.contains(label) {
                    return Err(dataset_error(
                        loc.label_line(&name, 0, label, 0),
                        format!("set '{name}' has label '{label}' which is not in the universe"),
                    ));
                }
                seen.push(label);
            }
            if let Some(missing) = universe.iter().find(|u| !seen.contains(&u.as_str())) {
                return Err(dataset_error(
                    loc.set_line(&name, 0),
                    format!("set '{name}' is missing universe label '{missing}'"),
                ));
            }

            let mut elements = Vec::with_capacity(universe.len());
            for label in &universe {
                let pair = &pairs
                    .0
                    .iter()
                    .find(|(l, _)| l == label)
                    .expect("checked above")
                    .1;
                let element = PfsElement::with_epsilon(label.as_str(), pair.mu, pair.nu, epsilon)
                    .map_err(|e| match e {
                    Error::Range { ref what, .. } if what == "epsilon" => e,
                    other => dataset_error(
                        loc.label_line(&name, 0, label, 0),
                        format!("set '{name}', label '{label}': {other}"),
                    ),
                })?;
                elements.push(element);
            }
            sets.push(FuzzySet::new(name, elements)?);
        }

        Ok(Dataset { universe, sets })
    }

    pub fn from_path(path: impl AsRef<Path>, epsilon: f64) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| dataset_error(None, format!("cannot read {}: {e}", path.display())))?;
        Self::from_json_str(&text, epsilon).map_err(|e| match e {
            Error::Dataset { line, message } => {
                dataset_error(line, format!("{}: {message}", path.display()))
            }
            other => other,
        })
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn sets(&self) -> &[PfsSet] {
        &self.sets
    }

    pub fn into_sets(self) -> Vec<PfsSet> {
        self.sets
    }

    pub fn get(&self, name: &str) -> Option<&PfsSet> {
        self.sets.iter().find(|s| s.name() == name)
    }

    /// Like [`Dataset::get`], but a missing set is an error naming the alternatives.
    pub fn require(&self, name: &str) -> Result<&PfsSet> {
        self.get(name).ok_or_else(|| {
            let names: Vec<&str> = self.sets.iter().map(PfsSet::name).collect();
            dataset_error(
                None,
                format!("no set named '{name}' (available: {})", names.join(", ")),
            )
        })
    }

    pub fn to_json_value(&self) -> Value {
        let mut sets = Map::new();
        for set in &self.sets {
            let mut pairs = Map::new();
            for e in set.elements() {
                pairs.insert(e.label().to_string(), json!({ "mu": e.mu(), "nu": e.nu() }));
            }
            sets.insert(set.name().to_string(), Value::Object(pairs));
        }
        json!({ "universe": self.universe, "sets": sets })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("plain JSON values")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pfs::DEFAULT_EPSILON;

    const SAMPLE: &str = r#"{
  "universe": ["x1", "x2"],
  "sets": {
    "B": {
      "x2": {"mu": 0.5, "nu": 0.4},
      "x1": {"mu": 0.1, "nu": 0.9}
    },
    "A": {
      "x1": {"mu": 0.3, "nu": 0.2},
      "x2": {"mu": 0.4, "nu": 0.3}
    }
  }
}"#;

    fn parse(text: &str) -> Result<Dataset> {
        Dataset::from_json_str(text, DEFAULT_EPSILON)
    }

    fn line_of(err: Error) -> Option<usize> {
        match err {
            Error::Dataset { line, .. } => line,
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn keeps_file_order_of_sets_and_universe_order_of_elements() {
        let d = parse(SAMPLE).unwrap();
        let names: Vec<&str> = d.sets().iter().map(PfsSet::name).collect();
        assert_eq!(names, ["B", "A"]);
        let b = d.require("B").unwrap();
        assert_eq!(b.labels().collect::<Vec<_>>(), ["x1", "x2"]);
        assert_eq!(b.elements()[0].mu(), 0.1);
        assert!(d.require("C").is_err());
    }

    #[test]
    fn round_trips_through_json() {
        let d = parse(SAMPLE).unwrap();
        let again = parse(&d.to_json_string()).unwrap();
        assert_eq!(d, again);
    }

    #[test]
    fn syntax_errors_carry_line() {
        let text = "{\n  \"universe\": [\"x1\"],\n  \"sets\": {\n    \"A\": {\"x1\": {\"mu\": 0.3 \"nu\": 0.2}}\n  }\n}";
        assert_eq!(line_of(parse(text).unwrap_err()), Some(4));
    }

    #[test]
    fn hesitance_field_is_rejected() {
        let text = "{\"universe\": [\"x1\"],\n\"sets\": {\"A\": {\"x1\": {\"mu\": 0.3, \"nu\": 0.2, \"h\": 0.9}}}}";
        let err = parse(text).unwrap_err();
        assert!(err.to_string().contains("unknown field"), "{err}");
        assert_eq!(line_of(err), Some(2));
    }

    #[test]
    fn constraint_violation_names_set_label_and_line() {
        let text = SAMPLE.replace("\"mu\": 0.5, \"nu\": 0.4", "\"mu\": 0.9, \"nu\": 0.9");
        let err = parse(&text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("'B'") && msg.contains("'x2'"), "{msg}");
        assert_eq!(line_of(err), Some(5));
    }

    #[test]
    fn out_of_range_degree_is_rejected() {
        let text = SAMPLE.replace("\"mu\": 0.3", "\"mu\": -0.3");
        let err = parse(&text).unwrap_err();
        assert_eq!(line_of(err), Some(9));
    }

    #[test]
    fn epsilon_controls_boundary_pairs() {
        let text = r#"{"universe": ["x"], "sets": {"P": {"x": {"mu": 0.2, "nu": 0.98}}}}"#;
        assert!(Dataset::from_json_str(text, 1e-3).is_ok());
        assert!(Dataset::from_json_str(text, 0.0).is_err());
    }

    #[test]
    fn coverage_errors() {
        let missing = SAMPLE.replace(",\n      \"x1\": {\"mu\": 0.1, \"nu\": 0.9}", "");
        let err = parse(&missing).unwrap_err();
        assert!(
            err.to_string().contains("missing universe label 'x1'"),
            "{err}"
        );
        assert_eq!(line_of(err), Some(4));

        let extra = SAMPLE.replace("\"x1\": {\"mu\": 0.3", "\"x9\": {\"mu\": 0.3");
        let err = parse(&extra).unwrap_err();
        assert!(err.to_string().contains("'x9'"));
        assert_eq!(line_of(err), Some(9));

        let dup = SAMPLE.replace("\"x2\": {\"mu\": 0.4", "\"x1\": {\"mu\": 0.4");
        let err = parse(&dup).unwrap_err();
        assert!(err.to_string().contains("repeats label 'x1'"));
        assert_eq!(line_of(err), Some(10));
    }

    #[test]
    fn duplicate_set_names_are_rejected() {
        let text = "{\"universe\": [\"x\"], \"sets\": {\n\"A\": {\"x\": {\"mu\": 0.1, \"nu\": 0.1}},\n\"A\": {\"x\": {\"mu\": 0.2, \"nu\": 0.1}}}}";
        let err = parse(text).unwrap_err();
        assert!(err.to_string().contains("used twice"));
        assert_eq!(line_of(err), Some(3));
    }

    #[test]
    fn empty_universe_is_rejected() {
        assert!(parse(r#"{"universe": [], "sets": {}}"#).is_err());
        assert!(parse(r#"{"universe": ["x"], "sets": {}}"#)
            .unwrap()
            .sets()
            .is_empty());
    }
}
