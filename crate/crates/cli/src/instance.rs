//! The JSON instance file.
//!
//! ```json
//! {
//!   "frame": ["a", "b", "c"],
//!   "masses": { "a": 0.5, "b|c": 0.3 },
//!   "nonexclusivity": {
//!     "strategy": "element_derived",
//!     "element_pairs": [["a", "b", 0.3]]
//!   },
//!   "classical": false
//! }
//! ```
//!
//! Subsets are written as labels joined by `|`; whitespace around labels is
//! ignored and `∅` names the empty set. `strategy` is one of `exclusive`,
//! `element_derived` (with `element_pairs`) or `explicit_table` (with
//! `subset_pairs`, e.g. `[["a", "b|c", 0.5]]`). A missing `nonexclusivity`
//! means `exclusive`. `classical: true` additionally requires the masses to
//! form a basic probability assignment over an exclusive frame.

use std::fmt;

use dnum_core::{DNumber, Frame, MassFunction, NonExclusivity, SubsetIndex};
use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer};

use crate::error::CliError;

pub const SEPARATOR: char = '|';
pub const EMPTY_SET: &str = "∅";

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    frame: Vec<String>,
    masses: MassEntries,
    #[serde(default)]
    nonexclusivity: Option<NonExclusivitySpec>,
    #[serde(default)]
    classical: bool,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "strategy", rename_all = "snake_case", deny_unknown_fields)]
enum NonExclusivitySpec {
    Exclusive,
    ElementDerived {
        #[serde(default)]
        element_pairs: Vec<(String, String, f64)>,
    },
    ExplicitTable {
        #[serde(default)]
        subset_pairs: Vec<(String, String, f64)>,
    },
}

/// Mass entries in file order, duplicates kept so they can be reported.
#[derive(Debug)]
struct MassEntries(Vec<(String, f64)>);

impl<'de> Deserialize<'de> for MassEntries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct EntriesVisitor;

        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = MassEntries;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from subset expressions to masses")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<MassEntries, A::Error> {
                let mut entries = Vec::with_capacity(map.size_hint().unwrap_or(0));
                while let Some(entry) = map.next_entry::<String, f64>()? {
                    entries.push(entry);
                }
                Ok(MassEntries(entries))
            }
        }

        deserializer.deserialize_map(EntriesVisitor)
    }
}

/// A parsed and validated instance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub dnumber: DNumber,
    pub nonexclusivity: NonExclusivity,
    pub classical: bool,
}

impl Instance {
    pub fn frame(&self) -> &Frame {
        self.dnumber.frame()
    }
}

/// Parses a subset expression such as `a|c`. The expression must not be blank.
pub fn parse_subset(frame: &Frame, expr: &str) -> Result<SubsetIndex, CliError> {
    let expr = expr.trim();
    if expr.is_empty() {
        return Err(CliError::Parse(
            "subset expressions must not be empty (write `∅` for the empty set)".into(),
        ));
    }
    if expr == EMPTY_SET {
        return Ok(SubsetIndex::EMPTY);
    }
    let labels: Vec<&str> = expr.split(SEPARATOR).map(str::trim).collect();
    if labels.iter().any(|l| l.is_empty()) {
        return Err(CliError::Parse(format!(
            "subset expression `{expr}` has an empty label between `|` separators"
        )));
    }
    Ok(frame.encode(labels)?)
}

/// Renders a subset as its labels in frame order joined by `|`, or `∅`.
pub fn format_subset(frame: &Frame, subset: SubsetIndex) -> String {
    if subset.is_empty() {
        return EMPTY_SET.to_string();
    }
    frame.members(subset).collect::<Vec<_>>().join("|")
}

fn check_labels(labels: &[String]) -> Result<(), CliError> {
    for label in labels {
        if label.contains(SEPARATOR) {
            return Err(CliError::Validation(format!(
                "frame label `{label}` must not contain the subset separator `|`"
            )));
        }
        if label.trim() != label || label == EMPTY_SET {
            return Err(CliError::Validation(format!(
                "frame label `{label}` must not be `∅` or carry surrounding whitespace"
            )));
        }
    }
    Ok(())
}

pub fn parse_instance(text: &str) -> Result<Instance, CliError> {
    let file: InstanceFile =
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;

    let keys_ok = file.masses.0.iter().all(|(k, _)| !k.trim().is_empty());
    if !keys_ok {
        return Err(CliError::Parse("mass keys must not be empty subset expressions".into()));
    }

    check_labels(&file.frame)?;
    let frame = Frame::new(&file.frame)?;

    let masses = file
        .masses
        .0
        .iter()
        .map(|(k, m)| Ok((parse_subset(&frame, k)?, *m)))
        .collect::<Result<Vec<_>, CliError>>()?;

    let nonexclusivity = match file.nonexclusivity.unwrap_or(NonExclusivitySpec::Exclusive) {
        NonExclusivitySpec::Exclusive => NonExclusivity::exclusive(frame.clone()),
        NonExclusivitySpec::ElementDerived { element_pairs } => NonExclusivity::element_derived(
            frame.clone(),
            element_pairs.iter().map(|(x, y, p)| ((x.trim(), y.trim()), *p)),
        )?,
        NonExclusivitySpec::ExplicitTable { subset_pairs } => {
            let entries = subset_pairs
                .iter()
                .map(|(x, y, p)| Ok(((parse_subset(&frame, x)?, parse_subset(&frame, y)?), *p)))
                .collect::<Result<Vec<_>, CliError>>()?;
            NonExclusivity::explicit_table(frame.clone(), entries)?
        }
    };

    let dnumber = if file.classical {
        if nonexclusivity.strategy() != dnum_core::Strategy::Exclusive {
            return Err(CliError::Validation(
                "classical instances require the exclusive non-exclusivity strategy".into(),
            ));
        }
        DNumber::from(MassFunction::new(frame, masses)?)
    } else {
        DNumber::new(frame, masses)?
    };

    Ok(Instance {
        dnumber,
        nonexclusivity,
        classical: file.classical,
    })
}

pub fn load_instance(path: &std::path::Path) -> Result<Instance, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_instance(&text)
}
