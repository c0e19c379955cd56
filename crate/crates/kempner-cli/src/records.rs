//! Machine-readable output: one JSON record per line, with deterministic
//! field and key order so output can be diffed byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    /// Decimal string with exactly the requested fractional digits, or a
    /// rational in lowest terms.
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precision: Option<u32>,
    pub values: Vec<NamedValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail_bound: Option<String>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            precision: None,
            values: Vec::new(),
            tail_bound: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn precision(mut self, prec: u32) -> Self {
        self.precision = Some(prec);
        self
    }

    pub fn value(mut self, name: &str, value: impl ToString) -> Self {
        self.values.push(NamedValue { name: name.to_string(), value: value.to_string() });
        self
    }

    pub fn tail_bound(mut self, bound: impl ToString) -> Self {
        self.tail_bound = Some(bound.to_string());
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trips_byte_identical() {
        let rec = OutputRecord::new("sum")
            .input("base", 10)
            .input("prec", 9)
            .precision(9)
            .value("K", "22.920676619")
            .tail_bound("0.00000000000910");
        let line = rec.to_json_line();
        let parsed: OutputRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(parsed.to_json_line(), line);
        assert_eq!(parsed, rec);
    }
}
