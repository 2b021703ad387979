use serde::{Serialize, Serializer};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

/// Ordered list of named checks; each id appears once.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CheckReport {
    checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a check. The witness is kept only on failure.
    pub fn record(&mut self, id: impl Into<String>, pass: bool, witness: impl FnOnce() -> Value) {
        let id = id.into();
        assert!(self.get(&id).is_none(), "check {id} registered twice");
        let witness = (!pass).then(witness);
        self.checks.push(Check { id, pass, witness });
    }

    pub fn extend(&mut self, other: CheckReport) {
        for c in other.checks {
            assert!(self.get(&c.id).is_none(), "check {} registered twice", c.id);
            self.checks.push(c);
        }
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn passed(&self, id: &str) -> bool {
        self.get(id).is_some_and(|c| c.pass)
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.checks.iter().map(|c| c.id.as_str())
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(&self.checks).expect("plain data")
    }
}

impl Serialize for CheckReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.checks.serialize(s)
    }
}
