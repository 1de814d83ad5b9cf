use serde_json::{Map, Value};

use crate::record::SemigroupRecord;
use crate::semigroup::NumericalSemigroup;

/// Retained witnesses per collector; the count of violations is tracked
/// separately and is never capped.
pub const WITNESS_CAP: usize = 64;

/// Violating semigroups by `(genus, generators)`, smallest first, so the
/// kept subset does not depend on traversal order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SemigroupWitnesses {
    items: Vec<(u32, Vec<u32>)>,
}

impl SemigroupWitnesses {
    pub fn offer(&mut self, genus: u32, generators: Vec<u32>) {
        self.items.push((genus, generators));
        if self.items.len() > 2 * WITNESS_CAP {
            self.normalize();
        }
    }

    fn normalize(&mut self) {
        self.items.sort();
        self.items.dedup();
        self.items.truncate(WITNESS_CAP);
    }

    pub fn merge(&mut self, other: Self) {
        self.items.extend(other.items);
        self.normalize();
    }

    pub fn generators(&self) -> Vec<Vec<u32>> {
        let mut s = self.clone();
        s.normalize();
        s.items.into_iter().map(|(_, g)| g).collect()
    }

    /// One JSON object per witness: `check` followed by the semigroup record.
    pub fn to_json(&self, check: &str) -> Vec<Value> {
        self.generators()
            .iter()
            .map(|gens| {
                let s = NumericalSemigroup::from_generators(gens).expect("witness generators are valid");
                semigroup_witness(check, &s)
            })
            .collect()
    }
}

pub fn semigroup_witness(check: &str, s: &NumericalSemigroup) -> Value {
    let mut obj = Map::new();
    obj.insert("check".into(), Value::from(check));
    if let Value::Object(rec) = serde_json::to_value(SemigroupRecord::new(s)).expect("record serializes") {
        obj.extend(rec);
    }
    Value::Object(obj)
}

/// A failing table cell, e.g. `{"check":"ye","g":4,...}`.
pub fn cell_witness(check: &str, fields: &[(&str, Value)]) -> Value {
    let mut obj = Map::new();
    obj.insert("check".into(), Value::from(check));
    for (k, v) in fields {
        obj.insert((*k).into(), v.clone());
    }
    Value::Object(obj)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kept_witnesses_are_the_smallest() {
        let mut a = SemigroupWitnesses::default();
        let mut b = SemigroupWitnesses::default();
        for n in (3..200u32).rev() {
            let target = if n % 2 == 0 { &mut a } else { &mut b };
            target.offer(n - 1, vec![n, n + 1]);
        }
        a.merge(b);
        let gens = a.generators();
        assert_eq!(gens.len(), WITNESS_CAP);
        assert_eq!(gens[0], vec![3, 4]);
        assert_eq!(gens[WITNESS_CAP - 1], vec![66, 67]);
    }

    #[test]
    fn witness_line_is_a_record() {
        let s = NumericalSemigroup::from_generators(&[2, 5]).unwrap();
        let line = semigroup_witness("wilf", &s).to_string();
        assert_eq!(
            line,
            r#"{"check":"wilf","generators":[2,5],"multiplicity":2,"frobenius":3,"genus":2,"gaps":[1,3],"efficacy":1,"weight":1,"ewt":1,"kunz":[2]}"#
        );
        let mut obj: serde_json::Map<String, Value> = serde_json::from_str(&line).unwrap();
        obj.remove("check");
        let record = SemigroupRecord::parse(&Value::Object(obj).to_string()).unwrap();
        assert_eq!(record.verify().unwrap(), s);
    }
}
