//! JSON records for single semigroups, and the text parsers that read
//! semigroups back in (generator lists and records).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kunz::kunz_vector;
use crate::lab::wilf::{check_wilf, WilfTriple};
use crate::semigroup::NumericalSemigroup;

/// One semigroup with its invariants. Field order is part of the format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupRecord {
    pub generators: Vec<u32>,
    pub multiplicity: u32,
    pub frobenius: i32,
    pub genus: u32,
    pub gaps: Vec<u32>,
    pub efficacy: u32,
    pub weight: u64,
    pub ewt: u64,
    pub kunz: Vec<u32>,
}

impl SemigroupRecord {
    pub fn new(s: &NumericalSemigroup) -> Self {
        Self {
            generators: s.min_generators().to_vec(),
            multiplicity: s.multiplicity(),
            frobenius: s.frobenius(),
            genus: s.genus(),
            gaps: s.gaps(),
            efficacy: s.efficacy() as u32,
            weight: s.weight(),
            ewt: s.effective_weight(),
            // ℕ₀ has no Kunz coordinates
            kunz: kunz_vector(s).map(|v| v.coords().to_vec()).unwrap_or_default(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::InvalidRecord(e.to_string()))
    }

    /// Rebuilds the semigroup from `generators` and checks every other field
    /// against it.
    pub fn verify(&self) -> Result<NumericalSemigroup> {
        self.verify_within(crate::semigroup::DEFAULT_WINDOW_LIMIT)
    }

    pub fn verify_within(&self, window_limit: usize) -> Result<NumericalSemigroup> {
        let s = NumericalSemigroup::from_generators_within(&self.generators, window_limit)?;
        let expected = Self::new(&s);
        if &expected != self {
            return Err(Error::InvalidRecord(format!(
                "fields do not match the semigroup generated by {:?}",
                self.generators
            )));
        }
        Ok(s)
    }
}

/// Record plus the Wilf numbers and Dyck-path partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InspectRecord {
    #[serde(flatten)]
    pub record: SemigroupRecord,
    pub embedding_dimension: usize,
    pub wilf: WilfTriple,
    pub partition: Vec<u32>,
}

impl InspectRecord {
    pub fn new(s: &NumericalSemigroup) -> Self {
        Self {
            record: SemigroupRecord::new(s),
            embedding_dimension: s.embedding_dimension(),
            wilf: check_wilf(s),
            partition: s.partition().parts().to_vec(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// Parses `2 5`, `2,5`, `<2, 5>` and similar generator lists.
pub fn parse_generators(text: &str) -> Result<Vec<u32>> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix(['<', '⟨', '[', '{'])
        .and_then(|t| t.strip_suffix(['>', '⟩', ']', '}']))
        .unwrap_or(trimmed);
    let gens = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|e| Error::InvalidRecord(format!("bad generator {t:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    Ok(gens)
}
