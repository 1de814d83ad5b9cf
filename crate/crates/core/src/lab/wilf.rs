use serde::Serialize;

use super::witness::SemigroupWitnesses;
use crate::semigroup::NumericalSemigroup;
use crate::table::{Cell, Table};
use crate::tree::{Collector, TreeFrame};

/// `F + 1 ≤ n·e` with `n = |S ∩ [0, F]|` and `e` the embedding dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WilfTriple {
    pub holds: bool,
    pub f_plus_1: i64,
    pub n: u64,
    pub e: u64,
}

impl WilfTriple {
    fn new(frobenius: i32, n: u64, e: u64) -> Self {
        let f_plus_1 = i64::from(frobenius) + 1;
        Self { holds: f_plus_1 <= (n * e) as i64, f_plus_1, n, e }
    }
}

/// Vacuous for ℕ₀: `F + 1 = 0` and `n = 0`.
pub fn check_wilf(s: &NumericalSemigroup) -> WilfTriple {
    WilfTriple::new(s.frobenius(), s.small_elements().len() as u64, s.embedding_dimension() as u64)
}

pub fn check_wilf_frame(f: &TreeFrame<'_>) -> WilfTriple {
    WilfTriple::new(f.frobenius(), u64::from(f.small_element_count()), f.embedding_dimension() as u64)
}

#[derive(Clone, Debug)]
pub struct WilfCollector {
    pub violations: Vec<u64>,
    /// Semigroups meeting the bound with equality.
    pub equalities: Vec<u64>,
    pub witnesses: SemigroupWitnesses,
}

impl WilfCollector {
    pub fn new(max_genus: u32) -> Self {
        let n = max_genus as usize + 1;
        Self { violations: vec![0; n], equalities: vec![0; n], witnesses: SemigroupWitnesses::default() }
    }

    pub fn total_violations(&self) -> u64 {
        self.violations.iter().sum()
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(&["g", "violations"]);
        for (g, &v) in self.violations.iter().enumerate() {
            t.push(vec![Cell::from(g), Cell::from(v)]);
        }
        t
    }
}

impl Collector for WilfCollector {
    fn fork(&self) -> Self {
        Self::new(self.violations.len() as u32 - 1)
    }

    fn visit(&mut self, f: &TreeFrame<'_>) {
        let w = check_wilf_frame(f);
        let g = f.genus() as usize;
        if !w.holds {
            self.violations[g] += 1;
            self.witnesses.offer(f.genus(), f.min_generators().collect());
        } else if f.genus() > 0 && w.f_plus_1 == (w.n * w.e) as i64 {
            self.equalities[g] += 1;
        }
    }

    fn merge(&mut self, other: Self) {
        for (a, b) in self.violations.iter_mut().zip(&other.violations) {
            *a += b;
        }
        for (a, b) in self.equalities.iter_mut().zip(&other.equalities) {
            *a += b;
        }
        self.witnesses.merge(other.witnesses);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(check_wilf(&sg(&[2, 3])), WilfTriple { holds: true, f_plus_1: 2, n: 1, e: 2 });
        assert_eq!(check_wilf(&sg(&[3, 5])), WilfTriple { holds: true, f_plus_1: 8, n: 4, e: 2 });
        assert_eq!(check_wilf(&sg(&[1])), WilfTriple { holds: true, f_plus_1: 0, n: 0, e: 1 });
    }
}
