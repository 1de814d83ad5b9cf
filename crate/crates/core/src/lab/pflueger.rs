use super::witness::SemigroupWitnesses;
use crate::table::{Cell, Table};
use crate::tree::{Collector, TreeFrame};

pub fn pflueger_bound(g: u32) -> u64 {
    let g = u64::from(g);
    (g + 1) * (g + 1) / 8
}

/// Sum over gaps of the number of minimal generators below each gap.
pub fn effective_weight_frame(f: &TreeFrame<'_>) -> u64 {
    let mut below = 0u64;
    let mut ewt = 0;
    for x in 1..=(f.frobenius().max(0) as u64) {
        if !f.contains(x) {
            ewt += below;
        } else if f.is_min_generator(x) {
            below += 1;
        }
    }
    ewt
}

#[derive(Clone, Debug)]
pub struct PfluegerCollector {
    pub max_ewt: Vec<u64>,
    pub violations: Vec<u64>,
    pub witnesses: SemigroupWitnesses,
}

impl PfluegerCollector {
    pub fn new(max_genus: u32) -> Self {
        let n = max_genus as usize + 1;
        Self { max_ewt: vec![0; n], violations: vec![0; n], witnesses: SemigroupWitnesses::default() }
    }

    pub fn total_violations(&self) -> u64 {
        self.violations.iter().sum()
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(&["g", "max_ewt", "bound"]);
        for (g, &w) in self.max_ewt.iter().enumerate() {
            t.push(vec![Cell::from(g), Cell::from(w), Cell::from(pflueger_bound(g as u32))]);
        }
        t
    }
}

impl Collector for PfluegerCollector {
    fn fork(&self) -> Self {
        Self::new(self.max_ewt.len() as u32 - 1)
    }

    fn visit(&mut self, f: &TreeFrame<'_>) {
        let g = f.genus() as usize;
        let ewt = effective_weight_frame(f);
        self.max_ewt[g] = self.max_ewt[g].max(ewt);
        if ewt > pflueger_bound(f.genus()) {
            self.violations[g] += 1;
            self.witnesses.offer(f.genus(), f.min_generators().collect());
        }
    }

    fn merge(&mut self, other: Self) {
        for (a, b) in self.max_ewt.iter_mut().zip(&other.max_ewt) {
            *a = (*a).max(*b);
        }
        for (a, b) in self.violations.iter_mut().zip(&other.violations) {
            *a += b;
        }
        self.witnesses.merge(other.witnesses);
    }
}
