use super::witness::SemigroupWitnesses;
use crate::semigroup::NumericalSemigroup;
use crate::table::{Cell, Table};
use crate::tree::{Collector, TreeFrame};

/// `|L + L|` for the gap set `L`, with a word bitset over `[0, 2·max L]`.
pub fn gap_sumset_size(gaps: &[u32]) -> usize {
    let Some(&top) = gaps.last() else { return 0 };
    let words = (2 * top as usize) / 64 + 1;
    let mut base = vec![0u64; words];
    for &l in gaps {
        base[l as usize / 64] |= 1 << (l % 64);
    }
    let mut acc = vec![0u64; words];
    for &l in gaps {
        let (ws, bs) = (l as usize / 64, l % 64);
        for i in (0..words - ws).rev() {
            let mut w = base[i] << bs;
            if bs > 0 && i > 0 {
                w |= base[i - 1] >> (64 - bs);
            }
            acc[i + ws] |= w;
        }
    }
    acc.iter().map(|w| w.count_ones() as usize).sum()
}

fn passes(gaps: &[u32]) -> bool {
    let g = gaps.len();
    g < 2 || gap_sumset_size(gaps) <= 3 * (g - 1)
}

/// Passes iff `|L + L| ≤ 3(g - 1)`; vacuous below genus 2.
pub fn buchweitz_check(s: &NumericalSemigroup) -> bool {
    passes(&s.gaps())
}

#[derive(Clone, Debug)]
pub struct BuchweitzCollector {
    pub failures: Vec<u64>,
    pub totals: Vec<u64>,
    pub witnesses: SemigroupWitnesses,
    gaps: Vec<u32>,
}

impl BuchweitzCollector {
    pub fn new(max_genus: u32) -> Self {
        let n = max_genus as usize + 1;
        Self { failures: vec![0; n], totals: vec![0; n], witnesses: SemigroupWitnesses::default(), gaps: Vec::new() }
    }

    pub fn first_failing_genus(&self) -> Option<u32> {
        self.failures.iter().position(|&c| c > 0).map(|g| g as u32)
    }

    pub fn total_failures(&self) -> u64 {
        self.failures.iter().sum()
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(&["g", "failures", "total"]);
        for (g, (&f, &n)) in self.failures.iter().zip(&self.totals).enumerate() {
            t.push(vec![Cell::from(g), Cell::from(f), Cell::from(n)]);
        }
        t
    }
}

impl Collector for BuchweitzCollector {
    fn fork(&self) -> Self {
        Self::new(self.failures.len() as u32 - 1)
    }

    fn visit(&mut self, f: &TreeFrame<'_>) {
        let g = f.genus() as usize;
        self.totals[g] += 1;
        self.gaps.clear();
        self.gaps.extend(f.gaps());
        if !passes(&self.gaps) {
            self.failures[g] += 1;
            self.witnesses.offer(f.genus(), f.min_generators().collect());
        }
    }

    fn merge(&mut self, other: Self) {
        for (a, b) in self.failures.iter_mut().zip(&other.failures) {
            *a += b;
        }
        for (a, b) in self.totals.iter_mut().zip(&other.totals) {
            *a += b;
        }
        self.witnesses.merge(other.witnesses);
    }
}
