//! Whole-census checks against implementations that share nothing with the
//! tree walker.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use sgforge_core::closed_forms::binomial;
use sgforge_core::semigroup::Strength;
use sgforge_core::tree::{CensusOptions, CountBy};
use sgforge_core::{enumerate, CensusTable, Collector, EnumConfig, NumericalSemigroup, TreeFrame};

/// Gap sets of genus `g`: `g`-subsets of `[1, 2g-1]` whose complement in
/// `ℕ` is closed under addition, by plain bitmask search.
fn gap_sets_by_brute_force(g: u32) -> BTreeSet<u128> {
    let mut out = BTreeSet::new();
    if g == 0 {
        out.insert(0);
        return out;
    }
    let width = 2 * g - 1;
    let range = ((1u64 << width) - 1) << 1;
    // Gosper's hack over g-bit subsets of `width` positions
    let mut c: u64 = (1 << g) - 1;
    while c < 1 << width {
        let gaps = c << 1;
        let members = !gaps & range;
        let closed = (1..=width).filter(|a| members >> a & 1 == 1).all(|a| (members << a) & gaps == 0);
        if closed {
            out.insert(u128::from(gaps));
        }
        let low = c & c.wrapping_neg();
        let ripple = c + low;
        c = (((ripple ^ c) >> 2) / low) | ripple;
    }
    out
}

struct Masks(BTreeMap<u32, BTreeSet<u128>>, u64);

impl Collector for Masks {
    fn fork(&self) -> Self {
        Masks(BTreeMap::new(), 0)
    }
    fn visit(&mut self, f: &TreeFrame<'_>) {
        let fresh = self.0.entry(f.genus()).or_default().insert(f.gap_mask().unwrap());
        assert!(fresh, "visited twice: genus {}", f.genus());
        self.1 += 1;
    }
    fn merge(&mut self, other: Self) {
        for (g, set) in other.0 {
            self.0.entry(g).or_default().extend(set);
        }
        self.1 += other.1;
    }
}

#[test]
fn tree_matches_gap_set_oracle() {
    let tree = enumerate(&EnumConfig::new(12).split(4, 3), Masks(BTreeMap::new(), 0)).unwrap();
    let mut total = 0;
    for g in 0..=12 {
        let oracle = gap_sets_by_brute_force(g);
        total += oracle.len();
        assert_eq!(tree.0[&g], oracle, "genus {g}");
    }
    assert_eq!(tree.1 as usize, total);
}

/// Weak descendants of `s` at each genus up to `max_genus`, using only the
/// standalone semigroup operations.
fn weak_descendants(s: &NumericalSemigroup, max_genus: u32, counts: &mut BTreeMap<u32, u64>) {
    *counts.entry(s.genus()).or_default() += 1;
    if s.genus() == max_genus {
        return;
    }
    for tag in s.effective_generators() {
        if tag.strength == Strength::Weak {
            weak_descendants(&s.remove_generator(tag.value).unwrap(), max_genus, counts);
        }
    }
}

fn all_semigroups(max_genus: u32) -> Vec<(NumericalSemigroup, bool)> {
    fn rec(s: NumericalSemigroup, strong: bool, max_genus: u32, out: &mut Vec<(NumericalSemigroup, bool)>) {
        let tags = if s.genus() < max_genus { s.effective_generators() } else { Vec::new() };
        out.push((s.clone(), strong));
        for tag in tags.into_iter().filter(|t| t.is_effective()) {
            rec(s.remove_generator(tag.value).unwrap(), tag.strength == Strength::Strong, max_genus, out);
        }
    }
    let mut out = Vec::new();
    rec(NumericalSemigroup::ordinary(0), true, max_genus, &mut out);
    out
}

#[test]
fn weak_descendant_counts_respect_efficacy_bound() {
    let top = 14;
    let all = all_semigroups(top);
    let mut total = BTreeMap::<u32, u64>::new();
    for (s, strong) in &all {
        if !strong {
            continue;
        }
        let mut counts = BTreeMap::new();
        weak_descendants(s, top, &mut counts);
        for (&g, &n) in &counts {
            *total.entry(g).or_default() += n;
            if s.genus() <= 10 {
                let bound = binomial(i64::from(s.efficacy() as u32), i64::from(g - s.genus()));
                assert!(BigUint::from(n) <= bound, "{s}: N_{g} = {n} > {bound}");
            }
        }
    }
    // every semigroup is the weak descendant of exactly one strong one
    let census = enumerate(&EnumConfig::new(top), CensusTable::new(top, CensusOptions::default())).unwrap();
    for g in 0..=top {
        assert_eq!(total.get(&g).copied().unwrap_or(0), census.n(g), "genus {g}");
    }
}

#[test]
fn census_is_split_invariant_at_twenty() {
    let base = enumerate(&EnumConfig::new(20), CensusTable::new(20, CensusOptions::default())).unwrap();
    for depth in [3, 6] {
        for workers in [1, 4] {
            let split =
                enumerate(&EnumConfig::new(20).split(depth, workers), CensusTable::new(20, CensusOptions::default()))
                    .unwrap();
            assert_eq!(split, base, "depth {depth}, workers {workers}");
            for by in [CountBy::Genus, CountBy::Multiplicity, CountBy::Efficacy, CountBy::Frobenius] {
                assert_eq!(split.to_table(by).to_csv(), base.to_table(by).to_csv());
            }
        }
    }
}
