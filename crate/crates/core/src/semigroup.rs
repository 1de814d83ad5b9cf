//! Numerical semigroups stored as a membership table on a finite window.
//!
//! Every member beyond the window is implied: the table always reaches past
//! the Frobenius number, so `contains` answers `true` for anything larger than
//! the last stored index.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// Upper bound on the membership window used by [`NumericalSemigroup::from_generators`].
pub const DEFAULT_WINDOW_LIMIT: usize = 1 << 20;

#[derive(Clone, Debug)]
pub struct NumericalSemigroup {
    members: Vec<bool>,
    multiplicity: u32,
    frobenius: i32,
    genus: u32,
    generators: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strength {
    Strong,
    Weak,
    NotEffective,
}

/// A minimal generator together with its role in the semigroup tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorTag {
    pub value: u32,
    pub strength: Strength,
}

impl GeneratorTag {
    pub fn is_effective(&self) -> bool {
        self.strength != Strength::NotEffective
    }
}

/// Weakly decreasing parts cut out by the Dyck path of a semigroup.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightData {
    pub weight: u64,
    pub effective_weight: u64,
    pub partition: Partition,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NumericalSemigroup {
    /// Semigroup generated by `gens`, built in a window of at most
    /// [`DEFAULT_WINDOW_LIMIT`] entries.
    pub fn from_generators(gens: &[u32]) -> Result<Self> {
        Self::from_generators_within(gens, DEFAULT_WINDOW_LIMIT)
    }

    pub fn from_generators_within(gens: &[u32], window_limit: usize) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let d = gens.iter().fold(0u64, |acc, &n| gcd(acc, u64::from(n)));
        if d != 1 {
            return Err(Error::GcdNotOne(d));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let smallest = sorted[0] as usize;
        let largest = *sorted.last().unwrap() as usize;

        // Grow until `smallest` consecutive members appear; everything after
        // that run is a member.
        let mut members = vec![true];
        let mut run = 1usize;
        let mut x = 0usize;
        while run < smallest {
            x += 1;
            if x >= window_limit {
                return Err(Error::WindowOverflow { limit: window_limit });
            }
            let hit = sorted
                .iter()
                .take_while(|&&n| n as usize <= x)
                .any(|&n| members[x - n as usize]);
            members.push(hit);
            run = if hit { run + 1 } else { 0 };
        }
        let frobenius = members.iter().rposition(|&b| !b).map_or(-1, |p| p as i64);
        let wanted = (frobenius + largest as i64 + 2).max(0) as usize;
        if wanted > window_limit {
            return Err(Error::WindowOverflow { limit: window_limit });
        }
        Ok(Self::finish(members, wanted))
    }

    /// Semigroup with the given gap set; fails unless the complement is
    /// closed under addition.
    pub fn from_gaps(gaps: &[u32]) -> Result<Self> {
        let max_gap = gaps.iter().copied().max().map_or(0, |g| g as usize);
        if gaps.contains(&0) {
            return Err(Error::InvalidGaps("0 is always a member".into()));
        }
        let len = if gaps.is_empty() { 2 } else { max_gap + 2 };
        if len > DEFAULT_WINDOW_LIMIT {
            return Err(Error::WindowOverflow { limit: DEFAULT_WINDOW_LIMIT });
        }
        let mut members = vec![true; len];
        for &l in gaps {
            members[l as usize] = false;
        }
        // Members past the table are all present, so only sums landing on
        // a gap can break closure.
        for x in 1..len {
            if !members[x] {
                continue;
            }
            for &l in gaps {
                let l = l as usize;
                if l > x && members[l - x] {
                    return Err(Error::InvalidGaps(format!(
                        "gap {l} = {x} + {} is a sum of members",
                        l - x
                    )));
                }
            }
        }
        Ok(Self::finish(members, 0))
    }

    /// `{0} ∪ [g+1, ∞)`.
    pub fn ordinary(genus: u32) -> Self {
        let g = genus as usize;
        let mut members = vec![true; 2 * g + 3];
        for m in members.iter_mut().take(g + 1).skip(1) {
            *m = false;
        }
        Self::finish(members, 0)
    }

    /// Builds a semigroup from a table that is already closed under addition
    /// and whose last entry lies past the Frobenius number.
    pub(crate) fn from_closed_table(members: Vec<bool>) -> Self {
        Self::finish(members, 0)
    }

    fn finish(mut members: Vec<bool>, min_len: usize) -> Self {
        debug_assert!(members[0]);
        let frobenius = members.iter().rposition(|&b| !b).map_or(-1, |p| p as i32);
        let genus = members.iter().filter(|&&b| !b).count() as u32;
        let f1 = (frobenius + 1) as usize;
        let multiplicity = (1..).find(|&x| x >= members.len() || members[x]).unwrap() as u32;
        let need = f1 + multiplicity as usize + 2;
        if members.len() < need {
            members.resize(need, true);
        }
        let mut s = Self {
            members,
            multiplicity,
            frobenius,
            genus,
            generators: Vec::new(),
        };
        s.generators = s.compute_generators();
        let canonical = (f1 + *s.generators.last().unwrap() as usize + 1).max(min_len);
        s.members.resize(canonical, true);
        s
    }

    /// Members with no representation as a sum of two nonzero members.
    /// Only members `x` with `x - m` outside the semigroup can qualify, and
    /// all of them are at most `F + m` (or `1` for the full monoid).
    fn compute_generators(&self) -> Vec<u32> {
        let m = self.multiplicity as usize;
        let top = (self.frobenius + 1) as usize + m;
        let mut gens = Vec::new();
        for x in m..=top {
            if !self.contains(x as u64) || (x > m && self.contains((x - m) as u64)) {
                continue;
            }
            if self.nonzero_decompositions(x as u64) == 0 {
                gens.push(x as u32);
            }
        }
        gens
    }

    /// Number of unordered pairs `{u, v}` of nonzero members with `u + v = x`.
    pub fn nonzero_decompositions(&self, x: u64) -> u32 {
        let m = u64::from(self.multiplicity);
        (m..=x / 2)
            .filter(|&u| self.contains(u) && self.contains(x - u))
            .count() as u32
    }

    pub fn contains(&self, x: u64) -> bool {
        usize::try_from(x)
            .ok()
            .and_then(|i| self.members.get(i).copied())
            .unwrap_or(true)
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// Largest gap, `-1` for the full monoid.
    pub fn frobenius(&self) -> i32 {
        self.frobenius
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn min_generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Membership table over `[0, bound]`.
    pub fn membership(&self) -> &[bool] {
        &self.members
    }

    pub fn bound(&self) -> usize {
        self.members.len() - 1
    }

    pub fn is_ordinary(&self) -> bool {
        self.frobenius < self.multiplicity as i32
    }

    pub fn gaps(&self) -> Vec<u32> {
        (1..=self.frobenius.max(0) as u32)
            .filter(|&x| !self.members[x as usize])
            .collect()
    }

    /// `S ∩ [0, F]`; empty for the full monoid.
    pub fn small_elements(&self) -> Vec<u32> {
        (0..=self.frobenius)
            .map(|x| x as u32)
            .filter(|&x| self.members[x as usize])
            .collect()
    }

    /// Least member in each residue class modulo `n`, indexed by residue.
    pub fn apery_set(&self, n: u32) -> Result<Vec<u32>> {
        if n == 0 || !self.contains(u64::from(n)) {
            return Err(Error::NotAMember(u64::from(n)));
        }
        let n = n as usize;
        let mut ap = vec![u32::MAX; n];
        let mut found = 0;
        let mut x = 0usize;
        while found < n {
            if self.contains(x as u64) && ap[x % n] == u32::MAX {
                ap[x % n] = x as u32;
                found += 1;
            }
            x += 1;
        }
        Ok(ap)
    }

    /// Whether effective generator `lambda` is strong: `m + lambda` stays a
    /// minimal generator once `lambda` is removed. The pair `{m, lambda}` is
    /// the only decomposition that involves `lambda`.
    fn strength_of(&self, lambda: u32) -> Strength {
        let x = u64::from(self.multiplicity) + u64::from(lambda);
        if self.nonzero_decompositions(x) == 1 {
            Strength::Strong
        } else {
            Strength::Weak
        }
    }

    pub fn effective_generators(&self) -> Vec<GeneratorTag> {
        self.generators
            .iter()
            .map(|&value| {
                let strength = if value as i32 > self.frobenius {
                    self.strength_of(value)
                } else {
                    Strength::NotEffective
                };
                GeneratorTag { value, strength }
            })
            .collect()
    }

    /// Number of children in the semigroup tree.
    pub fn efficacy(&self) -> usize {
        self.generators
            .iter()
            .filter(|&&g| g as i32 > self.frobenius)
            .count()
    }

    /// The child `S \ {lambda}`.
    pub fn remove_generator(&self, lambda: u32) -> Result<Self> {
        if lambda as i32 <= self.frobenius || self.generators.binary_search(&lambda).is_err() {
            return Err(Error::NotEffective(u64::from(lambda)));
        }
        let mut members = self.members.clone();
        let need = lambda as usize + self.multiplicity as usize + 3;
        if members.len() < need {
            members.resize(need, true);
        }
        members[lambda as usize] = false;
        Ok(Self::finish(members, 0))
    }

    pub fn weight(&self) -> u64 {
        self.gaps()
            .iter()
            .enumerate()
            .map(|(i, &l)| u64::from(l) - (i as u64 + 1))
            .sum()
    }

    /// Sum over gaps of the number of minimal generators below the gap.
    pub fn effective_weight(&self) -> u64 {
        self.gaps()
            .iter()
            .map(|&l| self.generators.partition_point(|&n| n < l) as u64)
            .sum()
    }

    /// Walks the path over `0..=2g` (right on members, up on gaps) and
    /// records the row lengths to the left of every up-step.
    pub fn partition(&self) -> Partition {
        let mut x = 0u32;
        let mut rows = Vec::with_capacity(self.genus as usize);
        for i in 0..=2 * u64::from(self.genus) {
            if self.contains(i) {
                x += 1;
            } else {
                rows.push(x);
            }
        }
        rows.reverse();
        Partition(rows)
    }

    pub fn weight_data(&self) -> WeightData {
        WeightData {
            weight: self.weight(),
            effective_weight: self.effective_weight(),
            partition: self.partition(),
        }
    }

    /// Gap set as a bit mask; `None` once the Frobenius number exceeds 127.
    pub fn gap_mask(&self) -> Option<u128> {
        if self.frobenius > 127 {
            return None;
        }
        Some(self.gaps().iter().fold(0u128, |acc, &l| acc | 1 << l))
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        let f1 = (self.frobenius + 1) as usize;
        self.frobenius == other.frobenius && self.members[..f1] == other.members[..f1]
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.frobenius.hash(state);
        self.members[..(self.frobenius + 1) as usize].hash(state);
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}
