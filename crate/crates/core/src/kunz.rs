//! Kunz coordinates and lattice-point counting on the genus slice of the
//! Kunz cone.
//!
//! A semigroup of multiplicity `m` is determined by its Apéry set
//! `{0} ∪ {k_i·m + i}`; the tuples `(k_1, …, k_{m-1})` that occur are exactly
//! the positive integer solutions of
//!
//! * `k_i + k_j ≥ k_{i+j}` for `i ≤ j`, `i + j < m`
//! * `k_i + k_j + 1 ≥ k_{i+j-m}` for `i ≤ j`, `i + j > m`
//!
//! Pairs with `i + j = m` land on residue 0 and impose nothing.
//! This module does not touch the semigroup tree, so its counts serve as an
//! oracle for the tree census.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{NumericalSemigroup, DEFAULT_WINDOW_LIMIT};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KunzVector {
    m: u32,
    k: Vec<u32>,
}

impl KunzVector {
    pub fn new(m: u32, k: Vec<u32>) -> Result<Self> {
        if !satisfies_kunz(m, &k)? {
            return Err(Error::InvalidKunz { m, reason: format!("{k:?} violates the Kunz inequalities") });
        }
        Ok(Self { m, k })
    }

    pub fn of(s: &NumericalSemigroup) -> Result<Self> {
        kunz_vector(s)
    }

    pub fn multiplicity(&self) -> u32 {
        self.m
    }

    pub fn coords(&self) -> &[u32] {
        &self.k
    }

    pub fn genus(&self) -> u64 {
        self.k.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn to_semigroup(&self) -> NumericalSemigroup {
        build_from_apery(self.m, &self.k)
    }
}

pub fn kunz_vector(s: &NumericalSemigroup) -> Result<KunzVector> {
    let m = s.multiplicity();
    if m < 2 {
        return Err(Error::MultiplicityOne);
    }
    let ap = s.apery_set(m)?;
    let k = ap
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &a)| (a - i as u32) / m)
        .collect();
    Ok(KunzVector { m, k })
}

fn check_dimension(m: u32, k: &[u32]) -> Result<()> {
    if m < 2 {
        return Err(Error::OutOfRange { what: "multiplicity", value: i64::from(m) });
    }
    if k.len() != m as usize - 1 {
        return Err(Error::DimensionMismatch { expected: m as usize - 1, found: k.len() });
    }
    Ok(())
}

pub fn satisfies_kunz(m: u32, k: &[u32]) -> Result<bool> {
    check_dimension(m, k)?;
    let m = m as usize;
    // 1-based coordinate access
    let at = |i: usize| u64::from(k[i - 1]);
    if k.contains(&0) {
        return Ok(false);
    }
    for i in 1..m {
        for j in i..m {
            let ok = match (i + j).cmp(&m) {
                std::cmp::Ordering::Less => at(i) + at(j) >= at(i + j),
                std::cmp::Ordering::Equal => true,
                std::cmp::Ordering::Greater => at(i) + at(j) + 1 >= at(i + j - m),
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn semigroup_from_kunz(m: u32, k: &[u32]) -> Result<NumericalSemigroup> {
    if !satisfies_kunz(m, k)? {
        return Err(Error::InvalidKunz { m, reason: format!("{k:?} violates the Kunz inequalities") });
    }
    let top = k.iter().map(|&x| u64::from(x)).max().unwrap_or(0) * u64::from(m) + u64::from(m);
    if top > DEFAULT_WINDOW_LIMIT as u64 {
        return Err(Error::WindowOverflow { limit: DEFAULT_WINDOW_LIMIT });
    }
    Ok(build_from_apery(m, k))
}

fn build_from_apery(m: u32, k: &[u32]) -> NumericalSemigroup {
    let m = m as usize;
    let mut ap = vec![0usize; m];
    for (i, &ki) in k.iter().enumerate() {
        ap[i + 1] = ki as usize * m + i + 1;
    }
    let top = *ap.iter().max().unwrap();
    let members = (0..=top.max(1)).map(|x| x >= ap[x % m]).collect();
    NumericalSemigroup::from_closed_table(members)
}

/// Depth-first assignment of `k_1, k_2, …` in index order. When `k_j` is
/// chosen every inequality whose indices are all `≤ j` becomes decidable:
/// pairs summing to `j` cap it from above, wrap-around pairs `(a, j)` with
/// `a + j > m` bound it from below. The remaining budget keeps each later
/// coordinate at least 1.
struct SliceWalker {
    m: usize,
    genus: u64,
    k: Vec<u64>,
}

impl SliceWalker {
    fn bounds(&self, j: usize, used: u64) -> (u64, u64) {
        let m = self.m;
        let left = (m - 1 - j) as u64;
        let mut hi = self.genus.saturating_sub(used + left);
        let mut lo = 1u64;
        for a in 1..=j / 2 {
            hi = hi.min(self.k[a - 1] + self.k[j - a - 1]);
        }
        for a in 1..=j {
            if a + j > m {
                let target = a + j - m;
                let ka = if a == j { None } else { Some(self.k[a - 1]) };
                match ka {
                    Some(ka) => lo = lo.max((self.k[target - 1]).saturating_sub(ka + 1)),
                    // 2·k_j + 1 ≥ k_target
                    None => lo = lo.max(self.k[target - 1].saturating_sub(1).div_ceil(2)),
                }
            }
        }
        if j == m - 1 {
            let rest = self.genus.saturating_sub(used);
            if rest >= lo && rest <= hi && used < self.genus {
                return (rest, rest);
            }
            return (1, 0);
        }
        (lo, hi)
    }

    fn walk(&mut self, j: usize, used: u64, visit: &mut dyn FnMut(&[u64])) {
        let (lo, hi) = self.bounds(j, used);
        for v in lo..=hi {
            self.k[j - 1] = v;
            if j == self.m - 1 {
                visit(&self.k);
            } else {
                self.walk(j + 1, used + v, visit);
            }
        }
    }
}

fn walk_slice(m: u32, genus: u64, first: Option<u64>, visit: &mut dyn FnMut(&[u64])) {
    let m = m as usize;
    if m < 2 || genus < (m - 1) as u64 {
        return;
    }
    let mut w = SliceWalker { m, genus, k: vec![0; m - 1] };
    if m == 2 {
        w.k[0] = genus;
        if first.is_none_or(|f| f == genus) {
            visit(&w.k);
        }
        return;
    }
    match first {
        None => w.walk(1, 0, visit),
        Some(k1) => {
            let (lo, hi) = w.bounds(1, 0);
            if (lo..=hi).contains(&k1) {
                w.k[0] = k1;
                w.walk(2, k1, visit);
            }
        }
    }
}

/// All Kunz vectors of multiplicity `m` and genus `g`, in lexicographic order.
pub fn kunz_vectors(m: u32, g: u64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    walk_slice(m, g, None, &mut |k| {
        debug_assert!(satisfies_kunz(m, &k.iter().map(|&x| x as u32).collect::<Vec<_>>()).unwrap());
        out.push(k.iter().map(|&x| x as u32).collect());
    });
    out
}

/// Number of semigroups with multiplicity `m` and genus `g`, counted as
/// lattice points of the genus slice. Shards over the value of `k_1`.
pub fn count_by_polytope(m: u32, g: u64) -> u64 {
    if m < 2 || g + 1 < u64::from(m) {
        return 0;
    }
    (1..=g)
        .into_par_iter()
        .map(|k1| {
            let mut n = 0u64;
            walk_slice(m, g, Some(k1), &mut |_| n += 1);
            n
        })
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TruncationMismatch {
    /// Truncated vector fails the inequalities for multiplicity `m - 1`.
    InvalidImage { source: Vec<u32> },
    /// Last coordinate is neither 1 nor 2.
    WrongGenus { source: Vec<u32> },
    Collision { image: Vec<u32> },
    Missed { target: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionCheck {
    pub m: u32,
    pub g: u64,
    pub domain: u64,
    pub codomain: u64,
    pub witnesses: Vec<TruncationMismatch>,
}

impl BijectionCheck {
    pub fn holds(&self) -> bool {
        self.witnesses.is_empty() && self.domain == self.codomain
    }
}

/// Checks that dropping the last Kunz coordinate maps multiplicity-`m`,
/// genus-`g` vectors bijectively onto multiplicity-`(m-1)` vectors of genus
/// `g - 1` or `g - 2`.
pub fn recurrence_bijection_check(m: u32, g: u64) -> Result<BijectionCheck> {
    if m < 3 || 2 * g >= 3 * u64::from(m) {
        return Err(Error::PreconditionViolated(format!("need m >= 3 and 2g < 3m, got m={m}, g={g}")));
    }
    let domain = kunz_vectors(m, g);
    let mut codomain: Vec<Vec<u32>> = Vec::new();
    for dg in [1, 2] {
        if g >= dg {
            codomain.extend(kunz_vectors(m - 1, g - dg));
        }
    }
    let mut witnesses = Vec::new();
    let mut seen = HashSet::new();
    for v in &domain {
        let last = *v.last().unwrap();
        let image = v[..v.len() - 1].to_vec();
        if last != 1 && last != 2 {
            witnesses.push(TruncationMismatch::WrongGenus { source: v.clone() });
        } else if !satisfies_kunz(m - 1, &image)? {
            witnesses.push(TruncationMismatch::InvalidImage { source: v.clone() });
        } else if !seen.insert(image.clone()) {
            witnesses.push(TruncationMismatch::Collision { image });
        }
    }
    for t in &codomain {
        if !seen.contains(t) {
            witnesses.push(TruncationMismatch::Missed { target: t.clone() });
        }
    }
    Ok(BijectionCheck {
        m,
        g,
        domain: domain.len() as u64,
        codomain: codomain.len() as u64,
        witnesses,
    })
}
