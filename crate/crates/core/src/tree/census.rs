use serde::Serialize;

use super::{Collector, TreeFrame};
use crate::error::{Error, Result};
use crate::table::{Cell, Table};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CensusOptions {
    /// Also count by `(g, m, F)`; needed for the concentration statistics.
    pub by_multiplicity_and_frobenius: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CountBy {
    Genus,
    Multiplicity,
    Efficacy,
    Frobenius,
}

/// Counters indexed by genus. Merging adds cell by cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusTable {
    max_genus: u32,
    max_frobenius: Option<u32>,
    n_of_g: Vec<u64>,
    n_of_mg: Vec<Vec<u64>>,
    t_of_gh: Vec<Vec<u64>>,
    f_lt_2m: Vec<u64>,
    f_lt_3m: Vec<u64>,
    strong: Vec<u64>,
    s_of_gh: Vec<Vec<u64>>,
    ns_of_f: Vec<u64>,
    ye_correction: Vec<u64>,
    /// `[g][m * (2g + 1) + F]`
    mfg: Option<Vec<Vec<u64>>>,
}

/// Strongly descended counts: `𝒮(g)`, `s(g, h)` and `r(n) = s(2n+1, n+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrongCensus {
    pub strong: Vec<u64>,
    pub s_of_gh: Vec<Vec<u64>>,
    /// `(n, r(n))` from `n = -1` up to the largest `n` with `2n + 1 ≤ g_max`.
    pub r: Vec<(i64, u64)>,
}

impl CensusTable {
    pub fn new(max_genus: u32, options: CensusOptions) -> Self {
        let levels = max_genus as usize + 1;
        let by_level = |width: fn(usize) -> usize| (0..levels).map(|g| vec![0; width(g)]).collect::<Vec<_>>();
        Self {
            max_genus,
            max_frobenius: None,
            n_of_g: vec![0; levels],
            n_of_mg: by_level(|g| g + 2),
            t_of_gh: by_level(|g| g + 2),
            f_lt_2m: vec![0; levels],
            f_lt_3m: vec![0; levels],
            strong: vec![0; levels],
            s_of_gh: by_level(|g| g + 2),
            ns_of_f: vec![0; 2 * levels],
            ye_correction: vec![0; levels],
            mfg: options
                .by_multiplicity_and_frobenius
                .then(|| by_level(|g| (g + 2) * (2 * g + 1))),
        }
    }

    /// Census over an enumeration capped at Frobenius number `max_frobenius`.
    pub fn by_frobenius(max_frobenius: u32, options: CensusOptions) -> Self {
        let mut t = Self::new(max_frobenius, options);
        t.max_frobenius = Some(max_frobenius);
        t
    }

    pub fn max_genus(&self) -> u32 {
        self.max_genus
    }

    /// Largest genus whose level was enumerated in full.
    pub fn complete_through(&self) -> u32 {
        match self.max_frobenius {
            None => self.max_genus,
            // genus g forces F ≤ 2g - 1
            Some(f) => self.max_genus.min(f.div_ceil(2)),
        }
    }

    pub fn require(&self, genus: u32) -> Result<()> {
        if genus > self.complete_through() {
            return Err(Error::IncompleteTable { requested: genus, available: self.complete_through() });
        }
        Ok(())
    }

    fn at(v: &[u64], i: usize) -> u64 {
        v.get(i).copied().unwrap_or(0)
    }

    pub fn n(&self, g: u32) -> u64 {
        Self::at(&self.n_of_g, g as usize)
    }

    pub fn n_mg(&self, m: u32, g: u32) -> u64 {
        self.n_of_mg.get(g as usize).map_or(0, |row| Self::at(row, m as usize))
    }

    pub fn t_gh(&self, g: u32, h: u32) -> u64 {
        self.t_of_gh.get(g as usize).map_or(0, |row| Self::at(row, h as usize))
    }

    /// Genus-`g` semigroups with `F < 2m`.
    pub fn f_lt_2m(&self, g: u32) -> u64 {
        Self::at(&self.f_lt_2m, g as usize)
    }

    /// `t(g)`: genus-`g` semigroups with `F < 3m`.
    pub fn t(&self, g: u32) -> u64 {
        Self::at(&self.f_lt_3m, g as usize)
    }

    /// `𝒮(g)`; the root is counted at genus 0.
    pub fn strong(&self, g: u32) -> u64 {
        Self::at(&self.strong, g as usize)
    }

    pub fn s_gh(&self, g: u32, h: u32) -> u64 {
        self.s_of_gh.get(g as usize).map_or(0, |row| Self::at(row, h as usize))
    }

    /// `ns(F)`; complete for `F ≤ max_genus` (or the Frobenius cap).
    pub fn ns(&self, f: u32) -> u64 {
        Self::at(&self.ns_of_f, f as usize)
    }

    /// `Σ_{S ∈ 𝒩_g} C(h(S) - 1, 2)` with the polynomial binomial, so `h = 0`
    /// contributes 1.
    pub fn ye_correction(&self, g: u32) -> u64 {
        Self::at(&self.ye_correction, g as usize)
    }

    /// Count by `(g, m, F)`; `None` when the table was built without it.
    pub fn n_mfg(&self, g: u32, m: u32, f: u32) -> Option<u64> {
        let table = self.mfg.as_ref()?;
        let row = table.get(g as usize)?;
        let w = 2 * g as usize + 1;
        if f as usize >= w {
            return Some(0);
        }
        Some(Self::at(row, m as usize * w + f as usize))
    }

    pub fn has_mfg(&self) -> bool {
        self.mfg.is_some()
    }

    pub fn strongly_descended_census(&self) -> Result<StrongCensus> {
        let top = self.complete_through();
        if self.max_frobenius.is_some() && top < self.max_genus {
            return Err(Error::IncompleteTable { requested: self.max_genus, available: top });
        }
        let mut r = vec![(-1, 1), (0, 1)];
        let mut n = 1i64;
        while 2 * n < i64::from(top) {
            r.push((n, self.s_gh(2 * n as u32 + 1, n as u32 + 1)));
            n += 1;
        }
        Ok(StrongCensus {
            strong: self.strong[..=top as usize].to_vec(),
            s_of_gh: self.s_of_gh[..=top as usize].to_vec(),
            r,
        })
    }

    /// Internal consistency of completed levels: both marginals of `N(g)`,
    /// and `Σ_h h·t(g,h) = N(g+1)`. Returns the failing genera.
    pub fn consistency_violations(&self) -> Vec<u32> {
        let top = self.complete_through();
        (0..=top)
            .filter(|&g| {
                let row = g as usize;
                let n = self.n_of_g[row];
                let by_m: u64 = self.n_of_mg[row].iter().sum();
                let by_h: u64 = self.t_of_gh[row].iter().sum();
                let children: u64 = self.t_of_gh[row].iter().enumerate().map(|(h, &c)| h as u64 * c).sum();
                n != by_m || n != by_h || (g < top && children != self.n_of_g[row + 1])
            })
            .collect()
    }

    pub fn to_table(&self, by: CountBy) -> Table {
        let top = self.complete_through();
        match by {
            CountBy::Genus => {
                let mut t = Table::new(&["genus", "count"]);
                for g in 0..=top {
                    t.push(vec![Cell::from(g), Cell::from(self.n(g))]);
                }
                t
            }
            CountBy::Multiplicity => {
                let mut t = Table::new(&["m", "g", "count"]);
                for m in 1..=top + 1 {
                    for g in 0..=top {
                        let c = self.n_mg(m, g);
                        if c > 0 {
                            t.push(vec![Cell::from(m), Cell::from(g), Cell::from(c)]);
                        }
                    }
                }
                t
            }
            CountBy::Efficacy => {
                let mut t = Table::new(&["g", "h", "count"]);
                for g in 0..=top {
                    for h in 0..=g + 1 {
                        let c = self.t_gh(g, h);
                        if c > 0 {
                            t.push(vec![Cell::from(g), Cell::from(h), Cell::from(c)]);
                        }
                    }
                }
                t
            }
            CountBy::Frobenius => {
                let mut t = Table::new(&["F", "count"]);
                let last = self.max_frobenius.unwrap_or(self.max_genus);
                for f in 1..=last {
                    t.push(vec![Cell::from(f), Cell::from(self.ns(f))]);
                }
                t
            }
        }
    }

    fn same_shape(&self, other: &Self) -> bool {
        self.max_genus == other.max_genus
            && self.max_frobenius == other.max_frobenius
            && self.mfg.is_some() == other.mfg.is_some()
    }
}

fn add_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d += s;
    }
}

fn add_rows(dst: &mut [Vec<u64>], src: &[Vec<u64>]) {
    for (d, s) in dst.iter_mut().zip(src) {
        add_into(d, s);
    }
}

impl Collector for CensusTable {
    fn fork(&self) -> Self {
        let mut t = Self::new(
            self.max_genus,
            CensusOptions { by_multiplicity_and_frobenius: self.mfg.is_some() },
        );
        t.max_frobenius = self.max_frobenius;
        t
    }

    fn visit(&mut self, f: &TreeFrame<'_>) {
        let g = f.genus() as usize;
        let m = f.multiplicity() as usize;
        let h = f.efficacy();
        let fr = i64::from(f.frobenius());
        self.n_of_g[g] += 1;
        self.n_of_mg[g][m] += 1;
        self.t_of_gh[g][h] += 1;
        if fr < 2 * m as i64 {
            self.f_lt_2m[g] += 1;
        }
        if fr < 3 * m as i64 {
            self.f_lt_3m[g] += 1;
        }
        if f.is_strongly_descended() {
            self.strong[g] += 1;
            self.s_of_gh[g][h] += 1;
        }
        if fr >= 0 {
            self.ns_of_f[fr as usize] += 1;
        }
        let h = h as i64;
        self.ye_correction[g] += ((h - 1) * (h - 2) / 2) as u64;
        if let Some(mfg) = self.mfg.as_mut() {
            if fr >= 0 {
                mfg[g][m * (2 * g + 1) + fr as usize] += 1;
            }
        }
    }

    fn merge(&mut self, other: Self) {
        assert!(self.same_shape(&other), "merging census tables of different shape");
        add_into(&mut self.n_of_g, &other.n_of_g);
        add_rows(&mut self.n_of_mg, &other.n_of_mg);
        add_rows(&mut self.t_of_gh, &other.t_of_gh);
        add_into(&mut self.f_lt_2m, &other.f_lt_2m);
        add_into(&mut self.f_lt_3m, &other.f_lt_3m);
        add_into(&mut self.strong, &other.strong);
        add_rows(&mut self.s_of_gh, &other.s_of_gh);
        add_into(&mut self.ns_of_f, &other.ns_of_f);
        add_into(&mut self.ye_correction, &other.ye_correction);
        if let (Some(a), Some(b)) = (self.mfg.as_mut(), other.mfg.as_ref()) {
            add_rows(a, b);
        }
    }
}
