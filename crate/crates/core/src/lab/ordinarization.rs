use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::table::{Cell, Table};
use crate::tree::{Collector, TreeFrame};

/// `(S ∪ {F}) \ {m}`.
pub fn ordinarize(s: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    if s.is_ordinary() {
        return Err(Error::AlreadyOrdinary);
    }
    let mut members = s.membership().to_vec();
    members[s.frobenius() as usize] = true;
    members[s.multiplicity() as usize] = false;
    Ok(NumericalSemigroup::from_closed_table(members))
}

/// Steps of [`ordinarize`] until the ordinary semigroup is reached.
pub fn ordinarization_number(s: &NumericalSemigroup) -> u32 {
    ordinarization_number_of_table(s.membership().to_vec())
}

/// Same iteration on a bare membership table whose tail is all members.
fn ordinarization_number_of_table(mut members: Vec<bool>) -> u32 {
    let mut steps = 0;
    loop {
        let m = members.iter().skip(1).position(|&b| b).map_or(members.len(), |p| p + 1);
        let f = members.iter().rposition(|&b| !b);
        match f {
            Some(f) if f > m => {
                members[f] = true;
                members[m] = false;
                steps += 1;
            }
            _ => return steps,
        }
    }
}

/// `n_{g,r}`, indexed `[g][r]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdinarizationCensus {
    pub counts: Vec<Vec<u64>>,
}

impl OrdinarizationCensus {
    pub fn new(max_genus: u32) -> Self {
        Self { counts: vec![Vec::new(); max_genus as usize + 1] }
    }

    pub fn n(&self, g: u32, r: u32) -> u64 {
        self.counts.get(g as usize).and_then(|row| row.get(r as usize)).copied().unwrap_or(0)
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(&["g", "r", "count"]);
        for (g, row) in self.counts.iter().enumerate() {
            for (r, &c) in row.iter().enumerate() {
                if c > 0 {
                    t.push(vec![Cell::from(g), Cell::from(r), Cell::from(c)]);
                }
            }
        }
        t
    }

    /// Cells `(g, r)` with `n_{g,r} > n_{g+1,r}`.
    pub fn monotonicity_violations(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for g in 0..self.counts.len().saturating_sub(1) {
            for r in 0..self.counts[g].len() {
                if self.n(g as u32, r as u32) > self.n(g as u32 + 1, r as u32) {
                    out.push((g as u32, r as u32));
                }
            }
        }
        out
    }
}

impl Collector for OrdinarizationCensus {
    fn fork(&self) -> Self {
        Self::new(self.counts.len() as u32 - 1)
    }

    fn visit(&mut self, f: &TreeFrame<'_>) {
        let table: Vec<bool> = (0..=(f.frobenius() + 1).max(1) as u64).map(|x| f.contains(x)).collect();
        let r = ordinarization_number_of_table(table) as usize;
        let row = &mut self.counts[f.genus() as usize];
        if row.len() <= r {
            row.resize(r + 1, 0);
        }
        row[r] += 1;
    }

    fn merge(&mut self, other: Self) {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            if a.len() < b.len() {
                a.resize(b.len(), 0);
            }
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }
    }
}
