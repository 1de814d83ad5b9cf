use crate::closed_forms::{global_bounds, zhao_lower_bound};
use crate::error::Result;
use crate::table::{Cell, Table};
use crate::tree::CensusTable;

/// `g,fib_ratio,phi_ratio` with `(N(g-1) + N(g-2)) / N(g)` and `N(g) / N(g-1)`.
pub fn ratio_table(census: &CensusTable) -> Table {
    let mut t = Table::new(&["g", "fib_ratio", "phi_ratio"]);
    for g in 2..=census.complete_through() {
        let (n, n1, n2) = (census.n(g) as f64, census.n(g - 1) as f64, census.n(g - 2) as f64);
        t.push(vec![Cell::from(g), Cell::from((n1 + n2) / n), Cell::from(n / n1)]);
    }
    t
}

/// Genera `g ≥ 2` with `N(g) < N(g-1) + N(g-2)`.
pub fn bras_amoros_violations(census: &CensusTable) -> Vec<u32> {
    (2..=census.complete_through()).filter(|&g| census.n(g) < census.n(g - 1) + census.n(g - 2)).collect()
}

/// Genera `g ≥ 1` with `N(g) < N(g-1)`.
pub fn growth_violations(census: &CensusTable) -> Vec<u32> {
    (1..=census.complete_through()).filter(|&g| census.n(g) < census.n(g - 1)).collect()
}

/// Cells `(m, g)` with `N(m, g) > N(m, g+1)`, for `2 ≤ m ≤ max_m` and `g + 1`
/// within the census.
pub fn kaplan_violations(census: &CensusTable, max_m: u32) -> Vec<(u32, u32)> {
    let top = census.complete_through();
    let mut out = Vec::new();
    for m in 2..=max_m {
        for g in 0..top {
            if census.n_mg(m, g) > census.n_mg(m, g + 1) {
                out.push((m, g));
            }
        }
    }
    out
}

/// `g,fib_lower,zhao_lower,t_g,N_g,upper` for `3 ≤ g`.
pub fn bounds_table(census: &CensusTable) -> Result<Table> {
    let mut t = Table::new(&["g", "fib_lower", "zhao_lower", "t_g", "N_g", "upper"]);
    for g in 3..=census.complete_through() {
        let (lower, upper) = global_bounds(g)?;
        let zhao = zhao_lower_bound(g)?;
        t.push(vec![
            Cell::from(g),
            Cell::from(&lower),
            Cell::from(&zhao.value),
            Cell::from(census.t(g)),
            Cell::from(census.n(g)),
            Cell::from(&upper),
        ]);
    }
    Ok(t)
}

/// `k,ns_odd,ns_even` with `ns(2k+1)` and `ns(2k)`, for `k ≥ 1` while both
/// are complete.
pub fn parity_table(census: &CensusTable, max_frobenius: u32) -> Table {
    let mut t = Table::new(&["k", "ns_odd", "ns_even"]);
    for k in 1..=(max_frobenius.saturating_sub(1)) / 2 {
        t.push(vec![Cell::from(k), Cell::from(census.ns(2 * k + 1)), Cell::from(census.ns(2 * k))]);
    }
    t
}
