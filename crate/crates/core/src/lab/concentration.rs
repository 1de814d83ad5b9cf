use serde::Serialize;

use crate::error::{Error, Result};
use crate::table::{Cell, Table};
use crate::tree::CensusTable;

/// `(5 + √5) / 10`
pub fn gamma() -> f64 {
    (5.0 + 5f64.sqrt()) / 10.0
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConcentrationRow {
    pub g: u32,
    /// Fraction with `(2-ε)m < F < (2+ε)m`.
    pub frobenius_fraction: f64,
    /// Fraction with `(γ-ε)g < m < (γ+ε)g`.
    pub multiplicity_fraction: f64,
    /// Fraction with `2g < 3m`.
    pub below_three_halves: f64,
}

/// Per-genus fractions from the `(g, m, F)` histogram, for `1 ≤ g` up to
/// the last complete level.
pub fn concentration_stats(census: &CensusTable, eps: f64) -> Result<Vec<ConcentrationRow>> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::PreconditionViolated(format!("epsilon must lie in (0, 1), got {eps}")));
    }
    if !census.has_mfg() {
        return Err(Error::PreconditionViolated("census was built without the (g, m, F) histogram".into()));
    }
    let gamma = gamma();
    let mut rows = Vec::new();
    for g in 1..=census.complete_through() {
        let total = census.n(g) as f64;
        let (mut a, mut phi, mut low) = (0u64, 0u64, 0u64);
        let gf = f64::from(g);
        for m in 2..=g + 1 {
            let mf = f64::from(m);
            let in_band = (gamma - eps) * gf < mf && mf < (gamma + eps) * gf;
            for f in 1..2 * g {
                let c = census.n_mfg(g, m, f).unwrap_or(0);
                if c == 0 {
                    continue;
                }
                let ff = f64::from(f);
                if (2.0 - eps) * mf < ff && ff < (2.0 + eps) * mf {
                    a += c;
                }
                if in_band {
                    phi += c;
                }
                if 2 * g < 3 * m {
                    low += c;
                }
            }
        }
        rows.push(ConcentrationRow {
            g,
            frobenius_fraction: a as f64 / total,
            multiplicity_fraction: phi as f64 / total,
            below_three_halves: low as f64 / total,
        });
    }
    Ok(rows)
}

pub fn concentration_table(rows: &[ConcentrationRow]) -> Table {
    let mut t = Table::new(&["g", "frobenius_fraction", "multiplicity_fraction", "frac_2g_lt_3m"]);
    for r in rows {
        t.push(vec![
            Cell::from(r.g),
            Cell::from(r.frobenius_fraction),
            Cell::from(r.multiplicity_fraction),
            Cell::from(r.below_three_halves),
        ]);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{enumerate, CensusOptions, EnumConfig};

    #[test]
    fn small_levels() {
        let opts = CensusOptions { by_multiplicity_and_frobenius: true };
        let c = enumerate(&EnumConfig::new(12), CensusTable::new(12, opts)).unwrap();
        let rows = concentration_stats(&c, 0.5).unwrap();
        // <2,3>: F/m = 1/2
        assert_eq!(rows[0].frobenius_fraction, 0.0);
        // <2,3>: 2·1 < 3·2
        assert_eq!(rows[0].below_three_halves, 1.0);
        for eps in [0.01, 0.25, 0.5, 0.999] {
            for r in concentration_stats(&c, eps).unwrap() {
                for v in [r.frobenius_fraction, r.multiplicity_fraction, r.below_three_halves] {
                    assert!((0.0..=1.0).contains(&v));
                }
            }
        }
        let plain = enumerate(&EnumConfig::new(4), CensusTable::new(4, CensusOptions::default())).unwrap();
        assert!(concentration_stats(&plain, 0.5).is_err());
        assert!(concentration_stats(&c, 1.0).is_err());
    }
}
