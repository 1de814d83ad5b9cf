use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::{Collector, TreeFrame};

const PHI: f64 = 1.618_033_988_749_895;

/// Strongly descended semigroups by `(m, F, g - h)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StrongClasses {
    counts: BTreeMap<(u32, i32, i64), u64>,
}

impl StrongClasses {
    pub fn class_size(&self, m: u32, f: i32) -> u64 {
        self.counts.range((m, f, i64::MIN)..=(m, f, i64::MAX)).map(|(_, c)| c).sum()
    }
}

impl Collector for StrongClasses {
    fn fork(&self) -> Self {
        Self::default()
    }

    fn visit(&mut self, f: &TreeFrame<'_>) {
        if f.is_strongly_descended() && f.genus() > 0 {
            let excess = i64::from(f.genus()) - f.efficacy() as i64;
            *self.counts.entry((f.multiplicity(), f.frobenius(), excess)).or_default() += 1;
        }
    }

    fn merge(&mut self, other: Self) {
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ZhaiCheck {
    pub m: u32,
    pub f: i32,
    pub class_size: u64,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// `Σ_{S ∈ 𝒮(m,F)} φ^{-(g-h)} ≤ 5(F - m + 2)(1.618/φ)^{F-m-1}`; the
/// right-hand side keeps the literal 1.618.
pub fn zhai_lemma_check(m: u32, f: i32, classes: &StrongClasses) -> Result<ZhaiCheck> {
    if m < 2 || f <= m as i32 || f % m as i32 == 0 {
        return Err(Error::PreconditionViolated(format!("need m >= 2, F > m, m does not divide F; got m={m}, F={f}")));
    }
    let lhs: f64 = classes
        .counts
        .range((m, f, i64::MIN)..=(m, f, i64::MAX))
        .map(|(&(_, _, excess), &c)| c as f64 * PHI.powi(-(excess as i32)))
        .sum();
    let d = f - m as i32;
    let rhs = 5.0 * f64::from(d + 2) * (1.618 / PHI).powi(d - 1);
    Ok(ZhaiCheck { m, f, class_size: classes.class_size(m, f), lhs, rhs, holds: lhs <= rhs + 1e-9 })
}
