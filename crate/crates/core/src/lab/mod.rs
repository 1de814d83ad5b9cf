//! Finite-range checks of the counting identities and conjectures, each run
//! over an enumerated census and reported as a table plus witnesses.

pub mod buchweitz;
pub mod concentration;
pub mod ordinarization;
pub mod pflueger;
pub mod ratios;
pub mod wilf;
pub mod witness;
pub mod ye;
pub mod zhai;

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::kunz::{count_by_polytope, recurrence_bijection_check};
use crate::table::{Cell, Table};
use crate::tree::{enumerate, CensusOptions, CensusTable, EnumConfig};
use witness::cell_witness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Wilf,
    Ye,
    BrasAmoros,
    Ordinarization,
    Pflueger,
    ZhaiLemma,
    KunzOracle,
    Recurrence,
    Buchweitz,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Wilf,
        Check::Ye,
        Check::BrasAmoros,
        Check::Ordinarization,
        Check::Pflueger,
        Check::ZhaiLemma,
        Check::KunzOracle,
        Check::Recurrence,
        Check::Buchweitz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Wilf => "wilf",
            Check::Ye => "ye",
            Check::BrasAmoros => "bras-amoros",
            Check::Ordinarization => "ordinarization",
            Check::Pflueger => "pflueger",
            Check::ZhaiLemma => "zhai-lemma",
            Check::KunzOracle => "kunz-oracle",
            Check::Recurrence => "recurrence",
            Check::Buchweitz => "buchweitz",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::PreconditionViolated(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepParams {
    pub max_genus: u32,
    /// Frobenius cap for `zhai-lemma`; defaults to `max_genus`.
    pub max_frobenius: Option<u32>,
    /// Largest multiplicity for `kunz-oracle` and the monotonicity in `m`.
    pub max_multiplicity: u32,
    pub split_depth: u32,
    pub workers: usize,
}

impl SweepParams {
    pub fn new(max_genus: u32) -> Self {
        Self { max_genus, max_frobenius: None, max_multiplicity: 9, split_depth: 0, workers: 1 }
    }

    pub fn split(mut self, split_depth: u32, workers: usize) -> Self {
        self.split_depth = split_depth;
        self.workers = workers.max(1);
        self
    }

    fn config(&self, max_genus: u32) -> EnumConfig {
        EnumConfig::new(max_genus).split(self.split_depth.min(max_genus), self.workers)
    }

    fn census(&self, max_genus: u32) -> Result<CensusTable> {
        enumerate(&self.config(max_genus), CensusTable::new(max_genus, CensusOptions::default()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub name: &'static str,
    pub range: Map<String, Value>,
    pub table: Table,
    /// At most [`witness::WITNESS_CAP`] per collector; see `violation_count`.
    pub violations: Vec<Value>,
    pub violation_count: u64,
    pub stats: Map<String, Value>,
}

impl VerificationReport {
    fn new(check: Check, params: &SweepParams, table: Table) -> Self {
        let mut range = Map::new();
        range.insert("max_genus".into(), params.max_genus.into());
        Self {
            name: check.name(),
            range,
            table,
            violations: Vec::new(),
            violation_count: 0,
            stats: Map::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    /// One-line JSON summary: name, range, violation count and stats.
    pub fn summary(&self) -> Value {
        json!({
            "check": self.name,
            "range": self.range,
            "passed": self.passed(),
            "violations": self.violation_count,
            "stats": self.stats,
        })
    }

    fn flag(&mut self, witness: Value) {
        self.violations.push(witness);
        self.violation_count += 1;
    }
}

pub fn run(check: Check, params: &SweepParams) -> Result<VerificationReport> {
    let g = params.max_genus;
    match check {
        Check::Wilf => {
            let c = enumerate(&params.config(g), wilf::WilfCollector::new(g))?;
            let mut r = VerificationReport::new(check, params, c.table());
            r.violations = c.witnesses.to_json(check.name());
            r.violation_count = c.total_violations();
            r.stats.insert("equalities".into(), c.equalities.iter().sum::<u64>().into());
            Ok(r)
        }
        Check::Ye => {
            let census = params.census(g + 2)?;
            let mut t = Table::new(&["g", "lhs", "rhs", "holds", "corollary"]);
            let mut rows = Vec::new();
            for x in 0..=g {
                let y = ye::ye_identity(x, &census)?;
                t.push(vec![
                    Cell::from(x),
                    Cell::Int(y.lhs as i64),
                    Cell::Int(y.rhs as i64),
                    Cell::from(y.holds),
                    Cell::from(y.corollary),
                ]);
                rows.push(y);
            }
            let mut r = VerificationReport::new(check, params, t);
            for y in rows.into_iter().filter(|y| !y.holds || !y.corollary) {
                r.flag(cell_witness(
                    check.name(),
                    &[("g", y.g.into()), ("lhs", (y.lhs as i64).into()), ("rhs", (y.rhs as i64).into())],
                ));
            }
            Ok(r)
        }
        Check::BrasAmoros => {
            let census = params.census(g)?;
            let mut r = VerificationReport::new(check, params, ratios::ratio_table(&census));
            for x in ratios::bras_amoros_violations(&census) {
                r.flag(cell_witness("bras-amoros", &[("g", x.into()), ("n", census.n(x).into())]));
            }
            for x in ratios::growth_violations(&census) {
                r.flag(cell_witness("growth", &[("g", x.into()), ("n", census.n(x).into())]));
            }
            for (m, x) in ratios::kaplan_violations(&census, params.max_multiplicity) {
                r.flag(cell_witness("kaplan", &[("m", m.into()), ("g", x.into())]));
            }
            r.range.insert("max_multiplicity".into(), params.max_multiplicity.into());
            if g >= 1 {
                r.stats.insert("last_phi_ratio".into(), (census.n(g) as f64 / census.n(g - 1) as f64).into());
            }
            Ok(r)
        }
        Check::Ordinarization => {
            let c = enumerate(&params.config(g + 1), ordinarization::OrdinarizationCensus::new(g + 1))?;
            let mut r = VerificationReport::new(check, params, c.table());
            for (x, rr) in c.monotonicity_violations() {
                r.flag(cell_witness(
                    check.name(),
                    &[("g", x.into()), ("r", rr.into()), ("n_g", c.n(x, rr).into()), ("n_g1", c.n(x + 1, rr).into())],
                ));
            }
            let max_r = c.counts.iter().map(|row| row.len().saturating_sub(1)).max().unwrap_or(0);
            r.stats.insert("max_ordinarization_number".into(), max_r.into());
            Ok(r)
        }
        Check::Pflueger => {
            let c = enumerate(&params.config(g), pflueger::PfluegerCollector::new(g))?;
            let mut r = VerificationReport::new(check, params, c.table());
            r.violations = c.witnesses.to_json(check.name());
            r.violation_count = c.total_violations();
            Ok(r)
        }
        Check::ZhaiLemma => {
            let fmax = params.max_frobenius.unwrap_or(g);
            let config = EnumConfig::by_frobenius(fmax).split(params.split_depth.min(fmax), params.workers);
            let classes = enumerate(&config, zhai::StrongClasses::default())?;
            let mut t = Table::new(&["m", "F", "class_size", "lhs", "rhs", "holds"]);
            let mut r = VerificationReport::new(check, params, Table::new(&[]));
            r.range.insert("max_frobenius".into(), fmax.into());
            let mut worst = 0f64;
            for m in 2..fmax {
                for f in m + 1..=fmax {
                    if f % m == 0 {
                        continue;
                    }
                    let z = zhai::zhai_lemma_check(m, f as i32, &classes)?;
                    worst = worst.max(z.lhs / z.rhs);
                    t.push(vec![
                        Cell::from(m),
                        Cell::from(f),
                        Cell::from(z.class_size),
                        Cell::from(z.lhs),
                        Cell::from(z.rhs),
                        Cell::from(z.holds),
                    ]);
                    if !z.holds {
                        r.flag(cell_witness(
                            check.name(),
                            &[("m", m.into()), ("F", f.into()), ("lhs", z.lhs.into()), ("rhs", z.rhs.into())],
                        ));
                    }
                }
            }
            r.table = t;
            r.stats.insert("max_lhs_over_rhs".into(), worst.into());
            Ok(r)
        }
        Check::KunzOracle => {
            let census = params.census(g)?;
            let mut t = Table::new(&["m", "g", "count_polytope", "count_tree", "match"]);
            let mut r = VerificationReport::new(check, params, Table::new(&[]));
            r.range.insert("max_multiplicity".into(), params.max_multiplicity.into());
            for m in 2..=params.max_multiplicity {
                for x in 1..=g {
                    let poly = count_by_polytope(m, u64::from(x));
                    let tree = census.n_mg(m, x);
                    t.push(vec![Cell::from(m), Cell::from(x), Cell::from(poly), Cell::from(tree), Cell::from(poly == tree)]);
                    if poly != tree {
                        r.flag(cell_witness(
                            check.name(),
                            &[("m", m.into()), ("g", x.into()), ("count_polytope", poly.into()), ("count_tree", tree.into())],
                        ));
                    }
                }
            }
            r.table = t;
            Ok(r)
        }
        Check::Recurrence => {
            let census = params.census(g)?;
            let mut t = Table::new(&["m", "g", "lhs", "rhs", "match"]);
            let mut r = VerificationReport::new(check, params, Table::new(&[]));
            let mut cells = 0u64;
            for x in 1..=g {
                for m in 2..=x + 2 {
                    if 2 * x >= 3 * m {
                        continue;
                    }
                    let lhs = census.n_mg(m - 1, x - 1) + if x >= 2 { census.n_mg(m - 1, x - 2) } else { 0 };
                    let rhs = census.n_mg(m, x);
                    cells += 1;
                    t.push(vec![Cell::from(m), Cell::from(x), Cell::from(lhs), Cell::from(rhs), Cell::from(lhs == rhs)]);
                    if lhs != rhs {
                        r.flag(cell_witness(
                            check.name(),
                            &[("m", m.into()), ("g", x.into()), ("lhs", lhs.into()), ("rhs", rhs.into())],
                        ));
                    }
                    if m >= 3 {
                        let b = recurrence_bijection_check(m, u64::from(x))?;
                        if !b.holds() {
                            r.flag(cell_witness(
                                "kunz-truncation",
                                &[
                                    ("m", m.into()),
                                    ("g", x.into()),
                                    ("mismatches", serde_json::to_value(&b.witnesses).expect("serializes")),
                                ],
                            ));
                        }
                    }
                }
            }
            r.table = t;
            r.stats.insert("cells".into(), cells.into());
            Ok(r)
        }
        Check::Buchweitz => {
            let c = enumerate(&params.config(g), buchweitz::BuchweitzCollector::new(g))?;
            let mut r = VerificationReport::new(check, params, c.table());
            // Failures are data here, not violations: the criterion is known to
            // fail for some semigroups.
            r.stats.insert("failures".into(), c.total_failures().into());
            r.stats.insert("first_failing_genus".into(), c.first_failing_genus().map_or(Value::Null, Value::from));
            r.stats.insert("examples".into(), Value::Array(c.witnesses.to_json(check.name()).into_iter().take(8).collect()));
            Ok(r)
        }
    }
}
