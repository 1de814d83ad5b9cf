//! Acceptance criteria, one line each. Runs without the libtest harness so
//! every criterion reports even when an earlier one fails.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, Output};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use sgforge_core::closed_forms::{fibonacci, global_bounds, zhao_lower_bound};
use sgforge_core::kunz::{count_by_polytope, kunz_vector, kunz_vectors, recurrence_bijection_check, semigroup_from_kunz};
use sgforge_core::lab::{self, ye::ye_identity, Check, SweepParams};
use sgforge_core::tree::CensusOptions;
use sgforge_core::{enumerate, CensusTable, Collector, EnumConfig, TreeFrame};

const GENUS_COUNTS: [u64; 16] = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693, 2857];

/// `N(m, g)` for `1 ≤ g ≤ 10`, one row per genus starting at `m = 2`; the
/// remaining cell is ℕ₀ at `(m, g) = (1, 0)`.
const MULTIPLICITY_TABLE: [&[u64]; 10] = [
    &[1],
    &[1, 1],
    &[1, 2, 1],
    &[1, 2, 3, 1],
    &[1, 2, 4, 4, 1],
    &[1, 3, 6, 7, 5, 1],
    &[1, 3, 7, 10, 11, 6, 1],
    &[1, 3, 9, 13, 17, 16, 7, 1],
    &[1, 4, 11, 16, 27, 28, 22, 8, 1],
    &[1, 4, 13, 22, 37, 44, 44, 29, 9, 1],
];

fn census30() -> &'static CensusTable {
    static C: OnceLock<CensusTable> = OnceLock::new();
    C.get_or_init(|| enumerate(&EnumConfig::new(30), CensusTable::new(30, CensusOptions::default())).unwrap())
}

fn sgforge(args: &[&str]) -> (Output, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_sgforge"))
        .args(args)
        .env("SGFORGE_THREADS", "1")
        .output()
        .expect("binary runs");
    (out, start.elapsed())
}

fn sgforge_workers(args: &[&str], workers: usize) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgforge"))
        .args(args)
        .args(["--workers", &workers.to_string()])
        .env_remove("SGFORGE_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// `key,count` rows of a two-column CSV.
fn column(csv: &str) -> Vec<u64> {
    csv.lines().skip(1).map(|l| l.rsplit(',').next().unwrap().parse().unwrap()).collect()
}

fn within(d: Duration, limit: Duration, what: &str) -> String {
    assert!(d < limit, "{what} took {d:?}, limit {limit:?}");
    format!("{what} {:.2}s", d.as_secs_f64())
}

fn c1() -> String {
    let (out, t) = sgforge(&["count", "--max-genus", "15"]);
    assert!(out.status.success());
    let csv = stdout(&out);
    assert!(csv.starts_with("genus,count\n"));
    assert!(csv.ends_with("15,2857\n"));
    assert_eq!(column(&csv), GENUS_COUNTS);
    within(t, Duration::from_secs(1), "count --max-genus 15")
}

fn c2() -> String {
    let (out, t) = sgforge(&["count", "--max-genus", "10", "--by", "multiplicity"]);
    assert!(out.status.success());
    let mut got = BTreeSet::new();
    for line in stdout(&out).lines().skip(1) {
        let v: Vec<u64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        got.insert((v[0], v[1], v[2]));
    }
    let mut want = BTreeSet::new();
    want.insert((1, 0, 1));
    for (i, row) in MULTIPLICITY_TABLE.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            want.insert((j as u64 + 2, i as u64 + 1, c));
        }
    }
    // 55 cells with g ≥ 1, plus ℕ₀
    assert_eq!(want.len(), 56);
    assert_eq!(got, want);
    for cell in [(6, 9, 27), (8, 10, 44), (9, 10, 29)] {
        assert!(got.contains(&cell));
    }
    within(t, Duration::from_secs(1), "55 cells;")
}

/// Genus counts by exhaustive search over gap sets, independent of the tree.
fn brute_force_counts(max_genus: u32) -> Vec<u64> {
    (0..=max_genus)
        .map(|g| {
            if g == 0 {
                return 1;
            }
            let width = 2 * g - 1;
            let range = ((1u64 << width) - 1) << 1;
            let mut n = 0;
            let mut c: u64 = (1 << g) - 1;
            while c < 1 << width {
                let gaps = c << 1;
                let members = !gaps & range;
                if (1..=width).filter(|a| members >> a & 1 == 1).all(|a| (members << a) & gaps == 0) {
                    n += 1;
                }
                let low = c & c.wrapping_neg();
                let ripple = c + low;
                c = (((ripple ^ c) >> 2) / low) | ripple;
            }
            n
        })
        .collect()
}

fn c3() -> String {
    let (out, t) = sgforge(&["count", "--max-genus", "30", "--workers", "1", "--split-depth", "0"]);
    assert!(out.status.success());
    let base = stdout(&out);
    let counts = column(&base);
    assert_eq!(counts.len(), 31);
    assert_eq!(counts[..13], brute_force_counts(12)[..]);
    // independent count of N(30) by Kunz coordinates
    let kunz_total: u64 = (2..=31).map(|m| count_by_polytope(m, 30)).sum();
    assert_eq!(counts[30], kunz_total);
    for depth in ["0", "3", "6"] {
        for workers in [1, 4] {
            let o = sgforge_workers(&["count", "--max-genus", "30", "--split-depth", depth], workers);
            assert!(o.status.success());
            assert_eq!(stdout(&o), base, "split {depth}, workers {workers}");
        }
    }
    format!("N(30)={}; {}", counts[30], within(t, Duration::from_secs(60), "single thread"))
}

fn c4() -> String {
    let (small, t_small) = sgforge(&["count", "--max-genus", "6", "--by", "frobenius"]);
    let ns = column(&stdout(&small));
    assert_eq!((ns[4], ns[5]), (5, 4));
    assert!(t_small < Duration::from_secs(1));
    let (big, t) = sgforge(&["count", "--max-genus", "32", "--by", "frobenius", "--max-frobenius", "32"]);
    assert!(big.status.success());
    let ns = column(&stdout(&big));
    assert_eq!((ns[30], ns[31]), (70854, 68681));
    within(t, Duration::from_secs(600), "ns(31), ns(32)")
}

fn c5() -> String {
    let c = census30();
    for g in 1..=20 {
        assert_eq!(BigUint::from(c.f_lt_2m(g)), fibonacci(i64::from(g) + 1).unwrap(), "g={g}");
    }
    "g = 1..20".into()
}

fn c6() -> String {
    let c = census30();
    let mut clamped = 0;
    for g in 1..=25 {
        let z = zhao_lower_bound(g).unwrap();
        clamped += z.clamped_terms;
        assert!(z.value <= BigUint::from(c.t(g)), "g={g}");
        assert!(c.t(g) <= c.n(g));
    }
    format!("g = 1..25, clamped terms {clamped}")
}

fn c7() -> String {
    let c = census30();
    let mut cells = 0;
    for g in 1..=18u32 {
        for m in 2..=g + 2 {
            if 2 * g < 3 * m {
                let lhs = c.n_mg(m - 1, g - 1) + if g >= 2 { c.n_mg(m - 1, g - 2) } else { 0 };
                assert_eq!(lhs, c.n_mg(m, g), "m={m}, g={g}");
                cells += 1;
            }
        }
    }
    let mut maps = 0;
    for g in 1..=15u64 {
        for m in 3..=g as u32 + 2 {
            if 2 * g < 3 * u64::from(m) {
                let b = recurrence_bijection_check(m, g).unwrap();
                assert!(b.holds(), "m={m}, g={g}: {:?}", b.witnesses);
                maps += 1;
            }
        }
    }
    let (out, _) = sgforge(&["verify", "recurrence", "--max-genus", "18"]);
    assert_eq!(out.status.code(), Some(0));
    format!("{cells} cells, {maps} truncation maps")
}

fn c8() -> String {
    let c = census30();
    for m in 2..=9 {
        for g in 1..=15 {
            assert_eq!(count_by_polytope(m, u64::from(g)), c.n_mg(m, g), "m={m}, g={g}");
        }
    }
    for g in 0..=30u32 {
        let want = u64::from((g + 1).div_ceil(3));
        assert_eq!(c.n_mg(3, g), if g < 2 { 0 } else { want }, "g={g}");
        if g >= 2 {
            assert_eq!(count_by_polytope(3, u64::from(g)), want);
        }
    }
    "m = 2..9, g = 1..15; N(3, g) to 30".into()
}

fn c9() -> String {
    let c = census30();
    for g in 0..=20 {
        let y = ye_identity(g, c).unwrap();
        assert!(y.holds, "{y:?}");
        assert!(y.corollary, "{y:?}");
    }
    "g = 0..20".into()
}

fn c10() -> String {
    let sweeps: [&[&str]; 6] = [
        &["verify", "wilf", "--max-genus", "30"],
        &["verify", "bras-amoros", "--max-genus", "30"],
        &["verify", "ordinarization", "--max-genus", "17"],
        &["verify", "pflueger", "--max-genus", "25"],
        &["verify", "zhai-lemma", "--max-genus", "20", "--max-frobenius", "20"],
        &["verify", "bras-amoros", "--max-genus", "21", "--max-multiplicity", "9"],
    ];
    for args in sweeps {
        let (out, _) = sgforge(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let c = census30();
    for m in 2..=9 {
        for g in 0..=20 {
            assert!(c.n_mg(m, g) <= c.n_mg(m, g + 1), "Kaplan m={m}, g={g}");
        }
    }
    for g in 2..=30 {
        assert!(c.n(g) >= c.n(g - 1) + c.n(g - 2));
    }
    let r = lab::run(Check::Ordinarization, &SweepParams::new(17)).unwrap();
    assert!(r.passed());
    "six sweeps exit 0".into()
}

fn c11() -> String {
    let c = census30();
    for g in 3..=30 {
        let (lo, hi) = global_bounds(g).unwrap();
        let n = BigUint::from(c.n(g));
        assert!(lo <= n && n <= hi, "g={g}");
    }
    let (lo, hi) = global_bounds(3).unwrap();
    assert_eq!((lo, hi), (BigUint::from(4u32), BigUint::from(4u32)));
    assert_eq!(c.n(3), 4);
    "g = 3..30".into()
}

fn c12() -> String {
    let c = census30();
    let mut seen = Vec::new();
    for g in 25..=30 {
        let r = c.n(g) as f64 / c.n(g - 1) as f64;
        assert!((1.55..=1.70).contains(&r), "g={g}: {r}");
        seen.push(format!("{r:.4}"));
    }
    seen.join(" ")
}

fn c13() -> String {
    let mut vectors = 0;
    for m in 2..=6 {
        for g in 0..=12u64 {
            for k in kunz_vectors(m, g) {
                let s = semigroup_from_kunz(m, &k).unwrap();
                assert_eq!(kunz_vector(&s).unwrap().coords(), &k[..]);
                vectors += 1;
            }
        }
    }
    struct Sizes(u64);
    impl Collector for Sizes {
        fn fork(&self) -> Self {
            Sizes(0)
        }
        fn visit(&mut self, f: &TreeFrame<'_>) {
            let s = f.to_semigroup();
            let w = s.weight_data();
            assert_eq!(w.partition.size(), w.weight + u64::from(s.genus()), "{s}");
            self.0 += 1;
        }
        fn merge(&mut self, other: Self) {
            self.0 += other.0;
        }
    }
    let n = enumerate(&EnumConfig::new(12), Sizes(0)).unwrap().0;
    format!("{vectors} Kunz vectors, {n} partitions")
}

type Criterion = (&'static str, fn() -> String);

fn main() {
    let criteria: [Criterion; 13] = [
        ("genus counts to 15", c1),
        ("multiplicity table to genus 10", c2),
        ("genus 30 count, oracles, determinism", c3),
        ("ns(F)", c4),
        ("F < 2m count is Fibonacci", c5),
        ("Zhao bound below t(g)", c6),
        ("2g < 3m recurrence and truncation", c7),
        ("Kunz polytope counts", c8),
        ("Ye identity", c9),
        ("conjecture sweeps", c10),
        ("global bounds", c11),
        ("ratio band", c12),
        ("structural round trips", c13),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(run));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2} FAIL  {name}: {msg} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
