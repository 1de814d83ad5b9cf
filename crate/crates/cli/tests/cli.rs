use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgforge"))
        .args(args)
        .env_remove("SGFORGE_THREADS")
        .output()
        .unwrap()
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8(bytes.to_vec()).unwrap()
}

#[test]
fn inspect_records() {
    let out = run(&["inspect", "2", "5"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["genus"], 2);
    assert_eq!(v["frobenius"], 3);
    assert_eq!(v["kunz"], serde_json::json!([2]));
    assert_eq!(v["wilf"]["holds"], true);

    let out = run(&["inspect", "<3,4>"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["efficacy"], 0);
    assert_eq!(v["partition"], serde_json::json!([3, 1, 1]));
}

#[test]
fn inspect_rejects_bad_input() {
    let out = run(&["inspect", "2", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(text(&out.stderr).contains("gcd 2"));
    assert_eq!(run(&["inspect", "2", "x"]).status.code(), Some(1));
    assert_eq!(run(&["inspect"]).status.code(), Some(1));
}

#[test]
fn count_tables() {
    let out = run(&["count", "--max-genus", "0", "--by", "genus"]);
    assert_eq!(text(&out.stdout), "genus,count\n0,1\n");
    let out = run(&["count", "--max-genus", "10", "--by", "multiplicity"]);
    assert!(text(&out.stdout).lines().any(|l| l == "7,10,44"));
    let out = run(&["count", "--max-genus", "3", "--by", "efficacy"]);
    assert_eq!(text(&out.stdout), "g,h,count\n0,1,1\n1,2,1\n2,1,1\n2,3,1\n3,0,1\n3,1,1\n3,2,1\n3,4,1\n");
    let out = run(&["count", "--max-genus", "2", "--format", "json"]);
    assert_eq!(text(&out.stdout), "[{\"genus\":0,\"count\":1},{\"genus\":1,\"count\":1},{\"genus\":2,\"count\":2}]\n");
}

#[test]
fn count_to_file() {
    let dir = std::env::temp_dir().join(format!("sgforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ns.csv");
    let out = run(&["count", "--max-genus", "6", "--by", "frobenius", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "F,count\n1,1\n2,1\n3,2\n4,2\n5,5\n6,4\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn worker_settings() {
    let a = run(&["count", "--max-genus", "18", "--workers", "1"]);
    let b = run(&["count", "--max-genus", "18", "--workers", "3", "--split-depth", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_sgforge"))
        .args(["count", "--max-genus", "4", "--workers", "2"])
        .env("SGFORGE_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(1));
    assert!(text(&env.stderr).contains("SGFORGE_THREADS"));
    assert_eq!(run(&["count", "--max-genus", "4", "--split-depth", "9"]).status.code(), Some(1));
    assert_eq!(run(&["count", "--max-genus", "4", "--workers", "0"]).status.code(), Some(1));
    assert_eq!(run(&["count", "--max-genus", "4", "--by", "weight"]).status.code(), Some(1));
}

#[test]
fn verify_contract() {
    let out = run(&["verify", "wilf", "--max-genus", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let csv = text(&out.stdout);
    assert!(csv.starts_with("g,violations\n0,0\n"));
    let summary: serde_json::Value = serde_json::from_str(text(&out.stderr).trim()).unwrap();
    assert_eq!(summary["check"], "wilf");
    assert_eq!(summary["passed"], true);

    let out = run(&["verify", "kunz-oracle", "--max-genus", "15"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out.stdout).lines().skip(1).all(|l| l.ends_with(",1")));

    let out = run(&["verify", "buchweitz", "--max-genus", "16"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out.stdout).lines().any(|l| l == "16,2,4806"));

    assert_eq!(run(&["verify", "riemann", "--max-genus", "3"]).status.code(), Some(1));
    let out = run(&["verify", "ordinarization", "--max-genus", "6", "--format", "json"]);
    assert!(text(&out.stdout).starts_with("[{\"g\":0,\"r\":0,\"count\":1}"));
}

#[test]
fn reports() {
    let out = run(&["report", "bounds", "--max-genus", "4"]);
    assert_eq!(text(&out.stdout), "g,fib_lower,zhao_lower,t_g,N_g,upper\n3,4,4,4,4,4\n4,6,6,6,7,7\n");
    let out = run(&["report", "parity", "--max-genus", "6"]);
    assert_eq!(text(&out.stdout), "k,ns_odd,ns_even\n1,2,1\n2,5,2\n");
    let out = run(&["report", "concentration", "--max-genus", "5", "--epsilon", "0.5"]);
    assert!(text(&out.stdout).starts_with("g,frobenius_fraction,multiplicity_fraction,frac_2g_lt_3m\n1,0.000000000000,"));
}
