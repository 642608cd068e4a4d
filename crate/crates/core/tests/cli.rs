use std::process::{Command, Output};

fn ckforms(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ckforms"))
        .args(args)
        .env_remove("CKFORMS_SEED")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn verify_g2_json() {
    let o = ckforms(&["verify", "--suite", "g2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let check = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "g2.e.pr-lambda2")
        .unwrap();
    assert_eq!(check["expected"], "-9/10*(3e12+e47+e56)");
    assert_eq!(check["verdict"], "match");
    assert_eq!(v["overall"], "pass");
}

#[test]
fn verify_all_and_bad_suite() {
    let o = ckforms(&["verify", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("mismatch"));
    let bad = ckforms(&["verify", "--suite", "bogus"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("Usage"));
}

#[test]
fn seed_override() {
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_ckforms"))
            .args(["verify", "--suite", "axioms", "--format", "json"])
            .env("CKFORMS_SEED", seed)
            .output()
            .unwrap()
    };
    let o = run("12345");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"overall\": \"pass\""));
    let bad = run("not-a-number");
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).contains("CKFORMS_SEED"));
}

#[test]
fn eval_examples() {
    assert_eq!(stdout(&ckforms(&["eval", "e123", "--star"])), "e4567\n");
    assert_eq!(stdout(&ckforms(&["eval", "phi0", "--wedge", "phi0"])), "0\n");
    assert_eq!(
        stdout(&ckforms(&["eval", "e2", "--wedge", "phi0", "--star"])),
        "-e147 - e156 - e345 - e367\n"
    );
    assert_eq!(stdout(&ckforms(&["eval", "psi0", "--interior", "e0"])), "e123 + e145 + e167 + e246 - e257 - e347 - e356\n");
}

#[test]
fn eval_errors() {
    let o = ckforms(&["eval", "e12 + e3$"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("character 8"), "{}", stderr(&o));
    assert_eq!(ckforms(&["eval", "e1", "--wedge", "e01"]).status.code(), Some(3));
    assert_eq!(ckforms(&["eval", "e1 + e23"]).status.code(), Some(3));
}

#[test]
fn eval_json() {
    let o = ckforms(&["eval", "e1", "--wedge", "e2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 7);
    assert_eq!(v["degree"], 2);
    assert_eq!(v["form"], "e12");
}

#[test]
fn decompose_examples() {
    let o = ckforms(&["decompose", "e12", "--space", "lambda2-g2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1/3*(e12 - e47 - e56)"));

    let z = ckforms(&["decompose", "0", "--space", "lambda3-spin7"]);
    assert_eq!(z.status.code(), Some(0));
    assert!(stdout(&z).lines().all(|l| l.ends_with(" 0")), "{}", stdout(&z));

    let fin = "-24(e023+e045+e067) + 12(e247-e357+e256+e346)";
    let o = ckforms(&["decompose", fin, "--space", "lambda3-spin7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for c in v["components"].as_array().unwrap() {
        assert_ne!(c["value"], "0", "{c}");
    }
    for r in v["residuals"].as_array().unwrap() {
        assert_eq!(r["value"], "0", "{r}");
    }

    assert_eq!(ckforms(&["decompose", "e123", "--space", "lambda2-g2"]).status.code(), Some(3));
}

#[test]
fn rank_examples() {
    let t3 = stdout(&ckforms(&["rank", "t3"]));
    assert!(t3.contains("rank: 48") && t3.contains("kernel dimension: 1"), "{t3}");
    let t4 = stdout(&ckforms(&["rank", "t4"]));
    assert!(t4.contains("rank: 56") && t4.contains("kernel dimension: 0"), "{t4}");

    let v: serde_json::Value = serde_json::from_str(&stdout(&ckforms(&["rank", "t3", "--format", "json"]))).unwrap();
    assert_eq!(v["rank"], 48);
    assert_eq!(v["kernel_dim"], 1);
    let kernel: Vec<&str> = v["kernel"][0].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    // leading coefficient 1, one entry per e^i ⊗ *(e^i ∧ phi0)
    let expected: Vec<&str> = (0..49).map(|j| if j % 8 == 0 { "1" } else { "0" }).collect();
    assert_eq!(kernel, expected);

    assert_eq!(ckforms(&["rank", "t5"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = ckforms(&["verify", "--format", "json"]);
    let b = ckforms(&["verify", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}
