use std::io::Write;
use std::process::{Command, Output};

use hskein::intersect::lookup;
use hskein::paths::PathWord;
use hskein::present::{assemble_presentation, Bounds, Mode};
use hskein::Exec;
use hskein_cli::commands::{AnalyzePayload, ClosurePayload, LinkingPayload, PathPayload, PresentPayload};

fn hskein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hskein")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json<T: serde::de::DeserializeOwned>(args: &[&str]) -> (T, serde_json::Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = hskein(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let raw: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    (serde_json::from_value(raw.clone()).unwrap(), raw)
}

/// Typed payload serializes back to the exact JSON it was read from.
fn round_trips<T: serde::Serialize>(typed: &T, raw: &serde_json::Value) {
    assert_eq!(&serde_json::to_value(typed).unwrap(), raw);
}

#[test]
fn analyze_verdicts() {
    let o = hskein(&["analyze", "catalog:s1xd2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("H(M): FREE (abelian, 2b1=b1(∂))"));
    let o = hskein(&["analyze", "catalog:t3"]);
    assert!(stdout(&o).contains("H(M): TORSION"));
    assert!(stdout(&o).contains("pi2_zero = true"));
}

#[test]
fn malformed_descriptor_exits_2_with_position() {
    let mut f = tempfile();
    writeln!(f.1, "name = \"bad\"\n[pi1\nkind = \"free\"").unwrap();
    let o = hskein(&["analyze", f.0.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.starts_with("error: 2:"), "{err}");
}

#[test]
fn inconsistent_flags_exit_2() {
    let mut f = tempfile();
    let src = hskein::intersect::catalog_source("s2xs1")
        .unwrap()
        .replace("pi2_zero = false", "pi2_zero = true");
    write!(f.1, "{src}").unwrap();
    let o = hskein(&["analyze", f.0.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("sphere_subgroup"));
}

#[test]
fn unknown_manifold_exits_1() {
    assert_eq!(hskein(&["analyze", "catalog:nowhere"]).status.code(), Some(1));
}

#[test]
fn linking_examples() {
    let o = hskein(&["linking", "t3", "<1,b2>"]);
    assert!(stdout(&o).contains("λ=0, free"));
    let o = hskein(&["linking", "s2xs1", "<a,a,a^-1>"]);
    assert!(stdout(&o).contains("λ=2, annihilator q^4 - 1"));
    let o = hskein(&["linking", "t3", "<b1,b2,b3>"]);
    assert!(stdout(&o).contains("λ=1, annihilator q^2 - 1"));
    let o = hskein(&["linking", "f1xi", "<x,y>"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn path_eval_examples() {
    let o = hskein(&["path-eval", "events=(+1:<A>)", "--map", "s"]);
    assert_eq!(stdout(&o).trim(), "q*<A>");
    let o = hskein(&["path-eval", "start=<P>; events=(+1:<Z>); end=<M>", "--map", "sf"]);
    assert_eq!(stdout(&o).trim(), "q^2*<M> + z*q*<Z>");
    let o = hskein(&[
        "path-eval",
        "start=<K>; events=(+1:<A>)(-1:<B>); end=<K>",
        "--map",
        "sif",
    ]);
    assert_eq!(stdout(&o).trim(), "z*q*<A> - z*q*<B>");
    assert_eq!(hskein(&["path-eval", "events=(+2:<A>)"]).status.code(), Some(2));
}

#[test]
fn present_certifies_the_example_torsion_element() {
    let o = hskein(&["present", "t3", "--seeds", "<b1,b2,b3>", "--certify"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let line = text.lines().find(|l| l.starts_with("torsion: (z)")).expect(&text);
    assert!(
        line.contains("(q)*<b1*b2, b3>") && line.contains("(-q)*<b1*b3, b2>"),
        "{line}"
    );
}

#[test]
fn examples_command() {
    let o = hskein(&["examples", "6.6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.matches("PASS").count(), 2);
    assert!(text.contains("(q^2 - 1)*<b1, b2, b3>"));
    assert_eq!(hskein(&["examples", "9.9"]).status.code(), Some(1));
}

#[test]
fn catalog_listing() {
    let text = stdout(&hskein(&["catalog"]));
    for n in ["s3", "t3", "s2xs1", "lens-5-2", "f1xi"] {
        assert!(text.lines().any(|l| l == n), "{n}");
    }
    assert!(stdout(&hskein(&["catalog", "t3"])).contains("[[theta]]"));
    assert_eq!(hskein(&["catalog", "k3"]).status.code(), Some(1));
}

#[test]
fn env_sets_the_default_conjugator_bound() {
    let o = Command::new(env!("CARGO_BIN_EXE_hskein"))
        .args(["--json", "closure", "f1xi", "--seeds", "<x,y,x>"])
        .env("HSKEIN_CONJ_BOUND", "2")
        .output()
        .unwrap();
    let p: ClosurePayload = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(p.conj_bound, 2);
    let (narrow, _): (ClosurePayload, _) = json(&["closure", "f1xi", "--seeds", "<x,y,x>", "--conj-bound", "1"]);
    assert!(p.members.len() > narrow.members.len());
}

#[test]
fn payloads_round_trip() {
    let (a, raw): (AnalyzePayload, _) = json(&["analyze", "t3"]);
    round_trips(&a, &raw);
    assert_eq!(a.h, "TORSION");
    let (l, raw): (LinkingPayload, _) = json(&["linking", "s2xs1", "<a,a,a^-1>"]);
    round_trips(&l, &raw);
    assert_eq!((l.lambda, l.annihilator.as_str()), (2, "q^4 - 1"));
    let (c, raw): (ClosurePayload, _) = json(&["closure", "t3", "--seeds", "<b1,b2,b3>"]);
    round_trips(&c, &raw);
    assert_eq!(c.members.len(), 5);

    let (p, raw): (PathPayload, _) = json(&[
        "path-eval",
        "start=<K>; events=(+1:<A>)(+1:<B>); end=<L>",
        "--map",
        "sif",
    ]);
    round_trips(&p, &raw);
    let reparsed = PathWord::parse(&p.path, None).unwrap();
    assert_eq!(reparsed.index(), p.index);
    let value: Vec<(String, String)> = reparsed
        .s_if()
        .iter()
        .map(|(k, c)| (k.render(None), c.to_string()))
        .collect();
    assert_eq!(value, p.value);

    for mode in ["r", "ru"] {
        let (pp, raw): (PresentPayload, _) =
            json(&["present", "t3", "--seeds", "<b1,b2,b3>", "--mode", mode, "--certify"]);
        round_trips(&pp, &raw);
        let m = lookup("t3").unwrap();
        let direct = assemble_presentation(
            &m,
            &[m.wrap("<b1,b2,b3>").unwrap()],
            mode.parse::<Mode>().unwrap(),
            Bounds::default(),
            Exec::Sequential,
        )
        .unwrap();
        let rows = pp.presentation.parse_rows(&m.pi1).unwrap();
        let expected: Vec<_> = direct.rows.iter().map(|r| r.values.clone()).collect();
        assert_eq!(rows, expected);
    }
}

#[test]
fn sequential_flag_gives_identical_output() {
    let args = ["present", "t3", "--seeds", "<b1,b2,b3>;<b1,b1,b2>", "--certify"];
    let par = stdout(&hskein(&args));
    let mut seq_args = vec!["--sequential"];
    seq_args.extend_from_slice(&args);
    assert_eq!(par, stdout(&hskein(&seq_args)));
}

/// A scratch file under the system temp dir, one per test thread.
fn tempfile() -> (std::path::PathBuf, std::fs::File) {
    let dir = std::env::temp_dir().join("hskein-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let name =
        format!("{:?}.toml", std::thread::current().id()).replace(|c: char| !c.is_alphanumeric() && c != '.', "");
    let path = dir.join(format!("{}-{name}", std::process::id()));
    let f = std::fs::File::create(&path).unwrap();
    (path, f)
}
