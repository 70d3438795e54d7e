//! End-to-end checks of the command-line front end through `cli::run`.

use snakes::classify::EquivalenceWitness;
use snakes::cli::run;
use snakes::enumerate::{cache_load, CountTable};
use snakes::model::{SnakeStructure, TordMatrix};
use snakes::names::{BinaryParams, SnakeWordVerdict};
use snakes::tableau::YoungTableau2;
use snakes::Word;

fn snakes(args: &str) -> (i32, String, String) {
    let argv = std::iter::once("snakes").chain(args.split_whitespace());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &str) -> String {
    let (code, out, err) = snakes(args);
    assert_eq!(code, 0, "{args}: {err}");
    out
}

#[test]
fn documented_examples() {
    assert_eq!(ok("validate abcdacbd"), "SnakeName\n");
    assert_eq!(ok("count --m 4"), "7\n");
    assert_eq!(ok("syt abacbc"), "1,3;2,4\n");
}

#[test]
fn exit_codes() {
    let (code, out, _) = snakes("validate abacdcbd");
    assert_eq!(
        (code, out.as_str()),
        (1, "Invalid(NoCoveringSemiPrimitive, position 3)\n")
    );
    assert_eq!(ok("validate aaa"), "SpiralWord\n");
    assert_eq!(snakes("params abc").0, 1);
    assert_eq!(snakes("equiv abab abacbc").0, 1);
    assert_eq!(snakes("frobnicate").0, 2);
    assert_eq!(snakes("validate").0, 2);
    assert_eq!(snakes("validate ab1").0, 2);
    assert_eq!(snakes("tord abab --alpha 1/2").0, 2);
    assert_eq!(snakes("--bound 3 enum --m 4 --method brute").0, 2);
    let (code, out, _) = snakes("--help");
    assert_eq!(code, 0);
    assert!(out.contains("validate"));
}

#[test]
fn text_outputs() {
    assert_eq!(ok("canon bcdabdca"), "abcdacbd\n");
    assert_eq!(ok("reduce ababab"), "abacbdcd\n");
    assert_eq!(ok("params abcdacbd"), "j=5 k=6\n");
    assert_eq!(ok("enum --m 3"), "abacbc\nabcabc\n");
    assert_eq!(ok("enum --m 3 --method brute"), "abacbc\nabcabc\n");
    assert_eq!(ok("enum --m 6 --method recursion-count"), "262\n");
    assert_eq!(ok("word-of-syt --rows 1,3;2,4"), "abacbc\n");
    assert_eq!(ok("inversions abcdacbd"), "b,c\n");
    assert_eq!(ok("inversions abacbc"), "");
    assert_eq!(ok("pairs abacbc"), "a,b: 1,2\na,c: 3\nb,c: 4,5\n");
    assert_eq!(ok("equiv abacdbcd abcabdcd"), "equivalent (reversed)\n");
    assert_eq!(
        ok("count --m 4 --table"),
        "3,5 1\n3,6 1\n4,5 1\n4,6 2\n5,6 2\ntotal 7\n"
    );
    let tord = ok("tord abacbc --alpha 3/2");
    assert!(tord
        .lines()
        .nth(1)
        .unwrap()
        .ends_with("inf   1   1   1 3/2   1   1   1   1   1   1"));
}

#[test]
fn single_letter_reduction_matches_library() {
    let w: Word = "ababab".parse().unwrap();
    let a = snakes::Letter::parse("a").unwrap();
    let expected = snakes::names::binary_reduce(&w, a).unwrap();
    assert_eq!(ok("reduce ababab --letter a"), format!("{expected}\n"));
}

#[test]
fn json_round_trips() {
    let v: SnakeWordVerdict = serde_json::from_str(&snakes("--json validate abacdcbd").1).unwrap();
    assert!(!v.is_snake_name());
    let p: BinaryParams = serde_json::from_str(&ok("--json params abcdacbd")).unwrap();
    assert_eq!((p.j, p.k), (5, 6));
    let t: CountTable = serde_json::from_str(&ok("--output json count --m 5 --table")).unwrap();
    assert_eq!(t.total, 37);
    assert_eq!(t.get(4, 6), 6);
    let y: YoungTableau2 = serde_json::from_str(&ok("--json syt abacbc")).unwrap();
    assert_eq!(y.to_string(), "1,3;2,4");
    let m: TordMatrix = serde_json::from_str(&ok("--json tord abab")).unwrap();
    assert_eq!(m.arcs.len(), 7);
    let s: SnakeStructure = serde_json::from_str(&ok("--json structure abacbc")).unwrap();
    assert_eq!(s.nodal_zone_count, 6);
    let e: serde_json::Value = serde_json::from_str(&ok("--json equiv abacdbcd abcabdcd")).unwrap();
    let wit: EquivalenceWitness = serde_json::from_value(e["witness"].clone()).unwrap();
    assert_eq!(wit.segment_map.len(), 7);
    let words: serde_json::Value = serde_json::from_str(&ok("--json enum --m 4")).unwrap();
    let words: Vec<Word> = serde_json::from_value(words["words"].clone()).unwrap();
    assert_eq!(words.len(), 7);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        "enum --m 5",
        "--json structure abcdacbd",
        "--json tord abcabc",
        "diagram abacbc",
    ] {
        assert_eq!(ok(args), ok(args), "{args}");
    }
}

#[test]
fn explicit_clusters() {
    assert_eq!(
        ok("equiv aaa --clusters-a 1,2 aaa --clusters-b 1,2"),
        "equivalent (direct, reversed)\n"
    );
    let (code, _, err) = snakes("equiv abacbc --clusters-a 1,2;3;4;5 abacbc");
    assert_eq!(code, 1);
    assert!(err.contains("cannot share a cluster"), "{err}");
}

#[test]
fn diagram_formats_and_files() {
    let dot = ok("diagram abab");
    assert!(dot.contains("N1 -- N2 [label=\"S1\"];"));
    let json: serde_json::Value = serde_json::from_str(&ok("diagram abab --format json")).unwrap();
    assert_eq!(json["nodes"][1]["zones"], serde_json::json!([2, 4]));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("abab.dot");
    assert_eq!(ok(&format!("diagram abab --out {}", path.display())), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), dot);
}

#[test]
fn enum_writes_and_reuses_cache() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m5.jsonl");
    let listing = ok(&format!("enum --m 5 --out {}", out.display()));
    let saved = cache_load(&out).unwrap();
    assert_eq!(saved.len(), 37);
    assert_eq!(listing.lines().count(), 37);

    let cache = dir.path().join("cache.jsonl");
    let first = ok(&format!("--cache {} enum --m 4", cache.display()));
    assert_eq!(cache_load(&cache).unwrap().len(), 7);
    let second = ok(&format!(
        "--cache {} enum --m 4 --method brute",
        cache.display()
    ));
    assert_eq!(first, second);
    assert_eq!(cache_load(&cache).unwrap().len(), 7);
    ok(&format!("--cache {} enum --m 3", cache.display()));
    assert_eq!(cache_load(&cache).unwrap().len(), 9);

    std::fs::write(
        &cache,
        "{\"word\":\"abacdcbd\",\"m\":4,\"j\":null,\"k\":null,\"inversion_free\":false}\n",
    )
    .unwrap();
    assert_eq!(
        snakes(&format!("--cache {} enum --m 4", cache.display())).0,
        2
    );
}

#[test]
fn bound_flag() {
    assert_eq!(snakes("--bound 2 enum --m 3 --method brute").0, 2);
    assert_eq!(
        ok("--bound 3 enum --m 3 --method brute"),
        "abacbc\nabcabc\n"
    );
}

#[test]
fn bound_from_environment() {
    let bin = env!("CARGO_BIN_EXE_snakes");
    let run_with = |bound: &str, args: &[&str]| {
        std::process::Command::new(bin)
            .env("SNAKES_BRUTE_BOUND", bound)
            .args(args)
            .output()
            .unwrap()
    };
    let denied = run_with("2", &["enum", "--m", "3", "--method", "brute"]);
    assert_eq!(denied.status.code(), Some(2));
    let allowed = run_with("3", &["enum", "--m", "3", "--method", "brute"]);
    assert_eq!(allowed.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(allowed.stdout).unwrap(),
        "abacbc\nabcabc\n"
    );
    let overridden = run_with(
        "2",
        &["--bound", "3", "enum", "--m", "3", "--method", "brute"],
    );
    assert_eq!(overridden.status.code(), Some(0));
}
