#![allow(dead_code)]

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use nbc_core::io::{parse_coloring, parse_graph, write_coloring, write_graph};
use nbc_core::{verify, Coloring, FamilySpec, Palette};

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_nbc")
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn family(spec: &str) -> String {
    write_graph(&spec.parse::<FamilySpec>().unwrap().generate().unwrap())
}

fn coloring(q: usize, colors: &[usize]) -> String {
    write_coloring(&Coloring::new(Palette::new(q).unwrap(), colors.to_vec()).unwrap())
}

/// One CLI invocation in a fresh directory seeded with `inputs`.
pub struct Scenario {
    pub name: &'static str,
    pub inputs: Vec<(&'static str, String)>,
    pub args: Vec<&'static str>,
    pub exit: i32,
    /// Substring the diagnostics must contain.
    pub stderr_has: Option<&'static str>,
    /// Emitted (graph, coloring) pairs that must verify as balanced.
    pub balanced_outputs: Vec<(&'static str, &'static str)>,
}

fn scenario(name: &'static str, args: &[&'static str], exit: i32) -> Scenario {
    Scenario {
        name,
        inputs: Vec::new(),
        args: args.to_vec(),
        exit,
        stderr_has: None,
        balanced_outputs: Vec::new(),
    }
}

impl Scenario {
    fn input(mut self, file: &'static str, text: String) -> Self {
        self.inputs.push((file, text));
        self
    }

    fn stderr(mut self, needle: &'static str) -> Self {
        self.stderr_has = Some(needle);
        self
    }

    fn balanced(mut self, graph: &'static str, coloring: &'static str) -> Self {
        self.balanced_outputs.push((graph, coloring));
        self
    }
}

pub fn scenarios() -> Vec<Scenario> {
    let k33 = || family("multipartite:3,3");
    let k33c = || coloring(3, &[0, 1, 2, 0, 1, 2]);
    vec![
        scenario("gen_circulant", &["gen", "circulant:18:1,4,7", "-o", "c18.g"], 0),
        scenario("gen_multipartite_stdout", &["gen", "multipartite:3,3"], 0),
        scenario("gen_invalid_cycle", &["gen", "cycle:2"], 2).stderr("InvalidFamily"),
        scenario("gen_bad_grammar", &["gen", "wheel:5"], 2),
        scenario("usage_missing_argument", &["verify", "only-one.g"], 2),
        scenario("check_cycle_fails", &["check", "c5.g", "-q", "3"], 1)
            .input("c5.g", family("cycle:5")),
        scenario("check_k33_passes", &["check", "k33.g", "-q", "3"], 0).input("k33.g", k33()),
        scenario("check_malformed", &["check", "bad.g"], 2)
            .input("bad.g", "3 2\n0 1\n".into())
            .stderr("Format"),
        scenario("verify_k33", &["verify", "k33.g", "k33.c"], 0)
            .input("k33.g", k33())
            .input("k33.c", k33c()),
        scenario("verify_k33_json", &["verify", "k33.g", "k33.c", "--json"], 0)
            .input("k33.g", k33())
            .input("k33.c", k33c()),
        scenario("verify_all_zero", &["verify", "k33.g", "z.c", "--json"], 1)
            .input("k33.g", k33())
            .input("z.c", coloring(3, &[0; 6])),
        scenario("verify_length_mismatch", &["verify", "k33.g", "s.c"], 2)
            .input("k33.g", k33())
            .input("s.c", coloring(3, &[0; 5]))
            .stderr("LengthMismatch"),
        scenario("construct_circulant", &["construct", "circulant:12:1,2,3", "-q", "3", "-o", "c.c", "--graph-out", "c.g"], 0)
            .balanced("c.g", "c.c"),
        scenario("construct_circulant_q5", &["construct", "circulant:20:1,3,5,7,9", "-q", "5", "-o", "c.c", "--graph-out", "c.g"], 0)
            .balanced("c.g", "c.c"),
        scenario("construct_circulant_bad_pattern", &["construct", "circulant:18:1,4,7", "-q", "3", "-o", "c.c"], 1)
            .stderr("difference pattern p=0"),
        scenario("construct_multipartite_inadmissible", &["construct", "multipartite:3,4", "-q", "3", "-o", "c.c"], 1)
            .stderr("NotAdmissible"),
        scenario("construct_multipartite", &["construct", "multipartite:3,6,9", "-o", "c.c", "--graph-out", "c.g"], 0)
            .balanced("c.g", "c.c"),
        scenario("construct_bad_palette", &["construct", "multipartite:4,4", "-q", "4", "-o", "c.c"], 2)
            .stderr("InvalidPalette"),
        scenario("product_cartesian", &["product", "--kind", "cartesian", "k33.g", "k33.g", "--cg", "k33.c", "--ch", "k33.c", "--graph-out", "p.g", "--coloring-out", "p.c"], 0)
            .input("k33.g", k33())
            .input("k33.c", k33c())
            .balanced("p.g", "p.c"),
        scenario("product_strong", &["product", "--kind", "strong", "k33.g", "k33.g", "--cg", "k33.c", "--ch", "k33.c", "--graph-out", "p.g", "--coloring-out", "p.c"], 0)
            .input("k33.g", k33())
            .input("k33.c", k33c())
            .balanced("p.g", "p.c"),
        scenario("product_lex", &["product", "--kind", "lex", "c5.g", "k33.g", "--cg", "e5.c", "--ch", "k33.c", "--graph-out", "p.g", "--coloring-out", "p.c"], 1)
            .input("c5.g", family("cycle:5"))
            .input("e5.c", coloring(3, &[0; 5]))
            .input("k33.g", k33())
            .input("k33.c", k33c())
            .stderr("InputNotBalanced"),
        scenario("product_lex_equal", &["product", "--kind", "lex-equal", "c5.g", "k33.g", "--ch", "k33.c", "--graph-out", "p.g", "--coloring-out", "p.c"], 0)
            .input("c5.g", family("cycle:5"))
            .input("k33.g", k33())
            .input("k33.c", k33c())
            .balanced("p.g", "p.c"),
        scenario("product_direct_one_coloring", &["product", "--kind", "direct", "k33.g", "c5.g", "--cg", "k33.c", "--graph-out", "p.g", "--coloring-out", "p.c"], 0)
            .input("k33.g", k33())
            .input("k33.c", k33c())
            .input("c5.g", family("cycle:5"))
            .balanced("p.g", "p.c"),
        scenario("product_join_unequal_counts", &["product", "--kind", "join", "k33.g", "e3.g", "--cg", "k33.c", "--ch", "e3.c", "--graph-out", "p.g", "--coloring-out", "p.c"], 1)
            .input("k33.g", k33())
            .input("k33.c", k33c())
            .input("e3.g", "3 0\n".into())
            .input("e3.c", coloring(3, &[0, 0, 0]))
            .stderr("CountsNotEqual"),
        scenario("product_join", &["product", "--kind", "join", "k33.g", "k33.g", "--cg", "k33.c", "--ch", "k33.c", "--graph-out", "p.g", "--coloring-out", "p.c"], 0)
            .input("k33.g", k33())
            .input("k33.c", k33c())
            .balanced("p.g", "p.c"),
        scenario("product_missing_coloring", &["product", "--kind", "cartesian", "k33.g", "k33.g", "--cg", "k33.c", "--graph-out", "p.g", "--coloring-out", "p.c"], 2)
            .input("k33.g", k33())
            .input("k33.c", k33c()),
        scenario("search_complete_exhausted", &["search", "k7.g", "-q", "3"], 1).input("k7.g", family("complete:7")),
        scenario("search_k33_found", &["search", "k33.g", "-q", "3", "-o", "s.c"], 0)
            .input("k33.g", k33())
            .balanced("k33.g", "s.c"),
        scenario("search_c18", &["search", "c18.g", "-o", "s.c"], 0)
            .input("c18.g", family("circulant:18:1,4,7"))
            .balanced("c18.g", "s.c"),
        scenario("search_enumerate", &["search", "k33.g", "--limit", "3", "-o", "s.c"], 0)
            .input("k33.g", k33())
            .balanced("k33.g", "s.1.c")
            .balanced("k33.g", "s.3.c"),
        scenario("search_all_stdout", &["search", "k33.g", "--all", "--no-symmetry-breaking"], 0).input("k33.g", k33()),
        scenario("search_budget", &["search", "big.g", "--nodes", "10"], 3)
            .input("big.g", family("circulant:300:1,2,3,4,5,6,7,8,9,10,11,12")),
        scenario("blowup_k2", &["blowup", "k2.g", "-q", "3", "--graph-out", "b.g", "--coloring-out", "b.c"], 0)
            .input("k2.g", family("complete:2"))
            .balanced("b.g", "b.c"),
        scenario("blowup_petersen_q5", &["blowup", "pet.g", "-q", "5", "--graph-out", "b.g", "--coloring-out", "b.c"], 0)
            .input("pet.g", petersen())
            .balanced("b.g", "b.c"),
        scenario("extend_k33", &["extend", "k33.g", "k33.c", "--anchors", "0,1,2:3,4,5", "--graph-out", "e.g", "--coloring-out", "e.c"], 0)
            .input("k33.g", k33())
            .input("k33.c", k33c())
            .balanced("e.g", "e.c"),
        scenario("extend_chain", &["extend", "k33.g", "k33.c", "--steps", "5", "--graph-out", "e.g", "--coloring-out", "e.c"], 0)
            .input("k33.g", k33())
            .input("k33.c", k33c())
            .balanced("e.g", "e.c"),
        scenario("extend_bad_anchors", &["extend", "k33.g", "k33.c", "--anchors", "1,2,3:4,5,0", "--graph-out", "e.g", "--coloring-out", "e.c"], 2)
            .input("k33.g", k33())
            .input("k33.c", k33c())
            .stderr("BadAnchors"),
        scenario("extend_unbalanced_input", &["extend", "k33.g", "z.c", "--graph-out", "e.g", "--coloring-out", "e.c"], 1)
            .input("k33.g", k33())
            .input("z.c", coloring(3, &[0; 6]))
            .stderr("InputNotBalanced"),
    ]
}

pub fn petersen() -> String {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    let edges: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    write_graph(&nbc_core::Graph::from_edges(10, &edges).unwrap())
}

/// Everything a run produced, rendered as one text blob.
pub struct Transcript {
    pub exit: i32,
    pub stderr: String,
    pub text: String,
}

pub fn run(s: &Scenario) -> Result<Transcript, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for (file, text) in &s.inputs {
        fs::write(dir.path().join(file), text).map_err(|e| e.to_string())?;
    }
    let out = Command::new(bin())
        .args(&s.args)
        .current_dir(dir.path())
        .output()
        .map_err(|e| e.to_string())?;
    let exit = out.status.code().ok_or("terminated by signal")?;
    let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
    let stderr = String::from_utf8_lossy(&out.stderr).into_owned();

    let mut text = format!("$ nbc {}\nexit {exit}\n--- stdout\n{stdout}--- stderr\n{stderr}", s.args.join(" "));
    let mut produced: Vec<_> = fs::read_dir(dir.path())
        .map_err(|e| e.to_string())?
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .filter(|name| !s.inputs.iter().any(|(f, _)| f == name))
        .collect();
    produced.sort();
    for name in &produced {
        let body = fs::read_to_string(dir.path().join(name)).map_err(|e| e.to_string())?;
        let _ = write!(text, "--- file {name}\n{body}");
    }

    for (g, c) in &s.balanced_outputs {
        let read = |f: &str| fs::read_to_string(dir.path().join(f)).map_err(|e| format!("{f}: {e}"));
        let graph = parse_graph(&read(g)?).map_err(|e| format!("{g}: {e}"))?;
        let col = parse_coloring(&read(c)?).map_err(|e| format!("{c}: {e}"))?;
        graph.check_invariants().map_err(|e| format!("{g}: {e}"))?;
        let report = verify(&graph, &col).map_err(|e| format!("{c}: {e}"))?;
        if !report.balanced || !report.identities_hold() {
            return Err(format!("{c} is not a balanced coloring of {g}"));
        }
    }
    Ok(Transcript { exit, stderr, text })
}

/// Runs a scenario twice and checks the exit code, the diagnostics, and that
/// both runs agree byte for byte. Returns the transcript.
pub fn check(s: &Scenario) -> Result<String, String> {
    let first = run(s)?;
    let second = run(s)?;
    if first.exit != s.exit {
        return Err(format!("exit {} (expected {})\n{}", first.exit, s.exit, first.text));
    }
    if let Some(needle) = s.stderr_has {
        if !first.stderr.contains(needle) {
            return Err(format!("stderr lacks {needle:?}: {}", first.stderr));
        }
    }
    if first.text != second.text {
        return Err("two runs differ".into());
    }
    Ok(first.text)
}
