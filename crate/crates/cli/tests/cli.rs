use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, Output};

use cdlat::export::{decode_bits, LatticeJson};
use cdlat::report::Report;
use cdlat_core::cd::cd_lattice;
use cdlat_core::zoo::parse_spec;

fn cdlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cdlat"))
        .args(args)
        .env("CDLAT_THREADS", "2")
        .output()
        .expect("run cdlat")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key))
        .map(str::trim)
        .unwrap_or_else(|| panic!("no {key} in {out}"))
}

#[test]
fn cd_reports_q8_and_cyclic() {
    let o = cdlat(&["cd", "q8"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(field(&out, "members"), "5");
    assert_eq!(field(&out, "width"), "M3");
    assert_eq!(field(&out, "m*"), "16");
    assert_eq!(field(&out, "CD subgroup"), "order 2");

    let out = stdout(&cdlat(&["cd", "cyclic(6)"]));
    assert_eq!(field(&out, "members"), "1");
    assert_eq!(field(&out, "CD subgroup"), "order 6");

    let out = stdout(&cdlat(&["cd", "sym(4)", "--oracle"]));
    assert_eq!(field(&out, "CD-simple"), "yes");
    assert_eq!(field(&out, "oracle"), "agrees");
}

#[test]
fn exit_codes() {
    let o = cdlat(&["cd", "prod(q8, foo)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 9"));
    assert_eq!(cdlat(&["cd", "sym(4"]).status.code(), Some(2));
    assert_eq!(cdlat(&["cd", "sym(0)"]).status.code(), Some(2));
    // The oracle cannot enumerate subgroups of a group of order 729.
    assert_eq!(cdlat(&["cd", "ut(3,2)", "--oracle"]).status.code(), Some(3));
    assert_eq!(cdlat(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(cdlat(&["lattice", "/nonexistent/x.json"]).status.code(), Some(2));
}

#[test]
fn json_export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d8.json");
    let p = path.to_str().unwrap();
    let o = cdlat(&["cd", "prod(dih(4),cyclic(3))", "--json", p, "--full-membership"]);
    assert!(o.status.success());
    let j: LatticeJson = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let g = parse_spec(&j.group.spec).unwrap().eval().unwrap().group;
    let l = cd_lattice(&g).unwrap();
    assert_eq!(j.group.order, 24);
    assert_eq!(j.mstar, l.mstar());
    assert_eq!(j.members.len(), l.len());
    for (m, expect) in j.members.iter().zip(l.members()) {
        let bits = decode_bits(m.bits.as_ref().unwrap(), g.order()).unwrap();
        assert_eq!(&bits, expect.subgroup.bits());
        assert_eq!(m.order, expect.order());
        let gen = cdlat_core::group::closure(&g, &m.generator_indices.iter().map(|&x| x as usize).collect::<Vec<_>>())
            .unwrap();
        assert_eq!(gen, expect.subgroup);
    }
    assert_eq!(j.to_lattice().unwrap().len(), l.len());

    let out = stdout(&cdlat(&["lattice", p]));
    assert_eq!(field(&out, "elements"), "5");
    assert_eq!(field(&out, "modular"), "yes");
    assert_eq!(field(&out, "self-dual"), "yes");
    assert_eq!(field(&out, "factors"), "M3");
}

#[test]
fn lattice_command_reports_non_modular_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n5.json");
    let member = r#"{"order": 1, "generator_indices": [], "centralizer_index": 0}"#;
    let text = format!(
        r#"{{"group": {{"spec": "n5", "order": 1}}, "mstar": 1, "members": [{m},{m},{m},{m},{m}],
            "leq": [[0,1],[1,2],[2,4],[0,3],[3,4]]}}"#,
        m = member
    );
    std::fs::write(&path, text).unwrap();
    let o = cdlat(&["lattice", path.to_str().unwrap(), "--modular", "--factorize"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(field(&out, "modular").starts_with("no"));
    assert_eq!(field(&out, "factors"), "L5");
    assert!(!out.contains("self-dual"));

    std::fs::write(&path, r#"{"group": {"spec": "x", "order": 1}, "mstar": 1, "members": [], "leq": [[0, 1]]}"#)
        .unwrap();
    assert_eq!(cdlat(&["lattice", path.to_str().unwrap()]).status.code(), Some(2));
}

/// Edges `a -> b` of a DOT file.
fn dot_edges(path: &Path) -> BTreeSet<(usize, usize)> {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter_map(|l| {
            let (a, b) = l.trim().trim_end_matches(';').split_once(" -> ")?;
            Some((a.trim_start_matches('n').parse().unwrap(), b.trim_start_matches('n').parse().unwrap()))
        })
        .collect()
}

#[test]
fn dot_edges_are_the_covering_relation() {
    let dir = tempfile::tempdir().unwrap();
    for spec in ["q8", "prod(q8,cyclic(2))", "ut(2,2)", "prod(sym(3),dih(4))", "brewster"] {
        let path = dir.path().join("g.dot");
        let o = cdlat(&["cd", spec, "--dot", path.to_str().unwrap()]);
        assert!(o.status.success(), "{spec}");
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("digraph") && text.contains("rankdir=BT") && text.trim_end().ends_with('}'));

        // Transitive reduction of inclusion among members, by brute force.
        let g = parse_spec(spec).unwrap().eval().unwrap().group;
        let l = cd_lattice(&g).unwrap();
        let ms: Vec<_> = l.subgroups().collect();
        let lt = |a: usize, b: usize| a != b && ms[a].is_subgroup_of(ms[b]);
        let mut expected = BTreeSet::new();
        for a in 0..ms.len() {
            for b in 0..ms.len() {
                if lt(a, b) && !(0..ms.len()).any(|c| lt(a, c) && lt(c, b)) {
                    expected.insert((a, b));
                }
            }
        }
        assert_eq!(dot_edges(&path), expected, "{spec}");
    }
}

#[test]
fn verify_report_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = cdlat(&["verify", "--suite", "table12", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("table12-distinct"));
    let text = std::fs::read_to_string(&path).unwrap();
    let r = Report::from_json(&text).unwrap();
    assert_eq!(Report::from_json(&r.to_json().unwrap()).unwrap(), r);
    assert_eq!(r.summary.fail, 0);
    let ids: Vec<&str> = r.results.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids, ["table12-distinct", "table12-self-dual", "table12-sizes"]);
}

#[test]
fn core_suite_on_small_corpus() {
    let o = cdlat(&["verify", "--suite", "core", "--max-order", "16"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("oracle[q8]"));
    assert!(out.contains(" 0 failed"));
}
