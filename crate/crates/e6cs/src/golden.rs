//! Transcription corpus and its verification runner.
//!
//! Golden entries store the printed tables and appendices as canonical text,
//! one entry per `== <id>` header. `run_golden` recomputes each entry from
//! first principles and compares exact canonical forms, emitting one PASS or
//! FAIL line per id. Entries that document a known misprint carry a
//! `# paper-verbatim:` comment whose content is echoed in the report.
//!
//! Sources, inferred from the id:
//! - `table1`            positive-root table (heights 1..11)
//! - `blist:b<j>`        first-order coefficients b_j with the coupling
//! - `blist0:b<j>`       the k = 0 parts, checked against the linear solve
//! - `M:<label>`         solved monomial functions of the fundamentals
//! - `B:P_<label>`       eigenpolynomials up to degree two
//! - `B:M_<label>`       monomial functions up to degree three
//! - `C:<l>x<r>`         deformed quadratic Clebsch-Gordan series

use crate::kappa::KRat;
use crate::operator::{operator, solve_b0_from_monomials};
use crate::series::deformed_cg;
use crate::solver::{monomial_function, solve_cached};
use crate::text::{parse_krat, parse_zpoly};
use crate::weight::{RootVec, Weight, RANK};
use crate::zpoly::ZPoly;
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Source {
    Table1,
    Section2Blist,
    Section2Mlist,
    AppendixBPoly,
    AppendixBMonomial,
    AppendixCSeries,
}

#[derive(Clone, Debug)]
pub struct GoldenEntry {
    pub id: String,
    pub source: Source,
    pub payload: String,
    pub verbatim: Option<String>,
}

const FILES: [(&str, &str); 6] = [
    ("table1.txt", include_str!("../golden/table1.txt")),
    ("section2_blist.txt", include_str!("../golden/section2_blist.txt")),
    ("section2_mlist.txt", include_str!("../golden/section2_mlist.txt")),
    (
        "appendix_b_polynomials.txt",
        include_str!("../golden/appendix_b_polynomials.txt"),
    ),
    (
        "appendix_b_monomials.txt",
        include_str!("../golden/appendix_b_monomials.txt"),
    ),
    (
        "appendix_c_series.txt",
        include_str!("../golden/appendix_c_series.txt"),
    ),
];

fn source_of(id: &str) -> Result<Source, String> {
    if id == "table1" {
        Ok(Source::Table1)
    } else if id.starts_with("blist:") || id.starts_with("blist0:") {
        Ok(Source::Section2Blist)
    } else if id.starts_with("M:") {
        Ok(Source::Section2Mlist)
    } else if id.starts_with("B:P_") {
        Ok(Source::AppendixBPoly)
    } else if id.starts_with("B:M_") {
        Ok(Source::AppendixBMonomial)
    } else if id.starts_with("C:") {
        Ok(Source::AppendixCSeries)
    } else {
        Err(format!("cannot infer source for golden id {id}"))
    }
}

pub fn parse_corpus_text(text: &str) -> Result<Vec<GoldenEntry>, String> {
    let mut entries = Vec::new();
    let mut current: Option<GoldenEntry> = None;
    for line in text.lines() {
        if let Some(id) = line.strip_prefix("== ") {
            if let Some(e) = current.take() {
                entries.push(e);
            }
            let id = id.trim().to_string();
            current = Some(GoldenEntry {
                source: source_of(&id)?,
                id,
                payload: String::new(),
                verbatim: None,
            });
            continue;
        }
        let Some(entry) = current.as_mut() else {
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            return Err(format!("corpus text before first entry header: {line}"));
        };
        if let Some(v) = line.trim_start().strip_prefix("# paper-verbatim:") {
            entry.verbatim = Some(v.trim().to_string());
        } else if line.trim_start().starts_with('#') {
            // explanatory comment, not part of the payload
        } else {
            entry.payload.push_str(line);
            entry.payload.push('\n');
        }
    }
    if let Some(e) = current.take() {
        entries.push(e);
    }
    Ok(entries)
}

/// Corpus compiled into the binary.
pub fn embedded_corpus() -> Result<Vec<GoldenEntry>, String> {
    let mut out = Vec::new();
    for (name, text) in FILES {
        let mut e =
            parse_corpus_text(text).map_err(|err| format!("embedded corpus {name}: {err}"))?;
        out.append(&mut e);
    }
    check_corpus(&out)?;
    Ok(out)
}

/// Corpus read from a directory of .txt files.
pub fn corpus_from_dir(dir: &std::path::Path) -> Result<Vec<GoldenEntry>, String> {
    let mut out = Vec::new();
    let mut names: Vec<std::path::PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| format!("cannot read corpus directory {}: {e}", dir.display()))?
        .filter_map(|r| r.ok().map(|d| d.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    names.sort();
    for path in names {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        let mut e = parse_corpus_text(&text)
            .map_err(|err| format!("{}: {err}", path.display()))?;
        out.append(&mut e);
    }
    check_corpus(&out)?;
    Ok(out)
}

fn check_corpus(entries: &[GoldenEntry]) -> Result<(), String> {
    if entries.is_empty() {
        return Err("golden corpus is empty".into());
    }
    let mut seen = std::collections::HashSet::new();
    for e in entries {
        if !seen.insert(&e.id) {
            return Err(format!("duplicate golden id {}", e.id));
        }
        if e.payload.trim().is_empty() {
            return Err(format!("golden entry {} has an empty payload", e.id));
        }
    }
    Ok(())
}

fn parse_label(s: &str) -> Result<Weight, String> {
    let digits: Vec<i32> = s
        .chars()
        .map(|c| c.to_digit(10).map(|d| d as i32).ok_or(()))
        .collect::<Result<_, _>>()
        .map_err(|_| format!("bad weight label {s}"))?;
    if digits.len() != RANK {
        return Err(format!("weight label {s} must have six digits"));
    }
    Ok(Weight(std::array::from_fn(|i| digits[i])))
}

fn parse_series_payload(payload: &str) -> Result<BTreeMap<Weight, KRat>, String> {
    let mut out = BTreeMap::new();
    for line in payload.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (label, coeff) = line
            .split_once(':')
            .ok_or_else(|| format!("series line needs `label : coeff`: {line}"))?;
        let w = parse_label(label.trim())?;
        let c = parse_krat(coeff).map_err(|e| format!("coefficient of {}: {e}", w.label()))?;
        if out.insert(w, c).is_some() {
            return Err(format!("duplicate series label {}", w.label()));
        }
    }
    Ok(out)
}

fn series_text(terms: &BTreeMap<Weight, KRat>) -> String {
    let mut keys: Vec<&Weight> = terms.keys().collect();
    keys.sort_by(|a, b| {
        crate::series::rho_height(b)
            .cmp(&crate::series::rho_height(a))
            .then_with(|| b.cmp(a))
    });
    let mut s = String::new();
    for w in keys {
        let _ = writeln!(s, "{} : {}", w.label(), terms[w]);
    }
    s
}

fn parse_table1(payload: &str) -> Result<Vec<Vec<RootVec>>, String> {
    let mut groups: Vec<Vec<RootVec>> = vec![Vec::new(); 11];
    for line in payload.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (h, roots) = line
            .split_once(':')
            .ok_or_else(|| format!("table1 line needs `height: roots`: {line}"))?;
        let h: usize = h.trim().parse().map_err(|_| format!("bad height {h}"))?;
        if !(1..=11).contains(&h) {
            return Err(format!("height {h} out of 1..=11"));
        }
        for r in roots.split_whitespace() {
            let w = parse_label(r)?;
            groups[h - 1].push(RootVec(w.0));
        }
    }
    Ok(groups)
}

/// Outcome of one golden comparison: the recomputed canonical text and the
/// canonicalized payload, which must be equal.
fn verify_entry(e: &GoldenEntry) -> Result<(String, String), String> {
    match e.source {
        Source::Table1 => {
            let mut stored = parse_table1(&e.payload)?;
            for g in stored.iter_mut() {
                g.sort();
            }
            let mut computed: Vec<Vec<RootVec>> = vec![Vec::new(); 11];
            for &(r, h) in crate::e6::positive_roots() {
                computed[(h - 1) as usize].push(r);
            }
            let fmt = |groups: &Vec<Vec<RootVec>>| {
                let mut s = String::new();
                for (i, g) in groups.iter().enumerate() {
                    let labels: Vec<String> = g.iter().map(RootVec::label).collect();
                    let _ = writeln!(s, "{}: {}", i + 1, labels.join(" "));
                }
                s
            };
            Ok((fmt(&computed), fmt(&stored)))
        }
        Source::Section2Blist => {
            let j: usize = e
                .id
                .rsplit('b')
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| format!("bad blist id {}", e.id))?;
            if !(1..=RANK).contains(&j) {
                return Err(format!("blist index {j} out of range"));
            }
            let stored = parse_zpoly(&e.payload).map_err(|err| err.to_string())?;
            let computed = if e.id.starts_with("blist0:") {
                b0_solved()?[j - 1].clone()
            } else {
                operator().b(j)
            };
            Ok((computed.to_string(), stored.to_string()))
        }
        Source::Section2Mlist => {
            let label = parse_label(e.id.strip_prefix("M:").unwrap())?;
            let i = (1..=RANK)
                .find(|&i| label == Weight::fundamental(i))
                .ok_or_else(|| format!("{} is not a fundamental label", e.id))?;
            let stored = parse_zpoly(&e.payload).map_err(|err| err.to_string())?;
            let computed = crate::rep::fundamental_monomials()[i - 1].clone();
            Ok((computed.to_string(), stored.to_string()))
        }
        Source::AppendixBPoly => {
            let label = parse_label(e.id.strip_prefix("B:P_").unwrap())?;
            let stored = parse_zpoly(&e.payload).map_err(|err| err.to_string())?;
            let computed = solve_cached(&label)?;
            Ok((computed.to_string(), stored.to_string()))
        }
        Source::AppendixBMonomial => {
            let label = parse_label(e.id.strip_prefix("B:M_").unwrap())?;
            let stored = parse_zpoly(&e.payload).map_err(|err| err.to_string())?;
            let computed = monomial_function(&label)?;
            Ok((computed.to_string(), stored.to_string()))
        }
        Source::AppendixCSeries => {
            let spec = e.id.strip_prefix("C:").unwrap();
            let (l, r) = spec
                .split_once('x')
                .ok_or_else(|| format!("bad series id {}", e.id))?;
            let left = parse_label(l)?;
            let right = parse_label(r)?;
            let stored = parse_series_payload(&e.payload)?;
            let series = deformed_cg(&left, &right)?;
            let computed: BTreeMap<Weight, KRat> = series.terms.into_iter().collect();
            Ok((series_text(&computed), series_text(&stored)))
        }
    }
}

fn b0_solved() -> Result<&'static Vec<ZPoly>, String> {
    static B0: std::sync::OnceLock<Result<Vec<ZPoly>, String>> = std::sync::OnceLock::new();
    B0.get_or_init(solve_b0_from_monomials).as_ref().map_err(Clone::clone)
}

pub struct GoldenReport {
    pub lines: Vec<String>,
    pub passed: usize,
    pub failed: usize,
}

impl GoldenReport {
    pub fn text(&self) -> String {
        let mut s = self.lines.join("\n");
        let _ = write!(s, "\ngolden: {} passed, {} failed", self.passed, self.failed);
        s.push('\n');
        s
    }
}

/// `filter` accepts an exact id or a `prefix*` pattern.
pub fn matches_filter(id: &str, filter: Option<&str>) -> bool {
    match filter {
        None => true,
        Some(f) => match f.strip_suffix('*') {
            Some(prefix) => id.starts_with(prefix),
            None => id == f,
        },
    }
}

pub fn run_golden(entries: &[GoldenEntry], filter: Option<&str>) -> Result<GoldenReport, String> {
    let mut selected: Vec<&GoldenEntry> =
        entries.iter().filter(|e| matches_filter(&e.id, filter)).collect();
    if selected.is_empty() {
        return Err(match filter {
            Some(f) => format!("no golden entries match filter {f}"),
            None => "golden corpus is empty".into(),
        });
    }
    selected.sort_by(|a, b| a.id.cmp(&b.id));
    let mut lines = Vec::new();
    let mut passed = 0;
    let mut failed = 0;
    for e in selected {
        match verify_entry(e) {
            Ok((computed, stored)) if computed == stored => {
                passed += 1;
                match &e.verbatim {
                    Some(v) => lines.push(format!(
                        "PASS {} (documented correction; paper-verbatim: {v})",
                        e.id
                    )),
                    None => lines.push(format!("PASS {}", e.id)),
                }
            }
            Ok((computed, stored)) => {
                failed += 1;
                lines.push(format!(
                    "FAIL {}\n  stored:   {}\n  computed: {}",
                    e.id,
                    stored.trim_end().replace('\n', "\n            "),
                    computed.trim_end().replace('\n', "\n            ")
                ));
            }
            Err(err) => {
                failed += 1;
                lines.push(format!("FAIL {} (error: {err})", e.id));
            }
        }
    }
    Ok(GoldenReport { lines, passed, failed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_parses_and_has_expected_counts() {
        let entries = embedded_corpus().unwrap();
        let count = |s: Source| entries.iter().filter(|e| e.source == s).count();
        assert_eq!(count(Source::Table1), 1);
        assert_eq!(count(Source::Section2Blist), 12);
        assert_eq!(count(Source::Section2Mlist), 6);
        assert_eq!(count(Source::AppendixBPoly), 12);
        assert_eq!(count(Source::AppendixBMonomial), 40);
        assert_eq!(count(Source::AppendixCSeries), 13);
    }

    #[test]
    fn empty_corpus_is_an_error() {
        assert!(check_corpus(&[]).is_err());
        let dir = std::env::temp_dir().join("e6cs-empty-golden-test");
        let _ = std::fs::create_dir_all(&dir);
        assert!(corpus_from_dir(&dir).is_err());
    }

    #[test]
    fn filters() {
        assert!(matches_filter("B:P_200000", Some("B:*")));
        assert!(matches_filter("table1", Some("table1")));
        assert!(!matches_filter("C:100000x100000", Some("B:*")));
    }

    #[test]
    fn table1_entry_passes() {
        let entries = embedded_corpus().unwrap();
        let report = run_golden(&entries, Some("table1")).unwrap();
        assert_eq!(report.failed, 0, "{}", report.text());
    }

    #[test]
    fn blist_entries_pass() {
        let entries = embedded_corpus().unwrap();
        let report = run_golden(&entries, Some("blist*")).unwrap();
        assert_eq!(report.failed, 0, "{}", report.text());
    }

    #[test]
    fn mlist_entries_pass() {
        let entries = embedded_corpus().unwrap();
        let report = run_golden(&entries, Some("M:*")).unwrap();
        assert_eq!(report.failed, 0, "{}", report.text());
    }
}
