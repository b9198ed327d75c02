//! Corpus runner: every `.ideal` file in a directory is checked against
//! the expectations recorded in its own `expect` statement. Entries run
//! concurrently; each entry's pipelines run sequentially.

use ginalg::parse::{self, IdealSource};
use ginalg::report;
use ginalg::{borel, exec, growth, hilbert, points, reduction, wlp};
use ginalg::{Error, Result};
use std::path::{Path, PathBuf};

pub struct EntryResult {
    pub file: String,
    pub label: String,
    pub failures: Vec<String>,
}

const KNOWN_KEYS: &[&str] = &[
    "dim", "degree", "D", "M", "reg", "satdeg", "alpha", "saturated", "gin", "spor", "delta1",
    "r1", "r2", "r3", "wlp", "flat_d", "flat_s", "growth2_d", "factor_degree", "points", "hvec",
];

pub fn run_corpus(dir: &Path, seed: u64, trials: usize) -> Result<Vec<EntryResult>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::Computation(format!("cannot read corpus directory {}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|d| d.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "ideal"))
        .collect();
    files.sort();
    Ok(exec::par_map(&files, |path| check_entry(path, seed, trials)))
}

fn parse_i64(key: &str, raw: &str, failures: &mut Vec<String>) -> Option<i64> {
    match raw.parse::<i64>() {
        Ok(v) => Some(v),
        Err(_) => {
            failures.push(format!("{key}: expectation '{raw}' is not an integer"));
            None
        }
    }
}

fn parse_bool(key: &str, raw: &str, failures: &mut Vec<String>) -> Option<bool> {
    match raw {
        "true" => Some(true),
        "false" => Some(false),
        _ => {
            failures.push(format!("{key}: expectation '{raw}' is not true/false"));
            None
        }
    }
}

fn parse_csv(key: &str, raw: &str, failures: &mut Vec<String>) -> Option<Vec<i128>> {
    let mut out = Vec::new();
    for part in raw.split(',') {
        match part.trim().parse::<i128>() {
            Ok(v) => out.push(v),
            Err(_) => {
                failures.push(format!("{key}: expectation '{raw}' is not a number list"));
                return None;
            }
        }
    }
    Some(out)
}

fn check_eq<T: PartialEq + std::fmt::Debug>(
    key: &str,
    want: T,
    got: T,
    failures: &mut Vec<String>,
) {
    if want != got {
        failures.push(format!("{key}: expected {want:?}, got {got:?}"));
    }
}

struct Entry<'a> {
    src: &'a IdealSource,
    seed: u64,
    trials: usize,
    label: String,
    plain: Option<ginalg::monomial_ideal::MonomialIdeal>,
    invariants: Option<(hilbert::Invariants, ginalg::gin::GinResult)>,
    growth1: Option<growth::GrowthReport>,
}

impl<'a> Entry<'a> {
    /// Initial ideal in the given coordinates; enough for dimension,
    /// degree, and the smallest generator degree.
    fn plain(&mut self) -> &ginalg::monomial_ideal::MonomialIdeal {
        if self.plain.is_none() {
            self.plain = Some(hilbert::initial_ideal(&self.src.ring, &self.src.gens));
        }
        self.plain.as_ref().unwrap()
    }

    fn invariants(&mut self, failures: &mut Vec<String>) -> Option<&(hilbert::Invariants, ginalg::gin::GinResult)> {
        if self.invariants.is_none() {
            match hilbert::invariants(&self.src.ring, &self.src.gens, self.seed, self.trials) {
                Ok(pair) => self.invariants = Some(pair),
                Err(e) => {
                    failures.push(format!("invariants: {e}"));
                    return None;
                }
            }
        }
        self.invariants.as_ref()
    }

    fn growth1(&mut self, failures: &mut Vec<String>) -> Option<&growth::GrowthReport> {
        if self.growth1.is_none() {
            match growth::first_difference_pipeline(
                &self.src.ring,
                &self.src.gens,
                None,
                self.seed,
                self.trials,
                &self.label,
            ) {
                Ok(rep) => self.growth1 = Some(rep),
                Err(e) => {
                    failures.push(format!("first-difference analysis: {e}"));
                    return None;
                }
            }
        }
        self.growth1.as_ref()
    }
}

fn check_entry(path: &Path, seed: u64, trials: usize) -> EntryResult {
    let file = path.display().to_string();
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| file.clone());
    let mut failures = Vec::new();
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            return EntryResult {
                file,
                label: stem,
                failures: vec![format!("unreadable: {e}")],
            }
        }
    };
    let src = match parse::parse_ideal(&text) {
        Ok(s) => s,
        Err(e) => {
            return EntryResult {
                file,
                label: stem,
                failures: vec![e.to_string()],
            }
        }
    };
    let label = src.label.clone().unwrap_or(stem);
    let mut entry = Entry {
        src: &src,
        seed,
        trials,
        label: label.clone(),
        plain: None,
        invariants: None,
        growth1: None,
    };

    for key in src.expect.keys() {
        if !KNOWN_KEYS.contains(&key.as_str()) {
            failures.push(format!("unknown expectation key '{key}'"));
        }
    }

    let expect = &src.expect;
    let get = |k: &str| expect.get(k).map(String::as_str);

    for key in ["dim", "degree", "alpha"] {
        if let Some(raw) = get(key) {
            let Some(want) = parse_i64(key, raw, &mut failures) else { continue };
            let plain = entry.plain();
            let got = match key {
                "dim" => plain.dim(),
                "degree" => plain.degree() as i64,
                _ => plain.min_gen_degree().unwrap_or(0) as i64,
            };
            check_eq(key, want, got, &mut failures);
        }
    }
    for key in ["D", "M", "reg", "satdeg"] {
        if let Some(raw) = get(key) {
            let Some(want) = parse_i64(key, raw, &mut failures) else { continue };
            let Some((inv, _)) = entry.invariants(&mut failures) else { continue };
            let got = match key {
                "D" => inv.d_inv as i64,
                "M" => inv.m_inv as i64,
                "reg" => inv.reg as i64,
                _ => inv.satdeg as i64,
            };
            check_eq(key, want, got, &mut failures);
        }
    }
    if let Some(raw) = get("saturated") {
        if let Some(want) = parse_bool("saturated", raw, &mut failures) {
            if let Some((_, ginres)) = entry.invariants(&mut failures) {
                check_eq("saturated", want, borel::is_saturated(&ginres.gin), &mut failures);
            }
        }
    }
    if let Some(raw) = get("gin") {
        let want = raw.to_string();
        if let Some((_, ginres)) = entry.invariants(&mut failures) {
            let got = report::monomial_strings(&ginres.gin, &src.ring).join(", ");
            check_eq("gin", want, got, &mut failures);
        }
    }
    if let Some(raw) = get("spor") {
        let want = raw.to_string();
        if let Some((_, ginres)) = entry.invariants(&mut failures) {
            let got: Vec<String> = borel::sporadic_zeros(&ginres.gin)
                .iter()
                .map(|m| m.display(&src.ring.vars))
                .collect();
            check_eq("spor", want, got.join(", "), &mut failures);
        }
    }
    if let Some(raw) = get("delta1") {
        if let Some(want) = parse_csv("delta1", raw, &mut failures) {
            if want.is_empty() {
                failures.push("delta1: empty expectation".to_string());
            } else {
                let to = (want.len() - 1) as u32;
                let table = hilbert::hilbert_table(&src.ring, &src.gens, to);
                check_eq("delta1", want, table.delta1.clone(), &mut failures);
            }
        }
    }
    for (key, s) in [("r1", 1usize), ("r2", 2), ("r3", 3)] {
        if let Some(raw) = get(key) {
            let Some(want) = parse_i64(key, raw, &mut failures) else { continue };
            match reduction::reduction_number(&src.ring, &src.gens, s, seed) {
                Ok(profile) => check_eq(key, want, profile.value, &mut failures),
                Err(e) => failures.push(format!("{key}: {e}")),
            }
        }
    }
    if let Some(raw) = get("wlp") {
        if let Some(want) = parse_bool("wlp", raw, &mut failures) {
            match wlp::wlp_test(&src.ring, &src.gens, seed) {
                Ok(outcome) => check_eq("wlp", want, outcome.holds, &mut failures),
                Err(e) => failures.push(format!("wlp: {e}")),
            }
        }
    }
    if let Some(raw) = get("flat_d") {
        if raw == "none" {
            if let Some(rep) = entry.growth1(&mut failures) {
                check_eq("flat_d", None, rep.d, &mut failures);
            }
        } else if let Some(want) = parse_i64("flat_d", raw, &mut failures) {
            if let Some(rep) = entry.growth1(&mut failures) {
                check_eq("flat_d", Some(want), rep.d.map(|d| d as i64), &mut failures);
            }
        }
    }
    if let Some(raw) = get("flat_s") {
        if let Some(want) = parse_i64("flat_s", raw, &mut failures) {
            if let Some(rep) = entry.growth1(&mut failures) {
                check_eq("flat_s", Some(want as i128), rep.s, &mut failures);
            }
        }
    }
    if let Some(raw) = get("growth2_d") {
        if let Some(want_d) = parse_i64("growth2_d", raw, &mut failures) {
            match growth::second_difference_pipeline(
                &src.ring,
                &src.gens,
                want_d as u32,
                seed,
                trials,
                &label,
            ) {
                Ok(rep) => {
                    if let Some(raw_deg) = get("factor_degree") {
                        if let Some(want) = parse_i64("factor_degree", raw_deg, &mut failures) {
                            let got = rep.common_factor.as_ref().and_then(|f| f.degree());
                            check_eq(
                                "factor_degree",
                                Some(want),
                                got.map(|d| d as i64),
                                &mut failures,
                            );
                        }
                    }
                }
                Err(e) => failures.push(format!("second-difference analysis: {e}")),
            }
        }
    } else if get("factor_degree").is_some() {
        failures.push("factor_degree: needs growth2_d".to_string());
    }
    if let Some(raw) = get("points") {
        if let Some(count) = parse_i64("points", raw, &mut failures) {
            let ps = points::random_points(&src.ring, count as usize, seed);
            if let Some(raw_hv) = get("hvec") {
                if let Some(want) = parse_csv("hvec", raw_hv, &mut failures) {
                    let got = points::h_vector(&src.ring, &ps);
                    check_eq("hvec", want, got, &mut failures);
                }
            }
        }
    } else if get("hvec").is_some() {
        failures.push("hvec: needs points".to_string());
    }

    EntryResult {
        file,
        label,
        failures,
    }
}
