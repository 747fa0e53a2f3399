use derangement_core::algebra::ratfunc_sign_on_q_gt_1;
use derangement_core::cone::ConeReport;
use derangement_core::{RatFunc, SignVerdict};

use crate::json::extreme_label;
use crate::table::BasisTable;

fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn table_pretty(t: &BasisTable, first_column: usize) -> String {
    let mut rows = vec![std::iter::once(String::from("λ"))
        .chain(t.header(first_column))
        .collect()];
    for (l, row) in t.partitions.iter().zip(&t.entries) {
        let mut r = vec![l.to_string()];
        r.extend(row.iter().map(|c| c.render("q")));
        rows.push(r);
    }
    align(&rows)
}

pub fn table_csv(t: &BasisTable, first_column: usize) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header: Vec<String> = std::iter::once(String::from("lambda"))
        .chain(t.header(first_column))
        .collect();
    w.write_record(&header).expect("in-memory write");
    for (l, row) in t.partitions.iter().zip(&t.entries) {
        let rec: Vec<String> = std::iter::once(l.to_string())
            .chain(row.iter().map(|c| c.render("q")))
            .collect();
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

/// `+`, `0` or `-` for the sign of a coefficient on `q > 1`; `?` if
/// undecided.
pub fn sign_char(c: &RatFunc) -> char {
    match ratfunc_sign_on_q_gt_1(c) {
        SignVerdict::ZeroEverywhere => '0',
        SignVerdict::PositiveOnQgt1 | SignVerdict::NonNegativeOnQgt1 => '+',
        SignVerdict::NegativeSomewhere(_) => '-',
        SignVerdict::Undetermined => '?',
    }
}

/// Sign pattern of the extremes on the full-degree diagrams and `∅`.
pub fn sign_table(r: &ConeReport) -> String {
    let labels: Vec<String> = (0..r.extremes.len()).map(|i| extreme_label(r, i)).collect();
    let mut rows = vec![std::iter::once(String::from("sign")).chain(labels).collect::<Vec<_>>()];
    let mut diagrams: Vec<_> = derangement_core::partition::partitions_of(r.n);
    if r.n > 0 {
        diagrams.push(derangement_core::Partition::empty());
    }
    for l in diagrams {
        let mut row = vec![l.to_string()];
        row.extend(r.extremes.iter().map(|e| sign_char(&e.get(&l)).to_string()));
        rows.push(row);
    }
    align(&rows)
}

pub fn cone_pretty(r: &ConeReport) -> String {
    let mut out = String::new();
    let verdict = if r.simplicial { "simplicial" } else { "not simplicial" };
    out.push_str(&format!(
        "level {}: {verdict}, {} extreme rays\n",
        r.n,
        r.extremes.len()
    ));
    out.push_str("eigendiagrams:");
    for (i, e) in r.eigendiagram_of.iter().enumerate().take(r.n + 1) {
        let d = e.as_ref().map_or_else(|| String::from("none"), ToString::to_string);
        out.push_str(&format!(" {}={d}", extreme_label(r, i)));
    }
    out.push('\n');
    for i in r.n + 1..r.extremes.len() {
        let terms: Vec<String> = r.tau_coords[i]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({}) tau_{k}", c.render("q")))
            .collect();
        out.push_str(&format!("{} = {}\n", extreme_label(r, i), terms.join(" + ")));
    }
    if !r.sample_ray_counts.is_empty() {
        let s: Vec<String> = r.sample_ray_counts.iter().map(|(q, c)| format!("q={q}: {c}")).collect();
        out.push_str(&format!("sampled ray counts: {}\n", s.join(", ")));
    }
    if let Some(h) = r.hat_tau_is_tau_n {
        out.push_str(&format!("hat tau equals tau_{}: {h}\n", r.n));
    }
    if r.sample_disagreement {
        out.push_str("sample disagreement: the sampled cones do not agree\n");
    }
    out.push('\n');
    out.push_str(&sign_table(r));
    for n in &r.notes {
        out.push_str(&format!("note: {n}\n"));
    }
    out
}
