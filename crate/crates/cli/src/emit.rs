use std::fmt::Write as _;

use crate::input::{Format, Section};
use crate::report::Report;

pub fn emit(report: &Report, format: Format, sections: &[Section]) -> String {
    match format {
        Format::Machine => emit_machine(report),
        Format::Text => emit_text(report, sections),
    }
}

/// Pretty JSON with a trailing newline. Field order is the struct order, so
/// identical reports give identical bytes.
pub fn emit_machine(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn parse_machine(s: &str) -> Result<Report, serde_json::Error> {
    serde_json::from_str(s)
}

pub fn format_word(w: &[usize]) -> String {
    if w.is_empty() {
        return "e".to_string();
    }
    w.iter().map(|i| format!("s{i}")).collect()
}

pub fn format_vector<T: std::fmt::Display>(v: &[T]) -> String {
    let inner: Vec<String> = v.iter().map(T::to_string).collect();
    format!("({})", inner.join(","))
}

fn format_roots(roots: &[Vec<i64>]) -> String {
    if roots.is_empty() {
        return "-".to_string();
    }
    roots.iter().map(|r| format_vector(r)).collect::<Vec<_>>().join(" ")
}

fn format_poincare(c: &[usize]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(d, &k)| match (d, k) {
            (0, k) => k.to_string(),
            (1, 1) => "q".to_string(),
            (1, k) => format!("{k}q"),
            (d, 1) => format!("q^{d}"),
            (d, k) => format!("{k}q^{d}"),
        })
        .collect();
    terms.join(" + ")
}

/// Left-aligned columns separated by two spaces.
fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut line = |cells: &[String]| {
        let mut s = String::new();
        for (k, (cell, w)) in cells.iter().zip(&width).enumerate() {
            if k + 1 == cells.len() {
                s.push_str(cell);
            } else {
                let pad = w - cell.chars().count();
                s.push_str(cell);
                s.extend(std::iter::repeat_n(' ', pad + 2));
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&header.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    for row in rows {
        line(row);
    }
}

pub fn emit_text(r: &Report, sections: &[Section]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "root system  {}  (|W| = {})", r.root_system, r.weyl_order);
    let _ = writeln!(out, "t            {}", format_vector(&r.t));
    let _ = writeln!(out, "z            {}", format_vector(&r.z));
    let _ = writeln!(out, "compact      {}", r.compact_type);

    for section in sections {
        out.push('\n');
        match section {
            Section::Grading => {
                out.push_str("[grading]\n");
                table(
                    &mut out,
                    &["|u+|", "|levi|", "|u-|", "r = dim G/Q-"],
                    &[vec![
                        r.u_plus_size.to_string(),
                        r.levi_size.to_string(),
                        r.u_plus_size.to_string(),
                        r.r.to_string(),
                    ]],
                );
            }
            Section::Chambers => {
                let _ = writeln!(out, "[chambers]  {} with t in the closure", r.chambers.len());
                let rows: Vec<Vec<String>> = r
                    .chambers
                    .iter()
                    .map(|c| {
                        vec![
                            format_word(&c.word),
                            format_roots(&c.simple_roots),
                            format_vector(&c.t_in_chamber),
                            if c.s2 { "pass" } else { "fail" }.to_string(),
                            format_roots(&c.violators),
                        ]
                    })
                    .collect();
                table(&mut out, &["word", "simple roots", "t in chamber", "s2", "violators"], &rows);
            }
            Section::Criterion => {
                out.push_str("[criterion]\n");
                let _ = writeln!(out, "verdict      {}", r.verdict.as_str());
                let _ = writeln!(out, "witnesses    {}", r.witnesses.len());
                for w in &r.witnesses {
                    let _ = writeln!(out, "  {}  {}", format_word(&w.word), format_roots(&w.simple_roots));
                }
                let _ = writeln!(out, "k meets u    {}", if r.k_meets_u { "yes" } else { "no" });
                if let Some(note) = &r.obstruction_note {
                    let _ = writeln!(out, "note         {note}");
                }
            }
            Section::Cells => {
                let _ = writeln!(
                    out,
                    "[cells]  chamber {}, |W1| = {}, r = {}",
                    format_word(&r.cells_chamber),
                    r.w1_order,
                    r.r
                );
                let rows: Vec<Vec<String>> = r
                    .cells
                    .iter()
                    .map(|c| {
                        vec![
                            format_word(&c.word),
                            c.n.to_string(),
                            c.dim.to_string(),
                            format_roots(&c.delta_sigma),
                        ]
                    })
                    .collect();
                table(&mut out, &["word", "n", "dim", "delta_sigma"], &rows);
            }
            Section::Codim => {
                out.push_str("[codim]\n");
                let _ = writeln!(out, "complement codim  {}", r.complement_codim);
            }
            Section::Poincare => {
                out.push_str("[poincare]\n");
                let _ = writeln!(out, "W^1(q) = {}", format_poincare(&r.poincare));
            }
            Section::Checks => {
                out.push_str("[checks]\n");
                match &r.checks {
                    None => out.push_str("not run (use --verify)\n"),
                    Some(c) => {
                        let rows: Vec<Vec<String>> = c
                            .results
                            .iter()
                            .map(|x| {
                                vec![
                                    x.name.clone(),
                                    if x.passed { "ok" } else { "FAIL" }.to_string(),
                                    x.detail.clone(),
                                ]
                            })
                            .collect();
                        table(&mut out, &["check", "status", "detail"], &rows);
                        let _ = writeln!(out, "{} passed, {} failed", c.passed, c.failed);
                    }
                }
            }
        }
    }
    out
}
