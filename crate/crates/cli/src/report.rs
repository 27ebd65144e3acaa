//! Human tables and JSON documents. Field order is fixed so that identical
//! inputs give byte-identical output.

use std::fmt::Write as _;

use germinv::invariants::{Check, ColengthRecord, GenericChoice};
use germinv::{InvariantReport, LinearForm, MorsificationReport, Polynomial, StrataTable};
use serde::Serialize;

fn render(p: &Polynomial, names: &[String]) -> String {
    p.display_with(names).to_string()
}

fn render_form(l: &LinearForm, names: &[String]) -> String {
    render(&l.to_polynomial(), names)
}

#[derive(Serialize)]
pub struct MuDoc {
    pub command: &'static str,
    pub vars: Vec<String>,
    pub f: String,
    pub mu: u64,
}

#[derive(Serialize)]
pub struct Settings {
    pub seed: u64,
    pub samples: usize,
    pub bound: i64,
}

#[derive(Serialize)]
pub struct GermInputs {
    pub vars: Vec<String>,
    pub defining: Vec<String>,
    pub function: String,
}

#[derive(Serialize)]
pub struct Invariants {
    pub dim_x: usize,
    pub mu_x: u64,
    pub mu_f: u64,
    pub mu_l: u64,
    pub mu_g_f: u64,
    pub mu_g_f_direct: u64,
    pub mu_g_l: u64,
    pub mu_g_l_direct: u64,
    pub eu_f: i64,
    pub eu_f_gsv: i64,
    pub alpha_q: i64,
}

#[derive(Serialize)]
pub struct SampleDoc {
    pub form: String,
    /// `null` when the slice was not an ICIS.
    pub mu: Option<u64>,
}

#[derive(Serialize)]
pub struct GenericityDoc {
    pub form: String,
    pub mu: u64,
    pub samples: Vec<SampleDoc>,
}

#[derive(Serialize)]
pub struct ColengthDoc {
    pub purpose: String,
    pub level: usize,
    pub ideal: Vec<String>,
    pub value: String,
}

#[derive(Serialize)]
pub struct CheckDoc {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct ReportDoc {
    pub invariants: Invariants,
    pub genericity: GenericityDoc,
    pub colengths: Vec<ColengthDoc>,
    pub checks: Vec<CheckDoc>,
    pub passed: bool,
}

#[derive(Serialize)]
pub struct EuDoc {
    pub command: &'static str,
    pub inputs: GermInputs,
    pub settings: Settings,
    pub report: ReportDoc,
}

fn genericity_doc(g: &GenericChoice, names: &[String]) -> GenericityDoc {
    GenericityDoc {
        form: render_form(&g.form, names),
        mu: g.mu,
        samples: g
            .samples
            .iter()
            .map(|s| SampleDoc {
                form: render_form(&s.form, names),
                mu: s.mu,
            })
            .collect(),
    }
}

fn colength_doc(c: &ColengthRecord, names: &[String]) -> ColengthDoc {
    ColengthDoc {
        purpose: c.purpose.to_string(),
        level: c.level,
        ideal: c
            .ideal
            .generators()
            .iter()
            .map(|g| render(g, names))
            .collect(),
        value: c.value.to_string(),
    }
}

fn check_doc(c: &Check) -> CheckDoc {
    CheckDoc {
        name: c.name,
        passed: c.passed,
        detail: c.detail.clone(),
    }
}

pub fn report_doc(r: &InvariantReport, names: &[String]) -> ReportDoc {
    ReportDoc {
        invariants: Invariants {
            dim_x: r.dim_x,
            mu_x: r.mu_x,
            mu_f: r.mu_f,
            mu_l: r.mu_l,
            mu_g_f: r.mu_g_f,
            mu_g_f_direct: r.mu_g_f_direct,
            mu_g_l: r.mu_g_l,
            mu_g_l_direct: r.mu_g_l_direct,
            eu_f: r.eu_f,
            eu_f_gsv: r.eu_f_gsv,
            alpha_q: r.alpha_q,
        },
        genericity: genericity_doc(&r.genericity, names),
        colengths: r.colengths.iter().map(|c| colength_doc(c, names)).collect(),
        checks: r.checks.iter().map(check_doc).collect(),
        passed: r.all_passed(),
    }
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

/// The invariant tower as a fixed-order two-column table.
pub fn report_table(r: &InvariantReport, names: &[String]) -> String {
    let mut out = String::new();
    let rows: [(&str, String); 11] = [
        ("dim X", r.dim_x.to_string()),
        ("mu(X)", r.mu_x.to_string()),
        ("mu(f)", r.mu_f.to_string()),
        ("generic l", render_form(&r.genericity.form, names)),
        ("mu(l)", r.mu_l.to_string()),
        ("mu_G(f)", r.mu_g_f.to_string()),
        ("mu_G(f) direct", r.mu_g_f_direct.to_string()),
        ("mu_G(l)", r.mu_g_l.to_string()),
        ("mu_G(l) direct", r.mu_g_l_direct.to_string()),
        ("Eu_f", r.eu_f.to_string()),
        ("alpha_q", r.alpha_q.to_string()),
    ];
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<16}{v}");
    }
    let _ = writeln!(out, "{:<16}{}", "Eu_f via GSV", r.eu_f_gsv);
    let _ = writeln!(out, "samples");
    for s in &r.genericity.samples {
        let mu = s.mu.map_or_else(|| "-".to_string(), |m| m.to_string());
        let _ = writeln!(out, "  {:<14}{}", mu, render_form(&s.form, names));
    }
    let _ = writeln!(out, "checks");
    for c in &r.checks {
        let _ = writeln!(out, "  {} {}: {}", verdict(c.passed), c.name, c.detail);
    }
    out
}

#[derive(Serialize)]
pub struct StratumDoc {
    pub name: String,
    pub chi_l: i64,
    pub chi_f: i64,
    pub eu_x: i64,
    pub regular: bool,
}

#[derive(Serialize)]
pub struct StrataDoc {
    pub command: &'static str,
    pub dim_x: usize,
    pub strata: Vec<StratumDoc>,
    pub eu_f: i64,
    pub expected_eu: Option<i64>,
    pub passed: bool,
}

pub fn strata_doc(t: &StrataTable, eu_f: i64, expected: Option<i64>) -> StrataDoc {
    StrataDoc {
        command: "strata",
        dim_x: t.dim_x(),
        strata: t
            .strata()
            .iter()
            .map(|s| StratumDoc {
                name: s.name.clone(),
                chi_l: s.chi_l,
                chi_f: s.chi_f,
                eu_x: s.eu_x,
                regular: s.regular,
            })
            .collect(),
        eu_f,
        expected_eu: expected,
        passed: expected.is_none_or(|e| e == eu_f),
    }
}

pub fn strata_table(doc: &StrataDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<12}{:>8}{:>8}{:>8}",
        "stratum", "chi_l", "chi_f", "Eu_X"
    );
    for s in &doc.strata {
        let _ = writeln!(
            out,
            "{:<12}{:>8}{:>8}{:>8}",
            s.name, s.chi_l, s.chi_f, s.eu_x
        );
    }
    let _ = writeln!(out, "Eu_f = {}", doc.eu_f);
    if let Some(e) = doc.expected_eu {
        let _ = writeln!(out, "expected {e}: {}", verdict(doc.passed));
    }
    out
}

#[derive(Serialize)]
pub struct DrawDoc {
    pub form: String,
    pub count: u64,
    pub order_at_zero: usize,
    pub generic_order: usize,
    pub simple_roots: bool,
}

#[derive(Serialize)]
pub struct OracleDoc {
    pub command: &'static str,
    pub p: u32,
    pub q: u32,
    pub f: String,
    pub settings: Settings,
    pub draws: Vec<DrawDoc>,
    pub morse_count: u64,
    pub eu_f: i64,
    pub passed: bool,
    pub report: ReportDoc,
}

pub fn oracle_doc(
    r: &MorsificationReport,
    f: &Polynomial,
    settings: Settings,
    names: &[String],
) -> OracleDoc {
    OracleDoc {
        command: "oracle-curve",
        p: r.curve.p(),
        q: r.curve.q(),
        f: render(f, names),
        settings,
        draws: r
            .draws
            .iter()
            .map(|d| DrawDoc {
                form: render_form(&d.form, names),
                count: d.count.count,
                order_at_zero: d.count.order_at_zero,
                generic_order: d.count.generic_order,
                simple_roots: d.count.simple_roots,
            })
            .collect(),
        morse_count: r.morse_count,
        eu_f: r.eu_f,
        passed: r.passed,
        report: report_doc(&r.invariants, names),
    }
}

pub fn oracle_table(doc: &OracleDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<16}x^{} - y^{}", "curve", doc.p, doc.q);
    let _ = writeln!(out, "{:<16}{}", "f", doc.f);
    let _ = writeln!(out, "perturbations");
    for d in &doc.draws {
        let _ = writeln!(
            out,
            "  {:<14}count {} (ord {} -> {}){}",
            d.form,
            d.count,
            d.order_at_zero,
            d.generic_order,
            if d.simple_roots {
                ""
            } else {
                " repeated roots"
            }
        );
    }
    let _ = writeln!(out, "{:<16}{}", "morse_count", doc.morse_count);
    let _ = writeln!(out, "{:<16}{}", "Eu_f", doc.eu_f);
    let _ = writeln!(out, "{:<16}{}", "verdict", verdict(doc.passed));
    out
}
