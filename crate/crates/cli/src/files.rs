//! TOML input formats.
//!
//! Germ file:
//!
//! ```toml
//! vars = ["x", "y"]
//! defining = ["x^2 - y^3"]
//! function = "x"
//! seed = 0        # optional
//! samples = 3     # optional
//! bound = 7       # optional
//! ```
//!
//! Strata file:
//!
//! ```toml
//! dimX = 2
//! expected_eu = 0   # optional
//!
//! [[strata]]
//! name = "W0"
//! chi_l = 1
//! chi_f = 2
//! eu_X = 2
//! regular = false   # optional
//! ```

use std::path::Path;

use germinv::{parse, GermSpec, Polynomial, StrataTable, StratumDatum, VarTable};
use serde::Deserialize;

use crate::Failure;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GermFile {
    pub vars: Vec<String>,
    pub defining: Vec<String>,
    pub function: String,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub bound: Option<i64>,
}

/// A germ file after every expression has been parsed.
pub struct LoadedGerm {
    pub file: GermFile,
    pub vars: VarTable,
    pub germ: GermSpec,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrataFile {
    #[serde(rename = "dimX")]
    pub dim_x: usize,
    pub expected_eu: Option<i64>,
    #[serde(default)]
    pub strata: Vec<StratumRow>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumRow {
    pub name: String,
    pub chi_l: i64,
    pub chi_f: i64,
    #[serde(rename = "eu_X")]
    pub eu_x: i64,
    #[serde(default)]
    pub regular: bool,
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::input("io", format!("cannot read {}: {e}", path.display())))
}

pub fn parse_expr(src: &str, vars: &VarTable, what: &str) -> Result<Polynomial, Failure> {
    parse(src, vars).map_err(|e| Failure::input("parse", format!("{what} {src:?}: {e}")))
}

pub fn load_germ(path: &Path) -> Result<LoadedGerm, Failure> {
    let text = read(path)?;
    let file: GermFile = toml::from_str(&text)
        .map_err(|e| Failure::input("malformed-file", one_line(&e.to_string())))?;
    let vars = VarTable::new(file.vars.iter().cloned())
        .map_err(|e| Failure::input("malformed-file", format!("vars: {e}")))?;
    let defining = file
        .defining
        .iter()
        .enumerate()
        .map(|(i, src)| parse_expr(src, &vars, &format!("defining[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let func = parse_expr(&file.function, &vars, "function")?;
    let germ = GermSpec::new(vars.len(), defining, func).map_err(crate::invariant_failure)?;
    Ok(LoadedGerm { file, vars, germ })
}

pub fn load_strata(path: &Path) -> Result<(StrataTable, Option<i64>), Failure> {
    let text = read(path)?;
    let file: StrataFile = toml::from_str(&text)
        .map_err(|e| Failure::input("malformed-file", one_line(&e.to_string())))?;
    let strata = file
        .strata
        .into_iter()
        .map(|r| {
            let d = StratumDatum::new(r.name, r.chi_l, r.chi_f, r.eu_x);
            if r.regular {
                d.regular()
            } else {
                d
            }
        })
        .collect();
    let table = StrataTable::new(file.dim_x, strata)
        .map_err(|e| Failure::input("malformed-file", e.to_string()))?;
    Ok((table, file.expected_eu))
}

/// TOML errors span several lines with a source excerpt; keep the reason on
/// one line.
fn one_line(msg: &str) -> String {
    msg.split_whitespace().collect::<Vec<_>>().join(" ")
}
