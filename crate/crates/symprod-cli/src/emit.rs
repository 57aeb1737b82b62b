//! Output rendering: aligned text, JSON, and CSV.
//!
//! The JSON series form is re-readable: coefficients are canonical
//! polynomial strings that parse back over the listed variables.

use serde::{Deserialize, Serialize};

use symprod::genera::SpecializationReport;
use symprod::{GenusData, GenusProfile, LaurentPoly, Partition, TruncatedSeries};

#[derive(Serialize, Deserialize)]
pub struct SeriesDoc {
    pub command: String,
    pub order: usize,
    pub results: Vec<SeriesResult>,
}

#[derive(Serialize, Deserialize)]
pub struct SeriesResult {
    pub name: String,
    pub kind: String,
    pub vars: Vec<String>,
    /// Canonical polynomial strings, one per power of `t`.
    pub coefficients: Vec<String>,
}

pub fn series_doc(command: &str, order: usize, results: &[(GenusProfile, TruncatedSeries)]) -> SeriesDoc {
    SeriesDoc {
        command: command.to_string(),
        order,
        results: results
            .iter()
            .map(|(p, s)| SeriesResult {
                name: p.name.clone(),
                kind: p.kind.as_str().to_string(),
                vars: s.vars().names().to_vec(),
                coefficients: s.coefficients().iter().map(|c| c.to_string()).collect(),
            })
            .collect(),
    }
}

pub fn series_json(command: &str, order: usize, results: &[(GenusProfile, TruncatedSeries)]) {
    let doc = series_doc(command, order, results);
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
}

pub fn series_text(order: usize, results: &[(GenusProfile, TruncatedSeries)]) {
    let width = order.to_string().len();
    for (profile, series) in results {
        println!("# {} ({}, order {order})", profile.name, describe(profile));
        for (n, c) in series.coefficients().iter().enumerate() {
            println!("n={n:<width$}  {c}");
        }
    }
}

pub fn series_csv(results: &[(GenusProfile, TruncatedSeries)]) {
    println!("name,n,monomial,coefficient");
    for (profile, series) in results {
        for (n, c) in series.coefficients().iter().enumerate() {
            for (m, v) in c.terms() {
                println!("{},{n},{},{v}", profile.name, c.monomial_string(m));
            }
        }
    }
}

fn describe(profile: &GenusProfile) -> String {
    match &profile.data {
        GenusData::Signature { sigma, chi } => {
            format!("signature sigma={sigma} chi={chi}")
        }
        GenusData::Euler(chi) => format!("euler chi={chi}"),
        GenusData::Poly(_) => profile.kind.as_str().to_string(),
    }
}

#[derive(Serialize)]
struct InvariantRow<'a> {
    name: &'a str,
    kind: &'a str,
    n: usize,
    value: String,
}

pub fn invariant(n: usize, rows: &[(GenusProfile, LaurentPoly)], json: bool) {
    if json {
        let doc: Vec<InvariantRow> = rows
            .iter()
            .map(|(p, v)| InvariantRow {
                name: &p.name,
                kind: p.kind.as_str(),
                n,
                value: v.to_string(),
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        return;
    }
    let name_width = rows.iter().map(|(p, _)| p.name.len()).max().unwrap_or(4);
    for (p, v) in rows {
        println!("{:<name_width$}  n={n}  {v}", p.name);
    }
}

#[derive(Serialize)]
struct SpecializeDoc<'a> {
    name: &'a str,
    e: String,
    chi_y: String,
    betti: String,
    euler: i64,
    arithmetic_genus: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sigma: Option<i64>,
}

pub fn specialize(reports: &[(String, SpecializationReport)], skipped: &[String], json: bool) {
    if json {
        let docs: Vec<SpecializeDoc> = reports
            .iter()
            .map(|(name, r)| SpecializeDoc {
                name,
                e: r.e.poly().expect("e poly").to_string(),
                chi_y: r.chi_y.poly().expect("chi_y poly").to_string(),
                betti: r.betti.poly().expect("betti poly").to_string(),
                euler: match r.euler.data {
                    GenusData::Euler(chi) => chi,
                    _ => unreachable!(),
                },
                arithmetic_genus: r.arithmetic_genus,
                sigma: r.signature.as_ref().map(|s| match s.data {
                    GenusData::Signature { sigma, .. } => sigma,
                    _ => unreachable!(),
                }),
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&docs).expect("serializable"));
        return;
    }
    for (name, r) in reports {
        println!("# {name}");
        println!("e                = {}", r.e.poly().expect("e poly"));
        println!("chi_y            = {}", r.chi_y.poly().expect("chi_y poly"));
        println!("betti            = {}", r.betti.poly().expect("betti poly"));
        let euler = match r.euler.data {
            GenusData::Euler(chi) => chi,
            _ => unreachable!(),
        };
        println!("euler            = {euler}");
        match r.arithmetic_genus {
            Some(a) => println!("arithmetic_genus = {a}"),
            None => println!("arithmetic_genus = undefined (negative powers of y)"),
        }
        match &r.signature {
            Some(s) => {
                if let GenusData::Signature { sigma, chi } = s.data {
                    println!("signature        = {sigma} (chi = {chi})");
                }
            }
            None => println!("signature        = undefined (parity mismatch)"),
        }
    }
    for name in skipped {
        println!("# {name}: skipped (specialization needs a hodge profile)");
    }
}

#[derive(Serialize)]
struct CharacterDoc {
    n: u64,
    classes: Vec<String>,
    class_sizes: Vec<u64>,
    rows: Vec<CharacterRow>,
}

#[derive(Serialize)]
struct CharacterRow {
    lambda: String,
    values: Vec<i64>,
}

pub fn characters_json(n: u64, parts: &[Partition], classes: &[Partition], table: &[Vec<i64>]) {
    let ncols = parts.len();
    let doc = CharacterDoc {
        n,
        classes: classes.iter().map(|c| c.to_string()).collect(),
        class_sizes: classes.iter().map(symprod::symgrp::class_size).collect(),
        rows: parts
            .iter()
            .zip(table)
            .map(|(lambda, row)| CharacterRow {
                lambda: lambda.to_string(),
                values: (0..ncols).map(|j| row[ncols - 1 - j]).collect(),
            })
            .collect(),
    };
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
}
