//! Command results, serialized as JSON or printed as text tables.

use std::fmt::Write;

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

/// An element of `F_q` as coefficients over `F_p` in the power basis of the
/// tower generator, least degree first.
pub type ElemCoeffs = Vec<u32>;

/// A polynomial over `F_q`, least degree first.
pub type PolyCoeffs = Vec<ElemCoeffs>;

#[derive(Clone, Debug, Serialize)]
pub struct RatCoeffs {
    pub num: PolyCoeffs,
    pub den: PolyCoeffs,
}

#[derive(Clone, Debug, Serialize)]
pub struct FieldInfo {
    pub declaration: String,
    pub p: u32,
    pub e: u32,
    pub q: u32,
    pub m: u32,
    /// Defining polynomial of `F_q` over `F_p`.
    pub modulus: Vec<u32>,
    pub zeta: String,
    pub zeta_coeffs: ElemCoeffs,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigInfo {
    pub seed: u64,
    pub degree_bound: Option<usize>,
    pub budget: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProfileEntry {
    pub place: String,
    pub degree: usize,
    pub index: u32,
    pub residue: String,
    pub residue_coeffs: PolyCoeffs,
}

#[derive(Clone, Debug, Serialize)]
pub struct NormEntry {
    pub place: String,
    pub degree: usize,
    pub index: u32,
    pub residue: String,
    pub residue_coeffs: PolyCoeffs,
    pub norm: String,
    pub norm_coeffs: ElemCoeffs,
    pub norm_index: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct Valuation {
    pub place: String,
    pub valuation: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub class: String,
    pub status: &'static str,
    pub cofactor: Option<String>,
    pub cofactor_coeffs: Option<RatCoeffs>,
    pub support: Vec<String>,
    pub valuations: Vec<Valuation>,
    pub candidates_examined: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Contribution {
    pub prime: String,
    pub raw: i64,
    pub index: u32,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Outcome {
    Residues {
        profile: Vec<ProfileEntry>,
    },
    Zero {
        result: &'static str,
        profile: Vec<ProfileEntry>,
    },
    Reciprocity {
        holds: bool,
        sum: u32,
        profile: Vec<NormEntry>,
    },
    Slot {
        joint_support: Option<Vec<String>>,
        f: String,
        f_coeffs: RatCoeffs,
        splitting_field: String,
        degree_bound: usize,
        certificates: Vec<Certificate>,
    },
    AlgBuild {
        a: String,
        a_coeffs: ElemCoeffs,
        b: String,
        b_coeffs: ElemCoeffs,
        degree: usize,
        dimension: usize,
        center_dimension: usize,
        basis: Vec<String>,
        table: Vec<Vec<String>>,
    },
    AlgSplit {
        a: String,
        a_coeffs: ElemCoeffs,
        b: String,
        b_coeffs: ElemCoeffs,
        witness_kind: &'static str,
        witness: Vec<String>,
        verified: bool,
    },
    R2dMult {
        prime: String,
        unit: String,
        index: u32,
    },
    R2dReciprocity {
        holds: bool,
        sum: u32,
        breakdown: Vec<Contribution>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct CommandReport {
    pub command: String,
    pub kind: &'static str,
    #[serde(flatten)]
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorInfo {
    pub name: &'static str,
    pub message: String,
    /// 1-based index of the failing command, absent for input errors.
    pub command: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SessionReport {
    pub schema_version: u32,
    pub field: Option<FieldInfo>,
    pub config: ConfigInfo,
    pub results: Vec<CommandReport>,
    pub error: Option<ErrorInfo>,
}

fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        format!("  {}\n", padded.join("  ").trim_end())
    };
    out.push_str(&line(header.to_vec()));
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
}

fn profile_rows(profile: &[ProfileEntry]) -> Vec<Vec<String>> {
    profile
        .iter()
        .map(|e| {
            vec![
                e.place.clone(),
                e.degree.to_string(),
                e.index.to_string(),
                e.residue.clone(),
            ]
        })
        .collect()
}

fn places_list(places: &[String]) -> String {
    if places.is_empty() {
        "(none)".to_string()
    } else {
        places.join(", ")
    }
}

impl CommandReport {
    pub fn render_text(&self, out: &mut String) {
        match &self.outcome {
            Outcome::Residues { profile } => {
                let _ = writeln!(out, "ramified at {} place(s)", profile.len());
                if !profile.is_empty() {
                    table(out, &["place", "deg", "index", "residue"], &profile_rows(profile));
                }
            }
            Outcome::Zero { result, profile } => {
                let _ = writeln!(out, "result: {result}");
                if !profile.is_empty() {
                    table(out, &["place", "deg", "index", "residue"], &profile_rows(profile));
                }
            }
            Outcome::Reciprocity { holds, sum, profile } => {
                if !profile.is_empty() {
                    let rows: Vec<Vec<String>> = profile
                        .iter()
                        .map(|e| {
                            vec![
                                e.place.clone(),
                                e.degree.to_string(),
                                e.index.to_string(),
                                e.residue.clone(),
                                e.norm.clone(),
                                e.norm_index.to_string(),
                            ]
                        })
                        .collect();
                    table(out, &["place", "deg", "index", "residue", "norm", "norm index"], &rows);
                }
                let verdict = if *holds { "holds" } else { "FAILS" };
                let _ = writeln!(out, "sum of norm indices: {sum} ({verdict})");
            }
            Outcome::Slot {
                joint_support,
                f,
                splitting_field,
                degree_bound,
                certificates,
                ..
            } => {
                if let Some(js) = joint_support {
                    let _ = writeln!(out, "joint support: {}", places_list(js));
                }
                let _ = writeln!(out, "f = {f}");
                let _ = writeln!(out, "splitting field: {splitting_field}");
                let _ = writeln!(out, "degree bound: {degree_bound}");
                for (i, c) in certificates.iter().enumerate() {
                    let _ = writeln!(out, "class {}: {}", i + 1, c.class);
                    let _ = writeln!(out, "  status: {}", c.status);
                    match &c.cofactor {
                        Some(b) => {
                            let _ = writeln!(out, "  b = {b}");
                        }
                        None => {
                            let _ = writeln!(out, "  b not found within the bound");
                        }
                    }
                    let _ = writeln!(out, "  support: {}", places_list(&c.support));
                    if !c.valuations.is_empty() {
                        let vals: Vec<String> = c
                            .valuations
                            .iter()
                            .map(|v| format!("{}: {}", v.place, v.valuation))
                            .collect();
                        let _ = writeln!(out, "  v(f): {}", vals.join(", "));
                    }
                    let _ = writeln!(out, "  candidates examined: {}", c.candidates_examined);
                }
            }
            Outcome::AlgBuild {
                a,
                b,
                degree,
                dimension,
                center_dimension,
                basis,
                table: t,
                ..
            } => {
                let _ = writeln!(
                    out,
                    "symbol algebra ({a}, {b}) of degree {degree}, dimension {dimension}"
                );
                let _ = writeln!(out, "center dimension: {center_dimension}");
                let _ = writeln!(out, "products (row * column):");
                let mut header: Vec<&str> = vec!["*"];
                header.extend(basis.iter().map(String::as_str));
                let rows: Vec<Vec<String>> = basis
                    .iter()
                    .zip(t)
                    .map(|(name, row)| {
                        let mut r = vec![name.clone()];
                        r.extend(row.iter().cloned());
                        r
                    })
                    .collect();
                table(out, &header, &rows);
            }
            Outcome::AlgSplit {
                a,
                b,
                witness_kind,
                witness,
                verified,
                ..
            } => {
                match *witness_kind {
                    "conic" => {
                        let _ = writeln!(
                            out,
                            "split: {a}*X^2 + {b}*Y^2 = Z^2 at (X, Y, Z) = ({})",
                            witness.join(", ")
                        );
                    }
                    _ => {
                        let _ = writeln!(out, "split: zero divisor {}", witness.join(""));
                    }
                }
                let _ = writeln!(out, "witness verified: {}", if *verified { "yes" } else { "no" });
            }
            Outcome::R2dMult { prime, unit, index } => {
                let _ = writeln!(out, "r_{prime}({unit}) = {index}");
            }
            Outcome::R2dReciprocity { holds, sum, breakdown } => {
                if !breakdown.is_empty() {
                    let rows: Vec<Vec<String>> = breakdown
                        .iter()
                        .map(|c| vec![c.prime.clone(), c.raw.to_string(), c.index.to_string()])
                        .collect();
                    table(out, &["prime", "contribution", "mod m"], &rows);
                }
                let verdict = if *holds { "holds" } else { "FAILS" };
                let _ = writeln!(out, "sum: {sum} ({verdict})");
            }
        }
    }
}

impl SessionReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(f) = &self.field {
            let _ = writeln!(out, "{}", f.declaration);
            let _ = writeln!(out, "q = {}, zeta = {}", f.q, f.zeta);
        }
        for (i, r) in self.results.iter().enumerate() {
            let _ = writeln!(out, "\n[{}] {}", i + 1, r.command);
            r.render_text(&mut out);
        }
        out
    }
}
