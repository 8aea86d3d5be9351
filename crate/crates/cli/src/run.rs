//! Command dispatch.

use k2slot_core::cyclic_algebra::{
    self, build_algebra, center_dimension, split_witness, verify_witness, SplitWitness, SymbolAlgebra,
};
use k2slot_core::funcfield::{Place, RationalFunction};
use k2slot_core::gf::{ExtField, FieldSpec, Fq, Poly};
use k2slot_core::k2::{ramification_seeded, reciprocity_sum, K2Element, RamificationProfile};
use k2slot_core::local2d::{mult_index, reciprocity_2d};
use k2slot_core::slot::{
    self, certify_slot_with_budget, joint_support, splitting_field_descriptor, SlotCertificate, SlotProblem,
};

use crate::ast::{Command, Session};
use crate::error::CliError;
use crate::parser::parse;
use crate::render::{render_command, render_decl, render_factored, render_k2, render_ratfn};
use crate::report::{
    Certificate, CommandReport, ConfigInfo, Contribution, ErrorInfo, FieldInfo, NormEntry, Outcome, PolyCoeffs,
    ProfileEntry, RatCoeffs, SessionReport, Valuation, SCHEMA_VERSION,
};

/// Options that do not come from the session text.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SessionConfig {
    pub seed: u64,
    /// Cofactor degree bound; `deg(f) + 4` when absent.
    pub degree_bound: Option<usize>,
    pub json: bool,
    /// Enumeration cap; each search uses its own default when absent.
    pub budget: Option<u64>,
}

/// Captured output of one session.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

/// Parses and runs `input`, stopping at the first failing command.
pub fn run_session(input: &str, config: &SessionConfig) -> Output {
    let mut report = SessionReport {
        schema_version: SCHEMA_VERSION,
        field: None,
        config: ConfigInfo {
            seed: config.seed,
            degree_bound: config.degree_bound,
            budget: config.budget,
        },
        results: Vec::new(),
        error: None,
    };
    let mut failure = None;
    match parse(input) {
        Err(e) => failure = Some((e, None)),
        Ok(session) => {
            report.field = Some(field_info(&session));
            for (i, cmd) in session.commands.iter().enumerate() {
                match run_command(cmd, &session, config) {
                    Ok(r) => report.results.push(r),
                    Err(e) => {
                        failure = Some((e, Some(i + 1)));
                        break;
                    }
                }
            }
        }
    }
    let (stderr, exit_code) = match &failure {
        None => (String::new(), 0),
        Some((e, idx)) => {
            let at = idx.map(|i| format!(" (command {i})")).unwrap_or_default();
            (format!("error{at}: {e}\n"), e.exit_code())
        }
    };
    if let Some((e, idx)) = failure {
        report.error = Some(ErrorInfo {
            name: e.name(),
            message: e.to_string(),
            command: idx,
        });
    }
    let stdout = if config.json {
        let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
        s.push('\n');
        s
    } else {
        report.render_text()
    };
    Output {
        stdout,
        stderr,
        exit_code,
    }
}

fn field_info(s: &Session) -> FieldInfo {
    let k = &s.spec;
    FieldInfo {
        declaration: render_decl(&s.decl),
        p: k.p(),
        e: k.e(),
        q: k.q(),
        m: k.m(),
        modulus: k.modulus().to_vec(),
        zeta: k.render(k.zeta(), s.decl.gen()),
        zeta_coeffs: k.coeffs(k.zeta()),
    }
}

fn poly_coeffs(p: &Poly, k: &FieldSpec) -> PolyCoeffs {
    p.coeffs().iter().map(|&c| k.coeffs(c)).collect()
}

fn ratfn_coeffs(f: &RationalFunction, k: &FieldSpec) -> RatCoeffs {
    RatCoeffs {
        num: poly_coeffs(f.num(), k),
        den: poly_coeffs(f.den(), k),
    }
}

fn run_command(cmd: &Command, s: &Session, config: &SessionConfig) -> Result<CommandReport, CliError> {
    let k = &s.spec;
    let gen = s.decl.gen();
    let outcome = match cmd {
        Command::Residues(alpha) => Outcome::Residues {
            profile: profile_entries(&ramification_seeded(alpha, config.seed), k, gen),
        },
        Command::Zero(alpha) => {
            let profile = ramification_seeded(alpha, config.seed);
            Outcome::Zero {
                result: if profile.is_empty() { "zero" } else { "nonzero" },
                profile: profile_entries(&profile, k, gen),
            }
        }
        Command::Reciprocity(alpha) => reciprocity(alpha, config, gen),
        Command::SlotFind(classes) => {
            let problem = SlotProblem::new(k, classes.clone())?;
            let support = joint_support(&problem);
            let f = slot::weak_approx_slot(&support, k)?;
            let mut out = slot_outcome(&f, classes, s, config)?;
            if let Outcome::Slot { joint_support, .. } = &mut out {
                *joint_support = Some(support.iter().map(|v| v.render(k, gen)).collect());
            }
            out
        }
        Command::SlotVerify(f, classes) => slot_outcome(f, classes, s, config)?,
        Command::AlgBuild(a, b) => {
            let alg = algebra(k, *a, *b)?;
            let m = alg.degree();
            let basis: Vec<String> = (0..alg.dimension()).map(|t| basis_name(t / m, t % m)).collect();
            let table = (0..alg.dimension())
                .map(|s1| {
                    (0..alg.dimension())
                        .map(|t| {
                            let (c, target) = alg.basis_product(s1, t);
                            let mut v = vec![Poly::zero(); alg.dimension()];
                            v[target] = c.clone();
                            render_element(&alg, &v, k, gen)
                        })
                        .collect()
                })
                .collect();
            Outcome::AlgBuild {
                a: k.render(*a, gen),
                a_coeffs: k.coeffs(*a),
                b: k.render(*b, gen),
                b_coeffs: k.coeffs(*b),
                degree: m,
                dimension: alg.dimension(),
                center_dimension: center_dimension(&alg),
                basis,
                table,
            }
        }
        Command::AlgSplit(a, b) => {
            let alg = algebra(k, *a, *b)?;
            let budget = config.budget.unwrap_or(cyclic_algebra::DEFAULT_BUDGET);
            let w = split_witness(&alg, budget)?;
            let verified = verify_witness(&alg, &w);
            let (witness_kind, witness) = match &w {
                SplitWitness::Conic { x, y, z } => {
                    ("conic", [x, y, z].iter().map(|c| k.render(as_const(c), gen)).collect())
                }
                SplitWitness::ZeroDivisor(e) => ("zero-divisor", vec![render_element(&alg, e, k, gen)]),
            };
            Outcome::AlgSplit {
                a: k.render(*a, gen),
                a_coeffs: k.coeffs(*a),
                b: k.render(*b, gen),
                b_coeffs: k.coeffs(*b),
                witness_kind,
                witness,
                verified,
            }
        }
        Command::R2dMult(p, u) => Outcome::R2dMult {
            prime: format!("({})", p.render(k, gen)),
            unit: render_factored(u, k, gen),
            index: mult_index(p, u, k)?,
        },
        Command::R2dReciprocity(syms) => {
            let r = reciprocity_2d(syms)?;
            Outcome::R2dReciprocity {
                holds: r.holds,
                sum: r.sum,
                breakdown: r
                    .breakdown
                    .iter()
                    .map(|c| Contribution {
                        prime: format!("({})", c.prime.render(k, gen)),
                        raw: c.raw,
                        index: c.index,
                    })
                    .collect(),
            }
        }
    };
    Ok(CommandReport {
        command: render_command(cmd, k, gen),
        kind: cmd.kind(),
        outcome,
    })
}

fn profile_entries(profile: &RamificationProfile, k: &FieldSpec, gen: &str) -> Vec<ProfileEntry> {
    profile
        .entries
        .iter()
        .map(|e| ProfileEntry {
            place: e.place.render(k, gen),
            degree: e.place.degree(),
            index: e.index,
            residue: e.representative.render(k, "t", gen),
            residue_coeffs: poly_coeffs(&e.representative, k),
        })
        .collect()
}

fn reciprocity(alpha: &K2Element, config: &SessionConfig, gen: &str) -> Outcome {
    let k = alpha.spec();
    let profile = ramification_seeded(alpha, config.seed);
    let (holds, sum) = reciprocity_sum(alpha, &profile);
    let entries = profile
        .entries
        .iter()
        .map(|e| {
            let kappa = e.place.residue_field(k).field;
            let norm = kappa.norm_to_base(&e.representative);
            NormEntry {
                place: e.place.render(k, gen),
                degree: e.place.degree(),
                index: e.index,
                residue: e.representative.render(k, "t", gen),
                residue_coeffs: poly_coeffs(&e.representative, k),
                norm: k.render(norm, gen),
                norm_coeffs: k.coeffs(norm),
                norm_index: k.power_index(norm).expect("norm of a unit"),
            }
        })
        .collect();
    Outcome::Reciprocity {
        holds,
        sum,
        profile: entries,
    }
}

fn slot_outcome(
    f: &RationalFunction,
    classes: &[K2Element],
    s: &Session,
    config: &SessionConfig,
) -> Result<Outcome, CliError> {
    let k = &s.spec;
    let gen = s.decl.gen();
    let bound = config
        .degree_bound
        .unwrap_or_else(|| f.num().deg_i().max(f.den().deg_i()) as usize + 4);
    let budget = config.budget.unwrap_or(slot::DEFAULT_BUDGET);
    let certificates = classes
        .iter()
        .map(|alpha| certify_slot_with_budget(alpha, f, bound, budget).map(|c| certificate(alpha, &c, k, gen)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Outcome::Slot {
        joint_support: None,
        f: render_ratfn(f, k, gen),
        f_coeffs: ratfn_coeffs(f, k),
        splitting_field: splitting_field_descriptor(f, k, gen),
        degree_bound: bound,
        certificates,
    })
}

fn certificate(alpha: &K2Element, c: &SlotCertificate, k: &FieldSpec, gen: &str) -> Certificate {
    let render_place = |v: &Place| v.render(k, gen);
    Certificate {
        class: render_k2(alpha, k, gen, " + "),
        status: c.status.as_str(),
        cofactor: c.cofactor.as_ref().map(|b| render_ratfn(b, k, gen)),
        cofactor_coeffs: c.cofactor.as_ref().map(|b| ratfn_coeffs(b, k)),
        support: c.support.iter().map(render_place).collect(),
        valuations: c
            .valuations
            .iter()
            .map(|(v, n)| Valuation {
                place: render_place(v),
                valuation: *n,
            })
            .collect(),
        candidates_examined: c.candidates_examined,
    }
}

fn algebra(k: &FieldSpec, a: Fq, b: Fq) -> Result<SymbolAlgebra, CliError> {
    Ok(build_algebra(
        &Poly::constant(a),
        &Poly::constant(b),
        &ExtField::trivial(k),
    )?)
}

fn as_const(c: &Poly) -> Fq {
    c.coeff(0)
}

fn basis_name(i: usize, j: usize) -> String {
    let part = |v: &str, e: usize| match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    };
    let parts: Vec<String> = [part("x", i), part("y", j)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// `Σ c_{ij} x^i y^j` with constant coefficients.
fn render_element(alg: &SymbolAlgebra, v: &[Poly], k: &FieldSpec, gen: &str) -> String {
    let m = alg.degree();
    let mut terms = Vec::new();
    for (t, c) in v.iter().enumerate() {
        let c = as_const(c);
        if c.is_zero() {
            continue;
        }
        let name = basis_name(t / m, t % m);
        let coef = k.render(c, gen);
        terms.push(if name == "1" {
            coef
        } else if c == Fq::ONE {
            name
        } else if k.renders_atomic(c) {
            format!("{coef}*{name}")
        } else {
            format!("({coef})*{name}")
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}
