//! Canonical text form of sessions; `parse(render(s)) == s`.

use k2slot_core::funcfield::RationalFunction;
use k2slot_core::gf::FieldSpec;
use k2slot_core::k2::{K2Element, Symbol2};
use k2slot_core::local2d::{FactoredBivariate, LocalSymbol};

use crate::ast::{Command, FieldDecl, Session};

pub fn render_session(s: &Session) -> String {
    let mut out = render_decl(&s.decl);
    out.push_str(";\n");
    for c in &s.commands {
        out.push_str(&render_command(c, &s.spec, s.decl.gen()));
        out.push_str(";\n");
    }
    out
}

pub fn render_decl(d: &FieldDecl) -> String {
    match &d.tower {
        None => format!("field GF({}) m={}", d.q, d.m),
        Some(t) => {
            let mut terms = Vec::new();
            for (i, &c) in t.modulus.iter().enumerate().filter(|(_, c)| **c != 0) {
                let mono = match i {
                    0 => String::new(),
                    1 => t.gen.clone(),
                    _ => format!("{}^{i}", t.gen),
                };
                terms.push(match (c, i) {
                    (_, 0) => c.to_string(),
                    (1, _) => mono,
                    _ => format!("{c}*{mono}"),
                });
            }
            format!(
                "field GF({})=GF({})[{}]/({}) m={}",
                d.q,
                t.p,
                t.gen,
                terms.join("+"),
                d.m
            )
        }
    }
}

pub fn render_command(c: &Command, k: &FieldSpec, gen: &str) -> String {
    match c {
        Command::Residues(a) => format!("k2 residues {}", render_k2(a, k, gen, ", ")),
        Command::Zero(a) => format!("k2 zero {}", render_k2(a, k, gen, ", ")),
        Command::Reciprocity(a) => format!("k2 reciprocity {}", render_k2(a, k, gen, ", ")),
        Command::SlotFind(cs) => format!("slot find {}", render_classes(cs, k, gen)),
        Command::SlotVerify(f, cs) => format!("slot verify {} {}", render_ratfn(f, k, gen), render_classes(cs, k, gen)),
        Command::AlgBuild(a, b) => format!("alg build ({}, {})", k.render(*a, gen), k.render(*b, gen)),
        Command::AlgSplit(a, b) => format!("alg split ({}, {})", k.render(*a, gen), k.render(*b, gen)),
        Command::R2dMult(p, u) => format!("r2d mult ({}, {})", p.render(k, gen), render_factored(u, k, gen)),
        Command::R2dReciprocity(syms) => {
            let parts: Vec<String> = syms.iter().map(|s| render_local_symbol(s, k, gen)).collect();
            format!("r2d reciprocity {}", parts.join(", "))
        }
    }
}

pub fn render_ratfn(f: &RationalFunction, k: &FieldSpec, gen: &str) -> String {
    f.render(k, "t", gen)
}

pub fn render_symbol(s: &Symbol2, k: &FieldSpec, gen: &str) -> String {
    let body = format!("{{{}, {}}}", render_ratfn(&s.a, k, gen), render_ratfn(&s.b, k, gen));
    if s.coeff == 1 {
        body
    } else {
        format!("{}*{body}", s.coeff)
    }
}

pub fn render_k2(a: &K2Element, k: &FieldSpec, gen: &str, sep: &str) -> String {
    let parts: Vec<String> = a.terms().iter().map(|s| render_symbol(s, k, gen)).collect();
    parts.join(sep)
}

fn render_classes(cs: &[K2Element], k: &FieldSpec, gen: &str) -> String {
    let parts: Vec<String> = cs.iter().map(|c| render_k2(c, k, gen, " + ")).collect();
    parts.join(", ")
}

pub fn render_factored(u: &FactoredBivariate, k: &FieldSpec, gen: &str) -> String {
    u.render(k, gen)
}

pub fn render_local_symbol(s: &LocalSymbol, k: &FieldSpec, gen: &str) -> String {
    let body = format!(
        "{{{}, {}}}",
        render_factored(&s.a, k, gen),
        render_factored(&s.b, k, gen)
    );
    if s.coeff == 1 {
        body
    } else {
        format!("{}*{body}", s.coeff)
    }
}
