use k2slot_cli::{parse, render_session, run_session, CliError, Command, SessionConfig};
use k2slot_core::funcfield::RationalFunction;
use k2slot_core::gf::FieldSpec;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn steinberg_session() {
    let s = parse("field GF(3) m=2; k2 zero {t, 1-t};").unwrap();
    assert_eq!(s.spec, FieldSpec::prime(3, 2).unwrap());
    assert_eq!(s.commands.len(), 1);
    let Command::Zero(alpha) = &s.commands[0] else {
        panic!("expected a zero command")
    };
    let k = &s.spec;
    assert_eq!(alpha.terms()[0].a, RationalFunction::t());
    assert_eq!(
        alpha.terms()[0].b,
        RationalFunction::one().sub(&RationalFunction::t(), k)
    );
}

#[test]
fn tower_slot_session() {
    let s = parse("field GF(9)=GF(3)[u]/(u^2+1) m=4; slot find {t,u}, {t+1,u};").unwrap();
    assert_eq!(s.spec.q(), 9);
    assert_eq!(s.spec.m(), 4);
    let Command::SlotFind(classes) = &s.commands[0] else {
        panic!("expected slot find")
    };
    assert_eq!(classes.len(), 2);
    assert_eq!(classes[0].terms()[0].b.as_constant(), Some(s.spec.gen_u()));
}

fn semantic(input: &str) -> String {
    match parse(input) {
        Err(CliError::Semantic { message, .. }) => message,
        other => panic!("expected a semantic error for {input:?}, got {other:?}"),
    }
}

#[test]
fn semantic_errors() {
    // GF(4) has no canonical presentation here; a tower must be given
    assert!(semantic("field GF(4) m=3;").contains("tower"));
    assert!(semantic("field GF(5) m=3;").contains("divide"));
    assert!(semantic("field GF(6) m=5;").contains("prime power"));
    assert!(semantic("field GF(3) m=2; k2 zero {t/(t-t), 2};").contains("ZeroDenominator"));
    assert!(semantic("field GF(3) m=2; k2 zero {t, 0};").contains("ZeroFunction"));
    assert!(semantic("field GF(3) m=2; k2 zero {x, 2};").contains("unknown variable"));
    assert!(semantic("field GF(9)=GF(3)[u]/(u^2+u+1) m=2;").contains("ReducibleModulus"));
    assert!(semantic("field GF(9)=GF(3)[u]/(u^3+u+1) m=2;").contains("degree"));
    assert!(semantic("field GF(5) m=2; r2d mult (x+1, y);").contains("NotThroughOrigin"));
    assert!(semantic("field GF(5) m=2; r2d mult (x, (y)*(2*y));").contains("NotCoprime"));
    assert!(semantic("field GF(5) m=2; r2d reciprocity {x, (y)*(2*y)};").contains("NotCoprime"));
    assert!(semantic("field GF(5) m=2; r2d mult (x, (y^2));").contains("NotSquarefree"));
    assert!(semantic("field GF(5) m=2; alg build (0, 1);").contains("ZeroParameter"));
    // the same field written with a tower is fine
    assert!(parse("field GF(4)=GF(2)[w]/(w^2+w+1) m=3;").is_ok());
}

#[test]
fn syntax_errors_carry_position_and_expectations() {
    match parse("field GF(3) m=2;\nk2 zero {t, 1-t;") {
        Err(CliError::Syntax { pos, expected, found }) => {
            assert_eq!((pos.line, pos.col), (2, 16));
            assert_eq!(expected, vec!["`}`".to_string()]);
            assert_eq!(found, "`;`");
        }
        other => panic!("{other:?}"),
    }
    match parse("field GF(3) m=2; k2 zap {t, 2};") {
        Err(CliError::Syntax { pos, expected, .. }) => {
            assert_eq!((pos.line, pos.col), (1, 21));
            assert_eq!(expected, vec!["`residues`", "`zero`", "`reciprocity`"]);
        }
        other => panic!("{other:?}"),
    }
    let out = run_session("field GF(3) m=2; k2 zero {t, 2} $", &SessionConfig::default());
    assert_eq!(out.exit_code, 2);
    assert!(out.stderr.starts_with("error: SyntaxError at 1:33"));
}

#[test]
fn exit_codes() {
    let cfg = SessionConfig::default();
    assert_eq!(run_session("field GF(3) m=2; k2 zero {t, 1-t};", &cfg).exit_code, 0);
    assert_eq!(
        run_session("field GF(3) m=2; slot verify t+1 {t, 2};", &cfg).exit_code,
        1
    );
    assert_eq!(run_session("field GF(4) m=3;", &cfg).exit_code, 2);
    let out = run_session("field GF(5) m=2; r2d mult (x, (2*x));", &cfg);
    assert_eq!(out.exit_code, 1);
    assert!(out.stderr.contains("SharedComponent"));
    let out = run_session(
        "field GF(7) m=3; alg split (3, 5);",
        &SessionConfig { budget: Some(1), ..cfg },
    );
    assert_eq!(out.exit_code, 1);
    assert!(out.stderr.contains("BudgetExhausted"));
}

#[test]
fn spec_pair_example() {
    let out = run_session("field GF(3) m=2; slot find {t,2}, {t+2,2};", &SessionConfig::default());
    assert_eq!(out.exit_code, 0);
    // t^3 - t = t^3 + 2t over F_3
    assert!(out.stdout.contains("f = 2*t+t^3"));
    assert_eq!(out.stdout.matches("status: certified").count(), 2);
}

#[test]
fn json_reports_are_versioned() {
    let cfg = SessionConfig {
        json: true,
        ..SessionConfig::default()
    };
    let out = run_session("field GF(3) m=2; k2 zero {t, 1-t};", &cfg);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["results"][0]["result"], "zero");
    assert_eq!(v["results"][0]["profile"], serde_json::json!([]));
    let out = run_session("field GF(4) m=3;", &cfg);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["error"]["name"], "SemanticError");
}

#[test]
fn flexible_input_forms() {
    let a = parse("field GF(5) m=2; k2 zero {2t^2 - 3, t^(-1)};").unwrap();
    let b = parse("field GF(5) m=2; k2 zero {2*t^2+2, 1/t};").unwrap();
    assert_eq!(a, b);
    let c = parse("field GF(5) m=2; k2 zero {t,2} + {t,3}, {t, 4};").unwrap();
    let d = parse("field GF(5) m=2; k2 zero {t,2}, {t,3}, {t, 4};").unwrap();
    assert_eq!(c, d);
    let e = parse("field GF(5) m=2; r2d reciprocity {x*y, y - x^2};").unwrap();
    let f = parse("field GF(5) m=2; r2d reciprocity {(x)*(y), (y-x^2)^1};").unwrap();
    assert_eq!(e, f);
}

const ATOMS: &[&str] = &[
    "field",
    "GF",
    "(",
    ")",
    "[",
    "]",
    "{",
    "}",
    ",",
    ";",
    "/",
    "*",
    "^",
    "+",
    "-",
    "=",
    "m",
    "k2",
    "zero",
    "residues",
    "slot",
    "find",
    "verify",
    "alg",
    "split",
    "r2d",
    "mult",
    "t",
    "x",
    "y",
    "u",
    "3",
    "0",
    "99999999999999999999",
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn malformed_input_never_panics(idx in prop::collection::vec(0..ATOMS.len(), 0..30)) {
        let text: Vec<&str> = idx.iter().map(|&i| ATOMS[i]).collect();
        let input = format!("field GF(3) m=2; {}", text.join(" "));
        let out = run_session(&input, &SessionConfig::default());
        prop_assert!([0, 1, 2].contains(&out.exit_code));
        let out = run_session(&text.join(" "), &SessionConfig::default());
        prop_assert!([0, 1, 2].contains(&out.exit_code));
    }

    #[test]
    fn arbitrary_bytes_never_panic(s in ".{0,80}") {
        let out = run_session(&s, &SessionConfig::default());
        prop_assert!([0, 2].contains(&out.exit_code));
    }

    #[test]
    fn generated_sessions_round_trip(seed in any::<u64>()) {
        let input = random_session(seed);
        let s = parse(&input).unwrap();
        let again = parse(&render_session(&s)).unwrap();
        prop_assert_eq!(&s, &again);
    }
}

// coefficients stay in 1..p, so the top term never cancels
fn random_poly(r: &mut ChaCha8Rng, p: u64, var: &str, gen: Option<&str>) -> String {
    let deg = r.gen_range(0..4u32);
    let mut terms = Vec::new();
    for i in 0..=deg {
        let c = match gen {
            Some(g) if i < deg && r.gen_bool(0.3) => format!("({}+{g})", r.gen_range(0..p)),
            _ => r.gen_range(1..p).to_string(),
        };
        terms.push(format!("{c}*{var}^{i}"));
    }
    terms.join("+")
}

fn random_session(seed: u64) -> String {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let (decl, p, gen, m) = match r.gen_range(0..3) {
        0 => ("field GF(7) m=3;", 7, None, 3),
        1 => ("field GF(9)=GF(3)[u]/(u^2+1) m=4;", 3, Some("u"), 4),
        _ => ("field GF(5) m=2;", 5, None, 2),
    };
    let ratfn = |r: &mut ChaCha8Rng| format!("({})/({})", random_poly(r, p, "t", gen), random_poly(r, p, "t", gen));
    let mut out = decl.to_string();
    for _ in 0..r.gen_range(1..4) {
        let sym = |r: &mut ChaCha8Rng| format!("{}*{{{}, {}}}", r.gen_range(0..m + 2), ratfn(r), ratfn(r));
        out.push_str(&match r.gen_range(0..5) {
            0 => format!("k2 residues {}, {};", sym(&mut r), sym(&mut r)),
            1 => format!("slot find {} + {}, {};", sym(&mut r), sym(&mut r), sym(&mut r)),
            2 => format!("slot verify {} {};", ratfn(&mut r), sym(&mut r)),
            3 => format!("alg build ({}, {});", r.gen_range(1..p), r.gen_range(1..p)),
            _ => "r2d reciprocity {x, y-x^2}, 2*{(x+y)^2*(1+y), (x)^-1};".to_string(),
        });
    }
    out
}
