//! Golden transcripts for the sessions in `sessions/`.
//!
//! Set `K2SLOT_BLESS=1` to rewrite the expected files.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use k2slot_cli::{parse, render_session, run_session, SessionConfig};

const SEED: u64 = 7;

fn sessions() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("sessions");
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "k2"))
        .collect();
    files.sort();
    files
}

fn config(json: bool) -> SessionConfig {
    SessionConfig {
        seed: SEED,
        json,
        ..SessionConfig::default()
    }
}

fn status(exit_code: i32, stderr: &str) -> String {
    format!("exit {exit_code}\n{stderr}")
}

fn check(path: &Path, actual: &str) {
    if std::env::var_os("K2SLOT_BLESS").is_some() {
        fs::write(path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "transcript differs from {}", path.display());
}

#[test]
fn corpus_has_twelve_sessions() {
    assert_eq!(sessions().len(), 12);
}

#[test]
fn transcripts_match() {
    for path in sessions() {
        let input = fs::read_to_string(&path).unwrap();
        let text = run_session(&input, &config(false));
        let json = run_session(&input, &config(true));
        assert_eq!(text.exit_code, json.exit_code);
        check(&path.with_extension("txt"), &text.stdout);
        check(&path.with_extension("json"), &json.stdout);
        check(&path.with_extension("status"), &status(text.exit_code, &text.stderr));
    }
}

#[test]
fn binary_is_deterministic() {
    if std::env::var_os("K2SLOT_BLESS").is_some() {
        return;
    }
    let bin = env!("CARGO_BIN_EXE_k2slot");
    for path in sessions() {
        let expected = fs::read_to_string(path.with_extension("txt")).unwrap();
        let expected_status = fs::read_to_string(path.with_extension("status")).unwrap();
        let runs: Vec<_> = (0..2)
            .map(|_| {
                Command::new(bin)
                    .args(["--seed", &SEED.to_string(), "run"])
                    .arg(&path)
                    .output()
                    .unwrap()
            })
            .collect();
        assert_eq!(runs[0].stdout, runs[1].stdout);
        assert_eq!(String::from_utf8_lossy(&runs[0].stdout), expected);
        let code = runs[0].status.code().unwrap();
        assert_eq!(status(code, &String::from_utf8_lossy(&runs[0].stderr)), expected_status);
        let json = Command::new(bin)
            .args(["--json", "run"])
            .arg(&path)
            .args(["--seed", &SEED.to_string()])
            .output()
            .unwrap();
        let expected_json = fs::read_to_string(path.with_extension("json")).unwrap();
        assert_eq!(String::from_utf8_lossy(&json.stdout), expected_json);
    }
}

#[test]
fn corpus_round_trips() {
    for path in sessions() {
        let input = fs::read_to_string(&path).unwrap();
        let session = parse(&input).unwrap();
        let rendered = render_session(&session);
        let again = parse(&rendered).unwrap_or_else(|e| panic!("{}: {e}\n{rendered}", path.display()));
        assert_eq!(session, again, "{}", path.display());
        assert_eq!(rendered, render_session(&again));
    }
}
