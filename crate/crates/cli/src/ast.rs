//! Parsed sessions.

use k2slot_core::funcfield::RationalFunction;
use k2slot_core::gf::{FieldSpec, Fq};
use k2slot_core::k2::K2Element;
use k2slot_core::local2d::{BivariatePoly, FactoredBivariate, LocalSymbol};

use crate::error::Pos;

/// `GF(q)` or `GF(q)=GF(p)[gen]/(modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldDecl {
    pub q: u64,
    pub tower: Option<Tower>,
    pub m: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tower {
    pub p: u64,
    pub gen: String,
    /// Coefficients in `F_p`, least degree first; monic.
    pub modulus: Vec<i64>,
}

impl FieldDecl {
    /// Name of the extension generator, `u` when none is declared.
    pub fn gen(&self) -> &str {
        self.tower.as_ref().map_or("u", |t| t.gen.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Residues(K2Element),
    Zero(K2Element),
    Reciprocity(K2Element),
    SlotFind(Vec<K2Element>),
    SlotVerify(RationalFunction, Vec<K2Element>),
    AlgBuild(Fq, Fq),
    AlgSplit(Fq, Fq),
    R2dMult(BivariatePoly, FactoredBivariate),
    R2dReciprocity(Vec<LocalSymbol>),
}

impl Command {
    pub fn kind(&self) -> &'static str {
        match self {
            Command::Residues(_) => "residues",
            Command::Zero(_) => "zero",
            Command::Reciprocity(_) => "reciprocity",
            Command::SlotFind(_) => "slot-find",
            Command::SlotVerify(..) => "slot-verify",
            Command::AlgBuild(..) => "alg-build",
            Command::AlgSplit(..) => "alg-split",
            Command::R2dMult(..) => "r2d-mult",
            Command::R2dReciprocity(_) => "r2d-reciprocity",
        }
    }
}

/// A field declaration followed by commands over that field.
#[derive(Clone, Debug)]
pub struct Session {
    pub decl: FieldDecl,
    pub spec: FieldSpec,
    pub commands: Vec<Command>,
    /// Source position of each command.
    pub positions: Vec<Pos>,
}

impl PartialEq for Session {
    fn eq(&self, other: &Self) -> bool {
        self.decl == other.decl && self.spec == other.spec && self.commands == other.commands
    }
}
