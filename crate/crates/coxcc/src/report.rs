//! Machine-readable report types. Every report serializes to JSON and
//! parses back to an equal value.

use coxcc_core::cartan::MatrixType;
use coxcc_core::decision::{CCVerdict, Witness};
use coxcc_core::tol;
use serde::{Deserialize, Serialize};

/// The tolerance set in effect; attached to every run report so printed
/// numerics carry their comparison context.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub entry: f64,
    pub relation: f64,
    pub strict: f64,
    pub zero_type: f64,
    pub membership: f64,
}

impl Tolerances {
    pub fn current(strict: f64) -> Self {
        Tolerances {
            entry: tol::ENTRY,
            relation: tol::RELATION,
            strict,
            zero_type: tol::ZERO_TYPE,
            membership: tol::MEMBERSHIP,
        }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances::current(tol::STRICT)
    }
}

/// Envelope for every CLI invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<String>,
    pub outputs: serde_json::Value,
    pub version: String,
    pub tolerances: Tolerances,
    pub wall_ms: f64,
}

impl RunReport {
    pub fn new(command: &str, inputs: Vec<String>, outputs: serde_json::Value, strict: f64) -> Self {
        RunReport {
            command: command.to_string(),
            inputs,
            outputs,
            version: env!("CARGO_PKG_VERSION").to_string(),
            tolerances: Tolerances::current(strict),
            wall_ms: 0.0,
        }
    }
}

/// Witness serialization; generator indices are 1-based (`s1, s2, …`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessJson {
    InfinitePairProduct { pair: [usize; 2], product: f64, boundary: bool },
    AtildeCycle { subset: Vec<usize>, cycle_product: f64, boundary: bool },
    ZeroTypeSubset { subset: Vec<usize>, lowest_eigenvalue: f64 },
    ConditionIc { s1: Vec<usize>, s2: Vec<usize> },
    ConditionAtilde { subset: Vec<usize> },
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|&i| i + 1).collect()
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        match w {
            Witness::InfinitePairProduct { i, j, product, boundary } => {
                WitnessJson::InfinitePairProduct {
                    pair: [i + 1, j + 1],
                    product: *product,
                    boundary: *boundary,
                }
            }
            Witness::AtildeCycle { subset, cycle_product, boundary } => {
                WitnessJson::AtildeCycle {
                    subset: one_based(subset),
                    cycle_product: *cycle_product,
                    boundary: *boundary,
                }
            }
            Witness::ZeroTypeSubset { subset, lowest_eigenvalue } => {
                WitnessJson::ZeroTypeSubset {
                    subset: one_based(subset),
                    lowest_eigenvalue: *lowest_eigenvalue,
                }
            }
            Witness::ConditionIC { s1, s2 } => {
                WitnessJson::ConditionIc { s1: one_based(s1), s2: one_based(s2) }
            }
            Witness::ConditionAtilde { subset } => {
                WitnessJson::ConditionAtilde { subset: one_based(subset) }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RoutesJson {
    pub zt: bool,
    pub zd: bool,
    pub agree: bool,
    pub tolerance_fault: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AffineJson {
    pub unipotent_free: bool,
    pub matrix_type: String,
    pub is_atilde: bool,
    pub det: f64,
}

/// The verdict in its wire format.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub exists: bool,
    pub ncc: bool,
    pub cc: bool,
    pub scc: bool,
    pub anosov: bool,
    pub witnesses: Vec<WitnessJson>,
    pub routes: RoutesJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub affine: Option<AffineJson>,
}

fn type_name(t: MatrixType) -> String {
    match t {
        MatrixType::Positive => "positive",
        MatrixType::Zero => "zero",
        MatrixType::Negative => "negative",
    }
    .to_string()
}

impl From<&CCVerdict> for VerdictJson {
    fn from(v: &CCVerdict) -> Self {
        VerdictJson {
            exists: v.exists_cc_rep,
            ncc: v.ncc,
            cc: v.cc,
            scc: v.scc,
            anosov: v.anosov,
            witnesses: v.witnesses.iter().map(WitnessJson::from).collect(),
            routes: RoutesJson {
                zt: v.routes.zt,
                zd: v.routes.zd,
                agree: v.routes.agree,
                tolerance_fault: v.routes.tolerance_fault,
            },
            affine: v.affine_case.as_ref().map(|a| AffineJson {
                unipotent_free: a.unipotent_free,
                matrix_type: type_name(a.matrix_type),
                is_atilde: a.is_atilde,
                det: a.det,
            }),
        }
    }
}

/// Classification output for one diagram.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifyJson {
    pub n: usize,
    pub irreducible: bool,
    pub components: Vec<ComponentJson>,
    pub word_hyperbolic: bool,
    pub condition_ic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ic_witness: Option<(Vec<usize>, Vec<usize>)>,
    pub condition_atilde: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub atilde_witness: Option<Vec<usize>>,
    /// Group-level existence of a convex cocompact reflection
    /// representation; absent for reducible or finite groups.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exists_cc_rep: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub peripheral_subgroups: Option<Vec<PeripheralJson>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub vertices: Vec<usize>,
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PeripheralJson {
    pub u: Vec<usize>,
    pub u_perp: Vec<usize>,
}
