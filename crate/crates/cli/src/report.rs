//! Report data model shared by the JSON and the human-readable output.

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;
use whitehead_core::theorems::{
    serialize_int_rows, CorollaryReport, ExactnessReport, GradedHomology, GroupVerdict, Invariants,
    StabilizationLevel,
};
use whitehead_core::IntMatrix;

/// Version of the machine-readable format; bumped on incompatible changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct Envelope<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub schema: u32,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(flatten)]
    pub body: T,
    pub passed: bool,
    pub millis: f64,
}

#[derive(Serialize)]
pub struct Matrix(#[serde(serialize_with = "serialize_int_rows")] pub Vec<Vec<BigInt>>);

impl From<&IntMatrix> for Matrix {
    fn from(m: &IntMatrix) -> Self {
        Self((0..m.rows()).map(|i| m.row(i).to_vec()).collect())
    }
}

#[derive(Serialize)]
pub struct PresentationCheck {
    pub gamma: Invariants,
    pub isomorphic: bool,
}

#[derive(Serialize)]
pub struct GammaBody {
    pub group: Invariants,
    pub canonical: String,
    pub gamma: Invariants,
    pub tensor_square: Invariants,
    pub psi_kernel: Invariants,
    pub psi_cokernel: Invariants,
    pub mod2: Invariants,
    pub psi: Matrix,
    pub phi: Matrix,
    pub pairing: Matrix,
    pub identities_hold: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationCheck>,
}

#[derive(Serialize)]
pub struct TorBody {
    pub group: Invariants,
    pub canonical: String,
    pub tor: Invariants,
    pub tensor_square: Invariants,
    pub sigma_eps: Matrix,
    pub tensor_swap: Matrix,
    pub sigma_eps_invariants: Invariants,
    pub sigma_eps_coinvariants: Invariants,
    pub h1: Invariants,
    pub involution: bool,
}

#[derive(Serialize)]
pub struct CorollarySummary {
    pub tensor_term: Invariants,
    pub stabilization_level: u32,
    pub levels: Vec<StabilizationLevel>,
    pub stable: bool,
    pub kernel_matches: bool,
}

impl From<CorollaryReport> for CorollarySummary {
    fn from(r: CorollaryReport) -> Self {
        Self {
            tensor_term: r.tensor_term,
            stabilization_level: r.stabilization_level,
            levels: r.levels,
            stable: r.stable,
            kernel_matches: r.kernel_matches,
        }
    }
}

#[derive(Serialize)]
pub struct VerifyBody {
    pub group: Invariants,
    pub canonical: String,
    pub gamma: Invariants,
    pub tensor_square: Invariants,
    pub h2: Invariants,
    pub kernel: Invariants,
    pub h1_term: Invariants,
    pub exact: bool,
    pub kernel_isomorphic: bool,
    pub kernel_in_pairing_image: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order_identity: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation_agrees: Option<bool>,
    pub corollary: CorollarySummary,
    /// Per-node detail, present only when exactness fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exactness: Option<ExactnessReport>,
}

#[derive(Serialize)]
pub struct HomologyBody {
    pub group: Invariants,
    pub canonical: String,
    pub homology: GradedHomology,
    pub exterior_square: Invariants,
    pub h2_matches_exterior_square: bool,
}

#[derive(Serialize)]
pub struct SweepBody {
    pub max_order: u64,
    pub classes: usize,
    pub passes: usize,
    pub groups: Vec<GroupVerdict>,
}

/// Human-readable rendering of a serialized report.
pub fn render_human(v: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = v {
        for (k, x) in map {
            if matches!(k.as_str(), "tool" | "version" | "schema") {
                continue;
            }
            render_entry(&mut out, 0, k, x);
        }
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(if *b { "yes".into() } else { "no".into() }),
        Value::Number(n) => Some(match n.as_f64() {
            Some(f) if n.is_f64() => format!("{f:.1}"),
            _ => n.to_string(),
        }),
        Value::String(s) => Some(s.clone()),
        Value::Array(items)
            if items
                .iter()
                .all(|x| matches!(x, Value::Number(_) | Value::String(_))) =>
        {
            let parts: Vec<String> = items
                .iter()
                .map(|x| scalar(x).unwrap_or_default())
                .collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn render_entry(out: &mut String, depth: usize, key: &str, v: &Value) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    match v {
        Value::Array(items) if items.iter().all(|x| scalar(x).is_some()) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for x in items {
                out.push_str(&format!("{pad}  {}\n", scalar(x).unwrap_or_default()));
            }
        }
        Value::Array(items) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (i, x) in items.iter().enumerate() {
                render_entry(out, depth + 1, &format!("[{i}]"), x);
            }
        }
        Value::Object(map) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, x) in map {
                render_entry(out, depth + 1, k, x);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}
