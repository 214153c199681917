//! Command-line front end: parses group expressions, runs the computations
//! and verification suites of `whitehead-core`, and prints reports.

pub mod parse;
pub mod report;

use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;
use whitehead_core::abgroup::{cokernel, kernel, DEFAULT_ENUM_CAP};
use whitehead_core::functors::{
    exterior_square, gamma_isomorphism, gamma_presentation, gamma_structural, sigma_involutions,
    tensor, tor,
};
use whitehead_core::sym2homology::{coinvariants, h1, invariants, InvolutiveModule};
use whitehead_core::theorems::{
    batch_verify, corollary_suite, identity_suite, kunneth_homology, theorem_h4_suite,
    BatchOptions, H4Options, Invariants,
};
use whitehead_core::{FgAbGroup, GroupHom};

use parse::{parse_group, GroupExpression, ParseError};
use report::*;

/// Environment variable holding the default enumeration cap.
pub const MAX_ENUM_ENV: &str = "WHITEHEAD_MAX_ENUM";

#[derive(Debug, Parser)]
#[command(
    name = "whitehead",
    version,
    about = "Whitehead's quadratic functor on finitely generated abelian groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print the machine-readable report on standard output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Cross-check the structural Γ(A) against its presentation (finite A only).
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Largest group order the presentation oracle may enumerate, and largest sweep order.
    #[arg(long, global = true, env = MAX_ENUM_ENV, default_value_t = DEFAULT_ENUM_CAP)]
    pub max_enum: u64,
    /// Suppress the human-readable report; the exit status still reflects the checks.
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Γ(A) with γ, Ψ, Φ and the pairing.
    Gamma { expr: String },
    /// Tor(A, A) with the involution σ^ε.
    Tor { expr: String },
    /// The four-term exact sequence for Γ(A) and its 2-primary description.
    Verify { expr: String },
    /// Integral homology in degrees 0 to 3 via the Künneth formula.
    Homology { expr: String },
    /// Run every suite on all abelian groups up to a given order.
    Sweep {
        #[arg(long)]
        max_order: u64,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{message}; raise the cap with --max-enum or {MAX_ENUM_ENV}")]
    Cap { message: String },
    #[error("{0}")]
    Core(whitehead_core::Error),
}

impl From<whitehead_core::Error> for CliError {
    fn from(e: whitehead_core::Error) -> Self {
        match e {
            whitehead_core::Error::SizeCap { .. } => CliError::Cap {
                message: e.to_string(),
            },
            other => CliError::Core(other),
        }
    }
}

/// Result of one invocation: the text for standard output and whether all checks passed.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub passed: bool,
}

fn group_of(expr: &str) -> Result<(FgAbGroup, String), CliError> {
    let g = parse_group(expr)?.evaluate();
    let canonical = GroupExpression::canonical(&g).to_string();
    Ok((g, canonical))
}

fn finish<T: Serialize>(
    cli: &Cli,
    command: &'static str,
    input: Option<String>,
    body: T,
    passed: bool,
    start: Instant,
) -> Outcome {
    let env = Envelope {
        tool: "whitehead",
        version: env!("CARGO_PKG_VERSION"),
        schema: SCHEMA_VERSION,
        command,
        input,
        body,
        passed,
        millis: start.elapsed().as_secs_f64() * 1e3,
    };
    let stdout = if cli.json {
        let mut s = serde_json::to_string_pretty(&env).expect("reports serialize");
        s.push('\n');
        s
    } else if cli.quiet {
        String::new()
    } else {
        let v = serde_json::to_value(&env).expect("reports serialize");
        render_human(&v)
    };
    Outcome { stdout, passed }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let start = Instant::now();
    match &cli.command {
        Command::Gamma { expr } => {
            let (a, canonical) = group_of(expr)?;
            let g = gamma_structural(&a);
            let presentation = if cli.oracle {
                require_finite(&a)?;
                let p = gamma_presentation(&a, cli.max_enum)?;
                Some(PresentationCheck {
                    gamma: Invariants::of(p.group()),
                    isomorphic: gamma_isomorphism(&g, &p, cli.max_enum).is_ok(),
                })
            } else {
                None
            };
            let ids = identity_suite(&a)?;
            let identities_hold = ids.psi_after_pairing_is_norm
                && ids.pairing_after_psi_is_doubling
                && ids.phi_kills_pairing
                && ids.kernel_is_two_torsion
                && ids.gamma_is_quadratic_on_generators;
            let passed = identities_hold && presentation.as_ref().is_none_or(|p| p.isomorphic);
            let body = GammaBody {
                group: Invariants::of(&a),
                canonical,
                gamma: Invariants::of(g.group()),
                tensor_square: Invariants::of(g.tensor.group()),
                psi_kernel: Invariants::of(&kernel(&g.psi).0),
                psi_cokernel: Invariants::of(&cokernel(&g.psi).0),
                mod2: Invariants::of(&g.mod2),
                psi: g.psi.matrix().into(),
                phi: g.phi.matrix().into(),
                pairing: g.pairing.matrix().into(),
                identities_hold,
                presentation,
            };
            Ok(finish(
                cli,
                "gamma",
                Some(expr.clone()),
                body,
                passed,
                start,
            ))
        }
        Command::Tor { expr } => {
            let (a, canonical) = group_of(expr)?;
            let tr = tor(&a, &a);
            let s = sigma_involutions(&a);
            let involution = s.sigma_eps.compose(&s.sigma_eps)? == GroupHom::identity(tr.group());
            let m = InvolutiveModule::new(s.sigma_eps.clone())?;
            let body = TorBody {
                group: Invariants::of(&a),
                canonical,
                tor: Invariants::of(tr.group()),
                tensor_square: Invariants::of(tensor(&a, &a).group()),
                sigma_eps: s.sigma_eps.matrix().into(),
                tensor_swap: s.tensor_swap.matrix().into(),
                sigma_eps_invariants: Invariants::of(&invariants(&m).0),
                sigma_eps_coinvariants: Invariants::of(&coinvariants(&m).0),
                h1: Invariants::of(&h1(&m)),
                involution,
            };
            Ok(finish(
                cli,
                "tor",
                Some(expr.clone()),
                body,
                involution,
                start,
            ))
        }
        Command::Verify { expr } => {
            let (a, canonical) = group_of(expr)?;
            let oracle_cap = if cli.oracle {
                require_finite(&a)?;
                Some(cli.max_enum)
            } else {
                None
            };
            let h4 = theorem_h4_suite(&a, H4Options { oracle_cap })?;
            let cor = corollary_suite(&a)?;
            let passed = h4.passed && cor.passed;
            let exact = h4.exactness.overall;
            let body = VerifyBody {
                group: h4.group,
                canonical,
                gamma: h4.gamma,
                tensor_square: h4.tensor_square,
                h2: h4.exterior_square,
                kernel: h4.kernel,
                h1_term: h4.h1_term,
                exact,
                kernel_isomorphic: h4.kernel_matches_h1,
                kernel_in_pairing_image: h4.kernel_in_pairing_image,
                order_identity: h4.order_identity,
                presentation_agrees: h4.presentation_agrees,
                corollary: cor.into(),
                exactness: (!exact).then_some(h4.exactness),
            };
            Ok(finish(
                cli,
                "verify",
                Some(expr.clone()),
                body,
                passed,
                start,
            ))
        }
        Command::Homology { expr } => {
            let (a, canonical) = group_of(expr)?;
            let h = kunneth_homology(&a);
            let ext = exterior_square(&a).group;
            let ok = h.degree(2) == &ext;
            let body = HomologyBody {
                group: Invariants::of(&a),
                canonical,
                homology: h,
                exterior_square: Invariants::of(&ext),
                h2_matches_exterior_square: ok,
            };
            Ok(finish(cli, "homology", Some(expr.clone()), body, ok, start))
        }
        Command::Sweep { max_order } => {
            let opts = BatchOptions {
                max_enum: cli.max_enum,
                oracle_cap: cli.oracle.then_some(cli.max_enum),
            };
            let s = batch_verify(*max_order, opts)?;
            let body = SweepBody {
                max_order: s.max_order,
                classes: s.classes,
                passes: s.passed,
                groups: s.groups,
            };
            Ok(finish(cli, "sweep", None, body, s.all_passed, start))
        }
    }
}

fn require_finite(a: &FgAbGroup) -> Result<(), CliError> {
    if a.is_finite() {
        Ok(())
    } else {
        Err(CliError::Core(whitehead_core::Error::Unsupported(
            "the presentation oracle needs a finite group".into(),
        )))
    }
}

/// Exit status for a finished run: 0 when every check passed, 1 otherwise.
pub fn exit_code(outcome: &Outcome) -> i32 {
    if outcome.passed {
        0
    } else {
        1
    }
}

/// Exit status for errors (parse errors, cap violations, unsupported input).
pub const ERROR_EXIT: i32 = 2;
