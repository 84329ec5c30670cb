//! Numerical tolerances used across the crate.
//!
//! Every comparison against an exact identity goes through one of these
//! constants so the thresholds can be audited in one place. Scale-aware
//! checks multiply by `max(1, scale)` where `scale` is the relevant
//! matrix norm.

/// Entry-level identities: Cartan products, recovery `alpha_i(v_j) = A[i][j]`,
/// determinant identities, zigzag entries.
pub const ENTRY: f64 = 1e-9;

/// Group-relation residual `‖(ρ(s_i)ρ(s_j))^m − Id‖_∞`. Looser than [`ENTRY`]
/// because rounding grows with the power `m`.
pub const RELATION: f64 = 1e-6;

/// Strict-inequality margin for the convex cocompactness decision:
/// a product in `[4 − STRICT, 4 + STRICT]` or a cycle product in
/// `[1 − STRICT, 1 + STRICT]` is a boundary case and decides "not CC".
pub const STRICT: f64 = 1e-7;

/// Zero-type classification: `|λ_min| ≤ ZERO_TYPE · max(1, ‖A‖_∞)` is zero type.
pub const ZERO_TYPE: f64 = 1e-8;

/// Rank decisions: pivots below `RANK · max_abs_entry` count as zero.
pub const RANK: f64 = 1e-9;

/// Cone membership slack: `t_j ≥ −MEMBERSHIP` for the closed dual cone,
/// `α_i(x) ≤ MEMBERSHIP` for the fundamental cone.
pub const MEMBERSHIP: f64 = 1e-9;

/// Power-iteration residual target for the Perron–Frobenius eigenpair.
pub const PF_RESIDUAL: f64 = 1e-12;

/// Orbit deduplication: relative distance between max-abs-normalized
/// matrices below this marks the same group element.
pub const ORBIT_DEDUP: f64 = 1e-6;
