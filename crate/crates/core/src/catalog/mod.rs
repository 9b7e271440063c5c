//! The identity registries: coefficientwise GF identities (G01–G14),
//! infinite series (S01–S41) and finite binomial sums (B01–B30).

pub mod binom;
pub mod gf_ids;
pub mod series;
pub(crate) mod util;

use crate::error::{Error, Result};
use crate::registry::{Params, Policy, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Numeric,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Numeric => "numeric",
        }
    }
}

/// Registry metadata for one identity.
#[derive(Debug, Clone)]
pub struct EntryMeta {
    pub id: &'static str,
    /// What the identity says, in words; shown by `list` and used for filters.
    pub statement: &'static str,
    /// Parameter names with their constraints, e.g. "k>=1, m int".
    pub param_schema: &'static str,
    pub mode: Mode,
}

/// Complete index over all three registries, ordered B, G, S by id.
pub fn all_meta() -> Vec<EntryMeta> {
    let mut v = Vec::new();
    v.extend(binom::meta());
    v.extend(gf_ids::meta());
    v.extend(series::meta());
    v.sort_by(|a, b| a.id.cmp(b.id));
    v
}

pub fn meta(id: &str) -> Result<EntryMeta> {
    all_meta()
        .into_iter()
        .find(|m| m.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// Default parameter grid for an entry (already schema-filtered).
pub fn default_grid(id: &str) -> Result<Vec<Params>> {
    match id.as_bytes().first() {
        Some(b'S') => series::default_grid(id),
        Some(b'B') => binom::default_grid(id),
        Some(b'G') => gf_ids::default_grid(id),
        _ => Err(Error::UnknownId(id.to_string())),
    }
}

/// Validate one parameter cell against the entry schema.
pub fn validate(id: &str, params: &Params) -> Result<()> {
    match id.as_bytes().first() {
        Some(b'S') => series::validate(id, params),
        Some(b'B') => binom::validate(id, params),
        Some(b'G') => gf_ids::validate(id, params),
        _ => Err(Error::UnknownId(id.to_string())),
    }
}

/// Verify one (id, params) cell under the policy.
pub fn verify_cell(id: &str, params: &Params, policy: &Policy) -> Result<Verdict> {
    match id.as_bytes().first() {
        Some(b'S') => series::verify(id, params, policy),
        Some(b'B') => binom::verify(id, params, policy),
        Some(b'G') => gf_ids::verify(id, params, policy),
        _ => Err(Error::UnknownId(id.to_string())),
    }
}
