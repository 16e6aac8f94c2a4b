//! Outcome of checking one identity at one parameter point.

use std::fmt;

use crate::arith::{Poly, RatFunc};
use crate::Scalar;

/// Which reading of a formula a check evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VariantTag {
    AsPrinted,
    Corrected,
}

impl VariantTag {
    pub fn as_str(self) -> &'static str {
        match self {
            VariantTag::AsPrinted => "as-printed",
            VariantTag::Corrected => "corrected",
        }
    }
}

impl fmt::Display for VariantTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    /// Both sides evaluated and differ; canonical strings of each side.
    Counterexample { lhs: String, rhs: String },
    /// One side is not defined at this parameter point.
    Undefined { reason: String },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityResult {
    pub id: String,
    pub variant: VariantTag,
    pub params: Vec<(String, i64)>,
    pub verdict: Verdict,
    /// Canonical string of `lhs - rhs` when it is meaningful.
    pub difference: Option<String>,
}

impl IdentityResult {
    pub fn new(id: &str, variant: VariantTag, params: &[(&str, i64)], verdict: Verdict) -> Self {
        IdentityResult {
            id: id.to_string(),
            variant,
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            verdict,
            difference: None,
        }
    }

    /// Compare two rational functions by canonical form.
    pub fn compare<C: Scalar>(
        id: &str,
        variant: VariantTag,
        params: &[(&str, i64)],
        lhs: &RatFunc<C>,
        rhs: &RatFunc<C>,
    ) -> Self {
        let diff = lhs - rhs;
        let verdict = if diff.is_zero() {
            Verdict::Equal
        } else {
            Verdict::Counterexample {
                lhs: lhs.to_canonical_string(),
                rhs: rhs.to_canonical_string(),
            }
        };
        let mut r = Self::new(id, variant, params, verdict);
        r.difference = Some(diff.to_canonical_string());
        r
    }

    pub fn compare_poly<C: Scalar>(
        id: &str,
        variant: VariantTag,
        params: &[(&str, i64)],
        lhs: &Poly<C>,
        rhs: &Poly<C>,
    ) -> Self {
        Self::compare(
            id,
            variant,
            params,
            &RatFunc::from_poly(lhs.clone()),
            &RatFunc::from_poly(rhs.clone()),
        )
    }

    pub fn undefined(id: &str, variant: VariantTag, params: &[(&str, i64)], reason: impl Into<String>) -> Self {
        Self::new(id, variant, params, Verdict::Undefined { reason: reason.into() })
    }

    pub fn holds(&self) -> bool {
        self.verdict.is_equal()
    }

    pub fn param(&self, name: &str) -> Option<i64> {
        self.params.iter().find(|(k, _)| k == name).map(|(_, v)| *v)
    }
}

impl fmt::Display for IdentityResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{} [{}] ({}): ", self.id, self.variant, params.join(", "))?;
        match &self.verdict {
            Verdict::Equal => f.write_str("equal"),
            Verdict::Counterexample { lhs, rhs } => write!(f, "counterexample lhs={lhs} rhs={rhs}"),
            Verdict::Undefined { reason } => write!(f, "undefined ({reason})"),
        }
    }
}
