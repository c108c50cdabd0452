//! Three-valued decisions for properties quantified over a whole algebra.

use serde::Serialize;

use crate::field::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Certified,
    Refuted,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    /// Every element of a finite search space was checked.
    Exhaustive,
    /// A relevant quadratic form is definite over the reals.
    DefiniteQuadraticForm,
    /// Implied by a structural fact (nilpotency, rank = dim, centroid is a field, ...).
    Structural,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Element { x: Vec<Scalar> },
    Pair { x: Vec<Scalar>, y: Vec<Scalar> },
    Subspace { basis: Vec<Vec<Scalar>> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub points_checked: u64,
    pub random_trials: u64,
    pub search_height: Option<u32>,
    pub seed: Option<u64>,
    pub note: Option<String>,
}

impl Evidence {
    pub fn note(text: impl Into<String>) -> Evidence {
        Evidence { note: Some(text.into()), ..Evidence::default() }
    }
}

/// `Refuted` always carries a witness; callers recheck it before building one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub certificate: Option<CertificateKind>,
    pub witness: Option<Witness>,
    pub evidence: Evidence,
}

impl Verdict {
    pub fn certified(kind: CertificateKind, evidence: Evidence) -> Verdict {
        Verdict { status: Status::Certified, certificate: Some(kind), witness: None, evidence }
    }

    pub fn refuted(witness: Witness, evidence: Evidence) -> Verdict {
        Verdict { status: Status::Refuted, certificate: None, witness: Some(witness), evidence }
    }

    pub fn inconclusive(evidence: Evidence) -> Verdict {
        Verdict { status: Status::Inconclusive, certificate: None, witness: None, evidence }
    }

    pub fn is_certified(&self) -> bool {
        self.status == Status::Certified
    }

    pub fn is_refuted(&self) -> bool {
        self.status == Status::Refuted
    }

    pub fn witness_element(&self) -> Option<&[Scalar]> {
        match &self.witness {
            Some(Witness::Element { x }) => Some(x),
            _ => None,
        }
    }

    pub fn witness_subspace(&self) -> Option<&[Vec<Scalar>]> {
        match &self.witness {
            Some(Witness::Subspace { basis }) => Some(basis),
            _ => None,
        }
    }
}
