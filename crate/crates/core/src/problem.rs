//! Problem files: a Riordan spec or a Cauchy problem, told apart by `"kind"`.

use serde::{Deserialize, Serialize};

use crate::algebra::Polynomial;
use crate::cauchy::{DifferenceEquation, InitialData};
use crate::riordan::RiordanSpec;
use crate::Error;

/// Difference equation plus tabulated initial data. `d_num`/`d_den`
/// optionally claim the data comes from a Riordan array with that `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CauchyProblem {
    #[serde(flatten)]
    pub eq: DifferenceEquation,
    #[serde(flatten)]
    pub init: InitialData,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_num: Option<Polynomial>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_den: Option<Polynomial>,
}

impl CauchyProblem {
    /// The Riordan spec claimed by the file, if it names `d`.
    pub fn claimed_spec(&self) -> Option<RiordanSpec> {
        match (&self.d_num, &self.d_den) {
            (Some(n), Some(d)) => Some(RiordanSpec::new(
                self.eq.p.clone(),
                self.eq.q.clone(),
                n.clone(),
                d.clone(),
            )),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ProblemFile {
    Riordan(RiordanSpec),
    Cauchy(CauchyProblem),
}

impl ProblemFile {
    /// Parses a problem; a missing `"kind"` means a Riordan spec.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let mut value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if let Some(obj) = value.as_object_mut() {
            obj.entry("kind").or_insert_with(|| "riordan".into());
        }
        serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem files always serialize")
    }

    pub fn equation(&self) -> DifferenceEquation {
        match self {
            ProblemFile::Riordan(spec) => DifferenceEquation::from_spec(spec),
            ProblemFile::Cauchy(cp) => cp.eq.clone(),
        }
    }
}
