//! JSON model documents and built-in model lookup.

use std::path::Path;

use curvelattice_core::k3::{Builtin, K3Model};
use curvelattice_core::{DivClass2, Gram2};
use serde::{Deserialize, Serialize};

use crate::report::Num;
use crate::CliError;

/// `{"name", "gram", "hyperplane", "minus_two_curves", "elliptic_pencils"}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub name: String,
    pub gram: [[Num; 2]; 2],
    pub hyperplane: [Num; 2],
    pub minus_two_curves: Vec<[Num; 2]>,
    #[serde(default)]
    pub elliptic_pencils: Vec<[Num; 2]>,
}

fn class(p: &[Num; 2]) -> DivClass2 {
    DivClass2::new(p[0].0.clone(), p[1].0.clone())
}

impl ModelFile {
    pub fn into_model(self) -> Result<K3Model, CliError> {
        let [[a, b], [c, d]] = self.gram;
        let gram = Gram2::from_rows([[a.0, b.0], [c.0, d.0]]).map_err(CliError::domain)?;
        K3Model::new(
            self.name,
            gram,
            class(&self.hyperplane),
            self.minus_two_curves.iter().map(class).collect(),
            self.elliptic_pencils.iter().map(class).collect(),
        )
        .map_err(CliError::domain)
    }

    pub fn from_model(m: &K3Model) -> Self {
        let pair = |c: &DivClass2| [Num::from(&c.a), Num::from(&c.b)];
        let rows = m.gram().rows();
        let [[a, b], [c, d]] = rows;
        ModelFile {
            name: m.name().to_string(),
            gram: [[Num(a), Num(b)], [Num(c), Num(d)]],
            hyperplane: pair(m.hyperplane()),
            minus_two_curves: m.minus_two_curves().iter().map(pair).collect(),
            elliptic_pencils: m.elliptic_pencils().iter().map(pair).collect(),
        }
    }
}

/// `q1`, `q2`, or a path to a model document.
pub fn load_model(spec: &str) -> Result<K3Model, CliError> {
    if let Some(b) = Builtin::from_name(spec) {
        return Ok(b.model());
    }
    let path = Path::new(spec);
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::domain(format!("cannot read model file {}: {e}", path.display())))?;
    let doc: ModelFile = serde_json::from_str(&text)
        .map_err(|e| CliError::domain(format!("malformed model file {}: {e}", path.display())))?;
    doc.into_model()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_round_trip_through_documents() {
        for b in [Builtin::Q1, Builtin::Q2] {
            let m = b.model();
            let doc = ModelFile::from_model(&m);
            let text = serde_json::to_string(&doc).unwrap();
            let back: ModelFile = serde_json::from_str(&text).unwrap();
            assert_eq!(back.into_model().unwrap(), m);
        }
    }

    #[test]
    fn invalid_documents_name_the_invariant() {
        let text =
            r#"{"name":"x","gram":[[-2,3],[3,0]],"hyperplane":[1,0],"minus_two_curves":[[1,0]]}"#;
        let doc: ModelFile = serde_json::from_str(text).unwrap();
        let err = doc.into_model().unwrap_err();
        assert_eq!(err.code, 2);
        assert!(
            err.message.contains("hyperplane^2 must equal 4"),
            "{}",
            err.message
        );

        let text = r#"{"name":"x","gram":[[-2,3],[4,0]],"hyperplane":[1,1],"minus_two_curves":[]}"#;
        let doc: ModelFile = serde_json::from_str(text).unwrap();
        assert!(doc.into_model().unwrap_err().message.contains("symmetric"));
    }
}
