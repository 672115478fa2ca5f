use crate::arrangement::{Arrangement, Multiplicity};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// The JSON input document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementSpec {
    pub dim: usize,
    pub hyperplanes: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicities: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl ArrangementSpec {
    pub fn new(arrangement: &Arrangement, m: &Multiplicity) -> Self {
        ArrangementSpec {
            dim: arrangement.dim(),
            hyperplanes: arrangement.hyperplanes().iter().map(|h| h.normal().to_vec()).collect(),
            multiplicities: Some(m.values().to_vec()),
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn arrangement(&self) -> Result<Arrangement> {
        for (i, n) in self.hyperplanes.iter().enumerate() {
            if n.len() != self.dim {
                return Err(Error::Input(format!(
                    "field `hyperplanes[{i}]`: {} coordinates, expected dim = {}",
                    n.len(),
                    self.dim
                )));
            }
        }
        Arrangement::from_normals(self.dim, &self.hyperplanes)
    }

    pub fn multiplicity(&self) -> Result<Multiplicity> {
        match &self.multiplicities {
            None => Ok(Multiplicity::ones(self.hyperplanes.len())),
            Some(v) if v.len() != self.hyperplanes.len() => Err(Error::Input(format!(
                "field `multiplicities`: {} values for {} hyperplanes",
                v.len(),
                self.hyperplanes.len()
            ))),
            Some(v) => Multiplicity::new(v.clone())
                .map_err(|e| Error::Input(format!("field `multiplicities`: {}", strip(e)))),
        }
    }

    pub fn parsed(&self) -> Result<(Arrangement, Multiplicity)> {
        if let Some(l) = &self.labels {
            if l.len() != self.hyperplanes.len() {
                return Err(Error::Input(format!(
                    "field `labels`: {} labels for {} hyperplanes",
                    l.len(),
                    self.hyperplanes.len()
                )));
            }
        }
        Ok((self.arrangement()?, self.multiplicity()?))
    }

    /// Canonical normals, with the multiplicity written out.
    pub fn canonical(&self) -> Result<ArrangementSpec> {
        let (a, m) = self.parsed()?;
        let mut out = ArrangementSpec::new(&a, &m);
        out.labels = self.labels.clone();
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }
}

fn strip(e: Error) -> String {
    match e {
        Error::Input(s) | Error::TheoremViolation(s) | Error::Internal(s) => s,
    }
}

/// Parse and validate an input document.
pub fn parse(text: &str) -> Result<ArrangementSpec> {
    let spec: ArrangementSpec = serde_json::from_str(text).map_err(|e| {
        Error::Input(format!("malformed input at line {}, column {}: {e}", e.line(), e.column()))
    })?;
    if spec.dim == 0 {
        return Err(Error::Input("field `dim`: must be positive".into()));
    }
    spec.parsed()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagnostics() {
        let e = parse(r#"{"dim": 2, "hyperplanes": [[1,0],[0,1],[2,0]]}"#).unwrap_err();
        assert!(e.to_string().contains("hyperplanes 1 and 3"), "{e}");
        let e = parse(r#"{"dim": 2, "hyperplanes": [[1,0],[0,1]], "multiplicities": [1,-1]}"#).unwrap_err();
        assert!(e.to_string().contains("mix signs"), "{e}");
        let e = parse(r#"{"dim": 2, "hyperplanes": [[1,0],[0,1,1]]}"#).unwrap_err();
        assert!(e.to_string().contains("hyperplanes[1]"), "{e}");
        let e = parse("{\"dim\": 2,\n \"hyperplanes\": [[1,0]").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
    }

    #[test]
    fn canonical_round_trip() {
        let s = parse(r#"{"dim": 3, "hyperplanes": [[0,-2,0],[2,2,2],[1,0,0]]}"#).unwrap();
        let c = s.canonical().unwrap();
        assert_eq!(c.hyperplanes, vec![vec![0, 1, 0], vec![1, 1, 1], vec![1, 0, 0]]);
        assert_eq!(parse(&c.to_json()).unwrap().canonical().unwrap(), c);
    }
}
