use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::rep::Summand;
use crate::error::{Error, Result};

/// Scalar domain and parameter, e.g. `{"domain":"Fp","p":2,"value":1}`.
///
/// `domain` is one of `Q`, `Fp`, `Qt` (the function field `Q(t)`) or `Fpt`
/// (`F_p(t)`). `value` is the parameter `q`: an integer, a fraction string
/// like `"1/2"`, or `"t"` for the generic parameter. It defaults to `t` over
/// function fields and to `1` otherwise.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalarSpec {
    pub domain: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
}

impl ScalarSpec {
    pub fn new(domain: &str, p: Option<u64>, value: &str) -> Self {
        ScalarSpec {
            domain: domain.to_string(),
            p,
            value: Some(Value::String(value.to_string())),
        }
    }

    /// The parameter as text.
    pub fn value_text(&self) -> String {
        match &self.value {
            None if self.domain.ends_with('t') => "t".to_string(),
            None => "1".to_string(),
            Some(Value::String(s)) => s.clone(),
            Some(v) => v.to_string(),
        }
    }
}

/// A Young-sum module specification as read from JSON files.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub n: usize,
    pub q: ScalarSpec,
    pub summands: Vec<Summand>,
}

impl ModuleSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: ModuleSpec =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.summands.is_empty() {
            return Err(Error::Parse("module specification has no summands".into()));
        }
        for s in &self.summands {
            if s.partition.degree() != self.n {
                return Err(Error::InvalidPartition(format!(
                    "{} is not a partition of {}",
                    s.partition, self.n
                )));
            }
        }
        Ok(())
    }

    pub fn describe(&self) -> String {
        self.summands
            .iter()
            .map(|s| {
                let base = if s.signed {
                    format!("M_s{}", s.partition)
                } else {
                    format!("M{}", s.partition)
                };
                if s.mult > 1 {
                    format!("{base}^{}", s.mult)
                } else {
                    base
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Parses a summand list such as `M(3,1)+M(4)`, `(2,1)^2 + (3)` or
/// `Ms(2,1)`. A leading `s` (or `M_s`, `Ms`) marks a signed summand and `^k`
/// a multiplicity.
pub fn parse_summands(text: &str) -> Result<Vec<Summand>> {
    let bad = || Error::Parse(format!("cannot read summand list {text:?}"));
    let mut out = Vec::new();
    for term in text.split('+') {
        let mut t = term.trim();
        t = t.strip_prefix('M').unwrap_or(t);
        let signed = t.starts_with('s') || t.starts_with("_s");
        t = t.trim_start_matches('_').trim_start_matches('s');
        let (body, mult) = match t.split_once('^') {
            Some((b, k)) => (b, k.trim().parse::<usize>().map_err(|_| bad())?),
            None => (t, 1),
        };
        if body.trim().is_empty() {
            return Err(bad());
        }
        let partition = body.parse()?;
        out.push(Summand {
            partition,
            mult,
            signed,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_form() {
        let text = r#"{"n":4, "q":{"domain":"Fp","p":2,"value":1}, "summands":[{"partition":[2,2],"mult":1,"signed":false}]}"#;
        let spec = ModuleSpec::from_json(text).unwrap();
        assert_eq!(spec.n, 4);
        assert_eq!(spec.q.p, Some(2));
        assert_eq!(spec.q.value_text(), "1");
        assert_eq!(spec.describe(), "M(2,2)");
    }

    #[test]
    fn summand_lists() {
        let s = parse_summands("M(3,1) + M(4)").unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s[1].partition.parts(), &[4]);
        let s = parse_summands("(2,1)^2+Ms(3)").unwrap();
        assert_eq!((s[0].mult, s[0].signed, s[1].signed), (2, false, true));
        assert!(parse_summands("M(3,1)+").is_err());
        assert!(parse_summands("M(2,x)").is_err());
    }

    #[test]
    fn rejects_wrong_degree() {
        let text = r#"{"n":3, "q":{"domain":"Q"}, "summands":[{"partition":[2,2]}]}"#;
        assert!(matches!(
            ModuleSpec::from_json(text),
            Err(Error::InvalidPartition(_))
        ));
    }
}
