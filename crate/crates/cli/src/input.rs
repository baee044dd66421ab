//! The TOML input document.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use scrollext::complex::{validate_complex, SimplicialComplex};
use scrollext::extension::{EdgeSpec, ExtensionComplex, ExtensionSpec};
use scrollext::poly::{OrderKind, PrimeField};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    pub facets: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub options: Option<Options>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extensions: Vec<ExtensionEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionEntry {
    pub facet: usize,
    pub origin: String,
    pub edges: Vec<EdgeEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeEntry {
    pub target: String,
    #[serde(default)]
    pub points: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho_max: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Explicit color classes for `reduce`, bypassing the coloration search.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<Vec<String>>>,
}

/// A prime characteristic or the string `"rational"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Prime(u32),
    Named(FieldName),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldName {
    Rational,
}

impl FieldSpec {
    pub fn parse(s: &str) -> Result<Self, SchemaError> {
        match s {
            "rational" | "QQ" | "Q" => Ok(FieldSpec::Named(FieldName::Rational)),
            _ => s
                .parse()
                .map(FieldSpec::Prime)
                .map_err(|_| SchemaError::new("field", format!("expected a prime or \"rational\", got {s:?}"))),
        }
    }

    pub fn name(&self) -> String {
        match self {
            FieldSpec::Prime(p) => format!("GF({p})"),
            FieldSpec::Named(FieldName::Rational) => "QQ".to_string(),
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(PrimeField::DEFAULT_PRIME)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemaError {
    /// Dotted path of the offending field, or `document` for syntax errors.
    pub field: String,
    pub message: String,
}

impl SchemaError {
    pub fn new(field: impl Into<String>, message: impl Into<String>) -> Self {
        SchemaError {
            field: field.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

impl std::error::Error for SchemaError {}

pub fn parse_str(text: &str) -> Result<InputDocument, SchemaError> {
    let doc: InputDocument = toml::from_str(text).map_err(|e| SchemaError::new("document", e.to_string().trim_end()))?;
    doc.check()?;
    Ok(doc)
}

pub fn parse_input(path: &Path) -> Result<InputDocument, SchemaError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| SchemaError::new("document", format!("cannot read {}: {e}", path.display())))?;
    parse_str(&text)
}

pub fn emit(doc: &InputDocument) -> String {
    toml::to_string(doc).expect("documents always serialize")
}

impl InputDocument {
    pub fn rho_max(&self) -> Option<u32> {
        self.options.as_ref().and_then(|o| o.rho_max)
    }

    pub fn seed(&self) -> Option<u64> {
        self.options.as_ref().and_then(|o| o.seed)
    }

    pub fn classes(&self) -> Option<&[Vec<String>]> {
        self.options.as_ref().and_then(|o| o.classes.as_deref())
    }

    /// Structural checks that do not need the complex.
    fn check(&self) -> Result<(), SchemaError> {
        if self.facets.is_empty() {
            return Err(SchemaError::new("facets", "at least one facet is required"));
        }
        if let Some(order) = &self.order {
            if OrderKind::parse(order).is_none() {
                return Err(SchemaError::new("order", format!("unknown monomial order {order:?}")));
            }
        }
        if let Some(FieldSpec::Prime(p)) = self.field {
            PrimeField::new(p).map_err(|e| SchemaError::new("field", e.to_string()))?;
        }
        for (i, e) in self.extensions.iter().enumerate() {
            if e.facet >= self.facets.len() {
                return Err(SchemaError::new(
                    format!("extensions[{i}].facet"),
                    format!("facet index {} out of range (0..{})", e.facet, self.facets.len()),
                ));
            }
        }
        Ok(())
    }

    pub fn complex(&self) -> Result<SimplicialComplex, SchemaError> {
        let result = match &self.vertices {
            Some(v) => SimplicialComplex::from_named(v, &self.facets),
            None => validate_complex(&self.facets),
        };
        result.map_err(|e| SchemaError::new("facets", e.to_string()))
    }

    /// Build the extension complex. Extension facet indices refer to the
    /// input facet list; extending a facet that was dropped as non-maximal is
    /// an error.
    pub fn extension_complex(&self) -> Result<ExtensionComplex, SchemaError> {
        let base = self.complex()?;
        let mut specs = Vec::new();
        for (i, e) in self.extensions.iter().enumerate() {
            let path = format!("extensions[{i}]");
            let mut ids = Vec::new();
            for name in &self.facets[e.facet] {
                ids.push(base.id_of(name).expect("facet names are vertices"));
            }
            ids.sort_unstable();
            let facet = base.facet_index(&ids).ok_or_else(|| {
                SchemaError::new(format!("{path}.facet"), format!("facet {} is not maximal", e.facet))
            })?;
            specs.push(ExtensionSpec {
                facet,
                origin: e.origin.clone(),
                edges: e
                    .edges
                    .iter()
                    .map(|edge| EdgeSpec {
                        target: edge.target.clone(),
                        points: edge.points.clone(),
                    })
                    .collect(),
            });
        }
        ExtensionComplex::new(base, &specs).map_err(|e| SchemaError::new("extensions", e.to_string()))
    }
}
