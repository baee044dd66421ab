//! Report structures. Field names are part of the output format.

use serde::Serialize;

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    /// Overall mathematical verdict of the command.
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub inputs: Inputs,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<Stats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<Component>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<Hilbert>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloration: Option<ColorationSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduction: Option<Reduction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Oracle>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Inputs {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
    pub variables: Vec<String>,
    pub matrices: Vec<String>,
    pub field: String,
    pub order: String,
    pub rho_max: u32,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Stats {
    pub nvertices: usize,
    pub nvariables: usize,
    pub nfacets: usize,
    pub dim: usize,
    pub extended_facets: Vec<Vec<String>>,
    pub d_tree: bool,
    pub d_tree_detail: String,
    pub flag_complex: bool,
    /// Number of candidate proper stars per facet.
    pub proper_stars: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Component {
    pub facet: usize,
    pub dimension: i64,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Hilbert {
    pub dimension: i64,
    pub codimension: i64,
    pub degree: i64,
    pub numerator: String,
    pub reduced_numerator: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ColorationSection {
    pub method: String,
    pub classes: Vec<Vec<String>>,
    pub binomial: bool,
    pub good: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Reduction {
    pub vectors: Vec<String>,
    pub system_of_parameters: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduction_number: Option<u32>,
    pub containment: Vec<ContainmentEntry>,
    pub hypotheses: Vec<HypothesisEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ContainmentEntry {
    pub rho: u32,
    pub contained: bool,
    pub rank: usize,
    pub dimension: usize,
    pub uncovered: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HypothesisEntry {
    pub facet: usize,
    pub condition: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Oracle {
    pub diffs: usize,
    pub checks: Vec<OracleEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleEntry {
    pub name: String,
    pub agrees: bool,
    pub fast: String,
    pub oracle: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub milliseconds: f64,
}

impl Report {
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("reports always serialize")
    }

    /// Short human-readable summary.
    pub fn summary(&self) -> String {
        let mut out = vec![format!(
            "{}: {}",
            self.command,
            if self.verdict { "ok" } else { "FAILED" }
        )];
        if let Some(r) = &self.reason {
            out.push(format!("  reason: {r}"));
        }
        if let Some(s) = &self.stats {
            out.push(format!(
                "  {} vertices, {} variables, {} facets, dim {}, d-tree {}",
                s.nvertices, s.nvariables, s.nfacets, s.dim, s.d_tree
            ));
        }
        if let Some(g) = &self.generators {
            out.push(format!("  {} generators", g.len()));
        }
        if let Some(c) = &self.components {
            out.push(format!("  {} components", c.len()));
        }
        if let Some(h) = &self.hilbert {
            out.push(format!(
                "  dim {}, codim {}, degree {}",
                h.dimension, h.codimension, h.degree
            ));
        }
        if let Some(c) = &self.coloration {
            let classes: Vec<String> = c.classes.iter().map(|k| format!("{{{}}}", k.join(","))).collect();
            out.push(format!("  coloration ({}): {}", c.method, classes.join(" ")));
        }
        if let Some(r) = &self.reduction {
            let rho = r.reduction_number.map_or("none".to_string(), |n| n.to_string());
            out.push(format!("  g = ({}), reduction number {rho}", r.vectors.join(", ")));
        }
        if let Some(o) = &self.oracle {
            out.push(format!("  oracle: {} checks, {} diffs", o.checks.len(), o.diffs));
        }
        out.join("\n")
    }
}
