//! Command-line front end: input documents, command dispatch and reports.

pub mod input;
pub mod report;

use std::time::Instant;

use scrollext::color::{
    dtree_coloration, g_prime, has_d_tree_skeleton, is_binomial_coloration, is_good_coloration, reduction_vectors,
    search_binomial_coloration, Coloration,
};
use scrollext::complex::{clique_complex, is_generalized_d_tree, proper_edge_stars, skeleton_graph};
use scrollext::extension::{binomial_extension_ideal, component_ideals, ExtensionComplex};
use scrollext::oracle::{intersect_components, run_oracle};
use scrollext::poly::{buchberger, Field, Monomial, MonomialOrder, OrderKind, PolyRing, PrimeField, Rationals};
use scrollext::reduce::{reduction_number, verify_main_theorem, Containment};

pub use input::{emit, parse_input, parse_str, FieldName, FieldSpec, InputDocument, SchemaError};
pub use report::Report;

pub const DEFAULT_RHO_MAX: u32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Ideal,
    Decompose,
    Hilbert,
    Color,
    Reduce,
    Oracle,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Ideal => "ideal",
            Command::Decompose => "decompose",
            Command::Hilbert => "hilbert",
            Command::Color => "color",
            Command::Reduce => "reduce",
            Command::Oracle => "oracle",
        }
    }
}

/// Settings after merging command-line flags over the document.
#[derive(Clone, Debug, Default)]
pub struct Settings {
    pub field: Option<FieldSpec>,
    pub order: Option<String>,
    pub rho_max: Option<u32>,
    pub seed: Option<u64>,
    pub oracle: bool,
    pub timing: bool,
}

#[derive(Debug)]
pub enum RunError {
    Input(SchemaError),
    Internal(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Input(_) => 2,
            RunError::Internal(_) => 3,
        }
    }
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Input(e) => write!(f, "input error: {e}"),
            RunError::Internal(e) => write!(f, "internal error: {e}"),
        }
    }
}

impl From<SchemaError> for RunError {
    fn from(e: SchemaError) -> Self {
        RunError::Input(e)
    }
}

/// Run `command` on `doc`.
pub fn run(command: Command, doc: &InputDocument, settings: &Settings) -> Result<Report, RunError> {
    let start = Instant::now();
    let ext = doc.extension_complex()?;
    let field = settings.field.or(doc.field).unwrap_or_default();
    let order_name = settings.order.clone().or_else(|| doc.order.clone()).unwrap_or("degrevlex".into());
    let kind = OrderKind::parse(&order_name).ok_or_else(|| SchemaError::new("order", format!("unknown order {order_name:?}")))?;
    let rho_max = settings.rho_max.or(doc.rho_max()).unwrap_or(DEFAULT_RHO_MAX);
    let seed = settings.seed.or(doc.seed()).unwrap_or(0);
    let explicit = match doc.classes() {
        Some(classes) => Some(classes_to_coloration(&ext, classes)?),
        None => None,
    };

    let base = ext.base();
    let inputs = report::Inputs {
        vertices: base.names(),
        facets: (0..base.facets().len()).map(|l| names_of(&ext, &base.facets()[l])).collect(),
        variables: ext.names().to_vec(),
        matrices: ext.matrices().map(|m| m.format(ext.names())).collect(),
        field: field.name(),
        order: kind.name().to_string(),
        rho_max,
        seed,
    };
    let job = Job {
        command,
        ext: &ext,
        rho_max,
        seed,
        explicit,
        oracle: settings.oracle,
    };
    let order = MonomialOrder::new(kind, ext.nvars());
    let mut report = match field {
        FieldSpec::Prime(p) => {
            let f = PrimeField::new(p).map_err(|e| SchemaError::new("field", e.to_string()))?;
            job.run(&ring(f, &ext, order)?)
        }
        FieldSpec::Named(FieldName::Rational) => job.run(&ring(Rationals, &ext, order)?),
    };
    report.inputs = inputs;
    if settings.timing {
        report.timing = Some(report::Timing {
            milliseconds: start.elapsed().as_secs_f64() * 1000.0,
        });
    }
    Ok(report)
}

fn ring<F: Field>(field: F, ext: &ExtensionComplex, order: MonomialOrder) -> Result<PolyRing<F>, RunError> {
    PolyRing::new(field, ext.names().to_vec(), order).map_err(|e| RunError::Internal(e.to_string()))
}

fn names_of(ext: &ExtensionComplex, ids: &[usize]) -> Vec<String> {
    ids.iter().map(|&v| ext.names()[v].clone()).collect()
}

fn classes_to_coloration(ext: &ExtensionComplex, classes: &[Vec<String>]) -> Result<Coloration, SchemaError> {
    let mut ids = Vec::new();
    for (i, class) in classes.iter().enumerate() {
        let mut c = Vec::new();
        for name in class {
            let v = ext
                .names()
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| SchemaError::new(format!("options.classes[{i}]"), format!("unknown variable {name:?}")))?;
            c.push(v);
        }
        ids.push(c);
    }
    Coloration::from_classes(classes.len(), &ids).map_err(|e| SchemaError::new("options.classes", e.to_string()))
}

struct Job<'a> {
    command: Command,
    ext: &'a ExtensionComplex,
    rho_max: u32,
    seed: u64,
    explicit: Option<Coloration>,
    oracle: bool,
}

impl Job<'_> {
    fn run<F: Field>(&self, ring: &PolyRing<F>) -> Report {
        let mut r = Report {
            command: self.command.name().to_string(),
            verdict: true,
            ..Report::default()
        };
        match self.command {
            Command::Validate => self.validate(&mut r),
            Command::Ideal => {
                r.generators = Some(binomial_extension_ideal(self.ext).format());
            }
            Command::Decompose => self.decompose(ring, &mut r),
            Command::Hilbert => self.hilbert(ring, &mut r),
            Command::Color => self.color(&mut r),
            Command::Reduce => self.reduce(ring, &mut r),
            Command::Oracle => {}
        }
        if self.oracle || self.command == Command::Oracle {
            let o = run_oracle(ring, self.ext, self.seed);
            let diffs = o.diffs().len();
            if diffs > 0 {
                r.verdict = false;
                r.reason.get_or_insert_with(|| format!("{diffs} oracle checks disagree"));
            }
            r.oracle = Some(report::Oracle {
                diffs,
                checks: o
                    .checks
                    .iter()
                    .map(|c| report::OracleEntry {
                        name: c.name.clone(),
                        agrees: c.agrees(),
                        fast: c.fast.clone(),
                        oracle: c.oracle.clone(),
                    })
                    .collect(),
            });
        }
        r
    }

    fn validate(&self, r: &mut Report) {
        let ext = self.ext;
        let base = ext.base();
        let g = skeleton_graph(base);
        let verdict = is_generalized_d_tree(&g, base.dim());
        let detail = match &verdict.failure {
            None => format!(
                "eliminate [{}] down to [{}]",
                names_of(ext, &verdict.elimination_order).join(", "),
                names_of(ext, &verdict.base_clique).join(", ")
            ),
            Some(f) => f.code().to_string(),
        };
        let flag = clique_complex(&g, &base.names()).is_ok_and(|c| {
            let mut a = c.facets().to_vec();
            let mut b = base.facets().to_vec();
            a.sort();
            b.sort();
            a == b
        });
        r.stats = Some(report::Stats {
            nvertices: base.nvertices(),
            nvariables: ext.nvars(),
            nfacets: ext.nfacets(),
            dim: ext.dim(),
            extended_facets: ext.extended().facets().iter().map(|f| names_of(ext, f)).collect(),
            d_tree: verdict.is_tree,
            d_tree_detail: detail,
            flag_complex: flag,
            proper_stars: proper_edge_stars(base).iter().map(Vec::len).collect(),
        });
    }

    fn decompose<F: Field>(&self, ring: &PolyRing<F>, r: &mut Report) {
        let b = binomial_extension_ideal(self.ext);
        let gb_b = buchberger(ring, &b.polys(ring).expect("ring matches"));
        let cap = intersect_components(ring, self.ext);
        let comps = component_ideals(self.ext)
            .iter()
            .enumerate()
            .map(|(l, c)| report::Component {
                facet: l,
                dimension: buchberger(ring, &c.polys(ring).expect("ring matches")).krull_dimension_lt(),
                generators: c.format(),
            })
            .collect();
        r.generators = Some(b.format());
        r.components = Some(comps);
        r.verdict = gb_b == cap;
        if !r.verdict {
            r.reason = Some("the ideal differs from the intersection of its components".into());
        }
    }

    fn hilbert<F: Field>(&self, ring: &PolyRing<F>, r: &mut Report) {
        let b = binomial_extension_ideal(self.ext);
        let h = buchberger(ring, &b.polys(ring).expect("ring matches")).hilbert_data();
        r.verdict = h.dimension == self.ext.dim() as i64 + 1;
        if !r.verdict {
            r.reason = Some(format!("dimension {} differs from 1 + dim = {}", h.dimension, self.ext.dim() + 1));
        }
        r.hilbert = Some(report::Hilbert {
            dimension: h.dimension,
            codimension: h.codimension,
            degree: h.degree,
            numerator: h.format_numerator(false),
            reduced_numerator: h.format_numerator(true),
        });
    }

    fn find_coloration(&self) -> Result<(String, Coloration), String> {
        if let Some(c) = &self.explicit {
            return Ok(("explicit".into(), c.clone()));
        }
        if has_d_tree_skeleton(self.ext.base()).is_ok() {
            return dtree_coloration(self.ext)
                .map(|c| ("dtree".into(), c))
                .map_err(|e| e.to_string());
        }
        search_binomial_coloration(self.ext)
            .map(|c| ("search".into(), c))
            .ok_or_else(|| "no binomial coloration exists".to_string())
    }

    fn coloration_section(&self, method: String, c: &Coloration) -> report::ColorationSection {
        report::ColorationSection {
            method,
            classes: c.format_classes(self.ext.names()),
            binomial: is_binomial_coloration(self.ext, c).ok(),
            good: is_good_coloration(&g_prime(self.ext), c).unwrap_or(false),
        }
    }

    fn color(&self, r: &mut Report) {
        match self.find_coloration() {
            Ok((method, c)) => {
                let s = self.coloration_section(method, &c);
                r.verdict = s.binomial && s.good;
                r.coloration = Some(s);
            }
            Err(e) => {
                r.verdict = false;
                r.reason = Some(e);
            }
        }
    }

    fn reduce<F: Field>(&self, ring: &PolyRing<F>, r: &mut Report) {
        let names = self.ext.names();
        let b = binomial_extension_ideal(self.ext);
        let (method, c, hypotheses) = if let Some(c) = &self.explicit {
            ("explicit".to_string(), c.clone(), Vec::new())
        } else {
            match verify_main_theorem(ring, self.ext) {
                Ok(t) => {
                    let hyps = t
                        .hypotheses
                        .iter()
                        .map(|h| report::HypothesisEntry {
                            facet: h.facet,
                            condition: h.condition().to_string(),
                            holds: h.holds(),
                        })
                        .collect();
                    (t.method.name().to_string(), t.coloration, hyps)
                }
                Err(e) => {
                    r.verdict = false;
                    r.reason = Some(e.to_string());
                    if let Ok((method, c)) = self.find_coloration() {
                        r.coloration = Some(self.coloration_section(method, &c));
                    }
                    return;
                }
            }
        };
        let coloration = self.coloration_section(method, &c);
        let vectors = match reduction_vectors(&c, self.ext.nvars()) {
            Ok(v) => v,
            Err(e) => {
                r.verdict = false;
                r.reason = Some(e.to_string());
                r.coloration = Some(coloration);
                return;
            }
        };
        r.coloration = Some(coloration);
        match reduction_number(ring, &vectors, &b, self.rho_max) {
            Ok(rep) => {
                r.verdict = rep.reduction_number.is_some();
                if !r.verdict {
                    r.reason = Some(format!("no reduction number up to {}", self.rho_max));
                }
                r.reduction = Some(report::Reduction {
                    vectors: vectors.format(names),
                    system_of_parameters: rep.is_sop,
                    reduction_number: rep.reduction_number,
                    containment: rep.verdicts.iter().map(|c| containment_entry(c, names)).collect(),
                    hypotheses,
                });
            }
            Err(e) => {
                r.verdict = false;
                r.reason = Some(e.to_string());
                r.reduction = Some(report::Reduction {
                    vectors: vectors.format(names),
                    system_of_parameters: false,
                    reduction_number: None,
                    containment: Vec::new(),
                    hypotheses,
                });
            }
        }
    }
}

fn containment_entry(c: &Containment, names: &[String]) -> report::ContainmentEntry {
    report::ContainmentEntry {
        rho: c.rho,
        contained: c.contained,
        rank: c.rank,
        dimension: c.dimension,
        uncovered: c.uncovered.iter().map(|m: &Monomial| m.format(names)).collect(),
    }
}
