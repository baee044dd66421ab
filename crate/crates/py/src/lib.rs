//! Python bindings for scrollext.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use scrollext::color::{
    dtree_coloration, g_prime, has_d_tree_skeleton, is_binomial_coloration, is_good_coloration, reduction_vectors,
    search_binomial_coloration, Coloration,
};
use scrollext::complex::{is_generalized_d_tree as d_tree, stanley_reisner_generators, validate_complex, Graph};
use scrollext::extension::{
    binomial_extension_ideal, component_ideals, reduced_graph, EdgeSpec, ExtensionComplex as Inner, ExtensionSpec,
};
use scrollext::fixtures;
use scrollext::oracle::{intersect_components, run_oracle};
use scrollext::poly::{buchberger, Monomial, PolyRing, PrimeField, Rationals};
use scrollext::reduce::reduction_number;

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A prime characteristic or `"rational"`.
#[derive(FromPyObject)]
enum FieldArg {
    Prime(u32),
    Name(String),
}

/// Run `$body` with `$ring` bound to a degrevlex ring over the chosen field.
macro_rules! with_ring {
    ($field:expr, $ext:expr, |$ring:ident| $body:expr) => {{
        let names = $ext.names().to_vec();
        match $field {
            FieldArg::Prime(p) => {
                let $ring = PolyRing::degrevlex(PrimeField::new(p).map_err(value_error)?, names);
                $body
            }
            FieldArg::Name(s) if s == "rational" || s == "QQ" => {
                let $ring = PolyRing::degrevlex(Rationals, names);
                $body
            }
            FieldArg::Name(s) => return Err(value_error(format!("unknown field {s:?}"))),
        }
    }};
}

type EdgeArg = (String, Vec<String>);

/// A simplicial complex with scroll extensions on some of its facets.
///
/// `extensions` is a list of `(facet_index, origin, [(target, [points])])`.
#[pyclass(name = "ExtensionComplex", frozen)]
struct PyExtensionComplex {
    inner: Inner,
}

impl PyExtensionComplex {
    fn classes(&self, c: &Coloration) -> Vec<Vec<String>> {
        c.format_classes(self.inner.names())
    }

    fn coloration_of(&self, classes: Option<Vec<Vec<String>>>) -> PyResult<(String, Coloration)> {
        if let Some(classes) = classes {
            let mut ids = Vec::new();
            for class in &classes {
                let mut c = Vec::new();
                for name in class {
                    let v = self.inner.names().iter().position(|n| n == name);
                    c.push(v.ok_or_else(|| value_error(format!("unknown variable {name:?}")))?);
                }
                ids.push(c);
            }
            let c = Coloration::from_classes(ids.len(), &ids).map_err(value_error)?;
            return Ok(("explicit".into(), c));
        }
        if has_d_tree_skeleton(self.inner.base()).is_ok() {
            return dtree_coloration(&self.inner).map(|c| ("dtree".into(), c)).map_err(value_error);
        }
        search_binomial_coloration(&self.inner)
            .map(|c| ("search".into(), c))
            .ok_or_else(|| value_error("no binomial coloration exists"))
    }
}

#[pymethods]
impl PyExtensionComplex {
    #[new]
    #[pyo3(signature = (facets, extensions = Vec::new()))]
    fn new(facets: Vec<Vec<String>>, extensions: Vec<(usize, String, Vec<EdgeArg>)>) -> PyResult<Self> {
        let base = validate_complex(&facets).map_err(value_error)?;
        if base.facets().len() != facets.len() {
            return Err(value_error("facets must be inclusion-maximal"));
        }
        let specs: Vec<ExtensionSpec> = extensions
            .into_iter()
            .map(|(facet, origin, edges)| ExtensionSpec {
                facet,
                origin,
                edges: edges.into_iter().map(|(target, points)| EdgeSpec { target, points }).collect(),
            })
            .collect();
        let inner = Inner::new(base, &specs).map_err(value_error)?;
        Ok(PyExtensionComplex { inner })
    }

    /// Variable names: base vertices first, then the new points.
    #[getter]
    fn names(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn facets(&self) -> Vec<Vec<String>> {
        let names = self.inner.names();
        self.inner
            .extended()
            .facets()
            .iter()
            .map(|f| f.iter().map(|&v| names[v].clone()).collect())
            .collect()
    }

    fn matrices(&self) -> Vec<String> {
        self.inner.matrices().map(|m| m.format(self.inner.names())).collect()
    }

    /// Generators of the binomial extension ideal.
    fn generators(&self) -> Vec<String> {
        binomial_extension_ideal(&self.inner).format()
    }

    /// Generators of each component ideal, one list per facet.
    fn components(&self) -> Vec<Vec<String>> {
        component_ideals(&self.inner).iter().map(|c| c.format()).collect()
    }

    fn stanley_reisner(&self) -> Vec<String> {
        let n = self.inner.nvars();
        stanley_reisner_generators(self.inner.extended())
            .iter()
            .map(|s| Monomial::from_vars(n, s).format(self.inner.names()))
            .collect()
    }

    fn reduced_graph_edges(&self) -> Vec<(String, String)> {
        let names = self.inner.names();
        reduced_graph(&self.inner)
            .edges()
            .into_iter()
            .map(|(u, v)| (names[u].clone(), names[v].clone()))
            .collect()
    }

    /// Does the ideal equal the intersection of its components?
    #[pyo3(signature = (field = FieldArg::Prime(32003)))]
    fn decomposition_holds(&self, field: FieldArg) -> PyResult<bool> {
        with_ring!(field, self.inner, |ring| {
            let b = binomial_extension_ideal(&self.inner);
            let gb = buchberger(&ring, &b.polys(&ring).map_err(value_error)?);
            Ok(gb == intersect_components(&ring, &self.inner))
        })
    }

    /// Dimension, codimension, degree and Hilbert numerator of the quotient.
    #[pyo3(signature = (field = FieldArg::Prime(32003)))]
    fn hilbert<'py>(&self, py: Python<'py>, field: FieldArg) -> PyResult<Bound<'py, PyDict>> {
        let h = with_ring!(field, self.inner, |ring| {
            let b = binomial_extension_ideal(&self.inner);
            buchberger(&ring, &b.polys(&ring).map_err(value_error)?).hilbert_data()
        });
        let d = PyDict::new(py);
        d.set_item("dimension", h.dimension)?;
        d.set_item("codimension", h.codimension)?;
        d.set_item("degree", h.degree)?;
        d.set_item("numerator", h.format_numerator(false))?;
        d.set_item("reduced_numerator", h.format_numerator(true))?;
        Ok(d)
    }

    /// Color classes of a binomial coloration, or `None` when there is none.
    fn coloration(&self) -> Option<Vec<Vec<String>>> {
        self.coloration_of(None).ok().map(|(_, c)| self.classes(&c))
    }

    /// Reduction number of the linear forms given by a coloration (found
    /// automatically unless `classes` is given).
    #[pyo3(signature = (field = FieldArg::Prime(32003), rho_max = 3, classes = None))]
    fn reduce<'py>(
        &self,
        py: Python<'py>,
        field: FieldArg,
        rho_max: u32,
        classes: Option<Vec<Vec<String>>>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let (method, c) = self.coloration_of(classes)?;
        let g = reduction_vectors(&c, self.inner.nvars()).map_err(value_error)?;
        let b = binomial_extension_ideal(&self.inner);
        let report = with_ring!(field, self.inner, |ring| reduction_number(&ring, &g, &b, rho_max)
            .map_err(value_error)?);
        let d = PyDict::new(py);
        d.set_item("method", method)?;
        d.set_item("classes", self.classes(&c))?;
        d.set_item("binomial", is_binomial_coloration(&self.inner, &c).ok())?;
        d.set_item("good", is_good_coloration(&g_prime(&self.inner), &c).unwrap_or(false))?;
        d.set_item("vectors", g.format(self.inner.names()))?;
        d.set_item("reduction_number", report.reduction_number)?;
        let verdicts: Vec<(u32, bool)> = report.verdicts.iter().map(|v| (v.rho, v.contained)).collect();
        d.set_item("containment", verdicts)?;
        Ok(d)
    }

    /// Checks whose fast-path and Groebner-basis values disagree, as
    /// `(name, fast, oracle)` triples.
    #[pyo3(signature = (field = FieldArg::Prime(32003), seed = 0))]
    fn oracle_diffs(&self, field: FieldArg, seed: u64) -> PyResult<Vec<(String, String, String)>> {
        let report = with_ring!(field, self.inner, |ring| run_oracle(&ring, &self.inner, seed));
        Ok(report
            .diffs()
            .iter()
            .map(|c| (c.name.clone(), c.fast.clone(), c.oracle.clone()))
            .collect())
    }

    fn __repr__(&self) -> String {
        format!(
            "ExtensionComplex({} variables, {} facets, dim {})",
            self.inner.nvars(),
            self.inner.nfacets(),
            self.inner.dim()
        )
    }
}

/// Built-in examples: `"greduit"`, `"greduit1"` or `"cycles_two_facet"`.
#[pyfunction]
fn fixture(name: &str) -> PyResult<PyExtensionComplex> {
    let inner = match name {
        "greduit" => fixtures::greduit(),
        "greduit1" => fixtures::greduit1(),
        "cycles_two_facet" => fixtures::cycles_two_facet(),
        _ => return Err(value_error(format!("unknown fixture {name:?}"))),
    };
    Ok(PyExtensionComplex { inner })
}

/// Generalized d-tree test on a graph given by its edge list.
#[pyfunction]
fn is_generalized_d_tree(edges: Vec<(String, String)>, d: usize) -> bool {
    let mut names: Vec<&str> = Vec::new();
    for (u, v) in &edges {
        for s in [u, v] {
            if !names.contains(&s.as_str()) {
                names.push(s);
            }
        }
    }
    let id = |s: &str| names.iter().position(|n| *n == s).unwrap();
    let mut g = Graph::new(0..names.len());
    for (u, v) in &edges {
        if u != v {
            g.add_edge(id(u), id(v));
        }
    }
    d_tree(&g, d).is_tree
}

#[pymodule]
fn pyscrollext(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyExtensionComplex>()?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add_function(wrap_pyfunction!(is_generalized_d_tree, m)?)?;
    Ok(())
}
