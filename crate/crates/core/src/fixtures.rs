//! Worked examples as ready-made extension complexes.

use crate::complex::validate_complex;
use crate::extension::{ExtensionComplex, ExtensionSpec};

/// One facet `[a, b, c, d]`, origin `a`, edges `b`, `c`, `d` carrying `x`, `y`, `z`.
pub fn greduit() -> ExtensionComplex {
    let base = validate_complex(&[vec!["a", "b", "c", "d"]]).expect("valid");
    let spec = ExtensionSpec::new(0, "a", &[("b", &["x"]), ("c", &["y"]), ("d", &["z"])]);
    ExtensionComplex::new(base, &[spec]).expect("valid")
}

/// Four triangles `{a,b,c}`, `{f,c,b}`, `{d,f,e}`, `{g,a,e}`, each with one
/// new point on its second edge. The facet list is reconstructed from the
/// variable sets of the four matrices.
pub fn greduit1() -> ExtensionComplex {
    let base = validate_complex(&[
        vec!["a", "b", "c"],
        vec!["f", "c", "b"],
        vec!["d", "f", "e"],
        vec!["g", "a", "e"],
    ])
    .expect("valid");
    let specs = [
        ExtensionSpec::new(0, "a", &[("b", &[]), ("c", &["y"])]),
        ExtensionSpec::new(1, "f", &[("c", &[]), ("b", &["z"])]),
        ExtensionSpec::new(2, "d", &[("f", &[]), ("e", &["x"])]),
        ExtensionSpec::new(3, "g", &[("a", &[]), ("e", &["w"])]),
    ];
    ExtensionComplex::new(base, &specs).expect("valid")
}

/// Triangles `[a, b, c]` and `[b, c, d]` with matrices `[a, x, b] [y, c]`
/// and `[d, u, b] [v, c]`.
pub fn cycles_two_facet() -> ExtensionComplex {
    let base = validate_complex(&[vec!["a", "b", "c"], vec!["b", "c", "d"]]).expect("valid");
    let specs = [
        ExtensionSpec::new(0, "a", &[("b", &["x"]), ("c", &["y"])]),
        ExtensionSpec::new(1, "d", &[("b", &["u"]), ("c", &["v"])]),
    ];
    ExtensionComplex::new(base, &specs).expect("valid")
}
