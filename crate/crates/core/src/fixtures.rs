//! Named quivers with relations used in tests, documentation and the CLI.
//!
//! Vertex `0` is the star vertex wherever one is meaningful.

use crate::error::Result;
use crate::quiver::{BoundQuiver, Quiver};

type Binomial<'a> = (&'a [&'a str], &'a [&'a str]);

fn build(vertices: &[&str], arrows: &[(&str, &str, &str)], rels: &[Binomial]) -> BoundQuiver {
    let q = Quiver::from_triples(vertices, arrows).expect("fixture quiver is well formed");
    BoundQuiver::with_binomials(q, rels).expect("fixture relations are well formed")
}

const TRIANGLE: [(&str, &str, &str); 6] = [
    ("c1", "0", "1"),
    ("c2", "1", "2"),
    ("c3", "2", "0"),
    ("a1", "1", "0"),
    ("a2", "2", "1"),
    ("a3", "0", "2"),
];

/// Doubled triangle presenting the endomorphism ring for `1/3(1,2)`.
pub fn z3() -> BoundQuiver {
    build(
        &["0", "1", "2"],
        &TRIANGLE,
        &[
            (&["c1", "a1"], &["a3", "c3"]),
            (&["c2", "a2"], &["a1", "c1"]),
            (&["c3", "a3"], &["a2", "c2"]),
        ],
    )
}

/// Two vertices joined by arrows `a, b` (the projective line).
pub fn kronecker() -> BoundQuiver {
    build(&["0", "1"], &[("a", "0", "1"), ("b", "0", "1")], &[])
}

/// Arrows `a, b: 0 → 1`, `t: 1 → 0` with `atb = bta` (blowup of the plane).
pub fn blowup() -> BoundQuiver {
    build(
        &["0", "1"],
        &[("a", "0", "1"), ("b", "0", "1"), ("t", "1", "0")],
        &[(&["a", "t", "b"], &["b", "t", "a"])],
    )
}

/// Doubled 2-cycle with `at = bs`, `ta = sb` (the `1/2(1,1)` surface).
pub fn a1_surface() -> BoundQuiver {
    build(
        &["0", "1"],
        &[
            ("a", "0", "1"),
            ("b", "0", "1"),
            ("t", "1", "0"),
            ("s", "1", "0"),
        ],
        &[(&["a", "t"], &["b", "s"]), (&["t", "a"], &["s", "b"])],
    )
}

/// The `1/2(1,1)` quiver with a loop at each vertex commuting with every
/// arrow. Its invariant ring is not a domain.
pub fn loops_counterexample() -> BoundQuiver {
    build(
        &["0", "1"],
        &[
            ("a", "0", "1"),
            ("b", "0", "1"),
            ("t", "1", "0"),
            ("s", "1", "0"),
            ("v", "0", "0"),
            ("w", "1", "1"),
        ],
        &[
            (&["v", "a"], &["a", "w"]),
            (&["v", "b"], &["b", "w"]),
            (&["w", "s"], &["s", "v"]),
            (&["w", "t"], &["t", "v"]),
            (&["a", "t"], &["b", "s"]),
            (&["t", "a"], &["s", "b"]),
        ],
    )
}

fn triangle_with_loop(loop_arrow: (&str, &str, &str), rels: &[Binomial]) -> BoundQuiver {
    let mut arrows = TRIANGLE.to_vec();
    arrows.push(loop_arrow);
    build(&["0", "1", "2"], &arrows, rels)
}

/// Suspended pinch point `uv = x²y` presented with a loop `y` at vertex 0.
pub fn spp() -> BoundQuiver {
    triangle_with_loop(
        ("y", "0", "0"),
        &[
            (&["y", "c1"], &["c1", "c2", "a2"]),
            (&["y", "a3"], &["a3", "a2", "c2"]),
            (&["c3", "y"], &["a2", "c2", "c3"]),
            (&["a1", "y"], &["c2", "a2", "a1"]),
            (&["c1", "a1"], &["a3", "c3"]),
            (&["a2", "a1", "c1"], &["c3", "a3", "a2"]),
            (&["c2", "c3", "a3"], &["a1", "c1", "c2"]),
        ],
    )
}

/// Suspended pinch point presented with a loop `z` at vertex 1.
pub fn spp_alt() -> BoundQuiver {
    triangle_with_loop(
        ("z", "1", "1"),
        &[
            (&["z", "c2"], &["c2", "c3", "a3"]),
            (&["z", "a1"], &["a1", "a3", "c3"]),
            (&["c1", "z"], &["a3", "c3", "c1"]),
            (&["a2", "z"], &["c3", "a3", "a2"]),
            (&["c2", "a2"], &["a1", "c1"]),
            (&["a3", "a2", "c2"], &["c1", "a1", "a3"]),
            (&["c3", "c1", "a1"], &["a2", "c2", "c3"]),
        ],
    )
}

/// Vertices 1, 2, 3 with `a, b: 1 → 2`, `c: 2 → 3` and relation `ac = bc`.
pub fn relation_triangle() -> BoundQuiver {
    build(
        &["1", "2", "3"],
        &[("a", "1", "2"), ("b", "1", "2"), ("c", "2", "3")],
        &[(&["a", "c"], &["b", "c"])],
    )
}

/// All fixtures by name, in a fixed order.
pub fn all() -> Vec<(&'static str, BoundQuiver)> {
    vec![
        ("z3", z3()),
        ("kronecker", kronecker()),
        ("blowup", blowup()),
        ("a1_surface", a1_surface()),
        ("loops_counterexample", loops_counterexample()),
        ("spp", spp()),
        ("spp_alt", spp_alt()),
        ("relation_triangle", relation_triangle()),
    ]
}

pub fn by_name(name: &str) -> Result<BoundQuiver> {
    all()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, q)| q)
        .ok_or_else(|| crate::Error::InvalidInput(format!("unknown fixture `{name}`")))
}
