//! The small contexts and databases used throughout the tests and the CLI.

use crate::context::TriContext;
use crate::mrd::Mrd;

/// 3×3×2 context on which `h` fails to be monotone.
pub fn nonmonotone() -> TriContext {
    TriContext::from_labels(
        &["u1", "u2", "u3"],
        &["t1", "t2", "t3"],
        &["r1", "r2"],
        &[
            ("u1", "t1", "r1"),
            ("u1", "t2", "r1"),
            ("u2", "t1", "r1"),
            ("u2", "t2", "r1"),
            ("u1", "t1", "r2"),
            ("u2", "t1", "r2"),
        ],
    )
    .expect("fixture")
}

/// [`nonmonotone`] with an extra empty condition `r3`.
pub fn closed_non_maximal() -> TriContext {
    TriContext::from_labels(
        &["u1", "u2", "u3"],
        &["t1", "t2", "t3"],
        &["r1", "r2", "r3"],
        &[
            ("u1", "t1", "r1"),
            ("u1", "t2", "r1"),
            ("u2", "t1", "r1"),
            ("u2", "t2", "r1"),
            ("u1", "t1", "r2"),
            ("u2", "t1", "r2"),
        ],
    )
    .expect("fixture")
}

/// Three hyperedges whose tripartite encoding gains the triple `(u, t, r)`.
pub fn phantom() -> TriContext {
    TriContext::from_labels(
        &["u", "u0"],
        &["t", "t0"],
        &["r", "r0"],
        &[("u", "t", "r0"), ("u", "t0", "r"), ("u0", "t", "r")],
    )
    .expect("fixture")
}

/// 4×4×3 context on which the `σ` operators do not commute.
pub fn noncommuting() -> TriContext {
    let r1: &[(&str, &[&str])] = &[
        ("u1", &["t1", "t2", "t3", "t4"]),
        ("u2", &["t2", "t3", "t4"]),
        ("u3", &["t2", "t3", "t4"]),
        ("u4", &["t4"]),
    ];
    let r2: &[(&str, &[&str])] = &[
        ("u1", &["t2", "t3", "t4"]),
        ("u2", &["t2", "t3", "t4"]),
        ("u3", &["t3", "t4"]),
    ];
    let r3: &[(&str, &[&str])] = &[("u1", &["t4"])];
    let mut triples = alloc::vec::Vec::new();
    for (cond, rows) in [("r1", r1), ("r2", r2), ("r3", r3)] {
        for (u, ts) in rows {
            for t in *ts {
                triples.push((*u, *t, cond));
            }
        }
    }
    TriContext::from_labels(
        &["u1", "u2", "u3", "u4"],
        &["t1", "t2", "t3", "t4"],
        &["r1", "r2", "r3"],
        &triples,
    )
    .expect("fixture")
}

fn idempotency(with_f_u3: bool) -> Mrd {
    let mut b = Mrd::builder(&["r", "p", "f", "u"])
        .entities("r", &["r1", "r2"])
        .entities("p", &["p1"])
        .entities("f", &["f"])
        .entities("u", &["u1", "u2", "u3"])
        .relationship("r", "p")
        .relationship("p", "f")
        .relationship("f", "u")
        .edge(("r", "r1"), ("p", "p1"))
        .edge(("r", "r2"), ("p", "p1"))
        .edge(("p", "p1"), ("f", "f"))
        .edge(("f", "f"), ("u", "u1"))
        .edge(("f", "f"), ("u", "u2"));
    if with_f_u3 {
        b = b.edge(("f", "f"), ("u", "u3"));
    }
    b.build().expect("fixture")
}

/// Database on which `g` is not idempotent at `{r1, r2, p1}`.
pub fn idempotency_left() -> Mrd {
    idempotency(true)
}

/// Same database without the edge `f–u3`; `g` fixes `{r1, r2, p1}`.
pub fn idempotency_right() -> Mrd {
    idempotency(false)
}
