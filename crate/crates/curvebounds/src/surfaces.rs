//! Divisor arithmetic on the three cubic and quartic surfaces where extremal
//! intersections happen.
//!
//! * Cubic scroll: curve classes are written `a h + b (h - e)` with `a, b`
//!   integers; the degree is `2a + b` and the intersection pairing is
//!   `a1 a2 + a1 b2 + a2 b1`. Fixing the two degrees `(d1, d2)` and letting
//!   the classes range over the box `1 <= a_i <= floor(d_i / 2)` turns the
//!   pairing into the objective `-3 a1 a2 + a1 d2 + a2 d1`, whose maximum is
//!   attained at a corner of the box and equals `B(d1, d2)`.
//! * Cubic cone: a curve avoiding the vertex has degree divisible by 3; two
//!   curves meet in at most `d1 d2 / 3` points unless both pass through the
//!   vertex, in which case the bound is `(d1 d2 - i j)/3 + 1` with
//!   `i = d1 mod 3`, `j = d2 mod 3` taken in `{1, 2, 3}`.
//! * Del Pezzo quartic: classes are `c0 h - sum c_i e_i` over five base
//!   points, paired by `c0 c0' - sum c_i c_i'`; the hyperplane class is
//!   `(3; 1,1,1,1,1)` and the canonical class its negative. The two-parameter
//!   family built by [`dp_construction`] realizes `B(2k+1, 2l+1)` as an
//!   intersection of two genus-0 curves.

use serde::Serialize;

use crate::arith::exact_div;
use crate::bounds::DegreePair;
use crate::error::{Error, Result};

// ---- Cubic scroll ----

/// Divisor class `a h + b (h - e)` on the cubic scroll.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ScrollClass {
    /// Coefficient of `h`.
    pub a: i64,
    /// Coefficient of `h - e`.
    pub b: i64,
}

impl ScrollClass {
    /// Degree of a curve in this class.
    pub fn degree(self) -> i64 {
        2 * self.a + self.b
    }
}

impl std::fmt::Display for ScrollClass {
    /// Renders in the `h, e` basis: `a h + b (h - e) = (a + b) h - b e`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ch = self.a + self.b;
        let ce = self.b;
        write!(f, "{ch}h")?;
        match ce {
            0 => Ok(()),
            1 => write!(f, "-e"),
            -1 => write!(f, "+e"),
            ce if ce > 0 => write!(f, "-{ce}e"),
            ce => write!(f, "+{}e", -ce),
        }
    }
}

/// Intersection pairing of two scroll classes: `a1 a2 + a1 b2 + a2 b1`.
pub fn scroll_intersect(c1: ScrollClass, c2: ScrollClass) -> i64 {
    c1.a * c2.a + c1.a * c2.b + c2.a * c1.b
}

/// The pairing as a function of the `h` coefficients only, with the `h - e`
/// coefficients eliminated through `b_i = d_i - 2 a_i`:
/// `-3 a1 a2 + a1 d2 + a2 d1`.
///
/// Requires `1 <= a_i <= floor(d_i / 2)` for both coordinates.
pub fn scroll_objective(a1: i64, a2: i64, pair: DegreePair) -> Result<i64> {
    let (d1, d2) = (pair.d1(), pair.d2());
    if !(1..=d1 / 2).contains(&a1) || !(1..=d2 / 2).contains(&a2) {
        return Err(Error::Hypothesis(format!(
            "({a1}, {a2}) outside the box [1, {}] x [1, {}]",
            d1 / 2,
            d2 / 2
        )));
    }
    Ok(-3 * a1 * a2 + a1 * d2 + a2 * d1)
}

/// Outcome of maximizing the scroll objective over the degree box.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OptResult {
    /// Maximum objective value.
    pub maximum: i64,
    /// Corner coordinates attaining the maximum.
    pub maximizers: Vec<(i64, i64)>,
    /// Divisor-class pair for each maximizer, with `b_i = d_i - 2 a_i`.
    pub classes: Vec<(ScrollClass, ScrollClass)>,
}

/// Maximizes the scroll objective by evaluating the four corners of the box
/// `[1, floor(d1/2)] x [1, floor(d2/2)]`.
///
/// Requires `d1, d2 >= 2` so the box is nonempty.
pub fn scroll_maximize(pair: DegreePair) -> Result<OptResult> {
    let (d1, d2) = (pair.d1(), pair.d2());
    for (name, got) in [("d1", d1), ("d2", d2)] {
        if got < 2 {
            return Err(Error::BelowMinimum { name, min: 2, got });
        }
    }
    let (h1, h2) = (d1 / 2, d2 / 2);
    let mut corners = vec![(1, 1)];
    for corner in [(1, h2), (h1, 1), (h1, h2)] {
        if !corners.contains(&corner) {
            corners.push(corner);
        }
    }
    let maximum = corners
        .iter()
        .map(|&(a1, a2)| scroll_objective(a1, a2, pair).expect("corners lie in the box"))
        .max()
        .expect("at least one corner");
    let maximizers: Vec<(i64, i64)> = corners
        .into_iter()
        .filter(|&(a1, a2)| scroll_objective(a1, a2, pair).unwrap() == maximum)
        .collect();
    let classes = maximizers
        .iter()
        .map(|&(a1, a2)| {
            (
                ScrollClass {
                    a: a1,
                    b: d1 - 2 * a1,
                },
                ScrollClass {
                    a: a2,
                    b: d2 - 2 * a2,
                },
            )
        })
        .collect();
    Ok(OptResult {
        maximum,
        maximizers,
        classes,
    })
}

/// Maximum of the scroll objective over the whole box, by brute force.
///
/// Requires `d1, d2 >= 2`.
pub fn scroll_bruteforce(pair: DegreePair) -> Result<i64> {
    let (d1, d2) = (pair.d1(), pair.d2());
    for (name, got) in [("d1", d1), ("d2", d2)] {
        if got < 2 {
            return Err(Error::BelowMinimum { name, min: 2, got });
        }
    }
    let mut best = i64::MIN;
    for a1 in 1..=d1 / 2 {
        for a2 in 1..=d2 / 2 {
            best = best.max(scroll_objective(a1, a2, pair).expect("in the box"));
        }
    }
    Ok(best)
}

// ---- Cubic cone ----

/// How a pair of curves on the cubic cone meets the vertex, with the degree
/// residues `i = d1 mod 3`, `j = d2 mod 3` normalized into `{1, 2, 3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConeIncidence {
    /// First curve passes through the vertex.
    pub through_vertex_1: bool,
    /// Second curve passes through the vertex.
    pub through_vertex_2: bool,
    /// Residue of `d1` modulo 3, in `{1, 2, 3}`.
    pub i: i64,
    /// Residue of `d2` modulo 3, in `{1, 2, 3}`.
    pub j: i64,
}

/// Builds the incidence data for a pair on the cone.
///
/// A curve avoiding the vertex is a Cartier intersection, so its degree must
/// be divisible by 3; that is enforced here.
pub fn cone_incidence(
    pair: DegreePair,
    through_vertex_1: bool,
    through_vertex_2: bool,
) -> Result<ConeIncidence> {
    for (name, through, d) in [
        ("d1", through_vertex_1, pair.d1()),
        ("d2", through_vertex_2, pair.d2()),
    ] {
        if !through && d % 3 != 0 {
            return Err(Error::Hypothesis(format!(
                "a curve avoiding the cone vertex has degree divisible by 3, got {name} = {d}"
            )));
        }
    }
    Ok(ConeIncidence {
        through_vertex_1,
        through_vertex_2,
        i: (pair.d1() - 1).rem_euclid(3) + 1,
        j: (pair.d2() - 1).rem_euclid(3) + 1,
    })
}

/// Intersection bound on the cubic cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConeBound {
    /// The bound itself.
    pub value: i64,
    /// Both curves pass through the vertex.
    pub both_through_vertex: bool,
    /// The bound equals `floor(d1 d2 / 3) + 1`; otherwise it sits strictly
    /// below. Meeting it requires residues `(i, j)` in
    /// `{(1,1), (1,2), (2,1)}`.
    pub meets_generic: bool,
}

/// Bound on the intersection of two curves on the cubic cone.
///
/// With at most one curve through the vertex the bound is `d1 d2 / 3`; with
/// both through it is `(d1 d2 - i j)/3 + 1`. The incidence must have been
/// built for the same pair.
pub fn cone_bound(pair: DegreePair, incidence: &ConeIncidence) -> Result<ConeBound> {
    let expected_i = (pair.d1() - 1).rem_euclid(3) + 1;
    let expected_j = (pair.d2() - 1).rem_euclid(3) + 1;
    if incidence.i != expected_i || incidence.j != expected_j {
        return Err(Error::Hypothesis(format!(
            "incidence residues ({}, {}) do not match pair {pair}",
            incidence.i, incidence.j
        )));
    }
    for (name, through, d) in [
        ("d1", incidence.through_vertex_1, pair.d1()),
        ("d2", incidence.through_vertex_2, pair.d2()),
    ] {
        if !through && d % 3 != 0 {
            return Err(Error::Hypothesis(format!(
                "a curve avoiding the cone vertex has degree divisible by 3, got {name} = {d}"
            )));
        }
    }
    let product = pair.d1() * pair.d2();
    let both = incidence.through_vertex_1 && incidence.through_vertex_2;
    if both {
        let value = exact_div(product - incidence.i * incidence.j, 3, "cone bound") + 1;
        let meets_generic = matches!((incidence.i, incidence.j), (1, 1) | (1, 2) | (2, 1));
        debug_assert_eq!(meets_generic, value == product.div_euclid(3) + 1);
        Ok(ConeBound {
            value,
            both_through_vertex: true,
            meets_generic,
        })
    } else {
        Ok(ConeBound {
            value: exact_div(product, 3, "cone bound, vertex-avoiding"),
            both_through_vertex: false,
            meets_generic: false,
        })
    }
}

// ---- Del Pezzo quartic ----

/// Divisor class `c0 h - sum c_i e_i` on the del Pezzo quartic surface,
/// written against the five exceptional classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DelPezzoClass {
    /// Coefficient of `h`.
    pub c0: i64,
    /// Coefficients of the exceptional classes, subtracted.
    pub c: [i64; 5],
}

impl std::fmt::Display for DelPezzoClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}h", self.c0)?;
        for (idx, &ci) in self.c.iter().enumerate() {
            let n = idx + 1;
            match ci {
                0 => {}
                1 => write!(f, "-e{n}")?,
                -1 => write!(f, "+e{n}")?,
                ci if ci > 0 => write!(f, "-{ci}e{n}")?,
                ci => write!(f, "+{}e{n}", -ci)?,
            }
        }
        Ok(())
    }
}

/// Intersection pairing `c0 c0' - sum c_i c_i'`.
pub fn dp_intersect(x: &DelPezzoClass, y: &DelPezzoClass) -> i64 {
    x.c0 * y.c0 - x.c.iter().zip(y.c.iter()).map(|(a, b)| a * b).sum::<i64>()
}

/// Hyperplane class `(3; 1,1,1,1,1)` of the anticanonical embedding.
pub fn dp_hyperplane() -> DelPezzoClass {
    DelPezzoClass {
        c0: 3,
        c: [1, 1, 1, 1, 1],
    }
}

/// Canonical class `(-3; -1,-1,-1,-1,-1)`.
pub fn dp_canonical() -> DelPezzoClass {
    DelPezzoClass {
        c0: -3,
        c: [-1, -1, -1, -1, -1],
    }
}

/// Degree of a curve in class `x`: its pairing with the hyperplane class.
pub fn dp_degree(x: &DelPezzoClass) -> i64 {
    dp_intersect(x, &dp_hyperplane())
}

/// Arithmetic genus by adjunction: `1 + (x.x + x.K)/2`.
///
/// The division is always exact: `x.x + x.K` expands to
/// `c0 (c0 - 3) - sum c_i (c_i - 1)`, a sum of even terms.
pub fn dp_genus(x: &DelPezzoClass) -> i64 {
    let self_pairing = dp_intersect(x, x);
    let canonical_pairing = dp_intersect(x, &dp_canonical());
    1 + exact_div(self_pairing + canonical_pairing, 2, "adjunction")
}

/// The two-parameter family of odd-degree genus-0 classes meeting in
/// `2 k l + 1` points:
/// `L1 = (2k+1; 1, k, k, k, k+1)` and `L2 = (l+1; l, 1, 1, 0, 0)`.
///
/// Requires `k, l >= 1`.
pub fn dp_construction(k: i64, l: i64) -> Result<(DelPezzoClass, DelPezzoClass)> {
    for (name, got) in [("k", k), ("l", l)] {
        if got < 1 {
            return Err(Error::BelowMinimum { name, min: 1, got });
        }
    }
    Ok((
        DelPezzoClass {
            c0: 2 * k + 1,
            c: [1, k, k, k, k + 1],
        },
        DelPezzoClass {
            c0: l + 1,
            c: [l, 1, 1, 0, 0],
        },
    ))
}
