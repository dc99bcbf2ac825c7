//! Closed-form intersection bounds for pairs of curve degrees.
//!
//! For irreducible nondegenerate curves of degrees `d1, d2` in projective
//! 4-space, three upper bounds on the number of common points are in play:
//!
//! * `B_DG(d1, d2)`, proved unconditionally,
//! * `B(d1, d2)`, the conjecturally sharp bound, attained on a cubic scroll,
//! * `B_g(d1, d2) = g(d1 + d2) + 1`, the genus bound, valid when neither
//!   curve lies on a cubic surface, where `g(d)` is the maximum genus of an
//!   irreducible nondegenerate curve of degree `d` not on a cubic.
//!
//! The sign of `B - B_g` decides which bound is the binding one off the
//! cubic. Writing `d1 = 4u + alpha` and `d2 - d1 = 4k + beta` with
//! `alpha, beta` in `0..=3` splits the comparison into sixteen cases, in each
//! of which `B - B_g` is a fixed polynomial in `u` and `k`; the sign is in
//! turn equivalent to the single inequality `(d2 - d1)^2 <= M(d1, d2)` with a
//! per-case threshold `M`. [`case_of`], [`b_minus_bg_case_poly`], and
//! [`m_threshold`] expose the three layers of this analysis so they can be
//! verified against each other.
//!
//! All values are exact `i64`; divisions by 2 and 8 in the closed forms are
//! asserted exact.

use serde::Serialize;

use crate::arith::exact_div;
use crate::error::{Error, Result};

// ---- Degree pairs ----

/// An ordered pair of curve degrees, each at least 1.
///
/// The pair is stored exactly as given. Operations that assume `d1 <= d2`
/// either require it (returning [`Error::UnorderedPair`]) or normalize via
/// [`DegreePair::normalized`], which reports whether a swap occurred.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DegreePair {
    d1: i64,
    d2: i64,
}

impl DegreePair {
    /// Builds a pair, rejecting degrees below 1.
    pub fn new(d1: i64, d2: i64) -> Result<Self> {
        for (name, got) in [("d1", d1), ("d2", d2)] {
            if got < 1 {
                return Err(Error::BelowMinimum { name, min: 1, got });
            }
        }
        Ok(Self { d1, d2 })
    }

    /// First degree as given.
    pub fn d1(self) -> i64 {
        self.d1
    }

    /// Second degree as given.
    pub fn d2(self) -> i64 {
        self.d2
    }

    /// Sum of the two degrees.
    pub fn sum(self) -> i64 {
        self.d1 + self.d2
    }

    /// Smaller of the two degrees.
    pub fn min(self) -> i64 {
        self.d1.min(self.d2)
    }

    /// Larger of the two degrees.
    pub fn max(self) -> i64 {
        self.d1.max(self.d2)
    }

    /// True when the pair already satisfies `d1 <= d2`.
    pub fn is_ordered(self) -> bool {
        self.d1 <= self.d2
    }

    /// Sorted copy of the pair, plus whether the components were swapped.
    pub fn normalized(self) -> (DegreePair, bool) {
        if self.d1 <= self.d2 {
            (self, false)
        } else {
            (
                DegreePair {
                    d1: self.d2,
                    d2: self.d1,
                },
                true,
            )
        }
    }
}

impl std::fmt::Display for DegreePair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.d1, self.d2)
    }
}

// ---- The three bounds ----

/// The unconditional bound `B_DG`.
///
/// Equal to `(d1-2)(d2-2) + 2` when `min(d1, d2) <= 5`, and to the minimum of
/// that value, `(d1-3) d2`, and `d1 (d2-3)` otherwise.
pub fn b_dg(pair: DegreePair) -> i64 {
    let (d1, d2) = (pair.d1, pair.d2);
    let secant = (d1 - 2) * (d2 - 2) + 2;
    if pair.min() <= 5 {
        secant
    } else {
        secant.min((d1 - 3) * d2).min(d1 * (d2 - 3))
    }
}

/// The conjecturally sharp bound `B`, attained by curves on a cubic scroll.
///
/// The formula is evaluated on the pair exactly as given; symmetry in
/// `(d1, d2)` is a theorem about the formula, not an input normalization.
pub fn b(pair: DegreePair) -> i64 {
    let (d1, d2) = (pair.d1, pair.d2);
    match (d1 % 2 == 0, d2 % 2 == 0) {
        (true, true) => {
            if d1 <= d2 {
                exact_div(d1 * (d2 - 1), 2, "B, both even")
            } else {
                exact_div((d1 - 1) * d2, 2, "B, both even")
            }
        }
        (true, false) => exact_div(d1 * (d2 - 1), 2, "B, d1 even"),
        (false, true) => exact_div((d1 - 1) * d2, 2, "B, d2 even"),
        (false, false) => exact_div((d1 - 1) * (d2 - 1), 2, "B, both odd") + 1,
    }
}

/// Maximum genus `g(d)` of an irreducible nondegenerate degree-`d` curve in
/// projective 4-space not lying on a cubic surface.
///
/// Closed form for `d >= 5`, split on `d mod 4`; the value for `d = 4` is 0.
/// Rejects `d <= 0`.
pub fn g_extremal(d: i64) -> Result<i64> {
    if d <= 0 {
        return Err(Error::BelowMinimum {
            name: "d",
            min: 1,
            got: d,
        });
    }
    if d == 4 {
        return Ok(0);
    }
    let value = match d % 4 {
        0 => exact_div(d * d - 4 * d + 8, 8, "g_extremal, d = 0 mod 4"),
        2 => exact_div(d * d - 4 * d + 4, 8, "g_extremal, d = 2 mod 4"),
        _ => exact_div(d * d - 4 * d + 3, 8, "g_extremal, d odd"),
    };
    Ok(value)
}

/// The genus bound `B_g(d1, d2) = g(d1 + d2) + 1`.
///
/// Valid for curves neither of which lies on a cubic surface. Requires
/// `d1 + d2 >= 5`.
pub fn b_g(pair: DegreePair) -> Result<i64> {
    if pair.sum() < 5 {
        return Err(Error::BelowMinimum {
            name: "d1 + d2",
            min: 5,
            got: pair.sum(),
        });
    }
    Ok(g_extremal(pair.sum())? + 1)
}

/// `B - B_g` for an ordered pair with `d1 + d2 >= 5`.
pub fn b_minus_bg(pair: DegreePair) -> Result<i64> {
    Ok(b(pair) - b_g(pair)?)
}

/// Every closed-form bound for one degree pair, in a single bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundValues {
    /// The unconditional bound.
    pub b_dg: i64,
    /// The conjecturally sharp bound.
    pub b: i64,
    /// The genus bound.
    pub b_g: i64,
    /// The product `d1 * d2`.
    pub trivial: i64,
    /// `g(d1 + d2)`, the genus behind `b_g`.
    pub g_extremal_of_sum: i64,
}

/// Computes all bounds at once. Requires `d1 + d2 >= 5`.
pub fn bound_values(pair: DegreePair) -> Result<BoundValues> {
    let g_sum = g_extremal(pair.sum())?;
    Ok(BoundValues {
        b_dg: b_dg(pair),
        b: b(pair),
        b_g: b_g(pair)?,
        trivial: pair.d1() * pair.d2(),
        g_extremal_of_sum: g_sum,
    })
}

// ---- Sixteen-case decomposition of B - B_g ----

/// Case label in the `(alpha, beta)` residue grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[allow(clippy::upper_case_acronyms)]
pub enum CaseLabel {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
    XI,
    XII,
    XIII,
    XIV,
    XV,
    XVI,
}

impl CaseLabel {
    /// Label from the residues `alpha = d1 mod 4`, `beta = (d2 - d1) mod 4`.
    pub fn from_residues(alpha: i64, beta: i64) -> Self {
        use CaseLabel::*;
        match (alpha, beta) {
            (0, 0) => I,
            (0, 1) => V,
            (0, 2) => IX,
            (0, 3) => XIII,
            (1, 0) => X,
            (1, 1) => XIV,
            (1, 2) => II,
            (1, 3) => VI,
            (2, 0) => III,
            (2, 1) => VII,
            (2, 2) => XI,
            (2, 3) => XV,
            (3, 0) => XII,
            (3, 1) => XVI,
            (3, 2) => IV,
            (3, 3) => VIII,
            _ => unreachable!("residues are reduced mod 4"),
        }
    }

    /// Roman-numeral rendering.
    pub fn roman(self) -> &'static str {
        use CaseLabel::*;
        match self {
            I => "I",
            II => "II",
            III => "III",
            IV => "IV",
            V => "V",
            VI => "VI",
            VII => "VII",
            VIII => "VIII",
            IX => "IX",
            X => "X",
            XI => "XI",
            XII => "XII",
            XIII => "XIII",
            XIV => "XIV",
            XV => "XV",
            XVI => "XVI",
        }
    }
}

impl std::fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.roman())
    }
}

/// Parameters of the case decomposition `d1 = 4u + alpha`,
/// `d2 - d1 = 4 k_step + beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CaseParams {
    /// Which of the sixteen cases the pair falls in.
    pub case_label: CaseLabel,
    /// `d1 mod 4`.
    pub alpha: i64,
    /// `(d2 - d1) mod 4`.
    pub beta: i64,
    /// `d1 div 4`.
    pub u: i64,
    /// `(d2 - d1) div 4`.
    pub k_step: i64,
}

/// Decomposes an ordered pair into its case parameters.
///
/// Requires `d1 <= d2`.
pub fn case_of(pair: DegreePair) -> Result<CaseParams> {
    if !pair.is_ordered() {
        return Err(Error::UnorderedPair {
            d1: pair.d1,
            d2: pair.d2,
        });
    }
    let alpha = pair.d1.rem_euclid(4);
    let u = pair.d1.div_euclid(4);
    let diff = pair.d2 - pair.d1;
    let beta = diff.rem_euclid(4);
    let k_step = diff.div_euclid(4);
    Ok(CaseParams {
        case_label: CaseLabel::from_residues(alpha, beta),
        alpha,
        beta,
        u,
        k_step,
    })
}

/// The per-case polynomial equal to `B - B_g`, evaluated at `(u, k)`.
pub fn b_minus_bg_case_poly(params: &CaseParams) -> i64 {
    use CaseLabel::*;
    let (u, k) = (params.u, params.k_step);
    match params.case_label {
        I => 2 * u + 2 * k - 2 * k * k - 2,
        II => -2 * k - 2 * k * k - 1,
        III => 2 * u + 2 * k - 2 * k * k - 1,
        IV => -2 * k - 2 * k * k - 1,
        V => 2 * u + k - 2 * k * k - 1,
        VI => 2 * u - 3 * k - 2 * k * k - 2,
        VII => 2 * u + k - 2 * k * k,
        VIII => 2 * u - 3 * k - 2 * k * k - 1,
        IX => 2 * u - 2 * k * k - 1,
        X => -2 * k * k,
        XI => 2 * u - 2 * k * k,
        XII => -2 * k * k,
        XIII => 2 * u - 2 * k * k - k - 1,
        XIV => 2 * u - 2 * k * k - k - 1,
        XV => 2 * u - 2 * k * k - k,
        XVI => 2 * u - 2 * k * k - k,
    }
}

/// The threshold `M(d1, d2)` such that `(d2 - d1)^2 <= M` exactly when
/// `B - B_g >= 0`, with equality cases matching strictness.
///
/// Requires `d1 <= d2`.
pub fn m_threshold(pair: DegreePair) -> Result<i64> {
    use CaseLabel::*;
    let params = case_of(pair)?;
    let (d1, d2) = (pair.d1, pair.d2);
    Ok(match params.case_label {
        I | III => 4 * d2 - 16,
        V | VII | XIII | XV => 4 * d2 - 11,
        IX | XI => 4 * d2 - 12,
        X | XII => 0,
        II | IV => -1,
        VI | VIII | XIV | XVI => 4 * d1 - 11,
    })
}

/// True when the threshold inequality `(d2 - d1)^2 <= M(d1, d2)` holds.
///
/// Requires `d1 <= d2`.
pub fn threshold_holds(pair: DegreePair) -> Result<bool> {
    let diff = pair.d2 - pair.d1;
    Ok(diff * diff <= m_threshold(pair)?)
}
