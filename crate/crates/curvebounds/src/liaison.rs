//! Residuation of curves in complete intersections of three hypersurfaces.
//!
//! A complete intersection of type `(f1, f2, f3)` in projective 4-space is a
//! curve of degree `f1 f2 f3`. If it contains a curve of degree `d_in` and
//! genus `g_in`, the residual curve has degree `d_res = f1 f2 f3 - d_in` and
//! genus
//!
//! `g_res = g_in - s (d_in - d_res) / 2` with slope `s = f1 + f2 + f3 - 5`.
//!
//! Residuation is an involution and a genus exchange; the certificates in
//! this module run it on the configurations that decide whether the sharp
//! bound can be met off a cubic surface:
//!
//! * [`even_case_margin`]: for even degree pairs with `d1 < d2` and
//!   `d1 + d2 = 0 mod 4`, a curve count meeting the extremal genus
//!   configuration stays at least `margin_lb` below `B(d1, d2)`.
//! * [`odd_degree_obstruction`]: for odd `d1` with `d2 = d1 + 4`, linking
//!   through a `(2, 2, m+2)` complete intersection forces negative genus on
//!   the residual, ruling the two genus branches out one by one.

use serde::Serialize;

use crate::arith::exact_div;
use crate::bounds::{self, DegreePair};
use crate::error::{Error, Result};

/// Type of a complete intersection of three hypersurfaces, degrees at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CIType {
    f1: i64,
    f2: i64,
    f3: i64,
}

impl CIType {
    /// Builds the type, rejecting degrees below 1.
    pub fn new(f1: i64, f2: i64, f3: i64) -> Result<Self> {
        for (name, got) in [("f1", f1), ("f2", f2), ("f3", f3)] {
            if got < 1 {
                return Err(Error::BelowMinimum { name, min: 1, got });
            }
        }
        Ok(Self { f1, f2, f3 })
    }

    /// The three hypersurface degrees.
    pub fn degrees(self) -> (i64, i64, i64) {
        (self.f1, self.f2, self.f3)
    }

    /// Degree of the complete intersection curve: `f1 f2 f3`.
    pub fn ci_degree(self) -> i64 {
        self.f1 * self.f2 * self.f3
    }

    /// The slope `f1 + f2 + f3 - 5` of the genus exchange.
    pub fn slope(self) -> i64 {
        self.f1 + self.f2 + self.f3 - 5
    }
}

impl std::fmt::Display for CIType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CI({},{},{})", self.f1, self.f2, self.f3)
    }
}

/// One residuation: input curve, residual curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LinkedPair {
    /// Degree of the input curve.
    pub d_in: i64,
    /// Genus of the input curve.
    pub g_in: i64,
    /// Degree of the residual curve.
    pub d_res: i64,
    /// Genus of the residual curve.
    pub g_res: i64,
}

/// Residuates a curve of degree `d_in` and genus `g_in` inside a complete
/// intersection of type `ci`.
///
/// Requires `0 < d_in < ci.ci_degree()` and that
/// `slope * (d_in - d_res)` is even; otherwise the genus exchange would not
/// be integral.
pub fn residual(ci: CIType, d_in: i64, g_in: i64) -> Result<LinkedPair> {
    if d_in < 1 {
        return Err(Error::BelowMinimum {
            name: "d_in",
            min: 1,
            got: d_in,
        });
    }
    let total = ci.ci_degree();
    let d_res = total - d_in;
    if d_res < 1 {
        return Err(Error::ResidualDegree {
            ci_degree: total,
            d_in,
        });
    }
    let exchanged = ci.slope() * (d_in - d_res);
    if exchanged % 2 != 0 {
        return Err(Error::Parity(format!(
            "slope {} times degree difference {} is odd",
            ci.slope(),
            d_in - d_res
        )));
    }
    Ok(LinkedPair {
        d_in,
        g_in,
        d_res,
        g_res: g_in - exchanged / 2,
    })
}

/// Certificate that even pairs meeting the extremal configuration sit well
/// below the sharp bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EvenCaseMargin {
    /// `(d1 + d2)/4 - 2`.
    pub m: i64,
    /// `d1 / 2`.
    pub k: i64,
    /// Largest intersection count compatible with the extremal genus
    /// configuration: `2 m k + 2 k + 1`.
    pub n_max: i64,
    /// Guaranteed gap `B - n_max`, in closed form: `k (2m + 5 - 2k) - 1`.
    pub margin_lb: i64,
}

/// Computes the even-case margin certificate.
///
/// Requires `d1 < d2`, both degrees even, `d1 + d2 = 0 mod 4`, and
/// `d1 + d2 >= 16`. Guarantees `margin_lb > 0` and
/// `B(d1, d2) - n_max >= margin_lb` (the gap is in fact exactly `margin_lb`).
pub fn even_case_margin(pair: DegreePair) -> Result<EvenCaseMargin> {
    let (d1, d2) = (pair.d1(), pair.d2());
    if d1 >= d2 {
        return Err(Error::Hypothesis(format!(
            "requires d1 < d2, got ({d1}, {d2})"
        )));
    }
    if d1 % 2 != 0 || d2 % 2 != 0 {
        return Err(Error::Hypothesis(format!(
            "requires both degrees even, got ({d1}, {d2})"
        )));
    }
    let sum = d1 + d2;
    if sum % 4 != 0 {
        return Err(Error::Hypothesis(format!(
            "requires d1 + d2 = 0 mod 4, got {sum}"
        )));
    }
    if sum < 16 {
        return Err(Error::BelowMinimum {
            name: "d1 + d2",
            min: 16,
            got: sum,
        });
    }
    let k = d1 / 2;
    let m = sum / 4 - 2;
    let n_max = 2 * m * k + 2 * k + 1;
    let margin_lb = k * (2 * m + 5 - 2 * k) - 1;
    debug_assert_eq!(bounds::b(pair) - n_max, margin_lb);
    debug_assert!(margin_lb > 0);
    Ok(EvenCaseMargin {
        m,
        k,
        n_max,
        margin_lb,
    })
}

/// Certificate that odd pairs at distance 4 cannot exceed the sharp bound
/// through either genus branch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddDegreeObstruction {
    /// `(d1 + d2 - 6)/4`, so `d1 = 2m + 1` and `d2 = 2m + 5`.
    pub m: i64,
    /// The linking complete intersection `(2, 2, m+2)`.
    pub ci: CIType,
    /// `B - B_g`, always -2 for these pairs.
    pub b_minus_bg: i64,
    /// Residual genus when the union is arithmetically Cohen-Macaulay with
    /// the extremal h-vector: 0.
    pub residual_genus_acm: i64,
    /// Residual genus in the defect-1 branch: -1.
    pub residual_genus_defect1: i64,
    /// Genus forced on the union of the first curve with the degree-2
    /// residual: `-(m + 1)`, impossible for a reduced connected curve.
    pub union_genus: i64,
}

/// Computes the odd-degree obstruction certificate.
///
/// Requires `d1` odd with `d1 >= 7`, `d2 - d1 = 4`, and `d1 + d2 = 2 mod 4`.
pub fn odd_degree_obstruction(pair: DegreePair) -> Result<OddDegreeObstruction> {
    let (d1, d2) = (pair.d1(), pair.d2());
    if d1 < 7 {
        return Err(Error::BelowMinimum {
            name: "d1",
            min: 7,
            got: d1,
        });
    }
    if d1 % 2 == 0 {
        return Err(Error::Hypothesis(format!("requires d1 odd, got {d1}")));
    }
    if d2 - d1 != 4 {
        return Err(Error::Hypothesis(format!(
            "requires d2 - d1 = 4, got ({d1}, {d2})"
        )));
    }
    let sum = d1 + d2;
    if sum % 4 != 2 {
        return Err(Error::Hypothesis(format!(
            "requires d1 + d2 = 2 mod 4, got {sum}"
        )));
    }
    let m = exact_div(sum - 6, 4, "odd obstruction, m");
    let ci = CIType::new(2, 2, m + 2).expect("degrees are positive");
    let b_minus_bg = bounds::b_minus_bg(pair)?;
    assert_eq!(b_minus_bg, -2, "B - B_g is -2 in the odd distance-4 cases");

    // The extremal union has degree d1 + d2 = 4m + 6 and genus 2(m+1)^2 in
    // the arithmetically Cohen-Macaulay branch, one less in the defect-1
    // branch; both residuate to a conic.
    let g_ext = bounds::g_extremal(sum)?;
    let acm = residual(ci, sum, g_ext)?;
    let defect1 = residual(ci, sum, g_ext - 1)?;
    debug_assert_eq!(acm.d_res, 2);

    // Removing the second curve from the complete intersection leaves the
    // first curve together with the conic.
    let union = residual(ci, d2, 0)?;
    debug_assert_eq!(union.d_res, d1 + 2);

    Ok(OddDegreeObstruction {
        m,
        ci,
        b_minus_bg,
        residual_genus_acm: acm.g_res,
        residual_genus_defect1: defect1.g_res,
        union_genus: union.g_res,
    })
}
