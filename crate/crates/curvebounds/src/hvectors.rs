//! H-vectors of point sets in projective 3-space.
//!
//! An h-vector here is a finite vector of positive integers `(h_0, ..., h_r)`;
//! for a set of points it starts with `h_0 = 1`, its sum is the degree (the
//! number of points), and its partial sums form the Hilbert function. The
//! genus of a curve whose general hyperplane section has h-vector `h` is
//! determined by `h` together with a nonnegative defect `k`, with `k = 0`
//! exactly in the arithmetically Cohen-Macaulay case:
//!
//! `genus = sum over i >= 1 of (degree - H(i)) - k`.
//!
//! Macaulay's growth theorem caps `h_{t+1}` in terms of `h_t` and `t`
//! ([`macaulay_next_max`]); a vector respecting the cap everywhere is an
//! O-sequence. On top of that sit eight admissibility rules (R1 to R8)
//! cutting the O-sequences down to those that occur as general hyperplane
//! sections of irreducible nondegenerate curves not lying on a cubic surface.
//! [`enumerate_admissible`] lists every admissible vector of a given degree,
//! and [`extremal_hvector`] is the one attaining the maximum genus.

use serde::Serialize;

use crate::error::{Error, Result};

/// Environment variable overriding the enumeration degree cap.
pub const MAX_ENUM_ENV: &str = "CURVEBOUNDS_MAX_ENUM";

/// Default upper bound on the degree accepted by [`enumerate_admissible`].
pub const DEFAULT_ENUM_CAP: i64 = 120;

// ---- Binomial helpers ----

/// Binomial coefficient `C(n, k)` as an exact `i64`.
///
/// Callers keep `n` small enough that the product fits; the intermediate
/// arithmetic runs in `i128` and the final narrowing is checked.
fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 1..=k {
        acc = acc * (n - k + i) as i128 / i as i128;
    }
    i64::try_from(acc).expect("binomial coefficient overflows i64")
}

/// Binomial coefficient `C(n, k)`, saturating at `cap + 1`.
fn binom_capped(n: i64, k: i64, cap: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 1..=k {
        acc = acc * (n - k + i) as i128 / i as i128;
        if acc > cap as i128 {
            return cap + 1;
        }
    }
    acc as i64
}

// ---- Macaulay growth ----

/// Maximum value Macaulay's theorem allows in degree `degree + 1` after the
/// value `value` in degree `degree`.
///
/// Writes `value` in its binomial representation in degree `degree` and bumps
/// every binomial. Requires `value >= 1` and `degree >= 1`. For
/// `value <= degree` the bound equals `value`.
pub fn macaulay_next_max(value: i64, degree: i64) -> Result<i64> {
    if value < 1 {
        return Err(Error::BelowMinimum {
            name: "value",
            min: 1,
            got: value,
        });
    }
    if degree < 1 {
        return Err(Error::BelowMinimum {
            name: "degree",
            min: 1,
            got: degree,
        });
    }
    let mut rem = value;
    let mut d = degree;
    let mut bound = 0i64;
    while rem > 0 {
        debug_assert!(d >= 1, "binomial representation descended past degree 1");
        // Largest k with C(k, d) <= rem.
        let mut k = d;
        while binom_capped(k + 1, d, rem) <= rem {
            k += 1;
        }
        bound += binom(k + 1, d + 1);
        rem -= binom(k, d);
        d -= 1;
    }
    Ok(bound)
}

// ---- H-vectors ----

/// A finite vector of positive integers indexed from degree 0.
///
/// Ordering is lexicographic on the entries.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct HVector(Vec<i64>);

impl HVector {
    /// Builds an h-vector, rejecting empty input and nonpositive entries.
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidHVector("empty vector".into()));
        }
        if let Some(bad) = entries.iter().find(|&&e| e < 1) {
            return Err(Error::InvalidHVector(format!(
                "entries must be positive, found {bad}"
            )));
        }
        Ok(Self(entries))
    }

    /// Parses the comma-separated literal used on the command line.
    ///
    /// Digits and commas only, no spaces, and the leading entry must be 1.
    pub fn parse(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::InvalidHVector("empty literal".into()));
        }
        if let Some(bad) = text.chars().find(|c| !c.is_ascii_digit() && *c != ',') {
            return Err(Error::InvalidHVector(format!(
                "unexpected character {bad:?}, expected digits and commas"
            )));
        }
        let mut entries = Vec::new();
        for piece in text.split(',') {
            if piece.is_empty() {
                return Err(Error::InvalidHVector("empty entry".into()));
            }
            let value: i64 = piece
                .parse()
                .map_err(|_| Error::InvalidHVector(format!("entry {piece} out of range")))?;
            entries.push(value);
        }
        if entries[0] != 1 {
            return Err(Error::InvalidHVector(format!(
                "must start with 1, got {}",
                entries[0]
            )));
        }
        Self::new(entries)
    }

    /// The entries, starting at degree 0.
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Sum of the entries.
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// The last degree with a nonzero entry.
    pub fn socle_degree(&self) -> usize {
        self.0.len() - 1
    }
}

impl std::fmt::Display for HVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for e in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

/// True when `h` starts with 1 and respects Macaulay growth at every step.
pub fn is_o_sequence(h: &HVector) -> bool {
    let e = h.entries();
    if e[0] != 1 {
        return false;
    }
    for t in 1..e.len() - 1 {
        let bound = macaulay_next_max(e[t], t as i64).expect("entries are positive");
        if e[t + 1] > bound {
            return false;
        }
    }
    true
}

// ---- Hilbert functions ----

/// A nondecreasing integer function that stabilizes, stored as the prefix of
/// values up to stabilization plus the stable value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertFunction {
    prefix: Vec<i64>,
    stable: i64,
}

impl HilbertFunction {
    /// Value at degree `t`; the stable value for `t` past the prefix.
    pub fn value_at(&self, t: usize) -> i64 {
        self.prefix.get(t).copied().unwrap_or(self.stable)
    }

    /// Values up to and including the stabilization degree.
    pub fn prefix(&self) -> &[i64] {
        &self.prefix
    }

    /// The eventual constant value.
    pub fn stable(&self) -> i64 {
        self.stable
    }

    /// First difference, recovering the h-vector that integrates to `self`.
    pub fn difference(&self) -> HVector {
        let mut entries = Vec::with_capacity(self.prefix.len());
        let mut prev = 0;
        for &v in &self.prefix {
            entries.push(v - prev);
            prev = v;
        }
        HVector::new(entries).expect("differences of a strictly increasing prefix are positive")
    }
}

impl std::fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("(")?;
        let mut first = true;
        for v in &self.prefix {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        write!(f, "; stable {})", self.stable)
    }
}

/// Partial sums of `h`: the Hilbert function of a point set with h-vector `h`.
///
/// The stable value is the degree of `h`.
pub fn integrate(h: &HVector) -> HilbertFunction {
    let mut prefix = Vec::with_capacity(h.entries().len());
    let mut acc = 0;
    for &e in h.entries() {
        acc += e;
        prefix.push(acc);
    }
    HilbertFunction {
        prefix,
        stable: acc,
    }
}

// ---- Genus ----

/// Genus of an arithmetically Cohen-Macaulay curve whose general hyperplane
/// section has h-vector `h`:
/// `sum over i >= 1 of (degree - H(i))`.
pub fn genus_of_hvector(h: &HVector) -> i64 {
    let d = h.degree();
    let hilbert = integrate(h);
    hilbert
        .prefix()
        .iter()
        .skip(1)
        .map(|&v| d - v)
        .sum()
}

/// H-vector, defect, and resulting genus of one curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusProfile {
    /// H-vector of the general hyperplane section.
    pub hvector: HVector,
    /// Deficiency subtracted from the arithmetically Cohen-Macaulay genus;
    /// zero exactly in the arithmetically Cohen-Macaulay case.
    pub rao_defect: i64,
    /// The genus.
    pub genus: i64,
}

impl GenusProfile {
    /// True when the defect vanishes.
    pub fn is_acm(&self) -> bool {
        self.rao_defect == 0
    }
}

/// Genus of a curve with hyperplane-section h-vector `h` and defect `k >= 0`.
pub fn genus_with_defect(h: &HVector, k: i64) -> Result<GenusProfile> {
    if k < 0 {
        return Err(Error::BelowMinimum {
            name: "defect",
            min: 0,
            got: k,
        });
    }
    Ok(GenusProfile {
        genus: genus_of_hvector(h) - k,
        hvector: h.clone(),
        rao_defect: k,
    })
}

/// Genus of the arithmetically Cohen-Macaulay curve with h-vector
/// `(1, 3, 4, ..., 4, a, b)` (`m` fours), in closed form:
/// `(m+2) b + (m+1) a + 4 C(m+1, 2)`.
///
/// Valid only for the tails `(a, b)` in `{(1,0), (2,0), (3,0), (3,1)}`, where
/// `b = 0` means the vector ends at `a`. Requires `m >= 0`.
pub fn acm_genus_closed_form(m: i64, a: i64, b: i64) -> Result<i64> {
    if m < 0 {
        return Err(Error::BelowMinimum {
            name: "m",
            min: 0,
            got: m,
        });
    }
    if !matches!((a, b), (1, 0) | (2, 0) | (3, 0) | (3, 1)) {
        return Err(Error::Hypothesis(format!(
            "closed form only covers tails (1,0), (2,0), (3,0), (3,1), got ({a},{b})"
        )));
    }
    Ok((m + 2) * b + (m + 1) * a + 4 * binom(m + 1, 2))
}

// ---- Admissibility ----

/// Identifier of one admissibility rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RuleId {
    /// `h_0 = 1`.
    R1,
    /// Macaulay growth at every step.
    R2,
    /// `h_1 = 3`.
    R3,
    /// `h_2 >= 4`.
    R4,
    /// For socle degree `r >= 4`: `h_k >= 4` for `2 <= k <= r-2`, and
    /// `h_{r-1} >= 3`.
    R5,
    /// Caps after degree 2: `h_2 = 4` forces `h_3 <= 4`; for `r = 3`,
    /// `h_2 = 5` forces `h_3 <= 7` and `h_2 = 6` forces `h_3 <= 10`.
    R6,
    /// The tail `(h_{r-1}, h_r) = (3, 2)` is excluded.
    R7,
    /// No two consecutive equal entries at most 3 from degree 2 on.
    R8,
}

impl std::fmt::Display for RuleId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// One violated rule with a human-readable location.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleViolation {
    /// Which rule failed.
    pub rule: RuleId,
    /// Where and how it failed.
    pub detail: String,
}

fn violations(h: &HVector) -> Vec<RuleViolation> {
    let e = h.entries();
    let r = h.socle_degree();
    let mut out = Vec::new();
    let mut fail = |rule: RuleId, detail: String| out.push(RuleViolation { rule, detail });

    if e[0] != 1 {
        fail(RuleId::R1, format!("h_0 = {}, expected 1", e[0]));
    }
    for t in 1..e.len() - 1 {
        let bound = macaulay_next_max(e[t], t as i64).expect("entries are positive");
        if e[t + 1] > bound {
            fail(
                RuleId::R2,
                format!(
                    "h_{} = {} exceeds Macaulay growth {} after h_{} = {}",
                    t + 1,
                    e[t + 1],
                    bound,
                    t,
                    e[t]
                ),
            );
        }
    }
    if r < 1 {
        fail(RuleId::R3, "vector has no degree-1 entry".into());
    } else if e[1] != 3 {
        fail(RuleId::R3, format!("h_1 = {}, expected 3", e[1]));
    }
    if r >= 2 && e[2] < 4 {
        fail(RuleId::R4, format!("h_2 = {}, expected at least 4", e[2]));
    }
    if r >= 4 {
        for k in 2..=r - 2 {
            if e[k] < 4 {
                fail(
                    RuleId::R5,
                    format!("h_{k} = {} below 4 in the middle range", e[k]),
                );
            }
        }
        if e[r - 1] < 3 {
            fail(
                RuleId::R5,
                format!("h_{} = {} below 3 before the socle", r - 1, e[r - 1]),
            );
        }
    }
    if r >= 3 {
        if e[2] == 4 && e[3] > 4 {
            fail(
                RuleId::R6,
                format!("h_2 = 4 caps h_3 at 4, got {}", e[3]),
            );
        }
        if r == 3 {
            if e[2] == 5 && e[3] > 7 {
                fail(
                    RuleId::R6,
                    format!("h_2 = 5 caps h_3 at 7, got {}", e[3]),
                );
            }
            if e[2] == 6 && e[3] > 10 {
                fail(
                    RuleId::R6,
                    format!("h_2 = 6 caps h_3 at 10, got {}", e[3]),
                );
            }
        }
    }
    if r >= 1 && e[r - 1] == 3 && e[r] == 2 {
        fail(RuleId::R7, "tail (3, 2) is excluded".into());
    }
    for i in 2..r {
        if e[i] == e[i + 1] && e[i] <= 3 {
            fail(
                RuleId::R8,
                format!("h_{} = h_{} = {} repeats a value at most 3", i, i + 1, e[i]),
            );
        }
    }
    out
}

/// Checks the eight admissibility rules, reporting every violation.
///
/// Requires `degree(h) >= 9`; below that the rule system does not apply.
pub fn is_admissible(h: &HVector) -> Result<(bool, Vec<RuleViolation>)> {
    let d = h.degree();
    if d < 9 {
        return Err(Error::BelowMinimum {
            name: "degree(h)",
            min: 9,
            got: d,
        });
    }
    let v = violations(h);
    Ok((v.is_empty(), v))
}

// ---- Enumeration ----

/// Degree cap currently in force for [`enumerate_admissible`]: the value of
/// the `CURVEBOUNDS_MAX_ENUM` environment variable when it parses as a
/// positive integer, else [`DEFAULT_ENUM_CAP`].
pub fn enumeration_cap() -> i64 {
    std::env::var(MAX_ENUM_ENV)
        .ok()
        .and_then(|v| v.parse::<i64>().ok())
        .filter(|&v| v >= 9)
        .unwrap_or(DEFAULT_ENUM_CAP)
}

/// Every admissible h-vector of degree `d`, in lexicographic order.
///
/// Requires `9 <= d <= enumeration_cap()`. The search fixes the forced prefix
/// `(1, 3)` and extends it depth-first; Macaulay growth and the structural
/// rules prune branches, and every emitted vector passes the full
/// [`is_admissible`] check.
pub fn enumerate_admissible(d: i64) -> Result<Vec<HVector>> {
    let cap = enumeration_cap();
    if !(9..=cap).contains(&d) {
        return Err(Error::EnumerationRange { d, min: 9, max: cap });
    }
    let mut out = Vec::new();
    let mut prefix = vec![1i64, 3];
    extend(&mut prefix, d - 4, &mut out);
    out.sort();
    Ok(out)
}

/// Pushes the candidate in `prefix` to `out` if it passes the full rule check.
fn emit(prefix: &[i64], out: &mut Vec<HVector>) {
    let hv = HVector::new(prefix.to_vec()).expect("search entries are positive");
    let (ok, _) = is_admissible(&hv).expect("search is only run for degree >= 9");
    if ok {
        out.push(hv);
    }
}

/// Depth-first extension of `prefix` by entries summing to `remaining`.
///
/// Entries that keep the vector going must be at least 3 (a middle entry
/// below 4 or a next-to-last below 3 violates R5), and after a 3 the vector
/// must close (a 3 can only sit next to the socle).
fn extend(prefix: &mut Vec<i64>, remaining: i64, out: &mut Vec<HVector>) {
    let i = prefix.len();
    let prev = prefix[i - 1];
    let bound = macaulay_next_max(prev, (i - 1) as i64).expect("entries are positive");
    for a in 1..=bound.min(remaining) {
        let rest = remaining - a;
        if rest == 0 {
            prefix.push(a);
            emit(prefix, out);
            prefix.pop();
        } else if a == 3 {
            let next_bound = macaulay_next_max(3, i as i64).expect("value 3 is positive");
            if rest <= next_bound {
                prefix.push(3);
                prefix.push(rest);
                emit(prefix, out);
                prefix.pop();
                prefix.pop();
            }
        } else if a >= 4 {
            prefix.push(a);
            extend(prefix, rest, out);
            prefix.pop();
        }
    }
}

// ---- Extremal vectors ----

/// The admissible h-vector of degree `d` with maximum genus.
///
/// Writing `d = 4m + 4 + p` with `p` in `1..=4`: the vector is
/// `(1, 3, 4, ..., 4, p)` with `m` fours for `p <= 3`, and
/// `(1, 3, 4, ..., 4, 3, 1)` with `m` fours for `p = 4`. Requires `d >= 5`.
pub fn extremal_hvector(d: i64) -> Result<HVector> {
    if d < 5 {
        return Err(Error::BelowMinimum {
            name: "d",
            min: 5,
            got: d,
        });
    }
    let p = (d - 1).rem_euclid(4) + 1;
    let mut entries = vec![1, 3];
    if p == 4 {
        let m = (d - 8) / 4;
        entries.extend(std::iter::repeat(4).take(m as usize));
        entries.push(3);
        entries.push(1);
    } else {
        let m = (d - 4 - p) / 4;
        entries.extend(std::iter::repeat(4).take(m as usize));
        entries.push(p);
    }
    HVector::new(entries)
}

/// Maximum genus over all admissible h-vectors of degree `d`, found by
/// exhaustive enumeration. Ties go to the lexicographically smallest vector.
///
/// Same domain as [`enumerate_admissible`].
pub fn max_genus_bruteforce(d: i64) -> Result<(HVector, i64)> {
    let all = enumerate_admissible(d)?;
    let mut best: Option<(HVector, i64)> = None;
    for hv in all {
        let g = genus_of_hvector(&hv);
        match &best {
            Some((_, bg)) if *bg >= g => {}
            _ => best = Some((hv, g)),
        }
    }
    best.ok_or_else(|| Error::Hypothesis(format!("no admissible h-vector of degree {d}")))
}

/// Upper bound on intersection points of two curves on a common
/// arithmetically Cohen-Macaulay union: `g - g1 - g2 + 1`.
pub fn rosa_bound(g: i64, g1: i64, g2: i64) -> i64 {
    g - g1 - g2 + 1
}
