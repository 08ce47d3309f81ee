//! King stability for thin representations, genericity, the star criterion
//! and the chamber decomposition of the space of stability parameters.

use crate::error::{Error, Result};
use crate::rep::Representation;
use std::collections::BTreeMap;

/// An integer weight per vertex, in quiver vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Theta(pub Vec<i64>);

impl Theta {
    /// θ = (−n, 1, …, 1) with the negative weight at `star`, where n+1 is
    /// the number of vertices.
    pub fn star(num_vertices: usize, star: usize) -> Self {
        let mut v = vec![1; num_vertices];
        v[star] = -(num_vertices as i64 - 1);
        Theta(v)
    }

    pub fn value(&self, beta: &[usize]) -> i64 {
        theta_value(self, beta)
    }

    /// θ(S) for a vertex subset.
    pub fn on_subset(&self, set: &[usize]) -> i64 {
        set.iter().map(|&i| self.0[i]).sum()
    }
}

/// Σ θᵢ βᵢ.
pub fn theta_value(theta: &Theta, beta: &[usize]) -> i64 {
    theta.0.iter().zip(beta).map(|(t, &b)| t * b as i64).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stability {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl std::fmt::Display for Stability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Stability::Stable => "stable",
            Stability::StrictlySemistable => "strictly_semistable",
            Stability::Unstable => "unstable",
        })
    }
}

fn check_theta(theta: &Theta, dims: &[usize]) -> Result<()> {
    if theta.0.len() != dims.len() {
        return Err(Error::InvalidInput(format!(
            "theta has {} entries, expected {}",
            theta.0.len(),
            dims.len()
        )));
    }
    let v = theta_value(theta, dims);
    if v != 0 {
        return Err(Error::ThetaNotBalanced(v));
    }
    Ok(())
}

/// Classifies a thin representation by testing θ on its closed subsets.
pub fn classify(rep: &Representation, theta: &Theta) -> Result<Stability> {
    check_theta(theta, rep.dims())?;
    let support: usize = rep.dims().iter().sum();
    let mut zero_seen = false;
    for s in rep.closed_subsets()? {
        if s.is_empty() || s.len() == support {
            continue;
        }
        let v = theta.on_subset(&s);
        if v < 0 {
            return Ok(Stability::Unstable);
        }
        if v == 0 {
            zero_seen = true;
        }
    }
    Ok(if zero_seen {
        Stability::StrictlySemistable
    } else {
        Stability::Stable
    })
}

/// True iff every vertex is reachable from `star` along nonzero arrows.
pub fn star_criterion(rep: &Representation, star: &str) -> Result<bool> {
    let q = rep.quiver();
    let s = q.vertex(star)?;
    if rep.dims().iter().any(|&d| d != 1) {
        return Err(Error::Regime(
            "star criterion needs dimension vector (1,…,1)".into(),
        ));
    }
    let mut seen = vec![false; q.num_vertices()];
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(v) = stack.pop() {
        for a in 0..q.num_arrows() {
            if q.tail(a) == v && rep.arrow_is_nonzero(a) && !seen[q.head(a)] {
                seen[q.head(a)] = true;
                stack.push(q.head(a));
            }
        }
    }
    Ok(seen.iter().all(|&b| b))
}

/// θ(S) ≠ 0 for every proper nonempty subset S of the vertices.
pub fn is_generic(theta: &Theta, dims: &[usize]) -> Result<bool> {
    if dims.iter().any(|&d| d != 1) {
        return Err(Error::Regime(
            "genericity is decided for dimension vector (1,…,1)".into(),
        ));
    }
    check_theta(theta, dims)?;
    let n = dims.len();
    if n > 24 {
        return Err(Error::Regime("too many vertices".into()));
    }
    Ok((1u64..(1u64 << n) - 1).all(|mask| subset_sum(&theta.0, mask) != 0))
}

fn subset_sum(theta: &[i64], mask: u64) -> i64 {
    theta
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, t)| t)
        .sum()
}

fn mask_to_set(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}

/// One open chamber of generic stability parameters.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Chamber {
    /// `(S, sign of θ(S))` for every proper nonempty subset S.
    pub conditions: Vec<(Vec<usize>, i8)>,
    /// Smallest-norm integer point of the chamber, ties broken lexicographically.
    pub representative: Vec<i64>,
}

impl Chamber {
    pub fn contains(&self, theta: &Theta) -> bool {
        self.conditions
            .iter()
            .all(|(s, sign)| theta.on_subset(s).signum() as i8 == *sign)
    }
}

/// Number of regions of the arrangement {θ(S) = 0} inside {Σθ = 0}, via
/// Zaslavsky's theorem; the characteristic polynomial is recovered by
/// counting points over prime fields and interpolating.
pub fn chamber_count(n: usize) -> u64 {
    if n <= 1 {
        return 1;
    }
    let d = n - 1;
    // 0/1 matrices of size ≤ 5 have |minors| ≤ 5, so primes ≥ 7 give good reduction.
    let primes: Vec<i64> = [7i64, 11, 13, 17, 19, 23, 29, 31]
        .into_iter()
        .take(d + 1)
        .collect();
    let values: Vec<i128> = primes
        .iter()
        .map(|&p| count_complement(d, p) as i128)
        .collect();
    // Lagrange interpolation at t = −1 over the rationals.
    let mut num_total = num_rational::Ratio::<i128>::from_integer(0);
    for (i, &pi) in primes.iter().enumerate() {
        let mut term = num_rational::Ratio::<i128>::from_integer(values[i]);
        for (j, &pj) in primes.iter().enumerate() {
            if i != j {
                term *= num_rational::Ratio::new((-1 - pj) as i128, (pi - pj) as i128);
            }
        }
        num_total += term;
    }
    assert!(
        num_total.is_integer(),
        "characteristic polynomial must be integral"
    );
    let chi = num_total.to_integer();
    let regions = if d.is_multiple_of(2) { chi } else { -chi };
    regions as u64
}

/// Points of F_p^d (coordinates θ₁…θ_d, with θ_{d+1} = −Σ) avoiding every wall.
fn count_complement(d: usize, p: i64) -> u64 {
    // `sums` holds the subset sums of the coordinates chosen so far,
    // starting with 0 for the empty subset.
    fn rec(k: usize, d: usize, p: i64, sums: &mut Vec<i64>) -> u64 {
        if k == d {
            return 1;
        }
        let old = sums.len();
        let mut total = 0;
        for x in 0..p {
            let mut ok = true;
            for i in 0..old {
                let s = (sums[i] + x) % p;
                if s == 0 {
                    ok = false;
                    break;
                }
                sums.push(s);
            }
            if ok {
                total += rec(k + 1, d, p, sums);
            }
            sums.truncate(old);
        }
        total
    }
    rec(0, d, p, &mut vec![0])
}

/// Enumerates the chambers for `n` vertices with α = (1,…,1), `n ≤ 6`.
///
/// Integer points are searched in growing boxes until the number of sign
/// patterns found matches [`chamber_count`] and the box is large enough to
/// certify that each representative has minimal norm.
pub fn chambers(n: usize) -> Result<Vec<Chamber>> {
    if n == 0 || n > 6 {
        return Err(Error::Regime(
            "chambers are enumerated for 1 to 6 vertices".into(),
        ));
    }
    if n == 1 {
        return Ok(vec![Chamber {
            conditions: Vec::new(),
            representative: vec![0],
        }]);
    }
    let target = chamber_count(n) as usize;
    let d = n - 1;
    let subsets: Vec<u64> = (1u64..(1u64 << n) - 1).collect();
    let mut best: BTreeMap<Vec<i8>, (i64, Vec<i64>)> = BTreeMap::new();
    let mut searched: i64 = 0;
    let mut bound: i64 = 1;
    loop {
        // visit points of the box [−bound, bound]^d not already visited
        let mut point = vec![-bound; d];
        loop {
            if point.iter().any(|x| x.abs() > searched) {
                let mut theta = point.clone();
                theta.push(-point.iter().sum::<i64>());
                let signs: Vec<i8> = subsets
                    .iter()
                    .map(|&m| subset_sum(&theta, m).signum() as i8)
                    .collect();
                if signs.iter().all(|&s| s != 0) {
                    let norm: i64 = theta.iter().map(|x| x * x).sum();
                    let entry = best.entry(signs).or_insert((norm, theta.clone()));
                    if (norm, &theta) < (entry.0, &entry.1) {
                        *entry = (norm, theta);
                    }
                }
            }
            // odometer increment
            let mut k = 0;
            while k < d {
                point[k] += 1;
                if point[k] <= bound {
                    break;
                }
                point[k] = -bound;
                k += 1;
            }
            if k == d {
                break;
            }
        }
        searched = bound;
        let max_norm = best.values().map(|(n, _)| *n).max().unwrap_or(0);
        if best.len() == target && bound * bound >= max_norm {
            break;
        }
        bound += 1;
    }
    let mut out: Vec<Chamber> = best
        .into_iter()
        .map(|(signs, (_, rep))| Chamber {
            conditions: subsets
                .iter()
                .zip(signs)
                .map(|(&m, s)| (mask_to_set(m, n), s))
                .collect(),
            representative: rep,
        })
        .collect();
    out.sort_by(|a, b| {
        let na: i64 = a.representative.iter().map(|x| x * x).sum();
        let nb: i64 = b.representative.iter().map(|x| x * x).sum();
        (na, &a.representative).cmp(&(nb, &b.representative))
    });
    Ok(out)
}

/// A cone of the planar fan for three vertices, in coordinates (θ₂, θ₃).
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct FanCone {
    pub chamber: usize,
    pub rays: [(i64, i64); 2],
}

/// The chamber decomposition for three vertices drawn in the (θ₂, θ₃) plane
/// (θ₁ = −θ₂ − θ₃). Cones are listed counterclockwise from the positive θ₂ axis.
pub fn fan_2d(chambers: &[Chamber]) -> Result<Vec<FanCone>> {
    if chambers.first().is_none_or(|c| c.representative.len() != 3) {
        return Err(Error::Regime(
            "planar fan needs exactly three vertices".into(),
        ));
    }
    // walls θ₂ = 0, θ₃ = 0, θ₂ + θ₃ = 0 give these primitive rays
    let mut rays: Vec<(i64, i64)> = vec![(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];
    rays.sort_by(|a, b| {
        let ta = (a.1 as f64)
            .atan2(a.0 as f64)
            .rem_euclid(std::f64::consts::TAU);
        let tb = (b.1 as f64)
            .atan2(b.0 as f64)
            .rem_euclid(std::f64::consts::TAU);
        ta.total_cmp(&tb)
    });
    let mut out = Vec::new();
    for i in 0..rays.len() {
        let r1 = rays[i];
        let r2 = rays[(i + 1) % rays.len()];
        let (x, y) = (r1.0 + r2.0, r1.1 + r2.1);
        let theta = Theta(vec![-x - y, x, y]);
        let idx = chambers
            .iter()
            .position(|c| c.contains(&theta))
            .ok_or_else(|| Error::InvalidInput("chamber list does not cover the plane".into()))?;
        out.push(FanCone {
            chamber: idx,
            rays: [r1, r2],
        });
    }
    Ok(out)
}
