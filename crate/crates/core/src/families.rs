//! Generators for the dense extremal constructions.
//!
//! Brick-chain families index their bricks `b = 0..beta`; brick `b` of the
//! `K_{3,3}` chain occupies indices `2b+1..=2b+3` on both layers and shares
//! its last corner with the next brick. Edges that would fall outside the
//! grid are omitted, never wrapped.

use std::fmt;
use std::str::FromStr;

use crate::drawing::{Drawing, Edge};
use crate::error::FamilyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Opt2Planar,
    Planar3,
    Planar4,
    Planar5,
    Planar6,
    GeneralK,
    SpecialS,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Opt2Planar,
        Family::Planar3,
        Family::Planar4,
        Family::Planar5,
        Family::Planar6,
        Family::GeneralK,
        Family::SpecialS,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Opt2Planar => "opt2planar",
            Family::Planar3 => "planar3",
            Family::Planar4 => "planar4",
            Family::Planar5 => "planar5",
            Family::Planar6 => "planar6",
            Family::GeneralK => "general_k",
            Family::SpecialS => "special_s",
        }
    }

    /// Smallest accepted size parameter.
    pub fn min_size(self) -> usize {
        match self {
            Family::Planar3 => 3,
            Family::Planar5 | Family::Planar6 => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        Family::ALL.into_iter().find(|f| f.name() == key).ok_or_else(|| FamilyError::Unknown(s.to_string()))
    }
}

/// A family together with its size parameter (`beta` for brick chains,
/// `p` for the band families) and, for `general_k`, the target `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub size: usize,
    pub k: Option<u32>,
}

impl FamilySpec {
    pub fn new(family: Family, size: usize) -> Self {
        FamilySpec { family, size, k: None }
    }

    pub fn general_k(p: usize, k: u32) -> Self {
        FamilySpec { family: Family::GeneralK, size: p, k: Some(k) }
    }

    pub fn build(&self) -> Result<Drawing, FamilyError> {
        match self.family {
            Family::Opt2Planar => opt2planar(self.size),
            Family::Planar3 => planar3_family(self.size),
            Family::Planar4 => planar4_family(self.size),
            Family::Planar5 => planar5_family(self.size),
            Family::Planar6 => planar6_family(self.size),
            Family::GeneralK => general_k_family(self.size, self.k.unwrap_or(0)),
            Family::SpecialS => Ok(special_s()),
        }
    }

    /// The k for which the construction is k-planar.
    pub fn advertised_k(&self) -> usize {
        match self.family {
            Family::Opt2Planar => 2,
            Family::Planar3 => 3,
            Family::Planar4 => 4,
            Family::Planar5 | Family::SpecialS => 5,
            Family::Planar6 => 6,
            Family::GeneralK => self.k.unwrap_or(0) as usize,
        }
    }

    /// Closed-form `(n, m)` of the construction.
    pub fn expected_counts(&self) -> (usize, usize) {
        let s = self.size;
        match self.family {
            Family::Opt2Planar => (3 * s + 2, 5 * s + 1),
            Family::Planar3 => (2 * s, 4 * s - 4),
            Family::Planar4 => (4 * s + 2, 8 * s + 1),
            Family::Planar5 => (4 * s + 2, 9 * s),
            Family::Planar6 => (4 * s + 2, 10 * s - 1),
            Family::GeneralK => {
                let ell = band_width(self.k.unwrap_or(0));
                (2 * s, 2 * (ell * s - ell * (ell + 1) / 2))
            }
            Family::SpecialS => (8, 14),
        }
    }
}

fn check_size(family: Family, size: usize) -> Result<(), FamilyError> {
    if size < family.min_size() {
        return Err(FamilyError::TooSmall { family: family.name(), min: family.min_size(), got: size });
    }
    Ok(())
}

fn build(p: usize, q: usize, edges: Vec<Edge>) -> Drawing {
    Drawing::new(p, q, edges).expect("generator emits a valid drawing")
}

/// Chain of `beta` copies of `K_{2,3}`, consecutive copies sharing a
/// planar edge. Brick `b` uses `u_{b+1}, u_{b+2}` and `v_{2b+1}..v_{2b+3}`.
pub fn opt2planar(beta: usize) -> Result<Drawing, FamilyError> {
    check_size(Family::Opt2Planar, beta)?;
    let mut edges = Vec::with_capacity(5 * beta + 1);
    for b in 0..beta {
        for top in [b + 1, b + 2] {
            for bottom in 2 * b + 1..=2 * b + 3 {
                let e = Edge::new(top, bottom);
                // the left corner was already added by the previous brick
                if !(b > 0 && e == Edge::new(b + 1, 2 * b + 1)) {
                    edges.push(e);
                }
            }
        }
    }
    Ok(build(beta + 1, 2 * beta + 1, edges))
}

/// `p = q` band: `(u_i, v_i)`, `(u_i, v_{i+1})`, `(u_i, v_{i-1})` and
/// `(u_i, v_{i+2})`, clipped to the grid.
pub fn planar3_family(p: usize) -> Result<Drawing, FamilyError> {
    check_size(Family::Planar3, p)?;
    let mut edges = Vec::with_capacity(4 * p);
    for i in 1..=p {
        edges.push(Edge::new(i, i));
        if i < p {
            edges.push(Edge::new(i, i + 1));
        }
        if i >= 2 {
            edges.push(Edge::new(i, i - 1));
        }
        if i + 2 <= p {
            edges.push(Edge::new(i, i + 2));
        }
    }
    Ok(build(p, p, edges))
}

fn k33_chain(beta: usize) -> Vec<Edge> {
    let mut edges = Vec::with_capacity(8 * beta + 1);
    for b in 0..beta {
        let first = 2 * b + 1;
        for top in first..first + 3 {
            for bottom in first..first + 3 {
                if !(b > 0 && top == first && bottom == first) {
                    edges.push(Edge::new(top, bottom));
                }
            }
        }
    }
    edges
}

/// Middle index of brick `b` in the `K_{3,3}` chain.
fn brick_middle(b: usize) -> usize {
    2 * b + 2
}

/// Zig-zag path through the brick middles, `beta - 1` edges. With
/// `starts_on_top` it reads `u_mid(0), v_mid(1), u_mid(2), ...`; otherwise
/// the layers are exchanged.
fn middle_path(beta: usize, starts_on_top: bool) -> impl Iterator<Item = Edge> {
    (0..beta.saturating_sub(1)).map(move |b| {
        let (left, right) = (brick_middle(b), brick_middle(b + 1));
        if (b % 2 == 0) == starts_on_top {
            Edge::new(left, right)
        } else {
            Edge::new(right, left)
        }
    })
}

/// Chain of `beta` copies of `K_{3,3}` sharing planar corner edges.
pub fn planar4_family(beta: usize) -> Result<Drawing, FamilyError> {
    check_size(Family::Planar4, beta)?;
    let side = 2 * beta + 1;
    Ok(build(side, side, k33_chain(beta)))
}

/// The `K_{3,3}` chain plus one zig-zag path through the brick middles.
/// Each path edge crosses the shared corner edge and five edges in total;
/// every brick corner edge picks up at most one extra crossing.
pub fn planar5_family(beta: usize) -> Result<Drawing, FamilyError> {
    check_size(Family::Planar5, beta)?;
    let side = 2 * beta + 1;
    let mut edges = k33_chain(beta);
    edges.extend(middle_path(beta, true));
    Ok(build(side, side, edges))
}

/// The 5-planar construction plus the mirrored zig-zag path. The two paths
/// cross once per brick boundary.
pub fn planar6_family(beta: usize) -> Result<Drawing, FamilyError> {
    check_size(Family::Planar6, beta)?;
    let side = 2 * beta + 1;
    let mut edges = k33_chain(beta);
    edges.extend(middle_path(beta, true));
    edges.extend(middle_path(beta, false));
    Ok(build(side, side, edges))
}

/// Largest `l` with `2 l^2 <= k`, i.e. `floor(sqrt(k / 2))`.
pub fn band_width(k: u32) -> usize {
    let k = k as usize;
    let mut ell = ((k as f64 / 2.0).sqrt()) as usize;
    while 2 * (ell + 1) * (ell + 1) <= k {
        ell += 1;
    }
    while ell > 0 && 2 * ell * ell > k {
        ell -= 1;
    }
    ell
}

/// `p = q` band where `u_i` sees `v_{i+1..=i+l}` and `v_i` sees
/// `u_{i+1..=i+l}`, with `l = floor(sqrt(k/2))`.
pub fn general_k_family(p: usize, k: u32) -> Result<Drawing, FamilyError> {
    if k < 2 {
        return Err(FamilyError::KTooSmall(k));
    }
    let ell = band_width(k);
    if p <= ell {
        return Err(FamilyError::BandTooWide { p, ell, k });
    }
    let mut edges = Vec::with_capacity(2 * ell * p);
    for i in 1..=p {
        for j in i + 1..=(i + ell).min(p) {
            edges.push(Edge::new(i, j));
            edges.push(Edge::new(j, i));
        }
    }
    Ok(build(p, p, edges))
}

/// Edges of the exceptional 8-vertex 5-planar drawing: the complete
/// `4 x 4` grid without its two long diagonals `(u_1,v_4)` and `(u_4,v_1)`.
/// Recovered as the unique 14-edge optimum of the exhaustive search at
/// `n = 8, k = 5` on the `4 x 4` split.
pub const SPECIAL_S_EDGES: [(usize, usize); 14] =
    [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (3, 4), (4, 2), (4, 3), (4, 4)];

pub fn special_s() -> Drawing {
    build(4, 4, SPECIAL_S_EDGES.iter().map(|&e| e.into()).collect())
}
