//! Exact extremal search over small 2-layer drawings.
//!
//! [`max_density`] finds the largest edge count of an `n`-vertex drawing
//! under a k-planarity or h-quasiplanarity constraint by branch and bound
//! over the cells of every `p x q` grid with `p + q = n`. Cells are decided
//! in edge order (row by row). Each node keeps three bit sets over the grid:
//! the chosen edges, the chosen edges that can take no further crossing, and
//! the undecided cells that could still be added. A cell that stops being
//! addable never becomes addable again, which gives the admissible bound
//! `edges + candidates`.
//!
//! Symmetry breaking:
//! - only splits with `p <= q` are searched (swapping layers keeps crossings);
//! - `(u_1, v_1)` and `(u_p, v_q)` cross nothing, so every maximum drawing
//!   contains both and they are fixed up front;
//! - reversing both layers, and for `p = q` transposing, maps solutions to
//!   solutions; of each orbit we keep one with `deg(u_1)` maximal, so
//!   `deg(u_p)`, and for `p = q` also `deg(v_1)` and `deg(v_q)`, are capped
//!   by `deg(u_1)` once the first row is complete.

mod graph;
mod minimax;
mod random;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::drawing::{Drawing, Edge};
use crate::error::SearchError;

pub use graph::AbstractBipartiteGraph;
pub use minimax::{minimax_k, MAX_MINIMAX_VERTICES};
pub use random::{random_connected_drawing, random_drawing, random_drawing_with, rng};

pub const MIN_SEARCH_N: usize = 2;
pub const MAX_SEARCH_N: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constraint {
    /// Every edge has at most `k` crossings.
    KPlanar(u32),
    /// No `h` edges pairwise cross.
    Quasiplanar(u32),
}

impl Constraint {
    pub fn admits(&self, d: &Drawing) -> bool {
        match *self {
            Constraint::KPlanar(k) => crate::crossing::is_k_planar(d, k as usize),
            Constraint::Quasiplanar(h) => crate::crossing::is_h_quasiplanar(d, h as usize),
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::KPlanar(k) => write!(f, "k={k}"),
            Constraint::Quasiplanar(h) => write!(f, "h={h}"),
        }
    }
}

impl FromStr for Constraint {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (key, value) = s.split_once('=').ok_or_else(|| format!("expected k=K or h=H, got `{s}`"))?;
        let value: u32 = value.trim().parse().map_err(|_| format!("bad number in `{s}`"))?;
        match key.trim() {
            "k" => Ok(Constraint::KPlanar(value)),
            "h" => Ok(Constraint::Quasiplanar(value)),
            _ => Err(format!("expected k=K or h=H, got `{s}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub n: usize,
    pub constraint: Constraint,
    pub best_m: usize,
    pub witness: Drawing,
    pub stats: SearchStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Worker threads; `1` runs the deterministic sequential search.
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { threads: 1 }
    }
}

/// Sequential [`max_density_with`].
pub fn max_density(n: usize, constraint: Constraint) -> Result<SearchResult, SearchError> {
    max_density_with(n, constraint, SearchOptions::default())
}

/// Exact maximum edge count over all `n`-vertex drawings meeting
/// `constraint`. `best_m` does not depend on the thread count; the witness
/// is the first optimum in sequential order only when `threads == 1`.
pub fn max_density_with(n: usize, constraint: Constraint, opts: SearchOptions) -> Result<SearchResult, SearchError> {
    if !(MIN_SEARCH_N..=MAX_SEARCH_N).contains(&n) {
        return Err(SearchError::VertexCount(n));
    }
    if let Constraint::Quasiplanar(h) = constraint {
        if h < 2 {
            return Err(SearchError::QuasiplanarH(h));
        }
    }
    let start = Instant::now();
    let grids: Vec<Grid> = (1..=n / 2).rev().map(|p| Grid::new(p, n - p, constraint)).collect();
    let shared = Shared::default();

    if opts.threads <= 1 {
        for (g, grid) in grids.iter().enumerate() {
            let mut nodes = 0;
            grid.solve(grid.root(), g, &shared, &mut nodes);
            shared.nodes.fetch_add(nodes, Ordering::Relaxed);
        }
    } else {
        let tasks: Vec<(usize, State)> = grids
            .iter()
            .enumerate()
            .flat_map(|(g, grid)| grid.frontier(SPLIT_DEPTH).into_iter().map(move |s| (g, s)))
            .collect();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.threads).build().expect("thread pool");
        pool.install(|| {
            tasks.par_iter().for_each(|&(g, state)| {
                let mut nodes = 0;
                grids[g].solve(state, g, &shared, &mut nodes);
                shared.nodes.fetch_add(nodes, Ordering::Relaxed);
            })
        });
    }

    let (g, edges) = shared.witness.into_inner().unwrap().expect("every grid has a feasible drawing");
    let witness = grids[g].drawing(edges);
    Ok(SearchResult {
        n,
        constraint,
        best_m: witness.m(),
        witness,
        stats: SearchStats { nodes: shared.nodes.into_inner(), elapsed: start.elapsed() },
    })
}

/// Decisions expanded sequentially before subtrees go to the thread pool.
const SPLIT_DEPTH: usize = 10;

#[derive(Default)]
struct Shared {
    best: AtomicU32,
    witness: Mutex<Option<(usize, u64)>>,
    nodes: AtomicU64,
}

impl Shared {
    fn offer(&self, grid: usize, edges: u64) {
        let m = edges.count_ones();
        let mut w = self.witness.lock().unwrap();
        if w.is_none() || m > self.best.load(Ordering::Relaxed) {
            *w = Some((grid, edges));
            self.best.store(m, Ordering::Relaxed);
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct State {
    edges: u64,
    /// Chosen edges already carrying `k` crossings (k-planar only).
    saturated: u64,
    /// Undecided cells that can still be added.
    candidates: u64,
    top_deg: [u8; 8],
    bottom_deg: [u8; 16],
}

struct Grid {
    p: usize,
    q: usize,
    constraint: Constraint,
    crosses: Vec<u64>,
    row_mask: Vec<u64>,
    col_mask: Vec<u64>,
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            b
        })
    })
}

impl Grid {
    fn new(p: usize, q: usize, constraint: Constraint) -> Self {
        debug_assert!(p <= 7 && q <= 13 && p * q <= 64);
        let cell = |c: usize| Edge::new(c / q + 1, c % q + 1);
        let crosses = (0..p * q)
            .map(|a| {
                (0..p * q).filter(|&b| crate::crossing::edges_cross(cell(a), cell(b))).fold(0u64, |acc, b| acc | 1 << b)
            })
            .collect();
        let row_mask = (0..=p)
            .map(|i| if i == 0 { 0 } else { (0..q).fold(0u64, |acc, x| acc | 1 << ((i - 1) * q + x)) })
            .collect();
        let col_mask =
            (0..=q).map(|x| if x == 0 { 0 } else { (0..p).fold(0u64, |acc, i| acc | 1 << (i * q + x - 1)) }).collect();
        Grid { p, q, constraint, crosses, row_mask, col_mask }
    }

    fn cell(&self, c: usize) -> (usize, usize) {
        (c / self.q + 1, c % self.q + 1)
    }

    fn drawing(&self, edges: u64) -> Drawing {
        Drawing::new(self.p, self.q, bits(edges).map(|c| self.cell(c))).expect("grid cells are valid")
    }

    fn root(&self) -> State {
        let all = if self.p * self.q == 64 { u64::MAX } else { (1u64 << (self.p * self.q)) - 1 };
        let mut state = State { edges: 0, saturated: 0, candidates: all, top_deg: [0; 8], bottom_deg: [0; 16] };
        let last = self.p * self.q - 1;
        state = self.include(state, 0);
        if last != 0 {
            state = self.include(state, last);
        }
        state
    }

    fn has_clique(&self, mask: u64, size: u32) -> bool {
        if size == 0 {
            return true;
        }
        if mask.count_ones() < size {
            return false;
        }
        bits(mask).any(|b| {
            let above = if b == 63 { 0 } else { !0u64 << (b + 1) };
            self.has_clique(mask & self.crosses[b] & above, size - 1)
        })
    }

    /// Adds cell `c` (assumed addable) and filters the candidates.
    fn include(&self, mut s: State, c: usize) -> State {
        let bit = 1u64 << c;
        let crossing = s.edges & self.crosses[c];
        s.edges |= bit;
        s.candidates &= !bit;
        let (i, x) = self.cell(c);
        s.top_deg[i] += 1;
        s.bottom_deg[x] += 1;

        match self.constraint {
            Constraint::KPlanar(k) => {
                let mut newly = 0u64;
                if crossing.count_ones() >= k {
                    newly |= bit;
                }
                for e in bits(crossing) {
                    if (s.edges & self.crosses[e]).count_ones() >= k {
                        newly |= 1 << e;
                    }
                }
                s.saturated |= newly;
                for e in bits(newly) {
                    s.candidates &= !self.crosses[e];
                }
                for d in bits(s.candidates & self.crosses[c]) {
                    if (s.edges & self.crosses[d]).count_ones() > k {
                        s.candidates &= !(1 << d);
                    }
                }
            }
            Constraint::Quasiplanar(h) => {
                // any new h-clique through d must also use c
                for d in bits(s.candidates & self.crosses[c]) {
                    if self.has_clique(s.edges & self.crosses[d] & self.crosses[c] & !bit, h - 2) {
                        s.candidates &= !(1 << d);
                    }
                }
            }
        }
        s
    }

    /// Applies the degree caps. Returns false when the node violates them.
    fn apply_symmetry(&self, s: &mut State) -> bool {
        let Some(lowest) = bits(s.candidates).next() else {
            return true;
        };
        if self.cell(lowest).0 < 2 {
            return true;
        }
        let limit = s.top_deg[1];
        let mut caps: Vec<(u8, u64)> = Vec::with_capacity(3);
        if self.p >= 2 {
            caps.push((s.top_deg[self.p], self.row_mask[self.p]));
        }
        if self.p == self.q {
            caps.push((s.bottom_deg[1], self.col_mask[1]));
            caps.push((s.bottom_deg[self.q], self.col_mask[self.q]));
        }
        for (deg, mask) in caps {
            if deg > limit {
                return false;
            }
            if deg == limit {
                s.candidates &= !mask;
            }
        }
        true
    }

    fn solve(&self, mut s: State, g: usize, shared: &Shared, nodes: &mut u64) {
        *nodes += 1;
        if !self.apply_symmetry(&mut s) {
            return;
        }
        let m = s.edges.count_ones();
        if m + s.candidates.count_ones() <= shared.best.load(Ordering::Relaxed) {
            return;
        }
        if s.candidates == 0 {
            shared.offer(g, s.edges);
            return;
        }
        let c = s.candidates.trailing_zeros() as usize;
        self.solve(self.include(s, c), g, shared, nodes);
        let mut skip = s;
        skip.candidates &= !(1 << c);
        self.solve(skip, g, shared, nodes);
    }

    /// Open subtrees after `depth` include/exclude decisions, in sequential
    /// search order.
    fn frontier(&self, depth: usize) -> Vec<State> {
        let mut out = Vec::new();
        let mut stack = vec![(self.root(), 0)];
        while let Some((mut s, d)) = stack.pop() {
            if !self.apply_symmetry(&mut s) {
                continue;
            }
            if d == depth || s.candidates == 0 {
                out.push(s);
                continue;
            }
            let c = s.candidates.trailing_zeros() as usize;
            let mut skip = s;
            skip.candidates &= !(1 << c);
            stack.push((skip, d + 1));
            stack.push((self.include(s, c), d + 1));
        }
        out
    }
}
