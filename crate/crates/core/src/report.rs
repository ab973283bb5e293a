//! One-shot analysis of a drawing: crossing structure, bricks, path
//! decomposition width and the crossing/quasiplanarity bound checks.

use serde::Serialize;

use crate::bounds::{self, Applicability, CoefficientTable};
use crate::bricks::brick_decomposition;
use crate::crossing::{crossing_profile, largest_crossing_family};
use crate::decomposition::{build_path_decomposition, Orientation};
use crate::drawing::{Drawing, Edge};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundCheck {
    pub applicable: bool,
    /// Exact bound as `p/q`, absent when not applicable.
    pub bound: Option<String>,
    pub bound_value: Option<f64>,
    pub holds: Option<bool>,
    pub note: Option<String>,
}

impl BoundCheck {
    fn inapplicable(note: String) -> Self {
        BoundCheck { applicable: false, bound: None, bound_value: None, holds: None, note: Some(note) }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuasiplanarCheck {
    /// The drawing's own k (max crossings on an edge).
    pub k: usize,
    pub h: u32,
    pub mutually_crossing: usize,
    pub holds: bool,
    /// The guarantee is stated for connected drawings.
    pub connected: bool,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub p: usize,
    pub q: usize,
    pub n: usize,
    pub m: usize,
    pub total_crossings: u64,
    pub max_per_edge: usize,
    pub mutually_crossing_number: usize,
    pub crossing_family: Vec<Edge>,
    pub planar_edges: Vec<Edge>,
    pub bricks: usize,
    pub pathwidth_construction_width: usize,
    pub pathwidth_orientation: Orientation,
    pub crossing_lemma: BoundCheck,
    pub auxiliary_bound: BoundCheck,
    pub quasiplanar: QuasiplanarCheck,
}

pub fn analyze(d: &Drawing, table: &CoefficientTable) -> AnalysisReport {
    let profile = crossing_profile(d);
    let family = largest_crossing_family(d);
    let bricks = brick_decomposition(d);
    let pd = build_path_decomposition(d);
    let total = profile.total;

    let crossing_lemma = match bounds::crossing_lower_bound(d.n(), d.m(), table) {
        Applicability::Applicable(b) => BoundCheck {
            applicable: true,
            holds: Some(bounds::int(total as i64) >= b),
            bound_value: Some(bounds::to_f64(&b)),
            bound: Some(b.to_string()),
            note: None,
        },
        Applicability::Inapplicable(why) => BoundCheck::inapplicable(why),
    };

    let auxiliary_bound = match bounds::auxiliary_lower_bound(d.n(), d.m(), table) {
        Ok(raw) => {
            let clamped = bounds::clamp_zero(raw.clone());
            let holds = bounds::int(total as i64) >= clamped;
            BoundCheck {
                applicable: true,
                holds: Some(holds),
                bound_value: Some(bounds::to_f64(&clamped)),
                bound: Some(raw.to_string()),
                note: (!holds).then(|| {
                    "violated; the 5-planar term of the table is exceeded by the 8-vertex exception S".to_string()
                }),
            }
        }
        Err(e) => BoundCheck::inapplicable(e.to_string()),
    };

    let k = profile.max_per_edge;
    let h = bounds::quasiplanar_threshold_or_three(k as u32);
    let connected = d.is_connected();
    let quasiplanar = QuasiplanarCheck {
        k,
        h,
        mutually_crossing: family.len(),
        holds: family.len() < h as usize,
        connected,
        note: if k < 2 {
            Some("k <= 1: trivially 3-quasiplanar".into())
        } else if !connected {
            Some("guarantee applies to connected drawings".into())
        } else {
            None
        },
    };

    AnalysisReport {
        p: d.p(),
        q: d.q(),
        n: d.n(),
        m: d.m(),
        total_crossings: total,
        max_per_edge: k,
        mutually_crossing_number: family.len(),
        crossing_family: family,
        planar_edges: bricks.planar_edges,
        bricks: bricks.bricks.len(),
        pathwidth_construction_width: pd.width(),
        pathwidth_orientation: pd.orientation,
        crossing_lemma,
        auxiliary_bound,
        quasiplanar,
    }
}

fn verdict(c: &BoundCheck) -> String {
    match (c.holds, &c.bound) {
        (Some(h), Some(b)) => format!(
            "{} (bound {b} ~ {})",
            if h { "holds" } else { "VIOLATED" },
            bounds::format_sig(c.bound_value.unwrap_or(f64::NAN), 6)
        ),
        _ => format!("n/a ({})", c.note.as_deref().unwrap_or("")),
    }
}

impl AnalysisReport {
    pub fn to_text(&self) -> String {
        let edges = |es: &[Edge]| es.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        let q = &self.quasiplanar;
        let mut out = String::new();
        out += &format!("layers            p={} q={} (n={})\n", self.p, self.q, self.n);
        out += &format!("edges             m={}\n", self.m);
        out += &format!("crossings         total={} max per edge={}\n", self.total_crossings, self.max_per_edge);
        out += &format!("pairwise crossing {} [{}]\n", self.mutually_crossing_number, edges(&self.crossing_family));
        out += &format!("planar edges      {} [{}]\n", self.planar_edges.len(), edges(&self.planar_edges));
        out += &format!("bricks            {}\n", self.bricks);
        out += &format!(
            "path decomposition width={} ({:?})\n",
            self.pathwidth_construction_width, self.pathwidth_orientation
        );
        out += &format!("crossing lemma    {}\n", verdict(&self.crossing_lemma));
        out += &format!("auxiliary bound   {}\n", verdict(&self.auxiliary_bound));
        out += &format!(
            "quasiplanarity    k={} -> h={} : {} pairwise crossing, {}{}\n",
            q.k,
            q.h,
            q.mutually_crossing,
            if q.holds { "holds" } else { "VIOLATED" },
            q.note.as_ref().map(|n| format!(" ({n})")).unwrap_or_default()
        );
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
