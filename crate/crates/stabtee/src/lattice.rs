//! Finite geometries, regions and the two annular partitions.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::code::CodeSpec;
use crate::laurent::{Monomial, SupportBox};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeometryKind {
    PlanePatch,
    /// Periodic in y only.
    Cylinder,
    Torus,
}

/// A finite set of sites `[x0, x0+extent_x) × [y0, y0+extent_y)`.
///
/// Sites are indexed row by row (x fastest); each site holds `2q` columns,
/// X block first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Geometry {
    pub kind: GeometryKind,
    pub x0: i64,
    pub y0: i64,
    pub extent_x: usize,
    pub extent_y: usize,
}

impl Geometry {
    pub fn plane(x0: i64, y0: i64, extent_x: usize, extent_y: usize) -> Self {
        Geometry { kind: GeometryKind::PlanePatch, x0, y0, extent_x, extent_y }
    }

    pub fn cylinder(x0: i64, extent_x: usize, circumference: usize) -> Self {
        Geometry { kind: GeometryKind::Cylinder, x0, y0: 0, extent_x, extent_y: circumference }
    }

    pub fn torus(lx: usize, ly: usize) -> Self {
        Geometry { kind: GeometryKind::Torus, x0: 0, y0: 0, extent_x: lx, extent_y: ly }
    }

    pub fn periodic_x(&self) -> bool {
        self.kind == GeometryKind::Torus
    }

    pub fn periodic_y(&self) -> bool {
        self.kind != GeometryKind::PlanePatch
    }

    pub fn num_sites(&self) -> usize {
        self.extent_x * self.extent_y
    }

    /// Index of the site at `(x, y)` after wrapping periodic axes.
    pub fn site_index(&self, x: i64, y: i64) -> Option<usize> {
        let fold = |v: i64, origin: i64, extent: usize, periodic: bool| -> Option<usize> {
            let d = v - origin;
            if periodic {
                Some(d.rem_euclid(extent as i64) as usize)
            } else if d >= 0 && (d as usize) < extent {
                Some(d as usize)
            } else {
                None
            }
        };
        let ix = fold(x, self.x0, self.extent_x, self.periodic_x())?;
        let iy = fold(y, self.y0, self.extent_y, self.periodic_y())?;
        Some(iy * self.extent_x + ix)
    }

    pub fn site_coords(&self, index: usize) -> (i64, i64) {
        (self.x0 + (index % self.extent_x) as i64, self.y0 + (index / self.extent_x) as i64)
    }

    pub fn sites(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (0..self.num_sites()).map(|i| self.site_coords(i))
    }

    /// True when a box translated anywhere inside fits without leaving an open axis.
    pub fn fits_box(&self, b: SupportBox) -> bool {
        let ok_x = self.periodic_x()
            || (b.xmin >= self.x0 && b.xmax < self.x0 + self.extent_x as i64);
        let ok_y = self.periodic_y()
            || (b.ymin >= self.y0 && b.ymax < self.y0 + self.extent_y as i64);
        ok_x && ok_y
    }
}

/// Axis-aligned half-open rectangle `[x1, x2) × [y1, y2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Rect {
    pub x1: i64,
    pub x2: i64,
    pub y1: i64,
    pub y2: i64,
}

impl Rect {
    pub fn new(x1: i64, x2: i64, y1: i64, y2: i64) -> Self {
        Rect { x1, x2, y1, y2 }
    }

    pub fn contains(&self, x: i64, y: i64) -> bool {
        self.x1 <= x && x < self.x2 && self.y1 <= y && y < self.y2
    }

    pub fn is_empty(&self) -> bool {
        self.x1 >= self.x2 || self.y1 >= self.y2
    }

    pub fn grow(&self, by: i64) -> Rect {
        Rect::new(self.x1 - by, self.x2 + by, self.y1 - by, self.y2 + by)
    }
}

/// A finite set of sites, described as a union of rectangles.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Region {
    pub rects: Vec<Rect>,
}

impl Region {
    pub fn empty() -> Self {
        Region { rects: Vec::new() }
    }

    pub fn rect(x1: i64, x2: i64, y1: i64, y2: i64) -> Self {
        Region { rects: vec![Rect::new(x1, x2, y1, y2)] }
    }

    pub fn union(parts: &[&Region]) -> Region {
        Region { rects: parts.iter().flat_map(|r| r.rects.iter().copied()).collect() }
    }

    pub fn contains(&self, x: i64, y: i64) -> bool {
        self.rects.iter().any(|r| r.contains(x, y))
    }

    pub fn sites(&self) -> BTreeSet<(i64, i64)> {
        let mut out = BTreeSet::new();
        for r in &self.rects {
            for y in r.y1..r.y2 {
                for x in r.x1..r.x2 {
                    out.insert((x, y));
                }
            }
        }
        out
    }

    pub fn size(&self) -> usize {
        self.sites().len()
    }

    pub fn bounding_rect(&self) -> Option<Rect> {
        let live: Vec<&Rect> = self.rects.iter().filter(|r| !r.is_empty()).collect();
        let first = live.first()?;
        Some(live.iter().fold(**first, |acc, r| {
            Rect::new(acc.x1.min(r.x1), acc.x2.max(r.x2), acc.y1.min(r.y1), acc.y2.max(r.y2))
        }))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PartitionStyle {
    Rectangular,
    Concave,
}

/// Annular tripartition A, B, C around a hole D; E is everything else.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub l: i64,
    pub style: PartitionStyle,
    pub a: Region,
    pub b: Region,
    pub c: Region,
    pub d: Region,
    pub frame: Rect,
}

impl Partition {
    pub fn e_contains(&self, x: i64, y: i64) -> bool {
        !(self.a.contains(x, y) || self.b.contains(x, y) || self.c.contains(x, y) || self.d.contains(x, y))
    }

    /// The inner core of D kept at distance `ls` from its edges (concave only).
    pub fn d_in(&self, ls: i64) -> Option<Region> {
        match self.style {
            PartitionStyle::Concave => {
                let l = self.l;
                let r = Rect::new(l + ls, 2 * l - ls, l + ls, 4 * l - ls);
                Some(if r.is_empty() { Region::empty() } else { Region { rects: vec![r] } })
            }
            PartitionStyle::Rectangular => None,
        }
    }

    /// Character grid, top row first: A B C D and `.` for E.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for y in (self.frame.y1..self.frame.y2).rev() {
            for x in self.frame.x1..self.frame.x2 {
                out.push(self.label(x, y));
            }
            out.push('\n');
        }
        out
    }

    /// `x,y,region` rows with a header.
    pub fn render_csv(&self) -> String {
        let mut out = String::from("x,y,region\n");
        for y in self.frame.y1..self.frame.y2 {
            for x in self.frame.x1..self.frame.x2 {
                let _ = writeln!(out, "{x},{y},{}", self.label(x, y));
            }
        }
        out
    }

    pub fn label(&self, x: i64, y: i64) -> char {
        if self.a.contains(x, y) {
            'A'
        } else if self.b.contains(x, y) {
            'B'
        } else if self.c.contains(x, y) {
            'C'
        } else if self.d.contains(x, y) {
            'D'
        } else {
            '.'
        }
    }
}

pub fn concave_partition(l: i64) -> Partition {
    assert!(l >= 1, "L must be positive");
    let r = |x1, x2, y1, y2| Rect::new(x1, x2, y1, y2);
    Partition {
        l,
        style: PartitionStyle::Concave,
        a: Region { rects: vec![r(0, l, 2 * l, 3 * l)] },
        c: Region { rects: vec![r(2 * l, 3 * l, 2 * l, 3 * l)] },
        d: Region { rects: vec![r(l, 2 * l, l, 4 * l)] },
        b: Region {
            rects: vec![
                r(0, 3 * l, 0, l),
                r(0, 3 * l, 4 * l, 5 * l),
                r(0, l, l, 2 * l),
                r(0, l, 3 * l, 4 * l),
                r(2 * l, 3 * l, l, 2 * l),
                r(2 * l, 3 * l, 3 * l, 4 * l),
            ],
        },
        frame: r(0, 3 * l, 0, 5 * l),
    }
}

pub fn rectangular_partition(l: i64) -> Partition {
    assert!(l >= 1, "L must be positive");
    let r = |x1, x2, y1, y2| Rect::new(x1, x2, y1, y2);
    Partition {
        l,
        style: PartitionStyle::Rectangular,
        a: Region { rects: vec![r(0, l, l, 2 * l)] },
        c: Region { rects: vec![r(2 * l, 3 * l, l, 2 * l)] },
        d: Region { rects: vec![r(l, 2 * l, l, 2 * l)] },
        b: Region { rects: vec![r(0, 3 * l, 0, l), r(0, 3 * l, 2 * l, 3 * l)] },
        frame: r(0, 3 * l, 0, 3 * l),
    }
}

/// Generator translates `(t, μ)` whose support meets `window`.
///
/// Translates are listed by `(t.y, t.x, μ)`; on periodic axes each distinct
/// wrapped translate appears once.
pub fn enumerate_generators(code: &CodeSpec, geom: &Geometry, window: &Region) -> Vec<(Monomial, usize)> {
    let Some(bound) = window.bounding_rect() else {
        return Vec::new();
    };
    let wanted: BTreeSet<usize> = window
        .sites()
        .into_iter()
        .filter_map(|(x, y)| geom.site_index(x, y))
        .collect();
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for (mu, g) in code.generators.iter().enumerate() {
        let Some(b) = g.support_box() else { continue };
        let sites = g.support_sites();
        let (tx1, tx2) = if geom.periodic_x() {
            (geom.x0, geom.x0 + geom.extent_x as i64)
        } else {
            (bound.x1 - b.xmax, bound.x2 - b.xmin)
        };
        let (ty1, ty2) = if geom.periodic_y() {
            (geom.y0, geom.y0 + geom.extent_y as i64)
        } else {
            (bound.y1 - b.ymax, bound.y2 - b.ymin)
        };
        for ty in ty1..ty2 {
            for tx in tx1..tx2 {
                let hit = sites.iter().any(|&(x, y)| {
                    geom.site_index(x + tx, y + ty).is_some_and(|i| wanted.contains(&i))
                });
                if hit && seen.insert((ty, tx, mu)) {
                    out.push((Monomial::new(tx, ty), mu));
                }
            }
        }
    }
    out.sort_by_key(|(t, mu)| (t.yexp, t.xexp, *mu));
    out
}
