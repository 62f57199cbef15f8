//! Alternating chainmail diagrams and their PD codes.
//!
//! Each chord `[i, j]` is drawn as an axis-parallel rectangle
//! `[i, j] × [-h, h]` with `h = (2l + 1)(j - i) + i`. Heights are distinct
//! and strictly increase under nesting, so nested or disjoint chords give
//! disjoint rectangles, while interleaving chords cross exactly twice: the
//! taller rectangle's vertical side passes through the shorter one's top and
//! bottom edges. No three rectangles meet in a point.
//!
//! Every component is traversed from the midpoint of its left side: up,
//! left to right along the top, down the right side, right to left along the
//! bottom, and back up. Arcs are numbered consecutively in component order
//! starting with the arc through that midpoint.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{IntersectionGraph, LinearChordDiagram, LinkError};
use crate::charfun::Side;

/// One unknot of the link, drawn for a chord.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinkComponent {
    pub chord: usize,
    /// Arc labels `first_arc..first_arc + arc_count`.
    pub first_arc: usize,
    pub arc_count: usize,
}

impl LinkComponent {
    pub fn contains_arc(&self, arc: usize) -> bool {
        arc >= self.first_arc && arc < self.first_arc + self.arc_count
    }

    fn successor(&self, arc: usize) -> usize {
        if arc + 1 == self.first_arc + self.arc_count {
            self.first_arc
        } else {
            arc + 1
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    /// Arc labels counterclockwise, starting at the incoming under-strand.
    pub pd: [usize; 4],
    /// +1 for a right-handed crossing.
    pub sign: i8,
    pub over: usize,
    pub under: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaussEntry {
    /// 1-based crossing number.
    pub crossing: usize,
    pub over: bool,
    pub sign: i8,
}

impl fmt::Display for GaussEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ou = if self.over { 'O' } else { 'U' };
        let sign = if self.sign > 0 { '+' } else { '-' };
        write!(f, "{ou}{}{sign}", self.crossing)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    pub components: Vec<LinkComponent>,
    pub crossings: Vec<Crossing>,
    pub gauss_codes: Vec<Vec<GaussEntry>>,
    /// Signed linking numbers, summed over the crossings of each pair.
    pub linking_matrix: Vec<Vec<i32>>,
}

impl LinkDiagram {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn component_of_arc(&self, arc: usize) -> Option<usize> {
        self.components.iter().position(|c| c.contains_arc(arc))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdDefect {
    /// A label does not occur exactly twice.
    LabelMultiplicity { label: usize, count: usize },
    /// A label outside every component's arc range.
    UnknownLabel(usize),
    /// No crossing joins an arc to its successor.
    BrokenComponent { component: usize, arc: usize },
}

impl fmt::Display for PdDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::LabelMultiplicity { label, count } => {
                write!(f, "arc {label} occurs {count} times instead of twice")
            }
            Self::UnknownLabel(l) => write!(f, "arc {l} belongs to no component"),
            Self::BrokenComponent { component, arc } => {
                write!(f, "component {component}: no crossing follows arc {arc}")
            }
        }
    }
}

/// Where a component stops being alternating.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlternationViolation {
    pub component: usize,
    /// Index of the visit that repeats the previous over/under state.
    pub position: usize,
    /// 1-based crossing number of that visit.
    pub crossing: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Piece {
    LeftUpper = 0,
    Top = 1,
    Right = 2,
    Bottom = 3,
    LeftLower = 4,
}

impl Piece {
    /// Unit direction of travel along this piece.
    fn direction(self) -> (i64, i64) {
        match self {
            Piece::LeftUpper | Piece::LeftLower => (0, 1),
            Piece::Top => (1, 0),
            Piece::Right => (0, -1),
            Piece::Bottom => (-1, 0),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Visit {
    crossing: usize,
    key: (Piece, i64),
}

struct RawCrossing {
    /// `[taller ring, shorter ring]`.
    rings: [usize; 2],
    pieces: [Piece; 2],
}

/// The alternating chainmail diagram of an intersection graph.
pub fn chainmail_diagram(
    graph: &IntersectionGraph,
    diagram: &LinearChordDiagram,
) -> Result<LinkDiagram, LinkError> {
    let chords = diagram.chords();
    let n = chords.len();
    if graph.vertex_count() != n || (0..n).any(|c| graph.chord_edge(c) != chords[c].edge) {
        return Err(LinkError::InconsistentInput);
    }
    let scale = 2 * n as i64 + 1;
    let height: Vec<i64> = chords
        .iter()
        .map(|c| scale * (c.right - c.left) as i64 + c.left as i64)
        .collect();

    // Place the two crossings of every clasp.
    let mut raw: Vec<RawCrossing> = Vec::with_capacity(2 * graph.edges().len());
    let mut visits: Vec<Vec<Visit>> = vec![Vec::new(); n];
    for &(a, b) in graph.edges() {
        if !chords[a].interleaves(&chords[b]) {
            return Err(LinkError::InconsistentInput);
        }
        let (tall, short) = if height[a] > height[b] { (a, b) } else { (b, a) };
        let (t, s) = (&chords[tall], &chords[short]);
        let on_left = s.left < t.left && t.left < s.right;
        let x = if on_left { t.left } else { t.right } as i64;
        let hs = height[short];
        for y in [hs, -hs] {
            let tall_key = match (on_left, y > 0) {
                (true, true) => (Piece::LeftUpper, y),
                (true, false) => (Piece::LeftLower, y),
                (false, _) => (Piece::Right, -y),
            };
            let short_key = if y > 0 { (Piece::Top, x) } else { (Piece::Bottom, -x) };
            let id = raw.len();
            raw.push(RawCrossing { rings: [tall, short], pieces: [tall_key.0, short_key.0] });
            visits[tall].push(Visit { crossing: id, key: tall_key });
            visits[short].push(Visit { crossing: id, key: short_key });
        }
    }
    for v in &mut visits {
        v.sort_unstable_by_key(|visit| visit.key);
    }

    // Number crossings by first visit along the traversal.
    let mut number = vec![usize::MAX; raw.len()];
    let mut next = 0;
    for v in &visits {
        for visit in v {
            if number[visit.crossing] == usize::MAX {
                number[visit.crossing] = next;
                next += 1;
            }
        }
    }

    let over = alternating_assignment(&raw, &visits, &number, chords.iter().map(|c| c.side).collect())?;

    // Arc labels around each crossing, indexed by compass slot E, N, W, S.
    let mut components = Vec::with_capacity(n);
    let mut slots = vec![[0usize; 4]; raw.len()];
    let mut first_arc = 1;
    for (ring, v) in visits.iter().enumerate() {
        let m = v.len();
        for (t, visit) in v.iter().enumerate() {
            let c = &raw[visit.crossing];
            let which = if c.rings[0] == ring { 0 } else { 1 };
            let dir = c.pieces[which].direction();
            slots[visit.crossing][slot(-dir.0, -dir.1)] = first_arc + t;
            slots[visit.crossing][slot(dir.0, dir.1)] = first_arc + (t + 1) % m;
        }
        components.push(LinkComponent { chord: ring, first_arc, arc_count: m });
        first_arc += m;
    }

    let mut crossings = vec![
        Crossing { pd: [0; 4], sign: 0, over: 0, under: 0 };
        raw.len()
    ];
    for (id, c) in raw.iter().enumerate() {
        let o = over[id];
        let u = 1 - o;
        let (od, ud) = (c.pieces[o].direction(), c.pieces[u].direction());
        let start = slot(-ud.0, -ud.1);
        let pd = [0, 1, 2, 3].map(|k| slots[id][(start + k) % 4]);
        let sign = if od.0 * ud.1 - od.1 * ud.0 > 0 { 1 } else { -1 };
        crossings[number[id]] = Crossing { pd, sign, over: c.rings[o], under: c.rings[u] };
    }

    let gauss_codes = visits
        .iter()
        .enumerate()
        .map(|(ring, v)| {
            v.iter()
                .map(|visit| {
                    let k = number[visit.crossing];
                    let c = &crossings[k];
                    GaussEntry { crossing: k + 1, over: c.over == ring, sign: c.sign }
                })
                .collect()
        })
        .collect();

    let mut linking_matrix = vec![vec![0i32; n]; n];
    for c in &crossings {
        linking_matrix[c.over][c.under] += c.sign as i32;
        linking_matrix[c.under][c.over] += c.sign as i32;
    }
    for row in &mut linking_matrix {
        for x in row.iter_mut() {
            *x /= 2;
        }
    }

    Ok(LinkDiagram { components, crossings, gauss_codes, linking_matrix })
}

/// Compass slot of a unit direction: E = 0, N = 1, W = 2, S = 3.
fn slot(dx: i64, dy: i64) -> usize {
    match (dx, dy) {
        (1, 0) => 0,
        (0, 1) => 1,
        (-1, 0) => 2,
        (0, -1) => 3,
        _ => unreachable!("axis-parallel unit direction"),
    }
}

/// Chooses which strand of each crossing passes over so that every ring
/// alternates. Returns the index (into `rings`) of the over-strand.
///
/// Consecutive visits along a ring must differ and the two strands of a
/// crossing must differ; this is a 2-colouring problem, solvable for every
/// planar projection. Each connected piece of the projection is seeded at
/// its lowest-numbered crossing with the side-A ring on top.
fn alternating_assignment(
    raw: &[RawCrossing],
    visits: &[Vec<Visit>],
    number: &[usize],
    sides: Vec<Side>,
) -> Result<Vec<usize>, LinkError> {
    let mut over: Vec<Option<usize>> = vec![None; raw.len()];
    let mut position = vec![[0usize; 2]; raw.len()];
    for (ring, v) in visits.iter().enumerate() {
        for (t, visit) in v.iter().enumerate() {
            let which = if raw[visit.crossing].rings[0] == ring { 0 } else { 1 };
            position[visit.crossing][which] = t;
        }
    }
    let mut seeds: Vec<usize> = (0..raw.len()).collect();
    seeds.sort_unstable_by_key(|&c| number[c]);

    for seed in seeds {
        if over[seed].is_some() {
            continue;
        }
        let a_strand = if sides[raw[seed].rings[0]] == Side::A { 0 } else { 1 };
        over[seed] = Some(a_strand);
        let mut queue = VecDeque::from([seed]);
        while let Some(c) = queue.pop_front() {
            let o = over[c].expect("queued crossings are assigned");
            for (which, &t) in position[c].iter().enumerate() {
                let ring = raw[c].rings[which];
                let is_over = o == which;
                let v = &visits[ring];
                for nb in [(t + 1) % v.len(), (t + v.len() - 1) % v.len()] {
                    let d = v[nb].crossing;
                    let dw = if raw[d].rings[0] == ring { 0 } else { 1 };
                    // The ring must be on the opposite level at its next visit.
                    let want = if is_over { 1 - dw } else { dw };
                    match over[d] {
                        None => {
                            over[d] = Some(want);
                            queue.push_back(d);
                        }
                        Some(x) if x != want => {
                            return Err(LinkError::AlternationFailure { crossing: number[d] + 1 });
                        }
                        Some(_) => {}
                    }
                }
            }
        }
    }
    Ok(over.into_iter().map(|o| o.expect("every crossing assigned")).collect())
}

/// Checks, from the PD code and component arc ranges alone, that every
/// component alternates between over- and under-passes.
///
/// Returns the first violation, or `None` for an alternating diagram.
pub fn verify_alternating(diagram: &LinkDiagram) -> Result<Option<AlternationViolation>, LinkError> {
    let mut count: alloc::collections::BTreeMap<usize, usize> = Default::default();
    for c in &diagram.crossings {
        for &l in &c.pd {
            *count.entry(l).or_default() += 1;
        }
    }
    for (&label, &n) in &count {
        if n != 2 {
            return Err(LinkError::MalformedPd(PdDefect::LabelMultiplicity { label, count: n }));
        }
        if diagram.component_of_arc(label).is_none() {
            return Err(LinkError::MalformedPd(PdDefect::UnknownLabel(label)));
        }
    }
    for comp in &diagram.components {
        for arc in comp.first_arc..comp.first_arc + comp.arc_count {
            if !count.contains_key(&arc) {
                return Err(LinkError::MalformedPd(PdDefect::LabelMultiplicity { label: arc, count: 0 }));
            }
        }
    }

    for (ci, comp) in diagram.components.iter().enumerate() {
        // (crossing, passes over) in traversal order.
        let mut states: Vec<(usize, bool)> = Vec::with_capacity(comp.arc_count);
        let mut used: Vec<(usize, bool)> = Vec::new();
        for arc in comp.first_arc..comp.first_arc + comp.arc_count {
            let succ = comp.successor(arc);
            let found = diagram.crossings.iter().enumerate().find_map(|(k, c)| {
                let under = c.pd[0] == arc && c.pd[2] == succ;
                let over = (c.pd[1] == arc && c.pd[3] == succ) || (c.pd[3] == arc && c.pd[1] == succ);
                [(under, false), (over, true)]
                    .into_iter()
                    .find(|&(hit, level)| hit && !used.contains(&(k, level)))
                    .map(|(_, level)| (k, level))
            });
            let (k, level) =
                found.ok_or(LinkError::MalformedPd(PdDefect::BrokenComponent { component: ci, arc }))?;
            used.push((k, level));
            states.push((k, level));
        }
        let m = states.len();
        for t in 0..m {
            let prev = states[(t + m - 1) % m];
            if prev.1 == states[t].1 {
                return Ok(Some(AlternationViolation { component: ci, position: t, crossing: states[t].0 + 1 }));
            }
        }
    }
    Ok(None)
}
