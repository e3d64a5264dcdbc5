//! The Steiner system S(3,6,22) from the projective plane PG(2,4) and the
//! graphs built on it.
//!
//! GF(4) is `{0, 1, w, w^2}` encoded as `0, 1, 2, 3` with `w^2 = w + 1`, so
//! addition is XOR. Points of PG(2,4) are homogeneous triples whose first
//! non-zero coordinate is 1. The 168 hyperovals split into three classes of
//! 56 under "meet in an even number of points"; the class holding the
//! lexicographically smallest hyperoval supplies 56 of the 77 blocks, the
//! other 21 are the lines extended by a point at infinity.

use crate::error::{Error, Result};
use crate::graph::Graph;

const GF4_EXP: [u8; 3] = [1, 2, 3];
const GF4_LOG: [u8; 4] = [0, 0, 1, 2];

fn gf4_mul(x: u8, y: u8) -> u8 {
    if x == 0 || y == 0 {
        0
    } else {
        GF4_EXP[((GF4_LOG[x as usize] + GF4_LOG[y as usize]) % 3) as usize]
    }
}

fn dot(p: [u8; 3], q: [u8; 3]) -> u8 {
    gf4_mul(p[0], q[0]) ^ gf4_mul(p[1], q[1]) ^ gf4_mul(p[2], q[2])
}

/// Normalised homogeneous triples in lexicographic order.
fn projective_points() -> Vec<[u8; 3]> {
    let mut pts = Vec::with_capacity(21);
    for x in 0..4u8 {
        for y in 0..4u8 {
            for z in 0..4u8 {
                let first = [x, y, z].into_iter().find(|&c| c != 0);
                if first == Some(1) {
                    pts.push([x, y, z]);
                }
            }
        }
    }
    pts
}

/// The projective plane of order 4: 21 points, 21 lines of 5 points each.
#[derive(Clone, Debug)]
pub struct ProjectivePlane4 {
    /// Lines as 21-bit point masks, indexed by their dual coordinates.
    pub lines: Vec<u32>,
    /// `line_through[p][q]` is the index of the line through `p != q`.
    line_through: Vec<Vec<usize>>,
}

impl ProjectivePlane4 {
    pub fn new() -> Self {
        let pts = projective_points();
        let lines: Vec<u32> = pts
            .iter()
            .map(|&l| {
                pts.iter()
                    .enumerate()
                    .filter(|(_, &p)| dot(p, l) == 0)
                    .fold(0u32, |m, (i, _)| m | 1 << i)
            })
            .collect();
        let mut line_through = vec![vec![usize::MAX; 21]; 21];
        for (li, &mask) in lines.iter().enumerate() {
            let on_line: Vec<usize> = (0..21).filter(|&p| mask >> p & 1 == 1).collect();
            for &p in &on_line {
                for &q in &on_line {
                    if p != q {
                        line_through[p][q] = li;
                    }
                }
            }
        }
        Self { lines, line_through }
    }

    /// All 6-point sets with no three points collinear, as sorted masks in
    /// lexicographic order of their point lists.
    pub fn hyperovals(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(6);
        self.extend_arc(0, 0, &mut chosen, &mut out);
        out
    }

    fn extend_arc(&self, start: usize, blocked: u32, chosen: &mut Vec<usize>, out: &mut Vec<u32>) {
        if chosen.len() == 6 {
            out.push(chosen.iter().fold(0, |m, &p| m | 1 << p));
            return;
        }
        for r in start..21 {
            if blocked >> r & 1 == 1 {
                continue;
            }
            let mut next = blocked;
            for &p in chosen.iter() {
                next |= self.lines[self.line_through[p][r]];
            }
            chosen.push(r);
            self.extend_arc(r + 1, next, chosen, out);
            chosen.pop();
        }
    }
}

impl Default for ProjectivePlane4 {
    fn default() -> Self {
        Self::new()
    }
}

/// A Steiner system S(3,6,22) on points `0..22`; point 21 is the extension
/// point. Blocks are 22-bit masks: 21 extended lines, then 56 hyperovals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerSystem {
    pub points: usize,
    pub blocks: Vec<u32>,
    /// Number of leading blocks that are extended lines.
    pub line_blocks: usize,
}

pub const INFINITY_POINT: usize = 21;

impl SteinerSystem {
    pub fn block_points(&self, b: usize) -> Vec<usize> {
        (0..self.points).filter(|&p| self.blocks[b] >> p & 1 == 1).collect()
    }

    pub fn hyperoval_blocks(&self) -> &[u32] {
        &self.blocks[self.line_blocks..]
    }

    /// Checks the S(3,6,22) axioms exhaustively.
    pub fn validate(&self) -> Result<()> {
        let fail = |m: String| Err(Error::Construction(m));
        if self.points != 22 || self.blocks.len() != 77 {
            return fail(format!("{} points / {} blocks", self.points, self.blocks.len()));
        }
        if let Some(b) = self.blocks.iter().find(|b| b.count_ones() != 6) {
            return fail(format!("block {b:#x} does not have 6 points"));
        }
        for x in 0..22 {
            for y in x + 1..22 {
                for z in y + 1..22 {
                    let t = 1u32 << x | 1 << y | 1 << z;
                    let cover = self.blocks.iter().filter(|&&b| b & t == t).count();
                    if cover != 1 {
                        return fail(format!("triple {{{x},{y},{z}}} lies in {cover} blocks"));
                    }
                }
            }
        }
        for p in 0..22 {
            let r = self.blocks.iter().filter(|&&b| b >> p & 1 == 1).count();
            if r != 21 {
                return fail(format!("point {p} lies in {r} blocks"));
            }
        }
        for (i, a) in self.blocks.iter().enumerate() {
            for b in &self.blocks[i + 1..] {
                let m = (a & b).count_ones();
                if m != 0 && m != 2 {
                    return fail(format!("blocks meet in {m} points"));
                }
            }
        }
        Ok(())
    }
}

/// Partitions hyperovals into classes under even intersection. Classes are
/// returned in order of their smallest member.
fn hyperoval_classes(ovals: &[u32]) -> Vec<Vec<u32>> {
    let mut class_of = vec![usize::MAX; ovals.len()];
    let mut classes: Vec<Vec<u32>> = Vec::new();
    for i in 0..ovals.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = Vec::new();
        for j in i..ovals.len() {
            if class_of[j] == usize::MAX && (ovals[i] & ovals[j]).count_ones().is_multiple_of(2) {
                class_of[j] = id;
                members.push(ovals[j]);
            }
        }
        classes.push(members);
    }
    classes
}

pub fn steiner_s3_6_22() -> Result<SteinerSystem> {
    let plane = ProjectivePlane4::new();
    let ovals = plane.hyperovals();
    if ovals.len() != 168 {
        return Err(Error::Construction(format!("found {} hyperovals", ovals.len())));
    }
    let classes = hyperoval_classes(&ovals);
    if classes.len() != 3 || classes.iter().any(|c| c.len() != 56) {
        return Err(Error::Construction("hyperoval classes are not 3 x 56".into()));
    }
    // Every member of a class must meet every other evenly.
    for c in &classes {
        for a in c {
            if c.iter().any(|b| (a & b).count_ones() % 2 == 1) {
                return Err(Error::Construction(
                    "even-intersection relation is not transitive".into(),
                ));
            }
        }
    }
    let mut blocks: Vec<u32> = plane.lines.iter().map(|l| l | 1 << INFINITY_POINT).collect();
    blocks.extend(&classes[0]);
    let system = SteinerSystem {
        points: 22,
        blocks,
        line_blocks: 21,
    };
    system.validate()?;
    Ok(system)
}

fn disjointness_graph(sets: &[u32]) -> Graph {
    Graph::from_fn(sets.len(), |u, v| sets[u] & sets[v] == 0)
}

/// Blocks of S(3,6,22), adjacent when disjoint: SRG(77,16,0,4).
pub fn m22_graph() -> Result<Graph> {
    Ok(disjointness_graph(&steiner_s3_6_22()?.blocks))
}

/// Hyperovals of one class, adjacent when disjoint: SRG(56,10,0,2).
pub fn gewirtz() -> Result<Graph> {
    Ok(disjointness_graph(steiner_s3_6_22()?.hyperoval_blocks()))
}

/// Vertex 0 is joined to the 22 points (vertices 1..=22); point `p` is
/// joined to every block containing it; blocks (vertices 23..100) are
/// joined when disjoint. SRG(100,22,0,6).
pub fn higman_sims() -> Result<Graph> {
    let s = steiner_s3_6_22()?;
    let pts = s.points;
    let block = |v: usize| s.blocks[v - pts - 1];
    Ok(Graph::from_fn(1 + pts + s.blocks.len(), |u, v| {
        if u == 0 {
            v <= pts
        } else if v <= pts {
            false
        } else if u <= pts {
            block(v) >> (u - 1) & 1 == 1
        } else {
            block(u) & block(v) == 0
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_is_a_field() {
        for x in 1..4u8 {
            assert_eq!((1..4u8).filter(|&y| gf4_mul(x, y) == 1).count(), 1);
            for y in 0..4u8 {
                for z in 0..4u8 {
                    assert_eq!(gf4_mul(x, y ^ z), gf4_mul(x, y) ^ gf4_mul(x, z));
                }
            }
        }
        assert_eq!(gf4_mul(2, 2), 3); // w^2 = w + 1
    }

    #[test]
    fn plane_incidences() {
        let plane = ProjectivePlane4::new();
        assert_eq!(plane.lines.len(), 21);
        assert!(plane.lines.iter().all(|l| l.count_ones() == 5));
        for (i, a) in plane.lines.iter().enumerate() {
            for b in &plane.lines[i + 1..] {
                assert_eq!((a & b).count_ones(), 1);
            }
        }
    }

    #[test]
    fn hyperoval_count_and_classes() {
        let ovals = ProjectivePlane4::new().hyperovals();
        assert_eq!(ovals.len(), 168);
        let classes = hyperoval_classes(&ovals);
        assert_eq!(classes.iter().map(Vec::len).collect::<Vec<_>>(), vec![56, 56, 56]);
        assert_eq!(classes[0][0], ovals[0]);
    }

    #[test]
    fn steiner_system_axioms() {
        let s = steiner_s3_6_22().unwrap();
        assert_eq!(s.blocks.len(), 77);
        s.validate().unwrap();
        assert_eq!(s.block_points(0).len(), 6);
        assert!(s.block_points(0).contains(&INFINITY_POINT));
    }

    #[test]
    fn validate_rejects_broken_system() {
        let mut s = steiner_s3_6_22().unwrap();
        s.blocks[30] = s.blocks[29];
        assert!(matches!(s.validate(), Err(Error::Construction(_))));
    }
}
