use super::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentKind {
    /// Ends at another vertex of degree at least three.
    Internal,
    /// Ends at a leaf.
    Pendant,
}

/// A maximal path `v0 .. vk` leaving a branch vertex `v0` through degree-2
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSegment {
    pub vertices: Vec<usize>,
    pub kind: SegmentKind,
}

impl PathSegment {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSegments {
    /// No vertex has degree three or more.
    pub is_path: bool,
    pub segments: Vec<PathSegment>,
}

/// All maximal pendant and internal paths of `t`.
///
/// Internal paths are reported once, from their smaller-id end.
pub fn path_segments(t: &Tree) -> PathSegments {
    let branch: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) >= 3).collect();
    let mut segments = Vec::new();
    for &start in &branch {
        for &first in t.neighbors(start) {
            let mut vertices = vec![start, first];
            let (mut prev, mut cur) = (start, first);
            while t.degree(cur) == 2 {
                let next = t.neighbors(cur).iter().copied().find(|&x| x != prev).unwrap();
                prev = cur;
                cur = next;
                vertices.push(cur);
            }
            let kind = if t.degree(cur) == 1 { SegmentKind::Pendant } else { SegmentKind::Internal };
            if kind == SegmentKind::Internal && cur < start {
                continue;
            }
            segments.push(PathSegment { vertices, kind });
        }
    }
    PathSegments { is_path: branch.is_empty(), segments }
}
