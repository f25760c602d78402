use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of unordered vertex pairs of a complete graph on `k` vertices.
#[inline]
pub fn edge_count(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Position of the pair `{p, q}` (zero-based, `p != q`) in the lexicographic
/// pair order `(0,1), (0,2), .., (0,k-1), (1,2), ..`.
#[inline]
pub fn pair_index(k: usize, p: usize, q: usize) -> usize {
    let (a, b) = if p < q { (p, q) } else { (q, p) };
    a * (2 * k - a - 1) / 2 + (b - a - 1)
}

/// All pairs `(p, q)` with `p < q`, in storage order.
pub fn pairs(k: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(edge_count(k));
    for p in 0..k {
        for q in p + 1..k {
            out.push((p, q));
        }
    }
    out
}

/// A colored oriented edge `src → dst` (zero-based vertices, colors start at 1).
///
/// Field order fixes the derived ordering: by color, then by source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub color: u32,
    pub src: usize,
    pub dst: usize,
}

impl Arrow {
    pub fn new(src: usize, dst: usize, color: u32) -> Self {
        Arrow { color, src, dst }
    }

    pub fn reversed(self) -> Self {
        Arrow { color: self.color, src: self.dst, dst: self.src }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeState {
    /// Uncolored and unoriented.
    Blank,
    Arrow(Arrow),
}

impl EdgeState {
    pub fn arrow(self) -> Option<Arrow> {
        match self {
            EdgeState::Blank => None,
            EdgeState::Arrow(a) => Some(a),
        }
    }

    pub fn is_blank(self) -> bool {
        matches!(self, EdgeState::Blank)
    }

    pub fn color(self) -> Option<u32> {
        self.arrow().map(|a| a.color)
    }

    /// The single-edge order: a blank stays blank; `a →i b` may become blank,
    /// `a →j b` with `j >= i`, or `b →j a` with `j > i`.
    pub fn leq(self, other: EdgeState) -> bool {
        match (self, other) {
            (EdgeState::Blank, other) => other.is_blank(),
            (EdgeState::Arrow(_), EdgeState::Blank) => true,
            (EdgeState::Arrow(a), EdgeState::Arrow(b)) => {
                if a.src == b.src {
                    b.color >= a.color
                } else {
                    b.color > a.color
                }
            }
        }
    }
}

/// A complete graph on `k` vertices whose edges are blank or colored and oriented.
///
/// Construction only checks the shape (one state per pair, arrows matching
/// their pair, colors positive); the operad membership conditions live in
/// [`is_member`](crate::kgraph::is_member).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompleteGraphElement {
    k: usize,
    edges: Vec<EdgeState>,
}

impl CompleteGraphElement {
    pub fn new(k: usize, edges: Vec<EdgeState>) -> Result<Self> {
        if edges.len() != edge_count(k) {
            return Err(Error::SizeMismatch(format!(
                "{} edge states for k = {k}, expected {}",
                edges.len(),
                edge_count(k)
            )));
        }
        for ((p, q), state) in pairs(k).into_iter().zip(&edges) {
            if let EdgeState::Arrow(a) = state {
                let ok = (a.src == p && a.dst == q) || (a.src == q && a.dst == p);
                if !ok {
                    return Err(Error::Malformed(format!(
                        "arrow {}→{} stored under pair {{{},{}}}",
                        a.src + 1,
                        a.dst + 1,
                        p + 1,
                        q + 1
                    )));
                }
                if a.color == 0 {
                    return Err(Error::Malformed("colors start at 1".into()));
                }
            }
        }
        Ok(CompleteGraphElement { k, edges })
    }

    pub(crate) fn from_parts_unchecked(k: usize, edges: Vec<EdgeState>) -> Self {
        debug_assert_eq!(edges.len(), edge_count(k));
        CompleteGraphElement { k, edges }
    }

    /// All edges blank.
    pub fn blank(k: usize) -> Self {
        CompleteGraphElement { k, edges: vec![EdgeState::Blank; edge_count(k)] }
    }

    /// Builds from one-based `(src, dst, color)` triples; unlisted pairs are blank.
    pub fn from_arrows(k: usize, arrows: &[(usize, usize, u32)]) -> Result<Self> {
        let mut edges = vec![EdgeState::Blank; edge_count(k)];
        let mut set = vec![false; edges.len()];
        for &(s, d, c) in arrows {
            if s == 0 || s > k {
                return Err(Error::OutOfRange { index: s, bound: k });
            }
            if d == 0 || d > k {
                return Err(Error::OutOfRange { index: d, bound: k });
            }
            if s == d {
                return Err(Error::Malformed(format!("loop at vertex {s}")));
            }
            let idx = pair_index(k, s - 1, d - 1);
            if set[idx] {
                return Err(Error::Malformed(format!("pair {{{s},{d}}} given twice")));
            }
            set[idx] = true;
            edges[idx] = EdgeState::Arrow(Arrow::new(s - 1, d - 1, c));
        }
        Self::new(k, edges)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[EdgeState] {
        &self.edges
    }

    /// State of the pair `{p, q}` (zero-based).
    pub fn edge(&self, p: usize, q: usize) -> EdgeState {
        self.edges[pair_index(self.k, p, q)]
    }

    pub fn arrows(&self) -> impl Iterator<Item = Arrow> + '_ {
        self.edges.iter().filter_map(|e| e.arrow())
    }

    pub fn has_blank(&self) -> bool {
        self.edges.iter().any(|e| e.is_blank())
    }

    pub fn max_color(&self) -> u32 {
        self.arrows().map(|a| a.color).max().unwrap_or(0)
    }

    /// Sets of vertex pairs carrying an arrow, as a mask over storage positions.
    pub fn arrow_mask(&self) -> Vec<bool> {
        self.edges.iter().map(|e| !e.is_blank()).collect()
    }

    /// Replaces every arrow color through `f`.
    pub fn recolor(&self, f: impl Fn(u32) -> u32) -> CompleteGraphElement {
        let edges = self
            .edges
            .iter()
            .map(|e| match e {
                EdgeState::Blank => EdgeState::Blank,
                EdgeState::Arrow(a) => EdgeState::Arrow(Arrow { color: f(a.color), ..*a }),
            })
            .collect();
        CompleteGraphElement { k: self.k, edges }
    }

    /// Blanks every edge for which `blank` returns true.
    pub fn blank_where(&self, mut blank: impl FnMut(usize, EdgeState) -> bool) -> CompleteGraphElement {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, &e)| if blank(i, e) { EdgeState::Blank } else { e })
            .collect();
        CompleteGraphElement { k: self.k, edges }
    }
}

impl fmt::Display for CompleteGraphElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, ((p, q), e)) in pairs(self.k).into_iter().zip(&self.edges).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match e {
                EdgeState::Blank => write!(f, "{}–{}", p + 1, q + 1)?,
                EdgeState::Arrow(a) => write!(f, "{}→{}^{}", a.src + 1, a.dst + 1, a.color)?,
            }
        }
        write!(f, "}}")
    }
}

// JSON: {"k": int, "edges": [{"u": int, "v": int, "state": "blank" | {"src", "dst", "color"}}]}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum BlankTag {
    Blank,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum StateRepr {
    Blank(BlankTag),
    Arrow { src: usize, dst: usize, color: u32 },
}

#[derive(Serialize, Deserialize)]
struct EdgeRepr {
    u: usize,
    v: usize,
    state: StateRepr,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    k: usize,
    edges: Vec<EdgeRepr>,
}

impl Serialize for CompleteGraphElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let edges = pairs(self.k)
            .into_iter()
            .zip(&self.edges)
            .map(|((p, q), e)| EdgeRepr {
                u: p + 1,
                v: q + 1,
                state: match e {
                    EdgeState::Blank => StateRepr::Blank(BlankTag::Blank),
                    EdgeState::Arrow(a) => {
                        StateRepr::Arrow { src: a.src + 1, dst: a.dst + 1, color: a.color }
                    }
                },
            })
            .collect();
        GraphRepr { k: self.k, edges }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CompleteGraphElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = GraphRepr::deserialize(d)?;
        let k = repr.k;
        let mut edges = vec![None; edge_count(k)];
        for e in repr.edges {
            if e.u == 0 || e.v == 0 || e.u > k || e.v > k || e.u == e.v {
                return Err(D::Error::custom(format!("bad pair {{{},{}}}", e.u, e.v)));
            }
            let idx = pair_index(k, e.u - 1, e.v - 1);
            if edges[idx].is_some() {
                return Err(D::Error::custom(format!("pair {{{},{}}} listed twice", e.u, e.v)));
            }
            edges[idx] = Some(match e.state {
                StateRepr::Blank(_) => EdgeState::Blank,
                StateRepr::Arrow { src, dst, color } => {
                    if src == 0 || dst == 0 {
                        return Err(D::Error::custom("vertices are one-based"));
                    }
                    EdgeState::Arrow(Arrow::new(src - 1, dst - 1, color))
                }
            });
        }
        let edges: Option<Vec<_>> = edges.into_iter().collect();
        let edges = edges.ok_or_else(|| D::Error::custom("missing edge states"))?;
        CompleteGraphElement::new(k, edges).map_err(D::Error::custom)
    }
}
