use std::fmt;

use super::TlError;

/// A crossingless matching of `bottom + top` boundary points with one dot
/// parity bit per arc.
///
/// Positions (0-based here, 1-based in JSON) run along the bottom left to
/// right, then along the top right to left; the wall sits just before
/// position 0. Arcs are sorted pairs `(i, j)`, `i < j`, sorted by `i`.
/// Every dotted arc is left-exposed: no arc `(k, l)` has `k < i` and `j < l`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Diagram {
    bottom: usize,
    top: usize,
    arcs: Vec<(usize, usize)>,
    dots: Vec<bool>,
}

/// Result of stacking two diagrams.
#[derive(Debug, PartialEq, Eq)]
pub enum Stacked {
    /// A closed loop carried an odd number of dots.
    Zero,
    /// The reduced diagram and the number of (undotted) closed loops.
    Diagram(Diagram, usize),
}

impl Diagram {
    /// Validating constructor; arcs may be given in any order and orientation.
    pub fn new(
        bottom: usize,
        top: usize,
        arcs: Vec<(usize, usize)>,
        dots: Vec<bool>,
    ) -> Result<Self, TlError> {
        let n = bottom + top;
        if arcs.len() != dots.len() {
            return Err(TlError::InvalidDiagram("arcs and dots differ in length".into()));
        }
        if 2 * arcs.len() != n {
            return Err(TlError::InvalidDiagram("not a perfect matching".into()));
        }
        let mut seen = vec![false; n];
        let mut pairs: Vec<((usize, usize), bool)> = Vec::with_capacity(arcs.len());
        for (&(a, b), &d) in arcs.iter().zip(&dots) {
            let (i, j) = (a.min(b), a.max(b));
            if j >= n || i == j || seen[i] || seen[j] {
                return Err(TlError::InvalidDiagram(format!("bad arc ({a}, {b})")));
            }
            seen[i] = true;
            seen[j] = true;
            pairs.push(((i, j), d));
        }
        pairs.sort();
        let d = Self {
            bottom,
            top,
            arcs: pairs.iter().map(|p| p.0).collect(),
            dots: pairs.iter().map(|p| p.1).collect(),
        };
        for (x, &(i, j)) in d.arcs.iter().enumerate() {
            for &(k, l) in &d.arcs[x + 1..] {
                if k < j && j < l {
                    return Err(TlError::InvalidDiagram(format!("arcs ({i}, {j}) and ({k}, {l}) cross")));
                }
            }
        }
        if let Some(x) = d.first_unexposed_dot() {
            return Err(TlError::ClosureViolation(format!(
                "dotted arc {:?} is not left-exposed",
                d.arcs[x]
            )));
        }
        Ok(d)
    }

    /// Trusted constructor for already sorted, valid data.
    pub(crate) fn from_sorted(bottom: usize, top: usize, arcs: Vec<(usize, usize)>, dots: Vec<bool>) -> Self {
        debug_assert!(arcs.windows(2).all(|w| w[0].0 < w[1].0));
        Self { bottom, top, arcs, dots }
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn dots(&self) -> &[bool] {
        &self.dots
    }

    pub fn dot_count(&self) -> usize {
        self.dots.iter().filter(|&&d| d).count()
    }

    /// Identity diagram on `n` strands (bottom `p` joined to top point `p`).
    pub fn identity(n: usize) -> Self {
        let arcs = (0..n).map(|p| (p, 2 * n - 1 - p)).collect();
        Self { bottom: n, top: n, arcs, dots: vec![false; n] }
    }

    /// Boundary position of the top point with left-to-right index `t`.
    pub fn top_position(&self, t: usize) -> usize {
        self.bottom + self.top - 1 - t
    }

    pub fn is_bottom(&self, pos: usize) -> bool {
        pos < self.bottom
    }

    pub fn is_left_exposed(&self, arc: usize) -> bool {
        let (i, j) = self.arcs[arc];
        !self.arcs.iter().any(|&(k, l)| k < i && j < l)
    }

    fn first_unexposed_dot(&self) -> Option<usize> {
        (0..self.arcs.len()).find(|&x| self.dots[x] && !self.is_left_exposed(x))
    }

    /// `partner[p]` and `dot[p]` for every boundary position.
    pub(crate) fn partner_table(&self) -> (Vec<usize>, Vec<bool>) {
        let n = self.bottom + self.top;
        let mut partner = vec![0; n];
        let mut dot = vec![false; n];
        for (&(i, j), &d) in self.arcs.iter().zip(&self.dots) {
            partner[i] = j;
            partner[j] = i;
            dot[i] = d;
            dot[j] = d;
        }
        (partner, dot)
    }

    /// Same arcs with dot parities replaced.
    pub(crate) fn with_dots(&self, dots: Vec<bool>) -> Self {
        Self { bottom: self.bottom, top: self.top, arcs: self.arcs.clone(), dots }
    }

    /// Stacks `upper` on top of `self`; `self.top` must equal `upper.bottom`.
    pub fn stack(&self, upper: &Diagram) -> Result<Stacked, TlError> {
        let (m, k, l) = (self.bottom, self.top, upper.top);
        if k != upper.bottom {
            return Err(TlError::ShapeMismatch { left: k, right: upper.bottom });
        }
        let (fp, fd) = self.partner_table();
        let (gp, gd) = upper.partner_table();
        // middle point t: position m+k-1-t in self, t in upper
        let mut visited = vec![false; k];
        let mut result_partner = vec![usize::MAX; m + l];
        let mut result_dot = vec![false; m + l];

        // Walks from a point on one side until an outer endpoint is reached.
        let walk = |mut in_upper: bool, mut pos: usize, visited: &mut Vec<bool>| -> (usize, bool) {
            let mut parity = false;
            loop {
                if in_upper {
                    parity ^= gd[pos];
                    let p = gp[pos];
                    if p >= k {
                        return (m + (p - k), parity);
                    }
                    visited[p] = true;
                    in_upper = false;
                    pos = m + k - 1 - p;
                } else {
                    parity ^= fd[pos];
                    let p = fp[pos];
                    if p < m {
                        return (p, parity);
                    }
                    let t = m + k - 1 - p;
                    visited[t] = true;
                    in_upper = true;
                    pos = t;
                }
            }
        };

        for r in 0..m + l {
            if result_partner[r] != usize::MAX {
                continue;
            }
            let (end, parity) = if r < m {
                walk(false, r, &mut visited)
            } else {
                walk(true, k + (r - m), &mut visited)
            };
            result_partner[r] = end;
            result_partner[end] = r;
            result_dot[r] = parity;
            result_dot[end] = parity;
        }

        let mut loops = 0;
        for t0 in 0..k {
            if visited[t0] {
                continue;
            }
            let mut parity = false;
            let mut t = t0;
            loop {
                visited[t] = true;
                // cross the upper diagram from middle point t
                parity ^= gd[t];
                let t2 = gp[t];
                visited[t2] = true;
                // cross the lower diagram from middle point t2
                let p = m + k - 1 - t2;
                parity ^= fd[p];
                t = m + k - 1 - fp[p];
                if t == t0 {
                    break;
                }
            }
            if parity {
                return Ok(Stacked::Zero);
            }
            loops += 1;
        }

        let mut arcs = Vec::with_capacity((m + l) / 2);
        let mut dots = Vec::with_capacity((m + l) / 2);
        for (r, &p) in result_partner.iter().enumerate() {
            if r < p {
                arcs.push((r, p));
                dots.push(result_dot[r]);
            }
        }
        let d = Diagram::from_sorted(m, l, arcs, dots);
        if let Some(x) = d.first_unexposed_dot() {
            return Err(TlError::ClosureViolation(format!(
                "stacking left dotted arc {:?} enclosed",
                d.arcs[x]
            )));
        }
        Ok(Stacked::Diagram(d, loops))
    }

    /// Appends `r` undotted vertical strands on the right.
    pub fn tensor_right_identity(&self, r: usize) -> Diagram {
        let (m, k) = (self.bottom, self.top);
        let (nm, nk) = (m + r, k + r);
        let remap = |p: usize| if p < m { p } else { nm + nk - 1 - (m + k - 1 - p) };
        let mut pairs: Vec<((usize, usize), bool)> = self
            .arcs
            .iter()
            .zip(&self.dots)
            .map(|(&(i, j), &d)| {
                let (a, b) = (remap(i), remap(j));
                ((a.min(b), a.max(b)), d)
            })
            .collect();
        for s in 0..r {
            // new bottom m+s, new top index k+s
            pairs.push(((m + s, nm + nk - 1 - (k + s)), false));
        }
        pairs.sort();
        Diagram::from_sorted(
            nm,
            nk,
            pairs.iter().map(|p| p.0).collect(),
            pairs.iter().map(|p| p.1).collect(),
        )
    }

    /// Side-by-side juxtaposition `self ⊗ other`; fails if a dot of `other`
    /// ends up enclosed.
    pub fn tensor(&self, other: &Diagram) -> Result<Diagram, TlError> {
        let (m1, k1, m2, k2) = (self.bottom, self.top, other.bottom, other.top);
        let (m, k) = (m1 + m2, k1 + k2);
        let left = |p: usize| if p < m1 { p } else { m + k - 1 - (m1 + k1 - 1 - p) };
        let right = |p: usize| if p < m2 { m1 + p } else { m + p - m2 };
        let mut arcs = Vec::new();
        let mut dots = Vec::new();
        for (&(i, j), &d) in self.arcs.iter().zip(&self.dots) {
            arcs.push((left(i), left(j)));
            dots.push(d);
        }
        for (&(i, j), &d) in other.arcs.iter().zip(&other.dots) {
            arcs.push((right(i), right(j)));
            dots.push(d);
        }
        Diagram::new(m, k, arcs, dots)
    }
}

/// All basis diagrams of Hom(m, k): every crossingless matching with every
/// subset of its left-exposed arcs dotted, sorted. Empty when m + k is odd.
pub fn enumerate_basis(m: usize, k: usize) -> Vec<Diagram> {
    let n = m + k;
    if n % 2 == 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for arcs in matchings(n) {
        let base = Diagram::from_sorted(m, k, arcs, vec![false; n / 2]);
        let exposed: Vec<usize> = (0..base.arcs.len()).filter(|&x| base.is_left_exposed(x)).collect();
        for mask in 0u64..(1u64 << exposed.len()) {
            let mut dots = vec![false; n / 2];
            for (b, &x) in exposed.iter().enumerate() {
                dots[x] = mask >> b & 1 == 1;
            }
            out.push(base.with_dots(dots));
        }
    }
    out.sort();
    out
}

/// Noncrossing perfect matchings of 0..n as sorted arc lists.
fn matchings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for j in (lo + 1..hi).step_by(2) {
            let inner = rec(lo + 1, j);
            let outer = rec(j + 1, hi);
            for a in &inner {
                for b in &outer {
                    let mut arcs = Vec::with_capacity(1 + a.len() + b.len());
                    arcs.push((lo, j));
                    arcs.extend_from_slice(a);
                    arcs.extend_from_slice(b);
                    arcs.sort();
                    out.push(arcs);
                }
            }
        }
        out
    }
    rec(0, n)
}

impl fmt::Display for Diagram {
    /// `[1-4*, 2-3]`: 1-based arcs, `*` marks a dot.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (x, (&(i, j), &d)) in self.arcs.iter().zip(&self.dots).enumerate() {
            if x > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}{}", i + 1, j + 1, if d { "*" } else { "" })?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn basis_counts() {
        assert_eq!(enumerate_basis(1, 1).len(), 2);
        assert_eq!(enumerate_basis(2, 2).len(), 6);
        assert_eq!(enumerate_basis(0, 2).len(), 2);
        assert!(enumerate_basis(1, 2).is_empty());
        for n in 0..=6 {
            assert_eq!(enumerate_basis(n, n).len() as u64, binom(2 * n as u64, n as u64));
        }
        assert_eq!(enumerate_basis(3, 5).len() as u64, binom(8, 4));
    }

    #[test]
    fn basis_is_sorted_and_distinct() {
        let b = enumerate_basis(3, 3);
        assert!(b.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn nested_dot_is_rejected() {
        // cup-cap at strands 1,2 of Hom(2,2) nested inside nothing; Hom(0,4) with
        // arcs (0,3),(1,2): the inner arc is enclosed.
        assert!(matches!(
            Diagram::new(0, 4, vec![(0, 3), (1, 2)], vec![false, true]),
            Err(TlError::ClosureViolation(_))
        ));
        assert!(Diagram::new(0, 4, vec![(0, 3), (1, 2)], vec![true, false]).is_ok());
    }

    #[test]
    fn crossing_is_rejected() {
        assert!(matches!(
            Diagram::new(2, 2, vec![(0, 2), (1, 3)], vec![false, false]),
            Err(TlError::InvalidDiagram(_))
        ));
    }

    #[test]
    fn identity_stacks_neutrally() {
        for d in enumerate_basis(2, 4) {
            let id2 = Diagram::identity(2);
            let id4 = Diagram::identity(4);
            assert_eq!(id2.stack(&d).unwrap(), Stacked::Diagram(d.clone(), 0));
            assert_eq!(d.stack(&id4).unwrap(), Stacked::Diagram(d.clone(), 0));
        }
    }

    #[test]
    fn right_identity_of_empty_is_identity() {
        assert_eq!(Diagram::identity(0).tensor_right_identity(3), Diagram::identity(3));
        assert_eq!(Diagram::identity(2).tensor_right_identity(1), Diagram::identity(3));
    }
}
