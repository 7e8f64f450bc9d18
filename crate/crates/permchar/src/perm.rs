//! Permutations of `{0, …, n−1}` stored as image tables, with 1-based
//! disjoint-cycle notation at the boundary.

use crate::error::{Error, Result};
use std::fmt;

/// A permutation of the points `0..degree`, stored as its image table:
/// point `i` is sent to `images[i]`.
///
/// The derived ordering is lexicographic on the image table. Under it the
/// identity is the minimum permutation of every degree, which is what makes
/// "minimal representative" and "minimal witness" well defined and
/// reproducible everywhere else in the crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity on `0..degree`.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from a full image table (0-based).
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::NotABijection {
                reason: "empty image table".into(),
            });
        }
        let mut seen = vec![false; images.len()];
        for &img in &images {
            if img >= images.len() {
                return Err(Error::NotABijection {
                    reason: format!("image {img} out of range for degree {}", images.len()),
                });
            }
            if seen[img] {
                return Err(Error::NotABijection {
                    reason: format!("image {img} occurs twice"),
                });
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based disjoint-cycle notation such as `"(1 3)(2 4)"`.
    ///
    /// `"()"` denotes the identity. Every point must lie in `1..=degree`
    /// and no point may occur twice anywhere in the expression, so the
    /// cycles are disjoint by construction.
    pub fn from_cycles(text: &str, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ParseError {
                msg: "degree must be at least 1".into(),
            });
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        let mut chars = text.char_indices().peekable();
        let mut cycles_read = 0usize;
        loop {
            while matches!(chars.peek(), Some((_, c)) if c.is_whitespace()) {
                chars.next();
            }
            match chars.next() {
                None => break,
                Some((_, '(')) => {}
                Some((_, c)) => {
                    return Err(Error::ParseError {
                        msg: format!("expected '(' but found {c:?}"),
                    })
                }
            }
            let mut cycle: Vec<usize> = Vec::new();
            loop {
                while matches!(chars.peek(), Some((_, c)) if c.is_whitespace()) {
                    chars.next();
                }
                match chars.peek().copied() {
                    None => {
                        return Err(Error::ParseError {
                            msg: "unbalanced '('".into(),
                        })
                    }
                    Some((_, ')')) => {
                        chars.next();
                        break;
                    }
                    Some((start, c)) if c == '-' || c.is_ascii_digit() => {
                        chars.next();
                        let mut end = start + c.len_utf8();
                        while let Some(&(i, d)) = chars.peek() {
                            if d.is_ascii_digit() {
                                end = i + d.len_utf8();
                                chars.next();
                            } else {
                                break;
                            }
                        }
                        let token = &text[start..end];
                        let value: i64 = token.parse().map_err(|_| Error::ParseError {
                            msg: format!("invalid point {token:?}"),
                        })?;
                        if value < 1 || value > degree as i64 {
                            return Err(Error::PointOutOfRange {
                                point: value,
                                degree,
                            });
                        }
                        let p = (value - 1) as usize;
                        if seen[p] {
                            return Err(Error::RepeatedPoint {
                                point: value as usize,
                            });
                        }
                        seen[p] = true;
                        cycle.push(p);
                    }
                    Some((_, c)) => {
                        return Err(Error::ParseError {
                            msg: format!("unexpected character {c:?} in cycle"),
                        })
                    }
                }
            }
            cycles_read += 1;
            for k in 0..cycle.len() {
                images[cycle[k]] = cycle[(k + 1) % cycle.len()];
            }
        }
        if cycles_read == 0 {
            return Err(Error::ParseError {
                msg: "empty cycle notation".into(),
            });
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of one point.
    pub fn image(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` followed by `other`: the product maps `i` to
    /// `other(self(i))`. Composition is left-to-right everywhere in this
    /// crate.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul(other))
    }

    /// [`compose`](Self::compose) for operands already known to share a
    /// degree.
    pub(crate) fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img] = i;
        }
        Permutation { images: inv }
    }

    /// Order of the permutation: the least common multiple of its cycle
    /// lengths.
    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len()))
    }

    /// Disjoint cycles of length at least two, 0-based. Each cycle starts
    /// at its minimal point and cycles are ordered by minimal point, so
    /// the decomposition is canonical.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut visited = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            if self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            let mut p = self.images[start];
            while p != start {
                visited[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    /// 1-based disjoint-cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
