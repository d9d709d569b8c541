//! Permutations with the column-permutation-matrix convention used by the
//! map constructions: the matrix of pi has a 1 at (i, pi(i)), so that for a
//! matrix V with columns (c_1 .. c_d), V * P has columns (c_{pi^-1(1)} ..
//! c_{pi^-1(d)}), and P(p) * P(q) = P(p then q).

use num_bigint::BigInt;
use num_traits::One;
use std::fmt;

use crate::error::CoreError;
use crate::matrix::IntMatrix;

/// A bijection on {1, ..., d}, stored as 0-based images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    img: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            img: (0..degree).collect(),
        }
    }

    /// From 1-based images, validating bijectivity.
    pub fn from_images(images: &[usize]) -> Result<Self, CoreError> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &v in images {
            if v < 1 || v > d || seen[v - 1] {
                return Err(CoreError::Parse(format!(
                    "not a permutation of 1..{d}: {images:?}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            img: images.iter().map(|&v| v - 1).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// 1-based image of a 1-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` first, then `other`; matches matrix product P(self) * P(other).
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            img: self.img.iter().map(|&v| other.img[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut img = vec![0usize; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v] = i;
        }
        Permutation { img }
    }

    /// Column-permutation matrix: entry (i, pi(i)) = 1.
    pub fn matrix(&self) -> IntMatrix {
        let d = self.degree();
        let mut m = IntMatrix::zero(d);
        for (i, &v) in self.img.iter().enumerate() {
            m.set(i, v, BigInt::one());
        }
        m
    }

    /// 1-based one-line notation, e.g. [1,3,2].
    pub fn one_line(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v + 1).collect()
    }

    /// Whether pi fixes both 1 and d.
    pub fn fixes_ends(&self) -> bool {
        let d = self.degree();
        self.apply(1) == 1 && self.apply(d) == d
    }

    /// All permutations of the given degree in lexicographic one-line order.
    pub fn all(degree: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = (0..degree).collect::<Vec<_>>();
        loop {
            out.push(Permutation { img: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..degree.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..degree).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// Parses "e", cycle notation "(12)", "(1 3 2)", "(12)(3 4)", or one-line
    /// notation "1,3,2". Cycle entries may be separated by spaces or commas;
    /// single digits may be juxtaposed.
    pub fn parse(s: &str, degree: usize) -> Result<Self, CoreError> {
        let t = s.trim();
        if t.is_empty() {
            return Err(CoreError::Parse("empty permutation".into()));
        }
        if t == "e" || t == "()" || t == "id" {
            return Ok(Self::identity(degree));
        }
        if !t.starts_with('(') {
            // one-line notation
            let parts: Result<Vec<usize>, _> = t.split(',').map(|p| p.trim().parse()).collect();
            let parts = parts.map_err(|_| CoreError::Parse(format!("bad one-line `{t}`")))?;
            if parts.len() != degree {
                return Err(CoreError::Parse(format!(
                    "one-line `{t}` has length {} but degree is {degree}",
                    parts.len()
                )));
            }
            return Self::from_images(&parts);
        }
        let mut perm = Self::identity(degree);
        let mut rest = t;
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(CoreError::Parse(format!("bad cycle notation `{t}`")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| CoreError::Parse(format!("unclosed cycle in `{t}`")))?;
            let body = &rest[1..close];
            let cycle = parse_cycle_body(body, degree)?;
            perm = perm.then(&cycle_to_perm(&cycle, degree)?);
            rest = rest[close + 1..].trim_start();
        }
        Ok(perm)
    }
}

fn parse_cycle_body(body: &str, degree: usize) -> Result<Vec<usize>, CoreError> {
    let mut entries = Vec::new();
    if body.contains(' ') || body.contains(',') {
        for tok in body.split(|c| c == ' ' || c == ',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let v: usize = tok
                .parse()
                .map_err(|_| CoreError::Parse(format!("bad cycle entry `{tok}`")))?;
            entries.push(v);
        }
    } else {
        // juxtaposed single digits, e.g. "132"
        for ch in body.chars() {
            let v = ch
                .to_digit(10)
                .ok_or_else(|| CoreError::Parse(format!("bad cycle digit `{ch}`")))?;
            entries.push(v as usize);
        }
    }
    if entries.iter().any(|&v| v < 1 || v > degree) {
        return Err(CoreError::Parse(format!(
            "cycle `({body})` out of range for degree {degree}"
        )));
    }
    Ok(entries)
}

fn cycle_to_perm(cycle: &[usize], degree: usize) -> Result<Permutation, CoreError> {
    let mut images: Vec<usize> = (1..=degree).collect();
    if cycle.len() > 1 {
        let mut seen = vec![false; degree];
        for &v in cycle {
            if seen[v - 1] {
                return Err(CoreError::Parse(format!("repeated entry in cycle {cycle:?}")));
            }
            seen[v - 1] = true;
        }
        for w in cycle.windows(2) {
            images[w[0] - 1] = w[1];
        }
        images[cycle[cycle.len() - 1] - 1] = cycle[0];
    }
    Permutation::from_images(&images)
}

impl fmt::Display for Permutation {
    /// Compact cycle notation: "e", "(12)", "(132)"; entries >= 10 are
    /// space-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        let d = self.degree();
        let mut seen = vec![false; d];
        for start in 1..=d {
            if seen[start - 1] || self.apply(start) == start {
                seen[start - 1] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut cur = self.apply(start);
            while cur != start {
                cycle.push(cur);
                seen[cur - 1] = true;
                cur = self.apply(cur);
            }
            write!(f, "(")?;
            let spaced = cycle.iter().any(|&v| v >= 10);
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 && spaced {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IntMatrix;

    #[test]
    fn matrix_convention_fixtures() {
        // (1 3 2) -> [[0,0,1],[1,0,0],[0,1,0]]
        let p = Permutation::parse("(132)", 3).unwrap();
        assert_eq!(
            p.matrix(),
            IntMatrix::from_rows(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]])
        );
        // identity
        assert_eq!(
            Permutation::identity(3).matrix(),
            IntMatrix::identity(3)
        );
        // (2 3) -> [[1,0,0],[0,0,1],[0,1,0]]
        let q = Permutation::parse("(2 3)", 3).unwrap();
        assert_eq!(
            q.matrix(),
            IntMatrix::from_rows(&[vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]])
        );
    }

    #[test]
    fn compose_matches_matrix_product() {
        let p = Permutation::parse("(123)", 3).unwrap();
        let q = Permutation::parse("(12)", 3).unwrap();
        let pq = p.then(&q);
        assert_eq!(pq.matrix(), &p.matrix() * &q.matrix());
    }

    #[test]
    fn inverse_matrix_is_identity() {
        for p in Permutation::all(4) {
            let prod = &p.matrix() * &p.inverse().matrix();
            assert!(prod.is_identity());
        }
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for s in ["e", "(12)", "(132)", "(12)(3 4)".trim()] {
            let d = 4;
            let p = Permutation::parse(s, d).unwrap();
            let q = Permutation::parse(&p.to_string(), d).unwrap();
            assert_eq!(p, q);
        }
        let onel = Permutation::parse("1,3,2", 3).unwrap();
        assert_eq!(onel, Permutation::parse("(23)", 3).unwrap());
    }

    #[test]
    fn all_is_lexicographic() {
        let all = Permutation::all(3);
        assert_eq!(all.len(), 6);
        assert!(all[0].is_identity());
        assert_eq!(all[1].one_line(), vec![1, 3, 2]);
        assert_eq!(all[5].one_line(), vec![3, 2, 1]);
    }
}
