//! Integer polynomials (coefficients lowest degree first), with the exact
//! machinery the root-isolation and number-field layers need: content and
//! primitive part, gcd over Q, squarefree part, Sturm chains, Cauchy root
//! bounds and resultants (Sylvester determinant).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::CoreError;
use crate::matrix::IntMatrix;
use crate::rational::{parse_rational, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>, // lowest degree first, no trailing zeros
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// x - r scaled to integer coefficients: den*x - num.
    pub fn linear_from_root(r: &Rational) -> Self {
        Self::new(vec![-r.numer().clone(), r.denom().clone()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of the value at a rational point: -1, 0, 1. Evaluates
    /// den^deg * p(num/den) = sum c_i num^i den^(deg-i) over the integers.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let deg = self.coeffs.len() - 1;
        let mut acc = BigInt::zero();
        let mut num_pow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * &num_pow * x.denom().pow((deg - i) as u32);
            num_pow *= x.numer();
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Monic rational coefficients.
    pub fn monic_coeffs(&self) -> Vec<Rational> {
        let lead = self.leading().expect("nonzero polynomial").clone();
        self.coeffs
            .iter()
            .map(|c| Rational::new(c.clone(), lead.clone()))
            .collect()
    }

    /// Polynomial gcd over Q, returned primitive with positive leading
    /// coefficient; gcd(0, q) = primitive(q).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic_vec();
        let mut b = other.monic_vec();
        if a.is_empty() {
            return other.primitive();
        }
        if b.is_empty() {
            return self.primitive();
        }
        while !b.is_empty() {
            let r = rat_rem(&a, &b);
            a = b;
            b = r;
        }
        from_rational_coeffs(&a).primitive()
    }

    fn monic_vec(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .map(|c| Rational::from(c.clone()))
            .collect()
    }

    /// Squarefree part: p / gcd(p, p').
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.primitive();
        }
        let q = rat_div_exact(&self.monic_vec(), &g.monic_vec());
        from_rational_coeffs(&q).primitive()
    }

    /// Exact division assuming `other` divides `self` over Q.
    pub fn div_exact(&self, other: &Self) -> Self {
        let q = rat_div_exact(&self.monic_vec(), &other.monic_vec());
        from_rational_coeffs(&q).primitive()
    }

    /// Cauchy bound: every real root lies in (-b, b).
    pub fn root_bound(&self) -> Rational {
        let lead = self.leading().expect("nonzero polynomial").abs();
        let max = self
            .coeffs
            .iter()
            .rev()
            .skip(1)
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        Rational::from(BigInt::one()) + Rational::new(max, lead)
    }

    /// Resultant via the Sylvester matrix determinant (exact).
    pub fn resultant(&self, other: &Self) -> BigInt {
        let (m, n) = match (self.degree(), other.degree()) {
            (Some(m), Some(n)) => (m, n),
            _ => return BigInt::zero(),
        };
        if m == 0 {
            return self.coeffs[0].pow(n as u32);
        }
        if n == 0 {
            return other.coeffs[0].pow(m as u32);
        }
        let size = m + n;
        let mut rows = vec![vec![BigInt::zero(); size]; size];
        for i in 0..n {
            for (k, c) in self.coeffs.iter().rev().enumerate() {
                rows[i][i + k] = c.clone();
            }
        }
        for i in 0..m {
            for (k, c) in other.coeffs.iter().rev().enumerate() {
                rows[n + i][i + k] = c.clone();
            }
        }
        IntMatrix::from_bigint_rows(rows).det()
    }

    /// Sturm chain of the squarefree part, as primitive integer polynomials
    /// (positive scaling preserves signs).
    pub fn sturm_chain(&self) -> Vec<IntPolynomial> {
        let p = self.squarefree_part();
        let mut chain = vec![p.clone(), p.derivative().primitive_keep_sign()];
        while chain.last().map_or(false, |q| !q.is_zero()) {
            let n = chain.len();
            let a = &chain[n - 2];
            let b = &chain[n - 1];
            let r = rat_rem(&a.monic_vec(), &b.monic_vec());
            let next = from_rational_coeffs(&r).primitive_keep_sign().neg();
            chain.push(next);
        }
        chain.pop();
        chain
    }

    fn primitive_keep_sign(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.content();
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Number of distinct real roots in the open interval (lo, hi); both
    /// endpoints must not be roots of the squarefree part.
    pub fn count_roots_between(chain: &[IntPolynomial], lo: &Rational, hi: &Rational) -> usize {
        let v_lo = sign_variations(chain, lo);
        let v_hi = sign_variations(chain, hi);
        v_lo.saturating_sub(v_hi)
    }

    /// Parses e.g. "x^3+x-1", "2x^3 - 5x^2 + x + 1", "-x+3/2", "7" with the
    /// given variable name.
    pub fn parse(s: &str, var: char) -> Result<Self, CoreError> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(CoreError::Parse("empty polynomial".into()));
        }
        // Split into signed terms.
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, ch) in cleaned.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') && !cur.ends_with('/') {
                terms.push(cur.clone());
                cur.clear();
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut num_coeffs: Vec<Rational> = Vec::new();
        for term in &terms {
            let (coeff, power) = parse_term(term, var)?;
            if num_coeffs.len() <= power {
                num_coeffs.resize(power + 1, Rational::zero());
            }
            num_coeffs[power] += coeff;
        }
        // Clear denominators to integer coefficients.
        let mut den = BigInt::one();
        for c in &num_coeffs {
            den = den.lcm(c.denom());
        }
        let coeffs = num_coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Ok(Self::new(coeffs))
    }

    /// Renders with the given variable, lowest-degree-last ("x^3+x-1").
    pub fn display_with(&self, var: char) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else if c.is_negative() {
                s.push('-');
            } else {
                s.push('+');
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                s.push_str(&mag.to_string());
            }
            if i > 0 {
                s.push(var);
                if i > 1 {
                    s.push('^');
                    s.push_str(&i.to_string());
                }
            }
        }
        s
    }
}

fn parse_term(term: &str, var: char) -> Result<(Rational, usize), CoreError> {
    let (sign, body) = match term.strip_prefix('-') {
        Some(b) => (-1, b),
        None => (1, term.strip_prefix('+').unwrap_or(term)),
    };
    let bad = || CoreError::Parse(format!("bad term `{term}`"));
    let result = if let Some(pos) = body.find(var) {
        let coeff_str = &body[..pos];
        let coeff = if coeff_str.is_empty() {
            Rational::one()
        } else {
            let c = coeff_str.strip_suffix('*').unwrap_or(coeff_str);
            parse_rational(c)?
        };
        let rest = &body[pos + var.len_utf8()..];
        // rest is "", "^k", "/d", or "^k/d"
        let (pow_str, div_str) = match rest.split_once('/') {
            Some((p, d)) => (p, Some(d)),
            None => (rest, None),
        };
        let power = if pow_str.is_empty() {
            1
        } else {
            let e = pow_str.strip_prefix('^').ok_or_else(bad)?;
            e.parse::<usize>().map_err(|_| bad())?
        };
        let coeff = match div_str {
            Some(d) => coeff / parse_rational(d)?,
            None => coeff,
        };
        (coeff, power)
    } else {
        (parse_rational(body)?, 0)
    };
    Ok((result.0 * Rational::from(BigInt::from(sign)), result.1))
}

pub fn sign_variations(chain: &[IntPolynomial], x: &Rational) -> usize {
    let mut count = 0;
    let mut last = 0;
    for p in chain {
        let s = p.sign_at(x);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

// ---- rational-coefficient helpers (dense, lowest-first) ----

fn rat_trim(v: &mut Vec<Rational>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

/// Remainder of a / b over Q.
fn rat_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r: Vec<Rational> = a.to_vec();
    rat_trim(&mut r);
    let mut bb = b.to_vec();
    rat_trim(&mut bb);
    assert!(!bb.is_empty(), "division by zero polynomial");
    let db = bb.len() - 1;
    let lead = bb[db].clone();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let factor = r[dr].clone() / lead.clone();
        let shift = dr - db;
        for (i, c) in bb.iter().enumerate() {
            let idx = i + shift;
            let v = r[idx].clone() - factor.clone() * c;
            r[idx] = v;
        }
        rat_trim(&mut r);
        if r.len() <= db {
            break;
        }
    }
    r
}

/// Exact quotient a / b over Q (remainder must vanish).
fn rat_div_exact(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r: Vec<Rational> = a.to_vec();
    rat_trim(&mut r);
    let mut bb = b.to_vec();
    rat_trim(&mut bb);
    assert!(!bb.is_empty(), "division by zero polynomial");
    let db = bb.len() - 1;
    let lead = bb[db].clone();
    let mut q = vec![Rational::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = r[dr].clone() / lead.clone();
        let shift = dr - db;
        q[shift] = factor.clone();
        for (i, c) in bb.iter().enumerate() {
            let idx = i + shift;
            let v = r[idx].clone() - factor.clone() * c;
            r[idx] = v;
        }
        rat_trim(&mut r);
    }
    assert!(r.is_empty(), "inexact polynomial division");
    q
}

fn from_rational_coeffs(v: &[Rational]) -> IntPolynomial {
    if v.is_empty() {
        return IntPolynomial::zero();
    }
    let mut den = BigInt::one();
    for c in v {
        den = den.lcm(c.denom());
    }
    IntPolynomial::new(v.iter().map(|c| c.numer() * (&den / c.denom())).collect())
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with('x'))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with('x'))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display_roundtrip() {
        for s in ["x^3+x-1", "2x^3-5x^2+x+1", "x^2-1", "-x+2", "7"] {
            let p = IntPolynomial::parse(s, 'x').unwrap();
            assert_eq!(p.display_with('x'), s.replace(' ', ""));
        }
        let p = IntPolynomial::parse("x/2 + 1/3", 'x').unwrap();
        assert_eq!(p, IntPolynomial::from_i64(&[2, 3]));
    }

    #[test]
    fn arithmetic_and_eval() {
        let p = IntPolynomial::parse("x^3+x-1", 'x').unwrap();
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(p.sign_at(&half), -1);
        assert_eq!(p.eval(&Rational::from(BigInt::from(1))), Rational::one());
        let d = p.derivative();
        assert_eq!(d, IntPolynomial::from_i64(&[1, 0, 3]));
    }

    #[test]
    fn gcd_and_squarefree() {
        let p = IntPolynomial::parse("x^2-1", 'x').unwrap();
        let q = IntPolynomial::parse("x^2-2x+1", 'x').unwrap();
        assert_eq!(p.gcd(&q), IntPolynomial::from_i64(&[-1, 1]));
        let cube = p.mul(&p).mul(&q);
        let sf = cube.squarefree_part();
        // squarefree part of (x-1)^3 (x+1)^2 is (x-1)(x+1)
        assert_eq!(sf, IntPolynomial::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn sturm_counts() {
        let p = IntPolynomial::parse("x^3+x-1", 'x').unwrap();
        let chain = p.sturm_chain();
        let zero = Rational::zero();
        let one = Rational::one();
        assert_eq!(IntPolynomial::count_roots_between(&chain, &zero, &one), 1);
        let lo = Rational::from(BigInt::from(-10));
        let hi = Rational::from(BigInt::from(10));
        assert_eq!(IntPolynomial::count_roots_between(&chain, &lo, &hi), 1);

        let q = IntPolynomial::parse("2x^3-5x^2+x+1", 'x').unwrap();
        let chain = q.sturm_chain();
        assert_eq!(IntPolynomial::count_roots_between(&chain, &lo, &hi), 3);
        assert_eq!(IntPolynomial::count_roots_between(&chain, &zero, &one), 1);
    }

    #[test]
    fn resultants() {
        // Res(x - a, q) = q(a) up to leading normalization
        let p = IntPolynomial::from_i64(&[-3, 1]); // x - 3
        let q = IntPolynomial::from_i64(&[1, 1, 1]); // x^2 + x + 1
        assert_eq!(p.resultant(&q), BigInt::from(13));
        // Res(x^2-2, x^2-3) = (2-3)^2 = 1
        let a = IntPolynomial::from_i64(&[-2, 0, 1]);
        let b = IntPolynomial::from_i64(&[-3, 0, 1]);
        assert_eq!(a.resultant(&b), BigInt::from(1));
    }
}
