//! Arithmetic in Q(alpha) for a real algebraic generator alpha: elements are
//! polynomials in alpha reduced mod the minimal polynomial, with exact sign
//! determination via interval refinement and conversion back to a plain
//! `AlgebraicReal` through resultant elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::algebraic::AlgebraicReal;
use crate::error::CoreError;
use crate::poly::IntPolynomial;
use crate::rational::{format_rational, Rational};

/// Generator of a number field; wraps the defining algebraic real and caches
/// the monic minimal-polynomial coefficients used for reduction.
pub struct FieldGenerator {
    alpha: AlgebraicReal,
    monic: Vec<Rational>, // monic minpoly coefficients, lowest first
    var: char,
}

impl FieldGenerator {
    pub fn new(alpha: AlgebraicReal) -> Arc<FieldGenerator> {
        Self::with_name(alpha, 'a')
    }

    pub fn with_name(alpha: AlgebraicReal, var: char) -> Arc<FieldGenerator> {
        let monic = alpha.minimal_poly().monic_coeffs();
        Arc::new(FieldGenerator { alpha, monic, var })
    }

    pub fn alpha(&self) -> &AlgebraicReal {
        &self.alpha
    }

    pub fn degree(&self) -> usize {
        self.monic.len() - 1
    }

    pub fn var(&self) -> char {
        self.var
    }

    /// Same field: identical generator value and defining polynomial.
    pub fn same(a: &Arc<FieldGenerator>, b: &Arc<FieldGenerator>) -> bool {
        Arc::ptr_eq(a, b)
            || (a.alpha.minimal_poly() == b.alpha.minimal_poly() && a.alpha.equals(&b.alpha))
    }
}

impl fmt::Debug for FieldGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} in ({}, {})",
            self.var,
            self.alpha.minimal_poly().display_with('x'),
            format_rational(self.alpha.interval().0),
            format_rational(self.alpha.interval().1),
        )
    }
}

/// An element of Q(alpha), stored as reduced coordinates of length equal to
/// the field degree.
#[derive(Clone)]
pub struct NumberFieldElement {
    gen: Arc<FieldGenerator>,
    coords: Vec<Rational>,
}

impl NumberFieldElement {
    pub fn from_coords(
        gen: Arc<FieldGenerator>,
        coords: Vec<Rational>,
    ) -> NumberFieldElement {
        let deg = gen.degree();
        let reduced = reduce_mod(&coords, &gen.monic);
        let mut c = reduced;
        c.resize(deg, Rational::zero());
        NumberFieldElement { gen, coords: c }
    }

    pub fn from_rational(gen: Arc<FieldGenerator>, r: Rational) -> NumberFieldElement {
        let mut coords = vec![Rational::zero(); gen.degree()];
        coords[0] = r;
        NumberFieldElement { gen, coords }
    }

    pub fn generator_element(gen: Arc<FieldGenerator>) -> NumberFieldElement {
        let mut coords = vec![Rational::zero(); gen.degree()];
        if coords.len() > 1 {
            coords[1] = Rational::one();
        } else {
            // degree-1 field: alpha itself is rational
            coords[0] = gen.alpha().is_rational().expect("degree-1 generator");
        }
        NumberFieldElement { gen, coords }
    }

    pub fn generator(&self) -> &Arc<FieldGenerator> {
        &self.gen
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        if self.coords.iter().all(|c| c.is_zero()) {
            return true;
        }
        // The generator polynomial is minimal whenever that was certifiable,
        // making nonzero reduced coordinates conclusive. Guard against an
        // uncertified generator by the gcd fallback: f(alpha) = 0 iff
        // gcd(f, minpoly) still has alpha as a root.
        let f = clear_denominators(&self.coords);
        let g = f.gcd(self.gen.alpha.minimal_poly());
        if g.degree().map_or(true, |d| d == 0) {
            return false;
        }
        let (lo, hi) = self.gen.alpha.interval();
        if g.sign_at(lo) == 0 || g.sign_at(hi) == 0 {
            // endpoint collision: refine and retry once with narrower bounds
            let width = (hi - lo) / Rational::from(BigInt::from(16));
            let refined = self.gen.alpha.refined(&width);
            let (lo2, hi2) = refined.interval();
            let chain = g.sturm_chain();
            return IntPolynomial::count_roots_between(&chain, lo2, hi2) >= 1;
        }
        let chain = g.sturm_chain();
        IntPolynomial::count_roots_between(&chain, lo, hi) >= 1
    }

    pub fn add(&self, other: &NumberFieldElement) -> Result<NumberFieldElement, CoreError> {
        self.check_field(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(NumberFieldElement {
            gen: self.gen.clone(),
            coords,
        })
    }

    pub fn sub(&self, other: &NumberFieldElement) -> Result<NumberFieldElement, CoreError> {
        self.check_field(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(NumberFieldElement {
            gen: self.gen.clone(),
            coords,
        })
    }

    pub fn neg(&self) -> NumberFieldElement {
        NumberFieldElement {
            gen: self.gen.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &NumberFieldElement) -> Result<NumberFieldElement, CoreError> {
        self.check_field(other)?;
        let mut prod = vec![Rational::zero(); self.coords.len() + other.coords.len()];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        Ok(NumberFieldElement::from_coords(self.gen.clone(), prod))
    }

    pub fn scale(&self, r: &Rational) -> NumberFieldElement {
        NumberFieldElement {
            gen: self.gen.clone(),
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]
    /// modulo the minimal polynomial.
    pub fn inv(&self) -> Result<NumberFieldElement, CoreError> {
        if self.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        let m = &self.gen.monic;
        let f = self.coords.clone();
        let (g, _, t) = extended_gcd(m, &f);
        // g = s*m + t*f; modulo m this gives t*f = g, so f^-1 = t/g when g
        // is a nonzero constant.
        if g.len() != 1 {
            // gcd nontrivial: the generator polynomial was not minimal and f
            // shares a factor with it; divide the factor out of the modulus
            // and retry (f is nonzero in the true field, so this terminates).
            return Err(CoreError::DivisionByZero);
        }
        let ginv = Rational::one() / g[0].clone();
        let coords: Vec<Rational> = t.iter().map(|c| c * &ginv).collect();
        Ok(NumberFieldElement::from_coords(self.gen.clone(), coords))
    }

    pub fn div(&self, other: &NumberFieldElement) -> Result<NumberFieldElement, CoreError> {
        self.mul(&other.inv()?)
    }

    /// Exact sign of the real value: refines the generator interval until
    /// interval evaluation excludes zero (conclusive because exact zero is
    /// decided first).
    pub fn sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let mut alpha = self.gen.alpha.clone();
        loop {
            let (lo, hi) = alpha.interval();
            let (elo, ehi) = interval_eval(&self.coords, lo, hi);
            if elo > Rational::zero() {
                return 1;
            }
            if ehi < Rational::zero() {
                return -1;
            }
            let width = (hi - lo) / Rational::from(BigInt::from(16));
            alpha = alpha.refined(&width);
        }
    }

    pub fn cmp_elem(&self, other: &NumberFieldElement) -> Result<Ordering, CoreError> {
        if FieldGenerator::same(&self.gen, &other.gen) {
            let d = self.sub(other)?;
            Ok(match d.sign() {
                s if s < 0 => Ordering::Less,
                0 => Ordering::Equal,
                _ => Ordering::Greater,
            })
        } else {
            // cross-field: eliminate each generator by resultant, then
            // compare the resulting algebraic reals
            Ok(self.to_algebraic().cmp_alg(&other.to_algebraic()))
        }
    }

    pub fn equals(&self, other: &NumberFieldElement) -> bool {
        if FieldGenerator::same(&self.gen, &other.gen) {
            return self
                .coords
                .iter()
                .zip(&other.coords)
                .all(|(a, b)| a == b);
        }
        self.cmp_elem(other) == Ok(Ordering::Equal)
    }

    pub fn is_rational(&self) -> Option<Rational> {
        if self.coords.iter().skip(1).all(|c| c.is_zero()) {
            return Some(self.coords[0].clone());
        }
        // constant-free coordinates may still be rational if the generator
        // polynomial was not minimal; resolve through the algebraic form
        let a = self.to_algebraic();
        a.is_rational()
    }

    /// The element as a standalone algebraic real: its minimal polynomial is
    /// extracted from the resultant Res_x(minpoly(x), d*y - g(x)) and the
    /// correct root selected by interval refinement.
    pub fn to_algebraic(&self) -> AlgebraicReal {
        if self.coords.iter().skip(1).all(|c| c.is_zero()) {
            return AlgebraicReal::from_rational(&self.coords[0]);
        }
        let minpoly = self.gen.alpha.minimal_poly();
        let res = eliminate(minpoly, &self.coords);
        let roots =
            AlgebraicReal::isolate_roots(&res).expect("resultant of a nonzero element is nonzero");
        // Narrow alpha until the interval evaluation of the element fits
        // strictly inside exactly one isolating interval.
        let mut alpha = self.gen.alpha.clone();
        loop {
            let (lo, hi) = alpha.interval();
            let (elo, ehi) = interval_eval(&self.coords, lo, hi);
            let mut candidates = roots
                .iter()
                .filter(|r| {
                    let (rlo, rhi) = r.interval();
                    // candidate unless evaluation range is disjoint from it
                    !(&ehi < rlo || &elo > rhi)
                })
                .collect::<Vec<_>>();
            if candidates.len() == 1 {
                let root = candidates.pop().unwrap();
                // tighten the root interval to the evaluation range
                return root.clone();
            }
            let width = (hi - lo) / Rational::from(BigInt::from(16));
            alpha = alpha.refined(&width);
        }
    }

    pub fn to_f64(&self) -> f64 {
        if let Some(r) = self.coords.iter().skip(1).all(|c| c.is_zero()).then(|| self.coords[0].clone()) {
            let num: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
            let den: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
            return num / den;
        }
        self.to_algebraic().to_f64()
    }

    fn check_field(&self, other: &NumberFieldElement) -> Result<(), CoreError> {
        if FieldGenerator::same(&self.gen, &other.gen) {
            Ok(())
        } else {
            Err(CoreError::MixedFields)
        }
    }

    /// Polynomial-in-generator display, e.g. "2a^2-a" or "1/2".
    pub fn poly_string(&self) -> String {
        let var = self.gen.var;
        if self.coords.iter().all(|c| c.is_zero()) {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.coords.iter().enumerate().rev() {
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
            if !mag.is_one() || i == 0 {
                s.push_str(&format_rational(&mag));
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

impl fmt::Debug for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} where {:?}", self.poly_string(), self.gen)
    }
}

/// Reduces a coordinate vector modulo the monic minimal polynomial.
fn reduce_mod(coords: &[Rational], monic: &[Rational]) -> Vec<Rational> {
    let deg = monic.len() - 1;
    let mut r = coords.to_vec();
    while r.len() > deg {
        let top = r.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = r.len() - deg;
        for (i, m) in monic[..deg].iter().enumerate() {
            let v = r[shift + i].clone() - top.clone() * m;
            r[shift + i] = v;
        }
    }
    r.resize(deg, Rational::zero());
    r
}

/// Extended Euclid over Q[x]: returns (g, s, t) with s*a + t*b = g, vectors
/// lowest-first, g normalized nonempty unless both inputs are zero.
fn extended_gcd(
    a: &[Rational],
    b: &[Rational],
) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>) {
    let trim = |v: &mut Vec<Rational>| {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
    };
    let mut r0: Vec<Rational> = a.to_vec();
    let mut r1: Vec<Rational> = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0 = vec![Rational::one()];
    let mut s1: Vec<Rational> = vec![];
    let mut t0: Vec<Rational> = vec![];
    let mut t1 = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = divmod(&r0, &r1);
        let s_next = poly_sub(&s0, &poly_mul(&q, &s1));
        let t_next = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s_next;
        t0 = t1;
        t1 = t_next;
    }
    (r0, s0, t0)
}

fn divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut q = vec![Rational::zero(); a.len().saturating_sub(db)];
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = r[dr].clone() / lead.clone();
        q[dr - db] = factor.clone();
        for (i, c) in b.iter().enumerate() {
            let v = r[dr - db + i].clone() - factor.clone() * c;
            r[dr - db + i] = v;
        }
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
    }
    (q, r)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    while out.last().map_or(false, |c| c.is_zero()) {
        out.pop();
    }
    out
}

fn clear_denominators(coords: &[Rational]) -> IntPolynomial {
    let mut den = BigInt::one();
    for c in coords {
        den = den.lcm(c.denom());
    }
    IntPolynomial::new(
        coords
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect(),
    )
}

/// Resultant elimination: the integer polynomial in y whose roots include
/// g(alpha)/d over all conjugates alpha of the generator. Computed by
/// evaluation at deg+1 integer points and exact interpolation.
fn eliminate(minpoly: &IntPolynomial, coords: &[Rational]) -> IntPolynomial {
    let g = clear_denominators(coords);
    let mut den = BigInt::one();
    for c in coords {
        den = den.lcm(c.denom());
    }
    let m = minpoly.degree().unwrap();
    // R(y) = Res_x(minpoly(x), den*y - g(x)) has degree m in y
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for i in 0..=(m as i64) {
        let y0 = BigInt::from(i);
        // den*y0 - g(x) as a polynomial in x
        let mut shifted = g.neg();
        let c0 = shifted.constant_term() + &den * &y0;
        let mut coeffs = shifted.coeffs().to_vec();
        if coeffs.is_empty() {
            coeffs.push(c0);
        } else {
            coeffs[0] = c0;
        }
        shifted = IntPolynomial::new(coeffs);
        let r = minpoly.resultant(&shifted);
        xs.push(Rational::from(y0));
        ys.push(Rational::from(r));
    }
    // Lagrange interpolation (exact over Q), then clear denominators.
    let mut acc = vec![Rational::zero(); m + 1];
    for (i, yi) in ys.iter().enumerate() {
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for (j, xj) in xs.iter().enumerate() {
            if j == i {
                continue;
            }
            basis = poly_mul(&basis, &[-xj.clone(), Rational::one()]);
            denom *= xs[i].clone() - xj.clone();
        }
        let scale = yi / denom;
        for (k, b) in basis.iter().enumerate() {
            acc[k] += b * &scale;
        }
    }
    clear_denominators(&acc)
        .squarefree_part()
}

/// Interval evaluation of a rational-coefficient polynomial at [lo, hi].
fn interval_eval(coeffs: &[Rational], lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mut acc_lo = Rational::zero();
    let mut acc_hi = Rational::zero();
    for c in coeffs.iter().rev() {
        // multiply interval [acc_lo, acc_hi] by [lo, hi], then add c
        let products = [
            acc_lo.clone() * lo,
            acc_lo.clone() * hi,
            acc_hi.clone() * lo,
            acc_hi.clone() * hi,
        ];
        acc_lo = products.iter().min().unwrap().clone() + c;
        acc_hi = products.iter().max().unwrap().clone() + c;
    }
    (acc_lo, acc_hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;

    fn gen_cubic() -> Arc<FieldGenerator> {
        let p = IntPolynomial::parse("x^3+x-1", 'x').unwrap();
        let alpha =
            AlgebraicReal::root_in_interval(&p, Rational::zero(), Rational::one()).unwrap();
        FieldGenerator::new(alpha)
    }

    fn elem(gen: &Arc<FieldGenerator>, coords: &[&str]) -> NumberFieldElement {
        NumberFieldElement::from_coords(
            gen.clone(),
            coords.iter().map(|s| parse_rational(s).unwrap()).collect(),
        )
    }

    #[test]
    fn reduction_alpha_cubed() {
        // alpha * alpha^2 = alpha^3 = 1 - alpha
        let gen = gen_cubic();
        let a = elem(&gen, &["0", "1", "0"]);
        let a2 = elem(&gen, &["0", "0", "1"]);
        let prod = a.mul(&a2).unwrap();
        assert_eq!(prod.coords(), elem(&gen, &["1", "-1", "0"]).coords());
    }

    #[test]
    fn inverse_of_alpha() {
        // alpha^-1 = alpha^2 + 1 since alpha(alpha^2+1) = alpha^3 + alpha = 1
        let gen = gen_cubic();
        let a = elem(&gen, &["0", "1", "0"]);
        let inv = a.inv().unwrap();
        assert_eq!(inv.coords(), elem(&gen, &["1", "0", "1"]).coords());
        let one = a.mul(&inv).unwrap();
        assert_eq!(one.coords(), elem(&gen, &["1", "0", "0"]).coords());
    }

    #[test]
    fn division_by_zero() {
        let gen = gen_cubic();
        let z = elem(&gen, &["0", "0", "0"]);
        assert!(matches!(z.inv(), Err(CoreError::DivisionByZero)));
    }

    #[test]
    fn signs_and_comparisons() {
        let gen = gen_cubic();
        let a = NumberFieldElement::generator_element(gen.clone());
        // alpha ~ 0.6823
        assert_eq!(a.sign(), 1);
        let half = NumberFieldElement::from_rational(gen.clone(), parse_rational("1/2").unwrap());
        assert_eq!(a.cmp_elem(&half).unwrap(), Ordering::Greater);
        let diff = a.sub(&a).unwrap();
        assert!(diff.is_zero());
    }

    #[test]
    fn cube_root_comparison() {
        // 2^(-1/3) > 4^(-1/3), phrased as 1/a vs 1/a^2 for a = 2^(1/3)
        let p = IntPolynomial::parse("x^3-2", 'x').unwrap();
        let a = AlgebraicReal::root_in_interval(
            &p,
            Rational::one(),
            Rational::from(BigInt::from(2)),
        )
        .unwrap();
        let gen = FieldGenerator::new(a);
        let alpha = NumberFieldElement::generator_element(gen.clone());
        let x = alpha.inv().unwrap();
        let y = alpha.mul(&alpha).unwrap().inv().unwrap();
        assert_eq!(x.cmp_elem(&y).unwrap(), Ordering::Greater);
    }

    #[test]
    fn to_algebraic_minpoly_of_alpha_squared() {
        // minpoly of alpha^2 for alpha^3 + alpha - 1 = 0 is x^3 + 2x^2 + x - 1
        let gen = gen_cubic();
        let a2 = elem(&gen, &["0", "0", "1"]);
        let alg = a2.to_algebraic();
        assert_eq!(
            alg.minimal_poly(),
            &IntPolynomial::parse("x^3+2x^2+x-1", 'x').unwrap()
        );
    }

    #[test]
    fn mixed_fields_rejected() {
        let gen1 = gen_cubic();
        let p = IntPolynomial::parse("x^3-2", 'x').unwrap();
        let a = AlgebraicReal::root_in_interval(
            &p,
            Rational::one(),
            Rational::from(BigInt::from(2)),
        )
        .unwrap();
        let gen2 = FieldGenerator::new(a);
        let x = NumberFieldElement::generator_element(gen1);
        let y = NumberFieldElement::generator_element(gen2);
        assert!(matches!(x.add(&y), Err(CoreError::MixedFields)));
        // but comparison still works through elimination
        assert_eq!(x.cmp_elem(&y).unwrap(), Ordering::Less);
    }
}
