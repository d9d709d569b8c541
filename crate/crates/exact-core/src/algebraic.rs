//! Real algebraic numbers: a squarefree (and, whenever certifiable, minimal)
//! defining polynomial plus an open isolating interval with rational,
//! non-root endpoints. Comparison and sign determination are exact; interval
//! refinement returns new values rather than mutating.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

use crate::error::CoreError;
use crate::poly::IntPolynomial;
use crate::rational::{decimal_string, Rational};

/// Cap for the trial-division factor search used when hunting rational roots
/// of a candidate minimal polynomial. Characteristic polynomials of
/// unimodular matrices have constant term ±1, so they never need it.
const DIVISOR_SEARCH_CAP: u64 = 1_000_000;

#[derive(Clone)]
pub struct AlgebraicReal {
    poly: IntPolynomial, // squarefree, primitive, positive leading coefficient
    lo: Rational,
    hi: Rational,
}

impl AlgebraicReal {
    pub fn from_rational(r: &Rational) -> Self {
        AlgebraicReal {
            poly: IntPolynomial::linear_from_root(r).primitive(),
            lo: r - Rational::one(),
            hi: r + Rational::one(),
        }
    }

    /// All real roots of `p`, each isolated in a disjoint open interval with
    /// non-root endpoints, sorted ascending. The defining polynomial of each
    /// root is reduced to its minimal polynomial when that is certifiable.
    pub fn isolate_roots(p: &IntPolynomial) -> Result<Vec<AlgebraicReal>, CoreError> {
        if p.is_zero() {
            return Err(CoreError::ZeroPolynomial);
        }
        let sf = p.squarefree_part();
        if sf.degree() == Some(0) {
            return Ok(vec![]);
        }
        let chain = sf.sturm_chain();
        let bound = sf.root_bound();
        let mut lo = -bound.clone();
        let mut hi = bound;
        // nudge endpoints off roots (the Cauchy bound is strict, but be safe)
        while sf.sign_at(&lo) == 0 {
            lo -= Rational::one();
        }
        while sf.sign_at(&hi) == 0 {
            hi += Rational::one();
        }
        let mut intervals = Vec::new();
        isolate_rec(&sf, &chain, lo, hi, &mut intervals);
        intervals.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(intervals
            .into_iter()
            .map(|(lo, hi)| AlgebraicReal::reduce_to_minimal(sf.clone(), lo, hi))
            .collect())
    }

    /// The unique root of `p` in the open interval (lo, hi); errors if the
    /// interval contains none or several.
    pub fn root_in_interval(
        p: &IntPolynomial,
        lo: Rational,
        hi: Rational,
    ) -> Result<AlgebraicReal, CoreError> {
        if p.is_zero() {
            return Err(CoreError::ZeroPolynomial);
        }
        let sf = p.squarefree_part();
        let roots = Self::isolate_roots(&sf)?;
        let mut found = Vec::new();
        for r in roots {
            let cmp_lo = r.cmp_rational(&lo);
            let cmp_hi = r.cmp_rational(&hi);
            if cmp_lo == Ordering::Greater && cmp_hi == Ordering::Less {
                found.push(r);
            }
        }
        match found.len() {
            1 => Ok(found.pop().unwrap()),
            0 => Err(CoreError::NoRootInInterval {
                poly: sf.to_string(),
                lo: lo.to_string(),
                hi: hi.to_string(),
            }),
            n => Err(CoreError::AmbiguousInterval {
                poly: sf.to_string(),
                lo: lo.to_string(),
                hi: hi.to_string(),
                count: n,
            }),
        }
    }

    /// Replaces the defining polynomial by the irreducible factor vanishing
    /// at the root, when the factorization is certifiable (always for degree
    /// <= 3 up to the divisor cap; characteristic polynomials of unimodular
    /// matrices always succeed since their rational roots are ±1).
    fn reduce_to_minimal(sf: IntPolynomial, lo: Rational, hi: Rational) -> AlgebraicReal {
        let factors = factor_squarefree(&sf);
        for f in &factors {
            let chain = f.sturm_chain();
            if f.sign_at(&lo) != 0
                && f.sign_at(&hi) != 0
                && IntPolynomial::count_roots_between(&chain, &lo, &hi) == 1
            {
                return AlgebraicReal {
                    poly: f.clone(),
                    lo,
                    hi,
                };
            }
        }
        AlgebraicReal { poly: sf, lo, hi }
    }

    pub fn minimal_poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn is_rational(&self) -> Option<Rational> {
        if self.poly.degree() == Some(1) {
            let c = self.poly.coeffs();
            Some(Rational::new(-c[0].clone(), c[1].clone()))
        } else {
            None
        }
    }

    fn sign_change_up(&self) -> bool {
        self.poly.sign_at(&self.lo) < 0
    }

    /// A copy whose isolating interval has width at most `width`.
    pub fn refined(&self, width: &Rational) -> AlgebraicReal {
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        let up = self.sign_change_up();
        while &(hi.clone() - lo.clone()) > width {
            let mid = (lo.clone() + hi.clone()) / Rational::from(BigInt::from(2));
            let s = self.poly.sign_at(&mid);
            if s == 0 {
                // mid is the root; shrink symmetrically around it
                let quarter = (hi.clone() - lo.clone()) / Rational::from(BigInt::from(8));
                lo = mid.clone() - quarter.clone();
                hi = mid + quarter;
                if self.poly.sign_at(&lo) == 0 || self.poly.sign_at(&hi) == 0 {
                    continue;
                }
                continue;
            }
            if (s < 0) == up {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        AlgebraicReal {
            poly: self.poly.clone(),
            lo,
            hi,
        }
    }

    /// Rational approximation within `width` of the true value.
    pub fn approx(&self, width: &Rational) -> Rational {
        let r = self.refined(width);
        (r.lo + r.hi) / Rational::from(BigInt::from(2))
    }

    pub fn to_f64(&self) -> f64 {
        let w = Rational::new(BigInt::one(), BigInt::from(10).pow(15));
        let a = self.approx(&w);
        let num = a.numer();
        let den = a.denom();
        let scale = BigInt::from(10).pow(15);
        let scaled = (num * &scale) / den;
        let v: f64 = scaled.to_string().parse().unwrap_or(f64::NAN);
        v / 1e15
    }

    pub fn decimal(&self, digits: usize) -> String {
        let w = Rational::new(BigInt::one(), BigInt::from(10).pow(digits as u32 + 2));
        decimal_string(&self.approx(&w), digits)
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        if r <= &self.lo {
            return Ordering::Greater;
        }
        if r >= &self.hi {
            return Ordering::Less;
        }
        let s = self.poly.sign_at(r);
        if s == 0 {
            return Ordering::Equal;
        }
        // r is inside the isolating interval and not the root; the root is
        // above r exactly when the polynomial still carries its lo-side sign.
        if (s < 0) == self.sign_change_up() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Exact comparison: gcd of the defining polynomials decides equality,
    /// interval refinement decides order.
    pub fn cmp_alg(&self, other: &AlgebraicReal) -> Ordering {
        if let Some(r) = other.is_rational() {
            return self.cmp_rational(&r);
        }
        if let Some(r) = self.is_rational() {
            return other.cmp_rational(&r).reverse();
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let g = self.poly.gcd(&other.poly);
        let g_nontrivial = g.degree().map_or(false, |d| d >= 1);
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if g_nontrivial {
                // overlapping intervals: equal iff the gcd has a root in the
                // overlap (that root is then both numbers)
                let lo = if a.lo > b.lo { a.lo.clone() } else { b.lo.clone() };
                let hi = if a.hi < b.hi { a.hi.clone() } else { b.hi.clone() };
                if g.sign_at(&lo) != 0 && g.sign_at(&hi) != 0 {
                    let chain = g.sturm_chain();
                    if IntPolynomial::count_roots_between(&chain, &lo, &hi) >= 1 {
                        return Ordering::Equal;
                    }
                }
            }
            let half = Rational::new(BigInt::one(), BigInt::from(2));
            let wa = (a.hi.clone() - a.lo.clone()) * half.clone();
            let wb = (b.hi.clone() - b.lo.clone()) * half;
            a = a.refined(&wa);
            b = b.refined(&wb);
        }
    }

    pub fn equals(&self, other: &AlgebraicReal) -> bool {
        self.cmp_alg(other) == Ordering::Equal
    }

    pub fn is_positive_value(&self) -> bool {
        self.cmp_rational(&Rational::zero()) == Ordering::Greater
    }
}

fn isolate_rec(
    sf: &IntPolynomial,
    chain: &[IntPolynomial],
    lo: Rational,
    hi: Rational,
    out: &mut Vec<(Rational, Rational)>,
) {
    let count = IntPolynomial::count_roots_between(chain, &lo, &hi);
    match count {
        0 => {}
        1 => out.push((lo, hi)),
        _ => {
            let mut mid = (lo.clone() + hi.clone()) / Rational::from(BigInt::from(2));
            if sf.sign_at(&mid) == 0 {
                // mid is itself a root: carve out a sub-interval isolating it
                let mut delta =
                    (hi.clone() - lo.clone()) / Rational::from(BigInt::from(4));
                loop {
                    let l = mid.clone() - delta.clone();
                    let h = mid.clone() + delta.clone();
                    if sf.sign_at(&l) != 0
                        && sf.sign_at(&h) != 0
                        && IntPolynomial::count_roots_between(chain, &l, &h) == 1
                    {
                        out.push((l.clone(), h.clone()));
                        isolate_rec(sf, chain, lo, l, out);
                        isolate_rec(sf, chain, h, hi, out);
                        return;
                    }
                    delta = delta / Rational::from(BigInt::from(2));
                }
            }
            // ensure mid is not a root of any chain member used in counting
            while sf.sign_at(&mid) == 0 {
                mid = (lo.clone() + mid) / Rational::from(BigInt::from(2));
            }
            isolate_rec(sf, chain, lo, mid.clone(), out);
            isolate_rec(sf, chain, mid, hi, out);
        }
    }
}

/// Factors a squarefree primitive polynomial over Q as far as certifiable:
/// strips rational roots (divisor search, capped), splits quadratics by
/// perfect-square discriminant. Degree-3 polynomials therefore factor
/// completely or are certified irreducible whenever the divisor search is
/// within cap.
fn factor_squarefree(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut factors = Vec::new();
    let mut rest = p.primitive();
    loop {
        let deg = match rest.degree() {
            None | Some(0) => break,
            Some(d) => d,
        };
        if deg == 1 {
            factors.push(rest.clone());
            break;
        }
        if deg == 2 {
            let c = rest.coeffs();
            let (a, b, c0) = (c[2].clone(), c[1].clone(), c[0].clone());
            let disc = &b * &b - BigInt::from(4) * &a * &c0;
            if !disc.is_negative() {
                let s = disc.sqrt();
                if &s * &s == disc {
                    // rational roots (-b ± s) / (2a)
                    let two_a = BigInt::from(2) * &a;
                    for root_num in [-&b + &s, -&b - &s] {
                        let r = Rational::new(root_num, two_a.clone());
                        factors.push(IntPolynomial::linear_from_root(&r).primitive());
                    }
                    break;
                }
            }
            factors.push(rest.clone());
            break;
        }
        // degree >= 3: hunt one rational root
        match find_rational_root(&rest) {
            Some(r) => {
                let lin = IntPolynomial::linear_from_root(&r).primitive();
                factors.push(lin.clone());
                rest = rest.div_exact(&lin);
            }
            None => {
                // no rational root (or gave up): for cubics this certifies
                // irreducibility; higher degrees are left unfactored, which
                // is safe (zero tests fall back to gcd + interval logic).
                factors.push(rest.clone());
                break;
            }
        }
    }
    factors
}

fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    if n.is_zero() {
        return None;
    }
    if n > BigInt::from(DIVISOR_SEARCH_CAP) * BigInt::from(DIVISOR_SEARCH_CAP) {
        // only attempt when the trial division below can fully factor
        if n.bits() > 80 {
            return None;
        }
    }
    let mut remaining = n.clone();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= remaining {
        if d > BigInt::from(DIVISOR_SEARCH_CAP) {
            return None; // incomplete factorization; give up
        }
        let mut e = 0u32;
        while (&remaining % &d).is_zero() {
            remaining /= &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += 1;
    }
    if remaining > BigInt::one() {
        primes.push((remaining, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
        if divs.len() > 4096 {
            return None;
        }
    }
    Some(divs)
}

fn find_rational_root(p: &IntPolynomial) -> Option<Rational> {
    let a0 = p.constant_term();
    let an = p.leading()?.clone();
    if a0.is_zero() {
        return Some(Rational::zero());
    }
    let nums = small_divisors(&a0)?;
    let dens = small_divisors(&an)?;
    for n in &nums {
        for d in &dens {
            for sign in [1i64, -1] {
                let r = Rational::new(n * BigInt::from(sign), d.clone());
                if p.sign_at(&r) == 0 {
                    return Some(r);
                }
            }
        }
    }
    None
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "root of {} in ({}, {})",
            self.poly, self.lo, self.hi
        )
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;

    fn poly(s: &str) -> IntPolynomial {
        IntPolynomial::parse(s, 'x').unwrap()
    }

    #[test]
    fn isolate_cubic_one_real_root() {
        let roots = AlgebraicReal::isolate_roots(&poly("x^3+x-1")).unwrap();
        assert_eq!(roots.len(), 1);
        let r = &roots[0];
        assert_eq!(r.cmp_rational(&Rational::zero()), Ordering::Greater);
        assert_eq!(r.cmp_rational(&Rational::one()), Ordering::Less);
        // the root is about 0.6823
        let half = parse_rational("1/2").unwrap();
        assert_eq!(r.cmp_rational(&half), Ordering::Greater);
    }

    #[test]
    fn isolate_quadratic_pm_one() {
        let roots = AlgebraicReal::isolate_roots(&poly("x^2-1")).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].is_rational(), Some(-Rational::one()));
        assert_eq!(roots[1].is_rational(), Some(Rational::one()));
    }

    #[test]
    fn isolate_three_real_roots() {
        let roots = AlgebraicReal::isolate_roots(&poly("2x^3-5x^2+x+1")).unwrap();
        assert_eq!(roots.len(), 3);
        let in_unit: Vec<_> = roots
            .iter()
            .filter(|r| {
                r.cmp_rational(&Rational::zero()) == Ordering::Greater
                    && r.cmp_rational(&Rational::one()) == Ordering::Less
            })
            .collect();
        assert_eq!(in_unit.len(), 1);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(matches!(
            AlgebraicReal::isolate_roots(&IntPolynomial::zero()),
            Err(CoreError::ZeroPolynomial)
        ));
    }

    #[test]
    fn compare_same_value_different_polys() {
        // root of x^2-1 in (1/2, 3/2) equals the rational 1
        let r = AlgebraicReal::root_in_interval(
            &poly("x^2-1"),
            parse_rational("1/2").unwrap(),
            parse_rational("3/2").unwrap(),
        )
        .unwrap();
        assert_eq!(r.is_rational(), Some(Rational::one()));
        let one = AlgebraicReal::from_rational(&Rational::one());
        assert!(r.equals(&one));
    }

    #[test]
    fn equality_and_order() {
        let a = AlgebraicReal::root_in_interval(
            &poly("x^3+x-1"),
            Rational::zero(),
            Rational::one(),
        )
        .unwrap();
        assert_eq!(a.cmp_alg(&a), Ordering::Equal);
        let b = AlgebraicReal::root_in_interval(
            &poly("x^2-2"),
            Rational::one(),
            Rational::from(BigInt::from(2)),
        )
        .unwrap();
        // 0.682... < 1.414...
        assert_eq!(a.cmp_alg(&b), Ordering::Less);
    }

    #[test]
    fn refinement_narrows() {
        let a = AlgebraicReal::root_in_interval(
            &poly("x^3+x-1"),
            Rational::zero(),
            Rational::one(),
        )
        .unwrap();
        let w = parse_rational("1/1000000000000").unwrap();
        let r = a.refined(&w);
        let (lo, hi) = r.interval();
        assert!(hi - lo <= w);
        assert_eq!(&a.decimal(6)[..8], "0.682327");
    }
}
