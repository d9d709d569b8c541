//! A single exact value: either a rational or a number-field element.
//! Mixed rational/field arithmetic promotes the rational into the field;
//! arithmetic across two distinct fields is refused (`MixedFields`), while
//! comparison falls back to resultant elimination.

use num_bigint::BigInt;
use num_traits::Zero;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::algebraic::AlgebraicReal;
use crate::error::CoreError;
use crate::field::{FieldGenerator, NumberFieldElement};
use crate::rational::{decimal_string, format_rational, Rational};

#[derive(Clone)]
pub enum Scalar {
    Rational(Rational),
    Algebraic(NumberFieldElement),
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Rational(Rational::zero())
    }

    pub fn one() -> Scalar {
        Scalar::Rational(Rational::from(BigInt::from(1)))
    }

    pub fn from_int(v: i64) -> Scalar {
        Scalar::Rational(Rational::from(BigInt::from(v)))
    }

    pub fn generator(&self) -> Option<&Arc<FieldGenerator>> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Algebraic(e) => Some(e.generator()),
        }
    }

    /// Lifts into Q(gen) if currently rational.
    pub fn promoted(&self, gen: &Arc<FieldGenerator>) -> NumberFieldElement {
        match self {
            Scalar::Rational(r) => NumberFieldElement::from_rational(gen.clone(), r.clone()),
            Scalar::Algebraic(e) => e.clone(),
        }
    }

    fn binary<F>(&self, other: &Scalar, rat: fn(&Rational, &Rational) -> Rational, alg: F) -> Result<Scalar, CoreError>
    where
        F: Fn(&NumberFieldElement, &NumberFieldElement) -> Result<NumberFieldElement, CoreError>,
    {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(rat(a, b))),
            _ => {
                let gen = self
                    .generator()
                    .or_else(|| other.generator())
                    .expect("at least one algebraic operand")
                    .clone();
                let a = self.promoted(&gen);
                let b = other.promoted(&gen);
                Ok(Scalar::Algebraic(alg(&a, &b)?).normalized())
            }
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar, CoreError> {
        self.binary(other, |a, b| a + b, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar, CoreError> {
        self.binary(other, |a, b| a - b, |a, b| a.sub(b))
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar, CoreError> {
        self.binary(other, |a, b| a * b, |a, b| a.mul(b))
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, CoreError> {
        if other.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        self.binary(other, |a, b| a / b, |a, b| a.div(b))
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Algebraic(e) => Scalar::Algebraic(e.neg()),
        }
    }

    /// Collapses field elements with rational value back to `Rational`; keeps
    /// exact comparisons cheap along orbits.
    pub fn normalized(self) -> Scalar {
        match &self {
            Scalar::Algebraic(e) => {
                if e.coords().iter().skip(1).all(|c| c.is_zero()) {
                    return Scalar::Rational(e.coords()[0].clone());
                }
                self
            }
            _ => self,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Algebraic(e) => e.is_zero(),
        }
    }

    pub fn sign(&self) -> i32 {
        match self {
            Scalar::Rational(r) => crate::rational::sign_of(r),
            Scalar::Algebraic(e) => e.sign(),
        }
    }

    pub fn cmp_scalar(&self, other: &Scalar) -> Result<Ordering, CoreError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(a.cmp(b)),
            (a, b) => {
                let ga = a.generator();
                let gb = b.generator();
                match (ga, gb) {
                    (Some(x), Some(y)) if !FieldGenerator::same(x, y) => {
                        // cross-field comparison through elimination
                        Ok(a.to_algebraic().cmp_alg(&b.to_algebraic()))
                    }
                    _ => {
                        let d = a.sub(b)?;
                        Ok(match d.sign() {
                            s if s < 0 => Ordering::Less,
                            0 => Ordering::Equal,
                            _ => Ordering::Greater,
                        })
                    }
                }
            }
        }
    }

    pub fn equals(&self, other: &Scalar) -> bool {
        self.cmp_scalar(other) == Ok(Ordering::Equal)
    }

    pub fn to_algebraic(&self) -> AlgebraicReal {
        match self {
            Scalar::Rational(r) => AlgebraicReal::from_rational(r),
            Scalar::Algebraic(e) => e.to_algebraic(),
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::Algebraic(e) => e.is_rational(),
        }
    }

    /// Lossless display: "3/7" or "2a^2-a where a: x^3+x-1 in (0,1)".
    pub fn exact_string(&self) -> String {
        match self {
            Scalar::Rational(r) => format_rational(r),
            Scalar::Algebraic(e) => format!("{:?}", e),
        }
    }

    /// Deterministic decimal approximation.
    pub fn decimal(&self, digits: usize) -> String {
        match self {
            Scalar::Rational(r) => decimal_string(r, digits),
            Scalar::Algebraic(e) => e.to_algebraic().decimal(digits),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rational(r) => {
                let num: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
                let den: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
                num / den
            }
            Scalar::Algebraic(e) => e.to_f64(),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", format_rational(r)),
            Scalar::Algebraic(e) => write!(f, "{}", e.poly_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPolynomial;
    use crate::rational::parse_rational;

    #[test]
    fn mixed_promotion() {
        let p = IntPolynomial::parse("x^3+x-1", 'x').unwrap();
        let alpha = AlgebraicReal::root_in_interval(
            &p,
            Rational::zero(),
            Rational::from(BigInt::from(1)),
        )
        .unwrap();
        let gen = FieldGenerator::new(alpha);
        let a = Scalar::Algebraic(NumberFieldElement::generator_element(gen));
        let half = Scalar::Rational(parse_rational("1/2").unwrap());
        let s = a.add(&half).unwrap();
        assert_eq!(s.sign(), 1);
        assert_eq!(a.cmp_scalar(&half).unwrap(), Ordering::Greater);
        // alpha + 1/2 - alpha = 1/2 exactly, and normalizes to a rational
        let back = s.sub(&a).unwrap();
        assert!(matches!(back, Scalar::Rational(_)));
        assert!(back.equals(&half));
    }
}
