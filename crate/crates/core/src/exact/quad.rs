use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// An element `a + b·√5` of the quadratic field ℚ(√5).
///
/// Both coordinates are [`Ratio`]s, which are kept in lowest terms with a
/// positive denominator, so structural equality is field equality.
#[derive(Clone, Debug)]
pub struct Quad<I> {
    a: Ratio<I>,
    b: Ratio<I>,
}

impl<I: Integer + Clone> PartialEq for Quad<I> {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }
}

impl<I: Integer + Clone> Eq for Quad<I> {}

impl<I: Integer + Clone + std::hash::Hash> std::hash::Hash for Quad<I> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
    }
}

impl<I> Quad<I>
where
    I: Integer + Signed + Clone,
{
    pub fn new(a: Ratio<I>, b: Ratio<I>) -> Self {
        Quad { a, b }
    }

    pub fn from_rational(a: Ratio<I>) -> Self {
        Quad { a, b: Ratio::zero() }
    }

    pub fn from_integer(a: I) -> Self {
        Self::from_rational(Ratio::from_integer(a))
    }

    /// `p/q + (r/s)·√5` from machine-sized parts.
    pub fn from_parts(p: I, q: I, r: I, s: I) -> Self {
        Quad {
            a: Ratio::new(p, q),
            b: Ratio::new(r, s),
        }
    }

    pub fn sqrt5() -> Self {
        Quad {
            a: Ratio::zero(),
            b: Ratio::one(),
        }
    }

    /// The golden ratio α = (1+√5)/2.
    pub fn alpha() -> Self {
        let half = Ratio::new(I::one(), I::one() + I::one());
        Quad {
            a: half.clone(),
            b: half,
        }
    }

    /// β = (1−√5)/2 = −1/α.
    pub fn beta() -> Self {
        Self::alpha().conjugate()
    }

    /// Rational coordinate.
    pub fn a(&self) -> &Ratio<I> {
        &self.a
    }

    /// Coefficient of √5.
    pub fn b(&self) -> &Ratio<I> {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Quad {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// x·conj(x) = a² − 5b².
    pub fn norm(&self) -> Ratio<I> {
        let five = Ratio::from_integer(I::from_five());
        self.a.clone() * self.a.clone() - five * self.b.clone() * self.b.clone()
    }

    /// x + conj(x) = 2a.
    pub fn trace(&self) -> Ratio<I> {
        self.a.clone() + self.a.clone()
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conjugate();
        Some(Quad {
            a: c.a / n.clone(),
            b: c.b / n,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    /// Integer power; `None` only for a negative power of zero.
    pub fn powi(&self, exp: i64) -> Option<Self> {
        let mut base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Some(acc)
    }

    /// Exact sign of the real number a + b√5.
    pub fn cmp_zero(&self) -> Ordering {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            // opposite signs: compare a² with 5b²
            (sa, _) => {
                let a2 = self.a.clone() * self.a.clone();
                let five = Ratio::from_integer(I::from_five());
                let b2 = five * self.b.clone() * self.b.clone();
                match a2.cmp(&b2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.cmp_zero() == Ordering::Greater
    }
}

fn sign_of<I: Integer + Signed + Clone>(r: &Ratio<I>) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if r.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Small helper so the generic code can name the constant 5.
trait FromFive {
    fn from_five() -> Self;
}

impl<I: Integer + Clone> FromFive for I {
    fn from_five() -> Self {
        let two = I::one() + I::one();
        two.clone() + two + I::one()
    }
}

/// Field automorphism √5 ↦ −√5; maps α to β.
pub fn quad_conjugate<I: Integer + Signed + Clone>(x: &Quad<I>) -> Quad<I> {
    x.conjugate()
}

impl<I: Integer + Signed + Clone> Zero for Quad<I> {
    fn zero() -> Self {
        Quad {
            a: Ratio::zero(),
            b: Ratio::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<I: Integer + Signed + Clone> One for Quad<I> {
    fn one() -> Self {
        Quad {
            a: Ratio::one(),
            b: Ratio::zero(),
        }
    }
}

impl<'a, I: Integer + Signed + Clone> Add<&'a Quad<I>> for &'a Quad<I> {
    type Output = Quad<I>;
    fn add(self, rhs: &'a Quad<I>) -> Quad<I> {
        Quad {
            a: self.a.clone() + rhs.a.clone(),
            b: self.b.clone() + rhs.b.clone(),
        }
    }
}

impl<'a, I: Integer + Signed + Clone> Sub<&'a Quad<I>> for &'a Quad<I> {
    type Output = Quad<I>;
    fn sub(self, rhs: &'a Quad<I>) -> Quad<I> {
        Quad {
            a: self.a.clone() - rhs.a.clone(),
            b: self.b.clone() - rhs.b.clone(),
        }
    }
}

impl<'a, I: Integer + Signed + Clone> Mul<&'a Quad<I>> for &'a Quad<I> {
    type Output = Quad<I>;
    fn mul(self, rhs: &'a Quad<I>) -> Quad<I> {
        // (a + b√5)(c + d√5) = (ac + 5bd) + (ad + bc)√5
        let five = Ratio::from_integer(I::from_five());
        Quad {
            a: self.a.clone() * rhs.a.clone() + five * self.b.clone() * rhs.b.clone(),
            b: self.a.clone() * rhs.b.clone() + self.b.clone() * rhs.a.clone(),
        }
    }
}

impl<'a, I: Integer + Signed + Clone> Div<&'a Quad<I>> for &'a Quad<I> {
    type Output = Quad<I>;
    /// Panics on division by zero, like [`Ratio`].
    fn div(self, rhs: &'a Quad<I>) -> Quad<I> {
        self.checked_div(rhs).expect("division by zero in Q(sqrt 5)")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<I: Integer + Signed + Clone> $tr for Quad<I> {
            type Output = Quad<I>;
            fn $m(self, rhs: Quad<I>) -> Quad<I> {
                (&self).$m(&rhs)
            }
        }
        impl<'a, I: Integer + Signed + Clone> $tr<&'a Quad<I>> for Quad<I> {
            type Output = Quad<I>;
            fn $m(self, rhs: &'a Quad<I>) -> Quad<I> {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl<I: Integer + Signed + Clone> Neg for Quad<I> {
    type Output = Quad<I>;
    fn neg(self) -> Quad<I> {
        Quad {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl<I: Integer + Signed + Clone> Neg for &Quad<I> {
    type Output = Quad<I>;
    fn neg(self) -> Quad<I> {
        -self.clone()
    }
}

impl<I> fmt::Display for Quad<I>
where
    I: Integer + Signed + Clone + fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let surd = |c: &Ratio<I>| {
            if c.is_one() {
                "√5".to_string()
            } else {
                format!("{c}√5")
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) if self.b.is_negative() => write!(f, "−{}", surd(&-self.b.clone())),
            (true, false) => f.write_str(&surd(&self.b)),
            (false, false) if self.b.is_negative() => {
                write!(f, "{} − {}", self.a, surd(&-self.b.clone()))
            }
            (false, false) => write!(f, "{} + {}", self.a, surd(&self.b)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;

    type Q = Quad<BigInt>;

    fn q(p: i64, qd: i64, r: i64, s: i64) -> Q {
        Q::from_parts(p.into(), qd.into(), r.into(), s.into())
    }

    #[test]
    fn golden_ratio_relations() {
        let a = Q::alpha();
        let b = Q::beta();
        assert_eq!(&a + &b, Q::one());
        assert_eq!(&a * &b, -Q::one());
        // α² = α + 1
        assert_eq!(&a * &a, &a + &Q::one());
        assert_eq!(a.inv().unwrap(), -b.clone());
    }

    #[test]
    fn conjugation() {
        assert_eq!(quad_conjugate(&Q::alpha()), Q::beta());
        assert_eq!(quad_conjugate(&Q::one()), Q::one());
        let a = Q::alpha();
        let b = Q::beta();
        assert_eq!(quad_conjugate(&(&a * &a)), &b * &b);
        assert_eq!(quad_conjugate(&quad_conjugate(&a)), a);
    }

    #[test]
    fn norm_is_multiplicative_at_samples() {
        let x = q(3, 2, -1, 7);
        let y = q(-5, 3, 2, 1);
        assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        assert_eq!(Q::alpha().norm(), Ratio::from_integer(BigInt::from(-1)));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(Q::zero().inv().is_none());
        assert!(Q::zero().powi(-1).is_none());
        assert_eq!(Q::zero().powi(0), Some(Q::one()));
    }

    #[test]
    fn exact_sign() {
        assert_eq!(Q::alpha().cmp_zero(), Ordering::Greater);
        assert_eq!(Q::beta().cmp_zero(), Ordering::Less);
        // 9/4 − √5 ≈ 0.0139 > 0, and 2 − √5 < 0
        assert_eq!(q(9, 4, -1, 1).cmp_zero(), Ordering::Greater);
        assert_eq!(q(2, 1, -1, 1).cmp_zero(), Ordering::Less);
        assert_eq!(Q::zero().cmp_zero(), Ordering::Equal);
        assert_eq!(q(-3, 1, 3, 2).cmp_zero(), Ordering::Greater);
    }

    #[test]
    fn machine_width_instantiation() {
        let a = Quad::<i64>::alpha();
        let a4 = a.powi(4).unwrap();
        // 3α + 2 = α⁴
        let three = Quad::<i64>::from_integer(3);
        let two = Quad::<i64>::from_integer(2);
        assert_eq!(&(&three * &a) + &two, a4);
    }

    #[test]
    fn display() {
        assert_eq!(Q::alpha().to_string(), "1/2 + 1/2√5");
        assert_eq!(Q::beta().to_string(), "1/2 − 1/2√5");
        assert_eq!(Q::sqrt5().to_string(), "√5");
        assert_eq!((-Q::sqrt5()).to_string(), "−√5");
        assert_eq!(Q::one().to_string(), "1");
    }
}
