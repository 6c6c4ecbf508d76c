use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Signed;

use super::Quad;
use crate::QuadElem;

/// Which of the two companion sequences a series uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Sequence {
    /// Fibonacci numbers, F₀ = 0, F₁ = 1.
    Fibonacci,
    /// Lucas numbers, L₀ = 2, L₁ = 1.
    Lucas,
}

impl Sequence {
    pub fn letter(self) -> char {
        match self {
            Sequence::Fibonacci => 'F',
            Sequence::Lucas => 'L',
        }
    }

    /// Exact term at any integer index.
    pub fn term<I: Integer + Signed + Clone>(self, index: i64) -> I {
        let (f, l) = fib_lucas_pair::<I>(index);
        match self {
            Sequence::Fibonacci => f,
            Sequence::Lucas => l,
        }
    }
}

/// `(F_m, L_m)` for any integer `m`.
///
/// Fast doubling on |m|, then the reflections F₋ₙ = (−1)ⁿ⁺¹Fₙ and
/// L₋ₙ = (−1)ⁿLₙ.
pub fn fib_lucas_pair<I: Integer + Signed + Clone>(m: i64) -> (I, I) {
    let n = m.unsigned_abs();
    let (f, f_next) = fib_doubling::<I>(n);
    let two = I::one() + I::one();
    let l = two * f_next - f.clone();
    if m >= 0 || n % 2 == 0 {
        // even n: F₋ₙ = −Fₙ, L₋ₙ = Lₙ
        if m < 0 {
            (-f, l)
        } else {
            (f, l)
        }
    } else {
        (f, -l)
    }
}

/// Big-integer instantiation of [`fib_lucas_pair`].
pub fn fib_lucas(m: i64) -> (BigInt, BigInt) {
    fib_lucas_pair::<BigInt>(m)
}

/// (F_n, F_{n+1}) by fast doubling.
fn fib_doubling<I: Integer + Clone>(n: u64) -> (I, I) {
    let mut f = I::zero();
    let mut g = I::one();
    let two = I::one() + I::one();
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        // F_{2k} = F_k(2F_{k+1} − F_k),  F_{2k+1} = F_k² + F_{k+1}²
        let d = f.clone() * (two.clone() * g.clone() - f.clone());
        let e = f.clone() * f + g.clone() * g;
        if (n >> bit) & 1 == 1 {
            f = e.clone();
            g = d + e;
        } else {
            f = d;
            g = e;
        }
    }
    (f, g)
}

/// α^m = (L_m + F_m√5)/2, exact for every integer m.
pub fn alpha_power(m: i64) -> QuadElem {
    let (f, l) = fib_lucas(m);
    let two = BigInt::from(2);
    Quad::new(Ratio::new(l, two.clone()), Ratio::new(f, two))
}

/// Walks X_j, X_{j+s}, X_{j+2s}, … for s ∈ {1, 2} using only the recurrence.
#[derive(Clone, Debug)]
pub struct IndexStepper<I> {
    index: i64,
    current: I,
    next: I,
    step: u8,
}

impl<I: Integer + Signed + Clone> IndexStepper<I> {
    /// Panics if `step` is not 1 or 2.
    pub fn new(seq: Sequence, start: i64, step: u8) -> Self {
        assert!(step == 1 || step == 2, "index step must be 1 or 2");
        IndexStepper {
            index: start,
            current: seq.term(start),
            next: seq.term(start + 1),
            step,
        }
    }

    pub fn index(&self) -> i64 {
        self.index
    }

    pub fn current(&self) -> &I {
        &self.current
    }

    pub fn advance(&mut self) {
        let (x0, x1) = (self.current.clone(), self.next.clone());
        if self.step == 1 {
            self.current = x1.clone();
            self.next = x0 + x1;
        } else {
            // X_{j+2} = X_j + X_{j+1},  X_{j+3} = X_j + 2X_{j+1}
            self.current = x0.clone() + x1.clone();
            self.next = x0 + x1.clone() + x1;
        }
        self.index += i64::from(self.step);
    }
}

impl<I: Integer + Signed + Clone> Iterator for IndexStepper<I> {
    type Item = (i64, I);

    fn next(&mut self) -> Option<Self::Item> {
        let out = (self.index, self.current.clone());
        self.advance();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn pair(m: i64) -> (i64, i64) {
        fib_lucas_pair::<i64>(m)
    }

    #[test]
    fn initial_and_small_values() {
        assert_eq!(pair(0), (0, 2));
        assert_eq!(pair(1), (1, 1));
        assert_eq!(pair(10), (55, 123));
        assert_eq!(pair(-1), (1, -1));
        assert_eq!(pair(-4), (-3, 7));
        assert_eq!(pair(-5), (5, -11));
    }

    #[test]
    fn agrees_with_naive_recurrence() {
        // forward and backward iteration of the recurrence, |m| ≤ 1000
        let mut f = vec![BigInt::from(0), BigInt::from(1)];
        let mut l = vec![BigInt::from(2), BigInt::from(1)];
        for i in 2..=1000 {
            f.push(&f[i - 1] + &f[i - 2]);
            l.push(&l[i - 1] + &l[i - 2]);
        }
        for m in 0..=1000i64 {
            assert_eq!(fib_lucas(m), (f[m as usize].clone(), l[m as usize].clone()));
        }
        // X_{n-2} = X_n − X_{n-1}
        let (mut fa, mut fb) = (BigInt::from(1), BigInt::from(0)); // F_1, F_0
        let (mut la, mut lb) = (BigInt::from(1), BigInt::from(2));
        for m in (-1000..0i64).rev() {
            let fm = &fa - &fb;
            let lm = &la - &lb;
            assert_eq!(fib_lucas(m), (fm.clone(), lm.clone()), "m = {m}");
            fa = fb;
            fb = fm;
            la = lb;
            lb = lm;
        }
    }

    #[test]
    fn alpha_power_examples() {
        assert_eq!(alpha_power(0), QuadElem::one());
        let half = |p: i64| Ratio::new(BigInt::from(p), BigInt::from(2));
        assert_eq!(alpha_power(2), Quad::new(half(3), half(1)));
        assert_eq!(alpha_power(4), Quad::new(half(7), half(3)));
        assert_eq!(alpha_power(-1), -QuadElem::beta());
    }

    #[test]
    fn alpha_power_binet_window() {
        let a = QuadElem::alpha();
        let b = QuadElem::beta();
        let sqrt5 = QuadElem::sqrt5();
        for m in -200..=200i64 {
            let x = alpha_power(m);
            assert_eq!(x, a.powi(m).unwrap(), "m = {m}");
            let (f, l) = fib_lucas(m);
            let fq = QuadElem::from_integer(f);
            let lq = QuadElem::from_integer(l);
            assert_eq!(&x - &x.conjugate(), &fq * &sqrt5);
            assert_eq!(&x + &x.conjugate(), lq);
            // αᵐβᵐ = (−1)ᵐ
            let sign = if m % 2 == 0 { QuadElem::one() } else { -QuadElem::one() };
            assert_eq!(&x * &b.powi(m).unwrap(), sign);
        }
    }

    #[test]
    fn stepper_matches_direct_terms() {
        for seq in [Sequence::Fibonacci, Sequence::Lucas] {
            for step in [1u8, 2] {
                for (i, (idx, v)) in IndexStepper::<BigInt>::new(seq, -3, step).take(60).enumerate() {
                    assert_eq!(idx, -3 + i as i64 * i64::from(step));
                    assert_eq!(v, seq.term::<BigInt>(idx));
                }
            }
        }
    }
}
