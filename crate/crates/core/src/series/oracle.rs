use super::{RationalSeriesSpec, SeriesSpec};
use crate::{BigReal, PrecisionPolicy};

/// Either kind of series accepted by [`partial_sum_oracle`].
#[derive(Clone, Copy, Debug)]
pub enum PartialSum<'a> {
    Zeta(&'a SeriesSpec),
    Rational(&'a RationalSeriesSpec),
}

impl<'a> From<&'a SeriesSpec> for PartialSum<'a> {
    fn from(s: &'a SeriesSpec) -> Self {
        PartialSum::Zeta(s)
    }
}

impl<'a> From<&'a RationalSeriesSpec> for PartialSum<'a> {
    fn from(s: &'a RationalSeriesSpec) -> Self {
        PartialSum::Rational(s)
    }
}

/// Literal sum of the first `n` terms. Zeta series terms are rebuilt from
/// scratch at each k, without index stepping.
pub fn partial_sum_oracle<'a>(spec: impl Into<PartialSum<'a>>, n: u64, policy: &PrecisionPolicy) -> BigReal {
    let bits = policy.working_bits();
    let mut acc = BigReal::zero(bits);
    match spec.into() {
        PartialSum::Zeta(s) => {
            for k in s.first_k()..s.first_k() + n {
                acc += s.term(k, policy).expect("zeta argument ≥ 2");
            }
        }
        PartialSum::Rational(r) => {
            let eval = r.term_evaluator(bits);
            for i in 1..=n {
                acc += eval.term(i);
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Quad, Sequence};
    use crate::real::to_significant;
    use crate::series::SeriesFamily;
    use crate::Rational;
    use num_traits::One;

    #[test]
    fn single_and_double_terms() {
        let p = PrecisionPolicy::digits(12);
        let s = SeriesSpec::new(SeriesFamily::EvenZeta, Sequence::Fibonacci, 0).unwrap();
        assert_eq!(to_significant(&partial_sum_oracle(&s, 1, &p), 6), "0.644934");
        let r = RationalSeriesSpec::reciprocal("l", Rational::one(), vec![-Quad::alpha(), -Quad::beta()]).unwrap();
        assert_eq!(to_significant(&partial_sum_oracle(&r, 2, &p), 6), "1.20000");
    }
}
