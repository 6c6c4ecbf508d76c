use std::fmt;

use num_traits::{One, Zero};

use crate::real::quad_to_real_bits;
use crate::special::digamma;
use crate::{BigReal, Error, PrecisionPolicy, QuadElem, Rational, Result};

/// Σ_{n≥1} P(n)/Q(n) with Q = c·Π(n − ρ_i) given by its exact roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalSeriesSpec {
    label: String,
    numerator: Vec<Rational>,
    leading: Rational,
    roots: Vec<QuadElem>,
}

impl RationalSeriesSpec {
    /// `numerator` lists coefficients from the constant term upwards.
    pub fn new(
        label: impl Into<String>,
        numerator: Vec<Rational>,
        leading: Rational,
        roots: Vec<QuadElem>,
    ) -> Result<Self> {
        let spec = RationalSeriesSpec {
            label: label.into(),
            numerator,
            leading,
            roots,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// 1 / (c · Π(n − ρ_i)).
    pub fn reciprocal(label: impl Into<String>, leading: Rational, roots: Vec<QuadElem>) -> Result<Self> {
        Self::new(label, vec![Rational::one()], leading, roots)
    }

    fn validate(&self) -> Result<()> {
        if self.leading.is_zero() {
            return Err(Error::DegreeError {
                numerator: self.numerator_degree().unwrap_or(0),
                denominator: 0,
            });
        }
        let num_deg = self.numerator_degree().ok_or(Error::DegreeError {
            numerator: 0,
            denominator: self.roots.len(),
        })?;
        if self.roots.len() < num_deg + 2 {
            return Err(Error::DegreeError {
                numerator: num_deg,
                denominator: self.roots.len(),
            });
        }
        for (i, a) in self.roots.iter().enumerate() {
            if self.roots[i + 1..].contains(a) {
                return Err(Error::RepeatedRoot { root: a.to_string() });
            }
        }
        Ok(())
    }

    /// Degree of P, or None for the zero polynomial.
    pub fn numerator_degree(&self) -> Option<usize> {
        self.numerator.iter().rposition(|c| !c.is_zero())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn numerator(&self) -> &[Rational] {
        &self.numerator
    }

    pub fn leading(&self) -> &Rational {
        &self.leading
    }

    pub fn roots(&self) -> &[QuadElem] {
        &self.roots
    }

    fn numerator_at(&self, x: &QuadElem) -> QuadElem {
        self.numerator.iter().rev().fold(QuadElem::zero(), |acc, c| {
            &(&acc * x) + &QuadElem::from_rational(c.clone())
        })
    }

    /// n-th term in floating point.
    pub fn term(&self, n: u64, bits: u32) -> BigReal {
        self.term_evaluator(bits).term(n)
    }

    pub(crate) fn term_evaluator(&self, bits: u32) -> TermEvaluator {
        TermEvaluator {
            bits,
            numerator: self.numerator.iter().map(|c| BigReal::from_rational(c, bits)).collect(),
            leading: BigReal::from_rational(&self.leading, bits),
            roots: self.roots.iter().map(|r| quad_to_real_bits(r, bits)).collect(),
        }
    }
}

/// Coefficients and roots converted once, for long literal sums.
pub(crate) struct TermEvaluator {
    bits: u32,
    numerator: Vec<BigReal>,
    leading: BigReal,
    roots: Vec<BigReal>,
}

impl TermEvaluator {
    pub(crate) fn term(&self, n: u64) -> BigReal {
        let x = BigReal::from_i64(n as i64, self.bits);
        let mut num = BigReal::zero(self.bits);
        for c in self.numerator.iter().rev() {
            num = num * &x + c;
        }
        let mut den = self.leading.clone();
        for r in &self.roots {
            den *= &x - r;
        }
        num / den
    }
}

impl fmt::Display for RationalSeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// Exact residues r_i = P(ρ_i) / (c·Π_{j≠i}(ρ_i − ρ_j)).
pub fn partial_fraction_residues(rspec: &RationalSeriesSpec) -> Result<Vec<(QuadElem, QuadElem)>> {
    rspec.validate()?;
    let lead = QuadElem::from_rational(rspec.leading.clone());
    rspec
        .roots
        .iter()
        .enumerate()
        .map(|(i, rho)| {
            let mut den = lead.clone();
            for (j, other) in rspec.roots.iter().enumerate() {
                if i != j {
                    den = &den * &(rho - other);
                }
            }
            let r = rspec
                .numerator_at(rho)
                .checked_div(&den)
                .ok_or_else(|| Error::RepeatedRoot { root: rho.to_string() })?;
            Ok((rho.clone(), r))
        })
        .collect()
}

/// Σ_{n≥1} P(n)/Q(n) = −Σ r_i ψ(1 − ρ_i).
pub fn sum_rational_series(rspec: &RationalSeriesSpec, policy: &PrecisionPolicy) -> Result<BigReal> {
    let bits = policy.working_bits();
    let mut acc = BigReal::zero(bits);
    for (rho, r) in partial_fraction_residues(rspec)? {
        let shifted: QuadElem = &QuadElem::one() - &rho;
        if !shifted.is_positive() {
            return Err(Error::domain(
                "digamma",
                format!("shifted argument 1 − ({rho}) = {shifted} is not positive"),
            ));
        }
        let psi = digamma(&quad_to_real_bits(&shifted, bits), policy)?;
        acc -= quad_to_real_bits(&r, bits) * psi;
    }
    Ok(acc)
}


#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use crate::real::to_significant;

    fn int(v: i64) -> QuadElem {
        QuadElem::from_integer(BigInt::from(v))
    }

    fn lemma() -> RationalSeriesSpec {
        RationalSeriesSpec::reciprocal("Σ_{n≥1} 1/(n²+n−1)", Rational::one(), vec![-QuadElem::alpha(), -QuadElem::beta()])
            .unwrap()
    }

    #[test]
    fn golden_pair_residues() {
        let res = partial_fraction_residues(&lemma()).unwrap();
        let fifth = QuadElem::new(Rational::zero(), Rational::new(1.into(), 5.into()));
        assert_eq!(res[0].1, -fifth.clone());
        assert_eq!(res[1].1, fifth);
    }

    #[test]
    fn telescoping() {
        let s = RationalSeriesSpec::reciprocal("Σ 1/(n(n+1))", Rational::one(), vec![int(0), int(-1)]).unwrap();
        let res = partial_fraction_residues(&s).unwrap();
        assert_eq!(res[0].1, int(1));
        assert_eq!(res[1].1, int(-1));
        let p = PrecisionPolicy::digits(30);
        let v = sum_rational_series(&s, &p).unwrap();
        assert!((v - 1).abs() <= p.tolerance());
    }

    #[test]
    fn lemma_value() {
        let v = sum_rational_series(&lemma(), &PrecisionPolicy::digits(20)).unwrap();
        assert_eq!(to_significant(&v, 6), "1.54625");
    }

    #[test]
    fn four_roots_sum_to_zero() {
        let a2 = QuadElem::alpha() * QuadElem::alpha();
        let b2 = QuadElem::beta() * QuadElem::beta();
        let s = RationalSeriesSpec::reciprocal("aux", Rational::one(), vec![int(0), int(-1), -a2, -b2]).unwrap();
        let res = partial_fraction_residues(&s).unwrap();
        let total = res.iter().fold(QuadElem::zero(), |acc, (_, r)| &acc + r);
        assert!(total.is_zero());
    }

    #[test]
    fn invariants() {
        let one = Rational::one();
        let err = RationalSeriesSpec::reciprocal("x", one.clone(), vec![int(0)]).unwrap_err();
        assert!(matches!(err, Error::DegreeError { numerator: 0, denominator: 1 }));
        let err = RationalSeriesSpec::reciprocal("x", one.clone(), vec![int(-1), int(-1)]).unwrap_err();
        assert!(matches!(err, Error::RepeatedRoot { .. }));
        let err = RationalSeriesSpec::new("x", vec![Rational::zero(), one.clone()], one.clone(), vec![int(0), int(-1)])
            .unwrap_err();
        assert!(matches!(err, Error::DegreeError { numerator: 1, denominator: 2 }));
    }

    #[test]
    fn non_positive_shift_is_domain_error() {
        // root 2 makes 1 − ρ = −1
        let s = RationalSeriesSpec::reciprocal("x", Rational::one(), vec![int(0), int(2), int(-3)]).unwrap();
        let err = sum_rational_series(&s, &PrecisionPolicy::digits(10)).unwrap_err();
        assert!(matches!(err, Error::Domain { .. }));
    }
}
