//! Closed-form bounds and the parameter arithmetic of the main argument.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `exp(-(ε²/2)·n·p)`, bounding `P(X <= (1-ε)·np)` for `X ~ Bin(n, p)`.
pub fn chernoff_bound(n: u64, p: f64, eps: f64) -> Result<f64> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidArgument(format!("ε = {eps} must lie in (0, 1)")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!("p = {p} must lie in [0, 1]")));
    }
    Ok((-(eps * eps / 2.0) * n as f64 * p).exp())
}

/// `((Γ+1) / 2^{Γ/2})^n`, evaluated in log space.
pub fn acyclic_orientation_bound(gamma: &BigRational, n: u64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let g = gamma.to_f64().unwrap_or(f64::INFINITY);
    (n as f64 * ((g + 1.0).ln() - g / 2.0 * std::f64::consts::LN_2)).exp()
}

/// The same bound for a concrete graph, exactly. With `Γ = 2|E|/n` it equals
/// `(Γ+1)^n / 2^{|E|}`.
pub fn acyclic_orientation_bound_exact(g: &Graph) -> Result<BigRational> {
    let n = g.n();
    if n == 0 {
        return Ok(BigRational::one());
    }
    let base = g.average_degree()? + BigRational::one();
    let denom = BigInt::one() << g.edge_count();
    Ok(num_traits::pow(base, n) / BigRational::from_integer(denom))
}

/// Exact values behind the two binomial inequalities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop24 {
    pub r: u64,
    /// `C(r, ⌊r/2⌋)`.
    pub central_binomial: BigUint,
    pub two_pow_r: BigUint,
    pub first_holds: bool,
    /// `C(⌊r²/2⌋, r) / C(r², r)`.
    pub ratio: BigRational,
    /// `2^{-(r+2)}`.
    pub threshold: BigRational,
    pub second_holds: bool,
}

impl Prop24 {
    pub fn both_hold(&self) -> bool {
        self.first_holds && self.second_holds
    }
}

pub fn verify_prop_2_4(r: u64) -> Result<Prop24> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let big = |x: u64| BigUint::from(x);
    let central_binomial = binomial(big(r), big(r / 2));
    let two_pow_r = BigUint::one() << r;
    let r2 = r * r;
    let num = binomial(big(r2 / 2), big(r));
    let den = binomial(big(r2), big(r));
    let ratio = BigRational::new(num.into(), den.into());
    let threshold = BigRational::new(BigInt::one(), BigInt::one() << (r + 2));
    Ok(Prop24 {
        r,
        first_holds: central_binomial <= two_pow_r,
        central_binomial,
        two_pow_r,
        second_holds: ratio >= threshold,
        ratio,
        threshold,
    })
}

/// Outcome of a comparison made with outward-rounded floating point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// The enclosing intervals overlap.
    Undecided,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Undecided => "undecided",
        }
    }
}

/// A closed interval guaranteed to contain a real quantity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    /// Encloses a value computed with a handful of correctly rounded
    /// operations by widening `x` by `ulps` relative units on both sides.
    fn around(x: f64, ulps: f64) -> Interval {
        let w = x.abs() * f64::EPSILON * ulps + f64::MIN_POSITIVE;
        Interval { lo: x - w, hi: x + w }
    }

    fn add(self, o: Interval) -> Interval {
        Interval {
            lo: Interval::around(self.lo + o.lo, 1.0).lo,
            hi: Interval::around(self.hi + o.hi, 1.0).hi,
        }
    }

    fn scale(self, k: f64) -> Interval {
        debug_assert!(k >= 0.0);
        Interval {
            lo: Interval::around(self.lo * k, 1.0).lo,
            hi: Interval::around(self.hi * k, 1.0).hi,
        }
    }

    /// `ln` of a positive interval.
    fn ln(self) -> Interval {
        Interval {
            lo: Interval::around(self.lo.ln(), 4.0).lo,
            hi: Interval::around(self.hi.ln(), 4.0).hi,
        }
    }

    fn compare_ge(self, o: Interval) -> Verdict {
        if self.lo >= o.hi {
            Verdict::Holds
        } else if self.hi < o.lo {
            Verdict::Fails
        } else {
            Verdict::Undecided
        }
    }
}

/// Natural log of `2^e · m` for integers, enclosed.
fn ln_pow2_times(e: u64, m: u64) -> Interval {
    let ln2 = Interval::around(std::f64::consts::LN_2, 1.0);
    ln2.scale(e as f64).add(Interval::around(m as f64, 0.0).ln())
}

/// The arithmetic linking max cut, bounded-degree extraction and the orientation
/// step, for one `r`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParameterChain {
    pub r: u64,
    /// `r⁷·2^{3r+16}`.
    pub gamma: BigUint,
    /// `r⁶·2^{2r+6}`.
    pub d: BigUint,
    /// (i) `Γ > 16d` and `16d >= 32`.
    pub gamma_exceeds_16d: bool,
    /// `Γ/(128d)`.
    pub ratio: BigRational,
    /// `r·2^{r+3}`.
    pub ratio_expected: BigUint,
    /// (ii) exact equality of the two.
    pub ratio_exact: bool,
    /// `4d`, the guaranteed A-degree.
    pub four_d: BigUint,
    /// `r⁶·2^{2r+8}`, the degree the orientation step needs.
    pub orientation_degree: BigUint,
    /// (iii) `4d >= r⁶·2^{2r+8}`.
    pub degree_met: bool,
    /// `k = r·2^{r+6}`.
    pub k: BigUint,
    /// `ln(r⁶·2^{2r+8})`, enclosed.
    pub ln_available: Interval,
    /// `ln(k·(ln k)²·r³·2^{r+2})`, enclosed.
    pub ln_required: Interval,
    /// (iv) `r⁶·2^{2r+8} >= k·(ln k)²·r³·2^{r+2}`.
    pub saturation_degree: Verdict,
}

impl ParameterChain {
    pub fn all_hold(&self) -> bool {
        self.gamma_exceeds_16d && self.ratio_exact && self.degree_met && self.saturation_degree == Verdict::Holds
    }
}

pub fn verify_parameter_chain(r: u64) -> Result<ParameterChain> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let rb = BigUint::from(r);
    let pow2 = |e: u64| BigUint::one() << e;
    let gamma = num_traits::pow(rb.clone(), 7) * pow2(3 * r + 16);
    let d = num_traits::pow(rb.clone(), 6) * pow2(2 * r + 6);
    let sixteen_d = &d * 16u32;
    let gamma_exceeds_16d = gamma > sixteen_d && sixteen_d >= BigUint::from(32u32);
    let ratio = BigRational::new(gamma.clone().into(), BigInt::from(&d * 128u32));
    let ratio_expected = &rb * pow2(r + 3);
    let ratio_exact = ratio == BigRational::from_integer(ratio_expected.clone().into());
    let four_d = &d * 4u32;
    let orientation_degree = num_traits::pow(rb.clone(), 6) * pow2(2 * r + 8);
    let degree_met = four_d >= orientation_degree;
    let k = &rb * pow2(r + 6);

    // Logarithms avoid materializing the huge powers as floats.
    let ln_r = Interval::around(r as f64, 0.0).ln();
    let ln_available = ln_r.scale(6.0).add(ln_pow2_times(2 * r + 8, 1));
    let ln_k = ln_pow2_times(r + 6, r);
    let ln_required = ln_k
        .add(ln_k.ln().scale(2.0))
        .add(ln_r.scale(3.0))
        .add(ln_pow2_times(r + 2, 1));
    let saturation_degree = ln_available.compare_ge(ln_required);
    Ok(ParameterChain {
        r,
        gamma,
        d,
        gamma_exceeds_16d,
        ratio,
        ratio_expected,
        ratio_exact,
        four_d,
        orientation_degree,
        degree_met,
        k,
        ln_available,
        ln_required,
        saturation_degree,
    })
}
