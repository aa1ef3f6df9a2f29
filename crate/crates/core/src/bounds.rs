//! Exact rational evaluation of the three-cycle Ramsey coefficients, the
//! host sizes of the two-color hole lemmas, and the sizes of the
//! lower-bound colorings.
//!
//! Square roots are never approximated silently: a rational square root is
//! exact when its argument is a square of a rational, and otherwise an
//! enclosure rounded outward (up for quantities that must not be
//! under-reported, down where a lower bound is needed).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::Parity;

pub type Rational = BigRational;

/// Denominator used for non-exact square root enclosures.
const SQRT_SCALE: u64 = 1_000_000_000;

pub fn int(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"3"`, `"-2/5"` or `"0.005"` exactly. Exponent notation is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Precondition(format!("not a rational number: '{s}'"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        let mag: BigInt = if digits.is_empty() { return Err(bad()) } else { digits.parse().map_err(|_| bad())? };
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let r = Rational::new(mag, den);
        return Ok(if negative { -r } else { r });
    }
    s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad())
}

pub fn floor(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

pub fn ceil(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

fn to_u64(x: &BigInt) -> Result<u64> {
    x.to_u64().ok_or_else(|| Error::Precondition(format!("value {x} out of range")))
}

/// `sqrt(x)` exactly when `x` is the square of a rational.
pub fn sqrt_exact(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let (p, q) = (x.numer(), x.denom());
    let (rp, rq) = (p.sqrt(), q.sqrt());
    (&rp * &rp == *p && &rq * &rq == *q).then(|| Rational::new(rp, rq))
}

/// Rational `r >= sqrt(x)`, equal when `sqrt(x)` is rational.
pub fn sqrt_upper(x: &Rational) -> Rational {
    sqrt_exact(x).unwrap_or_else(|| {
        let scaled = floor(&(x * int(SQRT_SCALE as i64 * SQRT_SCALE as i64)));
        Rational::new(scaled.sqrt() + 1, BigInt::from(SQRT_SCALE))
    })
}

/// Rational `r <= sqrt(x)`, equal when `sqrt(x)` is rational.
pub fn sqrt_lower(x: &Rational) -> Rational {
    sqrt_exact(x).unwrap_or_else(|| {
        let scaled = floor(&(x * int(SQRT_SCALE as i64 * SQRT_SCALE as i64)));
        Rational::new(scaled.sqrt(), BigInt::from(SQRT_SCALE))
    })
}

fn max_of<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> Rational {
    xs.into_iter().max().cloned().expect("non-empty")
}

/// Largest integer of the given parity not exceeding `x`.
pub fn floor_parity(x: &Rational, parity: Parity) -> Result<u64> {
    let min = match parity {
        Parity::Odd => 3,
        Parity::Even => 2,
    };
    if *x < int(min) {
        return Err(Error::UndefinedTarget(format!("{x} is below {min} for a {parity} target")));
    }
    let f = floor(x);
    let f = if Parity::of(f.mod_floor(&BigInt::from(2)).to_usize().unwrap_or(0)) == parity { f } else { f - 1 };
    to_u64(&f)
}

/// Which statement of the main theorem a parity pattern falls under, in
/// canonical order (even targets first).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremCase {
    /// (even, even, even)
    AllEven,
    /// (even, even, odd)
    TwoEvenOneOdd,
    /// (even, odd, odd)
    OneEvenTwoOdd,
    /// (odd, odd, odd)
    AllOdd,
}

impl fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremCase::AllEven => "even-even-even",
            TheoremCase::TwoEvenOneOdd => "even-even-odd",
            TheoremCase::OneEvenTwoOdd => "even-odd-odd",
            TheoremCase::AllOdd => "odd-odd-odd",
        })
    }
}

/// Three cycle targets `C_{floor_p(alpha_i n)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetTriple {
    pub alphas: [Rational; 3],
    pub parities: [Parity; 3],
    pub n: u64,
}

impl TargetTriple {
    pub fn new(alphas: [Rational; 3], parities: [Parity; 3], n: u64) -> Result<Self> {
        let t = Self { alphas, parities, n };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Precondition("scale n must be positive".into()));
        }
        for (i, a) in self.alphas.iter().enumerate() {
            if !a.is_positive() {
                return Err(Error::Precondition(format!("alpha_{} = {a} must be positive", i + 1)));
            }
            let len = self.target_length(i)?;
            let min = if self.parities[i] == Parity::Odd { 3 } else { 4 };
            if len < min {
                return Err(Error::UndefinedTarget(format!("target {} has length {len} < {min}", i + 1)));
            }
        }
        Ok(())
    }

    /// `floor_p(alpha_i * n)` for target `i` (0-based).
    pub fn target_length(&self, i: usize) -> Result<u64> {
        floor_parity(&(&self.alphas[i] * int(self.n as i64)), self.parities[i])
    }

    pub fn target_lengths(&self) -> Result<[u64; 3]> {
        Ok([self.target_length(0)?, self.target_length(1)?, self.target_length(2)?])
    }
}

/// Targets reordered so even parities come first; inside each parity class
/// the larger `alpha` comes first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Canonical {
    pub case: TheoremCase,
    /// `order[j]` is the original index of canonical slot `j`.
    pub order: [usize; 3],
    #[serde(serialize_with = "ser_rationals")]
    pub alphas: [Rational; 3],
}

fn ser_rationals<S: serde::Serializer>(xs: &[Rational; 3], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(3))?;
    for x in xs {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub fn canonicalize(alphas: &[Rational; 3], parities: &[Parity; 3]) -> Canonical {
    let mut order = [0, 1, 2];
    order.sort_by(|&a, &b| parities[a].cmp(&parities[b]).then(alphas[b].cmp(&alphas[a])).then(a.cmp(&b)));
    let evens = parities.iter().filter(|&&p| p == Parity::Even).count();
    let case = match evens {
        3 => TheoremCase::AllEven,
        2 => TheoremCase::TwoEvenOneOdd,
        1 => TheoremCase::OneEvenTwoOdd,
        _ => TheoremCase::AllOdd,
    };
    Canonical { case, order, alphas: order.map(|i| alphas[i].clone()) }
}

/// Leading coefficient `c` with `R = (c + o(1)) n` for the given targets.
pub fn theorem_coefficient(t: &TargetTriple) -> Result<(Rational, Canonical)> {
    t.validate()?;
    Ok(coefficient_for(&t.alphas, &t.parities))
}

/// The coefficient formula for positive `alphas`, without the target-length
/// checks of [`TargetTriple`].
pub fn coefficient_for(alphas: &[Rational; 3], parities: &[Parity; 3]) -> (Rational, Canonical) {
    let canon = canonicalize(alphas, parities);
    let [a1, a2, a3] = &canon.alphas;
    let half = ratio(1, 2);
    let c = match canon.case {
        TheoremCase::AllEven => &half * (a1 + a2 + a3) + &half * max_of([a1, a2, a3]),
        TheoremCase::TwoEvenOneOdd => max_of(&[int(2) * a1 + a2, a1 + int(2) * a2, &half * a1 + &half * a2 + a3]),
        TheoremCase::OneEvenTwoOdd => max_of(&[int(4) * a1, a1 + int(2) * a2, a1 + int(2) * a3]),
        TheoremCase::AllOdd => int(4) * max_of([a1, a2, a3]),
    };
    (c, canon)
}

/// `max{0.5a + 0.5b + max{0.5a, 0.5b, nu}, 1.5a + max{0.5a, nu}}`.
pub fn xi(alpha: &Rational, beta: &Rational, nu: &Rational) -> Rational {
    let half = ratio(1, 2);
    let ha = &half * alpha;
    let hb = &half * beta;
    let first = &ha + &hb + max_of([&ha, &hb, nu]);
    let second = ratio(3, 2) * alpha + max_of([&ha, nu]);
    first.max(second)
}

/// Parameters of the two-color lemmas on a complete graph with one hole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoleParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub nu: Rational,
    pub epsilon: Rational,
}

impl HoleParams {
    pub fn validate(&self) -> Result<()> {
        if !self.alpha.is_positive() || !self.beta.is_positive() {
            return Err(Error::Hypothesis("alpha and beta must be positive".into()));
        }
        if self.nu.is_negative() {
            return Err(Error::Hypothesis("nu must be non-negative".into()));
        }
        if max_of([&self.alpha, &self.beta, &self.nu]) != Rational::one() {
            return Err(Error::Hypothesis("max{alpha, beta, nu} must equal 1".into()));
        }
        let cap = ratio(1, 100) * (&self.alpha).min(&self.beta);
        if !self.epsilon.is_positive() || self.epsilon >= cap {
            return Err(Error::Hypothesis(format!("epsilon = {} must lie in (0, {cap})", self.epsilon)));
        }
        Ok(())
    }
}

/// `ceil((0.5a + 0.5b + max{nu, 0.5a, 0.5b} + 3 sqrt(eps)) n)`.
pub fn lemma_dwa_host_size(p: &HoleParams, n: u64) -> Result<u64> {
    p.validate()?;
    let half = ratio(1, 2);
    let ha = &half * &p.alpha;
    let hb = &half * &p.beta;
    let coef = &ha + &hb + max_of([&p.nu, &ha, &hb]) + int(3) * sqrt_upper(&p.epsilon);
    to_u64(&ceil(&(coef * int(n as i64))))
}

/// `ceil((xi(a, b, nu) + 5 sqrt(eps)) n)`.
pub fn lemma_trzy_host_size(p: &HoleParams, n: u64) -> Result<u64> {
    p.validate()?;
    let coef = xi(&p.alpha, &p.beta, &p.nu) + int(5) * sqrt_upper(&p.epsilon);
    to_u64(&ceil(&(coef * int(n as i64))))
}

/// One lower-bound coloring and the number of vertices it colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionSize {
    pub id: ConstructionId,
    /// Cycle lengths handed to the builder, in the builder's argument order.
    pub lengths: Vec<u64>,
    pub vertices: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionId {
    /// Four cliques of size `m - 1`; the other two colors are bipartite.
    FourCliques,
    /// (even, even, odd): four parts, two large cliques.
    EeoFourPart,
    /// (even, even, odd): three parts.
    EeoThreePart,
    /// (even, odd, odd): four parts, built from the first odd target.
    OeeFourPart,
    /// (even, odd, odd): the same with the second odd target.
    OeeFourPartTwin,
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstructionId::FourCliques => "four-cliques",
            ConstructionId::EeoFourPart => "eeo-four-part",
            ConstructionId::EeoThreePart => "eeo-three-part",
            ConstructionId::OeeFourPart => "oee-four-part",
            ConstructionId::OeeFourPartTwin => "oee-four-part-twin",
        })
    }
}

/// Vertex counts of the lower-bound colorings available for the targets,
/// evaluated at the concrete target lengths (canonical order).
pub fn construction_sizes(t: &TargetTriple) -> Result<Vec<ConstructionSize>> {
    t.validate()?;
    let canon = canonicalize(&t.alphas, &t.parities);
    let lens = t.target_lengths()?;
    let [m1, m2, m3] = canon.order.map(|i| lens[i]);
    let size = |id, lengths: Vec<u64>, vertices: u64| ConstructionSize { id, lengths, vertices };
    Ok(match canon.case {
        TheoremCase::AllEven => Vec::new(),
        TheoremCase::TwoEvenOneOdd => {
            // Builders need the longer even target first.
            let (a, b) = if m1 >= m2 { (m1, m2) } else { (m2, m1) };
            vec![
                size(ConstructionId::EeoFourPart, vec![a, b], 2 * a + b - 4),
                size(ConstructionId::EeoThreePart, vec![a, b, m3], a / 2 + b / 2 + m3 - 3),
            ]
        }
        TheoremCase::OneEvenTwoOdd => vec![
            size(ConstructionId::OeeFourPart, vec![m1, m2], m1 + 2 * m2 - 4),
            size(ConstructionId::OeeFourPartTwin, vec![m1, m3], m1 + 2 * m3 - 4),
            size(ConstructionId::FourCliques, vec![m1], 4 * m1 - 4),
        ],
        TheoremCase::AllOdd => {
            let m = m1.max(m2).max(m3);
            vec![size(ConstructionId::FourCliques, vec![m], 4 * m - 4)]
        }
    })
}

/// Decimal rendering with `digits` fractional digits, truncated toward zero.
pub fn to_decimal(x: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (x.abs() * Rational::from_integer(scale.clone())).floor().to_integer();
    let (whole, frac) = scaled.div_rem(&scale);
    let sign = if x.is_negative() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{:0>width$}", frac.to_string(), width = digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(q("3"), int(3));
        assert_eq!(q("-2/4"), ratio(-1, 2));
        assert_eq!(q("0.005"), ratio(1, 200));
        assert_eq!(q("-1.25"), ratio(-5, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn floor_parity_examples() {
        assert_eq!(floor_parity(&q("5.5"), Parity::Odd).unwrap(), 5);
        assert_eq!(floor_parity(&q("5.5"), Parity::Even).unwrap(), 4);
        assert_eq!(floor_parity(&q("6"), Parity::Even).unwrap(), 6);
        assert_eq!(floor_parity(&q("3"), Parity::Odd).unwrap(), 3);
        assert!(matches!(floor_parity(&q("2.9"), Parity::Odd), Err(Error::UndefinedTarget(_))));
        assert!(floor_parity(&q("1.5"), Parity::Even).is_err());
    }

    #[test]
    fn sqrt_enclosures() {
        assert_eq!(sqrt_upper(&q("0.0001")), ratio(1, 100));
        assert_eq!(sqrt_lower(&q("9/4")), ratio(3, 2));
        let two = int(2);
        let (lo, hi) = (sqrt_lower(&two), sqrt_upper(&two));
        assert!(&lo * &lo < two && &hi * &hi > two);
        assert!(hi - lo <= ratio(1, SQRT_SCALE as i64));
    }

    #[test]
    fn xi_examples() {
        assert_eq!(xi(&int(1), &int(1), &int(0)), int(2));
        assert_eq!(xi(&int(1), &int(1), &int(1)), ratio(5, 2));
        assert_eq!(xi(&int(2), &int(1), &int(0)), int(4));
    }

    #[test]
    fn dwa_host_size_examples() {
        let p = |a: &str, b: &str, nu: &str| HoleParams { alpha: q(a), beta: q(b), nu: q(nu), epsilon: q("0.0001") };
        assert_eq!(lemma_dwa_host_size(&p("1", "1", "0"), 100).unwrap(), 153);
        assert_eq!(lemma_dwa_host_size(&p("1", "1", "1"), 100).unwrap(), 203);
        assert_eq!(lemma_dwa_host_size(&p("1", "0.5", "1"), 100).unwrap(), 178);
        assert!(lemma_dwa_host_size(&p("0.5", "0.5", "0.5"), 100).is_err());
        let mut bad = p("1", "1", "0");
        bad.epsilon = q("0.01");
        assert!(matches!(lemma_dwa_host_size(&bad, 100), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn target_triple_validation() {
        use Parity::*;
        assert!(TargetTriple::new([int(1), int(1), int(1)], [Odd, Odd, Odd], 3).is_ok());
        assert!(matches!(TargetTriple::new([int(1), int(1), int(1)], [Even, Odd, Odd], 3), Err(Error::UndefinedTarget(_))));
        assert!(TargetTriple::new([int(0), int(1), int(1)], [Odd, Odd, Odd], 10).is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&ratio(5, 2), 3), "2.500");
        assert_eq!(to_decimal(&ratio(-1, 3), 4), "-0.3333");
        assert_eq!(to_decimal(&int(7), 0), "7");
    }
}
