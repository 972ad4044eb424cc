//! Low-degree real polynomials and generalized Laguerre polynomials.
//!
//! `Poly` carries the auxiliary polynomials of the NU construction, all of
//! which have degree at most two. Laguerre polynomials are evaluated two
//! independent ways: the three-term recurrence (production path) and the
//! explicit hypergeometric series (cross-check path, summed in double-double
//! arithmetic so that cancellation does not mask disagreement).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default relative tolerance for perfect-square detection.
pub const SQUARE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecfunError {
    #[error("polynomial {0} has a negative leading coefficient and no real square root")]
    NegativeLeading(Poly),
    #[error("laguerre scale must be positive, got {0}")]
    NonPositiveScale(f64),
}

/// Dense real polynomial `c0 + c1 s + c2 s^2`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Poly {
    coeffs: [f64; 3],
}

impl Poly {
    pub const ZERO: Poly = Poly { coeffs: [0.0; 3] };

    pub const fn new(c0: f64, c1: f64, c2: f64) -> Self {
        Self { coeffs: [c0, c1, c2] }
    }

    pub const fn constant(c0: f64) -> Self {
        Self::new(c0, 0.0, 0.0)
    }

    pub const fn linear(c0: f64, c1: f64) -> Self {
        Self::new(c0, c1, 0.0)
    }

    /// The monomial `s`.
    pub const fn s() -> Self {
        Self::new(0.0, 1.0, 0.0)
    }

    pub fn coeffs(&self) -> [f64; 3] {
        self.coeffs
    }

    pub fn c0(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn c1(&self) -> f64 {
        self.coeffs[1]
    }

    pub fn c2(&self) -> f64 {
        self.coeffs[2]
    }

    /// Index of the highest non-zero coefficient; the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| *c != 0.0).unwrap_or(0)
    }

    pub fn eval(&self, s: f64) -> f64 {
        let [c0, c1, c2] = self.coeffs;
        (c2 * s + c1) * s + c0
    }

    pub fn derivative(&self) -> Poly {
        Poly::linear(self.coeffs[1], 2.0 * self.coeffs[2])
    }

    /// Constant second derivative.
    pub fn second_derivative(&self) -> f64 {
        2.0 * self.coeffs[2]
    }

    /// Product, if it still fits in degree two.
    pub fn checked_mul(&self, other: &Poly) -> Option<Poly> {
        if self.degree() + other.degree() > 2 {
            return None;
        }
        let a = self.coeffs;
        let b = other.coeffs;
        Some(Poly::new(
            a[0] * b[0],
            a[0] * b[1] + a[1] * b[0],
            a[0] * b[2] + a[1] * b[1] + a[2] * b[0],
        ))
    }

    pub fn discriminant(&self) -> f64 {
        let [c0, c1, c2] = self.coeffs;
        c1 * c1 - 4.0 * c2 * c0
    }
}

/// Free-function form of [`Poly::eval`].
pub fn poly_eval(p: &Poly, s: f64) -> f64 {
    p.eval(s)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [c0, c1, c2] = self.coeffs;
        write!(f, "{c0} + {c1}·s + {c2}·s²")
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        let mut c = self.coeffs;
        for (ci, r) in c.iter_mut().zip(rhs.coeffs) {
            *ci += r;
        }
        Poly { coeffs: c }
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self * -1.0
    }
}

impl Mul<f64> for Poly {
    type Output = Poly;
    fn mul(self, rhs: f64) -> Poly {
        Poly { coeffs: self.coeffs.map(|c| c * rhs) }
    }
}

/// Finds a polynomial `q` with `q^2 = p`, leading coefficient of `q` non-negative.
///
/// A quadratic is accepted as a square when its discriminant is within
/// `tol * max(1, c1^2, |4 c2 c0|)` of zero. Linear polynomials are never squares.
pub fn perfect_square_decompose(p: &Poly, tol: f64) -> Result<Option<Poly>, SpecfunError> {
    let [c0, c1, c2] = p.coeffs();
    match p.degree() {
        2 => {
            if c2 < 0.0 {
                return Err(SpecfunError::NegativeLeading(*p));
            }
            let scale = 1f64.max(c1 * c1).max((4.0 * c2 * c0).abs());
            if p.discriminant().abs() > tol * scale {
                return Ok(None);
            }
            let lead = c2.sqrt();
            Ok(Some(Poly::linear(c1 / (2.0 * lead), lead)))
        }
        1 => Ok(None),
        _ => {
            if c0 < 0.0 {
                return Err(SpecfunError::NegativeLeading(*p));
            }
            Ok(Some(Poly::constant(c0.sqrt())))
        }
    }
}

/// Parameters of a scaled generalized Laguerre factor `L_n^a(scale * s)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaguerreSpec {
    pub n: usize,
    pub a: f64,
    pub scale: f64,
}

impl LaguerreSpec {
    pub fn new(n: usize, a: f64, scale: f64) -> Result<Self, SpecfunError> {
        if !(scale > 0.0) {
            return Err(SpecfunError::NonPositiveScale(scale));
        }
        Ok(Self { n, a, scale })
    }

    pub fn eval(&self, s: f64) -> f64 {
        laguerre_eval(self.n, self.a, self.scale * s)
    }

    /// `d^order/ds^order` of `L_n^a(scale * s)`.
    pub fn derivative(&self, order: usize, s: f64) -> f64 {
        self.scale.powi(order as i32) * laguerre_derivative(self.n, self.a, order, self.scale * s)
    }

    /// `B_n = 1/n!`.
    pub fn normalization(&self) -> f64 {
        1.0 / factorial(self.n)
    }
}

pub(crate) fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// `L_n^a(x)` by the forward three-term recurrence.
pub fn laguerre_eval(n: usize, a: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + a - x;
    for k in 2..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0 + a - x) * cur - (kf - 1.0 + a) * prev) / kf;
        prev = cur;
        cur = next;
    }
    cur
}

/// `d^order/dx^order L_n^a(x) = (-1)^order L_{n-order}^{a+order}(x)`.
pub fn laguerre_derivative(n: usize, a: f64, order: usize, x: f64) -> f64 {
    if order > n {
        return 0.0;
    }
    let sign = if order % 2 == 0 { 1.0 } else { -1.0 };
    sign * laguerre_eval(n - order, a + order as f64, x)
}

/// `L_n^a(x)` from the explicit series `sum_k (-1)^k C(n+a, n-k) x^k / k!`.
///
/// Generalized binomials are built as running products, and the whole sum is
/// carried in double-double precision.
pub fn laguerre_series(n: usize, a: f64, x: f64) -> f64 {
    let x = Dd::from(x);
    let mut sum = Dd::ZERO;
    for k in 0..=n {
        // C(n+a, n-k) = prod_{j=1}^{n-k} (a + k + j) / j
        let mut binom = Dd::ONE;
        for j in 1..=(n - k) {
            binom = binom.mul(Dd::from(a).add(Dd::from((k + j) as f64))).div_f64(j as f64);
        }
        let mut power = Dd::ONE;
        for i in 1..=k {
            power = power.mul(x).div_f64(i as f64);
        }
        let term = binom.mul(power);
        sum = if k % 2 == 0 { sum.add(term) } else { sum.add(term.neg()) };
    }
    sum.hi + sum.lo
}

/// `x y'' + (a + 1 - x) y' + n y` for `y = L_n^a(x)` with analytic derivatives.
pub fn laguerre_ode_residual(n: usize, a: f64, x: f64) -> f64 {
    let [t2, t1, t0] = laguerre_ode_terms(n, a, x);
    t2 + t1 + t0
}

/// The three terms of the Laguerre equation, for relative-residual scaling.
pub fn laguerre_ode_terms(n: usize, a: f64, x: f64) -> [f64; 3] {
    let y = laguerre_eval(n, a, x);
    let dy = laguerre_derivative(n, a, 1, x);
    let d2y = laguerre_derivative(n, a, 2, x);
    [x * d2y, (a + 1.0 - x) * dy, n as f64 * y]
}

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    fn two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        let bb = s - a;
        let err = (a - (s - bb)) + (b - bb);
        Dd { hi: s, lo: err }
    }

    fn quick_two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        Dd { hi: s, lo: b - (s - a) }
    }

    fn add(self, other: Dd) -> Dd {
        let s = Dd::two_sum(self.hi, other.hi);
        let t = Dd::two_sum(self.lo, other.lo);
        let r = Dd::quick_two_sum(s.hi, s.lo + t.hi);
        Dd::quick_two_sum(r.hi, r.lo + t.lo)
    }

    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    fn mul(self, other: Dd) -> Dd {
        let p = self.hi * other.hi;
        let err = self.hi.mul_add(other.hi, -p);
        let lo = err + (self.hi * other.lo + self.lo * other.hi);
        Dd::quick_two_sum(p, lo)
    }

    fn div_f64(self, d: f64) -> Dd {
        let q1 = self.hi / d;
        // remainder self - q1*d, exact via fma
        let prod = q1 * d;
        let prod_err = q1.mul_add(d, -prod);
        let r = Dd::two_sum(self.hi, -prod);
        let rem = r.hi + (r.lo - prod_err + self.lo);
        let q2 = rem / d;
        Dd::quick_two_sum(q1, q2)
    }
}

impl From<f64> for Dd {
    fn from(v: f64) -> Dd {
        Dd { hi: v, lo: 0.0 }
    }
}
