use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::ExactRational;

/// The number `a + b sqrt(2)` with integer `a`, `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SqrtTwoInt {
    pub a: i64,
    pub b: i64,
}

impl SqrtTwoInt {
    pub const fn new(a: i64, b: i64) -> Self {
        SqrtTwoInt { a, b }
    }

    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * std::f64::consts::SQRT_2
    }

    /// Multiply by `num / den`, if the result still has integer parts.
    pub fn scale(self, num: i64, den: i64) -> Option<SqrtTwoInt> {
        let (a, b) = (self.a * num, self.b * num);
        (a % den == 0 && b % den == 0).then(|| SqrtTwoInt::new(a / den, b / den))
    }

    pub fn square(self) -> SqrtTwoInt {
        SqrtTwoInt::new(self.a * self.a + 2 * self.b * self.b, 2 * self.a * self.b)
    }

    /// Exact comparison against a rational.
    pub fn cmp_rational(self, r: &ExactRational) -> Ordering {
        // sign of (a - r) + b sqrt(2)
        let p = ExactRational::from(BigInt::from(self.a)) - r;
        let q = ExactRational::from(BigInt::from(self.b));
        sign_of_sum(&p, &q)
    }
}

/// Sign of `p + q sqrt(2)` for rationals `p`, `q`.
fn sign_of_sum(p: &ExactRational, q: &ExactRational) -> Ordering {
    let zero = ExactRational::zero();
    match (p.cmp(&zero), q.cmp(&zero)) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (sp, sq) if sp == sq => sp,
        (sp, _) => {
            // opposite signs: compare p^2 against 2 q^2
            let lhs = p * p;
            let rhs = q * q * ExactRational::from(BigInt::from(2));
            match lhs.cmp(&rhs) {
                Ordering::Equal => Ordering::Equal,
                Ordering::Greater => sp,
                Ordering::Less => sp.reverse(),
            }
        }
    }
}

impl fmt::Display for SqrtTwoInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}*sqrt(2)"),
            (a, b) if a.is_negative() => write!(f, "{b}*sqrt(2) - {}", -a),
            (a, b) => write!(f, "{b}*sqrt(2) + {a}"),
        }
    }
}

/// Average number of real lines on a random cubic surface, `6 sqrt(2) - 3`.
pub fn e3_closed_form() -> SqrtTwoInt {
    SqrtTwoInt::new(-3, 6)
}

/// `E|det J_3| = 4 sqrt(2) - 2`.
pub fn abs_det3_closed_form() -> SqrtTwoInt {
    SqrtTwoInt::new(-2, 4)
}
