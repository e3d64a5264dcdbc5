//! Exact numbers of the form `(a + b·√d) / c` with integer `a, b, c`,
//! `c > 0` and square-free `d`.
//!
//! Arithmetic is exact in `i128` with checked operations. Strongly regular
//! parameters are capped at `n <= 10_000`, which keeps every intermediate
//! used in this crate several orders of magnitude below `i128::MAX`; an
//! overflow therefore indicates misuse and panics.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Surd {
    a: i128,
    b: i128,
    /// Square-free radicand, `0` when the number is rational.
    d: i128,
    c: i128,
}

fn gcd(mut x: i128, mut y: i128) -> i128 {
    x = x.abs();
    y = y.abs();
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

fn ck(v: Option<i128>) -> i128 {
    v.expect("exact arithmetic overflow")
}

/// Splits `n >= 0` as `s² · d` with `d` square-free. Returns `(s, d)`.
pub fn square_free_split(n: i128) -> (i128, i128) {
    assert!(n >= 0, "negative radicand");
    let (mut s, mut d) = (1i128, 1i128);
    let mut rest = n;
    if rest == 0 {
        return (0, 1);
    }
    let mut p = 2i128;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            d *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (s, d * rest)
}

/// Integer square root when `n` is a perfect square.
pub fn exact_sqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let (s, d) = square_free_split(n);
    (d == 1).then_some(s)
}

impl Surd {
    /// `(a + b·√radicand) / c` for any non-negative radicand and `c != 0`.
    pub fn new(a: i128, b: i128, radicand: i128, c: i128) -> Self {
        assert!(c != 0, "zero denominator");
        let (s, d) = square_free_split(radicand);
        let (a, b) = if d == 1 {
            (ck(a.checked_add(ck(b.checked_mul(s)))), 0)
        } else {
            (a, ck(b.checked_mul(s)))
        };
        Self::normalized(a, b, if b == 0 { 0 } else { d }, c)
    }

    pub fn int(v: i128) -> Self {
        Self { a: v, b: 0, d: 0, c: 1 }
    }

    pub fn ratio(p: i128, q: i128) -> Self {
        Self::new(p, 0, 0, q)
    }

    fn normalized(mut a: i128, mut b: i128, d: i128, mut c: i128) -> Self {
        if c < 0 {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = gcd(gcd(a, b), c);
        let g = if g == 0 { 1 } else { g };
        let d = if b == 0 { 0 } else { d };
        Self {
            a: a / g,
            b: b / g,
            d,
            c: c / g,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b == 0
    }

    /// `(numerator, denominator)` when rational.
    pub fn as_ratio(&self) -> Option<(i128, i128)> {
        self.is_rational().then_some((self.a, self.c))
    }

    pub fn as_integer(&self) -> Option<i128> {
        (self.is_rational() && self.c == 1).then_some(self.a)
    }

    /// Components `(a, b, d, c)` of `(a + b·√d) / c`.
    pub fn parts(&self) -> (i128, i128, i128, i128) {
        (self.a, self.b, self.d, self.c)
    }

    pub fn to_f64(&self) -> f64 {
        (self.a as f64 + self.b as f64 * (self.d as f64).sqrt()) / self.c as f64
    }

    fn field(&self, other: &Self) -> i128 {
        match (self.d, other.d) {
            (0, d) | (d, 0) => d,
            (x, y) if x == y => x,
            (x, y) => panic!("mixing √{x} and √{y}"),
        }
    }

    pub fn compatible(&self, other: &Self) -> bool {
        self.d == 0 || other.d == 0 || self.d == other.d
    }

    pub fn signum(&self) -> i32 {
        let sa = self.a.signum() as i32;
        let sb = self.b.signum() as i32;
        if sb == 0 || sa == sb {
            return if sa != 0 { sa } else { sb };
        }
        if sa == 0 {
            return sb;
        }
        // Opposite signs: compare a² with b²·d.
        let a2 = ck(self.a.checked_mul(self.a));
        let b2d = ck(ck(self.b.checked_mul(self.b)).checked_mul(self.d));
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Largest integer `<= self`.
    pub fn floor(&self) -> i128 {
        let mut f = self.to_f64().floor() as i128;
        // Correct any floating-point misplacement exactly.
        while (*self - Surd::int(f)).signum() < 0 {
            f -= 1;
        }
        while (*self - Surd::int(f + 1)).signum() >= 0 {
            f += 1;
        }
        f
    }

    pub fn div_int(self, q: i128) -> Self {
        assert!(q != 0, "division by zero");
        Self::normalized(self.a, self.b, self.d, ck(self.c.checked_mul(q)))
    }

    /// Renders with `√` and ASCII minus, surd term first unless the rational
    /// part is positive: `(√5-1)/2`, `(-√5-1)/2`, `(3-√5)/10`.
    pub fn display_form(&self) -> String {
        if self.is_rational() {
            return if self.c == 1 {
                self.a.to_string()
            } else {
                format!("{}/{}", self.a, self.c)
            };
        }
        let root = match self.b.abs() {
            1 => format!("√{}", self.d),
            m => format!("{m}√{}", self.d),
        };
        let num = if self.a > 0 {
            format!("{}{}{root}", self.a, if self.b < 0 { "-" } else { "+" })
        } else {
            let lead = if self.b < 0 { format!("-{root}") } else { root };
            match self.a {
                0 => lead,
                a => format!("{lead}-{}", -a),
            }
        };
        if self.c == 1 {
            num
        } else if self.a == 0 {
            format!("{num}/{}", self.c)
        } else {
            format!("({num})/{}", self.c)
        }
    }
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, o: Surd) -> Surd {
        let d = self.field(&o);
        let c = ck(self.c.checked_mul(o.c));
        let a = ck(ck(self.a.checked_mul(o.c)).checked_add(ck(o.a.checked_mul(self.c))));
        let b = ck(ck(self.b.checked_mul(o.c)).checked_add(ck(o.b.checked_mul(self.c))));
        Surd::normalized(a, b, d, c)
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            a: -self.a,
            b: -self.b,
            ..self
        }
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, o: Surd) -> Surd {
        self + (-o)
    }
}

/// Exact quotient. A divisor with a radical part is rationalised with its
/// conjugate.
impl Div for Surd {
    type Output = Surd;

    fn div(self, other: Self) -> Self {
        assert!(!other.is_zero(), "division by zero");
        if other.is_rational() {
            let scaled = Self::normalized(
                ck(self.a.checked_mul(other.c)),
                ck(self.b.checked_mul(other.c)),
                self.d,
                self.c,
            );
            return scaled.div_int(other.a);
        }
        let conj = Self { b: -other.b, ..other };
        (self * conj) / (other * conj)
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, o: Surd) -> Surd {
        let d = self.field(&o);
        let m = |x: i128, y: i128| ck(x.checked_mul(y));
        let a = ck(m(self.a, o.a).checked_add(m(m(self.b, o.b), d)));
        let b = ck(m(self.a, o.b).checked_add(m(self.b, o.a)));
        Surd::normalized(a, b, d, m(self.c, o.c))
    }
}

impl From<i128> for Surd {
    fn from(v: i128) -> Self {
        Surd::int(v)
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.compatible(other).then(|| (*self - *other).signum().cmp(&0))
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_form())
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Surd({})", self.display_form())
    }
}

impl Serialize for Surd {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.display_form())
    }
}
