//! Double-word ("double-double") arithmetic on any [`Real`], built on fused
//! multiply-add. Used where a long product of rounded factors would otherwise
//! drift by `sqrt(n)` ulps.

use num_complex::Complex;

use crate::scalar::{c, Real};

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Dd<T: Real> {
    hi: T,
    lo: T,
}

fn two_sum<T: Real>(a: T, b: T) -> Dd<T> {
    let s = a + b;
    let bb = s - a;
    Dd { hi: s, lo: (a - (s - bb)) + (b - bb) }
}

fn fast_two_sum<T: Real>(a: T, b: T) -> Dd<T> {
    let s = a + b;
    Dd { hi: s, lo: b - (s - a) }
}

fn two_prod<T: Real>(a: T, b: T) -> Dd<T> {
    let p = a * b;
    Dd { hi: p, lo: a.mul_add(b, -p) }
}

impl<T: Real> Dd<T> {
    pub(crate) fn new(v: T) -> Self {
        Self { hi: v, lo: T::zero() }
    }

    pub(crate) fn value(self) -> T {
        self.hi + self.lo
    }

    fn neg(self) -> Self {
        Self { hi: -self.hi, lo: -self.lo }
    }

    pub(crate) fn add(self, o: Self) -> Self {
        let s = two_sum(self.hi, o.hi);
        let t = two_sum(self.lo, o.lo);
        let u = fast_two_sum(s.hi, s.lo + t.hi);
        fast_two_sum(u.hi, u.lo + t.lo)
    }

    fn sub(self, o: Self) -> Self {
        self.add(o.neg())
    }

    pub(crate) fn mul(self, o: Self) -> Self {
        let p = two_prod(self.hi, o.hi);
        fast_two_sum(p.hi, p.lo + (self.hi * o.lo + self.lo * o.hi))
    }

    fn scale(self, s: T) -> Self {
        let p = two_prod(self.hi, s);
        fast_two_sum(p.hi, p.lo + self.lo * s)
    }

    fn div(self, o: Self) -> Self {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.scale(q1));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.scale(q2));
        let q3 = r.hi / o.hi;
        fast_two_sum(q1, q2).add(Self::new(q3))
    }
}

/// Complex number with double-word parts.
#[derive(Debug, Clone, Copy)]
pub(crate) struct CDd<T: Real> {
    re: Dd<T>,
    im: Dd<T>,
}

impl<T: Real> CDd<T> {
    pub(crate) fn new(z: Complex<T>) -> Self {
        Self { re: Dd::new(z.re), im: Dd::new(z.im) }
    }

    pub(crate) fn value(self) -> Complex<T> {
        c(self.re.value(), self.im.value())
    }

    pub(crate) fn add(self, o: Self) -> Self {
        Self { re: self.re.add(o.re), im: self.im.add(o.im) }
    }

    pub(crate) fn add_real(self, v: T) -> Self {
        Self { re: self.re.add(Dd::new(v)), im: self.im }
    }

    pub(crate) fn mul(self, o: Self) -> Self {
        Self {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    pub(crate) fn scale(self, s: T) -> Self {
        Self { re: self.re.scale(s), im: self.im.scale(s) }
    }

    pub(crate) fn div(self, o: Self) -> Self {
        let den = o.re.mul(o.re).add(o.im.mul(o.im));
        let num = self.mul(Self { re: o.re, im: o.im.neg() });
        Self { re: num.re.div(den), im: num.im.div(den) }
    }
}
