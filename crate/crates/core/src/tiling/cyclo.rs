//! Cyclotomic integers `Z[ζ]`, `ζ = e^{2πi/5}`, with a power-of-φ scale.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::field::{rational::to_f64, Field, FieldElem, Rational};

/// `φ^{−scale} · (c₀ + c₁ζ + c₂ζ² + c₃ζ³)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo {
    c: [BigInt; 4],
    scale: u32,
}

fn reduce(p: [BigInt; 7]) -> [BigInt; 4] {
    // ζ⁵ = 1, then ζ⁴ = −1 − ζ − ζ² − ζ³
    let [p0, p1, p2, p3, p4, p5, p6] = p;
    let (c0, c1, c2, c3, c4) = (p0 + p5, p1 + p6, p2, p3, p4);
    [&c0 - &c4, &c1 - &c4, &c2 - &c4, &c3 - &c4]
}

impl Cyclo {
    pub fn new(c: [i64; 4], scale: u32) -> Self {
        Cyclo { c: c.map(BigInt::from), scale }
    }

    pub fn from_big(c: [BigInt; 4], scale: u32) -> Self {
        Cyclo { c, scale }
    }

    pub fn zero() -> Self {
        Cyclo::new([0; 4], 0)
    }

    pub fn one() -> Self {
        Cyclo::new([1, 0, 0, 0], 0)
    }

    /// `ζ^k`.
    pub fn zeta_pow(k: i64) -> Self {
        match k.rem_euclid(5) {
            0 => Cyclo::new([1, 0, 0, 0], 0),
            1 => Cyclo::new([0, 1, 0, 0], 0),
            2 => Cyclo::new([0, 0, 1, 0], 0),
            3 => Cyclo::new([0, 0, 0, 1], 0),
            _ => Cyclo::new([-1, -1, -1, -1], 0),
        }
    }

    /// `e^{iπk/5}` (tenth roots of unity are `±ζ^j`).
    pub fn unit_tenth(k: i64) -> Self {
        let k = k.rem_euclid(10);
        // e^{iπk/5} = ζ^{k/2} for even k, −ζ^{(k+5)/2} for odd k
        if k % 2 == 0 {
            Cyclo::zeta_pow(k / 2)
        } else {
            Cyclo::zeta_pow((k + 5) / 2).neg()
        }
    }

    /// `φ = −ζ² − ζ³`.
    pub fn phi() -> Self {
        Cyclo::new([0, 0, -1, -1], 0)
    }

    pub fn coefficients(&self) -> &[BigInt; 4] {
        &self.c
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Multiplies the raw coefficients by `φ` (the value is unchanged
    /// when the scale is raised by one as well).
    fn raw_times_phi(&self) -> [BigInt; 4] {
        // (c₀ + c₁ζ + c₂ζ² + c₃ζ³)(−ζ² − ζ³)
        let mut p: [BigInt; 7] = Default::default();
        for (i, ci) in self.c.iter().enumerate() {
            p[i + 2] -= ci;
            p[i + 3] -= ci;
        }
        reduce(p)
    }

    /// Same value written at scale `s ≥ self.scale`.
    pub fn at_scale(&self, s: u32) -> Cyclo {
        assert!(s >= self.scale, "cannot lower a scale exponent");
        let mut out = self.clone();
        while out.scale < s {
            out = Cyclo { c: out.raw_times_phi(), scale: out.scale + 1 };
        }
        out
    }

    /// `φ · self` with the scale kept.
    pub fn times_phi(&self) -> Cyclo {
        Cyclo { c: self.raw_times_phi(), scale: self.scale }
    }

    /// Raw coefficients multiplied by `φ` and the scale raised by one: the
    /// same point, written in the coordinates of the next substitution level.
    pub fn lift(&self) -> Cyclo {
        self.at_scale(self.scale + 1)
    }

    /// Equal values, regardless of the scale they are written at.
    pub fn same_point(&self, other: &Cyclo) -> bool {
        let s = self.scale.max(other.scale);
        self.at_scale(s) == other.at_scale(s)
    }

    fn zip(&self, other: &Cyclo, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Cyclo {
        let s = self.scale.max(other.scale);
        let (a, b) = (self.at_scale(s), other.at_scale(s));
        Cyclo { c: std::array::from_fn(|i| f(&a.c[i], &b.c[i])), scale: s }
    }

    pub fn add(&self, other: &Cyclo) -> Cyclo {
        self.zip(other, |x, y| x + y)
    }

    pub fn sub(&self, other: &Cyclo) -> Cyclo {
        self.zip(other, |x, y| x - y)
    }

    pub fn neg(&self) -> Cyclo {
        Cyclo { c: self.c.clone().map(|x| -x), scale: self.scale }
    }

    pub fn mul(&self, other: &Cyclo) -> Cyclo {
        let mut p: [BigInt; 7] = Default::default();
        for (i, x) in self.c.iter().enumerate() {
            for (j, y) in other.c.iter().enumerate() {
                p[i + j] += x * y;
            }
        }
        Cyclo { c: reduce(p), scale: self.scale + other.scale }
    }

    /// Complex conjugate: `ζ^k ↦ ζ^{5−k}`.
    pub fn conj(&self) -> Cyclo {
        let [c0, c1, c2, c3] = &self.c;
        Cyclo { c: [c0 - c1, -c1, c3 - c1, c2 - c1], scale: self.scale }
    }

    /// Value in `Q(√5)` when `self` is real (`c₁ = 0`, `c₂ = c₃`).
    pub fn real_value(&self) -> Option<FieldElem> {
        let [c0, c1, c2, c3] = &self.c;
        if !c1.is_zero() || c2 != c3 {
            return None;
        }
        // c₀ + c₂(ζ² + ζ³) = c₀ − c₂φ
        let k = Field::GOLDEN;
        let raw = k.rational(Rational::from_integer(c0.clone())) - k.rational(Rational::from_integer(c2.clone())) * k.phi();
        let inv_phi = k.phi() - k.one();
        let mut v = raw;
        for _ in 0..self.scale {
            v = v * &inv_phi;
        }
        Some(v)
    }

    /// `|z|²`, exact in `Q(√5)`.
    pub fn norm_sq(&self) -> FieldElem {
        self.mul(&self.conj()).real_value().expect("z·conj(z) is real")
    }

    /// Sign of the imaginary part, exactly:
    /// `sign Im z = sign((z − z̄)(ζ⁴ − ζ))`, the factor being `4 sin 72° · Im z`.
    pub fn im_sign(&self) -> i8 {
        let d = self.sub(&self.conj());
        let w = Cyclo::zeta_pow(4).sub(&Cyclo::zeta_pow(1));
        d.mul(&w).real_value().expect("purely imaginary times purely imaginary").signum()
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.c.iter().enumerate() {
            let a = 2.0 * std::f64::consts::PI * k as f64 / 5.0;
            let x = to_f64(&Rational::from_integer(c.clone()));
            re += x * a.cos();
            im += x * a.sin();
        }
        let s = Field::GOLDEN.phi().to_f64().powi(-(self.scale as i32));
        (re * s, im * s)
    }

    pub fn max_abs_coefficient(&self) -> BigInt {
        self.c.iter().map(|x| x.abs()).max().unwrap_or_else(BigInt::zero)
    }
}

/// Sign of the signed area of the triangle `a, b, c`: `+1` counter-clockwise.
pub fn orientation(a: &Cyclo, b: &Cyclo, c: &Cyclo) -> i8 {
    let u = b.sub(a);
    let v = c.sub(a);
    u.conj().mul(&v).im_sign()
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.c;
        write!(f, "φ^-{}[{a}, {b}, {c}, {d}]", self.scale)
    }
}

impl Default for Cyclo {
    fn default() -> Self {
        Cyclo::zero()
    }
}
