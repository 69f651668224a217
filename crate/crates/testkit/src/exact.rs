//! Exact rational evaluation of the closed-form bounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(a: i64, b: i64) -> Q {
    Q::new(BigInt::from(a), BigInt::from(b))
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().expect("finite rational")
}

pub fn rel_err(approx: f64, exact: &Q) -> f64 {
    let e = to_f64(exact);
    if e == 0.0 {
        approx.abs()
    } else {
        ((approx - e) / e).abs()
    }
}

pub fn harmonic(n: u64) -> Q {
    (1..=n as i64).fold(Q::zero(), |acc, l| acc + frac(1, l))
}

pub fn consec_ss(n: i64) -> Q {
    frac(3 + 13 * n, 60 * n)
}

pub fn consec_kp(n: i64) -> Q {
    frac(-26 + 59 * n, 288 * n)
}

/// Sum form of the exhaustive subset sum bound.
pub fn exh_ss(n: i64) -> Q {
    let mut sum = Q::zero();
    for m in 0..=n - 2 {
        sum += frac(9 + 2 * m, 3 * (3 + m) * (4 + m));
    }
    frac(1, n * (2 + n)) + sum / q(n)
}

/// `T(j, m)` as two fractions over the printed common denominator.
pub fn exh_kp_t(j: i64, m: i64) -> Q {
    let table = harmonic_table((m + 3) as usize);
    exh_kp_t_with(j, m, &table)
}

/// `H(0..=n)`.
fn harmonic_table(n: usize) -> Vec<Q> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = Q::zero();
    out.push(acc.clone());
    for l in 1..=n as i64 {
        acc += frac(1, l);
        out.push(acc.clone());
    }
    out
}

fn exh_kp_t_with(j: i64, m: i64, h: &[Q]) -> Q {
    let denom = q(j * (-3 + j - m) * (-2 + j - m) * (1 + m) * (2 + m));
    let c = q(j + (2 + m) * (2 + m));
    let first = q(2) * (q(-4 + j - 4 * m + j * m - m * m) - c.clone() * &h[j as usize]) / denom.clone();
    let second = q(2) * c * &h[(3 + m) as usize] / denom;
    first + second
}

/// The exhaustive knapsack lower bound, optionally without the nested T sum.
pub fn exh_kp(n: i64, include_t: bool) -> Q {
    let table = harmonic_table(n as usize + 3);
    let mut sum = Q::zero();
    for m in 0..=n - 2 {
        if include_t {
            for j in 1..=m + 1 {
                sum += exh_kp_t_with(j, m, &table);
            }
        }
        let h = table[(m + 1) as usize].clone();
        let p0 = q(186 + 472 * m + 448 * m.pow(2) + 203 * m.pow(3) + 45 * m.pow(4) + 4 * m.pow(5));
        let p1 = q(244 + 454 * m + 334 * m.pow(2) + 124 * m.pow(3) + 24 * m.pow(4) + 2 * m.pow(5));
        let p2 = q(48 + 88 * m + 60 * m.pow(2) + 18 * m.pow(3) + 2 * m.pow(4));
        let denom = q((m + 1) * (m + 2).pow(3) * (m + 3).pow(2));
        sum += (p0 - p1 * h.clone() - p2 * h.clone() * h) / denom;
    }
    q(1) + frac(2, n * (n + 1)) - q(2) * table[n as usize].clone() / q(n * n) + sum / q(n)
}

/// Truncates to a rational with denominator 2^bits to stop denominators growing.
fn round_to(x: &Q, bits: u32) -> Q {
    let scale = BigInt::one() << bits;
    let scaled = (x * Q::from_integer(scale.clone())).round();
    Q::new(scaled.to_integer(), scale)
}

/// `2 atanh(z) = ln((1+z)/(1-z))` for small |z|, to about 2^-bits.
fn two_atanh(z: &Q, bits: u32) -> Q {
    let z2 = round_to(&(z * z), bits);
    let mut power = z.clone();
    let mut sum = Q::zero();
    let eps = Q::new(BigInt::one(), BigInt::one() << bits);
    let mut k = 1i64;
    loop {
        let term = &power / q(k);
        if term.abs() < eps {
            break;
        }
        sum += term;
        power = round_to(&(power * &z2), bits);
        k += 2;
    }
    sum * q(2)
}

/// Natural log of a positive rational, accurate to roughly 2^-bits.
pub fn ln(x: &Q, bits: u32) -> Q {
    assert!(x.is_positive());
    // ln 2 = 2 atanh(1/3)
    let ln2 = two_atanh(&frac(1, 3), bits);
    let mut y = x.clone();
    let mut shift = 0i64;
    let two = q(2);
    while y >= two {
        y /= two.clone();
        shift += 1;
    }
    while y < q(1) {
        y *= two.clone();
        shift -= 1;
    }
    // y in [1, 2): z = (y-1)/(y+1) <= 1/3.
    let z = (y.clone() - q(1)) / (y + q(1));
    ln2 * q(shift) + two_atanh(&z, bits)
}

/// High-precision value of the logarithmic exhaustive subset sum bound.
pub fn exh_ss_log(n: i64) -> Q {
    let bits = 160;
    let log_term = ln(&frac(3 + 2 * n, 5), bits) + ln(&frac(7, 5 + 2 * n), bits) / q(3);
    frac(1, n * (2 + n)) + log_term / q(n)
}
