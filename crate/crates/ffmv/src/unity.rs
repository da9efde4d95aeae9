//! Exact roots of unity and exact sums of them.
//!
//! Character values are kept as exponents k/N (meaning exp(2*pi*i*k/N)) plus a
//! distinguished zero. Sums of values are usually accumulated in complex
//! doubles; orthogonality checks can instead use [`CycSum`], an integer vector
//! of root counts whose vanishing is decided exactly by reduction modulo the
//! N-th cyclotomic polynomial.

use num_complex::Complex64;
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

/// A root of unity exp(2*pi*i*num/ord), stored with the fraction reduced,
/// or the distinguished value zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootOfUnity {
    Zero,
    Root { num: u64, ord: u64 },
}

impl RootOfUnity {
    pub fn one() -> RootOfUnity {
        RootOfUnity::Root { num: 0, ord: 1 }
    }

    /// exp(2*pi*i*k/n), reducing the fraction.
    pub fn new(k: u64, n: u64) -> RootOfUnity {
        assert!(n > 0);
        let k = k % n;
        let g = gcd(k, n);
        if k == 0 {
            RootOfUnity::Root { num: 0, ord: 1 }
        } else {
            RootOfUnity::Root { num: k / g, ord: n / g }
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, RootOfUnity::Zero)
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        match (self, other) {
            (RootOfUnity::Zero, _) | (_, RootOfUnity::Zero) => RootOfUnity::Zero,
            (RootOfUnity::Root { num: k1, ord: n1 }, RootOfUnity::Root { num: k2, ord: n2 }) => {
                let n = lcm(*n1, *n2);
                RootOfUnity::new(k1 * (n / n1) + k2 * (n / n2), n)
            }
        }
    }

    pub fn conj(&self) -> RootOfUnity {
        match self {
            RootOfUnity::Zero => RootOfUnity::Zero,
            RootOfUnity::Root { num, ord } => RootOfUnity::new(ord - num, *ord),
        }
    }

    pub fn pow(&self, e: u64) -> RootOfUnity {
        match self {
            RootOfUnity::Zero => {
                if e == 0 {
                    RootOfUnity::one()
                } else {
                    RootOfUnity::Zero
                }
            }
            RootOfUnity::Root { num, ord } => RootOfUnity::new((num % ord) * (e % ord), *ord),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            RootOfUnity::Zero => Complex64::new(0.0, 0.0),
            RootOfUnity::Root { num, ord } => {
                let theta = 2.0 * std::f64::consts::PI * (*num as f64) / (*ord as f64);
                Complex64::new(theta.cos(), theta.sin())
            }
        }
    }

    /// The "k/N" exponent form used in exported character tables; zero values
    /// print as "0" (the complex number zero, not the exponent zero).
    pub fn exponent_string(&self) -> String {
        match self {
            RootOfUnity::Zero => "0".to_string(),
            RootOfUnity::Root { num, ord } => format!("{num}/{ord}"),
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

static CYCLOTOMIC_CACHE: Lazy<Mutex<HashMap<u64, Vec<i64>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Coefficients (ascending) of the n-th cyclotomic polynomial, computed by
/// exact division of x^n - 1 by the cyclotomic polynomials of the proper
/// divisors of n.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    assert!(n >= 1);
    if let Some(c) = CYCLOTOMIC_CACHE.lock().unwrap().get(&n) {
        return c.clone();
    }
    let result = if n == 1 {
        vec![-1, 1]
    } else {
        let mut numer = vec![0i64; n as usize + 1];
        numer[0] = -1;
        numer[n as usize] = 1;
        for d in 1..n {
            if n % d == 0 {
                let phi_d = cyclotomic_polynomial(d);
                numer = exact_div(&numer, &phi_d);
            }
        }
        numer
    };
    CYCLOTOMIC_CACHE.lock().unwrap().insert(n, result.clone());
    result
}

/// Exact division of integer polynomials, panicking on a nonzero remainder.
fn exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r: Vec<i128> = a.iter().map(|&x| x as i128).collect();
    let db = b.len() - 1;
    let lead = b[db] as i128;
    assert!(lead == 1 || lead == -1);
    let mut q = vec![0i128; r.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i] / lead;
        q[i - db] = c;
        if c != 0 {
            for j in 0..=db {
                r[i - db + j] -= c * b[j] as i128;
            }
        }
    }
    assert!(r.iter().all(|&x| x == 0), "non-exact division");
    while q.len() > 1 && *q.last().unwrap() == 0 {
        q.pop();
    }
    q.into_iter().map(|x| x as i64).collect()
}

/// An exact integer combination of N-th roots of unity: counts[k] copies of
/// exp(2*pi*i*k/N). Vanishing is decided by reduction mod the N-th cyclotomic
/// polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycSum {
    pub order: u64,
    pub counts: Vec<i64>,
}

impl CycSum {
    pub fn zero(order: u64) -> CycSum {
        CycSum { order, counts: vec![0; order as usize] }
    }

    /// Add c * exp(2*pi*i*k/N); the root's order must divide N.
    pub fn add_root(&mut self, root: &RootOfUnity, c: i64) {
        match root {
            RootOfUnity::Zero => {}
            RootOfUnity::Root { num, ord } => {
                assert!(self.order % ord == 0, "root order must divide the ambient order");
                let k = num * (self.order / ord);
                self.counts[k as usize] += c;
            }
        }
    }

    pub fn add_int(&mut self, c: i64) {
        self.counts[0] += c;
    }

    /// Exact test: is this combination the integer zero?
    pub fn is_zero(&self) -> bool {
        if self.counts.iter().all(|&c| c == 0) {
            return true;
        }
        let phi = cyclotomic_polynomial(self.order);
        let mut r: Vec<i128> = self.counts.iter().map(|&x| x as i128).collect();
        let dphi = phi.len() - 1;
        while r.len() > dphi {
            let c = *r.last().unwrap();
            let shift = r.len() - 1 - dphi;
            if c != 0 {
                for j in 0..dphi {
                    r[shift + j] -= c * phi[j] as i128;
                }
            }
            r.pop();
        }
        r.iter().all(|&x| x == 0)
    }

    /// Exact test against an integer value.
    pub fn equals_int(&self, v: i64) -> bool {
        let mut s = self.clone();
        s.counts[0] -= v;
        s.is_zero()
    }

    pub fn to_complex(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, &c) in self.counts.iter().enumerate() {
            if c != 0 {
                let theta = 2.0 * std::f64::consts::PI * (k as f64) / (self.order as f64);
                acc += (c as f64) * Complex64::new(theta.cos(), theta.sin());
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_products_reduce() {
        let a = RootOfUnity::new(1, 4);
        let b = RootOfUnity::new(1, 4);
        assert_eq!(a.mul(&b), RootOfUnity::new(1, 2));
        assert_eq!(a.mul(&a.conj()), RootOfUnity::one());
        assert_eq!(a.mul(&RootOfUnity::Zero), RootOfUnity::Zero);
    }

    #[test]
    fn cyclotomic_small_cases() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn full_sum_of_roots_vanishes() {
        for n in 2..=30u64 {
            let mut s = CycSum::zero(n);
            for k in 0..n {
                s.add_root(&RootOfUnity::new(k, n), 1);
            }
            assert!(s.is_zero(), "sum of all {n}-th roots should vanish");
        }
    }

    #[test]
    fn nonzero_sums_detected() {
        let mut s = CycSum::zero(6);
        s.add_root(&RootOfUnity::new(1, 6), 1);
        s.add_root(&RootOfUnity::new(5, 6), 1);
        // 2cos(pi/3) = 1 != 0
        assert!(!s.is_zero());
        assert!(s.equals_int(1));

        // 1 + zeta_3 + zeta_3^2 = 0 inside order 6
        let mut t = CycSum::zero(6);
        t.add_root(&RootOfUnity::new(0, 3), 1);
        t.add_root(&RootOfUnity::new(1, 3), 1);
        t.add_root(&RootOfUnity::new(2, 3), 1);
        assert!(t.is_zero());
    }

    #[test]
    fn complex_agrees_with_exact() {
        let mut s = CycSum::zero(8);
        s.add_root(&RootOfUnity::new(1, 8), 3);
        s.add_root(&RootOfUnity::new(3, 8), -2);
        let direct = 3.0 * RootOfUnity::new(1, 8).to_complex() - 2.0 * RootOfUnity::new(3, 8).to_complex();
        assert!((s.to_complex() - direct).norm() < 1e-12);
    }
}
