//! Exact arithmetic over F_q, q = p^k, with table-driven element operations.
//!
//! Elements are stored as integer codes in `0..q`: the element with power-basis
//! coordinates `(c_0, ..., c_{k-1})` over F_p has code `sum c_i p^i`. For k = 1
//! the code is just the residue mod p, `0` is the additive identity and `1` the
//! multiplicative identity in every field.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A field element, as an opaque code valid for one particular [`Field`].
pub type Elem = u32;

/// Construction data for F_q: a prime p, extension degree k, and (for k > 1) a
/// monic irreducible modulus of degree k over F_p given by its k+1 ascending
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub k: u32,
    /// Ascending coefficients of the modulus, length k+1; ignored when k = 1.
    pub modulus: Vec<u64>,
}

impl FieldSpec {
    pub fn prime(p: u64) -> Self {
        FieldSpec { p, k: 1, modulus: vec![0, 1] }
    }

    /// Spec for q = p^k with the smallest monic irreducible modulus in the
    /// canonical (ascending-coefficient lexicographic) order.
    pub fn prime_power(p: u64, k: u32) -> Result<Self> {
        if k == 1 {
            return Ok(Self::prime(p));
        }
        check_prime(p)?;
        let modulus = smallest_irreducible_mod_p(p, k)
            .ok_or(Error::ReducibleModulus(p))?;
        Ok(FieldSpec { p, k, modulus })
    }

    /// Resolve a field order q into a spec, factoring q as p^k.
    pub fn for_order(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::DomainError(format!("q = {q} is not a prime power")));
        }
        let mut p = 0u64;
        for cand in 2..=q {
            if q % cand == 0 {
                p = cand;
                break;
            }
        }
        let mut k = 0u32;
        let mut rest = q;
        while rest % p == 0 {
            rest /= p;
            k += 1;
        }
        if rest != 1 {
            return Err(Error::DomainError(format!("q = {q} is not a prime power")));
        }
        Self::prime_power(p, k)
    }

    /// Parse "q=9:p=3,k=2,mod=[1,0,1]" or the short forms "q=5" / "5".
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let body = s.strip_prefix("q=").unwrap_or(s);
        if let Some((q_str, rest)) = body.split_once(':') {
            let q: u64 = q_str
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad field order in {s:?}")))?;
            let mut p = None;
            let mut k = None;
            let mut modulus = None;
            for part in rest.split(',') {
                let part = part.trim();
                if let Some(v) = part.strip_prefix("p=") {
                    p = Some(v.parse::<u64>().map_err(|_| Error::Parse(format!("bad p in {s:?}")))?);
                } else if let Some(v) = part.strip_prefix("k=") {
                    k = Some(v.parse::<u32>().map_err(|_| Error::Parse(format!("bad k in {s:?}")))?);
                } else if let Some(v) = part.strip_prefix("mod=") {
                    modulus = Some(parse_int_list(v)?);
                } else if part.starts_with('[') || part.chars().all(|c| c.is_ascii_digit()) {
                    // continuation of a bracketed mod list split on ','
                    if let Some(m) = modulus.as_mut() {
                        m.extend(parse_int_list(part)?);
                    } else {
                        return Err(Error::Parse(format!("unrecognized field spec part {part:?}")));
                    }
                } else {
                    return Err(Error::Parse(format!("unrecognized field spec part {part:?}")));
                }
            }
            let p = p.ok_or_else(|| Error::Parse("field spec missing p".into()))?;
            let k = k.ok_or_else(|| Error::Parse("field spec missing k".into()))?;
            let spec = match modulus {
                Some(m) => FieldSpec { p, k, modulus: m },
                None => Self::prime_power(p, k)?,
            };
            if spec.q() != q {
                return Err(Error::Parse(format!("field spec {s:?}: p^k != q")));
            }
            Ok(spec)
        } else {
            let q: u64 = body
                .parse()
                .map_err(|_| Error::Parse(format!("bad field order in {s:?}")))?;
            Self::for_order(q)
        }
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.k)
    }
}

fn parse_int_list(s: &str) -> Result<Vec<u64>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected bracketed list, got {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(vec![]);
    }
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?} in list {s:?}")))
        })
        .collect()
}

fn check_prime(p: u64) -> Result<()> {
    if p < 2 {
        return Err(Error::NonPrimeP(p));
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return Err(Error::NonPrimeP(p));
        }
        d += 1;
    }
    Ok(())
}

/// Dense F_p[x] arithmetic on coefficient vectors, used only for field
/// construction (modulus checks and the multiplication table).
mod fp {
    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// Remainder of a by monic b.
    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        assert!(!b.is_empty() && *b.last().unwrap() == 1, "divisor must be monic");
        let mut r: Vec<u64> = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        while r.len() > db {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - db;
            for j in 0..db {
                let t = (lead * b[j]) % p;
                r[shift + j] = (r[shift + j] + p - t) % p;
            }
            r.pop();
            trim(&mut r);
        }
        r
    }

    /// Monic polynomial of degree `deg` with the given code (ascending digits
    /// base p below the leading 1).
    pub fn decode_monic(code: u64, deg: u32, p: u64) -> Vec<u64> {
        let mut v = Vec::with_capacity(deg as usize + 1);
        let mut c = code;
        for _ in 0..deg {
            v.push(c % p);
            c /= p;
        }
        v.push(1);
        v
    }
}

fn is_irreducible_mod_p(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    // A reducible polynomial of degree n has a monic factor of degree <= n/2.
    for d in 1..=(deg / 2) as u32 {
        let count = p.pow(d);
        for code in 0..count {
            let g = fp::decode_monic(code, d, p);
            if fp::rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible_mod_p(p: u64, k: u32) -> Option<Vec<u64>> {
    // Canonical order: ascending-coefficient lexicographic among monic degree-k
    // polynomials, constant term most significant.
    let mut best: Option<(Vec<u64>, Vec<u64>)> = None;
    for code in 0..p.pow(k) {
        let f = fp::decode_monic(code, k, p);
        if is_irreducible_mod_p(&f, p) {
            let key = f.clone();
            match &best {
                Some((bk, _)) if *bk <= key => {}
                _ => best = Some((key, f)),
            }
        }
    }
    best.map(|(_, f)| f)
}

/// An arithmetic context for F_q. All four operations are total on valid codes
/// except `inv(0)`, which is an error. Tables are immutable after construction
/// and safe to share across threads.
#[derive(Debug, Clone)]
pub struct Field {
    pub spec: FieldSpec,
    pub q: u64,
    add_t: Vec<Elem>,
    mul_t: Vec<Elem>,
    neg_t: Vec<Elem>,
    inv_t: Vec<Elem>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Field> {
        check_prime(spec.p)?;
        let p = spec.p;
        let k = spec.k;
        if k == 0 {
            return Err(Error::DomainError("extension degree k must be >= 1".into()));
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= 1 << 20)
            .ok_or_else(|| Error::DomainError("q too large for table-backed arithmetic".into()))?;

        let modulus: Vec<u64> = if k == 1 {
            vec![0, 1]
        } else {
            if spec.modulus.len() != k as usize + 1 {
                return Err(Error::Parse(format!(
                    "modulus must have {} coefficients, got {}",
                    k + 1,
                    spec.modulus.len()
                )));
            }
            let m: Vec<u64> = spec.modulus.iter().map(|&c| c % p).collect();
            if *m.last().unwrap() != 1 {
                return Err(Error::ReducibleModulus(p));
            }
            if !is_irreducible_mod_p(&m, p) {
                return Err(Error::ReducibleModulus(p));
            }
            m
        };

        let qs = q as usize;
        let decode = |code: u64| -> Vec<u64> {
            let mut v = Vec::with_capacity(k as usize);
            let mut c = code;
            for _ in 0..k {
                v.push(c % p);
                c /= p;
            }
            v
        };
        let encode = |v: &[u64]| -> u64 {
            let mut acc = 0u64;
            for (i, &c) in v.iter().enumerate().take(k as usize) {
                acc += c * p.pow(i as u32);
            }
            acc
        };

        let mut add_t = vec![0 as Elem; qs * qs];
        let mut mul_t = vec![0 as Elem; qs * qs];
        let mut neg_t = vec![0 as Elem; qs];
        for a in 0..q {
            let va = decode(a);
            let vneg: Vec<u64> = va.iter().map(|&c| (p - c) % p).collect();
            neg_t[a as usize] = encode(&vneg) as Elem;
            for b in 0..q {
                let vb = decode(b);
                let vsum: Vec<u64> = va.iter().zip(&vb).map(|(&x, &y)| (x + y) % p).collect();
                add_t[(a * q + b) as usize] = encode(&vsum) as Elem;
                let mut prod = fp::mul(&va, &vb, p);
                prod = fp::rem(&prod, &modulus, p);
                prod.resize(k as usize, 0);
                mul_t[(a * q + b) as usize] = encode(&prod) as Elem;
            }
        }
        let mut inv_t = vec![0 as Elem; qs];
        for a in 1..q {
            for b in 1..q {
                if mul_t[(a * q + b) as usize] == 1 {
                    inv_t[a as usize] = b as Elem;
                    break;
                }
            }
            debug_assert!(inv_t[a as usize] != 0, "no inverse found; field tables corrupt");
        }

        let spec = FieldSpec { p, k, modulus };
        Ok(Field { spec, q, add_t, mul_t, neg_t, inv_t })
    }

    pub fn from_order(q: u64) -> Result<Field> {
        Field::new(FieldSpec::for_order(q)?)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add_t[(a as u64 * self.q + b as u64) as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul_t[(a as u64 * self.q + b as u64) as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg_t[a as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv_t[a as usize])
    }

    /// Coordinates of an element in the power basis over F_p, ascending.
    pub fn coords(&self, a: Elem) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.spec.k as usize);
        let mut c = a as u64;
        for _ in 0..self.spec.k {
            v.push(c % self.spec.p);
            c /= self.spec.p;
        }
        v
    }

    pub fn from_coords(&self, v: &[u64]) -> Elem {
        let mut acc = 0u64;
        for (i, &c) in v.iter().enumerate().take(self.spec.k as usize) {
            acc += (c % self.spec.p) * self.spec.p.pow(i as u32);
        }
        acc as Elem
    }

    /// Text form of one element: a bare integer for prime fields, a bracketed
    /// F_p coordinate list for extensions.
    pub fn elem_string(&self, a: Elem) -> String {
        if self.spec.k == 1 {
            format!("{a}")
        } else {
            let v = self.coords(a);
            let inner: Vec<String> = v.iter().map(|c| c.to_string()).collect();
            format!("[{}]", inner.join(","))
        }
    }

    /// Identifier string in the form accepted by [`FieldSpec::parse`].
    pub fn spec_string(&self) -> String {
        if self.spec.k == 1 {
            format!("q={}", self.q)
        } else {
            let m: Vec<String> = self.spec.modulus.iter().map(|c| c.to_string()).collect();
            format!("q={}:p={},k={},mod=[{}]", self.q, self.spec.p, self.spec.k, m.join(","))
        }
    }
}
