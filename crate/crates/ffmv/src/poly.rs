//! Polynomials over F_q: exact arithmetic, canonical enumeration of monic and
//! irreducible polynomials, factorization by trial division, and extraction of
//! factorization types.

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// A polynomial with ascending coefficients; the zero polynomial has an empty
/// coefficient vector and degree "-infinity" (`deg() == None`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    pub coeffs: Vec<Elem>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Poly {
        Poly { coeffs: vec![1] }
    }

    pub fn constant(c: Elem) -> Poly {
        if c == 0 {
            Poly::zero()
        } else {
            Poly { coeffs: vec![c] }
        }
    }

    /// Build from ascending coefficients, trimming leading zeros.
    pub fn new(mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// The monomial T.
    pub fn t() -> Poly {
        Poly { coeffs: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with deg(0) = None standing for -infinity.
    pub fn deg(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// ||f|| = q^deg(f), with ||0|| = 0.
    pub fn norm(&self, q: u64) -> u64 {
        match self.deg() {
            None => 0,
            Some(d) => q.pow(d as u32),
        }
    }

    pub fn leading(&self) -> Elem {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly, f: &Field) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(f.add(self.coeff(i), other.coeff(i)));
        }
        Poly::new(out)
    }

    pub fn neg(&self, f: &Field) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn sub(&self, other: &Poly, f: &Field) -> Poly {
        self.add(&other.neg(f), f)
    }

    pub fn mul(&self, other: &Poly, f: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0 as Elem; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: Elem, f: &Field) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Quotient and remainder; f = q*g + r with deg r < deg g.
    pub fn divrem(&self, g: &Poly, f: &Field) -> Result<(Poly, Poly)> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dg = g.deg().unwrap();
        let lead_inv = f.inv(g.leading())?;
        let mut r = self.coeffs.clone();
        if r.len() <= dg {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![0 as Elem; r.len() - dg];
        while r.len() > dg {
            let c = *r.last().unwrap();
            if c != 0 {
                let scale = f.mul(c, lead_inv);
                let shift = r.len() - 1 - dg;
                q[shift] = scale;
                for j in 0..=dg {
                    let t = f.mul(scale, g.coeff(j));
                    r[shift + j] = f.sub(r[shift + j], t);
                }
            } else {
                r.pop();
                continue;
            }
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        Ok((Poly::new(q), Poly::new(r)))
    }

    pub fn rem(&self, g: &Poly, f: &Field) -> Result<Poly> {
        Ok(self.divrem(g, f)?.1)
    }

    pub fn divides(&self, other: &Poly, f: &Field) -> bool {
        match other.rem(self, f) {
            Ok(r) => r.is_zero(),
            Err(_) => false,
        }
    }

    pub fn make_monic(&self, f: &Field) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = f.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(inv, f)
    }

    /// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Poly, f: &Field) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, f).expect("b nonzero");
            a = b;
            b = r;
        }
        a.make_monic(f)
    }

    /// Extended gcd: returns (g, s, t) with s*self + t*other = g, g monic.
    pub fn xgcd(&self, other: &Poly, f: &Field) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1, f).expect("r1 nonzero");
            let s = s0.sub(&q.mul(&s1, f), f);
            let t = t0.sub(&q.mul(&t1, f), f);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lead_inv = f.inv(r0.leading()).unwrap();
        (r0.scale(lead_inv, f), s0.scale(lead_inv, f), t0.scale(lead_inv, f))
    }

    pub fn derivative(&self, f: &Field) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let p = f.spec.p;
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, &c) in self.coeffs.iter().enumerate().skip(1) {
            let mut acc = 0 as Elem;
            for _ in 0..(i as u64 % p) {
                acc = f.add(acc, c);
            }
            out.push(acc);
        }
        Poly::new(out)
    }

    /// Canonical order: by degree, then lexicographic on the ascending
    /// coefficient vector (constant term compared first).
    pub fn canon_cmp(&self, other: &Poly) -> Ordering {
        let dl = self.coeffs.len();
        let dr = other.coeffs.len();
        if dl != dr {
            return dl.cmp(&dr);
        }
        self.coeffs.cmp(&other.coeffs)
    }

    /// Dense code with c_0 least significant; valid for indexing tables of
    /// monic polynomials of a fixed degree.
    pub fn monic_code(&self, q: u64) -> u64 {
        debug_assert!(self.is_monic());
        let n = self.coeffs.len() - 1;
        let mut acc = 0u64;
        for i in (0..n).rev() {
            acc = acc * q + self.coeff(i) as u64;
        }
        acc
    }

    pub fn monic_from_code(n: usize, code: u64, q: u64) -> Poly {
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut c = code;
        for _ in 0..n {
            coeffs.push((c % q) as Elem);
            c /= q;
        }
        coeffs.push(1);
        Poly { coeffs }
    }

    /// Bracketed ascending-coefficient text form, e.g. `[1,0,2]` for 1 + 2T^2.
    pub fn to_text(&self, f: &Field) -> String {
        let inner: Vec<String> = self.coeffs.iter().map(|&c| f.elem_string(c)).collect();
        format!("[{}]", inner.join(","))
    }

    pub fn parse(s: &str, f: &Field) -> Result<Poly> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected bracketed polynomial, got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Poly::zero());
        }
        let mut coeffs = Vec::new();
        if f.spec.k == 1 {
            for part in inner.split(',') {
                let v: u64 = part
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {part:?}")))?;
                coeffs.push((v % f.q) as Elem);
            }
        } else {
            // split on top-level commas between bracketed coordinate lists
            let mut depth = 0usize;
            let mut start = 0usize;
            let bytes = inner.as_bytes();
            for (i, &b) in bytes.iter().enumerate() {
                match b {
                    b'[' => depth += 1,
                    b']' => depth -= 1,
                    b',' if depth == 0 => {
                        coeffs.push(parse_ext_elem(&inner[start..i], f)?);
                        start = i + 1;
                    }
                    _ => {}
                }
            }
            coeffs.push(parse_ext_elem(&inner[start..], f)?);
        }
        Ok(Poly::new(coeffs))
    }
}

fn parse_ext_elem(s: &str, f: &Field) -> Result<Elem> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected bracketed F_p vector, got {s:?}")))?;
    let mut v = Vec::new();
    for part in inner.split(',') {
        let c: u64 = part
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad coordinate {part:?}")))?;
        v.push(c);
    }
    Ok(f.from_coords(&v))
}

/// All monic polynomials of degree n in canonical order.
pub fn monic_polys(field: &Field, n: usize) -> Vec<Poly> {
    let q = field.q;
    let count = q.pow(n as u32);
    let mut out = Vec::with_capacity(count as usize);
    // Canonical order: ascending-coefficient lexicographic, i.e. the constant
    // term is the most significant digit of the enumeration rank.
    let mut coeffs = vec![0 as Elem; n + 1];
    coeffs[n] = 1;
    for rank in 0..count {
        let mut r = rank;
        for i in (0..n).rev() {
            coeffs[n - 1 - i] = (r % q) as Elem;
            r /= q;
        }
        out.push(Poly { coeffs: coeffs.clone() });
    }
    out
}

pub fn monic_count(field: &Field, n: usize) -> u64 {
    field.q.pow(n as u32)
}

/// The extended factorization type of a polynomial: the multiset of
/// (prime degree, exponent) pairs of its prime factorization, kept as a
/// sorted vector with duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorizationType {
    pub pairs: Vec<(u32, u32)>,
}

impl FactorizationType {
    pub fn new(mut pairs: Vec<(u32, u32)>) -> FactorizationType {
        pairs.sort_unstable();
        FactorizationType { pairs }
    }

    pub fn empty() -> FactorizationType {
        FactorizationType { pairs: vec![] }
    }

    /// |omega| = sum of d_i * e_i.
    pub fn size(&self) -> u32 {
        self.pairs.iter().map(|&(d, e)| d * e).sum()
    }

    /// l(omega) = number of pairs.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Multiset union (the type of a product of coprime polynomials).
    pub fn union(&self, other: &FactorizationType) -> FactorizationType {
        let mut pairs = self.pairs.clone();
        pairs.extend_from_slice(&other.pairs);
        FactorizationType::new(pairs)
    }

    /// The sub-multiset of pairs with prime degree d, as the partition of
    /// exponents in non-increasing order.
    pub fn exponents_for_degree(&self, d: u32) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .pairs
            .iter()
            .filter(|&&(pd, _)| pd == d)
            .map(|&(_, e)| e)
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn max_prime_degree(&self) -> u32 {
        self.pairs.iter().map(|&(d, _)| d).max().unwrap_or(0)
    }

    /// Compact key for interning; valid while all degrees and exponents are
    /// below 64 and there are at most 16 pairs, which covers desk scale.
    pub fn pack(&self) -> Option<u128> {
        if self.pairs.len() > 16 {
            return None;
        }
        let mut acc: u128 = 0;
        for &(d, e) in self.pairs.iter().rev() {
            if d >= 64 || e >= 64 {
                return None;
            }
            acc = (acc << 12) | ((d as u128) << 6) | e as u128;
        }
        Some(acc)
    }

    pub fn to_string_compact(&self) -> String {
        let inner: Vec<String> = self.pairs.iter().map(|&(d, e)| format!("({d},{e})")).collect();
        format!("{{{}}}", inner.join(","))
    }
}

/// Polynomial-ring context: a field plus memoized irreducible tables per
/// degree. Tables are append-only behind an RwLock; reads are concurrent.
pub struct PolyRing {
    pub field: Arc<Field>,
    irred: RwLock<HashMap<usize, Arc<Vec<Poly>>>>,
}

impl PolyRing {
    pub fn new(field: Arc<Field>) -> PolyRing {
        PolyRing { field, irred: RwLock::new(HashMap::new()) }
    }

    pub fn from_order(q: u64) -> Result<PolyRing> {
        Ok(PolyRing::new(Arc::new(Field::from_order(q)?)))
    }

    pub fn q(&self) -> u64 {
        self.field.q
    }

    /// All monic irreducibles of degree n, canonical order, memoized.
    pub fn irreducibles(&self, n: usize) -> Arc<Vec<Poly>> {
        assert!(n >= 1, "irreducible enumeration needs n >= 1");
        if let Some(v) = self.irred.read().unwrap().get(&n) {
            return Arc::clone(v);
        }
        // Ensure the smaller tables exist first (trial divisors).
        for d in 1..=(n / 2) {
            self.irreducibles(d);
        }
        let f = &*self.field;
        let list: Vec<Poly> = {
            let cache = self.irred.read().unwrap();
            monic_polys(f, n)
                .into_iter()
                .filter(|p| {
                    (1..=(n / 2)).all(|d| {
                        cache.get(&d).expect("filled above").iter().all(|ir| !ir.divides(p, f))
                    })
                })
                .collect()
        };
        let arc = Arc::new(list);
        self.irred.write().unwrap().insert(n, Arc::clone(&arc));
        arc
    }

    pub fn is_irreducible(&self, p: &Poly) -> bool {
        match p.deg() {
            None | Some(0) => false,
            Some(1) => true,
            Some(n) => {
                let f = &*self.field;
                (1..=(n / 2)).all(|d| self.irreducibles(d).iter().all(|ir| !ir.divides(p, f)))
            }
        }
    }

    /// Prime factorization of a monic polynomial of degree >= 1, by trial
    /// division against the memoized irreducible tables. Factors are returned
    /// in canonical order with their exponents.
    pub fn factor(&self, poly: &Poly) -> Result<Vec<(Poly, u32)>> {
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !poly.is_monic() {
            return Err(Error::NotMonic);
        }
        let f = &*self.field;
        let mut rest = poly.clone();
        let mut out: Vec<(Poly, u32)> = Vec::new();
        let mut d = 1usize;
        while let Some(n) = rest.deg() {
            if n == 0 {
                break;
            }
            if d > n / 2 {
                // No factor of degree <= n/2 divides: irreducible by elimination.
                out.push((rest, 1));
                break;
            }
            for p in self.irreducibles(d).iter() {
                let mut e = 0u32;
                loop {
                    let (q, r) = rest.divrem(p, f)?;
                    if !r.is_zero() {
                        break;
                    }
                    rest = q;
                    e += 1;
                }
                if e > 0 {
                    out.push((p.clone(), e));
                }
                if rest.deg() == Some(0) {
                    break;
                }
            }
            d += 1;
        }
        out.sort_by(|a, b| a.0.canon_cmp(&b.0));
        Ok(out)
    }

    pub fn factorization_type(&self, poly: &Poly) -> Result<FactorizationType> {
        if poly.deg() == Some(0) {
            return Ok(FactorizationType::empty());
        }
        let factors = self.factor(poly)?;
        Ok(FactorizationType::new(
            factors.iter().map(|(p, e)| (p.deg().unwrap() as u32, *e)).collect(),
        ))
    }

    /// Euler's totient: the number of residues mod M coprime to M.
    pub fn euler_phi(&self, m: &Poly) -> Result<u64> {
        if m.is_zero() {
            return Err(Error::ZeroModulus);
        }
        if m.deg() == Some(0) {
            return Ok(1);
        }
        let q = self.q();
        let monic = m.make_monic(&self.field);
        let mut phi = 1u64;
        for (p, e) in self.factor(&monic)? {
            let d = p.deg().unwrap() as u32;
            phi *= q.pow(d * (e - 1)) * (q.pow(d) - 1);
        }
        Ok(phi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(q: u64) -> PolyRing {
        PolyRing::from_order(q).unwrap()
    }

    fn p(field: &Field, coeffs: &[u32]) -> Poly {
        let _ = field;
        Poly::new(coeffs.to_vec())
    }

    #[test]
    fn gcd_example_q2() {
        let r = ring(2);
        let f = &*r.field;
        // gcd(T^2 + T, T) = T
        let a = p(f, &[0, 1, 1]);
        let b = Poly::t();
        assert_eq!(a.gcd(&b, f), Poly::t());
    }

    #[test]
    fn product_example_q3() {
        let r = ring(3);
        let f = &*r.field;
        // (T+1)(T+2) = T^2 + 2 over F_3
        let a = p(f, &[1, 1]);
        let b = p(f, &[2, 1]);
        assert_eq!(a.mul(&b, f), p(f, &[2, 0, 1]));
    }

    #[test]
    fn long_division_oracle_q2() {
        let r = ring(2);
        let f = &*r.field;
        // Checked by hand long division: T(T^2+1) = T^3 + T, so the remainder
        // of T^3 + T + 1 by T^2 + 1 is 1.
        let a = p(f, &[1, 1, 0, 1]);
        let b = p(f, &[1, 0, 1]);
        assert_eq!(a.rem(&b, f).unwrap(), Poly::one());
        // And by T^2 + T + 1: (T+1)(T^2+T+1) = T^3 + 1, remainder T.
        let c = p(f, &[1, 1, 1]);
        assert_eq!(a.rem(&c, f).unwrap(), Poly::t());
    }

    #[test]
    fn divrem_invariant_exhaustive_q3() {
        let r = ring(3);
        let f = &*r.field;
        for fa in monic_polys(f, 3) {
            for gb in monic_polys(f, 2) {
                let (q, rem) = fa.divrem(&gb, f).unwrap();
                assert_eq!(q.mul(&gb, f).add(&rem, f), fa);
                assert!(rem.deg().map_or(true, |d| d < 2));
            }
        }
    }

    #[test]
    fn division_by_zero() {
        let r = ring(2);
        let f = &*r.field;
        assert_eq!(Poly::t().divrem(&Poly::zero(), f), Err(Error::DivisionByZero));
        assert_eq!(Poly::t().gcd(&Poly::zero(), f), Poly::t());
    }

    #[test]
    fn enumerate_monic_counts_and_order() {
        let r2 = ring(2);
        let ms = monic_polys(&r2.field, 1);
        assert_eq!(ms.len(), 2);
        assert_eq!(ms[0], Poly::t());
        assert_eq!(ms[1], Poly::new(vec![1, 1]));

        let r3 = ring(3);
        assert_eq!(monic_polys(&r3.field, 2).len(), 9);

        let m0 = monic_polys(&r2.field, 0);
        assert_eq!(m0, vec![Poly::one()]);

        // canonical order is strictly increasing
        let ms = monic_polys(&r3.field, 2);
        for w in ms.windows(2) {
            assert_eq!(w[0].canon_cmp(&w[1]), Ordering::Less);
        }
    }

    #[test]
    fn irreducible_enumeration_small() {
        let r2 = ring(2);
        let ir2 = r2.irreducibles(2);
        assert_eq!(ir2.len(), 1);
        assert_eq!(ir2[0], Poly::new(vec![1, 1, 1]));

        let ir1 = r2.irreducibles(1);
        assert_eq!(&*ir1, &[Poly::t(), Poly::new(vec![1, 1])]);

        let r3 = ring(3);
        assert_eq!(r3.irreducibles(2).len(), 3);
    }

    #[test]
    fn prime_count_bound() {
        // n * |P_n| <= q^n for all tested n, q.
        for q in [2u64, 3, 4, 5] {
            let r = ring(q);
            for n in 1..=6usize {
                let cnt = r.irreducibles(n).len() as u64;
                assert!(n as u64 * cnt <= q.pow(n as u32), "q={q} n={n}");
            }
        }
    }

    #[test]
    fn factor_examples() {
        let r2 = ring(2);
        let f = &*r2.field;
        // T^2 + T = T(T+1)
        let fs = r2.factor(&p(f, &[0, 1, 1])).unwrap();
        assert_eq!(fs, vec![(Poly::t(), 1), (Poly::new(vec![1, 1]), 1)]);

        // squaring oracle in characteristic 2: (T^2+T)^2 = T^4 + T^2
        let sq = p(f, &[0, 1, 1]).mul(&p(f, &[0, 1, 1]), f);
        assert_eq!(sq, p(f, &[0, 0, 1, 0, 1]));
        let fs = r2.factor(&sq).unwrap();
        assert_eq!(fs, vec![(Poly::t(), 2), (Poly::new(vec![1, 1]), 2)]);

        let r3 = ring(3);
        let f3 = &*r3.field;
        // T^2 + 2T + 1 = (T+1)^2
        let fs = r3.factor(&p(f3, &[1, 2, 1])).unwrap();
        assert_eq!(fs, vec![(Poly::new(vec![1, 1]), 2)]);

        assert_eq!(r2.factor(&Poly::zero()), Err(Error::ZeroPolynomial));
        let nm = Poly::new(vec![1, 2]);
        assert_eq!(ring(3).factor(&nm), Err(Error::NotMonic));
    }

    #[test]
    fn factorization_type_examples() {
        let r2 = ring(2);
        let f = &*r2.field;
        let t = r2.factorization_type(&p(f, &[0, 1, 1])).unwrap();
        assert_eq!(t.pairs, vec![(1, 1), (1, 1)]);
        assert_eq!(t.size(), 2);

        let t = r2.factorization_type(&p(f, &[1, 1, 1])).unwrap();
        assert_eq!(t.pairs, vec![(2, 1)]);

        let r3 = ring(3);
        let t = r3.factorization_type(&Poly::new(vec![1, 2, 1])).unwrap();
        assert_eq!(t.pairs, vec![(1, 2)]);

        assert_eq!(r2.factorization_type(&Poly::one()).unwrap(), FactorizationType::empty());
    }

    #[test]
    fn factor_reconstructs_and_type_size_matches_everywhere() {
        for q in [2u64, 3] {
            let r = ring(q);
            let f = &*r.field;
            for n in 1..=5usize {
                for poly in monic_polys(f, n) {
                    let fs = r.factor(&poly).unwrap();
                    let mut prod = Poly::one();
                    for (p, e) in &fs {
                        for _ in 0..*e {
                            prod = prod.mul(p, f);
                        }
                    }
                    assert_eq!(prod, poly);
                    // primes distinct
                    for i in 1..fs.len() {
                        assert_ne!(fs[i - 1].0, fs[i].0);
                    }
                    let t = r.factorization_type(&poly).unwrap();
                    assert_eq!(t.size() as usize, n);
                }
            }
        }
    }

    #[test]
    fn type_union_on_coprime_products() {
        let r = ring(2);
        let f = &*r.field;
        for a in monic_polys(f, 2) {
            for b in monic_polys(f, 3) {
                if a.gcd(&b, f).deg() != Some(0) {
                    continue;
                }
                let ta = r.factorization_type(&a).unwrap();
                let tb = r.factorization_type(&b).unwrap();
                let tab = r.factorization_type(&a.mul(&b, f)).unwrap();
                assert_eq!(tab, ta.union(&tb));
            }
        }
    }

    #[test]
    fn euler_phi_examples() {
        let r3 = ring(3);
        assert_eq!(r3.euler_phi(&Poly::t()).unwrap(), 2);
        // T^2 + 1 is irreducible over F_3: phi = q^2 - 1 = 8
        assert_eq!(r3.euler_phi(&Poly::new(vec![1, 0, 1])).unwrap(), 8);
        let r2 = ring(2);
        assert_eq!(r2.euler_phi(&Poly::new(vec![0, 0, 1])).unwrap(), 2);
        assert_eq!(r2.euler_phi(&Poly::zero()), Err(Error::ZeroModulus));
    }

    #[test]
    fn euler_phi_matches_brute_count() {
        // brute force: count residues of degree < deg M coprime to M
        for q in [2u64, 3] {
            let r = ring(q);
            let f = &*r.field;
            for dm in 1..=3usize {
                for m in monic_polys(f, dm) {
                    let mut cnt = 0u64;
                    for code in 0..q.pow(dm as u32) {
                        let mut coeffs = Vec::with_capacity(dm);
                        let mut c = code;
                        for _ in 0..dm {
                            coeffs.push((c % q) as Elem);
                            c /= q;
                        }
                        let g = Poly::new(coeffs);
                        if g.gcd(&m, f).deg() == Some(0) {
                            cnt += 1;
                        }
                    }
                    assert_eq!(r.euler_phi(&m).unwrap(), cnt, "q={q} M={m:?}");
                }
            }
        }
    }

    #[test]
    fn unique_factorization_over_full_enumeration() {
        // every f in M_n factors uniquely: reconstruct-and-compare plus a
        // count check: the number of f with a given type matches a direct
        // product count for one known case.
        let r = ring(2);
        let f = &*r.field;
        let mut seen = HashMap::new();
        for poly in monic_polys(f, 4) {
            let t = r.factorization_type(&poly).unwrap();
            *seen.entry(t).or_insert(0u32) += 1;
        }
        // |P_1| = 2, |P_2| = 1, |P_3| = 2, |P_4| = 3 over F_2
        assert_eq!(seen[&FactorizationType::new(vec![(4, 1)])], 3);
        assert_eq!(seen[&FactorizationType::new(vec![(1, 1), (3, 1)])], 4);
        assert_eq!(seen[&FactorizationType::new(vec![(2, 2)])], 1);
        assert_eq!(seen[&FactorizationType::new(vec![(1, 2), (1, 2)])], 1);
    }

    #[test]
    fn poly_text_round_trip() {
        let r3 = ring(3);
        let f = &*r3.field;
        let a = Poly::new(vec![1, 0, 2]);
        assert_eq!(a.to_text(f), "[1,0,2]");
        assert_eq!(Poly::parse("[1,0,2]", f).unwrap(), a);

        let f4 = Field::new(crate::field::FieldSpec { p: 2, k: 2, modulus: vec![1, 1, 1] }).unwrap();
        let x = f4.from_coords(&[0, 1]);
        let b = Poly::new(vec![1, x]);
        let s = b.to_text(&f4);
        assert_eq!(s, "[[1,0],[0,1]]");
        assert_eq!(Poly::parse(&s, &f4).unwrap(), b);
    }

    #[test]
    fn monic_code_round_trip() {
        let r = ring(3);
        for n in 0..=4usize {
            for (i, poly) in monic_polys(&r.field, n).iter().enumerate() {
                let code = poly.monic_code(3);
                assert_eq!(&Poly::monic_from_code(n, code, 3), poly);
                let _ = i;
            }
        }
    }
}
