//! Bulk factorization-type tables.
//!
//! Per-polynomial factorization is [`crate::poly::PolyRing::factor`] (trial
//! division). Sweeps that touch every element of M_n are served instead by a
//! smallest-prime-factor sieve over all monic polynomials of degree <= N,
//! which produces identical factorizations at a fraction of the cost. The two
//! paths are cross-checked in tests.

use crate::field::{Elem, Field};
use crate::poly::{FactorizationType, Poly};
use std::collections::HashMap;
use std::sync::Arc;

const UNSET: u32 = u32::MAX;
const CODE_BITS: u32 = 26;
const CODE_MASK: u32 = (1 << CODE_BITS) - 1;

/// Smallest-prime-factor table for every monic polynomial of degree 1..=max_deg.
/// Entry `spf[d][code]` packs the degree and code of the smallest prime factor
/// of the polynomial with that code, or is unset when it is irreducible.
pub struct FactorSieve {
    pub field: Arc<Field>,
    pub max_deg: usize,
    spf: Vec<Vec<u32>>,
    /// Codes of monic irreducibles, by degree.
    pub primes: Vec<Vec<u64>>,
}

impl FactorSieve {
    pub fn build(field: Arc<Field>, max_deg: usize) -> FactorSieve {
        let q = field.q;
        assert!(q.pow(max_deg as u32) <= (1 << CODE_BITS), "sieve exceeds code width");
        let mut spf: Vec<Vec<u32>> = Vec::with_capacity(max_deg + 1);
        spf.push(Vec::new());
        for d in 1..=max_deg {
            spf.push(vec![UNSET; q.pow(d as u32) as usize]);
        }
        let mut primes: Vec<Vec<u64>> = vec![Vec::new(); max_deg + 1];

        let mut pbuf = vec![0 as Elem; max_deg + 1];
        let mut gbuf = vec![0 as Elem; max_deg + 1];
        let mut fbuf = vec![0 as Elem; 2 * max_deg + 1];
        for pd in 1..=max_deg {
            let pr: Vec<u64> = (0..q.pow(pd as u32))
                .filter(|&c| spf[pd][c as usize] == UNSET)
                .collect();
            for &pcode in &pr {
                let packed = ((pd as u32) << CODE_BITS) | pcode as u32;
                decode_monic(pcode, pd, q, &mut pbuf);
                for m in (pd + 1)..=max_deg {
                    let gd = m - pd;
                    let spf_m = &mut spf[m];
                    for gcode in 0..q.pow(gd as u32) {
                        decode_monic(gcode, gd, q, &mut gbuf);
                        let fcode = mul_monic_code(&pbuf, pd, &gbuf, gd, &field, q, &mut fbuf);
                        let slot = &mut spf_m[fcode as usize];
                        if *slot == UNSET {
                            *slot = packed;
                        }
                    }
                }
            }
            primes[pd] = pr;
        }
        FactorSieve { field, max_deg, spf, primes }
    }

    /// Factorization of the monic polynomial of degree `d` with code `code`,
    /// as ((prime degree, prime code), exponent) with distinct primes.
    pub fn factor_code(&self, d: usize, code: u64) -> Vec<((usize, u64), u32)> {
        let q = self.field.q;
        let mut out: Vec<((usize, u64), u32)> = Vec::new();
        let mut work = vec![0 as Elem; d + 1];
        decode_monic(code, d, q, &mut work);
        let mut deg = d;
        let mut pbuf = vec![0 as Elem; d + 1];
        while deg >= 1 {
            let cur_code = encode_monic(&work, deg, q);
            let packed = self.spf[deg][cur_code as usize];
            let (pd, pcode) = if packed == UNSET {
                (deg, cur_code)
            } else {
                ((packed >> CODE_BITS) as usize, (packed & CODE_MASK) as u64)
            };
            match out.iter_mut().find(|(p, _)| *p == (pd, pcode)) {
                Some((_, e)) => *e += 1,
                None => out.push(((pd, pcode), 1)),
            }
            decode_monic(pcode, pd, q, &mut pbuf);
            divide_exact(&mut work, deg, &pbuf, pd, &self.field);
            deg -= pd;
        }
        out.sort_unstable();
        out
    }

    pub fn type_of_code(&self, d: usize, code: u64) -> FactorizationType {
        FactorizationType::new(
            self.factor_code(d, code)
                .into_iter()
                .map(|((pd, _), e)| (pd as u32, e))
                .collect(),
        )
    }

    pub fn prime_polys(&self, d: usize) -> Vec<Poly> {
        self.primes[d]
            .iter()
            .map(|&c| Poly::monic_from_code(d, c, self.field.q))
            .collect()
    }
}

#[inline]
fn decode_monic(code: u64, d: usize, q: u64, buf: &mut [Elem]) {
    let mut c = code;
    for item in buf.iter_mut().take(d) {
        *item = (c % q) as Elem;
        c /= q;
    }
    buf[d] = 1;
}

#[inline]
fn encode_monic(coeffs: &[Elem], d: usize, q: u64) -> u64 {
    let mut acc = 0u64;
    for i in (0..d).rev() {
        acc = acc * q + coeffs[i] as u64;
    }
    acc
}

#[inline]
fn mul_monic_code(
    a: &[Elem],
    da: usize,
    b: &[Elem],
    db: usize,
    field: &Field,
    q: u64,
    fbuf: &mut [Elem],
) -> u64 {
    let dn = da + db;
    fbuf[..=dn].fill(0);
    for i in 0..=da {
        let x = a[i];
        if x == 0 {
            continue;
        }
        for j in 0..=db {
            let y = b[j];
            if y != 0 {
                fbuf[i + j] = field.add(fbuf[i + j], field.mul(x, y));
            }
        }
    }
    encode_monic(fbuf, dn, q)
}

/// In-place exact division of monic `work` (degree `deg`) by monic `p`
/// (degree `pd`); the quotient ends up in `work[0..=deg-pd]`.
#[inline]
fn divide_exact(work: &mut [Elem], deg: usize, p: &[Elem], pd: usize, field: &Field) {
    for i in (pd..=deg).rev() {
        let qc = work[i];
        if qc != 0 {
            for j in 0..pd {
                let t = field.mul(qc, p[j]);
                work[i - pd + j] = field.sub(work[i - pd + j], t);
            }
        }
    }
    for i in 0..=(deg - pd) {
        work[i] = work[i + pd];
    }
    work[deg - pd] = 1;
}

/// The factorization type of every element of M_n, interned.
pub struct TypeCensus {
    pub n: usize,
    /// Distinct types in canonical (sorted) order.
    pub types: Vec<FactorizationType>,
    /// For each monic code in 0..q^n, the index into `types`.
    pub type_of: Vec<u32>,
    /// Number of polynomials per type.
    pub counts: Vec<u64>,
}

impl TypeCensus {
    pub fn build(sieve: &FactorSieve, n: usize) -> TypeCensus {
        let q = sieve.field.q;
        let total = q.pow(n as u32);
        if n == 0 {
            return TypeCensus {
                n,
                types: vec![FactorizationType::empty()],
                type_of: vec![0],
                counts: vec![1],
            };
        }
        let mut intern: HashMap<u128, u32> = HashMap::new();
        let mut types: Vec<FactorizationType> = Vec::new();
        let mut type_of = vec![0u32; total as usize];
        for code in 0..total {
            let t = sieve.type_of_code(n, code);
            let key = t.pack().expect("desk-scale types pack");
            let idx = *intern.entry(key).or_insert_with(|| {
                types.push(t);
                (types.len() - 1) as u32
            });
            type_of[code as usize] = idx;
        }
        // canonical ordering of the interned list
        let mut order: Vec<u32> = (0..types.len() as u32).collect();
        order.sort_by(|&a, &b| types[a as usize].cmp(&types[b as usize]));
        let mut remap = vec![0u32; types.len()];
        for (new_idx, &old_idx) in order.iter().enumerate() {
            remap[old_idx as usize] = new_idx as u32;
        }
        let mut sorted_types = types.clone();
        for (old_idx, t) in types.into_iter().enumerate() {
            sorted_types[remap[old_idx] as usize] = t;
        }
        let mut counts = vec![0u64; sorted_types.len()];
        for slot in type_of.iter_mut() {
            *slot = remap[*slot as usize];
            counts[*slot as usize] += 1;
        }
        TypeCensus { n, types: sorted_types, type_of, counts }
    }

    pub fn type_index(&self, t: &FactorizationType) -> Option<usize> {
        self.types.binary_search(t).ok()
    }
}
