//! Radix-β arbitrary-precision non-negative integers.
//!
//! A [`PackedInt`] stores its value in machine limbs of base `β^k`, where `k`
//! is the largest exponent with `β^k ≤ 2^32`. The radix-β digits are therefore
//! never materialized one per word, yet digit-level operations (counting,
//! slicing, shifting by `β^k`) stay cheap: for radix 10 a limb holds nine
//! decimal digits, for radix `2^32` a limb is a single digit and every slice
//! at a digit boundary is a plain limb-range copy.
//!
//! All values are immutable and canonical: no most-significant zero limb, and
//! zero is the empty limb sequence.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Limb count at or below which [`PackedInt::checked_mul`] uses the
/// schoolbook kernel instead of Karatsuba.
pub const DEFAULT_KARATSUBA_THRESHOLD: usize = 32;

const MAX_LIMB_BASE: u64 = 1 << 32;

/// Digit radix β together with the limb layout derived from it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Radix {
    beta: u64,
    per_limb: u32,
    limb_base: u64,
}

impl Radix {
    /// β = 10; nine decimal digits per limb.
    pub const DECIMAL: Radix = Radix { beta: 10, per_limb: 9, limb_base: 1_000_000_000 };

    /// β = 2^32; one digit per limb, so digit slicing is limb slicing.
    pub const POW2_32: Radix = Radix { beta: 1 << 32, per_limb: 1, limb_base: 1 << 32 };

    pub fn new(beta: u64) -> Result<Radix> {
        if !(2..=MAX_LIMB_BASE).contains(&beta) {
            return Err(Error::InvalidRadix(beta));
        }
        let mut per_limb = 1u32;
        let mut limb_base = beta;
        while limb_base as u128 * beta as u128 <= MAX_LIMB_BASE as u128 {
            limb_base *= beta;
            per_limb += 1;
        }
        Ok(Radix { beta, per_limb, limb_base })
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    /// Number of radix-β digits held by one limb.
    pub fn digits_per_limb(&self) -> u32 {
        self.per_limb
    }

    /// `β^digits_per_limb`.
    pub fn limb_base(&self) -> u64 {
        self.limb_base
    }

    /// `β^r` for `r ≤ digits_per_limb`.
    fn pow(&self, r: u32) -> u64 {
        debug_assert!(r <= self.per_limb);
        self.beta.pow(r)
    }

    /// Radix-β digits of a single limb value.
    fn digits_in(&self, mut v: u64) -> usize {
        let mut d = 0;
        while v > 0 {
            v /= self.beta;
            d += 1;
        }
        d
    }
}

/// A canonical non-negative integer in radix β.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PackedInt {
    radix: Radix,
    limbs: Vec<u32>,
}

impl PackedInt {
    pub fn zero(radix: Radix) -> Self {
        PackedInt { radix, limbs: Vec::new() }
    }

    pub fn one(radix: Radix) -> Self {
        PackedInt { radix, limbs: vec![1] }
    }

    fn from_limbs(radix: Radix, mut limbs: Vec<u32>) -> Self {
        normalize(&mut limbs);
        PackedInt { radix, limbs }
    }

    pub fn from_u64(radix: Radix, v: u64) -> Self {
        Self::from_u128(radix, v as u128)
    }

    pub fn from_u128(radix: Radix, mut v: u128) -> Self {
        let base = radix.limb_base as u128;
        let mut limbs = Vec::new();
        while v > 0 {
            limbs.push((v % base) as u32);
            v /= base;
        }
        PackedInt { radix, limbs }
    }

    pub fn from_biguint(radix: Radix, v: &BigUint) -> Self {
        if radix.limb_base == MAX_LIMB_BASE {
            return Self::from_limbs(radix, v.to_u32_digits());
        }
        if let Some(small) = v.to_u128() {
            return Self::from_u128(radix, small);
        }
        let base = BigUint::from(radix.limb_base);
        let mut rest = v.clone();
        let mut limbs = Vec::new();
        while !rest.is_zero() {
            let (q, r) = rest.div_rem(&base);
            limbs.push(r.to_u32().expect("remainder below limb base"));
            rest = q;
        }
        PackedInt { radix, limbs }
    }

    pub fn to_biguint(&self) -> BigUint {
        if self.radix.limb_base == MAX_LIMB_BASE {
            return BigUint::new(self.limbs.clone());
        }
        if self.limbs.len() <= 4 {
            let base = self.radix.limb_base as u128;
            return BigUint::from(self.limbs.iter().rev().fold(0u128, |acc, &l| acc * base + l as u128));
        }
        let base = BigUint::from(self.radix.limb_base);
        self.limbs
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, &l| acc * &base + BigUint::from(l))
    }

    /// Builds a value from radix-β digits, least significant first.
    pub fn from_digits(radix: Radix, digits: &[u64]) -> Result<Self> {
        let k = radix.per_limb as usize;
        let mut limbs = Vec::with_capacity(digits.len().div_ceil(k));
        for chunk in digits.chunks(k) {
            let mut limb = 0u64;
            for &d in chunk.iter().rev() {
                if d >= radix.beta {
                    return Err(Error::FieldOverflow { width: 1 });
                }
                limb = limb * radix.beta + d;
            }
            limbs.push(limb as u32);
        }
        Ok(Self::from_limbs(radix, limbs))
    }

    /// Parses `0|[1-9][0-9]*` into radix β.
    pub fn from_decimal_str(s: &str, radix: Radix) -> Result<Self> {
        let bytes = s.as_bytes();
        let well_formed = !bytes.is_empty()
            && bytes.iter().all(u8::is_ascii_digit)
            && (bytes[0] != b'0' || bytes.len() == 1);
        if !well_formed {
            return Err(Error::MalformedInteger(s.to_string()));
        }
        if radix == Radix::DECIMAL {
            let limbs = bytes
                .rchunks(9)
                .map(|chunk| chunk.iter().fold(0u32, |acc, &b| acc * 10 + (b - b'0') as u32))
                .collect();
            return Ok(Self::from_limbs(radix, limbs));
        }
        let mut limbs = Vec::new();
        for chunk in bytes.chunks(9) {
            let value = chunk.iter().fold(0u64, |acc, &b| acc * 10 + (b - b'0') as u64);
            mul_small_add(&mut limbs, 10u64.pow(chunk.len() as u32), value, radix.limb_base);
        }
        Ok(Self::from_limbs(radix, limbs))
    }

    pub fn to_decimal_string(&self) -> String {
        if self.limbs.is_empty() {
            return "0".to_string();
        }
        let chunks: Vec<u32> = if self.radix == Radix::DECIMAL {
            self.limbs.clone()
        } else {
            let mut rest = self.limbs.clone();
            let mut out = Vec::new();
            while !rest.is_empty() {
                let r = div_small_in_place(&mut rest, 1_000_000_000, self.radix.limb_base);
                out.push(r as u32);
            }
            out
        };
        let mut s = chunks.last().unwrap().to_string();
        for c in chunks.iter().rev().skip(1) {
            s.push_str(&format!("{c:09}"));
        }
        s
    }

    pub fn radix(&self) -> Radix {
        self.radix
    }

    /// Raw limbs in base `β^digits_per_limb`, least significant first.
    pub fn limbs(&self) -> &[u32] {
        &self.limbs
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    /// Checks the representation invariants.
    pub fn is_canonical(&self) -> bool {
        self.limbs.last() != Some(&0)
            && self.limbs.iter().all(|&l| (l as u64) < self.radix.limb_base)
    }

    /// Number of radix-β digits; zero has none.
    pub fn digit_count(&self) -> usize {
        match self.limbs.last() {
            None => 0,
            Some(&top) => {
                (self.limbs.len() - 1) * self.radix.per_limb as usize
                    + self.radix.digits_in(top as u64)
            }
        }
    }

    /// Radix-β digit at position `i` (zero past the top).
    pub fn digit(&self, i: usize) -> u64 {
        let k = self.radix.per_limb as usize;
        match self.limbs.get(i / k) {
            None => 0,
            Some(&l) => (l as u64 / self.radix.pow((i % k) as u32)) % self.radix.beta,
        }
    }

    /// All radix-β digits, least significant first.
    pub fn digits(&self) -> Vec<u64> {
        (0..self.digit_count()).map(|i| self.digit(i)).collect()
    }

    fn check_radix(&self, other: &PackedInt) -> Result<()> {
        if self.radix != other.radix {
            return Err(Error::RadixMismatch(self.radix.beta, other.radix.beta));
        }
        Ok(())
    }

    pub fn cmp_value(&self, other: &PackedInt) -> Result<Ordering> {
        self.check_radix(other)?;
        Ok(cmp_limbs(&self.limbs, &other.limbs))
    }

    pub fn checked_add(&self, other: &PackedInt) -> Result<PackedInt> {
        self.check_radix(other)?;
        let mut acc = self.limbs.clone();
        add_into(&mut acc, &other.limbs, 0, self.radix.limb_base);
        Ok(PackedInt { radix: self.radix, limbs: acc })
    }

    pub fn checked_mul(&self, other: &PackedInt) -> Result<PackedInt> {
        self.mul_with_threshold(other, DEFAULT_KARATSUBA_THRESHOLD)
    }

    /// Product using Karatsuba above `threshold` limbs (in the shorter
    /// operand) and the schoolbook kernel at or below it. Pass `usize::MAX`
    /// to force the schoolbook path.
    pub fn mul_with_threshold(&self, other: &PackedInt, threshold: usize) -> Result<PackedInt> {
        self.check_radix(other)?;
        let limbs = mul_limbs(&self.limbs, &other.limbs, self.radix.limb_base, threshold.max(1));
        Ok(Self::from_limbs(self.radix, limbs))
    }

    /// `⌊self / β^offset⌋ mod β^width`. Slices past the top are zero.
    pub fn slice(&self, offset: usize, width: usize) -> PackedInt {
        let radix = self.radix;
        let k = radix.per_limb as usize;
        let (q, r) = (offset / k, (offset % k) as u32);
        if width == 0 || q >= self.limbs.len() {
            return PackedInt::zero(radix);
        }
        let need = width.div_ceil(k);
        let end = (q + need).min(self.limbs.len());
        let mut out: Vec<u32> = if r == 0 {
            self.limbs[q..end].to_vec()
        } else {
            let low_div = radix.pow(r);
            let high_mul = radix.pow(k as u32 - r);
            (q..end)
                .map(|i| {
                    let low = self.limbs[i] as u64 / low_div;
                    let high = self.limbs.get(i + 1).map_or(0, |&v| (v as u64 % low_div) * high_mul);
                    (low + high) as u32
                })
                .collect()
        };
        let (full, rem) = (width / k, (width % k) as u32);
        if out.len() > full {
            if rem == 0 {
                out.truncate(full);
            } else {
                out.truncate(full + 1);
                out[full] = (out[full] as u64 % radix.pow(rem)) as u32;
            }
        }
        Self::from_limbs(radix, out)
    }

    /// `self · β^k`.
    pub fn shl_digits(&self, k: usize) -> PackedInt {
        if self.is_zero() {
            return self.clone();
        }
        let per = self.radix.per_limb as usize;
        let (q, r) = (k / per, (k % per) as u32);
        let mut limbs = vec![0u32; q];
        if r == 0 {
            limbs.extend_from_slice(&self.limbs);
        } else {
            let mut scaled = self.limbs.clone();
            mul_small_add(&mut scaled, self.radix.pow(r), 0, self.radix.limb_base);
            limbs.extend_from_slice(&scaled);
        }
        PackedInt { radix: self.radix, limbs }
    }

    /// Assembles `Σ fields[t] · β^{t·width}`. Every field must be below
    /// `β^width`, so the fields occupy disjoint digit ranges.
    pub fn from_fields<'a, I>(radix: Radix, width: usize, fields: I) -> Result<PackedInt>
    where
        I: IntoIterator<Item = &'a PackedInt>,
    {
        let per = radix.per_limb as usize;
        let mut acc: Vec<u32> = Vec::new();
        let mut scratch: Vec<u32> = Vec::new();
        for (t, field) in fields.into_iter().enumerate() {
            if field.radix != radix {
                return Err(Error::RadixMismatch(radix.beta, field.radix.beta));
            }
            if field.digit_count() > width {
                return Err(Error::FieldOverflow { width });
            }
            if field.is_zero() {
                continue;
            }
            let offset = t * width;
            let (q, r) = (offset / per, (offset % per) as u32);
            if r == 0 {
                add_into(&mut acc, &field.limbs, q, radix.limb_base);
            } else {
                scratch.clear();
                scratch.extend_from_slice(&field.limbs);
                mul_small_add(&mut scratch, radix.pow(r), 0, radix.limb_base);
                add_into(&mut acc, &scratch, q, radix.limb_base);
            }
        }
        Ok(Self::from_limbs(radix, acc))
    }
}

impl fmt::Display for PackedInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

impl fmt::Debug for PackedInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PackedInt({}, radix {})", self, self.radix.beta)
    }
}

fn normalize(limbs: &mut Vec<u32>) {
    while limbs.last() == Some(&0) {
        limbs.pop();
    }
}

fn cmp_limbs(a: &[u32], b: &[u32]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

/// `acc += x · base^offset`.
fn add_into(acc: &mut Vec<u32>, x: &[u32], offset: usize, base: u64) {
    if acc.len() < offset + x.len() {
        acc.resize(offset + x.len(), 0);
    }
    let mut carry = 0u64;
    for (slot, &limb) in acc[offset..].iter_mut().zip(x) {
        let t = *slot as u64 + limb as u64 + carry;
        carry = (t >= base) as u64;
        *slot = (t - carry * base) as u32;
    }
    let mut i = offset + x.len();
    while carry > 0 {
        if i == acc.len() {
            acc.push(0);
        }
        let t = acc[i] as u64 + carry;
        carry = (t >= base) as u64;
        acc[i] = (t - carry * base) as u32;
        i += 1;
    }
}

/// `acc -= x`; requires `acc ≥ x`.
fn sub_in_place(acc: &mut Vec<u32>, x: &[u32], base: u64) {
    let mut borrow = 0u64;
    for (slot, &limb) in acc.iter_mut().zip(x) {
        let sub = limb as u64 + borrow;
        let cur = *slot as u64;
        borrow = (cur < sub) as u64;
        *slot = (cur + borrow * base - sub) as u32;
    }
    let mut i = x.len();
    while borrow > 0 {
        let cur = acc[i] as u64;
        borrow = (cur == 0) as u64;
        acc[i] = (cur + borrow * base - 1) as u32;
        i += 1;
    }
    normalize(acc);
}

/// `v = v · m + add` with `m ≤ base`, `add < base`.
fn mul_small_add(v: &mut Vec<u32>, m: u64, add: u64, base: u64) {
    let base = base as u128;
    let mut carry = add as u128;
    for limb in v.iter_mut() {
        let t = *limb as u128 * m as u128 + carry;
        *limb = (t % base) as u32;
        carry = t / base;
    }
    while carry > 0 {
        v.push((carry % base) as u32);
        carry /= base;
    }
}

/// `v /= d`, returning the remainder.
fn div_small_in_place(v: &mut Vec<u32>, d: u64, base: u64) -> u64 {
    let mut rem = 0u128;
    for limb in v.iter_mut().rev() {
        let cur = rem * base as u128 + *limb as u128;
        *limb = (cur / d as u128) as u32;
        rem = cur % d as u128;
    }
    normalize(v);
    rem as u64
}

fn trimmed(x: &[u32]) -> &[u32] {
    let len = x.iter().rposition(|&l| l != 0).map_or(0, |p| p + 1);
    &x[..len]
}

fn mul_limbs(a: &[u32], b: &[u32], base: u64, threshold: usize) -> Vec<u32> {
    let (a, b) = (trimmed(a), trimmed(b));
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) <= threshold {
        let mut out = mul_schoolbook(a, b, base);
        normalize(&mut out);
        return out;
    }
    let half = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(half.min(a.len()));
    let (b0, b1) = b.split_at(half.min(b.len()));

    let z0 = mul_limbs(a0, b0, base, threshold);
    let z2 = mul_limbs(a1, b1, base, threshold);
    let mut sa = a0.to_vec();
    add_into(&mut sa, a1, 0, base);
    let mut sb = b0.to_vec();
    add_into(&mut sb, b1, 0, base);
    let mut z1 = mul_limbs(&sa, &sb, base, threshold);
    sub_in_place(&mut z1, &z0, base);
    sub_in_place(&mut z1, &z2, base);

    let mut out = z0;
    add_into(&mut out, &z1, half, base);
    add_into(&mut out, &z2, 2 * half, base);
    normalize(&mut out);
    out
}

const DECIMAL_LIMB_BASE: u64 = 1_000_000_000;

fn mul_schoolbook(a: &[u32], b: &[u32], base: u64) -> Vec<u32> {
    if base == DECIMAL_LIMB_BASE {
        return mul_schoolbook_decimal(a, b);
    }
    let len = a.len() + b.len();
    // Each 64-bit partial product is split into 32-bit halves so the
    // column sums cannot overflow.
    let (mut lo, mut hi) = (vec![0u64; len], vec![0u64; len]);
    for (i, &x) in a.iter().enumerate() {
        let x = x as u64;
        for ((l, h), &y) in lo[i..].iter_mut().zip(&mut hi[i..]).zip(b) {
            let p = x * y as u64;
            *l += p & 0xFFFF_FFFF;
            *h += p >> 32;
        }
    }
    let mut out = vec![0u32; len];
    let mut carry = 0u128;
    for ((slot, &l), &h) in out.iter_mut().zip(&lo).zip(&hi) {
        let v = carry + l as u128 + ((h as u128) << 32);
        if base == MAX_LIMB_BASE {
            *slot = v as u32;
            carry = v >> 32;
        } else {
            *slot = (v % base as u128) as u32;
            carry = v / base as u128;
        }
    }
    out
}

// Limbs are below 10^9, so a u64 column absorbs 16 partial products plus
// a pending carry before it has to be reduced.
fn mul_schoolbook_decimal(a: &[u32], b: &[u32]) -> Vec<u32> {
    const ROWS: usize = 16;
    let len = a.len() + b.len();
    let mut acc = vec![0u64; len];
    for (c, rows) in a.chunks(ROWS).enumerate() {
        for (r, &x) in rows.iter().enumerate() {
            let x = x as u64;
            for (slot, &y) in acc[c * ROWS + r..].iter_mut().zip(b) {
                *slot += x * y as u64;
            }
        }
        let mut carry = 0u64;
        for slot in acc[c * ROWS..].iter_mut() {
            let v = *slot + carry;
            *slot = v % DECIMAL_LIMB_BASE;
            carry = v / DECIMAL_LIMB_BASE;
        }
    }
    acc.into_iter().map(|v| v as u32).collect()
}
