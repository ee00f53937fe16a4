//! Explicit finite fields `GF(p^h)` with table-driven arithmetic.
//!
//! Elements are canonical integer codes in `0..q`: the code of the residue
//! class `c_0 + c_1 x + ... + c_{h-1} x^{h-1}` is `sum c_i p^i`.  For `h >= 2`
//! the generator `alpha` is the residue class of `x` itself (so the modulus
//! must be primitive); for `h = 1` the modulus is `x - g` for a primitive
//! root `g` and `alpha = g`.  Multiplication and inversion go through
//! log/antilog tables built once at construction, addition is digit-wise
//! (a plain XOR in characteristic two).

use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

/// Canonical integer code of a field element.
pub type Elem = u32;

/// Largest supported field order.
pub const DEFAULT_Q_CAP: u64 = 4096;

/// Built-in primitive moduli, coefficients constant-term first, monic.
/// Smallest candidate in little-endian coefficient order for each `(p, h)`
/// with `p in {2, 3, 5, 7}` and `p^h <= 4096`.
const DEFAULT_MODULI: &[(u64, u32, &[u32])] = &[
    (2, 1, &[1, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (2, 10, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (2, 11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 12, &[1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1]),
    (3, 1, &[1, 1]),
    (3, 2, &[2, 1, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 1, 0, 0, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 1, 0, 0, 0, 0, 1]),
    (3, 7, &[1, 2, 1, 0, 0, 0, 0, 1]),
    (5, 1, &[2, 1]),
    (5, 2, &[2, 1, 1]),
    (5, 3, &[2, 3, 0, 1]),
    (5, 4, &[2, 2, 1, 0, 1]),
    (5, 5, &[2, 4, 0, 0, 0, 1]),
    (7, 1, &[2, 1]),
    (7, 2, &[3, 1, 1]),
    (7, 3, &[2, 3, 0, 1]),
    (7, 4, &[5, 3, 1, 0, 1]),
];

struct FieldInner {
    p: u64,
    h: u32,
    q: u64,
    modulus: Vec<u32>,
    alpha: Elem,
    /// `exp[i] = alpha^i` for `i in 0..2(q-1)` (doubled to skip a modulo).
    exp: Vec<Elem>,
    /// `log[e]` defined for nonzero `e`; `log[0]` is a sentinel.
    log: Vec<u32>,
}

/// A finite field `GF(p^h)`, cheap to clone and compare.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.h == other.0.h && self.0.modulus == other.0.modulus
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.h)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.h == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.h)
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial remainder of `a` by monic `m` over `GF(p)`, constant-first.
fn poly_rem(a: &[u32], m: &[u32], p: u64) -> Vec<u32> {
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for j in 0..=dm {
                let idx = shift + j;
                r[idx] = (r[idx] + p - (lead * m[j] as u64) % p) % p;
            }
        }
        r.pop();
    }
    r.iter().map(|&c| (c % p) as u32).collect()
}

/// True when `m` (monic, constant-first) is irreducible over `GF(p)`,
/// decided by trial division against every monic polynomial of degree
/// at most `deg(m)/2`.
fn is_irreducible(m: &[u32], p: u64) -> bool {
    let h = m.len() - 1;
    if h == 1 {
        return true;
    }
    if m[0] == 0 {
        return false; // divisible by x
    }
    for deg in 1..=h / 2 {
        let count = p.pow(deg as u32);
        for v in 0..count {
            let mut d = Vec::with_capacity(deg + 1);
            let mut t = v;
            for _ in 0..deg {
                d.push((t % p) as u32);
                t /= p;
            }
            d.push(1);
            if poly_rem(m, &d, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn digits_of(mut v: u64, p: u64, h: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(h as usize);
    for _ in 0..h {
        d.push((v % p) as u32);
        v /= p;
    }
    d
}

fn value_of(d: &[u32], p: u64) -> u64 {
    d.iter().rev().fold(0u64, |acc, &c| acc * p + c as u64)
}

impl Field {
    /// Build `GF(p^h)`; with `modulus = None` a built-in primitive modulus
    /// is used (for `h = 1` and a prime outside the table, `x - g` with `g`
    /// the least primitive root is computed on the fly).
    pub fn new(p: u64, h: u32, modulus: Option<&[u32]>) -> Result<Field> {
        Self::new_with_cap(p, h, modulus, DEFAULT_Q_CAP)
    }

    /// Same as [`Field::new`] with an explicit order cap.
    pub fn new_with_cap(p: u64, h: u32, modulus: Option<&[u32]>, cap: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if h == 0 {
            return Err(Error::MalformedModulus("extension degree must be >= 1".into()));
        }
        let mut q: u64 = 1;
        for _ in 0..h {
            q = q.checked_mul(p).filter(|&v| v <= cap).ok_or(Error::FieldTooLarge {
                q: p.checked_pow(h).unwrap_or(u64::MAX),
                cap,
            })?;
        }

        let modulus: Vec<u32> = match modulus {
            Some(m) => {
                if m.len() != h as usize + 1 {
                    return Err(Error::MalformedModulus(format!(
                        "expected {} coefficients for degree {}, got {}",
                        h + 1,
                        h,
                        m.len()
                    )));
                }
                if m[h as usize] != 1 {
                    return Err(Error::MalformedModulus("modulus must be monic".into()));
                }
                if m.iter().any(|&c| c as u64 >= p) {
                    return Err(Error::MalformedModulus(format!(
                        "coefficients must lie in 0..{p}"
                    )));
                }
                m.to_vec()
            }
            None => Self::default_modulus(p, h)?,
        };

        if !is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus { p });
        }

        // alpha is the class of x (h >= 2) or of -c0 (h = 1).
        let alpha_digits: Vec<u32> = if h == 1 {
            vec![((p - modulus[0] as u64 % p) % p) as u32]
        } else {
            let mut d = vec![0u32; h as usize];
            d[1] = 1;
            d
        };
        let alpha = value_of(&alpha_digits, p) as Elem;

        // Walk powers of alpha, building exp/log and checking that the
        // multiplicative order is exactly q - 1.
        let ord = (q - 1) as usize;
        let mut exp = vec![0 as Elem; 2 * ord.max(1)];
        let mut log = vec![u32::MAX; q as usize];
        let mut cur = vec![0u32; h as usize];
        cur[0] = 1;
        for i in 0..ord {
            let code = value_of(&cur, p) as Elem;
            if code == 1 && i > 0 {
                return Err(Error::NotPrimitive { p });
            }
            exp[i] = code;
            log[code as usize] = i as u32;
            // cur *= alpha (polynomial multiplication + reduction)
            let mut prod = vec![0u64; 2 * h as usize];
            for (i1, &c1) in cur.iter().enumerate() {
                if c1 != 0 {
                    for (i2, &c2) in alpha_digits.iter().enumerate() {
                        prod[i1 + i2] += c1 as u64 * c2 as u64;
                    }
                }
            }
            let prod: Vec<u32> = prod.iter().map(|&c| (c % p) as u32).collect();
            let mut red = poly_rem(&prod, &modulus, p);
            red.resize(h as usize, 0);
            cur = red;
        }
        if value_of(&cur, p) != 1 {
            return Err(Error::NotPrimitive { p });
        }
        for i in 0..ord {
            exp[ord + i] = exp[i];
        }

        Ok(Field(Arc::new(FieldInner { p, h, q, modulus, alpha, exp, log })))
    }

    fn default_modulus(p: u64, h: u32) -> Result<Vec<u32>> {
        if let Some(&(_, _, m)) = DEFAULT_MODULI.iter().find(|&&(tp, th, _)| tp == p && th == h) {
            return Ok(m.to_vec());
        }
        if h == 1 {
            // x - g for the least primitive root g mod p.
            for g in 2..p {
                let mut x = g;
                let mut ord = 1;
                while x != 1 {
                    x = x * g % p;
                    ord += 1;
                }
                if ord == p - 1 {
                    return Ok(vec![((p - g) % p) as u32, 1]);
                }
            }
            // p = 2: the loop above is empty, alpha = 1 generates the
            // trivial group.
            return Ok(vec![1, 1]);
        }
        Err(Error::NoDefaultModulus { p, h })
    }

    /// Characteristic `p`.
    pub fn p(&self) -> u64 {
        self.0.p
    }

    /// Extension degree `h`.
    pub fn h(&self) -> u32 {
        self.0.h
    }

    /// Field order `q = p^h`.
    pub fn q(&self) -> u64 {
        self.0.q
    }

    /// Modulus coefficients, constant term first, length `h + 1`.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// Fixed generator of the multiplicative group.
    pub fn alpha(&self) -> Elem {
        self.0.alpha
    }

    /// All element codes, `0..q`.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.0.q as Elem
    }

    fn check(&self, x: Elem) -> Result<()> {
        if (x as u64) < self.0.q {
            Ok(())
        } else {
            Err(Error::InvalidElement { value: x as u64, q: self.0.q })
        }
    }

    /// Base-`p` digits of an element code (polynomial coefficients).
    pub fn digits(&self, x: Elem) -> Vec<u32> {
        digits_of(x as u64, self.0.p, self.0.h)
    }

    /// `alpha^i`.
    pub fn alpha_pow(&self, i: u64) -> Elem {
        let ord = self.0.q - 1;
        if ord == 0 {
            return 1; // GF(2): alpha = 1
        }
        self.0.exp[(i % ord) as usize]
    }

    /// Discrete log base `alpha`; `None` for the zero element.
    pub fn dlog(&self, x: Elem) -> Option<u32> {
        if x == 0 {
            None
        } else {
            Some(self.0.log[x as usize])
        }
    }

    /// Field addition.
    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 {
            return a ^ b;
        }
        let mut out = 0u64;
        let (mut a, mut b) = (a as u64, b as u64);
        let mut scale = 1u64;
        for _ in 0..self.0.h {
            out += (a % p + b % p) % p * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        out as Elem
    }

    /// Additive inverse.
    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        let mut out = 0u64;
        let mut a = a as u64;
        let mut scale = 1u64;
        for _ in 0..self.0.h {
            out += (p - a % p) % p * scale;
            a /= p;
            scale *= p;
        }
        out as Elem
    }

    /// Field subtraction.
    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Field multiplication.
    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let l = &self.0.log;
        self.0.exp[(l[a as usize] + l[b as usize]) as usize]
    }

    /// Multiplicative inverse; zero is rejected.
    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let ord = (self.0.q - 1) as u32;
        if ord == 0 {
            return Ok(1);
        }
        Ok(self.0.exp[(ord - self.0.log[a as usize]) as usize])
    }

    /// Field division `a / b`.
    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` with `a^0 = 1` (including `0^0 = 1`).
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let ord = self.0.q - 1;
        if ord == 0 {
            return 1;
        }
        let l = self.0.log[a as usize] as u64;
        self.0.exp[((l % ord) * (e % ord) % ord) as usize]
    }

    /// Integer multiple `m * a` (adding `a` to itself `m` times).
    pub fn int_mul(&self, m: u64, a: Elem) -> Elem {
        let m = (m % self.0.p) as Elem;
        // m < p is an element of the prime subfield, with code m.
        self.mul(m, a)
    }

    /// Frobenius power `x -> x^(p^e)`; `e` is reduced mod `h`.
    pub fn frobenius(&self, x: Elem, e: u32) -> Elem {
        let e = e % self.0.h;
        if x == 0 {
            return 0;
        }
        if e == 0 {
            return x;
        }
        self.pow(x, self.0.p.pow(e))
    }

    /// `e`-Galois inner product `sum_i x_i * y_i^(p^e)`.
    pub fn galois_inner(&self, x: &[Elem], y: &[Elem], e: u32) -> Result<Elem> {
        if x.len() != y.len() {
            return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
        }
        let mut acc = 0;
        for (&xi, &yi) in x.iter().zip(y) {
            self.check(xi)?;
            self.check(yi)?;
            acc = self.add(acc, self.mul(xi, self.frobenius(yi, e)));
        }
        Ok(acc)
    }

    /// Euclidean inner product (`e = 0`).
    pub fn inner(&self, x: &[Elem], y: &[Elem]) -> Result<Elem> {
        self.galois_inner(x, y, 0)
    }

    /// Render an element as `0`, `1`, or `a^i`.
    pub fn format_element(&self, x: Elem) -> String {
        match self.dlog(x) {
            None => "0".to_string(),
            Some(0) => "1".to_string(),
            Some(i) => format!("a^{i}"),
        }
    }

    /// Parse an element given as an integer code or as `a^i` / `a`.
    pub fn parse_element(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        if s == "a" {
            return Ok(self.alpha());
        }
        if let Some(exp) = s.strip_prefix("a^") {
            let i: u64 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in element {s:?}")))?;
            return Ok(self.alpha_pow(i));
        }
        let v: u64 = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad element {s:?}")))?;
        if v >= self.0.q {
            return Err(Error::InvalidElement { value: v, q: self.0.q });
        }
        Ok(v as Elem)
    }
}

/// Parse `p^h` or plain `p` field notation.
pub fn parse_field_notation(s: &str) -> Result<(u64, u32)> {
    let s = s.trim();
    let (p, h) = match s.split_once('^') {
        Some((p, h)) => (
            p.parse().map_err(|_| Error::Parse(format!("bad characteristic in {s:?}")))?,
            h.parse().map_err(|_| Error::Parse(format!("bad degree in {s:?}")))?,
        ),
        None => (
            s.parse().map_err(|_| Error::Parse(format!("bad field notation {s:?}")))?,
            1,
        ),
    };
    Ok((p, h))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, h: u32) -> Field {
        Field::new(p, h, None).unwrap()
    }

    #[test]
    fn gf8_uses_classic_modulus_and_generator() {
        let f = gf(2, 3);
        assert_eq!(f.modulus(), &[1, 1, 0, 1]); // x^3 + x + 1
        assert_eq!(f.alpha(), 2);
        // a^3 = a + 1, integer code 3
        assert_eq!(f.pow(f.alpha(), 3), 3);
        // order of alpha is 7
        for i in 1..7 {
            assert_ne!(f.alpha_pow(i), 1, "alpha^{i} must not be 1");
        }
        assert_eq!(f.alpha_pow(7), 1);
        assert_eq!(f.mul(f.alpha(), f.alpha_pow(6)), 1);
    }

    #[test]
    fn prime_field_defaults() {
        let f = gf(3, 1);
        assert_eq!(f.alpha(), 2);
        assert_eq!(f.inv(2).unwrap(), 2);
        let f11 = gf(11, 1);
        assert_eq!(f11.q(), 11);
        // alpha must generate
        let mut seen = std::collections::HashSet::new();
        for i in 0..10 {
            seen.insert(f11.alpha_pow(i));
        }
        assert_eq!(seen.len(), 10);
    }

    #[test]
    fn rejects_reducible_modulus() {
        // x^3 + x^2 + x + 1 = (x + 1)(x^2 + 1) over GF(2)
        match Field::new(2, 3, Some(&[1, 1, 1, 1])) {
            Err(Error::ReducibleModulus { p: 2 }) => {}
            other => panic!("expected reducible error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_irreducible_but_imprimitive_modulus() {
        // x^2 + 1 over GF(3) is irreducible; its root has order 4, not 8.
        match Field::new(3, 2, Some(&[1, 0, 1])) {
            Err(Error::NotPrimitive { p: 3 }) => {}
            other => panic!("expected non-primitive error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(Field::new(6, 1, None), Err(Error::NonPrime(6))));
        assert!(matches!(Field::new(1, 1, None), Err(Error::NonPrime(1))));
        assert!(matches!(Field::new(2, 13, None), Err(Error::FieldTooLarge { .. })));
        assert!(Field::new(2, 12, None).is_ok());
        assert!(matches!(Field::new(11, 2, None), Err(Error::NoDefaultModulus { .. })));
        assert!(matches!(
            Field::new(2, 3, Some(&[1, 1, 1])),
            Err(Error::MalformedModulus(_))
        ));
    }

    #[test]
    fn whole_default_table_is_primitive() {
        for &(p, h, m) in DEFAULT_MODULI {
            let f = Field::new(p, h, Some(m))
                .unwrap_or_else(|e| panic!("table entry ({p},{h}) failed: {e}"));
            assert_eq!(f.q(), p.pow(h));
        }
    }

    #[test]
    fn field_axioms_exhaustive_small_orders() {
        for (p, h) in [
            (2, 1),
            (3, 1),
            (2, 2),
            (5, 1),
            (7, 1),
            (2, 3),
            (3, 2),
            (2, 4),
            (5, 2),
            (3, 3),
            (2, 5),
            (7, 2),
            (2, 6),
        ] {
            let f = gf(p, h);
            let q = f.q() as Elem;
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "{f}: a={a}");
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "{f}: distributivity at ({a},{b},{c})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_an_automorphism_of_expected_order() {
        for (p, h) in [(2, 3), (3, 2), (2, 4)] {
            let f = gf(p, h);
            assert_eq!(f.frobenius(f.alpha(), 1), f.pow(f.alpha(), p));
            for x in f.elements() {
                assert_eq!(f.frobenius(x, h), x, "sigma^h must be identity");
                for y in f.elements() {
                    assert_eq!(
                        f.frobenius(f.add(x, y), 1),
                        f.add(f.frobenius(x, 1), f.frobenius(y, 1))
                    );
                    assert_eq!(
                        f.frobenius(f.mul(x, y), 1),
                        f.mul(f.frobenius(x, 1), f.frobenius(y, 1))
                    );
                }
            }
        }
        let f9 = gf(3, 2);
        assert_eq!(f9.frobenius(f9.alpha(), 1), f9.pow(f9.alpha(), 3));
    }

    #[test]
    fn galois_inner_products() {
        let f8 = gf(2, 3);
        assert_eq!(f8.galois_inner(&[1, 1], &[1, 1], 0).unwrap(), 0);
        let f4 = gf(2, 2);
        let a = f4.alpha();
        assert_eq!(f4.galois_inner(&[a, 0], &[a, 1], 1).unwrap(), 1);
        assert_eq!(f8.galois_inner(&[3, 5, 7], &[0, 0, 0], 2).unwrap(), 0);
        assert!(f8.galois_inner(&[1], &[1, 0], 0).is_err());
    }

    #[test]
    fn galois_inner_is_left_linear() {
        let f = gf(2, 3);
        for e in 0..3 {
            for c in f.elements() {
                for x in f.elements() {
                    for y in f.elements() {
                        let lhs = f.galois_inner(&[f.mul(c, x)], &[y], e).unwrap();
                        let rhs = f.mul(c, f.galois_inner(&[x], &[y], e).unwrap());
                        assert_eq!(lhs, rhs);
                        // additivity in the left argument
                        let l2 = f.galois_inner(&[f.add(x, c)], &[y], e).unwrap();
                        let r2 = f.add(
                            f.galois_inner(&[x], &[y], e).unwrap(),
                            f.galois_inner(&[c], &[y], e).unwrap(),
                        );
                        assert_eq!(l2, r2);
                    }
                }
            }
        }
    }

    #[test]
    fn element_parsing_and_formatting() {
        let f = gf(2, 3);
        assert_eq!(f.parse_element("a^3").unwrap(), 3);
        assert_eq!(f.parse_element("5").unwrap(), 5);
        assert_eq!(f.parse_element("a").unwrap(), 2);
        assert_eq!(f.parse_element("0").unwrap(), 0);
        assert!(f.parse_element("9").is_err());
        assert_eq!(f.format_element(0), "0");
        assert_eq!(f.format_element(1), "1");
        assert_eq!(f.format_element(3), "a^3");
        assert_eq!(parse_field_notation("2^4").unwrap(), (2, 4));
        assert_eq!(parse_field_notation("17").unwrap(), (17, 1));
        assert!(parse_field_notation("x^2").is_err());
    }
}
