//! Complete enumeration of the rational roots of a univariate polynomial.
//!
//! The classical candidate test (`p` divides the constant term, `q` divides
//! the leading one) is exponential in the number of divisors.  Instead we
//! use the standard modular pipeline, which is fully deterministic from the
//! caller's point of view:
//!
//! 1. replace the input by its primitive squarefree integer model and strip
//!    any root at zero;
//! 2. pick a ~30-bit prime `p` that keeps the polynomial squarefree and of
//!    full degree modulo `p`;
//! 3. find every root modulo `p` (distinct-degree reduction via
//!    `gcd(x^p - x, P)` followed by equal-degree splitting);
//! 4. Hensel-lift each simple root, doubling the modulus until it exceeds
//!    twice the product of the numerator and denominator bounds;
//! 5. recover a fraction by lattice (continued-fraction) rational
//!    reconstruction and verify it exactly against the integer polynomial.
//!
//! Every rational root survives this pipeline and every reported root is
//! verified, so the returned list is exactly the set of rational roots.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Int, Rat, UniPoly};

/// All rational roots of `p`, each listed once, in increasing order.
///
/// Multiplicities are not reported: the computation runs on the squarefree
/// part.  Panics on the zero polynomial, whose root set is not finite.
pub fn rational_roots(p: &UniPoly) -> Vec<Rat> {
    assert!(!p.is_zero(), "the zero polynomial has every number as a root");
    if p.degree() == Some(0) {
        return Vec::new();
    }
    let (mut coeffs, _) = p.squarefree_part().primitive_integer();
    let mut roots: BTreeSet<Rat> = BTreeSet::new();

    // Factor out x^k exactly.
    let ord = coeffs
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    if ord > 0 {
        roots.insert(Rat::zero());
        coeffs.drain(..ord);
    }
    let n = coeffs.len() - 1;
    if n == 0 {
        return roots.into_iter().collect();
    }
    if n == 1 {
        roots.insert(Rat::new(-coeffs[0].clone(), coeffs[1].clone()));
        return roots.into_iter().collect();
    }

    // Any root n/d in lowest terms has n | a_0 and d | a_n.
    let num_bound = coeffs[0].abs();
    let den_bound = coeffs[n].abs();
    let target: Int = Int::from(2) * &num_bound * &den_bound + 1;

    let p0 = choose_prime(&coeffs);
    let residues = roots_mod_p(&reduce_mod(&coeffs, p0), p0);
    for r in residues {
        let lifted = hensel_lift(&coeffs, r, p0, &target);
        if let Some((num, den)) =
            rational_reconstruct(&lifted.0, &lifted.1, &num_bound, &den_bound)
        {
            let cand = Rat::new(num, den);
            if eval_int_poly(&coeffs, &cand).is_zero() {
                roots.insert(cand);
            }
        }
    }
    roots.into_iter().collect()
}

/// Evaluates an integer-coefficient polynomial at a rational point.
fn eval_int_poly(coeffs: &[Int], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + Rat::from(c.clone());
    }
    acc
}

/// First prime above 2^30 that preserves the degree and squarefreeness of
/// the integer polynomial `coeffs` modulo it.
fn choose_prime(coeffs: &[Int]) -> u64 {
    let mut cand: u64 = (1 << 30) + 1;
    loop {
        if is_prime_u64(cand) {
            let red = reduce_mod(coeffs, cand);
            if red.len() == coeffs.len() && squarefree_mod_p(&red, cand) {
                return cand;
            }
        }
        cand += 2;
    }
}

/// Coefficients reduced into `[0, p)`, trimmed of leading zeros.
fn reduce_mod(coeffs: &[Int], p: u64) -> Vec<u64> {
    let pm = Int::from(p);
    let mut out: Vec<u64> = coeffs
        .iter()
        .map(|c| {
            let r = c.mod_floor(&pm);
            u64::try_from(r).expect("residue fits u64")
        })
        .collect();
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

fn squarefree_mod_p(f: &[u64], p: u64) -> bool {
    let df = pz_derivative(f, p);
    if pz_deg(&df).is_none() {
        return false;
    }
    pz_deg(&pz_gcd(f.to_vec(), df, p)) == Some(0)
}

// ---------------------------------------------------------------------------
// u64 arithmetic modulo a prime below 2^31 (all products fit in u64).
// ---------------------------------------------------------------------------

fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    debug_assert!(p < (1 << 31));
    (a * b) % p
}

fn powm(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, b, p);
        }
        b = mulm(b, b, p);
        e >>= 1;
    }
    acc
}

fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

/// Deterministic Miller–Rabin, exact for every 64-bit input with this base
/// set.  Squaring uses 128-bit intermediates, so no overflow for any input.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulm128 = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = {
            let mut acc = 1u64;
            let mut base = a % n;
            let mut e = d;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulm128(acc, base);
                }
                base = mulm128(base, base);
                e >>= 1;
            }
            acc
        };
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulm128(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// ---------------------------------------------------------------------------
// Dense polynomials over F_p: Vec<u64>, ascending, trimmed.
// ---------------------------------------------------------------------------

fn pz_trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    if v.is_empty() {
        v.push(0);
    }
}

/// Degree, with `None` for the zero polynomial.
fn pz_deg(v: &[u64]) -> Option<usize> {
    v.iter().rposition(|&c| c != 0)
}

fn pz_derivative(f: &[u64], p: u64) -> Vec<u64> {
    if f.len() <= 1 {
        return vec![0];
    }
    let mut out: Vec<u64> = (1..f.len())
        .map(|k| mulm(f[k], (k as u64) % p, p))
        .collect();
    pz_trim(&mut out);
    out
}

fn pz_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = addm(out[i + j], mulm(ai, bj, p), p);
        }
    }
    pz_trim(&mut out);
    out
}

/// Remainder of `a` modulo `b` (`b` nonzero).
fn pz_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = pz_deg(b).expect("division by zero polynomial");
    let lead_inv = invm(b[db], p);
    let mut r = a.to_vec();
    while let Some(dr) = pz_deg(&r) {
        if dr < db {
            break;
        }
        let f = mulm(r[dr], lead_inv, p);
        for k in 0..=db {
            r[dr - db + k] = subm(r[dr - db + k], mulm(f, b[k], p), p);
        }
        pz_trim(&mut r);
        if pz_deg(&r).is_none() {
            break;
        }
    }
    pz_trim(&mut r);
    r
}

/// Monic greatest common divisor.
fn pz_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while pz_deg(&b).is_some() {
        let r = pz_rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(da) = pz_deg(&a) {
        let inv = invm(a[da], p);
        for c in a.iter_mut() {
            *c = mulm(*c, inv, p);
        }
    }
    a
}

/// `base^e` modulo the polynomial `m`.
fn pz_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = pz_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = pz_rem(&pz_mul(&acc, &b, p), m, p);
        }
        b = pz_rem(&pz_mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

/// Every root of `f` in `F_p`, via `gcd(x^p - x, f)` and equal-degree
/// splitting.  The splitting consumes a fixed internal pseudo-random
/// sequence, so identical inputs always take the same path.
fn roots_mod_p(f: &[u64], p: u64) -> Vec<u64> {
    // g = gcd(x^p - x, f) is the product of the distinct linear factors.
    let xp = pz_powmod(&[0, 1], p, f, p);
    let mut xp_minus_x = xp;
    if xp_minus_x.len() < 2 {
        xp_minus_x.resize(2, 0);
    }
    xp_minus_x[1] = subm(xp_minus_x[1], 1, p);
    pz_trim(&mut xp_minus_x);
    let g = pz_gcd(f.to_vec(), xp_minus_x, p);

    let mut roots = Vec::new();
    let mut stack = vec![g];
    let mut state: u64 = 0x6b8f_0d4c_92a1_7e35 ^ p;
    while let Some(h) = stack.pop() {
        match pz_deg(&h) {
            None | Some(0) => {}
            Some(1) => {
                // h = c1 x + c0, monic after gcd, so the root is -c0.
                let root = subm(0, mulm(h[0], invm(h[1], p), p), p);
                roots.push(root);
            }
            Some(_) => {
                // Split with gcd((x + a)^((p-1)/2) - 1, h) for varying a.
                loop {
                    let a = splitmix_next(&mut state) % p;
                    let mut w = pz_powmod(&[a, 1], (p - 1) / 2, &h, p);
                    w[0] = subm(w[0], 1, p);
                    pz_trim(&mut w);
                    let d = pz_gcd(h.clone(), w, p);
                    let dd = pz_deg(&d);
                    if let Some(k) = dd {
                        if k > 0 && k < pz_deg(&h).unwrap() {
                            let quot = pz_divide_exact(&h, &d, p);
                            stack.push(d);
                            stack.push(quot);
                            break;
                        }
                    }
                }
            }
        }
    }
    roots.sort_unstable();
    roots
}

/// Quotient of an exact division (remainder known to vanish).
fn pz_divide_exact(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = pz_deg(b).expect("division by zero polynomial");
    let lead_inv = invm(b[db], p);
    let mut r = a.to_vec();
    let da = pz_deg(&r).expect("zero dividend");
    let mut q = vec![0u64; da - db + 1];
    let mut cur = da;
    loop {
        let dr = match pz_deg(&r) {
            Some(d) if d >= db => d,
            _ => break,
        };
        let f = mulm(r[dr], lead_inv, p);
        q[dr - db] = f;
        for k in 0..=db {
            r[dr - db + k] = subm(r[dr - db + k], mulm(f, b[k], p), p);
        }
        if cur == 0 {
            break;
        }
        cur -= 1;
    }
    pz_trim(&mut q);
    q
}

fn splitmix_next(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

// ---------------------------------------------------------------------------
// Hensel lifting and rational reconstruction over BigInt.
// ---------------------------------------------------------------------------

/// Newton-lifts a simple root of `coeffs` modulo `p` until the modulus
/// reaches at least `target`, returning `(root, modulus)`.
fn hensel_lift(coeffs: &[Int], root: u64, p: u64, target: &Int) -> (Int, Int) {
    let mut m = Int::from(p);
    let mut r = Int::from(root);
    let deriv: Vec<Int> = (1..coeffs.len())
        .map(|k| &coeffs[k] * Int::from(k as u64))
        .collect();
    while m < *target {
        let m2 = &m * &m;
        let fr = eval_mod(coeffs, &r, &m2);
        let dr = eval_mod(&deriv, &r, &m2);
        let dinv = modinv(&dr, &m2).expect("simple root stays invertible");
        r = (&r - fr * dinv).mod_floor(&m2);
        m = m2;
    }
    (r, m)
}

/// Horner evaluation with reduction modulo `m` at each step.
fn eval_mod(coeffs: &[Int], x: &Int, m: &Int) -> Int {
    let mut acc = Int::zero();
    for c in coeffs.iter().rev() {
        acc = (acc * x + c).mod_floor(m);
    }
    acc
}

/// Inverse of `a` modulo `m`, when `gcd(a, m) = 1`.
fn modinv(a: &Int, m: &Int) -> Option<Int> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Recovers `n/d` with `|n| ≤ num_bound`, `0 < d ≤ den_bound`, and
/// `n ≡ c·d (mod m)`, by the extended Euclidean algorithm on `(m, c)`.
/// Returns `None` when no candidate lies inside the bounds; callers verify
/// any candidate exactly, so a spurious one is harmless.
fn rational_reconstruct(
    c: &Int,
    m: &Int,
    num_bound: &Int,
    den_bound: &Int,
) -> Option<(Int, Int)> {
    let mut r0 = m.clone();
    let mut r1 = c.mod_floor(m);
    let mut t0 = Int::zero();
    let mut t1 = Int::one();
    while r1.abs() > *num_bound {
        if r1.is_zero() {
            return None;
        }
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if t1.is_zero() || t1.abs() > *den_bound {
        return None;
    }
    if t1.is_negative() {
        Some((-r1, -t1))
    } else {
        Some((r1, t1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_frac};

    fn poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn integer_and_fractional_roots() {
        // (2x - 3)(3x + 5)(x^2 + 1) = 6x^4 + x^3 - 9x^2 + x - 15.
        let p = poly(&[-15, 1, -9, 1, 6]);
        assert_eq!(rational_roots(&p), vec![rat_frac(-5, 3), rat_frac(3, 2)]);
    }

    #[test]
    fn repeated_roots_are_reported_once() {
        // (x - 1)^2 (x + 2).
        let p = poly(&[2, -3, 0, 1]);
        assert_eq!(rational_roots(&p), vec![rat(-2), rat(1)]);
    }

    #[test]
    fn zero_roots_and_irrational_factors() {
        // x^3 (x^2 - 2): only the origin is rational.
        let p = poly(&[0, 0, 0, -2, 0, 1]);
        assert_eq!(rational_roots(&p), vec![rat(0)]);
        assert!(rational_roots(&poly(&[1, 0, 1, 0, 1])).is_empty());
    }

    #[test]
    fn rational_coefficients_are_cleared_first() {
        // x^2 - 1/4.
        let p = UniPoly::from_coeffs(vec![rat_frac(-1, 4), rat(0), rat(1)]);
        assert_eq!(rational_roots(&p), vec![rat_frac(-1, 2), rat_frac(1, 2)]);
    }

    #[test]
    fn large_roots_force_extra_lifting() {
        // (x - 10^19)(x + 1): the bound pushes the modulus through several
        // doublings before reconstruction can fire.
        let big: Int = Int::from(10u64).pow(19);
        let p = UniPoly::from_coeffs(vec![
            Rat::from(-big.clone()),
            Rat::from(Int::one() - &big),
            Rat::from(Int::one()),
        ]);
        assert_eq!(
            rational_roots(&p),
            vec![rat(-1), Rat::from(big)]
        );
    }

    #[test]
    fn dense_root_packs() {
        // (x-1)(x-2)...(x-7).
        let mut p = UniPoly::constant(rat(1));
        for k in 1..=7 {
            p = p.mul(&UniPoly::from_coeffs(vec![rat(-k), rat(1)]));
        }
        assert_eq!(
            rational_roots(&p),
            (1..=7).map(rat).collect::<Vec<_>>()
        );
    }

    #[test]
    fn linear_fast_path() {
        assert_eq!(rational_roots(&poly(&[7, -2])), vec![rat_frac(7, 2)]);
        assert!(rational_roots(&poly(&[5])).is_empty());
    }

    #[test]
    fn primality_test_agrees_with_small_sieve() {
        let primes: Vec<u64> = (2..100).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            primes,
            vec![
                2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
                71, 73, 79, 83, 89, 97
            ]
        );
        assert!(is_prime_u64((1 << 31) - 1)); // Mersenne
        assert!(!is_prime_u64(1_073_741_825)); // 2^30 + 1 = 5^2 * 13 * ...
    }

    #[test]
    fn reconstruction_recovers_known_fraction() {
        // 22/7 modulo a large prime-ish modulus.
        let m = Int::from(1_000_003u64) * Int::from(1_000_033u64);
        let c = (Int::from(22) * modinv(&Int::from(7), &m).unwrap()).mod_floor(&m);
        let (n, d) =
            rational_reconstruct(&c, &m, &Int::from(100), &Int::from(100)).unwrap();
        assert_eq!((n, d), (Int::from(22), Int::from(7)));
    }
}
