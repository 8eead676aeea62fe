//! Sparse multivariate polynomials over the rationals.
//!
//! A [`MultiPoly`] carries an ordered list of variable names (its
//! *universe*) and a map from exponent vectors to nonzero rational
//! coefficients.  The term map is the canonical form: two polynomials over
//! the same universe are equal iff their maps are equal.  Operations between
//! polynomials over different universes first lift both to the union
//! universe (left operand's order, then unseen variables of the right), so
//! mixed-universe arithmetic is still exact and deterministic.
//!
//! The monomial order used for leading terms and exact division is graded
//! lexicographic with respect to the declared variable order.

use super::{Domain, Rat};
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u16>, Rat>,
}

/// Graded-lexicographic comparison of exponent vectors of equal length.
fn cmp_grlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl MultiPoly {
    /// The zero polynomial over the given universe.
    pub fn zero_over(vars: &[&str]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    /// A constant polynomial over the given universe.
    pub fn constant_over(vars: &[&str], c: Rat) -> Self {
        let mut p = Self::zero_over(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    /// The polynomial `name` over a universe that must contain it.
    pub fn var(vars: &[&str], name: &str) -> Self {
        let mut p = Self::zero_over(vars);
        let i = p
            .vars
            .iter()
            .position(|v| v == name)
            .unwrap_or_else(|| panic!("variable {name:?} not in universe {vars:?}"));
        let mut e = vec![0u16; p.vars.len()];
        e[i] = 1;
        p.terms.insert(e, Rat::one());
        p
    }

    /// Build from raw terms (exponent vector, coefficient); zero
    /// coefficients are dropped, duplicate monomials are summed.
    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Vec<u16>, Rat)>) -> Self {
        let mut p = Self::zero_over(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length mismatch");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u16>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// The declared variable universe.
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Iterate the canonical term map.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Rat)> {
        self.terms.iter()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` iff the polynomial is the constant `c` (including 0).
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                if e.iter().all(|&x| x == 0) {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u16> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Indices of variables that actually occur.
    pub fn vars_present(&self) -> Vec<usize> {
        let n = self.vars.len();
        let mut present = vec![false; n];
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    present[i] = true;
                }
            }
        }
        (0..n).filter(|&i| present[i]).collect()
    }

    /// Index of a variable name in the universe.
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Lift to a universe that contains every variable of `self`
    /// (by name); panics if one is missing.
    pub fn lift_to(&self, universe: &[String]) -> Self {
        if self.vars == universe {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                universe
                    .iter()
                    .position(|u| u == v)
                    .unwrap_or_else(|| panic!("variable {v:?} missing from target universe"))
            })
            .collect();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0u16; universe.len()];
            for (i, &x) in e.iter().enumerate() {
                ne[map[i]] = x;
            }
            terms.insert(ne, c.clone());
        }
        MultiPoly {
            vars: universe.to_vec(),
            terms,
        }
    }

    /// Union universe: `self`'s variables in order, then unseen ones of
    /// `other` in order.
    fn union_universe(&self, other: &Self) -> Vec<String> {
        let mut u = self.vars.clone();
        for v in &other.vars {
            if !u.contains(v) {
                u.push(v.clone());
            }
        }
        u
    }

    fn binop(&self, other: &Self, f: impl Fn(&Self, &Self) -> Self) -> Self {
        if self.vars == other.vars {
            f(self, other)
        } else {
            let u = self.union_universe(other);
            f(&self.lift_to(&u), &other.lift_to(&u))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.binop(other, |a, b| {
            let mut r = a.clone();
            for (e, c) in &b.terms {
                r.add_term(e.clone(), c.clone());
            }
            r
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.binop(other, |a, b| {
            let mut r = Self {
                vars: a.vars.clone(),
                terms: BTreeMap::new(),
            };
            for (ea, ca) in &a.terms {
                for (eb, cb) in &b.terms {
                    let e: Vec<u16> = ea
                        .iter()
                        .zip(eb)
                        .map(|(&x, &y)| {
                            x.checked_add(y).expect("monomial exponent overflow")
                        })
                        .collect();
                    r.add_term(e, ca * cb);
                }
            }
            r
        })
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return MultiPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant_over(
            &self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
            Rat::one(),
        );
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative with respect to variable index `v`.
    pub fn partial(&self, v: usize) -> Self {
        let mut r = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            if e[v] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[v] -= 1;
            r.add_term(ne, c * Rat::from_integer(e[v].into()));
        }
        r
    }

    /// Rewrite over a new universe, which must contain every variable
    /// actually present; unused universe slots may be dropped and new ones
    /// added (contrast [`MultiPoly::lift_to`], which only grows).
    pub fn with_universe(&self, names: &[&str]) -> Self {
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| names.iter().position(|n| n == v))
            .collect();
        let terms = self.terms.iter().map(|(e, c)| {
            let mut ne = vec![0u16; names.len()];
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    let j = map[i].unwrap_or_else(|| {
                        panic!("present variable {:?} dropped from universe", self.vars[i])
                    });
                    ne[j] = exp;
                }
            }
            (ne, c.clone())
        });
        MultiPoly::from_terms(names, terms)
    }

    /// Substitute polynomials for variables (by name); unbound variables
    /// pass through.  The result lives in the union of `self`'s universe
    /// and the bindings' universes.
    pub fn substitute(&self, bindings: &BTreeMap<String, MultiPoly>) -> Self {
        // Target universe: self's variables, then any new variables
        // introduced by binding values, in binding order.
        let mut universe = self.vars.clone();
        for b in bindings.values() {
            for v in &b.vars {
                if !universe.contains(v) {
                    universe.push(v.clone());
                }
            }
        }
        let uref: Vec<&str> = universe.iter().map(|s| s.as_str()).collect();
        // Per-variable replacement polynomials in the target universe.
        let repl: Vec<MultiPoly> = self
            .vars
            .iter()
            .map(|v| match bindings.get(v) {
                Some(b) => b.lift_to(&universe),
                None => MultiPoly::var(&uref, v),
            })
            .collect();
        let mut result = MultiPoly::zero_over(&uref);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant_over(&uref, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = term.mul(&repl[i].pow(exp as u32));
                }
            }
            result = result.add(&term);
        }
        result
    }

    /// Substitute a single variable.
    pub fn substitute_one(&self, name: &str, value: &MultiPoly) -> Self {
        let mut b = BTreeMap::new();
        b.insert(name.to_string(), value.clone());
        self.substitute(&b)
    }

    /// Evaluate at a full rational point (one value per universe variable).
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.vars.len(), "evaluation arity mismatch");
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Coefficients with respect to one variable, ascending by exponent;
    /// entry `k` is the coefficient of `var^k` as a polynomial in the same
    /// universe (with zero exponent in `var`).  Empty for the zero poly.
    pub fn coeffs_wrt(&self, var: usize) -> Vec<MultiPoly> {
        let Some(d) = self.degree_in(var) else {
            return Vec::new();
        };
        let mut out =
            vec![
                MultiPoly {
                    vars: self.vars.clone(),
                    terms: BTreeMap::new()
                };
                d as usize + 1
            ];
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut ne = e.clone();
            ne[var] = 0;
            out[k].add_term(ne, c.clone());
        }
        out
    }

    /// Leading term in graded-lexicographic order.
    pub fn leading_grlex(&self) -> Option<(&Vec<u16>, &Rat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| cmp_grlex(a, b))
    }

    /// Componentwise minimum of all exponent vectors: the largest monomial
    /// dividing every term.  Zero vector for the zero polynomial.
    pub fn monomial_content(&self) -> Vec<u16> {
        let n = self.vars.len();
        let mut m = vec![u16::MAX; n];
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                m[i] = m[i].min(x);
            }
        }
        if self.terms.is_empty() {
            vec![0; n]
        } else {
            m
        }
    }

    /// Divide by a monomial that must divide every term.
    pub fn divide_by_monomial(&self, m: &[u16]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let ne: Vec<u16> = e
                    .iter()
                    .zip(m)
                    .map(|(&x, &y)| {
                        assert!(x >= y, "monomial does not divide all terms");
                        x - y
                    })
                    .collect();
                (ne, c.clone())
            })
            .collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Exact division: `Some(q)` with `q * d == self` if `d` divides
    /// `self`, else `None`.  Single-divisor reduction in graded-lex order;
    /// when the division is exact the leading term of the remainder is
    /// always divisible by the leading term of `d`, so the first failure
    /// certifies inexactness.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.vars != d.vars {
            let u = self.union_universe(d);
            return self.lift_to(&u).exact_div(&d.lift_to(&u));
        }
        let (de, dc) = d.leading_grlex().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut r = self.clone();
        let mut q = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        while !r.is_zero() {
            let (re, rc) = {
                let (e, c) = r.leading_grlex().unwrap();
                (e.clone(), c.clone())
            };
            if !re.iter().zip(&de).all(|(&a, &b)| a >= b) {
                return None;
            }
            let me: Vec<u16> = re.iter().zip(&de).map(|(&a, &b)| a - b).collect();
            let mc = &rc / &dc;
            let mono = MultiPoly {
                vars: self.vars.clone(),
                terms: [(me.clone(), mc.clone())].into_iter().collect(),
            };
            q.add_term(me, mc);
            r = r.sub(&mono.mul(d));
        }
        Some(q)
    }
}

impl PartialEq for MultiPoly {
    /// Mathematical equality: compares canonical term maps after lifting
    /// both sides to the union universe.
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let u = self.union_universe(other);
        self.lift_to(&u).terms == other.lift_to(&u).terms
    }
}

impl Domain for MultiPoly {
    fn ring_zero() -> Self {
        MultiPoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }
    fn ring_one() -> Self {
        MultiPoly {
            vars: Vec::new(),
            terms: [(Vec::new(), Rat::one())].into_iter().collect(),
        }
    }
    fn is_ring_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn ring_add(&self, other: &Self) -> Self {
        MultiPoly::add(self, other)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        MultiPoly::sub(self, other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        MultiPoly::mul(self, other)
    }
    fn ring_neg(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        MultiPoly::exact_div(self, d)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Vec<u16>, &Rat)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| cmp_grlex(b, a));
        let mut first = true;
        for (e, c) in terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], x)
                    }
                })
                .collect();
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

use num_traits::Signed;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn xy() -> (MultiPoly, MultiPoly) {
        let u = ["x", "y"];
        (MultiPoly::var(&u, "x"), MultiPoly::var(&u, "y"))
    }

    #[test]
    fn difference_of_squares() {
        let (x, y) = xy();
        let lhs = x.add(&y).mul(&x.sub(&y));
        let rhs = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn add_zero_is_identity() {
        let (x, y) = xy();
        let p = x.mul(&y).add(&x).sub(&MultiPoly::constant_over(&["x", "y"], rat(7)));
        assert_eq!(p.add(&MultiPoly::zero_over(&["x", "y"])), p);
    }

    #[test]
    fn substitution_composes() {
        let u = ["x", "t"];
        let x = MultiPoly::var(&u, "x");
        let t = MultiPoly::var(&u, "t");
        // x^2 + t^2 with x <- t*x gives t^2*x^2 + t^2.
        let p = x.pow(2).add(&t.pow(2));
        let q = p.substitute_one("x", &t.mul(&x));
        assert_eq!(q, t.pow(2).mul(&x.pow(2)).add(&t.pow(2)));
    }

    #[test]
    fn partial_derivative() {
        let (x, y) = xy();
        // d(x^2 y)/dx = 2xy
        let p = x.pow(2).mul(&y);
        assert_eq!(p.partial(0), x.mul(&y).scale(&rat(2)));
        // d(c)/dx = 0
        assert!(MultiPoly::constant_over(&["x", "y"], rat(5)).partial(0).is_zero());
    }

    #[test]
    fn mixed_universe_arithmetic() {
        let x = MultiPoly::var(&["x"], "x");
        let y = MultiPoly::var(&["y"], "y");
        let s = x.add(&y);
        assert_eq!(s.vars(), &["x".to_string(), "y".to_string()]);
        assert_eq!(s.total_degree(), Some(1));
        assert_eq!(s.term_count(), 2);
    }

    #[test]
    fn with_universe_drops_unused_and_reorders() {
        let u = ["x", "y", "z"];
        let p = MultiPoly::var(&u, "x").mul(&MultiPoly::var(&u, "z"));
        let q = p.with_universe(&["z", "x"]);
        assert_eq!(q.vars(), &["z".to_string(), "x".to_string()]);
        assert_eq!(q, MultiPoly::var(&["z", "x"], "x").mul(&MultiPoly::var(&["z", "x"], "z")));
        // Round trip through a superset is the identity up to universe.
        assert_eq!(q.with_universe(&["x", "y", "z"]), p);
    }

    #[test]
    #[should_panic(expected = "dropped from universe")]
    fn with_universe_rejects_dropping_present_variables() {
        let p = MultiPoly::var(&["x", "y"], "y");
        let _ = p.with_universe(&["x"]);
    }

    #[test]
    fn exact_division_round_trip() {
        let (x, y) = xy();
        let a = x.pow(2).add(&y.pow(2)).add(&x.mul(&y)).sub(&MultiPoly::constant_over(&["x", "y"], rat(3)));
        let b = x.pow(3).sub(&y).add(&MultiPoly::constant_over(&["x", "y"], rat(11)));
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        // Inexact division is detected.
        assert!(prod.add(&MultiPoly::constant_over(&["x", "y"], rat(1))).exact_div(&a).is_none());
    }

    #[test]
    fn monomial_content_extraction() {
        let (x, y) = xy();
        let p = x.pow(3).mul(&y).add(&x.pow(2).mul(&y.pow(2)));
        assert_eq!(p.monomial_content(), vec![2, 1]);
        let q = p.divide_by_monomial(&[2, 1]);
        assert_eq!(q, x.add(&y));
    }

    #[test]
    fn evaluation() {
        let (x, y) = xy();
        let p = x.pow(2).mul(&y).sub(&y.pow(3));
        assert_eq!(p.eval(&[rat(2), rat(3)]), rat(12 - 27));
    }
}
