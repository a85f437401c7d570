use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::context::Context;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Exponent vector; its length always equals the number of context
/// variables. The intrinsic `Ord` is graded reverse lexicographic with
/// respect to the context's variable order, which fixes the canonical
/// storage and printing order of terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub(crate) Vec<u32>);

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub(crate) fn one(num_vars: usize) -> Monomial {
        Monomial(vec![0; num_vars])
    }

    pub(crate) fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub(crate) fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub(crate) fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `other / self`, defined only when `self` divides `other`.
    pub(crate) fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(
                other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect(),
            ))
        } else {
            None
        }
    }

    pub(crate) fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

pub(crate) fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let da = a.total_degree();
    let db = b.total_degree();
    if da != db {
        return da.cmp(&db);
    }
    // equal degree: the one whose rightmost differing exponent is smaller
    // is the larger monomial
    for (ea, eb) in a.0.iter().zip(&b.0).rev() {
        match ea.cmp(eb) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex_cmp(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed variable context.
///
/// Invariants: no stored coefficient is zero, no duplicate exponent
/// vectors, every exponent vector has the context's length. The zero
/// polynomial is the empty term map. All arithmetic is exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ctx: Context,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ctx: &Context) -> Polynomial {
        Polynomial {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &Context, value: Rational) -> Polynomial {
        let mut p = Polynomial::zero(ctx);
        if !value.is_zero() {
            p.terms.insert(Monomial::one(ctx.num_vars()), value);
        }
        p
    }

    pub fn one(ctx: &Context) -> Polynomial {
        Polynomial::constant(ctx, Rational::one())
    }

    pub fn variable(ctx: &Context, name: &str) -> Result<Polynomial> {
        let idx = ctx
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0u32; ctx.num_vars()];
        exps[idx] = 1;
        let mut p = Polynomial::zero(ctx);
        p.terms.insert(Monomial(exps), Rational::one());
        Ok(p)
    }

    /// Build from raw (exponents, coefficient) pairs. Coefficients of equal
    /// monomials are accumulated; zero results are dropped.
    pub fn from_terms<I>(ctx: &Context, terms: I) -> Result<Polynomial>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (exps, coeff) in terms {
            if exps.len() != ctx.num_vars() {
                return Err(Error::Shape(format!(
                    "exponent vector length {} does not match context {}",
                    exps.len(),
                    ctx
                )));
            }
            Self::add_term(&mut map, Monomial(exps), coeff);
        }
        Ok(Polynomial {
            ctx: ctx.clone(),
            terms: map,
        })
    }

    pub(crate) fn from_term_map(ctx: Context, terms: BTreeMap<Monomial, Rational>) -> Polynomial {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        debug_assert!(terms.keys().all(|m| m.0.len() == ctx.num_vars()));
        Polynomial { ctx, terms }
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// The value of a constant polynomial; `None` when nonconstant. The
    /// zero polynomial yields zero.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Degree in one variable (by index); `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    /// Terms in ascending canonical (grevlex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mon: &Monomial) -> Rational {
        self.terms.get(mon).cloned().unwrap_or_else(Rational::zero)
    }

    fn assert_same_context(&self, other: &Polynomial) {
        assert_eq!(
            self.ctx, other.ctx,
            "polynomial contexts differ; unify with embed_into or in_common_context first"
        );
    }

    fn add_term(map: &mut BTreeMap<Monomial, Rational>, mon: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match map.entry(mon) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ctx);
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    /// Formal partial derivative with respect to a context variable.
    pub fn partial_derivative(&self, var: &str) -> Result<Polynomial> {
        let idx = self
            .ctx
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let mut map = BTreeMap::new();
        for (mon, coeff) in &self.terms {
            let e = mon.0[idx];
            if e == 0 {
                continue;
            }
            let mut exps = mon.0.clone();
            exps[idx] = e - 1;
            Self::add_term(&mut map, Monomial(exps), coeff * Rational::from_integer(e.into()));
        }
        Ok(Polynomial::from_term_map(self.ctx.clone(), map))
    }

    /// Exact evaluation at a rational point. The point must assign every
    /// variable of the context; extra assignments are ignored.
    pub fn evaluate(&self, point: &BTreeMap<String, Rational>) -> Result<Rational> {
        let mut values = Vec::with_capacity(self.ctx.num_vars());
        for name in self.ctx.names() {
            let v = point
                .get(name)
                .ok_or_else(|| Error::MissingAssignment(name.clone()))?;
            values.push(v.clone());
        }
        Ok(self.evaluate_at(&values))
    }

    /// Evaluation at values listed in context order (length checked).
    pub fn evaluate_at(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.ctx.num_vars());
        let mut acc = Rational::zero();
        for (mon, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (v, &e) in values.iter().zip(&mon.0) {
                if e > 0 {
                    term *= num_traits::pow::Pow::pow(v.clone(), e as u64);
                }
            }
            acc += term;
        }
        acc
    }

    /// Full polynomial substitution: every context variable is replaced by
    /// its image, all images sharing one context.
    pub fn substitute(&self, images: &BTreeMap<String, Polynomial>) -> Result<Polynomial> {
        let target = match images.values().next() {
            Some(p) => p.context().clone(),
            None => self.ctx.clone(),
        };
        let mut per_var = Vec::with_capacity(self.ctx.num_vars());
        for name in self.ctx.names() {
            let img = images
                .get(name)
                .ok_or_else(|| Error::MissingAssignment(name.clone()))?;
            if img.context() != &target {
                return Err(Error::ContextMismatch(
                    "substitution images use different contexts".into(),
                ));
            }
            per_var.push(img.clone());
        }
        let mut acc = Polynomial::zero(&target);
        for (mon, coeff) in &self.terms {
            let mut term = Polynomial::constant(&target, coeff.clone());
            for (img, &e) in per_var.iter().zip(&mon.0) {
                if e > 0 {
                    term = &term * &img.pow(e);
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Reinterpret in a larger (or reordered) context containing all of
    /// this polynomial's variables by name.
    pub fn embed_into(&self, target: &Context) -> Result<Polynomial> {
        if target == &self.ctx {
            return Ok(self.clone());
        }
        let mut index_map = Vec::with_capacity(self.ctx.num_vars());
        for name in self.ctx.names() {
            let idx = target.index_of(name).ok_or_else(|| {
                Error::ContextMismatch(format!(
                    "target context {} lacks variable `{}`",
                    target, name
                ))
            })?;
            index_map.push(idx);
        }
        let mut map = BTreeMap::new();
        for (mon, coeff) in &self.terms {
            let mut exps = vec![0u32; target.num_vars()];
            for (&e, &idx) in mon.0.iter().zip(&index_map) {
                exps[idx] = e;
            }
            map.insert(Monomial(exps), coeff.clone());
        }
        Ok(Polynomial::from_term_map(target.clone(), map))
    }

    /// Bring two polynomials into one context, merging by variable name.
    /// Fails when the shared variables are ordered inconsistently.
    pub fn in_common_context(p: &Polynomial, q: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if p.ctx == q.ctx {
            return Ok((p.clone(), q.clone()));
        }
        let merged = p.ctx.merge(&q.ctx)?;
        Ok((p.embed_into(&merged)?, q.embed_into(&merged)?))
    }

    /// Exact division: `Some(q)` with `self = q * divisor` when the
    /// division leaves no remainder, `None` otherwise.
    pub(crate) fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        self.assert_same_context(divisor);
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let (dm, dc) = divisor.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut quot: BTreeMap<Monomial, Rational> = BTreeMap::new();
        while !rem.is_zero() {
            let (rm, rc) = rem.terms.iter().next_back().unwrap();
            let qm = dm.div_into(rm)?;
            let qc = rc / dc;
            // rem -= (qc * x^qm) * divisor
            let mut sub = BTreeMap::new();
            for (m, c) in &divisor.terms {
                sub.insert(m.mul(&qm), c * &qc);
            }
            let mut next = rem.terms.clone();
            for (m, c) in sub {
                Self::add_term(&mut next, m, -c);
            }
            rem = Polynomial::from_term_map(self.ctx.clone(), next);
            Self::add_term(&mut quot, qm, qc);
        }
        Some(Polynomial::from_term_map(self.ctx.clone(), quot))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_context(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            Polynomial::add_term(&mut terms, m.clone(), c.clone());
        }
        Polynomial::from_term_map(self.ctx.clone(), terms)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_context(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            Polynomial::add_term(&mut terms, m.clone(), -c.clone());
        }
        Polynomial::from_term_map(self.ctx.clone(), terms)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_context(rhs);
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                Polynomial::add_term(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        Polynomial::from_term_map(self.ctx.clone(), terms)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Canonical form: terms in descending grevlex order, `^` for powers,
    /// explicit `*` between factors. Reparsing the output under the same
    /// variable list reproduces the polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (mon, coeff)) in self.terms.iter().rev().enumerate() {
            let neg = coeff.is_negative();
            let mag = coeff.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (idx, &e) in mon.0.iter().enumerate() {
                if e == 1 {
                    factors.push(self.ctx.name(idx).to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ctx.name(idx), e));
                }
            }
            if factors.is_empty() {
                write_coeff(f, &mag)?;
            } else {
                if !mag.is_one() {
                    write_coeff(f, &mag)?;
                    write!(f, "*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.ctx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    pub(crate) fn ctx(names: &[&str]) -> Context {
        Context::new(names.iter().copied()).unwrap()
    }

    pub(crate) fn var(c: &Context, name: &str) -> Polynomial {
        Polynomial::variable(c, name).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let c = ctx(&["y"]);
        let y = var(&c, "y");
        let one = Polynomial::one(&c);
        let prod = (&y + &one) * (&y - &one);
        assert_eq!(prod, &(&y * &y) - &one);
        assert_eq!(prod.to_string(), "y^2 - 1");
    }

    #[test]
    fn expansion_matches_hypersurface_equation() {
        // (-x) * (x*y + 1) = -x^2*y - x
        let c = ctx(&["x", "y"]);
        let x = var(&c, "x");
        let y = var(&c, "y");
        let f = (-&x) * ((&x * &y) + Polynomial::one(&c));
        let expected = -(&(&x * &x) * &y) - &x;
        assert_eq!(f, expected);
        assert_eq!(f.to_string(), "-x^2*y - x");
    }

    #[test]
    fn multiplication_by_zero_absorbs() {
        let c = ctx(&["x", "y"]);
        let p = (var(&c, "x") * var(&c, "y")) + Polynomial::constant(&c, ratio(7, 3));
        let z = Polynomial::zero(&c);
        assert!((&p * &z).is_zero());
    }

    #[test]
    fn partial_derivatives_of_suspension_function() {
        // d(x^3 z + y t^2)/dx = 3 x^2 z, d/dt = 2 y t
        let c = ctx(&["z", "t", "x", "y"]);
        let (z, t, x, y) = (var(&c, "z"), var(&c, "t"), var(&c, "x"), var(&c, "y"));
        let f = (&x.pow(3) * &z) + (&y * &t.pow(2));
        let fx = f.partial_derivative("x").unwrap();
        assert_eq!(fx, x.pow(2).scale(&rat(3)) * &z);
        let ft = f.partial_derivative("t").unwrap();
        assert_eq!(ft, (&y * &t).scale(&rat(2)));
        let c_only = Polynomial::constant(&c, rat(5));
        assert!(c_only.partial_derivative("x").unwrap().is_zero());
        assert!(f.partial_derivative("w").is_err());
    }

    #[test]
    fn evaluation_requires_full_assignment() {
        let c = ctx(&["x", "y"]);
        let p = (var(&c, "x") * var(&c, "y")) - Polynomial::one(&c);
        let mut point = BTreeMap::new();
        point.insert("x".to_string(), rat(1));
        assert!(matches!(
            p.evaluate(&point),
            Err(Error::MissingAssignment(_))
        ));
        point.insert("y".to_string(), rat(1));
        assert_eq!(p.evaluate(&point).unwrap(), rat(0));
    }

    #[test]
    fn evaluation_examples() {
        let c = ctx(&["u", "v", "y"]);
        let p = (var(&c, "u") * var(&c, "v")) - var(&c, "y").pow(2);
        assert_eq!(p.evaluate_at(&[rat(0), rat(0), rat(0)]), rat(0));
        let c1 = ctx(&["y"]);
        let q = var(&c1, "y").pow(3) + Polynomial::one(&c1);
        assert_eq!(q.evaluate_at(&[rat(-1)]), rat(0));
    }

    #[test]
    fn embedding_preserves_values() {
        let small = ctx(&["y"]);
        let big = ctx(&["x", "y", "z"]);
        let p = var(&small, "y").pow(2) - Polynomial::one(&small);
        let q = p.embed_into(&big).unwrap();
        assert_eq!(q.degree_in(big.index_of("y").unwrap()), Some(2));
        assert!(p.embed_into(&ctx(&["x", "z"])).is_err());
    }

    #[test]
    fn common_context_merges_by_name() {
        let a = ctx(&["x", "y"]);
        let b = ctx(&["y", "z"]);
        let p = var(&a, "x") + var(&a, "y");
        let q = var(&b, "y") * var(&b, "z");
        let (p2, q2) = Polynomial::in_common_context(&p, &q).unwrap();
        assert_eq!(p2.context(), q2.context());
        assert_eq!(p2.context().names(), &["x", "y", "z"]);
        let r = var(&ctx(&["y", "x"]), "x");
        assert!(Polynomial::in_common_context(&p, &r).is_err());
    }

    #[test]
    fn exact_division() {
        let c = ctx(&["x", "y"]);
        let x = var(&c, "x");
        let y = var(&c, "y");
        let a = (&x + &y).pow(3);
        let b = &x + &y;
        let q = a.div_exact(&b).unwrap();
        assert_eq!(q, (&x + &y).pow(2));
        let not_div = (&x * &y) + Polynomial::one(&c);
        assert!(not_div.div_exact(&b).is_none());
    }

    #[test]
    fn display_round_trip_shapes() {
        let c = ctx(&["x", "y"]);
        let p = (var(&c, "x").pow(2) * var(&c, "y")).scale(&ratio(-3, 4))
            + var(&c, "x").scale(&rat(2))
            - Polynomial::constant(&c, ratio(1, 2));
        assert_eq!(p.to_string(), "-3/4*x^2*y + 2*x - 1/2");
        assert_eq!(Polynomial::zero(&c).to_string(), "0");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly(c: &Context) -> impl Strategy<Value = Polynomial> {
            let nv = c.num_vars();
            let ctx = c.clone();
            proptest::collection::vec(
                (
                    proptest::collection::vec(0u32..4, nv),
                    -6i64..=6,
                    1i64..=3,
                ),
                0..6,
            )
            .prop_map(move |terms| {
                Polynomial::from_terms(
                    &ctx,
                    terms
                        .into_iter()
                        .map(|(exps, n, d)| (exps, ratio(n, d))),
                )
                .unwrap()
            })
        }

        proptest! {
            #[test]
            fn ring_axioms(
                (p, q, r) in {
                    let c = ctx(&["x", "y", "z"]);
                    (arb_poly(&c), arb_poly(&c), arb_poly(&c))
                }
            ) {
                prop_assert_eq!(&p + &q, &q + &p);
                prop_assert_eq!(&p * &q, &q * &p);
                prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
                prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
                prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
                prop_assert_eq!(&p - &p, Polynomial::zero(p.context()));
            }

            #[test]
            fn product_rule(
                (p, q) in {
                    let c = ctx(&["x", "y"]);
                    (arb_poly(&c), arb_poly(&c))
                }
            ) {
                let lhs = (&p * &q).partial_derivative("x").unwrap();
                let rhs = &(&p * &q.partial_derivative("x").unwrap())
                    + &(&q * &p.partial_derivative("x").unwrap());
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn evaluation_is_a_ring_map(
                (p, q, a, b) in {
                    let c = ctx(&["x", "y"]);
                    (arb_poly(&c), arb_poly(&c), -5i64..=5, -5i64..=5)
                }
            ) {
                let vals = [rat(a), rat(b)];
                prop_assert_eq!(
                    (&p * &q).evaluate_at(&vals),
                    p.evaluate_at(&vals) * q.evaluate_at(&vals)
                );
                prop_assert_eq!(
                    (&p + &q).evaluate_at(&vals),
                    p.evaluate_at(&vals) + q.evaluate_at(&vals)
                );
            }
        }
    }
}
