//! Sparse integer Laurent polynomials in `t^{±1}`, `y` and `y1..yM`.
//!
//! Exponent vectors are laid out as `[t, y, y1, .., yM]`; `t` may carry any
//! integer exponent, all other variables are polynomial. The number `M` of
//! indexed slots is fixed per instance and two polynomials only combine when
//! they share it.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use super::{AlgebraError, Int};

/// A polynomial variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    T,
    Y,
    /// Indexed singularity variable `y_i`, 1-based.
    Yi(usize),
}

impl Var {
    fn position(self) -> usize {
        match self {
            Var::T => 0,
            Var::Y => 1,
            Var::Yi(i) => 1 + i,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::T => f.write_str("t"),
            Var::Y => f.write_str("y"),
            Var::Yi(i) => write!(f, "y{i}"),
        }
    }
}

/// Exponent vector `[t, y, y1, .., yM]`, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(SmallVec<[i32; 10]>);

impl Monomial {
    fn unit(slots: usize) -> Self {
        Monomial(SmallVec::from_elem(0, 2 + slots))
    }

    pub fn exponent(&self, var: Var) -> i32 {
        self.0.get(var.position()).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn vars(&self) -> impl Iterator<Item = (Var, i32)> + '_ {
        self.0.iter().enumerate().filter(|(_, e)| **e != 0).map(|(i, e)| {
            let v = match i {
                0 => Var::T,
                1 => Var::Y,
                k => Var::Yi(k - 1),
            };
            (v, *e)
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    slots: usize,
    terms: BTreeMap<Monomial, Int>,
}

impl LaurentPoly {
    pub fn zero(slots: usize) -> Self {
        LaurentPoly { slots, terms: BTreeMap::new() }
    }

    pub fn constant(c: impl Into<Int>, slots: usize) -> Self {
        Self::monomial(c, &[], slots)
    }

    pub fn one(slots: usize) -> Self {
        Self::constant(1, slots)
    }

    /// Single variable raised to `exp`. Only `t` may take negative powers.
    pub fn var_pow(var: Var, exp: i32, slots: usize) -> Self {
        Self::monomial(1, &[(var, exp)], slots)
    }

    pub fn var(var: Var, slots: usize) -> Self {
        Self::var_pow(var, 1, slots)
    }

    pub fn t_pow(exp: i32, slots: usize) -> Self {
        Self::var_pow(Var::T, exp, slots)
    }

    /// `c * prod(v^e)`.
    ///
    /// Panics when a variable does not fit the universe or a non-`t`
    /// variable gets a negative exponent.
    pub fn monomial(c: impl Into<Int>, powers: &[(Var, i32)], slots: usize) -> Self {
        let c = c.into();
        let mut mono = Monomial::unit(slots);
        for &(v, e) in powers {
            assert!(
                matches!(v, Var::T) || e >= 0,
                "negative exponent on polynomial variable {v}"
            );
            if let Var::Yi(i) = v {
                assert!(i >= 1 && i <= slots, "variable {v} outside universe of {slots} slots");
            }
            mono.0[v.position()] += e;
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        LaurentPoly { slots, terms }
    }

    /// Number of indexed `y_i` slots in this polynomial's universe.
    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Int)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, powers: &[(Var, i32)]) -> Int {
        let probe = Self::monomial(1, powers, self.slots);
        let (mono, _) = probe.terms.into_iter().next().expect("unit coefficient");
        self.terms.get(&mono).cloned().unwrap_or(Int::ZERO)
    }

    /// Largest exponent of `var` over all terms (0 for the zero polynomial).
    pub fn degree_in(&self, var: Var) -> i32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, var: Var) -> i32 {
        self.terms.keys().map(|m| m.exponent(var)).min().unwrap_or(0)
    }

    /// `Some((sign, k))` when the polynomial is `±t^k`.
    pub fn as_signed_t_power(&self) -> Option<(i64, i32)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (mono, c) = self.terms.iter().next()?;
        if mono.0[1..].iter().any(|e| *e != 0) {
            return None;
        }
        match c.to_i64() {
            Some(1) => Some((1, mono.0[0])),
            Some(-1) => Some((-1, mono.0[0])),
            _ => None,
        }
    }

    fn check_universe(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.slots == other.slots {
            Ok(())
        } else {
            Err(AlgebraError::UniverseMismatch { left: self.slots, right: other.slots })
        }
    }

    fn accumulate(terms: &mut BTreeMap<Monomial, Int>, mono: Monomial, c: Int) {
        use std::collections::btree_map::Entry;
        match terms.entry(mono) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_universe(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(LaurentPoly { slots: self.slots, terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_universe(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::accumulate(&mut terms, m.clone(), -c);
        }
        Ok(LaurentPoly { slots: self.slots, terms })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_universe(other)?;
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                Self::accumulate(&mut terms, ma.times(mb), ca * cb);
            }
        }
        Ok(LaurentPoly { slots: self.slots, terms })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.slots);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// The same polynomial in a universe with `slots >= self.slots()` indexed
    /// variables.
    pub fn with_slots(&self, slots: usize) -> Self {
        assert!(slots >= self.slots, "cannot shrink a polynomial universe");
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.resize(2 + slots, 0);
                (Monomial(e), c.clone())
            })
            .collect();
        LaurentPoly { slots, terms }
    }

    /// Rename `y_i` to `y_{perm[i-1]}`. `perm` must be a permutation of `1..=M`.
    pub fn permute_indexed(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.slots, "permutation length must equal slot count");
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = m.clone();
                for (i, &target) in perm.iter().enumerate() {
                    out.0[1 + target] = m.0[2 + i];
                }
                (out, c.clone())
            })
            .collect();
        LaurentPoly { slots: self.slots, terms }
    }

    /// Replace variables by polynomials and renormalize.
    ///
    /// All images must share one universe, which becomes the universe of the
    /// result. Variables without an image are kept as they are. `t` may only
    /// be sent to a unit `±t^k`, since it appears with negative exponents.
    pub fn substitute(&self, assignment: &[(Var, LaurentPoly)]) -> Result<Self, AlgebraError> {
        let Some((_, first)) = assignment.first() else {
            return Ok(self.clone());
        };
        let target = first.slots;
        let mut images: BTreeMap<Var, &LaurentPoly> = BTreeMap::new();
        for (v, img) in assignment {
            if img.slots != target {
                return Err(AlgebraError::UniverseMismatch { left: target, right: img.slots });
            }
            if let Var::Yi(i) = v {
                if *i == 0 || *i > self.slots {
                    return Err(AlgebraError::VariableOutOfRange { var: *v, slots: self.slots });
                }
            }
            if *v == Var::T && img.as_signed_t_power().is_none() {
                return Err(AlgebraError::NonUnitSubstitution);
            }
            if images.insert(*v, img).is_some() {
                return Err(AlgebraError::DuplicateAssignment(*v));
            }
        }

        let mut power_cache: BTreeMap<(Var, i32), LaurentPoly> = BTreeMap::new();
        let mut out = LaurentPoly::zero(target);
        for (mono, c) in &self.terms {
            let mut term = LaurentPoly::constant(c.clone(), target);
            let mut kept = Monomial::unit(target);
            for (v, e) in mono.vars() {
                match images.get(&v) {
                    Some(img) => {
                        let factor = power_cache
                            .entry((v, e))
                            .or_insert_with(|| power_of_image(img, e))
                            .clone();
                        term = &term * &factor;
                    }
                    None => {
                        if let Var::Yi(i) = v {
                            if i > target {
                                return Err(AlgebraError::VariableOutOfRange { var: v, slots: target });
                            }
                        }
                        kept.0[v.position()] += e;
                    }
                }
            }
            let kept = LaurentPoly { slots: target, terms: BTreeMap::from([(kept, Int::ONE)]) };
            out = &out + &(&term * &kept);
        }
        Ok(out)
    }

    /// Parse the text form produced by `Display`, e.g. `"1 - y - t*y"`.
    pub fn parse(text: &str, slots: usize) -> Result<Self, AlgebraError> {
        let bad = || AlgebraError::PolyParse(text.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(Self::zero(slots));
        }
        // split into signed terms
        let mut pieces = Vec::new();
        let mut current = String::new();
        let mut prev = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !current.is_empty() && prev != Some('^') {
                pieces.push(std::mem::take(&mut current));
            }
            current.push(ch);
            prev = Some(ch);
        }
        if current.is_empty() {
            return Err(bad());
        }
        pieces.push(current);

        let mut out = Self::zero(slots);
        for piece in pieces {
            let (negative, body) = match piece.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let mut coeff = Int::ONE;
            let mut powers = Vec::new();
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(bad());
                }
                if factor.chars().all(|c| c.is_ascii_digit()) {
                    let v: i64 = factor.parse().map_err(|_| bad())?;
                    coeff = &coeff * &Int::from(v);
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<i32>().map_err(|_| bad())?),
                    None => (factor, 1),
                };
                let var = match name {
                    "t" | "x" => Var::T,
                    "y" => Var::Y,
                    _ => {
                        let idx: usize = name
                            .strip_prefix('y')
                            .and_then(|s| s.parse().ok())
                            .ok_or_else(bad)?;
                        if idx == 0 || idx > slots {
                            return Err(AlgebraError::VariableOutOfRange { var: Var::Yi(idx), slots });
                        }
                        Var::Yi(idx)
                    }
                };
                if var != Var::T && exp < 0 {
                    return Err(bad());
                }
                powers.push((var, exp));
            }
            if negative {
                coeff = -coeff;
            }
            out = &out + &Self::monomial(coeff, &powers, slots);
        }
        Ok(out)
    }
}

/// `img^e`; a negative `e` only reaches here for unit images of `t`.
fn power_of_image(img: &LaurentPoly, e: i32) -> LaurentPoly {
    if e >= 0 {
        return img.pow(e as u32);
    }
    let (sign, k) = img.as_signed_t_power().expect("unit image");
    let n = -e;
    let sign = if sign < 0 && n % 2 == 1 { -1 } else { 1 };
    LaurentPoly::monomial(sign, &[(Var::T, -k * n)], img.slots)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (mono, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            let factors: Vec<String> = mono
                .vars()
                .map(|(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.slots, self)
    }
}

// Operator forms panic on universe mismatch, like shape mismatches in array
// libraries; use the `checked_*` methods to get an error instead.

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            slots: self.slots,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, 0).unwrap()
    }

    fn p2(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, 2).unwrap()
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        assert_eq!(&p("t") * &p("t^-1"), p("1"));
    }

    #[test]
    fn cancellation_to_one() {
        assert_eq!(&p("1 - y - t*y") + &p("y + t*y"), p("1"));
    }

    /// Schoolbook oracle: expand (a + b + c)^2 termwise by hand.
    #[test]
    fn singular_determinant_squared() {
        let q = p("1 - y - t*y");
        let sq = &q * &q;
        // (1)(1) + 2(1)(-y) + 2(1)(-ty) + (-y)^2 + 2(-y)(-ty) + (-ty)^2
        let expected = p("1 - 2*y - 2*t*y + y^2 + 2*t*y^2 + t^2*y^2");
        assert_eq!(sq, expected);
        assert_eq!(sq.len(), 6);
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p("t*y + 1 - y").to_string(), "1 - y + t*y");
        assert_eq!(p("1 - y - t*y").to_string(), "1 - y - t*y");
        assert_eq!(LaurentPoly::parse("t^-2 + 3*y1", 1).unwrap().to_string(), "t^-2 + 3*y1");
        assert_eq!(LaurentPoly::parse("y1 + y2^2", 2).unwrap().to_string(), "y2^2 + y1");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("-t").to_string(), "-t");
    }

    #[test]
    fn universe_mismatch_is_an_error() {
        let a = p("t");
        let b = p2("t");
        assert!(matches!(a.checked_mul(&b), Err(AlgebraError::UniverseMismatch { .. })));
        assert!(a.checked_add(&b).is_err());
    }

    #[test]
    fn substitute_resolutions() {
        let det = p("1 - y - t*y");
        let right = det.substitute(&[(Var::Y, p("1"))]).unwrap();
        assert_eq!(right, p("-t"));
        let left = det.substitute(&[(Var::Y, p("t^-1"))]).unwrap();
        assert_eq!(left, p("-t^-1"));

        let two = &p2("1 - y1 - t*y1") * &p2("1 - y2 - t*y2");
        let mixed = two
            .substitute(&[(Var::Yi(1), p("1")), (Var::Yi(2), p("t^-1"))])
            .unwrap();
        assert_eq!(mixed, p("1"));
    }

    #[test]
    fn substitute_t_requires_unit() {
        let q = p("t^-1 + y");
        assert_eq!(q.substitute(&[(Var::T, p("-1"))]).unwrap(), p("-1 + y"));
        assert_eq!(q.substitute(&[(Var::T, p("-t^2"))]).unwrap(), p("-t^-2 + y"));
        assert!(matches!(
            q.substitute(&[(Var::T, p("1 + t"))]),
            Err(AlgebraError::NonUnitSubstitution)
        ));
    }

    #[test]
    fn substitute_rejects_duplicates_and_range() {
        let q = p2("y1");
        assert!(q.substitute(&[(Var::Yi(1), p("1")), (Var::Yi(1), p("1"))]).is_err());
        assert!(q.substitute(&[(Var::Yi(3), p2("1"))]).is_err());
        // y1 left alone but the target universe has no y1 slot
        assert!(q.substitute(&[(Var::Y, p("1"))]).is_err());
    }

    #[test]
    fn permute_indexed_swaps() {
        let q = p2("y1 + 2*y2^2");
        assert_eq!(q.permute_indexed(&[2, 1]), p2("y2 + 2*y1^2"));
        assert_eq!(q.permute_indexed(&[1, 2]), q);
    }

    fn arb_poly(slots: usize) -> impl Strategy<Value = LaurentPoly> {
        let mono = (-3i32..=3, 0i32..=2, proptest::collection::vec(0i32..=1, slots), -4i64..=4);
        proptest::collection::vec(mono, 0..5).prop_map(move |terms| {
            let mut out = LaurentPoly::zero(slots);
            for (et, ey, eys, c) in terms {
                let mut powers = vec![(Var::T, et), (Var::Y, ey)];
                powers.extend(eys.iter().enumerate().map(|(i, e)| (Var::Yi(i + 1), *e)));
                out = &out + &LaurentPoly::monomial(c, &powers, slots);
            }
            out
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn substitution_is_multiplicative(a in arb_poly(2), b in arb_poly(2)) {
            let assignment = [
                (Var::Yi(1), p("1")),
                (Var::Yi(2), p("t^-1")),
                (Var::T, p("-t")),
            ];
            let lhs = (&a * &b).substitute(&assignment).unwrap();
            let rhs = &a.substitute(&assignment).unwrap() * &b.substitute(&assignment).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn display_parse_round_trip(a in arb_poly(2)) {
            prop_assert_eq!(LaurentPoly::parse(&a.to_string(), 2).unwrap(), a);
        }
    }
}
