//! Exact sparse multivariate polynomials over the integers in the two
//! indexed variable families x_1, x_2, … and t_1, t_2, …, together with
//! elementary symmetric polynomials over mixed variable lists and exact
//! determinants.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A variable atom: x_i or t_i (indices ≥ 1).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    X(u32),
    T(u32),
}

/// A monomial ∏ x_i^{a_i} t_i^{b_i}; zero exponents are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    x: BTreeMap<u32, u32>,
    t: BTreeMap<u32, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        let mut m = Monomial::one();
        m.mul_var(v, 1);
        m
    }

    /// Multiplies by v^e in place.
    pub fn mul_var(&mut self, v: Var, e: u32) {
        if e == 0 {
            return;
        }
        let (map, i) = match v {
            Var::X(i) => (&mut self.x, i),
            Var::T(i) => (&mut self.t, i),
        };
        assert!(i >= 1, "variable indices are 1-based");
        *map.entry(i).or_insert(0) += e;
    }

    pub fn x_exponents(&self) -> &BTreeMap<u32, u32> {
        &self.x
    }

    pub fn t_exponents(&self) -> &BTreeMap<u32, u32> {
        &self.t
    }

    pub fn total_degree(&self) -> u32 {
        self.x.values().sum::<u32>() + self.t.values().sum::<u32>()
    }

    /// Product of two monomials.
    pub fn times(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (&i, &e) in &other.x {
            *out.x.entry(i).or_insert(0) += e;
        }
        for (&i, &e) in &other.t {
            *out.t.entry(i).or_insert(0) += e;
        }
        out
    }

    /// The monomial with every t_i erased (t_i ↦ 1).
    pub fn drop_t(&self) -> Monomial {
        Monomial {
            x: self.x.clone(),
            t: BTreeMap::new(),
        }
    }

    pub fn has_t(&self) -> bool {
        !self.t.is_empty()
    }
}

/// Lexicographic comparison of sparse exponent vectors, padded with zeros:
/// at the first variable index where the exponents differ, the larger
/// exponent wins.
fn lex_cmp(a: &BTreeMap<u32, u32>, b: &BTreeMap<u32, u32>) -> std::cmp::Ordering {
    let mut ia = a.iter().peekable();
    let mut ib = b.iter().peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (None, None) => return std::cmp::Ordering::Equal,
            (Some(_), None) => return std::cmp::Ordering::Greater,
            (None, Some(_)) => return std::cmp::Ordering::Less,
            (Some(&(&xi, &xe)), Some(&(&yi, &ye))) => {
                // The side whose next nonzero exponent sits at a smaller
                // index is lex-larger (the other side has a zero there).
                if xi < yi {
                    return std::cmp::Ordering::Greater;
                }
                if yi < xi {
                    return std::cmp::Ordering::Less;
                }
                if xe != ye {
                    return xe.cmp(&ye);
                }
                ia.next();
                ib.next();
            }
        }
    }
}

/// Canonical graded-lex term order, leading term first: higher total degree
/// sorts earlier, ties broken by lex on x-exponents, then on t-exponents.
/// Fixed once so every serialization is byte-stable.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .total_degree()
            .cmp(&self.total_degree())
            .then_with(|| lex_cmp(&other.x, &self.x))
            .then_with(|| lex_cmp(&other.t, &self.t))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.x.is_empty() && self.t.is_empty() {
            return write!(f, "1");
        }
        let mut pieces = Vec::new();
        for (&i, &e) in &self.x {
            pieces.push(if e == 1 {
                format!("x{}", i)
            } else {
                format!("x{}^{}", i, e)
            });
        }
        for (&i, &e) in &self.t {
            pieces.push(if e == 1 {
                format!("t{}", i)
            } else {
                format!("t{}^{}", i, e)
            });
        }
        write!(f, "{}", pieces.join("*"))
    }
}

/// A sparse polynomial: canonical term map with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Polynomial::zero();
        if c != 0 {
            p.terms.insert(Monomial::one(), BigInt::from(c));
        }
        p
    }

    pub fn var(v: Var) -> Self {
        Polynomial::from_monomial(Monomial::var(v), BigInt::one())
    }

    pub fn from_monomial(m: Monomial, c: BigInt) -> Self {
        let mut p = Polynomial::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    /// Substitutes the constant 0 or 1 for every t_i.
    pub fn specialize_t(&self, value: u8) -> Polynomial {
        assert!(value <= 1, "only t=0 and t=1 specializations are used");
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if value == 0 {
                if !m.has_t() {
                    out.add_term(m.clone(), c);
                }
            } else {
                out.add_term(m.drop_t(), c);
            }
        }
        out
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Polynomial {
    /// Canonical human form, e.g. `3*x1^2*t3 + x2 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.sign() == num_bigint::Sign::Minus;
            let abs = if negative { -c } else { c.clone() };
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = m.total_degree() == 0;
            if abs.is_one() && !is_const {
                write!(f, "{:?}", m)?;
            } else if is_const {
                write!(f, "{}", abs)?;
            } else {
                write!(f, "{}*{:?}", abs, m)?;
            }
        }
        Ok(())
    }
}

fn exponent_map_json(map: &BTreeMap<u32, u32>) -> BTreeMap<String, u32> {
    map.iter().map(|(&i, &e)| (i.to_string(), e)).collect()
}

impl Serialize for Polynomial {
    /// JSON shape: `{"terms":[{"coeff":c,"x":{"1":e},"t":{"2":e}}, …]}` in
    /// canonical term order.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            coeff: i64,
            x: BTreeMap<String, u32>,
            t: BTreeMap<String, u32>,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(m, c)| Term {
                coeff: i64::try_from(c).expect("coefficient exceeds i64 in JSON output"),
                x: exponent_map_json(&m.x),
                t: exponent_map_json(&m.t),
            })
            .collect();
        let mut map = s.serialize_map(Some(1))?;
        map.serialize_entry("terms", &terms)?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            coeff: i64,
            #[serde(default)]
            x: BTreeMap<String, u32>,
            #[serde(default)]
            t: BTreeMap<String, u32>,
        }
        #[derive(Deserialize)]
        struct Wrapper {
            terms: Vec<Term>,
        }
        let w = Wrapper::deserialize(d)?;
        let mut p = Polynomial::zero();
        for term in w.terms {
            let mut m = Monomial::one();
            for (i, e) in term.x {
                let i: u32 = i.parse().map_err(serde::de::Error::custom)?;
                m.mul_var(Var::X(i), e);
            }
            for (i, e) in term.t {
                let i: u32 = i.parse().map_err(serde::de::Error::custom)?;
                m.mul_var(Var::T(i), e);
            }
            p.add_term(m, &BigInt::from(term.coeff));
        }
        Ok(p)
    }
}

/// e_k over the given variable list: the sum over all k-subsets, with
/// e_0 = 1 and e_k = 0 for k < 0 or k > |vars|.
///
/// Duplicate variables in the list are rejected.
pub fn elementary_symmetric(k: i64, vars: &[Var]) -> Polynomial {
    {
        let mut seen = vars.to_vec();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), vars.len(), "duplicate variable in list");
    }
    if k < 0 || k as usize > vars.len() {
        return Polynomial::zero();
    }
    let k = k as usize;
    // e[j] after processing a prefix of vars is e_j of that prefix.
    let mut e = vec![Polynomial::zero(); k + 1];
    e[0] = Polynomial::one();
    for &v in vars {
        let z = Polynomial::var(v);
        for j in (1..=k).rev() {
            let bump = &e[j - 1] * &z;
            e[j] += &bump;
        }
    }
    e.pop().unwrap()
}

/// Exact determinant of a square polynomial matrix by cofactor expansion,
/// memoized on the set of live columns.
pub fn determinant(matrix: &[Vec<Polynomial>]) -> Polynomial {
    let n = matrix.len();
    for row in matrix {
        assert_eq!(row.len(), n, "determinant requires a square matrix");
    }
    if n == 0 {
        return Polynomial::one();
    }
    assert!(n <= 20, "determinant limited to small matrices");
    let mut memo: std::collections::HashMap<u32, Polynomial> = std::collections::HashMap::new();
    det_minor(matrix, (1u32 << n) - 1, &mut memo)
}

fn det_minor(
    matrix: &[Vec<Polynomial>],
    cols: u32,
    memo: &mut std::collections::HashMap<u32, Polynomial>,
) -> Polynomial {
    if cols == 0 {
        return Polynomial::one();
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let n = matrix.len();
    let row = n - cols.count_ones() as usize; // expand along the first live row
    let mut acc = Polynomial::zero();
    let mut sign_positive = true;
    for j in 0..n {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = &matrix[row][j];
        if !entry.is_zero() {
            let sub = det_minor(matrix, cols & !(1 << j), memo);
            let prod = entry * &sub;
            if sign_positive {
                acc += &prod;
            } else {
                acc = &acc - &prod;
            }
        }
        sign_positive = !sign_positive;
    }
    memo.insert(cols, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32) -> Var {
        Var::X(i)
    }
    fn t(i: u32) -> Var {
        Var::T(i)
    }

    #[test]
    fn elementary_basics() {
        assert_eq!(
            format!("{}", elementary_symmetric(1, &[x(1), x(2)])),
            "x1 + x2"
        );
        assert_eq!(format!("{}", elementary_symmetric(0, &[x(1), t(5)])), "1");
        assert_eq!(format!("{}", elementary_symmetric(0, &[])), "1");
        assert_eq!(
            format!("{}", elementary_symmetric(2, &[x(1), x(2), t(1)])),
            "x1*x2 + x1*t1 + x2*t1"
        );
        assert!(elementary_symmetric(-1, &[x(1)]).is_zero());
        assert!(elementary_symmetric(2, &[x(1)]).is_zero());
    }

    #[test]
    fn elementary_pascal_recurrence() {
        // e_k(v ∪ {z}) = e_k(v) + z e_{k-1}(v)
        let v = [x(1), x(2), t(1), t(2)];
        let z = t(3);
        let mut vz = v.to_vec();
        vz.push(z);
        for k in 0..=(v.len() as i64 + 1) {
            let lhs = elementary_symmetric(k, &vz);
            let rhs = &elementary_symmetric(k, &v)
                + &(&Polynomial::var(z) * &elementary_symmetric(k - 1, &v));
            assert_eq!(lhs, rhs, "k={}", k);
        }
    }

    #[test]
    fn determinant_basics() {
        let m = vec![vec![Polynomial::var(x(1))]];
        assert_eq!(format!("{}", determinant(&m)), "x1");

        let id = vec![
            vec![Polynomial::one(), Polynomial::zero()],
            vec![Polynomial::zero(), Polynomial::one()],
        ];
        assert_eq!(determinant(&id), Polynomial::one());

        // [[x1, 1], [x1*x2, x2]] has determinant 0.
        let m = vec![
            vec![Polynomial::var(x(1)), Polynomial::one()],
            vec![
                &Polynomial::var(x(1)) * &Polynomial::var(x(2)),
                Polynomial::var(x(2)),
            ],
        ];
        assert!(determinant(&m).is_zero());
    }

    #[test]
    fn determinant_repeated_row_vanishes() {
        let row = vec![
            elementary_symmetric(1, &[x(1), x(2)]),
            elementary_symmetric(2, &[x(1), x(2), t(1)]),
            Polynomial::constant(3),
        ];
        let other = vec![
            Polynomial::var(t(2)),
            Polynomial::one(),
            Polynomial::var(x(2)),
        ];
        let m = vec![row.clone(), other, row];
        assert!(determinant(&m).is_zero());
    }

    #[test]
    fn determinant_matches_permanent_style_expansion() {
        // 3x3 cross-check against the explicit signed-permutation sum.
        let e = |k, vars: &[Var]| elementary_symmetric(k, vars);
        let m = vec![
            vec![e(1, &[x(1), x(2)]), e(2, &[x(1), x(2)]), Polynomial::one()],
            vec![e(0, &[]), e(1, &[x(1), t(1)]), e(2, &[x(2), t(1), t(2)])],
            vec![
                Polynomial::var(t(1)),
                Polynomial::constant(2),
                e(1, &[t(2)]),
            ],
        ];
        let perms: [([usize; 3], i64); 6] = [
            ([0, 1, 2], 1),
            ([0, 2, 1], -1),
            ([1, 0, 2], -1),
            ([1, 2, 0], 1),
            ([2, 0, 1], 1),
            ([2, 1, 0], -1),
        ];
        let mut expect = Polynomial::zero();
        for (perm, sign) in perms {
            let mut prod = Polynomial::constant(sign);
            for (i, &j) in perm.iter().enumerate() {
                prod = &prod * &m[i][j];
            }
            expect += &prod;
        }
        assert_eq!(determinant(&m), expect);
    }

    #[test]
    fn specialization() {
        let p = &(&Polynomial::var(x(1)) * &Polynomial::var(t(1))) + &Polynomial::var(x(2));
        assert_eq!(format!("{}", p.specialize_t(0)), "x2");
        let q = &(&Polynomial::var(x(1)) * &Polynomial::var(t(1)))
            + &(&Polynomial::var(x(1)) * &Polynomial::var(t(2)));
        assert_eq!(format!("{}", q.specialize_t(1)), "2*x1");
    }

    #[test]
    fn ring_axioms_spot() {
        let a = elementary_symmetric(2, &[x(1), x(2), t(1)]);
        let b = &Polynomial::var(x(1)) - &Polynomial::constant(3);
        let c = &Polynomial::var(t(2)) + &Polynomial::var(x(2));
        assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&a - &a, Polynomial::zero());
    }

    #[test]
    fn json_round_trip() {
        let p = &(&Polynomial::constant(3)
            * &(&Polynomial::var(x(1)) * &(&Polynomial::var(x(1)) * &Polynomial::var(t(3)))))
            + &Polynomial::var(x(2));
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(
            j,
            r#"{"terms":[{"coeff":3,"x":{"1":2},"t":{"3":1}},{"coeff":1,"x":{"2":1},"t":{}}]}"#
        );
        let back: Polynomial = serde_json::from_str(&j).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn display_forms() {
        assert_eq!(format!("{}", Polynomial::zero()), "0");
        assert_eq!(format!("{}", Polynomial::constant(-2)), "-2");
        let p = &Polynomial::constant(1) - &Polynomial::var(x(1));
        assert_eq!(format!("{}", p), "-x1 + 1");
    }
}
