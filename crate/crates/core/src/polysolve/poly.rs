use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{parse_scalar, Scalar};

/// Exponent vector, ordered graded-reverse-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub(crate) Box<[u32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e.into_boxed_slice())
    }

    pub fn from_exponents(exponents: &[u32]) -> Self {
        Monomial(exponents.into())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(self.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.0.iter().zip(other.0.iter()).rev() {
            if a != b {
                // Smaller exponent in the last differing variable wins.
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) type Terms = Vec<(Monomial, Scalar)>;

/// Sparse polynomial over Q(i) in named variables, terms kept in strictly
/// decreasing grevlex order with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: Terms,
}

impl MultiPoly {
    pub fn new(vars: Arc<[String]>, terms: Vec<(Monomial, Scalar)>) -> Result<Self> {
        for (m, _) in &terms {
            if m.0.len() != vars.len() {
                return Err(Error::VariableMismatch(format!(
                    "exponent vector of length {} for {} variables",
                    m.0.len(),
                    vars.len()
                )));
            }
        }
        Ok(MultiPoly {
            vars,
            terms: normalize(terms),
        })
    }

    pub(crate) fn from_sorted(vars: Arc<[String]>, terms: Terms) -> Self {
        MultiPoly { vars, terms }
    }

    pub fn zero(vars: Arc<[String]>) -> Self {
        MultiPoly {
            vars,
            terms: Vec::new(),
        }
    }

    pub fn constant(vars: Arc<[String]>, c: Scalar) -> Self {
        let n = vars.len();
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(Monomial::one(n), c)]
        };
        MultiPoly { vars, terms }
    }

    pub fn var(vars: Arc<[String]>, i: usize) -> Self {
        let n = vars.len();
        MultiPoly {
            vars,
            terms: vec![(Monomial::var(n, i), Scalar::one())],
        }
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn leading(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn monic(&self) -> MultiPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().unwrap()),
        }
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.vars.len() {
            return Err(Error::VariableMismatch(format!(
                "point of length {} for {} variables",
                point.len(),
                self.vars.len()
            )));
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, x)| if e == 0 { acc } else { &acc * &x.pow(e) })
            })
            .sum())
    }

    fn same_vars(&self, other: &MultiPoly) -> Result<()> {
        if !Arc::ptr_eq(&self.vars, &other.vars) && self.vars != other.vars {
            return Err(Error::VariableMismatch(format!(
                "{:?} vs {:?}",
                self.vars, other.vars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.same_vars(other)?;
        Ok(MultiPoly::from_sorted(
            self.vars.clone(),
            merge_sub(&self.terms, &other.terms, &-Scalar::one(), None),
        ))
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.same_vars(other)?;
        Ok(MultiPoly::from_sorted(
            self.vars.clone(),
            merge_sub(&self.terms, &other.terms, &Scalar::one(), None),
        ))
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.same_vars(other)?;
        let mut acc: Terms = Vec::new();
        for (m, c) in &self.terms {
            acc = merge_sub(&acc, &other.terms, &-c, Some(m));
        }
        Ok(MultiPoly::from_sorted(self.vars.clone(), acc))
    }

    /// Parses a sum of terms such as `2*x^2*y - (1+i)*z + 3/4`.
    pub fn parse(vars: Arc<[String]>, text: &str) -> Result<MultiPoly> {
        PolyParser::new(vars, text).parse()
    }
}

/// `a − c·m·b`, merging two sorted term lists.
pub(crate) fn merge_sub(a: &[(Monomial, Scalar)], b: &[(Monomial, Scalar)], c: &Scalar, m: Option<&Monomial>) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let shifted = |k: usize| -> Monomial {
        match m {
            Some(m) => b[k].0.mul(m),
            None => b[k].0.clone(),
        }
    };
    let mut bj = if b.is_empty() { None } else { Some(shifted(0)) };
    while i < a.len() || bj.is_some() {
        let ord = match (a.get(i), &bj) {
            (Some(x), Some(y)) => x.0.cmp(y),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => unreachable!(),
        };
        match ord {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let coef = -(c * &b[j].1);
                out.push((bj.take().unwrap(), coef));
                j += 1;
                bj = (j < b.len()).then(|| shifted(j));
            }
            Ordering::Equal => {
                let coef = &a[i].1 - &(c * &b[j].1);
                if !coef.is_zero() {
                    out.push((bj.take().unwrap(), coef));
                }
                i += 1;
                j += 1;
                bj = (j < b.len()).then(|| shifted(j));
            }
        }
    }
    out
}

fn normalize(mut terms: Terms) -> Terms {
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    let mut out: Terms = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => *lc += &c,
            _ => out.push((m, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{e}", self.vars[i])
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "({c})*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{self}]")
    }
}

struct PolyParser<'a> {
    vars: Arc<[String]>,
    text: &'a str,
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn new(vars: Arc<[String]>, text: &'a str) -> Self {
        PolyParser { vars, text, pos: 0 }
    }

    fn err(&self, message: &str) -> Error {
        Error::Parse {
            input: self.text.to_string(),
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(' ') {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn parse(mut self) -> Result<MultiPoly> {
        let n = self.vars.len();
        let mut terms = Vec::new();
        self.skip_ws();
        let mut negate = false;
        if let Some(c @ ('+' | '-')) = self.peek() {
            negate = c == '-';
            self.pos += 1;
        }
        loop {
            self.skip_ws();
            let (m, c) = self.term(n)?;
            terms.push((m, if negate { -c } else { c }));
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => negate = false,
                Some('-') => negate = true,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
            self.pos += 1;
        }
        MultiPoly::new(self.vars, terms)
    }

    fn term(&mut self, n: usize) -> Result<(Monomial, Scalar)> {
        let mut coef = Scalar::one();
        let mut exps = vec![0u32; n];
        loop {
            self.skip_ws();
            match self.peek() {
                Some('(') => {
                    let end = self.text[self.pos..]
                        .find(')')
                        .ok_or_else(|| self.err("unclosed '('"))?;
                    let inner = &self.text[self.pos + 1..self.pos + end];
                    let c = parse_scalar(inner).map_err(|_| self.err("bad scalar"))?;
                    coef = &coef * &c;
                    self.pos += end + 1;
                }
                Some(ch) if ch.is_ascii_digit() => {
                    let start = self.pos;
                    while self
                        .peek()
                        .is_some_and(|c| c.is_ascii_digit() || c == '/')
                    {
                        self.pos += 1;
                    }
                    let c = parse_scalar(&self.text[start..self.pos])
                        .map_err(|_| self.err("bad number"))?;
                    coef = &coef * &c;
                }
                Some(ch) if ch.is_alphabetic() || ch == '_' => {
                    let start = self.pos;
                    while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
                        self.pos += self.peek().unwrap().len_utf8();
                    }
                    let name = &self.text[start..self.pos];
                    let idx = self.vars.iter().position(|v| v == name);
                    let mut e = 1;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        let s = self.pos;
                        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                            self.pos += 1;
                        }
                        e = self.text[s..self.pos]
                            .parse()
                            .map_err(|_| self.err("bad exponent"))?;
                    }
                    match idx {
                        Some(i) => exps[i] += e,
                        None if name == "i" => coef = &coef * &Scalar::i().pow(e),
                        None => {
                            self.pos = start;
                            return Err(self.err("unknown variable"));
                        }
                    }
                }
                _ => return Err(self.err("expected a factor")),
            }
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial(exps.into_boxed_slice()), coef))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr(Vec<u32>, Scalar);

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    variables: Vec<String>,
    terms: Vec<TermRepr>,
}

pub(crate) fn terms_repr(p: &MultiPoly) -> Vec<(Vec<u32>, Scalar)> {
    p.terms.iter().map(|(m, c)| (m.0.to_vec(), c.clone())).collect()
}

pub(crate) fn from_terms_repr(vars: Arc<[String]>, terms: Vec<(Vec<u32>, Scalar)>) -> Result<MultiPoly> {
    MultiPoly::new(
        vars,
        terms
            .into_iter()
            .map(|(e, c)| (Monomial(e.into_boxed_slice()), c))
            .collect(),
    )
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            variables: self.vars.to_vec(),
            terms: terms_repr(self).into_iter().map(|(e, c)| TermRepr(e, c)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = PolyRepr::deserialize(deserializer)?;
        from_terms_repr(
            r.variables.into(),
            r.terms.into_iter().map(|t| (t.0, t.1)).collect(),
        )
        .map_err(serde::de::Error::custom)
    }
}
