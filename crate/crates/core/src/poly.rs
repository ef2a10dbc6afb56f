//! Sparse multivariate polynomials over the rationals.
//!
//! A polynomial is a strictly descending (grevlex) list of terms with
//! nonzero exact-rational coefficients; the zero polynomial is the empty
//! list. The first term is the leading term.
//!
//! The text format used by the CLI and by golden files is emitted by
//! [`Polynomial::display`] and read back by [`Polynomial::parse`]:
//! terms joined with ` + ` / ` - `, each term `c*v1^e1*v2^e2` with unit
//! coefficients and unit exponents elided, e.g.
//! `x[1,1]*x[2,2] - x[1,2]*x[2,1]`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;
use crate::vars::VariableTable;

pub type Coeff = BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Coeff,
    pub monomial: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    /// Strictly descending under grevlex; no zero coefficients.
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Canonicalize an arbitrary term list: sort descending, merge equal
    /// monomials, drop zeros.
    pub fn from_terms(mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| b.monomial.cmp(&a.monomial));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.monomial == t.monomial {
                    last.coeff += t.coeff;
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !t.coeff.is_zero() {
                out.push(t);
            }
        }
        Polynomial { terms: out }
    }

    pub fn constant(c: Coeff, nvars: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: vec![Term {
                coeff: c,
                monomial: Monomial::one(nvars),
            }],
        }
    }

    pub fn from_int(v: i64, nvars: usize) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(v)), nvars)
    }

    pub fn var(index: usize, nvars: usize) -> Self {
        Polynomial {
            terms: vec![Term {
                coeff: BigRational::one(),
                monomial: Monomial::var(index, nvars),
            }],
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial {
            terms: vec![Term {
                coeff: BigRational::one(),
                monomial: m,
            }],
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: -t.coeff.clone(),
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    /// Merge-add keeping the descending invariant.
    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match b.monomial.cmp(&a.monomial) {
                core::cmp::Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(b.clone());
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let c = &a.coeff + &b.coeff;
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            monomial: a.monomial.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    /// Multiply by a single term (no reordering needed: grevlex is
    /// compatible with multiplication).
    pub fn mul_term(&self, coeff: &Coeff, mono: &Monomial) -> Polynomial {
        if coeff.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * coeff,
                    monomial: t.monomial.mul(mono),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for t in &other.terms {
            acc = acc.add(&self.mul_term(&t.coeff, &t.monomial));
        }
        acc
    }

    /// Scale so the leading coefficient is positive and all coefficients
    /// are coprime integers. The zero polynomial is returned unchanged.
    pub fn normalize_sign(&self) -> Polynomial {
        let Some(lc) = self.leading_coeff() else {
            return self.clone();
        };
        use num_integer::Integer;
        let mut denom_lcm = BigInt::one();
        let mut numer_gcd = BigInt::zero();
        for t in &self.terms {
            denom_lcm = denom_lcm.lcm(t.coeff.denom());
            numer_gcd = numer_gcd.gcd(t.coeff.numer());
        }
        let mut factor = BigRational::new(denom_lcm, numer_gcd);
        if lc.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Renders with the given table's variable names.
    pub fn display<'a>(&'a self, table: &'a VariableTable) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, table }
    }

    /// Parse the text format back; inverse of `display` on canonical
    /// output.
    pub fn parse(input: &str, table: &VariableTable) -> Result<Polynomial, ParseError> {
        parse_polynomial(input, table)
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    table: &'a VariableTable,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, t) in self.poly.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = if neg {
                -t.coeff.clone()
            } else {
                t.coeff.clone()
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut wrote_factor = false;
            if !abs.is_one() || t.monomial.is_one() {
                write!(f, "{abs}")?;
                wrote_factor = true;
            }
            for v in t.monomial.support() {
                if wrote_factor {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.table.name(v))?;
                let e = t.monomial.exp(v);
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                wrote_factor = true;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub at: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.at, self.message)
    }
}

fn parse_polynomial(input: &str, table: &VariableTable) -> Result<Polynomial, ParseError> {
    let nvars = table.len();
    let bytes = input.as_bytes();
    let mut pos = 0usize;
    let mut terms: Vec<Term> = Vec::new();

    fn skip_ws(bytes: &[u8], pos: &mut usize) {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    }

    /// The digit run at the cursor, or `None` if there is none.
    fn parse_digits<'a>(bytes: &'a [u8], pos: &mut usize) -> Option<&'a [u8]> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == start {
            None
        } else {
            Some(&bytes[start..*pos])
        }
    }

    fn parse_bigint(digits: &[u8]) -> BigInt {
        BigInt::parse_bytes(digits, 10).expect("ascii digits")
    }

    skip_ws(bytes, &mut pos);
    if pos >= bytes.len() {
        return Err(ParseError {
            at: pos,
            message: String::from("empty input"),
        });
    }
    let mut first = true;
    loop {
        skip_ws(bytes, &mut pos);
        let mut sign = 1i64;
        if pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            if bytes[pos] == b'-' {
                sign = -1;
            }
            pos += 1;
            skip_ws(bytes, &mut pos);
        } else if !first {
            return Err(ParseError {
                at: pos,
                message: String::from("expected '+' or '-' between terms"),
            });
        }
        first = false;

        // coefficient: optional integer or integer/integer
        let mut coeff = BigRational::from_integer(BigInt::from(sign));
        let mut saw_number = false;
        if pos < bytes.len() && bytes[pos].is_ascii_digit() {
            let numer = parse_bigint(parse_digits(bytes, &mut pos).unwrap());
            let mut c = BigRational::from_integer(numer);
            if pos < bytes.len() && bytes[pos] == b'/' {
                pos += 1;
                let Some(denom_digits) = parse_digits(bytes, &mut pos) else {
                    return Err(ParseError {
                        at: pos,
                        message: String::from("expected denominator after '/'"),
                    });
                };
                let denom = parse_bigint(denom_digits);
                if denom.is_zero() {
                    return Err(ParseError {
                        at: pos,
                        message: String::from("zero denominator"),
                    });
                }
                c /= BigRational::from_integer(denom);
            }
            coeff *= c;
            saw_number = true;
        }

        // variables: name or name[i,j], each optionally ^e, joined by '*'
        let mut exps = vec![0u32; nvars];
        let mut saw_var = false;
        loop {
            if saw_number || saw_var {
                skip_ws(bytes, &mut pos);
                if pos < bytes.len() && bytes[pos] == b'*' {
                    pos += 1;
                    skip_ws(bytes, &mut pos);
                } else {
                    break;
                }
            }
            let start = pos;
            while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
                pos += 1;
            }
            if pos < bytes.len() && bytes[pos] == b'[' {
                while pos < bytes.len() && bytes[pos] != b']' {
                    pos += 1;
                }
                if pos >= bytes.len() {
                    return Err(ParseError {
                        at: start,
                        message: String::from("unterminated '['"),
                    });
                }
                pos += 1;
            }
            if pos == start {
                return Err(ParseError {
                    at: pos,
                    message: String::from("expected variable name"),
                });
            }
            let name = &input[start..pos];
            let Some(idx) = table.index_of_name(name) else {
                return Err(ParseError {
                    at: start,
                    message: alloc::format!("unknown variable `{name}`"),
                });
            };
            let mut e = 1u32;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let Some(digits) = parse_digits(bytes, &mut pos) else {
                    return Err(ParseError {
                        at: pos,
                        message: String::from("expected exponent after '^'"),
                    });
                };
                let v: u64 = core::str::from_utf8(digits)
                    .ok()
                    .and_then(|s| s.parse().ok())
                    .unwrap_or(u64::MAX);
                if v > 1_000_000 {
                    return Err(ParseError {
                        at: pos,
                        message: String::from("exponent too large"),
                    });
                }
                e = v as u32;
            }
            let (sum, overflow) = exps[idx].overflowing_add(e);
            if overflow {
                return Err(ParseError {
                    at: pos,
                    message: String::from("exponent too large"),
                });
            }
            exps[idx] = sum;
            saw_var = true;
        }

        if !saw_number && !saw_var {
            return Err(ParseError {
                at: pos,
                message: String::from("expected term"),
            });
        }
        terms.push(Term {
            coeff,
            monomial: Monomial::from_exps(exps),
        });

        skip_ws(bytes, &mut pos);
        if pos >= bytes.len() {
            break;
        }
    }
    Ok(Polynomial::from_terms(terms))
}

/// Exact determinant of a square matrix of polynomials by cofactor
/// expansion along the first row. Matrix sizes in this crate are at
/// most 4.
pub fn determinant(rows: &[Vec<Polynomial>]) -> Result<Polynomial, ShapeError> {
    let n = rows.len();
    if n == 0 {
        return Err(ShapeError::Empty);
    }
    for r in rows {
        if r.len() != n {
            return Err(ShapeError::NotSquare {
                rows: n,
                cols: r.len(),
            });
        }
    }
    Ok(det_rec(rows))
}

fn det_rec(rows: &[Vec<Polynomial>]) -> Polynomial {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = Polynomial::zero();
    for (j, entry) in rows[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cof = entry.mul(&det_rec(&minor));
        acc = if j % 2 == 0 {
            acc.add(&cof)
        } else {
            acc.sub(&cof)
        };
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeError {
    Empty,
    NotSquare { rows: usize, cols: usize },
}

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeError::Empty => write!(f, "empty matrix"),
            ShapeError::NotSquare { rows, cols } => {
                write!(
                    f,
                    "non-square matrix: {rows} rows but a row of width {cols}"
                )
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vars::VariableTable;
    use alloc::string::ToString;

    fn ring2() -> alloc::sync::Arc<VariableTable> {
        VariableTable::named(&["x", "y"])
    }

    fn p(s: &str, t: &VariableTable) -> Polynomial {
        Polynomial::parse(s, t).unwrap()
    }

    #[test]
    fn product_of_sum_and_difference() {
        let t = ring2();
        let f = p("x + y", &t);
        let g = p("x - y", &t);
        assert_eq!(f.mul(&g), p("x^2 - y^2", &t));
    }

    #[test]
    fn additive_inverse_cancels() {
        let t = ring2();
        let f = p("3*x^2*y - 1/2*y + 7", &t);
        assert!(f.add(&f.neg()).is_zero());
    }

    #[test]
    fn display_roundtrip_is_identity() {
        let t = ring2();
        for s in ["x^2 - y^2", "-x + 1", "2/3*x*y - y + 5", "0", "x", "-1"] {
            let f = p(s, &t);
            let shown = f.display(&t).to_string();
            assert_eq!(p(&shown, &t), f, "roundtrip of `{s}` via `{shown}`");
        }
    }

    #[test]
    fn display_matches_expected_format() {
        let t = ring2();
        let f = p("x^2 - y^2", &t);
        assert_eq!(f.display(&t).to_string(), "x^2 - y^2");
        let g = p("-2*x*y + 1/3", &t);
        assert_eq!(g.display(&t).to_string(), "-2*x*y + 1/3");
    }

    #[test]
    fn parser_handles_wide_coefficients_and_rejects_wide_exponents() {
        let t = ring2();
        // wider than any machine integer
        let f = p("123456789012345678901234567890*x", &t);
        assert_eq!(
            f.display(&t).to_string(),
            "123456789012345678901234567890*x"
        );
        assert!(Polynomial::parse("x^4294967296", &t).is_err());
        assert!(Polynomial::parse("x^999999999999999999999", &t).is_err());
        assert!(Polynomial::parse("x^0 - 1", &t).unwrap().is_zero());
    }

    #[test]
    fn det_2x2_generic() {
        let t = VariableTable::jet(2, 2, 0);
        let v = |i: u32, j: u32| Polynomial::var(t.index_of(0, i, j).unwrap(), t.len());
        let d =
            determinant(&[alloc::vec![v(1, 1), v(1, 2)], alloc::vec![v(2, 1), v(2, 2)]]).unwrap();
        assert_eq!(d, p("x[1,1]*x[2,2] - x[1,2]*x[2,1]", &t));
        // the antidiagonal monomial leads under grevlex
        assert_eq!(d.display(&t).to_string(), "-x[1,2]*x[2,1] + x[1,1]*x[2,2]");
    }

    #[test]
    fn det_equal_columns_vanishes() {
        let t = ring2();
        let x = p("x", &t);
        let y = p("y", &t);
        let d = determinant(&[
            alloc::vec![x.clone(), x.clone()],
            alloc::vec![y.clone(), y.clone()],
        ])
        .unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn det_rejects_non_square() {
        let t = ring2();
        let x = p("x", &t);
        assert!(determinant(&[alloc::vec![x.clone(), x.clone()]]).is_err());
        assert!(determinant(&[]).is_err());
    }

    #[test]
    fn normalize_sign_makes_primitive_positive() {
        let t = ring2();
        let f = p("-2/3*x^2 + 4*y", &t);
        let g = f.normalize_sign();
        assert_eq!(g, p("x^2 - 6*y", &t));
        assert!(Polynomial::zero().normalize_sign().is_zero());
    }

    #[test]
    fn leading_data_on_canonical_form() {
        let t = ring2();
        let f = p("y^2 + x^2 + x*y", &t);
        // grevlex with x > y: x^2 > x*y > y^2
        assert_eq!(
            f.leading_monomial(),
            Some(&Monomial::from_exps(alloc::vec![2, 0]))
        );
        let descending = f.terms().windows(2).all(|w| w[0].monomial > w[1].monomial);
        assert!(descending);
    }
}
