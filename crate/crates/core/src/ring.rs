//! Finite unitary rings given by Cayley tables.

use thiserror::Error;

use crate::canonical_name;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("a ring needs at least one element")]
    Empty,
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("unknown element `{0}`")]
    UnknownName(String),
    #[error("{table} table must be {n}x{n}")]
    TableShape { table: &'static str, n: usize },
    #[error("{axiom} fails at ({})", .witness.join(", "))]
    Axiom {
        axiom: &'static str,
        witness: Vec<String>,
    },
    #[error("size {0} out of range for {1}")]
    SizeOutOfRange(usize, &'static str),
}

/// A finite ring with identity. Commutativity is not assumed.
///
/// Construction verifies every ring axiom by exhaustion, so a value of this
/// type is always a valid unitary ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitaryRing {
    name: String,
    names: Vec<String>,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
    neg: Vec<usize>,
    is_commutative: bool,
    is_field: bool,
    is_boolean_ring: bool,
}

impl UnitaryRing {
    /// Validates flat row-major `n x n` tables and computes the flags.
    pub fn from_tables(
        name: impl Into<String>,
        names: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Result<Self, RingError> {
        let n = names.len();
        if n == 0 {
            return Err(RingError::Empty);
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(RingError::DuplicateName(a.clone()));
            }
        }
        if add.len() != n * n {
            return Err(RingError::TableShape { table: "add", n });
        }
        if mul.len() != n * n {
            return Err(RingError::TableShape { table: "mul", n });
        }
        if let Some(&bad) = add.iter().chain(&mul).chain([&zero, &one]).find(|&&v| v >= n) {
            return Err(RingError::UnknownName(bad.to_string()));
        }

        let fail = |axiom: &'static str, els: &[usize]| RingError::Axiom {
            axiom,
            witness: els.iter().map(|&i| names[i].clone()).collect(),
        };
        let a = |x: usize, y: usize| add[x * n + y];
        let m = |x: usize, y: usize| mul[x * n + y];

        for x in 0..n {
            if a(zero, x) != x || a(x, zero) != x {
                return Err(fail("zero is not an additive identity", &[x]));
            }
            if m(one, x) != x || m(x, one) != x {
                return Err(fail("one is not an identity", &[x]));
            }
            for y in 0..n {
                if a(x, y) != a(y, x) {
                    return Err(fail("addition is not commutative", &[x, y]));
                }
                for z in 0..n {
                    if a(a(x, y), z) != a(x, a(y, z)) {
                        return Err(fail("addition is not associative", &[x, y, z]));
                    }
                    if m(m(x, y), z) != m(x, m(y, z)) {
                        return Err(fail("multiplication is not associative", &[x, y, z]));
                    }
                    if m(x, a(y, z)) != a(m(x, y), m(x, z)) {
                        return Err(fail("left distributivity", &[x, y, z]));
                    }
                    if m(a(x, y), z) != a(m(x, z), m(y, z)) {
                        return Err(fail("right distributivity", &[x, y, z]));
                    }
                }
            }
        }
        let mut neg = Vec::with_capacity(n);
        for x in 0..n {
            match (0..n).find(|&y| a(x, y) == zero) {
                Some(y) => neg.push(y),
                None => return Err(fail("no additive inverse", &[x])),
            }
        }

        let is_commutative = (0..n).all(|x| (0..n).all(|y| m(x, y) == m(y, x)));
        let is_boolean_ring = (0..n).all(|x| m(x, x) == x && a(x, x) == zero);
        let is_field = zero != one
            && is_commutative
            && (0..n).filter(|&x| x != zero).all(|x| (0..n).any(|y| m(x, y) == one));

        Ok(UnitaryRing {
            name: name.into(),
            names,
            add,
            mul,
            zero,
            one,
            neg,
            is_commutative,
            is_field,
            is_boolean_ring,
        })
    }

    /// Builds from named rows: `add_rows[i]` lists `names[i] + names[j]` for
    /// every `j`, likewise for `mul_rows`.
    pub fn build<S: AsRef<str>>(
        name: impl Into<String>,
        names: &[S],
        add_rows: &[Vec<S>],
        mul_rows: &[Vec<S>],
        zero: &str,
        one: &str,
    ) -> Result<Self, RingError> {
        let names: Vec<String> = names.iter().map(|s| canonical_name(s.as_ref())).collect();
        let n = names.len();
        let lookup = |s: &str| {
            let s = canonical_name(s);
            names
                .iter()
                .position(|m| *m == s)
                .ok_or(RingError::UnknownName(s))
        };
        let flatten = |rows: &[Vec<S>], table: &'static str| -> Result<Vec<usize>, RingError> {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(RingError::TableShape { table, n });
            }
            rows.iter().flatten().map(|s| lookup(s.as_ref())).collect()
        };
        let add = flatten(add_rows, "add")?;
        let mul = flatten(mul_rows, "mul")?;
        let zero = lookup(zero)?;
        let one = lookup(one)?;
        Self::from_tables(name, names, add, mul, zero, one)
    }

    /// Integers modulo `n`, elements named `0 .. n-1`.
    pub fn zmod(n: usize) -> Result<Self, RingError> {
        if n == 0 || n > 256 {
            return Err(RingError::SizeOutOfRange(n, "zmod"));
        }
        let names = (0..n).map(|i| i.to_string()).collect();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                add.push((x + y) % n);
                mul.push((x * y) % n);
            }
        }
        Self::from_tables(format!("Z{n}"), names, add, mul, 0, 1 % n)
    }

    /// The 16-element ring of 2x2 matrices over Z_2. An element is named by
    /// its entries concatenated row-major, so the identity is `1001`.
    pub fn matring2() -> Self {
        let entries = |m: usize| [(m >> 3) & 1, (m >> 2) & 1, (m >> 1) & 1, m & 1];
        let pack = |e: [usize; 4]| (e[0] << 3) | (e[1] << 2) | (e[2] << 1) | e[3];
        let names = (0..16)
            .map(|m| entries(m).iter().map(|b| b.to_string()).collect())
            .collect();
        let mut add = Vec::with_capacity(256);
        let mut mul = Vec::with_capacity(256);
        for x in 0..16 {
            for y in 0..16 {
                let (p, q) = (entries(x), entries(y));
                add.push(pack([p[0] ^ q[0], p[1] ^ q[1], p[2] ^ q[2], p[3] ^ q[3]]));
                mul.push(pack([
                    (p[0] * q[0] + p[1] * q[2]) % 2,
                    (p[0] * q[1] + p[1] * q[3]) % 2,
                    (p[2] * q[0] + p[3] * q[2]) % 2,
                    (p[2] * q[1] + p[3] * q[3]) % 2,
                ]));
            }
        }
        Self::from_tables("matring2", names, add, mul, 0, 0b1001).expect("matrix ring axioms")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        let name = canonical_name(name);
        self.names.iter().position(|n| *n == name)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.len() + y]
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.len() + y]
    }

    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    /// Multiplicative inverse by exhaustive search (two-sided).
    pub fn inverse(&self, x: usize) -> Option<usize> {
        (0..self.len()).find(|&y| self.mul(x, y) == self.one && self.mul(y, x) == self.one)
    }

    pub fn add_row(&self, x: usize) -> &[usize] {
        let n = self.len();
        &self.add[x * n..(x + 1) * n]
    }

    pub fn mul_row(&self, x: usize) -> &[usize] {
        let n = self.len();
        &self.mul[x * n..(x + 1) * n]
    }

    pub fn is_commutative(&self) -> bool {
        self.is_commutative
    }

    pub fn is_field(&self) -> bool {
        self.is_field
    }

    pub fn is_boolean_ring(&self) -> bool {
        self.is_boolean_ring
    }

    /// `0 = 1`, which forces the carrier to a single element.
    pub fn is_trivial(&self) -> bool {
        self.zero == self.one
    }
}
