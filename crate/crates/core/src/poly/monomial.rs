use std::cmp::Ordering;
use std::fmt;

/// Exponent vector with cached total degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { degree, exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { degree: 0, exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { degree: 1, exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// The variable index when this monomial is a single variable.
    pub fn as_variable(&self) -> Option<usize> {
        (self.degree == 1).then(|| self.exps.iter().position(|&e| e == 1).unwrap())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            degree: self.degree + other.degree,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            degree: other.degree - self.degree,
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Drops variable `i`, which must not occur.
    pub(crate) fn remove_var(&self, i: usize) -> Monomial {
        debug_assert_eq!(self.exps[i], 0);
        let mut exps = self.exps.clone();
        exps.remove(i);
        Monomial { degree: self.degree, exps }
    }

    /// Inserts a new variable with exponent `e` at position `i`.
    pub(crate) fn insert_var(&self, i: usize, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps.insert(i, e);
        Monomial { degree: self.degree + e, exps }
    }

    /// Writes the monomial with the given variable names, `1` for the unit.
    pub fn fmt_with(&self, names: &[String], f: &mut impl fmt::Write) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Monomial orders used by the Gröbner engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with `x_1 > x_2 > ... > x_n`.
    #[default]
    DegRevLex,
    /// Compares the exponent of `var` first, then falls back to degrevlex.
    /// Any polynomial whose leading monomial avoids `var` is free of `var`.
    Elimination { var: usize },
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Elimination { var } => a.exps[var].cmp(&b.exps[var]).then_with(|| degrevlex(a, b)),
        }
    }

    /// Like [`compare`](Self::compare) but checks the ring context.
    pub fn try_compare(self, a: &Monomial, b: &Monomial) -> crate::Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(crate::Error::RingMismatch { expected: a.nvars(), found: b.nvars() });
        }
        if let MonomialOrder::Elimination { var } = self {
            if var >= a.nvars() {
                return Err(crate::Error::RingMismatch { expected: var + 1, found: a.nvars() });
            }
        }
        Ok(self.compare(a, b))
    }
}

fn degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree.cmp(&b.degree).then_with(|| {
        for (x, y) in a.exps.iter().zip(&b.exps).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                other => return other.reverse(),
            }
        }
        Ordering::Equal
    })
}
