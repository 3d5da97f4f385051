use std::fmt;

/// Associative combination with a two-sided neutral element.
pub trait Monoid: Clone {
    fn neutral() -> Self;
    fn combine(&self, other: &Self) -> Self;
}

/// Additive integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sum(pub i64);

/// Multiplicative integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Product(pub i64);

impl Monoid for Sum {
    fn neutral() -> Self {
        Sum(0)
    }
    fn combine(&self, other: &Self) -> Self {
        Sum(self.0.wrapping_add(other.0))
    }
}

impl Monoid for Product {
    fn neutral() -> Self {
        Product(1)
    }
    fn combine(&self, other: &Self) -> Self {
        Product(self.0.wrapping_mul(other.0))
    }
}

impl fmt::Display for Sum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Monoid for String {
    fn neutral() -> Self {
        String::new()
    }
    fn combine(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.push_str(other);
        s
    }
}

impl<T: Clone> Monoid for Vec<T> {
    fn neutral() -> Self {
        Vec::new()
    }
    fn combine(&self, other: &Self) -> Self {
        let mut v = self.clone();
        v.extend(other.iter().cloned());
        v
    }
}

impl Monoid for () {
    fn neutral() -> Self {}
    fn combine(&self, _: &Self) -> Self {}
}

impl<A: Monoid, B: Monoid> Monoid for (A, B) {
    fn neutral() -> Self {
        (A::neutral(), B::neutral())
    }
    fn combine(&self, other: &Self) -> Self {
        (self.0.combine(&other.0), self.1.combine(&other.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_monoid() {
        let x = (Sum(2), "ab".to_string());
        let y = (Sum(3), "c".to_string());
        assert_eq!(x.combine(&y), (Sum(5), "abc".to_string()));
        assert_eq!(x.combine(&Monoid::neutral()), x);
        assert_eq!(Product(4).combine(&Product(3)), Product(12));
    }
}
