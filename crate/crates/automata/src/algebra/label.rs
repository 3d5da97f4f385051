use super::{Either, Positioned, RankedSymbol, RankedTree};

/// Canonical text of a state or symbol, used in listings and DOT output.
pub trait Label {
    fn label(&self) -> String;
}

macro_rules! display_label {
    ($($t:ty),*) => {
        $(impl Label for $t {
            fn label(&self) -> String {
                self.to_string()
            }
        })*
    };
}

display_label!(bool, char, u8, u16, u32, u64, usize, i8, i16, i32, i64, String, RankedSymbol, RankedTree);

impl Label for &str {
    fn label(&self) -> String {
        self.to_string()
    }
}

impl Label for () {
    fn label(&self) -> String {
        "()".into()
    }
}

impl<T: Label> Label for Option<T> {
    fn label(&self) -> String {
        match self {
            Some(t) => t.label(),
            None => "⊥".into(),
        }
    }
}

impl<T: Label> Label for Box<T> {
    fn label(&self) -> String {
        (**self).label()
    }
}

impl<A: Label, B: Label> Label for (A, B) {
    fn label(&self) -> String {
        format!("({},{})", self.0.label(), self.1.label())
    }
}

impl<A: Label, B: Label, C: Label> Label for (A, B, C) {
    fn label(&self) -> String {
        format!("({},{},{})", self.0.label(), self.1.label(), self.2.label())
    }
}

impl<T: Label> Label for Vec<T> {
    fn label(&self) -> String {
        let parts: Vec<String> = self.iter().map(|t| t.label()).collect();
        format!("({})", parts.join(","))
    }
}

impl<L: Label, R: Label> Label for Either<L, R> {
    fn label(&self) -> String {
        match self {
            Either::Left(l) => format!("L({})", l.label()),
            Either::Right(r) => format!("R({})", r.label()),
        }
    }
}

impl<S: Label> Label for Positioned<S> {
    fn label(&self) -> String {
        format!("{}{}", self.base.label(), self.index)
    }
}
