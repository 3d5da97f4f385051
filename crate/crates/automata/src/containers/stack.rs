use super::{Effect, HasNeutral};
use crate::algebra::Elem;
use crate::Result;
use std::sync::Arc;

type Run<E, G, A> = Arc<dyn Fn(&[G]) -> Result<<E as Effect>::C<(A, Vec<G>)>> + Send + Sync>;

/// A computation reading and rewriting a stack, with effects in `E`.
///
/// Stacks are stored top first. This is a lazy function of the stack, so it
/// is kept apart from [`Effect`], whose containers are plain data.
pub struct StackContext<E: Effect, G: Elem, A: Elem> {
    run: Run<E, G, A>,
}

impl<E: Effect, G: Elem, A: Elem> Clone for StackContext<E, G, A> {
    fn clone(&self) -> Self {
        StackContext { run: self.run.clone() }
    }
}

impl<E: Effect + HasNeutral, G: Elem, A: Elem> StackContext<E, G, A> {
    pub fn new(f: impl Fn(&[G]) -> Result<E::C<(A, Vec<G>)>> + Send + Sync + 'static) -> Self {
        StackContext { run: Arc::new(f) }
    }

    pub fn unit(a: A) -> Self {
        Self::new(move |s| Ok(E::unit((a.clone(), s.to_vec()))))
    }

    /// Ignores the incoming stack and starts from the given one.
    pub fn start(c: E::C<A>, stack: Vec<G>) -> Self
    where
        E::C<A>: Send + Sync,
    {
        Self::new(move |_| Ok(E::map(&c, &mut |a| (a.clone(), stack.clone()))))
    }

    pub fn run(&self, stack: &[G]) -> Result<E::C<(A, Vec<G>)>> {
        (self.run)(stack)
    }

    pub fn bind<B: Elem>(
        &self,
        f: impl Fn(&A) -> StackContext<E, G, B> + Send + Sync + 'static,
    ) -> StackContext<E, G, B> {
        let me = self.clone();
        StackContext::new(move |s| {
            let first = me.run(s)?;
            E::bind(&first, &mut |(a, s2)| f(a).run(s2))
        })
    }

    /// Consults the top of the stack and replaces it with a word.
    /// The empty stack blocks.
    pub fn rewrite_top(
        trans: impl Fn(&G) -> Result<E::C<(Vec<G>, A)>> + Send + Sync + 'static,
    ) -> Self {
        Self::new(move |s| match s.split_first() {
            None => Ok(E::neutral()),
            Some((top, rest)) => {
                let moves = trans(top)?;
                Ok(E::map(&moves, &mut |(word, a)| {
                    let mut st = word.clone();
                    st.extend_from_slice(rest);
                    (a.clone(), st)
                }))
            }
        })
    }
}
