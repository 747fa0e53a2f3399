/// Cooperative effort limit polled by long computations.
pub trait Budget {
    fn exhausted(&self) -> bool;
}

/// Never runs out.
#[derive(Debug, Clone, Copy, Default)]
pub struct Unlimited;

impl Budget for Unlimited {
    fn exhausted(&self) -> bool {
        false
    }
}

impl<B: Budget + ?Sized> Budget for &B {
    fn exhausted(&self) -> bool {
        (**self).exhausted()
    }
}
