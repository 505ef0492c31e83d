//! Zero-cost optional instrumentation for the engines. The unit impl
//! monomorphizes to nothing, so the uncounted entry points pay nothing.

pub(crate) trait Count {
    fn add(&mut self, n: u64);
}

impl Count for () {
    #[inline(always)]
    fn add(&mut self, _: u64) {}
}

impl Count for u64 {
    #[inline(always)]
    fn add(&mut self, n: u64) {
        *self += n;
    }
}
