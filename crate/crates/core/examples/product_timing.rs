use gwa_core::gwa::sample;
use gwa_core::{AlgebraCtx, ZPoly};
use rand::SeedableRng;
fn main() {
    let ctx = AlgebraCtx::new(ZPoly::from_ints(&[-1, 0, 1])).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    let a = sample::a_elem_dense(&ctx, &mut rng, 200, 10);
    let b = sample::a_elem_dense(&ctx, &mut rng, 200, 10);
    let t = std::time::Instant::now();
    let c = &a * &b;
    println!("{} terms in {:?}", c.len(), t.elapsed());
}
